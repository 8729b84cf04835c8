//! The constructive equivalence between randomized encoders and CSS pairs.
//!
//! Forward: an encoder `(G, k')` over a code `C` yields the pair with
//! `C_X = C` and `C_Z` the subspace orthogonal to the span of the last
//! `k - k'` columns of `G`. The pair is always valid, `d_X > 2e` holds
//! exactly when the encoder decodes `e` errors, and `d_Z > t` exactly when
//! it is `t`-ZK.
//!
//! Backward: a non-degenerate pair `(C_X, C_Z)` yields an encoder over
//! `C_X` with `k' = dim(C_X) - dim(C_Z^perp)`, built from any generator
//! whose last `k - k'` columns are a basis of `C_Z^perp`; here that is the
//! deterministic completion of [`crate::matrix::complete_basis`], so outputs
//! are reproducible. The same two equivalences hold.
//!
//! Round trips preserve the subspaces, the distances, and both thresholds,
//! though not necessarily the generator matrix itself.

use crate::code::MinWeight;
use crate::css::CssCode;
use crate::error::{Error, Result};
use crate::matrix::complete_basis;
use crate::zkenc::RandomizedEncoder;
use crate::Budget;

/// The CSS pair derived from an encoder, with provenance.
#[derive(Debug, Clone)]
pub struct ZkToCssResult {
    pub css: CssCode,
    /// Column indices of `G` whose span is `C_Z^perp` (the randomness block).
    pub randomness_columns: std::ops::Range<usize>,
}

/// The encoder derived from a CSS pair, with provenance.
#[derive(Debug, Clone)]
pub struct CssToZkResult {
    pub encoder: RandomizedEncoder,
    /// Column indices of the completed generator that form the `C_Z^perp`
    /// basis (always the trailing block).
    pub basis_columns: std::ops::Range<usize>,
}

/// Builds the CSS pair of an encoder: `C_X` is the encoder's code, `C_Z` the
/// dual of its randomness span.
///
/// Validity is guaranteed, so a validation failure here is an internal bug
/// and panics.
pub fn zk_to_css(encoder: &RandomizedEncoder) -> ZkToCssResult {
    let cx = encoder.code().clone();
    let cz = encoder.randomness_span().dual();
    let css = CssCode::new(cx, cz)
        .expect("the randomness span lies inside the code, so the pair is orthogonal");
    ZkToCssResult {
        css,
        randomness_columns: encoder.k_prime()..encoder.dimension(),
    }
}

/// Builds an encoder from a CSS pair: `k = dim(C_X)`,
/// `k' = k - dim(C_Z^perp)`, and the generator is the canonical completion
/// of a `C_Z^perp` basis inside `C_X`.
pub fn css_to_zk(css: &CssCode) -> Result<CssToZkResult> {
    let k = css.cx().dimension();
    let k_prime = css.dimension();
    if k_prime == 0 {
        return Err(Error::Degenerate(
            "CSS dimension is 0 (dim C_X = dim C_Z^perp); the transform needs k' >= 1".into(),
        ));
    }
    if k_prime == k {
        return Err(Error::Degenerate(
            "C_Z^perp is trivial, leaving no randomness columns; the transform needs k' < k".into(),
        ));
    }
    // canonical basis of C_Z^perp as the trailing columns
    let basis = css
        .cz_dual()
        .generator()
        .transpose()
        .row_space_basis()
        .transpose();
    let generator = complete_basis(&basis, css.cx())?;
    let encoder = RandomizedEncoder::new(generator, k_prime)?;
    Ok(CssToZkResult {
        encoder,
        basis_columns: k_prime..k,
    })
}

/// One checked equality in a round-trip report.
#[derive(Debug, Clone)]
pub struct CheckRecord {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

/// The list of equalities checked by a round trip.
#[derive(Debug, Clone)]
pub struct RoundtripReport {
    pub checks: Vec<CheckRecord>,
}

impl RoundtripReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool, details: String) {
        self.checks.push(CheckRecord {
            name,
            passed,
            details,
        });
    }
}

/// Runs encoder -> CSS -> encoder -> CSS and checks what each leg preserves:
/// the code and both thresholds across the encoder leg, the subspaces and
/// exact distances across the CSS leg.
pub fn roundtrip_check(encoder: &RandomizedEncoder, budget: Budget) -> Result<RoundtripReport> {
    let forward = zk_to_css(encoder);
    let back = css_to_zk(&forward.css)?;
    let mut report = RoundtripReport { checks: Vec::new() };

    let code_eq = encoder.code().same_code_as(back.encoder.code());
    report.push(
        "code preserved as a subspace",
        code_eq,
        format!(
            "n = {}, k = {}",
            encoder.block_length(),
            encoder.dimension()
        ),
    );
    let kp_eq = encoder.k_prime() == back.encoder.k_prime();
    report.push(
        "message length preserved",
        kp_eq,
        format!("k' = {} vs {}", encoder.k_prime(), back.encoder.k_prime()),
    );
    let t0 = encoder.zk_threshold(budget)?;
    let t1 = back.encoder.zk_threshold(budget)?;
    report.push(
        "zero-knowledge threshold preserved",
        exact_eq(t0, t1),
        format!("max t = {t0:?} vs {t1:?}"),
    );
    let e0 = encoder.decoding_radius(budget)?;
    let e1 = back.encoder.decoding_radius(budget)?;
    report.push(
        "decoding radius preserved",
        exact_eq(e0, e1),
        format!("max e = {e0:?} vs {e1:?}"),
    );

    append_css_leg(
        &mut report,
        &forward.css,
        &zk_to_css(&back.encoder).css,
        budget,
    )?;
    Ok(report)
}

/// Runs CSS -> encoder -> CSS (and one more encoder leg) and checks the
/// preserved quantities.
pub fn roundtrip_check_css(css: &CssCode, budget: Budget) -> Result<RoundtripReport> {
    let to_zk = css_to_zk(css)?;
    let forward = zk_to_css(&to_zk.encoder);
    let mut report = RoundtripReport { checks: Vec::new() };
    append_css_leg(&mut report, css, &forward.css, budget)?;

    let again = css_to_zk(&forward.css)?;
    let t0 = to_zk.encoder.zk_threshold(budget)?;
    let t1 = again.encoder.zk_threshold(budget)?;
    report.push(
        "zero-knowledge threshold preserved",
        exact_eq(t0, t1),
        format!("max t = {t0:?} vs {t1:?}"),
    );
    let e0 = to_zk.encoder.decoding_radius(budget)?;
    let e1 = again.encoder.decoding_radius(budget)?;
    report.push(
        "decoding radius preserved",
        exact_eq(e0, e1),
        format!("max e = {e0:?} vs {e1:?}"),
    );
    Ok(report)
}

fn append_css_leg(
    report: &mut RoundtripReport,
    before: &CssCode,
    after: &CssCode,
    budget: Budget,
) -> Result<()> {
    report.push(
        "C_X preserved as a subspace",
        before.cx().same_code_as(after.cx()),
        format!("dim = {}", before.cx().dimension()),
    );
    report.push(
        "C_Z preserved as a subspace",
        before.cz().same_code_as(after.cz()),
        format!("dim = {}", before.cz().dimension()),
    );
    let dx0 = before.distance_x(budget)?;
    let dx1 = after.distance_x(budget)?;
    report.push(
        "d_X preserved",
        exact_eq(dx0, dx1),
        format!("{dx0:?} vs {dx1:?}"),
    );
    let dz0 = before.distance_z(budget)?;
    let dz1 = after.distance_z(budget)?;
    report.push(
        "d_Z preserved",
        exact_eq(dz0, dz1),
        format!("{dz0:?} vs {dz1:?}"),
    );
    Ok(())
}

fn exact_eq(a: MinWeight, b: MinWeight) -> bool {
    matches!((a, b), (MinWeight::Exact(x), MinWeight::Exact(y)) if x == y)
}
