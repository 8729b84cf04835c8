//! CSS code pairs: two classical codes whose duals are orthogonal.
//!
//! A pair `(C_X, C_Z)` is valid when `<c, c'> = 0` for every `c` in
//! `C_X^perp` and `c'` in `C_Z^perp`, equivalently `C_Z^perp` is contained
//! in `C_X` and `C_X^perp` in `C_Z`. The distances `d_X` and `d_Z` are the
//! minimum weights of `C_X \ C_Z^perp` and `C_Z \ C_X^perp`.

use std::sync::OnceLock;

use crate::code::{LinearCode, MinWeight, WeightSearch};
use crate::error::{Error, Result};
use crate::format::parse_css;
use crate::ratio::Ratio;
use crate::Budget;

#[derive(Debug)]
pub struct CssCode {
    cx: LinearCode,
    cz: LinearCode,
    cx_dual: LinearCode,
    cz_dual: LinearCode,
    dx_cache: OnceLock<usize>,
    dz_cache: OnceLock<usize>,
}

impl Clone for CssCode {
    fn clone(&self) -> Self {
        let cloned = CssCode {
            cx: self.cx.clone(),
            cz: self.cz.clone(),
            cx_dual: self.cx_dual.clone(),
            cz_dual: self.cz_dual.clone(),
            dx_cache: OnceLock::new(),
            dz_cache: OnceLock::new(),
        };
        if let Some(&d) = self.dx_cache.get() {
            let _ = cloned.dx_cache.set(d);
        }
        if let Some(&d) = self.dz_cache.get() {
            let _ = cloned.dz_cache.set(d);
        }
        cloned
    }
}

impl CssCode {
    /// Validates orthogonality of the dual codes and builds the pair. On
    /// violation the error names a witness pair with nonzero inner product.
    pub fn new(cx: LinearCode, cz: LinearCode) -> Result<Self> {
        if cx.block_length() != cz.block_length() {
            return Err(Error::InvalidArgument(format!(
                "block length mismatch: C_X has n = {}, C_Z has n = {}",
                cx.block_length(),
                cz.block_length()
            )));
        }
        if cx.field() != cz.field() {
            return Err(Error::InvalidArgument(
                "C_X and C_Z must live over the same field".into(),
            ));
        }
        let cx_dual = cx.dual();
        let cz_dual = cz.dual();
        let field = cx.field();
        for i in 0..cx_dual.dimension() {
            let c = cx_dual.generator().column(i);
            for j in 0..cz_dual.dimension() {
                let c_prime = cz_dual.generator().column(j);
                if !field.inner_product(&c, &c_prime).is_zero() {
                    return Err(Error::NotOrthogonal {
                        c: c.iter().map(|e| e.value()).collect(),
                        c_prime: c_prime.iter().map(|e| e.value()).collect(),
                        c_index: i,
                        c_prime_index: j,
                    });
                }
            }
        }
        let css = CssCode {
            cx,
            cz,
            cx_dual,
            cz_dual,
            dx_cache: OnceLock::new(),
            dz_cache: OnceLock::new(),
        };
        // orthogonality is equivalent to these containments, and the two
        // dimension differences always coincide
        debug_assert!((0..css.cz_dual.dimension())
            .all(|j| css.cx.contains(&css.cz_dual.generator().column(j))));
        debug_assert!((0..css.cx_dual.dimension())
            .all(|j| css.cz.contains(&css.cx_dual.generator().column(j))));
        debug_assert_eq!(
            css.cx.dimension() - css.cz_dual.dimension(),
            css.cz.dimension() - css.cx_dual.dimension()
        );
        Ok(css)
    }

    pub fn cx(&self) -> &LinearCode {
        &self.cx
    }

    pub fn cz(&self) -> &LinearCode {
        &self.cz
    }

    pub fn cx_dual(&self) -> &LinearCode {
        &self.cx_dual
    }

    pub fn cz_dual(&self) -> &LinearCode {
        &self.cz_dual
    }

    pub fn block_length(&self) -> usize {
        self.cx.block_length()
    }

    /// The CSS dimension `dim(C_X) - dim(C_Z^perp)`.
    pub fn dimension(&self) -> usize {
        self.cx.dimension() - self.cz_dual.dimension()
    }

    /// `(dim(C_X) - dim(C_Z^perp)) / n`, exactly; the symmetric formula
    /// gives the same value.
    pub fn rate(&self) -> Ratio {
        debug_assert_eq!(
            self.dimension(),
            self.cz.dimension() - self.cx_dual.dimension()
        );
        Ratio::new(self.dimension() as i64, self.block_length() as u64)
    }

    fn require_non_degenerate(&self) -> Result<()> {
        if self.dimension() == 0 {
            return Err(Error::Degenerate(
                "C_X = C_Z^perp: the pair has CSS dimension 0, so d_X and d_Z are undefined".into(),
            ));
        }
        Ok(())
    }

    /// Smallest weight of a vector of `C_X` not in `C_Z^perp`. Exact values
    /// are cached; certified bounds are returned uncached.
    pub fn distance_x(&self, budget: Budget) -> Result<MinWeight> {
        if let Some(&d) = self.dx_cache.get() {
            return Ok(MinWeight::Exact(d));
        }
        let w = self.distance_x_search(budget)?.weight;
        if let MinWeight::Exact(d) = w {
            let _ = self.dx_cache.set(d);
        }
        Ok(w)
    }

    /// Smallest weight of a vector of `C_Z` not in `C_X^perp`.
    pub fn distance_z(&self, budget: Budget) -> Result<MinWeight> {
        if let Some(&d) = self.dz_cache.get() {
            return Ok(MinWeight::Exact(d));
        }
        let w = self.distance_z_search(budget)?.weight;
        if let MinWeight::Exact(d) = w {
            let _ = self.dz_cache.set(d);
        }
        Ok(w)
    }

    /// `d_X` search with a witness vector when exact.
    pub fn distance_x_search(&self, budget: Budget) -> Result<WeightSearch> {
        self.require_non_degenerate()?;
        self.cx.min_weight_search(Some(&self.cz_dual), budget)
    }

    /// `d_Z` search with a witness vector when exact.
    pub fn distance_z_search(&self, budget: Budget) -> Result<WeightSearch> {
        self.require_non_degenerate()?;
        self.cz.min_weight_search(Some(&self.cx_dual), budget)
    }

    /// `d = min(d_X, d_Z)`.
    pub fn distance(&self, budget: Budget) -> Result<MinWeight> {
        let dx = self.distance_x(budget)?;
        let dz = self.distance_z(budget)?;
        Ok(match (dx, dz) {
            (MinWeight::Exact(a), MinWeight::Exact(b)) => MinWeight::Exact(a.min(b)),
            (MinWeight::Exact(a), MinWeight::LowerBound(b))
            | (MinWeight::LowerBound(b), MinWeight::Exact(a)) => {
                if a <= b {
                    MinWeight::Exact(a)
                } else {
                    MinWeight::LowerBound(b)
                }
            }
            (MinWeight::LowerBound(a), MinWeight::LowerBound(b)) => MinWeight::LowerBound(a.min(b)),
        })
    }

    /// The pair with the roles of `C_X` and `C_Z` exchanged.
    pub fn swapped(&self) -> CssCode {
        CssCode::new(self.cz.clone(), self.cx.clone()).expect("orthogonality is symmetric")
    }

    /// Subspace equality of both sides.
    pub fn same_pair_as(&self, other: &CssCode) -> bool {
        self.cx.same_code_as(&other.cx) && self.cz.same_code_as(&other.cz)
    }
}

/// A named fixture CSS code, parsed from its committed file text.
#[derive(Debug, Clone)]
pub struct GalleryEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub file_text: &'static str,
    pub css: CssCode,
}

/// The committed fixture pairs, each constructed from parity-check files.
pub fn gallery() -> Vec<GalleryEntry> {
    let sources: [(&str, &str, &str); 4] = [
        (
            "steane",
            "Hamming [7,4] paired with itself",
            include_str!("../fixtures/steane.css"),
        ),
        (
            "shamir5",
            "GF(5) Reed-Solomon [4,2] with its degree-1 subcode",
            include_str!("../fixtures/shamir5.css"),
        ),
        (
            "worked3",
            "three-bit pair with d_X = 1, d_Z = 2",
            include_str!("../fixtures/worked3.css"),
        ),
        (
            "shor9",
            "nine-bit pair from the 3x3 repetition grid",
            include_str!("../fixtures/shor9.css"),
        ),
    ];
    sources
        .into_iter()
        .map(|(name, description, file_text)| GalleryEntry {
            name,
            description,
            file_text,
            css: parse_css(file_text).expect("gallery fixture parses and validates"),
        })
        .collect()
}

/// Looks up a gallery entry by name.
pub fn gallery_entry(name: &str) -> Option<GalleryEntry> {
    gallery().into_iter().find(|e| e.name == name)
}
