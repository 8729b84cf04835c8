//! Classical linear codes: construction, duality, distances, decoding.
//!
//! A code is a subspace of `F^n` held as a full-column-rank generator
//! (columns span the code) together with a full-row-rank parity check
//! (kernel is the code). Distance searches are exact whenever they finish
//! within budget; otherwise they return a certified lower bound, never a
//! silent approximation.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::{for_each_vector, FieldElement, PrimeField};
use crate::matrix::Matrix;
use crate::ratio::Ratio;
use crate::Budget;

/// A linear code `C` of block length `n` and dimension `k` over GF(p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    n: usize,
    k: usize,
    generator: Matrix,
    parity_check: Matrix,
    field: PrimeField,
    reduced_input: bool,
}

/// Outcome of a minimum-weight search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinWeight {
    /// The exact minimum weight.
    Exact(usize),
    /// The search budget ran out after certifying that every candidate of
    /// smaller weight was ruled out: the minimum weight is at least this.
    LowerBound(usize),
}

impl MinWeight {
    pub fn exact(self) -> Option<usize> {
        match self {
            MinWeight::Exact(w) => Some(w),
            MinWeight::LowerBound(_) => None,
        }
    }

    /// The certified lower bound (trivially the value itself when exact).
    pub fn bound(self) -> usize {
        match self {
            MinWeight::Exact(w) | MinWeight::LowerBound(w) => w,
        }
    }
}

/// A minimum-weight result together with a witness vector when the search
/// was exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSearch {
    pub weight: MinWeight,
    pub witness: Option<Vec<FieldElement>>,
}

impl LinearCode {
    /// The code spanned by the columns of `generator`. Dependent columns are
    /// dropped (keeping the first independent subset) and flagged.
    pub fn from_generator(generator: Matrix) -> Result<Self> {
        let n = generator.rows();
        if n == 0 {
            return Err(Error::Degenerate("block length is zero".into()));
        }
        let reduced = generator.image_basis();
        let reduced_input = reduced.cols() != generator.cols();
        let generator = if reduced_input { reduced } else { generator };
        let parity_check = generator.transpose().kernel_basis().transpose();
        Ok(Self::from_parts(generator, parity_check, reduced_input))
    }

    /// The kernel of `parity_check`. Dependent check rows are dropped
    /// (keeping the first independent subset) and flagged.
    pub fn from_parity_check(parity_check: Matrix) -> Result<Self> {
        let n = parity_check.cols();
        if n == 0 {
            return Err(Error::Degenerate("block length is zero".into()));
        }
        let keep = parity_check.transpose().image_basis().transpose();
        let reduced_input = keep.rows() != parity_check.rows();
        let parity_check = if reduced_input { keep } else { parity_check };
        let generator = parity_check.kernel_basis();
        Ok(Self::from_parts(generator, parity_check, reduced_input))
    }

    fn from_parts(generator: Matrix, parity_check: Matrix, reduced_input: bool) -> Self {
        let n = generator.rows();
        let k = generator.cols();
        debug_assert_eq!(parity_check.rows(), n - k);
        debug_assert_eq!(parity_check.cols(), n);
        debug_assert!(parity_check.mul(&generator).is_zero());
        LinearCode {
            n,
            k,
            field: generator.field(),
            generator,
            parity_check,
            reduced_input,
        }
    }

    pub fn block_length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn parity_check(&self) -> &Matrix {
        &self.parity_check
    }

    /// True when construction had to drop dependent generator columns or
    /// check rows.
    pub fn was_reduced(&self) -> bool {
        self.reduced_input
    }

    /// `dim(C) / n` as an exact rational.
    pub fn rate(&self) -> Ratio {
        Ratio::new(self.k as i64, self.n as u64)
    }

    pub fn contains(&self, word: &[FieldElement]) -> bool {
        assert_eq!(word.len(), self.n, "word length mismatch");
        self.parity_check.mul_vec(word).iter().all(|e| e.is_zero())
    }

    pub(crate) fn contains_raw(&self, word: &[u32]) -> bool {
        self.parity_check.mul_raw_vec(word).iter().all(|&v| v == 0)
    }

    /// Set equality of the underlying subspaces (stored matrices may differ).
    pub fn same_code_as(&self, other: &LinearCode) -> bool {
        if self.n != other.n || self.k != other.k || self.field != other.field {
            return false;
        }
        (0..other.k).all(|j| self.contains_raw(&other.generator.raw_column(j)))
    }

    /// The dual code `C^perp`: the stored parity check transposed becomes the
    /// generator and vice versa.
    pub fn dual(&self) -> LinearCode {
        Self::from_parts(
            self.parity_check.transpose(),
            self.generator.transpose(),
            false,
        )
    }

    /// Minimum Hamming weight over nonzero codewords.
    pub fn min_weight(&self, budget: Budget) -> Result<MinWeight> {
        Ok(self.min_weight_search(None, budget)?.weight)
    }

    /// `min { wt(c) : c in C, c not in sub }` where `sub` must be a proper
    /// subcode of `self`.
    pub fn min_weight_excluding(&self, sub: &LinearCode, budget: Budget) -> Result<MinWeight> {
        Ok(self.min_weight_search(Some(sub), budget)?.weight)
    }

    /// Full minimum-weight search, with a witness vector when exact.
    ///
    /// Candidates of weight 1, 2, ... are enumerated exhaustively level by
    /// level (each level certifies a lower bound); if a level would exceed
    /// the budget the search falls back to full message-space enumeration,
    /// and if that is over budget too it reports the certified bound.
    pub fn min_weight_search(
        &self,
        sub: Option<&LinearCode>,
        budget: Budget,
    ) -> Result<WeightSearch> {
        if self.k == 0 {
            return Err(Error::ZeroDimensional);
        }
        if let Some(sub) = sub {
            assert_eq!(sub.n, self.n, "block length mismatch");
            assert_eq!(sub.field, self.field, "mixed-field operands");
            for j in 0..sub.k {
                if !self.contains_raw(&sub.generator.raw_column(j)) {
                    return Err(Error::NotSubcode { column: j });
                }
            }
            if sub.k >= self.k {
                return Err(Error::Degenerate(
                    "excluded subcode equals the code; the search set is empty".into(),
                ));
            }
        }
        let p = self.field.modulus() as u128;
        let message_states = p.checked_pow(self.k as u32).unwrap_or(u128::MAX);
        let mut spent: u128 = 0;
        for w in 1..=self.n {
            let level = level_size(self.n, w, p);
            if spent + level > budget.0 as u128 {
                if message_states <= budget.0 as u128 {
                    return Ok(self.enumerate_messages(sub));
                }
                // levels 1..w-1 were exhausted, so the minimum is at least w
                return Ok(WeightSearch {
                    weight: MinWeight::LowerBound(w),
                    witness: None,
                });
            }
            spent += level;
            if let Some(witness) = self.scan_weight_level(sub, w) {
                return Ok(WeightSearch {
                    weight: MinWeight::Exact(w),
                    witness: Some(
                        witness
                            .iter()
                            .map(|&v| self.field.element(v as u64))
                            .collect(),
                    ),
                });
            }
        }
        unreachable!("a proper subcode exclusion always leaves a codeword of weight <= n");
    }

    /// Scans all weight-`w` vectors (up to scalar normalization) for a member
    /// of `C \ sub`; returns the first hit in scan order.
    fn scan_weight_level(&self, sub: Option<&LinearCode>, w: usize) -> Option<Vec<u32>> {
        let p = self.field.modulus() as u32;
        let mut found: Option<Vec<u32>> = None;
        'supports: for support in (0..self.n).combinations(w) {
            // first nonzero coefficient normalized to 1: scalar multiples
            // stand or fall together for membership in C and in sub
            let mut coeffs = vec![1u32; w];
            loop {
                let mut v = vec![0u32; self.n];
                for (&i, &c) in support.iter().zip(&coeffs) {
                    v[i] = c;
                }
                if self.contains_raw(&v) && !member_or_zero(sub, &v) {
                    found = Some(v);
                    break 'supports;
                }
                // odometer over coeffs[1..], each in 1..p
                let mut j = w;
                loop {
                    if j <= 1 {
                        continue 'supports;
                    }
                    j -= 1;
                    coeffs[j] += 1;
                    if coeffs[j] < p {
                        break;
                    }
                    coeffs[j] = 1;
                }
            }
        }
        found
    }

    fn enumerate_messages(&self, sub: Option<&LinearCode>) -> WeightSearch {
        let mut best: Option<(usize, Vec<u32>)> = None;
        let mut codeword = vec![0u32; self.n];
        for_each_vector(self.field, self.k, |z| {
            if z.iter().all(|&v| v == 0) {
                return;
            }
            self.generator.mul_raw_vec_into(z, &mut codeword);
            if member_or_zero(sub, &codeword) {
                return;
            }
            let w = codeword.iter().filter(|&&v| v != 0).count();
            if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                best = Some((w, codeword.clone()));
            }
        });
        let (w, witness) = best.expect("a proper subcode exclusion leaves some codeword");
        WeightSearch {
            weight: MinWeight::Exact(w),
            witness: Some(
                witness
                    .iter()
                    .map(|&v| self.field.element(v as u64))
                    .collect(),
            ),
        }
    }

    /// The codeword closest to `word` and its distance, ties broken by the
    /// lexicographically smallest message vector.
    pub fn nearest_codeword(
        &self,
        word: &[FieldElement],
        budget: Budget,
    ) -> Result<(Vec<FieldElement>, usize)> {
        assert_eq!(word.len(), self.n, "word length mismatch");
        let p = self.field.modulus() as u128;
        budget.admit(p.checked_pow(self.k as u32).unwrap_or(u128::MAX))?;
        let raw_word: Vec<u32> = word.iter().map(|e| e.value() as u32).collect();
        let mut best: Option<(usize, Vec<u32>)> = None;
        let mut codeword = vec![0u32; self.n];
        for_each_vector(self.field, self.k, |z| {
            self.generator.mul_raw_vec_into(z, &mut codeword);
            let d = codeword
                .iter()
                .zip(&raw_word)
                .filter(|(a, b)| a != b)
                .count();
            if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
                best = Some((d, codeword.clone()));
            }
        });
        let (d, c) = best.expect("message space is never empty");
        Ok((c.iter().map(|&v| self.field.element(v as u64)).collect(), d))
    }
}

/// Membership in the optional excluded subcode, treating `None` as `{0}`.
fn member_or_zero(sub: Option<&LinearCode>, v: &[u32]) -> bool {
    match sub {
        Some(s) => s.contains_raw(v),
        None => v.iter().all(|&x| x == 0),
    }
}

/// Number of normalized weight-`w` candidates: `C(n, w) * (p-1)^(w-1)`.
fn level_size(n: usize, w: usize, p: u128) -> u128 {
    let mut binom: u128 = 1;
    for i in 0..w {
        binom = binom
            .saturating_mul((n - i) as u128)
            .checked_div((i + 1) as u128)
            .unwrap_or(u128::MAX);
    }
    let mut pat: u128 = 1;
    for _ in 1..w {
        pat = pat.saturating_mul(p - 1);
    }
    binom.saturating_mul(pat)
}
