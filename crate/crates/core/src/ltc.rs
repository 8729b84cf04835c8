//! Local testability: query-bounded testers with exact soundness accounting.
//!
//! A tester is a finite distribution over local checks. Every check here is
//! a linear constraint `sum coeff_i * w[support_i] = 0` whose extension to
//! `F^n` lies in the dual code, which makes completeness structural: every
//! codeword passes every check. Rejection probabilities are exact rationals,
//! and a soundness sweep compares them word by word against the bound
//! `1/4 * distance(w, C) / n`.

use std::collections::BTreeMap;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{for_each_vector, FieldElement, PrimeField};
use crate::matrix::Matrix;
use crate::ratio::Ratio;
use crate::rng::SplitMix64;
use crate::Budget;

/// One local check: accept `w` iff `sum coefficients[i] * w[support[i]] = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCheck {
    pub support: Vec<usize>,
    pub coefficients: Vec<u32>,
    pub weight: u64,
}

/// A `q`-query tester for a code: a weighted finite set of local checks.
#[derive(Debug, Clone)]
pub struct LocalTester {
    code: LinearCode,
    query_budget: usize,
    checks: Vec<LocalCheck>,
    total_weight: u64,
}

/// The soundness constant from the locally-testable-code definition.
pub const SOUNDNESS_CONSTANT: Ratio = Ratio::ONE_QUARTER;

impl LocalTester {
    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn query_budget(&self) -> usize {
        self.query_budget
    }

    pub fn checks(&self) -> &[LocalCheck] {
        &self.checks
    }

    /// A tester with no effective checks accepts everything.
    pub fn is_vacuous(&self) -> bool {
        self.total_weight == 0 || self.checks.iter().all(|c| c.support.is_empty())
    }

    fn check_rejects(&self, check: &LocalCheck, word: &[u32]) -> bool {
        let p = self.code.field().modulus();
        let mut acc: u64 = 0;
        for (&i, &c) in check.support.iter().zip(&check.coefficients) {
            acc = (acc + c as u64 * word[i] as u64) % p;
        }
        acc != 0
    }

    /// Exact rejection probability of the tester on `word`.
    pub fn exact_rejection_probability(&self, word: &[FieldElement]) -> Ratio {
        assert_eq!(word.len(), self.code.block_length(), "word length mismatch");
        let raw: Vec<u32> = word.iter().map(|e| e.value() as u32).collect();
        self.rejection_raw(&raw)
    }

    fn rejection_raw(&self, word: &[u32]) -> Ratio {
        if self.total_weight == 0 {
            return Ratio::ZERO;
        }
        let rejecting: u64 = self
            .checks
            .iter()
            .filter(|c| self.check_rejects(c, word))
            .map(|c| c.weight)
            .sum();
        Ratio::new(rejecting as i64, self.total_weight)
    }

    /// One seeded randomized execution: sample a check by weight, query the
    /// word on its support, accept or reject.
    pub fn run_once(&self, word: &[FieldElement], rng: &mut SplitMix64) -> bool {
        assert_eq!(word.len(), self.code.block_length(), "word length mismatch");
        if self.total_weight == 0 {
            return true;
        }
        let mut ticket = rng.below(self.total_weight);
        let raw: Vec<u32> = word.iter().map(|e| e.value() as u32).collect();
        for check in &self.checks {
            if ticket < check.weight {
                return !self.check_rejects(check, &raw);
            }
            ticket -= check.weight;
        }
        unreachable!("ticket is below the total weight");
    }

    /// Exhaustive sweep over all `p^n` words; capped at `2^16` words, beyond
    /// which the caller should fall back to a seeded sample.
    pub fn soundness_sweep_exhaustive(&self, budget: Budget) -> Result<SoundnessReport> {
        let n = self.code.block_length();
        let p = self.code.field().modulus() as u128;
        let words = p.checked_pow(n as u32).unwrap_or(u128::MAX);
        if words > 1 << 16 {
            return Err(Error::BudgetExceeded {
                needed: words,
                budget: 1 << 16,
            });
        }
        let mut all = Vec::with_capacity(words as usize);
        for_each_vector(self.code.field(), n, |w| all.push(w.to_vec()));
        self.sweep(all, SweepMode::Exhaustive, budget)
    }

    /// Seeded sweep over `samples` uniformly drawn words.
    pub fn soundness_sweep_sampled(
        &self,
        samples: usize,
        seed: u64,
        budget: Budget,
    ) -> Result<SoundnessReport> {
        let n = self.code.block_length();
        let p = self.code.field().modulus();
        let mut rng = SplitMix64::new(seed);
        let words: Vec<Vec<u32>> = (0..samples)
            .map(|_| (0..n).map(|_| rng.below(p) as u32).collect())
            .collect();
        self.sweep(words, SweepMode::Sampled { samples, seed }, budget)
    }

    /// Sweep over caller-provided words (as raw residues).
    pub fn soundness_sweep(
        &self,
        words: impl IntoIterator<Item = Vec<u32>>,
        budget: Budget,
    ) -> Result<SoundnessReport> {
        let words: Vec<Vec<u32>> = words.into_iter().collect();
        let count = words.len();
        self.sweep(words, SweepMode::Provided { count }, budget)
    }

    fn sweep(
        &self,
        mut words: Vec<Vec<u32>>,
        mode: SweepMode,
        budget: Budget,
    ) -> Result<SoundnessReport> {
        words.sort_unstable();
        let n = self.code.block_length() as u64;
        let field = self.code.field();
        let mut records = Vec::with_capacity(words.len());
        let mut min_margin: Option<Ratio> = None;
        let mut empirical_constant: Option<Ratio> = None;
        for word in words {
            let as_elements: Vec<FieldElement> =
                word.iter().map(|&v| field.element(v as u64)).collect();
            let (_, distance) = self.code.nearest_codeword(&as_elements, budget)?;
            let rejection = self.rejection_raw(&word);
            let bound = SOUNDNESS_CONSTANT.scale(distance as u64, n);
            let margin = rejection - bound;
            if min_margin.is_none_or(|m| margin < m) {
                min_margin = Some(margin);
            }
            if distance > 0 {
                let constant = rejection.scale(n, distance as u64);
                if empirical_constant.is_none_or(|c| constant < c) {
                    empirical_constant = Some(constant);
                }
            }
            records.push(WordRecord {
                word,
                distance,
                rejection,
                bound,
                pass: rejection >= bound,
            });
        }
        Ok(SoundnessReport {
            mode,
            records,
            min_margin,
            empirical_constant,
        })
    }
}

/// Builds a tester that samples a uniform row of `check_rows` and accepts
/// iff the corresponding parity vanishes on the queried positions. Every row
/// must lie in the dual code; the query budget is the largest row weight.
pub fn parity_sampler_tester(code: &LinearCode, check_rows: &Matrix) -> Result<LocalTester> {
    assert_eq!(
        check_rows.cols(),
        code.block_length(),
        "check width mismatch"
    );
    assert_eq!(check_rows.field(), code.field(), "mixed-field operands");
    let dual = code.dual();
    let mut checks = Vec::with_capacity(check_rows.rows());
    for i in 0..check_rows.rows() {
        let row = check_rows.row(i);
        if !dual.contains(&row) {
            return Err(Error::CheckNotInDual { row: i });
        }
        let support: Vec<usize> = (0..check_rows.cols())
            .filter(|&j| !row[j].is_zero())
            .collect();
        let coefficients: Vec<u32> = support.iter().map(|&j| row[j].value() as u32).collect();
        checks.push(LocalCheck {
            support,
            coefficients,
            weight: 1,
        });
    }
    let query_budget = checks.iter().map(|c| c.support.len()).max().unwrap_or(0);
    let total_weight = checks.len() as u64;
    Ok(LocalTester {
        code: code.clone(),
        query_budget,
        checks,
        total_weight,
    })
}

/// The classic 3-query linearity tester over the length-`2^m` Hadamard code
/// (truth tables of all linear functions): sample `x, y` uniformly and check
/// `w(x) + w(y) = w(x + y)`. Supported for `m <= 4` so that analysis stays
/// exhaustive.
pub fn blr_hadamard_tester(message_len: usize) -> Result<LocalTester> {
    if message_len == 0 || message_len > 4 {
        return Err(Error::InvalidArgument(
            "the exhaustive linearity tester supports message lengths 1..=4".into(),
        ));
    }
    let field = PrimeField::new(2).expect("2 is prime");
    let n = 1usize << message_len;
    // generator of the Hadamard code: row x, column j holds bit j of x
    let mut rows = Vec::with_capacity(n);
    for x in 0..n {
        rows.push((0..message_len).map(|j| ((x >> j) & 1) as u64).collect());
    }
    let code = LinearCode::from_generator(Matrix::from_rows(field, &rows))
        .expect("coordinate functions are independent");
    let mut checks = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            // characteristic vector of {x, y, x+y} mod 2 is a dual vector
            let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
            for pos in [x, y, x ^ y] {
                *counts.entry(pos).or_insert(0) ^= 1;
            }
            let support: Vec<usize> = counts
                .iter()
                .filter(|(_, &c)| c != 0)
                .map(|(&pos, _)| pos)
                .collect();
            let coefficients = vec![1; support.len()];
            checks.push(LocalCheck {
                support,
                coefficients,
                weight: 1,
            });
        }
    }
    let total_weight = checks.len() as u64;
    let tester = LocalTester {
        code,
        query_budget: 3,
        checks,
        total_weight,
    };
    debug_assert!(tester
        .checks
        .iter()
        .all(|c| check_vector_in_dual(&tester, c)));
    Ok(tester)
}

fn check_vector_in_dual(tester: &LocalTester, check: &LocalCheck) -> bool {
    let n = tester.code.block_length();
    let field = tester.code.field();
    let mut v = vec![field.zero(); n];
    for (&i, &c) in check.support.iter().zip(&check.coefficients) {
        v[i] = field.element(c as u64);
    }
    tester.code.dual().contains(&v)
}

/// How the words of a sweep were chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
    Provided { count: usize },
}

/// Per-word soundness record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordRecord {
    pub word: Vec<u32>,
    pub distance: usize,
    pub rejection: Ratio,
    pub bound: Ratio,
    pub pass: bool,
}

/// The full sweep: records sorted by word, plus the aggregate margin and the
/// empirically achieved soundness constant `min reject(w) * n / distance(w)`.
#[derive(Debug, Clone)]
pub struct SoundnessReport {
    pub mode: SweepMode,
    pub records: Vec<WordRecord>,
    pub min_margin: Option<Ratio>,
    pub empirical_constant: Option<Ratio>,
}

impl SoundnessReport {
    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    /// One record per line: word, distance, rejection, bound, verdict.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self.mode {
            SweepMode::Exhaustive => out.push_str("# mode exhaustive\n"),
            SweepMode::Sampled { samples, seed } => {
                out.push_str(&format!("# mode sampled samples={samples} seed={seed}\n"))
            }
            SweepMode::Provided { count } => {
                out.push_str(&format!("# mode provided words={count}\n"))
            }
        }
        out.push_str("# word distance rejection bound verdict\n");
        for r in &self.records {
            let word: Vec<String> = r.word.iter().map(u32::to_string).collect();
            out.push_str(&format!(
                "{} {} {} {} {}\n",
                word.join(","),
                r.distance,
                r.rejection,
                r.bound,
                if r.pass { "pass" } else { "FAIL" }
            ));
        }
        if let Some(m) = self.min_margin {
            out.push_str(&format!("# min_margin {m}\n"));
        }
        if let Some(c) = self.empirical_constant {
            out.push_str(&format!("# empirical_constant {c}\n"));
        }
        out.push_str(&format!("# all_pass {}\n", self.all_pass()));
        out
    }
}
