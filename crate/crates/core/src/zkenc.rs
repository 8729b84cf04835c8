//! Randomized encoding maps and their zero-knowledge criteria.
//!
//! An encoder is a pair `(G, k')`: messages are the first `k'` coordinates of
//! `z`, the remaining `k - k'` coordinates are uniform randomness, and the
//! encoding is `G * z`. Zero-knowledge is a property of the pair, not of the
//! code alone: two generator matrices of the same code can differ in ZK.
//!
//! Four deciders are provided for the same property and must agree:
//!
//! - [`RandomizedEncoder::is_t_zk_oracle`] compares exact restriction
//!   distributions (the definition);
//! - [`RandomizedEncoder::is_t_zk_support`] asks whether zero is in the
//!   support of every restricted encoding, via linear solves;
//! - [`RandomizedEncoder::is_t_zk_algebraic`] tests whether any `t`
//!   coordinates support a vector that is orthogonal to the randomness
//!   columns of `G` but not to all of `G`, equivalently whether the
//!   derived CSS `d_Z` exceeds `t`.
//!
//! The deciders check index sets of size exactly `t`; smaller sets are
//! covered by monotonicity (restrictions of identical distributions are
//! identical), which the test suite verifies.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::code::{LinearCode, MinWeight};
use crate::error::{Error, Result};
use crate::field::{for_each_vector, FieldElement, PrimeField};
use crate::matrix::Matrix;
use crate::ratio::Ratio;
use crate::Budget;

/// A linear randomized encoder `Enc: F^k' -> C`, `m -> G * (m, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomizedEncoder {
    code: LinearCode,
    generator: Matrix,
    k_prime: usize,
}

impl RandomizedEncoder {
    /// Binds a full-column-rank generator matrix to a message length
    /// `0 < k' < k`.
    pub fn new(generator: Matrix, k_prime: usize) -> Result<Self> {
        let code = LinearCode::from_generator(generator.clone())?;
        if code.was_reduced() {
            return Err(Error::InvalidArgument(
                "encoder generator must have full column rank".into(),
            ));
        }
        if k_prime == 0 || k_prime >= code.dimension() {
            return Err(Error::InvalidArgument(format!(
                "message length must satisfy 0 < k' < k, got k' = {k_prime}, k = {}",
                code.dimension()
            )));
        }
        Ok(RandomizedEncoder {
            code,
            generator,
            k_prime,
        })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn k_prime(&self) -> usize {
        self.k_prime
    }

    pub fn block_length(&self) -> usize {
        self.code.block_length()
    }

    pub fn dimension(&self) -> usize {
        self.code.dimension()
    }

    pub fn randomness_len(&self) -> usize {
        self.dimension() - self.k_prime
    }

    pub fn field(&self) -> PrimeField {
        self.code.field()
    }

    /// The span of the last `k - k'` columns of `G`: the randomness subcode,
    /// which is `C_Z^perp` of the derived CSS pair.
    pub fn randomness_span(&self) -> LinearCode {
        let cols = self
            .generator
            .select_columns(self.k_prime..self.dimension());
        LinearCode::from_generator(cols).expect("columns of a full-rank matrix are independent")
    }

    /// `G * (m, r)`.
    pub fn encode(
        &self,
        message: &[FieldElement],
        randomness: &[FieldElement],
    ) -> Vec<FieldElement> {
        assert_eq!(message.len(), self.k_prime, "message length mismatch");
        assert_eq!(
            randomness.len(),
            self.randomness_len(),
            "randomness length mismatch"
        );
        let mut z = Vec::with_capacity(self.dimension());
        z.extend_from_slice(message);
        z.extend_from_slice(randomness);
        self.generator.mul_vec(&z)
    }

    /// The exact distribution of `Enc(m)` restricted to `index_set`, over
    /// uniform randomness. Probabilities are integer counts out of
    /// `p^(k-k')`.
    pub fn restriction_distribution(
        &self,
        message: &[FieldElement],
        index_set: &[usize],
        budget: Budget,
    ) -> Result<RestrictionDistribution> {
        assert_eq!(message.len(), self.k_prime, "message length mismatch");
        validate_index_set(index_set, self.block_length());
        let p = self.field().modulus() as u128;
        let states = p
            .checked_pow(self.randomness_len() as u32)
            .unwrap_or(u128::MAX);
        budget.admit(states)?;
        let mut z: Vec<u32> = message.iter().map(|e| e.value() as u32).collect();
        z.resize(self.dimension(), 0);
        let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        let mut codeword = vec![0u32; self.block_length()];
        let k_prime = self.k_prime;
        for_each_vector(self.field(), self.randomness_len(), |r| {
            z[k_prime..].copy_from_slice(r);
            self.generator.mul_raw_vec_into(&z, &mut codeword);
            let tuple: Vec<u32> = index_set.iter().map(|&i| codeword[i]).collect();
            *counts.entry(tuple).or_insert(0) += 1;
        });
        Ok(RestrictionDistribution {
            index_set: index_set.to_vec(),
            counts,
            total: states as u64,
        })
    }

    /// Definitional decider: every size-`t` restriction distribution is the
    /// same for every message. By linearity it suffices to compare each
    /// message against zero (equality of distributions is transitive); the
    /// unreduced all-pairs scan is [`Self::is_t_zk_oracle_all_pairs`].
    pub fn is_t_zk_oracle(&self, t: usize, budget: Budget) -> Result<bool> {
        self.oracle_scan(t, budget, false)
    }

    /// The all-pairs version of the definitional decider, kept for checking
    /// the pair-vs-zero reduction itself.
    pub fn is_t_zk_oracle_all_pairs(&self, t: usize, budget: Budget) -> Result<bool> {
        self.oracle_scan(t, budget, true)
    }

    fn oracle_scan(&self, t: usize, budget: Budget, all_pairs: bool) -> Result<bool> {
        let n = self.block_length();
        if t == 0 {
            return Ok(true);
        }
        if t > n {
            // every coordinate set of size n already distinguishes messages
            return Ok(false);
        }
        let p = self.field().modulus() as u128;
        let encodings = p.checked_pow(self.dimension() as u32).unwrap_or(u128::MAX);
        let messages = p.checked_pow(self.k_prime as u32).unwrap_or(u128::MAX);
        let mut states = binomial(n, t).saturating_mul(encodings);
        if all_pairs {
            states = states.saturating_mul(messages);
        }
        budget.admit(states)?;
        let table = self.codeword_table();
        let r_block = self.field().modulus().pow(self.randomness_len() as u32) as usize;
        let m_count = self.field().modulus().pow(self.k_prime as u32) as usize;
        for index_set in (0..n).combinations(t) {
            let dists: Vec<Restrictions> = (0..m_count)
                .map(|m| self.sorted_restrictions(&table, m, r_block, &index_set))
                .collect();
            if all_pairs {
                for i in 0..m_count {
                    for j in (i + 1)..m_count {
                        if dists[i] != dists[j] {
                            return Ok(false);
                        }
                    }
                }
            } else if dists[1..].iter().any(|d| *d != dists[0]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All `p^k` codewords in lexicographic `z` order, flattened row-major.
    /// Since messages are the leading coordinates of `z`, the encodings of
    /// message index `m` occupy one contiguous block.
    fn codeword_table(&self) -> Vec<u32> {
        let n = self.block_length();
        let mut table = Vec::new();
        let mut codeword = vec![0u32; n];
        for_each_vector(self.field(), self.dimension(), |z| {
            self.generator.mul_raw_vec_into(z, &mut codeword);
            table.extend_from_slice(&codeword);
        });
        table
    }

    /// The multiset of restricted encodings of one message block, sorted.
    /// Tuples are bit-packed into u64 keys when they fit in 64 bits.
    fn sorted_restrictions(
        &self,
        table: &[u32],
        m_index: usize,
        r_block: usize,
        index_set: &[usize],
    ) -> Restrictions {
        let n = self.block_length();
        let p = self.field().modulus() as u32;
        let bits = 32 - (p - 1).leading_zeros();
        let base = m_index * r_block * n;
        if bits as usize * index_set.len() <= 64 {
            let mut keys: Vec<u64> = (0..r_block)
                .map(|r| {
                    let row = &table[base + r * n..base + (r + 1) * n];
                    index_set
                        .iter()
                        .fold(0u64, |acc, &i| (acc << bits) | row[i] as u64)
                })
                .collect();
            keys.sort_unstable();
            Restrictions::Packed(keys)
        } else {
            let mut tuples: Vec<Vec<u32>> = (0..r_block)
                .map(|r| {
                    let row = &table[base + r * n..base + (r + 1) * n];
                    index_set.iter().map(|&i| row[i]).collect()
                })
                .collect();
            tuples.sort_unstable();
            Restrictions::Tuples(tuples)
        }
    }

    /// Whether some randomness maps `message` to a codeword vanishing on
    /// `index_set`: solvability of `B_I r = -A_I m`.
    pub fn support_contains_zero(&self, message: &[FieldElement], index_set: &[usize]) -> bool {
        assert_eq!(message.len(), self.k_prime, "message length mismatch");
        validate_index_set(index_set, self.block_length());
        let restricted = self.generator.select_rows(index_set);
        let a = restricted.select_columns(0..self.k_prime);
        let b = restricted.select_columns(self.k_prime..self.dimension());
        let target: Vec<FieldElement> = a.mul_vec(message).into_iter().map(|e| -e).collect();
        b.solve(&target).is_some()
    }

    /// Support criterion: zero lies in the support of every restricted
    /// encoding, checked on the unit messages (the solvable message set is a
    /// subspace, so unit vectors suffice).
    pub fn is_t_zk_support(&self, t: usize, budget: Budget) -> Result<bool> {
        Ok(self.find_leaking_set(t, budget)?.is_none())
    }

    /// First (index set, unit-message index) witnessing a ZK failure at size
    /// `t`, in combination order, or `None` when `t`-ZK holds.
    pub fn find_leaking_set(
        &self,
        t: usize,
        budget: Budget,
    ) -> Result<Option<(Vec<usize>, usize)>> {
        let n = self.block_length();
        if t == 0 {
            return Ok(None);
        }
        if t > n {
            return Ok(Some(((0..n).collect(), 0)));
        }
        budget.admit(binomial(n, t).saturating_mul(self.k_prime as u128))?;
        let field = self.field();
        for index_set in (0..n).combinations(t) {
            for j in 0..self.k_prime {
                let mut unit = vec![field.zero(); self.k_prime];
                unit[j] = field.one();
                if !self.support_contains_zero(&unit, &index_set) {
                    return Ok(Some((index_set, j)));
                }
            }
        }
        Ok(None)
    }

    /// Row-combination criterion, decided through the derived CSS distance:
    /// `t`-ZK holds if and only if `d_Z > t`.
    pub fn is_t_zk_algebraic(&self, t: usize, budget: Budget) -> Result<bool> {
        decide_strict_above(self.distance_z(budget)?, t)
    }

    /// `d_Z` of the derived CSS pair: the minimum weight of a vector
    /// orthogonal to the randomness columns of `G` but not to all of `C`.
    pub fn distance_z(&self, budget: Budget) -> Result<MinWeight> {
        let cz = self.randomness_span().dual();
        let cx_perp = self.code.dual();
        cz.min_weight_excluding(&cx_perp, budget)
    }

    /// `d_X` of the derived CSS pair: the minimum weight of an encoding of a
    /// nonzero message.
    pub fn distance_x(&self, budget: Budget) -> Result<MinWeight> {
        self.code
            .min_weight_excluding(&self.randomness_span(), budget)
    }

    /// Largest `t` such that the encoder is `t`-ZK, namely `d_Z - 1`.
    pub fn zk_threshold(&self, budget: Budget) -> Result<MinWeight> {
        Ok(match self.distance_z(budget)? {
            MinWeight::Exact(d) => MinWeight::Exact(d - 1),
            MinWeight::LowerBound(b) => MinWeight::LowerBound(b.saturating_sub(1)),
        })
    }

    /// Largest `t` with `is_t_zk_oracle` true, found by increasing `t`.
    pub fn zk_threshold_oracle(&self, budget: Budget) -> Result<usize> {
        let mut t = 0;
        while t < self.block_length() && self.is_t_zk_oracle(t + 1, budget)? {
            t += 1;
        }
        Ok(t)
    }

    /// Uniform `t`-ZK: every size-`t` restriction of every message's
    /// encoding is exactly uniform. Holds if and only if every `t` rows of
    /// the randomness block of `G` are linearly independent, so the check is
    /// a rank computation per index set.
    pub fn is_uniform_t_zk(&self, t: usize, budget: Budget) -> Result<bool> {
        let n = self.block_length();
        if t == 0 {
            return Ok(true);
        }
        if t > n {
            return Ok(false);
        }
        budget.admit(binomial(n, t).saturating_mul(t as u128))?;
        let randomness_block = self
            .generator
            .select_columns(self.k_prime..self.dimension());
        for index_set in (0..n).combinations(t) {
            if randomness_block.select_rows(&index_set).rank() < t {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The stronger sufficient condition: no nonzero combination of at most
    /// `t` rows of `G` lands in the message block; even landing on zero is
    /// forbidden. Decided as `min_weight(ker(B^T)) > t` for the randomness
    /// block `B`, a route independent of the per-subset rank scan used by
    /// [`Self::is_uniform_t_zk`].
    pub fn stronger_row_condition(&self, t: usize, budget: Budget) -> Result<bool> {
        if t == 0 {
            return Ok(true);
        }
        let b = self
            .generator
            .select_columns(self.k_prime..self.dimension());
        // ker(B^T) is nontrivial: it has dimension >= n - (k - k') >= 1
        let combinations = LinearCode::from_generator(b.transpose().kernel_basis())
            .expect("kernel basis columns are independent");
        decide_strict_above(combinations.min_weight(budget)?, t)
    }

    /// Decodability from `e` errors, decided as `d_X > 2e`.
    pub fn is_decodable_from(&self, e: usize, budget: Budget) -> Result<bool> {
        decide_strict_above(self.distance_x(budget)?, 2 * e)
    }

    /// Largest `e` the encoder decodes from: `floor((d_X - 1) / 2)`.
    pub fn decoding_radius(&self, budget: Budget) -> Result<MinWeight> {
        Ok(match self.distance_x(budget)? {
            MinWeight::Exact(d) => MinWeight::Exact((d - 1) / 2),
            MinWeight::LowerBound(b) => MinWeight::LowerBound(b.saturating_sub(1) / 2),
        })
    }

    /// Maximum-likelihood decoding: the message whose some encoding is
    /// closest to `word`, ties broken by the lexicographically smallest `z`.
    pub fn decode(&self, word: &[FieldElement], budget: Budget) -> Result<Vec<FieldElement>> {
        assert_eq!(word.len(), self.block_length(), "word length mismatch");
        let p = self.field().modulus() as u128;
        budget.admit(p.checked_pow(self.dimension() as u32).unwrap_or(u128::MAX))?;
        let raw: Vec<u32> = word.iter().map(|e| e.value() as u32).collect();
        let mut best: Option<(usize, Vec<u32>)> = None;
        let mut codeword = vec![0u32; self.block_length()];
        for_each_vector(self.field(), self.dimension(), |z| {
            self.generator.mul_raw_vec_into(z, &mut codeword);
            let d = codeword.iter().zip(&raw).filter(|(a, b)| a != b).count();
            if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
                best = Some((d, z[..self.k_prime].to_vec()));
            }
        });
        let (_, message) = best.expect("message space is never empty");
        Ok(message
            .into_iter()
            .map(|v| self.field().element(v as u64))
            .collect())
    }
}

/// A sorted multiset of restriction outcomes, in whichever representation
/// fits.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Restrictions {
    Packed(Vec<u64>),
    Tuples(Vec<Vec<u32>>),
}

fn decide_strict_above(weight: MinWeight, threshold: usize) -> Result<bool> {
    match weight {
        MinWeight::Exact(d) => Ok(d > threshold),
        MinWeight::LowerBound(b) if b > threshold => Ok(true),
        MinWeight::LowerBound(b) => Err(Error::DistanceInconclusive { bound: b }),
    }
}

fn validate_index_set(index_set: &[usize], n: usize) {
    assert!(
        index_set.windows(2).all(|w| w[0] < w[1]),
        "index set must be strictly increasing"
    );
    if let Some(&last) = index_set.last() {
        assert!(last < n, "index {last} out of range for block length {n}");
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    acc
}

/// The exact distribution of a restricted encoding: a table of outcome
/// tuples with integer counts out of `p^(k-k')`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionDistribution {
    index_set: Vec<usize>,
    counts: BTreeMap<Vec<u32>, u64>,
    total: u64,
}

impl RestrictionDistribution {
    pub fn index_set(&self) -> &[usize] {
        &self.index_set
    }

    /// Total mass: `p^(k-k')`.
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn count(&self, outcome: &[u32]) -> u64 {
        self.counts.get(outcome).copied().unwrap_or(0)
    }

    pub fn probability(&self, outcome: &[u32]) -> Ratio {
        Ratio::new(self.count(outcome) as i64, self.total)
    }

    pub fn support(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.counts.keys()
    }

    /// Exactly uniform over all `p^|I|` outcomes.
    pub fn is_uniform(&self, p: u64) -> bool {
        let outcomes = p.pow(self.index_set.len() as u32);
        self.counts.len() as u64 == outcomes
            && self.counts.values().all(|&c| c * outcomes == self.total)
    }
}

/// Committed encoder fixtures.
pub mod fixtures {
    use super::RandomizedEncoder;
    use crate::format::parse_encoder;

    /// Shamir-style encoder over GF(5): message plus one random coefficient
    /// evaluated at 1..4.
    pub fn shamir5() -> RandomizedEncoder {
        parse_encoder(include_str!("../fixtures/shamir5.enc")).expect("fixture parses")
    }

    /// The three-coordinate GF(2) encoder used as a worked example: exactly
    /// 1-ZK, decodable from 0 errors only.
    pub fn worked3() -> RandomizedEncoder {
        parse_encoder(include_str!("../fixtures/worked3.enc")).expect("fixture parses")
    }

    /// Regression fixture: a GF(2) encoder that is 2-ZK although two rows of
    /// its randomness block are dependent, so the stronger row condition
    /// fails at t = 2. Separates the sufficient condition from ZK itself.
    pub fn zk_beats_stronger_condition() -> RandomizedEncoder {
        parse_encoder(include_str!("../fixtures/zk_not_stronger.enc")).expect("fixture parses")
    }

    /// The committed encoder fixture files as `(name, text)` pairs.
    pub fn fixture_files() -> Vec<(&'static str, &'static str)> {
        vec![
            ("shamir5", include_str!("../fixtures/shamir5.enc")),
            ("worked3", include_str!("../fixtures/worked3.enc")),
            (
                "zk_not_stronger",
                include_str!("../fixtures/zk_not_stronger.enc"),
            ),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// G columns (1,0,1) and (1,1,1) over GF(2), k' = 1.
    fn worked3() -> RandomizedEncoder {
        let g = Matrix::from_columns(gf(2), 3, &[vec![1, 0, 1], vec![1, 1, 1]]);
        RandomizedEncoder::new(g, 1).unwrap()
    }

    /// G columns (1,1,1,1) and (1,2,3,4) over GF(5), k' = 1.
    fn shamir5() -> RandomizedEncoder {
        let g = Matrix::from_columns(gf(5), 4, &[vec![1, 1, 1, 1], vec![1, 2, 3, 4]]);
        RandomizedEncoder::new(g, 1).unwrap()
    }

    #[test]
    fn constructor_rejects_bad_parameters() {
        let g = Matrix::from_columns(gf(2), 3, &[vec![1, 0, 1], vec![1, 1, 1]]);
        assert!(RandomizedEncoder::new(g.clone(), 0).is_err());
        assert!(RandomizedEncoder::new(g.clone(), 2).is_err());
        let dependent = Matrix::from_columns(gf(2), 3, &[vec![1, 0, 1], vec![1, 0, 1]]);
        assert!(RandomizedEncoder::new(dependent, 1).is_err());
    }

    #[test]
    fn encode_examples() {
        let e = worked3();
        let f2 = gf(2);
        assert_eq!(
            e.encode(&f2.vector(&[0]), &f2.vector(&[0])),
            f2.vector(&[0, 0, 0])
        );
        assert_eq!(
            e.encode(&f2.vector(&[1]), &f2.vector(&[1])),
            f2.vector(&[0, 1, 0])
        );
        let s = shamir5();
        let f5 = gf(5);
        // 2 + x evaluated at 1..4, mod 5
        assert_eq!(
            s.encode(&f5.vector(&[2]), &f5.vector(&[1])),
            f5.vector(&[3, 4, 0, 1])
        );
    }

    #[test]
    fn restriction_distribution_examples() {
        let e = worked3();
        let f2 = gf(2);
        let b = Budget::default();
        // empty index set: point mass on the empty tuple
        let d = e
            .restriction_distribution(&f2.vector(&[1]), &[], b)
            .unwrap();
        assert_eq!(d.count(&[]), 2);
        assert_eq!(d.total(), 2);
        // coordinate 0 of Enc(1) is 1 + r: uniform on {0, 1}
        let d = e
            .restriction_distribution(&f2.vector(&[1]), &[0], b)
            .unwrap();
        assert_eq!(d.count(&[0]), 1);
        assert_eq!(d.count(&[1]), 1);
        assert_eq!(d.probability(&[0]), Ratio::new(1, 2));
        // coordinates {1, 2} of Enc(1) are (r, 1+r): two point masses
        let d = e
            .restriction_distribution(&f2.vector(&[1]), &[1, 2], b)
            .unwrap();
        assert_eq!(d.count(&[0, 1]), 1);
        assert_eq!(d.count(&[1, 0]), 1);
        assert_eq!(d.count(&[0, 0]), 0);
    }

    #[test]
    fn restriction_distribution_budget_error() {
        let e = shamir5();
        let f5 = gf(5);
        assert!(matches!(
            e.restriction_distribution(&f5.vector(&[1]), &[0], Budget(2)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn oracle_examples() {
        let b = Budget::default();
        let e = worked3();
        assert!(e.is_t_zk_oracle(0, b).unwrap());
        assert!(e.is_t_zk_oracle(1, b).unwrap());
        assert!(!e.is_t_zk_oracle(2, b).unwrap());
        assert!(shamir5().is_t_zk_oracle(1, b).unwrap());
        // all-pairs agrees
        assert!(e.is_t_zk_oracle_all_pairs(1, b).unwrap());
        assert!(!e.is_t_zk_oracle_all_pairs(2, b).unwrap());
    }

    #[test]
    fn support_examples() {
        let e = worked3();
        let f2 = gf(2);
        // zero message always has zero in its support
        assert!(e.support_contains_zero(&f2.vector(&[0]), &[1, 2]));
        // coordinate 2 of Enc(1) is 1 + r, which hits zero at r = 1
        assert!(e.support_contains_zero(&f2.vector(&[1]), &[2]));
        // coordinates {1, 2} of Enc(1) are (r, 1+r): never (0, 0)
        assert!(!e.support_contains_zero(&f2.vector(&[1]), &[1, 2]));
    }

    #[test]
    fn support_decider_matches_oracle_on_examples() {
        let b = Budget::default();
        let e = worked3();
        assert!(e.is_t_zk_support(0, b).unwrap());
        assert!(e.is_t_zk_support(1, b).unwrap());
        assert!(!e.is_t_zk_support(2, b).unwrap());
        assert!(shamir5().is_t_zk_support(1, b).unwrap());
    }

    #[test]
    fn leaking_set_witness() {
        let b = Budget::default();
        // {0, 1} is the first leaking pair in combination order: those
        // coordinates of Enc(m) are (m + r, r), whose support misses zero
        // for m = 1
        let (index_set, msg) = worked3().find_leaking_set(2, b).unwrap().unwrap();
        assert_eq!(index_set, vec![0, 1]);
        assert_eq!(msg, 0);
    }

    #[test]
    fn algebraic_examples() {
        let b = Budget::default();
        let e = worked3();
        assert!(e.is_t_zk_algebraic(1, b).unwrap());
        assert!(!e.is_t_zk_algebraic(2, b).unwrap());
        assert_eq!(e.distance_z(b).unwrap(), MinWeight::Exact(2));
        assert!(shamir5().is_t_zk_algebraic(1, b).unwrap());
        // t >= n is never ZK when k' >= 1
        assert!(!e.is_t_zk_algebraic(3, b).unwrap());
        assert!(!shamir5().is_t_zk_algebraic(4, b).unwrap());
        assert!(!e.is_t_zk_oracle(3, b).unwrap());
    }

    #[test]
    fn uniform_examples() {
        let b = Budget::default();
        assert!(worked3().is_uniform_t_zk(0, b).unwrap());
        assert!(shamir5().is_uniform_t_zk(1, b).unwrap());
        // a zero row in G forces a constant coordinate
        let g = Matrix::from_rows(gf(2), &[vec![1, 1], vec![0, 0], vec![0, 1]]);
        let e = RandomizedEncoder::new(g, 1).unwrap();
        assert!(!e.is_uniform_t_zk(1, b).unwrap());
    }

    #[test]
    fn uniform_matches_distribution_uniformity() {
        let b = Budget::default();
        for e in [worked3(), shamir5()] {
            let p = e.field().modulus();
            for t in 0..=e.block_length() {
                let by_rank = e.is_uniform_t_zk(t, b).unwrap();
                // definitional route: every restriction of every message uniform
                let mut by_enum = true;
                if t <= e.block_length() {
                    'outer: for index_set in (0..e.block_length()).combinations(t) {
                        let mut msgs_done = 0u64;
                        let mut m_raw = vec![0u32; e.k_prime()];
                        loop {
                            let m: Vec<FieldElement> =
                                m_raw.iter().map(|&v| e.field().element(v as u64)).collect();
                            let d = e.restriction_distribution(&m, &index_set, b).unwrap();
                            if !d.is_uniform(p) {
                                by_enum = false;
                                break 'outer;
                            }
                            msgs_done += 1;
                            if msgs_done == p.pow(e.k_prime() as u32) {
                                break;
                            }
                            let mut i = e.k_prime();
                            loop {
                                i -= 1;
                                m_raw[i] += 1;
                                if (m_raw[i] as u64) < p {
                                    break;
                                }
                                m_raw[i] = 0;
                            }
                        }
                    }
                }
                if t > 0 && t <= e.block_length() {
                    assert_eq!(by_rank, by_enum, "t = {t}");
                }
            }
        }
    }

    #[test]
    fn stronger_condition_examples() {
        let b = Budget::default();
        // t = 1: true iff no randomness-block row is zero
        assert!(shamir5().stronger_row_condition(1, b).unwrap());
        let g = Matrix::from_rows(gf(2), &[vec![1, 1], vec![1, 0], vec![0, 1]]);
        let e = RandomizedEncoder::new(g, 1).unwrap();
        // row 1 has randomness block zero
        assert!(!e.stronger_row_condition(1, b).unwrap());
    }

    #[test]
    fn zk_can_hold_without_stronger_condition() {
        let b = Budget::default();
        let g = Matrix::from_rows(
            gf(2),
            &[vec![1, 1, 0], vec![1, 1, 0], vec![0, 0, 1], vec![0, 1, 1]],
        );
        let e = RandomizedEncoder::new(g, 1).unwrap();
        assert!(e.is_t_zk_oracle(2, b).unwrap());
        assert!(!e.stronger_row_condition(2, b).unwrap());
        assert!(!e.is_t_zk_oracle(3, b).unwrap());
    }

    #[test]
    fn decodability_examples() {
        let b = Budget::default();
        let s = shamir5();
        assert_eq!(s.distance_x(b).unwrap(), MinWeight::Exact(3));
        assert!(s.is_decodable_from(1, b).unwrap());
        assert!(!s.is_decodable_from(2, b).unwrap());
        let f5 = gf(5);
        // one corruption of encode(2, 1) = (3,4,0,1)
        assert_eq!(
            s.decode(&f5.vector(&[3, 4, 0, 2]), b).unwrap(),
            f5.vector(&[2])
        );
        // d_X = 1 for the worked example: decodable from 0 errors only
        let e = worked3();
        assert_eq!(e.distance_x(b).unwrap(), MinWeight::Exact(1));
        assert!(e.is_decodable_from(0, b).unwrap());
        assert!(!e.is_decodable_from(1, b).unwrap());
    }

    #[test]
    fn thresholds() {
        let b = Budget::default();
        assert_eq!(shamir5().zk_threshold(b).unwrap(), MinWeight::Exact(1));
        assert_eq!(shamir5().zk_threshold_oracle(b).unwrap(), 1);
        assert_eq!(shamir5().decoding_radius(b).unwrap(), MinWeight::Exact(1));
        assert_eq!(worked3().zk_threshold(b).unwrap(), MinWeight::Exact(1));
        assert_eq!(worked3().decoding_radius(b).unwrap(), MinWeight::Exact(0));
    }
}
