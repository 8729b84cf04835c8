#![allow(dead_code)]

//! Shared helpers for the integration suites: deterministic random instance
//! generation and brute-force oracles kept independent of the library's
//! computation paths.

use zkcss_core::field::{for_each_vector, FieldElement, PrimeField};
use zkcss_core::matrix::Matrix;
use zkcss_core::rng::SplitMix64;
use zkcss_core::zkenc::RandomizedEncoder;

pub fn to_elements(field: PrimeField, raw: &[u32]) -> Vec<FieldElement> {
    raw.iter().map(|&v| field.element(v as u64)).collect()
}

pub fn weight(raw: &[u32]) -> usize {
    raw.iter().filter(|&&v| v != 0).count()
}

pub fn random_matrix(field: PrimeField, rows: usize, cols: usize, rng: &mut SplitMix64) -> Matrix {
    let p = field.modulus();
    let data: Vec<Vec<u64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.below(p)).collect())
        .collect();
    Matrix::from_rows(field, &data)
}

pub fn random_full_rank_generator(
    field: PrimeField,
    n: usize,
    k: usize,
    rng: &mut SplitMix64,
) -> Matrix {
    loop {
        let m = random_matrix(field, n, k, rng);
        if m.rank() == k {
            return m;
        }
    }
}

/// A reproducible family of encoders over GF(p) with `n <= 10`, `k <= 5`,
/// `0 < k' < k`.
pub fn encoder_family(p: u64, count: usize, seed: u64) -> Vec<RandomizedEncoder> {
    let field = PrimeField::new(p).unwrap();
    let mut rng = SplitMix64::new(seed);
    let mut family = Vec::with_capacity(count);
    while family.len() < count {
        let n = 2 + rng.below(9) as usize;
        let k = 2 + rng.below(n.min(5) as u64 - 1) as usize;
        let k_prime = 1 + rng.below(k as u64 - 1) as usize;
        let generator = random_full_rank_generator(field, n, k, &mut rng);
        family.push(RandomizedEncoder::new(generator, k_prime).unwrap());
    }
    family
}

/// All codewords of the column span of `generator`, alongside their message
/// vectors, by direct enumeration.
pub fn enumerate_codewords(generator: &Matrix) -> Vec<(Vec<u32>, Vec<FieldElement>)> {
    let field = generator.field();
    let mut out = Vec::new();
    for_each_vector(field, generator.cols(), |z| {
        let word = generator.mul_vec(&to_elements(field, z));
        out.push((z.to_vec(), word));
    });
    out
}

/// The decodability quantity computed directly from the encoder:
/// the minimum weight of an encoding of a nonzero message. By linearity this
/// equals the minimum distance between encodings of distinct messages.
pub fn direct_min_nonzero_message_weight(encoder: &RandomizedEncoder) -> usize {
    let mut min = usize::MAX;
    for (z, word) in enumerate_codewords(encoder.generator()) {
        if z[..encoder.k_prime()].iter().all(|&v| v == 0) {
            continue;
        }
        let w = word.iter().filter(|e| !e.is_zero()).count();
        min = min.min(w);
    }
    min
}

/// The fully unreduced decodability oracle for tiny instances: the minimum
/// Hamming distance over all pairs of encodings of distinct messages.
pub fn pairwise_min_distance(encoder: &RandomizedEncoder) -> usize {
    let words = enumerate_codewords(encoder.generator());
    let k_prime = encoder.k_prime();
    let mut min = usize::MAX;
    for (za, wa) in &words {
        for (zb, wb) in &words {
            if za[..k_prime] == zb[..k_prime] {
                continue;
            }
            let d = wa.iter().zip(wb).filter(|(a, b)| a != b).count();
            min = min.min(d);
        }
    }
    min
}

/// Behavioral decodability: decoding recovers every message from every
/// encoding corrupted in at most `e` positions. Exhaustive over messages,
/// randomness, error supports, and error values.
pub fn decode_recovers_all(
    encoder: &RandomizedEncoder,
    e: usize,
    budget: zkcss_core::Budget,
) -> bool {
    let field = encoder.field();
    let n = encoder.block_length();
    let p = field.modulus();
    for (z, word) in enumerate_codewords(encoder.generator()) {
        let message = to_elements(field, &z[..encoder.k_prime()]);
        let mut error_supports: Vec<Vec<usize>> = vec![vec![]];
        for w in 1..=e.min(n) {
            error_supports.extend(combinations(n, w));
        }
        for support in &error_supports {
            // odometer over nonzero error values at the support positions
            let mut values = vec![1u64; support.len()];
            loop {
                let mut corrupted = word.clone();
                for (&i, &v) in support.iter().zip(&values) {
                    corrupted[i] = corrupted[i] + field.element(v);
                }
                match encoder.decode(&corrupted, budget) {
                    Ok(decoded) if decoded == message => {}
                    _ => return false,
                }
                let mut j = support.len();
                let mut exhausted = true;
                while j > 0 {
                    j -= 1;
                    values[j] += 1;
                    if values[j] < p {
                        exhausted = false;
                        break;
                    }
                    values[j] = 1;
                }
                if exhausted {
                    break;
                }
            }
        }
    }
    true
}

/// All size-`w` subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, w: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if w > n {
        return out;
    }
    let mut c: Vec<usize> = (0..w).collect();
    loop {
        out.push(c.clone());
        let mut i = w;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if c[i] < n - (w - i) {
                c[i] += 1;
                for j in i + 1..w {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
    }
}
