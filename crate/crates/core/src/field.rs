//! Arithmetic in prime fields GF(p).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A prime field GF(p) with `2 <= p <= 2^16`, checked prime at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Builds GF(p). Fails unless `p` is a prime in `[2, 2^16]`.
    pub fn new(p: u64) -> Result<Self> {
        if !(2..=1 << 16).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u64 {
        self.p as u64
    }

    /// The canonical element for `value mod p`.
    pub fn element(&self, value: u64) -> FieldElement {
        FieldElement {
            value: (value % self.p as u64) as u32,
            field: *self,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// All field elements, in value order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let field = *self;
        (0..self.p).map(move |v| FieldElement { value: v, field })
    }

    /// `sum_i u_i * v_i`. Panics if the lengths differ.
    pub fn inner_product(&self, u: &[FieldElement], v: &[FieldElement]) -> FieldElement {
        assert_eq!(u.len(), v.len(), "inner product of unequal lengths");
        let mut acc: u64 = 0;
        for (a, b) in u.iter().zip(v) {
            debug_assert_eq!(a.field, *self);
            debug_assert_eq!(b.field, *self);
            acc = (acc + a.value as u64 * b.value as u64) % self.p as u64;
        }
        self.element(acc)
    }

    /// Turns raw residues into elements; values must already be canonical.
    pub fn vector(&self, values: &[u64]) -> Vec<FieldElement> {
        values.iter().map(|&v| self.element(v)).collect()
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`PrimeField`], kept as the canonical residue in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    value: u32,
    field: PrimeField,
}

impl FieldElement {
    pub fn value(&self) -> u64 {
        self.value as u64
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse. `inv(0)` is a domain error.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.value == 0 {
            return Err(Error::ZeroInverse);
        }
        // Fermat: a^(p-2) = a^-1 in GF(p).
        let mut base = self.value as u64;
        let mut exp = self.field.p as u64 - 2;
        let p = self.field.p as u64;
        let mut acc: u64 = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        Ok(self.field.element(acc))
    }

    fn check_same_field(&self, other: &FieldElement) {
        assert_eq!(
            self.field, other.field,
            "mixed-field operands: {} vs {}",
            self.field, other.field
        );
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.check_same_field(&rhs);
        self.field.element(self.value as u64 + rhs.value as u64)
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self.check_same_field(&rhs);
        self.field
            .element(self.value as u64 + self.field.p as u64 - rhs.value as u64)
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.check_same_field(&rhs);
        self.field.element(self.value as u64 * rhs.value as u64)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.field.element(self.field.p as u64 - self.value as u64)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Calls `f` on every vector in `F^len`, in lexicographic order with the
/// leftmost coordinate most significant. Vectors are passed as raw residues.
pub fn for_each_vector(field: PrimeField, len: usize, mut f: impl FnMut(&[u32])) {
    let p = field.p;
    let mut v = vec![0u32; len];
    loop {
        f(&v);
        // odometer increment from the rightmost coordinate
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < p {
                break;
            }
            v[i] = 0;
        }
    }
}
