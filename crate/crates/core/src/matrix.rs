//! Dense exact linear algebra over GF(p).
//!
//! Matrices are immutable after construction and all operations are pure.
//! GF(2) gets a bit-packed elimination path behind the same interface; its
//! correctness is defined by the generic GF(p) semantics and checked against
//! it in tests.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};

/// A dense `rows x cols` matrix over GF(p), entries stored row-major as
/// canonical residues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
    field: PrimeField,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
            field,
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from integer rows, reducing each entry mod p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<u64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|&v| (v % field.modulus()) as u32)
            .collect();
        Matrix {
            rows: rows.len(),
            cols,
            entries,
            field,
        }
    }

    /// Builds an `n x k` matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, n: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, n, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), n, "column length mismatch");
            for (i, &v) in col.iter().enumerate() {
                debug_assert!((v as u64) < field.modulus());
                m.entries[i * columns.len() + j] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn get(&self, row: usize, col: usize) -> FieldElement {
        self.field
            .element(self.entries[row * self.cols + col] as u64)
    }

    pub(crate) fn raw(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.cols + col]
    }

    pub(crate) fn raw_row(&self, row: usize) -> &[u32] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn row(&self, row: usize) -> Vec<FieldElement> {
        self.raw_row(row)
            .iter()
            .map(|&v| self.field.element(v as u64))
            .collect()
    }

    pub fn column(&self, col: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self.get(i, col)).collect()
    }

    pub(crate) fn raw_column(&self, col: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.raw(i, col)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.raw(i, j);
            }
        }
        t
    }

    /// Restriction to a subset of rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut entries = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            entries.extend_from_slice(self.raw_row(r));
        }
        Matrix {
            rows: rows.len(),
            cols: self.cols,
            entries,
            field: self.field,
        }
    }

    /// Restriction to a contiguous range of columns.
    pub fn select_columns(&self, cols: std::ops::Range<usize>) -> Matrix {
        assert!(cols.end <= self.cols);
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            let row = self.raw_row(r);
            entries.extend_from_slice(&row[cols.clone()]);
        }
        Matrix {
            rows: self.rows,
            cols: cols.len(),
            entries,
            field: self.field,
        }
    }

    /// `[left | right]` side by side.
    pub fn hstack(&self, right: &Matrix) -> Matrix {
        assert_eq!(self.rows, right.rows, "row count mismatch");
        assert_eq!(self.field, right.field);
        let cols = self.cols + right.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            entries.extend_from_slice(self.raw_row(r));
            entries.extend_from_slice(right.raw_row(r));
        }
        Matrix {
            rows: self.rows,
            cols,
            entries,
            field: self.field,
        }
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        assert_eq!(self.field, rhs.field);
        let p = self.field.modulus();
        let mut out = Self::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.raw(i, l) as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cell = &mut out.entries[i * rhs.cols + j];
                    *cell = ((*cell as u64 + a * rhs.raw(l, j) as u64) % p) as u32;
                }
            }
        }
        out
    }

    /// Matrix-vector product over raw residues.
    pub(crate) fn mul_raw_vec(&self, v: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; self.rows];
        self.mul_raw_vec_into(v, &mut out);
        out
    }

    pub(crate) fn mul_raw_vec_into(&self, v: &[u32], out: &mut [u32]) {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        assert_eq!(out.len(), self.rows);
        let p = self.field.modulus();
        for (i, cell) in out.iter_mut().enumerate() {
            let row = self.raw_row(i);
            let mut acc: u64 = 0;
            for (a, b) in row.iter().zip(v) {
                acc += *a as u64 * *b as u64;
            }
            *cell = (acc % p) as u32;
        }
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        let raw: Vec<u32> = v
            .iter()
            .map(|e| {
                debug_assert_eq!(e.field(), self.field);
                e.value() as u32
            })
            .collect();
        self.mul_raw_vec(&raw)
            .into_iter()
            .map(|v| self.field.element(v as u64))
            .collect()
    }

    /// Reduced row echelon form and the pivot columns, strictly increasing.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        if self.field.modulus() == 2 {
            self.rref_gf2()
        } else {
            self.rref_generic()
        }
    }

    fn rref_generic(&self) -> (Matrix, Vec<usize>) {
        let p = self.field.modulus();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pivot_row) = (r..m.rows).find(|&i| m.raw(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pivot_row);
            let inv = self
                .field
                .element(m.raw(r, c) as u64)
                .inv()
                .expect("pivot is nonzero")
                .value();
            for j in c..m.cols {
                let cell = &mut m.entries[r * m.cols + j];
                *cell = ((*cell as u64 * inv) % p) as u32;
            }
            for i in 0..m.rows {
                if i == r || m.raw(i, c) == 0 {
                    continue;
                }
                let factor = m.raw(i, c) as u64;
                for j in c..m.cols {
                    let sub = factor * m.raw(r, j) as u64 % p;
                    let cell = &mut m.entries[i * m.cols + j];
                    *cell = ((*cell as u64 + p - sub) % p) as u32;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Bit-packed elimination for GF(2), one u64 word per 64 columns.
    fn rref_gf2(&self) -> (Matrix, Vec<usize>) {
        let words = self.cols.div_ceil(64).max(1);
        let mut bits: Vec<Vec<u64>> = (0..self.rows)
            .map(|i| {
                let mut row = vec![0u64; words];
                for (j, &v) in self.raw_row(i).iter().enumerate() {
                    if v != 0 {
                        row[j / 64] |= 1 << (j % 64);
                    }
                }
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let word = c / 64;
            let mask = 1u64 << (c % 64);
            let Some(pivot_row) = (r..self.rows).find(|&i| bits[i][word] & mask != 0) else {
                continue;
            };
            bits.swap(r, pivot_row);
            for i in 0..self.rows {
                if i != r && bits[i][word] & mask != 0 {
                    let (head, tail) = bits.split_at_mut(r.max(i));
                    let (a, b) = if i < r {
                        (&mut head[i], &tail[0])
                    } else {
                        (&mut tail[0], &head[r])
                    };
                    for (x, y) in a.iter_mut().zip(b.iter()) {
                        *x ^= *y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let mut out = Self::zeros(self.field, self.rows, self.cols);
        for (i, row) in bits.iter().enumerate() {
            for j in 0..self.cols {
                if row[j / 64] & (1 << (j % 64)) != 0 {
                    out.entries[i * self.cols + j] = 1;
                }
            }
        }
        (out, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of `{ x : M x = 0 }`, one per free column of the
    /// reduced form, in ascending free-column order. Full-rank square input
    /// yields a `cols x 0` matrix.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let is_pivot = {
            let mut flags = vec![false; self.cols];
            for &c in &pivots {
                flags[c] = true;
            }
            flags
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let p = self.field.modulus();
        let mut basis = Self::zeros(self.field, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            basis.entries[f * free.len() + j] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                let v = r.raw(i, f) as u64;
                if v != 0 {
                    basis.entries[pc * free.len() + j] = (p - v) as u32;
                }
            }
        }
        basis
    }

    /// The columns of `self` at the pivot positions: an independent set
    /// spanning the column space.
    pub fn image_basis(&self) -> Matrix {
        let (_, pivots) = self.rref();
        let mut m = Self::zeros(self.field, self.rows, pivots.len());
        for (j, &c) in pivots.iter().enumerate() {
            for i in 0..self.rows {
                m.entries[i * pivots.len() + j] = self.raw(i, c);
            }
        }
        m
    }

    /// Solves `A x = b`, returning `None` when the system is inconsistent.
    /// Free variables are set to zero, so the solution is deterministic.
    pub fn solve(&self, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let rhs = Matrix::from_columns(
            self.field,
            self.rows,
            &[b.iter().map(|e| e.value() as u32).collect()],
        );
        let (r, pivots) = self.hstack(&rhs).rref();
        if pivots.last() == Some(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(i, self.cols);
        }
        Some(x)
    }

    /// The unique reduced-echelon basis of the row space, pivots ascending.
    /// Rows of the result are the canonical basis vectors.
    pub fn row_space_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        r.select_rows(&(0..pivots.len()).collect::<Vec<_>>())
    }
}

/// Incremental independence tracker: a reduced row set that vectors can be
/// tested against and inserted into.
#[derive(Debug, Clone)]
pub(crate) struct Eliminator {
    field: PrimeField,
    width: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Eliminator {
    pub(crate) fn new(field: PrimeField, width: usize) -> Self {
        Eliminator {
            field,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Inserts `v` if it is independent of the rows seen so far; returns
    /// whether it was inserted.
    pub(crate) fn try_insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.width);
        let p = self.field.modulus();
        let mut v = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let factor = v[pc] as u64;
            if factor == 0 {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x = ((*x as u64 + (p - factor % p) * *y as u64) % p) as u32;
            }
        }
        let Some(lead) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self
            .field
            .element(v[lead] as u64)
            .inv()
            .expect("leading entry is nonzero")
            .value();
        for x in v.iter_mut() {
            *x = (*x as u64 * inv % p) as u32;
        }
        self.rows.push(v);
        self.pivots.push(lead);
        true
    }

    #[cfg(test)]
    pub(crate) fn contains(&self, v: &[u32]) -> bool {
        !self.clone().try_insert(v)
    }
}

/// Extends the independent columns of `basis` to a full generator matrix of
/// `ambient` whose last `basis.cols()` columns are exactly the columns of
/// `basis`, in order.
///
/// The prepended columns are chosen deterministically: the canonical
/// reduced-echelon basis of `ambient` is scanned in descending pivot order
/// and the first vectors independent of everything chosen so far are taken.
pub fn complete_basis(basis: &Matrix, ambient: &LinearCode) -> Result<Matrix> {
    assert_eq!(basis.field(), ambient.field(), "mixed-field operands");
    assert_eq!(
        basis.rows(),
        ambient.block_length(),
        "basis vectors must have the ambient block length"
    );
    let mut state = Eliminator::new(basis.field(), basis.rows());
    for j in 0..basis.cols() {
        let col = basis.raw_column(j);
        if !ambient.contains_raw(&col) {
            return Err(Error::NotInAmbient { column: j });
        }
        if !state.try_insert(&col) {
            return Err(Error::DependentColumns);
        }
    }
    let canonical = ambient.generator().transpose().row_space_basis();
    let mut picked: Vec<Vec<u32>> = Vec::new();
    for i in (0..canonical.rows()).rev() {
        if state.dim() == ambient.dimension() {
            break;
        }
        let candidate = canonical.raw_row(i).to_vec();
        if state.try_insert(&candidate) {
            picked.push(candidate);
        }
    }
    debug_assert_eq!(state.dim(), ambient.dimension());
    let mut columns = picked;
    for j in 0..basis.cols() {
        columns.push(basis.raw_column(j));
    }
    Ok(Matrix::from_columns(basis.field(), basis.rows(), &columns))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::for_each_vector;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let id = Matrix::identity(gf(5), 4);
        let (r, pivots) = id.rref();
        assert_eq!(r, id);
        assert_eq!(pivots, vec![0, 1, 2, 3]);
    }

    #[test]
    fn rref_of_zero_matrix_is_itself() {
        let z = Matrix::zeros(gf(3), 2, 3);
        let (r, pivots) = z.rref();
        assert_eq!(r, z);
        assert!(pivots.is_empty());
    }

    #[test]
    fn rref_gf2_hand_example() {
        let m = Matrix::from_rows(gf(2), &[vec![1, 1], vec![1, 1]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::from_rows(gf(2), &[vec![1, 1], vec![0, 0]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn gf2_bit_path_matches_generic_path() {
        let f2 = gf(2);
        // deterministic pseudo-random fill
        let mut s = 0x9e3779b97f4a7c15u64;
        for (rows, cols) in [(3, 5), (5, 3), (6, 6), (1, 70), (4, 65)] {
            let mut data = Vec::new();
            for _ in 0..rows {
                let mut row = Vec::new();
                for _ in 0..cols {
                    s ^= s << 13;
                    s ^= s >> 7;
                    s ^= s << 17;
                    row.push(s & 1);
                }
                data.push(row);
            }
            let m = Matrix::from_rows(f2, &data);
            assert_eq!(m.rref_gf2(), m.rref_generic());
        }
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let k = Matrix::identity(gf(5), 3).kernel_basis();
        assert_eq!((k.rows(), k.cols()), (3, 0));
    }

    #[test]
    fn rank_of_zero_matrix_is_zero() {
        assert_eq!(Matrix::zeros(gf(7), 4, 6).rank(), 0);
    }

    #[test]
    fn kernel_of_all_ones_row_gf2() {
        let m = Matrix::from_rows(gf(2), &[vec![1, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 2);
        // brute-force oracle: exactly 4 of the 8 vectors are in the kernel
        let mut kernel_vectors = Vec::new();
        for_each_vector(gf(2), 3, |v| {
            if m.mul_raw_vec(v)[0] == 0 {
                kernel_vectors.push(v.to_vec());
            }
        });
        assert_eq!(kernel_vectors.len(), 4);
        for j in 0..k.cols() {
            assert!(kernel_vectors.contains(&k.raw_column(j)));
        }
        assert_eq!(k.raw_column(0), vec![1, 1, 0]);
        assert_eq!(k.raw_column(1), vec![1, 0, 1]);
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let f5 = gf(5);
        let b = f5.vector(&[4, 0, 2]);
        assert_eq!(Matrix::identity(f5, 3).solve(&b), Some(b.clone()));
    }

    #[test]
    fn solve_zero_matrix_inconsistent() {
        let f3 = gf(3);
        let z = Matrix::zeros(f3, 2, 2);
        assert_eq!(z.solve(&f3.vector(&[1, 0])), None);
        let zero = f3.vector(&[0, 0]);
        assert_eq!(z.solve(&zero), Some(zero));
    }

    #[test]
    fn solve_single_column_inconsistency() {
        let f2 = gf(2);
        let a = Matrix::from_rows(f2, &[vec![1], vec![1], vec![0]]);
        // brute-force: neither x = 0 nor x = 1 hits (1,1,1)
        assert_eq!(a.solve(&f2.vector(&[1, 1, 1])), None);
        assert_eq!(a.solve(&f2.vector(&[1, 1, 0])), Some(f2.vector(&[1])));
    }

    #[test]
    fn rank_nullity_and_kernel_oracle_small_random() {
        let mut s = 0xdeadbeefcafef00du64;
        for p in [2u64, 3, 5] {
            let f = gf(p);
            for _ in 0..40 {
                s ^= s << 13;
                s ^= s >> 7;
                s ^= s << 17;
                let rows = 1 + (s % 4) as usize;
                let cols = 1 + ((s >> 8) % 5) as usize;
                let mut data = Vec::new();
                for i in 0..rows {
                    let mut row = Vec::new();
                    for j in 0..cols {
                        row.push((s >> ((i * cols + j) % 48)) % p);
                    }
                    data.push(row);
                }
                let m = Matrix::from_rows(f, &data);
                let k = m.kernel_basis();
                assert_eq!(m.rank() + k.cols(), cols);
                for j in 0..k.cols() {
                    assert!(m.mul_raw_vec(&k.raw_column(j)).iter().all(|&v| v == 0));
                }
                // the kernel basis spans exactly the brute-force kernel
                let mut count = 0u64;
                for_each_vector(f, cols, |v| {
                    if m.mul_raw_vec(v).iter().all(|&x| x == 0) {
                        count += 1;
                    }
                });
                assert_eq!(count, p.pow(k.cols() as u32));
            }
        }
    }

    #[test]
    fn image_basis_spans_column_space() {
        let f3 = gf(3);
        let m = Matrix::from_rows(f3, &[vec![1, 2, 0], vec![2, 4 % 3, 0], vec![0, 0, 0]]);
        let im = m.image_basis();
        assert_eq!(im.cols(), m.rank());
        // every original column solves against the image basis
        for j in 0..m.cols() {
            assert!(im.solve(&m.column(j)).is_some());
        }
    }

    #[test]
    fn eliminator_tracks_independence() {
        let f2 = gf(2);
        let mut e = Eliminator::new(f2, 3);
        assert!(e.try_insert(&[1, 1, 0]));
        assert!(!e.try_insert(&[1, 1, 0]));
        assert!(e.try_insert(&[0, 1, 1]));
        assert!(!e.try_insert(&[1, 0, 1])); // sum of the first two
        assert_eq!(e.dim(), 2);
        assert!(e.contains(&[1, 0, 1]));
        assert!(!e.contains(&[1, 0, 0]));
    }

    #[test]
    fn complete_basis_even_weight_example() {
        let f2 = gf(2);
        let even = LinearCode::from_parity_check(Matrix::from_rows(f2, &[vec![1, 1, 1]])).unwrap();
        let b = Matrix::from_columns(f2, 3, &[vec![1, 1, 0]]);
        let g = complete_basis(&b, &even).unwrap();
        assert_eq!(g.raw_column(0), vec![0, 1, 1]); // first canonical vector independent of B
        assert_eq!(g.raw_column(1), vec![1, 1, 0]); // B itself, last
        assert_eq!(g.rank(), 2);
    }

    #[test]
    fn complete_basis_when_basis_already_spans() {
        let f2 = gf(2);
        let even = LinearCode::from_parity_check(Matrix::from_rows(f2, &[vec![1, 1, 1]])).unwrap();
        let b = Matrix::from_columns(f2, 3, &[vec![1, 1, 0], vec![1, 0, 1]]);
        let g = complete_basis(&b, &even).unwrap();
        assert_eq!(g, b);
    }

    #[test]
    fn complete_basis_from_empty_basis() {
        let f2 = gf(2);
        let even = LinearCode::from_parity_check(Matrix::from_rows(f2, &[vec![1, 1, 1]])).unwrap();
        let b = Matrix::zeros(f2, 3, 0);
        let g = complete_basis(&b, &even).unwrap();
        assert_eq!(g.rank(), 2);
        for j in 0..2 {
            assert!(even.contains_raw(&g.raw_column(j)));
        }
    }

    #[test]
    fn complete_basis_rejects_bad_inputs() {
        let f2 = gf(2);
        let even = LinearCode::from_parity_check(Matrix::from_rows(f2, &[vec![1, 1, 1]])).unwrap();
        let outside = Matrix::from_columns(f2, 3, &[vec![1, 0, 0]]);
        assert_eq!(
            complete_basis(&outside, &even),
            Err(Error::NotInAmbient { column: 0 })
        );
        let dependent = Matrix::from_columns(f2, 3, &[vec![1, 1, 0], vec![1, 1, 0]]);
        assert_eq!(
            complete_basis(&dependent, &even),
            Err(Error::DependentColumns)
        );
    }
}
