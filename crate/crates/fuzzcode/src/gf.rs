//! Exact linear algebra over prime fields GF(p).
//!
//! All arithmetic is done on `u64` residues mod a prime `p <= 2^31`, so every
//! product fits in a `u64` without overflow. Row reduction is deterministic:
//! scanning columns left to right, the pivot is always the first row (at or
//! below the current rank) with a nonzero entry. For p = 2 the elimination
//! runs on bit-packed rows (64 columns per word, XOR row updates) and produces
//! exactly the same output as the scalar path.

use std::fmt;

use thiserror::Error;

/// Error raised by field and matrix operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds 2^31")]
    ModulusTooLarge(u64),
    #[error("modulus {0} is too small (need p >= 2)")]
    ModulusTooSmall(u64),
    #[error("entry {value} is not a residue mod {modulus}")]
    EntryOutOfRange { value: u64, modulus: u64 },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("operands belong to different fields (GF({0}) vs GF({1}))")]
    FieldMismatch(u64, u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix does not have full row rank")]
    RankDeficient,
    #[error("rows have unequal lengths")]
    RaggedRows,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A prime field GF(p), `2 <= p <= 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
}

impl FieldSpec {
    pub fn new(p: u64) -> Result<Self, GfError> {
        if p < 2 {
            return Err(GfError::ModulusTooSmall(p));
        }
        if p > 1 << 31 {
            return Err(GfError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        Ok(FieldSpec { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_binary(&self) -> bool {
        self.p == 2
    }

    fn check(&self, value: u64) -> Result<u64, GfError> {
        if value < self.p {
            Ok(value)
        } else {
            Err(GfError::EntryOutOfRange { value, modulus: self.p })
        }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.p && b < self.p);
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.p && b < self.p);
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        debug_assert!(a < self.p);
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.p && b < self.p);
        // (p-1)^2 < 2^62 for p <= 2^31, so the product cannot overflow u64.
        a * b % self.p
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0 && a < self.p, "inverse of zero or non-residue");
        // Extended Euclid on (a, p); coefficients tracked as i128.
        let (mut r0, mut r1) = (a as i128, self.p as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        let p = self.p as i128;
        ((s0 % p + p) % p) as u64
    }
}

/// A vector with entries in GF(p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldVector {
    field: FieldSpec,
    entries: Vec<u64>,
}

impl FieldVector {
    pub fn new(field: FieldSpec, entries: Vec<u64>) -> Result<Self, GfError> {
        for &e in &entries {
            field.check(e)?;
        }
        Ok(FieldVector { field, entries })
    }

    pub fn zero(field: FieldSpec, len: usize) -> Self {
        FieldVector { field, entries: vec![0; len] }
    }

    /// Standard basis vector `e_i` (1-hot at `i`).
    pub fn unit(field: FieldSpec, len: usize, i: usize) -> Self {
        assert!(i < len);
        let mut entries = vec![0; len];
        entries[i] = 1;
        FieldVector { field, entries }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    fn check_compatible(&self, other: &Self) -> Result<(), GfError> {
        if self.field != other.field {
            return Err(GfError::FieldMismatch(self.field.p, other.field.p));
        }
        if self.len() != other.len() {
            return Err(GfError::LengthMismatch { expected: self.len(), got: other.len() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, GfError> {
        self.check_compatible(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        Ok(FieldVector { field: self.field, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GfError> {
        self.check_compatible(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.field.sub(a, b))
            .collect();
        Ok(FieldVector { field: self.field, entries })
    }

    pub fn scale(&self, c: u64) -> Result<Self, GfError> {
        let c = self.field.check(c)?;
        let entries = self.entries.iter().map(|&a| self.field.mul(a, c)).collect();
        Ok(FieldVector { field: self.field, entries })
    }

    /// Standard inner product `sum_i x_i y_i` in GF(p).
    pub fn dot(&self, other: &Self) -> Result<u64, GfError> {
        self.check_compatible(other)?;
        let mut acc = 0u64;
        for (&a, &b) in self.entries.iter().zip(&other.entries) {
            acc = self.field.add(acc, self.field.mul(a, b));
        }
        Ok(acc)
    }

    /// Hamming weight: number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    /// Hamming distance to `other`.
    pub fn distance(&self, other: &Self) -> Result<usize, GfError> {
        self.check_compatible(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .filter(|(&a, &b)| a != b)
            .count())
    }
}

impl fmt::Display for FieldVector {
    /// Contiguous digits for p <= 9, comma-separated residues otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.p <= 9 {
            for &e in &self.entries {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Result of reduced-row-echelon-form computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: FieldMatrix,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// A column permutation: position `i` of the permuted vector takes the entry
/// at `forward[i]` of the original.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColPermutation {
    forward: Vec<usize>,
}

impl ColPermutation {
    pub fn identity(n: usize) -> Self {
        ColPermutation { forward: (0..n).collect() }
    }

    pub fn new(forward: Vec<usize>) -> Result<Self, GfError> {
        let n = forward.len();
        let mut seen = vec![false; n];
        for &j in &forward {
            if j >= n || seen[j] {
                return Err(GfError::DimensionMismatch("not a permutation".into()));
            }
            seen[j] = true;
        }
        Ok(ColPermutation { forward })
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.forward.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn indices(&self) -> &[usize] {
        &self.forward
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.forward.len()];
        for (i, &j) in self.forward.iter().enumerate() {
            inv[j] = i;
        }
        ColPermutation { forward: inv }
    }

    pub fn apply(&self, v: &FieldVector) -> Result<FieldVector, GfError> {
        if v.len() != self.forward.len() {
            return Err(GfError::LengthMismatch { expected: self.forward.len(), got: v.len() });
        }
        let entries = self.forward.iter().map(|&j| v.entries[j]).collect();
        Ok(FieldVector { field: v.field, entries })
    }
}

/// A dense row-major matrix over GF(p). Zero-row matrices are legal (they
/// represent the basis of the zero code).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl FieldMatrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, entries: Vec<u64>) -> Result<Self, GfError> {
        if entries.len() != rows * cols {
            return Err(GfError::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        for &e in &entries {
            field.check(e)?;
        }
        Ok(FieldMatrix { field, rows, cols, entries })
    }

    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        FieldMatrix { field, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = FieldMatrix::zero(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row vectors, which must share the field and length.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[FieldVector]) -> Result<Self, GfError> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.field != field {
                return Err(GfError::FieldMismatch(field.p, r.field.p));
            }
            if r.len() != cols {
                return Err(GfError::LengthMismatch { expected: cols, got: r.len() });
            }
            entries.extend_from_slice(&r.entries);
        }
        Ok(FieldMatrix { field, rows: rows.len(), cols, entries })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        assert!(r < self.rows && c < self.cols);
        debug_assert!(v < self.field.p);
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> FieldVector {
        assert!(r < self.rows);
        FieldVector {
            field: self.field,
            entries: self.entries[r * self.cols..(r + 1) * self.cols].to_vec(),
        }
    }

    pub fn row_vectors(&self) -> Vec<FieldVector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut out = FieldMatrix::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.entries[c * self.rows + r] = self.entries[r * self.cols + c];
            }
        }
        out
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &FieldMatrix) -> Result<FieldMatrix, GfError> {
        if self.field != other.field {
            return Err(GfError::FieldMismatch(self.field.p, other.field.p));
        }
        if self.cols != other.cols {
            return Err(GfError::LengthMismatch { expected: self.cols, got: other.cols });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(FieldMatrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, entries })
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &FieldMatrix) -> Result<FieldMatrix, GfError> {
        if self.field != other.field {
            return Err(GfError::FieldMismatch(self.field.p, other.field.p));
        }
        if self.cols != other.rows {
            return Err(GfError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = FieldMatrix::zero(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entries[r * self.cols + k];
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.entries[k * other.cols + c];
                    let cur = out.entries[r * other.cols + c];
                    out.entries[r * other.cols + c] = self.field.add(cur, self.field.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    /// Column action `self * v^T`, e.g. a syndrome `H y^T`.
    pub fn mul_col(&self, v: &FieldVector) -> Result<FieldVector, GfError> {
        if self.field != v.field {
            return Err(GfError::FieldMismatch(self.field.p, v.field.p));
        }
        if self.cols != v.len() {
            return Err(GfError::LengthMismatch { expected: self.cols, got: v.len() });
        }
        let entries = (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for c in 0..self.cols {
                    acc = self
                        .field
                        .add(acc, self.field.mul(self.entries[r * self.cols + c], v.entries[c]));
                }
                acc
            })
            .collect();
        Ok(FieldVector { field: self.field, entries })
    }

    /// Row action `v * self`, e.g. encoding a message by a generator matrix.
    pub fn mul_row(&self, v: &FieldVector) -> Result<FieldVector, GfError> {
        if self.field != v.field {
            return Err(GfError::FieldMismatch(self.field.p, v.field.p));
        }
        if self.rows != v.len() {
            return Err(GfError::LengthMismatch { expected: self.rows, got: v.len() });
        }
        let mut entries = vec![0u64; self.cols];
        for r in 0..self.rows {
            let a = v.entries[r];
            if a == 0 {
                continue;
            }
            for c in 0..self.cols {
                entries[c] = self
                    .field
                    .add(entries[c], self.field.mul(a, self.entries[r * self.cols + c]));
            }
        }
        Ok(FieldVector { field: self.field, entries })
    }

    /// Permutes columns: column `i` of the result is column `perm[i]` of `self`.
    pub fn permute_cols(&self, perm: &ColPermutation) -> Result<FieldMatrix, GfError> {
        if perm.len() != self.cols {
            return Err(GfError::LengthMismatch { expected: self.cols, got: perm.len() });
        }
        let mut out = FieldMatrix::zero(self.field, self.rows, self.cols);
        for r in 0..self.rows {
            for (c, &j) in perm.forward.iter().enumerate() {
                out.entries[r * self.cols + c] = self.entries[r * self.cols + j];
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form with deterministic pivoting: columns are
    /// scanned left to right and the pivot is the first row at or below the
    /// current rank with a nonzero entry. Dispatches to a bit-packed
    /// elimination for p = 2.
    pub fn rref(&self) -> Rref {
        if self.field.is_binary() {
            self.rref_packed()
        } else {
            self.rref_scalar()
        }
    }

    /// Scalar-reference elimination; identical output to [`FieldMatrix::rref`].
    pub(crate) fn rref_scalar(&self) -> Rref {
        let mut m = self.clone();
        let f = self.field;
        let mut pivots = Vec::new();
        let mut rank = 0usize;
        for col in 0..m.cols {
            let Some(pivot_row) = (rank..m.rows).find(|&r| m.entries[r * m.cols + col] != 0) else {
                continue;
            };
            m.swap_rows(rank, pivot_row);
            let inv = f.inv(m.entries[rank * m.cols + col]);
            if inv != 1 {
                for c in col..m.cols {
                    let v = m.entries[rank * m.cols + c];
                    m.entries[rank * m.cols + c] = f.mul(v, inv);
                }
            }
            for r in 0..m.rows {
                if r == rank {
                    continue;
                }
                let factor = m.entries[r * m.cols + col];
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let sub = f.mul(factor, m.entries[rank * m.cols + c]);
                    let v = m.entries[r * m.cols + c];
                    m.entries[r * m.cols + c] = f.sub(v, sub);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        Rref { matrix: m, pivots, rank }
    }

    fn rref_packed(&self) -> Rref {
        debug_assert!(self.field.is_binary());
        let words = self.cols.div_ceil(64).max(1);
        let mut data = vec![0u64; self.rows * words];
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.entries[r * self.cols + c] != 0 {
                    data[r * words + c / 64] |= 1u64 << (c % 64);
                }
            }
        }
        let mut pivots = Vec::new();
        let mut rank = 0usize;
        for col in 0..self.cols {
            let (w, b) = (col / 64, 1u64 << (col % 64));
            let Some(pivot_row) = (rank..self.rows).find(|&r| data[r * words + w] & b != 0) else {
                continue;
            };
            if pivot_row != rank {
                for i in 0..words {
                    data.swap(rank * words + i, pivot_row * words + i);
                }
            }
            for r in 0..self.rows {
                if r != rank && data[r * words + w] & b != 0 {
                    for i in 0..words {
                        let v = data[rank * words + i];
                        data[r * words + i] ^= v;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        let mut entries = vec![0u64; self.rows * self.cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                if data[r * words + c / 64] & (1u64 << (c % 64)) != 0 {
                    entries[r * self.cols + c] = 1;
                }
            }
        }
        let matrix = FieldMatrix { field: self.field, rows: self.rows, cols: self.cols, entries };
        Rref { matrix, pivots, rank }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel `{x : self * x^T = 0}`, one row per basis
    /// vector. The basis is the canonical free-column basis of the rref: for
    /// each non-pivot column `j`, the vector with 1 at `j` and `-R[i][j]` at
    /// pivot column `i`. Row count is always `cols - rank`.
    pub fn null_space(&self) -> FieldMatrix {
        let Rref { matrix: r, pivots, rank } = self.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = FieldMatrix::zero(f, free.len(), self.cols);
        for (i, &j) in free.iter().enumerate() {
            out.entries[i * self.cols + j] = 1;
            for (ri, &pc) in pivots.iter().enumerate().take(rank) {
                let v = r.entries[ri * self.cols + j];
                out.entries[i * self.cols + pc] = f.neg(v);
            }
        }
        out
    }

    /// Standard form `[I_k | A]` of a full-row-rank matrix, together with the
    /// column permutation that was applied. Returns the identity permutation
    /// when the matrix is already standard.
    pub fn standard_form(&self) -> Result<(FieldMatrix, ColPermutation), GfError> {
        let Rref { matrix: r, pivots, rank } = self.rref();
        if rank < self.rows {
            return Err(GfError::RankDeficient);
        }
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut forward = pivots.clone();
        forward.extend((0..self.cols).filter(|&c| !is_pivot[c]));
        let perm = ColPermutation { forward };
        let standard = r.permute_cols(&perm)?;
        Ok((standard, perm))
    }
}

impl fmt::Display for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let parts: Vec<String> =
                (0..self.cols).map(|c| self.entries[r * self.cols + c].to_string()).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}
