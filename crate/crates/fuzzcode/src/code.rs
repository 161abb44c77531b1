//! Linear codes `[n, k]` over GF(p) with canonical bases.
//!
//! A [`LinearCode`] stores its basis in reduced row echelon form, so two
//! values compare equal exactly when they are the same subspace. The parity
//! check is cached in the same canonical form (the rref of the kernel basis);
//! as a consequence the dual of a code is again canonical, `dual(dual(C))`
//! is bit-for-bit `C`, and a self-dual code has `parity == basis`.

use thiserror::Error;

use crate::gf::{FieldMatrix, FieldSpec, FieldVector, GfError};
use crate::DEFAULT_DISTANCE_CAP;

/// Error raised by code-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error("enumerating {needed} codewords exceeds the cap of {cap}")]
    TooLarge { needed: u128, cap: u128 },
    #[error("the zero code has no nonzero codeword")]
    ZeroCode,
}

/// Headline parameters of a code, with enumerative fields left `None` when
/// the codeword count exceeds the enumeration cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSummary {
    pub n: usize,
    pub k: usize,
    pub min_distance: Option<usize>,
    pub error_capability: Option<usize>,
    pub self_orthogonal: bool,
    pub self_dual: bool,
}

/// An `[n, k]` linear code over GF(p).
///
/// The zero code (`k = 0`) and the full space (`k = n`) are both legal; the
/// zero code's basis is a 0-row matrix and its dual is the full space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    field: FieldSpec,
    n: usize,
    basis: FieldMatrix,
    parity: FieldMatrix,
}

impl LinearCode {
    /// Builds the span of `rows`. Duplicate or dependent rows are absorbed by
    /// row reduction; they are not an error.
    pub fn from_rows(field: FieldSpec, n: usize, rows: &[FieldVector]) -> Result<Self, CodeError> {
        let m = FieldMatrix::from_rows(field, n, rows)?;
        Ok(Self::from_matrix(&m))
    }

    /// Builds the row space of `m`.
    pub fn from_matrix(m: &FieldMatrix) -> Self {
        let r = m.rref();
        let mut basis = r.matrix;
        if r.rank < basis.rows() {
            // Drop the zero rows left below the pivot rows.
            let rows: Vec<FieldVector> = (0..r.rank).map(|i| basis.row(i)).collect();
            basis = FieldMatrix::from_rows(m.field(), m.cols(), &rows).expect("rows validated");
        }
        let parity = basis.null_space().rref().matrix;
        LinearCode { field: m.field(), n: m.cols(), basis, parity }
    }

    /// The zero code `{0}` of length `n`.
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Self::from_matrix(&FieldMatrix::zero(field, 0, n))
    }

    /// The full space GF(p)^n as a code.
    pub fn full(field: FieldSpec, n: usize) -> Self {
        Self::from_matrix(&FieldMatrix::identity(field, n))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Canonical (rref) generator matrix, `dim x n`.
    pub fn basis(&self) -> &FieldMatrix {
        &self.basis
    }

    /// Canonical (rref) parity-check matrix, `(n - dim) x n`.
    pub fn parity(&self) -> &FieldMatrix {
        &self.parity
    }

    fn check_word(&self, x: &FieldVector) -> Result<(), CodeError> {
        if x.field() != self.field {
            return Err(GfError::FieldMismatch(self.field.modulus(), x.field().modulus()).into());
        }
        if x.len() != self.n {
            return Err(GfError::LengthMismatch { expected: self.n, got: x.len() }.into());
        }
        Ok(())
    }

    /// Membership test via the parity check.
    pub fn contains(&self, x: &FieldVector) -> Result<bool, CodeError> {
        self.check_word(x)?;
        Ok(self.parity.mul_col(x)?.is_zero())
    }

    /// Encodes a length-`dim` message as `m * G`.
    pub fn encode(&self, message: &FieldVector) -> Result<FieldVector, CodeError> {
        if message.field() != self.field {
            return Err(GfError::FieldMismatch(self.field.modulus(), message.field().modulus()).into());
        }
        Ok(self.basis.mul_row(message)?)
    }

    /// Syndrome `H y^T` with respect to the canonical parity check.
    pub fn syndrome(&self, y: &FieldVector) -> Result<FieldVector, CodeError> {
        self.check_word(y)?;
        Ok(self.parity.mul_col(y)?)
    }

    /// The dual code under the standard inner product.
    pub fn dual(&self) -> LinearCode {
        // The cached parity is already the canonical basis of the dual, and
        // the dual's canonical parity is this code's basis.
        LinearCode {
            field: self.field,
            n: self.n,
            basis: self.parity.clone(),
            parity: self.basis.clone(),
        }
    }

    /// Number of codewords `p^dim` as a `u128`, or `None` if it overflows.
    pub fn codeword_count(&self) -> Option<u128> {
        let p = self.field.modulus() as u128;
        let mut acc: u128 = 1;
        for _ in 0..self.dim() {
            acc = acc.checked_mul(p)?;
        }
        Some(acc)
    }

    /// Minimum Hamming distance by full codeword enumeration, with the
    /// default cap of [`DEFAULT_DISTANCE_CAP`] codewords.
    pub fn min_distance(&self) -> Result<usize, CodeError> {
        self.min_distance_capped(DEFAULT_DISTANCE_CAP)
    }

    /// Minimum distance with an explicit enumeration cap.
    pub fn min_distance_capped(&self, cap: u128) -> Result<usize, CodeError> {
        let k = self.dim();
        if k == 0 {
            return Err(CodeError::ZeroCode);
        }
        // Keep the mask arithmetic below in u64 territory.
        let cap = cap.min(1 << 63);
        let needed = self.codeword_count().ok_or(CodeError::TooLarge { needed: u128::MAX, cap })?;
        if needed > cap {
            return Err(CodeError::TooLarge { needed, cap });
        }
        if self.field.is_binary() {
            Ok(self.min_weight_gray())
        } else {
            Ok(self.min_weight_odometer())
        }
    }

    /// Gray-code walk over all nonzero binary messages; each step XORs one
    /// packed basis row into the running codeword.
    fn min_weight_gray(&self) -> usize {
        let k = self.dim();
        let words = self.n.div_ceil(64);
        let rows: Vec<Vec<u64>> = (0..k)
            .map(|r| {
                let mut w = vec![0u64; words];
                for c in 0..self.n {
                    if self.basis.get(r, c) != 0 {
                        w[c / 64] |= 1 << (c % 64);
                    }
                }
                w
            })
            .collect();
        let mut cw = vec![0u64; words];
        let mut best = usize::MAX;
        for i in 1u64..(1u64 << k) {
            let flip = i.trailing_zeros() as usize;
            let mut weight = 0usize;
            for (w, r) in cw.iter_mut().zip(&rows[flip]) {
                *w ^= r;
                weight += w.count_ones() as usize;
            }
            best = best.min(weight);
        }
        best
    }

    /// Mixed-radix odometer over all messages for p > 2. Rolling a digit
    /// over adds its row p times in total, which is a net no-op, so each
    /// increment only ever adds rows.
    fn min_weight_odometer(&self) -> usize {
        let k = self.dim();
        let p = self.field.modulus();
        let rows: Vec<FieldVector> = (0..k).map(|r| self.basis.row(r)).collect();
        let mut digits = vec![0u64; k];
        let mut cw = vec![0u64; self.n];
        let mut best = usize::MAX;
        loop {
            let mut pos = 0;
            loop {
                if pos == k {
                    return best;
                }
                for (c, e) in cw.iter_mut().zip(rows[pos].entries()) {
                    *c = self.field.add(*c, *e);
                }
                digits[pos] += 1;
                if digits[pos] < p {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            best = best.min(cw.iter().filter(|&&c| c != 0).count());
        }
    }

    /// Largest number of errors always correctable: `(d - 1) / 2`.
    pub fn error_capability(&self) -> Result<usize, CodeError> {
        Ok((self.min_distance()? - 1) / 2)
    }

    /// Whether every codeword of `self` lies in `other`.
    pub fn is_subcode(&self, other: &LinearCode) -> Result<bool, CodeError> {
        if self.field != other.field {
            return Err(GfError::FieldMismatch(self.field.modulus(), other.field.modulus()).into());
        }
        if self.n != other.n {
            return Err(GfError::LengthMismatch { expected: other.n, got: self.n }.into());
        }
        for r in 0..self.dim() {
            if !other.contains(&self.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `C` is contained in its own dual (all basis inner products
    /// vanish, including each row with itself).
    pub fn is_self_orthogonal(&self) -> bool {
        for i in 0..self.dim() {
            let ri = self.basis.row(i);
            for j in i..self.dim() {
                if ri.dot(&self.basis.row(j)).expect("same space") != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_self_dual(&self) -> bool {
        self.is_self_orthogonal() && 2 * self.dim() == self.n
    }

    /// Parameter summary with the default enumeration cap.
    pub fn summary(&self) -> CodeSummary {
        self.summary_capped(DEFAULT_DISTANCE_CAP)
    }

    pub fn summary_capped(&self, cap: u128) -> CodeSummary {
        let min_distance = self.min_distance_capped(cap).ok();
        CodeSummary {
            n: self.n,
            k: self.dim(),
            min_distance,
            error_capability: min_distance.map(|d| (d - 1) / 2),
            self_orthogonal: self.is_self_orthogonal(),
            self_dual: self.is_self_dual(),
        }
    }
}
