//! A catalog of named codes and fuzzy chains used throughout the tests and
//! the command-line tool: Hamming, extended Hamming, simplex, the [24,12,8]
//! Golay code, the binary Reed-Muller family, and ready-made fuzzy chains
//! built on top of them.

use std::collections::HashMap;

use thiserror::Error;

use crate::code::{CodeError, LinearCode};
use crate::duality::{self, DualityError};
use crate::fuzzy::{FuzzyError, FuzzyLinearCode};
use crate::gf::{FieldMatrix, FieldSpec, FieldVector, GfError};
use crate::rational::Rational;

/// Error raised by catalog constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZooError {
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
    #[error(transparent)]
    Duality(#[from] DualityError),
    #[error("invalid parameters: {0}")]
    BadParameters(String),
}

/// Largest supported Reed-Muller `m`: lengths up to 2^10.
pub const MAX_RM_M: usize = 10;

fn gf2() -> FieldSpec {
    FieldSpec::new(2).expect("2 is prime")
}

fn bit_rows(rows: &[&str]) -> FieldMatrix {
    let field = gf2();
    let cols = rows[0].len();
    let vectors: Vec<FieldVector> = rows
        .iter()
        .map(|s| {
            debug_assert_eq!(s.len(), cols);
            let entries = s.chars().map(|c| c.to_digit(10).expect("binary digit") as u64).collect();
            FieldVector::new(field, entries).expect("valid residues")
        })
        .collect();
    FieldMatrix::from_rows(field, cols, &vectors).expect("consistent rows")
}

const HAMMING_7_4_ROWS: [&str; 4] = ["1000011", "0100101", "0010110", "0001111"];

const EXT_HAMMING_8_4_ROWS: [&str; 4] = ["10000111", "01001011", "00101101", "00011110"];

const SIMPLEX_7_3_ROWS: [&str; 3] = ["0001111", "0110011", "1010101"];

const GOLAY_24_12_ROWS: [&str; 12] = [
    "100000000000011111111111",
    "010000000000111011100010",
    "001000000000110111000101",
    "000100000000101110001011",
    "000010000000111100010110",
    "000001000000111000101101",
    "000000100000110001011011",
    "000000010000100010110111",
    "000000001000100101101110",
    "000000000100101011011100",
    "000000000010110110111000",
    "000000000001101101110001",
];

/// The generator matrix of the [7,4,3] Hamming code, rows `[I_4 | A]`.
pub fn hamming_7_4_generator() -> FieldMatrix {
    bit_rows(&HAMMING_7_4_ROWS)
}

/// The [7,4,3] Hamming code.
pub fn hamming_7_4() -> LinearCode {
    LinearCode::from_matrix(&hamming_7_4_generator())
}

/// The generator matrix of the [8,4,4] extended Hamming code.
pub fn ext_hamming_8_4_generator() -> FieldMatrix {
    bit_rows(&EXT_HAMMING_8_4_ROWS)
}

/// The [8,4,4] extended Hamming code. Self-dual.
pub fn ext_hamming_8_4() -> LinearCode {
    LinearCode::from_matrix(&ext_hamming_8_4_generator())
}

/// The generator matrix of the [7,3,4] simplex code.
pub fn simplex_7_3_generator() -> FieldMatrix {
    bit_rows(&SIMPLEX_7_3_ROWS)
}

/// The [7,3,4] simplex code: the dual of the Hamming code.
pub fn simplex_7_3() -> LinearCode {
    LinearCode::from_matrix(&simplex_7_3_generator())
}

/// The generator matrix `[I_12 | R]` of the [24,12,8] extended Golay code.
/// `R` has an all-ones first column below an all-ones first row (with zero
/// corner), and its lower-right 11x11 block is the circulant of 11011100010.
pub fn golay_24_12_generator() -> FieldMatrix {
    bit_rows(&GOLAY_24_12_ROWS)
}

/// The [24,12,8] extended Golay code. Self-dual and doubly even.
pub fn golay_24_12() -> LinearCode {
    LinearCode::from_matrix(&golay_24_12_generator())
}

/// The recursive generator matrix of the Reed-Muller code RM(r, m) on the
/// (u, u+v) construction: `G(0,m)` is all ones, `G(m,m)` is the identity,
/// and otherwise `G(r,m) = [G(r,m-1) G(r,m-1); 0 G(r-1,m-1)]`. Rows are
/// independent, so the row count is `sum_{i<=r} C(m,i)`.
pub fn reed_muller_generator(r: usize, m: usize) -> Result<FieldMatrix, ZooError> {
    if r > m || m > MAX_RM_M {
        return Err(ZooError::BadParameters(format!(
            "reed-muller orders need r <= m <= {MAX_RM_M}, got r={r} m={m}"
        )));
    }
    let mut memo: HashMap<(usize, usize), FieldMatrix> = HashMap::new();
    Ok(rm_recurse(r, m, &mut memo))
}

fn rm_recurse(r: usize, m: usize, memo: &mut HashMap<(usize, usize), FieldMatrix>) -> FieldMatrix {
    if let Some(hit) = memo.get(&(r, m)) {
        return hit.clone();
    }
    let field = gf2();
    let n = 1usize << m;
    let out = if r == 0 {
        FieldMatrix::new(field, 1, n, vec![1; n]).expect("all-ones row")
    } else if r == m {
        FieldMatrix::identity(field, n)
    } else {
        let a = rm_recurse(r, m - 1, memo);
        let b = rm_recurse(r - 1, m - 1, memo);
        let half = 1usize << (m - 1);
        let mut entries = Vec::with_capacity((a.rows() + b.rows()) * n);
        for i in 0..a.rows() {
            for j in 0..half {
                entries.push(a.get(i, j));
            }
            for j in 0..half {
                entries.push(a.get(i, j));
            }
        }
        for i in 0..b.rows() {
            entries.resize(entries.len() + half, 0);
            for j in 0..half {
                entries.push(b.get(i, j));
            }
        }
        FieldMatrix::new(field, a.rows() + b.rows(), n, entries).expect("consistent block shape")
    };
    memo.insert((r, m), out.clone());
    out
}

/// The Reed-Muller code RM(r, m), `0 <= r <= m <= 10`.
pub fn reed_muller(r: usize, m: usize) -> Result<LinearCode, ZooError> {
    Ok(LinearCode::from_matrix(&reed_muller_generator(r, m)?))
}

/// `C(m, i)` as u128; small arguments only.
pub fn binomial(m: usize, i: usize) -> u128 {
    if i > m {
        return 0;
    }
    let mut out: u128 = 1;
    for j in 0..i.min(m - i) {
        out = out * (m - j) as u128 / (j + 1) as u128;
    }
    out
}

/// Dimension of RM(r, m): the partial binomial sum.
pub fn rm_dimension(r: usize, m: usize) -> u128 {
    (0..=r).map(|i| binomial(m, i)).sum()
}

/// Structural report on the Reed-Muller family at a fixed `m`: dimensions,
/// nesting, duality, and minimum weights (each weight check is skipped when
/// the codeword count exceeds `cap`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RmReport {
    pub m: usize,
    /// `(r, dim, expected dim)` for each order.
    pub dimensions: Vec<(usize, usize, u128)>,
    /// `RM(r,m) ⊂ RM(r+1,m)` strictly, for each consecutive pair.
    pub nesting_ok: bool,
    /// `RM(r,m)^⊥ = RM(m-1-r, m)` for all r (the dual of RM(m,m) is zero).
    pub duality_ok: bool,
    /// `(r, checked)` where `checked = Some(d == 2^(m-r))` or `None` if the
    /// enumeration was skipped over the cap.
    pub min_weights: Vec<(usize, Option<bool>)>,
}

impl RmReport {
    /// All performed checks passed (skipped weight checks do not fail).
    pub fn passed(&self) -> bool {
        self.dimensions.iter().all(|&(_, got, want)| got as u128 == want)
            && self.nesting_ok
            && self.duality_ok
            && self.min_weights.iter().all(|&(_, ok)| ok != Some(false))
    }
}

/// Verifies the Reed-Muller family at `m`: dimensions `sum C(m,i)`, strict
/// nesting in `r`, the duality `RM(r,m)^⊥ = RM(m-1-r,m)`, and minimum
/// weights `2^(m-r)` for every order whose codeword count fits under `cap`.
pub fn rm_properties(m: usize, cap: u128) -> Result<RmReport, ZooError> {
    if m > MAX_RM_M {
        return Err(ZooError::BadParameters(format!("m must be at most {MAX_RM_M}, got {m}")));
    }
    let codes: Vec<LinearCode> =
        (0..=m).map(|r| reed_muller(r, m)).collect::<Result<_, _>>()?;
    let dimensions: Vec<(usize, usize, u128)> =
        (0..=m).map(|r| (r, codes[r].dim(), rm_dimension(r, m))).collect();
    let mut nesting_ok = true;
    for r in 0..m {
        if !(codes[r].is_subcode(&codes[r + 1])? && codes[r].dim() < codes[r + 1].dim()) {
            nesting_ok = false;
        }
    }
    let mut duality_ok = true;
    for r in 0..=m {
        let dual = codes[r].dual();
        let expect = if r == m {
            LinearCode::zero(gf2(), 1 << m)
        } else {
            codes[m - 1 - r].clone()
        };
        if dual != expect {
            duality_ok = false;
        }
    }
    let mut min_weights = Vec::new();
    for r in 0..=m {
        let fits = codes[r].codeword_count().map_or(false, |count| count <= cap);
        let checked = if fits {
            Some(codes[r].min_distance_capped(cap)? == 1 << (m - r))
        } else {
            None
        };
        min_weights.push((r, checked));
    }
    Ok(RmReport { m, dimensions, nesting_ok, duality_ok, min_weights })
}

/// Number of caller-chosen levels for [`fuzzy_reed_muller`] at a given `m`:
/// the orders `r = 0, ..., ceil(m/2) - 1`, minus one for odd `m` where the
/// middle order is pinned to level 1/2.
pub fn fuzzy_rm_user_levels(m: usize) -> usize {
    (m + 1) / 2 - if m % 2 == 1 { 1 } else { 0 }
}

/// The fuzzy Reed-Muller chain at `m >= 1`: cuts
/// `{0} ⊂ RM(0,m) ⊂ RM(1,m) ⊂ ... ⊂ RM(m,m) = V`, with levels mirrored
/// through duality. The lower orders `r < ceil(m/2)` (for odd `m`, the
/// middle order sits at exactly 1/2) take levels `alphas`, all strictly
/// between 1/2 and 1 and strictly decreasing; each upper order `m-1-r` then
/// sits at `1 - alpha_r`. With `alphas = None` the default
/// `alpha_r = 1 - dim(RM(r,m)) / 2^m` is used. Odd `m` yields a fuzzy
/// self-dual chain; even `m` a fuzzy self-orthogonal one.
pub fn fuzzy_reed_muller(m: usize, alphas: Option<&[Rational]>) -> Result<FuzzyLinearCode, ZooError> {
    if m == 0 || m > MAX_RM_M {
        return Err(ZooError::BadParameters(format!("m must be in 1..={MAX_RM_M}, got {m}")));
    }
    let h = fuzzy_rm_user_levels(m);
    let n = 1u64 << m;
    let owned: Vec<Rational>;
    let alphas: &[Rational] = match alphas {
        Some(list) => list,
        None => {
            owned = (0..h)
                .map(|r| {
                    let dim = rm_dimension(r, m) as u64;
                    Rational::new(n - dim, n).expect("dim < n")
                })
                .collect();
            &owned
        }
    };
    if alphas.len() != h {
        return Err(ZooError::BadParameters(format!(
            "m={m} needs exactly {h} levels, got {}",
            alphas.len()
        )));
    }
    for (i, alpha) in alphas.iter().enumerate() {
        if *alpha <= Rational::half() || alpha.is_one() {
            return Err(ZooError::BadParameters(format!(
                "level {alpha} at position {i} is not strictly between 1/2 and 1"
            )));
        }
        if i > 0 && alphas[i] >= alphas[i - 1] {
            return Err(ZooError::BadParameters(format!(
                "level {} at position {} does not decrease",
                alphas[i], i
            )));
        }
    }
    let mut chain = vec![(Rational::one(), LinearCode::zero(gf2(), 1 << m))];
    for (r, &alpha) in alphas.iter().enumerate() {
        chain.push((alpha, reed_muller(r, m)?));
    }
    if m % 2 == 1 {
        chain.push((Rational::half(), reed_muller((m - 1) / 2, m)?));
    }
    for (r, &alpha) in alphas.iter().enumerate().rev() {
        chain.push((alpha.complement(), reed_muller(m - 1 - r, m)?));
    }
    Ok(FuzzyLinearCode::from_cuts(chain)?)
}

/// The two-level chain on GF(2)^4: `{0}` at 1 and `<1010, 0101>` at 1/2.
/// The smallest fuzzy self-dual example.
pub fn fuzzy_v4() -> FuzzyLinearCode {
    let field = gf2();
    let rows = bit_rows(&["1010", "0101"]);
    let code = LinearCode::from_matrix(&rows);
    FuzzyLinearCode::from_cuts(vec![
        (Rational::one(), LinearCode::zero(field, 4)),
        (Rational::half(), code),
    ])
    .expect("strictly nested")
}

/// The collapsed chain on the extended Hamming code: `{0}` at 1 and the code
/// itself at 1/2. Fuzzy self-dual.
pub fn fuzzy_hamming_b() -> FuzzyLinearCode {
    let c = ext_hamming_8_4();
    let rows = ext_hamming_8_4_generator().row_vectors();
    let alphas = vec![Rational::one(); 4];
    duality::build_fuzzy_self_dual(&c, &rows, &alphas).expect("ext-Hamming is self-dual")
}

/// The full dimension-parameterized chain on the extended Hamming code:
/// levels `1, 7/8, 3/4, 5/8, 1/2, 3/8, 1/4, 1/8` over the flag spanned by
/// the generator rows in order. Fuzzy self-dual.
pub fn fuzzy_hamming_d() -> FuzzyLinearCode {
    let c = ext_hamming_8_4();
    let rows = ext_hamming_8_4_generator().row_vectors();
    duality::dimension_parameterized(&c, &rows).expect("ext-Hamming is self-dual")
}

/// The simplex/Hamming chain on GF(2)^7 at levels `i/7`. Fuzzy
/// self-orthogonal but not fuzzy self-dual.
pub fn fuzzy_simplex_e() -> FuzzyLinearCode {
    duality::fuzzy_simplex_hamming()
}

/// The dimension-parameterized chain on the [24,12,8] Golay code: levels
/// `1, 23/24, ..., 13/24, 1/2, 11/24, ..., 1/24` over the flag spanned by
/// the generator rows in order. Fuzzy self-dual.
pub fn fuzzy_golay() -> FuzzyLinearCode {
    let c = golay_24_12();
    let rows = golay_24_12_generator().row_vectors();
    duality::dimension_parameterized(&c, &rows).expect("Golay is self-dual")
}
