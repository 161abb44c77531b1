//! Fuzzy duality: orthogonal chains, fuzzy duals, and self-dual constructions.
//!
//! Two fuzzy linear codes are orthogonal when their images are complements of
//! one another and every cut of one is the dual of the mirrored cut of the
//! other. The fuzzy dual, when it exists, is unique and an involution. A
//! self-dual linear code `C` of length `2k` yields a fuzzy self-dual chain by
//! threading a flag of subcodes `{0} = S_0 ⊂ ... ⊂ S_{k-1} ⊂ C` and mirroring
//! it through duals: `C ⊂ S_{k-1}^⊥ ⊂ ... ⊂ S_0^⊥ = V`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::code::{CodeError, LinearCode};
use crate::fuzzy::{FuzzyError, FuzzyLinearCode};
use crate::gf::{FieldSpec, FieldVector, GfError};
use crate::rational::Rational;

/// Error raised by duality operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
    #[error("no orthogonal fuzzy code exists: level {gamma} has no dual partner")]
    DualDoesNotExist { gamma: Rational },
    #[error("the code is not self-dual")]
    NotSelfDual,
    #[error("the code is not self-orthogonal")]
    NotSelfOrthogonal,
    #[error("the zero code cannot anchor a fuzzy embedding")]
    ZeroCode,
    #[error("basis_order is not an ordered basis of the code")]
    NotABasis,
    #[error("invalid alpha list: {0}")]
    BadAlphas(String),
    #[error("operands live in different spaces")]
    SpaceMismatch,
}

/// Whether `B` is the orthogonal fuzzy code of `A`: the image of `B` is the
/// complement set `{1 - t : t in image(A)}`, and for every level `t` drawn
/// from `image(A)` and the endpoints 0 and 1, the cut of `B` at `1 - t`
/// equals the dual of the cut of `A` at `t`. An empty cut on either side
/// fails the check.
pub fn is_orthogonal(a: &FuzzyLinearCode, b: &FuzzyLinearCode) -> Result<bool, DualityError> {
    if a.field() != b.field() || a.n() != b.n() {
        return Err(DualityError::SpaceMismatch);
    }
    let image_a: BTreeSet<Rational> = a.image().into_iter().collect();
    let image_b: BTreeSet<Rational> = b.image().into_iter().collect();
    let mirrored: BTreeSet<Rational> = image_a.iter().map(|t| t.complement()).collect();
    if image_b != mirrored {
        return Ok(false);
    }
    let mut probes = image_a;
    probes.insert(Rational::zero());
    probes.insert(Rational::one());
    for t in probes {
        let Some(ca) = a.cut(t) else {
            return Ok(false);
        };
        let Some(cb) = b.cut(t.complement()) else {
            return Ok(false);
        };
        if cb != ca.dual() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The unique fuzzy code orthogonal to `A`, if one exists.
///
/// Existence requires the image of `A` to contain more than one value,
/// attain both endpoints 0 and 1, and have a cut set closed under duality.
/// The offending level is reported otherwise. The construction is an
/// involution: the dual of the dual is `A` itself.
pub fn fuzzy_dual(a: &FuzzyLinearCode) -> Result<FuzzyLinearCode, DualityError> {
    let image: Vec<Rational> = a.image();
    if image.len() <= 1 {
        return Err(DualityError::DualDoesNotExist { gamma: image[0] });
    }
    if !image.contains(&Rational::one()) {
        // The orthogonal code would need an empty cut to mirror level 0.
        return Err(DualityError::DualDoesNotExist { gamma: Rational::one() });
    }
    if !image.contains(&Rational::zero()) {
        return Err(DualityError::DualDoesNotExist { gamma: Rational::zero() });
    }
    let cuts: Vec<(Rational, LinearCode)> = image
        .iter()
        .map(|&t| (t, a.cut(t).expect("levels in the image have nonempty cuts")))
        .collect();
    for (gamma, cg) in &cuts {
        if !cuts.iter().any(|(_, ce)| &ce.dual() == cg) {
            return Err(DualityError::DualDoesNotExist { gamma: *gamma });
        }
    }
    // Chain of the dual: level 1 - t carries the dual of the cut at t. The
    // level-0 entry of the image yields the top (level 1) cut; level 1 of the
    // image mirrors to the implicit 0 level and is skipped.
    let mut chain: Vec<(Rational, LinearCode)> = Vec::new();
    for (t, ct) in cuts.iter().rev() {
        if t.is_one() {
            continue;
        }
        chain.push((t.complement(), ct.dual()));
    }
    Ok(FuzzyLinearCode::from_cuts(chain)?)
}

/// Whether `A` is fuzzy self-orthogonal: the image has more than one value
/// and for every attained level `α`, the cut at `1 - α` is nonempty with
/// dual equal to the cut at `α`.
pub fn is_fuzzy_self_orthogonal(a: &FuzzyLinearCode) -> bool {
    let image = a.image();
    if image.len() <= 1 {
        return false;
    }
    for alpha in image {
        let Some(mirror) = a.cut(alpha.complement()) else {
            return false;
        };
        let Some(ca) = a.cut(alpha) else {
            return false;
        };
        if mirror.dual() != ca {
            return false;
        }
    }
    true
}

/// Whether `A` is fuzzy self-dual: fuzzy self-orthogonal, with 1/2 attained
/// and the cut at 1/2 a self-dual code.
pub fn is_fuzzy_self_dual(a: &FuzzyLinearCode) -> bool {
    if !is_fuzzy_self_orthogonal(a) {
        return false;
    }
    if !a.image().contains(&Rational::half()) {
        return false;
    }
    match a.cut(Rational::half()) {
        Some(c) => c.is_self_dual(),
        None => false,
    }
}

/// Builds a fuzzy self-dual code from a self-dual code `C` of length `2k`.
///
/// `basis_order` fixes the flag of subcodes `S_i = span of the first i rows`;
/// `alphas` assigns levels `α_0 >= α_1 >= ... >= α_{k-1}`, all in `(1/2, 1]`.
/// The chain is `S_0 ⊂ ... ⊂ S_{k-1} ⊂ C ⊂ S_{k-1}^⊥ ⊂ ... ⊂ S_0^⊥` at
/// levels `α_0, ..., α_{k-1}, 1/2, 1-α_{k-1}, ..., 1-α_0`, with zero levels
/// left implicit. Repeated alphas are merged: each run keeps its smallest
/// cut, and the mirrored level keeps that cut's dual, so the result is always
/// fuzzy self-dual.
pub fn build_fuzzy_self_dual(
    c: &LinearCode,
    basis_order: &[FieldVector],
    alphas: &[Rational],
) -> Result<FuzzyLinearCode, DualityError> {
    if !c.is_self_dual() {
        return Err(DualityError::NotSelfDual);
    }
    let k = c.dim();
    if basis_order.len() != k {
        return Err(DualityError::NotABasis);
    }
    for row in basis_order {
        if !c.contains(row)? {
            return Err(DualityError::NotABasis);
        }
    }
    let all = LinearCode::from_rows(c.field(), c.n(), basis_order)?;
    if all.dim() != k {
        return Err(DualityError::NotABasis);
    }
    if alphas.len() != k {
        return Err(DualityError::BadAlphas(format!("expected {k} levels, got {}", alphas.len())));
    }
    for (i, alpha) in alphas.iter().enumerate() {
        if *alpha <= Rational::half() {
            return Err(DualityError::BadAlphas(format!("alpha {alpha} at position {i} is not above 1/2")));
        }
        if i > 0 && alphas[i] > alphas[i - 1] {
            return Err(DualityError::BadAlphas(format!(
                "alpha {} at position {} exceeds its predecessor",
                alphas[i], i
            )));
        }
    }

    // First index of each run of equal alphas; runs keep their smallest cut.
    let mut picks: Vec<(Rational, usize)> = Vec::new();
    for (i, &alpha) in alphas.iter().enumerate() {
        if picks.last().map_or(true, |&(prev, _)| alpha < prev) {
            picks.push((alpha, i));
        }
    }

    let mut chain: Vec<(Rational, LinearCode)> = Vec::new();
    for &(alpha, i) in &picks {
        chain.push((alpha, LinearCode::from_rows(c.field(), c.n(), &basis_order[..i])?));
    }
    chain.push((Rational::half(), c.clone()));
    for &(alpha, i) in picks.iter().rev() {
        if alpha.is_one() {
            continue;
        }
        let s_i = LinearCode::from_rows(c.field(), c.n(), &basis_order[..i])?;
        chain.push((alpha.complement(), s_i.dual()));
    }
    Ok(FuzzyLinearCode::from_cuts(chain)?)
}

/// [`build_fuzzy_self_dual`] with the dimension-parameterized levels
/// `α_i = 1 - dim(S_i) / n = 1 - i / n`.
pub fn dimension_parameterized(
    c: &LinearCode,
    basis_order: &[FieldVector],
) -> Result<FuzzyLinearCode, DualityError> {
    let n = c.n() as u64;
    let alphas: Vec<Rational> = (0..c.dim() as u64)
        .map(|i| Rational::new(n - i, n).expect("i < n"))
        .collect();
    build_fuzzy_self_dual(c, basis_order, &alphas)
}

/// Embeds a self-orthogonal code `C` (with `0 < dim C <= n/2`) into the
/// 4-level chain `{0} ⊂ C ⊂ C^⊥ ⊂ V` at levels `1, 1 - k/n, k/n` and the
/// implicit 0. When `C` is self-dual the middle levels coincide and the
/// chain collapses to three level sets.
pub fn embed_self_orthogonal(c: &LinearCode) -> Result<FuzzyLinearCode, DualityError> {
    if c.dim() == 0 {
        return Err(DualityError::ZeroCode);
    }
    if !c.is_self_orthogonal() {
        return Err(DualityError::NotSelfOrthogonal);
    }
    let n = c.n() as u64;
    let k = c.dim() as u64;
    let lo = Rational::new(k, n).expect("k <= n");
    let hi = lo.complement();
    let mut chain = vec![(Rational::one(), LinearCode::zero(c.field(), c.n()))];
    if lo == hi {
        chain.push((Rational::half(), c.clone()));
    } else {
        chain.push((hi, c.clone()));
        chain.push((lo, c.dual()));
    }
    Ok(FuzzyLinearCode::from_cuts(chain)?)
}

/// The simplex/Hamming chain on GF(2)^7: the flag inside the simplex code
/// continued through the duals,
/// `{0} ⊂ S_1 ⊂ S_2 ⊂ simplex ⊂ hamming ⊂ S_2^⊥ ⊂ S_1^⊥ ⊂ V`,
/// at levels `1, 6/7, 5/7, 4/7, 3/7, 2/7, 1/7` and the implicit 0. The
/// result is fuzzy self-orthogonal but not fuzzy self-dual.
pub fn fuzzy_simplex_hamming() -> FuzzyLinearCode {
    let field = FieldSpec::new(2).expect("2 is prime");
    let bits = |s: &str| {
        let entries = s.chars().map(|c| c.to_digit(10).expect("binary digit") as u64).collect();
        FieldVector::new(field, entries).expect("valid residues")
    };
    let s1 = bits("0001111");
    let s2 = bits("0110011");
    let s3 = bits("1010101");
    let level = |i: u64| Rational::new(7 - i, 7).expect("i <= 7");
    let span = |rows: &[FieldVector]| LinearCode::from_rows(field, 7, rows).expect("valid rows");
    let sub1 = span(&[s1.clone()]);
    let sub2 = span(&[s1.clone(), s2.clone()]);
    let simplex = span(&[s1, s2, s3]);
    let chain = vec![
        (level(0), LinearCode::zero(field, 7)),
        (level(1), sub1.clone()),
        (level(2), sub2.clone()),
        (level(3), simplex.clone()),
        (level(4), simplex.dual()),
        (level(5), sub2.dual()),
        (level(6), sub1.dual()),
    ];
    FuzzyLinearCode::from_cuts(chain).expect("chain is strictly nested")
}
