//! Fuzzy linear codes: membership functions whose upper cuts are linear codes.
//!
//! A fuzzy linear code is stored as a strictly nested chain of cuts
//! `C_0 ⊂ C_1 ⊂ ... ⊂ C_{m-1}` with strictly decreasing positive levels
//! `α_0 > α_1 > ... > α_{m-1}`. The membership of a vector is the level of
//! the smallest cut containing it, and 0 outside the largest cut. The chain
//! is realized by `K = dim C_{m-1}` master rows whose prefixes span the cuts;
//! the constructor re-derives these rows canonically from the cut bases, so
//! structural equality compares canonical forms.
//!
//! [`LevelMap`] is the explicit counterpart: a total table of membership
//! values over all `p^n` vectors, used by the pointwise axiom checker, the
//! non-closed set operations (union, extension sum), and the oracles.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::code::{CodeError, LinearCode};
use crate::gf::{FieldMatrix, FieldSpec, FieldVector, GfError};
use crate::rational::Rational;
use crate::DEFAULT_ENUM_CAP;

/// Error raised by fuzzy-code operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FuzzyError {
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("a fuzzy linear code needs at least one level")]
    EmptyChain,
    #[error("level {0} is not a valid membership level (must be positive)")]
    InvalidLevel(Rational),
    #[error("levels must be strictly decreasing (violated at position {0})")]
    LevelsNotStrict(usize),
    #[error("cut dimensions must be strictly increasing (violated at position {0})")]
    DimsNotStrict(usize),
    #[error("declared dimensions need {expected} master rows, got {got}")]
    MasterRowCount { expected: usize, got: usize },
    #[error("master rows are linearly dependent")]
    MasterRowsDependent,
    #[error("cut at position {0} is not strictly contained in its successor")]
    NotNested(usize),
    #[error("operands live in different spaces")]
    SpaceMismatch,
    #[error("enumerating {needed} vectors exceeds the cap of {cap}")]
    TooLarge { needed: u128, cap: u128 },
    #[error("upper cut at level {alpha} is not closed: {x} + {y} = {sum} falls outside it")]
    NotFuzzyLinear { alpha: Rational, x: FieldVector, y: FieldVector, sum: FieldVector },
    #[error("the map attains no positive value, so it has no cut chain")]
    EmptyImage,
}

/// A fuzzy linear code over GF(p)^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyLinearCode {
    field: FieldSpec,
    n: usize,
    /// Canonical nested master rows; the first `k_i` rows span cut `i`.
    master: FieldMatrix,
    /// `(α_i, k_i)` pairs, levels strictly decreasing, dims strictly increasing.
    levels: Vec<(Rational, usize)>,
    cuts: Vec<LinearCode>,
}

impl FuzzyLinearCode {
    /// Builds a fuzzy linear code from `(level, cut)` pairs, which must have
    /// strictly decreasing positive levels and strictly nested cuts.
    ///
    /// The master rows are re-derived canonically: walking the cuts from the
    /// smallest, each cut contributes the rows of its canonical basis that are
    /// not already spanned.
    pub fn from_cuts(chain: Vec<(Rational, LinearCode)>) -> Result<Self, FuzzyError> {
        if chain.is_empty() {
            return Err(FuzzyError::EmptyChain);
        }
        let field = chain[0].1.field();
        let n = chain[0].1.n();
        for (alpha, cut) in &chain {
            if alpha.is_zero() {
                return Err(FuzzyError::InvalidLevel(*alpha));
            }
            if cut.field() != field || cut.n() != n {
                return Err(FuzzyError::SpaceMismatch);
            }
        }
        for i in 1..chain.len() {
            if chain[i].0 >= chain[i - 1].0 {
                return Err(FuzzyError::LevelsNotStrict(i));
            }
            if chain[i].1.dim() <= chain[i - 1].1.dim() {
                return Err(FuzzyError::DimsNotStrict(i));
            }
            if !chain[i - 1].1.is_subcode(&chain[i].1)? {
                return Err(FuzzyError::NotNested(i - 1));
            }
        }

        // Canonical nested master rows, tracked with an echelon form for the
        // independence tests.
        let mut rows: Vec<FieldVector> = Vec::new();
        let mut echelon: Vec<FieldVector> = Vec::new();
        for (_, cut) in &chain {
            for r in 0..cut.dim() {
                let candidate = cut.basis().row(r);
                if reduce_against(&mut echelon, &candidate) {
                    rows.push(candidate);
                }
            }
            debug_assert_eq!(rows.len(), cut.dim());
        }
        let master = FieldMatrix::from_rows(field, n, &rows)?;
        let levels = chain.iter().map(|(a, c)| (*a, c.dim())).collect();
        let cuts = chain.into_iter().map(|(_, c)| c).collect();
        Ok(FuzzyLinearCode { field, n, master, levels, cuts })
    }

    /// Builds a fuzzy linear code from `K` independent master rows and
    /// `(level, dim)` pairs; cut `i` is the span of the first `k_i` rows.
    /// The stored representation is canonicalized as in [`Self::from_cuts`].
    pub fn from_master_rows(
        field: FieldSpec,
        n: usize,
        rows: &[FieldVector],
        levels: &[(Rational, usize)],
    ) -> Result<Self, FuzzyError> {
        if levels.is_empty() {
            return Err(FuzzyError::EmptyChain);
        }
        for i in 1..levels.len() {
            if levels[i].0 >= levels[i - 1].0 {
                return Err(FuzzyError::LevelsNotStrict(i));
            }
            if levels[i].1 <= levels[i - 1].1 {
                return Err(FuzzyError::DimsNotStrict(i));
            }
        }
        let k_last = levels.last().expect("nonempty").1;
        if k_last != rows.len() {
            return Err(FuzzyError::MasterRowCount { expected: k_last, got: rows.len() });
        }
        if k_last > n {
            return Err(FuzzyError::MasterRowCount { expected: n.min(k_last), got: k_last });
        }
        let all = FieldMatrix::from_rows(field, n, rows)?;
        if all.rank() != rows.len() {
            return Err(FuzzyError::MasterRowsDependent);
        }
        let chain = levels
            .iter()
            .map(|&(alpha, k)| {
                let cut = LinearCode::from_rows(field, n, &rows[..k])?;
                Ok((alpha, cut))
            })
            .collect::<Result<Vec<_>, FuzzyError>>()?;
        Self::from_cuts(chain)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored levels `m`.
    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    /// `(α_i, k_i)` pairs in stored (descending-level) order.
    pub fn levels(&self) -> &[(Rational, usize)] {
        &self.levels
    }

    /// Canonical nested master rows, `K x n`.
    pub fn master_rows(&self) -> &FieldMatrix {
        &self.master
    }

    pub fn cuts(&self) -> &[LinearCode] {
        &self.cuts
    }

    pub fn cut_at(&self, i: usize) -> &LinearCode {
        &self.cuts[i]
    }

    /// Largest stored cut.
    pub fn support(&self) -> &LinearCode {
        self.cuts.last().expect("chain is nonempty")
    }

    /// Membership value: the level of the smallest cut containing `x`, and 0
    /// if no stored cut contains it.
    pub fn membership(&self, x: &FieldVector) -> Result<Rational, FuzzyError> {
        for (i, cut) in self.cuts.iter().enumerate() {
            if cut.contains(x)? {
                return Ok(self.levels[i].0);
            }
        }
        Ok(Rational::zero())
    }

    /// Upper cut `{x : A(x) >= alpha}`.
    ///
    /// `alpha = 0` yields the full space. `alpha` above the top level yields
    /// `None`: the cut is empty, which is a distinguished value rather than
    /// an error. Any other level yields the largest stored cut whose level is
    /// at least `alpha`.
    pub fn cut(&self, alpha: Rational) -> Option<LinearCode> {
        if alpha.is_zero() {
            return Some(LinearCode::full(self.field, self.n));
        }
        if alpha > self.levels[0].0 {
            return None;
        }
        let j = self
            .levels
            .iter()
            .rposition(|(a, _)| *a >= alpha)
            .expect("alpha <= top level");
        Some(self.cuts[j].clone())
    }

    /// Attained membership values in descending order: the stored levels,
    /// plus 0 exactly when the largest cut is a proper subspace.
    pub fn image(&self) -> Vec<Rational> {
        let mut img: Vec<Rational> = self.levels.iter().map(|(a, _)| *a).collect();
        if self.support().dim() < self.n {
            img.push(Rational::zero());
        }
        img
    }

    /// Tabulates the membership function over all `p^n` vectors.
    pub fn to_level_map(&self) -> Result<LevelMap, FuzzyError> {
        self.to_level_map_capped(DEFAULT_ENUM_CAP)
    }

    pub fn to_level_map_capped(&self, cap: u128) -> Result<LevelMap, FuzzyError> {
        LevelMap::from_fn_capped(self.field, self.n, cap, |x| {
            self.membership(x).expect("vector drawn from the same space")
        })
    }
}

/// Reduces `candidate` against the growing echelon basis. Returns `true`
/// (and extends the basis) when the candidate is independent.
pub(crate) fn reduce_against(echelon: &mut Vec<FieldVector>, candidate: &FieldVector) -> bool {
    let field = candidate.field();
    let mut v = candidate.clone();
    for row in echelon.iter() {
        let pivot = row.entries().iter().position(|&e| e != 0).expect("echelon rows are nonzero");
        let c = v.entries()[pivot];
        if c != 0 {
            v = v.sub(&row.scale(c).expect("scalar in field")).expect("same space");
        }
    }
    match v.entries().iter().position(|&e| e != 0) {
        None => false,
        Some(pivot) => {
            let inv = field.inv(v.entries()[pivot]);
            let normalized = v.scale(inv).expect("scalar in field");
            // Keep echelon rows sorted by pivot for deterministic reduction.
            let at = echelon
                .iter()
                .position(|r| {
                    r.entries().iter().position(|&e| e != 0).expect("nonzero") > pivot
                })
                .unwrap_or(echelon.len());
            echelon.insert(at, normalized);
            true
        }
    }
}

/// A total membership table over GF(p)^n, indexed lexicographically: the
/// vector with digits `(x_0, ..., x_{n-1})` sits at index
/// `sum_i x_i * p^(n-1-i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelMap {
    field: FieldSpec,
    n: usize,
    values: Vec<Rational>,
}

/// `p^n` as a checked `u128`.
pub(crate) fn space_size(p: u64, n: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.checked_mul(p as u128)?;
    }
    Some(acc)
}

impl LevelMap {
    /// Wraps an explicit value table; `values.len()` must be exactly `p^n`.
    pub fn new(field: FieldSpec, n: usize, values: Vec<Rational>) -> Result<Self, FuzzyError> {
        let size = space_size(field.modulus(), n)
            .filter(|&s| s <= usize::MAX as u128)
            .ok_or(FuzzyError::TooLarge { needed: u128::MAX, cap: usize::MAX as u128 })?;
        if values.len() as u128 != size {
            return Err(GfError::LengthMismatch { expected: size as usize, got: values.len() }.into());
        }
        Ok(LevelMap { field, n, values })
    }

    pub fn from_fn_capped(
        field: FieldSpec,
        n: usize,
        cap: u128,
        mut f: impl FnMut(&FieldVector) -> Rational,
    ) -> Result<Self, FuzzyError> {
        let size = check_enumerable(field.modulus(), n, cap)?;
        let mut map = LevelMap { field, n, values: Vec::with_capacity(size) };
        for idx in 0..size {
            let x = map.vector_at(idx);
            let v = f(&x);
            map.values.push(v);
        }
        Ok(map)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// The vector at table index `idx` (lexicographic order).
    pub fn vector_at(&self, idx: usize) -> FieldVector {
        let p = self.field.modulus() as usize;
        let mut digits = vec![0u64; self.n];
        let mut rest = idx;
        for i in (0..self.n).rev() {
            digits[i] = (rest % p) as u64;
            rest /= p;
        }
        debug_assert_eq!(rest, 0);
        FieldVector::new(self.field, digits).expect("digits are residues")
    }

    pub fn index_of(&self, x: &FieldVector) -> Result<usize, FuzzyError> {
        if x.field() != self.field {
            return Err(GfError::FieldMismatch(self.field.modulus(), x.field().modulus()).into());
        }
        if x.len() != self.n {
            return Err(GfError::LengthMismatch { expected: self.n, got: x.len() }.into());
        }
        let p = self.field.modulus() as usize;
        let mut idx = 0usize;
        for &d in x.entries() {
            idx = idx * p + d as usize;
        }
        Ok(idx)
    }

    pub fn get(&self, x: &FieldVector) -> Result<Rational, FuzzyError> {
        Ok(self.values[self.index_of(x)?])
    }

    pub fn value_at(&self, idx: usize) -> Rational {
        self.values[idx]
    }

    /// Iterates `(vector, value)` pairs in lexicographic vector order.
    pub fn iter(&self) -> impl Iterator<Item = (FieldVector, Rational)> + '_ {
        (0..self.values.len()).map(|i| (self.vector_at(i), self.values[i]))
    }
}

fn check_enumerable(p: u64, n: usize, cap: u128) -> Result<usize, FuzzyError> {
    let size = space_size(p, n).ok_or(FuzzyError::TooLarge { needed: u128::MAX, cap })?;
    if size > cap || size > usize::MAX as u128 {
        return Err(FuzzyError::TooLarge { needed: size, cap });
    }
    Ok(size as usize)
}

/// Checks the two fuzzy-subspace axioms pointwise:
/// `L(x + y) >= min(L(x), L(y))` and `L(λx) >= L(x)`.
///
/// Cost is quadratic in the table size.
pub fn verify_axioms_pointwise(map: &LevelMap) -> bool {
    let size = map.len();
    for i in 0..size {
        let x = map.vector_at(i);
        for j in i..size {
            let y = map.vector_at(j);
            let s = x.add(&y).expect("same space");
            let idx = map.index_of(&s).expect("same space");
            if map.values[idx] < map.values[i].min(map.values[j]) {
                return false;
            }
        }
        for lambda in 0..map.field().modulus() {
            let lx = x.scale(lambda).expect("scalar in field");
            let idx = map.index_of(&lx).expect("same space");
            if map.values[idx] < map.values[i] {
                return false;
            }
        }
    }
    true
}

/// Rebuilds a [`FuzzyLinearCode`] from an explicit membership table.
///
/// Succeeds exactly when every nonempty upper cut of the table is a subspace
/// and some vector has positive membership; on success the result's
/// membership function equals the table pointwise. The error names the first
/// level whose cut fails closure, with a witness pair.
pub fn from_level_map(map: &LevelMap) -> Result<FuzzyLinearCode, FuzzyError> {
    let positives: BTreeSet<Rational> =
        map.values.iter().copied().filter(|v| !v.is_zero()).collect();
    if positives.is_empty() {
        return Err(FuzzyError::EmptyImage);
    }
    let field = map.field();
    let mut chain: Vec<(Rational, LinearCode)> = Vec::new();
    for &alpha in positives.iter().rev() {
        let members: Vec<usize> =
            (0..map.len()).filter(|&i| map.values[i] >= alpha).collect();
        // Greedy basis of the member set; the set is a subspace exactly when
        // its size is p^rank.
        let mut echelon: Vec<FieldVector> = Vec::new();
        let mut basis: Vec<FieldVector> = Vec::new();
        for &i in &members {
            let v = map.vector_at(i);
            if reduce_against(&mut echelon, &v) {
                basis.push(v);
            }
        }
        let span_size = space_size(field.modulus(), basis.len()).expect("small exponent");
        if members.len() as u128 != span_size {
            let (x, y, s) = closure_witness(map, &members);
            return Err(FuzzyError::NotFuzzyLinear { alpha, x, y, sum: s });
        }
        chain.push((alpha, LinearCode::from_rows(field, map.n(), &basis)?));
    }
    FuzzyLinearCode::from_cuts(chain)
}

/// Finds a pair inside the cut whose sum escapes it. Only called when the cut
/// is known not to be a subspace, so a witness exists.
fn closure_witness(map: &LevelMap, members: &[usize]) -> (FieldVector, FieldVector, FieldVector) {
    let inside: std::collections::HashSet<usize> = members.iter().copied().collect();
    for &i in members {
        let x = map.vector_at(i);
        for &j in members {
            let y = map.vector_at(j);
            let s = x.add(&y).expect("same space");
            let si = map.index_of(&s).expect("same space");
            if !inside.contains(&si) {
                return (x, y, s);
            }
        }
    }
    unreachable!("cut verified non-closed, so some pair must escape");
}

fn check_same_space(a: &FuzzyLinearCode, b: &FuzzyLinearCode) -> Result<(), FuzzyError> {
    if a.field() != b.field() || a.n() != b.n() {
        return Err(FuzzyError::SpaceMismatch);
    }
    Ok(())
}

/// Candidate levels for a min-combined chain: all positive attained values of
/// either operand, at most the smaller of the two top levels, descending.
fn min_combination_levels(a: &FuzzyLinearCode, b: &FuzzyLinearCode) -> Vec<Rational> {
    let top = a.levels()[0].0.min(b.levels()[0].0);
    let mut set: BTreeSet<Rational> = BTreeSet::new();
    for (alpha, _) in a.levels().iter().chain(b.levels()) {
        if !alpha.is_zero() && *alpha <= top {
            set.insert(*alpha);
        }
    }
    set.into_iter().rev().collect()
}

/// Collapses runs of equal cuts, keeping the largest level of each run, and
/// assembles the chain.
fn chain_from_candidates(
    pairs: Vec<(Rational, LinearCode)>,
) -> Result<FuzzyLinearCode, FuzzyError> {
    let mut chain: Vec<(Rational, LinearCode)> = Vec::new();
    for (alpha, cut) in pairs {
        match chain.last() {
            Some((_, prev)) if prev == &cut => {}
            _ => chain.push((alpha, cut)),
        }
    }
    FuzzyLinearCode::from_cuts(chain)
}

/// Intersection (pointwise minimum) of two fuzzy linear codes. Always fuzzy
/// linear: every cut is the intersection of the operands' cuts.
pub fn meet(a: &FuzzyLinearCode, b: &FuzzyLinearCode) -> Result<FuzzyLinearCode, FuzzyError> {
    check_same_space(a, b)?;
    let mut pairs = Vec::new();
    for alpha in min_combination_levels(a, b) {
        let ca = a.cut(alpha).expect("alpha at most the top level");
        let cb = b.cut(alpha).expect("alpha at most the top level");
        let stacked = ca.parity().vstack(cb.parity())?;
        let cut = LinearCode::from_matrix(&stacked.null_space());
        pairs.push((alpha, cut));
    }
    chain_from_candidates(pairs)
}

/// Union (pointwise maximum) of two fuzzy linear codes, as a raw level map
/// plus the verdict of the pointwise axiom check. The union of fuzzy linear
/// codes need not be fuzzy linear, which is why the chain form is not built.
pub fn join_raw(
    a: &FuzzyLinearCode,
    b: &FuzzyLinearCode,
    cap: u128,
) -> Result<(LevelMap, bool), FuzzyError> {
    check_same_space(a, b)?;
    // The verdict scan is quadratic in the table, so gate on p^(2n).
    let size = space_size(a.field().modulus(), a.n()).ok_or(FuzzyError::TooLarge {
        needed: u128::MAX,
        cap,
    })?;
    if size.checked_mul(size).map_or(true, |sq| sq > cap) {
        return Err(FuzzyError::TooLarge { needed: size.saturating_mul(size), cap });
    }
    let map = LevelMap::from_fn_capped(a.field(), a.n(), cap, |x| {
        let ma = a.membership(x).expect("same space");
        let mb = b.membership(x).expect("same space");
        ma.max(mb)
    })?;
    let linear = verify_axioms_pointwise(&map);
    Ok((map, linear))
}

/// Extension-principle sum: `(A + B)(z) = max over z = x + y of
/// min(A(x), B(y))`, computed by exhausting all decompositions, plus the
/// pointwise-axiom verdict.
pub fn ext_sum(
    a: &FuzzyLinearCode,
    b: &FuzzyLinearCode,
    cap: u128,
) -> Result<(LevelMap, bool), FuzzyError> {
    check_same_space(a, b)?;
    let size = space_size(a.field().modulus(), a.n()).ok_or(FuzzyError::TooLarge {
        needed: u128::MAX,
        cap,
    })?;
    if size.checked_mul(size).map_or(true, |sq| sq > cap) {
        return Err(FuzzyError::TooLarge { needed: size.saturating_mul(size), cap });
    }
    let ma = a.to_level_map_capped(cap)?;
    let mb = b.to_level_map_capped(cap)?;
    let map = LevelMap::from_fn_capped(a.field(), a.n(), cap, |z| {
        let mut best = Rational::zero();
        for (x, va) in ma.iter() {
            let y = z.sub(&x).expect("same space");
            let vb = mb.get(&y).expect("same space");
            best = best.max(va.min(vb));
        }
        best
    })?;
    let linear = verify_axioms_pointwise(&map);
    Ok((map, linear))
}

/// Direct sum on the concatenated space: `(A ⊕ B)((x | y)) =
/// min(A(x), B(y))`. Always fuzzy linear: every cut is the direct sum of the
/// operands' cuts.
pub fn direct_sum(a: &FuzzyLinearCode, b: &FuzzyLinearCode) -> Result<FuzzyLinearCode, FuzzyError> {
    if a.field() != b.field() {
        return Err(FuzzyError::SpaceMismatch);
    }
    let field = a.field();
    let n = a.n() + b.n();
    let mut pairs = Vec::new();
    for alpha in min_combination_levels(a, b) {
        let ca = a.cut(alpha).expect("alpha at most the top level");
        let cb = b.cut(alpha).expect("alpha at most the top level");
        let mut rows: Vec<FieldVector> = Vec::new();
        for r in 0..ca.dim() {
            let mut entries = ca.basis().row(r).entries().to_vec();
            entries.resize(a.n() + b.n(), 0);
            rows.push(FieldVector::new(field, entries)?);
        }
        for r in 0..cb.dim() {
            let mut entries = vec![0; a.n()];
            entries.extend_from_slice(cb.basis().row(r).entries());
            rows.push(FieldVector::new(field, entries)?);
        }
        pairs.push((alpha, LinearCode::from_rows(field, n, &rows)?));
    }
    chain_from_candidates(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    fn v2(bits: &str) -> FieldVector {
        let entries = bits.chars().map(|c| c.to_digit(10).unwrap() as u64).collect();
        FieldVector::new(gf(2), entries).unwrap()
    }

    fn r(n: u64, d: u64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    /// Three-level chain on F_2^3: {0} at 1, <110, 101> at 1/2, full at 1/3.
    fn tri_chain() -> FuzzyLinearCode {
        FuzzyLinearCode::from_cuts(vec![
            (Rational::one(), LinearCode::zero(gf(2), 3)),
            (Rational::half(), LinearCode::from_rows(gf(2), 3, &[v2("110"), v2("101")]).unwrap()),
            (r(1, 3), LinearCode::full(gf(2), 3)),
        ])
        .unwrap()
    }

    #[test]
    fn membership_of_three_level_chain() {
        let a = tri_chain();
        assert_eq!(a.membership(&v2("000")).unwrap(), Rational::one());
        for w in ["110", "101", "011"] {
            assert_eq!(a.membership(&v2(w)).unwrap(), Rational::half(), "{w}");
        }
        for w in ["111", "100", "010", "001"] {
            assert_eq!(a.membership(&v2(w)).unwrap(), r(1, 3), "{w}");
        }
        assert_eq!(a.image(), vec![Rational::one(), Rational::half(), r(1, 3)]);
    }

    #[test]
    fn cut_semantics() {
        let a = tri_chain();
        // Level 0 is the full space even though 0 is not attained here.
        assert_eq!(a.cut(Rational::zero()).unwrap(), LinearCode::full(gf(2), 3));
        // A level above the top is the empty set, a distinguished value.
        assert!(a.cut(Rational::one()).is_some());
        let b = FuzzyLinearCode::from_cuts(vec![(
            Rational::half(),
            LinearCode::zero(gf(2), 3),
        )])
        .unwrap();
        assert!(b.cut(Rational::one()).is_none());
        // Levels between stored values resolve to the tighter cut.
        assert_eq!(a.cut(r(2, 3)).unwrap().dim(), 0);
        assert_eq!(a.cut(Rational::half()).unwrap().dim(), 2);
        assert_eq!(a.cut(r(2, 5)).unwrap().dim(), 2);
        assert_eq!(a.cut(r(1, 3)).unwrap().dim(), 3);
        assert_eq!(a.cut(r(1, 4)).unwrap().dim(), 3);
    }

    #[test]
    fn image_includes_zero_for_proper_support() {
        let b = FuzzyLinearCode::from_cuts(vec![
            (Rational::one(), LinearCode::zero(gf(2), 3)),
            (Rational::half(), LinearCode::from_rows(gf(2), 3, &[v2("111")]).unwrap()),
        ])
        .unwrap();
        assert_eq!(b.image(), vec![Rational::one(), Rational::half(), Rational::zero()]);
        assert_eq!(b.membership(&v2("100")).unwrap(), Rational::zero());
    }

    #[test]
    fn constructor_validation() {
        let zero = LinearCode::zero(gf(2), 3);
        let full = LinearCode::full(gf(2), 3);
        assert_eq!(FuzzyLinearCode::from_cuts(vec![]), Err(FuzzyError::EmptyChain));
        assert_eq!(
            FuzzyLinearCode::from_cuts(vec![
                (Rational::half(), zero.clone()),
                (Rational::half(), full.clone()),
            ]),
            Err(FuzzyError::LevelsNotStrict(1))
        );
        assert_eq!(
            FuzzyLinearCode::from_cuts(vec![
                (Rational::one(), full.clone()),
                (Rational::half(), zero.clone()),
            ]),
            Err(FuzzyError::DimsNotStrict(1))
        );
        assert_eq!(
            FuzzyLinearCode::from_cuts(vec![(Rational::zero(), zero.clone())]),
            Err(FuzzyError::InvalidLevel(Rational::zero()))
        );

        // Master-row path: dependent rows are rejected.
        let err = FuzzyLinearCode::from_master_rows(
            gf(2),
            3,
            &[v2("110"), v2("110")],
            &[(Rational::one(), 1), (Rational::half(), 2)],
        );
        assert_eq!(err, Err(FuzzyError::MasterRowsDependent));

        let err = FuzzyLinearCode::from_master_rows(
            gf(2),
            3,
            &[v2("110")],
            &[(Rational::one(), 2)],
        );
        assert_eq!(err, Err(FuzzyError::MasterRowCount { expected: 2, got: 1 }));
    }

    #[test]
    fn canonical_master_rows_are_stable_across_presentations() {
        // The same chain presented with different generating rows must yield
        // identical stored representations.
        let c1 = LinearCode::from_rows(gf(2), 3, &[v2("110")]).unwrap();
        let c2a = LinearCode::from_rows(gf(2), 3, &[v2("110"), v2("011")]).unwrap();
        let c2b = LinearCode::from_rows(gf(2), 3, &[v2("101"), v2("011")]).unwrap();
        assert_eq!(c2a, c2b);
        let a = FuzzyLinearCode::from_cuts(vec![(Rational::one(), c1.clone()), (Rational::half(), c2a)])
            .unwrap();
        let b = FuzzyLinearCode::from_cuts(vec![(Rational::one(), c1), (Rational::half(), c2b)])
            .unwrap();
        assert_eq!(a, b);

        let via_rows = FuzzyLinearCode::from_master_rows(
            gf(2),
            3,
            &[v2("110"), v2("101")],
            &[(Rational::one(), 1), (Rational::half(), 2)],
        )
        .unwrap();
        assert_eq!(a, via_rows);
    }

    #[test]
    fn level_map_round_trip() {
        let a = tri_chain();
        let map = a.to_level_map().unwrap();
        assert_eq!(map.len(), 8);
        let back = from_level_map(&map).unwrap();
        assert_eq!(back, a);
        for (x, v) in map.iter() {
            assert_eq!(a.membership(&x).unwrap(), v);
        }
    }

    #[test]
    fn from_level_map_rejects_non_closed_cuts() {
        // 1 on {000, 111}; 1/2 on the weight-2 words; 1/3 elsewhere. The cut
        // at 1/2 is {000, 111, 110, 101, 011} and 111 + 110 = 001 escapes it.
        let field = gf(2);
        let values: Vec<Rational> = (0..8)
            .map(|idx| {
                let x = LevelMap::new(field, 3, vec![Rational::zero(); 8]).unwrap().vector_at(idx);
                match x.weight() {
                    0 => Rational::one(),
                    3 => Rational::one(),
                    2 => Rational::half(),
                    _ => r(1, 3),
                }
            })
            .collect();
        let map = LevelMap::new(field, 3, values).unwrap();
        assert!(!verify_axioms_pointwise(&map));
        match from_level_map(&map) {
            Err(FuzzyError::NotFuzzyLinear { alpha, x, y, sum }) => {
                assert_eq!(alpha, Rational::half());
                let cut: Vec<&str> = vec!["000", "011", "101", "110", "111"];
                assert!(cut.contains(&x.to_string().as_str()));
                assert!(cut.contains(&y.to_string().as_str()));
                assert!(!cut.contains(&sum.to_string().as_str()));
            }
            other => panic!("expected NotFuzzyLinear, got {other:?}"),
        }
    }

    #[test]
    fn all_zero_map_is_degenerate() {
        // The all-zero map satisfies the axioms vacuously but has no positive
        // level, so it admits no chain representation.
        let map = LevelMap::new(gf(2), 2, vec![Rational::zero(); 4]).unwrap();
        assert!(verify_axioms_pointwise(&map));
        assert_eq!(from_level_map(&map), Err(FuzzyError::EmptyImage));
    }

    #[test]
    fn meet_of_chain_and_diagonal_line() {
        let a = tri_chain();
        let b = FuzzyLinearCode::from_cuts(vec![(
            Rational::one(),
            LinearCode::from_rows(gf(2), 3, &[v2("111")]).unwrap(),
        )])
        .unwrap();
        let m = meet(&a, &b).unwrap();
        assert_eq!(m.membership(&v2("111")).unwrap(), r(1, 3));
        assert_eq!(m.membership(&v2("000")).unwrap(), Rational::one());
        assert_eq!(m.membership(&v2("110")).unwrap(), Rational::zero());
        // Pointwise agreement with min.
        for (x, v) in m.to_level_map().unwrap().iter() {
            let expect = a.membership(&x).unwrap().min(b.membership(&x).unwrap());
            assert_eq!(v, expect);
        }
        // Meet with the zero-support chain collapses to {0}.
        let point = FuzzyLinearCode::from_cuts(vec![(Rational::one(), LinearCode::zero(gf(2), 3))])
            .unwrap();
        let collapsed = meet(&a, &point).unwrap();
        assert_eq!(collapsed.num_levels(), 1);
        assert_eq!(collapsed.support().dim(), 0);
    }

    #[test]
    fn join_of_two_lines_is_not_linear() {
        let e1 = FuzzyLinearCode::from_cuts(vec![(
            Rational::one(),
            LinearCode::from_rows(gf(2), 2, &[v2("10")]).unwrap(),
        )])
        .unwrap();
        let e2 = FuzzyLinearCode::from_cuts(vec![(
            Rational::one(),
            LinearCode::from_rows(gf(2), 2, &[v2("01")]).unwrap(),
        )])
        .unwrap();
        let (map, linear) = join_raw(&e1, &e2, DEFAULT_ENUM_CAP).unwrap();
        assert!(!linear);
        assert_eq!(map.get(&v2("10")).unwrap(), Rational::one());
        assert_eq!(map.get(&v2("01")).unwrap(), Rational::one());
        assert_eq!(map.get(&v2("11")).unwrap(), Rational::zero());
    }

    #[test]
    fn ext_sum_against_point_mass_reproduces_membership() {
        let a = tri_chain();
        let point = FuzzyLinearCode::from_cuts(vec![(Rational::one(), LinearCode::zero(gf(2), 3))])
            .unwrap();
        let (map, linear) = ext_sum(&a, &point, DEFAULT_ENUM_CAP).unwrap();
        assert!(linear);
        for (x, v) in map.iter() {
            assert_eq!(v, a.membership(&x).unwrap());
        }
    }

    #[test]
    fn ext_sum_cuts_are_sums_of_cuts() {
        let a = tri_chain();
        let b = FuzzyLinearCode::from_cuts(vec![(
            Rational::one(),
            LinearCode::from_rows(gf(2), 3, &[v2("111")]).unwrap(),
        )])
        .unwrap();
        let (map, linear) = ext_sum(&a, &b, DEFAULT_ENUM_CAP).unwrap();
        assert!(linear);
        assert_eq!(map.get(&v2("000")).unwrap(), Rational::one());
        assert_eq!(map.get(&v2("111")).unwrap(), Rational::one());
        // Every other vector reaches 1/2 through a weight-2 decomposition.
        for w in ["110", "101", "011", "100", "010", "001"] {
            assert_eq!(map.get(&v2(w)).unwrap(), Rational::half(), "{w}");
        }
    }

    #[test]
    fn direct_sum_concatenates() {
        let a = tri_chain();
        let d = direct_sum(&a, &a).unwrap();
        assert_eq!(d.n(), 6);
        let x = v2("110111");
        // min(A(110), A(111)) = min(1/2, 1/3).
        assert_eq!(d.membership(&x).unwrap(), r(1, 3));
        assert_eq!(d.membership(&v2("000000")).unwrap(), Rational::one());
        assert_eq!(d.membership(&v2("000110")).unwrap(), Rational::half());
        // Exhaustive agreement with the componentwise minimum.
        for (z, v) in d.to_level_map().unwrap().iter() {
            let left = FieldVector::new(gf(2), z.entries()[..3].to_vec()).unwrap();
            let right = FieldVector::new(gf(2), z.entries()[3..].to_vec()).unwrap();
            let expect = a.membership(&left).unwrap().min(a.membership(&right).unwrap());
            assert_eq!(v, expect);
        }
    }

    #[test]
    fn space_mismatch_is_rejected() {
        let a = tri_chain();
        let short = FuzzyLinearCode::from_cuts(vec![(Rational::one(), LinearCode::zero(gf(2), 2))])
            .unwrap();
        assert_eq!(meet(&a, &short), Err(FuzzyError::SpaceMismatch));
        assert!(matches!(join_raw(&a, &short, 1 << 20), Err(FuzzyError::SpaceMismatch)));
        let f3 = FuzzyLinearCode::from_cuts(vec![(Rational::one(), LinearCode::zero(gf(3), 3))])
            .unwrap();
        assert_eq!(meet(&a, &f3), Err(FuzzyError::SpaceMismatch));
        // Direct sum only needs matching fields, not matching lengths.
        assert!(direct_sum(&a, &short).is_ok());
        assert_eq!(direct_sum(&a, &f3), Err(FuzzyError::SpaceMismatch));
    }
}
