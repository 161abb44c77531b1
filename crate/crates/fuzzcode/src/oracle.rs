//! Brute-force reference implementations used to cross-check the structured
//! algorithms. Everything here enumerates: spans are walked coefficient by
//! coefficient, duals and nearest codewords by scanning the whole space.
//! Only the field arithmetic is shared with the main code paths.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::code::LinearCode;
use crate::fuzzy::{space_size, FuzzyLinearCode, LevelMap};
use crate::gf::{FieldSpec, FieldVector, GfError};
use crate::rational::Rational;

/// Error raised by the brute-force reference paths.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error("enumeration needs {needed} steps, over the cap of {cap}")]
    TooLarge { needed: u128, cap: u128 },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
}

fn guard(needed: Option<u128>, cap: u128) -> Result<(), OracleError> {
    let needed = needed.unwrap_or(u128::MAX);
    if needed > cap {
        return Err(OracleError::TooLarge { needed, cap });
    }
    Ok(())
}

/// Every vector of the span of `rows`, as sorted residue sequences, by
/// walking all `p^rows` coefficient tuples. Enumeration is bounded by `cap`.
pub fn brute_span(
    field: FieldSpec,
    n: usize,
    rows: &[FieldVector],
    cap: u128,
) -> Result<BTreeSet<Vec<u64>>, OracleError> {
    let p = field.modulus();
    guard(space_size(p, rows.len()), cap)?;
    let mut out = BTreeSet::new();
    let mut coeffs = vec![0u64; rows.len()];
    loop {
        let mut v = FieldVector::zero(field, n);
        for (c, row) in coeffs.iter().zip(rows) {
            v = v.add(&row.scale(*c)?)?;
        }
        out.insert(v.entries().to_vec());
        let mut pos = coeffs.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            coeffs[pos] += 1;
            if coeffs[pos] < p {
                break;
            }
            coeffs[pos] = 0;
        }
    }
}

/// Every vector of the whole space GF(p)^n in lexicographic order.
fn brute_space(field: FieldSpec, n: usize, cap: u128) -> Result<Vec<FieldVector>, OracleError> {
    let p = field.modulus();
    guard(space_size(p, n), cap)?;
    let mut out = Vec::new();
    let mut digits = vec![0u64; n];
    loop {
        out.push(FieldVector::new(field, digits.clone())?);
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < p {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// The dual computed from the definition: all vectors of the space that are
/// orthogonal to every basis row of `code`. The scan is `p^n` dot products.
pub fn brute_dual(code: &LinearCode, cap: u128) -> Result<BTreeSet<Vec<u64>>, OracleError> {
    let rows = code.basis().row_vectors();
    let mut out = BTreeSet::new();
    for v in brute_space(code.field(), code.n(), cap)? {
        let mut orthogonal = true;
        for row in &rows {
            if v.dot(row)? != 0 {
                orthogonal = false;
                break;
            }
        }
        if orthogonal {
            out.insert(v.entries().to_vec());
        }
    }
    Ok(out)
}

/// Minimum weight over the full span, walked naively.
pub fn brute_min_distance(code: &LinearCode, cap: u128) -> Result<usize, OracleError> {
    if code.dim() == 0 {
        return Err(OracleError::ZeroCode);
    }
    let words = brute_span(code.field(), code.n(), &code.basis().row_vectors(), cap)?;
    Ok(words
        .iter()
        .map(|w| w.iter().filter(|&&e| e != 0).count())
        .filter(|&w| w != 0)
        .min()
        .expect("a nonzero code has a nonzero word"))
}

/// Membership read from a total table with its own index arithmetic: the
/// entry at the big-endian mixed-radix position of `x`.
pub fn brute_membership(map: &LevelMap, x: &FieldVector) -> Result<Rational, OracleError> {
    let p = map.field().modulus();
    if x.field() != map.field() || x.len() != map.n() {
        return Err(OracleError::Gf(GfError::LengthMismatch { expected: map.n(), got: x.len() }));
    }
    let mut index: u128 = 0;
    for &d in x.entries() {
        index = index * u128::from(p) + u128::from(d);
    }
    Ok(map.value_at(index as usize))
}

/// Membership computed from the chain definition: the level of the smallest
/// cut whose span (walked from the master-row prefix) contains `x`, or 0.
pub fn brute_chain_membership(
    code: &FuzzyLinearCode,
    x: &FieldVector,
    cap: u128,
) -> Result<Rational, OracleError> {
    let rows = code.master_rows().row_vectors();
    for &(alpha, dim) in code.levels() {
        let span = brute_span(code.field(), code.n(), &rows[..dim], cap)?;
        if span.contains(x.entries()) {
            return Ok(alpha);
        }
    }
    Ok(Rational::zero())
}

/// The extension-sum membership of `z` computed from the definition: the
/// maximum over all decompositions `z = x + y` of the pointwise minimum of
/// the two memberships. The scan is `p^n` decompositions, each probing both
/// chains.
pub fn brute_ext_sum(
    a: &FuzzyLinearCode,
    b: &FuzzyLinearCode,
    z: &FieldVector,
    cap: u128,
) -> Result<Rational, OracleError> {
    let mut best = Rational::zero();
    for x in brute_space(a.field(), a.n(), cap)? {
        let y = z.sub(&x)?;
        let mx = brute_chain_membership(a, &x, cap)?;
        let my = brute_chain_membership(b, &y, cap)?;
        let level = mx.min(my);
        if level > best {
            best = level;
        }
    }
    Ok(best)
}

/// The nearest codeword to `y` by scanning the whole code: minimum Hamming
/// distance, ties resolved to the lexicographically smallest error pattern
/// `y - c` (the table decoders' convention), and flagged non-unique.
pub fn brute_nearest(
    code: &LinearCode,
    y: &FieldVector,
    cap: u128,
) -> Result<(FieldVector, bool), OracleError> {
    let words = brute_span(code.field(), code.n(), &code.basis().row_vectors(), cap)?;
    let mut best: Option<(FieldVector, Vec<u64>)> = None;
    let mut distance = usize::MAX;
    let mut ties = 0usize;
    for w in words {
        let c = FieldVector::new(code.field(), w)?;
        let d = y.distance(&c)?;
        let e = y.sub(&c)?.entries().to_vec();
        if d < distance {
            distance = d;
            ties = 1;
            best = Some((c, e));
        } else if d == distance {
            ties += 1;
            if e < best.as_ref().expect("set at min").1 {
                best = Some((c, e));
            }
        }
    }
    let (codeword, _) = best.expect("a code contains at least the zero word");
    Ok((codeword, ties == 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    fn v(p: u64, digits: &str) -> FieldVector {
        let entries = digits.chars().map(|c| c.to_digit(10).unwrap() as u64).collect();
        FieldVector::new(gf(p), entries).unwrap()
    }

    #[test]
    fn span_of_the_simplex_rows_has_eight_words() {
        let rows = vec![v(2, "0001111"), v(2, "0110011"), v(2, "1010101")];
        let span = brute_span(gf(2), 7, &rows, 1 << 20).unwrap();
        assert_eq!(span.len(), 8);
        // All nonzero simplex words have weight 4.
        for w in &span {
            let weight = w.iter().filter(|&&e| e != 0).count();
            assert!(weight == 0 || weight == 4);
        }
    }

    #[test]
    fn dependent_rows_collapse_the_span() {
        let rows = vec![v(3, "12"), v(3, "21")];
        // 21 = 2 * 12 over GF(3): the span is a line of 3 points.
        let span = brute_span(gf(3), 2, &rows, 1 << 20).unwrap();
        assert_eq!(span.len(), 3);
    }

    #[test]
    fn caps_are_enforced() {
        let rows = vec![v(2, "10"), v(2, "01")];
        assert!(matches!(
            brute_span(gf(2), 2, &rows, 3),
            Err(OracleError::TooLarge { needed: 4, cap: 3 })
        ));
    }

    #[test]
    fn zero_code_has_no_distance() {
        let zero = LinearCode::zero(gf(2), 4);
        assert!(matches!(brute_min_distance(&zero, 1 << 20), Err(OracleError::ZeroCode)));
    }
}
