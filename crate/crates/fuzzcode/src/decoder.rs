//! Syndrome decoding against a fuzzy chain.
//!
//! Decoding at confidence `α1` accepts any word whose membership already
//! reaches `α1`. Otherwise the word lies in some outer cut `C2` at its own
//! membership level `α2 < α1`, and the decoder corrects it into the inner
//! cut `C1` at `α1` using a syndrome table restricted to cosets of `C1`
//! inside `C2`: `q^(k2-k1)` rows instead of the classic `q^(n-k1)`, a
//! reduction by `q^(n-k2)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use thiserror::Error;

use crate::code::{CodeError, LinearCode};
use crate::fuzzy::{space_size, FuzzyError, FuzzyLinearCode};
use crate::gf::{FieldVector, GfError};
use crate::rational::Rational;
use crate::DEFAULT_ENUM_CAP;

/// Error raised while building tables or decoding.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
    #[error("cut at level {0} is empty")]
    EmptyCut(Rational),
    #[error("cut at {alpha1} does not sit strictly inside cut at {alpha2}")]
    NotNested { alpha1: Rational, alpha2: Rational },
    #[error("decoding needs {needed} candidate scans, over the cap of {cap}")]
    TooLarge { needed: u128, cap: u128 },
}

/// One row of a syndrome table: the chosen coset leader, its weight, and
/// whether it was the unique minimum-weight element of its coset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub leader: FieldVector,
    pub weight: usize,
    pub unique: bool,
}

/// A reduced syndrome table for one level pair `α1 > α2` of a chain: coset
/// leaders of `C1 = cut(α1)` restricted to the outer cut `C2 = cut(α2)`.
/// Leaders minimize weight; ties resolve to the lexicographically smallest
/// residue sequence and are marked non-unique.
#[derive(Debug, Clone)]
pub struct SyndromeTable {
    alpha1: Rational,
    alpha2: Rational,
    inner: LinearCode,
    outer: LinearCode,
    entries: BTreeMap<Vec<u64>, TableEntry>,
}

/// Visits every tuple in GF(p)^len in lexicographic order (last digit
/// fastest). Visits the single empty tuple when `len == 0`.
fn for_each_tuple(p: u64, len: usize, mut f: impl FnMut(&[u64])) {
    let mut digits = vec![0u64; len];
    loop {
        f(&digits);
        let mut pos = len;
        loop {
            if pos == 0 {
                return;
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

impl SyndromeTable {
    /// Builds the table for the pair of cuts at `alpha1 > alpha2`. The work
    /// is one scan of the outer cut, `q^k2` candidates; `cap` bounds it.
    pub fn build(
        code: &FuzzyLinearCode,
        alpha1: Rational,
        alpha2: Rational,
        cap: u128,
    ) -> Result<Self, DecodeError> {
        let inner = code.cut(alpha1).ok_or(DecodeError::EmptyCut(alpha1))?;
        let outer = code.cut(alpha2).ok_or(DecodeError::EmptyCut(alpha2))?;
        Self::for_cuts(inner, outer, alpha1, alpha2, cap)
    }

    fn for_cuts(
        inner: LinearCode,
        outer: LinearCode,
        alpha1: Rational,
        alpha2: Rational,
        cap: u128,
    ) -> Result<Self, DecodeError> {
        if !(inner.dim() < outer.dim() && inner.is_subcode(&outer)?) {
            return Err(DecodeError::NotNested { alpha1, alpha2 });
        }
        let p = inner.field().modulus();
        let needed = space_size(p, outer.dim()).unwrap_or(u128::MAX);
        if needed > cap {
            return Err(DecodeError::TooLarge { needed, cap });
        }

        // Rows of the outer basis independent of the inner cut: coset
        // representatives of C1 inside C2, hit exactly once per coset.
        let mut echelon = inner.basis().row_vectors();
        let extension: Vec<FieldVector> = outer
            .basis()
            .row_vectors()
            .into_iter()
            .filter(|row| crate::fuzzy::reduce_against(&mut echelon, row))
            .collect();
        debug_assert_eq!(extension.len(), outer.dim() - inner.dim());

        let inner_rows = inner.basis().row_vectors();
        let mut entries = BTreeMap::new();
        for_each_tuple(p, extension.len(), |coeffs| {
            let mut rep = FieldVector::zero(inner.field(), inner.n());
            for (c, row) in coeffs.iter().zip(&extension) {
                if *c != 0 {
                    rep = rep.add(&row.scale(*c).expect("scalar in field")).expect("same space");
                }
            }
            let mut leader: Option<FieldVector> = None;
            let mut weight = usize::MAX;
            let mut ties = 0usize;
            for_each_tuple(p, inner_rows.len(), |msg| {
                let mut candidate = rep.clone();
                for (c, row) in msg.iter().zip(&inner_rows) {
                    if *c != 0 {
                        candidate =
                            candidate.add(&row.scale(*c).expect("scalar in field")).expect("same space");
                    }
                }
                let w = candidate.weight();
                if w < weight {
                    weight = w;
                    ties = 1;
                    leader = Some(candidate);
                } else if w == weight {
                    ties += 1;
                    if candidate.entries() < leader.as_ref().expect("set at min").entries() {
                        leader = Some(candidate);
                    }
                }
            });
            let leader = leader.expect("every coset is nonempty");
            let syndrome = inner.syndrome(&leader).expect("same space");
            entries.insert(
                syndrome.entries().to_vec(),
                TableEntry { leader, weight, unique: ties == 1 },
            );
        });
        debug_assert_eq!(entries.len() as u128, space_size(p, outer.dim() - inner.dim()).unwrap());
        Ok(SyndromeTable { alpha1, alpha2, inner, outer, entries })
    }

    pub fn alpha1(&self) -> Rational {
        self.alpha1
    }

    pub fn alpha2(&self) -> Rational {
        self.alpha2
    }

    /// The inner cut `C1`, the decoding target.
    pub fn inner(&self) -> &LinearCode {
        &self.inner
    }

    /// The outer cut `C2` the table is restricted to.
    pub fn outer(&self) -> &LinearCode {
        &self.outer
    }

    /// Number of table rows: `q^(k2-k1)`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Rows a classic syndrome decoder for `C1` would need: `q^(n-k1)`.
    pub fn classic_table_size(&self) -> Option<u128> {
        space_size(self.inner.field().modulus(), self.inner.n() - self.inner.dim())
    }

    /// Size advantage over the classic table: `q^(n-k2)`.
    pub fn reduction_ratio(&self) -> Option<u128> {
        space_size(self.inner.field().modulus(), self.inner.n() - self.outer.dim())
    }

    /// The entry for a syndrome of `C1`, if the syndrome is realized inside
    /// the outer cut.
    pub fn lookup(&self, syndrome: &FieldVector) -> Option<&TableEntry> {
        self.entries.get(syndrome.entries())
    }

    /// Iterates entries in syndrome order.
    pub fn iter(&self) -> impl Iterator<Item = (FieldVector, &TableEntry)> + '_ {
        self.entries.iter().map(|(s, e)| {
            (FieldVector::new(self.inner.field(), s.clone()).expect("stored residues"), e)
        })
    }

    /// One line per entry, in syndrome order:
    /// `<syndrome> <leader> <weight> <unique|tied>`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (syndrome, entry) in self.iter() {
            out.push_str(&format!(
                "{} {} {} {}\n",
                syndrome,
                entry.leader,
                entry.weight,
                if entry.unique { "unique" } else { "tied" }
            ));
        }
        out
    }
}

/// Outcome of a decode: the corrected word, the error removed, the corrected
/// word's membership, whether the used leader was a unique minimum
/// (`reliable`), and whether the input fell outside the chain's support
/// entirely (membership 0, corrected against the full space).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    pub codeword: FieldVector,
    pub error_vector: FieldVector,
    pub corrected_membership: Rational,
    pub reliable: bool,
    pub outside_chain: bool,
}

/// A decoder for one fuzzy chain, caching one syndrome table per level pair
/// `(α1, α2)` it encounters.
#[derive(Debug, Clone)]
pub struct FuzzyDecoder {
    code: FuzzyLinearCode,
    cap: u128,
    tables: HashMap<(Rational, Rational), Arc<SyndromeTable>>,
}

impl FuzzyDecoder {
    pub fn new(code: FuzzyLinearCode) -> Self {
        Self::with_cap(code, DEFAULT_ENUM_CAP)
    }

    pub fn with_cap(code: FuzzyLinearCode, cap: u128) -> Self {
        FuzzyDecoder { code, cap, tables: HashMap::new() }
    }

    pub fn code(&self) -> &FuzzyLinearCode {
        &self.code
    }

    /// Number of distinct level pairs tabulated so far.
    pub fn cached_tables(&self) -> usize {
        self.tables.len()
    }

    /// The table for `(alpha1, alpha2)`, built on first use.
    pub fn table(
        &mut self,
        alpha1: Rational,
        alpha2: Rational,
    ) -> Result<Arc<SyndromeTable>, DecodeError> {
        if let Some(hit) = self.tables.get(&(alpha1, alpha2)) {
            return Ok(hit.clone());
        }
        let table = Arc::new(SyndromeTable::build(&self.code, alpha1, alpha2, self.cap)?);
        self.tables.insert((alpha1, alpha2), table.clone());
        Ok(table)
    }

    /// Decodes `y` at confidence `alpha1`.
    ///
    /// A word with membership at least `alpha1` is returned unchanged and
    /// reliable. Otherwise its own membership becomes `α2`, the table for
    /// `(α1, α2)` resolves its syndrome, and the coset leader is removed;
    /// the corrected word always lands in the cut at `alpha1`. A word with
    /// membership 0 decodes against the full space and is flagged
    /// `outside_chain`.
    pub fn decode(&mut self, alpha1: Rational, y: &FieldVector) -> Result<DecodeResult, DecodeError> {
        if alpha1.is_zero() {
            return Err(DecodeError::Fuzzy(FuzzyError::InvalidLevel(alpha1)));
        }
        let membership = self.code.membership(y)?;
        if membership >= alpha1 {
            return Ok(DecodeResult {
                codeword: y.clone(),
                error_vector: FieldVector::zero(y.field(), y.len()),
                corrected_membership: membership,
                reliable: true,
                outside_chain: false,
            });
        }
        let table = self.table(alpha1, membership)?;
        let syndrome = table.inner().syndrome(y)?;
        let entry = table
            .lookup(&syndrome)
            .expect("a word's own membership cut contains it, so its syndrome is tabulated");
        let codeword = y.sub(&entry.leader)?;
        let corrected_membership = self.code.membership(&codeword)?;
        debug_assert!(corrected_membership >= alpha1);
        Ok(DecodeResult {
            codeword,
            error_vector: entry.leader.clone(),
            corrected_membership,
            reliable: entry.unique,
            outside_chain: membership.is_zero(),
        })
    }
}

/// Classic syndrome decoding of a plain linear code by the full standard
/// array: every vector of the space is scanned to pick the minimum-weight
/// leader of each of the `q^(n-k)` cosets (lexicographic tie-break, ties
/// marked unreliable). The scan is `q^n` vectors, bounded by `cap`.
pub fn classic_decode_capped(
    code: &LinearCode,
    y: &FieldVector,
    cap: u128,
) -> Result<DecodeResult, DecodeError> {
    let p = code.field().modulus();
    let needed = space_size(p, code.n()).unwrap_or(u128::MAX);
    if needed > cap {
        return Err(DecodeError::TooLarge { needed, cap });
    }
    let mut leaders: BTreeMap<Vec<u64>, (FieldVector, usize, usize)> = BTreeMap::new();
    for_each_tuple(p, code.n(), |digits| {
        let v = FieldVector::new(code.field(), digits.to_vec()).expect("valid residues");
        let s = code.syndrome(&v).expect("same space").entries().to_vec();
        let w = v.weight();
        match leaders.get_mut(&s) {
            None => {
                leaders.insert(s, (v, w, 1));
            }
            Some(best) => {
                if w < best.1 {
                    *best = (v, w, 1);
                } else if w == best.1 {
                    best.2 += 1;
                    if v.entries() < best.0.entries() {
                        best.0 = v;
                    }
                }
            }
        }
    });
    let s = code.syndrome(y)?;
    let (leader, _, ties) = leaders.get(s.entries()).expect("every syndrome has a coset");
    let codeword = y.sub(leader)?;
    debug_assert!(code.contains(&codeword).expect("same space"));
    Ok(DecodeResult {
        codeword,
        error_vector: leader.clone(),
        corrected_membership: Rational::one(),
        reliable: *ties == 1,
        outside_chain: false,
    })
}

/// [`classic_decode_capped`] with the default enumeration cap.
pub fn classic_decode(code: &LinearCode, y: &FieldVector) -> Result<DecodeResult, DecodeError> {
    classic_decode_capped(code, y, DEFAULT_ENUM_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;
    use crate::zoo;

    fn gf2() -> FieldSpec {
        FieldSpec::new(2).unwrap()
    }

    fn v2(bits: &str) -> FieldVector {
        let entries = bits.chars().map(|c| c.to_digit(10).unwrap() as u64).collect();
        FieldVector::new(gf2(), entries).unwrap()
    }

    fn r(n: u64, d: u64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn table_shape_on_the_parameterized_hamming_chain() {
        let code = zoo::fuzzy_hamming_d();
        let table = SyndromeTable::build(&code, r(5, 8), Rational::half(), 1 << 20).unwrap();
        // C1 has dimension 3, C2 dimension 4: two cosets.
        assert_eq!(table.len(), 2);
        assert_eq!(table.inner().dim(), 3);
        assert_eq!(table.outer().dim(), 4);
        assert_eq!(table.classic_table_size(), Some(32));
        assert_eq!(table.reduction_ratio(), Some(16));
        // The zero syndrome keeps the zero leader.
        let zero_s = table.inner().syndrome(&FieldVector::zero(gf2(), 8)).unwrap();
        let entry = table.lookup(&zero_s).unwrap();
        assert_eq!(entry.leader, FieldVector::zero(gf2(), 8));
        assert_eq!(entry.weight, 0);
        assert!(entry.unique);
        // The other coset sits inside the code, so its leader has weight 4.
        let other = table.iter().find(|(_, e)| e.weight != 0).unwrap().1;
        assert_eq!(other.weight, 4);
        assert!(!other.unique);
    }

    #[test]
    fn decode_walkthrough_inside_the_chain() {
        // x = sum of the first two generator rows, membership 3/4; the
        // fourth row is added as the error, dropping membership to 1/2.
        let mut decoder = FuzzyDecoder::new(zoo::fuzzy_hamming_d());
        let x = v2("11001100");
        let y = v2("11010010");
        assert_eq!(decoder.code().membership(&x).unwrap(), r(3, 4));
        assert_eq!(decoder.code().membership(&y).unwrap(), Rational::half());

        let out = decoder.decode(r(5, 8), &y).unwrap();
        assert_eq!(out.codeword, x);
        assert_eq!(out.error_vector, v2("00011110"));
        assert_eq!(out.corrected_membership, r(3, 4));
        assert!(!out.reliable);
        assert!(!out.outside_chain);
    }

    #[test]
    fn decode_identity_when_membership_reaches_the_level() {
        let mut decoder = FuzzyDecoder::new(zoo::fuzzy_hamming_d());
        let y = v2("11010010");
        let out = decoder.decode(Rational::half(), &y).unwrap();
        assert_eq!(out.codeword, y);
        assert!(out.error_vector.is_zero());
        assert_eq!(out.corrected_membership, Rational::half());
        assert!(out.reliable);
        assert_eq!(decoder.cached_tables(), 0);
    }

    #[test]
    fn decode_outside_the_chain_is_flagged() {
        let mut decoder = FuzzyDecoder::new(zoo::fuzzy_hamming_d());
        // Odd weight: not in the support (the extended Hamming code).
        let y = v2("11111110");
        assert!(decoder.code().membership(&y).unwrap().is_zero());
        let out = decoder.decode(r(5, 8), &y).unwrap();
        assert!(out.outside_chain);
        assert_eq!(out.codeword, v2("11001100"));
        assert_eq!(out.error_vector, v2("00110010"));
        assert_eq!(out.corrected_membership, r(3, 4));
        assert!(!out.reliable);
    }

    #[test]
    fn caching_is_per_level_pair() {
        let mut decoder = FuzzyDecoder::new(zoo::fuzzy_hamming_d());
        let y = v2("11010010");
        decoder.decode(r(5, 8), &y).unwrap();
        decoder.decode(r(5, 8), &y).unwrap();
        assert_eq!(decoder.cached_tables(), 1);
        decoder.decode(r(3, 4), &y).unwrap();
        assert_eq!(decoder.cached_tables(), 2);
    }

    #[test]
    fn rejects_degenerate_level_pairs() {
        let code = zoo::fuzzy_hamming_d();
        assert!(matches!(
            SyndromeTable::build(&code, Rational::half(), Rational::half(), 1 << 20),
            Err(DecodeError::NotNested { .. })
        ));
        assert!(matches!(
            SyndromeTable::build(&code, r(3, 8), Rational::half(), 1 << 20),
            Err(DecodeError::NotNested { .. })
        ));
        assert!(matches!(
            SyndromeTable::build(&code, Rational::one(), r(1, 8), 16),
            Err(DecodeError::TooLarge { needed: 128, cap: 16 })
        ));
    }

    #[test]
    fn classic_decoding_of_the_hamming_code() {
        let code = zoo::hamming_7_4();
        let message = FieldVector::new(gf2(), vec![1, 0, 1, 1]).unwrap();
        let codeword = code.encode(&message).unwrap();
        assert_eq!(codeword, v2("1011010"));
        let error = v2("0010000");
        let y = codeword.add(&error).unwrap();
        let out = classic_decode(&code, &y).unwrap();
        assert_eq!(out.codeword, codeword);
        assert_eq!(out.error_vector, error);
        assert_eq!(out.corrected_membership, Rational::one());
        assert!(out.reliable);

        assert!(matches!(
            classic_decode_capped(&code, &y, 16),
            Err(DecodeError::TooLarge { needed: 128, cap: 16 })
        ));
    }

    #[test]
    fn fuzzy_and_classic_agree_on_outer_cut_errors() {
        // For y inside C2 the whole coset y + C1 lies in C2, so the reduced
        // table and the classic table of C1 scan the same vectors and pick
        // identical leaders.
        let chain = zoo::fuzzy_hamming_d();
        let mut decoder = FuzzyDecoder::new(chain.clone());
        let inner = chain.cut(r(5, 8)).unwrap();
        let outer = chain.cut(Rational::half()).unwrap();
        for mask in 0u32..16 {
            let mut y = FieldVector::zero(gf2(), 8);
            for (i, row) in outer.basis().row_vectors().iter().enumerate() {
                if mask >> i & 1 == 1 {
                    y = y.add(row).unwrap();
                }
            }
            let fuzzy = decoder.decode(r(5, 8), &y).unwrap();
            let classic = classic_decode(&inner, &y).unwrap();
            assert_eq!(fuzzy.codeword, classic.codeword);
            assert_eq!(fuzzy.error_vector, classic.error_vector);
            assert_eq!(fuzzy.reliable, classic.reliable);
        }
    }
}
