//! Characters as weight-multiplicity maps.
//!
//! A [`WeightCharacter`] records multiplicities over joint (GL(V)-torus,
//! Sp(H)-torus) weights. Schur characters are computed by semistandard-
//! tableau counting (Kostka numbers); decompositions into irreducibles are
//! by greedy peeling from the lexicographically greatest weight, which is
//! exact for genuine characters because Kostka matrices are unitriangular.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::{enumerate_p, Partition};

macro_rules! fmt_weight_list {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "(")?;
            for (i, e) in self.0.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, ")")
        }
    };
}

/// GL(V)-torus weight: exponents of E_1..E_r, fixed length r.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GlWeight(pub Vec<u32>);

/// Sp(H)-torus weight, fixed length g (empty for pure GL characters).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SpWeight(pub Vec<i32>);

impl GlWeight {
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn sorted(&self) -> GlWeight {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        GlWeight(v)
    }
}

impl SpWeight {
    pub fn empty() -> Self {
        SpWeight(Vec::new())
    }

    pub fn negate(&self) -> SpWeight {
        SpWeight(self.0.iter().map(|&s| -s).collect())
    }
}

impl fmt::Display for GlWeight {
    fmt_weight_list!();
}

impl fmt::Display for SpWeight {
    fmt_weight_list!();
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightCharError {
    /// Peeling hit a negative multiplicity: the input is a virtual character.
    VirtualCharacter {
        gl: GlWeight,
        sp: SpWeight,
        mult: i64,
    },
    /// The lex-greatest weight is not weakly decreasing: not a polynomial
    /// GL character (symmetry violated).
    NotSymmetric { gl: GlWeight },
    /// Mixed or unsupported torus ranks.
    RankMismatch { expected: usize, found: usize },
    /// plethysm_ext_sym2 requires r ≥ 2ℓ so no diagram is truncated.
    RankTooSmall { rank: usize, needed: usize },
    /// The peeled plethysm disagrees with the 𝒫_ℓ enumeration.
    PlethysmMismatch,
    /// A partition longer than g is not an Sp(2g) highest weight.
    LengthExceedsRank { length: usize, rank: usize },
}

impl fmt::Display for WeightCharError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightCharError::VirtualCharacter { gl, sp, mult } => {
                write!(
                    f,
                    "virtual character: multiplicity {mult} at gl={gl} sp={sp}"
                )
            }
            WeightCharError::NotSymmetric { gl } => {
                write!(
                    f,
                    "not a polynomial GL character: peak weight {gl} is not dominant"
                )
            }
            WeightCharError::RankMismatch { expected, found } => {
                write!(f, "torus rank mismatch: expected {expected}, found {found}")
            }
            WeightCharError::RankTooSmall { rank, needed } => {
                write!(f, "rank {rank} too small, need at least {needed}")
            }
            WeightCharError::PlethysmMismatch => {
                write!(f, "plethysm does not match the P_l family")
            }
            WeightCharError::LengthExceedsRank { length, rank } => {
                write!(
                    f,
                    "partition of length {length} is not an Sp highest weight for g={rank}"
                )
            }
        }
    }
}

impl core::error::Error for WeightCharError {}

/// Multiplicity map over joint torus weights. Multiplicities may be negative
/// for virtual characters (differences); genuine representations are
/// nonnegative and symmetric under permutations of the GL exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCharacter {
    rank_gl: usize,
    rank_sp: usize,
    mults: BTreeMap<(GlWeight, SpWeight), i64>,
}

impl WeightCharacter {
    pub fn zero(rank_gl: usize, rank_sp: usize) -> Self {
        WeightCharacter {
            rank_gl,
            rank_sp,
            mults: BTreeMap::new(),
        }
    }

    pub fn rank_gl(&self) -> usize {
        self.rank_gl
    }

    pub fn rank_sp(&self) -> usize {
        self.rank_sp
    }

    pub fn add_mult(&mut self, gl: GlWeight, sp: SpWeight, delta: i64) {
        assert_eq!(gl.0.len(), self.rank_gl, "GL weight length mismatch");
        assert_eq!(sp.0.len(), self.rank_sp, "Sp weight length mismatch");
        if delta == 0 {
            return;
        }
        match self.mults.entry((gl, sp)) {
            Entry::Vacant(slot) => {
                slot.insert(delta);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += delta;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
        }
    }

    pub fn mult(&self, gl: &GlWeight, sp: &SpWeight) -> i64 {
        self.mults
            .get(&(gl.clone(), sp.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GlWeight, &SpWeight, i64)> {
        self.mults.iter().map(|((gl, sp), &m)| (gl, sp, m))
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn is_genuine(&self) -> bool {
        self.mults.values().all(|&m| m >= 0)
    }

    /// Total dimension: sum of all multiplicities.
    pub fn total_dim(&self) -> i64 {
        self.mults.values().sum()
    }

    pub fn add(&mut self, other: &WeightCharacter) {
        assert_eq!((self.rank_gl, self.rank_sp), (other.rank_gl, other.rank_sp));
        for ((gl, sp), &m) in &other.mults {
            self.add_mult(gl.clone(), sp.clone(), m);
        }
    }

    /// The GL character obtained by restricting to one Sp weight.
    pub fn gl_slice(&self, sp: &SpWeight) -> WeightCharacter {
        let mut out = WeightCharacter::zero(self.rank_gl, 0);
        for ((gl, s), &m) in &self.mults {
            if s == sp {
                out.add_mult(gl.clone(), SpWeight::empty(), m);
            }
        }
        out
    }

    /// Distinct Sp weights present, ascending.
    pub fn sp_weights(&self) -> Vec<SpWeight> {
        let mut out: Vec<SpWeight> = self.mults.keys().map(|(_, s)| s.clone()).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Symmetry of a genuine GL character under permuting exponents.
    pub fn is_weyl_symmetric(&self) -> bool {
        self.mults.iter().all(|((gl, sp), &m)| {
            let sorted = gl.sorted();
            self.mult(&sorted, sp) == m
        })
    }
}

/// Label of the Sp(H) tensor factor in a decomposition entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpLabel {
    /// GL-only decomposition (no Sp factor); serializes as null.
    GlOnly,
    /// m-th symmetric power H_m of the rank-one symplectic space (g = 1).
    Sym(u32),
}

impl SpLabel {
    fn sort_key(&self) -> i64 {
        match self {
            SpLabel::GlOnly => -1,
            SpLabel::Sym(m) => i64::from(*m),
        }
    }

    /// Dimension of the labelled Sp factor.
    pub fn dimension(&self) -> u64 {
        match self {
            SpLabel::GlOnly => 1,
            SpLabel::Sym(m) => u64::from(*m) + 1,
        }
    }
}

impl PartialOrd for SpLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SpLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

/// One (Sp label, GL partition, multiplicity) summand of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub sp: SpLabel,
    pub gl: Partition,
    pub mult: u64,
}

/// A list of isotypic summands, sorted by descending Sp label then
/// descending GL partition in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DecompositionReport {
    pub entries: Vec<ReportEntry>,
}

impl DecompositionReport {
    pub fn sort(&mut self) {
        self.entries
            .sort_by(|a, b| b.sp.cmp(&a.sp).then_with(|| b.gl.cmp(&a.gl)));
    }

    /// Σ mult · dim(Sp factor) · dim S^λ(V) at ambient GL rank r.
    pub fn total_dimension(&self, r: usize) -> u64 {
        self.entries
            .iter()
            .map(|e| e.mult * e.sp.dimension() * e.gl.gl_dimension(r))
            .sum()
    }
}

impl fmt::Display for DecompositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let shape = if e.gl.is_empty() {
                alloc::string::String::from("S(0)")
            } else {
                let parts: Vec<alloc::string::String> =
                    e.gl.parts().iter().map(|p| alloc::format!("{p}")).collect();
                alloc::format!("S({})", parts.join(","))
            };
            if e.mult != 1 {
                write!(f, "{}·", e.mult)?;
            }
            match &e.sp {
                SpLabel::GlOnly => write!(f, "{shape}")?,
                SpLabel::Sym(m) => write!(f, "H_{m} ⊗ {shape}")?,
            }
        }
        Ok(())
    }
}

/// Memo table for Schur character weight maps, keyed by (shape, rank).
/// Owned by the caller; per-thread by construction.
#[derive(Default)]
pub struct SchurTable {
    memo: BTreeMap<(Vec<u32>, usize), Rc<BTreeMap<Vec<u32>, i64>>>,
}

impl SchurTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Weight map of S^λ with entries in 1..=m: exponent vector → Kostka
    /// number. Built by peeling horizontal strips for the largest letter.
    pub fn weight_map(&mut self, shape: &Partition, m: usize) -> Rc<BTreeMap<Vec<u32>, i64>> {
        if let Some(hit) = self.memo.get(&(shape.parts().to_vec(), m)) {
            return Rc::clone(hit);
        }
        let mut out: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        if m == 0 {
            if shape.is_empty() {
                out.insert(Vec::new(), 1);
            }
        } else if shape.length() <= m {
            for inner in horizontal_strip_predecessors(shape) {
                let strip = (shape.size() - inner.size()) as u32;
                let sub = self.weight_map(&inner, m - 1);
                for (w, &k) in sub.iter() {
                    let mut key = w.clone();
                    key.push(strip);
                    *out.entry(key).or_insert(0) += k;
                }
            }
        }
        let rc = Rc::new(out);
        self.memo
            .insert((shape.parts().to_vec(), m), Rc::clone(&rc));
        rc
    }
}

/// All μ ⊆ λ such that λ/μ is a horizontal strip (μ interlaces λ).
fn horizontal_strip_predecessors(shape: &Partition) -> Vec<Partition> {
    let rows = shape.length();
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(rows);
    fn rec(shape: &Partition, row: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == shape.length() {
            out.push(Partition::new(current.clone()).expect("interlacing gives a partition"));
            return;
        }
        let lo = shape.part(row + 1);
        let hi = shape.part(row);
        for v in lo..=hi {
            current.push(v);
            rec(shape, row + 1, current, out);
            current.pop();
        }
    }
    rec(shape, 0, &mut current, &mut out);
    out
}

/// Character of S^λ(V) at dim V = r, as a pure GL weight character. Zero
/// when λ has more than r rows.
pub fn schur_character(shape: &Partition, r: usize) -> WeightCharacter {
    let mut table = SchurTable::new();
    schur_character_with(&mut table, shape, r)
}

pub fn schur_character_with(
    table: &mut SchurTable,
    shape: &Partition,
    r: usize,
) -> WeightCharacter {
    let mut out = WeightCharacter::zero(r, 0);
    if shape.length() > r {
        return out;
    }
    for (w, &k) in table.weight_map(shape, r).iter() {
        out.add_mult(GlWeight(w.clone()), SpWeight::empty(), k);
    }
    out
}

/// Greedy highest-weight peeling of a genuine GL character into Schur
/// characters. The peel order is the lexicographically greatest remaining
/// weight; unitriangularity of Kostka matrices makes this exact.
pub fn decompose_gl(chi: &WeightCharacter) -> Result<DecompositionReport, WeightCharError> {
    if chi.rank_sp != 0 {
        return Err(WeightCharError::RankMismatch {
            expected: 0,
            found: chi.rank_sp,
        });
    }
    let r = chi.rank_gl;
    let mut rem = chi.clone();
    let mut table = SchurTable::new();
    let mut report = DecompositionReport::default();
    while let Some(((gl, sp), &m)) = rem.mults.last_key_value() {
        let (gl, sp) = (gl.clone(), sp.clone());
        if m < 0 {
            return Err(WeightCharError::VirtualCharacter { gl, sp, mult: m });
        }
        if !gl.is_dominant() {
            return Err(WeightCharError::NotSymmetric { gl });
        }
        let shape = Partition::new(gl.0.clone())
            .map_err(|_| WeightCharError::NotSymmetric { gl: gl.clone() })?;
        for (w, &k) in table.weight_map(&shape, r).iter() {
            rem.add_mult(GlWeight(w.clone()), SpWeight::empty(), -m * k);
        }
        report.entries.push(ReportEntry {
            sp: SpLabel::GlOnly,
            gl: shape,
            mult: m as u64,
        });
    }
    report.sort();
    Ok(report)
}

/// Joint decomposition of a genuine Sp(2)×GL(V) character (g = 1 only)
/// into H_m ⊗ S^λ summands, peeling the greatest Sp weight first. H_m has
/// Sp weights m, m−2, …, −m, each of multiplicity one.
pub fn decompose_sp_gl(chi: &WeightCharacter) -> Result<DecompositionReport, WeightCharError> {
    if chi.rank_sp != 1 {
        return Err(WeightCharError::RankMismatch {
            expected: 1,
            found: chi.rank_sp,
        });
    }
    let r = chi.rank_gl;
    let mut rem = chi.clone();
    let mut table = SchurTable::new();
    let mut report = DecompositionReport::default();
    loop {
        let Some(top) = rem.mults.keys().map(|(_, s)| s.0[0]).max() else {
            break;
        };
        if top < 0 {
            let ((gl, sp), &m) = rem.mults.last_key_value().expect("nonempty");
            return Err(WeightCharError::VirtualCharacter {
                gl: gl.clone(),
                sp: sp.clone(),
                mult: m,
            });
        }
        let slice = rem.gl_slice(&SpWeight(vec![top]));
        let gl_report = decompose_gl(&slice)?;
        if gl_report.entries.is_empty() {
            // Slice summed to zero multiplicities; nothing at this weight.
            break;
        }
        for entry in &gl_report.entries {
            let schur = table.weight_map(&entry.gl, r);
            let mut t = -top;
            while t <= top {
                for (w, &k) in schur.iter() {
                    rem.add_mult(
                        GlWeight(w.clone()),
                        SpWeight(vec![t]),
                        -(entry.mult as i64) * k,
                    );
                }
                t += 2;
            }
            report.entries.push(ReportEntry {
                sp: SpLabel::Sym(top as u32),
                gl: entry.gl.clone(),
                mult: entry.mult,
            });
        }
    }
    if let Some(((gl, sp), &m)) = rem.mults.iter().find(|(_, &m)| m != 0) {
        return Err(WeightCharError::VirtualCharacter {
            gl: gl.clone(),
            sp: sp.clone(),
            mult: m,
        });
    }
    report.sort();
    Ok(report)
}

/// Character of H_m ⊗ S^λ(V) as a joint (GL, Sp) character with g = 1.
pub fn sym_h_tensor_schur(m: u32, shape: &Partition, r: usize) -> WeightCharacter {
    let mut out = WeightCharacter::zero(r, 1);
    let mut table = SchurTable::new();
    let schur = table.weight_map(shape, r);
    let mut t = -(m as i32);
    while t <= m as i32 {
        for (w, &k) in schur.iter() {
            out.add_mult(GlWeight(w.clone()), SpWeight(vec![t]), k);
        }
        t += 2;
    }
    out
}

/// Character of Λ^ℓ(S²V) by direct monomial enumeration, peeled and checked
/// against the 𝒫_ℓ parameterization of the plethysm Λ^ℓ ∘ S².
pub fn plethysm_ext_sym2(ell: usize, r: usize) -> Result<DecompositionReport, WeightCharError> {
    if r < 2 * ell {
        return Err(WeightCharError::RankTooSmall {
            rank: r,
            needed: 2 * ell,
        });
    }
    let chi = ext_sym2_character(ell, r);
    let report = decompose_gl(&chi)?;
    let expected: Vec<Partition> = enumerate_p(ell);
    let got: Vec<Partition> = report.entries.iter().map(|e| e.gl.clone()).collect();
    let all_mult_one = report.entries.iter().all(|e| e.mult == 1);
    let mut expected_sorted = expected;
    expected_sorted.sort();
    let mut got_sorted = got;
    got_sorted.sort();
    if !all_mult_one || expected_sorted != got_sorted {
        return Err(WeightCharError::PlethysmMismatch);
    }
    Ok(report)
}

/// Weight character of Λ^ℓ(S²V): one monomial per ℓ-subset of the basis
/// {E_i E_j | i ≤ j}.
pub fn ext_sym2_character(ell: usize, r: usize) -> WeightCharacter {
    let gens: Vec<(usize, usize)> = (0..r).flat_map(|i| (i..r).map(move |j| (i, j))).collect();
    let mut chi = WeightCharacter::zero(r, 0);
    if ell > gens.len() {
        return chi;
    }
    let mut subset: Vec<usize> = Vec::with_capacity(ell);
    fn rec(
        gens: &[(usize, usize)],
        start: usize,
        remaining: usize,
        r: usize,
        subset: &mut Vec<usize>,
        chi: &mut WeightCharacter,
    ) {
        if remaining == 0 {
            let mut w = vec![0u32; r];
            for &idx in subset.iter() {
                let (i, j) = gens[idx];
                w[i] += 1;
                w[j] += 1;
            }
            chi.add_mult(GlWeight(w), SpWeight::empty(), 1);
            return;
        }
        for idx in start..=gens.len().saturating_sub(remaining) {
            subset.push(idx);
            rec(gens, idx + 1, remaining - 1, r, subset, chi);
            subset.pop();
        }
    }
    rec(&gens, 0, ell, r, &mut subset, &mut chi);
    chi
}

/// Dimension of the irreducible Sp(2g)-module with highest weight λ
/// (Weyl dimension formula for type C_g).
pub fn sp_dimension(shape: &Partition, g: usize) -> Result<u64, WeightCharError> {
    if shape.length() > g {
        return Err(WeightCharError::LengthExceedsRank {
            length: shape.length(),
            rank: g,
        });
    }
    let l: Vec<i128> = (0..g)
        .map(|i| i128::from(shape.part(i)) + (g - i) as i128)
        .collect();
    let m: Vec<i128> = (0..g).map(|i| (g - i) as i128).collect();
    let mut num = 1i128;
    let mut den = 1i128;
    for i in 0..g {
        num *= l[i];
        den *= m[i];
        for j in i + 1..g {
            num *= l[i] * l[i] - l[j] * l[j];
            den *= m[i] * m[i] - m[j] * m[j];
        }
    }
    assert_eq!(num % den, 0, "Weyl dimension must be an integer");
    Ok((num / den) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gl(w: &[u32]) -> GlWeight {
        GlWeight(w.to_vec())
    }

    #[test]
    fn schur_fundamental_and_symmetric_square() {
        let chi = schur_character(&Partition::of(&[1]), 2);
        assert_eq!(chi.mult(&gl(&[1, 0]), &SpWeight::empty()), 1);
        assert_eq!(chi.mult(&gl(&[0, 1]), &SpWeight::empty()), 1);
        assert_eq!(chi.total_dim(), 2);

        let chi = schur_character(&Partition::of(&[2]), 2);
        for w in [[2, 0], [1, 1], [0, 2]] {
            assert_eq!(chi.mult(&gl(&w), &SpWeight::empty()), 1);
        }
        assert_eq!(chi.total_dim(), 3);
    }

    #[test]
    fn schur_two_one_rank_two() {
        let chi = schur_character(&Partition::of(&[2, 1]), 2);
        assert_eq!(chi.mult(&gl(&[2, 1]), &SpWeight::empty()), 1);
        assert_eq!(chi.mult(&gl(&[1, 2]), &SpWeight::empty()), 1);
        assert_eq!(chi.total_dim(), 2);
    }

    #[test]
    fn schur_dimension_matches_hook_content() {
        for n in 0..=6u32 {
            for shape in Partition::all_of_size(n) {
                for r in 1..=5usize {
                    let chi = schur_character(&shape, r);
                    assert_eq!(
                        chi.total_dim() as u64,
                        shape.gl_dimension(r),
                        "λ={shape:?} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn schur_truncates_to_zero() {
        assert!(schur_character(&Partition::of(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn kostka_unitriangularity() {
        // Multiplicity 1 at λ itself, 0 at anything strictly above in
        // dominance (equivalently: at any lex-greater weight).
        for n in 1..=6u32 {
            for shape in Partition::all_of_size(n) {
                for r in shape.length()..=6usize {
                    let chi = schur_character(&shape, r);
                    let mut top = shape.parts().to_vec();
                    top.resize(r, 0);
                    assert_eq!(chi.mult(&GlWeight(top.clone()), &SpWeight::empty()), 1);
                    for (w, _, m) in chi.iter() {
                        assert!(m > 0);
                        assert!(
                            w.0 <= top,
                            "weight {w} above highest weight {shape:?} at r={r}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn decompose_gl_round_trips_schur() {
        let report = decompose_gl(&schur_character(&Partition::of(&[3, 1]), 4)).unwrap();
        assert_eq!(report.entries.len(), 1);
        assert_eq!(report.entries[0].gl, Partition::of(&[3, 1]));
        assert_eq!(report.entries[0].mult, 1);
        assert_eq!(report.entries[0].sp, SpLabel::GlOnly);
    }

    #[test]
    fn decompose_gl_tensor_square_of_v() {
        // V ⊗ V at r = 2: weights (2,0),(0,2) once, (1,1) twice.
        let mut chi = WeightCharacter::zero(2, 0);
        for (w, m) in [([2, 0], 1), ([1, 1], 2), ([0, 2], 1)] {
            chi.add_mult(gl(&w), SpWeight::empty(), m);
        }
        let report = decompose_gl(&chi).unwrap();
        assert_eq!(report.entries.len(), 2);
        assert_eq!(report.entries[0].gl, Partition::of(&[2]));
        assert_eq!(report.entries[1].gl, Partition::of(&[1, 1]));
        assert!(report.entries.iter().all(|e| e.mult == 1));
        assert_eq!(report.total_dimension(2), 4);
    }

    #[test]
    fn decompose_gl_random_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let shapes: Vec<Partition> = (0..=6u32).flat_map(Partition::all_of_size).collect();
        for _ in 0..40 {
            let r = rng.gen_range(1..=6usize);
            let mut expected: BTreeMap<Partition, u64> = BTreeMap::new();
            let mut chi = WeightCharacter::zero(r, 0);
            let mut table = SchurTable::new();
            for _ in 0..rng.gen_range(1..=4) {
                let shape = shapes[rng.gen_range(0..shapes.len())].clone();
                if shape.length() > r {
                    continue;
                }
                let mult = rng.gen_range(1..=3u64);
                *expected.entry(shape.clone()).or_insert(0) += mult;
                for (w, &k) in table.weight_map(&shape, r).iter() {
                    chi.add_mult(GlWeight(w.clone()), SpWeight::empty(), mult as i64 * k);
                }
            }
            let report = decompose_gl(&chi).unwrap();
            let got: BTreeMap<Partition, u64> = report
                .entries
                .iter()
                .map(|e| (e.gl.clone(), e.mult))
                .collect();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn decompose_gl_rejects_virtual() {
        let mut chi = WeightCharacter::zero(2, 0);
        chi.add_mult(gl(&[1, 0]), SpWeight::empty(), -1);
        chi.add_mult(gl(&[0, 1]), SpWeight::empty(), -1);
        assert!(matches!(
            decompose_gl(&chi),
            Err(WeightCharError::VirtualCharacter { .. })
        ));
    }

    #[test]
    fn decompose_sp_gl_irreducible() {
        let chi = sym_h_tensor_schur(1, &Partition::of(&[1]), 1);
        let report = decompose_sp_gl(&chi).unwrap();
        assert_eq!(report.entries.len(), 1);
        assert_eq!(report.entries[0].sp, SpLabel::Sym(1));
        assert_eq!(report.entries[0].gl, Partition::of(&[1]));
        assert_eq!(report.entries[0].mult, 1);
    }

    #[test]
    fn decompose_sp_gl_two_summands() {
        // char(H_2 ⊗ S^(1,1)) + char(H_1 ⊗ S^(3)) at r = 3: the intro-table
        // H_2 answer.
        let mut chi = sym_h_tensor_schur(2, &Partition::of(&[1, 1]), 3);
        chi.add(&sym_h_tensor_schur(1, &Partition::of(&[3]), 3));
        let report = decompose_sp_gl(&chi).unwrap();
        let got: Vec<(SpLabel, Partition, u64)> = report
            .entries
            .iter()
            .map(|e| (e.sp.clone(), e.gl.clone(), e.mult))
            .collect();
        assert_eq!(
            got,
            vec![
                (SpLabel::Sym(2), Partition::of(&[1, 1]), 1),
                (SpLabel::Sym(1), Partition::of(&[3]), 1),
            ]
        );
        assert_eq!(report.total_dimension(3), chi.total_dim() as u64);
    }

    #[test]
    fn plethysm_small_cases() {
        let report = plethysm_ext_sym2(1, 2).unwrap();
        assert_eq!(report.entries[0].gl, Partition::of(&[2]));

        let report = plethysm_ext_sym2(2, 4).unwrap();
        assert_eq!(report.entries.len(), 1);
        assert_eq!(report.entries[0].gl, Partition::of(&[3, 1]));

        // Oracle-frozen: Λ³(S²V) = S^(4,1,1) ⊕ S^(3,3).
        let report = plethysm_ext_sym2(3, 6).unwrap();
        let got: Vec<Partition> = report.entries.iter().map(|e| e.gl.clone()).collect();
        assert_eq!(got, vec![Partition::of(&[4, 1, 1]), Partition::of(&[3, 3])]);
    }

    #[test]
    fn plethysm_dimension_audit() {
        for ell in 1..=3usize {
            let r = 2 * ell;
            let chi = ext_sym2_character(ell, r);
            let report = plethysm_ext_sym2(ell, r).unwrap();
            assert_eq!(report.total_dimension(r), chi.total_dim() as u64);
        }
        assert!(matches!(
            plethysm_ext_sym2(3, 4),
            Err(WeightCharError::RankTooSmall { .. })
        ));
    }

    #[test]
    fn sp_dimensions() {
        for k in 0..=5u32 {
            let shape = if k == 0 {
                Partition::empty()
            } else {
                Partition::of(&[k])
            };
            assert_eq!(sp_dimension(&shape, 1).unwrap(), u64::from(k) + 1);
        }
        assert_eq!(sp_dimension(&Partition::empty(), 3).unwrap(), 1);
        assert_eq!(sp_dimension(&Partition::of(&[1, 1]), 2).unwrap(), 5);
        // Λ²(H) for Sp(4): trivial ⊕ 5-dimensional, total C(4,2) = 6.
        assert_eq!(
            sp_dimension(&Partition::empty(), 2).unwrap()
                + sp_dimension(&Partition::of(&[1, 1]), 2).unwrap(),
            6
        );
        assert_eq!(sp_dimension(&Partition::of(&[1]), 2).unwrap(), 4);
        assert!(sp_dimension(&Partition::of(&[1, 1]), 1).is_err());
    }

    #[test]
    fn report_sorting_and_display() {
        let mut report = DecompositionReport {
            entries: vec![
                ReportEntry {
                    sp: SpLabel::Sym(0),
                    gl: Partition::of(&[4]),
                    mult: 1,
                },
                ReportEntry {
                    sp: SpLabel::Sym(3),
                    gl: Partition::of(&[1, 1, 1]),
                    mult: 1,
                },
                ReportEntry {
                    sp: SpLabel::Sym(2),
                    gl: Partition::of(&[3, 1]),
                    mult: 1,
                },
            ],
        };
        report.sort();
        assert_eq!(report.entries[0].sp, SpLabel::Sym(3));
        assert_eq!(report.entries[2].sp, SpLabel::Sym(0));
        assert_eq!(
            alloc::format!("{report}"),
            "H_3 ⊗ S(1,1,1) + H_2 ⊗ S(3,1) + H_0 ⊗ S(4)"
        );
    }
}
