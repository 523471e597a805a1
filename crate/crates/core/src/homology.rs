//! Homology by two independent routes, Kostant harmonic spaces (Laplacian
//! kernels) and ker/im ranks, assembled per weight block into weight
//! characters and decomposed into Sp(H)-modules tensor Schur functors.
//!
//! Linear algebra runs only on dominant-representative blocks: operators
//! commute with the GL(V) × Sp(H) action, so a Weyl group element carries
//! the block at (w, s) isomorphically onto any permutation of w (and onto
//! −s for g = 1). Full characters are recovered by orbit expansion; the
//! small-rank tests check the expansion against direct enumeration.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cecomplex::{ChainBlock, Complex};
use crate::matrix::KernelBasis;
use crate::partition::{enumerate_o, Partition};
use crate::twostep::TwoStepAlgebra;
use crate::weightchar::{
    decompose_gl, decompose_sp_gl, DecompositionReport, GlWeight, SpWeight, WeightCharError,
    WeightCharacter,
};

/// Coordinates of one weight block of one bidegree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BlockTask {
    pub k: usize,
    pub l: usize,
    pub gl: GlWeight,
    pub sp: SpWeight,
}

/// Exact per-block homology data from both routes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockHomology {
    pub dim: usize,
    pub harmonic_dim: usize,
    pub kerim_dim: usize,
    pub rank_out: usize,
    pub rank_in: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomologyError {
    /// The two homology routes disagree on a block: internal inconsistency.
    KostantMismatch {
        task: BlockTask,
        harmonic: usize,
        kerim: usize,
    },
    /// dim − rank(∂ out) − rank(∂ in) went negative on a block.
    NegativeBlockValue { task: BlockTask, value: i64 },
    /// Peeling failed (virtual character or rank mismatch).
    Weight(WeightCharError),
    /// A decomposition's dimensions do not add up to the character's.
    DimensionAudit { expected: u64, found: u64 },
    /// The Lie₂ homology does not match the 𝒪_k enumeration.
    SiggMismatch {
        r: usize,
        k: usize,
        expected: Vec<Partition>,
        found: Vec<Partition>,
    },
}

impl From<WeightCharError> for HomologyError {
    fn from(e: WeightCharError) -> Self {
        HomologyError::Weight(e)
    }
}

impl fmt::Display for HomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyError::KostantMismatch { task, harmonic, kerim } => write!(
                f,
                "Kostant cross-check failed on block (k={}, l={}, gl={}, sp={}): harmonic {} vs ker/im {}",
                task.k, task.l, task.gl, task.sp, harmonic, kerim
            ),
            HomologyError::NegativeBlockValue { task, value } => write!(
                f,
                "negative homology dimension {} on block (k={}, l={}, gl={}, sp={})",
                value, task.k, task.l, task.gl, task.sp
            ),
            HomologyError::Weight(e) => write!(f, "decomposition failed: {e}"),
            HomologyError::DimensionAudit { expected, found } => {
                write!(f, "dimension audit failed: character {expected}, report {found}")
            }
            HomologyError::SiggMismatch { r, k, expected, found } => write!(
                f,
                "Lie2 homology mismatch at r={r}, k={k}: expected {expected:?}, found {found:?}"
            ),
        }
    }
}

impl core::error::Error for HomologyError {}

/// Rank of a sparse integer matrix (fraction-free elimination).
pub fn rank(m: &crate::matrix::SparseIntMatrix) -> usize {
    m.rank()
}

/// Primitive integer kernel basis of a sparse integer matrix.
pub fn kernel_basis(m: &crate::matrix::SparseIntMatrix) -> KernelBasis {
    m.kernel_basis()
}

/// Dominant-representative tasks of one bidegree: GL weight sorted
/// decreasing; for g = 1 additionally Sp weight ≥ 0.
pub fn plan_bidegree(cx: &Complex, k: usize, l: usize) -> Vec<BlockTask> {
    cx.bidegree_blocks(k, l)
        .into_iter()
        .filter(|b| b.gl.is_dominant())
        .filter(|b| cx.g() != 1 || b.sp.0[0] >= 0)
        .map(|b| BlockTask {
            k,
            l,
            gl: b.gl,
            sp: b.sp,
        })
        .collect()
}

fn materialize(cx: &Complex, task: &BlockTask) -> ChainBlock {
    cx.block(task.k, task.l, &task.gl, &task.sp)
}

/// Kernel dimension of the block Laplacian (Kostant route).
pub fn block_harmonic_dim(cx: &Complex, task: &BlockTask) -> usize {
    let block = materialize(cx, task);
    block.dim() - cx.laplacian(&block).rank()
}

/// dim ker ∂ − rank ∂(incoming) on one block (ker/im route).
pub fn block_kerim(cx: &Complex, task: &BlockTask) -> Result<(usize, usize, usize), HomologyError> {
    let block = materialize(cx, task);
    let rank_out = cx.boundary(&block).rank();
    let rank_in = if task.l >= 1 && task.k + 2 <= cx.hv_count() {
        let upstream = cx.block(task.k + 2, task.l - 1, &task.gl, &task.sp);
        cx.boundary(&upstream).rank()
    } else {
        0
    };
    let value = block.dim() as i64 - rank_out as i64 - rank_in as i64;
    if value < 0 {
        return Err(HomologyError::NegativeBlockValue {
            task: task.clone(),
            value,
        });
    }
    Ok((value as usize, rank_out, rank_in))
}

/// Both homology routes on one block, cross-checked exactly.
pub fn block_homology(cx: &Complex, task: &BlockTask) -> Result<BlockHomology, HomologyError> {
    let block = materialize(cx, task);
    let dim = block.dim();
    let harmonic_dim = dim - cx.laplacian(&block).rank();
    let (kerim_dim, rank_out, rank_in) = block_kerim(cx, task)?;
    if harmonic_dim != kerim_dim {
        return Err(HomologyError::KostantMismatch {
            task: task.clone(),
            harmonic: harmonic_dim,
            kerim: kerim_dim,
        });
    }
    Ok(BlockHomology {
        dim,
        harmonic_dim,
        kerim_dim,
        rank_out,
        rank_in,
    })
}

/// Distinct permutations of a weight vector.
fn gl_orbit(w: &GlWeight) -> Vec<GlWeight> {
    let mut v = w.0.clone();
    v.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(GlWeight(v.clone()));
        if !next_permutation(&mut v) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Expands per-representative dimensions into a full weight character using
/// the GL Weyl orbit and, for g = 1, the Sp weight mirror.
pub fn assemble_character(cx: &Complex, results: &[(BlockTask, usize)]) -> WeightCharacter {
    let mut chi = WeightCharacter::zero(cx.r(), cx.g());
    for (task, value) in results {
        if *value == 0 {
            continue;
        }
        for w in gl_orbit(&task.gl) {
            chi.add_mult(w.clone(), task.sp.clone(), *value as i64);
            if cx.g() == 1 && task.sp.0[0] > 0 {
                chi.add_mult(w, task.sp.negate(), *value as i64);
            }
        }
    }
    chi
}

/// Weight character of the whole chain bidegree K_{k,ℓ}.
pub fn bidegree_character(cx: &Complex, k: usize, l: usize) -> WeightCharacter {
    let results: Vec<(BlockTask, usize)> = plan_bidegree(cx, k, l)
        .into_iter()
        .map(|t| {
            let dim = materialize(cx, &t).dim();
            (t, dim)
        })
        .collect();
    let chi = assemble_character(cx, &results);
    debug_assert_eq!(chi.total_dim() as u64, cx.bidegree_dim(k, l));
    chi
}

/// Harmonic character of bidegree (k, ℓ): per weight block, the kernel
/// dimension of the block Laplacian. By Kostant's theorem this equals the
/// homology character.
pub fn harmonic_character(cx: &Complex, k: usize, l: usize) -> WeightCharacter {
    let results: Vec<(BlockTask, usize)> = plan_bidegree(cx, k, l)
        .into_iter()
        .map(|t| {
            let d = block_harmonic_dim(cx, &t);
            (t, d)
        })
        .collect();
    assemble_character(cx, &results)
}

/// Homology character of bidegree (k, ℓ) via ker/im ranks.
pub fn homology_character_kerim(
    cx: &Complex,
    k: usize,
    l: usize,
) -> Result<WeightCharacter, HomologyError> {
    let mut results = Vec::new();
    for t in plan_bidegree(cx, k, l) {
        let (d, _, _) = block_kerim(cx, &t)?;
        results.push((t, d));
    }
    Ok(assemble_character(cx, &results))
}

/// A fully decomposed homology group H_k(L_H(V)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub g: usize,
    pub r: usize,
    pub k: usize,
    pub character: WeightCharacter,
    pub report: DecompositionReport,
    /// ℓ ↦ dim of the bidegree-(k−ℓ, ℓ) homology (all ℓ probed, zeros kept).
    pub dims_by_bidegree: BTreeMap<usize, u64>,
}

impl HomologyResult {
    pub fn total_dim(&self) -> u64 {
        self.dims_by_bidegree.values().sum()
    }
}

/// All dominant-representative tasks contributing to H_k (homological
/// degree k = exterior degree in H⊗V plus exterior degree in S²V).
pub fn plan_homology(cx: &Complex, k: usize) -> Vec<BlockTask> {
    let mut tasks = Vec::new();
    for l in 0..=k.min(cx.sym_count()) {
        let kk = k - l;
        if kk > cx.hv_count() {
            continue;
        }
        tasks.extend(plan_bidegree(cx, kk, l));
    }
    tasks
}

/// Assembles block results (both routes already cross-checked) into the
/// decomposed homology group.
pub fn finish_decomposition(
    cx: &Complex,
    k: usize,
    results: &[(BlockTask, BlockHomology)],
) -> Result<HomologyResult, HomologyError> {
    let mut character = WeightCharacter::zero(cx.r(), cx.g());
    let mut dims_by_bidegree: BTreeMap<usize, u64> = BTreeMap::new();
    for l in 0..=k.min(cx.sym_count()) {
        if k - l > cx.hv_count() {
            continue;
        }
        let layer: Vec<(BlockTask, usize)> = results
            .iter()
            .filter(|(t, _)| t.l == l)
            .map(|(t, b)| (t.clone(), b.harmonic_dim))
            .collect();
        let chi = assemble_character(cx, &layer);
        dims_by_bidegree.insert(l, chi.total_dim() as u64);
        character.add(&chi);
    }
    let report = if cx.g() == 1 {
        decompose_sp_gl(&character)?
    } else {
        decompose_gl(&collapse_sp(&character))?
    };
    let expected = character.total_dim() as u64;
    let found = report.total_dimension(cx.r());
    if expected != found {
        return Err(HomologyError::DimensionAudit { expected, found });
    }
    Ok(HomologyResult {
        g: cx.g(),
        r: cx.r(),
        k,
        character,
        report,
        dims_by_bidegree,
    })
}

/// H_k(L_H(V)) decomposed: harmonic characters summed over all bidegrees
/// (k−ℓ, ℓ), both homology routes cross-checked on every block, peeled
/// into H_m ⊗ S^λ summands (g = 1) or Schur summands (g ≥ 2).
pub fn homology_decomposition(cx: &Complex, k: usize) -> Result<HomologyResult, HomologyError> {
    let tasks = plan_homology(cx, k);
    let mut results = Vec::with_capacity(tasks.len());
    for t in tasks {
        let b = block_homology(cx, &t)?;
        results.push((t, b));
    }
    finish_decomposition(cx, k, &results)
}

/// Sums a joint character over the Sp torus, leaving a pure GL character.
pub fn collapse_sp(chi: &WeightCharacter) -> WeightCharacter {
    let mut out = WeightCharacter::zero(chi.rank_gl(), 0);
    for (gl, _, m) in chi.iter() {
        out.add_mult(gl.clone(), SpWeight::empty(), m);
    }
    out
}

/// Total homology dimensions of L_H(V), graded three ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyDims {
    /// Polynomial degree n = k + 2ℓ.
    pub by_poly_degree: Vec<u64>,
    /// Homological degree k + ℓ.
    pub by_homological_degree: Vec<u64>,
    pub by_bidegree: BTreeMap<(usize, usize), u64>,
}

/// Homology dimensions over the whole complex, both routes cross-checked
/// on every block.
pub fn homology_dims(cx: &Complex) -> Result<HomologyDims, HomologyError> {
    let max_poly = cx.hv_count() + 2 * cx.sym_count();
    let max_hom = cx.hv_count() + cx.sym_count();
    let mut by_poly = vec![0u64; max_poly + 1];
    let mut by_hom = vec![0u64; max_hom + 1];
    let mut by_bidegree = BTreeMap::new();
    for k in 0..=cx.hv_count() {
        for l in 0..=cx.sym_count() {
            let mut dim = 0u64;
            for t in plan_bidegree(cx, k, l) {
                let b = block_homology(cx, &t)?;
                let orbit = gl_orbit(&t.gl).len() as u64;
                let mirror = if cx.g() == 1 && t.sp.0[0] > 0 { 2 } else { 1 };
                dim += b.harmonic_dim as u64 * orbit * mirror;
            }
            by_poly[k + 2 * l] += dim;
            by_hom[k + l] += dim;
            by_bidegree.insert((k, l), dim);
        }
    }
    Ok(HomologyDims {
        by_poly_degree: by_poly,
        by_homological_degree: by_hom,
        by_bidegree,
    })
}

/// H_k(Lie₂(V)) via the generic CE boundary and ker/im ranks, decomposed
/// and checked against Sigg's 𝒪_k enumeration.
pub fn sigg_homology(r: usize, k: usize) -> Result<DecompositionReport, HomologyError> {
    let alg = TwoStepAlgebra::lie2(r);
    let mut chi = WeightCharacter::zero(r, 0);
    for block in alg.wedge_blocks(k) {
        if !block.gl.is_dominant() {
            continue;
        }
        let rank_out = alg.boundary(&block).rank();
        let up = alg.wedge_block(k + 1, &block.gl, &block.sp);
        let rank_in = alg.boundary(&up).rank();
        let value = block.dim() as i64 - rank_out as i64 - rank_in as i64;
        if value < 0 {
            return Err(HomologyError::NegativeBlockValue {
                task: BlockTask {
                    k,
                    l: 0,
                    gl: block.gl.clone(),
                    sp: block.sp.clone(),
                },
                value,
            });
        }
        if value > 0 {
            for w in gl_orbit(&block.gl) {
                chi.add_mult(w, SpWeight::empty(), value);
            }
        }
    }
    let report = decompose_gl(&chi)?;
    let expected: Vec<Partition> = enumerate_o(k)
        .into_iter()
        .filter(|p| p.length() <= r)
        .collect();
    let found: Vec<Partition> = report.entries.iter().map(|e| e.gl.clone()).collect();
    let all_one = report.entries.iter().all(|e| e.mult == 1);
    let mut expected_sorted = expected.clone();
    expected_sorted.sort();
    let mut found_sorted = found.clone();
    found_sorted.sort();
    if !all_one || expected_sorted != found_sorted {
        return Err(HomologyError::SiggMismatch {
            r,
            k,
            expected,
            found,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weightchar::{sym_h_tensor_schur, SpLabel};

    #[test]
    fn rank_one_dims_all_gradings() {
        let cx = Complex::new(1, 1);
        let dims = homology_dims(&cx).unwrap();
        assert_eq!(dims.by_poly_degree, vec![1, 2, 0, 2, 1]);
        assert_eq!(dims.by_homological_degree, vec![1, 2, 2, 1]);
        let total: u64 = dims.by_poly_degree.iter().sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn orbit_expansion_matches_direct_enumeration() {
        // Dominant-representative computation with orbit expansion equals
        // the block-by-block direct computation at small rank.
        let cx = Complex::new(1, 2);
        for k in 0..=4usize {
            for l in 0..=3usize {
                let harmonic = harmonic_character(&cx, k, l);
                let mut direct = WeightCharacter::zero(2, 1);
                for block in cx.bidegree_blocks(k, l) {
                    let h = block.dim() - cx.laplacian(&block).rank();
                    if h > 0 {
                        direct.add_mult(block.gl.clone(), block.sp.clone(), h as i64);
                    }
                }
                assert_eq!(harmonic, direct, "k={k} l={l}");
            }
        }
    }

    #[test]
    fn kostant_cross_check_small() {
        let cx = Complex::new(1, 2);
        for k in 0..=4usize {
            for l in 0..=3usize {
                let harmonic = harmonic_character(&cx, k, l);
                let kerim = homology_character_kerim(&cx, k, l).unwrap();
                assert_eq!(harmonic, kerim, "k={k} l={l}");
            }
        }
    }

    #[test]
    fn diagonal_theorem_small() {
        // H_n(L_H)(n) ≅ H_n ⊗ S^(1^n) for g = 1: the harmonic character at
        // bidegree (n, 0) with r = n.
        for n in 1..=3usize {
            let cx = Complex::new(1, n);
            let chi = harmonic_character(&cx, n, 0);
            let ones = Partition::new(vec![1; n]).unwrap();
            let expected = sym_h_tensor_schur(n as u32, &ones, n);
            assert_eq!(chi, expected, "n={n}");
        }
    }

    #[test]
    fn harmonic_examples_at_r_four() {
        // Bidegree (1,1): homology H_2(L_H)(3) = H_1 ⊗ S^(3); the
        // H_0 ⊗ S^(4) summand lives one bidegree up at (2,1).
        let cx = Complex::new(1, 4);
        let chi_11 = harmonic_character(&cx, 1, 1);
        assert_eq!(chi_11, sym_h_tensor_schur(1, &Partition::of(&[3]), 4));

        let chi_21 = harmonic_character(&cx, 2, 1);
        let mut expected = sym_h_tensor_schur(2, &Partition::of(&[3, 1]), 4);
        expected.add(&sym_h_tensor_schur(0, &Partition::of(&[4]), 4));
        assert_eq!(chi_21, expected);
    }

    #[test]
    fn intro_table_h2() {
        let cx = Complex::new(1, 3);
        let result = homology_decomposition(&cx, 2).unwrap();
        let got: Vec<(SpLabel, Partition, u64)> = result
            .report
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
        // dim H_2 ⊗ S^(1,1) = 3·3 at bidegree (2,0); dim H_1 ⊗ S^(3) = 2·10
        // at bidegree (1,1); bidegree (0,2) vanishes.
        assert_eq!(result.dims_by_bidegree.get(&0), Some(&9));
        assert_eq!(result.dims_by_bidegree.get(&1), Some(&20));
        assert_eq!(result.dims_by_bidegree.get(&2), Some(&0));
    }

    #[test]
    fn homology_k2_r1_truncates() {
        // At r = 1 only length-one diagrams survive: H_2 = H_1 ⊗ S^(3).
        let cx = Complex::new(1, 1);
        let result = homology_decomposition(&cx, 2).unwrap();
        let got: Vec<(SpLabel, Partition, u64)> = result
            .report
            .entries
            .iter()
            .map(|e| (e.sp.clone(), e.gl.clone(), e.mult))
            .collect();
        assert_eq!(got, vec![(SpLabel::Sym(1), Partition::of(&[3]), 1)]);
        assert_eq!(result.total_dim(), 2);
    }

    #[test]
    fn homology_k0_is_trivial_rep() {
        for (g, r) in [(1usize, 1usize), (1, 3), (2, 2)] {
            let cx = Complex::new(g, r);
            let result = homology_decomposition(&cx, 0).unwrap();
            assert_eq!(result.report.entries.len(), 1);
            assert_eq!(result.report.entries[0].gl, Partition::empty());
            assert_eq!(result.report.entries[0].mult, 1);
            assert_eq!(result.total_dim(), 1);
        }
    }

    #[test]
    fn kerim_example_h4_at_r3() {
        // H_4(L_H)(5) at r = 3: the ℓ=1 Proposition's H_3 ⊗ S^(3,1,1)
        // truncated to r = 3 (dimension 4 · 6 = 24).
        let cx = Complex::new(1, 3);
        let chi = homology_character_kerim(&cx, 3, 1).unwrap();
        assert_eq!(chi, sym_h_tensor_schur(3, &Partition::of(&[3, 1, 1]), 3));
        assert_eq!(chi.total_dim(), 24);
    }

    #[test]
    fn sigg_small_cases() {
        let report = sigg_homology(2, 1).unwrap();
        assert_eq!(report.entries.len(), 1);
        assert_eq!(report.entries[0].gl, Partition::of(&[1]));

        let report = sigg_homology(3, 2).unwrap();
        let got: Vec<Partition> = report.entries.iter().map(|e| e.gl.clone()).collect();
        assert_eq!(got, vec![Partition::of(&[2, 1])]);

        let report = sigg_homology(4, 3).unwrap();
        let got: Vec<Partition> = report.entries.iter().map(|e| e.gl.clone()).collect();
        assert_eq!(got, vec![Partition::of(&[3, 1, 1]), Partition::of(&[2, 2])]);
    }

    #[test]
    fn sigg_k0() {
        let report = sigg_homology(3, 0).unwrap();
        assert_eq!(report.entries.len(), 1);
        assert_eq!(report.entries[0].gl, Partition::empty());
    }

    #[test]
    fn euler_characteristic_per_weight_block() {
        // Σ_k (−1)^k dim K-block = Σ_k (−1)^k dim H-block per joint weight,
        // with k the homological degree.
        let cx = Complex::new(1, 2);
        let mut chain_euler: BTreeMap<(GlWeight, SpWeight), i64> = BTreeMap::new();
        let mut hom_euler: BTreeMap<(GlWeight, SpWeight), i64> = BTreeMap::new();
        for k in 0..=cx.hv_count() {
            for l in 0..=cx.sym_count() {
                let s = if (k + l) % 2 == 0 { 1 } else { -1 };
                for block in cx.bidegree_blocks(k, l) {
                    *chain_euler
                        .entry((block.gl.clone(), block.sp.clone()))
                        .or_insert(0) += s * block.dim() as i64;
                    let h = block.dim() - cx.laplacian(&block).rank();
                    *hom_euler
                        .entry((block.gl.clone(), block.sp.clone()))
                        .or_insert(0) += s * h as i64;
                }
            }
        }
        for (key, v) in &chain_euler {
            assert_eq!(v, hom_euler.get(key).unwrap_or(&0), "weight {key:?}");
        }
    }

    #[test]
    fn schur_weyl_stability_k1_k2() {
        // Multiplicities of S^λ in H_k are independent of r once r ≥ 2k.
        for k in 1..=2usize {
            let base = homology_decomposition(&Complex::new(1, 2 * k), k).unwrap();
            let bigger = homology_decomposition(&Complex::new(1, 2 * k + 1), k).unwrap();
            let to_set = |res: &HomologyResult| {
                res.report
                    .entries
                    .iter()
                    .map(|e| (e.sp.clone(), e.gl.clone(), e.mult))
                    .collect::<Vec<_>>()
            };
            assert_eq!(to_set(&base), to_set(&bigger), "k={k}");
        }
    }
}
