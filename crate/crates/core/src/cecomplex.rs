//! The Chevalley-Eilenberg complex of L_H(V) = (H ⊗ V) ⊕ S²(V) as
//! weight-graded monomial bases, and the operator calculus (ε, ι, ∂, ∂*,
//! Δ, E_i^j, 𝒟, Δ_GL(V), Δ_Sp(H)) as exact sparse integer matrices.
//!
//! The whole complex Λ^•(H⊗V) ⊗ Λ^•(S²V) is one exterior algebra: every
//! generator (both kinds) is odd, and brackets of ε/ι operators are graded
//! commutators (anticommutators for odd-odd pairs). A monomial is stored
//! sorted, H⊗V factors first, with permutation signs absorbed into operator
//! entries, so matrices are reproducible bit for bit.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::matrix::SparseIntMatrix;
use crate::weightchar::{GlWeight, SpWeight};

/// Generator e_a ⊗ E_i of H ⊗ V, 0-based indices. The derived order is
/// (i, a) lexicographic, the canonical generator order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HvGen {
    pub i: u16,
    pub a: u16,
}

/// Generator E_{ij} = E_i E_j of S²(V), stored with i ≤ j, 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymGen {
    pub i: u16,
    pub j: u16,
}

impl SymGen {
    pub fn new(i: usize, j: usize) -> Self {
        let (i, j) = (i.min(j) as u16, i.max(j) as u16);
        SymGen { i, j }
    }

    pub fn is_diagonal(&self) -> bool {
        self.i == self.j
    }
}

/// A basis monomial of Λ^k(H⊗V) ⊗ Λ^ℓ(S²V): strictly increasing factor
/// lists, H⊗V factors before S²V factors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainMonomial {
    pub hv: Vec<HvGen>,
    pub sym: Vec<SymGen>,
}

impl ChainMonomial {
    pub fn bidegree(&self) -> (usize, usize) {
        (self.hv.len(), self.sym.len())
    }

    pub fn gl_weight(&self, r: usize) -> GlWeight {
        let mut w = vec![0u32; r];
        for gen in &self.hv {
            w[gen.i as usize] += 1;
        }
        for gen in &self.sym {
            w[gen.i as usize] += 1;
            w[gen.j as usize] += 1;
        }
        GlWeight(w)
    }

    pub fn sp_weight(&self, g: usize) -> SpWeight {
        let mut w = vec![0i32; g];
        for gen in &self.hv {
            let a = gen.a as usize;
            w[a / 2] += if a % 2 == 0 { 1 } else { -1 };
        }
        SpWeight(w)
    }

    /// Squared norm in the monomial inner product: H⊗V monomials are
    /// orthonormal and ⟨E_iE_j, E_kE_l⟩ = δδ + δδ, so each diagonal factor
    /// E_ii contributes a factor 2.
    pub fn norm_squared(&self) -> u64 {
        1u64 << self.sym.iter().filter(|s| s.is_diagonal()).count()
    }
}

impl fmt::Display for ChainMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.hv.is_empty() && self.sym.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for gen in &self.hv {
            if !first {
                write!(f, "^")?;
            }
            first = false;
            write!(f, "e{}E{}", gen.a + 1, gen.i + 1)?;
        }
        for gen in &self.sym {
            if !first {
                write!(f, "^")?;
            }
            first = false;
            write!(f, "E{}{}", gen.i + 1, gen.j + 1)?;
        }
        Ok(())
    }
}

/// The standard symplectic basis of H = 𝔽^{2g}: g hyperbolic blocks with
/// ⟨e_{2s−1}, e_{2s}⟩ = 1 (1-based), so all η entries are 0 or ±1.
#[derive(Clone, Debug)]
pub struct SymplecticBasis {
    g: usize,
    eta: Vec<Vec<i64>>,
    eta_inv: Vec<Vec<i64>>,
}

impl SymplecticBasis {
    pub fn standard(g: usize) -> Self {
        let n = 2 * g;
        let mut eta = vec![vec![0i64; n]; n];
        let mut eta_inv = vec![vec![0i64; n]; n];
        for s in 0..g {
            eta[2 * s][2 * s + 1] = 1;
            eta[2 * s + 1][2 * s] = -1;
            eta_inv[2 * s][2 * s + 1] = -1;
            eta_inv[2 * s + 1][2 * s] = 1;
        }
        let basis = SymplecticBasis { g, eta, eta_inv };
        for a in 0..n {
            for c in 0..n {
                let dot: i64 = (0..n).map(|b| basis.eta_inv[a][b] * basis.eta[b][c]).sum();
                assert_eq!(dot, i64::from(a == c), "η^ab must invert η_bc");
            }
        }
        basis
    }

    pub fn g(&self) -> usize {
        self.g
    }

    /// η_{ab} = ⟨e_a, e_b⟩, 0-based.
    pub fn eta(&self, a: usize, b: usize) -> i64 {
        self.eta[a][b]
    }

    /// η^{ab}, the inverse matrix, 0-based.
    pub fn eta_inv(&self, a: usize, b: usize) -> i64 {
        self.eta_inv[a][b]
    }
}

/// One weight block of one bidegree K_{k,ℓ}: all monomials sharing
/// (k, ℓ, GL weight, Sp weight), in ascending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainBlock {
    pub g: usize,
    pub r: usize,
    pub k: usize,
    pub l: usize,
    pub gl: GlWeight,
    pub sp: SpWeight,
    pub basis: Vec<ChainMonomial>,
}

impl ChainBlock {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Elementary odd operators on the monomial basis. Each sends a monomial to
/// at most one signed monomial; ContractSym carries the coefficient 2 on
/// diagonal generators required by [ι^{ij}, ε_{kl}] = δδ + δδ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ElemOp {
    WedgeHv(HvGen),
    ContractHv(HvGen),
    WedgeSym(SymGen),
    ContractSym(SymGen),
}

fn apply_elem(op: ElemOp, m: &ChainMonomial) -> Option<(ChainMonomial, i64)> {
    match op {
        ElemOp::WedgeHv(gen) => match m.hv.binary_search(&gen) {
            Ok(_) => None,
            Err(pos) => {
                let mut out = m.clone();
                out.hv.insert(pos, gen);
                Some((out, sign(pos)))
            }
        },
        ElemOp::ContractHv(gen) => match m.hv.binary_search(&gen) {
            Ok(pos) => {
                let mut out = m.clone();
                out.hv.remove(pos);
                Some((out, sign(pos)))
            }
            Err(_) => None,
        },
        ElemOp::WedgeSym(gen) => match m.sym.binary_search(&gen) {
            Ok(_) => None,
            Err(pos) => {
                let mut out = m.clone();
                out.sym.insert(pos, gen);
                Some((out, sign(m.hv.len() + pos)))
            }
        },
        ElemOp::ContractSym(gen) => match m.sym.binary_search(&gen) {
            Ok(pos) => {
                let mut out = m.clone();
                out.sym.remove(pos);
                let coeff = if gen.is_diagonal() { 2 } else { 1 };
                Some((out, coeff * sign(m.hv.len() + pos)))
            }
            Err(_) => None,
        },
    }
}

fn sign(transpositions: usize) -> i64 {
    if transpositions % 2 == 0 {
        1
    } else {
        -1
    }
}

impl ElemOp {
    /// (Δk, Δℓ, GL weight delta, Sp weight delta).
    fn shift(&self, r: usize, g: usize) -> OpShift {
        let mut s = OpShift::zero(r, g);
        match *self {
            ElemOp::WedgeHv(gen) => {
                s.dk = 1;
                s.dgl[gen.i as usize] += 1;
                s.dsp[gen.a as usize / 2] += if gen.a % 2 == 0 { 1 } else { -1 };
            }
            ElemOp::ContractHv(gen) => {
                s.dk = -1;
                s.dgl[gen.i as usize] -= 1;
                s.dsp[gen.a as usize / 2] -= if gen.a % 2 == 0 { 1 } else { -1 };
            }
            ElemOp::WedgeSym(gen) => {
                s.dl = 1;
                s.dgl[gen.i as usize] += 1;
                s.dgl[gen.j as usize] += 1;
            }
            ElemOp::ContractSym(gen) => {
                s.dl = -1;
                s.dgl[gen.i as usize] -= 1;
                s.dgl[gen.j as usize] -= 1;
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct OpShift {
    dk: i64,
    dl: i64,
    dgl: Vec<i64>,
    dsp: Vec<i64>,
}

impl OpShift {
    fn zero(r: usize, g: usize) -> Self {
        OpShift {
            dk: 0,
            dl: 0,
            dgl: vec![0; r],
            dsp: vec![0; g],
        }
    }

    fn accumulate(&mut self, other: &OpShift) {
        self.dk += other.dk;
        self.dl += other.dl;
        for (x, y) in self.dgl.iter_mut().zip(&other.dgl) {
            *x += y;
        }
        for (x, y) in self.dsp.iter_mut().zip(&other.dsp) {
            *x += y;
        }
    }
}

/// A formal integer combination of operator words over a common denominator.
/// Words are stored in mathematical order (rightmost factor acts first).
#[derive(Clone, Debug)]
struct OperatorExpr {
    terms: Vec<(i64, Vec<ElemOp>)>,
    denom: i64,
}

impl OperatorExpr {
    fn shift(&self, r: usize, g: usize) -> OpShift {
        let mut shifts = self.terms.iter().map(|(_, word)| {
            let mut s = OpShift::zero(r, g);
            for op in word {
                s.accumulate(&op.shift(r, g));
            }
            s
        });
        let first = shifts.next().unwrap_or_else(|| OpShift::zero(r, g));
        for s in shifts {
            assert_eq!(
                s, first,
                "all words of an operator must share one block shift"
            );
        }
        first
    }

    /// Product lhs ∘ rhs as word concatenation.
    fn compose(&self, rhs: &OperatorExpr) -> OperatorExpr {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ca, wa) in &self.terms {
            for (cb, wb) in &rhs.terms {
                let mut word = wa.clone();
                word.extend_from_slice(wb);
                terms.push((ca * cb, word));
            }
        }
        OperatorExpr {
            terms,
            denom: self.denom * rhs.denom,
        }
    }
}

/// Named operators available per block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorName {
    Boundary,
    Coboundary,
    Laplacian,
    EulerD,
    CasimirGl,
    CasimirSp,
    /// E_i^j, 0-based; shifts the GL weight by +e_i − e_j.
    GlElementary {
        i: usize,
        j: usize,
    },
    /// e^a_b, 0-based; shifts the Sp weight accordingly.
    SpElementary {
        a: usize,
        b: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorError {
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },
}

impl fmt::Display for OperatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorError::IndexOutOfRange { what, index, bound } => {
                write!(f, "{what} index {index} out of range (bound {bound})")
            }
        }
    }
}

impl core::error::Error for OperatorError {}

/// The Chevalley-Eilenberg complex of L_H(V) for fixed g = half the
/// dimension of H and r = dim V. Block construction is pure; the struct is
/// freely shared across threads.
#[derive(Clone, Debug)]
pub struct Complex {
    g: usize,
    r: usize,
    eta: SymplecticBasis,
}

impl Complex {
    pub fn new(g: usize, r: usize) -> Self {
        assert!(g >= 1 && r >= 1, "need g >= 1 and r >= 1");
        Complex {
            g,
            r,
            eta: SymplecticBasis::standard(g),
        }
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn eta(&self) -> &SymplecticBasis {
        &self.eta
    }

    /// Number of H⊗V generators.
    pub fn hv_count(&self) -> usize {
        2 * self.g * self.r
    }

    /// Number of S²V generators.
    pub fn sym_count(&self) -> usize {
        self.r * (self.r + 1) / 2
    }

    pub fn hv_gens(&self) -> Vec<HvGen> {
        let mut gens = Vec::with_capacity(self.hv_count());
        for i in 0..self.r as u16 {
            for a in 0..(2 * self.g) as u16 {
                gens.push(HvGen { i, a });
            }
        }
        gens
    }

    pub fn sym_gens(&self) -> Vec<SymGen> {
        let mut gens = Vec::with_capacity(self.sym_count());
        for i in 0..self.r {
            for j in i..self.r {
                gens.push(SymGen::new(i, j));
            }
        }
        gens
    }

    /// Total dimension of K_{k,ℓ} = C(2gr, k) · C(r(r+1)/2, ℓ).
    pub fn bidegree_dim(&self, k: usize, l: usize) -> u64 {
        binomial(self.hv_count(), k) * binomial(self.sym_count(), l)
    }

    /// All weight blocks of K_{k,ℓ}, keyed and ordered by (GL, Sp) weight.
    /// The blocks partition the monomial basis.
    pub fn bidegree_blocks(&self, k: usize, l: usize) -> Vec<ChainBlock> {
        let mut buckets: BTreeMap<(GlWeight, SpWeight), Vec<ChainMonomial>> = BTreeMap::new();
        let hv_gens = self.hv_gens();
        let sym_gens = self.sym_gens();
        for_each_combination(&hv_gens, k, &mut |hv| {
            for_each_combination(&sym_gens, l, &mut |sym| {
                let mono = ChainMonomial {
                    hv: hv.to_vec(),
                    sym: sym.to_vec(),
                };
                let key = (mono.gl_weight(self.r), mono.sp_weight(self.g));
                buckets.entry(key).or_default().push(mono);
            });
        });
        buckets
            .into_iter()
            .map(|((gl, sp), basis)| ChainBlock {
                g: self.g,
                r: self.r,
                k,
                l,
                gl,
                sp,
                basis,
            })
            .collect()
    }

    /// The single block of K_{k,ℓ} with the given weights, by filtered
    /// enumeration (possibly empty).
    pub fn block(&self, k: usize, l: usize, gl: &GlWeight, sp: &SpWeight) -> ChainBlock {
        assert_eq!(gl.0.len(), self.r);
        assert_eq!(sp.0.len(), self.g);
        let hv_gens = self.hv_gens();
        let sym_gens = self.sym_gens();
        let mut basis = Vec::new();
        let mut hv_pick: Vec<HvGen> = Vec::with_capacity(k);
        self.block_rec_hv(
            &hv_gens,
            &sym_gens,
            0,
            k,
            l,
            gl,
            sp,
            &mut hv_pick,
            &mut basis,
        );
        ChainBlock {
            g: self.g,
            r: self.r,
            k,
            l,
            gl: gl.clone(),
            sp: sp.clone(),
            basis,
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn block_rec_hv(
        &self,
        hv_gens: &[HvGen],
        sym_gens: &[SymGen],
        start: usize,
        need: usize,
        l: usize,
        gl: &GlWeight,
        sp: &SpWeight,
        pick: &mut Vec<HvGen>,
        basis: &mut Vec<ChainMonomial>,
    ) {
        if need == 0 {
            let partial = ChainMonomial {
                hv: pick.clone(),
                sym: Vec::new(),
            };
            if partial.sp_weight(self.g) != *sp {
                return;
            }
            let hv_gl = partial.gl_weight(self.r);
            let mut residual = vec![0u32; self.r];
            for i in 0..self.r {
                if gl.0[i] < hv_gl.0[i] {
                    return;
                }
                residual[i] = gl.0[i] - hv_gl.0[i];
            }
            let residual_total: u32 = residual.iter().sum();
            if residual_total as usize != 2 * l {
                return;
            }
            let mut sym_pick: Vec<SymGen> = Vec::with_capacity(l);
            sym_rec(sym_gens, 0, l, &mut residual, &mut sym_pick, pick, basis);
            return;
        }
        if hv_gens.len() - start < need {
            return;
        }
        for idx in start..=hv_gens.len() - need {
            let gen = hv_gens[idx];
            // GL exponents only grow; prune overshoot early.
            let used = pick.iter().filter(|x| x.i == gen.i).count() as u32;
            if used + 1 > gl.0[gen.i as usize] {
                continue;
            }
            pick.push(gen);
            self.block_rec_hv(hv_gens, sym_gens, idx + 1, need - 1, l, gl, sp, pick, basis);
            pick.pop();
        }
    }

    /// Block at (k + Δk, ℓ + Δℓ) carrying the given weight deltas, or None
    /// when the shifted coordinates leave the complex.
    fn shifted_block(&self, src: &ChainBlock, shift: &OpShift) -> Option<ChainBlock> {
        let k = src.k as i64 + shift.dk;
        let l = src.l as i64 + shift.dl;
        if k < 0 || l < 0 || k as usize > self.hv_count() || l as usize > self.sym_count() {
            return None;
        }
        let mut gl = Vec::with_capacity(self.r);
        for (x, d) in src.gl.0.iter().zip(&shift.dgl) {
            let v = i64::from(*x) + d;
            if v < 0 {
                return None;
            }
            gl.push(v as u32);
        }
        let sp: Vec<i32> = src
            .sp
            .0
            .iter()
            .zip(&shift.dsp)
            .map(|(x, d)| x + *d as i32)
            .collect();
        Some(self.block(k as usize, l as usize, &GlWeight(gl), &SpWeight(sp)))
    }

    /// Matrix of an operator expression on a source block; rows are indexed
    /// by the unique target block determined by the expression's shift.
    fn expr_matrix(&self, expr: &OperatorExpr, src: &ChainBlock) -> SparseIntMatrix {
        let shift = expr.shift(self.r, self.g);
        let Some(target) = self.shifted_block(src, &shift) else {
            return SparseIntMatrix::zero(0, src.dim());
        };
        self.expr_matrix_with_target(expr, src, &target)
    }

    fn expr_matrix_with_target(
        &self,
        expr: &OperatorExpr,
        src: &ChainBlock,
        target: &ChainBlock,
    ) -> SparseIntMatrix {
        let index: BTreeMap<&ChainMonomial, usize> = target
            .basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut out = SparseIntMatrix::zero(target.dim(), src.dim());
        for (col, mono) in src.basis.iter().enumerate() {
            for (coeff, word) in &expr.terms {
                let mut current = mono.clone();
                let mut c = *coeff;
                let mut dead = false;
                for op in word.iter().rev() {
                    match apply_elem(*op, &current) {
                        Some((next, s)) => {
                            current = next;
                            c *= s;
                        }
                        None => {
                            dead = true;
                            break;
                        }
                    }
                }
                if dead {
                    continue;
                }
                let row = *index
                    .get(&current)
                    .expect("operator image must stay in the shifted block");
                out.add_to(row, col, c);
            }
        }
        if expr.denom != 1 {
            out = out.exact_div(expr.denom);
        }
        out
    }

    /// ∂ = ½ η^{ab} ε_{ij} ι^i_a ι^j_b, the Chevalley-Eilenberg boundary
    /// on one block; maps K_{k,ℓ} → K_{k−2,ℓ+1}.
    pub fn boundary(&self, src: &ChainBlock) -> SparseIntMatrix {
        self.expr_matrix(&self.boundary_expr(), src)
    }

    /// ∂* = −½ η_{ab} ε^a_i ε^b_j ι^{ij}; maps K_{k,ℓ} → K_{k+2,ℓ−1}.
    /// With the standard basis this is the negative of the weighted adjoint
    /// of ∂; the sign is global and does not affect harmonic spaces.
    pub fn coboundary(&self, src: &ChainBlock) -> SparseIntMatrix {
        self.expr_matrix(&self.coboundary_expr(), src)
    }

    fn boundary_expr(&self) -> OperatorExpr {
        let mut terms = Vec::new();
        for i in 0..self.r {
            for j in 0..self.r {
                for a in 0..2 * self.g {
                    for b in 0..2 * self.g {
                        let c = self.eta.eta_inv(a, b);
                        if c == 0 {
                            continue;
                        }
                        terms.push((
                            c,
                            vec![
                                ElemOp::WedgeSym(SymGen::new(i, j)),
                                ElemOp::ContractHv(HvGen {
                                    i: i as u16,
                                    a: a as u16,
                                }),
                                ElemOp::ContractHv(HvGen {
                                    i: j as u16,
                                    a: b as u16,
                                }),
                            ],
                        ));
                    }
                }
            }
        }
        OperatorExpr { terms, denom: 2 }
    }

    fn coboundary_expr(&self) -> OperatorExpr {
        let mut terms = Vec::new();
        for i in 0..self.r {
            for j in 0..self.r {
                for a in 0..2 * self.g {
                    for b in 0..2 * self.g {
                        let c = self.eta.eta(a, b);
                        if c == 0 {
                            continue;
                        }
                        terms.push((
                            -c,
                            vec![
                                ElemOp::WedgeHv(HvGen {
                                    i: i as u16,
                                    a: a as u16,
                                }),
                                ElemOp::WedgeHv(HvGen {
                                    i: j as u16,
                                    a: b as u16,
                                }),
                                ElemOp::ContractSym(SymGen::new(i, j)),
                            ],
                        ));
                    }
                }
            }
        }
        OperatorExpr { terms, denom: 2 }
    }

    /// E_i^j = ε_i^a ι^j_a + ε_{ik} ι^{jk} (summed over a and k).
    fn gl_elementary_expr(&self, i: usize, j: usize) -> OperatorExpr {
        let mut terms = Vec::new();
        for a in 0..2 * self.g {
            terms.push((
                1,
                vec![
                    ElemOp::WedgeHv(HvGen {
                        i: i as u16,
                        a: a as u16,
                    }),
                    ElemOp::ContractHv(HvGen {
                        i: j as u16,
                        a: a as u16,
                    }),
                ],
            ));
        }
        for k in 0..self.r {
            terms.push((
                1,
                vec![
                    ElemOp::WedgeSym(SymGen::new(i, k)),
                    ElemOp::ContractSym(SymGen::new(j, k)),
                ],
            ));
        }
        OperatorExpr { terms, denom: 1 }
    }

    /// e^a_b = ε_i^a ι^i_b (summed over i).
    fn sp_elementary_expr(&self, a: usize, b: usize) -> OperatorExpr {
        let terms = (0..self.r)
            .map(|i| {
                (
                    1i64,
                    vec![
                        ElemOp::WedgeHv(HvGen {
                            i: i as u16,
                            a: a as u16,
                        }),
                        ElemOp::ContractHv(HvGen {
                            i: i as u16,
                            a: b as u16,
                        }),
                    ],
                )
            })
            .collect();
        OperatorExpr { terms, denom: 1 }
    }

    /// 𝒟 = ε_i^a ι^i_a + ε_{ij} ι^{ij}: multiplies each block by its total
    /// E-degree k + 2ℓ.
    fn euler_expr(&self) -> OperatorExpr {
        let mut expr = OperatorExpr {
            terms: Vec::new(),
            denom: 1,
        };
        for i in 0..self.r {
            expr.terms.extend(self.gl_elementary_expr(i, i).terms);
        }
        expr
    }

    /// Δ_GL(V) = E_i^j E_j^i.
    fn casimir_gl_expr(&self) -> OperatorExpr {
        let mut terms = Vec::new();
        for i in 0..self.r {
            for j in 0..self.r {
                let prod = self
                    .gl_elementary_expr(i, j)
                    .compose(&self.gl_elementary_expr(j, i));
                terms.extend(prod.terms);
            }
        }
        OperatorExpr { terms, denom: 1 }
    }

    /// Δ_Sp(H) = −η^{ac} η^{bd} e_{ab} e_{cd} − η^{ac} η^{bd} e_{ab} e_{dc},
    /// with e_{ab} = η_{ax} e^x_b.
    fn casimir_sp_expr(&self) -> OperatorExpr {
        let n = 2 * self.g;
        let mut coeffs: BTreeMap<((usize, usize), (usize, usize)), i64> = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let front = self.eta.eta_inv(a, c) * self.eta.eta_inv(b, d);
                        if front == 0 {
                            continue;
                        }
                        for x in 0..n {
                            let hax = self.eta.eta(a, x);
                            if hax == 0 {
                                continue;
                            }
                            for y in 0..n {
                                // e_{ab} e_{cd} = η_{ax} η_{cy} e^x_b e^y_d
                                let hcy = self.eta.eta(c, y);
                                if hcy != 0 {
                                    *coeffs.entry(((x, b), (y, d))).or_insert(0) -=
                                        front * hax * hcy;
                                }
                                // e_{ab} e_{dc} = η_{ax} η_{dy} e^x_b e^y_c
                                let hdy = self.eta.eta(d, y);
                                if hdy != 0 {
                                    *coeffs.entry(((x, b), (y, c))).or_insert(0) -=
                                        front * hax * hdy;
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut terms = Vec::new();
        for (((x1, y1), (x2, y2)), c) in coeffs {
            if c == 0 {
                continue;
            }
            let prod = self
                .sp_elementary_expr(x1, y1)
                .compose(&self.sp_elementary_expr(x2, y2));
            for (pc, word) in prod.terms {
                terms.push((c * pc, word));
            }
        }
        OperatorExpr { terms, denom: 1 }
    }

    /// Δ = [∂*, ∂] = ∂*∂ + ∂∂* on one block, assembled from the block
    /// matrices of ∂ and ∂*.
    pub fn laplacian(&self, src: &ChainBlock) -> SparseIntMatrix {
        let n = src.dim();
        let mut delta = SparseIntMatrix::zero(n, n);
        let down_shift = self.boundary_expr().shift(self.r, self.g);
        if let Some(down) = self.shifted_block(src, &down_shift) {
            if down.dim() > 0 {
                let bd = self.boundary(src);
                let cb = self.coboundary(&down);
                delta = delta.add(&cb.mul(&bd));
            }
        }
        let up_shift = self.coboundary_expr().shift(self.r, self.g);
        if let Some(up) = self.shifted_block(src, &up_shift) {
            if up.dim() > 0 {
                let cb = self.coboundary(src);
                let bd = self.boundary(&up);
                delta = delta.add(&bd.mul(&cb));
            }
        }
        delta
    }

    /// Matrix of a named operator on one block.
    pub fn operator(
        &self,
        name: OperatorName,
        src: &ChainBlock,
    ) -> Result<SparseIntMatrix, OperatorError> {
        let check = |what: &'static str, idx: usize, bound: usize| {
            if idx >= bound {
                Err(OperatorError::IndexOutOfRange {
                    what,
                    index: idx,
                    bound,
                })
            } else {
                Ok(())
            }
        };
        match name {
            OperatorName::Boundary => Ok(self.boundary(src)),
            OperatorName::Coboundary => Ok(self.coboundary(src)),
            OperatorName::Laplacian => Ok(self.laplacian(src)),
            OperatorName::EulerD => Ok(self.expr_matrix(&self.euler_expr(), src)),
            OperatorName::CasimirGl => Ok(self.expr_matrix(&self.casimir_gl_expr(), src)),
            OperatorName::CasimirSp => Ok(self.expr_matrix(&self.casimir_sp_expr(), src)),
            OperatorName::GlElementary { i, j } => {
                check("GL", i, self.r)?;
                check("GL", j, self.r)?;
                Ok(self.expr_matrix(&self.gl_elementary_expr(i, j), src))
            }
            OperatorName::SpElementary { a, b } => {
                check("Sp", a, 2 * self.g)?;
                check("Sp", b, 2 * self.g)?;
                Ok(self.expr_matrix(&self.sp_elementary_expr(a, b), src))
            }
        }
    }

    /// Checks the paper's operator identities as exact matrix identities on
    /// every block with k + 2ℓ ≤ max_total_degree.
    pub fn verify_operator_identities(&self, max_total_degree: usize) -> IdentityReport {
        let mut report = IdentityReport::default();
        for l in 0..=self.sym_count() {
            if 2 * l > max_total_degree {
                break;
            }
            for k in 0..=self.hv_count().min(max_total_degree - 2 * l) {
                for block in self.bidegree_blocks(k, l) {
                    self.check_block_identities(&block, &mut report);
                    report.blocks_checked += 1;
                }
            }
        }
        report
    }

    fn check_block_identities(&self, block: &ChainBlock, report: &mut IdentityReport) {
        let n = block.dim();

        // (a) graded commutation relations, both families.
        for i in 0..self.r {
            for a in 0..2 * self.g {
                for j in 0..self.r {
                    for b in 0..2 * self.g {
                        let lower = HvGen {
                            i: i as u16,
                            a: a as u16,
                        };
                        let upper = HvGen {
                            i: j as u16,
                            a: b as u16,
                        };
                        let anti = OperatorExpr {
                            terms: vec![
                                (1, vec![ElemOp::ContractHv(lower), ElemOp::WedgeHv(upper)]),
                                (1, vec![ElemOp::WedgeHv(upper), ElemOp::ContractHv(lower)]),
                            ],
                            denom: 1,
                        };
                        let lhs = self.expr_matrix(&anti, block);
                        let delta = i64::from(lower == upper);
                        let rhs = if lhs.rows() == n {
                            SparseIntMatrix::identity(n).scale(delta)
                        } else {
                            SparseIntMatrix::zero(lhs.rows(), n)
                        };
                        report.record("commute.hv", block, &lhs, &rhs);
                    }
                }
            }
        }
        let sym_gens = self.sym_gens();
        for upper in &sym_gens {
            for lower in &sym_gens {
                let anti = OperatorExpr {
                    terms: vec![
                        (
                            1,
                            vec![ElemOp::ContractSym(*upper), ElemOp::WedgeSym(*lower)],
                        ),
                        (
                            1,
                            vec![ElemOp::WedgeSym(*lower), ElemOp::ContractSym(*upper)],
                        ),
                    ],
                    denom: 1,
                };
                let lhs = self.expr_matrix(&anti, block);
                // δ^i_k δ^j_l + δ^i_l δ^j_k on canonical generators: 2 on a
                // matching diagonal pair, 1 on a matching off-diagonal pair.
                let delta = if upper == lower {
                    if upper.is_diagonal() {
                        2
                    } else {
                        1
                    }
                } else {
                    0
                };
                let rhs = if lhs.rows() == n {
                    SparseIntMatrix::identity(n).scale(delta)
                } else {
                    SparseIntMatrix::zero(lhs.rows(), n)
                };
                report.record("commute.ij", block, &lhs, &rhs);
            }
        }

        // (b) ∂² = 0 and (∂*)² = 0.
        let bd_shift = self.boundary_expr().shift(self.r, self.g);
        let bd = self.boundary(block);
        if let Some(down) = self.shifted_block(block, &bd_shift) {
            let bd2 = self.boundary(&down).mul(&bd);
            let zero = SparseIntMatrix::zero(bd2.rows(), n);
            report.record("boundary.squared", block, &bd2, &zero);
        }
        let cb_shift = self.coboundary_expr().shift(self.r, self.g);
        let cb = self.coboundary(block);
        if let Some(up) = self.shifted_block(block, &cb_shift) {
            let cb2 = self.coboundary(&up).mul(&cb);
            let zero = SparseIntMatrix::zero(cb2.rows(), n);
            report.record("coboundary.squared", block, &cb2, &zero);
        }

        // (c) Δ equals the Laplacian1 expansion.
        let laplacian = self.laplacian(block);
        let rhs1 = self.expr_matrix(&self.laplacian1_rhs_expr(), block);
        report.record("laplacian1", block, &laplacian, &rhs1);

        // (d) Δ_GL equals the Laplacian2 expansion.
        let casimir_gl = self.expr_matrix(&self.casimir_gl_expr(), block);
        let rhs2 = self.expr_matrix(&self.laplacian2_rhs_expr(), block);
        report.record("laplacian2", block, &casimir_gl, &rhs2);

        // (e) Δ_Sp equals the Laplacian3 expansion.
        let casimir_sp = self.expr_matrix(&self.casimir_sp_expr(), block);
        let rhs3 = self.expr_matrix(&self.laplacian3_rhs_expr(), block);
        report.record("laplacian3", block, &casimir_sp, &rhs3);

        // (f) 2Δ = Δ_Sp + Δ_GL − (r + 2g + 1) 𝒟.
        let euler = self.expr_matrix(&self.euler_expr(), block);
        let lhs_main = laplacian.scale(2);
        let rhs_main = casimir_sp
            .add(&casimir_gl)
            .sub(&euler.scale((self.r + 2 * self.g + 1) as i64));
        report.record("theorem.main", block, &lhs_main, &rhs_main);

        // (g) [Δ, E_i^j] = 0.
        for i in 0..self.r {
            for j in 0..self.r {
                let e_expr = self.gl_elementary_expr(i, j);
                let shift = e_expr.shift(self.r, self.g);
                let Some(target) = self.shifted_block(block, &shift) else {
                    continue;
                };
                let e = self.expr_matrix(&e_expr, block);
                let lhs = self.laplacian(&target).mul(&e);
                let rhs = e.mul(&laplacian);
                report.record("laplacian.commutes.E", block, &lhs, &rhs);
            }
        }
    }

    fn laplacian1_rhs_expr(&self) -> OperatorExpr {
        let mut terms = Vec::new();
        // 2 ε_{ij} ε_k^a ι^i_a ι^{jk}  (over the common denominator 2)
        for i in 0..self.r {
            for j in 0..self.r {
                for k in 0..self.r {
                    for a in 0..2 * self.g {
                        terms.push((
                            2,
                            vec![
                                ElemOp::WedgeSym(SymGen::new(i, j)),
                                ElemOp::WedgeHv(HvGen {
                                    i: k as u16,
                                    a: a as u16,
                                }),
                                ElemOp::ContractHv(HvGen {
                                    i: i as u16,
                                    a: a as u16,
                                }),
                                ElemOp::ContractSym(SymGen::new(j, k)),
                            ],
                        ));
                    }
                }
            }
        }
        // −½ η_{ab} η^{cd} ε_i^a ε_j^b ι^i_c ι^j_d
        terms.extend(self.eta_eta_quartic_terms(-1));
        // −g ε_{ij} ι^{ij}
        for i in 0..self.r {
            for j in 0..self.r {
                terms.push((
                    -2 * self.g as i64,
                    vec![
                        ElemOp::WedgeSym(SymGen::new(i, j)),
                        ElemOp::ContractSym(SymGen::new(i, j)),
                    ],
                ));
            }
        }
        OperatorExpr { terms, denom: 2 }
    }

    fn laplacian2_rhs_expr(&self) -> OperatorExpr {
        let mut terms = Vec::new();
        // ε_i^a ε_j^b ι^i_b ι^j_a
        terms.extend(self.crossed_quartic_terms(1));
        // 2 ε_{ij} ε_k^a ι^i_a ι^{jk}
        for i in 0..self.r {
            for j in 0..self.r {
                for k in 0..self.r {
                    for a in 0..2 * self.g {
                        terms.push((
                            2,
                            vec![
                                ElemOp::WedgeSym(SymGen::new(i, j)),
                                ElemOp::WedgeHv(HvGen {
                                    i: k as u16,
                                    a: a as u16,
                                }),
                                ElemOp::ContractHv(HvGen {
                                    i: i as u16,
                                    a: a as u16,
                                }),
                                ElemOp::ContractSym(SymGen::new(j, k)),
                            ],
                        ));
                    }
                }
            }
        }
        // r ε_i^a ι^i_a + (r+1) ε_{ij} ι^{ij}
        terms.extend(self.hv_number_terms(self.r as i64));
        for i in 0..self.r {
            for j in 0..self.r {
                terms.push((
                    self.r as i64 + 1,
                    vec![
                        ElemOp::WedgeSym(SymGen::new(i, j)),
                        ElemOp::ContractSym(SymGen::new(i, j)),
                    ],
                ));
            }
        }
        OperatorExpr { terms, denom: 1 }
    }

    fn laplacian3_rhs_expr(&self) -> OperatorExpr {
        let mut terms = Vec::new();
        // −ε_i^a ε_j^b ι^i_b ι^j_a − η_{ab} η^{cd} ε_i^a ε_j^b ι^i_c ι^j_d
        terms.extend(self.crossed_quartic_terms(-1));
        terms.extend(self.eta_eta_quartic_terms(-1));
        // (2g+1) ε_i^a ι^i_a
        terms.extend(self.hv_number_terms(2 * self.g as i64 + 1));
        OperatorExpr { terms, denom: 1 }
    }

    /// scale · ε_i^a ε_j^b ι^i_b ι^j_a over all indices.
    fn crossed_quartic_terms(&self, scale: i64) -> Vec<(i64, Vec<ElemOp>)> {
        let mut terms = Vec::new();
        for i in 0..self.r {
            for j in 0..self.r {
                for a in 0..2 * self.g {
                    for b in 0..2 * self.g {
                        terms.push((
                            scale,
                            vec![
                                ElemOp::WedgeHv(HvGen {
                                    i: i as u16,
                                    a: a as u16,
                                }),
                                ElemOp::WedgeHv(HvGen {
                                    i: j as u16,
                                    a: b as u16,
                                }),
                                ElemOp::ContractHv(HvGen {
                                    i: i as u16,
                                    a: b as u16,
                                }),
                                ElemOp::ContractHv(HvGen {
                                    i: j as u16,
                                    a: a as u16,
                                }),
                            ],
                        ));
                    }
                }
            }
        }
        terms
    }

    /// scale · η_{ab} η^{cd} ε_i^a ε_j^b ι^i_c ι^j_d over all indices.
    fn eta_eta_quartic_terms(&self, scale: i64) -> Vec<(i64, Vec<ElemOp>)> {
        let mut terms = Vec::new();
        for i in 0..self.r {
            for j in 0..self.r {
                for a in 0..2 * self.g {
                    for b in 0..2 * self.g {
                        let hab = self.eta.eta(a, b);
                        if hab == 0 {
                            continue;
                        }
                        for c in 0..2 * self.g {
                            for d in 0..2 * self.g {
                                let hcd = self.eta.eta_inv(c, d);
                                if hcd == 0 {
                                    continue;
                                }
                                terms.push((
                                    scale * hab * hcd,
                                    vec![
                                        ElemOp::WedgeHv(HvGen {
                                            i: i as u16,
                                            a: a as u16,
                                        }),
                                        ElemOp::WedgeHv(HvGen {
                                            i: j as u16,
                                            a: b as u16,
                                        }),
                                        ElemOp::ContractHv(HvGen {
                                            i: i as u16,
                                            a: c as u16,
                                        }),
                                        ElemOp::ContractHv(HvGen {
                                            i: j as u16,
                                            a: d as u16,
                                        }),
                                    ],
                                ));
                            }
                        }
                    }
                }
            }
        }
        terms
    }

    /// scale · ε_i^a ι^i_a over all indices.
    fn hv_number_terms(&self, scale: i64) -> Vec<(i64, Vec<ElemOp>)> {
        let mut terms = Vec::new();
        for i in 0..self.r {
            for a in 0..2 * self.g {
                terms.push((
                    scale,
                    vec![
                        ElemOp::WedgeHv(HvGen {
                            i: i as u16,
                            a: a as u16,
                        }),
                        ElemOp::ContractHv(HvGen {
                            i: i as u16,
                            a: a as u16,
                        }),
                    ],
                ));
            }
        }
        terms
    }
}

fn sym_rec(
    sym_gens: &[SymGen],
    start: usize,
    need: usize,
    residual: &mut Vec<u32>,
    pick: &mut Vec<SymGen>,
    hv: &Vec<HvGen>,
    basis: &mut Vec<ChainMonomial>,
) {
    if need == 0 {
        if residual.iter().all(|&x| x == 0) {
            basis.push(ChainMonomial {
                hv: hv.clone(),
                sym: pick.clone(),
            });
        }
        return;
    }
    if sym_gens.len() - start < need {
        return;
    }
    for idx in start..=sym_gens.len() - need {
        let gen = sym_gens[idx];
        let (i, j) = (gen.i as usize, gen.j as usize);
        let fits = if i == j {
            residual[i] >= 2
        } else {
            residual[i] >= 1 && residual[j] >= 1
        };
        if !fits {
            continue;
        }
        if i == j {
            residual[i] -= 2;
        } else {
            residual[i] -= 1;
            residual[j] -= 1;
        }
        pick.push(gen);
        sym_rec(sym_gens, idx + 1, need - 1, residual, pick, hv, basis);
        pick.pop();
        if i == j {
            residual[i] += 2;
        } else {
            residual[i] += 1;
            residual[j] += 1;
        }
    }
}

/// Lexicographic enumeration of k-subsets.
fn for_each_combination<T: Copy>(items: &[T], k: usize, f: &mut impl FnMut(&[T])) {
    fn rec<T: Copy>(
        items: &[T],
        start: usize,
        need: usize,
        pick: &mut Vec<T>,
        f: &mut impl FnMut(&[T]),
    ) {
        if need == 0 {
            f(pick);
            return;
        }
        if items.len() - start < need {
            return;
        }
        for idx in start..=items.len() - need {
            pick.push(items[idx]);
            rec(items, idx + 1, need - 1, pick, f);
            pick.pop();
        }
    }
    if k > items.len() {
        return;
    }
    let mut pick = Vec::with_capacity(k);
    rec(items, 0, k, &mut pick, f);
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out = 1u64;
    for i in 0..k {
        out = out * (n - i) as u64 / (i + 1) as u64;
    }
    out
}

/// Result of [`Complex::verify_operator_identities`].
#[derive(Clone, Debug, Default)]
pub struct IdentityReport {
    pub blocks_checked: usize,
    pub identities_checked: usize,
    pub failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(
        &mut self,
        name: &str,
        block: &ChainBlock,
        lhs: &SparseIntMatrix,
        rhs: &SparseIntMatrix,
    ) {
        self.identities_checked += 1;
        if lhs == rhs {
            return;
        }
        let diff = lhs.sub(rhs);
        let witness = diff
            .iter()
            .next()
            .map(|(r, c, _)| (r, c, lhs.get(r, c), rhs.get(r, c)));
        self.failures.push(IdentityFailure {
            identity: String::from(name),
            k: block.k,
            l: block.l,
            gl: block.gl.clone(),
            sp: block.sp.clone(),
            witness,
        });
    }
}

#[derive(Clone, Debug)]
pub struct IdentityFailure {
    pub identity: String,
    pub k: usize,
    pub l: usize,
    pub gl: GlWeight,
    pub sp: SpWeight,
    pub witness: Option<(usize, usize, BigInt, BigInt)>,
}

impl fmt::Display for IdentityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails on block (k={}, l={}, gl={}, sp={})",
            self.identity, self.k, self.l, self.gl, self.sp
        )?;
        if let Some((r, c, lhs, rhs)) = &self.witness {
            write!(f, ": entry ({r},{c}) lhs={lhs} rhs={rhs}")?;
        }
        Ok(())
    }
}
