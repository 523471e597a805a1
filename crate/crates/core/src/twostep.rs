//! Generic Chevalley-Eilenberg differential for two-step nilpotent Lie
//! algebras given by structure constants:
//!
//!   ∂(a₁ ∧ … ∧ a_k) = Σ_{i<j} (−1)^{i−j+1} [a_i, a_j] ∧ a₁ ∧ … â_i … â_j … ∧ a_k
//!
//! This is the independent formula-route oracle for the ε/ι operator
//! boundary of L_H(V), and the engine behind the free two-step nilpotent
//! algebra Lie₂(V) = V ⊕ Λ²V (Sigg's theorem).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::cecomplex::{binomial, ChainMonomial, Complex};
use crate::matrix::SparseIntMatrix;
use crate::weightchar::{GlWeight, SpWeight};

/// A two-step nilpotent Lie algebra with ordered basis: `primary` non-central
/// generators first, then `central` generators spanning the centre. Brackets
/// of two primaries land in the centre; all other brackets vanish.
#[derive(Clone, Debug)]
pub struct TwoStepAlgebra {
    pub primary: usize,
    pub central: usize,
    /// bracket[p][q] for primaries p, q = list of (central index, coeff),
    /// antisymmetric in (p, q). Central indices are offsets into the
    /// central range (0-based within centrals).
    bracket: Vec<Vec<Vec<(usize, i64)>>>,
    gl_weights: Vec<Vec<u32>>,
    sp_weights: Vec<Vec<i32>>,
    rank_gl: usize,
    rank_sp: usize,
}

/// A GL/Sp weight block of Λ^m of a two-step algebra; monomials are sorted
/// index sets over the full basis (primaries then centrals).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeBlock {
    pub m: usize,
    pub gl: GlWeight,
    pub sp: SpWeight,
    pub basis: Vec<Vec<usize>>,
}

impl WedgeBlock {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

impl TwoStepAlgebra {
    /// Free two-step nilpotent Lie algebra Lie₂(V) = V ⊕ Λ²V with
    /// [E_i, E_j] = E_i ∧ E_j.
    pub fn lie2(r: usize) -> Self {
        assert!(r >= 1);
        let primary = r;
        let pairs: Vec<(usize, usize)> = (0..r)
            .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
            .collect();
        let pair_index: BTreeMap<(usize, usize), usize> =
            pairs.iter().enumerate().map(|(idx, &p)| (p, idx)).collect();
        let mut bracket = vec![vec![Vec::new(); primary]; primary];
        for i in 0..r {
            for j in 0..r {
                if i == j {
                    continue;
                }
                let (lo, hi) = (i.min(j), i.max(j));
                let sign = if i < j { 1 } else { -1 };
                bracket[i][j] = vec![(pair_index[&(lo, hi)], sign)];
            }
        }
        let mut gl_weights: Vec<Vec<u32>> = (0..r)
            .map(|i| {
                let mut w = vec![0u32; r];
                w[i] = 1;
                w
            })
            .collect();
        for &(i, j) in &pairs {
            let mut w = vec![0u32; r];
            w[i] += 1;
            w[j] += 1;
            gl_weights.push(w);
        }
        let total = primary + pairs.len();
        TwoStepAlgebra {
            primary,
            central: pairs.len(),
            bracket,
            gl_weights,
            sp_weights: vec![Vec::new(); total],
            rank_gl: r,
            rank_sp: 0,
        }
    }

    /// L_H(V) = (H ⊗ V) ⊕ S²V with [e_a⊗E_i, e_b⊗E_j] = η_{ab} E_{ij},
    /// using the same canonical generator order as [`Complex`].
    pub fn l_h(cx: &Complex) -> Self {
        let hv = cx.hv_gens();
        let sym = cx.sym_gens();
        let sym_index: BTreeMap<_, usize> =
            sym.iter().enumerate().map(|(idx, s)| (*s, idx)).collect();
        let primary = hv.len();
        let mut bracket = vec![vec![Vec::new(); primary]; primary];
        for (p, x) in hv.iter().enumerate() {
            for (q, y) in hv.iter().enumerate() {
                let eta = cx.eta().eta(x.a as usize, y.a as usize);
                if eta != 0 {
                    let target = crate::cecomplex::SymGen::new(x.i as usize, y.i as usize);
                    bracket[p][q] = vec![(sym_index[&target], eta)];
                }
            }
        }
        let r = cx.r();
        let g = cx.g();
        let mut gl_weights = Vec::with_capacity(primary + sym.len());
        let mut sp_weights = Vec::with_capacity(primary + sym.len());
        for x in &hv {
            let mono = ChainMonomial {
                hv: vec![*x],
                sym: Vec::new(),
            };
            gl_weights.push(mono.gl_weight(r).0);
            sp_weights.push(mono.sp_weight(g).0);
        }
        for s in &sym {
            let mono = ChainMonomial {
                hv: Vec::new(),
                sym: vec![*s],
            };
            gl_weights.push(mono.gl_weight(r).0);
            sp_weights.push(mono.sp_weight(g).0);
        }
        TwoStepAlgebra {
            primary,
            central: sym.len(),
            bracket,
            gl_weights,
            sp_weights,
            rank_gl: r,
            rank_sp: g,
        }
    }

    pub fn dim(&self) -> usize {
        self.primary + self.central
    }

    pub fn rank_gl(&self) -> usize {
        self.rank_gl
    }

    pub fn wedge_dim(&self, m: usize) -> u64 {
        binomial(self.dim(), m)
    }

    fn weight_of(&self, mono: &[usize]) -> (GlWeight, SpWeight) {
        let mut gl = vec![0u32; self.rank_gl];
        let mut sp = vec![0i32; self.rank_sp];
        for &z in mono {
            for (slot, w) in gl.iter_mut().zip(&self.gl_weights[z]) {
                *slot += w;
            }
            for (slot, w) in sp.iter_mut().zip(&self.sp_weights[z]) {
                *slot += w;
            }
        }
        (GlWeight(gl), SpWeight(sp))
    }

    /// All weight blocks of Λ^m, ordered by weight key.
    pub fn wedge_blocks(&self, m: usize) -> Vec<WedgeBlock> {
        let n = self.dim();
        let mut buckets: BTreeMap<(GlWeight, SpWeight), Vec<Vec<usize>>> = BTreeMap::new();
        let mut pick: Vec<usize> = Vec::with_capacity(m);
        fn rec(
            n: usize,
            start: usize,
            need: usize,
            pick: &mut Vec<usize>,
            f: &mut impl FnMut(&[usize]),
        ) {
            if need == 0 {
                f(pick);
                return;
            }
            if n - start < need {
                return;
            }
            for idx in start..=n - need {
                pick.push(idx);
                rec(n, idx + 1, need - 1, pick, f);
                pick.pop();
            }
        }
        if m <= n {
            rec(n, 0, m, &mut pick, &mut |mono| {
                let key = self.weight_of(mono);
                buckets.entry(key).or_default().push(mono.to_vec());
            });
        }
        buckets
            .into_iter()
            .map(|((gl, sp), basis)| WedgeBlock { m, gl, sp, basis })
            .collect()
    }

    /// The single block of Λ^m with the given weights.
    pub fn wedge_block(&self, m: usize, gl: &GlWeight, sp: &SpWeight) -> WedgeBlock {
        let basis = self
            .wedge_blocks(m)
            .into_iter()
            .find(|b| &b.gl == gl && &b.sp == sp)
            .map(|b| b.basis)
            .unwrap_or_default();
        WedgeBlock {
            m,
            gl: gl.clone(),
            sp: sp.clone(),
            basis,
        }
    }

    /// Image of ∂ on one monomial, as (monomial, coefficient) pairs.
    pub fn boundary_of(&self, mono: &[usize]) -> Vec<(Vec<usize>, i64)> {
        let mut out = Vec::new();
        for u in 0..mono.len() {
            for v in u + 1..mono.len() {
                let (p, q) = (mono[u], mono[v]);
                if p >= self.primary || q >= self.primary {
                    continue;
                }
                // (−1)^{i−j+1} with 1-based positions i = u+1, j = v+1.
                let pos_sign = if (u + v + 1) % 2 == 0 { 1i64 } else { -1 };
                for &(central, coeff) in &self.bracket[p][q] {
                    let z = self.primary + central;
                    if mono.binary_search(&z).is_ok() {
                        continue;
                    }
                    let mut rest: Vec<usize> = mono
                        .iter()
                        .enumerate()
                        .filter(|&(pos, _)| pos != u && pos != v)
                        .map(|(_, &x)| x)
                        .collect();
                    // [a_u, a_v] is placed in front, then moved to sorted
                    // position: one transposition per smaller factor.
                    let smaller = rest.iter().filter(|&&x| x < z).count();
                    let move_sign = if smaller % 2 == 0 { 1i64 } else { -1 };
                    let at = rest.binary_search(&z).unwrap_err();
                    rest.insert(at, z);
                    out.push((rest, pos_sign * coeff * move_sign));
                }
            }
        }
        out
    }

    /// Matrix of ∂: Λ^m → Λ^{m−1} restricted to a weight block (the
    /// differential preserves both weights).
    pub fn boundary(&self, src: &WedgeBlock) -> SparseIntMatrix {
        if src.m == 0 {
            return SparseIntMatrix::zero(0, src.dim());
        }
        let target = self.wedge_block(src.m - 1, &src.gl, &src.sp);
        let index: BTreeMap<&Vec<usize>, usize> = target
            .basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut out = SparseIntMatrix::zero(target.dim(), src.dim());
        for (col, mono) in src.basis.iter().enumerate() {
            for (image, coeff) in self.boundary_of(mono) {
                let row = *index
                    .get(&image)
                    .expect("CE image must stay in the weight block");
                out.add_to(row, col, coeff);
            }
        }
        out
    }
}
