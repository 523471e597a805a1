//! Parallel, optionally disk-cached execution of block-level computations.
//! Independent blocks fan out to a rayon pool; merging is associative and
//! order-independent (results are collected in task order), so identical
//! configurations produce identical outputs at any parallelism setting.

use rayon::prelude::*;

use nilhom_core::homology::{
    assemble_character, block_homology, finish_decomposition, plan_bidegree, plan_homology,
    BlockHomology, BlockTask, HomologyError, HomologyResult,
};
use nilhom_core::{Complex, WeightCharacter};

use crate::cache::BlockCache;

pub struct Driver {
    pub cx: Complex,
    pub cache: Option<BlockCache>,
}

impl Driver {
    pub fn new(g: usize, r: usize) -> Self {
        Driver {
            cx: Complex::new(g, r),
            cache: BlockCache::from_env(),
        }
    }

    fn one_block(&self, task: &BlockTask) -> Result<BlockHomology, HomologyError> {
        match &self.cache {
            None => block_homology(&self.cx, task),
            Some(cache) => {
                let cx = &self.cx;
                let g = cx.g();
                let r = cx.r();
                let block = cx.block(task.k, task.l, &task.gl, &task.sp);
                let dim = block.dim();
                let lap = cache.get_or_build("laplacian", g, r, task, || cx.laplacian(&block));
                let out = cache.get_or_build("boundary", g, r, task, || cx.boundary(&block));
                let rank_in = if task.l >= 1 && task.k + 2 <= cx.hv_count() {
                    let up_task = BlockTask {
                        k: task.k + 2,
                        l: task.l - 1,
                        gl: task.gl.clone(),
                        sp: task.sp.clone(),
                    };
                    let m = cache.get_or_build("boundary", g, r, &up_task, || {
                        let up = cx.block(up_task.k, up_task.l, &up_task.gl, &up_task.sp);
                        cx.boundary(&up)
                    });
                    m.rank()
                } else {
                    0
                };
                let harmonic_dim = dim - lap.rank();
                let rank_out = out.rank();
                let value = dim as i64 - rank_out as i64 - rank_in as i64;
                if value < 0 {
                    return Err(HomologyError::NegativeBlockValue {
                        task: task.clone(),
                        value,
                    });
                }
                let kerim_dim = value as usize;
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
        }
    }

    pub fn run_tasks(
        &self,
        tasks: &[BlockTask],
    ) -> Result<Vec<(BlockTask, BlockHomology)>, HomologyError> {
        tasks
            .par_iter()
            .map(|t| self.one_block(t).map(|b| (t.clone(), b)))
            .collect()
    }

    /// H_k decomposed, both routes cross-checked on every block.
    pub fn homology_decomposition(&self, k: usize) -> Result<HomologyResult, HomologyError> {
        let tasks = plan_homology(&self.cx, k);
        let results = self.run_tasks(&tasks)?;
        finish_decomposition(&self.cx, k, &results)
    }

    /// Homology character of one bidegree, both routes cross-checked.
    pub fn bidegree_homology(&self, k: usize, l: usize) -> Result<WeightCharacter, HomologyError> {
        let tasks = plan_bidegree(&self.cx, k, l);
        let results = self.run_tasks(&tasks)?;
        let dims: Vec<(BlockTask, usize)> = results
            .into_iter()
            .map(|(t, b)| (t, b.harmonic_dim))
            .collect();
        Ok(assemble_character(&self.cx, &dims))
    }

    /// Total homology dimensions by polynomial and homological degree.
    pub fn homology_dims(&self) -> Result<nilhom_core::HomologyDims, HomologyError> {
        let cx = &self.cx;
        let max_poly = cx.hv_count() + 2 * cx.sym_count();
        let max_hom = cx.hv_count() + cx.sym_count();
        let mut all_tasks = Vec::new();
        for k in 0..=cx.hv_count() {
            for l in 0..=cx.sym_count() {
                all_tasks.extend(plan_bidegree(cx, k, l));
            }
        }
        let results = self.run_tasks(&all_tasks)?;
        let mut by_poly = vec![0u64; max_poly + 1];
        let mut by_hom = vec![0u64; max_hom + 1];
        let mut by_bidegree = std::collections::BTreeMap::new();
        for (task, b) in &results {
            let orbit = gl_orbit_size(&task.gl);
            let mirror = if cx.g() == 1 && task.sp.0[0] > 0 {
                2
            } else {
                1
            };
            let dim = b.harmonic_dim as u64 * orbit * mirror;
            by_poly[task.k + 2 * task.l] += dim;
            by_hom[task.k + task.l] += dim;
            *by_bidegree.entry((task.k, task.l)).or_insert(0) += dim;
        }
        Ok(nilhom_core::HomologyDims {
            by_poly_degree: by_poly,
            by_homological_degree: by_hom,
            by_bidegree,
        })
    }
}

/// Number of distinct permutations of a weight vector: n! / Π (mult_e!).
fn gl_orbit_size(w: &nilhom_core::GlWeight) -> u64 {
    let mut counts = std::collections::BTreeMap::new();
    for &x in &w.0 {
        *counts.entry(x).or_insert(0u64) += 1;
    }
    let fact = |n: u64| (1..=n).product::<u64>();
    let mut out = fact(w.0.len() as u64);
    for &c in counts.values() {
        out /= fact(c);
    }
    out
}
