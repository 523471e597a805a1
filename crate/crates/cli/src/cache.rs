//! Optional on-disk cache for operator block matrices, enabled by the
//! NILHOM_CACHE_DIR environment variable. Blocks are stored as triplet
//! files named by a content hash of (operator, g, r, k, ℓ, weights);
//! absent variable means in-memory only.

use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use nilhom_core::homology::BlockTask;
use nilhom_core::SparseIntMatrix;

use crate::dump;

pub const CACHE_ENV: &str = "NILHOM_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct BlockCache {
    dir: PathBuf,
}

impl BlockCache {
    /// Cache rooted at the directory named by NILHOM_CACHE_DIR, if set.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV).map(|dir| BlockCache {
            dir: PathBuf::from(dir),
        })
    }

    pub fn at(dir: &Path) -> Self {
        BlockCache {
            dir: dir.to_path_buf(),
        }
    }

    fn path_for(&self, operator: &str, g: usize, r: usize, task: &BlockTask) -> PathBuf {
        let gl: Vec<String> = task.gl.0.iter().map(|x| x.to_string()).collect();
        let sp: Vec<String> = task.sp.0.iter().map(|x| x.to_string()).collect();
        let key = format!(
            "v1|{operator}|g={g}|r={r}|k={k}|l={l}|gl={gl}|sp={sp}",
            k = task.k,
            l = task.l,
            gl = gl.join(","),
            sp = sp.join(",")
        );
        let digest = Sha256::digest(key.as_bytes());
        self.dir.join(format!("{}.triplet", hex::encode(digest)))
    }

    /// Loads the cached matrix or builds and stores it. IO failures fall
    /// back to building in memory.
    pub fn get_or_build(
        &self,
        operator: &str,
        g: usize,
        r: usize,
        task: &BlockTask,
        build: impl FnOnce() -> SparseIntMatrix,
    ) -> SparseIntMatrix {
        let path = self.path_for(operator, g, r, task);
        if path.exists() {
            if let Ok(m) = dump::read_triplet_file(&path) {
                return m;
            }
        }
        let m = build();
        let _ = dump::write_triplet_file(&path, &m);
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nilhom_core::{GlWeight, SpWeight};

    #[test]
    fn cache_round_trip() {
        let tmp = tempfile::tempdir().unwrap();
        let cache = BlockCache::at(tmp.path());
        let task = BlockTask {
            k: 2,
            l: 0,
            gl: GlWeight(vec![2]),
            sp: SpWeight(vec![0]),
        };
        let mut built = 0;
        let m1 = cache.get_or_build("laplacian", 1, 1, &task, || {
            built += 1;
            let mut m = SparseIntMatrix::zero(1, 1);
            m.add_to(0, 0, -2);
            m
        });
        let m2 = cache.get_or_build("laplacian", 1, 1, &task, || {
            built += 1;
            SparseIntMatrix::zero(1, 1)
        });
        assert_eq!(built, 1, "second call must hit the cache");
        assert_eq!(m1, m2);
    }
}
