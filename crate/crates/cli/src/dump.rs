//! Plain-text triplet matrix files: a header line "rows cols nnz" followed
//! by one "row col value" line per nonzero entry, in row-major order. Used
//! both for the `dump` subcommand and the on-disk block cache, and suitable
//! for cross-checking against external computer-algebra systems.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use num_bigint::BigInt;
use std::str::FromStr;

use nilhom_core::SparseIntMatrix;

pub fn to_triplet_string(m: &SparseIntMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", m.rows(), m.cols(), m.nnz());
    for (r, c, v) in m.iter() {
        let _ = writeln!(out, "{r} {c} {v}");
    }
    out
}

pub fn from_triplet_string(s: &str) -> Result<SparseIntMatrix> {
    let mut lines = s.lines();
    let header = lines.next().context("empty triplet file")?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    if dims.len() != 3 {
        bail!("malformed triplet header: {header:?}");
    }
    let rows: usize = dims[0].parse()?;
    let cols: usize = dims[1].parse()?;
    let nnz: usize = dims[2].parse()?;
    let mut m = SparseIntMatrix::zero(rows, cols);
    let mut count = 0usize;
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 3 {
            bail!("malformed triplet line: {line:?}");
        }
        let r: usize = parts[0].parse()?;
        let c: usize = parts[1].parse()?;
        let v = BigInt::from_str(parts[2])?;
        m.add_to(r, c, v);
        count += 1;
    }
    if count != nnz {
        bail!("triplet file claims {nnz} entries, found {count}");
    }
    Ok(m)
}

pub fn write_triplet_file(path: &Path, m: &SparseIntMatrix) -> Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    fs::write(path, to_triplet_string(m)).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

pub fn read_triplet_file(path: &Path) -> Result<SparseIntMatrix> {
    let s = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    from_triplet_string(&s)
}
