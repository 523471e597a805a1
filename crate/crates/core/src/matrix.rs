//! Exact sparse integer matrices and fraction-free elimination.
//!
//! All operator blocks are carried as [`SparseIntMatrix`] over
//! arbitrary-precision integers. Ranks use one-step Bareiss elimination
//! (no fractions, no floating point); kernel bases are recovered by exact
//! rational back-substitution and returned as primitive integer vectors.
//! The pivot rule is fixed (smallest column index first, then smallest row
//! index) so results are reproducible bit for bit.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use alloc::collections::BTreeMap;

/// Sparse matrix over BigInt; no zero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

/// Primitive integer vectors spanning the kernel of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasis {
    pub ambient_dim: usize,
    pub vectors: Vec<Vec<BigInt>>,
}

impl KernelBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

impl fmt::Display for SparseIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} x {} ({} nonzero)",
            self.rows,
            self.cols,
            self.entries.len()
        )?;
        for ((r, c), v) in &self.entries {
            writeln!(f, "  [{r},{c}] = {v}")?;
        }
        Ok(())
    }
}

impl SparseIntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries.insert((i, i), BigInt::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> BigInt {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Adds `value` into position (row, col), dropping the entry if it cancels.
    pub fn add_to(&mut self, row: usize, col: usize, value: impl Into<BigInt>) {
        assert!(row < self.rows && col < self.cols, "entry out of bounds");
        let value = value.into();
        if value.is_zero() {
            return;
        }
        let slot = self.entries.entry((row, col)).or_insert_with(BigInt::zero);
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&(row, col));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for ((r, c), v) in &self.entries {
            out.entries.insert((*c, *r), v.clone());
        }
        out
    }

    /// Matrix product self · rhs.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        // Row-major view of rhs for the inner loop.
        let mut rhs_rows: Vec<Vec<(usize, &BigInt)>> = vec![Vec::new(); rhs.rows];
        for ((r, c), v) in &rhs.entries {
            rhs_rows[*r].push((*c, v));
        }
        let mut out = Self::zero(self.rows, rhs.cols);
        for ((r, k), a) in &self.entries {
            for &(c, b) in &rhs_rows[*k] {
                out.add_to(*r, c, a * b);
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for ((r, c), v) in &rhs.entries {
            out.add_to(*r, *c, v.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for ((r, c), v) in &rhs.entries {
            out.add_to(*r, *c, -v.clone());
        }
        out
    }

    pub fn scale(&self, factor: i64) -> Self {
        let mut out = Self::zero(self.rows, self.cols);
        if factor == 0 {
            return out;
        }
        let factor = BigInt::from(factor);
        for ((r, c), v) in &self.entries {
            out.entries.insert((*r, *c), v * &factor);
        }
        out
    }

    /// Divides every entry exactly by `d`, panicking on a remainder. Used to
    /// clear the ½ prefactors of the displayed operator formulas, which are
    /// integral on the monomial basis.
    pub fn exact_div(&self, d: i64) -> Self {
        assert!(d != 0);
        let d = BigInt::from(d);
        let mut out = Self::zero(self.rows, self.cols);
        for ((r, c), v) in &self.entries {
            let (q, rem) = v.div_rem(&d);
            assert!(rem.is_zero(), "entry {v} at ({r},{c}) not divisible by {d}");
            out.entries.insert((*r, *c), q);
        }
        out
    }

    fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut dense = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for ((r, c), v) in &self.entries {
            dense[*r][*c] = v.clone();
        }
        dense
    }

    /// Rank by one-step Bareiss fraction-free elimination.
    pub fn rank(&self) -> usize {
        if self.entries.is_empty() {
            return 0;
        }
        let mut dense = self.to_dense();
        echelonize(&mut dense, self.cols).len()
    }

    /// Primitive integer basis of the kernel (right null space).
    pub fn kernel_basis(&self) -> KernelBasis {
        let mut dense = self.to_dense();
        let pivots = echelonize(&mut dense, self.cols);
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let free_cols: Vec<usize> = (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();

        let mut vectors = Vec::with_capacity(free_cols.len());
        for &f in &free_cols {
            // Solve U x = 0 with x_f = 1, other free coordinates 0, by
            // rational back-substitution over the echelon rows.
            let mut x = vec![BigRational::zero(); self.cols];
            x[f] = BigRational::one();
            for idx in (0..pivots.len()).rev() {
                let (row, col) = pivots[idx];
                let mut acc = BigRational::zero();
                for c in col + 1..self.cols {
                    if !dense[row][c].is_zero() && !x[c].is_zero() {
                        acc += BigRational::from(dense[row][c].clone()) * &x[c];
                    }
                }
                x[col] = -acc / BigRational::from(dense[row][col].clone());
            }
            vectors.push(clear_denominators(&x));
        }
        KernelBasis {
            ambient_dim: self.cols,
            vectors,
        }
    }

    /// Applies the matrix to an integer vector.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![BigInt::zero(); self.rows];
        for ((r, c), a) in &self.entries {
            if !v[*c].is_zero() {
                out[*r] += a * &v[*c];
            }
        }
        out
    }
}

/// In-place fraction-free (one-step Bareiss) forward elimination. Returns the
/// pivot positions (row, col) in elimination order. Pivot rule: columns left
/// to right, first nonzero row at or below the frontier.
fn echelonize(dense: &mut [Vec<BigInt>], cols: usize) -> Vec<(usize, usize)> {
    let rows = dense.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prev = BigInt::one();
    let mut frontier = 0usize;
    for col in 0..cols {
        if frontier >= rows {
            break;
        }
        let Some(pivot_row) = (frontier..rows).find(|&r| !dense[r][col].is_zero()) else {
            continue;
        };
        dense.swap(frontier, pivot_row);
        for r in frontier + 1..rows {
            for c in col + 1..cols {
                let num =
                    &dense[frontier][col] * &dense[r][c] - &dense[r][col] * &dense[frontier][c];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                dense[r][c] = q;
            }
            dense[r][col] = BigInt::zero();
        }
        prev = dense[frontier][col].clone();
        pivots.push((frontier, col));
        frontier += 1;
    }
    pivots
}

/// Scales a rational vector to a primitive integer vector with deterministic
/// sign (first nonzero entry positive... the free coordinate is +1 before
/// scaling, so content removal suffices).
fn clear_denominators(x: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in x {
        if !v.is_zero() {
            lcm = lcm.lcm(v.denom());
        }
    }
    let mut ints: Vec<BigInt> = x
        .iter()
        .map(|v| (v * BigRational::from(lcm.clone())).to_integer())
        .collect();
    let mut content = BigInt::zero();
    for v in &ints {
        content = content.gcd(v);
    }
    if !content.is_zero() && !content.is_one() {
        for v in &mut ints {
            *v /= &content;
        }
    }
    // Normalize overall sign by the first nonzero coordinate.
    if let Some(first) = ints.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            for v in &mut ints {
                *v = -v.clone();
            }
        }
    }
    ints
}
