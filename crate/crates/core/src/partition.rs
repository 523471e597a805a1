//! Young-diagram combinatorics: conjugation, dominance, Frobenius
//! coordinates, the families 𝒪_k and 𝒫_ℓ, and Casimir eigenvalues.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

/// A partition: weakly decreasing positive parts, stored without trailing
/// zeros so that equality is canonical. The derived `Ord` is lexicographic
/// on the part vectors (used for deterministic report ordering); the
/// dominance partial order is [`Partition::dominance_compare`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

/// Frobenius coordinates (α | β): strictly decreasing arm and leg lengths
/// along the diagonal, serialized as {"alpha":[...],"beta":[...]}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusCoords {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
}

impl FrobeniusCoords {
    pub fn to_partition(&self) -> Result<Partition, PartitionError> {
        Partition::from_frobenius(&self.alpha, &self.beta)
    }
}

/// Outcome of a dominance comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Equal,
    Greater,
    Less,
    Incomparable,
    DifferentSize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionError {
    /// Parts are not weakly decreasing or contain an interior zero.
    NotWeaklyDecreasing,
    /// Frobenius coordinates must be strictly decreasing and of equal length.
    InvalidFrobenius,
    /// A GL(V) highest weight must have at most `rank` parts.
    LengthExceedsRank { length: usize, rank: usize },
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::NotWeaklyDecreasing => {
                write!(f, "parts must be weakly decreasing and positive")
            }
            PartitionError::InvalidFrobenius => {
                write!(
                    f,
                    "Frobenius coordinates must be strictly decreasing, of equal length"
                )
            }
            PartitionError::LengthExceedsRank { length, rank } => {
                write!(
                    f,
                    "partition of length {length} is not a GL highest weight for rank {rank}"
                )
            }
        }
    }
}

impl core::error::Error for PartitionError {}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, part) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Partition {
    /// Canonicalizes by stripping trailing zeros; rejects interior zeros or
    /// increasing parts.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(PartitionError::NotWeaklyDecreasing);
        }
        Ok(Partition(parts))
    }

    /// Panicking constructor for literals in tests and internal tables.
    pub fn of(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition literal")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Diagonal length: sup{i | λ_i ≥ i} (1-based), as in the 𝒪_k definition.
    pub fn rank(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .count()
    }

    /// The conjugate diagram λ*, with λ*_i = sup{j | λ_j ≥ i}.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for i in 1..=cols {
            parts.push(self.0.iter().take_while(|&&p| p as usize >= i).count() as u32);
        }
        Partition(parts)
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Dominance order: at equal size, λ ≥ μ iff every leading partial sum
    /// of λ dominates the corresponding one of μ.
    pub fn dominance_compare(&self, other: &Partition) -> Dominance {
        if self.size() != other.size() {
            return Dominance::DifferentSize;
        }
        let len = self.length().max(other.length());
        let (mut sum_a, mut sum_b) = (0u64, 0u64);
        let (mut ge, mut le) = (true, true);
        for i in 0..len {
            sum_a += u64::from(self.part(i));
            sum_b += u64::from(other.part(i));
            ge &= sum_a >= sum_b;
            le &= sum_a <= sum_b;
        }
        match (ge, le) {
            (true, true) => Dominance::Equal,
            (true, false) => Dominance::Greater,
            (false, true) => Dominance::Less,
            (false, false) => Dominance::Incomparable,
        }
    }

    /// n(λ) = Σ (i−1)λ_i, cross-checked against Σ C(λ*_i, 2).
    pub fn n_statistic(&self) -> u64 {
        let by_rows: u64 = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * u64::from(p))
            .sum();
        let by_cols: u64 = self
            .conjugate()
            .parts()
            .iter()
            .map(|&c| {
                let c = u64::from(c);
                c * (c - 1) / 2
            })
            .sum();
        assert_eq!(by_rows, by_cols, "n(λ) formulas disagree on {self:?}");
        by_rows
    }

    /// Casimir eigenvalue c_λ of Δ_GL(V) on S^λ(V) with dim V = r:
    /// Σ λ_i (λ_i + r − 2i + 1), cross-checked against the rearranged form
    /// r|λ| + 2n(λ*) − 2n(λ).
    pub fn casimir_eigenvalue(&self, r: usize) -> Result<i64, PartitionError> {
        if self.length() > r {
            return Err(PartitionError::LengthExceedsRank {
                length: self.length(),
                rank: r,
            });
        }
        let direct: i64 = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let p = i64::from(p);
                p * (p + r as i64 - 2 * (i as i64 + 1) + 1)
            })
            .sum();
        let rearranged = r as i64 * self.size() as i64 + 2 * self.conjugate().n_statistic() as i64
            - 2 * self.n_statistic() as i64;
        assert_eq!(direct, rearranged, "Casimir formulas disagree on {self:?}");
        Ok(direct)
    }

    /// Componentwise sum λ + μ.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.length().max(other.length());
        Partition((0..len).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Inner product (λ, μ) = Σ λ_i μ_i.
    pub fn inner(&self, other: &Partition) -> u64 {
        (0..self.length().min(other.length()))
            .map(|i| u64::from(self.part(i)) * u64::from(other.part(i)))
            .sum()
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let (alpha, beta) = self.to_frobenius();
        FrobeniusCoords { alpha, beta }
    }

    /// Frobenius coordinates (α | β): arm and leg lengths along the diagonal.
    pub fn to_frobenius(&self) -> (Vec<u32>, Vec<u32>) {
        let d = self.rank();
        let conj = self.conjugate();
        let alpha = (0..d).map(|i| self.part(i) - (i as u32 + 1)).collect();
        let beta = (0..d).map(|i| conj.part(i) - (i as u32 + 1)).collect();
        (alpha, beta)
    }

    /// Builds the partition with Frobenius coordinates (α | β); the i-th part
    /// is α_i + i for i ≤ d and #{j | β_j + j ≥ i} beyond the diagonal.
    pub fn from_frobenius(alpha: &[u32], beta: &[u32]) -> Result<Partition, PartitionError> {
        if alpha.len() != beta.len()
            || alpha.windows(2).any(|w| w[0] <= w[1])
            || beta.windows(2).any(|w| w[0] <= w[1])
        {
            return Err(PartitionError::InvalidFrobenius);
        }
        let d = alpha.len();
        let mut parts: Vec<u32> = (0..d).map(|i| alpha[i] + i as u32 + 1).collect();
        let max_len = beta.first().map_or(d, |&b| b as usize + 1).max(d);
        for i in d + 1..=max_len {
            let count = beta
                .iter()
                .enumerate()
                .filter(|&(j, &b)| b as usize + j + 1 >= i)
                .count() as u32;
            if count > 0 {
                parts.push(count);
            }
        }
        let result = Partition::new(parts)?;
        debug_assert_eq!(result.to_frobenius(), (alpha.to_vec(), beta.to_vec()));
        Ok(result)
    }

    /// Dimension of the S_{|λ|}-irreducible of shape λ (hook-length formula).
    pub fn sn_dimension(&self) -> u64 {
        let n = self.size();
        let mut num = 1u128;
        for k in 1..=n as u128 {
            num *= k;
        }
        let mut den = 1u128;
        for (i, j) in self.cells() {
            den *= u128::from(self.hook_length(i, j));
        }
        assert_eq!(num % den, 0, "hook-length division must be exact");
        (num / den) as u64
    }

    /// Dimension of S^λ(V) for dim V = r (hook-content formula); zero when
    /// λ has more than r rows.
    pub fn gl_dimension(&self, r: usize) -> u64 {
        if self.length() > r {
            return 0;
        }
        let mut num = 1u128;
        let mut den = 1u128;
        for (i, j) in self.cells() {
            num *= (r as i64 + j as i64 - i as i64) as u128;
            den *= u128::from(self.hook_length(i, j));
        }
        assert_eq!(num % den, 0, "hook-content division must be exact");
        (num / den) as u64
    }

    fn hook_length(&self, i: usize, j: usize) -> u32 {
        let arm = self.part(i) - (j as u32 + 1);
        let leg = self.conjugate().part(j) - (i as u32 + 1);
        arm + leg + 1
    }

    /// Cells (i, j) of the diagram, 0-based row/column.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::with_capacity(self.size() as usize);
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p as usize {
                cells.push((i, j));
            }
        }
        cells
    }

    /// All partitions of `n`, in descending lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(current.clone()));
                return;
            }
            for part in (1..=remaining.min(max_part)).rev() {
                current.push(part);
                rec(remaining - part, part, current, out);
                current.pop();
            }
        }
        rec(n, n.max(1), &mut current, &mut out);
        if n == 0 {
            return vec![Partition::empty()];
        }
        out
    }
}

/// Strictly decreasing sequences α_1 > … > α_d ≥ 0 with Σα_i + d = total,
/// built largest part first. `remaining` counts Σα_i plus one slot per entry
/// still to be placed.
fn decreasing_sequences(total: usize) -> Vec<Vec<u32>> {
    fn rec(remaining: usize, strict_upper: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        if strict_upper == 0 {
            return;
        }
        let max = (remaining - 1).min(strict_upper - 1);
        for a in (0..=max).rev() {
            current.push(a as u32);
            rec(remaining - a - 1, a, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    rec(total, usize::MAX, &mut current, &mut out);
    out
}

/// 𝒪_k: self-conjugate diagrams with 2k = |λ| + rank(λ); these are exactly
/// the Frobenius symbols (α | α) with Σα_i + d = k.
pub fn enumerate_o(k: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = decreasing_sequences(k)
        .iter()
        .map(|alpha| Partition::from_frobenius(alpha, alpha).expect("valid Frobenius symbol"))
        .collect();
    out.sort();
    out.reverse();
    out
}

/// 𝒫_ℓ: partitions of 2ℓ of the Frobenius form (α_1+1,…,α_d+1 | α_1,…,α_d)
/// with Σα_i + d = ℓ.
pub fn enumerate_p(ell: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = decreasing_sequences(ell)
        .iter()
        .map(|alpha| {
            let shifted: Vec<u32> = alpha.iter().map(|&a| a + 1).collect();
            Partition::from_frobenius(&shifted, alpha).expect("valid Frobenius symbol")
        })
        .collect();
    out.sort();
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: conjugate by enumerating cells and counting per column.
    fn conjugate_by_cells(p: &Partition) -> Partition {
        let cols = p.part(0) as usize;
        let mut counts = vec![0u32; cols];
        for (_, j) in p.cells() {
            counts[j] += 1;
        }
        Partition::new(counts).unwrap()
    }

    fn all_up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::of(&[3]).conjugate(), Partition::of(&[1, 1, 1]));
        let p = Partition::of(&[3, 1]);
        assert_eq!(p.conjugate(), conjugate_by_cells(&p));
        assert_eq!(p.conjugate(), Partition::of(&[2, 1, 1]));
    }

    #[test]
    fn conjugate_is_involution_up_to_12() {
        for p in all_up_to(12) {
            assert_eq!(p.conjugate().conjugate(), p);
            assert_eq!(p.conjugate(), conjugate_by_cells(&p));
            assert_eq!(p.conjugate().size(), p.size());
        }
    }

    #[test]
    fn dominance_examples() {
        let p = |s: &[u32]| Partition::of(s);
        assert_eq!(p(&[2, 1]).dominance_compare(&p(&[2, 1])), Dominance::Equal);
        assert_eq!(
            p(&[3]).dominance_compare(&p(&[1, 1, 1])),
            Dominance::Greater
        );
        assert_eq!(p(&[1, 1, 1]).dominance_compare(&p(&[3])), Dominance::Less);
        // Oracle-confirmed: partial sums 3,4,5,6 vs 2,4,6,6 fail in both directions.
        assert_eq!(
            p(&[3, 1, 1, 1]).dominance_compare(&p(&[2, 2, 2])),
            Dominance::Incomparable
        );
        assert_eq!(
            p(&[2]).dominance_compare(&p(&[1])),
            Dominance::DifferentSize
        );
    }

    #[test]
    fn dominance_antitone_under_conjugation_up_to_10() {
        for n in 0..=10u32 {
            let parts = Partition::all_of_size(n);
            for a in &parts {
                for b in &parts {
                    let d = a.dominance_compare(b);
                    let dc = b.conjugate().dominance_compare(&a.conjugate());
                    assert_eq!(d, dc, "λ={a:?} μ={b:?}");
                }
            }
        }
    }

    #[test]
    fn n_statistic_examples() {
        assert_eq!(Partition::empty().n_statistic(), 0);
        assert_eq!(Partition::of(&[1, 1, 1]).n_statistic(), 3);
        assert_eq!(Partition::of(&[3, 1]).n_statistic(), 1);
    }

    #[test]
    fn casimir_examples() {
        for r in 1..=6 {
            assert_eq!(Partition::of(&[1]).casimir_eigenvalue(r).unwrap(), r as i64);
            assert_eq!(Partition::empty().casimir_eigenvalue(r).unwrap(), 0);
        }
        assert_eq!(Partition::of(&[2]).casimir_eigenvalue(3).unwrap(), 8);
        assert!(Partition::of(&[1, 1]).casimir_eigenvalue(1).is_err());
    }

    #[test]
    fn casimir_three_formulas_agree_up_to_10() {
        // The first two forms are asserted inside casimir_eigenvalue; check
        // the third, Σ λ*_i (r − λ*_i + 2i − 1), here.
        for p in all_up_to(10) {
            for r in p.length()..=10 {
                let c = p.casimir_eigenvalue(r).unwrap();
                let conj = p.conjugate();
                let third: i64 = conj
                    .parts()
                    .iter()
                    .enumerate()
                    .map(|(i, &q)| {
                        let q = i64::from(q);
                        q * (r as i64 - q + 2 * (i as i64 + 1) - 1)
                    })
                    .sum();
                assert_eq!(c, third, "λ={p:?} r={r}");
            }
        }
    }

    #[test]
    fn casimir_strictly_monotone_in_dominance_up_to_9() {
        for n in 1..=9u32 {
            let parts = Partition::all_of_size(n);
            for a in &parts {
                for b in &parts {
                    if a == b || a.dominance_compare(b) != Dominance::Greater {
                        continue;
                    }
                    for r in a.length().max(b.length())..=n as usize {
                        assert!(
                            a.casimir_eigenvalue(r).unwrap() > b.casimir_eigenvalue(r).unwrap(),
                            "c_λ must strictly dominate: λ={a:?} μ={b:?} r={r}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(
            Partition::from_frobenius(&[1], &[0]).unwrap(),
            Partition::of(&[2])
        );
        assert_eq!(
            Partition::from_frobenius(&[1, 0], &[1, 0]).unwrap(),
            Partition::of(&[2, 2])
        );
        assert_eq!(Partition::of(&[3, 1]).to_frobenius(), (vec![2], vec![1]));
        // Hooks (α | β) = (α+1, 1^β).
        assert_eq!(
            Partition::from_frobenius(&[2], &[3]).unwrap(),
            Partition::of(&[3, 1, 1, 1])
        );
        assert!(Partition::from_frobenius(&[1, 1], &[1, 0]).is_err());
        assert!(Partition::from_frobenius(&[1], &[]).is_err());
    }

    #[test]
    fn frobenius_round_trip_up_to_10() {
        for p in all_up_to(10) {
            if p.is_empty() {
                continue;
            }
            let (alpha, beta) = p.to_frobenius();
            assert_eq!(Partition::from_frobenius(&alpha, &beta).unwrap(), p);
            let d = p.rank() as u64;
            let total: u64 = alpha.iter().map(|&a| u64::from(a)).sum::<u64>()
                + beta.iter().map(|&b| u64::from(b)).sum::<u64>()
                + d;
            assert_eq!(total, p.size());
        }
    }

    #[test]
    fn enumerate_o_examples() {
        assert_eq!(enumerate_o(0), vec![Partition::empty()]);
        assert_eq!(enumerate_o(1), vec![Partition::of(&[1])]);
        assert_eq!(enumerate_o(2), vec![Partition::of(&[2, 1])]);
        assert_eq!(
            enumerate_o(3),
            vec![Partition::of(&[3, 1, 1]), Partition::of(&[2, 2])]
        );
        assert_eq!(
            enumerate_o(4),
            vec![Partition::of(&[4, 1, 1, 1]), Partition::of(&[3, 2, 1])]
        );
    }

    #[test]
    fn enumerate_o_matches_definition_up_to_6() {
        // Oracle: filter all partitions by the defining property.
        for k in 0..=6usize {
            let mut expected: Vec<Partition> = all_up_to(2 * k as u32)
                .into_iter()
                .filter(|p| p.is_self_conjugate() && p.size() + p.rank() as u64 == 2 * k as u64)
                .collect();
            expected.sort();
            expected.reverse();
            assert_eq!(enumerate_o(k), expected, "k={k}");
            for p in enumerate_o(k) {
                if k > 0 {
                    assert!(p.size() >= k as u64 && p.size() <= 2 * k as u64 - 1);
                }
            }
        }
    }

    #[test]
    fn enumerate_p_examples() {
        assert_eq!(enumerate_p(1), vec![Partition::of(&[2])]);
        assert_eq!(enumerate_p(2), vec![Partition::of(&[3, 1])]);
        // Oracle-confirmed (brute plethysm in weightchar): d=2, α=(1,0) is
        // the Frobenius symbol (2,1|1,0) = (3,3).
        assert_eq!(
            enumerate_p(3),
            vec![Partition::of(&[4, 1, 1]), Partition::of(&[3, 3])]
        );
        assert_eq!(
            enumerate_p(4),
            vec![Partition::of(&[5, 1, 1, 1]), Partition::of(&[4, 3, 1])]
        );
    }

    #[test]
    fn enumerate_p_members_have_size_two_ell() {
        for ell in 1..=6usize {
            for p in enumerate_p(ell) {
                assert_eq!(p.size(), 2 * ell as u64);
                assert!(p.part(0) as usize <= ell + 1);
                let (alpha, beta) = p.to_frobenius();
                assert_eq!(Partition::from_frobenius(&alpha, &beta).unwrap(), p);
                assert!(alpha.iter().zip(&beta).all(|(&a, &b)| a == b + 1));
            }
        }
    }

    #[test]
    fn add_and_inner_examples() {
        let p = |s: &[u32]| Partition::of(s);
        assert_eq!(p(&[1, 1]).add(&p(&[2])), p(&[3, 1]));
        assert_eq!(p(&[2, 1]).inner(&p(&[1, 1])), 3);
        assert_eq!(p(&[2, 1]).inner(&Partition::empty()), 0);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(Partition::of(&[2, 1]).sn_dimension(), 2);
        assert_eq!(Partition::empty().sn_dimension(), 1);
        assert_eq!(Partition::of(&[1, 1]).gl_dimension(3), 3);
        assert_eq!(Partition::of(&[2]).gl_dimension(2), 3);
        assert_eq!(Partition::of(&[1, 1, 1]).gl_dimension(2), 0);
        // Frozen from the hand check of Λ³(S²𝔽⁶) = S^(4,1,1) ⊕ S^(3,3).
        assert_eq!(Partition::of(&[4, 1, 1]).gl_dimension(6), 840);
        assert_eq!(Partition::of(&[3, 3]).gl_dimension(6), 490);
    }

    #[test]
    fn sn_dimensions_square_sum_to_factorial() {
        for n in 1..=8u32 {
            let total: u64 = Partition::all_of_size(n)
                .iter()
                .map(|p| p.sn_dimension() * p.sn_dimension())
                .sum();
            let factorial: u64 = (1..=u64::from(n)).product();
            assert_eq!(total, factorial);
        }
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(
            Partition::new(vec![2, 1, 0, 0]).unwrap(),
            Partition::of(&[2, 1])
        );
        assert_eq!(Partition::new(vec![]).unwrap(), Partition::empty());
    }

    #[test]
    fn serde_shapes() {
        let p = Partition::of(&[3, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[3,1]");
        let back: Partition = serde_json::from_str("[3,1]").unwrap();
        assert_eq!(back, p);
        let coords = p.frobenius();
        assert_eq!(
            serde_json::to_string(&coords).unwrap(),
            r#"{"alpha":[2],"beta":[1]}"#
        );
        let parsed: FrobeniusCoords =
            serde_json::from_str(r#"{"alpha":[2],"beta":[1]}"#).unwrap();
        assert_eq!(parsed.to_partition().unwrap(), p);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Partition::empty().rank(), 0);
        assert_eq!(Partition::of(&[3, 1]).rank(), 1);
        assert_eq!(Partition::of(&[3, 3]).rank(), 2);
        assert_eq!(Partition::of(&[3, 2, 1]).rank(), 2);
    }
}
