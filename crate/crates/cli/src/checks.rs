//! Named verification checks reproducing the homology tables and operator
//! identities at pinned desk scales. Each check returns per-case outcomes;
//! `verify-paper` runs them all and fails (exit 2) if any case fails.

use rayon::prelude::*;

use nilhom_core::homology::{bidegree_character, block_homology, sigg_homology, BlockTask};
use nilhom_core::partition::Partition;
use nilhom_core::weightchar::{
    decompose_gl, ext_sym2_character, plethysm_ext_sym2, sp_dimension, sym_h_tensor_schur,
    ReportEntry, SchurTable, SpLabel,
};
use nilhom_core::{Complex, GlWeight, SparseIntMatrix};

use crate::driver::Driver;
use crate::render::{CaseJson, CheckJson};

pub const CHECK_NAMES: &[&str] = &[
    "intro-table",
    "sigg",
    "theorem-main",
    "casimir",
    "plethysm",
    "limit-theorem",
    "ell1-proposition",
    "ell2-formula",
    "poincare",
    "kostant",
    "general-g",
];

/// Optional narrowing of a check's pinned scale from the command line.
#[derive(Clone, Debug, Default)]
pub struct CheckScale {
    pub g: Option<usize>,
    pub r: Option<usize>,
    pub k: Option<usize>,
    pub max_degree: Option<usize>,
}

fn case(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> CaseJson {
    CaseJson {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn outcome(name: &str, cases: Vec<CaseJson>) -> CheckJson {
    CheckJson {
        name: name.to_string(),
        passed: cases.iter().all(|c| c.passed),
        cases,
    }
}

pub fn run_check(name: &str, scale: &CheckScale) -> Option<CheckJson> {
    match name {
        "intro-table" => Some(intro_table()),
        "sigg" => Some(sigg(scale)),
        "theorem-main" => Some(theorem_main(scale)),
        "casimir" => Some(casimir(scale)),
        "plethysm" => Some(plethysm()),
        "limit-theorem" => Some(limit_theorem()),
        "ell1-proposition" => Some(ell1_proposition()),
        "ell2-formula" => Some(ell2_formula()),
        "poincare" => Some(poincare()),
        "kostant" => Some(kostant(scale)),
        "general-g" => Some(general_g()),
        _ => None,
    }
}

pub fn run_all(scale: &CheckScale) -> Vec<CheckJson> {
    CHECK_NAMES
        .iter()
        .map(|name| run_check(name, scale).expect("known name"))
        .collect()
}

fn entry(sp: SpLabel, gl: &[u32], mult: u64) -> ReportEntry {
    ReportEntry {
        sp,
        gl: Partition::of(gl),
        mult,
    }
}

fn report_case(name: String, got: &[ReportEntry], expected: &[ReportEntry]) -> CaseJson {
    let passed = got == expected;
    let fmt = |entries: &[ReportEntry]| {
        let report = nilhom_core::DecompositionReport {
            entries: entries.to_vec(),
        };
        format!("{report}")
    };
    let detail = if passed {
        fmt(got)
    } else {
        format!("computed {} ; expected {}", fmt(got), fmt(expected))
    };
    case(name, passed, detail)
}

/// The four-row homology table at g = 1, r = 4.
fn intro_table() -> CheckJson {
    let driver = Driver::new(1, 4);
    let expected: Vec<(usize, Vec<ReportEntry>)> = vec![
        (0, vec![entry(SpLabel::Sym(0), &[], 1)]),
        (1, vec![entry(SpLabel::Sym(1), &[1], 1)]),
        (
            2,
            vec![
                entry(SpLabel::Sym(2), &[1, 1], 1),
                entry(SpLabel::Sym(1), &[3], 1),
            ],
        ),
        (
            3,
            vec![
                entry(SpLabel::Sym(3), &[1, 1, 1], 1),
                entry(SpLabel::Sym(2), &[3, 1], 1),
                entry(SpLabel::Sym(0), &[4], 1),
            ],
        ),
    ];
    let cases = expected
        .into_iter()
        .map(|(k, want)| match driver.homology_decomposition(k) {
            Ok(res) => report_case(format!("H_{k} at r=4"), &res.report.entries, &want),
            Err(e) => case(format!("H_{k} at r=4"), false, format!("error: {e}")),
        })
        .collect();
    outcome("intro-table", cases)
}

/// H_k(Lie₂) equals the 𝒪_k enumeration for k ≤ 4, r ≤ 5.
fn sigg(scale: &CheckScale) -> CheckJson {
    let ks: Vec<usize> = scale
        .k
        .map(|k| vec![k])
        .unwrap_or_else(|| (0..=4).collect());
    let rs: Vec<usize> = scale
        .r
        .map(|r| vec![r])
        .unwrap_or_else(|| (1..=5).collect());
    let mut pairs = Vec::new();
    for &r in &rs {
        for &k in &ks {
            pairs.push((r, k));
        }
    }
    let cases: Vec<CaseJson> = pairs
        .par_iter()
        .map(|&(r, k)| match sigg_homology(r, k) {
            Ok(report) => case(format!("H_{k}(Lie2) at r={r}"), true, format!("{report}")),
            Err(e) => case(format!("H_{k}(Lie2) at r={r}"), false, format!("{e}")),
        })
        .collect();
    outcome("sigg", cases)
}

/// Exact operator identities (commutation relations, ∂² = 0, the three
/// Laplacian expansions, 2Δ = Δ_Sp + Δ_GL − (r+2g+1)𝒟, [Δ, E_i^j] = 0) on
/// every weight block with k + 2ℓ ≤ 6.
fn theorem_main(scale: &CheckScale) -> CheckJson {
    let pairs: Vec<(usize, usize)> = match (scale.g, scale.r) {
        (Some(g), Some(r)) => vec![(g, r)],
        (None, Some(r)) => vec![(1, r)],
        _ => vec![(1, 1), (1, 2), (1, 3), (2, 2)],
    };
    let degree = scale.max_degree.unwrap_or(6);
    let cases: Vec<CaseJson> = pairs
        .par_iter()
        .map(|&(g, r)| {
            let report = Complex::new(g, r).verify_operator_identities(degree);
            let name = format!("identities g={g} r={r} degree<={degree}");
            if report.all_pass() {
                case(
                    name,
                    true,
                    format!(
                        "{} identities on {} blocks",
                        report.identities_checked, report.blocks_checked
                    ),
                )
            } else {
                let first = &report.failures[0];
                case(
                    name,
                    false,
                    format!("{} failures; first: {first}", report.failures.len()),
                )
            }
        })
        .collect();
    outcome("theorem-main", cases)
}

/// The Δ_GL eigenvalue multiset on every block matches {c_λ} predicted by
/// the block's Schur decomposition, and stays within the dominance bound
/// c_λ + c_μ + 2(λ,μ) over the bidegree's constituent pairs.
fn casimir(scale: &CheckScale) -> CheckJson {
    let rs: Vec<usize> = scale
        .r
        .map(|r| vec![r])
        .unwrap_or_else(|| (1..=3).collect());
    let degree = scale.max_degree.unwrap_or(6);
    let mut bidegrees = Vec::new();
    for &r in &rs {
        let cx = Complex::new(1, r);
        for l in 0..=cx.sym_count() {
            if 2 * l > degree {
                break;
            }
            for k in 0..=cx.hv_count().min(degree - 2 * l) {
                bidegrees.push((r, k, l));
            }
        }
    }
    let cases: Vec<CaseJson> = bidegrees
        .par_iter()
        .map(|&(r, k, l)| {
            let name = format!("spectrum r={r} bidegree ({k},{l})");
            match casimir_spectrum_case(r, k, l) {
                Ok(detail) => case(name, true, detail),
                Err(detail) => case(name, false, detail),
            }
        })
        .collect();
    outcome("casimir", cases)
}

fn casimir_spectrum_case(r: usize, k: usize, l: usize) -> Result<String, String> {
    let cx = Complex::new(1, r);
    let chi = bidegree_character(&cx, k, l);
    if chi.is_zero() {
        return Ok("empty bidegree".to_string());
    }
    let mut table = SchurTable::new();
    let mut blocks_verified = 0usize;
    let mut max_seen: Option<i64> = None;
    for s in chi.sp_weights() {
        let slice = chi.gl_slice(&s);
        let report = decompose_gl(&slice).map_err(|e| format!("slice decomposition: {e}"))?;
        // Group constituents by Casimir eigenvalue.
        let mut groups: std::collections::BTreeMap<i64, Vec<(Partition, u64)>> =
            std::collections::BTreeMap::new();
        for e in &report.entries {
            let c = e.gl.casimir_eigenvalue(r).expect("length <= r");
            groups.entry(c).or_default().push((e.gl.clone(), e.mult));
        }
        let dominants: Vec<GlWeight> = {
            let mut seen = std::collections::BTreeSet::new();
            for (w, sp, _) in slice.iter() {
                if w.is_dominant() && sp.0.is_empty() {
                    seen.insert(w.clone());
                }
            }
            seen.into_iter().collect()
        };
        for w in dominants {
            let block = cx.block(k, l, &w, &s);
            let dim = block.dim();
            let cas = cx
                .operator(nilhom_core::OperatorName::CasimirGl, &block)
                .expect("valid operator");
            let mut accounted = 0usize;
            for (&c, members) in &groups {
                let predicted: i64 = members
                    .iter()
                    .map(|(shape, mult)| {
                        let kostka = table.weight_map(shape, r).get(&w.0).copied().unwrap_or(0);
                        *mult as i64 * kostka
                    })
                    .sum();
                if predicted == 0 {
                    continue;
                }
                let shifted = cas.sub(&SparseIntMatrix::identity(dim).scale(c));
                let eigenspace = dim - shifted.rank();
                if eigenspace != predicted as usize {
                    return Err(format!(
                        "block gl={w} sp={s}: eigenvalue {c} has eigenspace {eigenspace}, predicted {predicted}"
                    ));
                }
                accounted += predicted as usize;
                max_seen = Some(max_seen.map_or(c, |m: i64| m.max(c)));
            }
            if accounted != dim {
                return Err(format!(
                    "block gl={w} sp={s}: eigenspaces cover {accounted} of {dim}"
                ));
            }
            blocks_verified += 1;
        }
    }
    // Dominance bound over constituent pairs of Λ^k(H⊗V) ⊗ Λ^ℓ(S²V).
    let hv_char = nilhom_core::homology::collapse_sp(&bidegree_character(&cx, k, 0));
    let hv_parts = decompose_gl(&hv_char).map_err(|e| format!("{e}"))?;
    let sym_parts = decompose_gl(&ext_sym2_character(l, r)).map_err(|e| format!("{e}"))?;
    let mut bound: Option<i64> = None;
    for a in &hv_parts.entries {
        for b in &sym_parts.entries {
            let c = a.gl.casimir_eigenvalue(r).expect("len <= r")
                + b.gl.casimir_eigenvalue(r).expect("len <= r")
                + 2 * a.gl.inner(&b.gl) as i64;
            bound = Some(bound.map_or(c, |m: i64| m.max(c)));
        }
    }
    if let (Some(seen), Some(limit)) = (max_seen, bound) {
        if seen > limit {
            return Err(format!(
                "max eigenvalue {seen} exceeds dominance bound {limit}"
            ));
        }
    }
    Ok(format!("{blocks_verified} blocks verified"))
}

/// Λ^ℓ ∘ S² equals the 𝒫_ℓ family for ℓ ≤ 4.
fn plethysm() -> CheckJson {
    let cases: Vec<CaseJson> = (1..=4usize)
        .into_par_iter()
        .map(|ell| {
            let r = 2 * ell;
            match plethysm_ext_sym2(ell, r) {
                Ok(report) => case(format!("l={ell} r={r}"), true, format!("{report}")),
                Err(e) => case(format!("l={ell} r={r}"), false, format!("{e}")),
            }
        })
        .collect();
    outcome("plethysm", cases)
}

/// The diagonal H_n(n) ≅ H_n ⊗ S^(1^n) (n ≤ 5), the vanishing window
/// H_n(n+ℓ) = 0 for 0 < ℓ, n < ℓ+2, and the ℓ = 1 stable formula.
///
/// The window cases at (n, ℓ) = (2, 1) are genuinely nonzero: the exact
/// computation gives H_1 ⊗ S(3) there, the same value the ell1 cases
/// assert, so those report the discrepancy against the stated window.
fn limit_theorem() -> CheckJson {
    let mut cases = Vec::new();

    let diagonal: Vec<CaseJson> = (1..=5usize)
        .into_par_iter()
        .map(|n| {
            let driver = Driver::new(1, n);
            let name = format!("diagonal n={n} (r={n})");
            match driver.bidegree_homology(n, 0) {
                Ok(chi) => {
                    let ones = Partition::new(vec![1; n]).unwrap();
                    let expected = sym_h_tensor_schur(n as u32, &ones, n);
                    if chi == expected {
                        case(name, true, format!("H_{n} ⊗ S(1^{n})"))
                    } else {
                        case(
                            name,
                            false,
                            "character differs from H_n ⊗ S(1^n)".to_string(),
                        )
                    }
                }
                Err(e) => case(name, false, format!("{e}")),
            }
        })
        .collect();
    cases.extend(diagonal);

    let mut window = Vec::new();
    for (n, ell) in [(1usize, 1usize), (2, 1), (2, 2), (3, 2)] {
        for r in 1..=n + ell {
            window.push((n, ell, r));
        }
    }
    let vanishing: Vec<CaseJson> = window
        .par_iter()
        .map(|&(n, ell, r)| {
            let driver = Driver::new(1, r);
            let name = format!("vanishing n={n} l={ell} r={r}");
            match driver.bidegree_homology(n - ell, ell) {
                Ok(chi) => {
                    if chi.is_zero() {
                        case(name, true, "0".to_string())
                    } else {
                        let what = nilhom_core::weightchar::decompose_sp_gl(&chi)
                            .map(|rep| format!("{rep}"))
                            .unwrap_or_else(|_| format!("dim {}", chi.total_dim()));
                        case(name, false, format!("computed {what} ; expected 0"))
                    }
                }
                Err(e) => case(name, false, format!("{e}")),
            }
        })
        .collect();
    cases.extend(vanishing);

    // Stable ℓ = 1 formula: H_n(n+1) = H_{n−1} ⊗ S^(3,1^{n−2}) for n ≥ 4.
    let stable: Vec<CaseJson> = [4usize, 5]
        .into_par_iter()
        .map(|n| {
            let driver = Driver::new(1, n + 1);
            let name = format!("stable l=1 n={n} (r={})", n + 1);
            let mut shape = vec![3u32];
            shape.extend(std::iter::repeat_n(1, n - 2));
            match driver.bidegree_homology(n - 1, 1) {
                Ok(chi) => {
                    let expected =
                        sym_h_tensor_schur((n - 1) as u32, &Partition::new(shape).unwrap(), n + 1);
                    if chi == expected {
                        case(name, true, format!("H_{} ⊗ S(3,1^{})", n - 1, n - 2))
                    } else {
                        case(
                            name,
                            false,
                            "character differs from stable formula".to_string(),
                        )
                    }
                }
                Err(e) => case(name, false, format!("{e}")),
            }
        })
        .collect();
    cases.extend(stable);

    outcome("limit-theorem", cases)
}

/// H_n(L_H)(n+1) for n = 2, 3, 4: H_{n−1} ⊗ S^(3,1^{n−2}) plus the
/// exceptional H_0 ⊗ S^(4) exactly at n = 3.
fn ell1_proposition() -> CheckJson {
    let cases: Vec<CaseJson> = [2usize, 3, 4]
        .into_par_iter()
        .map(|n| {
            let r = n + 1;
            let driver = Driver::new(1, r);
            let name = format!("n={n} (r={r})");
            let mut shape = vec![3u32];
            shape.extend(std::iter::repeat_n(1, n - 2));
            let mut expected = vec![entry(SpLabel::Sym((n - 1) as u32), &shape, 1)];
            if n == 3 {
                expected.push(entry(SpLabel::Sym(0), &[4], 1));
            }
            match driver.bidegree_homology(n - 1, 1) {
                Ok(chi) => match nilhom_core::weightchar::decompose_sp_gl(&chi) {
                    Ok(report) => report_case(name, &report.entries, &expected),
                    Err(e) => case(name, false, format!("{e}")),
                },
                Err(e) => case(name, false, format!("{e}")),
            }
        })
        .collect();
    outcome("ell1-proposition", cases)
}

/// The ℓ = 2 values as displayed: H_4(6) = H_2 ⊗ S^(4,2) and
/// H_5(7) = H_3 ⊗ S^(4,2,1) ⊕ H_1 ⊗ S^(5,2).
///
/// The exact computation finds an additional harmonic summand
/// H_0 ⊗ S^(5,1) at n = 4 (cross-checked by both homology routes and by
/// the Casimir eigenvalue identity 2Δ = Δ_Sp + Δ_GL − (r+2g+1)𝒟, which
/// vanishes on that summand), so the n = 4 case reports the discrepancy
/// rather than hiding it.
fn ell2_formula() -> CheckJson {
    let cases: Vec<CaseJson> = [
        (4usize, 6usize, vec![entry(SpLabel::Sym(2), &[4, 2], 1)]),
        (
            5,
            7,
            vec![
                entry(SpLabel::Sym(3), &[4, 2, 1], 1),
                entry(SpLabel::Sym(1), &[5, 2], 1),
            ],
        ),
    ]
    .into_par_iter()
    .map(|(n, r, expected)| {
        let driver = Driver::new(1, r);
        let name = format!("n={n} (r={r})");
        match driver.bidegree_homology(n - 2, 2) {
            Ok(chi) => match nilhom_core::weightchar::decompose_sp_gl(&chi) {
                Ok(report) => report_case(name, &report.entries, &expected),
                Err(e) => case(name, false, format!("{e}")),
            },
            Err(e) => case(name, false, format!("{e}")),
        }
    })
    .collect();
    outcome("ell2-formula", cases)
}

/// Rank-one dims (1,2,0,2,1) by polynomial degree, and dim H_k = dim H_{N−k}
/// for r ∈ {1, 2}.
fn poincare() -> CheckJson {
    let mut cases = Vec::new();
    let driver = Driver::new(1, 1);
    match driver.homology_dims() {
        Ok(dims) => {
            let expected = vec![1u64, 2, 0, 2, 1];
            cases.push(case(
                "rank-one dims by polynomial degree",
                dims.by_poly_degree == expected,
                format!("{:?}", dims.by_poly_degree),
            ));
        }
        Err(e) => cases.push(case(
            "rank-one dims by polynomial degree",
            false,
            format!("{e}"),
        )),
    }
    for r in [1usize, 2] {
        let driver = Driver::new(1, r);
        let name = format!("duality r={r}");
        match driver.homology_dims() {
            Ok(dims) => {
                let v = &dims.by_homological_degree;
                let symmetric = (0..v.len()).all(|k| v[k] == v[v.len() - 1 - k]);
                cases.push(case(name, symmetric, format!("{v:?}")));
            }
            Err(e) => cases.push(case(name, false, format!("{e}"))),
        }
    }
    outcome("poincare", cases)
}

/// Harmonic route equals ker/im route on every block (not only dominant
/// representatives) with k + 2ℓ ≤ 6, r ≤ 3, g = 1.
fn kostant(scale: &CheckScale) -> CheckJson {
    let rs: Vec<usize> = scale
        .r
        .map(|r| vec![r])
        .unwrap_or_else(|| (1..=3).collect());
    let degree = scale.max_degree.unwrap_or(6);
    let cases: Vec<CaseJson> = rs
        .par_iter()
        .map(|&r| {
            let cx = Complex::new(1, r);
            let mut blocks = 0usize;
            for l in 0..=cx.sym_count() {
                if 2 * l > degree {
                    break;
                }
                for k in 0..=cx.hv_count().min(degree - 2 * l) {
                    for b in cx.bidegree_blocks(k, l) {
                        let task = BlockTask {
                            k,
                            l,
                            gl: b.gl.clone(),
                            sp: b.sp.clone(),
                        };
                        if let Err(e) = block_homology(&cx, &task) {
                            return case(format!("r={r}"), false, format!("{e}"));
                        }
                        blocks += 1;
                    }
                }
            }
            case(
                format!("r={r}"),
                true,
                format!("{blocks} blocks cross-checked"),
            )
        })
        .collect();
    outcome("kostant", cases)
}

/// For g = 2, n ≤ 3: the multilinear homology dimension at bidegree (n, 0)
/// equals Σ over |λ| = n, length ≤ 2 of dim S^⟨λ⟩(H) · dim(S_n-irrep λ*).
fn general_g() -> CheckJson {
    let cases: Vec<CaseJson> = (1..=3usize)
        .into_par_iter()
        .map(|n| {
            let cx = Complex::new(2, n);
            let name = format!("g=2 n={n} (r={n})");
            let multilinear = GlWeight(vec![1; n]);
            let mut computed = 0u64;
            for b in cx.bidegree_blocks(n, 0) {
                if b.gl != multilinear {
                    continue;
                }
                let task = BlockTask {
                    k: n,
                    l: 0,
                    gl: b.gl.clone(),
                    sp: b.sp.clone(),
                };
                match block_homology(&cx, &task) {
                    Ok(bh) => computed += bh.harmonic_dim as u64,
                    Err(e) => return case(name, false, format!("{e}")),
                }
            }
            let predicted: u64 = Partition::all_of_size(n as u32)
                .into_iter()
                .filter(|p| p.length() <= 2)
                .map(|p| sp_dimension(&p, 2).expect("length <= 2") * p.conjugate().sn_dimension())
                .sum();
            case(
                name,
                computed == predicted,
                format!("computed {computed}, predicted {predicted}"),
            )
        })
        .collect();
    outcome("general-g", cases)
}
