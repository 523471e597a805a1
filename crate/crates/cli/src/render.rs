//! Output shapes: canonical JSON (stable key order, sorted reports, byte-
//! identical round-trips) and aligned text mirroring ⊕-of-tensor notation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use nilhom_core::{DecompositionReport, HomologyResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyJson {
    pub g: usize,
    pub r: usize,
    pub k: usize,
    pub dims_by_bidegree: BTreeMap<usize, u64>,
    pub decomposition: DecompositionReport,
}

impl HomologyJson {
    pub fn from_result(res: &HomologyResult) -> Self {
        HomologyJson {
            g: res.g,
            r: res.r,
            k: res.k,
            dims_by_bidegree: res.dims_by_bidegree.clone(),
            decomposition: res.report.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AllDegreesJson {
    pub g: usize,
    pub r: usize,
    pub dims_by_poly_degree: Vec<u64>,
    pub dims_by_homological_degree: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SiggJson {
    pub r: usize,
    pub k: usize,
    pub decomposition: DecompositionReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlethysmJson {
    pub l: usize,
    pub r: usize,
    pub decomposition: DecompositionReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorsJson {
    pub g: usize,
    pub r: usize,
    pub max_degree: usize,
    pub blocks_checked: usize,
    pub identities_checked: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseJson {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub cases: Vec<CaseJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub all_passed: bool,
    pub checks: Vec<CheckJson>,
}

pub fn homology_text(res: &HomologyResult) -> String {
    let mut out = String::new();
    out.push_str(&format!("H_{}  (g={}, r={})\n", res.k, res.g, res.r));
    for (l, d) in &res.dims_by_bidegree {
        out.push_str(&format!(
            "  bidegree (k={}, l={}): dim {}\n",
            res.k - l,
            l,
            d
        ));
    }
    out.push_str(&format!("  total dimension: {}\n", res.total_dim()));
    out.push_str(&format!("  decomposition: {}\n", res.report));
    out
}

pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization cannot fail")
}
