//! Serializable documents for every command of the `dwork` binary.
//!
//! Each `cmd_*` function is pure apart from the work it delegates: it takes
//! parsed arguments and returns a [`ReportDocument`], which can be written as
//! JSON or rendered as text. Numbers are exact integers throughout, and every
//! table is sorted by canonical representative so that identical requests
//! produce identical bytes.

mod commands;
mod text;

use std::time::Duration;

use serde::{Deserialize, Serialize};

pub use commands::{
    cmd_classes, cmd_count, cmd_hodge, cmd_report, cmd_witness, parse_element, parse_list, CountRequest, ElementInput,
    StrategyChoice, QUINTIC_LISTED, QUINTIC_TABULATED,
};
pub use text::render_text;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// The JSON schema every document validates against.
pub const SCHEMA: &str = include_str!("../../schema/report.schema.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool_version: String,
    /// The request in normalized form, e.g. `hodge --N 5 --v 0,0,1,1,3`.
    pub command: String,
    #[serde(rename = "N")]
    pub n: u32,
    #[serde(rename = "W")]
    pub w: Vec<u32>,
    pub payload: Payload,
    pub warnings: Vec<String>,
    /// Wall-clock timings. Kept out of JSON so reruns are byte-identical.
    #[serde(skip)]
    pub timings: Vec<(String, Duration)>,
}

impl ReportDocument {
    pub(crate) fn new(command: String, n: u32, w: Vec<u32>, payload: Payload) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            tool_version: TOOL_VERSION.to_string(),
            command,
            n,
            w,
            payload,
            warnings: Vec::new(),
            timings: Vec::new(),
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> crate::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> crate::Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    ClassTable(ClassTable),
    OrbitTable(OrbitTable),
    HodgeTable(HodgeTable),
    ClassDetail(ClassDetail),
    Witness(WitnessPayload),
    FiberCounts(CountPayload),
    Report(FullReport),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassRow {
    pub class: Vec<u32>,
    pub coset_size: usize,
    pub dimension: usize,
    pub weights: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassTable {
    pub class_count: u64,
    pub classes: Vec<ClassRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitRow {
    pub normal_form: Vec<u32>,
    pub size: usize,
    pub dimension: usize,
    pub weights: Vec<u32>,
    pub classes: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitTable {
    pub class_count: u64,
    pub orbit_count: usize,
    pub orbits: Vec<OrbitRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HodgeRow {
    pub class: Vec<u32>,
    /// Orbit size under permutations, for the classical weight.
    pub orbit_size: Option<usize>,
    pub dimension: usize,
    pub weights: Vec<u32>,
    pub indexed_weights: Vec<u32>,
    pub semantics_diverge: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusRow {
    pub dimension: usize,
    pub classes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HodgeTable {
    pub rows: Vec<HodgeRow>,
    pub census: Vec<CensusRow>,
    pub total_dimension: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassDetail {
    pub input: Vec<u32>,
    pub class: Vec<u32>,
    pub dimension: usize,
    pub weights: Vec<u32>,
    pub representatives: Vec<Vec<u32>>,
    pub indexed_weights: Vec<u32>,
    pub indexed_representatives: Vec<Vec<u32>>,
    pub semantics_diverge: bool,
    pub dual_class: Vec<u32>,
    pub dual_weights: Vec<u32>,
    pub relabel_invariant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanSummary {
    pub performed: bool,
    pub semantics: String,
    pub classes_scanned: u64,
    pub repeated_classes: u64,
    pub first_repeated: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessPayload {
    pub found: bool,
    pub method: Option<String>,
    pub semantics: String,
    pub class: Option<Vec<u32>>,
    pub weights: Vec<u32>,
    pub repeated_value: Option<u32>,
    pub multiplicity: usize,
    pub witnesses: Vec<Vec<u32>>,
    pub semantics_diverge: bool,
    pub scan: ScanSummary,
    /// Whether the scan confirms the witness (or its absence). `None` when
    /// the scan was skipped.
    pub agreement: Option<bool>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CountRow {
    pub strategy: String,
    pub projective_count: u64,
    pub middle_trace: Option<i64>,
    pub weil_bound_holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TowerLevel {
    pub m: u32,
    pub q: u64,
    pub t: Vec<u32>,
    pub projective_count: u64,
    pub middle_trace: Option<i64>,
    pub weil_bound_holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CountPayload {
    pub p: u64,
    pub m: u32,
    pub q: u64,
    /// Defining polynomial coefficients, constant term first.
    pub modulus: Vec<u32>,
    /// `t` as polynomial coefficients, constant term first.
    pub t: Vec<u32>,
    pub middle_betti: u64,
    pub counts: Vec<CountRow>,
    pub counts_agree: Option<bool>,
    pub tower: Vec<TowerLevel>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ListedClass {
    pub display_order: usize,
    pub class: Vec<u32>,
    pub normal_form: Vec<u32>,
    pub orbit_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitSummary {
    pub normal_form: Vec<u32>,
    pub size: usize,
    /// Display orders of the listed classes in this orbit.
    pub listed: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ListedHodgeRow {
    pub display_order: usize,
    pub class: Vec<u32>,
    pub dimension: usize,
    pub weights: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentativeRow {
    pub display_order: usize,
    pub class: Vec<u32>,
    pub representatives: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualRow {
    pub display_order: usize,
    pub class: Vec<u32>,
    pub dual_class: Vec<u32>,
    pub dual_normal_form: Vec<u32>,
    pub weights: Vec<u32>,
    pub dual_weights: Vec<u32>,
    /// `HT(v*) = {N - 2 - h : h in HT(v)}`.
    pub reflected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FullReport {
    pub listed: Vec<ListedClass>,
    pub orbits: Vec<OrbitSummary>,
    pub listed_cover_all_orbits: bool,
    pub hodge_table: Vec<ListedHodgeRow>,
    pub nonzero_representatives: Vec<RepresentativeRow>,
    pub census: Vec<CensusRow>,
    pub total_dimension: u64,
    pub middle_betti: u64,
    pub duality: Vec<DualRow>,
}
