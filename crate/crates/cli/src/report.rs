//! Machine-readable report shapes for `--json` output.

use mindswap_core::{Label, SwapSequence, Transposition};
use serde::Serialize;

pub fn pair(t: &Transposition) -> [Label; 2] {
    [t.low(), t.high()]
}

pub fn pairs(seq: &SwapSequence) -> Vec<[Label; 2]> {
    seq.swaps().iter().map(pair).collect()
}

#[derive(Serialize)]
pub struct DecomposeReport {
    pub cycles: Vec<Vec<Label>>,
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub parity: String,
}

#[derive(Serialize)]
pub struct PlanReport {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    #[serde(rename = "M")]
    pub min_swaps: usize,
    pub classic_min: usize,
    pub plan: Vec<[Label; 2]>,
    pub helpers: Vec<Label>,
    pub mode: String,
    pub restored: bool,
}

#[derive(Serialize)]
pub struct CertifyJson {
    pub n_max: usize,
    pub mode: String,
    pub checked: usize,
    pub mismatches: Vec<MismatchJson>,
    pub outsider_rechecks: usize,
    pub elapsed_ms: u128,
}

#[derive(Serialize)]
pub struct MismatchJson {
    pub target: String,
    pub expected: usize,
    pub found: Option<usize>,
}

#[derive(Serialize)]
pub struct SimulateReport {
    pub restored: bool,
    pub log_swaps: usize,
    pub plan_swaps: usize,
    pub total_swaps: usize,
    pub violations: Vec<ViolationJson>,
}

#[derive(Serialize)]
pub struct ViolationJson {
    pub pair: [Label; 2],
    pub line: usize,
    pub kind: String,
}

pub fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}
