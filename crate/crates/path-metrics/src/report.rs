//! JSON report schema and CSV emission for sweep runs.

use serde::{Deserialize, Serialize};

use crate::minnorm::Lemma1Certificate;
use crate::spiral::SpiralReport;
use crate::theorem2::Theorem2Report;
use crate::turning::TurningData;

pub const PATH_REPORT_SCHEMA: &str = "path-metrics/v1";
pub const SWEEP_CSV_SCHEMA: &str = "theorem2-sweep/v1";

/// Full per-path metrics record: `{t, s, length, xi, gamma_sum, lemma1, theorem2}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PathReport {
    pub schema: String,
    pub t: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<f64>,
    pub length: f64,
    pub xi: Vec<f64>,
    pub gamma_sum: f64,
    pub lemma1: Lemma1Json,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem2: Option<Theorem2Report>,
}

/// JSON cannot express infinity: `bound` is absent for vacuous certificates.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Lemma1Json {
    pub v: [f64; 3],
    pub eta: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
}

impl From<Lemma1Certificate> for Lemma1Json {
    fn from(c: Lemma1Certificate) -> Self {
        Lemma1Json {
            v: c.v,
            eta: c.eta,
            bound: if c.bound.is_finite() { Some(c.bound) } else { None },
        }
    }
}

impl PathReport {
    pub fn new(
        td: &TurningData,
        length: f64,
        lemma1: Lemma1Certificate,
        spiral: Option<&SpiralReport>,
        theorem2: Option<Theorem2Report>,
    ) -> PathReport {
        PathReport {
            schema: PATH_REPORT_SCHEMA.to_string(),
            t: td.xi_sum(),
            s: spiral.map(|r| r.s),
            length,
            xi: td.turn_angles.clone(),
            gamma_sum: td.gamma_sum(),
            lemma1: lemma1.into(),
            theorem2,
        }
    }
}

/// Header line for sweep CSVs (one row per trial).
pub fn sweep_csv_header() -> String {
    format!("# schema: {SWEEP_CSV_SCHEMA}\ntrial,seed,r_target,r,R,n_paths,max_length,max_t,bound,pass")
}

#[allow(clippy::too_many_arguments)]
pub fn sweep_csv_row(
    trial: usize,
    seed: u64,
    r_target: f64,
    r: f64,
    big_r: f64,
    n_paths: usize,
    max_length: f64,
    max_t: f64,
    bound: f64,
    pass: bool,
) -> String {
    format!("{trial},{seed},{r_target},{r},{big_r},{n_paths},{max_length},{max_t},{bound},{pass}")
}
