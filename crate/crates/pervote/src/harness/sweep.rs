//! Parameter sweeps over experiment grids, exported as CSV.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::harness::{run_experiment_with_budget, BoundReport, ExperimentSpec};

/// One grid row: the spec, its report, or the error that stopped it.
/// Failed rows keep their place; the sweep continues past them.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepRow {
    pub index: usize,
    pub spec: ExperimentSpec,
    pub report: Option<BoundReport>,
    pub error: Option<String>,
}

/// Runs every spec, rows in input order. Rows are independent games and
/// run concurrently; the output order is fixed by the grid index.
pub fn sweep(specs: &[ExperimentSpec], budget: u128) -> Vec<SweepRow> {
    specs
        .par_iter()
        .enumerate()
        .map(|(index, spec)| match run_experiment_with_budget(spec, budget) {
            Ok(outcome) => {
                SweepRow { index, spec: spec.clone(), report: Some(outcome.report), error: None }
            }
            Err(e) => {
                SweepRow { index, spec: spec.clone(), report: None, error: Some(e.to_string()) }
            }
        })
        .collect()
}

pub const SWEEP_CSV_HEADER: &str =
    "k,n,t,c,strategy,adversary,seed,max_dissat,mean_dissat,thm2_bound,ratio,conflict_number,certificate_ok,error";

fn opt_to_string<T: ToString>(value: &Option<T>) -> String {
    value.as_ref().map(|v| v.to_string()).unwrap_or_default()
}

/// Renders rows as CSV with [`SWEEP_CSV_HEADER`] columns. `ratio` is
/// observed max dissatisfaction over the bound expression. Commas inside
/// adversary or error fields are shielded with quotes.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(SWEEP_CSV_HEADER);
    out.push('\n');
    for row in rows {
        let p = &row.spec.params;
        let (max_dissat, mean_dissat, bound, ratio, conflicts, cert) = match &row.report {
            Some(r) => (
                r.observed_max_dissatisfaction.to_string(),
                r.mean_dissatisfaction.to_string(),
                opt_to_string(&r.thm2_bound),
                opt_to_string(
                    &r.thm2_bound.map(|b| r.observed_max_dissatisfaction as f64 / b),
                ),
                opt_to_string(&r.conflict_number),
                opt_to_string(&r.eq1_certificate_ok),
            ),
            None => Default::default(),
        };
        let fields = [
            p.options.to_string(),
            p.agents.to_string(),
            p.rounds.to_string(),
            opt_to_string(&p.conflict_bound),
            row.spec.strategy.to_string(),
            csv_field(&row.spec.adversary.to_string()),
            row.spec.seed.to_string(),
            max_dissat,
            mean_dissat,
            bound,
            ratio,
            conflicts,
            cert,
            csv_field(row.error.as_deref().unwrap_or("")),
        ];
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

fn csv_field(raw: &str) -> String {
    if raw.contains(',') || raw.contains('"') || raw.contains('\n') {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}
