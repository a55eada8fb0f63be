use gadget_flower::{verify_flower_theorem, verify_metric_propositions, verify_triangle_lemma, GadgetError};
use graph_core::Weight;
use oracles::{dreyfus_wagner, DwConfig, OracleError};
use pbsf_solver::verify_noncrossing_bound;
use reduction::{build_reduction_with, default_base, solve_grid_tiling_bruteforce, verify_gadget_lemmas, GridTilingInstance, LemmaReport, ReductionError};
use serde::Serialize;
use serde_json::json;

use crate::{attachment, input_err, read_input, to_json, CliError, Output, VerifySuite, EXIT_VERIFY_FAILED};

fn finish<T: Serialize>(report: &T, ok: bool) -> Output {
    Output { stdout: to_json(report), code: if ok { 0 } else { EXIT_VERIFY_FAILED } }
}

fn gadget_err(e: GadgetError) -> CliError {
    CliError::Input(e.to_string())
}

fn reduction_err(e: ReductionError) -> CliError {
    CliError::Input(e.to_string())
}

fn lemma_suite(n: usize, l: usize, m: Option<u64>, prefix: &str) -> Result<Output, CliError> {
    let m = m.map_or_else(|| default_base(n, l), Weight::from);
    let mut r: LemmaReport = verify_gadget_lemmas(n, l, &m).map_err(reduction_err)?;
    r.clauses.retain(|c| c.name.starts_with(prefix));
    r.ok = r.clauses.iter().all(|c| c.ok());
    let ok = r.ok;
    Ok(finish(&r, ok))
}

pub fn cmd_verify(suite: &VerifySuite) -> Result<Output, CliError> {
    match *suite {
        VerifySuite::Flower { t } => {
            let r = verify_flower_theorem(t).map_err(gadget_err)?;
            let ok = r.ok;
            Ok(finish(&r, ok))
        }
        VerifySuite::Triangle { l, radius } => {
            let r = verify_triangle_lemma(l, radius).map_err(gadget_err)?;
            let ok = r.ok;
            Ok(finish(&r, ok))
        }
        VerifySuite::Metric { width, height } => {
            let r = verify_metric_propositions(width, height).map_err(gadget_err)?;
            let ok = r.ok;
            Ok(finish(&r, ok))
        }
        VerifySuite::Vg { n, m } => lemma_suite(n, 1, m, "vg("),
        VerifySuite::Lvg { n, l, m } => lemma_suite(n, l, m, "lvg("),
        VerifySuite::Reduction { ref grid, pendant_dummies } => {
            let gt: GridTilingInstance = serde_json::from_str(&read_input(grid)?).map_err(input_err)?;
            let truth = solve_grid_tiling_bruteforce(&gt).map_err(reduction_err)?;
            let out = build_reduction_with(&gt, attachment(pendant_dummies)).map_err(reduction_err)?;
            let cfg = DwConfig { terminal_cap: out.terminals.len().max(16) };
            // No tree at all counts as weight above any budget.
            let weight = match dreyfus_wagner(&out.graph, &out.terminals, &cfg) {
                Ok(tree) => Some(tree.weight),
                Err(OracleError::Unreachable(_)) => None,
                Err(e) => return Err(input_err(e)),
            };
            let within = weight.as_ref().is_some_and(|w| *w <= out.budget);
            let ok = within == truth.is_some();
            let r = json!({
                "satisfiable": truth.is_some(),
                "solution": truth,
                "dummies": out.attachment,
                "steiner_weight": weight,
                "budget": out.budget,
                "within_budget": within,
                "vertices": out.graph.vertex_count(),
                "terminals": out.terminals.len(),
                "ok": ok,
            });
            Ok(finish(&r, ok))
        }
        VerifySuite::Noncrossing { l } => {
            if l > 5 {
                return Err(CliError::Input(format!("l = {l} is too large to enumerate")));
            }
            let r = verify_noncrossing_bound(l);
            let ok = r.ok;
            Ok(finish(&r, ok))
        }
    }
}
