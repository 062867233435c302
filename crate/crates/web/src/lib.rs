//! Browser bindings: step-through of the matching automaton, the cost
//! comparison swept over the rule count, and the linguistic converter.
//!
//! Every export takes and returns JSON strings; the page in `www/` renders
//! them. The `*_json` functions hold the logic so they can be tested natively.

use fuzzy_pamu::costmodel::{compare, memory_flexible, memory_rigid, parse_params, CostParams};
use fuzzy_pamu::decision::{classify_full_coincidence, Decision};
use fuzzy_pamu::fuzzifier::fuzzify;
use fuzzy_pamu::pamu::flash;
use fuzzy_pamu::symbol::parse_symbols;
use fuzzy_pamu::{parse_config, PamuMatrix, ProcessorConfig, Symbol};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct LaneView {
    name: String,
    class: String,
    cells: Vec<String>,
    end: usize,
}

#[derive(Serialize)]
struct StepView {
    symbol: String,
    position: usize,
    fired: Vec<usize>,
    k1: bool,
    k2: Vec<usize>,
    detectors: String,
}

#[derive(Serialize)]
struct TraceView {
    depth: usize,
    lanes: Vec<LaneView>,
    initial_detectors: String,
    steps: Vec<StepView>,
    accepted: Vec<usize>,
    decision: String,
}

fn load(config_json: &str) -> Result<(ProcessorConfig, PamuMatrix), String> {
    let config = parse_config(config_json).map_err(|e| e.to_string())?;
    let matrix = flash(&config.etalons, &config.alphabet, config.correction_enabled)
        .map_err(|e| e.to_string())?;
    Ok((config, matrix))
}

fn one_based(lanes: impl Iterator<Item = usize>) -> Vec<usize> {
    lanes.map(|i| i + 1).collect()
}

fn trace_view(
    config: &ProcessorConfig,
    matrix: &PamuMatrix,
    input: &[Symbol],
) -> Result<TraceView, String> {
    let report = matrix.match_sequence(input);
    let decision = Decision::resolve(classify_full_coincidence(&report, matrix), config)
        .map_err(|e| e.to_string())?;
    Ok(TraceView {
        depth: matrix.depth(),
        lanes: (0..matrix.lane_count())
            .map(|l| LaneView {
                name: matrix.lane_name(l).to_owned(),
                class: matrix.lane_class(l).name.clone(),
                cells: (1..=matrix.end_marker(l))
                    .filter_map(|p| matrix.cell(l, p))
                    .map(|s| s.as_str().to_owned())
                    .collect(),
                end: matrix.end_marker(l),
            })
            .collect(),
        initial_detectors: matrix.init_state().detectors.bitstring(),
        steps: report
            .trace
            .iter()
            .map(|s| StepView {
                symbol: s.input_symbol.as_str().to_owned(),
                position: s.position_before,
                fired: one_based(s.fired.iter()),
                k1: s.k1,
                k2: one_based(s.k2_lanes.iter()),
                detectors: s.detectors_after.bitstring(),
            })
            .collect(),
        accepted: one_based(report.accepted.iter()),
        decision: decision.to_string(),
    })
}

pub fn trace_json(config_json: &str, symbols: &str) -> Result<String, String> {
    let (config, matrix) = load(config_json)?;
    let view = trace_view(&config, &matrix, &parse_symbols(symbols))?;
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct SweepPoint {
    rules: u64,
    v_flexible: u128,
    v_rigid: u128,
}

#[derive(Serialize)]
struct CostView {
    report: fuzzy_pamu::costmodel::CostReport,
    sweep: Vec<SweepPoint>,
}

/// Cost report for the given params plus memory curves for L = 1..=max_rules.
pub fn cost_json(params_json: &str, max_rules: u64) -> Result<String, String> {
    let params = parse_params(params_json).map_err(|e| e.to_string())?;
    let sweep = (1..=max_rules.max(1))
        .map(|rules| {
            let p = CostParams {
                rules,
                ..params.clone()
            };
            SweepPoint {
                rules,
                v_flexible: memory_flexible(&p),
                v_rigid: memory_rigid(&p),
            }
        })
        .collect();
    serde_json::to_string(&CostView {
        report: compare(&params),
        sweep,
    })
    .map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct TermView {
    name: String,
    points: Vec<(f64, f64)>,
}

#[derive(Serialize)]
struct VariableView {
    name: String,
    universe: (f64, f64),
    terms: Vec<TermView>,
}

#[derive(Serialize)]
struct FuzzifyView {
    variables: Vec<VariableView>,
    chain: Vec<String>,
    trace: TraceView,
}

/// Fuzzifies whitespace-separated numbers and runs the resulting chain.
pub fn fuzzify_json(config_json: &str, values: &str) -> Result<String, String> {
    let (config, matrix) = load(config_json)?;
    let vars = config
        .fuzzifier_spec
        .as_deref()
        .ok_or("configuration has no fuzzifier section")?;
    let xs = values
        .split_whitespace()
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| format!("'{t}' is not a number"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let chain = fuzzify(vars, &xs).map_err(|e| e.to_string())?;
    let view = FuzzifyView {
        variables: vars
            .iter()
            .map(|v| VariableView {
                name: v.name.clone(),
                universe: (v.lo, v.hi),
                terms: v
                    .terms
                    .iter()
                    .map(|t| TermView {
                        name: t.name.as_str().to_owned(),
                        points: t.points().to_vec(),
                    })
                    .collect(),
            })
            .collect(),
        chain: chain.iter().map(|s| s.as_str().to_owned()).collect(),
        trace: trace_view(&config, &matrix, &chain)?,
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn run_trace(config_json: &str, symbols: &str) -> Result<String, JsValue> {
    trace_json(config_json, symbols).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn cost_sweep(params_json: &str, max_rules: u32) -> Result<String, JsValue> {
    cost_json(params_json, max_rules as u64).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn fuzzify_and_run(config_json: &str, values: &str) -> Result<String, JsValue> {
    fuzzify_json(config_json, values).map_err(|e| JsValue::from_str(&e))
}
