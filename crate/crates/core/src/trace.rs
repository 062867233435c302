//! Step trace text format:
//!
//! ```text
//! step=<k> sym=<s> pos=<p> fired=[<lanes>] K1=<0|1> det=<bitstring> K2=[<lanes>]
//! ```
//!
//! `k` counts input symbols from 1, lanes are 1-based, `det` is the detector
//! register after the step with lane 1 leftmost.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::pamu::StepOutcome;

pub fn render_step(index: usize, step: &StepOutcome) -> String {
    format!(
        "step={} sym={} pos={} fired={} K1={} det={} K2={}",
        index,
        step.input_symbol,
        step.position_before,
        step.fired.list_1based(),
        u8::from(step.k1),
        step.detectors_after.bitstring(),
        step.k2_lanes.list_1based()
    )
}

pub fn render_trace(trace: &[StepOutcome]) -> String {
    trace
        .iter()
        .enumerate()
        .map(|(i, s)| render_step(i + 1, s) + "\n")
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceLine {
    pub step: usize,
    pub symbol: String,
    pub position: usize,
    /// 1-based.
    pub fired: Vec<usize>,
    pub k1: bool,
    pub detectors: String,
    /// 1-based.
    pub k2: Vec<usize>,
}

fn parse_list(text: &str) -> Option<Vec<usize>> {
    let inner = text.strip_prefix('[')?.strip_suffix(']')?;
    if inner.is_empty() {
        return Some(Vec::new());
    }
    inner.split(',').map(|t| t.parse().ok()).collect()
}

pub fn parse_line(line: &str, line_no: usize) -> Result<TraceLine> {
    let bad = |message: &str| Error::Trace {
        line: line_no,
        message: message.to_owned(),
    };
    let fields: Vec<&str> = line.split_whitespace().collect();
    let keys = ["step", "sym", "pos", "fired", "K1", "det", "K2"];
    if fields.len() != keys.len() {
        return Err(bad("expected 7 fields"));
    }
    let mut values = [""; 7];
    for ((slot, field), key) in values.iter_mut().zip(&fields).zip(keys) {
        *slot = field
            .strip_prefix(key)
            .and_then(|r| r.strip_prefix('='))
            .ok_or_else(|| bad(&format!("expected {key}=")))?;
    }
    let k1 = match values[4] {
        "0" => false,
        "1" => true,
        _ => return Err(bad("K1 must be 0 or 1")),
    };
    if values[5].chars().any(|c| c != '0' && c != '1') {
        return Err(bad("det must be a bit string"));
    }
    Ok(TraceLine {
        step: values[0].parse().map_err(|_| bad("bad step"))?,
        symbol: values[1].to_owned(),
        position: values[2].parse().map_err(|_| bad("bad pos"))?,
        fired: parse_list(values[3]).ok_or_else(|| bad("bad fired list"))?,
        k1,
        detectors: values[5].to_owned(),
        k2: parse_list(values[6]).ok_or_else(|| bad("bad K2 list"))?,
    })
}

pub fn parse_trace(text: &str) -> Result<Vec<TraceLine>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_line(l, i + 1))
        .collect()
}

/// Accepted lanes (1-based) implied by a trace: every lane that raised K2.
pub fn accepted_from_trace(lines: &[TraceLine]) -> BTreeSet<usize> {
    lines.iter().flat_map(|l| l.k2.iter().copied()).collect()
}
