//! Class assignment and control-word output.
//!
//! Only full coincidence runs on the automaton's accepted lanes. The
//! resemblance and difference modes compare the raw input positionally
//! against each etalon:
//!
//! * max resemblance: matching positions over the shared prefix, divided by
//!   the etalon length; highest wins;
//! * min difference: mismatching positions over the shared prefix plus the
//!   length gap; lowest wins.
//!
//! Ties in either go to the lowest lane.

use std::cmp::Ordering;
use std::fmt;

use crate::config::{ClassLabel, ControlWord, EtalonSet, ProcessorConfig};
use crate::error::{Error, Result};
use crate::pamu::{MatchReport, PamuMatrix};
use crate::symbol::Symbol;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    FullCoincidence,
    MaxResemblance,
    MinDifference,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::FullCoincidence => "full",
            Mode::MaxResemblance => "max",
            Mode::MinDifference => "min",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "full" => Ok(Mode::FullCoincidence),
            "max" => Ok(Mode::MaxResemblance),
            "min" => Ok(Mode::MinDifference),
            other => Err(format!(
                "unknown mode '{other}' (expected full, max or min)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Class(ClassLabel),
    NoMatch,
    /// Accepted lanes (0-based) that span more than one class.
    Ambiguous(Vec<usize>),
}

/// Result of a classify operation before the control word is looked up.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub verdict: Verdict,
    pub mode: Mode,
    /// Resemblance ratio or difference count, for the non-coincidence modes.
    pub score: Option<f64>,
    /// Winning lane, for the non-coincidence modes.
    pub lane: Option<usize>,
}

/// A classification with its control word attached when the verdict is a
/// concrete class.
#[derive(Debug, Clone, PartialEq)]
pub struct Decision {
    pub classification: Classification,
    pub control_word: Option<ControlWord>,
}

impl Decision {
    pub fn resolve(classification: Classification, config: &ProcessorConfig) -> Result<Self> {
        let control_word = match &classification.verdict {
            Verdict::Class(c) => Some(emit_control(c, config)?),
            _ => None,
        };
        Ok(Decision {
            classification,
            control_word,
        })
    }

    pub fn verdict(&self) -> &Verdict {
        &self.classification.verdict
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.classification;
        write!(f, "mode={}", c.mode.as_str())?;
        match &c.verdict {
            Verdict::Class(label) => {
                write!(f, " class={label}")?;
                if let Some(w) = &self.control_word {
                    write!(f, " word={w}")?;
                }
            }
            Verdict::NoMatch => f.write_str(" class=NONE")?,
            Verdict::Ambiguous(lanes) => {
                let l: Vec<String> = lanes.iter().map(|i| (i + 1).to_string()).collect();
                write!(f, " class=AMBIGUOUS lanes=[{}]", l.join(","))?;
            }
        }
        match (c.mode, c.score) {
            (Mode::MaxResemblance, Some(s)) => write!(f, " score={s:.4}")?,
            (Mode::MinDifference, Some(s)) => write!(f, " score={s}")?,
            _ => {}
        }
        Ok(())
    }
}

pub fn classify_full_coincidence(report: &MatchReport, matrix: &PamuMatrix) -> Classification {
    let lanes: Vec<usize> = report.accepted.iter().collect();
    let verdict = match lanes.first() {
        None => Verdict::NoMatch,
        Some(&first) => {
            let class = matrix.lane_class(first);
            if lanes.iter().all(|&l| matrix.lane_class(l) == class) {
                Verdict::Class(class.clone())
            } else {
                Verdict::Ambiguous(lanes)
            }
        }
    };
    Classification {
        verdict,
        mode: Mode::FullCoincidence,
        score: None,
        lane: None,
    }
}

fn matching_positions(input: &[Symbol], etalon: &[Symbol]) -> usize {
    input.iter().zip(etalon).filter(|(a, b)| a == b).count()
}

pub fn classify_max_resemblance(input: &[Symbol], etalons: &[EtalonSet]) -> Classification {
    assert!(!etalons.is_empty(), "etalon store is empty");
    // exact fraction comparison: hits_a / len_a > hits_b / len_b
    let mut best = 0;
    let mut best_hits = matching_positions(input, &etalons[0].symbols);
    for (lane, e) in etalons.iter().enumerate().skip(1) {
        let hits = matching_positions(input, &e.symbols);
        let better = (hits * etalons[best].len()).cmp(&(best_hits * e.len())) == Ordering::Greater;
        if better {
            best = lane;
            best_hits = hits;
        }
    }
    Classification {
        verdict: Verdict::Class(etalons[best].class_label.clone()),
        mode: Mode::MaxResemblance,
        score: Some(best_hits as f64 / etalons[best].len() as f64),
        lane: Some(best),
    }
}

/// Positional mismatches over the shared prefix plus the length gap.
pub fn difference(input: &[Symbol], etalon: &[Symbol]) -> usize {
    let shared = input.len().min(etalon.len());
    (shared - matching_positions(input, etalon)) + input.len().abs_diff(etalon.len())
}

pub fn classify_min_difference(input: &[Symbol], etalons: &[EtalonSet]) -> Classification {
    assert!(!etalons.is_empty(), "etalon store is empty");
    let (lane, diff) = etalons
        .iter()
        .map(|e| difference(input, &e.symbols))
        .enumerate()
        .fold(
            (0, usize::MAX),
            |acc, (i, d)| if d < acc.1 { (i, d) } else { acc },
        );
    Classification {
        verdict: Verdict::Class(etalons[lane].class_label.clone()),
        mode: Mode::MinDifference,
        score: Some(diff as f64),
        lane: Some(lane),
    }
}

pub fn emit_control(class_label: &ClassLabel, config: &ProcessorConfig) -> Result<ControlWord> {
    config
        .control_table
        .get(class_label)
        .cloned()
        .ok_or_else(|| Error::UnknownClass(class_label.name.clone()))
}
