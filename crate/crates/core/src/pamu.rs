//! Parallel associative memory unit.
//!
//! Flashing lays each etalon along its own lane: cell `(lane, j)` holds the
//! etalon's j-th symbol, and the lane's end marker records its length. For
//! every distributor position the matrix keeps one lane mask per decoder
//! line, so a step is a single AND of the active mask with the coincidence
//! detectors.
//!
//! Step rules:
//! * a lane fires when its detector holds 1, the distributor is within the
//!   lane's length, and the flashed cell equals the input symbol;
//! * if anything fired (K1) the detectors latch the fired set, the
//!   distributor shifts, and lanes whose end marker is at the current
//!   position complete (K2);
//! * if nothing fired the symbol is interference: detectors and distributor
//!   hold.

use crate::config::{ClassLabel, EtalonSet};
use crate::error::{Error, Result};
use crate::lanes::LaneSet;
use crate::symbol::{decode, Alphabet, Symbol};

#[derive(Debug, Clone, PartialEq)]
pub struct PamuMatrix {
    alphabet: Alphabet,
    cells: Vec<Vec<Symbol>>,
    end_marker: Vec<usize>,
    lane_class: Vec<ClassLabel>,
    lane_name: Vec<String>,
    depth: usize,
    correction_enabled: bool,
    // masks[position - 1][line - 1]
    masks: Vec<Vec<LaneSet>>,
}

/// Register contents between steps. `position` is the 1-based distributor
/// index; `depth + 1` means the distributor has run off the matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomatonState {
    pub position: usize,
    pub detectors: LaneSet,
    pub completed: LaneSet,
    pub steps_consumed: usize,
    pub steps_skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepOutcome {
    pub input_symbol: Symbol,
    pub fired: LaneSet,
    pub k1: bool,
    pub k2_lanes: LaneSet,
    pub position_before: usize,
    pub detectors_after: LaneSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchReport {
    pub accepted: LaneSet,
    pub trace: Vec<StepOutcome>,
    pub final_state: AutomatonState,
}

impl MatchReport {
    /// Symbols taken at K1 steps, in order.
    pub fn consumed(&self) -> Vec<Symbol> {
        self.trace
            .iter()
            .filter(|s| s.k1)
            .map(|s| s.input_symbol.clone())
            .collect()
    }
}

/// Programs the matrix with one lane per etalon, in input order.
pub fn flash(etalons: &[EtalonSet], alphabet: &Alphabet, correction: bool) -> Result<PamuMatrix> {
    if etalons.is_empty() {
        return Err(Error::EmptyStore);
    }
    let depth = etalons.iter().map(EtalonSet::len).max().unwrap_or(0);
    for (lane, e) in etalons.iter().enumerate() {
        if e.is_empty() {
            return Err(Error::validation(
                format!("etalons.{}", e.name),
                "etalon is empty",
            ));
        }
        if !correction && e.len() != depth {
            return Err(Error::UnequalLengthsWithoutCorrection {
                lane: lane + 1,
                expected: depth,
                found: e.len(),
            });
        }
        if let Some(s) = e.symbols.iter().find(|s| !alphabet.contains(s)) {
            return Err(Error::validation(
                format!("etalons.{}.symbols", e.name),
                format!("symbol '{s}' is not in the alphabet"),
            ));
        }
    }

    let lanes = etalons.len();
    let mut masks = vec![vec![LaneSet::empty(lanes); alphabet.len()]; depth];
    for (lane, e) in etalons.iter().enumerate() {
        for (j, s) in e.symbols.iter().enumerate() {
            let line = decode(s, alphabet).expect("checked above");
            masks[j][line - 1].insert(lane);
        }
    }

    Ok(PamuMatrix {
        alphabet: alphabet.clone(),
        cells: etalons.iter().map(|e| e.symbols.clone()).collect(),
        end_marker: etalons.iter().map(EtalonSet::len).collect(),
        lane_class: etalons.iter().map(|e| e.class_label.clone()).collect(),
        lane_name: etalons.iter().map(|e| e.name.clone()).collect(),
        depth,
        correction_enabled: correction,
        masks,
    })
}

impl PamuMatrix {
    pub fn lane_count(&self) -> usize {
        self.cells.len()
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn correction_enabled(&self) -> bool {
        self.correction_enabled
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Cell at 0-based `lane` and 1-based `position`; `None` past the end marker.
    pub fn cell(&self, lane: usize, position: usize) -> Option<&Symbol> {
        position
            .checked_sub(1)
            .and_then(|j| self.cells.get(lane)?.get(j))
    }

    pub fn end_marker(&self, lane: usize) -> usize {
        self.end_marker[lane]
    }

    pub fn end_markers(&self) -> &[usize] {
        &self.end_marker
    }

    pub fn lane_class(&self, lane: usize) -> &ClassLabel {
        &self.lane_class[lane]
    }

    pub fn lane_name(&self, lane: usize) -> &str {
        &self.lane_name[lane]
    }

    /// All detectors and the first distributor digit set to 1.
    pub fn init_state(&self) -> AutomatonState {
        let n = self.lane_count();
        AutomatonState {
            position: 1,
            detectors: LaneSet::full(n),
            completed: LaneSet::empty(n),
            steps_consumed: 0,
            steps_skipped: 0,
        }
    }

    /// One clock of the automaton. Pure: the input state is not touched.
    pub fn step(
        &self,
        state: &AutomatonState,
        symbol: &Symbol,
    ) -> Result<(StepOutcome, AutomatonState)> {
        if state.position > self.depth {
            return Err(Error::AutomatonExhausted {
                position: state.position,
                depth: self.depth,
            });
        }
        let n = self.lane_count();
        let position_before = state.position;
        let fired = match decode(symbol, &self.alphabet) {
            Some(line) => self.masks[position_before - 1][line - 1].and(&state.detectors),
            None => LaneSet::empty(n),
        };
        let k1 = !fired.is_empty();

        let mut next = state.clone();
        let k2_lanes = if k1 {
            let k2 = LaneSet::from_lanes(
                n,
                fired
                    .iter()
                    .filter(|&i| self.end_marker[i] == position_before),
            );
            next.detectors = fired.clone();
            next.position += 1;
            next.completed.union_with(&k2);
            next.steps_consumed += 1;
            k2
        } else {
            next.steps_skipped += 1;
            LaneSet::empty(n)
        };

        let outcome = StepOutcome {
            input_symbol: symbol.clone(),
            fired,
            k1,
            k2_lanes,
            position_before,
            detectors_after: next.detectors.clone(),
        };
        Ok((outcome, next))
    }

    /// Lanes that accept once the input has ended (the end-of-input poll).
    pub fn finalize(&self, state: &AutomatonState) -> LaneSet {
        if self.correction_enabled {
            state.completed.clone()
        } else if state.position == self.depth + 1 {
            state.detectors.clone()
        } else {
            LaneSet::empty(self.lane_count())
        }
    }

    /// Streams the whole input through the automaton. Symbols arriving after
    /// the distributor has run off the matrix are recorded as skipped steps.
    pub fn match_sequence(&self, input: &[Symbol]) -> MatchReport {
        let mut state = self.init_state();
        let mut trace = Vec::with_capacity(input.len());
        for symbol in input {
            match self.step(&state, symbol) {
                Ok((outcome, next)) => {
                    trace.push(outcome);
                    state = next;
                }
                Err(_) => {
                    state.steps_skipped += 1;
                    trace.push(StepOutcome {
                        input_symbol: symbol.clone(),
                        fired: LaneSet::empty(self.lane_count()),
                        k1: false,
                        k2_lanes: LaneSet::empty(self.lane_count()),
                        position_before: state.position,
                        detectors_after: state.detectors.clone(),
                    });
                }
            }
        }
        MatchReport {
            accepted: self.finalize(&state),
            trace,
            final_state: state,
        }
    }

    /// Text dump, one line per lane.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for lane in 0..self.lane_count() {
            let cells: Vec<&str> = self.cells[lane].iter().map(Symbol::as_str).collect();
            out.push_str(&format!(
                "lane={} class={} len={} cells={}\n",
                lane + 1,
                self.lane_class[lane],
                self.end_marker[lane],
                cells.join(",")
            ));
        }
        out
    }
}

/// Running conjunction for one description: the recurrent bit
/// `S_j = S_{j-1} & alpha_j` starting from 1, plus the end-of-input poll.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicatorState<'a> {
    etalon: &'a [Symbol],
    bit: bool,
    seen: usize,
}

impl<'a> IndicatorState<'a> {
    pub fn new(etalon: &'a [Symbol]) -> Self {
        IndicatorState {
            etalon,
            bit: true,
            seen: 0,
        }
    }

    pub fn bit(&self) -> bool {
        self.bit
    }

    pub fn feed(&mut self, symbol: &Symbol) {
        let alpha = self.etalon.get(self.seen) == Some(symbol);
        self.bit &= alpha;
        self.seen += 1;
    }

    /// Read out after the last symbol: 1 only if every position agreed and
    /// exactly `n_i` symbols arrived.
    pub fn poll(&self) -> bool {
        self.bit && self.seen == self.etalon.len()
    }
}

/// Indicator-function form of full coincidence between an etalon and the
/// consumed symbols.
pub fn indicator_match(etalon: &[Symbol], consumed: &[Symbol]) -> bool {
    let mut ind = IndicatorState::new(etalon);
    for s in consumed {
        ind.feed(s);
    }
    ind.poll()
}
