//! Simulator for an associative fuzzy control processor with a rigid
//! structure.
//!
//! Etalon sequences are flashed into a parallel associative memory unit
//! ([`pamu::PamuMatrix`]); input situations are streamed through the
//! coincidence-detector automaton one symbol per step; the accepted lanes are
//! classified ([`decision`]) and mapped to control words. Numeric inputs go
//! through the linguistic converter ([`fuzzifier`]) first. [`costmodel`]
//! evaluates the closed-form time and memory costs of rigid and flexible
//! processor structures, and [`oracle`] holds the independent reference
//! matchers used to cross-check the automaton.

pub mod config;
pub mod costmodel;
pub mod decision;
mod error;
pub mod fuzzifier;
pub mod lanes;
pub mod oracle;
pub mod pamu;
pub mod symbol;
pub mod trace;

pub use config::{
    parse_config, serialize_config, ClassLabel, ControlWord, EtalonSet, ProcessorConfig,
};
pub use error::{Error, Result};
pub use lanes::LaneSet;
pub use pamu::{AutomatonState, MatchReport, PamuMatrix, StepOutcome};
pub use symbol::{decode, Alphabet, DecoderLine, Symbol};
