use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};
use fuzzy_pamu::costmodel::{compare, parse_params};
use fuzzy_pamu::decision::{
    classify_full_coincidence, classify_max_resemblance, classify_min_difference, Decision, Mode,
    Verdict,
};
use fuzzy_pamu::fuzzifier::fuzzify;
use fuzzy_pamu::pamu::flash;
use fuzzy_pamu::symbol::parse_symbols;
use fuzzy_pamu::trace::render_trace;
use fuzzy_pamu::{parse_config, PamuMatrix, ProcessorConfig, Symbol};
use serde_json::json;

use crate::{check, EXIT_AMBIGUOUS, EXIT_NO_MATCH, EXIT_OK};

#[derive(Debug, Parser)]
#[command(
    name = "pamu",
    version,
    about = "Associative fuzzy control processor simulator"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Flash the etalon store and print the matrix dump.
    Flash {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Match one input situation and print the decision.
    #[command(group(ArgGroup::new("input").required(true).args(["symbols", "numeric", "input_file"])))]
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Whitespace-separated symbols.
        #[arg(long)]
        symbols: Option<String>,
        /// Whitespace-separated numbers, one per fuzzifier variable.
        #[arg(long)]
        numeric: Option<String>,
        /// File with one symbol per line.
        #[arg(long = "input")]
        input_file: Option<PathBuf>,
        #[arg(long, default_value = "full")]
        mode: Mode,
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Print the rigid/flexible cost comparison.
    Cost {
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check the automaton against the reference matcher on random inputs.
    Check {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        count: u64,
        #[arg(long)]
        seed: u64,
    },
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

pub(crate) fn load(path: &Path) -> Result<(ProcessorConfig, PamuMatrix), String> {
    let config = parse_config(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let matrix = flash(&config.etalons, &config.alphabet, config.correction_enabled)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    Ok((config, matrix))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), String> {
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())
}

pub(crate) fn execute(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::Flash { config, out: dest } => {
            let (_, matrix) = load(&config)?;
            let dump = matrix.dump();
            match dest {
                Some(p) => fs::write(&p, dump).map_err(|e| format!("{}: {e}", p.display()))?,
                None => emit(out, &dump)?,
            }
            Ok(EXIT_OK)
        }
        Command::Run {
            config,
            symbols,
            numeric,
            input_file,
            mode,
            trace,
            json,
        } => {
            let (config, matrix) = load(&config)?;
            let input = resolve_input(&config, symbols, numeric, input_file)?;
            let report = matrix.match_sequence(&input);
            if let Some(p) = &trace {
                fs::write(p, render_trace(&report.trace))
                    .map_err(|e| format!("{}: {e}", p.display()))?;
            }
            let classification = match mode {
                Mode::FullCoincidence => classify_full_coincidence(&report, &matrix),
                Mode::MaxResemblance => classify_max_resemblance(&input, &config.etalons),
                Mode::MinDifference => classify_min_difference(&input, &config.etalons),
            };
            let decision = Decision::resolve(classification, &config).map_err(|e| e.to_string())?;
            if json {
                emit(
                    out,
                    &(decision_json(&decision, &input, &report.accepted) + "\n"),
                )?;
            } else {
                emit(out, &format!("{decision}\n"))?;
            }
            Ok(match decision.verdict() {
                Verdict::Class(_) => EXIT_OK,
                Verdict::NoMatch => EXIT_NO_MATCH,
                Verdict::Ambiguous(_) => EXIT_AMBIGUOUS,
            })
        }
        Command::Cost { params, json } => {
            let text = read(&params)?;
            let p = parse_params(&text).map_err(|e| format!("{}: {e}", params.display()))?;
            let report = compare(&p);
            if json {
                let v = serde_json::to_value(&report).map_err(|e| e.to_string())?;
                emit(out, &format!("{v}\n"))?;
            } else {
                emit(out, &report.render(&p))?;
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            config,
            count,
            seed,
        } => {
            if count == 0 {
                return Err("--count must be at least 1".into());
            }
            let (config, matrix) = load(&config)?;
            check::run(&config, &matrix, count, seed, out)
        }
    }
}

fn resolve_input(
    config: &ProcessorConfig,
    symbols: Option<String>,
    numeric: Option<String>,
    input_file: Option<PathBuf>,
) -> Result<Vec<Symbol>, String> {
    if let Some(s) = symbols {
        return Ok(parse_symbols(&s));
    }
    if let Some(p) = input_file {
        return Ok(parse_symbols(&read(&p)?));
    }
    let text = numeric.unwrap_or_default();
    let variables = config
        .fuzzifier_spec
        .as_deref()
        .ok_or("numeric input needs a fuzzifier section in the configuration")?;
    let values = text
        .split_whitespace()
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| format!("'{t}' is not a number"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    fuzzify(variables, &values).map_err(|e| e.to_string())
}

fn decision_json(d: &Decision, input: &[Symbol], accepted: &fuzzy_pamu::LaneSet) -> String {
    let c = &d.classification;
    let (class, lanes) = match &c.verdict {
        Verdict::Class(k) => (json!(k.name), serde_json::Value::Null),
        Verdict::NoMatch => (json!("NONE"), serde_json::Value::Null),
        Verdict::Ambiguous(l) => (
            json!("AMBIGUOUS"),
            json!(l.iter().map(|i| i + 1).collect::<Vec<_>>()),
        ),
    };
    json!({
        "mode": c.mode.as_str(),
        "class": class,
        "word": d.control_word.as_ref().map(|w| w.to_string()),
        "lanes": lanes,
        "score": c.score,
        "lane": c.lane.map(|l| l + 1),
        "accepted": accepted.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "input": input.iter().map(Symbol::as_str).collect::<Vec<_>>(),
    })
    .to_string()
}
