//! Seeded automaton-vs-oracle agreement run.

use std::collections::BTreeSet;
use std::io::Write;

use fuzzy_pamu::oracle::naive_match;
use fuzzy_pamu::{PamuMatrix, ProcessorConfig, Symbol};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{EXIT_DISAGREE, EXIT_OK};

/// A token guaranteed to be outside the alphabet.
fn noise_token(config: &ProcessorConfig) -> Symbol {
    let mut token = String::from("~noise");
    loop {
        let s = Symbol::new(token.clone()).expect("no whitespace");
        if !config.alphabet.contains(&s) {
            return s;
        }
        token.push('~');
    }
}

fn disagreement(
    config: &ProcessorConfig,
    matrix: &PamuMatrix,
    input: &[Symbol],
) -> Option<(BTreeSet<usize>, BTreeSet<usize>)> {
    let automaton: BTreeSet<usize> = matrix.match_sequence(input).accepted.iter().collect();
    let oracle = naive_match(input, &config.etalons, config.correction_enabled)
        .map(|r| r.accepted)
        .unwrap_or_default();
    (automaton != oracle).then_some((automaton, oracle))
}

/// Greedy one-symbol deletion until no single deletion keeps the mismatch.
fn shrink(config: &ProcessorConfig, matrix: &PamuMatrix, mut input: Vec<Symbol>) -> Vec<Symbol> {
    'outer: loop {
        for i in 0..input.len() {
            let mut smaller = input.clone();
            smaller.remove(i);
            if disagreement(config, matrix, &smaller).is_some() {
                input = smaller;
                continue 'outer;
            }
        }
        return input;
    }
}

fn lanes(set: &BTreeSet<usize>) -> String {
    let v: Vec<String> = set.iter().map(|i| (i + 1).to_string()).collect();
    format!("[{}]", v.join(","))
}

pub(crate) fn run(
    config: &ProcessorConfig,
    matrix: &PamuMatrix,
    count: u64,
    seed: u64,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise = noise_token(config);
    let symbols = config.alphabet.symbols();
    let mut agree = 0u64;
    for _ in 0..count {
        let len = rng.gen_range(0..=matrix.depth() + 2);
        // alphabet symbols plus the noise token, uniformly
        let input: Vec<Symbol> = (0..len)
            .map(|_| match rng.gen_range(0..=symbols.len()) {
                i if i == symbols.len() => noise.clone(),
                i => symbols[i].clone(),
            })
            .collect();
        if disagreement(config, matrix, &input).is_some() {
            let minimal = shrink(config, matrix, input);
            let (a, o) = disagreement(config, matrix, &minimal).expect("shrink keeps the mismatch");
            let text: Vec<&str> = minimal.iter().map(Symbol::as_str).collect();
            writeln!(out, "agree={agree}/{count}").map_err(|e| e.to_string())?;
            writeln!(
                out,
                "counterexample=\"{}\" automaton={} oracle={}",
                text.join(" "),
                lanes(&a),
                lanes(&o)
            )
            .map_err(|e| e.to_string())?;
            return Ok(EXIT_DISAGREE);
        }
        agree += 1;
    }
    writeln!(out, "agree={agree}/{count}").map_err(|e| e.to_string())?;
    Ok(EXIT_OK)
}
