//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use fuzzy_pamu::costmodel::{
    compare, memory_flexible, memory_rigid, time_flexible, time_rigid, CostParams,
};
use fuzzy_pamu::oracle::naive_match;
use fuzzy_pamu::pamu::{flash, indicator_match};
use fuzzy_pamu::symbol::parse_symbols;
use fuzzy_pamu::{Alphabet, ClassLabel, EtalonSet, LaneSet, Symbol};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const RANDOM_STORES: u64 = 100;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn etalon(name: &str, class: usize, text: &str) -> EtalonSet {
    EtalonSet {
        name: name.into(),
        class_label: ClassLabel {
            name: format!("w{class}"),
            id: class,
        },
        symbols: parse_symbols(text),
    }
}

fn reference_store() -> (Vec<EtalonSet>, Alphabet) {
    (
        vec![
            etalon("E1", 1, "a b c d e"),
            etalon("E2", 2, "e a b"),
            etalon("E3", 3, "b a d e"),
        ],
        Alphabet::from_tokens(["a", "b", "c", "d", "e"]).unwrap(),
    )
}

fn all_inputs(max_len: usize) -> Vec<Vec<Symbol>> {
    let tokens = parse_symbols("a b c");
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<Vec<Symbol>> = vec![Vec::new()];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|p| {
                tokens.iter().map(move |t| {
                    let mut s = p.clone();
                    s.push(t.clone());
                    s
                })
            })
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

fn random_store(seed: u64, equal_lengths: bool) -> Vec<EtalonSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tokens = parse_symbols("a b c");
    let lanes = rng.gen_range(1..=5);
    let common = rng.gen_range(1..=4);
    (0..lanes)
        .map(|i| {
            let len = if equal_lengths {
                common
            } else {
                rng.gen_range(1..=4)
            };
            let k = rng.gen_range(1..=3);
            EtalonSet {
                name: format!("E{}", i + 1),
                class_label: ClassLabel {
                    name: format!("w{k}"),
                    id: k,
                },
                symbols: (0..len)
                    .map(|_| tokens[rng.gen_range(0..3)].clone())
                    .collect(),
            }
        })
        .collect()
}

fn ac1_reference_store() -> Outcome {
    let start = Instant::now();
    let (store, alphabet) = reference_store();
    let m = flash(&store, &alphabet, true).map_err(|e| e.to_string())?;
    ensure(m.lane_count() == 3 && m.depth() == 5, || {
        format!("{} lanes, depth {}", m.lane_count(), m.depth())
    })?;
    ensure(m.end_markers() == [5, 3, 4], || {
        format!("end markers {:?}", m.end_markers())
    })?;
    let mut own = 0;
    for (lane, e) in store.iter().enumerate() {
        let r = m.match_sequence(&e.symbols);
        ensure(r.accepted == LaneSet::from_lanes(3, [lane]), || {
            format!("{} accepted by {}", e.name, r.accepted.list_1based())
        })?;
        own += 1;
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!(
        "3 lanes, depth 5, ends (5,3,4), {own}/3 self-accepted"
    ))
}

fn ac2_interference() -> Outcome {
    let start = Instant::now();
    let (store, alphabet) = reference_store();
    let m = flash(&store, &alphabet, true).map_err(|e| e.to_string())?;
    let r = m.match_sequence(&parse_symbols("e z a b"));
    ensure(r.accepted == LaneSet::from_lanes(3, [1]), || {
        format!("(e,z,a,b) accepted {}", r.accepted.list_1based())
    })?;
    let skips = r.trace.iter().filter(|s| !s.k1).count();
    ensure(skips == 1, || format!("{skips} K1=0 steps"))?;
    let r = m.match_sequence(&parse_symbols("d d d"));
    ensure(r.accepted.is_empty(), || {
        format!("(d,d,d) accepted {}", r.accepted.list_1based())
    })?;
    within(Duration::from_secs(1), start)?;
    Ok("(e,z,a,b) -> {E2} with one K1=0 step; (d,d,d) -> {}".into())
}

fn ac3_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let inputs = all_inputs(4);
    ensure(inputs.len() == 121, || format!("{} inputs", inputs.len()))?;
    let alphabet = Alphabet::from_tokens(["a", "b", "c"]).unwrap();
    let mut checked = 0usize;
    for correction in [true, false] {
        for seed in 0..RANDOM_STORES {
            let store = random_store(seed, !correction);
            let m = flash(&store, &alphabet, correction).map_err(|e| e.to_string())?;
            for input in &inputs {
                let got: BTreeSet<usize> = m.match_sequence(input).accepted.iter().collect();
                let want = naive_match(input, &store, correction)
                    .map_err(|e| e.to_string())?
                    .accepted;
                ensure(got == want, || {
                    format!(
                        "seed {seed} correction {correction} input {input:?}: {got:?} vs {want:?}"
                    )
                })?;
                checked += 1;
            }
        }
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!(
        "{checked}/{checked} agree (121 inputs x {RANDOM_STORES} stores x 2 settings)"
    ))
}

fn ac4_indicator_equivalence() -> Outcome {
    let start = Instant::now();
    let inputs = all_inputs(4);
    let alphabet = Alphabet::from_tokens(["a", "b", "c"]).unwrap();
    let mut checked = 0usize;
    for correction in [true, false] {
        for seed in 0..RANDOM_STORES {
            let store = random_store(seed, !correction);
            let m = flash(&store, &alphabet, correction).map_err(|e| e.to_string())?;
            for input in &inputs {
                let r = m.match_sequence(input);
                let consumed = r.consumed();
                for (lane, e) in store.iter().enumerate() {
                    let prefix = &consumed[..consumed.len().min(e.len())];
                    let ind = indicator_match(&e.symbols, prefix);
                    ensure(ind == r.accepted.contains(lane), || {
                        format!("seed {seed} lane {} input {input:?}", lane + 1)
                    })?;
                    checked += 1;
                }
            }
        }
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!("{checked}/{checked} lane verdicts agree"))
}

fn cost(tau: u64, gamma: u64, n: u64) -> CostParams {
    CostParams {
        tau,
        gamma,
        n_inputs: n,
        universe_powers: vec![10],
        fuzzy_powers: vec![5],
        rules: 20,
        classes: 4,
        decision_field_global: true,
        component_times: None,
    }
}

fn ac5_cost_identities() -> Outcome {
    let start = Instant::now();
    ensure(time_rigid(&cost(1, 8, 4)) == 30, || {
        "time_rigid != 30".into()
    })?;
    ensure(time_flexible(&cost(1, 8, 4)) == 54, || {
        "time_flexible != 54".into()
    })?;
    let mut points = 0;
    for tau in 1..=4u64 {
        for gamma in 1..=64u64 {
            for n in 1..=10u64 {
                let d = compare(&cost(tau, gamma, n)).delta_time;
                ensure(d == (tau * gamma) as i128 * (n as i128 - 1), || {
                    format!("tau={tau} gamma={gamma} n={n}: delta {d}")
                })?;
                points += 1;
            }
        }
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!(
        "T_rigid=30, T_flex=54, identity on {points} grid points"
    ))
}

fn ac6_memory_model() -> Outcome {
    let start = Instant::now();
    let p = cost(1, 8, 4);
    let (vf, vr) = (memory_flexible(&p), memory_rigid(&p));
    ensure(vf == 1250 && vr == 1002, || {
        format!("V_flex={vf} V_rigid={vr}")
    })?;
    let r = compare(&p);
    ensure(r.delta_memory == 248, || {
        format!("delta {}", r.delta_memory)
    })?;
    ensure(r.crossover_rules == 14, || {
        format!("L* = {}", r.crossover_rules)
    })?;
    let table = r.render(&p);
    ensure(
        table
            .lines()
            .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["L*", "14"]),
        || format!("report lacks L* row:\n{table}"),
    )?;
    within(Duration::from_secs(1), start)?;
    Ok("V_flex=1250, V_rigid=1002, delta=248, L*=14".into())
}

fn ac7_pipeline() -> Outcome {
    let start = Instant::now();
    let cfg = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs/pipeline.json");
    let run = |numeric: &str| {
        Command::new(env!("CARGO_BIN_EXE_pamu"))
            .args([
                "run",
                "--config",
                cfg.to_str().unwrap(),
                "--numeric",
                numeric,
            ])
            .output()
            .map_err(|e| e.to_string())
    };
    let o = run("90 10 80 20")?;
    let line = String::from_utf8_lossy(&o.stdout).trim().to_owned();
    ensure(o.status.code() == Some(0), || {
        format!("match exit {:?}: {line}", o.status.code())
    })?;
    ensure(line == "mode=full class=w1 word=10110011", || {
        format!("got '{line}'")
    })?;
    let o = run("10 10 10 10")?;
    ensure(o.status.code() == Some(2), || {
        format!("no-match exit {:?}", o.status.code())
    })?;
    let o = run("90 10 80 70")?;
    ensure(o.status.code() == Some(3), || {
        format!("ambiguous exit {:?}", o.status.code())
    })?;
    within(Duration::from_secs(1), start)?;
    Ok("control word 10110011 (exit 0), no match (exit 2), ambiguous (exit 3)".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("AC1 flashing example reproduction", ac1_reference_store),
        ("AC2 interference tolerance", ac2_interference),
        ("AC3 automaton/oracle equivalence", ac3_oracle_equivalence),
        (
            "AC4 automaton/indicator equivalence",
            ac4_indicator_equivalence,
        ),
        ("AC5 time cost identities", ac5_cost_identities),
        ("AC6 memory cost model", ac6_memory_model),
        ("AC7 full pipeline exit codes", ac7_pipeline),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
