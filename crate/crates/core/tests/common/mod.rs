#![allow(dead_code)]

use fuzzy_pamu::{Alphabet, ClassLabel, EtalonSet, Symbol};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn sym(s: &str) -> Symbol {
    Symbol::new(s).unwrap()
}

pub fn abc() -> Alphabet {
    Alphabet::from_tokens(["a", "b", "c"]).unwrap()
}

/// Every sequence over `tokens` of length 0..=max_len, shortest first.
pub fn all_inputs(tokens: &[&str], max_len: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &frontier {
            for t in tokens {
                let mut s: Vec<Symbol> = prefix.clone();
                s.push(sym(t));
                next.push(s);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Random store over {a,b,c}: 1..=5 lanes of length 1..=4, all lanes sharing
/// one length when `equal_lengths`. Classes are drawn from w1..w3.
pub fn random_store(seed: u64, equal_lengths: bool, distinct: bool) -> Vec<EtalonSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tokens = ["a", "b", "c"];
    let mut lanes = rng.gen_range(1..=5);
    let common: usize = rng.gen_range(1..=4);
    if distinct && equal_lengths {
        lanes = lanes.min(3usize.pow(common as u32));
    }
    let mut store: Vec<EtalonSet> = Vec::new();
    while store.len() < lanes {
        let len = if equal_lengths {
            common
        } else {
            rng.gen_range(1..=4)
        };
        let symbols: Vec<Symbol> = (0..len).map(|_| sym(tokens[rng.gen_range(0..3)])).collect();
        if distinct && store.iter().any(|e| e.symbols == symbols) {
            continue;
        }
        let k = rng.gen_range(1..=3);
        store.push(EtalonSet {
            name: format!("E{}", store.len() + 1),
            class_label: ClassLabel {
                name: format!("w{k}"),
                id: k,
            },
            symbols,
        });
    }
    store
}
