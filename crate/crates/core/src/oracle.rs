//! Reference matchers kept apart from the matrix/bitvector machinery in
//! [`crate::pamu`], so agreement between the two carries weight.

use std::collections::BTreeSet;

use crate::config::EtalonSet;
use crate::error::{Error, Result};
use crate::symbol::Symbol;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// 0-based lanes.
    pub accepted: BTreeSet<usize>,
    pub consumed_subsequence: Vec<Symbol>,
}

/// Survivor-set interpreter of the coincidence rules.
///
/// A shared cursor points into every etalon. Each input symbol is offered to
/// the surviving, unfinished lanes; if any of them expects it, they become
/// the new survivors and the cursor moves on, otherwise the symbol is
/// dropped.
pub fn naive_match(
    input: &[Symbol],
    etalons: &[EtalonSet],
    correction: bool,
) -> Result<OracleResult> {
    if etalons.is_empty() {
        return Err(Error::EmptyStore);
    }
    let longest = etalons.iter().map(|e| e.symbols.len()).max().unwrap_or(0);
    if !correction {
        if let Some(i) = etalons.iter().position(|e| e.symbols.len() != longest) {
            return Err(Error::UnequalLengthsWithoutCorrection {
                lane: i + 1,
                expected: longest,
                found: etalons[i].symbols.len(),
            });
        }
    }

    let mut survivors: BTreeSet<usize> = (0..etalons.len()).collect();
    let mut finished: BTreeSet<usize> = BTreeSet::new();
    let mut cursor = 0usize;
    let mut consumed = Vec::new();

    for sym in input {
        let matching: BTreeSet<usize> = survivors
            .iter()
            .copied()
            .filter(|&i| etalons[i].symbols.get(cursor) == Some(sym))
            .collect();
        if matching.is_empty() {
            continue;
        }
        cursor += 1;
        consumed.push(sym.clone());
        for &i in &matching {
            if etalons[i].symbols.len() == cursor {
                finished.insert(i);
            }
        }
        survivors = matching;
    }

    let accepted = if correction {
        finished
    } else if cursor == longest {
        survivors
    } else {
        BTreeSet::new()
    };
    Ok(OracleResult {
        accepted,
        consumed_subsequence: consumed,
    })
}

/// Lanes whose etalon equals the input verbatim.
pub fn exact_equality_match(input: &[Symbol], etalons: &[EtalonSet]) -> BTreeSet<usize> {
    etalons
        .iter()
        .enumerate()
        .filter(|(_, e)| e.symbols == input)
        .map(|(i, _)| i)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ClassLabel;
    use crate::symbol::parse_symbols;

    fn etalon(name: &str, text: &str) -> EtalonSet {
        EtalonSet {
            name: name.into(),
            class_label: ClassLabel {
                name: "w1".into(),
                id: 1,
            },
            symbols: parse_symbols(text),
        }
    }

    fn reference() -> Vec<EtalonSet> {
        vec![
            etalon("E1", "a b c d e"),
            etalon("E2", "e a b"),
            etalon("E3", "b a d e"),
        ]
    }

    fn set(l: &[usize]) -> BTreeSet<usize> {
        l.iter().copied().collect()
    }

    #[test]
    fn naive_match_examples() {
        let store = reference();
        let r = naive_match(&parse_symbols("e a b"), &store, true).unwrap();
        assert_eq!(r.accepted, set(&[1]));
        assert_eq!(r.consumed_subsequence, parse_symbols("e a b"));
        let r = naive_match(&parse_symbols("a b c d e"), &store, true).unwrap();
        assert_eq!(r.accepted, set(&[0]));
        let r = naive_match(&parse_symbols("d d d"), &store, true).unwrap();
        assert!(r.accepted.is_empty());
        assert!(r.consumed_subsequence.is_empty());
    }

    #[test]
    fn naive_match_rejects_ragged_store_without_correction() {
        assert!(matches!(
            naive_match(&[], &reference(), false),
            Err(Error::UnequalLengthsWithoutCorrection { .. })
        ));
        assert_eq!(naive_match(&[], &[], true), Err(Error::EmptyStore));
    }

    #[test]
    fn exact_equality_examples() {
        let store = reference();
        assert_eq!(
            exact_equality_match(&parse_symbols("e a b"), &store),
            set(&[1])
        );
        assert!(exact_equality_match(&parse_symbols("e a"), &store).is_empty());
        let dup = vec![etalon("E2", "e a b"), etalon("E2b", "e a b")];
        assert_eq!(
            exact_equality_match(&parse_symbols("e a b"), &dup),
            set(&[0, 1])
        );
    }
}
