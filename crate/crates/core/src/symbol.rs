use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An attribute token: a non-empty text atom without whitespace.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Symbol(String);

impl Symbol {
    pub fn new(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        if token.is_empty() {
            return Err(Error::validation("symbol", "empty token"));
        }
        if token.chars().any(char::is_whitespace) {
            return Err(Error::validation(
                "symbol",
                format!("token {token:?} contains whitespace"),
            ));
        }
        Ok(Symbol(token))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for Symbol {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        Symbol::new(value)
    }
}

impl From<Symbol> for String {
    fn from(s: Symbol) -> String {
        s.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Splits a whitespace-separated token string into symbols.
pub fn parse_symbols(text: &str) -> Vec<Symbol> {
    text.split_whitespace()
        .map(|t| Symbol(t.to_owned()))
        .collect()
}

/// 1-based index of an active decoder output.
pub type DecoderLine = usize;

/// The input vocabulary. Decoder lines are assigned in list order, starting at 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
    index: HashMap<Symbol, DecoderLine>,
}

impl Alphabet {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if index.insert(s.clone(), i + 1).is_some() {
                return Err(Error::validation(
                    "alphabet",
                    format!("duplicate symbol '{s}'"),
                ));
            }
        }
        Ok(Alphabet { symbols, index })
    }

    /// Convenience constructor for tests and demos.
    pub fn from_tokens<'a>(tokens: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let symbols = tokens
            .into_iter()
            .map(Symbol::new)
            .collect::<Result<Vec<_>>>()?;
        Alphabet::new(symbols)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn contains(&self, symbol: &Symbol) -> bool {
        self.index.contains_key(symbol)
    }

    pub fn line(&self, symbol: &Symbol) -> Option<DecoderLine> {
        self.index.get(symbol).copied()
    }
}

/// Unary decoding of an input symbol. `None` means no decoder output is
/// activated, which the automaton treats as interference rather than a fault.
pub fn decode(symbol: &Symbol, alphabet: &Alphabet) -> Option<DecoderLine> {
    alphabet.line(symbol)
}
