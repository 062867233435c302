//! Processor configuration: etalons, classes, control words, and the JSON
//! document they are loaded from.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuzzifier::{FuzzifierDoc, LinguisticVariable};
use crate::symbol::{Alphabet, Symbol};

/// A solution category. `id` is 1-based in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassLabel {
    pub name: String,
    pub id: usize,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// One reference situation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtalonSet {
    pub name: String,
    pub class_label: ClassLabel,
    pub symbols: Vec<Symbol>,
}

impl EtalonSet {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

/// Output word of the control-signal block, most significant bit first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ControlWord {
    bits: Vec<bool>,
}

impl ControlWord {
    pub fn parse(text: &str) -> Option<Self> {
        if text.is_empty() {
            return None;
        }
        text.chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(|bits| ControlWord { bits })
    }

    pub fn width(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }
}

impl fmt::Display for ControlWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProcessorConfig {
    pub alphabet: Alphabet,
    pub etalons: Vec<EtalonSet>,
    pub classes: Vec<ClassLabel>,
    pub control_table: BTreeMap<ClassLabel, ControlWord>,
    pub word_width: usize,
    pub correction_enabled: bool,
    pub fuzzifier_spec: Option<Vec<LinguisticVariable>>,
}

impl ProcessorConfig {
    pub fn class_by_name(&self, name: &str) -> Option<&ClassLabel> {
        self.classes.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigDoc {
    alphabet: Vec<String>,
    word_width: usize,
    #[serde(default = "default_correction")]
    correction: bool,
    classes: Vec<ClassDoc>,
    etalons: Vec<EtalonDoc>,
    control_table: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    fuzzifier: Option<FuzzifierDoc>,
}

fn default_correction() -> bool {
    true
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassDoc {
    name: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EtalonDoc {
    name: String,
    class: String,
    symbols: Vec<String>,
}

/// Parses and validates a configuration document.
pub fn parse_config(text: &str) -> Result<ProcessorConfig> {
    let doc: ConfigDoc = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    validate(doc)
}

fn validate(doc: ConfigDoc) -> Result<ProcessorConfig> {
    let symbols = doc
        .alphabet
        .into_iter()
        .enumerate()
        .map(|(i, t)| {
            Symbol::new(t).map_err(|e| Error::validation(format!("alphabet[{i}]"), e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    if symbols.is_empty() {
        return Err(Error::validation("alphabet", "must not be empty"));
    }
    let alphabet = Alphabet::new(symbols)?;

    if doc.word_width == 0 {
        return Err(Error::validation("word_width", "must be at least 1"));
    }

    let mut classes = Vec::with_capacity(doc.classes.len());
    for (i, c) in doc.classes.into_iter().enumerate() {
        if c.name.is_empty() {
            return Err(Error::validation(
                format!("classes[{i}].name"),
                "empty name",
            ));
        }
        if classes.iter().any(|k: &ClassLabel| k.name == c.name) {
            return Err(Error::validation(
                format!("classes.{}", c.name),
                "duplicate class name",
            ));
        }
        classes.push(ClassLabel {
            name: c.name,
            id: i + 1,
        });
    }

    if doc.etalons.is_empty() {
        return Err(Error::validation(
            "etalons",
            "at least one etalon is required",
        ));
    }
    let mut names = HashSet::new();
    let mut etalons = Vec::with_capacity(doc.etalons.len());
    for e in doc.etalons {
        let field = format!("etalons.{}", e.name);
        if !names.insert(e.name.clone()) {
            return Err(Error::validation(field, "duplicate etalon name"));
        }
        let class_label = classes
            .iter()
            .find(|c| c.name == e.class)
            .cloned()
            .ok_or_else(|| {
                Error::validation(
                    format!("{field}.class"),
                    format!("class '{}' is not declared", e.class),
                )
            })?;
        if e.symbols.is_empty() {
            return Err(Error::validation(
                format!("{field}.symbols"),
                "etalon is empty",
            ));
        }
        let mut seq = Vec::with_capacity(e.symbols.len());
        for t in e.symbols {
            let s = Symbol::new(t)
                .map_err(|err| Error::validation(format!("{field}.symbols"), err.to_string()))?;
            if !alphabet.contains(&s) {
                return Err(Error::validation(
                    format!("{field}.symbols"),
                    format!("symbol '{s}' is not in the alphabet"),
                ));
            }
            seq.push(s);
        }
        etalons.push(EtalonSet {
            name: e.name,
            class_label,
            symbols: seq,
        });
    }

    let mut control_table = BTreeMap::new();
    for (name, bits) in &doc.control_table {
        let field = format!("control_table.{name}");
        let class = classes
            .iter()
            .find(|c| &c.name == name)
            .ok_or_else(|| Error::validation(&field, "not a declared class"))?;
        let word = ControlWord::parse(bits)
            .ok_or_else(|| Error::validation(&field, format!("'{bits}' is not a bit string")))?;
        if word.width() != doc.word_width {
            return Err(Error::validation(
                &field,
                format!(
                    "width {} differs from word_width {}",
                    word.width(),
                    doc.word_width
                ),
            ));
        }
        control_table.insert(class.clone(), word);
    }
    for c in &classes {
        if !control_table.contains_key(c) {
            return Err(Error::validation(
                format!("control_table.{}", c.name),
                "missing control word",
            ));
        }
    }

    let fuzzifier_spec = match doc.fuzzifier {
        Some(f) => {
            let vars = f.into_variables()?;
            for v in &vars {
                for t in &v.terms {
                    if !alphabet.contains(&t.name) {
                        return Err(Error::validation(
                            format!("fuzzifier.{}.{}", v.name, t.name),
                            "term name is not in the alphabet",
                        ));
                    }
                }
            }
            Some(vars)
        }
        None => None,
    };

    Ok(ProcessorConfig {
        alphabet,
        etalons,
        classes,
        control_table,
        word_width: doc.word_width,
        correction_enabled: doc.correction,
        fuzzifier_spec,
    })
}

/// Renders a configuration back into its JSON document form.
pub fn serialize_config(config: &ProcessorConfig) -> String {
    let doc = ConfigDoc {
        alphabet: config
            .alphabet
            .symbols()
            .iter()
            .map(|s| s.as_str().to_owned())
            .collect(),
        word_width: config.word_width,
        correction: config.correction_enabled,
        classes: config
            .classes
            .iter()
            .map(|c| ClassDoc {
                name: c.name.clone(),
            })
            .collect(),
        etalons: config
            .etalons
            .iter()
            .map(|e| EtalonDoc {
                name: e.name.clone(),
                class: e.class_label.name.clone(),
                symbols: e.symbols.iter().map(|s| s.as_str().to_owned()).collect(),
            })
            .collect(),
        control_table: config
            .control_table
            .iter()
            .map(|(c, w)| (c.name.clone(), w.to_string()))
            .collect(),
        fuzzifier: config
            .fuzzifier_spec
            .as_deref()
            .map(FuzzifierDoc::from_variables),
    };
    serde_json::to_string_pretty(&doc).expect("config document is always serializable")
}
