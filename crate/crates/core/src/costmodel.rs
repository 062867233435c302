//! Closed-form time and memory costs of the flexible (pipelined) and rigid
//! (associative-memory) processor structures.
//!
//! Everything here is integer arithmetic. Times are in units of the control
//! signal duration `tau`; memory is in bits.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Per-stage times of the two structures. Carried for reporting only; the
/// closed forms do not use them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentTimes {
    pub t_c: f64,
    pub t_l: f64,
    pub t_n_c: f64,
    pub t_n_min: f64,
    pub t_n_max: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CostParams {
    pub tau: u64,
    pub gamma: u64,
    pub n_inputs: u64,
    /// I_1..I_N, the universe sizes. Their count is the variable count N.
    pub universe_powers: Vec<u64>,
    /// J_1..J_N, the number of fuzzy terms per variable.
    pub fuzzy_powers: Vec<u64>,
    pub rules: u64,
    pub classes: u64,
    /// Count the decision-field term `L * prod(I) * K` once (true) instead of
    /// once per variable inside the sum (false).
    pub decision_field_global: bool,
    pub component_times: Option<ComponentTimes>,
}

impl CostParams {
    pub fn big_n(&self) -> usize {
        self.universe_powers.len()
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("tau", self.tau),
            ("gamma", self.gamma),
            ("n_inputs", self.n_inputs),
            ("L", self.rules),
            ("K", self.classes),
        ];
        for (field, v) in positive {
            if v == 0 {
                return Err(Error::validation(field, "must be at least 1"));
            }
        }
        if self.universe_powers.is_empty() {
            return Err(Error::validation("N", "must be at least 1"));
        }
        if self.universe_powers.len() != self.fuzzy_powers.len() {
            return Err(Error::validation(
                "J",
                format!(
                    "{} entries for {} variables",
                    self.fuzzy_powers.len(),
                    self.universe_powers.len()
                ),
            ));
        }
        if self.universe_powers.contains(&0) {
            return Err(Error::validation("I", "entries must be at least 1"));
        }
        if self.fuzzy_powers.contains(&0) {
            return Err(Error::validation("J", "entries must be at least 1"));
        }
        Ok(())
    }

    fn universe_product(&self) -> u128 {
        self.universe_powers.iter().map(|&i| i as u128).product()
    }

    fn decision_field(&self) -> u128 {
        self.rules as u128 * self.universe_product() * self.classes as u128
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CostReport {
    pub t_flexible: u128,
    pub t_rigid: u128,
    pub v_flexible: u128,
    pub v_rigid: u128,
    pub delta_time: i128,
    pub delta_memory: i128,
    /// Smallest rule count L >= 1 at which the flexible structure needs more
    /// memory than the rigid one, other parameters held fixed.
    pub crossover_rules: u128,
}

/// `tau * (6 + n*gamma + 2*gamma)`
pub fn time_flexible(p: &CostParams) -> u128 {
    let (tau, g, n) = (p.tau as u128, p.gamma as u128, p.n_inputs as u128);
    tau * (6 + n * g + 2 * g)
}

/// `tau * (6 + 3*gamma)`
pub fn time_rigid(p: &CostParams) -> u128 {
    let (tau, g) = (p.tau as u128, p.gamma as u128);
    tau * (6 + 3 * g)
}

pub fn memory_flexible(p: &CostParams) -> u128 {
    let g = p.gamma as u128;
    let field = p.decision_field();
    let per_variable: u128 = p
        .universe_powers
        .iter()
        .zip(&p.fuzzy_powers)
        .map(|(&i, &j)| {
            let (i, j) = (i as u128, j as u128);
            let local = g + i + i * j * g;
            if p.decision_field_global {
                local
            } else {
                local + field
            }
        })
        .sum();
    let global = if p.decision_field_global { field } else { 0 };
    per_variable + global + p.classes as u128 * g
}

pub fn memory_rigid(p: &CostParams) -> u128 {
    let g = p.gamma as u128;
    let big_n = p.big_n() as u128;
    let per_variable: u128 = p
        .universe_powers
        .iter()
        .zip(&p.fuzzy_powers)
        .map(|(&i, &j)| {
            let (i, j) = (i as u128, j as u128);
            g * i + i + 2 * i * j * g + 2 * big_n * j * g
        })
        .sum();
    per_variable + p.classes as u128 * g
}

fn crossover_rules(p: &CostParams) -> u128 {
    // v_flexible is affine in L; everything else is fixed.
    let at_zero = CostParams {
        rules: 0,
        ..p.clone()
    };
    let base = memory_flexible(&at_zero) as i128 - memory_rigid(p) as i128;
    let copies = if p.decision_field_global {
        1
    } else {
        p.big_n() as i128
    };
    let slope = copies * p.universe_product() as i128 * p.classes as i128;
    if base + slope > 0 {
        1
    } else {
        ((-base) / slope + 1) as u128
    }
}

pub fn compare(p: &CostParams) -> CostReport {
    let t_flexible = time_flexible(p);
    let t_rigid = time_rigid(p);
    let v_flexible = memory_flexible(p);
    let v_rigid = memory_rigid(p);
    let delta_time = t_flexible as i128 - t_rigid as i128;
    debug_assert_eq!(
        delta_time,
        p.tau as i128 * p.gamma as i128 * (p.n_inputs as i128 - 1)
    );
    CostReport {
        t_flexible,
        t_rigid,
        v_flexible,
        v_rigid,
        delta_time,
        delta_memory: v_flexible as i128 - v_rigid as i128,
        crossover_rules: crossover_rules(p),
    }
}

impl CostReport {
    /// Aligned two-column table.
    pub fn render(&self, params: &CostParams) -> String {
        let mut rows: Vec<(String, String)> = vec![
            ("T_flexible".into(), self.t_flexible.to_string()),
            ("T_rigid".into(), self.t_rigid.to_string()),
            ("V_flexible".into(), self.v_flexible.to_string()),
            ("V_rigid".into(), self.v_rigid.to_string()),
            ("delta_time".into(), self.delta_time.to_string()),
            ("delta_memory".into(), self.delta_memory.to_string()),
            ("L*".into(), self.crossover_rules.to_string()),
        ];
        if let Some(c) = &params.component_times {
            rows.extend([
                ("t_c".into(), c.t_c.to_string()),
                ("t_l".into(), c.t_l.to_string()),
                ("t_n_c".into(), c.t_n_c.to_string()),
                ("t_n_min".into(), c.t_n_min.to_string()),
                ("t_n_max".into(), c.t_n_max.to_string()),
            ]);
        }
        let key_w = rows
            .iter()
            .map(|r| r.0.len())
            .max()
            .unwrap_or(0)
            .max("quantity".len());
        let val_w = rows
            .iter()
            .map(|r| r.1.len())
            .max()
            .unwrap_or(0)
            .max("value".len());
        let mut out = format!("{:<key_w$}  {:>val_w$}\n", "quantity", "value");
        for (k, v) in rows {
            out.push_str(&format!("{k:<key_w$}  {v:>val_w$}\n"));
        }
        out
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamsDoc {
    tau: i64,
    gamma: i64,
    n_inputs: i64,
    #[serde(rename = "N")]
    big_n: i64,
    #[serde(rename = "I")]
    universe_powers: Vec<i64>,
    #[serde(rename = "J")]
    fuzzy_powers: Vec<i64>,
    #[serde(rename = "L")]
    rules: i64,
    #[serde(rename = "K")]
    classes: i64,
    #[serde(default = "default_global")]
    decision_field_global: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    component_times: Option<ComponentTimes>,
}

fn default_global() -> bool {
    true
}

fn non_negative(field: &str, v: i64) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::validation(field, format!("{v} is negative")))
}

/// Parses and validates a params document.
pub fn parse_params(text: &str) -> Result<CostParams> {
    let doc: ParamsDoc = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    let big_n = non_negative("N", doc.big_n)?;
    if doc.universe_powers.len() as u64 != big_n {
        return Err(Error::validation(
            "I",
            format!("{} entries, N = {big_n}", doc.universe_powers.len()),
        ));
    }
    let params = CostParams {
        tau: non_negative("tau", doc.tau)?,
        gamma: non_negative("gamma", doc.gamma)?,
        n_inputs: non_negative("n_inputs", doc.n_inputs)?,
        universe_powers: doc
            .universe_powers
            .iter()
            .map(|&v| non_negative("I", v))
            .collect::<Result<_>>()?,
        fuzzy_powers: doc
            .fuzzy_powers
            .iter()
            .map(|&v| non_negative("J", v))
            .collect::<Result<_>>()?,
        rules: non_negative("L", doc.rules)?,
        classes: non_negative("K", doc.classes)?,
        decision_field_global: doc.decision_field_global,
        component_times: doc.component_times,
    };
    params.validate()?;
    Ok(params)
}
