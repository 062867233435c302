//! Linguistic converter: numeric inputs to attribute symbols.
//!
//! Each input variable carries an ordered list of piecewise-linear fuzzy
//! terms. An input is replaced by the name of the term with the highest
//! membership degree at that point; ties go to the earliest term.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symbol::Symbol;

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyTerm {
    pub name: Symbol,
    points: Vec<(f64, f64)>,
}

impl FuzzyTerm {
    /// Breakpoints must be strictly increasing in x with degrees in [0, 1].
    pub fn new(name: Symbol, points: Vec<(f64, f64)>) -> Result<Self> {
        let field = || format!("term.{name}");
        if points.is_empty() {
            return Err(Error::validation(field(), "no breakpoints"));
        }
        for &(x, d) in &points {
            if !x.is_finite() || !d.is_finite() || !(0.0..=1.0).contains(&d) {
                return Err(Error::validation(
                    field(),
                    format!("breakpoint ({x}, {d}) out of range"),
                ));
            }
        }
        if points.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::validation(
                field(),
                "breakpoints must be strictly increasing",
            ));
        }
        Ok(FuzzyTerm { name, points })
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    /// Degree of membership at `x`: linear between breakpoints, held at the
    /// end value outside the span.
    pub fn membership(&self, x: f64) -> f64 {
        let pts = &self.points;
        let (x0, d0) = pts[0];
        if x <= x0 {
            return d0;
        }
        let (xn, dn) = pts[pts.len() - 1];
        if x >= xn {
            return dn;
        }
        // first breakpoint strictly right of x
        let hi = pts.partition_point(|&(px, _)| px <= x);
        let (xa, da) = pts[hi - 1];
        let (xb, db) = pts[hi];
        if x == xa {
            return da;
        }
        da + (db - da) * (x - xa) / (xb - xa)
    }
}

pub fn membership(term: &FuzzyTerm, x: f64) -> f64 {
    term.membership(x)
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinguisticVariable {
    pub name: String,
    pub lo: f64,
    pub hi: f64,
    /// Clamp out-of-universe inputs instead of rejecting them.
    pub clamp: bool,
    pub terms: Vec<FuzzyTerm>,
}

impl LinguisticVariable {
    pub fn new(
        name: impl Into<String>,
        lo: f64,
        hi: f64,
        clamp: bool,
        terms: Vec<FuzzyTerm>,
    ) -> Result<Self> {
        let name = name.into();
        let field = format!("fuzzifier.{name}");
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::validation(
                field,
                format!("universe [{lo}, {hi}] is empty"),
            ));
        }
        if terms.is_empty() {
            return Err(Error::validation(field, "at least one term is required"));
        }
        for t in &terms {
            if t.points.iter().any(|&(x, _)| x < lo || x > hi) {
                return Err(Error::validation(
                    format!("{field}.{}", t.name),
                    "breakpoint outside the universe",
                ));
            }
        }
        for (i, t) in terms.iter().enumerate() {
            if terms[..i].iter().any(|u| u.name == t.name) {
                return Err(Error::validation(
                    format!("{field}.{}", t.name),
                    "duplicate term name",
                ));
            }
        }
        // Between consecutive breakpoints every term is linear and
        // non-negative, so a gap in coverage always reaches a breakpoint.
        let mut probes: Vec<f64> = terms
            .iter()
            .flat_map(|t| t.points.iter().map(|p| p.0))
            .chain([lo, hi])
            .collect();
        probes.sort_by(f64::total_cmp);
        if let Some(x) = probes
            .into_iter()
            .find(|&x| terms.iter().all(|t| t.membership(x) <= 0.0))
        {
            return Err(Error::validation(field, format!("no term covers x = {x}")));
        }
        Ok(LinguisticVariable {
            name,
            lo,
            hi,
            clamp,
            terms,
        })
    }

    /// Index of the winning term at `x` (already inside the universe).
    fn argmax(&self, x: f64) -> usize {
        let mut best = 0;
        let mut best_degree = self.terms[0].membership(x);
        for (i, t) in self.terms.iter().enumerate().skip(1) {
            let d = t.membership(x);
            if d > best_degree {
                best = i;
                best_degree = d;
            }
        }
        best
    }

    pub fn symbolize(&self, x: f64) -> Result<&Symbol> {
        let inside = x >= self.lo && x <= self.hi;
        if !inside && (!self.clamp || x.is_nan()) {
            return Err(Error::UniverseViolation {
                variable: self.name.clone(),
                value: x,
                lo: self.lo,
                hi: self.hi,
            });
        }
        let x = x.clamp(self.lo, self.hi);
        Ok(&self.terms[self.argmax(x)].name)
    }
}

/// Turns one numeric reading per variable into the situation chain.
pub fn fuzzify(variables: &[LinguisticVariable], inputs: &[f64]) -> Result<Vec<Symbol>> {
    if variables.len() != inputs.len() {
        return Err(Error::ArityMismatch {
            expected: variables.len(),
            found: inputs.len(),
        });
    }
    variables
        .iter()
        .zip(inputs)
        .map(|(v, &x)| v.symbolize(x).cloned())
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct FuzzifierDoc {
    variables: Vec<VariableDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VariableDoc {
    name: String,
    universe: [f64; 2],
    #[serde(default = "default_clamp")]
    clamp: bool,
    terms: Vec<TermDoc>,
}

fn default_clamp() -> bool {
    true
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    name: String,
    points: Vec<[f64; 2]>,
}

impl FuzzifierDoc {
    pub(crate) fn into_variables(self) -> Result<Vec<LinguisticVariable>> {
        if self.variables.is_empty() {
            return Err(Error::validation("fuzzifier.variables", "no variables"));
        }
        self.variables
            .into_iter()
            .map(|v| {
                let terms = v
                    .terms
                    .into_iter()
                    .map(|t| {
                        let name = Symbol::new(t.name).map_err(|e| {
                            Error::validation(format!("fuzzifier.{}", v.name), e.to_string())
                        })?;
                        FuzzyTerm::new(name, t.points.into_iter().map(|[x, d]| (x, d)).collect())
                    })
                    .collect::<Result<Vec<_>>>()?;
                LinguisticVariable::new(v.name, v.universe[0], v.universe[1], v.clamp, terms)
            })
            .collect()
    }

    pub(crate) fn from_variables(vars: &[LinguisticVariable]) -> Self {
        FuzzifierDoc {
            variables: vars
                .iter()
                .map(|v| VariableDoc {
                    name: v.name.clone(),
                    universe: [v.lo, v.hi],
                    clamp: v.clamp,
                    terms: v
                        .terms
                        .iter()
                        .map(|t| TermDoc {
                            name: t.name.as_str().to_owned(),
                            points: t.points.iter().map(|&(x, d)| [x, d]).collect(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn term(name: &str, pts: &[(f64, f64)]) -> FuzzyTerm {
        FuzzyTerm::new(Symbol::new(name).unwrap(), pts.to_vec()).unwrap()
    }

    fn low_high(name: &str, clamp: bool) -> LinguisticVariable {
        LinguisticVariable::new(
            name,
            0.0,
            50.0,
            clamp,
            vec![
                term("low", &[(0.0, 1.0), (50.0, 0.0)]),
                term("high", &[(0.0, 0.0), (50.0, 1.0)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn membership_interpolates_and_clamps() {
        let t = term("low", &[(0.0, 1.0), (50.0, 0.0)]);
        assert_eq!(membership(&t, 0.0), 1.0);
        assert_eq!(membership(&t, 25.0), 0.5);
        assert_eq!(membership(&t, 80.0), 0.0);
        assert_eq!(membership(&t, -3.0), 1.0);
    }

    #[test]
    fn membership_hits_interior_breakpoints() {
        let tri = term("mid", &[(0.0, 0.0), (10.0, 1.0), (20.0, 0.0)]);
        assert_eq!(tri.membership(10.0), 1.0);
        assert_eq!(tri.membership(15.0), 0.5);
        assert_eq!(tri.membership(5.0), 0.5);
    }

    #[test]
    fn fuzzify_picks_max_membership() {
        let v = low_high("temp", true);
        // low(10) = 0.8, high(10) = 0.2
        let low = v.terms[0].membership(10.0);
        let high = v.terms[1].membership(10.0);
        assert!((low - 0.8).abs() < 1e-12 && (high - 0.2).abs() < 1e-12);
        assert_eq!(
            fuzzify(std::slice::from_ref(&v), &[10.0]).unwrap()[0].as_str(),
            "low"
        );
        // tie at 25 goes to the first term
        assert_eq!(fuzzify(&[v], &[25.0]).unwrap()[0].as_str(), "low");
    }

    #[test]
    fn fuzzify_concatenates_in_variable_order() {
        let vars = [low_high("x", true), low_high("y", true)];
        let chain = fuzzify(&vars, &[10.0, 40.0]).unwrap();
        let names: Vec<_> = chain.iter().map(Symbol::as_str).collect();
        assert_eq!(names, ["low", "high"]);
    }

    #[test]
    fn strict_mode_rejects_out_of_universe() {
        let v = low_high("temp", false);
        assert!(matches!(
            fuzzify(&[v], &[80.0]),
            Err(Error::UniverseViolation { .. })
        ));
    }

    #[test]
    fn arity_must_match() {
        let v = low_high("temp", true);
        assert!(matches!(
            fuzzify(&[v], &[1.0, 2.0]),
            Err(Error::ArityMismatch {
                expected: 1,
                found: 2
            })
        ));
    }

    #[test]
    fn rejects_invalid_terms() {
        let s = Symbol::new("t").unwrap();
        assert!(FuzzyTerm::new(s.clone(), vec![(1.0, 0.5), (1.0, 0.2)]).is_err());
        assert!(FuzzyTerm::new(s.clone(), vec![(0.0, 1.5)]).is_err());
        assert!(FuzzyTerm::new(s, vec![]).is_err());
    }

    #[test]
    fn rejects_coverage_gap() {
        let gap = LinguisticVariable::new(
            "v",
            0.0,
            10.0,
            true,
            vec![
                term("a", &[(0.0, 1.0), (4.0, 0.0)]),
                term("b", &[(6.0, 0.0), (10.0, 1.0)]),
            ],
        );
        assert!(gap.is_err());
    }

    #[test]
    fn rejects_breakpoint_outside_universe() {
        let v = LinguisticVariable::new(
            "v",
            0.0,
            10.0,
            true,
            vec![term("a", &[(0.0, 1.0), (20.0, 1.0)])],
        );
        assert!(v.is_err());
    }

    proptest! {
        #[test]
        fn clamping_is_transparent(x in -200.0f64..200.0) {
            let v = low_high("temp", true);
            let clamped = x.clamp(v.lo, v.hi);
            prop_assert_eq!(
                fuzzify(std::slice::from_ref(&v), &[x]).unwrap(),
                fuzzify(std::slice::from_ref(&v), &[clamped]).unwrap()
            );
        }

        #[test]
        fn argmax_survives_common_rescaling(x in 0.0f64..50.0, c in 0.01f64..1.0) {
            let v = LinguisticVariable::new(
                "v", 0.0, 50.0, true,
                vec![
                    term("low", &[(0.0, 1.0), (30.0, 0.0)]),
                    term("mid", &[(0.0, 0.0), (25.0, 1.0), (50.0, 0.0)]),
                    term("high", &[(20.0, 0.0), (50.0, 1.0)]),
                ],
            ).unwrap();
            let scaled_terms = v.terms.iter().map(|t| {
                FuzzyTerm::new(t.name.clone(), t.points().iter().map(|&(px, d)| (px, d * c)).collect()).unwrap()
            }).collect();
            let scaled = LinguisticVariable::new("v", 0.0, 50.0, true, scaled_terms).unwrap();
            prop_assert_eq!(v.symbolize(x).unwrap(), scaled.symbolize(x).unwrap());
        }

        #[test]
        fn output_is_one_term_per_variable(xs in proptest::collection::vec(-10.0f64..60.0, 1..6)) {
            let vars: Vec<_> = (0..xs.len()).map(|i| low_high(&format!("v{i}"), true)).collect();
            let chain = fuzzify(&vars, &xs).unwrap();
            prop_assert_eq!(chain.len(), vars.len());
            for (s, v) in chain.iter().zip(&vars) {
                prop_assert!(v.terms.iter().any(|t| &t.name == s));
            }
        }
    }
}
