//! Finite verification: each check recomputes its claim from enumeration and
//! reports pass or fail with the smallest counterexample found.

mod checks;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{domain, Result};

pub use checks::all_checks;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Serialized without `elapsed`, so identical runs give identical JSON.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: BTreeMap<String, usize>,
    pub status: Status,
    pub witness: Option<String>,
    pub details: Map<String, Value>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    N,
    D,
    Order,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::N => "n",
            Param::D => "d",
            Param::Order => "order",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CheckParams {
    pub n: usize,
    pub d: usize,
    pub order: usize,
}

impl CheckParams {
    pub fn new(n: usize, d: usize, order: usize) -> Self {
        Self { n, d, order }
    }

    fn get(&self, p: Param) -> usize {
        match p {
            Param::N => self.n,
            Param::D => self.d,
            Param::Order => self.order,
        }
    }
}

/// What a check found. A witness means failure.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    details: Map<String, Value>,
    witness: Option<String>,
}

impl Outcome {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    /// Keeps the first witness recorded.
    pub fn fail(&mut self, witness: impl Into<String>) -> &mut Self {
        if self.witness.is_none() {
            self.witness = Some(witness.into());
        }
        self
    }

    pub fn require(&mut self, ok: bool, witness: impl FnOnce() -> String) -> &mut Self {
        if !ok {
            self.fail(witness());
        }
        self
    }

    pub fn failed(&self) -> bool {
        self.witness.is_some()
    }
}

pub trait TheoremCheck: Send + Sync {
    fn name(&self) -> &'static str;
    fn params(&self) -> &'static [Param];
    /// Smallest admissible `d`; most checks need `d ≥ 1`.
    fn min_d(&self) -> usize {
        1
    }
    fn evaluate(&self, params: &CheckParams) -> Result<Outcome>;
}

fn validate(check: &dyn TheoremCheck, params: &CheckParams) -> Result<()> {
    for &p in check.params() {
        let value = params.get(p);
        let min = if p == Param::D { check.min_d() } else { 1 };
        if value < min {
            return Err(domain(format!(
                "{} needs {} >= {min}",
                check.name(),
                p.name()
            )));
        }
    }
    Ok(())
}

/// Run one check. Errors raised inside the check become failing reports.
pub fn run_check(check: &dyn TheoremCheck, params: &CheckParams) -> Result<VerificationReport> {
    validate(check, params)?;
    let start = Instant::now();
    let outcome = check.evaluate(params).unwrap_or_else(|e| {
        let mut o = Outcome::new();
        o.fail(e.to_string());
        o
    });
    let status = if outcome.failed() {
        Status::Fail
    } else {
        Status::Pass
    };
    Ok(VerificationReport {
        theorem: check.name().to_string(),
        params: check
            .params()
            .iter()
            .map(|&p| (p.name().to_string(), params.get(p)))
            .collect(),
        status,
        witness: outcome.witness,
        details: outcome.details,
        elapsed: start.elapsed(),
    })
}

/// Checks selectable by name.
pub struct CheckRegistry {
    entries: Vec<Box<dyn TheoremCheck>>,
}

impl CheckRegistry {
    pub fn empty() -> Self {
        Self {
            entries: Vec::new(),
        }
    }

    pub fn register(&mut self, check: Box<dyn TheoremCheck>) {
        self.entries.retain(|c| c.name() != check.name());
        self.entries.push(check);
    }

    pub fn get(&self, name: &str) -> Result<&dyn TheoremCheck> {
        self.entries
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
            .ok_or_else(|| {
                domain(format!(
                    "unknown theorem {name:?}; known: {}",
                    self.names().join(", ")
                ))
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|c| c.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn TheoremCheck> {
        self.entries.iter().map(|c| c.as_ref())
    }

    /// Every (check, params) point of the grid, in registration order and
    /// then ascending parameters.
    fn grid(
        &self,
        n_max: usize,
        d_max: usize,
        order: usize,
    ) -> Vec<(&dyn TheoremCheck, CheckParams)> {
        let mut points = Vec::new();
        for check in self.iter() {
            let uses = |p| check.params().contains(&p);
            let ns: Vec<usize> = if uses(Param::N) {
                (1..=n_max).collect()
            } else {
                vec![0]
            };
            let ds: Vec<usize> = if uses(Param::D) {
                (check.min_d()..=d_max).collect()
            } else {
                vec![0]
            };
            let order = if uses(Param::Order) { order } else { 0 };
            for &n in &ns {
                for &d in &ds {
                    points.push((check, CheckParams::new(n, d, order)));
                }
            }
        }
        points
    }

    /// Runs every registered check over `n ≤ n_max`, `d ≤ d_max`, at `order`.
    /// Points run on the current rayon pool; reports keep grid order.
    pub fn check_all(
        &self,
        n_max: usize,
        d_max: usize,
        order: usize,
    ) -> Result<Vec<VerificationReport>> {
        if n_max == 0 || d_max == 0 || order == 0 {
            return Err(domain("grid bounds must be at least 1"));
        }
        self.grid(n_max, d_max, order)
            .into_par_iter()
            .map(|(check, params)| run_check(check, &params))
            .collect()
    }
}

impl Default for CheckRegistry {
    fn default() -> Self {
        let mut registry = Self::empty();
        for check in all_checks() {
            registry.register(check);
        }
        registry
    }
}

/// [`CheckRegistry::check_all`] on the default registry.
pub fn check_all(n_max: usize, d_max: usize, order: usize) -> Result<Vec<VerificationReport>> {
    CheckRegistry::default().check_all(n_max, d_max, order)
}

/// Run the named check from the default registry.
pub fn check(name: &str, params: &CheckParams) -> Result<VerificationReport> {
    let registry = CheckRegistry::default();
    run_check(registry.get(name)?, params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_tracks_witness() {
        let small = check_all(5, 2, 10).unwrap();
        assert!(!small.is_empty());
        for r in &small {
            assert_eq!(r.passed(), r.witness.is_none(), "{}", r.theorem);
            assert!(r.passed(), "{} {:?}: {:?}", r.theorem, r.params, r.witness);
        }
    }

    #[test]
    fn trivial_grid_passes() {
        assert!(check_all(1, 1, 1).unwrap().iter().all(|r| r.passed()));
        assert!(check_all(0, 1, 1).is_err());
    }

    #[test]
    fn grid_is_deterministic() {
        let a = serde_json::to_string(&check_all(4, 2, 6).unwrap()).unwrap();
        let b = serde_json::to_string(&check_all(4, 2, 6).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(check("straub", &CheckParams::new(0, 1, 1)).is_err());
        assert!(check("fu-tang", &CheckParams::new(3, 0, 1)).is_err());
        assert!(check("positivity", &CheckParams::new(0, 0, 10))
            .unwrap()
            .passed());
        assert!(check("nope", &CheckParams::new(3, 1, 1)).is_err());
    }
}
