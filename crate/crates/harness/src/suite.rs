//! Running the registered properties and assembling the report.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::gen::Gen;
use crate::outcome::Failure;
use crate::registry::{self, Body, Property};
use crate::rng::RngState;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("{0} must be at least 1")]
    NotPositive(&'static str),
    #[error("unknown property id {0:?}")]
    UnknownProperty(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_dim: usize,
    pub bound: u64,
    /// Restrict the run to these ids; `None` runs every default property.
    pub only: Option<Vec<String>>,
    /// Also run the deliberately false identities.
    pub negative_controls: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 1, trials: 25, max_dim: 4, bound: 9, only: None, negative_controls: false }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.trials == 0 {
            return Err(ConfigError::NotPositive("trials"));
        }
        if self.max_dim == 0 {
            return Err(ConfigError::NotPositive("max-dim"));
        }
        if self.bound == 0 {
            return Err(ConfigError::NotPositive("bound"));
        }
        if let Some(ids) = &self.only {
            if let Some(bad) = ids.iter().find(|id| registry::find(id).is_none()) {
                return Err(ConfigError::UnknownProperty(bad.clone()));
            }
        }
        Ok(())
    }

    /// Properties selected by this config, with their substream indices.
    fn selection(&self) -> Vec<(usize, &'static Property)> {
        let defaults = registry::GROUPS.iter().map(|g| g.len()).sum::<usize>();
        registry::all()
            .into_iter()
            .enumerate()
            .filter(|(index, p)| match &self.only {
                Some(ids) => ids.iter().any(|id| id == p.id),
                None => *index < defaults || self.negative_controls,
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    /// 0-based trial index.
    pub trial: usize,
    pub reason: String,
    pub inputs: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyRecord {
    pub id: &'static str,
    pub items: &'static [u8],
    pub title: &'static str,
    pub status: Status,
    pub trials: usize,
    pub passes: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "BTreeSet::is_empty")]
    pub notes: BTreeSet<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub trials: usize,
    pub max_dim: usize,
    pub bound: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub only: Option<Vec<String>>,
    pub negative_controls: bool,
    pub checks_registered: usize,
    pub skips: usize,
    pub failed: usize,
    pub overall_pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub properties: Vec<PropertyRecord>,
}

impl SuiteReport {
    /// The report with wall-clock fields removed; equal configs give equal
    /// values here.
    pub fn without_timing(&self) -> SuiteReport {
        SuiteReport { elapsed_ms: None, ..self.clone() }
    }

    pub fn record(&self, id: &str) -> Option<&PropertyRecord> {
        self.properties.iter().find(|r| r.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn panic_message(payload: Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = payload.downcast_ref::<&str>() {
        (*s).to_string()
    } else if let Some(s) = payload.downcast_ref::<String>() {
        s.clone()
    } else {
        "non-string panic payload".to_string()
    }
}

fn run_property(cfg: &SuiteConfig, index: usize, p: &'static Property) -> PropertyRecord {
    let mut record = PropertyRecord {
        id: p.id,
        items: p.items,
        title: p.title,
        status: Status::Pass,
        trials: 0,
        passes: 0,
        failures: 0,
        skip_reason: None,
        counterexample: None,
        notes: BTreeSet::new(),
    };
    let check = match p.body {
        Body::Skip(reason) => {
            record.status = Status::Skip;
            record.skip_reason = Some(reason);
            return record;
        }
        Body::Check(f) => f,
    };
    let mut g = Gen::new(RngState::substream(cfg.seed, index), cfg.max_dim, cfg.bound);
    for trial in 0..cfg.trials {
        let outcome = panic::catch_unwind(AssertUnwindSafe(|| check(&mut g)))
            .unwrap_or_else(|payload| Err(Failure::new(format!("panic: {}", panic_message(payload)), Value::Null)));
        record.trials += 1;
        match outcome {
            Ok(()) => record.passes += 1,
            Err(failure) => {
                record.failures += 1;
                record.counterexample.get_or_insert(Counterexample { trial, reason: failure.reason, inputs: failure.inputs });
            }
        }
    }
    record.notes = g.take_notes();
    if record.failures > 0 {
        record.status = Status::Fail;
    }
    record
}

/// Runs every selected property, concurrently; each owns the substream of
/// its registry position, so the result does not depend on scheduling.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport, ConfigError> {
    cfg.validate()?;
    let start = Instant::now();
    let properties: Vec<PropertyRecord> =
        cfg.selection().into_par_iter().map(|(index, p)| run_property(cfg, index, p)).collect();
    let count = |s: Status| properties.iter().filter(|r| r.status == s).count();
    let (skips, failed) = (count(Status::Skip), count(Status::Fail));
    Ok(SuiteReport {
        seed: cfg.seed,
        trials: cfg.trials,
        max_dim: cfg.max_dim,
        bound: cfg.bound,
        only: cfg.only.clone(),
        negative_controls: cfg.negative_controls,
        checks_registered: properties.len() - skips,
        skips,
        failed,
        overall_pass: failed == 0,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
        properties,
    })
}
