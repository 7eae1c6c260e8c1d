//! Seeded property harness and command-line front end for `revpaste`.
//!
//! Every numbered identity is registered as a [`registry::Property`] that
//! draws exact rational inputs from its own xorshift64* substream; a suite run
//! records passes, failures and the first counterexample per property.

#[macro_use]
mod outcome;

pub mod cli;
pub mod codec;
pub mod gen;
pub mod props;
pub mod registry;
pub mod rng;
pub mod suite;

pub use outcome::{Failure, Outcome};
pub use suite::{run_suite, ConfigError, PropertyRecord, Status, SuiteConfig, SuiteReport};
