//! Reference client for Pingmark spatial mentions.
//!
//! The `pingmark` binary expands `!@` triggers in text, builds and inspects
//! resolver links, and emits or checks the conformance vectors. The
//! `pingmark-resolver` binary runs the HTTP resolver.

pub mod cli;
pub mod provider;

pub use provider::LocationProvider;
