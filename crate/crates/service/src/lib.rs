//! Stateless HTTP resolver for Pingmark links.
//!
//! Answers `GET /<lat>/<lon>[/<timestamp>]` with either the map page or a
//! JSON description of the point, depending on the `Accept` header. Nothing
//! about a request outlives it: no storage, no cookies, and access logs carry
//! only method, status and latency.

mod config;
mod negotiate;
mod service;

pub use config::{ConfigError, ResolverArgs, ResolverConfig, MAX_CACHE_TTL_SECONDS};
pub use negotiate::{preferred, Representation};
pub use service::{router, serve, PLACEHOLDER_PAGE};

pub use pps_core::{build_action_links, ActionLinks, ResolveResponse};
