//! Textual layer of the Pingmark spatial-mention protocol.
//!
//! A message may contain the two-character trigger `!@`, meaning "I am at".
//! A compliant client replaces every standalone trigger with a resolver link
//!
//! ```text
//! https://pingmark.me/<latitude>/<longitude>[/<timestamp>]
//! ```
//!
//! built from a coordinate the client obtained locally. This crate finds the
//! triggers ([`scan`]), performs the replacement ([`expand`]), and encodes and
//! decodes links ([`format_link`], [`parse_link`]) and their timestamps
//! ([`parse_timestamp`], [`format_timestamp`]).
//!
//! Coordinate-bearing types are generic over the floating point [`Scalar`]
//! (`f64` by default). The aliases below name the common instantiations.
//!
//! ```
//! use pps_core::{expand, Coordinate, DEFAULT_HOST};
//!
//! let here = Coordinate::new(43.0757, 25.6172).unwrap();
//! let out = expand("meet me here !@", &here, None, DEFAULT_HOST).unwrap();
//! assert_eq!(out.text, "meet me here https://pingmark.me/43.07570/25.61720");
//! ```

mod actions;
mod coordinate;
mod decimal;
mod error;
mod expand;
mod geo;
mod link;
mod scalar;
mod scan;
mod timestamp;

pub use actions::{build_action_links, ActionLinks, ResolveResponse};
pub use coordinate::GeoCoordinate;
pub use error::{Error, Result};
pub use expand::{expand, ExpansionResult};
pub use geo::to_geo_uri;
pub use link::{
    format_link, parse_link, parse_link_with_base, parse_path, validate_host, PingmarkLink,
    DEFAULT_HOST,
};
pub use scalar::Scalar;
pub use scan::{scan, TriggerSpan, ESCAPE, TRIGGER};
pub use timestamp::{format_timestamp, parse_timestamp, PingTimestamp};

/// Coordinate in double precision, the resolution used on the wire.
pub type Coordinate = GeoCoordinate<f64>;
/// Single precision coordinate, for memory-constrained callers.
pub type Coordinate32 = GeoCoordinate<f32>;
pub type Link = PingmarkLink<f64>;
pub type Link32 = PingmarkLink<f32>;
pub type Expansion = ExpansionResult<f64>;

/// Protocol version tag carried by conformance artifacts.
pub const PROTOCOL_VERSION: &str = "pps-0.1";
