//! Resolver link codec: `https://<host>/<lat>/<lon>[/<timestamp>]`.

use std::fmt;

use crate::decimal::fixed;
use crate::timestamp::parse_timestamp;
use crate::{Error, GeoCoordinate, PingTimestamp, Result, Scalar};

/// Reference resolver host.
pub const DEFAULT_HOST: &str = "pingmark.me";

/// Fraction digits emitted for each coordinate (about 1.1 m).
pub const COORDINATE_PLACES: usize = 5;
/// Most fraction digits accepted when parsing a coordinate.
pub const MAX_PARSE_PLACES: usize = 7;

/// Decoded resolver link.
#[derive(Debug, Clone, PartialEq)]
pub struct PingmarkLink<T = f64> {
    pub coordinate: GeoCoordinate<T>,
    pub timestamp: Option<PingTimestamp>,
    base_host: String,
}

impl<T: Scalar> PingmarkLink<T> {
    /// Link on the reference host.
    pub fn new(coordinate: GeoCoordinate<T>, timestamp: Option<PingTimestamp>) -> Self {
        Self {
            coordinate,
            timestamp,
            base_host: DEFAULT_HOST.to_owned(),
        }
    }

    pub fn with_host(
        coordinate: GeoCoordinate<T>,
        timestamp: Option<PingTimestamp>,
        base_host: &str,
    ) -> Result<Self> {
        validate_host(base_host)?;
        Ok(Self {
            coordinate,
            timestamp,
            base_host: base_host.to_owned(),
        })
    }

    pub fn base_host(&self) -> &str {
        &self.base_host
    }
}

impl<T: Scalar> fmt::Display for PingmarkLink<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "https://{}/{}/{}",
            self.base_host,
            fixed(self.coordinate.latitude(), COORDINATE_PLACES),
            fixed(self.coordinate.longitude(), COORDINATE_PLACES)
        )?;
        if let Some(ts) = &self.timestamp {
            write!(f, "/{ts}")?;
        }
        Ok(())
    }
}

/// Renders the canonical link. Coordinates get exactly five fraction digits,
/// rounded half away from zero.
pub fn format_link<T: Scalar>(link: &PingmarkLink<T>) -> String {
    link.to_string()
}

/// Hostnames: letters, digits, `-` and `.`, with an optional `:port`.
pub fn validate_host(host: &str) -> Result<()> {
    let (name, port) = match host.rsplit_once(':') {
        Some((name, port)) => (name, Some(port)),
        None => (host, None),
    };
    let name_ok = !name.is_empty()
        && !name.starts_with(['.', '-'])
        && !name.ends_with('-')
        && !name.contains("..")
        && name
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'-' || b == b'.');
    let port_ok =
        port.is_none_or(|p| !p.is_empty() && p.len() <= 5 && p.bytes().all(|b| b.is_ascii_digit()));
    if name_ok && port_ok {
        Ok(())
    } else {
        Err(Error::InvalidHost(host.to_owned()))
    }
}

/// Parses an absolute `https://` link.
pub fn parse_link<T: Scalar>(url: &str) -> Result<PingmarkLink<T>> {
    let Some(rest) = url.strip_prefix("https://") else {
        return Err(match url.split_once("://") {
            Some((scheme, _)) => Error::MalformedLink(format!("unsupported scheme {scheme:?}")),
            None => Error::MalformedLink("expected an https:// link".to_owned()),
        });
    };
    parse_authority_and_path(rest)
}

/// Like [`parse_link`], but also takes scheme-relative (`//host/...`) and
/// path-only (`/lat/lon`) input, the latter resolved against `base_host`.
pub fn parse_link_with_base<T: Scalar>(input: &str, base_host: &str) -> Result<PingmarkLink<T>> {
    if input.starts_with("https://") {
        parse_link(input)
    } else if let Some(rest) = input.strip_prefix("//") {
        parse_authority_and_path(rest)
    } else if input.starts_with('/') {
        validate_host(base_host)?;
        let (coordinate, timestamp) = parse_path(input)?;
        Ok(PingmarkLink {
            coordinate,
            timestamp,
            base_host: base_host.to_owned(),
        })
    } else {
        parse_link(input)
    }
}

fn parse_authority_and_path<T: Scalar>(rest: &str) -> Result<PingmarkLink<T>> {
    let (host, path) = rest.split_at(rest.find('/').unwrap_or(rest.len()));
    validate_host(host).map_err(|_| Error::MalformedLink(format!("bad host {host:?}")))?;
    let (coordinate, timestamp) = parse_path(path)?;
    Ok(PingmarkLink {
        coordinate,
        timestamp,
        base_host: host.to_owned(),
    })
}

/// Decodes the path component `/<lat>/<lon>[/<timestamp>]`.
///
/// One trailing slash is tolerated. Errors are checked in order: grammar
/// ([`Error::MalformedLink`]), then coordinate ranges ([`Error::OutOfRange`]),
/// then the timestamp ([`Error::BadTimestamp`]).
pub fn parse_path<T: Scalar>(path: &str) -> Result<(GeoCoordinate<T>, Option<PingTimestamp>)> {
    let Some(body) = path.strip_prefix('/') else {
        return Err(Error::MalformedLink("path must start with '/'".to_owned()));
    };
    if body.contains(['?', '#']) {
        return Err(Error::MalformedLink(
            "query or fragment not allowed".to_owned(),
        ));
    }
    let body = body.strip_suffix('/').unwrap_or(body);
    let segments: Vec<&str> = body.split('/').collect();
    if !(2..=3).contains(&segments.len()) {
        return Err(Error::MalformedLink(format!(
            "expected 2 or 3 path segments, found {}",
            segments.len()
        )));
    }

    let latitude: T = parse_coordinate(segments[0])?;
    let longitude: T = parse_coordinate(segments[1])?;
    if let Some(ts) = segments.get(2) {
        if ts.is_empty() {
            return Err(Error::MalformedLink("empty timestamp segment".to_owned()));
        }
    }
    if !GeoCoordinate::latitude_in_range(latitude) {
        return Err(Error::OutOfRange(format!("latitude {}", segments[0])));
    }
    if !GeoCoordinate::longitude_in_range(longitude) {
        return Err(Error::OutOfRange(format!("longitude {}", segments[1])));
    }
    let coordinate =
        GeoCoordinate::new(latitude, longitude).map_err(|e| Error::OutOfRange(e.to_string()))?;
    let timestamp = segments.get(2).map(|s| parse_timestamp(s)).transpose()?;
    Ok((coordinate, timestamp))
}

/// `-?\d{1,3}(\.\d{1,7})?`
fn parse_coordinate<T: Scalar>(segment: &str) -> Result<T> {
    let malformed = || Error::MalformedLink(format!("not a decimal coordinate: {segment:?}"));
    let unsigned = segment.strip_prefix('-').unwrap_or(segment);
    let (int, frac) = match unsigned.split_once('.') {
        Some((int, frac)) => (int, Some(frac)),
        None => (unsigned, None),
    };
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if int.is_empty() || int.len() > 3 || !all_digits(int) {
        return Err(malformed());
    }
    if let Some(frac) = frac {
        if frac.is_empty() || frac.len() > MAX_PARSE_PLACES || !all_digits(frac) {
            return Err(malformed());
        }
    }
    T::parse_decimal(segment).ok_or_else(malformed)
}
