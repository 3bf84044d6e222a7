//! Shared test vectors pinning the Pingmark grammar across implementations.
//!
//! [`emit_vectors`] produces a deterministic JSON document; [`check_vectors`]
//! replays one against the current core and reports a verdict per case. The
//! browser resolver page consumes the same file.

use std::fmt;

use pps_core::{
    format_timestamp, parse_link_with_base, parse_timestamp, scan, Link, ResolveResponse,
    TriggerSpan, DEFAULT_HOST, PROTOCOL_VERSION,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

mod corpus;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorFile {
    pub scan_cases: Vec<ScanCase>,
    pub link_cases: Vec<LinkCase>,
    pub timestamp_cases: Vec<TimestampCase>,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanCase {
    pub input: String,
    pub spans: Vec<TriggerSpan>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkCase {
    pub input: String,
    pub expect: LinkExpect,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimestampCase {
    pub input: String,
    pub expect: TimestampExpect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorCode {
    Malformed,
    OutOfRange,
    BadTimestamp,
}

impl ErrorCode {
    pub fn of(err: &pps_core::Error) -> Option<Self> {
        match err {
            pps_core::Error::MalformedLink(_) | pps_core::Error::InvalidHost(_) => {
                Some(Self::Malformed)
            }
            pps_core::Error::OutOfRange(_) | pps_core::Error::InvalidCoordinate(_) => {
                Some(Self::OutOfRange)
            }
            pps_core::Error::BadTimestamp(_) => Some(Self::BadTimestamp),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorExpect {
    pub error: ErrorCode,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LinkExpect {
    Error(ErrorExpect),
    Parsed(ResolveResponse),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TimestampExpect {
    Error(ErrorExpect),
    Canonical(String),
}

/// Current core behaviour for a link input.
pub fn link_expectation(input: &str) -> LinkExpect {
    match parse_link_with_base::<f64>(input, DEFAULT_HOST) {
        Ok(link) => LinkExpect::Parsed(response_of(&link)),
        Err(e) => LinkExpect::Error(ErrorExpect {
            error: ErrorCode::of(&e).expect("parse errors map to a vector code"),
        }),
    }
}

pub fn timestamp_expectation(input: &str) -> TimestampExpect {
    match parse_timestamp(input) {
        Ok(t) => TimestampExpect::Canonical(format_timestamp(&t)),
        Err(_) => TimestampExpect::Error(ErrorExpect {
            error: ErrorCode::BadTimestamp,
        }),
    }
}

fn response_of(link: &Link) -> ResolveResponse {
    ResolveResponse::new(&link.coordinate, link.timestamp)
}

pub fn build_vectors() -> VectorFile {
    VectorFile {
        scan_cases: corpus::SCAN_INPUTS
            .iter()
            .map(|&input| ScanCase {
                input: input.to_owned(),
                spans: scan(input),
            })
            .collect(),
        link_cases: corpus::LINK_INPUTS
            .iter()
            .map(|&input| LinkCase {
                input: input.to_owned(),
                expect: link_expectation(input),
            })
            .collect(),
        timestamp_cases: corpus::TIMESTAMP_INPUTS
            .iter()
            .map(|&input| TimestampCase {
                input: input.to_owned(),
                expect: timestamp_expectation(input),
            })
            .collect(),
        version: PROTOCOL_VERSION.to_owned(),
    }
}

/// Serialized vector file: pretty JSON, newline-terminated, byte-stable.
pub fn emit_vectors() -> String {
    let mut out = serde_json::to_string_pretty(&build_vectors()).expect("vectors serialize");
    out.push('\n');
    out
}

#[derive(Debug, Error)]
pub enum VectorError {
    #[error("malformed vector file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported vector version {0:?}")]
    Version(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Section {
    Scan,
    Link,
    Timestamp,
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Section::Scan => "scan_cases",
            Section::Link => "link_cases",
            Section::Timestamp => "timestamp_cases",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseOutcome {
    pub section: Section,
    pub index: usize,
    pub input: String,
    /// `None` on pass, otherwise what the core produced instead.
    pub mismatch: Option<String>,
}

impl CaseOutcome {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for CaseOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "PASS {}[{}] {:?}", self.section, self.index, self.input),
            Some(got) => write!(
                f,
                "FAIL {}[{}] {:?}: {got}",
                self.section, self.index, self.input
            ),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub outcomes: Vec<CaseOutcome>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &CaseOutcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

pub fn check_vectors(json: &str) -> Result<Report, VectorError> {
    let file: VectorFile = serde_json::from_str(json)?;
    if file.version != PROTOCOL_VERSION {
        return Err(VectorError::Version(file.version));
    }
    Ok(check_file(&file))
}

pub fn check_file(file: &VectorFile) -> Report {
    let mut outcomes = Vec::new();
    for (index, case) in file.scan_cases.iter().enumerate() {
        let got = scan(&case.input);
        outcomes.push(CaseOutcome {
            section: Section::Scan,
            index,
            input: case.input.clone(),
            mismatch: (got != case.spans).then(|| format!("spans {got:?}")),
        });
    }
    for (index, case) in file.link_cases.iter().enumerate() {
        let got = link_expectation(&case.input);
        outcomes.push(CaseOutcome {
            section: Section::Link,
            index,
            input: case.input.clone(),
            mismatch: (got != case.expect).then(|| describe(&got)),
        });
    }
    for (index, case) in file.timestamp_cases.iter().enumerate() {
        let got = timestamp_expectation(&case.input);
        outcomes.push(CaseOutcome {
            section: Section::Timestamp,
            index,
            input: case.input.clone(),
            mismatch: (got != case.expect).then(|| describe(&got)),
        });
    }
    Report { outcomes }
}

fn describe<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).unwrap_or_else(|e| e.to_string())
}
