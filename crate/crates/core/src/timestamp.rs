//! UTC instants at second precision and their ISO 8601 codecs.
//!
//! Canonical form is the basic format `YYYYMMDDTHHMMSSZ`. Parsing also takes
//! the extended format `YYYY-MM-DDTHH:MM:SS` with `Z` or a `±hh:mm` offset,
//! where each colon may be percent-encoded as `%3A`. A zone designator is
//! mandatory.

use std::fmt;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

const SECONDS_PER_DAY: i64 = 86_400;
const MIN_YEAR: i64 = 1970;
const MAX_YEAR: i64 = 9999;
/// 9999-12-31T23:59:59Z
const MAX_UNIX: i64 = 253_402_300_799;

/// An instant in UTC, whole seconds, years 1970 through 9999.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PingTimestamp {
    unix: i64,
}

/// Broken-down calendar fields of a [`PingTimestamp`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CivilTime {
    pub year: i64,
    pub month: u32,
    pub day: u32,
    pub hour: u32,
    pub minute: u32,
    pub second: u32,
}

impl PingTimestamp {
    pub const EPOCH: PingTimestamp = PingTimestamp { unix: 0 };
    pub const MAX: PingTimestamp = PingTimestamp { unix: MAX_UNIX };

    pub fn from_unix_seconds(unix: i64) -> Result<Self> {
        if (0..=MAX_UNIX).contains(&unix) {
            Ok(Self { unix })
        } else {
            Err(Error::BadTimestamp(format!(
                "{unix} s since epoch is outside years {MIN_YEAR}-{MAX_YEAR}"
            )))
        }
    }

    /// Builds an instant from UTC calendar fields, rejecting impossible dates.
    pub fn from_civil(
        year: i64,
        month: u32,
        day: u32,
        hour: u32,
        minute: u32,
        second: u32,
    ) -> Result<Self> {
        if !(MIN_YEAR..=MAX_YEAR).contains(&year) {
            return Err(Error::BadTimestamp(format!("year {year} out of range")));
        }
        if !(1..=12).contains(&month) {
            return Err(Error::BadTimestamp(format!("month {month} out of range")));
        }
        if day == 0 || day > days_in_month(year, month) {
            return Err(Error::BadTimestamp(format!(
                "{year:04}-{month:02} has no day {day}"
            )));
        }
        if hour > 23 || minute > 59 || second > 59 {
            return Err(Error::BadTimestamp(format!(
                "time {hour:02}:{minute:02}:{second:02} out of range"
            )));
        }
        let days = days_from_civil(year, month, day);
        Self::from_unix_seconds(
            days * SECONDS_PER_DAY
                + i64::from(hour) * 3600
                + i64::from(minute) * 60
                + i64::from(second),
        )
    }

    /// Current UTC time truncated to the second.
    pub fn now() -> Self {
        let secs = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs() as i64)
            .unwrap_or(0);
        Self {
            unix: secs.clamp(0, MAX_UNIX),
        }
    }

    pub fn unix_seconds(&self) -> i64 {
        self.unix
    }

    pub fn civil(&self) -> CivilTime {
        let days = self.unix.div_euclid(SECONDS_PER_DAY);
        let rem = self.unix.rem_euclid(SECONDS_PER_DAY);
        let (year, month, day) = civil_from_days(days);
        CivilTime {
            year,
            month,
            day,
            hour: (rem / 3600) as u32,
            minute: (rem % 3600 / 60) as u32,
            second: (rem % 60) as u32,
        }
    }

    /// Extended ISO 8601 form, e.g. `2025-11-01T12:00:00Z`.
    pub fn to_extended(&self) -> String {
        let c = self.civil();
        format!(
            "{:04}-{:02}-{:02}T{:02}:{:02}:{:02}Z",
            c.year, c.month, c.day, c.hour, c.minute, c.second
        )
    }
}

impl fmt::Display for PingTimestamp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.civil();
        write!(
            f,
            "{:04}{:02}{:02}T{:02}{:02}{:02}Z",
            c.year, c.month, c.day, c.hour, c.minute, c.second
        )
    }
}

impl FromStr for PingTimestamp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_timestamp(s)
    }
}

impl Serialize for PingTimestamp {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_extended())
    }
}

impl<'de> Deserialize<'de> for PingTimestamp {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_timestamp(&s).map_err(serde::de::Error::custom)
    }
}

/// Canonical basic-format rendering, `YYYYMMDDTHHMMSSZ`.
pub fn format_timestamp(t: &PingTimestamp) -> String {
    t.to_string()
}

pub fn parse_timestamp(s: &str) -> Result<PingTimestamp> {
    let bad = |why: &str| Error::BadTimestamp(format!("{why}: {s:?}"));

    if s.contains('%') {
        let decoded = s.replace("%3A", ":").replace("%3a", ":");
        if decoded.contains('%') {
            return Err(bad("unexpected percent-encoding"));
        }
        return parse_unescaped(&decoded).map_err(|_| bad("not an ISO 8601 instant"));
    }
    parse_unescaped(s)
}

fn parse_unescaped(s: &str) -> Result<PingTimestamp> {
    let bad = |why: &str| Error::BadTimestamp(format!("{why}: {s:?}"));
    if !s.is_ascii() {
        return Err(bad("non-ASCII character"));
    }
    let b = s.as_bytes();

    // basic: YYYYMMDDTHHMMSSZ
    if b.len() == 16 && b[8] == b'T' && b[15] == b'Z' && !s.contains('-') {
        let f = |r: std::ops::Range<usize>| digits(&b[r]).ok_or_else(|| bad("expected digits"));
        return PingTimestamp::from_civil(
            f(0..4)? as i64,
            f(4..6)?,
            f(6..8)?,
            f(9..11)?,
            f(11..13)?,
            f(13..15)?,
        );
    }

    // extended: YYYY-MM-DDTHH:MM:SS then Z | ±hh:mm
    if b.len() < 20 {
        return Err(bad("too short"));
    }
    let (local, zone) = s.split_at(19);
    let l = local.as_bytes();
    let separators = [(4, b'-'), (7, b'-'), (10, b'T'), (13, b':'), (16, b':')];
    if separators.iter().any(|&(i, c)| l[i] != c) {
        return Err(bad("expected YYYY-MM-DDTHH:MM:SS"));
    }
    let f = |r: std::ops::Range<usize>| digits(&l[r]).ok_or_else(|| bad("expected digits"));
    let (year, month, day) = (f(0..4)? as i64, f(5..7)?, f(8..10)?);
    let (hour, minute, second) = (f(11..13)?, f(14..16)?, f(17..19)?);

    let offset_seconds: i64 = match zone.as_bytes() {
        b"Z" => 0,
        [sign @ (b'+' | b'-'), h1, h2, b':', m1, m2] => {
            let oh = digits(&[*h1, *h2]).ok_or_else(|| bad("bad offset hours"))?;
            let om = digits(&[*m1, *m2]).ok_or_else(|| bad("bad offset minutes"))?;
            if oh > 23 || om > 59 {
                return Err(bad("offset out of range"));
            }
            let magnitude = i64::from(oh) * 3600 + i64::from(om) * 60;
            if *sign == b'+' {
                magnitude
            } else {
                -magnitude
            }
        }
        [] => return Err(bad("missing zone designator")),
        _ => return Err(bad("expected Z or a ±hh:mm offset")),
    };

    if !(MIN_YEAR..=MAX_YEAR).contains(&year) {
        return Err(bad("year out of range"));
    }
    // validate the local wall-clock fields first, then shift to UTC
    if !(1..=12).contains(&month)
        || day == 0
        || day > days_in_month(year, month)
        || hour > 23
        || minute > 59
        || second > 59
    {
        return Err(bad("impossible date or time"));
    }
    let local_unix = days_from_civil(year, month, day) * SECONDS_PER_DAY
        + i64::from(hour) * 3600
        + i64::from(minute) * 60
        + i64::from(second);
    PingTimestamp::from_unix_seconds(local_unix - offset_seconds)
}

fn digits(bytes: &[u8]) -> Option<u32> {
    if bytes.is_empty() || !bytes.iter().all(u8::is_ascii_digit) {
        return None;
    }
    Some(
        bytes
            .iter()
            .fold(0, |acc, b| acc * 10 + u32::from(b - b'0')),
    )
}

fn is_leap_year(year: i64) -> bool {
    (year % 4 == 0 && year % 100 != 0) || year % 400 == 0
}

fn days_in_month(year: i64, month: u32) -> u32 {
    match month {
        1 | 3 | 5 | 7 | 8 | 10 | 12 => 31,
        4 | 6 | 9 | 11 => 30,
        2 if is_leap_year(year) => 29,
        2 => 28,
        _ => 0,
    }
}

// Proleptic Gregorian day counting after H. Hinnant's `days_from_civil`.
fn days_from_civil(year: i64, month: u32, day: u32) -> i64 {
    let y = if month <= 2 { year - 1 } else { year };
    let era = y.div_euclid(400);
    let yoe = y - era * 400;
    let m = i64::from(month);
    let doy = (153 * (if m > 2 { m - 3 } else { m + 9 }) + 2) / 5 + i64::from(day) - 1;
    let doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    era * 146_097 + doe - 719_468
}

fn civil_from_days(days: i64) -> (i64, u32, u32) {
    let z = days + 719_468;
    let era = z.div_euclid(146_097);
    let doe = z - era * 146_097;
    let yoe = (doe - doe / 1460 + doe / 36_524 - doe / 146_096) / 365;
    let doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    let mp = (5 * doy + 2) / 153;
    let day = (doy - (153 * mp + 2) / 5 + 1) as u32;
    let month = if mp < 10 { mp + 3 } else { mp - 9 } as u32;
    let year = yoe + era * 400 + i64::from(month <= 2);
    (year, month, day)
}
