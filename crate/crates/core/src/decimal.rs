//! Decimal rendering of coordinates.
//!
//! Rounding operates on the shortest round-trip decimal form of the value
//! rather than on its binary expansion, so `0.000005` rounds up to `0.00001`
//! on every platform.

use crate::Scalar;

struct Rounded {
    negative: bool,
    int: String,
    frac: String,
}

fn round_half_away<T: Scalar>(value: T, places: usize) -> Rounded {
    let repr = value.to_string();
    let (negative, body) = match repr.strip_prefix('-') {
        Some(body) => (true, body),
        None => (false, repr.as_str()),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    debug_assert!(int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()));

    let mut digits: Vec<u8> = int
        .bytes()
        .chain(frac.bytes().chain(std::iter::repeat(b'0')).take(places))
        .map(|b| b - b'0')
        .collect();
    if frac.as_bytes().get(places).is_some_and(|&d| d >= b'5') {
        let mut i = digits.len();
        loop {
            if i == 0 {
                digits.insert(0, 1);
                break;
            }
            i -= 1;
            if digits[i] == 9 {
                digits[i] = 0;
            } else {
                digits[i] += 1;
                break;
            }
        }
    }

    let split = digits.len() - places;
    let int_digits = &digits[..split];
    let first_nonzero = int_digits.iter().position(|&d| d != 0);
    let int: String = match first_nonzero {
        Some(p) => int_digits[p..]
            .iter()
            .map(|d| char::from(b'0' + d))
            .collect(),
        None => "0".to_owned(),
    };
    let frac: String = digits[split..]
        .iter()
        .map(|d| char::from(b'0' + d))
        .collect();
    Rounded {
        // -0.000001 renders as 0.00000, never -0.00000
        negative: negative && digits.iter().any(|&d| d != 0),
        int,
        frac,
    }
}

/// Fixed-point rendering with exactly `places` fraction digits.
pub(crate) fn fixed<T: Scalar>(value: T, places: usize) -> String {
    let r = round_half_away(value, places);
    let sign = if r.negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{}", r.int)
    } else {
        format!("{sign}{}.{}", r.int, r.frac)
    }
}

/// At most `places` fraction digits, trailing zeros (and a bare point) trimmed.
pub(crate) fn trimmed<T: Scalar>(value: T, places: usize) -> String {
    let r = round_half_away(value, places);
    let frac = r.frac.trim_end_matches('0');
    let negative = r.negative && !(r.int == "0" && frac.is_empty());
    let sign = if negative { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{}", r.int)
    } else {
        format!("{sign}{}.{frac}", r.int)
    }
}
