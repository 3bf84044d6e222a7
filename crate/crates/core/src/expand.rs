use crate::link::validate_host;
use crate::scan::scan;
use crate::{format_link, GeoCoordinate, PingTimestamp, PingmarkLink, Result, Scalar};

/// Output of [`expand`].
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionResult<T = f64> {
    pub text: String,
    /// One entry per replaced trigger, in textual order.
    pub links: Vec<PingmarkLink<T>>,
}

/// Replaces every unescaped trigger in `text` with the resolver link for
/// `coordinate`. Escaped triggers are copied through unchanged, backslash
/// included, so expanding an already expanded text is a no-op.
pub fn expand<T: Scalar>(
    text: &str,
    coordinate: &GeoCoordinate<T>,
    timestamp: Option<PingTimestamp>,
    base_host: &str,
) -> Result<ExpansionResult<T>> {
    validate_host(base_host)?;
    let link = PingmarkLink::with_host(*coordinate, timestamp, base_host)?;
    let rendered = format_link(&link);

    let mut out = String::with_capacity(text.len());
    let mut links = Vec::new();
    let mut copied = 0;
    for span in scan(text).into_iter().filter(|s| !s.escaped) {
        out.push_str(&text[copied..span.start]);
        out.push_str(&rendered);
        links.push(link.clone());
        copied = span.end;
    }
    out.push_str(&text[copied..]);
    Ok(ExpansionResult { text: out, links })
}
