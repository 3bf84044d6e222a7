//! Trigger detection.

use serde::{Deserialize, Serialize};

/// The spatial-mention trigger.
pub const TRIGGER: &str = "!@";
/// Prefix that turns a trigger into a literal.
pub const ESCAPE: char = '\\';

/// One located trigger occurrence, as byte offsets into the scanned text.
///
/// Escaped spans start at the backslash and are three bytes long.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriggerSpan {
    pub start: usize,
    pub end: usize,
    pub escaped: bool,
}

impl TriggerSpan {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }
}

pub(crate) fn opens_token(c: char) -> bool {
    c.is_whitespace() || matches!(c, '(' | '[' | '{' | '"' | '\'')
}

pub(crate) fn closes_token(c: char) -> bool {
    c.is_whitespace()
        || matches!(
            c,
            '.' | ',' | '!' | '?' | ';' | ':' | ')' | ']' | '}' | '"' | '\''
        )
}

/// Finds every standalone `!@` in `text`.
///
/// A trigger needs start-of-text, whitespace or one of `( [ { " '` on its
/// left, and end-of-text, whitespace or one of `. , ! ? ; : ) ] } " '` on its
/// right. A trigger written as `\!@` is reported as escaped, with the left
/// boundary checked before the backslash. Anything else is ignored.
pub fn scan(text: &str) -> Vec<TriggerSpan> {
    let mut spans = Vec::new();
    for (at, _) in text.match_indices(TRIGGER) {
        let end = at + TRIGGER.len();
        if !text[end..].chars().next().is_none_or(closes_token) {
            continue;
        }
        let (start, escaped) = match text[..at].strip_suffix(ESCAPE) {
            Some(before) => (before.len(), true),
            None => (at, false),
        };
        if text[..start].chars().next_back().is_none_or(opens_token) {
            spans.push(TriggerSpan {
                start,
                end,
                escaped,
            });
        }
    }
    spans
}
