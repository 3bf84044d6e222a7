//! `Accept` header handling. HTML wins unless JSON is strictly preferred.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    Html,
    Json,
}

/// Picks the representation for an `Accept` header value (`None` when the
/// header is absent).
pub fn preferred(accept: Option<&str>) -> Representation {
    let Some(accept) = accept else {
        return Representation::Html;
    };
    let ranges: Vec<(String, f32)> = accept.split(',').filter_map(media_range).collect();
    let json = quality(&ranges, "application", "json");
    let html = quality(&ranges, "text", "html");
    if json > html {
        Representation::Json
    } else {
        Representation::Html
    }
}

fn media_range(item: &str) -> Option<(String, f32)> {
    let mut parts = item.split(';');
    let range = parts.next()?.trim().to_ascii_lowercase();
    if range.is_empty() {
        return None;
    }
    let mut q = 1.0;
    for param in parts {
        if let Some((key, value)) = param.split_once('=') {
            if key.trim().eq_ignore_ascii_case("q") {
                q = value
                    .trim()
                    .parse::<f32>()
                    .ok()
                    .filter(|q| (0.0..=1.0).contains(q))?;
            }
        }
    }
    Some((range, q))
}

/// Quality of `kind/sub`, taken from the most specific matching range.
fn quality(ranges: &[(String, f32)], kind: &str, sub: &str) -> f32 {
    let exact = format!("{kind}/{sub}");
    let family = format!("{kind}/*");
    [exact.as_str(), family.as_str(), "*/*"]
        .iter()
        .find_map(|want| ranges.iter().find(|(r, _)| r == want).map(|&(_, q)| q))
        .unwrap_or(0.0)
}
