mod support;

use pingmark_conformance::build_vectors;
use serde_json::Value;
use support::{pingmark, stdout_of};

const SOUTH_ENTRANCE: &str = "We're waiting at the south entrance !@.";

#[test]
fn expand_south_entrance_at_origin() {
    let out = pingmark(
        &["expand", "--lat", "0", "--lon", "0"],
        &format!("{SOUTH_ENTRANCE}\n"),
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "We're waiting at the south entrance https://pingmark.me/0.00000/0.00000.\n"
    );
}

#[test]
fn expand_without_trigger_needs_no_provider() {
    let out = pingmark(&["expand"], "hello\n", &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "hello\n");
    // escaped triggers do not need a fix either
    let out = pingmark(&["expand"], "type \\!@ literally", &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "type \\!@ literally");
}

#[test]
fn expand_trigger_without_provider_fails() {
    let out = pingmark(&["expand"], "!@\n", &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
    let out = pingmark(&["expand", "--lat", "1"], "!@", &[]);
    assert_eq!(out.status.code(), Some(2));
    let out = pingmark(&["expand", "--lat", "100", "--lon", "0"], "!@", &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn expand_json_lists_links() {
    let out = pingmark(
        &[
            "expand",
            "--lat",
            "43.0757",
            "--lon",
            "25.6172",
            "--timestamp",
            "2025-11-01T14:00:00+02:00",
            "--format",
            "json",
        ],
        "!@ and !@",
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.ends_with('\n'));
    let v: Value = serde_json::from_str(&text).unwrap();
    let url = "https://pingmark.me/43.07570/25.61720/20251101T120000Z";
    assert_eq!(v["text"], format!("{url} and {url}"));
    assert_eq!(v["links"], serde_json::json!([url, url]));
}

#[test]
fn expand_now_stamps_current_second() {
    let out = pingmark(&["expand", "--lat", "1", "--lon", "2", "--now"], "!@", &[]);
    let text = stdout_of(&out);
    let ts = text.rsplit('/').next().unwrap();
    let parsed = pps_core::parse_timestamp(ts).unwrap();
    let now = pps_core::PingTimestamp::now().unix_seconds();
    assert!((now - parsed.unix_seconds()).abs() < 60, "{text}");
}

#[test]
fn environment_supplies_location_and_flags_win() {
    let env = [("PINGMARK_LAT", "10"), ("PINGMARK_LON", "20")];
    let out = pingmark(&["expand"], "!@", &env);
    assert_eq!(stdout_of(&out), "https://pingmark.me/10.00000/20.00000");

    let out = pingmark(&["expand", "--lat", "-5", "--lon", "-6"], "!@", &env);
    assert_eq!(stdout_of(&out), "https://pingmark.me/-5.00000/-6.00000");

    // mixed: flag latitude, env longitude
    let out = pingmark(&["make", "--lat", "1.5"], "", &env);
    assert_eq!(stdout_of(&out), "https://pingmark.me/1.50000/20.00000\n");
}

#[test]
fn base_url_precedence() {
    let env = [("PINGMARK_BASE_URL", "https://env.example")];
    let out = pingmark(&["make", "--lat", "0", "--lon", "0"], "", &env);
    assert_eq!(stdout_of(&out), "https://env.example/0.00000/0.00000\n");
    let out = pingmark(
        &[
            "make",
            "--lat",
            "0",
            "--lon",
            "0",
            "--base-url",
            "https://flag.example/",
        ],
        "",
        &env,
    );
    assert_eq!(stdout_of(&out), "https://flag.example/0.00000/0.00000\n");
    let out = pingmark(
        &[
            "make",
            "--lat",
            "0",
            "--lon",
            "0",
            "--base-url",
            "http://plain.example",
        ],
        "",
        &[],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn make_examples() {
    let out = pingmark(&["make", "--lat", "0", "--lon", "0"], "", &[]);
    assert_eq!(stdout_of(&out), "https://pingmark.me/0.00000/0.00000\n");
    let out = pingmark(
        &[
            "make",
            "--lat",
            "43.0757",
            "--lon",
            "25.6172",
            "--timestamp",
            "2025-11-01T12:00:00Z",
        ],
        "",
        &[],
    );
    assert_eq!(
        stdout_of(&out),
        "https://pingmark.me/43.07570/25.61720/20251101T120000Z\n"
    );
    assert_eq!(
        pingmark(&["make", "--lat", "91", "--lon", "0"], "", &[])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(pingmark(&["make"], "", &[]).status.code(), Some(2));
    assert_eq!(
        pingmark(&["make", "--lat", "x", "--lon", "0"], "", &[])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        pingmark(
            &[
                "make",
                "--lat",
                "0",
                "--lon",
                "0",
                "--timestamp",
                "yesterday"
            ],
            "",
            &[]
        )
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        pingmark(
            &["make", "--now", "--timestamp", "20251101T120000Z"],
            "",
            &[]
        )
        .status
        .code(),
        Some(1)
    );
    assert_eq!(pingmark(&["frobnicate"], "", &[]).status.code(), Some(1));
    assert_eq!(pingmark(&["--help"], "", &[]).status.code(), Some(0));
}

#[test]
fn parse_examples() {
    let out = pingmark(&["parse", "https://pingmark.me/0.00000/0.00000"], "", &[]);
    let v: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(
        (v["latitude"].as_f64(), v["longitude"].as_f64()),
        (Some(0.0), Some(0.0))
    );
    assert!(v["timestamp"].is_null());

    let out = pingmark(
        &[
            "parse",
            "https://pingmark.me/-33.85680/151.21530/20251101T033000Z",
        ],
        "",
        &[],
    );
    let v: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["latitude"], -33.8568);
    assert_eq!(v["timestamp"], "2025-11-01T03:30:00Z");

    let out = pingmark(&["parse", "https://pingmark.me/abc/12"], "", &[]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");

    let out = pingmark(
        &["parse", "/1/2", "--format", "text"],
        "",
        &[("PINGMARK_BASE_URL", "maps.example")],
    );
    let text = stdout_of(&out);
    assert!(text.contains("resolver:   maps.example"), "{text}");
    assert!(text.contains("geo:        geo:1,2"), "{text}");
    assert_eq!(pingmark(&["parse"], "", &[]).status.code(), Some(1));
}

#[test]
fn scan_examples() {
    assert_eq!(
        stdout_of(&pingmark(&["scan"], "a !@ b", &[])),
        "[{\"start\":2,\"end\":4,\"escaped\":false}]\n"
    );
    assert_eq!(stdout_of(&pingmark(&["scan"], "", &[])), "[]\n");
    assert_eq!(stdout_of(&pingmark(&["scan"], "x!@", &[])), "[]\n");
    assert_eq!(
        stdout_of(&pingmark(
            &["scan", "--format", "json"],
            "say \\!@ to type it",
            &[]
        )),
        "[{\"start\":4,\"end\":7,\"escaped\":true}]\n"
    );
}

#[test]
fn vectors_check_reports_single_corruption() {
    let mut file = build_vectors();
    let case = file
        .scan_cases
        .iter_mut()
        .find(|c| !c.spans.is_empty())
        .unwrap();
    case.spans[0].start += 1;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("vectors.json");
    std::fs::write(&path, serde_json::to_string_pretty(&file).unwrap()).unwrap();

    let out = pingmark(&["vectors", "check", path.to_str().unwrap()], "", &[]);
    assert_eq!(out.status.code(), Some(2));
    let report = stdout_of(&out);
    assert_eq!(
        report.lines().filter(|l| l.starts_with("FAIL")).count(),
        1,
        "{report}"
    );
}

#[test]
fn vectors_check_rejects_malformed_files() {
    let emitted = stdout_of(&pingmark(&["vectors", "emit"], "", &[]));
    let truncated = &emitted[..emitted.len() / 3];
    assert_eq!(
        pingmark(&["vectors", "check", "-"], truncated, &[])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        pingmark(&["vectors", "check", "/nonexistent/vectors.json"], "", &[])
            .status
            .code(),
        Some(3)
    );
    let extra_key = emitted.replacen('{', "{\"bonus\": 1,", 1);
    assert_eq!(
        pingmark(&["vectors", "check", "-"], &extra_key, &[])
            .status
            .code(),
        Some(3)
    );
}
