#![allow(dead_code)]

use std::io::{Read, Write};
use std::net::{SocketAddr, TcpStream};
use std::path::Path;
use std::process::{Command, Output, Stdio};
use std::time::Duration;

use pps_core::TriggerSpan;
use rand::Rng;

pub const CLI: &str = env!("CARGO_BIN_EXE_pingmark");
pub const RESOLVER: &str = env!("CARGO_BIN_EXE_pingmark-resolver");

/// Runs the CLI with a clean `PINGMARK_*` environment.
pub fn pingmark(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(CLI);
    cmd.args(args)
        .env_remove("PINGMARK_LAT")
        .env_remove("PINGMARK_LON")
        .env_remove("PINGMARK_BASE_URL")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn pingmark");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

pub fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Boundary rule applied literally at every character index.
pub fn brute_force_scan(text: &str) -> Vec<TriggerSpan> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let opening = |c: char| c.is_whitespace() || "([{\"'".contains(c);
    let closing = |c: char| c.is_whitespace() || ".,!?;:)]}\"'".contains(c);
    let mut out = Vec::new();
    for i in 0..chars.len() {
        if chars[i].1 != '!' || chars.get(i + 1).map(|c| c.1) != Some('@') {
            continue;
        }
        if !chars.get(i + 2).is_none_or(|&(_, c)| closing(c)) {
            continue;
        }
        let escaped = i > 0 && chars[i - 1].1 == '\\';
        let first = if escaped { i - 1 } else { i };
        if first == 0 || opening(chars[first - 1].1) {
            out.push(TriggerSpan {
                start: chars[first].0,
                end: chars[i + 1].0 + 1,
                escaped,
            });
        }
    }
    out
}

const PIECES: &[&str] = &[
    "!@",
    "!@",
    "!@",
    "\\",
    "\\!@",
    " ",
    " ",
    "\n",
    "\t",
    "!",
    "@",
    "(",
    ")",
    "[",
    "]",
    "{",
    "}",
    "\"",
    "'",
    ".",
    ",",
    "?",
    ";",
    ":",
    "#",
    "$",
    "é",
    "日本",
    "🙂",
    "\u{3000}",
    "\u{a0}",
    "\u{200b}",
    "\u{2028}",
    "ß",
    "user",
    "a",
    "x",
    "42",
    "https://pingmark.me/0.00000/0.00000",
];

/// Random text dense in triggers, escapes, punctuation and multi-byte code
/// points, with arbitrary Unicode scalars mixed in.
pub fn fuzz_text<R: Rng>(rng: &mut R) -> String {
    let len = rng.gen_range(0..32);
    let mut s = String::new();
    for _ in 0..len {
        if rng.gen_bool(0.15) {
            s.push(rng.gen::<char>());
        } else {
            s.push_str(PIECES[rng.gen_range(0..PIECES.len())]);
        }
    }
    s
}

pub struct HttpReply {
    pub status: u16,
    pub headers: Vec<(String, String)>,
    pub body: String,
}

impl HttpReply {
    pub fn header(&self, name: &str) -> Option<&str> {
        self.headers
            .iter()
            .find(|(k, _)| k.eq_ignore_ascii_case(name))
            .map(|(_, v)| v.as_str())
    }

    pub fn count_header(&self, name: &str) -> usize {
        self.headers
            .iter()
            .filter(|(k, _)| k.eq_ignore_ascii_case(name))
            .count()
    }
}

/// Minimal HTTP/1.1 client; one request per connection.
pub fn http(addr: SocketAddr, method: &str, path: &str, accept: Option<&str>) -> HttpReply {
    let mut stream = TcpStream::connect(addr).expect("connect");
    stream
        .set_read_timeout(Some(Duration::from_secs(10)))
        .unwrap();
    let mut req = format!("{method} {path} HTTP/1.1\r\nHost: {addr}\r\nConnection: close\r\n");
    if let Some(accept) = accept {
        req.push_str(&format!("Accept: {accept}\r\n"));
    }
    req.push_str("Content-Length: 0\r\n\r\n");
    stream.write_all(req.as_bytes()).unwrap();
    let mut raw = Vec::new();
    stream.read_to_end(&mut raw).unwrap();
    let raw = String::from_utf8(raw).expect("utf-8 response");
    let (head, body) = raw.split_once("\r\n\r\n").expect("header terminator");
    let mut lines = head.split("\r\n");
    let status = lines
        .next()
        .unwrap()
        .split(' ')
        .nth(1)
        .unwrap()
        .parse()
        .unwrap();
    let headers = lines
        .filter_map(|l| l.split_once(':'))
        .map(|(k, v)| (k.trim().to_owned(), v.trim().to_owned()))
        .collect();
    HttpReply {
        status,
        headers,
        body: body.to_owned(),
    }
}

/// Relative path, size and modification time of every entry below `root`.
pub fn snapshot(root: &Path) -> Vec<(String, u64, Option<std::time::SystemTime>)> {
    let mut out = Vec::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(dir) = stack.pop() {
        for entry in std::fs::read_dir(&dir).unwrap() {
            let entry = entry.unwrap();
            let meta = entry.metadata().unwrap();
            let rel = entry
                .path()
                .strip_prefix(root)
                .unwrap()
                .display()
                .to_string();
            out.push((rel, meta.len(), meta.modified().ok()));
            if meta.is_dir() {
                stack.push(entry.path());
            }
        }
    }
    out.sort();
    out
}
