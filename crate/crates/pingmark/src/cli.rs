use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pingmark_conformance::{check_vectors, emit_vectors};
use pps_core::{
    expand, format_link, parse_link_with_base, parse_timestamp, scan, validate_host, Link,
    PingTimestamp, ResolveResponse, DEFAULT_HOST,
};
use serde::Serialize;
use thiserror::Error;

use crate::LocationProvider;

/// Failure classes, each with its own process exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Parse(String),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Parse(_) => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "pingmark",
    version,
    about = "Expand and inspect Pingmark spatial mentions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Replace `!@` triggers read from stdin with resolver links
    Expand(ExpandArgs),
    /// Print one resolver link
    Make(MakeArgs),
    /// Decode a resolver link
    Parse(ParseArgs),
    /// List trigger spans found in stdin
    Scan(ScanArgs),
    /// Emit or check conformance vectors
    #[command(subcommand)]
    Vectors(VectorsCommand),
}

#[derive(Debug, Args)]
pub struct Location {
    /// Latitude in decimal degrees
    #[arg(long, env = "PINGMARK_LAT", allow_hyphen_values = true)]
    pub lat: Option<String>,
    /// Longitude in decimal degrees
    #[arg(long, env = "PINGMARK_LON", allow_hyphen_values = true)]
    pub lon: Option<String>,
}

#[derive(Debug, Args)]
pub struct BaseUrl {
    /// Resolver base, e.g. https://pingmark.me
    #[arg(long = "base-url", env = "PINGMARK_BASE_URL")]
    pub base_url: Option<String>,
}

impl BaseUrl {
    fn host(&self) -> Result<String, CliError> {
        match &self.base_url {
            None => Ok(DEFAULT_HOST.to_owned()),
            Some(raw) => host_of_base_url(raw),
        }
    }
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct TimestampChoice {
    /// Attach this instant (ISO 8601 with zone)
    #[arg(long)]
    pub timestamp: Option<String>,
    /// Attach the current UTC second
    #[arg(long)]
    pub now: bool,
    /// Attach no timestamp (default)
    #[arg(long)]
    pub no_timestamp: bool,
}

impl TimestampChoice {
    fn resolve(&self) -> Result<Option<PingTimestamp>, CliError> {
        if self.now {
            return Ok(Some(PingTimestamp::now()));
        }
        self.timestamp
            .as_deref()
            .map(|s| parse_timestamp(s).map_err(|e| CliError::Validation(e.to_string())))
            .transpose()
    }
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum TextOrJson {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum JsonOnly {
    #[default]
    Json,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub location: Location,
    #[command(flatten)]
    pub timestamp: TimestampChoice,
    #[command(flatten)]
    pub base: BaseUrl,
    #[arg(long, value_enum, default_value_t)]
    pub format: TextOrJson,
}

#[derive(Debug, Args)]
pub struct MakeArgs {
    #[command(flatten)]
    pub location: Location,
    #[command(flatten)]
    pub timestamp: TimestampChoice,
    #[command(flatten)]
    pub base: BaseUrl,
}

#[derive(Debug, Args)]
pub struct ParseArgs {
    /// Link to decode; path-only input resolves against --base-url
    pub url: String,
    #[command(flatten)]
    pub base: BaseUrl,
    #[arg(long, value_enum, default_value = "json")]
    pub format: TextOrJson,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, value_enum, default_value_t)]
    pub format: JsonOnly,
}

#[derive(Debug, Subcommand)]
pub enum VectorsCommand {
    /// Write the conformance vector file to stdout
    Emit,
    /// Replay a vector file ("-" for stdin) against this implementation
    Check { file: PathBuf },
}

/// Entry point shared by the binary: parses `std::env::args` and maps
/// failures to exit statuses.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut io::stdin().lock(), &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            let _ = out.flush();
            eprintln!("pingmark: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

/// Runs one subcommand, returning the exit status on success.
pub fn run(command: Command, input: &mut dyn Read, out: &mut dyn Write) -> Result<u8, CliError> {
    match command {
        Command::Expand(args) => cmd_expand(args, input, out).map(|()| 0),
        Command::Make(args) => cmd_make(args, out).map(|()| 0),
        Command::Parse(args) => cmd_parse(args, out).map(|()| 0),
        Command::Scan(_) => cmd_scan(input, out).map(|()| 0),
        Command::Vectors(VectorsCommand::Emit) => {
            out.write_all(emit_vectors().as_bytes())?;
            Ok(0)
        }
        Command::Vectors(VectorsCommand::Check { file }) => cmd_check(&file, input, out),
    }
}

fn read_text(input: &mut dyn Read) -> Result<String, CliError> {
    let mut bytes = Vec::new();
    input.read_to_end(&mut bytes)?;
    String::from_utf8(bytes)
        .map_err(|_| CliError::Validation("input is not valid UTF-8".to_owned()))
}

fn provider(location: &Location) -> Result<LocationProvider, CliError> {
    LocationProvider::from_parts(location.lat.as_deref(), location.lon.as_deref())
}

#[derive(Serialize)]
struct ExpandJson<'a> {
    text: &'a str,
    links: Vec<String>,
}

fn cmd_expand(args: ExpandArgs, input: &mut dyn Read, out: &mut dyn Write) -> Result<(), CliError> {
    let text = read_text(input)?;
    let needs_fix = scan(&text).iter().any(|s| !s.escaped);
    let expanded = if needs_fix {
        let coordinate = provider(&args.location)?.coordinate()?;
        let timestamp = args.timestamp.resolve()?;
        let host = args.base.host()?;
        expand(&text, &coordinate, timestamp, &host)
            .map_err(|e| CliError::Validation(e.to_string()))?
    } else {
        pps_core::ExpansionResult {
            text,
            links: Vec::new(),
        }
    };
    match args.format {
        TextOrJson::Text => out.write_all(expanded.text.as_bytes())?,
        TextOrJson::Json => {
            let doc = ExpandJson {
                text: &expanded.text,
                links: expanded.links.iter().map(format_link).collect(),
            };
            write_json_line(out, &doc)?;
        }
    }
    Ok(())
}

fn cmd_make(args: MakeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let coordinate = provider(&args.location)?.coordinate()?;
    let timestamp = args.timestamp.resolve()?;
    let link = Link::with_host(coordinate, timestamp, &args.base.host()?)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    writeln!(out, "{}", format_link(&link))?;
    Ok(())
}

fn cmd_parse(args: ParseArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let host = args.base.host()?;
    let link: Link = parse_link_with_base(args.url.trim(), &host)
        .map_err(|e| CliError::Parse(format!("{}: {e}", e.code())))?;
    let response = ResolveResponse::new(&link.coordinate, link.timestamp);
    match args.format {
        TextOrJson::Json => write_json_line(out, &response)?,
        TextOrJson::Text => {
            let ts = response
                .timestamp
                .map(|t| t.to_extended())
                .unwrap_or_else(|| "none".to_owned());
            writeln!(out, "latitude:   {}", response.latitude)?;
            writeln!(out, "longitude:  {}", response.longitude)?;
            writeln!(out, "timestamp:  {ts}")?;
            writeln!(out, "resolver:   {}", link.base_host())?;
            writeln!(out, "geo:        {}", response.links.geo)?;
            writeln!(out, "osm:        {}", response.links.osm)?;
            writeln!(out, "directions: {}", response.links.directions)?;
        }
    }
    Ok(())
}

fn cmd_scan(input: &mut dyn Read, out: &mut dyn Write) -> Result<(), CliError> {
    let text = read_text(input)?;
    write_json_line(out, &scan(&text))
}

fn cmd_check(file: &PathBuf, input: &mut dyn Read, out: &mut dyn Write) -> Result<u8, CliError> {
    let json = if file.as_os_str() == "-" {
        let mut s = String::new();
        input
            .read_to_string(&mut s)
            .map_err(|e| CliError::Parse(format!("cannot read vectors: {e}")))?;
        s
    } else {
        std::fs::read_to_string(file)
            .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", file.display())))?
    };
    let report = check_vectors(&json).map_err(|e| CliError::Parse(e.to_string()))?;
    for outcome in &report.outcomes {
        writeln!(out, "{outcome}")?;
    }
    let failed = report.failures().count();
    writeln!(
        out,
        "{} of {} cases passed",
        report.outcomes.len() - failed,
        report.outcomes.len()
    )?;
    Ok(if failed == 0 { 0 } else { 2 })
}

fn write_json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::from)?;
    out.write_all(b"\n")?;
    Ok(())
}

/// Accepts `host`, `https://host` or `https://host/`.
pub fn host_of_base_url(raw: &str) -> Result<String, CliError> {
    let trimmed = raw.trim();
    let host = match trimmed.split_once("://") {
        Some(("https", rest)) => rest.strip_suffix('/').unwrap_or(rest),
        Some((scheme, _)) => {
            return Err(CliError::Validation(format!(
                "base URL must use https, not {scheme}"
            )))
        }
        None => trimmed,
    };
    validate_host(host).map_err(|e| CliError::Validation(e.to_string()))?;
    Ok(host.to_owned())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_url_forms() {
        assert_eq!(host_of_base_url("pingmark.me").unwrap(), "pingmark.me");
        assert_eq!(
            host_of_base_url("https://example.org/").unwrap(),
            "example.org"
        );
        assert_eq!(
            host_of_base_url("https://localhost:8443").unwrap(),
            "localhost:8443"
        );
        assert_eq!(
            host_of_base_url("http://example.org")
                .unwrap_err()
                .exit_code(),
            2
        );
        assert!(host_of_base_url("https://example.org/path").is_err());
    }

    #[test]
    fn usage_errors_are_distinguished_from_validation() {
        assert!(Cli::try_parse_from(["pingmark", "make", "--now", "--no-timestamp"]).is_err());
        assert!(Cli::try_parse_from(["pingmark", "scan", "--format", "text"]).is_err());
        let cli =
            Cli::try_parse_from(["pingmark", "make", "--lat", "-33.8", "--lon", "151"]).unwrap();
        let mut out = Vec::new();
        run(cli.command, &mut io::empty(), &mut out).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "https://pingmark.me/-33.80000/151.00000\n"
        );
    }
}
