#![forbid(unsafe_code)]

//! Command-line driver: `verify`, `presets` and `geometry`.
//!
//! Exit codes: 0 when every executed check passes, 1 when any check fails,
//! 2 for usage, parse and precondition errors.

pub mod render;
pub mod verify;

use std::io::Write;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use paratensor::catalog;
use paratensor::symmetry::{theorem_conditions, TheoremConditions};
use paratensor::{parse_manifest, Error, GeometryCache, Manifest, Preset, PresetSpec, Rational, TParams};

use crate::verify::{geometry_json, ModeSelection, ParamSelection, VerifyOptions};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "paratensor", version, about = "Exact curvature checks on frame manifests")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Local,
    Global,
    Both,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the verification suites on a manifest.
    Verify {
        /// Manifest path, or the file name of a bundled manifest.
        file: String,
        /// Preset as NAME or NAME:a0,a1 for the two-parameter families.
        #[arg(long, conflicts_with = "params")]
        preset: Option<String>,
        /// Explicit coefficients a0,...,a7.
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
        #[arg(long, value_enum, default_value = "both")]
        mode: Mode,
        /// Comma-separated check groups (default: all applicable).
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Include the wall-clock time in the report.
        #[arg(long)]
        timestamps: bool,
    },
    /// List the preset coefficients and theorem conditions.
    Presets {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print Γ, R, S, Q and r for a manifest.
    Geometry {
        file: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn load(file: &str) -> Result<(String, Manifest), Error> {
    let path = Path::new(file);
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => match catalog::bundled(file) {
            Some(t) => t.to_string(),
            None => return Err(Error::Usage(format!("cannot read `{file}`: {e}"))),
        },
    };
    let manifest = parse_manifest(&text).map_err(|e| match e {
        Error::Parse { line, msg } => Error::Parse {
            line,
            msg: format!("{file}: {msg}"),
        },
        other => other,
    })?;
    let name = manifest.name.clone().unwrap_or_else(|| {
        path.file_stem()
            .map_or_else(|| file.to_string(), |s| s.to_string_lossy().into_owned())
    });
    Ok((name, manifest))
}

fn parse_params(text: &str) -> Result<TParams, Error> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 8 {
        return Err(Error::Usage(format!("--params needs 8 values, got {}", parts.len())));
    }
    let mut coeffs: [Rational; 8] = Default::default();
    for (slot, p) in coeffs.iter_mut().zip(parts) {
        *slot = p
            .parse()
            .map_err(|e| Error::Usage(format!("--params: `{p}`: {e}")))?;
    }
    Ok(TParams::explicit(coeffs))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct PresetRow {
    name: &'static str,
    symbol: &'static str,
    coeffs: Option<[Rational; 8]>,
    #[serde(flatten)]
    conditions: Option<TheoremConditions>,
    error: Option<String>,
}

fn presets_json(m: usize) -> String {
    let rows: Vec<PresetRow> = Preset::ALL
        .iter()
        .map(|p| match p.params(m) {
            Ok(params) => PresetRow {
                name: p.name(),
                symbol: p.symbol(),
                conditions: Some(theorem_conditions(&params, m)),
                coeffs: Some(params.coeffs),
                error: None,
            },
            Err(e) => PresetRow {
                name: p.name(),
                symbol: p.symbol(),
                coeffs: None,
                conditions: None,
                error: Some(e.to_string()),
            },
        })
        .collect();
    to_json(&serde_json::json!({ "dim": m, "presets": rows }))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Error> {
    let write = |out: &mut dyn Write, s: &str| {
        // a closed stdout is not a verification failure
        let _ = out.write_all(s.as_bytes());
    };
    match command {
        Command::Verify {
            file,
            preset,
            params,
            mode,
            checks,
            format,
            timestamps,
        } => {
            let (name, manifest) = load(&file)?;
            let m = manifest.frame.dim();
            let params = match (preset, params) {
                (Some(p), _) => {
                    let spec: PresetSpec = p.parse()?;
                    ParamSelection::Given {
                        label: spec.to_string(),
                        params: spec.resolve(m)?,
                    }
                }
                (None, Some(text)) => ParamSelection::Given {
                    label: "custom".into(),
                    params: parse_params(&text)?,
                },
                (None, None) => ParamSelection::Default,
            };
            let opts = VerifyOptions {
                params,
                modes: match mode {
                    Mode::Local => ModeSelection::Local,
                    Mode::Global => ModeSelection::Global,
                    Mode::Both => ModeSelection::Both,
                },
                groups: checks,
                timestamp: timestamps.then(|| {
                    SystemTime::now()
                        .duration_since(UNIX_EPOCH)
                        .map_or(0, |d| d.as_secs())
                }),
            };
            let report = verify::verify(&name, &manifest, &opts)?;
            match format {
                Format::Text => write(out, &render::verify_text(&report)),
                Format::Json => write(out, &to_json(&report)),
            }
            Ok(if report.all_pass() { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Presets { dim, format } => {
            if dim < 2 {
                return Err(Error::Usage("--dim must be at least 2".into()));
            }
            match format {
                Format::Text => write(out, &render::presets_text(dim)),
                Format::Json => write(out, &presets_json(dim)),
            }
            Ok(EXIT_PASS)
        }
        Command::Geometry { file, format } => {
            let (name, manifest) = load(&file)?;
            let geom = GeometryCache::new(&manifest.frame)?;
            match format {
                Format::Text => write(out, &render::geometry_text(&name, &geom)),
                Format::Json => write(
                    out,
                    &to_json(&serde_json::json!({
                        "manifest": name,
                        "dim": geom.dim(),
                        "geometry": geometry_json(&geom),
                    })),
                ),
            }
            Ok(EXIT_PASS)
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
                return EXIT_PASS;
            }
            let _ = err.write_all(rendered.as_bytes());
            return EXIT_ERROR;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Some(report) = e.report() {
                for r in report.failures() {
                    let _ = writeln!(err, "  {r}");
                }
            }
            EXIT_ERROR
        }
    }
}
