//! The `gwcurves` command line.
//!
//! Exit codes: 0 success (or equal), 1 not equal, 2 usage or input error,
//! 3 internal invariant violation.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::newton::{self, LatticePolygon};
use crate::notation::{parse_gw_element, parse_gw_expression};
use crate::poly::ExtensionSign;
use crate::tropical::{
    enumerate_curves_with,
    svg::{render_subdivisions, SvgOptions},
    Defect, EnumerationOptions, MarkedSubdivision, TropicalCount,
};
use crate::wallcross::{build_tables_with, kontsevich_nd, polygon_label, InvariantTable, SurfaceChain};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_EQUAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "gwcurves", version, about = "GW(Q)-valued counts of rational curves on toric del Pezzo surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a GW expression and print its canonical form.
    GwEval {
        expr: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        unicode: bool,
    },
    /// Decide equality of two GW(Q) elements (exit 0 if equal, 1 if not).
    GwEqual { left: String, right: String },
    /// Enumerate tropical curves of a polygon.
    Tropical {
        #[command(flatten)]
        polygon: PolygonArgs,
        #[arg(long)]
        list_curves: bool,
        /// Write curves and totals as JSON.
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
        /// Write the dual subdivisions as SVG.
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
        /// Pixels per lattice unit in the SVG (default: fit each panel to 240 px).
        #[arg(long, value_name = "PX")]
        svg_scale: Option<f64>,
    },
    /// Print the invariant of a polygon with its rank and signature.
    Invariant {
        #[command(flatten)]
        polygon: PolygonArgs,
        #[arg(long)]
        json: bool,
    },
    /// Build the wall-crossing tables of a chain.
    Table {
        /// A preset, or a comma-separated list of presets.
        #[arg(long, default_value = "p2:4")]
        chain: String,
        #[arg(long, conflicts_with = "json")]
        markdown: bool,
        #[arg(long)]
        json: bool,
        /// Square classes c1,c2,... substituted for b1,b2,...; a single value applies to every symbol.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "signature")]
        specialize: Option<Vec<i64>>,
        /// Evaluate signatures with every c_i of the given sign.
        #[arg(long, value_enum)]
        signature: Option<SignArg>,
        #[arg(long, default_value_t = DEFAULT_MAX_BUDGET)]
        max_budget: i64,
    },
    /// Independent oracles.
    Oracle {
        /// Kontsevich's N_d.
        #[arg(long, value_name = "D")]
        kontsevich: u32,
    },
}

pub const DEFAULT_MAX_BUDGET: i64 = 14;

#[derive(Debug, Args)]
pub struct PolygonArgs {
    /// A preset (p2:<d>, F1_4_2E, BlF1, Bl2F1) or a JSON file {"vertices": [[x,y], ...]}.
    #[arg(long)]
    pub polygon: String,
    /// Refuse polygons needing more point conditions than this.
    #[arg(long, default_value_t = DEFAULT_MAX_BUDGET)]
    pub max_budget: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Neg,
    Pos,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvariantViolation(msg) => Failure::Invariant(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn load_polygon(args: &PolygonArgs) -> std::result::Result<LatticePolygon, Failure> {
    let poly = match newton::preset(&args.polygon) {
        Ok(p) => p,
        Err(Error::UnknownPreset(name)) => {
            let path = Path::new(&args.polygon);
            if !path.exists() {
                return Err(Failure::Usage(format!(
                    "{name:?} is neither a preset ({}) nor a readable file",
                    newton::PRESET_NAMES.join(", ")
                )));
            }
            let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
        }
        Err(e) => return Err(e.into()),
    };
    check_budget(&poly, args.max_budget)?;
    Ok(poly)
}

fn check_budget(poly: &LatticePolygon, max: i64) -> std::result::Result<(), Failure> {
    if poly.point_budget() > max {
        return Err(Failure::Usage(format!(
            "{poly} needs {} point conditions, above the limit {max} (raise --max-budget)",
            poly.point_budget()
        )));
    }
    Ok(())
}

fn json_string<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

#[derive(Serialize)]
struct SetAside<'a> {
    #[serde(flatten)]
    subdivision: &'a MarkedSubdivision,
    reason: String,
}

#[derive(Serialize)]
struct TropicalJson<'a> {
    polygon: &'a LatticePolygon,
    paths: usize,
    count: Option<&'a TropicalCount>,
    curves: &'a [crate::tropical::Curve],
    reducible: Vec<SetAside<'a>>,
    anomalies: Vec<SetAside<'a>>,
}

fn set_aside(list: &[(MarkedSubdivision, Defect)]) -> Vec<SetAside<'_>> {
    list.iter().map(|(s, d)| SetAside { subdivision: s, reason: d.to_string() }).collect()
}

fn run_command(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let threads = EnumerationOptions::from_env();
    match cmd {
        Command::GwEval { expr, json, unicode } => {
            let p = parse_gw_expression(&expr)?;
            if json {
                if p.is_constant() {
                    out.write_all(json_string(&p.constant_term()).as_bytes())?;
                } else {
                    out.write_all(json_string(&p).as_bytes())?;
                }
            } else if unicode {
                writeln!(out, "{}", p.to_unicode())?;
            } else {
                writeln!(out, "{p}")?;
            }
            Ok(EXIT_OK)
        }
        Command::GwEqual { left, right } => {
            let a = parse_gw_element(&left)?;
            let b = parse_gw_element(&right)?;
            if a.is_equivalent(&b) {
                writeln!(out, "equal")?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "not equal")?;
                Ok(EXIT_NOT_EQUAL)
            }
        }
        Command::Tropical { polygon, list_curves, json, svg, svg_scale } => {
            let poly = load_polygon(&polygon)?;
            let e = enumerate_curves_with(&poly, threads);
            let count = e.count();
            writeln!(out, "polygon {}", polygon_label(&poly))?;
            writeln!(out, "paths {}", e.paths)?;
            writeln!(out, "curves {}", e.curves.len())?;
            writeln!(out, "reducible set aside {}", e.rejected.reducible.len())?;
            writeln!(out, "anomalies {}", e.rejected.anomalies.len())?;
            if list_curves {
                for (i, c) in e.curves.iter().enumerate() {
                    let cells: Vec<String> = c.subdivision.cells().iter().map(|c| c.to_string()).collect();
                    writeln!(out, "curve {i}: {}  {}", c.multiplicity.motivic, cells.join(" "))?;
                }
            }
            if let Ok(c) = &count {
                writeln!(out, "motivic {}", c.motivic)?;
                writeln!(out, "{}  N={}  W={}", c.normal_form, c.complex, c.welschinger)?;
            }
            if let Some(path) = json {
                let doc = TropicalJson {
                    polygon: &poly,
                    paths: e.paths,
                    count: count.as_ref().ok(),
                    curves: &e.curves,
                    reducible: set_aside(&e.rejected.reducible),
                    anomalies: set_aside(&e.rejected.anomalies),
                };
                fs::write(&path, json_string(&doc))?;
            }
            if let Some(path) = svg {
                let subs: Vec<&MarkedSubdivision> = e.curves.iter().map(|c| &c.subdivision).collect();
                let opts = SvgOptions { scale: svg_scale, ..Default::default() };
                fs::write(&path, render_subdivisions(&poly, &subs, &opts))?;
            }
            if !e.rejected.reducible.is_empty() {
                writeln!(
                    err,
                    "note: {} reducible candidate(s) of arithmetic genus 0 were set aside",
                    e.rejected.reducible.len()
                )?;
            }
            count?;
            Ok(EXIT_OK)
        }
        Command::Invariant { polygon, json } => {
            let poly = load_polygon(&polygon)?;
            let c = enumerate_curves_with(&poly, threads).count()?;
            if json {
                out.write_all(json_string(&c).as_bytes())?;
            } else {
                writeln!(out, "{}  N={}  W={}", c.normal_form, c.complex, c.welschinger)?;
            }
            Ok(EXIT_OK)
        }
        Command::Table { chain, markdown, json, specialize, signature, max_budget } => {
            let chain = SurfaceChain::parse(&chain)?;
            for p in chain.polygons() {
                check_budget(p, max_budget)?;
            }
            let tables = build_tables_with(&chain, threads)?;
            if let Some(values) = specialize {
                write_specialized(&tables, &values, markdown, json, out)?;
            } else if let Some(sign) = signature {
                write_signatures(&tables, sign, markdown, json, out)?;
            } else if json {
                out.write_all(json_string(&tables).as_bytes())?;
            } else if markdown {
                for t in &tables {
                    writeln!(out, "{}", t.to_markdown())?;
                }
            } else {
                for t in &tables {
                    writeln!(out, "{}", polygon_label(&t.polygon))?;
                    for r in &t.rows {
                        writeln!(out, "  s={}: {}", r.s, r.value)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Oracle { kontsevich } => {
            writeln!(out, "{}", kontsevich_nd(kontsevich)?)?;
            Ok(EXIT_OK)
        }
    }
}

fn assignment(values: &[i64], s: u32) -> std::result::Result<BTreeMap<u32, i64>, Failure> {
    (1..=s)
        .map(|i| {
            let c = if values.len() == 1 {
                values[0]
            } else {
                *values.get(i as usize - 1).ok_or(Error::MissingIndex(i))?
            };
            Ok((i, c))
        })
        .collect()
}

#[derive(Serialize)]
struct EvaluatedRow<T: Serialize> {
    s: u32,
    value: T,
}

#[derive(Serialize)]
struct EvaluatedTable<'a, T: Serialize> {
    polygon: &'a LatticePolygon,
    rows: Vec<EvaluatedRow<T>>,
}

fn emit<T: Serialize + std::fmt::Display>(
    tables: Vec<EvaluatedTable<'_, T>>,
    header: &str,
    markdown: bool,
    json: bool,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    if json {
        return out.write_all(json_string(&tables).as_bytes());
    }
    for t in &tables {
        if markdown {
            writeln!(out, "### {}\n\n| s | {header} |\n|---|---|", polygon_label(t.polygon))?;
            for r in &t.rows {
                writeln!(out, "| {} | {} |", r.s, r.value)?;
            }
            writeln!(out)?;
        } else {
            writeln!(out, "{}", polygon_label(t.polygon))?;
            for r in &t.rows {
                writeln!(out, "  s={}: {}", r.s, r.value)?;
            }
        }
    }
    Ok(())
}

fn write_specialized(
    tables: &[InvariantTable],
    values: &[i64],
    markdown: bool,
    json: bool,
    out: &mut dyn Write,
) -> std::result::Result<(), Failure> {
    if values.is_empty() {
        return Err(Failure::Usage("--specialize needs at least one value".into()));
    }
    let mut evaluated = Vec::new();
    for t in tables {
        let mut rows = Vec::new();
        for r in &t.rows {
            let value = r.value.specialize(&assignment(values, r.s)?)?.simplify();
            rows.push(EvaluatedRow { s: r.s, value });
        }
        evaluated.push(EvaluatedTable { polygon: &t.polygon, rows });
    }
    Ok(emit(evaluated, "value", markdown, json, out)?)
}

fn write_signatures(
    tables: &[InvariantTable],
    sign: SignArg,
    markdown: bool,
    json: bool,
    out: &mut dyn Write,
) -> std::result::Result<(), Failure> {
    let sign = match sign {
        SignArg::Neg => ExtensionSign::Negative,
        SignArg::Pos => ExtensionSign::Positive,
    };
    let mut evaluated = Vec::new();
    for t in tables {
        let mut rows = Vec::new();
        for r in &t.rows {
            let signs: BTreeMap<u32, ExtensionSign> = (1..=r.s).map(|i| (i, sign)).collect();
            rows.push(EvaluatedRow { s: r.s, value: r.value.signature_profile(&signs)? });
        }
        evaluated.push(EvaluatedTable { polygon: &t.polygon, rows });
    }
    Ok(emit(evaluated, "signature", markdown, json, out)?)
}

/// Parses `args` (including the program name) and runs the command,
/// writing to `out` and `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match run_command(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Invariant(msg)) => {
            let _ = writeln!(err, "invariant violation: {msg}");
            EXIT_INVARIANT
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("gwcurves").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gw_commands() {
        assert_eq!(call(&["gw-eval", "8*<1> + 2*h"]).1, "2h + 8*<1>\n");
        assert_eq!(call(&["gw-eval", "--unicode", "b1*b2 + h"]).1, "h + β₁β₂\n");
        assert_eq!(call(&["gw-equal", "tr(-1;1)", "h"]).0, EXIT_OK);
        assert_eq!(call(&["gw-equal", "<1>", "<2>"]).0, EXIT_NOT_EQUAL);
        assert_eq!(call(&["gw-equal", "b1", "<2>"]).0, EXIT_USAGE);
        let (code, _, err) = call(&["gw-eval", "<0>"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("byte"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["invariant", "--polygon", "nowhere"]).0, EXIT_USAGE);
        assert_eq!(call(&["invariant", "--polygon", "p2:6"]).0, EXIT_USAGE);
        assert_eq!(call(&["oracle", "--kontsevich", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn small_invariants() {
        assert_eq!(call(&["invariant", "--polygon", "p2:3"]).1, "2h + 8*<1>  N=12  W=8\n");
        assert_eq!(call(&["oracle", "--kontsevich", "4"]).1, "620\n");
        let (code, out, _) = call(&["table", "--chain", "BlF1", "--signature", "neg"]);
        assert_eq!(code, 0);
        assert!(out.contains("s=3: 2"), "{out}");
    }
}
