//! Command-line front end: manifold parsing, report rendering and exit-code
//! mapping. Output is fully deterministic for a fixed invocation.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::intlinalg::IntMatrix;
use crate::linking::LinkingForm;
use crate::manifolds::{self, Manifold};
use crate::tqft::{self, Level, PartitionResult};

const EXIT_CODES_HELP: &str = "Exit codes:\n  0  success\n  2  parse error (bad manifold name, matrix JSON or flags)\n  3  singular matrix / invalid presentation\n  4  enumeration budget or root-of-unity order exceeded\n  5  internal error\n\nManifold names: S3, S1xS2, L(p,q), Poincare, sum(A,B), @matrix.json.\nLevels N are integers; N = 0 uses the gcd(p, 0) = p convention for BF.";

#[derive(Parser, Debug)]
#[command(
    name = "abelian-tqft",
    version,
    about = "Exact abelian Chern-Simons and BF partition functions of closed oriented 3-manifolds",
    after_help = EXIT_CODES_HELP
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct TargetArgs {
    /// Catalog manifold: S3, S1xS2, L(p,q), Poincare, sum(A,B), @file.json
    #[arg(long)]
    pub manifold: Option<String>,
    /// Path to a surgery matrix JSON file {"rows":r,"cols":c,"entries":[[..]]}
    #[arg(long)]
    pub matrix_file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct ComputeArgs {
    /// Cap on enumerated torsion elements (CS) or element pairs (BF)
    #[arg(long, default_value_t = tqft::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Significant digits for the numeric view
    #[arg(long, default_value_t = tqft::DEFAULT_PRECISION)]
    pub precision: u32,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// First homology as free rank + invariant factors
    Homology {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Torsion linking form on the SNF generators
    LinkingForm {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Chern-Simons partition function at a level
    Cs {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, allow_negative_numbers = true)]
        level: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[command(flatten)]
        compute: ComputeArgs,
    },
    /// BF partition function at a level
    Bf {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, allow_negative_numbers = true)]
        level: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[command(flatten)]
        compute: ComputeArgs,
    },
    /// Exact |Z_CS|^2 vs Z_BF comparison at a level
    Compare {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, allow_negative_numbers = true)]
        level: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[command(flatten)]
        compute: ComputeArgs,
    },
    /// Sweep CS and BF over an inclusive level range a..b
    Sweep {
        #[command(flatten)]
        target: TargetArgs,
        /// Inclusive integer range, e.g. 1..6 or -3..3
        #[arg(long, allow_hyphen_values = true)]
        levels: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        compute: ComputeArgs,
    },
}

/// Maps an error to the documented process exit code.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::NotCoprime { .. }
        | Error::InvalidArgument(_)
        | Error::NonSquare { .. }
        | Error::NonSymmetric
        | Error::BadShape(_)
        | Error::Json(_) => 2,
        Error::SingularMatrix => 3,
        Error::BudgetExceeded { .. } | Error::OrderOverflow { .. } => 4,
        _ => 5,
    }
}

/// Parses a manifold spec: catalog name, `L(p,q)`, `sum(A,B)` or `@file`.
pub fn parse_manifold(spec: &str) -> Result<Manifold> {
    let mut p = SpecParser {
        input: spec,
        pos: 0,
    };
    p.skip_ws();
    let m = p.parse_expr()?;
    p.skip_ws();
    if p.pos != p.input.len() {
        return Err(Error::Parse {
            pos: p.pos,
            msg: format!("unexpected trailing input: {:?}", &p.input[p.pos..]),
        });
    }
    Ok(m)
}

struct SpecParser<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> SpecParser<'a> {
    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(' ') {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(Error::Parse {
                pos: self.pos,
                msg: format!("expected {token:?}"),
            })
        }
    }

    fn parse_int(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.rest().starts_with('-') {
            self.pos += 1;
        }
        while self
            .rest()
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_digit())
        {
            self.pos += 1;
        }
        self.input[start..self.pos].parse().map_err(|_| Error::Parse {
            pos: start,
            msg: "expected an integer".into(),
        })
    }

    fn parse_expr(&mut self) -> Result<Manifold> {
        self.skip_ws();
        if self.eat("sum(") {
            let a = self.parse_expr()?;
            self.skip_ws();
            self.expect(",")?;
            let b = self.parse_expr()?;
            self.skip_ws();
            self.expect(")")?;
            return Ok(manifolds::connected_sum(&a, &b));
        }
        if self.eat("L(") {
            let p = self.parse_int()?;
            self.skip_ws();
            self.expect(",")?;
            self.skip_ws();
            let q = self.parse_int()?;
            self.skip_ws();
            self.expect(")")?;
            return manifolds::lens_space(p, q);
        }
        if self.eat("S1xS2") {
            return Ok(manifolds::s1_x_s2());
        }
        if self.eat("S3") {
            return Ok(manifolds::sphere3());
        }
        if self.eat("Poincare") {
            return Ok(manifolds::poincare_sphere());
        }
        if self.eat("@") {
            // file path runs to the end of a sum argument or of the input
            let start = self.pos;
            while let Some(c) = self.rest().chars().next() {
                if c == ',' || c == ')' {
                    break;
                }
                self.pos += 1;
            }
            let path = self.input[start..self.pos].trim();
            if path.is_empty() {
                return Err(Error::Parse {
                    pos: start,
                    msg: "expected a file path after '@'".into(),
                });
            }
            return load_matrix_manifold(path.as_ref());
        }
        Err(Error::Parse {
            pos: self.pos,
            msg: "expected S3, S1xS2, L(p,q), Poincare, sum(...), or @file".into(),
        })
    }
}

fn load_matrix_manifold(path: &std::path::Path) -> Result<Manifold> {
    let text = std::fs::read_to_string(path)?;
    let m: IntMatrix = serde_json::from_str(&text)?;
    Manifold::from_matrix(path.display().to_string(), m)
}

fn resolve_target(target: &TargetArgs) -> Result<Manifold> {
    match (&target.manifold, &target.matrix_file) {
        (Some(spec), None) => parse_manifold(spec),
        (None, Some(path)) => load_matrix_manifold(path),
        (Some(_), Some(_)) => Err(Error::InvalidArgument(
            "pass either --manifold or --matrix-file, not both".into(),
        )),
        (None, None) => Err(Error::InvalidArgument(
            "one of --manifold or --matrix-file is required".into(),
        )),
    }
}

fn parse_level_range(s: &str) -> Result<(i64, i64)> {
    let (a, b) = s.split_once("..").ok_or_else(|| Error::Parse {
        pos: 0,
        msg: format!("expected a range a..b, got {s:?}"),
    })?;
    let lo: i64 = a.trim().parse().map_err(|_| Error::Parse {
        pos: 0,
        msg: format!("bad range start {a:?}"),
    })?;
    let hi: i64 = b.trim().parse().map_err(|_| Error::Parse {
        pos: a.len() + 2,
        msg: format!("bad range end {b:?}"),
    })?;
    if lo > hi {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("empty range {lo}..{hi}"),
        });
    }
    Ok((lo, hi))
}

fn exact_display(r: &PartitionResult) -> String {
    if r.exact.term_count() <= 8 {
        r.exact.to_string()
    } else {
        format!("{:.12} + {:.12}i (err <= {:.3e})", r.numeric.re, r.numeric.im, r.numeric.err)
    }
}

fn torsion_str(torsion: &[BigInt]) -> String {
    let parts: Vec<String> = torsion.iter().map(BigInt::to_string).collect();
    format!("({})", parts.join(","))
}

fn render_partition(name: &str, r: &PartitionResult, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(format!("{}\n", serde_json::to_string(r)?)),
        Format::Csv => {
            let mut out = String::from("manifold,theory,N,re,im,err,exact\n");
            writeln!(
                out,
                "{},{},{},{:.12},{:.12},{:.3e},{}",
                name,
                r.theory.as_str(),
                r.level,
                r.numeric.re,
                r.numeric.im,
                r.numeric.err,
                r.exact
            )
            .unwrap();
            Ok(out)
        }
        Format::Table => {
            let mut out = String::new();
            writeln!(out, "manifold: {name}").unwrap();
            writeln!(out, "theory:   {}", r.theory.as_str()).unwrap();
            writeln!(out, "level:    {}", r.level).unwrap();
            writeln!(out, "torsion:  {}", torsion_str(&r.torsion)).unwrap();
            writeln!(out, "exact:    {}", exact_display(r)).unwrap();
            writeln!(
                out,
                "numeric:  {:.12} + {:.12}i (err <= {:.3e})",
                r.numeric.re, r.numeric.im, r.numeric.err
            )
            .unwrap();
            if r.via_closed_form {
                writeln!(out, "note:     value from gcd closed form (budget delegation)").unwrap();
            }
            Ok(out)
        }
    }
}

fn render_homology(m: &Manifold, format: Format) -> Result<String> {
    let g = m.homology()?;
    match format {
        Format::Json => {
            let torsion: Vec<serde_json::Number> = g
                .torsion_orders()
                .iter()
                .map(|p| p.to_string().parse().expect("integer"))
                .collect();
            let v = serde_json::json!({
                "manifold": m.name(),
                "free_rank": g.free_rank(),
                "torsion": torsion,
            });
            Ok(format!("{v}\n"))
        }
        Format::Csv => Ok(format!(
            "manifold,free_rank,torsion\n{},{},{}\n",
            m.name(),
            g.free_rank(),
            torsion_str(g.torsion_orders()).replace(',', ";"),
        )),
        Format::Table => Ok(format!(
            "manifold:  {}\nfree rank: {}\ntorsion:   {}\ngroup:     {}\n",
            m.name(),
            g.free_rank(),
            torsion_str(g.torsion_orders()),
            g
        )),
    }
}

fn render_linking_form(m: &Manifold, format: Format) -> Result<String> {
    let form = m.linking_form()?;
    match format {
        Format::Json => Ok(format!("{}\n", serde_json::to_string(&form)?)),
        Format::Csv => {
            let mut out = String::from("i,j,q\n");
            for (i, row) in form.entries().iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    writeln!(out, "{i},{j},{}", e.as_fraction_string()).unwrap();
                }
            }
            Ok(out)
        }
        Format::Table => {
            let mut out = String::new();
            writeln!(out, "manifold: {}", m.name()).unwrap();
            writeln!(
                out,
                "torsion:  {}",
                torsion_str(form.group().torsion_orders())
            )
            .unwrap();
            if form.entries().is_empty() {
                writeln!(out, "Q: (empty form, trivial torsion)").unwrap();
            } else {
                writeln!(out, "Q:").unwrap();
                for row in form.entries() {
                    let cells: Vec<String> =
                        row.iter().map(|e| format!("{:>8}", e.as_fraction_string())).collect();
                    writeln!(out, "  [{}]", cells.join(" ")).unwrap();
                }
            }
            Ok(out)
        }
    }
}

fn render_compare(
    name: &str,
    form: &LinkingForm,
    level: Level,
    budget: u64,
    format: Format,
) -> Result<String> {
    let cmp = tqft::compare_cs_bf_with_budget(form, level, budget)?;
    match format {
        Format::Json => Ok(format!("{}\n", serde_json::to_string(&cmp)?)),
        Format::Csv => {
            let abs_sq = cmp
                .abs_sq_cs
                .to_integer()
                .map(|v| v.to_string())
                .unwrap_or_else(|| format!("{:.12}", cmp.abs_sq_cs.numeric(12).re));
            Ok(format!(
                "manifold,N,absZ_CS_sq,Z_BF,equal\n{},{},{},{},{}\n",
                name,
                level.0,
                abs_sq,
                cmp.bf.to_integer().expect("BF value is an integer"),
                cmp.equal
            ))
        }
        Format::Table => {
            let abs_sq = cmp
                .abs_sq_cs
                .to_integer()
                .map(|v| v.to_string())
                .unwrap_or_else(|| cmp.abs_sq_cs.to_string());
            Ok(format!(
                "manifold:  {}\nlevel:     {}\n|Z_CS|^2:  {}\nZ_BF:      {}\nequal:     {}\n",
                name,
                level.0,
                abs_sq,
                cmp.bf.to_integer().expect("BF value is an integer"),
                cmp.equal
            ))
        }
    }
}

fn render_sweep(
    name: &str,
    form: &LinkingForm,
    lo: i64,
    hi: i64,
    budget: u64,
    format: Format,
) -> Result<String> {
    #[derive(serde::Serialize)]
    struct Row {
        n: i64,
        z_cs_re: f64,
        z_cs_im: f64,
        abs_z_cs_sq: String,
        z_bf: String,
        equal: bool,
    }
    let mut rows = Vec::new();
    for n in lo..=hi {
        let level = Level(n);
        let cs = tqft::z_cs_with_budget(form, level, budget)?;
        let cmp = tqft::compare_cs_bf_with_budget(form, level, budget)?;
        let abs_sq = cmp
            .abs_sq_cs
            .to_integer()
            .map(|v| v.to_string())
            .unwrap_or_else(|| format!("{:.12}", cmp.abs_sq_cs.numeric(12).re));
        rows.push(Row {
            n,
            z_cs_re: cs.numeric.re,
            z_cs_im: cs.numeric.im,
            abs_z_cs_sq: abs_sq,
            z_bf: cmp.bf.to_integer().expect("BF value is an integer").to_string(),
            equal: cmp.equal,
        });
    }
    match format {
        Format::Json => {
            let v = serde_json::json!({ "manifold": name, "rows": rows });
            Ok(format!("{v}\n"))
        }
        Format::Csv | Format::Table => {
            let mut out = String::from("N,Z_CS_re,Z_CS_im,absZ_CS_sq,Z_BF,equal\n");
            for r in rows {
                writeln!(
                    out,
                    "{},{:.12},{:.12},{},{},{}",
                    r.n, r.z_cs_re, r.z_cs_im, r.abs_z_cs_sq, r.z_bf, r.equal
                )
                .unwrap();
            }
            Ok(out)
        }
    }
}

/// Runs a parsed invocation and returns the report text.
pub fn run(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Homology { target, format } => {
            let m = resolve_target(target)?;
            render_homology(&m, *format)
        }
        Command::LinkingForm { target, format } => {
            let m = resolve_target(target)?;
            render_linking_form(&m, *format)
        }
        Command::Cs {
            target,
            level,
            format,
            compute,
        } => {
            let m = resolve_target(target)?;
            let form = m.linking_form()?;
            let mut r = tqft::z_cs_with_budget(&form, Level(*level), compute.budget)?;
            r.numeric = r.exact.numeric(compute.precision);
            render_partition(m.name(), &r, *format)
        }
        Command::Bf {
            target,
            level,
            format,
            compute,
        } => {
            let m = resolve_target(target)?;
            let form = m.linking_form()?;
            let mut r = tqft::z_bf_with_budget(&form, Level(*level), compute.budget)?;
            r.numeric = r.exact.numeric(compute.precision);
            render_partition(m.name(), &r, *format)
        }
        Command::Compare {
            target,
            level,
            format,
            compute,
        } => {
            let m = resolve_target(target)?;
            let form = m.linking_form()?;
            render_compare(m.name(), &form, Level(*level), compute.budget, *format)
        }
        Command::Sweep {
            target,
            levels,
            format,
            compute,
        } => {
            let m = resolve_target(target)?;
            let form = m.linking_form()?;
            let (lo, hi) = parse_level_range(levels)?;
            render_sweep(m.name(), &form, lo, hi, compute.budget, *format)
        }
    }
}
