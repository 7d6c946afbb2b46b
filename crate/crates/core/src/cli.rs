//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage, 2 domain error, 3 resource error,
//! 4 verification mismatch.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::bernstein_atlas::{self, invariants, morita_classes, BernsteinShape};
use crate::iwahori_spherical::{self, monomial_symmetric_eval, DominantWeight};
use crate::symbolic_eq::{decomposition, EqDecomposition};
use crate::torus_model::{self, TorusPoint, DEFAULT_BUDGET, DEFAULT_GRID};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "extquot",
    version,
    about = "Extended quotients of tori and the tempered-dual components of GL(n)"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Emit a single JSON document instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Components of the extended quotient T^n // S_n.
    Eq {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Compare brute-force orbit counts on (Z/m)^n with the symbolic counts.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
        /// Maximum number of grid points m^n.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[command(flatten)]
        output: Output,
    },
    /// All Bernstein shapes of GL(n) with their tempered decompositions.
    BernsteinEnumerate {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Morita classification of shapes given as "m:e;m:e;...".
    BernsteinClassify {
        #[arg(long = "shape", required = true)]
        shapes: Vec<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Match Steinberg-block parameter spaces with the components of T^n // S_n.
    Iwahori {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Evaluate a monomial symmetric function on the spherical component.
    SphericalEval {
        /// Torus dimension; defaults to the weight length.
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated integer weight, e.g. "2,0".
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Comma-separated angles in [0, 1), e.g. "0.25,0.25".
        #[arg(long)]
        point: String,
        #[command(flatten)]
        output: Output,
    },
}

enum Failure {
    Error(Error),
    Mismatch,
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) => EXIT_DOMAIN,
        Error::Resource(_) => EXIT_RESOURCE,
        Error::Consistency(_) => EXIT_MISMATCH,
    }
}

/// Exit status for a verification report.
pub fn verify_exit_code(report: &torus_model::CountReport) -> i32 {
    if report.ok {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match CliConfig::try_parse_from(args) {
        Ok(config) => run(&config, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            code
        }
    }
}

pub fn run(config: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &config.command {
        Command::Eq { n, output } => cmd_eq(*n, output.json, out),
        Command::Verify {
            n,
            grid,
            budget,
            output,
        } => cmd_verify(*n, *grid, *budget, output.json, out),
        Command::BernsteinEnumerate { n, output } => cmd_enumerate(*n, output.json, out),
        Command::BernsteinClassify { shapes, output } => cmd_classify(shapes, output.json, out),
        Command::Iwahori { n, output } => cmd_iwahori(*n, output.json, out),
        Command::SphericalEval {
            n,
            weight,
            point,
            output,
        } => cmd_spherical(*n, weight, point, output.json, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Mismatch) => {
            let _ = writeln!(err, "verification mismatch");
            EXIT_MISMATCH
        }
        Err(Failure::Error(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit_json<T: Serialize>(value: &T, out: &mut dyn Write) -> Outcome {
    serde_json::to_writer(&mut *out, value).map_err(|e| Failure::Io(e.into()))?;
    writeln!(out)?;
    Ok(())
}

fn write_decomposition(eq: &EqDecomposition, out: &mut dyn Write) -> Outcome {
    for c in &eq.components {
        let index: Vec<String> = c.index.iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "  {:<16} {:<28} dim {}",
            index.join(" "),
            c.descriptor.to_string(),
            c.descriptor.dimension()
        )?;
    }
    Ok(())
}

fn cmd_eq(n: usize, json: bool, out: &mut dyn Write) -> Outcome {
    let eq = decomposition(n)?;
    if json {
        return emit_json(&eq, out);
    }
    writeln!(
        out,
        "T^{n} // S_{n}: {} components, one per conjugacy class",
        eq.components.len()
    )?;
    write_decomposition(&eq, out)
}

fn cmd_verify(n: usize, grid: usize, budget: usize, json: bool, out: &mut dyn Write) -> Outcome {
    let report = torus_model::verify_counts(n, grid, budget)?;
    if json {
        emit_json(&report, out)?;
    } else {
        writeln!(out, "S_{n} acting on (Z/{grid})^{n}")?;
        writeln!(out, "  {:<16} {:>10} {:>10}", "class", "oracle", "symbolic")?;
        for c in &report.classes {
            let mark = if c.oracle == c.symbolic {
                ""
            } else {
                "  MISMATCH"
            };
            writeln!(
                out,
                "  {:<16} {:>10} {:>10}{mark}",
                c.partition.to_string(),
                c.oracle,
                c.symbolic
            )?;
        }
        writeln!(out, "total {}  ok {}", report.total, report.ok)?;
    }
    match verify_exit_code(&report) {
        EXIT_OK => Ok(()),
        _ => Err(Failure::Mismatch),
    }
}

fn cmd_enumerate(n: usize, json: bool, out: &mut dyn Write) -> Outcome {
    let atlas = bernstein_atlas::tempered_atlas(n)?;
    if json {
        return emit_json(&json!({ "n": n, "shapes": atlas }), out);
    }
    writeln!(out, "{} Bernstein shapes for GL({n})", atlas.len())?;
    for a in &atlas {
        let inv = invariants(&a.shape);
        writeln!(
            out,
            "{}  {}  exponents {:?}  d={}  components {}",
            a.tag,
            a.shape,
            inv.exponents,
            inv.d,
            a.decomposition.components.len()
        )?;
        write_decomposition(&a.decomposition, out)?;
    }
    Ok(())
}

fn cmd_classify(raw: &[String], json: bool, out: &mut dyn Write) -> Outcome {
    let shapes = raw
        .iter()
        .map(|s| s.parse::<BernsteinShape>())
        .collect::<crate::Result<Vec<_>>>()?;
    let classes = morita_classes(&shapes);
    let equivalent = classes.len() == 1;
    if json {
        return emit_json(
            &json!({ "shapes": shapes, "classes": classes, "equivalent": equivalent }),
            out,
        );
    }
    for (i, s) in shapes.iter().enumerate() {
        let inv = invariants(s);
        writeln!(
            out,
            "shape {i}: {s}  n={}  exponents {:?}  d={}",
            s.n(),
            inv.exponents,
            inv.d
        )?;
    }
    if shapes.len() > 2 {
        writeln!(out, "classes: {classes:?}")?;
    }
    writeln!(out, "equivalent: {equivalent}")?;
    Ok(())
}

fn cmd_iwahori(n: usize, json: bool, out: &mut dyn Write) -> Outcome {
    let report = iwahori_spherical::parameter_space_check(n)?;
    if json {
        emit_json(&report, out)?;
    } else {
        writeln!(out, "Steinberg blocks of GL({n}) against T^{n} // S_{n}")?;
        for m in &report.matched {
            let weyl: Vec<String> = m.weyl.iter().map(|r| format!("S{r}")).collect();
            writeln!(
                out,
                "  blocks {:<16} W(M) = {:<14} {}",
                m.blocks.to_string(),
                weyl.join("x"),
                m.component
            )?;
        }
        writeln!(out, "matched {}  ok {}", report.matched.len(), report.ok)?;
    }
    if report.ok {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn parse_list<T: std::str::FromStr>(raw: &str, what: &str) -> crate::Result<Vec<T>> {
    raw.split(',')
        .map(|t| {
            t.trim()
                .parse::<T>()
                .map_err(|_| Error::Domain(format!("{what} entry {t:?} does not parse")))
        })
        .collect()
}

fn cmd_spherical(
    n: Option<usize>,
    weight: &str,
    point: &str,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let weight = DominantWeight::dominant(parse_list::<i64>(weight, "weight")?)?;
    let point = TorusPoint::continuous(parse_list::<f64>(point, "point")?)?;
    let dim = weight.exponents().len();
    if let Some(n) = n {
        if n != dim {
            return Err(
                Error::Domain(format!("--n {n} does not match weight length {dim}")).into(),
            );
        }
    }
    let component = iwahori_spherical::spherical_component(dim)?;
    let value = monomial_symmetric_eval(&weight, &point)?;
    if json {
        let TorusPoint::Continuous { angles } = &point else {
            unreachable!("constructed as continuous")
        };
        return emit_json(
            &json!({
                "n": dim,
                "component": component.to_string(),
                "weight": weight.exponents(),
                "point": angles,
                "value": { "re": value.re, "im": value.im },
            }),
            out,
        );
    }
    writeln!(out, "spherical component: {component}")?;
    writeln!(
        out,
        "m_{:?} = {} {:+}i",
        weight.exponents(),
        value.re,
        value.im
    )?;
    Ok(())
}
