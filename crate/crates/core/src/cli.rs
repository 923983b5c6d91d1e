//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and writes either aligned text or JSON.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::doubles::{self, DoubleFamily};
use crate::duplication::{decompose, half, DuplicationSpec};
use crate::error::Error;
use crate::ideal::RelativeIdeal;
use crate::oracle::{Limits, Oracle};
use crate::semigroup::{ClassificationReport, ClassifyMethod, NumericalSemigroup};
use crate::verify;

#[derive(Parser, Debug)]
#[command(
    name = "sgdouble",
    version,
    about = "Numerical semigroups, relative ideals and almost symmetric doubles"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct SemigroupArgs {
    /// Generators, e.g. `3,5,7`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with_all = ["small", "conductor"])]
    gens: Option<Vec<i64>>,
    /// Elements below the conductor, e.g. `0,3`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, requires = "conductor")]
    small: Option<Vec<i64>>,
    /// Conductor for `--small`.
    #[arg(long, allow_negative_numbers = true)]
    conductor: Option<i64>,
}

#[derive(Args, Debug)]
struct IdealArgs {
    /// Ideal elements below its conductor, e.g. `0,2`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    ideal: Option<Vec<i64>>,
    /// Conductor of the ideal.
    #[arg(long, allow_negative_numbers = true)]
    ideal_conductor: i64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Definition,
    Biconditional,
    Pairing,
    All,
}

impl From<MethodArg> for ClassifyMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Definition => ClassifyMethod::Definition,
            MethodArg::Biconditional => ClassifyMethod::Biconditional,
            MethodArg::Pairing => ClassifyMethod::Pairing,
            MethodArg::All => ClassifyMethod::All,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
    Symmetric,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Basic invariants of a semigroup.
    Info(SemigroupArgs),
    /// Symmetry classification.
    Classify {
        #[command(flatten)]
        semigroup: SemigroupArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// The duplicate S ⋈^b E.
    Double {
        #[command(flatten)]
        semigroup: SemigroupArgs,
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
    },
    /// The one half T/2.
    Half(SemigroupArgs),
    /// Writes T as T/2 ⋈^b E.
    Decompose {
        #[command(flatten)]
        semigroup: SemigroupArgs,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
    },
    /// Almost symmetric doubles T with T/2 = S.
    EnumerateDoubles {
        #[command(flatten)]
        semigroup: SemigroupArgs,
        #[arg(long, value_enum)]
        parity: ParityArg,
        /// Bound on f(T) for the odd and symmetric families [default: 2f(S)+9].
        #[arg(long, allow_negative_numbers = true)]
        max_frobenius: Option<i64>,
    },
    /// An explicit even-type almost symmetric double.
    WitnessEven(SemigroupArgs),
    /// Cross-checks the library against the brute-force oracle.
    Verify {
        #[arg(long, default_value_t = 9, allow_negative_numbers = true)]
        max_frobenius: i64,
        /// Seed for the sampled ranges.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
    /// The verification suite ran and found violations.
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    let json = cli.json;
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            if json {
                let body = json!({ "error": e.kind(), "message": e.to_string() });
                let _ = writeln!(out, "{body}");
            } else {
                let _ = writeln!(err, "error: {e}");
            }
            1
        }
        Err(Failure::Verify) => 1,
    }
}

fn semigroup(args: &SemigroupArgs) -> std::result::Result<NumericalSemigroup, Failure> {
    match (&args.gens, args.conductor) {
        (Some(gens), _) => Ok(NumericalSemigroup::from_generators(gens)?),
        (None, Some(c)) => {
            let small = args.small.clone().unwrap_or_default();
            Ok(NumericalSemigroup::from_small_elements(&small, c)?)
        }
        (None, None) => Err(Failure::Usage(
            "a semigroup is required: --gens a,b,... or --small x,y,... --conductor c".into(),
        )),
    }
}

fn emit_json<V: Serialize>(out: &mut dyn Write, value: &V) -> Outcome {
    let text = serde_json::to_string_pretty(value).expect("library types serialize");
    writeln!(out, "{text}").map_err(|e| Failure::Usage(e.to_string()))
}

fn io(r: std::io::Result<()>) -> Outcome {
    r.map_err(|e| Failure::Usage(e.to_string()))
}

fn list(xs: &[i64]) -> String {
    let parts: Vec<String> = xs.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn write_report(out: &mut dyn Write, r: &ClassificationReport) -> std::io::Result<()> {
    writeln!(out, "frobenius          {}", r.frobenius)?;
    writeln!(out, "gaps               {}", list(&r.gaps))?;
    writeln!(out, "second-type gaps   {}", list(&r.second_type_gaps))?;
    writeln!(out, "pseudo-frobenius   {}", list(&r.pseudo_frobenius))?;
    writeln!(out, "type               {}", r.type_number)?;
    writeln!(out, "class              {}", r.symmetry_class)?;
    writeln!(out, "almost symmetric   {}", r.almost_symmetric)
}

#[derive(Serialize)]
struct InfoJson<'a> {
    semigroup: &'a NumericalSemigroup,
    multiplicity: i64,
    genus: usize,
    minimal_generators: Vec<i64>,
    frobenius: i64,
    pseudo_frobenius: Vec<i64>,
    #[serde(rename = "type")]
    type_number: usize,
}

#[derive(Serialize)]
struct DoubleJson<'a> {
    t: &'a NumericalSemigroup,
    spec: &'a DuplicationSpec,
    report: &'a ClassificationReport,
}

fn emit_double(out: &mut dyn Write, json: bool, spec: &DuplicationSpec) -> Outcome {
    let t = spec.duplicate();
    let report = t.classify(ClassifyMethod::All);
    if json {
        return emit_json(out, &DoubleJson { t: &t, spec, report: &report });
    }
    io((|| {
        writeln!(out, "S                  {}", spec.base())?;
        writeln!(out, "E                  {}", spec.ideal())?;
        writeln!(out, "b                  {}", spec.b())?;
        writeln!(out, "T                  {t}")?;
        write_report(out, &report)
    })())
}

fn emit_family(out: &mut dyn Write, json: bool, family: &DoubleFamily) -> Outcome {
    if json {
        return emit_json(out, family);
    }
    io((|| {
        writeln!(out, "S = {}  ({} doubles{})", family.base, family.members.len(),
            if family.exhaustive { ", complete" } else { "" })?;
        let rows: Vec<[String; 5]> = family
            .members
            .iter()
            .map(|c| {
                [
                    c.double.to_string(),
                    c.spec.b().to_string(),
                    c.spec.ideal().to_string(),
                    c.report.symmetry_class.to_string(),
                    c.report.type_number.to_string(),
                ]
            })
            .collect();
        let header = ["T", "b", "E", "class", "type"].map(String::from);
        let mut widths = header.clone().map(|h| h.chars().count());
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        for row in std::iter::once(&header).chain(&rows) {
            let cells: Vec<String> = row
                .iter()
                .zip(widths)
                .map(|(cell, w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
                .collect();
            writeln!(out, "{}", cells.join("  ").trim_end())?;
        }
        Ok(())
    })())
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Outcome {
    let json = cli.json;
    match cli.command {
        Command::Info(args) => {
            let s = semigroup(&args)?;
            let info = InfoJson {
                semigroup: &s,
                multiplicity: s.multiplicity(),
                genus: s.genus(),
                minimal_generators: s.minimal_generators(),
                frobenius: s.frobenius(),
                pseudo_frobenius: s.pseudo_frobenius(),
                type_number: s.type_number(),
            };
            if json {
                return emit_json(out, &info);
            }
            io((|| {
                writeln!(out, "semigroup          {s}")?;
                writeln!(out, "small elements     {}", list(s.small_elements()))?;
                writeln!(out, "conductor          {}", s.conductor())?;
                writeln!(out, "frobenius          {}", info.frobenius)?;
                writeln!(out, "multiplicity       {}", info.multiplicity)?;
                writeln!(out, "genus              {}", info.genus)?;
                writeln!(out, "generators         {}", list(&info.minimal_generators))?;
                writeln!(out, "pseudo-frobenius   {}", list(&info.pseudo_frobenius))?;
                writeln!(out, "type               {}", info.type_number)
            })())
        }
        Command::Classify { semigroup: args, method } => {
            let s = semigroup(&args)?;
            let report = s.classify(method.into());
            if json {
                return emit_json(out, &report);
            }
            io((|| {
                writeln!(out, "semigroup          {s}")?;
                write_report(out, &report)
            })())
        }
        Command::Double { semigroup: args, ideal, b } => {
            let s = semigroup(&args)?;
            let elems = ideal.ideal.unwrap_or_default();
            let e = RelativeIdeal::new(&s, &elems, ideal.ideal_conductor)?;
            let spec = DuplicationSpec::new(e, b)?;
            emit_double(out, json, &spec)
        }
        Command::Half(args) => {
            let t = semigroup(&args)?;
            let h = half(&t);
            if json {
                return emit_json(out, &h);
            }
            io(writeln!(out, "{h}"))
        }
        Command::Decompose { semigroup: args, b } => {
            let t = semigroup(&args)?;
            let spec = decompose(&t, b)?;
            emit_double(out, json, &spec)
        }
        Command::EnumerateDoubles { semigroup: args, parity, max_frobenius } => {
            let s = semigroup(&args)?;
            let bound = max_frobenius.unwrap_or(2 * s.frobenius() + 9);
            let family = match parity {
                ParityArg::Even => doubles::enumerate_even_doubles(&s),
                ParityArg::Odd => doubles::enumerate_odd_doubles(&s, bound)?,
                ParityArg::Symmetric => doubles::enumerate_symmetric_doubles(&s, bound)?,
            };
            emit_family(out, json, &family)
        }
        Command::WitnessEven(args) => {
            let s = semigroup(&args)?;
            let spec = doubles::witness_even_double(&s)?;
            emit_double(out, json, &spec)
        }
        Command::Verify { max_frobenius, seed } => {
            let oracle = Oracle::new(Limits::from_env());
            let report = verify::run(max_frobenius, seed, &oracle)?;
            if json {
                emit_json(out, &report)?;
            } else {
                io((|| {
                    writeln!(out, "{} semigroups with f(S) <= {max_frobenius}, seed {seed}", report.semigroups)?;
                    for c in &report.checks {
                        let status = if c.passed() { "ok" } else { "FAILED" };
                        writeln!(out, "{:<32}{:>8} cases  {status}", c.name, c.cases)?;
                        for v in c.violations.iter().take(10) {
                            writeln!(out, "    {v}")?;
                        }
                    }
                    Ok(())
                })())?;
            }
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verify)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("sgdouble").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn info_of_fixture() {
        let (code, out, _) = call(&["info", "--gens", "9,10,14,15"]);
        assert_eq!(code, 0);
        assert!(out.contains("frobenius          31"), "{out}");
    }

    #[test]
    fn usage_and_domain_errors() {
        assert_eq!(call(&["info"]).0, 2);
        assert_eq!(call(&["bogus"]).0, 2);
        assert_eq!(call(&["info", "--gens", "4,6"]).0, 1);
        let (code, out, _) = call(&["--json", "info", "--gens", "4,6"]);
        assert_eq!(code, 1);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["error"], "NonCoprimeGenerators");
        assert_eq!(call(&["--help"]).0, 0);
        assert_eq!(call(&["--version"]).0, 0);
    }

    #[test]
    fn negative_ideal_elements() {
        let (code, out, err) = call(&[
            "double", "--small", "0,3", "--conductor", "5", "--ideal", "-1,2", "--ideal-conductor", "4", "--b", "5",
        ]);
        assert!(code == 0 || code == 1, "{err}");
        assert!(!err.contains("unexpected argument"), "{err}{out}");
    }
}
