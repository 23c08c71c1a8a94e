//! Command-line front end. [`run`] is the whole program minus process exit,
//! so tests can drive it in-process.
//!
//! Exit codes: 0 success, 1 class or verification failure, 2 usage error.

mod verify;

use std::ffi::OsString;
use std::io::{self, Write};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bijections;
use crate::classes::{self, ClassId, ClassListing};
use crate::error::Error;
use crate::odd_ferrers::OddFerrersGraph;
use crate::partition::Partition;
use crate::qseries;

pub use verify::{Check, VerifyReport, VerifyRow};

/// Largest class index accepted on the command line.
pub const MAX_N: u64 = 100_000;
/// Largest partition weight accepted on the command line.
pub const MAX_INPUT_WEIGHT: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "nu-partitions",
    version,
    about = "Count, enumerate and map the partition classes counted by p_nu(n)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print "n<TAB>count" lines for a class or for p_nu.
    Count(CountArgs),
    /// List the members of a class in canonical order.
    Enumerate(EnumerateArgs),
    /// Apply one of the bijections to a partition.
    Map(MapArgs),
    /// Run the invariant suites and print a PASS/FAIL table.
    Verify(VerifyArgs),
    /// Draw an odd Ferrers graph.
    Render(RenderArgs),
}

/// A class tag, or `pnu` for the series coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountClass {
    Class(ClassId),
    Pnu,
}

impl FromStr for CountClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "pnu" {
            return Ok(CountClass::Pnu);
        }
        s.parse::<ClassId>()
            .map(CountClass::Class)
            .map_err(|_| format!("unknown class {s:?}, expected one of O, S, D, DO, pnu"))
    }
}

fn parse_n(s: &str) -> Result<u64, String> {
    let n: u64 = s
        .parse()
        .map_err(|_| format!("{s:?} is not a nonnegative integer"))?;
    if n > MAX_N {
        return Err(format!("{n} exceeds the supported maximum {MAX_N}"));
    }
    Ok(n)
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let p: Partition = s.parse().map_err(|e: Error| e.to_string())?;
    if p.weight() > MAX_INPUT_WEIGHT {
        return Err(format!(
            "weight {} exceeds the supported maximum {MAX_INPUT_WEIGHT}",
            p.weight()
        ));
    }
    Ok(p)
}

fn parse_shape(s: &str) -> Result<OddFerrersGraph, String> {
    OddFerrersGraph::new(parse_partition(s)?).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// O, S, D, DO or pnu.
    #[arg(long)]
    pub class: CountClass,
    #[arg(long, value_parser = parse_n, conflicts_with = "max_n", required_unless_present = "max_n")]
    pub n: Option<u64>,
    /// Print every n from 0 to this value.
    #[arg(long, value_parser = parse_n)]
    pub max_n: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// O, S, D or DO.
    #[arg(long)]
    pub class: ClassId,
    #[arg(long, value_parser = parse_n)]
    pub n: u64,
    #[arg(long, value_enum, default_value_t = ListFormat::Text)]
    pub format: ListFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    #[value(name = "phi")]
    Phi,
    #[value(name = "phi-inverse")]
    PhiInverse,
    #[value(name = "o-to-d")]
    OToD,
    #[value(name = "d-to-o")]
    DToO,
    #[value(name = "d-to-do")]
    DToDo,
    #[value(name = "do-to-d")]
    DoToD,
    #[value(name = "sc-to-distinct-odd")]
    ScToDistinctOdd,
    #[value(name = "distinct-odd-to-sc")]
    DistinctOddToSc,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    #[arg(value_enum)]
    pub map: MapName,
    /// Comma-separated parts in decreasing order (a shape for phi and o-to-d).
    #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
    pub input: Partition,
    /// Check that the image lies in the target class before printing it.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Upper end of the n range for every selected check (defaults: 25 for
    /// roundtrips, 40 for counts and series).
    #[arg(long, value_parser = parse_n)]
    pub max_n: Option<u64>,
    #[arg(long, value_enum, default_value_t = ChecksArg::All)]
    pub checks: ChecksArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChecksArg {
    All,
    Counts,
    Roundtrips,
    Series,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RenderFormat {
    Ascii,
    Json,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long, value_parser = parse_shape)]
    pub shape: OddFerrersGraph,
    #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
    pub format: RenderFormat,
}

enum Failure {
    /// A class predicate or invariant failed: exit 1.
    Class(Error),
    /// Verification found a counterexample (already reported): exit 1.
    Verify,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Class(e)
    }
}

/// Parses `args` (program name first) and runs the command.
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
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Class(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Verify) => 1,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Count(args) => cmd_count(args, out),
        Command::Enumerate(args) => cmd_enumerate(args, out),
        Command::Map(args) => cmd_map(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Render(args) => cmd_render(args, out),
    }
}

fn cmd_count(args: &CountArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let (lo, hi) = match (args.n, args.max_n) {
        (Some(n), _) => (n, n),
        (None, Some(m)) => (0, m),
        (None, None) => unreachable!("clap requires --n or --max-n"),
    };
    match args.class {
        CountClass::Pnu => {
            let table = qseries::p_nu_table(hi as usize)?;
            for n in lo..=hi {
                writeln!(out, "{n}\t{}", table[n as usize])?;
            }
        }
        CountClass::Class(class) => {
            for n in lo..=hi {
                writeln!(out, "{n}\t{}", classes::count(class, n))?;
            }
        }
    }
    Ok(())
}

fn cmd_enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let listing = ClassListing::new(args.class, args.n);
    match args.format {
        ListFormat::Text => {
            for p in &listing.members {
                writeln!(out, "{p}")?;
            }
        }
        ListFormat::Json => {
            let json = serde_json::to_string(&listing).map_err(io::Error::from)?;
            writeln!(out, "{json}")?;
        }
    }
    Ok(())
}

fn as_graph(p: &Partition) -> Result<OddFerrersGraph, Failure> {
    Ok(OddFerrersGraph::new(p.clone())?)
}

fn postcondition(ok: bool, what: impl FnOnce() -> String) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Class(Error::PostconditionViolated(what())))
    }
}

fn cmd_map(args: &MapArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let input = &args.input;
    let weight_index = |w: u64, k: u64| (w.saturating_sub(1)) / k;
    let image: String = match args.map {
        MapName::Phi => {
            let g = as_graph(input)?;
            if args.check {
                bijections::phi_verified(&g)?.to_string()
            } else {
                bijections::phi(&g)?.to_string()
            }
        }
        MapName::PhiInverse => {
            let g = bijections::phi_inverse(input)?;
            if args.check {
                let n = weight_index(g.weight(), 2);
                postcondition(classes::is_in_o(&g, n), || {
                    format!("{g} is not in O_{}", 2 * n + 1)
                })?;
            }
            g.to_string()
        }
        MapName::OToD => {
            let g = as_graph(input)?;
            let d = bijections::o_to_d(&g)?;
            if args.check {
                let n = weight_index(d.weight(), 2);
                postcondition(classes::is_in_d(&d, n), || {
                    format!("{d} is not in D_{}", 2 * n + 1)
                })?;
            }
            d.to_string()
        }
        MapName::DToO => {
            let g = bijections::d_to_o(input)?;
            if args.check {
                let n = weight_index(g.weight(), 2);
                postcondition(classes::is_in_o(&g, n), || {
                    format!("{g} is not in O_{}", 2 * n + 1)
                })?;
            }
            g.to_string()
        }
        MapName::DToDo => {
            let p = bijections::d_to_do(input)?;
            if args.check {
                let n = weight_index(p.weight(), 4);
                postcondition(classes::is_in_do(&p, n), || {
                    format!("{p} is not in DO_{}", 4 * n + 1)
                })?;
            }
            p.to_string()
        }
        MapName::DoToD => {
            let p = bijections::do_to_d(input)?;
            if args.check {
                let n = weight_index(p.weight(), 2);
                postcondition(classes::is_in_d(&p, n), || {
                    format!("{p} is not in D_{}", 2 * n + 1)
                })?;
            }
            p.to_string()
        }
        MapName::ScToDistinctOdd => {
            let p = bijections::sc_to_distinct_odd(input)?;
            if args.check {
                postcondition(p.is_distinct() && p.all_odd(), || {
                    format!("{p} does not have distinct odd parts")
                })?;
            }
            p.to_string()
        }
        MapName::DistinctOddToSc => {
            let p = bijections::distinct_odd_to_sc(input)?;
            if args.check {
                postcondition(p.is_self_conjugate(), || {
                    format!("{p} is not self-conjugate")
                })?;
            }
            p.to_string()
        }
    };
    writeln!(out, "{image}")?;
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let checks: &[Check] = match args.checks {
        ChecksArg::All => &[Check::Counts, Check::Roundtrips, Check::Series],
        ChecksArg::Counts => &[Check::Counts],
        ChecksArg::Roundtrips => &[Check::Roundtrips],
        ChecksArg::Series => &[Check::Series],
    };
    let mut all_pass = true;
    let mut first_failure = None;
    writeln!(out, "check\tn\tresult\tdetail")?;
    for &check in checks {
        let max_n = args.max_n.unwrap_or(check.default_max_n());
        let report = verify::run_check(check, max_n)?;
        for row in &report.rows {
            writeln!(
                out,
                "{}\t{}\t{}\t{}",
                check.as_str(),
                row.n,
                if row.pass { "PASS" } else { "FAIL" },
                row.detail
            )?;
        }
        if !report.passed() {
            all_pass = false;
            if first_failure.is_none() {
                first_failure = report.counterexample.clone();
            }
        }
    }
    if all_pass {
        writeln!(out, "PASS")?;
        Ok(())
    } else {
        writeln!(out, "FAIL")?;
        if let Some(c) = first_failure {
            writeln!(out, "counterexample: {c}")?;
        }
        Err(Failure::Verify)
    }
}

fn cmd_render(args: &RenderArgs, out: &mut dyn Write) -> Result<(), Failure> {
    match args.format {
        RenderFormat::Ascii => writeln!(out, "{}", args.shape.render_ascii())?,
        RenderFormat::Json => {
            let json = serde_json::to_string(&args.shape.to_json()).map_err(io::Error::from)?;
            writeln!(out, "{json}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("nu-partitions").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn count_examples() {
        assert_eq!(run_args(&["count", "--class", "S", "--n", "0"]).1, "0\t1\n");
        assert_eq!(run_args(&["count", "--class", "S", "--n", "5"]).1, "5\t3\n");
        assert_eq!(
            run_args(&["count", "--class", "pnu", "--max-n", "3"]).1,
            "0\t1\n1\t1\n2\t2\n3\t2\n"
        );
        assert_eq!(
            run_args(&["count", "--class", "S", "--max-n", "3"]).1,
            "0\t1\n1\t1\n2\t2\n3\t2\n"
        );
    }

    #[test]
    fn count_usage_errors() {
        assert_eq!(run_args(&["count", "--class", "S"]).0, 2);
        assert_eq!(run_args(&["count", "--class", "X", "--n", "1"]).0, 2);
        assert_eq!(
            run_args(&["count", "--class", "S", "--n", "1", "--max-n", "2"]).0,
            2
        );
        assert_eq!(run_args(&["count", "--class", "S", "--n", "-1"]).0, 2);
        assert_eq!(run_args(&["count", "--class", "S", "--n", "100001"]).0, 2);
        assert_eq!(run_args(&[]).0, 2);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            run_args(&["enumerate", "--class", "S", "--n", "1"]).1,
            "3,1,1\n"
        );
        assert_eq!(
            run_args(&["enumerate", "--class", "O", "--n", "0"]).1,
            "1\n"
        );
        let (code, out, _) = run_args(&["enumerate", "--class", "S", "--n", "5"]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l == "5,5,5,3,3"));
        assert_eq!(
            run_args(&["enumerate", "--class", "D", "--n", "5", "--format", "json"]).1,
            "{\"class\":\"D\",\"n\":5,\"count\":3,\"members\":[[11],[9,2],[6,5]]}\n"
        );
        assert_eq!(run_args(&["enumerate", "--class", "pnu", "--n", "1"]).0, 2);
    }

    #[test]
    fn map_examples() {
        assert_eq!(
            run_args(&["map", "phi", "--input", "3,3,2"]).1,
            "5,5,5,3,3\n"
        );
        assert_eq!(
            run_args(&["map", "phi-inverse", "--input", "5,5,5,3,3"]).1,
            "3,3,2\n"
        );
        assert_eq!(run_args(&["map", "d-to-do", "--input", "6,5"]).1, "9,7,5\n");
        assert_eq!(run_args(&["map", "do-to-d", "--input", "9,7,5"]).1, "6,5\n");
        assert_eq!(run_args(&["map", "o-to-d", "--input", "3,3,2"]).1, "6,5\n");
        assert_eq!(run_args(&["map", "d-to-o", "--input", "6,5"]).1, "3,3,2\n");
        assert_eq!(
            run_args(&["map", "sc-to-distinct-odd", "--input", "5,5,5,3,3"]).1,
            "9,7,5\n"
        );
        assert_eq!(
            run_args(&["map", "distinct-odd-to-sc", "--input", "7,5"]).1,
            "4,4,2,2\n"
        );
        assert_eq!(
            run_args(&["map", "phi", "--check", "--input", "2,1"]).1,
            "3,1,1\n"
        );
    }

    #[test]
    fn map_failures() {
        let (code, out, err) = run_args(&["map", "phi-inverse", "--input", "4,4,2,2"]);
        assert_eq!((code, out.as_str()), (1, ""));
        assert!(err.contains("MalformedSClass"), "{err}");
        let (code, _, err) = run_args(&["map", "do-to-d", "--input", "13,7,1"]);
        assert_eq!(code, 1);
        assert!(err.contains("MalformedDOClass"), "{err}");
        let (code, _, err) = run_args(&["map", "phi", "--input", "7,4,2,1"]);
        assert_eq!(code, 1);
        assert!(err.contains("NotSelfConjugate"), "{err}");
        assert_eq!(run_args(&["map", "phi", "--input", "3,5,3"]).0, 2);
        assert_eq!(run_args(&["map", "phi", "--input", "a,b"]).0, 2);
        assert_eq!(run_args(&["map", "phi", "--input", "-3"]).0, 2);
        assert_eq!(run_args(&["map", "phi", "--input", ""]).0, 1);
        assert_eq!(run_args(&["map", "psi", "--input", "1"]).0, 2);
        assert_eq!(run_args(&["map", "phi", "--input", "2000000"]).0, 2);
    }

    #[test]
    fn render_examples() {
        assert_eq!(
            run_args(&["render", "--shape", "3,3,2"]).1,
            "111\n122\n12\n"
        );
        assert_eq!(run_args(&["render", "--shape", "1"]).1, "1\n");
        assert_eq!(
            run_args(&["render", "--shape", "7,4,2,1"]).1,
            "1111111\n1222\n12\n1\n"
        );
        assert_eq!(
            run_args(&["render", "--shape", "3,3,2", "--format", "json"]).1,
            "{\"shape\":[3,3,2],\"weight\":11,\"row_sums\":[3,5,3]}\n"
        );
        assert_eq!(run_args(&["render", "--shape", "3,5"]).0, 2);
        assert_eq!(run_args(&["render", "--shape", ""]).0, 2);
    }

    #[test]
    fn verify_small() {
        let (code, out, _) = run_args(&["verify", "--max-n", "0"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().last(), Some("PASS"));
        let (code, out, _) = run_args(&["verify", "--max-n", "6", "--checks", "counts"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().filter(|l| l.starts_with("counts\t")).count(), 7);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }
}
