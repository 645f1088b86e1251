//! The `perimeter` command line, as a library so that tests can drive it with
//! their own registries.

mod output;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use perimeter::bijection::{orbit, phi_d, phi_d_inverse, xi};
use perimeter::counting::{
    a_even, a_odd, fibonacci, h_poly, sum_dif, table_a, table_b, table_c, CountTable,
};
use perimeter::enumerate::{EnumerationRequest, Family};
use perimeter::series::{
    parse_substitutions, substitute, SeriesParams, SeriesRegistry, TruncatedSeries,
};
use perimeter::verify::{run_check, CheckParams, CheckRegistry, VerificationReport};
use perimeter::{BoundarySequence, Error, LabeledPartition, Partition};

use output::{Cell, Format, Sink, Table};

#[derive(Parser, Debug)]
#[command(
    name = "perimeter",
    version,
    about = "Partitions by perimeter: enumeration, bijections, counting, series and verification"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for verification grids.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the members of a family.
    Enumerate {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "k")]
        d: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Apply a map, or follow an orbit.
    Map {
        #[command(subcommand)]
        action: MapAction,
    },
    /// Counting tables and closed forms.
    Count {
        #[arg(long, value_enum)]
        what: Counter,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        /// For sum-dif with d >= n: return the saturated total instead of an error.
        #[arg(long)]
        degenerate: bool,
    },
    /// Expand a named generating function.
    Series {
        #[arg(long)]
        name: String,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        order_y: Option<usize>,
        /// Substitute integers, e.g. p=1,q=2.
        #[arg(long)]
        at: Option<String>,
    },
    /// Check a theorem on a finite range.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum MapAction {
    Apply {
        #[arg(long, value_enum)]
        map: MapName,
        #[arg(long)]
        d: Option<usize>,
        /// A 01-word, a partition "a,b,c", or a labeled partition "a,b*,c".
        #[arg(long)]
        input: String,
    },
    Orbit {
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long)]
        input: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapName {
    Phi,
    PhiInverse,
    Xi,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Counter {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
    #[value(name = "h")]
    H,
    AOdd,
    AEven,
    SumDif,
    Fib,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Io(std::io::Error),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Domain(e) => e.fmt(f),
            Failure::Io(e) => e.fmt(f),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<bool, Failure>;

fn params(pairs: &[(&str, Option<Value>)]) -> Map<String, Value> {
    pairs
        .iter()
        .filter_map(|(k, v)| v.clone().map(|v| (k.to_string(), v)))
        .collect()
}

fn enumerate(
    sink: &mut Sink,
    family: Family,
    n: usize,
    d: Option<usize>,
    k: Option<usize>,
) -> Outcome {
    let request = EnumerationRequest::new(family, n, d, k)?;
    let items = request.run()?;
    let p = params(&[
        ("family", Some(family.name().into())),
        ("n", Some(n.into())),
        ("d", d.map(Value::from)),
        ("k", k.map(Value::from)),
    ]);
    match sink.format {
        Format::Text => {
            for item in items {
                sink.line(&item.to_string())?;
            }
        }
        Format::Csv => sink.csv(&["item"], items.map(|i| vec![i.to_string()]))?,
        Format::Json => {
            let rows = items.map(|i| Value::from(i.to_string())).collect();
            sink.envelope("enumerate", p, "rows", Value::Array(rows))?;
        }
    }
    Ok(true)
}

/// Words start with `0`; partitions never do.
fn is_word(input: &str) -> bool {
    input.starts_with('0')
}

fn map_apply(sink: &mut Sink, map: MapName, d: Option<usize>, input: &str) -> Outcome {
    let input = input.trim();
    let (name, output) = match map {
        MapName::Phi | MapName::PhiInverse => {
            let d = d.unwrap_or(1);
            let apply = |w: &BoundarySequence| match map {
                MapName::Phi => phi_d(w, d),
                _ => phi_d_inverse(w, d),
            };
            let output = if is_word(input) {
                apply(&input.parse()?)?.to_string()
            } else {
                let lambda: Partition = input.parse()?;
                if lambda.is_empty() {
                    return Err(Error::Domain("the map needs a nonempty partition".into()).into());
                }
                apply(&BoundarySequence::from_partition(&lambda))?
                    .to_partition()
                    .to_string()
            };
            (
                if matches!(map, MapName::Phi) {
                    "phi"
                } else {
                    "phi-inverse"
                },
                output,
            )
        }
        MapName::Xi => {
            let d = d.ok_or_else(|| Error::Domain("xi needs --d".into()))?;
            let lp: LabeledPartition = input.parse()?;
            ("xi", xi(&lp, d)?.to_string())
        }
    };
    let p = params(&[
        ("map", Some(name.into())),
        ("d", d.map(Value::from)),
        ("input", Some(input.into())),
    ]);
    let mut table = Table::new(vec!["input", "output"]);
    table.push(vec![Cell::Text(input.into()), Cell::Text(output)]);
    sink.table("map apply", p, &table)?;
    Ok(true)
}

fn map_orbit(sink: &mut Sink, d: usize, input: &str) -> Outcome {
    let input = input.trim();
    let word: BoundarySequence = if is_word(input) {
        input.parse()?
    } else {
        BoundarySequence::from_partition(&input.parse()?)
    };
    let report = orbit(&word, d)?;
    let p = params(&[("d", Some(d.into())), ("input", Some(input.into()))]);
    let mut table = Table::new(vec!["step", "word"]);
    for (i, w) in report.cycle.iter().enumerate() {
        table.push(vec![Cell::Int(i), Cell::Text(w.to_string())]);
    }
    sink.table("map orbit", p, &table)?;
    Ok(true)
}

fn table_rows(table: &mut Table, t: &CountTable, ks: impl Iterator<Item = usize>) {
    for k in ks {
        table.push(vec![
            Cell::Int(t.n),
            Cell::Int(k),
            Cell::Big(t.get(k).to_string()),
        ]);
    }
}

fn count(sink: &mut Sink, what: Counter, n: usize, d: Option<usize>, degenerate: bool) -> Outcome {
    let name = what
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let table = match what {
        Counter::A | Counter::B | Counter::C => {
            let t = match what {
                Counter::A => table_a(n)?,
                Counter::B => table_b(n)?,
                _ => table_c(n)?,
            };
            let mut table = Table::new(vec!["n", "k", "count"]);
            match what {
                Counter::C => table_rows(&mut table, &t, 1..=n),
                _ => table_rows(&mut table, &t, 0..n),
            }
            table
        }
        Counter::H => {
            let h = h_poly(n)?;
            let mut table = Table::new(vec!["n", "k", "value"]);
            for (k, c) in h.coeffs().iter().enumerate() {
                table.push(vec![Cell::Int(n), Cell::Int(k), Cell::Big(c.to_string())]);
            }
            table
        }
        Counter::AOdd | Counter::AEven | Counter::Fib => {
            let value = match what {
                Counter::AOdd => a_odd(n)?.to_string(),
                Counter::AEven => a_even(n)?.to_string(),
                _ => fibonacci(n)?.to_string(),
            };
            let mut table = Table::new(vec!["n", "value"]);
            table.push(vec![Cell::Int(n), Cell::Big(value)]);
            table
        }
        Counter::SumDif => {
            let d = d.ok_or_else(|| Error::Domain("sum-dif needs --d".into()))?;
            let mut table = Table::new(vec!["n", "d", "value"]);
            table.push(vec![
                Cell::Int(n),
                Cell::Int(d),
                Cell::Big(sum_dif(n, d, degenerate)?.to_string()),
            ]);
            table
        }
    };
    let p = params(&[
        ("what", Some(name.into())),
        ("n", Some(n.into())),
        ("d", d.map(Value::from)),
        ("degenerate", degenerate.then_some(Value::Bool(true))),
    ]);
    sink.table("count", p, &table)?;
    Ok(true)
}

fn series_grid(s: &TruncatedSeries) -> Vec<Vec<String>> {
    let width = s.order_y().map_or(1, |m| m + 1);
    (0..=s.order_x())
        .map(|i| (0..width).map(|j| s.coeff_xy(i, j).to_string()).collect())
        .collect()
}

fn series(
    sink: &mut Sink,
    registry: &SeriesRegistry,
    name: &str,
    d: Option<usize>,
    order: usize,
    order_y: Option<usize>,
    at: Option<&str>,
) -> Outcome {
    let gf = registry.get(name)?;
    let mut s = gf.expand(&SeriesParams { d, order, order_y })?;
    if let Some(spec) = at {
        s = substitute(&s, &parse_substitutions(spec)?);
    }
    let grid = series_grid(&s);
    let p = params(&[
        ("name", Some(name.into())),
        ("d", d.map(Value::from)),
        ("order", Some(order.into())),
        ("order_y", s.order_y().map(Value::from)),
        ("at", at.map(Value::from)),
    ]);
    match (sink.format, s.is_bivariate()) {
        (Format::Json, false) => {
            let flat = grid
                .into_iter()
                .map(|mut row| Value::from(row.remove(0)))
                .collect();
            sink.envelope("series", p, "series", Value::Array(flat))?;
        }
        (Format::Json, true) => {
            let rows = grid.into_iter().map(Value::from).collect();
            sink.envelope("series", p, "series", Value::Array(rows))?;
        }
        (Format::Csv, false) => sink.csv(
            &["x_degree", "coefficient"],
            grid.into_iter()
                .enumerate()
                .map(|(i, mut row)| vec![i.to_string(), row.remove(0)]),
        )?,
        (Format::Csv, true) => sink.csv(
            &["x_degree", "y_degree", "coefficient"],
            grid.into_iter().enumerate().flat_map(|(i, row)| {
                row.into_iter()
                    .enumerate()
                    .map(move |(j, c)| vec![i.to_string(), j.to_string(), c])
            }),
        )?,
        (Format::Text, false) => {
            let flat: Vec<&str> = grid.iter().map(|r| r[0].as_str()).collect();
            sink.line(&flat.join(","))?;
        }
        (Format::Text, true) => {
            for row in &grid {
                sink.line(&row.join(","))?;
            }
        }
    }
    Ok(true)
}

fn report_text(r: &VerificationReport) -> String {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let status = if r.passed() { "PASS" } else { "FAIL" };
    let mut line = format!("{status} {} {}", r.theorem, params.join(" "));
    for (k, v) in &r.details {
        line.push_str(&format!("  {k}: {v}"));
    }
    if let Some(w) = &r.witness {
        line.push_str(&format!("  witness: {w}"));
    }
    line
}

fn verify(
    sink: &mut Sink,
    registry: &CheckRegistry,
    theorem: &str,
    n: usize,
    d: Option<usize>,
    order: Option<usize>,
) -> Outcome {
    if sink.format == Format::Csv {
        return Err(Error::Domain("verify writes json or text".into()).into());
    }
    let reports = if theorem == "all" {
        registry.check_all(n, d.unwrap_or(1), order.unwrap_or(n))?
    } else {
        let check = registry.get(theorem)?;
        let params = CheckParams::new(n, d.unwrap_or(1), order.unwrap_or(n));
        vec![run_check(check, &params)?]
    };
    let all_pass = reports.iter().all(VerificationReport::passed);
    match sink.format {
        Format::Json => {
            let p = params(&[
                ("theorem", Some(theorem.into())),
                ("n", Some(n.into())),
                ("d", d.map(Value::from)),
                ("order", order.map(Value::from)),
            ]);
            let payload = serde_json::to_value(&reports).expect("reports serialize");
            sink.envelope("verify", p, "report", payload)?;
        }
        _ => {
            for r in &reports {
                sink.line(&report_text(r))?;
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            sink.line(&format!("{passed}/{} passed", reports.len()))?;
        }
    }
    Ok(all_pass)
}

fn dispatch(app: &App, cli: &Cli) -> Outcome {
    let mut sink = Sink::open(cli.format, cli.output.as_deref())?;
    let ok = match &cli.command {
        Command::Enumerate { family, n, d, k } => enumerate(&mut sink, *family, *n, *d, *k)?,
        Command::Map {
            action: MapAction::Apply { map, d, input },
        } => map_apply(&mut sink, *map, *d, input)?,
        Command::Map {
            action: MapAction::Orbit { d, input },
        } => map_orbit(&mut sink, *d, input)?,
        Command::Count {
            what,
            n,
            d,
            degenerate,
        } => count(&mut sink, *what, *n, *d, *degenerate)?,
        Command::Series {
            name,
            d,
            order,
            order_y,
            at,
        } => series(
            &mut sink,
            &app.series,
            name,
            *d,
            *order,
            *order_y,
            at.as_deref(),
        )?,
        Command::Verify {
            theorem,
            n,
            d,
            order,
        } => verify(&mut sink, &app.checks, theorem, *n, *d, *order)?,
    };
    sink.finish()?;
    Ok(ok)
}

/// The registries the command line selects from.
#[derive(Default)]
pub struct App {
    pub series: SeriesRegistry,
    pub checks: CheckRegistry,
}

impl App {
    /// Parse `args` (program name first), run, and return the exit status:
    /// 0 success, 1 failed verification, 2 usage or domain error.
    pub fn run<I, T>(&self, args: I) -> u8
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = match Cli::try_parse_from(args) {
            Ok(cli) => cli,
            Err(e) => {
                let _ = e.print();
                return match e.kind() {
                    ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                    _ => 2,
                };
            }
        };
        let mut pool = rayon::ThreadPoolBuilder::new();
        if let Some(jobs) = cli.jobs {
            pool = pool.num_threads(jobs);
        }
        let result = match pool.build() {
            Ok(pool) => pool.install(|| dispatch(self, &cli)),
            Err(e) => Err(Failure::Domain(Error::Domain(format!(
                "cannot start {:?} workers: {e}",
                cli.jobs
            )))),
        };
        match result {
            Ok(true) => 0,
            Ok(false) => 1,
            Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_and_partitions_are_told_apart() {
        assert!(is_word("0101"));
        assert!(!is_word("3,3"));
        assert!(!is_word("4,3*,1"));
    }

    #[test]
    fn global_flags_follow_the_subcommand() {
        let cli = Cli::try_parse_from([
            "perimeter",
            "count",
            "--what",
            "A",
            "--n",
            "4",
            "--format",
            "csv",
        ])
        .unwrap();
        assert_eq!(cli.format, Format::Csv);
        let cli = Cli::try_parse_from(["perimeter", "map", "orbit", "--input", "01"]).unwrap();
        assert_eq!(cli.format, Format::Text);
        assert!(matches!(
            cli.command,
            Command::Map {
                action: MapAction::Orbit { d: 1, .. }
            }
        ));
    }

    #[test]
    fn bivariate_grid_is_rectangular() {
        let s = perimeter::series::gf_dif(1, 3, Some(2)).unwrap();
        let grid = series_grid(&s);
        assert_eq!(grid.len(), 4);
        assert!(grid.iter().all(|row| row.len() == 3));
    }

    #[test]
    fn unknown_theorem_is_a_usage_error() {
        let app = App::default();
        assert_eq!(
            app.run(["perimeter", "verify", "--theorem", "nope", "--n", "3"]),
            2
        );
        assert_eq!(app.run(["perimeter", "--version"]), 0);
    }
}
