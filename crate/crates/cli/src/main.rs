use std::fs;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rookmon::census::{self, CensusRow};
use rookmon::checks;
use rookmon::diagram;
use rookmon::enumeration::cayley_table;
use rookmon::matrix::{from_matrix, DenseRookMatrix};
use rookmon::{classify, commutes, enumerate, multiply, power, root, transpose, Ambient, Element, Family};

#[derive(Parser)]
#[command(name = "rookmon", version, about = "Exact computation in the single-diagonal rook monoid M_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Product xy
    Mul {
        #[arg(short)]
        n: Option<i64>,
        x: String,
        y: String,
    },
    /// Power x^j, j >= 1
    Pow {
        #[arg(short)]
        n: Option<i64>,
        x: String,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        j: u32,
    },
    /// The unique j-th root of a nonzero x, or "none"
    Root {
        #[arg(short)]
        n: Option<i64>,
        x: String,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        j: u32,
    },
    /// Zero, identity, idempotent or nilpotent with its index
    Classify {
        #[arg(short)]
        n: Option<i64>,
        x: String,
    },
    /// Transpose, which is also the inverse
    Transpose {
        #[arg(short)]
        n: Option<i64>,
        x: String,
    },
    /// Whether xy = yx
    Commutes {
        #[arg(short)]
        n: Option<i64>,
        x: String,
        y: String,
    },
    /// List the members of a family in canonical order
    Enumerate {
        #[arg(short)]
        n: i64,
        #[arg(long, default_value = "Mn")]
        family: String,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Multiplication table of a family
    Cayley {
        #[arg(short)]
        n: i64,
        #[arg(long, default_value = "Sn")]
        family: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Ascii)]
        format: TableFormat,
        /// Label S_2 as 0, a, b, e, f in that order (only with -n 2 --family Sn)
        #[arg(long)]
        letters: bool,
    },
    /// Count ordered pairs with nonzero product and compare with the conjectured closed form
    Census {
        n_min: i64,
        n_max: i64,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        gnuplot: Option<PathBuf>,
        /// Largest n for which every pair is also multiplied out directly
        #[arg(long, default_value_t = census::DEFAULT_DIRECT_BUDGET)]
        budget_direct: i64,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run an exhaustive check suite ("all" for every suite)
    Verify {
        suite: String,
        #[arg(long)]
        n_max: Option<i64>,
    },
    /// Draw the rook diagram of x, or of the product x y with --times
    Render {
        #[arg(short)]
        n: i64,
        x: String,
        #[arg(long)]
        times: Option<String>,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Ascii)]
        format: DiagramFormat,
    },
    /// Read a 0/1 matrix (one row per line, "-" for stdin) and print its triplet
    FromMatrix { path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Ascii,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagramFormat {
    Ascii,
    Svg,
}

/// Normal completion or a verification that ran but did not hold.
enum Status {
    Ok,
    Failed,
}

fn ambient(n: Option<i64>) -> Result<Ambient> {
    match n {
        Some(n) => Ok(Ambient::finite(n)?),
        None => Ok(Ambient::Unbounded),
    }
}

fn element(s: &str, amb: Ambient) -> Result<Element> {
    Element::parse_in(s, amb).with_context(|| format!("invalid element {s:?} in {amb}"))
}

fn family(s: &str, n: i64) -> Result<Family> {
    let f: Family = s.parse()?;
    f.validate(n)?;
    Ok(f)
}

fn run(cli: Cli) -> Result<Status> {
    match cli.command {
        Command::Mul { n, x, y } => {
            let amb = ambient(n)?;
            println!("{}", multiply(element(&x, amb)?, element(&y, amb)?));
        }
        Command::Pow { n, x, j } => {
            let amb = ambient(n)?;
            println!("{}", power(element(&x, amb)?, j));
        }
        Command::Root { n, x, j } => {
            let amb = ambient(n)?;
            let t = element(&x, amb)?.triplet().ok_or_else(|| anyhow!("roots are only computed for nonzero elements"))?;
            match root(t, j) {
                Some(r) => println!("{r}"),
                None => println!("none"),
            }
        }
        Command::Classify { n, x } => {
            let amb = ambient(n)?;
            println!("{}", classify(element(&x, amb)?, amb));
        }
        Command::Transpose { n, x } => {
            let amb = ambient(n)?;
            println!("{}", transpose(element(&x, amb)?));
        }
        Command::Commutes { n, x, y } => {
            let amb = ambient(n)?;
            println!("{}", commutes(element(&x, amb)?, element(&y, amb)?));
        }
        Command::Enumerate { n, family: f, format } => {
            ambient(Some(n))?;
            let members = enumerate(n, family(&f, n)?)?;
            print!("{}", format_list(&members, format)?);
        }
        Command::Cayley { n, family: f, format, letters } => {
            ambient(Some(n))?;
            let fam = family(&f, n)?;
            let table = cayley_table(n, fam)?;
            let out = match format {
                TableFormat::Ascii if letters => s2_letters(n, fam, &table)?,
                _ if letters => bail!("--letters only applies to the ascii format"),
                TableFormat::Ascii => table.to_ascii(),
                TableFormat::Csv => table.to_csv(),
                TableFormat::Json => {
                    let value = serde_json::json!({
                        "n": n,
                        "family": fam.to_string(),
                        "elements": table.elements(),
                        "products": table.products(),
                    });
                    format!("{}\n", serde_json::to_string_pretty(&value)?)
                }
            };
            print!("{out}");
        }
        Command::Census { n_min, n_max, csv, gnuplot, budget_direct, jobs } => {
            if let Some(j) = jobs {
                rayon::ThreadPoolBuilder::new().num_threads(j).build_global()?;
            }
            let rows = census::census_sweep(n_min, n_max, budget_direct)?;
            if let Some(path) = csv {
                fs::write(&path, census::to_csv(&rows)).with_context(|| format!("writing {}", path.display()))?;
            }
            if let Some(path) = gnuplot {
                fs::write(&path, census::to_gnuplot(&rows)).with_context(|| format!("writing {}", path.display()))?;
            }
            print!("{}", census::to_table(&rows));
            let bad: Vec<i64> = rows.iter().filter(|r| !r.conjecture_ok || !r.methods_agree()).map(|r| r.n).collect();
            if !bad.is_empty() {
                eprintln!("conjectured count fails for n = {bad:?}");
                return Ok(Status::Failed);
            }
            summary(&rows);
        }
        Command::Verify { suite, n_max } => {
            let outcomes = checks::run_suite(&suite, n_max).ok_or_else(|| {
                let names: Vec<&str> = checks::SUITES.iter().map(|(s, _)| *s).collect();
                anyhow!("unknown suite {suite:?}; expected one of {} or all", names.join(", "))
            })?;
            let mut failed = false;
            for o in &outcomes {
                println!("[{}] {}: {}", if o.passed { "PASS" } else { "FAIL" }, o.name, o.detail);
                failed |= !o.passed;
            }
            if failed {
                return Ok(Status::Failed);
            }
        }
        Command::Render { n, x, times, format } => {
            let amb = ambient(Some(n))?;
            let x = element(&x, amb)?;
            let out = match (times, format) {
                (None, DiagramFormat::Ascii) => diagram::render_ascii(x, n),
                (None, DiagramFormat::Svg) => diagram::render_svg(x, n),
                (Some(y), DiagramFormat::Svg) => diagram::render_product(x, element(&y, amb)?, n),
                (Some(y), DiagramFormat::Ascii) => {
                    let y = element(&y, amb)?;
                    let xy = multiply(x, y);
                    format!(
                        "{}\n{}\n{x} {y} = {xy}\n{}",
                        diagram::render_ascii(x, n),
                        diagram::render_ascii(y, n),
                        diagram::render_ascii(xy, n)
                    )
                }
            };
            print!("{out}");
        }
        Command::FromMatrix { path } => {
            let text = if path.as_os_str() == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                s
            } else {
                fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?
            };
            let m: DenseRookMatrix = text.parse()?;
            println!("{}", from_matrix(&m)?);
        }
    }
    Ok(Status::Ok)
}

fn format_list(members: &[Element], format: ListFormat) -> Result<String> {
    Ok(match format {
        ListFormat::Text => members.iter().map(|e| format!("{e}\n")).collect(),
        ListFormat::Json => format!("{}\n", serde_json::to_string(members)?),
        ListFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["element", "d", "k", "m"])?;
            for e in members {
                let cols = e.triplet().map_or([String::new(), String::new(), String::new()], |t| {
                    [t.d().to_string(), t.k().to_string(), t.m().to_string()]
                });
                w.write_record([e.to_string(), cols[0].clone(), cols[1].clone(), cols[2].clone()])?;
            }
            String::from_utf8(w.into_inner()?)?
        }
    })
}

fn s2_letters(n: i64, fam: Family, table: &rookmon::CayleyTable) -> Result<String> {
    if n != 2 || fam != Family::Semigroup {
        bail!("--letters only applies to -n 2 --family Sn");
    }
    let amb = Ambient::Unbounded;
    let e = Element::new(0, 1, 1, amb)?;
    let f = Element::new(0, 2, 2, amb)?;
    let a = Element::new(1, 1, 1, amb)?;
    let b = Element::new(-1, 2, 2, amb)?;
    let labels = [(Element::Zero, "0"), (a, "a"), (b, "b"), (e, "e"), (f, "f")];
    let order: Vec<Element> = labels.iter().map(|l| l.0).collect();
    let text = table
        .reordered(&order)
        .and_then(|t| t.to_ascii_with_labels(&labels))
        .ok_or_else(|| anyhow!("S_2 does not have the expected five elements"))?;
    Ok(format!("{text}\ne = {e}, f = {f}, a = {a}, b = {b}\n"))
}

fn summary(rows: &[CensusRow]) {
    if let (Some(first), Some(last)) = (rows.first(), rows.last()) {
        eprintln!("conjectured count holds for n = {}..={}", first.n, last.n);
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
