//! `gallai` — census, extension and bound checks for rainbow-triangle-free
//! colorings of complete graphs.
//!
//! Exit codes: `0` success, `2` usage or input errors, `3` a verification
//! or expected-value mismatch, `4` a request beyond the supported sizes.

use std::fs;
use std::io::{self, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use gallai::{bounds, enumerate, extension};
use gallai::{ClassFilter, Color, ColorSet, EdgeColoring, SpecialWitness};
use gallai_cli::report::{self, OutputFormat};
use gallai_cli::{checks, golden};
use serde_json::{json, Value};

const EXIT_INPUT: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_SIZE: u8 = 4;

/// Census, extension and bound checks for rainbow-triangle-free 3-colorings
/// of complete graphs.
#[derive(Parser)]
#[command(name = "gallai", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the rainbow-triangle-free colorings of K_n by colors used
    Count {
        /// Number of vertices (2..=8; n = 8 also needs --deep)
        #[arg(long)]
        n: u8,
        /// Worker threads for the census walk
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        /// Allow the n = 8 census, which visits ~1.2e9 colorings
        #[arg(long)]
        deep: bool,
    },
    /// Count (or list) the one-vertex extensions of a base coloring
    Extend {
        #[command(flatten)]
        input: ColoringInput,
        /// Write one extension star per stdout line instead of a summary
        #[arg(long)]
        list: bool,
        /// Summary format; JSON includes the star color profile
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Report the structural class of a coloring
    Classify {
        #[command(flatten)]
        input: ColoringInput,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Catalog the isomorphism classes of the census of K_n
    Classes {
        /// Number of vertices (2..=6)
        #[arg(long)]
        n: u8,
        /// Keep only colorings using exactly this many colors (1, 2 or 3)
        #[arg(long)]
        colors: Option<u8>,
        /// Keep only the special shapes
        #[arg(long, conflicts_with = "non_special")]
        special: bool,
        /// Drop the special shapes
        #[arg(long)]
        non_special: bool,
        /// Drop colorings in which some vertex sees only one color
        #[arg(long)]
        no_mono_vertex: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Print the bound table next to the known exact counts
    Bounds {
        /// Largest number of vertices to tabulate (2..=1024)
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Run the verification suite and report ok/FAIL per check
    Verify {
        /// Include the n = 8 census row (minutes of work; use --threads)
        #[arg(long)]
        deep: bool,
        /// Worker threads for the census checks
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Machine-readable output instead of ok/FAIL lines
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
}

/// Where a subcommand reads its base coloring from: exactly one of a file
/// or an inline string, both in the two-line text format (vertex count,
/// then edge colors r/g/b in row order; `\n` may be written literally).
#[derive(Args)]
#[group(required = true, multiple = false)]
struct ColoringInput {
    /// Path to a coloring file
    #[arg(long, value_name = "PATH")]
    coloring: Option<PathBuf>,
    /// The coloring text itself
    #[arg(long, value_name = "TEXT")]
    inline: Option<String>,
}

impl ColoringInput {
    fn load(&self) -> Result<EdgeColoring, CliError> {
        let text = match (&self.coloring, &self.inline) {
            (Some(path), None) => fs::read_to_string(path).map_err(|err| CliError {
                code: EXIT_INPUT,
                message: format!("cannot read {}: {err}", path.display()),
            })?,
            (None, Some(text)) => text.replace("\\n", "\n"),
            _ => unreachable!("clap enforces exactly one input source"),
        };
        Ok(gallai::parse_coloring(&text)?)
    }
}

struct CliError {
    code: u8,
    message: String,
}

impl From<gallai::Error> for CliError {
    fn from(err: gallai::Error) -> CliError {
        let code = match err {
            gallai::Error::UnsupportedSize(_) => EXIT_SIZE,
            _ => EXIT_INPUT,
        };
        CliError { code, message: err.to_string() }
    }
}

fn size_error(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_SIZE, message: message.into() }
}

fn input_error(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_INPUT, message: message.into() }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Count { n, threads, format, deep } => cmd_count(n, threads, deep, format),
        Command::Extend { input, list, format } => cmd_extend(&input, list, format),
        Command::Classify { input, format } => cmd_classify(&input, format),
        Command::Classes { n, colors, special, non_special, no_mono_vertex, format } => {
            cmd_classes(n, colors, special, non_special, no_mono_vertex, format)
        }
        Command::Bounds { max_n, format } => cmd_bounds(max_n, format),
        Command::Verify { deep, threads, format } => cmd_verify(deep, threads, format),
    }
}

/// The edge colors of a coloring as one line of `r`/`g`/`b` characters.
fn color_text(coloring: &EdgeColoring) -> String {
    coloring.edge_colors().map(Color::as_char).collect()
}

fn cmd_count(n: u8, threads: usize, deep: bool, format: OutputFormat) -> Result<(), CliError> {
    if n == 8 && !deep {
        return Err(size_error(
            "the n = 8 census visits ~1.2e9 colorings; pass --deep (and consider --threads) to run it",
        ));
    }
    let record = enumerate::count_gallai(n, threads)?;
    let matches = golden::count_row(n).map(|row| row.matches(&record));
    let matches_text = match matches {
        Some(true) => "true",
        Some(false) => "false",
        None => "unknown",
    };
    match format {
        OutputFormat::Csv => {
            let header = ["n", "c1", "c2", "c3", "total", "matches_expected", "elapsed_ms", "workers"];
            let row = vec![
                record.n.to_string(),
                record.by_colors[0].to_string(),
                record.by_colors[1].to_string(),
                record.by_colors[2].to_string(),
                record.total.to_string(),
                matches_text.to_string(),
                record.elapsed.as_millis().to_string(),
                record.workers.to_string(),
            ];
            print!("{}", report::render_csv(&header, &[row]));
        }
        OutputFormat::Json => {
            let payload = json!({
                "n": record.n,
                "c1": record.by_colors[0],
                "c2": record.by_colors[1],
                "c3": record.by_colors[2],
                "total": record.total,
                "matches_expected": matches,
                "elapsed_ms": record.elapsed.as_millis() as u64,
                "workers": record.workers,
            });
            println!("{}", report::render_json("count", payload));
        }
    }
    if matches == Some(false) {
        return Err(CliError {
            code: EXIT_VERIFY,
            message: format!("census for n = {n} differs from the expected table"),
        });
    }
    Ok(())
}

fn cmd_extend(input: &ColoringInput, list: bool, format: OutputFormat) -> Result<(), CliError> {
    let base = input.load()?;
    if list {
        let stars = extension::list_extensions(&base)?;
        let mut stdout = io::stdout().lock();
        for star in &stars {
            writeln!(stdout, "{star}")
                .map_err(|err| input_error(format!("cannot write extension list: {err}")))?;
        }
        let base_colors = base.colors_used();
        let all_three = stars
            .iter()
            .filter(|star| {
                ColorSet::from_bits(base_colors.bits() | star.colors_used().bits()).len() == 3
            })
            .count();
        eprintln!(
            "{} extensions of the {}-vertex base ({all_three} reaching all three colors)",
            stars.len(),
            base.n()
        );
        return Ok(());
    }
    let count = extension::count_extensions_with_profile(&base)?;
    match format {
        OutputFormat::Csv => {
            let header = ["n", "edges", "total", "all_three_colors"];
            let row = vec![
                base.n().to_string(),
                color_text(&base),
                count.total.to_string(),
                count.all_three_colors.to_string(),
            ];
            print!("{}", report::render_csv(&header, &[row]));
        }
        OutputFormat::Json => {
            let profile: Vec<Value> = count
                .by_color_counts
                .iter()
                .flatten()
                .map(|(split, stars)| {
                    json!({
                        "red": split[0],
                        "green": split[1],
                        "blue": split[2],
                        "stars": stars,
                    })
                })
                .collect();
            let payload = json!({
                "n": base.n(),
                "edges": color_text(&base),
                "total": count.total,
                "all_three_colors": count.all_three_colors,
                "star_color_profile": profile,
            });
            println!("{}", report::render_json("extend", payload));
        }
    }
    Ok(())
}

fn describe_witness(witness: SpecialWitness) -> String {
    match witness {
        SpecialWitness::Vertex(v) => format!("vertex {v}"),
        SpecialWitness::Edge(i, j) => format!("edge {{{i}, {j}}}"),
        SpecialWitness::EdgePair((a, b), (c, d)) => {
            format!("edges {{{a}, {b}}} and {{{c}, {d}}}")
        }
    }
}

fn cmd_classify(input: &ColoringInput, format: OutputFormat) -> Result<(), CliError> {
    let coloring = input.load()?;
    let class = coloring.classify()?;
    let witness = class.witness.map(describe_witness);
    // Canonical forms are supported well past the census range but not for
    // every parseable size; leave the column empty beyond that.
    let canonical = coloring.canonical_code().ok().map(|code| color_text(&code.coloring()));
    match format {
        OutputFormat::Csv => {
            let header = ["n", "edges", "colors_used", "kind", "special", "witness", "canonical_edges"];
            let row = vec![
                coloring.n().to_string(),
                color_text(&coloring),
                class.colors_used.len().to_string(),
                class.kind.label().to_string(),
                class.kind.is_special().to_string(),
                witness.clone().unwrap_or_else(|| "-".to_string()),
                canonical.clone().unwrap_or_else(|| "-".to_string()),
            ];
            print!("{}", report::render_csv(&header, &[row]));
        }
        OutputFormat::Json => {
            let payload = json!({
                "n": coloring.n(),
                "edges": color_text(&coloring),
                "colors_used": class.colors_used.len(),
                "kind": class.kind.label(),
                "special": class.kind.is_special(),
                "witness": witness,
                "canonical_edges": canonical,
            });
            println!("{}", report::render_json("classify", payload));
        }
    }
    Ok(())
}

fn cmd_classes(
    n: u8,
    colors: Option<u8>,
    special: bool,
    non_special: bool,
    no_mono_vertex: bool,
    format: OutputFormat,
) -> Result<(), CliError> {
    if let Some(k) = colors {
        if !(1..=3).contains(&k) {
            return Err(input_error(format!("--colors must be 1, 2 or 3, got {k}")));
        }
    }
    let filter = ClassFilter {
        colors_used: colors,
        special: if special {
            Some(true)
        } else if non_special {
            Some(false)
        } else {
            None
        },
        monochromatic_vertex: if no_mono_vertex { Some(false) } else { None },
    };
    let representatives = enumerate::enumerate_classes(n, &filter)?;
    let extension_total = |coloring: &EdgeColoring| -> Result<u64, CliError> {
        Ok(extension::count_extensions(coloring)?.total)
    };
    match format {
        OutputFormat::Csv => {
            let header = ["n", "edges", "kind", "colors_used", "members", "extensions"];
            let mut rows = Vec::with_capacity(representatives.len());
            for rep in &representatives {
                rows.push(vec![
                    n.to_string(),
                    color_text(&rep.coloring),
                    rep.class.kind.label().to_string(),
                    rep.class.colors_used.len().to_string(),
                    rep.members.to_string(),
                    extension_total(&rep.coloring)?.to_string(),
                ]);
            }
            print!("{}", report::render_csv(&header, &rows));
        }
        OutputFormat::Json => {
            let mut classes = Vec::with_capacity(representatives.len());
            for rep in &representatives {
                classes.push(json!({
                    "edges": color_text(&rep.coloring),
                    "kind": rep.class.kind.label(),
                    "colors_used": rep.class.colors_used.len(),
                    "members": rep.members,
                    "extensions": extension_total(&rep.coloring)?,
                }));
            }
            let payload = json!({
                "n": n,
                "class_count": representatives.len(),
                "members_total": representatives.iter().map(|rep| rep.members).sum::<u64>(),
                "classes": classes,
            });
            println!("{}", report::render_json("classes", payload));
        }
    }
    Ok(())
}

fn cmd_bounds(max_n: u32, format: OutputFormat) -> Result<(), CliError> {
    let exact = golden::exact_totals();
    let rows = bounds::bound_table(max_n, &exact)?;
    match format {
        OutputFormat::Csv => {
            let header = ["n", "lower", "exact", "upper", "upper_over_exact", "exact_over_lower"];
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|row| {
                    vec![
                        row.n.to_string(),
                        row.lower.to_string(),
                        row.exact.as_ref().map_or_else(|| "-".to_string(), |v| v.to_string()),
                        row.upper.to_string(),
                        row.upper_over_exact.clone().unwrap_or_else(|| "-".to_string()),
                        row.exact_over_lower.clone().unwrap_or_else(|| "-".to_string()),
                    ]
                })
                .collect();
            print!("{}", report::render_csv(&header, &table));
        }
        OutputFormat::Json => {
            // Counts overflow u64 quickly, so every numeric column is a
            // decimal string.
            let table: Vec<Value> = rows
                .iter()
                .map(|row| {
                    json!({
                        "n": row.n,
                        "lower": row.lower.to_string(),
                        "exact": row.exact.as_ref().map(|v| v.to_string()),
                        "upper": row.upper.to_string(),
                        "upper_over_exact": row.upper_over_exact,
                        "exact_over_lower": row.exact_over_lower,
                    })
                })
                .collect();
            let payload = json!({ "max_n": max_n, "rows": table });
            println!("{}", report::render_json("bounds", payload));
        }
    }
    Ok(())
}

fn cmd_verify(deep: bool, threads: usize, format: Option<OutputFormat>) -> Result<(), CliError> {
    let started = Instant::now();
    let outcomes = checks::run_suite(deep, threads);
    let passed = checks::all_passed(&outcomes);
    match format {
        None => {
            for check in &outcomes {
                let status = if check.passed { "ok  " } else { "FAIL" };
                println!("{status} {:<42} {}", check.name, check.detail);
            }
            let ok = outcomes.iter().filter(|check| check.passed).count();
            println!(
                "{ok} of {} checks passed in {:.1?}",
                outcomes.len(),
                started.elapsed()
            );
        }
        Some(OutputFormat::Csv) => {
            let header = ["name", "passed", "detail"];
            let rows: Vec<Vec<String>> = outcomes
                .iter()
                .map(|check| {
                    vec![check.name.to_string(), check.passed.to_string(), check.detail.clone()]
                })
                .collect();
            print!("{}", report::render_csv(&header, &rows));
        }
        Some(OutputFormat::Json) => {
            let rows: Vec<Value> = outcomes
                .iter()
                .map(|check| {
                    json!({
                        "name": check.name,
                        "passed": check.passed,
                        "detail": check.detail,
                    })
                })
                .collect();
            let payload = json!({
                "deep": deep,
                "passed": passed,
                "checks": rows,
            });
            println!("{}", report::render_json("verify", payload));
        }
    }
    if passed {
        Ok(())
    } else {
        Err(CliError { code: EXIT_VERIFY, message: "verification failed".to_string() })
    }
}
