//! `ptransverse`: transverse Poisson structures to nilpotent orbits of sl_n.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use transverse_core::check::{check_fixtures, check_lie_core, check_properties, SuiteReport};
use transverse_core::engine::run;
use transverse_core::fixtures::{ComplementFile, ComplementSpec};
use transverse_core::lie::{Form, LieElement};
use transverse_core::orbit::{classify, triplet_from_partition, Partition};
use transverse_core::report::{orbit_json, orbit_text, Format, TensorChoice, TransverseReport};
use transverse_core::Error;

/// Exit status for malformed input or an unsupported request.
const USAGE: u8 = 2;
/// Exit status when a computed verdict or a check fails.
const FAILED: u8 = 1;

#[derive(Parser)]
#[command(
    name = "ptransverse",
    version,
    about = "Exact transverse Poisson structures to nilpotent orbits of sl_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// sl2-triplet, grading, centralizer and classification of an orbit.
    Orbit {
        n: usize,
        /// Jordan block sizes, e.g. `3,1`.
        partition: String,
        #[arg(long, value_enum, default_value_t = OrbitFormat::Text)]
        format: OrbitFormat,
    },
    /// Transverse Poisson structure on the slice `e + n^⊥`.
    Transverse {
        n: usize,
        partition: String,
        /// `imadf`, `conormal`, or `file:PATH` to a complement JSON file.
        #[arg(long, default_value = "imadf")]
        complement: String,
        #[arg(long, value_enum, default_value_t = TensorArg::Both)]
        tensor: TensorArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long, value_enum, default_value_t = FormArg::Trace)]
        form: FormArg,
        /// Also print the constraint matrices C, D and A.
        #[arg(long)]
        matrices: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Invariant suites and reproduction of the shipped examples.
    Check {
        #[arg(value_enum, default_value_t = Scope::All)]
        scope: Scope,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = OrbitFormat::Text)]
        format: OrbitFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OrbitFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum TensorArg {
    Full,
    Prime,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Trace,
    Killing,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scope {
    All,
    Fixtures,
    Properties,
}

/// A rendered report, tagged by whether every verdict held.
enum Outcome {
    Ok(String),
    Failed(String),
}

fn parse_partition(n: usize, s: &str) -> Result<Partition, Error> {
    let p: Partition = s.parse()?;
    if p.n() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: p.n(),
        });
    }
    Ok(p)
}

fn cmd_orbit(n: usize, partition: &str, format: OrbitFormat) -> Result<Outcome, Error> {
    let t = triplet_from_partition(&parse_partition(n, partition)?)?;
    Ok(Outcome::Ok(match format {
        OrbitFormat::Text => orbit_text(&t),
        OrbitFormat::Json => orbit_json(&t) + "\n",
    }))
}

struct TransverseArgs {
    n: usize,
    partition: String,
    complement: String,
    tensor: TensorChoice,
    format: Format,
    form: Form,
    matrices: bool,
}

fn cmd_transverse(a: &TransverseArgs) -> Result<Outcome, Error> {
    let p = parse_partition(a.n, &a.partition)?;
    let (spec, z_basis): (ComplementSpec, Option<Vec<LieElement>>) = match a.complement.as_str() {
        "imadf" => (ComplementSpec::ImAdF, None),
        "conormal" => {
            if !classify(&p).conormal_family {
                return Err(Error::UnsupportedFamily(p.to_string()));
            }
            (ComplementSpec::Conormal, None)
        }
        other => {
            let path = other
                .strip_prefix("file:")
                .ok_or_else(|| Error::Parse(format!("unknown complement selector `{other}`")))?;
            let text =
                std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
            let f = ComplementFile::parse(path, &text, Some(a.n))?;
            if let Some(fp) = &f.partition {
                if fp != &p {
                    return Err(Error::Parse(format!(
                        "{path} is written for partition {fp}, not {p}"
                    )));
                }
            }
            (f.complement, f.centralizer)
        }
    };
    let r = run(&p, &spec, z_basis, a.form)?;
    let report = TransverseReport::new(&r, a.tensor)?.with_matrices(a.matrices);
    let mut out = report.render(a.format);
    if !out.ends_with('\n') {
        out.push('\n');
    }
    Ok(if report.consistent() {
        Outcome::Ok(out)
    } else {
        Outcome::Failed(out)
    })
}

fn cmd_check(scope: Scope, max_n: usize, format: OrbitFormat) -> Outcome {
    let mut suites: Vec<SuiteReport> = Vec::new();
    let mut groups = Vec::new();
    if scope != Scope::Fixtures {
        suites.push(check_lie_core(max_n));
        suites.push(check_properties(max_n));
    }
    if scope != Scope::Properties {
        let (s, g) = check_fixtures();
        suites.push(s);
        groups = g;
    }
    let ok = suites.iter().all(SuiteReport::ok);
    let reproduced = groups.iter().filter(|g| g.1).count();
    let out = match format {
        OrbitFormat::Json => {
            let v = json!({
                "passed": ok,
                "suites": suites,
                "fixture_groups": groups.iter().map(|(g, r)| json!({"group": g, "reproduced": r})).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        OrbitFormat::Text => {
            let mut s = String::new();
            for suite in &suites {
                for r in &suite.results {
                    let tag = if r.passed { "PASS" } else { "FAIL" };
                    match &r.detail {
                        Some(d) => s.push_str(&format!("{tag} {}: {d}\n", r.name)),
                        None => s.push_str(&format!("{tag} {}\n", r.name)),
                    }
                }
                s.push_str(&format!(
                    "{}: {} passed, {} failed\n",
                    suite.suite, suite.passed, suite.failed
                ));
            }
            if !groups.is_empty() {
                s.push_str(&format!(
                    "fixture groups reproduced: {reproduced}/{}\n",
                    groups.len()
                ));
            }
            s
        }
    };
    if ok {
        Outcome::Ok(out)
    } else {
        Outcome::Failed(out)
    }
}

fn configure_threads() {
    if let Some(k) = std::env::var("PT_NUM_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        if k > 0 {
            // Fails only if the pool was already built, which cannot happen here.
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build_global();
        }
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    let (result, output) = match cli.command {
        Command::Orbit {
            n,
            partition,
            format,
        } => (cmd_orbit(n, &partition, format), None),
        Command::Transverse {
            n,
            partition,
            complement,
            tensor,
            format,
            form,
            matrices,
            output,
        } => {
            let args = TransverseArgs {
                n,
                partition,
                complement,
                tensor: match tensor {
                    TensorArg::Full => TensorChoice::Full,
                    TensorArg::Prime => TensorChoice::Prime,
                    TensorArg::Both => TensorChoice::Both,
                },
                format: match format {
                    FormatArg::Text => Format::Text,
                    FormatArg::Json => Format::Json,
                    FormatArg::Latex => Format::Latex,
                },
                form: match form {
                    FormArg::Trace => Form::Trace,
                    FormArg::Killing => Form::Killing,
                },
                matrices,
            };
            (cmd_transverse(&args), output)
        }
        Command::Check {
            scope,
            max_n,
            format,
        } => (Ok(cmd_check(scope, max_n, format)), None),
    };
    let (text, code) = match result {
        Ok(Outcome::Ok(t)) => (t, ExitCode::SUCCESS),
        Ok(Outcome::Failed(t)) => (t, ExitCode::from(FAILED)),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE);
        }
    };
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(USAGE);
            }
        }
        None => print!("{text}"),
    }
    code
}
