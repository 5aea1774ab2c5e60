//! `clasp`: signatures, nullities, Alexander and Conway invariants and
//! slice obstructions of colored links from generalized Seifert matrices.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use clasp::conway::{evaluate_at_half_point, potential};
use clasp::invariants::{delta0, grid_scan, presentation_matrix, MergedColoring, SignatureSource};
use clasp::model::{bundled, bundled_json, bundled_names, load, ColoredLinkModel};
use clasp::numeric::{TorusPoint, Value, DEFAULT_TOLERANCE};
use clasp::obstructions::{casson_gordon, slice_obstruction, witnesses_to_json, SurgeryData};
use clasp::verify::verify_model;
use clasp::{Error, Result};

#[derive(Parser)]
#[command(name = "clasp", version, about = "Signatures and nullities of colored links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ModelArg {
    /// Model JSON file, or the name of a bundled example.
    #[arg(long)]
    model: String,
}

#[derive(Args)]
struct MergeArg {
    /// Merge colors: `all`, or the new color of each color, e.g. `1,1,2`.
    #[arg(long)]
    merge: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Signature and nullity at a point.
    Eval {
        #[command(flatten)]
        model: ModelArg,
        /// Point, e.g. `1/2,1/4` or `~0.785`.
        #[arg(long)]
        omega: String,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        approx_tol: f64,
        #[command(flatten)]
        merge: MergeArg,
    },
    /// Signatures on the grid of points `k/q`, as CSV.
    Grid {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        merge: MergeArg,
    },
    /// Normalized determinant of `A(t)`.
    Delta {
        #[command(flatten)]
        model: ModelArg,
    },
    /// Presentation matrix of the Alexander module.
    Presentation {
        #[command(flatten)]
        model: ModelArg,
    },
    /// Conway potential function, optionally evaluated at the square root of a point.
    Potential {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long)]
        omega: Option<String>,
    },
    /// Witnesses against sliceness at prime-power points, as JSON.
    Obstruct {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long)]
        max_q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        merge: MergeArg,
    },
    /// Casson–Gordon invariant from surgery data.
    CassonGordon {
        /// Framed linking matrix as JSON, e.g. `[[2]]`.
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        q: u64,
        /// Character exponents, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        /// Signature of the surgery link at the character point.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "model")]
        sigma: Option<i64>,
        /// Model of the surgery link, one color per component.
        #[arg(long)]
        model: Option<String>,
    },
    /// Signature after merging the last two colors, at a point whose last two coordinates agree.
    Merge {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long)]
        omega: String,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        approx_tol: f64,
    },
    /// Levine–Tristram signature and nullity on the diagonal.
    Diagonal {
        #[command(flatten)]
        model: ModelArg,
        /// A single coordinate, e.g. `1/3`.
        #[arg(long)]
        omega: String,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        approx_tol: f64,
    },
    /// List or write the bundled example models.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
    /// Run the property suites on models.
    Verify {
        /// Models to check; all bundled examples when omitted.
        #[arg(long)]
        model: Vec<String>,
        #[arg(long, default_value_t = 8)]
        q: u64,
    },
}

#[derive(Subcommand)]
enum ExamplesAction {
    List,
    Emit {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load_model(spec: &str) -> Result<ColoredLinkModel> {
    if Path::new(spec).exists() {
        load(spec)
    } else {
        bundled(spec)
    }
}

fn source(model: &ModelArg, merge: &MergeArg) -> Result<Box<dyn SignatureSource>> {
    let m = load_model(&model.model)?;
    reject_invalid(&m)?;
    Ok(match merge.merge.as_deref() {
        None => Box::new(m),
        Some("all") => Box::new(MergedColoring::merge_all(m)?),
        Some(map) => {
            let map = map
                .split(',')
                .map(|c| c.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad color '{c}' in --merge"))))
                .collect::<Result<Vec<_>>>()?;
            Box::new(MergedColoring::new(m, map)?)
        }
    })
}

fn reject_invalid(m: &ColoredLinkModel) -> Result<()> {
    let v = m.validate();
    if v.is_empty() {
        return Ok(());
    }
    let list: Vec<String> = v.iter().map(ToString::to_string).collect();
    Err(Error::InvalidModel(list.join("; ")))
}

fn valid_model(model: &ModelArg) -> Result<ColoredLinkModel> {
    let m = load_model(&model.model)?;
    reject_invalid(&m)?;
    Ok(m)
}

fn write_or_return(text: String, out: &Option<PathBuf>) -> Result<String> {
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn describe(v: &Value) -> String {
    let z = v.to_complex();
    match v {
        Value::Exact(x) => format!("value: {x} in Q(zeta_{})\napprox: {:.12} {:+.12}i\n", x.field().order(), z.re, z.im),
        Value::Approx(_) => format!("approx: {:.12} {:+.12}i\n", z.re, z.im),
    }
}

/// Runs one command; the returned text goes to standard output and
/// `Ok(false)` marks a failed verification.
fn run(cli: Cli) -> Result<(String, bool)> {
    let text = match cli.command {
        Command::Eval { model, omega, approx_tol, merge } => {
            let src = source(&model, &merge)?;
            let r = src.signature_with_tolerance(&TorusPoint::parse(&omega)?, approx_tol)?;
            format!("sigma={} eta={} exact={}\n", r.sigma, r.eta, r.exact)
        }
        Command::Grid { model, q, out, merge } => {
            let src = source(&model, &merge)?;
            write_or_return(grid_scan(src.as_ref(), q)?.to_csv(), &out)?
        }
        Command::Delta { model } => {
            let d = delta0(&valid_model(&model)?)?;
            format!("{d}\nnote: determinant of A(t); equals the Alexander polynomial only up to units and factors (1 - t_i)\n")
        }
        Command::Presentation { model } => format!("{}\n", presentation_matrix(&valid_model(&model)?)?),
        Command::Potential { model, omega } => {
            let f = potential(&valid_model(&model)?)?;
            let mut s = format!("numerator: {}\ndenominator: {}\n", f.numerator(), f.denominator());
            if let Some(omega) = omega {
                s.push_str(&describe(&evaluate_at_half_point(&f, &TorusPoint::parse(&omega)?)?));
            }
            s
        }
        Command::Obstruct { model, max_q, out, merge } => {
            let src = source(&model, &merge)?;
            let w = slice_obstruction(src.as_ref(), max_q)?;
            write_or_return(witnesses_to_json(&w) + "\n", &out)?
        }
        Command::CassonGordon { lambda, q, n, sigma, model } => {
            let lambda: Vec<Vec<i64>> =
                serde_json::from_str(&lambda).map_err(|e| Error::Parse(format!("--lambda: {e}")))?;
            let n = n
                .split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent '{x}'"))))
                .collect::<Result<Vec<_>>>()?;
            let data = SurgeryData::new(lambda, q, n)?;
            let sigma = match (sigma, model) {
                (Some(s), _) => s,
                (None, Some(spec)) => {
                    let m = load_model(&spec)?;
                    reject_invalid(&m)?;
                    m.signature(&data.point()?)?.sigma
                }
                (None, None) => return Err(Error::MissingMetadata("give --sigma or --model".into())),
            };
            format!("sigma(M,chi)={}\n", casson_gordon(&data, sigma)?)
        }
        Command::Merge { model, omega, approx_tol } => {
            let m = valid_model(&model)?;
            let omega = TorusPoint::parse(&omega)?;
            if omega.mu() != m.mu {
                return Err(Error::Dimension(format!("point {omega} for {} colors", m.mu)));
            }
            if m.mu >= 2 && omega.coords()[m.mu - 1] != omega.coords()[m.mu - 2] {
                return Err(Error::Domain(format!("the last two coordinates of {omega} differ")));
            }
            let merged = MergedColoring::merge_last_two(m.clone())?;
            let keep: Vec<usize> = (0..m.mu - 1).collect();
            let r = merged.signature_with_tolerance(&omega.project(&keep)?, approx_tol)?;
            format!("sigma={} eta={} exact={}\n", r.sigma, r.eta, r.exact)
        }
        Command::Diagonal { model, omega, approx_tol } => {
            let m = valid_model(&model)?;
            let c = TorusPoint::parse(&omega)?;
            if c.mu() != 1 {
                return Err(Error::Dimension("--omega takes a single coordinate".into()));
            }
            let r = m.signature_with_tolerance(&TorusPoint::diagonal(c.coords()[0], m.mu)?, approx_tol)?;
            format!("sigma_lt={} eta_lt={} exact={}\n", r.sigma - m.cross_color_linking(), r.eta, r.exact)
        }
        Command::Examples { action: ExamplesAction::List } => bundled_names().join("\n") + "\n",
        Command::Examples { action: ExamplesAction::Emit { name, out } } => {
            write_or_return(bundled_json(&name)?.to_string(), &out)?
        }
        Command::Verify { model, q } => {
            let specs: Vec<String> =
                if model.is_empty() { bundled_names().into_iter().map(String::from).collect() } else { model };
            let mut s = String::new();
            let mut all_ok = true;
            for spec in specs {
                s.push_str(&format!("model {spec}\n"));
                for o in verify_model(&load_model(&spec)?, q)? {
                    all_ok &= o.passed();
                    s.push_str(&format!("  {o}\n"));
                }
            }
            s.push_str(if all_ok { "all properties pass\n" } else { "some properties fail\n" });
            return Ok((s, all_ok));
        }
    };
    Ok((text, true))
}

fn configure_threads() {
    if let Some(n) = std::env::var("CLASP_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
