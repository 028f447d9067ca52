//! Command-line front end for kp-content.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kp_content::factorizations::{count, CountMethod, FactorizationSpec, DEFAULT_BRUTE_FORCE_BOUND};
use kp_content::hurwitz::{double_hurwitz, hypermap_count, m_hypermap, map_count, polynomial_in_m, CoverProfile};
use kp_content::kp::{kp_residual, log_tau};
use kp_content::plucker::{content_family, plucker_check_all, GenericPoint, PluckerFamily};
use kp_content::ring::{format_rational, int, parse_rational};
use kp_content::triangulations::{check_cubeconst, f_table, kp_triangulation_partials};
use kp_content::{acceptance, Error, GradedSeries, Partition, Rational};
use num_traits::{Pow, Zero};
use serde_json::{json, Value};

const TSV_HELP: &str = "Output:\n  \
    Scalars are printed as exact rationals `num/den` (`den` omitted when 1).\n  \
    `triangulations` prints a TSV table with columns n, g, F (header line first).\n  \
    With --format json every exact value is a JSON string.\n  \
    Errors are printed as {\"error\": {\"kind\": ..., \"message\": ...}} with a nonzero exit status.";

#[derive(Parser, Debug)]
#[command(name = "kp-content", version, about = "Exact content-product KP solutions and the counts they generate", after_help = TSV_HELP)]
struct Cli {
    /// Size of the worker pool.
    #[arg(long, global = true, default_value_t = 1, env = "KPC_WORKERS")]
    workers: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,

    /// Largest degree the enumerators accept.
    #[arg(long, global = true, default_value_t = DEFAULT_BRUTE_FORCE_BOUND, env = "KPC_BRUTE_FORCE_BOUND")]
    bound: usize,

    /// Count factorizations by enumeration or by characters.
    #[arg(long, global = true, value_enum, default_value_t = Method::Brute)]
    method: Method,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Characters,
}

#[derive(Args, Debug)]
struct ProfileArgs {
    #[arg(long)]
    alpha: Partition,
    #[arg(long)]
    beta: Partition,
    #[arg(long, default_value_t = 0)]
    genus: usize,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// content, all-ones or unit.
    #[arg(long, default_value = "content")]
    family: String,
    /// Power sums q_1, q_2, ... (the rest are zero), or generic:SEED.
    #[arg(long, default_value = "1")]
    q: String,
    /// Content variables: m-hypermap:M for (1+j)^M, constant:C, or generic:SEED.
    #[arg(long = "y-mode", default_value = "m-hypermap:1")]
    y_mode: String,
    /// Add DELTA to one coordinate, written LAMBDA:DELTA.
    #[arg(long)]
    perturb: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ordered factorizations of the identity with the given cycle data.
    Count {
        #[arg(long)]
        alpha: Partition,
        #[arg(long)]
        beta: Partition,
        /// Deficiencies of the remaining factors.
        #[arg(long, value_delimiter = ',', default_value = "")]
        a: Vec<String>,
        #[arg(long)]
        transitive: bool,
    },
    /// Double Hurwitz number.
    Hurwitz(ProfileArgs),
    /// m-hypermap number.
    Mhypermap {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        m: usize,
    },
    /// m-hypermap numbers as a polynomial in m.
    PolyInM(ProfileArgs),
    /// Rooted hypermaps.
    Hypermap(ProfileArgs),
    /// Rooted maps with vertex degrees alpha.
    Maps {
        #[arg(long)]
        alpha: Partition,
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        faces: usize,
    },
    /// Rooted triangulations F(n, g).
    Triangulations {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long)]
        genus: Option<i64>,
    },
    /// Every Plücker relation with |alpha|, |beta| <= cap.
    PluckerCheck {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 3)]
        cap: usize,
    },
    /// Residual of a printed KP equation on a series, or on log tau of a family.
    KpResidual {
        /// A series such as "1/2 * p[1,1] + p[2]"; overrides --family.
        #[arg(long)]
        series: Option<String>,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 8, env = "KPC_CAP")]
        cap: usize,
        #[arg(long, default_value_t = 1)]
        eq: usize,
    },
    /// One of the verification suites.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// All acceptance checks; exits nonzero if any fails.
    VerifyAll {
        /// Include running times.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Suite {
    /// The two map series identities.
    Cubeconst {
        #[arg(long, default_value_t = 6)]
        z_cap: usize,
    },
    /// The first KP equation on the triangulation partials.
    KpPartials {
        #[arg(long, default_value_t = 3)]
        n_max: usize,
    },
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn scalar(value: &Rational) -> Self {
        let s = format_rational(value);
        Output { text: s.clone(), json: json!({ "value": s }), ok: true }
    }
}

fn method(cli: &Cli) -> CountMethod {
    match cli.method {
        Method::Brute => CountMethod::BruteForce { bound: cli.bound },
        Method::Characters => CountMethod::Characters,
    }
}

fn profile(args: &ProfileArgs) -> Result<CoverProfile, Error> {
    CoverProfile::new(args.alpha.clone(), args.beta.clone(), args.genus)
}

fn parse_list(items: &[String]) -> Result<Vec<usize>, Error> {
    items
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("expected a nonnegative integer, got {s:?}"))))
        .collect()
}

fn seed(spec: &str) -> Option<Result<u64, Error>> {
    spec.strip_prefix("generic:")
        .map(|s| s.parse().map_err(|_| Error::Parse(format!("bad seed {s:?}"))))
}

fn build_family(args: &FamilyArgs, cap: usize) -> Result<PluckerFamily, Error> {
    let mut fam = match args.family.as_str() {
        "all-ones" => PluckerFamily::all_ones(cap),
        "unit" => PluckerFamily::unit(cap),
        "content" => {
            let q: Vec<Rational> = match seed(&args.q) {
                Some(s) => GenericPoint::new(s?, cap).q[1..].to_vec(),
                None => args.q.split(',').map(|x| parse_rational(x.trim())).collect::<Result<_, _>>()?,
            };
            let q_at = |i: usize| q.get(i - 1).cloned().unwrap_or_else(Rational::zero);
            if let Some(s) = seed(&args.y_mode) {
                let point = GenericPoint::new(s?, cap);
                content_family(|j| point.y[&j].clone(), q_at, cap)
            } else if let Some(m) = args.y_mode.strip_prefix("m-hypermap:") {
                let m: u32 = m.parse().map_err(|_| Error::Parse(format!("bad exponent {m:?}")))?;
                content_family(|j| Pow::pow(int(1 + j), m), q_at, cap)
            } else if let Some(c) = args.y_mode.strip_prefix("constant:") {
                let c = parse_rational(c)?;
                content_family(|_| c.clone(), q_at, cap)
            } else {
                return Err(Error::InvalidArgument(format!("unknown y-mode {:?}", args.y_mode)));
            }
        }
        other => return Err(Error::InvalidArgument(format!("unknown family {other:?}"))),
    };
    if let Some(p) = &args.perturb {
        let (lambda, delta) =
            p.split_once(':').ok_or_else(|| Error::Parse(format!("expected LAMBDA:DELTA, got {p:?}")))?;
        let lambda: Partition = if lambda.is_empty() { Partition::empty() } else { lambda.parse()? };
        fam = fam.perturbed(&lambda, parse_rational(delta)?)?;
    }
    Ok(fam)
}

fn dispatch(cli: &Cli) -> Result<Output, Error> {
    let method = method(cli);
    match &cli.command {
        Command::Count { alpha, beta, a, transitive } => {
            let spec = FactorizationSpec::new(alpha.clone(), beta.clone(), parse_list(a)?)?;
            Ok(Output::scalar(&Rational::from_integer(count(&spec, *transitive, method)?)))
        }
        Command::Hurwitz(args) => Ok(Output::scalar(&double_hurwitz(&profile(args)?, method)?)),
        Command::Mhypermap { profile: args, m } => Ok(Output::scalar(&m_hypermap(&profile(args)?, *m, method)?)),
        Command::PolyInM(args) => {
            let poly = polynomial_in_m(&profile(args)?, method)?;
            let coefficients: Vec<String> = poly.coefficients().iter().map(format_rational).collect();
            Ok(Output { text: poly.to_string(), json: json!({ "coefficients": coefficients }), ok: true })
        }
        Command::Hypermap(args) => Ok(Output::scalar(&hypermap_count(&args.alpha, &args.beta, args.genus, method)?)),
        Command::Maps { alpha, edges, faces } => Ok(Output::scalar(&map_count(alpha, *edges, *faces, method)?)),
        Command::Triangulations { n_max, genus } => {
            if *n_max == 0 {
                return Err(Error::InvalidArgument("--n-max must be at least 1".into()));
            }
            let table = f_table(*n_max);
            let mut text = String::from("n\tg\tF");
            let mut rows = Vec::new();
            for (n, g) in table.entries() {
                if genus.is_some_and(|want| want != g) {
                    continue;
                }
                let f = table.count(n, g)?;
                text.push_str(&format!("\n{n}\t{g}\t{f}"));
                rows.push(json!({ "n": n, "g": g, "F": f.to_string() }));
            }
            Ok(Output { text, json: Value::Array(rows), ok: true })
        }
        Command::PluckerCheck { family, cap } => {
            let fam = build_family(family, 2 * cap + 1)?;
            let violations: Vec<Value> = plucker_check_all(&fam, *cap)?
                .iter()
                .map(|v| json!({ "alpha": v.alpha.to_string(), "beta": v.beta.to_string(), "value": format_rational(&v.value) }))
                .collect();
            let text = serde_json::to_string_pretty(&violations).expect("json values serialize");
            Ok(Output { text, json: Value::Array(violations), ok: true })
        }
        Command::KpResidual { series, family, cap, eq } => {
            let f = match series {
                Some(s) => GradedSeries::parse(s, *cap)?,
                None => {
                    let fam = build_family(family, *cap)?;
                    log_tau(&fam, *cap)?
                }
            };
            let r = kp_residual(&f, *eq)?.to_exact_string();
            Ok(Output { text: format!("residual: {r}"), json: json!({ "residual": r }), ok: true })
        }
        Command::Verify { suite: Suite::Cubeconst { z_cap } } => {
            let checks = check_cubeconst(*z_cap, cli.bound.max(2 * z_cap))?;
            let mut lines = Vec::new();
            let mut items = Vec::new();
            for c in &checks {
                let status = match &c.first_failure {
                    None => format!("holds through z^{}", c.z_cap),
                    Some((z, e, l, r)) => {
                        format!("fails at z^{z} {e:?}: {} vs {}", format_rational(l), format_rational(r))
                    }
                };
                lines.push(format!("{}: {status}", c.name));
                items.push(json!({ "identity": c.name, "holds": c.holds(), "detail": status }));
            }
            let ok = checks.iter().all(|c| c.holds());
            Ok(Output { text: lines.join("\n"), json: Value::Array(items), ok })
        }
        Command::Verify { suite: Suite::KpPartials { n_max } } => {
            let failures = kp_triangulation_partials(*n_max)?;
            let items: Vec<Value> = failures
                .iter()
                .map(|f| json!({ "n": f.n, "g": f.g, "value": format_rational(&f.value) }))
                .collect();
            let text = if failures.is_empty() {
                format!("all coefficients vanish for n <= {n_max}")
            } else {
                failures
                    .iter()
                    .map(|f| format!("(n, g) = ({}, {}): {}", f.n, f.g, format_rational(&f.value)))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            Ok(Output { text, json: Value::Array(items), ok: failures.is_empty() })
        }
        Command::VerifyAll { timings } => {
            let reports = acceptance::run_all();
            let text = reports.iter().map(|r| r.render(*timings)).collect::<Vec<_>>().join("\n");
            let items: Vec<Value> = reports
                .iter()
                .map(|r| json!({ "criterion": r.number, "title": r.title, "passed": r.passed(), "summary": r.summary, "failures": r.failures }))
                .collect();
            Ok(Output { text, json: Value::Array(items), ok: reports.iter().all(|r| r.passed()) })
        }
    }
}

fn error_json(kind: &str, message: &str) -> String {
    json!({ "error": { "kind": kind, "message": message } }).to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) => {
            e.exit()
        }
        Err(e) => {
            println!("{}", error_json("usage", e.to_string().trim()));
            return ExitCode::from(2);
        }
    };
    if cli.workers == 0 {
        println!("{}", error_json("invalid_argument", "--workers must be at least 1"));
        return ExitCode::from(2);
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build().expect("thread pool");
    match pool.install(|| dispatch(&cli)) {
        Ok(out) => {
            match cli.format {
                Format::Tsv => println!("{}", out.text),
                Format::Json => println!("{}", out.json),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            println!("{}", error_json(e.kind(), &e.to_string()));
            ExitCode::FAILURE
        }
    }
}
