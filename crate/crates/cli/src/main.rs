use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use uqfm_core::algebra::{casimir, center_membership, AlgElement, AlgebraParams, HopfMap, HopfParams};
use uqfm_core::hyperbolic::{classify_spectrum, MaxIdealPoint};
use uqfm_core::qfield::{parse_rational, FieldElem};
use uqfm_core::repmod::{casimir_scalar, decompose_completely, one_param_irrep, tensor_product, weight_decomposition};
use uqfm_core::verify::{run_suite, SuiteConfig, SUITES};
use uqfm_core::whittaker::{build_whittaker_module, central_action, whittaker_vectors, WhittakerData};

#[derive(Parser, Debug)]
#[command(name = "uqfm", version, about = "Exact computations in U_q(f_m(K,H)) and its modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Degree m of f_m (default 1; `verify` covers its default range when unset).
    #[arg(long, global = true)]
    m: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Evaluate matrix entries at this rational value of q.
    #[arg(long = "q-eval", global = true)]
    q_eval: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct PointArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    #[arg(long, allow_hyphen_values = true)]
    gamma: String,
    /// Bound on the orbit search.
    #[arg(long = "n-max", default_value_t = 64)]
    n_max: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Spectral case of the maximal ideal at (alpha, beta, gamma).
    Classify(PointArgs),
    /// Matrices of the simple module attached to a point.
    BuildRep {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, default_value_t = 12)]
        window: usize,
    },
    /// Decomposition of V(n1) ⊗ V(n2) for one-parameter irreducibles.
    TensorDecompose {
        /// Highest weight exponent of the left factor (dimension n + 1).
        #[arg(long)]
        left: u32,
        /// Highest weight exponent of the right factor.
        #[arg(long)]
        right: u32,
        /// First leg exponent s of the coproduct, with t = s + m.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        s: i32,
    },
    /// Whittaker module with E -> e, Ω -> a, KH -> b.
    Whittaker {
        #[arg(long, allow_hyphen_values = true)]
        e: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value_t = 12)]
        window: usize,
    },
    /// Casimir element, or center membership of --element.
    Center {
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Named verification suite, or all of them.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

struct Rendered {
    json: Value,
    text: String,
    ok: bool,
}

fn field(flag: &str, src: &str) -> Result<FieldElem, Failure> {
    FieldElem::parse(src).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn usage<E: std::fmt::Display>(flag: &str) -> impl Fn(E) -> Failure + '_ {
    move |e| Failure::Usage(format!("--{flag}: {e}"))
}

fn point(cli: &Cli, p: &PointArgs) -> Result<MaxIdealPoint, Failure> {
    let (a, b, g) = (field("alpha", &p.alpha)?, field("beta", &p.beta)?, field("gamma", &p.gamma)?);
    MaxIdealPoint::new(a, b, g, cli.m()).map_err(usage("beta"))
}

fn run(cli: &Cli) -> Result<Rendered, Failure> {
    if cli.m == Some(0) {
        return Err(Failure::Usage("--m: must be positive".into()));
    }
    let q_eval = cli.q_eval.as_deref().map(parse_rational).transpose().map_err(usage("q-eval"))?;
    match &cli.command {
        Command::Classify(p) => {
            let pt = point(cli, p)?;
            let case = classify_spectrum(&pt, p.n_max).map_err(usage("n-max"))?;
            let json = serde_json::to_value(case).expect("serializable");
            Ok(Rendered { json, text: case.to_string(), ok: true })
        }
        Command::BuildRep { point: p, window } => {
            let pt = point(cli, p)?;
            let case = classify_spectrum(&pt, p.n_max).map_err(usage("n-max"))?;
            let module = uqfm_core::repmod::build_module(&pt, case, *window).map_err(usage("window"))?;
            let json = module.to_json(q_eval.as_ref()).map_err(usage("q-eval"))?;
            let report = module.verify_relations();
            let mut text = format!("{case}, dimension {}\n", module.dim());
            text.push_str(&matrices_text(&json));
            text.push_str(&format!("relations: {}", if report.passed() { "pass" } else { "FAIL" }));
            Ok(Rendered { json, text, ok: report.passed() })
        }
        Command::TensorDecompose { left, right, s } => {
            let params = AlgebraParams::one_param(cli.m());
            let hp = HopfParams::new(*s, *s + cli.m() as i32, params).map_err(usage("s"))?;
            let delta = HopfMap::one_param(params, hp)
                .and_then(|h| h.certify())
                .map_err(|e| Failure::Verification(e.to_string()))?;
            let a = one_param_irrep(cli.m(), *left, false).map_err(usage("left"))?;
            let b = one_param_irrep(cli.m(), *right, false).map_err(usage("right"))?;
            let t = tensor_product(&a, &b, &delta).map_err(|e| Failure::Verification(e.to_string()))?;
            let parts = decompose_completely(&t).map_err(|e| Failure::Verification(e.to_string()))?;
            let summands: Vec<Value> = parts
                .iter()
                .map(|(s, k)| {
                    let top = &weight_decomposition(s)[0].0;
                    json!({
                        "dim": s.dim(),
                        "multiplicity": k,
                        "highest_weight": { "K": top.k.to_string(), "H": top.h.to_string() },
                        "casimir": casimir_scalar(s).map(|c| c.to_string()),
                    })
                })
                .collect();
            let total: usize = parts.iter().map(|(s, k)| s.dim() * k).sum();
            let ok = total == t.dim();
            let text = parts.iter().map(|(s, k)| format!("{k} x dim {}", s.dim())).collect::<Vec<_>>().join(" + ");
            let json = json!({ "dim": t.dim(), "coproduct": delta.label(), "summands": summands });
            Ok(Rendered { json, text: format!("{} = {text}", t.dim()), ok })
        }
        Command::Whittaker { e, a, b, window } => {
            let d = WhittakerData::new(field("e", e)?, field("a", a)?, field("b", b)?, cli.m(), *window)
                .map_err(usage("window"))?;
            let module = build_whittaker_module(&d).map_err(usage("window"))?;
            let report = module.verify_relations();
            let (omega, kh) = central_action(&module);
            let wv = whittaker_vectors(&module).len();
            let ok = report.passed() && omega.as_ref() == Some(&d.a) && kh.as_ref() == Some(&d.b) && wv == 1;
            let dump = module.rep().to_json(q_eval.as_ref()).map_err(usage("q-eval"))?;
            let json = json!({
                "dim": module.dim(),
                "relations_passed": report.passed(),
                "omega_scalar": omega.map(|x| x.to_string()),
                "kh_scalar": kh.map(|x| x.to_string()),
                "whittaker_vectors": wv,
                "module": dump,
            });
            let text = format!(
                "dimension {}\nrelations: {}\nwhittaker vectors: {wv}\n{}",
                module.dim(),
                if report.passed() { "pass" } else { "FAIL" },
                matrices_text(&json["module"])
            );
            Ok(Rendered { json, text: text.trim_end().to_string(), ok })
        }
        Command::Center { element } => {
            let params = AlgebraParams::two_param(cli.m());
            let x = match element {
                Some(src) => AlgElement::parse(params, src).map_err(usage("element"))?,
                None => casimir(params),
            };
            let member = center_membership(&x);
            let json = json!({
                "element": x.to_string(),
                "central": member.is_some(),
                "in_omega_kh": member.as_ref().map(|p| p.to_string()),
            });
            let text = match &member {
                Some(p) => format!("{x}\ncentral: {p}"),
                None => format!("{x}\nnot central"),
            };
            Ok(Rendered { json, text, ok: true })
        }
        Command::Verify { suite } => {
            let cfg = SuiteConfig { m: cli.m, seed: cli.seed };
            let reports = run_suite(suite, &cfg).ok_or_else(|| {
                Failure::Usage(format!("--suite: unknown suite {suite:?}; expected one of {SUITES:?} or all"))
            })?;
            let ok = reports.iter().all(|r| r.passed());
            let text = reports
                .iter()
                .map(|r| {
                    let status = if r.passed() { "PASS" } else { "FAIL" };
                    let mut line = format!("{status} {} ({} checks)", r.suite, r.checks_run);
                    for f in &r.failures {
                        line.push_str(&format!("\n  {f}"));
                    }
                    line
                })
                .collect::<Vec<_>>()
                .join("\n");
            let json =
                if reports.len() == 1 { serde_json::to_value(&reports[0]) } else { serde_json::to_value(&reports) }
                    .expect("serializable");
            Ok(Rendered { json, text, ok })
        }
    }
}

impl Cli {
    fn m(&self) -> u32 {
        self.m.unwrap_or(1)
    }
}

fn matrices_text(dump: &Value) -> String {
    let mut out = String::new();
    if let Some(basis) = dump["basis"].as_array() {
        let names: Vec<&str> = basis.iter().filter_map(|b| b.as_str()).collect();
        out.push_str(&format!("basis: {}\n", names.join(", ")));
    }
    if let Some(ms) = dump["matrices"].as_object() {
        for (g, triplets) in ms {
            let entries: Vec<String> = triplets
                .as_array()
                .into_iter()
                .flatten()
                .map(|t| format!("({},{}) {}", t[0], t[1], t[2].as_str().unwrap_or_default()))
                .collect();
            out.push_str(&format!("{g}: {}\n", entries.join("; ")));
        }
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(r) => {
            let body = match cli.output {
                Output::Json => serde_json::to_string(&r.json).expect("serializable"),
                Output::Text => r.text,
            };
            let _ = writeln!(std::io::stdout(), "{body}");
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}
