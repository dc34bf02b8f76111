//! `qplane`: command-line front end for the quantum-plane jet algebras.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qplane_core::expr::{parse_glq2, parse_jet};
use qplane_core::ideals::{
    extract_bihomogeneous, is_delta_stable_with_budget, parse_ideal_file, reduce_x, reduce_y,
    BihomogeneousIdeal, IdealPresentation, DEFAULT_BUDGET,
};
use qplane_core::jetalg::{delta_jet, mul_jet};
use qplane_core::{verify, BiDegree, JetPoly, NcPoly, Report};

/// Environment variable overriding the Buchberger reduction budget.
const BUDGET_VAR: &str = "QPLANE_GROEBNER_BUDGET";

#[derive(Parser)]
#[command(
    name = "qplane",
    version,
    about = "Exact computation in the jet algebras of the quantum plane"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Session {
    /// Jet order of the ambient algebra.
    #[arg(short = 'n', long = "order")]
    order: u32,
    /// Expression to operate on.
    #[arg(short = 'e', long = "expr", allow_hyphen_values = true)]
    expr: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum AxisArg {
    Y,
    X,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an expression.
    Normalize {
        /// Jet order (required unless --glq2).
        #[arg(short = 'n', long = "order", required_unless_present = "glq2")]
        order: Option<u32>,
        #[arg(short = 'e', long = "expr", allow_hyphen_values = true)]
        expr: String,
        /// Work in GL_q(2) instead of a jet algebra.
        #[arg(long)]
        glq2: bool,
    },
    /// Product of two elements.
    Mul {
        #[arg(short = 'n', long = "order")]
        order: u32,
        #[arg(
            short = 'e',
            long = "expr",
            num_args = 1,
            required = true,
            allow_hyphen_values = true
        )]
        exprs: Vec<String>,
        /// Recompute through the free algebra and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Iterated derivation.
    Delta {
        #[command(flatten)]
        session: Session,
        #[arg(long, default_value_t = 1)]
        times: u32,
    },
    /// Bi-degrees present in an element.
    Support {
        #[command(flatten)]
        session: Session,
    },
    /// Number of bi-degrees present in an element.
    Size {
        #[command(flatten)]
        session: Session,
    },
    /// One q-commutator reduction step.
    Reduce {
        #[command(flatten)]
        session: Session,
        #[arg(long, value_enum)]
        axis: AxisArg,
        /// The exponent ν (y-axis) or μ (x-axis).
        #[arg(long = "exp")]
        exponent: u32,
        /// Jet order of the commutator letter.
        #[arg(long = "sym", default_value_t = 0)]
        symbol_order: u32,
    },
    /// Isolate one bi-homogeneous part inside the ideal.
    Extract {
        #[command(flatten)]
        session: Session,
        /// Target bi-degree `i,j`.
        #[arg(long, value_parser = parse_bidegree)]
        target: BiDegree,
        /// Write the reduction trace to this file as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Membership in an ideal given by a file.
    Member {
        #[command(flatten)]
        session: Session,
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Whether the derivatives of an ideal's generators stay inside it.
    Deltastable {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Run a verification suite.
    #[command(subcommand)]
    Verify(Suite),
}

#[derive(Subcommand)]
enum Suite {
    /// q-binomial theorem.
    Qbinom {
        #[arg(long, default_value_t = 10)]
        max: u32,
    },
    /// q-Pascal and q-Chu-Vandermonde.
    Chu {
        #[arg(long, default_value_t = 6)]
        max: u32,
    },
    /// Cyclotomic divisibility of Gauss polynomials.
    Rootofunity {
        #[arg(long, value_delimiter = ',', default_value = "2,3,5,7")]
        primes: Vec<u32>,
    },
    /// Multiplicativity of the truncated q-exponential.
    Qexp {
        #[arg(long, default_value_t = 6)]
        max: u32,
    },
    /// Critical pairs and normal-form properties.
    Confluence {
        #[arg(short = 'n', long = "order", default_value_t = 2)]
        order: u32,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Hopf algebra axioms of GL_q(2).
    Hopf,
    /// Covariance of the quantum plane.
    Coaction,
    /// Bi-homogeneous extraction on random inputs.
    Extraction {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Search for zero divisors modulo a principal ideal.
    Primality {
        #[arg(short = 'n', long = "order", default_value_t = 1)]
        order: u32,
        #[arg(short = 'e', long = "expr", allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Twisted product against the rewriting engine.
    Oracle {
        #[arg(long, default_value_t = 200)]
        pairs: usize,
        #[arg(long, default_value_t = 2)]
        max_order: u32,
        #[arg(long, default_value_t = 5)]
        max_degree: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Derivation against the defining relations.
    Delta {
        #[arg(long, default_value_t = 3)]
        max: u32,
    },
    /// Support and size law of the reduction steps.
    Reduction {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// δ-stability of a prolongation chain.
    Prolongation {
        #[arg(long, default_value_t = 3)]
        max: u32,
    },
    /// Parse/render round trips.
    Roundtrip {
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Every suite with its default parameters.
    All {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_bidegree(s: &str) -> Result<BiDegree, String> {
    let (i, j) = s.split_once(',').ok_or("expected i,j")?;
    let i = i.trim().parse().map_err(|e| format!("{e}"))?;
    let j = j.trim().parse().map_err(|e| format!("{e}"))?;
    Ok(BiDegree::new(i, j))
}

fn budget() -> Result<usize> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{BUDGET_VAR}={v} is not a count")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn jet(session: &Session) -> Result<JetPoly> {
    parse_jet(&session.expr, session.order)
        .with_context(|| format!("cannot read '{}'", session.expr))
}

fn load_ideal(path: &PathBuf) -> Result<IdealPresentation> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_ideal_file(&text).with_context(|| format!("in {}", path.display()))
}

fn poly_json(p: &JetPoly) -> Value {
    let mut v = p.to_json();
    v["text"] = p.to_string().into();
    v
}

/// What a command prints, and whether it succeeded.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn poly(p: &JetPoly) -> Self {
        Outcome {
            text: p.to_string(),
            json: poly_json(p),
            ok: true,
        }
    }

    fn report(r: &Report) -> Self {
        Outcome {
            text: r.to_string(),
            json: r.to_json(),
            ok: r.all_pass(),
        }
    }

    fn reports(rs: &[Report]) -> Self {
        Outcome {
            text: rs
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join("\n\n"),
            json: Value::Array(rs.iter().map(Report::to_json).collect()),
            ok: rs.iter().all(Report::all_pass),
        }
    }
}

fn run(command: Command) -> Result<Outcome> {
    Ok(match command {
        Command::Normalize { order, expr, glq2 } => {
            if glq2 {
                let p: NcPoly =
                    parse_glq2(&expr).with_context(|| format!("cannot read '{expr}'"))?;
                Outcome {
                    text: p.to_string(),
                    json: json!({ "text": p.to_string() }),
                    ok: true,
                }
            } else {
                let order = order.expect("clap enforces -n");
                Outcome::poly(&jet(&Session { order, expr })?)
            }
        }
        Command::Mul {
            order,
            exprs,
            oracle,
        } => {
            let factors = exprs
                .iter()
                .map(|e| parse_jet(e, order).with_context(|| format!("cannot read '{e}'")))
                .collect::<Result<Vec<_>>>()?;
            let mut acc = JetPoly::one(order);
            for f in &factors {
                acc = mul_jet(&acc, f)?;
            }
            let mut out = Outcome::poly(&acc);
            if oracle {
                let mut free = NcPoly::one();
                for f in &factors {
                    free = &free * &f.to_free();
                }
                let slow = JetPoly::from_free(&free, order)?;
                let agree = slow == acc;
                out.json["oracle"] = agree.into();
                if !agree {
                    out.text = format!("{}\noracle disagrees: {slow}", out.text);
                    out.ok = false;
                }
            }
            out
        }
        Command::Delta { session, times } => {
            let mut p = jet(&session)?;
            for _ in 0..times {
                p = delta_jet(&p);
            }
            Outcome::poly(&p)
        }
        Command::Support { session } => {
            let p = jet(&session)?;
            let s = p.support();
            Outcome {
                text: format!(
                    "{{{}}}",
                    s.iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
                json: json!(s.iter().map(|d| [d.x, d.y]).collect::<Vec<_>>()),
                ok: true,
            }
        }
        Command::Size { session } => {
            let n = jet(&session)?.size();
            Outcome {
                text: n.to_string(),
                json: json!(n),
                ok: true,
            }
        }
        Command::Reduce {
            session,
            axis,
            exponent,
            symbol_order,
        } => {
            let g = jet(&session)?;
            let r = match axis {
                AxisArg::Y => reduce_y(&g, exponent, symbol_order)?,
                AxisArg::X => reduce_x(&g, exponent, symbol_order)?,
            };
            Outcome::poly(&r)
        }
        Command::Extract {
            session,
            target,
            trace,
        } => {
            let g = jet(&session)?;
            let (r, tr) = extract_bihomogeneous(&g, target)?;
            if let Some(path) = trace {
                let text = serde_json::to_string_pretty(&tr.to_json())?;
                std::fs::write(&path, text)
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            let mut out = Outcome::poly(&r);
            out.json["trace"] = tr.to_json();
            out.text = format!(
                "{}\n{} steps, trace valid: {}",
                out.text,
                tr.steps.len(),
                tr.is_valid()
            );
            out.ok = tr.is_valid();
            out
        }
        Command::Member { session, ideal } => {
            let t = load_ideal(&ideal)?;
            let f = jet(&session)?;
            if f.order() != t.order() {
                bail!(
                    "expression order {} differs from the ideal's order {}",
                    f.order(),
                    t.order()
                );
            }
            let m = BihomogeneousIdeal::with_budget(t, budget()?)?.contains(&f)?;
            let cert = m
                .certificate
                .as_ref()
                .map(|c| c.to_json())
                .unwrap_or(Value::Null);
            Outcome {
                text: match &m.certificate {
                    Some(c) => format!("true\ncertificate: {}", c.to_json()),
                    None => "false".into(),
                },
                json: json!({ "member": m.member, "certificate": cert }),
                ok: true,
            }
        }
        Command::Deltastable { ideal } => {
            let t = load_ideal(&ideal)?;
            let st = is_delta_stable_with_budget(&t, budget()?)?;
            Outcome {
                text: if st.stable {
                    "true".into()
                } else {
                    format!(
                        "false\nderivatives outside the ideal: generators {:?}",
                        st.failures
                    )
                },
                json: json!({ "stable": st.stable, "failures": st.failures, "frontier": st.frontier }),
                ok: true,
            }
        }
        Command::Verify(suite) => run_suite(suite)?,
    })
}

fn run_suite(suite: Suite) -> Result<Outcome> {
    Ok(match suite {
        Suite::Qbinom { max } => Outcome::report(&verify::qbinom(max)),
        Suite::Chu { max } => Outcome::report(&verify::chu(max)),
        Suite::Rootofunity { primes } => Outcome::report(&verify::rootofunity(&primes)),
        Suite::Qexp { max } => Outcome::report(&verify::qexp(max)),
        Suite::Confluence {
            order,
            samples,
            seed,
        } => Outcome::report(&verify::confluence(order, samples, seed)),
        Suite::Hopf => Outcome::report(&verify::hopf_axioms()),
        Suite::Coaction => Outcome::report(&verify::coaction()),
        Suite::Extraction { trials, seed } => Outcome::report(&verify::extraction(trials, seed)),
        Suite::Primality {
            order,
            expr,
            trials,
            seed,
        } => {
            let f = jet(&Session { order, expr })?;
            Outcome::report(&verify::primality(&f, trials, seed))
        }
        Suite::Oracle {
            pairs,
            max_order,
            max_degree,
            seed,
        } => Outcome::report(&verify::oracle(pairs, max_order, max_degree, seed)),
        Suite::Delta { max } => Outcome::report(&verify::delta(max)),
        Suite::Reduction { trials, seed } => Outcome::report(&verify::reduction(trials, seed)),
        Suite::Prolongation { max } => Outcome::report(&verify::prolongation(max)),
        Suite::Roundtrip { samples, seed } => Outcome::report(&verify::roundtrip(samples, seed)),
        Suite::All { seed } => {
            let f = parse_jet("x*y' - x'*y", 1)?;
            Outcome::reports(&[
                verify::qbinom(10),
                verify::chu(6),
                verify::rootofunity(&[2, 3, 5, 7]),
                verify::qexp(6),
                verify::confluence(2, 50, seed),
                verify::oracle(200, 2, 5, seed),
                verify::delta(3),
                verify::reduction(100, seed),
                verify::extraction(100, seed),
                verify::primality(&f, 200, seed),
                verify::prolongation(3),
                verify::hopf_axioms(),
                verify::coaction(),
                verify::roundtrip(500, seed),
            ])
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json"));
            } else {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": format!("{e:#}") }));
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(2)
        }
    }
}
