//! Acceptance criteria, one line each. Exits nonzero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use qplane_core::expr::parse_jet;
use qplane_core::ideals::{primality_falsification, Violation};
use qplane_core::verify::{self, Report};
use qplane_core::{JetPoly, Symbol};

const SEED: u64 = 2024;

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_reports(reports: &[Report], limit: Option<Duration>) -> Outcome {
    let elapsed: Duration = reports.iter().map(|r| r.elapsed).sum();
    let mut pass = reports.iter().all(Report::all_pass);
    let mut detail = reports
        .iter()
        .map(|r| format!("{} {}", r.suite, r.summary()))
        .collect::<Vec<_>>()
        .join(", ");
    for r in reports {
        for c in r.failures().take(3) {
            detail.push_str(&format!("; {}: {}", c.name, c.detail));
        }
    }
    if let Some(limit) = limit {
        pass &= elapsed < limit;
        detail.push_str(&format!(
            "; {} ms (limit {} s)",
            elapsed.as_millis(),
            limit.as_secs()
        ));
    }
    Outcome { pass, detail }
}

fn jet(text: &str, n: u32) -> JetPoly {
    parse_jet(text, n).expect("fixture parses")
}

fn falsification() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (text, n) in [("x*y' - x'*y", 1), ("x", 0)] {
        let rep = primality_falsification(&jet(text, n), 200, SEED).expect("falsification runs");
        pass &= rep.violations.is_empty();
        parts.push(format!(
            "{text}: {} violations in {} trials",
            rep.violations.len(),
            rep.trials
        ));
    }
    let control = primality_falsification(&jet("x*y", 0), 200, SEED).expect("falsification runs");
    let expected = Violation {
        g: JetPoly::symbol(0, Symbol::X(0)),
        h: JetPoly::symbol(0, Symbol::Y(0)),
    };
    let found = control.violations.contains(&expected);
    pass &= found;
    parts.push(format!("x*y control yields (x, y): {found}"));
    Outcome {
        pass,
        detail: parts.join(", "),
    }
}

fn cli_round_trip() -> Outcome {
    let rt = verify::roundtrip(500, SEED);
    let mut pass = rt.all_pass();
    let mut detail = format!("roundtrip {}", rt.summary());
    let bin = env!("CARGO_BIN_EXE_qplane");
    let suites: &[&[&str]] = &[
        &["qbinom", "--max", "10"],
        &["chu", "--max", "6"],
        &["rootofunity", "--primes", "2,3,5,7"],
        &["qexp", "--max", "6"],
        &["confluence", "-n", "2"],
        &["hopf"],
        &["coaction"],
        &["extraction", "--trials", "100", "--seed", "7"],
        &[
            "primality",
            "-n",
            "1",
            "-e",
            "x*y' - x'*y",
            "--trials",
            "200",
            "--seed",
            "7",
        ],
        &["oracle"],
        &["delta"],
        &["reduction"],
        &["prolongation"],
        &["roundtrip"],
    ];
    let mut failed = Vec::new();
    for args in suites {
        let status = Command::new(bin)
            .arg("verify")
            .args(*args)
            .output()
            .expect("binary runs");
        if !status.status.success() {
            failed.push(args[0]);
        }
    }
    pass &= failed.is_empty();
    detail.push_str(&format!(
        ", {}/{} verify subcommands exit 0",
        suites.len() - failed.len(),
        suites.len()
    ));
    if !failed.is_empty() {
        detail.push_str(&format!(" (failed: {})", failed.join(", ")));
    }
    Outcome { pass, detail }
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        (
            "q-binomial theorem, m <= 10",
            Box::new(|| from_reports(&[verify::qbinom(10)], Some(Duration::from_secs(5)))),
        ),
        (
            "q-Pascal and q-Chu-Vandermonde, m,n,p <= 6",
            Box::new(|| from_reports(&[verify::chu(6)], Some(Duration::from_secs(5)))),
        ),
        (
            "root-of-unity collapse, p in {2,3,5,7}",
            Box::new(|| from_reports(&[verify::rootofunity(&[2, 3, 5, 7])], None)),
        ),
        (
            "q-exponential multiplicativity, N <= 6",
            Box::new(|| from_reports(&[verify::qexp(6)], None)),
        ),
        (
            "normal-form bijection and confluence",
            Box::new(|| from_reports(&[verify::confluence(2, 100, SEED)], None)),
        ),
        (
            "oracle equivalence, 200 pairs",
            Box::new(|| {
                from_reports(
                    &[verify::oracle(200, 2, 5, SEED)],
                    Some(Duration::from_secs(60)),
                )
            }),
        ),
        (
            "delta compatibility, n <= 3, and df = g1 + g2",
            Box::new(|| from_reports(&[verify::delta(3)], None)),
        ),
        (
            "size-reduction lemma, 100 inputs",
            Box::new(|| from_reports(&[verify::reduction(100, SEED)], None)),
        ),
        (
            "bi-homogeneous extraction, 100 inputs",
            Box::new(|| from_reports(&[verify::extraction(100, SEED)], None)),
        ),
        ("primality falsification", Box::new(falsification)),
        (
            "delta-stability of prolongation chains",
            Box::new(|| from_reports(&[verify::prolongation(3)], None)),
        ),
        (
            "Hopf axioms and plane covariance",
            Box::new(|| {
                from_reports(
                    &[verify::hopf_axioms(), verify::coaction()],
                    Some(Duration::from_secs(10)),
                )
            }),
        ),
        (
            "CLI round trip and verify exit codes",
            Box::new(cli_round_trip),
        ),
    ];

    let start = Instant::now();
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let out = check();
        let mark = if out.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} [PRIMARY] {mark}  {name}: {}",
            i + 1,
            out.detail
        );
        failures += usize::from(!out.pass);
    }
    println!(
        "acceptance: {}/{} criteria pass ({} ms)",
        criteria.len() - failures,
        criteria.len(),
        start.elapsed().as_millis()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
