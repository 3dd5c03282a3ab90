//! Acceptance criteria. Each test prints one `criterion N: PASS|FAIL` line.
//!
//! Run with `cargo test -p relcalc-cli --test acceptance -- --nocapture` to
//! see the lines.

use std::path::PathBuf;
use std::process::Command;
use std::sync::{Mutex, MutexGuard};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use relcalc::generate::{random_graph, random_relation};
use relcalc::laws::{check_instance, exhaustive_check, randomized_check, Outcome, Shape, Verdict};
use relcalc::oracle::{reachability_scc, star_by_powers, tarjan_scc};
use relcalc::scc::equivalence_classes;
use relcalc::{
    condense, relation_from_graph, scc_equivalence, CheckConfig, Graph, Law, LawId, Relation,
};
use relcalc_cli::{run, Hooks, EXIT_VIOLATION};

/// Held by criteria with wall-clock limits so they do not time each other.
static TIMED: Mutex<()> = Mutex::new(());

fn timed() -> MutexGuard<'static, ()> {
    TIMED.lock().unwrap_or_else(|e| e.into_inner())
}

fn verdict(criterion: u32, summary: &str, pass: bool, detail: String) {
    println!(
        "criterion {criterion}: {} {summary} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {summary}: {detail}");
}

/// Main theorem with the outer star dropped: `R* ∩ (R*)⌣ = R ∩ (R⌣)*`.
struct DroppedStar;

impl Law for DroppedStar {
    fn id(&self) -> &'static str {
        "corrupted-main-theorem"
    }
    fn variables(&self) -> &'static [&'static str] {
        &["R"]
    }
    fn shape(&self) -> Shape {
        Shape::Equation
    }
    fn evaluate(&self, _: usize, env: &[Relation]) -> relcalc::Result<Outcome> {
        let r = &env[0];
        let r_star = r.star();
        let lhs = r_star.meet(&r_star.converse())?;
        let rhs = r.meet(&r.converse().star())?;
        Ok(if lhs.equals(&rhs)? {
            Outcome::Holds
        } else {
            Outcome::Violated
        })
    }
}

/// The 200 graphs of criteria 5 and 6: sizes and densities cycled.
fn scc_corpus() -> Vec<Graph> {
    let sizes = [8, 64, 256, 512];
    let densities = [0.01, 0.05, 0.2];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..200)
        .map(|i| random_graph(sizes[i % 4], densities[(i / 4) % 3], &mut rng))
        .collect()
}

fn quotient_is_acyclic(r: &Relation) -> bool {
    let q = condense(r).quotient();
    let q_star = q.star();
    q_star
        .meet(&q_star.converse())
        .unwrap()
        .is_subset(&Relation::identity(q.size()).unwrap())
        .unwrap()
}

#[test]
fn criterion_1_main_theorem_exhaustive() {
    let _timed = timed();
    let start = Instant::now();
    let mut failures = 0;
    let mut counts = Vec::new();
    for n in 1..=3 {
        let report = exhaustive_check(&LawId::MainTheorem, n).unwrap();
        failures += u64::from(!report.passed());
        counts.push(report.instances);
    }
    let elapsed = start.elapsed();
    verdict(
        1,
        "main theorem exhaustive n=1..3",
        failures == 0 && counts == [2, 16, 512] && elapsed < Duration::from_secs(5),
        format!("instances {counts:?}, {failures} failures, {elapsed:.2?}"),
    );

    let start = Instant::now();
    let report = exhaustive_check(&LawId::MainTheorem, 4).unwrap();
    let elapsed = start.elapsed();
    verdict(
        1,
        "main theorem exhaustive n=4 (stretch)",
        report.passed() && report.instances == 65_536 && elapsed < Duration::from_secs(60),
        format!("{} instances, {elapsed:.2?}", report.instances),
    );
}

#[test]
fn criterion_2_catalogue_exhaustive_n2() {
    let _timed = timed();
    let start = Instant::now();
    let mut failed = Vec::new();
    for law in LawId::ALL {
        let report = exhaustive_check(&law, 2).unwrap();
        let expected = 1u64 << (4 * law.arity());
        if !report.passed() || report.instances != expected {
            failed.push(report.to_string());
        }
    }
    let elapsed = start.elapsed();
    verdict(
        2,
        "full catalogue exhaustive at n=2",
        failed.is_empty() && elapsed < Duration::from_secs(60),
        format!(
            "{} laws, failures {failed:?}, {elapsed:.2?}",
            LawId::ALL.len()
        ),
    );
}

#[test]
fn criterion_3_catalogue_randomized_n8() {
    let _timed = timed();
    let config = CheckConfig {
        size: 8,
        samples: 10_000,
        seed: 3,
        ..CheckConfig::default()
    };
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut worst_non_vacuous = 1.0f64;
    for law in LawId::ALL {
        let report = randomized_check(&law, &config).unwrap();
        if !report.passed() {
            problems.push(report.to_string());
        }
        if law.shape() == Shape::Implication {
            let fraction = (report.instances - report.vacuous) as f64 / report.instances as f64;
            worst_non_vacuous = worst_non_vacuous.min(fraction);
            if fraction < 0.5 {
                problems.push(format!("{law}: non-vacuous fraction {fraction:.3}"));
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        3,
        "full catalogue randomized, 10000 samples at n=8",
        problems.is_empty() && elapsed < Duration::from_secs(60),
        format!(
            "min non-vacuous fraction {worst_non_vacuous:.3}, problems {problems:?}, {elapsed:.2?}"
        ),
    );
}

#[test]
fn criterion_4_closure_oracle_equivalence() {
    let mut mismatches = 0;
    for pattern in 0..512u64 {
        let r = Relation::from_pattern(3, pattern).unwrap();
        mismatches += u32::from(r.star() != star_by_powers(&r).closure);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let densities = [0.01, 0.03, 0.05, 0.1, 0.3, 0.5];
    for i in 0..1000 {
        let r = random_relation(32, densities[i % densities.len()], &mut rng);
        mismatches += u32::from(r.star() != star_by_powers(&r).closure);
    }
    verdict(
        4,
        "star agrees with Kleene iteration",
        mismatches == 0,
        format!("512 at n=3 + 1000 at n=32, {mismatches} mismatches"),
    );
}

#[test]
fn criterion_5_scc_triple_agreement() {
    let _timed = timed();
    let start = Instant::now();
    let mut mismatches = 0;
    for g in scc_corpus() {
        let relational =
            equivalence_classes(&scc_equivalence(&relation_from_graph(&g).unwrap())).unwrap();
        let tarjan = tarjan_scc(&g);
        let reach = reachability_scc(&g);
        mismatches += u32::from(relational != tarjan || tarjan != reach);
    }
    let elapsed = start.elapsed();
    verdict(
        5,
        "relational, Tarjan and reachability SCC agree on 200 graphs",
        mismatches == 0 && elapsed < Duration::from_secs(120),
        format!("{mismatches} mismatches, {elapsed:.2?}"),
    );
}

#[test]
fn criterion_6_condensation_acyclic() {
    let mut violations = 0;
    for g in scc_corpus() {
        violations += u32::from(!quotient_is_acyclic(&relation_from_graph(&g).unwrap()));
    }
    for pattern in 0..512u64 {
        violations += u32::from(!quotient_is_acyclic(
            &Relation::from_pattern(3, pattern).unwrap(),
        ));
    }
    verdict(
        6,
        "condensation quotients are acyclic",
        violations == 0,
        format!("200 graphs + 512 relations, {violations} violations"),
    );
}

#[test]
fn criterion_7_fault_detection() {
    let report = exhaustive_check(&DroppedStar, 2).unwrap();
    let witness = report.witness_env().unwrap_or_default();
    let swap = Relation::from_pairs(2, [(0, 1), (1, 0)]).unwrap();
    let reproduces = witness.len() == 1 && !check_instance(&DroppedStar, 2, &witness).unwrap();
    let small = witness.first().is_some_and(|w| w.len() <= swap.len());
    verdict(
        7,
        "corrupted main theorem is refuted with a small witness",
        report.verdict == Verdict::Fail && reproduces && small,
        format!("witness {:?}", witness.first().map(ToString::to_string)),
    );

    let hooks = Hooks {
        extra_laws: vec![Box::new(DroppedStar)],
        ..Hooks::default()
    };
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        [
            "relcalc",
            "laws",
            "--law",
            "corrupted-main-theorem",
            "--max-size",
            "2",
            "--exhaustive",
        ],
        &hooks,
        &mut out,
        &mut err,
    );
    let stdout = String::from_utf8(out).unwrap();
    verdict(
        7,
        "CLI exits 1 on the corrupted law",
        code == EXIT_VIOLATION && stdout.contains("verdict=fail\n# witness R\n"),
        format!("exit {code}"),
    );
}

#[test]
fn criterion_8_performance_smoke() {
    let _timed = timed();
    let r = random_relation(1024, 0.5, &mut ChaCha8Rng::seed_from_u64(8));
    let start = Instant::now();
    let closure = r.star();
    let star_time = start.elapsed();
    assert_eq!(closure, Relation::top(1024).unwrap());

    let sparse = random_relation(1024, 1.0 / 1024.0, &mut ChaCha8Rng::seed_from_u64(9));
    let mut scc_time = Duration::ZERO;
    for input in [&r, &sparse] {
        let start = Instant::now();
        let e = scc_equivalence(input);
        scc_time = scc_time.max(start.elapsed());
        assert!(relcalc::scc::is_equivalence(&e));
    }

    verdict(
        8,
        "closure and SCC at n=1024",
        star_time < Duration::from_secs(2) && scc_time < Duration::from_secs(5),
        format!("star {star_time:.2?}, slowest scc_equivalence {scc_time:.2?}"),
    );
}

#[test]
fn criterion_9_cli_contract() {
    let tests_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests");
    let relcalc = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_relcalc"))
            .args(args)
            .current_dir(&tests_dir)
            .output()
            .unwrap()
    };

    let out = relcalc(&[
        "laws",
        "--law",
        "main-theorem",
        "--max-size",
        "3",
        "--exhaustive",
    ]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    verdict(
        9,
        "`laws --law main-theorem --max-size 3 --exhaustive`",
        out.status.code() == Some(0)
            && stdout
                == "law=main-theorem mode=exhaustive n=1 instances=2 vacuous=0 verdict=pass\n\
                    law=main-theorem mode=exhaustive n=2 instances=16 vacuous=0 verdict=pass\n\
                    law=main-theorem mode=exhaustive n=3 instances=512 vacuous=0 verdict=pass\n",
        format!("exit {:?}, stdout {stdout:?}", out.status.code()),
    );

    let out = relcalc(&["scc", "fixtures/two_cycle_tail.txt", "--via", "both"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    verdict(
        9,
        "`scc fixtures/two_cycle_tail.txt --via both`",
        out.status.code() == Some(0) && stdout == "0 1\n2\n",
        format!("exit {:?}, stdout {stdout:?}", out.status.code()),
    );

    let out = relcalc(&["scc", "missing.txt"]);
    let stderr = String::from_utf8_lossy(&out.stderr);
    verdict(
        9,
        "`scc missing.txt`",
        out.status.code() == Some(2)
            && out.stdout.is_empty()
            && stderr.starts_with("error: missing.txt: "),
        format!("exit {:?}, stderr {stderr:?}", out.status.code()),
    );
}
