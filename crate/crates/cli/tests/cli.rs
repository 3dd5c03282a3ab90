use std::fs;
use std::path::PathBuf;

use relcalc::Partition;
use relcalc_cli::{run, Hooks, EXIT_CONFIG, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn relcalc_with(hooks: &Hooks, args: &[&str]) -> Output {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("relcalc").chain(args.iter().copied());
    let code = run(argv, hooks, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn relcalc(args: &[&str]) -> Output {
    relcalc_with(&Hooks::default(), args)
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn scc_via_each_route() {
    for via in ["relational", "oracle", "both"] {
        let out = relcalc(&["scc", &fixture("two_cycle_tail.txt"), "--via", via]);
        assert_eq!(out.code, EXIT_OK, "{via}: {}", out.stderr);
        assert_eq!(out.stdout, "0 1\n2\n");
    }
}

#[test]
fn disagreeing_oracle_fails_both() {
    fn singletons(g: &relcalc::Graph) -> Partition {
        Partition::from_labels(&(0..g.node_count()).collect::<Vec<_>>())
    }
    let hooks = Hooks {
        scc_oracle: singletons,
        ..Hooks::default()
    };
    let out = relcalc_with(
        &hooks,
        &["scc", &fixture("two_cycle_tail.txt"), "--via", "both"],
    );
    assert_eq!(out.code, EXIT_VIOLATION);
    assert!(out.stderr.contains("partitions differ"));
    assert!(out.stdout.is_empty());
}

#[test]
fn condense_writes_dot_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("out.dot");
    let out = relcalc(&[
        "condense",
        &fixture("two_cycle_tail.txt"),
        "--dot",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.code, EXIT_OK);
    let dot = fs::read_to_string(&target).unwrap();
    assert_eq!(
        dot,
        "digraph condensation {\n  scc0 [label=\"0,1\"];\n  scc2 [label=\"2\"];\n  scc0 -> scc2;\n}\n"
    );
    let again = relcalc(&["condense", &fixture("two_cycle_tail.txt")]);
    assert_eq!(again.stdout, dot);
}

#[test]
fn star_prints_closure_document() {
    let out = relcalc(&["star", &fixture("chain.txt")]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "3 6\n0 0\n0 1\n0 2\n1 1\n1 2\n2 2\n");
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_temp(&dir, "bad.txt", "2 1\n0 5\n");
    let out = relcalc(&["scc", &bad]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);

    let short = write_temp(&dir, "short.txt", "3 2\n0 1\n");
    assert_eq!(relcalc(&["star", &short]).code, EXIT_INPUT);
    assert_eq!(relcalc(&["condense", "no-such-file"]).code, EXIT_INPUT);
    assert_eq!(relcalc(&["frobnicate"]).code, EXIT_INPUT);
}

#[test]
fn duplicate_edges_warn() {
    let dir = tempfile::tempdir().unwrap();
    let dup = write_temp(&dir, "dup.txt", "2 2\n0 1\n0 1\n");
    let out = relcalc(&["scc", &dup]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stderr.contains("1 duplicate edge"));
    assert_eq!(out.stdout, "0\n1\n");
}

#[test]
fn configuration_errors_exit_three() {
    assert_eq!(relcalc(&["laws", "--law", "no-such-law"]).code, EXIT_CONFIG);
    assert_eq!(
        relcalc(&["laws", "--law", "main-theorem", "--density", "0.5,1.2"]).code,
        EXIT_CONFIG
    );
    assert_eq!(
        relcalc(&["laws", "--law", "main-theorem", "--samples", "0"]).code,
        EXIT_CONFIG
    );
    let out = relcalc(&[
        "laws",
        "--law",
        "modularity-left",
        "--max-size",
        "3",
        "--exhaustive",
    ]);
    assert_eq!(out.code, EXIT_CONFIG);
    assert_eq!(out.stdout.lines().count(), 2);
    assert!(out.stderr.contains("2^27"));
}

#[test]
fn randomized_laws_are_deterministic() {
    let args = [
        "laws",
        "--all",
        "--size",
        "5",
        "--samples",
        "200",
        "--seed",
        "9",
        "--density",
        "0.2,0.6",
    ];
    let first = relcalc(&args);
    assert_eq!(first.code, EXIT_OK, "{}", first.stderr);
    assert_eq!(first.stdout.lines().count(), 22);
    assert!(first.stdout.lines().all(|l| l.ends_with("verdict=pass")));
    assert_eq!(relcalc(&args).stdout, first.stdout);
}

#[test]
fn witness_replay() {
    let dir = tempfile::tempdir().unwrap();
    let holds = write_temp(&dir, "r.txt", "# witness R\n2 2\n0 1\n1 0\n");
    let out = relcalc(&["laws", "--law", "main-theorem", "--witness", &holds]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(
        out.stdout,
        "law=main-theorem mode=replay n=2 verdict=pass\n"
    );

    // R ⊆ S fails, so the implication holds vacuously.
    let pair = write_temp(&dir, "rs.txt", "2 1\n0 1\n2 0\n");
    let out = relcalc(&["laws", "--law", "star-monotonic", "--witness", &pair]);
    assert_eq!(out.code, EXIT_OK);

    let wrong_arity = write_temp(&dir, "bad.txt", "2 0\n");
    let out = relcalc(&["laws", "--law", "converse-gc", "--witness", &wrong_arity]);
    assert_eq!(out.code, EXIT_INPUT);
}
