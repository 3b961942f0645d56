use modset_cli::{run, Outcome};

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn modset(args: &[&str]) -> Outcome {
    run(std::iter::once("modset").chain(args.iter().copied()))
}

fn with_sets(args: &[&str]) -> Outcome {
    let file = data("sets.modset");
    let mut full = vec!["-f", file.as_str()];
    full.extend_from_slice(args);
    modset(&full)
}

#[test]
fn laws_on_classical_all_hold() {
    let o = modset(&["laws", "classical2"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(o
        .stdout
        .contains("summary: 11 hold, 0 fail, 0 not applicable"));
}

#[test]
fn witness_for_matrix_wedge() {
    let o = modset(&["witness", "mat2", "wedge"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("x = [["), "{}", o.stdout);
    assert!(o.stdout.contains("(seed 0)"));
}

#[test]
fn broken_table_names_the_identity() {
    let o = modset(&["validate", &data("broken.alg")]);
    assert_eq!(o.code, 1, "{}{}", o.stdout, o.stderr);
    assert!(o.stdout.contains("O∗∨I=I"), "{}", o.stdout);
}

#[test]
fn exit_code_zero_category() {
    let o = modset(&["validate", &data("sets.modset")]);
    assert_eq!(o.code, 0, "{}{}", o.stdout, o.stderr);
    assert!(o.stdout.contains("lattice diamond: 5 elements"));

    for args in [
        vec!["laws", "pow2"],
        vec!["classify", "fuzzy^2"],
        vec!["lift", "pow2^2", "distributive"],
        vec!["gfcheck", "pow2^2"],
        vec!["eval", "C", "A \\/ ~A"],
        vec!["witness", "mat3", "wedge"],
        vec!["oracle", "mat2^3"],
        vec!["list"],
        vec!["--help"],
    ] {
        let o = with_sets(&args);
        assert_eq!(o.code, 0, "{args:?}: {}{}", o.stdout, o.stderr);
    }
}

#[test]
fn exit_code_one_category() {
    for args in [
        vec!["laws", "fuzzy", "--samples", "50"],
        vec!["laws", "mat2", "--samples", "50"],
        vec!["lift", "classical2,mat2", "commutative-wedge"],
        vec!["gfcheck", "pow2,m3"],
        vec!["witness", "chain5", "vee"],
        vec!["laws", "chain3"],
    ] {
        let o = with_sets(&args);
        assert_eq!(o.code, 1, "{args:?}: {}{}", o.stdout, o.stderr);
        assert!(o.stderr.is_empty());
    }
}

#[test]
fn exit_code_two_category() {
    for args in [
        vec!["validate", "/nonexistent/file"],
        vec!["validate", "PARTIAL"],
        vec!["laws", "nope"],
        vec!["lift", "fuzzy^2", "not-a-law"],
        vec!["gfcheck", "mat2^2"],
        vec!["gfcheck", "pow1^5"],
        vec!["oracle", "fuzzy^5"],
        vec!["eval", "C", "~(A \\/ B"],
        vec!["eval", "C", "Missing"],
        vec!["eval", "C", "A /\\ Half"],
        vec!["eval", "mat2^1", "~E"],
        vec!["frobnicate"],
        vec!["laws"],
        vec!["laws", "fuzzy", "--seed", "x"],
    ] {
        let partial = data("partial.alg");
        let args: Vec<&str> = args
            .iter()
            .map(|a| if *a == "PARTIAL" { partial.as_str() } else { a })
            .collect();
        let o = with_sets(&args);
        assert_eq!(o.code, 2, "{args:?}: {}{}", o.stdout, o.stderr);
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn syntax_error_reports_column() {
    let o = with_sets(&["eval", "C", "~(A \\/ B"]);
    assert!(o.stderr.contains("column 8"), "{}", o.stderr);
}

#[test]
fn evaluation_examples() {
    let o = with_sets(&["eval", "C", "A \\/ ~A"]);
    assert_eq!(o.stdout, "A \\/ ~A\n  p: I\n  q: I\n");

    let o = with_sets(&["eval", "fuzzy^2", "Half \\/ ~Half"]);
    assert_eq!(o.stdout, "Half \\/ ~Half\n  x1: 1/2\n  x2: 1/2\n");

    let ab = with_sets(&["eval", "mat2^1", "E /\\ N"]);
    let ba = with_sets(&["eval", "mat2^1", "N /\\ E"]);
    assert_eq!(ab.code, 0);
    assert_eq!(ab.stdout.lines().nth(1), Some("  x1: [[0,1],[0,0]]"));
    assert_eq!(ba.stdout.lines().nth(1), Some("  x1: [[0,0],[0,0]]"));

    let o = with_sets(&["eval", "diamond^1", "D /\\ D \\/ D"]);
    assert_eq!(o.stdout.lines().nth(1), Some("  x1: a"));
}

#[test]
fn eval_respects_precedence() {
    let flat = with_sets(&["eval", "fuzzy^2", "Low \\/ Half /\\ Low"]);
    let grouped = with_sets(&["eval", "fuzzy^2", "Low \\/ (Half /\\ Low)"]);
    let other = with_sets(&["eval", "fuzzy^2", "(Low \\/ Half) /\\ Low"]);
    let body = |o: &Outcome| o.stdout.lines().skip(1).collect::<Vec<_>>().join("\n");
    assert_eq!(body(&flat), body(&grouped));
    assert_eq!(flat.code, 0);
    assert_eq!(other.code, 0);
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        vec!["laws", "fuzzy", "--samples", "300", "--seed", "7"],
        vec!["laws", "mat3", "--samples", "100", "--seed", "3"],
        vec!["classify", "classical2,fuzzy,m3,mat2", "--samples", "100"],
        vec!["lift", "fuzzy,mat2", "absorption", "--seed", "11"],
        vec!["gfcheck", "fuzzy^2", "--samples", "100"],
        vec!["witness", "mat3", "vee", "--seed", "5"],
    ] {
        let first = with_sets(&args);
        let second = with_sets(&args);
        assert_eq!(first, second, "{args:?}");
    }
}

#[test]
fn sampled_reports_print_the_seed() {
    let o = modset(&["laws", "fuzzy", "--samples", "20", "--seed", "42"]);
    assert!(o.stdout.contains("seed 42"));
    let o = modset(&[
        "lift",
        "fuzzy^4",
        "commutative-vee",
        "--samples",
        "20",
        "--seed",
        "9",
    ]);
    assert!(o.stdout.contains("seed 9"), "{}", o.stdout);
}
