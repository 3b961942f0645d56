use modset_cli::{parse_expression, SetExpr};
use proptest::prelude::*;

/// Fully parenthesized rendering, independent of the library printer.
fn full(e: &SetExpr) -> String {
    match e {
        SetExpr::Ident(n) => n.clone(),
        SetExpr::Complement(a) => format!("~{}", full(a)),
        SetExpr::Intersection(a, b) => format!("({} & {})", full(a), full(b)),
        SetExpr::Union(a, b) => format!("({} | {})", full(a), full(b)),
    }
}

const PRECEDENCE: [(&str, &str); 24] = [
    ("A", "A"),
    ("~A", "~A"),
    ("~~A", "~~A"),
    ("A \\/ B", "(A | B)"),
    ("A /\\ B", "(A & B)"),
    ("A \\/ B /\\ C", "(A | (B & C))"),
    ("A /\\ B \\/ C", "((A & B) | C)"),
    ("A \\/ B \\/ C", "((A | B) | C)"),
    ("A /\\ B /\\ C", "((A & B) & C)"),
    ("A \\/ (B \\/ C)", "(A | (B | C))"),
    ("A /\\ (B /\\ C)", "(A & (B & C))"),
    ("(A \\/ B) /\\ C", "((A | B) & C)"),
    ("~A /\\ B", "(~A & B)"),
    ("~(A /\\ B)", "~(A & B)"),
    ("~A \\/ ~B", "(~A | ~B)"),
    ("A /\\ ~B \\/ C", "((A & ~B) | C)"),
    ("A \\/ B /\\ C \\/ D", "((A | (B & C)) | D)"),
    ("A /\\ B \\/ C /\\ D", "((A & B) | (C & D))"),
    ("~A \\/ B /\\ ~C", "(~A | (B & ~C))"),
    ("((A))", "A"),
    ("  A\t/\\B  ", "(A & B)"),
    ("A∧B∨C", "((A & B) | C)"),
    ("¬A ∨ B", "(~A | B)"),
    ("set_1 /\\ X2", "(set_1 & X2)"),
];

#[test]
fn precedence_and_associativity_table() {
    for (src, expected) in PRECEDENCE {
        let e = parse_expression(src).unwrap_or_else(|err| panic!("{src}: {err}"));
        assert_eq!(full(&e), expected, "input {src:?}");
    }
}

#[test]
fn operand_order_is_kept() {
    let ab = parse_expression("A /\\ B").unwrap();
    let ba = parse_expression("B /\\ A").unwrap();
    assert_ne!(ab, ba);
    assert_eq!(
        ab,
        SetExpr::intersection(SetExpr::ident("A"), SetExpr::ident("B"))
    );
}

#[test]
fn syntax_errors_report_columns() {
    for (src, column) in [
        ("~(A \\/ B", 8),
        ("A \\/", 4),
        ("A /\\ /\\ B", 6),
        (")A", 1),
        ("A)", 2),
        ("A + B", 3),
        ("A /", 3),
        ("(", 1),
        ("_A", 1),
        ("A ~ B", 3),
    ] {
        let err = parse_expression(src).unwrap_err();
        assert_eq!(err.column, column, "input {src:?}: {err}");
    }
}

fn tree() -> impl Strategy<Value = SetExpr> {
    let leaf = "[A-Z][a-z0-9_]{0,3}".prop_map(SetExpr::Ident);
    leaf.prop_recursive(6, 48, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(SetExpr::complement),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| SetExpr::intersection(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| SetExpr::union(l, r)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn print_then_parse_is_identity(e in tree()) {
        let printed = e.to_string();
        prop_assert_eq!(parse_expression(&printed).unwrap(), e.clone());
        // The fully parenthesized form reads back to the same tree too.
        let explicit = full(&e).replace('&', "/\\").replace('|', "\\/");
        prop_assert_eq!(parse_expression(&explicit).unwrap(), e);
    }
}
