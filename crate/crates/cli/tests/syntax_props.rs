use metalie_cli::{parse_lie, parse_poly, print_canonical, run, EXIT_OK, EXIT_USAGE};
use metalie_core::sampling::{poly, seeded, BracketTree};
use metalie_core::{AlgebraSpec, Element};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn printed_trees_parse_back(seed in any::<u64>(), n in 2usize..=3, degree in 1usize..=5, which in 0usize..3) {
        let spec = [AlgebraSpec::free(n), AlgebraSpec::metabelian(n), AlgebraSpec::nilpotent(n, 4)][which].clone().unwrap();
        let tree = BracketTree::random(&mut seeded(seed), n, degree);
        let e: Element = tree.eval(&spec).unwrap();
        prop_assert_eq!(&parse_lie(&tree.to_string(), &spec).unwrap(), &e);
        let text = print_canonical(&e);
        prop_assert_eq!(parse_lie(&text, &spec).unwrap(), e);
    }

    #[test]
    fn printed_polynomials_parse_back(seed in any::<u64>(), n in 1usize..=3) {
        let p = poly(&mut seeded(seed), n, 3);
        prop_assert_eq!(parse_poly(&p.to_string(), n).unwrap(), p);
    }

    #[test]
    fn garbage_is_a_usage_error(text in "[x0-9\\[\\],+*/^() -]{0,12}") {
        let out = run(["metalie", "normalize", "--", &text]);
        prop_assert!(out.code == EXIT_OK || out.code == EXIT_USAGE, "{:?}", out);
    }
}

#[test]
fn help_exits_cleanly() {
    let out = run(["metalie", "--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("verify"));
}

#[test]
fn json_outputs() {
    let out = run(["metalie", "basis", "--rank", "2", "--degree", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["basis"].as_array().unwrap().len(), 2);
    let out = run(["metalie", "is-symmetric", "x1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["symmetric"], false);
    assert_eq!(v["witness"]["permutation"], "(1 2)");
}

#[test]
fn apply_aut_examples() {
    let out = run(["metalie", "apply-aut", "--class", "4", "--phi", "1", "x1 + x2"]);
    assert_eq!(out.stdout.trim(), "x1 + x2");
    let out = run(["metalie", "apply-aut", "--psi", "[x2,x1]x1 - [x2,x1]x2", "x1 + x2"]);
    assert_eq!(out.code, EXIT_OK);
    let out = run(["metalie", "apply-aut", "--psi", "x1", "x1"]);
    assert_eq!(out.code, EXIT_USAGE);
    let out = run(["metalie", "act", "--perm", "2,3,1", "--rank", "3", "x1"]);
    assert_eq!(out.stdout.trim(), "x2");
    let out = run(["metalie", "symmetrize", "--rank", "3", "x1"]);
    assert_eq!(out.stdout.trim(), "1/3 x1 + 1/3 x2 + 1/3 x3");
}
