mod common;

use common::{brute_force_contract, seifert_strategy};
use finik::algebra::rat;
use finik::contraction::{
    contract_with, i_sigma, seifert_linking_table, surface_curve, tripods, CurveId, DecoratedGraph, Execution,
    GraphCombination, LinkingTable, Trilinear,
};
use finik::Error;
use proptest::prelude::*;

fn random_table(names: &[&str], values: &[i64]) -> LinkingTable {
    let mut t = LinkingTable::new();
    let mut it = values.iter().cycle();
    for (i, a) in names.iter().enumerate() {
        for b in &names[i..] {
            t.insert(*a, *b, rat(*it.next().unwrap())).unwrap();
        }
    }
    t
}

fn both_routes(g: &GraphCombination, lk: &LinkingTable, n: usize) {
    let seq = contract_with(g, lk, n, Execution::Sequential).unwrap().reduce().unwrap();
    let par = contract_with(g, lk, n, Execution::Parallel).unwrap().reduce().unwrap();
    assert_eq!(seq, par);
    assert_eq!(seq, brute_force_contract(g, lk, n));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn single_surface_matches_oracle(v in seifert_strategy()) {
        let g = i_sigma(v.rows() / 2, |c| surface_curve(1, c));
        both_routes(&g, &seifert_linking_table(&v, 1), 1);
    }

    #[test]
    fn stacked_surfaces_match_oracle(v in seifert_strategy()) {
        let genus = v.rows() / 2;
        let parts: Vec<_> = (1..=2).map(|c| i_sigma(genus, |x| surface_curve(c, x))).collect();
        both_routes(&GraphCombination::union_all(parts.iter()), &seifert_linking_table(&v, 2), 2);
    }

    #[test]
    fn tripods_and_surface_match_oracle(values in prop::collection::vec(-3i64..=3, 30), coeff in -3i64..=3) {
        let names = ["a", "b", "c", "d", "e", "f", "x1@1", "y1@1", "x1@1+", "y1@1+"];
        let lk = random_table(&names, &values);
        let form = Trilinear::new(3, [((1, 2, 3), rat(coeff))]).unwrap();
        let t1 = tripods(&form, &["a".into(), "b".into(), "c".into()]).unwrap();
        let t2 = tripods(&form, &["d".into(), "e".into(), "f".into()]).unwrap();
        both_routes(&t1.disjoint_union(&t2), &lk, 1);
        let g = GraphCombination::union_all([&t1, &t2, &i_sigma(1, |c| surface_curve(1, c))]);
        both_routes(&g, &lk, 2);
    }
}

#[test]
fn missing_entry_names_the_pair() {
    let g = GraphCombination::single(DecoratedGraph::tripod("a", "b", "c"))
        .disjoint_union(&GraphCombination::single(DecoratedGraph::tripod("a", "b", "z")));
    let lk = random_table(&["a", "b", "c"], &[1]);
    match contract_with(&g, &lk, 1, Execution::Sequential) {
        Err(Error::MissingLinking(x, y)) => assert!(x == CurveId::new("z").to_string() || y == CurveId::new("z").to_string()),
        other => panic!("expected a missing linking number, got {other:?}"),
    }
}
