mod common;

use liftlab::brauer::ibr;
use liftlab::chartab::character_table;
use liftlab::harness::{corpus_catalog, corpus_entry, golden_check};
use liftlab::permgroup::{order_bound, parse_group_text, set_order_bound, write_group_text};
use liftlab::{Error, Group, Permutation};

use common::checks;

#[test]
fn classes_agree_with_orbit_computation() {
    for e in corpus_catalog() {
        checks::classes_match(&e.group).unwrap_or_else(|m| panic!("{}: {m}", e.name));
    }
}

#[test]
fn lattice_agrees_with_closure_search() {
    for e in corpus_catalog() {
        checks::subgroup_count(&e.group).unwrap_or_else(|m| panic!("{}: {m}", e.name));
    }
}

#[test]
fn gl23_table_matches_reference_construction() {
    let g = corpus_entry("GL23").unwrap().group;
    checks::matches_oracle(&g).unwrap();
}

#[test]
fn golden_values_hold() {
    for e in corpus_catalog() {
        for &p in &e.primes {
            let r = golden_check(&e.group, &e.expected, p).unwrap();
            assert!(
                r.all_passed(),
                "{} p={p}: {:?}",
                e.name,
                r.failures().collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn trivial_group_has_one_of_everything() {
    let g = corpus_entry("C1").unwrap().group;
    assert_eq!(character_table(&g).len(), 1);
    assert_eq!(ibr(&g, 3).unwrap().len(), 1);
    assert_eq!(g.all_subgroups().unwrap().len(), 1);
}

#[test]
fn group_file_round_trip() {
    for e in corpus_catalog() {
        let text = write_group_text(e.name, &e.group);
        let back = parse_group_text(&text).unwrap();
        assert_eq!(back.name, e.name);
        assert!(back.group.same_as(&e.group));
    }
}

#[test]
fn group_file_errors_name_the_line() {
    let err = parse_group_text("name bad\ndegree 3\ngen (1,2,2)\n").unwrap_err();
    assert!(matches!(err, Error::Syntax { line: 3, .. }), "{err:?}");
    let err = parse_group_text("name bad\ndegree 3\ngen (1,4)\n").unwrap_err();
    assert!(matches!(err, Error::Syntax { line: 3, .. }), "{err:?}");
    let g = parse_group_text("name empty\ndegree 4\n").unwrap();
    assert_eq!(g.group.order(), 1);
}

#[test]
fn order_bound_is_enforced() {
    let s5 = [
        Permutation::from_cycles(5, &[vec![1, 2]]).unwrap(),
        Permutation::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap(),
    ];
    let err = Group::from_generators_with_bound(5, &s5, 100).unwrap_err();
    assert!(matches!(err, Error::Capacity { bound: 100, .. }), "{err:?}");
    assert_eq!(order_bound(), 512);
    set_order_bound(512);
    assert_eq!(Group::from_generators(5, &s5).unwrap().order(), 120);
}
