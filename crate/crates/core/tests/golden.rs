//! The greedy critical sets and family squares against the transcribed
//! reference tables.

mod common;

use common::swapped_l;
use latinset::families::{families, Fixtures, GAMMA, LAMBDA};
use latinset::trades::is_2_critical;
use latinset::two_group::{build_l, build_p};
use latinset::{complete_unique, gcs, PartialLatinSquare, Triple};

fn table(name: &str) -> latinset::format::GridDocument {
    Fixtures::embedded().get(name).unwrap().clone()
}

fn name(k: usize, k2: usize) -> String {
    format!("{k}{k2}")
}

#[test]
fn gcs_of_swapped_l2_matches_tables() {
    for &(k, k2) in &LAMBDA {
        let doc = table(&format!("gcs_a{}_l2", name(k, k2)));
        let l = swapped_l(2, k, k2);
        assert_eq!(gcs(&l).unwrap(), *doc.primary(), "({k},{k2})");
        assert_eq!(doc.square, l, "({k},{k2}) completion");
    }
}

#[test]
fn gcs_of_swapped_l3_matches_tables() {
    for &(k, k2) in LAMBDA.iter().chain(&GAMMA) {
        let doc = table(&format!("gcs_a{}_l3", name(k, k2)));
        let l = swapped_l(3, k, k2);
        assert_eq!(gcs(&l).unwrap(), *doc.primary(), "({k},{k2})");
        assert_eq!(doc.square, l, "({k},{k2}) completion");
    }
}

#[test]
fn gcs_of_swapped_l4_matches_sixteen_grid() {
    let l = swapped_l(4, 12, 14);
    assert_eq!(gcs(&l).unwrap(), *table("gcs_a12_14_l4").primary());
    assert_eq!(families().build_g(12, 14, 4).unwrap(), gcs(&l).unwrap());
}

#[test]
fn u_and_v_match_tables() {
    let f = families();
    for &(k, k2) in &GAMMA {
        // E(4,5) = E(4,6), so one pair of tables serves both.
        let key = if k == 4 { "45".to_string() } else { name(k, k2) };
        for (kind, built) in [("u", f.build_u(k, k2).unwrap()), ("v", f.build_v(k, k2).unwrap())] {
            let doc = table(&format!("{kind}{key}"));
            assert_eq!(built, *doc.primary(), "{kind}({k},{k2})");
            assert_eq!(complete_unique(&built).unwrap(), doc.square, "{kind}({k},{k2}) completion");
        }
    }
}

#[test]
fn l3_table() {
    assert_eq!(table("l3").square, build_l(3).unwrap());
}

#[test]
fn reference_p3_has_one_stray_entry() {
    let reference = table("p3").square;
    let p3 = build_p(3).unwrap();
    assert_eq!(reference.len(), 38);
    assert_eq!(reference.difference(&p3).entries(), [Triple::new(4, 3, 7)]);
    assert!(p3.is_subset_of(&reference));
}

#[test]
fn gcs_of_l_is_p() {
    for (s, size) in [(1, 1), (2, 7), (3, 37), (4, 175)] {
        let l = build_l(s).unwrap();
        let p = build_p(s).unwrap();
        assert_eq!(p.len(), size);
        assert_eq!(gcs(&l).unwrap(), p, "s = {s}");
        assert!(is_2_critical(&p, &l).unwrap(), "s = {s}");
    }
}

#[test]
fn h2_is_gcs_of_first_inner_swap() {
    let h2 = table("h2");
    let l = swapped_l(2, 1, 2);
    assert_eq!(*h2.primary(), latinset::two_group::build_h2());
    assert_eq!(h2.square, latinset::two_group::build_h2_hat());
    assert_eq!(gcs(&l).unwrap(), *h2.primary());
    assert_eq!(h2.primary().len(), 7);
}

#[test]
fn base_quarters() {
    let f = families();
    for &(k, k2) in &GAMMA {
        let g = f.base_gcs_l3(k, k2).unwrap();
        let (quarter, _) = g.rebase(0, 0, 4).unwrap();
        assert_eq!(f.base_e2(k, k2).unwrap(), quarter);
    }
    let expected: PartialLatinSquare = build_l(2).unwrap().without_cell(0, 2);
    assert_eq!(f.base_e2(4, 5).unwrap(), expected);
}
