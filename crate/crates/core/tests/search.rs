mod common;

use std::collections::HashSet;

use ac_core::search::{class_neighbors, classes_within, search};
use ac_core::{
    ak_presentation, presentation_4n1, presentation_4n3, replay, Presentation, SearchConfig,
    Status, Strategy,
};
use common::*;
use proptest::prelude::*;

fn small_cfg() -> SearchConfig {
    SearchConfig {
        max_relator_length: 8,
        max_total_length: 12,
        ..SearchConfig::default()
    }
}

/// Keys reached by expanding every successor, with no deduplication.
fn raw_keys(start: &Presentation, cfg: &SearchConfig, depth: usize) -> HashSet<Vec<u8>> {
    let mut keys = HashSet::from([start.canonical_key()]);
    let mut layer = vec![ac_core::macros::cyclically_reduce_all(start).0];
    for _ in 0..depth {
        let mut next = Vec::new();
        for p in &layer {
            for (_, q) in class_neighbors(p, cfg) {
                keys.insert(q.canonical_key());
                next.push(q);
            }
        }
        layer = next;
    }
    keys
}

#[test]
fn found_for_small_family_members_under_defaults() {
    for p in [presentation_4n1(0), presentation_4n1(1), presentation_4n3(0), presentation_4n3(1), ak_presentation(1)] {
        let out = search(&p, &SearchConfig::default());
        assert_eq!(out.status, Status::Found, "{}", p.to_text());
        let cert = out.certificate.unwrap();
        assert_eq!(cert.initial, p);
        let report = replay(&cert).unwrap();
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn bfs_finds_the_smallest_case() {
    let cfg = SearchConfig { strategy: Strategy::Bfs, ..SearchConfig::default() };
    let out = search(&presentation_4n1(0), &cfg);
    assert_eq!(out.status, Status::Found);
    assert!(replay(&out.certificate.unwrap()).unwrap().passed());
}

#[test]
fn beam_respects_its_width() {
    let cfg = SearchConfig { strategy: Strategy::Beam, beam_width: 50, max_states: 20_000, ..SearchConfig::default() };
    let out = search(&ak_presentation(3), &cfg);
    assert_ne!(out.status, Status::Found);
    assert!(out.stats.frontier_peak <= 50 * 500);
}

#[test]
fn akbulut_kirby_three_is_not_settled_on_a_small_budget() {
    let cfg = SearchConfig { max_states: 50_000, ..SearchConfig::default() };
    let out = search(&ak_presentation(3), &cfg);
    assert!(matches!(out.status, Status::Budget | Status::Exhausted));
    assert!(out.certificate.is_none());
}

#[test]
fn dedup_loses_no_class_at_depth_two() {
    let cfg = small_cfg();
    for rels in [["xyX", "yy"], ["xy", "xY"], ["xxY", "yx"]] {
        let p = Presentation::parse(&XY, &rels).unwrap();
        assert_eq!(classes_within(&p, &cfg, 2), raw_keys(&p, &cfg, 2), "{rels:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn class_sets_do_not_depend_on_the_representative(
        rels in prop::collection::vec(word(2, 5), 2),
        shift in 0usize..5,
        invert: bool,
        swap: bool,
    ) {
        let cfg = small_cfg();
        let p = Presentation::new(XY.to_vec(), rels.clone()).unwrap();
        let mut other = rels;
        let core = other[0].cyclic_reduce().0;
        other[0] = if core.is_empty() { core } else { core.rotate(shift % core.len()) };
        if invert { other[1] = other[1].inverse(); }
        if swap { other.swap(0, 1); }
        let q = Presentation::new(XY.to_vec(), other).unwrap();
        prop_assert_eq!(p.canonical_key(), q.canonical_key());
        prop_assert_eq!(classes_within(&p, &cfg, 1), classes_within(&q, &cfg, 1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn class_steps_expand_to_primitive_moves(rels in prop::collection::vec(word(2, 6), 2)) {
        let p = Presentation::new(XY.to_vec(), rels).unwrap();
        let rep = ac_core::macros::cyclically_reduce_all(&p).0;
        for (step, q) in class_neighbors(&rep, &small_cfg()) {
            let moves = step.expand(&rep);
            prop_assert_eq!(rep.apply_all(&moves).unwrap(), q);
        }
    }
}
