//! Twin structure of the three network families and the forcing shortcut in
//! the solver.

use std::collections::BTreeSet;

use resolvnet_core::generators::{benes, butterfly, silicate, SilicateKind};
use resolvnet_core::theorems::{certify_all, ComparisonOutcome, SourceBound};
use resolvnet_core::{
    all_pairs_distances, all_vertices_twins, solve_k_metric_dimension, twin_partition,
    twin_vertices, DistinguisherTable, TwinKind,
};

#[test]
fn butterfly_twin_classes_are_exactly_the_two_families() {
    for r in 3..=6u32 {
        let bf = butterfly(r).unwrap();
        let p = twin_partition(&bf.graph).unwrap();
        let found: BTreeSet<(u32, u32, u32)> = p
            .non_singleton()
            .map(|c| {
                assert_eq!(c.members.len(), 2);
                assert_eq!(c.kind, TwinKind::False);
                let (a, b) = (bf.labels[c.members[0]], bf.labels[c.members[1]]);
                assert_eq!(a.level, b.level);
                (a.level, a.row.min(b.row), a.row.max(b.row))
            })
            .collect();
        let top = 1 << (r - 1);
        let mut expected = BTreeSet::new();
        for i in 0..top {
            // [i, 0] with [i + 2^{r-1}, 0]; [2i, r] with [2i + 1, r]
            expected.insert((0, i, i + top));
            expected.insert((r, 2 * i, 2 * i + 1));
        }
        assert_eq!(found, expected, "BF({r})");
        assert!(!all_vertices_twins(&bf.graph).unwrap());
    }
}

#[test]
fn benes_twins_are_first_middle_and_last_levels() {
    for r in 3..=5u32 {
        let b = benes(r).unwrap();
        let tv = twin_vertices(&b.graph).unwrap();
        assert_eq!(tv.len(), 3 << r);
        let levels: BTreeSet<u32> = tv.iter().map(|v| b.labels[v].level).collect();
        assert_eq!(levels, BTreeSet::from([0, r, 2 * r]));
        assert_eq!(tv.to_vec(), b.vertices_at_levels(&[0, r, 2 * r]));
    }
}

#[test]
fn silicate_twin_pairs_join_a_corner_with_its_apex() {
    for n in 2..=4u32 {
        let sl = silicate(n).unwrap();
        let p = twin_partition(&sl.graph).unwrap();
        let classes: Vec<_> = p.non_singleton().collect();
        assert_eq!(classes.len(), 6 * n as usize);
        for c in classes {
            assert_eq!(c.kind, TwinKind::True);
            let kinds: BTreeSet<_> = c.members.iter().map(|&v| sl.roles[v].kind).collect();
            assert_eq!(kinds, BTreeSet::from([SilicateKind::Hexagon, SilicateKind::Apex]));
            assert_eq!(sl.roles[c.members[0]].position, sl.roles[c.members[1]].position);
        }
    }
}

#[test]
fn forcing_closes_every_network_instance() {
    let cases = [
        ("BF(4)", butterfly(4).unwrap().graph, butterfly(4).unwrap().vertices_at_levels(&[0, 4])),
        ("B(3)", benes(3).unwrap().graph, benes(3).unwrap().vertices_at_levels(&[0, 3, 6])),
    ];
    for (name, g, candidate) in cases {
        let dm = all_pairs_distances(&g).unwrap();
        let t = DistinguisherTable::new(&dm);
        let r = solve_k_metric_dimension(&t, 2, Some(1)).unwrap();
        assert!(r.complete, "{name}");
        assert_eq!(r.nodes_explored, 1);
        assert_eq!(r.forced, candidate, "{name}");
        assert_eq!(r.witness, candidate);
    }
    let sl = silicate(2).unwrap();
    let dm = all_pairs_distances(&sl.graph).unwrap();
    let t = DistinguisherTable::new(&dm);
    let r = solve_k_metric_dimension(&t, 2, Some(1)).unwrap();
    assert_eq!((r.value, r.nodes_explored), (24, 1));
    assert_eq!(r.forced, twin_vertices(&sl.graph).unwrap().to_vec());
}

#[test]
fn report_for_small_parameters() {
    let report = certify_all(5, 3).unwrap();
    assert_eq!(report.certificates.len(), 8);
    assert_eq!((report.proven, report.failed), (8, 0));
    for c in &report.certificates {
        assert_eq!(c.twin_lower_bound, c.candidate_size);
    }
    for line in &report.comparisons {
        match line.source_bound {
            SourceBound::ConjecturedExact(v) => {
                assert!(line.computed < v);
                assert_eq!(line.outcome, ComparisonOutcome::Refuted);
            }
            SourceBound::Interval { .. } => assert_eq!(line.outcome, ComparisonOutcome::WithinBounds),
        }
    }
}

#[test]
fn certificate_json_shape() {
    let c = resolvnet_core::certify_silicate(2).unwrap();
    let v = serde_json::to_value(&c).unwrap();
    for key in [
        "schema",
        "family",
        "param",
        "claimed",
        "twin_lower_bound",
        "candidate_size",
        "candidate_labels",
        "resolving_check",
        "conjecture_comparison",
        "verdict",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["schema"], "1");
    assert_eq!(v["family"], "sl");
    assert_eq!(v["verdict"], "proven-at-this-parameter");
    assert_eq!(v["resolving_check"]["k"], 2);
    assert_eq!(v["conjecture_comparison"]["source_bound"]["interval"]["lower"], 13);
}
