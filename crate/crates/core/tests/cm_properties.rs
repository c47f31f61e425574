use edgesquare_core::catalog::{assemble, catalog_to_complex};
use edgesquare_core::census::{census, class_flags, connected_graphs, CensusOptions};
use edgesquare_core::cm::{
    cycle_square_classification, double_star_obstruction_check, is_cohen_macaulay, necessary_condition_screen,
    purity_report, square_is_cm, CycleMode, Rejection, DEFAULT_CYCLE_CAP,
};
use edgesquare_core::complex::{Face, SimplicialComplex};
use edgesquare_core::graph::{Graph, VertexSet};
use edgesquare_core::homology::FieldSpec;
use proptest::prelude::*;

fn census_graphs() -> Vec<Graph> {
    connected_graphs(6).unwrap().into_iter().filter(|g| g.order() >= 2).collect()
}

#[test]
fn purity_theorem_holds_across_the_census() {
    for g in census_graphs() {
        let r = purity_report(&g).unwrap_or_else(|e| panic!("{:?}: {e}", g.edges()));
        assert!(r.dim >= g.order() as isize);
        assert_eq!(r.is_pure, g.is_unmixed() && !g.has_triangle());
        if r.is_pure {
            assert_eq!(r.dim, r.formula_dim);
        }
    }
}

#[test]
fn screen_is_sound_and_fast_fail_is_consistent() {
    let fields = [FieldSpec::GF2, FieldSpec::GF3];
    let records = census(6, &fields, CensusOptions { cap: 6, verify_screened: true }).unwrap();
    assert_eq!(records.len(), 142);
    for r in &records {
        if r.screen.is_some() {
            assert!(r.verdicts.iter().all(|v| !v.is_cm), "{:?}", r.graph.edges());
        }
        assert!(!r.field_disagreement(), "{:?}", r.graph.edges());
        // the full sweep without fast-fail reaches the same verdict
        let c = catalog_to_complex(&r.graph).unwrap();
        for (v, &f) in r.verdicts.iter().zip(&fields) {
            assert_eq!(is_cohen_macaulay(&c, f, false).is_cm, v.is_cm);
        }
    }
    let winners: Vec<Vec<(usize, usize)>> = records.iter().filter(|r| r.is_cm()).map(|r| r.graph.edges()).collect();
    assert_eq!(winners.len(), 2, "{winners:?}");
    assert!(records.iter().filter(|r| r.is_cm()).all(|r| r.graph.edge_count() == 1 || r.graph.is_cycle()));
}

/// `σ = A_(1) ∪ (V \ U_A)_(2)` for every `A ∈ 𝒜(G \ U)`, with `U = N[x] ∪ N[y]`,
/// paired with the vertex set `U_A`.
fn claim_two_faces(g: &Graph, [_, x, y, _]: [usize; 4]) -> Vec<(Face, VertexSet)> {
    let u = g.closed_neighborhood(VertexSet::from_ids([x, y])).unwrap();
    let rest = g.deletion(u).unwrap();
    let choices = if rest.order() == 0 { vec![VertexSet::EMPTY] } else { rest.maximal_independent_sets() };
    choices
        .into_iter()
        .map(|a| {
            let u_a: VertexSet = u.iter().filter(|&v| !g.neighborhood(v).unwrap().intersects(a)).collect();
            (assemble(a, g.vertices() - u_a), u_a)
        })
        .collect()
}

fn check_claim_two(g: &Graph) -> usize {
    let witness = g.leaf_path3_witness().expect("leaf path");
    let square = catalog_to_complex(g).unwrap();
    let mut checked = 0;
    for (sigma, u_a) in claim_two_faces(g, witness) {
        assert!(witness.iter().all(|&v| u_a.contains(v)));
        let local = catalog_to_complex(&g.induced_subgraph(u_a).unwrap()).unwrap();
        assert_eq!(square.link(sigma).unwrap(), local, "{:?} σ={sigma:?}", g.edges());
        assert!(!is_cohen_macaulay(&local, FieldSpec::GF2, false).is_cm);
        checked += 1;
    }
    checked
}

#[test]
fn claim_two_on_p3_and_a_pendant_tree() {
    let p3 = Graph::labeled_p3();
    let faces = claim_two_faces(&p3, p3.leaf_path3_witness().unwrap());
    assert_eq!(faces, vec![(Face::EMPTY, p3.vertices())]);
    assert_eq!(check_claim_two(&p3), 1);

    let tree = Graph::from_named_edges(
        &["z", "x", "y", "w", "p", "q"],
        &[("z", "x"), ("x", "y"), ("y", "w"), ("x", "p"), ("p", "q")],
    )
    .unwrap();
    assert!(tree.is_tree() && tree.is_unmixed());
    let faces = claim_two_faces(&tree, tree.leaf_path3_witness().unwrap());
    // A = {q}, U_A = {z, x, y, w}, σ = {q1, p2, q2}
    assert_eq!(faces.len(), 1);
    assert_eq!(faces[0].1, VertexSet::from_ids([0, 1, 2, 3]));
    assert_eq!(faces[0].0, Face::from_ids([2 * 5, 2 * 4 + 1, 2 * 5 + 1]));
    assert_eq!(check_claim_two(&tree), 1);
}

#[test]
fn claim_two_on_every_eligible_census_graph() {
    let mut total = 0;
    for g in census_graphs() {
        if g.is_unmixed() && !g.has_triangle() && g.leaf_path3_witness().is_some() {
            total += check_claim_two(&g);
        }
    }
    assert!(total > 0);
}

#[test]
fn cm_complexes_are_connected_pure_with_cm_vertex_links() {
    for g in [Graph::single_edge(), Graph::cycle(5).unwrap()] {
        let c = catalog_to_complex(&g).unwrap();
        assert!(is_cohen_macaulay(&c, FieldSpec::GF2, false).is_cm);
        assert!(c.is_pure() && c.is_connected());
        for v in c.vertices().iter() {
            let lk = c.link(Face::singleton(v)).unwrap();
            assert!(is_cohen_macaulay(&lk, FieldSpec::GF2, false).is_cm);
        }
    }
}

#[test]
fn complete_bipartite_squares() {
    let expected = [(1, true), (2, false), (3, false)];
    for (n, cm) in expected {
        let g = Graph::complete_bipartite(n, n).unwrap();
        for f in [FieldSpec::GF2, FieldSpec::GF3] {
            assert_eq!(square_is_cm(&g, f).unwrap().is_cm, cm, "K{n},{n}");
        }
    }
    // unbalanced ones are not even unmixed
    assert_eq!(necessary_condition_screen(&Graph::complete_bipartite(1, 2).unwrap()).unwrap(), Some(Rejection::NotPure));
}

#[test]
fn classwise_non_cm_at_desk_scale() {
    for g in census_graphs() {
        let flags = class_flags(&g, FieldSpec::GF2).unwrap();
        if !flags.in_covered_class() {
            continue;
        }
        let cm = square_is_cm(&g, FieldSpec::GF2).unwrap().is_cm;
        let expected = g.edge_count() == 1 || (flags.cycle && g.order() == 5);
        assert_eq!(cm, expected, "{:?} {flags:?}", g.edges());
    }
}

#[test]
fn whiskered_graphs_up_to_six_vertices() {
    for base in connected_graphs(3).unwrap() {
        let w = Graph::whisker(&base).unwrap();
        assert!(w.is_whiskered());
        assert_eq!(square_is_cm(&w, FieldSpec::GF2).unwrap().is_cm, base.order() == 1);
    }
}

#[test]
fn double_star_obstruction() {
    for s in 1..=3 {
        for t in 1..=3 {
            let r = double_star_obstruction_check(s, t).unwrap();
            assert!(r.holds(), "({s},{t})");
            assert_eq!(r.b0, 1);
        }
    }
}

#[test]
fn cycle_table() {
    for t in 3..=8 {
        for f in [FieldSpec::GF2, FieldSpec::GF3] {
            let c = cycle_square_classification(t, f, CycleMode::Verify, DEFAULT_CYCLE_CAP).unwrap();
            assert!(c.agrees(), "C{t}");
            assert_eq!(c.theorem, t == 5);
        }
    }
    assert!(cycle_square_classification(9, FieldSpec::GF2, CycleMode::Verify, DEFAULT_CYCLE_CAP).is_err());
    assert!(!cycle_square_classification(40, FieldSpec::GF2, CycleMode::Theorem, DEFAULT_CYCLE_CAP).unwrap().theorem);
}

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    proptest::collection::vec(1u128..1 << 7, 1..6).prop_map(|sets| SimplicialComplex::from_facets(sets.into_iter().map(Face)))
}

proptest! {
    #[test]
    fn reisner_corollary(c in arb_complex()) {
        let full = is_cohen_macaulay(&c, FieldSpec::GF2, false);
        prop_assert_eq!(is_cohen_macaulay(&c, FieldSpec::GF2, true).is_cm, full.is_cm);
        prop_assert_eq!(full.is_cm, full.witness.is_none());
        if full.is_cm {
            prop_assert!(c.is_pure());
            prop_assert!(c.dimension() < 1 || c.is_connected());
            for v in c.vertices().iter() {
                let lk = c.link(Face::singleton(v)).unwrap();
                prop_assert!(is_cohen_macaulay(&lk, FieldSpec::GF2, false).is_cm);
            }
        }
    }
}
