use edgesquare_core::catalog::{catalog_to_complex, generic_square_complex, polarized_index};
use edgesquare_core::census::connected_graphs;
use edgesquare_core::complex::{maximal_sets, stanley_reisner_complex_with, Face, SimplicialComplex, SrEngine};
use edgesquare_core::graph::Graph;
use edgesquare_core::ideal::{edge_ideal, ideal_power, polarize_ideal};

/// Supports of the polarized generators of `I(G)^2`, built from the edges
/// directly: `a²b² → a1a2b1b2`, `a²bc → a1a2b1c1`, `abcd → a1b1c1d1`.
fn polarized_supports(g: &Graph) -> Vec<Face> {
    let edges = g.edges();
    let mut out = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i..] {
            let mut exps = std::collections::BTreeMap::new();
            for v in [a, b, c, d] {
                *exps.entry(v).or_insert(0u32) += 1;
            }
            let support: Face =
                exps.iter().flat_map(|(&v, &e)| (1..=e).map(move |c| polarized_index(v, c))).collect();
            out.push(support);
        }
    }
    out
}

/// Facets of `Γ²_G` by scanning every subset of the `2n` polarized vertices.
fn brute_force_square(g: &Graph) -> SimplicialComplex {
    let n = g.capacity();
    let supports = polarized_supports(g);
    let faces: Vec<Face> = (0u128..1 << (2 * n))
        .map(Face)
        .filter(|f| supports.iter().all(|s| !s.is_subset(*f)))
        .collect();
    SimplicialComplex::from_facets(maximal_sets(faces))
}

fn small_graphs_without_isolated_vertices(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            Graph::unnamed(n, &edges).unwrap()
        })
        .filter(|g| g.isolated_vertices().is_empty())
        .collect()
}

#[test]
fn catalog_matches_brute_force_on_all_small_labeled_graphs() {
    // includes disconnected graphs
    for n in 2..=5 {
        for g in small_graphs_without_isolated_vertices(n) {
            let oracle = brute_force_square(&g);
            assert_eq!(catalog_to_complex(&g).unwrap(), oracle, "{:?}", g.edges());
            assert_eq!(generic_square_complex(&g).unwrap(), oracle, "{:?}", g.edges());
        }
    }
}

#[test]
fn routes_agree_on_connected_graphs_up_to_six_vertices() {
    let graphs: Vec<Graph> = connected_graphs(6).unwrap().into_iter().filter(|g| g.order() >= 2).collect();
    assert_eq!(graphs.len(), 1 + 2 + 6 + 21 + 112);
    for g in &graphs {
        let oracle = brute_force_square(g);
        assert_eq!(catalog_to_complex(g).unwrap(), oracle, "{:?}", g.edges());
        assert_eq!(generic_square_complex(g).unwrap(), oracle, "{:?}", g.edges());
    }
}

#[test]
fn p3_face_scan() {
    let g = Graph::labeled_p3();
    let c = catalog_to_complex(&g).unwrap();
    let supports = polarized_supports(&g);
    for mask in 0u128..1 << 8 {
        let f = Face(mask);
        assert_eq!(c.is_face(f), supports.iter().all(|s| !s.is_subset(f)), "{mask:08b}");
    }
    assert_eq!(c.facets().len(), 9);
}

#[test]
fn sr_engines_agree_on_polarized_squares() {
    for g in connected_graphs(5).unwrap().into_iter().filter(|g| g.order() >= 2) {
        let pol = polarize_ideal(&ideal_power(&edge_ideal(&g), 2).unwrap());
        let a = stanley_reisner_complex_with(pol.ideal(), SrEngine::BruteForce).unwrap();
        let b = stanley_reisner_complex_with(pol.ideal(), SrEngine::Dualization).unwrap();
        assert_eq!(a, b, "{:?}", g.edges());
    }
}

#[test]
fn dualization_handles_seven_vertex_graphs() {
    // 14 polarized variables: both engines apply
    for g in [Graph::cycle(7).unwrap(), Graph::path_graph(6).unwrap(), Graph::complete_bipartite(3, 4).unwrap()] {
        let pol = polarize_ideal(&ideal_power(&edge_ideal(&g), 2).unwrap());
        let a = stanley_reisner_complex_with(pol.ideal(), SrEngine::BruteForce).unwrap();
        let b = stanley_reisner_complex_with(pol.ideal(), SrEngine::Dualization).unwrap();
        assert_eq!(a, b);
        assert_eq!(catalog_to_complex(&g).unwrap(), generic_square_complex(&g).unwrap());
    }
}

#[test]
fn graph_edges_survive_in_the_first_copy() {
    for g in connected_graphs(6).unwrap().into_iter().filter(|g| g.order() >= 2) {
        let c = catalog_to_complex(&g).unwrap();
        for (a, b) in g.edges() {
            assert!(c.is_face(Face::from_ids([polarized_index(a, 1), polarized_index(b, 1)])));
        }
    }
}
