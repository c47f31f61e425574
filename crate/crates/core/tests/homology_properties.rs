use edgesquare_core::catalog::catalog_to_complex;
use edgesquare_core::census::connected_graphs;
use edgesquare_core::complex::{Face, SimplicialComplex};
use edgesquare_core::graph::Graph;
use edgesquare_core::homology::{
    boundary_matrix, reduced_betti_numbers, reduced_betti_numbers_with, reduced_euler_characteristic, FieldSpec,
    RankEngine,
};
use proptest::prelude::*;

fn fields() -> [FieldSpec; 3] {
    [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::new(5).unwrap()]
}

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    proptest::collection::vec(1u128..1 << 7, 1..7).prop_map(|sets| SimplicialComplex::from_facets(sets.into_iter().map(Face)))
}

fn matmul(a: &[Vec<u32>], b: &[Vec<u32>], p: u32) -> Vec<Vec<u32>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] as u64 * b[k][j] as u64).sum::<u64>() as u32 % p).collect())
        .collect()
}

fn check_boundary_squares_to_zero(c: &SimplicialComplex, field: FieldSpec) {
    for i in 0..=c.dimension() {
        let d_i = boundary_matrix(c, i, field).unwrap().to_dense();
        let d_im1 = boundary_matrix(c, i - 1, field).unwrap().to_dense();
        if d_i.is_empty() || d_im1.is_empty() {
            continue;
        }
        let prod = matmul(&d_im1, &d_i, field.characteristic());
        assert!(prod.iter().flatten().all(|&x| x == 0), "∂∂ ≠ 0 in degree {i}");
    }
}

fn square_complexes() -> Vec<SimplicialComplex> {
    connected_graphs(5)
        .unwrap()
        .into_iter()
        .filter(|g| g.order() >= 2)
        .map(|g| catalog_to_complex(&g).unwrap())
        .collect()
}

#[test]
fn boundary_of_boundary_vanishes_on_square_complexes() {
    for c in square_complexes().iter().take(12) {
        for f in fields() {
            check_boundary_squares_to_zero(c, f);
        }
    }
}

#[test]
fn euler_characteristic_routes_agree_on_square_complexes() {
    for c in square_complexes() {
        for f in fields() {
            assert_eq!(reduced_betti_numbers(&c, f).euler_characteristic(), reduced_euler_characteristic(&c));
        }
    }
}

#[test]
fn sparse_and_dense_ranks_agree_on_square_complexes() {
    for c in square_complexes() {
        for f in [FieldSpec::GF2, FieldSpec::GF3] {
            assert_eq!(
                reduced_betti_numbers_with(&c, f, RankEngine::Sparse),
                reduced_betti_numbers_with(&c, f, RankEngine::Dense)
            );
        }
    }
}

#[test]
fn k2_square_is_a_two_sphere() {
    let c = catalog_to_complex(&Graph::single_edge()).unwrap();
    assert_eq!(c.facets().len(), 4);
    assert_eq!(reduced_betti_numbers(&c, FieldSpec::GF2).reduced_betti, vec![0, 0, 0, 1]);
}

proptest! {
    #[test]
    fn boundary_of_boundary_vanishes(c in arb_complex()) {
        for f in fields() {
            check_boundary_squares_to_zero(&c, f);
        }
    }

    #[test]
    fn euler_characteristic_routes_agree(c in arb_complex()) {
        for f in fields() {
            prop_assert_eq!(reduced_betti_numbers(&c, f).euler_characteristic(), reduced_euler_characteristic(&c));
        }
    }

    #[test]
    fn cones_are_acyclic(c in arb_complex()) {
        // cone over c with apex 7
        let cone = SimplicialComplex::from_facets(c.facets().iter().map(|f| f.with(7)));
        prop_assert!(cone.is_cone());
        for f in fields() {
            prop_assert!(reduced_betti_numbers(&cone, f).is_acyclic());
        }
    }

    #[test]
    fn reduced_b0_counts_components(c in arb_complex()) {
        prop_assume!(c.dimension() >= 0);
        for f in fields() {
            prop_assert_eq!(reduced_betti_numbers(&c, f).betti(0), c.components().len() - 1);
        }
    }

    #[test]
    fn link_composition(c in arb_complex(), pick in any::<u64>()) {
        // lk_{lk σ}(τ) = lk_Δ(σ ∪ τ) for disjoint faces σ, τ with σ ∪ τ a face
        let faces = c.all_faces();
        let sigma_tau = faces[(pick as usize) % faces.len()];
        for sigma in sigma_tau.subsets() {
            let tau = Face(sigma_tau.0 & !sigma.0);
            let lk = c.link(sigma).unwrap();
            prop_assert_eq!(lk.link(tau).unwrap(), c.link(sigma_tau).unwrap());
        }
    }

    #[test]
    fn sparse_and_dense_ranks_agree(c in arb_complex()) {
        for f in fields() {
            prop_assert_eq!(
                reduced_betti_numbers_with(&c, f, RankEngine::Sparse),
                reduced_betti_numbers_with(&c, f, RankEngine::Dense)
            );
        }
    }
}
