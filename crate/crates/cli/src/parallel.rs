//! Rayon-backed face sweep and census.

use rayon::prelude::*;

use edgesquare_core::census::{census_graphs, census_record, CensusOptions, CensusRecord};
use edgesquare_core::cm::{reisner_failure, FaceSweep};
use edgesquare_core::{Face, FieldSpec, SimplicialComplex, Witness};

/// Checks faces on the rayon pool. `find_map_first` keeps the witness at
/// the smallest sweep position, so results match the sequential sweep.
#[derive(Clone, Copy, Debug, Default)]
pub struct RayonSweep;

impl FaceSweep for RayonSweep {
    fn first_failure(&self, complex: &SimplicialComplex, faces: &[Face], field: FieldSpec) -> Option<Witness> {
        faces.par_iter().with_min_len(64).find_map_first(|&f| reisner_failure(complex, f, field))
    }
}

/// The census with one task per graph, records in enumeration order.
pub fn parallel_census(
    n_max: usize,
    fields: &[FieldSpec],
    options: CensusOptions,
) -> edgesquare_core::Result<Vec<CensusRecord>> {
    census_graphs(n_max, options.cap)?
        .par_iter()
        .map(|g| census_record(g, fields, options.verify_screened, &RayonSweep))
        .collect()
}
