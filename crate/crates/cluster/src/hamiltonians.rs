use crate::{reconstruct_weights, x_transform, ClusterError, ClusterSeed};
use exactalg::{int, LaurentPoly2, Polygon, Pt, Rat};
use kasteleyn::{kasteleyn_matrix, kasteleyn_orientation, normalize_spectral, spectral_polynomial};
use std::collections::BTreeMap;
use torusgraph::TorusGraph;

/// Coefficients of the normalized spectral polynomial, split into interior
/// lattice points of its Newton polygon (Hamiltonians) and boundary points
/// (Casimirs). Absent monomials count as 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hamiltonians {
    pub polygon: Polygon,
    pub interior: BTreeMap<Pt, Rat>,
    pub casimirs: BTreeMap<Pt, Rat>,
}

pub(crate) fn normal_form(g: &TorusGraph, w: &[Rat]) -> Result<LaurentPoly2, ClusterError> {
    let kappa = kasteleyn_orientation(g)?;
    let det = spectral_polynomial(&kasteleyn_matrix(g, w, &kappa)?)?;
    Ok(normalize_spectral(&det)?)
}

pub fn hamiltonians(g: &TorusGraph, w: &[Rat]) -> Result<Hamiltonians, ClusterError> {
    let f = normal_form(g, w)?;
    let polygon = f.newton().expect("normalized polynomial is nonzero");
    let at = |p: &Pt| (*p, f.coeff(*p).cloned().unwrap_or_else(|| int(0)));
    Ok(Hamiltonians {
        interior: polygon.interior_points().iter().map(at).collect(),
        casimirs: polygon.boundary_points().iter().map(at).collect(),
        polygon,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutationReport {
    pub before: String,
    pub after: String,
}

impl MutationReport {
    pub fn holds(&self) -> bool {
        self.before == self.after
    }
}

/// Normalized spectral polynomial of the seed's weighting, and of the moved
/// graph with the transformed seed.
pub fn mutation_invariance_check(seed: &ClusterSeed, face: usize) -> Result<MutationReport, ClusterError> {
    let before = normal_form(&seed.graph, &reconstruct_weights(seed)?)?.to_string();
    let moved = x_transform(seed, face)?;
    let after = normal_form(&moved.graph, &reconstruct_weights(&moved)?)?.to_string();
    Ok(MutationReport { before, after })
}
