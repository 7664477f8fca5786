use crate::seed::weights_from;
use crate::{ClusterError, ClusterSeed};
use exactalg::{expansion_det, int, Jet, Pt, Rat};
use kasteleyn::{kasteleyn_orientation, operator_entries, KasteleynError};
use std::collections::BTreeMap;
use torusgraph::{CycleVec, TorusGraph, Vertex};

/// Intersection pairing of two cycles on the surface obtained by reversing
/// the rotation at white vertices, computed vertex by vertex: every pair of
/// distinct edges carrying flow through a vertex contributes by their order
/// in the rotation.
pub fn intersection(g: &TorusGraph, a: &[i64], b: &[i64]) -> Rat {
    let mut twice = 0i64;
    let vertices = (0..g.black_count()).map(Vertex::Black).chain((0..g.white_count()).map(Vertex::White));
    for v in vertices {
        let mut rot = g.rotation(v).to_vec();
        let sign = match v {
            Vertex::Black(_) => 1,
            Vertex::White(_) => {
                rot.reverse();
                -1
            }
        };
        // outgoing flow: +c at the black end, -c at the white end
        for (i, &e) in rot.iter().enumerate() {
            for (j, &f) in rot.iter().enumerate() {
                if e == f {
                    continue;
                }
                let s = if i < j { 1 } else { -1 };
                twice += sign * a[e] * sign * b[f] * s;
            }
        }
    }
    Rat::new(twice.into(), 2.into())
}

/// {X_F, X_G} = eps[F][G]·X_F·X_G.
pub fn poisson_bracket(seed: &ClusterSeed, f: usize, g: usize) -> Rat {
    int(seed.eps[f][g]) * &seed.x[f] * &seed.x[g]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutativityReport {
    /// {H_p, H_r} for interior points p < r.
    pub pairs: Vec<(Pt, Pt, Rat)>,
    /// {H_p, c_b} for interior p and boundary b.
    pub casimirs: Vec<(Pt, Pt, Rat)>,
    /// {H_p, X_F} for interior p and every face but the last; these need
    /// not vanish and show the Hamiltonians are not constant.
    pub faces: Vec<(Pt, usize, Rat)>,
}

impl CommutativityReport {
    pub fn all_vanish(&self) -> bool {
        self.pairs.iter().chain(&self.casimirs).all(|t| t.2 == int(0))
    }
}

/// Differentiates the normalized spectral coefficients in the face
/// coordinates (all but the last) and the two quasimomenta at the seed point,
/// and pairs the gradients with the intersection form on those cycles.
pub fn commutativity_check(seed: &ClusterSeed) -> Result<CommutativityReport, ClusterError> {
    let g = &seed.graph;
    let nf = seed.x.len();
    let n = nf + 1;
    let faces: Vec<Jet> = (0..nf - 1).map(|i| Jet::variable(seed.x[i].clone(), i, n)).collect();
    let q = [Jet::variable(seed.q[0].clone(), nf - 1, n), Jet::variable(seed.q[1].clone(), nf, n)];
    let w = weights_from(g, &faces, &q).expect("seed coordinates are nonzero");
    let kappa = kasteleyn_orientation(g)?;
    if g.black_count() != g.white_count() {
        return Err(KasteleynError::NonSquare { white: g.white_count(), black: g.black_count() }.into());
    }
    if g.black_count() > 24 {
        return Err(ClusterError::TooLarge { vertices: g.black_count() });
    }
    let det = expansion_det(&operator_entries(g, &w, &kappa), &Jet::constant(int(1))).expect("square");
    let poly = det.normalized().ok_or(KasteleynError::ZeroDeterminant)?;
    let values = poly.map_coeffs(|j| j.value.clone());
    let polygon = values.newton().map_err(|_| KasteleynError::ZeroDeterminant)?;

    let mut cycles: Vec<CycleVec> = g.faces()[..nf - 1].iter().map(|f| g.edge_vector(&f.boundary)).collect();
    cycles.extend(g.basis_cycles());
    let form: Vec<Vec<Rat>> = cycles.iter().map(|a| cycles.iter().map(|b| intersection(g, a, b)).collect()).collect();
    let point: Vec<Rat> = seed.x[..nf - 1].iter().chain(&seed.q).cloned().collect();
    let zero = Jet::constant(int(0));
    let coeff = |p: Pt| poly.coeff(p).unwrap_or(&zero).clone();
    let bracket = |a: &Jet, b: &Jet| {
        let mut s = int(0);
        for i in 0..n {
            for j in 0..n {
                if form[i][j] != int(0) {
                    s += &form[i][j] * &point[i] * &point[j] * a.d(i) * b.d(j);
                }
            }
        }
        s
    };
    let interior = polygon.interior_points();
    let hs: BTreeMap<Pt, Jet> = interior.iter().map(|&p| (p, coeff(p))).collect();
    let mut pairs = Vec::new();
    for (i, p) in interior.iter().enumerate() {
        for r in &interior[i + 1..] {
            pairs.push((*p, *r, bracket(&hs[p], &hs[r])));
        }
    }
    let mut casimirs = Vec::new();
    for p in &interior {
        for b in polygon.boundary_points() {
            casimirs.push((*p, b, bracket(&hs[p], &coeff(b))));
        }
    }
    let mut face_brackets = Vec::new();
    for p in &interior {
        for (f, x) in faces.iter().enumerate() {
            face_brackets.push((*p, f, bracket(&hs[p], x)));
        }
    }
    Ok(CommutativityReport { pairs, casimirs, faces: face_brackets })
}
