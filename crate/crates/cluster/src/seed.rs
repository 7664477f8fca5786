use crate::ClusterError;
use exactalg::linalg::inverse;
use exactalg::{fmt_rat, int, pow_rat, Field, Rat};
use kasteleyn::check_weights;
use torusgraph::{CycleVec, TorusGraph};

/// Face coordinates (in the graph's face order), the dual quiver and the
/// holonomies along the graph's two basis cycles.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterSeed {
    pub graph: TorusGraph,
    pub x: Vec<Rat>,
    pub eps: Vec<Vec<i64>>,
    pub q: [Rat; 2],
}

/// Product of w_e^{c_e}.
pub fn holonomy(w: &[Rat], c: &[i64]) -> Rat {
    c.iter().zip(w).filter(|(k, _)| **k != 0).fold(int(1), |p, (&k, v)| p * pow_rat(v, k).expect("nonzero weight"))
}

/// eps[F][G]: one arrow per edge, from the face that sees the edge
/// white→black to the face that sees it black→white.
pub fn quiver(g: &TorusGraph) -> Vec<Vec<i64>> {
    let n = g.faces().len();
    let mut eps = vec![vec![0; n]; n];
    for [fb, fw] in g.face_of_darts() {
        eps[fw][fb] += 1;
        eps[fb][fw] -= 1;
    }
    eps
}

pub fn mutate_quiver(eps: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let n = eps.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = if i == k || j == k {
                -eps[i][j]
            } else {
                let (a, b) = (eps[i][k], eps[k][j]);
                eps[i][j] + a.max(0) * b.max(0) - a.min(0) * b.min(0)
            };
        }
    }
    out
}

/// Coordinate mutation read off the quiver: X_k ↦ X_k⁻¹, and a neighbour F
/// with eps[k][F] = a picks up (1 + X_k)^a if a > 0 and (1 + X_k⁻¹)^a if a < 0.
pub fn mutate_coordinates(x: &[Rat], eps: &[Vec<i64>], k: usize) -> Option<Vec<Rat>> {
    let xk = &x[k];
    let plus = xk + int(1);
    let minus = xk.recip() + int(1);
    x.iter()
        .enumerate()
        .map(|(j, xj)| {
            if j == k {
                return Some(xk.recip());
            }
            let a = eps[k][j];
            Some(match a.signum() {
                1 => xj * pow_rat(&plus, a)?,
                -1 => xj * pow_rat(&minus, a)?,
                _ => xj.clone(),
            })
        })
        .collect()
}

pub fn face_coordinates(g: &TorusGraph, w: &[Rat]) -> Result<ClusterSeed, ClusterError> {
    check_weights(g, w)?;
    let x: Vec<Rat> = g.faces().iter().map(|f| holonomy(w, &g.edge_vector(&f.boundary))).collect();
    assert!(x.iter().fold(int(1), |p, v| p * v) == int(1), "face coordinates multiply to 1");
    let [cx, cy] = g.basis_cycles();
    Ok(ClusterSeed { graph: g.clone(), x, eps: quiver(g), q: [holonomy(w, &cx), holonomy(w, &cy)] })
}

/// Non-tree edges and the integer matrix expressing their weights (in the
/// tree gauge) as monomials in the first F−1 face coordinates and the two
/// quasimomenta.
pub(crate) fn reconstruction_matrix(g: &TorusGraph) -> (Vec<usize>, Vec<Vec<i64>>) {
    let tree = g.spanning_tree();
    let free: Vec<usize> = (0..g.edge_count()).filter(|e| !tree.contains(e)).collect();
    let faces = g.faces();
    let mut rows: Vec<CycleVec> = faces[..faces.len() - 1].iter().map(|f| g.edge_vector(&f.boundary)).collect();
    rows.extend(g.basis_cycles());
    let a: Vec<Vec<Rat>> = rows.iter().map(|r| free.iter().map(|&e| int(r[e])).collect()).collect();
    let inv = inverse(&a).expect("face and basis cycles span the cycle space");
    let inv = inv
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| {
                    assert!(v.is_integer(), "cycle basis is unimodular");
                    i64::try_from(v.to_integer()).unwrap()
                })
                .collect()
        })
        .collect();
    (free, inv)
}

pub(crate) fn powi<C: Field>(c: &C, k: i64) -> Option<C> {
    let base = if k < 0 { c.inverse()? } else { c.clone() };
    Some((0..k.unsigned_abs()).fold(c.one_like(), |p, _| p.times(&base)))
}

/// Weights in the tree gauge with the given face coordinates (all but the
/// last face) and quasimomenta.
pub(crate) fn weights_from<C: Field>(g: &TorusGraph, faces: &[C], q: &[C; 2]) -> Option<Vec<C>> {
    let (free, inv) = reconstruction_matrix(g);
    let targets: Vec<&C> = faces.iter().chain(q.iter()).collect();
    let one = q[0].one_like();
    let mut w = vec![one.clone(); g.edge_count()];
    for (row, &e) in inv.iter().zip(&free) {
        let mut v = one.clone();
        for (&k, t) in row.iter().zip(&targets) {
            if k != 0 {
                v = v.times(&powi(*t, k)?);
            }
        }
        w[e] = v;
    }
    Some(w)
}

/// A weighting in the spanning-tree gauge that reproduces the seed.
pub fn reconstruct_weights(seed: &ClusterSeed) -> Result<Vec<Rat>, ClusterError> {
    let product = seed.x.iter().fold(int(1), |p, v| p * v);
    if product != int(1) {
        return Err(ClusterError::InconsistentSeed { product: fmt_rat(&product) });
    }
    let n = seed.x.len();
    Ok(weights_from(&seed.graph, &seed.x[..n - 1], &seed.q).expect("nonzero coordinates"))
}
