use crate::KasteleynError;
use exactalg::linalg::rank;
use exactalg::{ff_det, int, pow_rat, Coeff, LaurentPoly2, Rat};
use torusgraph::TorusGraph;

/// Edge weights indexed by edge id.
pub type Weighting = Vec<Rat>;

pub fn unit_weights(g: &TorusGraph) -> Weighting {
    vec![int(1); g.edge_count()]
}

pub fn check_weights(g: &TorusGraph, w: &[Rat]) -> Result<(), KasteleynError> {
    if w.len() != g.edge_count() {
        return Err(KasteleynError::WeightCount { expected: g.edge_count(), got: w.len() });
    }
    match w.iter().position(|x| x.is_zero_coeff()) {
        Some(edge) => Err(KasteleynError::ZeroWeight { edge }),
        None => Ok(()),
    }
}

/// Entry (w, b) is the sum over edges joining b and w of weight·κ·x^dx·y^dy.
/// Generic so that callers can carry derivatives along with the weights.
pub fn operator_entries<C: Coeff>(g: &TorusGraph, weights: &[C], kappa: &[i8]) -> Vec<Vec<LaurentPoly2<C>>> {
    let mut m = vec![vec![LaurentPoly2::zero(); g.black_count()]; g.white_count()];
    for (k, e) in g.edges().iter().enumerate() {
        let c = if kappa[k] < 0 { weights[k].negated() } else { weights[k].clone() };
        m[e.white][e.black].add_term(e.offset, c);
    }
    m
}

#[derive(Debug, Clone, PartialEq)]
pub struct KasteleynData {
    pub kappa: Vec<i8>,
    /// Rows are white vertices, columns black vertices.
    pub matrix: Vec<Vec<LaurentPoly2>>,
    /// Present when the matrix is square.
    pub det: Option<LaurentPoly2>,
}

pub fn kasteleyn_matrix(g: &TorusGraph, weights: &[Rat], kappa: &[i8]) -> Result<KasteleynData, KasteleynError> {
    check_weights(g, weights)?;
    let matrix = operator_entries(g, weights, kappa);
    let det = if g.black_count() == g.white_count() {
        Some(ff_det(&matrix).expect("square nonempty matrix over a field"))
    } else {
        None
    };
    Ok(KasteleynData { kappa: kappa.to_vec(), matrix, det })
}

pub fn spectral_polynomial(kd: &KasteleynData) -> Result<LaurentPoly2, KasteleynError> {
    kd.det.clone().ok_or(KasteleynError::NonSquare { white: kd.matrix.len(), black: kd.matrix.first().map_or(0, Vec::len) })
}

/// Shift to min i = min j = 0, then scale so the lexicographically least
/// coefficient is 1.
pub fn normalize_spectral(f: &LaurentPoly2) -> Result<LaurentPoly2, KasteleynError> {
    f.normalized().ok_or(KasteleynError::ZeroDeterminant)
}

/// w'(E) = g_w(white(E))·w(E)/g_b(black(E)).
pub fn apply_gauge(g: &TorusGraph, weights: &[Rat], gb: &[Rat], gw: &[Rat]) -> Result<Weighting, KasteleynError> {
    check_weights(g, weights)?;
    if gb.iter().chain(gw).any(|x| x.is_zero_coeff()) {
        return Err(KasteleynError::ZeroGauge);
    }
    Ok(g.edges().iter().zip(weights).map(|(e, w)| &gw[e.white] * w / &gb[e.black]).collect())
}

/// white_count − rank of K(x0, y0).
pub fn evaluate_corank(kd: &KasteleynData, x0: &Rat, y0: &Rat) -> Result<usize, KasteleynError> {
    if x0.is_zero_coeff() || y0.is_zero_coeff() {
        return Err(KasteleynError::ZeroCoordinate);
    }
    let m: Vec<Vec<Rat>> = kd
        .matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| {
                    p.terms().iter().fold(int(0), |s, (&(i, j), c)| {
                        s + c * pow_rat(x0, i).unwrap() * pow_rat(y0, j).unwrap()
                    })
                })
                .collect()
        })
        .collect();
    Ok(kd.matrix.len() - rank(&m))
}
