use crate::KasteleynError;
use exactalg::gf2_solve;
use exactalg::Gf2Error;
use torusgraph::TorusGraph;

/// One GF(2) row per face: the edges met an odd number of times, and whether
/// the face needs an odd number of −1 signs (length ≡ 0 mod 4).
fn face_system(g: &TorusGraph) -> (Vec<Vec<usize>>, Vec<bool>) {
    g.faces()
        .iter()
        .map(|f| (f.boundary.iter().map(|d| d.edge).collect(), f.boundary.len() % 4 == 0))
        .unzip()
}

/// Edge signs with product −1 around faces of length 0 mod 4 and +1 around
/// faces of length 2 mod 4. Deterministic: lowest-index pivots, free edges +1.
pub fn kasteleyn_orientation(g: &TorusGraph) -> Result<Vec<i8>, KasteleynError> {
    let (rows, targets) = face_system(g);
    let fail = |certificate| KasteleynError::NoOrientation { black: g.black_count(), white: g.white_count(), certificate };
    let bits = match gf2_solve(&rows, &targets, g.edge_count()) {
        Ok(bits) => bits,
        Err(Gf2Error::Infeasible { certificate }) => return Err(fail(certificate)),
        Err(e) => unreachable!("face system is well formed: {e}"),
    };
    if g.black_count() != g.white_count() {
        return Err(fail(Vec::new()));
    }
    let kappa: Vec<i8> = bits.iter().map(|&b| if b { -1 } else { 1 }).collect();
    debug_assert!(face_sign_rule_holds(g, &kappa));
    Ok(kappa)
}

pub fn face_sign_rule_holds(g: &TorusGraph, kappa: &[i8]) -> bool {
    g.faces().iter().all(|f| {
        let p: i8 = f.boundary.iter().map(|d| kappa[d.edge]).product();
        p == if f.boundary.len() % 4 == 0 { -1 } else { 1 }
    })
}
