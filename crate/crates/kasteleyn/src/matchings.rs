use crate::{kasteleyn_matrix, kasteleyn_orientation, spectral_polynomial, KasteleynError};
use exactalg::{fmt_rat, int, Coeff, Rat};
use std::collections::{BTreeMap, BTreeSet};
use torusgraph::{TorusGraph, Vec2};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub edges: BTreeSet<usize>,
    /// Sum of the offsets of the matched edges.
    pub class: Vec2,
    pub weight: Rat,
}

/// Every perfect matching, by backtracking over black vertices in index
/// order and their edges in id order.
pub fn enumerate_matchings(g: &TorusGraph, weights: &[Rat]) -> Vec<Matching> {
    if g.black_count() != g.white_count() {
        return Vec::new();
    }
    let mut incident = vec![Vec::new(); g.black_count()];
    for (k, e) in g.edges().iter().enumerate() {
        incident[e.black].push(k);
    }
    let mut out = Vec::new();
    let mut used = vec![false; g.white_count()];
    let mut chosen = Vec::new();
    extend(g, weights, &incident, 0, &mut used, &mut chosen, &mut out);
    out
}

fn extend(
    g: &TorusGraph,
    weights: &[Rat],
    incident: &[Vec<usize>],
    b: usize,
    used: &mut [bool],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Matching>,
) {
    if b == incident.len() {
        let class = chosen.iter().fold((0, 0), |s, &k| {
            let o = g.edge(k).offset;
            (s.0 + o.0, s.1 + o.1)
        });
        let weight = chosen.iter().fold(int(1), |p, &k| p * &weights[k]);
        out.push(Matching { edges: chosen.iter().copied().collect(), class, weight });
        return;
    }
    for &k in &incident[b] {
        let w = g.edge(k).white;
        if used[w] {
            continue;
        }
        used[w] = true;
        chosen.push(k);
        extend(g, weights, incident, b + 1, used, chosen, out);
        chosen.pop();
        used[w] = false;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRow {
    pub class: Vec2,
    pub coefficient: Rat,
    pub count: usize,
    pub weight_sum: Rat,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignReport {
    pub rows: Vec<ClassRow>,
    /// Sign for each parity class (i mod 2, j mod 2); `None` if no matching
    /// has that parity.
    pub parity_signs: [[Option<i8>; 2]; 2],
}

/// Compares every coefficient of det K with the signed weight sum of the
/// matchings of that class, and checks that the sign depends only on the
/// class mod 2.
pub fn sign_theorem_check(g: &TorusGraph, weights: &[Rat]) -> Result<SignReport, KasteleynError> {
    let kappa = kasteleyn_orientation(g)?;
    let det = spectral_polynomial(&kasteleyn_matrix(g, weights, &kappa)?)?;
    let mut by_class: BTreeMap<Vec2, (usize, Rat)> = BTreeMap::new();
    for m in enumerate_matchings(g, weights) {
        let slot = by_class.entry(m.class).or_insert((0, int(0)));
        slot.0 += 1;
        slot.1 += &m.weight;
    }
    let classes: BTreeSet<Vec2> = by_class.keys().copied().chain(det.support()).collect();
    let mut parity_signs = [[None; 2]; 2];
    let mut rows = Vec::new();
    for class in classes {
        let coefficient = det.coeff(class).cloned().unwrap_or_else(|| int(0));
        let (count, weight_sum) = by_class.get(&class).cloned().unwrap_or((0, int(0)));
        let fail = || KasteleynError::CheckFailed { class, coefficient: fmt_rat(&coefficient), matchings: fmt_rat(&weight_sum) };
        let sign = if weight_sum.is_zero_coeff() && coefficient.is_zero_coeff() {
            // a cancelled class carries no sign information
            rows.push(ClassRow { class, coefficient, count, weight_sum, sign: 0 });
            continue;
        } else if coefficient == weight_sum {
            1
        } else if coefficient == weight_sum.negated() {
            -1
        } else {
            return Err(fail());
        };
        let slot = &mut parity_signs[class.0.rem_euclid(2) as usize][class.1.rem_euclid(2) as usize];
        match slot {
            Some(s) if *s != sign => return Err(fail()),
            _ => *slot = Some(sign),
        }
        rows.push(ClassRow { class, coefficient, count, weight_sum, sign });
    }
    Ok(SignReport { rows, parity_signs })
}
