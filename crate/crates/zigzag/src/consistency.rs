use crate::strands::{extract_zigzags, ZigZag};
use std::collections::BTreeSet;
use std::fmt;
use torusgraph::{TorusGraph, Vec2};

/// Why a graph fails consistency. Strand indices refer to
/// [`extract_zigzags`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    TrivialClass { strand: usize },
    SelfCrossing { strand: usize, edge: usize },
    /// Two crossings consecutive along both lifts, traversed in the same
    /// direction. `translation` places the second lift relative to the first.
    ParallelBigon { strands: (usize, usize), translation: Vec2, edges: (usize, usize) },
}

impl Witness {
    pub fn clause(&self) -> &'static str {
        match self {
            Witness::TrivialClass { .. } => "TrivialClass",
            Witness::SelfCrossing { .. } => "SelfCrossing",
            Witness::ParallelBigon { .. } => "ParallelBigon",
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::TrivialClass { strand } => write!(f, "TrivialClass zz{strand}"),
            Witness::SelfCrossing { strand, edge } => write!(f, "SelfCrossing zz{strand} e{edge}"),
            Witness::ParallelBigon { edges, .. } => write!(f, "ParallelBigon e{}/e{}", edges.0, edges.1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    Inconsistent(Witness),
}

impl Verdict {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Verdict::Consistent)
    }
}

fn cross(a: Vec2, b: Vec2) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn sub(a: Vec2, b: Vec2) -> Vec2 {
    (a.0 - b.0, a.1 - b.1)
}

/// `Some(k)` with `v = k·c`, for nonzero `c`.
fn multiple_of(v: Vec2, c: Vec2) -> Option<i64> {
    if cross(v, c) != 0 {
        return None;
    }
    let (num, den) = if c.0 != 0 { (v.0, c.0) } else { (v.1, c.1) };
    (num % den == 0).then_some(num / den)
}

/// One crossing of two lifts: pass index along each (unrolled over periods)
/// and the edge crossed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Crossing {
    t1: i64,
    t2: i64,
    edge: usize,
}

/// Coset representatives of Z² modulo the lattice spanned by independent
/// `c1`, `c2`, read off the Hermite basis {(d1, 0), (s, d2)}.
fn coset_reps(c1: Vec2, c2: Vec2) -> Vec<Vec2> {
    let d = cross(c1, c2).abs();
    let d2 = gcd(c1.1, c2.1);
    let d1 = d / d2;
    let mut reps = Vec::with_capacity(d as usize);
    for y in 0..d2 {
        for x in 0..d1 {
            reps.push((x, y));
        }
    }
    reps
}

struct Strand<'a> {
    z: &'a ZigZag,
    base: Vec<Vec2>,
}

fn shared_passes(s1: &Strand, s2: &Strand) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, d) in s1.z.passes.iter().enumerate() {
        for (j, d2) in s2.z.passes.iter().enumerate() {
            if d.edge == d2.edge {
                out.push((i, j));
            }
        }
    }
    out
}

/// For a finite crossing set: the first pair consecutive along both lifts and
/// in the same order.
fn finite_bigon(xs: &mut [Crossing]) -> Option<(usize, usize)> {
    xs.sort();
    let mut by_t2: Vec<i64> = xs.iter().map(|c| c.t2).collect();
    by_t2.sort_unstable();
    let rank = |t: i64| by_t2.binary_search(&t).unwrap();
    xs.windows(2).find_map(|w| {
        let (p, q) = (w[0], w[1]);
        (rank(q.t2) == rank(p.t2) + 1).then_some((p.edge, q.edge))
    })
}

/// For the periodic crossing set `xs + k·(period1, period2)`, `xs` holding one
/// crossing per class with `t1 ∈ [0, period1)`.
fn periodic_bigon(xs: &mut [Crossing], period1: i64, period2: i64) -> Option<(usize, usize)> {
    if xs.is_empty() {
        return None;
    }
    xs.sort();
    let t = period2.abs();
    // any element of the full set with t2 strictly inside (lo, hi)?
    let occupied = |lo: i64, hi: i64| {
        xs.iter().any(|x| {
            let first = lo + 1 + (x.t2 - lo - 1).rem_euclid(t);
            first < hi
        })
    };
    for k in 0..xs.len() {
        let p = xs[k];
        let q = if k + 1 < xs.len() {
            xs[k + 1]
        } else {
            Crossing { t1: xs[0].t1 + period1, t2: xs[0].t2 + period2, edge: xs[0].edge }
        };
        if q.t2 > p.t2 && !occupied(p.t2, q.t2) {
            return Some((p.edge, q.edge));
        }
    }
    None
}

fn independent_pair(s1: &Strand, s2: &Strand, shared: &[(usize, usize)]) -> Option<(Vec2, (usize, usize))> {
    let (c1, c2) = (s1.z.cls, s2.z.cls);
    let (n1, n2) = (s1.z.len() as i64, s2.z.len() as i64);
    // a·c1 − b·c2 = v  ⇔  [c1 | −c2]·(a, b) = v
    let det = -cross(c1, c2);
    for m in coset_reps(c1, c2) {
        let mut xs = Vec::new();
        for &(i, j) in shared {
            let v = sub((s2.base[j].0 + m.0, s2.base[j].1 + m.1), s1.base[i]);
            let an = -v.0 * c2.1 + c2.0 * v.1;
            let bn = c1.0 * v.1 - c1.1 * v.0;
            if an % det == 0 && bn % det == 0 {
                xs.push(Crossing {
                    t1: an / det * n1 + i as i64,
                    t2: bn / det * n2 + j as i64,
                    edge: s1.z.passes[i].edge,
                });
            }
        }
        if let Some(w) = finite_bigon(&mut xs) {
            return Some((m, w));
        }
    }
    None
}

fn dependent_pair(
    s1: &Strand,
    s2: &Strand,
    shared: &[(usize, usize)],
    same: bool,
) -> Option<(Vec2, (usize, usize))> {
    let (c1, c2) = (s1.z.cls, s2.z.cls);
    let (n1, n2) = (s1.z.len() as i64, s2.z.len() as i64);
    let (g1, g2) = (gcd(c1.0, c1.1), gcd(c2.0, c2.1));
    let p = (c1.0 / g1, c1.1 / g1);
    let sigma = if c1.0 * c2.0 + c1.1 * c2.1 > 0 { 1 } else { -1 };
    let l = g1 / gcd(g1, g2) * g2;
    let (l1, l2) = (l / g1, l / g2);
    let gen = (p.0 * gcd(g1, g2), p.1 * gcd(g1, g2));
    let norm = gen.0 * gen.0 + gen.1 * gen.1;
    let reduce = |v: Vec2| {
        let k = (v.0 * gen.0 + v.1 * gen.1).div_euclid(norm);
        (v.0 - k * gen.0, v.1 - k * gen.1)
    };
    let ms: BTreeSet<Vec2> = shared.iter().map(|&(i, j)| reduce(sub(s1.base[i], s2.base[j]))).collect();
    for m in ms {
        if same && multiple_of(m, c1).is_some() {
            continue;
        }
        let mut xs = Vec::new();
        for &(i, j) in shared {
            for a in 0..l1 {
                let v = sub((s1.base[i].0 + a * c1.0, s1.base[i].1 + a * c1.1), (s2.base[j].0 + m.0, s2.base[j].1 + m.1));
                if let Some(b) = multiple_of(v, c2) {
                    xs.push(Crossing { t1: a * n1 + i as i64, t2: b * n2 + j as i64, edge: s1.z.passes[i].edge });
                }
            }
        }
        if let Some(w) = periodic_bigon(&mut xs, l1 * n1, sigma * l2 * n2) {
            return Some((m, w));
        }
    }
    None
}

/// Decides consistency exactly from lift arithmetic. Clauses are checked in
/// order (trivial class, self-crossing, parallel bigon); the first witness
/// in strand order is reported.
pub fn check_consistency(g: &TorusGraph) -> Verdict {
    let zs = extract_zigzags(g);
    if let Some(k) = zs.iter().position(|z| z.cls == (0, 0)) {
        return Verdict::Inconsistent(Witness::TrivialClass { strand: k });
    }
    let strands: Vec<Strand> = zs.iter().map(|z| Strand { z, base: z.bases(g) }).collect();
    for (k, s) in strands.iter().enumerate() {
        for i in 0..s.z.len() {
            for j in i + 1..s.z.len() {
                if s.z.passes[i].edge == s.z.passes[j].edge
                    && multiple_of(sub(s.base[i], s.base[j]), s.z.cls).is_some()
                {
                    return Verdict::Inconsistent(Witness::SelfCrossing { strand: k, edge: s.z.passes[i].edge });
                }
            }
        }
    }
    for (k1, s1) in strands.iter().enumerate() {
        for (k2, s2) in strands.iter().enumerate() {
            let shared = shared_passes(s1, s2);
            let found = if cross(s1.z.cls, s2.z.cls) != 0 {
                independent_pair(s1, s2, &shared)
            } else {
                dependent_pair(s1, s2, &shared, k1 == k2)
            };
            if let Some((translation, edges)) = found {
                return Verdict::Inconsistent(Witness::ParallelBigon { strands: (k1, k2), translation, edges });
            }
        }
    }
    Verdict::Consistent
}
