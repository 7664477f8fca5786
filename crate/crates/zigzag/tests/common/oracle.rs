//! Floating-point universal-cover realisation of a torus graph, used only as
//! an independent check of the exact consistency decision.
//!
//! Vertices sit at the points of a `.coords` file, edges are straight or bent
//! once, and each strand is a polyline that runs beside the edges and crosses
//! every edge it meets at the edge's middle. The turn at each vertex is read
//! off the geometry (the strand continues into the angular sector it lies in),
//! so the combinatorial turning rule is not used.

#![allow(dead_code, clippy::type_complexity)]

use std::collections::{BTreeMap, BTreeSet, HashMap};
use torusgraph::{Dart, Dir, TorusGraph, Vec2};

type P = (f64, f64);

fn add(a: P, b: P) -> P {
    (a.0 + b.0, a.1 + b.1)
}
fn sub(a: P, b: P) -> P {
    (a.0 - b.0, a.1 - b.1)
}
fn scale(a: P, k: f64) -> P {
    (a.0 * k, a.1 * k)
}
fn cross(a: P, b: P) -> f64 {
    a.0 * b.1 - a.1 * b.0
}
fn norm(a: P) -> f64 {
    a.0.hypot(a.1)
}
fn shift(a: P, c: Vec2) -> P {
    (a.0 + c.0 as f64, a.1 + c.1 as f64)
}

#[derive(Debug, Clone)]
pub struct Coords {
    pub black: Vec<P>,
    pub white: Vec<P>,
    pub bends: HashMap<usize, P>,
}

fn num(s: &str) -> f64 {
    match s.split_once('/') {
        Some((a, b)) => a.parse::<f64>().unwrap() / b.parse::<f64>().unwrap(),
        None => s.parse().unwrap(),
    }
}

pub fn parse_coords(text: &str) -> Coords {
    let mut black = BTreeMap::new();
    let mut white = BTreeMap::new();
    let mut bends = HashMap::new();
    for line in text.lines() {
        let t: Vec<&str> = line.split_whitespace().collect();
        if t.is_empty() {
            continue;
        }
        let i: usize = t[1].parse().unwrap();
        let p = (num(t[2]), num(t[3]));
        match t[0] {
            "b" => black.insert(i, p),
            "w" => white.insert(i, p),
            "bend" => bends.insert(i, p),
            other => panic!("bad coords line {other}"),
        };
    }
    Coords { black: black.into_values().collect(), white: white.into_values().collect(), bends }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    Consistent,
    TrivialClass,
    SelfCrossing,
    /// All bigon crossing-edge pairs found near the centre of the window.
    ParallelBigon(BTreeSet<(usize, usize)>),
}

impl OracleVerdict {
    pub fn clause(&self) -> &'static str {
        match self {
            OracleVerdict::Consistent => "Consistent",
            OracleVerdict::TrivialClass => "TrivialClass",
            OracleVerdict::SelfCrossing => "SelfCrossing",
            OracleVerdict::ParallelBigon(_) => "ParallelBigon",
        }
    }
}

pub struct Report {
    /// Rotation systems read off the drawing agree with the graph's.
    pub rotations_match: bool,
    /// Strands traced in the drawing, as dart cycles.
    pub strands: Vec<Vec<Dart>>,
    pub classes: Vec<Vec2>,
    pub window: i64,
    pub verdict: OracleVerdict,
}

struct Drawing<'a> {
    g: &'a TorusGraph,
    c: &'a Coords,
    /// Polyline of each edge with its black end in cell (0,0): black, bend, white.
    poly: Vec<[P; 3]>,
    /// Edges around each vertex sorted by the angle of their first segment.
    geo_black: Vec<Vec<usize>>,
    geo_white: Vec<Vec<usize>>,
    delta: f64,
    corner: f64,
}

const SAMPLES: [f64; 6] = [0.15, 0.3, 0.45, 0.55, 0.7, 0.85];

impl<'a> Drawing<'a> {
    fn new(g: &'a TorusGraph, c: &'a Coords) -> Self {
        let poly: Vec<[P; 3]> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(k, e)| {
                let pb = c.black[e.black];
                let pw = shift(c.white[e.white], e.offset);
                let m = c.bends.get(&k).copied().unwrap_or(scale(add(pb, pw), 0.5));
                [pb, m, pw]
            })
            .collect();
        let angle = |v: P| v.1.atan2(v.0);
        let mut geo_black = vec![Vec::new(); g.black_count()];
        let mut geo_white = vec![Vec::new(); g.white_count()];
        for (k, e) in g.edges().iter().enumerate() {
            let [pb, m, pw] = poly[k];
            geo_black[e.black].push((angle(sub(m, pb)), k));
            geo_white[e.white].push((angle(sub(m, pw)), k));
        }
        let sorted = |v: Vec<Vec<(f64, usize)>>| -> Vec<Vec<usize>> {
            v.into_iter()
                .map(|mut l| {
                    l.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
                    l.into_iter().map(|x| x.1).collect()
                })
                .collect()
        };
        let lmin = poly
            .iter()
            .flat_map(|p| [norm(sub(p[1], p[0])), norm(sub(p[2], p[1]))])
            .fold(f64::INFINITY, f64::min);
        Drawing { g, c, poly, geo_black: sorted(geo_black), geo_white: sorted(geo_white), delta: 0.02 * lmin, corner: 0.15 * lmin }
    }

    fn rotations_match(&self) -> bool {
        let same = |a: &[usize], b: &[usize]| {
            let k = a.iter().position(|&e| e == b[0]);
            k.is_some_and(|k| a.len() == b.len() && (0..a.len()).all(|i| a[(k + i) % a.len()] == b[i]))
        };
        self.geo_black.iter().zip(self.g.black_rotations()).all(|(a, b)| same(a, b))
            && self.geo_white.iter().zip(self.g.white_rotations()).all(|(a, b)| same(a, b))
    }

    /// Point at parameter s along edge e (black end at s = 0) and the left
    /// normal of the black→white direction there.
    fn along(&self, e: usize, s: f64) -> (P, P) {
        let [a, m, b] = self.poly[e];
        let (p, d) = if s <= 0.5 { (add(a, scale(sub(m, a), 2.0 * s)), sub(m, a)) } else { (add(m, scale(sub(b, m), 2.0 * s - 1.0)), sub(b, m)) };
        let u = scale(d, 1.0 / norm(d));
        (p, (-u.1, u.0))
    }

    /// Strand samples on a pass, in travel order, relative to the black cell.
    fn samples(&self, d: Dart) -> Vec<P> {
        let mut out: Vec<P> = SAMPLES
            .iter()
            .map(|&s| {
                let (p, n) = self.along(d.edge, s);
                let side = if s > 0.5 { 1.0 } else { -1.0 };
                let side = if d.dir == Dir::BlackToWhite { side } else { -side };
                add(p, scale(n, side * self.delta))
            })
            .collect();
        if d.dir == Dir::WhiteToBlack {
            out.reverse();
        }
        out
    }

    /// Vertex position and first-segment direction of edge e at the head of d,
    /// in the black cell frame of e.
    fn at_head(&self, d: Dart) -> (P, P) {
        let [a, m, b] = self.poly[d.edge];
        match d.dir {
            Dir::BlackToWhite => (b, sub(m, b)),
            Dir::WhiteToBlack => (a, sub(m, a)),
        }
    }

    fn ring(&self, d: Dart) -> &[usize] {
        match d.dir {
            Dir::BlackToWhite => &self.geo_white[self.g.edge(d.edge).white],
            Dir::WhiteToBlack => &self.geo_black[self.g.edge(d.edge).black],
        }
    }

    /// Traces one strand from `start`, returning its darts, its polyline over
    /// one period (with the crossing edge of each segment, if any) and its class.
    fn trace(&self, start: Dart) -> (Vec<Dart>, Vec<(P, Option<usize>)>, Vec2) {
        let mut darts = Vec::new();
        let mut pts: Vec<(P, Option<usize>)> = Vec::new();
        let mut cell: Vec2 = (0, 0); // black cell of the current pass
        let mut d = start;
        loop {
            darts.push(d);
            let s = self.samples(d);
            for (i, p) in s.iter().enumerate() {
                // segment leaving sample 2 is the crossing segment
                pts.push((shift(*p, cell), if i == 2 { Some(d.edge) } else { None }));
            }
            let (v, dir_e) = self.at_head(d);
            let last = s[5];
            let ring = self.ring(d);
            let k = ring.iter().position(|&e| e == d.edge).unwrap();
            let ccw = cross(dir_e, sub(last, v)) > 0.0;
            let next = if ccw { ring[(k + 1) % ring.len()] } else { ring[(k + ring.len() - 1) % ring.len()] };
            let head_black = d.dir == Dir::WhiteToBlack;
            let nd = if head_black { Dart::new(next, Dir::BlackToWhite) } else { Dart::new(next, Dir::WhiteToBlack) };
            // cell bookkeeping: v is in the frame of e's black cell
            let head_cell = if head_black { cell } else { (cell.0 + self.g.edge(d.edge).offset.0, cell.1 + self.g.edge(d.edge).offset.1) };
            let next_cell = if head_black { head_cell } else { (head_cell.0 - self.g.edge(next).offset.0, head_cell.1 - self.g.edge(next).offset.1) };
            // the first sample of the next pass must lie in the same sector
            let (v2, dir_n) = {
                let [a, m, b] = self.poly[next];
                if head_black { (a, sub(m, a)) } else { (b, sub(m, b)) }
            };
            let first = self.samples(nd)[0];
            let side_next = cross(dir_n, sub(first, v2)) > 0.0;
            assert_ne!(ccw, side_next, "strand leaves its sector at e{} -> e{}", d.edge, next);
            // corner point on the sector bisector
            let (a0, a1) = (dir_e.1.atan2(dir_e.0), dir_n.1.atan2(dir_n.0));
            let (from, to) = if ccw { (a0, a1) } else { (a1, a0) };
            let mut span = to - from;
            while span <= 0.0 {
                span += std::f64::consts::TAU;
            }
            let mid = from + span / 2.0;
            let vc = shift(v, cell);
            pts.push((add(vc, (self.corner * mid.cos(), self.corner * mid.sin())), None));
            cell = next_cell;
            d = nd;
            if d == start {
                return (darts, pts, cell);
            }
        }
    }
}

fn seg_hit(p: P, q: P, r: P, s: P) -> Option<(f64, f64)> {
    let (d1, d2) = (sub(q, p), sub(s, r));
    let den = cross(d1, d2);
    if den.abs() < 1e-14 {
        let w = sub(r, p);
        if cross(d1, w).abs() > 1e-12 {
            return None;
        }
        // collinear: the parameter intervals may only touch at an end
        let l = d1.0 * d1.0 + d1.1 * d1.1;
        let (a, b) = ((w.0 * d1.0 + w.1 * d1.1) / l, ((s.0 - p.0) * d1.0 + (s.1 - p.1) * d1.1) / l);
        let overlap = a.max(b).min(1.0) - a.min(b).max(0.0);
        assert!(overlap < 1e-9, "collinear overlapping strand segments");
        return None;
    }
    let w = sub(r, p);
    let t = cross(w, d2) / den;
    let u = cross(w, d1) / den;
    ((0.0..1.0).contains(&t) && (0.0..1.0).contains(&u)).then_some((t, u))
}

/// Segment of a lift: endpoints, lift id, unrolled parameter of its start, and
/// the edge it crosses.
struct Seg {
    a: P,
    b: P,
    lift: usize,
    t: f64,
    edge: Option<usize>,
}

pub fn run(g: &TorusGraph, coords: &Coords) -> Report {
    let dr = Drawing::new(g, coords);
    let rotations_match = dr.rotations_match();
    // strands in the order of their least dart
    let mut seen = BTreeSet::new();
    let mut strands = Vec::new();
    for e in 0..g.edge_count() {
        for dir in [Dir::BlackToWhite, Dir::WhiteToBlack] {
            let d = Dart::new(e, dir);
            if seen.contains(&d) {
                continue;
            }
            let tr = dr.trace(d);
            seen.extend(tr.0.iter().copied());
            strands.push(tr);
        }
    }
    let classes: Vec<Vec2> = strands.iter().map(|s| s.2).collect();
    let darts: Vec<Vec<Dart>> = strands.iter().map(|s| s.0.clone()).collect();
    let w = 2 * (classes.iter().map(|c| c.0.abs() + c.1.abs()).sum::<i64>() + 1);
    let done = |verdict| Report { rotations_match, strands: darts.clone(), classes: classes.clone(), window: w, verdict };
    if classes.contains(&(0, 0)) {
        return done(OracleVerdict::TrivialClass);
    }
    // pieces: each strand period translated by every u in the padded box
    let reach = strands
        .iter()
        .flat_map(|s| s.1.iter().map(|(p, _)| p.0.abs().max(p.1.abs())))
        .fold(0.0f64, f64::max)
        .ceil() as i64
        + 1;
    let outer = w + reach;
    let mut lifts: HashMap<(usize, Vec2), usize> = HashMap::new();
    let mut segs: Vec<Seg> = Vec::new();
    for (k, (_, pts, c)) in strands.iter().enumerate() {
        let nn = (c.0 * c.0 + c.1 * c.1) as f64;
        let len = pts.len();
        for ux in -outer..=outer {
            for uy in -outer..=outer {
                let a = ((ux * c.0 + uy * c.1) as f64 / nn).floor() as i64;
                let rep = (ux - a * c.0, uy - a * c.1);
                let nl = lifts.len();
                let lift = *lifts.entry((k, rep)).or_insert(nl);
                for i in 0..len {
                    let p = shift(pts[i].0, (ux, uy));
                    let q = if i + 1 < len { shift(pts[i + 1].0, (ux, uy)) } else { shift(pts[0].0, (ux + c.0, uy + c.1)) };
                    segs.push(Seg { a: p, b: q, lift, t: (a * len as i64 + i as i64) as f64, edge: pts[i].1 });
                }
            }
        }
    }
    // uniform grid buckets
    let cell = |x: f64| x.floor() as i64;
    let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (i, s) in segs.iter().enumerate() {
        for gx in cell(s.a.0.min(s.b.0))..=cell(s.a.0.max(s.b.0)) {
            for gy in cell(s.a.1.min(s.b.1))..=cell(s.a.1.max(s.b.1)) {
                grid.entry((gx, gy)).or_default().push(i);
            }
        }
    }
    // crossings: (lift a, t a, lift b, t b, edge, point)
    let mut hits: Vec<(usize, f64, usize, f64, usize, P)> = Vec::new();
    for (&(gx, gy), ids) in &grid {
        for (x, &i) in ids.iter().enumerate() {
            for &j in &ids[x + 1..] {
                let (s, r) = (&segs[i], &segs[j]);
                if s.lift == r.lift && (s.t - r.t).abs() <= 1.0 {
                    continue;
                }
                if let Some((t, u)) = seg_hit(s.a, s.b, r.a, r.b) {
                    let p = add(s.a, scale(sub(s.b, s.a), t));
                    if cell(p.0) != gx || cell(p.1) != gy {
                        continue;
                    }
                    match (s.edge, r.edge) {
                        (Some(e1), Some(e2)) if e1 == e2 => hits.push((s.lift, s.t + t, r.lift, r.t + u, e1, p)),
                        _ => panic!("strand polylines cross away from an edge near {p:?}"),
                    }
                }
            }
        }
    }
    let inner = |p: P| p.0.abs() <= w as f64 && p.1.abs() <= w as f64;
    if hits.iter().any(|h| h.0 == h.2 && inner(h.5)) {
        return done(OracleVerdict::SelfCrossing);
    }
    // polyline points of each lift keyed by unrolled parameter, for arc checks
    let mut by_lift: HashMap<usize, Vec<(f64, P)>> = HashMap::new();
    for s in &segs {
        by_lift.entry(s.lift).or_default().push((s.t, s.a));
    }
    for v in by_lift.values_mut() {
        v.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    }
    let arc_inside = |lift: usize, t0: f64, t1: f64| {
        let (lo, hi) = (t0.min(t1), t0.max(t1));
        let v = &by_lift[&lift];
        let covered = v.first().unwrap().0 < lo && v.last().unwrap().0 > hi;
        covered && v.iter().filter(|(t, _)| *t >= lo - 1.0 && *t <= hi + 1.0).all(|(_, p)| inner(*p))
    };
    let mut pairs: BTreeMap<(usize, usize), Vec<(f64, f64, usize)>> = BTreeMap::new();
    for h in &hits {
        if h.0 == h.2 {
            continue;
        }
        pairs.entry((h.0, h.2)).or_default().push((h.1, h.3, h.4));
        pairs.entry((h.2, h.0)).or_default().push((h.3, h.1, h.4));
    }
    let mut bigons = BTreeSet::new();
    for (&(la, lb), xs) in &pairs {
        let mut xs = xs.clone();
        xs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let mut tb: Vec<f64> = xs.iter().map(|x| x.1).collect();
        tb.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let rank = |t: f64| tb.iter().position(|&x| x == t).unwrap();
        for w2 in xs.windows(2) {
            let (p, q) = (w2[0], w2[1]);
            if !arc_inside(la, p.0, q.0) || !arc_inside(lb, p.1, q.1) {
                continue;
            }
            if rank(q.1) == rank(p.1) + 1 {
                bigons.insert((p.2, q.2));
            }
        }
    }
    if bigons.is_empty() {
        done(OracleVerdict::Consistent)
    } else {
        done(OracleVerdict::ParallelBigon(bigons))
    }
}
