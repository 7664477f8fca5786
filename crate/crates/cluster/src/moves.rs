use crate::seed::{holonomy, mutate_quiver, quiver};
use crate::{ClusterError, ClusterSeed};
use exactalg::linalg::solve;
use exactalg::{int, pow_rat, Rat};
use kasteleyn::kasteleyn_orientation;
use torusgraph::{offset_gauge, CycleVec, Dir, Edge, TorusGraph, Vertex};

/// How a square move relabels things: `faces[i]` is the face of the new graph
/// that corresponds to face `i` of the old one. `square` lists the face edges
/// starting from the black→white pass, `legs` the third edges at its black corners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveMap {
    pub faces: Vec<usize>,
    pub square: [usize; 4],
    pub legs: [usize; 2],
}

impl MoveMap {
    /// Image of a cycle: the two rewired edges are replaced by the paths
    /// they now stand for.
    pub fn map_cycle(&self, c: &[i64]) -> CycleVec {
        let [s1, s2, s3, s4] = self.square;
        let [t1, t2] = self.legs;
        let mut v = c.to_vec();
        let (a, b) = (v[s2], v[s4]);
        v[s2] = 0;
        v[s4] = 0;
        v[s1] += a;
        v[s4] -= a;
        v[t2] += a;
        v[s3] += b;
        v[s2] -= b;
        v[t1] += b;
        v
    }
}

/// Vertex re-gauging that makes every edge on the boundary of `face` carry a
/// zero offset (possible because the offsets around a face sum to zero).
pub fn zero_face_offsets(g: &TorusGraph, face: usize) -> Result<TorusGraph, ClusterError> {
    let faces = g.faces();
    let f = faces.get(face).ok_or(ClusterError::FaceOutOfRange { face, count: faces.len() })?;
    let mut fb: Vec<Option<(i64, i64)>> = vec![None; g.black_count()];
    let mut fw: Vec<Option<(i64, i64)>> = vec![None; g.white_count()];
    // walk the boundary: offset + fw[white] - fb[black] = 0 on each edge
    for d in &f.boundary {
        let e = g.edge(d.edge);
        match (d.dir, fb[e.black], fw[e.white]) {
            (_, Some(b), None) => fw[e.white] = Some((b.0 - e.offset.0, b.1 - e.offset.1)),
            (_, None, Some(w)) => fb[e.black] = Some((w.0 + e.offset.0, w.1 + e.offset.1)),
            (_, None, None) => {
                fb[e.black] = Some((0, 0));
                fw[e.white] = Some((-e.offset.0, -e.offset.1));
            }
            _ => {}
        }
    }
    let fb: Vec<(i64, i64)> = fb.into_iter().map(|v| v.unwrap_or((0, 0))).collect();
    let fw: Vec<(i64, i64)> = fw.into_iter().map(|v| v.unwrap_or((0, 0))).collect();
    let h = offset_gauge(g, &fb, &fw);
    if h.faces()[face].boundary.iter().any(|d| h.edge(d.edge).offset != (0, 0)) {
        return Err(ClusterError::NonzeroFaceOffsets { face });
    }
    Ok(h)
}

pub fn square_move(g: &TorusGraph, face: usize) -> Result<TorusGraph, ClusterError> {
    square_move_mapped(g, face).map(|(h, _)| h)
}

/// The local move at a quadrilateral face with trivalent corners whose black
/// corners continue to bivalent white vertices. Both black corners slide
/// across the square; V, E and F are unchanged.
pub fn square_move_mapped(g: &TorusGraph, face: usize) -> Result<(TorusGraph, MoveMap), ClusterError> {
    let faces = g.faces();
    let f = faces.get(face).ok_or(ClusterError::FaceOutOfRange { face, count: faces.len() })?;
    let mut darts = f.boundary.clone();
    let mut edges_seen: Vec<usize> = darts.iter().map(|d| d.edge).collect();
    edges_seen.sort();
    edges_seen.dedup();
    if darts.len() != 4 || edges_seen.len() != 4 {
        return Err(ClusterError::NotQuadrilateral { face, len: darts.len() });
    }
    if darts[0].dir != Dir::BlackToWhite {
        darts.rotate_left(1);
    }
    let [s1, s2, s3, s4] = [darts[0].edge, darts[1].edge, darts[2].edge, darts[3].edge];
    let e = |k: usize| *g.edge(k);
    let (b1, w1, b2, w2) = (e(s1).black, e(s1).white, e(s3).black, e(s3).white);
    if b1 == b2 || w1 == w2 {
        return Err(ClusterError::NotQuadrilateral { face, len: 4 });
    }
    for v in [Vertex::Black(b1), Vertex::White(w1), Vertex::Black(b2), Vertex::White(w2)] {
        if g.degree(v) != 3 {
            return Err(ClusterError::NotTrivalent { vertex: v, degree: g.degree(v) });
        }
    }
    if [s1, s2, s3, s4].iter().any(|&k| e(k).offset != (0, 0)) {
        return Err(ClusterError::NonzeroFaceOffsets { face });
    }
    let third = |b: usize, x: usize, y: usize| *g.black_rotations()[b].iter().find(|&&k| k != x && k != y).unwrap();
    let (t1, t2) = (third(b1, s1, s4), third(b2, s2, s3));
    let (u1, u2) = (e(t1).white, e(t2).white);
    for u in [u1, u2] {
        if g.degree(Vertex::White(u)) != 2 {
            return Err(ClusterError::MissingBivalentLeg { vertex: Vertex::White(u) });
        }
    }
    let other = |u: usize, t: usize| *g.white_rotations()[u].iter().find(|&&k| k != t).unwrap();
    let (l1, l3) = (other(u1, t1), other(u2, t2));
    let plus = |a: (i64, i64), b: (i64, i64), c: (i64, i64)| (a.0 - b.0 + c.0, a.1 - b.1 + c.1);

    let mut edges: Vec<Edge> = g.edges().to_vec();
    edges[s2] = Edge { black: b2, white: u1, offset: plus(e(s2).offset, e(s1).offset, e(t1).offset) };
    edges[s4] = Edge { black: b1, white: u2, offset: plus(e(s4).offset, e(s3).offset, e(t2).offset) };
    let mut rb = g.black_rotations().to_vec();
    let mut rw = g.white_rotations().to_vec();
    rb[b1] = vec![s4, t1, s1];
    rb[b2] = vec![s2, t2, s3];
    rw[u1] = vec![t1, s2, l1];
    rw[u2] = vec![t2, s4, l3];
    rw[w1].retain(|&k| k != s2);
    rw[w2].retain(|&k| k != s4);
    let h = TorusGraph::new(edges, rb, rw)?;

    // faces away from the square keep at least one untouched dart
    let local = [s1, s2, s3, s4, t1, t2];
    let where_h = h.face_of_darts();
    let mut map = vec![usize::MAX; faces.len()];
    for (i, fi) in faces.iter().enumerate() {
        if i == face {
            continue;
        }
        let mut ids: Vec<usize> = fi
            .boundary
            .iter()
            .filter(|d| !local.contains(&d.edge))
            .map(|d| where_h[d.edge][(d.dir == Dir::WhiteToBlack) as usize])
            .collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 1, "face {i} keeps its identity");
        map[i] = ids[0];
    }
    let used: Vec<usize> = map.iter().copied().filter(|&x| x != usize::MAX).collect();
    map[face] = (0..faces.len()).find(|x| !used.contains(x)).unwrap();
    let mv = MoveMap { faces: map, square: [s1, s2, s3, s4], legs: [t1, t2] };

    let (eg, eh) = (mutate_quiver(&quiver(g), face), quiver(&h));
    for i in 0..faces.len() {
        for j in 0..faces.len() {
            assert_eq!(eg[i][j], eh[mv.faces[i]][mv.faces[j]], "quiver of the move is the mutated quiver");
        }
    }
    Ok((h, mv))
}

/// Coordinates after the move at `face`. Face coordinates follow the
/// quiver mutation; quasimomenta are moved with the cycles, corrected by the
/// Kasteleyn signs of both graphs, and re-expressed on the new graph's basis
/// cycles.
pub fn x_transform(seed: &ClusterSeed, face: usize) -> Result<ClusterSeed, ClusterError> {
    let g = &seed.graph;
    let xm = seed.x.get(face).ok_or(ClusterError::FaceOutOfRange { face, count: seed.x.len() })?;
    if *xm == int(-1) {
        return Err(ClusterError::SingularTransform { face });
    }
    let (h, mv) = square_move_mapped(g, face)?;
    let one_plus = xm + int(1);
    let ratio = xm / &one_plus;
    // per boundary edge of M: sign of its pass and the factor it carries
    let local: Vec<(usize, i64, Rat)> = g.faces()[face]
        .boundary
        .iter()
        .map(|d| (d.edge, d.sign(), if d.dir == Dir::WhiteToBlack { one_plus.clone() } else { ratio.clone() }))
        .collect();
    let factor = |c: &[i64]| {
        local.iter().fold(int(1), |p, (e, s, f)| p * pow_rat(f, -s * c[*e]).expect("nonzero factor"))
    };

    let mut x = vec![int(0); seed.x.len()];
    for (i, fi) in g.faces().iter().enumerate() {
        x[mv.faces[i]] = &seed.x[i] * factor(&g.edge_vector(&fi.boundary));
    }
    assert!(x.iter().fold(int(1), |p, v| p * v) == int(1));

    let signs = |k: &[i8]| -> Vec<Rat> { k.iter().map(|&s| int(s as i64)).collect() };
    let (kg, kh) = (signs(&kasteleyn_orientation(g)?), signs(&kasteleyn_orientation(&h)?));
    let (gc, hc) = (g.basis_cycles(), h.basis_cycles());
    let hfaces: Vec<CycleVec> = h.faces().iter().map(|f| h.edge_vector(&f.boundary)).collect();
    let q = [0, 1].map(|k| {
        let moved = mv.map_cycle(&gc[k]);
        let mut v = &seed.q[k] * factor(&gc[k]) * holonomy(&kg, &gc[k]) * holonomy(&kh, &moved);
        let diff: Vec<i64> = hc[k].iter().zip(&moved).map(|(a, b)| a - b).collect();
        for (j, c) in face_combination(&hfaces, &diff).into_iter().enumerate() {
            if c != 0 {
                v *= pow_rat(&x[j], c).unwrap();
            }
        }
        v
    });
    Ok(ClusterSeed { eps: quiver(&h), graph: h, x, q })
}

/// Integer c with Σ c_F ∂F = target and c_last = 0; the target must be a
/// null-homologous cycle.
fn face_combination(faces: &[CycleVec], target: &[i64]) -> Vec<i64> {
    let n = faces.len() - 1;
    let a: Vec<Vec<Rat>> = (0..target.len()).map(|e| (0..n).map(|f| int(faces[f][e])).collect()).collect();
    let b: Vec<Rat> = target.iter().map(|&v| int(v)).collect();
    let sol = solve(&a, &b).expect("difference of homologous cycles bounds faces");
    let mut c: Vec<i64> = sol.iter().map(|v| i64::try_from(v.to_integer()).unwrap()).collect();
    assert!(sol.iter().all(|v| v.is_integer()));
    c.push(0);
    c
}

