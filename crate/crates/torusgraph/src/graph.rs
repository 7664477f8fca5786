use crate::Vec2;
use std::collections::VecDeque;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Black,
    White,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Black(usize),
    White(usize),
}

impl Vertex {
    pub fn color(self) -> Color {
        match self {
            Vertex::Black(_) => Color::Black,
            Vertex::White(_) => Color::White,
        }
    }
    pub fn index(self) -> usize {
        match self {
            Vertex::Black(i) | Vertex::White(i) => i,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Black(i) => write!(f, "b{i}"),
            Vertex::White(i) => write!(f, "w{i}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub black: usize,
    pub white: usize,
    pub offset: Vec2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    BlackToWhite,
    WhiteToBlack,
}

/// A directed edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: usize,
    pub dir: Dir,
}

impl Dart {
    pub fn new(edge: usize, dir: Dir) -> Dart {
        Dart { edge, dir }
    }
    /// +1 for black→white, −1 otherwise.
    pub fn sign(self) -> i64 {
        match self.dir {
            Dir::BlackToWhite => 1,
            Dir::WhiteToBlack => -1,
        }
    }
    pub fn reversed(self) -> Dart {
        let dir = match self.dir {
            Dir::BlackToWhite => Dir::WhiteToBlack,
            Dir::WhiteToBlack => Dir::BlackToWhite,
        };
        Dart { edge: self.edge, dir }
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrow = match self.dir {
            Dir::BlackToWhite => "bw",
            Dir::WhiteToBlack => "wb",
        };
        write!(f, "e{}:{arrow}", self.edge)
    }
}

/// Face boundary traced with the face on the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub boundary: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }
    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ValidationError {
    #[error("NotBipartite: edge {edge} joins two {color:?} vertices")]
    NotBipartite { edge: usize, color: Color },
    #[error("EmptyColorClass: need at least one black and one white vertex")]
    EmptyColorClass,
    #[error("VertexOutOfRange: edge {edge} references {vertex}")]
    VertexOutOfRange { edge: usize, vertex: Vertex },
    #[error("DegreeTooLow: {vertex} has degree {degree}")]
    DegreeTooLow { vertex: Vertex, degree: usize },
    #[error("RotationMismatch: {vertex}: {reason}")]
    RotationMismatch { vertex: Vertex, reason: String },
    #[error("Disconnected: {vertex} is unreachable from b0")]
    Disconnected { vertex: Vertex },
    #[error("EulerCharacteristic: V - E + F = {v} - {e} + {f} = {chi}, expected 0")]
    EulerCharacteristic { v: usize, e: usize, f: usize, chi: i64 },
    #[error("FaceOffsetNonzero: face {face} has offset sum ({}, {})", sum.0, sum.1)]
    FaceOffsetNonzero { face: usize, sum: Vec2 },
    #[error("HomologyDegenerate: cycle classes span a sublattice of index {index} (0 = rank below 2)")]
    HomologyDegenerate { index: i64 },
}

/// Validated bipartite torus graph.
///
/// Rotations list incident edge ids counterclockwise and are stored starting
/// at their smallest id, so structural equality ignores the cyclic start.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusGraph {
    edges: Vec<Edge>,
    rot_black: Vec<Vec<usize>>,
    rot_white: Vec<Vec<usize>>,
    pos_black: Vec<usize>,
    pos_white: Vec<usize>,
    faces: Vec<Face>,
}

fn canonical_cycle(r: &[usize]) -> Vec<usize> {
    let k = r.iter().enumerate().min_by_key(|(_, &e)| e).map_or(0, |(i, _)| i);
    r[k..].iter().chain(&r[..k]).copied().collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl TorusGraph {
    /// Builds and validates. Vertex counts are the rotation list lengths.
    pub fn new(
        edges: Vec<Edge>,
        rot_black: Vec<Vec<usize>>,
        rot_white: Vec<Vec<usize>>,
    ) -> Result<TorusGraph, ValidationError> {
        let (nb, nw) = (rot_black.len(), rot_white.len());
        if nb == 0 || nw == 0 {
            return Err(ValidationError::EmptyColorClass);
        }
        for (k, e) in edges.iter().enumerate() {
            if e.black >= nb {
                return Err(ValidationError::VertexOutOfRange { edge: k, vertex: Vertex::Black(e.black) });
            }
            if e.white >= nw {
                return Err(ValidationError::VertexOutOfRange { edge: k, vertex: Vertex::White(e.white) });
            }
        }
        let mut pos_black = vec![usize::MAX; edges.len()];
        let mut pos_white = vec![usize::MAX; edges.len()];
        let rot_black: Vec<Vec<usize>> = rot_black.iter().map(|r| canonical_cycle(r)).collect();
        let rot_white: Vec<Vec<usize>> = rot_white.iter().map(|r| canonical_cycle(r)).collect();
        for (color, rots) in [(Color::Black, &rot_black), (Color::White, &rot_white)] {
            for (v, r) in rots.iter().enumerate() {
                let vertex = match color {
                    Color::Black => Vertex::Black(v),
                    Color::White => Vertex::White(v),
                };
                let pos = match color {
                    Color::Black => &mut pos_black,
                    Color::White => &mut pos_white,
                };
                for (i, &e) in r.iter().enumerate() {
                    let Some(edge) = edges.get(e) else {
                        return Err(ValidationError::RotationMismatch {
                            vertex,
                            reason: format!("unknown edge {e}"),
                        });
                    };
                    let end = match color {
                        Color::Black => edge.black,
                        Color::White => edge.white,
                    };
                    if end != v {
                        return Err(ValidationError::RotationMismatch {
                            vertex,
                            reason: format!("edge {e} is not incident"),
                        });
                    }
                    if pos[e] != usize::MAX {
                        return Err(ValidationError::RotationMismatch {
                            vertex,
                            reason: format!("edge {e} listed twice"),
                        });
                    }
                    pos[e] = i;
                }
            }
        }
        for (k, e) in edges.iter().enumerate() {
            for (pos, vertex) in [(&pos_black, Vertex::Black(e.black)), (&pos_white, Vertex::White(e.white))] {
                if pos[k] == usize::MAX {
                    return Err(ValidationError::RotationMismatch {
                        vertex,
                        reason: format!("edge {k} missing from rotation"),
                    });
                }
            }
        }
        for (color, rots) in [(Color::Black, &rot_black), (Color::White, &rot_white)] {
            for (v, r) in rots.iter().enumerate() {
                if r.len() < 2 {
                    let vertex = if color == Color::Black { Vertex::Black(v) } else { Vertex::White(v) };
                    return Err(ValidationError::DegreeTooLow { vertex, degree: r.len() });
                }
            }
        }
        let mut g = TorusGraph { edges, rot_black, rot_white, pos_black, pos_white, faces: Vec::new() };
        g.check_connected()?;
        g.faces = g.trace();
        let (v, e, f) = (nb + nw, g.edges.len(), g.faces.len());
        let chi = v as i64 - e as i64 + f as i64;
        if chi != 0 {
            return Err(ValidationError::EulerCharacteristic { v, e, f, chi });
        }
        for (i, face) in g.faces.iter().enumerate() {
            let sum = g.walk_offset(&face.boundary);
            if sum != (0, 0) {
                return Err(ValidationError::FaceOffsetNonzero { face: i, sum });
            }
        }
        let index = g.homology_index();
        if index != 1 {
            return Err(ValidationError::HomologyDegenerate { index });
        }
        Ok(g)
    }

    fn check_connected(&self) -> Result<(), ValidationError> {
        let mut seen_b = vec![false; self.black_count()];
        let mut seen_w = vec![false; self.white_count()];
        seen_b[0] = true;
        let mut q = VecDeque::from([Vertex::Black(0)]);
        while let Some(v) = q.pop_front() {
            for &e in self.rotation(v) {
                let u = self.other_end(v, e);
                let seen = match u {
                    Vertex::Black(i) => &mut seen_b[i],
                    Vertex::White(j) => &mut seen_w[j],
                };
                if !*seen {
                    *seen = true;
                    q.push_back(u);
                }
            }
        }
        if let Some(i) = seen_b.iter().position(|s| !s) {
            return Err(ValidationError::Disconnected { vertex: Vertex::Black(i) });
        }
        if let Some(j) = seen_w.iter().position(|s| !s) {
            return Err(ValidationError::Disconnected { vertex: Vertex::White(j) });
        }
        Ok(())
    }

    /// gcd of the 2×2 minors of the fundamental cycle classes; 1 iff they span Z².
    fn homology_index(&self) -> i64 {
        let cls: Vec<Vec2> = self
            .fundamental_cycles()
            .iter()
            .map(|(_, c)| crate::cycles::class_of(self, c))
            .collect();
        let mut g = 0;
        for i in 0..cls.len() {
            for j in i + 1..cls.len() {
                g = gcd(g, cls[i].0 * cls[j].1 - cls[i].1 * cls[j].0);
            }
        }
        g
    }

    pub fn black_count(&self) -> usize {
        self.rot_black.len()
    }
    pub fn white_count(&self) -> usize {
        self.rot_white.len()
    }
    pub fn vertex_count(&self) -> usize {
        self.black_count() + self.white_count()
    }
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }
    pub fn black_rotations(&self) -> &[Vec<usize>] {
        &self.rot_black
    }
    pub fn white_rotations(&self) -> &[Vec<usize>] {
        &self.rot_white
    }

    /// Counterclockwise incident edges of `v`.
    pub fn rotation(&self, v: Vertex) -> &[usize] {
        match v {
            Vertex::Black(i) => &self.rot_black[i],
            Vertex::White(j) => &self.rot_white[j],
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rotation(v).len()
    }

    /// Position of edge `e` in the rotation at its endpoint of colour `c`.
    pub fn position(&self, c: Color, e: usize) -> usize {
        match c {
            Color::Black => self.pos_black[e],
            Color::White => self.pos_white[e],
        }
    }

    pub fn endpoint(&self, c: Color, e: usize) -> Vertex {
        match c {
            Color::Black => Vertex::Black(self.edges[e].black),
            Color::White => Vertex::White(self.edges[e].white),
        }
    }

    pub fn other_end(&self, v: Vertex, e: usize) -> Vertex {
        match v {
            Vertex::Black(_) => Vertex::White(self.edges[e].white),
            Vertex::White(_) => Vertex::Black(self.edges[e].black),
        }
    }

    /// Counterclockwise successor of `e` around its endpoint of colour `c`.
    pub fn succ(&self, c: Color, e: usize) -> usize {
        let r = self.rotation(self.endpoint(c, e));
        r[(self.position(c, e) + 1) % r.len()]
    }

    pub fn pred(&self, c: Color, e: usize) -> usize {
        let r = self.rotation(self.endpoint(c, e));
        r[(self.position(c, e) + r.len() - 1) % r.len()]
    }

    pub fn tail(&self, d: Dart) -> Vertex {
        match d.dir {
            Dir::BlackToWhite => Vertex::Black(self.edges[d.edge].black),
            Dir::WhiteToBlack => Vertex::White(self.edges[d.edge].white),
        }
    }

    pub fn head(&self, d: Dart) -> Vertex {
        self.tail(d.reversed())
    }

    /// The dart leaving `v` along `e`.
    pub fn dart_from(v: Vertex, e: usize) -> Dart {
        match v {
            Vertex::Black(_) => Dart::new(e, Dir::BlackToWhite),
            Vertex::White(_) => Dart::new(e, Dir::WhiteToBlack),
        }
    }

    /// Signed offset of a dart.
    pub fn dart_offset(&self, d: Dart) -> Vec2 {
        let (x, y) = self.edges[d.edge].offset;
        (d.sign() * x, d.sign() * y)
    }

    pub fn walk_offset(&self, walk: &[Dart]) -> Vec2 {
        walk.iter().fold((0, 0), |s, &d| {
            let o = self.dart_offset(d);
            (s.0 + o.0, s.1 + o.1)
        })
    }

    /// The dart after `d` on its face: leave the head along the rotation
    /// predecessor of the arrival edge.
    pub fn face_next(&self, d: Dart) -> Dart {
        let v = self.head(d);
        TorusGraph::dart_from(v, self.pred(v.color(), d.edge))
    }

    fn trace(&self) -> Vec<Face> {
        let mut seen = vec![[false; 2]; self.edges.len()];
        let mut out = Vec::new();
        for e in 0..self.edges.len() {
            for (k, dir) in [Dir::BlackToWhite, Dir::WhiteToBlack].into_iter().enumerate() {
                if seen[e][k] {
                    continue;
                }
                let mut boundary = Vec::new();
                let mut d = Dart::new(e, dir);
                loop {
                    let slot = &mut seen[d.edge][(d.dir == Dir::WhiteToBlack) as usize];
                    if *slot {
                        break;
                    }
                    *slot = true;
                    boundary.push(d);
                    d = self.face_next(d);
                }
                out.push(Face { boundary });
            }
        }
        out
    }

    /// Faces in canonical order: each starts at the least unused dart in
    /// (edge, direction) order.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Re-traces faces starting from an arbitrary dart order; used to check
    /// independence of the starting half-edge.
    pub fn trace_faces_from(&self, order: &[Dart]) -> Vec<Face> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for &s in order {
            if seen.contains(&s) {
                continue;
            }
            let mut boundary = Vec::new();
            let mut d = s;
            while seen.insert(d) {
                boundary.push(d);
                d = self.face_next(d);
            }
            out.push(Face { boundary });
        }
        out
    }

    /// Index of the face containing each dart, as `[bw, wb]` per edge.
    pub fn face_of_darts(&self) -> Vec<[usize; 2]> {
        let mut w = vec![[usize::MAX; 2]; self.edges.len()];
        for (i, f) in self.faces.iter().enumerate() {
            for d in &f.boundary {
                w[d.edge][(d.dir == Dir::WhiteToBlack) as usize] = i;
            }
        }
        w
    }

    /// Replaces all offsets, re-validating.
    pub fn with_offsets(&self, offsets: &[Vec2]) -> Result<TorusGraph, ValidationError> {
        let edges = self
            .edges
            .iter()
            .zip(offsets)
            .map(|(e, &offset)| Edge { offset, ..*e })
            .collect();
        TorusGraph::new(edges, self.rot_black.clone(), self.rot_white.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(black: usize, white: usize, dx: i64, dy: i64) -> Edge {
        Edge { black, white, offset: (dx, dy) }
    }

    fn hex1() -> TorusGraph {
        TorusGraph::new(vec![e(0, 0, 0, 0), e(0, 0, 1, 0), e(0, 0, 0, 1)], vec![vec![0, 1, 2]], vec![vec![0, 1, 2]])
            .unwrap()
    }

    #[test]
    fn hex1_single_hexagon() {
        let g = hex1();
        assert_eq!(g.faces().len(), 1);
        assert_eq!(g.faces()[0].len(), 6);
    }

    #[test]
    fn reversed_rotation_is_a_sphere() {
        let r = TorusGraph::new(
            vec![e(0, 0, 0, 0), e(0, 0, 1, 0), e(0, 0, 0, 1)],
            vec![vec![0, 1, 2]],
            vec![vec![0, 2, 1]],
        );
        assert_eq!(r, Err(ValidationError::EulerCharacteristic { v: 2, e: 3, f: 3, chi: 2 }));
    }

    #[test]
    fn square_two_quads() {
        let g = TorusGraph::new(
            vec![e(0, 0, 0, 0), e(0, 0, 1, 0), e(0, 0, 0, 1), e(0, 0, 1, 1)],
            vec![vec![0, 1, 3, 2]],
            vec![vec![0, 1, 3, 2]],
        )
        .unwrap();
        let lens: Vec<usize> = g.faces().iter().map(Face::len).collect();
        assert_eq!(lens, vec![4, 4]);
    }

    #[test]
    fn doubled_edge_gives_two_digons() {
        // two digons on two vertices: a sphere, caught before the offset check
        let r = TorusGraph::new(vec![e(0, 0, 0, 0), e(0, 0, 1, 0)], vec![vec![0, 1]], vec![vec![0, 1]]);
        assert_eq!(r, Err(ValidationError::EulerCharacteristic { v: 2, e: 2, f: 2, chi: 2 }));
    }

    #[test]
    fn degree_one_rejected() {
        let r = TorusGraph::new(
            vec![e(0, 0, 0, 0), e(0, 0, 1, 0), e(0, 0, 0, 1), e(1, 0, 0, 0)],
            vec![vec![0, 1, 2], vec![3]],
            vec![vec![0, 1, 2, 3]],
        );
        assert_eq!(r, Err(ValidationError::DegreeTooLow { vertex: Vertex::Black(1), degree: 1 }));
    }

    #[test]
    fn face_offsets_must_vanish() {
        let r = TorusGraph::new(
            vec![e(0, 0, 0, 0), e(0, 0, 1, 0), e(0, 0, 0, 1), e(0, 0, 2, 1)],
            vec![vec![0, 1, 3, 2]],
            vec![vec![0, 1, 3, 2]],
        );
        assert_eq!(r, Err(ValidationError::FaceOffsetNonzero { face: 0, sum: (1, 0) }));
    }

    #[test]
    fn collinear_offsets_are_degenerate() {
        let r = TorusGraph::new(vec![e(0, 0, 0, 0), e(0, 0, 1, 0), e(0, 0, 2, 0)], vec![vec![0, 1, 2]], vec![vec![0, 1, 2]]);
        assert!(matches!(r, Err(ValidationError::HomologyDegenerate { .. })));
    }

    #[test]
    fn rotation_canonicalized() {
        let a = hex1();
        let b = TorusGraph::new(vec![e(0, 0, 0, 0), e(0, 0, 1, 0), e(0, 0, 0, 1)], vec![vec![1, 2, 0]], vec![vec![2, 0, 1]])
            .unwrap();
        assert_eq!(a, b);
    }
}
