use torusgraph::{Dart, Dir, TorusGraph, Vec2, Vertex};

/// A closed strand: passes in order, the lift position before each pass, and
/// the homology class (total displacement over one period).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigZag {
    pub passes: Vec<Dart>,
    pub offsets: Vec<Vec2>,
    pub cls: Vec2,
}

impl ZigZag {
    pub fn len(&self) -> usize {
        self.passes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.passes.is_empty()
    }

    /// Lift cell of the black endpoint of each pass. Two passes cross the same
    /// edge-lift exactly when edge and black cell agree.
    pub fn bases(&self, g: &TorusGraph) -> Vec<Vec2> {
        self.passes
            .iter()
            .zip(&self.offsets)
            .map(|(d, &p)| match d.dir {
                Dir::BlackToWhite => p,
                Dir::WhiteToBlack => {
                    let o = g.edge(d.edge).offset;
                    (p.0 - o.0, p.1 - o.1)
                }
            })
            .collect()
    }
}

/// Next pass of the strand through `d`: turn to the rotation predecessor at a
/// white head, to the successor at a black head.
pub fn zigzag_next(g: &TorusGraph, d: Dart) -> Dart {
    let v = g.head(d);
    let next = match v {
        Vertex::White(_) => g.pred(v.color(), d.edge),
        Vertex::Black(_) => g.succ(v.color(), d.edge),
    };
    TorusGraph::dart_from(v, next)
}

/// All strands, each started at its least unvisited dart.
pub fn extract_zigzags(g: &TorusGraph) -> Vec<ZigZag> {
    let mut seen = vec![[false; 2]; g.edge_count()];
    let mut out = Vec::new();
    for e in 0..g.edge_count() {
        for dir in [Dir::BlackToWhite, Dir::WhiteToBlack] {
            let mut d = Dart::new(e, dir);
            if seen[e][(dir == Dir::WhiteToBlack) as usize] {
                continue;
            }
            let (mut passes, mut offsets) = (Vec::new(), Vec::new());
            let mut p = (0, 0);
            while !std::mem::replace(&mut seen[d.edge][(d.dir == Dir::WhiteToBlack) as usize], true) {
                passes.push(d);
                offsets.push(p);
                let o = g.dart_offset(d);
                p = (p.0 + o.0, p.1 + o.1);
                d = zigzag_next(g, d);
            }
            out.push(ZigZag { passes, offsets, cls: p });
        }
    }
    out
}
