use crate::graph::TorusGraph;
use crate::Vec2;

/// Re-gauges offsets: each edge offset becomes offset + f(white) − f(black).
/// Face sums and all cycle classes are unchanged.
pub fn offset_gauge(g: &TorusGraph, fb: &[Vec2], fw: &[Vec2]) -> TorusGraph {
    let offs: Vec<Vec2> = g
        .edges()
        .iter()
        .map(|e| {
            let (b, w) = (fb[e.black], fw[e.white]);
            (e.offset.0 + w.0 - b.0, e.offset.1 + w.1 - b.1)
        })
        .collect();
    g.with_offsets(&offs).expect("offset gauge preserves validity")
}

/// Vertex gauge that zeroes the offsets on the spanning tree.
pub fn tree_gauge(g: &TorusGraph) -> (Vec<Vec2>, Vec<Vec2>) {
    let mut fb: Vec<Option<Vec2>> = vec![None; g.black_count()];
    let mut fw: Vec<Option<Vec2>> = vec![None; g.white_count()];
    fb[0] = Some((0, 0));
    // tree edges arrive in BFS order, so one endpoint is always fixed already
    for e in g.spanning_tree() {
        let ed = g.edge(e);
        match (fb[ed.black], fw[ed.white]) {
            (Some(b), None) => fw[ed.white] = Some((b.0 - ed.offset.0, b.1 - ed.offset.1)),
            (None, Some(w)) => fb[ed.black] = Some((w.0 + ed.offset.0, w.1 + ed.offset.1)),
            _ => unreachable!("tree edge with both or no endpoints placed"),
        }
    }
    (
        fb.into_iter().map(Option::unwrap).collect(),
        fw.into_iter().map(Option::unwrap).collect(),
    )
}
