use crate::cycles::class_of;
use crate::graph::{Color, TorusGraph, Vertex};

/// Colour-preserving map between two rotation systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub edges: Vec<usize>,
    pub black: Vec<usize>,
    pub white: Vec<usize>,
}

/// Finds an isomorphism of combinatorial maps sending `anchor` in `g` to one
/// of `targets` in `h` (all edges if `None`), that also preserves the classes
/// of all cycles. Vertex lifts may differ by a gauge.
pub fn find_isomorphism(
    g: &TorusGraph,
    h: &TorusGraph,
    anchor: usize,
    targets: Option<&[usize]>,
) -> Option<Isomorphism> {
    let m = g.edge_count();
    if m != h.edge_count() || g.black_count() != h.black_count() || g.white_count() != h.white_count() {
        return None;
    }
    let all: Vec<usize> = (0..m).collect();
    for &t in targets.unwrap_or(&all) {
        if let Some(iso) = extend(g, h, anchor, t) {
            let ok = g.fundamental_cycles().iter().all(|(_, c)| {
                let mut ch = vec![0; m];
                for (e, &k) in c.iter().enumerate() {
                    ch[iso.edges[e]] += k;
                }
                class_of(g, c) == class_of(h, &ch)
            });
            if ok {
                return Some(iso);
            }
        }
    }
    None
}

fn extend(g: &TorusGraph, h: &TorusGraph, anchor: usize, target: usize) -> Option<Isomorphism> {
    const NONE: usize = usize::MAX;
    let mut em = vec![NONE; g.edge_count()];
    let mut bm = vec![NONE; g.black_count()];
    let mut wm = vec![NONE; g.white_count()];
    em[anchor] = target;
    bm[g.edge(anchor).black] = h.edge(target).black;
    wm[g.edge(anchor).white] = h.edge(target).white;
    let mut stack = vec![Vertex::Black(g.edge(anchor).black), Vertex::White(g.edge(anchor).white)];
    while let Some(v) = stack.pop() {
        let vh = match v {
            Vertex::Black(i) => Vertex::Black(bm[i]),
            Vertex::White(j) => Vertex::White(wm[j]),
        };
        let (rg, rh) = (g.rotation(v), h.rotation(vh));
        if rg.len() != rh.len() {
            return None;
        }
        let a = rg.iter().position(|&e| em[e] != NONE)?;
        let b = rh.iter().position(|&e| e == em[rg[a]])?;
        let n = rg.len();
        for k in 0..n {
            let (eg, eh) = (rg[(a + k) % n], rh[(b + k) % n]);
            if em[eg] != NONE {
                if em[eg] != eh {
                    return None;
                }
                continue;
            }
            em[eg] = eh;
            for c in [Color::Black, Color::White] {
                let (x, y) = (g.endpoint(c, eg), h.endpoint(c, eh));
                let map = if c == Color::Black { &mut bm } else { &mut wm };
                if map[x.index()] == NONE {
                    map[x.index()] = y.index();
                    stack.push(x);
                } else if map[x.index()] != y.index() {
                    return None;
                }
            }
        }
    }
    if em.contains(&NONE) {
        return None;
    }
    Some(Isomorphism { edges: em, black: bm, white: wm })
}
