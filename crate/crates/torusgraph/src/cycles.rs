use crate::graph::{Dart, TorusGraph, Vertex};
use crate::Vec2;
use std::collections::VecDeque;

/// Integer 1-chain: coefficient per edge, positive meaning black→white.
pub type CycleVec = Vec<i64>;

/// Total signed offset of a chain.
pub fn class_of(g: &TorusGraph, c: &[i64]) -> Vec2 {
    c.iter().zip(g.edges()).fold((0, 0), |s, (&k, e)| (s.0 + k * e.offset.0, s.1 + k * e.offset.1))
}

/// True when the chain has zero boundary.
pub fn is_cycle(g: &TorusGraph, c: &[i64]) -> bool {
    let mut db = vec![0i64; g.black_count()];
    let mut dw = vec![0i64; g.white_count()];
    for (e, &k) in g.edges().iter().zip(c) {
        db[e.black] += k;
        dw[e.white] -= k;
    }
    db.iter().chain(&dw).all(|&x| x == 0)
}

fn slot(g: &TorusGraph, v: Vertex) -> usize {
    match v {
        Vertex::Black(i) => i,
        Vertex::White(j) => g.black_count() + j,
    }
}

impl TorusGraph {
    pub fn edge_vector(&self, walk: &[Dart]) -> CycleVec {
        let mut v = vec![0; self.edge_count()];
        for d in walk {
            v[d.edge] += d.sign();
        }
        v
    }

    /// Breadth-first spanning tree from b0, scanning incident edges by id.
    pub fn spanning_tree(&self) -> Vec<usize> {
        let mut seen = vec![false; self.vertex_count()];
        seen[0] = true;
        let mut tree = Vec::new();
        let mut q = VecDeque::from([Vertex::Black(0)]);
        while let Some(v) = q.pop_front() {
            let mut inc = self.rotation(v).to_vec();
            inc.sort_unstable();
            for e in inc {
                let u = self.other_end(v, e);
                if !seen[slot(self, u)] {
                    seen[slot(self, u)] = true;
                    tree.push(e);
                    q.push_back(u);
                }
            }
        }
        tree
    }

    /// Tree path from b0 to every vertex, as a chain (indexed by vertex slot:
    /// blacks first, then whites).
    fn tree_paths(&self, tree: &[usize]) -> Vec<CycleVec> {
        let n = self.vertex_count();
        let mut adj: Vec<Vec<(usize, Vertex)>> = vec![Vec::new(); n];
        for &e in tree {
            let (b, w) = (Vertex::Black(self.edge(e).black), Vertex::White(self.edge(e).white));
            adj[slot(self, b)].push((e, w));
            adj[slot(self, w)].push((e, b));
        }
        let mut pot: Vec<Option<CycleVec>> = vec![None; n];
        pot[0] = Some(vec![0; self.edge_count()]);
        let mut stack = vec![Vertex::Black(0)];
        while let Some(x) = stack.pop() {
            for &(e, y) in &adj[slot(self, x)] {
                if pot[slot(self, y)].is_some() {
                    continue;
                }
                let mut v = pot[slot(self, x)].clone().unwrap();
                v[e] += if matches!(x, Vertex::Black(_)) { 1 } else { -1 };
                pot[slot(self, y)] = Some(v);
                stack.push(y);
            }
        }
        pot.into_iter().map(|p| p.expect("connected graph")).collect()
    }

    /// One cycle per non-tree edge e: e (black→white) closed by the tree path.
    pub fn fundamental_cycles(&self) -> Vec<(usize, CycleVec)> {
        let tree = self.spanning_tree();
        let pot = self.tree_paths(&tree);
        let mut in_tree = vec![false; self.edge_count()];
        for &e in &tree {
            in_tree[e] = true;
        }
        (0..self.edge_count())
            .filter(|&e| !in_tree[e])
            .map(|e| {
                let pb = &pot[slot(self, Vertex::Black(self.edge(e).black))];
                let pw = &pot[slot(self, Vertex::White(self.edge(e).white))];
                let mut v: CycleVec = pb.iter().zip(pw).map(|(a, b)| a - b).collect();
                v[e] += 1;
                (e, v)
            })
            .collect()
    }

    /// Integer combinations of fundamental cycles with classes exactly
    /// (1,0) and (0,1).
    pub fn basis_cycles(&self) -> [CycleVec; 2] {
        type Row = (Vec2, CycleVec);
        fn sub(a: &Row, b: &Row, k: i64) -> Row {
            (
                (a.0 .0 - k * b.0 .0, a.0 .1 - k * b.0 .1),
                a.1.iter().zip(&b.1).map(|(x, y)| x - k * y).collect(),
            )
        }
        fn neg(a: Row) -> Row {
            ((-a.0 .0, -a.0 .1), a.1.iter().map(|x| -x).collect())
        }
        // Euclid on one coordinate: leaves at most one row nonzero there.
        fn reduce(mut rows: Vec<Row>, coord: impl Fn(&Row) -> i64) -> (Row, Vec<Row>) {
            loop {
                let nz: Vec<usize> = (0..rows.len()).filter(|&i| coord(&rows[i]) != 0).collect();
                let p = *nz.iter().min_by_key(|&&i| coord(&rows[i]).abs()).expect("spanning classes");
                if nz.len() == 1 {
                    let pivot = rows.remove(p);
                    return (pivot, rows);
                }
                let pr = rows[p].clone();
                for &i in &nz {
                    if i != p {
                        let k = coord(&rows[i]).div_euclid(coord(&pr));
                        rows[i] = sub(&rows[i], &pr, k);
                    }
                }
            }
        }
        let rows: Vec<Row> = self
            .fundamental_cycles()
            .into_iter()
            .map(|(_, c)| (class_of(self, &c), c))
            .collect();
        let (mut p, rest) = reduce(rows, |r| r.0 .0);
        if p.0 .0 < 0 {
            p = neg(p);
        }
        let (mut q, _) = reduce(rest, |r| r.0 .1);
        if q.0 .1 < 0 {
            q = neg(q);
        }
        assert_eq!((p.0 .0, q.0), (1, (0, 1)), "cycle classes do not span Z^2");
        let k = p.0 .1;
        let p = sub(&p, &q, k);
        [p.1, q.1]
    }
}
