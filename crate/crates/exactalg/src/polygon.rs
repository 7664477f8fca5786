use std::collections::BTreeSet;

/// Lattice point.
pub type Pt = (i64, i64);

fn cross(o: Pt, a: Pt, b: Pt) -> i128 {
    (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Convex lattice polygon: vertices counterclockwise, lexicographically least
/// first, no collinear middle vertices. Segments and points are allowed as
/// degenerate cases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polygon {
    verts: Vec<Pt>,
}

impl Polygon {
    /// Andrew's monotone chain. `None` for an empty input.
    pub fn hull<I: IntoIterator<Item = Pt>>(pts: I) -> Option<Polygon> {
        let pts: Vec<Pt> = pts.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if pts.is_empty() {
            return None;
        }
        if pts.len() <= 2 {
            return Some(Polygon { verts: pts });
        }
        let mut lower: Vec<Pt> = Vec::new();
        for &p in &pts {
            while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<Pt> = Vec::new();
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        Some(Polygon { verts: lower })
    }

    pub fn vertices(&self) -> &[Pt] {
        &self.verts
    }

    pub fn translate(&self, d: Pt) -> Polygon {
        Polygon {
            verts: self.verts.iter().map(|p| (p.0 + d.0, p.1 + d.1)).collect(),
        }
    }

    /// Translate so the first (lexicographically least) vertex is the origin.
    pub fn canonical(&self) -> Polygon {
        let v = self.verts[0];
        self.translate((-v.0, -v.1))
    }

    /// Equal up to a lattice translation.
    pub fn congruent_by_translation(&self, other: &Polygon) -> bool {
        self.canonical() == other.canonical()
    }

    /// Edge vectors in ccw order starting at the first vertex.
    pub fn edges(&self) -> Vec<Pt> {
        let n = self.verts.len();
        if n < 2 {
            return Vec::new();
        }
        (0..n)
            .map(|k| {
                let a = self.verts[k];
                let b = self.verts[(k + 1) % n];
                (b.0 - a.0, b.1 - a.1)
            })
            .collect()
    }

    /// Twice the signed area (shoelace).
    pub fn double_area(&self) -> i128 {
        let n = self.verts.len();
        (0..n)
            .map(|k| {
                let a = self.verts[k];
                let b = self.verts[(k + 1) % n];
                a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
            })
            .sum()
    }

    /// Number of lattice points on the boundary.
    pub fn boundary_count(&self) -> i64 {
        match self.verts.len() {
            1 => 1,
            2 => {
                let e = self.edges()[0];
                gcd(e.0, e.1) + 1
            }
            _ => self.edges().iter().map(|e| gcd(e.0, e.1)).sum(),
        }
    }

    fn bbox(&self) -> (Pt, Pt) {
        let xs = self.verts.iter().map(|p| p.0);
        let ys = self.verts.iter().map(|p| p.1);
        (
            (xs.clone().min().unwrap(), ys.clone().min().unwrap()),
            (xs.max().unwrap(), ys.max().unwrap()),
        )
    }

    /// -1 outside, 0 on the boundary, 1 strictly inside.
    pub fn locate(&self, p: Pt) -> i8 {
        let n = self.verts.len();
        if n < 3 {
            let on = match n {
                1 => p == self.verts[0],
                _ => {
                    let (a, b) = (self.verts[0], self.verts[1]);
                    cross(a, b, p) == 0
                        && p.0 >= a.0.min(b.0)
                        && p.0 <= a.0.max(b.0)
                        && p.1 >= a.1.min(b.1)
                        && p.1 <= a.1.max(b.1)
                }
            };
            return if on { 0 } else { -1 };
        }
        let mut inside = true;
        for k in 0..n {
            let c = cross(self.verts[k], self.verts[(k + 1) % n], p);
            if c < 0 {
                return -1;
            }
            if c == 0 {
                inside = false;
            }
        }
        if inside {
            1
        } else {
            0
        }
    }

    fn scan(&self, want: i8) -> Vec<Pt> {
        let (lo, hi) = self.bbox();
        let mut out = Vec::new();
        for i in lo.0..=hi.0 {
            for j in lo.1..=hi.1 {
                if self.locate((i, j)) == want {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Interior lattice points, lexicographic order.
    pub fn interior_points(&self) -> Vec<Pt> {
        self.scan(1)
    }

    /// Boundary lattice points, lexicographic order.
    pub fn boundary_points(&self) -> Vec<Pt> {
        self.scan(0)
    }
}
