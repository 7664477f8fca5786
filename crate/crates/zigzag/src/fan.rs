use exactalg::Polygon;
use std::cmp::Ordering;
use torusgraph::Vec2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolygonError {
    #[error("no classes given")]
    Empty,
    #[error("NonPrimitiveClass ({}, {})", .0 .0, .0 .1)]
    NonPrimitiveClass(Vec2),
    #[error("NonClosing: classes sum to ({}, {})", .0 .0, .0 .1)]
    NonClosing(Vec2),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FanError {
    #[error("DegeneratePolygon: {0} vertices")]
    DegeneratePolygon(usize),
}

/// A ray of the fan: primitive inward normal of a polygon edge and the
/// lattice length of that edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ray {
    pub generator: Vec2,
    pub multiplicity: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StackyFanData {
    pub rays: Vec<Ray>,
    pub polygon: Polygon,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exact `atan2` order: angles in (−π, π].
fn angle_cmp(a: Vec2, b: Vec2) -> Ordering {
    let half = |v: Vec2| (v.1 > 0 || (v.1 == 0 && v.0 < 0)) as u8;
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&(a.0 * b.1 - a.1 * b.0)))
}

/// Chains the classes by angle from the origin and translates so the
/// lexicographically least vertex is (0,0).
pub fn newton_polygon(classes: &[Vec2]) -> Result<Polygon, PolygonError> {
    if classes.is_empty() {
        return Err(PolygonError::Empty);
    }
    if let Some(&c) = classes.iter().find(|c| gcd(c.0, c.1) != 1) {
        return Err(PolygonError::NonPrimitiveClass(c));
    }
    let sum = classes.iter().fold((0, 0), |s, c| (s.0 + c.0, s.1 + c.1));
    if sum != (0, 0) {
        return Err(PolygonError::NonClosing(sum));
    }
    let mut sorted = classes.to_vec();
    sorted.sort_by(|&a, &b| angle_cmp(a, b));
    let mut pts = vec![(0, 0)];
    for c in &sorted {
        let p = *pts.last().unwrap();
        pts.push((p.0 + c.0, p.1 + c.1));
    }
    Ok(Polygon::hull(pts).expect("nonempty").canonical())
}

/// Inward normal fan with multiplicities. For a ccw edge vector v the inward
/// normal is v turned by +90°, i.e. (−v_y, v_x).
pub fn stacky_fan(p: &Polygon) -> Result<StackyFanData, FanError> {
    let n = p.vertices().len();
    if n < 3 {
        return Err(FanError::DegeneratePolygon(n));
    }
    let rays = p
        .edges()
        .into_iter()
        .map(|v| {
            let m = gcd(v.0, v.1);
            Ray { generator: (-v.1 / m, v.0 / m), multiplicity: m }
        })
        .collect();
    Ok(StackyFanData { rays, polygon: p.clone() })
}

impl StackyFanData {
    /// Σ m·(edge direction dual to the ray); zero for a closed polygon.
    pub fn closure(&self) -> Vec2 {
        self.rays.iter().fold((0, 0), |s, r| {
            (s.0 + r.multiplicity * r.generator.1, s.1 - r.multiplicity * r.generator.0)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atan2_order() {
        let mut v = vec![(-1, 0), (0, 1), (1, 0), (0, -1), (-1, -1), (1, 1)];
        v.sort_by(|&a, &b| angle_cmp(a, b));
        assert_eq!(v, vec![(-1, -1), (0, -1), (1, 0), (1, 1), (0, 1), (-1, 0)]);
    }

    #[test]
    fn hexagonal_triangle() {
        let p = newton_polygon(&[(1, 0), (0, -1), (-1, 1)]).unwrap();
        assert_eq!(p.vertices(), &[(0, 0), (1, 0), (0, 1)]);
        let f = stacky_fan(&p).unwrap();
        let gens: Vec<Vec2> = f.rays.iter().map(|r| r.generator).collect();
        assert_eq!(gens, vec![(0, 1), (-1, -1), (1, 0)]);
        assert!(f.rays.iter().all(|r| r.multiplicity == 1));
    }

    #[test]
    fn doubled_edge() {
        let p = newton_polygon(&[(0, 1), (0, 1), (-1, 0), (1, -2)]).unwrap();
        assert!(p.congruent_by_translation(&Polygon::hull([(0, 0), (1, 0), (1, -2)]).unwrap()));
        let f = stacky_fan(&p).unwrap();
        assert_eq!(f.rays.iter().filter(|r| r.multiplicity == 2).count(), 1);
        assert_eq!(f.closure(), (0, 0));
    }

    #[test]
    fn square() {
        let p = newton_polygon(&[(1, 0), (0, 1), (-1, 0), (0, -1)]).unwrap();
        assert_eq!(p.vertices(), &[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(stacky_fan(&p).unwrap().rays.len(), 4);
    }

    #[test]
    fn errors() {
        assert_eq!(newton_polygon(&[(2, 0), (-2, 0)]), Err(PolygonError::NonPrimitiveClass((2, 0))));
        assert_eq!(newton_polygon(&[(1, 0), (0, 1)]), Err(PolygonError::NonClosing((1, 1))));
        let seg = Polygon::hull([(0, 0), (1, 0)]).unwrap();
        assert_eq!(stacky_fan(&seg), Err(FanError::DegeneratePolygon(2)));
    }
}
