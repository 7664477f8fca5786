use crate::fan::StackyFanData;
use exactalg::{int, rat, Rat};
use torusgraph::Vec2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FrontError {
    #[error("t must lie in [0, 1]")]
    ParameterOutOfRange,
}

/// The closed geodesic {x : ⟨generator, x⟩ ≡ level (mod 1)} on R²/Z², the
/// `n`-th copy for ray `ray`, co-oriented by `coorientation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Geodesic {
    pub ray: usize,
    pub n: i64,
    pub generator: Vec2,
    pub level: Rat,
    pub coorientation: Vec2,
}

/// A straight piece inside the unit square.
pub type Segment = ((Rat, Rat), (Rat, Rat));

/// m_ρ geodesics per ray at levels n·t/m_ρ. At t = 1 the copies are spread
/// evenly; at t = 0 they coincide.
pub fn front_arrangement(fan: &StackyFanData, t: &Rat) -> Result<Vec<Geodesic>, FrontError> {
    if *t < int(0) || *t > int(1) {
        return Err(FrontError::ParameterOutOfRange);
    }
    let mut out = Vec::new();
    for (k, r) in fan.rays.iter().enumerate() {
        for n in 0..r.multiplicity {
            out.push(Geodesic {
                ray: k,
                n,
                generator: r.generator,
                level: t * rat(n, r.multiplicity),
                coorientation: (-r.generator.0, -r.generator.1),
            });
        }
    }
    Ok(out)
}

impl Geodesic {
    /// Pieces of the geodesic inside [0,1]², one per value c ≡ level (mod 1)
    /// with the line ⟨g, x⟩ = c meeting the square in more than a point.
    /// Lines along the square's sides are reported once (on the lower/left side).
    pub fn segments(&self) -> Vec<Segment> {
        let (a, b) = self.generator;
        let lo = a.min(0) + b.min(0);
        let hi = a.max(0) + b.max(0);
        let mut out = Vec::new();
        for k in lo - 1..=hi {
            let c = &self.level + int(k);
            if c < int(lo) || c >= int(hi) {
                continue;
            }
            if let Some(s) = clip(a, b, &c) {
                out.push(s);
            }
        }
        out
    }
}

/// Intersection of a x + b y = c with the unit square, if it is a segment.
fn clip(a: i64, b: i64, c: &Rat) -> Option<Segment> {
    let (ra, rb) = (int(a), int(b));
    let unit = |v: &Rat| *v >= int(0) && *v <= int(1);
    let mut pts: Vec<(Rat, Rat)> = Vec::new();
    for side in [int(0), int(1)] {
        if b != 0 {
            let y = (c - &ra * &side) / &rb;
            if unit(&y) {
                pts.push((side.clone(), y));
            }
        }
        if a != 0 {
            let x = (c - &rb * &side) / &ra;
            if unit(&x) {
                pts.push((x, side.clone()));
            }
        }
    }
    pts.sort();
    pts.dedup();
    if pts.len() < 2 {
        return None;
    }
    Some((pts[0].clone(), pts[pts.len() - 1].clone()))
}
