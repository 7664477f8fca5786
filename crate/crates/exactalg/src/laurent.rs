use crate::polygon::{Polygon, Pt};
use crate::rat::{fmt_rat, pow_rat, Rat};
use crate::ring::{Coeff, Field};
use num::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("the zero polynomial has no Newton polygon")]
pub struct ZeroPolynomial;

/// Sparse polynomial in x^±1, y^±1. Zero coefficients are never stored and
/// terms iterate in lexicographic order of the exponent pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly2<C = Rat> {
    terms: BTreeMap<Pt, C>,
}

impl<C> Default for LaurentPoly2<C> {
    fn default() -> Self {
        LaurentPoly2 {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Coeff> LaurentPoly2<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: C, i: i64, j: i64) -> Self {
        let mut p = Self::zero();
        p.add_term((i, j), c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Pt, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<Pt, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Pt) -> Option<&C> {
        self.terms.get(&e)
    }

    /// Adds `c·x^i y^j` in place, pruning a coefficient that cancels.
    pub fn add_term(&mut self, e: Pt, c: C) {
        if c.is_zero_coeff() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.plus(&c);
                if s.is_zero_coeff() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn support(&self) -> BTreeSet<Pt> {
        self.terms.keys().copied().collect()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, v)| (*e, v.times(c))))
    }

    pub fn shift(&self, di: i64, dj: i64) -> Self {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + di, j + dj), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum exponent over the support.
    pub fn min_exponents(&self) -> Option<Pt> {
        let i = self.terms.keys().map(|e| e.0).min()?;
        let j = self.terms.keys().map(|e| e.1).min()?;
        Some((i, j))
    }

    pub fn lex_least(&self) -> Option<(Pt, &C)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    pub fn lex_greatest(&self) -> Option<(Pt, &C)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LaurentPoly2<D> {
        LaurentPoly2::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Convex hull of the support.
    pub fn newton(&self) -> Result<Polygon, ZeroPolynomial> {
        if self.is_zero() {
            return Err(ZeroPolynomial);
        }
        Ok(Polygon::hull(self.terms.keys().copied()).expect("nonempty support"))
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, if sign { c.clone() } else { c.negated() });
        }
        out
    }

    fn product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term((a.0 + b.0, a.1 + b.1), ca.times(cb));
            }
        }
        out
    }
}

impl<C: Field> LaurentPoly2<C> {
    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    ///
    /// Long division on lex-leading terms. Because Laurent monomials form a
    /// group, a quotient term below lexmin(self) − lexmin(d) proves
    /// non-divisibility, which bounds the loop.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dl, dc) = d.lex_greatest()?;
        let dc_inv = dc.inverse()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let floor = {
            let a = self.lex_least().unwrap().0;
            let b = d.lex_least().unwrap().0;
            (a.0 - b.0, a.1 - b.1)
        };
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some((rl, rc)) = rem.lex_greatest() {
            let e = (rl.0 - dl.0, rl.1 - dl.1);
            if e < floor {
                return None;
            }
            let t = Self::monomial(rc.times(&dc_inv), e.0, e.1);
            rem = rem.combine(&t.product(d), false);
            q = q.combine(&t, true);
        }
        Some(q)
    }

    /// Shifts so that min i = min j = 0, then divides by the coefficient at
    /// the lexicographically least support point.
    pub fn normalized(&self) -> Option<Self> {
        let (mi, mj) = self.min_exponents()?;
        let p = self.shift(-mi, -mj);
        let lead = p.lex_least()?.1.inverse()?;
        Some(p.scale(&lead))
    }
}

impl LaurentPoly2<Rat> {
    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rat::one(), 0, 1)
    }

    /// Evaluates at a point with nonzero coordinates (negative powers allowed).
    pub fn eval(&self, x: &Rat, y: &Rat) -> Option<Rat> {
        let mut s = Rat::zero();
        for (&(i, j), c) in &self.terms {
            s += c * pow_rat(x, i)? * pow_rat(y, j)?;
        }
        Some(s)
    }
}

impl fmt::Display for LaurentPoly2<Rat> {
    /// Canonical rendering: lexicographic term order, reduced fractions,
    /// `x^i*y^j` with exponent 0 omitted and exponent 1 unmarked.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (&(i, j), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut parts = Vec::new();
            for (name, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            if parts.is_empty() {
                f.write_str(&fmt_rat(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", fmt_rat(&mag))?;
                }
                f.write_str(&parts.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> Add for &LaurentPoly2<C> {
    type Output = LaurentPoly2<C>;
    fn add(self, rhs: Self) -> LaurentPoly2<C> {
        self.combine(rhs, true)
    }
}

impl<C: Coeff> Sub for &LaurentPoly2<C> {
    type Output = LaurentPoly2<C>;
    fn sub(self, rhs: Self) -> LaurentPoly2<C> {
        self.combine(rhs, false)
    }
}

impl<C: Coeff> Mul for &LaurentPoly2<C> {
    type Output = LaurentPoly2<C>;
    fn mul(self, rhs: Self) -> LaurentPoly2<C> {
        self.product(rhs)
    }
}

impl<C: Coeff> Neg for &LaurentPoly2<C> {
    type Output = LaurentPoly2<C>;
    fn neg(self) -> LaurentPoly2<C> {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(e, c)| (*e, c.negated())).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for LaurentPoly2<C> {
            type Output = LaurentPoly2<C>;
            fn $m(self, rhs: Self) -> LaurentPoly2<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn lp_arith<C: Coeff>(a: &LaurentPoly2<C>, b: &LaurentPoly2<C>, op: ArithOp) -> LaurentPoly2<C> {
    match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    fn p(terms: &[((i64, i64), i64)]) -> LaurentPoly2 {
        LaurentPoly2::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn difference_of_squares() {
        let a = p(&[((0, 0), 1), ((1, 0), 1)]);
        let b = p(&[((0, 0), 1), ((1, 0), -1)]);
        assert_eq!(lp_arith(&a, &b, ArithOp::Mul), p(&[((0, 0), 1), ((2, 0), -1)]));
    }

    #[test]
    fn zero_absorbs() {
        let a = p(&[((3, -1), 4), ((0, 2), 1)]);
        assert!((&a * &LaurentPoly2::zero()).is_zero());
    }

    #[test]
    fn inverse_powers_cancel() {
        let a = p(&[((-1, 0), 1), ((0, 1), 1)]);
        let b = p(&[((-1, 0), 1), ((0, 1), -1)]);
        let s = &a + &b;
        assert_eq!(s, p(&[((-1, 0), 2)]));
        let pts = [(rat(1, 2), rat(3, 5)), (rat(-7, 3), rat(2, 1)), (rat(5, 1), rat(-1, 9))];
        for (x, y) in pts {
            let lhs = s.eval(&x, &y).unwrap();
            assert_eq!(lhs, int(2) / &x);
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[((0, 0), 1), ((1, 0), 1), ((0, 1), 1)]).to_string(), "1 + y + x");
        let q = LaurentPoly2::from_terms([((0, 0), int(1)), ((1, -1), rat(-3, 2))]);
        assert_eq!(q.to_string(), "1 - 3/2*x*y^-1");
        assert_eq!(p(&[((1, 1), -1), ((2, 0), 1)]).to_string(), "-x*y + x^2");
        assert_eq!(LaurentPoly2::<Rat>::zero().to_string(), "0");
    }

    #[test]
    fn newton_polygons() {
        let tri = p(&[((0, 0), 1), ((1, 0), 1), ((0, 1), 1)]).newton().unwrap();
        assert_eq!(tri.vertices(), &[(0, 0), (1, 0), (0, 1)]);
        let sq = p(&[((0, 0), 1), ((1, 0), 1), ((0, 1), 1), ((1, 1), -1)]).newton().unwrap();
        assert_eq!(sq.vertices(), &[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let mono = p(&[((3, -2), 1)]).newton().unwrap();
        assert_eq!(mono.vertices(), &[(3, -2)]);
        assert_eq!(LaurentPoly2::<Rat>::zero().newton(), Err(ZeroPolynomial));
    }

    #[test]
    fn exact_division() {
        let a = p(&[((0, 0), 1), ((1, 0), 1), ((-1, 2), 3)]);
        let b = p(&[((2, -1), 2), ((0, 1), -1), ((1, 1), 5)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        let c = p(&[((0, 0), 1), ((1, 0), 1)]);
        assert!(p(&[((0, 0), 1), ((0, 1), 1)]).div_exact(&c).is_none());
    }

    #[test]
    fn normalization() {
        let f = p(&[((1, 1), -1), ((2, 1), 1), ((1, 2), 1), ((2, 2), 1)]);
        assert_eq!(f.normalized().unwrap().to_string(), "1 - y - x - x*y");
    }
}
