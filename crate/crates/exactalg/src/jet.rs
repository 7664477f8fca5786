use crate::rat::Rat;
use crate::ring::{Coeff, Field};
use num::{One, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// First-order jet: a value plus its gradient with respect to a fixed list of
/// variables. Missing trailing partials count as zero, so constants carry an
/// empty gradient.
#[derive(Clone, Debug)]
pub struct Jet {
    pub value: Rat,
    pub partials: Vec<Rat>,
}

impl PartialEq for Jet {
    fn eq(&self, o: &Self) -> bool {
        let n = self.partials.len().max(o.partials.len());
        self.value == o.value && (0..n).all(|i| self.d(i) == o.d(i))
    }
}

impl Jet {
    pub fn constant(v: Rat) -> Jet {
        Jet { value: v, partials: Vec::new() }
    }

    /// The `index`-th of `n` independent variables, evaluated at `v`.
    pub fn variable(v: Rat, index: usize, n: usize) -> Jet {
        let mut partials = vec![Rat::zero(); n];
        partials[index] = Rat::one();
        Jet { value: v, partials }
    }

    /// Partial derivative with respect to variable `i`.
    pub fn d(&self, i: usize) -> Rat {
        self.partials.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    fn zip(&self, o: &Jet, f: impl Fn(Rat, Rat) -> Rat) -> Vec<Rat> {
        let n = self.partials.len().max(o.partials.len());
        (0..n).map(|i| f(self.d(i), o.d(i))).collect()
    }

    fn scaled(&self, c: &Rat) -> Vec<Rat> {
        self.partials.iter().map(|p| p * c).collect()
    }

    pub fn recip(&self) -> Option<Jet> {
        if self.value.is_zero() {
            return None;
        }
        let inv = self.value.recip();
        let k = -(&inv * &inv);
        Some(Jet { value: inv, partials: self.scaled(&k) })
    }

    /// Integer power; negative exponents need a nonzero value.
    pub fn powi(&self, k: i64) -> Option<Jet> {
        if k < 0 {
            return self.recip()?.powi(-k);
        }
        if k == 0 {
            return Some(Jet::constant(Rat::one()));
        }
        let vk1 = crate::rat::pow_rat(&self.value, k - 1)?;
        let value = &vk1 * &self.value;
        let c = vk1 * Rat::from_integer(k.into());
        Some(Jet { value, partials: self.scaled(&c) })
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, o: &Jet) -> Jet {
        Jet { value: &self.value + &o.value, partials: self.zip(o, |a, b| a + b) }
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, o: &Jet) -> Jet {
        Jet { value: &self.value - &o.value, partials: self.zip(o, |a, b| a - b) }
    }
}

// product rule
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, o: &Jet) -> Jet {
        let (u, v) = (&self.value, &o.value);
        Jet { value: u * v, partials: self.zip(o, |a, b| a * v + u * b) }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for &Jet {
    type Output = Jet;
    /// Panics on a zero-valued divisor.
    fn div(self, o: &Jet) -> Jet {
        self * &o.recip().expect("division by a zero-valued jet")
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet { value: -&self.value, partials: self.partials.iter().map(|p| -p).collect() }
    }
}

impl Coeff for Jet {
    fn zero_like(&self) -> Self {
        Jet::constant(Rat::zero())
    }
    fn one_like(&self) -> Self {
        Jet::constant(Rat::one())
    }
    fn is_zero_coeff(&self) -> bool {
        self.value.is_zero() && self.partials.iter().all(Zero::is_zero)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_int_like(&self, n: i64) -> Self {
        Jet::constant(crate::rat::int(n))
    }
}

impl Field for Jet {
    fn inverse(&self) -> Option<Self> {
        self.recip()
    }
}
