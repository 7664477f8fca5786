use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `a/b` in lowest terms, or just `a` for integers.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `a`, `-a`, `a/b`. Rejects zero denominators and stray characters.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

/// Integer power, negative exponents allowed for nonzero bases.
pub fn pow_rat(r: &Rat, k: i64) -> Option<Rat> {
    if k < 0 {
        if r.is_zero() {
            return None;
        }
        return pow_rat(&r.recip(), -k);
    }
    let mut acc = Rat::one();
    let mut base = r.clone();
    let mut e = k as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    Some(acc)
}

/// Fixed-point decimal with `digits` fractional digits, rounding half away from zero.
pub fn to_decimal(r: &Rat, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r.abs() * Rat::from_integer(scale.clone());
    let two = BigInt::from(2);
    // floor(scaled + 1/2)
    let q = (scaled.numer() * &two + scaled.denom()).div_floor(&(scaled.denom() * &two));
    let (ip, fp) = q.div_rem(&scale);
    let sign = if r.is_negative() && !q.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{ip}");
    }
    let mut frac = fp.to_string();
    while frac.len() < digits {
        frac.insert(0, '0');
    }
    format!("{sign}{ip}.{frac}")
}
