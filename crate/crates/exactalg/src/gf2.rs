#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Gf2Error {
    #[error("{rows} equations but {targets} targets")]
    DimensionMismatch { rows: usize, targets: usize },
    #[error("variable index {index} out of range for {vars} variables")]
    IndexOutOfRange { index: usize, vars: usize },
    /// `certificate` lists equation indices whose left sides cancel while
    /// their targets sum to 1.
    #[error("infeasible parity system (certificate rows {certificate:?})")]
    Infeasible { certificate: Vec<usize> },
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }
    fn xor(&mut self, o: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a ^= b;
        }
    }
    fn ones(&self) -> Vec<usize> {
        let mut v = Vec::new();
        for (w, &word) in self.0.iter().enumerate() {
            let mut x = word;
            while x != 0 {
                let t = x.trailing_zeros() as usize;
                v.push(w * 64 + t);
                x &= x - 1;
            }
        }
        v
    }
}

fn row_bits(row: &[usize], n: usize) -> Result<Bits, Gf2Error> {
    let mut b = Bits::new(n);
    for &i in row {
        if i >= n {
            return Err(Gf2Error::IndexOutOfRange { index: i, vars: n });
        }
        b.flip(i);
    }
    Ok(b)
}

/// Solves `Σ_{i ∈ rows[r]} x_i = targets[r]` over GF(2) for `n` variables.
/// A variable listed twice in one row cancels.
///
/// Gauss–Jordan with pivots taken at the lowest variable index; free
/// variables are set to 0, so the answer is deterministic.
pub fn gf2_solve(rows: &[Vec<usize>], targets: &[bool], n: usize) -> Result<Vec<bool>, Gf2Error> {
    if rows.len() != targets.len() {
        return Err(Gf2Error::DimensionMismatch {
            rows: rows.len(),
            targets: targets.len(),
        });
    }
    let m = rows.len();
    let mut a: Vec<(Bits, bool, Bits)> = Vec::with_capacity(m);
    for (r, (row, &t)) in rows.iter().zip(targets).enumerate() {
        let mut hist = Bits::new(m);
        hist.flip(r);
        a.push((row_bits(row, n)?, t, hist));
    }
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..n {
        let Some(p) = (top..m).find(|&r| a[r].0.get(c)) else {
            continue;
        };
        a.swap(top, p);
        let (pb, pt, ph) = a[top].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != top && row.0.get(c) {
                row.0.xor(&pb);
                row.1 ^= pt;
                row.2.xor(&ph);
            }
        }
        pivots.push(c);
        top += 1;
    }
    if let Some(bad) = a[top..].iter().find(|row| row.1) {
        return Err(Gf2Error::Infeasible {
            certificate: bad.2.ones(),
        });
    }
    let mut x = vec![false; n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = a[r].1;
    }
    Ok(x)
}

pub fn verify_solution(rows: &[Vec<usize>], targets: &[bool], x: &[bool]) -> bool {
    rows.len() == targets.len()
        && rows.iter().zip(targets).all(|(row, &t)| {
            row.iter().all(|&i| i < x.len()) && row.iter().fold(false, |s, &i| s ^ x[i]) == t
        })
}

/// True when the listed rows cancel to zero but their targets sum to 1.
pub fn verify_certificate(rows: &[Vec<usize>], targets: &[bool], n: usize, cert: &[usize]) -> bool {
    let mut acc = Bits::new(n);
    let mut t = false;
    for &r in cert {
        let Some(row) = rows.get(r) else { return false };
        let Ok(b) = row_bits(row, n) else { return false };
        acc.xor(&b);
        t ^= targets[r];
    }
    t && acc.ones().is_empty()
}
