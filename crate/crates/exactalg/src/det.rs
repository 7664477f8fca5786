use crate::laurent::LaurentPoly2;
use crate::ring::{Coeff, Field};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DetError {
    #[error("matrix is not square ({rows} rows, row {row} has {cols} entries)")]
    NonSquare { rows: usize, row: usize, cols: usize },
    #[error("empty matrix")]
    Empty,
    #[error("fraction-free elimination hit a non-exact division")]
    InexactDivision,
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize, DetError> {
    let n = m.len();
    if n == 0 {
        return Err(DetError::Empty);
    }
    for (row, r) in m.iter().enumerate() {
        if r.len() != n {
            return Err(DetError::NonSquare { rows: n, row, cols: r.len() });
        }
    }
    Ok(n)
}

/// Fraction-free (Bareiss) determinant over the Laurent ring.
///
/// At step k the pivot is the nonzero entry of column k with the fewest
/// terms (lowest row on ties). Every division is exact in the ring, so no
/// rational functions appear.
pub fn ff_det<C: Field>(m: &[Vec<LaurentPoly2<C>>]) -> Result<LaurentPoly2<C>, DetError> {
    let n = check_square(m)?;
    let mut a: Vec<Vec<LaurentPoly2<C>>> = m.to_vec();
    let mut negate = false;
    let mut prev: Option<LaurentPoly2<C>> = None;
    for k in 0..n {
        let Some(p) = (k..n)
            .filter(|&r| !a[r][k].is_zero())
            .min_by_key(|&r| (a[r][k].len(), r))
        else {
            return Ok(LaurentPoly2::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = match &prev {
                    None => num,
                    Some(d) => num.div_exact(d).ok_or(DetError::InexactDivision)?,
                };
            }
        }
        prev = Some(a[k][k].clone());
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -&d } else { d })
}

/// Permutation expansion by dynamic programming over column subsets:
/// `O(n·2^n)` ring operations and no division, so it works over any
/// coefficient ring. `one` is the unit of the coefficient ring.
pub fn expansion_det<C: Coeff>(m: &[Vec<LaurentPoly2<C>>], one: &C) -> Result<LaurentPoly2<C>, DetError> {
    let n = check_square(m)?;
    if n > 24 {
        // 2^n table; callers use this only on small matrices
        panic!("expansion_det is limited to n <= 24");
    }
    let full = (1usize << n) - 1;
    let mut dp: Vec<LaurentPoly2<C>> = vec![LaurentPoly2::zero(); 1 << n];
    dp[0] = LaurentPoly2::monomial(one.clone(), 0, 0);
    for mask in 0..full {
        if dp[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        for (col, entry) in m[row].iter().enumerate() {
            if mask >> col & 1 == 1 || entry.is_zero() {
                continue;
            }
            // columns already used that lie to the right of `col` are inversions
            let inv = (mask >> col).count_ones();
            let t = &dp[mask] * entry;
            let next = mask | 1 << col;
            dp[next] = if inv % 2 == 0 { &dp[next] + &t } else { &dp[next] - &t };
        }
    }
    Ok(dp[full].clone())
}
