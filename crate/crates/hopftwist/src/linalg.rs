//! Exact linear algebra over the rational-function field and fraction-free
//! determinants over the polynomial ring.

use num_traits::One;

use crate::arith::{RatExpr, Rational, SparsePoly};

/// Dense matrix of field elements.
pub type Matrix = Vec<Vec<RatExpr>>;

/// Solves `M x = rhs` over the fraction field.  Returns `None` when `M` is
/// singular.
pub fn solve(m: &Matrix, rhs: &[RatExpr]) -> Option<Vec<RatExpr>> {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n) && rhs.len() == n);
    let mut a: Vec<Vec<RatExpr>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].inv();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in col..=n {
                let delta = &factor * &a[col][c];
                a[r][c] = &a[r][c] - &delta;
            }
        }
    }
    let mut x = Vec::with_capacity(n);
    for r in 0..n {
        x.push(&a[r][n] / &a[r][r]);
    }
    Some(x)
}

/// Kernel basis of an m x n matrix over the fraction field, with denominators
/// cleared; pivots are chosen as the first nonzero entry of lowest polynomial
/// degree in each column.
pub fn nullspace(m: &Matrix, ncols: usize) -> Vec<Vec<RatExpr>> {
    let nrows = m.len();
    let mut a = m.to_vec();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut used_rows = vec![false; nrows];
    for col in 0..ncols {
        // lowest-degree nonzero pivot for determinism and small intermediate values
        let mut best: Option<(usize, u32)> = None;
        for r in 0..nrows {
            if used_rows[r] || a[r][col].is_zero() {
                continue;
            }
            let deg = a[r][col].num().degree() + a[r][col].den().degree();
            if best.map(|(_, d)| deg < d).unwrap_or(true) {
                best = Some((r, deg));
            }
        }
        let Some((prow, _)) = best else { continue };
        used_rows[prow] = true;
        pivot_of_col[col] = Some(prow);
        let inv = a[prow][col].inv();
        for r in 0..nrows {
            if r == prow || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in 0..ncols {
                let delta = &factor * &a[prow][c];
                a[r][c] = &a[r][c] - &delta;
            }
        }
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![RatExpr::zero(); ncols];
        v[free] = RatExpr::one();
        for (col, pr) in pivot_of_col.iter().enumerate() {
            if let Some(r) = pr {
                if !a[*r][free].is_zero() {
                    v[col] = -&(&a[*r][free] / &a[*r][col]);
                }
            }
        }
        basis.push(clear_denominators(v));
    }
    basis
}

/// Multiplies through by the lcm-ish product of denominators so kernel vectors
/// are polynomial, then strips rational content for readability.
fn clear_denominators(v: Vec<RatExpr>) -> Vec<RatExpr> {
    let mut common = SparsePoly::one();
    for e in &v {
        let d = e.den();
        if common.div_exact(d).is_none() {
            common = &common * d;
        }
    }
    let common = RatExpr::from_poly(common);
    let mut out: Vec<RatExpr> = v.iter().map(|e| e * &common).collect();
    // normalize so the first nonzero coordinate has leading coefficient 1
    if let Some(first) = out.iter().find(|e| !e.is_zero()) {
        if let Some((_, lc)) = first.num().leading_term() {
            let inv = RatExpr::constant(Rational::one() / lc.clone());
            out = out.iter().map(|e| e * &inv).collect();
        }
    }
    out
}

/// Row rank over the fraction field.
pub fn rank(m: &[Vec<RatExpr>]) -> usize {
    let mut a = m.to_vec();
    let nrows = a.len();
    let ncols = a.first().map(Vec::len).unwrap_or(0);
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, pivot);
        let inv = a[r][col].inv();
        for i in r + 1..nrows {
            if a[i][col].is_zero() {
                continue;
            }
            let f = &a[i][col] * &inv;
            for c in col..ncols {
                let delta = &f * &a[r][c];
                a[i][c] = &a[i][c] - &delta;
            }
        }
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

/// True when `v` lies in the span of the given vectors.
pub fn in_span(basis: &[Vec<RatExpr>], v: &[RatExpr]) -> bool {
    if v.iter().all(RatExpr::is_zero) {
        return true;
    }
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    rank(basis) == rank(&with)
}

/// Fraction-free Bareiss determinant over the polynomial ring.
pub fn det_bareiss(m: &[Vec<SparsePoly>]) -> SparsePoly {
    let n = m.len();
    if n == 0 {
        return SparsePoly::one();
    }
    let mut a = m.to_vec();
    let mut sign = Rational::one();
    let mut prev = SparsePoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return SparsePoly::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        for row in a.iter_mut().take(n).skip(k + 1) {
            row[k] = SparsePoly::zero();
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].scale(&sign)
}

/// Determinant over the fraction field (Gaussian elimination).
pub fn det_field(m: &Matrix) -> RatExpr {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = RatExpr::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return RatExpr::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -&det;
        }
        det = &det * &a[col][col];
        let inv = a[col][col].inv();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] = &a[r][c] - &delta;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn c(n: i64) -> RatExpr {
        RatExpr::constant(rat(n))
    }

    #[test]
    fn solve_2x2() {
        let m = vec![vec![c(1), c(2)], vec![c(3), c(4)]];
        let x = solve(&m, &[c(5), c(6)]).unwrap();
        assert_eq!(x[0], c(-4));
        assert_eq!(x[1], &c(9) / &c(2));
        let singular = vec![vec![c(1), c(2)], vec![c(2), c(4)]];
        assert!(solve(&singular, &[c(0), c(0)]).is_none());
    }

    #[test]
    fn nullspace_rank_deficient() {
        // rows: [1, 1, 0], [0, 0, 1] -> kernel spanned by (1, -1, 0)
        let m = vec![vec![c(1), c(1), c(0)], vec![c(0), c(0), c(1)]];
        let ker = nullspace(&m, 3);
        assert_eq!(ker.len(), 1);
        let v = &ker[0];
        assert_eq!(&v[0] + &v[1], RatExpr::zero());
        assert!(v[2].is_zero());
    }

    #[test]
    fn bareiss_matches_field_det() {
        let x = SparsePoly::var(0);
        let y = SparsePoly::var(1);
        let m = vec![
            vec![x.clone(), y.clone()],
            vec![y.clone(), x.clone()],
        ];
        let d = det_bareiss(&m);
        let expect = &(&x * &x) - &(&y * &y);
        assert_eq!(d, expect);
        let mf: Matrix = m
            .iter()
            .map(|r| r.iter().map(|p| RatExpr::from_poly(p.clone())).collect())
            .collect();
        assert_eq!(det_field(&mf), RatExpr::from_poly(expect));
    }
}
