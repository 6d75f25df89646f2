//! Exact rational linear algebra on small dense matrices.
//!
//! Everything here works over `Ratio<i64>`. The matrices involved are at most
//! rank 8 with entries bounded by a few units, so overflow is not a concern.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

/// Solver for `M x = v` where the columns of `M` are a fixed list of vectors.
///
/// The reduction is done once; each solve then costs one matrix-vector
/// product, which matters when testing every root of a system for
/// membership in a span.
#[derive(Debug, Clone)]
pub struct SpanSolver {
    dim: usize,
    ncols: usize,
    /// Row operations taking `M` to its reduced echelon form.
    transform: Vec<Vec<Q>>,
    /// Reduced echelon form of `M`.
    reduced: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl SpanSolver {
    /// `columns` are vectors of length `dim`.
    pub fn new(columns: &[Vec<i64>], dim: usize) -> Self {
        let ncols = columns.len();
        let mut m: Vec<Vec<Q>> = (0..dim)
            .map(|r| columns.iter().map(|c| q(c[r])).collect())
            .collect();
        let mut t: Vec<Vec<Q>> = (0..dim)
            .map(|r| (0..dim).map(|c| if r == c { Q::one() } else { Q::zero() }).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..ncols {
            if row == dim {
                break;
            }
            let Some(p) = (row..dim).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            t.swap(row, p);
            let inv = m[row][col].recip();
            for x in m[row].iter_mut() {
                *x *= inv;
            }
            for x in t[row].iter_mut() {
                *x *= inv;
            }
            for r in 0..dim {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col];
                    for c in 0..ncols {
                        let d = m[row][c] * f;
                        m[r][c] -= d;
                    }
                    for c in 0..dim {
                        let d = t[row][c] * f;
                        t[r][c] -= d;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Self {
            dim,
            ncols,
            transform: t,
            reduced: m,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_independent(&self) -> bool {
        self.rank() == self.ncols
    }

    /// A nonzero integer relation among the columns, if they are dependent.
    pub fn relation(&self) -> Option<Vec<i64>> {
        let free = (0..self.ncols).find(|c| !self.pivots.contains(c))?;
        let mut x = vec![Q::zero(); self.ncols];
        x[free] = Q::one();
        for (r, &pc) in self.pivots.iter().enumerate() {
            x[pc] = -self.reduced[r][free];
        }
        Some(clear_denominators(&x))
    }

    /// Rational coordinates of `v` in terms of the columns, if `v` lies in
    /// their span. Free variables are set to zero.
    pub fn solve(&self, v: &[Q]) -> Option<Vec<Q>> {
        let u: Vec<Q> = self
            .transform
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect();
        if u[self.rank()..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut x = vec![Q::zero(); self.ncols];
        for (r, &pc) in self.pivots.iter().enumerate() {
            x[pc] = u[r];
        }
        Some(x)
    }

    pub fn solve_int(&self, v: &[i64]) -> Option<Vec<Q>> {
        debug_assert_eq!(v.len(), self.dim);
        let v: Vec<Q> = v.iter().map(|&x| q(x)).collect();
        self.solve(&v)
    }

    /// Integer coordinates of `v`, if it lies in the integer span.
    pub fn solve_integral(&self, v: &[i64]) -> Option<Vec<i64>> {
        let x = self.solve_int(v)?;
        x.iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

/// Scale a rational vector to a primitive integer vector with the same
/// direction.
pub fn clear_denominators(x: &[Q]) -> Vec<i64> {
    let l = x.iter().fold(1i64, |acc, c| acc.lcm(c.denom()));
    let ints: Vec<i64> = x.iter().map(|c| (c * q(l)).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &c| acc.gcd(&c));
    if g > 1 {
        ints.into_iter().map(|c| c / g).collect()
    } else {
        ints
    }
}

/// Positive definiteness of a symmetric integer matrix via Gaussian
/// elimination without pivoting: every pivot must be strictly positive.
pub fn is_positive_definite(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        for r in (k + 1)..n {
            let f = a[r][k] / a[k][k];
            for c in k..n {
                let d = a[k][c] * f;
                a[r][c] -= d;
            }
        }
    }
    true
}

pub fn mat_vec(m: &[Vec<i64>], v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(&a, b)| b * a).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_in_span() {
        let s = SpanSolver::new(&[vec![1, 1, 0], vec![0, 1, 1]], 3);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.solve_integral(&[2, 3, 1]), Some(vec![2, 1]));
        assert_eq!(s.solve_integral(&[1, 0, 0]), None);
    }

    #[test]
    fn non_integral_solution_rejected() {
        let s = SpanSolver::new(&[vec![2, 0], vec![0, 1]], 2);
        assert!(s.solve_int(&[1, 0]).is_some());
        assert_eq!(s.solve_integral(&[1, 0]), None);
    }

    #[test]
    fn relation_for_dependent_columns() {
        let s = SpanSolver::new(&[vec![1, 0], vec![0, 1], vec![1, 1]], 2);
        let rel = s.relation().unwrap();
        let combo: Vec<i64> = (0..2)
            .map(|r| rel[0] * [1, 0][r] + rel[1] * [0, 1][r] + rel[2] * [1, 1][r])
            .collect();
        assert_eq!(combo, vec![0, 0]);
        assert!(rel.iter().any(|&c| c != 0));
    }

    #[test]
    fn definiteness() {
        assert!(is_positive_definite(&[vec![2, -1], vec![-1, 2]]));
        assert!(!is_positive_definite(&[vec![2, -2], vec![-2, 2]]));
    }
}
