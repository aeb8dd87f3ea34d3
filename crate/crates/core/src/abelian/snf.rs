use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use crate::{Error, Result};

/// A Smith decomposition `u * a * v = d` with `u`, `v` unimodular and `d`
/// diagonal satisfying the divisibility chain `d[0] | d[1] | ...`, all
/// diagonal entries nonnegative.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// The nonzero diagonal entries, in chain order.
    pub fn divisors(&self) -> Vec<BigInt> {
        let n = core::cmp::min(self.d.rows(), self.d.cols());
        (0..n)
            .map(|i| self.d.get(i, i).clone())
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.divisors().len()
    }
}

/// Position of the entry with smallest nonzero absolute value in the
/// submatrix starting at `(t, t)`.
fn smallest_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let v = d.get(i, j);
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            match &best {
                Some((_, _, b)) if *b <= a => {}
                _ => best = Some((i, j, a)),
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Run pivot elimination from diagonal position `t0` onward, keeping the
/// transform matrices in sync.
fn eliminate_from(d: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, t0: usize) {
    let bound = core::cmp::min(d.rows(), d.cols());
    let mut t = t0;
    while t < bound {
        let Some((pi, pj)) = smallest_pivot(d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            // Clear the pivot column, then the pivot row. Truncating
            // division leaves remainders smaller than the pivot, so a
            // leftover entry forces re-selection of a strictly smaller
            // pivot; this terminates.
            let mut leftover = false;
            for i in t + 1..d.rows() {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = d.get(i, t) / d.get(t, t);
                d.add_row_multiple(i, t, &-&q);
                u.add_row_multiple(i, t, &-&q);
                if !d.get(i, t).is_zero() {
                    leftover = true;
                }
            }
            for j in t + 1..d.cols() {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = d.get(t, j) / d.get(t, t);
                d.add_col_multiple(j, t, &-&q);
                v.add_col_multiple(j, t, &-&q);
                if !d.get(t, j).is_zero() {
                    leftover = true;
                }
            }
            if leftover {
                let (pi, pj) = smallest_pivot(d, t).expect("nonzero remainder exists");
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            // Row and column are clear; enforce that the pivot divides the
            // rest of the submatrix before moving on.
            let pivot = d.get(t, t).clone();
            let mut fixed = true;
            'scan: for i in t + 1..d.rows() {
                for j in t + 1..d.cols() {
                    if !(d.get(i, j) % &pivot).is_zero() {
                        d.add_row_multiple(t, i, &BigInt::from(1));
                        u.add_row_multiple(t, i, &BigInt::from(1));
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        t += 1;
    }
}

/// Smith normal form with unimodular transforms.
///
/// Pivot selection always takes the entry of smallest nonzero absolute
/// value, which keeps intermediate growth tolerable at the scales this
/// crate works at.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    eliminate_from(&mut d, &mut u, &mut v, 0);
    let bound = core::cmp::min(d.rows(), d.cols());
    for i in 0..bound {
        if d.get(i, i).is_negative() {
            d.negate_row(i);
            u.negate_row(i);
        }
    }
    // Final divisibility pass. The in-loop fix-up already establishes the
    // chain, so this normally finds nothing; it re-eliminates on the rare
    // violation rather than trusting the invariant blindly.
    loop {
        let mut violation = None;
        for i in 0..bound.saturating_sub(1) {
            let a = d.get(i, i);
            let b = d.get(i + 1, i + 1);
            if !a.is_zero() && !b.is_zero() && !(b % a).is_zero() {
                violation = Some(i);
                break;
            }
            if a.is_zero() && !b.is_zero() {
                violation = Some(i);
                break;
            }
        }
        let Some(i) = violation else { break };
        d.add_col_multiple(i, i + 1, &BigInt::from(1));
        v.add_col_multiple(i, i + 1, &BigInt::from(1));
        eliminate_from(&mut d, &mut u, &mut v, i);
        for k in i..bound {
            if d.get(k, k).is_negative() {
                d.negate_row(k);
                u.negate_row(k);
            }
        }
    }
    SmithDecomposition { u, d, v }
}

/// Column-style Hermite form: `a * v = h` with `v` unimodular and `h` in
/// column echelon form (pivot rows strictly increasing, pivots positive,
/// entries left of a pivot reduced into `[0, pivot)`).
#[derive(Clone, Debug)]
pub struct HermiteDecomposition {
    pub h: IntMatrix,
    pub v: IntMatrix,
    /// `(row, col)` of each pivot, in column order.
    pub pivots: Vec<(usize, usize)>,
}

pub fn hermite_normal_form(a: &IntMatrix) -> HermiteDecomposition {
    let mut h = a.clone();
    let mut v = IntMatrix::identity(a.cols());
    let mut pivots = Vec::new();
    let mut c = 0usize;
    for r in 0..h.rows() {
        if c == h.cols() {
            break;
        }
        loop {
            // Smallest nonzero entry of row r among columns >= c.
            let mut best: Option<(usize, BigInt)> = None;
            for j in c..h.cols() {
                let x = h.get(r, j);
                if x.is_zero() {
                    continue;
                }
                let a = x.abs();
                match &best {
                    Some((_, b)) if *b <= a => {}
                    _ => best = Some((j, a)),
                }
            }
            let Some((j0, _)) = best else { break };
            h.swap_cols(c, j0);
            v.swap_cols(c, j0);
            let mut leftover = false;
            for j in c + 1..h.cols() {
                if h.get(r, j).is_zero() {
                    continue;
                }
                let q = h.get(r, j) / h.get(r, c);
                h.add_col_multiple(j, c, &-&q);
                v.add_col_multiple(j, c, &-&q);
                if !h.get(r, j).is_zero() {
                    leftover = true;
                }
            }
            if !leftover {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_col(c);
            v.negate_col(c);
        }
        let pivot = h.get(r, c).clone();
        for j in 0..c {
            let x = h.get(r, j);
            if !x.is_zero() {
                let q = x.div_floor(&pivot);
                h.add_col_multiple(j, c, &-&q);
                v.add_col_multiple(j, c, &-&q);
            }
        }
        pivots.push((r, c));
        c += 1;
    }
    HermiteDecomposition { h, v, pivots }
}

impl HermiteDecomposition {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the integer kernel of the original matrix: the transform
    /// columns that map onto the zero columns of `h`.
    pub fn kernel(&self) -> IntMatrix {
        self.v.column_range(self.rank(), self.v.cols())
    }

    /// Solve `a * x = b` for one column, or report that no integer
    /// solution exists.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.h.rows(), "solve: dimension mismatch");
        let mut residual = b.to_vec();
        let mut y = Vec::with_capacity(self.rank());
        for &(r, c) in &self.pivots {
            // Rows above this pivot that are not pivot rows of an earlier
            // column must already be exhausted.
            let (q, rem) = residual[r].div_rem(self.h.get(r, c));
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for i in r..self.h.rows() {
                    let e = self.h.get(i, c);
                    if !e.is_zero() {
                        residual[i] -= &q * e;
                    }
                }
            }
            y.push(q);
        }
        if residual.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut x = alloc::vec![BigInt::zero(); self.v.rows()];
        for (k, yk) in y.iter().enumerate() {
            if yk.is_zero() {
                continue;
            }
            let (_, c) = self.pivots[k];
            for i in 0..self.v.rows() {
                let e = self.v.get(i, c);
                if !e.is_zero() {
                    x[i] += yk * e;
                }
            }
        }
        Some(x)
    }

    /// Solve `a * x = b` for every column of `b`.
    pub fn solve_matrix(&self, b: &IntMatrix) -> Option<IntMatrix> {
        let mut cols = Vec::with_capacity(b.cols());
        for j in 0..b.cols() {
            cols.push(self.solve(&b.column(j))?);
        }
        Some(IntMatrix::from_columns(self.v.rows(), &cols))
    }
}

/// Integer solution of `a * x = b`, if one exists.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    hermite_normal_form(a).solve(b)
}

/// Like [`solve_integer`] but failing with a crate error; for callers where
/// solvability is a structural guarantee.
pub fn solve_integer_required(a: &IntMatrix, b: &[BigInt], what: &str) -> Result<Vec<BigInt>> {
    solve_integer(a, b).ok_or_else(|| Error::Unsolvable(format!("{what}")))
}

/// Basis of the lattice `{ x : a * x = 0 }`.
pub fn kernel_lattice(a: &IntMatrix) -> IntMatrix {
    hermite_normal_form(a).kernel()
}

/// True when `m` is square and integer-invertible.
pub fn is_unimodular(m: &IntMatrix) -> bool {
    if m.rows() != m.cols() {
        return false;
    }
    let snf = smith_normal_form(m);
    let divs = snf.divisors();
    divs.len() == m.rows() && divs.iter().all(|d| d == &BigInt::from(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check_snf(a: &IntMatrix) -> SmithDecomposition {
        let snf = smith_normal_form(a);
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.d, "u*a*v != d");
        assert!(is_unimodular(&snf.u), "u not unimodular");
        assert!(is_unimodular(&snf.v), "v not unimodular");
        let n = core::cmp::min(snf.d.rows(), snf.d.cols());
        for i in 0..n {
            for j in 0..snf.d.cols() {
                if i != j {
                    assert!(snf.d.get(i, j).is_zero(), "off-diagonal");
                }
            }
            assert!(!snf.d.get(i, i).is_negative(), "negative divisor");
        }
        for i in 0..n.saturating_sub(1) {
            let a = snf.d.get(i, i);
            let b = snf.d.get(i + 1, i + 1);
            if !a.is_zero() {
                assert!((b % a).is_zero(), "chain violated");
            } else {
                assert!(b.is_zero(), "zero before nonzero");
            }
        }
        snf
    }

    #[test]
    fn snf_empty() {
        let a = IntMatrix::zeros(0, 0);
        let snf = check_snf(&a);
        assert!(snf.divisors().is_empty());
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(3);
        let snf = check_snf(&a);
        assert_eq!(snf.divisors(), alloc::vec![BigInt::one(); 3]);
    }

    #[test]
    fn snf_two_by_two() {
        // gcd of the entries is 2 and |det| = 8, which forces diag(2, 4).
        let a = IntMatrix::from_rows_i64(&[&[2, 4], &[6, 8]]);
        let snf = check_snf(&a);
        assert_eq!(snf.divisors(), alloc::vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn snf_rectangular_and_zero() {
        check_snf(&IntMatrix::zeros(3, 5));
        let a = IntMatrix::from_rows_i64(&[&[2, 6, 10], &[4, 8, 12]]);
        check_snf(&a);
        let a = IntMatrix::from_rows_i64(&[&[0, 0], &[0, 7], &[3, 0]]);
        let snf = check_snf(&a);
        assert_eq!(snf.divisors(), alloc::vec![BigInt::one(), BigInt::from(21)]);
    }

    #[test]
    fn hnf_solve_basics() {
        let a = IntMatrix::identity(3);
        let b = [BigInt::from(4), BigInt::from(-1), BigInt::from(7)];
        assert_eq!(solve_integer(&a, &b).unwrap(), b.to_vec());

        let a = IntMatrix::from_rows_i64(&[&[2]]);
        assert_eq!(
            solve_integer(&a, &[BigInt::from(4)]).unwrap(),
            alloc::vec![BigInt::from(2)]
        );
        assert!(solve_integer(&a, &[BigInt::from(3)]).is_none(), "parity");
    }

    #[test]
    fn hnf_solve_rectangular() {
        let a = IntMatrix::from_rows_i64(&[&[2, 3], &[0, 5]]);
        let b = [BigInt::from(7), BigInt::from(5)];
        let x = solve_integer(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b.to_vec());

        // Inconsistent system.
        let a = IntMatrix::from_rows_i64(&[&[1, 1], &[1, 1]]);
        assert!(solve_integer(&a, &[BigInt::from(0), BigInt::from(1)]).is_none());
    }

    #[test]
    fn kernel_of_standard_projection() {
        let a = IntMatrix::from_rows_i64(&[&[1, 0, 0], &[0, 1, 0]]);
        let k = kernel_lattice(&a);
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
        assert_eq!(k.get(2, 0).abs(), BigInt::one());
    }

    #[test]
    fn kernel_of_multiplication_map() {
        // x + 2y = 0 has kernel generated by (2, -1).
        let a = IntMatrix::from_rows_i64(&[&[1, 2]]);
        let k = kernel_lattice(&a);
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
    }
}
