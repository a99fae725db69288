//! Exact strict-feasibility test by integer-pivoting simplex.
//!
//! Given integer rows `(g_i, c_i)` we look for `p` with `g_i . p + c_i > 0`
//! for every `i`. Homogenising with `s > 0` gives the LP
//!
//! ```text
//! max t  s.t.  g_i . p + c_i s - t >= 0,  s - t >= 0,  t <= 1,  s, t >= 0
//! ```
//!
//! whose origin is feasible, so no phase one is needed. The open system is
//! solvable iff the optimum is positive; we stop at the first basis with
//! `t > 0`. Free `p` is split as `p+ - p-`.
//!
//! The tableau is kept as integers over a common denominator (Edmonds'
//! fraction-free pivoting), so every entry is a minor of the input and
//! divisions are exact. Bland's rule prevents cycling.

use num_traits::Zero;

use crate::{Scalar, Q};

/// Returns a point strictly satisfying every row, or `None` if the open
/// system is infeasible. Each row has `dim` coefficients then a constant.
pub(crate) fn interior_point<T: Scalar>(rows: &[Vec<T>], dim: usize) -> Option<Vec<Q<T>>> {
    let mut live: Vec<&Vec<T>> = Vec::with_capacity(rows.len());
    for r in rows {
        debug_assert_eq!(r.len(), dim + 1);
        if r[..dim].iter().all(Zero::is_zero) {
            // constant rows are all-or-nothing
            if r[dim].is_negative() {
                return None;
            }
        } else {
            live.push(r);
        }
    }
    if live.is_empty() {
        return Some(vec![Q::zero(); dim]);
    }

    let k = live.len();
    let m = k + 2;
    let s_col = 2 * dim;
    let t_col = 2 * dim + 1;
    let n_struct = 2 * dim + 2;
    let ncols = n_struct + m + 1;
    let rhs = ncols - 1;

    // rows in `<=` form with nonnegative right-hand side
    let mut tab: Vec<Vec<T>> = Vec::with_capacity(m + 1);
    for (i, r) in live.iter().enumerate() {
        let mut row = vec![T::zero(); ncols];
        for j in 0..dim {
            row[j] = -r[j].clone();
            row[dim + j] = r[j].clone();
        }
        row[s_col] = -r[dim].clone();
        row[t_col] = T::one();
        row[n_struct + i] = T::one();
        tab.push(row);
    }
    let mut row = vec![T::zero(); ncols];
    row[s_col] = -T::one();
    row[t_col] = T::one();
    row[n_struct + k] = T::one();
    tab.push(row);
    let mut row = vec![T::zero(); ncols];
    row[t_col] = T::one();
    row[n_struct + k + 1] = T::one();
    row[rhs] = T::one();
    tab.push(row);
    // objective: z - t = 0
    let mut obj = vec![T::zero(); ncols];
    obj[t_col] = -T::one();
    tab.push(obj);

    let mut basis: Vec<usize> = (0..m).map(|i| n_struct + i).collect();
    let mut denom = T::one();

    loop {
        if tab[m][rhs].is_positive() {
            return Some(extract(&tab, &basis, dim, rhs));
        }
        let enter = (0..rhs).find(|&j| tab[m][j].is_negative())?;
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !tab[i][enter].is_positive() {
                continue;
            }
            leave = match leave {
                None => Some(i),
                Some(best) => {
                    // compare rhs_i / a_i against rhs_b / a_b
                    let lhs = tab[i][rhs].clone() * tab[best][enter].clone();
                    let rhs_v = tab[best][rhs].clone() * tab[i][enter].clone();
                    if lhs < rhs_v || (lhs == rhs_v && basis[i] < basis[best]) {
                        Some(i)
                    } else {
                        Some(best)
                    }
                }
            };
        }
        // t <= 1 bounds the objective
        let r = leave.expect("strict-feasibility LP cannot be unbounded");
        pivot(&mut tab, &mut denom, r, enter);
        basis[r] = enter;
    }
}

fn pivot<T: Scalar>(tab: &mut [Vec<T>], denom: &mut T, r: usize, c: usize) {
    let prow = tab[r].clone();
    let p = prow[c].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == r {
            continue;
        }
        let f = row[c].clone();
        if f.is_zero() {
            if !(p == *denom) {
                for v in row.iter_mut() {
                    if !v.is_zero() {
                        *v = v.clone() * p.clone() / denom.clone();
                    }
                }
            }
            continue;
        }
        for (v, pr) in row.iter_mut().zip(&prow) {
            let num = v.clone() * p.clone() - f.clone() * pr.clone();
            debug_assert!((num.clone() % denom.clone()).is_zero());
            *v = num / denom.clone();
        }
    }
    *denom = p;
}

fn extract<T: Scalar>(tab: &[Vec<T>], basis: &[usize], dim: usize, rhs: usize) -> Vec<Q<T>> {
    // the common denominator cancels in p / s
    let mut val = vec![T::zero(); 2 * dim + 2];
    for (i, &b) in basis.iter().enumerate() {
        if b < val.len() {
            val[b] = tab[i][rhs].clone();
        }
    }
    let s = val[2 * dim].clone();
    debug_assert!(s.is_positive());
    (0..dim)
        .map(|j| Q::new(val[j].clone() - val[dim + j].clone(), s.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(rows: &[Vec<i64>], dim: usize) -> Option<Vec<Q<i64>>> {
        let pt = interior_point(rows, dim);
        if let Some(p) = &pt {
            for r in rows.iter().filter(|r| r.iter().any(|v| *v != 0)) {
                let v = r[..dim]
                    .iter()
                    .zip(p)
                    .fold(Q::from_integer(r[dim]), |acc, (c, x)| acc + x * *c);
                assert!(v > Q::zero(), "witness {p:?} violates {r:?}");
            }
        }
        pt
    }

    #[test]
    fn orthant_is_open() {
        assert!(check(&[vec![1, 0, 0], vec![0, 1, 0]], 2).is_some());
    }

    #[test]
    fn hyperplane_is_not() {
        assert!(check(&[vec![1, 0, 0], vec![-1, 0, 0], vec![0, 1, 0]], 2).is_none());
    }

    #[test]
    fn shifted_strip() {
        // 1 <= x <= 2
        assert!(check(&[vec![1, -1], vec![-1, 2]], 1).is_some());
        // 2 <= x <= 1
        assert!(check(&[vec![1, -2], vec![-1, 1]], 1).is_none());
        // x >= 1, x <= 1
        assert!(check(&[vec![1, -1], vec![-1, 1]], 1).is_none());
    }

    #[test]
    fn constant_rows() {
        assert!(check(&[vec![0, 0, 3]], 2).is_some());
        assert!(check(&[vec![0, 0, 0]], 2).is_some());
        assert!(check(&[vec![0, 0, -1]], 2).is_none());
        assert!(check(&[], 3).is_some());
    }

    #[test]
    fn triangle_needs_negative_coordinates() {
        // x <= -5, y <= -5, x + y >= -11
        let rows = vec![vec![-1, 0, -5], vec![0, -1, -5], vec![1, 1, 11]];
        assert!(check(&rows, 2).is_some());
        let rows = vec![vec![-1, 0, -5], vec![0, -1, -5], vec![1, 1, 10]];
        assert!(check(&rows, 2).is_none());
    }
}
