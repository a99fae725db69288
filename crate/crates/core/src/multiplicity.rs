//! Weight multiplicities of irreducible A2 modules.
//!
//! [`mult`] is the closed form used everywhere else. [`freudenthal_diagram`]
//! and [`mult_table`] are independent routes to the same numbers.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use polycone::{Cone, LinearForm, Piece, PiecewiseLinear, Space};

use crate::rootsystem::{dominant_representative, int, killing_form, Weight};
use crate::{Result, Scalar, Q};

/// Multiplicity of the dominant weight `phi` in `V(lambda)`, both dominant.
/// Returns 0 when `lambda - phi` is not in the root lattice.
pub fn mult_dominant<T: Scalar>(lambda: &Weight<T>, phi: &Weight<T>) -> T {
    debug_assert!(lambda.is_dominant() && phi.is_dominant());
    let (a, b) = (lambda.x.clone(), lambda.y.clone());
    let (x, y) = (phi.x.clone(), phi.y.clone());
    let two = int::<T>(2);
    let three = int::<T>(3);
    let p = a.clone() + two.clone() * b.clone() - x.clone() - two.clone() * y.clone();
    if !(p.clone() % three.clone()).is_zero() {
        return T::zero();
    }
    let q = two.clone() * a.clone() + b.clone() - two * x - y;
    let m = [
        p / three.clone() + T::one(),
        q / three + T::one(),
        a + T::one(),
        b + T::one(),
    ]
    .into_iter()
    .min()
    .unwrap();
    if m.is_negative() {
        T::zero()
    } else {
        m
    }
}

/// Multiplicity of an arbitrary weight `phi` in `V(lambda)`.
pub fn mult<T: Scalar>(lambda: &Weight<T>, phi: &Weight<T>) -> T {
    mult_dominant(lambda, &dominant_representative(phi))
}

/// Nonzero multiplicities of `V(lambda)`, keyed by weight.
pub type WeightDiagram<T = i64> = BTreeMap<Weight<T>, T>;

fn span<T: Scalar>(lambda: &Weight<T>) -> usize {
    (lambda.x.clone() + lambda.y.clone())
        .to_usize()
        .expect("highest weight fits in memory")
}

fn idx<T: Scalar>(i: usize) -> T {
    T::from_usize(i).expect("index fits scalar")
}

/// All weights of `V(lambda)` with multiplicities, from the closed form.
///
/// Every weight is `lambda - i a1 - j a2` with `0 <= i, j <= a + b`.
pub fn weight_diagram<T: Scalar>(lambda: &Weight<T>) -> WeightDiagram<T> {
    let n = span(lambda);
    let mut out = BTreeMap::new();
    for i in 0..=n {
        for j in 0..=n {
            let phi = lambda.lower(&idx(i), &idx(j));
            let m = mult(lambda, &phi);
            if !m.is_zero() {
                out.insert(phi, m);
            }
        }
    }
    out
}

/// All weights of `V(lambda)` by Freudenthal's recursion, processed by
/// increasing depth below `lambda`.
pub fn freudenthal_diagram<T: Scalar>(lambda: &Weight<T>) -> WeightDiagram<T> {
    assert!(lambda.is_dominant(), "highest weight must be dominant");
    let n = span(lambda);
    let rho = Weight::<T>::rho();
    let top = lambda.clone() + rho.clone();
    let top_norm = killing_form(&top, &top);
    // m[i][j] is the multiplicity of lambda - i a1 - j a2
    let mut m = vec![vec![T::zero(); n + 1]; n + 1];
    m[0][0] = T::one();
    let roots = [
        (1usize, 0usize, Weight::<T>::alpha1()),
        (0, 1, Weight::<T>::alpha2()),
        (1, 1, Weight::<T>::theta()),
    ];
    for depth in 1..=2 * n {
        for i in depth.saturating_sub(n)..=depth.min(n) {
            let j = depth - i;
            let phi = lambda.lower(&idx(i), &idx(j));
            let shifted = phi.clone() + rho.clone();
            let c = top_norm.clone() - killing_form(&shifted, &shifted);
            if !c.is_positive() {
                continue;
            }
            let mut rhs = Q::<T>::zero();
            for (di, dj, alpha) in &roots {
                let mut k = 1;
                while k * di <= i && k * dj <= j {
                    let (pi, pj) = (i - k * di, j - k * dj);
                    let mk = &m[pi][pj];
                    if !mk.is_zero() {
                        let beta = lambda.lower(&idx(pi), &idx(pj));
                        rhs = rhs + killing_form(&beta, alpha) * Q::from_integer(mk.clone());
                    }
                    k += 1;
                }
            }
            let val = rhs * Q::from_integer(int(2)) / c;
            assert!(val.is_integer(), "Freudenthal produced a non-integer");
            m[i][j] = val.to_integer();
        }
    }
    let mut out = BTreeMap::new();
    for (i, row) in m.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            if !v.is_zero() {
                out.insert(lambda.lower(&idx(i), &idx(j)), v);
            }
        }
    }
    out
}

/// Freudenthal multiplicity of a single weight.
pub fn mult_freudenthal<T: Scalar>(lambda: &Weight<T>, phi: &Weight<T>) -> T {
    freudenthal_diagram(lambda)
        .get(phi)
        .cloned()
        .unwrap_or_else(T::zero)
}

/// Variables `(x, y, a, b)` of [`mult_table`].
pub fn mult_table_space() -> Space {
    Space::new(&["x", "y", "a", "b"])
}

// (inequality rows [x, y, a, b, const], 3 * expression [x, y, a, b, const])
#[rustfmt::skip]
const TABLE: [(&[[i64; 5]], [i64; 5]); 14] = [
    (&[[1, -1, -1, 1, 0], [1, 2, -1, 1, 0], [2, 1, -2, -1, -3]], [0; 5]),
    (&[[-1, 1, 1, -1, 0], [2, 1, 1, -1, 0], [1, 2, -1, -2, -3]], [0; 5]),
    (&[[-2, -1, -1, 1, 0], [1, 2, -1, 1, 0], [-1, 1, -2, -1, -3]], [0; 5]),
    (&[[-1, 1, 1, -1, 0], [-1, -2, 1, -1, 0], [-2, -1, -1, -2, -3]], [0; 5]),
    (&[[1, -1, -1, 1, 0], [-2, -1, -1, 1, 0], [-1, -2, -2, -1, -3]], [0; 5]),
    (&[[2, 1, 1, -1, 0], [-1, -2, 1, -1, 0], [1, -1, -1, -2, -3]], [0; 5]),
    (&[[1, -1, -1, 1, 0], [1, 2, -1, 1, 0], [-2, -1, 2, 1, 3], [2, 1, 1, -1, 0]], [-2, -1, 2, 1, 3]),
    (&[[-1, 1, 1, -1, 0], [2, 1, 1, -1, 0], [1, 2, -1, 1, 0], [-1, -2, 1, 2, 3]], [-1, -2, 1, 2, 3]),
    (&[[-2, -1, -1, 1, 0], [1, 2, -1, 1, 0], [1, -1, 2, 1, 3], [-1, 1, 1, -1, 0]], [1, -1, 2, 1, 3]),
    (&[[-1, 1, 1, -1, 0], [-2, -1, -1, 1, 0], [-1, -2, 1, -1, 0], [2, 1, 1, 2, 3]], [2, 1, 1, 2, 3]),
    (&[[1, -1, -1, 1, 0], [-2, -1, -1, 1, 0], [1, 2, 2, 1, 3], [-1, -2, 1, -1, 0]], [1, 2, 2, 1, 3]),
    (&[[1, -1, -1, 1, 0], [2, 1, 1, -1, 0], [-1, -2, 1, -1, 0], [-1, 1, 1, 2, 3]], [-1, 1, 1, 2, 3]),
    (&[[-1, 1, 1, -1, 0], [2, 1, 1, -1, 0], [-1, -2, 1, -1, 0], [0, 0, 1, -1, 0]], [0, 0, 0, 3, 3]),
    (&[[1, -1, -1, 1, 0], [1, 2, -1, 1, 0], [-2, -1, -1, 1, 0], [0, 0, -1, 1, 0]], [0, 0, 3, 0, 3]),
];

/// The multiplicity function as fourteen linear pieces over `(x, y, a, b)`
/// with domain `a, b >= 0`. At a lattice point `(x, y)` congruent to
/// `(a, b)` it equals `mult((a, b), (x, y))`.
pub fn mult_table<T: Scalar>() -> Result<PiecewiseLinear<T>> {
    let space = mult_table_space();
    let domain = Cone::from_int_rows(space.clone(), &[&[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0]])?;
    let three = Q::from_integer(int::<T>(3));
    let pieces = TABLE
        .iter()
        .map(|(rows, expr)| {
            let rows: Vec<&[i64]> = rows.iter().map(|r| &r[..]).collect();
            Ok(Piece {
                cone: Cone::from_int_rows(space.clone(), &rows)?,
                expr: LinearForm::from_ints(expr) * (Q::from_integer(T::one()) / three.clone()),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PiecewiseLinear::new(domain, pieces)?)
}

/// Evaluates [`mult_table`] at `(phi, lambda)`, applying the congruence
/// condition first.
pub fn mult_piecewise<T: Scalar>(
    table: &PiecewiseLinear<T>,
    lambda: &Weight<T>,
    phi: &Weight<T>,
) -> Result<T> {
    if !lambda.congruent(phi) {
        return Ok(T::zero());
    }
    let point: Vec<Q<T>> = [&phi.x, &phi.y, &lambda.x, &lambda.y]
        .into_iter()
        .map(|v| Q::from_integer(v.clone()))
        .collect();
    let v = table.evaluate(&point)?;
    Ok(v.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(x: i64, y: i64) -> Weight<i64> {
        Weight::new(x, y)
    }

    #[test]
    fn adjoint_zero_weight() {
        assert_eq!(mult_dominant(&w(1, 1), &w(0, 0)), 2);
        assert_eq!(mult(&w(1, 1), &w(1, 1)), 1);
        assert_eq!(mult(&w(1, 1), &w(2, -1)), 1);
        assert_eq!(mult(&w(1, 1), &w(1, 0)), 0);
    }

    #[test]
    fn small_diagrams_have_the_right_dimension() {
        for a in 0..6 {
            for b in 0..6 {
                let lam = w(a, b);
                let total: i64 = weight_diagram(&lam).values().sum();
                assert_eq!(total, lam.dimension(), "lambda = {lam}");
            }
        }
    }

    #[test]
    fn freudenthal_agrees_on_a_grid() {
        for a in 0..7 {
            for b in 0..7 {
                let lam = w(a, b);
                assert_eq!(
                    freudenthal_diagram(&lam),
                    weight_diagram(&lam),
                    "lambda = {lam}"
                );
            }
        }
    }

    #[test]
    fn table_is_a_partition() {
        let t = mult_table::<i128>().unwrap();
        assert_eq!(t.len(), 14);
        assert!(t.validate().unwrap().is_empty());
    }

    #[test]
    fn table_matches_closed_form() {
        let t = mult_table::<i64>().unwrap();
        for a in 0..5 {
            for b in 0..5 {
                let lam = w(a, b);
                for x in -12..12 {
                    for y in -12..12 {
                        let phi = w(x, y);
                        assert_eq!(mult_piecewise(&t, &lam, &phi).unwrap(), mult(&lam, &phi));
                    }
                }
            }
        }
    }
}
