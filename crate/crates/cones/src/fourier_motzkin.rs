//! Fourier-Motzkin elimination over exact integer rows.
//!
//! Each row `[g..., c]` stands for `g . p + c >= 0` (or `> 0` when strict).
//! Combining a row with positive coefficient on the eliminated variable with
//! one with negative coefficient yields a row free of that variable, strict
//! if either parent was strict.

use crate::space::LinearForm;
use crate::{Cone, Result, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Row<T: Scalar> {
    pub coeffs: Vec<T>,
    pub strict: bool,
}

impl<T: Scalar> Row<T> {
    pub fn new(coeffs: Vec<T>, strict: bool) -> Self {
        Row { coeffs, strict }.primitive()
    }

    fn primitive(mut self) -> Self {
        let g = self.coeffs.iter().fold(T::zero(), |acc, v| acc.gcd(v));
        if !g.is_zero() && !g.is_one() {
            for v in &mut self.coeffs {
                *v = v.clone() / g.clone();
            }
        }
        self
    }
}

/// Eliminates column `idx` (which must be a coefficient column, not the
/// constant); the returned rows have that column removed.
pub fn eliminate<T: Scalar>(rows: &[Row<T>], idx: usize) -> Vec<Row<T>> {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut out = Vec::new();
    for r in rows {
        let c = &r.coeffs[idx];
        if c.is_positive() {
            pos.push(r);
        } else if c.is_negative() {
            neg.push(r);
        } else {
            let mut coeffs = r.coeffs.clone();
            coeffs.remove(idx);
            out.push(Row::new(coeffs, r.strict));
        }
    }
    for p in &pos {
        for n in &neg {
            let a = p.coeffs[idx].clone();
            let b = -n.coeffs[idx].clone();
            let mut coeffs: Vec<T> = p
                .coeffs
                .iter()
                .zip(&n.coeffs)
                .map(|(x, y)| x.clone() * b.clone() + y.clone() * a.clone())
                .collect();
            coeffs.remove(idx);
            out.push(Row::new(coeffs, p.strict || n.strict));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Decides feasibility of a mixed strict/non-strict system by eliminating
/// every variable. Exponential in the worst case; meant for small systems.
pub fn is_feasible<T: Scalar>(rows: &[Row<T>], dim: usize) -> bool {
    let mut rows = rows.to_vec();
    for _ in 0..dim {
        rows = eliminate(&rows, 0);
    }
    rows.iter().all(|r| {
        let c = &r.coeffs[0];
        if r.strict {
            c.is_positive()
        } else {
            !c.is_negative()
        }
    })
}

/// Full-dimensionality of a cone decided by elimination alone.
pub fn is_full_dimensional<T: Scalar>(cone: &Cone<T>) -> bool {
    let rows: Vec<Row<T>> = cone
        .rows()
        .iter()
        .filter(|r| !r.is_zero())
        .map(|r| Row::new(r.integer_row(), true))
        .collect();
    is_feasible(&rows, cone.dim())
}

/// Projects the cone onto the variables not listed in `drop`.
pub fn project<T: Scalar>(cone: &Cone<T>, drop: &[usize]) -> Result<Cone<T>> {
    let mut rows: Vec<Row<T>> = cone
        .rows()
        .iter()
        .map(|r| Row::new(r.integer_row(), false))
        .collect();
    let mut space = cone.space().clone();
    let mut drop = drop.to_vec();
    drop.sort_unstable();
    for &idx in drop.iter().rev() {
        rows = eliminate(&rows, idx);
        space = space.without(idx);
    }
    let forms = rows
        .into_iter()
        .map(|r| {
            let (c, g) = r.coeffs.split_last().unwrap();
            LinearForm::new(
                g.iter().cloned().map(crate::Q::from_integer).collect(),
                crate::Q::from_integer(c.clone()),
            )
        })
        .collect();
    Cone::new(space, forms)
}
