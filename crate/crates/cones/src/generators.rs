//! H <-> V conversion by the double description method.
//!
//! A polyhedron `{p : g_i . p + c_i >= 0}` in R^d is homogenised to the cone
//! `{(p, s) : g_i . p + c_i s >= 0, s >= 0}` in R^(d+1). Extreme rays with
//! `s > 0` give points, those with `s = 0` give recession rays, and the
//! lineality space gives lines.

use num_traits::Zero;

use crate::space::LinearForm;
use crate::{Cone, Result, Scalar, Q};

/// V-representation. For a cone without affine constants the only point
/// is the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generators<T: Scalar> {
    pub points: Vec<Vec<Q<T>>>,
    pub rays: Vec<Vec<T>>,
    pub lines: Vec<Vec<T>>,
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn primitive<T: Scalar>(mut v: Vec<T>) -> Vec<T> {
    let g = v.iter().fold(T::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        for x in &mut v {
            *x = x.clone() / g.clone();
        }
    }
    v
}

/// `a * u - b * v`, made primitive.
fn combine<T: Scalar>(a: &T, u: &[T], b: &T, v: &[T]) -> Vec<T> {
    primitive(
        u.iter()
            .zip(v)
            .map(|(x, y)| a.clone() * x.clone() - b.clone() * y.clone())
            .collect(),
    )
}

/// Extreme rays and lineality basis of `{z : h . z >= 0 for h in rows}`.
pub fn cone_generators<T: Scalar>(rows: &[Vec<T>], dim: usize) -> (Vec<Vec<T>>, Vec<Vec<T>>) {
    let mut lines: Vec<Vec<T>> = (0..dim)
        .map(|i| {
            let mut e = vec![T::zero(); dim];
            e[i] = T::one();
            e
        })
        .collect();
    let mut rays: Vec<Vec<T>> = Vec::new();
    let mut seen: Vec<&Vec<T>> = Vec::new();

    for h in rows {
        if h.iter().all(Zero::is_zero) {
            continue;
        }
        if let Some(li) = lines.iter().position(|l| !dot(h, l).is_zero()) {
            let mut l = lines.remove(li);
            let mut hl = dot(h, &l);
            if hl.is_negative() {
                l = l.into_iter().map(|x| -x).collect();
                hl = -hl;
            }
            for other in &mut lines {
                let ho = dot(h, other);
                if !ho.is_zero() {
                    *other = combine(&hl, other, &ho, &l);
                }
            }
            for r in &mut rays {
                let hr = dot(h, r);
                if !hr.is_zero() {
                    *r = combine(&hl, r, &hr, &l);
                }
            }
            rays.push(l);
            seen.push(h);
            continue;
        }

        let vals: Vec<T> = rays.iter().map(|r| dot(h, r)).collect();
        let tight: Vec<Vec<bool>> = rays
            .iter()
            .map(|r| seen.iter().map(|s| dot(s, r).is_zero()).collect())
            .collect();
        // pointed part has dimension dim - lines; adjacent rays share at
        // least that minus two tight constraints
        let need = (dim - lines.len()).saturating_sub(2);
        let mut next: Vec<Vec<T>> = Vec::new();
        for (r, v) in rays.iter().zip(&vals) {
            if !v.is_negative() {
                next.push(r.clone());
            }
        }
        for (i, vi) in vals.iter().enumerate() {
            if !vi.is_positive() {
                continue;
            }
            for (j, vj) in vals.iter().enumerate() {
                if !vj.is_negative() {
                    continue;
                }
                let common: Vec<usize> = (0..seen.len())
                    .filter(|&k| tight[i][k] && tight[j][k])
                    .collect();
                if common.len() < need {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .all(|k| k == i || k == j || !common.iter().all(|&c| tight[k][c]));
                if adjacent {
                    next.push(combine(vi, &rays[j], vj, &rays[i]));
                }
            }
        }
        rays = next;
        seen.push(h);
    }
    rays.sort();
    rays.dedup();
    (rays, lines)
}

impl<T: Scalar> Cone<T> {
    /// V-representation of this (nonempty) cone.
    pub fn rays_and_lines(&self) -> Generators<T> {
        let d = self.dim();
        let mut rows: Vec<Vec<T>> = self.rows().iter().map(LinearForm::integer_row).collect();
        let mut s_row = vec![T::zero(); d + 1];
        s_row[d] = T::one();
        rows.push(s_row);
        let (rays, lines) = cone_generators(&rows, d + 1);
        let mut points = Vec::new();
        let mut out_rays = Vec::new();
        for r in rays {
            let s = r[d].clone();
            if s.is_zero() {
                out_rays.push(r[..d].to_vec());
            } else {
                points.push(
                    r[..d]
                        .iter()
                        .map(|x| Q::new(x.clone(), s.clone()))
                        .collect(),
                );
            }
        }
        // lines of the homogenised cone have s = 0 because of s >= 0
        let lines = lines
            .into_iter()
            .map(|l| primitive(l[..d].to_vec()))
            .collect();
        points.sort();
        Generators {
            points,
            rays: out_rays,
            lines,
        }
    }

    /// H-representation of the polyhedron generated by `gens`, in reduced
    /// canonical form.
    pub fn from_generators(space: crate::Space, gens: &Generators<T>) -> Result<Cone<T>> {
        let d = space.dim();
        let mut cols: Vec<Vec<T>> = Vec::new();
        for p in &gens.points {
            let l = p.iter().fold(T::one(), |acc, q| acc.lcm(q.denom()));
            let mut v: Vec<T> = p
                .iter()
                .map(|q| q.numer().clone() * (l.clone() / q.denom().clone()))
                .collect();
            v.push(l);
            cols.push(v);
        }
        for r in &gens.rays {
            let mut v = r.clone();
            v.push(T::zero());
            cols.push(v);
        }
        for l in &gens.lines {
            let mut v = l.clone();
            v.push(T::zero());
            cols.push(v.iter().map(|x| -x.clone()).collect());
            cols.push(v);
        }
        let (facets, eqs) = cone_generators(&cols, d + 1);
        let mut forms = Vec::new();
        let to_form = |h: &[T]| {
            LinearForm::new(
                h[..d].iter().cloned().map(Q::from_integer).collect(),
                Q::from_integer(h[d].clone()),
            )
        };
        for h in &facets {
            forms.push(to_form(h));
        }
        for h in &eqs {
            forms.push(to_form(h));
            let neg: Vec<T> = h.iter().map(|x| -x.clone()).collect();
            forms.push(to_form(&neg));
        }
        Cone::new(space, forms)?.reduce()
    }
}
