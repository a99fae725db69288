//! Convexity of a union of full-dimensional cones.
//!
//! The envelope of a family keeps every row of every member that is valid
//! on all other members. It always contains the convex hull of the union,
//! and equals the union exactly when the union is convex (each facet of a
//! convex union lies on a facet of some member). So the union is convex iff
//! the envelope minus the members has empty interior.

use crate::{Cone, Generators, Result, Scalar};

/// Rows of the members that are valid on every member.
pub fn envelope<T: Scalar>(cones: &[Cone<T>]) -> Result<Cone<T>> {
    let first = cones.first().expect("envelope of an empty family");
    let mut rows = Vec::new();
    for (i, c) in cones.iter().enumerate() {
        first.space().check_same(c.space())?;
        for r in c.rows() {
            if rows.contains(r) {
                continue;
            }
            let valid = cones
                .iter()
                .enumerate()
                .all(|(j, other)| i == j || other.implies(r));
            if valid {
                rows.push(r.clone());
            }
        }
    }
    Cone::new(first.space().clone(), rows)
}

/// Cheap necessary condition: every member row that is not in the envelope
/// separates the member from a neighbour, which then carries the opposite
/// row (members are assumed reduced, with disjoint interiors).
fn walls_are_shared<T: Scalar>(cones: &[Cone<T>], env: &Cone<T>) -> bool {
    cones.iter().enumerate().all(|(i, c)| {
        c.rows().iter().all(|r| {
            env.rows().contains(r) || {
                let neg = -r.clone();
                cones
                    .iter()
                    .enumerate()
                    .any(|(j, o)| i != j && o.rows().contains(&neg))
            }
        })
    })
}

/// Decides whether the union of `cones` is convex. Members must be
/// full-dimensional and share one ambient space.
pub fn is_union_convex<T: Scalar>(cones: &[Cone<T>]) -> Result<bool> {
    Ok(union_hull(cones)?.is_some())
}

/// The union as a single cone when it is convex, `None` otherwise.
pub fn union_hull<T: Scalar>(cones: &[Cone<T>]) -> Result<Option<Cone<T>>> {
    match cones.len() {
        0 => return Ok(None),
        1 => return Ok(Some(cones[0].clone())),
        _ => {}
    }
    let reduced: Vec<Cone<T>> = cones.iter().map(Cone::reduce).collect::<Result<_>>()?;
    let env = envelope(&reduced)?;
    if !walls_are_shared(&reduced, &env) {
        return Ok(None);
    }
    if env.uncovered(&reduced)?.is_empty() {
        Ok(Some(env.reduce()?))
    } else {
        Ok(None)
    }
}

/// Convex hull of the union computed from generators, as an independent
/// route for cross-checking [`is_union_convex`].
pub fn convex_hull<T: Scalar>(cones: &[Cone<T>]) -> Result<Cone<T>> {
    let first = cones.first().expect("hull of an empty family");
    let mut all = Generators {
        points: Vec::new(),
        rays: Vec::new(),
        lines: Vec::new(),
    };
    for c in cones {
        first.space().check_same(c.space())?;
        let g = c.rays_and_lines();
        all.points.extend(g.points);
        all.rays.extend(g.rays);
        all.lines.extend(g.lines);
    }
    Cone::from_generators(first.space().clone(), &all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Space;

    fn xy() -> Space {
        Space::new(&["x", "y"])
    }

    fn c(rows: &[&[i64]]) -> Cone<i64> {
        Cone::from_int_rows(xy(), rows).unwrap()
    }

    #[test]
    fn adjacent_quadrants_form_halfplane() {
        let q1 = c(&[&[1, 0, 0], &[0, 1, 0]]);
        let q2 = c(&[&[-1, 0, 0], &[0, 1, 0]]);
        assert!(is_union_convex(&[q1.clone(), q2.clone()]).unwrap());
        let h = union_hull(&[q1, q2]).unwrap().unwrap();
        assert_eq!(h, c(&[&[0, 1, 0]]));
    }

    #[test]
    fn opposite_quadrants_are_not_convex() {
        let q1 = c(&[&[1, 0, 0], &[0, 1, 0]]);
        let q3 = c(&[&[-1, 0, 0], &[0, -1, 0]]);
        assert!(!is_union_convex(&[q1, q3]).unwrap());
    }

    #[test]
    fn l_shape_is_not_convex() {
        let q1 = c(&[&[1, 0, 0], &[0, 1, 0]]);
        let q2 = c(&[&[-1, 0, 0], &[0, 1, 0]]);
        let q3 = c(&[&[-1, 0, 0], &[0, -1, 0]]);
        assert!(!is_union_convex(&[q1.clone(), q2.clone(), q3.clone()]).unwrap());
        let q4 = c(&[&[1, 0, 0], &[0, -1, 0]]);
        assert!(is_union_convex(&[q1, q2, q3, q4]).unwrap());
    }

    #[test]
    fn hull_route_agrees() {
        let q1 = c(&[&[1, 0, 0], &[0, 1, 0]]);
        let q2 = c(&[&[-1, 0, 0], &[0, 1, 0]]);
        let h = convex_hull(&[q1, q2]).unwrap();
        assert_eq!(h, c(&[&[0, 1, 0]]));
    }
}
