//! H-represented cones `{p : F_i(p) >= 0}` and exact decisions on them.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::space::{AffineMap, LinearForm, Space};
use crate::{lp, Error, Result, Scalar, Q};

#[derive(Clone)]
pub struct Cone<T: Scalar> {
    space: Space,
    rows: Vec<LinearForm<T>>,
}

impl<T: Scalar> PartialEq for Cone<T> {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.rows == other.rows
    }
}

impl<T: Scalar> Eq for Cone<T> {}

impl<T: Scalar> std::hash::Hash for Cone<T> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
    }
}

impl<T: Scalar> PartialOrd for Cone<T> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> Ord for Cone<T> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rows.cmp(&other.rows)
    }
}

impl<T: Scalar> Cone<T> {
    /// Rows are rescaled to primitive integer vectors; no other reduction.
    pub fn new(space: Space, rows: Vec<LinearForm<T>>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.dim() != space.dim()) {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                got: bad.dim(),
            });
        }
        Ok(Cone {
            rows: rows.iter().map(LinearForm::primitive).collect(),
            space,
        })
    }

    pub fn from_int_rows(space: Space, rows: &[&[i64]]) -> Result<Self> {
        Cone::new(
            space,
            rows.iter().map(|r| LinearForm::from_ints(r)).collect(),
        )
    }

    /// The whole ambient space.
    pub fn whole(space: Space) -> Self {
        Cone {
            space,
            rows: Vec::new(),
        }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn rows(&self) -> &[LinearForm<T>] {
        &self.rows
    }

    pub fn contains(&self, point: &[Q<T>]) -> bool {
        self.rows.iter().all(|r| !r.eval(point).is_negative())
    }

    pub fn contains_strictly(&self, point: &[Q<T>]) -> bool {
        self.rows.iter().all(|r| r.eval(point).is_positive())
    }

    fn int_rows(&self) -> Vec<Vec<T>> {
        self.rows.iter().map(LinearForm::integer_row).collect()
    }

    /// A rational point strictly inside, if the cone is full-dimensional.
    pub fn interior_point(&self) -> Option<Vec<Q<T>>> {
        lp::interior_point(&self.int_rows(), self.dim())
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.interior_point().is_some()
    }

    /// Concatenates the inequality lists.
    pub fn intersect(&self, other: &Cone<T>) -> Result<Cone<T>> {
        self.space.check_same(&other.space)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Cone {
            space: self.space.clone(),
            rows,
        })
    }

    pub fn with_row(&self, row: LinearForm<T>) -> Cone<T> {
        assert_eq!(row.dim(), self.dim());
        let mut rows = self.rows.clone();
        rows.push(row.primitive());
        Cone {
            space: self.space.clone(),
            rows,
        }
    }

    /// True if both cones carry some row `F` and `-F` respectively, which
    /// confines their intersection to the hyperplane `F = 0`.
    pub fn has_opposite_row(&self, other: &Cone<T>) -> bool {
        self.rows.iter().any(|r| {
            let neg = -r.clone();
            other.rows.contains(&neg)
        })
    }

    /// Whether the intersection has nonempty interior.
    pub fn overlaps(&self, other: &Cone<T>) -> bool {
        if self.has_opposite_row(other) {
            return false;
        }
        self.intersect(other)
            .map(|c| c.is_full_dimensional())
            .unwrap_or(false)
    }

    /// Whether `row >= 0` holds on all of this (full-dimensional) cone.
    pub fn implies(&self, row: &LinearForm<T>) -> bool {
        let row = row.primitive();
        if row.is_constant() {
            return !row.constant().is_negative();
        }
        if self.rows.contains(&row) {
            return true;
        }
        !self.with_row(-row).is_full_dimensional()
    }

    /// Whether `self` is contained in `other`; both full-dimensional.
    pub fn is_subset_of(&self, other: &Cone<T>) -> bool {
        other.rows.iter().all(|r| self.implies(r))
    }

    /// Same solution set (mutual inclusion), both full-dimensional.
    pub fn same_set(&self, other: &Cone<T>) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }

    /// Irredundant canonical form: primitive integer rows, each kept iff
    /// dropping it enlarges the solution set, sorted lexicographically.
    pub fn reduce(&self) -> Result<Cone<T>> {
        let mut rows: Vec<LinearForm<T>> = Vec::new();
        for r in &self.rows {
            if r.is_constant() {
                if r.constant().is_negative() {
                    return Err(Error::Empty);
                }
                continue;
            }
            rows.push(r.primitive());
        }
        rows.sort();
        rows.dedup();
        // same normal, looser constant
        let mut keep = vec![true; rows.len()];
        for i in 0..rows.len() {
            for j in 0..rows.len() {
                if i != j
                    && keep[j]
                    && rows[i].coeffs() == rows[j].coeffs()
                    && rows[j].constant() < rows[i].constant()
                {
                    keep[i] = false;
                    break;
                }
            }
        }
        let mut rows: Vec<LinearForm<T>> = rows
            .into_iter()
            .zip(keep)
            .filter_map(|(r, k)| k.then_some(r))
            .collect();
        let probe = Cone {
            space: self.space.clone(),
            rows: rows.clone(),
        };
        let Some(interior) = probe.interior_point() else {
            return Err(Error::Empty);
        };
        let mut i = 0;
        while i < rows.len() {
            let row = rows.remove(i);
            let rest = Cone {
                space: self.space.clone(),
                rows: rows.clone(),
            };
            if rest.with_row(-row.clone()).is_full_dimensional() {
                rows.insert(i, row);
                i += 1;
            }
        }
        debug_assert!(rows.iter().all(|r| r.eval(&interior).is_positive()));
        Ok(Cone {
            space: self.space.clone(),
            rows,
        })
    }

    /// Substitutes `map` (source = this cone's space) into every row.
    pub fn pullback(&self, map: &AffineMap<T>) -> Result<Cone<T>> {
        self.space.check_same(map.source())?;
        Cone::new(
            map.target().clone(),
            self.rows.iter().map(|r| r.substitute(map)).collect(),
        )
    }

    /// The cone cut by the hyperplane `wall = 0`, expressed in the
    /// coordinates left after solving `wall = 0` for one variable.
    /// Returns the reduced space and rows.
    pub fn restrict_to_hyperplane(&self, wall: &LinearForm<T>) -> Result<Cone<T>> {
        let Some(idx) = wall.coeffs().iter().position(|c| !c.is_zero()) else {
            return Err(Error::Empty);
        };
        let pivot = wall.coeffs()[idx].clone();
        // p[idx] = -(wall - pivot * p[idx]) / pivot
        let mut coeffs = wall.coeffs().to_vec();
        coeffs[idx] = Q::zero();
        let repl =
            LinearForm::new(coeffs, wall.constant().clone()).scale(&(-Q::<T>::one() / pivot));
        Cone::new(
            self.space.without(idx),
            self.rows.iter().map(|r| r.eliminate(idx, &repl)).collect(),
        )
    }

    /// `self \ other` as a list of full-dimensional cones with pairwise
    /// disjoint interiors (closures taken; boundaries are measure zero).
    pub fn subtract(&self, other: &Cone<T>) -> Result<Vec<Cone<T>>> {
        self.space.check_same(&other.space)?;
        if !self.overlaps(other) {
            return Ok(vec![self.clone()]);
        }
        let mut out = Vec::new();
        let mut acc = self.clone();
        for r in &other.rows {
            if r.is_constant() {
                continue;
            }
            let piece = acc.with_row(-r.clone());
            if piece.is_full_dimensional() {
                out.push(piece);
            }
            acc = acc.with_row(r.clone());
        }
        Ok(out)
    }

    /// Remainder of this cone after removing every cone in `cover`, or an
    /// empty vector if they cover it.
    pub fn uncovered(&self, cover: &[Cone<T>]) -> Result<Vec<Cone<T>>> {
        let mut remaining = vec![self.clone()];
        for c in cover {
            let mut next = Vec::new();
            for r in &remaining {
                next.extend(r.subtract(c)?);
            }
            remaining = next;
            if remaining.is_empty() {
                break;
            }
        }
        Ok(remaining)
    }

    pub fn display(&self) -> String {
        if self.rows.is_empty() {
            return "(whole space)".to_string();
        }
        self.rows
            .iter()
            .map(|r| format!("{} >= 0", r.display(&self.space)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl<T: Scalar> fmt::Debug for Cone<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cone{} {{ {} }}", self.space, self.display())
    }
}
