//! Piecewise-affine functions on a domain cone.
//!
//! A [`PiecewiseLinear`] is a finite set of [`Piece`]s, each a
//! full-dimensional cone carrying one affine expression. The pieces have
//! pairwise disjoint interiors and together cover a declared domain cone.
//! On a wall shared by two pieces their expressions agree, so evaluation at
//! wall points is unambiguous.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_traits::Zero;

use crate::space::{AffineMap, LinearForm, Space};
use crate::union::union_hull;
use crate::{Cone, Error, Result, Scalar, Q};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Piece<T: Scalar> {
    pub cone: Cone<T>,
    pub expr: LinearForm<T>,
}

impl<T: Scalar> fmt::Debug for Piece<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} on {{ {} }}",
            self.expr.display(self.cone.space()),
            self.cone.display()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseLinear<T: Scalar> {
    space: Space,
    domain: Cone<T>,
    pieces: Vec<Piece<T>>,
}

/// A broken partition invariant, with a witness where one makes sense.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation<T: Scalar> {
    NotFullDimensional {
        piece: usize,
    },
    Overlap {
        first: usize,
        second: usize,
        point: Vec<Q<T>>,
    },
    Uncovered {
        point: Vec<Q<T>>,
    },
    Discontinuous {
        first: usize,
        second: usize,
    },
}

/// A full-dimensional region where two functions carry different
/// expressions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample<T: Scalar> {
    pub left_piece: usize,
    pub right_piece: usize,
    pub point: Vec<Q<T>>,
    pub left_value: Q<T>,
    pub right_value: Q<T>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison<T: Scalar> {
    pub counterexample: Option<Counterexample<T>>,
    /// For each nonzero piece of the left function, the right piece with
    /// the same expression and the same cone, if there is one.
    pub matching: Vec<(usize, Option<usize>)>,
}

impl<T: Scalar> Comparison<T> {
    pub fn equivalent(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Every nonzero piece on the left has an identical piece on the right.
    pub fn pieces_match(&self) -> bool {
        self.matching.iter().all(|(_, m)| m.is_some())
    }
}

impl<T: Scalar> PiecewiseLinear<T> {
    /// Assembles a function from raw pieces: each cone is intersected with
    /// the domain and reduced, and pieces that are not full-dimensional are
    /// dropped. Partition invariants are not checked here; see
    /// [`PiecewiseLinear::validate`].
    pub fn new(domain: Cone<T>, pieces: Vec<Piece<T>>) -> Result<Self> {
        let space = domain.space().clone();
        let domain = domain.reduce()?;
        let mut out = Vec::with_capacity(pieces.len());
        for p in pieces {
            space.check_same(p.cone.space())?;
            if p.expr.dim() != space.dim() {
                return Err(Error::DimensionMismatch {
                    expected: space.dim(),
                    got: p.expr.dim(),
                });
            }
            match p.cone.intersect(&domain)?.reduce() {
                Ok(cone) => out.push(Piece { cone, expr: p.expr }),
                Err(Error::Empty) => {}
                Err(e) => return Err(e),
            }
        }
        out.sort();
        Ok(PiecewiseLinear {
            space,
            domain,
            pieces: out,
        })
    }

    /// The constant function `value` on the domain.
    pub fn constant(domain: Cone<T>, value: Q<T>) -> Result<Self> {
        let dim = domain.dim();
        let whole = Cone::whole(domain.space().clone());
        Self::new(
            domain,
            vec![Piece {
                cone: whole,
                expr: LinearForm::constant_form(dim, value),
            }],
        )
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn domain(&self) -> &Cone<T> {
        &self.domain
    }

    pub fn pieces(&self) -> &[Piece<T>] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn nonzero_count(&self) -> usize {
        self.pieces.iter().filter(|p| !p.expr.is_zero()).count()
    }

    pub fn zero_count(&self) -> usize {
        self.len() - self.nonzero_count()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        self.space.check_same(&other.space)?;
        if self.domain != other.domain {
            return Err(Error::DomainMismatch);
        }
        Ok(())
    }

    /// Pointwise sum on the common refinement.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut pieces = Vec::new();
        for p in &self.pieces {
            for q in &other.pieces {
                if p.cone.has_opposite_row(&q.cone) {
                    continue;
                }
                match p.cone.intersect(&q.cone)?.reduce() {
                    Ok(cone) => pieces.push(Piece {
                        cone,
                        expr: p.expr.clone() + q.expr.clone(),
                    }),
                    Err(Error::Empty) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        pieces.sort();
        Ok(PiecewiseLinear {
            space: self.space.clone(),
            domain: self.domain.clone(),
            pieces,
        })
    }

    pub fn scale(&self, k: &Q<T>) -> Self {
        PiecewiseLinear {
            space: self.space.clone(),
            domain: self.domain.clone(),
            pieces: self
                .pieces
                .iter()
                .map(|p| Piece {
                    cone: p.cone.clone(),
                    expr: p.expr.scale(k),
                })
                .collect(),
        }
    }

    /// Merges pieces carrying identical expressions whose union is convex,
    /// until no merge applies. Each expression group is first tried as a
    /// whole; after that, adjacent pairs are tried in canonical order and
    /// the search restarts after every merge. Values are unchanged.
    pub fn simplify(&self) -> Result<Self> {
        let mut groups: BTreeMap<LinearForm<T>, Vec<Cone<T>>> = BTreeMap::new();
        for p in &self.pieces {
            groups
                .entry(p.expr.clone())
                .or_default()
                .push(p.cone.clone());
        }
        let mut pieces = Vec::new();
        for (expr, cones) in groups {
            for cone in merge_group(cones)? {
                pieces.push(Piece {
                    cone,
                    expr: expr.clone(),
                });
            }
        }
        pieces.sort();
        Ok(PiecewiseLinear {
            space: self.space.clone(),
            domain: self.domain.clone(),
            pieces,
        })
    }

    /// Substitutes `map` (from `target_domain`'s space into this function's
    /// space) into every cone and expression, restricted to `target_domain`.
    pub fn pullback(&self, map: &AffineMap<T>, target_domain: &Cone<T>) -> Result<Self> {
        self.space.check_same(map.source())?;
        map.target().check_same(target_domain.space())?;
        let dom = self.domain.pullback(map)?.intersect(target_domain)?;
        let pieces = self
            .pieces
            .iter()
            .map(|p| {
                Ok(Piece {
                    cone: p.cone.pullback(map)?.intersect(&dom)?,
                    expr: p.expr.substitute(map),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(target_domain.clone(), pieces)
    }

    /// Value at `point`, which must lie in the domain.
    pub fn evaluate(&self, point: &[Q<T>]) -> Result<Q<T>> {
        if point.len() != self.space.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.space.dim(),
                got: point.len(),
            });
        }
        if !self.domain.contains(point) {
            return Err(Error::OutsideDomain);
        }
        self.pieces
            .iter()
            .find(|p| p.cone.contains(point))
            .map(|p| p.expr.eval(point))
            .ok_or(Error::NotCovered)
    }

    /// Checks the partition invariants exactly: full-dimensional pieces,
    /// pairwise disjoint interiors, coverage of the domain, and agreement
    /// of neighbouring expressions on shared walls.
    pub fn validate(&self) -> Result<Vec<Violation<T>>> {
        let mut out = Vec::new();
        for (i, p) in self.pieces.iter().enumerate() {
            if !p.cone.is_full_dimensional() {
                out.push(Violation::NotFullDimensional { piece: i });
            }
        }
        for i in 0..self.pieces.len() {
            for j in i + 1..self.pieces.len() {
                let (a, b) = (&self.pieces[i].cone, &self.pieces[j].cone);
                if a.has_opposite_row(b) {
                    continue;
                }
                if let Some(point) = a.intersect(b)?.interior_point() {
                    out.push(Violation::Overlap {
                        first: i,
                        second: j,
                        point,
                    });
                }
            }
        }
        let cones: Vec<Cone<T>> = self.pieces.iter().map(|p| p.cone.clone()).collect();
        if let Some(rest) = self.domain.uncovered(&cones)?.first() {
            out.push(Violation::Uncovered {
                point: rest
                    .interior_point()
                    .expect("remainders are full-dimensional"),
            });
        }
        for (i, j) in self.adjacent_pairs()? {
            let diff = self.pieces[i].expr.clone() - self.pieces[j].expr.clone();
            let wall = self
                .shared_wall(i, j)
                .expect("adjacent pieces share a wall");
            if !vanishes_on(&diff, &wall) {
                out.push(Violation::Discontinuous {
                    first: i,
                    second: j,
                });
            }
        }
        Ok(out)
    }

    fn shared_wall(&self, i: usize, j: usize) -> Option<LinearForm<T>> {
        let (a, b) = (&self.pieces[i].cone, &self.pieces[j].cone);
        a.rows()
            .iter()
            .find(|r| b.rows().contains(&-(*r).clone()))
            .cloned()
    }

    /// Pairs of pieces meeting in a common facet of positive
    /// (codimension-one) measure.
    pub fn adjacent_pairs(&self) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for i in 0..self.pieces.len() {
            for j in i + 1..self.pieces.len() {
                let (a, b) = (&self.pieces[i].cone, &self.pieces[j].cone);
                for r in a.rows() {
                    if !b.rows().contains(&-r.clone()) {
                        continue;
                    }
                    let meet = a.intersect(b)?.restrict_to_hyperplane(r)?;
                    if meet.is_full_dimensional() {
                        out.push((i, j));
                        break;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Compares two functions on the common refinement of their pieces.
    pub fn compare(&self, other: &Self) -> Result<Comparison<T>> {
        self.check_compatible(other)?;
        let mut counterexample = None;
        'outer: for (i, p) in self.pieces.iter().enumerate() {
            for (j, q) in other.pieces.iter().enumerate() {
                if p.expr == q.expr || p.cone.has_opposite_row(&q.cone) {
                    continue;
                }
                if let Some(point) = p.cone.intersect(&q.cone)?.interior_point() {
                    counterexample = Some(Counterexample {
                        left_piece: i,
                        right_piece: j,
                        left_value: p.expr.eval(&point),
                        right_value: q.expr.eval(&point),
                        point,
                    });
                    break 'outer;
                }
            }
        }
        let matching = self
            .pieces
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.expr.is_zero())
            .map(|(i, p)| {
                let m = other
                    .pieces
                    .iter()
                    .position(|q| q.expr == p.expr && q.cone.same_set(&p.cone));
                (i, m)
            })
            .collect();
        Ok(Comparison {
            counterexample,
            matching,
        })
    }
}

/// Whether `form` is identically zero on the hyperplane `wall = 0`, i.e. a
/// scalar multiple of `wall`.
fn vanishes_on<T: Scalar>(form: &LinearForm<T>, wall: &LinearForm<T>) -> bool {
    if form.is_zero() {
        return true;
    }
    let entries = |f: &LinearForm<T>| -> Vec<Q<T>> {
        f.coeffs()
            .iter()
            .cloned()
            .chain([f.constant().clone()])
            .collect()
    };
    let (f, w) = (entries(form), entries(wall));
    let Some(k) = w.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    let ratio = f[k].clone() / w[k].clone();
    f.iter()
        .zip(&w)
        .all(|(a, b)| *a == ratio.clone() * b.clone())
}

fn merge_group<T: Scalar>(mut cones: Vec<Cone<T>>) -> Result<Vec<Cone<T>>> {
    cones.sort();
    if cones.len() > 2 {
        if let Some(all) = union_hull(&cones)? {
            return Ok(vec![all]);
        }
    }
    let mut failed: HashSet<(Cone<T>, Cone<T>)> = HashSet::new();
    'restart: loop {
        for i in 0..cones.len() {
            for j in i + 1..cones.len() {
                if !cones[i].has_opposite_row(&cones[j]) {
                    continue;
                }
                let key = (cones[i].clone(), cones[j].clone());
                if failed.contains(&key) {
                    continue;
                }
                match union_hull(&[cones[i].clone(), cones[j].clone()])? {
                    Some(merged) => {
                        cones.remove(j);
                        cones.remove(i);
                        cones.push(merged);
                        cones.sort();
                        continue 'restart;
                    }
                    None => {
                        failed.insert(key);
                    }
                }
            }
        }
        return Ok(cones);
    }
}

impl<T: Scalar> fmt::Display for PiecewiseLinear<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "domain {}: {}", self.space, self.domain.display())?;
        for (i, p) in self.pieces.iter().enumerate() {
            writeln!(f, "  [{i}] {p:?}")?;
        }
        Ok(())
    }
}
