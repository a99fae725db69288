//! Ambient variable tuples, affine forms, and affine substitutions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::{Error, Result, Scalar, Q};

/// An ordered tuple of variable names. Two spaces are equal iff their names
/// match in order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Space {
    names: Arc<[String]>,
}

impl Space {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Space {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The space with variable `idx` removed.
    pub fn without(&self, idx: usize) -> Space {
        let names: Vec<&String> = self
            .names
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, n)| n)
            .collect();
        Space::new(&names)
    }

    pub(crate) fn check_same(&self, other: &Space) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left: format!("{self}"),
                right: format!("{other}"),
            })
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.names.join(","))
    }
}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Space{self}")
    }
}

/// `coeffs . p + constant` with exact rational coefficients.
///
/// Forms don't carry their [`Space`]; the containers that hold them do, and
/// they refuse to mix forms across different spaces.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm<T: Scalar> {
    coeffs: Vec<Q<T>>,
    constant: Q<T>,
}

impl<T: Scalar> LinearForm<T> {
    pub fn new(coeffs: Vec<Q<T>>, constant: Q<T>) -> Self {
        LinearForm { coeffs, constant }
    }

    /// Builds a form from integer coefficients, the last entry being the
    /// constant.
    pub fn from_ints(row: &[i64]) -> Self {
        let (c, coeffs) = row.split_last().expect("row needs a constant");
        LinearForm {
            coeffs: coeffs.iter().map(|&v| q_int(v)).collect(),
            constant: q_int(*c),
        }
    }

    pub fn zero(dim: usize) -> Self {
        LinearForm {
            coeffs: vec![Q::zero(); dim],
            constant: Q::zero(),
        }
    }

    pub fn constant_form(dim: usize, c: Q<T>) -> Self {
        LinearForm {
            coeffs: vec![Q::zero(); dim],
            constant: c,
        }
    }

    /// The coordinate function `p -> p[idx]`.
    pub fn var(dim: usize, idx: usize) -> Self {
        let mut f = Self::zero(dim);
        f.coeffs[idx] = Q::one();
        f
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Q<T>] {
        &self.coeffs
    }

    pub fn constant(&self) -> &Q<T> {
        &self.constant
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, point: &[Q<T>]) -> Q<T> {
        assert_eq!(point.len(), self.dim(), "point dimension");
        self.coeffs
            .iter()
            .zip(point)
            .fold(self.constant.clone(), |acc, (c, x)| {
                acc + c.clone() * x.clone()
            })
    }

    pub fn scale(&self, k: &Q<T>) -> Self {
        LinearForm {
            coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect(),
            constant: self.constant.clone() * k.clone(),
        }
    }

    /// Positive rescaling to a primitive integer vector (gcd 1 over all
    /// entries, constant included). The zero form is returned unchanged.
    /// A constant-only form is rescaled to -1, 0 or 1.
    pub fn primitive(&self) -> Self {
        let lcm = self.entries().fold(T::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<T> = self
            .entries()
            .map(|q| q.numer().clone() * (lcm.clone() / q.denom().clone()))
            .collect();
        let g = ints.iter().fold(T::zero(), |acc, v| acc.gcd(v));
        if g.is_zero() {
            return self.clone();
        }
        let mut ints: Vec<Q<T>> = ints
            .into_iter()
            .map(|v| Q::from_integer(v / g.clone()))
            .collect();
        let constant = ints.pop().unwrap();
        LinearForm {
            coeffs: ints,
            constant,
        }
    }

    /// Integer row `[coeffs..., constant]` of the primitive rescaling.
    pub fn integer_row(&self) -> Vec<T> {
        self.primitive().entries().map(|q| q.to_integer()).collect()
    }

    fn entries(&self) -> impl Iterator<Item = &Q<T>> {
        self.coeffs.iter().chain(std::iter::once(&self.constant))
    }

    /// `self` with each variable replaced by the corresponding form of
    /// `map`, producing a form over the map's target space.
    pub fn substitute(&self, map: &AffineMap<T>) -> Self {
        assert_eq!(map.images.len(), self.dim(), "substitution arity");
        let mut out = LinearForm::constant_form(map.target.dim(), self.constant.clone());
        for (c, img) in self.coeffs.iter().zip(&map.images) {
            if !c.is_zero() {
                out = out + img.scale(c);
            }
        }
        out
    }

    /// Drops coordinate `idx` after substituting `p[idx] = repl(p)`, where
    /// `repl` is a form in which coordinate `idx` has coefficient zero.
    pub(crate) fn eliminate(&self, idx: usize, repl: &LinearForm<T>) -> Self {
        let c = self.coeffs[idx].clone();
        let mut full = self.clone();
        full.coeffs[idx] = Q::zero();
        if !c.is_zero() {
            full = full + repl.scale(&c);
        }
        full.coeffs.remove(idx);
        full
    }

    /// Renders using the variable names of `space`.
    pub fn display<'a>(&'a self, space: &'a Space) -> DisplayForm<'a, T> {
        DisplayForm { form: self, space }
    }
}

fn q_int<T: Scalar>(v: i64) -> Q<T> {
    Q::from_integer(T::from_i64(v).expect("i64 fits scalar"))
}

impl<T: Scalar> Add for LinearForm<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.dim(), rhs.dim(), "form dimension");
        LinearForm {
            coeffs: self
                .coeffs
                .into_iter()
                .zip(rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
            constant: self.constant + rhs.constant,
        }
    }
}

impl<T: Scalar> Sub for LinearForm<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for LinearForm<T> {
    type Output = Self;
    fn neg(self) -> Self {
        LinearForm {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
            constant: -self.constant,
        }
    }
}

impl<T: Scalar> Mul<Q<T>> for LinearForm<T> {
    type Output = Self;
    fn mul(self, k: Q<T>) -> Self {
        self.scale(&k)
    }
}

impl<T: Scalar> fmt::Debug for LinearForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; {}]", self.constant)
    }
}

pub struct DisplayForm<'a, T: Scalar> {
    form: &'a LinearForm<T>,
    space: &'a Space,
}

impl<T: Scalar> fmt::Display for DisplayForm<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let terms = self
            .form
            .coeffs
            .iter()
            .zip(self.space.names())
            .filter(|(c, _)| !c.is_zero());
        for (c, name) in terms {
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "({mag}){name}")?;
            }
            first = false;
        }
        let k = &self.form.constant;
        if first {
            write!(f, "{k}")
        } else if k.is_zero() {
            Ok(())
        } else if k.is_negative() {
            write!(f, " - {}", k.abs())
        } else {
            write!(f, " + {k}")
        }
    }
}

/// An affine map given by one form per source variable, each over the
/// target space: `source_var_i = images[i](target point)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap<T: Scalar> {
    pub(crate) source: Space,
    pub(crate) target: Space,
    pub(crate) images: Vec<LinearForm<T>>,
}

impl<T: Scalar> AffineMap<T> {
    pub fn new(source: Space, target: Space, images: Vec<LinearForm<T>>) -> Result<Self> {
        if images.len() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: source.dim(),
                got: images.len(),
            });
        }
        if let Some(bad) = images.iter().find(|f| f.dim() != target.dim()) {
            return Err(Error::DimensionMismatch {
                expected: target.dim(),
                got: bad.dim(),
            });
        }
        Ok(AffineMap {
            source,
            target,
            images,
        })
    }

    pub fn identity(space: Space) -> Self {
        let images = (0..space.dim())
            .map(|i| LinearForm::var(space.dim(), i))
            .collect();
        AffineMap {
            source: space.clone(),
            target: space,
            images,
        }
    }

    pub fn source(&self) -> &Space {
        &self.source
    }

    pub fn target(&self) -> &Space {
        &self.target
    }

    pub fn images(&self) -> &[LinearForm<T>] {
        &self.images
    }

    /// Image of a target point in the source space.
    pub fn apply(&self, point: &[Q<T>]) -> Vec<Q<T>> {
        self.images.iter().map(|f| f.eval(point)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F = LinearForm<i64>;

    fn q(n: i64, d: i64) -> Q<i64> {
        Q::new(n, d)
    }

    #[test]
    fn primitive_clears_denominators_and_gcd() {
        let f = F::new(vec![q(2, 3), q(-4, 3)], q(2, 1));
        assert_eq!(f.integer_row(), vec![1, -2, 3]);
        let g = F::constant_form(2, q(-5, 7));
        assert_eq!(g.integer_row(), vec![0, 0, -1]);
        assert!(F::zero(3).primitive().is_zero());
    }

    #[test]
    fn substitute_composes() {
        let src = Space::new(&["x", "y"]);
        let tgt = Space::new(&["u", "v", "w"]);
        // x = u - v + 1, y = 2w
        let map = AffineMap::new(
            src,
            tgt,
            vec![F::from_ints(&[1, -1, 0, 1]), F::from_ints(&[0, 0, 2, 0])],
        )
        .unwrap();
        // 3x + y - 2 -> 3u - 3v + 2w + 1
        let f = F::from_ints(&[3, 1, -2]);
        assert_eq!(f.substitute(&map), F::from_ints(&[3, -3, 2, 1]));
    }

    #[test]
    fn display_uses_names() {
        let s = Space::new(&["x", "y", "a"]);
        let f = F::new(vec![q(-1, 3), q(0, 1), q(1, 1)], q(-3, 1));
        assert_eq!(f.display(&s).to_string(), "-(1/3)x + a - 3");
        assert_eq!(F::zero(3).display(&s).to_string(), "0");
    }

    #[test]
    fn mismatched_map_rejected() {
        let err = AffineMap::<i64>::new(Space::new(&["x"]), Space::new(&["u"]), vec![]);
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }
}
