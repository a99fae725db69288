//! A2 weight lattice: Killing form, finite and affine Weyl dot-actions,
//! chamber and alcove membership, and signed folding.
//!
//! Weights are written in the fundamental-weight basis, `(x, y) = x w1 + y w2`.
//! In this basis `a1 = (2, -1)`, `a2 = (-1, 2)`, `theta = rho = (1, 1)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::{Error, Result, Scalar, Q};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Weight<T: Scalar = i64> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Weight<T> {
    pub fn new(x: T, y: T) -> Self {
        Weight { x, y }
    }

    pub fn zero() -> Self {
        Weight::new(T::zero(), T::zero())
    }

    pub fn rho() -> Self {
        Weight::new(T::one(), T::one())
    }

    /// Highest root; equals `rho` for A2.
    pub fn theta() -> Self {
        Weight::rho()
    }

    pub fn alpha1() -> Self {
        Weight::new(int(2), -T::one())
    }

    pub fn alpha2() -> Self {
        Weight::new(-T::one(), int(2))
    }

    pub fn is_dominant(&self) -> bool {
        !self.x.is_negative() && !self.y.is_negative()
    }

    /// `(self, theta) = x + y`.
    pub fn level(&self) -> T {
        self.x.clone() + self.y.clone()
    }

    pub fn in_alcove(&self, level: &Level<T>) -> bool {
        self.is_dominant() && self.level() <= level.0
    }

    /// The involution `-w0`, which swaps the two coordinates.
    pub fn conjugate(&self) -> Self {
        Weight::new(self.y.clone(), self.x.clone())
    }

    /// Whether `self - other` lies in the root lattice.
    pub fn congruent(&self, other: &Self) -> bool {
        let d = self.x.clone() - other.x.clone() + int::<T>(2) * (self.y.clone() - other.y.clone());
        (d % int(3)).is_zero()
    }

    /// `self - i a1 - j a2`.
    pub fn lower(&self, i: &T, j: &T) -> Self {
        Weight::new(
            self.x.clone() - int::<T>(2) * i.clone() + j.clone(),
            self.y.clone() + i.clone() - int::<T>(2) * j.clone(),
        )
    }

    /// Dimension of the irreducible module with this highest weight.
    pub fn dimension(&self) -> T {
        let (a, b) = (self.x.clone(), self.y.clone());
        (a.clone() + T::one()) * (b.clone() + T::one()) * (a + b + int(2)) / int(2)
    }
}

pub(crate) fn int<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("small constant fits scalar")
}

impl<T: Scalar> From<(T, T)> for Weight<T> {
    fn from((x, y): (T, T)) -> Self {
        Weight::new(x, y)
    }
}

impl<T: Scalar> Add for Weight<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Weight::new(self.x + o.x, self.y + o.y)
    }
}

impl<T: Scalar> Sub for Weight<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Weight::new(self.x - o.x, self.y - o.y)
    }
}

impl<T: Scalar> Neg for Weight<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Weight::new(-self.x, -self.y)
    }
}

impl<T: Scalar> fmt::Display for Weight<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A nonnegative level.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Level<T: Scalar = i64>(T);

impl<T: Scalar> Level<T> {
    pub fn new(level: T) -> Result<Self> {
        if level.is_negative() {
            return Err(Error::NegativeLevel(level.to_string()));
        }
        Ok(Level(level))
    }

    pub fn value(&self) -> &T {
        &self.0
    }
}

impl<T: Scalar> fmt::Display for Level<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Killing form normalised so that `(theta, theta) = 2`.
pub fn killing_form<T: Scalar>(v: &Weight<T>, w: &Weight<T>) -> Q<T> {
    let two = int::<T>(2);
    let num = two.clone() * v.x.clone() * w.x.clone()
        + v.x.clone() * w.y.clone()
        + v.y.clone() * w.x.clone()
        + two * v.y.clone() * w.y.clone();
    Q::new(num, int(3))
}

/// Killing form on rational weights.
pub fn killing_form_q<T: Scalar>(v: &(Q<T>, Q<T>), w: &(Q<T>, Q<T>)) -> Q<T> {
    let two = Q::from_integer(int::<T>(2));
    (two.clone() * v.0.clone() * w.0.clone()
        + v.0.clone() * w.1.clone()
        + v.1.clone() * w.0.clone()
        + two * v.1.clone() * w.1.clone())
        / Q::from_integer(int(3))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Generator {
    S0,
    S1,
    S2,
}

impl Generator {
    pub fn from_index(i: usize) -> Result<Self> {
        match i {
            0 => Ok(Generator::S0),
            1 => Ok(Generator::S1),
            2 => Ok(Generator::S2),
            _ => Err(Error::InvalidGenerator(i)),
        }
    }

    pub fn index(self) -> usize {
        match self {
            Generator::S0 => 0,
            Generator::S1 => 1,
            Generator::S2 => 2,
        }
    }
}

/// Plain reflection `s_i` for `i` in {1, 2}.
pub fn apply_simple_reflection<T: Scalar>(i: usize, phi: &Weight<T>) -> Result<Weight<T>> {
    let (x, y) = (phi.x.clone(), phi.y.clone());
    match i {
        1 => Ok(Weight::new(-x.clone(), x + y)),
        2 => Ok(Weight::new(x + y.clone(), -y)),
        _ => Err(Error::InvalidGenerator(i)),
    }
}

/// Shifted action of one generator at level `l`:
/// `s1.(x,y) = (-x-2, x+y+1)`, `s2.(x,y) = (x+y+1, -y-2)`,
/// `s0.(x,y) = (x+t, y+t)` with `t = l+1-x-y`.
pub fn dot_generator<T: Scalar>(g: Generator, phi: &Weight<T>, level: &Level<T>) -> Weight<T> {
    let (x, y) = (phi.x.clone(), phi.y.clone());
    let one = T::one();
    let two = int::<T>(2);
    match g {
        Generator::S1 => Weight::new(-x.clone() - two, x + y + one),
        Generator::S2 => Weight::new(x + y.clone() + one, -y - two),
        Generator::S0 => {
            let t = level.0.clone() + one - x.clone() - y.clone();
            Weight::new(x + t.clone(), y + t)
        }
    }
}

/// A word in the affine Weyl generators. Letters act right to left.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct AffineWeylWord {
    letters: Vec<Generator>,
}

impl AffineWeylWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(letters: Vec<Generator>) -> Self {
        AffineWeylWord { letters }
    }

    pub fn from_indices(idx: &[usize]) -> Result<Self> {
        Ok(AffineWeylWord {
            letters: idx
                .iter()
                .map(|&i| Generator::from_index(i))
                .collect::<Result<_>>()?,
        })
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `(-1)^length`.
    pub fn sign(&self) -> i8 {
        if self.letters.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Prepends `g`, i.e. returns `g * self`.
    pub fn then(&self, g: Generator) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len() + 1);
        letters.push(g);
        letters.extend_from_slice(&self.letters);
        AffineWeylWord { letters }
    }

    pub fn is_finite(&self) -> bool {
        !self.letters.contains(&Generator::S0)
    }
}

impl fmt::Display for AffineWeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "Id");
        }
        for g in &self.letters {
            write!(f, "s{}", g.index())?;
        }
        Ok(())
    }
}

impl std::str::FromStr for AffineWeylWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("id") || s.is_empty() {
            return Ok(Self::identity());
        }
        let bad = || Error::InvalidWord(s.to_string());
        let mut letters = Vec::new();
        let mut chars = s.chars();
        while let Some(c) = chars.next() {
            if c != 's' {
                return Err(bad());
            }
            let d = chars.next().and_then(|d| d.to_digit(10)).ok_or_else(bad)?;
            letters.push(Generator::from_index(d as usize).map_err(|_| bad())?);
        }
        Ok(AffineWeylWord { letters })
    }
}

/// Shifted action `w . phi` by composing generator actions right to left.
pub fn dot_action<T: Scalar>(w: &AffineWeylWord, phi: &Weight<T>, level: &Level<T>) -> Weight<T> {
    w.letters
        .iter()
        .rev()
        .fold(phi.clone(), |acc, &g| dot_generator(g, &acc, level))
}

/// Unshifted affine action at level `k`: `s0(b) = b + (k - (b, theta)) theta`.
fn unshifted<T: Scalar>(g: Generator, beta: &Weight<T>, k: &T) -> Weight<T> {
    match g {
        Generator::S0 => {
            let t = k.clone() - beta.level();
            Weight::new(beta.x.clone() + t.clone(), beta.y.clone() + t)
        }
        Generator::S1 => apply_simple_reflection(1, beta).unwrap(),
        Generator::S2 => apply_simple_reflection(2, beta).unwrap(),
    }
}

/// `w(phi + rho) - rho` with the unshifted group acting at level `l + 3`.
/// Agrees with [`dot_action`]; kept as a second route for cross-checks.
pub fn dot_action_conjugated<T: Scalar>(
    w: &AffineWeylWord,
    phi: &Weight<T>,
    level: &Level<T>,
) -> Weight<T> {
    let k = level.0.clone() + int(3);
    let shifted = phi.clone() + Weight::rho();
    let moved = w
        .letters
        .iter()
        .rev()
        .fold(shifted, |acc, &g| unshifted(g, &acc, &k));
    moved - Weight::rho()
}

/// Outcome of folding a weight under the shifted action.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Fold<T: Scalar = i64> {
    /// `word . phi = weight`, lying strictly inside the shifted region.
    Interior {
        weight: Weight<T>,
        word: AffineWeylWord,
    },
    /// `phi + rho` lies on a reflecting wall.
    Boundary,
}

impl<T: Scalar> Fold<T> {
    pub fn sign(&self) -> i8 {
        match self {
            Fold::Interior { word, .. } => word.sign(),
            Fold::Boundary => 0,
        }
    }

    pub fn weight(&self) -> Option<&Weight<T>> {
        match self {
            Fold::Interior { weight, .. } => Some(weight),
            Fold::Boundary => None,
        }
    }
}

/// Order in which violated walls are reflected away. The result does not
/// depend on it; the choice exists so that can be tested.
pub const GREEDY: [Generator; 3] = [Generator::S1, Generator::S2, Generator::S0];

/// Folds `phi` into the dominant chamber under the shifted finite Weyl
/// group.
pub fn fold_to_chamber<T: Scalar>(phi: &Weight<T>) -> Fold<T> {
    fold(phi, None, &GREEDY)
}

/// Folds `phi` into the level-`l` alcove under the shifted affine Weyl
/// group.
pub fn fold_to_alcove<T: Scalar>(phi: &Weight<T>, level: &Level<T>) -> Fold<T> {
    fold(phi, Some(level), &GREEDY)
}

/// [`fold_to_alcove`] with an explicit wall-processing order.
pub fn fold_to_alcove_ordered<T: Scalar>(
    phi: &Weight<T>,
    level: &Level<T>,
    order: &[Generator; 3],
) -> Fold<T> {
    fold(phi, Some(level), order)
}

fn fold<T: Scalar>(phi: &Weight<T>, level: Option<&Level<T>>, order: &[Generator; 3]) -> Fold<T> {
    // stand-in level for the finite case; S0 is never applied there
    let dummy = Level(T::zero());
    let lv = level.unwrap_or(&dummy);
    let mut cur = phi.clone();
    let mut word = AffineWeylWord::identity();
    loop {
        // walls of the shifted region, evaluated at cur + rho
        let w1 = cur.x.clone() + T::one();
        let w2 = cur.y.clone() + T::one();
        let w0 = level.map(|l| l.0.clone() + int::<T>(3) - cur.level() - int::<T>(2));
        if w1.is_zero() || w2.is_zero() || w0.as_ref().is_some_and(Zero::is_zero) {
            return Fold::Boundary;
        }
        let violated = |g: &Generator| match g {
            Generator::S1 => w1.is_negative(),
            Generator::S2 => w2.is_negative(),
            Generator::S0 => w0.as_ref().is_some_and(Signed::is_negative),
        };
        match order.iter().find(|g| violated(g)) {
            Some(&g) => {
                cur = dot_generator(g, &cur, lv);
                word = word.then(g);
            }
            None => return Fold::Interior { weight: cur, word },
        }
    }
}

/// Plain (unshifted) Weyl action folding into the dominant chamber.
pub fn dominant_representative<T: Scalar>(phi: &Weight<T>) -> Weight<T> {
    let mut cur = phi.clone();
    loop {
        if cur.x.is_negative() {
            cur = Weight::new(-cur.x.clone(), cur.x.clone() + cur.y.clone());
        } else if cur.y.is_negative() {
            cur = Weight::new(cur.x.clone() + cur.y.clone(), -cur.y.clone());
        } else {
            return cur;
        }
    }
}

/// The six elements of the finite Weyl group.
pub fn finite_weyl_group() -> Vec<AffineWeylWord> {
    ["Id", "s1", "s2", "s1s2", "s2s1", "s1s2s1"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

/// Convenience for tests and callers holding plain integers.
pub fn level<T: Scalar>(l: T) -> Level<T> {
    Level::new(l).expect("nonnegative level")
}

impl<T: Scalar> Weight<T> {
    pub fn as_rational(&self) -> (Q<T>, Q<T>) {
        (
            Q::from_integer(self.x.clone()),
            Q::from_integer(self.y.clone()),
        )
    }
}
