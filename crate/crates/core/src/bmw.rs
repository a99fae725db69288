//! Closed formulas of Begin, Mathieu and Walton for A2 tensor and fusion
//! coefficients.
//!
//! With `lambda = (a, b)`, `mu = (c, d)`, `nu = (e, f)`:
//!
//! ```text
//! A      = (2(a+c+f) + (b+d+e)) / 3
//! B      = ((a+c+f) + 2(b+d+e)) / 3
//! k0min  = max{a+b, c+d, e+f, A - min(a,c,f), B - min(b,d,e)}
//! k0max  = min{A, B}
//! l0max  = min{A, B, l}
//! ```

use num_traits::Signed;
use serde_json::{json, Value};

use crate::fusion::require_alcove;
use crate::rootsystem::{int, Level, Weight};
use crate::tensor::scalar_to_json;
use crate::{Result, Scalar, Q};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BmwIntermediates<T: Scalar = i64> {
    pub a: Q<T>,
    pub b: Q<T>,
    pub k0min: Q<T>,
    pub k0max: Q<T>,
    /// `None` when no level is imposed.
    pub l0max: Option<Q<T>>,
    pub delta: bool,
}

impl<T: Scalar> BmwIntermediates<T> {
    pub fn integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    /// Tensor coefficient `(k0max - k0min + 1) delta`.
    pub fn tensor(&self) -> T {
        if !self.delta {
            return T::zero();
        }
        let n = self.k0max.clone() - self.k0min.clone() + Q::from_integer(T::one());
        assert!(n.is_integer(), "non-integral tensor value");
        n.to_integer()
    }

    /// `max(0, l0max - k0min + 1)`, or 0 off the root lattice.
    pub fn g(&self) -> T {
        if !self.integral() {
            return T::zero();
        }
        let top = self.l0max.clone().unwrap_or_else(|| self.k0max.clone());
        let n = top - self.k0min.clone() + Q::from_integer(T::one());
        assert!(n.is_integer(), "non-integral G value");
        if n.is_negative() {
            T::zero()
        } else {
            n.to_integer()
        }
    }

    /// `{"A", "B", "k0min", "k0max", "l0max", "delta", "N"}`. Rationals are
    /// strings (`"2/3"`, or `"9"` when integral); `delta` and `N` are numbers.
    pub fn to_json(&self, n: &T) -> Value {
        let s = |q: &Q<T>| Value::String(q.to_string());
        json!({
            "A": s(&self.a),
            "B": s(&self.b),
            "k0min": s(&self.k0min),
            "k0max": s(&self.k0max),
            "l0max": self.l0max.as_ref().map_or(Value::Null, s),
            "delta": u8::from(self.delta),
            "N": scalar_to_json(n),
        })
    }
}

fn intermediates<T: Scalar>(
    lambda: &Weight<T>,
    mu: &Weight<T>,
    nu: &Weight<T>,
    level: Option<&T>,
) -> BmwIntermediates<T> {
    let (a, b) = (lambda.x.clone(), lambda.y.clone());
    let (c, d) = (mu.x.clone(), mu.y.clone());
    let (e, f) = (nu.x.clone(), nu.y.clone());
    let q = |v: T| Q::from_integer(v);
    let odd = a.clone() + c.clone() + f.clone();
    let even = b.clone() + d.clone() + e.clone();
    let three = int::<T>(3);
    let two = int::<T>(2);
    let big_a = Q::new(two.clone() * odd.clone() + even.clone(), three.clone());
    let big_b = Q::new(odd + two * even, three);
    let min_acf = a.clone().min(c.clone()).min(f.clone());
    let min_bde = b.clone().min(d.clone()).min(e.clone());
    let k0min = [
        q(a + b),
        q(c + d),
        q(e + f),
        big_a.clone() - q(min_acf),
        big_b.clone() - q(min_bde),
    ]
    .into_iter()
    .max()
    .unwrap();
    let k0max = big_a.clone().min(big_b.clone());
    let l0max = level.map(|l| k0max.clone().min(q(l.clone())));
    let nonneg_int = |v: &Q<T>| v.is_integer() && !v.is_negative();
    let delta = k0max >= k0min && nonneg_int(&big_a) && nonneg_int(&big_b);
    BmwIntermediates {
        a: big_a,
        b: big_b,
        k0min,
        k0max,
        l0max,
        delta,
    }
}

pub fn bmw_intermediates<T: Scalar>(
    lambda: &Weight<T>,
    mu: &Weight<T>,
    nu: &Weight<T>,
    level: &Level<T>,
) -> BmwIntermediates<T> {
    intermediates(lambda, mu, nu, Some(level.value()))
}

/// Intermediates without a level; `l0max` is `None`.
pub fn bmw_intermediates_unbounded<T: Scalar>(
    lambda: &Weight<T>,
    mu: &Weight<T>,
    nu: &Weight<T>,
) -> BmwIntermediates<T> {
    intermediates(lambda, mu, nu, None)
}

/// Tensor coefficient for dominant weights.
pub fn bmw_tensor<T: Scalar>(lambda: &Weight<T>, mu: &Weight<T>, nu: &Weight<T>) -> T {
    bmw_intermediates_unbounded(lambda, mu, nu).tensor()
}

/// `G(lambda, mu, nu, l)`; a missing level means no truncation.
pub fn bmw_g<T: Scalar>(
    lambda: &Weight<T>,
    mu: &Weight<T>,
    nu: &Weight<T>,
    level: Option<&Level<T>>,
) -> T {
    intermediates(lambda, mu, nu, level.map(Level::value)).g()
}

/// Fusion coefficient for weights in the level-`l` alcove.
pub fn bmw_fusion<T: Scalar>(
    lambda: &Weight<T>,
    mu: &Weight<T>,
    nu: &Weight<T>,
    level: &Level<T>,
) -> Result<T> {
    for w in [lambda, mu, nu] {
        require_alcove(w, level)?;
    }
    Ok(bmw_g(lambda, mu, nu, Some(level)))
}

/// The same coefficient in the original case form:
/// `min(k0max, l) - k0min + 1` if `l >= k0min` and the tensor coefficient
/// is positive, otherwise 0.
pub fn bmw_fusion_cases<T: Scalar>(
    lambda: &Weight<T>,
    mu: &Weight<T>,
    nu: &Weight<T>,
    level: &Level<T>,
) -> T {
    let im = bmw_intermediates_unbounded(lambda, mu, nu);
    let l = Q::from_integer(level.value().clone());
    if im.tensor().is_zero() || l < im.k0min {
        return T::zero();
    }
    let n = im.k0max.min(l) - im.k0min + Q::from_integer(T::one());
    assert!(n.is_integer(), "non-integral fusion value");
    n.to_integer()
}
