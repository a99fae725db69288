//! Tensor product decomposition by Racah-Speiser folding.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::multiplicity::{mult, weight_diagram};
use crate::rootsystem::{dot_generator, finite_weyl_group, fold_to_chamber, Fold, Level, Weight};
use crate::{Error, Result, Scalar};

/// Nonzero coefficients keyed by highest weight, sorted by `(e, f)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CoefficientTable<T: Scalar = i64> {
    entries: BTreeMap<Weight<T>, T>,
}

impl<T: Scalar> CoefficientTable<T> {
    /// Builds a table from signed accumulations, dropping zeros.
    ///
    /// # Panics
    /// If any accumulated coefficient is negative.
    pub fn from_signed(raw: BTreeMap<Weight<T>, T>) -> Self {
        let entries = raw
            .into_iter()
            .filter(|(nu, n)| {
                assert!(!n.is_negative(), "negative coefficient {n} at {nu}");
                !n.is_zero()
            })
            .collect();
        CoefficientTable { entries }
    }

    pub fn get(&self, nu: &Weight<T>) -> T {
        self.entries.get(nu).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight<T>, &T)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &BTreeMap<Weight<T>, T> {
        &self.entries
    }

    /// Keeps only the entries whose weight satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Weight<T>) -> bool) -> Self {
        CoefficientTable {
            entries: self
                .entries
                .iter()
                .filter(|(nu, _)| keep(nu))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// `sum N * dim V(nu)`.
    pub fn total_dimension(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, (nu, n)| acc + n.clone() * nu.dimension())
    }

    /// `[{"nu": [e, f], "N": n}, ...]` sorted by weight.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|(nu, n)| json!({"nu": nu.to_json(), "N": scalar_to_json(n)}))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Json(format!("not a coefficient table: {v}"));
        let mut entries = BTreeMap::new();
        for item in v.as_array().ok_or_else(bad)? {
            let nu = Weight::from_json(item.get("nu").ok_or_else(bad)?)?;
            let n = scalar_from_json(item.get("N").ok_or_else(bad)?)?;
            entries.insert(nu, n);
        }
        Ok(CoefficientTable::from_signed(entries))
    }
}

pub(crate) fn scalar_to_json<T: Scalar>(v: &T) -> Value {
    match v.to_i64() {
        Some(i) => Value::from(i),
        None => Value::String(v.to_string()),
    }
}

pub(crate) fn scalar_from_json<T: Scalar>(v: &Value) -> Result<T> {
    let bad = || Error::Json(format!("not an integer: {v}"));
    match v {
        Value::Number(n) => T::from_i64(n.as_i64().ok_or_else(bad)?).ok_or_else(bad),
        Value::String(s) => s.parse().map_err(|_| bad()),
        _ => Err(bad()),
    }
}

impl<T: Scalar> Weight<T> {
    pub fn to_json(&self) -> Value {
        json!([scalar_to_json(&self.x), scalar_to_json(&self.y)])
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        match v.as_array().map(Vec::as_slice) {
            Some([x, y]) => Ok(Weight::new(scalar_from_json(x)?, scalar_from_json(y)?)),
            _ => Err(Error::Json(format!("weight must be [x, y], got {v}"))),
        }
    }
}

/// Finite Weyl group under the shifted action, as `(sign, w . nu)`.
fn finite_orbit<T: Scalar>(nu: &Weight<T>) -> impl Iterator<Item = (i8, Weight<T>)> + '_ {
    let dummy = Level::new(T::zero()).unwrap();
    finite_weyl_group().into_iter().map(move |w| {
        let image = w
            .letters()
            .iter()
            .rev()
            .fold(nu.clone(), |acc, &g| dot_generator(g, &acc, &dummy));
        (w.sign(), image)
    })
}

/// `N_{lambda mu}^nu = sum_w sgn(w) m_lambda(w . nu - mu)` over the six
/// finite Weyl elements. All three weights must be dominant.
pub fn tensor_coefficient<T: Scalar>(lambda: &Weight<T>, mu: &Weight<T>, nu: &Weight<T>) -> T {
    let n = finite_orbit(nu).fold(T::zero(), |acc, (s, image)| {
        let m = mult(lambda, &(image - mu.clone()));
        if s > 0 {
            acc + m
        } else {
            acc - m
        }
    });
    assert!(!n.is_negative(), "negative tensor coefficient");
    n
}

/// Decomposes `V(lambda) (x) V(mu)`: each weight of `V(lambda)` is shifted
/// by `mu` and folded into the dominant chamber, carrying its multiplicity
/// with the sign of the folding word.
pub fn tensor_decomposition<T: Scalar>(lambda: &Weight<T>, mu: &Weight<T>) -> CoefficientTable<T> {
    let mut acc: BTreeMap<Weight<T>, T> = BTreeMap::new();
    for (phi, m) in weight_diagram(lambda) {
        if let Fold::Interior { weight, word } = fold_to_chamber(&(phi + mu.clone())) {
            let slot = acc.entry(weight).or_insert_with(T::zero);
            *slot = if word.sign() > 0 {
                slot.clone() + m
            } else {
                slot.clone() - m
            };
        }
    }
    CoefficientTable::from_signed(acc)
}
