//! Level-l fusion coefficients by Kac-Walton folding.

use std::collections::BTreeMap;

use crate::multiplicity::{mult, weight_diagram};
use crate::rootsystem::{dot_action, fold_to_alcove, AffineWeylWord, Fold, Level, Weight};
use crate::tensor::CoefficientTable;
use crate::{Error, Result, Scalar};

/// A fusion triple at a fixed level, all weights in the alcove.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FusionQuery<T: Scalar = i64> {
    lambda: Weight<T>,
    mu: Weight<T>,
    nu: Weight<T>,
    level: Level<T>,
}

pub(crate) fn require_alcove<T: Scalar>(w: &Weight<T>, level: &Level<T>) -> Result<()> {
    if w.in_alcove(level) {
        Ok(())
    } else {
        Err(Error::OutsideAlcove {
            weight: w.to_string(),
            level: level.to_string(),
        })
    }
}

impl<T: Scalar> FusionQuery<T> {
    pub fn new(lambda: Weight<T>, mu: Weight<T>, nu: Weight<T>, level: Level<T>) -> Result<Self> {
        for w in [&lambda, &mu, &nu] {
            require_alcove(w, &level)?;
        }
        Ok(FusionQuery {
            lambda,
            mu,
            nu,
            level,
        })
    }

    pub fn lambda(&self) -> &Weight<T> {
        &self.lambda
    }

    pub fn mu(&self) -> &Weight<T> {
        &self.mu
    }

    pub fn nu(&self) -> &Weight<T> {
        &self.nu
    }

    pub fn level(&self) -> &Level<T> {
        &self.level
    }
}

/// How a fusion coefficient is evaluated.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum FusionMode {
    /// Fold every weight of the shifted diagram into the alcove.
    #[default]
    Fold,
    /// Sum over the thirteen contributing alcoves only.
    Alcoves,
}

const CONTRIBUTING: [&str; 13] = [
    "s0s2s0", "s0s1s0", "s1s2s1", "s0s2", "s0s1", "s2s0", "s1s0", "s2s1", "s1s2", "s0", "s2", "s1",
    "Id",
];

/// The thirteen affine Weyl elements whose alcoves can meet a shifted
/// weight diagram, longest first.
pub fn contributing_alcoves() -> Vec<AffineWeylWord> {
    CONTRIBUTING.iter().map(|s| s.parse().unwrap()).collect()
}

/// All weights of the level-`l` alcove, sorted.
pub fn alcove_weights<T: Scalar>(level: &Level<T>) -> Vec<Weight<T>> {
    let l = level.value().to_usize().expect("level fits in memory");
    let mut out = Vec::with_capacity((l + 1) * (l + 2) / 2);
    for x in 0..=l {
        for y in 0..=l - x {
            out.push(Weight::new(
                T::from_usize(x).unwrap(),
                T::from_usize(y).unwrap(),
            ));
        }
    }
    out
}

/// `sum_w sgn(w) m_lambda(w . nu - mu)` over the contributing alcoves.
/// Inputs are not range-checked.
pub fn alcove_sum<T: Scalar>(
    words: &[AffineWeylWord],
    lambda: &Weight<T>,
    mu: &Weight<T>,
    nu: &Weight<T>,
    level: &Level<T>,
) -> T {
    words.iter().fold(T::zero(), |acc, w| {
        let m = mult(lambda, &(dot_action(w, nu, level) - mu.clone()));
        if w.sign() > 0 {
            acc + m
        } else {
            acc - m
        }
    })
}

/// Fusion coefficient by the thirteen-alcove sum.
pub fn fusion_coefficient<T: Scalar>(q: &FusionQuery<T>) -> T {
    let n = alcove_sum(&contributing_alcoves(), &q.lambda, &q.mu, &q.nu, &q.level);
    assert!(!n.is_negative(), "negative fusion coefficient");
    n
}

/// Fusion coefficient read off a full folding run.
pub fn fusion_coefficient_folding<T: Scalar>(q: &FusionQuery<T>) -> T {
    fold_decomposition(&q.lambda, &q.mu, &q.level).get(&q.nu)
}

fn fold_decomposition<T: Scalar>(
    lambda: &Weight<T>,
    mu: &Weight<T>,
    level: &Level<T>,
) -> CoefficientTable<T> {
    let mut acc: BTreeMap<Weight<T>, T> = BTreeMap::new();
    for (phi, m) in weight_diagram(lambda) {
        if let Fold::Interior { weight, word } = fold_to_alcove(&(phi + mu.clone()), level) {
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

/// Level-`l` fusion product of `V(lambda)` and `V(mu)` by folding.
pub fn fusion_decomposition<T: Scalar>(
    lambda: &Weight<T>,
    mu: &Weight<T>,
    level: &Level<T>,
) -> Result<CoefficientTable<T>> {
    fusion_decomposition_with(FusionMode::Fold, lambda, mu, level)
}

pub fn fusion_decomposition_with<T: Scalar>(
    mode: FusionMode,
    lambda: &Weight<T>,
    mu: &Weight<T>,
    level: &Level<T>,
) -> Result<CoefficientTable<T>> {
    require_alcove(lambda, level)?;
    require_alcove(mu, level)?;
    Ok(match mode {
        FusionMode::Fold => fold_decomposition(lambda, mu, level),
        FusionMode::Alcoves => {
            let words = contributing_alcoves();
            let raw = alcove_weights(level)
                .into_iter()
                .map(|nu| {
                    let n = alcove_sum(&words, lambda, mu, &nu, level);
                    (nu, n)
                })
                .filter(|(_, n)| !n.is_zero())
                .collect();
            CoefficientTable::from_signed(raw)
        }
    })
}
