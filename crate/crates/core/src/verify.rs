//! Exhaustive numeric comparison of the three fusion routes.

use rayon::prelude::*;

use crate::bmw::bmw_g;
use crate::fusion::{alcove_sum, alcove_weights, contributing_alcoves, fusion_decomposition};
use crate::rootsystem::{level, Weight};

/// Which pair of routes disagreed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Disagreement {
    /// Full folding against the thirteen-alcove sum.
    FoldVsAlcoves,
    /// Thirteen-alcove sum against the closed formula.
    AlcovesVsClosedForm,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mismatch {
    pub kind: Disagreement,
    pub level: i64,
    pub lambda: Weight,
    pub mu: Weight,
    pub nu: Weight,
    pub fold: i64,
    pub alcoves: i64,
    pub closed_form: i64,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SweepReport {
    pub max_level: i64,
    /// Number of `(lambda, mu, nu, l)` checked.
    pub triples: u64,
    /// Every disagreement, ordered by level, then `lambda`, `mu`, `nu`.
    pub mismatches: Vec<Mismatch>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn count(&self, kind: Disagreement) -> usize {
        self.mismatches.iter().filter(|m| m.kind == kind).count()
    }
}

/// Checks every triple in the level-`l` alcove for `l <= max_level`.
/// Runs on the current rayon pool; output does not depend on its size.
pub fn sweep(max_level: i64) -> SweepReport {
    let words = contributing_alcoves();
    let mut tasks = Vec::new();
    for l in 0..=max_level {
        let alcove = alcove_weights(&level(l));
        for lambda in &alcove {
            for mu in &alcove {
                tasks.push((l, lambda.clone(), mu.clone()));
            }
        }
    }
    let per_task: Vec<(u64, Vec<Mismatch>)> = tasks
        .par_iter()
        .map(|(l, lambda, mu)| {
            let lv = level(*l);
            let folded = fusion_decomposition(lambda, mu, &lv).expect("weights lie in the alcove");
            let mut bad = Vec::new();
            let mut n = 0;
            for nu in alcove_weights(&lv) {
                n += 1;
                let fold = folded.get(&nu);
                let alcoves = alcove_sum(&words, lambda, mu, &nu, &lv);
                let closed_form = bmw_g(lambda, mu, &nu, Some(&lv));
                let mut push = |kind| {
                    bad.push(Mismatch {
                        kind,
                        level: *l,
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                        nu: nu.clone(),
                        fold,
                        alcoves,
                        closed_form,
                    })
                };
                if fold != alcoves {
                    push(Disagreement::FoldVsAlcoves);
                }
                if alcoves != closed_form {
                    push(Disagreement::AlcovesVsClosedForm);
                }
            }
            (n, bad)
        })
        .collect();
    let mut report = SweepReport {
        max_level,
        ..Default::default()
    };
    for (n, bad) in per_task {
        report.triples += n;
        report.mismatches.extend(bad);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_is_clean() {
        let r = sweep(4);
        assert_eq!(r.triples, 1 + 27 + 216 + 1000 + 3375);
        assert!(r.passed(), "{:?}", r.mismatches.first());
    }
}
