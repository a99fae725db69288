//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runs without the libtest harness so the lines always
//! show.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use a2_fusion::fusion::alcove_weights;
use a2_fusion::multiplicity::mult_piecewise;
use a2_fusion::rootsystem::level;
use a2_fusion::symbolic::{alcove_term, symbolic_domain};
use a2_fusion::verify::{sweep, Disagreement, SweepReport};
use a2_fusion::{
    bmw_symbolic, compare_piecewise, freudenthal_diagram, fusion_coefficient, fusion_decomposition,
    mult, mult_table, symbolic_kac_walton, tensor_coefficient, tensor_decomposition,
    weight_diagram, FusionQuery, Weight, Q,
};
use polycone::{Cone, PiecewiseLinear};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type W = Weight<i64>;

fn w(x: i64, y: i64) -> W {
    Weight::new(x, y)
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn table(entries: &[((i64, i64), i64)]) -> BTreeMap<W, i64> {
    entries.iter().map(|&((x, y), n)| (w(x, y), n)).collect()
}

fn tensor_figure() -> Outcome {
    let start = Instant::now();
    let got = tensor_decomposition(&w(4, 2), &w(3, 1));
    let elapsed = start.elapsed();
    let mut want: Vec<((i64, i64), i64)> = [
        (0, 5),
        (1, 3),
        (1, 6),
        (2, 1),
        (3, 5),
        (4, 0),
        (5, 4),
        (7, 0),
        (7, 3),
        (8, 1),
    ]
    .iter()
    .map(|&p| (p, 1))
    .collect();
    want.extend(
        [(2, 4), (3, 2), (4, 3), (5, 1), (6, 2)]
            .iter()
            .map(|&p| (p, 2)),
    );
    let ok = got.entries() == &table(&want) && elapsed < Duration::from_secs(1);
    let detail = format!("{} weights, {elapsed:.1?}", got.len());
    if ok {
        pass(detail)
    } else {
        fail(format!("{detail}: got {:?}", got.entries()))
    }
}

fn fusion_figure() -> Outcome {
    let start = Instant::now();
    let got = fusion_decomposition(&w(4, 2), &w(3, 1), &level(7)).unwrap();
    let elapsed = start.elapsed();
    let mut want: Vec<((i64, i64), i64)> = [(0, 5), (1, 3), (1, 6), (2, 1), (4, 0), (4, 3), (5, 1)]
        .iter()
        .map(|&p| (p, 1))
        .collect();
    want.extend([(2, 4), (3, 2)].iter().map(|&p| (p, 2)));
    let ok = got.entries() == &table(&want) && elapsed < Duration::from_secs(1);
    let detail = format!("{} weights, {elapsed:.1?}", got.len());
    if ok {
        pass(detail)
    } else {
        fail(format!("{detail}: got {:?}", got.entries()))
    }
}

fn main_proposition(report: &SweepReport, elapsed: Duration) -> Outcome {
    let bad = report.count(Disagreement::AlcovesVsClosedForm);
    let detail = format!(
        "{} triples over levels 0..={}, {bad} mismatches, {elapsed:.1?} on one thread (shared with criterion 4)",
        report.triples, report.max_level
    );
    if bad == 0 && elapsed < Duration::from_secs(300) {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn alcove_lemma(report: &SweepReport) -> Outcome {
    let bad = report.count(Disagreement::FoldVsAlcoves);
    let detail = format!("{} triples, {bad} mismatches", report.triples);
    if bad == 0 {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn symbolic_proof() -> Outcome {
    let start = Instant::now();
    let kw = symbolic_kac_walton::<i128>().unwrap();
    let bmw = bmw_symbolic::<i128>().unwrap();
    let cmp = compare_piecewise(&kw.function, &bmw).unwrap();
    let elapsed = start.elapsed();
    let detail = format!(
        "{} nonzero and {} zero pieces, equivalent = {}, identical pieces = {}, {elapsed:.1?}",
        kw.nonzero_count,
        kw.zero_count,
        cmp.equivalent(),
        cmp.pieces_match()
    );
    if kw.nonzero_count == 27 && cmp.equivalent() && elapsed < Duration::from_secs(1800) {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn multiplicity_oracles() -> Outcome {
    let t = mult_table::<i64>().unwrap();
    let mut checked = 0;
    for n in 0..=8 {
        for a in 0..=n {
            let lam = w(a, n - a);
            let fd = freudenthal_diagram(&lam);
            if fd != weight_diagram(&lam) {
                return fail(format!("Freudenthal differs for {lam}"));
            }
            // whole parallelogram, including the zero-multiplicity weights
            for i in 0..=n {
                for j in 0..=n {
                    let phi = lam.lower(&i, &j);
                    let m = mult(&lam, &phi);
                    let f = fd.get(&phi).copied().unwrap_or(0);
                    let p = mult_piecewise(&t, &lam, &phi).unwrap();
                    if m != f || m != p {
                        return fail(format!(
                            "{lam} at {phi}: closed {m}, Freudenthal {f}, table {p}"
                        ));
                    }
                    checked += 1;
                }
            }
        }
    }
    pass(format!("{checked} weights over all a+b <= 8"))
}

fn property_suites() -> Outcome {
    let dim = |v: &W| v.dimension();
    for n in 0..=12 {
        for a in 0..=n {
            let lam = w(a, n - a);
            let total: i64 = weight_diagram(&lam).values().sum();
            if total != dim(&lam) {
                return fail(format!("dimension sum of {lam}"));
            }
        }
    }
    let small: Vec<W> = alcove_weights(&level(10));
    for lam in &small {
        for mu in &small {
            let t = tensor_decomposition(lam, mu);
            if t.total_dimension() != dim(lam) * dim(mu) {
                return fail(format!("tensor dimension for {lam} x {mu}"));
            }
            if t.iter()
                .any(|(nu, _)| !(lam.clone() + mu.clone()).congruent(nu))
            {
                return fail(format!("support lattice for {lam} x {mu}"));
            }
            if lam.x + lam.y <= 8 && mu.x + mu.y <= 8 {
                if tensor_decomposition(mu, lam) != t {
                    return fail(format!("tensor symmetry for {lam}, {mu}"));
                }
                let conj = tensor_decomposition(&lam.conjugate(), &mu.conjugate());
                if t.iter().any(|(nu, n)| conj.get(&nu.conjugate()) != *n) || conj.len() != t.len()
                {
                    return fail(format!("tensor conjugation for {lam}, {mu}"));
                }
            }
        }
    }
    let mut triples = 0u64;
    for l in 0..=10 {
        let lv = level(l);
        let alcove = alcove_weights(&lv);
        for lam in &alcove {
            for mu in &alcove {
                let fused = fusion_decomposition(lam, mu, &lv).unwrap();
                if fused.total_dimension() > dim(lam) * dim(mu) {
                    return fail(format!("fusion dimension bound for {lam} x {mu} at {l}"));
                }
                if l >= lam.x + lam.y + mu.x + mu.y && fused != tensor_decomposition(lam, mu) {
                    return fail(format!("stabilisation for {lam} x {mu} at {l}"));
                }
                for nu in &alcove {
                    triples += 1;
                    let q =
                        FusionQuery::new(lam.clone(), mu.clone(), nu.clone(), lv.clone()).unwrap();
                    let n = fusion_coefficient(&q);
                    if n > tensor_coefficient(lam, mu, nu) {
                        return fail(format!("truncation at {lam}, {mu}, {nu}, level {l}"));
                    }
                    let swapped =
                        FusionQuery::new(mu.clone(), lam.clone(), nu.clone(), lv.clone()).unwrap();
                    let conj = FusionQuery::new(
                        lam.conjugate(),
                        mu.conjugate(),
                        nu.conjugate(),
                        lv.clone(),
                    )
                    .unwrap();
                    if fusion_coefficient(&swapped) != n || fusion_coefficient(&conj) != n {
                        return fail(format!("fusion symmetry at {lam}, {mu}, {nu}, level {l}"));
                    }
                    if n != 0 && !(lam.clone() + mu.clone()).congruent(nu) {
                        return fail(format!("fusion support lattice at {lam}, {mu}, {nu}"));
                    }
                }
            }
        }
    }
    pass(format!("dimension, conservation, truncation, stabilisation, symmetry, lattice; {triples} fusion triples"))
}

fn random_point(rng: &mut ChaCha8Rng) -> Vec<Q<i128>> {
    let mut frac = || Q::new(rng.gen_range(0..=60i128), rng.gen_range(1..=7i128));
    let l = frac();
    let mut pair = |l: &Q<i128>| {
        let u = Q::new(rng.gen_range(0..=12i128), 12);
        let v = Q::new(rng.gen_range(0..=12i128), 12);
        let first = *l * u;
        let second = (*l - first) * v;
        [first, second]
    };
    let (ab, cd, ef) = (pair(&l), pair(&l), pair(&l));
    let mut p: Vec<Q<i128>> = ab.into_iter().chain(cd).chain(ef).collect();
    p.push(l);
    p
}

fn cone_engine() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = alcove_term::<i128>(&"s1".parse().unwrap()).unwrap();
    let g = alcove_term::<i128>(&"Id".parse().unwrap()).unwrap();
    let sum = f.add(&g).unwrap();
    let scale = Q::new(-2, 3);
    let scaled = sum.scale(&scale);
    let simplified = sum.simplify().unwrap();
    let domain: Cone<i128> = symbolic_domain();
    for _ in 0..1000 {
        let p = random_point(&mut rng);
        assert!(domain.contains(&p));
        let (fv, gv) = (f.evaluate(&p).unwrap(), g.evaluate(&p).unwrap());
        let s = sum.evaluate(&p).unwrap();
        if s != fv + gv {
            return fail(format!("add wrong at {p:?}"));
        }
        if scaled.evaluate(&p).unwrap() != s * scale {
            return fail(format!("scale wrong at {p:?}"));
        }
        if simplified.evaluate(&p).unwrap() != s {
            return fail(format!("simplify wrong at {p:?}"));
        }
    }

    let mut sets: Vec<(String, PiecewiseLinear<i128>)> = vec![
        ("multiplicity table".into(), mult_table().unwrap()),
        ("sum".into(), sum.clone()),
        ("scaled sum".into(), scaled),
        ("simplified sum".into(), simplified.clone()),
        ("closed formula".into(), bmw_symbolic().unwrap()),
    ];
    for word in a2_fusion::contributing_alcoves() {
        sets.push((format!("term {word}"), alcove_term(&word).unwrap()));
    }
    for (name, set) in &sets {
        let v = set.validate().unwrap();
        if !v.is_empty() {
            return fail(format!("{name}: {:?}", v[0]));
        }
    }

    let mut round_trips = 0;
    for (_, set) in &sets {
        for p in set.pieces() {
            let gens = p.cone.rays_and_lines();
            let back = Cone::from_generators(p.cone.space().clone(), &gens).unwrap();
            if back != p.cone.reduce().unwrap() || !back.same_set(&p.cone) {
                return fail(format!("H-V round trip failed for {}", p.cone.display()));
            }
            round_trips += 1;
        }
    }
    pass(format!(
        "1000 random points per operation, {} sets validated, {round_trips} H-V round trips",
        sets.len()
    ))
}

fn main() -> ExitCode {
    let mut all_ok = true;
    let mut report = |n: usize, name: &str, o: Outcome| {
        all_ok &= o.ok;
        println!(
            "{} criterion {n} ({name}): {}",
            if o.ok { "PASS" } else { "FAIL" },
            o.detail
        );
    };
    report(1, "tensor figure", tensor_figure());
    report(2, "fusion figure", fusion_figure());
    let start = Instant::now();
    // the time target is per core, so measure on a single thread
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let sweep_report = pool.install(|| sweep(10));
    let elapsed = start.elapsed();
    report(
        3,
        "main proposition, exhaustive to level 10",
        main_proposition(&sweep_report, elapsed),
    );
    report(4, "contributing alcoves", alcove_lemma(&sweep_report));
    report(5, "symbolic proof", symbolic_proof());
    report(6, "multiplicity oracles", multiplicity_oracles());
    report(7, "property suites", property_suites());
    report(8, "cone engine", cone_engine());
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
