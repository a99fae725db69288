use num_bigint::BigInt;
use num_traits::{One, Zero};
use polycone::fourier_motzkin;
use polycone::union::{convex_hull, is_union_convex, union_hull};
use polycone::{Cone, LinearForm, Piece, PiecewiseLinear, Space, Q};
use proptest::prelude::*;

type R = Q<i128>;

fn xy() -> Space {
    Space::new(&["x", "y"])
}

fn xyz() -> Space {
    Space::new(&["x", "y", "z"])
}

fn cone(space: Space, rows: &[&[i64]]) -> Cone<i128> {
    Cone::from_int_rows(space, rows).unwrap()
}

fn q(n: i64) -> R {
    R::from_integer(n.into())
}

fn point(p: &[i64]) -> Vec<R> {
    p.iter().map(|&v| q(v)).collect()
}

#[test]
fn full_dimensionality_examples() {
    assert!(cone(xy(), &[&[1, 0, 0], &[0, 1, 0]]).is_full_dimensional());
    assert!(!cone(xy(), &[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0]]).is_full_dimensional());
}

#[test]
fn intersect_examples() {
    let c = cone(xy(), &[&[1, 2, 3], &[0, 1, 0]]);
    assert_eq!(c.intersect(&Cone::whole(xy())).unwrap(), c);
    let slab = cone(xy(), &[&[1, 0, 0]])
        .intersect(&cone(xy(), &[&[-1, 0, 0]]))
        .unwrap();
    assert_eq!(slab.rows().len(), 2);
    assert!(!slab.is_full_dimensional());
    assert!(slab.contains(&point(&[0, 5])));
    assert!(cone(xy(), &[&[1, 0, 0]])
        .intersect(&cone(xyz(), &[&[1, 0, 0, 0]]))
        .is_err());
}

#[test]
fn reduce_examples() {
    let x = Space::new(&["x"]);
    let c = cone(x.clone(), &[&[1, 0], &[1, 1]]);
    assert_eq!(c.reduce().unwrap(), cone(x, &[&[1, 0]]));
    let orthant = cone(xy(), &[&[1, 0, 0], &[0, 1, 0]]);
    assert_eq!(
        orthant.reduce().unwrap().reduce().unwrap(),
        orthant.reduce().unwrap()
    );
    assert!(cone(xy(), &[&[1, 0, -1], &[-1, 0, 0]]).reduce().is_err());
}

#[test]
fn generator_examples() {
    let g = cone(xy(), &[&[1, 0, 0], &[0, 1, 0]]).rays_and_lines();
    assert_eq!(g.points, vec![point(&[0, 0])]);
    assert_eq!(g.rays, vec![vec![0, 1], vec![1, 0]]);
    assert!(g.lines.is_empty());

    let g = cone(xy(), &[&[1, 0, 0]]).rays_and_lines();
    assert_eq!(g.rays, vec![vec![1, 0]]);
    assert_eq!(g.lines.len(), 1);
    assert_eq!(g.lines[0][0], 0);
    assert_eq!(g.lines[0][1].abs(), 1);
}

#[test]
fn union_examples() {
    let q1 = cone(xy(), &[&[1, 0, 0], &[0, 1, 0]]);
    let q2 = cone(xy(), &[&[-1, 0, 0], &[0, 1, 0]]);
    let q3 = cone(xy(), &[&[-1, 0, 0], &[0, -1, 0]]);
    assert!(is_union_convex(&[q1.clone(), q2]).unwrap());
    assert!(!is_union_convex(&[q1, q3]).unwrap());
}

fn abs_function(space: &Space, row: &[i64]) -> PiecewiseLinear<i128> {
    let l = LinearForm::from_ints(row);
    let pieces = vec![
        Piece {
            cone: Cone::new(space.clone(), vec![l.clone()]).unwrap(),
            expr: l.clone(),
        },
        Piece {
            cone: Cone::new(space.clone(), vec![-l.clone()]).unwrap(),
            expr: -l,
        },
    ];
    PiecewiseLinear::new(Cone::whole(space.clone()), pieces).unwrap()
}

#[test]
fn algebra_examples() {
    let s = abs_function(&xy(), &[1, -1, 2]);
    let zero = PiecewiseLinear::constant(Cone::whole(xy()), R::zero()).unwrap();
    assert_eq!(
        s.add(&zero).unwrap().simplify().unwrap(),
        s.simplify().unwrap()
    );
    assert_eq!(s.scale(&-R::one()).scale(&-R::one()), s);

    let split = PiecewiseLinear::new(
        Cone::whole(xy()),
        vec![
            Piece {
                cone: cone(xy(), &[&[1, 0, 0]]),
                expr: LinearForm::from_ints(&[1, 1, 0]),
            },
            Piece {
                cone: cone(xy(), &[&[-1, 0, 0]]),
                expr: LinearForm::from_ints(&[1, 1, 0]),
            },
        ],
    )
    .unwrap();
    let merged = split.simplify().unwrap();
    assert_eq!(merged.len(), 1);
    assert_eq!(merged.pieces()[0].cone, Cone::whole(xy()));
    assert_eq!(merged.simplify().unwrap(), merged);
    assert_eq!(zero.evaluate(&point(&[3, -7])).unwrap(), R::zero());
}

#[test]
fn pullback_examples() {
    let s = abs_function(&xy(), &[1, -1, 0]);
    let id = polycone::AffineMap::identity(xy());
    let half = cone(xy(), &[&[0, 1, 0]]);
    let restricted = s.pullback(&id, &half).unwrap();
    assert_eq!(restricted.domain(), &half);
    assert_eq!(restricted.evaluate(&point(&[1, 4])).unwrap(), q(3));

    // constant substitution into the one-variable space
    let t = Space::new(&["t"]);
    let map = polycone::AffineMap::new(
        xy(),
        t.clone(),
        vec![
            LinearForm::from_ints(&[0, 2]),
            LinearForm::from_ints(&[0, 5]),
        ],
    )
    .unwrap();
    let c = s
        .pullback(&map, &Cone::whole(t))
        .unwrap()
        .simplify()
        .unwrap();
    assert_eq!(c.len(), 1);
    assert_eq!(c.evaluate(&point(&[11])).unwrap(), q(3));
}

fn row3() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 4)
}

fn any_cone3() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(row3(), 1..6)
}

fn build(rows: &[Vec<i64>]) -> Cone<i128> {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    cone(xyz(), &refs)
}

fn build_big(rows: &[Vec<i64>]) -> Cone<BigInt> {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Cone::from_int_rows(xyz(), &refs).unwrap()
}

fn rational_point(n: usize) -> impl Strategy<Value = Vec<R>> {
    prop::collection::vec((-20i64..=20, 1i64..=4), n).prop_map(|v| {
        v.into_iter()
            .map(|(a, b)| R::new(a.into(), b.into()))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lp_and_elimination_agree(rows in any_cone3()) {
        let c = build(&rows);
        prop_assert_eq!(c.is_full_dimensional(), fourier_motzkin::is_full_dimensional(&c));
    }

    #[test]
    fn interior_point_is_strict(rows in any_cone3()) {
        let c = build(&rows);
        if let Some(p) = c.interior_point() {
            prop_assert!(c.contains_strictly(&p));
        }
    }

    #[test]
    fn h_v_h_round_trip(rows in any_cone3()) {
        let c = build(&rows);
        prop_assume!(c.is_full_dimensional());
        let reduced = c.reduce().unwrap();
        let back = Cone::from_generators(xyz(), &c.rays_and_lines()).unwrap();
        prop_assert_eq!(&back, &reduced);
        prop_assert!(back.same_set(&c));
    }

    #[test]
    fn reduce_is_idempotent_and_exact(rows in any_cone3(), p in rational_point(3)) {
        let c = build(&rows);
        prop_assume!(c.is_full_dimensional());
        let r = c.reduce().unwrap();
        prop_assert_eq!(r.reduce().unwrap(), r.clone());
        prop_assert_eq!(r.contains(&p), c.contains(&p));
        for i in 0..r.rows().len() {
            let mut fewer = r.rows().to_vec();
            fewer.remove(i);
            let looser = Cone::new(xyz(), fewer).unwrap();
            prop_assert!(!looser.is_subset_of(&r));
        }
    }

    #[test]
    fn big_and_fixed_width_agree(rows in any_cone3()) {
        let small = build(&rows);
        let big = build_big(&rows);
        prop_assert_eq!(small.is_full_dimensional(), big.is_full_dimensional());
        match (small.reduce(), big.reduce()) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a.display(), b.display()),
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "disagree: {:?} vs {:?}", a.is_ok(), b.is_ok()),
        }
    }
}

/// `sum_i k_i |L_i|` on the plane, with its value computed directly.
fn abs_combination(terms: &[(Vec<i64>, i64)]) -> PiecewiseLinear<i128> {
    let mut acc = PiecewiseLinear::constant(Cone::whole(xy()), R::zero()).unwrap();
    for (row, k) in terms {
        let t = abs_function(&xy(), row).scale(&q(*k));
        acc = acc.add(&t).unwrap().simplify().unwrap();
    }
    acc
}

fn direct(terms: &[(Vec<i64>, i64)], p: &[R]) -> R {
    terms.iter().fold(R::zero(), |acc, (row, k)| {
        let v = LinearForm::<i128>::from_ints(row).eval(p);
        acc + q(*k) * if v < R::zero() { -v } else { v }
    })
}

fn abs_terms() -> impl Strategy<Value = Vec<(Vec<i64>, i64)>> {
    let row = (prop::collection::vec(-2i64..=2, 3), -2i64..=2)
        .prop_filter("nonconstant", |(r, _)| r[0] != 0 || r[1] != 0);
    prop::collection::vec(row, 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn algebra_is_pointwise(terms in abs_terms(), pts in prop::collection::vec(rational_point(2), 8)) {
        let f = abs_combination(&terms);
        prop_assert!(f.validate().unwrap().is_empty());
        for p in &pts {
            prop_assert_eq!(f.evaluate(p).unwrap(), direct(&terms, p));
        }
        let doubled = f.add(&f).unwrap().simplify().unwrap();
        prop_assert!(doubled.validate().unwrap().is_empty());
        for p in &pts {
            prop_assert_eq!(doubled.evaluate(p).unwrap(), q(2) * direct(&terms, p));
        }
    }

    #[test]
    fn add_commutes_and_associates(a in abs_terms(), b in abs_terms(), c in abs_terms()) {
        let (fa, fb, fc) = (abs_combination(&a), abs_combination(&b), abs_combination(&c));
        let ab = fa.add(&fb).unwrap().simplify().unwrap();
        let ba = fb.add(&fa).unwrap().simplify().unwrap();
        prop_assert!(ab.compare(&ba).unwrap().equivalent());
        let left = ab.add(&fc).unwrap().simplify().unwrap();
        let right = fa.add(&fb.add(&fc).unwrap().simplify().unwrap()).unwrap().simplify().unwrap();
        prop_assert!(left.compare(&right).unwrap().equivalent());
    }

    #[test]
    fn union_convexity_matches_hull_route(
        base in any_cone3(),
        cuts in prop::collection::vec(row3(), 1..3),
        keep in prop::collection::vec(any::<bool>(), 4),
    ) {
        let c = build(&base);
        prop_assume!(c.is_full_dimensional());
        let mut cells = vec![c];
        for cut in &cuts {
            let f = LinearForm::from_ints(cut);
            cells = cells
                .into_iter()
                .flat_map(|cell| [cell.with_row(f.clone()), cell.with_row(-f.clone())])
                .filter(Cone::is_full_dimensional)
                .collect();
        }
        let chosen: Vec<Cone<i128>> = cells
            .into_iter()
            .zip(keep.iter().cycle())
            .filter(|(_, k)| **k)
            .map(|(cell, _)| cell)
            .collect();
        prop_assume!(!chosen.is_empty());
        let hull = convex_hull(&chosen).unwrap();
        let by_hull = hull.uncovered(&chosen).unwrap().is_empty();
        prop_assert_eq!(is_union_convex(&chosen).unwrap(), by_hull);
        if let Some(h) = union_hull(&chosen).unwrap() {
            prop_assert!(h.same_set(&hull));
        }
    }
}
