//! The Kac-Walton sum evaluated symbolically in `(a, b, c, d, e, f, l)`.
//!
//! Each contributing alcove `w` turns the multiplicity table into a
//! piecewise-linear function of the seven letters by substituting
//! `(x, y) = w . (e, f) - (c, d)`. The signed sum of the thirteen pullbacks,
//! simplified after every addition, is compared with the closed formula
//! laid out on its natural cells.

use std::fmt::Write as _;

use polycone::{AffineMap, Comparison, Cone, LinearForm, Piece, PiecewiseLinear, Space};

use crate::fusion::contributing_alcoves;
use crate::multiplicity::{mult_table, mult_table_space};
use crate::rootsystem::{int, AffineWeylWord, Generator};
use crate::{Error, Result, Scalar, Q};

pub const LETTERS: [&str; 7] = ["a", "b", "c", "d", "e", "f", "l"];

pub fn symbolic_space() -> Space {
    Space::new(&LETTERS)
}

/// `a..f, l >= 0` and `a+b, c+d, e+f <= l`.
pub fn symbolic_domain<T: Scalar>() -> Cone<T> {
    #[rustfmt::skip]
    let rows: [&[i64]; 10] = [
        &[1, 0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0, 0, 0],
        &[0, 0, 1, 0, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0, 0, 0],
        &[0, 0, 0, 0, 1, 0, 0, 0],
        &[0, 0, 0, 0, 0, 1, 0, 0],
        &[0, 0, 0, 0, 0, 0, 1, 0],
        &[-1, -1, 0, 0, 0, 0, 1, 0],
        &[0, 0, -1, -1, 0, 0, 1, 0],
        &[0, 0, 0, 0, -1, -1, 1, 0],
    ];
    Cone::from_int_rows(symbolic_space(), &rows)
        .expect("domain rows match the space")
        .reduce()
        .expect("domain is full-dimensional")
}

type Pair<T> = (LinearForm<T>, LinearForm<T>);

fn var<T: Scalar>(name: &str) -> LinearForm<T> {
    let i = LETTERS.iter().position(|&n| n == name).unwrap();
    LinearForm::var(LETTERS.len(), i)
}

fn constant<T: Scalar>(c: i64) -> LinearForm<T> {
    LinearForm::constant_form(LETTERS.len(), Q::from_integer(int(c)))
}

fn dot_symbolic<T: Scalar>(g: Generator, (x, y): Pair<T>) -> Pair<T> {
    match g {
        Generator::S1 => (-x.clone() - constant(2), x + y + constant(1)),
        Generator::S2 => (x + y.clone() + constant(1), -y - constant(2)),
        Generator::S0 => {
            let t = var("l") + constant(1) - x.clone() - y.clone();
            (x + t.clone(), y + t)
        }
    }
}

/// The map `(x, y, a, b) <- (w . (e, f) - (c, d), a, b)` from the letters
/// to the multiplicity table's variables.
pub fn alcove_substitution<T: Scalar>(w: &AffineWeylWord) -> Result<AffineMap<T>> {
    if !contributing_alcoves().contains(w) {
        return Err(Error::NotContributing(w.to_string()));
    }
    let (x, y) = w
        .letters()
        .iter()
        .rev()
        .fold((var("e"), var("f")), |acc, &g| dot_symbolic(g, acc));
    let images = vec![x - var("c"), y - var("d"), var("a"), var("b")];
    Ok(AffineMap::new(
        mult_table_space(),
        symbolic_space(),
        images,
    )?)
}

/// One signed term of the accumulation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlcoveStep {
    pub word: AffineWeylWord,
    /// Pieces of the pulled-back multiplicity table.
    pub term_pieces: usize,
    /// Pieces of the running sum before and after simplification.
    pub refined_pieces: usize,
    pub simplified_pieces: usize,
}

#[derive(Clone, Debug)]
pub struct SymbolicFusionResult<T: Scalar = i128> {
    pub function: PiecewiseLinear<T>,
    pub nonzero_count: usize,
    pub zero_count: usize,
    pub provenance: Vec<AlcoveStep>,
}

/// Signed pullback of the multiplicity table along one alcove.
pub fn alcove_term<T: Scalar>(w: &AffineWeylWord) -> Result<PiecewiseLinear<T>> {
    let map = alcove_substitution(w)?;
    let term = mult_table::<T>()?.pullback(&map, &symbolic_domain())?;
    Ok(if w.sign() > 0 {
        term
    } else {
        term.scale(&Q::from_integer(-T::one()))
    })
}

/// Sums the thirteen signed pullbacks in order, longest word first,
/// simplifying after each addition.
pub fn symbolic_kac_walton<T: Scalar>() -> Result<SymbolicFusionResult<T>> {
    symbolic_kac_walton_with(|_| {})
}

/// [`symbolic_kac_walton`] reporting each step as it completes.
pub fn symbolic_kac_walton_with<T: Scalar>(
    mut on_step: impl FnMut(&AlcoveStep),
) -> Result<SymbolicFusionResult<T>> {
    let mut acc = PiecewiseLinear::constant(symbolic_domain(), Q::from_integer(T::zero()))?;
    let mut provenance = Vec::new();
    for w in contributing_alcoves() {
        let term = alcove_term::<T>(&w)?;
        let refined = acc.add(&term)?;
        acc = refined.simplify()?;
        let step = AlcoveStep {
            word: w,
            term_pieces: term.len(),
            refined_pieces: refined.len(),
            simplified_pieces: acc.len(),
        };
        on_step(&step);
        provenance.push(step);
    }
    Ok(SymbolicFusionResult {
        nonzero_count: acc.nonzero_count(),
        zero_count: acc.zero_count(),
        function: acc,
        provenance,
    })
}

/// The nine candidates for `k0min`, labelled.
pub fn k0min_terms<T: Scalar>() -> Vec<(&'static str, LinearForm<T>)> {
    let (a, b, c, d, e, f) = (var("a"), var("b"), var("c"), var("d"), var("e"), var("f"));
    let (big_a, big_b) = (big_a::<T>(), big_b::<T>());
    vec![
        ("a+b", a.clone() + b.clone()),
        ("c+d", c.clone() + d.clone()),
        ("e+f", e.clone() + f.clone()),
        ("A-a", big_a.clone() - a),
        ("A-c", big_a.clone() - c),
        ("A-f", big_a - f),
        ("B-b", big_b.clone() - b),
        ("B-d", big_b.clone() - d),
        ("B-e", big_b - e),
    ]
}

/// The three candidates for `l0max`, labelled.
pub fn l0max_terms<T: Scalar>() -> Vec<(&'static str, LinearForm<T>)> {
    vec![("A", big_a()), ("B", big_b()), ("l", var("l"))]
}

fn third<T: Scalar>() -> Q<T> {
    Q::new(T::one(), int(3))
}

fn big_a<T: Scalar>() -> LinearForm<T> {
    let odd = var::<T>("a") + var("c") + var("f");
    let even = var::<T>("b") + var("d") + var("e");
    (odd.clone() + odd + even) * third()
}

fn big_b<T: Scalar>() -> LinearForm<T> {
    let odd = var::<T>("a") + var("c") + var("f");
    let even = var::<T>("b") + var("d") + var("e");
    (odd + even.clone() + even) * third()
}

/// Region where `k0min` is attained by term `i` and `l0max` by term `j`.
pub fn bmw_cell<T: Scalar>(i: usize, j: usize) -> Result<(Cone<T>, LinearForm<T>)> {
    let ks = k0min_terms::<T>();
    let ls = l0max_terms::<T>();
    let mut rows = Vec::new();
    for (k, (_, form)) in ks.iter().enumerate() {
        if k != i {
            rows.push(ks[i].1.clone() - form.clone());
        }
    }
    for (m, (_, form)) in ls.iter().enumerate() {
        if m != j {
            rows.push(form.clone() - ls[j].1.clone());
        }
    }
    let expr = ls[j].1.clone() - ks[i].1.clone() + constant(1);
    let cone = Cone::new(symbolic_space(), rows)?.intersect(&symbolic_domain())?;
    Ok((cone, expr))
}

/// The closed formula `max(0, l0max - k0min + 1)` as a piecewise-linear
/// function: each of the 27 cells splits into a part carrying
/// `l0max - k0min + 1` and a part where the value is 0. Zero parts are
/// merged where possible.
pub fn bmw_symbolic<T: Scalar>() -> Result<PiecewiseLinear<T>> {
    let mut pieces = Vec::new();
    for i in 0..9 {
        for j in 0..3 {
            let (cell, expr) = bmw_cell::<T>(i, j)?;
            pieces.push(Piece {
                cone: cell.with_row(expr.clone()),
                expr: expr.clone(),
            });
            pieces.push(Piece {
                cone: cell.with_row(-expr),
                expr: LinearForm::zero(LETTERS.len()),
            });
        }
    }
    Ok(PiecewiseLinear::new(symbolic_domain(), pieces)?.simplify()?)
}

pub fn compare_piecewise<T: Scalar>(
    f: &PiecewiseLinear<T>,
    g: &PiecewiseLinear<T>,
) -> Result<Comparison<T>> {
    Ok(f.compare(g)?)
}

/// Plain-text proof certificate: every nonzero piece of the symbolic sum
/// with its inequalities, expression, and the closed-formula piece it
/// coincides with.
pub fn certificate<T: Scalar>(
    kw: &SymbolicFusionResult<T>,
    bmw: &PiecewiseLinear<T>,
    cmp: &Comparison<T>,
) -> String {
    let space = kw.function.space();
    let mut out = String::new();
    let _ = writeln!(out, "variables: {space}");
    let _ = writeln!(out, "domain: {}", kw.function.domain().display());
    let _ = writeln!(out, "accumulation:");
    for s in &kw.provenance {
        let _ = writeln!(
            out,
            "  {:<7} term {:>3} pieces, refined {:>4}, simplified {:>4}",
            s.word.to_string(),
            s.term_pieces,
            s.refined_pieces,
            s.simplified_pieces
        );
    }
    let _ = writeln!(
        out,
        "result: {} nonzero pieces, {} zero pieces",
        kw.nonzero_count, kw.zero_count
    );
    let _ = writeln!(out);
    for (i, m) in &cmp.matching {
        let p = &kw.function.pieces()[*i];
        let _ = writeln!(out, "piece {i}: N = {}", p.expr.display(space));
        for r in p.cone.rows() {
            let _ = writeln!(out, "    {} >= 0", r.display(space));
        }
        match m {
            Some(j) => {
                let _ = writeln!(out, "  matches closed-formula piece {j}");
            }
            None => {
                let _ = writeln!(out, "  no identical closed-formula piece");
            }
        }
    }
    let _ = writeln!(out);
    match &cmp.counterexample {
        None => {
            let _ = writeln!(
                out,
                "verdict: equivalent ({} of {} nonzero pieces matched, closed formula has {})",
                cmp.matching.iter().filter(|(_, m)| m.is_some()).count(),
                cmp.matching.len(),
                bmw.nonzero_count()
            );
        }
        Some(c) => {
            let pt: Vec<String> = c.point.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                out,
                "verdict: NOT equivalent at ({}): Kac-Walton piece {} gives {}, closed formula piece {} gives {}",
                pt.join(", "),
                c.left_piece,
                c.left_value,
                c.right_piece,
                c.right_value
            );
        }
    }
    out
}
