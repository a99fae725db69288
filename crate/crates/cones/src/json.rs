//! JSON encoding of piecewise-linear functions.
//!
//! ```json
//! {"variables": ["a","b"], "domain": [[1,0,0]],
//!  "pieces": [{"cone": [[0,1,0]], "expr": ["1/3",0,1]}]}
//! ```
//!
//! Each row lists coefficients then the constant. Rationals are JSON
//! integers when integral and `"p/q"` strings otherwise.

use serde_json::{json, Value};

use crate::space::{LinearForm, Space};
use crate::{Cone, Error, Piece, PiecewiseLinear, Result, Scalar, Q};

pub fn rational_to_json<T: Scalar>(q: &Q<T>) -> Value {
    if q.is_integer() {
        if let Some(v) = num_traits::ToPrimitive::to_i64(q.numer()) {
            return Value::from(v);
        }
        return Value::String(q.numer().to_string());
    }
    Value::String(format!("{}/{}", q.numer(), q.denom()))
}

pub fn rational_from_json<T: Scalar>(v: &Value) -> Result<Q<T>> {
    let bad = || Error::Json(format!("not a rational: {v}"));
    match v {
        Value::Number(n) => {
            let i = n.as_i64().ok_or_else(bad)?;
            Ok(Q::from_integer(T::from_i64(i).ok_or_else(bad)?))
        }
        Value::String(s) => {
            let parse = |t: &str| t.trim().parse::<T>().map_err(|_| bad());
            match s.split_once('/') {
                Some((n, d)) => {
                    let d = parse(d)?;
                    if num_traits::Zero::is_zero(&d) {
                        return Err(bad());
                    }
                    Ok(Q::new(parse(n)?, d))
                }
                None => Ok(Q::from_integer(parse(s)?)),
            }
        }
        _ => Err(bad()),
    }
}

pub fn row_to_json<T: Scalar>(f: &LinearForm<T>) -> Value {
    Value::Array(
        f.coeffs()
            .iter()
            .chain([f.constant()])
            .map(rational_to_json)
            .collect(),
    )
}

pub fn row_from_json<T: Scalar>(v: &Value, dim: usize) -> Result<LinearForm<T>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Json(format!("row is not an array: {v}")))?;
    if arr.len() != dim + 1 {
        return Err(Error::DimensionMismatch {
            expected: dim + 1,
            got: arr.len(),
        });
    }
    let mut vals: Vec<Q<T>> = arr.iter().map(rational_from_json).collect::<Result<_>>()?;
    let c = vals.pop().unwrap();
    Ok(LinearForm::new(vals, c))
}

fn rows_to_json<T: Scalar>(c: &Cone<T>) -> Value {
    Value::Array(c.rows().iter().map(row_to_json).collect())
}

fn rows_from_json<T: Scalar>(v: &Value, space: &Space) -> Result<Cone<T>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Json("cone is not an array of rows".into()))?;
    let rows = arr
        .iter()
        .map(|r| row_from_json(r, space.dim()))
        .collect::<Result<_>>()?;
    Cone::new(space.clone(), rows)
}

pub fn to_json<T: Scalar>(f: &PiecewiseLinear<T>) -> Value {
    json!({
        "variables": f.space().names(),
        "domain": rows_to_json(f.domain()),
        "pieces": f.pieces().iter().map(|p| json!({
            "cone": rows_to_json(&p.cone),
            "expr": row_to_json(&p.expr),
        })).collect::<Vec<_>>(),
    })
}

pub fn from_json<T: Scalar>(v: &Value) -> Result<PiecewiseLinear<T>> {
    let names: Vec<String> = v
        .get("variables")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("missing \"variables\"".into()))?
        .iter()
        .map(|n| {
            n.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Json("variable names must be strings".into()))
        })
        .collect::<Result<_>>()?;
    let space = Space::new(&names);
    let domain = rows_from_json(
        v.get("domain")
            .ok_or_else(|| Error::Json("missing \"domain\"".into()))?,
        &space,
    )?;
    let pieces = v
        .get("pieces")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("missing \"pieces\"".into()))?
        .iter()
        .map(|p| {
            let cone = rows_from_json(
                p.get("cone")
                    .ok_or_else(|| Error::Json("piece without cone".into()))?,
                &space,
            )?;
            let expr = row_from_json(
                p.get("expr")
                    .ok_or_else(|| Error::Json("piece without expr".into()))?,
                space.dim(),
            )?;
            Ok(Piece { cone, expr })
        })
        .collect::<Result<_>>()?;
    PiecewiseLinear::new(domain, pieces)
}
