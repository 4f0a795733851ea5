//! JSON interchange for scalars, ring descriptors, matrices and algebras.
//!
//! Rationals are always `"p/q"` strings (`"3/1"` for integers), residues are
//! `{"mod": m, "val": r}` and cyclotomic elements `{"order": m, "coeffs": [..]}`.
//! Objects are `serde_json::Map`s, which keep keys sorted.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exact::{CycloScalar, Rational, ZmodScalar};
use crate::rings::{AlgebraElement, DenseMatrix, FiniteAlgebra, RingDescriptor, RingValue};

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| perr(format!("missing key {key:?}")))
}

fn as_u64(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| perr(format!("{what} must be a non-negative integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| perr(format!("{what} must be an array")))
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    let s = v.as_str().ok_or_else(|| perr("rational must be a \"p/q\" string"))?;
    if !s.contains('/') {
        return Err(perr(format!("rational {s:?} must be written p/q")));
    }
    s.parse()
}

pub fn zmod_to_json(z: &ZmodScalar) -> Value {
    json!({"mod": z.modulus(), "val": z.residue()})
}

pub fn zmod_from_json(v: &Value) -> Result<ZmodScalar> {
    let m = as_u64(field(v, "mod")?, "mod")?;
    let r = as_u64(field(v, "val")?, "val")?;
    if r >= m {
        return Err(perr(format!("residue {r} not canonical mod {m}")));
    }
    ZmodScalar::new(m, r as i64)
}

pub fn cyclo_to_json(c: &CycloScalar) -> Value {
    json!({
        "order": c.order(),
        "coeffs": c.coeffs().iter().map(rational_to_json).collect::<Vec<_>>(),
    })
}

pub fn cyclo_from_json(v: &Value) -> Result<CycloScalar> {
    let order = as_u64(field(v, "order")?, "order")?;
    let coeffs = as_array(field(v, "coeffs")?, "coeffs")?
        .iter()
        .map(rational_from_json)
        .collect::<Result<Vec<_>>>()?;
    CycloScalar::from_coeffs(order, coeffs).map_err(|e| perr(e.to_string()))
}

pub fn algebra_to_json(a: &FiniteAlgebra) -> Value {
    let table: Vec<Value> = a
        .table()
        .iter()
        .map(|row| {
            Value::Array(
                row.iter()
                    .map(|cell| Value::Array(cell.iter().map(cyclo_to_json).collect()))
                    .collect(),
            )
        })
        .collect();
    json!({
        "dim": a.dim(),
        "labels": a.labels(),
        "table": table,
        "one": a.one_coords().iter().map(cyclo_to_json).collect::<Vec<_>>(),
    })
}

pub fn algebra_from_json(v: &Value) -> Result<FiniteAlgebra> {
    let dim = as_u64(field(v, "dim")?, "dim")? as usize;
    let one = as_array(field(v, "one")?, "one")?
        .iter()
        .map(cyclo_from_json)
        .collect::<Result<Vec<_>>>()?;
    let labels = match v.get("labels") {
        Some(l) => as_array(l, "labels")?
            .iter()
            .map(|s| s.as_str().map(str::to_owned).ok_or_else(|| perr("labels must be strings")))
            .collect::<Result<Vec<_>>>()?,
        None => (0..dim).map(|i| format!("b{i}")).collect(),
    };
    if labels.len() != dim {
        return Err(perr("labels length differs from dim"));
    }
    let table = as_array(field(v, "table")?, "table")?
        .iter()
        .map(|row| {
            as_array(row, "table row")?
                .iter()
                .map(|cell| as_array(cell, "table cell")?.iter().map(cyclo_from_json).collect())
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let base_order = one.first().map_or(1, CycloScalar::order);
    FiniteAlgebra::new(base_order, labels, table, one)
}

pub fn descriptor_to_json(r: &RingDescriptor) -> Value {
    match r {
        RingDescriptor::Rational => json!("Q"),
        RingDescriptor::Zmod(m) => json!(format!("Zmod:{m}")),
        RingDescriptor::Cyclotomic(m) => json!(format!("Cyclo:{m}")),
        RingDescriptor::Matrix(n, inner) => json!({"matrix": n, "inner": descriptor_to_json(inner)}),
        RingDescriptor::Algebra(a) => json!({"algebra": algebra_to_json(a)}),
    }
}

pub fn descriptor_from_json(v: &Value) -> Result<RingDescriptor> {
    if let Some(s) = v.as_str() {
        return s.parse();
    }
    if let Some(n) = v.get("matrix") {
        let n = as_u64(n, "matrix")? as usize;
        let inner = descriptor_from_json(field(v, "inner")?)?;
        return RingDescriptor::matrix(n, inner);
    }
    if let Some(a) = v.get("algebra") {
        return Ok(RingDescriptor::Algebra(Arc::new(algebra_from_json(a)?)));
    }
    Err(perr("unrecognised ring descriptor"))
}

pub fn value_to_json(v: &RingValue) -> Value {
    match v {
        RingValue::Rational(r) => rational_to_json(r),
        RingValue::Zmod(z) => zmod_to_json(z),
        RingValue::Cyclo(c) => cyclo_to_json(c),
        RingValue::Matrix(m) => matrix_to_json(m),
        RingValue::Algebra(a) => Value::Array(a.coords().iter().map(cyclo_to_json).collect()),
    }
}

/// Parses an element, checking it belongs to `ring`.
pub fn value_from_json(ring: &RingDescriptor, v: &Value) -> Result<RingValue> {
    let value = match ring {
        RingDescriptor::Rational => RingValue::Rational(rational_from_json(v)?),
        RingDescriptor::Zmod(_) => RingValue::Zmod(zmod_from_json(v)?),
        RingDescriptor::Cyclotomic(_) => RingValue::Cyclo(cyclo_from_json(v)?),
        RingDescriptor::Matrix(..) => RingValue::Matrix(matrix_from_json(v)?),
        RingDescriptor::Algebra(a) => {
            let coords = as_array(v, "algebra element")?
                .iter()
                .map(cyclo_from_json)
                .collect::<Result<Vec<_>>>()?;
            RingValue::Algebra(AlgebraElement::new(a.clone(), coords)?)
        }
    };
    if !ring.contains(&value) {
        return Err(perr(format!("element of {} where {ring} was expected", value.ring())));
    }
    Ok(value)
}

pub fn matrix_to_json(m: &DenseMatrix) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().map(value_to_json).collect()))
        .collect();
    let mut obj = Map::new();
    obj.insert("ring".into(), descriptor_to_json(m.ring()));
    obj.insert("rows".into(), json!(m.rows()));
    obj.insert("cols".into(), json!(m.cols()));
    obj.insert("entries".into(), Value::Array(entries));
    Value::Object(obj)
}

pub fn matrix_from_json(v: &Value) -> Result<DenseMatrix> {
    let ring = descriptor_from_json(field(v, "ring")?)?;
    let rows = as_u64(field(v, "rows")?, "rows")? as usize;
    let cols = as_u64(field(v, "cols")?, "cols")? as usize;
    let entries = as_array(field(v, "entries")?, "entries")?;
    if entries.len() != rows {
        return Err(perr(format!("expected {rows} rows, found {}", entries.len())));
    }
    let mut flat = Vec::with_capacity(rows * cols);
    for row in entries {
        let row = as_array(row, "row")?;
        if row.len() != cols {
            return Err(perr(format!("expected {cols} columns, found {}", row.len())));
        }
        for e in row {
            flat.push(value_from_json(&ring, e)?);
        }
    }
    DenseMatrix::new(ring, rows, cols, flat).map_err(|e| perr(e.to_string()))
}
