//! JSON file formats. Scalar encoding depends on the ring carried at the
//! top level of each file: rationals are "num/den" strings (plain integers
//! accepted), GF(p) residues are integers, quadratic elements are
//! ["u", "v"] pairs of rational strings.
//!
//! Bialgebra files: `{"ring": .., "dim": d, "mult": [[[..]]], "comult":
//! [[[..]]], "counit": [..]?, "unit_index": n?}` with `mult[i][j][k]` =
//! m_ij^k and `comult[i][j][k]` = mu_i^{jk}. Magma files: `{"size": n,
//! "table": [[..]]}` with 0-based entries.

use serde_json::{json, Map, Value};

use crate::bialg::{AxiomReport, StructureBialgebra};
use crate::classify::MultTable2;
use crate::error::{Error, Result};
use crate::magma::FiniteMagma;
use crate::scalar::{parse_rational, Ring, Scalar};

pub fn ring_to_json(ring: &Ring) -> Value {
    match ring {
        Ring::Rational => json!({"kind": "rational"}),
        Ring::GfP { p } => json!({"kind": "gfp", "p": p}),
        Ring::Quad { d } => json!({"kind": "quad", "d": d}),
    }
}

pub fn ring_from_json(v: &Value) -> Result<Ring> {
    let kind = v
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("ring descriptor needs a \"kind\" field".into()))?;
    match kind {
        "rational" => Ok(Ring::rational()),
        "gfp" => {
            let p = v
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse("gfp ring needs a prime \"p\"".into()))?;
            Ring::gfp(p)
        }
        "quad" => {
            let d = v
                .get("d")
                .and_then(Value::as_i64)
                .ok_or_else(|| Error::Parse("quad ring needs a square-free \"d\"".into()))?;
            Ring::quad(d)
        }
        other => Err(Error::Parse(format!("unknown ring kind {other:?}"))),
    }
}

/// Shorthand parser for --ring flags: full JSON, or "rational" / "gfp:p" /
/// "quad:d".
pub fn ring_from_str(s: &str) -> Result<Ring> {
    let s = s.trim();
    if s.starts_with('{') {
        let v: Value = serde_json::from_str(s)?;
        return ring_from_json(&v);
    }
    match s.split_once(':') {
        None if s.eq_ignore_ascii_case("rational") || s == "q" || s == "Q" => Ok(Ring::rational()),
        Some(("gfp", p)) => Ring::gfp(
            p.parse()
                .map_err(|_| Error::Parse(format!("bad prime {p:?}")))?,
        ),
        Some(("quad", d)) => Ring::quad(
            d.parse()
                .map_err(|_| Error::Parse(format!("bad radicand {d:?}")))?,
        ),
        _ => Err(Error::Parse(format!("unknown ring {s:?}"))),
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s.ring() {
        Ring::Rational => {
            let q = s.as_rational().unwrap();
            Value::String(crate::scalar::fmt_rational(q))
        }
        Ring::GfP { .. } => json!(s.as_residue().unwrap()),
        Ring::Quad { .. } => {
            let (u, v) = s.as_quad_parts().unwrap();
            json!([
                crate::scalar::fmt_rational(u),
                crate::scalar::fmt_rational(v)
            ])
        }
    }
}

pub fn scalar_from_json(ring: Ring, v: &Value) -> Result<Scalar> {
    match ring {
        Ring::Rational => match v {
            Value::String(s) => Ok(ring.from_rational(parse_rational(s)?)),
            Value::Number(n) => n
                .as_i64()
                .map(|i| ring.from_i64(i))
                .ok_or_else(|| Error::Parse(format!("non-integer literal {n}"))),
            _ => Err(Error::Parse(format!("bad rational scalar {v}"))),
        },
        Ring::GfP { .. } => match v {
            Value::Number(n) => n
                .as_i64()
                .map(|i| ring.from_i64(i))
                .ok_or_else(|| Error::Parse(format!("bad residue {n}"))),
            Value::String(s) => Ok(ring.from_i64(
                s.parse()
                    .map_err(|_| Error::Parse(format!("bad residue {s:?}")))?,
            )),
            _ => Err(Error::Parse(format!("bad GF(p) scalar {v}"))),
        },
        Ring::Quad { .. } => match v {
            Value::Array(parts) if parts.len() == 2 => {
                let part = |x: &Value| -> Result<_> {
                    match x {
                        Value::String(s) => parse_rational(s),
                        Value::Number(n) => n
                            .as_i64()
                            .map(|i| num_rational::BigRational::from_integer(i.into()))
                            .ok_or_else(|| Error::Parse(format!("bad quad part {n}"))),
                        _ => Err(Error::Parse(format!("bad quad part {x}"))),
                    }
                };
                ring.quad_element(part(&parts[0])?, part(&parts[1])?)
            }
            Value::String(s) => Ok(ring.from_rational(parse_rational(s)?)),
            Value::Number(n) => n
                .as_i64()
                .map(|i| ring.from_i64(i))
                .ok_or_else(|| Error::Parse(format!("bad scalar {n}"))),
            _ => Err(Error::Parse(format!("quad scalar must be [u, v], got {v}"))),
        },
    }
}

pub fn scalar_vec_from_json(ring: Ring, v: &Value) -> Result<Vec<Scalar>> {
    v.as_array()
        .ok_or_else(|| Error::Parse("expected an array of scalars".into()))?
        .iter()
        .map(|x| scalar_from_json(ring, x))
        .collect()
}

pub fn scalar_vec_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

pub fn bialgebra_to_json(a: &StructureBialgebra) -> Value {
    let d = a.dim();
    let tensor = |get: &dyn Fn(usize, usize, usize) -> Scalar| -> Value {
        Value::Array(
            (0..d)
                .map(|i| {
                    Value::Array(
                        (0..d)
                            .map(|j| {
                                Value::Array((0..d).map(|k| scalar_to_json(&get(i, j, k))).collect())
                            })
                            .collect(),
                    )
                })
                .collect(),
        )
    };
    let mut m = Map::new();
    m.insert("ring".into(), ring_to_json(&a.ring()));
    m.insert("dim".into(), json!(d));
    m.insert("mult".into(), tensor(&|i, j, k| a.m(i, j, k).clone()));
    m.insert("comult".into(), tensor(&|i, j, k| a.mu(i, j, k).clone()));
    if let Some(eps) = a.counit() {
        m.insert("counit".into(), scalar_vec_to_json(eps));
    }
    if let Some(u) = a.unit_index() {
        m.insert("unit_index".into(), json!(u));
    }
    Value::Object(m)
}

pub fn bialgebra_from_json(v: &Value) -> Result<StructureBialgebra> {
    let ring = ring_from_json(
        v.get("ring")
            .ok_or_else(|| Error::Parse("bialgebra file needs a \"ring\"".into()))?,
    )?;
    let d = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("bialgebra file needs a \"dim\"".into()))? as usize;
    let tensor = |name: &str| -> Result<Vec<Scalar>> {
        let t = v
            .get(name)
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse(format!("missing tensor {name:?}")))?;
        if t.len() != d {
            return Err(Error::Parse(format!("{name}: expected {d} rows")));
        }
        let mut out = Vec::with_capacity(d * d * d);
        for (i, row) in t.iter().enumerate() {
            let row = row
                .as_array()
                .ok_or_else(|| Error::Parse(format!("{name}[{i}] is not an array")))?;
            if row.len() != d {
                return Err(Error::Parse(format!("{name}[{i}]: expected {d} entries")));
            }
            for (j, cell) in row.iter().enumerate() {
                let cell = cell
                    .as_array()
                    .ok_or_else(|| Error::Parse(format!("{name}[{i}][{j}] is not an array")))?;
                if cell.len() != d {
                    return Err(Error::Parse(format!(
                        "{name}[{i}][{j}]: expected {d} coefficients"
                    )));
                }
                for x in cell {
                    out.push(scalar_from_json(ring, x)?);
                }
            }
        }
        Ok(out)
    };
    let mult = tensor("mult")?;
    let comult = tensor("comult")?;
    let counit = match v.get("counit") {
        None | Some(Value::Null) => None,
        Some(c) => Some(scalar_vec_from_json(ring, c)?),
    };
    let unit_index = match v.get("unit_index") {
        None | Some(Value::Null) => None,
        Some(u) => Some(
            u.as_u64()
                .ok_or_else(|| Error::Parse("unit_index must be an index".into()))? as usize,
        ),
    };
    StructureBialgebra::from_tensors(ring, d, mult, comult, counit, unit_index)
}

pub fn magma_from_json(v: &Value) -> Result<FiniteMagma> {
    Ok(serde_json::from_value(v.clone())?)
}

pub fn report_to_json(r: &AxiomReport) -> Value {
    let mut m = Map::new();
    m.insert("axiom".into(), json!(r.axiom.to_string()));
    m.insert("pass".into(), json!(r.pass));
    if let Some(w) = &r.witness {
        m.insert("witness".into(), json!(w));
        m.insert("lhs".into(), scalar_vec_to_json(&r.lhs));
        m.insert("rhs".into(), scalar_vec_to_json(&r.rhs));
    }
    Value::Object(m)
}

pub fn multtable_to_json(t: &MultTable2) -> Value {
    let mut m = Map::new();
    m.insert("ring".into(), ring_to_json(&t.ring()));
    m.insert("coeffs".into(), scalar_vec_to_json(t.coeffs()));
    Value::Object(m)
}

pub fn read_json_file(path: &std::path::Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_json_file(path: &std::path::Path, v: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(v)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}
