//! JSON encodings of shifts, tables, algebra elements, phases, tail maps and
//! reports. Objects are built from `serde_json::Value` (sorted keys), so
//! output is byte-for-byte reproducible.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde_json::{json, Value};
use thiserror::Error;

use crate::ck::{AlgebraError, CkContext, CkElement, Ctx, PhaseFunction, Scalar};
use crate::full_group::{CocyclePair, PrefixExchangeTable, TableError};
use crate::orbit_equiv::{Clause, OeError, OrbitCocycleData, TailMap, VerificationReport};
use crate::shift::{EpPoint, LcFunction, MarkovShift, Shift, ShiftError, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("invalid {what}: {detail}")]
    Invalid { what: &'static str, detail: String },
    #[error(transparent)]
    Shift(#[from] ShiftError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Oe(#[from] OeError),
}

impl JsonError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::Invalid { .. } => "ParseError",
            Self::Shift(e) => e.code(),
            Self::Table(e) => e.code(),
            Self::Algebra(e) => e.code(),
            Self::Oe(e) => e.code(),
        }
    }
}

type Result<T> = std::result::Result<T, JsonError>;

fn invalid(what: &'static str, detail: impl std::fmt::Display) -> JsonError {
    JsonError::Invalid { what, detail: detail.to_string() }
}

fn field<'a>(v: &'a Value, key: &str, what: &'static str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| invalid(what, format!("missing field {key:?}")))
}

fn as_str<'a>(v: &'a Value, what: &'static str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| invalid(what, format!("expected a string, got {v}")))
}

fn as_array<'a>(v: &'a Value, what: &'static str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| invalid(what, format!("expected an array, got {v}")))
}

fn as_u64(v: &Value, what: &'static str) -> Result<u64> {
    v.as_u64().ok_or_else(|| invalid(what, format!("expected a nonnegative integer, got {v}")))
}

pub fn parse_word(v: &Value) -> Result<Word> {
    Ok(Word::parse(as_str(v, "word")?)?)
}

pub fn parse_point(v: &Value) -> Result<EpPoint> {
    Ok(EpPoint::parse(as_str(v, "point")?)?)
}

/// A shift given as `{"n": 2, "rows": [[1,1],[1,0]]}`, a bare matrix, or one
/// of the names `"F"` (golden mean) and `"A<n>"` (full shift on `n` symbols).
pub fn shift_from_json(v: &Value) -> Result<Shift> {
    match v {
        Value::String(name) => match name.as_str() {
            "F" | "golden-mean" => Ok(MarkovShift::golden_mean()),
            s if s.starts_with('A') => {
                let n: usize = s[1..].trim_start_matches('_').trim_matches(|c| c == '[' || c == ']').parse().map_err(|_| invalid("shift", format!("unknown shift name {s:?}")))?;
                if n < 2 {
                    return Err(ShiftError::AlphabetTooSmall(n).into());
                }
                Ok(MarkovShift::full(n))
            }
            s => Err(invalid("shift", format!("unknown shift name {s:?}"))),
        },
        Value::Array(_) => matrix_from_rows(v),
        Value::Object(_) => {
            let shift = matrix_from_rows(field(v, "rows", "shift")?)?;
            if let Some(n) = v.get("n") {
                let n = as_u64(n, "shift")? as usize;
                if n != shift.n() {
                    return Err(invalid("shift", format!("n = {n} but the matrix has {} rows", shift.n())));
                }
            }
            Ok(shift)
        }
        _ => Err(invalid("shift", format!("expected a matrix or a name, got {v}"))),
    }
}

fn matrix_from_rows(v: &Value) -> Result<Shift> {
    let rows = as_array(v, "matrix")?
        .iter()
        .map(|r| {
            as_array(r, "matrix row")?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| invalid("matrix entry", x)))
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MarkovShift::new(rows)?)
}

pub fn shift_to_json(shift: &Shift) -> Value {
    json!({ "n": shift.n(), "rows": shift.rows() })
}

fn pairs_from_json(v: &Value) -> Result<Vec<(Word, Word)>> {
    as_array(v, "entries")?
        .iter()
        .map(|pair| match pair.as_array().map(Vec::as_slice) {
            Some([a, b]) => Ok((parse_word(a)?, parse_word(b)?)),
            _ => Err(invalid("entry", format!("expected [mu, nu], got {pair}"))),
        })
        .collect()
}

fn pairs_to_json<'a>(pairs: impl IntoIterator<Item = (&'a Word, &'a Word)>) -> Value {
    Value::Array(pairs.into_iter().map(|(a, b)| json!([a.to_string(), b.to_string()])).collect())
}

/// `{"shift": ..., "entries": [["111","211"], ...]}`.
pub fn table_from_json(v: &Value) -> Result<PrefixExchangeTable> {
    let shift = shift_from_json(field(v, "shift", "table")?)?;
    let entries = pairs_from_json(field(v, "entries", "table")?)?;
    Ok(PrefixExchangeTable::new(shift, entries)?)
}

/// Tables over a known shift may omit `"shift"`.
pub fn table_from_json_over(v: &Value, shift: &Shift) -> Result<PrefixExchangeTable> {
    if v.get("shift").is_some() {
        let t = table_from_json(v)?;
        if t.shift() != shift {
            return Err(TableError::ShiftMismatch.into());
        }
        return Ok(t);
    }
    let entries = pairs_from_json(field(v, "entries", "table")?)?;
    Ok(PrefixExchangeTable::new(shift.clone(), entries)?)
}

pub fn table_to_json(t: &PrefixExchangeTable) -> Value {
    json!({ "shift": shift_to_json(t.shift()), "entries": pairs_to_json(t.entries()) })
}

/// `{"depth": d, "values": {"11": 0, ...}}`.
pub fn lc_to_json(f: &LcFunction<u32>) -> Value {
    let values: serde_json::Map<String, Value> = f.table().iter().map(|(w, v)| (w.to_string(), json!(v))).collect();
    json!({ "depth": f.depth(), "values": values })
}

pub fn lc_from_json(v: &Value, shift: &Shift) -> Result<LcFunction<u32>> {
    let depth = as_u64(field(v, "depth", "function")?, "depth")? as usize;
    let values = field(v, "values", "function")?
        .as_object()
        .ok_or_else(|| invalid("function", "values must be an object"))?;
    let mut table = BTreeMap::new();
    for (k, x) in values {
        let w = Word::parse(k)?;
        let x = u32::try_from(as_u64(x, "function value")?).map_err(|_| invalid("function value", x))?;
        table.insert(w, x);
    }
    Ok(LcFunction::new(shift.clone(), depth, table)?)
}

pub fn cocycles_to_json(c: &CocyclePair) -> Value {
    json!({ "k": lc_to_json(&c.k), "l": lc_to_json(&c.l) })
}

pub fn orbit_cocycles_to_json(d: &OrbitCocycleData) -> Value {
    json!({
        "k1": lc_to_json(&d.k1),
        "l1": lc_to_json(&d.l1),
        "k2": lc_to_json(&d.k2),
        "l2": lc_to_json(&d.l2),
    })
}

pub fn orbit_cocycles_from_json(v: &Value, h: &TailMap) -> Result<OrbitCocycleData> {
    Ok(OrbitCocycleData {
        k1: lc_from_json(field(v, "k1", "cocycles")?, h.source())?,
        l1: lc_from_json(field(v, "l1", "cocycles")?, h.source())?,
        k2: lc_from_json(field(v, "k2", "cocycles")?, h.target())?,
        l2: lc_from_json(field(v, "l2", "cocycles")?, h.target())?,
    })
}

fn rational_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => s.trim().parse::<BigRational>().map_err(|_| invalid("rational", s)),
        Value::Number(n) => n.as_i64().map(|i| BigRational::from_integer(i.into())).ok_or_else(|| invalid("rational", n)),
        _ => Err(invalid("rational", v)),
    }
}

fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// A coefficient: power-basis coordinates `["1/2","0/1"]`, a rational
/// (`"3/4"` or `2`), or a root of unity `{"zeta": e}`.
pub fn scalar_from_json(v: &Value, ctx: &Ctx) -> Result<Scalar> {
    let field = ctx.field();
    match v {
        Value::Array(xs) => {
            let coords = xs.iter().map(rational_from_json).collect::<Result<Vec<_>>>()?;
            field.from_coords(coords).ok_or_else(|| invalid("coefficient", format!("expected {} coordinates", field.degree())))
        }
        Value::Object(_) => {
            let e = field_i64(v, "zeta")?;
            Ok(field.zeta_pow(e))
        }
        _ => Ok(field.from_rational(rational_from_json(v)?)),
    }
}

fn field_i64(v: &Value, key: &str) -> Result<i64> {
    field(v, key, "coefficient")?.as_i64().ok_or_else(|| invalid("coefficient", v))
}

pub fn scalar_to_json(c: &Scalar) -> Value {
    Value::Array(c.coords().iter().map(|r| Value::String(rational_to_string(r))).collect())
}

/// `{"shift": ..., "M": 4, "terms": [{"alpha": "12", "beta": "1", "coeff": [...]}]}`.
pub fn element_from_json(v: &Value) -> Result<CkElement> {
    let shift = shift_from_json(field(v, "shift", "element")?)?;
    let m = match v.get("M") {
        Some(m) => u32::try_from(as_u64(m, "M")?).ok().filter(|&m| m >= 1).ok_or_else(|| invalid("M", m))?,
        None => 4,
    };
    let ctx = CkContext::new(shift, m);
    element_from_json_in(v, &ctx)
}

/// Terms read into an existing algebra; `"shift"` and `"M"` are ignored.
pub fn element_from_json_in(v: &Value, ctx: &Ctx) -> Result<CkElement> {
    let mut terms = Vec::new();
    for t in as_array(field(v, "terms", "element")?, "terms")? {
        let alpha = match t.get("alpha") {
            Some(a) => parse_word(a)?,
            None => Word::empty(),
        };
        let beta = match t.get("beta") {
            Some(b) => parse_word(b)?,
            None => Word::empty(),
        };
        let coeff = match t.get("coeff") {
            Some(c) => scalar_from_json(c, ctx)?,
            None => ctx.field().one(),
        };
        terms.push((alpha, beta, coeff));
    }
    Ok(CkElement::from_terms(ctx, terms)?)
}

pub fn element_to_json(e: &CkElement) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .iter()
        .map(|((a, b), c)| json!({ "alpha": a.to_string(), "beta": b.to_string(), "coeff": scalar_to_json(c) }))
        .collect();
    json!({ "shift": shift_to_json(e.shift()), "M": e.field().order(), "terms": terms })
}

/// `{"depth": 1, "order": 2, "values": {"1": 1, "2": 0}}`, value `e` meaning
/// `ζ_order^e`.
pub fn phase_from_json(v: &Value, shift: &Shift) -> Result<PhaseFunction> {
    let order = u32::try_from(as_u64(field(v, "order", "phase")?, "order")?).map_err(|_| invalid("order", v))?;
    let exps = lc_from_json(v, shift)?;
    Ok(PhaseFunction::new(order, exps)?)
}

pub fn phase_to_json(p: &PhaseFunction) -> Value {
    let mut v = lc_to_json(p.exponents());
    v["order"] = json!(p.order());
    v
}

fn clauses_from_json(v: &Value) -> Result<Vec<Clause>> {
    as_array(v, "program")?
        .iter()
        .map(|c| {
            if let Some(sub) = c.get("sub") {
                match sub.as_array().map(Vec::as_slice) {
                    Some([p, r]) => Ok(Clause::Sub { pattern: parse_word(p)?, replacement: parse_word(r)? }),
                    _ => Err(invalid("clause", format!("sub expects [pattern, replacement], got {sub}"))),
                }
            } else if let Some(ex) = c.get("exchange") {
                Ok(Clause::Exchange(pairs_from_json(ex)?))
            } else {
                Err(invalid("clause", format!("expected sub or exchange, got {c}")))
            }
        })
        .collect()
}

fn clauses_to_json(cs: &[Clause]) -> Value {
    Value::Array(
        cs.iter()
            .map(|c| match c {
                Clause::Sub { pattern, replacement } => json!({ "sub": [pattern.to_string(), replacement.to_string()] }),
                Clause::Exchange(e) => json!({ "exchange": pairs_to_json(e.iter().map(|(a, b)| (a, b))) }),
            })
            .collect(),
    )
}

/// `{"source": ..., "target": ..., "forward": [{"sub": ["21","2"]}], "inverse": [...]}`,
/// or the name `"golden-mean"`.
pub fn tailmap_from_json(v: &Value) -> Result<TailMap> {
    if v.as_str() == Some("golden-mean") {
        return Ok(crate::orbit_equiv::golden_mean_example().0);
    }
    let source = shift_from_json(field(v, "source", "tail map")?)?;
    let target = shift_from_json(field(v, "target", "tail map")?)?;
    let forward = clauses_from_json(field(v, "forward", "tail map")?)?;
    let inverse = clauses_from_json(field(v, "inverse", "tail map")?)?;
    Ok(TailMap::new(source, target, forward, inverse)?)
}

pub fn tailmap_to_json(h: &TailMap) -> Value {
    json!({
        "source": shift_to_json(h.source()),
        "target": shift_to_json(h.target()),
        "forward": clauses_to_json(h.forward()),
        "inverse": clauses_to_json(h.inverse_program()),
    })
}

/// Counterexamples as `[{"point", "lhs", "rhs", "identity"}]`.
pub fn report_to_json(r: &VerificationReport) -> Value {
    Value::Array(
        r.counterexamples
            .iter()
            .map(|c| {
                json!({
                    "point": c.point.to_string(),
                    "lhs": c.lhs.to_string(),
                    "rhs": c.rhs.to_string(),
                    "identity": c.identity,
                })
            })
            .collect(),
    )
}
