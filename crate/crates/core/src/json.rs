//! JSON forms of series and tensor elements. Rationals are
//! `{"num":…,"den":…}`, numbers when they fit in an i64 and decimal strings
//! otherwise; both are accepted on input.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::arith::Rational;
use crate::base::BaseCategory;
use crate::error::{Error, Result};
use crate::incidence::{BasisMonomial, Flavor, TensorElement};
use crate::series::{format_coeff, CoefficientRing, Coeff, Series, SymbolTable};
use crate::shape::{format_shape, parse_shape, Generator, ShapeKind};
use crate::surjections::Decoration;

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn int_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn int_from(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad("integers must be whole")),
        Value::String(s) => s.trim().parse().map_err(|_| bad(format!("bad integer {s:?}"))),
        _ => Err(bad("expected an integer or a decimal string")),
    }
}

pub fn rational_to_json(q: &Rational) -> Value {
    json!({"num": int_value(q.numer()), "den": int_value(q.denom())})
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    let num = int_from(v.get("num").ok_or_else(|| bad("rational needs num"))?)?;
    let den = int_from(v.get("den").ok_or_else(|| bad("rational needs den"))?)?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

fn kind_name(k: ShapeKind) -> &'static str {
    match k {
        ShapeKind::Multiset => "lambda",
        ShapeKind::Word => "word",
    }
}

fn kind_from(s: &str) -> Result<ShapeKind> {
    match s {
        "lambda" => Ok(ShapeKind::Multiset),
        "word" => Ok(ShapeKind::Word),
        other => Err(bad(format!("unknown kind {other:?}"))),
    }
}

/// `{"base","kind","D","color","terms":[{"key","coeff"}]}`; generic
/// coefficients need the symbol table and come out as
/// `{"monomials":[{"coeff":…,"symbols":[…]}]}`.
pub fn series_to_json(f: &Series, table: Option<&SymbolTable>) -> Result<Value> {
    let mut terms = Vec::new();
    for (key, c) in f.terms() {
        let coeff = match c.as_rational() {
            Some(q) => rational_to_json(&q),
            None => {
                let table = table.ok_or_else(|| Error::Invalid("generic coefficients need a symbol table".into()))?;
                let monomials: Vec<Value> = c
                    .terms()
                    .iter()
                    .map(|(m, q)| {
                        let symbols: Vec<String> = m
                            .iter()
                            .map(|s| {
                                let info = table.info(*s);
                                format!("{}[{}]", info.prefix, format_shape(f.base(), &info.generator.shape))
                            })
                            .collect();
                        json!({"coeff": rational_to_json(q), "symbols": symbols})
                    })
                    .collect();
                json!({ "monomials": monomials, "text": format_coeff(c, table, f.base()) })
            }
        };
        terms.push(json!({"key": format_shape(f.base(), key), "coeff": coeff}));
    }
    Ok(json!({
        "base": f.base().spec_string(),
        "kind": kind_name(f.kind()),
        "D": f.degree(),
        "color": f.color(),
        "terms": terms,
    }))
}

/// Rational series only.
pub fn series_from_json(text: &str) -> Result<Series> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let base = BaseCategory::from_spec(v.get("base").and_then(Value::as_str).ok_or_else(|| bad("series needs base"))?)?;
    let kind = kind_from(v.get("kind").and_then(Value::as_str).unwrap_or("lambda"))?;
    let degree = v.get("D").and_then(Value::as_u64).ok_or_else(|| bad("series needs D"))? as usize;
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("series needs terms"))?;
    let mut color = v.get("color").and_then(Value::as_u64).map(|c| c as u32);
    let mut parsed = Vec::new();
    for t in terms {
        let key = t.get("key").and_then(Value::as_str).ok_or_else(|| bad("term needs key"))?;
        let shape = parse_shape(&base, kind, key)?;
        let g = Generator::new(&base, shape)?;
        if *color.get_or_insert(g.color) != g.color {
            return Err(Error::ColorMismatch("series terms must share their color".into()));
        }
        let q = rational_from_json(t.get("coeff").ok_or_else(|| bad("term needs coeff"))?)?;
        parsed.push((g.shape, q));
    }
    let mut s = Series::zero(base, color.unwrap_or(0), kind, CoefficientRing::Rational, degree);
    for (k, q) in parsed {
        if k.size() > degree {
            return Err(Error::OutOfRange { size: k.size(), degree });
        }
        s.add_term(k, Coeff::constant(q))?;
    }
    Ok(s)
}

fn generator_to_json(flavor: &Flavor, g: &Generator) -> Value {
    let text = flavor.format_generator(g);
    if flavor.colors() > 1 {
        json!({"color": g.color, "shape": text})
    } else {
        json!(text)
    }
}

fn generator_from_json(flavor: &Flavor, v: &Value) -> Result<Generator> {
    let (text, color) = match v {
        Value::String(s) => (s.as_str(), None),
        Value::Object(o) => (
            o.get("shape").and_then(Value::as_str).ok_or_else(|| bad("generator needs shape"))?,
            o.get("color").and_then(Value::as_u64),
        ),
        _ => return Err(bad("generator must be a string or an object")),
    };
    let g = flavor.parse_generator(text)?;
    if color.is_some_and(|c| c != g.color as u64) {
        return Err(Error::ColorMismatch(format!("generator {text:?} does not have color {}", color.unwrap())));
    }
    Ok(g)
}

/// Registered names, `pleth-y:<base>`, and the generated `ts:<decoration>:colors=k`.
pub fn flavor_by_name(name: &str) -> Result<Flavor> {
    if let Some(rest) = name.strip_prefix("ts:") {
        let (dec, colors) = rest.rsplit_once(":colors=").ok_or_else(|| bad(format!("bad flavor name {name:?}")))?;
        let colors: u32 = colors.parse().map_err(|_| bad(format!("bad color count in {name:?}")))?;
        if colors == 0 || colors > 16 {
            return Err(Error::Invalid("color count must be in 1..=16".into()));
        }
        return dec.parse::<Decoration>()?.flavor(colors);
    }
    Flavor::by_name(name)
}

/// `{"flavor","sigma","terms":[{"coeff","left":[…],"right":[…]}]}`, terms
/// sorted by (right leg, left leg).
pub fn tensor_to_json(flavor: &Flavor, sigma: Option<&Generator>, t: &TensorElement) -> Value {
    let legs = |m: &BasisMonomial| Value::Array(m.factors.iter().map(|g| generator_to_json(flavor, g)).collect());
    let terms: Vec<Value> = t
        .sorted_terms()
        .into_iter()
        .map(|(l, r, q)| json!({"coeff": rational_to_json(q), "left": legs(l), "right": legs(r)}))
        .collect();
    let mut o = Map::new();
    o.insert("flavor".into(), json!(flavor.name));
    o.insert("sigma".into(), sigma.map_or(Value::Null, |g| generator_to_json(flavor, g)));
    o.insert("terms".into(), Value::Array(terms));
    Value::Object(o)
}

pub fn tensor_from_json(text: &str) -> Result<(Flavor, Option<Generator>, TensorElement)> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let flavor = flavor_by_name(v.get("flavor").and_then(Value::as_str).ok_or_else(|| bad("tensor needs flavor"))?)?;
    let sigma = match v.get("sigma") {
        None | Some(Value::Null) => None,
        Some(s) => Some(generator_from_json(&flavor, s)?),
    };
    let mut t = TensorElement::new();
    for term in v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("tensor needs terms"))? {
        let leg = |name: &str| -> Result<BasisMonomial> {
            let gens = term.get(name).and_then(Value::as_array).ok_or_else(|| bad(format!("term needs {name}")))?;
            Ok(flavor.monomial(gens.iter().map(|g| generator_from_json(&flavor, g)).collect::<Result<_>>()?))
        };
        let q = rational_from_json(term.get("coeff").ok_or_else(|| bad("term needs coeff"))?)?;
        t.add(leg("left")?, leg("right")?, q);
    }
    Ok((flavor, sigma, t))
}
