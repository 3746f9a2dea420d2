//! Line-oriented JSON forms of hyperplanes, faces, hemispaces, and reports.
//!
//! Indices are 1-based and the free term is written `"free"`. A hemispace is
//! written from its own point of view: `owns` lists the k-faces it contains,
//! `typeI` is `"first"` when it holds the whole type-I face, `"second"` when
//! its complement does, or a sub-hemispace over the free coordinates, and
//! `typeII` tells whether it holds the type-II face.

use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::error::{Error, ParseError, Result};
use crate::faces::{ExtIndex, FaceId, Hyperplane, HyperplaneSpec, IndexSet};
use crate::hemispace::{validate_partition, ConvexityReport, Hemispace, PartSide, TypeIShare};

fn bad(msg: impl Into<String>) -> Error {
    ParseError::Json(msg.into()).into()
}

fn parse_text(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| bad(e.to_string()))
}

fn object<'a>(v: &'a Value, what: &str, allowed: &[&str]) -> Result<&'a Map<String, Value>> {
    let obj = v
        .as_object()
        .ok_or_else(|| bad(format!("{what} must be an object")))?;
    if let Some(key) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(bad(format!("unknown key `{key}` in {what}")));
    }
    Ok(obj)
}

fn usize_list(v: Option<&Value>, key: &str) -> Result<Vec<usize>> {
    let Some(v) = v else {
        return Ok(Vec::new());
    };
    v.as_array()
        .ok_or_else(|| bad(format!("`{key}` must be an array")))?
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|u| u as usize)
                .ok_or_else(|| bad(format!("`{key}` entries must be positive integers")))
        })
        .collect()
}

pub fn hyperplane_to_json(h: &Hyperplane) -> Value {
    let s = h.spec();
    json!({"n": s.n, "I": s.i, "J": s.j, "L": s.l, "alpha": s.alpha})
}

/// `J` and `L` default to empty; `n`, `I`, and `alpha` are required.
pub fn hyperplane_from_json(v: &Value) -> Result<Hyperplane> {
    let obj = object(v, "hyperplane", &["n", "I", "J", "L", "alpha"])?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("hyperplane needs an integer `n`"))? as usize;
    if !obj.contains_key("I") {
        return Err(bad("hyperplane needs `I`"));
    }
    let alpha = obj
        .get("alpha")
        .and_then(Value::as_bool)
        .ok_or_else(|| bad("hyperplane needs a boolean `alpha`"))?;
    Hyperplane::new(&HyperplaneSpec {
        n,
        i: usize_list(obj.get("I"), "I")?,
        j: usize_list(obj.get("J"), "J")?,
        l: usize_list(obj.get("L"), "L")?,
        alpha,
    })
}

pub fn parse_hyperplane(text: &str) -> Result<Hyperplane> {
    hyperplane_from_json(&parse_text(text)?)
}

pub fn index_set_to_json(s: IndexSet) -> Value {
    Value::Array(
        s.iter()
            .map(|i| match i {
                ExtIndex::Coord(c) => json!(c),
                ExtIndex::FreeTerm => json!("free"),
            })
            .collect(),
    )
}

pub fn index_set_from_json(v: &Value) -> Result<IndexSet> {
    let items = v
        .as_array()
        .ok_or_else(|| bad("an index set must be an array"))?;
    let mut set = IndexSet::EMPTY;
    for item in items {
        let index = match item {
            Value::String(s) if s == "free" => ExtIndex::FreeTerm,
            Value::Number(_) => match item.as_u64() {
                Some(c) if (1..=crate::faces::MAX_COORD as u64).contains(&c) => {
                    ExtIndex::Coord(c as usize)
                }
                _ => return Err(bad(format!("index {item} out of range"))),
            },
            _ => return Err(bad(format!("invalid index {item}"))),
        };
        if set.contains(index) {
            return Err(bad(format!("index {index} repeated")));
        }
        set = set.with(index);
    }
    Ok(set)
}

pub fn face_to_json(face: FaceId) -> Value {
    match face {
        FaceId::K(k) => json!({ "k": index_set_to_json(k) }),
        FaceId::TypeI => json!("typeI"),
        FaceId::TypeII => json!("typeII"),
    }
}

pub fn face_from_json(v: &Value) -> Result<FaceId> {
    match v {
        Value::String(s) if s == "typeI" => Ok(FaceId::TypeI),
        Value::String(s) if s == "typeII" => Ok(FaceId::TypeII),
        Value::Object(_) => {
            let obj = object(v, "face", &["k"])?;
            let k = index_set_from_json(obj.get("k").ok_or_else(|| bad("face needs `k`"))?)?;
            if k.is_empty() {
                return Err(bad("a k-face needs a nonempty index set"));
            }
            Ok(FaceId::K(k))
        }
        _ => Err(bad(format!("invalid face {v}"))),
    }
}

pub fn hemispace_to_json(hm: &Hemispace) -> Value {
    let mut obj = Map::new();
    obj.insert("hyperplane".into(), hyperplane_to_json(hm.hyperplane()));
    let owns = hm.partition().get(hm.owned_side());
    obj.insert(
        "owns".into(),
        Value::Array(owns.iter().map(|&s| index_set_to_json(s)).collect()),
    );
    if let Some(share) = hm.type_i() {
        let v = match share {
            TypeIShare::All => json!("first"),
            TypeIShare::Nothing => json!("second"),
            TypeIShare::Part(sub) => hemispace_to_json(sub),
        };
        obj.insert("typeI".into(), v);
    }
    if let Some(b) = hm.type_ii() {
        obj.insert("typeII".into(), json!(b));
    }
    Value::Object(obj)
}

/// Rebuilds a hemispace. The partition is stored with the side holding the
/// singletons of `J̄` first (or everything first when one side is empty), the
/// layout produced by enumeration.
pub fn hemispace_from_json(v: &Value) -> Result<Hemispace> {
    let obj = object(v, "hemispace", &["hyperplane", "owns", "typeI", "typeII"])?;
    let h = hyperplane_from_json(
        obj.get("hyperplane")
            .ok_or_else(|| bad("hemispace needs `hyperplane`"))?,
    )?;
    let owns: Vec<IndexSet> = obj
        .get("owns")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("hemispace needs an `owns` array"))?
        .iter()
        .map(index_set_from_json)
        .collect::<Result<_>>()?;
    let rest: Vec<IndexSet> = h
        .universe()
        .nonempty_subsets()
        .into_iter()
        .filter(|s| !owns.contains(s))
        .collect();
    let jbar_single = h.jbar().iter().next().map(IndexSet::singleton);
    let owns_first = if owns.is_empty() {
        false
    } else if rest.is_empty() {
        true
    } else {
        jbar_single.is_some_and(|s| owns.contains(&s))
    };
    let (partition, side) = if owns_first {
        (validate_partition(&h, &owns, &rest)?, PartSide::First)
    } else {
        (validate_partition(&h, &rest, &owns)?, PartSide::Second)
    };
    let type_i = match obj.get("typeI") {
        None => None,
        Some(Value::String(s)) if s == "first" => Some(TypeIShare::All),
        Some(Value::String(s)) if s == "second" => Some(TypeIShare::Nothing),
        Some(sub @ Value::Object(_)) => Some(TypeIShare::Part(Box::new(hemispace_from_json(sub)?))),
        Some(other) => return Err(bad(format!("invalid typeI {other}"))),
    };
    let type_ii = match obj.get("typeII") {
        None => None,
        Some(b) => Some(b.as_bool().ok_or_else(|| bad("`typeII` must be a boolean"))?),
    };
    Hemispace::new(h, partition, side, type_i, type_ii)
}

pub fn parse_hemispace(text: &str) -> Result<Hemispace> {
    hemispace_from_json(&parse_text(text)?)
}

pub fn report_to_json(r: &ConvexityReport) -> Value {
    let counterexample = match &r.counterexample {
        None => Value::Null,
        Some(c) => json!({
            "x": c.x.to_string(),
            "y": c.y.to_string(),
            "param": {"alpha": c.param.alpha().to_string(), "beta": c.param.beta().to_string()},
            "point": c.point.to_string(),
        }),
    };
    json!({
        "pass": r.pass,
        "counterexample": counterexample,
        "pairs_checked": r.pairs_checked,
    })
}

/// A JSON number when it fits in 64 bits, a decimal string otherwise.
pub fn big_to_json(v: &BigUint) -> Value {
    u64::try_from(v).map_or_else(|_| json!(v.to_string()), |u| json!(u))
}

pub fn count_row(n: usize, enumerated: &BigUint, formula: &BigUint) -> Value {
    json!({
        "n": n,
        "enumerated": big_to_json(enumerated),
        "formula": big_to_json(formula),
        "match": enumerated == formula,
    })
}
