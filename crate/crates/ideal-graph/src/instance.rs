//! JSON instance files: a ring descriptor, a grading and optional limits.
//!
//! ```json
//! {"ring": {"idealization": {"base": {"zn": 4}, "module": "self"}},
//!  "grading": "canonical"}
//! ```
//!
//! Errors name the offending path, e.g. `$.ring.product[1].zn`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use ideal_graph_core::bitset::ElemSet;
use ideal_graph_core::grading::{self, Degree, GradeGroup, Grading};
use ideal_graph_core::ideal;
use ideal_graph_core::limits::Limits;
use ideal_graph_core::ring::{self, FiniteGroup, FiniteModule, FiniteRing};
use serde_json::{Map, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("unknown constructor `{name}` at {path}")]
    UnknownConstructor { path: String, name: String },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {source}")]
    Algebra { path: String, source: ideal_graph_core::Error },
}

type Result<T> = std::result::Result<T, InstanceError>;

/// A parsed and validated instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub grading: Grading,
    pub limits: Limits,
}

impl Instance {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        self.grading.ring()
    }
}

pub fn load_instance(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path)
        .map_err(|e| InstanceError::Io { path: path.display().to_string(), message: e.to_string() })?;
    let mut inst = parse_instance(&text)?;
    if inst.name.is_empty() {
        inst.name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    }
    Ok(inst)
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let value: Value = serde_json::from_str(text)?;
    let top = object(&value, "$")?;
    for key in top.keys() {
        if !matches!(key.as_str(), "name" | "ring" | "grading" | "limits") {
            return Err(schema(&format!("$.{key}"), "unexpected key"));
        }
    }
    let limits = match top.get("limits") {
        Some(v) => parse_limits(v, "$.limits")?,
        None => Limits::default(),
    };
    let name = match top.get("name") {
        Some(Value::String(s)) => s.clone(),
        Some(_) => return Err(schema("$.name", "expected a string")),
        None => String::new(),
    };
    let ring_value = top.get("ring").ok_or_else(|| schema("$.ring", "missing"))?;
    let ring = Arc::new(parse_ring(ring_value, "$.ring", &limits)?);
    let grading = match top.get("grading") {
        Some(v) => parse_grading(v, "$.grading", &ring)?,
        None => grading::trivial_grading(&ring, GradeGroup::Integers),
    };
    Ok(Instance { name, grading, limits })
}

fn schema(path: &str, message: &str) -> InstanceError {
    InstanceError::Schema { path: path.into(), message: message.into() }
}

fn algebra(path: &str) -> impl FnOnce(ideal_graph_core::Error) -> InstanceError + '_ {
    move |source| InstanceError::Algebra { path: path.into(), source }
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| schema(path, "expected an object"))
}

/// `{"name": body}` with exactly one key.
fn tagged<'a>(v: &'a Value, path: &str) -> Result<(&'a str, &'a Value)> {
    let map = object(v, path)?;
    let mut it = map.iter();
    match (it.next(), it.next()) {
        (Some((k, body)), None) => Ok((k.as_str(), body)),
        _ => Err(schema(path, "expected an object with exactly one constructor key")),
    }
}

fn field<'a>(map: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    map.get(key).ok_or_else(|| schema(&format!("{path}.{key}"), "missing"))
}

fn only_keys(map: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<()> {
    match map.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(schema(&format!("{path}.{k}"), "unexpected key")),
        None => Ok(()),
    }
}

fn count(v: &Value, path: &str, min: u64) -> Result<usize> {
    match v.as_u64() {
        Some(n) if n >= min => Ok(n as usize),
        _ => Err(schema(path, &format!("expected an integer >= {min}"))),
    }
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(path, "expected an array"))
}

fn parse_limits(v: &Value, path: &str) -> Result<Limits> {
    let map = object(v, path)?;
    let mut limits = Limits::default();
    for (k, val) in map {
        let p = format!("{path}.{k}");
        let n = count(val, &p, 1)?;
        match k.as_str() {
            "ring_size" => limits.ring_size = n,
            "ideal_count" => limits.ideal_count = n,
            "graph_order" => limits.graph_order = n,
            "planarity_order" => limits.planarity_order = n,
            _ => return Err(schema(&p, "unknown limit")),
        }
    }
    Ok(limits)
}

/// An element given by index or by label.
fn element(r: &FiniteRing, v: &Value, path: &str) -> Result<usize> {
    match v {
        Value::Number(_) => match v.as_u64() {
            Some(i) if (i as usize) < r.size() => Ok(i as usize),
            _ => Err(schema(path, &format!("element index out of range for {}", r.description()))),
        },
        Value::String(s) => {
            r.element(s).ok_or_else(|| schema(path, &format!("no element labelled `{s}` in {}", r.description())))
        }
        _ => Err(schema(path, "expected an element index or label")),
    }
}

fn elements(r: &FiniteRing, v: &Value, path: &str) -> Result<Vec<usize>> {
    array(v, path)?.iter().enumerate().map(|(i, x)| element(r, x, &format!("{path}[{i}]"))).collect()
}

fn parse_ring(v: &Value, path: &str, limits: &Limits) -> Result<FiniteRing> {
    let (name, body) = tagged(v, path)?;
    let p = format!("{path}.{name}");
    match name {
        "zn" => {
            let n = count(body, &p, 2)?;
            ring::make_cyclic_ring(n, limits).map_err(algebra(&p))
        }
        "product" => {
            let parts = array(body, &p)?;
            if parts.len() < 2 {
                return Err(schema(&p, "a product needs at least two factors"));
            }
            let mut acc = Arc::new(parse_ring(&parts[0], &format!("{p}[0]"), limits)?);
            for (i, part) in parts.iter().enumerate().skip(1) {
                let q = format!("{p}[{i}]");
                let next = Arc::new(parse_ring(part, &q, limits)?);
                acc = Arc::new(ring::direct_product(&acc, &next, limits).map_err(algebra(&q))?);
            }
            Ok(Arc::try_unwrap(acc).unwrap_or_else(|a| (*a).clone()))
        }
        "poly_quotient" => {
            let map = object(body, &p)?;
            only_keys(map, &["base", "modulus"], &p)?;
            let base = Arc::new(parse_ring(field(map, "base", &p)?, &format!("{p}.base"), limits)?);
            let modulus = elements(&base, field(map, "modulus", &p)?, &format!("{p}.modulus"))?;
            ring::polynomial_quotient(&base, &modulus, limits).map_err(algebra(&p))
        }
        "algebra" => {
            let map = object(body, &p)?;
            only_keys(map, &["n", "dim", "basis", "table"], &p)?;
            let n = count(field(map, "n", &p)?, &format!("{p}.n"), 2)?;
            let dim = count(field(map, "dim", &p)?, &format!("{p}.dim"), 1)?;
            let basis = match map.get("basis") {
                None => None,
                Some(b) => Some(
                    array(b, &format!("{p}.basis"))?
                        .iter()
                        .enumerate()
                        .map(|(i, s)| {
                            s.as_str().map(str::to_owned).ok_or_else(|| schema(&format!("{p}.basis[{i}]"), "expected a string"))
                        })
                        .collect::<Result<Vec<_>>>()?,
                ),
            };
            let tp = format!("{p}.table");
            let table: Vec<Vec<Vec<usize>>> = serde_json::from_value(field(map, "table", &p)?.clone())
                .map_err(|e| schema(&tp, &format!("expected a dim x dim table of coordinate vectors ({e})")))?;
            ring::algebra_over_zn(n, dim, &table, basis, limits).map_err(algebra(&p))
        }
        "group_ring" => {
            let map = object(body, &p)?;
            only_keys(map, &["base", "group"], &p)?;
            let base = Arc::new(parse_ring(field(map, "base", &p)?, &format!("{p}.base"), limits)?);
            let group = Arc::new(parse_group(field(map, "group", &p)?, &format!("{p}.group"))?);
            ring::group_ring(&base, &group, limits).map_err(algebra(&p))
        }
        "idealization" => {
            let map = object(body, &p)?;
            only_keys(map, &["base", "module"], &p)?;
            let base = Arc::new(parse_ring(field(map, "base", &p)?, &format!("{p}.base"), limits)?);
            let module = Arc::new(parse_module(&base, field(map, "module", &p)?, &format!("{p}.module"))?);
            ring::idealization(&base, &module, limits).map_err(algebra(&p))
        }
        other => Err(InstanceError::UnknownConstructor { path: path.into(), name: other.into() }),
    }
}

fn parse_module(base: &Arc<FiniteRing>, v: &Value, path: &str) -> Result<FiniteModule> {
    if v.as_str() == Some("self") {
        return FiniteModule::self_module(base).map_err(algebra(path));
    }
    let (name, body) = tagged(v, path)?;
    let p = format!("{path}.{name}");
    match name {
        // R/I with I the left ideal generated by the listed elements.
        "quotient" => {
            let gens = elements(base, body, &p)?;
            let i = ideal::generated_left_ideal(base, gens);
            FiniteModule::quotient(base, i.members()).map_err(algebra(&p))
        }
        "direct_sum" => {
            let parts = array(body, &p)?;
            if parts.len() < 2 {
                return Err(schema(&p, "a direct sum needs at least two summands"));
            }
            let mut acc = parse_module(base, &parts[0], &format!("{p}[0]"))?;
            for (i, part) in parts.iter().enumerate().skip(1) {
                let q = format!("{p}[{i}]");
                let next = parse_module(base, part, &q)?;
                acc = FiniteModule::direct_sum(&acc, &next).map_err(algebra(&q))?;
            }
            Ok(acc)
        }
        other => Err(InstanceError::UnknownConstructor { path: path.into(), name: other.into() }),
    }
}

fn parse_group(v: &Value, path: &str) -> Result<FiniteGroup> {
    let (name, body) = tagged(v, path)?;
    let p = format!("{path}.{name}");
    match name {
        "cyclic" => FiniteGroup::cyclic(count(body, &p, 1)?).map_err(algebra(&p)),
        "symmetric" => FiniteGroup::symmetric(count(body, &p, 1)?).map_err(algebra(&p)),
        "dihedral" => FiniteGroup::dihedral(count(body, &p, 1)?).map_err(algebra(&p)),
        "product" => {
            let parts = array(body, &p)?;
            if parts.len() < 2 {
                return Err(schema(&p, "a product needs at least two factors"));
            }
            let mut acc = parse_group(&parts[0], &format!("{p}[0]"))?;
            for (i, part) in parts.iter().enumerate().skip(1) {
                let q = format!("{p}[{i}]");
                acc = FiniteGroup::product(&acc, &parse_group(part, &q)?).map_err(algebra(&q))?;
            }
            Ok(acc)
        }
        "table" => {
            let map = object(body, &p)?;
            only_keys(map, &["table", "names"], &p)?;
            let table: Vec<Vec<usize>> = serde_json::from_value(field(map, "table", &p)?.clone())
                .map_err(|e| schema(&format!("{p}.table"), &format!("expected a square table of indices ({e})")))?;
            let names: Option<Vec<String>> = match map.get("names") {
                None => None,
                Some(n) => Some(
                    serde_json::from_value(n.clone())
                        .map_err(|e| schema(&format!("{p}.names"), &format!("expected strings ({e})")))?,
                ),
            };
            FiniteGroup::from_table(&table, names, "table group").map_err(algebra(&p))
        }
        other => Err(InstanceError::UnknownConstructor { path: path.into(), name: other.into() }),
    }
}

fn parse_grade_group(v: &Value, path: &str) -> Result<GradeGroup> {
    if v.as_str() == Some("integers") {
        return Ok(GradeGroup::Integers);
    }
    Ok(GradeGroup::Finite(Arc::new(parse_group(v, path)?)))
}

/// A degree: an integer, or for finite groups an element index or name.
fn parse_degree(group: &GradeGroup, v: &Value, path: &str) -> Result<Degree> {
    match (group, v) {
        (GradeGroup::Integers, Value::Number(n)) => {
            n.as_i64().map(Degree).ok_or_else(|| schema(path, "expected an integer degree"))
        }
        (GradeGroup::Finite(g), Value::Number(n)) => match n.as_u64() {
            Some(i) if (i as usize) < g.size() => Ok(Degree(i as i64)),
            _ => Err(schema(path, "group element index out of range")),
        },
        (GradeGroup::Finite(g), Value::String(s)) => (0..g.size())
            .find(|&i| g.name(i) == s)
            .map(|i| Degree(i as i64))
            .ok_or_else(|| schema(path, &format!("no group element named `{s}`"))),
        _ => Err(schema(path, "expected a degree")),
    }
}

fn parse_grading(v: &Value, path: &str, ring: &Arc<FiniteRing>) -> Result<Grading> {
    match v.as_str() {
        Some("canonical") => return grading::canonical_grading(ring).map_err(algebra(path)),
        Some("trivial") => return Ok(grading::trivial_grading(ring, GradeGroup::Integers)),
        Some(other) => return Err(InstanceError::UnknownConstructor { path: path.into(), name: other.into() }),
        None => {}
    }
    let (name, body) = tagged(v, path)?;
    let p = format!("{path}.{name}");
    match name {
        "trivial" => {
            let map = object(body, &p)?;
            only_keys(map, &["group"], &p)?;
            let group = match map.get("group") {
                Some(g) => parse_grade_group(g, &format!("{p}.group"))?,
                None => GradeGroup::Integers,
            };
            Ok(grading::trivial_grading(ring, group))
        }
        "explicit" => {
            let map = object(body, &p)?;
            only_keys(map, &["group", "components"], &p)?;
            let group = parse_grade_group(field(map, "group", &p)?, &format!("{p}.group"))?;
            let cp = format!("{p}.components");
            let mut gens: BTreeMap<Degree, Vec<usize>> = BTreeMap::new();
            for (i, c) in array(field(map, "components", &p)?, &cp)?.iter().enumerate() {
                let q = format!("{cp}[{i}]");
                let cm = object(c, &q)?;
                only_keys(cm, &["degree", "generators"], &q)?;
                let d = parse_degree(&group, field(cm, "degree", &q)?, &format!("{q}.degree"))?;
                let e = elements(ring, field(cm, "generators", &q)?, &format!("{q}.generators"))?;
                gens.entry(d).or_default().extend(e);
            }
            let list: Vec<(Degree, Vec<usize>)> = gens.into_iter().collect();
            grading::grading_from_generators(ring, group, &list).map_err(algebra(&p))
        }
        other => Err(InstanceError::UnknownConstructor { path: path.into(), name: other.into() }),
    }
}

/// Elements of `set` by label, for listings.
pub fn element_labels(r: &FiniteRing, set: &ElemSet) -> Vec<String> {
    set.iter().map(|x| r.label(x).to_owned()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_basic_shapes() {
        let i = parse_instance(r#"{"ring":{"zn":12},"grading":{"trivial":{"group":{"cyclic":2}}}}"#).unwrap();
        assert_eq!(i.ring().size(), 12);
        assert!(i.grading.is_trivial());
        let i = parse_instance(r#"{"ring":{"idealization":{"base":{"zn":4},"module":"self"}},"grading":"canonical"}"#)
            .unwrap();
        assert_eq!(i.ring().size(), 16);
        assert_eq!(i.grading.support().len(), 2);
    }

    #[test]
    fn zero_modulus_is_a_schema_error() {
        let e = parse_instance(r#"{"ring":{"zn":0}}"#).unwrap_err();
        assert!(matches!(&e, InstanceError::Schema { path, .. } if path == "$.ring.zn"), "{e}");
    }

    #[test]
    fn paths_reach_nested_errors() {
        let e = parse_instance(r#"{"ring":{"product":[{"zn":2},{"zq":3}]}}"#).unwrap_err();
        assert!(matches!(&e, InstanceError::UnknownConstructor { path, name } if path == "$.ring.product[1]" && name == "zq"));
        let e = parse_instance(r#"{"ring":{"zn":4},"grading":"canonical"}"#).unwrap_err();
        assert!(matches!(e, InstanceError::Algebra { .. }));
        let e = parse_instance(r#"{"ring":{"zn":4},"limits":{"ring_size":2}}"#).unwrap_err();
        assert!(e.to_string().contains("$.ring.zn"), "{e}");
    }

    #[test]
    fn explicit_integer_grading() {
        let text = r#"{"ring":{"algebra":{"n":2,"dim":3,"basis":["1","x","y"],
            "table":[[[1,0,0],[0,1,0],[0,0,1]],[[0,1,0],[0,0,0],[0,0,0]],[[0,0,1],[0,0,0],[0,0,0]]]}},
            "grading":{"explicit":{"group":"integers","components":[
              {"degree":0,"generators":["1"]},{"degree":1,"generators":["x"]},{"degree":2,"generators":["y"]}]}}}"#;
        let i = parse_instance(text).unwrap();
        assert_eq!(i.grading.support(), vec![Degree(0), Degree(1), Degree(2)]);
    }
}
