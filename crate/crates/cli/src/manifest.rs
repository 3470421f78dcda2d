//! JSON manifests: a ring declaration plus named polynomial bindings.
//!
//! ```json
//! {"ring": {"groups": [{"id": "X", "kind": "point", "dim": 2}]},
//!  "polys": {"f": "X0^2 - X1*X2", "g": "X0"},
//!  "family": "L"}
//! ```
//!
//! `polys` may also be an array, and a single `"poly"` may replace it.
//! Indexed coefficient groups are declared with `"indexed": {"n": 1, "weight": 2}`.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use chowkit_core::grammar::parse;
use chowkit_core::numfield::{Element, NumberField};
use chowkit_core::univariate::UniPoly;
use chowkit_core::{GroupDecl, GroupKind, Limits, Poly, Rational, Ring};
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};

pub struct Manifest {
    pub polys: Vec<(String, Poly)>,
    pub family: Option<String>,
}

pub fn read_json(path: &Path) -> CliResult<Value> {
    let text = fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> CliResult<&'a Value> {
    obj.get(key).ok_or_else(|| CliError::usage(format!("missing field `{key}`")))
}

fn as_usize(v: &Value, what: &str) -> CliResult<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| CliError::usage(format!("`{what}` must be a non-negative integer")))
}

fn parse_group(v: &Value) -> CliResult<GroupDecl> {
    let obj = v.as_object().ok_or_else(|| CliError::usage("a group must be an object"))?;
    let id = field(obj, "id")?.as_str().ok_or_else(|| CliError::usage("`id` must be a string"))?;
    let kind_s = field(obj, "kind")?.as_str().ok_or_else(|| CliError::usage("`kind` must be a string"))?;
    let kind = GroupKind::parse(kind_s).ok_or_else(|| CliError::usage(format!("unknown group kind `{kind_s}`")))?;
    if let Some(ix) = obj.get("indexed") {
        let ix = ix.as_object().ok_or_else(|| CliError::usage("`indexed` must be an object"))?;
        let n = as_usize(field(ix, "n")?, "n")?;
        let weight = as_usize(field(ix, "weight")?, "weight")? as u32;
        return Ok(GroupDecl::indexed(id, kind, n, weight));
    }
    let dim = as_usize(field(obj, "dim")?, "dim")?;
    Ok(match obj.get("copies") {
        Some(c) => GroupDecl::family(id, kind, dim, as_usize(c, "copies")?),
        None => GroupDecl::single(id, kind, dim),
    })
}

pub fn parse_ring(v: &Value) -> CliResult<Arc<Ring>> {
    let groups = v
        .get("groups")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::usage("a ring declaration needs a `groups` array"))?;
    let decls = groups.iter().map(parse_group).collect::<CliResult<Vec<_>>>()?;
    Ok(Arc::new(Ring::new(decls)?))
}

pub fn ring_json(ring: &Ring) -> Value {
    let groups: Vec<Value> = ring
        .groups()
        .iter()
        .map(|g| {
            let mut obj = Map::new();
            obj.insert("id".into(), json!(g.id));
            obj.insert("kind".into(), json!(g.kind.as_str()));
            match g.labels {
                Some(l) => {
                    obj.insert("indexed".into(), json!({"n": l.n, "weight": l.weight}));
                }
                None => {
                    obj.insert("dim".into(), json!(g.dim));
                }
            }
            if let Some(c) = g.copies {
                obj.insert("copies".into(), json!(c));
            }
            Value::Object(obj)
        })
        .collect();
    json!({ "groups": groups })
}

impl Manifest {
    pub fn load(path: &Path) -> CliResult<Self> {
        Self::from_value(&read_json(path)?)
    }

    pub fn from_value(v: &Value) -> CliResult<Self> {
        let obj = v.as_object().ok_or_else(|| CliError::usage("a manifest must be a JSON object"))?;
        let ring = parse_ring(field(obj, "ring")?)?;
        let text = |v: &Value| -> CliResult<Poly> {
            let s = v.as_str().ok_or_else(|| CliError::usage("polynomials must be strings"))?;
            Ok(parse(s, &ring)?)
        };
        let mut polys = Vec::new();
        if let Some(p) = obj.get("poly") {
            polys.push(("poly".to_string(), text(p)?));
        }
        match obj.get("polys") {
            Some(Value::Array(items)) => {
                for (i, p) in items.iter().enumerate() {
                    polys.push((i.to_string(), text(p)?));
                }
            }
            Some(Value::Object(items)) => {
                for (k, p) in items {
                    polys.push((k.clone(), text(p)?));
                }
            }
            Some(_) => return Err(CliError::usage("`polys` must be an array or an object")),
            None => {}
        }
        let family = match obj.get("family") {
            Some(f) => Some(f.as_str().ok_or_else(|| CliError::usage("`family` must be a string"))?.to_string()),
            None => None,
        };
        Ok(Manifest { polys, family })
    }

    /// The binding `name`, or the only binding when `name` is absent.
    pub fn one(&self, name: Option<&str>) -> CliResult<Poly> {
        match name {
            Some(n) => self
                .polys
                .iter()
                .find(|(k, _)| k == n)
                .map(|(_, p)| p.clone())
                .ok_or_else(|| CliError::usage(format!("no polynomial named `{n}`"))),
            None => match self.polys.as_slice() {
                [(_, p)] => Ok(p.clone()),
                [] => Err(CliError::usage("the manifest binds no polynomial")),
                _ => Err(CliError::usage("the manifest binds several polynomials; choose one with --name")),
            },
        }
    }

    pub fn system(&self) -> CliResult<Vec<Poly>> {
        if self.polys.is_empty() {
            return Err(CliError::usage("the manifest binds no polynomial"));
        }
        Ok(self.polys.iter().map(|(_, p)| p.clone()).collect())
    }

    pub fn to_value(ring: &Ring, poly: &Poly, family: Option<&str>) -> Value {
        let mut obj = Map::new();
        obj.insert("ring".into(), ring_json(ring));
        obj.insert("poly".into(), json!(poly.to_string()));
        if let Some(f) = family {
            obj.insert("family".into(), json!(f));
        }
        Value::Object(obj)
    }
}

pub fn parse_rational(s: &str) -> CliResult<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| CliError::usage(format!("`{s}` is not a rational number")))
}

/// A comma-separated list of rationals.
pub fn parse_vector(s: &str) -> CliResult<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

fn scalar_ring() -> Arc<Ring> {
    Arc::new(Ring::new(vec![GroupDecl::single("t", GroupKind::Scalar, 0)]).expect("valid ring"))
}

/// A univariate polynomial in `t`, in the polynomial grammar.
pub fn parse_univariate(s: &str) -> CliResult<UniPoly> {
    let ring = scalar_ring();
    let p = parse(s, &ring)?;
    let mut coeffs: Vec<Rational> = Vec::new();
    for (m, c) in p.terms() {
        let e = m.exp(&ring, 0, 0) as usize;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, Rational::zero());
        }
        coeffs[e] = c.clone();
    }
    Ok(UniPoly::new(coeffs))
}

pub fn format_element(a: &Element) -> String {
    let ring = scalar_ring();
    let terms = a.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
        let t = Poly::var(&ring, 0, 0).pow(i as u32);
        t.scale(c)
    });
    terms.fold(Poly::zero(&ring), |acc, t| &acc + &t).to_string()
}

pub fn number_field(minpoly: Option<&str>, limits: &Limits) -> CliResult<NumberField> {
    match minpoly {
        Some(m) => Ok(NumberField::new(parse_univariate(m)?, limits)?),
        None => Ok(NumberField::rationals()),
    }
}

/// Comma-separated field elements in `t`.
pub fn parse_elements(s: &str) -> CliResult<Vec<Element>> {
    s.split(',').map(parse_univariate).collect()
}

pub fn format_point(coords: &[String]) -> String {
    format!("[{}]", coords.join(":"))
}
