//! JSON documents for every data type. Output is canonical: object keys are
//! sorted, rationals are JSON integers when they fit in `i64` and `"p/q"`
//! strings otherwise, and indexed maps use decimal keys `"n"` or `"n,i"`.

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::affine::{AffineMap, AffineSimplicialObject, Basepoint};
use crate::error::{Error, Result};
use crate::kan::{HornElement, HornIndex};
use crate::linalg::rational::{rational_from_json, rational_to_json};
use crate::linalg::{Rational, RationalMatrix};
use crate::normalization::{NormalizedComplex, PointedFamily};
use crate::simplicial::{ChainComplex, ChainMap, FaceMaps, SemiSVS, SimplicialMorphism, TruncatedSVS};

pub const SVS: &str = "svs/1";
pub const CHAIN: &str = "chain/1";
pub const FAMILY: &str = "family/1";
pub const AFFINE: &str = "affine/1";
pub const MORPHISM: &str = "morphism/1";
pub const CHAIN_MAP: &str = "chain-map/1";
pub const NORMALIZED: &str = "normalized/1";

pub trait ToJson {
    fn to_json(&self) -> Value;
}

pub trait FromJson: Sized {
    fn from_json(value: &Value) -> Result<Self>;
}

/// Pretty-printed with sorted keys and a trailing newline.
pub fn canonical_string(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    text.push('\n');
    text
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), kind: e.kind() })?;
    Ok(serde_json::from_str(&text)?)
}

pub fn load<T: FromJson>(path: &Path) -> Result<T> {
    T::from_json(&read_json(path)?)
}

pub fn schema_of(value: &Value) -> Option<&str> {
    value.get("schema").and_then(Value::as_str)
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

fn field<'a>(value: &'a Value, key: &str) -> Result<&'a Value> {
    value.get(key).ok_or_else(|| invalid(format!("missing field {key:?}")))
}

fn expect_schema(value: &Value, schema: &str) -> Result<()> {
    match schema_of(value) {
        Some(s) if s == schema => Ok(()),
        Some(s) => Err(invalid(format!("expected schema {schema:?}, found {s:?}"))),
        None => Err(invalid(format!("missing schema {schema:?}"))),
    }
}

fn as_usize(value: &Value, what: &str) -> Result<usize> {
    value
        .as_u64()
        .and_then(|v| usize::try_from(v).ok())
        .ok_or_else(|| invalid(format!("{what} must be a nonnegative integer")))
}

fn as_array<'a>(value: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    value.as_array().ok_or_else(|| invalid(format!("{what} must be an array")))
}

fn as_object<'a>(value: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    value.as_object().ok_or_else(|| invalid(format!("{what} must be an object")))
}

fn usize_list(value: &Value, what: &str) -> Result<Vec<usize>> {
    as_array(value, what)?.iter().map(|v| as_usize(v, what)).collect()
}

pub fn vector_to_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

pub fn vector_from_json(value: &Value) -> Result<Vec<Rational>> {
    as_array(value, "vector")?.iter().map(rational_from_json).collect()
}

fn pair_key(n: usize, i: usize) -> String {
    format!("{n},{i}")
}

/// Reads a map keyed `"n,i"` into the nested layout `out[n - first][i]`,
/// requiring exactly the keys `n in first..=last`, `i in 0..=n + extra`.
fn read_pair_map<T>(
    value: &Value,
    what: &str,
    levels: std::ops::RangeInclusive<usize>,
    extra: usize,
    mut parse: impl FnMut(&Value) -> Result<T>,
) -> Result<Vec<Vec<T>>> {
    let map = as_object(value, what)?;
    let mut expected = 0;
    let mut out = Vec::new();
    for n in levels {
        let mut row = Vec::new();
        for i in 0..=n + extra {
            let key = pair_key(n, i);
            let entry = map.get(&key).ok_or_else(|| invalid(format!("{what} is missing key {key:?}")))?;
            row.push(parse(entry)?);
            expected += 1;
        }
        out.push(row);
    }
    if map.len() != expected {
        return Err(invalid(format!("{what} has unexpected keys")));
    }
    Ok(out)
}

impl ToJson for RationalMatrix {
    fn to_json(&self) -> Value {
        let entries: Vec<Value> = self.to_rows().iter().map(|r| vector_to_json(r)).collect();
        json!({ "rows": self.rows(), "cols": self.cols(), "entries": entries })
    }
}

impl FromJson for RationalMatrix {
    fn from_json(value: &Value) -> Result<Self> {
        let rows = as_usize(field(value, "rows")?, "rows")?;
        let cols = as_usize(field(value, "cols")?, "cols")?;
        let entries = as_array(field(value, "entries")?, "entries")?;
        if entries.len() != rows {
            return Err(Error::Dimension(format!("matrix declares {rows} rows, lists {}", entries.len())));
        }
        let parsed = entries.iter().map(vector_from_json).collect::<Result<Vec<_>>>()?;
        RationalMatrix::from_rows(cols, parsed)
    }
}

fn faces_json<X: FaceMaps + ?Sized>(x: &X) -> Value {
    let mut faces = Map::new();
    for n in 1..=x.level() {
        for i in 0..=n {
            faces.insert(pair_key(n, i), x.face(n, i).to_json());
        }
    }
    Value::Object(faces)
}

impl ToJson for SemiSVS {
    fn to_json(&self) -> Value {
        json!({ "schema": SVS, "level": self.level(), "dims": self.dims(), "faces": faces_json(self) })
    }
}

impl ToJson for TruncatedSVS {
    fn to_json(&self) -> Value {
        let mut degens = Map::new();
        for n in 0..self.level() {
            for i in 0..=n {
                degens.insert(pair_key(n, i), self.degeneracy(n, i).to_json());
            }
        }
        json!({
            "schema": SVS,
            "level": self.level(),
            "dims": self.dims(),
            "faces": faces_json(self),
            "degeneracies": degens,
        })
    }
}

fn read_semi(value: &Value) -> Result<SemiSVS> {
    expect_schema(value, SVS)?;
    let level = as_usize(field(value, "level")?, "level")?;
    let dims = usize_list(field(value, "dims")?, "dims")?;
    if dims.len() != level + 1 {
        return Err(Error::Dimension(format!("level {level} needs {} dims, got {}", level + 1, dims.len())));
    }
    let faces = read_pair_map(field(value, "faces")?, "faces", 1..=level, 0, RationalMatrix::from_json)?;
    SemiSVS::new(dims, faces)
}

/// Drops degeneracies if present.
impl FromJson for SemiSVS {
    fn from_json(value: &Value) -> Result<Self> {
        read_semi(value)
    }
}

impl FromJson for TruncatedSVS {
    fn from_json(value: &Value) -> Result<Self> {
        let semi = read_semi(value)?;
        let level = semi.level();
        let raw = value.get("degeneracies").ok_or_else(|| invalid("a simplicial object needs \"degeneracies\""))?;
        let degens = if level == 0 {
            if !as_object(raw, "degeneracies")?.is_empty() {
                return Err(invalid("level 0 has no degeneracies"));
            }
            Vec::new()
        } else {
            read_pair_map(raw, "degeneracies", 0..=level - 1, 0, RationalMatrix::from_json)?
        };
        let faces = (1..=level).map(|n| (0..=n).map(|i| semi.face(n, i).clone()).collect()).collect();
        TruncatedSVS::new(semi.dims().to_vec(), faces, degens)
    }
}

impl ToJson for ChainComplex {
    fn to_json(&self) -> Value {
        let diffs: Map<String, Value> =
            (1..=self.top()).map(|n| (n.to_string(), self.differential(n).to_json())).collect();
        json!({ "schema": CHAIN, "dims": self.dims(), "differentials": diffs })
    }
}

impl FromJson for ChainComplex {
    fn from_json(value: &Value) -> Result<Self> {
        expect_schema(value, CHAIN)?;
        let dims = usize_list(field(value, "dims")?, "dims")?;
        if dims.is_empty() {
            return Err(invalid("a chain complex needs at least degree 0"));
        }
        let map = as_object(field(value, "differentials")?, "differentials")?;
        if map.len() != dims.len() - 1 {
            return Err(invalid(format!("expected differentials 1..={}", dims.len() - 1)));
        }
        let diffs = (1..dims.len())
            .map(|n| {
                let m = map.get(&n.to_string()).ok_or_else(|| invalid(format!("missing differential {n}")))?;
                RationalMatrix::from_json(m)
            })
            .collect::<Result<Vec<_>>>()?;
        ChainComplex::new(dims, diffs)
    }
}

fn components_json(comps: &[RationalMatrix]) -> Value {
    Value::Object(comps.iter().enumerate().map(|(n, m)| (n.to_string(), m.to_json())).collect())
}

fn components_from_json(value: &Value, count: usize) -> Result<Vec<RationalMatrix>> {
    let map = as_object(value, "components")?;
    if map.len() != count {
        return Err(invalid(format!("expected components 0..{count}")));
    }
    (0..count)
        .map(|n| {
            let m = map.get(&n.to_string()).ok_or_else(|| invalid(format!("missing component {n}")))?;
            RationalMatrix::from_json(m)
        })
        .collect()
}

impl ToJson for SimplicialMorphism {
    fn to_json(&self) -> Value {
        json!({
            "schema": MORPHISM,
            "source": self.source().to_json(),
            "target": self.target().to_json(),
            "components": components_json(self.components()),
        })
    }
}

impl FromJson for SimplicialMorphism {
    fn from_json(value: &Value) -> Result<Self> {
        expect_schema(value, MORPHISM)?;
        let source = TruncatedSVS::from_json(field(value, "source")?)?;
        let target = TruncatedSVS::from_json(field(value, "target")?)?;
        let comps = components_from_json(field(value, "components")?, source.level() + 1)?;
        SimplicialMorphism::new(source, target, comps)
    }
}

impl ToJson for ChainMap {
    fn to_json(&self) -> Value {
        json!({
            "schema": CHAIN_MAP,
            "source": self.source().to_json(),
            "target": self.target().to_json(),
            "components": components_json(self.components()),
        })
    }
}

impl FromJson for ChainMap {
    fn from_json(value: &Value) -> Result<Self> {
        expect_schema(value, CHAIN_MAP)?;
        let source = ChainComplex::from_json(field(value, "source")?)?;
        let target = ChainComplex::from_json(field(value, "target")?)?;
        let comps = components_from_json(field(value, "components")?, source.top() + 1)?;
        ChainMap::new(source, target, comps)
    }
}

impl ToJson for NormalizedComplex {
    fn to_json(&self) -> Value {
        let levels: Map<String, Value> = self
            .levels
            .iter()
            .enumerate()
            .map(|(n, s)| (n.to_string(), json!({ "dim": s.dim(), "basis": s.basis().to_json() })))
            .collect();
        json!({
            "schema": NORMALIZED,
            "variant": self.variant.name(),
            "levels": levels,
            "complex": self.complex.to_json(),
        })
    }
}

impl ToJson for PointedFamily {
    fn to_json(&self) -> Value {
        let fibers: Map<String, Value> = self.fibers().map(|(p, x)| (p.clone(), x.to_json())).collect();
        json!({ "schema": FAMILY, "points": self.points(), "fibers": fibers })
    }
}

impl FromJson for PointedFamily {
    fn from_json(value: &Value) -> Result<Self> {
        expect_schema(value, FAMILY)?;
        let points = as_array(field(value, "points")?, "points")?
            .iter()
            .map(|p| p.as_str().map(str::to_string).ok_or_else(|| invalid("point labels must be strings")))
            .collect::<Result<Vec<_>>>()?;
        let fibers = as_object(field(value, "fibers")?, "fibers")?
            .iter()
            .map(|(p, x)| Ok((p.clone(), TruncatedSVS::from_json(x)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        PointedFamily::new(points, fibers)
    }
}

fn affine_map_json(m: &AffineMap) -> Value {
    json!({ "to": m.to, "matrix": m.matrix.to_json(), "shift": vector_to_json(&m.shift) })
}

fn affine_map_from_json(value: &Value) -> Result<AffineMap> {
    Ok(AffineMap {
        to: as_usize(field(value, "to")?, "to")?,
        matrix: RationalMatrix::from_json(field(value, "matrix")?)?,
        shift: vector_from_json(field(value, "shift")?)?,
    })
}

fn routing_from_json(value: &Value) -> Result<Vec<AffineMap>> {
    as_array(value, "routing")?.iter().map(affine_map_from_json).collect()
}

impl ToJson for AffineSimplicialObject {
    fn to_json(&self) -> Value {
        let level = self.level();
        let mut faces = Map::new();
        for n in 1..=level {
            for i in 0..=n {
                faces.insert(pair_key(n, i), self.face(n, i).iter().map(affine_map_json).collect());
            }
        }
        let mut degens = Map::new();
        for n in 0..level {
            for i in 0..=n {
                degens.insert(pair_key(n, i), self.degeneracy(n, i).iter().map(affine_map_json).collect());
            }
        }
        let base = self.basepoint();
        json!({
            "schema": AFFINE,
            "level": level,
            "components": self.all_components(),
            "faces": faces,
            "degeneracies": degens,
            "basepoint": { "component": base.component, "coords": vector_to_json(&base.coords) },
        })
    }
}

impl FromJson for AffineSimplicialObject {
    fn from_json(value: &Value) -> Result<Self> {
        expect_schema(value, AFFINE)?;
        let level = as_usize(field(value, "level")?, "level")?;
        let components = as_array(field(value, "components")?, "components")?
            .iter()
            .map(|c| usize_list(c, "component dimensions"))
            .collect::<Result<Vec<_>>>()?;
        if components.len() != level + 1 {
            return Err(Error::Dimension(format!("level {level} needs {} component lists", level + 1)));
        }
        let faces = read_pair_map(field(value, "faces")?, "faces", 1..=level, 0, routing_from_json)?;
        let degens = if level == 0 {
            Vec::new()
        } else {
            read_pair_map(field(value, "degeneracies")?, "degeneracies", 0..=level - 1, 0, routing_from_json)?
        };
        let base = field(value, "basepoint")?;
        let basepoint = Basepoint {
            component: as_usize(field(base, "component")?, "basepoint component")?,
            coords: vector_from_json(field(base, "coords")?)?,
        };
        AffineSimplicialObject::new(components, faces, degens, basepoint)
    }
}

impl ToJson for HornIndex {
    fn to_json(&self) -> Value {
        json!({ "n": self.n(), "removed": self.removed() })
    }
}

impl FromJson for HornIndex {
    fn from_json(value: &Value) -> Result<Self> {
        let n = as_usize(field(value, "n")?, "n")?;
        HornIndex::new(n, usize_list(field(value, "removed")?, "removed")?)
    }
}

impl ToJson for HornElement {
    fn to_json(&self) -> Value {
        let comps: Map<String, Value> =
            self.components.iter().map(|(j, v)| (j.to_string(), vector_to_json(v))).collect();
        json!({ "index": self.index.to_json(), "components": comps })
    }
}

impl FromJson for HornElement {
    fn from_json(value: &Value) -> Result<Self> {
        let index = HornIndex::from_json(field(value, "index")?)?;
        let components = as_object(field(value, "components")?, "components")?
            .iter()
            .map(|(k, v)| {
                let j = k.parse::<usize>().map_err(|_| invalid(format!("component key {k:?} is not an index")))?;
                Ok((j, vector_from_json(v)?))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        HornElement::new(index, components)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::build_example_5_1;
    use crate::linalg::rational::ratio;
    use crate::simplicial::{dold_kan_inverse, random_chain_complex, ComplexRecipe};

    fn round_trip<T: ToJson + FromJson + PartialEq + std::fmt::Debug>(x: &T) {
        let text = canonical_string(&x.to_json());
        let back = T::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(&back, x);
        assert_eq!(canonical_string(&back.to_json()), text);
    }

    #[test]
    fn documents_round_trip() {
        let c = random_chain_complex(&"S0,D1,S2".parse::<ComplexRecipe>().unwrap(), 4);
        round_trip(&c);
        let x = dold_kan_inverse(&c, 2);
        round_trip(&x);
        round_trip(&x.forget_degeneracies());
        round_trip(&SimplicialMorphism::identity(&x));
        round_trip(&ChainMap::identity(&c));
        round_trip(&build_example_5_1(2));
        round_trip(&PointedFamily::single("p", TruncatedSVS::constant(1, 1)));
        let h = HornIndex::ordinary(2, 1).unwrap();
        round_trip(&h);
        let e = HornElement::new(h, [(0, vec![ratio(1, 2)]), (2, vec![ratio(-3, 1)])].into()).unwrap();
        round_trip(&e);
    }

    #[test]
    fn matrix_encoding() {
        let m = RationalMatrix::from_rows(2, vec![vec![ratio(1, 2), ratio(3, 1)]]).unwrap();
        assert_eq!(serde_json::to_string(&m.to_json()).unwrap(), r#"{"cols":2,"entries":[["1/2",3]],"rows":1}"#);
    }

    #[test]
    fn malformed_documents_are_rejected() {
        let bad = json!({ "schema": "chain/1", "dims": [1, 1], "differentials": {} });
        assert!(ChainComplex::from_json(&bad).is_err());
        let wrong = json!({ "schema": "svs/1", "level": 0, "dims": [1], "faces": {} });
        assert!(ChainComplex::from_json(&wrong).is_err());
        assert!(TruncatedSVS::from_json(&wrong).is_err());
        assert!(SemiSVS::from_json(&wrong).is_ok());
        let m = json!({ "rows": 1, "cols": 2, "entries": [[1]] });
        assert!(RationalMatrix::from_json(&m).is_err());
    }
}
