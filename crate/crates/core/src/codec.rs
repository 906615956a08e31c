//! JSON encoding and decoding of the domain types.
//!
//! Decoders walk a `serde_json::Value` by hand so that every schema error
//! carries the JSON pointer of the offending field.

use num_rational::Ratio;
use serde::Serializer;
use serde_json::{json, Map, Value};

use crate::abelian::{FiniteAbelianGroup, GSequence, GroupElement};
use crate::error::{Error, Result};
use crate::padic::{DvrContext, DvrMatrix};
use crate::tiled::TiledShape;

pub fn serialize_sequence<S: Serializer>(s: &GSequence, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_seq(s.elements())
}

pub fn serialize_ratio<S: Serializer>(r: &Ratio<u64>, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(&encode_ratio(r))
}

/// `"num/den"`, or just `"num"` for integers.
pub fn encode_ratio(r: &Ratio<u64>) -> String {
    r.to_string()
}

pub fn decode_ratio(v: &Value, ptr: &str) -> Result<Ratio<u64>> {
    let s = v.as_str().ok_or_else(|| Error::schema(ptr, "expected a rational string \"num/den\""))?;
    let parse = |t: &str| t.trim().parse::<u64>().map_err(|_| Error::schema(ptr, format!("bad rational {s:?}")));
    let r = match s.split_once('/') {
        Some((n, d)) => {
            let d = parse(d)?;
            if d == 0 {
                return Err(Error::schema(ptr, "zero denominator"));
            }
            Ratio::new(parse(n)?, d)
        }
        None => Ratio::from_integer(parse(s)?),
    };
    Ok(r)
}

fn child(ptr: &str, key: impl std::fmt::Display) -> String {
    let key = key.to_string().replace('~', "~0").replace('/', "~1");
    format!("{ptr}/{key}")
}

fn object<'a>(v: &'a Value, ptr: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::schema(ptr_or_root(ptr), "expected an object"))
}

fn ptr_or_root(ptr: &str) -> &str {
    if ptr.is_empty() {
        "/"
    } else {
        ptr
    }
}

fn field<'a>(obj: &'a Map<String, Value>, ptr: &str, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::schema(child(ptr, key), "missing field"))
}

fn array<'a>(v: &'a Value, ptr: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::schema(ptr_or_root(ptr), "expected an array"))
}

fn integer(v: &Value, ptr: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| Error::schema(ptr_or_root(ptr), "expected an integer"))
}

fn unsigned(v: &Value, ptr: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| Error::schema(ptr_or_root(ptr), "expected a non-negative integer"))
}

fn small(v: &Value, ptr: &str) -> Result<u32> {
    u32::try_from(unsigned(v, ptr)?).map_err(|_| Error::schema(ptr, "integer out of range"))
}

/// Parses JSON text, reporting syntax errors as schema errors at the root.
pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::schema("/", format!("malformed JSON: {e}")))
}

pub fn encode_group(g: &FiniteAbelianGroup) -> Value {
    json!({ "cyclic_orders": g.cyclic_orders() })
}

/// `{"cyclic_orders": [n_1, …]}` with every `n_i >= 1`.
pub fn decode_group(v: &Value, ptr: &str) -> Result<FiniteAbelianGroup> {
    let obj = object(v, ptr)?;
    let list_ptr = child(ptr, "cyclic_orders");
    let list = array(field(obj, ptr, "cyclic_orders")?, &list_ptr)?;
    let mut orders = Vec::with_capacity(list.len());
    for (i, x) in list.iter().enumerate() {
        let p = child(&list_ptr, i);
        let n = integer(x, &p)?;
        if n < 1 {
            return Err(Error::schema(p, format!("cyclic order {n} must be >= 1")));
        }
        orders.push(n);
    }
    FiniteAbelianGroup::new(&orders).map_err(|e| Error::schema(list_ptr, e.to_string()))
}

pub fn encode_element(g: &GroupElement) -> Value {
    json!(g.coords())
}

/// An element as a coordinate array `[1, 0]` or as the string `"[1,0]"`.
/// Coordinates are reduced modulo the cyclic orders.
pub fn decode_element(group: &FiniteAbelianGroup, v: &Value, ptr: &str) -> Result<GroupElement> {
    let parsed;
    let v = match v {
        Value::String(s) => {
            parsed = serde_json::from_str::<Value>(s)
                .map_err(|_| Error::schema(ptr_or_root(ptr), format!("cannot parse element {s:?}")))?;
            &parsed
        }
        other => other,
    };
    let coords = array(v, ptr)?;
    if coords.len() != group.rank() {
        return Err(Error::schema(
            ptr_or_root(ptr),
            format!("element has {} coordinates but the group has rank {}", coords.len(), group.rank()),
        ));
    }
    let mut out = Vec::with_capacity(coords.len());
    for (i, c) in coords.iter().enumerate() {
        out.push(integer(c, &child(ptr, i))?);
    }
    group.element(&out)
}

pub fn encode_sequence(s: &GSequence) -> Value {
    Value::Array(s.elements().map(encode_element).collect())
}

/// A sequence as an array of elements, repetitions allowed.
pub fn decode_sequence(group: &FiniteAbelianGroup, v: &Value, ptr: &str) -> Result<GSequence> {
    let items = array(v, ptr)?;
    let mut seq = GSequence::new();
    for (i, x) in items.iter().enumerate() {
        seq.push(decode_element(group, x, &child(ptr, i))?, 1);
    }
    Ok(seq)
}

/// `{"p", "precision", "entries"}` with entries as centered representatives.
pub fn encode_matrix(m: &DvrMatrix) -> Value {
    let ctx = m.context();
    json!({ "p": ctx.p(), "precision": ctx.precision(), "entries": m.centered_rows() })
}

/// Decodes `{"p", "precision", "entries"}`. Entries must satisfy
/// `|x| < p^N`; `precision` may be omitted when `default_precision` is given.
pub fn decode_matrix(v: &Value, ptr: &str, default_precision: Option<u32>) -> Result<DvrMatrix> {
    let obj = object(v, ptr)?;
    let p_ptr = child(ptr, "p");
    let p = unsigned(field(obj, ptr, "p")?, &p_ptr)?;
    let n_ptr = child(ptr, "precision");
    let precision = match (obj.get("precision"), default_precision) {
        (Some(x), _) => small(x, &n_ptr)?,
        (None, Some(d)) => d,
        (None, None) => return Err(Error::schema(n_ptr, "missing field")),
    };
    let ctx = DvrContext::new(p, precision).map_err(|e| Error::schema(p_ptr, e.to_string()))?;
    decode_matrix_entries(ctx, field(obj, ptr, "entries")?, &child(ptr, "entries"))
}

/// Decodes a square array of integers in `(-p^N, p^N)`.
pub fn decode_matrix_entries(ctx: DvrContext, v: &Value, ptr: &str) -> Result<DvrMatrix> {
    let rows = array(v, ptr)?;
    let n = rows.len();
    if n == 0 {
        return Err(Error::schema(ptr_or_root(ptr), "matrix must have at least one row"));
    }
    let bound = i128::from(ctx.modulus());
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let rp = child(ptr, i);
        let row = array(row, &rp)?;
        if row.len() != n {
            return Err(Error::schema(rp, format!("row has {} entries, expected {n}", row.len())));
        }
        let mut r = Vec::with_capacity(n);
        for (j, x) in row.iter().enumerate() {
            let ep = child(&rp, j);
            let val = integer(x, &ep)?;
            if i128::from(val).abs() >= bound {
                return Err(Error::schema(ep, format!("entry {val} is outside (-{bound}, {bound})")));
            }
            r.push(val);
        }
        out.push(r);
    }
    DvrMatrix::new(ctx, &out)
}

pub fn encode_shape(s: &TiledShape) -> Value {
    json!({ "partition": s.partition(), "exponents": s.exponents() })
}

/// Reads `{"partition", "exponents"}` without checking order conditions.
pub fn decode_shape_data(v: &Value, ptr: &str) -> Result<(Vec<usize>, Vec<Vec<i64>>)> {
    let obj = object(v, ptr)?;
    let pp = child(ptr, "partition");
    let parts = array(field(obj, ptr, "partition")?, &pp)?;
    let mut partition = Vec::with_capacity(parts.len());
    for (i, x) in parts.iter().enumerate() {
        let ip = child(&pp, i);
        let n = unsigned(x, &ip)?;
        if n == 0 {
            return Err(Error::schema(ip, "block sizes must be >= 1"));
        }
        partition.push(usize::try_from(n).map_err(|_| Error::schema(&ip, "block size out of range"))?);
    }
    if partition.is_empty() {
        return Err(Error::schema(pp, "partition must be nonempty"));
    }
    let ep = child(ptr, "exponents");
    let rows = array(field(obj, ptr, "exponents")?, &ep)?;
    let r = partition.len();
    if rows.len() != r {
        return Err(Error::schema(ep, format!("expected {r} rows to match the partition")));
    }
    let mut exponents = Vec::with_capacity(r);
    for (i, row) in rows.iter().enumerate() {
        let rp = child(&ep, i);
        let row = array(row, &rp)?;
        if row.len() != r {
            return Err(Error::schema(rp, format!("expected {r} entries")));
        }
        let mut out = Vec::with_capacity(r);
        for (j, x) in row.iter().enumerate() {
            out.push(integer(x, &child(&rp, j))?);
        }
        exponents.push(out);
    }
    Ok((partition, exponents))
}

/// A shape that satisfies the order conditions.
pub fn decode_shape(v: &Value, ptr: &str) -> Result<TiledShape> {
    let (partition, exponents) = decode_shape_data(v, ptr)?;
    TiledShape::new(partition, exponents)
}

/// Configuration of a tiled witness lift into a T-block monoid.
///
/// The class map is `x ↦ w(nrd x)·c` with `c = gamma` the class of the
/// valuation-one atom `α_1`; `alpha` is the class of each `α_k, α'_k` and
/// must equal `k·gamma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftConfig {
    pub group: FiniteAbelianGroup,
    pub alpha: GroupElement,
    pub gamma: GroupElement,
    pub shape: TiledShape,
    pub p: u64,
    pub k: Option<u32>,
    pub m: u32,
}

pub fn default_lift_shape() -> TiledShape {
    TiledShape::new(vec![1, 1], vec![vec![0, 2], vec![0, 0]]).expect("valid shape")
}

/// `{"group", "atom_classes": {"alpha", "gamma"?}, "shape"?, "p"?, "k"?, "m"?}`.
/// Defaults: `gamma = alpha`, shape `O((1,1),[[0,2],[0,0]])`, `p = 2`, `m = 1`.
pub fn decode_lift_config(v: &Value) -> Result<LiftConfig> {
    let obj = object(v, "")?;
    let group = decode_group(field(obj, "", "group")?, "/group")?;
    let classes = object(field(obj, "", "atom_classes")?, "/atom_classes")?;
    let alpha = decode_element(&group, field(classes, "/atom_classes", "alpha")?, "/atom_classes/alpha")?;
    let gamma = match classes.get("gamma") {
        Some(g) => decode_element(&group, g, "/atom_classes/gamma")?,
        None => alpha.clone(),
    };
    let shape = match obj.get("shape") {
        Some(s) => decode_shape(s, "/shape").map_err(|e| match e {
            Error::InvalidInput(m) => Error::schema("/shape", m),
            other => other,
        })?,
        None => default_lift_shape(),
    };
    let p = match obj.get("p") {
        Some(x) => unsigned(x, "/p")?,
        None => 2,
    };
    let k = obj.get("k").map(|x| small(x, "/k")).transpose()?;
    if k == Some(0) {
        return Err(Error::schema("/k", "k must be >= 1"));
    }
    let m = obj.get("m").map(|x| small(x, "/m")).transpose()?.unwrap_or(1);
    for key in obj.keys() {
        if !["group", "atom_classes", "shape", "p", "k", "m"].contains(&key.as_str()) {
            return Err(Error::schema(child("", key), "unknown field"));
        }
    }
    Ok(LiftConfig { group, alpha, gamma, shape, p, k, m })
}

pub fn encode_lift_config(c: &LiftConfig) -> Value {
    let mut v = json!({
        "group": encode_group(&c.group),
        "atom_classes": { "alpha": encode_element(&c.alpha), "gamma": encode_element(&c.gamma) },
        "shape": encode_shape(&c.shape),
        "p": c.p,
        "m": c.m,
    });
    if let Some(k) = c.k {
        v["k"] = json!(k);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pointer(e: Error) -> String {
        match e {
            Error::Schema { pointer, .. } => pointer,
            other => panic!("expected a schema error, got {other:?}"),
        }
    }

    #[test]
    fn shape_round_trip() {
        let s = TiledShape::new(vec![2, 1], vec![vec![0, 1], vec![2, 0]]).unwrap();
        assert_eq!(decode_shape(&encode_shape(&s), "").unwrap(), s);
    }

    #[test]
    fn matrix_out_of_range_entry() {
        let v = json!({"p": 2, "precision": 3, "entries": [[1, 8], [0, 1]]});
        assert_eq!(pointer(decode_matrix(&v, "", None).unwrap_err()), "/entries/0/1");
        let ok = json!({"p": 2, "precision": 3, "entries": [[1, -7], [0, 1]]});
        let m = decode_matrix(&ok, "", None).unwrap();
        assert_eq!(decode_matrix(&encode_matrix(&m), "", None).unwrap(), m);
    }

    #[test]
    fn group_order_zero() {
        let v = json!({"cyclic_orders": [2, 0]});
        assert_eq!(pointer(decode_group(&v, "").unwrap_err()), "/cyclic_orders/1");
        let g = decode_group(&json!({"cyclic_orders": [2, 4]}), "").unwrap();
        assert_eq!(decode_group(&encode_group(&g), "").unwrap(), g);
    }

    #[test]
    fn element_forms() {
        let g = FiniteAbelianGroup::new(&[2, 4]).unwrap();
        let a = decode_element(&g, &json!("[1,5]"), "").unwrap();
        assert_eq!(a.coords(), &[1, 1]);
        assert_eq!(decode_element(&g, &encode_element(&a), "").unwrap(), a);
        assert_eq!(pointer(decode_element(&g, &json!([1, "x"]), "/e").unwrap_err()), "/e/1");
        let s = decode_sequence(&g, &json!([[1, 0], [1, 0], [0, 3]]), "").unwrap();
        assert_eq!(decode_sequence(&g, &encode_sequence(&s), "").unwrap(), s);
    }

    #[test]
    fn lift_config_example() {
        let v = json!({"group":{"cyclic_orders":[2]},"atom_classes":{"alpha":"[1]","gamma":"[1]"}});
        let c = decode_lift_config(&v).unwrap();
        assert_eq!((c.p, c.m, c.k), (2, 1, None));
        assert_eq!(decode_lift_config(&encode_lift_config(&c)).unwrap(), c);
        let bad = json!({"group":{"cyclic_orders":[2]},"atom_classes":{}});
        assert_eq!(pointer(decode_lift_config(&bad).unwrap_err()), "/atom_classes/alpha");
    }

    #[test]
    fn ratios() {
        for r in [Ratio::new(3u64, 2), Ratio::from_integer(20)] {
            assert_eq!(decode_ratio(&json!(encode_ratio(&r)), "").unwrap(), r);
        }
        assert!(decode_ratio(&json!("1/0"), "").is_err());
    }
}
