use factorlab::abelian::FiniteAbelianGroup;
use factorlab::codec::{
    decode_group, decode_lift_config, decode_matrix, decode_sequence, decode_shape, decode_shape_data, encode_element,
    encode_group, encode_lift_config, encode_matrix, encode_ratio, encode_sequence, encode_shape, parse_json,
};
use factorlab::factor::{DivisibilityMonoid, Engine, MatrixMonoid, ZeroSumMonoid};
use factorlab::padic::{unit_recovery, DvrContext, DvrMatrix, FullMatrixRing, MatrixOrder, OrderArithmetic};
use factorlab::tblock::{
    elasticity_upper_bound, tblock_make, tiled_local_identity, valuation_class_map, witness_lift, ElasticityBoundInput,
    LiftedFactor,
};
use factorlab::tiled::{isomorphic, shape_violations, witness_atoms, witness_layout, TiledOrder, TiledShape};
use factorlab::zerosum::{block_atoms, block_elasticity, block_length_set, davenport_by_atoms, davenport_by_extension, SearchLimits};
use factorlab::{Error, Result};
use serde_json::{json, Value};

use crate::Outcome;

fn done(inputs: Value, result: Value) -> Result<Outcome> {
    let result = match result {
        Value::Object(m) => m,
        _ => unreachable!("results are objects"),
    };
    Ok(Outcome { inputs, result, partial: false })
}

/// Inline JSON, or the contents of a file when the argument starts with `@`.
fn load_json(arg: &str) -> Result<Value> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::invalid(format!("cannot read {path}: {e}")))?;
            parse_json(&text)
        }
        None => parse_json(arg),
    }
}

fn group_of(orders: &[i64]) -> Result<FiniteAbelianGroup> {
    decode_group(&json!({ "cyclic_orders": orders }), "")
}

fn shape_of(arg: &str) -> Result<TiledShape> {
    decode_shape(&load_json(arg)?, "")
}

pub fn davenport(orders: &[i64]) -> Result<Outcome> {
    let g = group_of(orders)?;
    let limits = SearchLimits::default();
    let by_extension = davenport_by_extension(&g, &limits)?;
    let by_atoms = davenport_by_atoms(&g, &limits)?;
    if by_extension != by_atoms {
        return Err(Error::invalid(format!("internal disagreement: {by_extension} vs {by_atoms}")));
    }
    done(json!({ "group": encode_group(&g) }), json!({ "davenport": by_extension }))
}

pub fn atoms(orders: &[i64]) -> Result<Outcome> {
    let g = group_of(orders)?;
    let set = block_atoms(&g)?;
    let atoms: Vec<Value> = set.atoms.iter().map(encode_sequence).collect();
    done(
        json!({ "group": encode_group(&g) }),
        json!({ "count": atoms.len(), "max_length": set.max_length(), "atoms": atoms }),
    )
}

pub fn zero_sum_lengths(orders: &[i64], sequence: &str) -> Result<Outcome> {
    let g = group_of(orders)?;
    let s = decode_sequence(&g, &load_json(sequence)?, "")?;
    let lengths = block_length_set(&g, &s)?;
    let (lo, hi) = (lengths.first().copied().unwrap_or(0), lengths.last().copied().unwrap_or(0));
    let elasticity = if lo == 0 { "1".to_string() } else { encode_ratio(&num_rational::Ratio::new(u64::from(hi), u64::from(lo))) };
    done(
        json!({ "group": encode_group(&g), "sequence": encode_sequence(&s) }),
        json!({ "length_set": lengths, "elasticity": elasticity }),
    )
}

pub fn elasticity(orders: &[i64]) -> Result<Outcome> {
    let g = group_of(orders)?;
    let e = block_elasticity(&g)?;
    done(
        json!({ "group": encode_group(&g) }),
        json!({
            "brute_force": encode_ratio(&e.brute_force),
            "formula": encode_ratio(&e.formula),
            "agrees": e.agrees(),
            "witness": encode_sequence(&e.witness),
            "searched_length": e.searched_length,
        }),
    )
}

pub fn validate(arg: &str) -> Result<Outcome> {
    let raw = load_json(arg)?;
    let (partition, exponents) = decode_shape_data(&raw, "")?;
    let violations = shape_violations(&partition, &exponents)?;
    let valid = violations.is_empty();
    let standard = valid && TiledShape::new(partition, exponents)?.is_standard_form();
    done(
        json!({ "shape": raw }),
        json!({
            "valid": valid,
            "standard_form": standard,
            "violations": violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        }),
    )
}

pub fn reduce(arg: &str) -> Result<Outcome> {
    let shape = shape_of(arg)?;
    let (reduced, record) = shape.standard_form_reduce();
    done(
        json!({ "shape": encode_shape(&shape) }),
        json!({
            "standard_form": encode_shape(&reduced),
            "changed": !record.is_empty(),
            "record": serde_json::to_value(&record).expect("serializable"),
        }),
    )
}

pub fn iso(a: &str, b: &str) -> Result<Outcome> {
    let (sa, sb) = (shape_of(a)?, decode_shape(&load_json(b)?, "").map_err(|e| relocate(e, "--other"))?);
    let perm = isomorphic(&sa, &sb)?;
    done(
        json!({ "shape": encode_shape(&sa), "other": encode_shape(&sb) }),
        json!({ "isomorphic": perm.is_some(), "permutation": perm }),
    )
}

fn relocate(e: Error, arg: &str) -> Error {
    match e {
        Error::Schema { pointer, message } => Error::Schema { pointer, message: format!("{arg}: {message}") },
        other => other,
    }
}

pub fn hereditary(arg: &str) -> Result<Outcome> {
    let shape = shape_of(arg)?;
    if !shape.is_standard_form() {
        return Err(Error::invalid("shape is not in standard form; run `tiled reduce` first"));
    }
    done(json!({ "shape": encode_shape(&shape) }), json!({ "hereditary": shape.is_hereditary()? }))
}

pub fn witness(arg: &str, k: u32, p: u64, precision: Option<u32>) -> Result<Outcome> {
    let shape = shape_of(arg)?;
    let layout = witness_layout(&shape)?;
    let n = precision.unwrap_or(k.saturating_mul(layout.t).saturating_add(2));
    let ctx = DvrContext::new(p, n)?;
    let w = witness_atoms(&shape, ctx, k)?;
    let first = witness_atoms(&shape, ctx, 1)?;
    let product = w.alpha.mul(&w.alpha_prime);
    let power = first.alpha.pow(k).mul(&first.alpha_prime.pow(k));
    done(
        json!({ "shape": encode_shape(&shape), "k": k, "p": p }),
        json!({
            "precision": n,
            "pair": [w.pair.0 + 1, w.pair.1 + 1],
            "t": w.t,
            "conjugate_shape": encode_shape(w.order.shape()),
            "alpha": encode_matrix(&w.alpha),
            "alpha_prime": encode_matrix(&w.alpha_prime),
            "product": encode_matrix(&product),
            "product_equals_alpha1_power": product == power,
        }),
    )
}

fn report_for<M: DivisibilityMonoid>(monoid: &M, a: &M::Elem, cap: usize, inputs: Value) -> Result<Outcome> {
    let mut engine = Engine::with_cap(monoid, cap);
    let report = engine.report(a)?;
    let mut result = match serde_json::to_value(&report).expect("serializable") {
        Value::Object(m) => m,
        _ => unreachable!(),
    };
    if !report.search_capped {
        if let (Some(&lo), Some(&hi)) = (report.length_set.first(), report.length_set.last()) {
            let mut describe = |k: u32| -> Result<Value> {
                Ok(match engine.factorization_of_length(a, k)? {
                    Some(atoms) => Value::Array(atoms.iter().map(|x| monoid.describe(x)).collect()),
                    None => Value::Null,
                })
            };
            let shortest = describe(lo)?;
            let longest = describe(hi)?;
            result.insert("factorizations".into(), json!({ "shortest": shortest, "longest": longest }));
        }
    }
    result.insert("cap".into(), json!(cap));
    Ok(Outcome { inputs, result, partial: report.search_capped })
}

pub fn factor_zero_sum(orders: &[i64], sequence: &str, cap: usize) -> Result<Outcome> {
    let g = group_of(orders)?;
    let s = decode_sequence(&g, &load_json(sequence)?, "")?;
    let m = ZeroSumMonoid::new(&g)?;
    let a = m.element(&s)?;
    report_for(&m, &a, cap, json!({ "group": encode_group(&g), "sequence": encode_sequence(&s) }))
}

pub fn factor_matrix(matrix: &str, shape: Option<&str>, precision: Option<u32>, cap: usize) -> Result<Outcome> {
    let a = decode_matrix(&load_json(matrix)?, "", precision)?;
    let ctx = a.context();
    fn run<O: MatrixOrder>(order: O, ctx: DvrContext, a: &DvrMatrix, cap: usize, inputs: Value) -> Result<Outcome> {
        let m = MatrixMonoid::new(OrderArithmetic::new(order, ctx)?);
        m.admit(a)?;
        let mut out = report_for(&m, a, cap, inputs)?;
        out.result.insert("precision".into(), json!(ctx.precision()));
        Ok(out)
    }
    match shape {
        Some(s) => {
            let shape = shape_of(s)?;
            if shape.size() != a.size() {
                return Err(Error::invalid(format!("shape has size {}, matrix has size {}", shape.size(), a.size())));
            }
            let inputs = json!({ "matrix": encode_matrix(&a), "shape": encode_shape(&shape) });
            run(TiledOrder::new(shape)?, ctx, &a, cap, inputs)
        }
        None => {
            let inputs = json!({ "matrix": encode_matrix(&a) });
            run(FullMatrixRing { size: a.size() }, ctx, &a, cap, inputs)
        }
    }
}

pub fn bound(hereditary: bool, n: u64, ram_count: u64, index_valuation: u64, davenport: u64) -> Result<Outcome> {
    let input = ElasticityBoundInput { n, ram_count, index_valuation, davenport };
    let b = elasticity_upper_bound(&input, hereditary)?;
    done(
        json!({
            "hereditary": hereditary, "n": n, "ram_count": ram_count,
            "index_valuation": index_valuation, "davenport": davenport,
        }),
        json!({ "bound": encode_ratio(&b) }),
    )
}

pub fn recover(b: &str, c: &str, t: u32, precision: Option<u32>) -> Result<Outcome> {
    let bm = decode_matrix(&load_json(b)?, "", precision).map_err(|e| relocate(e, "--b"))?;
    let cm = decode_matrix(&load_json(c)?, "", precision).map_err(|e| relocate(e, "--c"))?;
    let gamma = unit_recovery(&bm, &cm, t)?;
    done(
        json!({ "b": encode_matrix(&bm), "c": encode_matrix(&cm), "t": t }),
        json!({
            "gamma": encode_matrix(&gamma),
            "det_valuation_b": bm.det_valuation().value,
            "gamma_is_unit": gamma.is_unit_matrix(),
            "gamma_b_equals_c": gamma.mul(&bm) == cm,
        }),
    )
}

fn encode_factor(f: &LiftedFactor<DvrMatrix>, group: &FiniteAbelianGroup) -> Value {
    let seq = factorlab::abelian::GSequence::from_multiplicities(group, &f.element.counts);
    json!({
        "primes": f.primes.iter().map(|p| json!({ "label": p.label, "class": encode_element(&p.class) })).collect::<Vec<_>>(),
        "sequence": encode_sequence(&seq),
        "t": encode_matrix(&f.element.t),
    })
}

pub fn lift(config: &str, k: Option<u32>, m: Option<u32>, precision: Option<u32>, cap: usize) -> Result<Outcome> {
    let text = std::fs::read_to_string(config).map_err(|e| Error::invalid(format!("cannot read {config}: {e}")))?;
    let mut cfg = decode_lift_config(&parse_json(&text)?)?;
    if k.is_some() {
        cfg.k = k;
    }
    if let Some(m) = m {
        cfg.m = m;
    }
    let g = &cfg.group;
    let c = cfg.gamma.clone();
    let padded = c != g.zero();
    let card = u32::try_from(g.cardinality()).map_err(|_| Error::invalid("group too large"))?;
    let needed = cfg.m.checked_mul(card).ok_or_else(|| Error::invalid("m·|C| overflows"))?;
    let exponent = |k: u32| if padded { k.saturating_sub(1) } else { k };
    let fits = |k: u32| -> Result<bool> { Ok(g.scale(&c, i64::from(k))? == cfg.alpha) };
    let k = match cfg.k {
        Some(k) => {
            if !fits(k)? {
                return Err(Error::invalid(format!(
                    "alpha = {} must equal k·gamma = {} for k = {k}",
                    cfg.alpha,
                    g.scale(&c, i64::from(k))?
                )));
            }
            if exponent(k) < needed || (padded && k < 2) {
                return Err(Error::invalid(format!("k = {k} is too small for m·|C| = {needed}")));
            }
            k
        }
        None => {
            let start = needed + u32::from(padded);
            let limit = start + card + 1;
            (start.max(1)..=limit)
                .find(|&k| fits(k).unwrap_or(false) && (!padded || k >= 2))
                .ok_or_else(|| Error::invalid(format!("no k makes alpha = k·gamma with {} = {}", cfg.alpha, c)))?
        }
    };
    let layout = witness_layout(&cfg.shape)?;
    let n = precision.unwrap_or(k.saturating_mul(layout.t).saturating_add(2));
    let ctx = DvrContext::new(cfg.p, n)?;
    let (atoms, identity) = tiled_local_identity(&cfg.shape, ctx, k, padded)?;
    let base = MatrixMonoid::new(OrderArithmetic::new(atoms.order.clone(), ctx)?);
    let monoid = tblock_make(g, valuation_class_map(g, c), base)?;
    let out = witness_lift(&monoid, &identity, cfg.m, cap)?;
    let enc = |fs: &[LiftedFactor<DvrMatrix>]| fs.iter().map(|f| encode_factor(f, g)).collect::<Vec<_>>();
    let element_seq = factorlab::abelian::GSequence::from_multiplicities(g, &out.element.counts);
    let mut inputs = encode_lift_config(&cfg);
    inputs["k"] = json!(k);
    done(
        inputs,
        json!({
            "k": k,
            "m": cfg.m,
            "t": layout.t,
            "precision": n,
            "padded": out.padded,
            "gamma_exponent": identity.gamma_exponent,
            "element": { "sequence": encode_sequence(&element_seq), "t": encode_matrix(&out.element.t) },
            "short_length": out.short_length(),
            "long_length": out.long_length(),
            "short_side": enc(&out.short_side),
            "long_side_coarse": enc(&out.long_side_coarse),
            "long_side": enc(&out.long_side),
            "verified": true,
        }),
    )
}
