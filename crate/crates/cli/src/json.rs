//! JSON encoding of lattice objects. Integers and rationals are written as
//! decimal strings; on input plain JSON integers are accepted as well.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};
use tropci_core::{
    BoundaryData, BoundaryPair, Cone, LatticePolytope, LatticeVector, PLFunction, Polyhedron,
    PolyhedronStatus, RationalVector, TropicalCI, WeightedFan,
};

use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

pub fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| bad(format!("missing field \"{key}\"")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| bad(format!("{what} must be an array")))
}

pub fn int(v: &Value) -> Result<BigInt> {
    match v {
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| bad(format!("not an integer: \"{s}\""))),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().expect("integer")),
        _ => Err(bad(format!("not an integer: {v}"))),
    }
}

pub fn rational(v: &Value) -> Result<BigRational> {
    let Value::String(s) = v else {
        return int(v).map(BigRational::from_integer);
    };
    let err = || bad(format!("not a rational: \"{s}\""));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| err())?;
            let q: BigInt = q.trim().parse().map_err(|_| err())?;
            if q == BigInt::from(0) {
                return Err(err());
            }
            Ok(BigRational::new(p, q))
        }
        None => s
            .trim()
            .parse()
            .map(BigRational::from_integer)
            .map_err(|_| err()),
    }
}

pub fn usize_of(v: &Value, what: &str) -> Result<usize> {
    let i = int(v)?;
    usize::try_from(i).map_err(|_| bad(format!("{what} must be a nonnegative integer")))
}

pub fn vector(v: &Value) -> Result<LatticeVector> {
    array(v, "vector")?
        .iter()
        .map(int)
        .collect::<Result<Vec<_>>>()
        .map(LatticeVector::new)
}

fn vector_of_rank(v: &Value, rank: usize) -> Result<LatticeVector> {
    let x = vector(v)?;
    if x.rank() != rank {
        return Err(bad(format!("vector {x} does not have rank {rank}")));
    }
    Ok(x)
}

/// Parses a ray key such as `"(1,-2)"`, `"[1, -2]"` or `"1 -2"`.
pub fn vector_key(s: &str) -> Result<LatticeVector> {
    let inner = s
        .trim()
        .trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<BigInt>()
                .map_err(|_| bad(format!("bad ray key \"{s}\"")))
        })
        .collect::<Result<Vec<_>>>()
        .map(LatticeVector::new)
}

pub fn polytope(v: &Value) -> Result<LatticePolytope> {
    let rank = usize_of(field(v, "rank")?, "rank")?;
    let points = array(field(v, "points")?, "points")?
        .iter()
        .map(|p| vector_of_rank(p, rank))
        .collect::<Result<Vec<_>>>()?;
    Ok(LatticePolytope::new(rank, points)?)
}

pub fn polytopes(v: &Value) -> Result<Vec<LatticePolytope>> {
    array(v, "polytopes")?.iter().map(polytope).collect()
}

pub fn polyhedron(v: &Value) -> Result<Polyhedron> {
    let rank = usize_of(field(v, "rank")?, "rank")?;
    let ineqs = array(field(v, "inequalities")?, "inequalities")?
        .iter()
        .map(|i| {
            Ok((
                vector_of_rank(field(i, "l")?, rank)?,
                rational(field(i, "c")?)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Polyhedron::new(rank, ineqs)?)
}

pub fn fan(v: &Value) -> Result<WeightedFan> {
    let rank = usize_of(field(v, "rank")?, "rank")?;
    let dim = usize_of(field(v, "dim")?, "dim")?;
    let cones = array(field(v, "cones")?, "cones")?
        .iter()
        .map(|c| {
            let rays = array(field(c, "rays")?, "rays")?
                .iter()
                .map(|r| vector_of_rank(r, rank))
                .collect::<Result<Vec<_>>>()?;
            let weight = match c.get("weight") {
                Some(w) => rational(w)?,
                None => BigRational::from_integer(1.into()),
            };
            Ok((Cone::new(rays)?, weight))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightedFan::new(rank, dim, cones)?)
}

pub fn function(v: &Value) -> Result<PLFunction> {
    let carrier = fan(field(v, "fan")?)?;
    let values = field(v, "ray_values")?
        .as_object()
        .ok_or_else(|| bad("ray_values must be an object"))?
        .iter()
        .map(|(k, x)| Ok((vector_key(k)?.primitive()?, rational(x)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(PLFunction::new(carrier, values)?)
}

pub fn tci(v: &Value) -> Result<TropicalCI> {
    let rank = usize_of(field(v, "rank")?, "rank")?;
    let defect = match v.get("defect") {
        Some(d) => int(d)?,
        None => BigInt::from(0),
    };
    let functions = array(field(v, "functions")?, "functions")?
        .iter()
        .map(function)
        .collect::<Result<Vec<_>>>()?;
    Ok(TropicalCI::new(rank, functions, defect)?)
}

pub fn boundary(v: &Value) -> Result<BoundaryData> {
    let equations: Vec<Vec<BoundaryPair>> = array(field(v, "equations")?, "equations")?
        .iter()
        .map(|eq| {
            array(eq, "equation")?
                .iter()
                .map(|p| {
                    Ok(BoundaryPair {
                        l: vector(field(p, "l")?)?,
                        m: int(field(p, "m")?)?,
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let rank = match v.get("rank") {
        Some(r) => usize_of(r, "rank")?,
        None => equations
            .iter()
            .flatten()
            .map(|p| p.l.rank())
            .next()
            .ok_or_else(|| bad("boundary data without pairs needs a \"rank\""))?,
    };
    Ok(BoundaryData::new(rank, equations)?)
}

pub fn int_out(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn rational_out(x: &BigRational) -> Value {
    Value::String(x.to_string())
}

pub fn vector_out(v: &LatticeVector) -> Value {
    Value::Array(v.coords().iter().map(int_out).collect())
}

pub fn rational_vector_out(v: &RationalVector) -> Value {
    Value::Array(v.coords().iter().map(rational_out).collect())
}

pub fn vector_key_out(v: &LatticeVector) -> String {
    v.to_string()
}

pub fn polytope_out(p: &LatticePolytope) -> Value {
    json!({
        "rank": p.rank(),
        "points": p.vertices().iter().map(vector_out).collect::<Vec<_>>(),
    })
}

pub fn polyhedron_out(p: &Polyhedron) -> Value {
    let status = match p.status() {
        PolyhedronStatus::Empty => "empty",
        PolyhedronStatus::Bounded => "bounded",
        PolyhedronStatus::Unbounded => "unbounded",
    };
    json!({
        "rank": p.rank(),
        "status": status,
        "full_dimensional": p.is_full_dimensional(),
        "inequalities": p.inequalities().iter().map(|(l, c)| json!({"l": vector_out(l), "c": rational_out(c)})).collect::<Vec<_>>(),
        "vertices": p.vertices().iter().map(rational_vector_out).collect::<Vec<_>>(),
    })
}

pub fn fan_out(f: &WeightedFan) -> Value {
    let cones: Vec<Value> = f
        .cones()
        .iter()
        .map(|(c, w)| {
            json!({
                "rays": c.rays().iter().map(vector_out).collect::<Vec<_>>(),
                "weight": rational_out(w),
            })
        })
        .collect();
    json!({"rank": f.rank(), "dim": f.dim(), "cones": cones})
}

pub fn function_out(m: &PLFunction) -> Value {
    let values: Map<String, Value> = m
        .values()
        .iter()
        .map(|(r, v)| (vector_key_out(r), rational_out(v)))
        .collect();
    json!({"fan": fan_out(m.carrier()), "ray_values": values})
}

pub fn tci_out(t: &TropicalCI) -> Value {
    json!({
        "rank": t.rank(),
        "defect": int_out(t.defect()),
        "functions": t.functions().iter().map(function_out).collect::<Vec<_>>(),
    })
}

pub fn pair_out(p: &BoundaryPair) -> Value {
    json!({"l": vector_out(&p.l), "m": int_out(&p.m)})
}

pub fn boundary_out(b: &BoundaryData) -> Value {
    json!({
        "rank": b.rank,
        "equations": b.equations.iter().map(|eq| eq.iter().map(pair_out).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}
