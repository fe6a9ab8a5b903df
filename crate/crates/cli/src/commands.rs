use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use tropci_core::{
    betti_numbers, char_class, component_count, cy_check, euler_bkk, euler_direct, euler_recursive,
    full_dim_connectivity, is_balanced, is_newtonian, mixed_volume, newton_polyhedra, refine,
    restrict, sublattice_mixed_volume, tci_from_polytopes, weil_divisor, BoundaryData, Error,
    LatticePolytope, PLFunction, TropicalCI, WeightedFan,
};

use crate::json::{self, field};
use crate::{oracles, selftest, CliError};

type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Mv,
    Bkk,
    Tropicalize,
    Divisor,
    Euler,
    Chiclass,
    NewtonPolyhedra,
    Newtonian,
    Components,
    Betti,
    Restrict,
    CyCheck,
    OraclePick,
    OracleMv2d,
    Selftest,
}

impl Command {
    pub const ALL: [Command; 15] = [
        Command::Mv,
        Command::Bkk,
        Command::Tropicalize,
        Command::Divisor,
        Command::Euler,
        Command::Chiclass,
        Command::NewtonPolyhedra,
        Command::Newtonian,
        Command::Components,
        Command::Betti,
        Command::Restrict,
        Command::CyCheck,
        Command::OraclePick,
        Command::OracleMv2d,
        Command::Selftest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Mv => "mv",
            Command::Bkk => "bkk",
            Command::Tropicalize => "tropicalize",
            Command::Divisor => "divisor",
            Command::Euler => "euler",
            Command::Chiclass => "chiclass",
            Command::NewtonPolyhedra => "newton-polyhedra",
            Command::Newtonian => "newtonian",
            Command::Components => "components",
            Command::Betti => "betti",
            Command::Restrict => "restrict",
            Command::CyCheck => "cy-check",
            Command::OraclePick => "oracle-pick",
            Command::OracleMv2d => "oracle-mv2d",
            Command::Selftest => "selftest",
        }
    }

    pub fn from_name(s: &str) -> Option<Command> {
        Command::ALL.into_iter().find(|c| c.name() == s)
    }

    /// Whether the command reads JSON input.
    pub fn takes_input(self) -> bool {
        self != Command::Selftest
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Extra PL functions whose carriers refine every input fan first.
    pub refine_with: Vec<PLFunction>,
    pub seed: Option<u64>,
    pub inject: Option<selftest::Injection>,
}

pub fn run(cmd: Command, input: &Value, opts: &Options) -> Result<Value> {
    match cmd {
        Command::Mv => mv(input),
        Command::Bkk => {
            let (n, ps) = polytope_tuple(input)?;
            Ok(json!({"euler": json::int_out(&euler_bkk(&ps, n)?)}))
        }
        Command::Tropicalize => {
            let t = tci_input(input, opts)?;
            let degree = t.tropical_fan().degree();
            Ok(json!({
                "degenerate": t.is_degenerate(),
                "fans": t.fans().iter().map(json::fan_out).collect::<Vec<_>>(),
                "tropical_fan": json::fan_out(&t.tropical_fan()),
                "degree": json::rational_out(&degree),
            }))
        }
        Command::Divisor => divisor(input, opts),
        Command::Euler => euler(input, opts),
        Command::Chiclass => {
            let t = tci_input(input, opts)?;
            let c = char_class(&t)?;
            let comps: Map<String, Value> = c
                .components
                .iter()
                .map(|(d, f)| (d.to_string(), json::fan_out(f)))
                .collect();
            Ok(json!({
                "char_class": comps,
                "euler": json::int_out(&euler_direct(&t)?),
                "defect": json::int_out(t.defect()),
            }))
        }
        Command::NewtonPolyhedra => {
            let b = boundary_input(input)?;
            Ok(json!({
                "polyhedra": newton_polyhedra(&b).iter().map(json::polyhedron_out).collect::<Vec<_>>(),
            }))
        }
        Command::Newtonian => newtonian(input),
        Command::Components => {
            let (n, ps) = polytope_tuple(input)?;
            let c = component_count(&ps, n)?;
            Ok(json!({
                "components": json::int_out(&c.count),
                "subtuple": c.subtuple,
                "disagreements": c.disagreements.iter().map(|(s, v)| json!({"subtuple": s, "count": json::int_out(v)})).collect::<Vec<_>>(),
            }))
        }
        Command::Betti => betti(input, opts),
        Command::Restrict => {
            let t = tci_input(input, opts)?;
            let l = json::vector(field(input, "l")?)?;
            let r = restrict(&t, &l)?;
            Ok(json!({
                "restricted": json::tci_out(&r),
                "degenerate": r.is_degenerate(),
                "tropical_fan": json::fan_out(&r.tropical_fan()),
            }))
        }
        Command::CyCheck => {
            let t = tci_input(input, opts)?;
            let p = json::polytope(field(input, "polytope")?)?;
            let r = cy_check(&t, &p)?;
            Ok(json!({
                "passed": r.passed,
                "failed_clause": r.failed.map(|c| c.to_string()),
                "detail": r.detail,
            }))
        }
        Command::OraclePick => {
            let p = match input.get("polytope") {
                Some(p) => json::polytope(p)?,
                None => json::polytope(input)?,
            };
            let (i, b) = oracles::lattice_points(&p)?;
            Ok(json!({
                "euler": json::int_out(&oracles::pick(&p)?),
                "interior": json::int_out(&i),
                "boundary": json::int_out(&b),
            }))
        }
        Command::OracleMv2d => {
            let ps = json::polytopes(field(input, "polytopes")?)?;
            let [p, q] = ps.as_slice() else {
                return Err(Error::WrongCount {
                    expected: 2,
                    got: ps.len(),
                }
                .into());
            };
            Ok(json!({"mixed_volume": json::int_out(&oracles::mv2d(p, q)?)}))
        }
        Command::Selftest => {
            let seed = opts.seed.unwrap_or(selftest::DEFAULT_SEED);
            Ok(selftest::run(seed, opts.inject).to_json())
        }
    }
}

/// Rank and polytopes from `{"rank": n, "polytopes": [...]}`; the rank
/// defaults to that of the first polytope.
fn polytope_tuple(v: &Value) -> Result<(usize, Vec<LatticePolytope>)> {
    let ps = json::polytopes(field(v, "polytopes")?)?;
    let n = match v.get("rank") {
        Some(r) => json::usize_of(r, "rank")?,
        None => ps
            .first()
            .map(LatticePolytope::rank)
            .ok_or_else(|| CliError::Parse("empty polytope list needs a \"rank\"".into()))?,
    };
    Ok((n, ps))
}

fn mv(v: &Value) -> Result<Value> {
    let (n, ps) = polytope_tuple(v)?;
    if ps.len() == n {
        return Ok(json!({"mixed_volume": json::int_out(&mixed_volume(&ps)?)}));
    }
    let mv = sublattice_mixed_volume(&ps)?;
    Ok(json!({
        "mixed_volume": mv.as_ref().map(json::int_out),
        "sublattice": true,
    }))
}

/// A tropical complete intersection given directly, under `"tci"`, or by
/// Newton polytopes.
fn tci_input(v: &Value, opts: &Options) -> Result<TropicalCI> {
    let t = if let Some(t) = v.get("tci") {
        json::tci(t)?
    } else if v.get("functions").is_some() {
        json::tci(v)?
    } else if v.get("polytopes").is_some() {
        let (n, ps) = polytope_tuple(v)?;
        let defect = match v.get("defect") {
            Some(d) => json::int(d)?,
            None => BigInt::from(0),
        };
        tci_from_polytopes(&ps, n)?.with_defect(defect)
    } else {
        return Err(CliError::Parse(
            "expected a tci, {\"tci\": ...} or {\"rank\", \"polytopes\"}".into(),
        ));
    };
    refine_tci(t, &opts.refine_with)
}

fn refine_by(f: &WeightedFan, extra: &[PLFunction]) -> Result<WeightedFan> {
    let mut g = f.clone();
    for m in extra {
        g = refine(&g, m.carrier())?;
    }
    Ok(g)
}

/// Rebases every function on a refinement of its carrier by the extra
/// functions. The intersection itself does not change.
fn refine_tci(t: TropicalCI, extra: &[PLFunction]) -> Result<TropicalCI> {
    if extra.is_empty() {
        return Ok(t);
    }
    let functions = t
        .functions()
        .iter()
        .map(|m| Ok(m.rebase(refine_by(m.carrier(), extra)?)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(TropicalCI::new(t.rank(), functions, t.defect().clone())?)
}

fn boundary_input(v: &Value) -> Result<BoundaryData> {
    if let Some(b) = v.get("boundary") {
        return json::boundary(b);
    }
    if v.get("equations").is_some() {
        return json::boundary(v);
    }
    let (n, ps) = polytope_tuple(v)?;
    Ok(BoundaryData::from_polytopes(&ps, n)?)
}

fn divisor(v: &Value, opts: &Options) -> Result<Value> {
    let m = json::function(field(v, "function")?)?;
    let f = match v.get("fan") {
        Some(f) => json::fan(f)?,
        None => m.carrier().clone(),
    };
    let f = refine_by(&f, &opts.refine_with)?;
    let f = refine(&f, m.carrier())?;
    let d = weil_divisor(&m, &f)?;
    let report = is_balanced(&d);
    Ok(json!({
        "divisor": json::fan_out(&d),
        "balanced": report.balanced,
        "violations": report.violations.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    }))
}

fn euler(v: &Value, opts: &Options) -> Result<Value> {
    let t = tci_input(v, opts)?;
    let mut out = Map::new();
    out.insert("euler".into(), json::int_out(&euler_direct(&t)?));
    out.insert("defect".into(), json::int_out(t.defect()));
    if let Some(m) = v.get("majorants") {
        let maj = json::polytopes(m)?;
        out.insert(
            "euler_recursive".into(),
            json::int_out(&euler_recursive(&t, &maj)?),
        );
    }
    Ok(Value::Object(out))
}

fn newtonian(v: &Value) -> Result<Value> {
    let b = boundary_input(v)?;
    let r = is_newtonian(&b);
    let data: Vec<BTreeMap<String, Value>> = r
        .newton_data
        .iter()
        .map(|d| {
            d.iter()
                .map(|(l, m)| (json::vector_key_out(l), json::rational_out(m)))
                .collect()
        })
        .collect();
    Ok(json!({
        "newtonian": r.newtonian,
        "violations": r.violations.iter().map(|(i, a, b)| json!({
            "equation": i,
            "pairs": [json::pair_out(a), json::pair_out(b)],
        })).collect::<Vec<_>>(),
        "newton_data": data,
    }))
}

fn betti(v: &Value, opts: &Options) -> Result<Value> {
    let t = tci_input(v, opts)?;
    let b = boundary_input(v)?;
    let c = full_dim_connectivity(&b);
    let connectivity = json!({
        "full_dimensional": c.full_dimensional,
        "holds": c.holds,
        "betti": c.betti.as_ref().map(|b| b.iter().map(json::int_out).collect::<Vec<_>>()),
        "connected": c.connected,
    });
    let betti = match betti_numbers(&t, &b) {
        Ok(b) => Value::Array(b.iter().map(json::int_out).collect()),
        Err(Error::Unsupported(_)) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    Ok(json!({"betti": betti, "connectivity": connectivity}))
}
