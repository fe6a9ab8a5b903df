//! Randomized invariant suite with a fixed seed.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use tropci_core::{
    complete_fan, euler_bkk, euler_direct, euler_recursive, is_balanced, lattice_volume,
    minkowski_sum, mixed_volume, nci_face_weight, normal_fan, refine, tci_from_polytopes,
    weil_divisor, LatticePolytope, LatticeVector, PLFunction, WeightedFan,
};

use crate::oracles;

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Deliberate faults used to check that the suite notices them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Injection {
    /// Adds one to a weight of every corner locus before the balancing test.
    Weight,
    /// Flips the sign of one term of the polarization formula.
    Sign,
}

impl Injection {
    pub fn from_name(s: &str) -> Option<Injection> {
        match s {
            "weight" => Some(Injection::Weight),
            "sign" => Some(Injection::Sign),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures.is_empty())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed.to_string(),
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "cases": c.cases,
                "passed": c.failures.is_empty(),
                "failures": c.failures,
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn run(seed: u64, inject: Option<Injection>) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let checks = vec![
        balancing(&mut rng, inject == Some(Injection::Weight)),
        mixed_volume_oracle(&mut rng, inject == Some(Injection::Sign)),
        pick_oracle(&mut rng),
        direct_vs_bkk(&mut rng),
        face_weights(&mut rng),
        recursion_vs_direct(&mut rng),
    ];
    Report { seed, checks }
}

fn point(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> LatticeVector {
    LatticeVector::from_i64s(
        &(0..n)
            .map(|_| rng.gen_range(-bound..=bound))
            .collect::<Vec<_>>(),
    )
}

fn polytope(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> LatticePolytope {
    let m = rng.gen_range(n + 1..=n + 3);
    LatticePolytope::new(n, (0..m).map(|_| point(rng, n, bound)).collect()).expect("rank")
}

fn full_polytope(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> LatticePolytope {
    loop {
        let p = polytope(rng, n, bound);
        if p.is_full_dimensional() {
            return p;
        }
    }
}

/// Runs `case` on `cases` inputs and records at most five failure messages.
fn check(
    name: &'static str,
    cases: usize,
    mut case: impl FnMut(usize) -> Result<(), String>,
) -> Check {
    let mut failures = Vec::new();
    for i in 0..cases {
        if let Err(e) = case(i) {
            if failures.len() < 5 {
                failures.push(format!("case {i}: {e}"));
            }
        }
    }
    Check {
        name,
        cases,
        failures,
    }
}

fn support(p: &LatticePolytope) -> Result<PLFunction, String> {
    let n = p.rank();
    let f = normal_fan(std::slice::from_ref(p), n).map_err(|e| e.to_string())?;
    PLFunction::support_function(p, f).map_err(|e| e.to_string())
}

fn balancing(rng: &mut ChaCha8Rng, inject: bool) -> Check {
    check("balancing", 40, |i| {
        let n = 2 + i % 2;
        let m = if rng.gen_bool(0.5) {
            support(&polytope(rng, n, 3))?
        } else {
            let a = support(&polytope(rng, n, 3))?;
            let b = support(&polytope(rng, n, 3))?;
            a.sub(&b).map_err(|e| e.to_string())?
        };
        let f = refine(&complete_fan(n), m.carrier()).map_err(|e| e.to_string())?;
        let mut d = weil_divisor(&m, &f).map_err(|e| e.to_string())?;
        if inject {
            d = perturb(&d);
        }
        if is_balanced(&d).balanced {
            Ok(())
        } else {
            Err(format!("unbalanced corner locus {d}"))
        }
    })
}

fn perturb(d: &WeightedFan) -> WeightedFan {
    let mut cones: Vec<_> = d
        .cones()
        .iter()
        .map(|(c, w)| (c.clone(), w.clone()))
        .collect();
    if let Some(first) = cones.first_mut() {
        first.1 += BigRational::from_integer(1.into());
    }
    WeightedFan::new(d.rank(), d.dim(), cones).expect("same cones")
}

/// `sum_S (-1)^(n-|S|) Vol(sum_{i in S} P_i) / n!` over nonempty `S`.
fn polarization(ps: &[LatticePolytope], flip: bool) -> Result<BigInt, String> {
    let n = ps.len();
    let mut total = BigInt::from(0);
    for mask in 1u32..(1 << n) {
        let mut sum = LatticePolytope::point(LatticeVector::zero(ps[0].rank()));
        for (i, p) in ps.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum = minkowski_sum(&sum, p).map_err(|e| e.to_string())?;
            }
        }
        let mut v = lattice_volume(&sum);
        if (n - mask.count_ones() as usize) % 2 == 1 {
            v = -v;
        }
        if flip && mask == 1 {
            v = -v;
        }
        total += v;
    }
    let f: BigInt = (1..=n).map(BigInt::from).product();
    Ok(total / f)
}

fn mixed_volume_oracle(rng: &mut ChaCha8Rng, inject: bool) -> Check {
    check("mixed-volume-vs-oracle", 30, |_| {
        let ps = [polytope(rng, 2, 4), polytope(rng, 2, 4)];
        let lib = mixed_volume(&ps).map_err(|e| e.to_string())?;
        let pol = polarization(&ps, inject)?;
        let oracle = oracles::mv2d(&ps[0], &ps[1]).map_err(|e| e.to_string())?;
        if lib == oracle && pol == oracle {
            Ok(())
        } else {
            Err(format!(
                "library {lib}, polarization {pol}, oracle {oracle}"
            ))
        }
    })
}

fn pick_oracle(rng: &mut ChaCha8Rng) -> Check {
    check("pick-oracle", 20, |_| {
        let p = full_polytope(rng, 2, 4);
        let t = tci_from_polytopes(std::slice::from_ref(&p), 2).map_err(|e| e.to_string())?;
        let e = euler_direct(&t).map_err(|e| e.to_string())?;
        let o = oracles::pick(&p).map_err(|e| e.to_string())?;
        if e == o {
            Ok(())
        } else {
            Err(format!("euler {e}, oracle {o}"))
        }
    })
}

fn direct_vs_bkk(rng: &mut ChaCha8Rng) -> Check {
    check("direct-vs-bkk", 10, |i| {
        let n = 2 + i % 2;
        let k = rng.gen_range(1..=n);
        let ps: Vec<_> = (0..k).map(|_| polytope(rng, n, 3)).collect();
        let t = tci_from_polytopes(&ps, n).map_err(|e| e.to_string())?;
        let b = euler_bkk(&ps, n).map_err(|e| e.to_string())?;
        let d = if t.is_degenerate() {
            BigInt::from(0)
        } else {
            euler_direct(&t).map_err(|e| e.to_string())?
        };
        if d == b {
            Ok(())
        } else {
            Err(format!("direct {d}, bkk {b}"))
        }
    })
}

fn face_weights(rng: &mut ChaCha8Rng) -> Check {
    check("face-weights", 10, |i| {
        let n = 2 + i % 2;
        let k = rng.gen_range(1..n);
        let ps: Vec<_> = (0..k).map(|_| full_polytope(rng, n, 3)).collect();
        let t = tci_from_polytopes(&ps, n).map_err(|e| e.to_string())?;
        for (c, w) in t.tropical_fan().cones() {
            let l = c.interior_ray(n).map_err(|e| e.to_string())?;
            let fw = nci_face_weight(&ps, &l).map_err(|e| e.to_string())?;
            if !fw.defined || BigRational::from_integer(fw.weight.clone()) != *w {
                return Err(format!("weight {w} at {l}, faces give {}", fw.weight));
            }
        }
        Ok(())
    })
}

fn recursion_vs_direct(rng: &mut ChaCha8Rng) -> Check {
    check("recursion-vs-direct", 6, |i| {
        let n = if i < 5 { 2 } else { 3 };
        let k = rng.gen_range(1..=n);
        let ps: Vec<_> = (0..k).map(|_| full_polytope(rng, n, 3)).collect();
        let t = tci_from_polytopes(&ps, n).map_err(|e| e.to_string())?;
        if t.is_degenerate() {
            return Ok(());
        }
        let maj: Vec<_> = ps
            .iter()
            .map(|p| {
                let mut pts = p.vertices();
                pts.push(point(rng, n, 4));
                LatticePolytope::new(n, pts).expect("rank")
            })
            .collect();
        let d = euler_direct(&t).map_err(|e| e.to_string())?;
        let r = euler_recursive(&t, &maj).map_err(|e| e.to_string())?;
        if d == r {
            Ok(())
        } else {
            Err(format!("direct {d}, recursive {r}"))
        }
    })
}
