use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::{normal_vector, ridges, PLFunction, WeightedFan};
use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::linalg;

/// The corner locus `delta(m . F)`: the codimension-one cycle on the ridges of
/// `f` with weights
/// `sum w(sigma) m(u_sigma) - m(sum w(sigma) u_sigma)`, where `u_sigma` is a
/// lattice normal vector of the ridge in `sigma` and the last term uses the
/// linear extension of `m` on the ridge. Support functions of polytopes give
/// nonnegative weights.
pub fn weil_divisor(m: &PLFunction, f: &WeightedFan) -> Result<WeightedFan> {
    let n = f.rank();
    if m.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: m.rank(),
        });
    }
    if f.dim() == 0 {
        return Err(Error::Unsupported(
            "corner locus on a zero-dimensional fan".into(),
        ));
    }
    let mut vals: BTreeMap<LatticeVector, BigRational> = BTreeMap::new();
    for sigma in f.cones().keys() {
        let c = m
            .carrier_cone_of(sigma)
            .ok_or_else(|| Error::NotLinear(sigma.to_string()))?;
        for r in sigma.rays() {
            if vals.contains_key(r) {
                continue;
            }
            let v = match m.values().get(r) {
                Some(v) => v.clone(),
                None => m
                    .eval_on_cone(c, &linalg::to_rat(r.coords()))
                    .ok_or_else(|| Error::NotLinear(sigma.to_string()))?,
            };
            vals.insert(r.clone(), v);
        }
    }
    let mut out = WeightedFan::empty(n, f.dim() - 1);
    for (tau, star) in ridges(f) {
        let mut sum = vec![BigRational::zero(); n];
        let mut weight = BigRational::zero();
        for (sigma, r) in &star {
            let w = f.weight(sigma);
            let (v, c) = normal_vector(sigma, &tau, r);
            for (s, x) in sum.iter_mut().zip(&v) {
                *s += &w * x;
            }
            weight += &w * &vals[r] / c;
        }
        let coef = tau
            .coefficients(&sum)
            .ok_or_else(|| Error::NotBalanced(tau.to_string()))?;
        for (t, k) in tau.rays().iter().zip(&coef) {
            weight -= k * &vals[t];
        }
        out.insert(tau, weight);
    }
    Ok(out)
}
