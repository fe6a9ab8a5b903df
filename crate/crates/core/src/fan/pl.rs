use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::{common_refinement, Cone, WeightedFan};
use crate::error::{Error, Result};
use crate::lattice::{LatticeVector, RationalVector};
use crate::linalg::{self, RatVec};
use crate::polytope::LatticePolytope;

/// A continuous function on the support of a simplicial fan, linear on each
/// cone, stored by its values on the rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLFunction {
    carrier: WeightedFan,
    values: BTreeMap<LatticeVector, BigRational>,
}

impl PLFunction {
    /// Checks that every ray of the carrier has a value; extra keys are dropped.
    pub fn new(carrier: WeightedFan, values: BTreeMap<LatticeVector, BigRational>) -> Result<Self> {
        let mut kept = BTreeMap::new();
        for r in carrier.rays() {
            let v = values.get(&r).ok_or_else(|| Error::UndefinedFunction {
                index: 0,
                detail: format!("no value at ray {r}"),
            })?;
            kept.insert(r, v.clone());
        }
        Ok(PLFunction {
            carrier,
            values: kept,
        })
    }

    pub fn from_fn(carrier: WeightedFan, f: impl Fn(&LatticeVector) -> BigRational) -> Self {
        let values = carrier.rays().into_iter().map(|r| {
            let v = f(&r);
            (r, v)
        });
        let values = values.collect();
        PLFunction { carrier, values }
    }

    /// The linear function `<u, .>` on the support of `carrier`.
    pub fn linear(carrier: WeightedFan, u: &RationalVector) -> Self {
        Self::from_fn(carrier, |r| u.dot_lattice(r))
    }

    /// The support function `l -> max <l, P>` sampled at the carrier rays.
    /// It is piecewise linear on `carrier` only when the carrier refines the
    /// normal fan of `p`.
    pub fn support_function(p: &LatticePolytope, carrier: WeightedFan) -> Result<Self> {
        if p.rank() != carrier.rank() {
            return Err(Error::RankMismatch {
                expected: carrier.rank(),
                got: p.rank(),
            });
        }
        if p.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        Ok(Self::from_fn(carrier, |r| {
            BigRational::from_integer(p.support_value(r).expect("nonempty"))
        }))
    }

    pub fn carrier(&self) -> &WeightedFan {
        &self.carrier
    }

    pub fn rank(&self) -> usize {
        self.carrier.rank()
    }

    pub fn values(&self) -> &BTreeMap<LatticeVector, BigRational> {
        &self.values
    }

    /// A carrier cone containing `x`.
    pub fn cone_containing(&self, x: &[BigRational]) -> Option<(&Cone, RatVec)> {
        self.carrier.cones().keys().find_map(|c| {
            let coef = c.coefficients(x)?;
            coef.iter()
                .all(|v| *v >= BigRational::zero())
                .then_some((c, coef))
        })
    }

    pub fn eval(&self, x: &LatticeVector) -> Result<BigRational> {
        if x.is_zero() {
            return Ok(BigRational::zero());
        }
        let len = x.lattice_length();
        let p = x.primitive()?;
        if let Some(v) = self.values.get(&p) {
            return Ok(v * BigRational::from_integer(len));
        }
        self.eval_rational(&linalg::to_rat(x.coords()))
            .ok_or_else(|| Error::RayNotInSupport(x.to_string()))
    }

    pub fn eval_rational(&self, x: &[BigRational]) -> Option<BigRational> {
        let (c, coef) = self.cone_containing(x)?;
        Some(self.combine(c, &coef))
    }

    fn combine(&self, c: &Cone, coef: &[BigRational]) -> BigRational {
        c.rays()
            .iter()
            .zip(coef)
            .map(|(r, k)| k * &self.values[r])
            .sum()
    }

    /// Value at `x`, using the linear extension of the function on cone `c`.
    pub(crate) fn eval_on_cone(&self, c: &Cone, x: &[BigRational]) -> Option<BigRational> {
        let coef = c.coefficients(x)?;
        Some(self.combine(c, &coef))
    }

    /// The same function on a refinement of the carrier.
    pub fn rebase(&self, carrier: WeightedFan) -> Result<PLFunction> {
        let mut values = BTreeMap::new();
        for r in carrier.rays() {
            let v = self.eval(&r)?;
            values.insert(r, v);
        }
        Ok(PLFunction { carrier, values })
    }

    /// True iff the function is linear on every cone of `f`.
    pub fn is_linear_on(&self, f: &WeightedFan) -> bool {
        f.cones().keys().all(|c| self.carrier_cone_of(c).is_some())
    }

    /// A carrier cone containing every ray of `c`.
    pub(crate) fn carrier_cone_of(&self, c: &Cone) -> Option<&Cone> {
        let cones = self.carrier.cones();
        if cones.contains_key(c) {
            return cones.get_key_value(c).map(|(k, _)| k);
        }
        let rays: Vec<RatVec> = c
            .rays()
            .iter()
            .map(|r| linalg::to_rat(r.coords()))
            .collect();
        cones
            .keys()
            .find(|k| c.rays().iter().all(|r| k.has_ray(r)) || rays.iter().all(|x| k.contains(x)))
    }

    fn combine_with(
        &self,
        other: &PLFunction,
        op: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Result<PLFunction> {
        if self.carrier.cones().keys().eq(other.carrier.cones().keys()) {
            let values = self
                .values
                .iter()
                .map(|(r, v)| (r.clone(), op(v, &other.values[r])))
                .collect();
            return Ok(PLFunction {
                carrier: self.carrier.clone(),
                values,
            });
        }
        let (_, fs) = common_refinement(&self.carrier, &[self.clone(), other.clone()])?;
        fs[0].combine_with(&fs[1], op)
    }

    pub fn add(&self, other: &PLFunction) -> Result<PLFunction> {
        self.combine_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &PLFunction) -> Result<PLFunction> {
        self.combine_with(other, |a, b| a - b)
    }

    pub fn scale(&self, k: &BigRational) -> PLFunction {
        let values = self
            .values
            .iter()
            .map(|(r, v)| (r.clone(), v * k))
            .collect();
        PLFunction {
            carrier: self.carrier.clone(),
            values,
        }
    }
}
