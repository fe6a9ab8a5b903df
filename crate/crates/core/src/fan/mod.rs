//! Weighted simplicial fans, piecewise-linear functions and corner loci.

mod divisor;
mod pl;
mod refine;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::lattice::{quotient_map, LatticeVector};
use crate::linalg::{self, IntVec, RatVec};

pub use divisor::weil_divisor;
pub use pl::PLFunction;
pub use refine::{common_refinement, refine, subdivide_at_ray};

/// A simplicial cone spanned by linearly independent primitive rays, kept in
/// lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    rays: Vec<LatticeVector>,
}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cone[")?;
        for (i, r) in self.rays.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

impl Cone {
    pub fn new(mut rays: Vec<LatticeVector>) -> Result<Self> {
        for r in &rays {
            if r.is_zero() {
                return Err(Error::ZeroVector);
            }
            if !r.is_primitive() {
                return Err(Error::NotPrimitive(r.to_string()));
            }
        }
        rays.sort();
        rays.dedup();
        let rows: Vec<IntVec> = rays.iter().map(|r| r.coords().to_vec()).collect();
        if linalg::rank(&rows) != rays.len() {
            return Err(Error::InvalidCone(format!(
                "rays are not independent: {rays:?}"
            )));
        }
        Ok(Cone { rays })
    }

    /// Builds a cone from arbitrary nonzero generators of a simplicial cone.
    pub fn spanned_by(gens: &[LatticeVector]) -> Result<Self> {
        Cone::new(gens.iter().map(|g| g.primitive()).collect::<Result<_>>()?)
    }

    pub(crate) fn from_sorted(rays: Vec<LatticeVector>) -> Self {
        Cone { rays }
    }

    /// The zero cone.
    pub fn origin() -> Self {
        Cone { rays: Vec::new() }
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn dim(&self) -> usize {
        self.rays.len()
    }

    pub fn has_ray(&self, r: &LatticeVector) -> bool {
        self.rays.binary_search(r).is_ok()
    }

    /// The face obtained by dropping the ray at position `i`.
    pub fn without(&self, i: usize) -> Cone {
        let mut rays = self.rays.clone();
        rays.remove(i);
        Cone { rays }
    }

    pub fn with_ray(&self, r: LatticeVector) -> Cone {
        let mut rays = self.rays.clone();
        rays.push(r);
        rays.sort();
        Cone { rays }
    }

    pub(crate) fn int_rays(&self) -> Vec<IntVec> {
        self.rays.iter().map(|r| r.coords().to_vec()).collect()
    }

    /// Coefficients of `x` in the ray basis if `x` lies in the linear span.
    pub fn coefficients(&self, x: &[BigRational]) -> Option<RatVec> {
        let basis: Vec<RatVec> = self
            .rays
            .iter()
            .map(|r| linalg::to_rat(r.coords()))
            .collect();
        linalg::solve_combination(&basis, x)
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        self.coefficients(x)
            .is_some_and(|c| c.iter().all(|v| !v.is_negative()))
    }

    pub fn contains_lattice(&self, x: &LatticeVector) -> bool {
        self.contains(&linalg::to_rat(x.coords()))
    }

    /// Index of the lattice generated by the rays in its saturation.
    pub fn lattice_index(&self) -> BigInt {
        linalg::max_minor_gcd(&self.int_rays())
    }

    /// Primitive generator of the sum of the rays.
    pub fn interior_ray(&self, rank: usize) -> Result<LatticeVector> {
        let s = self
            .rays
            .iter()
            .fold(LatticeVector::zero(rank), |a, r| a.add(r));
        s.primitive()
    }
}

/// A pure-dimensional weighted fan: a tropical cycle when balanced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedFan {
    rank: usize,
    dim: usize,
    cones: BTreeMap<Cone, BigRational>,
}

impl WeightedFan {
    pub fn new(
        rank: usize,
        dim: usize,
        cones: impl IntoIterator<Item = (Cone, BigRational)>,
    ) -> Result<Self> {
        let mut f = WeightedFan {
            rank,
            dim,
            cones: BTreeMap::new(),
        };
        for (c, w) in cones {
            if c.dim() != dim {
                return Err(Error::InvalidCone(format!(
                    "{c} has dimension {} in a fan of dimension {dim}",
                    c.dim()
                )));
            }
            if let Some(r) = c.rays.iter().find(|r| r.rank() != rank) {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: r.rank(),
                });
            }
            f.insert(c, w);
        }
        Ok(f)
    }

    pub(crate) fn insert(&mut self, c: Cone, w: BigRational) {
        use std::collections::btree_map::Entry;
        match self.cones.entry(c) {
            Entry::Vacant(e) => {
                if !w.is_zero() {
                    e.insert(w);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += w;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// The zero-dimensional cycle `w [0]`.
    pub fn point(rank: usize, w: BigRational) -> Self {
        WeightedFan::new(rank, 0, [(Cone::origin(), w)]).expect("origin")
    }

    pub fn empty(rank: usize, dim: usize) -> Self {
        WeightedFan {
            rank,
            dim,
            cones: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cones(&self) -> &BTreeMap<Cone, BigRational> {
        &self.cones
    }

    pub fn weight(&self, c: &Cone) -> BigRational {
        self.cones.get(c).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    /// Weight of the origin for a zero-dimensional fan.
    pub fn degree(&self) -> BigRational {
        if self.dim != 0 {
            return BigRational::zero();
        }
        self.weight(&Cone::origin())
    }

    pub fn rays(&self) -> BTreeSet<LatticeVector> {
        self.cones
            .keys()
            .flat_map(|c| c.rays.iter().cloned())
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.cones.values().all(|w| w.is_integer())
    }

    /// Sum of two cycles of the same dimension, merging equal cones.
    pub fn add(&self, other: &WeightedFan) -> Result<WeightedFan> {
        self.check_compatible(other)?;
        let mut f = self.clone();
        for (c, w) in &other.cones {
            f.insert(c.clone(), w.clone());
        }
        Ok(f)
    }

    pub fn scale(&self, k: &BigRational) -> WeightedFan {
        WeightedFan::new(
            self.rank,
            self.dim,
            self.cones.iter().map(|(c, w)| (c.clone(), w * k)),
        )
        .expect("same cones")
    }

    pub fn neg(&self) -> WeightedFan {
        self.scale(&-BigRational::one())
    }

    fn check_compatible(&self, other: &WeightedFan) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: other.rank,
            });
        }
        if self.dim != other.dim {
            return Err(Error::InvalidCone(format!(
                "dimension {} vs {}",
                self.dim, other.dim
            )));
        }
        Ok(())
    }

    /// Local weight at `x`: the total weight of cones containing `x`.
    /// Returns `None` when `x` lies on a proper face of one of those cones.
    pub fn weight_at(&self, x: &[BigRational]) -> Option<BigRational> {
        let mut total = BigRational::zero();
        for (c, w) in &self.cones {
            if let Some(coef) = c.coefficients(x) {
                if coef.iter().any(|v| v.is_negative()) {
                    continue;
                }
                if coef.iter().any(|v| v.is_zero()) {
                    return None;
                }
                total += w;
            }
        }
        Some(total)
    }

    /// Compares two cycles by their local weights at random points of every
    /// maximal cone of either fan. Points landing on lower-dimensional faces
    /// are resampled.
    pub fn agrees_with<R: Rng>(&self, other: &WeightedFan, rng: &mut R) -> bool {
        if self.rank != other.rank || self.dim != other.dim {
            return false;
        }
        if self.dim == 0 {
            return self.degree() == other.degree();
        }
        let (a, b) = (Locator::new(self), Locator::new(other));
        for c in self.cones.keys().chain(other.cones.keys()) {
            let mut tries = 0;
            loop {
                tries += 1;
                let x = random_interior_point(c, self.rank, rng);
                match (a.weight_at(&x), b.weight_at(&x)) {
                    (Some(a), Some(b)) => {
                        if a != b {
                            return false;
                        }
                        break;
                    }
                    _ if tries < 64 => continue,
                    _ => return false,
                }
            }
        }
        true
    }
}

/// Point location in a fan by precomputed span equations and integer dual
/// vectors, whose signs give the signs of the ray coefficients.
struct Locator<'a> {
    cones: Vec<(Vec<IntVec>, Vec<IntVec>, &'a BigRational)>,
}

impl<'a> Locator<'a> {
    fn new(f: &'a WeightedFan) -> Self {
        let cones = f
            .cones
            .iter()
            .map(|(c, w)| {
                let rays = c.int_rays();
                let eqs = linalg::integer_kernel(&rays, f.rank);
                let gram: Vec<RatVec> = rays
                    .iter()
                    .map(|r| {
                        linalg::to_rat(&rays.iter().map(|s| linalg::dot(r, s)).collect::<Vec<_>>())
                    })
                    .collect();
                let dual = (0..rays.len())
                    .map(|i| {
                        let e: RatVec = (0..rays.len())
                            .map(|j| BigRational::from_integer(BigInt::from(u8::from(i == j))))
                            .collect();
                        let g = linalg::solve_combination(&gram, &e).expect("independent rays");
                        let mut d = vec![BigRational::zero(); f.rank];
                        for (gk, r) in g.iter().zip(&rays) {
                            for (di, ri) in d.iter_mut().zip(r) {
                                *di += gk * BigRational::from_integer(ri.clone());
                            }
                        }
                        linalg::rat_to_primitive(&d)
                    })
                    .collect();
                (eqs, dual, w)
            })
            .collect();
        Locator { cones }
    }

    fn weight_at(&self, x: &[BigInt]) -> Option<BigRational> {
        let mut total = BigRational::zero();
        for (eqs, dual, w) in &self.cones {
            if eqs.iter().any(|e| !linalg::dot(e, x).is_zero()) {
                continue;
            }
            let signs: Vec<BigInt> = dual.iter().map(|d| linalg::dot(d, x)).collect();
            if signs.iter().any(|v| v.is_negative()) {
                continue;
            }
            if signs.iter().any(|v| v.is_zero()) {
                return None;
            }
            total += *w;
        }
        Some(total)
    }
}

pub(crate) fn random_interior_point<R: Rng>(c: &Cone, rank: usize, rng: &mut R) -> IntVec {
    let mut x = vec![BigInt::zero(); rank];
    for r in &c.rays {
        let k = BigInt::from(rng.gen_range(1..=1_000_000u64));
        for (xi, ri) in x.iter_mut().zip(r.coords()) {
            *xi += &k * ri;
        }
    }
    x
}

impl fmt::Display for WeightedFan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fan(rank {}, dim {}) {{", self.rank, self.dim)?;
        for (i, (c, w)) in self.cones.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {c}:{w}")?;
        }
        write!(f, " }}")
    }
}

/// The fan of coordinate orthants with weight one.
pub fn complete_fan(n: usize) -> WeightedFan {
    let mut cones = Vec::with_capacity(1 << n);
    for mask in 0u64..(1 << n) {
        let rays: Vec<LatticeVector> = (0..n)
            .map(|i| {
                let e = LatticeVector::unit(n, i);
                if mask & (1 << i) != 0 {
                    e.neg()
                } else {
                    e
                }
            })
            .collect();
        cones.push((Cone::new(rays).expect("orthant"), BigRational::one()));
    }
    WeightedFan::new(n, n, cones).expect("orthants")
}

/// Codimension-one faces of the maximal cones, each with the cones containing
/// it and the ray completing the face to that cone.
pub(crate) fn ridges(f: &WeightedFan) -> BTreeMap<Cone, Vec<(Cone, LatticeVector)>> {
    let mut out: BTreeMap<Cone, Vec<(Cone, LatticeVector)>> = BTreeMap::new();
    for c in f.cones.keys() {
        for i in 0..c.dim() {
            out.entry(c.without(i))
                .or_default()
                .push((c.clone(), c.rays[i].clone()));
        }
    }
    out
}

/// `r / c` where `c` is the index of `span(tau) + Z r` in the saturation of
/// `span(sigma)`; congruent modulo `span(tau)` to the primitive normal vector.
pub(crate) fn normal_vector(sigma: &Cone, tau: &Cone, r: &LatticeVector) -> (RatVec, BigRational) {
    let c = BigRational::new(sigma.lattice_index(), tau.lattice_index());
    let v = r
        .coords()
        .iter()
        .map(|x| BigRational::from_integer(x.clone()) / &c)
        .collect();
    (v, c)
}

/// Outcome of a balancing check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    pub balanced: bool,
    /// Codimension-one faces where balancing fails.
    pub violations: Vec<Cone>,
}

pub fn is_balanced(f: &WeightedFan) -> BalanceReport {
    let mut violations = Vec::new();
    if f.dim > 0 {
        for (tau, star) in ridges(f) {
            let mut sum = vec![BigRational::zero(); f.rank];
            for (sigma, r) in &star {
                let w = f.weight(sigma);
                let (v, _) = normal_vector(sigma, &tau, r);
                for (s, x) in sum.iter_mut().zip(&v) {
                    *s += &w * x;
                }
            }
            if tau.coefficients(&sum).is_none() {
                violations.push(tau);
            }
        }
    }
    BalanceReport {
        balanced: violations.is_empty(),
        violations,
    }
}

/// Star of the ray through `l`, pushed to the quotient lattice by
/// [`quotient_map`]. Refines at `l` first when it is not already a ray.
pub fn star_quotient(f: &WeightedFan, l: &LatticeVector) -> Result<WeightedFan> {
    if f.dim == 0 {
        return Err(Error::Unsupported("star of a zero-dimensional fan".into()));
    }
    let l = l.primitive()?;
    let base;
    let f = if f.rays().contains(&l) {
        f
    } else {
        base = subdivide_at_ray(f, &l)?;
        &base
    };
    let q = quotient_map(&l)?;
    let mut cones = Vec::new();
    for (c, w) in &f.cones {
        if !c.has_ray(&l) {
            continue;
        }
        let rays = c
            .rays
            .iter()
            .filter(|r| **r != l)
            .map(|r| q.apply(r).primitive())
            .collect::<Result<Vec<_>>>()?;
        cones.push((Cone::new(rays)?, w.clone()));
    }
    if cones.is_empty() {
        return Err(Error::RayNotInSupport(l.to_string()));
    }
    WeightedFan::new(f.rank - 1, f.dim - 1, cones)
}
