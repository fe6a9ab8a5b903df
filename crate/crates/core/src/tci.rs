//! Tropical complete intersections: iterated corner loci, boundary data and
//! the combinatorial invariants attached to them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cone;
use crate::error::{Error, Result};
use crate::fan::{
    complete_fan, is_balanced, refine, star_quotient, subdivide_at_ray, weil_divisor,
};
use crate::fan::{Cone, PLFunction, WeightedFan};
use crate::lattice::{quotient, LatticeVector, Quotient};
use crate::linalg::{self, IntVec};
use crate::polytope::{minkowski_sum, sublattice_mixed_volume, LatticePolytope, Polyhedron};

/// The sequence `F_0 = R^n, F_i = delta(m_i . F_{i-1})` together with the
/// functions `m_i` and an integer defect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalCI {
    rank: usize,
    functions: Vec<PLFunction>,
    fans: Vec<WeightedFan>,
    defect: BigInt,
    degenerate: bool,
}

impl TropicalCI {
    /// Computes the fans eagerly. An empty intermediate corner locus marks the
    /// intersection as degenerate; the remaining fans are then not computed.
    pub fn new(rank: usize, functions: Vec<PLFunction>, defect: BigInt) -> Result<Self> {
        if functions.len() > rank {
            return Err(Error::WrongCount {
                expected: rank,
                got: functions.len(),
            });
        }
        for m in &functions {
            if m.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: m.rank(),
                });
            }
        }
        let mut fans = vec![complete_fan(rank)];
        let mut degenerate = false;
        for (i, m) in functions.iter().enumerate() {
            let prev = fans.last().expect("nonempty");
            let carrier = if i == 0 && is_complete(m.carrier()) {
                m.carrier().clone()
            } else {
                refine(prev, m.carrier()).map_err(|e| Error::UndefinedFunction {
                    index: i,
                    detail: e.to_string(),
                })?
            };
            let next = weil_divisor(m, &carrier).map_err(|e| match e {
                Error::NotLinear(d) => Error::UndefinedFunction {
                    index: i,
                    detail: d,
                },
                other => other,
            })?;
            if next.is_empty() {
                degenerate = true;
                break;
            }
            fans.push(next);
        }
        Ok(TropicalCI {
            rank,
            functions,
            fans,
            defect,
            degenerate,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Codimension `k`.
    pub fn k(&self) -> usize {
        self.functions.len()
    }

    pub fn functions(&self) -> &[PLFunction] {
        &self.functions
    }

    /// `F_0, ..., F_j`, where `j = k` unless the intersection is degenerate.
    pub fn fans(&self) -> &[WeightedFan] {
        &self.fans
    }

    pub fn defect(&self) -> &BigInt {
        &self.defect
    }

    pub fn with_defect(mut self, defect: BigInt) -> Self {
        self.defect = defect;
        self
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// `F_k`; the empty cycle for a degenerate intersection.
    pub fn tropical_fan(&self) -> WeightedFan {
        if self.degenerate {
            return WeightedFan::empty(self.rank, self.rank - self.k());
        }
        self.fans.last().expect("F_0").clone()
    }
}

/// Unit-weight balanced fans of full dimension cover `R^n`, so they can stand
/// in for `F_0`.
pub(crate) fn is_complete(f: &WeightedFan) -> bool {
    f.dim() == f.rank()
        && !f.is_empty()
        && f.cones().values().all(|w| w.is_one())
        && is_balanced(f).balanced
}

/// A complete simplicial unit-weight fan refining the normal fans of all `ps`:
/// the pulling triangulation of the normal fan of `[0,1]^n + sum ps`.
pub fn normal_fan(ps: &[LatticePolytope], n: usize) -> Result<WeightedFan> {
    if n == 0 {
        return Ok(complete_fan(0));
    }
    let bounds = vec![(0, 1); n];
    let mut q = LatticePolytope::cuboid(&bounds);
    for p in ps {
        if p.rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: p.rank(),
            });
        }
        if p.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        q = minkowski_sum(&q, p)?;
        q = LatticePolytope::new(n, q.vertices())?;
    }
    let facets = q.facets();
    let mut cones = Vec::new();
    for v in q.vertices() {
        let rays: Vec<IntVec> = facets
            .iter()
            .filter(|(l, c)| &l.dot(&v) == c)
            .map(|(l, _)| l.coords().to_vec())
            .collect();
        for s in cone::triangulate(n, &rays) {
            let gens: Vec<LatticeVector> = s
                .iter()
                .map(|&i| LatticeVector::new(rays[i].clone()))
                .collect();
            cones.push((Cone::new(gens)?, BigRational::one()));
        }
    }
    WeightedFan::new(n, n, cones)
}

/// The intersection with `m_i` the support function of `ps[i]`.
pub fn tci_from_polytopes(ps: &[LatticePolytope], n: usize) -> Result<TropicalCI> {
    let carrier = normal_fan(ps, n)?;
    let functions = ps
        .iter()
        .map(|p| PLFunction::support_function(p, carrier.clone()))
        .collect::<Result<Vec<_>>>()?;
    TropicalCI::new(n, functions, BigInt::zero())
}

/// A pair `(l, m)` of boundary data: the equation has order `m` along the
/// divisor with covector `l`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoundaryPair {
    pub l: LatticeVector,
    pub m: BigInt,
}

impl fmt::Display for BoundaryPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.l, self.m)
    }
}

/// Boundary data of `k` equations in rank `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryData {
    pub rank: usize,
    pub equations: Vec<Vec<BoundaryPair>>,
}

impl BoundaryData {
    pub fn new(rank: usize, equations: Vec<Vec<BoundaryPair>>) -> Result<Self> {
        for p in equations.iter().flatten() {
            if p.l.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: p.l.rank(),
                });
            }
            if p.l.is_zero() {
                return Err(Error::ZeroVector);
            }
        }
        Ok(BoundaryData { rank, equations })
    }

    /// Support values of each polytope on the rays of their common normal fan.
    pub fn from_polytopes(ps: &[LatticePolytope], n: usize) -> Result<Self> {
        let rays = normal_fan(ps, n)?.rays();
        let equations = ps
            .iter()
            .map(|p| {
                rays.iter()
                    .map(|l| {
                        Ok(BoundaryPair {
                            l: l.clone(),
                            m: p.support_value(l)?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        BoundaryData::new(n, equations)
    }

    pub fn k(&self) -> usize {
        self.equations.len()
    }
}

/// `N_i = {x : l(x) <= m for (l, m) in equation i}`.
pub fn newton_polyhedra(b: &BoundaryData) -> Vec<Polyhedron> {
    b.equations
        .iter()
        .map(|eq| {
            let ineqs = eq
                .iter()
                .map(|p| (p.l.clone(), BigRational::from_integer(p.m.clone())))
                .collect();
            Polyhedron::new(b.rank, ineqs).expect("ranks checked")
        })
        .collect()
}

/// Result of the Newtonian test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonianReport {
    pub newtonian: bool,
    /// `(i, a, b)`: pairs of equation `i` on the same ray with
    /// non-proportional orders.
    pub violations: Vec<(usize, BoundaryPair, BoundaryPair)>,
    /// Per equation, the Newton datum `m / lattice_length(l)` on each
    /// primitive ray. Empty unless the data is Newtonian.
    pub newton_data: Vec<BTreeMap<LatticeVector, BigRational>>,
}

pub fn is_newtonian(b: &BoundaryData) -> NewtonianReport {
    let mut violations = Vec::new();
    let mut newton_data = Vec::new();
    for (i, eq) in b.equations.iter().enumerate() {
        let mut by_ray: BTreeMap<LatticeVector, Vec<&BoundaryPair>> = BTreeMap::new();
        for p in eq {
            by_ray
                .entry(p.l.primitive().expect("nonzero"))
                .or_default()
                .push(p);
        }
        let mut data = BTreeMap::new();
        for (ray, pairs) in by_ray {
            for (x, a) in pairs.iter().enumerate() {
                for c in &pairs[x + 1..] {
                    if a.l.scale(&c.m) != c.l.scale(&a.m) {
                        violations.push((i, (*a).clone(), (*c).clone()));
                    }
                }
            }
            let p = pairs[0];
            data.insert(ray, BigRational::new(p.m.clone(), p.l.lattice_length()));
        }
        newton_data.push(data);
    }
    let newtonian = violations.is_empty();
    if !newtonian {
        newton_data.clear();
    }
    NewtonianReport {
        newtonian,
        violations,
        newton_data,
    }
}

/// The claim of the connectivity theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    /// Full-dimensionality of each Newton polyhedron.
    pub full_dimensional: Vec<bool>,
    pub holds: bool,
    /// Claimed `beta_j = C(n, j)` for `j < n - k`, when the hypothesis holds.
    pub betti: Option<Vec<BigInt>>,
    /// Claimed connectedness (positive dimension), when the hypothesis holds.
    pub connected: Option<bool>,
}

pub fn full_dim_connectivity(b: &BoundaryData) -> ConnectivityReport {
    let full_dimensional: Vec<bool> = newton_polyhedra(b)
        .iter()
        .map(|p| p.is_full_dimensional())
        .collect();
    let holds = full_dimensional.iter().all(|&x| x);
    let n = b.rank;
    let dim = n.saturating_sub(b.k());
    let (betti, connected) = if holds {
        (
            Some((0..dim).map(|j| linalg::binomial(n, j)).collect()),
            Some(dim >= 1),
        )
    } else {
        (None, None)
    };
    ConnectivityReport {
        full_dimensional,
        holds,
        betti,
        connected,
    }
}

/// The function induced by `m` on the star of the primitive ray `l` in the
/// quotient, after subtracting `m(l) u` so that it vanishes at `l`.
pub fn restrict_function(m: &PLFunction, l: &LatticeVector, q: &Quotient) -> Result<PLFunction> {
    let carrier = m.carrier();
    let x = linalg::to_rat(l.coords());
    if !carrier.cones().keys().any(|c| c.contains(&x)) {
        return Err(Error::RayNotInSupport(l.to_string()));
    }
    let m = if carrier.rays().contains(l) {
        m.clone()
    } else {
        m.rebase(subdivide_at_ray(carrier, l)?)?
    };
    let ml = m.eval(l)?;
    let star = star_quotient(m.carrier(), l)?;
    let mut values = BTreeMap::new();
    for c in m.carrier().cones().keys().filter(|c| c.has_ray(l)) {
        for r in c.rays().iter().filter(|r| *r != l) {
            let image = q.map.apply(r);
            let len = image.lattice_length();
            let p = image.primitive()?;
            if values.contains_key(&p) {
                continue;
            }
            let v = (&m.values()[r] - &ml * BigRational::from_integer(q.unit.dot(r)))
                / BigRational::from_integer(len);
            values.insert(p, v);
        }
    }
    PLFunction::new(star, values)
}

/// The face `P^l` translated into `l^perp` and written in the dual basis of
/// the quotient map.
pub fn restrict_polytope(
    p: &LatticePolytope,
    l: &LatticeVector,
    q: &Quotient,
) -> Result<LatticePolytope> {
    let face = p.support_face(l)?;
    let h = p.support_value(l)?;
    let shift = q.unit.scale(&-h);
    let pts = face
        .vertices()
        .iter()
        .map(|v| {
            q.map
                .dual_coordinates(&v.add(&shift))
                .ok_or_else(|| Error::Internal(format!("{v} does not descend to the quotient")))
        })
        .collect::<Result<Vec<_>>>()?;
    LatticePolytope::new(q.map.target_rank(), pts)
}

/// The intersection induced on the quotient by `l`, with each `m_i`
/// normalized to vanish at `l`. The defect of the result is zero.
pub fn restrict(t: &TropicalCI, l: &LatticeVector) -> Result<TropicalCI> {
    if t.rank == 0 {
        return Err(Error::Unsupported("restriction in rank zero".into()));
    }
    let q = quotient(l)?;
    let k = t.k();
    if k > 0 {
        if t.degenerate {
            return Err(Error::Degenerate);
        }
        let x = linalg::to_rat(l.coords());
        if !t.fans[k - 1].cones().keys().any(|c| c.contains(&x)) {
            return Err(Error::RayNotInSupport(l.to_string()));
        }
    }
    let functions = t
        .functions
        .iter()
        .map(|m| restrict_function(m, l, &q))
        .collect::<Result<Vec<_>>>()?;
    TropicalCI::new(t.rank - 1, functions, BigInt::zero())
}

/// Multiplicity predicted at `l` by the support faces of the tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceWeight {
    pub weight: BigInt,
    /// False when the faces do not fit a common `k`-dimensional subspace.
    pub defined: bool,
}

pub fn nci_face_weight(ps: &[LatticePolytope], l: &LatticeVector) -> Result<FaceWeight> {
    if l.is_zero() {
        return Err(Error::ZeroVector);
    }
    let faces = ps
        .iter()
        .map(|p| p.support_face(l))
        .collect::<Result<Vec<_>>>()?;
    Ok(match sublattice_mixed_volume(&faces)? {
        Some(weight) => FaceWeight {
            weight,
            defined: true,
        },
        None => FaceWeight {
            weight: BigInt::zero(),
            defined: false,
        },
    })
}

/// Number of irreducible components predicted for a generic complete
/// intersection with the given Newton polytopes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCount {
    pub count: BigInt,
    /// Indices of the subtuple whose mixed volume was used.
    pub subtuple: Vec<usize>,
    /// Other subtuples of the same size with a defined mixed volume that
    /// differs from `count`.
    pub disagreements: Vec<(Vec<usize>, BigInt)>,
}

/// Scans subtuples by decreasing size, then lexicographically, and returns
/// the sublattice mixed volume of the first one that fits a subspace of its
/// own size. The full tuple is included in the scan; the empty tuple gives 1.
pub fn component_count(ps: &[LatticePolytope], n: usize) -> Result<ComponentCount> {
    let k = ps.len();
    if k > n {
        return Err(Error::WrongCount {
            expected: n,
            got: k,
        });
    }
    for p in ps {
        if p.rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: p.rank(),
            });
        }
    }
    for q in (0..=k).rev() {
        let mut found: Option<(Vec<usize>, BigInt)> = None;
        let mut disagreements = Vec::new();
        for s in linalg::combinations(k, q) {
            let sub: Vec<LatticePolytope> = s.iter().map(|&i| ps[i].clone()).collect();
            if let Some(v) = sublattice_mixed_volume(&sub)? {
                match &found {
                    None => found = Some((s, v)),
                    Some((_, w)) if *w != v => disagreements.push((s, v)),
                    Some(_) => {}
                }
            }
        }
        if let Some((subtuple, count)) = found {
            return Ok(ComponentCount {
                count,
                subtuple,
                disagreements,
            });
        }
    }
    unreachable!("the empty subtuple always fits")
}

/// Clause of the Calabi-Yau criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CyClause {
    /// `sum m_i` agrees with the support function of `P` on `F_{k-1}`.
    Extends,
    /// The support function is linear on every maximal cone of `F_k`.
    Linear,
    /// Hilbert basis elements of every maximal cone of `F_k` have value 1.
    HilbertBasis,
}

impl fmt::Display for CyClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CyClause::Extends => "a",
            CyClause::Linear => "b",
            CyClause::HilbertBasis => "c",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyReport {
    pub passed: bool,
    pub failed: Option<CyClause>,
    pub detail: String,
}

impl CyReport {
    fn fail(clause: CyClause, detail: String) -> Self {
        CyReport {
            passed: false,
            failed: Some(clause),
            detail,
        }
    }
}

/// Checks the combinatorial Calabi-Yau criterion in rank at most 3.
pub fn cy_check(t: &TropicalCI, p: &LatticePolytope) -> Result<CyReport> {
    let n = t.rank;
    if p.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: p.rank(),
        });
    }
    if n > 3 {
        return Err(Error::Unsupported("Calabi-Yau check above rank 3".into()));
    }
    if p.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    let k = t.k();
    if k == 0 || t.degenerate {
        return Err(Error::Degenerate);
    }
    let mut g = refine(&t.fans[k - 1], &normal_fan(std::slice::from_ref(p), n)?)?;
    for m in &t.functions {
        g = refine(&g, m.carrier())?;
    }
    for r in g.rays() {
        let mut sum = BigRational::zero();
        for m in &t.functions {
            sum += m.eval(&r)?;
        }
        let h = BigRational::from_integer(p.support_value(&r)?);
        if sum != h {
            return Ok(CyReport::fail(
                CyClause::Extends,
                format!("sum of functions is {sum} at {r}, support value {h}"),
            ));
        }
    }
    let fk = t.tropical_fan();
    for sigma in fk.cones().keys() {
        let common = sigma.rays().iter().try_fold(p.vertices(), |vs, r| {
            let h = p.support_value(r)?;
            Ok::<_, Error>(vs.into_iter().filter(|v| v.dot(r) == h).collect::<Vec<_>>())
        })?;
        if common.is_empty() {
            return Ok(CyReport::fail(
                CyClause::Linear,
                format!("support function is not linear on {sigma}"),
            ));
        }
    }
    for sigma in fk.cones().keys() {
        for h in hilbert_basis(sigma, n) {
            let v = p.support_value(&h)?;
            if !v.is_one() {
                return Ok(CyReport::fail(
                    CyClause::HilbertBasis,
                    format!("Hilbert basis element {h} of {sigma} has value {v}"),
                ));
            }
        }
    }
    Ok(CyReport {
        passed: true,
        failed: None,
        detail: String::new(),
    })
}

/// Hilbert basis of the semigroup of lattice points of a simplicial cone:
/// the irreducible elements among the rays and the nonzero points of the
/// half-open fundamental parallelepiped.
pub fn hilbert_basis(sigma: &Cone, n: usize) -> Vec<LatticeVector> {
    let rays = sigma.rays();
    let mut lo = vec![BigInt::zero(); n];
    let mut hi = vec![BigInt::zero(); n];
    for r in rays {
        for (j, x) in r.coords().iter().enumerate() {
            if x.is_negative() {
                lo[j] += x;
            } else {
                hi[j] += x;
            }
        }
    }
    let mut candidates: Vec<(LatticeVector, Vec<BigRational>)> = rays
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut c = vec![BigRational::zero(); rays.len()];
            c[i] = BigRational::one();
            (r.clone(), c)
        })
        .collect();
    let mut point = lo.clone();
    loop {
        let x = LatticeVector::new(point.clone());
        if !x.is_zero() {
            if let Some(c) = sigma.coefficients(&linalg::to_rat(x.coords())) {
                if c.iter()
                    .all(|v| !v.is_negative() && *v < BigRational::one())
                {
                    candidates.push((x, c));
                }
            }
        }
        // odometer over the bounding box
        let mut j = 0;
        loop {
            if j == n {
                break;
            }
            if point[j] < hi[j] {
                point[j] += 1;
                break;
            }
            point[j] = lo[j].clone();
            j += 1;
        }
        if j == n {
            break;
        }
    }
    let irreducible = |i: usize| {
        let (_, ci) = &candidates[i];
        !candidates
            .iter()
            .enumerate()
            .any(|(j, (_, cj))| j != i && ci.iter().zip(cj).all(|(a, b)| a >= b))
    };
    let mut out: Vec<LatticeVector> = (0..candidates.len())
        .filter(|&i| irreducible(i))
        .map(|i| candidates[i].0.clone())
        .collect();
    out.sort();
    out
}
