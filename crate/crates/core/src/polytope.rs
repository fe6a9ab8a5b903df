//! Lattice polytopes, volumes, mixed volumes and H-described polyhedra.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cone;
use crate::error::{Error, Result};
use crate::lattice::{coordinates_in, hermite_basis, LatticeVector, RationalVector};
use crate::linalg::{self, IntVec};

#[derive(Clone, Debug)]
struct Hull {
    vertices: Vec<LatticeVector>,
    /// `(l, c)` with `<l, x> <= c` tight on a facet, `l` primitive.
    facets: Vec<(LatticeVector, BigInt)>,
    /// `(l, c)` with `<l, x> = c` on the whole polytope.
    equations: Vec<(LatticeVector, BigInt)>,
    dim: usize,
}

#[derive(Clone, Debug)]
enum Repr {
    Empty,
    Points {
        points: Vec<LatticeVector>,
        hull: OnceLock<Hull>,
    },
}

/// Convex hull of a finite set of lattice points, or the empty polytope.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    rank: usize,
    repr: Repr,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
            && match (&self.repr, &other.repr) {
                (Repr::Empty, Repr::Empty) => true,
                (Repr::Points { .. }, Repr::Points { .. }) => self.vertices() == other.vertices(),
                _ => false,
            }
    }
}

impl Eq for LatticePolytope {}

impl fmt::Display for LatticePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Empty => write!(f, "empty"),
            Repr::Points { .. } => {
                write!(f, "conv{{")?;
                for (i, v) in self.vertices().iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

impl LatticePolytope {
    pub fn new(rank: usize, points: Vec<LatticeVector>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        for p in &points {
            if p.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: p.rank(),
                });
            }
        }
        let mut points = points;
        points.sort();
        points.dedup();
        Ok(LatticePolytope {
            rank,
            repr: Repr::Points {
                points,
                hull: OnceLock::new(),
            },
        })
    }

    pub fn from_i64s(rank: usize, points: &[&[i64]]) -> Result<Self> {
        Self::new(
            rank,
            points.iter().map(|p| LatticeVector::from_i64s(p)).collect(),
        )
    }

    pub fn empty(rank: usize) -> Self {
        LatticePolytope {
            rank,
            repr: Repr::Empty,
        }
    }

    /// The box `[lo_1, hi_1] x ... x [lo_n, hi_n]`.
    pub fn cuboid(bounds: &[(i64, i64)]) -> Self {
        let mut pts: Vec<Vec<i64>> = vec![vec![]];
        for &(lo, hi) in bounds {
            pts = pts
                .into_iter()
                .flat_map(|p| {
                    [lo, hi].into_iter().map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        let pts = pts.iter().map(|p| LatticeVector::from_i64s(p)).collect();
        Self::new(bounds.len(), pts).expect("nonempty box")
    }

    pub fn point(p: LatticeVector) -> Self {
        let rank = p.rank();
        Self::new(rank, vec![p]).expect("one point")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_empty(&self) -> bool {
        matches!(self.repr, Repr::Empty)
    }

    /// Generating points; empty for the empty polytope.
    pub fn points(&self) -> &[LatticeVector] {
        match &self.repr {
            Repr::Empty => &[],
            Repr::Points { points, .. } => points,
        }
    }

    fn hull(&self) -> Option<&Hull> {
        match &self.repr {
            Repr::Empty => None,
            Repr::Points { points, hull } => {
                Some(hull.get_or_init(|| compute_hull(self.rank, points)))
            }
        }
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> Vec<LatticeVector> {
        self.hull().map(|h| h.vertices.clone()).unwrap_or_default()
    }

    /// Dimension of the affine hull, `None` for the empty polytope.
    pub fn dim(&self) -> Option<usize> {
        self.hull().map(|h| h.dim)
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == Some(self.rank)
    }

    /// Facet inequalities `<l, x> <= c` with primitive outer normals `l`.
    /// For polytopes that are not full-dimensional the normals are taken
    /// modulo the affine equations.
    pub fn facets(&self) -> Vec<(LatticeVector, BigInt)> {
        self.hull().map(|h| h.facets.clone()).unwrap_or_default()
    }

    /// Affine equations `<l, x> = c` cutting out the affine hull.
    pub fn equations(&self) -> Vec<(LatticeVector, BigInt)> {
        self.hull().map(|h| h.equations.clone()).unwrap_or_default()
    }

    pub fn support_value(&self, l: &LatticeVector) -> Result<BigInt> {
        self.check_rank(l.rank())?;
        self.points()
            .iter()
            .map(|p| p.dot(l))
            .max()
            .ok_or(Error::EmptyPolytope)
    }

    /// Points of the generating set on which `<gamma, .>` is maximal.
    pub fn support_face(&self, gamma: &LatticeVector) -> Result<LatticePolytope> {
        let h = self.support_value(gamma)?;
        let pts = self
            .points()
            .iter()
            .filter(|p| p.dot(gamma) == h)
            .cloned()
            .collect();
        LatticePolytope::new(self.rank, pts)
    }

    pub fn translate(&self, v: &LatticeVector) -> Result<LatticePolytope> {
        self.check_rank(v.rank())?;
        if self.is_empty() {
            return Ok(self.clone());
        }
        LatticePolytope::new(
            self.rank,
            self.vertices().iter().map(|p| p.add(v)).collect(),
        )
    }

    /// Image under an integer matrix with `target` rows.
    pub fn map(
        &self,
        f: impl Fn(&LatticeVector) -> LatticeVector,
        target: usize,
    ) -> Result<LatticePolytope> {
        if self.is_empty() {
            return Ok(LatticePolytope::empty(target));
        }
        LatticePolytope::new(target, self.vertices().iter().map(f).collect())
    }

    pub fn scale(&self, k: u32) -> LatticePolytope {
        if self.is_empty() {
            return self.clone();
        }
        let k = BigInt::from(k);
        LatticePolytope::new(
            self.rank,
            self.vertices().iter().map(|p| p.scale(&k)).collect(),
        )
        .expect("nonempty")
    }

    /// Tests membership of a lattice point.
    pub fn contains(&self, x: &LatticeVector) -> bool {
        let Some(h) = self.hull() else { return false };
        h.facets.iter().all(|(l, c)| &l.dot(x) <= c)
            && h.equations.iter().all(|(l, c)| &l.dot(x) == c)
    }

    fn check_rank(&self, got: usize) -> Result<()> {
        if got != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got,
            });
        }
        Ok(())
    }
}

fn homogenize(p: &LatticeVector) -> IntVec {
    let mut v = vec![BigInt::one()];
    v.extend(p.coords().iter().cloned());
    v
}

fn compute_hull(rank: usize, points: &[LatticeVector]) -> Hull {
    let gens: Vec<IntVec> = points.iter().map(homogenize).collect();
    let (normals, eqs) = cone::facets(rank + 1, &gens);
    // (c, a) with c + <a, x> >= 0  <=>  <-a, x> <= c
    let split = |v: &IntVec| {
        (
            LatticeVector::new(v[1..].iter().map(|x| -x).collect()),
            v[0].clone(),
        )
    };
    let facets: Vec<(LatticeVector, BigInt)> = normals.iter().map(split).collect();
    let equations: Vec<(LatticeVector, BigInt)> = eqs.iter().map(split).collect();
    let dim = rank - equations.len();
    let vertices = gens
        .iter()
        .zip(points)
        .filter(|(g, _)| {
            let mut tight: Vec<IntVec> = normals
                .iter()
                .filter(|a| linalg::dot(a, g).is_zero())
                .cloned()
                .collect();
            tight.extend(eqs.iter().cloned());
            linalg::rank(&tight) == rank
        })
        .map(|(_, p)| p.clone())
        .collect();
    Hull {
        vertices,
        facets,
        equations,
        dim,
    }
}

/// Minkowski sum of the vertex sets; empty if either argument is.
pub fn minkowski_sum(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    if p.rank != q.rank {
        return Err(Error::RankMismatch {
            expected: p.rank,
            got: q.rank,
        });
    }
    if p.is_empty() || q.is_empty() {
        return Ok(LatticePolytope::empty(p.rank));
    }
    let qv = q.vertices();
    let pts = p
        .vertices()
        .iter()
        .flat_map(|a| qv.iter().map(move |b| a.add(b)))
        .collect();
    LatticePolytope::new(p.rank, pts)
}

/// `n!` times the Euclidean volume; zero unless full-dimensional.
pub fn lattice_volume(p: &LatticePolytope) -> BigInt {
    if !p.is_full_dimensional() {
        return BigInt::zero();
    }
    let gens: Vec<IntVec> = p.vertices().iter().map(homogenize).collect();
    cone::triangulate(p.rank + 1, &gens)
        .iter()
        .map(|s| {
            let m: Vec<IntVec> = s.iter().map(|&i| gens[i].clone()).collect();
            linalg::det(&m).abs()
        })
        .sum()
}

pub fn euclidean_volume(p: &LatticePolytope) -> BigRational {
    BigRational::new(lattice_volume(p), linalg::factorial(p.rank))
}

/// Normalized mixed volume: equals the lattice volume on the diagonal.
pub fn mixed_volume(ps: &[LatticePolytope]) -> Result<BigInt> {
    let n = ps.first().map(|p| p.rank).unwrap_or(0);
    if ps.len() != n {
        return Err(Error::WrongCount {
            expected: n,
            got: ps.len(),
        });
    }
    for p in ps {
        if p.rank != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: p.rank,
            });
        }
        if p.is_empty() {
            return Err(Error::EmptyPolytope);
        }
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    // group equal arguments so repeated polytopes share subset sums
    let mut classes: Vec<LatticePolytope> = Vec::new();
    let mut class_of = Vec::with_capacity(n);
    for p in ps {
        match classes.iter().position(|c| c == p) {
            Some(i) => class_of.push(i),
            None => {
                class_of.push(classes.len());
                classes.push(p.clone());
            }
        }
    }
    let mut memo: HashMap<Vec<usize>, BigInt> = HashMap::new();
    let mut total = BigInt::zero();
    for mask in 1u32..(1 << n) {
        let mut mult = vec![0usize; classes.len()];
        for (i, &c) in class_of.iter().enumerate() {
            if mask & (1 << i) != 0 {
                mult[c] += 1;
            }
        }
        let vol = match memo.get(&mult) {
            Some(v) => v.clone(),
            None => {
                let mut sum = LatticePolytope::point(LatticeVector::zero(n));
                for (c, &m) in mult.iter().enumerate() {
                    if m > 0 {
                        sum = minkowski_sum(&sum, &classes[c].scale(m as u32))?;
                    }
                }
                let v = lattice_volume(&sum);
                memo.insert(mult, v.clone());
                v
            }
        };
        if (n - mask.count_ones() as usize).is_multiple_of(2) {
            total += vol;
        } else {
            total -= vol;
        }
    }
    let f = linalg::factorial(n);
    let (q, r) = total.div_rem(&f);
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "mixed volume numerator {total} not divisible by {f}"
        )));
    }
    Ok(q)
}

/// Mixed volume of `k` polytopes that can be translated into a common
/// `k`-dimensional subspace, measured in the saturated lattice of that
/// subspace. `None` when no such subspace exists.
pub fn sublattice_mixed_volume(ps: &[LatticePolytope]) -> Result<Option<BigInt>> {
    let k = ps.len();
    if k == 0 {
        return Ok(Some(BigInt::one()));
    }
    let n = ps[0].rank;
    let mut shifted: Vec<Vec<LatticeVector>> = Vec::with_capacity(k);
    for p in ps {
        if p.rank != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: p.rank,
            });
        }
        let vs = p.vertices();
        let Some(base) = vs.first().cloned() else {
            return Err(Error::EmptyPolytope);
        };
        shifted.push(vs.iter().map(|v| v.sub(&base)).collect());
    }
    let diffs: Vec<LatticeVector> = shifted.iter().flatten().cloned().collect();
    let rows: Vec<IntVec> = diffs.iter().map(|v| v.coords().to_vec()).collect();
    let d = linalg::rank(&rows);
    if d > k {
        return Ok(None);
    }
    if d < k {
        return Ok(Some(BigInt::zero()));
    }
    let basis = hermite_basis(n, &diffs);
    let mut local = Vec::with_capacity(k);
    for vs in &shifted {
        let mut pts = Vec::with_capacity(vs.len());
        for v in vs {
            let c = coordinates_in(&basis, v)
                .ok_or_else(|| Error::Internal("point outside its own span".into()))?;
            let ints: Option<Vec<BigInt>> = c
                .iter()
                .map(|x| x.is_integer().then(|| x.to_integer()))
                .collect();
            let ints = ints.ok_or_else(|| Error::Internal("basis is not saturated".into()))?;
            pts.push(LatticeVector::new(ints));
        }
        local.push(LatticePolytope::new(k, pts)?);
    }
    mixed_volume(&local).map(Some)
}

/// Feasibility status of a polyhedron.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyhedronStatus {
    Empty,
    Bounded,
    Unbounded,
}

impl fmt::Display for PolyhedronStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolyhedronStatus::Empty => "empty",
            PolyhedronStatus::Bounded => "bounded",
            PolyhedronStatus::Unbounded => "unbounded",
        })
    }
}

/// `{x : <l, x> <= c}` for a finite list of pairs `(l, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    rank: usize,
    inequalities: Vec<(LatticeVector, BigRational)>,
}

#[derive(Clone, Debug)]
struct Homogenized {
    /// Generators `(t, x)` of the cone over the polyhedron.
    rays: Vec<IntVec>,
    lineality: Vec<IntVec>,
}

impl Polyhedron {
    pub fn new(rank: usize, inequalities: Vec<(LatticeVector, BigRational)>) -> Result<Self> {
        for (l, _) in &inequalities {
            if l.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: l.rank(),
                });
            }
        }
        Ok(Polyhedron { rank, inequalities })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn inequalities(&self) -> &[(LatticeVector, BigRational)] {
        &self.inequalities
    }

    fn homogenized(&self) -> Homogenized {
        let n = self.rank;
        let mut rows: Vec<IntVec> = Vec::with_capacity(self.inequalities.len() + 1);
        for (l, c) in &self.inequalities {
            // c t - <l, x> >= 0, scaled by the denominator of c
            let d = c.denom();
            let mut row = vec![c.numer().clone()];
            row.extend(l.coords().iter().map(|x| -(x * d)));
            rows.push(row);
        }
        let mut t = vec![BigInt::zero(); n + 1];
        t[0] = BigInt::one();
        rows.push(t);
        let r = cone::extreme_rays(n + 1, &rows, &[]);
        Homogenized {
            rays: r.rays,
            lineality: r.lineality,
        }
    }

    pub fn status(&self) -> PolyhedronStatus {
        let h = self.homogenized();
        if !h.rays.iter().any(|r| r[0].is_positive()) {
            return PolyhedronStatus::Empty;
        }
        if h.lineality.is_empty() && h.rays.iter().all(|r| r[0].is_positive()) {
            PolyhedronStatus::Bounded
        } else {
            PolyhedronStatus::Unbounded
        }
    }

    pub fn is_empty(&self) -> bool {
        self.status() == PolyhedronStatus::Empty
    }

    /// True iff the polyhedron has an interior point.
    pub fn is_full_dimensional(&self) -> bool {
        let h = self.homogenized();
        if !h.rays.iter().any(|r| r[0].is_positive()) {
            return false;
        }
        let all: Vec<IntVec> = h.rays.iter().chain(&h.lineality).cloned().collect();
        linalg::rank(&all) == self.rank + 1
    }

    /// Vertices of a pointed polyhedron (for non-pointed ones, of its
    /// intersection with the orthogonal complement of the lineality space).
    pub fn vertices(&self) -> Vec<RationalVector> {
        let h = self.homogenized();
        h.rays
            .iter()
            .filter(|r| r[0].is_positive())
            .map(|r| {
                RationalVector::new(
                    r[1..]
                        .iter()
                        .map(|x| BigRational::new(x.clone(), r[0].clone()))
                        .collect(),
                )
            })
            .collect()
    }

    /// The polyhedron as a lattice polytope, when bounded with lattice vertices.
    pub fn to_lattice_polytope(&self) -> Result<Option<LatticePolytope>> {
        match self.status() {
            PolyhedronStatus::Empty => Ok(Some(LatticePolytope::empty(self.rank))),
            PolyhedronStatus::Unbounded => Ok(None),
            PolyhedronStatus::Bounded => {
                let mut pts = Vec::new();
                for v in self.vertices() {
                    if !v.coords().iter().all(|x| x.is_integer()) {
                        return Ok(None);
                    }
                    pts.push(LatticeVector::new(
                        v.coords().iter().map(|x| x.to_integer()).collect(),
                    ));
                }
                LatticePolytope::new(self.rank, pts).map(Some)
            }
        }
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        self.inequalities
            .iter()
            .all(|(l, c)| &x.dot_lattice(l) <= c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector::from_i64s(v)
    }

    fn poly(pts: &[&[i64]]) -> LatticePolytope {
        let n = pts[0].len();
        LatticePolytope::from_i64s(n, pts).unwrap()
    }

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(int(p), int(q))
    }

    #[test]
    fn support_values() {
        let t = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(t.support_value(&lv(&[1, 0])).unwrap(), int(1));
        let sq = LatticePolytope::cuboid(&[(-1, 1), (-1, 1)]);
        assert_eq!(sq.support_value(&lv(&[0, -1])).unwrap(), int(1));
        let pt = poly(&[&[3, 5]]);
        assert_eq!(pt.support_value(&lv(&[2, -1])).unwrap(), int(1));
        assert_eq!(
            LatticePolytope::empty(2).support_value(&lv(&[1, 0])),
            Err(Error::EmptyPolytope)
        );
    }

    #[test]
    fn support_faces() {
        let a = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(
            a.support_face(&lv(&[1, 0])).unwrap().points(),
            &[lv(&[1, 0])]
        );
        let sq = LatticePolytope::cuboid(&[(0, 1), (0, 1)]);
        assert_eq!(
            sq.support_face(&lv(&[0, 1])).unwrap().points(),
            &[lv(&[0, 1]), lv(&[1, 1])]
        );
        assert_eq!(a.support_face(&lv(&[0, 0])).unwrap(), a);
    }

    #[test]
    fn minkowski_examples() {
        let sq = LatticePolytope::cuboid(&[(0, 1), (0, 1)]);
        assert_eq!(
            minkowski_sum(&sq, &sq).unwrap(),
            LatticePolytope::cuboid(&[(0, 2), (0, 2)])
        );
        let p = poly(&[&[0, 0], &[1, 0]]);
        let q = poly(&[&[0, 0], &[0, 1]]);
        assert_eq!(minkowski_sum(&p, &q).unwrap(), sq);
        let shifted = minkowski_sum(&sq, &poly(&[&[2, -1]])).unwrap();
        assert_eq!(shifted, sq.translate(&lv(&[2, -1])).unwrap());
    }

    #[test]
    fn hull_drops_interior_points() {
        let p = poly(&[&[0, 0], &[2, 0], &[0, 2], &[1, 1], &[1, 0]]);
        assert_eq!(p.vertices(), vec![lv(&[0, 0]), lv(&[0, 2]), lv(&[2, 0])]);
        assert_eq!(p.facets().len(), 3);
    }

    #[test]
    fn volumes() {
        let sq = LatticePolytope::cuboid(&[(0, 1), (0, 1)]);
        assert_eq!(euclidean_volume(&sq), rat(1, 1));
        assert_eq!(lattice_volume(&sq), int(2));
        let t = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(euclidean_volume(&t), rat(1, 2));
        assert_eq!(lattice_volume(&t), int(1));
        assert_eq!(euclidean_volume(&poly(&[&[0, 0], &[3, 1]])), rat(0, 1));
        assert_eq!(
            lattice_volume(&LatticePolytope::cuboid(&[(-1, 1), (-1, 1)])),
            int(8)
        );
        assert_eq!(
            lattice_volume(&LatticePolytope::cuboid(&[(0, 1), (0, 1), (0, 1)])),
            int(6)
        );
    }

    #[test]
    fn mixed_volume_examples() {
        let t = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(mixed_volume(&[t.clone(), t]).unwrap(), int(1));
        let sq = LatticePolytope::cuboid(&[(0, 1), (0, 1)]);
        assert_eq!(mixed_volume(&[sq.clone(), sq.clone()]).unwrap(), int(2));
        let big = LatticePolytope::cuboid(&[(-1, 1), (-1, 1)]);
        let seg = LatticePolytope::cuboid(&[(0, 0), (-1, 1)]);
        assert_eq!(mixed_volume(&[big, seg]).unwrap(), int(4));
        assert_eq!(
            mixed_volume(std::slice::from_ref(&sq)),
            Err(Error::WrongCount {
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            mixed_volume(&[sq, LatticePolytope::empty(2)]),
            Err(Error::EmptyPolytope)
        );
    }

    #[test]
    fn sublattice_examples() {
        let seg = poly(&[&[0, 0], &[2, 0]]);
        assert_eq!(sublattice_mixed_volume(&[seg]).unwrap(), Some(int(2)));
        let a1 = poly(&[&[0, 0, 0], &[1, 0, 0]]);
        let a2 = poly(&[&[0, 0, 0], &[0, 1, 0]]);
        assert_eq!(sublattice_mixed_volume(&[a1, a2]).unwrap(), Some(int(1)));
        let sq = LatticePolytope::cuboid(&[(0, 1), (0, 1)]);
        assert_eq!(sublattice_mixed_volume(&[sq]).unwrap(), None);
        assert_eq!(
            sublattice_mixed_volume(&[poly(&[&[1, 1]])]).unwrap(),
            Some(int(0))
        );
    }

    #[test]
    fn polyhedron_status_examples() {
        let p = Polyhedron::new(
            2,
            vec![(lv(&[0, -1]), rat(-1, 1)), (lv(&[0, 1]), rat(-1, 1))],
        )
        .unwrap();
        assert_eq!(p.status(), PolyhedronStatus::Empty);
        assert!(!p.is_full_dimensional());

        let h = Polyhedron::new(2, vec![(lv(&[1, 0]), rat(3, 1))]).unwrap();
        assert_eq!(h.status(), PolyhedronStatus::Unbounded);
        assert!(h.is_full_dimensional());

        let sq = Polyhedron::new(
            2,
            vec![
                (lv(&[1, 0]), rat(1, 1)),
                (lv(&[-1, 0]), rat(0, 1)),
                (lv(&[0, 1]), rat(1, 1)),
                (lv(&[0, -1]), rat(0, 1)),
            ],
        )
        .unwrap();
        assert_eq!(sq.status(), PolyhedronStatus::Bounded);
        assert!(sq.is_full_dimensional());
        assert_eq!(
            sq.to_lattice_polytope().unwrap(),
            Some(LatticePolytope::cuboid(&[(0, 1), (0, 1)]))
        );

        let seg = Polyhedron::new(1, vec![(lv(&[1]), rat(1, 2)), (lv(&[-1]), rat(-1, 2))]).unwrap();
        assert_eq!(seg.status(), PolyhedronStatus::Bounded);
        assert!(!seg.is_full_dimensional());
    }

    #[test]
    fn rank_zero_point() {
        let p = LatticePolytope::point(LatticeVector::zero(0));
        assert_eq!(lattice_volume(&p), int(1));
        assert_eq!(mixed_volume(&[]).unwrap(), int(1));
    }
}
