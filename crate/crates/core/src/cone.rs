//! Exact double description for rational polyhedral cones.
//!
//! A cone is given either by generators (V-form) or by homogeneous linear
//! inequalities and equations (H-form). [`extreme_rays`] converts H to V with
//! the incremental double description method; [`facets`] uses the same routine
//! on the dual cone. [`triangulate`] builds the pulling triangulation with
//! respect to the lexicographic order of the generators, which restricts to
//! the pulling triangulation of every face. Two cones sharing a face are
//! therefore triangulated compatibly.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::linalg::{self, IntVec};

#[derive(Clone, Debug, PartialEq, Eq)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(len: usize) -> Self {
        BitSet(vec![0; len.div_ceil(64).max(1)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn intersect(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_superset(&self, other: &BitSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
}

/// Extreme rays plus a lattice basis of the lineality space.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConeRays {
    /// Primitive extreme rays of the cone intersected with the orthogonal
    /// complement of the lineality space, sorted lexicographically.
    pub rays: Vec<Vec<BigInt>>,
    pub lineality: Vec<Vec<BigInt>>,
}

/// Converts `{x : <a, x> >= 0 for a in ineqs, <b, x> = 0 for b in eqs}` to
/// generators.
pub fn extreme_rays(dim: usize, ineqs: &[Vec<BigInt>], eqs: &[Vec<BigInt>]) -> ConeRays {
    if dim == 0 {
        return ConeRays::default();
    }
    let all: Vec<IntVec> = ineqs.iter().chain(eqs).cloned().collect();
    let lineality = linalg::integer_kernel(&all, dim);

    // equations first so that the initial simplicial cone absorbs them
    let mut rows: Vec<IntVec> = Vec::new();
    for b in eqs.iter().chain(lineality.iter()) {
        if linalg::is_zero_vec(b) {
            continue;
        }
        rows.push(b.clone());
        rows.push(b.iter().map(|x| -x).collect());
    }
    rows.extend(ineqs.iter().filter(|a| !linalg::is_zero_vec(a)).cloned());

    // initial independent rows
    let mut initial: Vec<usize> = Vec::new();
    let mut basis: Vec<IntVec> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        basis.push(r.clone());
        if linalg::rank(&basis) == basis.len() {
            initial.push(i);
            if initial.len() == dim {
                break;
            }
        } else {
            basis.pop();
        }
    }
    if initial.len() < dim {
        // only possible when every row is zero and there is no lineality,
        // which cannot happen; guard anyway
        return ConeRays {
            rays: Vec::new(),
            lineality,
        };
    }
    let inv = inverse(&basis).expect("independent rows");
    let nrows = rows.len();
    let mut rays: Vec<IntVec> = Vec::with_capacity(dim);
    let mut zeros: Vec<BitSet> = Vec::with_capacity(dim);
    for j in 0..dim {
        let col: Vec<BigRational> = inv.iter().map(|row| row[j].clone()).collect();
        rays.push(linalg::rat_to_primitive(&col));
        let mut z = BitSet::new(nrows);
        for (k, &i) in initial.iter().enumerate() {
            if k != j {
                z.insert(i);
            }
        }
        zeros.push(z);
    }

    let in_initial: Vec<bool> = {
        let mut v = vec![false; nrows];
        for &i in &initial {
            v[i] = true;
        }
        v
    };
    for (ri, row) in rows.iter().enumerate() {
        if in_initial[ri] {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| linalg::dot(row, r)).collect();
        let mut new_rays = Vec::new();
        let mut new_zeros = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (k, v) in vals.iter().enumerate() {
            if v.is_positive() {
                pos.push(k);
                new_rays.push(rays[k].clone());
                new_zeros.push(zeros[k].clone());
            } else if v.is_zero() {
                let mut z = zeros[k].clone();
                z.insert(ri);
                new_rays.push(rays[k].clone());
                new_zeros.push(z);
            } else {
                neg.push(k);
            }
        }
        if neg.is_empty() {
            rays = new_rays;
            zeros = new_zeros;
            continue;
        }
        for &p in &pos {
            for &q in &neg {
                let common = zeros[p].intersect(&zeros[q]);
                if common.count() + 2 < dim {
                    continue;
                }
                let adjacent =
                    (0..rays.len()).all(|t| t == p || t == q || !zeros[t].is_superset(&common));
                if !adjacent {
                    continue;
                }
                let combo: IntVec = rays[q]
                    .iter()
                    .zip(&rays[p])
                    .map(|(a, b)| &vals[p] * a - &vals[q] * b)
                    .collect();
                let mut z = common;
                z.insert(ri);
                new_rays.push(linalg::primitive_vec(&combo));
                new_zeros.push(z);
            }
        }
        rays = new_rays;
        zeros = new_zeros;
    }
    rays.sort();
    rays.dedup();
    ConeRays { rays, lineality }
}

fn inverse(m: &[IntVec]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = linalg::to_rat(row);
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::from_integer(1.into())
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for v in a[c].iter_mut() {
            *v *= &inv;
        }
        let pr = a[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pr) {
                    *v -= &f * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// H-description of `cone(generators)`: facet normals (inward, inside the
/// linear span, primitive) and a basis of the equations of the span.
pub fn facets(dim: usize, generators: &[Vec<BigInt>]) -> (Vec<IntVec>, Vec<IntVec>) {
    let r = extreme_rays(dim, generators, &[]);
    (r.rays, r.lineality)
}

/// Pulling triangulation of a pointed cone.
///
/// `rays` must be the extreme rays of the cone. Returns index sets of
/// simplicial cones whose union is the cone.
pub fn triangulate(dim: usize, rays: &[Vec<BigInt>]) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..rays.len()).collect();
    order.sort_by(|&a, &b| rays[a].cmp(&rays[b]));
    let mut memo = HashMap::new();
    let mut out = pull(dim, rays, order, &mut memo);
    for s in out.iter_mut() {
        s.sort_unstable();
    }
    out
}

type Memo = HashMap<Vec<usize>, Vec<Vec<usize>>>;

fn pull(dim: usize, rays: &[Vec<BigInt>], idx: Vec<usize>, memo: &mut Memo) -> Vec<Vec<usize>> {
    if let Some(t) = memo.get(&idx) {
        return t.clone();
    }
    let gens: Vec<IntVec> = idx.iter().map(|&i| rays[i].clone()).collect();
    let d = linalg::rank(&gens);
    if idx.len() == d {
        memo.insert(idx.clone(), vec![idx.clone()]);
        return vec![idx];
    }
    let apex = idx[0];
    let (normals, _) = facets(dim, &gens);
    let mut out = Vec::new();
    for y in normals {
        if linalg::dot(&y, &rays[apex]).is_zero() {
            continue;
        }
        let sub: Vec<usize> = idx
            .iter()
            .copied()
            .filter(|&i| linalg::dot(&y, &rays[i]).is_zero())
            .collect();
        for mut s in pull(dim, rays, sub, memo) {
            s.push(apex);
            out.push(s);
        }
    }
    memo.insert(idx, out.clone());
    out
}

/// True iff every generator satisfies all inequalities and equations.
pub fn satisfies(x: &[BigInt], ineqs: &[IntVec], eqs: &[IntVec]) -> bool {
    ineqs.iter().all(|a| !linalg::dot(a, x).is_negative())
        && eqs.iter().all(|b| linalg::dot(b, x).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVec {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn positive_orthant() {
        let r = extreme_rays(3, &[iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1])], &[]);
        assert_eq!(r.rays, vec![iv(&[0, 0, 1]), iv(&[0, 1, 0]), iv(&[1, 0, 0])]);
        assert!(r.lineality.is_empty());
    }

    #[test]
    fn half_space_has_lineality() {
        let r = extreme_rays(2, &[iv(&[1, 0])], &[]);
        assert_eq!(r.rays, vec![iv(&[1, 0])]);
        assert_eq!(r.lineality.len(), 1);
    }

    #[test]
    fn square_cone_facets() {
        // cone over the unit square at height 1
        let gens = vec![
            iv(&[1, 0, 0]),
            iv(&[1, 1, 0]),
            iv(&[1, 0, 1]),
            iv(&[1, 1, 1]),
        ];
        let (f, e) = facets(3, &gens);
        assert_eq!(f.len(), 4);
        assert!(e.is_empty());
        for g in &gens {
            assert!(satisfies(g, &f, &e));
        }
        let t = triangulate(3, &gens);
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn lower_dimensional_cone() {
        let gens = vec![iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[1, 1, 0])];
        let (f, e) = facets(3, &gens);
        assert_eq!(e.len(), 1);
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn octahedron_cone_triangulation_covers() {
        let gens = vec![
            iv(&[1, 1, 0, 0]),
            iv(&[1, -1, 0, 0]),
            iv(&[1, 0, 1, 0]),
            iv(&[1, 0, -1, 0]),
            iv(&[1, 0, 0, 1]),
            iv(&[1, 0, 0, -1]),
        ];
        let t = triangulate(4, &gens);
        let vol: BigInt = t
            .iter()
            .map(|s| {
                let m: Vec<IntVec> = s.iter().map(|&i| gens[i].clone()).collect();
                linalg::det(&m).abs()
            })
            .sum();
        // normalized volume of the cross-polytope in dimension 3 is 8
        assert_eq!(vol, BigInt::from(8));
    }
}
