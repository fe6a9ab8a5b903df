#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;
use tropci_core::{LatticePolytope, LatticeVector};

pub fn lv(v: &[i64]) -> LatticeVector {
    LatticeVector::from_i64s(v)
}

pub fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn rat(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

pub fn to_i64s(v: &LatticeVector) -> Vec<i64> {
    v.coords().iter().map(|c| c.to_i64().unwrap()).collect()
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize, bound: i64) -> LatticeVector {
    lv(&(0..n)
        .map(|_| rng.gen_range(-bound..=bound))
        .collect::<Vec<_>>())
}

pub fn random_nonzero<R: Rng>(rng: &mut R, n: usize, bound: i64) -> LatticeVector {
    loop {
        let v = random_vector(rng, n, bound);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Hull of `n + 1` to `n + 3` random points with coordinates in `[-bound, bound]`.
pub fn random_polytope<R: Rng>(rng: &mut R, n: usize, bound: i64) -> LatticePolytope {
    let m = rng.gen_range(n + 1..=n + 3);
    LatticePolytope::new(n, (0..m).map(|_| random_vector(rng, n, bound)).collect()).unwrap()
}

pub fn random_full_polytope<R: Rng>(rng: &mut R, n: usize, bound: i64) -> LatticePolytope {
    loop {
        let p = random_polytope(rng, n, bound);
        if p.is_full_dimensional() {
            return p;
        }
    }
}

/// Determinant by cofactor expansion, independent of the library's elimination.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| (0..n).filter(|&c| c != j).map(|c| row[c]).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

/// A random integer matrix of determinant ±1, as a product of elementary moves.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let c = rng.gen_range(-1..=1);
        let src = a[j].clone();
        for (x, y) in a[i].iter_mut().zip(&src) {
            *x += c * y;
        }
    }
    if rng.gen_bool(0.5) && n > 1 {
        a.swap(0, 1);
    }
    a
}

pub fn apply(a: &[Vec<i64>], v: &LatticeVector) -> LatticeVector {
    let x = to_i64s(v);
    lv(&a
        .iter()
        .map(|row| row.iter().zip(&x).map(|(r, c)| r * c).sum())
        .collect::<Vec<_>>())
}

pub fn map_polytope(a: &[Vec<i64>], p: &LatticePolytope) -> LatticePolytope {
    p.map(|v| apply(a, v), a.len()).unwrap()
}

/// Convex hull of planar points by the monotone chain, counterclockwise.
pub fn hull2d(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Twice the area of the hull of `points` (shoelace).
pub fn double_area(points: &[(i64, i64)]) -> i64 {
    let h = hull2d(points);
    if h.len() < 3 {
        return 0;
    }
    (0..h.len())
        .map(|i| {
            let (a, b) = (h[i], h[(i + 1) % h.len()]);
            a.0 * b.1 - a.1 * b.0
        })
        .sum()
}

pub fn planar(p: &LatticePolytope) -> Vec<(i64, i64)> {
    p.vertices()
        .iter()
        .map(|v| {
            let c = to_i64s(v);
            (c[0], c[1])
        })
        .collect()
}

/// Planar Minkowski sum of vertex sets, before taking the hull.
pub fn planar_sum(a: &[(i64, i64)], b: &[(i64, i64)]) -> Vec<(i64, i64)> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| (x.0 + y.0, x.1 + y.1)))
        .collect()
}

/// Interior and boundary lattice points of a lattice polygon, by scanning its
/// bounding box.
pub fn pick_counts(points: &[(i64, i64)]) -> (i64, i64) {
    let h = hull2d(points);
    let (xmin, xmax) = (
        h.iter().map(|p| p.0).min().unwrap(),
        h.iter().map(|p| p.0).max().unwrap(),
    );
    let (ymin, ymax) = (
        h.iter().map(|p| p.1).min().unwrap(),
        h.iter().map(|p| p.1).max().unwrap(),
    );
    let (mut interior, mut boundary) = (0, 0);
    for x in xmin..=xmax {
        for y in ymin..=ymax {
            let sides: Vec<i64> = (0..h.len())
                .map(|i| {
                    let (a, b) = (h[i], h[(i + 1) % h.len()]);
                    (b.0 - a.0) * (y - a.1) - (b.1 - a.1) * (x - a.0)
                })
                .collect();
            if sides.iter().all(|&s| s > 0) {
                interior += 1;
            } else if sides.iter().all(|&s| s >= 0) {
                boundary += 1;
            }
        }
    }
    (interior, boundary)
}
