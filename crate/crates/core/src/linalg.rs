//! Small dense exact linear algebra used throughout the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type IntVec = Vec<BigInt>;
pub(crate) type RatVec = Vec<BigRational>;

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn dot_rat_int(a: &[BigRational], b: &[BigInt]) -> BigRational {
    a.iter()
        .zip(b)
        .map(|(x, y)| x * BigRational::from_integer(y.clone()))
        .sum()
}

pub(crate) fn gcd_all(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides by the coordinate gcd; the zero vector is returned unchanged.
pub(crate) fn primitive_vec(v: &[BigInt]) -> IntVec {
    let g = gcd_all(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub(crate) fn to_rat(v: &[BigInt]) -> RatVec {
    v.iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect()
}

/// Clears denominators and returns the primitive integer vector on the same ray.
pub(crate) fn rat_to_primitive(v: &[BigRational]) -> IntVec {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: IntVec = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    primitive_vec(&ints)
}

pub(crate) fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub(crate) fn rank(rows: &[IntVec]) -> usize {
    let mut m: Vec<IntVec> = rows.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r].clone();
        for row in m.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let a = row[c].clone();
            let reduced: IntVec = row
                .iter()
                .zip(&pivot)
                .map(|(x, y)| x * &pivot[c] - y * &a)
                .collect();
            *row = primitive_vec(&reduced);
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Bareiss fraction-free determinant.
pub(crate) fn det(matrix: &[IntVec]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Gcd of the maximal minors of the matrix whose rows are `vectors`.
///
/// For linearly independent rows this is the index of the lattice they span
/// inside its saturation.
pub(crate) fn max_minor_gcd(vectors: &[IntVec]) -> BigInt {
    let d = vectors.len();
    if d == 0 {
        return BigInt::one();
    }
    let n = vectors[0].len();
    let mut g = BigInt::zero();
    for cols in combinations(n, d) {
        let sub: Vec<IntVec> = vectors
            .iter()
            .map(|v| cols.iter().map(|&c| v[c].clone()).collect())
            .collect();
        g = g.gcd(&det(&sub));
        if g.is_one() {
            break;
        }
    }
    g
}

/// Column-style Hermite reduction with a fixed pivot order.
///
/// Returns `(h, u, rank)` with `a * u = h`, `u` unimodular and the nonzero
/// columns of `h` being the first `rank` ones.
pub(crate) fn column_hnf(a: &[IntVec], ncols: usize) -> (Vec<IntVec>, Vec<IntVec>, usize) {
    let mut h: Vec<IntVec> = a.to_vec();
    let mut u: Vec<IntVec> = (0..ncols)
        .map(|i| {
            (0..ncols)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let swap_cols = |m: &mut Vec<IntVec>, a: usize, b: usize| {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    };
    // col[j] -= q * col[p]
    let axpy = |m: &mut Vec<IntVec>, j: usize, p: usize, q: &BigInt| {
        for row in m.iter_mut() {
            let t = &row[p] * q;
            row[j] -= t;
        }
    };
    let mut pivot = 0;
    for r in 0..h.len() {
        if pivot == ncols {
            break;
        }
        let mut found = false;
        loop {
            let best = (pivot..ncols)
                .filter(|&j| !h[r][j].is_zero())
                .min_by(|&x, &y| h[r][x].abs().cmp(&h[r][y].abs()).then(x.cmp(&y)));
            let Some(j0) = best else { break };
            found = true;
            swap_cols(&mut h, pivot, j0);
            swap_cols(&mut u, pivot, j0);
            let mut done = true;
            for j in pivot + 1..ncols {
                if h[r][j].is_zero() {
                    continue;
                }
                let q = h[r][j].div_floor(&h[r][pivot]);
                axpy(&mut h, j, pivot, &q);
                axpy(&mut u, j, pivot, &q);
                if !h[r][j].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if found {
            if h[r][pivot].is_negative() {
                for row in h.iter_mut().chain(u.iter_mut()) {
                    row[pivot] = -row[pivot].clone();
                }
            }
            for j in 0..pivot {
                let q = h[r][j].div_floor(&h[r][pivot]);
                if !q.is_zero() {
                    axpy(&mut h, j, pivot, &q);
                    axpy(&mut u, j, pivot, &q);
                }
            }
            pivot += 1;
        }
    }
    (h, u, pivot)
}

/// A basis of the integer kernel `{x in Z^n : rows * x = 0}`.
pub(crate) fn integer_kernel(rows: &[IntVec], ncols: usize) -> Vec<IntVec> {
    let (_, u, r) = column_hnf(rows, ncols);
    (r..ncols)
        .map(|j| u.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Coefficients `c` with `sum c_j basis_j = x`, if `x` lies in the span.
/// The basis vectors must be linearly independent.
pub(crate) fn solve_combination(basis: &[RatVec], x: &[BigRational]) -> Option<RatVec> {
    let d = basis.len();
    let n = x.len();
    if d == 0 {
        return x.iter().all(|v| v.is_zero()).then(Vec::new);
    }
    // augmented n x (d+1) system
    let mut m: Vec<RatVec> = (0..n)
        .map(|i| {
            let mut row: RatVec = basis.iter().map(|b| b[i].clone()).collect();
            row.push(x[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::with_capacity(d);
    let mut r = 0;
    for c in 0..d {
        let p = (r..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[d].is_zero()) {
        return None;
    }
    Some((0..d).map(|i| m[i][d].clone()).collect())
}

pub(crate) fn solve_combination_int(basis: &[IntVec], x: &[BigInt]) -> Option<RatVec> {
    let b: Vec<RatVec> = basis.iter().map(|v| to_rat(v)).collect();
    solve_combination(&b, &to_rat(x))
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}
