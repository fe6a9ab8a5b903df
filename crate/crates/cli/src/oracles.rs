//! Brute-force planar oracles. They share no geometry code with the core
//! library: hulls, areas and lattice points are computed here from scratch.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use tropci_core::LatticePolytope;

use crate::CliError;

type Point = (BigInt, BigInt);

fn planar(p: &LatticePolytope) -> Result<Vec<Point>, CliError> {
    if p.rank() != 2 {
        return Err(CliError::Domain(tropci_core::Error::RankMismatch {
            expected: 2,
            got: p.rank(),
        }));
    }
    Ok(p.points()
        .iter()
        .map(|v| (v.coords()[0].clone(), v.coords()[1].clone()))
        .collect())
}

fn cross(o: &Point, a: &Point, b: &Point) -> BigInt {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Counterclockwise hull by the monotone chain; collinear points dropped.
fn hull(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    fn chain<'a>(iter: impl Iterator<Item = &'a Point>) -> Vec<Point> {
        let mut out: Vec<Point> = Vec::new();
        for p in iter {
            while out.len() >= 2
                && !cross(&out[out.len() - 2], &out[out.len() - 1], p).is_positive()
            {
                out.pop();
            }
            out.push(p.clone());
        }
        out.pop();
        out
    }
    let mut lower = chain(pts.iter());
    lower.extend(chain(pts.iter().rev()));
    lower
}

/// Twice the area of the hull (shoelace).
fn double_area(points: &[Point]) -> BigInt {
    let h = hull(points);
    if h.len() < 3 {
        return BigInt::zero();
    }
    (0..h.len())
        .map(|i| {
            let (a, b) = (&h[i], &h[(i + 1) % h.len()]);
            &a.0 * &b.1 - &a.1 * &b.0
        })
        .sum()
}

/// Interior and boundary lattice points of a polygon, by scanning the
/// bounding box.
pub fn lattice_points(p: &LatticePolytope) -> Result<(BigInt, BigInt), CliError> {
    let h = hull(&planar(p)?);
    if h.len() < 3 {
        return Err(CliError::Domain(tropci_core::Error::Unsupported(
            "the Pick oracle needs a full-dimensional polygon".into(),
        )));
    }
    let min = |f: fn(&Point) -> &BigInt| h.iter().map(f).min().cloned().expect("nonempty");
    let max = |f: fn(&Point) -> &BigInt| h.iter().map(f).max().cloned().expect("nonempty");
    let (x0, x1) = (min(|p| &p.0), max(|p| &p.0));
    let (y0, y1) = (min(|p| &p.1), max(|p| &p.1));
    let (mut interior, mut boundary) = (BigInt::zero(), BigInt::zero());
    let mut x = x0;
    while x <= x1 {
        let mut y = y0.clone();
        while y <= y1 {
            let q = (x.clone(), y.clone());
            let sides: Vec<BigInt> = (0..h.len())
                .map(|i| cross(&h[i], &h[(i + 1) % h.len()], &q))
                .collect();
            if sides.iter().all(|s| s.is_positive()) {
                interior += 1;
            } else if !sides.iter().any(|s| s.is_negative()) {
                boundary += 1;
            }
            y += 1;
        }
        x += 1;
    }
    Ok((interior, boundary))
}

/// `2 - 2I - B`: the Euler characteristic of a generic curve with Newton
/// polygon `p` in the two-dimensional torus.
pub fn pick(p: &LatticePolytope) -> Result<BigInt, CliError> {
    let (i, b) = lattice_points(p)?;
    Ok(BigInt::from(2) - BigInt::from(2) * i - b)
}

/// `area(P + Q) - area(P) - area(Q)`, normalized so that the mixed volume of
/// a polygon with itself is twice its area.
pub fn mv2d(p: &LatticePolytope, q: &LatticePolytope) -> Result<BigInt, CliError> {
    let (a, b) = (planar(p)?, planar(q)?);
    if a.is_empty() || b.is_empty() {
        return Err(CliError::Domain(tropci_core::Error::EmptyPolytope));
    }
    let sum: Vec<Point> = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| (&x.0 + &y.0, &x.1 + &y.1)))
        .collect();
    let twice = double_area(&sum) - double_area(&a) - double_area(&b);
    let (mv, r) = twice.div_rem(&BigInt::from(2));
    debug_assert!(r.is_zero(), "lattice mixed areas are half-integers");
    Ok(mv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pts: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::from_i64s(2, pts).unwrap()
    }

    #[test]
    fn pick_examples() {
        assert_eq!(
            pick(&poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap(),
            BigInt::from(-2)
        );
        assert_eq!(
            pick(&poly(&[&[0, 0], &[2, 0], &[0, 2]])).unwrap(),
            BigInt::from(-4)
        );
        assert_eq!(
            pick(&LatticePolytope::cuboid(&[(-1, 1), (-1, 1)])).unwrap(),
            BigInt::from(-8)
        );
        assert!(pick(&poly(&[&[0, 0], &[3, 0]])).is_err());
    }

    #[test]
    fn mv2d_examples() {
        let sq = LatticePolytope::cuboid(&[(0, 1), (0, 1)]);
        assert_eq!(mv2d(&sq, &sq).unwrap(), BigInt::from(2));
        let e1 = poly(&[&[0, 0], &[1, 0]]);
        let e2 = poly(&[&[0, 0], &[0, 1]]);
        assert_eq!(mv2d(&e1, &e2).unwrap(), BigInt::from(1));
        let big = LatticePolytope::cuboid(&[(-1, 1), (-1, 1)]);
        let seg = poly(&[&[0, -1], &[0, 1]]);
        assert_eq!(mv2d(&big, &seg).unwrap(), BigInt::from(4));
    }
}
