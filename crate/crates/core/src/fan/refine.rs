use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};

use super::{Cone, PLFunction, WeightedFan};
use crate::cone;
use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::linalg::{self, IntVec};

struct HRep {
    normals: Vec<IntVec>,
    eqs: Vec<IntVec>,
}

impl HRep {
    fn of(n: usize, c: &Cone) -> Self {
        let (normals, eqs) = cone::facets(n, &c.int_rays());
        HRep { normals, eqs }
    }

    fn contains_all(&self, xs: &[IntVec]) -> bool {
        xs.iter()
            .all(|x| cone::satisfies(x, &self.normals, &self.eqs))
    }

    /// True when a single functional shows that this cone meets `cone(xs)`
    /// in a set of lower dimension than `cone(xs)`.
    fn separates(&self, xs: &[IntVec]) -> bool {
        self.eqs
            .iter()
            .any(|b| xs.iter().any(|x| !linalg::dot(b, x).is_zero()))
            || self.normals_separate(xs)
    }

    /// True when `cone(xs)` lies in the span of this cone and a facet normal
    /// is nonpositive on `xs` and negative somewhere. Facet normals are only
    /// defined modulo the equations, so nothing is concluded otherwise.
    fn normals_separate(&self, xs: &[IntVec]) -> bool {
        if self
            .eqs
            .iter()
            .any(|b| xs.iter().any(|x| !linalg::dot(b, x).is_zero()))
        {
            return false;
        }
        self.normals.iter().any(|y| {
            let vals: Vec<_> = xs.iter().map(|x| linalg::dot(y, x)).collect();
            vals.iter().all(|v| !v.is_positive()) && vals.iter().any(|v| v.is_negative())
        })
    }
}

/// Subdivides `f` so that every cone lies in a cone of `carrier`. Weights are
/// inherited. Fails with [`Error::SupportMismatch`] when the support of the
/// carrier does not contain the support of `f`.
pub fn refine(f: &WeightedFan, carrier: &WeightedFan) -> Result<WeightedFan> {
    let n = f.rank();
    if carrier.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: carrier.rank(),
        });
    }
    let d = f.dim();
    if carrier.is_empty() {
        return if f.is_empty() {
            Ok(f.clone())
        } else {
            Err(Error::SupportMismatch("empty carrier".into()))
        };
    }
    if d == 0 {
        return Ok(f.clone());
    }
    let carrier_cones: Vec<(&Cone, HRep, Vec<IntVec>)> = carrier
        .cones()
        .keys()
        .map(|c| (c, HRep::of(n, c), c.int_rays()))
        .collect();
    let mut out = WeightedFan::empty(n, d);
    for (sigma, w) in f.cones() {
        let srays = sigma.int_rays();
        let inside = carrier.cones().contains_key(sigma)
            || carrier_cones.iter().any(|(c, h, _)| {
                sigma.rays().iter().all(|r| c.has_ray(r)) || h.contains_all(&srays)
            });
        if inside {
            out.insert(sigma.clone(), w.clone());
            continue;
        }
        let sh = HRep::of(n, sigma);
        // A cone lying in a wall yields the same piece from both sides.
        let mut simplices = BTreeSet::new();
        for (_, ch, crays) in &carrier_cones {
            if ch.separates(&srays) || sh.normals_separate(crays) {
                continue;
            }
            let ineqs: Vec<IntVec> = sh.normals.iter().chain(&ch.normals).cloned().collect();
            let eqs: Vec<IntVec> = sh.eqs.iter().chain(&ch.eqs).cloned().collect();
            let piece = cone::extreme_rays(n, &ineqs, &eqs).rays;
            if linalg::rank(&piece) != d {
                continue;
            }
            for s in cone::triangulate(n, &piece) {
                let mut rays: Vec<LatticeVector> = s
                    .iter()
                    .map(|&i| LatticeVector::new(piece[i].clone()))
                    .collect();
                rays.sort();
                simplices.insert(Cone::from_sorted(rays));
            }
        }
        check_coverage(sigma, &sh, &simplices)?;
        for s in simplices {
            out.insert(s, w.clone());
        }
    }
    Ok(out)
}

/// Every codimension-one face of the subdivision must lie on the boundary of
/// `sigma` or be shared by exactly two of its cones.
fn check_coverage(sigma: &Cone, sh: &HRep, simplices: &BTreeSet<Cone>) -> Result<()> {
    if simplices.is_empty() {
        return Err(Error::SupportMismatch(format!(
            "{sigma} misses the carrier"
        )));
    }
    let mut faces: BTreeMap<Cone, usize> = BTreeMap::new();
    for s in simplices {
        for i in 0..s.dim() {
            *faces.entry(s.without(i)).or_default() += 1;
        }
    }
    for (face, count) in faces {
        let ok = match count {
            1 => {
                let rays = face.int_rays();
                sh.normals
                    .iter()
                    .any(|y| rays.iter().all(|r| linalg::dot(y, r).is_zero()))
            }
            2 => true,
            _ => false,
        };
        if !ok {
            return Err(Error::SupportMismatch(format!(
                "{sigma} is not covered by the carrier near {face}"
            )));
        }
    }
    Ok(())
}

/// Refines `f` by the carriers of all `ms` and rebases every function on the
/// result.
pub fn common_refinement(
    f: &WeightedFan,
    ms: &[PLFunction],
) -> Result<(WeightedFan, Vec<PLFunction>)> {
    let mut g = f.clone();
    for m in ms {
        g = refine(&g, m.carrier())?;
    }
    let rebased = ms
        .iter()
        .map(|m| m.rebase(g.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok((g, rebased))
}

/// Stellar subdivision at the ray through `l`: each cone containing `l` in
/// the relative interior of its face `tau` is replaced by the cones
/// `sigma - r + l` for the rays `r` of `tau`.
pub fn subdivide_at_ray(f: &WeightedFan, l: &LatticeVector) -> Result<WeightedFan> {
    let l = l.primitive()?;
    let x = linalg::to_rat(l.coords());
    let mut out = WeightedFan::empty(f.rank(), f.dim());
    for (sigma, w) in f.cones() {
        let coef = match sigma.coefficients(&x) {
            Some(c) if !sigma.has_ray(&l) && c.iter().all(|v| !v.is_negative()) => c,
            _ => {
                out.insert(sigma.clone(), w.clone());
                continue;
            }
        };
        for (i, c) in coef.iter().enumerate() {
            if c.is_positive() {
                out.insert(sigma.without(i).with_ray(l.clone()), w.clone());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::{complete_fan, is_balanced};
    use crate::polytope::LatticePolytope;
    use num_rational::BigRational;
    use rand::SeedableRng;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector::from_i64s(v)
    }

    /// Normal fan of a polygon given by its outer edge normals in cyclic order.
    fn polygon_fan(normals: &[&[i64]]) -> WeightedFan {
        let k = normals.len();
        let cones = (0..k).map(|i| {
            (
                Cone::new(vec![lv(normals[i]), lv(normals[(i + 1) % k])]).unwrap(),
                BigRational::from_integer(1.into()),
            )
        });
        WeightedFan::new(2, 2, cones).unwrap()
    }

    #[test]
    fn refine_by_square_normal_fan_is_unchanged() {
        let sq = polygon_fan(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]);
        let r = refine(&complete_fan(2), &sq).unwrap();
        assert_eq!(r, complete_fan(2));
    }

    #[test]
    fn overlay_of_rotated_squares_has_eight_rays() {
        let rotated = polygon_fan(&[&[1, 1], &[-1, 1], &[-1, -1], &[1, -1]]);
        let r = refine(&complete_fan(2), &rotated).unwrap();
        assert_eq!(r.rays().len(), 8);
        assert_eq!(r.len(), 8);
        assert!(is_balanced(&r).balanced);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        assert!(r.agrees_with(&complete_fan(2), &mut rng));
    }

    #[test]
    fn refine_in_dimension_three_is_a_subdivision() {
        let p = LatticePolytope::from_i64s(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
            .unwrap();
        let normals: Vec<LatticeVector> = p.facets().into_iter().map(|(l, _)| l).collect();
        // normal fan of the simplex: cones spanned by three of the four normals
        let cones = (0..4).map(|skip| {
            let rays: Vec<_> = normals
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, r)| r.clone())
                .collect();
            (
                Cone::new(rays).unwrap(),
                BigRational::from_integer(1.into()),
            )
        });
        let carrier = WeightedFan::new(3, 3, cones).unwrap();
        let r = refine(&complete_fan(3), &carrier).unwrap();
        assert!(is_balanced(&r).balanced);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        assert!(r.agrees_with(&complete_fan(3), &mut rng));
        for c in r.cones().keys() {
            let rays = c.int_rays();
            assert!(carrier
                .cones()
                .keys()
                .any(|k| HRep::of(3, k).contains_all(&rays)));
        }
    }

    #[test]
    fn refine_detects_missing_support() {
        let half = WeightedFan::new(
            2,
            2,
            [(
                Cone::new(vec![lv(&[1, 0]), lv(&[0, 1])]).unwrap(),
                BigRational::from_integer(1.into()),
            )],
        )
        .unwrap();
        assert!(matches!(
            refine(&complete_fan(2), &half),
            Err(Error::SupportMismatch(_))
        ));
    }

    #[test]
    fn stellar_subdivision() {
        let f = subdivide_at_ray(&complete_fan(2), &lv(&[1, 1])).unwrap();
        assert_eq!(f.len(), 5);
        assert!(is_balanced(&f).balanced);
        let g = subdivide_at_ray(&complete_fan(2), &lv(&[1, 0])).unwrap();
        assert_eq!(g, complete_fan(2));
    }
}
