mod common;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropci_core::{
    euclidean_volume, lattice_volume, minkowski_sum, mixed_volume, sublattice_mixed_volume,
    LatticePolytope, Polyhedron, PolyhedronStatus,
};

fn polytope(n: usize, bound: i64) -> impl Strategy<Value = LatticePolytope> {
    prop::collection::vec(prop::collection::vec(-bound..=bound, n), 1..=n + 3)
        .prop_map(move |pts| LatticePolytope::new(n, pts.iter().map(|p| lv(p)).collect()).unwrap())
}

fn seeds() -> impl Strategy<Value = u64> {
    any::<u64>()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn support_value_is_additive(p in polytope(3, 4), q in polytope(3, 4), seed in seeds()) {
        let s = minkowski_sum(&p, &q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..100 {
            let l = random_nonzero(&mut rng, 3, 9);
            prop_assert_eq!(
                s.support_value(&l).unwrap(),
                p.support_value(&l).unwrap() + q.support_value(&l).unwrap()
            );
        }
    }

    #[test]
    fn planar_volumes_match_shoelace(p in polytope(2, 5)) {
        let a = double_area(&planar(&p));
        prop_assert_eq!(lattice_volume(&p), BigInt::from(a));
        prop_assert_eq!(euclidean_volume(&p), BigRational::new(a.into(), 2.into()));
    }

    #[test]
    fn planar_mixed_volume_matches_polarization(p in polytope(2, 4), q in polytope(2, 4)) {
        let (a, b) = (planar(&p), planar(&q));
        let expected = double_area(&planar_sum(&a, &b)) - double_area(&a) - double_area(&b);
        prop_assert_eq!(expected % 2, 0);
        prop_assert_eq!(mixed_volume(&[p, q]).unwrap(), BigInt::from(expected / 2));
    }

    #[test]
    fn mixed_volume_axioms_in_rank_three(seed in seeds()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ps: Vec<_> = (0..3).map(|_| random_polytope(&mut rng, 3, 3)).collect();
        let mv = mixed_volume(&ps).unwrap();
        // symmetry
        prop_assert_eq!(mixed_volume(&[ps[2].clone(), ps[0].clone(), ps[1].clone()]).unwrap(), mv.clone());
        // diagonal
        prop_assert_eq!(
            mixed_volume(&[ps[0].clone(), ps[0].clone(), ps[0].clone()]).unwrap(),
            lattice_volume(&ps[0])
        );
        // additivity in the first argument
        let extra = random_polytope(&mut rng, 3, 2);
        let sum = minkowski_sum(&ps[0], &extra).unwrap();
        prop_assert_eq!(
            mixed_volume(&[sum, ps[1].clone(), ps[2].clone()]).unwrap(),
            mv.clone() + mixed_volume(&[extra, ps[1].clone(), ps[2].clone()]).unwrap()
        );
        // independent translations
        let moved: Vec<_> = ps.iter().map(|p| p.translate(&random_vector(&mut rng, 3, 5)).unwrap()).collect();
        prop_assert_eq!(mixed_volume(&moved).unwrap(), mv.clone());
        // common unimodular change of coordinates
        let a = random_unimodular(&mut rng, 3);
        let mapped: Vec<_> = ps.iter().map(|p| map_polytope(&a, p)).collect();
        prop_assert_eq!(mixed_volume(&mapped).unwrap(), mv);
    }

    #[test]
    fn sublattice_mixed_volume_ignores_shifts_and_coordinates(seed in seeds()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // two polygons in the plane z = 0 of Z^3
        let ps: Vec<LatticePolytope> = (0..2)
            .map(|_| {
                let q = random_polytope(&mut rng, 2, 3);
                q.map(|v| lv(&[to_i64s(v)[0], to_i64s(v)[1], 0]), 3).unwrap()
            })
            .collect();
        let flat: Vec<LatticePolytope> = ps
            .iter()
            .map(|p| p.map(|v| lv(&to_i64s(v)[..2]), 2).unwrap())
            .collect();
        let expected = mixed_volume(&flat).unwrap();
        prop_assert_eq!(sublattice_mixed_volume(&ps).unwrap(), Some(expected.clone()));
        let a = random_unimodular(&mut rng, 3);
        let moved: Vec<_> = ps
            .iter()
            .map(|p| map_polytope(&a, p).translate(&random_vector(&mut rng, 3, 4)).unwrap())
            .collect();
        prop_assert_eq!(sublattice_mixed_volume(&moved).unwrap(), Some(expected));
    }

    #[test]
    fn facet_description_round_trips(p in polytope(3, 3)) {
        prop_assume!(p.is_full_dimensional());
        let ineqs = p
            .facets()
            .into_iter()
            .map(|(l, c)| (l, BigRational::from_integer(c)))
            .collect();
        let h = Polyhedron::new(3, ineqs).unwrap();
        prop_assert_eq!(h.status(), PolyhedronStatus::Bounded);
        prop_assert_eq!(h.to_lattice_polytope().unwrap(), Some(p));
    }
}

#[test]
fn mixed_volume_examples() {
    let square = LatticePolytope::cuboid(&[(0, 1), (0, 1)]);
    assert_eq!(mixed_volume(&[square.clone(), square]).unwrap(), int(2));
    let e1 = LatticePolytope::cuboid(&[(0, 1), (0, 0)]);
    let e2 = LatticePolytope::cuboid(&[(0, 0), (0, 1)]);
    assert_eq!(mixed_volume(&[e1, e2]).unwrap(), int(1));
    let big = LatticePolytope::cuboid(&[(-1, 1), (-1, 1)]);
    let seg = LatticePolytope::cuboid(&[(0, 0), (-1, 1)]);
    assert_eq!(mixed_volume(&[big, seg]).unwrap(), int(4));
}

#[test]
fn unimodular_maps_preserve_lattice_volume() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let n = rng.gen_range(2..=3);
        let p = random_polytope(&mut rng, n, 3);
        let a = random_unimodular(&mut rng, n);
        assert_eq!(lattice_volume(&map_polytope(&a, &p)), lattice_volume(&p));
    }
}
