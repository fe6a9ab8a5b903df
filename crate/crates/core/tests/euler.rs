mod common;

use std::collections::BTreeMap;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropci_core::{
    char_class, complete_fan, euler_bkk, euler_direct, euler_recursive, tci_from_polytopes,
    LatticePolytope, PLFunction, RationalVector, TropicalCI,
};

fn random_tuple(rng: &mut ChaCha8Rng, n: usize, k: usize, bound: i64) -> Vec<LatticePolytope> {
    (0..k).map(|_| random_polytope(rng, n, bound)).collect()
}

/// `conv(P + one extra point)`, which dominates the support function of `P`.
fn majorant(rng: &mut ChaCha8Rng, p: &LatticePolytope) -> LatticePolytope {
    let mut pts = p.vertices();
    pts.push(random_vector(rng, p.rank(), 5));
    LatticePolytope::new(p.rank(), pts).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn direct_matches_bkk(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..=n);
        let ps = random_tuple(&mut rng, n, k, 4);
        let t = tci_from_polytopes(&ps, n).unwrap();
        let bkk = euler_bkk(&ps, n).unwrap();
        if t.is_degenerate() {
            prop_assert!(bkk.is_zero());
        } else {
            prop_assert_eq!(euler_direct(&t).unwrap(), bkk);
        }
    }

    #[test]
    fn euler_has_the_expected_sign(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..=n);
        let ps = random_tuple(&mut rng, n, k, 3);
        let e = euler_bkk(&ps, n).unwrap();
        let signed = if (n - k) % 2 == 0 { e } else { -e };
        prop_assert!(!signed.is_negative());
    }

    #[test]
    fn recursion_matches_direct(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = if rng.gen_bool(0.75) { 2 } else { 3 };
        let k = rng.gen_range(1..=n);
        let ps: Vec<_> = (0..k).map(|_| random_full_polytope(&mut rng, n, 3)).collect();
        let t = tci_from_polytopes(&ps, n).unwrap();
        prop_assume!(!t.is_degenerate());
        let maj: Vec<_> = ps.iter().map(|p| majorant(&mut rng, p)).collect();
        prop_assert_eq!(euler_recursive(&t, &maj).unwrap(), euler_direct(&t).unwrap());
    }

    #[test]
    fn recursion_matches_direct_for_nonconvex_functions(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..=n);
        // integer values on the orthant fan, dominated by the box [-3, 3]^n
        let fs: Vec<PLFunction> = (0..k)
            .map(|_| {
                let f = complete_fan(n);
                let vals: BTreeMap<_, _> = f.rays().into_iter().map(|r| (r, rat(rng.gen_range(-3..=3)))).collect();
                PLFunction::new(f, vals).unwrap()
            })
            .collect();
        let t = TropicalCI::new(n, fs, BigInt::zero()).unwrap();
        prop_assume!(!t.is_degenerate());
        let maj = vec![LatticePolytope::cuboid(&vec![(-3, 3); n]); k];
        prop_assert_eq!(euler_recursive(&t, &maj).unwrap(), euler_direct(&t).unwrap());
    }

    #[test]
    fn characteristic_class_ends(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..=n);
        let ps = random_tuple(&mut rng, n, k, 3);
        let t = tci_from_polytopes(&ps, n).unwrap().with_defect(BigInt::from(rng.gen_range(-2..=2)));
        prop_assume!(!t.is_degenerate());
        let c = char_class(&t).unwrap();
        prop_assert!(c.components[&k].agrees_with(&t.tropical_fan(), &mut rng));
        let top = c.components[&n].degree() + BigRational::from_integer(t.defect().clone());
        prop_assert_eq!(top, BigRational::from_integer(euler_direct(&t).unwrap()));
    }

    #[test]
    fn direct_ignores_linear_shifts_and_coordinates(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..=n);
        let ps = random_tuple(&mut rng, n, k, 3);
        let t = tci_from_polytopes(&ps, n).unwrap();
        prop_assume!(!t.is_degenerate());
        let e = euler_direct(&t).unwrap();
        let i = rng.gen_range(0..k);
        let u = RationalVector::new((0..n).map(|_| rat(rng.gen_range(-3..=3))).collect());
        let mut fs = t.functions().to_vec();
        fs[i] = fs[i].add(&PLFunction::linear(fs[i].carrier().clone(), &u)).unwrap();
        let shifted = TropicalCI::new(n, fs, BigInt::zero()).unwrap();
        prop_assert_eq!(euler_direct(&shifted).unwrap(), e.clone());
        let a = random_unimodular(&mut rng, n);
        let mapped: Vec<_> = ps.iter().map(|p| map_polytope(&a, p)).collect();
        prop_assert_eq!(euler_direct(&tci_from_polytopes(&mapped, n).unwrap()).unwrap(), e);
    }
}

#[test]
fn planar_curves_follow_pick() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..50 {
        let p = random_full_polytope(&mut rng, 2, 4);
        let (i, b) = pick_counts(&planar(&p));
        let t = tci_from_polytopes(&[p], 2).unwrap();
        assert_eq!(euler_direct(&t).unwrap(), BigInt::from(2 - 2 * i - b));
    }
}

#[test]
fn pick_examples() {
    let cases: [(&[&[i64]], i64); 3] = [
        (&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]], -2),
        (&[&[0, 0], &[2, 0], &[0, 2]], -4),
        (&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]], -8),
    ];
    for (pts, e) in cases {
        let p = LatticePolytope::from_i64s(2, pts).unwrap();
        assert_eq!(
            euler_direct(&tci_from_polytopes(&[p], 2).unwrap()).unwrap(),
            int(e)
        );
    }
}
