mod common;

use common::{det, lv, to_i64s};
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;
use tropci_core::lattice::coordinates_in;
use tropci_core::{hermite_basis, quotient, quotient_map, Error, LatticeVector};

fn vector(n: usize) -> impl Strategy<Value = LatticeVector> {
    prop::collection::vec(-12i64..=12, n).prop_map(|v| lv(&v))
}

fn nonzero(n: usize) -> impl Strategy<Value = LatticeVector> {
    vector(n).prop_filter("nonzero", |v| !v.is_zero())
}

/// Greatest common divisor of the maximal minors of an `r x n` matrix.
fn minor_gcd(rows: &[Vec<i64>]) -> i128 {
    let r = rows.len();
    let n = rows[0].len();
    let mut g = 0i128;
    let mut cols: Vec<usize> = (0..r).collect();
    loop {
        let m: Vec<Vec<i128>> = rows
            .iter()
            .map(|row| cols.iter().map(|&c| row[c] as i128).collect())
            .collect();
        g = num_integer::Integer::gcd(&g, &det(&m));
        // next combination
        let mut i = r;
        loop {
            if i == 0 {
                return g;
            }
            i -= 1;
            if cols[i] < n - r + i {
                cols[i] += 1;
                for j in i + 1..r {
                    cols[j] = cols[j - 1] + 1;
                }
                break;
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn primitive_ignores_positive_scaling(v in nonzero(3), c in 1i64..7) {
        let scaled = v.scale(&BigInt::from(c));
        prop_assert_eq!(scaled.primitive().unwrap(), v.primitive().unwrap());
        prop_assert_eq!(v.primitive().unwrap().lattice_length(), BigInt::one());
    }

    #[test]
    fn quotient_map_has_kernel_l_and_is_onto(v in nonzero(3)) {
        let l = v.primitive().unwrap();
        let q = quotient(&l).unwrap();
        prop_assert!(q.map.apply(&l).is_zero());
        prop_assert_eq!(q.unit.dot(&l), BigInt::one());
        let rows: Vec<Vec<i64>> = q.map.matrix().iter().map(|r| to_i64s(&LatticeVector::new(r.clone()))).collect();
        // onto Z^(n-1) exactly when the maximal minors are coprime
        prop_assert_eq!(minor_gcd(&rows), 1);
        // rows together with the unit row form a unimodular matrix
        let mut full: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        full.push(to_i64s(&q.unit).iter().map(|&x| x as i128).collect());
        prop_assert_eq!(det(&full).abs(), 1);
        prop_assert_eq!(quotient_map(&l).unwrap(), q.map);
    }

    #[test]
    fn hermite_basis_is_canonical(vs in prop::collection::vec(vector(4), 1..4), mix in prop::collection::vec(-3i64..=3, 9)) {
        let b = hermite_basis(4, &vs);
        // a different generating set of the same rational span
        let mut other: Vec<LatticeVector> = vs.iter().rev().cloned().collect();
        for (i, c) in mix.iter().enumerate() {
            let j = i % vs.len();
            let k = (i / 3) % vs.len();
            other.push(vs[j].scale(&BigInt::from(*c)).add(&vs[k].scale(&BigInt::from(2))));
        }
        prop_assert_eq!(&hermite_basis(4, &other), &b);
        if b.is_empty() {
            prop_assert!(vs.iter().all(|v| v.is_zero()));
            return Ok(());
        }
        // every input is an integer combination of the basis
        for v in &vs {
            let c = coordinates_in(&b, v).unwrap();
            prop_assert!(c.iter().all(|x| x.is_integer()));
        }
        // and the basis spans a saturated sublattice
        let rows: Vec<Vec<i64>> = b.iter().map(to_i64s).collect();
        prop_assert_eq!(minor_gcd(&rows), 1);
    }
}

#[test]
fn quotient_examples() {
    let q = quotient_map(&lv(&[0, 1])).unwrap();
    assert_eq!(q.apply(&lv(&[5, 7])), lv(&[5]));
    let q = quotient_map(&lv(&[1, 1])).unwrap();
    assert!(q.apply(&lv(&[1, 1])).is_zero());
    assert_eq!(q.apply(&lv(&[1, 0])).lattice_length(), BigInt::one());
    assert!(matches!(
        quotient_map(&lv(&[2, 2])),
        Err(Error::NotPrimitive(_))
    ));
}
