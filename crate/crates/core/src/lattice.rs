//! Integer vectors, Hermite bases of saturated sublattices and quotient maps.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::linalg::{self, IntVec};
use crate::{Error, Result};

/// A vector of a lattice `Z^n`, either a covector `l` or a point of the
/// character lattice depending on context. Ordering is lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    coords: Vec<BigInt>,
}

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        Self { coords }
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![BigInt::zero(); rank])
    }

    /// The `i`-th standard basis vector.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.coords[i] = BigInt::one();
        v
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &LatticeVector) -> BigInt {
        linalg::dot(&self.coords, &other.coords)
    }

    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &LatticeVector) -> LatticeVector {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> LatticeVector {
        Self::new(self.coords.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> LatticeVector {
        Self::new(self.coords.iter().map(|a| -a).collect())
    }

    /// Gcd of the absolute coordinates; `0` for the zero vector.
    pub fn lattice_length(&self) -> BigInt {
        linalg::gcd_all(&self.coords)
    }

    /// The primitive generator of the ray spanned by `self`.
    pub fn primitive(&self) -> Result<LatticeVector> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Self::new(linalg::primitive_vec(&self.coords)))
    }

    pub fn is_primitive(&self) -> bool {
        self.lattice_length().is_one()
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector::new(linalg::to_rat(&self.coords))
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A point of `Q^n`. Coordinates are kept in lowest terms by `BigRational`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector {
    coords: Vec<BigRational>,
}

impl RationalVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Self { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![BigRational::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn add(&self, other: &RationalVector) -> RationalVector {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> RationalVector {
        Self::new(self.coords.iter().map(|a| a * c).collect())
    }

    pub fn dot_lattice(&self, v: &LatticeVector) -> BigRational {
        linalg::dot_rat_int(&self.coords, v.coords())
    }

    /// Primitive lattice vector on the same ray; `None` for zero.
    pub fn ray_generator(&self) -> Option<LatticeVector> {
        if self.coords.iter().all(Zero::is_zero) {
            return None;
        }
        Some(LatticeVector::new(linalg::rat_to_primitive(&self.coords)))
    }
}

/// An integer matrix viewed as a homomorphism `Z^cols -> Z^rows`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMap {
    matrix: Vec<IntVec>,
    source_rank: usize,
}

impl LatticeMap {
    pub fn new(matrix: Vec<Vec<BigInt>>, source_rank: usize) -> Result<Self> {
        if let Some(row) = matrix.iter().find(|r| r.len() != source_rank) {
            return Err(Error::RankMismatch {
                expected: source_rank,
                got: row.len(),
            });
        }
        Ok(Self {
            matrix,
            source_rank,
        })
    }

    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| LatticeVector::unit(n, i).into_coords())
            .collect();
        Self {
            matrix,
            source_rank: n,
        }
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.matrix
    }

    pub fn apply(&self, v: &LatticeVector) -> LatticeVector {
        LatticeVector::new(
            self.matrix
                .iter()
                .map(|row| linalg::dot(row, v.coords()))
                .collect(),
        )
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LatticeMap) -> Result<LatticeMap> {
        if self.source_rank != inner.target_rank() {
            return Err(Error::RankMismatch {
                expected: self.source_rank,
                got: inner.target_rank(),
            });
        }
        let matrix = self
            .matrix
            .iter()
            .map(|row| {
                (0..inner.source_rank)
                    .map(|j| {
                        row.iter()
                            .zip(&inner.matrix)
                            .map(|(a, irow)| a * &irow[j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        Ok(LatticeMap {
            matrix,
            source_rank: inner.source_rank,
        })
    }

    /// The rows as points of the dual lattice. For a quotient map these form a
    /// basis of the annihilator of the kernel.
    pub fn dual_basis(&self) -> Vec<LatticeVector> {
        self.matrix
            .iter()
            .cloned()
            .map(LatticeVector::new)
            .collect()
    }

    /// Coordinates of a dual point `x` (with `x` vanishing on the kernel) in
    /// [`Self::dual_basis`].
    pub fn dual_coordinates(&self, x: &LatticeVector) -> Option<LatticeVector> {
        let c = linalg::solve_combination_int(&self.matrix, x.coords())?;
        c.iter()
            .map(|v| v.is_integer().then(|| v.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(LatticeVector::new)
    }
}

/// A basis of the saturation `span(vectors) ∩ Z^n`, in column Hermite form.
///
/// The result is canonical: equal saturations produce identical bases.
pub fn hermite_basis(rank: usize, vectors: &[LatticeVector]) -> Vec<LatticeVector> {
    let rows: Vec<IntVec> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    let annihilator = linalg::integer_kernel(&rows, rank);
    let saturated = linalg::integer_kernel(&annihilator, rank);
    if saturated.is_empty() {
        return Vec::new();
    }
    // columns = basis vectors; reduce to a canonical column Hermite form
    let d = saturated.len();
    let cols: Vec<IntVec> = (0..rank)
        .map(|i| saturated.iter().map(|v| v[i].clone()).collect())
        .collect();
    let (h, _, _) = linalg::column_hnf(&cols, d);
    (0..d)
        .map(|j| LatticeVector::new(h.iter().map(|row| row[j].clone()).collect()))
        .collect()
}

/// Unimodular data attached to a primitive covector `l`: a surjection with
/// kernel `Z l` together with a lattice point `u` satisfying `<u, l> = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub map: LatticeMap,
    pub unit: LatticeVector,
}

fn quotient_data(l: &LatticeVector) -> Result<Quotient> {
    if l.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !l.is_primitive() {
        return Err(Error::NotPrimitive(l.to_string()));
    }
    let n = l.rank();
    let (_, u, _) = linalg::column_hnf(&[l.coords().to_vec()], n);
    let unit = LatticeVector::new(u.iter().map(|row| row[0].clone()).collect());
    let matrix = (1..n)
        .map(|j| u.iter().map(|row| row[j].clone()).collect())
        .collect();
    Ok(Quotient {
        map: LatticeMap {
            matrix,
            source_rank: n,
        },
        unit,
    })
}

/// A deterministic surjection `Z^n -> Z^(n-1)` whose kernel is `Z l`.
pub fn quotient_map(l: &LatticeVector) -> Result<LatticeMap> {
    Ok(quotient_data(l)?.map)
}

/// Same as [`quotient_map`] plus a point `u` with `<u, l> = 1`.
pub fn quotient(l: &LatticeVector) -> Result<Quotient> {
    quotient_data(l)
}

/// Coordinates of `x` in an independent family, if `x` is in its span.
pub fn coordinates_in(basis: &[LatticeVector], x: &LatticeVector) -> Option<Vec<BigRational>> {
    let b: Vec<IntVec> = basis.iter().map(|v| v.coords().to_vec()).collect();
    linalg::solve_combination_int(&b, x.coords())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector::from_i64s(v)
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(lv(&[0, 4]).primitive().unwrap(), lv(&[0, 1]));
        assert_eq!(lv(&[2, -6, 4]).primitive().unwrap(), lv(&[1, -3, 2]));
        assert_eq!(lv(&[1, 0]).primitive().unwrap(), lv(&[1, 0]));
        assert_eq!(lv(&[0, 0]).primitive(), Err(Error::ZeroVector));
    }

    #[test]
    fn lattice_length_examples() {
        assert_eq!(lv(&[0, 4]).lattice_length(), BigInt::from(4));
        assert_eq!(lv(&[2, -6, 4]).lattice_length(), BigInt::from(2));
        assert_eq!(lv(&[0, 0]).lattice_length(), BigInt::zero());
    }

    #[test]
    fn hermite_basis_examples() {
        let b = hermite_basis(2, &[lv(&[2, 0]), lv(&[0, 2])]);
        assert_eq!(b.len(), 2);
        let rows: Vec<IntVec> = b.iter().map(|v| v.coords().to_vec()).collect();
        assert_eq!(linalg::det(&rows).abs(), BigInt::one());

        assert_eq!(hermite_basis(3, &[lv(&[1, 1, 0])]), vec![lv(&[1, 1, 0])]);
        assert!(hermite_basis(3, &[]).is_empty());
    }

    #[test]
    fn quotient_map_examples() {
        let q = quotient_map(&lv(&[0, 1])).unwrap();
        assert_eq!(q.matrix(), &[vec![BigInt::one(), BigInt::zero()]]);

        let q = quotient_map(&lv(&[1, 1])).unwrap();
        assert!(q.apply(&lv(&[1, 1])).is_zero());
        // surjective: the single row is primitive
        assert!(LatticeVector::new(q.matrix()[0].clone()).is_primitive());

        assert_eq!(
            quotient_map(&lv(&[2, 2])),
            Err(Error::NotPrimitive("(2,2)".into()))
        );
    }

    #[test]
    fn quotient_unit_pairs_to_one() {
        let l = lv(&[3, -2, 5]);
        let q = quotient(&l).unwrap();
        assert_eq!(q.unit.dot(&l), BigInt::one());
        assert_eq!(q.map.target_rank(), 2);
        assert!(q.map.apply(&l).is_zero());
    }

    #[test]
    fn compose_with_identity() {
        let q = quotient_map(&lv(&[1, 2, 3])).unwrap();
        assert_eq!(q.compose(&LatticeMap::identity(3)).unwrap(), q);
        assert_eq!(LatticeMap::identity(2).compose(&q).unwrap(), q);
    }
}
