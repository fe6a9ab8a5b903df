//! Euler characteristics and tropical characteristic classes of tropical
//! complete intersections.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fan::{complete_fan, refine, weil_divisor, PLFunction, WeightedFan};
use crate::lattice::quotient;
use crate::linalg;
use crate::polytope::{mixed_volume, LatticePolytope};
use crate::tci::{
    full_dim_connectivity, is_complete, normal_fan, restrict_function, restrict_polytope,
};
use crate::tci::{BoundaryData, TropicalCI};

/// A term `(dm_1)^a_1 ... (dm_k)^a_k` of the expanded product, all `a_i >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialTerm {
    pub exponents: Vec<usize>,
    /// `(-1)^(sum (a_i + 1))`.
    pub sign: i32,
}

impl MonomialTerm {
    pub fn new(exponents: Vec<usize>) -> Self {
        let s: usize = exponents.iter().map(|a| a + 1).sum();
        MonomialTerm {
            exponents,
            sign: if s.is_multiple_of(2) { 1 } else { -1 },
        }
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().sum()
    }
}

/// Compositions of `total` into `parts` positive integers, in lexicographic
/// order.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(total: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if total < parts {
            return;
        }
        for a in 1..=total - (parts - 1) {
            cur.push(a);
            rec(total - a, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Monomial terms of total degree `d` in `k` factors.
pub fn monomial_terms(k: usize, d: usize) -> Vec<MonomialTerm> {
    compositions(d, k)
        .into_iter()
        .map(MonomialTerm::new)
        .collect()
}

/// Iterated corner loci sharing common prefixes.
struct Evaluator<'a> {
    t: &'a TropicalCI,
    memo: HashMap<Vec<usize>, WeightedFan>,
}

impl<'a> Evaluator<'a> {
    fn new(t: &'a TropicalCI) -> Self {
        Evaluator {
            t,
            memo: HashMap::new(),
        }
    }

    /// The cycle obtained by applying `delta m_{seq[0]}`, then
    /// `delta m_{seq[1]}`, and so on, to `R^n`.
    fn apply(&mut self, seq: &[usize]) -> Result<WeightedFan> {
        let n = self.t.rank();
        if seq.is_empty() {
            return Ok(complete_fan(n));
        }
        if let Some(f) = self.memo.get(seq) {
            return Ok(f.clone());
        }
        let prev = self.apply(&seq[..seq.len() - 1])?;
        let i = seq[seq.len() - 1];
        let m = &self.t.functions()[i];
        let out = if prev.is_empty() {
            WeightedFan::empty(n, prev.dim().saturating_sub(1))
        } else {
            let carrier = if seq.len() == 1 && is_complete(m.carrier()) {
                m.carrier().clone()
            } else {
                refine(&prev, m.carrier()).map_err(|e| Error::UndefinedFunction {
                    index: i,
                    detail: e.to_string(),
                })?
            };
            weil_divisor(m, &carrier).map_err(|e| match e {
                Error::NotLinear(d) => Error::UndefinedFunction {
                    index: i,
                    detail: d,
                },
                other => other,
            })?
        };
        self.memo.insert(seq.to_vec(), out.clone());
        Ok(out)
    }

    fn monomial(&mut self, exponents: &[usize]) -> Result<WeightedFan> {
        let seq: Vec<usize> = exponents
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(i, a))
            .collect();
        self.apply(&seq)
    }
}

fn check_monomial(t: &TropicalCI, exponents: &[usize]) -> Result<()> {
    if t.is_degenerate() {
        return Err(Error::Degenerate);
    }
    if exponents.len() != t.k() {
        return Err(Error::WrongCount {
            expected: t.k(),
            got: exponents.len(),
        });
    }
    if exponents.contains(&0) || exponents.iter().sum::<usize>() > t.rank() {
        return Err(Error::Unsupported(format!("exponents {exponents:?}")));
    }
    Ok(())
}

/// `delta m_k^a_k ... delta m_1^a_1 R^n`, innermost first.
pub fn evaluate_monomial(t: &TropicalCI, exponents: &[usize]) -> Result<WeightedFan> {
    check_monomial(t, exponents)?;
    Evaluator::new(t).monomial(exponents)
}

fn to_integer(x: BigRational) -> Result<BigInt> {
    if !x.is_integer() {
        return Err(Error::NonInteger(x.to_string()));
    }
    Ok(x.to_integer())
}

fn signed(sign: i32, x: BigRational) -> BigRational {
    if sign < 0 {
        -x
    } else {
        x
    }
}

/// The zero-dimensional part of the expanded product plus the defect.
pub fn euler_direct(t: &TropicalCI) -> Result<BigInt> {
    if t.is_degenerate() {
        return Err(Error::Degenerate);
    }
    let mut ev = Evaluator::new(t);
    let mut total = BigRational::zero();
    for term in monomial_terms(t.k(), t.rank()) {
        let f = ev.monomial(&term.exponents)?;
        total += signed(term.sign, f.degree());
    }
    Ok(to_integer(total)? + t.defect())
}

/// The same expansion with every product evaluated as a mixed volume.
pub fn euler_bkk(ps: &[LatticePolytope], n: usize) -> Result<BigInt> {
    if ps.len() > n {
        return Err(Error::WrongCount {
            expected: n,
            got: ps.len(),
        });
    }
    let mut total = BigInt::zero();
    for term in monomial_terms(ps.len(), n) {
        let args: Vec<LatticePolytope> = term
            .exponents
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(ps[i].clone(), a))
            .collect();
        let mv = mixed_volume(&args)?;
        if term.sign < 0 {
            total -= mv;
        } else {
            total += mv;
        }
    }
    Ok(total)
}

/// Components of the tropical characteristic class by codimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharClass {
    pub components: BTreeMap<usize, WeightedFan>,
}

pub fn char_class(t: &TropicalCI) -> Result<CharClass> {
    if t.is_degenerate() {
        return Err(Error::Degenerate);
    }
    let n = t.rank();
    let mut ev = Evaluator::new(t);
    let mut components = BTreeMap::new();
    for d in t.k()..=n {
        let mut sum = WeightedFan::empty(n, n - d);
        for term in monomial_terms(t.k(), d) {
            let f = ev.monomial(&term.exponents)?;
            let f = if term.sign < 0 { f.neg() } else { f };
            sum = sum.add(&f)?;
        }
        components.insert(d, sum);
    }
    Ok(CharClass { components })
}

/// Betti numbers of a complete intersection whose Newton polyhedra are
/// full-dimensional: those of the torus below the middle dimension, zero
/// above it, and the middle one from the Euler characteristic.
pub fn betti_numbers(t: &TropicalCI, b: &BoundaryData) -> Result<Vec<BigInt>> {
    let report = full_dim_connectivity(b);
    if !report.holds {
        return Err(Error::Unsupported(
            "some Newton polyhedron is not full-dimensional".into(),
        ));
    }
    let n = t.rank();
    let dim = n - t.k();
    let chi = euler_direct(t)?;
    let mut betti: Vec<BigInt> = (0..dim).map(|i| linalg::binomial(n, i)).collect();
    let lower: BigInt = betti
        .iter()
        .enumerate()
        .map(|(i, b)| if i % 2 == 0 { b.clone() } else { -b })
        .sum();
    let top = if dim.is_multiple_of(2) {
        &chi - lower
    } else {
        lower - &chi
    };
    if top.is_negative() {
        return Err(Error::Inconsistent(format!(
            "middle Betti number would be {top}"
        )));
    }
    betti.push(top);
    Ok(betti)
}

#[derive(Clone, Debug)]
struct Slot {
    func: PLFunction,
    majorant: LatticePolytope,
    tilde: bool,
}

impl Slot {
    fn tilde(p: LatticePolytope) -> Result<Self> {
        let n = p.rank();
        let func = PLFunction::support_function(&p, normal_fan(std::slice::from_ref(&p), n)?)?;
        Ok(Slot {
            func,
            majorant: p,
            tilde: true,
        })
    }

    fn as_tilde(&self) -> Result<Self> {
        if self.tilde {
            return Ok(self.clone());
        }
        Slot::tilde(self.majorant.clone())
    }
}

/// Euler characteristic through the recursion over rays: the value for the
/// majorants minus, for every function and every ray `l` where it differs
/// from the support function of its majorant, the difference times an
/// alternating sum of Euler characteristics of the intersections restricted
/// to `l`.
///
/// Domination `m_i <= h_{P_i}` is checked on the rays of a common refinement
/// before recursing.
pub fn euler_recursive(t: &TropicalCI, majorants: &[LatticePolytope]) -> Result<BigInt> {
    if t.is_degenerate() {
        return Err(Error::Degenerate);
    }
    let n = t.rank();
    if majorants.len() != t.k() {
        return Err(Error::WrongCount {
            expected: t.k(),
            got: majorants.len(),
        });
    }
    let mut slots = Vec::with_capacity(t.k());
    for (i, (m, p)) in t.functions().iter().zip(majorants).enumerate() {
        if p.rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: p.rank(),
            });
        }
        if p.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        let g = refine(&t.fans()[i], m.carrier())?;
        let g = refine(&g, &normal_fan(std::slice::from_ref(p), n)?)?;
        for l in g.rays() {
            if BigRational::from_integer(p.support_value(&l)?) < m.eval(&l)? {
                return Err(Error::DominationViolated {
                    index: i,
                    ray: l.to_string(),
                });
            }
        }
        slots.push(Slot {
            func: m.clone(),
            majorant: p.clone(),
            tilde: false,
        });
    }
    to_integer(recurse(n, &slots)? + BigRational::from_integer(t.defect().clone()))
}

fn recurse(n: usize, slots: &[Slot]) -> Result<BigRational> {
    let c = slots.len();
    if c > n {
        return Ok(BigRational::zero());
    }
    if c == 0 {
        return Ok(if n == 0 {
            BigRational::one()
        } else {
            BigRational::zero()
        });
    }
    let funcs: Vec<PLFunction> = slots.iter().map(|s| s.func.clone()).collect();
    let t = TropicalCI::new(n, funcs, BigInt::zero())?;
    if c == n {
        return Ok(if t.is_degenerate() {
            BigRational::zero()
        } else {
            t.tropical_fan().degree()
        });
    }
    let majorants: Vec<LatticePolytope> = slots.iter().map(|s| s.majorant.clone()).collect();
    let mut e = BigRational::from_integer(euler_bkk(&majorants, n)?);
    let tildes = slots
        .iter()
        .map(Slot::as_tilde)
        .collect::<Result<Vec<_>>>()?;
    // The sum runs over a fan on which every function of the system is linear.
    let mut carriers: Vec<&WeightedFan> = slots.iter().map(|s| s.func.carrier()).collect();
    carriers.extend(
        slots
            .iter()
            .zip(&tildes)
            .filter(|(s, _)| !s.tilde)
            .map(|(_, t)| t.func.carrier()),
    );
    for (i, slot) in slots.iter().enumerate() {
        if slot.tilde || i >= t.fans().len() {
            continue;
        }
        let tilde = &tildes[i];
        let mut g = t.fans()[i].clone();
        for c in &carriers {
            g = refine(&g, c)?;
        }
        for l in g.rays() {
            let diff =
                BigRational::from_integer(slot.majorant.support_value(&l)?) - slot.func.eval(&l)?;
            if diff.is_zero() {
                continue;
            }
            let q = quotient(&l)?;
            let restrict = |s: &Slot| -> Result<Slot> {
                let majorant = restrict_polytope(&s.majorant, &l, &q)?;
                if s.tilde {
                    Slot::tilde(majorant)
                } else {
                    Ok(Slot {
                        func: restrict_function(&s.func, &l, &q)?,
                        majorant,
                        tilde: false,
                    })
                }
            };
            let mut a = Vec::with_capacity(c + 1);
            for s in &slots[..i] {
                a.push(restrict(s)?);
            }
            for s in &slots[i + 1..] {
                a.push(restrict(&s.as_tilde()?)?);
            }
            let actual = restrict(slot)?;
            let tilde_l = restrict(tilde)?;
            let with = |extra: &[&Slot]| -> Vec<Slot> {
                let mut v = a.clone();
                v.extend(extra.iter().map(|s| (*s).clone()));
                v
            };
            let bracket = recurse(n - 1, &a)?
                - recurse(n - 1, &with(&[&actual]))?
                - recurse(n - 1, &with(&[&tilde_l]))?
                + recurse(n - 1, &with(&[&actual, &tilde_l]))?;
            e -= diff * bracket;
        }
    }
    Ok(e)
}
