//! Finite abelian groups written as products of prime-power cyclic groups,
//! together with diagonal involutive automorphisms and the two subgroups
//! they determine: the fixed points `A'` and the twisted commutators `B`.
//!
//! Elements are exponent vectors. Coordinates are 0-based and always kept
//! reduced modulo the factor's modulus. The enumeration order of a group is
//! mixed-radix ascending with the last coordinate varying fastest; every
//! "first" or "minimal" element elsewhere in the crate refers to this order.

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, is_prime};
use crate::error::{Error, Result};

/// A cyclic group of prime-power order `p^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicFactor {
    pub p: u64,
    pub e: u32,
    pub m: u64,
}

impl CyclicFactor {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if e == 0 {
            return Err(Error::ZeroExponent { p, e });
        }
        Ok(CyclicFactor { p, e, m: p.pow(e) })
    }
}

/// An element of an [`AbelianGroup`], stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbElem(pub Vec<u64>);

impl AbElem {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&t| t == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    factors: Vec<CyclicFactor>,
    lambda: usize,
    mu: usize,
    order: u64,
}

impl AbelianGroup {
    /// Builds `C_{p1^e1} x ... x C_{pk^ek}`. Factors with `p = 2` are moved to
    /// the front (stable), so `lambda` counts the leading 2-factors.
    pub fn new(factor_list: &[(u64, u32)]) -> Result<Self> {
        let factors = factor_list
            .iter()
            .map(|&(p, e)| CyclicFactor::new(p, e))
            .collect::<Result<Vec<_>>>()?;
        Self::from_factors(factors)
    }

    pub fn from_factors(mut factors: Vec<CyclicFactor>) -> Result<Self> {
        factors.sort_by_key(|f| f.p != 2);
        let order = factors.iter().map(|f| f.m).product::<u64>();
        if factors.is_empty() || order < 3 {
            return Err(Error::OrderTooSmall(order));
        }
        let lambda = factors.iter().filter(|f| f.p == 2).count();
        let mu = factors.len() - lambda;
        Ok(AbelianGroup {
            factors,
            lambda,
            mu,
            order,
        })
    }

    pub fn factors(&self) -> &[CyclicFactor] {
        &self.factors
    }

    pub fn moduli(&self) -> Vec<u64> {
        self.factors.iter().map(|f| f.m).collect()
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn identity(&self) -> AbElem {
        AbElem(vec![0; self.rank()])
    }

    /// Builds an element from raw exponents, reducing each modulo its factor.
    pub fn elem(&self, coords: &[u64]) -> Result<AbElem> {
        self.check_len(coords.len())?;
        Ok(AbElem(
            coords
                .iter()
                .zip(&self.factors)
                .map(|(&t, f)| t % f.m)
                .collect(),
        ))
    }

    fn check_len(&self, got: usize) -> Result<()> {
        if got != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got,
            });
        }
        Ok(())
    }

    fn check(&self, x: &AbElem) -> Result<()> {
        self.check_len(x.0.len())?;
        for (index, (&value, f)) in x.0.iter().zip(&self.factors).enumerate() {
            if value >= f.m {
                return Err(Error::CoordinateOutOfRange {
                    index,
                    value,
                    modulus: f.m,
                });
            }
        }
        Ok(())
    }

    /// Group operation (written additively on exponents).
    pub fn mul(&self, x: &AbElem, y: &AbElem) -> Result<AbElem> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.add(x, y))
    }

    pub fn inv(&self, x: &AbElem) -> Result<AbElem> {
        self.check(x)?;
        Ok(self.neg(x))
    }

    pub(crate) fn add(&self, x: &AbElem, y: &AbElem) -> AbElem {
        AbElem(
            x.0.iter()
                .zip(&y.0)
                .zip(&self.factors)
                .map(|((&a, &b), f)| (a + b) % f.m)
                .collect(),
        )
    }

    pub(crate) fn neg(&self, x: &AbElem) -> AbElem {
        AbElem(
            x.0.iter()
                .zip(&self.factors)
                .map(|(&a, f)| (f.m - a) % f.m)
                .collect(),
        )
    }

    /// Element order: lcm over coordinates of `m / gcd(t, m)`.
    pub fn order_of(&self, x: &AbElem) -> u64 {
        x.0.iter()
            .zip(&self.factors)
            .map(|(&t, f)| f.m / gcd(t, f.m))
            .fold(1, crate::arith::lcm)
    }

    /// Mixed-radix position of `x` in the enumeration order.
    pub fn index_of(&self, x: &AbElem) -> usize {
        x.0.iter()
            .zip(&self.factors)
            .fold(0u64, |acc, (&t, f)| acc * f.m + t) as usize
    }

    pub fn element(&self, mut index: usize) -> AbElem {
        let mut coords = vec![0; self.rank()];
        for (c, f) in coords.iter_mut().zip(&self.factors).rev() {
            *c = index as u64 % f.m;
            index /= f.m as usize;
        }
        AbElem(coords)
    }

    pub fn elements(&self) -> impl Iterator<Item = AbElem> + '_ {
        (0..self.order as usize).map(move |i| self.element(i))
    }
}

/// A diagonal automorphism `a_i -> a_i^{s_i}` of order exactly two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Involution {
    s: Vec<u64>,
}

impl Involution {
    pub fn new(group: &AbelianGroup, s: &[u64]) -> Result<Self> {
        group.check_len(s.len())?;
        let mut all_one = true;
        for (index, (&si, f)) in s.iter().zip(group.factors()).enumerate() {
            if si >= f.m {
                return Err(Error::CoordinateOutOfRange {
                    index,
                    value: si,
                    modulus: f.m,
                });
            }
            if (si * si) % f.m != 1 % f.m {
                return Err(Error::NotInvolution {
                    index,
                    s: si,
                    modulus: f.m,
                });
            }
            all_one &= si % f.m == 1 % f.m;
        }
        if all_one {
            return Err(Error::IdentityAutomorphism);
        }
        Ok(Involution { s: s.to_vec() })
    }

    /// Builds the automorphism from the images of the generators `a_i`.
    /// Images that leave the cyclic factor of their generator are rejected.
    pub fn from_images(group: &AbelianGroup, images: &[AbElem]) -> Result<Self> {
        group.check_len(images.len())?;
        let mut s = Vec::with_capacity(images.len());
        for (index, img) in images.iter().enumerate() {
            group.check(img)?;
            if img.0.iter().enumerate().any(|(j, &t)| j != index && t != 0) {
                return Err(Error::NonDiagonalAutomorphism { index });
            }
            s.push(img.0[index]);
        }
        Self::new(group, &s)
    }

    /// Inversion `a -> a^{-1}`, used by the generalized dihedral and dicyclic families.
    pub fn inversion(group: &AbelianGroup) -> Result<Self> {
        let s: Vec<u64> = group.factors().iter().map(|f| f.m - 1).collect();
        Self::new(group, &s)
    }

    pub fn s(&self) -> &[u64] {
        &self.s
    }

    pub fn apply(&self, group: &AbelianGroup, x: &AbElem) -> AbElem {
        AbElem(
            x.0.iter()
                .zip(&self.s)
                .zip(group.factors())
                .map(|((&t, &s), f)| (t * s) % f.m)
                .collect(),
        )
    }
}

/// The numbers `d_i = gcd(s_i - 1, m_i)`, `n_i = m_i / d_i` and `d = prod d_i`.
///
/// `A' = prod C(d_i)` is the set of `a` with `n_i | t_i` for every `i`, and
/// `B = prod C(n_i)` the set with `d_i | t_i`. So `|A'| = d` and `|B| = n / d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedData {
    pub d_vec: Vec<u64>,
    pub n_vec: Vec<u64>,
    pub d: u64,
}

impl FixedData {
    pub fn new(group: &AbelianGroup, f: &Involution) -> Self {
        let d_vec: Vec<u64> = f
            .s()
            .iter()
            .zip(group.factors())
            .map(|(&s, fac)| gcd((s + fac.m - 1) % fac.m, fac.m))
            .collect();
        let n_vec = d_vec
            .iter()
            .zip(group.factors())
            .map(|(&d, fac)| fac.m / d)
            .collect();
        let d = d_vec.iter().product();
        FixedData { d_vec, n_vec, d }
    }

    pub fn is_fixed(&self, a: &AbElem) -> bool {
        a.0.iter().zip(&self.n_vec).all(|(&t, &n)| t % n == 0)
    }

    pub fn in_b(&self, a: &AbElem) -> bool {
        a.0.iter().zip(&self.d_vec).all(|(&t, &d)| t % d == 0)
    }

    pub fn fixed_order(&self) -> u64 {
        self.d
    }

    pub fn b_order(&self) -> u64 {
        self.n_vec.iter().product()
    }

    /// Mixed-radix tuples `0 <= t_i < d_i`: one representative per coset of `B`.
    pub fn coset_reps(&self) -> Vec<AbElem> {
        let mut out = vec![AbElem(Vec::new())];
        for &d in &self.d_vec {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..d).map(move |t| {
                        let mut v = prefix.0.clone();
                        v.push(t);
                        AbElem(v)
                    })
                })
                .collect();
        }
        out
    }

    /// Elements of `B` in enumeration order.
    pub fn b_elements(&self, group: &AbelianGroup) -> Vec<AbElem> {
        group.elements().filter(|a| self.in_b(a)).collect()
    }
}

/// All abelian groups of the given order, one per isomorphism type, in the
/// prime-power form used throughout (2-factors first).
pub fn abelian_groups_of_order(order: u64) -> Vec<AbelianGroup> {
    let mut lists: Vec<Vec<(u64, u32)>> = vec![Vec::new()];
    for (p, k) in crate::arith::factorize(order) {
        let parts = crate::arith::partitions(k);
        lists = lists
            .into_iter()
            .flat_map(|prefix| {
                parts.iter().map(move |part| {
                    let mut v = prefix.clone();
                    v.extend(part.iter().rev().map(|&e| (p, e)));
                    v
                })
            })
            .collect();
    }
    lists
        .iter()
        .filter_map(|l| AbelianGroup::new(l).ok())
        .collect()
}

/// Every diagonal involution of `group`: all `s` with `s_i^2 = 1 (mod m_i)`
/// except the identity.
pub fn diagonal_involutions(group: &AbelianGroup) -> Vec<Involution> {
    let mut choices: Vec<Vec<u64>> = vec![Vec::new()];
    for f in group.factors() {
        let roots: Vec<u64> = (0..f.m).filter(|&s| (s * s) % f.m == 1 % f.m).collect();
        choices = choices
            .into_iter()
            .flat_map(|prefix| {
                roots.iter().map(move |&r| {
                    let mut v = prefix.clone();
                    v.push(r);
                    v
                })
            })
            .collect();
    }
    choices
        .iter()
        .filter_map(|s| Involution::new(group, s).ok())
        .collect()
}
