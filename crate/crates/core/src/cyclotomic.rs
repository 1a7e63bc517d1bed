//! Formal integer combinations of `M`-th roots of unity.
//!
//! A [`RootSum`] is `sum_k c_k * zeta_M^k` with exponents reduced mod `M` and
//! zero coefficients dropped. Structural equality compares term tables; sums
//! that vanish only through a cyclotomic relation (for example
//! `1 + zeta_3 + zeta_3^2`) are caught either numerically or by
//! [`RootSum::reduced`], which rewrites the sum in the power basis of
//! `Q(zeta_M)` modulo the cyclotomic polynomial.

use std::collections::{BTreeMap, HashMap};
use std::f64::consts::PI;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSum {
    order: u64,
    terms: BTreeMap<u64, i64>,
}

impl RootSum {
    pub fn zero(order: u64) -> Self {
        assert!(order > 0, "root order must be positive");
        RootSum {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_int(order: u64, c: i64) -> Self {
        let mut out = Self::zero(order);
        out.add_term(0, c);
        out
    }

    pub fn one(order: u64) -> Self {
        Self::from_int(order, 1)
    }

    /// `zeta_order^k`.
    pub fn root(order: u64, k: i64) -> Self {
        let mut out = Self::zero(order);
        out.add_term(k.rem_euclid(order as i64) as u64, 1);
        out
    }

    /// `zeta_denom^k` written over `zeta_order`; `denom` must divide `order`.
    pub fn root_of(order: u64, denom: u64, k: i64) -> Self {
        assert!(
            order.is_multiple_of(denom),
            "{denom} does not divide {order}"
        );
        Self::root(order, k * (order / denom) as i64)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// `(exponent, coefficient)` pairs with ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, k: u64, c: i64) {
        if c == 0 {
            return;
        }
        let k = k % self.order;
        let entry = self.terms.entry(k).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&k);
        }
    }

    fn same_order(&self, other: &RootSum) -> Result<()> {
        if self.order != other.order {
            return Err(Error::MixedRootOrders {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &RootSum) -> Result<RootSum> {
        self.same_order(other)?;
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &RootSum) -> Result<RootSum> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RootSum) -> Result<RootSum> {
        self.same_order(other)?;
        let mut out = Self::zero(self.order);
        for (k1, c1) in self.terms() {
            for (k2, c2) in other.terms() {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> RootSum {
        self.scale(-1)
    }

    pub fn scale(&self, c: i64) -> RootSum {
        let mut out = Self::zero(self.order);
        for (k, v) in self.terms() {
            out.add_term(k, v * c);
        }
        out
    }

    /// Complex conjugation: `zeta^k -> zeta^-k`.
    pub fn conjugate(&self) -> RootSum {
        let mut out = Self::zero(self.order);
        for (k, c) in self.terms() {
            out.add_term((self.order - k) % self.order, c);
        }
        out
    }

    pub fn eval(&self) -> Complex64 {
        self.terms()
            .map(|(k, c)| {
                let theta = 2.0 * PI * k as f64 / self.order as f64;
                Complex64::from_polar(c as f64, theta)
            })
            .sum()
    }

    /// The nearest integer, if the value is within `tol` of it and the
    /// imaginary part is below `tol`.
    pub fn is_integer(&self, tol: f64) -> Option<i64> {
        let z = self.eval();
        let r = z.re.round();
        ((z.re - r).abs() < tol && z.im.abs() < tol).then_some(r as i64)
    }

    pub fn approx_eq(&self, other: &RootSum, tol: f64) -> bool {
        (self.eval() - other.eval()).norm() < tol
    }

    /// Canonical form: coefficients on `1, zeta, ..., zeta^{phi(M)-1}` after
    /// reduction by the `M`-th cyclotomic polynomial. Two sums are equal in
    /// `Q(zeta_M)` exactly when their reduced forms are equal.
    pub fn reduced(&self) -> RootSum {
        let phi = cyclotomic_polynomial(self.order);
        let deg = phi.len() - 1;
        let mut coeffs = vec![0i64; self.order as usize];
        for (k, c) in self.terms() {
            coeffs[k as usize] += c;
        }
        for top in (deg..coeffs.len()).rev() {
            let c = coeffs[top];
            if c == 0 {
                continue;
            }
            let shift = top - deg;
            for (i, &p) in phi.iter().enumerate() {
                coeffs[shift + i] -= c * p;
            }
        }
        let mut out = Self::zero(self.order);
        for (k, &c) in coeffs.iter().enumerate().take(deg) {
            out.add_term(k as u64, c);
        }
        out
    }

    /// `Some(c)` when the sum equals the rational integer `c` exactly.
    pub fn exact_integer(&self) -> Option<i64> {
        let r = self.reduced();
        match r.terms.len() {
            0 => Some(0),
            1 => r.terms.get(&0).copied(),
            _ => None,
        }
    }

    pub fn exactly_equals(&self, other: &RootSum) -> bool {
        self.order == other.order
            && self
                .sub(other)
                .map(|d| d.reduced().is_zero())
                .unwrap_or(false)
    }
}

impl fmt::Display for RootSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let c = c.abs();
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (k, 1) => write!(f, "z{}^{k}", self.order)?,
                (k, c) => write!(f, "{c}*z{}^{k}", self.order)?,
            }
        }
        Ok(())
    }
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Coefficients of `Phi_m`, constant term first.
pub fn cyclotomic_polynomial(m: u64) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 = prod_{k | m} Phi_k
    let mut p = vec![0i64; m as usize + 1];
    p[0] = -1;
    p[m as usize] = 1;
    for k in (1..m).filter(|k| m.is_multiple_of(*k)) {
        p = poly_div_exact(&p, &cyclotomic_polynomial(k));
    }
    cache.lock().unwrap().insert(m, p.clone());
    p
}
