//! The group `<A, b | b^2 = y, b a b^-1 = f(a)>` and its named families.
//!
//! Elements are kept in the normal form `a * b^beta` with `beta` in {0, 1}.
//! Element `(a, beta)` has index `beta * n + index_of(a)`, so the subgroup
//! `A` comes first and the coset `Ab` second.

use serde::{Deserialize, Serialize};

use crate::abelian::{AbElem, AbelianGroup, FixedData, Involution};
use crate::arith::{factorize, gcd};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct D2Elem {
    pub a: AbElem,
    pub beta: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct D2Group {
    abelian: AbelianGroup,
    f: Involution,
    y: AbElem,
    fixed: FixedData,
}

impl D2Group {
    pub fn new(abelian: AbelianGroup, f: Involution, y: AbElem) -> Result<Self> {
        let y = abelian.elem(y.coords())?;
        if f.apply(&abelian, &y) != y {
            return Err(Error::YNotFixed);
        }
        let fixed = FixedData::new(&abelian, &f);
        Ok(D2Group {
            abelian,
            f,
            y,
            fixed,
        })
    }

    /// Validates `s` and `y` against `factors` and builds the group. The
    /// coordinates of `s` and `y` follow the order of `factors` as given.
    pub fn from_parts(factors: &[(u64, u32)], s: &[u64], y: &[u64]) -> Result<Self> {
        for v in [s, y] {
            if v.len() != factors.len() {
                return Err(Error::DimensionMismatch {
                    expected: factors.len(),
                    got: v.len(),
                });
            }
        }
        let abelian = AbelianGroup::new(factors)?;
        let f = Involution::new(&abelian, &reorder_like_group(factors, s))?;
        let y = abelian.elem(&reorder_like_group(factors, y))?;
        Self::new(abelian, f, y)
    }

    pub fn abelian(&self) -> &AbelianGroup {
        &self.abelian
    }

    pub fn involution(&self) -> &Involution {
        &self.f
    }

    pub fn y(&self) -> &AbElem {
        &self.y
    }

    pub fn fixed(&self) -> &FixedData {
        &self.fixed
    }

    /// `n = |A|`.
    pub fn n(&self) -> u64 {
        self.abelian.order()
    }

    /// `d = |A'| = [A : B]`.
    pub fn d(&self) -> u64 {
        self.fixed.d
    }

    pub fn order(&self) -> usize {
        2 * self.abelian.order() as usize
    }

    pub fn identity(&self) -> D2Elem {
        D2Elem {
            a: self.abelian.identity(),
            beta: false,
        }
    }

    /// The generator `b = (0, 1)`.
    pub fn b(&self) -> D2Elem {
        D2Elem {
            a: self.abelian.identity(),
            beta: true,
        }
    }

    pub fn apply_f(&self, a: &AbElem) -> AbElem {
        self.f.apply(&self.abelian, a)
    }

    /// `(a, x)(a', x') = (a + f^x(a') + [x and x'] y, x xor x')`.
    pub fn mul(&self, g: &D2Elem, h: &D2Elem) -> D2Elem {
        let ab = &self.abelian;
        let twisted = if g.beta {
            self.apply_f(&h.a)
        } else {
            h.a.clone()
        };
        let mut a = ab.add(&g.a, &twisted);
        if g.beta && h.beta {
            a = ab.add(&a, &self.y);
        }
        D2Elem {
            a,
            beta: g.beta ^ h.beta,
        }
    }

    pub fn inv(&self, g: &D2Elem) -> D2Elem {
        let ab = &self.abelian;
        if g.beta {
            // (x, 1)(a, 1) = (x + f(a) + y, 0), so x = -f(a) - y.
            let a = ab.neg(&ab.add(&self.apply_f(&g.a), &self.y));
            D2Elem { a, beta: true }
        } else {
            D2Elem {
                a: ab.neg(&g.a),
                beta: false,
            }
        }
    }

    pub fn index_of(&self, g: &D2Elem) -> usize {
        let base = self.abelian.index_of(&g.a);
        if g.beta {
            base + self.abelian.order() as usize
        } else {
            base
        }
    }

    pub fn element(&self, index: usize) -> D2Elem {
        let n = self.abelian.order() as usize;
        D2Elem {
            a: self.abelian.element(index % n),
            beta: index >= n,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = D2Elem> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }

    pub fn is_abelian_part(&self, g: &D2Elem) -> bool {
        !g.beta
    }

    /// Full multiplication table on element indices.
    pub fn cayley(&self) -> CayleyTable {
        let els: Vec<D2Elem> = self.elements().collect();
        let size = els.len();
        let mut mul = Vec::with_capacity(size * size);
        for g in &els {
            for h in &els {
                mul.push(self.index_of(&self.mul(g, h)));
            }
        }
        let inv = els.iter().map(|g| self.index_of(&self.inv(g))).collect();
        CayleyTable { size, mul, inv }
    }
}

/// Multiplication table on element indices (identity is index 0).
#[derive(Debug, Clone)]
pub struct CayleyTable {
    size: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl CayleyTable {
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mul[g * self.size + h]
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    /// `h g h^-1`.
    #[inline]
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inv[h])
    }

    pub fn centralizer_order(&self, g: usize) -> usize {
        (0..self.size)
            .filter(|&h| self.mul(g, h) == self.mul(h, g))
            .count()
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }
}

/// One of the named families, or a general `(A, s, y)` description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    /// `Dih(A)`: `f(a) = a^-1`, `y = e`.
    Dihedral { factors: Vec<(u64, u32)> },
    /// `Dic(A, y)`: `f(a) = a^-1`, `y` of order two.
    Dicyclic {
        factors: Vec<(u64, u32)>,
        y: Vec<u64>,
    },
    /// `<a, b | a^n, b^2 = a^t, b a b^-1 = a^s>`.
    G2 { n: u64, s: u64, t: u64 },
}

pub fn make_family(spec: &FamilySpec) -> Result<D2Group> {
    match spec {
        FamilySpec::Dihedral { factors } => {
            let abelian = AbelianGroup::new(factors)?;
            let f = Involution::inversion(&abelian)?;
            let y = abelian.identity();
            D2Group::new(abelian, f, y)
        }
        FamilySpec::Dicyclic { factors, y } => {
            let abelian = AbelianGroup::new(factors)?;
            let f = Involution::inversion(&abelian)?;
            let y = dicyclic_y(&abelian, factors, y)?;
            D2Group::new(abelian, f, y)
        }
        FamilySpec::G2 { n, s, t } => make_g2(*n, *s, *t),
    }
}

/// Maps the user's `y` coordinates (in input factor order) to the group's
/// canonical order and checks it has order exactly two.
fn dicyclic_y(abelian: &AbelianGroup, factors: &[(u64, u32)], y: &[u64]) -> Result<AbElem> {
    if y.len() != factors.len() {
        return Err(Error::DimensionMismatch {
            expected: factors.len(),
            got: y.len(),
        });
    }
    let y = abelian.elem(&reorder_like_group(factors, y))?;
    if abelian.order_of(&y) != 2 {
        return Err(Error::BadDicyclicY);
    }
    let involutions = abelian
        .elements()
        .filter(|a| abelian.order_of(a) == 2)
        .count();
    if involutions > 1 {
        log::warn!(
            "A has {involutions} elements of order 2; the dicyclic group for this y is not the unique one"
        );
    }
    Ok(y)
}

/// Applies to `values` the stable reordering that puts 2-factors first.
pub fn reorder_like_group(factors: &[(u64, u32)], values: &[u64]) -> Vec<u64> {
    let mut idx: Vec<usize> = (0..factors.len()).collect();
    idx.sort_by_key(|&i| factors[i].0 != 2);
    idx.iter().map(|&i| values[i]).collect()
}

fn make_g2(n: u64, s: u64, t: u64) -> Result<D2Group> {
    if n < 3 {
        return Err(Error::OrderTooSmall(n));
    }
    let s = s % n;
    let t = t % n;
    if (s * s) % n != 1 {
        return Err(Error::BadG2Params(format!(
            "s^2 = {} mod {n}, not 1",
            (s * s) % n
        )));
    }
    if s == 1 {
        return Err(Error::BadG2Params(format!("s = 1 mod {n}")));
    }
    if gcd(s, n) != 1 {
        return Err(Error::BadG2Params(format!("gcd(s, n) = {}", gcd(s, n))));
    }
    if !(t * ((s + n - 1) % n)).is_multiple_of(n) {
        return Err(Error::BadG2Params(format!("t(s - 1) != 0 mod {n}")));
    }
    let factors = factorize(n);
    let abelian = AbelianGroup::new(&factors)?;
    let moduli = abelian.moduli();
    let s_vec: Vec<u64> = moduli.iter().map(|m| s % m).collect();
    let f = Involution::new(&abelian, &s_vec)?;
    let y = cyclic_to_crt(&abelian, t);
    D2Group::new(abelian, f, y)
}

/// `a^k` in prime-power coordinates of a cyclic group.
pub fn cyclic_to_crt(abelian: &AbelianGroup, k: u64) -> AbElem {
    AbElem(abelian.moduli().iter().map(|m| k % m).collect())
}

/// Inverse of [`cyclic_to_crt`] for a cyclic `A` (pairwise coprime moduli).
pub fn crt_to_cyclic(abelian: &AbelianGroup, x: &AbElem) -> u64 {
    let n = abelian.order();
    (0..n)
        .find(|&k| cyclic_to_crt(abelian, k) == *x)
        .expect("moduli are pairwise coprime")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4(s: u64, y: u64) -> Result<D2Group> {
        D2Group::from_parts(&[(2, 2)], &[s], &[y])
    }

    /// Group built by closing the presentation on words, independent of the
    /// normal-form rule: elements are (k, beta) for a^k b^beta and the
    /// product is evaluated by literally moving b past a^k' one step at a time.
    fn presentation_product(n: u64, s: u64, t: u64, g: (u64, u64), h: (u64, u64)) -> (u64, u64) {
        let (mut k, mut beta) = g;
        // multiply by a^{h.0}: each a passes through b^beta becoming a^{s^beta}
        for _ in 0..h.0 {
            let step = if beta == 1 { s } else { 1 };
            k = (k + step) % n;
        }
        for _ in 0..h.1 {
            if beta == 1 {
                k = (k + t) % n;
                beta = 0;
            } else {
                beta = 1;
            }
        }
        (k, beta)
    }

    #[test]
    fn make_d2_examples() {
        let d4 = c4(3, 0).unwrap();
        assert_eq!(d4.order(), 8);
        let q8 = c4(3, 2).unwrap();
        let a_b = D2Elem {
            a: AbElem(vec![1]),
            beta: true,
        };
        assert_eq!(
            q8.mul(&a_b, &a_b),
            D2Elem {
                a: AbElem(vec![2]),
                beta: false
            }
        );
        assert_eq!(d4.mul(&a_b, &a_b), d4.identity());
        assert_eq!(c4(3, 1), Err(Error::YNotFixed));
        assert_eq!(c4(1, 0), Err(Error::IdentityAutomorphism));
    }

    #[test]
    fn q8_is_quaternion() {
        let q8 = c4(3, 2).unwrap();
        let t = q8.cayley();
        let orders: Vec<usize> = (0..8).map(|g| t.element_order(g)).collect();
        // identity, a, a^2, a^3, then four elements of the coset
        assert_eq!(orders, vec![1, 4, 2, 4, 4, 4, 4, 4]);
        let d4 = c4(3, 0).unwrap().cayley();
        let orders: Vec<usize> = (0..8).map(|g| d4.element_order(g)).collect();
        assert_eq!(orders, vec![1, 4, 2, 4, 2, 2, 2, 2]);
    }

    #[test]
    fn normal_form_matches_presentation() {
        for (n, s, t) in [
            (8, 3, 0),
            (8, 3, 4),
            (8, 7, 4),
            (8, 5, 2),
            (12, 5, 6),
            (9, 8, 0),
        ] {
            let g = make_family(&FamilySpec::G2 { n, s, t }).unwrap();
            for gi in 0..2 * n {
                for hi in 0..2 * n {
                    let (gk, gb) = (gi % n, gi / n);
                    let (hk, hb) = (hi % n, hi / n);
                    let ge = D2Elem {
                        a: cyclic_to_crt(g.abelian(), gk),
                        beta: gb == 1,
                    };
                    let he = D2Elem {
                        a: cyclic_to_crt(g.abelian(), hk),
                        beta: hb == 1,
                    };
                    let p = g.mul(&ge, &he);
                    let expect = presentation_product(n, s, t, (gk, gb), (hk, hb));
                    assert_eq!(
                        (crt_to_cyclic(g.abelian(), &p.a), p.beta as u64),
                        expect,
                        "G2({n},{s},{t})"
                    );
                }
            }
        }
    }

    #[test]
    fn families() {
        let s3 = make_family(&FamilySpec::Dihedral {
            factors: vec![(3, 1)],
        })
        .unwrap();
        assert_eq!((s3.order(), s3.d()), (6, 1));

        let sd16 = make_family(&FamilySpec::G2 { n: 8, s: 3, t: 0 }).unwrap();
        assert_eq!((sd16.order(), sd16.d()), (16, 2));
        let table = sd16.cayley();
        assert_eq!(table.element_order(1), 8);
        assert!((0..16).any(|g| table.mul(1, g) != table.mul(g, 1)));

        let q8 = make_family(&FamilySpec::Dicyclic {
            factors: vec![(2, 2)],
            y: vec![2],
        })
        .unwrap();
        assert_eq!(q8.d(), 2);
        assert_eq!(
            make_family(&FamilySpec::Dicyclic {
                factors: vec![(2, 2)],
                y: vec![1],
            }),
            Err(Error::BadDicyclicY)
        );
        // y coordinates follow the caller's factor order
        let dic12 = make_family(&FamilySpec::Dicyclic {
            factors: vec![(3, 1), (2, 2)],
            y: vec![0, 2],
        })
        .unwrap();
        assert_eq!(dic12.y(), &AbElem(vec![2, 0]));
        assert_eq!(
            make_family(&FamilySpec::Dihedral {
                factors: vec![(2, 1), (2, 1)]
            }),
            Err(Error::IdentityAutomorphism)
        );
    }

    #[test]
    fn g2_validation() {
        let bad = |n, s, t| make_family(&FamilySpec::G2 { n, s, t });
        assert!(matches!(bad(8, 2, 0), Err(Error::BadG2Params(_))));
        assert!(matches!(bad(8, 1, 0), Err(Error::BadG2Params(_))));
        assert!(matches!(bad(8, 3, 1), Err(Error::BadG2Params(_))));
        assert!(bad(8, 3, 4).is_ok());
    }

    #[test]
    fn g2_cyclic_subgroup_is_faithful() {
        for (n, s, t) in [(12, 5, 0), (15, 4, 0), (24, 7, 0), (9, 8, 0)] {
            let g = make_family(&FamilySpec::G2 { n, s, t }).unwrap();
            let gen = cyclic_to_crt(g.abelian(), 1);
            assert!(gen.coords().iter().all(|&c| c == 1));
            assert_eq!(g.abelian().order_of(&gen), n);
        }
    }

    #[test]
    fn group_axioms_small_instances() {
        let groups = [
            c4(3, 0).unwrap(),
            c4(3, 2).unwrap(),
            make_family(&FamilySpec::G2 { n: 8, s: 3, t: 0 }).unwrap(),
            D2Group::from_parts(&[(2, 1), (2, 2)], &[1, 3], &[1, 0]).unwrap(),
            D2Group::from_parts(&[(3, 1), (3, 1)], &[1, 2], &[1, 0]).unwrap(),
        ];
        for g in &groups {
            let t = g.cayley();
            let n = t.size();
            for x in 0..n {
                assert_eq!(t.mul(0, x), x);
                assert_eq!(t.mul(x, 0), x);
                assert_eq!(t.mul(x, t.inv(x)), 0);
                assert_eq!(t.mul(t.inv(x), x), 0);
                for y in 0..n {
                    for z in 0..n {
                        assert_eq!(t.mul(t.mul(x, y), z), t.mul(x, t.mul(y, z)));
                    }
                }
            }
            let b = g.b();
            assert_eq!(
                g.mul(&b, &b),
                D2Elem {
                    a: g.y().clone(),
                    beta: false
                }
            );
            for a in g.abelian().elements() {
                let ae = D2Elem { a, beta: false };
                let conj = g.mul(&g.mul(&b, &ae), &g.inv(&b));
                assert_eq!(conj.a, g.apply_f(&ae.a));
                assert!(!conj.beta);
            }
        }
    }
}
