//! Irreducible characters of `D2`.
//!
//! There are `2d` linear characters `chi_{I,1}`, `chi_{I,2}` indexed by
//! `I = (l_i)` with `0 <= l_i < d_i`, and `(n - d) / 2` two-dimensional
//! characters `phi_J` indexed by one representative `J = (k_i)` of each
//! orbit `{J, J s}` of characters of `A` that are non-trivial on `B`.
//!
//! All values live in `Z[zeta_M]` with `M = 2 lcm(m_i)`. The doubling hosts
//! the value of a linear character at `b`, a square root of its value at
//! `y`: `chi_{I,1}(b) = prod zeta_{2 d_i}^{l_i v_i}`, and `chi_{I,2}` takes
//! the other root.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian::AbElem;
use crate::arith::lcm;
use crate::conjugacy::{ClassKind, ClassList};
use crate::cyclotomic::RootSum;
use crate::error::{Error, Result};
use crate::group::{D2Elem, D2Group};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CharLabel {
    /// `chi_{I,sign}` with `I = l`.
    Linear { l: Vec<u64>, sign: u8 },
    /// `phi_J` with `J = k`.
    TwoDim { k: Vec<u64> },
}

impl CharLabel {
    pub fn degree(&self) -> u64 {
        match self {
            CharLabel::Linear { .. } => 1,
            CharLabel::TwoDim { .. } => 2,
        }
    }
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match self {
            CharLabel::Linear { l, sign } => write!(f, "chi[{};{}]", join(l), sign),
            CharLabel::TwoDim { k } => write!(f, "phi[{}]", join(k)),
        }
    }
}

/// `2 lcm(m_i)`.
pub fn root_order(group: &D2Group) -> u64 {
    2 * group.abelian().moduli().into_iter().fold(1, lcm)
}

fn mixed_radix(radices: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &r in radices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..r).map(move |t| {
                    let mut v = prefix.clone();
                    v.push(t);
                    v
                })
            })
            .collect();
    }
    out
}

/// `J s`: the character `a -> sigma_J(f(a))`.
fn twist(group: &D2Group, k: &[u64]) -> Vec<u64> {
    k.iter()
        .zip(group.involution().s())
        .zip(group.abelian().moduli())
        .map(|((&k, &s), m)| (k * s) % m)
        .collect()
}

/// Labels in table order: every `chi_{I,1}`, every `chi_{I,2}`, then every
/// `phi_J`, each group in mixed-radix order.
pub fn character_labels(group: &D2Group) -> Vec<CharLabel> {
    let fd = group.fixed();
    let ab = group.abelian();
    let mut labels = Vec::new();
    for sign in [1u8, 2] {
        for l in mixed_radix(&fd.d_vec) {
            labels.push(CharLabel::Linear { l, sign });
        }
    }
    for a in ab.elements() {
        let k = a.0;
        let trivial_on_b = k.iter().zip(&fd.n_vec).all(|(&k, &n)| k % n == 0);
        if trivial_on_b {
            continue;
        }
        let partner = AbElem(twist(group, &k));
        if ab.index_of(&AbElem(k.clone())) < ab.index_of(&partner) {
            labels.push(CharLabel::TwoDim { k });
        }
    }
    labels
}

/// `sigma(a) = prod zeta_{modulus_i}^{w_i t_i}` as a single root of unity.
fn abelian_character(order: u64, weights: &[u64], moduli: &[u64], a: &[u64]) -> RootSum {
    let exp: u64 = weights
        .iter()
        .zip(moduli)
        .zip(a)
        .map(|((&w, &m), &t)| (w * t % m) * (order / m))
        .sum();
    RootSum::root(order, exp as i64)
}

/// `prod zeta_{2 d_i}^{l_i v_i}`: the principal square root of `chi_I(y)`.
fn linear_at_b(group: &D2Group, order: u64, l: &[u64]) -> RootSum {
    let fd = group.fixed();
    let exp: u64 = l
        .iter()
        .zip(&fd.d_vec)
        .zip(group.y().coords())
        .map(|((&l, &d), &v)| (l * v % (2 * d)) * (order / (2 * d)))
        .sum();
    RootSum::root(order, exp as i64)
}

/// Table value of `label` on class `class_index`, read off the class type and
/// representative coordinates.
pub fn char_value(
    group: &D2Group,
    classes: &ClassList,
    label: &CharLabel,
    class_index: usize,
) -> RootSum {
    let order = root_order(group);
    let class = classes.get(class_index);
    let t = class.rep.a.coords();
    let fd = group.fixed();
    let moduli = group.abelian().moduli();
    match (label, class.kind) {
        (CharLabel::Linear { l, .. }, ClassKind::Fixed | ClassKind::Paired) => {
            abelian_character(order, l, &fd.d_vec, t)
        }
        (CharLabel::Linear { l, sign }, ClassKind::Coset) => {
            // prod zeta_{2 d_i}^{l_i (2 z_i + v_i)}
            let exp: u64 = l
                .iter()
                .zip(&fd.d_vec)
                .zip(t.iter().zip(group.y().coords()))
                .map(|((&l, &d), (&z, &v))| (l * (2 * z + v) % (2 * d)) * (order / (2 * d)))
                .sum();
            let value = RootSum::root(order, exp as i64);
            if *sign == 2 {
                value.neg()
            } else {
                value
            }
        }
        (CharLabel::TwoDim { k }, ClassKind::Fixed | ClassKind::Paired) => {
            let first = abelian_character(order, k, &moduli, t);
            let second = abelian_character(order, &twist(group, k), &moduli, t);
            first.add(&second).expect("shared root order")
        }
        (CharLabel::TwoDim { .. }, ClassKind::Coset) => RootSum::zero(order),
    }
}

/// Representation matrix of `g` (1x1 or 2x2) built from the action on a
/// basis: `phi_J(a) = diag(sigma(a), sigma(f a))`, `phi_J(b) = [[0, sigma(y)], [1, 0]]`.
pub fn representation(group: &D2Group, label: &CharLabel, g: &D2Elem) -> Vec<Vec<RootSum>> {
    let order = root_order(group);
    let moduli = group.abelian().moduli();
    let t = g.a.coords();
    match label {
        CharLabel::Linear { l, sign } => {
            let mut value = abelian_character(order, l, &group.fixed().d_vec, t);
            if g.beta {
                let mut at_b = linear_at_b(group, order, l);
                if *sign == 2 {
                    at_b = at_b.neg();
                }
                value = value.mul(&at_b).expect("shared root order");
            }
            vec![vec![value]]
        }
        CharLabel::TwoDim { k } => {
            let sigma = |x: &[u64]| abelian_character(order, k, &moduli, x);
            let diag = [sigma(t), sigma(group.apply_f(&g.a).coords())];
            let zero = RootSum::zero(order);
            if !g.beta {
                vec![
                    vec![diag[0].clone(), zero.clone()],
                    vec![zero, diag[1].clone()],
                ]
            } else {
                // diag(s(a), s(fa)) * [[0, s(y)], [1, 0]]
                let sy = sigma(group.y().coords());
                vec![
                    vec![zero.clone(), diag[0].mul(&sy).expect("shared root order")],
                    vec![diag[1].clone(), zero],
                ]
            }
        }
    }
}

/// Character value at an arbitrary element, as the trace of [`representation`].
pub fn char_value_at(group: &D2Group, label: &CharLabel, g: &D2Elem) -> RootSum {
    let rep = representation(group, label, g);
    let mut trace = RootSum::zero(root_order(group));
    for (i, row) in rep.iter().enumerate() {
        trace = trace.add(&row[i]).expect("shared root order");
    }
    trace
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub root_order: u64,
    pub group_order: u64,
    pub labels: Vec<CharLabel>,
    pub degrees: Vec<u64>,
    pub class_sizes: Vec<u64>,
    /// `values[row][class]`.
    pub values: Vec<Vec<RootSum>>,
}

impl CharacterTable {
    pub fn rows(&self) -> usize {
        self.labels.len()
    }

    pub fn row_of(&self, label: &CharLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn degree_square_sum(&self) -> u64 {
        self.degrees.iter().map(|d| d * d).sum()
    }
}

pub fn character_table(group: &D2Group, classes: &ClassList) -> CharacterTable {
    let labels = character_labels(group);
    let values = labels
        .iter()
        .map(|label| {
            (0..classes.len())
                .map(|c| char_value(group, classes, label, c))
                .collect()
        })
        .collect();
    CharacterTable {
        root_order: root_order(group),
        group_order: group.order() as u64,
        degrees: labels.iter().map(CharLabel::degree).collect(),
        labels,
        class_sizes: classes.sizes().into_iter().map(|s| s as u64).collect(),
        values,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrthogonalityReport {
    pub max_row_error: f64,
    pub max_column_error: f64,
}

pub const ORTHOGONALITY_TOLERANCE: f64 = 1e-9;

/// Row and column orthogonality relations, evaluated in double precision.
pub fn verify_orthogonality(table: &CharacterTable) -> Result<OrthogonalityReport> {
    let evaluated: Vec<Vec<num_complex::Complex64>> = table
        .values
        .iter()
        .map(|row| row.iter().map(RootSum::eval).collect())
        .collect();
    let order = table.group_order as f64;
    let classes = table.class_sizes.len();
    let mut max_row_error: f64 = 0.0;
    for r in 0..table.rows() {
        for t in 0..table.rows() {
            let inner: num_complex::Complex64 = (0..classes)
                .map(|c| evaluated[r][c] * evaluated[t][c].conj() * table.class_sizes[c] as f64)
                .sum::<num_complex::Complex64>()
                / order;
            let err = (inner - if r == t { 1.0 } else { 0.0 }).norm();
            if err >= ORTHOGONALITY_TOLERANCE {
                return Err(Error::OrthogonalityFailure {
                    relation: "row",
                    first: r,
                    second: t,
                    value: err,
                });
            }
            max_row_error = max_row_error.max(err);
        }
    }
    let mut max_column_error: f64 = 0.0;
    for u in 0..classes {
        for v in 0..classes {
            let sum: num_complex::Complex64 = (0..table.rows())
                .map(|r| evaluated[r][u] * evaluated[r][v].conj())
                .sum();
            let expect = if u == v {
                order / table.class_sizes[u] as f64
            } else {
                0.0
            };
            let err = (sum - expect).norm();
            if err >= ORTHOGONALITY_TOLERANCE {
                return Err(Error::OrthogonalityFailure {
                    relation: "column",
                    first: u,
                    second: v,
                    value: err,
                });
            }
            max_column_error = max_column_error.max(err);
        }
    }
    Ok(OrthogonalityReport {
        max_row_error,
        max_column_error,
    })
}
