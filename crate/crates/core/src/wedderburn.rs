//! Wedderburn blocks of the centralizer algebra `T~(G)`, which equals `T(G)`
//! for every group in this family.
//!
//! The block for an irreducible character `chi` is `M_{d_chi}` where `d_chi`
//! is the multiplicity of `chi` in the conjugation character
//! `psi(g) = |C_G(g)|`. Three independent routes compute `d_chi`: the
//! closed-form case split on `I` and `J`, the plain character sum over class
//! representatives, and the inner product `<psi, chi>`. The explicit central
//! idempotents give a fourth, matrix-level check on small groups.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::characters::{character_table, CharLabel, CharacterTable};
use crate::conjugacy::{check_guard, conjugacy_classes, ClassList};
use crate::cyclotomic::RootSum;
use crate::error::{Error, Result};
use crate::group::D2Group;
use crate::scheme::{centralizer_orders, dim_centralizer, IntMatrix};

/// The conjugation action: `perms[g][u] = g u g^-1`, and its character `psi`.
#[derive(Debug, Clone)]
pub struct PermRep {
    perms: Vec<Vec<usize>>,
    psi: Vec<u64>,
}

impl PermRep {
    pub fn new(group: &D2Group, guard: usize) -> Result<Self> {
        check_guard(group, guard)?;
        let t = group.cayley();
        let size = t.size();
        let perms: Vec<Vec<usize>> = (0..size)
            .map(|g| (0..size).map(|u| t.conj(g, u)).collect())
            .collect();
        let psi = perms
            .iter()
            .map(|p| p.iter().enumerate().filter(|(u, v)| u == *v).count() as u64)
            .collect();
        Ok(PermRep { perms, psi })
    }

    pub fn size(&self) -> usize {
        self.perms.len()
    }

    /// `(Phi(g))_{u,v} = 1` iff `v = g u g^-1`.
    pub fn matrix(&self, g: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.size());
        for (u, &v) in self.perms[g].iter().enumerate() {
            m.set(u, v, 1);
        }
        m
    }

    pub fn image(&self, g: usize, u: usize) -> usize {
        self.perms[g][u]
    }

    /// `psi(g) = trace Phi(g)`, the number of elements commuting with `g`.
    pub fn psi(&self) -> &[u64] {
        &self.psi
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityEntry {
    pub label: CharLabel,
    pub degree: u64,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityVector {
    pub entries: Vec<MultiplicityEntry>,
}

impl MultiplicityVector {
    pub fn values(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.multiplicity).collect()
    }

    /// Block sizes `d > 0`; zero multiplicities contribute no block.
    pub fn blocks(&self) -> Vec<u64> {
        self.values().into_iter().filter(|&d| d > 0).collect()
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.entries
            .iter()
            .map(|e| e.multiplicity * e.multiplicity)
            .sum()
    }

    pub fn degree_weighted_sum(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity * e.degree).sum()
    }
}

fn to_multiplicity(label: &CharLabel, value: &RootSum) -> Result<u64> {
    let bad = || Error::NonIntegralMultiplicity {
        label: label.to_string(),
        value: value.to_string(),
    };
    let exact = value.exact_integer().ok_or_else(bad)?;
    if value.is_integer(1e-6) != Some(exact) || exact < 0 {
        return Err(bad());
    }
    Ok(exact as u64)
}

/// `d_chi = sum_k conj(chi(g_k))` over one representative per class.
pub fn multiplicities_char_sum(table: &CharacterTable) -> Result<MultiplicityVector> {
    let entries = table
        .labels
        .iter()
        .zip(&table.values)
        .map(|(label, row)| {
            let mut sum = RootSum::zero(table.root_order);
            for v in row {
                sum = sum.add(&v.conjugate())?;
            }
            Ok(MultiplicityEntry {
                label: label.clone(),
                degree: label.degree(),
                multiplicity: to_multiplicity(label, &sum)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(MultiplicityVector { entries })
}

/// `d_chi = <psi, chi> = (1/|G|) sum_classes |Cl| psi(Cl) conj(chi(Cl))`, with
/// `psi(Cl) = |C_G(rep)|` counted by scanning.
pub fn multiplicities_inner_product(
    group: &D2Group,
    classes: &ClassList,
    table: &CharacterTable,
) -> Result<MultiplicityVector> {
    let centralizers = centralizer_orders(group)?;
    let weights: Vec<i64> = classes
        .classes()
        .iter()
        .map(|c| (c.size() as u64 * centralizers[c.elements[0]]) as i64)
        .collect();
    let order = group.order() as i64;
    let entries = table
        .labels
        .iter()
        .zip(&table.values)
        .map(|(label, row)| {
            let mut sum = RootSum::zero(table.root_order);
            for (v, &w) in row.iter().zip(&weights) {
                sum = sum.add(&v.conjugate().scale(w))?;
            }
            let total = to_multiplicity(label, &sum)? as i64;
            if total % order != 0 {
                return Err(Error::NonIntegralMultiplicity {
                    label: label.to_string(),
                    value: format!("{total}/{order}"),
                });
            }
            Ok(MultiplicityEntry {
                label: label.clone(),
                degree: label.degree(),
                multiplicity: (total / order) as u64,
            })
        })
        .collect::<Result<_>>()?;
    Ok(MultiplicityVector { entries })
}

/// The closed-form multiplicity of one label.
///
/// For `chi_{I,1}`: `(n + 3d)/2` if every `d_i | l_i`; `d/2` if some
/// `d_i` does not divide `l_i` but every `d_i | n_i l_i`; else 0.
/// For `chi_{I,2}` the first case is `(n - d)/2`. For `phi_J`: `d` if every
/// `d_i | k_i`, else 0.
pub fn closed_form_multiplicity(group: &D2Group, label: &CharLabel) -> u64 {
    let fd = group.fixed();
    let (n, d) = (group.n(), group.d());
    match label {
        CharLabel::Linear { l, sign } => {
            let all_divide = l.iter().zip(&fd.d_vec).all(|(&l, &di)| l % di == 0);
            let twisted_divide = l
                .iter()
                .zip(fd.d_vec.iter().zip(&fd.n_vec))
                .all(|(&l, (&di, &ni))| (ni * l) % di == 0);
            if all_divide {
                match sign {
                    1 => half(n + 3 * d),
                    _ => half(n - d),
                }
            } else if twisted_divide {
                half(d)
            } else {
                0
            }
        }
        CharLabel::TwoDim { k } => {
            if k.iter().zip(&fd.d_vec).all(|(&k, &di)| k % di == 0) {
                d
            } else {
                0
            }
        }
    }
}

fn half(x: u64) -> u64 {
    assert!(x.is_multiple_of(2), "odd numerator {x} in a multiplicity");
    x / 2
}

pub fn multiplicities_closed_form(group: &D2Group) -> MultiplicityVector {
    let entries = crate::characters::character_labels(group)
        .into_iter()
        .map(|label| MultiplicityEntry {
            multiplicity: closed_form_multiplicity(group, &label),
            degree: label.degree(),
            label,
        })
        .collect();
    MultiplicityVector { entries }
}

/// Dense complex square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    size: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(size: usize) -> Self {
        ComplexMatrix {
            size,
            data: vec![Complex64::new(0.0, 0.0); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.data[i * size + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.size + j]
    }

    pub fn mul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        let n = self.size;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            size: self.size,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.size).map(|i| self.get(i, i)).sum()
    }

    /// Numerical rank by Gaussian elimination with partial pivoting.
    pub fn rank(&self, tol: f64) -> usize {
        let n = self.size;
        let mut m = self.data.clone();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) =
                (rank..n).max_by(|&a, &b| m[a * n + col].norm().total_cmp(&m[b * n + col].norm()))
            else {
                break;
            };
            if m[p * n + col].norm() <= tol {
                continue;
            }
            for j in 0..n {
                m.swap(rank * n + j, p * n + j);
            }
            let pivot = m[rank * n + col];
            for i in (rank + 1)..n {
                let factor = m[i * n + col] / pivot;
                if factor.norm() == 0.0 {
                    continue;
                }
                for j in col..n {
                    let sub = factor * m[rank * n + j];
                    m[i * n + j] -= sub;
                }
            }
            rank += 1;
        }
        rank
    }
}

/// `e_chi = (chi(1)/|G|) sum_g conj(chi(g)) Phi(g)`.
pub fn central_idempotent(
    perm: &PermRep,
    classes: &ClassList,
    table: &CharacterTable,
    row: usize,
) -> ComplexMatrix {
    let size = perm.size();
    let coeff: Vec<Complex64> = table.values[row]
        .iter()
        .map(|v| v.eval().conj() * (table.degrees[row] as f64 / size as f64))
        .collect();
    let mut e = ComplexMatrix::zeros(size);
    for g in 0..size {
        let c = coeff[classes.class_index(g)];
        for u in 0..size {
            e.data[u * size + perm.image(g, u)] += c;
        }
    }
    e
}

pub const IDEMPOTENT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdempotentReport {
    pub max_error: f64,
    /// Matrix rank of each `e_chi`; equals `chi(1) d_chi`.
    pub ranks: Vec<usize>,
    /// `dim T~(G) e_chi`, computed as `<psi_W, psi_W>` for the image `W`;
    /// equals `d_chi^2`.
    pub block_dimensions: Vec<u64>,
}

/// Builds every `e_chi` and checks `e^2 = e`, `e e' = 0`, `sum e = I`, the
/// rank of each `e` and the dimension of the block it cuts out.
pub fn verify_central_idempotents(
    group: &D2Group,
    classes: &ClassList,
    table: &CharacterTable,
    multiplicities: &MultiplicityVector,
    guard: usize,
) -> Result<IdempotentReport> {
    let perm = PermRep::new(group, guard)?;
    let size = perm.size();
    let es: Vec<ComplexMatrix> = (0..table.rows())
        .map(|r| central_idempotent(&perm, classes, table, r))
        .collect();
    let fail = |msg: String| Err(Error::IdempotencyFailure(msg));
    let mut max_error: f64 = 0.0;
    let zero = ComplexMatrix::zeros(size);
    for (j, e) in es.iter().enumerate() {
        let err = e.mul(e).max_abs_diff(e);
        if err >= IDEMPOTENT_TOLERANCE {
            return fail(format!("e_{j}^2 != e_{j} (error {err:.3e})"));
        }
        max_error = max_error.max(err);
        for (k, f) in es.iter().enumerate().skip(j + 1) {
            let err = e
                .mul(f)
                .max_abs_diff(&zero)
                .max(f.mul(e).max_abs_diff(&zero));
            if err >= IDEMPOTENT_TOLERANCE {
                return fail(format!("e_{j} e_{k} != 0 (error {err:.3e})"));
            }
            max_error = max_error.max(err);
        }
    }
    let sum = es
        .iter()
        .fold(ComplexMatrix::zeros(size), |acc, e| acc.add(e));
    let err = sum.max_abs_diff(&ComplexMatrix::identity(size));
    if err >= IDEMPOTENT_TOLERANCE {
        return fail(format!("sum of idempotents != I (error {err:.3e})"));
    }
    max_error = max_error.max(err);

    let mut ranks = Vec::new();
    let mut block_dimensions = Vec::new();
    for (j, e) in es.iter().enumerate() {
        let entry = &multiplicities.entries[j];
        let rank = e.rank(1e-7);
        if rank as u64 != entry.degree * entry.multiplicity {
            return fail(format!(
                "rank e_{j} = {rank}, expected {}",
                entry.degree * entry.multiplicity
            ));
        }
        // character of Phi restricted to the image of e: trace(Phi(g) e)
        let mut norm = 0.0;
        for g in 0..size {
            let tr: Complex64 = (0..size).map(|u| e.get(perm.image(g, u), u)).sum();
            norm += tr.norm_sqr();
        }
        let dim = norm / size as f64;
        let rounded = dim.round();
        if (dim - rounded).abs() > 1e-6 || rounded as u64 != entry.multiplicity.pow(2) {
            return fail(format!(
                "block of e_{j} has dimension {dim}, expected {}",
                entry.multiplicity.pow(2)
            ));
        }
        ranks.push(rank);
        block_dimensions.push(rounded as u64);
    }
    Ok(IdempotentReport {
        max_error,
        ranks,
        block_dimensions,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelAgreement {
    pub label: CharLabel,
    pub degree: u64,
    pub multiplicity: u64,
    pub closed_form: u64,
    pub char_sum: u64,
    pub inner_product: u64,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedderburnReport {
    pub labels: Vec<LabelAgreement>,
    pub blocks: Vec<u64>,
    pub sum_of_squares: u64,
    pub dim_centralizer: u64,
    pub degree_weighted_sum: u64,
    pub group_order: u64,
}

/// All three multiplicity routes, the block list, and the identities
/// `sum d^2 = dim T~(G)` and `sum d chi(1) = |G|`.
pub fn wedderburn_report(group: &D2Group) -> Result<WedderburnReport> {
    let classes = conjugacy_classes(group);
    let table = character_table(group, &classes);
    let closed = multiplicities_closed_form(group);
    let char_sum = multiplicities_char_sum(&table)?;
    let inner = multiplicities_inner_product(group, &classes, &table)?;
    let mut labels = Vec::new();
    for ((c, s), i) in closed
        .entries
        .iter()
        .zip(&char_sum.entries)
        .zip(&inner.entries)
    {
        debug_assert!(c.label == s.label && s.label == i.label);
        let agree = c.multiplicity == s.multiplicity && s.multiplicity == i.multiplicity;
        if !agree {
            return Err(Error::MultiplicityMismatch {
                label: c.label.to_string(),
                closed: c.multiplicity,
                char_sum: s.multiplicity,
                inner: i.multiplicity,
            });
        }
        labels.push(LabelAgreement {
            label: c.label.clone(),
            degree: c.degree,
            multiplicity: c.multiplicity,
            closed_form: c.multiplicity,
            char_sum: s.multiplicity,
            inner_product: i.multiplicity,
            agree,
        });
    }
    let dim = dim_centralizer(group)?;
    let report = WedderburnReport {
        blocks: closed.blocks(),
        sum_of_squares: closed.sum_of_squares(),
        degree_weighted_sum: closed.degree_weighted_sum(),
        dim_centralizer: dim,
        group_order: group.order() as u64,
        labels,
    };
    if report.sum_of_squares != dim {
        return Err(Error::IdentityFailure {
            identity: "sum d^2 = dim T~(G)".into(),
            expected: dim,
            got: report.sum_of_squares,
        });
    }
    if report.degree_weighted_sum != report.group_order {
        return Err(Error::IdentityFailure {
            identity: "sum d deg = |G|".into(),
            expected: report.group_order,
            got: report.degree_weighted_sum,
        });
    }
    Ok(report)
}
