//! Conjugacy classes: the closed form (fixed points, pairs `{a, f(a)}`,
//! cosets `B z b`) and a brute-force orbit computation used as its oracle.
//!
//! Both produce the same canonical order: all `Fixed` classes by
//! representative, then `Paired` by their smaller element, then `Coset` by
//! the mixed-radix tuple `z`. Index 0 is always `{e}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{CayleyTable, D2Elem, D2Group};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClassKind {
    Fixed,
    Paired,
    Coset,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjClass {
    pub kind: ClassKind,
    pub rep: D2Elem,
    /// Element indices in ascending order.
    pub elements: Vec<usize>,
    pub index: usize,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassList {
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
}

impl ClassList {
    fn from_unordered(group: &D2Group, mut raw: Vec<(ClassKind, Vec<usize>)>) -> Self {
        for (_, els) in raw.iter_mut() {
            els.sort_unstable();
        }
        raw.sort_by_key(|(kind, els)| (*kind, els[0]));
        let mut class_of = vec![usize::MAX; group.order()];
        let classes = raw
            .into_iter()
            .enumerate()
            .map(|(index, (kind, elements))| {
                for &g in &elements {
                    class_of[g] = index;
                }
                ConjClass {
                    kind,
                    rep: group.element(elements[0]),
                    elements,
                    index,
                }
            })
            .collect();
        ClassList { classes, class_of }
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn get(&self, i: usize) -> &ConjClass {
        &self.classes[i]
    }

    /// Index of the class containing the element with index `g`.
    pub fn class_index(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn class_of(&self, group: &D2Group, g: &D2Elem) -> usize {
        self.class_of[group.index_of(g)]
    }

    /// Number of `Fixed`, `Paired` and `Coset` classes.
    pub fn counts(&self) -> (usize, usize, usize) {
        let count = |k| self.classes.iter().filter(|c| c.kind == k).count();
        (
            count(ClassKind::Fixed),
            count(ClassKind::Paired),
            count(ClassKind::Coset),
        )
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjClass::size).collect()
    }

    pub fn of_kind(&self, kind: ClassKind) -> impl Iterator<Item = &ConjClass> {
        self.classes.iter().filter(move |c| c.kind == kind)
    }
}

pub fn conjugacy_classes(group: &D2Group) -> ClassList {
    let ab = group.abelian();
    let fd = group.fixed();
    let n = ab.order() as usize;
    let mut raw = Vec::new();
    for a in ab.elements() {
        let i = ab.index_of(&a);
        if fd.is_fixed(&a) {
            raw.push((ClassKind::Fixed, vec![i]));
        } else {
            let j = ab.index_of(&group.apply_f(&a));
            if i < j {
                raw.push((ClassKind::Paired, vec![i, j]));
            }
        }
    }
    let b_set = fd.b_elements(ab);
    for z in fd.coset_reps() {
        let els = b_set
            .iter()
            .map(|x| n + ab.index_of(&ab.add(x, &z)))
            .collect();
        raw.push((ClassKind::Coset, els));
    }
    ClassList::from_unordered(group, raw)
}

/// Orbits of `g -> h g h^-1`, canonically ordered. Needs `|G| <= guard`.
pub fn conjugacy_classes_bruteforce(group: &D2Group, guard: usize) -> Result<ClassList> {
    check_guard(group, guard)?;
    let table = group.cayley();
    Ok(classes_from_table(group, &table))
}

pub(crate) fn classes_from_table(group: &D2Group, table: &CayleyTable) -> ClassList {
    let size = table.size();
    let n = size / 2;
    let mut seen = vec![false; size];
    let mut raw = Vec::new();
    for g in 0..size {
        if seen[g] {
            continue;
        }
        let orbit: BTreeSet<usize> = (0..size).map(|h| table.conj(h, g)).collect();
        for &x in &orbit {
            seen[x] = true;
        }
        let els: Vec<usize> = orbit.into_iter().collect();
        let kind = if els[0] >= n {
            ClassKind::Coset
        } else if els.len() == 1 {
            ClassKind::Fixed
        } else {
            ClassKind::Paired
        };
        raw.push((kind, els));
    }
    ClassList::from_unordered(group, raw)
}

pub(crate) fn check_guard(group: &D2Group, guard: usize) -> Result<()> {
    if group.order() > guard {
        return Err(Error::GuardExceeded {
            order: group.order(),
            guard,
        });
    }
    Ok(())
}

/// `p_ij^k`: with `x = e` and `y` the representative of class `k`, the number
/// of `z` in class `i` with `y z^-1` in class `j`.
pub fn structure_constant(
    group: &D2Group,
    classes: &ClassList,
    i: usize,
    j: usize,
    k: usize,
) -> u64 {
    let y = group.element(classes.get(k).elements[0]);
    structure_constant_at(group, classes, i, j, &y)
}

/// Same count as [`structure_constant`] but for an explicit `y`.
pub fn structure_constant_at(
    group: &D2Group,
    classes: &ClassList,
    i: usize,
    j: usize,
    y: &D2Elem,
) -> u64 {
    classes
        .get(i)
        .elements
        .iter()
        .filter(|&&z| {
            let z_inv = group.inv(&group.element(z));
            classes.class_of(group, &group.mul(y, &z_inv)) == j
        })
        .count() as u64
}

/// All `p_ij^k`, indexed `[i][j][k]`, from a Cayley table.
pub fn structure_constants(table: &CayleyTable, classes: &ClassList) -> Vec<Vec<Vec<u64>>> {
    let r = classes.len();
    let mut p = vec![vec![vec![0u64; r]; r]; r];
    for k in 0..r {
        let y = classes.get(k).elements[0];
        for i in 0..r {
            for &z in &classes.get(i).elements {
                let j = classes.class_index(table.mul(y, table.inv(z)));
                p[i][j][k] += 1;
            }
        }
    }
    p
}

/// `{k : Cl_k is contained in Cl_i Cl_j}`, from the element-wise product.
pub fn class_products(group: &D2Group, classes: &ClassList, i: usize, j: usize) -> BTreeSet<usize> {
    let left: Vec<D2Elem> = classes
        .get(i)
        .elements
        .iter()
        .map(|&g| group.element(g))
        .collect();
    let right: Vec<D2Elem> = classes
        .get(j)
        .elements
        .iter()
        .map(|&g| group.element(g))
        .collect();
    let mut out = BTreeSet::new();
    for u in &left {
        for v in &right {
            out.insert(classes.class_of(group, &group.mul(u, v)));
        }
    }
    out
}

/// For every pair of `Paired` classes `{y_r, f(y_r)}`, `{y_j, f(y_j)}`, checks
/// that `Cl(y_r y_j)` and `Cl(y_r f(y_j))` differ and that their union is the
/// class product. Returns the first offending pair.
pub fn check_paired_products(
    group: &D2Group,
    classes: &ClassList,
) -> std::result::Result<(), (usize, usize)> {
    let ab = group.abelian();
    let paired: Vec<&ConjClass> = classes.of_kind(ClassKind::Paired).collect();
    for u in &paired {
        for v in &paired {
            let yr = &u.rep.a;
            let yj = &v.rep.a;
            let first = D2Elem {
                a: ab.add(yr, yj),
                beta: false,
            };
            let second = D2Elem {
                a: ab.add(yr, &group.apply_f(yj)),
                beta: false,
            };
            let c1 = classes.class_of(group, &first);
            let c2 = classes.class_of(group, &second);
            let expect: BTreeSet<usize> = [c1, c2].into_iter().collect();
            if c1 == c2 || class_products(group, classes, u.index, v.index) != expect {
                return Err((u.index, v.index));
            }
        }
    }
    Ok(())
}

/// For every `Coset` class `C_r`, the element sets `C_r C_j` over all `Coset`
/// classes `C_j` are pairwise disjoint and cover `A`. Returns the offending `r`.
pub fn check_coset_partition(
    group: &D2Group,
    classes: &ClassList,
) -> std::result::Result<(), usize> {
    let n = group.abelian().order() as usize;
    let cosets: Vec<&ConjClass> = classes.of_kind(ClassKind::Coset).collect();
    for r in &cosets {
        let mut cover = vec![0usize; n];
        for j in &cosets {
            let mut product = BTreeSet::new();
            for &u in &r.elements {
                for &v in &j.elements {
                    let w = group.mul(&group.element(u), &group.element(v));
                    if w.beta {
                        return Err(r.index);
                    }
                    product.insert(group.index_of(&w));
                }
            }
            for w in product {
                cover[w] += 1;
            }
        }
        if cover.iter().any(|&c| c != 1) {
            return Err(r.index);
        }
    }
    Ok(())
}
