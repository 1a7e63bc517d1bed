//! The group association scheme as explicit matrices, and the dimensions of
//! `T0(G) <= T(G) <= T~(G)`.
//!
//! Rows and columns of every matrix follow the element enumeration of the
//! group (`A` first, then the coset `Ab`). Matrix paths are limited by a
//! guard on `|G|`; counting and formula paths only need `|G| <= 4096`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::conjugacy::{check_guard, structure_constants, ClassList};
use crate::error::{Error, Result};
use crate::group::D2Group;
use crate::linalg::RowBasis;

pub const DEFAULT_MATRIX_GUARD: usize = 64;
pub const COUNT_GUARD: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    size: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(size: usize) -> Self {
        IntMatrix {
            size,
            data: vec![0; size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.set(i, i, 1);
        }
        m
    }

    pub fn all_ones(size: usize) -> Self {
        IntMatrix {
            size,
            data: vec![1; size * size],
        }
    }

    pub fn from_flat(size: usize, data: Vec<i64>) -> Self {
        assert_eq!(data.len(), size * size);
        IntMatrix { size, data }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.size + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.size + j] = v;
    }

    pub fn flat(&self) -> &[i64] {
        &self.data
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        self.data[i * self.size..(i + 1) * self.size].iter().sum()
    }

    pub fn trace(&self) -> i64 {
        (0..self.size).map(|i| self.get(i, i)).sum()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        IntMatrix {
            size: self.size,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scaled(&self, c: i64) -> IntMatrix {
        IntMatrix {
            size: self.size,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.size;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                let dst = &mut out.data[i * n..(i + 1) * n];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.size).all(|i| (0..self.size).all(|j| i == j || self.get(i, j) == 0))
    }

    /// Dense text grid, one row per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for i in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|j| self.get(i, j).to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

/// `(N_i)_{x,y} = 1` iff `y x^-1` lies in class `i`.
pub fn adjacency_matrices(
    group: &D2Group,
    classes: &ClassList,
    guard: usize,
) -> Result<Vec<IntMatrix>> {
    check_guard(group, guard)?;
    let table = group.cayley();
    let size = table.size();
    let mut mats = vec![IntMatrix::zeros(size); classes.len()];
    for x in 0..size {
        let x_inv = table.inv(x);
        for y in 0..size {
            let c = classes.class_index(table.mul(y, x_inv));
            mats[c].set(x, y, 1);
        }
    }
    Ok(mats)
}

/// `E*_i`: the diagonal 0/1 matrix selecting the elements of class `i`.
pub fn dual_idempotents(
    group: &D2Group,
    classes: &ClassList,
    guard: usize,
) -> Result<Vec<IntMatrix>> {
    check_guard(group, guard)?;
    let size = group.order();
    Ok(classes
        .classes()
        .iter()
        .map(|c| {
            let mut m = IntMatrix::zeros(size);
            for &u in &c.elements {
                m.set(u, u, 1);
            }
            m
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub relations: usize,
    pub symmetric_relations: usize,
}

/// Checks (i) `N_0 = I`, (ii) `sum N_i = J`, (iii) every transpose is some
/// `N_i'`, (iv) `N_i N_j = sum_k p_ij^k N_k` with the constants counted from
/// the group.
pub fn verify_scheme_axioms(
    group: &D2Group,
    classes: &ClassList,
    matrices: &[IntMatrix],
) -> Result<AxiomReport> {
    let fail = |clause, detail: String| Err(Error::AxiomFailure { clause, detail });
    let size = group.order();
    if matrices.is_empty() || matrices[0] != IntMatrix::identity(size) {
        return fail("i", "N_0 is not the identity".into());
    }
    let sum = matrices
        .iter()
        .skip(1)
        .fold(matrices[0].clone(), |acc, m| acc.add(m));
    if sum != IntMatrix::all_ones(size) {
        return fail("ii", "the relations do not partition G x G".into());
    }
    let mut symmetric_relations = 0;
    for (i, m) in matrices.iter().enumerate() {
        let t = m.transpose();
        if t == *m {
            symmetric_relations += 1;
        }
        if !matrices.contains(&t) {
            return fail("iii", format!("transpose of N_{i} is not a relation"));
        }
    }
    let table = group.cayley();
    let p = structure_constants(&table, classes);
    for (i, ni) in matrices.iter().enumerate() {
        for (j, nj) in matrices.iter().enumerate() {
            let product = ni.mul(nj);
            let mut expect = IntMatrix::zeros(size);
            for (k, nk) in matrices.iter().enumerate() {
                if p[i][j][k] != 0 {
                    expect = expect.add(&nk.scaled(p[i][j][k] as i64));
                }
            }
            if product != expect {
                return fail("iv", format!("N_{i} N_{j} is not sum_k p_{i}{j}^k N_k"));
            }
        }
    }
    Ok(AxiomReport {
        relations: matrices.len(),
        symmetric_relations,
    })
}

/// Dimension of the algebra generated by `generators`: the span of all
/// nonempty words, grown by right multiplication until it stops changing.
pub fn algebra_dimension(generators: &[IntMatrix], guard: usize) -> Result<usize> {
    assert!(!generators.is_empty(), "need at least one generator");
    let size = generators[0].size();
    if size > guard {
        return Err(Error::GuardExceeded { order: size, guard });
    }
    let mut basis = RowBasis::new(size * size);
    let mut queue = VecDeque::new();
    for g in generators {
        if let Some(v) = basis.insert(g.flat().to_vec())? {
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        let x = IntMatrix::from_flat(size, v);
        for g in generators {
            if let Some(w) = basis.insert(x.mul(g).flat().to_vec())? {
                queue.push_back(w);
            }
        }
    }
    Ok(basis.rank())
}

/// Dense `rows x cols` block in row-major order.
#[derive(Debug, Clone)]
struct Block {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl Block {
    fn mul(&self, other: &Block) -> Block {
        debug_assert_eq!(self.cols, other.rows);
        let mut data = vec![0i64; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    data[i * other.cols + j] += a * other.data[k * other.cols + j];
                }
            }
        }
        Block {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }
}

/// The blocks `E*_k N_j E*_l` restricted to rows in class `k` and columns in
/// class `l`; indexed `[k][l]`, zero blocks omitted.
fn generator_blocks(group: &D2Group, classes: &ClassList) -> Vec<Vec<Vec<Block>>> {
    let r = classes.len();
    let mut out = vec![vec![Vec::new(); r]; r];
    for k in 0..r {
        let rows = &classes.get(k).elements;
        for l in 0..r {
            let cols = &classes.get(l).elements;
            let mut blocks: Vec<Option<Block>> = vec![None; r];
            for (ui, &u) in rows.iter().enumerate() {
                let u_inv = group.inv(&group.element(u));
                for (vi, &v) in cols.iter().enumerate() {
                    let j = classes.class_of(group, &group.mul(&group.element(v), &u_inv));
                    let block = blocks[j].get_or_insert_with(|| Block {
                        rows: rows.len(),
                        cols: cols.len(),
                        data: vec![0; rows.len() * cols.len()],
                    });
                    block.data[ui * cols.len() + vi] = 1;
                }
            }
            out[k][l] = blocks.into_iter().flatten().collect();
        }
    }
    out
}

/// `dim T(G)` by closing the generators `{N_j} u {E*_i}` under products.
///
/// Since `sum E*_i = I` lies in the algebra, `T(G)` splits as a vector space
/// into the pieces `E*_i T(G) E*_l`, each spanned by chains of generator
/// blocks `E*_i N E*_k N E*_l ...`. The closure runs on those pieces, so the
/// rows being reduced have length `|Cl_i| |Cl_l|` instead of `|G|^2`.
pub fn terwilliger_closure_dimension(
    group: &D2Group,
    classes: &ClassList,
    guard: usize,
) -> Result<usize> {
    check_guard(group, guard)?;
    let r = classes.len();
    let gens = generator_blocks(group, classes);
    let sizes = classes.sizes();
    let mut bases: Vec<Vec<RowBasis>> = (0..r)
        .map(|i| (0..r).map(|l| RowBasis::new(sizes[i] * sizes[l])).collect())
        .collect();
    let mut queue = VecDeque::new();
    for k in 0..r {
        for l in 0..r {
            for g in &gens[k][l] {
                if let Some(v) = bases[k][l].insert(g.data.clone())? {
                    queue.push_back((k, l, v));
                }
            }
        }
    }
    while let Some((i, k, v)) = queue.pop_front() {
        let x = Block {
            rows: sizes[i],
            cols: sizes[k],
            data: v,
        };
        for l in 0..r {
            for g in &gens[k][l] {
                let p = x.mul(g);
                if let Some(w) = bases[i][l].insert(p.data)? {
                    queue.push_back((i, l, w));
                }
            }
        }
    }
    Ok(bases.iter().flatten().map(RowBasis::rank).sum())
}

/// `dim T0(G)` as the number of triples `(i, j, k)` with `Cl_k` inside `Cl_i Cl_j`.
pub fn dim_t0_triples(group: &D2Group, classes: &ClassList) -> Result<u64> {
    check_guard(group, COUNT_GUARD)?;
    let r = classes.len();
    let mut total = 0u64;
    let mut hit = vec![usize::MAX; r];
    for i in 0..r {
        let left: Vec<_> = classes
            .get(i)
            .elements
            .iter()
            .map(|&g| group.element(g))
            .collect();
        for j in 0..r {
            let stamp = i * r + j;
            for &h in &classes.get(j).elements {
                let h = group.element(h);
                for g in &left {
                    let k = classes.class_of(group, &group.mul(g, &h));
                    if hit[k] != stamp {
                        hit[k] = stamp;
                        total += 1;
                    }
                }
            }
        }
    }
    Ok(total)
}

/// `dim T0(G)` as the rank of `{E*_i N_j E*_k}`.
pub fn dim_t0_span(group: &D2Group, classes: &ClassList, guard: usize) -> Result<u64> {
    check_guard(group, guard)?;
    let gens = generator_blocks(group, classes);
    let mut total = 0;
    for row in &gens {
        for blocks in row {
            let Some(first) = blocks.first() else {
                continue;
            };
            let mut basis = RowBasis::new(first.data.len());
            for b in blocks {
                basis.insert(b.data.clone())?;
            }
            total += basis.rank() as u64;
        }
    }
    Ok(total)
}

/// Centralizer order of every element, by scanning.
pub fn centralizer_orders(group: &D2Group) -> Result<Vec<u64>> {
    check_guard(group, COUNT_GUARD)?;
    if group.order() <= 512 {
        let t = group.cayley();
        return Ok((0..t.size())
            .map(|g| t.centralizer_order(g) as u64)
            .collect());
    }
    let els: Vec<_> = group.elements().collect();
    Ok(els
        .iter()
        .map(|g| {
            els.iter()
                .filter(|h| group.mul(g, h) == group.mul(h, g))
                .count() as u64
        })
        .collect())
}

/// `dim T~(G) = (1/|G|) sum_g |C_G(g)|^2`.
pub fn dim_centralizer(group: &D2Group) -> Result<u64> {
    let orders = centralizer_orders(group)?;
    let total: u64 = orders.iter().map(|c| c * c).sum();
    let g = group.order() as u64;
    debug_assert_eq!(total % g, 0);
    Ok(total / g)
}

/// `dim T~(G)` as the number of orbits of `G` on `G x G` under simultaneous conjugation.
pub fn dim_centralizer_orbits(group: &D2Group, guard: usize) -> Result<u64> {
    check_guard(group, guard)?;
    let t = group.cayley();
    let size = t.size();
    let mut seen = vec![false; size * size];
    let mut orbits = 0;
    for x in 0..size {
        for y in 0..size {
            if seen[x * size + y] {
                continue;
            }
            orbits += 1;
            for h in 0..size {
                seen[t.conj(h, x) * size + t.conj(h, y)] = true;
            }
        }
    }
    Ok(orbits)
}

/// `(3nd + n^2 + 4d^2) / 2`.
pub fn dim_closed_form(group: &D2Group) -> u64 {
    closed_form(group.n(), group.d())
}

pub fn closed_form(n: u64, d: u64) -> u64 {
    let twice = 3 * n * d + n * n + 4 * d * d;
    assert!(twice.is_multiple_of(2), "n and d must share parity");
    twice / 2
}

/// The centralizer dimension summed by class type: `|G|^2` on each of the
/// `d` central elements, `n^2` on the `n - d` other elements of `A`, and
/// `(2d)^2` on each of the `n` elements of `Ab`, all divided by `2n`.
pub fn centralizer_by_class_type(n: u64, d: u64) -> u64 {
    let total = 4 * n * n * d + n * n * (n - d) + 4 * n * d * d;
    assert!(total.is_multiple_of(2 * n));
    total / (2 * n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub t0: u64,
    pub closed_form: u64,
    pub centralizer: u64,
    /// `None` when `|G|` is above the matrix guard.
    pub closure: Option<u64>,
    pub triply_transitive: bool,
}

impl DimensionReport {
    /// `dim T0 <= dim T <= dim T~`; names the inclusion that breaks.
    pub fn check_sandwich(&self) -> std::result::Result<(), &'static str> {
        match self.closure {
            Some(t) if self.t0 > t => Err("T0(G) <= T(G)"),
            Some(t) if t > self.centralizer => Err("T(G) <= T~(G)"),
            _ if self.t0 > self.centralizer => Err("T0(G) <= T~(G)"),
            _ => Ok(()),
        }
    }

    pub fn all_equal(&self) -> bool {
        self.t0 == self.closed_form
            && self.centralizer == self.closed_form
            && self.closure.is_none_or(|t| t == self.closed_form)
    }
}

/// All dimension paths and the verdict `T0(G) = T~(G)`.
pub fn is_triply_transitive(
    group: &D2Group,
    classes: &ClassList,
    guard: usize,
) -> Result<DimensionReport> {
    let t0 = dim_t0_triples(group, classes)?;
    let centralizer = dim_centralizer(group)?;
    let closure = match terwilliger_closure_dimension(group, classes, guard) {
        Ok(d) => Some(d as u64),
        Err(Error::GuardExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(DimensionReport {
        t0,
        closed_form: dim_closed_form(group),
        centralizer,
        closure,
        triply_transitive: t0 == centralizer,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugacy::conjugacy_classes;
    use crate::group::{make_family, FamilySpec};

    fn s3() -> D2Group {
        make_family(&FamilySpec::Dihedral {
            factors: vec![(3, 1)],
        })
        .unwrap()
    }

    fn d4() -> D2Group {
        D2Group::from_parts(&[(2, 2)], &[3], &[0]).unwrap()
    }

    fn q8() -> D2Group {
        D2Group::from_parts(&[(2, 2)], &[3], &[2]).unwrap()
    }

    fn sd16() -> D2Group {
        make_family(&FamilySpec::G2 { n: 8, s: 3, t: 0 }).unwrap()
    }

    fn generators(g: &D2Group) -> Vec<IntMatrix> {
        let cl = conjugacy_classes(g);
        let mut gens = adjacency_matrices(g, &cl, 64).unwrap();
        gens.extend(dual_idempotents(g, &cl, 64).unwrap());
        gens
    }

    #[test]
    fn adjacency_basics() {
        for g in [s3(), d4(), q8()] {
            let cl = conjugacy_classes(&g);
            let mats = adjacency_matrices(&g, &cl, 64).unwrap();
            assert_eq!(mats[0], IntMatrix::identity(g.order()));
            let sum = mats.iter().skip(1).fold(mats[0].clone(), |a, m| a.add(m));
            assert_eq!(sum, IntMatrix::all_ones(g.order()));
            for (m, c) in mats.iter().zip(cl.classes()) {
                for x in 0..g.order() {
                    assert_eq!(m.row_sum(x), c.size() as i64);
                }
            }
        }
        let g = s3();
        let cl = conjugacy_classes(&g);
        let mats = adjacency_matrices(&g, &cl, 64).unwrap();
        assert!((0..6).all(|x| mats[1].row_sum(x) == 2));
    }

    #[test]
    fn adjacency_commutes_with_conjugation() {
        let g = sd16();
        let cl = conjugacy_classes(&g);
        let mats = adjacency_matrices(&g, &cl, 64).unwrap();
        let t = g.cayley();
        for h in 0..t.size() {
            let mut phi = IntMatrix::zeros(t.size());
            for u in 0..t.size() {
                phi.set(u, t.conj(h, u), 1);
            }
            for m in &mats {
                assert_eq!(m.mul(&phi), phi.mul(m));
            }
        }
    }

    #[test]
    fn scheme_axioms_hold_and_fault_is_caught() {
        for g in [s3(), d4(), q8(), sd16()] {
            let cl = conjugacy_classes(&g);
            let mats = adjacency_matrices(&g, &cl, 64).unwrap();
            let report = verify_scheme_axioms(&g, &cl, &mats).unwrap();
            assert_eq!(report.relations, cl.len());
        }
        let g = d4();
        let cl = conjugacy_classes(&g);
        let mut mats = adjacency_matrices(&g, &cl, 64).unwrap();
        assert_eq!(
            verify_scheme_axioms(&g, &cl, &mats)
                .unwrap()
                .symmetric_relations,
            5
        );
        // move the symmetric pair {(0,1),(1,0)} from N_2 to N_3 and
        // {(0,4),(4,0)} from N_3 to N_2: sum and transposes survive
        assert_eq!((mats[2].get(0, 1), mats[3].get(0, 4)), (1, 1));
        for (x, y) in [(0, 1), (1, 0)] {
            mats[2].set(x, y, 0);
            mats[3].set(x, y, 1);
        }
        for (x, y) in [(0, 4), (4, 0)] {
            mats[3].set(x, y, 0);
            mats[2].set(x, y, 1);
        }
        assert!(matches!(
            verify_scheme_axioms(&g, &cl, &mats),
            Err(Error::AxiomFailure { clause: "iv", .. })
        ));
    }

    #[test]
    fn dual_idempotent_basics() {
        let g = s3();
        let cl = conjugacy_classes(&g);
        let es = dual_idempotents(&g, &cl, 64).unwrap();
        let sum = es.iter().skip(1).fold(es[0].clone(), |a, m| a.add(m));
        assert_eq!(sum, IntMatrix::identity(6));
        for (i, e) in es.iter().enumerate() {
            assert!(e.is_diagonal());
            assert_eq!(e.trace(), cl.get(i).size() as i64);
            for (j, f) in es.iter().enumerate() {
                let expect = if i == j {
                    e.clone()
                } else {
                    IntMatrix::zeros(6)
                };
                assert_eq!(e.mul(f), expect);
            }
        }
        assert_eq!(es[2].trace(), 3);
    }

    #[test]
    fn generic_closure_examples() {
        assert_eq!(algebra_dimension(&[IntMatrix::identity(5)], 64).unwrap(), 1);
        assert_eq!(algebra_dimension(&generators(&s3()), 64).unwrap(), 11);
        assert_eq!(algebra_dimension(&generators(&d4()), 64).unwrap(), 28);
        assert_eq!(algebra_dimension(&generators(&q8()), 64).unwrap(), 28);
        // a single nilpotent Jordan block generates span{N, N^2}
        let mut n = IntMatrix::zeros(3);
        n.set(0, 1, 1);
        n.set(1, 2, 1);
        assert_eq!(algebra_dimension(&[n], 64).unwrap(), 2);
    }

    #[test]
    fn block_closure_matches_generic_closure() {
        let groups = [
            s3(),
            d4(),
            q8(),
            sd16(),
            make_family(&FamilySpec::Dihedral {
                factors: vec![(5, 1)],
            })
            .unwrap(),
            D2Group::from_parts(&[(3, 1), (3, 1)], &[1, 2], &[1, 0]).unwrap(),
        ];
        for g in groups {
            let cl = conjugacy_classes(&g);
            assert_eq!(
                terwilliger_closure_dimension(&g, &cl, 64).unwrap(),
                algebra_dimension(&generators(&g), 64).unwrap()
            );
        }
    }

    #[test]
    fn named_dimensions() {
        for (g, expect) in [(s3(), 11), (d4(), 28), (q8(), 28), (sd16(), 64)] {
            let cl = conjugacy_classes(&g);
            assert_eq!(dim_centralizer(&g).unwrap(), expect);
            assert_eq!(dim_centralizer_orbits(&g, 64).unwrap(), expect);
            assert_eq!(dim_t0_triples(&g, &cl).unwrap(), expect);
            assert_eq!(dim_t0_span(&g, &cl, 64).unwrap(), expect);
            assert_eq!(dim_closed_form(&g), expect);
            let report = is_triply_transitive(&g, &cl, 64).unwrap();
            assert_eq!(report.closure, Some(expect));
            assert!(report.triply_transitive && report.all_equal());
            assert_eq!(report.check_sandwich(), Ok(()));
        }
    }

    #[test]
    fn centralizer_hand_sums() {
        // S3: centralizers 6, 3, 3, 2, 2, 2
        assert_eq!((36 + 2 * 9 + 3 * 4) / 6, 11);
        let orders = centralizer_orders(&s3()).unwrap();
        assert_eq!(orders, vec![6, 3, 3, 2, 2, 2]);
        let orders = centralizer_orders(&d4()).unwrap();
        assert_eq!(orders.iter().filter(|&&c| c == 8).count(), 2);
        assert_eq!(orders.iter().filter(|&&c| c == 4).count(), 6);
    }

    #[test]
    fn closed_form_identities() {
        for n in 3..200u64 {
            for d in (1..=n).filter(|d| n % d == 0 && (n - d) % 2 == 0) {
                assert_eq!(centralizer_by_class_type(n, d), closed_form(n, d));
            }
        }
        // dicyclic with |A| = 2m: 2m^2 + 6m + 8
        for m in 2..50u64 {
            assert_eq!(closed_form(2 * m, 2), 2 * m * m + 6 * m + 8);
        }
    }

    #[test]
    fn guard_skips_closure_only() {
        let g = make_family(&FamilySpec::Dihedral {
            factors: vec![(37, 1)],
        })
        .unwrap();
        let cl = conjugacy_classes(&g);
        let report = is_triply_transitive(&g, &cl, 64).unwrap();
        assert_eq!(report.closure, None);
        assert!(report.triply_transitive);
        assert_eq!(report.t0, closed_form(37, 1));
        assert!(matches!(
            adjacency_matrices(&g, &cl, 64),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn sandwich_names_broken_inclusion() {
        let mut r = DimensionReport {
            t0: 10,
            closed_form: 11,
            centralizer: 11,
            closure: Some(9),
            triply_transitive: false,
        };
        assert_eq!(r.check_sandwich(), Err("T0(G) <= T(G)"));
        r.closure = Some(12);
        assert_eq!(r.check_sandwich(), Err("T(G) <= T~(G)"));
        r.closure = None;
        assert_eq!(r.check_sandwich(), Ok(()));
    }
}
