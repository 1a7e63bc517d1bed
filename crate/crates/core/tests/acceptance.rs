//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use terwilliger::abelian::{abelian_groups_of_order, diagonal_involutions, Involution};
use terwilliger::characters::{
    char_value_at, character_table, verify_orthogonality, CharLabel, ORTHOGONALITY_TOLERANCE,
};
use terwilliger::conjugacy::{
    check_coset_partition, check_paired_products, conjugacy_classes, conjugacy_classes_bruteforce,
    ClassKind,
};
use terwilliger::cyclotomic::RootSum;
use terwilliger::group::{make_family, D2Group, FamilySpec};
use terwilliger::scheme::{
    adjacency_matrices, closed_form, dim_centralizer, dim_centralizer_orbits, dim_closed_form,
    dim_t0_span, is_triply_transitive, verify_scheme_axioms,
};
use terwilliger::wedderburn::{
    multiplicities_inner_product, verify_central_idempotents, wedderburn_report,
    IDEMPOTENT_TOLERANCE,
};

const GUARD: usize = 64;
const IDEMPOTENT_MAX_ORDER: usize = 32;
const RANDOM_SPECS: usize = 60;
const SEED: u64 = 0x7e5_2024;
const RUNTIME_BUDGET_SECS: f64 = 60.0;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    Dihedral,
    Dicyclic,
    G2,
    Random,
}

struct Instance {
    name: String,
    family: Family,
    group: D2Group,
}

fn factor_list(a: &terwilliger::abelian::AbelianGroup) -> Vec<(u64, u32)> {
    a.factors().iter().map(|f| (f.p, f.e)).collect()
}

fn factor_name(factors: &[(u64, u32)]) -> String {
    factors
        .iter()
        .map(|(p, e)| format!("C{}", p.pow(*e)))
        .collect::<Vec<_>>()
        .join("x")
}

fn instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for order in 3..=16 {
        for a in abelian_groups_of_order(order) {
            let factors = factor_list(&a);
            // inversion is trivial on elementary abelian 2-groups
            if Involution::inversion(&a).is_err() {
                continue;
            }
            let group = make_family(&FamilySpec::Dihedral {
                factors: factors.clone(),
            })
            .unwrap();
            out.push(Instance {
                name: format!("Dih({})", factor_name(&factors)),
                family: Family::Dihedral,
                group,
            });
        }
    }
    for order in [4, 6, 8, 12, 16] {
        for a in abelian_groups_of_order(order) {
            let factors = factor_list(&a);
            if Involution::inversion(&a).is_err() {
                continue;
            }
            for y in a.elements().filter(|y| a.order_of(y) == 2) {
                let spec = FamilySpec::Dicyclic {
                    factors: factors.clone(),
                    y: y.coords().to_vec(),
                };
                let group = make_family(&spec).unwrap();
                out.push(Instance {
                    name: format!("Dic({}, y={:?})", factor_name(&factors), y.coords()),
                    family: Family::Dicyclic,
                    group,
                });
            }
        }
    }
    for n in 3..=16u64 {
        for s in 2..n {
            for t in 0..n {
                if let Ok(group) = make_family(&FamilySpec::G2 { n, s, t }) {
                    out.push(Instance {
                        name: format!("G2({n},{s},{t})"),
                        family: Family::G2,
                        group,
                    });
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut made = 0;
    while made < RANDOM_SPECS {
        let order = rng.gen_range(3..=24u64);
        let groups = abelian_groups_of_order(order);
        let a = groups.choose(&mut rng).unwrap();
        let Some(f) = diagonal_involutions(a).choose(&mut rng).cloned() else {
            continue;
        };
        let probe = D2Group::new(a.clone(), f.clone(), a.identity()).unwrap();
        let fixed: Vec<_> = a.elements().filter(|y| probe.fixed().is_fixed(y)).collect();
        let y = fixed.choose(&mut rng).unwrap().clone();
        let name = format!(
            "D2({}, s={:?}, y={:?})",
            factor_name(&factor_list(a)),
            f.s(),
            y.coords()
        );
        let group = D2Group::new(a.clone(), f, y).unwrap();
        out.push(Instance {
            name,
            family: Family::Random,
            group,
        });
        made += 1;
    }
    out
}

struct Criterion {
    id: u8,
    title: String,
    checked: usize,
    failures: Vec<String>,
}

impl Criterion {
    fn new(id: u8, title: &str) -> Self {
        Criterion {
            id,
            title: title.into(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn line(&self) -> String {
        let status = if self.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        let mut s = format!(
            "{status} [{}] {} ({} checks)",
            self.id, self.title, self.checked
        );
        for f in self.failures.iter().take(5) {
            s.push_str(&format!("\n       - {f}"));
        }
        if self.failures.len() > 5 {
            s.push_str(&format!("\n       - ... {} more", self.failures.len() - 5));
        }
        s
    }
}

fn named(name: &str) -> D2Group {
    match name {
        "S3" => make_family(&FamilySpec::Dihedral {
            factors: vec![(3, 1)],
        }),
        "D4" => make_family(&FamilySpec::Dihedral {
            factors: vec![(2, 2)],
        }),
        "Q8" => make_family(&FamilySpec::Dicyclic {
            factors: vec![(2, 2)],
            y: vec![2],
        }),
        "G2(8,3,0)" => make_family(&FamilySpec::G2 { n: 8, s: 3, t: 0 }),
        _ => unreachable!(),
    }
    .unwrap()
}

fn main() {
    let start = Instant::now();
    let all = instances();
    let count = |f: Family| all.iter().filter(|i| i.family == f).count();
    println!(
        "instances: {} dihedral, {} dicyclic, {} g2, {} random (seed {SEED:#x}), guard {GUARD}",
        count(Family::Dihedral),
        count(Family::Dicyclic),
        count(Family::G2),
        count(Family::Random)
    );

    let mut c1 = Criterion::new(
        1,
        "dim T0 = dim T~ = dim T (closure) = (3nd + n^2 + 4d^2)/2, exact",
    );
    let mut c2 = Criterion::new(
        2,
        "named dimensions S3=11, D4=28, Q8=28, G2(8,3,0)=64 via orbit count",
    );
    let mut c3 = Criterion::new(
        3,
        "dicyclic (unique involution y) dim = 2m^2 + 6m + 8 with |A| = 2m; dihedral d = 2^lambda",
    );
    let mut c4 = Criterion::new(
        4,
        &format!("character tables: square, sum deg^2 = |G|, orthogonality within {ORTHOGONALITY_TOLERANCE:e}, two-dim rows vanish on cosets"),
    );
    let mut c5 = Criterion::new(
        5,
        "multiplicities agree three ways; sum d^2 = dim T~, sum d deg = |G|; named vectors",
    );
    let mut c6 = Criterion::new(
        6,
        &format!(
            "central idempotents for |G| <= {IDEMPOTENT_MAX_ORDER}: e^2 = e, e e' = 0, sum e = I within {IDEMPOTENT_TOLERANCE:e}; rank e_j = deg_j d_j, dim T~ e_j = d_j^2"
        ),
    );
    let mut c7 = Criterion::new(
        7,
        "scheme axioms, paired-class products, coset partition, conjugacy partition = brute force",
    );
    let mut c8 = Criterion::new(
        8,
        "sandwich dim T0 <= dim T <= dim T~ (checked before equalities)",
    );

    let mut c3_excluded = 0;
    for inst in &all {
        let g = &inst.group;
        let name = &inst.name;
        let cl = conjugacy_classes(g);

        // 8 first, so a regression names the broken inclusion
        let report = match is_triply_transitive(g, &cl, GUARD) {
            Ok(r) => r,
            Err(e) => {
                c8.check(false, || format!("{name}: {e}"));
                continue;
            }
        };
        c8.check(report.closure.is_some(), || {
            format!("{name}: closure skipped above guard")
        });
        c8.check(report.check_sandwich().is_ok(), || {
            format!(
                "{name}: {} broken ({report:?})",
                report.check_sandwich().unwrap_err()
            )
        });

        let formula = closed_form(g.n(), g.d());
        let span = dim_t0_span(g, &cl, GUARD);
        c1.check(
            report.t0 == formula
                && report.centralizer == formula
                && report.closure == Some(formula)
                && span.as_ref().ok() == Some(&formula)
                && report.triply_transitive,
            || format!("{name}: formula {formula}, got {report:?}, span {span:?}"),
        );

        match inst.family {
            Family::Dicyclic
                if g.abelian()
                    .elements()
                    .filter(|a| g.abelian().order_of(a) == 2)
                    .count()
                    > 1 =>
            {
                // outside the corollary: y is not the unique involution of A
                c3_excluded += 1;
            }
            Family::Dicyclic => {
                let m = g.n() / 2;
                c3.check(formula == 2 * m * m + 6 * m + 8 && g.d() == 2, || {
                    format!(
                        "{name}: formula {formula}, 2m^2+6m+8 = {}",
                        2 * m * m + 6 * m + 8
                    )
                });
            }
            Family::Dihedral => {
                let expect = 1u64 << g.abelian().lambda();
                c3.check(g.d() == expect, || {
                    format!("{name}: d = {}, 2^lambda = {expect}", g.d())
                });
            }
            _ => {}
        }

        let table = character_table(g, &cl);
        c4.check(table.rows() == cl.len(), || {
            format!("{name}: {} rows, {} classes", table.rows(), cl.len())
        });
        c4.check(table.degree_square_sum() == g.order() as u64, || {
            format!("{name}: sum deg^2 = {}", table.degree_square_sum())
        });
        let ortho = verify_orthogonality(&table);
        c4.check(ortho.is_ok(), || {
            format!("{name}: {}", ortho.as_ref().unwrap_err())
        });
        let zero = RootSum::zero(table.root_order);
        for (label, row) in table.labels.iter().zip(&table.values) {
            if !matches!(label, CharLabel::TwoDim { .. }) {
                continue;
            }
            for c in cl.of_kind(ClassKind::Coset) {
                let from_table = &row[c.index];
                // independently, the trace of the explicit representation at every coset element
                let traced = c
                    .elements
                    .iter()
                    .all(|&i| char_value_at(g, label, &g.element(i)).exactly_equals(&zero));
                c4.check(from_table.is_zero() && traced, || {
                    format!("{name}: {label} nonzero on class {}", c.index)
                });
            }
        }

        match wedderburn_report(g) {
            Ok(w) => {
                let dim = dim_centralizer(g).unwrap();
                c5.check(
                    w.labels.iter().all(|l| l.agree)
                        && w.sum_of_squares == dim
                        && dim == formula
                        && w.degree_weighted_sum == g.order() as u64,
                    || format!("{name}: {w:?}"),
                );
            }
            Err(e) => c5.check(false, || format!("{name}: {e}")),
        }

        if g.order() <= IDEMPOTENT_MAX_ORDER {
            let mult = multiplicities_inner_product(g, &cl, &table);
            let result = mult.and_then(|m| {
                verify_central_idempotents(g, &cl, &table, &m, GUARD).map(|r| (m, r))
            });
            match result {
                Ok((m, r)) => {
                    let squares: Vec<u64> = m.values().iter().map(|d| d * d).collect();
                    c6.check(
                        r.block_dimensions == squares && r.max_error < IDEMPOTENT_TOLERANCE,
                        || format!("{name}: blocks {:?} vs {squares:?}", r.block_dimensions),
                    );
                }
                Err(e) => c6.check(false, || format!("{name}: {e}")),
            }
        }

        let axioms =
            adjacency_matrices(g, &cl, GUARD).and_then(|mats| verify_scheme_axioms(g, &cl, &mats));
        c7.check(axioms.is_ok(), || {
            format!("{name}: {}", axioms.as_ref().unwrap_err())
        });
        c7.check(check_paired_products(g, &cl).is_ok(), || {
            format!(
                "{name}: paired products {:?}",
                check_paired_products(g, &cl)
            )
        });
        c7.check(check_coset_partition(g, &cl).is_ok(), || {
            format!(
                "{name}: coset partition {:?}",
                check_coset_partition(g, &cl)
            )
        });
        let brute = conjugacy_classes_bruteforce(g, GUARD);
        c7.check(brute.as_ref().ok() == Some(&cl), || {
            format!("{name}: conjugacy partition differs")
        });
    }

    for (name, expect) in [("S3", 11), ("D4", 28), ("Q8", 28), ("G2(8,3,0)", 64)] {
        let g = named(name);
        let oracle = dim_centralizer_orbits(&g, GUARD).unwrap();
        c2.check(oracle == expect, || {
            format!("{name}: orbit count {oracle}, expected {expect}")
        });
        let formula = dim_closed_form(&g);
        c2.check(formula == oracle, || {
            format!("{name}: formula {formula}, orbit count {oracle}")
        });
    }

    for (name, expect) in [
        ("S3", vec![3, 1, 1]),
        ("D4", vec![5, 1, 1, 1, 0]),
        ("Q8", vec![5, 1, 1, 1, 0]),
    ] {
        let g = named(name);
        let cl = conjugacy_classes(&g);
        let table = character_table(&g, &cl);
        let got = multiplicities_inner_product(&g, &cl, &table)
            .unwrap()
            .values();
        c5.check(got == expect, || {
            format!("{name}: inner product gives {got:?}, expected {expect:?}")
        });
    }

    c3.title.push_str(&format!(
        " ({c3_excluded} dicyclic instances with several involutions excluded)"
    ));

    let elapsed = start.elapsed().as_secs_f64();
    c1.check(elapsed < RUNTIME_BUDGET_SECS, || {
        format!("runtime {elapsed:.1}s over {RUNTIME_BUDGET_SECS}s")
    });
    c1.title
        .push_str(&format!(", {elapsed:.1}s < {RUNTIME_BUDGET_SECS}s"));

    let criteria = [c1, c2, c3, c4, c5, c6, c7, c8];
    for c in &criteria {
        println!("{}", c.line());
    }
    let failed = criteria.iter().filter(|c| !c.failures.is_empty()).count();
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
