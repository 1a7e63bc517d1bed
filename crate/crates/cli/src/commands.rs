use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use terwilliger::abelian::{abelian_groups_of_order, diagonal_involutions};
use terwilliger::arith::{factorize, gcd};
use terwilliger::characters::{character_table, verify_orthogonality, CharLabel};
use terwilliger::conjugacy::{
    check_coset_partition, check_paired_products, conjugacy_classes, conjugacy_classes_bruteforce,
    ClassKind, ClassList,
};
use terwilliger::export;
use terwilliger::group::D2Group;
use terwilliger::scheme::{
    adjacency_matrices, centralizer_by_class_type, dim_centralizer_orbits, dim_t0_span,
    is_triply_transitive, verify_scheme_axioms, DimensionReport,
};
use terwilliger::wedderburn::{
    multiplicities_char_sum, verify_central_idempotents, wedderburn_report,
};
use terwilliger::Error;

use crate::spec::{GroupSpec, Kind, SValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

/// What a command produced: the rendered report and the exit code.
pub struct Outcome {
    pub body: String,
    pub code: i32,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome {
            body,
            code: EXIT_OK,
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::GuardExceeded { .. } => EXIT_GUARD,
        Error::OrthogonalityFailure { .. }
        | Error::AxiomFailure { .. }
        | Error::NonIntegralMultiplicity { .. }
        | Error::MultiplicityMismatch { .. }
        | Error::IdempotencyFailure(_)
        | Error::IdentityFailure { .. }
        | Error::Overflow => EXIT_MISMATCH,
        _ => EXIT_INVALID,
    }
}

fn csv_line<I: IntoIterator<Item = String>>(cells: I) -> String {
    let mut s = cells.into_iter().collect::<Vec<_>>().join(",");
    s.push('\n');
    s
}

fn json_body(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn list(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

pub fn info(spec: &GroupSpec, g: &D2Group, format: Format) -> Outcome {
    let a = g.abelian();
    let fd = g.fixed();
    let moduli = a.moduli();
    let fields: Vec<(&str, String)> = vec![
        ("order", g.order().to_string()),
        ("n", g.n().to_string()),
        ("d", g.d().to_string()),
        ("moduli", list(&moduli)),
        ("s", list(g.involution().s())),
        ("y", list(g.y().coords())),
        ("d_i", list(&fd.d_vec)),
        ("n_i", list(&fd.n_vec)),
        ("lambda", a.lambda().to_string()),
        ("mu", a.mu().to_string()),
        ("fixed_order", fd.fixed_order().to_string()),
        ("b_order", fd.b_order().to_string()),
    ];
    let body = match format {
        Format::Text => fields
            .iter()
            .map(|(k, v)| format!("{k:<12} {v}\n"))
            .collect(),
        Format::Csv => {
            csv_line(fields.iter().map(|(k, _)| k.to_string()))
                + &csv_line(fields.iter().map(|(_, v)| v.clone()))
        }
        Format::Json => json_body(&json!({
            "spec": spec,
            "order": g.order(),
            "n": g.n(),
            "d": g.d(),
            "moduli": moduli,
            "s": g.involution().s(),
            "y": g.y().coords(),
            "d_i": fd.d_vec,
            "n_i": fd.n_vec,
            "lambda": a.lambda(),
            "mu": a.mu(),
            "fixed_order": fd.fixed_order(),
            "b_order": fd.b_order(),
        })),
    };
    Outcome::ok(body)
}

fn kind_str(k: ClassKind) -> &'static str {
    match k {
        ClassKind::Fixed => "fixed",
        ClassKind::Paired => "paired",
        ClassKind::Coset => "coset",
    }
}

fn elem_str(g: &D2Group, idx: usize) -> String {
    let e = g.element(idx);
    format!(
        "({}|{})",
        list(e.a.coords()).replace(' ', ","),
        u8::from(e.beta)
    )
}

pub fn classes(
    spec: &GroupSpec,
    g: &D2Group,
    format: Format,
    oracle: bool,
    guard: usize,
) -> Result<Outcome, Error> {
    let cl = conjugacy_classes(g);
    let mut code = EXIT_OK;
    let mut oracle_note = None;
    if oracle {
        let brute = conjugacy_classes_bruteforce(g, guard)?;
        let same = brute == cl;
        if !same {
            code = EXIT_MISMATCH;
        }
        oracle_note = Some(same);
    }
    let body = match format {
        Format::Text => {
            let mut s = String::new();
            for c in cl.classes() {
                let els: Vec<String> = c.elements.iter().map(|&i| elem_str(g, i)).collect();
                let _ = writeln!(
                    s,
                    "{:>3} {:<7} {:>3}  {}",
                    c.index,
                    kind_str(c.kind),
                    c.size(),
                    els.join(" ")
                );
            }
            let (f, p, k) = cl.counts();
            let _ = writeln!(
                s,
                "classes: {} (fixed {f}, paired {p}, coset {k})",
                cl.len()
            );
            if let Some(same) = oracle_note {
                let _ = writeln!(
                    s,
                    "brute-force partition: {}",
                    if same { "identical" } else { "DIFFERENT" }
                );
            }
            s
        }
        Format::Csv => {
            let mut s = csv_line(["index", "kind", "size", "rep"].map(String::from));
            for c in cl.classes() {
                s += &csv_line([
                    c.index.to_string(),
                    kind_str(c.kind).to_string(),
                    c.size().to_string(),
                    g.index_of(&c.rep).to_string(),
                ]);
            }
            s
        }
        Format::Json => json_body(&json!({
            "spec": spec,
            "classes": cl.classes().iter().map(|c| json!({
                "index": c.index,
                "kind": kind_str(c.kind),
                "size": c.size(),
                "rep": g.index_of(&c.rep),
                "elements": c.elements,
            })).collect::<Vec<_>>(),
            "oracle_agrees": oracle_note,
        })),
    };
    Ok(Outcome { body, code })
}

pub fn chartable(
    spec: &GroupSpec,
    g: &D2Group,
    format: Format,
    oracle: bool,
) -> Result<Outcome, Error> {
    let cl = conjugacy_classes(g);
    let table = character_table(g, &cl);
    let ortho = if oracle {
        Some(verify_orthogonality(&table)?)
    } else {
        None
    };
    let body = match format {
        Format::Text => {
            let mut s = export::chartable_text(g, &cl, &table);
            if let Some(r) = ortho {
                let _ = writeln!(
                    s,
                    "orthogonality: rows {:.1e}, columns {:.1e}",
                    r.max_row_error, r.max_column_error
                );
            }
            s
        }
        Format::Csv => export::chartable_csv(g, &cl, &table),
        Format::Json => {
            let mut v = export::chartable_json(g, &cl, &table);
            v["spec"] = json!(spec);
            if let Some(r) = ortho {
                v["orthogonality"] = json!(r);
            }
            json_body(&v)
        }
    };
    Ok(Outcome::ok(body))
}

#[derive(Debug, Clone, Serialize)]
pub struct DimsOutcome {
    pub report: DimensionReport,
    pub sandwich: Result<(), &'static str>,
    pub t0_span: Option<u64>,
    pub centralizer_orbits: Option<u64>,
    pub centralizer_by_class_type: Option<u64>,
}

impl DimsOutcome {
    pub fn passed(&self) -> bool {
        let extra = [
            self.t0_span,
            self.centralizer_orbits,
            self.centralizer_by_class_type,
        ];
        self.sandwich.is_ok()
            && self.report.all_equal()
            && self.report.triply_transitive
            && extra
                .iter()
                .flatten()
                .all(|&v| v == self.report.closed_form)
    }
}

fn over_guard<T>(r: Result<T, Error>) -> Result<Option<T>, Error> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::GuardExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn compute_dims(
    g: &D2Group,
    cl: &ClassList,
    oracle: bool,
    guard: usize,
) -> Result<DimsOutcome, Error> {
    let report = is_triply_transitive(g, cl, guard)?;
    let sandwich = report.check_sandwich();
    let (t0_span, orbits, by_type) = if oracle {
        (
            over_guard(dim_t0_span(g, cl, guard))?,
            over_guard(dim_centralizer_orbits(g, guard))?,
            Some(centralizer_by_class_type(g.n(), g.d())),
        )
    } else {
        (None, None, None)
    };
    Ok(DimsOutcome {
        report,
        sandwich,
        t0_span,
        centralizer_orbits: orbits,
        centralizer_by_class_type: by_type,
    })
}

fn opt(v: Option<u64>) -> String {
    v.map_or_else(String::new, |v| v.to_string())
}

pub fn dims(
    spec: &GroupSpec,
    g: &D2Group,
    format: Format,
    oracle: bool,
    guard: usize,
) -> Result<Outcome, Error> {
    let cl = conjugacy_classes(g);
    let d = compute_dims(g, &cl, oracle, guard)?;
    let r = &d.report;
    let code = if d.passed() { EXIT_OK } else { EXIT_MISMATCH };
    let body = match format {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "dim T0          {}", r.t0);
            let closure = r.closure.map_or_else(
                || format!("skipped (|G| > guard {guard})"),
                |c| c.to_string(),
            );
            let _ = writeln!(s, "dim T closure   {closure}");
            let _ = writeln!(s, "dim T~          {}", r.centralizer);
            let _ = writeln!(s, "closed form     {}", r.closed_form);
            if oracle {
                let _ = writeln!(
                    s,
                    "T0 span         {}",
                    d.t0_span.map_or("skipped".into(), |v| v.to_string())
                );
                let _ = writeln!(
                    s,
                    "T~ orbits       {}",
                    d.centralizer_orbits
                        .map_or("skipped".into(), |v| v.to_string())
                );
                let _ = writeln!(s, "T~ class types  {}", opt(d.centralizer_by_class_type));
            }
            match d.sandwich {
                Ok(()) => s.push_str("sandwich        ok\n"),
                Err(which) => {
                    let _ = writeln!(s, "sandwich        BROKEN: {which}");
                }
            }
            let _ = writeln!(
                s,
                "verdict         {}",
                if r.triply_transitive {
                    "triply transitive"
                } else {
                    "not triply transitive"
                }
            );
            s
        }
        Format::Csv => {
            csv_line(
                [
                    "t0",
                    "closure",
                    "centralizer",
                    "closed_form",
                    "sandwich",
                    "triply_transitive",
                ]
                .map(String::from),
            ) + &csv_line([
                r.t0.to_string(),
                opt(r.closure),
                r.centralizer.to_string(),
                r.closed_form.to_string(),
                d.sandwich.is_ok().to_string(),
                r.triply_transitive.to_string(),
            ])
        }
        Format::Json => json_body(&json!({
            "spec": spec,
            "t0": r.t0,
            "closure": r.closure,
            "centralizer": r.centralizer,
            "closed_form": r.closed_form,
            "t0_span": d.t0_span,
            "centralizer_orbits": d.centralizer_orbits,
            "centralizer_by_class_type": d.centralizer_by_class_type,
            "sandwich": d.sandwich.err(),
            "triply_transitive": r.triply_transitive,
            "passed": d.passed(),
        })),
    };
    Ok(Outcome { body, code })
}

pub fn wedderburn(
    spec: &GroupSpec,
    g: &D2Group,
    format: Format,
    oracle: bool,
    guard: usize,
) -> Result<Outcome, Error> {
    let report = wedderburn_report(g)?;
    let idempotents = if oracle && g.order() <= guard {
        let cl = conjugacy_classes(g);
        let table = character_table(g, &cl);
        let mult = multiplicities_char_sum(&table)?;
        Some(verify_central_idempotents(g, &cl, &table, &mult, guard)?)
    } else {
        None
    };
    let body = match format {
        Format::Text => {
            let mut s = export::wedderburn_text(&report);
            if let Some(r) = &idempotents {
                let _ = writeln!(s, "central idempotents: ok (max error {:.1e})", r.max_error);
            }
            s
        }
        Format::Csv => {
            let mut s = csv_line(
                [
                    "label",
                    "degree",
                    "multiplicity",
                    "closed_form",
                    "char_sum",
                    "inner_product",
                ]
                .map(String::from),
            );
            for l in &report.labels {
                s += &csv_line([
                    format!("\"{}\"", l.label),
                    l.degree.to_string(),
                    l.multiplicity.to_string(),
                    l.closed_form.to_string(),
                    l.char_sum.to_string(),
                    l.inner_product.to_string(),
                ]);
            }
            s
        }
        Format::Json => {
            let mut v = export::wedderburn_json(&report);
            v["spec"] = json!(spec);
            v["idempotents"] = json!(idempotents);
            json_body(&v)
        }
    };
    Ok(Outcome::ok(body))
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, r: Result<String, String>) -> Check {
    match r {
        Ok(detail) => Check {
            name,
            passed: true,
            detail,
        },
        Err(detail) => Check {
            name,
            passed: false,
            detail,
        },
    }
}

fn mismatch_or<T>(r: Result<T, Error>) -> Result<Result<T, String>, Error> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e) if exit_code(&e) == EXIT_MISMATCH => Ok(Err(e.to_string())),
        Err(e) => Err(e),
    }
}

/// Every closed form against its oracle. Guard overruns abort the run.
pub fn run_checks(g: &D2Group, guard: usize) -> Result<Vec<Check>, Error> {
    if g.order() > guard {
        return Err(Error::GuardExceeded {
            order: g.order(),
            guard,
        });
    }
    let mut checks = Vec::new();
    let cl = conjugacy_classes(g);

    let brute = conjugacy_classes_bruteforce(g, guard)?;
    checks.push(check(
        "conjugacy partition",
        if brute == cl {
            Ok(format!("{} classes", cl.len()))
        } else {
            Err("closed form differs from brute force".into())
        },
    ));
    checks.push(check(
        "paired products",
        check_paired_products(g, &cl)
            .map(|()| String::new())
            .map_err(|(i, j)| format!("classes {i} and {j}")),
    ));
    checks.push(check(
        "coset partition",
        check_coset_partition(g, &cl)
            .map(|()| String::new())
            .map_err(|i| format!("class {i}")),
    ));
    let mats = adjacency_matrices(g, &cl, guard)?;
    checks.push(check(
        "scheme axioms",
        mismatch_or(verify_scheme_axioms(g, &cl, &mats))?.map(|r| {
            format!(
                "{} relations, {} symmetric",
                r.relations, r.symmetric_relations
            )
        }),
    ));

    let table = character_table(g, &cl);
    checks.push(check(
        "character orthogonality",
        mismatch_or(verify_orthogonality(&table))?.map(|r| {
            format!(
                "rows {:.1e}, columns {:.1e}",
                r.max_row_error, r.max_column_error
            )
        }),
    ));
    let deg2 = table.degree_square_sum();
    checks.push(check(
        "sum of squared degrees",
        if deg2 == g.order() as u64 {
            Ok(deg2.to_string())
        } else {
            Err(format!("{deg2} != {}", g.order()))
        },
    ));
    let coset_cols: Vec<usize> = cl.of_kind(ClassKind::Coset).map(|c| c.index).collect();
    let nonzero = table.labels.iter().zip(&table.values).find(|(l, vals)| {
        matches!(l, CharLabel::TwoDim { .. }) && coset_cols.iter().any(|&c| !vals[c].is_zero())
    });
    checks.push(check(
        "two-dim characters vanish on cosets",
        match nonzero {
            None => Ok(String::new()),
            Some((l, _)) => Err(format!("{l} is nonzero on a coset class")),
        },
    ));

    let d = compute_dims(g, &cl, true, guard)?;
    checks.push(check(
        "sandwich T0 <= T <= T~",
        d.sandwich
            .map(|()| String::new())
            .map_err(|w| format!("inclusion {w} broken")),
    ));
    let r = &d.report;
    let all = [
        Some(r.t0),
        r.closure,
        Some(r.centralizer),
        d.t0_span,
        d.centralizer_orbits,
        d.centralizer_by_class_type,
    ];
    let shown = all.iter().map(|v| opt(*v)).collect::<Vec<_>>().join("/");
    checks.push(check(
        "dimension formula",
        if d.passed() {
            Ok(format!("{} ({shown})", r.closed_form))
        } else {
            Err(format!(
                "closed form {} vs t0/closure/centralizer/span/orbits/types {shown}",
                r.closed_form
            ))
        },
    ));

    let w = mismatch_or(wedderburn_report(g))?;
    checks.push(check(
        "wedderburn multiplicities",
        w.as_ref()
            .map(|r| format!("sum d^2 = {}", r.sum_of_squares))
            .map_err(Clone::clone),
    ));
    let mult = multiplicities_char_sum(&table);
    let idem = match mismatch_or(mult)? {
        Ok(m) => mismatch_or(verify_central_idempotents(g, &cl, &table, &m, guard))?
            .map(|r| format!("max error {:.1e}", r.max_error)),
        Err(e) => Err(e),
    };
    checks.push(check("central idempotents", idem));
    Ok(checks)
}

pub fn verify(
    spec: &GroupSpec,
    g: &D2Group,
    format: Format,
    guard: usize,
) -> Result<Outcome, Error> {
    let checks = run_checks(g, guard)?;
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
    let code = if failed.is_empty() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    };
    let body = match format {
        Format::Text => {
            let mut s = String::new();
            for c in &checks {
                let _ = writeln!(
                    s,
                    "{} {:<38} {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
            let _ = writeln!(
                s,
                "{}: {} of {} checks failed",
                spec.label(),
                failed.len(),
                checks.len()
            );
            s
        }
        Format::Csv => {
            let mut s = csv_line(["check", "passed", "detail"].map(String::from));
            for c in &checks {
                s += &csv_line([
                    c.name.to_string(),
                    c.passed.to_string(),
                    format!("\"{}\"", c.detail.replace('"', "'")),
                ]);
            }
            s
        }
        Format::Json => json_body(&json!({
            "spec": spec,
            "instance": spec.label(),
            "passed": failed.is_empty(),
            "checks": checks,
        })),
    };
    Ok(Outcome { body, code })
}

/// Instances of a family for one value of the size parameter `n`
/// (`|A|` for dihedral, dicyclic and general; the cyclic order for g2).
pub fn sweep_instances(kind: Kind, n: u64) -> Vec<GroupSpec> {
    let base = GroupSpec {
        kind,
        factors: None,
        s: None,
        y: None,
        n: None,
        t: None,
    };
    match kind {
        Kind::Dihedral => {
            if n < 3 {
                return vec![];
            }
            vec![GroupSpec::dihedral(factorize(n))]
        }
        Kind::Dicyclic => {
            if n < 4 || n % 2 == 1 {
                return vec![];
            }
            let factors = factorize(n);
            let y = factors
                .iter()
                .map(|&(p, e)| if p == 2 { 2u64.pow(e) / 2 } else { 0 })
                .collect();
            vec![GroupSpec {
                factors: Some(factors),
                y: Some(y),
                ..base
            }]
        }
        Kind::G2 => {
            let mut out = Vec::new();
            for s in 2..n {
                if (s * s) % n != 1 || gcd(s, n) != 1 {
                    continue;
                }
                for t in (0..n).filter(|t| (t * (s - 1)) % n == 0) {
                    out.push(GroupSpec {
                        n: Some(n),
                        s: Some(SValue::Scalar(s)),
                        t: Some(t),
                        ..base.clone()
                    });
                }
            }
            out
        }
        Kind::General => {
            let mut out = Vec::new();
            for a in abelian_groups_of_order(n) {
                let factors: Vec<(u64, u32)> = a.factors().iter().map(|f| (f.p, f.e)).collect();
                for f in diagonal_involutions(&a) {
                    let group = match D2Group::new(a.clone(), f.clone(), a.identity()) {
                        Ok(g) => g,
                        Err(_) => continue,
                    };
                    for y in a.elements().filter(|y| group.fixed().is_fixed(y)) {
                        out.push(GroupSpec {
                            factors: Some(factors.clone()),
                            s: Some(SValue::Vector(f.s().to_vec())),
                            y: Some(y.coords().to_vec()),
                            ..base.clone()
                        });
                    }
                }
            }
            out
        }
    }
}

pub struct SweepRow {
    pub cells: Vec<String>,
    pub passed: bool,
}

pub const SWEEP_HEADER: [&str; 12] = [
    "instance",
    "order",
    "n",
    "d",
    "t0",
    "closure",
    "centralizer",
    "closed_form",
    "sum_d2",
    "sandwich",
    "triply_transitive",
    "multiplicities_agree",
];

pub fn sweep_row(spec: &GroupSpec, g: &D2Group, guard: usize) -> Result<SweepRow, Error> {
    let cl = conjugacy_classes(g);
    let d = compute_dims(g, &cl, false, guard)?;
    let w = mismatch_or(wedderburn_report(g))?;
    let r = &d.report;
    let agree = w.is_ok();
    let passed = d.passed() && agree;
    Ok(SweepRow {
        cells: vec![
            spec.label(),
            g.order().to_string(),
            g.n().to_string(),
            g.d().to_string(),
            r.t0.to_string(),
            opt(r.closure),
            r.centralizer.to_string(),
            r.closed_form.to_string(),
            w.as_ref()
                .map_or_else(|_| String::new(), |w| w.sum_of_squares.to_string()),
            d.sandwich.is_ok().to_string(),
            r.triply_transitive.to_string(),
            agree.to_string(),
        ],
        passed,
    })
}
