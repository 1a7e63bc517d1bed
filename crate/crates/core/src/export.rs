//! Text, CSV and JSON renderings of tables and reports.

use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::CharacterTable;
use crate::conjugacy::ClassList;
use crate::cyclotomic::RootSum;
use crate::group::D2Group;
use crate::scheme::IntMatrix;
use crate::wedderburn::WedderburnReport;

/// 12 significant digits, trailing zeros trimmed, `-0` printed as `0`.
fn sig12(x: f64) -> String {
    if x == 0.0 || x.abs() < 1e-12 {
        return "0".into();
    }
    let digits = 11 - x.abs().log10().floor() as i32;
    let s = if digits > 0 {
        format!("{:.*}", digits as usize, x)
    } else {
        format!("{:.0}", x)
    };
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// `re+im i`, e.g. `-0.5+0.866025403784i`.
pub fn complex_csv(z: Complex64) -> String {
    let im = sig12(z.im);
    let sign = if im.starts_with('-') { "" } else { "+" };
    format!("{}{sign}{im}i", sig12(z.re))
}

pub fn root_sum_json(v: &RootSum) -> Value {
    let z = v.eval();
    json!({
        "terms": v.terms().map(|(k, c)| [k as i64, c]).collect::<Vec<_>>(),
        "value": [z.re, z.im],
    })
}

fn class_headers(group: &D2Group, classes: &ClassList) -> Vec<String> {
    classes
        .classes()
        .iter()
        .map(|c| format!("{}{}", kind_tag(c.kind), group.index_of(&c.rep)))
        .collect()
}

fn kind_tag(kind: crate::conjugacy::ClassKind) -> &'static str {
    use crate::conjugacy::ClassKind::*;
    match kind {
        Fixed => "F",
        Paired => "P",
        Coset => "C",
    }
}

pub fn chartable_text(group: &D2Group, classes: &ClassList, table: &CharacterTable) -> String {
    let mut rows = vec![{
        let mut h = vec!["".to_string()];
        h.extend(class_headers(group, classes));
        h
    }];
    rows.push({
        let mut h = vec!["size".to_string()];
        h.extend(table.class_sizes.iter().map(u64::to_string));
        h
    });
    for (label, vals) in table.labels.iter().zip(&table.values) {
        let mut r = vec![label.to_string()];
        r.extend(vals.iter().map(|v| v.reduced().to_string()));
        rows.push(r);
    }
    grid(&rows)
}

fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:>w$}", w = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn chartable_csv(group: &D2Group, classes: &ClassList, table: &CharacterTable) -> String {
    let mut out = String::from("label,degree");
    for h in class_headers(group, classes) {
        out.push(',');
        out.push_str(&h);
    }
    out.push('\n');
    for ((label, deg), vals) in table.labels.iter().zip(&table.degrees).zip(&table.values) {
        out.push_str(&format!("\"{label}\",{deg}"));
        for v in vals {
            out.push(',');
            out.push_str(&complex_csv(v.eval()));
        }
        out.push('\n');
    }
    out
}

pub fn chartable_json(group: &D2Group, classes: &ClassList, table: &CharacterTable) -> Value {
    json!({
        "root_order": table.root_order,
        "group_order": table.group_order,
        "classes": classes.classes().iter().map(|c| json!({
            "kind": c.kind,
            "rep": group.index_of(&c.rep),
            "size": c.size(),
        })).collect::<Vec<_>>(),
        "rows": table.labels.iter().zip(&table.degrees).zip(&table.values).map(|((l, d), vals)| json!({
            "label": l.to_string(),
            "degree": d,
            "values": vals.iter().map(root_sum_json).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

#[derive(Serialize)]
struct LabelRow {
    label: String,
    degree: u64,
    multiplicity: u64,
    closed_form: bool,
    char_sum: bool,
    inner_product: bool,
}

pub fn wedderburn_json(report: &WedderburnReport) -> Value {
    let labels: Vec<LabelRow> = report
        .labels
        .iter()
        .map(|l| LabelRow {
            label: l.label.to_string(),
            degree: l.degree,
            multiplicity: l.multiplicity,
            closed_form: l.closed_form == l.multiplicity,
            char_sum: l.char_sum == l.multiplicity,
            inner_product: l.inner_product == l.multiplicity,
        })
        .collect();
    json!({
        "labels": labels,
        "blocks": report.blocks,
        "identities": {
            "sum_of_squares": {
                "value": report.sum_of_squares,
                "dim_centralizer": report.dim_centralizer,
                "holds": report.sum_of_squares == report.dim_centralizer,
            },
            "degree_weighted_sum": {
                "value": report.degree_weighted_sum,
                "group_order": report.group_order,
                "holds": report.degree_weighted_sum == report.group_order,
            },
        },
    })
}

pub fn wedderburn_text(report: &WedderburnReport) -> String {
    let mut rows = vec![vec![
        "label".to_string(),
        "deg".into(),
        "mult".into(),
        "closed".into(),
        "charsum".into(),
        "inner".into(),
    ]];
    for l in &report.labels {
        rows.push(vec![
            l.label.to_string(),
            l.degree.to_string(),
            l.multiplicity.to_string(),
            l.closed_form.to_string(),
            l.char_sum.to_string(),
            l.inner_product.to_string(),
        ]);
    }
    let mut out = grid(&rows);
    let blocks: Vec<String> = report.blocks.iter().map(u64::to_string).collect();
    out.push_str(&format!("blocks: ({})\n", blocks.join(",")));
    out.push_str(&format!(
        "sum d^2 = {} (dim centralizer {})\n",
        report.sum_of_squares, report.dim_centralizer
    ));
    out.push_str(&format!(
        "sum d*deg = {} (|G| {})\n",
        report.degree_weighted_sum, report.group_order
    ));
    out
}

/// Each matrix under a `# name` header.
pub fn matrices_text(named: &[(String, IntMatrix)]) -> String {
    let mut out = String::new();
    for (name, m) in named {
        out.push_str(&format!("# {name}\n"));
        out.push_str(&m.to_text());
        if !out.ends_with('\n') {
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::character_table;
    use crate::conjugacy::conjugacy_classes;
    use crate::group::{make_family, FamilySpec};
    use crate::wedderburn::wedderburn_report;

    #[test]
    fn complex_formatting() {
        let z = RootSum::root(3, 1).eval();
        assert_eq!(complex_csv(z), "-0.5+0.866025403784i");
        assert_eq!(complex_csv(z.conj()), "-0.5-0.866025403784i");
        assert_eq!(complex_csv(Complex64::new(2.0, -1e-17)), "2+0i");
        assert_eq!(complex_csv(Complex64::new(123456.0, 0.0)), "123456+0i");
    }

    #[test]
    fn s3_exports() {
        let g = make_family(&FamilySpec::Dihedral {
            factors: vec![(3, 1)],
        })
        .unwrap();
        let cl = conjugacy_classes(&g);
        let t = character_table(&g, &cl);
        let csv = chartable_csv(&g, &cl, &t);
        assert_eq!(csv.lines().count(), 4);
        assert!(csv.lines().last().unwrap().ends_with(",2,2+0i,-1+0i,0+0i"));
        let text = chartable_text(&g, &cl, &t);
        assert!(text.contains("phi[1]"));
        let j = chartable_json(&g, &cl, &t);
        assert_eq!(j["rows"][2]["values"][1]["terms"], json!([[2, 1], [4, 1]]));

        let r = wedderburn_report(&g).unwrap();
        let w = wedderburn_json(&r);
        assert_eq!(w["identities"]["sum_of_squares"]["value"], 11);
        assert_eq!(w["labels"][0]["multiplicity"], 3);
        assert!(wedderburn_text(&r).contains("blocks: (3,1,1)"));
    }
}
