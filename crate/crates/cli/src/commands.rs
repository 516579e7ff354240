use std::collections::BTreeMap;

use anyhow::{bail, Result};
use corners::bijections::{shape_correspondence, symmetric_to_type_b, type_b_to_symmetric};
use corners::chain::{
    corner_event_probability_formula, count_tableaux, expected_corners, formula_range, total_corners, u_distribution,
};
use corners::decimal::rational_to_string;
use corners::enumerator::Enumerator;
use corners::sampler::{monte_carlo_corner_report_with, sample_permutation_tableaux};
use corners::tableaux::{Rows, TableauRecord};
use corners::verify::{drawn_pair, run_suite, VerifyOptions};
use corners::{BorderPath, Exec, Family, SymmetricTableau, Tableau, TypeBTableau};
use serde::Serialize;

use crate::output::{emit, render, Format, OutputArgs, Table};
use crate::{BijectionCommand, Command, FillingArgs, FormulaCommand};

fn exec(sequential: bool) -> Exec {
    if sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

/// Runs a command; `Ok(false)` means a verification failure.
pub fn run(command: Command) -> Result<bool> {
    match command {
        Command::Census { size, sequential, output } => {
            let c = Enumerator::with_exec(exec(sequential)).census(size.size, size.family)?;
            let text = render(output.format, &c, || {
                let mut t = Table::new(&["quantity", "value"]);
                t.push(["family".to_string(), c.family.to_string()]);
                t.push(["n".to_string(), c.n.to_string()]);
                t.push(["cardinality".to_string(), c.cardinality.to_string()]);
                t.push(["totalCorners".to_string(), c.total_corners.to_string()]);
                t.push(["lastStepSouth".to_string(), c.last_step_south_count.to_string()]);
                t.push(["firstStepWest".to_string(), c.first_step_west_count.to_string()]);
                if let Some(occ) = &c.total_occupied_corners {
                    t.push(["occupiedCorners".to_string(), occ.to_string()]);
                }
                for (k, v) in &c.corner_counts_by_k {
                    t.push([format!("corners@{k}"), v.to_string()]);
                }
                for (u, v) in &c.u_histogram {
                    t.push([format!("U={u}"), v.to_string()]);
                }
                t
            })?;
            emit(&output, &text)?;
            Ok(true)
        }
        Command::Enumerate { size, sequential, output } => {
            let all = Enumerator::with_exec(exec(sequential)).tableaux(size.size, size.family)?;
            let records: Vec<TableauRecord> = all.iter().map(Tableau::to_record).collect();
            let text = render(output.format, &records, || {
                let mut t = Table::new(&["index", "family", "path", "rows", "corners"]);
                for (i, (r, tab)) in records.iter().zip(&all).enumerate() {
                    t.push([
                        (i + 1).to_string(),
                        r.family.to_string(),
                        r.path.to_string(),
                        r.rows.join("/"),
                        tab.path().corner_count().to_string(),
                    ]);
                }
                t
            })?;
            emit(&output, &text)?;
            Ok(true)
        }
        Command::Verify { suite, max_size, dp_max, sequential, timing, output } => {
            let report = run_suite(suite, VerifyOptions { max_size, dp_max, exec: exec(sequential), timing })?;
            let text = render(output.format, &report, || {
                let mut t = Table::new(&["id", "params", "formula", "dp", "census", "status"]);
                for r in &report.rows {
                    let cell = |v: &Option<String>| v.clone().unwrap_or_else(|| "-".into());
                    t.push([
                        r.id.clone(),
                        r.params.clone(),
                        cell(&r.formula),
                        cell(&r.dp),
                        cell(&r.census),
                        r.status.to_string(),
                    ]);
                }
                t
            })?;
            emit(&output, &text)?;
            let failures: Vec<_> = report.failures().collect();
            if output.format == Format::Table {
                eprintln!("{} rows, {} failed", report.rows.len(), failures.len());
            }
            for f in &failures {
                eprintln!("FAIL {} {}: formula={:?} dp={:?} census={:?}", f.id, f.params, f.formula, f.dp, f.census);
            }
            Ok(report.pass)
        }
        Command::Formula { which } => formula(which),
        Command::Bijection { which } => bijection(which),
        Command::Sample { size, samples, seed, tableaux, sequential, output } => {
            let text = if tableaux {
                if size.family != Family::Permutation {
                    bail!("filling-level sampling exists only for the permutation family");
                }
                let drawn = sample_permutation_tableaux(size.size, samples, seed, exec(sequential))?;
                let records: Vec<TableauRecord> = drawn.into_iter().map(|t| Tableau::from(t).to_record()).collect();
                render(output.format, &records, || record_table(&records))?
            } else {
                let report = monte_carlo_corner_report_with(size.size, size.family, samples, seed, exec(sequential))?;
                render(output.format, &report, || {
                    let mut t = Table::new(&["k", "hits", "frequency", "reference", "z"]);
                    t.push([
                        "mean".to_string(),
                        report.sample_count.to_string(),
                        format!("{:.12}", report.mean_corners),
                        rational_to_string(&report.reference),
                        report.z_score.map_or("-".into(), |z| format!("{z:.4}")),
                    ]);
                    for p in &report.per_k {
                        t.push([
                            p.k.to_string(),
                            p.hits.to_string(),
                            format!("{:.12}", p.frequency),
                            rational_to_string(&p.reference),
                            p.z_score.map_or("-".into(), |z| format!("{z:.4}")),
                        ]);
                    }
                    t
                })?
            };
            emit(&output, &text)?;
            Ok(true)
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CornerFormulas {
    family: Family,
    n: usize,
    expected_corners: String,
    total_corners: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ProbabilityRow {
    k: usize,
    probability: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Probabilities {
    family: Family,
    n: usize,
    probabilities: Vec<ProbabilityRow>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Count {
    family: Family,
    n: usize,
    count: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ULaw {
    family: Family,
    n: usize,
    law: BTreeMap<usize, String>,
}

fn formula(which: FormulaCommand) -> Result<bool> {
    let (text, output): (String, OutputArgs) = match which {
        FormulaCommand::Corners { size, output } => {
            let value = CornerFormulas {
                family: size.family,
                n: size.size,
                expected_corners: rational_to_string(&expected_corners(size.size, size.family)?),
                total_corners: total_corners(size.size, size.family)?.to_string(),
            };
            let text = render(output.format, &value, || {
                let mut t = Table::new(&["quantity", "value"]);
                t.push(["expectedCorners", value.expected_corners.as_str()]);
                t.push(["totalCorners", value.total_corners.as_str()]);
                t
            })?;
            (text, output)
        }
        FormulaCommand::Probability { size, k, output } => {
            let ks: Vec<usize> = match k {
                Some(k) => vec![k],
                None => formula_range(size.size, size.family).collect(),
            };
            let probabilities = ks
                .into_iter()
                .map(|k| {
                    let p = corner_event_probability_formula(size.size, k, size.family)?;
                    Ok(ProbabilityRow { k, probability: rational_to_string(&p) })
                })
                .collect::<Result<Vec<_>, corners::Error>>()?;
            if probabilities.is_empty() {
                // n < 2 leaves the range empty; report it as the domain error it is
                corner_event_probability_formula(size.size, 1, size.family)?;
            }
            let value = Probabilities { family: size.family, n: size.size, probabilities };
            let text = render(output.format, &value, || {
                let mut t = Table::new(&["k", "probability"]);
                for r in &value.probabilities {
                    t.push([r.k.to_string(), r.probability.clone()]);
                }
                t
            })?;
            (text, output)
        }
        FormulaCommand::Count { size, output } => {
            let value =
                Count { family: size.family, n: size.size, count: count_tableaux(size.size, size.family).to_string() };
            let text = render(output.format, &value, || {
                let mut t = Table::new(&["n", "count"]);
                t.push([value.n.to_string(), value.count.clone()]);
                t
            })?;
            (text, output)
        }
        FormulaCommand::ULaw { size, output } => {
            let law = u_distribution(size.size, size.family)?;
            let value = ULaw {
                family: size.family,
                n: size.size,
                law: law.iter().map(|(&u, p)| (u, rational_to_string(p))).collect(),
            };
            let text = render(output.format, &value, || {
                let mut t = Table::new(&["U", "probability"]);
                for (u, p) in &value.law {
                    t.push([u.to_string(), p.clone()]);
                }
                t
            })?;
            (text, output)
        }
    };
    emit(&output, &text)?;
    Ok(true)
}

fn parse_rows(text: &str, pointed: bool) -> Result<Rows> {
    text.split(',')
        .map(|row| {
            row.trim()
                .chars()
                .map(|c| match c {
                    '1' => Ok(true),
                    '0' => Ok(false),
                    '*' | '●' if pointed => Ok(true),
                    '.' if pointed => Ok(false),
                    other => bail!("unexpected '{other}' in rows"),
                })
                .collect()
        })
        .collect()
}

fn record_table(records: &[TableauRecord]) -> Table {
    let mut t = Table::new(&["family", "path", "rows"]);
    for r in records {
        t.push([r.family.to_string(), r.path.to_string(), r.rows.join("/")]);
    }
    t
}

fn emit_records(output: &OutputArgs, records: &[TableauRecord]) -> Result<()> {
    let text = match (output.format, records) {
        (Format::Json, [one]) => render(Format::Json, one, || record_table(records))?,
        _ => render(output.format, &records, || record_table(records))?,
    };
    emit(output, &text)
}

fn bijection(which: BijectionCommand) -> Result<bool> {
    match which {
        BijectionCommand::Forward { filling: FillingArgs { path, rows }, output } => {
            let s = SymmetricTableau::new(BorderPath::parse(&path)?, parse_rows(&rows, true)?)?;
            let b = symmetric_to_type_b(&s)?;
            emit_records(&output, &[Tableau::from(b).to_record()])?;
        }
        BijectionCommand::Inverse { filling: FillingArgs { path, rows }, output } => {
            let b = TypeBTableau::new(BorderPath::parse(&path)?, parse_rows(&rows, false)?)?;
            let s = type_b_to_symmetric(&b)?;
            emit_records(&output, &[Tableau::from(s).to_record()])?;
        }
        BijectionCommand::Shape { path, output } => {
            let c = shape_correspondence(&BorderPath::parse(&path)?)?;
            let text = render(output.format, &c, || {
                let mut t = Table::new(&["tree-like", "permutation", "corners", "extra"]);
                t.push([
                    c.tree_like_path.to_string(),
                    c.permutation_path.to_string(),
                    format!("{} -> {}", c.tree_like_path.corner_count(), c.permutation_path.corner_count()),
                    c.corner_difference().to_string(),
                ]);
                t
            })?;
            emit(&output, &text)?;
        }
        BijectionCommand::Drawn { output } => {
            let (s, b) = drawn_pair();
            emit_records(&output, &[Tableau::from(s).to_record(), Tableau::from(b).to_record()])?;
        }
    }
    Ok(true)
}
