//! Comparison tables, figure data, and polynomial listings: the deterministic
//! text surfaces behind the CLI. All numbers are printed with exactly the
//! requested number of significant figures and a "." decimal point; identical
//! inputs always produce byte-identical output.

use serde::{Deserialize, Serialize};

use crate::adomian::{AdomianPolynomial, RenderFormat};
use crate::error::{Error, Result};
use crate::hpreal::HPReal;
use crate::rational::Rational;
use crate::reference::closed_form;
use crate::solver::{solve, ODEProblem};

/// One table row: closed-form value, decomposition value, absolute error.
#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonRow {
    pub t: HPReal,
    pub exact: HPReal,
    pub adm: HPReal,
    pub abs_error: HPReal,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonTable {
    pub label: String,
    pub order: usize,
    pub digits: u32,
    pub rows: Vec<ComparisonRow>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableFormat {
    Csv,
    Markdown,
    Json,
}

/// Wire schema for the JSON table export; values carry the printed precision.
#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct TableJson {
    pub label: String,
    pub order: usize,
    pub digits: u32,
    pub rows: Vec<RowJson>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct RowJson {
    pub t: String,
    pub exact: String,
    pub adm: String,
    pub abs_error: String,
}

/// Solves the problem once, evaluates closed form and partial sum at every t,
/// and returns rows sorted by ascending t. Every t must lie strictly below
/// the blow-up time when one exists.
pub fn build_comparison_table(
    problem: &ODEProblem,
    order: usize,
    t_values: &[HPReal],
    digits: u32,
) -> Result<ComparisonTable> {
    let cf = closed_form(problem)?;
    if let Some(blow_up) = cf.blow_up_time(digits) {
        for t in t_values {
            if *t >= blow_up {
                return Err(Error::Singularity {
                    at: t.to_sig_string(17),
                    blow_up: Some(blow_up.to_sig_string(17)),
                });
            }
        }
    }
    let solution = solve(problem, order);
    let mut ts = t_values.to_vec();
    ts.sort();
    let mut rows = Vec::with_capacity(ts.len());
    for t in ts {
        let exact = cf.eval(&t, digits)?;
        let adm = solution.evaluate(order, &t, digits)?;
        let abs_error = (&exact - &adm).abs().round_to(digits);
        rows.push(ComparisonRow {
            t,
            exact,
            adm,
            abs_error,
        });
    }
    Ok(ComparisonTable {
        label: problem.label(),
        order,
        digits,
        rows,
    })
}

impl ComparisonTable {
    pub fn export(&self, format: TableFormat) -> String {
        let d = self.digits;
        match format {
            TableFormat::Csv => {
                let mut out = String::from("t,exact,adm,abs_error\n");
                for row in &self.rows {
                    out.push_str(&format!(
                        "{},{},{},{}\n",
                        row.t.to_sig_string(d),
                        row.exact.to_sig_string(d),
                        row.adm.to_sig_string(d),
                        row.abs_error.to_sig_string(d)
                    ));
                }
                out
            }
            TableFormat::Markdown => {
                let mut out =
                    String::from("| t | exact | adm | abs_error |\n| --- | --- | --- | --- |\n");
                for row in &self.rows {
                    out.push_str(&format!(
                        "| {} | {} | {} | {} |\n",
                        row.t.to_sig_string(d),
                        row.exact.to_sig_string(d),
                        row.adm.to_sig_string(d),
                        row.abs_error.to_sig_string(d)
                    ));
                }
                out
            }
            TableFormat::Json => {
                let mut text =
                    serde_json::to_string_pretty(&self.json_repr()).expect("schema serializes");
                text.push('\n');
                text
            }
        }
    }

    pub fn json_repr(&self) -> TableJson {
        let d = self.digits;
        TableJson {
            label: self.label.clone(),
            order: self.order,
            digits: d,
            rows: self
                .rows
                .iter()
                .map(|row| RowJson {
                    t: row.t.to_sig_string(d),
                    exact: row.exact.to_sig_string(d),
                    adm: row.adm.to_sig_string(d),
                    abs_error: row.abs_error.to_sig_string(d),
                })
                .collect(),
        }
    }
}

/// CSV plot data: `samples` equally spaced points on [t_min, t_max] with
/// columns t, exact, adm. The grid is computed in exact rational arithmetic.
pub fn figure_data(
    problem: &ODEProblem,
    order: usize,
    t_min: &HPReal,
    t_max: &HPReal,
    samples: usize,
    digits: u32,
) -> Result<String> {
    if samples < 2 {
        return Err(Error::InvalidArgument(format!(
            "samples must be at least 2, got {samples}"
        )));
    }
    if t_min >= t_max {
        return Err(Error::InvalidArgument(
            "figure range requires t_min < t_max".into(),
        ));
    }
    let lo = t_min.to_rational();
    let step = (&t_max.to_rational() - &lo) / Rational::from_integer(samples as i64 - 1);
    let grid: Vec<HPReal> = (0..samples)
        .map(|i| {
            let t = &lo + &(&step * &Rational::from_integer(i as i64));
            HPReal::from_rational(&t, digits)
        })
        .collect();

    let cf = closed_form(problem)?;
    if let Some(blow_up) = cf.blow_up_time(digits) {
        if *t_max >= blow_up {
            return Err(Error::Singularity {
                at: t_max.to_sig_string(17),
                blow_up: Some(blow_up.to_sig_string(17)),
            });
        }
    }
    let solution = solve(problem, order);
    let mut out = String::from("t,exact,adm\n");
    for t in &grid {
        let exact = cf.eval(t, digits)?;
        let adm = solution.evaluate(order, t, digits)?;
        out.push_str(&format!(
            "{},{},{}\n",
            t.to_sig_string(digits),
            exact.to_sig_string(digits),
            adm.to_sig_string(digits)
        ));
    }
    Ok(out)
}

/// Renders A_0 ... A_max_order, one per line (plain/latex) or as a JSON array.
pub fn list_polynomials(eta: u32, max_order: u32, format: RenderFormat) -> String {
    match format {
        RenderFormat::Plain => {
            let mut out = String::new();
            for n in 0..=max_order {
                let poly = AdomianPolynomial::generate(eta, n);
                out.push_str(&format!("A{n} = {}\n", poly.render(RenderFormat::Plain)));
            }
            out
        }
        RenderFormat::Latex => {
            let mut out = String::new();
            for n in 0..=max_order {
                let poly = AdomianPolynomial::generate(eta, n);
                out.push_str(&format!(
                    "A_{{{n}}} = {}\n",
                    poly.render(RenderFormat::Latex)
                ));
            }
            out
        }
        RenderFormat::Json => {
            let list: Vec<_> = (0..=max_order)
                .map(|n| AdomianPolynomial::generate(eta, n).json_repr())
                .collect();
            let mut text = serde_json::to_string_pretty(&list).expect("schema serializes");
            text.push('\n');
            text
        }
    }
}
