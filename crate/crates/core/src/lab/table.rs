//! The summary table over `S0 … S4`, recomputed and compared with its
//! closed forms.

use std::fmt;

use num_rational::Ratio;
use serde_json::{json, Value};

use super::{gen_named, NamedFamily, NamedParams};
use crate::dims::{two_vc_dim, vccdim_pointed, vccdim_star, vcd, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::{binomial, build_graph, ratio_string, Mode};

pub const COLUMNS: [&str; 6] = ["vcd", "vccdim", "vccdim*", "degeneracy", "density", "2VC"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellValue {
    Int(usize),
    Ratio(Ratio<u64>),
    /// `vccdim` of a family that is not pointed and even.
    Undefined,
}

impl fmt::Display for CellValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellValue::Int(v) => write!(f, "{v}"),
            CellValue::Ratio(r) => f.write_str(&ratio_string(*r)),
            CellValue::Undefined => f.write_str("-"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub column: &'static str,
    pub expected: CellValue,
    pub got: CellValue,
}

impl Cell {
    pub fn matches(&self) -> bool {
        self.expected == self.got
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub family: &'static str,
    pub cells: Vec<Cell>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableReport {
    pub m: usize,
    pub k: usize,
    pub rows: Vec<TableRow>,
}

impl TableReport {
    pub fn mismatches(&self) -> Vec<String> {
        self.rows
            .iter()
            .flat_map(|r| {
                r.cells
                    .iter()
                    .filter(|c| !c.matches())
                    .map(move |c| format!("{} {}: expected {}, got {}", r.family, c.column, c.expected, c.got))
            })
            .collect()
    }

    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.cells.iter().all(Cell::matches))
    }

    pub fn ensure_matches(&self) -> Result<()> {
        let bad = self.mismatches();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::TableMismatch(bad))
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "k": self.k,
            "all_match": self.all_match(),
            "note": "S3 densities are exact values; the asymptotic form k/2 + o(1) is not checked",
            "rows": self.rows.iter().map(|r| json!({
                "family": r.family,
                "cells": r.cells.iter().map(|c| json!({
                    "column": c.column,
                    "expected": c.expected.to_string(),
                    "got": c.got.to_string(),
                    "match": c.matches(),
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }

    /// Fixed-width text rendering; mismatching cells show `got≠expected`.
    pub fn to_text(&self) -> String {
        let mut out = format!("m={} k={}\n{:<10}", self.m, self.k, "family");
        for c in COLUMNS {
            out.push_str(&format!(" {c:>14}"));
        }
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!("{:<10}", r.family));
            for c in &r.cells {
                let s = if c.matches() { c.got.to_string() } else { format!("{}≠{}", c.got, c.expected) };
                out.push_str(&format!(" {s:>14}"));
            }
            out.push('\n');
        }
        out.push_str(if self.all_match() { "all cells match\n" } else { "MISMATCH\n" });
        out
    }
}

fn int(v: u64) -> CellValue {
    CellValue::Int(v as usize)
}

/// Closed forms, in `COLUMNS` order.
fn expected(name: NamedFamily, m: u64, k: u64) -> [CellValue; 6] {
    let s3_density = CellValue::Ratio(Ratio::new(m * k * (k + 1), 2 * (m * k + 2)));
    let half = |num: u64| CellValue::Ratio(Ratio::new(num, 2));
    match name {
        NamedFamily::S0 => [int(1), CellValue::Undefined, int(m), int(m - 1), half(m - 1), int(0)],
        NamedFamily::S1 => [int(1), int(m), int(m), int(m - 1), half(m - 1), int(2)],
        NamedFamily::S2 => [int(2), int(3), int(3), int(3), half(3), int(3)],
        NamedFamily::S3 => [int(2), int(k + 2), int(k + 2), int(k), s3_density, int(2)],
        NamedFamily::S3TwistX => [int(2), int((m - 1) * k + 1), int(k + 2), int(k), s3_density, int(2)],
        NamedFamily::S4 => {
            let c = binomial(m, 2);
            [int(m - 1), int(m), int(m), int(c), half(c), int(m)]
        }
        _ => unreachable!("not a table row"),
    }
}

pub const ROWS: [NamedFamily; 6] = [
    NamedFamily::S0,
    NamedFamily::S1,
    NamedFamily::S2,
    NamedFamily::S3,
    NamedFamily::S3TwistX,
    NamedFamily::S4,
];

/// Computed cells for one row, in `COLUMNS` order.
pub fn compute_row(name: NamedFamily, m: usize, k: usize, budget: &SearchBudget) -> Result<[CellValue; 6]> {
    let fam = gen_named(name, &NamedParams::mk(m, k))?;
    let vccdim = if fam.is_pointed() && fam.is_even() {
        CellValue::Int(vccdim_pointed(&fam, budget)?.value)
    } else {
        CellValue::Undefined
    };
    let g = build_graph(&fam, Mode::G12);
    Ok([
        CellValue::Int(vcd(&fam, budget)?.value),
        vccdim,
        CellValue::Int(vccdim_star(&fam, budget)?.value),
        CellValue::Int(g.degeneracy().value),
        CellValue::Ratio(g.density()),
        CellValue::Int(two_vc_dim(&fam, budget)?.value),
    ])
}

/// Every row at `(m, k)`; both must be even and at least 2.
pub fn reproduce_table(m: usize, k: usize, budget: &SearchBudget) -> Result<TableReport> {
    if m < 2 || k < 2 || !m.is_multiple_of(2) || !k.is_multiple_of(2) {
        return Err(Error::BadParam(format!("the table needs even m, k ≥ 2, got m={m}, k={k}")));
    }
    let mut rows = Vec::with_capacity(ROWS.len());
    for name in ROWS {
        let got = compute_row(name, m, k, budget)?;
        let want = expected(name, m as u64, k as u64);
        let cells = COLUMNS
            .iter()
            .zip(want.into_iter().zip(got))
            .map(|(&column, (expected, got))| Cell { column, expected, got })
            .collect();
        rows.push(TableRow { family: name.as_str(), cells });
    }
    Ok(TableReport { m, k, rows })
}
