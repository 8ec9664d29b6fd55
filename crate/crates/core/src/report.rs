//! Per-semigroup report rows, written as CSV or JSON lines.

use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{GnsError, Result};
use crate::gns::Gns;
use crate::order::MonomialOrder;
use crate::point::Point;
use crate::wilf::{extended_wilf_with, generalized_wilf_from, order_frobenius};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    JsonLines,
}

impl FromStr for ReportFormat {
    type Err = GnsError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "jsonl" | "json-lines" | "jsonlines" => Ok(ReportFormat::JsonLines),
            other => Err(GnsError::Parse(format!("unknown report format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EwcEntry {
    pub order: String,
    pub order_frobenius: Option<Point>,
    pub n_order: u64,
    pub lhs: u64,
    pub rhs: u64,
    pub slack: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub dim: usize,
    pub genus: usize,
    pub holes: Vec<Point>,
    pub e: usize,
    pub n: usize,
    pub c: usize,
    pub m: usize,
    pub frobenius: Option<Point>,
    pub symmetric: bool,
    pub pseudo_symmetric: bool,
    pub irreducible: bool,
    pub ordinary: bool,
    pub monomial: bool,
    pub minimal_multiplicity: bool,
    pub gwc_lhs: u64,
    pub gwc_rhs: u64,
    pub gwc_slack: i64,
    pub ewc: Vec<EwcEntry>,
}

impl ReportRow {
    pub fn new(s: &Gns, orders: &[MonomialOrder], strict: bool) -> Self {
        Self::with_generators(s, &s.minimal_generators(), orders, strict)
    }

    /// `gens` must be the minimal generators of `s`.
    pub fn with_generators(
        s: &Gns,
        gens: &[Point],
        orders: &[MonomialOrder],
        strict: bool,
    ) -> Self {
        let inv = s.invariants_with_generators(gens.len());
        let class = s.classify_with_generators(gens);
        let gwc = generalized_wilf_from(s.dim(), inv.e, inv.n, inv.c);
        let ewc = orders
            .iter()
            .map(|o| {
                let r = extended_wilf_with(s, o, strict, inv.e);
                let (fb, n_order) = order_frobenius(s, o);
                EwcEntry {
                    order: o.to_string(),
                    order_frobenius: fb,
                    n_order,
                    lhs: r.lhs,
                    rhs: r.rhs,
                    slack: r.slack,
                }
            })
            .collect();
        ReportRow {
            dim: s.dim(),
            genus: inv.g,
            holes: s.holes().to_vec(),
            e: inv.e,
            n: inv.n,
            c: inv.c,
            m: inv.m,
            frobenius: class.frobenius_element,
            symmetric: class.is_symmetric,
            pseudo_symmetric: class.is_pseudo_symmetric,
            irreducible: class.is_irreducible,
            ordinary: class.is_ordinary,
            monomial: class.is_monomial,
            minimal_multiplicity: class.has_minimal_multiplicity,
            gwc_lhs: gwc.lhs,
            gwc_rhs: gwc.rhs,
            gwc_slack: gwc.slack,
            ewc,
        }
    }
}

const BASE_COLUMNS: [&str; 17] = [
    "dim",
    "genus",
    "holes",
    "e",
    "n",
    "c",
    "m",
    "frobenius",
    "symmetric",
    "pseudo_symmetric",
    "irreducible",
    "ordinary",
    "monomial",
    "minimal_multiplicity",
    "gwc_lhs",
    "gwc_rhs",
    "gwc_slack",
];

/// CSV header for rows carrying the given orders.
pub fn csv_header(orders: &[MonomialOrder]) -> Vec<String> {
    let mut out: Vec<String> = BASE_COLUMNS.iter().map(|s| s.to_string()).collect();
    for o in orders {
        let name = o.to_string().replace(',', ".");
        for field in ["n_order", "lhs", "rhs", "slack"] {
            out.push(format!("ewc_{name}_{field}"));
        }
    }
    out
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report values serialize")
}

fn csv_record(row: &ReportRow) -> Vec<String> {
    let mut out = vec![
        row.dim.to_string(),
        row.genus.to_string(),
        json(&row.holes),
        row.e.to_string(),
        row.n.to_string(),
        row.c.to_string(),
        row.m.to_string(),
        row.frobenius.as_ref().map(json).unwrap_or_default(),
        row.symmetric.to_string(),
        row.pseudo_symmetric.to_string(),
        row.irreducible.to_string(),
        row.ordinary.to_string(),
        row.monomial.to_string(),
        row.minimal_multiplicity.to_string(),
        row.gwc_lhs.to_string(),
        row.gwc_rhs.to_string(),
        row.gwc_slack.to_string(),
    ];
    for e in &row.ewc {
        out.extend([
            e.n_order.to_string(),
            e.lhs.to_string(),
            e.rhs.to_string(),
            e.slack.to_string(),
        ]);
    }
    out
}

/// Writes `rows` in `format`. CSV output always carries a header, so an
/// empty report is a single line.
pub fn emit_report(
    rows: &[ReportRow],
    orders: &[MonomialOrder],
    format: ReportFormat,
    w: impl Write,
) -> Result<()> {
    let io_err = |e: std::io::Error| GnsError::Parse(format!("write failed: {e}"));
    match format {
        ReportFormat::Csv => {
            let mut out = csv::Writer::from_writer(w);
            let csv_err = |e: csv::Error| GnsError::Parse(format!("write failed: {e}"));
            out.write_record(csv_header(orders)).map_err(csv_err)?;
            for row in rows {
                out.write_record(csv_record(row)).map_err(csv_err)?;
            }
            out.flush().map_err(io_err)
        }
        ReportFormat::JsonLines => {
            let mut w = w;
            for row in rows {
                writeln!(w, "{}", json(row)).map_err(io_err)?;
            }
            w.flush().map_err(io_err)
        }
    }
}
