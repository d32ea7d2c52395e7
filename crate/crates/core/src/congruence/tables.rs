//! Weight-table records: per-weight generator lists and congruence rows,
//! loaded from the line-oriented relation file format
//! `weight; lhs; combination; bound`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::combo::GenCombo;
use super::genexpr::GenExpr;

const EMBEDDED_TABLES: &str = include_str!("../../data/relations.tbl");

/// The table for one weight: its generators (in reporting order) and the
/// congruence rows `lhs ≡ combination` valid for p > bound.
#[derive(Clone, Debug)]
pub struct WeightTable {
    pub weight: u32,
    pub bound: u64,
    pub generators: Vec<GenExpr>,
    pub rows: Vec<(GenExpr, GenCombo)>,
}

impl WeightTable {
    fn empty(weight: u32) -> Self {
        WeightTable {
            weight,
            bound: weight as u64 + 1,
            generators: Vec::new(),
            rows: Vec::new(),
        }
    }

    /// The row for a given left-hand side, if any.
    pub fn row(&self, lhs: &GenExpr) -> Option<&GenCombo> {
        self.rows.iter().find(|(l, _)| l == lhs).map(|(_, c)| c)
    }

    pub fn is_generator(&self, expr: &GenExpr) -> bool {
        self.generators.contains(expr)
    }
}

/// All weight tables, keyed by weight.
#[derive(Clone, Debug, Default)]
pub struct TableSet {
    tables: BTreeMap<u32, WeightTable>,
}

impl TableSet {
    /// The tables shipped with the crate.
    pub fn builtin() -> TableSet {
        TableSet::parse(EMBEDDED_TABLES).expect("embedded tables parse")
    }

    pub fn get(&self, weight: u32) -> Option<&WeightTable> {
        self.tables.get(&weight)
    }

    pub fn weights(&self) -> impl Iterator<Item = u32> + '_ {
        self.tables.keys().copied()
    }

    pub fn max_weight(&self) -> u32 {
        self.tables.keys().max().copied().unwrap_or(0)
    }

    pub fn parse(text: &str) -> Result<TableSet> {
        let mut tables: BTreeMap<u32, WeightTable> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split(';').map(str::trim).collect();
            if fields.len() != 4 {
                return Err(Error::Table(format!(
                    "line {}: expected `weight; lhs; combination; bound`, got `{line}`",
                    lineno + 1
                )));
            }
            let weight: u32 = fields[0]
                .parse()
                .map_err(|_| Error::Table(format!("line {}: bad weight", lineno + 1)))?;
            let bound: u64 = fields[3]
                .parse()
                .map_err(|_| Error::Table(format!("line {}: bad bound", lineno + 1)))?;
            let table = tables.entry(weight).or_insert_with(|| WeightTable::empty(weight));
            table.bound = table.bound.max(bound);
            if fields[1] == "GENERATORS" {
                if fields[2] != "0" {
                    for token in fields[2].split('+') {
                        table.generators.push(token.trim().parse()?);
                    }
                }
                continue;
            }
            let lhs: GenExpr = fields[1].parse()?;
            let rhs: GenCombo = fields[2].parse()?;
            if lhs.weight() != weight {
                return Err(Error::Table(format!(
                    "line {}: lhs {lhs} has weight {}, record says {weight}",
                    lineno + 1,
                    lhs.weight()
                )));
            }
            if let Some(w) = rhs.homogeneous_weight() {
                if w != weight {
                    return Err(Error::Table(format!(
                        "line {}: rhs weight {w} does not match {weight}",
                        lineno + 1
                    )));
                }
            }
            table.rows.push((lhs, rhs));
        }
        // Every rhs term must be a declared generator of its weight.
        for table in tables.values() {
            for (lhs, rhs) in &table.rows {
                for (expr, _) in rhs.terms() {
                    if !table.is_generator(expr) {
                        return Err(Error::Table(format!(
                            "row {lhs}: rhs term {expr} is not a declared weight-{} generator",
                            table.weight
                        )));
                    }
                }
            }
        }
        Ok(TableSet { tables })
    }
}
