//! The six family tables, one row string per pattern.

use serde::Serialize;

use super::{Family, FamilyPattern};

pub struct TableData {
    pub number: u8,
    pub family: &'static str,
    pub caption: &'static str,
    pub rows: &'static [&'static str],
}

pub const TABLES: [TableData; 6] = [
    TableData {
        number: 1,
        family: "A1",
        caption: "The set of groups A1 = B1",
        rows: &["Z/k", "(Z/2)^2"],
    },
    TableData {
        number: 2,
        family: "A2",
        caption: "The set of groups A2 = B2",
        rows: &["Z/k x Z/l", "Z/2k x (Z/2)^2", "(Z/4)^2 x Z/2", "(Z/3)^3", "(Z/2)^4"],
    },
    TableData {
        number: 3,
        family: "A3p",
        caption: "The set of groups A'3 = PA3 = A1 x A2",
        rows: &[
            "Z/k x Z/l x Z/m",
            "Z/2k x (Z/4)^2 x Z/2",
            "Z/3k x (Z/3)^3",
            "Z/2k x Z/2l x (Z/2)^2",
            "Z/2k x (Z/2)^4",
            "(Z/4)^2 x (Z/2)^3",
            "(Z/2)^6",
        ],
    },
    TableData {
        number: 4,
        family: "B3p",
        caption: "The set of groups B'3",
        // the last four rows are the sporadic groups G1, ..., G4
        rows: &[
            "Z/k x Z/l x Z/m",
            "Z/2k x (Z/4)^2 x Z/2",
            "Z/3k x (Z/3)^3",
            "Z/2k x Z/2l x (Z/2)^2",
            "Z/2k x (Z/2)^4",
            "(Z/4)^2 x (Z/2)^3",
            "(Z/2)^6",
            "(Z/4)^4",
            "(Z/8)^2 x Z/4 x Z/2",
            "(Z/6)^2 x (Z/3)^2",
            "(Z/6)^3 x Z/2",
        ],
    },
    TableData {
        number: 5,
        family: "PA4p",
        caption: "The set of groups PA'4 = A1 x A'3 + A2 x A2",
        rows: &[
            "Z/n x Z/k x Z/l x Z/m",
            "Z/n x Z/k x Z/2l x (Z/2)^2",
            "Z/n x Z/k x (Z/4)^2 x Z/2",
            "Z/n x Z/k x (Z/3)^3",
            "Z/n x Z/k x (Z/2)^4",
            "Z/2n x (Z/4)^2 x (Z/2)^3",
            "Z/2n x (Z/2)^6",
            "(Z/4)^4 x (Z/2)^2",
            "(Z/4)^2 x (Z/2)^5",
            "(Z/3)^6",
            "(Z/2)^8",
        ],
    },
    TableData {
        number: 6,
        family: "PB4p",
        caption: "The set of groups PB'4 = B1 x B'3 + B2 x B2",
        rows: &[
            "Z/n x Z/k x Z/l x Z/m",
            "Z/n x Z/k x Z/2l x (Z/2)^2",
            "Z/n x Z/k x (Z/4)^2 x Z/2",
            "Z/n x Z/k x (Z/3)^3",
            "Z/n x Z/k x (Z/2)^4",
            "Z/2n x (Z/4)^2 x (Z/2)^3",
            "Z/2n x (Z/2)^6",
            "(Z/4)^4 x (Z/2)^2",
            "(Z/4)^2 x (Z/2)^5",
            "(Z/3)^6",
            "(Z/2)^8",
            "Z/n x (Z/4)^4",
            "Z/n x (Z/8)^2 x Z/4 x Z/2",
            "Z/n x (Z/6)^2 x (Z/3)^2",
            "Z/n x (Z/6)^3 x Z/2",
            "(Z/8)^2 x Z/4 x (Z/2)^3",
            "(Z/6)^3 x (Z/2)^3",
        ],
    },
];

impl TableData {
    pub fn family(&self) -> Family {
        let patterns = self
            .rows
            .iter()
            .map(|r| r.parse::<FamilyPattern>().expect("built-in rows parse"))
            .collect();
        Family::new(self.family, patterns)
    }
}

#[derive(Serialize)]
pub struct TableRow {
    pub index: usize,
    pub pattern: String,
    pub constraints: String,
}

#[derive(Serialize)]
pub struct Table {
    pub number: u8,
    pub family: &'static str,
    pub caption: String,
    pub rows: Vec<TableRow>,
}

/// Tables 1–6 rendered from the same data the matcher uses.
pub fn tables() -> Vec<Table> {
    TABLES
        .iter()
        .map(|t| Table {
            number: t.number,
            family: t.family,
            caption: format!("Table {}. {}.", t.number, t.caption),
            rows: t
                .family()
                .patterns()
                .iter()
                .enumerate()
                .map(|(i, p)| TableRow { index: i + 1, pattern: p.to_string(), constraints: p.constraints() })
                .collect(),
        })
        .collect()
}

pub fn render_text(tables: &[Table]) -> String {
    let mut out = String::new();
    for (i, t) in tables.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&t.caption);
        out.push('\n');
        for r in &t.rows {
            out.push_str(&format!("({}) {}", r.index, r.pattern));
            if !r.constraints.is_empty() {
                out.push_str(&format!("  where {}", r.constraints));
            }
            out.push('\n');
        }
    }
    out
}
