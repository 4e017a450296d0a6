//! Report rows and their TSV / JSON renderings.

use std::fmt::Display;

use serde::Serialize;

use crate::registry::claim;

pub const SCHEMA: &str = "splinekit-report/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub claim: &'static str,
    pub locator: &'static str,
    pub r: Option<u32>,
    pub d: Option<u32>,
    pub computed: String,
    pub expected: String,
    pub pass: bool,
}

impl Row {
    /// Row whose verdict is string equality of `computed` and `expected`.
    pub fn eq(id: &'static str, r: Option<u32>, d: Option<u32>, computed: impl Display, expected: impl Display) -> Row {
        let (computed, expected) = (computed.to_string(), expected.to_string());
        let pass = computed == expected;
        Row::with(id, r, d, computed, expected, pass)
    }

    /// Panics if `id` is not registered.
    pub fn with(
        id: &'static str,
        r: Option<u32>,
        d: Option<u32>,
        computed: impl Display,
        expected: impl Display,
        pass: bool,
    ) -> Row {
        let c = claim(id).unwrap_or_else(|| panic!("unregistered claim {id}"));
        Row {
            claim: c.id,
            locator: c.locator,
            r,
            d,
            computed: computed.to_string(),
            expected: expected.to_string(),
            pass,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub seed: u64,
    pub rows: Vec<Row>,
}

fn opt(v: Option<u32>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64, rows: Vec<Row>) -> Report {
        Report {
            schema: SCHEMA,
            command: command.into(),
            seed,
            rows,
        }
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from("claim\tlocator\tr\td\tcomputed\texpected\tpass\n");
        for row in &self.rows {
            s += &format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                row.claim,
                row.locator,
                opt(row.r),
                opt(row.d),
                row.computed,
                row.expected,
                if row.pass { "pass" } else { "FAIL" }
            );
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}
