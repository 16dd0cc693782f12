//! Rendering of tabular results to CSV and JSON.
//!
//! Both renderings are deterministic functions of the data: no timestamps,
//! no environment, map keys sorted. Floats print through Rust's shortest
//! round-trip formatting, so every number in a file re-parses to the exact
//! f64 that was computed.

use serde_json::{json, Map, Value};

/// One table cell; region and sector labels ride along with the numbers.
#[derive(Clone, Debug)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => x.to_string(),
            Cell::Int(i) => i.to_string(),
            Cell::Text(t) => t.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            // Non-finite values have no JSON literal; null is the honest stand-in.
            Cell::Num(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
            Cell::Int(i) => json!(i),
            Cell::Text(t) => json!(t),
        }
    }
}

/// Column-named rows plus `# key=value` header metadata.
#[derive(Debug, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub meta: Vec<(String, String)>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table {
            columns: columns.to_vec(),
            rows: Vec::new(),
            meta: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) {
        self.meta.push((key.to_string(), value.to_string()));
    }
}

/// FNV-1a, 64-bit.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

pub fn render_csv(hash: u64, summary: &str, table: &Table) -> String {
    let mut out = String::new();
    out.push_str(&format!("# config_hash=0x{hash:016x}\n"));
    out.push_str(&format!("# {summary}\n"));
    for (key, value) in &table.meta {
        out.push_str(&format!("# {key}={value}\n"));
    }
    out.push_str(&table.columns.join(","));
    out.push('\n');
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(Cell::csv).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn render_json(hash: u64, summary: &str, table: &Table) -> String {
    let mut meta = Map::new();
    for (key, value) in &table.meta {
        meta.insert(key.clone(), json!(value));
    }
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| Value::Array(row.iter().map(Cell::json).collect()))
        .collect();
    let doc = json!({
        "config_hash": format!("0x{hash:016x}"),
        "summary": summary,
        "meta": Value::Object(meta),
        "columns": table.columns,
        "rows": rows,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("tables are serializable");
    text.push('\n');
    text
}
