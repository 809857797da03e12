//! CSV output: `#key=value` metadata lines, one header row, data rows.
//! Floats are written with 17 significant digits so that they round-trip.

use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<i32> for Cell {
    fn from(v: i32) -> Self {
        Cell::Int(v.into())
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

pub fn float(v: f64) -> String {
    format!("{v:.16e}")
}

/// One output file held in memory.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub name: String,
    meta: Vec<(String, String)>,
    header: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: impl Into<String>, header: &[&str]) -> Self {
        Self {
            name: name.into(),
            meta: Vec::new(),
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn with_header(name: impl Into<String>, header: Vec<String>) -> Self {
        Self {
            name: name.into(),
            meta: Vec::new(),
            header,
            rows: Vec::new(),
        }
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) -> &mut Self {
        let value = value.to_string().replace('\n', " ");
        self.meta.push((key.to_string(), value));
        self
    }

    pub fn meta_float(&mut self, key: &str, value: f64) -> &mut Self {
        self.meta(key, float(value))
    }

    /// Metadata lines shared by every table of one run, placed first.
    pub fn prepend_meta(&mut self, common: &[(String, String)]) {
        let mut all = common.to_vec();
        all.append(&mut self.meta);
        self.meta = all;
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            let _ = writeln!(out, "#{k}={v}");
        }
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Int(i) => i.to_string(),
                    Cell::Float(x) => float(*x),
                    Cell::Text(s) => s.clone(),
                })
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// Value of `#key=` in rendered CSV text.
pub fn read_meta<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines()
        .take_while(|l| l.starts_with('#'))
        .find_map(|l| l[1..].strip_prefix(key).and_then(|rest| rest.strip_prefix('=')))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_and_read_back() {
        let mut t = Table::new("x.csv", &["n", "v", "tag"]);
        t.meta("tool", "rabi-dsc").meta_float("g", 2.0);
        t.push(vec![0usize.into(), 0.1.into(), "a".into()]);
        let text = t.render();
        assert_eq!(
            text,
            "#tool=rabi-dsc\n#g=2.0000000000000000e0\nn,v,tag\n0,1.0000000000000001e-1,a\n"
        );
        assert_eq!(read_meta(&text, "g"), Some("2.0000000000000000e0"));
        assert_eq!(read_meta(&text, "tool"), Some("rabi-dsc"));
        assert_eq!(read_meta(&text, "missing"), None);
        let v: f64 = "1.0000000000000001e-1".parse().unwrap();
        assert_eq!(v, 0.1);
    }
}
