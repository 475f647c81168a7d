use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::schema::{SchemaCatalog, SqlKind};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    /// Decimal literal as written.
    Num(String),
    Text(String),
    Bool(bool),
    Null,
}

impl Value {
    fn fits(&self, kind: SqlKind) -> bool {
        use SqlKind::*;
        match self {
            Value::Null => true,
            Value::Int(_) => matches!(kind, Integer | Smallint | Bigint | Decimal | Numeric | Double | Real),
            Value::Num(_) => matches!(kind, Decimal | Numeric | Double | Real),
            Value::Text(_) => matches!(kind, Char | Varchar | Date | Time | Timestamp),
            Value::Bool(_) => kind == Boolean,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RowsError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: no table `{table}`")]
    UnknownTable { line: usize, table: String },
    #[error("line {line}: row does not match the columns of `{table}`")]
    Mismatch { line: usize, table: String },
}

/// An in-memory database: the schema plus literal rows per table.
#[derive(Debug, Clone)]
pub struct MiniDb {
    pub catalog: SchemaCatalog,
    rows: BTreeMap<String, Arc<Vec<Vec<Value>>>>,
}

impl MiniDb {
    pub fn empty(catalog: SchemaCatalog) -> Self {
        MiniDb { catalog, rows: BTreeMap::new() }
    }

    /// Loads rows written one per line as `table (v1, v2, ...)`.
    pub fn with_rows(catalog: SchemaCatalog, text: &str) -> Result<Self, RowsError> {
        let mut rows: BTreeMap<String, Vec<Vec<Value>>> = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let l = raw.trim();
            if l.is_empty() || l.starts_with('#') || l.starts_with("--") {
                continue;
            }
            let open = l.find('(').ok_or(RowsError::Syntax { line, message: "expected `(`".into() })?;
            if !l.ends_with(')') {
                return Err(RowsError::Syntax { line, message: "expected `)` at end of line".into() });
            }
            let name = l[..open].trim();
            let table = catalog
                .tables()
                .iter()
                .find(|t| t.name.eq_ignore_ascii_case(name))
                .ok_or_else(|| RowsError::UnknownTable { line, table: name.to_string() })?;
            let values = parse_values(&l[open + 1..l.len() - 1]).map_err(|message| RowsError::Syntax { line, message })?;
            if values.len() != table.columns.len() || !values.iter().zip(&table.columns).all(|(v, c)| v.fits(c.ty.kind)) {
                return Err(RowsError::Mismatch { line, table: table.name.clone() });
            }
            rows.entry(table.name.to_ascii_lowercase()).or_default().push(values);
        }
        let rows = rows.into_iter().map(|(k, v)| (k, Arc::new(v))).collect();
        Ok(MiniDb { catalog, rows })
    }

    pub fn rows(&self, table: &str) -> Arc<Vec<Vec<Value>>> {
        self.rows.get(&table.to_ascii_lowercase()).cloned().unwrap_or_default()
    }
}

fn parse_values(s: &str) -> Result<Vec<Value>, String> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    loop {
        while i < cs.len() && cs[i].is_whitespace() {
            i += 1;
        }
        if i >= cs.len() {
            return if out.is_empty() { Ok(out) } else { Err("trailing comma".into()) };
        }
        if cs[i] == '\'' {
            let mut text = String::new();
            i += 1;
            loop {
                match cs.get(i) {
                    None => return Err("unterminated string".into()),
                    Some('\'') if cs.get(i + 1) == Some(&'\'') => {
                        text.push('\'');
                        i += 2;
                    }
                    Some('\'') => {
                        i += 1;
                        break;
                    }
                    Some(c) => {
                        text.push(*c);
                        i += 1;
                    }
                }
            }
            out.push(Value::Text(text));
        } else {
            let st = i;
            while i < cs.len() && cs[i] != ',' {
                i += 1;
            }
            let word: String = cs[st..i].iter().collect::<String>().trim().to_string();
            let v = if word.eq_ignore_ascii_case("null") {
                Value::Null
            } else if word.eq_ignore_ascii_case("true") || word.eq_ignore_ascii_case("false") {
                Value::Bool(word.eq_ignore_ascii_case("true"))
            } else if let Ok(n) = word.parse::<i64>() {
                Value::Int(n)
            } else if word.parse::<f64>().is_ok() {
                Value::Num(word)
            } else {
                return Err(format!("bad value `{word}`"));
            };
            out.push(v);
        }
        while i < cs.len() && cs[i].is_whitespace() {
            i += 1;
        }
        match cs.get(i) {
            None => return Ok(out),
            Some(',') => i += 1,
            Some(c) => return Err(format!("unexpected `{c}`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schema::load_schema;

    #[test]
    fn loads_rows() {
        let cat = load_schema("CREATE TABLE warehouse (label VARCHAR(100), qty INTEGER);").unwrap();
        let db = MiniDb::with_rows(cat.clone(), "# stock\nwarehouse ('bolts', 12)\nWAREHOUSE ('it''s', NULL)\n").unwrap();
        let rows = db.rows("Warehouse");
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[1][0], Value::Text("it's".into()));
        assert!(matches!(MiniDb::with_rows(cat.clone(), "warehouse (12, 'x')"), Err(RowsError::Mismatch { .. })));
        assert!(matches!(MiniDb::with_rows(cat, "shelf (1)"), Err(RowsError::UnknownTable { .. })));
    }
}
