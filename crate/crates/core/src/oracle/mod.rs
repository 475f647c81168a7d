//! A reference interpreter that runs subset programs against an in-memory
//! database and reports the JDBC exceptions they would raise.

mod interp;
pub mod minidb;
pub mod naive_sql;

use std::fmt;
use std::path::{Path, PathBuf};

use crate::javafront::CompilationUnit;
use crate::span::SourceSpan;
use crate::typemap::ConversionTable;

pub use minidb::{MiniDb, RowsError, Value};

/// Loop iterations explored before a path is cut off.
pub const DEFAULT_BUDGET: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    MalformedSql,
    ParamIndex,
    Column,
    Conversion,
}

impl Category {
    pub fn number(self) -> u8 {
        match self {
            Category::MalformedSql => 1,
            Category::ParamIndex => 2,
            Category::Column => 3,
            Category::Conversion => 4,
        }
    }

    pub fn from_number(n: u8) -> Option<Category> {
        [Category::MalformedSql, Category::ParamIndex, Category::Column, Category::Conversion]
            .into_iter()
            .find(|c| c.number() == n)
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ModeledException {
    pub span: SourceSpan,
    pub category: Category,
    pub detail: String,
}

/// Everything observed while running one program.
#[derive(Debug, Clone, Default)]
pub struct Execution {
    /// Sorted, at most one per category and call site.
    pub exceptions: Vec<ModeledException>,
    pub paths: usize,
    /// Paths cut off by the loop budget or call depth.
    pub limit_hits: usize,
    /// Paths stopped at behaviour the interpreter does not model.
    pub unmodeled: usize,
}

impl Execution {
    /// `(category, line)` pairs, the form used by `.expect` files.
    pub fn sites(&self) -> Vec<(Category, u32)> {
        let mut v: Vec<_> = self.exceptions.iter().map(|e| (e.category, e.span.line)).collect();
        v.sort();
        v.dedup();
        v
    }
}

/// Runs every entry point (a method no other method calls) along all paths.
pub fn run_program(units: &[CompilationUnit], db: &MiniDb, table: &ConversionTable, budget: usize) -> Execution {
    let it = interp::Interp::new(units, db, table, budget);
    let mut out = Execution::default();
    for (class, m) in it.entry_points(units) {
        it.run_entry(class, m, &mut out);
    }
    out.exceptions.sort();
    out.exceptions.dedup_by(|a, b| a.span == b.span && a.category == b.category);
    out
}

/// Parses an `.expect` file: one `category line` pair per line.
pub fn parse_expect(text: &str) -> Result<Vec<(Category, u32)>, String> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let l = raw.split('#').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        let mut parts = l.split_whitespace();
        let (Some(c), Some(line), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(format!("line {}: expected `category line`", n + 1));
        };
        let cat = c.parse().ok().and_then(Category::from_number).ok_or_else(|| format!("line {}: bad category", n + 1))?;
        let line = line.parse().map_err(|_| format!("line {}: bad line number", n + 1))?;
        out.push((cat, line));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The rows file for a program: `X.rows` beside `X.java`, else `default.rows`
/// in the same directory.
pub fn rows_path(java: &Path) -> Option<PathBuf> {
    let own = java.with_extension("rows");
    if own.is_file() {
        return Some(own);
    }
    let shared = java.with_file_name("default.rows");
    shared.is_file().then_some(shared)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::javafront::parse_java;
    use crate::schema::load_schema;

    const DDL: &str = "CREATE TABLE item (id INTEGER, label VARCHAR(40), price DECIMAL(8,2));";
    const ROWS: &str = "item (1, 'bolt', 2.50)\nitem (2, 'nut', 0.25)\n";

    fn run(src: &str) -> Execution {
        let db = MiniDb::with_rows(load_schema(DDL).unwrap(), ROWS).unwrap();
        let cu = parse_java(src, "T.java").unwrap();
        run_program(&[cu], &db, &ConversionTable::default(), DEFAULT_BUDGET)
    }

    #[test]
    fn raises_at_the_failing_call() {
        let e = run(r#"class T {
    void m(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT label FROM item WHERE id = ?");
        ps.setString(1, "x");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            int n = rs.getInt(1);
        }
    }
}"#);
        assert_eq!(e.sites(), vec![(Category::Conversion, 4)]);
    }

    #[test]
    fn follows_concatenation_and_calls() {
        let e = run(r#"class T {
    String cols() { return "id, label"; }
    void m(Connection c) throws SQLException {
        String q = "SELECT " + cols() + " FROM item";
        ResultSet rs = c.prepareStatement(q).executeQuery();
        if (rs.next()) {
            rs.getString(3);
        }
    }
}"#);
        assert_eq!(e.sites(), vec![(Category::Column, 7)]);
    }

    #[test]
    fn malformed_and_param_index() {
        let e = run(r#"class T {
    void a(Connection c) throws SQLException {
        c.prepareStatement("SELEC id FROM item");
    }
    void b(Connection c, int k) throws SQLException {
        PreparedStatement ps = c.prepareStatement("DELETE FROM item WHERE id = ?");
        ps.setInt(2, k);
    }
}"#);
        assert_eq!(e.sites(), vec![(Category::MalformedSql, 3), (Category::ParamIndex, 7)]);
    }

    #[test]
    fn loops_hit_the_budget() {
        let e = run(r#"class T {
    void m(Connection c, boolean go) throws SQLException {
        int i = 1;
        PreparedStatement ps = c.prepareStatement("SELECT id FROM item WHERE id = ? OR id = ?");
        while (go) {
            ps.setInt(i, 3);
            i++;
        }
    }
}"#);
        assert_eq!(e.sites(), vec![(Category::ParamIndex, 6)]);
        assert_eq!(e.limit_hits, 0);
        let spin = run(r#"class T {
    void m(boolean go) {
        int i = 0;
        while (go) {
            i++;
        }
    }
}"#);
        assert_eq!(spin.limit_hits, 1);
        assert_eq!(spin.paths, DEFAULT_BUDGET + 2);
    }

    #[test]
    fn expect_files() {
        assert_eq!(parse_expect("# none\n4 12\n2 3 # comment\n").unwrap(), vec![(Category::ParamIndex, 3), (Category::Conversion, 12)]);
        assert!(parse_expect("5 1").is_err());
        assert!(parse_expect("4").is_err());
    }
}
