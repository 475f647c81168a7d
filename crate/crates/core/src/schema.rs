//! The database schema every SQL statement is resolved against.
//!
//! Schemas are loaded from a small `CREATE TABLE` dialect:
//!
//! ```text
//! stmt   := "CREATE" "TABLE" ident "(" coldef ("," coldef)* ")" ";"
//! coldef := ident type ("NOT" "NULL" | "PRIMARY" "KEY" | "DEFAULT" literal)*
//! type   := kind [ "(" int [ "," int ] ")" ]
//! ```
//!
//! Identifiers are compared with ASCII case folding.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::sqlfront::lexer::{tokenize, Tok, Token};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SqlKind {
    Char,
    Varchar,
    Integer,
    Bigint,
    Smallint,
    Boolean,
    Date,
    Time,
    Timestamp,
    Decimal,
    Numeric,
    Double,
    Real,
}

impl SqlKind {
    pub const ALL: [SqlKind; 13] = [
        SqlKind::Char,
        SqlKind::Varchar,
        SqlKind::Integer,
        SqlKind::Bigint,
        SqlKind::Smallint,
        SqlKind::Boolean,
        SqlKind::Date,
        SqlKind::Time,
        SqlKind::Timestamp,
        SqlKind::Decimal,
        SqlKind::Numeric,
        SqlKind::Double,
        SqlKind::Real,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SqlKind::Char => "CHAR",
            SqlKind::Varchar => "VARCHAR",
            SqlKind::Integer => "INTEGER",
            SqlKind::Bigint => "BIGINT",
            SqlKind::Smallint => "SMALLINT",
            SqlKind::Boolean => "BOOLEAN",
            SqlKind::Date => "DATE",
            SqlKind::Time => "TIME",
            SqlKind::Timestamp => "TIMESTAMP",
            SqlKind::Decimal => "DECIMAL",
            SqlKind::Numeric => "NUMERIC",
            SqlKind::Double => "DOUBLE",
            SqlKind::Real => "REAL",
        }
    }

    /// Parses a type keyword, accepting the `INT` and `BOOL` synonyms.
    pub fn from_name(name: &str) -> Option<SqlKind> {
        let upper = name.to_ascii_uppercase();
        match upper.as_str() {
            "INT" => Some(SqlKind::Integer),
            "BOOL" => Some(SqlKind::Boolean),
            _ => SqlKind::ALL.iter().copied().find(|k| k.name() == upper),
        }
    }

    fn takes_length(self) -> bool {
        matches!(self, SqlKind::Char | SqlKind::Varchar)
    }

    fn takes_precision(self) -> bool {
        matches!(self, SqlKind::Decimal | SqlKind::Numeric)
    }
}

impl fmt::Display for SqlKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A column type. Equality and hashing look at the kind only; lengths and
/// precisions are carried for rendering.
#[derive(Debug, Clone, Copy)]
pub struct SqlScalarType {
    pub kind: SqlKind,
    pub length: Option<u32>,
    pub precision: Option<u32>,
    pub scale: Option<u32>,
}

impl SqlScalarType {
    pub const fn new(kind: SqlKind) -> Self {
        SqlScalarType { kind, length: None, precision: None, scale: None }
    }

    /// Renders the type as it would appear in DDL, parameters included.
    pub fn ddl(&self) -> String {
        match (self.length, self.precision, self.scale) {
            (Some(n), _, _) => format!("{}({n})", self.kind),
            (None, Some(p), Some(s)) => format!("{}({p},{s})", self.kind),
            (None, Some(p), None) => format!("{}({p})", self.kind),
            _ => self.kind.to_string(),
        }
    }
}

impl From<SqlKind> for SqlScalarType {
    fn from(kind: SqlKind) -> Self {
        SqlScalarType::new(kind)
    }
}

impl PartialEq for SqlScalarType {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for SqlScalarType {}

impl Hash for SqlScalarType {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.kind.hash(state)
    }
}

impl fmt::Display for SqlScalarType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Column {
    pub name: String,
    pub ty: SqlScalarType,
    pub nullable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub name: String,
    /// Declaration order; drives `SELECT *` expansion.
    pub columns: Vec<Column>,
}

impl Table {
    pub fn column(&self, name: &str) -> Option<&Column> {
        self.columns.iter().find(|c| c.name.eq_ignore_ascii_case(name))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchemaCatalog {
    tables: Vec<Table>,
    by_name: HashMap<String, usize>,
}

impl SchemaCatalog {
    pub fn lookup_table(&self, name: &str) -> Option<&Table> {
        self.by_name.get(&name.to_ascii_lowercase()).map(|&i| &self.tables[i])
    }

    pub fn tables(&self) -> &[Table] {
        &self.tables
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    /// Builds a catalog directly, enforcing the same uniqueness rules as the loader.
    pub fn from_tables(tables: Vec<Table>) -> Result<Self, SchemaError> {
        let mut catalog = SchemaCatalog::default();
        for table in tables {
            catalog.insert(table)?;
        }
        Ok(catalog)
    }

    fn insert(&mut self, table: Table) -> Result<(), SchemaError> {
        let key = table.name.to_ascii_lowercase();
        if self.by_name.contains_key(&key) {
            return Err(SchemaError::DuplicateTable(table.name));
        }
        for (i, col) in table.columns.iter().enumerate() {
            if table.columns[..i].iter().any(|c| c.name.eq_ignore_ascii_case(&col.name)) {
                return Err(SchemaError::DuplicateColumn {
                    table: table.name.clone(),
                    column: col.name.clone(),
                });
            }
        }
        self.by_name.insert(key, self.tables.len());
        self.tables.push(table);
        Ok(())
    }

    /// Canonical DDL for the catalog; reloading it yields an equal catalog.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for t in &self.tables {
            let cols: Vec<String> = t
                .columns
                .iter()
                .map(|c| {
                    let null = if c.nullable { "" } else { " NOT NULL" };
                    format!("{} {}{null}", c.name, c.ty.ddl())
                })
                .collect();
            out.push_str(&format!("CREATE TABLE {} ({});\n", t.name, cols.join(", ")));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemaError {
    #[error("schema syntax error at offset {position}: expected {expected}, found {found}")]
    Syntax { position: usize, expected: String, found: String },
    #[error("duplicate table `{0}`")]
    DuplicateTable(String),
    #[error("duplicate column `{column}` in table `{table}`")]
    DuplicateColumn { table: String, column: String },
    #[error("unsupported column type `{0}`")]
    UnsupportedType(String),
}

pub fn load_schema(ddl_text: &str) -> Result<SchemaCatalog, SchemaError> {
    let tokens = tokenize(ddl_text).map_err(|e| SchemaError::Syntax {
        position: e.offset,
        expected: "a token".into(),
        found: e.message,
    })?;
    let mut p = DdlParser { tokens: &tokens, pos: 0 };
    let mut catalog = SchemaCatalog::default();
    while !matches!(p.peek().tok, Tok::Eof) {
        let table = p.create_table()?;
        catalog.insert(table)?;
    }
    Ok(catalog)
}

struct DdlParser<'t> {
    tokens: &'t [Token],
    pos: usize,
}

impl<'t> DdlParser<'t> {
    fn peek(&self) -> &'t Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> &'t Token {
        let t = &self.tokens[self.pos];
        if !matches!(t.tok, Tok::Eof) {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> SchemaError {
        let t = self.peek();
        SchemaError::Syntax { position: t.offset, expected: expected.into(), found: t.tok.to_string() }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), SchemaError> {
        if self.peek().is_word(kw) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(kw))
        }
    }

    fn sym(&mut self, s: &str) -> Result<(), SchemaError> {
        if self.peek().is_sym(s) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&format!("`{s}`")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, SchemaError> {
        match &self.peek().tok {
            Tok::Word(w) => {
                let w = w.clone();
                self.bump();
                Ok(w)
            }
            _ => Err(self.error(what)),
        }
    }

    fn int(&mut self) -> Result<u32, SchemaError> {
        match &self.peek().tok {
            Tok::Number(n) if n.parse::<u32>().is_ok() => {
                let v = n.parse().unwrap();
                self.bump();
                Ok(v)
            }
            _ => Err(self.error("an integer")),
        }
    }

    fn create_table(&mut self) -> Result<Table, SchemaError> {
        self.keyword("CREATE")?;
        self.keyword("TABLE")?;
        let name = self.ident("a table name")?;
        self.sym("(")?;
        let mut columns = vec![self.coldef()?];
        while self.peek().is_sym(",") {
            self.bump();
            columns.push(self.coldef()?);
        }
        self.sym(")")?;
        self.sym(";")?;
        Ok(Table { name, columns })
    }

    fn coldef(&mut self) -> Result<Column, SchemaError> {
        let name = self.ident("a column name")?;
        let ty = self.column_type()?;
        let mut nullable = true;
        loop {
            let t = self.peek();
            if t.is_word("NOT") {
                self.bump();
                self.keyword("NULL")?;
                nullable = false;
            } else if t.is_word("PRIMARY") {
                self.bump();
                self.keyword("KEY")?;
            } else if t.is_word("DEFAULT") {
                self.bump();
                self.literal()?;
            } else {
                break;
            }
        }
        Ok(Column { name, ty, nullable })
    }

    fn column_type(&mut self) -> Result<SqlScalarType, SchemaError> {
        let tok = self.peek();
        let word = match &tok.tok {
            Tok::Word(w) => w.clone(),
            _ => return Err(self.error("a column type")),
        };
        let kind = SqlKind::from_name(&word).ok_or_else(|| SchemaError::UnsupportedType(word.clone()))?;
        self.bump();
        let mut ty = SqlScalarType::new(kind);
        if self.peek().is_sym("(") {
            let open = self.peek().offset;
            self.bump();
            let first = self.int()?;
            let second = if self.peek().is_sym(",") {
                self.bump();
                Some(self.int()?)
            } else {
                None
            };
            self.sym(")")?;
            if kind.takes_length() && second.is_none() && first > 0 {
                ty.length = Some(first);
            } else if kind.takes_precision() {
                ty.precision = Some(first);
                ty.scale = second;
            } else {
                return Err(SchemaError::Syntax {
                    position: open,
                    expected: format!("no parameters for {kind}"),
                    found: "`(`".into(),
                });
            }
        }
        Ok(ty)
    }

    fn literal(&mut self) -> Result<(), SchemaError> {
        if self.peek().is_sym("-") {
            self.bump();
        }
        match &self.peek().tok {
            Tok::Number(_) | Tok::Str(_) => {
                self.bump();
                Ok(())
            }
            Tok::Word(w) if ["NULL", "TRUE", "FALSE"].iter().any(|k| w.eq_ignore_ascii_case(k)) => {
                self.bump();
                Ok(())
            }
            _ => Err(self.error("a literal")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_warehouse() {
        let cat = load_schema("CREATE TABLE warehouse (label VARCHAR(100), qty INTEGER);").unwrap();
        let t = cat.lookup_table("warehouse").unwrap();
        assert_eq!(t.columns.len(), 2);
        assert_eq!(t.columns[0].name, "label");
        assert_eq!(t.columns[0].ty.kind, SqlKind::Varchar);
        assert_eq!(t.columns[0].ty.length, Some(100));
        assert_eq!(t.columns[1].ty.kind, SqlKind::Integer);
    }

    #[test]
    fn empty_text_is_empty_catalog() {
        assert!(load_schema("").unwrap().is_empty());
        assert!(load_schema("  -- nothing here\n").unwrap().is_empty());
    }

    #[test]
    fn duplicate_table() {
        let err = load_schema("CREATE TABLE t (a INTEGER); CREATE TABLE t (b INTEGER);").unwrap_err();
        assert_eq!(err, SchemaError::DuplicateTable("t".into()));
        let err = load_schema("CREATE TABLE t (a INTEGER); CREATE TABLE T (b INTEGER);").unwrap_err();
        assert_eq!(err, SchemaError::DuplicateTable("T".into()));
    }

    #[test]
    fn duplicate_column_case_insensitive() {
        let err = load_schema("CREATE TABLE t (a INTEGER, A VARCHAR(3));").unwrap_err();
        assert_eq!(err, SchemaError::DuplicateColumn { table: "t".into(), column: "A".into() });
    }

    #[test]
    fn unsupported_type() {
        let err = load_schema("CREATE TABLE t (a BLOB);").unwrap_err();
        assert_eq!(err, SchemaError::UnsupportedType("BLOB".into()));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match load_schema("CREATE TABLE t (a INTEGER)").unwrap_err() {
            SchemaError::Syntax { position, .. } => assert_eq!(position, 26),
            e => panic!("unexpected {e:?}"),
        }
        assert!(matches!(load_schema("CREATE TABLE t ();"), Err(SchemaError::Syntax { .. })));
        assert!(matches!(load_schema("CREATE TABLE t (a INTEGER(4));"), Err(SchemaError::Syntax { .. })));
    }

    #[test]
    fn constraints_and_synonyms() {
        let cat = load_schema(
            "CREATE TABLE e (id INT NOT NULL PRIMARY KEY, ok BOOL DEFAULT TRUE, \
             amount NUMERIC(10,2) DEFAULT -1, note VARCHAR(5) DEFAULT 'x');",
        )
        .unwrap();
        let t = cat.lookup_table("E").unwrap();
        assert_eq!(t.columns[0].ty.kind, SqlKind::Integer);
        assert!(!t.columns[0].nullable);
        assert_eq!(t.columns[1].ty.kind, SqlKind::Boolean);
        assert!(t.columns[1].nullable);
        assert_eq!(t.columns[2].ty.kind, SqlKind::Numeric);
        assert_eq!((t.columns[2].ty.precision, t.columns[2].ty.scale), (Some(10), Some(2)));
    }

    #[test]
    fn lookup_is_case_insensitive() {
        let cat = load_schema("CREATE TABLE warehouse (label VARCHAR(100), qty INTEGER);").unwrap();
        assert_eq!(cat.lookup_table("WAREHOUSE").unwrap().name, "warehouse");
        let cat = load_schema("CREATE TABLE employee (id INTEGER);").unwrap();
        assert!(cat.lookup_table("employe").is_none());
        assert!(SchemaCatalog::default().lookup_table("x").is_none());
    }

    #[test]
    fn type_equality_ignores_length() {
        let a = SqlScalarType { length: Some(10), ..SqlScalarType::new(SqlKind::Varchar) };
        assert_eq!(a, SqlScalarType::new(SqlKind::Varchar));
        assert_ne!(SqlScalarType::new(SqlKind::Decimal), SqlScalarType::new(SqlKind::Numeric));
    }

    #[test]
    fn render_reloads_to_equal_catalog() {
        let src = "create table A (x int not null default 3, y varchar(7) primary key);\n\
                   CREATE TABLE b (d DECIMAL(4), n NUMERIC(8,3), t TIMESTAMP);";
        let cat = load_schema(src).unwrap();
        let rendered = cat.render();
        let again = load_schema(&rendered).unwrap();
        assert_eq!(cat, again);
        assert_eq!(rendered, again.render());
    }
}
