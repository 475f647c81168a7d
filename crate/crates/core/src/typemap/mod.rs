//! JDBC conversion tables: which getter/setter Java types are recommended,
//! merely supported, or disallowed for each SQL kind.
//!
//! Tables are written in a line-oriented format:
//!
//! ```text
//! # comment
//! getter.recommended.INTEGER = int, long
//! setter.supported.DATE = String, Timestamp
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::schema::{SqlKind, SqlScalarType};

const DEFAULT_TABLE: &str = include_str!("jdbc43.map");

/// The Java type handled by a typed getter or setter (`getInt`, `setString`, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JavaAccessor {
    Byte,
    Short,
    Int,
    Long,
    Float,
    Double,
    BigDecimal,
    Boolean,
    String,
    Date,
    Time,
    Timestamp,
}

impl JavaAccessor {
    pub const ALL: [JavaAccessor; 12] = [
        JavaAccessor::Byte,
        JavaAccessor::Short,
        JavaAccessor::Int,
        JavaAccessor::Long,
        JavaAccessor::Float,
        JavaAccessor::Double,
        JavaAccessor::BigDecimal,
        JavaAccessor::Boolean,
        JavaAccessor::String,
        JavaAccessor::Date,
        JavaAccessor::Time,
        JavaAccessor::Timestamp,
    ];

    /// Java spelling of the type, as used in mapping files.
    pub fn java_name(self) -> &'static str {
        match self {
            JavaAccessor::Byte => "byte",
            JavaAccessor::Short => "short",
            JavaAccessor::Int => "int",
            JavaAccessor::Long => "long",
            JavaAccessor::Float => "float",
            JavaAccessor::Double => "double",
            JavaAccessor::BigDecimal => "BigDecimal",
            JavaAccessor::Boolean => "boolean",
            JavaAccessor::String => "String",
            JavaAccessor::Date => "Date",
            JavaAccessor::Time => "Time",
            JavaAccessor::Timestamp => "Timestamp",
        }
    }

    /// The suffix after `get`/`set` in the JDBC method name.
    pub fn method_suffix(self) -> &'static str {
        match self {
            JavaAccessor::Byte => "Byte",
            JavaAccessor::Short => "Short",
            JavaAccessor::Int => "Int",
            JavaAccessor::Long => "Long",
            JavaAccessor::Float => "Float",
            JavaAccessor::Double => "Double",
            JavaAccessor::BigDecimal => "BigDecimal",
            JavaAccessor::Boolean => "Boolean",
            JavaAccessor::String => "String",
            JavaAccessor::Date => "Date",
            JavaAccessor::Time => "Time",
            JavaAccessor::Timestamp => "Timestamp",
        }
    }

    pub fn from_java_name(name: &str) -> Option<JavaAccessor> {
        JavaAccessor::ALL.into_iter().find(|a| a.java_name().eq_ignore_ascii_case(name))
    }

    pub fn from_method_suffix(suffix: &str) -> Option<JavaAccessor> {
        JavaAccessor::ALL.into_iter().find(|a| a.method_suffix() == suffix)
    }

    pub fn getter(self) -> String {
        format!("get{}", self.method_suffix())
    }

    pub fn setter(self) -> String {
        format!("set{}", self.method_suffix())
    }
}

impl fmt::Display for JavaAccessor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.java_name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Get,
    Set,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conversion {
    Recommended,
    SupportedOnly,
    Disallowed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Level {
    Recommended,
    Supported,
}

type Sets = BTreeMap<(Direction, Level, SqlKind), BTreeSet<JavaAccessor>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConversionTable {
    sets: Sets,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown Java accessor type `{name}`")]
    UnknownJavaAccessor { line: usize, name: String },
    #[error("line {line}: unknown SQL kind `{name}`")]
    UnknownSqlKind { line: usize, name: String },
    #[error("{direction} accessor {accessor} is both recommended and supported for {kind}")]
    Overlap { direction: &'static str, kind: SqlKind, accessor: JavaAccessor },
}

impl Default for ConversionTable {
    fn default() -> Self {
        let mut sets = Sets::new();
        for d in [Direction::Get, Direction::Set] {
            for l in [Level::Recommended, Level::Supported] {
                for k in SqlKind::ALL {
                    sets.insert((d, l, k), BTreeSet::new());
                }
            }
        }
        sets.extend(parse_entries(DEFAULT_TABLE).expect("built-in conversion table is well-formed"));
        ConversionTable { sets }
    }
}

/// Built-in table, with `config` entries replacing whole (direction, level, kind) rows.
pub fn load_conversion_table(config: Option<&str>) -> Result<ConversionTable, ConfigError> {
    let mut table = ConversionTable::default();
    let Some(text) = config else { return Ok(table) };
    let overrides = parse_entries(text)?;
    for (key, set) in &overrides {
        table.sets.insert(*key, set.clone());
    }
    for &direction in &[Direction::Get, Direction::Set] {
        for kind in SqlKind::ALL {
            let rec_key = (direction, Level::Recommended, kind);
            let sup_key = (direction, Level::Supported, kind);
            let rec = table.sets[&rec_key].clone();
            let sup = table.sets.get_mut(&sup_key).expect("all keys present");
            if let Some(&accessor) = rec.intersection(sup).next() {
                if overrides.contains_key(&sup_key) {
                    let direction = if direction == Direction::Get { "getter" } else { "setter" };
                    return Err(ConfigError::Overlap { direction, kind, accessor });
                }
                sup.retain(|a| !rec.contains(a));
            }
        }
    }
    Ok(table)
}

fn parse_entries(text: &str) -> Result<Sets, ConfigError> {
    let mut sets = Sets::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| ConfigError::Syntax { line, message: "expected `key = value`".into() })?;
        let parts: Vec<&str> = key.trim().split('.').collect();
        let [dir, level, kind] = parts[..] else {
            return Err(ConfigError::Syntax { line, message: format!("malformed key `{}`", key.trim()) });
        };
        let dir = match dir {
            "getter" | "get" => Direction::Get,
            "setter" | "set" => Direction::Set,
            other => return Err(ConfigError::Syntax { line, message: format!("unknown direction `{other}`") }),
        };
        let level = match level {
            "recommended" => Level::Recommended,
            "supported" => Level::Supported,
            other => return Err(ConfigError::Syntax { line, message: format!("unknown level `{other}`") }),
        };
        let kind = SqlKind::from_name(kind)
            .ok_or_else(|| ConfigError::UnknownSqlKind { line, name: kind.to_string() })?;
        let mut set = BTreeSet::new();
        for name in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let a = JavaAccessor::from_java_name(name)
                .ok_or_else(|| ConfigError::UnknownJavaAccessor { line, name: name.to_string() })?;
            set.insert(a);
        }
        sets.insert((dir, level, kind), set);
    }
    Ok(sets)
}

impl ConversionTable {
    pub fn classify(&self, direction: Direction, sql: SqlScalarType, java: JavaAccessor) -> Conversion {
        if self.recommended(direction, sql.kind).contains(&java) {
            Conversion::Recommended
        } else if self.supported(direction, sql.kind).contains(&java) {
            Conversion::SupportedOnly
        } else {
            Conversion::Disallowed
        }
    }

    pub fn recommended(&self, direction: Direction, kind: SqlKind) -> &BTreeSet<JavaAccessor> {
        &self.sets[&(direction, Level::Recommended, kind)]
    }

    pub fn supported(&self, direction: Direction, kind: SqlKind) -> &BTreeSet<JavaAccessor> {
        &self.sets[&(direction, Level::Supported, kind)]
    }

    /// The table in mapping-file syntax; loading it as an override reproduces the table.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for ((d, l, k), set) in &self.sets {
            let d = if *d == Direction::Get { "getter" } else { "setter" };
            let l = if *l == Level::Recommended { "recommended" } else { "supported" };
            let names: Vec<&str> = set.iter().map(|a| a.java_name()).collect();
            out.push_str(&format!("{d}.{l}.{k} = {}\n", names.join(", ")));
        }
        out
    }
}

/// Convenience over [`ConversionTable::classify`].
pub fn classify_conversion(
    table: &ConversionTable,
    direction: Direction,
    sql: SqlScalarType,
    java: JavaAccessor,
) -> Conversion {
    table.classify(direction, sql, java)
}
