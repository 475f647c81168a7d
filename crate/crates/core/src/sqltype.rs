//! The qualifier lattice attached to statement and result-set variables.
//!
//! ```text
//!              Unknown
//!            /    |    \
//!   Sql(in,out) ...   Unsupported
//!            \    |    /
//!              Bottom
//! ```
//!
//! Between two `Sql` values with equal `in` lists, `a ⊑ b` iff `b.out` is a
//! prefix of `a.out`: a result with more columns supports every getter that a
//! shorter one does.

use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::schema::{SqlKind, SqlScalarType};
use crate::sqlfront::QuerySignature;

/// A result column in a qualifier. Annotations may omit the name.
#[derive(Debug, Clone)]
pub struct ResultColumn {
    pub name: Option<String>,
    pub ty: SqlScalarType,
}

impl ResultColumn {
    pub fn named(name: impl Into<String>, ty: impl Into<SqlScalarType>) -> Self {
        ResultColumn { name: Some(name.into()), ty: ty.into() }
    }

    pub fn unnamed(ty: impl Into<SqlScalarType>) -> Self {
        ResultColumn { name: None, ty: ty.into() }
    }

    pub fn has_name(&self, name: &str) -> bool {
        self.name.as_deref().is_some_and(|n| n.eq_ignore_ascii_case(name))
    }
}

impl PartialEq for ResultColumn {
    fn eq(&self, other: &Self) -> bool {
        self.ty == other.ty
            && match (&self.name, &other.name) {
                (Some(a), Some(b)) => a.eq_ignore_ascii_case(b),
                (None, None) => true,
                _ => false,
            }
    }
}

impl Eq for ResultColumn {}

impl Hash for ResultColumn {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ty.hash(state);
        self.name.as_ref().map(|n| n.to_ascii_lowercase()).hash(state);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SqlQualifier {
    /// Nothing is known about the statement (top).
    Unknown,
    Sql { inputs: Vec<SqlScalarType>, outputs: Vec<ResultColumn> },
    /// The statement exists but could not be analyzed.
    Unsupported,
    /// No statement flows here (bottom).
    Bottom,
}

impl SqlQualifier {
    pub fn sql(inputs: Vec<SqlScalarType>, outputs: Vec<ResultColumn>) -> Self {
        SqlQualifier::Sql { inputs, outputs }
    }

    pub fn from_signature(sig: &QuerySignature) -> Self {
        SqlQualifier::Sql {
            inputs: sig.inputs.clone(),
            outputs: sig.outputs.iter().map(|o| ResultColumn::named(o.name.clone(), o.ty)).collect(),
        }
    }

    /// The qualifier of a result set produced by executing a statement with this qualifier.
    pub fn result_of(&self) -> SqlQualifier {
        match self {
            SqlQualifier::Sql { outputs, .. } => SqlQualifier::Sql { inputs: Vec::new(), outputs: outputs.clone() },
            other => other.clone(),
        }
    }

    pub fn is_subtype(&self, other: &SqlQualifier) -> bool {
        use SqlQualifier::*;
        match (self, other) {
            (Bottom, _) | (_, Unknown) => true,
            (Unsupported, Unsupported) => true,
            (Sql { inputs: i1, outputs: o1 }, Sql { inputs: i2, outputs: o2 }) => {
                i1 == i2 && o2.len() <= o1.len() && o1.iter().zip(o2).all(|(a, b)| a == b)
            }
            _ => false,
        }
    }

    pub fn lub(&self, other: &SqlQualifier) -> SqlQualifier {
        use SqlQualifier::*;
        match (self, other) {
            (Bottom, q) | (q, Bottom) => q.clone(),
            (Unknown, _) | (_, Unknown) => Unknown,
            (Unsupported, Unsupported) => Unsupported,
            (Sql { inputs: i1, outputs: o1 }, Sql { inputs: i2, outputs: o2 }) if i1 == i2 => {
                let common = o1.iter().zip(o2).take_while(|(a, b)| a == b).count();
                Sql { inputs: i1.clone(), outputs: o1[..common].to_vec() }
            }
            _ => Unknown,
        }
    }
}

impl fmt::Display for SqlQualifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SqlQualifier::Unknown => f.write_str("@SqlUnknown"),
            SqlQualifier::Unsupported => f.write_str("@SqlUnsupported"),
            SqlQualifier::Bottom => f.write_str("@SqlBottom"),
            SqlQualifier::Sql { inputs, outputs } => {
                let ins: Vec<String> = inputs.iter().map(|t| format!("\"{t}\"")).collect();
                let outs: Vec<String> = outputs
                    .iter()
                    .map(|c| match &c.name {
                        Some(n) => format!("\"{} {n}\"", c.ty),
                        None => format!("\"{}\"", c.ty),
                    })
                    .collect();
                f.write_str("@Sql(")?;
                if !ins.is_empty() {
                    write!(f, "in={{{}}}", ins.join(", "))?;
                    if !outs.is_empty() {
                        f.write_str(", ")?;
                    }
                }
                if !outs.is_empty() || ins.is_empty() {
                    write!(f, "out={{{}}}", outs.join(", "))?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnnotationError {
    #[error("annotation syntax error at offset {position}: expected {expected}")]
    Syntax { position: usize, expected: String },
    #[error("unknown SQL type `{0}` in annotation")]
    UnknownSqlType(String),
    #[error("column `{0}` appears more than once in annotation")]
    DuplicateColumn(String),
}

/// Parses `@Sql(in={...}, out={...})` (either list optional) or one of the
/// marker forms `@SqlUnknown`, `@SqlUnsupported`, `@SqlBottom`.
pub fn parse_sql_annotation(text: &str) -> Result<SqlQualifier, AnnotationError> {
    let mut p = AnnotationParser { text, pos: 0 };
    p.skip_ws();
    p.expect("@")?;
    let name = p.word();
    let q = match name {
        "Sql" => p.body()?,
        "SqlUnknown" => p.marker(SqlQualifier::Unknown)?,
        "SqlUnsupported" => p.marker(SqlQualifier::Unsupported)?,
        "SqlBottom" => p.marker(SqlQualifier::Bottom)?,
        _ => return Err(p.error("an @Sql annotation")),
    };
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error("end of annotation"));
    }
    if let SqlQualifier::Sql { outputs, .. } = &q {
        for (i, c) in outputs.iter().enumerate() {
            if let Some(n) = &c.name {
                if outputs[..i].iter().any(|o| o.has_name(n)) {
                    return Err(AnnotationError::DuplicateColumn(n.clone()));
                }
            }
        }
    }
    Ok(q)
}

struct AnnotationParser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> AnnotationParser<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn error(&self, expected: &str) -> AnnotationError {
        AnnotationError::Syntax { position: self.pos, expected: expected.into() }
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), AnnotationError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(&format!("`{s}`")))
        }
    }

    fn word(&mut self) -> &'a str {
        let rest = self.rest();
        let len = rest.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn marker(&mut self, q: SqlQualifier) -> Result<SqlQualifier, AnnotationError> {
        if self.eat("(") {
            self.expect(")")?;
        }
        Ok(q)
    }

    fn body(&mut self) -> Result<SqlQualifier, AnnotationError> {
        self.expect("(")?;
        let mut inputs = None;
        let mut outputs = None;
        loop {
            self.skip_ws();
            let at = self.pos;
            let key = self.word();
            match key {
                "in" if inputs.is_none() && outputs.is_none() => {
                    let items = self.list()?;
                    inputs = Some(items.iter().map(|(s, off)| parse_type(s, *off)).collect::<Result<Vec<_>, _>>()?);
                }
                "out" if outputs.is_none() => {
                    let items = self.list()?;
                    outputs = Some(items.iter().map(|(s, off)| parse_out(s, *off)).collect::<Result<Vec<_>, _>>()?);
                }
                _ => {
                    self.pos = at;
                    return Err(self.error(if inputs.is_none() { "`in` or `out`" } else { "`out`" }));
                }
            }
            if !self.eat(",") {
                break;
            }
        }
        self.expect(")")?;
        Ok(SqlQualifier::Sql { inputs: inputs.unwrap_or_default(), outputs: outputs.unwrap_or_default() })
    }

    /// `= { "..." (, "...")* }`, returning each string with its offset.
    fn list(&mut self) -> Result<Vec<(&'a str, usize)>, AnnotationError> {
        self.expect("=")?;
        self.expect("{")?;
        let mut items = Vec::new();
        if self.eat("}") {
            return Ok(items);
        }
        loop {
            self.expect("\"")?;
            let start = self.pos;
            let len = self.rest().find('"').ok_or_else(|| self.error("closing `\"`"))?;
            items.push((&self.text[start..start + len], start));
            self.pos += len + 1;
            if !self.eat(",") {
                break;
            }
        }
        self.expect("}")?;
        Ok(items)
    }
}

fn parse_type(s: &str, offset: usize) -> Result<SqlScalarType, AnnotationError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(AnnotationError::Syntax { position: offset, expected: "an SQL type".into() });
    }
    SqlKind::from_name(s).map(SqlScalarType::new).ok_or_else(|| AnnotationError::UnknownSqlType(s.to_string()))
}

fn parse_out(s: &str, offset: usize) -> Result<ResultColumn, AnnotationError> {
    let mut parts = s.split_whitespace();
    let ty = parse_type(parts.next().unwrap_or(""), offset)?;
    let name = parts.next().map(str::to_string);
    if let Some(n) = &name {
        let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '$');
        if !valid {
            return Err(AnnotationError::Syntax { position: offset, expected: "a column identifier".into() });
        }
    }
    if parts.next().is_some() {
        return Err(AnnotationError::Syntax { position: offset, expected: "`\"TYPE name\"`".into() });
    }
    Ok(ResultColumn { name, ty })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(k: SqlKind) -> SqlScalarType {
        SqlScalarType::new(k)
    }

    #[test]
    fn parses_documented_annotations() {
        let q = parse_sql_annotation(r#"@Sql(in={"INTEGER"}, out={"VARCHAR name"})"#).unwrap();
        assert_eq!(q, SqlQualifier::sql(vec![t(SqlKind::Integer)], vec![ResultColumn::named("name", SqlKind::Varchar)]));
        let q = parse_sql_annotation(r#"@Sql(out={"INTEGER id","INTEGER salary"})"#).unwrap();
        assert_eq!(
            q,
            SqlQualifier::sql(
                vec![],
                vec![ResultColumn::named("id", SqlKind::Integer), ResultColumn::named("salary", SqlKind::Integer)]
            )
        );
        let q = parse_sql_annotation(r#"@Sql(in = {"INTEGER", "VARCHAR"}, out = {"DECIMAL"})"#).unwrap();
        assert_eq!(q, SqlQualifier::sql(vec![t(SqlKind::Integer), t(SqlKind::Varchar)], vec![ResultColumn::unnamed(SqlKind::Decimal)]));
    }

    #[test]
    fn annotation_errors() {
        assert_eq!(
            parse_sql_annotation(r#"@Sql(in={"NOPE"}, out={"VARCHAR a"})"#),
            Err(AnnotationError::UnknownSqlType("NOPE".into()))
        );
        assert!(matches!(parse_sql_annotation(r#"@Sql(out={"INTEGER a"}, in={"INTEGER"})"#), Err(AnnotationError::Syntax { .. })));
        assert!(matches!(parse_sql_annotation(r#"@Sql(out={"INTEGER a b"})"#), Err(AnnotationError::Syntax { .. })));
        assert!(matches!(parse_sql_annotation(r#"@Sql(out={"INTEGER a")"#), Err(AnnotationError::Syntax { .. })));
        assert!(matches!(parse_sql_annotation(r#"@Sql(out={"INTEGER a", "DATE A"})"#), Err(AnnotationError::DuplicateColumn(_))));
    }

    #[test]
    fn canonical_rendering() {
        let q = SqlQualifier::sql(vec![t(SqlKind::Integer)], vec![ResultColumn::named("name", SqlKind::Varchar)]);
        assert_eq!(q.to_string(), r#"@Sql(in={"INTEGER"}, out={"VARCHAR name"})"#);
        assert_eq!(SqlQualifier::sql(vec![], vec![]).to_string(), "@Sql(out={})");
        assert_eq!(SqlQualifier::sql(vec![t(SqlKind::Date)], vec![]).to_string(), r#"@Sql(in={"DATE"})"#);
    }

    #[test]
    fn prefix_subtyping() {
        let long = SqlQualifier::sql(
            vec![],
            vec![ResultColumn::named("id", SqlKind::Integer), ResultColumn::named("salary", SqlKind::Integer)],
        );
        let short = SqlQualifier::sql(vec![], vec![ResultColumn::named("ID", SqlKind::Integer)]);
        assert!(long.is_subtype(&short));
        assert!(!short.is_subtype(&long));
        let a = SqlQualifier::sql(vec![t(SqlKind::Integer)], vec![]);
        let b = SqlQualifier::sql(vec![t(SqlKind::Varchar)], vec![]);
        assert!(!a.is_subtype(&b));
        assert_eq!(a.lub(&b), SqlQualifier::Unknown);
        assert_eq!(long.lub(&SqlQualifier::Unsupported), SqlQualifier::Unknown);
        assert_eq!(long.lub(&SqlQualifier::Bottom), long);
    }

    #[test]
    fn lub_is_common_prefix() {
        let c = |n: &str| ResultColumn::named(n, SqlKind::Integer);
        let i = vec![t(SqlKind::Date)];
        let a = SqlQualifier::sql(i.clone(), vec![c("c1"), c("c2"), c("c3")]);
        let b = SqlQualifier::sql(i.clone(), vec![c("c1"), c("c2"), c("x")]);
        assert_eq!(a.lub(&b), SqlQualifier::sql(i, vec![c("c1"), c("c2")]));
    }
}
