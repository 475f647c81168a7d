//! CRUD SQL statements with `?` placeholders: parsing, schema validation and
//! signature inference.

mod analyze;
pub mod ast;
pub mod lexer;
mod parser;

use thiserror::Error;

pub use analyze::{analyze_query, AnalysisError, OutColumn, QuerySignature};
pub use ast::{SqlAst, StatementKind};
pub use parser::{parse_sql, SqlParseError};

use crate::schema::SchemaCatalog;

/// Any reason a statement string has no signature.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SqlError {
    #[error(transparent)]
    Parse(#[from] SqlParseError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

impl SqlError {
    /// True when the statement is well-formed but outside the analyzed subset.
    pub fn is_unsupported(&self) -> bool {
        matches!(
            self,
            SqlError::Parse(SqlParseError::Unsupported { .. }) | SqlError::Analysis(AnalysisError::UntypablePlaceholder(_))
        )
    }
}

/// Parses and analyzes in one step.
pub fn signature(text: &str, catalog: &SchemaCatalog) -> Result<QuerySignature, SqlError> {
    let ast = parse_sql(text)?;
    Ok(analyze_query(&ast, catalog)?)
}

/// Number of `?` tokens outside string literals and `--` comments.
pub fn placeholder_count(text: &str) -> usize {
    let mut count = 0;
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '?' => count += 1,
            '\'' => {
                for d in chars.by_ref() {
                    if d == '\'' {
                        break;
                    }
                }
            }
            '-' if chars.peek() == Some(&'-') => {
                for d in chars.by_ref() {
                    if d == '\n' {
                        break;
                    }
                }
            }
            _ => {}
        }
    }
    count
}
