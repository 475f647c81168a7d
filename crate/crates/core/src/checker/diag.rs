use std::fmt;

use serde::{Deserialize, Serialize};

use crate::span::SourceSpan;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Code {
    #[serde(rename = "OOPS001")]
    MalformedSql,
    #[serde(rename = "OOPS002")]
    UnsupportedSql,
    #[serde(rename = "OOPS003")]
    UnextractableSql,
    #[serde(rename = "OOPS004")]
    ParamIndexOob,
    #[serde(rename = "OOPS005")]
    ColumnIndexOob,
    #[serde(rename = "OOPS006")]
    ColumnNameUnknown,
    #[serde(rename = "OOPS007")]
    SetterTypeMismatch,
    #[serde(rename = "OOPS008")]
    GetterTypeMismatch,
    #[serde(rename = "OOPS009")]
    NonlocalAccess,
    #[serde(rename = "OOPS010")]
    UncheckedAccess,
    #[serde(rename = "OOPS011")]
    UnextractableIndex,
    #[serde(rename = "OOPS012")]
    AnnotationArgMismatch,
    #[serde(rename = "OOPS013")]
    AnnotationReturnMismatch,
    #[serde(rename = "OOPS014")]
    OutOfScope,
    #[serde(rename = "OOPS015")]
    SubsetViolation,
}

impl Code {
    pub const ALL: [Code; 15] = [
        Code::MalformedSql,
        Code::UnsupportedSql,
        Code::UnextractableSql,
        Code::ParamIndexOob,
        Code::ColumnIndexOob,
        Code::ColumnNameUnknown,
        Code::SetterTypeMismatch,
        Code::GetterTypeMismatch,
        Code::NonlocalAccess,
        Code::UncheckedAccess,
        Code::UnextractableIndex,
        Code::AnnotationArgMismatch,
        Code::AnnotationReturnMismatch,
        Code::OutOfScope,
        Code::SubsetViolation,
    ];

    /// `OOPS001` and so on.
    pub fn as_str(self) -> &'static str {
        match self {
            Code::MalformedSql => "OOPS001",
            Code::UnsupportedSql => "OOPS002",
            Code::UnextractableSql => "OOPS003",
            Code::ParamIndexOob => "OOPS004",
            Code::ColumnIndexOob => "OOPS005",
            Code::ColumnNameUnknown => "OOPS006",
            Code::SetterTypeMismatch => "OOPS007",
            Code::GetterTypeMismatch => "OOPS008",
            Code::NonlocalAccess => "OOPS009",
            Code::UncheckedAccess => "OOPS010",
            Code::UnextractableIndex => "OOPS011",
            Code::AnnotationArgMismatch => "OOPS012",
            Code::AnnotationReturnMismatch => "OOPS013",
            Code::OutOfScope => "OOPS014",
            Code::SubsetViolation => "OOPS015",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Code::MalformedSql => "MALFORMED_SQL",
            Code::UnsupportedSql => "UNSUPPORTED_SQL",
            Code::UnextractableSql => "UNEXTRACTABLE_SQL",
            Code::ParamIndexOob => "PARAM_INDEX_OOB",
            Code::ColumnIndexOob => "COLUMN_INDEX_OOB",
            Code::ColumnNameUnknown => "COLUMN_NAME_UNKNOWN",
            Code::SetterTypeMismatch => "SETTER_TYPE_MISMATCH",
            Code::GetterTypeMismatch => "GETTER_TYPE_MISMATCH",
            Code::NonlocalAccess => "NONLOCAL_ACCESS",
            Code::UncheckedAccess => "UNCHECKED_ACCESS",
            Code::UnextractableIndex => "UNEXTRACTABLE_INDEX",
            Code::AnnotationArgMismatch => "ANNOTATION_ARG_MISMATCH",
            Code::AnnotationReturnMismatch => "ANNOTATION_RETURN_MISMATCH",
            Code::OutOfScope => "OUT_OF_SCOPE",
            Code::SubsetViolation => "SUBSET_VIOLATION",
        }
    }

    pub fn parse(s: &str) -> Option<Code> {
        Code::ALL.into_iter().find(|c| c.as_str().eq_ignore_ascii_case(s) || c.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Info,
    Warning,
    Error,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Info => "info",
            Severity::Warning => "warning",
            Severity::Error => "error",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagnostic {
    pub code: Code,
    pub severity: Severity,
    pub span: SourceSpan,
    pub message: String,
    pub expected: Option<String>,
    pub actual: Option<String>,
}

impl Diagnostic {
    pub fn new(code: Code, severity: Severity, span: SourceSpan, message: impl Into<String>) -> Self {
        Diagnostic { code, severity, span, message: message.into(), expected: None, actual: None }
    }

    pub fn with_details(mut self, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        self.expected = Some(expected.into());
        self.actual = Some(actual.into());
        self
    }

    fn key(&self) -> impl Ord + '_ {
        (&self.span, self.code, &self.message, self.severity, &self.expected, &self.actual)
    }
}

impl PartialOrd for Diagnostic {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered by file, line, column and code.
impl Ord for Diagnostic {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} {}: {}", self.span, self.severity, self.code, self.message)
    }
}
