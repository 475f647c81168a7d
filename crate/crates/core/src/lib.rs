//! Schema-aware static checking of JDBC getter and setter calls.
//!
//! The pipeline: [`javafront`] parses a Java subset and builds CFGs,
//! [`constprop`] tracks constant strings and integers, [`sqlfront`] derives
//! statement signatures from a [`schema`], and [`checker`] propagates
//! [`sqltype`] qualifiers to verify every typed access against [`typemap`].

pub mod schema;
pub mod span;
pub mod sqlfront;
pub mod sqltype;
pub mod typemap;
pub mod javafront;
pub mod dataflow;
pub mod constprop;
pub mod checker;
pub mod oracle;
pub mod synth;

pub use schema::{load_schema, SchemaCatalog, SchemaError, SqlKind, SqlScalarType};
pub use span::SourceSpan;
pub use sqlfront::{analyze_query, parse_sql, placeholder_count, QuerySignature};
pub use sqltype::{parse_sql_annotation, SqlQualifier};
pub use typemap::{load_conversion_table, ConversionTable, JavaAccessor};
pub use checker::{check_program, check_units, CheckOptions, Code, Diagnostic, Mode, Report, Severity, SourceFile};
