//! Qualifier inference, access verification and the program driver.

mod analysis;
mod diag;
pub mod render;

use std::collections::HashMap;
use std::ops::AddAssign;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use analysis::QualifierState;
pub use diag::{Code, Diagnostic, Severity};

use crate::javafront::{parse_java, CompilationUnit, JType, JavaSyntaxError, MethodBody};
use crate::schema::SchemaCatalog;
use crate::sqltype::SqlQualifier;
use crate::typemap::ConversionTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Every statement and access must be analyzable.
    #[default]
    Sound,
    /// Unanalyzable statements warn once; their accesses are skipped.
    Degraded,
}

#[derive(Debug, Clone, Default)]
pub struct CheckOptions {
    pub mode: Mode,
    /// Report supported-but-not-recommended conversions as warnings.
    pub supported_as_warning: bool,
    /// Worker threads; 0 uses the global pool.
    pub jobs: usize,
}

/// Access tallies over everything analyzed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Stats {
    pub getters_checked: usize,
    pub setters_checked: usize,
    pub out_of_scope: usize,
    pub unchecked: usize,
    pub methods_analyzed: usize,
    pub methods_skipped: usize,
}

impl AddAssign for Stats {
    fn add_assign(&mut self, o: Stats) {
        self.getters_checked += o.getters_checked;
        self.setters_checked += o.setters_checked;
        self.out_of_scope += o.out_of_scope;
        self.unchecked += o.unchecked;
        self.methods_analyzed += o.methods_analyzed;
        self.methods_skipped += o.methods_skipped;
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    /// Sorted by file, line, column and code.
    pub diagnostics: Vec<Diagnostic>,
    pub stats: Stats,
}

impl Report {
    pub fn count(&self, severity: Severity) -> usize {
        self.diagnostics.iter().filter(|d| d.severity == severity).count()
    }
}

#[derive(Debug, Clone)]
pub struct SourceFile {
    pub path: PathBuf,
    pub text: String,
}

impl SourceFile {
    pub fn new(path: impl Into<PathBuf>, text: impl Into<String>) -> Self {
        SourceFile { path: path.into(), text: text.into() }
    }
}

#[derive(Debug, Error)]
pub enum CheckError {
    #[error(transparent)]
    Syntax(#[from] JavaSyntaxError),
    #[error("cannot start worker threads: {0}")]
    Threads(String),
}

/// Declared annotations of one method, visible to its callers.
#[derive(Debug, Clone)]
pub struct MethodContract {
    pub params: Vec<Option<SqlQualifier>>,
    pub ret: Option<SqlQualifier>,
    pub return_type: JType,
}

/// Contracts of every method, keyed by class, name and arity. The first
/// declaration wins when overloads share an arity.
#[derive(Debug, Clone, Default)]
pub struct MethodIndex {
    map: HashMap<(String, String, usize), MethodContract>,
}

impl MethodIndex {
    pub fn build(units: &[CompilationUnit]) -> Self {
        let mut map = HashMap::new();
        for cu in units {
            for class in &cu.classes {
                for m in &class.methods {
                    let (params, ret) = analysis::own_contract(m, &mut Vec::new());
                    let key = (class.name.clone(), m.name.clone(), m.params.len());
                    map.entry(key).or_insert(MethodContract { params, ret, return_type: m.return_type.ty.clone() });
                }
            }
        }
        MethodIndex { map }
    }

    pub fn get(&self, class: &str, method: &str, arity: usize) -> Option<&MethodContract> {
        self.map.get(&(class.to_string(), method.to_string(), arity))
    }
}

/// Parses and checks a set of source files.
pub fn check_program(
    sources: &[SourceFile],
    catalog: &SchemaCatalog,
    table: &ConversionTable,
    options: &CheckOptions,
) -> Result<Report, CheckError> {
    with_pool(options.jobs, || {
        let units = sources
            .par_iter()
            .map(|f| parse_java(&f.text, f.path.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(check_units_inner(&units, catalog, table, options))
    })?
}

/// Checks already parsed compilation units.
pub fn check_units(
    units: &[CompilationUnit],
    catalog: &SchemaCatalog,
    table: &ConversionTable,
    options: &CheckOptions,
) -> Result<Report, CheckError> {
    with_pool(options.jobs, || check_units_inner(units, catalog, table, options))
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, CheckError> {
    if jobs == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| CheckError::Threads(e.to_string()))?;
    Ok(pool.install(f))
}

fn check_units_inner(
    units: &[CompilationUnit],
    catalog: &SchemaCatalog,
    table: &ConversionTable,
    options: &CheckOptions,
) -> Report {
    let index = MethodIndex::build(units);
    let shared = analysis::Shared { catalog, table, options, index: &index };
    let mut report = Report::default();

    let mut work = Vec::new();
    for cu in units {
        for class in &cu.classes {
            for v in &class.violations {
                report.diagnostics.push(Diagnostic::new(
                    Code::SubsetViolation,
                    Severity::Warning,
                    v.span.clone(),
                    format!("{} in class `{}` is outside the analyzed subset", v.construct, class.name),
                ));
            }
            for m in &class.methods {
                match &m.body {
                    MethodBody::Block(_) => work.push((class, m)),
                    MethodBody::Absent => {}
                    MethodBody::Skipped(v) => {
                        report.stats.methods_skipped += 1;
                        report.diagnostics.push(Diagnostic::new(
                            Code::SubsetViolation,
                            Severity::Warning,
                            v.span.clone(),
                            format!("method `{}` is not analyzed: {}", m.name, v.construct),
                        ));
                    }
                }
            }
        }
    }

    let results: Vec<(Vec<Diagnostic>, Stats)> =
        work.par_iter().map(|(class, m)| analysis::check_method(&shared, class, m)).collect();
    for (diags, stats) in results {
        report.diagnostics.extend(diags);
        report.stats += stats;
    }
    report.diagnostics.sort();
    report.diagnostics.dedup();
    report
}
