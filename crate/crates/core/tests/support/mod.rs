#![allow(dead_code)]

pub mod lattice;
pub mod paths;

use std::fs;
use std::path::{Path, PathBuf};

use oopsie_core::javafront::{parse_java, CompilationUnit};
use oopsie_core::oracle::{self, Category, Execution, MiniDb};
use oopsie_core::schema::{load_schema, SchemaCatalog};
use oopsie_core::typemap::ConversionTable;
use oopsie_core::{check_program, CheckOptions, Code, Diagnostic, Mode, Report, SourceFile};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn schema(dir: &Path) -> SchemaCatalog {
    load_schema(&fs::read_to_string(dir.join("schema.sql")).unwrap()).unwrap()
}

/// `.java` files of a fixture directory, sorted by name.
pub fn sources(dir: &Path) -> Vec<SourceFile> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "java"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let text = fs::read_to_string(&p).unwrap();
            SourceFile::new(p.file_name().unwrap(), text)
        })
        .collect()
}

pub struct Program {
    pub source: SourceFile,
    pub unit: CompilationUnit,
    pub db: MiniDb,
    pub expect: Vec<(Category, u32)>,
}

pub fn corpus() -> (SchemaCatalog, Vec<Program>) {
    let dir = fixtures().join("corpus");
    let catalog = schema(&dir);
    let programs = sources(&dir)
        .into_iter()
        .map(|source| {
            let path = dir.join(&source.path);
            let rows = oracle::rows_path(&path).map(|p| fs::read_to_string(p).unwrap()).unwrap_or_default();
            let db = MiniDb::with_rows(catalog.clone(), &rows).unwrap();
            let expect = fs::read_to_string(path.with_extension("expect"))
                .map(|t| oracle::parse_expect(&t).unwrap())
                .unwrap_or_default();
            let unit = parse_java(&source.text, source.path.clone()).unwrap();
            Program { source, unit, db, expect }
        })
        .collect();
    (catalog, programs)
}

pub fn run_oracle(p: &Program) -> Execution {
    oracle::run_program(std::slice::from_ref(&p.unit), &p.db, &ConversionTable::default(), oracle::DEFAULT_BUDGET)
}

pub fn check(files: &[SourceFile], catalog: &SchemaCatalog, mode: Mode, jobs: usize) -> Report {
    let options = CheckOptions { mode, jobs, ..CheckOptions::default() };
    check_program(files, catalog, &ConversionTable::default(), &options).unwrap()
}

/// The runtime failure a checker finding predicts, if any.
pub fn category(code: Code) -> Option<Category> {
    match code {
        Code::MalformedSql => Some(Category::MalformedSql),
        Code::ParamIndexOob => Some(Category::ParamIndex),
        Code::ColumnIndexOob | Code::ColumnNameUnknown => Some(Category::Column),
        Code::SetterTypeMismatch | Code::GetterTypeMismatch => Some(Category::Conversion),
        _ => None,
    }
}

pub fn diagnostics_of<'a>(report: &'a Report, file: &Path) -> Vec<&'a Diagnostic> {
    report.diagnostics.iter().filter(|d| d.span.file() == file).collect()
}
