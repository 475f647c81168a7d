use std::collections::BTreeMap;

use thiserror::Error;

use super::ast::*;
use crate::schema::{SchemaCatalog, SqlScalarType, Table};

/// One result column as seen by a getter: the visible name and its type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OutColumn {
    pub name: String,
    pub ty: SqlScalarType,
}

impl OutColumn {
    pub fn new(name: impl Into<String>, ty: impl Into<SqlScalarType>) -> Self {
        OutColumn { name: name.into(), ty: ty.into() }
    }

    /// Name compared case-insensitively, type compared by kind.
    pub fn matches(&self, other: &OutColumn) -> bool {
        self.ty == other.ty && self.name.eq_ignore_ascii_case(&other.name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QuerySignature {
    /// Parameter types, one per `?` in textual order.
    pub inputs: Vec<SqlScalarType>,
    /// Result columns; empty for INSERT, UPDATE and DELETE.
    pub outputs: Vec<OutColumn>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("unknown table `{0}`")]
    UnknownTable(String),
    #[error("unknown column `{column}` in table `{table}`")]
    UnknownColumn { table: String, column: String },
    #[error("statement lists {expected} columns but supplies {actual} values")]
    ArityMismatch { expected: usize, actual: usize },
    #[error("cannot infer a type for placeholder {0}")]
    UntypablePlaceholder(u32),
    #[error("result column `{0}` appears more than once")]
    AmbiguousColumn(String),
}

pub fn analyze_query(ast: &SqlAst, catalog: &SchemaCatalog) -> Result<QuerySignature, AnalysisError> {
    let target = ast.target();
    let table = catalog.lookup_table(&target.name).ok_or_else(|| AnalysisError::UnknownTable(target.name.clone()))?;
    let scope = Scope { table, alias: target.alias.as_deref() };
    let mut typer = Typer::default();
    let mut outputs = Vec::new();

    match ast {
        SqlAst::Select(s) => {
            for item in &s.items {
                match item {
                    SelectItem::Star(q) => {
                        if let Some(q) = q {
                            scope.check_qualifier(q)?;
                        }
                        outputs.extend(table.columns.iter().map(|c| OutColumn::new(c.name.clone(), c.ty)));
                    }
                    SelectItem::Column { column, alias } => {
                        let col = scope.resolve(column)?;
                        let name = alias.clone().unwrap_or_else(|| col.name.clone());
                        outputs.push(OutColumn::new(name, col.ty));
                    }
                }
            }
            for (i, o) in outputs.iter().enumerate() {
                if outputs[..i].iter().any(|p| p.name.eq_ignore_ascii_case(&o.name)) {
                    return Err(AnalysisError::AmbiguousColumn(o.name.clone()));
                }
            }
            if let Some(w) = &s.filter {
                typer.predicate(w, &scope)?;
            }
            for c in &s.order_by {
                let is_alias = c.qualifier.is_none() && outputs.iter().any(|o| o.name.eq_ignore_ascii_case(&c.name));
                if !is_alias {
                    scope.resolve(c)?;
                }
            }
            if let Some(l) = &s.limit {
                typer.untyped(l, &scope)?;
            }
        }
        SqlAst::Insert(ins) => {
            let columns: Vec<SqlScalarType> = match &ins.columns {
                Some(list) => list.iter().map(|c| scope.resolve(c).map(|col| col.ty)).collect::<Result<_, _>>()?,
                None => table.columns.iter().map(|c| c.ty).collect(),
            };
            if columns.len() != ins.values.len() {
                return Err(AnalysisError::ArityMismatch { expected: columns.len(), actual: ins.values.len() });
            }
            for (ty, value) in columns.iter().zip(&ins.values) {
                typer.assigned(*ty, value, &scope)?;
            }
        }
        SqlAst::Update(u) => {
            for (col, value) in &u.assignments {
                let ty = scope.resolve(col)?.ty;
                typer.assigned(ty, value, &scope)?;
            }
            if let Some(w) = &u.filter {
                typer.predicate(w, &scope)?;
            }
        }
        SqlAst::Delete(d) => {
            if let Some(w) = &d.filter {
                typer.predicate(w, &scope)?;
            }
        }
    }

    let inputs = typer.finish(&ast.placeholders())?;
    Ok(QuerySignature { inputs, outputs })
}

struct Scope<'a> {
    table: &'a Table,
    alias: Option<&'a str>,
}

impl<'a> Scope<'a> {
    fn check_qualifier(&self, q: &str) -> Result<(), AnalysisError> {
        let ok = match self.alias {
            Some(a) => a.eq_ignore_ascii_case(q),
            None => self.table.name.eq_ignore_ascii_case(q),
        };
        if ok {
            Ok(())
        } else {
            Err(AnalysisError::UnknownTable(q.to_string()))
        }
    }

    fn resolve(&self, c: &ColumnRef) -> Result<&'a crate::schema::Column, AnalysisError> {
        if let Some(q) = &c.qualifier {
            self.check_qualifier(q)?;
        }
        self.table.column(&c.name).ok_or_else(|| AnalysisError::UnknownColumn {
            table: self.table.name.clone(),
            column: c.name.clone(),
        })
    }
}

#[derive(Default)]
struct Typer {
    types: BTreeMap<u32, SqlScalarType>,
}

impl Typer {
    fn set(&mut self, ordinal: u32, ty: SqlScalarType) {
        self.types.insert(ordinal, ty);
    }

    /// Validates column references in an expression that anchors no placeholder.
    fn untyped(&mut self, e: &Expr, scope: &Scope) -> Result<(), AnalysisError> {
        match e {
            Expr::Column(c) => scope.resolve(c).map(|_| ()),
            Expr::Placeholder(_) | Expr::Literal(_) => Ok(()),
            Expr::Neg(x) | Expr::Not(x) | Expr::IsNull { expr: x, .. } => self.untyped(x, scope),
            Expr::Arith { lhs, rhs, .. } | Expr::Compare { lhs, rhs, .. } | Expr::And(lhs, rhs) | Expr::Or(lhs, rhs) => {
                self.untyped(lhs, scope)?;
                self.untyped(rhs, scope)
            }
            Expr::Like { expr, pattern, .. } => {
                self.untyped(expr, scope)?;
                self.untyped(pattern, scope)
            }
            Expr::Between { expr, low, high, .. } => {
                self.untyped(expr, scope)?;
                self.untyped(low, scope)?;
                self.untyped(high, scope)
            }
            Expr::InList { expr, list, .. } => {
                self.untyped(expr, scope)?;
                list.iter().try_for_each(|x| self.untyped(x, scope))
            }
        }
    }

    fn assigned(&mut self, ty: SqlScalarType, value: &Expr, scope: &Scope) -> Result<(), AnalysisError> {
        match value {
            Expr::Placeholder(n) => {
                self.set(*n, ty);
                Ok(())
            }
            other => self.untyped(other, scope),
        }
    }

    fn predicate(&mut self, e: &Expr, scope: &Scope) -> Result<(), AnalysisError> {
        match e {
            Expr::And(l, r) | Expr::Or(l, r) => {
                self.predicate(l, scope)?;
                self.predicate(r, scope)
            }
            Expr::Not(x) => self.predicate(x, scope),
            Expr::Compare { lhs, rhs, .. } => match (lhs.as_ref(), rhs.as_ref()) {
                (Expr::Column(c), Expr::Placeholder(n)) | (Expr::Placeholder(n), Expr::Column(c)) => {
                    let ty = scope.resolve(c)?.ty;
                    self.set(*n, ty);
                    Ok(())
                }
                _ => self.untyped(e, scope),
            },
            Expr::Between { expr, low, high, .. } => match expr.as_ref() {
                Expr::Column(c) => {
                    let ty = scope.resolve(c)?.ty;
                    self.assigned(ty, low, scope)?;
                    self.assigned(ty, high, scope)
                }
                _ => self.untyped(e, scope),
            },
            Expr::InList { expr, list, .. } => match expr.as_ref() {
                Expr::Column(c) => {
                    let ty = scope.resolve(c)?.ty;
                    list.iter().try_for_each(|x| self.assigned(ty, x, scope))
                }
                _ => self.untyped(e, scope),
            },
            other => self.untyped(other, scope),
        }
    }

    fn finish(self, ordinals: &[u32]) -> Result<Vec<SqlScalarType>, AnalysisError> {
        let mut sorted = ordinals.to_vec();
        sorted.sort_unstable();
        sorted
            .into_iter()
            .map(|n| self.types.get(&n).copied().ok_or(AnalysisError::UntypablePlaceholder(n)))
            .collect()
    }
}
