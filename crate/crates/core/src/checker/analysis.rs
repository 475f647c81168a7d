//! Flow-sensitive qualifier inference and access verification for one method.

use std::cell::RefCell;
use std::collections::HashMap;

use super::diag::{Code, Diagnostic, Severity};
use super::{CheckOptions, MethodIndex, Mode, Stats};
use crate::constprop::{solve_values, ConstValue, ValueFacts};
use crate::dataflow::{solve, Forward};
use crate::javafront::{
    build_cfg, classify_call, ApiRole, BinaryOp, CfgNode, ClassDecl, Expr, ExprKind, JType, MethodDecl, Receiver,
    Slot, StmtKind,
};
use crate::schema::{SchemaCatalog, SqlScalarType};
use crate::span::SourceSpan;
use crate::sqlfront::{signature, QuerySignature, SqlError};
use crate::sqltype::{parse_sql_annotation, ResultColumn, SqlQualifier};
use crate::typemap::{Conversion, ConversionTable, Direction, JavaAccessor};

/// Qualifiers of all statement and result-set slots at one program point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QualifierState {
    reached: bool,
    quals: Vec<SqlQualifier>,
}

static BOTTOM: SqlQualifier = SqlQualifier::Bottom;
static UNKNOWN: SqlQualifier = SqlQualifier::Unknown;

impl QualifierState {
    pub fn unreached() -> Self {
        QualifierState { reached: false, quals: Vec::new() }
    }

    pub fn get(&self, slot: Slot) -> &SqlQualifier {
        if !self.reached {
            return &BOTTOM;
        }
        self.quals.get(slot as usize).unwrap_or(&UNKNOWN)
    }

    fn set(&mut self, slot: Slot, q: SqlQualifier) {
        let i = slot as usize;
        if self.quals.len() <= i {
            self.quals.resize(i + 1, SqlQualifier::Unknown);
        }
        self.quals[i] = q;
    }

    pub fn join(&self, other: &QualifierState) -> QualifierState {
        match (self.reached, other.reached) {
            (false, _) => other.clone(),
            (_, false) => self.clone(),
            _ => {
                let n = self.quals.len().max(other.quals.len());
                let quals = (0..n as Slot).map(|s| self.get(s).lub(other.get(s))).collect();
                QualifierState { reached: true, quals }
            }
        }
    }
}

pub(super) struct Shared<'p> {
    pub catalog: &'p SchemaCatalog,
    pub table: &'p ConversionTable,
    pub options: &'p CheckOptions,
    pub index: &'p MethodIndex,
}

#[derive(Default)]
struct Sink {
    diags: Vec<Diagnostic>,
    stats: Stats,
}

struct MethodCtx<'p, 'm> {
    shared: &'p Shared<'p>,
    class: &'m str,
    method: &'m MethodDecl,
    values: ValueFacts,
    params: Vec<Option<SqlQualifier>>,
    ret: Option<SqlQualifier>,
    sql_cache: RefCell<HashMap<String, Result<QuerySignature, SqlError>>>,
}

impl<'a> Forward<'a> for MethodCtx<'_, '_> {
    type State = QualifierState;

    fn unreached(&self) -> QualifierState {
        QualifierState::unreached()
    }

    fn entry(&self) -> QualifierState {
        let m = self.method;
        let quals = (0..m.slots.len() as Slot)
            .map(|s| {
                if !m.is_param(s) {
                    SqlQualifier::Bottom
                } else if let Some(Some(q)) = self.params.get(s as usize) {
                    q.clone()
                } else {
                    SqlQualifier::Unknown
                }
            })
            .collect();
        QualifierState { reached: true, quals }
    }

    fn join(&self, a: &QualifierState, b: &QualifierState) -> QualifierState {
        a.join(b)
    }

    fn transfer(&self, node: CfgNode<'a>, state: &mut QualifierState) {
        Eval { cx: self, sink: None }.node(node, state);
    }
}

/// Checks one method. Annotation problems on its own signature are reported here.
pub(super) fn check_method(shared: &Shared<'_>, class: &ClassDecl, method: &MethodDecl) -> (Vec<Diagnostic>, Stats) {
    let mut sink = Sink::default();
    let (params, ret) = own_contract(method, &mut sink.diags);
    let cfg = build_cfg(method);
    let values = solve_values(method, &cfg);
    let cx = MethodCtx {
        shared,
        class: &class.name,
        method,
        values,
        params,
        ret,
        sql_cache: RefCell::new(HashMap::new()),
    };
    let solution = solve(&cfg, &cx);
    for (block, input) in cfg.blocks.iter().zip(&solution.block_in) {
        let mut state = input.clone();
        for node in &block.nodes {
            Eval { cx: &cx, sink: Some(&mut sink) }.node(*node, &mut state);
        }
    }
    sink.stats.methods_analyzed += 1;
    (sink.diags, sink.stats)
}

/// Parses the annotations of a method's parameters and return; invalid ones
/// are reported and dropped.
pub(super) fn own_contract(
    method: &MethodDecl,
    diags: &mut Vec<Diagnostic>,
) -> (Vec<Option<SqlQualifier>>, Option<SqlQualifier>) {
    let params = method
        .params
        .iter()
        .map(|p| {
            let a = p.annotation.as_ref()?;
            accept_annotation(&a.text, &a.span, &p.ty.ty, &format!("parameter `{}`", p.name), diags)
        })
        .collect();
    let ret = method.return_annotation.as_ref().and_then(|a| {
        accept_annotation(&a.text, &a.span, &method.return_type.ty, &format!("return of `{}`", method.name), diags)
    });
    (params, ret)
}

fn accept_annotation(
    text: &str,
    span: &SourceSpan,
    ty: &JType,
    what: &str,
    diags: &mut Vec<Diagnostic>,
) -> Option<SqlQualifier> {
    match parse_sql_annotation(text) {
        Err(e) => {
            diags.push(Diagnostic::new(
                Code::SubsetViolation,
                Severity::Warning,
                span.clone(),
                format!("ignoring malformed annotation on {what}: {e}"),
            ));
            None
        }
        Ok(_) if !ty.is_sql_carrier() => {
            diags.push(Diagnostic::new(
                Code::SubsetViolation,
                Severity::Warning,
                span.clone(),
                format!("ignoring annotation on {what}: type {ty} carries no SQL statement"),
            ));
            None
        }
        Ok(q) => Some(q),
    }
}

struct Eval<'e, 'p, 'm> {
    cx: &'e MethodCtx<'p, 'm>,
    sink: Option<&'e mut Sink>,
}

fn carrier_default(ty: &JType) -> SqlQualifier {
    if ty.is_sql_carrier() {
        SqlQualifier::Unknown
    } else {
        SqlQualifier::Bottom
    }
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

fn accessor_list(set: &std::collections::BTreeSet<JavaAccessor>, dir: Direction) -> String {
    if set.is_empty() {
        return "none".into();
    }
    let names: Vec<String> = set
        .iter()
        .map(|a| match dir {
            Direction::Get => a.getter(),
            Direction::Set => a.setter(),
        })
        .collect();
    names.join(", ")
}

impl Eval<'_, '_, '_> {
    fn mode(&self) -> Mode {
        self.cx.shared.options.mode
    }

    /// Degraded mode stays silent on values derived from a statement it
    /// already warned about.
    fn skipped(&self, q: &SqlQualifier) -> bool {
        self.mode() == Mode::Degraded && *q == SqlQualifier::Unsupported
    }

    fn emit(&mut self, d: Diagnostic) {
        if let Some(sink) = self.sink.as_deref_mut() {
            sink.diags.push(d);
        }
    }

    fn stat(&mut self, f: impl FnOnce(&mut Stats)) {
        if let Some(sink) = self.sink.as_deref_mut() {
            f(&mut sink.stats);
        }
    }

    /// Error in sound mode, `degraded` otherwise (or nothing).
    fn by_mode(&mut self, code: Code, degraded: Option<Severity>, span: &SourceSpan, msg: String) {
        let sev = match self.mode() {
            Mode::Sound => Some(Severity::Error),
            Mode::Degraded => degraded,
        };
        if let Some(sev) = sev {
            self.emit(Diagnostic::new(code, sev, span.clone(), msg));
        }
    }

    fn node(&mut self, node: CfgNode<'_>, state: &mut QualifierState) {
        if !state.reached {
            return;
        }
        match node {
            CfgNode::Cond(e) => {
                self.eval(e, state);
            }
            CfgNode::Stmt(s) => match &s.kind {
                StmtKind::Local { slot, init: Some(e) } => {
                    let q = self.eval(e, state);
                    if self.cx.method.slot_type(*slot).is_sql_carrier() {
                        state.set(*slot, q);
                    }
                }
                StmtKind::Expr(e) => {
                    self.eval(e, state);
                }
                StmtKind::Return(Some(e)) => {
                    let q = self.eval(e, state);
                    if let Some(declared) = &self.cx.ret {
                        if !q.is_subtype(declared) && !self.skipped(&q) {
                            let d = Diagnostic::new(
                                Code::AnnotationReturnMismatch,
                                Severity::Error,
                                s.span.clone(),
                                format!("returned value {q} is not a subtype of the declared {declared}"),
                            )
                            .with_details(declared.to_string(), q.to_string());
                            self.emit(d);
                        }
                    }
                }
                _ => {}
            },
        }
    }

    fn eval(&mut self, e: &Expr, state: &mut QualifierState) -> SqlQualifier {
        match &e.kind {
            ExprKind::Local(slot) => {
                if self.cx.method.slot_type(*slot).is_sql_carrier() {
                    state.get(*slot).clone()
                } else {
                    SqlQualifier::Bottom
                }
            }
            ExprKind::Lit(_) => SqlQualifier::Bottom,
            ExprKind::Assign { slot, value, .. } => {
                let q = self.eval(value, state);
                if self.cx.method.slot_type(*slot).is_sql_carrier() {
                    state.set(*slot, q.clone());
                }
                q
            }
            ExprKind::IncDec { .. } => SqlQualifier::Bottom,
            ExprKind::Unary { expr, .. } => {
                self.eval(expr, state);
                SqlQualifier::Bottom
            }
            ExprKind::Binary { op: BinaryOp::And | BinaryOp::Or, lhs, rhs } => {
                self.eval(lhs, state);
                let mut taken = state.clone();
                self.eval(rhs, &mut taken);
                *state = state.join(&taken);
                SqlQualifier::Bottom
            }
            ExprKind::Binary { lhs, rhs, .. } => {
                self.eval(lhs, state);
                self.eval(rhs, state);
                SqlQualifier::Bottom
            }
            ExprKind::Cast { ty, expr } => {
                let q = self.eval(expr, state);
                if ty.ty.is_sql_carrier() {
                    if expr.ty.is_sql_carrier() || expr.ty == JType::Null {
                        q
                    } else {
                        SqlQualifier::Unknown
                    }
                } else {
                    SqlQualifier::Bottom
                }
            }
            ExprKind::New { args, .. } => {
                for a in args {
                    self.eval(a, state);
                }
                carrier_default(&e.ty)
            }
            ExprKind::Call { receiver, method, args } => self.call(e, receiver, method, args, state),
        }
    }

    fn call(
        &mut self,
        e: &Expr,
        receiver: &Receiver,
        method: &str,
        args: &[Expr],
        state: &mut QualifierState,
    ) -> SqlQualifier {
        let recv_q = match receiver {
            Receiver::Expr(r) => self.eval(r, state),
            _ => SqlQualifier::Bottom,
        };
        let arg_qs: Vec<SqlQualifier> = args.iter().map(|a| self.eval(a, state)).collect();

        let owner = match receiver {
            Receiver::Implicit => Some(self.cx.class.to_string()),
            Receiver::Static(path) => Some(path.rsplit('.').next().unwrap_or(path).to_string()),
            Receiver::Expr(r) => match &r.ty {
                JType::Other(name) => Some(name.clone()),
                _ => None,
            },
        };
        if let Some(contract) = owner.and_then(|o| self.cx.shared.index.get(&o, method, args.len())) {
            for ((arg, q), declared) in args.iter().zip(&arg_qs).zip(&contract.params) {
                if let Some(declared) = declared {
                    if !q.is_subtype(declared) && !self.skipped(q) {
                        let d = Diagnostic::new(
                            Code::AnnotationArgMismatch,
                            Severity::Error,
                            arg.span.clone(),
                            format!("argument {q} to `{method}` is not a subtype of the declared {declared}"),
                        )
                        .with_details(declared.to_string(), q.to_string());
                        self.emit(d);
                    }
                }
            }
            return match &contract.ret {
                Some(q) => q.clone(),
                None => carrier_default(&contract.return_type),
            };
        }

        let recv_ty = match receiver {
            Receiver::Expr(r) => r.ty.clone(),
            _ => JType::Other(String::new()),
        };
        let recv_slot = match receiver {
            Receiver::Expr(r) => match r.kind {
                ExprKind::Local(s) if r.ty.is_sql_carrier() => Some(s),
                _ => None,
            },
            _ => None,
        };
        match classify_call(&recv_ty, method) {
            ApiRole::CreatesSqlStatement(i) => {
                let Some(arg) = args.get(i) else { return carrier_default(&e.ty) };
                let q = self.introduce(arg, &e.span);
                if recv_ty == JType::Statement {
                    if let Some(s) = recv_slot {
                        state.set(s, q.clone());
                    }
                    q.result_of()
                } else {
                    q
                }
            }
            ApiRole::ExecutesWithSql(i) => {
                if let Some(arg) = args.get(i) {
                    let q = self.introduce(arg, &e.span);
                    if let Some(s) = recv_slot {
                        state.set(s, q);
                    }
                }
                carrier_default(&e.ty)
            }
            ApiRole::RetrievesSqlResultSet => match recv_q {
                SqlQualifier::Unsupported => {
                    let msg = format!("`{method}` on a statement whose SQL could not be analyzed");
                    self.by_mode(Code::UncheckedAccess, None, &e.span, msg);
                    SqlQualifier::Unsupported
                }
                other => other.result_of(),
            },
            ApiRole::Setter(acc) => {
                self.verify(e, method, Direction::Set, acc, &recv_q, args);
                SqlQualifier::Bottom
            }
            ApiRole::Getter(acc) => {
                self.verify(e, method, Direction::Get, acc, &recv_q, args);
                SqlQualifier::Bottom
            }
            ApiRole::CursorNext | ApiRole::Other => carrier_default(&e.ty),
        }
    }

    fn analyze_sql(&self, text: &str) -> Result<QuerySignature, SqlError> {
        let mut cache = self.cx.sql_cache.borrow_mut();
        cache.entry(text.to_string()).or_insert_with(|| signature(text, self.cx.shared.catalog)).clone()
    }

    /// The qualifier of the statement built from the SQL string `arg`.
    fn introduce(&mut self, arg: &Expr, span: &SourceSpan) -> SqlQualifier {
        let strings: Vec<String> = match self.cx.values.expr(arg) {
            ConstValue::Bottom => return SqlQualifier::Bottom,
            v => match v.strings() {
                Some(s) => s.into_iter().map(str::to_string).collect(),
                None => {
                    let msg = "SQL string cannot be determined at compile time".to_string();
                    self.by_mode(Code::UnextractableSql, Some(Severity::Warning), span, msg);
                    return SqlQualifier::Unsupported;
                }
            },
        };
        let results: Vec<Result<QuerySignature, SqlError>> = strings.iter().map(|s| self.analyze_sql(s)).collect();
        let failure = results
            .iter()
            .filter_map(|r| r.as_ref().err())
            .min_by_key(|err| err.is_unsupported());
        match failure {
            Some(err) if err.is_unsupported() => {
                let msg = format!("SQL statement outside the supported subset: {err}");
                self.by_mode(Code::UnsupportedSql, Some(Severity::Warning), span, msg);
                SqlQualifier::Unsupported
            }
            Some(err) => {
                let d = Diagnostic::new(Code::MalformedSql, Severity::Error, span.clone(), format!("malformed SQL: {err}"));
                self.emit(d);
                SqlQualifier::Unsupported
            }
            None => results
                .iter()
                .filter_map(|r| r.as_ref().ok())
                .map(SqlQualifier::from_signature)
                .reduce(|a, b| a.lub(&b))
                .unwrap_or(SqlQualifier::Bottom),
        }
    }

    fn verify(
        &mut self,
        e: &Expr,
        method: &str,
        dir: Direction,
        acc: JavaAccessor,
        recv: &SqlQualifier,
        args: &[Expr],
    ) {
        let span = &e.span;
        let (inputs, outputs) = match recv {
            SqlQualifier::Bottom => return,
            SqlQualifier::Unsupported => {
                self.stat(|s| s.unchecked += 1);
                let msg = format!("`{method}` on a statement whose SQL could not be analyzed");
                self.by_mode(Code::UncheckedAccess, None, span, msg);
                return;
            }
            SqlQualifier::Unknown => {
                self.stat(|s| s.out_of_scope += 1);
                let what = if dir == Direction::Get { "result set" } else { "statement" };
                let msg = format!("`{method}` on a {what} whose SQL is not known in this method");
                self.by_mode(Code::NonlocalAccess, None, span, msg.clone());
                if self.mode() == Mode::Degraded {
                    self.emit(Diagnostic::new(Code::OutOfScope, Severity::Info, span.clone(), msg));
                }
                return;
            }
            SqlQualifier::Sql { inputs, outputs } => (inputs, outputs),
        };
        match dir {
            Direction::Get => self.stat(|s| s.getters_checked += 1),
            Direction::Set => self.stat(|s| s.setters_checked += 1),
        }
        let Some(arg) = args.first() else { return };
        let value = self.cx.values.expr(arg).clone();
        if value == ConstValue::Bottom {
            return;
        }
        let indices = value.ints().filter(|_| arg.ty.is_integral());
        let names = if dir == Direction::Get && arg.ty == JType::String { value.strings() } else { None };
        if indices.is_none() && names.is_none() {
            let what = if dir == Direction::Get { "column" } else { "parameter index" };
            let msg = format!("{what} argument of `{method}` is not a compile-time constant");
            self.by_mode(Code::UnextractableIndex, Some(Severity::Warning), span, msg);
            return;
        }

        // (label, type) of every addressed position that exists.
        let mut targets: Vec<(String, SqlScalarType)> = Vec::new();
        match dir {
            Direction::Set => {
                let indices = indices.unwrap_or_default();
                let bad: Vec<i64> = indices.iter().copied().filter(|&i| i < 1 || i as usize > inputs.len()).collect();
                if let Some(&i) = bad.first() {
                    let msg = format!(
                        "parameter index {i} out of bounds (statement has {})",
                        plural(inputs.len(), "parameter")
                    );
                    let d = Diagnostic::new(Code::ParamIndexOob, Severity::Error, span.clone(), msg)
                        .with_details(format!("1..{}", inputs.len()), i.to_string());
                    self.emit(d);
                }
                for i in indices.into_iter().filter(|i| !bad.contains(i)) {
                    targets.push((format!("parameter {i}"), inputs[i as usize - 1]));
                }
            }
            Direction::Get => {
                if let Some(indices) = indices {
                    let bad: Vec<i64> =
                        indices.iter().copied().filter(|&i| i < 1 || i as usize > outputs.len()).collect();
                    if let Some(&i) = bad.first() {
                        let msg = format!(
                            "column index {i} out of bounds (result has {})",
                            plural(outputs.len(), "column")
                        );
                        let d = Diagnostic::new(Code::ColumnIndexOob, Severity::Error, span.clone(), msg)
                            .with_details(format!("1..{}", outputs.len()), i.to_string());
                        self.emit(d);
                    }
                    for i in indices.into_iter().filter(|i| !bad.contains(i)) {
                        let col = &outputs[i as usize - 1];
                        targets.push((column_label(col, i), col.ty));
                    }
                } else {
                    let names = names.unwrap_or_default();
                    let mut missing = None;
                    for n in names {
                        match outputs.iter().find(|c| c.has_name(n)) {
                            Some(col) => targets.push((format!("column {}", col.name.as_deref().unwrap_or(n)), col.ty)),
                            None => missing = missing.or(Some(n)),
                        }
                    }
                    if let Some(n) = missing {
                        let known: Vec<&str> = outputs.iter().filter_map(|c| c.name.as_deref()).collect();
                        let msg = format!("column `{n}` is not in the result");
                        let d = Diagnostic::new(Code::ColumnNameUnknown, Severity::Error, span.clone(), msg)
                            .with_details(known.join(", "), n.to_string());
                        self.emit(d);
                    }
                }
            }
        }

        let table = self.cx.shared.table;
        let mut worst: Option<(Conversion, String, SqlScalarType)> = None;
        for (label, ty) in targets {
            let c = table.classify(dir, ty, acc);
            let rank = |c: Conversion| match c {
                Conversion::Recommended => 0,
                Conversion::SupportedOnly => 1,
                Conversion::Disallowed => 2,
            };
            if c != Conversion::Recommended && worst.as_ref().is_none_or(|(w, _, _)| rank(c) > rank(*w)) {
                worst = Some((c, label, ty));
            }
        }
        if let Some((c, label, ty)) = worst {
            let sev = if c == Conversion::SupportedOnly && self.cx.shared.options.supported_as_warning {
                Severity::Warning
            } else {
                Severity::Error
            };
            let recommended = accessor_list(table.recommended(dir, ty.kind), dir);
            let code = if dir == Direction::Get { Code::GetterTypeMismatch } else { Code::SetterTypeMismatch };
            let msg = format!("{method} is not recommended for {label} of type {} (recommended: {recommended})", ty.kind);
            let d = Diagnostic::new(code, sev, span.clone(), msg).with_details(recommended, method.to_string());
            self.emit(d);
        }
    }
}

fn column_label(col: &ResultColumn, index: i64) -> String {
    match &col.name {
        Some(n) => format!("column {n}"),
        None => format!("column {index}"),
    }
}
