use std::collections::{HashMap, HashSet};
use std::rc::Rc;
use std::sync::Arc;

use super::minidb::{MiniDb, Value};
use super::naive_sql::{prepare, NaiveError, Prepared, Verb};
use super::{Category, Execution, ModeledException};
use crate::javafront::{
    AssignOp, BinaryOp, Block, ClassDecl, CompilationUnit, Expr, ExprKind, JType, Literal, MethodBody, MethodDecl,
    Receiver, Stmt, StmtKind, UnaryOp,
};
use crate::span::SourceSpan;
use crate::typemap::{Conversion, ConversionTable, Direction, JavaAccessor};

const MAX_DEPTH: usize = 8;
const MAX_FLOWS: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
enum Val {
    Unknown,
    Null,
    Int(i64),
    Str(String),
    Bool(bool),
    Conn,
    Stmt(usize),
    Rs(usize),
}

#[derive(Debug, Clone)]
struct StmtObj {
    prepared: Option<Rc<Prepared>>,
    result: Option<usize>,
}

#[derive(Debug, Clone)]
struct RsObj {
    prepared: Rc<Prepared>,
    rows: Arc<Vec<Vec<Value>>>,
    cursor: usize,
}

#[derive(Debug, Clone)]
struct State {
    locals: Vec<Val>,
    stmts: Vec<StmtObj>,
    results: Vec<RsObj>,
}

#[derive(Debug, Clone)]
enum Stop {
    Raised(ModeledException),
    Limit,
    Unmodeled,
}

type Res<T> = Result<T, Stop>;

enum Flow {
    Normal(State),
    Return(State, Val),
    Stop(Stop),
}

struct Cx<'a> {
    class: &'a str,
    method: &'a MethodDecl,
    depth: usize,
}

pub(super) struct Interp<'a> {
    methods: HashMap<(&'a str, &'a str, usize), &'a MethodDecl>,
    classes: HashSet<&'a str>,
    db: &'a MiniDb,
    table: &'a ConversionTable,
    budget: usize,
}

impl<'a> Interp<'a> {
    pub(super) fn new(units: &'a [CompilationUnit], db: &'a MiniDb, table: &'a ConversionTable, budget: usize) -> Self {
        let mut methods = HashMap::new();
        let mut classes = HashSet::new();
        for c in units.iter().flat_map(|u| &u.classes) {
            classes.insert(c.name.as_str());
            for m in &c.methods {
                if matches!(m.body, MethodBody::Block(_)) {
                    methods.entry((c.name.as_str(), m.name.as_str(), m.params.len())).or_insert(m);
                }
            }
        }
        Interp { methods, classes, db, table, budget }
    }

    /// Methods no other method calls.
    pub(super) fn entry_points(&self, units: &'a [CompilationUnit]) -> Vec<(&'a ClassDecl, &'a MethodDecl)> {
        let mut called = HashSet::new();
        for c in units.iter().flat_map(|u| &u.classes) {
            for m in &c.methods {
                let MethodBody::Block(body) = &m.body else { continue };
                let mut exprs = Vec::new();
                collect_exprs(body, &mut exprs);
                for e in exprs {
                    e.walk(&mut |x| {
                        if let ExprKind::Call { receiver, method, args } = &x.kind {
                            if let Some(target) = self.target(c.name.as_str(), receiver, method, args.len()) {
                                if !std::ptr::eq(target, m) {
                                    called.insert(target as *const MethodDecl);
                                }
                            }
                        }
                    });
                }
            }
        }
        let mut out = Vec::new();
        for c in units.iter().flat_map(|u| &u.classes) {
            for m in &c.methods {
                if matches!(m.body, MethodBody::Block(_)) && !called.contains(&(m as *const MethodDecl)) {
                    out.push((c, m));
                }
            }
        }
        out
    }

    fn target(&self, class: &str, receiver: &Receiver, method: &str, arity: usize) -> Option<&'a MethodDecl> {
        let owner = match receiver {
            Receiver::Implicit => class,
            Receiver::Static(path) => path.rsplit('.').next().unwrap_or(path),
            Receiver::Expr(e) => match &e.ty {
                JType::Other(name) if self.classes.contains(name.as_str()) => name.as_str(),
                _ => return None,
            },
        };
        self.methods.get(&(owner, method, arity)).copied()
    }

    pub(super) fn run_entry(&self, class: &'a ClassDecl, m: &'a MethodDecl, out: &mut Execution) {
        let args = m
            .params
            .iter()
            .map(|p| if p.ty.ty == JType::Connection { Val::Conn } else { Val::Unknown })
            .collect();
        let st = State { locals: Vec::new(), stmts: Vec::new(), results: Vec::new() };
        for (_, r) in self.invoke(class.name.as_str(), m, args, st, 0) {
            out.paths += 1;
            match r {
                Ok(_) => {}
                Err(Stop::Raised(e)) => out.exceptions.push(e),
                Err(Stop::Limit) => out.limit_hits += 1,
                Err(Stop::Unmodeled) => out.unmodeled += 1,
            }
        }
    }

    fn invoke(&self, class: &str, m: &'a MethodDecl, args: Vec<Val>, st: State, depth: usize) -> Vec<(State, Res<Val>)> {
        let MethodBody::Block(body) = &m.body else {
            return vec![(st, Ok(Val::Unknown))];
        };
        if depth >= MAX_DEPTH {
            return vec![(st, Err(Stop::Limit))];
        }
        let cx = Cx { class, method: m, depth };
        let mut locals = vec![Val::Unknown; m.slots.len()];
        for (i, a) in args.into_iter().enumerate() {
            locals[i] = a;
        }
        let caller = st.locals;
        let inner = State { locals, stmts: st.stmts, results: st.results };
        self.exec_block(&cx, body, inner)
            .into_iter()
            .map(|f| {
                let restore = |s: State| State { locals: caller.clone(), stmts: s.stmts, results: s.results };
                match f {
                    Flow::Normal(s) => (restore(s), Ok(Val::Unknown)),
                    Flow::Return(s, v) => (restore(s), Ok(v)),
                    Flow::Stop(e) => {
                        let blank = State { locals: caller.clone(), stmts: Vec::new(), results: Vec::new() };
                        (blank, Err(e))
                    }
                }
            })
            .collect()
    }

    fn exec_block(&self, cx: &Cx, b: &Block, st: State) -> Vec<Flow> {
        let mut flows = vec![Flow::Normal(st)];
        for s in &b.stmts {
            let mut next = Vec::new();
            for f in flows {
                match f {
                    Flow::Normal(st) => next.extend(self.exec(cx, s, st)),
                    other => next.push(other),
                }
            }
            flows = cap(next);
        }
        flows
    }

    fn exec(&self, cx: &Cx, s: &Stmt, st: State) -> Vec<Flow> {
        match &s.kind {
            StmtKind::Empty => vec![Flow::Normal(st)],
            StmtKind::Block(b) => self.exec_block(cx, b, st),
            StmtKind::Local { slot, init } => match init {
                None => {
                    let mut st = st;
                    st.locals[*slot as usize] = Val::Unknown;
                    vec![Flow::Normal(st)]
                }
                Some(e) => self
                    .eval(cx, e, st)
                    .into_iter()
                    .map(|(mut st, r)| match r {
                        Ok(v) => {
                            st.locals[*slot as usize] = coerce(cx.method.slot_type(*slot), v);
                            Flow::Normal(st)
                        }
                        Err(e) => Flow::Stop(e),
                    })
                    .collect(),
            },
            StmtKind::Expr(e) => self
                .eval(cx, e, st)
                .into_iter()
                .map(|(st, r)| match r {
                    Ok(_) => Flow::Normal(st),
                    Err(e) => Flow::Stop(e),
                })
                .collect(),
            StmtKind::Return(e) => match e {
                None => vec![Flow::Return(st, Val::Unknown)],
                Some(e) => self
                    .eval(cx, e, st)
                    .into_iter()
                    .map(|(st, r)| match r {
                        Ok(v) => Flow::Return(st, v),
                        Err(e) => Flow::Stop(e),
                    })
                    .collect(),
            },
            StmtKind::If { cond, then, otherwise } => {
                let mut out = Vec::new();
                for (st, r) in self.eval(cx, cond, st) {
                    let (yes, no) = match r {
                        Ok(v) => outcomes(&v),
                        Err(e) => {
                            out.push(Flow::Stop(e));
                            continue;
                        }
                    };
                    if yes {
                        out.extend(self.exec(cx, then, st.clone()));
                    }
                    if no {
                        match otherwise {
                            Some(o) => out.extend(self.exec(cx, o, st)),
                            None => out.push(Flow::Normal(st)),
                        }
                    }
                }
                cap(out)
            }
            StmtKind::While { cond, body } => {
                let mut out = Vec::new();
                let mut pending = vec![st];
                for k in 0..=self.budget {
                    let mut next = Vec::new();
                    for st in pending {
                        for (st, r) in self.eval(cx, cond, st) {
                            let (yes, no) = match r {
                                Ok(v) => outcomes(&v),
                                Err(e) => {
                                    out.push(Flow::Stop(e));
                                    continue;
                                }
                            };
                            if no {
                                out.push(Flow::Normal(st.clone()));
                            }
                            if !yes {
                                continue;
                            }
                            if k == self.budget {
                                out.push(Flow::Stop(Stop::Limit));
                            } else {
                                for f in self.exec(cx, body, st.clone()) {
                                    match f {
                                        Flow::Normal(s) => next.push(s),
                                        other => out.push(other),
                                    }
                                }
                            }
                        }
                    }
                    next.truncate(MAX_FLOWS);
                    pending = next;
                }
                cap(out)
            }
        }
    }

    fn eval_all(&self, cx: &Cx, es: &[&Expr], st: State) -> Vec<(State, Res<Vec<Val>>)> {
        let mut acc = vec![(st, Ok(Vec::new()))];
        for e in es {
            let mut next = Vec::new();
            for (st, r) in acc {
                match r {
                    Err(x) => next.push((st, Err(x))),
                    Ok(vals) => {
                        for (st, r) in self.eval(cx, e, st) {
                            next.push((st, r.map(|v| {
                                let mut vs = vals.clone();
                                vs.push(v);
                                vs
                            })));
                        }
                    }
                }
            }
            acc = next;
        }
        acc
    }

    fn eval(&self, cx: &Cx, e: &Expr, st: State) -> Vec<(State, Res<Val>)> {
        match &e.kind {
            ExprKind::Lit(l) => vec![(st, Ok(literal(l)))],
            ExprKind::Local(slot) => {
                let v = st.locals[*slot as usize].clone();
                vec![(st, Ok(v))]
            }
            ExprKind::IncDec { slot, delta, prefix } => {
                let mut st = st;
                let i = *slot as usize;
                let old = st.locals[i].clone();
                let new = coerce(cx.method.slot_type(*slot), arith(BinaryOp::Add, &old, &Val::Int(*delta)));
                st.locals[i] = new.clone();
                vec![(st, Ok(if *prefix { new } else { old }))]
            }
            ExprKind::Assign { slot, op, value } => self
                .eval(cx, value, st)
                .into_iter()
                .map(|(mut st, r)| {
                    let r = r.map(|v| {
                        let i = *slot as usize;
                        let v = match op {
                            AssignOp::Set => v,
                            AssignOp::Add => arith(BinaryOp::Add, &st.locals[i], &v),
                            AssignOp::Sub => arith(BinaryOp::Sub, &st.locals[i], &v),
                            AssignOp::Other => Val::Unknown,
                        };
                        let v = coerce(cx.method.slot_type(*slot), v);
                        st.locals[i] = v.clone();
                        v
                    });
                    (st, r)
                })
                .collect(),
            ExprKind::Unary { op, expr } => self
                .eval(cx, expr, st)
                .into_iter()
                .map(|(st, r)| {
                    let r = r.map(|v| match (op, v) {
                        (UnaryOp::Neg, Val::Int(n)) => Val::Int(n.wrapping_neg()),
                        (UnaryOp::Plus, v @ Val::Int(_)) => v,
                        (UnaryOp::Not, Val::Bool(b)) => Val::Bool(!b),
                        (UnaryOp::BitNot, Val::Int(n)) => Val::Int(!n),
                        _ => Val::Unknown,
                    });
                    (st, r)
                })
                .collect(),
            ExprKind::Binary { op: op @ (BinaryOp::And | BinaryOp::Or), lhs, rhs } => {
                let mut out = Vec::new();
                for (st, r) in self.eval(cx, lhs, st) {
                    match r {
                        Err(x) => out.push((st, Err(x))),
                        Ok(Val::Bool(b)) if b == (*op == BinaryOp::Or) => out.push((st, Ok(Val::Bool(b)))),
                        Ok(l) => {
                            for (st, r) in self.eval(cx, rhs, st) {
                                let r = r.map(|rv| match (&l, rv) {
                                    (Val::Bool(_), Val::Bool(b)) => Val::Bool(b),
                                    _ => Val::Unknown,
                                });
                                out.push((st, r));
                            }
                        }
                    }
                }
                out
            }
            ExprKind::Binary { op, lhs, rhs } => {
                let integral = e.ty.is_integral();
                self.eval_all(cx, &[lhs, rhs], st)
                    .into_iter()
                    .map(|(st, r)| {
                        let r = r.map(|vs| {
                            let v = binary(*op, &vs[0], &vs[1]);
                            if integral {
                                coerce(&e.ty, v)
                            } else {
                                v
                            }
                        });
                        (st, r)
                    })
                    .collect()
            }
            ExprKind::Cast { ty, expr } => self
                .eval(cx, expr, st)
                .into_iter()
                .map(|(st, r)| (st, r.map(|v| coerce(&ty.ty, v))))
                .collect(),
            ExprKind::New { args, .. } => {
                let refs: Vec<&Expr> = args.iter().collect();
                self.eval_all(cx, &refs, st).into_iter().map(|(st, r)| (st, r.map(|_| Val::Unknown))).collect()
            }
            ExprKind::Call { receiver, method, args } => self.call(cx, e, receiver, method, args, st),
        }
    }

    fn call(&self, cx: &Cx, e: &Expr, receiver: &Receiver, method: &str, args: &[Expr], st: State) -> Vec<(State, Res<Val>)> {
        let mut refs: Vec<&Expr> = Vec::new();
        if let Receiver::Expr(r) = receiver {
            refs.push(r);
        }
        refs.extend(args.iter());
        let target = self.target(cx.class, receiver, method, args.len());
        let mut out = Vec::new();
        for (st, r) in self.eval_all(cx, &refs, st) {
            let mut vals = match r {
                Ok(v) => v,
                Err(x) => {
                    out.push((st, Err(x)));
                    continue;
                }
            };
            let recv = match receiver {
                Receiver::Expr(_) => Some(vals.remove(0)),
                _ => None,
            };
            if let Some(m) = target {
                if recv == Some(Val::Null) {
                    out.push((st, Err(Stop::Unmodeled)));
                    continue;
                }
                let owner = match receiver {
                    Receiver::Implicit => cx.class,
                    Receiver::Static(p) => p.rsplit('.').next().unwrap_or(p),
                    Receiver::Expr(x) => match &x.ty {
                        JType::Other(n) => n.as_str(),
                        _ => cx.class,
                    },
                };
                out.extend(self.invoke(owner, m, vals, st, cx.depth + 1));
                continue;
            }
            let mut st = st;
            let r = match (receiver, recv) {
                (Receiver::Static(path), _) => Ok(static_call(path, method, &vals)),
                (_, None) => Ok(Val::Unknown),
                (_, Some(v)) => self.api(&mut st, e.span.clone(), v, method, &vals),
            };
            out.push((st, r));
        }
        out
    }

    fn api(&self, st: &mut State, span: SourceSpan, recv: Val, method: &str, args: &[Val]) -> Res<Val> {
        match recv {
            Val::Null => Err(Stop::Unmodeled),
            Val::Conn => match (method, args) {
                ("prepareStatement", [sql, ..]) => {
                    let p = self.prepare(sql, &span)?;
                    st.stmts.push(StmtObj { prepared: Some(p), result: None });
                    Ok(Val::Stmt(st.stmts.len() - 1))
                }
                ("createStatement", []) => {
                    st.stmts.push(StmtObj { prepared: None, result: None });
                    Ok(Val::Stmt(st.stmts.len() - 1))
                }
                _ => Ok(Val::Unknown),
            },
            Val::Stmt(id) => {
                match (method, args) {
                    ("executeQuery" | "execute" | "executeUpdate" | "executeLargeUpdate", [sql]) => {
                        let p = self.prepare(sql, &span)?;
                        st.stmts[id].prepared = Some(p);
                        if !st.stmts[id].prepared.as_ref().unwrap().inputs.is_empty() {
                            return Err(Stop::Unmodeled);
                        }
                    }
                    ("executeQuery" | "execute" | "executeUpdate" | "executeLargeUpdate", []) => {}
                    ("getResultSet", []) => {
                        return Ok(st.stmts[id].result.map_or(Val::Null, Val::Rs));
                    }
                    (m, [index, value]) if m.starts_with("set") => {
                        let Some(acc) = JavaAccessor::from_method_suffix(&m[3..]) else { return Ok(Val::Unknown) };
                        let _ = value;
                        return self.set(st, id, span, m, acc, index).map(|_| Val::Unknown);
                    }
                    _ => return Ok(Val::Unknown),
                }
                let Some(p) = st.stmts[id].prepared.clone() else { return Err(Stop::Unmodeled) };
                if p.verb != Verb::Select {
                    st.stmts[id].result = None;
                    return Ok(match method {
                        "execute" => Val::Bool(false),
                        "executeQuery" => return Err(Stop::Unmodeled),
                        _ => Val::Int(0),
                    });
                }
                st.results.push(RsObj { rows: self.db.rows(&p.table), prepared: p, cursor: 0 });
                let rs = st.results.len() - 1;
                st.stmts[id].result = Some(rs);
                Ok(match method {
                    "executeQuery" => Val::Rs(rs),
                    "execute" => Val::Bool(true),
                    _ => return Err(Stop::Unmodeled),
                })
            }
            Val::Rs(id) => match (method, args) {
                ("next", []) => {
                    let rs = &mut st.results[id];
                    if rs.cursor < rs.rows.len() {
                        rs.cursor += 1;
                        Ok(Val::Bool(true))
                    } else {
                        rs.cursor = rs.rows.len() + 1;
                        Ok(Val::Bool(false))
                    }
                }
                (m, [column]) if m.starts_with("get") => match JavaAccessor::from_method_suffix(&m[3..]) {
                    Some(acc) => self.get(st, id, span, m, acc, column),
                    None => Ok(Val::Unknown),
                },
                _ => Ok(Val::Unknown),
            },
            _ => Ok(Val::Unknown),
        }
    }

    fn prepare(&self, sql: &Val, span: &SourceSpan) -> Res<Rc<Prepared>> {
        let Val::Str(text) = sql else { return Err(Stop::Unmodeled) };
        match prepare(text, &self.db.catalog) {
            Ok(p) => Ok(Rc::new(p)),
            Err(NaiveError::Unmodeled(_)) => Err(Stop::Unmodeled),
            Err(NaiveError::Malformed(m)) => Err(raise(Category::MalformedSql, span, m)),
        }
    }

    fn set(&self, st: &State, id: usize, span: SourceSpan, m: &str, acc: JavaAccessor, index: &Val) -> Res<()> {
        let Some(p) = &st.stmts[id].prepared else { return Err(Stop::Unmodeled) };
        let Val::Int(i) = *index else { return Err(Stop::Unmodeled) };
        if i < 1 || i as usize > p.inputs.len() {
            return Err(raise(Category::ParamIndex, &span, format!("{m}: parameter index {i} of {}", p.inputs.len())));
        }
        let kind = p.inputs[i as usize - 1];
        if self.table.classify(Direction::Set, kind.into(), acc) != Conversion::Recommended {
            return Err(raise(Category::Conversion, &span, format!("{m} on {kind} parameter {i}")));
        }
        Ok(())
    }

    fn get(&self, st: &State, id: usize, span: SourceSpan, m: &str, acc: JavaAccessor, column: &Val) -> Res<Val> {
        let rs = &st.results[id];
        let outputs = &rs.prepared.outputs;
        let pos = match column {
            Val::Int(i) if *i >= 1 && (*i as usize) <= outputs.len() => *i as usize - 1,
            Val::Int(i) => {
                return Err(raise(Category::Column, &span, format!("{m}: column index {i} of {}", outputs.len())))
            }
            Val::Str(name) => match outputs.iter().position(|(n, _)| n.eq_ignore_ascii_case(name)) {
                Some(p) => p,
                None => return Err(raise(Category::Column, &span, format!("{m}: no column `{name}`"))),
            },
            _ => return Err(Stop::Unmodeled),
        };
        let kind = outputs[pos].1;
        if self.table.classify(Direction::Get, kind.into(), acc) != Conversion::Recommended {
            return Err(raise(Category::Conversion, &span, format!("{m} on {kind} column {}", outputs[pos].0)));
        }
        if rs.cursor == 0 || rs.cursor > rs.rows.len() {
            return Ok(Val::Unknown);
        }
        let value = &rs.rows[rs.cursor - 1][rs.prepared.sources[pos]];
        Ok(match (acc, value) {
            (JavaAccessor::String, Value::Null) => Val::Null,
            (JavaAccessor::String, Value::Text(s)) => Val::Str(s.clone()),
            (JavaAccessor::String, Value::Int(n)) => Val::Str(n.to_string()),
            (JavaAccessor::Int | JavaAccessor::Long | JavaAccessor::Short | JavaAccessor::Byte, Value::Int(n)) => {
                Val::Int(*n)
            }
            (JavaAccessor::Int | JavaAccessor::Long | JavaAccessor::Short | JavaAccessor::Byte, Value::Null) => {
                Val::Int(0)
            }
            (JavaAccessor::Boolean, Value::Bool(b)) => Val::Bool(*b),
            _ => Val::Unknown,
        })
    }
}

/// Which branches a condition value allows; unknown values allow both.
fn outcomes(v: &Val) -> (bool, bool) {
    match v {
        Val::Bool(b) => (*b, !*b),
        _ => (true, true),
    }
}

fn raise(category: Category, span: &SourceSpan, detail: impl Into<String>) -> Stop {
    Stop::Raised(ModeledException { category, span: span.clone(), detail: detail.into() })
}

fn cap(mut flows: Vec<Flow>) -> Vec<Flow> {
    if flows.len() > MAX_FLOWS {
        flows.truncate(MAX_FLOWS);
        flows.push(Flow::Stop(Stop::Limit));
    }
    flows
}

fn collect_exprs<'e>(b: &'e Block, out: &mut Vec<&'e Expr>) {
    fn stmt<'e>(s: &'e Stmt, out: &mut Vec<&'e Expr>) {
        out.extend(s.own_exprs());
        match &s.kind {
            StmtKind::If { then, otherwise, .. } => {
                stmt(then, out);
                if let Some(o) = otherwise {
                    stmt(o, out);
                }
            }
            StmtKind::While { body, .. } => stmt(body, out),
            StmtKind::Block(b) => collect_exprs(b, out),
            _ => {}
        }
    }
    for s in &b.stmts {
        stmt(s, out);
    }
}

fn literal(l: &Literal) -> Val {
    match l {
        Literal::Int(n) | Literal::Long(n) => Val::Int(*n),
        Literal::Str(s) => Val::Str(s.clone()),
        Literal::Char(c) => Val::Str(c.to_string()),
        Literal::Bool(b) => Val::Bool(*b),
        Literal::Null => Val::Null,
        Literal::Float(_) => Val::Unknown,
    }
}

fn text(v: &Val) -> Option<String> {
    match v {
        Val::Int(n) => Some(n.to_string()),
        Val::Str(s) => Some(s.clone()),
        Val::Bool(b) => Some(b.to_string()),
        Val::Null => Some("null".into()),
        _ => None,
    }
}

fn arith(op: BinaryOp, a: &Val, b: &Val) -> Val {
    match (op, a, b) {
        (BinaryOp::Add, Val::Str(_), _) | (BinaryOp::Add, _, Val::Str(_)) => match (text(a), text(b)) {
            (Some(x), Some(y)) => Val::Str(x + &y),
            _ => Val::Unknown,
        },
        (BinaryOp::Add, Val::Int(x), Val::Int(y)) => Val::Int(x.wrapping_add(*y)),
        (BinaryOp::Sub, Val::Int(x), Val::Int(y)) => Val::Int(x.wrapping_sub(*y)),
        _ => Val::Unknown,
    }
}

fn binary(op: BinaryOp, a: &Val, b: &Val) -> Val {
    use BinaryOp::*;
    match (op, a, b) {
        (Add | Sub, _, _) => arith(op, a, b),
        (Mul, Val::Int(x), Val::Int(y)) => Val::Int(x.wrapping_mul(*y)),
        (Lt, Val::Int(x), Val::Int(y)) => Val::Bool(x < y),
        (Le, Val::Int(x), Val::Int(y)) => Val::Bool(x <= y),
        (Gt, Val::Int(x), Val::Int(y)) => Val::Bool(x > y),
        (Ge, Val::Int(x), Val::Int(y)) => Val::Bool(x >= y),
        (Eq, Val::Int(x), Val::Int(y)) => Val::Bool(x == y),
        (Ne, Val::Int(x), Val::Int(y)) => Val::Bool(x != y),
        (Eq, Val::Bool(x), Val::Bool(y)) => Val::Bool(x == y),
        (Ne, Val::Bool(x), Val::Bool(y)) => Val::Bool(x != y),
        _ => Val::Unknown,
    }
}

/// Narrows integers to the width of the destination type.
fn coerce(ty: &JType, v: Val) -> Val {
    match (ty, v) {
        (JType::Int, Val::Int(n)) => Val::Int(n as i32 as i64),
        (JType::Int | JType::Long, Val::Str(_) | Val::Bool(_)) => Val::Unknown,
        (_, v) => v,
    }
}

fn static_call(path: &str, method: &str, args: &[Val]) -> Val {
    let class = path.rsplit('.').next().unwrap_or(path);
    match (class, method, args) {
        ("String", "valueOf", [v]) => text(v).map_or(Val::Unknown, Val::Str),
        ("Integer", "toString", [Val::Int(n)]) | ("Long", "toString", [Val::Int(n)]) => Val::Str(n.to_string()),
        ("Integer", "parseInt", [Val::Str(s)]) => s.trim().parse::<i32>().map_or(Val::Unknown, |n| Val::Int(n as i64)),
        _ => Val::Unknown,
    }
}
