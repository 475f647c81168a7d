//! Possible constant values of `String`, `int` and `long` locals.

use std::collections::BTreeSet;
use std::fmt;

use crate::dataflow::{solve, Forward, Solution};
use crate::javafront::{
    AssignOp, BinaryOp, Cfg, CfgNode, Expr, ExprKind, JType, Literal, MethodDecl, Receiver, Slot, StmtKind, UnaryOp,
};

/// Maximum number of distinct values tracked per variable.
pub const CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Const {
    Int(i64),
    Str(String),
}

impl fmt::Display for Const {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Const::Int(n) => write!(f, "{n}"),
            Const::Str(s) => write!(f, "{s:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConstValue {
    Bottom,
    /// Between 1 and [`CAP`] values.
    Known(BTreeSet<Const>),
    Top,
}

impl ConstValue {
    pub fn single(c: Const) -> Self {
        ConstValue::Known(BTreeSet::from([c]))
    }

    pub fn from_set(set: BTreeSet<Const>) -> Self {
        match set.len() {
            0 => ConstValue::Bottom,
            n if n > CAP => ConstValue::Top,
            _ => ConstValue::Known(set),
        }
    }

    pub fn join(&self, other: &ConstValue) -> ConstValue {
        match (self, other) {
            (ConstValue::Bottom, x) | (x, ConstValue::Bottom) => x.clone(),
            (ConstValue::Top, _) | (_, ConstValue::Top) => ConstValue::Top,
            (ConstValue::Known(a), ConstValue::Known(b)) => ConstValue::from_set(a.union(b).cloned().collect()),
        }
    }

    pub fn leq(&self, other: &ConstValue) -> bool {
        match (self, other) {
            (ConstValue::Bottom, _) | (_, ConstValue::Top) => true,
            (ConstValue::Known(a), ConstValue::Known(b)) => a.is_subset(b),
            _ => false,
        }
    }

    pub fn contains(&self, c: &Const) -> bool {
        match self {
            ConstValue::Bottom => false,
            ConstValue::Known(s) => s.contains(c),
            ConstValue::Top => true,
        }
    }

    /// The value set, when every member is an integer.
    pub fn ints(&self) -> Option<Vec<i64>> {
        match self {
            ConstValue::Known(s) => s
                .iter()
                .map(|c| match c {
                    Const::Int(n) => Some(*n),
                    Const::Str(_) => None,
                })
                .collect(),
            _ => None,
        }
    }

    /// The value set, when every member is a string.
    pub fn strings(&self) -> Option<Vec<&str>> {
        match self {
            ConstValue::Known(s) => s
                .iter()
                .map(|c| match c {
                    Const::Str(x) => Some(x.as_str()),
                    Const::Int(_) => None,
                })
                .collect(),
            _ => None,
        }
    }

    fn map2(&self, other: &ConstValue, f: impl Fn(&Const, &Const) -> Option<Const>) -> ConstValue {
        match (self, other) {
            (ConstValue::Bottom, _) | (_, ConstValue::Bottom) => ConstValue::Bottom,
            (ConstValue::Known(a), ConstValue::Known(b)) if a.len() * b.len() <= CAP * CAP => {
                let mut out = BTreeSet::new();
                for x in a {
                    for y in b {
                        match f(x, y) {
                            Some(c) => out.insert(c),
                            None => return ConstValue::Top,
                        };
                    }
                }
                ConstValue::from_set(out)
            }
            _ => ConstValue::Top,
        }
    }

    fn map1(&self, f: impl Fn(&Const) -> Option<Const>) -> ConstValue {
        self.map2(&ConstValue::single(Const::Int(0)), |x, _| f(x))
    }
}

impl fmt::Display for ConstValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstValue::Bottom => f.write_str("⊥"),
            ConstValue::Top => f.write_str("⊤"),
            ConstValue::Known(s) => {
                let items: Vec<String> = s.iter().map(|c| c.to_string()).collect();
                write!(f, "{{{}}}", items.join(", "))
            }
        }
    }
}

static BOTTOM: ConstValue = ConstValue::Bottom;
static TOP: ConstValue = ConstValue::Top;

fn tracked(ty: &JType) -> bool {
    matches!(ty, JType::Int | JType::Long | JType::String)
}

/// Values of every slot at one program point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueState {
    reached: bool,
    values: Vec<ConstValue>,
}

impl ValueState {
    pub fn unreached() -> Self {
        ValueState { reached: false, values: Vec::new() }
    }

    /// Parameters and untracked slots start at Top, tracked locals at Bottom.
    pub fn entry(method: &MethodDecl) -> Self {
        let values = (0..method.slots.len() as Slot)
            .map(|s| {
                if method.is_param(s) || !tracked(method.slot_type(s)) {
                    ConstValue::Top
                } else {
                    ConstValue::Bottom
                }
            })
            .collect();
        ValueState { reached: true, values }
    }

    pub fn is_reached(&self) -> bool {
        self.reached
    }

    pub fn get(&self, slot: Slot) -> &ConstValue {
        if !self.reached {
            return &BOTTOM;
        }
        self.values.get(slot as usize).unwrap_or(&TOP)
    }

    pub fn set(&mut self, slot: Slot, v: ConstValue) {
        let i = slot as usize;
        if self.values.len() <= i {
            self.values.resize(i + 1, ConstValue::Top);
        }
        self.values[i] = v;
    }

    pub fn join(&self, other: &ValueState) -> ValueState {
        match (self.reached, other.reached) {
            (false, _) => other.clone(),
            (_, false) => self.clone(),
            _ => {
                let n = self.values.len().max(other.values.len());
                let values = (0..n as Slot).map(|s| self.get(s).join(other.get(s))).collect();
                ValueState { reached: true, values }
            }
        }
    }

    pub fn leq(&self, other: &ValueState) -> bool {
        if !self.reached {
            return true;
        }
        if !other.reached {
            return false;
        }
        let n = self.values.len().max(other.values.len());
        (0..n as Slot).all(|s| self.get(s).leq(other.get(s)))
    }
}

/// Applies one CFG node to `state`. When `record` is given, the value of every
/// evaluated expression is joined into `record[expr.id]`.
pub fn transfer_value(method: &MethodDecl, node: CfgNode<'_>, state: &mut ValueState, record: Option<&mut [ConstValue]>) {
    if !state.reached {
        return;
    }
    let mut ev = Eval { method, record };
    match node {
        CfgNode::Cond(e) => {
            ev.eval(e, state);
        }
        CfgNode::Stmt(s) => match &s.kind {
            StmtKind::Local { slot, init: Some(e) } => {
                let v = ev.eval(e, state);
                ev.store(*slot, v, state);
            }
            StmtKind::Expr(e) | StmtKind::Return(Some(e)) => {
                ev.eval(e, state);
            }
            _ => {}
        },
    }
}

struct Eval<'m, 'r> {
    method: &'m MethodDecl,
    record: Option<&'r mut [ConstValue]>,
}

fn wrap(ty: &JType, n: i64) -> i64 {
    if *ty == JType::Long {
        n
    } else {
        n as i32 as i64
    }
}

fn concat(a: &Const, b: &Const) -> Option<Const> {
    Some(Const::Str(format!("{}{}", text(a), text(b))))
}

fn text(c: &Const) -> String {
    match c {
        Const::Int(n) => n.to_string(),
        Const::Str(s) => s.clone(),
    }
}

fn arith(ty: &JType, a: &Const, b: &Const, sign: i64) -> Option<Const> {
    match (a, b) {
        (Const::Int(x), Const::Int(y)) => Some(Const::Int(wrap(ty, x.wrapping_add(y.wrapping_mul(sign))))),
        _ => None,
    }
}

impl Eval<'_, '_> {
    fn store(&self, slot: Slot, v: ConstValue, state: &mut ValueState) {
        if tracked(self.method.slot_type(slot)) {
            state.set(slot, v);
        }
    }

    fn eval(&mut self, e: &Expr, state: &mut ValueState) -> ConstValue {
        let v = self.eval_inner(e, state);
        if let Some(rec) = self.record.as_deref_mut() {
            if let Some(slot) = rec.get_mut(e.id as usize) {
                *slot = slot.join(&v);
            }
        }
        v
    }

    fn eval_inner(&mut self, e: &Expr, state: &mut ValueState) -> ConstValue {
        match &e.kind {
            ExprKind::Lit(Literal::Int(n) | Literal::Long(n)) => ConstValue::single(Const::Int(*n)),
            ExprKind::Lit(Literal::Str(s)) => ConstValue::single(Const::Str(s.clone())),
            ExprKind::Lit(_) => ConstValue::Top,
            ExprKind::Local(slot) => {
                if tracked(self.method.slot_type(*slot)) {
                    state.get(*slot).clone()
                } else {
                    ConstValue::Top
                }
            }
            ExprKind::Assign { slot, op, value } => {
                let rhs = self.eval(value, state);
                let slot_ty = self.method.slot_type(*slot).clone();
                let v = match op {
                    AssignOp::Set => rhs,
                    AssignOp::Add if slot_ty == JType::String => state.get(*slot).map2(&rhs, concat),
                    AssignOp::Add => state.get(*slot).map2(&rhs, |a, b| arith(&slot_ty, a, b, 1)),
                    AssignOp::Sub => state.get(*slot).map2(&rhs, |a, b| arith(&slot_ty, a, b, -1)),
                    AssignOp::Other => ConstValue::Top,
                };
                self.store(*slot, v.clone(), state);
                v
            }
            ExprKind::IncDec { slot, delta, prefix } => {
                let slot_ty = self.method.slot_type(*slot).clone();
                if !slot_ty.is_integral() {
                    return ConstValue::Top;
                }
                let old = state.get(*slot).clone();
                let new = old.map1(|c| arith(&slot_ty, c, &Const::Int(*delta), 1));
                self.store(*slot, new.clone(), state);
                if *prefix {
                    new
                } else {
                    old
                }
            }
            ExprKind::Unary { op, expr } => {
                let v = self.eval(expr, state);
                match op {
                    UnaryOp::Plus if e.ty.is_integral() => v,
                    UnaryOp::Neg if e.ty.is_integral() => v.map1(|c| match c {
                        Const::Int(n) => Some(Const::Int(wrap(&e.ty, n.wrapping_neg()))),
                        Const::Str(_) => None,
                    }),
                    _ => ConstValue::Top,
                }
            }
            ExprKind::Binary { op: BinaryOp::And | BinaryOp::Or, lhs, rhs } => {
                self.eval(lhs, state);
                let mut taken = state.clone();
                self.eval(rhs, &mut taken);
                *state = state.join(&taken);
                ConstValue::Top
            }
            ExprKind::Binary { op, lhs, rhs } => {
                let a = self.eval(lhs, state);
                let b = self.eval(rhs, state);
                match op {
                    BinaryOp::Add if lhs.ty == JType::String || rhs.ty == JType::String => {
                        if tracked(&lhs.ty) && tracked(&rhs.ty) {
                            a.map2(&b, concat)
                        } else {
                            ConstValue::Top
                        }
                    }
                    BinaryOp::Add if e.ty.is_integral() => a.map2(&b, |x, y| arith(&e.ty, x, y, 1)),
                    BinaryOp::Sub if e.ty.is_integral() => a.map2(&b, |x, y| arith(&e.ty, x, y, -1)),
                    _ => ConstValue::Top,
                }
            }
            ExprKind::Cast { ty, expr } => {
                let v = self.eval(expr, state);
                match ty.ty {
                    JType::String if expr.ty == JType::String => v,
                    JType::Long if expr.ty.is_integral() => v,
                    JType::Int if expr.ty.is_integral() => v.map1(|c| match c {
                        Const::Int(n) => Some(Const::Int(*n as i32 as i64)),
                        Const::Str(_) => None,
                    }),
                    _ => ConstValue::Top,
                }
            }
            ExprKind::New { args, .. } => {
                for a in args {
                    self.eval(a, state);
                }
                ConstValue::Top
            }
            ExprKind::Call { receiver, args, .. } => {
                if let Receiver::Expr(r) = receiver {
                    self.eval(r, state);
                }
                for a in args {
                    self.eval(a, state);
                }
                ConstValue::Top
            }
        }
    }
}

struct ConstProp<'m> {
    method: &'m MethodDecl,
}

impl<'a> Forward<'a> for ConstProp<'_> {
    type State = ValueState;

    fn unreached(&self) -> ValueState {
        ValueState::unreached()
    }

    fn entry(&self) -> ValueState {
        ValueState::entry(self.method)
    }

    fn join(&self, a: &ValueState, b: &ValueState) -> ValueState {
        a.join(b)
    }

    fn transfer(&self, node: CfgNode<'a>, state: &mut ValueState) {
        transfer_value(self.method, node, state, None);
    }
}

/// Fixpoint of constant values for one method.
#[derive(Debug, Clone)]
pub struct ValueFacts {
    pub solution: Solution<ValueState>,
    exprs: Vec<ConstValue>,
}

impl ValueFacts {
    /// Value of an expression at its evaluation; Bottom if it is never evaluated.
    pub fn expr(&self, e: &Expr) -> &ConstValue {
        self.exprs.get(e.id as usize).unwrap_or(&TOP)
    }

    /// State before every node, aligned with `cfg.blocks[b].nodes`.
    pub fn node_states(&self, method: &MethodDecl, cfg: &Cfg<'_>) -> Vec<Vec<ValueState>> {
        self.solution.node_states(cfg, &ConstProp { method })
    }
}

pub fn solve_values(method: &MethodDecl, cfg: &Cfg<'_>) -> ValueFacts {
    let analysis = ConstProp { method };
    let solution = solve(cfg, &analysis);
    let mut exprs = vec![ConstValue::Bottom; method.expr_count as usize];
    for (block, input) in cfg.blocks.iter().zip(&solution.block_in) {
        let mut state = input.clone();
        for node in &block.nodes {
            transfer_value(method, *node, &mut state, Some(&mut exprs));
        }
    }
    ValueFacts { solution, exprs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::javafront::{build_cfg, parse_java, ExprKind};

    fn str_set(items: &[&str]) -> ConstValue {
        ConstValue::Known(items.iter().map(|s| Const::Str(s.to_string())).collect())
    }

    /// Values of the arguments of every call to `probe(...)`, in source order.
    fn probes(body: &str) -> Vec<ConstValue> {
        let src = format!("class A {{ void f(boolean c, String p, int n) {{ {body} }} }}");
        let cu = parse_java(&src, "A.java").unwrap();
        let m = &cu.classes[0].methods[0];
        let cfg = build_cfg(m);
        let facts = solve_values(m, &cfg);
        let bound = CAP * m.slots.len() + 2;
        assert!(facts.solution.visits.iter().all(|&v| v <= bound));
        let mut out = Vec::new();
        if let crate::javafront::MethodBody::Block(b) = &m.body {
            for s in &b.stmts {
                collect(s, &mut |e| {
                    if let ExprKind::Call { method, args, .. } = &e.kind {
                        if method == "probe" {
                            out.push(facts.expr(&args[0]).clone());
                        }
                    }
                });
            }
        }
        out
    }

    fn collect<'a>(s: &'a crate::javafront::Stmt, f: &mut dyn FnMut(&'a Expr)) {
        for e in s.own_exprs() {
            e.walk(f);
        }
        match &s.kind {
            StmtKind::If { then, otherwise, .. } => {
                collect(then, f);
                if let Some(o) = otherwise {
                    collect(o, f);
                }
            }
            StmtKind::While { body, .. } => collect(body, f),
            StmtKind::Block(b) => b.stmts.iter().for_each(|s| collect(s, f)),
            _ => {}
        }
    }

    #[test]
    fn compound_concatenation() {
        let got = probes(r#"String sql = "SELECT name FROM "; sql += "employee WHERE salary < ?"; probe(sql);"#);
        assert_eq!(got, vec![str_set(&["SELECT name FROM employee WHERE salary < ?"])]);
    }

    #[test]
    fn post_increment_argument() {
        let got = probes("int ctr = 1; probe(ctr++); probe(ctr); probe(++ctr);");
        let ints = |n: i64| ConstValue::single(Const::Int(n));
        assert_eq!(got, vec![ints(1), ints(2), ints(3)]);
    }

    #[test]
    fn top_absorbs() {
        assert_eq!(probes(r#"String y = p + "a"; probe(y);"#), vec![ConstValue::Top]);
    }

    #[test]
    fn branches_join() {
        let got = probes(r#"String s; if (c) { s = "A"; } else { s = "B"; } probe(s);"#);
        assert_eq!(got, vec![str_set(&["A", "B"])]);
    }

    #[test]
    fn loop_body_stays_singleton() {
        let got = probes(
            r#"int i = 0; while (i < n) { String sql = "select * from stock " + "where s_i_id = ?"; probe(sql); i++; }"#,
        );
        assert_eq!(got, vec![str_set(&["select * from stock where s_i_id = ?"])]);
    }

    #[test]
    fn counting_loop_reaches_top() {
        let got = probes("int i = 0; while (c) { i++; } probe(i);");
        assert_eq!(got, vec![ConstValue::Top]);
    }

    #[test]
    fn int_concat_and_wrapping() {
        let got = probes(r#"int k = 2147483647; k++; String s = "id" + 7; probe(k); probe(s); probe(-k);"#);
        assert_eq!(got[0], ConstValue::single(Const::Int(i32::MIN as i64)));
        assert_eq!(got[1], str_set(&["id7"]));
        assert_eq!(got[2], ConstValue::single(Const::Int(i32::MIN as i64)));
    }

    #[test]
    fn short_circuit_effects_are_optional() {
        let got = probes("int k = 1; if (c && (k++ > 0)) { } probe(k);");
        assert_eq!(got, vec![ConstValue::Known([Const::Int(1), Const::Int(2)].into())]);
    }

    #[test]
    fn cap_overflow_is_top() {
        let a = ConstValue::Known((0..6).map(Const::Int).collect());
        let b = ConstValue::Known((6..12).map(Const::Int).collect());
        assert_eq!(a.join(&b), ConstValue::Top);
        assert_eq!(a.join(&ConstValue::Bottom), a);
    }
}
