//! Random loop-free methods and a concrete path enumerator for them.

use std::collections::BTreeMap;

use oopsie_core::constprop::{Const, ConstValue, ValueFacts};
use oopsie_core::javafront::{
    AssignOp, BinaryOp, Block, Expr, ExprId, ExprKind, JType, Literal, MethodDecl, Stmt, StmtKind, UnaryOp,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

const INTS: [&str; 2] = ["i0", "i1"];
const STRS: [&str; 2] = ["s0", "s1"];

struct Gen<'r> {
    rng: &'r mut StdRng,
    ifs: usize,
}

impl Gen<'_> {
    fn pick(&mut self, items: &[&'static str]) -> &'static str {
        items.choose(self.rng).unwrap()
    }

    fn int_atom(&mut self) -> String {
        match self.rng.gen_range(0..4) {
            0 => self.pick(&["0", "1", "2", "7", "-3", "2147483647"]).to_string(),
            1 => "n".to_string(),
            _ => self.pick(&INTS).to_string(),
        }
    }

    fn int_expr(&mut self) -> String {
        match self.rng.gen_range(0..7) {
            0 => format!("{} + {}", self.int_atom(), self.int_atom()),
            1 => format!("{} - {}", self.int_atom(), self.int_atom()),
            2 => format!("-{}", self.pick(&INTS)),
            3 => format!("{}++", self.pick(&INTS)),
            4 => format!("--{}", self.pick(&INTS)),
            _ => self.int_atom(),
        }
    }

    fn str_atom(&mut self) -> String {
        match self.rng.gen_range(0..5) {
            0 => "p".to_string(),
            1 | 2 => self.pick(&["\"a\"", "\"b\"", "\"\"", "\"xy\""]).to_string(),
            _ => self.pick(&STRS).to_string(),
        }
    }

    fn str_expr(&mut self) -> String {
        match self.rng.gen_range(0..5) {
            0 => format!("{} + {}", self.str_atom(), self.str_atom()),
            1 => format!("{} + {}", self.str_atom(), self.int_atom()),
            2 => format!("{} + {} + {}", self.str_atom(), self.int_atom(), self.int_atom()),
            _ => self.str_atom(),
        }
    }

    fn any_expr(&mut self) -> String {
        match self.rng.gen_range(0..3) {
            0 => self.int_expr(),
            1 => "l0".to_string(),
            _ => self.str_expr(),
        }
    }

    fn simple(&mut self) -> String {
        let i = self.pick(&INTS);
        let s = self.pick(&STRS);
        match self.rng.gen_range(0..10) {
            0 => format!("{i} = {};", self.int_expr()),
            1 => format!("{i} += {};", self.int_atom()),
            2 => format!("{i} -= {};", self.int_atom()),
            3 => format!("{i}++;"),
            4 => format!("--{i};"),
            5 => format!("l0 = l0 + {};", self.int_atom()),
            6 => format!("l0 += {};", self.pick(&["l0", "i0", "5L", "9223372036854775807L"])),
            7 => format!("{s} += {};", if self.rng.gen_bool(0.5) { self.str_atom() } else { self.int_atom() }),
            _ => format!("{s} = {};", self.str_expr()),
        }
    }

    fn block(&mut self, depth: usize, indent: &str, out: &mut Vec<String>) {
        for _ in 0..self.rng.gen_range(1..=4) {
            if self.ifs > 0 && depth < 2 && self.rng.gen_bool(0.5) {
                self.ifs -= 1;
                let c = self.pick(&["c0", "c1", "c2"]);
                out.push(format!("{indent}if ({c}) {{"));
                self.block(depth + 1, &format!("{indent}    "), out);
                if self.rng.gen_bool(0.5) {
                    out.push(format!("{indent}}} else {{"));
                    self.block(depth + 1, &format!("{indent}    "), out);
                }
                out.push(format!("{indent}}}"));
            } else {
                out.push(format!("{indent}{}", self.simple()));
            }
            if self.rng.gen_bool(0.4) {
                out.push(format!("{indent}probe({});", self.any_expr()));
            }
        }
    }
}

/// A class with one loop-free method whose probes cover every local at the end.
pub fn generate(rng: &mut StdRng) -> String {
    let ifs = rng.gen_range(1..=4);
    let mut g = Gen { rng, ifs };
    let mut lines = vec![
        "class R {".to_string(),
        "    void m(boolean c0, boolean c1, boolean c2, int n, String p) {".to_string(),
    ];
    let ind = "        ";
    for v in INTS {
        lines.push(format!("{ind}int {v} = {};", g.pick(&["0", "1", "5", "-2"])));
    }
    lines.push(format!("{ind}long l0 = {};", g.pick(&["0L", "3L"])));
    for v in STRS {
        lines.push(format!("{ind}String {v} = {};", g.pick(&["\"\"", "\"q\"", "\"ab\""])));
    }
    g.block(0, ind, &mut lines);
    for v in INTS.iter().chain(["l0"].iter()).chain(STRS.iter()) {
        lines.push(format!("{ind}probe({v});"));
    }
    lines.push("    }".to_string());
    lines.push("}".to_string());
    lines.join("\n") + "\n"
}

#[derive(Debug, Clone, PartialEq)]
pub enum Concrete {
    Int(i64),
    Str(String),
    Any,
}

type Observed = BTreeMap<ExprId, Vec<Concrete>>;

fn wrap(ty: &JType, v: i64) -> i64 {
    if *ty == JType::Int {
        v as i32 as i64
    } else {
        v
    }
}

fn text(v: &Concrete) -> Option<String> {
    match v {
        Concrete::Int(n) => Some(n.to_string()),
        Concrete::Str(s) => Some(s.clone()),
        Concrete::Any => None,
    }
}

fn add(ty: &JType, a: &Concrete, b: &Concrete, sub: bool) -> Concrete {
    if *ty == JType::String {
        return match (text(a), text(b)) {
            (Some(x), Some(y)) if !sub => Concrete::Str(x + &y),
            _ => Concrete::Any,
        };
    }
    match (a, b) {
        (Concrete::Int(x), Concrete::Int(y)) => {
            Concrete::Int(wrap(ty, if sub { x.wrapping_sub(*y) } else { x.wrapping_add(*y) }))
        }
        _ => Concrete::Any,
    }
}

struct Runner<'m> {
    method: &'m MethodDecl,
    seen: Observed,
}

impl Runner<'_> {
    fn eval(&mut self, e: &Expr, st: &mut Vec<Concrete>) -> Concrete {
        match &e.kind {
            ExprKind::Lit(Literal::Int(n) | Literal::Long(n)) => Concrete::Int(*n),
            ExprKind::Lit(Literal::Str(s)) => Concrete::Str(s.clone()),
            ExprKind::Lit(_) => Concrete::Any,
            ExprKind::Local(s) => st[*s as usize].clone(),
            ExprKind::IncDec { slot, delta, prefix } => {
                let old = st[*slot as usize].clone();
                let new = add(self.method.slot_type(*slot), &old, &Concrete::Int(*delta), false);
                st[*slot as usize] = new.clone();
                if *prefix {
                    new
                } else {
                    old
                }
            }
            ExprKind::Assign { slot, op, value } => {
                let v = self.eval(value, st);
                let ty = self.method.slot_type(*slot);
                let cur = st[*slot as usize].clone();
                let new = match op {
                    AssignOp::Set => v,
                    AssignOp::Add => add(ty, &cur, &v, false),
                    AssignOp::Sub => add(ty, &cur, &v, true),
                    AssignOp::Other => Concrete::Any,
                };
                st[*slot as usize] = new.clone();
                new
            }
            ExprKind::Unary { op: UnaryOp::Neg, expr } => match self.eval(expr, st) {
                Concrete::Int(n) => Concrete::Int(wrap(&e.ty, n.wrapping_neg())),
                _ => Concrete::Any,
            },
            ExprKind::Binary { op: op @ (BinaryOp::Add | BinaryOp::Sub), lhs, rhs } => {
                let a = self.eval(lhs, st);
                let b = self.eval(rhs, st);
                add(&e.ty, &a, &b, *op == BinaryOp::Sub)
            }
            ExprKind::Call { method, args, .. } if method == "probe" => {
                let v = self.eval(&args[0], st);
                self.seen.entry(args[0].id).or_default().push(v);
                Concrete::Any
            }
            other => panic!("generator produced an unexpected expression: {other:?}"),
        }
    }

    fn stmts(&mut self, stmts: &[Stmt], states: Vec<Vec<Concrete>>) -> Vec<Vec<Concrete>> {
        stmts.iter().fold(states, |states, s| states.into_iter().flat_map(|st| self.stmt(s, st)).collect())
    }

    fn stmt(&mut self, s: &Stmt, mut st: Vec<Concrete>) -> Vec<Vec<Concrete>> {
        match &s.kind {
            StmtKind::Local { slot, init: Some(e) } => {
                let v = self.eval(e, &mut st);
                st[*slot as usize] = v;
                vec![st]
            }
            StmtKind::Expr(e) => {
                self.eval(e, &mut st);
                vec![st]
            }
            StmtKind::If { cond, then, otherwise } => {
                self.eval(cond, &mut st);
                let mut out = self.stmt(then, st.clone());
                match otherwise {
                    Some(o) => out.extend(self.stmt(o, st)),
                    None => out.push(st),
                }
                out
            }
            StmtKind::Block(Block { stmts, .. }) => self.stmts(stmts, vec![st]),
            StmtKind::Empty => vec![st],
            other => panic!("generator produced an unexpected statement: {other:?}"),
        }
    }
}

/// Runs every path of a loop-free method and records the argument values of
/// each `probe` call, keyed by the argument's expression id.
pub fn enumerate(method: &MethodDecl, body: &Block) -> (Observed, usize) {
    let mut r = Runner { method, seen: BTreeMap::new() };
    let st = vec![Concrete::Any; method.slots.len()];
    let finals = r.stmts(&body.stmts, vec![st]);
    (r.seen, finals.len())
}

/// Probe arguments, keyed by expression id.
pub fn probes(body: &Block) -> BTreeMap<ExprId, &Expr> {
    fn stmt<'a>(s: &'a Stmt, out: &mut BTreeMap<ExprId, &'a Expr>) {
        for e in s.own_exprs() {
            e.walk(&mut |x| {
                if let ExprKind::Call { method, args, .. } = &x.kind {
                    if method == "probe" {
                        out.insert(args[0].id, &args[0]);
                    }
                }
            });
        }
        match &s.kind {
            StmtKind::If { then, otherwise, .. } => {
                stmt(then, out);
                if let Some(o) = otherwise {
                    stmt(o, out);
                }
            }
            StmtKind::While { body, .. } => stmt(body, out),
            StmtKind::Block(b) => b.stmts.iter().for_each(|s| stmt(s, out)),
            _ => {}
        }
    }
    let mut out = BTreeMap::new();
    body.stmts.iter().for_each(|s| stmt(s, &mut out));
    out
}

/// Observed values missing from the solver's facts, described for a report.
pub fn violations(facts: &ValueFacts, probes: &BTreeMap<ExprId, &Expr>, seen: &Observed) -> Vec<String> {
    let mut out = Vec::new();
    for (id, values) in seen {
        let fact = facts.expr(probes[id]);
        for v in values {
            let ok = match v {
                Concrete::Any => *fact == ConstValue::Top,
                Concrete::Int(n) => fact.contains(&Const::Int(*n)),
                Concrete::Str(s) => fact.contains(&Const::Str(s.clone())),
            };
            if !ok {
                out.push(format!("probe at {}: {v:?} not in {fact}", probes[id].span));
            }
        }
    }
    out
}
