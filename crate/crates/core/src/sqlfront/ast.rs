#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatementKind {
    Select,
    Insert,
    Update,
    Delete,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SqlAst {
    Select(Select),
    Insert(Insert),
    Update(Update),
    Delete(Delete),
}

impl SqlAst {
    pub fn kind(&self) -> StatementKind {
        match self {
            SqlAst::Select(_) => StatementKind::Select,
            SqlAst::Insert(_) => StatementKind::Insert,
            SqlAst::Update(_) => StatementKind::Update,
            SqlAst::Delete(_) => StatementKind::Delete,
        }
    }

    pub fn target(&self) -> &TableRef {
        match self {
            SqlAst::Select(s) => &s.from,
            SqlAst::Insert(i) => &i.table,
            SqlAst::Update(u) => &u.table,
            SqlAst::Delete(d) => &d.table,
        }
    }

    /// Placeholder ordinals in the order they occur in the statement text.
    pub fn placeholders(&self) -> Vec<u32> {
        let mut out = Vec::new();
        match self {
            SqlAst::Select(s) => {
                if let Some(w) = &s.filter {
                    w.collect_placeholders(&mut out);
                }
                if let Some(l) = &s.limit {
                    l.collect_placeholders(&mut out);
                }
            }
            SqlAst::Insert(i) => i.values.iter().for_each(|v| v.collect_placeholders(&mut out)),
            SqlAst::Update(u) => {
                u.assignments.iter().for_each(|(_, v)| v.collect_placeholders(&mut out));
                if let Some(w) = &u.filter {
                    w.collect_placeholders(&mut out);
                }
            }
            SqlAst::Delete(d) => {
                if let Some(w) = &d.filter {
                    w.collect_placeholders(&mut out);
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRef {
    pub name: String,
    pub alias: Option<String>,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ColumnRef {
    pub qualifier: Option<String>,
    pub name: String,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SelectItem {
    /// `*` or `qualifier.*`
    Star(Option<String>),
    Column { column: ColumnRef, alias: Option<String> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Select {
    pub distinct: bool,
    pub items: Vec<SelectItem>,
    pub from: TableRef,
    pub filter: Option<Expr>,
    pub order_by: Vec<ColumnRef>,
    pub limit: Option<Expr>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Insert {
    pub table: TableRef,
    pub columns: Option<Vec<ColumnRef>>,
    pub values: Vec<Expr>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Update {
    pub table: TableRef,
    pub assignments: Vec<(ColumnRef, Expr)>,
    pub filter: Option<Expr>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Delete {
    pub table: TableRef,
    pub filter: Option<Expr>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Concat,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Literal {
    Number(String),
    Str(String),
    Bool(bool),
    Null,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Column(ColumnRef),
    Literal(Literal),
    Placeholder(u32),
    Neg(Box<Expr>),
    Arith { op: ArithOp, lhs: Box<Expr>, rhs: Box<Expr> },
    Compare { op: CmpOp, lhs: Box<Expr>, rhs: Box<Expr> },
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Not(Box<Expr>),
    Between { expr: Box<Expr>, low: Box<Expr>, high: Box<Expr>, negated: bool },
    InList { expr: Box<Expr>, list: Vec<Expr>, negated: bool },
    Like { expr: Box<Expr>, pattern: Box<Expr>, negated: bool },
    IsNull { expr: Box<Expr>, negated: bool },
}

impl Expr {
    pub fn collect_placeholders(&self, out: &mut Vec<u32>) {
        match self {
            Expr::Placeholder(n) => out.push(*n),
            Expr::Column(_) | Expr::Literal(_) => {}
            Expr::Neg(e) | Expr::Not(e) | Expr::IsNull { expr: e, .. } => e.collect_placeholders(out),
            Expr::Arith { lhs, rhs, .. } | Expr::Compare { lhs, rhs, .. } | Expr::And(lhs, rhs) | Expr::Or(lhs, rhs) => {
                lhs.collect_placeholders(out);
                rhs.collect_placeholders(out);
            }
            Expr::Like { expr, pattern, .. } => {
                expr.collect_placeholders(out);
                pattern.collect_placeholders(out);
            }
            Expr::Between { expr, low, high, .. } => {
                expr.collect_placeholders(out);
                low.collect_placeholders(out);
                high.collect_placeholders(out);
            }
            Expr::InList { expr, list, .. } => {
                expr.collect_placeholders(out);
                list.iter().for_each(|e| e.collect_placeholders(out));
            }
        }
    }
}
