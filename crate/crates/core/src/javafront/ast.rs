use std::fmt;
use std::sync::Arc;
use std::path::PathBuf;

use crate::span::SourceSpan;

/// Index of a parameter or local variable within its method.
pub type Slot = u32;

/// Identifies an expression within its method.
pub type ExprId = u32;

/// Declared (static) type of a variable or expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum JType {
    Int,
    Long,
    Boolean,
    Char,
    Double,
    String,
    Connection,
    Statement,
    PreparedStatement,
    ResultSet,
    Void,
    Null,
    Other(String),
}

impl JType {
    pub fn from_name(name: &str) -> JType {
        let simple = name.rsplit('.').next().unwrap_or(name);
        match simple {
            "int" | "short" | "byte" => JType::Int,
            "long" => JType::Long,
            "boolean" => JType::Boolean,
            "char" => JType::Char,
            "double" | "float" => JType::Double,
            "String" => JType::String,
            "Connection" => JType::Connection,
            "Statement" => JType::Statement,
            "PreparedStatement" => JType::PreparedStatement,
            "ResultSet" => JType::ResultSet,
            "void" => JType::Void,
            other => JType::Other(other.to_string()),
        }
    }

    /// Statement and result-set types carry an SQL qualifier.
    pub fn is_sql_carrier(&self) -> bool {
        matches!(self, JType::Statement | JType::PreparedStatement | JType::ResultSet)
    }

    pub fn is_integral(&self) -> bool {
        matches!(self, JType::Int | JType::Long)
    }
}

impl fmt::Display for JType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            JType::Int => "int",
            JType::Long => "long",
            JType::Boolean => "boolean",
            JType::Char => "char",
            JType::Double => "double",
            JType::String => "String",
            JType::Connection => "Connection",
            JType::Statement => "Statement",
            JType::PreparedStatement => "PreparedStatement",
            JType::ResultSet => "ResultSet",
            JType::Void => "void",
            JType::Null => "null",
            JType::Other(s) => s,
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TypeRef {
    /// Source spelling without generic arguments.
    pub name: String,
    pub ty: JType,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompilationUnit {
    pub file: Arc<PathBuf>,
    pub classes: Vec<ClassDecl>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassDecl {
    pub name: String,
    pub span: SourceSpan,
    pub methods: Vec<MethodDecl>,
    /// Members outside the subset (nested types, initializer blocks).
    pub violations: Vec<SubsetViolation>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubsetViolation {
    pub span: SourceSpan,
    pub construct: String,
}

/// `@Sql...` annotation text exactly as written.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnotationText {
    pub text: String,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Param {
    pub name: String,
    pub ty: TypeRef,
    pub slot: Slot,
    pub annotation: Option<AnnotationText>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LocalInfo {
    pub name: String,
    pub ty: JType,
}

#[derive(Debug, Clone, PartialEq)]
pub enum MethodBody {
    Block(Block),
    /// Abstract or interface method.
    Absent,
    /// The body uses constructs outside the subset and is not analyzed.
    Skipped(SubsetViolation),
}

#[derive(Debug, Clone, PartialEq)]
pub struct MethodDecl {
    pub name: String,
    pub span: SourceSpan,
    pub is_static: bool,
    pub return_type: TypeRef,
    pub return_annotation: Option<AnnotationText>,
    pub params: Vec<Param>,
    pub body: MethodBody,
    /// Every slot, parameters first.
    pub slots: Vec<LocalInfo>,
    /// Number of expression ids allocated.
    pub expr_count: u32,
}

impl MethodDecl {
    pub fn slot_type(&self, slot: Slot) -> &JType {
        &self.slots[slot as usize].ty
    }

    pub fn is_param(&self, slot: Slot) -> bool {
        (slot as usize) < self.params.len()
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Block {
    pub stmts: Vec<Stmt>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Stmt {
    pub span: SourceSpan,
    pub kind: StmtKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum StmtKind {
    Local { slot: Slot, init: Option<Expr> },
    Expr(Expr),
    If { cond: Expr, then: Box<Stmt>, otherwise: Option<Box<Stmt>> },
    While { cond: Expr, body: Box<Stmt> },
    Return(Option<Expr>),
    Block(Block),
    Empty,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    pub id: ExprId,
    pub span: SourceSpan,
    pub ty: JType,
    pub kind: ExprKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssignOp {
    Set,
    Add,
    Sub,
    /// Compound operators other than `+=`/`-=`; the result is never tracked.
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryOp {
    Neg,
    Plus,
    Not,
    BitNot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Rem,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    And,
    Or,
    BitAnd,
    BitOr,
    BitXor,
    Shl,
    Shr,
    UShr,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Literal {
    Int(i64),
    Long(i64),
    Float(String),
    Str(String),
    Char(char),
    Bool(bool),
    Null,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Receiver {
    /// `foo(...)`: a method of the enclosing class.
    Implicit,
    /// `Name.path.foo(...)` where the path is not a variable, e.g. `Integer.parseInt`.
    Static(String),
    Expr(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Lit(Literal),
    Local(Slot),
    Assign { slot: Slot, op: AssignOp, value: Box<Expr> },
    /// `x++`, `--x`, ...; `delta` is +1 or -1.
    IncDec { slot: Slot, delta: i64, prefix: bool },
    Unary { op: UnaryOp, expr: Box<Expr> },
    Binary { op: BinaryOp, lhs: Box<Expr>, rhs: Box<Expr> },
    Cast { ty: TypeRef, expr: Box<Expr> },
    New { ty: TypeRef, args: Vec<Expr> },
    Call { receiver: Receiver, method: String, args: Vec<Expr> },
}

impl Expr {
    /// Pre-order walk over this expression and its sub-expressions.
    pub fn walk<'a>(&'a self, f: &mut dyn FnMut(&'a Expr)) {
        f(self);
        match &self.kind {
            ExprKind::Lit(_) | ExprKind::Local(_) | ExprKind::IncDec { .. } => {}
            ExprKind::Assign { value, .. } => value.walk(f),
            ExprKind::Unary { expr, .. } | ExprKind::Cast { expr, .. } => expr.walk(f),
            ExprKind::Binary { lhs, rhs, .. } => {
                lhs.walk(f);
                rhs.walk(f);
            }
            ExprKind::New { args, .. } => args.iter().for_each(|a| a.walk(f)),
            ExprKind::Call { receiver, args, .. } => {
                if let Receiver::Expr(r) = receiver {
                    r.walk(f);
                }
                args.iter().for_each(|a| a.walk(f));
            }
        }
    }
}

impl Stmt {
    /// Expressions directly owned by this statement (not by nested statements).
    pub fn own_exprs(&self) -> Vec<&Expr> {
        match &self.kind {
            StmtKind::Local { init: Some(e), .. } | StmtKind::Expr(e) | StmtKind::Return(Some(e)) => vec![e],
            StmtKind::If { cond, .. } | StmtKind::While { cond, .. } => vec![cond],
            _ => Vec::new(),
        }
    }
}
