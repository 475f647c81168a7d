use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::Arc;

use thiserror::Error;

use super::api::api_result_type;
use super::ast::*;
use super::lexer::{tokenize, JTok, JToken};
use crate::span::SourceSpan;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("{span}: {message}")]
pub struct JavaSyntaxError {
    pub span: SourceSpan,
    pub message: String,
}

const KEYWORDS: &[&str] = &[
    "if", "else", "while", "for", "do", "switch", "case", "default", "try", "catch", "finally", "return", "break",
    "continue", "throw", "synchronized", "new", "this", "super", "true", "false", "null", "instanceof", "class",
    "interface", "enum", "assert", "import", "package", "throws", "extends", "implements",
];

const MODIFIERS: &[&str] = &[
    "public", "private", "protected", "static", "final", "abstract", "synchronized", "native", "transient",
    "volatile", "strictfp", "default", "sealed", "non-sealed",
];

const PRIMITIVES: &[&str] = &["int", "long", "short", "byte", "char", "boolean", "double", "float"];

const SQL_ANNOTATIONS: &[&str] = &["Sql", "SqlUnknown", "SqlUnsupported", "SqlBottom"];

fn is_keyword(s: &str) -> bool {
    KEYWORDS.contains(&s)
}

/// Parses one Java source file of the analyzed subset.
///
/// Class-level syntax errors are fatal. Method bodies that leave the subset
/// (or fail to parse) are kept as [`MethodBody::Skipped`].
pub fn parse_java(source: &str, file: impl Into<PathBuf>) -> Result<CompilationUnit, JavaSyntaxError> {
    let file = Arc::new(file.into());
    let tokens = tokenize(source).map_err(|e| JavaSyntaxError {
        span: SourceSpan::new(file.clone(), e.line, e.column),
        message: e.message,
    })?;
    let mut p = Parser { src: source, toks: &tokens, pos: 0, file: file.clone() };
    let classes = p.compilation_unit()?;
    Ok(CompilationUnit { file, classes })
}

enum Fail {
    Violation(SubsetViolation),
    Syntax(JavaSyntaxError),
}

impl From<JavaSyntaxError> for Fail {
    fn from(e: JavaSyntaxError) -> Self {
        Fail::Syntax(e)
    }
}

type PResult<T> = Result<T, JavaSyntaxError>;
type BResult<T> = Result<T, Fail>;

struct Parser<'s, 't> {
    src: &'s str,
    toks: &'t [JToken],
    pos: usize,
    file: Arc<PathBuf>,
}

/// Method header collected in the first pass over a class.
struct Header {
    name: String,
    span: SourceSpan,
    is_static: bool,
    return_type: TypeRef,
    return_annotation: Option<AnnotationText>,
    params: Vec<(String, TypeRef, Option<AnnotationText>, SourceSpan)>,
    /// Token range of the body including braces.
    body: Option<(usize, usize)>,
    violation: Option<SubsetViolation>,
}

#[derive(Default)]
struct Modifiers {
    is_static: bool,
    sql_annotation: Option<AnnotationText>,
}

impl<'s, 't> Parser<'s, 't> {
    fn peek(&self) -> &'t JToken {
        &self.toks[self.pos]
    }

    fn peek_at(&self, n: usize) -> &'t JToken {
        &self.toks[(self.pos + n).min(self.toks.len() - 1)]
    }

    fn bump(&mut self) -> &'t JToken {
        let t = &self.toks[self.pos];
        if !matches!(t.tok, JTok::Eof) {
            self.pos += 1;
        }
        t
    }

    fn span_of(&self, t: &JToken) -> SourceSpan {
        SourceSpan::new(self.file.clone(), t.line, t.column)
    }

    fn span(&self) -> SourceSpan {
        self.span_of(self.peek())
    }

    fn error(&self, expected: &str) -> JavaSyntaxError {
        JavaSyntaxError { span: self.span(), message: format!("expected {expected}, found {}", self.peek().tok) }
    }

    fn eat(&mut self, sym: &str) -> bool {
        if self.peek().is(sym) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: &str) -> PResult<()> {
        if self.eat(sym) {
            Ok(())
        } else {
            Err(self.error(&format!("`{sym}`")))
        }
    }

    fn eat_ident(&mut self, name: &str) -> bool {
        if self.peek().is_ident(name) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn name(&mut self) -> PResult<String> {
        match self.peek().ident() {
            Some(s) if !is_keyword(s) => {
                let s = s.to_string();
                self.bump();
                Ok(s)
            }
            _ => Err(self.error("an identifier")),
        }
    }

    /// Skips a balanced group starting at the current open bracket.
    fn skip_balanced(&mut self, open: &str, close: &str) -> PResult<()> {
        let start = self.span();
        let mut depth = 0usize;
        loop {
            let t = self.bump();
            if t.is(open) {
                depth += 1;
            } else if t.is(close) {
                depth -= 1;
                if depth == 0 {
                    return Ok(());
                }
            } else if matches!(t.tok, JTok::Eof) {
                return Err(JavaSyntaxError { span: start, message: format!("unbalanced `{open}`") });
            }
        }
    }

    fn qualified_name(&mut self) -> PResult<String> {
        let mut name = self.name()?;
        while self.peek().is(".") && self.peek_at(1).ident().is_some() {
            self.bump();
            name.push('.');
            name.push_str(&self.name()?);
        }
        Ok(name)
    }

    fn compilation_unit(&mut self) -> PResult<Vec<ClassDecl>> {
        let mut classes = Vec::new();
        if self.peek().is_ident("package") {
            self.bump();
            self.qualified_name()?;
            self.expect(";")?;
        }
        while self.peek().is_ident("import") {
            self.bump();
            self.eat_ident("static");
            self.qualified_name()?;
            if self.eat(".") {
                self.expect("*")?;
            }
            self.expect(";")?;
        }
        while !matches!(self.peek().tok, JTok::Eof) {
            if self.eat(";") {
                continue;
            }
            classes.push(self.class_decl()?);
        }
        Ok(classes)
    }

    fn modifiers(&mut self) -> PResult<Modifiers> {
        let mut m = Modifiers::default();
        loop {
            if self.peek().is_ident("static") {
                m.is_static = true;
                self.bump();
            } else if self.peek().ident().is_some_and(|s| MODIFIERS.contains(&s)) && !self.peek_at(1).is(".") {
                self.bump();
            } else if matches!(self.peek().tok, JTok::At) && !self.peek_at(1).is_ident("interface") {
                if let Some(a) = self.annotation()? {
                    m.sql_annotation = Some(a);
                }
            } else {
                return Ok(m);
            }
        }
    }

    /// Parses an annotation; returns its text if it is one of the `@Sql` family.
    fn annotation(&mut self) -> PResult<Option<AnnotationText>> {
        let at = self.bump();
        let name = self.qualified_name()?;
        if self.peek().is("(") {
            self.skip_balanced("(", ")")?;
        }
        let simple = name.rsplit('.').next().unwrap_or(&name);
        if SQL_ANNOTATIONS.contains(&simple) {
            let end = self.toks[self.pos - 1].end;
            let text = format!("@{}{}", simple, &self.src[at.start + 1 + name.len()..end]);
            return Ok(Some(AnnotationText { text, span: self.span_of(at) }));
        }
        Ok(None)
    }

    /// Parses a type. Returns the type and whether it was an array type.
    fn type_ref(&mut self) -> PResult<(TypeRef, bool)> {
        let name = self.qualified_name()?;
        if self.peek().is("<") {
            self.skip_type_args()?;
        }
        let mut array = false;
        while self.peek().is("[") && self.peek_at(1).is("]") {
            self.bump();
            self.bump();
            array = true;
        }
        if self.peek().is("...") {
            self.bump();
            array = true;
        }
        let ty = JType::from_name(&name);
        Ok((TypeRef { name, ty }, array))
    }

    fn skip_type_args(&mut self) -> PResult<()> {
        let start = self.span();
        let mut depth = 0i32;
        loop {
            let t = self.bump();
            match &t.tok {
                JTok::Sym("<") => depth += 1,
                JTok::Sym(">") => depth -= 1,
                JTok::Sym(">>") => depth -= 2,
                JTok::Sym(">>>") => depth -= 3,
                JTok::Ident(_) | JTok::Sym(",") | JTok::Sym(".") | JTok::Sym("?") | JTok::Sym("[") | JTok::Sym("]") => {}
                JTok::Sym("&") => {}
                _ => return Err(JavaSyntaxError { span: start, message: "malformed type arguments".into() }),
            }
            if depth <= 0 {
                return Ok(());
            }
        }
    }

    fn class_decl(&mut self) -> PResult<ClassDecl> {
        self.modifiers()?;
        let kw_span = self.span();
        let kind = self.peek().ident().unwrap_or("").to_string();
        if !matches!(kind.as_str(), "class" | "interface" | "enum" | "record") {
            return Err(self.error("a class declaration"));
        }
        self.bump();
        let name = self.name()?;
        let span = kw_span.clone();
        if kind == "enum" || kind == "record" {
            while !self.peek().is("{") {
                if matches!(self.peek().tok, JTok::Eof) {
                    return Err(self.error("`{`"));
                }
                self.bump();
            }
            self.skip_balanced("{", "}")?;
            let violation = SubsetViolation { span: kw_span, construct: format!("{kind} declaration") };
            return Ok(ClassDecl { name, span, methods: Vec::new(), violations: vec![violation] });
        }
        let mut violations = Vec::new();
        if self.peek().is("<") {
            violations.push(SubsetViolation { span: self.span(), construct: "generic class".into() });
            self.skip_type_args()?;
        }
        while !self.peek().is("{") {
            if matches!(self.peek().tok, JTok::Eof) {
                return Err(self.error("`{`"));
            }
            self.bump();
        }
        self.expect("{")?;
        let mut headers = Vec::new();
        while !self.eat("}") {
            if matches!(self.peek().tok, JTok::Eof) {
                return Err(self.error("`}`"));
            }
            self.member(&name, &mut headers, &mut violations)?;
        }

        let mut table: HashMap<(String, usize), TypeRef> = HashMap::new();
        for h in &headers {
            table.entry((h.name.clone(), h.params.len())).or_insert_with(|| h.return_type.clone());
        }
        let methods = headers.into_iter().map(|h| self.method(h, &table)).collect();
        Ok(ClassDecl { name, span, methods, violations })
    }

    fn member(&mut self, class: &str, headers: &mut Vec<Header>, violations: &mut Vec<SubsetViolation>) -> PResult<()> {
        if self.eat(";") {
            return Ok(());
        }
        let start = self.span();
        if self.peek().is("{") || (self.peek().is_ident("static") && self.peek_at(1).is("{")) {
            self.eat_ident("static");
            self.skip_balanced("{", "}")?;
            violations.push(SubsetViolation { span: start, construct: "initializer block".into() });
            return Ok(());
        }
        let mods = self.modifiers()?;
        if self.peek().ident().is_some_and(|s| matches!(s, "class" | "interface" | "enum" | "record"))
            || (matches!(self.peek().tok, JTok::At) && self.peek_at(1).is_ident("interface"))
        {
            while !self.peek().is("{") {
                if matches!(self.peek().tok, JTok::Eof) {
                    return Err(self.error("`{`"));
                }
                self.bump();
            }
            self.skip_balanced("{", "}")?;
            violations.push(SubsetViolation { span: start, construct: "nested type".into() });
            return Ok(());
        }
        let mut violation = None;
        if self.peek().is("<") {
            violation = Some(SubsetViolation { span: self.span(), construct: "generic method".into() });
            self.skip_type_args()?;
        }
        let name_span;
        let name;
        let return_type;
        if self.peek().is_ident(class) && self.peek_at(1).is("(") {
            name_span = self.span();
            name = self.name()?;
            return_type = TypeRef { name: "void".into(), ty: JType::Void };
        } else {
            let (ty, array) = self.type_ref()?;
            if array && violation.is_none() {
                violation = Some(SubsetViolation { span: start.clone(), construct: "array type".into() });
            }
            name_span = self.span();
            name = self.name()?;
            return_type = ty;
            if !self.peek().is("(") {
                // Field declaration: ignored, reads and writes are rejected in bodies.
                self.skip_to_semicolon()?;
                return Ok(());
            }
        }
        self.expect("(")?;
        let mut params = Vec::new();
        if !self.eat(")") {
            loop {
                let pmods = self.modifiers()?;
                let (ty, array) = self.type_ref()?;
                if array && violation.is_none() {
                    violation = Some(SubsetViolation { span: self.span(), construct: "array type".into() });
                }
                let pspan = self.span();
                let pname = self.name()?;
                params.push((pname, ty, pmods.sql_annotation, pspan));
                if !self.eat(",") {
                    break;
                }
            }
            self.expect(")")?;
        }
        if self.eat_ident("throws") {
            loop {
                self.type_ref()?;
                if !self.eat(",") {
                    break;
                }
            }
        }
        let body = if self.eat(";") {
            None
        } else if self.peek().is("{") {
            let open = self.pos;
            self.skip_balanced("{", "}")?;
            Some((open, self.pos))
        } else {
            return Err(self.error("a method body"));
        };
        headers.push(Header {
            name,
            span: name_span,
            is_static: mods.is_static,
            return_type,
            return_annotation: mods.sql_annotation,
            params,
            body,
            violation,
        });
        let _ = start;
        Ok(())
    }

    fn skip_to_semicolon(&mut self) -> PResult<()> {
        loop {
            let t = self.peek();
            if t.is(";") {
                self.bump();
                return Ok(());
            }
            if t.is("{") {
                self.skip_balanced("{", "}")?;
            } else if t.is("(") {
                self.skip_balanced("(", ")")?;
            } else if matches!(t.tok, JTok::Eof) {
                return Err(self.error("`;`"));
            } else {
                self.bump();
            }
        }
    }

    fn method(&mut self, h: Header, table: &HashMap<(String, usize), TypeRef>) -> MethodDecl {
        let mut slots = Vec::new();
        let mut params = Vec::new();
        for (i, (name, ty, annotation, span)) in h.params.into_iter().enumerate() {
            slots.push(LocalInfo { name: name.clone(), ty: ty.ty.clone() });
            params.push(Param { name, ty, slot: i as Slot, annotation, span });
        }
        let mut expr_count = 0;
        let body = match (h.body, h.violation) {
            (None, _) => MethodBody::Absent,
            (Some(_), Some(v)) => MethodBody::Skipped(v),
            (Some((open, _close)), None) => {
                let mut bp = BodyParser {
                    p: Parser { src: self.src, toks: self.toks, pos: open, file: self.file.clone() },
                    scopes: vec![params.iter().map(|p| (p.name.clone(), p.slot)).collect()],
                    slots: &mut slots,
                    next_id: 0,
                    methods: table,
                };
                let result = bp.block();
                expr_count = bp.next_id;
                match result {
                    Ok(block) => MethodBody::Block(block),
                    Err(Fail::Violation(v)) => MethodBody::Skipped(v),
                    Err(Fail::Syntax(e)) => {
                        MethodBody::Skipped(SubsetViolation { span: e.span, construct: format!("syntax error: {}", e.message) })
                    }
                }
            }
        };
        if !matches!(body, MethodBody::Block(_)) {
            slots.truncate(params.len());
        }
        MethodDecl {
            name: h.name,
            span: h.span,
            is_static: h.is_static,
            return_type: h.return_type,
            return_annotation: h.return_annotation,
            params,
            body,
            slots,
            expr_count,
        }
    }
}

struct BodyParser<'s, 't, 'm> {
    p: Parser<'s, 't>,
    scopes: Vec<Vec<(String, Slot)>>,
    slots: &'m mut Vec<LocalInfo>,
    next_id: ExprId,
    methods: &'m HashMap<(String, usize), TypeRef>,
}

impl<'s, 't, 'm> BodyParser<'s, 't, 'm> {
    fn violation<T>(&self, construct: &str) -> BResult<T> {
        Err(Fail::Violation(SubsetViolation { span: self.p.span(), construct: construct.into() }))
    }

    fn lookup(&self, name: &str) -> Option<Slot> {
        self.scopes.iter().rev().flat_map(|s| s.iter().rev()).find(|(n, _)| n == name).map(|(_, s)| *s)
    }

    fn declare(&mut self, name: String, ty: JType) -> Slot {
        let slot = self.slots.len() as Slot;
        self.slots.push(LocalInfo { name: name.clone(), ty });
        self.scopes.last_mut().expect("scope").push((name, slot));
        slot
    }

    fn mk(&mut self, span: SourceSpan, ty: JType, kind: ExprKind) -> Expr {
        let id = self.next_id;
        self.next_id += 1;
        Expr { id, span, ty, kind }
    }

    fn block(&mut self) -> BResult<Block> {
        self.p.expect("{")?;
        self.scopes.push(Vec::new());
        let mut stmts = Vec::new();
        while !self.p.eat("}") {
            if matches!(self.p.peek().tok, JTok::Eof) {
                return Err(self.p.error("`}`").into());
            }
            self.block_statement(&mut stmts)?;
        }
        self.scopes.pop();
        Ok(Block { stmts })
    }

    fn is_local_decl(&self) -> bool {
        let toks = self.p.toks;
        let mut i = self.p.pos;
        while toks[i].is_ident("final") {
            i += 1;
        }
        let Some(first) = toks[i].ident() else { return false };
        if is_keyword(first) || self.lookup(first).is_some() {
            return false;
        }
        i += 1;
        while toks[i].is(".") && toks[i + 1].ident().is_some() {
            i += 2;
        }
        if toks[i].is("<") {
            let mut depth = 0i32;
            loop {
                match &toks[i].tok {
                    JTok::Sym("<") => depth += 1,
                    JTok::Sym(">") => depth -= 1,
                    JTok::Sym(">>") => depth -= 2,
                    JTok::Sym(">>>") => depth -= 3,
                    JTok::Ident(_) | JTok::Sym(",") | JTok::Sym(".") | JTok::Sym("?") => {}
                    _ => return false,
                }
                i += 1;
                if depth <= 0 {
                    break;
                }
            }
        }
        while toks[i].is("[") && toks[i + 1].is("]") {
            i += 2;
        }
        matches!(toks[i].ident(), Some(n) if !is_keyword(n))
            && (toks[i + 1].is("=") || toks[i + 1].is(";") || toks[i + 1].is(",") || toks[i + 1].is("["))
    }

    fn block_statement(&mut self, out: &mut Vec<Stmt>) -> BResult<()> {
        if self.p.peek().ident().is_some_and(|s| matches!(s, "class" | "interface" | "enum" | "record")) {
            return self.violation("local class");
        }
        if self.is_local_decl() {
            while self.p.eat_ident("final") {}
            let (ty, array) = self.p.type_ref()?;
            if array {
                return self.violation("array type");
            }
            loop {
                let span = self.p.span();
                let name = self.p.name()?;
                if self.p.peek().is("[") {
                    return self.violation("array type");
                }
                let init = if self.p.eat("=") {
                    if self.p.peek().is("{") {
                        return self.violation("array initializer");
                    }
                    Some(self.expr()?)
                } else {
                    None
                };
                let slot_ty = if ty.name == "var" {
                    match &init {
                        Some(e) if e.ty != JType::Null => e.ty.clone(),
                        _ => JType::Other("var".into()),
                    }
                } else {
                    ty.ty.clone()
                };
                let slot = self.declare(name, slot_ty);
                out.push(Stmt { span, kind: StmtKind::Local { slot, init } });
                if !self.p.eat(",") {
                    break;
                }
            }
            self.p.expect(";")?;
            return Ok(());
        }
        let s = self.statement()?;
        out.push(s);
        Ok(())
    }

    fn statement(&mut self) -> BResult<Stmt> {
        let span = self.p.span();
        let t = self.p.peek();
        if t.is("{") {
            return Ok(Stmt { span, kind: StmtKind::Block(self.block()?) });
        }
        if t.is(";") {
            self.p.bump();
            return Ok(Stmt { span, kind: StmtKind::Empty });
        }
        if let Some(word) = t.ident() {
            match word {
                "if" => {
                    self.p.bump();
                    let cond = self.paren_expr()?;
                    let then = Box::new(self.scoped_statement()?);
                    let otherwise =
                        if self.p.eat_ident("else") { Some(Box::new(self.scoped_statement()?)) } else { None };
                    return Ok(Stmt { span, kind: StmtKind::If { cond, then, otherwise } });
                }
                "while" => {
                    self.p.bump();
                    let cond = self.paren_expr()?;
                    let body = Box::new(self.scoped_statement()?);
                    return Ok(Stmt { span, kind: StmtKind::While { cond, body } });
                }
                "return" => {
                    self.p.bump();
                    let value = if self.p.peek().is(";") { None } else { Some(self.expr()?) };
                    self.p.expect(";")?;
                    return Ok(Stmt { span, kind: StmtKind::Return(value) });
                }
                "for" => return self.violation("for statement"),
                "do" => return self.violation("do statement"),
                "switch" => return self.violation("switch statement"),
                "try" => return self.violation("try statement"),
                "break" => return self.violation("break statement"),
                "continue" => return self.violation("continue statement"),
                "throw" => return self.violation("throw statement"),
                "synchronized" => return self.violation("synchronized statement"),
                "assert" => return self.violation("assert statement"),
                "else" | "case" | "catch" | "finally" => return Err(self.p.error("a statement").into()),
                _ => {}
            }
            if self.p.peek_at(1).is(":") && !is_keyword(word) {
                return self.violation("labeled statement");
            }
        }
        let e = self.expr()?;
        if !matches!(
            e.kind,
            ExprKind::Assign { .. } | ExprKind::IncDec { .. } | ExprKind::Call { .. } | ExprKind::New { .. }
        ) {
            return Err(Fail::Syntax(JavaSyntaxError { span: e.span, message: "not a statement".into() }));
        }
        self.p.expect(";")?;
        Ok(Stmt { span, kind: StmtKind::Expr(e) })
    }

    /// A branch or loop body gets its own scope even without braces.
    fn scoped_statement(&mut self) -> BResult<Stmt> {
        if self.is_local_decl() {
            return Err(self.p.error("a statement").into());
        }
        self.scopes.push(Vec::new());
        let s = self.statement();
        self.scopes.pop();
        s
    }

    fn paren_expr(&mut self) -> BResult<Expr> {
        self.p.expect("(")?;
        let e = self.expr()?;
        self.p.expect(")")?;
        Ok(e)
    }

    fn expr(&mut self) -> BResult<Expr> {
        let lhs = self.ternary()?;
        let op = match &self.p.peek().tok {
            JTok::Sym("=") => AssignOp::Set,
            JTok::Sym("+=") => AssignOp::Add,
            JTok::Sym("-=") => AssignOp::Sub,
            JTok::Sym("*=" | "/=" | "%=" | "&=" | "|=" | "^=" | "<<=" | ">>=" | ">>>=") => AssignOp::Other,
            _ => return Ok(lhs),
        };
        let ExprKind::Local(slot) = lhs.kind else {
            return Err(Fail::Syntax(JavaSyntaxError { span: lhs.span, message: "invalid assignment target".into() }));
        };
        self.p.bump();
        let value = self.expr()?;
        let ty = self.slots[slot as usize].ty.clone();
        Ok(self.mk(lhs.span, ty, ExprKind::Assign { slot, op, value: Box::new(value) }))
    }

    fn ternary(&mut self) -> BResult<Expr> {
        let e = self.binary(0)?;
        if self.p.peek().is("?") {
            return self.violation("conditional expression");
        }
        if self.p.peek().is("->") {
            return self.violation("lambda expression");
        }
        Ok(e)
    }

    fn binary_op(&self) -> Option<(BinaryOp, u8)> {
        let JTok::Sym(s) = &self.p.peek().tok else { return None };
        let r = match *s {
            "||" => (BinaryOp::Or, 1),
            "&&" => (BinaryOp::And, 2),
            "|" => (BinaryOp::BitOr, 3),
            "^" => (BinaryOp::BitXor, 4),
            "&" => (BinaryOp::BitAnd, 5),
            "==" => (BinaryOp::Eq, 6),
            "!=" => (BinaryOp::Ne, 6),
            "<" => (BinaryOp::Lt, 7),
            "<=" => (BinaryOp::Le, 7),
            ">" => (BinaryOp::Gt, 7),
            ">=" => (BinaryOp::Ge, 7),
            "<<" => (BinaryOp::Shl, 8),
            ">>" => (BinaryOp::Shr, 8),
            ">>>" => (BinaryOp::UShr, 8),
            "+" => (BinaryOp::Add, 9),
            "-" => (BinaryOp::Sub, 9),
            "*" => (BinaryOp::Mul, 10),
            "/" => (BinaryOp::Div, 10),
            "%" => (BinaryOp::Rem, 10),
            _ => return None,
        };
        Some(r)
    }

    fn binary(&mut self, min_prec: u8) -> BResult<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.p.peek().is_ident("instanceof") {
                return self.violation("instanceof expression");
            }
            let Some((op, prec)) = self.binary_op() else { return Ok(lhs) };
            if prec <= min_prec {
                return Ok(lhs);
            }
            self.p.bump();
            let rhs = self.binary(prec)?;
            let ty = binary_type(op, &lhs.ty, &rhs.ty);
            let span = lhs.span.clone();
            lhs = self.mk(span, ty, ExprKind::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs) });
        }
    }

    fn unary(&mut self) -> BResult<Expr> {
        let span = self.p.span();
        let op = match &self.p.peek().tok {
            JTok::Sym("-") => Some(UnaryOp::Neg),
            JTok::Sym("+") => Some(UnaryOp::Plus),
            JTok::Sym("!") => Some(UnaryOp::Not),
            JTok::Sym("~") => Some(UnaryOp::BitNot),
            _ => None,
        };
        if let Some(op) = op {
            self.p.bump();
            let e = self.unary()?;
            let ty = match op {
                UnaryOp::Not => JType::Boolean,
                _ => promote(&e.ty, &e.ty),
            };
            return Ok(self.mk(span, ty, ExprKind::Unary { op, expr: Box::new(e) }));
        }
        if self.p.peek().is("++") || self.p.peek().is("--") {
            let delta = if self.p.bump().is("++") { 1 } else { -1 };
            let target = self.unary()?;
            let ExprKind::Local(slot) = target.kind else {
                return Err(Fail::Syntax(JavaSyntaxError { span, message: "invalid increment target".into() }));
            };
            return Ok(self.mk(span, target.ty, ExprKind::IncDec { slot, delta, prefix: true }));
        }
        if self.p.peek().is("(") {
            if let Some(cast) = self.try_cast()? {
                return Ok(cast);
            }
        }
        let mut e = self.postfix()?;
        while self.p.peek().is("++") || self.p.peek().is("--") {
            let delta = if self.p.bump().is("++") { 1 } else { -1 };
            let ExprKind::Local(slot) = e.kind else {
                return Err(Fail::Syntax(JavaSyntaxError { span: e.span, message: "invalid increment target".into() }));
            };
            e = self.mk(e.span, e.ty, ExprKind::IncDec { slot, delta, prefix: false });
        }
        Ok(e)
    }

    fn try_cast(&mut self) -> BResult<Option<Expr>> {
        let toks = self.p.toks;
        let start = self.p.pos;
        let Some(first) = toks[start + 1].ident() else { return Ok(None) };
        if is_keyword(first) || self.lookup(first).is_some() {
            return Ok(None);
        }
        let primitive = PRIMITIVES.contains(&first);
        if !primitive && !first.starts_with(|c: char| c.is_ascii_uppercase()) {
            return Ok(None);
        }
        let span = self.p.span();
        self.p.bump();
        let (ty, array) = match self.p.type_ref() {
            Ok(t) => t,
            Err(_) => {
                self.p.pos = start;
                return Ok(None);
            }
        };
        if !self.p.peek().is(")") {
            self.p.pos = start;
            return Ok(None);
        }
        let next = self.p.peek_at(1);
        let operand_follows = match &next.tok {
            JTok::Ident(s) => !matches!(s.as_str(), "instanceof"),
            JTok::Int(_) | JTok::Long(_) | JTok::Float(_) | JTok::Str(_) | JTok::Char(_) => true,
            JTok::Sym("(") | JTok::Sym("!") | JTok::Sym("~") => true,
            JTok::Sym("-") | JTok::Sym("+") => primitive,
            _ => false,
        };
        if !operand_follows {
            self.p.pos = start;
            return Ok(None);
        }
        if array {
            return self.violation("array type");
        }
        self.p.bump();
        let e = self.unary()?;
        let jty = ty.ty.clone();
        Ok(Some(self.mk(span, jty, ExprKind::Cast { ty, expr: Box::new(e) })))
    }

    fn args(&mut self) -> BResult<Vec<Expr>> {
        self.p.expect("(")?;
        let mut args = Vec::new();
        if self.p.eat(")") {
            return Ok(args);
        }
        loop {
            args.push(self.expr()?);
            if !self.p.eat(",") {
                break;
            }
        }
        self.p.expect(")")?;
        Ok(args)
    }

    fn call_type(&self, receiver: &Receiver, method: &str, arity: usize) -> JType {
        match receiver {
            Receiver::Implicit => self.methods.get(&(method.to_string(), arity)).map(|t| t.ty.clone()),
            Receiver::Expr(r) => api_result_type(&r.ty, method),
            Receiver::Static(path) => static_call_type(path, method),
        }
        .unwrap_or_else(|| JType::Other("?".into()))
    }

    fn postfix(&mut self) -> BResult<Expr> {
        let mut e = self.primary()?;
        loop {
            if self.p.peek().is(".") {
                self.p.bump();
                if self.p.peek().is("<") {
                    return self.violation("explicit type arguments");
                }
                let name_tok = self.p.peek();
                let method = self.p.name()?;
                if !self.p.peek().is("(") {
                    let _ = name_tok;
                    return self.violation("field access");
                }
                let args = self.args()?;
                let receiver = Receiver::Expr(Box::new(e));
                let ty = self.call_type(&receiver, &method, args.len());
                let span = match &receiver {
                    Receiver::Expr(r) => r.span.clone(),
                    _ => unreachable!(),
                };
                e = self.mk(span, ty, ExprKind::Call { receiver, method, args });
            } else if self.p.peek().is("[") {
                return self.violation("array access");
            } else if self.p.peek().is("::") {
                return self.violation("method reference");
            } else {
                return Ok(e);
            }
        }
    }

    fn primary(&mut self) -> BResult<Expr> {
        let t = self.p.peek();
        let span = self.p.span();
        let (lit, ty) = match &t.tok {
            JTok::Int(n) => (Literal::Int(*n), JType::Int),
            JTok::Long(n) => (Literal::Long(*n), JType::Long),
            JTok::Float(s) => (Literal::Float(s.clone()), JType::Double),
            JTok::Str(s) => (Literal::Str(s.clone()), JType::String),
            JTok::Char(c) => (Literal::Char(*c), JType::Char),
            JTok::Sym("(") => {
                self.p.bump();
                let e = self.expr()?;
                self.p.expect(")")?;
                if self.p.peek().is("->") {
                    return self.violation("lambda expression");
                }
                return Ok(e);
            }
            JTok::Ident(word) => match word.as_str() {
                "true" | "false" => (Literal::Bool(word == "true"), JType::Boolean),
                "null" => (Literal::Null, JType::Null),
                "this" => return self.violation("this reference"),
                "super" => return self.violation("super reference"),
                "new" => return self.new_expr(),
                "switch" => return self.violation("switch expression"),
                w if is_keyword(w) || PRIMITIVES.contains(&w) => return Err(self.p.error("an expression").into()),
                _ => return self.name_expr(),
            },
            _ => return Err(self.p.error("an expression").into()),
        };
        self.p.bump();
        Ok(self.mk(span, ty, ExprKind::Lit(lit)))
    }

    fn new_expr(&mut self) -> BResult<Expr> {
        let span = self.p.span();
        self.p.bump();
        let name = self.p.qualified_name()?;
        if self.p.peek().is("<") {
            self.p.skip_type_args()?;
        }
        if self.p.peek().is("[") {
            return self.violation("array creation");
        }
        let args = self.args()?;
        if self.p.peek().is("{") {
            return self.violation("anonymous class");
        }
        let ty = TypeRef { ty: JType::from_name(&name), name };
        let jty = ty.ty.clone();
        Ok(self.mk(span, jty, ExprKind::New { ty, args }))
    }

    fn name_expr(&mut self) -> BResult<Expr> {
        let span = self.p.span();
        let name = self.p.name()?;
        if self.p.peek().is("->") {
            return self.violation("lambda expression");
        }
        if let Some(slot) = self.lookup(&name) {
            let ty = self.slots[slot as usize].ty.clone();
            return Ok(self.mk(span, ty, ExprKind::Local(slot)));
        }
        if self.p.peek().is("(") {
            let args = self.args()?;
            let ty = self.call_type(&Receiver::Implicit, &name, args.len());
            return Ok(self.mk(span, ty, ExprKind::Call { receiver: Receiver::Implicit, method: name, args }));
        }
        // A dotted path that does not start with a variable names a class.
        let mut path = name;
        loop {
            if !self.p.peek().is(".") || self.p.peek_at(1).ident().is_none() {
                return Err(Fail::Violation(SubsetViolation { span, construct: "field access".into() }));
            }
            let after = self.p.peek_at(2);
            if after.is("(") {
                break;
            }
            self.p.bump();
            path.push('.');
            path.push_str(&self.p.name()?);
        }
        if path.starts_with(|c: char| c.is_ascii_lowercase()) && !path.contains('.') {
            return Err(Fail::Violation(SubsetViolation { span, construct: "field access".into() }));
        }
        self.p.bump();
        let method = self.p.name()?;
        let args = self.args()?;
        let receiver = Receiver::Static(path);
        let ty = self.call_type(&receiver, &method, args.len());
        Ok(self.mk(span, ty, ExprKind::Call { receiver, method, args }))
    }
}

fn static_call_type(path: &str, method: &str) -> Option<JType> {
    let simple = path.rsplit('.').next().unwrap_or(path);
    Some(match (simple, method) {
        ("Integer", "parseInt") | ("Integer", "valueOf") | ("Math", "abs") => JType::Int,
        ("Long", "parseLong") | ("Long", "valueOf") => JType::Long,
        ("Boolean", "parseBoolean") => JType::Boolean,
        ("String", "valueOf") | ("String", "format") | ("String", "join") => JType::String,
        ("DriverManager", "getConnection") => JType::Connection,
        _ => return None,
    })
}

fn promote(a: &JType, b: &JType) -> JType {
    match (a, b) {
        (JType::Double, _) | (_, JType::Double) => JType::Double,
        (JType::Long, _) | (_, JType::Long) => JType::Long,
        (JType::Int | JType::Char, JType::Int | JType::Char) => JType::Int,
        (JType::Boolean, JType::Boolean) => JType::Boolean,
        _ => JType::Other("?".into()),
    }
}

fn binary_type(op: BinaryOp, a: &JType, b: &JType) -> JType {
    match op {
        BinaryOp::Add if *a == JType::String || *b == JType::String => JType::String,
        BinaryOp::Eq
        | BinaryOp::Ne
        | BinaryOp::Lt
        | BinaryOp::Le
        | BinaryOp::Gt
        | BinaryOp::Ge
        | BinaryOp::And
        | BinaryOp::Or => JType::Boolean,
        BinaryOp::Shl | BinaryOp::Shr | BinaryOp::UShr => promote(a, a),
        _ => promote(a, b),
    }
}
