use std::fmt::Write;

use super::ast::*;

/// Renders a compilation unit as Java source. Sub-expressions are fully
/// parenthesized; skipped method bodies are rendered empty.
pub fn render_java(cu: &CompilationUnit) -> String {
    let mut out = String::new();
    for class in &cu.classes {
        let _ = writeln!(out, "class {} {{", class.name);
        for m in &class.methods {
            render_method(&mut out, m);
        }
        out.push_str("}\n");
    }
    out
}

fn render_method(out: &mut String, m: &MethodDecl) {
    out.push_str("    ");
    if let Some(a) = &m.return_annotation {
        let _ = write!(out, "{} ", a.text);
    }
    if m.is_static {
        out.push_str("static ");
    }
    let params: Vec<String> = m
        .params
        .iter()
        .map(|p| match &p.annotation {
            Some(a) => format!("{} {} {}", a.text, p.ty.name, p.name),
            None => format!("{} {}", p.ty.name, p.name),
        })
        .collect();
    let _ = write!(out, "{} {}({})", m.return_type.name, m.name, params.join(", "));
    match &m.body {
        MethodBody::Absent => out.push_str(";\n"),
        MethodBody::Skipped(_) => out.push_str(" {\n    }\n"),
        MethodBody::Block(b) => {
            out.push_str(" {\n");
            for s in &b.stmts {
                render_stmt(out, m, s, 2);
            }
            out.push_str("    }\n");
        }
    }
}

fn indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str("    ");
    }
}

fn render_stmt(out: &mut String, m: &MethodDecl, s: &Stmt, depth: usize) {
    indent(out, depth);
    match &s.kind {
        StmtKind::Local { slot, init } => {
            let info = &m.slots[*slot as usize];
            let _ = write!(out, "{} {}", type_name(&info.ty), info.name);
            if let Some(e) = init {
                let _ = write!(out, " = {}", expr(m, e));
            }
            out.push_str(";\n");
        }
        StmtKind::Expr(e) => {
            let _ = writeln!(out, "{};", expr(m, e));
        }
        StmtKind::Return(None) => out.push_str("return;\n"),
        StmtKind::Return(Some(e)) => {
            let _ = writeln!(out, "return {};", expr(m, e));
        }
        StmtKind::Empty => out.push_str(";\n"),
        StmtKind::Block(b) => {
            out.push_str("{\n");
            for s in &b.stmts {
                render_stmt(out, m, s, depth + 1);
            }
            indent(out, depth);
            out.push_str("}\n");
        }
        StmtKind::If { cond, then, otherwise } => {
            let _ = writeln!(out, "if ({}) {{", expr(m, cond));
            render_stmt(out, m, then, depth + 1);
            indent(out, depth);
            if let Some(o) = otherwise {
                out.push_str("} else {\n");
                render_stmt(out, m, o, depth + 1);
                indent(out, depth);
            }
            out.push_str("}\n");
        }
        StmtKind::While { cond, body } => {
            let _ = writeln!(out, "while ({}) {{", expr(m, cond));
            render_stmt(out, m, body, depth + 1);
            indent(out, depth);
            out.push_str("}\n");
        }
    }
}

fn type_name(ty: &JType) -> String {
    match ty {
        JType::Null => "Object".into(),
        JType::Other(s) if s == "?" => "var".into(),
        other => other.to_string(),
    }
}

fn quote(s: &str, q: char) -> String {
    let mut out = String::new();
    out.push(q);
    for c in s.chars() {
        match c {
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            '\\' => out.push_str("\\\\"),
            '"' if q == '"' => out.push_str("\\\""),
            '\'' if q == '\'' => out.push_str("\\'"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push(q);
    out
}

fn expr(m: &MethodDecl, e: &Expr) -> String {
    match &e.kind {
        ExprKind::Lit(l) => match l {
            Literal::Int(n) => n.to_string(),
            Literal::Long(n) => format!("{n}L"),
            Literal::Float(s) => s.clone(),
            Literal::Str(s) => quote(s, '"'),
            Literal::Char(c) => quote(&c.to_string(), '\''),
            Literal::Bool(b) => b.to_string(),
            Literal::Null => "null".into(),
        },
        ExprKind::Local(slot) => m.slots[*slot as usize].name.clone(),
        ExprKind::Assign { slot, op, value } => {
            let op = match op {
                AssignOp::Set => "=",
                AssignOp::Add => "+=",
                AssignOp::Sub => "-=",
                AssignOp::Other => "*=",
            };
            format!("{} {op} {}", m.slots[*slot as usize].name, expr(m, value))
        }
        ExprKind::IncDec { slot, delta, prefix } => {
            let op = if *delta > 0 { "++" } else { "--" };
            let name = &m.slots[*slot as usize].name;
            if *prefix {
                format!("{op}{name}")
            } else {
                format!("{name}{op}")
            }
        }
        ExprKind::Unary { op, expr: x } => {
            let op = match op {
                UnaryOp::Neg => "-",
                UnaryOp::Plus => "+",
                UnaryOp::Not => "!",
                UnaryOp::BitNot => "~",
            };
            format!("({op}{})", expr(m, x))
        }
        ExprKind::Binary { op, lhs, rhs } => {
            let op = match op {
                BinaryOp::Add => "+",
                BinaryOp::Sub => "-",
                BinaryOp::Mul => "*",
                BinaryOp::Div => "/",
                BinaryOp::Rem => "%",
                BinaryOp::Eq => "==",
                BinaryOp::Ne => "!=",
                BinaryOp::Lt => "<",
                BinaryOp::Le => "<=",
                BinaryOp::Gt => ">",
                BinaryOp::Ge => ">=",
                BinaryOp::And => "&&",
                BinaryOp::Or => "||",
                BinaryOp::BitAnd => "&",
                BinaryOp::BitOr => "|",
                BinaryOp::BitXor => "^",
                BinaryOp::Shl => "<<",
                BinaryOp::Shr => ">>",
                BinaryOp::UShr => ">>>",
            };
            format!("({} {op} {})", expr(m, lhs), expr(m, rhs))
        }
        ExprKind::Cast { ty, expr: x } => format!("(({}) {})", ty.name, expr(m, x)),
        ExprKind::New { ty, args } => format!("new {}({})", ty.name, list(m, args)),
        ExprKind::Call { receiver, method, args } => match receiver {
            Receiver::Implicit => format!("{method}({})", list(m, args)),
            Receiver::Static(path) => format!("{path}.{method}({})", list(m, args)),
            Receiver::Expr(r) => format!("{}.{method}({})", expr(m, r), list(m, args)),
        },
    }
}

fn list(m: &MethodDecl, args: &[Expr]) -> String {
    args.iter().map(|a| expr(m, a)).collect::<Vec<_>>().join(", ")
}
