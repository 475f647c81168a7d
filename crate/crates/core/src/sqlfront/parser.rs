use thiserror::Error;

use super::ast::*;
use super::lexer::{tokenize, Tok, Token};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SqlParseError {
    /// Malformed statement text.
    #[error("SQL syntax error at offset {position}: expected {expected}, found {found}")]
    Syntax { position: usize, expected: String, found: String },
    /// Valid SQL that lies outside the analyzed subset.
    #[error("unsupported SQL construct {construct} at offset {position}")]
    Unsupported { construct: String, position: usize },
}

/// Words that can never be an implicit alias or a bare column name.
const RESERVED: &[&str] = &[
    "SELECT", "FROM", "WHERE", "AND", "OR", "NOT", "ORDER", "BY", "LIMIT", "OFFSET", "GROUP", "HAVING",
    "JOIN", "INNER", "LEFT", "RIGHT", "FULL", "CROSS", "NATURAL", "OUTER", "ON", "UNION", "INTERSECT",
    "EXCEPT", "SET", "VALUES", "INTO", "INSERT", "UPDATE", "DELETE", "AS", "IN", "IS", "NULL", "LIKE",
    "BETWEEN", "DISTINCT", "CASE", "WHEN", "THEN", "ELSE", "END", "EXISTS", "ASC", "DESC", "TRUE", "FALSE",
    "WITH",
];

const JOIN_WORDS: &[&str] = &["JOIN", "INNER", "LEFT", "RIGHT", "FULL", "CROSS", "NATURAL", "OUTER"];
const OTHER_VERBS: &[&str] = &[
    "CREATE", "DROP", "ALTER", "SHOW", "MERGE", "CALL", "TRUNCATE", "REPLACE", "UPSERT", "EXPLAIN", "GRANT",
    "WITH", "VALUES",
];

fn is_reserved(word: &str) -> bool {
    RESERVED.iter().any(|r| word.eq_ignore_ascii_case(r))
}

pub fn parse_sql(text: &str) -> Result<SqlAst, SqlParseError> {
    let tokens = tokenize(text).map_err(|e| SqlParseError::Syntax {
        position: e.offset,
        expected: "a token".into(),
        found: e.message,
    })?;
    let mut p = Parser { tokens: &tokens, pos: 0 };
    let ast = p.statement()?;
    if p.peek().is_sym(";") {
        p.bump();
    }
    if !matches!(p.peek().tok, Tok::Eof) {
        return Err(p.unexpected_tail());
    }
    Ok(ast)
}

struct Parser<'t> {
    tokens: &'t [Token],
    pos: usize,
}

type PResult<T> = Result<T, SqlParseError>;

impl<'t> Parser<'t> {
    fn peek(&self) -> &'t Token {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, n: usize) -> &'t Token {
        &self.tokens[(self.pos + n).min(self.tokens.len() - 1)]
    }

    fn bump(&mut self) -> &'t Token {
        let t = &self.tokens[self.pos];
        if !matches!(t.tok, Tok::Eof) {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> SqlParseError {
        let t = self.peek();
        SqlParseError::Syntax { position: t.offset, expected: expected.into(), found: t.tok.to_string() }
    }

    fn unsupported(&self, construct: impl Into<String>) -> SqlParseError {
        SqlParseError::Unsupported { construct: construct.into(), position: self.peek().offset }
    }

    /// Trailing tokens after a complete statement: clauses we recognise but do
    /// not model are reported as unsupported, anything else is a syntax error.
    fn unexpected_tail(&self) -> SqlParseError {
        let t = self.peek();
        for w in ["GROUP", "HAVING", "UNION", "INTERSECT", "EXCEPT", "FOR", "RETURNING", "ON"] {
            if t.is_word(w) {
                return self.unsupported(w);
            }
        }
        if JOIN_WORDS.iter().any(|w| t.is_word(w)) {
            return self.unsupported("JOIN");
        }
        if t.is_sym(",") {
            return self.unsupported("multi-table FROM");
        }
        self.error("end of statement")
    }

    fn eat_word(&mut self, kw: &str) -> bool {
        if self.peek().is_word(kw) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        if self.eat_word(kw) {
            Ok(())
        } else {
            Err(self.error(kw))
        }
    }

    fn eat_sym(&mut self, s: &str) -> bool {
        if self.peek().is_sym(s) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn sym(&mut self, s: &str) -> PResult<()> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            Err(self.error(&format!("`{s}`")))
        }
    }

    fn ident(&mut self, what: &str) -> PResult<(String, usize)> {
        let t = self.peek();
        match &t.tok {
            Tok::Word(w) if !is_reserved(w) => {
                self.bump();
                Ok((w.clone(), t.offset))
            }
            _ => Err(self.error(what)),
        }
    }

    fn statement(&mut self) -> PResult<SqlAst> {
        let t = self.peek();
        if t.is_word("SELECT") {
            return self.select().map(SqlAst::Select);
        }
        if t.is_word("INSERT") {
            return self.insert().map(SqlAst::Insert);
        }
        if t.is_word("UPDATE") {
            return self.update().map(SqlAst::Update);
        }
        if t.is_word("DELETE") {
            return self.delete().map(SqlAst::Delete);
        }
        if let Tok::Word(w) = &t.tok {
            if OTHER_VERBS.iter().any(|v| w.eq_ignore_ascii_case(v)) {
                return Err(self.unsupported(w.to_ascii_uppercase()));
            }
        }
        Err(self.error("SELECT, INSERT, UPDATE or DELETE"))
    }

    fn table_ref(&mut self, allow_alias: bool) -> PResult<TableRef> {
        if self.peek().is_sym("(") {
            return Err(self.unsupported("subquery"));
        }
        let (name, offset) = self.ident("a table name")?;
        if self.peek().is_sym(".") {
            return Err(self.unsupported("schema-qualified table"));
        }
        let mut alias = None;
        if allow_alias {
            if self.eat_word("AS") {
                alias = Some(self.ident("a table alias")?.0);
            } else if let Tok::Word(w) = &self.peek().tok {
                if !is_reserved(w) {
                    alias = Some(w.clone());
                    self.bump();
                }
            }
        }
        Ok(TableRef { name, alias, offset })
    }

    fn column_ref(&mut self) -> PResult<ColumnRef> {
        let (first, offset) = self.ident("a column name")?;
        if self.peek().is_sym("(") {
            return Err(SqlParseError::Unsupported { construct: format!("function {first}()"), position: offset });
        }
        if self.eat_sym(".") {
            let (name, _) = self.ident("a column name")?;
            return Ok(ColumnRef { qualifier: Some(first), name, offset });
        }
        Ok(ColumnRef { qualifier: None, name: first, offset })
    }

    fn select(&mut self) -> PResult<Select> {
        self.keyword("SELECT")?;
        let distinct = self.eat_word("DISTINCT");
        if !distinct {
            self.eat_word("ALL");
        }
        let mut items = vec![self.select_item()?];
        while self.eat_sym(",") {
            items.push(self.select_item()?);
        }
        self.keyword("FROM")?;
        let from = self.table_ref(true)?;
        if JOIN_WORDS.iter().any(|w| self.peek().is_word(w)) {
            return Err(self.unsupported("JOIN"));
        }
        if self.peek().is_sym(",") {
            return Err(self.unsupported("multi-table FROM"));
        }
        let filter = if self.eat_word("WHERE") { Some(self.expr()?) } else { None };
        if self.peek().is_word("GROUP") {
            return Err(self.unsupported("GROUP BY"));
        }
        if self.peek().is_word("HAVING") {
            return Err(self.unsupported("HAVING"));
        }
        let mut order_by = Vec::new();
        if self.eat_word("ORDER") {
            self.keyword("BY")?;
            loop {
                order_by.push(self.column_ref()?);
                if !self.eat_word("ASC") {
                    self.eat_word("DESC");
                }
                if !self.eat_sym(",") {
                    break;
                }
            }
        }
        let limit = if self.eat_word("LIMIT") {
            let e = self.primary()?;
            if self.eat_word("OFFSET") {
                self.primary()?;
            }
            Some(e)
        } else {
            None
        };
        Ok(Select { distinct, items, from, filter, order_by, limit })
    }

    fn select_item(&mut self) -> PResult<SelectItem> {
        if self.eat_sym("*") {
            return Ok(SelectItem::Star(None));
        }
        let t = self.peek();
        match &t.tok {
            Tok::Word(w) if w.eq_ignore_ascii_case("CASE") => return Err(self.unsupported("CASE")),
            Tok::Word(w) if !is_reserved(w) => {}
            Tok::Sym("(") => {
                if self.peek_at(1).is_word("SELECT") {
                    return Err(self.unsupported("subquery"));
                }
                return Err(self.unsupported("expression in select list"));
            }
            Tok::Number(_) | Tok::Str(_) | Tok::Placeholder(_) => {
                return Err(self.unsupported("expression in select list"))
            }
            _ => return Err(self.error("a select list item")),
        }
        if self.peek_at(1).is_sym(".") && self.peek_at(2).is_sym("*") {
            let (q, _) = self.ident("a table name")?;
            self.bump();
            self.bump();
            return Ok(SelectItem::Star(Some(q)));
        }
        let column = self.column_ref()?;
        if matches!(&self.peek().tok, Tok::Sym("+" | "-" | "*" | "/" | "||")) {
            return Err(self.unsupported("expression in select list"));
        }
        let alias = if self.eat_word("AS") { Some(self.ident("a column alias")?.0) } else { None };
        Ok(SelectItem::Column { column, alias })
    }

    fn insert(&mut self) -> PResult<Insert> {
        self.keyword("INSERT")?;
        self.keyword("INTO")?;
        let table = self.table_ref(false)?;
        let columns = if self.eat_sym("(") {
            let mut cols = vec![self.column_ref()?];
            while self.eat_sym(",") {
                cols.push(self.column_ref()?);
            }
            self.sym(")")?;
            Some(cols)
        } else {
            None
        };
        if self.peek().is_word("SELECT") {
            return Err(self.unsupported("INSERT ... SELECT"));
        }
        self.keyword("VALUES")?;
        self.sym("(")?;
        let mut values = vec![self.expr()?];
        while self.eat_sym(",") {
            values.push(self.expr()?);
        }
        self.sym(")")?;
        if self.peek().is_sym(",") {
            return Err(self.unsupported("multi-row VALUES"));
        }
        Ok(Insert { table, columns, values })
    }

    fn update(&mut self) -> PResult<Update> {
        self.keyword("UPDATE")?;
        let table = self.table_ref(true)?;
        self.keyword("SET")?;
        let mut assignments = Vec::new();
        loop {
            let col = self.column_ref()?;
            self.sym("=")?;
            let value = self.arith()?;
            assignments.push((col, value));
            if !self.eat_sym(",") {
                break;
            }
        }
        let filter = if self.eat_word("WHERE") { Some(self.expr()?) } else { None };
        Ok(Update { table, assignments, filter })
    }

    fn delete(&mut self) -> PResult<Delete> {
        self.keyword("DELETE")?;
        self.keyword("FROM")?;
        let table = self.table_ref(true)?;
        let filter = if self.eat_word("WHERE") { Some(self.expr()?) } else { None };
        Ok(Delete { table, filter })
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.and_expr()?;
        while self.eat_word("OR") {
            let rhs = self.and_expr()?;
            lhs = Expr::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and_expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.not_expr()?;
        while self.eat_word("AND") {
            let rhs = self.not_expr()?;
            lhs = Expr::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn not_expr(&mut self) -> PResult<Expr> {
        if self.eat_word("NOT") {
            return Ok(Expr::Not(Box::new(self.not_expr()?)));
        }
        self.predicate()
    }

    fn predicate(&mut self) -> PResult<Expr> {
        if self.peek().is_word("EXISTS") {
            return Err(self.unsupported("EXISTS"));
        }
        let lhs = self.arith()?;
        let cmp = match &self.peek().tok {
            Tok::Sym("=") => Some(CmpOp::Eq),
            Tok::Sym("<>") | Tok::Sym("!=") => Some(CmpOp::Ne),
            Tok::Sym("<") => Some(CmpOp::Lt),
            Tok::Sym("<=") => Some(CmpOp::Le),
            Tok::Sym(">") => Some(CmpOp::Gt),
            Tok::Sym(">=") => Some(CmpOp::Ge),
            _ => None,
        };
        if let Some(op) = cmp {
            self.bump();
            if self.peek().is_word("ANY") || self.peek().is_word("ALL") || self.peek().is_word("SOME") {
                return Err(self.unsupported("quantified comparison"));
            }
            let rhs = self.arith()?;
            return Ok(Expr::Compare { op, lhs: Box::new(lhs), rhs: Box::new(rhs) });
        }
        if self.eat_word("IS") {
            let negated = self.eat_word("NOT");
            self.keyword("NULL")?;
            return Ok(Expr::IsNull { expr: Box::new(lhs), negated });
        }
        let negated = self.eat_word("NOT");
        if self.eat_word("BETWEEN") {
            let low = self.arith()?;
            self.keyword("AND")?;
            let high = self.arith()?;
            return Ok(Expr::Between { expr: Box::new(lhs), low: Box::new(low), high: Box::new(high), negated });
        }
        if self.eat_word("IN") {
            self.sym("(")?;
            if self.peek().is_word("SELECT") {
                return Err(self.unsupported("subquery"));
            }
            let mut list = vec![self.arith()?];
            while self.eat_sym(",") {
                list.push(self.arith()?);
            }
            self.sym(")")?;
            return Ok(Expr::InList { expr: Box::new(lhs), list, negated });
        }
        if self.eat_word("LIKE") {
            let pattern = self.arith()?;
            return Ok(Expr::Like { expr: Box::new(lhs), pattern: Box::new(pattern), negated });
        }
        if negated {
            return Err(self.error("BETWEEN, IN or LIKE"));
        }
        Ok(lhs)
    }

    fn arith(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = match &self.peek().tok {
                Tok::Sym("+") => ArithOp::Add,
                Tok::Sym("-") => ArithOp::Sub,
                Tok::Sym("||") => ArithOp::Concat,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::Arith { op, lhs: Box::new(lhs), rhs: Box::new(rhs) };
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.primary()?;
        loop {
            let op = match &self.peek().tok {
                Tok::Sym("*") => ArithOp::Mul,
                Tok::Sym("/") => ArithOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.primary()?;
            lhs = Expr::Arith { op, lhs: Box::new(lhs), rhs: Box::new(rhs) };
        }
    }

    fn primary(&mut self) -> PResult<Expr> {
        let t = self.peek();
        match &t.tok {
            Tok::Placeholder(n) => {
                self.bump();
                Ok(Expr::Placeholder(*n))
            }
            Tok::Number(n) => {
                self.bump();
                Ok(Expr::Literal(Literal::Number(n.clone())))
            }
            Tok::Str(s) => {
                self.bump();
                Ok(Expr::Literal(Literal::Str(s.clone())))
            }
            Tok::Sym("-") => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.primary()?)))
            }
            Tok::Sym("(") => {
                if self.peek_at(1).is_word("SELECT") {
                    return Err(self.unsupported("subquery"));
                }
                self.bump();
                let e = self.expr()?;
                self.sym(")")?;
                Ok(e)
            }
            Tok::Word(w) if w.eq_ignore_ascii_case("NULL") => {
                self.bump();
                Ok(Expr::Literal(Literal::Null))
            }
            Tok::Word(w) if w.eq_ignore_ascii_case("TRUE") || w.eq_ignore_ascii_case("FALSE") => {
                self.bump();
                Ok(Expr::Literal(Literal::Bool(w.eq_ignore_ascii_case("TRUE"))))
            }
            Tok::Word(w) if w.eq_ignore_ascii_case("CASE") => Err(self.unsupported("CASE")),
            Tok::Word(_) => self.column_ref().map(Expr::Column),
            _ => Err(self.error("an expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn select_with_placeholder() {
        let ast = parse_sql("SELECT label FROM warehouse WHERE qty = ?").unwrap();
        assert_eq!(ast.kind(), StatementKind::Select);
        assert_eq!(ast.placeholders(), vec![1]);
    }

    #[test]
    fn form_typo_is_syntax_error_at_form() {
        match parse_sql("SELECT * FORM warehouse").unwrap_err() {
            SqlParseError::Syntax { position, expected, found } => {
                assert_eq!(position, 9);
                assert_eq!(expected, "FROM");
                assert_eq!(found, "`FORM`");
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn insert_with_column_list() {
        let ast = parse_sql("INSERT INTO genre (id, name) VALUES (?,?)").unwrap();
        assert_eq!(ast.kind(), StatementKind::Insert);
        assert_eq!(ast.placeholders(), vec![1, 2]);
    }

    #[test]
    fn keywords_are_case_insensitive() {
        assert!(parse_sql("select * from stock where s_i_id = ? and s_w_id = ?;").is_ok());
        assert!(parse_sql("Select * from employe").is_ok());
    }

    #[test]
    fn unsupported_constructs() {
        for sql in [
            "select count(*) from USERS",
            "SELECT a FROM t JOIN u ON t.x = u.x",
            "SELECT a FROM t, u",
            "SELECT a FROM t GROUP BY a",
            "SELECT a FROM t WHERE a IN (SELECT b FROM u)",
            "WITH x AS (SELECT a FROM t) SELECT a FROM x",
            "DROP TABLE t",
            "INSERT INTO t VALUES (1), (2)",
            "SELECT a FROM t UNION SELECT a FROM u",
        ] {
            assert!(
                matches!(parse_sql(sql), Err(SqlParseError::Unsupported { .. })),
                "{sql} should be unsupported, got {:?}",
                parse_sql(sql)
            );
        }
    }

    #[test]
    fn syntax_errors() {
        for sql in ["", "SELEC a FROM t", "SELECT FROM t", "SELECT a FROM", "UPDATE t SET a ?", "SELECT a FROM t WHERE"] {
            assert!(matches!(parse_sql(sql), Err(SqlParseError::Syntax { .. })), "{sql}");
        }
    }

    #[test]
    fn where_tree_shapes() {
        let ast = parse_sql(
            "SELECT a FROM t WHERE NOT (a = ? OR b BETWEEN ? AND ?) AND c IN (?, 3) AND d IS NOT NULL AND e LIKE 'x%'",
        )
        .unwrap();
        assert_eq!(ast.placeholders(), vec![1, 2, 3, 4]);
    }
}
