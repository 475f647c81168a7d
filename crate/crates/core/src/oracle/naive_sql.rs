//! A deliberately simple statement reader used only by the oracle. It walks
//! tokens and the schema directly and shares no code with `sqlfront`.

use crate::schema::{SchemaCatalog, SqlKind, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verb {
    Select,
    Insert,
    Update,
    Delete,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prepared {
    pub verb: Verb,
    pub table: String,
    pub inputs: Vec<SqlKind>,
    pub outputs: Vec<(String, SqlKind)>,
    /// Table column position of each output.
    pub sources: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NaiveError {
    /// The statement would be rejected by the database.
    Malformed(String),
    /// Valid SQL this reader does not model.
    Unmodeled(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum T {
    Word(String),
    Num,
    Text,
    P(&'static str),
}

fn lex(s: &str) -> Result<Vec<T>, NaiveError> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '-' && cs.get(i + 1) == Some(&'-') {
            while i < cs.len() && cs[i] != '\n' {
                i += 1;
            }
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(T::Word(cs[st..i].iter().collect()));
        } else if c.is_ascii_digit() {
            while i < cs.len() && (cs[i].is_ascii_digit() || cs[i] == '.') {
                i += 1;
            }
            out.push(T::Num);
        } else if c == '\'' {
            i += 1;
            loop {
                match cs.get(i) {
                    None => return Err(NaiveError::Malformed("unterminated string".into())),
                    Some('\'') if cs.get(i + 1) == Some(&'\'') => i += 2,
                    Some('\'') => break,
                    _ => i += 1,
                }
            }
            i += 1;
            out.push(T::Text);
        } else {
            let two: String = cs[i..(i + 2).min(cs.len())].iter().collect();
            let p = match two.as_str() {
                "<=" => Some("<="),
                ">=" => Some(">="),
                "<>" => Some("<>"),
                "!=" => Some("!="),
                _ => None,
            };
            if let Some(p) = p {
                out.push(T::P(p));
                i += 2;
                continue;
            }
            let p = match c {
                ',' => ",",
                '(' => "(",
                ')' => ")",
                '*' => "*",
                '?' => "?",
                '=' => "=",
                '<' => "<",
                '>' => ">",
                '.' => ".",
                '+' => "+",
                '-' => "-",
                '/' => "/",
                '%' => "%",
                ';' => ";",
                _ => return Err(NaiveError::Malformed(format!("unexpected character {c:?}"))),
            };
            out.push(T::P(p));
            i += 1;
        }
    }
    if out.last() == Some(&T::P(";")) {
        out.pop();
    }
    Ok(out)
}

fn is_word(t: Option<&T>, w: &str) -> bool {
    matches!(t, Some(T::Word(x)) if x.eq_ignore_ascii_case(w))
}

const KEYWORDS: &[&str] = &[
    "select", "from", "where", "and", "or", "not", "is", "null", "like", "in", "between", "order", "by", "asc",
    "desc", "limit", "offset", "true", "false", "escape", "as", "distinct", "set", "values", "into", "insert",
    "update", "delete", "all",
];

fn is_keyword(w: &str) -> bool {
    KEYWORDS.iter().any(|k| k.eq_ignore_ascii_case(w))
}

const COMPARE: &[&str] = &["=", "<", ">", "<=", ">=", "<>", "!="];

fn malformed(msg: impl Into<String>) -> NaiveError {
    NaiveError::Malformed(msg.into())
}

struct Target<'c> {
    table: &'c Table,
    alias: Option<String>,
}

impl Target<'_> {
    fn kind(&self, col: &str) -> Result<SqlKind, NaiveError> {
        self.table
            .columns
            .iter()
            .find(|c| c.name.eq_ignore_ascii_case(col))
            .map(|c| c.ty.kind)
            .ok_or_else(|| malformed(format!("no column {col} in {}", self.table.name)))
    }

    fn qualifier_ok(&self, q: &str) -> bool {
        match &self.alias {
            Some(a) => a.eq_ignore_ascii_case(q),
            None => self.table.name.eq_ignore_ascii_case(q),
        }
    }
}

fn table<'c>(catalog: &'c SchemaCatalog, name: &str) -> Result<&'c Table, NaiveError> {
    catalog
        .tables()
        .iter()
        .find(|t| t.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| malformed(format!("no table {name}")))
}

fn word(toks: &[T], i: usize) -> Result<String, NaiveError> {
    match toks.get(i) {
        Some(T::Word(w)) if !is_keyword(w) => Ok(w.clone()),
        _ => Err(malformed(format!("expected a name at token {i}"))),
    }
}

/// Reads `name [[AS] alias]` starting at `i`; returns the next index.
fn table_ref<'c>(catalog: &'c SchemaCatalog, toks: &[T], mut i: usize) -> Result<(Target<'c>, usize), NaiveError> {
    let t = table(catalog, &word(toks, i)?)?;
    i += 1;
    let mut alias = None;
    if is_word(toks.get(i), "as") {
        alias = Some(word(toks, i + 1)?);
        i += 2;
    } else if let Some(T::Word(w)) = toks.get(i) {
        if !is_keyword(w) {
            alias = Some(w.clone());
            i += 1;
        }
    }
    Ok((Target { table: t, alias }, i))
}

/// Column references (with optional qualifier) in a token range; checks each
/// against the target. Names in `extra` are accepted as well.
fn check_columns(target: &Target, toks: &[T], extra: &[String]) -> Result<(), NaiveError> {
    let mut i = 0;
    while i < toks.len() {
        if let T::Word(w) = &toks[i] {
            if toks.get(i + 1) == Some(&T::P("(")) && !is_keyword(w) {
                return Err(NaiveError::Unmodeled(format!("function {w}")));
            }
            if !is_keyword(w) {
                if toks.get(i + 1) == Some(&T::P(".")) {
                    if !target.qualifier_ok(w) {
                        return Err(malformed(format!("unknown qualifier {w}")));
                    }
                    let col = word(toks, i + 2)?;
                    target.kind(&col)?;
                    i += 3;
                    continue;
                }
                if !extra.iter().any(|x| x.eq_ignore_ascii_case(w)) {
                    target.kind(w)?;
                }
            }
        }
        i += 1;
    }
    Ok(())
}

/// The column a placeholder at `p` is compared with, bounded by, or listed against.
fn anchor(toks: &[T], p: usize) -> Option<String> {
    let at = |i: Option<usize>| i.and_then(|i| toks.get(i));
    let arith = |i: Option<usize>| matches!(at(i), Some(T::P("+" | "-" | "*" | "/" | "%")));
    let cmp = |i: Option<usize>| matches!(at(i), Some(T::P(x)) if COMPARE.contains(x));
    let kw = |i: Option<usize>, k: &str| is_word(at(i), k);
    let col = |i: Option<usize>| match at(i) {
        Some(T::Word(w)) if !is_keyword(w) => Some(w.clone()),
        _ => None,
    };
    let back = |k: usize| p.checked_sub(k);
    let ahead = |k: usize| Some(p + k);

    if arith(back(1)) || arith(ahead(1)) {
        return None;
    }
    if cmp(back(1)) {
        return if arith(back(3)) { None } else { col(back(2)) };
    }
    if cmp(ahead(1)) {
        // `? op q.col` or `? op col`
        return if at(ahead(3)) == Some(&T::P(".")) {
            if arith(ahead(5)) { None } else { col(ahead(4)) }
        } else if arith(ahead(3)) {
            None
        } else {
            col(ahead(2))
        };
    }
    let between_col = |b: Option<usize>| {
        let b = b?;
        if kw(b.checked_sub(1), "not") {
            col(b.checked_sub(2))
        } else {
            col(b.checked_sub(1))
        }
    };
    if kw(back(1), "between") {
        return between_col(back(1));
    }
    if kw(back(1), "and") && kw(back(3), "between") {
        return between_col(back(3));
    }
    let mut j = p;
    while j > 0 {
        j -= 1;
        match &toks[j] {
            T::P("(") => {
                if !kw(Some(j).and_then(|j| j.checked_sub(1)), "in") {
                    return None;
                }
                let before_in = j.checked_sub(2);
                return if kw(before_in, "not") { col(j.checked_sub(3)) } else { col(before_in) };
            }
            T::P(",") | T::P("?") | T::Num | T::Text => {}
            _ => return None,
        }
    }
    None
}

fn type_placeholders(target: &Target, toks: &[T], inputs: &mut Vec<SqlKind>) -> Result<(), NaiveError> {
    for (p, t) in toks.iter().enumerate() {
        if *t == T::P("?") {
            let col = anchor(toks, p).ok_or_else(|| NaiveError::Unmodeled("placeholder without a column".into()))?;
            inputs.push(target.kind(&col)?);
        }
    }
    Ok(())
}

/// Splits the clause after WHERE at ORDER BY / LIMIT.
fn split_tail(toks: &[T]) -> (&[T], &[T], &[T]) {
    let order = toks.iter().position(|t| is_word(Some(t), "order")).unwrap_or(toks.len());
    let limit = toks.iter().position(|t| is_word(Some(t), "limit")).unwrap_or(toks.len());
    let (a, b) = (order.min(limit), order.max(limit));
    if order <= limit {
        (&toks[..a], &toks[a..b], &toks[b..])
    } else {
        (&toks[..a], &toks[b..], &toks[a..b])
    }
}

pub fn prepare(sql: &str, catalog: &SchemaCatalog) -> Result<Prepared, NaiveError> {
    let toks = lex(sql)?;
    let first = match toks.first() {
        Some(T::Word(w)) => w.to_ascii_lowercase(),
        _ => return Err(malformed("empty statement")),
    };
    match first.as_str() {
        "select" => select(&toks, catalog),
        "insert" => insert(&toks, catalog),
        "update" => update(&toks, catalog),
        "delete" => delete(&toks, catalog),
        _ => Err(malformed(format!("unknown statement {first}"))),
    }
}

fn where_clause(target: &Target, toks: &[T], outputs: &[String], inputs: &mut Vec<SqlKind>) -> Result<(), NaiveError> {
    if toks.is_empty() {
        return Ok(());
    }
    if !is_word(toks.first(), "where") && !is_word(toks.first(), "order") && !is_word(toks.first(), "limit") {
        return Err(malformed("unexpected tokens after table"));
    }
    let body = if is_word(toks.first(), "where") { &toks[1..] } else { toks };
    let (cond, order, limit) = split_tail(body);
    if is_word(toks.first(), "where") && cond.is_empty() {
        return Err(malformed("empty WHERE"));
    }
    check_columns(target, cond, &[])?;
    type_placeholders(target, cond, inputs)?;
    if !order.is_empty() {
        if !is_word(order.get(1), "by") {
            return Err(malformed("ORDER without BY"));
        }
        check_columns(target, &order[2..], outputs)?;
    }
    if limit.contains(&T::P("?")) {
        return Err(NaiveError::Unmodeled("placeholder in LIMIT".into()));
    }
    Ok(())
}

fn select(toks: &[T], catalog: &SchemaCatalog) -> Result<Prepared, NaiveError> {
    let from = toks
        .iter()
        .position(|t| is_word(Some(t), "from"))
        .ok_or_else(|| malformed("SELECT without FROM"))?;
    let mut items = &toks[1..from];
    if is_word(items.first(), "distinct") || is_word(items.first(), "all") {
        items = &items[1..];
    }
    if items.contains(&T::P("(")) {
        return Err(NaiveError::Unmodeled("expression in select list".into()));
    }
    let (target, next) = table_ref(catalog, toks, from + 1)?;
    if toks.get(next) == Some(&T::P(",")) || is_word(toks.get(next), "join") {
        return Err(NaiveError::Unmodeled("several tables".into()));
    }
    let mut outputs = Vec::new();
    let mut sources = Vec::new();
    let all = target.table.columns.len();
    for item in items.split(|t| *t == T::P(",")) {
        match item {
            [T::P("*")] => {
                outputs.extend(target.table.columns.iter().map(|c| (c.name.clone(), c.ty.kind)));
                sources.extend(0..all);
            }
            [T::Word(q), T::P("."), T::P("*")] if target.qualifier_ok(q) => {
                outputs.extend(target.table.columns.iter().map(|c| (c.name.clone(), c.ty.kind)));
                sources.extend(0..all);
            }
            _ => {
                let (col, rest) = match item {
                    [T::Word(q), T::P("."), T::Word(c), rest @ ..] => {
                        if !target.qualifier_ok(q) {
                            return Err(malformed(format!("unknown qualifier {q}")));
                        }
                        (c.clone(), rest)
                    }
                    [T::Word(c), rest @ ..] if !is_keyword(c) => (c.clone(), rest),
                    _ => return Err(malformed("bad select item")),
                };
                let kind = target.kind(&col)?;
                let pos = target.table.columns.iter().position(|c| c.name.eq_ignore_ascii_case(&col)).unwrap();
                let real = &target.table.columns[pos];
                sources.push(pos);
                let name = match rest {
                    [] => real.name.clone(),
                    [T::Word(a)] if !is_keyword(a) => a.clone(),
                    [T::Word(k), T::Word(a)] if k.eq_ignore_ascii_case("as") => a.clone(),
                    _ => return Err(NaiveError::Unmodeled("expression in select list".into())),
                };
                outputs.push((name, kind));
            }
        }
    }
    if outputs.is_empty() {
        return Err(malformed("empty select list"));
    }
    for (i, (n, _)) in outputs.iter().enumerate() {
        if outputs[..i].iter().any(|(m, _)| m.eq_ignore_ascii_case(n)) {
            return Err(NaiveError::Unmodeled(format!("duplicate result column {n}")));
        }
    }
    let names: Vec<String> = outputs.iter().map(|(n, _)| n.clone()).collect();
    let mut inputs = Vec::new();
    where_clause(&target, &toks[next..], &names, &mut inputs)?;
    Ok(Prepared { verb: Verb::Select, table: target.table.name.clone(), inputs, outputs, sources })
}

fn insert(toks: &[T], catalog: &SchemaCatalog) -> Result<Prepared, NaiveError> {
    if !is_word(toks.get(1), "into") {
        return Err(malformed("INSERT without INTO"));
    }
    let t = table(catalog, &word(toks, 2)?)?;
    let target = Target { table: t, alias: None };
    let mut i = 3;
    let mut cols: Vec<SqlKind> = t.columns.iter().map(|c| c.ty.kind).collect();
    if toks.get(i) == Some(&T::P("(")) {
        let close = toks[i..].iter().position(|x| *x == T::P(")")).ok_or_else(|| malformed("unclosed column list"))? + i;
        cols = toks[i + 1..close]
            .split(|x| *x == T::P(","))
            .map(|c| match c {
                [T::Word(w)] => target.kind(w),
                _ => Err(malformed("bad column list")),
            })
            .collect::<Result<_, _>>()?;
        i = close + 1;
    }
    if !is_word(toks.get(i), "values") || toks.get(i + 1) != Some(&T::P("(")) || toks.last() != Some(&T::P(")")) {
        return Err(malformed("expected VALUES (...)"));
    }
    let values = &toks[i + 2..toks.len() - 1];
    if values.iter().any(|x| *x == T::P("(") || *x == T::P(")")) {
        return Err(NaiveError::Unmodeled("nested values".into()));
    }
    let items: Vec<&[T]> = values.split(|x| *x == T::P(",")).collect();
    if items.len() != cols.len() {
        return Err(malformed(format!("{} columns but {} values", cols.len(), items.len())));
    }
    let mut inputs = Vec::new();
    for (kind, item) in cols.iter().zip(&items) {
        match item {
            [T::P("?")] => inputs.push(*kind),
            other if other.contains(&T::P("?")) => {
                return Err(NaiveError::Unmodeled("placeholder inside an expression".into()))
            }
            other => check_columns(&target, other, &[])?,
        }
    }
    Ok(Prepared { verb: Verb::Insert, table: t.name.clone(), inputs, outputs: Vec::new(), sources: Vec::new() })
}

fn update(toks: &[T], catalog: &SchemaCatalog) -> Result<Prepared, NaiveError> {
    let (target, next) = table_ref(catalog, toks, 1)?;
    if !is_word(toks.get(next), "set") {
        return Err(malformed("UPDATE without SET"));
    }
    let end = toks.iter().position(|t| is_word(Some(t), "where")).unwrap_or(toks.len());
    let mut inputs = Vec::new();
    for a in toks[next + 1..end].split(|x| *x == T::P(",")) {
        let (col, value) = match a {
            [T::Word(c), T::P("="), v @ ..] => (c, v),
            [T::Word(q), T::P("."), T::Word(c), T::P("="), v @ ..] if target.qualifier_ok(q) => (c, v),
            _ => return Err(malformed("bad assignment")),
        };
        let kind = target.kind(col)?;
        match value {
            [T::P("?")] => inputs.push(kind),
            v if v.contains(&T::P("?")) => {
                return Err(NaiveError::Unmodeled("placeholder inside an expression".into()))
            }
            v => check_columns(&target, v, &[])?,
        }
    }
    where_clause(&target, &toks[end..], &[], &mut inputs)?;
    Ok(Prepared { verb: Verb::Update, table: target.table.name.clone(), inputs, outputs: Vec::new(), sources: Vec::new() })
}

fn delete(toks: &[T], catalog: &SchemaCatalog) -> Result<Prepared, NaiveError> {
    if !is_word(toks.get(1), "from") {
        return Err(malformed("DELETE without FROM"));
    }
    let (target, next) = table_ref(catalog, toks, 2)?;
    let mut inputs = Vec::new();
    where_clause(&target, &toks[next..], &[], &mut inputs)?;
    Ok(Prepared { verb: Verb::Delete, table: target.table.name.clone(), inputs, outputs: Vec::new(), sources: Vec::new() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schema::load_schema;

    fn cat() -> SchemaCatalog {
        load_schema("CREATE TABLE warehouse (label VARCHAR(100), qty INTEGER); CREATE TABLE genre (id INTEGER, name VARCHAR(50));")
            .unwrap()
    }

    #[test]
    fn reads_common_shapes() {
        let p = prepare("SELECT label FROM warehouse WHERE qty > ?", &cat()).unwrap();
        assert_eq!(p.inputs, vec![SqlKind::Integer]);
        assert_eq!(p.outputs, vec![("label".to_string(), SqlKind::Varchar)]);
        let p = prepare("INSERT INTO genre (id, name) VALUES (?,?)", &cat()).unwrap();
        assert_eq!(p.inputs, vec![SqlKind::Integer, SqlKind::Varchar]);
        let p = prepare("select * from warehouse w where ? < w.qty and label in (?, 'x')", &cat()).unwrap();
        assert_eq!(p.inputs, vec![SqlKind::Integer, SqlKind::Varchar]);
        assert_eq!(p.outputs.len(), 2);
        let p = prepare("UPDATE warehouse SET qty = ? WHERE label = ?", &cat()).unwrap();
        assert_eq!(p.inputs, vec![SqlKind::Integer, SqlKind::Varchar]);
        let p = prepare("DELETE FROM genre WHERE id BETWEEN ? AND ?", &cat()).unwrap();
        assert_eq!(p.inputs, vec![SqlKind::Integer, SqlKind::Integer]);
    }

    #[test]
    fn rejects_bad_statements() {
        assert!(matches!(prepare("SELECT * FORM warehouse", &cat()), Err(NaiveError::Malformed(_))));
        assert!(matches!(prepare("Select * from employe", &cat()), Err(NaiveError::Malformed(_))));
        assert!(matches!(prepare("INSERT INTO genre VALUES (?, ?, ?)", &cat()), Err(NaiveError::Malformed(_))));
        assert!(matches!(prepare("SELECT nme FROM genre", &cat()), Err(NaiveError::Malformed(_))));
        assert!(matches!(prepare("select count(*) from genre", &cat()), Err(NaiveError::Unmodeled(_))));
    }
}
