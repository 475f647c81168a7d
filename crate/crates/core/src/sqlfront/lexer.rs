//! Tokenizer shared by the DDL loader and the statement parser.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    /// A bare word. Keywords are not distinguished here; parsers compare
    /// words case-insensitively.
    Word(String),
    Number(String),
    Str(String),
    /// `?`, carrying its 1-based ordinal in textual order.
    Placeholder(u32),
    Sym(&'static str),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Number(n) => write!(f, "number {n}"),
            Tok::Str(s) => write!(f, "string '{s}'"),
            Tok::Placeholder(_) => write!(f, "`?`"),
            Tok::Sym(s) => write!(f, "`{s}`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub tok: Tok,
    /// Byte offset of the first character.
    pub offset: usize,
}

impl Token {
    pub fn is_word(&self, kw: &str) -> bool {
        matches!(&self.tok, Tok::Word(w) if w.eq_ignore_ascii_case(kw))
    }

    pub fn is_sym(&self, sym: &str) -> bool {
        matches!(&self.tok, Tok::Sym(s) if *s == sym)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexError {
    pub offset: usize,
    pub message: String,
}

const SYMBOLS: [&str; 17] = [
    "<>", "<=", ">=", "!=", "||", "=", "<", ">", "(", ")", ",", ";", "*", "+", "-", "/", ".",
];

pub fn tokenize(text: &str) -> Result<Vec<Token>, LexError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let mut ordinal = 0u32;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c == b'-' && bytes.get(i + 1) == Some(&b'-') {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        let start = i;
        if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'$') {
                i += 1;
            }
            out.push(Token { tok: Tok::Word(text[start..i].to_string()), offset: start });
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            out.push(Token { tok: Tok::Number(text[start..i].to_string()), offset: start });
            continue;
        }
        if c == b'\'' {
            i += 1;
            let mut value = String::new();
            loop {
                match bytes.get(i) {
                    None => {
                        return Err(LexError { offset: start, message: "unterminated string literal".into() })
                    }
                    Some(b'\'') if bytes.get(i + 1) == Some(&b'\'') => {
                        value.push('\'');
                        i += 2;
                    }
                    Some(b'\'') => {
                        i += 1;
                        break;
                    }
                    Some(_) => {
                        let ch = text[i..].chars().next().unwrap();
                        value.push(ch);
                        i += ch.len_utf8();
                    }
                }
            }
            out.push(Token { tok: Tok::Str(value), offset: start });
            continue;
        }
        if c == b'?' {
            ordinal += 1;
            out.push(Token { tok: Tok::Placeholder(ordinal), offset: start });
            i += 1;
            continue;
        }
        if let Some(sym) = SYMBOLS.iter().find(|s| text[i..].starts_with(**s)) {
            out.push(Token { tok: Tok::Sym(sym), offset: start });
            i += sym.len();
            continue;
        }
        let ch = text[i..].chars().next().unwrap();
        return Err(LexError { offset: start, message: format!("unexpected character `{ch}`") });
    }
    out.push(Token { tok: Tok::Eof, offset: text.len() });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn placeholders_are_numbered_in_order() {
        let toks = tokenize("VALUES (?, ?, ?)").unwrap();
        let ords: Vec<u32> = toks
            .iter()
            .filter_map(|t| match t.tok {
                Tok::Placeholder(n) => Some(n),
                _ => None,
            })
            .collect();
        assert_eq!(ords, vec![1, 2, 3]);
    }

    #[test]
    fn quoted_question_mark_is_text() {
        let toks = tokenize("WHERE a = '?'").unwrap();
        assert!(toks.iter().all(|t| !matches!(t.tok, Tok::Placeholder(_))));
        assert_eq!(toks[3].tok, Tok::Str("?".into()));
    }

    #[test]
    fn comments_and_doubled_quotes() {
        let toks = tokenize("-- header\nSELECT 'it''s' <> x").unwrap();
        assert_eq!(toks[1].tok, Tok::Str("it's".into()));
        assert!(toks[2].is_sym("<>"));
    }

    #[test]
    fn unterminated_string_is_an_error() {
        assert_eq!(tokenize("SELECT 'abc").unwrap_err().offset, 7);
    }
}
