use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum JTok {
    Ident(String),
    Int(i64),
    Long(i64),
    Float(String),
    Str(String),
    Char(char),
    Sym(&'static str),
    /// `@` followed by an annotation name; the name is a separate token.
    At,
    Eof,
}

impl fmt::Display for JTok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JTok::Ident(s) => write!(f, "`{s}`"),
            JTok::Int(n) | JTok::Long(n) => write!(f, "number {n}"),
            JTok::Float(s) => write!(f, "number {s}"),
            JTok::Str(_) => f.write_str("string literal"),
            JTok::Char(_) => f.write_str("character literal"),
            JTok::Sym(s) => write!(f, "`{s}`"),
            JTok::At => f.write_str("`@`"),
            JTok::Eof => f.write_str("end of file"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct JToken {
    pub tok: JTok,
    pub line: u32,
    pub column: u32,
    /// Byte range in the source.
    pub start: usize,
    pub end: usize,
}

impl JToken {
    pub fn is(&self, sym: &str) -> bool {
        matches!(&self.tok, JTok::Sym(s) if *s == sym)
    }

    pub fn is_ident(&self, name: &str) -> bool {
        matches!(&self.tok, JTok::Ident(s) if s == name)
    }

    pub fn ident(&self) -> Option<&str> {
        match &self.tok {
            JTok::Ident(s) => Some(s),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct JLexError {
    pub line: u32,
    pub column: u32,
    pub message: String,
}

const SYMBOLS: &[&str] = &[
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", ">=", "+=", "-=", "*=",
    "/=", "%=", "&=", "|=", "^=", "<<", "(", ")", "{", "}", "[", "]", ";", ",", ".", "=", "<", ">", "!", "~", "?",
    ":", "+", "-", "*", "/", "%", "&", "|", "^",
];

pub fn tokenize(src: &str) -> Result<Vec<JToken>, JLexError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let mut line = 1u32;
    let mut line_start = 0usize;

    macro_rules! err {
        ($at:expr, $($msg:tt)*) => {
            return Err(JLexError { line, column: ($at - line_start) as u32 + 1, message: format!($($msg)*) })
        };
    }

    while i < bytes.len() {
        let c = bytes[i];
        if c == b'\n' {
            i += 1;
            line += 1;
            line_start = i;
            continue;
        }
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c == b'/' && bytes.get(i + 1) == Some(&b'/') {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        if c == b'/' && bytes.get(i + 1) == Some(&b'*') {
            let open = i;
            i += 2;
            loop {
                if i + 1 >= bytes.len() {
                    err!(open, "unterminated comment");
                }
                if bytes[i] == b'*' && bytes[i + 1] == b'/' {
                    i += 2;
                    break;
                }
                if bytes[i] == b'\n' {
                    line += 1;
                    line_start = i + 1;
                }
                i += 1;
            }
            continue;
        }
        let start = i;
        let column = (start - line_start) as u32 + 1;
        let tok = if c.is_ascii_alphabetic() || c == b'_' || c == b'$' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'$') {
                i += 1;
            }
            JTok::Ident(src[start..i].to_string())
        } else if c.is_ascii_digit() || (c == b'.' && bytes.get(i + 1).is_some_and(u8::is_ascii_digit)) {
            number(src, &mut i).map_err(|m| JLexError { line, column, message: m })?
        } else if c == b'"' {
            if src[i..].starts_with("\"\"\"") {
                err!(start, "text blocks are not supported");
            }
            i += 1;
            let mut value = String::new();
            loop {
                match bytes.get(i) {
                    None | Some(b'\n') => err!(start, "unterminated string literal"),
                    Some(b'"') => {
                        i += 1;
                        break;
                    }
                    Some(b'\\') => {
                        let (ch, len) = escape(&src[i..]).map_err(|m| JLexError { line, column, message: m })?;
                        value.push(ch);
                        i += len;
                    }
                    Some(_) => {
                        let ch = src[i..].chars().next().unwrap();
                        value.push(ch);
                        i += ch.len_utf8();
                    }
                }
            }
            JTok::Str(value)
        } else if c == b'\'' {
            i += 1;
            let ch = match bytes.get(i) {
                Some(b'\\') => {
                    let (ch, len) = escape(&src[i..]).map_err(|m| JLexError { line, column, message: m })?;
                    i += len;
                    ch
                }
                Some(b'\'') | Some(b'\n') | None => err!(start, "malformed character literal"),
                Some(_) => {
                    let ch = src[i..].chars().next().unwrap();
                    i += ch.len_utf8();
                    ch
                }
            };
            if bytes.get(i) != Some(&b'\'') {
                err!(start, "malformed character literal");
            }
            i += 1;
            JTok::Char(ch)
        } else if c == b'@' {
            i += 1;
            JTok::At
        } else if let Some(sym) = SYMBOLS.iter().find(|s| src[i..].starts_with(**s)) {
            i += sym.len();
            JTok::Sym(sym)
        } else {
            let ch = src[i..].chars().next().unwrap();
            err!(start, "unexpected character `{ch}`");
        };
        out.push(JToken { tok, line, column, start, end: i });
    }
    let column = (src.len() - line_start) as u32 + 1;
    out.push(JToken { tok: JTok::Eof, line, column, start: src.len(), end: src.len() });
    Ok(out)
}

fn escape(s: &str) -> Result<(char, usize), String> {
    let b = s.as_bytes();
    let ch = match b.get(1) {
        Some(b'n') => '\n',
        Some(b't') => '\t',
        Some(b'r') => '\r',
        Some(b'b') => '\u{8}',
        Some(b'f') => '\u{c}',
        Some(b's') => ' ',
        Some(b'0') => '\0',
        Some(b'\\') => '\\',
        Some(b'\'') => '\'',
        Some(b'"') => '"',
        Some(b'u') => {
            let hex = s.get(2..6).ok_or("malformed unicode escape")?;
            let code = u32::from_str_radix(hex, 16).map_err(|_| "malformed unicode escape")?;
            return Ok((char::from_u32(code).ok_or("malformed unicode escape")?, 6));
        }
        _ => return Err("unknown escape sequence".into()),
    };
    Ok((ch, 2))
}

fn number(src: &str, i: &mut usize) -> Result<JTok, String> {
    let bytes = src.as_bytes();
    let start = *i;
    let hex = src[start..].starts_with("0x") || src[start..].starts_with("0X");
    if hex {
        *i += 2;
        while *i < bytes.len() && (bytes[*i].is_ascii_hexdigit() || bytes[*i] == b'_') {
            *i += 1;
        }
    } else {
        while *i < bytes.len() && (bytes[*i].is_ascii_digit() || bytes[*i] == b'_') {
            *i += 1;
        }
    }
    let mut float = false;
    if !hex && *i < bytes.len() && bytes[*i] == b'.' && bytes.get(*i + 1).is_some_and(u8::is_ascii_digit) {
        float = true;
        *i += 1;
        while *i < bytes.len() && (bytes[*i].is_ascii_digit() || bytes[*i] == b'_') {
            *i += 1;
        }
    }
    if !hex && *i < bytes.len() && (bytes[*i] == b'e' || bytes[*i] == b'E') {
        float = true;
        *i += 1;
        if *i < bytes.len() && (bytes[*i] == b'+' || bytes[*i] == b'-') {
            *i += 1;
        }
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
    }
    if *i < bytes.len() && matches!(bytes[*i], b'f' | b'F' | b'd' | b'D') && !hex {
        *i += 1;
        return Ok(JTok::Float(src[start..*i].to_string()));
    }
    if float {
        return Ok(JTok::Float(src[start..*i].to_string()));
    }
    let digits: String = src[start..*i].chars().filter(|c| *c != '_').collect();
    let long = *i < bytes.len() && matches!(bytes[*i], b'l' | b'L');
    if long {
        *i += 1;
    }
    let value = if hex {
        u64::from_str_radix(&digits[2..], 16).map(|v| v as i64).map_err(|_| format!("malformed number `{digits}`"))?
    } else {
        let v: u64 = digits.parse().map_err(|_| format!("malformed number `{digits}`"))?;
        v as i64
    };
    Ok(if long { JTok::Long(value) } else { JTok::Int(value) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_and_kinds() {
        let toks = tokenize("int x = 1;\n  s += \"a\\\"b\"; // c\n long y = 3L;").unwrap();
        assert_eq!(toks[0].tok, JTok::Ident("int".into()));
        assert_eq!((toks[5].line, toks[5].column), (2, 3));
        assert_eq!(toks[6].tok, JTok::Sym("+="));
        assert_eq!(toks[7].tok, JTok::Str("a\"b".into()));
        assert_eq!(toks[12].tok, JTok::Long(3));
    }

    #[test]
    fn block_comment_lines() {
        let toks = tokenize("/* a\n b */ x").unwrap();
        assert_eq!((toks[0].line, toks[0].column), (2, 7));
    }

    #[test]
    fn errors() {
        assert!(tokenize("\"abc").is_err());
        assert!(tokenize("a # b").is_err());
    }
}
