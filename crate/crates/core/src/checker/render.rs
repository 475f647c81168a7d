//! Text and JSON renderings of diagnostics.

use std::path::PathBuf;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::diag::{Code, Diagnostic, Severity};
use crate::span::SourceSpan;

/// One line per diagnostic: `file:line:col: severity OOPSNNN: message`.
pub fn render_text(diags: &[Diagnostic], color: bool) -> String {
    let mut out = String::new();
    for d in diags {
        let sev = if color {
            let code = match d.severity {
                Severity::Error => "31",
                Severity::Warning => "33",
                Severity::Info => "36",
            };
            format!("\x1b[1;{code}m{}\x1b[0m", d.severity)
        } else {
            d.severity.to_string()
        };
        out.push_str(&format!("{}: {sev} {}: {}\n", d.span, d.code, d.message));
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonDiagnostic {
    code: Code,
    severity: Severity,
    file: PathBuf,
    line: u32,
    column: u32,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    actual: Option<String>,
}

/// A JSON array of objects with keys in a fixed order.
pub fn render_json(diags: &[Diagnostic]) -> String {
    let items: Vec<JsonDiagnostic> = diags
        .iter()
        .map(|d| JsonDiagnostic {
            code: d.code,
            severity: d.severity,
            file: d.span.file.as_ref().clone(),
            line: d.span.line,
            column: d.span.column,
            message: d.message.clone(),
            expected: d.expected.clone(),
            actual: d.actual.clone(),
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&items).expect("diagnostics serialize");
    s.push('\n');
    s
}

/// Inverse of [`render_json`].
pub fn parse_json(text: &str) -> serde_json::Result<Vec<Diagnostic>> {
    let items: Vec<JsonDiagnostic> = serde_json::from_str(text)?;
    Ok(items
        .into_iter()
        .map(|j| Diagnostic {
            code: j.code,
            severity: j.severity,
            span: SourceSpan::new(Arc::new(j.file), j.line, j.column),
            message: j.message,
            expected: j.expected,
            actual: j.actual,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Diagnostic {
        Diagnostic::new(
            Code::ParamIndexOob,
            Severity::Error,
            SourceSpan::new(Arc::new(PathBuf::from("src/A.java")), 12, 5),
            "parameter index 3 out of bounds (statement has 2 parameters)",
        )
        .with_details("1..2", "3")
    }

    #[test]
    fn text_line() {
        assert_eq!(
            render_text(&[sample()], false),
            "src/A.java:12:5: error OOPS004: parameter index 3 out of bounds (statement has 2 parameters)\n"
        );
    }

    #[test]
    fn empty_json() {
        assert_eq!(render_json(&[]), "[]\n");
    }

    #[test]
    fn json_key_order_and_round_trip() {
        let mut plain = sample();
        plain.expected = None;
        plain.actual = None;
        let diags = vec![sample(), plain];
        let text = render_json(&diags);
        let keys: Vec<usize> = ["\"code\"", "\"severity\"", "\"file\"", "\"line\"", "\"column\"", "\"message\"", "\"expected\"", "\"actual\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(parse_json(&text).unwrap(), diags);
    }
}
