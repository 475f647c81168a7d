use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const SCHEMA: &str = "CREATE TABLE employee (id INTEGER, name VARCHAR(100), salary INTEGER);\n";

const CLEAN: &str = r#"import java.sql.*;

class Clean {
    void names(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT name FROM employee WHERE salary < ?");
        ps.setInt(1, 40000);
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String name = rs.getString("name");
        }
    }
}
"#;

const SALARY: &str = r#"import java.sql.*;

class Salary {
    void lowEarners(Connection conn) throws SQLException {
        String sql = "SELECT name FROM ";
        sql += "employee WHERE salary < ?";
        PreparedStatement ps = conn.prepareStatement(sql);
        ps.setInt(1, 40000);
        ResultSet rs = ps.executeQuery();
        int name = rs.getInt("name");
    }
}
"#;

const DYNAMIC: &str = r#"import java.sql.*;

class Dynamic {
    void run(Connection conn, String q) throws SQLException {
        conn.prepareStatement(q).executeQuery();
    }
}
"#;

fn tree(files: &[(&str, &str)]) -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("schema.sql"), SCHEMA).unwrap();
    for (name, text) in files {
        let path = dir.path().join("src").join(name);
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(path, text).unwrap();
    }
    dir
}

fn oopsie(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oopsie"))
        .current_dir(dir)
        .env("OOPSIE_COLOR", "0")
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn clean_tree_succeeds() {
    let dir = tree(&[("Clean.java", CLEAN)]);
    let o = oopsie(dir.path(), &["--schema", "schema.sql", "--mode", "degraded", "src"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "");
}

#[test]
fn getter_mismatch_fails() {
    let dir = tree(&[("Clean.java", CLEAN), ("pkg/Salary.java", SALARY)]);
    let o = oopsie(dir.path(), &["--schema", "schema.sql", "--mode", "degraded", "src"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert_eq!(out.matches("OOPS").count(), 1, "{out}");
    assert!(out.contains("OOPS008"), "{out}");
    assert!(out.contains("Salary.java:10:"), "{out}");
    assert!(!out.contains('\x1b'));
}

#[test]
fn missing_schema_is_a_usage_error() {
    let dir = tree(&[("Clean.java", CLEAN)]);
    let o = oopsie(dir.path(), &["src"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
}

#[test]
fn bad_inputs_are_tool_errors() {
    let dir = tree(&[("Clean.java", CLEAN)]);
    fs::write(dir.path().join("broken.sql"), "CREATE TABLE t (a WIDGET);").unwrap();
    for args in [&["--schema", "broken.sql", "src"][..], &["--schema", "schema.sql", "nowhere"]] {
        let o = oopsie(dir.path(), args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("oopsie: "));
    }
}

#[test]
fn json_output() {
    let dir = tree(&[("Salary.java", SALARY)]);
    let o = oopsie(dir.path(), &["--schema", "schema.sql", "--format", "json", "src"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 1);
    assert_eq!(items[0]["code"], "OOPS008");
    assert_eq!(items[0]["severity"], "error");
    assert_eq!(items[0]["line"], 10);
}

#[test]
fn warnings_fail_only_when_asked() {
    let dir = tree(&[("Dynamic.java", DYNAMIC)]);
    let base = ["--schema", "schema.sql", "--mode", "degraded", "src"];
    let o = oopsie(dir.path(), &base);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("OOPS003"));
    let strict: Vec<&str> = base.iter().copied().chain(["--fail-on", "warning"]).collect();
    assert_eq!(oopsie(dir.path(), &strict).status.code(), Some(1));
    let sound = oopsie(dir.path(), &["--schema", "schema.sql", "src"]);
    assert_eq!(sound.status.code(), Some(1));
}

#[test]
fn stats_go_to_stderr() {
    let dir = tree(&[("Clean.java", CLEAN)]);
    let o = oopsie(dir.path(), &["--schema", "schema.sql", "--stats", "src/Clean.java"]);
    assert_eq!(o.status.code(), Some(0));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("checked getters: 1"), "{err}");
    assert!(err.contains("checked setters: 1"), "{err}");
    assert!(err.contains("out of scope: 0"), "{err}");
}
