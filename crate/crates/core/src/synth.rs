//! Seeded generator of subset programs for throughput tests and benchmarks.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::checker::SourceFile;

/// Schema the generated programs are written against.
pub const SCHEMA: &str = "\
CREATE TABLE account (id BIGINT, owner VARCHAR(80), branch CHAR(8), balance DECIMAL(14, 2), opened DATE);
CREATE TABLE ledger (id INTEGER, account_id BIGINT, amount DECIMAL(14, 2), memo VARCHAR(200), posted TIMESTAMP);
CREATE TABLE branch (code CHAR(8), city VARCHAR(60), staff SMALLINT, open BOOLEAN);
";

/// Rows for [`SCHEMA`], in the `.rows` format read by the oracle.
pub const ROWS: &str = "\
account (1, 'ada', 'LDS01', 120.50, '2021-03-04')
account (2, 'lin', 'TRN02', 0.00, '2022-11-30')
ledger (10, 1, 20.25, 'rent', '2023-01-01 08:00:00')
ledger (11, 2, -4.00, NULL, '2023-01-02 09:15:00')
branch ('LDS01', 'Leeds', 12, true)
branch ('TRN02', 'Turin', 7, false)
";

struct Col {
    name: &'static str,
    getter: &'static str,
    setter: &'static str,
    jtype: &'static str,
    wrong: &'static str,
}

const fn col(name: &'static str, getter: &'static str, setter: &'static str, jtype: &'static str, wrong: &'static str) -> Col {
    Col { name, getter, setter, jtype, wrong }
}

const TABLES: [(&str, &[Col]); 3] = [
    (
        "account",
        &[
            col("id", "getLong", "setLong", "long", "getInt"),
            col("owner", "getString", "setString", "String", "getInt"),
            col("branch", "getString", "setString", "String", "getBoolean"),
            col("balance", "getBigDecimal", "setBigDecimal", "BigDecimal", "getDouble"),
            col("opened", "getDate", "setDate", "Date", "getString"),
        ],
    ),
    (
        "ledger",
        &[
            col("id", "getInt", "setInt", "int", "getString"),
            col("account_id", "getLong", "setLong", "long", "getInt"),
            col("amount", "getBigDecimal", "setBigDecimal", "BigDecimal", "getLong"),
            col("memo", "getString", "setString", "String", "getLong"),
            col("posted", "getTimestamp", "setTimestamp", "Timestamp", "getDate"),
        ],
    ),
    (
        "branch",
        &[
            col("code", "getString", "setString", "String", "getInt"),
            col("city", "getString", "setString", "String", "getDouble"),
            col("staff", "getShort", "setShort", "short", "getInt"),
            col("open", "getBoolean", "setBoolean", "boolean", "getString"),
        ],
    ),
];

/// Generates `classes` source files. Roughly `bug_rate` of the accesses use a
/// non-recommended accessor.
pub fn generate(seed: u64, classes: usize, bug_rate: f64) -> Vec<SourceFile> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..classes)
        .map(|k| {
            let name = format!("Gen{k:04}");
            let mut out = String::from("import java.math.BigDecimal;\nimport java.sql.*;\n\nclass ");
            out.push_str(&name);
            out.push_str(" {\n");
            for m in 0..6 {
                if m > 0 {
                    out.push('\n');
                }
                method(&mut rng, &mut out, m, bug_rate);
            }
            out.push_str("}\n");
            SourceFile::new(format!("{name}.java"), out)
        })
        .collect()
}

/// Total line count of generated files.
pub fn line_count(files: &[SourceFile]) -> usize {
    files.iter().map(|f| f.text.lines().count()).sum()
}

fn pick<'a, T>(rng: &mut StdRng, items: &'a [T]) -> &'a T {
    items.choose(rng).expect("non-empty")
}

fn literal(jtype: &str) -> &'static str {
    match jtype {
        "long" => "1L",
        "int" => "1",
        "short" => "(short) 1",
        "boolean" => "true",
        _ => "null",
    }
}

fn method(rng: &mut StdRng, out: &mut String, index: usize, bug_rate: f64) {
    let (table, cols) = *pick(rng, &TABLES);
    let n = rng.gen_range(1..=cols.len().min(3));
    let mut chosen: Vec<&Col> = cols.iter().collect();
    chosen.shuffle(rng);
    chosen.truncate(n);
    let key = &cols[rng.gen_range(0..cols.len())];
    let names: Vec<&str> = chosen.iter().map(|c| c.name).collect();
    let getter = |rng: &mut StdRng, c: &Col| if rng.gen_bool(bug_rate) { c.wrong } else { c.getter };

    match index % 3 {
        0 => {
            out.push_str(&format!("    void query{index}(Connection c, {} key) throws SQLException {{\n", key.jtype));
            out.push_str(&format!(
                "        PreparedStatement ps = c.prepareStatement(\"SELECT {} FROM {table} WHERE {} = ?\");\n",
                names.join(", "),
                key.name
            ));
            out.push_str(&format!("        ps.{}(1, key);\n", key.setter));
            out.push_str("        ResultSet rs = ps.executeQuery();\n");
            out.push_str("        while (rs.next()) {\n");
            for (i, c) in chosen.iter().enumerate() {
                let g = getter(rng, c);
                if rng.gen_bool(0.5) {
                    out.push_str(&format!("            rs.{g}({});\n", i + 1));
                } else {
                    out.push_str(&format!("            rs.{g}(\"{}\");\n", c.name));
                }
            }
            out.push_str("        }\n    }\n");
        }
        1 => {
            out.push_str(&format!("    void update{index}(Connection c, boolean all) throws SQLException {{\n"));
            let sets: Vec<String> = chosen.iter().map(|c| format!("{} = ?", c.name)).collect();
            out.push_str(&format!("        String q = \"UPDATE {table} SET {}\";\n", sets.join(", ")));
            out.push_str("        if (all) {\n");
            out.push_str(&format!("            q += \" WHERE {} = ?\";\n", key.name));
            out.push_str("        } else {\n");
            out.push_str(&format!("            q = q + \" WHERE {} = ?\";\n", key.name));
            out.push_str("        }\n");
            out.push_str("        PreparedStatement ps = c.prepareStatement(q);\n");
            out.push_str("        int ctr = 1;\n");
            for c in chosen.iter().copied().chain(std::iter::once(key)) {
                let (s, v) = if !rng.gen_bool(bug_rate) {
                    (c.setter, literal(c.jtype))
                } else if c.setter == "setString" {
                    ("setInt", "1")
                } else {
                    ("setString", "null")
                };
                out.push_str(&format!("        ps.{s}(ctr++, {v});\n"));
            }
            out.push_str("        ps.executeUpdate();\n    }\n");
        }
        _ => {
            out.push_str(&format!("    int scan{index}(Connection c) throws SQLException {{\n"));
            out.push_str("        int seen = 0;\n");
            out.push_str("        Statement st = c.createStatement();\n");
            out.push_str(&format!("        String cols = \"{}\";\n", names.join(", ")));
            out.push_str(&format!("        ResultSet rs = st.executeQuery(\"SELECT \" + cols + \" FROM {table}\");\n"));
            out.push_str("        while (rs.next()) {\n");
            for (i, c) in chosen.iter().enumerate() {
                let g = getter(rng, c);
                out.push_str(&format!("            rs.{g}({});\n", i + 1));
            }
            out.push_str("            seen++;\n        }\n        return seen;\n    }\n");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_output_is_stable() {
        let a = generate(7, 3, 0.1);
        let b = generate(7, 3, 0.1);
        assert_eq!(a.iter().map(|f| &f.text).collect::<Vec<_>>(), b.iter().map(|f| &f.text).collect::<Vec<_>>());
        assert!(line_count(&a) > 100);
    }

    #[test]
    fn clean_programs_check_clean() {
        use crate::checker::{check_program, CheckOptions};
        use crate::schema::load_schema;
        use crate::typemap::ConversionTable;

        let catalog = load_schema(SCHEMA).unwrap();
        let table = ConversionTable::default();
        let clean = check_program(&generate(3, 8, 0.0), &catalog, &table, &CheckOptions::default()).unwrap();
        assert_eq!(clean.diagnostics, vec![]);
        let buggy = check_program(&generate(3, 8, 0.3), &catalog, &table, &CheckOptions::default()).unwrap();
        assert!(!buggy.diagnostics.is_empty());
    }
}
