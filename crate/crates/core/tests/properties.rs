use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;

use oopsie_core::checker::render::{parse_json, render_json};
use oopsie_core::constprop::{Const, ConstValue, CAP};
use oopsie_core::javafront::parse_java;
use oopsie_core::oracle::{self, MiniDb};
use oopsie_core::schema::{Column, SchemaCatalog, Table};
use oopsie_core::sqlfront::signature;
use oopsie_core::sqltype::ResultColumn;
use oopsie_core::{
    check_program, load_schema, parse_sql, parse_sql_annotation, placeholder_count, synth, CheckOptions, Code,
    ConversionTable, Diagnostic, Severity, SourceSpan, SqlKind, SqlQualifier, SqlScalarType,
};

mod support;

fn kind() -> impl Strategy<Value = SqlKind> {
    prop::sample::select(SqlKind::ALL.to_vec())
}

fn scalar() -> impl Strategy<Value = SqlScalarType> {
    (kind(), 1..200u32, 0..6u32).prop_map(|(kind, n, s)| {
        let mut t = SqlScalarType::new(kind);
        match kind {
            SqlKind::Char | SqlKind::Varchar => t.length = Some(n),
            SqlKind::Decimal | SqlKind::Numeric => {
                t.precision = Some(n.clamp(s.max(1), 38));
                t.scale = Some(s);
            }
            _ => {}
        }
        t
    })
}

fn table(name: String) -> impl Strategy<Value = Table> {
    prop::collection::vec((scalar(), any::<bool>()), 1..7).prop_map(move |cols| Table {
        name: name.clone(),
        columns: cols
            .into_iter()
            .enumerate()
            .map(|(i, (ty, nullable))| Column { name: format!("col{i}"), ty, nullable })
            .collect(),
    })
}

fn catalog() -> impl Strategy<Value = SchemaCatalog> {
    (1..4usize)
        .prop_flat_map(|n| (0..n).map(|i| table(format!("tab{i}"))).collect::<Vec<_>>())
        .prop_map(|tables| SchemaCatalog::from_tables(tables).unwrap())
}

/// A table plus a SELECT over some of its columns filtered on others.
fn select() -> impl Strategy<Value = (Table, Vec<usize>, Vec<usize>)> {
    table("tab".into()).prop_flat_map(|t| {
        let n = t.columns.len();
        (Just(t), prop::collection::vec(0..n, 1..5), prop::collection::vec(0..n, 0..5))
    })
}

fn qualifier() -> impl Strategy<Value = SqlQualifier> {
    let sql = (
        prop::collection::vec(kind(), 0..4),
        prop::collection::vec((kind(), any::<bool>()), 0..4),
    )
        .prop_map(|(ins, outs)| {
            let outputs = outs
                .into_iter()
                .enumerate()
                .map(|(i, (k, named))| if named { ResultColumn::named(format!("c{i}"), k) } else { ResultColumn::unnamed(k) })
                .collect();
            SqlQualifier::sql(ins.into_iter().map(SqlScalarType::new).collect(), outputs)
        });
    prop_oneof![
        1 => Just(SqlQualifier::Unknown),
        1 => Just(SqlQualifier::Unsupported),
        1 => Just(SqlQualifier::Bottom),
        4 => sql,
    ]
}

fn const_value() -> impl Strategy<Value = ConstValue> {
    let c = prop_oneof![(0..8i64).prop_map(Const::Int), "[ab]{0,2}".prop_map(Const::Str)];
    prop_oneof![
        1 => Just(ConstValue::Bottom),
        1 => Just(ConstValue::Top),
        4 => prop::collection::btree_set(c, 1..6).prop_map(ConstValue::from_set),
    ]
}

fn diagnostic() -> impl Strategy<Value = Diagnostic> {
    (
        prop::sample::select(Code::ALL.to_vec()),
        prop::sample::select(vec![Severity::Error, Severity::Warning, Severity::Info]),
        "[A-Za-z]{1,8}\\.java",
        1..500u32,
        1..120u32,
        "[ -~]{0,30}",
        proptest::option::of(("[ -~]{0,10}", "[ -~]{0,10}")),
    )
        .prop_map(|(code, severity, file, line, column, message, details)| {
            let d = Diagnostic::new(code, severity, SourceSpan::new(Arc::new(file.into()), line, column), message);
            match details {
                Some((e, a)) => d.with_details(e, a),
                None => d,
            }
        })
}

proptest! {
    #[test]
    fn rendered_schemas_reload(cat in catalog()) {
        prop_assert_eq!(load_schema(&cat.render()).unwrap(), cat);
    }

    #[test]
    fn star_expands_in_declaration_order(t in table("tab".into())) {
        let cat = SchemaCatalog::from_tables(vec![t.clone()]).unwrap();
        let sig = signature("SELECT * FROM tab", &cat).unwrap();
        let expected: Vec<(String, SqlKind)> = t.columns.iter().map(|c| (c.name.clone(), c.ty.kind)).collect();
        let got: Vec<(String, SqlKind)> = sig.outputs.iter().map(|o| (o.name.clone(), o.ty.kind)).collect();
        prop_assert_eq!(got, expected);
        prop_assert!(sig.inputs.is_empty());
    }

    #[test]
    fn one_input_per_placeholder((t, items, filters) in select()) {
        let mut items: Vec<usize> = items;
        items.sort();
        items.dedup();
        let cols: Vec<&str> = items.iter().map(|&i| t.columns[i].name.as_str()).collect();
        let mut sql = format!("SELECT {} FROM tab", cols.join(", "));
        for (k, &f) in filters.iter().enumerate() {
            sql.push_str(if k == 0 { " WHERE " } else { " AND " });
            sql.push_str(&format!("{} = ?", t.columns[f].name));
        }
        let cat = SchemaCatalog::from_tables(vec![t.clone()]).unwrap();
        let sig = signature(&sql, &cat).unwrap();
        prop_assert_eq!(sig.inputs.len(), placeholder_count(&sql));
        prop_assert_eq!(parse_sql(&sql).unwrap().placeholders(), (1..=filters.len() as u32).collect::<Vec<_>>());
        let kinds: Vec<SqlKind> = filters.iter().map(|&f| t.columns[f].ty.kind).collect();
        prop_assert_eq!(sig.inputs.iter().map(|i| i.kind).collect::<Vec<_>>(), kinds);
        prop_assert_eq!(sig.outputs.len(), items.len());
    }

    #[test]
    fn annotations_round_trip(q in qualifier()) {
        prop_assert_eq!(parse_sql_annotation(&q.to_string()).unwrap(), q);
    }

    #[test]
    fn const_join_is_a_bounded_upper_bound(a in const_value(), b in const_value(), c in const_value()) {
        let ab = a.join(&b);
        prop_assert_eq!(&ab, &b.join(&a));
        prop_assert_eq!(ab.join(&c), a.join(&b.join(&c)));
        prop_assert!(a.leq(&ab) && b.leq(&ab));
        if a.leq(&c) && b.leq(&c) {
            prop_assert!(ab.leq(&c));
        }
        if let ConstValue::Known(s) = &ab {
            prop_assert!(!s.is_empty() && s.len() <= CAP);
        }
    }

    #[test]
    fn capped_sets_widen(n in 0..3 * CAP) {
        let set: BTreeSet<Const> = (0..n as i64).map(Const::Int).collect();
        let v = ConstValue::from_set(set);
        match n {
            0 => prop_assert_eq!(v, ConstValue::Bottom),
            n if n > CAP => prop_assert_eq!(v, ConstValue::Top),
            _ => prop_assert!(matches!(v, ConstValue::Known(_))),
        }
    }

    #[test]
    fn json_round_trips(diags in prop::collection::vec(diagnostic(), 0..8)) {
        prop_assert_eq!(parse_json(&render_json(&diags)).unwrap(), diags);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn synthetic_programs_agree_with_the_oracle(seed in any::<u64>(), bug_rate in 0.0..0.4f64) {
        let catalog = load_schema(synth::SCHEMA).unwrap();
        let db = MiniDb::with_rows(catalog.clone(), synth::ROWS).unwrap();
        let table = ConversionTable::default();
        let files = synth::generate(seed, 2, bug_rate);
        let report = check_program(&files, &catalog, &table, &CheckOptions::default()).unwrap();
        let units: Vec<_> = files.iter().map(|f| parse_java(&f.text, f.path.clone()).unwrap()).collect();
        let run = oracle::run_program(&units, &db, &table, oracle::DEFAULT_BUDGET);
        if report.count(Severity::Error) == 0 {
            prop_assert!(run.exceptions.is_empty(), "{:?}", run.exceptions);
        }
        for e in &run.exceptions {
            prop_assert!(
                report.diagnostics.iter().any(|d| {
                    d.severity == Severity::Error && d.span == e.span && support::category(d.code) == Some(e.category)
                }),
                "uncaught {:?}",
                e
            );
        }
    }
}

#[test]
fn buggy_synthetic_programs_raise() {
    let catalog = load_schema(synth::SCHEMA).unwrap();
    let db = MiniDb::with_rows(catalog, synth::ROWS).unwrap();
    let units: Vec<_> = synth::generate(3, 8, 0.3).iter().map(|f| parse_java(&f.text, f.path.clone()).unwrap()).collect();
    let run = oracle::run_program(&units, &db, &ConversionTable::default(), oracle::DEFAULT_BUDGET);
    assert!(run.exceptions.len() >= 3, "{}", run.exceptions.len());
    assert_eq!(run.unmodeled, 0);
}
