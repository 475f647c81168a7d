use std::collections::HashMap;

use oopsie_core::schema::{SqlKind, SqlScalarType};
use oopsie_core::sqltype::{ResultColumn, SqlQualifier};

const KINDS: [SqlKind; 3] = [SqlKind::Integer, SqlKind::Varchar, SqlKind::Decimal];
const NAMES: [&str; 3] = ["a", "b", "c"];

/// Every qualifier with at most two inputs and at most three distinctly
/// named outputs over three kinds and three names, plus the three constants.
pub fn universe() -> Vec<SqlQualifier> {
    let mut inputs: Vec<Vec<SqlScalarType>> = vec![Vec::new()];
    for len in 1..=2 {
        let prev: Vec<_> = inputs.iter().filter(|v| v.len() == len - 1).cloned().collect();
        for p in prev {
            for k in KINDS {
                let mut v = p.clone();
                v.push(k.into());
                inputs.push(v);
            }
        }
    }
    let mut outputs: Vec<Vec<ResultColumn>> = vec![Vec::new()];
    for len in 1..=3 {
        let prev: Vec<_> = outputs.iter().filter(|v| v.len() == len - 1).cloned().collect();
        for p in prev {
            for n in NAMES {
                if p.iter().any(|c| c.has_name(n)) {
                    continue;
                }
                for k in KINDS {
                    let mut v = p.clone();
                    v.push(ResultColumn::named(n, k));
                    outputs.push(v);
                }
            }
        }
    }
    let mut all = vec![SqlQualifier::Bottom, SqlQualifier::Unknown, SqlQualifier::Unsupported];
    for i in &inputs {
        for o in &outputs {
            all.push(SqlQualifier::sql(i.clone(), o.clone()));
        }
    }
    all
}

#[derive(Debug, Default)]
pub struct LawReport {
    pub elements: usize,
    pub triples: u64,
    pub violations: u64,
    pub first: Vec<String>,
}

impl LawReport {
    fn fail(&mut self, what: String) {
        self.violations += 1;
        if self.first.len() < 5 {
            self.first.push(what);
        }
    }
}

/// Checks the partial-order axioms and the lub laws over every pair and triple.
pub fn check_laws(u: &[SqlQualifier]) -> LawReport {
    let n = u.len();
    let mut r = LawReport { elements: n, ..LawReport::default() };
    let index: HashMap<&SqlQualifier, u16> = u.iter().enumerate().map(|(i, q)| (q, i as u16)).collect();
    let words = n.div_ceil(64);
    let mut up = vec![0u64; n * words];
    let mut lub = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            if u[a].is_subtype(&u[b]) {
                up[a * words + b / 64] |= 1 << (b % 64);
            }
            let j = u[a].lub(&u[b]);
            match index.get(&j) {
                Some(&k) => lub[a * n + b] = k,
                None => r.fail(format!("lub({}, {}) = {j} leaves the universe", u[a], u[b])),
            }
        }
    }
    if r.violations > 0 {
        return r;
    }
    let leq = |a: usize, b: usize| up[a * words + b / 64] >> (b % 64) & 1 == 1;
    let row = |a: usize| &up[a * words..(a + 1) * words];

    for a in 0..n {
        if !leq(a, a) {
            r.fail(format!("not reflexive: {}", u[a]));
        }
        if lub[a * n + a] as usize != a {
            r.fail(format!("lub not idempotent: {}", u[a]));
        }
        for b in 0..n {
            let ab = lub[a * n + b] as usize;
            if a != b && leq(a, b) && leq(b, a) {
                r.fail(format!("not antisymmetric: {} {}", u[a], u[b]));
            }
            if leq(a, b) != (ab == b) {
                r.fail(format!("order and lub disagree: {} {}", u[a], u[b]));
            }
            if ab != lub[b * n + a] as usize {
                r.fail(format!("lub not commutative: {} {}", u[a], u[b]));
            }
            if !leq(a, ab) || !leq(b, ab) {
                r.fail(format!("lub not an upper bound: {} {}", u[a], u[b]));
            }
            // Every common upper bound of a and b lies above a ⊔ b.
            if row(a).iter().zip(row(b)).zip(row(ab)).any(|((x, y), z)| x & y & !z != 0) {
                r.fail(format!("lub not least: {} {}", u[a], u[b]));
            }
            // a ⊑ b implies up(b) ⊆ up(a).
            if leq(a, b) && row(b).iter().zip(row(a)).any(|(x, y)| x & !y != 0) {
                r.fail(format!("not transitive through {} {}", u[a], u[b]));
            }
        }
    }

    for a in 0..n {
        let la = &lub[a * n..(a + 1) * n];
        for b in 0..n {
            let lb = &lub[b * n..(b + 1) * n];
            let ab = la[b] as usize;
            let lab = &lub[ab * n..(ab + 1) * n];
            let bad = lb.iter().zip(lab).filter(|(bc, abc)| la[**bc as usize] != **abc).count();
            if bad > 0 {
                r.fail(format!("lub not associative for {} {} ({bad} third operands)", u[a], u[b]));
            }
        }
        r.triples += (n * n) as u64;
    }
    r
}
