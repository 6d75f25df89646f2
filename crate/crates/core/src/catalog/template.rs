//! Symbolic generator templates over the table parameters `p, q, l, s, k`.
//!
//! Index expressions are small linear forms written as strings, e.g.
//! `"p+q-l+1"` or `"2p-2"`. Constraints compare two such forms with `<`,
//! `<=` or `==`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::rootsys::Root;

pub type Env = BTreeMap<char, i64>;

/// Evaluates a linear form such as `"p+q-l+1"` or `"2p-2l"`.
pub fn eval(expr: &str, env: &Env) -> Result<i64, String> {
    let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty expression".into());
    }
    let mut total = 0i64;
    let mut chars = s.chars().peekable();
    while chars.peek().is_some() {
        let mut sign = 1;
        while let Some(&c) = chars.peek() {
            match c {
                '+' => {}
                '-' => sign = -sign,
                _ => break,
            }
            chars.next();
        }
        let mut digits = String::new();
        while let Some(&c) = chars.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                chars.next();
            } else {
                break;
            }
        }
        if chars.peek() == Some(&'*') {
            chars.next();
        }
        let coeff: Option<i64> = if digits.is_empty() {
            None
        } else {
            Some(digits.parse().map_err(|e| format!("{expr:?}: {e}"))?)
        };
        let term = match chars.peek() {
            Some(&v) if v.is_ascii_alphabetic() => {
                chars.next();
                let val = *env
                    .get(&v)
                    .ok_or_else(|| format!("unbound parameter {v} in {expr:?}"))?;
                coeff.unwrap_or(1) * val
            }
            _ => coeff.ok_or_else(|| format!("malformed expression {expr:?}"))?,
        };
        total += sign * term;
    }
    Ok(total)
}

/// `"lhs<rhs"`, `"lhs<=rhs"` or `"lhs==rhs"`.
pub fn holds(constraint: &str, env: &Env) -> Result<bool, String> {
    for (op, f) in [
        ("<=", (|a, b| a <= b) as fn(i64, i64) -> bool),
        ("==", |a, b| a == b),
        ("<", |a, b| a < b),
    ] {
        if let Some((l, r)) = constraint.split_once(op) {
            return Ok(f(eval(l, env)?, eval(r, env)?));
        }
    }
    Err(format!("malformed constraint {constraint:?}"))
}

/// Replaces each `{expr}` in `template` by its value.
pub fn fill_name(template: &str, env: &Env) -> Result<String, String> {
    let mut out = String::new();
    let mut rest = template;
    while let Some(open) = rest.find('{') {
        out.push_str(&rest[..open]);
        let close = rest[open..]
            .find('}')
            .ok_or_else(|| format!("unclosed brace in {template:?}"))?
            + open;
        out.push_str(&eval(&rest[open + 1..close], env)?.to_string());
        rest = &rest[close + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Asc,
    Desc,
}

/// `coeff * (a_from + ... + a_to)`, empty when `from > to`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub coeff: i64,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootDef {
    Literal(Vec<i64>),
    Segments(Vec<Segment>),
}

impl RootDef {
    pub fn resolve(&self, rank: usize, env: &Env) -> Result<Root, String> {
        match self {
            RootDef::Literal(v) => {
                if v.len() != rank {
                    return Err(format!("literal root of length {} in rank {rank}", v.len()));
                }
                Ok(Root::new(v.clone()))
            }
            RootDef::Segments(segs) => {
                let mut v = vec![0i64; rank];
                for seg in segs {
                    let a = eval(&seg.from, env)?;
                    let b = eval(&seg.to, env)?;
                    for i in a..=b {
                        *slot(&mut v, i)? += seg.coeff;
                    }
                }
                Ok(Root::new(v))
            }
        }
    }
}

fn slot(v: &mut [i64], one_based: i64) -> Result<&mut i64, String> {
    let n = v.len();
    if one_based < 1 || one_based as usize > n {
        return Err(format!("index {one_based} outside 1..={n}"));
    }
    Ok(&mut v[one_based as usize - 1])
}

/// One entry of a generator list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Item {
    /// `±a_index`
    Simple { neg: bool, index: String },
    /// `±a_from, ..., ±a_to` stepping in the given direction; empty when
    /// the endpoints are out of order for that direction.
    Range {
        neg: bool,
        from: String,
        to: String,
        dir: Direction,
    },
    /// `±` a root defined in the table header.
    Named { neg: bool, name: String },
}

impl Item {
    pub fn simple(index: &str) -> Self {
        Item::Simple {
            neg: false,
            index: index.into(),
        }
    }

    pub fn neg_simple(index: &str) -> Self {
        Item::Simple {
            neg: true,
            index: index.into(),
        }
    }

    pub fn asc(from: &str, to: &str) -> Self {
        Item::Range {
            neg: false,
            from: from.into(),
            to: to.into(),
            dir: Direction::Asc,
        }
    }

    pub fn desc(from: &str, to: &str) -> Self {
        Item::Range {
            neg: false,
            from: from.into(),
            to: to.into(),
            dir: Direction::Desc,
        }
    }

    pub fn neg_asc(from: &str, to: &str) -> Self {
        Item::Range {
            neg: true,
            from: from.into(),
            to: to.into(),
            dir: Direction::Asc,
        }
    }

    pub fn neg_desc(from: &str, to: &str) -> Self {
        Item::Range {
            neg: true,
            from: from.into(),
            to: to.into(),
            dir: Direction::Desc,
        }
    }

    pub fn named(name: &str) -> Self {
        Item::Named {
            neg: false,
            name: name.into(),
        }
    }

    pub fn neg_named(name: &str) -> Self {
        Item::Named {
            neg: true,
            name: name.into(),
        }
    }
}

/// Expands generator groups (the pieces joined by a union in the tables)
/// to roots.
pub fn expand(
    groups: &[Vec<Item>],
    rank: usize,
    named: &[NamedRoot],
    env: &Env,
) -> Result<Vec<Root>, String> {
    let mut out = Vec::new();
    let unit = |i: i64, neg: bool| -> Result<Root, String> {
        let mut v = vec![0i64; rank];
        *slot(&mut v, i)? = if neg { -1 } else { 1 };
        Ok(Root::new(v))
    };
    for item in groups.iter().flatten() {
        match item {
            Item::Simple { neg, index } => out.push(unit(eval(index, env)?, *neg)?),
            Item::Range { neg, from, to, dir } => {
                let a = eval(from, env)?;
                let b = eval(to, env)?;
                match dir {
                    Direction::Asc => {
                        for i in a..=b {
                            out.push(unit(i, *neg)?);
                        }
                    }
                    Direction::Desc => {
                        for i in (b..=a).rev() {
                            out.push(unit(i, *neg)?);
                        }
                    }
                }
            }
            Item::Named { neg, name } => {
                let def = named
                    .iter()
                    .find(|n| &n.name == name)
                    .ok_or_else(|| format!("unknown named root {name:?}"))?;
                let r = def.def.resolve(rank, env)?;
                out.push(if *neg { -r } else { r });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedRoot {
    pub name: String,
    pub def: RootDef,
}

/// How a row whose printed generators fail validation is repaired.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Correction {
    /// A replacement generator list.
    Replace { generators: Vec<Vec<Item>>, reason: String },
    /// Try every positive root in position `slot` of the printed list and
    /// keep those that validate.
    Search { slot: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowTemplate {
    pub id: String,
    /// Name with `{expr}` placeholders, e.g. `"su({l},{q})"`.
    pub name: String,
    /// Free row parameters, drawn from `l` and `s`.
    #[serde(default)]
    pub vars: Vec<char>,
    #[serde(default)]
    pub constraints: Vec<String>,
    pub printed: Vec<Vec<Item>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub correction: Option<Correction>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(pairs: &[(char, i64)]) -> Env {
        pairs.iter().copied().collect()
    }

    #[test]
    fn expressions() {
        let e = env(&[('p', 3), ('q', 5), ('l', 2)]);
        assert_eq!(eval("p+q-l+1", &e).unwrap(), 7);
        assert_eq!(eval("2p-2l", &e).unwrap(), 2);
        assert_eq!(eval("2*q", &e).unwrap(), 10);
        assert_eq!(eval("-1", &e).unwrap(), -1);
        assert_eq!(eval("3", &e).unwrap(), 3);
        assert!(eval("k", &e).is_err());
        assert!(eval("", &e).is_err());
        assert!(holds("1<=l", &e).unwrap());
        assert!(!holds("l<1", &e).unwrap());
        assert!(holds("p<=2l+1", &e).unwrap());
        assert_eq!(fill_name("su({l},{q-l})", &e).unwrap(), "su(2,3)");
    }

    #[test]
    fn ranges_and_segments() {
        let e = env(&[('p', 4)]);
        let named = vec![NamedRoot {
            name: "gamma".into(),
            def: RootDef::Segments(vec![
                Segment { coeff: 1, from: "1".into(), to: "1".into() },
                Segment { coeff: 2, from: "2".into(), to: "p-2".into() },
                Segment { coeff: 1, from: "p-1".into(), to: "p".into() },
            ]),
        }];
        let gens = expand(
            &[vec![Item::desc("3", "1"), Item::neg_asc("4", "3"), Item::neg_named("gamma")]],
            4,
            &named,
            &e,
        )
        .unwrap();
        assert_eq!(
            gens,
            vec![
                Root::from([0, 0, 1, 0]),
                Root::from([0, 1, 0, 0]),
                Root::from([1, 0, 0, 0]),
                Root::from([-1, -2, -1, -1]),
            ]
        );
        assert!(expand(&[vec![Item::simple("p+1")]], 4, &named, &e).is_err());
    }
}
