//! The tables of maximal Hermitian regular subalgebras, as printed, with
//! repairs for the rows whose printed generators do not validate.

use serde::{Deserialize, Serialize};

use super::template::{Correction, Item, NamedRoot, RootDef, RowTemplate, Segment};

/// Families with a table. Each fixes a labeled diagram with the
/// noncompact simple root as node 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    /// su(p,q): nodes a_{q+1}, ..., a_{p+q-1}, a_1, ..., a_q along a path.
    Su,
    /// so*(2p): path a_1, ..., a_{p-1} with a_p attached to a_2.
    SoStar,
    /// so(2k-2,2): path a_1, ..., a_{k-1} with a_k attached to a_{k-2}.
    SoTwo,
    E6,
    E7,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub kind: TableKind,
    pub named: Vec<NamedRoot>,
    pub rows: Vec<RowTemplate>,
}

impl Table {
    pub fn row(&self, id: &str) -> Option<&RowTemplate> {
        self.rows.iter().find(|r| r.id == id)
    }

    pub fn named_root(&self, name: &str) -> Option<&NamedRoot> {
        self.named.iter().find(|n| n.name == name)
    }
}

fn seg(coeff: i64, from: &str, to: &str) -> Segment {
    Segment {
        coeff,
        from: from.into(),
        to: to.into(),
    }
}

fn named(name: &str, def: RootDef) -> NamedRoot {
    NamedRoot {
        name: name.into(),
        def,
    }
}

fn row(id: &str, name: &str, vars: &[char], constraints: &[&str], printed: Vec<Vec<Item>>) -> RowTemplate {
    RowTemplate {
        id: id.into(),
        name: name.into(),
        vars: vars.to_vec(),
        constraints: constraints.iter().map(|c| c.to_string()).collect(),
        printed,
        correction: None,
    }
}

fn replace(mut r: RowTemplate, generators: Vec<Vec<Item>>, reason: &str) -> RowTemplate {
    r.correction = Some(Correction::Replace {
        generators,
        reason: reason.into(),
    });
    r
}

fn simples(indices: &[&str]) -> Vec<Item> {
    indices.iter().map(|i| Item::simple(i)).collect()
}

fn su_table() -> Table {
    use Item as I;
    let second_printed = vec![I::neg_desc("p+q-l-2", "q+1"), I::named("gamma"), I::neg_desc("q", "s+2")];
    let second = vec![I::neg_desc("p+q-l-1", "q+1"), I::named("gamma"), I::neg_desc("q", "s+2")];
    Table {
        kind: TableKind::Su,
        named: vec![named("gamma", RootDef::Segments(vec![seg(1, "1", "p+q-1")]))],
        rows: vec![
            replace(
                row(
                    "su(l,q)",
                    "su({l},{q})",
                    &['l'],
                    &["1<=l", "l<p"],
                    vec![vec![I::asc("p+q-l", "p+q-1"), I::asc("1", "q")]],
                ),
                vec![vec![I::asc("p+q-l+1", "p+q-1"), I::asc("1", "q")]],
                "printed range starts one node early and spans su(l+1,q)",
            ),
            row(
                "su(p,s)",
                "su({p},{s})",
                &['s'],
                &["p<=s", "s<q"],
                vec![vec![I::asc("q+1", "p+q-1"), I::asc("1", "s")]],
            ),
            row(
                "su(s,p)",
                "su({s},{p})",
                &['s'],
                &["1<=s", "s<p"],
                vec![vec![I::desc("s", "1"), I::desc("p+q-1", "q+1")]],
            ),
            replace(
                row(
                    "su(l,s)+su(p-l,q-s)",
                    "su({l},{s})+su({p-l},{q-s})",
                    &['l', 's'],
                    &["1<=l", "l<=s", "p-l<=q-s", "l<p", "s<q"],
                    vec![vec![I::asc("p+q-l", "p+q-2"), I::asc("1", "s")], second_printed.clone()],
                ),
                vec![vec![I::asc("p+q-l+1", "p+q-1"), I::asc("1", "s")], second.clone()],
                "printed index ranges are shifted; the first piece must end at a_{p+q-1} next to a_1 \
                 and the second must start at a_{p+q-l-1} next to the gap node",
            ),
            replace(
                row(
                    "su(s,l)+su(p-l,q-s)",
                    "su({s},{l})+su({p-l},{q-s})",
                    &['l', 's'],
                    &["1<=s", "s<l", "l<p"],
                    vec![vec![I::desc("s", "1"), I::desc("p+q-1", "p+q-l")], second_printed],
                ),
                vec![vec![I::desc("s", "1"), I::desc("p+q-1", "p+q-l+1")], second],
                "printed ranges overlap the gap node a_{p+q-l}",
            ),
        ],
    }
}

fn so_star_table() -> Table {
    use Item as I;
    Table {
        kind: TableKind::SoStar,
        named: vec![
            named(
                "gamma",
                RootDef::Segments(vec![seg(1, "1", "1"), seg(2, "2", "p-2"), seg(1, "p-1", "p")]),
            ),
            named("beta", RootDef::Segments(vec![seg(1, "2", "p")])),
        ],
        rows: vec![
            replace(
                row(
                    "su(l,p-l)",
                    "su({l},{p-l})",
                    &['l'],
                    &["1<=l", "2l<=p"],
                    vec![vec![I::neg_asc("p-l+2", "p-1"), I::named("beta"), I::asc("1", "p-l")]],
                ),
                vec![vec![I::asc("1", "p-1")]],
                "at l=1 the printed list has p roots and beta - a_{p-1} is a root; the chain a_1..a_{p-1} spans su(1,p-1)",
            ),
            row(
                "so*(2l)+so*(2(p-l))",
                "so*({2l})+so*({2p-2l})",
                &['l'],
                &["p<=2l+1", "l<=p-2"],
                vec![
                    vec![I::asc("1", "l-1"), I::simple("p")],
                    vec![I::named("gamma"), I::neg_desc("p-2", "l+1"), I::neg_simple("p-1")],
                ],
            ),
            row(
                "so*(2(p-1))",
                "so*({2p-2})",
                &[],
                &[],
                vec![vec![I::asc("1", "p-2"), I::simple("p")]],
            ),
        ],
    }
}

fn so_two_table() -> Table {
    use Item as I;
    Table {
        kind: TableKind::SoTwo,
        named: vec![
            named(
                "gamma",
                RootDef::Segments(vec![seg(1, "1", "1"), seg(2, "2", "k-2"), seg(1, "k-1", "k")]),
            ),
            named(
                "beta1",
                RootDef::Segments(vec![seg(1, "2", "2"), seg(2, "3", "k-2"), seg(1, "k-1", "k")]),
            ),
            named("beta2", RootDef::Segments(vec![seg(1, "k-2", "k")])),
        ],
        rows: vec![
            row(
                "su(1,1)+su(1,1)",
                "su(1,1)+su(1,1)",
                &[],
                &[],
                vec![vec![I::simple("1")], vec![I::named("gamma")]],
            ),
            row(
                "su(1,k-1)",
                "su(1,{k-1})",
                &[],
                &[],
                vec![vec![I::asc("1", "k-2"), I::simple("k")]],
            ),
            row(
                "su(2,2)",
                "su(2,2)",
                &[],
                &[],
                vec![vec![I::named("beta1"), I::simple("1"), I::simple("2")]],
            ),
            row(
                "so(p-2,2)",
                "so({p-2},2)",
                &[],
                &[],
                vec![vec![I::asc("1", "k-2"), I::named("beta2")]],
            ),
        ],
    }
}

fn e6_table() -> Table {
    use Item as I;
    Table {
        kind: TableKind::E6,
        named: vec![
            named("gamma", RootDef::Literal(vec![1, 2, 3, 2, 1, 2])),
            named("beta1", RootDef::Literal(vec![0, 1, 2, 2, 1, 1])),
            named("beta2", RootDef::Literal(vec![0, 0, 1, 1, 1, 1])),
        ],
        rows: vec![
            row(
                "su(1,5)+su(1,1)",
                "su(1,5)+su(1,1)",
                &[],
                &[],
                vec![vec![I::asc("1", "5")], vec![I::named("gamma")]],
            ),
            row(
                "su(1,2)+su(1,2)",
                "su(1,2)+su(1,2)",
                &[],
                &[],
                vec![simples(&["1", "2"]), vec![I::named("gamma"), I::neg_simple("6")]],
            ),
            row("su(2,4)", "su(2,4)", &[], &[], vec![{
                let mut g = vec![I::named("beta1")];
                g.extend(simples(&["1", "2", "3", "6"]));
                g
            }]),
            row("so*(10)", "so*(10)", &[], &[], vec![{
                let mut g = simples(&["1", "2", "3", "4"]);
                g.push(I::named("beta2"));
                g
            }]),
            row("so(8,2)", "so(8,2)", &[], &[], vec![simples(&["1", "2", "3", "4", "6"])]),
        ],
    }
}

fn e7_table() -> Table {
    use Item as I;
    let mut e6_row = row("e6(-14)", "e6(-14)", &[], &[], vec![{
        let mut g = simples(&["1", "3", "4", "5", "5"]);
        g.push(I::named("beta3"));
        g
    }]);
    e6_row.correction = Some(Correction::Search {
        slot: 4,
        reason: "printed list repeats a_5 and omits a node; the repeated slot is recovered by search".into(),
    });
    Table {
        kind: TableKind::E7,
        named: vec![
            named("gamma", RootDef::Literal(vec![1, 2, 3, 4, 3, 2, 2])),
            named("beta1", RootDef::Literal(vec![0, 1, 2, 3, 2, 1, 2])),
            named("beta2", RootDef::Literal(vec![0, 0, 1, 2, 2, 1, 1])),
            named("beta3", RootDef::Literal(vec![0, 0, 0, 1, 1, 1, 1])),
        ],
        rows: vec![
            row(
                "su(1,5)+su(1,2)",
                "su(1,5)+su(1,2)",
                &[],
                &[],
                vec![
                    vec![I::asc("1", "4"), I::simple("7")],
                    vec![I::named("gamma"), I::neg_simple("6")],
                ],
            ),
            row(
                "su(1,3)+su(1,3)",
                "su(1,3)+su(1,3)",
                &[],
                &[],
                vec![
                    simples(&["1", "2", "3"]),
                    vec![I::named("gamma"), I::neg_simple("6"), I::neg_simple("5")],
                ],
            ),
            row("su(2,6)", "su(2,6)", &[], &[], vec![vec![I::named("beta1"), I::asc("1", "6")]]),
            row("su(3,3)", "su(3,3)", &[], &[], vec![{
                let mut g = vec![I::neg_simple("7"), I::named("beta1")];
                g.extend(simples(&["1", "2", "3"]));
                g
            }]),
            row("so*(12)", "so*(12)", &[], &[], vec![{
                let mut g = simples(&["1", "2", "3", "4", "7"]);
                g.push(I::named("beta2"));
                g
            }]),
            row(
                "so(10,2)+su(1,1)",
                "so(10,2)+su(1,1)",
                &[],
                &[],
                vec![simples(&["1", "2", "3", "4", "5", "7"]), vec![I::named("gamma")]],
            ),
            e6_row,
        ],
    }
}

/// All five tables.
pub fn builtin_tables() -> Vec<Table> {
    vec![su_table(), so_star_table(), so_two_table(), e6_table(), e7_table()]
}
