// Acceptance criteria, one PASS/FAIL line each. Built without the test
// harness; exits nonzero only if a criterion outside KNOWN_RED fails.
//
// Criterion 4 asks for exactly four su(2,2) chains in e6(-14). The tables
// also give su(2,2) -> so*(8) -> so*(10) -> e6(-14), so the count is five
// and that criterion is reported as failing. The four displayed chains, their
// root systems and the Weyl witnesses are all checked and do pass.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rootforge::catalog::{
    inclusion_chains, rank_sum_bound, sp_factor_candidates, tube_rank_filter, Catalog, TubeCandidate,
};
use rootforge::hermitian::{RealFormName, SimpleForm};
use rootforge::pisys::{check_pi_system, generate, weyl_equivalent_with_budget, SubrootSystem, WeylWord, DEFAULT_BFS_BUDGET};
use rootforge::rootsys::{Family, Root, RootSystem};
use rootforge::wdd::{
    decompose_diagonal, dominate, reflect_diagram, scale, sl2_admissible, weights_of, CorootEmbedding, CorootVector,
    WeightedDiagram,
};

const BUILD_TIME_LIMIT: Duration = Duration::from_secs(1);
const BFS_TIME_LIMIT: Duration = Duration::from_secs(60);
const PROPERTY_CASES: usize = 1000;
const PROPERTY_SEED: u64 = 0x5eed_2f0c_e6e7;
/// Criteria expected to fail; see the note at the top.
const KNOWN_RED: &[usize] = &[4];

/// Collects failed sub-checks of one criterion.
#[derive(Default)]
struct Criterion {
    failures: Vec<String>,
}

impl Criterion {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }
}

fn n(s: &str) -> RealFormName {
    s.parse().unwrap()
}

fn e6() -> Arc<RootSystem> {
    Arc::new(RootSystem::family(Family::E, 6).unwrap())
}

fn sub(s: &Arc<RootSystem>, gens: &[[i64; 6]]) -> SubrootSystem {
    generate(&check_pi_system(s, gens.iter().map(|g| Root::from(*g)).collect()).unwrap())
}

fn root_counts(c: &mut Criterion) {
    let mut cases: Vec<(Family, usize, usize)> = vec![(Family::E, 6, 72), (Family::E, 7, 126)];
    cases.extend((1..=8).map(|k| (Family::A, k, k * (k + 1))));
    cases.extend((4..=8).map(|k| (Family::D, k, 2 * k * (k - 1))));
    for (f, rank, want) in cases {
        let t = Instant::now();
        let s = RootSystem::family(f, rank).unwrap();
        let took = t.elapsed();
        c.eq(s.len(), want, &format!("|{f}{rank}|"));
        c.check(took < BUILD_TIME_LIMIT, format!("{f}{rank} took {took:?}"));
    }
}

fn diagram_pipeline(c: &mut Criterion) {
    let s = e6();
    let h = decompose_diagonal(&[3, -1, -3, 1]).unwrap();
    c.eq(h.clone(), CorootVector::from_ints(&[3, 2, -1]), "diagonal decomposition");

    let r1 = [[0, 1, 2, 2, 1, 1], [1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]].map(Root::from);
    let emb = CorootEmbedding::from_generators(&s, &r1).unwrap();
    c.eq(emb.images()[0].clone(), CorootVector::from_ints(&[0, 1, 2, 2, 1, 1]), "image of H_3");
    let pushed = emb.push(&h).unwrap();
    c.eq(pushed.clone(), CorootVector::from_ints(&[2, 2, 6, 6, 3, 3]), "pushed coroot");

    let mut w = weights_of(&s, &pushed).unwrap();
    c.eq(w.layout(&s), "2,-4,1,3,0;0".into(), "initial diagram");
    let steps: [(&[usize], &str); 6] = [
        (&[2], "-2,4,-3,3,0;0"),
        (&[3, 1], "2,-1,3,0,0;-3"),
        (&[6, 2], "1,1,-1,0,0;3"),
        (&[3], "1,0,1,-1,0;2"),
        (&[4], "1,0,0,1,-1;2"),
        (&[5], "1,0,0,0,1;2"),
    ];
    for (nodes, want) in steps {
        for &i in nodes {
            w = reflect_diagram(&s, &w, i - 1);
        }
        c.eq(w.layout(&s), want.to_string(), &format!("after s{nodes:?}"));
    }
    let start = weights_of(&s, &pushed).unwrap();
    let (d, _) = dominate(&s, &start).unwrap();
    c.eq(d, WeightedDiagram::from_ints(&[1, 0, 0, 0, 1, 2]), "dominate endpoint");
}

fn admissibility(c: &mut Criterion) {
    let s = e6();
    let w = WeightedDiagram::from_ints(&[1, 0, 0, 0, 1, 2]);
    c.eq(sl2_admissible(&s, &w).unwrap(), true, "(1,0,0,0,1;2)");
    c.eq(sl2_admissible(&s, &scale(&w, 2)).unwrap(), false, "(2,0,0,0,2;4)");
}

fn chains(c: &mut Criterion) {
    let s = e6();
    let t = Instant::now();
    let found = inclusion_chains(&n("su(2,2)"), &n("e6(-14)"), 3).unwrap();
    let a = |i: usize| {
        let mut v = [0; 6];
        v[i - 1] = 1;
        v
    };
    let displayed = [
        ("su(2,2) -> su(2,3) -> su(2,4) -> e6(-14)", [[0, 1, 2, 2, 1, 1], a(1), a(2)]),
        ("su(2,2) -> su(2,3) -> so*(10) -> e6(-14)", [[0, 1, 2, 2, 1, 1], a(1), a(2)]),
        ("su(2,2) -> so(8,2) -> e6(-14)", [[0, 1, 2, 1, 0, 1], a(1), a(2)]),
        ("su(2,2) -> so(6,2) -> so(8,2) -> e6(-14)", [a(1), a(2), [0, 1, 2, 1, 0, 1]]),
    ];
    let mut systems = Vec::new();
    for (names, gens) in &displayed {
        let want = sub(&s, gens);
        match found.iter().find(|ch| ch.to_string() == *names) {
            Some(ch) => c.check(ch.composed.same_roots(&want), format!("{names}: composed system differs")),
            None => c.check(false, format!("missing chain {names}")),
        }
        systems.push(want);
    }
    let got: Vec<String> = found.iter().map(|ch| ch.to_string()).collect();
    c.check(
        found.len() == 4,
        format!("expected exactly 4 chains, found {}: {}", found.len(), got.join(" | ")),
    );

    c.check(systems[0].same_roots(&systems[1]), "r1 and r2 systems differ");
    for (i, other) in systems.iter().enumerate().skip(2) {
        match weyl_equivalent_with_budget(&s, other, &systems[0], DEFAULT_BFS_BUDGET) {
            Ok(Some(w)) => c.check(w.is_witness(other, &systems[0]), format!("r{} witness invalid", i + 1)),
            other => c.check(false, format!("r{} not shown equivalent to r1: {other:?}", i + 1)),
        }
    }
    let given = WeylWord(vec![Root::from([0, 0, 0, 1, 1, 0])]);
    c.check(given.is_witness(&systems[2], &systems[0]), "s[a4+a5] does not carry r3 to r1");
    c.check(given.is_witness(&systems[3], &systems[0]), "s[a4+a5] does not carry r4 to r1");
    let took = t.elapsed();
    c.check(took < BFS_TIME_LIMIT, format!("chains and search took {took:?}"));
}

fn table_rows(c: &mut Criterion) {
    let cat = Catalog::builtin();
    let mut ambients: Vec<String> = Vec::new();
    for p in 1..=4 {
        for q in p..=8 - p {
            ambients.push(format!("su({p},{q})"));
        }
    }
    ambients.extend(["so*(8)", "so*(10)", "so*(12)", "so(6,2)", "so(8,2)", "e6(-14)", "e7(-25)"].map(String::from));
    for amb in &ambients {
        let report = match cat.enumerate(&n(amb)) {
            Ok(r) => r,
            Err(e) => {
                c.check(false, format!("{amb}: {e}"));
                continue;
            }
        };
        for f in &report.failures {
            c.check(false, format!("{}: {}", f.source, f.failure));
        }
        for e in &report.instances {
            let sys = e.pi_system.system();
            c.check(check_pi_system(sys, e.generators().to_vec()).is_ok(), format!("{} invalid", e.source));
            c.check(e.derived_name.is_isomorphic(&e.subalgebra), format!("{} misnamed", e.source));
            c.check(
                e.rebased.noncompact_per_component(sys).iter().all(|&k| k <= 1),
                format!("{} has a component with two noncompact roots", e.source),
            );
        }
    }
    let e7 = cat.enumerate(&n("e7(-25)")).unwrap();
    let fixed = e7.instances.iter().find(|e| e.row == "e6(-14)");
    c.check(fixed.is_some_and(|e| e.corrected), "e7 e6(-14) row not repaired");
    c.check(e7.audits.iter().any(|a| a.source == "e7(-25):e6(-14)"), "e7 e6(-14) row not audited");
    let su15 = e7.instances.iter().find(|e| e.row == "su(1,5)+su(1,2)");
    c.check(su15.is_some(), "e7 su(1,5)+su(1,2) row does not validate");
}

fn filters(c: &mut Criterion) {
    let mut tube: Vec<String> = tube_rank_filter(3)
        .into_iter()
        .filter(|t| *t != TubeCandidate::Form(SimpleForm::su(1, 1)))
        .map(|t| t.to_string())
        .collect();
    tube.sort();
    let mut seven: Vec<String> = ["su(2,2)", "su(3,3)", "so*(8)", "so*(12)", "sp(4,R)", "sp(6,R)", "so(n,2)"]
        .map(String::from)
        .to_vec();
    seven.sort();
    c.eq(tube, seven, "tube filter at rank 3");
    c.eq(sp_factor_candidates(2), vec![vec![1], vec![1, 1], vec![2]], "sp candidates at rank 2");

    let e7 = n("e7(-25)");
    let rank_two_up = ["su(2,2)", "su(3,3)", "so*(8)", "so*(12)", "so(6,2)", "su(2,5)"].map(n);
    for a in &rank_two_up {
        c.check(rank_sum_bound(std::slice::from_ref(a), &e7, 2), format!("[{a}] rejected"));
        for b in &rank_two_up {
            c.check(!rank_sum_bound(&[a.clone(), b.clone()], &e7, 2), format!("[{a}, {b}] accepted"));
        }
    }
    c.check(!rank_sum_bound(&[n("su(1,1)")], &e7, 2), "rank one component accepted");
}

fn properties(c: &mut Criterion) {
    for (i, (name, check)) in common::PROPERTIES.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(PROPERTY_SEED + i as u64);
        let failures = (0..PROPERTY_CASES).filter_map(|_| check(&mut rng).err()).collect::<Vec<_>>();
        c.check(
            failures.is_empty(),
            format!("{name}: {} of {PROPERTY_CASES} failed, first: {:?}", failures.len(), failures.first()),
        );
    }
}

// Runs without the libtest harness so the report is never captured.
fn main() {
    let criteria: [(&str, fn(&mut Criterion)); 7] = [
        ("root counts against brute force", root_counts),
        ("su(2,2) -> e6(-14) diagram pipeline", diagram_pipeline),
        ("sl2 admissibility of the endpoint and its double", admissibility),
        ("su(2,2) inclusion chains in e6(-14)", chains),
        ("table rows validate", table_rows),
        ("tube, sp and rank-sum filters", filters),
        ("property suites, fixed seed", properties),
    ];
    let mut red = Vec::new();
    for (i, (title, run)) in criteria.iter().enumerate() {
        let mut c = Criterion::default();
        run(&mut c);
        let id = i + 1;
        if c.failures.is_empty() {
            println!("PASS  [{id}] {title}");
        } else {
            println!("FAIL  [{id}] {title}");
            for f in &c.failures {
                println!("        {f}");
            }
            red.push(id);
        }
    }
    let unexpected: Vec<usize> = red.iter().copied().filter(|i| !KNOWN_RED.contains(i)).collect();
    if !unexpected.is_empty() {
        eprintln!("criteria {unexpected:?} failed");
        std::process::exit(1);
    }
    println!("{} of {} criteria pass; known red: {KNOWN_RED:?}", criteria.len() - red.len(), criteria.len());
}
