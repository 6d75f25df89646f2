// Shared by the property suite and the acceptance target. Each check takes
// an rng and reports the first counterexample as an error string.
#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rootforge::hermitian::HermitianMarking;
use rootforge::linalg::Q;
use rootforge::pisys::{check_pi_system, generate, positive_basis, rebase_hermitian, weyl_equivalent, PiSystem, WeylWord};
use rootforge::rootsys::{Family, Root, RootSystem};
use rootforge::wdd::{
    apply_word, coroot_of, dominate, reflect_diagram_by, scale, weights_of, CorootVector, WeightedDiagram,
};

pub type Check = fn(&mut ChaCha8Rng) -> Result<(), String>;

fn build(list: &[(Family, usize)]) -> Vec<Arc<RootSystem>> {
    list.iter()
        .map(|&(f, n)| Arc::new(RootSystem::family(f, n).unwrap()))
        .collect()
}

/// Every family, including the non-simply-laced ones.
pub fn all_systems() -> &'static [Arc<RootSystem>] {
    static S: OnceLock<Vec<Arc<RootSystem>>> = OnceLock::new();
    S.get_or_init(|| {
        build(&[
            (Family::A, 4),
            (Family::B, 3),
            (Family::C, 4),
            (Family::D, 5),
            (Family::E, 6),
            (Family::E, 7),
            (Family::F, 4),
            (Family::G, 2),
        ])
    })
}

/// Systems small enough for exhaustive Weyl orbit search.
pub fn small_systems() -> &'static [Arc<RootSystem>] {
    static S: OnceLock<Vec<Arc<RootSystem>>> = OnceLock::new();
    S.get_or_init(|| build(&[(Family::A, 4), (Family::B, 3), (Family::D, 4), (Family::D, 5), (Family::E, 6)]))
}

/// Systems with their Hermitian marking at node 1.
pub fn hermitian_systems() -> &'static [HermitianMarking] {
    static S: OnceLock<Vec<HermitianMarking>> = OnceLock::new();
    S.get_or_init(|| {
        build(&[(Family::A, 5), (Family::D, 5), (Family::E, 6), (Family::E, 7)])
            .into_iter()
            .map(|s| HermitianMarking::new(s, 0).unwrap())
            .collect()
    })
}

pub fn pick<'a, T>(rng: &mut ChaCha8Rng, v: &'a [T]) -> &'a T {
    v.choose(rng).unwrap()
}

pub fn random_root(rng: &mut ChaCha8Rng, s: &RootSystem) -> Root {
    pick(rng, s.roots()).clone()
}

/// Greedy: shuffle the roots and keep each one that leaves a valid
/// Π-system, until `size` generators are collected.
pub fn random_pi_system(rng: &mut ChaCha8Rng, s: &Arc<RootSystem>, size: usize) -> PiSystem {
    let mut roots = s.roots().to_vec();
    roots.shuffle(rng);
    let mut gens: Vec<Root> = Vec::new();
    for r in roots {
        if gens.len() == size {
            break;
        }
        let mut trial = gens.clone();
        trial.push(r);
        if check_pi_system(s, trial.clone()).is_ok() {
            gens = trial;
        }
    }
    check_pi_system(s, gens).unwrap()
}

pub fn random_diagram(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> WeightedDiagram {
    WeightedDiagram::from_ints(&(0..n).map(|_| rng.gen_range(-bound..=bound)).collect::<Vec<_>>())
}

fn random_word(rng: &mut ChaCha8Rng, s: &RootSystem, max: usize) -> WeylWord {
    let len = rng.gen_range(0..=max);
    WeylWord((0..len).map(|_| random_root(rng, s)).collect())
}

pub fn reflection_closure(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let s = pick(rng, all_systems());
    let a = random_root(rng, s);
    let b = random_root(rng, s);
    let r = s.reflect(&a, &b).map_err(|e| e.to_string())?;
    if !s.contains(&r) {
        return Err(format!("s[{a}]({b}) = {r} is not a root"));
    }
    if s.reflect(&a, &r).unwrap() != b {
        return Err(format!("s[{a}] is not an involution on {b}"));
    }
    if s.reflect(&a, &a).unwrap() != -&a {
        return Err(format!("s[{a}] does not negate {a}"));
    }
    if s.norm(&r) != s.norm(&b) {
        return Err(format!("s[{a}] changes the length of {b}"));
    }
    let c = s.cartan_integer(&a, &b).unwrap();
    if !(-3..=3).contains(&c) {
        return Err(format!("Cartan integer {c} for {a}, {b}"));
    }
    Ok(())
}

pub fn generate_basis_identity(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let s = pick(rng, all_systems());
    let size = rng.gen_range(1..=s.rank());
    let pi = random_pi_system(rng, s, size);
    let sub = generate(&pi);
    let basis = positive_basis(&sub);
    if basis.len() != pi.len() {
        return Err(format!("{} generators but a basis of {}", pi.len(), basis.len()));
    }
    if basis.iter().any(|b| !b.is_positive()) {
        return Err("basis root is not positive".into());
    }
    let again = generate(&check_pi_system(s, basis.clone()).map_err(|e| e.to_string())?);
    if !again.same_roots(&sub) {
        return Err("generate(positive_basis(sub)) differs from sub".into());
    }
    Ok(())
}

pub fn rebase_one_noncompact(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = pick(rng, hermitian_systems());
    let s = m.system();
    let size = rng.gen_range(1..=s.rank());
    let pi = random_pi_system(rng, s, size);
    let sub = generate(&pi);
    let rb = rebase_hermitian(m, &sub).map_err(|e| e.to_string())?;
    let counts = rb.noncompact_per_component(s);
    if counts.iter().any(|&c| c > 1) {
        return Err(format!("noncompact counts {counts:?} for {:?}", pi.generators()));
    }
    rb.name(s).map_err(|e| format!("naming {:?}: {e}", rb.basis))?;
    for (b, c) in rb.basis.iter().zip(&rb.marks) {
        let negated = m.classify(&-b).map_err(|e| e.to_string())?;
        if negated != c.negated() {
            return Err(format!("classify(-{b}) is not the negated class"));
        }
    }
    Ok(())
}

pub fn dominate_properties(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let s = pick(rng, all_systems());
    let w = random_diagram(rng, s.rank(), 6);
    let (d, word) = dominate(s, &w).map_err(|e| e.to_string())?;
    if !d.is_dominant() {
        return Err(format!("{d} is not dominant"));
    }
    if apply_word(s, &w, &word).unwrap() != d {
        return Err(format!("returned word does not carry {w} to {d}"));
    }
    let (again, word2) = dominate(s, &d).unwrap();
    if again != d || !word2.is_empty() {
        return Err(format!("dominate is not idempotent on {d}"));
    }
    let moved = apply_word(s, &w, &random_word(rng, s, 6)).unwrap();
    if dominate(s, &moved).unwrap().0 != d {
        return Err(format!("orbit of {w} has two dominant points"));
    }
    let k = rng.gen_range(0..=4);
    if dominate(s, &scale(&w, k)).unwrap().0 != scale(&d, k) {
        return Err(format!("dominate does not commute with scaling {w} by {k}"));
    }
    Ok(())
}

pub fn psi_round_trip(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let s = pick(rng, all_systems());
    let n = s.rank();
    let h = CorootVector::new(
        (0..n)
            .map(|_| Q::new(rng.gen_range(-20..=20), rng.gen_range(1..=6)))
            .collect(),
    );
    let w = weights_of(s, &h).map_err(|e| e.to_string())?;
    if coroot_of(s, &w).unwrap() != h {
        return Err(format!("coroot_of(weights_of({h})) != {h}"));
    }
    let w2 = random_diagram(rng, n, 9);
    if weights_of(s, &coroot_of(s, &w2).unwrap()).unwrap() != w2 {
        return Err(format!("weights_of(coroot_of({w2})) != {w2}"));
    }
    Ok(())
}

/// The diagram of `s_beta H` read off through the root action: its weight
/// on `a_i` is `(s_beta a_i)(H)`.
pub fn diagram_reflection_matches_roots(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let s = pick(rng, all_systems());
    let n = s.rank();
    let w = random_diagram(rng, n, 6);
    let beta = random_root(rng, s);
    let got = reflect_diagram_by(s, &w, &beta).map_err(|e| e.to_string())?;
    for i in 0..n {
        let img = s.reflect(&beta, &s.simple_root(i)).unwrap();
        let expect: Q = (0..n).map(|j| w.weights()[j] * img.coeff(j)).sum();
        if got.weights()[i] != expect {
            return Err(format!("s[{beta}] on {w}: node {} has {} not {expect}", i + 1, got.weights()[i]));
        }
    }
    Ok(())
}

pub fn weyl_witness_soundness(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let s = pick(rng, small_systems());
    let size = rng.gen_range(1..=3.min(s.rank()));
    let a = generate(&random_pi_system(rng, s, size));
    let w = random_word(rng, s, 5);
    let b = w.apply_to(&a).map_err(|e| e.to_string())?;
    match weyl_equivalent(s, &a, &b).map_err(|e| e.to_string())? {
        Some(found) if found.is_witness(&a, &b) => Ok(()),
        Some(found) => Err(format!("word {found} is not a witness")),
        None => Err(format!("{w} relates the systems but the search found nothing")),
    }
}

pub const PROPERTIES: &[(&str, Check)] = &[
    ("reflection closure", reflection_closure),
    ("generate/positive_basis identity", generate_basis_identity),
    ("rebase one noncompact per component", rebase_one_noncompact),
    ("dominate idempotent, orbit-invariant, scale-equivariant", dominate_properties),
    ("diagram/coroot round trip", psi_round_trip),
    ("diagram reflection matches root reflection", diagram_reflection_matches_roots),
    ("Weyl witness soundness", weyl_witness_soundness),
];
