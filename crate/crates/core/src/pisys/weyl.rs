use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::SubrootSystem;
use crate::error::{Error, Result};
use crate::rootsys::{pretty, Root, RootSystem};

/// Enough states to sweep the whole Weyl group of E7.
pub const DEFAULT_BFS_BUDGET: usize = 2_903_040;

/// A product of reflections, applied in list order: the first root's
/// reflection acts first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylWord(pub Vec<Root>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn reflections(&self) -> &[Root] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, alpha: Root) {
        self.0.push(alpha);
    }

    pub fn validate(&self, system: &RootSystem) -> Result<()> {
        self.0.iter().try_for_each(|a| system.require_root(a))
    }

    /// Image of any lattice vector.
    pub fn apply(&self, system: &RootSystem, v: &Root) -> Root {
        self.0
            .iter()
            .fold(v.clone(), |acc, a| system.reflect_vector(a, &acc))
    }

    /// Image of a subsystem: roots and basis are both carried along.
    pub fn apply_to(&self, sub: &SubrootSystem) -> Result<SubrootSystem> {
        let sys = sub.ambient();
        self.validate(sys)?;
        let roots = sub
            .roots()
            .iter()
            .map(|r| sys.index_of(&self.apply(sys, r)).expect("Weyl group permutes roots"))
            .collect();
        let basis = sub.basis().iter().map(|b| self.apply(sys, b)).collect();
        Ok(SubrootSystem::from_indices(Arc::clone(sys), roots, basis))
    }

    /// The inverse word (reflections are involutions).
    pub fn inverse(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().cloned().collect())
    }

    /// Does this word carry `a`'s root set onto `b`'s?
    pub fn is_witness(&self, a: &SubrootSystem, b: &SubrootSystem) -> bool {
        self.apply_to(a).is_ok_and(|img| img.same_roots(b))
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|a| format!("s[{}]", pretty(a))).collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub fn weyl_equivalent(system: &RootSystem, a: &SubrootSystem, b: &SubrootSystem) -> Result<Option<WeylWord>> {
    weyl_equivalent_with_budget(system, a, b, DEFAULT_BFS_BUDGET)
}

/// Breadth-first search over simple reflections acting on root sets.
///
/// Returns a shortest word in the simple reflections (ties broken by
/// node order) or `None` when `b` is not in the orbit of `a`. Subsystems of
/// different sizes or Dynkin types are rejected without searching.
pub fn weyl_equivalent_with_budget(
    system: &RootSystem,
    a: &SubrootSystem,
    b: &SubrootSystem,
    budget: usize,
) -> Result<Option<WeylWord>> {
    for sub in [a, b] {
        if sub.ambient().rank() != system.rank() || sub.ambient().len() != system.len() {
            return Err(Error::DimensionMismatch {
                expected: system.rank(),
                actual: sub.ambient().rank(),
            });
        }
    }
    if a.same_roots(b) {
        return Ok(Some(WeylWord::identity()));
    }
    if a.len() != b.len() || a.dynkin_types() != b.dynkin_types() {
        return Ok(None);
    }

    let key = |v: &[usize]| -> Vec<u16> { v.iter().map(|&i| i as u16).collect() };
    let target = key(b.root_indices());
    let start = key(a.root_indices());
    // state id -> (parent id, simple node)
    let mut parent: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX)];
    let mut states: Vec<Vec<u16>> = vec![start.clone()];
    let mut seen: HashMap<Vec<u16>, usize> = HashMap::from([(start, 0)]);
    let mut head = 0;
    let mut found = None;
    'search: while head < states.len() {
        for i in 0..system.rank() {
            let perm = system.simple_reflection_perm(i);
            let mut next: Vec<u16> = states[head].iter().map(|&r| perm[r as usize] as u16).collect();
            next.sort_unstable();
            if seen.contains_key(&next) {
                continue;
            }
            if seen.len() >= budget {
                return Err(Error::SearchBudgetExceeded { explored: seen.len() });
            }
            let id = states.len();
            seen.insert(next.clone(), id);
            parent.push((head, i));
            let hit = next == target;
            states.push(next);
            if hit {
                found = Some(id);
                break 'search;
            }
        }
        head += 1;
    }
    let Some(mut id) = found else {
        return Ok(None);
    };
    let mut nodes = Vec::new();
    while id != 0 {
        let (p, i) = parent[id];
        nodes.push(i);
        id = p;
    }
    nodes.reverse();
    let word = WeylWord(nodes.into_iter().map(|i| system.simple_root(i)).collect());
    assert!(word.is_witness(a, b), "search produced an invalid witness");
    Ok(Some(word))
}
