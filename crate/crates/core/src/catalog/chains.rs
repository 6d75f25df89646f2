use std::collections::HashSet;
use std::fmt;

use super::{ambient_for, Ambient, Catalog, CatalogEntry};
use crate::error::{Error, Result};
use crate::hermitian::{local_cartan, RealFormName};
use crate::pisys::{check_pi_system, generate, rebase_hermitian, SubrootSystem};
use crate::rootsys::Root;

/// A sequence of catalog entries, outermost first, each a subalgebra of
/// the previous one's subalgebra.
#[derive(Debug, Clone)]
pub struct InclusionChain {
    pub ambient: RealFormName,
    pub steps: Vec<CatalogEntry>,
    /// Generators of each step's subalgebra in outermost coordinates.
    pub levels: Vec<Vec<Root>>,
    /// The innermost subsystem in outermost coordinates.
    pub composed: SubrootSystem,
}

impl InclusionChain {
    pub fn depth(&self) -> usize {
        self.steps.len()
    }

    /// Names from the innermost algebra out to the ambient.
    pub fn names(&self) -> Vec<RealFormName> {
        let mut v: Vec<RealFormName> = self.steps.iter().rev().map(|e| e.subalgebra.clone()).collect();
        v.push(self.ambient.clone());
        v
    }

    pub fn composed_generators(&self) -> &[Root] {
        self.levels.last().map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_tight(&self) -> Result<bool> {
        let inner = self.names()[0].clone();
        super::is_tight_inclusion(&inner, &self.ambient)
    }
}

impl fmt::Display for InclusionChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.names().iter().map(|n| n.to_string()).collect();
        write!(f, "{}", names.join(" -> "))
    }
}

/// Lexicographically first bijection `phi` with `a[i][j] == b[phi(i)][phi(j)]`
/// and `phi(0) == pinned`.
pub(crate) fn diagram_isomorphism(a: &[Vec<i64>], b: &[Vec<i64>], pinned: usize) -> Option<Vec<usize>> {
    let n = a.len();
    if b.len() != n || n == 0 {
        return None;
    }
    fn extend(a: &[Vec<i64>], b: &[Vec<i64>], phi: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = phi.len();
        if i == a.len() {
            return true;
        }
        for cand in 0..a.len() {
            if used[cand] || a[i][i] != b[cand][cand] {
                continue;
            }
            if (0..i).all(|j| a[i][j] == b[cand][phi[j]] && a[j][i] == b[phi[j]][cand]) {
                used[cand] = true;
                phi.push(cand);
                if extend(a, b, phi, used) {
                    return true;
                }
                phi.pop();
                used[cand] = false;
            }
        }
        false
    }
    let mut used = vec![false; n];
    used[pinned] = true;
    let mut phi = vec![pinned];
    extend(a, b, &mut phi, &mut used).then_some(phi)
}

fn push_through(map: &[Root], r: &Root) -> Root {
    let mut out = Root::zero(map[0].rank());
    for (c, img) in r.coeffs().iter().zip(map) {
        out = out.add_multiple(*c, img);
    }
    out
}

struct Search<'a> {
    catalog: &'a Catalog,
    outer: Ambient,
    target: RealFormName,
    max_depth: usize,
    seen: HashSet<(Vec<RealFormName>, Vec<usize>)>,
    found: Vec<InclusionChain>,
}

impl Search<'_> {
    /// `map[i]` is the image of the current algebra's `i`-th labeled simple
    /// root in outermost coordinates.
    fn expand(&mut self, current: &RealFormName, map: &[Root], steps: &mut Vec<CatalogEntry>, levels: &mut Vec<Vec<Root>>) -> Result<()> {
        let entries = self.catalog.maximal_subalgebras(current)?;
        for entry in entries {
            let gens: Vec<Root> = entry.generators().iter().map(|g| push_through(map, g)).collect();
            let pi = check_pi_system(&self.outer.system, gens.clone())?;
            let composed = generate(&pi);
            steps.push(entry.clone());
            levels.push(gens);
            if entry.subalgebra.canonical() == self.target {
                let key: Vec<RealFormName> = steps.iter().map(|e| e.subalgebra.canonical()).collect();
                if self.seen.insert((key, composed.root_indices().to_vec())) {
                    self.found.push(InclusionChain {
                        ambient: self.outer.name.clone(),
                        steps: steps.clone(),
                        levels: levels.clone(),
                        composed,
                    });
                }
            } else if steps.len() < self.max_depth && entry.subalgebra.is_simple() {
                if let Some(next) = self.inner_map(&entry.subalgebra, &composed)? {
                    self.expand(&entry.subalgebra, &next, steps, levels)?;
                }
            }
            steps.pop();
            levels.pop();
        }
        Ok(())
    }

    /// Identifies the labeled diagram of `name` with the rebased basis of
    /// `sub`, sending node 1 to the noncompact basis root.
    fn inner_map(&self, name: &RealFormName, sub: &SubrootSystem) -> Result<Option<Vec<Root>>> {
        let inner = match ambient_for(name) {
            Ok(a) => a,
            Err(Error::UnsupportedAmbient(_) | Error::ParameterOutOfRange(_)) => return Ok(None),
            Err(e) => return Err(e),
        };
        let rb = rebase_hermitian(&self.outer.marking, sub)?;
        let Some(nc) = rb.marks.iter().position(|m| !m.is_compact()) else {
            return Ok(None);
        };
        let local = local_cartan(&self.outer.system, &rb.basis)?;
        let phi = diagram_isomorphism(inner.system.cartan().entries(), &local, nc);
        Ok(phi.map(|phi| phi.iter().map(|&j| rb.basis[j].clone()).collect()))
    }
}

impl Catalog {
    /// All chains of maximal entries, at most `max_depth` long, ending in
    /// an algebra isomorphic to `target`. Chains are deduplicated on the
    /// sequence of names together with the composed root set.
    pub fn inclusion_chains(&self, target: &RealFormName, ambient: &RealFormName, max_depth: usize) -> Result<Vec<InclusionChain>> {
        let outer = ambient_for(ambient)?;
        let identity = outer.system.simple_roots();
        if target.canonical() == outer.name.canonical() {
            let pi = check_pi_system(&outer.system, identity.clone())?;
            return Ok(vec![InclusionChain {
                ambient: outer.name.clone(),
                steps: Vec::new(),
                levels: Vec::new(),
                composed: generate(&pi),
            }]);
        }
        let mut search = Search {
            catalog: self,
            outer: outer.clone(),
            target: target.canonical(),
            max_depth,
            seen: HashSet::new(),
            found: Vec::new(),
        };
        if max_depth > 0 {
            search.expand(&outer.name, &identity, &mut Vec::new(), &mut Vec::new())?;
        }
        Ok(search.found)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphism_respects_pin() {
        // A3 path 0-1-2 against path 2-0-1
        let a = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        let b = vec![vec![2, -1, -1], vec![-1, 2, 0], vec![-1, 0, 2]];
        assert_eq!(diagram_isomorphism(&a, &b, 1), Some(vec![1, 0, 2]));
        assert_eq!(diagram_isomorphism(&a, &b, 2), Some(vec![2, 0, 1]));
        assert_eq!(diagram_isomorphism(&a, &b, 0), None);
    }
}
