//! Dynkin Π-systems, the subroot systems they generate, positive bases and
//! Weyl-group equivalence of subsystems.

mod weyl;

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use weyl::{weyl_equivalent, weyl_equivalent_with_budget, WeylWord, DEFAULT_BFS_BUDGET};

use crate::error::{Error, Result};
use crate::hermitian::{
    decompose, local_cartan, name_real_form, DynkinType, HermitianMarking, NodeMark,
    RealFormName, RootClass,
};
use crate::linalg::SpanSolver;
use crate::rootsys::{Root, RootSystem};

/// A validated list of roots: linearly independent, with no pairwise
/// difference a root.
#[derive(Debug, Clone)]
pub struct PiSystem {
    system: Arc<RootSystem>,
    generators: Vec<Root>,
}

impl PiSystem {
    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn generators(&self) -> &[Root] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generate(&self) -> SubrootSystem {
        generate(self)
    }
}

pub fn check_pi_system(system: &Arc<RootSystem>, generators: Vec<Root>) -> Result<PiSystem> {
    for g in &generators {
        system.require_root(g)?;
    }
    let cols: Vec<Vec<i64>> = generators.iter().map(|g| g.coeffs().to_vec()).collect();
    let solver = SpanSolver::new(&cols, system.rank());
    if let Some(relation) = solver.relation() {
        return Err(Error::LinearlyDependent { relation });
    }
    for (i, a) in generators.iter().enumerate() {
        for b in &generators[i + 1..] {
            if system.contains(&(a - b)) {
                return Err(Error::DifferenceIsRoot(a.clone(), b.clone()));
            }
        }
    }
    Ok(PiSystem {
        system: Arc::clone(system),
        generators,
    })
}

/// A subset of the ambient roots closed under the integer span of a basis.
/// Roots are held as sorted ambient root indices.
#[derive(Debug, Clone)]
pub struct SubrootSystem {
    ambient: Arc<RootSystem>,
    roots: Vec<usize>,
    basis: Vec<Root>,
}

impl SubrootSystem {
    pub fn ambient(&self) -> &Arc<RootSystem> {
        &self.ambient
    }

    pub fn basis(&self) -> &[Root] {
        &self.basis
    }

    pub fn root_indices(&self) -> &[usize] {
        &self.roots
    }

    pub fn roots(&self) -> Vec<Root> {
        self.roots
            .iter()
            .map(|&i| self.ambient.roots()[i].clone())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.ambient
            .index_of(r)
            .is_some_and(|i| self.roots.binary_search(&i).is_ok())
    }

    /// Ambient-positive roots of the subsystem, in ambient order.
    pub fn positive_roots(&self) -> Vec<Root> {
        let half = self.ambient.len() / 2;
        self.roots
            .iter()
            .take_while(|&&i| i < half)
            .map(|&i| self.ambient.roots()[i].clone())
            .collect()
    }

    /// Same root set, regardless of basis.
    pub fn same_roots(&self, other: &SubrootSystem) -> bool {
        self.roots == other.roots
    }

    /// Connected Dynkin types of the subsystem, sorted.
    pub fn dynkin_types(&self) -> Vec<DynkinType> {
        let basis = positive_basis(self);
        let c = local_cartan(&self.ambient, &basis).expect("basis roots are ambient roots");
        let norms: Vec<i64> = basis.iter().map(|b| self.ambient.norm(b)).collect();
        let mut types: Vec<DynkinType> = decompose(&c, &norms)
            .expect("subsystems of finite systems are finite")
            .into_iter()
            .map(|c| c.ty)
            .collect();
        types.sort();
        types
    }

    pub(crate) fn from_indices(ambient: Arc<RootSystem>, mut roots: Vec<usize>, basis: Vec<Root>) -> Self {
        roots.sort_unstable();
        roots.dedup();
        Self {
            ambient,
            roots,
            basis,
        }
    }
}

/// `span_Z(generators) ∩ ambient roots`.
pub fn generate(pi: &PiSystem) -> SubrootSystem {
    let sys = &pi.system;
    let cols: Vec<Vec<i64>> = pi.generators.iter().map(|g| g.coeffs().to_vec()).collect();
    let solver = SpanSolver::new(&cols, sys.rank());
    let roots = sys
        .roots()
        .iter()
        .enumerate()
        .filter(|(_, r)| solver.solve_integral(r.coeffs()).is_some())
        .map(|(i, _)| i)
        .collect();
    SubrootSystem::from_indices(Arc::clone(sys), roots, pi.generators.clone())
}

/// Simple roots of `sub` for the ambient notion of positivity: positive
/// roots of `sub` that are not a sum of two positive roots of `sub`.
/// Sorted by height, then with earlier simple roots first.
pub fn positive_basis(sub: &SubrootSystem) -> Vec<Root> {
    let pos = sub.positive_roots();
    let set: HashSet<&Root> = pos.iter().collect();
    let mut decomposable: HashSet<Root> = HashSet::new();
    for (i, a) in pos.iter().enumerate() {
        for b in &pos[i + 1..] {
            let s = a + b;
            if set.contains(&s) {
                decomposable.insert(s);
            }
        }
    }
    let mut basis: Vec<Root> = pos.into_iter().filter(|r| !decomposable.contains(r)).collect();
    basis.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
    basis
}

/// A positive basis together with the class of each basis root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RebasedSystem {
    pub basis: Vec<Root>,
    pub marks: Vec<RootClass>,
}

impl RebasedSystem {
    pub fn node_marks(&self) -> Vec<NodeMark> {
        self.marks.iter().map(|&c| c.into()).collect()
    }

    pub fn name(&self, system: &RootSystem) -> Result<RealFormName> {
        name_real_form(system, &self.basis, &self.node_marks())
    }

    /// Number of noncompact basis roots in each connected component.
    pub fn noncompact_per_component(&self, system: &RootSystem) -> Vec<usize> {
        let c = local_cartan(system, &self.basis).expect("basis roots are ambient roots");
        let norms: Vec<i64> = self.basis.iter().map(|b| system.norm(b)).collect();
        decompose(&c, &norms)
            .expect("subsystems of finite systems are finite")
            .iter()
            .map(|comp| comp.nodes.iter().filter(|&&i| !self.marks[i].is_compact()).count())
            .collect()
    }
}

pub fn rebase_hermitian(m: &HermitianMarking, sub: &SubrootSystem) -> Result<RebasedSystem> {
    let basis = positive_basis(sub);
    let marks = basis
        .iter()
        .map(|b| m.classify(b))
        .collect::<Result<Vec<_>>>()?;
    Ok(RebasedSystem { basis, marks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn e6() -> Arc<RootSystem> {
        Arc::new(RootSystem::family(Family::E, 6).unwrap())
    }

    fn r(v: &[i64]) -> Root {
        Root::new(v.to_vec())
    }

    #[test]
    fn validation_failures() {
        let s = e6();
        let a1 = s.simple_root(0);
        assert!(matches!(
            check_pi_system(&s, vec![a1.clone(), -&a1]),
            Err(Error::LinearlyDependent { .. })
        ));
        let a2 = s.simple_root(1);
        match check_pi_system(&s, vec![a1.clone(), a2.clone(), &a1 + &a2]) {
            Err(Error::LinearlyDependent { relation }) => {
                let mut rel = relation.clone();
                if rel[0] < 0 {
                    rel.iter_mut().for_each(|x| *x = -*x);
                }
                assert_eq!(rel, vec![1, 1, -1]);
            }
            other => panic!("{other:?}"),
        }
        let a12 = &a1 + &a2;
        assert!(matches!(
            check_pi_system(&s, vec![a12, a1.clone()]),
            Err(Error::DifferenceIsRoot(_, _))
        ));
        assert!(matches!(
            check_pi_system(&s, vec![r(&[2, 0, 0, 0, 0, 0])]),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn a3_from_beta_one() {
        let s = e6();
        let pi = check_pi_system(
            &s,
            vec![r(&[0, 1, 2, 2, 1, 1]), s.simple_root(0), s.simple_root(1)],
        )
        .unwrap();
        let sub = generate(&pi);
        assert_eq!(sub.len(), 12);
        assert_eq!(sub.dynkin_types(), vec![DynkinType::A(3)]);
        let m = HermitianMarking::new(Arc::clone(&s), 0).unwrap();
        let rb = rebase_hermitian(&m, &sub).unwrap();
        assert_eq!(rb.name(&s).unwrap().to_string(), "su(2,2)");
        assert_eq!(rb.noncompact_per_component(&s), vec![1]);
    }

    #[test]
    fn trivial_subsystems() {
        let s = e6();
        let empty = generate(&check_pi_system(&s, vec![]).unwrap());
        assert!(empty.is_empty());
        assert!(positive_basis(&empty).is_empty());
        let full = generate(&check_pi_system(&s, s.simple_roots()).unwrap());
        assert_eq!(full.len(), 72);
        assert_eq!(positive_basis(&full), s.simple_roots());
        let neg = generate(&check_pi_system(&s, vec![-&s.simple_root(0)]).unwrap());
        assert_eq!(positive_basis(&neg), vec![s.simple_root(0)]);
    }

    #[test]
    fn compact_subsystem_has_no_noncompact_nodes() {
        let s = e6();
        let m = HermitianMarking::new(Arc::clone(&s), 0).unwrap();
        let sub = generate(&check_pi_system(&s, vec![s.simple_root(1), s.simple_root(2)]).unwrap());
        let rb = rebase_hermitian(&m, &sub).unwrap();
        assert!(rb.marks.iter().all(|c| c.is_compact()));
        assert_eq!(rb.noncompact_per_component(&s), vec![0]);
    }
}
