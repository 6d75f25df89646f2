//! Finite root systems built from Cartan matrices.
//!
//! Roots live in simple-root coordinates. The inner product is the
//! symmetrized form `B = D A`; only Cartan integers (ratios of inner
//! products) are ever consumed, so its global scale is irrelevant.

mod cartan;
mod root;

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

pub use cartan::{CartanMatrix, Family};
pub use root::{pretty, Root};

use crate::error::{Error, Result};

/// Closure gives up past this many roots. E8 has 240.
pub const DEFAULT_ROOT_BOUND: usize = 10_000;

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: CartanMatrix,
    symmetrizer: Vec<i64>,
    form: Vec<Vec<i64>>,
    /// Positive roots sorted by (height, coefficients), followed by their
    /// negatives in the same order.
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    /// `simple_perm[i][r]` is the index of `s_i(roots[r])`.
    simple_perm: Vec<Vec<usize>>,
}

pub fn build_root_system(cartan: CartanMatrix) -> Result<RootSystem> {
    RootSystem::build(cartan)
}

impl RootSystem {
    pub fn build(cartan: CartanMatrix) -> Result<Self> {
        Self::build_with_bound(cartan, DEFAULT_ROOT_BOUND)
    }

    pub fn family(family: Family, rank: usize) -> Result<Self> {
        Self::build(CartanMatrix::family(family, rank)?)
    }

    /// Orbit of the simple roots under the simple reflections. Every root is
    /// Weyl-conjugate to a simple root, so this is the whole system.
    pub fn build_with_bound(cartan: CartanMatrix, bound: usize) -> Result<Self> {
        if !cartan.is_finite_type() {
            return Err(Error::NotFiniteType(
                "symmetrized form is not positive definite".into(),
            ));
        }
        let n = cartan.rank();
        let mut seen: HashMap<Root, ()> = HashMap::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 0..n {
            let r = Root::simple(n, i);
            seen.insert(r.clone(), ());
            queue.push_back(r);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta.coeff(j) * cartan.get(i, j)).sum();
                if pairing == 0 {
                    continue;
                }
                let mut image = beta.clone().into_inner();
                image[i] -= pairing;
                let image = Root::new(image);
                if !seen.contains_key(&image) {
                    if seen.len() >= bound {
                        return Err(Error::NotFiniteType(format!(
                            "reflection closure exceeded {bound} roots"
                        )));
                    }
                    seen.insert(image.clone(), ());
                    queue.push_back(image);
                }
            }
        }
        let mut positive: Vec<Root> = seen.into_keys().filter(Root::is_positive).collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| -r));
        let index: HashMap<Root, usize> =
            roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        if index.len() != roots.len() || roots.len() != 2 * positive.len() {
            return Err(Error::NotFiniteType("roots are not sign-coherent".into()));
        }

        let symmetrizer = cartan.symmetrizer()?;
        let form = cartan.bilinear_form();
        let mut sys = RootSystem {
            cartan,
            symmetrizer,
            form,
            roots,
            index,
            simple_perm: Vec::new(),
        };
        sys.simple_perm = (0..n)
            .map(|i| {
                let s = sys.simple_root(i);
                sys.reflection_perm(&s)
            })
            .collect();
        Ok(sys)
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.roots.len() / 2]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (0..self.rank()).map(|i| self.simple_root(i)).collect()
    }

    /// Highest root (the last positive root). Meaningful for irreducible
    /// systems.
    pub fn highest_root(&self) -> &Root {
        &self.positive_roots()[self.positive_roots().len() - 1]
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    /// Index of `-roots[i]`.
    pub fn negation_index(&self, i: usize) -> usize {
        let half = self.roots.len() / 2;
        if i < half {
            i + half
        } else {
            i - half
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        self.cartan.is_simply_laced()
    }

    pub fn require_root(&self, r: &Root) -> Result<()> {
        if r.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                actual: r.rank(),
            });
        }
        if !self.contains(r) {
            return Err(Error::NotARoot(r.clone()));
        }
        Ok(())
    }

    /// `<x, y>` under the symmetrized form, for any coefficient vectors.
    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += x[i] * self.form[i][j] * y[j];
            }
        }
        s
    }

    pub fn norm(&self, r: &Root) -> i64 {
        self.inner(r.coeffs(), r.coeffs())
    }

    /// `a_{alpha,beta} = 2<alpha,beta>/<alpha,alpha>` for two roots.
    pub fn cartan_integer(&self, alpha: &Root, beta: &Root) -> Result<i64> {
        self.require_root(alpha)?;
        self.require_root(beta)?;
        Ok(self.pairing(alpha, beta.coeffs()))
    }

    /// `2<alpha,v>/<alpha,alpha>` for a root `alpha` and any lattice vector
    /// `v`; integral because `alpha` is a root.
    pub(crate) fn pairing(&self, alpha: &Root, v: &[i64]) -> i64 {
        let num = 2 * self.inner(alpha.coeffs(), v);
        let den = self.norm(alpha);
        debug_assert_eq!(num % den, 0, "non-integral Cartan number");
        num / den
    }

    /// `s_alpha(beta) = beta - a_{alpha,beta} alpha`.
    pub fn reflect(&self, alpha: &Root, beta: &Root) -> Result<Root> {
        let a = self.cartan_integer(alpha, beta)?;
        Ok(beta.add_multiple(-a, alpha))
    }

    /// Reflection of an arbitrary lattice vector; `alpha` must be a root.
    pub fn reflect_vector(&self, alpha: &Root, v: &Root) -> Root {
        let a = self.pairing(alpha, v.coeffs());
        v.add_multiple(-a, alpha)
    }

    /// The permutation of root indices induced by `s_alpha`.
    pub fn reflection_perm(&self, alpha: &Root) -> Vec<usize> {
        self.roots
            .iter()
            .map(|b| {
                let image = self.reflect_vector(alpha, b);
                self.index[&image]
            })
            .collect()
    }

    pub fn simple_reflection_perm(&self, i: usize) -> &[usize] {
        &self.simple_perm[i]
    }
}

pub fn is_positive(root: &Root) -> bool {
    root.is_positive()
}

/// Structured-text description of a system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SystemSpec {
    Family { family: Family, rank: usize },
    Cartan { cartan: Vec<Vec<i64>> },
}

impl SystemSpec {
    pub fn cartan_matrix(&self) -> Result<CartanMatrix> {
        match self {
            SystemSpec::Family { family, rank } => CartanMatrix::family(*family, *rank),
            SystemSpec::Cartan { cartan } => CartanMatrix::new(cartan.clone()),
        }
    }

    pub fn build(&self) -> Result<RootSystem> {
        RootSystem::build(self.cartan_matrix()?)
    }
}
