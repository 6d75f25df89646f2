//! Weighted Dynkin diagrams: `w_i = alpha_i(H)` for `H` in the real span of
//! the simple coroots.
//!
//! `H = sum_j c_j H_j` where `H_j` is the coroot of the `j`-th simple root,
//! so `alpha_i(H_j) = 2<a_i,a_j>/<a_j,a_j> = A[j][i]`.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{q, SpanSolver, Q};
use crate::pisys::WeylWord;
use crate::rootsys::{Root, RootSystem};

/// Exact rationals serialize as integers when integral and as `"p/q"`
/// strings otherwise.
mod exact {
    use super::*;

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Str(String),
    }

    pub fn serialize<S: Serializer>(v: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        let reprs: Vec<Repr> = v
            .iter()
            .map(|x| {
                if x.is_integer() {
                    Repr::Int(x.to_integer())
                } else {
                    Repr::Str(x.to_string())
                }
            })
            .collect();
        reprs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
        let reprs = Vec::<Repr>::deserialize(d)?;
        reprs
            .into_iter()
            .map(|r| match r {
                Repr::Int(n) => Ok(q(n)),
                Repr::Str(s) => parse_q(&s).map_err(serde::de::Error::custom),
            })
            .collect()
    }
}

/// Parses `"n"` or `"p/q"`.
pub fn parse_q(s: &str) -> std::result::Result<Q, String> {
    let s = s.trim();
    let bad = |e: std::num::ParseIntError| format!("bad number {s:?}: {e}");
    match s.split_once('/') {
        Some((n, d)) => {
            let d: i64 = d.trim().parse().map_err(bad)?;
            if d == 0 {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Q::new(n.trim().parse().map_err(bad)?, d))
        }
        None => Ok(q(s.parse().map_err(bad)?)),
    }
}

/// Parses a comma- or semicolon-separated list, optionally bracketed.
pub fn parse_q_list(s: &str) -> std::result::Result<Vec<Q>, String> {
    let t = s.trim();
    let t = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')).unwrap_or(t);
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    t.split([',', ';']).map(parse_q).collect()
}

impl std::str::FromStr for CorootVector {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        parse_q_list(s).map(Self::new)
    }
}

/// Accepts both "2,-4,1,3,0,0" and the layout form "2,-4,1,3,0;0".
impl std::str::FromStr for WeightedDiagram {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        parse_q_list(s).map(Self::new)
    }
}

fn join(v: &[Q], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

/// Coordinates of a Cartan element over the simple coroots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CorootVector {
    #[serde(with = "exact")]
    coords: Vec<Q>,
}

impl CorootVector {
    pub fn new(coords: Vec<Q>) -> Self {
        Self { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&x| q(x)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![Q::zero(); rank])
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Integer coordinates, if all are integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }
}

impl fmt::Display for CorootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.coords, ","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightedDiagram {
    #[serde(with = "exact")]
    weights: Vec<Q>,
}

impl WeightedDiagram {
    pub fn new(weights: Vec<Q>) -> Self {
        Self { weights }
    }

    pub fn from_ints(weights: &[i64]) -> Self {
        Self::new(weights.iter().map(|&x| q(x)).collect())
    }

    pub fn weights(&self) -> &[Q] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.weights.iter().all(|w| !w.is_negative())
    }

    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.weights
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    /// Chain weights, then `;` and the branch weight when the diagram of
    /// `system` branches at a node attached to the last index (as in the D
    /// and E numberings used here); plain comma list otherwise.
    pub fn layout(&self, system: &RootSystem) -> String {
        let n = self.weights.len();
        let cartan = system.cartan();
        let branched = n == cartan.rank()
            && n >= 4
            && (0..n).any(|i| cartan.neighbours(i).count() == 3)
            && cartan.neighbours(n - 1).count() == 1;
        if branched {
            format!("{};{}", join(&self.weights[..n - 1], ","), self.weights[n - 1])
        } else {
            join(&self.weights, ",")
        }
    }
}

impl fmt::Display for WeightedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.weights, ","))
    }
}

fn check_len(system: &RootSystem, len: usize) -> Result<()> {
    if len != system.rank() {
        return Err(Error::DimensionMismatch {
            expected: system.rank(),
            actual: len,
        });
    }
    Ok(())
}

/// `w_i = sum_j c_j A[j][i]`.
pub fn weights_of(system: &RootSystem, h: &CorootVector) -> Result<WeightedDiagram> {
    check_len(system, h.len())?;
    let a = system.cartan();
    let n = system.rank();
    let w = (0..n)
        .map(|i| (0..n).map(|j| h.coords[j] * a.get(j, i)).sum())
        .collect();
    Ok(WeightedDiagram::new(w))
}

/// Inverse of [`weights_of`].
pub fn coroot_of(system: &RootSystem, w: &WeightedDiagram) -> Result<CorootVector> {
    check_len(system, w.len())?;
    let n = system.rank();
    let cols: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|i| system.cartan().get(j, i)).collect()).collect();
    let c = SpanSolver::new(&cols, n)
        .solve(&w.weights)
        .expect("Cartan matrix of finite type is invertible");
    Ok(CorootVector::new(c))
}

/// Action of `s_beta` on a diagram: `w_i <- w_i - beta(H) * a_i(H_beta)`.
pub fn reflect_diagram_by(system: &RootSystem, w: &WeightedDiagram, beta: &Root) -> Result<WeightedDiagram> {
    system.require_root(beta)?;
    check_len(system, w.len())?;
    let n = system.rank();
    let beta_h: Q = (0..n).map(|k| w.weights[k] * beta.coeff(k)).sum();
    let out = (0..n)
        .map(|i| {
            let unit = Root::simple(n, i);
            w.weights[i] - beta_h * system.pairing(beta, unit.coeffs())
        })
        .collect();
    Ok(WeightedDiagram::new(out))
}

/// Simple reflection at node `i`: `w_i <- -w_i`, `w_j <- w_j - w_i A[i][j]`.
pub fn reflect_diagram(system: &RootSystem, w: &WeightedDiagram, i: usize) -> WeightedDiagram {
    let a = system.cartan();
    let wi = w.weights[i];
    let out = w
        .weights
        .iter()
        .enumerate()
        .map(|(j, &wj)| if j == i { -wi } else { wj - wi * a.get(i, j) })
        .collect();
    WeightedDiagram::new(out)
}

/// Applies a word of reflections, first listed acting first.
pub fn apply_word(system: &RootSystem, w: &WeightedDiagram, word: &WeylWord) -> Result<WeightedDiagram> {
    word.reflections()
        .iter()
        .try_fold(w.clone(), |acc, beta| reflect_diagram_by(system, &acc, beta))
}

/// Moves `w` into the dominant chamber by reflecting at the lowest-index
/// negative entry until none is left. Returns the dominant diagram and the
/// word of simple reflections used.
pub fn dominate(system: &RootSystem, w: &WeightedDiagram) -> Result<(WeightedDiagram, WeylWord)> {
    check_len(system, w.len())?;
    let mut cur = w.clone();
    let mut word = WeylWord::identity();
    while let Some(i) = cur.weights.iter().position(|x| x.is_negative()) {
        cur = reflect_diagram(system, &cur, i);
        word.push(system.simple_root(i));
    }
    Ok((cur, word))
}

pub fn scale(w: &WeightedDiagram, k: i64) -> WeightedDiagram {
    WeightedDiagram::new(w.weights.iter().map(|x| x * k).collect())
}

/// Dynkin's necessary condition: the dominant representative has entries
/// in {0, 1, 2}.
pub fn sl2_admissible(system: &RootSystem, w: &WeightedDiagram) -> Result<bool> {
    let (d, _) = dominate(system, w)?;
    Ok(d
        .weights
        .iter()
        .all(|x| x.is_integer() && (0..=2).contains(&x.to_integer())))
}

/// Writes a traceless diagonal matrix in the positional simple coroots
/// `E_i = diag(0,..,1,-1,..,0)` of type A: partial sums of `d`.
pub fn decompose_diagonal(d: &[i64]) -> Result<CorootVector> {
    let total: i64 = d.iter().sum();
    if total != 0 {
        return Err(Error::NonTraceless(total));
    }
    let c = d
        .iter()
        .take(d.len().saturating_sub(1))
        .scan(0i64, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect::<Vec<_>>();
    Ok(CorootVector::from_ints(&c))
}

/// Coroot of `beta` over the simple coroots:
/// `c_j = n_j <a_j,a_j> / <beta,beta>`.
pub fn coroot_of_root(system: &RootSystem, beta: &Root) -> Result<CorootVector> {
    system.require_root(beta)?;
    let nb = system.norm(beta);
    let c = (0..system.rank())
        .map(|j| Q::new(beta.coeff(j) * system.form()[j][j], nb))
        .collect();
    Ok(CorootVector::new(c))
}

/// Images of the simple coroots of a subalgebra in the ambient coroot
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorootEmbedding {
    images: Vec<CorootVector>,
}

impl CorootEmbedding {
    pub fn new(images: Vec<CorootVector>) -> Self {
        Self { images }
    }

    pub fn identity(rank: usize) -> Self {
        Self::new(
            (0..rank)
                .map(|i| {
                    let mut v = vec![0; rank];
                    v[i] = 1;
                    CorootVector::from_ints(&v)
                })
                .collect(),
        )
    }

    /// Each generator of a regular subalgebra sends its simple coroot to
    /// the ambient coroot of that root.
    pub fn from_generators(system: &RootSystem, generators: &[Root]) -> Result<Self> {
        generators
            .iter()
            .map(|g| coroot_of_root(system, g))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn images(&self) -> &[CorootVector] {
        &self.images
    }

    pub fn push(&self, h: &CorootVector) -> Result<CorootVector> {
        push_coroot(self, h)
    }
}

/// `sum_j h_j * embedding(H_j)`.
pub fn push_coroot(embedding: &CorootEmbedding, h: &CorootVector) -> Result<CorootVector> {
    if embedding.images.len() != h.len() {
        return Err(Error::IncompleteEmbedding {
            provided: embedding.images.len(),
            required: h.len(),
        });
    }
    let Some(first) = embedding.images.first() else {
        return Ok(CorootVector::zero(0));
    };
    let dim = first.len();
    let mut out = vec![Q::zero(); dim];
    for (img, &hj) in embedding.images.iter().zip(&h.coords) {
        if img.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: img.len(),
            });
        }
        for (o, &x) in out.iter_mut().zip(&img.coords) {
            *o += hj * x;
        }
    }
    Ok(CorootVector::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    #[test]
    fn parse_diagram_and_coroot() {
        let flat: WeightedDiagram = "2,-4,1,3,0,0".parse().unwrap();
        let layout: WeightedDiagram = "2,-4,1,3,0;0".parse().unwrap();
        assert_eq!(flat, layout);
        assert_eq!(flat, WeightedDiagram::from_ints(&[2, -4, 1, 3, 0, 0]));
        let h: CorootVector = "[3, 1/2, -1]".parse().unwrap();
        assert_eq!(h.to_string(), "3,1/2,-1");
        assert!("1,x".parse::<WeightedDiagram>().is_err());
    }

    fn e6() -> RootSystem {
        RootSystem::family(Family::E, 6).unwrap()
    }

    #[test]
    fn rank_one() {
        let a1 = RootSystem::family(Family::A, 1).unwrap();
        let w = weights_of(&a1, &CorootVector::from_ints(&[1])).unwrap();
        assert_eq!(w, WeightedDiagram::from_ints(&[2]));
        let (d, word) = dominate(&a1, &WeightedDiagram::from_ints(&[-2])).unwrap();
        assert_eq!(d, WeightedDiagram::from_ints(&[2]));
        assert_eq!(word.reflections(), &[Root::from([1])]);
    }

    #[test]
    fn e6_pipeline_endpoint() {
        let s = e6();
        let w = weights_of(&s, &CorootVector::from_ints(&[2, 2, 6, 6, 3, 3])).unwrap();
        assert_eq!(w, WeightedDiagram::from_ints(&[2, -4, 1, 3, 0, 0]));
        assert_eq!(w.layout(&s), "2,-4,1,3,0;0");
        let (d, word) = dominate(&s, &w).unwrap();
        assert_eq!(d, WeightedDiagram::from_ints(&[1, 0, 0, 0, 1, 2]));
        assert_eq!(apply_word(&s, &w, &word).unwrap(), d);
        assert_eq!(apply_word(&s, &d, &word.inverse()).unwrap(), w);
        assert!(sl2_admissible(&s, &d).unwrap());
        assert!(!sl2_admissible(&s, &scale(&d, 2)).unwrap());
    }

    #[test]
    fn diagonal_partial_sums() {
        assert_eq!(decompose_diagonal(&[1, -1]).unwrap(), CorootVector::from_ints(&[1]));
        assert_eq!(
            decompose_diagonal(&[3, -1, -3, 1]).unwrap(),
            CorootVector::from_ints(&[3, 2, -1])
        );
        assert_eq!(decompose_diagonal(&[1, 1]), Err(Error::NonTraceless(2)));
    }

    #[test]
    fn non_simply_laced_coroots() {
        let b2 = RootSystem::family(Family::B, 2).unwrap();
        // long a1, short a2; a1 + 2 a2 is long
        let c = coroot_of_root(&b2, &Root::from([1, 2])).unwrap();
        assert_eq!(c, CorootVector::from_ints(&[1, 1]));
        let c = coroot_of_root(&b2, &Root::from([1, 1])).unwrap();
        assert_eq!(c, CorootVector::from_ints(&[2, 1]));
    }

    #[test]
    fn serde_rationals() {
        let w = WeightedDiagram::new(vec![q(1), Q::new(1, 2)]);
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"[1,"1/2"]"#);
        assert_eq!(serde_json::from_str::<WeightedDiagram>(&json).unwrap(), w);
        assert_eq!(parse_q_list("[1,-1/2;3]").unwrap(), vec![q(1), Q::new(-1, 2), q(3)]);
    }

    #[test]
    fn push_errors() {
        let emb = CorootEmbedding::identity(3);
        assert!(matches!(
            emb.push(&CorootVector::from_ints(&[1, 2])),
            Err(Error::IncompleteEmbedding { provided: 3, required: 2 })
        ));
    }
}
