use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermitian::{DynkinType, RealFormName, SimpleForm};

/// For canonical summands only.
fn simply_laced(f: &SimpleForm) -> bool {
    match *f {
        SimpleForm::Sp(_) => false,
        SimpleForm::SoTwo(p) => p % 2 == 0,
        SimpleForm::Compact(t) => matches!(t, DynkinType::A(_) | DynkinType::D(_) | DynkinType::E(_)),
        _ => true,
    }
}

/// Rank criterion for tightness: valid when all roots have one length.
pub fn is_tight_inclusion(sub: &RealFormName, ambient: &RealFormName) -> Result<bool> {
    for name in [sub, ambient] {
        if let Some(bad) = name.canonical().parts().iter().find(|f| !simply_laced(f)) {
            return Err(Error::MixedLengthUnsupported(format!("{bad} in {name}")));
        }
    }
    Ok(sub.real_rank() == ambient.real_rank())
}

/// Multisets `{n_i}` of positive integers with `sum n_i <= real_rank`,
/// each sorted descending, listed in lexicographic order.
pub fn sp_factor_candidates(real_rank: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for part in 1..=max_part.min(remaining) {
            prefix.push(part);
            out.push(prefix.clone());
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(real_rank, real_rank, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Output of [`tube_rank_filter`]: a single algebra or the whole so(n,2)
/// family, all of whose members have real rank two and tube type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TubeCandidate {
    Form(SimpleForm),
    SoTwoFamily,
}

impl fmt::Display for TubeCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TubeCandidate::Form(form) => write!(f, "{form}"),
            TubeCandidate::SoTwoFamily => write!(f, "so(n,2)"),
        }
    }
}

/// Classical simple Hermitian algebras of tube type with real rank at most
/// `max_rank`. The so(n,2) family is reported once; its low-rank members
/// that coincide with other entries are also listed under those names.
pub fn tube_rank_filter(max_rank: usize) -> Vec<TubeCandidate> {
    let mut out = Vec::new();
    if max_rank >= 1 {
        out.push(TubeCandidate::Form(SimpleForm::su(1, 1)));
    }
    for r in 2..=max_rank {
        out.push(TubeCandidate::Form(SimpleForm::su(r, r)));
    }
    for r in 2..=max_rank {
        out.push(TubeCandidate::Form(SimpleForm::SoStar(2 * r)));
    }
    for n in 2..=max_rank {
        out.push(TubeCandidate::Form(SimpleForm::Sp(n)));
    }
    if max_rank >= 2 {
        out.push(TubeCandidate::SoTwoFamily);
    }
    debug_assert!(out.iter().all(|c| match c {
        TubeCandidate::Form(f) => f.is_tube_type() && f.real_rank() <= max_rank,
        TubeCandidate::SoTwoFamily => true,
    }));
    out
}

/// True when the component ranks sum to at most the ambient rank and each
/// is at least `min_component_rank`.
pub fn rank_sum_bound(components: &[RealFormName], ambient: &RealFormName, min_component_rank: usize) -> bool {
    let total: usize = components.iter().map(RealFormName::real_rank).sum();
    total <= ambient.real_rank() && components.iter().all(|c| c.real_rank() >= min_component_rank)
}
