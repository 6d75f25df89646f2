//! Hermitian markings, compact/noncompact classification and real form
//! naming.

mod diagram;
mod names;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use diagram::{decompose, DiagramComponent};
pub use names::{is_tube_type, real_rank, DynkinType, RealFormName, SimpleForm};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootClass {
    Compact,
    NoncompactPositive,
    NoncompactNegative,
}

impl RootClass {
    pub fn is_compact(self) -> bool {
        self == RootClass::Compact
    }

    pub fn negated(self) -> RootClass {
        match self {
            RootClass::Compact => RootClass::Compact,
            RootClass::NoncompactPositive => RootClass::NoncompactNegative,
            RootClass::NoncompactNegative => RootClass::NoncompactPositive,
        }
    }
}

/// Per-node mark of a basis handed to [`name_real_form`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NodeMark {
    Compact,
    Noncompact,
}

impl From<RootClass> for NodeMark {
    fn from(c: RootClass) -> Self {
        if c.is_compact() {
            NodeMark::Compact
        } else {
            NodeMark::Noncompact
        }
    }
}

/// A root system with one simple root declared noncompact.
///
/// The complex structure element is never built; a root is compact exactly
/// when its coefficient at the marked node vanishes.
#[derive(Debug, Clone)]
pub struct HermitianMarking {
    system: Arc<RootSystem>,
    nc_index: usize,
}

impl HermitianMarking {
    /// `nc_index` is 0-based. Fails unless every root has coefficient
    /// -1, 0 or 1 at that node.
    pub fn new(system: Arc<RootSystem>, nc_index: usize) -> Result<Self> {
        if nc_index >= system.rank() {
            return Err(Error::ParameterOutOfRange(format!(
                "marked node {} outside rank {}",
                nc_index + 1,
                system.rank()
            )));
        }
        if let Some(bad) = system
            .positive_roots()
            .iter()
            .find(|r| r.coeff(nc_index) > 1)
        {
            return Err(Error::InvalidMarking {
                node: nc_index + 1,
                witness: bad.clone(),
                coefficient: bad.coeff(nc_index),
            });
        }
        Ok(Self { system, nc_index })
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    pub fn nc_index(&self) -> usize {
        self.nc_index
    }

    pub fn classify(&self, root: &Root) -> Result<RootClass> {
        self.system.require_root(root)?;
        Ok(match root.coeff(self.nc_index) {
            0 => RootClass::Compact,
            1 => RootClass::NoncompactPositive,
            _ => RootClass::NoncompactNegative,
        })
    }
}

pub fn classify_root(m: &HermitianMarking, root: &Root) -> Result<RootClass> {
    m.classify(root)
}

/// Pairwise Cartan integers of a list of roots, `c[i][j] = a_{b_i, b_j}`.
pub fn local_cartan(system: &RootSystem, basis: &[Root]) -> Result<Vec<Vec<i64>>> {
    basis
        .iter()
        .map(|a| basis.iter().map(|b| system.cartan_integer(a, b)).collect())
        .collect()
}

/// Names the real form attached to a marked Π-system basis.
///
/// Components without a noncompact node contribute a compact summand.
pub fn name_real_form(system: &RootSystem, basis: &[Root], marks: &[NodeMark]) -> Result<RealFormName> {
    if basis.len() != marks.len() {
        return Err(Error::DimensionMismatch {
            expected: basis.len(),
            actual: marks.len(),
        });
    }
    let c = local_cartan(system, basis)?;
    let norms: Vec<i64> = basis.iter().map(|b| system.norm(b)).collect();
    let mut parts = Vec::new();
    for comp in decompose(&c, &norms)? {
        let nc: Vec<usize> = comp
            .nodes
            .iter()
            .copied()
            .filter(|&i| marks[i] == NodeMark::Noncompact)
            .collect();
        match nc.as_slice() {
            [] => parts.push(SimpleForm::Compact(comp.ty)),
            [node] => parts.push(comp.hermitian_form(*node, &norms)?),
            _ => return Err(Error::MultipleNoncompact(nc.len())),
        }
    }
    Ok(RealFormName::new(parts))
}
