//! Maximal Hermitian regular subalgebras of the classical Hermitian
//! algebras and of e6(-14), e7(-25), inclusion chains between them, and the
//! rank and tube-type filters used with tight homomorphisms.

mod chains;
mod filters;
mod tables;
pub mod template;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use chains::InclusionChain;
pub use filters::{
    is_tight_inclusion, rank_sum_bound, sp_factor_candidates, tube_rank_filter, TubeCandidate,
};
pub use tables::{builtin_tables, Table, TableKind};

use crate::error::{Error, Result};
use crate::hermitian::{HermitianMarking, RealFormName, SimpleForm};
use crate::pisys::{check_pi_system, generate, rebase_hermitian, PiSystem, RebasedSystem, SubrootSystem};
use crate::rootsys::{CartanMatrix, Family, Root, RootSystem};
use template::{expand, fill_name, holds, Correction, Env, RowTemplate};

/// A table family instantiated at concrete parameters, with its labeled
/// root system and the marking at node 1.
#[derive(Debug, Clone)]
pub struct Ambient {
    pub name: RealFormName,
    pub kind: TableKind,
    pub env: Env,
    pub system: Arc<RootSystem>,
    pub marking: HermitianMarking,
}

fn path_cartan(n: usize, edges: &[(usize, usize)]) -> Result<CartanMatrix> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in edges {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    }
    CartanMatrix::new(a)
}

/// Builds the labeled system a table is written in.
pub fn ambient_for(name: &RealFormName) -> Result<Ambient> {
    let unsupported = || Error::UnsupportedAmbient(name.to_string());
    let form = name.as_simple().ok_or_else(unsupported)?;
    let mut env = Env::new();
    let (kind, cartan) = match form {
        SimpleForm::Su { p, q } => {
            env.insert('p', p as i64);
            env.insert('q', q as i64);
            let order: Vec<usize> = ((q + 1)..(p + q)).chain(1..=q).collect();
            let edges: Vec<(usize, usize)> = order.windows(2).map(|w| (w[0], w[1])).collect();
            (TableKind::Su, path_cartan(p + q - 1, &edges)?)
        }
        SimpleForm::SoStar(p) => {
            if p < 4 {
                return Err(Error::ParameterOutOfRange(format!(
                    "{name} needs p >= 4 for its table; use the isomorphic su form"
                )));
            }
            env.insert('p', p as i64);
            let mut edges: Vec<(usize, usize)> = (1..p - 1).map(|i| (i, i + 1)).collect();
            edges.push((2, p));
            (TableKind::SoStar, path_cartan(p, &edges)?)
        }
        SimpleForm::SoTwo(p) => {
            if p % 2 == 1 || p < 6 {
                return Err(Error::ParameterOutOfRange(format!(
                    "{name}: the table covers so(p,2) with p = 2k-2 even and k >= 4"
                )));
            }
            let k = (p + 2) / 2;
            env.insert('p', p as i64);
            env.insert('k', k as i64);
            let mut edges: Vec<(usize, usize)> = (1..k - 1).map(|i| (i, i + 1)).collect();
            edges.push((k - 2, k));
            (TableKind::SoTwo, path_cartan(k, &edges)?)
        }
        SimpleForm::E6 => (TableKind::E6, CartanMatrix::family(Family::E, 6)?),
        SimpleForm::E7 => (TableKind::E7, CartanMatrix::family(Family::E, 7)?),
        SimpleForm::Sp(_) | SimpleForm::Compact(_) => return Err(unsupported()),
    };
    let system = Arc::new(RootSystem::build(cartan)?);
    let marking = HermitianMarking::new(Arc::clone(&system), 0)?;
    Ok(Ambient {
        name: RealFormName::simple(form),
        kind,
        env,
        system,
        marking,
    })
}

/// A validated table row at concrete parameters.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub ambient: RealFormName,
    /// The name printed in the table.
    pub subalgebra: RealFormName,
    pub pi_system: PiSystem,
    pub source: String,
    pub row: String,
    pub params: BTreeMap<char, i64>,
    pub subsystem: SubrootSystem,
    pub rebased: RebasedSystem,
    /// Name computed from the rebased basis; isomorphic to `subalgebra`.
    pub derived_name: RealFormName,
    /// Generators come from a correction rather than the printed row.
    pub corrected: bool,
}

impl CatalogEntry {
    pub fn generators(&self) -> &[Root] {
        self.pi_system.generators()
    }

    pub fn is_tight(&self) -> Result<bool> {
        is_tight_inclusion(&self.subalgebra, &self.ambient)
    }

    pub fn record(&self) -> EntryRecord {
        EntryRecord {
            ambient: self.ambient.clone(),
            name: self.subalgebra.clone(),
            source: self.source.clone(),
            generators: self.generators().to_vec(),
            corrected: self.corrected,
        }
    }
}

/// Serializable view of an entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryRecord {
    pub ambient: RealFormName,
    pub name: RealFormName,
    pub source: String,
    pub generators: Vec<Root>,
    pub corrected: bool,
}

/// A printed row that failed validation and how it was repaired.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub source: String,
    pub printed: Option<Vec<Root>>,
    pub failure: String,
    pub reason: String,
    pub corrected: Vec<Root>,
    /// For search repairs, every generator list that validated.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub candidates: Vec<Vec<Root>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowFailure {
    pub source: String,
    pub failure: String,
}

/// Everything learned from instantiating one ambient's table.
#[derive(Debug, Clone)]
pub struct CatalogReport {
    pub ambient: RealFormName,
    /// Validated entries, before the maximality filter.
    pub instances: Vec<CatalogEntry>,
    pub audits: Vec<AuditRecord>,
    pub failures: Vec<RowFailure>,
}

impl CatalogReport {
    /// Drops instances whose root set is properly contained in another
    /// instance of the same row.
    pub fn maximal(&self) -> Vec<CatalogEntry> {
        let contained = |a: &[usize], b: &[usize]| a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok());
        self.instances
            .iter()
            .filter(|e| {
                !self.instances.iter().any(|o| {
                    o.row == e.row && contained(e.subsystem.root_indices(), o.subsystem.root_indices())
                })
            })
            .cloned()
            .collect()
    }
}

struct Validated {
    pi: PiSystem,
    sub: SubrootSystem,
    rebased: RebasedSystem,
    name: RealFormName,
}

fn validate(amb: &Ambient, gens: &[Root], expected: &RealFormName) -> std::result::Result<Validated, String> {
    let pi = check_pi_system(&amb.system, gens.to_vec()).map_err(|e| e.to_string())?;
    let sub = generate(&pi);
    let rebased = rebase_hermitian(&amb.marking, &sub).map_err(|e| e.to_string())?;
    if let Some(n) = rebased.noncompact_per_component(&amb.system).iter().find(|&&n| n > 1) {
        return Err(format!("a component has {n} noncompact nodes"));
    }
    let name = rebased.name(&amb.system).map_err(|e| e.to_string())?;
    if !name.is_isomorphic(expected) {
        return Err(format!("generators span {name}, not {expected}"));
    }
    Ok(Validated { pi, sub, rebased, name })
}

fn show_roots(v: &[Root]) -> String {
    v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(";")
}

/// The tables plus the code that instantiates and validates them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub tables: Vec<Table>,
}

impl Default for Catalog {
    fn default() -> Self {
        Self::builtin()
    }
}

impl Catalog {
    pub fn builtin() -> Self {
        Catalog {
            tables: builtin_tables(),
        }
    }

    pub fn table(&self, kind: TableKind) -> Option<&Table> {
        self.tables.iter().find(|t| t.kind == kind)
    }

    pub fn table_mut(&mut self, kind: TableKind) -> Option<&mut Table> {
        self.tables.iter_mut().find(|t| t.kind == kind)
    }

    /// Instantiates every row of the ambient's table and validates it.
    pub fn enumerate(&self, ambient: &RealFormName) -> Result<CatalogReport> {
        let amb = ambient_for(ambient)?;
        let table = self
            .table(amb.kind)
            .ok_or_else(|| Error::UnsupportedAmbient(ambient.to_string()))?;
        let mut report = CatalogReport {
            ambient: amb.name.clone(),
            instances: Vec::new(),
            audits: Vec::new(),
            failures: Vec::new(),
        };
        for row in &table.rows {
            for env in row_envs(row, &amb)? {
                self.instantiate(&amb, table, row, env, &mut report);
            }
        }
        Ok(report)
    }

    fn instantiate(&self, amb: &Ambient, table: &Table, row: &RowTemplate, env: Env, report: &mut CatalogReport) {
        let rank = amb.system.rank();
        let params: BTreeMap<char, i64> = row.vars.iter().map(|v| (*v, env[v])).collect();
        let mut source = format!("{}:{}", amb.name, row.id);
        if !params.is_empty() {
            let p: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            source.push_str(&format!("[{}]", p.join(",")));
        }
        let fail = |report: &mut CatalogReport, failure: String| {
            report.failures.push(RowFailure {
                source: source.clone(),
                failure,
            })
        };
        let expected = match fill_name(&row.name, &env).map_err(Error::CatalogRow).and_then(|n| n.parse()) {
            Ok(n) => n,
            Err(e) => return fail(report, e.to_string()),
        };
        let printed = expand(&row.printed, rank, &table.named, &env);
        let first = match &printed {
            Ok(g) => validate(amb, g, &expected),
            Err(e) => Err(e.clone()),
        };
        let entry = |v: Validated, corrected: bool| CatalogEntry {
            ambient: amb.name.clone(),
            subalgebra: expected.clone(),
            pi_system: v.pi,
            source: source.clone(),
            row: row.id.clone(),
            params: params.clone(),
            subsystem: v.sub,
            rebased: v.rebased,
            derived_name: v.name,
            corrected,
        };
        let failure = match first {
            Ok(v) => {
                report.instances.push(entry(v, false));
                return;
            }
            Err(f) => f,
        };
        let printed = printed.ok();
        match &row.correction {
            None => fail(report, failure),
            Some(Correction::Replace { generators, reason }) => {
                let fixed = expand(generators, rank, &table.named, &env)
                    .and_then(|g| validate(amb, &g, &expected).map(|v| (g, v)));
                match fixed {
                    Ok((g, v)) => {
                        report.audits.push(AuditRecord {
                            source: source.clone(),
                            printed,
                            failure,
                            reason: reason.clone(),
                            corrected: g,
                            candidates: Vec::new(),
                        });
                        report.instances.push(entry(v, true));
                    }
                    Err(f2) => fail(report, format!("{failure}; correction also fails: {f2}")),
                }
            }
            Some(Correction::Search { slot, reason }) => {
                let Some(base) = printed.clone().filter(|g| *slot < g.len()) else {
                    return fail(report, format!("{failure}; search slot {slot} unavailable"));
                };
                let mut found: Vec<(Vec<Root>, Validated)> = Vec::new();
                for r in amb.system.positive_roots() {
                    let mut g = base.clone();
                    g[*slot] = r.clone();
                    if let Ok(v) = validate(amb, &g, &expected) {
                        found.push((g, v));
                    }
                }
                if found.is_empty() {
                    return fail(report, format!("{failure}; search found no repair"));
                }
                let candidates: Vec<Vec<Root>> = found.iter().map(|(g, _)| g.clone()).collect();
                let (g, v) = found.swap_remove(0);
                report.audits.push(AuditRecord {
                    source: source.clone(),
                    printed,
                    failure,
                    reason: format!("{reason}; chose {} of {} candidates", show_roots(&g), candidates.len()),
                    corrected: g,
                    candidates,
                });
                report.instances.push(entry(v, true));
            }
        }
    }

    /// Maximal entries of the ambient's table. Any row that fails
    /// validation without a working repair is an error.
    pub fn maximal_subalgebras(&self, ambient: &RealFormName) -> Result<Vec<CatalogEntry>> {
        let report = self.enumerate(ambient)?;
        if let Some(f) = report.failures.first() {
            return Err(Error::CatalogRow(format!("{}: {}", f.source, f.failure)));
        }
        Ok(report.maximal())
    }
}

/// Parameter assignments for the row variables satisfying its constraints.
fn row_envs(row: &RowTemplate, amb: &Ambient) -> Result<Vec<Env>> {
    let bound = amb.system.rank() as i64 + 1;
    let mut envs = vec![amb.env.clone()];
    for &v in &row.vars {
        envs = envs
            .into_iter()
            .flat_map(|e| {
                (0..=bound).map(move |x| {
                    let mut e = e.clone();
                    e.insert(v, x);
                    e
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for e in envs {
        let mut ok = true;
        for c in &row.constraints {
            if !holds(c, &e).map_err(Error::CatalogRow)? {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(e);
        }
    }
    Ok(out)
}

pub fn maximal_hermitian_regular_subalgebras(ambient: &RealFormName) -> Result<Vec<CatalogEntry>> {
    Catalog::builtin().maximal_subalgebras(ambient)
}

pub fn inclusion_chains(target: &RealFormName, ambient: &RealFormName, max_depth: usize) -> Result<Vec<InclusionChain>> {
    Catalog::builtin().inclusion_chains(target, ambient, max_depth)
}
