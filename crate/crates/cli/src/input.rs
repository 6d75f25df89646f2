use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;
use serde::de::DeserializeOwned;

use rootforge::catalog::Catalog;
use rootforge::hermitian::{HermitianMarking, RealFormName};
use rootforge::pisys::DEFAULT_BFS_BUDGET;
use rootforge::rootsys::{CartanMatrix, Root, RootSystem, SystemSpec};
use rootforge::wdd::{parse_q_list, CorootVector, WeightedDiagram};

use crate::args::{PiArgs, SystemArgs};
use crate::CliError;

pub const BUDGET_VAR: &str = "ROOTFORGE_BFS_BUDGET";

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// "2,-1;-1,2"
pub fn parse_cartan(s: &str) -> Result<CartanMatrix, CliError> {
    let rows = s
        .split(';')
        .map(|row| {
            row.trim()
                .trim_start_matches('[')
                .trim_end_matches(']')
                .split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|e| CliError::Input(format!("bad entry {x:?}: {e}"))))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CartanMatrix::new(rows)?)
}

/// `fallback` is a system named inside an input file.
pub fn system(args: &SystemArgs, fallback: Option<&SystemSpec>) -> Result<Arc<RootSystem>, CliError> {
    let cartan = if let Some(c) = &args.cartan {
        parse_cartan(c)?
    } else if let Some(path) = &args.system_file {
        read_json::<SystemSpec>(path)?.cartan_matrix()?
    } else {
        match (args.family, args.rank) {
            (Some(f), Some(r)) => CartanMatrix::family(f, r)?,
            (Some(_), None) | (None, Some(_)) => {
                return Err(CliError::Input("--family and --rank go together".into()))
            }
            (None, None) => match fallback {
                Some(spec) => spec.cartan_matrix()?,
                None => {
                    return Err(CliError::Input(
                        "no root system: pass --family/--rank, --cartan or --system-file".into(),
                    ))
                }
            },
        }
    };
    Ok(Arc::new(RootSystem::build(cartan)?))
}

/// "[0,1,2,2,1,1];[1,0,0,0,0,0]"
pub fn parse_roots(s: &str) -> Result<Vec<Root>, CliError> {
    s.split(';')
        .filter(|x| !x.trim().is_empty())
        .map(|x| x.parse::<Root>().map_err(CliError::Input))
        .collect()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PiFile {
    #[serde(default)]
    pub system: Option<SystemSpec>,
    pub generators: Vec<Root>,
    /// Counted from 1.
    #[serde(default)]
    pub mark: Option<usize>,
}

/// A Π-system request resolved to a system, raw generators and marking.
pub struct PiInput {
    pub system: Arc<RootSystem>,
    pub generators: Vec<Root>,
    pub mark: Option<usize>,
}

impl PiInput {
    pub fn marking(&self) -> Result<HermitianMarking, CliError> {
        let mark = self
            .mark
            .ok_or_else(|| CliError::Input("--mark is required for this command".into()))?;
        if mark == 0 {
            return Err(CliError::Input("--mark counts nodes from 1".into()));
        }
        Ok(HermitianMarking::new(Arc::clone(&self.system), mark - 1)?)
    }
}

pub fn pi_input(args: &PiArgs) -> Result<PiInput, CliError> {
    let (file, generators) = match (&args.file, &args.gens) {
        (Some(path), _) => {
            let f: PiFile = read_json(path)?;
            let g = f.generators.clone();
            (Some(f), g)
        }
        (None, Some(g)) => (None, parse_roots(g)?),
        (None, None) => return Err(CliError::Input("pass --gens or --file".into())),
    };
    let system = system(&args.system, file.as_ref().and_then(|f| f.system.as_ref()))?;
    let mark = args.mark.or(file.and_then(|f| f.mark));
    Ok(PiInput {
        system,
        generators,
        mark,
    })
}

pub fn diagram(s: &str) -> Result<WeightedDiagram, CliError> {
    Ok(WeightedDiagram::new(parse_q_list(s).map_err(CliError::Input)?))
}

pub fn coroot(s: &str) -> Result<CorootVector, CliError> {
    Ok(CorootVector::new(parse_q_list(s).map_err(CliError::Input)?))
}

pub fn name(s: &str) -> Result<RealFormName, CliError> {
    Ok(s.parse::<RealFormName>()?)
}

pub fn catalog(path: Option<&Path>) -> Result<Catalog, CliError> {
    match path {
        Some(p) => read_json(p),
        None => Ok(Catalog::builtin()),
    }
}

/// The search cap: the flag, then the environment, then the default.
pub fn budget(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|e| CliError::Input(format!("{BUDGET_VAR}={v:?}: {e}"))),
        Err(_) => Ok(DEFAULT_BFS_BUDGET),
    }
}
