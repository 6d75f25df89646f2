use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Connected Dynkin types, used for compact summands and diagram
/// identification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DynkinType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl DynkinType {
    pub fn rank(&self) -> usize {
        match *self {
            DynkinType::A(n) | DynkinType::B(n) | DynkinType::C(n) | DynkinType::D(n) | DynkinType::E(n) => n,
            DynkinType::F4 => 4,
            DynkinType::G2 => 2,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::B(n) => write!(f, "B{n}"),
            DynkinType::C(n) => write!(f, "C{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
            DynkinType::F4 => write!(f, "F4"),
            DynkinType::G2 => write!(f, "G2"),
        }
    }
}

/// A simple summand of a Hermitian real form, or a compact simple summand.
///
/// Variant order is the display order of summands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SimpleForm {
    /// su(p,q), normalized to p <= q.
    Su { p: usize, q: usize },
    /// so*(2n); the field is n.
    SoStar(usize),
    /// so(p,2); the field is p.
    SoTwo(usize),
    /// sp(2n,R); the field is n.
    Sp(usize),
    E6,
    E7,
    Compact(DynkinType),
}

impl SimpleForm {
    pub fn su(p: usize, q: usize) -> Self {
        SimpleForm::Su {
            p: p.min(q),
            q: p.max(q),
        }
    }

    pub fn real_rank(&self) -> usize {
        match *self {
            SimpleForm::Su { p, q } => p.min(q),
            SimpleForm::SoStar(n) => n / 2,
            SimpleForm::SoTwo(p) => p.min(2),
            SimpleForm::Sp(n) => n,
            SimpleForm::E6 => 2,
            SimpleForm::E7 => 3,
            SimpleForm::Compact(_) => 0,
        }
    }

    pub fn is_tube_type(&self) -> bool {
        match *self {
            SimpleForm::Su { p, q } => p == q,
            SimpleForm::SoStar(n) => n % 2 == 0,
            SimpleForm::SoTwo(_) | SimpleForm::Sp(_) | SimpleForm::E7 => true,
            SimpleForm::E6 => false,
            SimpleForm::Compact(_) => true,
        }
    }

    pub fn is_compact(&self) -> bool {
        matches!(self, SimpleForm::Compact(_))
    }

    /// Rank of the complexification.
    pub fn complex_rank(&self) -> usize {
        match *self {
            SimpleForm::Su { p, q } => p + q - 1,
            SimpleForm::SoStar(n) => n,
            SimpleForm::SoTwo(p) => (p + 2) / 2,
            SimpleForm::Sp(n) => n,
            SimpleForm::E6 => 6,
            SimpleForm::E7 => 7,
            SimpleForm::Compact(t) => t.rank(),
        }
    }

    /// Rewrites low-rank coincidences to one representative:
    /// so(4,2) = su(2,2), so*(6) = su(1,3), so*(8) = so(6,2),
    /// so(3,2) = sp(4,R), sp(2,R) = so(1,2) = su(1,1),
    /// so*(4) = su(1,1) + su(2), so(2,2) = su(1,1) + su(1,1).
    fn canonical_parts(&self) -> Vec<SimpleForm> {
        use DynkinType as T;
        use SimpleForm as F;
        match *self {
            F::SoStar(1) => vec![],
            F::SoStar(2) => vec![F::su(1, 1), F::Compact(T::A(1))],
            F::SoStar(3) => vec![F::su(1, 3)],
            F::SoStar(4) => vec![F::SoTwo(6)],
            F::SoTwo(1) | F::Sp(1) => vec![F::su(1, 1)],
            F::SoTwo(2) => vec![F::su(1, 1), F::su(1, 1)],
            F::SoTwo(3) => vec![F::Sp(2)],
            F::SoTwo(4) => vec![F::su(2, 2)],
            F::Compact(T::B(1) | T::C(1)) => vec![F::Compact(T::A(1))],
            F::Compact(T::C(2)) => vec![F::Compact(T::B(2))],
            F::Compact(T::D(3)) => vec![F::Compact(T::A(3))],
            F::Compact(T::D(2)) => vec![F::Compact(T::A(1)), F::Compact(T::A(1))],
            other => vec![other],
        }
    }
}

impl fmt::Display for SimpleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SimpleForm::Su { p, q } => write!(f, "su({p},{q})"),
            SimpleForm::SoStar(n) => write!(f, "so*({})", 2 * n),
            SimpleForm::SoTwo(p) => write!(f, "so({p},2)"),
            SimpleForm::Sp(n) => write!(f, "sp({},R)", 2 * n),
            SimpleForm::E6 => write!(f, "e6(-14)"),
            SimpleForm::E7 => write!(f, "e7(-25)"),
            SimpleForm::Compact(t) => match t {
                DynkinType::A(n) => write!(f, "su({})", n + 1),
                DynkinType::B(n) => write!(f, "so({})", 2 * n + 1),
                DynkinType::C(n) => write!(f, "sp({n})"),
                DynkinType::D(n) => write!(f, "so({})", 2 * n),
                DynkinType::E(n) => write!(f, "e{n}"),
                DynkinType::F4 => write!(f, "f4"),
                DynkinType::G2 => write!(f, "g2"),
            },
        }
    }
}

impl FromStr for SimpleForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadName(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.replace('ℝ', "R").replace('−', "-");
        match t.as_str() {
            "e6(-14)" => return Ok(SimpleForm::E6),
            "e7(-25)" => return Ok(SimpleForm::E7),
            "e6" => return Ok(SimpleForm::Compact(DynkinType::E(6))),
            "e7" => return Ok(SimpleForm::Compact(DynkinType::E(7))),
            "e8" => return Ok(SimpleForm::Compact(DynkinType::E(8))),
            "f4" => return Ok(SimpleForm::Compact(DynkinType::F4)),
            "g2" => return Ok(SimpleForm::Compact(DynkinType::G2)),
            _ => {}
        }
        let open = t.find('(').ok_or_else(bad)?;
        let head = &t[..open];
        let args = t[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let nums: Vec<&str> = args.split(',').collect();
        let num = |x: &str| x.parse::<usize>().map_err(|_| bad());
        let form = match (head, nums.as_slice()) {
            ("su", [p, q]) => SimpleForm::su(num(p)?, num(q)?),
            ("su", [n]) => SimpleForm::Compact(DynkinType::A(num(n)?.checked_sub(1).ok_or_else(bad)?)),
            ("so*", [m]) => {
                let m = num(m)?;
                if m % 2 != 0 {
                    return Err(bad());
                }
                SimpleForm::SoStar(m / 2)
            }
            ("so", [p, two]) if *two == "2" => SimpleForm::SoTwo(num(p)?),
            ("so", [m]) => {
                let m = num(m)?;
                if m % 2 == 0 {
                    SimpleForm::Compact(DynkinType::D(m / 2))
                } else {
                    SimpleForm::Compact(DynkinType::B(m / 2))
                }
            }
            ("sp", [m, r]) if *r == "R" => {
                let m = num(m)?;
                if m % 2 != 0 {
                    return Err(bad());
                }
                SimpleForm::Sp(m / 2)
            }
            ("sp", [n]) => SimpleForm::Compact(DynkinType::C(num(n)?)),
            _ => return Err(bad()),
        };
        let valid = match form {
            SimpleForm::Su { p, .. } => p >= 1,
            SimpleForm::SoStar(n) | SimpleForm::SoTwo(n) | SimpleForm::Sp(n) => n >= 1,
            SimpleForm::Compact(t) => t.rank() >= 1,
            _ => true,
        };
        if valid {
            Ok(form)
        } else {
            Err(bad())
        }
    }
}

/// A direct sum of simple forms, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct RealFormName(Vec<SimpleForm>);

impl RealFormName {
    pub fn new(mut parts: Vec<SimpleForm>) -> Self {
        parts.sort();
        RealFormName(parts)
    }

    pub fn simple(form: SimpleForm) -> Self {
        RealFormName(vec![form])
    }

    pub fn parts(&self) -> &[SimpleForm] {
        &self.0
    }

    /// Summands that are not compact.
    pub fn noncompact_parts(&self) -> impl Iterator<Item = &SimpleForm> {
        self.0.iter().filter(|f| !f.is_compact())
    }

    pub fn is_simple(&self) -> bool {
        self.0.len() == 1
    }

    pub fn as_simple(&self) -> Option<SimpleForm> {
        match self.0.as_slice() {
            [f] => Some(*f),
            _ => None,
        }
    }

    pub fn real_rank(&self) -> usize {
        self.0.iter().map(SimpleForm::real_rank).sum()
    }

    pub fn is_tube_type(&self) -> bool {
        self.0.iter().all(SimpleForm::is_tube_type)
    }

    pub fn canonical(&self) -> RealFormName {
        RealFormName::new(self.0.iter().flat_map(|f| f.canonical_parts()).collect())
    }

    /// Equality up to the low-rank isomorphisms listed on
    /// [`SimpleForm`].
    pub fn is_isomorphic(&self, other: &RealFormName) -> bool {
        self.canonical() == other.canonical()
    }
}

impl From<SimpleForm> for RealFormName {
    fn from(f: SimpleForm) -> Self {
        RealFormName::simple(f)
    }
}

impl fmt::Display for RealFormName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for RealFormName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split('+')
            .map(str::parse)
            .collect::<Result<Vec<SimpleForm>>>()?;
        Ok(RealFormName::new(parts))
    }
}

impl From<RealFormName> for String {
    fn from(n: RealFormName) -> String {
        n.to_string()
    }
}

impl TryFrom<String> for RealFormName {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

pub fn real_rank(name: &RealFormName) -> usize {
    name.real_rank()
}

pub fn is_tube_type(name: &RealFormName) -> bool {
    name.is_tube_type()
}
