use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Integer coefficient vector over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root(coeffs)
    }

    /// The `i`-th simple root (0-based) of a rank-`rank` system.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// All nonzero coefficients positive.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn scaled(&self, k: i64) -> Root {
        Root(self.0.iter().map(|&c| c * k).collect())
    }

    /// `self + k * other`
    pub fn add_multiple(&self, k: i64, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(&a, &b)| a + k * b).collect())
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }
}

impl From<Vec<i64>> for Root {
    fn from(v: Vec<i64>) -> Self {
        Root(v)
    }
}

impl<const N: usize> From<[i64; N]> for Root {
    fn from(v: [i64; N]) -> Self {
        Root(v.to_vec())
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        -&self
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        self.add_multiple(1, rhs)
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        self.add_multiple(-1, rhs)
    }
}

/// Bracketed coefficient list, e.g. `[0,1,2,2,1,1]`.
impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl std::str::FromStr for Root {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .unwrap_or(t);
        inner
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|e| format!("bad coefficient {x:?} in {s:?}: {e}"))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Root)
    }
}

/// Human-readable form as a combination of simple roots, e.g.
/// `a2+2a3+2a4+a5+a6`.
pub fn pretty(root: &Root) -> String {
    let mut out = String::new();
    for (i, &c) in root.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(&format!("a{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
