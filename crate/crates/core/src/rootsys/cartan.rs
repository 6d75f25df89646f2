use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Q};

/// Cartan-Killing families of irreducible finite root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::InvalidCartan(format!("unknown family {other:?}"))),
        }
    }
}

/// Generalized Cartan matrix with `A[i][j] = 2<a_i, a_j> / <a_i, a_i>`.
///
/// With this convention the simple reflection at node `i` sends `a_j` to
/// `a_j - A[i][j] a_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl CartanMatrix {
    /// Checks the structural invariants: square, 2 on the diagonal,
    /// off-diagonal entries in {0, -1, -2, -3}, zero pattern symmetric, and
    /// symmetrizable.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCartan(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            if row[i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry {i} is {}", row[i])));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j {
                    continue;
                }
                if !(-3..=0).contains(&a) {
                    return Err(Error::InvalidCartan(format!("entry ({i},{j}) is {a}")));
                }
                if (a == 0) != (entries[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "entries ({i},{j}) and ({j},{i}) disagree on zero"
                    )));
                }
            }
        }
        let m = Self {
            entries,
            labels: None,
        };
        m.symmetrizer()?;
        Ok(m)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                actual: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Standard matrix of an irreducible family.
    ///
    /// B, C, D, F and G follow Bourbaki numbering. E_n uses a chain
    /// `a_1 - ... - a_{n-1}` with `a_n` attached to `a_{n-3}`, so that in E6
    /// the branch hangs off `a_3` and in E7 off `a_4`. Ranks above 8 are
    /// accepted here and rejected as non-finite when the system is built.
    pub fn family(family: Family, rank: usize) -> Result<Self> {
        let bad = || Error::InvalidCartan(format!("no type {family}{rank}"));
        let n = rank;
        let mut a = vec![vec![0i64; n]; n];
        let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match family {
            Family::A if n >= 1 => {
                for i in 1..n {
                    link(&mut a, i - 1, i);
                }
            }
            Family::B | Family::C if n >= 2 => {
                for i in 1..n {
                    link(&mut a, i - 1, i);
                }
                if family == Family::B {
                    a[n - 1][n - 2] = -2;
                } else {
                    a[n - 2][n - 1] = -2;
                }
            }
            Family::D if n >= 3 => {
                for i in 1..(n - 1) {
                    link(&mut a, i - 1, i);
                }
                link(&mut a, n - 3, n - 1);
            }
            Family::E if n >= 6 => {
                for i in 1..(n - 1) {
                    link(&mut a, i - 1, i);
                }
                link(&mut a, n - 4, n - 1);
            }
            Family::F if n == 4 => {
                link(&mut a, 0, 1);
                link(&mut a, 1, 2);
                link(&mut a, 2, 3);
                a[2][1] = -2;
            }
            Family::G if n == 2 => {
                a[0][1] = -3;
                a[1][0] = -1;
            }
            _ => return Err(bad()),
        }
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        Self::new(a)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("a{}", i + 1),
        }
    }

    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).filter(move |&j| j != i && self.entries[i][j] != 0)
    }

    pub fn is_simply_laced(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|&a| a == 2 || a == 0 || a == -1)
    }

    /// Minimal positive integers `d_i` with `d_i A[i][j]` symmetric.
    pub fn symmetrizer(&self) -> Result<Vec<i64>> {
        let n = self.rank();
        let mut d: Vec<Option<Q>> = vec![None; n];
        let mut component = vec![usize::MAX; n];
        let mut ncomp = 0;
        for start in 0..n {
            if d[start].is_some() {
                continue;
            }
            d[start] = Some(linalg::q(1));
            component[start] = ncomp;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let di = d[i].unwrap();
                for j in self.neighbours(i).collect::<Vec<_>>() {
                    let dj = di * Q::new(self.entries[i][j], self.entries[j][i]);
                    match d[j] {
                        None => {
                            d[j] = Some(dj);
                            component[j] = ncomp;
                            stack.push(j);
                        }
                        Some(existing) if existing != dj => {
                            return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
                        }
                        Some(_) => {}
                    }
                }
            }
            ncomp += 1;
        }
        let d: Vec<Q> = d.into_iter().map(Option::unwrap).collect();
        let mut out = vec![0i64; n];
        for c in 0..ncomp {
            let members: Vec<usize> = (0..n).filter(|&i| component[i] == c).collect();
            let l = members.iter().fold(1i64, |acc, &i| acc.lcm(d[i].denom()));
            let ints: Vec<i64> = members
                .iter()
                .map(|&i| (d[i] * linalg::q(l)).to_integer())
                .collect();
            let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
            for (&i, v) in members.iter().zip(ints) {
                out[i] = v / g;
            }
        }
        Ok(out)
    }

    /// The symmetric form `B[i][j] = d_i A[i][j]`.
    pub fn bilinear_form(&self) -> Vec<Vec<i64>> {
        let d = self
            .symmetrizer()
            .expect("symmetrizability is checked at construction");
        self.entries
            .iter()
            .zip(&d)
            .map(|(row, &di)| row.iter().map(|&a| di * a).collect())
            .collect()
    }

    pub fn is_finite_type(&self) -> bool {
        linalg::is_positive_definite(&self.bilinear_form())
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|a| format!("{a:>2}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e6_branch_is_on_third_node() {
        let e6 = CartanMatrix::family(Family::E, 6).unwrap();
        assert_eq!(e6.neighbours(2).collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(e6.neighbours(5).collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn e7_branch_is_on_fourth_node() {
        let e7 = CartanMatrix::family(Family::E, 7).unwrap();
        assert_eq!(e7.neighbours(3).collect::<Vec<_>>(), vec![2, 4, 6]);
    }

    #[test]
    fn symmetrizers() {
        let b3 = CartanMatrix::family(Family::B, 3).unwrap();
        assert_eq!(b3.symmetrizer().unwrap(), vec![2, 2, 1]);
        let c3 = CartanMatrix::family(Family::C, 3).unwrap();
        assert_eq!(c3.symmetrizer().unwrap(), vec![1, 1, 2]);
        let g2 = CartanMatrix::family(Family::G, 2).unwrap();
        assert_eq!(g2.symmetrizer().unwrap(), vec![1, 3]);
        for (fam, r) in [(Family::B, 4), (Family::C, 4), (Family::F, 4), (Family::G, 2)] {
            let m = CartanMatrix::family(fam, r).unwrap();
            let b = m.bilinear_form();
            for i in 0..r {
                for j in 0..r {
                    assert_eq!(b[i][j], b[j][i]);
                }
            }
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!(CartanMatrix::new(vec![vec![2, -1], vec![0, 2]]).is_err());
        assert!(CartanMatrix::new(vec![vec![1]]).is_err());
        assert!(CartanMatrix::new(vec![vec![2, -4], vec![-1, 2]]).is_err());
        assert!(CartanMatrix::new(vec![vec![2, -1], vec![-1]]).is_err());
        // cycle with inconsistent lengths
        let bad = vec![vec![2, -2, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert!(CartanMatrix::new(bad).is_err());
    }

    #[test]
    fn finite_type_detection() {
        for n in 6..=8 {
            assert!(CartanMatrix::family(Family::E, n).unwrap().is_finite_type());
        }
        assert!(!CartanMatrix::family(Family::E, 9).unwrap().is_finite_type());
        let affine_a2 = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert!(!CartanMatrix::new(affine_a2).unwrap().is_finite_type());
    }
}
