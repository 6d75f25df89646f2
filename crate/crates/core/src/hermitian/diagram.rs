//! Identification of connected Dynkin diagrams from a matrix of Cartan
//! integers, and the placement of Hermitian nodes on them.

use crate::error::{Error, Result};
use crate::hermitian::names::{DynkinType, SimpleForm};

/// Shape of a connected finite-type diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Layout {
    /// Nodes in path order. For B/C/F/G the multiple edge is oriented so it
    /// sits at the end of the path (B, C) or in the middle (F4).
    Path(Vec<usize>),
    /// A trivalent node with three arms, each listed outward from the
    /// centre, sorted by arm length.
    Branch { center: usize, arms: Vec<Vec<usize>> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramComponent {
    pub nodes: Vec<usize>,
    pub ty: DynkinType,
    layout: Layout,
}

fn multiplicity(c: &[Vec<i64>], i: usize, j: usize) -> i64 {
    c[i][j] * c[j][i]
}

/// Splits the diagram of `c` (local indices) into connected components and
/// identifies each. `norms` are squared lengths, used to orient B and C.
pub fn decompose(c: &[Vec<i64>], norms: &[i64]) -> Result<Vec<DiagramComponent>> {
    let k = c.len();
    let mut seen = vec![false; k];
    let mut out = Vec::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut nodes = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < nodes.len() {
            let x = nodes[i];
            for y in 0..k {
                if y != x && c[x][y] != 0 && !seen[y] {
                    seen[y] = true;
                    nodes.push(y);
                }
            }
            i += 1;
        }
        nodes.sort_unstable();
        out.push(identify(c, norms, nodes)?);
    }
    Ok(out)
}

fn not_finite(nodes: &[usize]) -> Error {
    Error::NotFiniteType(format!("diagram component on nodes {nodes:?} is not of finite type"))
}

fn identify(c: &[Vec<i64>], norms: &[i64], nodes: Vec<usize>) -> Result<DiagramComponent> {
    let adj = |x: usize| -> Vec<usize> {
        nodes
            .iter()
            .copied()
            .filter(|&y| y != x && c[x][y] != 0)
            .collect()
    };
    let n = nodes.len();
    let edges: usize = nodes.iter().map(|&x| adj(x).len()).sum::<usize>() / 2;
    if edges + 1 != n {
        return Err(not_finite(&nodes));
    }
    let degree3: Vec<usize> = nodes.iter().copied().filter(|&x| adj(x).len() == 3).collect();
    if nodes.iter().any(|&x| adj(x).len() > 3) || degree3.len() > 1 {
        return Err(not_finite(&nodes));
    }

    if let Some(&center) = degree3.first() {
        if nodes
            .iter()
            .any(|&x| adj(x).iter().any(|&y| multiplicity(c, x, y) != 1))
        {
            return Err(not_finite(&nodes));
        }
        let mut arms: Vec<Vec<usize>> = adj(center)
            .into_iter()
            .map(|first| walk(&adj, center, first))
            .collect();
        arms.sort_by_key(|a| (a.len(), a[0]));
        let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
        let ty = match lens.as_slice() {
            [1, 1, m] => DynkinType::D(m + 3),
            [1, 2, 2] => DynkinType::E(6),
            [1, 2, 3] => DynkinType::E(7),
            [1, 2, 4] => DynkinType::E(8),
            _ => return Err(not_finite(&nodes)),
        };
        return Ok(DiagramComponent {
            nodes,
            ty,
            layout: Layout::Branch { center, arms },
        });
    }

    // path
    let ends: Vec<usize> = nodes.iter().copied().filter(|&x| adj(x).len() <= 1).collect();
    let mut path = if n == 1 {
        vec![nodes[0]]
    } else {
        let first = adj(ends[0])[0];
        let mut p = vec![ends[0]];
        p.extend(walk(&adj, ends[0], first));
        p
    };
    let mults: Vec<i64> = path
        .windows(2)
        .map(|w| multiplicity(c, w[0], w[1]))
        .collect();
    let multiple: Vec<usize> = (0..mults.len()).filter(|&i| mults[i] > 1).collect();
    let ty = match multiple.as_slice() {
        [] => DynkinType::A(n),
        [i] => {
            let m = mults[*i];
            if m == 3 {
                if n != 2 {
                    return Err(not_finite(&nodes));
                }
                DynkinType::G2
            } else if m == 2 {
                if *i == 0 && n > 2 {
                    path.reverse();
                }
                let i = (0..path.len() - 1)
                    .find(|&j| multiplicity(c, path[j], path[j + 1]) == 2)
                    .unwrap();
                if n == 2 {
                    // B2 = C2; one name keeps type comparisons order-free
                    DynkinType::B(2)
                } else if i == n - 2 {
                    let last = path[n - 1];
                    let prev = path[n - 2];
                    if norms[last] < norms[prev] {
                        DynkinType::B(n)
                    } else {
                        DynkinType::C(n)
                    }
                } else if n == 4 && i == 1 {
                    DynkinType::F4
                } else {
                    return Err(not_finite(&nodes));
                }
            } else {
                return Err(not_finite(&nodes));
            }
        }
        _ => return Err(not_finite(&nodes)),
    };
    Ok(DiagramComponent {
        nodes,
        ty,
        layout: Layout::Path(path),
    })
}

/// Follows a chain starting with the edge `from -> first` until it ends or
/// reaches a branch.
fn walk(adj: &dyn Fn(usize) -> Vec<usize>, from: usize, first: usize) -> Vec<usize> {
    let mut out = vec![first];
    let mut prev = from;
    let mut cur = first;
    loop {
        let next: Vec<usize> = adj(cur).into_iter().filter(|&y| y != prev).collect();
        if next.len() != 1 {
            break;
        }
        prev = cur;
        cur = next[0];
        out.push(cur);
    }
    out
}

impl DiagramComponent {
    /// The real form obtained by declaring `node` the unique noncompact
    /// simple root of this component.
    pub fn hermitian_form(&self, node: usize, norms: &[i64]) -> Result<SimpleForm> {
        let refuse = || {
            Error::NotHermitianNode(format!(
                "node {} of a component of type {}",
                node + 1,
                self.ty
            ))
        };
        match (&self.layout, self.ty) {
            (Layout::Path(path), DynkinType::A(n)) => {
                let pos = path.iter().position(|&x| x == node).ok_or_else(refuse)? + 1;
                Ok(SimpleForm::su(pos, n + 1 - pos))
            }
            (Layout::Path(path), DynkinType::B(n)) => {
                if n == 2 {
                    // B2 = C2: the long node gives sp(4,R)
                    let other = if path[0] == node { path[1] } else { path[0] };
                    return if norms[node] > norms[other] {
                        Ok(SimpleForm::Sp(2))
                    } else {
                        Err(refuse())
                    };
                }
                if path[0] == node {
                    Ok(SimpleForm::SoTwo(2 * n - 1))
                } else {
                    Err(refuse())
                }
            }
            (Layout::Path(path), DynkinType::C(n)) => {
                if path[n - 1] == node {
                    Ok(SimpleForm::Sp(n))
                } else {
                    Err(refuse())
                }
            }
            (Layout::Branch { arms, .. }, DynkinType::D(n)) => {
                let is_end = |arm: &Vec<usize>| arm.last() == Some(&node);
                if n == 4 {
                    // all three legs are equivalent under triality
                    if arms.iter().any(is_end) {
                        return Ok(SimpleForm::SoTwo(6));
                    }
                    return Err(refuse());
                }
                if is_end(&arms[2]) {
                    Ok(SimpleForm::SoTwo(2 * n - 2))
                } else if is_end(&arms[0]) || is_end(&arms[1]) {
                    Ok(SimpleForm::SoStar(n))
                } else {
                    Err(refuse())
                }
            }
            (Layout::Branch { arms, .. }, DynkinType::E(6)) => {
                if arms[1].last() == Some(&node) || arms[2].last() == Some(&node) {
                    Ok(SimpleForm::E6)
                } else {
                    Err(refuse())
                }
            }
            (Layout::Branch { arms, .. }, DynkinType::E(7)) => {
                if arms[2].last() == Some(&node) {
                    Ok(SimpleForm::E7)
                } else {
                    Err(refuse())
                }
            }
            _ => Err(refuse()),
        }
    }
}
