//! Graded monomial orders on `N^d`.
//!
//! Only graded orders are supported: every point has finitely many
//! predecessors, which the order-dependent Frobenius statistics require.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{GnsError, Result};
use crate::point::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    GradedLex,
    GradedRevLex,
}

/// A graded order with a variable priority. `priority[0]` is the 0-based
/// index of the most significant variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let d = priority.len();
        if d == 0 {
            return Err(GnsError::ZeroDimension);
        }
        let mut seen = vec![false; d];
        for &p in &priority {
            if p >= d || seen[p] {
                return Err(GnsError::BadParameters(format!(
                    "priority {priority:?} is not a permutation of 0..{d}"
                )));
            }
            seen[p] = true;
        }
        Ok(Self { kind, priority })
    }

    /// Graded lex with `x_1 > ... > x_d`; agrees with the canonical `Ord` on [`Point`].
    pub fn graded_lex(dim: usize) -> Self {
        Self {
            kind: OrderKind::GradedLex,
            priority: (0..dim).collect(),
        }
    }

    pub fn graded_revlex(dim: usize) -> Self {
        Self {
            kind: OrderKind::GradedRevLex,
            priority: (0..dim).collect(),
        }
    }

    /// Every priority permutation of the given kind.
    pub fn all_of_kind(kind: OrderKind, dim: usize) -> Vec<Self> {
        permutations(dim)
            .into_iter()
            .map(|priority| Self { kind, priority })
            .collect()
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.priority.len()
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn compare(&self, a: &Point, b: &Point) -> Ordering {
        debug_assert_eq!(a.dim(), self.dim());
        let by_degree = a.degree().cmp(&b.degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        let (ac, bc) = (a.coords(), b.coords());
        match self.kind {
            OrderKind::GradedLex => {
                for &v in &self.priority {
                    match ac[v].cmp(&bc[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GradedRevLex => {
                for &v in self.priority.iter().rev() {
                    match ac[v].cmp(&bc[v]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn max<'a>(&self, points: impl IntoIterator<Item = &'a Point>) -> Option<&'a Point> {
        points.into_iter().max_by(|a, b| self.compare(a, b))
    }

    /// Number of points of `N^d` strictly preceding `p`.
    ///
    /// Counted combinatorially: all points of smaller degree, plus the points
    /// of the same degree that precede `p` in the tie-break.
    pub fn rank(&self, p: &Point) -> u128 {
        let d = self.dim();
        let deg = p.degree() as u128;
        let mut count = if deg == 0 {
            0
        } else {
            binomial(deg - 1 + d as u128, d as u128)
        };
        let q: Vec<u128> = self
            .priority
            .iter()
            .map(|&v| p.coords()[v] as u128)
            .collect();
        match self.kind {
            OrderKind::GradedLex => {
                // Same-degree r with r <_lex q.
                let mut used = 0u128;
                for (j, &qj) in q.iter().enumerate() {
                    let rest = d - j - 1;
                    for v in 0..qj {
                        count += compositions(deg - used - v, rest);
                    }
                    used += qj;
                }
            }
            OrderKind::GradedRevLex => {
                // Same-degree r whose last differing coordinate exceeds q's.
                let mut suffix = 0u128;
                for t in (0..d).rev() {
                    let budget = deg - suffix;
                    let mut v = q[t] + 1;
                    while v <= budget {
                        count += compositions(budget - v, t);
                        v += 1;
                    }
                    suffix += q[t];
                }
            }
        }
        count
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            OrderKind::GradedLex => "grlex",
            OrderKind::GradedRevLex => "grevlex",
        };
        write!(f, "{name}:")?;
        for (i, p) in self.priority.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p + 1)?;
        }
        Ok(())
    }
}

/// Parses `grlex:2,1,3` / `grevlex:1,2` (1-based priorities).
impl FromStr for MonomialOrder {
    type Err = GnsError;

    fn from_str(s: &str) -> Result<Self> {
        let (name, prio) = s
            .split_once(':')
            .ok_or_else(|| GnsError::Parse(format!("order `{s}` needs the form kind:i,j,...")))?;
        let kind = match name {
            "grlex" => OrderKind::GradedLex,
            "grevlex" => OrderKind::GradedRevLex,
            other => return Err(GnsError::Parse(format!("unknown order kind `{other}`"))),
        };
        let priority = prio
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .ok()
                    .and_then(|v| v.checked_sub(1))
                    .ok_or_else(|| GnsError::Parse(format!("bad priority entry `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(kind, priority)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of ways to write `total` as an ordered sum of `parts` non-negative integers.
fn compositions(total: u128, parts: usize) -> u128 {
    if parts == 0 {
        return u128::from(total == 0);
    }
    binomial(total + parts as u128 - 1, parts as u128 - 1)
}
