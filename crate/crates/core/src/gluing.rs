//! First homology of a knot complement glued to N along the torus.
//!
//! A gluing is recorded by the matrix [[q, r], [p, s]] of the boundary map,
//! so the meridian goes to slope p/q. Stored matrices use determinant −1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GluingError {
    #[error("matrix has determinant {0}, expected ±1")]
    NotUnimodular(i64),
    #[error("cannot parse matrix {0:?}; expected q,r,p,s")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GluingMatrix {
    pub q: i64,
    pub r: i64,
    pub p: i64,
    pub s: i64,
}

impl GluingMatrix {
    pub const fn new(q: i64, r: i64, p: i64, s: i64) -> Self {
        GluingMatrix { q, r, p, s }
    }

    /// The prototype gluing: meridian to slope 2.
    pub const fn prototype() -> Self {
        GluingMatrix::new(1, 0, 2, -1)
    }

    pub fn det(&self) -> i64 {
        self.q * self.s - self.r * self.p
    }

    /// Bring a unimodular matrix to determinant −1 by negating the second
    /// column; the slope and the homology are unchanged.
    pub fn normalized(&self) -> Result<Self, GluingError> {
        match self.det() {
            -1 => Ok(*self),
            1 => Ok(GluingMatrix::new(self.q, -self.r, self.p, -self.s)),
            d => Err(GluingError::NotUnimodular(d)),
        }
    }
}

impl fmt::Display for GluingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.q, self.r, self.p, self.s)
    }
}

impl std::str::FromStr for GluingMatrix {
    type Err = GluingError;
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let v: Vec<i64> = text
            .split(',')
            .map(|x| x.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(|_| GluingError::Parse(text.to_string()))?;
        match v.as_slice() {
            [q, r, p, s] => Ok(GluingMatrix::new(*q, *r, *p, *s)),
            _ => Err(GluingError::Parse(text.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    /// Invariant factors greater than one, each dividing the next.
    pub factors: Vec<BigInt>,
    pub free_rank: usize,
}

impl AbelianGroup {
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.factors.iter().product())
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() + self.free_rank <= 1
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.factors.iter().map(|n| format!("Z/{n}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// Smith normal form diagonal of an integer matrix (rows are relations).
pub fn smith_diagonal(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        loop {
            // pivot: smallest nonzero absolute value, first in row-major order
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return diag;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..m {
                let f = a[i][t].div_floor(&a[t][t]);
                for j in t..n {
                    let d = &f * &a[t][j];
                    a[i][j] -= d;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                let f = a[t][j].div_floor(&a[t][t]);
                for i in t..m {
                    let d = &f * &a[i][t];
                    a[i][j] -= d;
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the remaining block
            let bad = (t + 1..m).flat_map(|i| (t + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_multiple_of(&a[t][t]));
            if let Some((i, _)) = bad {
                for j in t..n {
                    let x = a[i][j].clone();
                    a[t][j] += x;
                }
                continue;
            }
            diag.push(a[t][t].abs());
            break;
        }
    }
    diag
}

/// Abelian group presented by integer relations on `generators` generators.
pub fn group_from_relations(rows: &[Vec<i64>], generators: usize) -> AbelianGroup {
    let diag = smith_diagonal(rows);
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    AbelianGroup {
        factors: diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect(),
        free_rank: generators - nonzero,
    }
}

/// H1 of the glued manifold: ⟨µ, x | 2pµ = 0, 2x = sµ⟩.
pub fn h1_of_gluing(m: &GluingMatrix) -> AbelianGroup {
    group_from_relations(&[vec![2 * m.p, 0], vec![-m.s, 2]], 2)
}

/// |H1| = 4·d·|H|·|p| for a filling of slope p.
pub fn order_formula(p_slope: i64, d: i64, torsion_order: i64) -> i64 {
    4 * d * torsion_order * p_slope.abs()
}

/// Precompose with the n-th power of the twist [[1, n], [0, 1]].
pub fn twist_orbit(m: &GluingMatrix, n: i64) -> GluingMatrix {
    GluingMatrix::new(m.q, m.r + n * m.q, m.p, m.s + n * m.p)
}

/// Slope ±2 gluings (q = 1, determinant −1, entries bounded) with H1 ≅ Z/8,
/// one representative per twist orbit (the one with r = 0).
pub fn classify_cyclic_slope2(bound: i64) -> Vec<GluingMatrix> {
    let eight = BigInt::from(8);
    let mut reps = std::collections::BTreeSet::new();
    for p in [-2i64, 2] {
        if p.abs() > bound || bound < 1 {
            continue;
        }
        for r in -bound..=bound {
            for s in -bound..=bound {
                let m = GluingMatrix::new(1, r, p, s);
                if m.det() != -1 {
                    continue;
                }
                let h = h1_of_gluing(&m);
                if h.is_cyclic() && h.order() == Some(eight.clone()) {
                    reps.insert(twist_orbit(&m, -r));
                }
            }
        }
    }
    reps.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(f: &[i64], r: usize) -> AbelianGroup {
        AbelianGroup { factors: f.iter().map(|&x| BigInt::from(x)).collect(), free_rank: r }
    }

    #[test]
    fn presentations() {
        assert_eq!(h1_of_gluing(&GluingMatrix::new(1, 0, 2, -1)), group(&[8], 0));
        assert_eq!(h1_of_gluing(&GluingMatrix::new(1, 1, 2, 0)), group(&[2, 4], 0));
        assert_eq!(h1_of_gluing(&GluingMatrix::new(1, 0, 1, -1)), group(&[4], 0));
        assert_eq!(h1_of_gluing(&GluingMatrix::new(0, 1, 0, 1)), group(&[], 1));
    }

    #[test]
    fn display() {
        assert_eq!(group(&[2, 4], 0).to_string(), "Z/2 ⊕ Z/4");
        assert_eq!(group(&[], 0).to_string(), "0");
        assert_eq!(group(&[3], 2).to_string(), "Z/3 ⊕ Z^2");
    }

    #[test]
    fn smith_of_larger_matrices() {
        let d = smith_diagonal(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        assert_eq!(group_from_relations(&[vec![0, 0]], 2), group(&[], 2));
    }

    #[test]
    fn twists() {
        let b = GluingMatrix::prototype();
        assert_eq!(twist_orbit(&b, 0), b);
        assert_eq!(twist_orbit(&b, 3), GluingMatrix::new(1, 3, 2, 5));
        assert_eq!(twist_orbit(&b, 3).det(), -1);
    }

    #[test]
    fn normalization() {
        assert_eq!(GluingMatrix::new(1, 0, 2, 1).normalized().unwrap(), GluingMatrix::new(1, 0, 2, -1));
        assert_eq!(GluingMatrix::new(1, 1, 2, 0).normalized(), Err(GluingError::NotUnimodular(-2)));
        assert_eq!("1,0,2,-1".parse::<GluingMatrix>().unwrap(), b());
        assert!("1,0,2".parse::<GluingMatrix>().is_err());
        fn b() -> GluingMatrix {
            GluingMatrix::prototype()
        }
    }

    #[test]
    fn formula_values() {
        assert_eq!(order_formula(2, 1, 1), 8);
        assert_eq!(order_formula(1, 1, 2), 8);
        assert_eq!(order_formula(0, 1, 1), 0);
    }

    #[test]
    fn classification() {
        assert_eq!(
            classify_cyclic_slope2(5),
            vec![GluingMatrix::new(1, 0, -2, -1), GluingMatrix::new(1, 0, 2, -1)]
        );
        assert!(classify_cyclic_slope2(0).is_empty());
        assert!(classify_cyclic_slope2(10).iter().all(|m| m.s % 2 != 0));
    }
}
