//! The grading group G of triples (j; p, q) and its rational extension.
//!
//! Multiplication is (j1 + j2 + (p1 q2 - q1 p2); p1 + p2, q1 + q2). The element
//! λ = (1; 0, 0) is central. Spin^c components add, so any question about
//! spin^c classes reduces to lattice arithmetic in Q^2.

use crate::rational::{fmt_q, gcd_q, is_half_integer, is_integer, parse_q, qi, Q};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradingError {
    #[error("spin^c component lies outside the rational span of the indeterminacy")]
    NoRationalSolution,
    #[error("normalization is ambiguous: two solutions give Maslov components {0} and {1}")]
    AmbiguousNormalization(String, String),
    #[error("gradings carry different indeterminacy subgroups")]
    MismatchedIndeterminacy,
    #[error("({0}) is not an element of the integral group G")]
    NotIntegral(String),
    #[error("cannot parse grading {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    Integral,
    Rational,
}

/// An element (j; p, q). Equality ignores the regime tag.
#[derive(Debug, Clone)]
pub struct GradingElement {
    pub maslov: Q,
    pub spinc_p: Q,
    pub spinc_q: Q,
    pub regime: Regime,
}

impl PartialEq for GradingElement {
    fn eq(&self, o: &Self) -> bool {
        self.maslov == o.maslov && self.spinc_p == o.spinc_p && self.spinc_q == o.spinc_q
    }
}
impl Eq for GradingElement {}

impl Hash for GradingElement {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.maslov.hash(h);
        self.spinc_p.hash(h);
        self.spinc_q.hash(h);
    }
}

fn lies_in_g(j: &Q, p: &Q, q: &Q) -> bool {
    is_half_integer(j) && is_half_integer(p) && is_half_integer(q) && is_integer(&(p + q))
}

impl GradingElement {
    /// An element of the rational extension; promoted to the integral regime
    /// automatically when its components allow it.
    pub fn new(maslov: Q, spinc_p: Q, spinc_q: Q) -> Self {
        let regime = if lies_in_g(&maslov, &spinc_p, &spinc_q) {
            Regime::Integral
        } else {
            Regime::Rational
        };
        GradingElement { maslov, spinc_p, spinc_q, regime }
    }

    pub fn integral(maslov: Q, spinc_p: Q, spinc_q: Q) -> Result<Self, GradingError> {
        let g = GradingElement::new(maslov, spinc_p, spinc_q);
        match g.regime {
            Regime::Integral => Ok(g),
            Regime::Rational => Err(GradingError::NotIntegral(g.to_string())),
        }
    }

    /// Build from (numerator, denominator) pairs; handy for tables.
    pub fn from_ratios(j: (i64, i64), p: (i64, i64), q: (i64, i64)) -> Self {
        use crate::rational::q as r;
        GradingElement::new(r(j.0, j.1), r(p.0, p.1), r(q.0, q.1))
    }

    pub fn identity() -> Self {
        GradingElement::new(qi(0), qi(0), qi(0))
    }

    /// The central element λ = (1; 0, 0).
    pub fn lambda() -> Self {
        GradingElement::new(qi(1), qi(0), qi(0))
    }

    pub fn is_identity(&self) -> bool {
        self.maslov.is_zero() && self.spinc_zero()
    }

    pub fn spinc_zero(&self) -> bool {
        self.spinc_p.is_zero() && self.spinc_q.is_zero()
    }

    pub fn spinc(&self) -> (Q, Q) {
        (self.spinc_p.clone(), self.spinc_q.clone())
    }

    pub fn is_integral(&self) -> bool {
        self.regime == Regime::Integral
    }

    pub fn multiply(&self, b: &GradingElement) -> GradingElement {
        let twist = &self.spinc_p * &b.spinc_q - &self.spinc_q * &b.spinc_p;
        GradingElement::new(
            &self.maslov + &b.maslov + twist,
            &self.spinc_p + &b.spinc_p,
            &self.spinc_q + &b.spinc_q,
        )
    }

    pub fn inverse(&self) -> GradingElement {
        GradingElement::new(-&self.maslov, -&self.spinc_p, -&self.spinc_q)
    }

    pub fn rational_power(&self, t: &Q) -> GradingElement {
        GradingElement::new(t * &self.maslov, t * &self.spinc_p, t * &self.spinc_q)
    }

    pub fn pow(&self, n: i64) -> GradingElement {
        self.rational_power(&qi(n))
    }

    /// λ^n, i.e. a pure Maslov shift.
    pub fn lambda_pow(n: i64) -> GradingElement {
        GradingElement::new(qi(n), qi(0), qi(0))
    }

    /// Sign normalization for cyclic subgroup generators: the spin^c pair is made
    /// lexicographically positive, or the Maslov component positive when the
    /// spin^c pair vanishes.
    pub fn canonical_generator(&self) -> GradingElement {
        let flip = if self.spinc_zero() {
            self.maslov.is_negative()
        } else if !self.spinc_p.is_zero() {
            self.spinc_p.is_negative()
        } else {
            self.spinc_q.is_negative()
        };
        if flip {
            self.inverse()
        } else {
            self.clone()
        }
    }

    /// If `self` = g^t for a rational t, return t.
    pub fn exponent_over(&self, g: &GradingElement) -> Option<Q> {
        let pairs = [
            (&self.maslov, &g.maslov),
            (&self.spinc_p, &g.spinc_p),
            (&self.spinc_q, &g.spinc_q),
        ];
        let mut t: Option<Q> = None;
        for (a, b) in pairs {
            if b.is_zero() {
                if !a.is_zero() {
                    return None;
                }
                continue;
            }
            let r = a / b;
            match &t {
                Some(t0) if *t0 != r => return None,
                _ => t = Some(r),
            }
        }
        Some(t.unwrap_or_else(|| qi(0)))
    }
}

impl fmt::Display for GradingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({};{},{})",
            fmt_q(&self.maslov),
            fmt_q(&self.spinc_p),
            fmt_q(&self.spinc_q)
        )
    }
}

impl FromStr for GradingElement {
    type Err = GradingError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || GradingError::Parse(s.to_string());
        let t = s.trim();
        let inner = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(err)?;
        let (j, rest) = inner.split_once(';').ok_or_else(err)?;
        let (p, q) = rest.split_once(',').ok_or_else(err)?;
        Ok(GradingElement::new(
            parse_q(j).ok_or_else(err)?,
            parse_q(p).ok_or_else(err)?,
            parse_q(q).ok_or_else(err)?,
        ))
    }
}

impl Serialize for GradingElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// An element of <f>\G/<h>: a representative with optional cyclic indeterminacy
/// on either side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetGrading {
    pub left_indeterminacy: Option<GradingElement>,
    pub right_indeterminacy: Option<GradingElement>,
    pub representative: GradingElement,
}

impl CosetGrading {
    pub fn new(
        left: Option<GradingElement>,
        rep: GradingElement,
        right: Option<GradingElement>,
    ) -> Self {
        CosetGrading {
            left_indeterminacy: left.map(|g| g.canonical_generator()),
            right_indeterminacy: right.map(|g| g.canonical_generator()),
            representative: rep,
        }
    }

    fn sides(&self) -> (GradingElement, GradingElement) {
        (
            self.left_indeterminacy.clone().unwrap_or_else(GradingElement::identity),
            self.right_indeterminacy.clone().unwrap_or_else(GradingElement::identity),
        )
    }

    fn same_indeterminacy(&self, o: &CosetGrading) -> bool {
        self.left_indeterminacy == o.left_indeterminacy
            && self.right_indeterminacy == o.right_indeterminacy
    }

    /// f^s · rep · h^t
    pub fn act(&self, s: &Q, t: &Q) -> GradingElement {
        let (f, h) = self.sides();
        f.rational_power(s)
            .multiply(&self.representative)
            .multiply(&h.rational_power(t))
    }

    /// Decides x ~ y, i.e. f^a x h^b = y for some integers a, b.
    pub fn coset_eq(&self, o: &CosetGrading) -> Result<bool, GradingError> {
        if !self.same_indeterminacy(o) {
            return Err(GradingError::MismatchedIndeterminacy);
        }
        let (f, h) = self.sides();
        let x = &self.representative;
        let y = &o.representative;
        let cross = |a: &GradingElement, b: &GradingElement| {
            &a.spinc_p * &b.spinc_q - &a.spinc_q * &b.spinc_p
        };
        let fh = cross(&f, &h);
        let dp = &y.spinc_p - &x.spinc_p;
        let dq = &y.spinc_q - &x.spinc_q;
        if !fh.is_zero() {
            // unique rational solution of a f + b h = Δ on spin^c parts
            let a = (&dp * &h.spinc_q - &dq * &h.spinc_p) / &fh;
            let b = (&f.spinc_p * &dq - &f.spinc_q * &dp) / &fh;
            if !is_integer(&a) || !is_integer(&b) {
                return Ok(false);
            }
            return Ok(self.act(&a, &b) == *y);
        }
        // f, h spin^c parallel: the Maslov condition is linear in (a, b)
        let rows = vec![
            [f.spinc_p.clone(), h.spinc_p.clone(), dp],
            [f.spinc_q.clone(), h.spinc_q.clone(), dq],
            [
                &f.maslov + cross(&f, x),
                &h.maslov + cross(x, &h),
                &y.maslov - &x.maslov,
            ],
        ];
        Ok(integer_solvable_2(&rows))
    }
}

/// Does a·x + b·y = c (one row per equation) have an integer solution (a, b)?
pub fn integer_solvable_2(rows: &[[Q; 3]]) -> bool {
    // find two independent rows
    let mut basis: Vec<&[Q; 3]> = Vec::new();
    for r in rows {
        if r[0].is_zero() && r[1].is_zero() {
            if !r[2].is_zero() {
                return false;
            }
            continue;
        }
        if basis.is_empty() {
            basis.push(r);
        } else if basis.len() == 1 {
            let b = basis[0];
            if &b[0] * &r[1] - &b[1] * &r[0] != Q::zero() {
                basis.push(r);
            }
        }
    }
    match basis.len() {
        0 => true,
        1 => {
            let b = basis[0];
            // every row must be a multiple of b
            for r in rows {
                let det = &b[0] * &r[1] - &b[1] * &r[0];
                if !det.is_zero() {
                    unreachable!("second independent row already collected");
                }
                let scale = if !b[0].is_zero() { &r[0] / &b[0] } else { &r[1] / &b[1] };
                if &scale * &b[2] != r[2] {
                    return false;
                }
            }
            // u a + v b = w solvable over Z iff gcd(u, v) | w
            let g = gcd_q(&b[0], &b[1]);
            is_integer(&(&b[2] / g))
        }
        _ => {
            let (r1, r2) = (basis[0], basis[1]);
            let det = &r1[0] * &r2[1] - &r1[1] * &r2[0];
            let a = (&r1[2] * &r2[1] - &r1[1] * &r2[2]) / &det;
            let b = (&r1[0] * &r2[2] - &r1[2] * &r2[0]) / &det;
            if !is_integer(&a) || !is_integer(&b) {
                return false;
            }
            rows.iter().all(|r| &r[0] * &a + &r[1] * &b == r[2])
        }
    }
}

/// Membership of `v` in the integer span of `gens` (vectors in Q^2).
pub fn in_integer_span(v: &(Q, Q), gens: &[(Q, Q)]) -> bool {
    let live: Vec<&(Q, Q)> = gens.iter().filter(|g| !(g.0.is_zero() && g.1.is_zero())).collect();
    if live.len() == 2 {
        let (f, h) = (live[0], live[1]);
        let det = &f.0 * &h.1 - &f.1 * &h.0;
        if !det.is_zero() {
            let a = (&v.0 * &h.1 - &v.1 * &h.0) / &det;
            let b = (&f.0 * &v.1 - &f.1 * &v.0) / &det;
            return is_integer(&a) && is_integer(&b);
        }
    }
    in_lattice_hermite(v, &live.into_iter().cloned().collect::<Vec<_>>())
}

/// Lattice membership through a 2D Hermite reduction; total on any rank.
pub fn in_lattice_hermite(v: &(Q, Q), gens: &[(Q, Q)]) -> bool {
    let mut den = v.0.denom().lcm(v.1.denom());
    for g in gens {
        den = den.lcm(g.0.denom()).lcm(g.1.denom());
    }
    let d = Q::from_integer(den);
    let scale = |x: &Q| (x * &d).to_integer();
    let mut vecs: Vec<(num_bigint::BigInt, num_bigint::BigInt)> =
        gens.iter().map(|g| (scale(&g.0), scale(&g.1))).collect();
    let (vx, vy) = (scale(&v.0), scale(&v.1));
    // Euclid on first coordinates
    loop {
        let nz: Vec<usize> = (0..vecs.len()).filter(|&i| !vecs[i].0.is_zero()).collect();
        if nz.len() <= 1 {
            break;
        }
        let piv = *nz.iter().min_by_key(|&&i| vecs[i].0.abs()).unwrap();
        let (px, py) = vecs[piv].clone();
        for &i in &nz {
            if i != piv {
                let k = vecs[i].0.div_floor(&px);
                vecs[i].0 -= &k * &px;
                vecs[i].1 -= &k * &py;
            }
        }
    }
    let pivot = vecs.iter().find(|w| !w.0.is_zero()).cloned();
    let g2 = vecs
        .iter()
        .filter(|w| w.0.is_zero())
        .fold(num_bigint::BigInt::zero(), |acc, w| acc.gcd(&w.1));
    let rest = match pivot {
        None => {
            if !vx.is_zero() {
                return false;
            }
            vy
        }
        Some((gx, gy)) => {
            if !(&vx % &gx).is_zero() {
                return false;
            }
            let a = &vx / &gx;
            vy - a * gy
        }
    };
    if g2.is_zero() {
        rest.is_zero()
    } else {
        (rest % g2).is_zero()
    }
}

/// Spin^c equivalence: the spin^c difference lies in the integer span of the
/// indeterminacies' spin^c components.
pub fn same_spinc(x: &CosetGrading, y: &CosetGrading) -> Result<bool, GradingError> {
    if !x.same_indeterminacy(y) {
        return Err(GradingError::MismatchedIndeterminacy);
    }
    let (f, h) = x.sides();
    let d = (
        &y.representative.spinc_p - &x.representative.spinc_p,
        &y.representative.spinc_q - &x.representative.spinc_q,
    );
    Ok(in_integer_span(&d, &[f.spinc(), h.spinc()]))
}

/// Maslov component of the coset representative whose spin^c part is (0, 0).
pub fn normalize_spinc(g: &CosetGrading) -> Result<Q, GradingError> {
    let (f, h) = g.sides();
    let rep = &g.representative;
    // solve s f + t h = -rep on spin^c parts
    let target = (-&rep.spinc_p, -&rep.spinc_q);
    let (part, null) = solve_2x2(&f.spinc(), &h.spinc(), &target)
        .ok_or(GradingError::NoRationalSolution)?;
    let m = |s: &Q, t: &Q| g.act(s, t).maslov;
    let base = m(&part.0, &part.1);
    let mut probes: Vec<(Q, Q)> = Vec::new();
    for n in &null {
        probes.push((&part.0 + &n.0, &part.1 + &n.1));
        probes.push((&part.0 - &n.0, &part.1 - &n.1));
    }
    if null.len() == 2 {
        probes.push((&part.0 + &null[0].0 + &null[1].0, &part.1 + &null[0].1 + &null[1].1));
    }
    for (s, t) in probes {
        let v = m(&s, &t);
        if v != base {
            return Err(GradingError::AmbiguousNormalization(fmt_q(&base), fmt_q(&v)));
        }
    }
    Ok(base)
}

/// Solve s·a + t·b = c in Q^2. Returns a particular solution and a basis of the
/// null space, or None when inconsistent.
fn solve_2x2(a: &(Q, Q), b: &(Q, Q), c: &(Q, Q)) -> Option<((Q, Q), Vec<(Q, Q)>)> {
    let z = Q::zero();
    let det = &a.0 * &b.1 - &a.1 * &b.0;
    if !det.is_zero() {
        let s = (&c.0 * &b.1 - &c.1 * &b.0) / &det;
        let t = (&a.0 * &c.1 - &a.1 * &c.0) / &det;
        return Some(((s, t), vec![]));
    }
    let a_zero = a.0.is_zero() && a.1.is_zero();
    let b_zero = b.0.is_zero() && b.1.is_zero();
    if a_zero && b_zero {
        if c.0.is_zero() && c.1.is_zero() {
            return Some(((z.clone(), z.clone()), vec![(Q::one(), z.clone()), (z.clone(), Q::one())]));
        }
        return None;
    }
    // rank one: a, b parallel, at least one non-zero
    let (dir, use_a) = if !a_zero { (a, true) } else { (b, false) };
    let cross = &dir.0 * &c.1 - &dir.1 * &c.0;
    if !cross.is_zero() {
        return None;
    }
    let k = if !dir.0.is_zero() { &c.0 / &dir.0 } else { &c.1 / &dir.1 };
    let part = if use_a { (k, z.clone()) } else { (z.clone(), k) };
    // null space: s a + t b = 0
    let null = if a_zero {
        (Q::one(), z.clone())
    } else if b_zero {
        (z.clone(), Q::one())
    } else {
        let r = if !a.0.is_zero() { &b.0 / &a.0 } else { &b.1 / &a.1 };
        (-r, Q::one())
    };
    Some((part, vec![null]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn g(s: &str) -> GradingElement {
        s.parse().unwrap()
    }

    #[test]
    fn group_law_examples() {
        assert_eq!(g("(-1/2;1/2,1/2)").multiply(&g("(-1/2;1/2,-1/2)")), g("(-3/2;1,0)"));
        assert_eq!(g("(-1/2;-1,0)").multiply(&g("(-1/2;-1,0)")), g("(-1;-2,0)"));
        let x = g("(5/2;-3/2,1/2)");
        assert_eq!(GradingElement::lambda().multiply(&x), g("(7/2;-3/2,1/2)"));
    }

    #[test]
    fn inverse_and_powers() {
        assert_eq!(g("(-1/2;1/2,-1/2)").inverse(), g("(1/2;-1/2,1/2)"));
        assert_eq!(GradingElement::identity().inverse(), GradingElement::identity());
        assert_eq!(g("(-1;4,-2)").rational_power(&q(1, 2)), g("(-1/2;2,-1)"));
        assert_eq!(g("(-3;4,-2)").rational_power(&q(3, 4)), g("(-9/4;3,-3/2)"));
        assert!(g("(3;1,1)").rational_power(&qi(0)).is_identity());
    }

    #[test]
    fn regimes() {
        assert!(g("(1/2;1/2,1/2)").is_integral());
        assert!(!g("(0;1/2,0)").is_integral());
        assert!(!g("(1/3;0,0)").is_integral());
        assert!(GradingElement::integral(q(1, 4), qi(0), qi(0)).is_err());
    }

    #[test]
    fn text_form() {
        let x = g("( -9/4 ; 3 , -3/2 )");
        assert_eq!(x.to_string(), "(-9/4;3,-3/2)");
        assert!("(1;2)".parse::<GradingElement>().is_err());
    }

    #[test]
    fn normalization_examples() {
        let f = g("(3/2;0,1)");
        let c = CosetGrading::new(Some(f.clone()), g("(0;-1,1)"), Some(g("(-1;4,-2)")));
        assert_eq!(normalize_spinc(&c).unwrap(), q(-3, 2));
        let c = CosetGrading::new(Some(f.clone()), g("(7/2;-3,2)"), Some(g("(-3;4,-2)")));
        assert_eq!(normalize_spinc(&c).unwrap(), qi(-1));
        let c = CosetGrading::new(Some(f), GradingElement::identity(), Some(g("(-3;4,-2)")));
        assert_eq!(normalize_spinc(&c).unwrap(), qi(0));
    }

    #[test]
    fn normalization_failures() {
        let c = CosetGrading::new(Some(g("(1;0,1)")), g("(0;1,0)"), Some(g("(2;0,2)")));
        assert_eq!(normalize_spinc(&c), Err(GradingError::NoRationalSolution));
        // parallel spin^c with incompatible Maslov drift
        let c = CosetGrading::new(Some(g("(1;0,1)")), g("(0;0,1)"), Some(g("(0;0,1)")));
        assert!(matches!(normalize_spinc(&c), Err(GradingError::AmbiguousNormalization(..))));
    }

    #[test]
    fn spinc_examples() {
        let f = Some(g("(3/2;0,1)"));
        let h = Some(g("(-1;4,-2)"));
        let a = CosetGrading::new(f.clone(), GradingElement::identity(), h.clone());
        let b = CosetGrading::new(f.clone(), g("(1/2;-2,1)"), h.clone());
        let c = CosetGrading::new(f.clone(), g("(-1;4,-1)"), h.clone());
        assert!(!same_spinc(&a, &b).unwrap());
        assert!(same_spinc(&a, &c).unwrap());
        assert!(same_spinc(&a, &a).unwrap());
        let other = CosetGrading::new(f, GradingElement::identity(), None);
        assert_eq!(same_spinc(&a, &other), Err(GradingError::MismatchedIndeterminacy));
    }

    #[test]
    fn spinc_example_brute_force() {
        // Δ = (4,-1) against a(0,1) + b(4,-2) over a small box
        let mut found = false;
        for a in -5..=5i64 {
            for b in -5..=5i64 {
                if 4 * b == 4 && a - 2 * b == -1 {
                    found = true;
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn canonical_sign() {
        assert_eq!(g("(1;-4,2)").canonical_generator(), g("(-1;4,-2)"));
        assert_eq!(g("(-3/2;0,-1)").canonical_generator(), g("(3/2;0,1)"));
        assert_eq!(g("(-2;0,0)").canonical_generator(), g("(2;0,0)"));
    }

    #[test]
    fn coset_equality() {
        let f = Some(g("(3/2;0,1)"));
        let h = Some(g("(-1;4,-2)"));
        let x = CosetGrading::new(f.clone(), g("(1/2;1,0)"), h.clone());
        let fx = g("(3/2;0,1)").multiply(&g("(1/2;1,0)")).multiply(&g("(-1;4,-2)").pow(-2));
        let y = CosetGrading::new(f.clone(), fx, h.clone());
        assert!(x.coset_eq(&y).unwrap());
        let z = CosetGrading::new(f, g("(3/2;1,0)"), h);
        assert!(!x.coset_eq(&z).unwrap());
    }

    #[test]
    fn hermite_fallback_agrees_on_rank_one() {
        let gens = [(qi(2), qi(-1)), (qi(4), qi(-2))];
        assert!(in_integer_span(&(qi(6), qi(-3)), &gens));
        assert!(!in_integer_span(&(qi(1), qi(0)), &gens));
        assert!(in_integer_span(&(qi(0), qi(0)), &[]));
        assert!(!in_integer_span(&(qi(0), q(1, 2)), &[(qi(0), qi(1))]));
    }
}
