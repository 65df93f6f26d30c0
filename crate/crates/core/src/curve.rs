//! Immersed curves in the marked torus.
//!
//! Curves are stored in the universal cover: a component is a cyclic list of
//! vertices v0 … v_{n-1}, closed up by v_{n-1} → v0 + wrap. The α arc is the
//! vertical grid line x ∈ Z, the β arc the horizontal line y ∈ Z, and the
//! marked point sits just inside the top-right corner of every unit square.

use crate::rational::{fmt_q, frac, is_integer, parse_q, q, qi, Q};
use crate::torus_algebra::AlgebraElement;
use crate::type_d::{Edge, Generator, TypeDStructure};
use num_integer::Integer;
use num_traits::Signed;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("generator {0:?} has valence greater than two")]
    NotLoopType(String),
    #[error("graph still has ∅-edges")]
    NotReduced,
    #[error("not in normal position: {0}")]
    NotNormalPosition(String),
    #[error("unsupported move: {0}")]
    UnsupportedMove(String),
    #[error("curve has no essential component")]
    NoEssentialComponent,
    #[error("curve is not of the supported pegboard shape: {0}")]
    UnsupportedShape(String),
    #[error("invalid slope {0}")]
    InvalidSlope(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Radius of the ball around the marked point.
pub fn basepoint_eps() -> Q {
    q(1, 100)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<(Q, Q)>,
    pub wrap: (i64, i64),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PLCurve {
    pub components: Vec<Component>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Side {
    R,
    B,
    L,
    T,
}

impl Side {
    /// Clockwise boundary coordinate starting at the top-right corner.
    fn position(self, v: &Q) -> Q {
        match self {
            Side::R => qi(1) - v,
            Side::B => qi(2) - v,
            Side::L => qi(2) + v,
            Side::T => qi(3) + v,
        }
    }

    fn opposite(self) -> Side {
        match self {
            Side::R => Side::L,
            Side::L => Side::R,
            Side::B => Side::T,
            Side::T => Side::B,
        }
    }

    fn step(self) -> (i64, i64) {
        match self {
            Side::R => (1, 0),
            Side::L => (-1, 0),
            Side::T => (0, 1),
            Side::B => (0, -1),
        }
    }
}

fn source_side(l: AlgebraElement) -> Side {
    use AlgebraElement::*;
    match l {
        Rho1 | Rho12 | Rho123 => Side::R,
        Rho2 | Rho23 => Side::B,
        _ => Side::L,
    }
}

fn target_side(l: AlgebraElement) -> Side {
    use AlgebraElement::*;
    match l {
        Rho1 => Side::B,
        Rho2 | Rho12 => Side::L,
        _ => Side::T,
    }
}

fn label_between(u: &Q, w: &Q) -> AlgebraElement {
    let (lo, hi) = if u < w { (u, w) } else { (w, u) };
    let digits: String = (1..=3)
        .filter(|c| *lo < qi(*c) && qi(*c) < *hi)
        .map(|c| char::from(b'0' + c as u8))
        .collect();
    AlgebraElement::from_digits(&digits).unwrap_or(AlgebraElement::Iota0)
}

/// Realize a reduced loop-type decorated graph with the standard segments.
pub fn type_d_to_curve(d: &TypeDStructure) -> Result<PLCurve, CurveError> {
    d.is_loop_type().map_err(|e| CurveError::NotLoopType(e.to_string()))?;
    if !d.is_reduced() {
        return Err(CurveError::NotReduced);
    }
    let mut height: BTreeMap<&str, Q> = BTreeMap::new();
    for idem in [0u8, 1] {
        let mut names: Vec<&str> =
            d.generators.iter().filter(|g| g.idem == idem).map(|g| g.name.as_str()).collect();
        names.sort();
        let n = names.len() as i64;
        // on the 1/20 grid while it fits inside [1/4, 3/4]
        let step = if n <= 9 { q(1, 20) } else { q(1, 2 * (n + 2)) };
        for (k, name) in names.into_iter().enumerate() {
            height.insert(name, q(1, 4) + &step * qi(k as i64 + 1));
        }
    }
    // edge ends (edge, is_source) with the square side they sit on
    let mut ends: BTreeMap<&str, Vec<(usize, bool, Side)>> = BTreeMap::new();
    for (i, e) in d.edges.iter().enumerate() {
        ends.entry(&e.source).or_default().push((i, true, source_side(e.label)));
        ends.entry(&e.target).or_default().push((i, false, target_side(e.label)));
    }
    for g in &d.generators {
        let mut sides: Vec<Side> =
            ends.get(g.name.as_str()).into_iter().flatten().map(|x| x.2).collect();
        sides.sort();
        let ok = if g.idem == 0 { vec![Side::L, Side::R] } else { vec![Side::B, Side::T] };
        let ok: Vec<Side> = {
            let mut o = ok;
            o.sort();
            o
        };
        if sides != ok {
            return Err(CurveError::NotNormalPosition(format!(
                "generator {} needs one edge end on each side of its arc",
                g.name
            )));
        }
    }
    let point = |name: &str, side: Side, sq: (i64, i64)| -> (Q, Q) {
        let h = height[name].clone();
        let (i, j) = (qi(sq.0), qi(sq.1));
        match side {
            Side::L => (i, j + h),
            Side::R => (i + qi(1), j + h),
            Side::B => (i + h, j),
            Side::T => (i + h, j + qi(1)),
        }
    };
    let mut used = BTreeSet::new();
    let mut components = Vec::new();
    for e0 in 0..d.edges.len() {
        if used.contains(&e0) {
            continue;
        }
        let start = (e0, true);
        let mut cur = start;
        let mut sq = (0i64, 0i64);
        let mut vertices = Vec::new();
        loop {
            used.insert(cur.0);
            let e = &d.edges[cur.0];
            let (here, side) = if cur.1 {
                (&e.source, source_side(e.label))
            } else {
                (&e.target, target_side(e.label))
            };
            vertices.push(point(here, side, sq));
            let (there, oside) = if cur.1 {
                (&e.target, target_side(e.label))
            } else {
                (&e.source, source_side(e.label))
            };
            let st = oside.step();
            sq = (sq.0 + st.0, sq.1 + st.1);
            let want = oside.opposite();
            let next = ends[there.as_str()]
                .iter()
                .find(|x| x.2 == want)
                .map(|x| (x.0, x.1))
                .unwrap();
            if next == start {
                break;
            }
            cur = next;
        }
        components.push(Component { vertices, wrap: sq });
    }
    Ok(PLCurve { components })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Kind {
    Alpha,
    Beta,
}

#[derive(Debug, Clone)]
struct Crossing {
    kind: Kind,
    point: (Q, Q),
    seg: usize,
    t: Q,
    dir: i8,
}

impl Crossing {
    /// Coordinate along the crossed arc, in (0, 1).
    fn v(&self) -> Q {
        match self.kind {
            Kind::Alpha => frac(&self.point.1),
            Kind::Beta => frac(&self.point.0),
        }
    }

    fn entry(&self) -> Side {
        match (self.kind, self.dir > 0) {
            (Kind::Alpha, true) => Side::L,
            (Kind::Alpha, false) => Side::R,
            (Kind::Beta, true) => Side::B,
            (Kind::Beta, false) => Side::T,
        }
    }

    fn exit(&self) -> Side {
        self.entry().opposite()
    }
}

impl Component {
    fn at(&self, j: usize) -> (Q, Q) {
        let n = self.vertices.len();
        let w = (j / n) as i64;
        let v = &self.vertices[j % n];
        (&v.0 + qi(w * self.wrap.0), &v.1 + qi(w * self.wrap.1))
    }

    fn crossings(&self) -> Result<Vec<Crossing>, CurveError> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for k in 0..n {
            let (a, b, c) = (self.at(k), self.at(k + 1), self.at(k + 2));
            if a == b {
                return Err(CurveError::NotNormalPosition("degenerate segment".into()));
            }
            let mut events: Vec<Crossing> = Vec::new();
            for kind in [Kind::Alpha, Kind::Beta] {
                let get = |p: &(Q, Q)| if kind == Kind::Alpha { p.0.clone() } else { p.1.clone() };
                let (av, bv, cv) = (get(&a), get(&b), get(&c));
                if av == bv {
                    if is_integer(&av) {
                        return Err(CurveError::NotNormalPosition("segment runs along α or β".into()));
                    }
                    continue;
                }
                let dir: i8 = if bv > av { 1 } else { -1 };
                let (lo, hi) = if av < bv { (&av, &bv) } else { (&bv, &av) };
                let mut i = lo.floor() + qi(1);
                while &i < hi {
                    let t = (&i - &av) / (&bv - &av);
                    events.push(Crossing { kind, point: lerp(&a, &b, &t), seg: k, t, dir });
                    i += qi(1);
                }
                if is_integer(&bv) {
                    if cv == bv {
                        return Err(CurveError::NotNormalPosition("segment runs along α or β".into()));
                    }
                    let side_in = (&av - &bv).signum();
                    let side_out = (&cv - &bv).signum();
                    if side_in != side_out {
                        events.push(Crossing { kind, point: b.clone(), seg: k, t: qi(1), dir });
                    }
                }
            }
            events.sort_by(|x, y| x.t.cmp(&y.t));
            for e in &events {
                if is_integer(&e.point.0) && is_integer(&e.point.1) {
                    return Err(CurveError::NotNormalPosition("curve meets the marked point".into()));
                }
            }
            out.extend(events);
        }
        Ok(out)
    }

    /// Checks that no arc separates the marked point from the region it cuts off.
    fn check_arcs(&self, cr: &[Crossing]) -> Result<(), CurveError> {
        let m = cr.len();
        let n = self.vertices.len();
        let eps = basepoint_eps();
        for i in 0..m {
            let (c1, c2) = (&cr[i], &cr[(i + 1) % m]);
            let end_seg = if i + 1 == m { c2.seg + n } else { c2.seg };
            let p1 = c1.point.clone();
            let p2 = if i + 1 == m {
                (&c2.point.0 + qi(self.wrap.0), &c2.point.1 + qi(self.wrap.1))
            } else {
                c2.point.clone()
            };
            let mut arc = vec![p1.clone()];
            for j in c1.seg + 1..=end_seg {
                let v = self.at(j);
                if v != p1 && v != p2 {
                    arc.push(v);
                }
            }
            arc.push(p2.clone());
            let probe = &arc[1];
            let mid = ((&p1.0 + &probe.0) / qi(2), (&p1.1 + &probe.1) / qi(2));
            let origin = (mid.0.floor(), mid.1.floor());
            let local: Vec<(Q, Q)> =
                arc.iter().map(|p| (&p.0 - &origin.0, &p.1 - &origin.1)).collect();
            let u = c1.entry().position(&c1.v());
            let w = c2.exit().position(&c2.v());
            let mut poly = if u <= w { local } else { local.into_iter().rev().collect() };
            let (lo, hi) = if u <= w { (u, w) } else { (w, u) };
            for c in (1..=3).rev() {
                if lo < qi(c) && qi(c) < hi {
                    poly.push(match c {
                        1 => (qi(1), qi(0)),
                        2 => (qi(0), qi(0)),
                        _ => (qi(0), qi(1)),
                    });
                }
            }
            let z = (qi(1) - &eps, qi(1) - &eps);
            if point_in_polygon(&poly, &z) {
                return Err(CurveError::NotNormalPosition(
                    "an arc cuts the marked point off from its corner".into(),
                ));
            }
        }
        Ok(())
    }
}

fn lerp(a: &(Q, Q), b: &(Q, Q), t: &Q) -> (Q, Q) {
    (&a.0 + t * (&b.0 - &a.0), &a.1 + t * (&b.1 - &a.1))
}

fn point_in_polygon(poly: &[(Q, Q)], p: &(Q, Q)) -> bool {
    let mut inside = false;
    let n = poly.len();
    for i in 0..n {
        let (a, b) = (&poly[i], &poly[(i + 1) % n]);
        if (a.1 > p.1) != (b.1 > p.1) {
            let xi = &a.0 + (&p.1 - &a.1) * (&b.0 - &a.0) / (&b.1 - &a.1);
            if p.0 < xi {
                inside = !inside;
            }
        }
    }
    inside
}

/// A crossing kept after tightening, with the sides of the arc leaving it.
#[derive(Debug, Clone)]
struct TightCrossing {
    kind: Kind,
    v: Q,
    point: (Q, Q),
    arc: (Side, Side),
}

/// Cancel U-turns (arcs leaving and returning through the same side) until
/// none remain.
fn tighten(cr: &[Crossing]) -> Vec<TightCrossing> {
    let m = cr.len();
    let mut list: Vec<TightCrossing> = (0..m)
        .map(|i| TightCrossing {
            kind: cr[i].kind,
            v: cr[i].v(),
            point: cr[i].point.clone(),
            arc: (cr[i].entry(), cr[(i + 1) % m].exit()),
        })
        .collect();
    loop {
        let n = list.len();
        let Some(i) = (0..n).find(|&i| list[i].arc.0 == list[i].arc.1) else {
            return list;
        };
        if n <= 2 {
            return Vec::new();
        }
        let j = (i + 1) % n;
        let prev = (i + n - 1) % n;
        let merged = (list[prev].arc.0, list[j].arc.1);
        list[prev].arc = merged;
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        list.remove(b);
        list.remove(a);
    }
}

/// Read off a decorated graph from a curve in normal position.
pub fn curve_to_type_d(c: &PLCurve) -> Result<TypeDStructure, CurveError> {
    let mut tight: Vec<Vec<TightCrossing>> = Vec::new();
    for comp in &c.components {
        let cr = comp.crossings()?;
        comp.check_arcs(&cr)?;
        tight.push(tighten(&cr));
    }
    let mut keys: Vec<(Kind, Q)> =
        tight.iter().flatten().map(|t| (t.kind, t.v.clone())).collect();
    keys.sort();
    for w in keys.windows(2) {
        if w[0] == w[1] {
            return Err(CurveError::NotNormalPosition("two crossings coincide on the torus".into()));
        }
    }
    let mut names: BTreeMap<(Kind, Q), String> = BTreeMap::new();
    let (mut na, mut nb) = (0, 0);
    let mut generators = Vec::new();
    for k in keys {
        let name = match k.0 {
            Kind::Alpha => {
                na += 1;
                format!("x{na}")
            }
            Kind::Beta => {
                nb += 1;
                format!("y{nb}")
            }
        };
        generators.push(Generator { name: name.clone(), idem: if k.0 == Kind::Alpha { 0 } else { 1 } });
        names.insert(k, name);
    }
    let mut edges = Vec::new();
    for comp in &tight {
        let n = comp.len();
        for i in 0..n {
            let (a, b) = (&comp[i], &comp[(i + 1) % n]);
            let u = a.arc.0.position(&a.v);
            let w = a.arc.1.position(&b.v);
            let label = label_between(&u, &w);
            let (na, nb) = (names[&(a.kind, a.v.clone())].clone(), names[&(b.kind, b.v.clone())].clone());
            let (source, target) = if u < w { (na, nb) } else { (nb, na) };
            edges.push(Edge { source, target, label });
        }
    }
    Ok(TypeDStructure { generators, edges, spinc_tag: None })
}

/// Mapping-class moves acting linearly on the cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    /// Dehn twist along the curve of primitive class `direction`, `count` times.
    Twist { direction: (i64, i64), count: i64 },
    ReflectYHalf,
    ReflectDiagonal,
    ReflectAntiDiagonal,
}

impl Move {
    pub fn matrix(&self) -> Result<[[i64; 2]; 2], CurveError> {
        Ok(match self {
            Move::Twist { direction: (a, b), count: n } => {
                if a.gcd(b) != 1 {
                    return Err(CurveError::UnsupportedMove(format!(
                        "twist direction ({a},{b}) is not primitive"
                    )));
                }
                // w ↦ w + n·ω(v, w)·v with ω(v, w) = v1 w2 − v2 w1
                [[1 - n * a * b, n * a * a], [-n * b * b, 1 + n * a * b]]
            }
            Move::ReflectYHalf => [[1, 0], [0, -1]],
            Move::ReflectDiagonal => [[0, 1], [1, 0]],
            Move::ReflectAntiDiagonal => [[0, -1], [-1, 0]],
        })
    }
}

impl std::str::FromStr for Move {
    type Err = CurveError;
    /// `twist:a,b:n`, `reflect:y=1/2`, `reflect:y=x`, `reflect:y=-x`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CurveError::UnsupportedMove(s.to_string());
        match s {
            "reflect:y=1/2" => return Ok(Move::ReflectYHalf),
            "reflect:y=x" => return Ok(Move::ReflectDiagonal),
            "reflect:y=-x" => return Ok(Move::ReflectAntiDiagonal),
            _ => {}
        }
        let rest = s.strip_prefix("twist:").ok_or_else(bad)?;
        let (dir, n) = rest.split_once(':').ok_or_else(bad)?;
        let (a, b) = dir.split_once(',').ok_or_else(bad)?;
        Ok(Move::Twist {
            direction: (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
            count: n.trim().parse().map_err(|_| bad())?,
        })
    }
}

pub fn apply_matrix(c: &PLCurve, m: [[i64; 2]; 2]) -> PLCurve {
    let f = |x: &Q, y: &Q| (qi(m[0][0]) * x + qi(m[0][1]) * y, qi(m[1][0]) * x + qi(m[1][1]) * y);
    PLCurve {
        components: c
            .components
            .iter()
            .map(|comp| Component {
                vertices: comp.vertices.iter().map(|(x, y)| f(x, y)).collect(),
                wrap: (
                    m[0][0] * comp.wrap.0 + m[0][1] * comp.wrap.1,
                    m[1][0] * comp.wrap.0 + m[1][1] * comp.wrap.1,
                ),
            })
            .collect(),
    }
}

pub fn apply_mapping_class(c: &PLCurve, moves: &[Move]) -> Result<PLCurve, CurveError> {
    let mut out = c.clone();
    for mv in moves {
        out = apply_matrix(&out, mv.matrix()?);
    }
    Ok(out)
}

/// The filling line for slope p/q: class (p, q) in (x, y), offset 1/(2|p|).
/// Slope 0 is the vertical line through x = 1/2.
pub fn filling_line(p: i64, q_: i64) -> Result<PLCurve, CurveError> {
    if q_ < 1 || p.gcd(&q_) != 1 {
        return Err(CurveError::InvalidSlope(format!("{p}/{q_}")));
    }
    if p == 0 {
        return Ok(PLCurve { components: vec![Component { vertices: vec![(q(1, 2), qi(0))], wrap: (0, 1) }] });
    }
    Ok(PLCurve {
        components: vec![Component { vertices: vec![(qi(0), q(1, 2 * p.abs()))], wrap: (p, q_) }],
    })
}

/// CFD of the solid torus whose meridian is glued to slope p/q.
pub fn solid_torus_cfd(p: i64, q_: i64) -> Result<TypeDStructure, CurveError> {
    curve_to_type_d(&filling_line(p, q_)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotCurveSummary {
    pub genus: u64,
    pub tau: i64,
    pub epsilon: i8,
    pub n: BTreeMap<i64, u64>,
    pub essential_slope: i64,
}

impl KnotCurveSummary {
    /// Profile of an L-space knot with the given τ: n_i = 1 for |i| < |τ|.
    pub fn l_space(tau: i64) -> Self {
        let g = tau.unsigned_abs();
        let eps = tau.signum() as i8;
        let n = (-(g as i64) + 1..g as i64).map(|i| (i, 1)).collect();
        KnotCurveSummary { genus: g, tau, epsilon: eps, n, essential_slope: 2 * tau - eps as i64 }
    }

    /// A summary with extra loose vertical segments at the given heights,
    /// added symmetrically.
    pub fn with_extra(mut self, heights: &[i64]) -> Self {
        for &h in heights {
            *self.n.entry(h).or_default() += 1;
            if h != 0 {
                *self.n.entry(-h).or_default() += 1;
            }
        }
        self
    }

    pub fn is_symmetric(&self) -> bool {
        self.n.iter().all(|(i, v)| self.n.get(&-i).copied().unwrap_or(0) == *v)
    }
}

/// Pegboard statistics of a knot-complement curve with one essential
/// component and staircase shape.
pub fn pegboard_summary(c: &PLCurve) -> Result<KnotCurveSummary, CurveError> {
    let mut essential = Vec::new();
    for comp in &c.components {
        let cr = comp.crossings()?;
        let tight = tighten(&cr);
        if tight.is_empty() {
            continue;
        }
        if comp.wrap == (0, 0) {
            return Err(CurveError::UnsupportedShape("inessential component present".into()));
        }
        essential.push((comp, tight));
    }
    let [(comp, tight)] = essential.as_slice() else {
        return Err(if essential.is_empty() {
            CurveError::NoEssentialComponent
        } else {
            CurveError::UnsupportedShape("more than one essential component".into())
        });
    };
    if comp.wrap.1 != 0 || comp.wrap.0.abs() != 1 {
        return Err(CurveError::NoEssentialComponent);
    }
    let mut gaps: Vec<i64> = tight
        .iter()
        .filter(|t| t.kind == Kind::Alpha)
        .map(|t| t.point.1.floor().to_integer().try_into().unwrap())
        .collect();
    if comp.wrap.0 < 0 {
        gaps.reverse();
    }
    if gaps.len() == 1 {
        return Ok(KnotCurveSummary::l_space(0));
    }
    let (b, t) = (*gaps.iter().min().unwrap(), *gaps.iter().max().unwrap());
    let distinct: BTreeSet<i64> = gaps.iter().copied().collect();
    if distinct.len() != gaps.len() || (t - b + 1) as usize != gaps.len() || (t - b) % 2 != 0 {
        return Err(CurveError::UnsupportedShape(format!("α heights {gaps:?}")));
    }
    let top = gaps.iter().position(|&g| g == t).unwrap();
    let after = gaps[(top + 1) % gaps.len()];
    let descending = after == t - 1;
    let mag = (t - b) / 2;
    Ok(KnotCurveSummary::l_space(if descending { mag } else { -mag }))
}

/// Minimal intersection counts of the pegboarded curve with the |p| lifts of
/// the slope-p/q line, one entry per lift in lift order.
pub fn filling_dimensions(s: &KnotCurveSummary, p: i64, q_: i64) -> Result<Vec<u64>, CurveError> {
    if q_ < 1 || p == 0 || p.gcd(&q_) != 1 {
        return Err(CurveError::InvalidSlope(format!("{p}/{q_}")));
    }
    let slope = q(p, q_);
    let c = q(1, 4 * q_);
    let half_s = q(s.essential_slope, 2);
    let reach = s.n.keys().map(|i| i.abs()).max().unwrap_or(0) + s.essential_slope.abs() + 2;
    let mut out = Vec::new();
    for t in 0..p.abs() {
        let line = |m: i64| &slope * qi(m) + &c + qi(t);
        let bound = ((qi(reach) + &c + qi(t)) * qi(q_) / qi(p.abs())).ceil().to_integer();
        let bound: i64 = bound.try_into().unwrap();
        let mut total = 0u64;
        for m in -bound - 2..=bound + 2 {
            let y = line(m);
            let h: i64 = (&y + q(1, 2)).floor().to_integer().try_into().unwrap();
            total += s.n.get(&h).copied().unwrap_or(0);
            let a = (-&half_s - &y).signum();
            let b = (&half_s - line(m + 1)).signum();
            if a != b {
                total += 1;
            }
        }
        out.push(total);
    }
    Ok(out)
}

/// How many times the union of the lifts of the slope-p/q line meets the
/// vertical segment {0} × [k, k+1].
pub fn vertical_segment_hits(p: i64, q_: i64, k: i64) -> Result<u64, CurveError> {
    if q_ < 1 || p == 0 || p.gcd(&q_) != 1 {
        return Err(CurveError::InvalidSlope(format!("{p}/{q_}")));
    }
    // the lifts meet x = 0 at c + (1/q)Z
    let c = q(1, 4 * q_);
    let mut hits = 0;
    for j in (k - 1) * q_..=(k + 2) * q_ {
        let y = &c + q(j, q_);
        if y > qi(k) && y < qi(k + 1) {
            hits += 1;
        }
    }
    Ok(hits)
}

impl PLCurve {
    pub fn parse(text: &str) -> Result<PLCurve, CurveError> {
        let mut c = PLCurve::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let err = |msg: &str| CurveError::Parse { line, msg: msg.to_string() };
            let mut words = content.split_whitespace();
            if words.next() != Some("component") {
                return Err(err("expected `component x,y … wrap a,b`"));
            }
            let mut vertices = Vec::new();
            let mut wrap = None;
            let pair = |w: &str| -> Option<(Q, Q)> {
                let (a, b) = w.split_once(',')?;
                Some((parse_q(a)?, parse_q(b)?))
            };
            while let Some(w) = words.next() {
                if w == "wrap" {
                    let p = words.next().and_then(pair).ok_or_else(|| err("bad wrap"))?;
                    if !is_integer(&p.0) || !is_integer(&p.1) {
                        return Err(err("wrap must be integral"));
                    }
                    wrap = Some((
                        p.0.to_integer().try_into().map_err(|_| err("wrap too large"))?,
                        p.1.to_integer().try_into().map_err(|_| err("wrap too large"))?,
                    ));
                } else {
                    vertices.push(pair(w).ok_or_else(|| err(&format!("bad vertex {w}")))?);
                }
            }
            if vertices.is_empty() {
                return Err(err("component without vertices"));
            }
            c.components.push(Component { vertices, wrap: wrap.unwrap_or((0, 0)) });
        }
        Ok(c)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for comp in &self.components {
            s.push_str("component");
            for (x, y) in &comp.vertices {
                write!(s, " {},{}", fmt_q(x), fmt_q(y)).unwrap();
            }
            writeln!(s, " wrap {},{}", comp.wrap.0, comp.wrap.1).unwrap();
        }
        s
    }

    /// SVG of the curves reduced into the unit square, with the marked point
    /// and optional filling lines. Layout only; nothing here is contractual.
    pub fn to_svg(&self, filling: Option<(i64, i64)>) -> String {
        let scale = 400i64;
        let to_px = |v: &Q| -> String {
            let r = v * qi(scale);
            let num: i64 = crate::rational::floor_i64(&(r * qi(10)));
            format!("{}{}.{}", if num < 0 { "-" } else { "" }, num.abs() / 10, num.abs() % 10)
        };
        let mut s = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-20 -20 {w} {w}\">\n\
             <g transform=\"translate(0,{scale}) scale(1,-1)\">\n\
             <rect x=\"0\" y=\"0\" width=\"{scale}\" height=\"{scale}\" fill=\"none\" stroke=\"#888\"/>\n",
            w = scale + 40
        );
        let eps = basepoint_eps();
        let z = qi(1) - &eps;
        writeln!(s, "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"black\"/>", to_px(&z), to_px(&z)).unwrap();
        let mut draw = |comp: &Component, colour: &str| {
            if let Ok(cr) = comp.crossings() {
                let n = comp.vertices.len();
                let m = cr.len();
                for i in 0..m {
                    let (c1, c2) = (&cr[i], &cr[(i + 1) % m]);
                    let end = if i + 1 == m { c2.seg + n } else { c2.seg };
                    let p2 = if i + 1 == m {
                        (&c2.point.0 + qi(comp.wrap.0), &c2.point.1 + qi(comp.wrap.1))
                    } else {
                        c2.point.clone()
                    };
                    let mut pts = vec![c1.point.clone()];
                    for j in c1.seg + 1..=end {
                        pts.push(comp.at(j));
                    }
                    pts.push(p2);
                    let probe = &pts[1];
                    let ox = ((&pts[0].0 + &probe.0) / qi(2)).floor();
                    let oy = ((&pts[0].1 + &probe.1) / qi(2)).floor();
                    let path: Vec<String> = pts
                        .iter()
                        .map(|p| format!("{},{}", to_px(&(&p.0 - &ox)), to_px(&(&p.1 - &oy))))
                        .collect();
                    writeln!(
                        s,
                        "<polyline points=\"{}\" fill=\"none\" stroke=\"{colour}\" stroke-width=\"2\"/>",
                        path.join(" ")
                    )
                    .unwrap();
                }
            }
        };
        for comp in &self.components {
            draw(comp, "#1f4e9c");
        }
        if let Some((p, q_)) = filling {
            if let Ok(line) = filling_line(p, q_) {
                draw(&line.components[0], "#c0392b");
            }
        }
        s.push_str("</g>\n</svg>\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::type_d::isomorphic;
    use AlgebraElement::*;

    #[test]
    fn horizontal_circle_is_a_rho12_loop() {
        let c = PLCurve {
            components: vec![Component { vertices: vec![(qi(0), q(1, 3))], wrap: (1, 0) }],
        };
        let d = curve_to_type_d(&c).unwrap();
        assert_eq!(d.generators.len(), 1);
        assert_eq!(d.edges.len(), 1);
        assert_eq!(d.edges[0].label, Rho12);
    }

    #[test]
    fn round_trip_small_graphs() {
        let loop12 = TypeDStructure::new(vec![("x", 0)], vec![("x", "x", Rho12)]);
        let c = type_d_to_curve(&loop12).unwrap();
        assert!(isomorphic(&curve_to_type_d(&c).unwrap(), &loop12));
        let loop23 = TypeDStructure::new(vec![("y", 1)], vec![("y", "y", Rho23)]);
        let c = type_d_to_curve(&loop23).unwrap();
        assert!(isomorphic(&curve_to_type_d(&c).unwrap(), &loop23));
    }

    #[test]
    fn unrealizable_graphs() {
        let lone = TypeDStructure::new(vec![("x", 0)], vec![]);
        assert!(matches!(type_d_to_curve(&lone), Err(CurveError::NotNormalPosition(_))));
        let red = TypeDStructure::new(vec![("x", 0), ("y", 0)], vec![("x", "y", Iota0)]);
        assert_eq!(type_d_to_curve(&red), Err(CurveError::NotReduced));
    }

    #[test]
    fn lattice_point_is_rejected() {
        let c = PLCurve {
            components: vec![Component { vertices: vec![(qi(0), qi(0))], wrap: (1, 1) }],
        };
        assert!(matches!(curve_to_type_d(&c), Err(CurveError::NotNormalPosition(_))));
    }

    #[test]
    fn null_homotopic_loop_vanishes() {
        // a small diamond around the point (1, 1/2) crossing α twice
        let c = PLCurve {
            components: vec![Component {
                vertices: vec![
                    (q(3, 4), q(1, 2)),
                    (qi(1), q(1, 4)),
                    (q(5, 4), q(1, 2)),
                    (qi(1), q(3, 4)),
                ],
                wrap: (0, 0),
            }],
        };
        let d = curve_to_type_d(&c).unwrap();
        assert!(d.generators.is_empty());
    }

    #[test]
    fn twist_matrices() {
        let m = Move::Twist { direction: (0, -1), count: -2 }.matrix().unwrap();
        assert_eq!(m, [[1, 0], [2, 1]]);
        let m = Move::Twist { direction: (1, 0), count: 1 }.matrix().unwrap();
        assert_eq!(m, [[1, 1], [0, 1]]);
        assert!(Move::Twist { direction: (2, 0), count: 1 }.matrix().is_err());
        assert_eq!("twist:0,-1:-2".parse::<Move>().unwrap(), Move::Twist { direction: (0, -1), count: -2 });
        assert!("spin".parse::<Move>().is_err());
    }

    #[test]
    fn identity_moves() {
        let c = filling_line(3, 2).unwrap();
        assert_eq!(apply_mapping_class(&c, &[]).unwrap(), c);
    }

    #[test]
    fn solid_torus_generator_counts() {
        for n in 1..6 {
            let d = solid_torus_cfd(n, 1).unwrap();
            let i0 = d.generators.iter().filter(|g| g.idem == 0).count();
            let i1 = d.generators.len() - i0;
            assert_eq!((i0, i1), (n as usize, 1));
            assert!(d.validate().is_valid());
        }
    }

    #[test]
    fn zero_slope_line_is_a_rho23_loop() {
        let d = solid_torus_cfd(0, 1).unwrap();
        assert_eq!(d.generators.len(), 1);
        assert_eq!(d.edges[0].label, Rho23);
        assert!(solid_torus_cfd(0, 2).is_err());
    }

    #[test]
    fn unknot_fillings_are_lens_spaces() {
        let u = KnotCurveSummary::l_space(0);
        for p in 1..8 {
            assert_eq!(filling_dimensions(&u, p, 1).unwrap(), vec![1; p as usize]);
        }
        assert!(filling_dimensions(&u, 2, 4).is_err());
        assert!(filling_dimensions(&u, 1, 0).is_err());
    }

    #[test]
    fn l_space_profiles() {
        let t = KnotCurveSummary::l_space(2);
        assert_eq!(t.genus, 2);
        assert_eq!(t.essential_slope, 3);
        assert_eq!(t.n, BTreeMap::from([(-1, 1), (0, 1), (1, 1)]));
        assert!(t.is_symmetric());
    }

    #[test]
    fn text_round_trip() {
        let c = filling_line(-2, 3).unwrap();
        assert_eq!(PLCurve::parse(&c.to_text()).unwrap(), c);
        assert!(PLCurve::parse("component 1/2,1/3 wrap 1/2,0").is_err());
    }
}
