//! Knot Floer complexes and the surgery formulas built on them.
//!
//! A `FilteredComplex` lists the generators of CFK∞ over F2[U, U⁻¹] in
//! filtration level i = 0, each with Alexander grading A and Maslov grading M.
//! An arrow x → y stands for x → U^m·y with m = (M(y) − M(x) + 1)/2, so the
//! power of U is forced by the gradings.

use crate::rational::{fmt_q, q, qi, Q};
use crate::torus_algebra::AlgebraElement;
use crate::type_d::TypeDStructure;
use num_integer::Integer;
use num_traits::Signed;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurgeryError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("complex is not a staircase: {0}")]
    NotStaircase(String),
    #[error("p and q are not coprime")]
    NotCoprime,
    #[error("surgery coefficient {p} is below 2g = {two_g}")]
    NotLargeSurgery { p: i64, two_g: i64 },
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotGenerator {
    pub name: String,
    pub alexander: i64,
    pub maslov: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FilteredComplex {
    pub generators: Vec<KnotGenerator>,
    pub differentials: Vec<(String, String)>,
}

/// Column-sparse F2 rank by elimination on bitsets.
pub(crate) fn f2_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    let width = rows.first().map_or(0, |r| r.len() * 64);
    for bit in 0..width {
        let (w, b) = (bit / 64, 1u64 << (bit % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & b != 0) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & b != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn bitset(n: usize, ones: impl IntoIterator<Item = usize>) -> Vec<u64> {
    let mut v = vec![0u64; n.div_ceil(64).max(1)];
    for i in ones {
        v[i / 64] ^= 1 << (i % 64);
    }
    v
}

/// Kernel of the linear map sending basis vector j to `images[j]`.
fn f2_kernel(images: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = images.len();
    // augment each image with the identity and eliminate on the image part
    let iw = images.first().map_or(1, |v| v.len());
    let mut rows: Vec<(Vec<u64>, Vec<u64>)> =
        images.iter().enumerate().map(|(j, v)| (v.clone(), bitset(n, [j]))).collect();
    let mut rank = 0;
    for bit in 0..iw * 64 {
        let (w, b) = (bit / 64, 1u64 << (bit % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].0[w] & b != 0) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.0[w] & b != 0 {
                for (x, y) in row.0.iter_mut().zip(&pivot.0) {
                    *x ^= y;
                }
                for (x, y) in row.1.iter_mut().zip(&pivot.1) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rows.into_iter().skip(rank).map(|r| r.1).collect()
}

impl FilteredComplex {
    pub fn new(gens: Vec<(&str, i64, i64)>, diffs: Vec<(&str, &str)>) -> Self {
        FilteredComplex {
            generators: gens
                .into_iter()
                .map(|(n, a, m)| KnotGenerator { name: n.to_string(), alexander: a, maslov: m })
                .collect(),
            differentials: diffs.into_iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        }
    }

    pub fn unknot() -> Self {
        FilteredComplex::new(vec![("u0", 0, 0)], vec![])
    }

    /// The staircase of T(2, k). With `mirror`, the dual complex.
    pub fn staircase(k: i64, mirror: bool) -> Result<Self, SurgeryError> {
        if k < 3 || k % 2 == 0 {
            return Err(SurgeryError::InvalidParameter(format!("T(2,{k}) needs odd k ≥ 3")));
        }
        let g = (k - 1) / 2;
        let sign = if mirror { -1 } else { 1 };
        let mut c = FilteredComplex::default();
        for j in 0..=2 * g {
            c.generators.push(KnotGenerator {
                name: format!("u{j}"),
                alexander: sign * (g - j),
                maslov: -sign * j,
            });
        }
        for j in (1..2 * g).step_by(2) {
            for t in [j - 1, j + 1] {
                let (a, b) = (format!("u{j}"), format!("u{t}"));
                c.differentials.push(if mirror { (b, a) } else { (a, b) });
            }
        }
        Ok(c)
    }

    /// Append a four-generator box centred at Alexander grading `centre`.
    pub fn with_box(mut self, centre: i64, maslov: i64, prefix: &str) -> Self {
        let gens = [
            ("a", centre, maslov),
            ("b", centre - 1, maslov - 1),
            ("c", centre + 1, maslov + 1),
            ("d", centre, maslov),
        ];
        for (n, a, m) in gens {
            self.generators.push(KnotGenerator { name: format!("{prefix}{n}"), alexander: a, maslov: m });
        }
        for (s, t) in [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")] {
            self.differentials.push((format!("{prefix}{s}"), format!("{prefix}{t}")));
        }
        self
    }

    fn index(&self) -> HashMap<&str, usize> {
        self.generators.iter().enumerate().map(|(i, g)| (g.name.as_str(), i)).collect()
    }

    fn arrows(&self) -> Result<Vec<(usize, usize, i64)>, SurgeryError> {
        let idx = self.index();
        self.differentials
            .iter()
            .map(|(s, t)| {
                let (&a, &b) = (
                    idx.get(s.as_str()).ok_or_else(|| SurgeryError::InvalidComplex(format!("unknown {s}")))?,
                    idx.get(t.as_str()).ok_or_else(|| SurgeryError::InvalidComplex(format!("unknown {t}")))?,
                );
                let num = self.generators[b].maslov - self.generators[a].maslov + 1;
                if num < 0 || num % 2 != 0 {
                    return Err(SurgeryError::InvalidComplex(format!(
                        "{s} → {t} does not drop the Maslov grading by one"
                    )));
                }
                Ok((a, b, num / 2))
            })
            .collect()
    }

    pub fn validate(&self) -> Result<(), SurgeryError> {
        let arrows = self.arrows()?;
        for &(a, b, m) in &arrows {
            let jdrop = m + self.generators[a].alexander - self.generators[b].alexander;
            if jdrop < 0 {
                return Err(SurgeryError::InvalidComplex(format!(
                    "{} → {} raises the j filtration",
                    self.generators[a].name, self.generators[b].name
                )));
            }
        }
        let mut count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &(a, b, _) in &arrows {
            for &(c, d, _) in &arrows {
                if c == b {
                    *count.entry((a, d)).or_default() += 1;
                }
            }
        }
        if count.values().any(|n| n % 2 == 1) {
            return Err(SurgeryError::InvalidComplex("d² ≠ 0".into()));
        }
        let mut al: Vec<i64> = self.generators.iter().map(|g| g.alexander).collect();
        let mut neg: Vec<i64> = al.iter().map(|a| -a).collect();
        al.sort();
        neg.sort();
        if al != neg {
            return Err(SurgeryError::InvalidComplex("Alexander gradings are not symmetric".into()));
        }
        Ok(())
    }

    /// Top Alexander grading carrying knot Floer homology, via the associated
    /// graded complex.
    pub fn genus(&self) -> i64 {
        let arrows = self.arrows().unwrap_or_default();
        let n = self.generators.len();
        let top = self.generators.iter().map(|g| g.alexander).max().unwrap_or(0);
        for a in (1..=top).rev() {
            let at: Vec<usize> = (0..n).filter(|&i| self.generators[i].alexander == a).collect();
            // arrows preserving both filtrations
            let images: Vec<Vec<u64>> = at
                .iter()
                .map(|&i| {
                    bitset(
                        n,
                        arrows
                            .iter()
                            .filter(|&&(s, t, m)| s == i && m == 0 && self.generators[t].alexander == a)
                            .map(|x| x.1),
                    )
                })
                .collect();
            let r = f2_rank(images);
            if at.len() > 2 * r {
                return a;
            }
        }
        0
    }

    /// dim H∗(Â_s), Â_s = C{max(i, j − s) = 0}.
    pub fn a_hat_dimension(&self, s: i64) -> usize {
        let arrows = self.arrows().unwrap_or_default();
        let n = self.generators.len();
        // each generator appears once in Â_s, as U^k·x with k = max(0, A − s)
        let k: Vec<i64> = self.generators.iter().map(|g| (g.alexander - s).max(0)).collect();
        let images: Vec<Vec<u64>> = (0..n)
            .map(|i| bitset(n, arrows.iter().filter(|&&(a, b, m)| a == i && k[a] + m == k[b]).map(|x| x.1)))
            .collect();
        n - 2 * f2_rank(images)
    }

    pub fn a_hat_dimensions(&self) -> BTreeMap<i64, usize> {
        let g = self.genus();
        (-g - 1..=g + 1).map(|s| (s, self.a_hat_dimension(s))).collect()
    }

    /// V_s straight from the definition: −2V_s is the top grading of a cycle
    /// in A⁻_s = C{max(i, j − s) ≤ 0} that survives in H∗(C∞) ≅ F[U, U⁻¹].
    pub fn v_brute_force(&self, s: i64) -> i64 {
        let arrows = self.arrows().unwrap_or_default();
        let n = self.generators.len();
        if n == 0 {
            return 0;
        }
        let top = self.generators.iter().map(|g| g.maslov).max().unwrap();
        let bottom = self.generators.iter().map(|g| g.maslov).min().unwrap();
        let floor = bottom - 2 * (self.generators.iter().map(|g| g.alexander.abs()).max().unwrap() + s.abs() + 2);
        let mut g = top + (top.rem_euclid(2));
        while g >= floor {
            // C∞ in grading g: U^k·x with M(x) − 2k = g
            let slot = |x: usize, grading: i64| -> Option<i64> {
                let d = self.generators[x].maslov - grading;
                (d % 2 == 0).then_some(d / 2)
            };
            let lower: Vec<usize> = (0..n).filter(|&x| slot(x, g - 1).is_some()).collect();
            let lower_pos: HashMap<usize, usize> = lower.iter().enumerate().map(|(i, &x)| (x, i)).collect();
            let image = |x: usize, kx: i64| -> Vec<u64> {
                bitset(
                    lower.len(),
                    arrows.iter().filter(|a| a.0 == x).filter_map(|&(_, y, m)| {
                        let ky = slot(y, g - 1)?;
                        (ky == kx + m).then(|| lower_pos[&y])
                    }),
                )
            };
            let here: Vec<usize> = (0..n).filter(|&x| slot(x, g).is_some()).collect();
            let here_pos: HashMap<usize, usize> = here.iter().enumerate().map(|(i, &x)| (x, i)).collect();
            let upper: Vec<usize> = (0..n).filter(|&x| slot(x, g + 1).is_some()).collect();
            let boundaries: Vec<Vec<u64>> = upper
                .iter()
                .map(|&x| {
                    let kx = slot(x, g + 1).unwrap();
                    bitset(
                        here.len(),
                        arrows.iter().filter(|a| a.0 == x).filter_map(|&(_, y, m)| {
                            let ky = slot(y, g)?;
                            (ky == kx + m).then(|| here_pos[&y])
                        }),
                    )
                })
                .collect();
            let in_a_minus: Vec<usize> = here
                .iter()
                .copied()
                .filter(|&x| slot(x, g).unwrap() >= (self.generators[x].alexander - s).max(0))
                .collect();
            let images: Vec<Vec<u64>> = in_a_minus.iter().map(|&x| image(x, slot(x, g).unwrap())).collect();
            let cycles: Vec<Vec<u64>> = f2_kernel(&images)
                .into_iter()
                .map(|z| {
                    bitset(
                        here.len(),
                        (0..in_a_minus.len()).filter(|&i| z[i / 64] >> (i % 64) & 1 == 1).map(|i| here_pos[&in_a_minus[i]]),
                    )
                })
                .collect();
            let rb = f2_rank(boundaries.clone());
            let mut all = boundaries;
            all.extend(cycles);
            if !here.is_empty() && f2_rank(all) > rb {
                return -g / 2;
            }
            g -= 2;
        }
        // no tower: not a complex for S³
        i64::MIN
    }

    /// Generators in staircase order u0 … u_{2g} together with the sign of the
    /// staircase (+1 when the odd corners are sources).
    pub fn staircase_order(&self) -> Result<(Vec<usize>, i64), SurgeryError> {
        let arrows = self.arrows()?;
        let n = self.generators.len();
        if n == 1 && arrows.is_empty() {
            return Ok((vec![0], 1));
        }
        if n % 2 == 0 || arrows.len() != n - 1 {
            return Err(SurgeryError::NotStaircase("wrong number of generators or arrows".into()));
        }
        let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b, _) in &arrows {
            nbrs[a].push(b);
            nbrs[b].push(a);
        }
        let top = (0..n)
            .filter(|&i| nbrs[i].len() == 1)
            .max_by_key(|&i| self.generators[i].alexander)
            .ok_or_else(|| SurgeryError::NotStaircase("no end".into()))?;
        let mut order = vec![top];
        while order.len() < n {
            let cur = *order.last().unwrap();
            let prev = order.len().checked_sub(2).map(|i| order[i]);
            let next: Vec<usize> = nbrs[cur].iter().copied().filter(|&x| Some(x) != prev).collect();
            if next.len() != 1 || order.contains(&next[0]) {
                return Err(SurgeryError::NotStaircase("arrows do not form a path".into()));
            }
            order.push(next[0]);
        }
        let dir = |a: usize, b: usize| arrows.iter().find(|x| x.0 == a && x.1 == b).map(|x| x.2);
        let sign = if dir(order[1], order[0]).is_some() { 1 } else { -1 };
        for (j, w) in order.windows(2).enumerate() {
            let (x, y) = (w[0], w[1]);
            // step j joins u_j and u_{j+1}; steps alternate horizontal and vertical
            let (src, tgt) = if (j % 2 == 0) == (sign > 0) { (y, x) } else { (x, y) };
            let m = dir(src, tgt).ok_or_else(|| SurgeryError::NotStaircase("arrow directions alternate wrongly".into()))?;
            let (a_s, a_t) = (self.generators[src].alexander, self.generators[tgt].alexander);
            let horizontal = (j % 2 == 0) == (sign > 0);
            let ok = if horizontal { m > 0 && a_t == a_s + m } else { m == 0 && a_s > a_t };
            if !ok {
                return Err(SurgeryError::NotStaircase(format!("step {j} has the wrong shape")));
            }
        }
        Ok((order, sign))
    }

    pub fn parse(text: &str) -> Result<Self, SurgeryError> {
        let mut c = FilteredComplex::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let err = |msg: &str| SurgeryError::Parse { line, msg: msg.to_string() };
            let w: Vec<&str> = content.split_whitespace().collect();
            match w.as_slice() {
                ["generator", name, a, m] => c.generators.push(KnotGenerator {
                    name: name.to_string(),
                    alexander: a.parse().map_err(|_| err("bad Alexander grading"))?,
                    maslov: m.parse().map_err(|_| err("bad Maslov grading"))?,
                }),
                ["arrow", s, t] => c.differentials.push((s.to_string(), t.to_string())),
                _ => return Err(err("expected `generator NAME A M` or `arrow SRC TGT`")),
            }
        }
        c.validate()?;
        Ok(c)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for g in &self.generators {
            writeln!(s, "generator {} {} {}", g.name, g.alexander, g.maslov).unwrap();
        }
        for (a, b) in &self.differentials {
            writeln!(s, "arrow {a} {b}").unwrap();
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryData {
    pub v: BTreeMap<i64, i64>,
    pub h: BTreeMap<i64, i64>,
    pub genus: i64,
}

impl SurgeryData {
    pub fn v_at(&self, s: i64) -> i64 {
        if s >= self.genus {
            0
        } else if let Some(v) = self.v.get(&s) {
            *v
        } else {
            // V_{−t} = V_t + t
            self.v_at(-s) - s
        }
    }

    pub fn h_at(&self, s: i64) -> i64 {
        self.v_at(-s)
    }

    pub fn unknot() -> Self {
        SurgeryData { v: BTreeMap::from([(0, 0)]), h: BTreeMap::from([(0, 0)]), genus: 0 }
    }
}

/// V_s and H_s of a staircase from the outer corners: for a positive staircase
/// V_s = min over even u of max(0, A(u) − s) − M(u)/2; for the dual staircase
/// V_s = max(0, −s).
pub fn v_h(c: &FilteredComplex) -> Result<SurgeryData, SurgeryError> {
    let (order, sign) = c.staircase_order()?;
    let g = c.genus();
    let v_of = |s: i64| -> i64 {
        if sign < 0 {
            return (-s).max(0);
        }
        order
            .iter()
            .step_by(2)
            .map(|&i| {
                let u = &c.generators[i];
                (u.alexander - s).max(0) - u.maslov / 2
            })
            .min()
            .unwrap()
    };
    let v: BTreeMap<i64, i64> = (-g..=g).map(|s| (s, v_of(s))).collect();
    let h = (-g..=g).map(|s| (s, v_of(-s))).collect();
    Ok(SurgeryData { v, h, genus: g })
}

/// Correction terms of L(p, q), i = 0 … p−1, by the standard recursion
/// d(L(p,q), i) = ((2i+1−p−q)² − pq)/(4pq) − d(L(q, r), j), r = p mod q, j = i mod q.
pub fn d_lens(p: i64, q_: i64) -> Result<Vec<Q>, SurgeryError> {
    d_lens_with_depth(p, q_).map(|x| x.0)
}

pub fn d_lens_with_depth(p: i64, q_: i64) -> Result<(Vec<Q>, usize), SurgeryError> {
    if p < 1 || q_ < 1 || (q_ >= p && (p, q_) != (1, 1)) {
        return Err(SurgeryError::InvalidParameter(format!("L({p},{q_})")));
    }
    if p.gcd(&q_) != 1 {
        return Err(SurgeryError::NotCoprime);
    }
    let mut memo = HashMap::new();
    let mut depth = 0;
    let out = (0..p).map(|i| d_rec(p, q_, i, &mut memo, 1, &mut depth)).collect();
    Ok((out, depth))
}

fn d_rec(p: i64, q_: i64, i: i64, memo: &mut HashMap<(i64, i64, i64), Q>, level: usize, depth: &mut usize) -> Q {
    *depth = (*depth).max(level);
    if p == 1 {
        return qi(0);
    }
    if let Some(v) = memo.get(&(p, q_, i)) {
        return v.clone();
    }
    let r = p.rem_euclid(q_);
    let j = i.rem_euclid(q_);
    let t = 2 * i + 1 - p - q_;
    let head = q(t * t - p * q_, 4 * p * q_);
    let tail = if q_ == 1 { qi(0) } else { d_rec(q_, r, j, memo, level + 1, depth) };
    let v = head - tail;
    memo.insert((p, q_, i), v.clone());
    v
}

/// d(S³_p(K), [s]) = d(L(p,1), [s]) − 2·max(V_s, H_{s−p}) for s = 0 … p−1.
pub fn d_surgery(p: i64, data: &SurgeryData) -> Result<Vec<(i64, Q)>, SurgeryError> {
    let lens = d_lens(p, 1)?;
    Ok((0..p)
        .map(|s| {
            let corr = data.v_at(s).max(data.h_at(s - p));
            (s, &lens[s as usize] - qi(2 * corr))
        })
        .collect())
}

/// True iff no two of the values differ by exactly `gap`.
pub fn grading_gap_obstruction(values: &[Q], gap: &Q) -> bool {
    for (i, a) in values.iter().enumerate() {
        for b in &values[i + 1..] {
            if (a - b).abs() == gap.abs() {
                return false;
            }
        }
    }
    true
}

/// Large surgery: HF(S³_p(K), [s]) ≅ H∗(Â_s) for the representative |s| ≤ p/2.
pub fn large_surgery_profile(c: &FilteredComplex, p: i64) -> Result<BTreeMap<i64, usize>, SurgeryError> {
    let g = c.genus();
    if p < 2 * g || p < 1 {
        return Err(SurgeryError::NotLargeSurgery { p, two_g: 2 * g });
    }
    Ok((0..p)
        .map(|s| {
            let rep = if 2 * s <= p { s } else { s - p };
            (s, c.a_hat_dimension(rep))
        })
        .collect())
}

/// CFD of the complement of a knot with staircase CFK∞, framing n.
pub fn knot_complement_cfd(c: &FilteredComplex, framing: i64) -> Result<TypeDStructure, SurgeryError> {
    use AlgebraElement::*;
    let (order, sign) = c.staircase_order()?;
    if sign < 0 && order.len() > 1 {
        return Err(SurgeryError::NotStaircase("only positive staircases are supported".into()));
    }
    let arrows = c.arrows()?;
    let name = |i: usize| c.generators[i].name.clone();
    let mut gens: Vec<(String, u8)> = order.iter().map(|&i| (name(i), 0)).collect();
    let mut edges: Vec<(String, String, AlgebraElement)> = Vec::new();
    let chain = |prefix: String, len: i64, gens: &mut Vec<(String, u8)>| -> Vec<String> {
        let names: Vec<String> = (1..=len).map(|l| format!("{prefix}{l}")).collect();
        gens.extend(names.iter().map(|n| (n.clone(), 1)));
        names
    };
    for (j, w) in order.windows(2).enumerate() {
        let (src, tgt) = (w[1 - j % 2], w[j % 2]);
        let m = arrows.iter().find(|a| a.0 == src && a.1 == tgt).unwrap().2;
        if j % 2 == 0 {
            // horizontal of length m: S →ρ3 λ1 →ρ23 … λm →ρ2 T
            let l = chain(format!("h{j}_"), m, &mut gens);
            edges.push((name(src), l[0].clone(), Rho3));
            for k in 1..l.len() {
                edges.push((l[k - 1].clone(), l[k].clone(), Rho23));
            }
            edges.push((l.last().unwrap().clone(), name(tgt), Rho2));
        } else {
            // vertical of length ℓ: S →ρ1 κ1 ←ρ23 κ2 … κℓ ←ρ123 T
            let len = c.generators[src].alexander - c.generators[tgt].alexander;
            let k = chain(format!("v{j}_"), len, &mut gens);
            edges.push((name(src), k[0].clone(), Rho1));
            for i in 1..k.len() {
                edges.push((k[i].clone(), k[i - 1].clone(), Rho23));
            }
            edges.push((name(tgt), k.last().unwrap().clone(), Rho123));
        }
    }
    let tau = c.generators[order[0]].alexander;
    let (xi, eta) = (name(order[0]), name(*order.last().unwrap()));
    let m = 2 * tau - framing;
    if m == 0 {
        edges.push((xi, eta, Rho12));
    } else if m > 0 {
        let g = chain("g".into(), m, &mut gens);
        edges.push((xi, g[0].clone(), Rho1));
        for k in 1..g.len() {
            edges.push((g[k].clone(), g[k - 1].clone(), Rho23));
        }
        edges.push((eta, g.last().unwrap().clone(), Rho3));
    } else {
        let g = chain("g".into(), -m, &mut gens);
        edges.push((xi, g[0].clone(), Rho123));
        for k in 1..g.len() {
            edges.push((g[k - 1].clone(), g[k].clone(), Rho23));
        }
        edges.push((g.last().unwrap().clone(), eta, Rho2));
    }
    Ok(TypeDStructure::new(
        gens.iter().map(|(n, i)| (n.as_str(), *i)).collect(),
        edges.iter().map(|(a, b, l)| (a.as_str(), b.as_str(), *l)).collect(),
    ))
}

/// Render a residue table like `[0] -1/4  [1] -9/8 …`.
pub fn format_residue_table(values: &[(i64, Q)]) -> String {
    values.iter().map(|(s, v)| format!("[{s}] {}", fmt_q(v))).collect::<Vec<_>>().join("  ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn staircase_shapes() {
        let t3 = FilteredComplex::staircase(3, false).unwrap();
        let mut a: Vec<i64> = t3.generators.iter().map(|g| g.alexander).collect();
        a.sort();
        assert_eq!(a, vec![-1, 0, 1]);
        t3.validate().unwrap();
        assert_eq!(t3.genus(), 1);
        let t5 = FilteredComplex::staircase(5, false).unwrap();
        assert_eq!(t5.genus(), 2);
        let m = FilteredComplex::staircase(3, true).unwrap();
        m.validate().unwrap();
        let mut am: Vec<i64> = m.generators.iter().map(|g| g.alexander).collect();
        am.sort();
        assert_eq!(am, a);
        assert!(FilteredComplex::staircase(4, false).is_err());
        assert!(FilteredComplex::staircase(1, false).is_err());
    }

    #[test]
    fn hat_homology_of_staircases() {
        for k in [3, 5, 7] {
            let c = FilteredComplex::staircase(k, false).unwrap();
            assert!(c.a_hat_dimensions().values().all(|&d| d == 1));
        }
        // the mirror trefoil is not an L-space knot
        let m = FilteredComplex::staircase(3, true).unwrap();
        assert_eq!(m.a_hat_dimension(0), 3);
        assert_eq!(m.a_hat_dimension(1), 1);
    }

    #[test]
    fn box_summand() {
        let c = FilteredComplex::staircase(5, false).unwrap().with_box(0, 1, "b");
        c.validate().unwrap();
        assert_eq!(c.a_hat_dimension(0), 3);
        assert_eq!(c.a_hat_dimension(2), 1);
        assert_eq!(c.a_hat_dimension(-2), 1);
    }

    #[test]
    fn lens_base_cases() {
        assert_eq!(d_lens(1, 1).unwrap(), vec![qi(0)]);
        assert_eq!(d_lens(4, 2), Err(SurgeryError::NotCoprime));
        assert!(d_lens(3, 5).is_err());
    }

    #[test]
    fn gap_scan() {
        assert!(grading_gap_obstruction(&[], &q(3, 2)));
        assert!(!grading_gap_obstruction(&[q(-1, 8), q(-9, 8)], &qi(1)));
    }

    #[test]
    fn parse_round_trip() {
        let c = FilteredComplex::staircase(5, false).unwrap();
        assert_eq!(FilteredComplex::parse(&c.to_text()).unwrap(), c);
        assert!(matches!(FilteredComplex::parse("arrow"), Err(SurgeryError::Parse { line: 1, .. })));
        assert!(FilteredComplex::parse("generator a 1 0\n").is_err());
    }

    #[test]
    fn not_large_enough() {
        let c = FilteredComplex::staircase(5, false).unwrap();
        assert!(matches!(large_surgery_profile(&c, 3), Err(SurgeryError::NotLargeSurgery { .. })));
    }
}
