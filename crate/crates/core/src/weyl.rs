//! Weyl and affine Weyl group actions, shifted straightening, alcove enumeration.
//!
//! Every group here is generated by reflections in the walls of one chamber.
//! Straightening works on scaled coordinates `x = s·(λ + shift)` with `s` the
//! shift denominator, so that all arithmetic stays integral. A violated wall is
//! reflected until none remain; each step must strictly decrease the integer
//! potential `|h∨·x − s·ρ|²`, whose minimum lies inside the chamber.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::root_data::RootDatum;
use crate::weight::Weight;

/// Word in the generators, read left to right; the rightmost letter acts first.
/// Letter 0 is the affine generator, letters 1..=n are simple reflections.
pub type WeylWord = Vec<u8>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    FiniteW,
    FiniteParabolic(Vec<usize>),
    AffineLevel(i64),
    VertexGroup { vertex: usize, level: i64 },
}

/// The shift `numer / denom`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Shift {
    pub numer: Weight,
    pub denom: i64,
}

impl Shift {
    pub fn integral(w: Weight) -> Self {
        Shift { numer: w, denom: 1 }
    }

    fn reduced(numer: Weight, denom: i64) -> Self {
        let g = numer.coords().iter().fold(denom, |acc, &c| acc.gcd(&c));
        Shift { numer: numer.div_exact(g).unwrap(), denom: denom / g }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReflectionGroupSpec {
    pub kind: GroupKind,
    pub shift: Shift,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Generator {
    Node(usize),
    Affine(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedWeight {
    pub weight: Weight,
    pub sign: i8,
    /// Parity of the straightening word length.
    pub parity: bool,
}

impl ReflectionGroupSpec {
    pub fn new(datum: &RootDatum, kind: GroupKind, shift: Shift) -> Result<Self> {
        let n = datum.rank();
        match &kind {
            GroupKind::FiniteParabolic(s) => {
                if let Some(&bad) = s.iter().find(|&&j| j == 0 || j > n) {
                    return Err(Error::InvalidNode { node: bad, rank: n });
                }
            }
            GroupKind::AffineLevel(m) if *m < 1 => {
                return Err(Error::Unsupported(format!("affine level {m} must be at least 1")))
            }
            GroupKind::VertexGroup { vertex, level } => {
                if *vertex == 0 || *vertex > n {
                    return Err(Error::InvalidNode { node: *vertex, rank: n });
                }
                if *level < 1 {
                    return Err(Error::Unsupported(format!("vertex group level {level} must be at least 1")));
                }
            }
            _ => {}
        }
        if shift.denom < 1 || shift.numer.rank() != n {
            return Err(Error::Unsupported("shift must have positive denominator and matching rank".into()));
        }
        Ok(ReflectionGroupSpec { kind, shift })
    }

    /// W acting by λ ↦ w(λ+ρ) − ρ.
    pub fn finite_dot(datum: &RootDatum) -> Self {
        ReflectionGroupSpec { kind: GroupKind::FiniteW, shift: Shift::integral(datum.rho()) }
    }

    /// W acting linearly.
    pub fn finite_linear(datum: &RootDatum) -> Self {
        ReflectionGroupSpec { kind: GroupKind::FiniteW, shift: Shift::integral(datum.zero()) }
    }

    /// W^{k+h∨}_{−ρ}, whose chamber interior is the level k alcove.
    pub fn kac_walton(datum: &RootDatum, k: i64) -> Self {
        ReflectionGroupSpec {
            kind: GroupKind::AffineLevel(k + datum.dual_coxeter()),
            shift: Shift::integral(datum.rho()),
        }
    }

    /// W^v_{−ρ_v}: walls j ≠ v and the level k affine wall, shifted by ρ_v.
    pub fn vertex(datum: &RootDatum, v: usize, k: i64) -> Result<Self> {
        ReflectionGroupSpec::new(datum, GroupKind::VertexGroup { vertex: v, level: k }, rho_vertex(datum, v)?)
    }

    fn generators(&self, n: usize) -> Vec<Generator> {
        match &self.kind {
            GroupKind::FiniteW => (1..=n).map(Generator::Node).collect(),
            GroupKind::FiniteParabolic(s) => {
                let mut s = s.clone();
                s.sort_unstable();
                s.dedup();
                s.into_iter().map(Generator::Node).collect()
            }
            GroupKind::AffineLevel(m) => {
                (1..=n).map(Generator::Node).chain(std::iter::once(Generator::Affine(*m))).collect()
            }
            GroupKind::VertexGroup { vertex, level } => (1..=n)
                .filter(|j| j != vertex)
                .map(Generator::Node)
                .chain(std::iter::once(Generator::Affine(*level)))
                .collect(),
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self.kind, GroupKind::AffineLevel(_))
    }
}

/// ρ_v: pairing 1 with α_j∨ for j ≠ v and level −1.
pub fn rho_vertex(datum: &RootDatum, v: usize) -> Result<Shift> {
    let n = datum.rank();
    if v == 0 || v > n {
        return Err(Error::InvalidNode { node: v, rank: n });
    }
    let a = datum.comarks()[v - 1];
    let mut numer = Weight::zero(n);
    for j in 0..n {
        numer[j] = if j + 1 == v { a - datum.dual_coxeter() } else { a };
    }
    Ok(Shift::reduced(numer, a))
}

impl RootDatum {
    /// w_i(λ) = λ − ⟨λ, α_i∨⟩ α_i.
    pub fn reflect(&self, i: usize, lambda: &Weight) -> Weight {
        let c = lambda[i - 1];
        if c == 0 {
            return *lambda;
        }
        *lambda - c * self.simple_root(i)
    }

    /// w_{m·α0}(λ) = λ − (level(λ) − m)·θ.
    pub fn affine_reflect(&self, m: i64, lambda: &Weight) -> Weight {
        let e = self.level(lambda) - m;
        *lambda - e * self.highest_root()
    }

    fn apply_generator(&self, g: Generator, x: &Weight, scale: i64) -> Weight {
        match g {
            Generator::Node(i) => self.reflect(i, x),
            Generator::Affine(m) => self.affine_reflect(scale * m, x),
        }
    }

    /// Positive when the wall is violated, zero on the wall.
    fn wall_excess(&self, g: Generator, x: &Weight, scale: i64) -> i64 {
        match g {
            Generator::Node(i) => -x[i - 1],
            Generator::Affine(m) => self.level(x) - scale * m,
        }
    }

    fn potential(&self, x: &Weight, scale: i64) -> i128 {
        let y = self.dual_coxeter() * *x - scale * self.rho();
        self.inner_scaled(&y, &y)
    }

    /// Straightens λ into the closed fundamental domain of the shifted action of `g`.
    pub fn straighten(&self, lambda: &Weight, g: &ReflectionGroupSpec) -> Result<SignedWeight> {
        self.straighten_by(lambda, g, |_| 0)
    }

    /// As [`RootDatum::straighten`], reflecting at each step in the violated wall
    /// selected by `choose` from the list of violated walls.
    pub fn straighten_by(
        &self,
        lambda: &Weight,
        g: &ReflectionGroupSpec,
        mut choose: impl FnMut(usize) -> usize,
    ) -> Result<SignedWeight> {
        let s = g.shift.denom;
        let gens = g.generators(self.rank());
        let mut x = s * *lambda + g.shift.numer;
        let mut steps = 0usize;
        let mut pot = self.potential(&x, s);
        let mut violated = Vec::with_capacity(gens.len());
        loop {
            violated.clear();
            violated.extend(gens.iter().copied().filter(|&gen| self.wall_excess(gen, &x, s) > 0));
            if violated.is_empty() {
                break;
            }
            let pick = violated[choose(violated.len()) % violated.len()];
            x = self.apply_generator(pick, &x, s);
            steps += 1;
            let next = self.potential(&x, s);
            if next >= pot {
                return Err(Error::NonTermination(*lambda));
            }
            pot = next;
        }
        let singular = gens.iter().any(|&gen| self.wall_excess(gen, &x, s) == 0);
        let weight = (x - g.shift.numer).div_exact(s).expect("shifted action preserves the lattice");
        let parity = steps % 2 == 1;
        let sign = if singular {
            0
        } else if parity {
            -1
        } else {
            1
        };
        Ok(SignedWeight { weight, sign, parity })
    }

    /// Dominant W-conjugate and the parity of the conjugating word.
    pub fn dominant_conjugate(&self, lambda: &Weight) -> (Weight, bool) {
        let mut x = *lambda;
        let mut parity = false;
        while let Some(i) = (0..self.rank()).find(|&i| x[i] < 0) {
            x = self.reflect(i + 1, &x);
            parity = !parity;
        }
        (x, parity)
    }

    /// Applies `word` (rightmost letter first) through the shifted action of `g`.
    pub fn apply_word(&self, word: &[u8], lambda: &Weight, g: &ReflectionGroupSpec) -> Weight {
        let s = g.shift.denom;
        let affine = match g.kind {
            GroupKind::AffineLevel(m) => Some(m),
            GroupKind::VertexGroup { level, .. } => Some(level),
            _ => None,
        };
        let mut x = s * *lambda + g.shift.numer;
        for &letter in word.iter().rev() {
            let gen = if letter == 0 {
                Generator::Affine(affine.expect("affine letter in a finite group word"))
            } else {
                Generator::Node(letter as usize)
            };
            x = self.apply_generator(gen, &x, s);
        }
        (x - g.shift.numer).div_exact(s).expect("shifted action preserves the lattice")
    }

    /// Applies a word of simple reflections linearly.
    pub fn act(&self, word: &[u8], lambda: &Weight) -> Weight {
        word.iter().rev().fold(*lambda, |x, &i| self.reflect(i as usize, &x))
    }

    /// Every element of the finite group `g` as a word, with its length parity,
    /// in breadth-first order. Fails when the order exceeds `cap`.
    pub fn group_elements(&self, g: &ReflectionGroupSpec, cap: usize) -> Result<Vec<(WeylWord, bool)>> {
        if !g.is_finite() {
            return Err(Error::Unsupported("affine-level groups are infinite; supply a support bound".into()));
        }
        if matches!(g.kind, GroupKind::FiniteW) && self.weyl_order() > cap as u128 {
            return Err(Error::Capacity { order: self.weyl_order(), bound: cap as u128 });
        }
        // Orbit of the regular point ρ/h∨ in coordinates scaled by h∨.
        let h = self.dual_coxeter();
        let gens = g.generators(self.rank());
        let start = self.rho();
        let mut seen: HashMap<Weight, usize> = HashMap::new();
        seen.insert(start, 0);
        let mut out: Vec<(WeylWord, bool)> = vec![(Vec::new(), false)];
        let mut points = vec![start];
        let mut head = 0;
        while head < points.len() {
            let p = points[head];
            let (word, parity) = out[head].clone();
            head += 1;
            for &gen in &gens {
                let q = self.apply_generator(gen, &p, h);
                if seen.contains_key(&q) {
                    continue;
                }
                if out.len() >= cap {
                    return Err(Error::Capacity { order: out.len() as u128 + 1, bound: cap as u128 });
                }
                seen.insert(q, out.len());
                let letter = match gen {
                    Generator::Node(i) => i as u8,
                    Generator::Affine(_) => 0,
                };
                let mut w = Vec::with_capacity(word.len() + 1);
                w.push(letter);
                w.extend_from_slice(&word);
                out.push((w, !parity));
                points.push(q);
            }
        }
        Ok(out)
    }

    /// Dominant weights of level at most k, ordered by level then coordinates.
    pub fn enumerate_alcove(&self, k: i64) -> Vec<Weight> {
        let n = self.rank();
        let mut out = Vec::new();
        let mut cur = Weight::zero(n);
        fn rec(d: &RootDatum, i: usize, budget: i64, cur: &mut Weight, out: &mut Vec<Weight>) {
            if i == d.rank() {
                out.push(*cur);
                return;
            }
            let a = d.comarks()[i];
            for c in 0..=budget / a {
                cur[i] = c;
                rec(d, i + 1, budget - c * a, cur, out);
            }
            cur[i] = 0;
        }
        if k >= 0 {
            rec(self, 0, k, &mut cur, &mut out);
        }
        out.sort_by(|a, b| self.canonical_cmp(a, b));
        out
    }

    /// Canonical order: level, then coordinates lexicographically.
    pub fn canonical_cmp(&self, a: &Weight, b: &Weight) -> Ordering {
        self.level(a).cmp(&self.level(b)).then_with(|| a.coords().cmp(b.coords()))
    }

    /// True when λ lies in the closed chamber C_v = {λ_j ≥ 0 (j ≠ v), level ≤ k}.
    pub fn in_vertex_chamber(&self, lambda: &Weight, v: usize, k: i64) -> bool {
        (0..self.rank()).all(|j| j + 1 == v || lambda[j] >= 0) && self.level(lambda) <= k
    }

    /// True when λ lies in the closed chamber C_e = {λ_j ≥ 0 (j ≠ v)}.
    pub fn in_edge_chamber(&self, lambda: &Weight, v: usize) -> bool {
        (0..self.rank()).all(|j| j + 1 == v || lambda[j] >= 0)
    }
}
