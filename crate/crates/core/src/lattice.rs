//! Integer lattices in Hermite normal form, and the truncated comparison of
//! two generating sets of the fusion ideal.

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::character::{Chamber, CharacterRing, VirtualCharacter};
use crate::error::{Error, Result};
use crate::ideal::{classical_ideal_truncation, GeneratorSet};
use crate::root_data::RootDatum;
use crate::weight::Weight;

/// Row-echelon lattice basis with at most one row per pivot column and
/// positive pivots. [`Lattice::basis`] returns the reduced Hermite form.
#[derive(Clone, Debug)]
pub struct Lattice {
    dim: usize,
    rows: Vec<Option<Vec<BigInt>>>,
}

impl Lattice {
    pub fn new(dim: usize) -> Self {
        Lattice { dim, rows: vec![None; dim] }
    }

    pub fn from_rows(dim: usize, rows: impl IntoIterator<Item = Vec<BigInt>>) -> Self {
        let mut l = Lattice::new(dim);
        for r in rows {
            l.insert(r);
        }
        l
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.iter().filter(|r| r.is_some()).count()
    }

    /// Reduces `v` against the basis; the remainder is zero iff `v` is a member.
    fn reduce(&self, v: &mut [BigInt]) -> Option<usize> {
        for c in 0..self.dim {
            if v[c].is_zero() {
                continue;
            }
            match &self.rows[c] {
                Some(row) => {
                    let q = v[c].div_floor(&row[c]);
                    if !q.is_zero() {
                        axpy(v, &-q, row, c);
                    }
                    if !v[c].is_zero() {
                        return Some(c);
                    }
                }
                None => return Some(c),
            }
        }
        None
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        self.reduce(&mut v).is_none()
    }

    /// Adds `v` to the generating set; returns true when the lattice grew.
    pub fn insert(&mut self, v: Vec<BigInt>) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = v;
        let mut grew = false;
        loop {
            let Some(c) = self.reduce(&mut v) else { return grew };
            grew = true;
            match self.rows[c].take() {
                None => {
                    if v[c].is_negative() {
                        v.iter_mut().for_each(|x| *x = -&*x);
                    }
                    self.rows[c] = Some(v);
                    self.normalize_above(c);
                    return true;
                }
                Some(row) => {
                    // Replace (row, v) by (gcd row, eliminated v) via the extended gcd.
                    let e = row[c].extended_gcd(&v[c]);
                    let mut new_row = vec![BigInt::zero(); self.dim];
                    axpy(&mut new_row, &e.x, &row, c);
                    axpy(&mut new_row, &e.y, &v, c);
                    let a = &v[c] / &e.gcd;
                    let b = &row[c] / &e.gcd;
                    let mut rest = vec![BigInt::zero(); self.dim];
                    axpy(&mut rest, &b, &v, c);
                    axpy(&mut rest, &-a, &row, c);
                    if new_row[c].is_negative() {
                        new_row.iter_mut().for_each(|x| *x = -&*x);
                    }
                    self.rows[c] = Some(new_row);
                    self.normalize_above(c);
                    v = rest;
                }
            }
        }
    }

    /// Brings entries in column `c` of earlier rows into [0, pivot).
    fn normalize_above(&mut self, c: usize) {
        let Some(pivot_row) = self.rows[c].clone() else { return };
        // Reduce the new row against later pivots first.
        let mut pr = pivot_row;
        for j in c + 1..self.dim {
            if let Some(r) = &self.rows[j] {
                let q = pr[j].div_floor(&r[j]);
                if !q.is_zero() {
                    axpy(&mut pr, &-q, r, j);
                }
            }
        }
        for i in 0..c {
            if let Some(r) = self.rows[i].as_mut() {
                let q = r[c].div_floor(&pr[c]);
                if !q.is_zero() {
                    axpy(r, &-q, &pr, c);
                }
            }
        }
        self.rows[c] = Some(pr);
    }

    /// Hermite normal form: rows in pivot order, every entry above a pivot in [0, pivot).
    pub fn basis(&self) -> Vec<Vec<BigInt>> {
        let mut rows = self.rows.clone();
        for c in (0..self.dim).rev() {
            let Some(mut r) = rows[c].take() else { continue };
            for j in c + 1..self.dim {
                if let Some(p) = &rows[j] {
                    let q = r[j].div_floor(&p[j]);
                    if !q.is_zero() {
                        axpy(&mut r, &-q, p, j);
                    }
                }
            }
            rows[c] = Some(r);
        }
        rows.into_iter().flatten().collect()
    }

    pub fn pivots(&self) -> Vec<(usize, BigInt)> {
        self.rows.iter().enumerate().filter_map(|(c, r)| r.as_ref().map(|r| (c, r[c].clone()))).collect()
    }

    /// The sublattice of vectors supported on columns `from..`.
    pub fn tail(&self, from: usize) -> Lattice {
        let mut out = Lattice::new(self.dim);
        for c in from..self.dim {
            out.rows[c] = self.rows[c].clone();
        }
        out
    }

    /// True when Z^dim / L is free, i.e. every elementary divisor is one.
    pub fn quotient_is_free(&self) -> bool {
        if self.pivots().iter().all(|(_, p)| p.is_one()) {
            return true;
        }
        smith_diagonal(&self.basis()).iter().all(|d| d.is_one())
    }
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.basis() == other.basis()
    }
}

impl Eq for Lattice {}

fn axpy(v: &mut [BigInt], a: &BigInt, row: &[BigInt], from: usize) {
    for j in from..v.len() {
        if !row[j].is_zero() {
            v[j] += a * &row[j];
        }
    }
}

/// Nonzero diagonal of the Smith normal form.
pub fn smith_diagonal(rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nr = m.len();
    let nc = m.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // Smallest nonzero entry in the remaining block as pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if !m[i][j].is_zero() && best.is_none_or(|(a, b)| m[i][j].abs() < m[a][b].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for r in m.iter_mut() {
            r.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..nr {
                let q = m[i][t].div_floor(&m[t][t]);
                if !q.is_zero() {
                    let pr = m[t].clone();
                    for j in t..nc {
                        m[i][j] -= &q * &pr[j];
                    }
                }
                if !m[i][t].is_zero() {
                    clean = false;
                    m.swap(t, i);
                }
            }
            for j in t + 1..nc {
                let q = m[t][j].div_floor(&m[t][t]);
                if !q.is_zero() {
                    for r in m.iter_mut() {
                        let x = &q * &r[t];
                        r[j] -= x;
                    }
                }
                if !m[t][j].is_zero() {
                    clean = false;
                    for r in m.iter_mut() {
                        r.swap(t, j);
                    }
                }
            }
            if clean {
                // Divisibility: fold any entry not divisible by the pivot back in.
                let bad = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| !(&m[i][j] % &m[t][t]).is_zero()));
                match bad {
                    Some(i) => {
                        let ri = m[i].clone();
                        for j in t..nc {
                            m[t][j] += &ri[j];
                        }
                    }
                    None => break,
                }
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

/// Dominant weights of level at most L as coordinates, highest level first.
#[derive(Clone, Debug)]
pub struct WeightIndex {
    weights: Vec<Weight>,
    index: HashMap<Weight, usize>,
}

impl WeightIndex {
    pub fn new(datum: &RootDatum, big_l: i64) -> Self {
        let mut weights = datum.enumerate_alcove(big_l);
        weights.sort_by(|a, b| datum.canonical_cmp(b, a));
        let index = weights.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        WeightIndex { weights, index }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// First column whose weight has level at most `level`.
    pub fn first_at_or_below(&self, datum: &RootDatum, level: i64) -> usize {
        self.weights.iter().position(|w| datum.level(w) <= level).unwrap_or(self.weights.len())
    }

    pub fn vector(&self, x: &VirtualCharacter) -> Result<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); self.weights.len()];
        for (w, c) in x.terms() {
            let i = self.index.get(w).ok_or(Error::OutsideAlcove(*w, self.weights.len() as i64))?;
            v[*i] += c;
        }
        Ok(v)
    }
}

/// Outcome of the two-sided truncated lattice comparison.
#[derive(Clone, Debug)]
pub struct TruncationReport {
    pub level: i64,
    pub bound: i64,
    pub inner_bound: i64,
    pub columns: usize,
    pub generator_products: usize,
    pub generator_rank: usize,
    pub classical_rank: usize,
    pub inner_rank: usize,
    pub quotient_rank: usize,
    pub alcove_size: usize,
    pub generators_in_classical: bool,
    pub classical_in_generators: bool,
    pub equal_at_inner: bool,
    pub quotient_free: bool,
    pub counterexample: Option<String>,
    pub seconds: f64,
}

impl TruncationReport {
    pub fn passed(&self) -> bool {
        self.generators_in_classical
            && self.classical_in_generators
            && self.equal_at_inner
            && self.quotient_free
            && self.quotient_rank == self.alcove_size
    }

    pub fn to_json(&self) -> Value {
        json!({
            "level": self.level,
            "bound": self.bound,
            "inner_bound": self.inner_bound,
            "columns": self.columns,
            "generator_products": self.generator_products,
            "generator_rank": self.generator_rank,
            "classical_rank": self.classical_rank,
            "inner_rank": self.inner_rank,
            "quotient_rank": self.quotient_rank,
            "alcove_size": self.alcove_size,
            "generators_in_classical": self.generators_in_classical,
            "classical_in_generators": self.classical_in_generators,
            "equal_at_inner": self.equal_at_inner,
            "quotient_free": self.quotient_free,
            "counterexample": self.counterexample,
        })
    }
}

/// All products [μ]·g supported in level ≤ L, for g in the generating set.
pub fn generator_products(ring: &CharacterRing, gens: &GeneratorSet, big_l: i64) -> Result<Vec<VirtualCharacter>> {
    let datum = ring.datum();
    let mut jobs: Vec<(Weight, &VirtualCharacter)> = Vec::new();
    for g in &gens.generators {
        let top = g.terms().keys().map(|w| datum.level(w)).max().unwrap_or(0);
        for mu in datum.enumerate_alcove(big_l - top) {
            jobs.push((mu, g));
        }
    }
    jobs.par_iter()
        .map(|(mu, g)| ring.tensor(&VirtualCharacter::irreducible(Chamber::Dominant, *mu), g))
        .collect()
}

/// Compares the lattice spanned by generator products with the classical
/// truncation: generator products lie in I_k ∩ V_L, the classical basis of
/// I_k ∩ V_{L'} with L' = L − 2h∨ lies in the generator lattice, and the two
/// agree on V_{L'} with free quotient of rank |alcove(k)|.
pub fn truncated_ideal_equality(
    ring: &CharacterRing,
    gens: &GeneratorSet,
    k: i64,
    big_l: i64,
) -> Result<TruncationReport> {
    let start = Instant::now();
    let datum = ring.datum();
    let inner = big_l - 2 * datum.dual_coxeter();
    if inner < k {
        return Err(Error::Unsupported(format!("bound {big_l} leaves no room above level {k}")));
    }
    let index = WeightIndex::new(datum, big_l);
    let dim = index.len();

    let classical_rows: Vec<Vec<BigInt>> = classical_ideal_truncation(datum, k, big_l)?
        .iter()
        .map(|x| index.vector(x))
        .collect::<Result<_>>()?;
    let classical = Lattice::from_rows(dim, classical_rows);

    let products = generator_products(ring, gens, big_l)?;
    let mut counterexample = None;
    let mut generated = Lattice::new(dim);
    let mut generators_in_classical = true;
    for p in &products {
        let v = index.vector(p)?;
        if generators_in_classical && !classical.contains(&v) {
            generators_in_classical = false;
            counterexample = Some(format!("product {} is not in the classical lattice", p.display(datum)));
        }
        generated.insert(v);
    }

    let cut = index.first_at_or_below(datum, inner);
    let inner_classical = classical.tail(cut);
    let inner_generated = generated.tail(cut);
    let mut classical_in_generators = true;
    for row in inner_classical.basis() {
        if !generated.contains(&row) {
            classical_in_generators = false;
            if counterexample.is_none() {
                let w = index.weights()[row.iter().position(|x| !x.is_zero()).unwrap()];
                counterexample = Some(format!("classical element led by {w} is not generated"));
            }
            break;
        }
    }
    let equal_at_inner = inner_generated == inner_classical;
    let inner_rank = inner_generated.rank();
    Ok(TruncationReport {
        level: k,
        bound: big_l,
        inner_bound: inner,
        columns: dim,
        generator_products: products.len(),
        generator_rank: generated.rank(),
        classical_rank: classical.rank(),
        inner_rank,
        quotient_rank: (dim - cut) - inner_rank,
        alcove_size: datum.enumerate_alcove(k).len(),
        generators_in_classical,
        classical_in_generators,
        equal_at_inner,
        quotient_free: inner_generated.quotient_is_free(),
        counterexample,
        seconds: start.elapsed().as_secs_f64(),
    })
}
