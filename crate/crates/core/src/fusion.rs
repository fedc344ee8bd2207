//! The level k fusion ring: Kac–Walton reduction and the Verlinde oracle.

use std::collections::{BTreeMap, HashMap};
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::character::{coeff_json, Chamber, CharacterRing, VirtualCharacter, DEFAULT_GROUP_CAP};
use crate::error::{Error, Result};
use crate::root_data::RootDatum;
use crate::weight::Weight;
use crate::weyl::ReflectionGroupSpec;

/// Element of F_k[G]: integer combination of alcove weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionElement {
    level: i64,
    terms: BTreeMap<Weight, BigInt>,
}

impl FusionElement {
    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn terms(&self) -> &BTreeMap<Weight, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, w: &Weight) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The same combination read in R[G].
    pub fn lift(&self) -> VirtualCharacter {
        let mut x = VirtualCharacter::zero(Chamber::Dominant);
        for (w, c) in &self.terms {
            x.add_term(*w, c.clone());
        }
        x
    }

    pub fn sorted_terms(&self, datum: &RootDatum) -> Vec<(Weight, BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(w, c)| (*w, c.clone())).collect();
        v.sort_by(|a, b| datum.canonical_cmp(&a.0, &b.0));
        v
    }

    pub fn to_json(&self, datum: &RootDatum) -> Value {
        Value::Array(
            self.sorted_terms(datum)
                .into_iter()
                .map(|(w, c)| json!({"coeff": coeff_json(&c), "weight": w}))
                .collect(),
        )
    }
}

/// Reduces x ∈ R[G] to F_k[G] by straightening under W^{k+h∨}_{−ρ}.
pub fn fusion_reduce(datum: &RootDatum, x: &VirtualCharacter, k: i64) -> Result<FusionElement> {
    if x.chamber() != Chamber::Dominant {
        return Err(Error::ChamberMismatch { expected: "G-dominant".into(), found: format!("{:?}", x.chamber()) });
    }
    if k < 0 {
        return Err(Error::Unsupported(format!("level {k} must be nonnegative")));
    }
    let g = ReflectionGroupSpec::kac_walton(datum, k);
    let mut terms: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (w, c) in x.terms() {
        let s = datum.straighten(w, &g)?;
        if s.sign == 0 {
            continue;
        }
        let e = terms.entry(s.weight).or_default();
        *e += c * BigInt::from(s.sign);
        if e.is_zero() {
            terms.remove(&s.weight);
        }
    }
    Ok(FusionElement { level: k, terms })
}

fn check_alcove(datum: &RootDatum, w: &Weight, k: i64) -> Result<()> {
    if w.is_dominant() && datum.level(w) <= k {
        Ok(())
    } else {
        Err(Error::OutsideAlcove(*w, k))
    }
}

/// Kac–Walton product [λ]·[μ] in F_k[G].
pub fn fusion_product(ring: &CharacterRing, lambda: &Weight, mu: &Weight, k: i64) -> Result<FusionElement> {
    let d = ring.datum();
    check_alcove(d, lambda, k)?;
    check_alcove(d, mu, k)?;
    let mut t = VirtualCharacter::zero(Chamber::Dominant);
    for (w, c) in ring.tensor_irreducibles(lambda, mu)? {
        t.add_term(w, c);
    }
    fusion_reduce(d, &t, k)
}

/// One structure constant N_{λμ}^ν.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionCoefficient {
    pub lambda: Weight,
    pub mu: Weight,
    pub nu: Weight,
    pub value: BigInt,
}

/// All Kac–Walton structure constants at level k, in canonical order of (λ, μ, ν).
pub fn fusion_table(ring: &CharacterRing, k: i64) -> Result<Vec<FusionCoefficient>> {
    let d = ring.datum();
    let alcove = d.enumerate_alcove(k);
    let pairs: Vec<(usize, usize)> =
        (0..alcove.len()).flat_map(|i| (i..alcove.len()).map(move |j| (i, j))).collect();
    let products: Vec<FusionElement> = pairs
        .par_iter()
        .map(|&(i, j)| fusion_product(ring, &alcove[i], &alcove[j], k))
        .collect::<Result<_>>()?;
    let mut by_pair: HashMap<(usize, usize), &FusionElement> = HashMap::new();
    for (p, e) in pairs.iter().zip(&products) {
        by_pair.insert(*p, e);
    }
    let mut out = Vec::with_capacity(alcove.len().pow(3));
    for i in 0..alcove.len() {
        for j in 0..alcove.len() {
            let e = by_pair[&(i.min(j), i.max(j))];
            for nu in &alcove {
                out.push(FusionCoefficient { lambda: alcove[i], mu: alcove[j], nu: *nu, value: e.coeff(nu) });
            }
        }
    }
    Ok(out)
}

/// Normalized modular S-matrix on the level k alcove, up to a global phase.
#[derive(Clone, Debug)]
pub struct SMatrix {
    level: i64,
    alcove: Vec<Weight>,
    index: HashMap<Weight, usize>,
    entries: Vec<Vec<Complex64>>,
    tolerance: f64,
    unitarity_residual: f64,
    symmetry_residual: f64,
}

impl SMatrix {
    /// Builds S from alternating W-sums of exponentials at the shifted alcove points.
    pub fn new(datum: &RootDatum, k: i64, tolerance: f64) -> Result<Self> {
        SMatrix::with_cap(datum, k, tolerance, DEFAULT_GROUP_CAP)
    }

    pub fn with_cap(datum: &RootDatum, k: i64, tolerance: f64, cap: usize) -> Result<Self> {
        if datum.weyl_order() > cap as u128 {
            return Err(Error::Capacity { order: datum.weyl_order(), bound: cap as u128 });
        }
        let alcove = datum.enumerate_alcove(k);
        let index: HashMap<Weight, usize> = alcove.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        let rho = datum.rho();
        let scale = 2.0 * PI / ((k + datum.dual_coxeter()) as f64 * datum.form_denominator() as f64);
        let orbits: Vec<Vec<(Weight, f64)>> = alcove.iter().map(|l| signed_orbit(datum, &(*l + rho))).collect();
        let shifted: Vec<Weight> = alcove.iter().map(|m| *m + rho).collect();
        let raw: Vec<Vec<Complex64>> = orbits
            .par_iter()
            .map(|orbit| {
                shifted
                    .iter()
                    .map(|m| {
                        orbit
                            .iter()
                            .map(|(x, s)| {
                                let phase = -(datum.inner_scaled(x, m) as f64) * scale;
                                Complex64::from_polar(*s, phase)
                            })
                            .sum()
                    })
                    .collect()
            })
            .collect();
        let norm = raw[0].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let entries: Vec<Vec<Complex64>> =
            raw.into_iter().map(|row| row.into_iter().map(|z| z / norm).collect()).collect();
        let n = alcove.len();
        let mut unitarity_residual: f64 = 0.0;
        let mut symmetry_residual: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let dot: Complex64 = (0..n).map(|l| entries[i][l] * entries[j][l].conj()).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                unitarity_residual = unitarity_residual.max((dot - target).norm());
                symmetry_residual = symmetry_residual.max((entries[i][j] - entries[j][i]).norm());
            }
        }
        Ok(SMatrix { level: k, alcove, index, entries, tolerance, unitarity_residual, symmetry_residual })
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn alcove(&self) -> &[Weight] {
        &self.alcove
    }

    pub fn entry(&self, a: &Weight, b: &Weight) -> Option<Complex64> {
        Some(self.entries[*self.index.get(a)?][*self.index.get(b)?])
    }

    pub fn unitarity_residual(&self) -> f64 {
        self.unitarity_residual
    }

    pub fn symmetry_residual(&self) -> f64 {
        self.symmetry_residual
    }

    fn idx(&self, w: &Weight) -> Result<usize> {
        self.index.get(w).copied().ok_or(Error::OutsideAlcove(*w, self.level))
    }

    fn raw_coefficient(&self, a: usize, b: usize, c: usize) -> Complex64 {
        let s = &self.entries;
        (0..self.alcove.len()).map(|x| s[a][x] * s[b][x] * s[c][x].conj() / s[0][x]).sum()
    }

    /// N_{λμ}^ν by the Verlinde formula, with its distance to the nearest integer.
    pub fn verlinde_with_residual(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<(i64, f64)> {
        let z = self.raw_coefficient(self.idx(lambda)?, self.idx(mu)?, self.idx(nu)?);
        let r = z.re.round();
        let residual = (z - Complex64::new(r, 0.0)).norm();
        if residual >= self.tolerance {
            return Err(Error::Oracle(format!(
                "Verlinde value {z} for ({lambda}, {mu}, {nu}) is {residual:e} from an integer"
            )));
        }
        Ok((r as i64, residual))
    }

    pub fn verlinde_fusion(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<i64> {
        self.verlinde_with_residual(lambda, mu, nu).map(|(v, _)| v)
    }
}

/// W-orbit of a regular dominant point with the sign of each element.
fn signed_orbit(datum: &RootDatum, start: &Weight) -> Vec<(Weight, f64)> {
    let mut seen: HashMap<Weight, f64> = HashMap::new();
    seen.insert(*start, 1.0);
    let mut pts = vec![(*start, 1.0)];
    let mut head = 0;
    while head < pts.len() {
        let (x, s) = pts[head];
        head += 1;
        for i in 0..datum.rank() {
            if x[i] > 0 {
                let y = datum.reflect(i + 1, &x);
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(y) {
                    e.insert(-s);
                    pts.push((y, -s));
                }
            }
        }
    }
    pts
}

/// Summary of a Kac–Walton versus Verlinde comparison.
#[derive(Clone, Debug)]
pub struct OracleComparison {
    pub coefficients: usize,
    pub max_residual: f64,
    pub unitarity_residual: f64,
    pub mismatches: Vec<(FusionCoefficient, i64)>,
}

/// Compares every structure constant at level k against the Verlinde formula.
pub fn compare_with_verlinde(ring: &CharacterRing, k: i64, tolerance: f64) -> Result<OracleComparison> {
    let s = SMatrix::new(ring.datum(), k, tolerance)?;
    let table = fusion_table(ring, k)?;
    let checked: Vec<(f64, Option<(FusionCoefficient, i64)>)> = table
        .into_par_iter()
        .map(|c| {
            let (v, r) = s.verlinde_with_residual(&c.lambda, &c.mu, &c.nu)?;
            let ok = c.value.to_i64() == Some(v);
            Ok((r, if ok { None } else { Some((c, v)) }))
        })
        .collect::<Result<_>>()?;
    let coefficients = checked.len();
    let max_residual = checked.iter().map(|c| c.0).fold(0.0, f64::max);
    let mismatches = checked.into_iter().filter_map(|c| c.1).collect();
    Ok(OracleComparison { coefficients, max_residual, unitarity_residual: s.unitarity_residual(), mismatches })
}

/// All coefficients nonnegative.
pub fn is_effective(e: &FusionElement) -> bool {
    e.terms.values().all(|c| !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn ring(code: &str) -> CharacterRing {
        CharacterRing::new(Arc::new(RootDatum::new(code.parse().unwrap()).unwrap()))
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c)
    }

    fn irr(c: &[i64]) -> VirtualCharacter {
        VirtualCharacter::irreducible(Chamber::Dominant, w(c))
    }

    #[test]
    fn reduce_examples() {
        let d = RootDatum::new("A1".parse().unwrap()).unwrap();
        let r = fusion_reduce(&d, &irr(&[3]), 1).unwrap();
        assert_eq!(r.coeff(&w(&[1])), -BigInt::one());
        assert_eq!(r.terms().len(), 1);
        for k in 1..6 {
            assert!(fusion_reduce(&d, &irr(&[k + 1]), k).unwrap().is_zero());
            for a in 0..=k {
                let r = fusion_reduce(&d, &irr(&[a]), k).unwrap();
                assert_eq!(r.lift(), irr(&[a]));
            }
        }
    }

    #[test]
    fn product_examples() {
        let r = ring("A1");
        let p = fusion_product(&r, &w(&[1]), &w(&[1]), 1).unwrap();
        assert_eq!(p.lift(), irr(&[0]));
        let p = fusion_product(&r, &w(&[1]), &w(&[1]), 2).unwrap();
        let mut expect = irr(&[0]);
        expect.add_term(w(&[2]), 1);
        assert_eq!(p.lift(), expect);
        assert!(matches!(fusion_product(&r, &w(&[3]), &w(&[0]), 2), Err(Error::OutsideAlcove(..))));
        let a2 = ring("A2");
        let p = fusion_product(&a2, &w(&[1, 0]), &w(&[1, 0]), 1).unwrap();
        assert_eq!(p.lift(), irr(&[0, 1]));
        for l in a2.datum().enumerate_alcove(3) {
            assert_eq!(fusion_product(&a2, &w(&[0, 0]), &l, 3).unwrap().lift(), VirtualCharacter::irreducible(Chamber::Dominant, l));
        }
    }

    #[test]
    fn verlinde_examples() {
        let d = RootDatum::new("A1".parse().unwrap()).unwrap();
        let s = SMatrix::new(&d, 1, 1e-6).unwrap();
        assert_eq!(s.verlinde_fusion(&w(&[1]), &w(&[1]), &w(&[0])).unwrap(), 1);
        assert!(s.unitarity_residual() < 1e-9);
        let a2 = RootDatum::new("A2".parse().unwrap()).unwrap();
        let s = SMatrix::new(&a2, 1, 1e-6).unwrap();
        assert_eq!(s.verlinde_fusion(&w(&[1, 0]), &w(&[1, 0]), &w(&[0, 1])).unwrap(), 1);
        assert_eq!(s.verlinde_fusion(&w(&[1, 0]), &w(&[1, 0]), &w(&[1, 0])).unwrap(), 0);
        for m in s.alcove() {
            for n in s.alcove() {
                let v = s.verlinde_fusion(&w(&[0, 0]), m, n).unwrap();
                assert_eq!(v, i64::from(m == n));
            }
        }
        let e7 = RootDatum::new("E7".parse().unwrap()).unwrap();
        assert!(matches!(SMatrix::new(&e7, 1, 1e-6), Err(Error::Capacity { .. })));
    }

    #[test]
    fn kac_walton_matches_verlinde_small() {
        for code in ["A1", "A2", "C2", "G2"] {
            let r = ring(code);
            for k in 1..=3 {
                let c = compare_with_verlinde(&r, k, 1e-6).unwrap();
                assert!(c.mismatches.is_empty(), "{code} k={k}: {:?}", c.mismatches.first());
                assert!(c.unitarity_residual < 1e-9);
            }
        }
    }

    #[test]
    fn free_rank_is_alcove_size() {
        let r = ring("B3");
        for k in 1..=3 {
            let t = fusion_table(&r, k).unwrap();
            let n = r.datum().enumerate_alcove(k).len();
            assert_eq!(t.len(), n * n * n);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn reduction_is_an_algebra_map(t in 0usize..3, k in 1i64..4, c in proptest::collection::vec(0i64..5, 4)) {
            let rings = [ring("A2"), ring("C2"), ring("G2")];
            let r = &rings[t];
            let d = r.datum();
            let x = irr(&c[..2]);
            let y = irr(&c[2..]);
            let direct = fusion_reduce(d, &r.tensor(&x, &y).unwrap(), k).unwrap();
            let rx = fusion_reduce(d, &x, k).unwrap().lift();
            let ry = fusion_reduce(d, &y, k).unwrap().lift();
            let folded = fusion_reduce(d, &r.tensor(&rx, &ry).unwrap(), k).unwrap();
            prop_assert_eq!(direct, folded);
        }

        #[test]
        fn products_are_effective_and_commutative(t in 0usize..3, k in 1i64..4, i in 0usize..50, j in 0usize..50) {
            let rings = [ring("A2"), ring("C2"), ring("G2")];
            let r = &rings[t];
            let al = r.datum().enumerate_alcove(k);
            let (a, b) = (al[i % al.len()], al[j % al.len()]);
            let p = fusion_product(r, &a, &b, k).unwrap();
            prop_assert!(is_effective(&p));
            prop_assert_eq!(p, fusion_product(r, &b, &a, k).unwrap());
        }
    }
}
