//! Virtual characters, weight systems and the ring structure of R[G].

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::root_data::RootDatum;
use crate::weight::Weight;
use crate::weyl::{GroupKind, ReflectionGroupSpec, Shift};

/// Default bound on the order of a group summed over explicitly.
pub const DEFAULT_GROUP_CAP: usize = 51840;

/// Closed chamber whose integral points index a basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chamber {
    /// Dominant weights of G.
    Dominant,
    /// C_e = {λ_j ≥ 0 for j ≠ v}.
    Edge { vertex: usize },
    /// C_v = {λ_j ≥ 0 for j ≠ v, level ≤ k}.
    Vertex { vertex: usize, level: i64 },
}

impl Chamber {
    pub fn contains(&self, datum: &RootDatum, w: &Weight) -> bool {
        match *self {
            Chamber::Dominant => w.is_dominant(),
            Chamber::Edge { vertex } => datum.in_edge_chamber(w, vertex),
            Chamber::Vertex { vertex, level } => datum.in_vertex_chamber(w, vertex, level),
        }
    }

    fn name(&self) -> String {
        match self {
            Chamber::Dominant => "G-dominant".into(),
            Chamber::Edge { vertex } => format!("C_e (vertex {vertex})"),
            Chamber::Vertex { vertex, level } => format!("C_v (vertex {vertex}, level {level})"),
        }
    }
}

pub fn coeff_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

/// Finitely supported integer map on the weight lattice.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightSum {
    terms: BTreeMap<Weight, BigInt>,
}

impl WeightSum {
    pub fn new() -> Self {
        WeightSum::default()
    }

    pub fn add_term(&mut self, w: Weight, c: impl Into<BigInt>) {
        add_into(&mut self.terms, w, c.into());
    }

    pub fn terms(&self) -> &BTreeMap<Weight, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, w: &Weight) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_mass(&self) -> BigInt {
        self.terms.values().sum()
    }
}

fn add_into(map: &mut BTreeMap<Weight, BigInt>, w: Weight, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(w).or_default();
    *e += c;
    if e.is_zero() {
        map.remove(&w);
    }
}

/// Finitely supported integer map on the integral points of a chamber.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualCharacter {
    chamber: Chamber,
    terms: BTreeMap<Weight, BigInt>,
}

impl VirtualCharacter {
    pub fn zero(chamber: Chamber) -> Self {
        VirtualCharacter { chamber, terms: BTreeMap::new() }
    }

    pub fn irreducible(chamber: Chamber, w: Weight) -> Self {
        let mut x = VirtualCharacter::zero(chamber);
        x.add_term(w, 1);
        x
    }

    pub fn chamber(&self) -> Chamber {
        self.chamber
    }

    pub fn add_term(&mut self, w: Weight, c: impl Into<BigInt>) {
        add_into(&mut self.terms, w, c.into());
    }

    pub fn add_assign(&mut self, other: &VirtualCharacter) {
        for (w, c) in &other.terms {
            add_into(&mut self.terms, *w, c.clone());
        }
    }

    pub fn scaled(&self, c: &BigInt) -> VirtualCharacter {
        let mut out = VirtualCharacter::zero(self.chamber);
        for (w, x) in &self.terms {
            add_into(&mut out.terms, *w, x * c);
        }
        out
    }

    pub fn negated(&self) -> VirtualCharacter {
        self.scaled(&-BigInt::one())
    }

    pub fn terms(&self) -> &BTreeMap<Weight, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, w: &Weight) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Confirms every key lies in the declared chamber.
    pub fn check(&self, datum: &RootDatum) -> Result<()> {
        for w in self.terms.keys() {
            if !self.chamber.contains(datum, w) {
                return Err(Error::ChamberMismatch { expected: self.chamber.name(), found: format!("weight {w}") });
            }
        }
        Ok(())
    }

    /// Terms in canonical weight order.
    pub fn sorted_terms(&self, datum: &RootDatum) -> Vec<(Weight, BigInt)> {
        let mut v: Vec<(Weight, BigInt)> = self.terms.iter().map(|(w, c)| (*w, c.clone())).collect();
        v.sort_by(|a, b| datum.canonical_cmp(&a.0, &b.0));
        v
    }

    /// Largest term in canonical order.
    pub fn leading(&self, datum: &RootDatum) -> Option<(Weight, BigInt)> {
        self.terms.iter().max_by(|a, b| datum.canonical_cmp(a.0, b.0)).map(|(w, c)| (*w, c.clone()))
    }

    /// The same element up to sign, with positive leading coefficient.
    pub fn sign_normalized(&self, datum: &RootDatum) -> VirtualCharacter {
        match self.leading(datum) {
            Some((_, c)) if c.is_negative() => self.negated(),
            _ => self.clone(),
        }
    }

    pub fn to_json(&self, datum: &RootDatum) -> Value {
        Value::Array(
            self.sorted_terms(datum)
                .into_iter()
                .map(|(w, c)| json!({"coeff": coeff_json(&c), "weight": w}))
                .collect(),
        )
    }

    /// Human-readable form such as `[2,0] - [0,1]`.
    pub fn display(&self, datum: &RootDatum) -> String {
        let terms = self.sorted_terms(datum);
        if terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (w, c)) in terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                s.push_str(&format!("{mag}*"));
            }
            s.push_str(&w.to_string());
        }
        s
    }
}

type MultiplicityCache = RwLock<HashMap<Weight, Arc<Vec<(Weight, u64)>>>>;

/// R[G] over a fixed root datum, with a shared Freudenthal memo.
#[derive(Debug)]
pub struct CharacterRing {
    datum: Arc<RootDatum>,
    dominant: MultiplicityCache,
}

impl CharacterRing {
    pub fn new(datum: Arc<RootDatum>) -> Self {
        CharacterRing { datum, dominant: RwLock::new(HashMap::new()) }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn datum_arc(&self) -> Arc<RootDatum> {
        self.datum.clone()
    }

    /// Multiplicities of the dominant weights of the irreducible with highest weight λ.
    pub fn dominant_multiplicities(&self, lambda: &Weight) -> Result<Arc<Vec<(Weight, u64)>>> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(*lambda));
        }
        if let Some(v) = self.dominant.read().unwrap().get(lambda) {
            return Ok(v.clone());
        }
        let v = Arc::new(self.freudenthal(lambda));
        self.dominant.write().unwrap().entry(*lambda).or_insert_with(|| v.clone());
        Ok(v)
    }

    fn freudenthal(&self, lambda: &Weight) -> Vec<(Weight, u64)> {
        let d = &*self.datum;
        let roots = d.positive_roots_fund();
        let heights: Vec<usize> = d.positive_roots().iter().map(|b| b.iter().sum::<i64>() as usize).collect();

        let mut depth: HashMap<Weight, usize> = HashMap::new();
        depth.insert(*lambda, 0);
        let mut order = vec![*lambda];
        let mut head = 0;
        while head < order.len() {
            let mu = order[head];
            let dm = depth[&mu];
            head += 1;
            for (a, h) in roots.iter().zip(&heights) {
                let nu = mu - *a;
                if nu.is_dominant() && !depth.contains_key(&nu) {
                    depth.insert(nu, dm + h);
                    order.push(nu);
                }
            }
        }
        order.sort_by_key(|w| (depth[w], *w));

        let rho = d.rho();
        let top = d.inner_scaled(&(*lambda + rho), &(*lambda + rho));
        let mut mult: HashMap<Weight, u64> = HashMap::with_capacity(order.len());
        mult.insert(*lambda, 1);
        let mut out = vec![(*lambda, 1u64)];
        for mu in order.iter().skip(1) {
            let mut num: i128 = 0;
            for a in roots {
                let mut nu = *mu + *a;
                loop {
                    let (dom, _) = d.dominant_conjugate(&nu);
                    let Some(&m) = mult.get(&dom) else { break };
                    num += m as i128 * d.inner_scaled(&nu, a);
                    nu += *a;
                }
            }
            let den = top - d.inner_scaled(&(*mu + rho), &(*mu + rho));
            let m = 2 * num / den;
            debug_assert_eq!(2 * num % den, 0);
            mult.insert(*mu, m as u64);
            out.push((*mu, m as u64));
        }
        out
    }

    /// Every weight with its multiplicity, obtained by W-orbits of the dominant ones.
    pub fn weight_list(&self, lambda: &Weight) -> Result<Vec<(Weight, u64)>> {
        let dom = self.dominant_multiplicities(lambda)?;
        let mut out = Vec::new();
        for &(mu, m) in dom.iter() {
            for x in self.orbit(&mu) {
                out.push((x, m));
            }
        }
        Ok(out)
    }

    /// W-orbit of a dominant weight.
    pub fn orbit(&self, mu: &Weight) -> Vec<Weight> {
        let d = &*self.datum;
        let mut seen: HashSet<Weight> = HashSet::new();
        seen.insert(*mu);
        let mut pts = vec![*mu];
        let mut head = 0;
        while head < pts.len() {
            let x = pts[head];
            head += 1;
            for i in 0..d.rank() {
                if x[i] > 0 {
                    let y = d.reflect(i + 1, &x);
                    if seen.insert(y) {
                        pts.push(y);
                    }
                }
            }
        }
        pts
    }

    pub fn weight_system(&self, lambda: &Weight) -> Result<WeightSum> {
        let mut s = WeightSum::new();
        for (w, m) in self.weight_list(lambda)? {
            s.add_term(w, m);
        }
        Ok(s)
    }

    /// Straightens λ under the ρ-shifted action of W; returns `None` when singular.
    pub fn dot_dominant(&self, lambda: &Weight) -> Option<(Weight, i8)> {
        let d = &*self.datum;
        let mut x = *lambda + d.rho();
        let mut sign = 1i8;
        while let Some(i) = (0..d.rank()).find(|&i| x[i] < 0) {
            x = d.reflect(i + 1, &x);
            sign = -sign;
        }
        if (0..d.rank()).any(|i| x[i] == 0) {
            None
        } else {
            Some((x - d.rho(), sign))
        }
    }

    /// Decomposition of [λ]⊗[μ] by Brauer–Klimyk over the smaller factor.
    pub fn tensor_irreducibles(&self, lambda: &Weight, mu: &Weight) -> Result<BTreeMap<Weight, BigInt>> {
        let d = &*self.datum;
        for w in [lambda, mu] {
            if !w.is_dominant() {
                return Err(Error::NotDominant(*w));
            }
        }
        let (big, small) = if d.weyl_dimension(lambda) >= d.weyl_dimension(mu) { (lambda, mu) } else { (mu, lambda) };
        let mut acc: HashMap<Weight, i128> = HashMap::new();
        for (nu, m) in self.weight_list(small)? {
            if let Some((w, s)) = self.dot_dominant(&(*big + nu)) {
                *acc.entry(w).or_default() += s as i128 * m as i128;
            }
        }
        Ok(acc.into_iter().filter(|(_, c)| *c != 0).map(|(w, c)| (w, BigInt::from(c))).collect())
    }

    pub fn tensor(&self, x: &VirtualCharacter, y: &VirtualCharacter) -> Result<VirtualCharacter> {
        for z in [x, y] {
            if z.chamber != Chamber::Dominant {
                return Err(Error::ChamberMismatch { expected: "G-dominant".into(), found: z.chamber.name() });
            }
        }
        let mut out = VirtualCharacter::zero(Chamber::Dominant);
        for (a, ca) in &x.terms {
            for (b, cb) in &y.terms {
                let prod = ca * cb;
                for (w, c) in self.tensor_irreducibles(a, b)? {
                    out.add_term(w, c * &prod);
                }
            }
        }
        Ok(out)
    }

    pub fn dimension(&self, x: &VirtualCharacter) -> BigInt {
        x.terms.iter().map(|(w, c)| c * self.datum.weyl_dimension(w)).sum()
    }

    /// d^{e,o}: [λ]_e ↦ sign·[μ] with (μ, sign) the ρ-shifted W-straightening of λ.
    pub fn induct_to_g(&self, x: &VirtualCharacter) -> VirtualCharacter {
        let mut out = VirtualCharacter::zero(Chamber::Dominant);
        for (w, c) in &x.terms {
            if let Some((mu, s)) = self.dot_dominant(w) {
                out.add_term(mu, c * BigInt::from(s));
            }
        }
        out
    }

    /// Σ_{u ∈ g} ε(u)·u(λ) for a finite group, using the shifted action of `g`.
    pub fn antisymmetrize(&self, lambda: &Weight, g: &ReflectionGroupSpec, cap: usize) -> Result<WeightSum> {
        let d = &*self.datum;
        let mut s = WeightSum::new();
        for (word, parity) in d.group_elements(g, cap)? {
            s.add_term(d.apply_word(&word, lambda, g), if parity { -1 } else { 1 });
        }
        Ok(s)
    }

    /// Antisymmetrization over the affine Weyl group W ⋉ m·Q∨ acting through
    /// the given shift, keeping only terms with every coordinate in [−bound, bound].
    pub fn antisymmetrize_affine(&self, lambda: &Weight, m: i64, shift: Shift, bound: i64) -> Result<WeightSum> {
        let d = &*self.datum;
        let n = d.rank();
        let lin = ReflectionGroupSpec::new(d, GroupKind::FiniteW, Shift::integral(d.zero()))?;
        let elements = d.group_elements(&lin, DEFAULT_GROUP_CAP)?;
        let sc = shift.denom;
        let mu = sc * *lambda + shift.numer;
        // Coroot α_i∨ in fundamental coordinates, scaled by the shift denominator and m.
        let dmax = *d.symmetrizer().iter().max().unwrap();
        let steps: Vec<Weight> =
            (1..=n).map(|i| (sc * m * dmax / d.symmetrizer()[i - 1]) * d.simple_root(i)).collect();
        // Coefficient c_i = (β, λ_i), bounded by |β|·|λ_i| with |mβ| ≤ |y| + |μ|.
        let den = d.form_denominator() as f64;
        let form_sum: f64 = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| d.inner_scaled(&d.fundamental(i + 1), &d.fundamental(j + 1)).abs() as f64 / den)
            .sum();
        let y_norm = form_sum.sqrt() * (sc * bound + shift.numer.coords().iter().map(|c| c.abs()).max().unwrap_or(0)) as f64;
        let mu_norm = (d.inner_scaled(&mu, &mu) as f64 / den).sqrt();
        let limits: Vec<i64> = (1..=n)
            .map(|i| {
                let li = d.fundamental(i);
                let li_norm = (d.inner_scaled(&li, &li) as f64 / den).sqrt();
                ((y_norm + mu_norm) * li_norm / (sc * m) as f64).floor() as i64 + 1
            })
            .collect();
        let total: u128 = limits.iter().map(|&l| (2 * l + 1) as u128).product::<u128>() * elements.len() as u128;
        if total > 50_000_000 {
            return Err(Error::Capacity { order: total, bound: 50_000_000 });
        }
        let mut s = WeightSum::new();
        let images: Vec<(Weight, bool)> = elements.iter().map(|(w, p)| (d.act(w, &mu), *p)).collect();
        let mut coeffs: Vec<i64> = limits.iter().map(|&l| -l).collect();
        loop {
            let mut t = d.zero();
            for i in 0..n {
                t += coeffs[i] * steps[i];
            }
            for (img, parity) in &images {
                let y = *img + t - shift.numer;
                if let Some(x) = y.div_exact(sc) {
                    if x.coords().iter().all(|c| c.abs() <= bound) {
                        s.add_term(x, if *parity { -1 } else { 1 });
                    }
                }
            }
            let mut p = 0;
            while p < n {
                coeffs[p] += 1;
                if coeffs[p] <= limits[p] {
                    break;
                }
                coeffs[p] = -limits[p];
                p += 1;
            }
            if p == n {
                break;
            }
        }
        Ok(s)
    }
}

impl RootDatum {
    /// Weyl dimension formula, exactly.
    pub fn weyl_dimension(&self, lambda: &Weight) -> BigInt {
        let rho = self.rho();
        let shifted = *lambda + rho;
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 0..self.positive_roots().len() {
            num *= self.coroot_pairing(&shifted, i);
            den *= self.coroot_pairing(&rho, i);
        }
        num / den
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

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
    fn weight_system_examples() {
        let a1 = ring("A1");
        let s = a1.weight_system(&w(&[2])).unwrap();
        assert_eq!(s.len(), 3);
        for c in [2, 0, -2] {
            assert_eq!(s.coeff(&w(&[c])), BigInt::one());
        }
        let g2 = ring("G2");
        let s = g2.weight_system(&w(&[1, 0])).unwrap();
        assert_eq!(s.len(), 7);
        assert!(s.terms().values().all(|c| c.is_one()));
        assert_eq!(g2.weight_system(&w(&[0, 0])).unwrap().len(), 1);
        assert!(matches!(a1.weight_system(&w(&[-1])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn weight_system_mass_is_weyl_dimension() {
        for (code, lambdas) in [
            ("A3", vec![vec![1, 1, 0], vec![2, 0, 1]]),
            ("B3", vec![vec![1, 0, 1], vec![0, 2, 0]]),
            ("C3", vec![vec![1, 1, 1]]),
            ("G2", vec![vec![2, 1], vec![0, 3]]),
            ("F4", vec![vec![1, 0, 0, 1], vec![0, 0, 1, 0]]),
            ("E6", vec![vec![1, 0, 0, 0, 0, 1], vec![0, 1, 0, 0, 0, 0]]),
            ("E7", vec![vec![1, 0, 0, 0, 0, 0, 1]]),
            ("E8", vec![vec![0, 0, 0, 0, 0, 0, 0, 1]]),
        ] {
            let r = ring(code);
            for l in lambdas {
                let l = w(&l);
                let s = r.weight_system(&l).unwrap();
                assert_eq!(s.total_mass(), r.datum().weyl_dimension(&l), "{code} {l}");
                assert_eq!(s.coeff(&l), BigInt::one());
                // W-invariance under each simple reflection.
                for (x, m) in s.terms() {
                    for i in 1..=r.datum().rank() {
                        assert_eq!(&s.coeff(&r.datum().reflect(i, x)), m);
                    }
                }
            }
        }
    }

    #[test]
    fn known_dimensions() {
        let e8 = ring("E8");
        assert_eq!(e8.datum().weyl_dimension(&w(&[0, 0, 0, 0, 0, 0, 0, 1])), BigInt::from(248));
        assert_eq!(e8.datum().weyl_dimension(&w(&[1, 0, 0, 0, 0, 0, 0, 0])), BigInt::from(3875));
        assert_eq!(ring("E7").datum().weyl_dimension(&w(&[0, 0, 0, 0, 0, 0, 1])), BigInt::from(56));
        assert_eq!(ring("E6").datum().weyl_dimension(&w(&[1, 0, 0, 0, 0, 0])), BigInt::from(27));
        assert_eq!(ring("F4").datum().weyl_dimension(&w(&[0, 0, 0, 1])), BigInt::from(26));
        assert_eq!(ring("G2").datum().weyl_dimension(&w(&[0, 1])), BigInt::from(14));
    }

    #[test]
    fn clebsch_gordan() {
        let a1 = ring("A1");
        for a in 0..6i64 {
            for b in 0..6i64 {
                let t = a1.tensor(&irr(&[a]), &irr(&[b])).unwrap();
                let mut expect = VirtualCharacter::zero(Chamber::Dominant);
                let mut c = (a - b).abs();
                while c <= a + b {
                    expect.add_term(w(&[c]), 1);
                    c += 2;
                }
                assert_eq!(t, expect, "{a} x {b}");
            }
        }
    }

    #[test]
    fn tensor_unit_and_dimension() {
        let e6 = ring("E6");
        let x = irr(&[1, 0, 0, 0, 0, 0]);
        let t = e6.tensor(&x, &x).unwrap();
        assert_eq!(e6.dimension(&t), BigInt::from(27 * 27));
        assert!(t.terms().values().all(|c| c.is_positive()));
        assert_eq!(e6.tensor(&irr(&[0, 0, 0, 0, 0, 0]), &x).unwrap(), x);
        let bad = VirtualCharacter::irreducible(Chamber::Edge { vertex: 1 }, w(&[0, 0, 0, 0, 0, 0]));
        assert!(matches!(e6.tensor(&bad, &x), Err(Error::ChamberMismatch { .. })));
    }

    #[test]
    fn antisymmetrize_examples() {
        let a1 = ring("A1");
        let g = ReflectionGroupSpec::finite_linear(a1.datum());
        let s = a1.antisymmetrize(&w(&[1]), &g, 100).unwrap();
        assert_eq!(s.coeff(&w(&[1])), BigInt::one());
        assert_eq!(s.coeff(&w(&[-1])), -BigInt::one());
        assert_eq!(s.len(), 2);
        assert!(a1.antisymmetrize(&w(&[0]), &g, 100).unwrap().is_empty());
        let a2 = ring("A2");
        let g = ReflectionGroupSpec::finite_linear(a2.datum());
        let s = a2.antisymmetrize(&w(&[1, 1]), &g, 100).unwrap();
        assert_eq!(s.len(), 6);
        assert_eq!(s.terms().values().filter(|c| c.is_positive()).count(), 3);
        let e7 = ring("E7");
        let g = ReflectionGroupSpec::finite_linear(e7.datum());
        assert!(matches!(e7.antisymmetrize(&e7.datum().rho(), &g, DEFAULT_GROUP_CAP), Err(Error::Capacity { .. })));
    }

    #[test]
    fn affine_antisymmetrization_alternates() {
        for code in ["A1", "A2", "C2"] {
            let r = ring(code);
            let d = r.datum();
            let k = 2;
            let m = k + d.dual_coxeter();
            let bound = 7;
            let lambda = d.fundamental(1);
            let s = r.antisymmetrize_affine(&lambda, m, Shift::integral(d.rho()), bound).unwrap();
            let g = ReflectionGroupSpec::kac_walton(d, k);
            assert!(s.coeff(&lambda).is_one());
            for (x, c) in s.terms() {
                for letter in 0..=d.rank() as u8 {
                    let y = d.apply_word(&[letter], x, &g);
                    if y.coords().iter().all(|c| c.abs() <= bound) {
                        assert_eq!(s.coeff(&y), -c.clone(), "{code} {x} via {letter}");
                    }
                }
                // Each term folds back to λ with its own sign.
                let f = d.straighten(x, &g).unwrap();
                assert_eq!((f.weight, BigInt::from(f.sign)), (lambda, c.clone()));
            }
            // A wall weight antisymmetrizes to zero.
            let wall = (k + 1) * d.fundamental(1);
            assert_eq!(d.straighten(&wall, &g).unwrap().sign, 0);
            let s = r.antisymmetrize_affine(&wall, m, Shift::integral(d.rho()), bound).unwrap();
            assert!(s.is_empty(), "{code}");
        }
    }

    #[test]
    fn induction_matches_antisymmetrization_ratio() {
        for code in ["A2", "G2"] {
            let r = ring(code);
            let d = r.datum();
            let lin = ReflectionGroupSpec::finite_linear(d);
            for a in -3..=3 {
                for b in -3..=3 {
                    let lambda = w(&[a, b]);
                    let num = r.antisymmetrize(&(lambda + d.rho()), &lin, 100).unwrap();
                    let ind = r.induct_to_g(&VirtualCharacter::irreducible(Chamber::Edge { vertex: 1 }, lambda));
                    if num.is_empty() {
                        assert!(ind.is_empty(), "{code} {lambda}");
                        continue;
                    }
                    // The unique strictly dominant exponent of A_{λ+ρ} is μ+ρ.
                    let dominant: Vec<_> =
                        num.terms().iter().filter(|(x, _)| x.coords().iter().all(|&c| c > 0)).collect();
                    assert_eq!(dominant.len(), 1);
                    let (top, sign) = dominant[0];
                    assert_eq!(ind.len(), 1);
                    let (mu, c) = ind.terms().iter().next().unwrap();
                    assert_eq!(*top, *mu + d.rho());
                    assert_eq!(sign, c);
                }
            }
        }
    }

    #[test]
    fn json_and_normalization() {
        let d = RootDatum::new("A2".parse().unwrap()).unwrap();
        let mut x = VirtualCharacter::zero(Chamber::Dominant);
        x.add_term(w(&[0, 1]), 1);
        x.add_term(w(&[2, 0]), -3);
        assert_eq!(x.display(&d), "-3*[2,0] + [0,1]");
        let n = x.sign_normalized(&d);
        assert_eq!(n.coeff(&w(&[2, 0])), BigInt::from(3));
        assert_eq!(
            serde_json::to_string(&n.to_json(&d)).unwrap(),
            r#"[{"coeff":-1,"weight":[0,1]},{"coeff":3,"weight":[2,0]}]"#
        );
        let bad = VirtualCharacter::irreducible(Chamber::Dominant, w(&[-1, 0]));
        assert!(bad.check(&d).is_err());
    }

    fn small() -> Vec<(CharacterRing, i64)> {
        vec![(ring("A1"), 5), (ring("A2"), 3), (ring("C2"), 2), (ring("G2"), 2)]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn tensor_is_commutative_and_associative(t in 0usize..4, c in proptest::collection::vec(0i64..6, 6)) {
            let rings = small();
            let (r, max) = &rings[t];
            let n = r.datum().rank();
            let pick = |i: usize| Weight::new(&c[i * 2..i * 2 + n].iter().map(|x| x % (max + 1)).collect::<Vec<_>>());
            let (x, y, z) = (
                VirtualCharacter::irreducible(Chamber::Dominant, pick(0)),
                VirtualCharacter::irreducible(Chamber::Dominant, pick(1)),
                VirtualCharacter::irreducible(Chamber::Dominant, pick(2)),
            );
            let xy = r.tensor(&x, &y).unwrap();
            prop_assert_eq!(&xy, &r.tensor(&y, &x).unwrap());
            let left = r.tensor(&xy, &z).unwrap();
            let right = r.tensor(&x, &r.tensor(&y, &z).unwrap()).unwrap();
            prop_assert_eq!(&left, &right);
            prop_assert_eq!(r.dimension(&xy), r.dimension(&x) * r.dimension(&y));
            prop_assert!(xy.terms().values().all(|c| c.is_positive()));
        }
    }
}
