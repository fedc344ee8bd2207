//! Kernels of the twisted induction d^{e,v} from an edge to its affine vertex.
//!
//! Each routine returns R[G]-module generators of ker d^{e,v} ⊂ R[Z_e] as
//! combinations of edge characters, optionally with one product term
//! χ·[θ]_e where χ is a G-character and θ spans the vertex basis.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::character::{Chamber, CharacterRing, VirtualCharacter};
use crate::error::{Error, Result};
use crate::root_data::RootDatum;
use crate::steinberg::AffineSteinbergBasis;
use crate::weight::Weight;
use crate::weyl::ReflectionGroupSpec;

/// Role of one source weight in the kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// Fixed by a wall of the vertex group; [λ]_e is in the kernel.
    Singular,
    /// Straightens to `partner` in the vertex basis.
    Paired { partner: Weight },
    /// Straightens to `partner`, matched by `coefficient`·[θ]_e.
    CentralPaired { partner: Weight, coefficient: Weight },
    /// Paired with its reflection in the level k+1 affine wall.
    OrthogonalPaired { partner: Weight },
    /// Level k+1 projection of a basis weight of matching parity.
    ProjectedSingular,
}

/// coeff·[character]·[theta]_e.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductTerm {
    pub coeff: BigInt,
    pub character: Weight,
    pub theta: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelElement {
    pub plain: VirtualCharacter,
    pub product: Option<ProductTerm>,
}

/// Counts for an orthogonal-edge kernel.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrthogonalStats {
    pub projected: usize,
    /// Projected weights that are already level k+1 basis weights.
    pub projected_in_basis: usize,
    pub singular: usize,
    pub above: usize,
    pub below: usize,
    /// Basis weights above level k+1 whose reflection is again a basis weight.
    pub reflecting: usize,
    pub pairs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelGenerators {
    pub vertex: usize,
    pub level: i64,
    pub elements: Vec<KernelElement>,
    pub classification: Vec<(Weight, Classification)>,
    pub orthogonal: Option<OrthogonalStats>,
}

impl KernelGenerators {
    pub fn count(&self, pred: impl Fn(&Classification) -> bool) -> usize {
        self.classification.iter().filter(|(_, c)| pred(c)).count()
    }

    pub fn classification_of(&self, w: &Weight) -> Option<&Classification> {
        self.classification.iter().find(|(x, _)| x == w).map(|(_, c)| c)
    }
}

fn edge(v: usize) -> Chamber {
    Chamber::Edge { vertex: v }
}

fn plain_pair(v: usize, a: Weight, b: Weight, cb: i64) -> VirtualCharacter {
    let mut x = VirtualCharacter::irreducible(edge(v), a);
    x.add_term(b, cb);
    x
}

/// Singular weights contribute [λ]_e; others [λ]_e − ε·[v·λ]_e, which
/// requires v·λ to be a vertex basis weight.
pub fn kernel_induction_closed(datum: &RootDatum, ab: &AffineSteinbergBasis) -> Result<KernelGenerators> {
    let (v, k) = (ab.vertex, ab.level);
    if ab.edge_only {
        return Err(Error::Unsupported("edge-only basis has no vertex part".into()));
    }
    let g = ReflectionGroupSpec::vertex(datum, v, k)?;
    let mut elements = Vec::new();
    let mut classification = Vec::new();
    for lambda in ab.complement() {
        let s = datum.straighten(&lambda, &g)?;
        if s.sign == 0 {
            elements.push(KernelElement { plain: VirtualCharacter::irreducible(edge(v), lambda), product: None });
            classification.push((lambda, Classification::Singular));
        } else if ab.ab_v.contains(&s.weight) {
            let plain = plain_pair(v, lambda, s.weight, -(s.sign as i64));
            elements.push(KernelElement { plain, product: None });
            classification.push((lambda, Classification::Paired { partner: s.weight }));
        } else {
            return Err(Error::ClosureViolation(lambda));
        }
    }
    Ok(KernelGenerators { vertex: v, level: k, elements, classification, orthogonal: None })
}

/// For Z_v = G: nonsingular λ contribute [λ]_e − ε·[w(v·λ − θ)]·[θ]_e.
pub fn kernel_central_vertex(datum: &RootDatum, ab: &AffineSteinbergBasis) -> Result<KernelGenerators> {
    let (v, k) = (ab.vertex, ab.level);
    if ab.ab_v.len() != 1 {
        return Err(Error::Unsupported(format!("central vertex needs one vertex weight, found {}", ab.ab_v.len())));
    }
    let theta = ab.ab_v[0];
    let g = ReflectionGroupSpec::vertex(datum, v, k)?;
    let mut elements = Vec::new();
    let mut classification = Vec::new();
    for lambda in ab.complement() {
        let s = datum.straighten(&lambda, &g)?;
        if s.sign == 0 {
            elements.push(KernelElement { plain: VirtualCharacter::irreducible(edge(v), lambda), product: None });
            classification.push((lambda, Classification::Singular));
        } else {
            let (coefficient, _) = datum.dominant_conjugate(&(s.weight - theta));
            let product = ProductTerm { coeff: BigInt::from(-(s.sign as i64)), character: coefficient, theta };
            elements.push(KernelElement {
                plain: VirtualCharacter::irreducible(edge(v), lambda),
                product: Some(product),
            });
            classification.push((lambda, Classification::CentralPaired { partner: s.weight, coefficient }));
        }
    }
    Ok(KernelGenerators { vertex: v, level: k, elements, classification, orthogonal: None })
}

/// Kernel for an edge perpendicular to the affine wall: projected weights of
/// level k+1, singular basis weights, and pairs [λ]_e + [w_{(k+1)·α0}λ]_e.
pub fn kernel_orthogonal_edge(datum: &RootDatum, basis: &[Weight], v: usize, k: i64) -> Result<KernelGenerators> {
    let n = datum.rank();
    if v == 0 || v > n {
        return Err(Error::InvalidNode { node: v, rank: n });
    }
    let theta = datum.highest_root();
    if (0..n).any(|j| j + 1 != v && theta[j] != 0) || datum.comarks()[v - 1] != 2 {
        return Err(Error::NotPerpendicular(v));
    }
    let lv = datum.fundamental(v);
    let singular_level = k + 1;
    let mut stats = OrthogonalStats::default();
    let mut elements = Vec::new();
    let mut classification = Vec::new();
    let in_basis: BTreeSet<Weight> = basis.iter().copied().collect();

    let mut seen_pairs: BTreeSet<(Weight, Weight)> = BTreeSet::new();
    for &lambda in basis {
        let level = datum.level(&lambda);
        if level == singular_level {
            stats.singular += 1;
            classification.push((lambda, Classification::Singular));
            continue;
        }
        let partner = datum.affine_reflect(singular_level, &lambda);
        if level > singular_level {
            stats.above += 1;
            if in_basis.contains(&partner) {
                stats.reflecting += 1;
            }
        } else {
            stats.below += 1;
        }
        classification.push((lambda, Classification::OrthogonalPaired { partner }));
        let key = if lambda < partner { (lambda, partner) } else { (partner, lambda) };
        if seen_pairs.insert(key) {
            elements.push(KernelElement { plain: plain_pair(v, lambda, partner, 1), product: None });
        }
    }
    stats.pairs = seen_pairs.len();

    let mut projected: Vec<Weight> = Vec::new();
    for &lambda in basis {
        let diff = singular_level - datum.level(&lambda);
        if diff.rem_euclid(2) == 0 {
            let p = lambda + (diff / 2) * lv;
            if !projected.contains(&p) {
                projected.push(p);
            }
        }
    }
    stats.projected = projected.len();
    for p in projected {
        if in_basis.contains(&p) {
            stats.projected_in_basis += 1;
        } else {
            classification.push((p, Classification::ProjectedSingular));
        }
        elements.push(KernelElement { plain: VirtualCharacter::irreducible(edge(v), p), product: None });
    }
    Ok(KernelGenerators { vertex: v, level: k, elements, classification, orthogonal: Some(stats) })
}

/// Pushes every element through term-by-term vertex straightening and
/// confirms the result vanishes. Product terms expand over the weights of χ.
pub fn check_kernel_soundness(ring: &CharacterRing, kernel: &KernelGenerators) -> Result<()> {
    let datum = ring.datum();
    let g = ReflectionGroupSpec::vertex(datum, kernel.vertex, kernel.level)?;
    for el in &kernel.elements {
        let mut image: BTreeMap<Weight, BigInt> = BTreeMap::new();
        let mut push = |w: &Weight, c: BigInt| -> Result<()> {
            let s = datum.straighten(w, &g)?;
            if s.sign != 0 {
                *image.entry(s.weight).or_insert_with(BigInt::zero) += c * BigInt::from(s.sign);
            }
            Ok(())
        };
        for (w, c) in el.plain.terms() {
            push(w, c.clone())?;
        }
        if let Some(p) = &el.product {
            for (nu, m) in ring.weight_list(&p.character)? {
                push(&(p.theta + nu), &p.coeff * BigInt::from(m))?;
            }
        }
        if let Some((w, c)) = image.iter().find(|(_, c)| !c.is_zero()) {
            return Err(Error::UnsoundKernel(format!(
                "{} leaves coefficient {c} on {w}",
                el.plain.display(datum)
            )));
        }
    }
    Ok(())
}

/// d^{e,o} of one kernel element.
pub fn induct_element(ring: &CharacterRing, el: &KernelElement) -> Result<VirtualCharacter> {
    let mut out = ring.induct_to_g(&el.plain);
    if let Some(p) = &el.product {
        let theta = ring.induct_to_g(&VirtualCharacter::irreducible(el.plain.chamber(), p.theta));
        let chi = VirtualCharacter::irreducible(Chamber::Dominant, p.character);
        let prod = ring.tensor(&chi, &theta)?;
        out.add_assign(&prod.scaled(&p.coeff));
    }
    Ok(out)
}
