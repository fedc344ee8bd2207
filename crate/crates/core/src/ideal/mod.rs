//! Generators of the fusion ideal I_k ⊂ R[G].
//!
//! The derived route builds an affine Steinberg basis at a fixed vertex,
//! computes the kernel of twisted induction to that vertex and inducts the
//! kernel to G. The table route instantiates closed-form lists.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::character::{Chamber, CharacterRing, VirtualCharacter};
use crate::error::{Error, Result};
use crate::root_data::{Family, LieType, RootDatum};
use crate::steinberg::{fixed_vertex, AffineSteinbergBasis};
use crate::weight::Weight;
use crate::weyl::ReflectionGroupSpec;

pub mod kernel;
pub mod rows;
pub mod tables;

pub use kernel::{
    check_kernel_soundness, induct_element, kernel_central_vertex, kernel_induction_closed, kernel_orthogonal_edge,
    Classification, KernelElement, KernelGenerators, OrthogonalStats, ProductTerm,
};
pub use tables::{classical_rows, instantiate_row, level_bound, rows_for, theorem1_generators};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Derived,
    Table(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Derived => write!(f, "derive"),
            Provenance::Table(_) => write!(f, "table"),
        }
    }
}

/// Sign-normalized, duplicate-free, nonzero generators over the dominant chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub lie_type: LieType,
    pub level: i64,
    pub generators: Vec<VirtualCharacter>,
    pub provenance: Provenance,
    /// False when produced outside the range where the closed forms hold.
    pub golden: bool,
}

impl GeneratorSet {
    pub fn new(
        datum: &RootDatum,
        level: i64,
        raw: Vec<VirtualCharacter>,
        provenance: Provenance,
        golden: bool,
    ) -> Self {
        let mut seen = HashSet::new();
        let mut generators = Vec::new();
        for g in raw {
            if g.is_empty() {
                continue;
            }
            let g = g.sign_normalized(datum);
            if seen.insert(g.clone()) {
                generators.push(g);
            }
        }
        GeneratorSet { lie_type: datum.lie_type(), level, generators, provenance, golden }
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Canonical sorted form for multiset comparison.
    pub fn multiset(&self, datum: &RootDatum) -> Vec<Vec<(Weight, BigInt)>> {
        let mut v: Vec<Vec<(Weight, BigInt)>> = self.generators.iter().map(|g| g.sorted_terms(datum)).collect();
        v.sort();
        v
    }

    /// Generators of `self` missing from `other`, and of `other` missing from `self`.
    pub fn difference(&self, other: &GeneratorSet) -> (Vec<VirtualCharacter>, Vec<VirtualCharacter>) {
        let a: HashSet<&VirtualCharacter> = self.generators.iter().collect();
        let b: HashSet<&VirtualCharacter> = other.generators.iter().collect();
        let only_a = self.generators.iter().filter(|g| !b.contains(g)).cloned().collect();
        let only_b = other.generators.iter().filter(|g| !a.contains(g)).cloned().collect();
        (only_a, only_b)
    }

    pub fn same_multiset(&self, other: &GeneratorSet, datum: &RootDatum) -> bool {
        self.multiset(datum) == other.multiset(datum)
    }

    pub fn to_json(&self, datum: &RootDatum) -> Value {
        let mut gens: Vec<&VirtualCharacter> = self.generators.iter().collect();
        gens.sort_by_key(|g| g.sorted_terms(datum));
        let mut v = json!({
            "schema": crate::SCHEMA,
            "type": self.lie_type.code(),
            "rank": self.lie_type.rank,
            "level": self.level,
            "source": self.provenance.to_string(),
            "golden": self.golden,
            "generators": gens.iter().map(|g| g.to_json(datum)).collect::<Vec<_>>(),
        });
        if let Provenance::Table(tag) = &self.provenance {
            v["table"] = json!(tag);
        }
        v
    }
}

/// Which kernel routine applies to a type at a level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelRoute {
    InductionClosed,
    Central,
    Orthogonal,
}

pub fn kernel_route(t: LieType, k: i64) -> KernelRoute {
    match (t.family, t.rank) {
        (Family::E, 6) | (Family::E, 7) => KernelRoute::Central,
        (Family::F, _) => KernelRoute::Orthogonal,
        (Family::E, 8) if k % 2 != 0 => KernelRoute::Orthogonal,
        _ => KernelRoute::InductionClosed,
    }
}

/// Affine Steinberg basis and checked kernel at the fixed vertex.
pub fn derive_kernel(ring: &CharacterRing, k: i64) -> Result<(AffineSteinbergBasis, KernelGenerators)> {
    let datum = ring.datum();
    let v = fixed_vertex(datum);
    let ab = datum.affine_steinberg_basis(v, k)?;
    let kernel = match kernel_route(datum.lie_type(), k) {
        KernelRoute::InductionClosed => kernel_induction_closed(datum, &ab)?,
        KernelRoute::Central => kernel_central_vertex(datum, &ab)?,
        KernelRoute::Orthogonal => kernel_orthogonal_edge(datum, &ab.ab_e, v, k)?,
    };
    check_kernel_soundness(ring, &kernel)?;
    Ok((ab, kernel))
}

/// Induction to G of the kernel of twisted induction to the fixed vertex.
pub fn derive_fusion_ideal(ring: &CharacterRing, k: i64) -> Result<GeneratorSet> {
    let (_, kernel) = derive_kernel(ring, k)?;
    let raw = kernel.elements.iter().map(|el| induct_element(ring, el)).collect::<Result<Vec<_>>>()?;
    Ok(GeneratorSet::new(ring.datum(), k, raw, Provenance::Derived, true))
}

/// Z-basis of I_k ∩ span{[λ] : level(λ) ≤ L}: [λ] for singular λ and
/// [λ] − ε·[a·λ] otherwise, over dominant λ with k < level(λ) ≤ L.
pub fn classical_ideal_truncation(datum: &RootDatum, k: i64, big_l: i64) -> Result<Vec<VirtualCharacter>> {
    if k < 0 {
        return Err(Error::Unsupported(format!("level {k} must be nonnegative")));
    }
    let g = ReflectionGroupSpec::kac_walton(datum, k);
    let mut out = Vec::new();
    for lambda in datum.enumerate_alcove(big_l) {
        if datum.level(&lambda) <= k {
            continue;
        }
        let s = datum.straighten(&lambda, &g)?;
        let mut x = VirtualCharacter::irreducible(Chamber::Dominant, lambda);
        if s.sign != 0 {
            x.add_term(s.weight, -(s.sign as i64));
        }
        out.push(x);
    }
    Ok(out)
}
