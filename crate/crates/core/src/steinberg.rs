//! Steinberg bases and their affine variants.
//!
//! For a set S of simple nodes, W^{S+} is the set of minimal length coset
//! representatives of W/W_S. Each w contributes the basis weight w⁻¹λ_w, where
//! λ_w sums the fundamental weights of the left descents of w.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::root_data::{DiagramMap, Family, RootDatum};
use crate::weight::Weight;
use crate::weyl::WeylWord;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinbergEntry {
    pub word: WeylWord,
    pub positive_weight: Weight,
    pub basis_weight: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinbergBasis {
    pub subset: Vec<usize>,
    pub entries: Vec<SteinbergEntry>,
}

impl SteinbergBasis {
    pub fn basis_weights(&self) -> Vec<Weight> {
        self.entries.iter().map(|e| e.basis_weight).collect()
    }
}

/// How AB_e is obtained from B_e.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transform {
    /// Linear part of an affine diagram automorphism exchanging node 0 and v.
    Diagram(DiagramMap),
    /// The reflection w_0 = w_{0·α0} in the highest root.
    ReflectTheta,
    /// No reflection; translation only.
    ShiftOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSteinbergBasis {
    pub level: i64,
    pub vertex: usize,
    pub basis: SteinbergBasis,
    pub ab_e: Vec<Weight>,
    /// AB_e ∩ C_v; empty for edge-only results.
    pub ab_v: Vec<Weight>,
    pub transform: Transform,
    pub shift: Weight,
    /// Set when AB_e is only a Steinberg basis for Z_e.
    pub edge_only: bool,
}

impl AffineSteinbergBasis {
    pub fn describe(&self) -> String {
        let t = match &self.transform {
            Transform::Diagram(m) => format!("diagram automorphism {:?}", m.perm),
            Transform::ReflectTheta => "reflection w_0".to_string(),
            Transform::ShiftOnly => "identity".to_string(),
        };
        format!("{t} then shift by {}{}", self.shift, if self.edge_only { " (edge-only)" } else { "" })
    }

    /// AB_e ∖ AB_v in basis order.
    pub fn complement(&self) -> Vec<Weight> {
        self.ab_e.iter().filter(|w| !self.ab_v.contains(w)).copied().collect()
    }
}

/// The vertex used for each type: the node exchanged with the affine node, or
/// the node whose edge is perpendicular to the affine wall.
pub fn fixed_vertex(datum: &RootDatum) -> usize {
    let t = datum.lie_type();
    match (t.family, t.rank) {
        (Family::E, 7) => 7,
        (Family::E, 8) => 8,
        (Family::G, _) => 2,
        _ => 1,
    }
}

impl RootDatum {
    /// Minimal length representatives of W/W_S, breadth first by length, each
    /// level sorted by word, each element carrying its lexicographically
    /// smallest reduced word among those extending a listed shorter word.
    pub fn positive_weyl_group(&self, subset: &[usize]) -> Result<Vec<WeylWord>> {
        Ok(self.positive_weyl_group_with_points(subset)?.into_iter().map(|(w, _)| w).collect())
    }

    fn positive_weyl_group_with_points(&self, subset: &[usize]) -> Result<Vec<(WeylWord, Weight)>> {
        let n = self.rank();
        if let Some(&bad) = subset.iter().find(|&&j| j == 0 || j > n) {
            return Err(Error::InvalidNode { node: bad, rank: n });
        }
        // The stabilizer of Σ_{j∉S} λ_j is W_S; its orbit points index W/W_S.
        let mut start = self.zero();
        for j in 1..=n {
            if !subset.contains(&j) {
                start += self.fundamental(j);
            }
        }
        let mut seen: HashMap<Weight, ()> = HashMap::new();
        seen.insert(start, ());
        let mut out: Vec<(WeylWord, Weight)> = vec![(Vec::new(), start)];
        let mut level: Vec<(WeylWord, Weight)> = out.clone();
        while !level.is_empty() {
            let mut next: Vec<(WeylWord, Weight)> = Vec::new();
            for i in 1..=n {
                for (word, x) in &level {
                    if x[i - 1] > 0 {
                        let y = self.reflect(i, x);
                        if seen.insert(y, ()).is_none() {
                            let mut w = vec![i as u8];
                            w.extend_from_slice(word);
                            next.push((w, y));
                        }
                    }
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            level = next;
        }
        Ok(out)
    }

    /// λ_w: the sum of λ_i over i with ℓ(w_i w) < ℓ(w).
    pub fn descent_weight(&self, word: &[u8]) -> Weight {
        let wr = self.act(word, &self.rho());
        let mut out = self.zero();
        for i in 0..self.rank() {
            if wr[i] < 0 {
                out += self.fundamental(i + 1);
            }
        }
        out
    }

    pub fn inverse_act(&self, word: &[u8], lambda: &Weight) -> Weight {
        word.iter().fold(*lambda, |x, &i| self.reflect(i as usize, &x))
    }

    pub fn steinberg_basis(&self, subset: &[usize]) -> Result<SteinbergBasis> {
        let entries = self
            .positive_weyl_group(subset)?
            .into_iter()
            .map(|word| {
                let positive_weight = self.descent_weight(&word);
                let basis_weight = self.inverse_act(&word, &positive_weight);
                SteinbergEntry { word, positive_weight, basis_weight }
            })
            .collect();
        let mut s: Vec<usize> = subset.to_vec();
        s.sort_unstable();
        Ok(SteinbergBasis { subset: s, entries })
    }

    /// Level k affine Steinberg basis for the edge and vertex centralizers at v.
    pub fn affine_steinberg_basis(&self, v: usize, k: i64) -> Result<AffineSteinbergBasis> {
        let n = self.rank();
        if v == 0 || v > n {
            return Err(Error::InvalidNode { node: v, rank: n });
        }
        let expected = fixed_vertex(self);
        if v != expected {
            return Err(Error::Unsupported(format!(
                "vertex {v} for {}: only vertex {expected} is supported",
                self.lie_type()
            )));
        }
        if k < 1 {
            return Err(Error::Unsupported(format!("level {k} must be at least 1")));
        }
        let subset: Vec<usize> = (1..=n).filter(|&j| j != v).collect();
        let basis = self.steinberg_basis(&subset)?;
        let a = self.comarks()[v - 1];
        let lv = self.fundamental(v);

        let (transform, shift, edge_only) = match self.affine_automorphism_swapping(v) {
            Ok(map) => {
                debug_assert_eq!(a, 1);
                (Transform::Diagram(map), k * lv, false)
            }
            Err(Error::CaseTwoVertex { .. }) => {
                if k % a == 0 {
                    (Transform::ReflectTheta, (k / a) * lv, false)
                } else if self.lie_type().family == Family::G {
                    (Transform::ShiftOnly, ((k + 1) / 2) * lv, false)
                } else {
                    (Transform::ReflectTheta, ((k + 1) / 2) * lv, true)
                }
            }
            Err(e) => return Err(e),
        };
        let ab_e: Vec<Weight> = basis
            .entries
            .iter()
            .map(|e| {
                let t = match &transform {
                    Transform::Diagram(m) => m.apply(&e.basis_weight),
                    Transform::ReflectTheta => self.affine_reflect(0, &e.basis_weight),
                    Transform::ShiftOnly => e.basis_weight,
                };
                t + shift
            })
            .collect();
        let ab_v = if edge_only {
            Vec::new()
        } else {
            ab_e.iter().filter(|w| self.in_vertex_chamber(w, v, k)).copied().collect()
        };
        Ok(AffineSteinbergBasis { level: k, vertex: v, basis, ab_e, ab_v, transform, shift, edge_only })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::all_types;

    fn datum(code: &str) -> RootDatum {
        RootDatum::new(code.parse().unwrap()).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c)
    }

    fn is_positive_root(d: &RootDatum, x: &Weight) -> bool {
        d.positive_roots_fund().contains(x)
    }

    #[test]
    fn g2_words() {
        let g2 = datum("G2");
        let words = g2.positive_weyl_group(&[1]).unwrap();
        let expect: Vec<WeylWord> =
            vec![vec![], vec![2], vec![1, 2], vec![2, 1, 2], vec![1, 2, 1, 2], vec![2, 1, 2, 1, 2]];
        assert_eq!(words, expect);
    }

    #[test]
    fn coset_counts_and_reducedness() {
        for t in all_types(8) {
            let d = RootDatum::new(t).unwrap();
            let n = d.rank();
            for v in 1..=n {
                let subset: Vec<usize> = (1..=n).filter(|&j| j != v).collect();
                let words = d.positive_weyl_group(&subset).unwrap();
                let parabolic = {
                    // |W_S| from the orbit count of the complementary group.
                    let g = crate::weyl::ReflectionGroupSpec {
                        kind: crate::weyl::GroupKind::FiniteParabolic(subset.clone()),
                        shift: crate::weyl::Shift::integral(d.zero()),
                    };
                    if d.weyl_order() <= 2_000_000 {
                        Some(d.group_elements(&g, 2_000_000).unwrap().len() as u128)
                    } else {
                        None
                    }
                };
                if let Some(p) = parabolic {
                    assert_eq!(words.len() as u128 * p, d.weyl_order(), "{t} v={v}");
                }
                if n <= 7 || v == n {
                    for word in &words {
                        for &j in &subset {
                            assert!(is_positive_root(&d, &d.act(word, &d.simple_root(j))), "{t} {word:?}");
                        }
                        let inversions = d
                            .positive_roots_fund()
                            .iter()
                            .filter(|b| !is_positive_root(&d, &d.act(word, b)))
                            .count();
                        assert_eq!(inversions, word.len());
                    }
                }
            }
        }
    }

    #[test]
    fn exceptional_counts() {
        for (code, v, count) in [("G2", 2, 6), ("F4", 1, 24), ("E6", 1, 27), ("E7", 7, 56), ("E8", 8, 240)] {
            let d = datum(code);
            let subset: Vec<usize> = (1..=d.rank()).filter(|&j| j != v).collect();
            assert_eq!(d.positive_weyl_group(&subset).unwrap().len(), count, "{code}");
        }
    }

    #[test]
    fn basis_weights_are_distinct_and_in_chamber() {
        for code in ["A3", "B4", "C3", "D5", "G2", "F4", "E6", "E7", "E8"] {
            let d = datum(code);
            let v = fixed_vertex(&d);
            let subset: Vec<usize> = (1..=d.rank()).filter(|&j| j != v).collect();
            let b = d.steinberg_basis(&subset).unwrap();
            assert_eq!(b.entries[0].positive_weight, d.zero());
            let ws = b.basis_weights();
            let mut sorted = ws.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), ws.len(), "{code}");
            assert!(ws.iter().all(|x| d.in_edge_chamber(x, v)), "{code}");
        }
    }

    #[test]
    fn f4_second_entry() {
        let f4 = datum("F4");
        let b = f4.steinberg_basis(&[2, 3, 4]).unwrap();
        let e = &b.entries[1];
        assert_eq!(e.word, vec![1]);
        assert_eq!(e.positive_weight, f4.fundamental(1));
        assert_eq!(e.basis_weight, f4.reflect(1, &f4.fundamental(1)));
    }

    #[test]
    fn affine_bases() {
        let a2 = datum("A2");
        for k in 1..5 {
            let ab = a2.affine_steinberg_basis(1, k).unwrap();
            let mut got = ab.ab_e.clone();
            got.sort();
            let mut expect = vec![w(&[k, 0]), w(&[k, 1]), w(&[k + 1, 0])];
            expect.sort();
            assert_eq!(got, expect);
            assert_eq!(ab.ab_v, vec![w(&[k, 0])]);
        }
        let g2 = datum("G2");
        for k in [2, 4, 6] {
            let ab = g2.affine_steinberg_basis(2, k).unwrap();
            let l = k / 2;
            let mut got = ab.complement();
            got.sort();
            let mut expect = vec![w(&[3, l - 1]), w(&[1, l]), w(&[0, l + 1])];
            expect.sort();
            assert_eq!(got, expect, "k={k}");
        }
        let g2_odd = g2.affine_steinberg_basis(2, 5).unwrap();
        assert_eq!(g2_odd.transform, Transform::ShiftOnly);
        let mut v = g2_odd.ab_v.clone();
        v.sort();
        assert_eq!(v, vec![w(&[0, 2]), w(&[1, 2]), w(&[3, 1])]);
        let f4 = datum("F4");
        let ab = f4.affine_steinberg_basis(1, 6).unwrap();
        assert_eq!(ab.ab_e.len(), 24);
        assert_eq!(ab.ab_e[0], w(&[3, 0, 0, 0]));
        assert_eq!(*ab.ab_e.last().unwrap(), w(&[4, 0, 0, 0]));
        let odd = f4.affine_steinberg_basis(1, 7).unwrap();
        assert!(odd.edge_only && odd.ab_v.is_empty());
        assert!(matches!(f4.affine_steinberg_basis(2, 6), Err(Error::Unsupported(_))));
    }
}
