//! Shared helpers for integration tests.
#![allow(dead_code)]

pub mod printed;

use std::sync::Arc;

use fusion_core::{CharacterRing, RootDatum, Weight};

pub fn ring(code: &str) -> CharacterRing {
    CharacterRing::new(Arc::new(RootDatum::new(code.parse().unwrap()).unwrap()))
}

/// One printed coordinate: an integer, `k±n`, `l±n` with l = k/2, or `<k±n>`
/// meaning (k±n)/2. Returns None when the value is not an integer.
pub fn coordinate(tok: &str, k: i64) -> Option<i64> {
    let tok = tok.trim();
    if let Ok(v) = tok.parse() {
        return Some(v);
    }
    let (halve, body) = match tok.strip_prefix('<').and_then(|t| t.strip_suffix('>')) {
        Some(inner) => (true, inner),
        None => (false, tok),
    };
    let mut chars = body.chars();
    let base = match chars.next()? {
        'k' => k,
        'l' if k % 2 == 0 => k / 2,
        _ => return None,
    };
    let rest: String = chars.collect();
    let value = base + if rest.is_empty() { 0 } else { rest.parse::<i64>().ok()? };
    match halve {
        false => Some(value),
        true if value % 2 == 0 => Some(value / 2),
        true => None,
    }
}

/// A printed weight `[a,b,...]` at level k.
pub fn printed_weight(s: &str, k: i64) -> Weight {
    let body = s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).expect("bracketed weight");
    let coords: Vec<i64> = body
        .split(',')
        .map(|t| coordinate(t, k).unwrap_or_else(|| panic!("{t} at level {k}")))
        .collect();
    Weight::new(&coords)
}

/// Fundamental-weight coordinates of s_i x, 1-based i, from the Cartan matrix alone.
pub fn reflect(cartan: &[Vec<i64>], i: usize, x: &[i64]) -> Vec<i64> {
    let c = x[i - 1];
    (0..x.len()).map(|r| x[r] - c * cartan[r][i - 1]).collect()
}

/// w·x for a word read right to left.
pub fn act(cartan: &[Vec<i64>], word: &[u8], x: &[i64]) -> Vec<i64> {
    word.iter().rev().fold(x.to_vec(), |y, &i| reflect(cartan, i as usize, &y))
}

/// w⁻¹·x.
pub fn act_inverse(cartan: &[Vec<i64>], word: &[u8], x: &[i64]) -> Vec<i64> {
    word.iter().fold(x.to_vec(), |y, &i| reflect(cartan, i as usize, &y))
}

/// A word is reduced iff each letter, applied to the suffix image of ρ,
/// meets a positive coordinate.
pub fn is_reduced(cartan: &[Vec<i64>], word: &[u8]) -> bool {
    let mut x = vec![1; cartan.len()];
    for &i in word.iter().rev() {
        if x[i as usize - 1] <= 0 {
            return false;
        }
        x = reflect(cartan, i as usize, &x);
    }
    true
}

/// Number of dominant weights with Σ a∨_i λ_i ≤ k, by direct enumeration.
pub fn count_alcove(comarks: &[i64], k: i64) -> usize {
    fn go(comarks: &[i64], budget: i64) -> usize {
        match comarks.split_first() {
            None => 1,
            Some((&a, rest)) => (0..=budget / a).map(|c| go(rest, budget - a * c)).sum(),
        }
    }
    go(comarks, k)
}
