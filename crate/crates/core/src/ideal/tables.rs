//! Closed-form generator lists of the fusion ideal, instantiated at a level.

use num_bigint::BigInt;

use super::rows;
use super::{GeneratorSet, Provenance};
use crate::character::{Chamber, CharacterRing, VirtualCharacter};
use crate::error::{Error, Result};
use crate::root_data::{Family, LieType, RootDatum};
use crate::weight::Weight;

/// Smallest level at which the exceptional lists hold verbatim, minus one.
pub fn level_bound(t: LieType) -> Option<i64> {
    match (t.family, t.rank) {
        (Family::F, _) => Some(5),
        (Family::E, 6) => Some(1),
        (Family::E, 7) => Some(3),
        (Family::E, 8) => Some(19),
        _ => None,
    }
}

/// The symbolic rows for an exceptional type at the parity of k.
pub fn rows_for(t: LieType, k: i64) -> Option<(&'static str, &'static [&'static str])> {
    let even = k % 2 == 0;
    Some(match (t.family, t.rank, even) {
        (Family::G, _, true) => ("G2-even", rows::G2_EVEN),
        (Family::G, _, false) => ("G2-odd", rows::G2_ODD),
        (Family::F, _, true) => ("F4-even", rows::F4_EVEN),
        (Family::F, _, false) => ("F4-odd", rows::F4_ODD),
        (Family::E, 6, _) => ("E6", rows::E6),
        (Family::E, 7, _) => ("E7", rows::E7),
        (Family::E, 8, true) => ("E8-even", rows::E8_EVEN),
        (Family::E, 8, false) => ("E8-odd", rows::E8_ODD),
        _ => return None,
    })
}

/// Generator weight lists for the classical families; each inner list is a
/// sum of irreducibles with coefficient one.
pub fn classical_rows(t: LieType, k: i64) -> Option<Vec<Vec<Weight>>> {
    let n = t.rank;
    let l = |i: usize| Weight::fundamental(n, i);
    let kl1 = k * l(1);
    let mut rows: Vec<Vec<Weight>> = Vec::new();
    match t.family {
        Family::A | Family::C => {
            for j in (2..=n).rev() {
                rows.push(vec![kl1 + l(j)]);
            }
        }
        Family::B => {
            for j in 2..n {
                rows.push(vec![(k - 1) * l(1) + l(j)]);
            }
            rows.push(vec![(k - 1) * l(1) + 2 * l(n)]);
            for j in (3..=n).rev() {
                rows.push(vec![kl1 + l(j)]);
            }
            rows.push(vec![kl1 + l(2), kl1]);
        }
        Family::D => {
            for j in 2..n - 1 {
                rows.push(vec![(k - 1) * l(1) + l(j)]);
            }
            rows.push(vec![(k - 1) * l(1) + l(n - 1) + l(n)]);
            rows.push(vec![kl1 + l(n)]);
            rows.push(vec![kl1 + l(n - 1)]);
            rows.push(vec![kl1 + l(n - 1) + l(n)]);
            for j in (3..=n - 2).rev() {
                rows.push(vec![kl1 + l(j)]);
            }
            rows.push(vec![kl1 + l(2), kl1]);
        }
        _ => return None,
    }
    rows.push(vec![(k + 1) * l(1)]);
    Some(rows)
}

/// Generators of the level k fusion ideal from the closed-form lists.
///
/// Exceptional lists hold only above a level bound. With `experimental` set,
/// the bound is ignored, terms with a coordinate below −1 are straightened
/// into the dominant chamber, and the result is marked non-golden.
pub fn theorem1_generators(ring: &CharacterRing, k: i64, experimental: bool) -> Result<GeneratorSet> {
    let datum = ring.datum();
    let t = datum.lie_type();
    if k < 1 {
        return Err(Error::Unsupported(format!("level {k} must be at least 1")));
    }
    let mut golden = true;
    if let Some(bound) = level_bound(t) {
        if k <= bound {
            if !experimental {
                return Err(Error::BelowBound { lie_type: t.code(), level: k, bound });
            }
            golden = false;
        }
    }
    let (tag, generators) = if let Some(rows) = classical_rows(t, k) {
        let gens = rows
            .into_iter()
            .map(|ws| {
                let mut x = VirtualCharacter::zero(Chamber::Dominant);
                for w in ws {
                    x.add_term(w, 1);
                }
                x
            })
            .collect();
        (format!("{}-closed-form", t.code()), gens)
    } else {
        let (tag, rows) = rows_for(t, k).ok_or_else(|| Error::Unsupported(format!("no list for {t}")))?;
        let mut gens = Vec::with_capacity(rows.len());
        for row in rows {
            let (x, clean) = instantiate_row(ring, row, k, experimental)?;
            golden &= clean;
            gens.push(x);
        }
        (tag.to_string(), gens)
    };
    Ok(GeneratorSet::new(datum, k, generators, Provenance::Table(tag), golden))
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Factor {
    Plain,
    Times(Multiplier),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Multiplier {
    Nu,
    Mu,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Term {
    sign: i64,
    weight: Option<Vec<String>>,
    factor: Factor,
}

fn parse_row(row: &str) -> Result<Vec<Term>> {
    let s: String = row.chars().filter(|c| !c.is_whitespace()).collect();
    let b = s.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    while i < b.len() {
        let mut sign = 1;
        if b[i] == b'+' || b[i] == b'-' {
            if b[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if !out.is_empty() {
            return Err(Error::Parse(format!("expected '+' or '-' at byte {i} of {row:?}")));
        }
        if s[i..].starts_with("nu") || s[i..].starts_with("mu") {
            let m = if s[i..].starts_with("nu") { Multiplier::Nu } else { Multiplier::Mu };
            out.push(Term { sign, weight: None, factor: Factor::Times(m) });
            i += 2;
            continue;
        }
        if b.get(i) != Some(&b'[') {
            return Err(Error::Parse(format!("expected '[' at byte {i} of {row:?}")));
        }
        let close = s[i..].find(']').ok_or_else(|| Error::Parse(format!("unclosed bracket in {row:?}")))? + i;
        let coords: Vec<String> = s[i + 1..close].split(',').map(str::to_string).collect();
        i = close + 1;
        let mut factor = Factor::Plain;
        if b.get(i) == Some(&b'*') {
            let rest = &s[i + 1..];
            factor = if rest.starts_with("nu") {
                Factor::Times(Multiplier::Nu)
            } else if rest.starts_with("mu") {
                Factor::Times(Multiplier::Mu)
            } else {
                return Err(Error::Parse(format!("unknown factor after '*' in {row:?}")));
            };
            i += 3;
        }
        out.push(Term { sign, weight: Some(coords), factor });
    }
    if out.is_empty() {
        return Err(Error::Parse("empty row".into()));
    }
    Ok(out)
}

/// Evaluates `k`, `l`, `<k±m>` or an integer, each optionally followed by ±m.
fn eval_coord(tok: &str, k: i64) -> Result<i64> {
    let bad = || Error::Parse(format!("bad coordinate {tok:?}"));
    if let Ok(v) = tok.parse::<i64>() {
        return Ok(v);
    }
    let (halved, body) = match tok.strip_prefix('<') {
        Some(rest) => (true, rest.strip_suffix('>').ok_or_else(bad)?),
        None => (false, tok),
    };
    let (head, offset) = match body.find(['+', '-']) {
        Some(p) => (&body[..p], body[p..].parse::<i64>().map_err(|_| bad())?),
        None => (body, 0),
    };
    let base = match head {
        "k" => k,
        "l" if !halved => {
            if k % 2 != 0 {
                return Err(Error::Parity(format!("'l' needs even level, got {k}")));
            }
            k / 2
        }
        _ => return Err(bad()),
    };
    let v = base + offset;
    if halved {
        if v % 2 != 0 {
            return Err(Error::Parity(format!("{tok} at level {k} is not an integer")));
        }
        Ok(v / 2)
    } else {
        Ok(v)
    }
}

fn multiplier_weight(datum: &RootDatum, m: Multiplier, k: i64) -> Result<Weight> {
    let t = datum.lie_type();
    match (m, t.family, t.rank) {
        (Multiplier::Nu, Family::E, 6) => Ok(k * datum.fundamental(1)),
        (Multiplier::Mu, Family::E, 7) => Ok(k * datum.fundamental(7)),
        _ => Err(Error::Parse(format!("multiplier {m:?} undefined for {t}"))),
    }
}

/// Instantiates one symbolic row; the flag reports whether no straightening
/// beyond dropping exact −1 coordinates was needed.
pub fn instantiate_row(ring: &CharacterRing, row: &str, k: i64, experimental: bool) -> Result<(VirtualCharacter, bool)> {
    let datum = ring.datum();
    let n = datum.rank();
    let mut out = VirtualCharacter::zero(Chamber::Dominant);
    let mut clean = true;
    for term in parse_row(row)? {
        let base = match &term.weight {
            Some(coords) => {
                if coords.len() != n {
                    return Err(Error::Parse(format!("row {row:?} has {} coordinates, rank is {n}", coords.len())));
                }
                let c: Vec<i64> = coords.iter().map(|t| eval_coord(t, k)).collect::<Result<_>>()?;
                Weight::new(&c)
            }
            None => datum.zero(),
        };
        let mut piece = VirtualCharacter::zero(Chamber::Dominant);
        if base.coords().iter().any(|&c| c < -1) {
            if !experimental {
                return Err(Error::Unsupported(format!("row {row:?} at level {k} leaves the dominant chamber")));
            }
            clean = false;
            if let Some((w, s)) = ring.dot_dominant(&base) {
                piece.add_term(w, s as i64);
            }
        } else if base.is_dominant() {
            piece.add_term(base, 1);
        }
        // A coordinate of exactly −1 is fixed by a dot-action wall: the term is zero.
        if let Factor::Times(m) = term.factor {
            let nu = VirtualCharacter::irreducible(Chamber::Dominant, multiplier_weight(datum, m, k)?);
            piece = ring.tensor(&piece, &nu)?;
        }
        out.add_assign(&piece.scaled(&BigInt::from(term.sign)));
    }
    Ok((out, clean))
}
