//! Integral weights in the fundamental-weight basis.

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const MAX_RANK: usize = 8;

/// Coordinates `coords[i]` multiply the fundamental weight λ_{i+1}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    rank: u8,
    coords: [i64; MAX_RANK],
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        assert!(rank <= MAX_RANK, "rank {rank} exceeds {MAX_RANK}");
        Weight { rank: rank as u8, coords: [0; MAX_RANK] }
    }

    pub fn new(coords: &[i64]) -> Self {
        let mut w = Weight::zero(coords.len());
        w.coords[..coords.len()].copy_from_slice(coords);
        w
    }

    /// λ_i for a 1-based node i.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.coords[i - 1] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords[..self.rank as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords().iter().all(|&c| c >= 0)
    }

    /// Divides every coordinate exactly, or returns `None`.
    pub fn div_exact(&self, d: i64) -> Option<Self> {
        let mut out = *self;
        for c in &mut out.coords[..self.rank as usize] {
            if *c % d != 0 {
                return None;
            }
            *c /= d;
        }
        Some(out)
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.coords()[i]
    }
}

impl IndexMut<usize> for Weight {
    fn index_mut(&mut self, i: usize) -> &mut i64 {
        let r = self.rank as usize;
        &mut self.coords[..r][i]
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(mut self, rhs: Weight) -> Weight {
        self += rhs;
        self
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        debug_assert_eq!(self.rank, rhs.rank);
        for i in 0..self.rank as usize {
            self.coords[i] += rhs.coords[i];
        }
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(mut self, rhs: Weight) -> Weight {
        self -= rhs;
        self
    }
}

impl SubAssign for Weight {
    fn sub_assign(&mut self, rhs: Weight) {
        debug_assert_eq!(self.rank, rhs.rank);
        for i in 0..self.rank as usize {
            self.coords[i] -= rhs.coords[i];
        }
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(mut self) -> Weight {
        for c in &mut self.coords {
            *c = -*c;
        }
        self
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, mut rhs: Weight) -> Weight {
        for c in &mut rhs.coords {
            *c *= self;
        }
        rhs
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        if v.len() > MAX_RANK {
            return Err(serde::de::Error::custom("weight rank exceeds 8"));
        }
        Ok(Weight::new(&v))
    }
}
