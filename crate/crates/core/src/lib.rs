//! Exact fusion rings of simple, simply connected Lie groups.
//!
//! The crate builds root data, straightens weights under finite, affine and
//! vertex reflection groups, computes characters and fusion products, and
//! derives generators of the level k fusion ideal from Steinberg bases.

pub mod character;
pub mod error;
pub mod fusion;
pub mod ideal;
pub mod lattice;
pub mod root_data;
pub mod steinberg;
pub mod verify;
pub mod weight;
pub mod weyl;

pub use character::{Chamber, CharacterRing, VirtualCharacter, WeightSum};
pub use error::{Error, Result};
pub use root_data::{DiagramMap, Family, LieType, RootDatum};
pub use weight::Weight;
pub use weyl::{GroupKind, ReflectionGroupSpec, Shift, SignedWeight, WeylWord};

/// Version tag carried by every JSON document.
pub const SCHEMA: &str = "fusion-ring/v1";
