//! Cyclic shift classes of maximal length in symmetric groups, their description by
//! stair forms, and the resulting basis of the center of the 0-Hecke algebra `H_n(0)`.
//!
//! ```
//! use hecke_center::{stair_form, Composition};
//!
//! let alpha: Composition = "4,2".parse().unwrap();
//! assert_eq!(stair_form(&alpha).unwrap().to_string(), "(1,6,2,5)(3,4)");
//! ```

pub mod cli;
pub mod counting;
pub mod cyclic_shift;
pub mod error;
pub mod hecke;
pub mod iprod;
pub mod perm;
pub mod shapes;
pub mod stair;

pub use counting::{dim_center, size_sigma_formula, size_sigma_n, size_sigma_odd_hook};
pub use cyclic_shift::{
    equiv_classes, label_max_classes, min_representatives, EquivClass, Stratum, Twist,
};
pub use error::{Error, Result};
pub use hecke::{verify_center_basis, HeckeElement};
pub use iprod::{iprod, iprod_factor};
pub use perm::{Cycle, OrbitPartition, Permutation};
pub use shapes::{enumerate_maximal, Composition, Partition};
pub use stair::{member_sigma_alpha, sigma_class, stair_form};
