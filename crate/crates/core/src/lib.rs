pub mod catalog;
pub mod chartab;
pub mod classes;
pub mod cosets;
pub mod cyclo;
pub mod error;
pub mod group;
pub mod indicators;
pub mod perm;
pub mod spec;

pub use catalog::{run_all, verify, Claim, Status, VerificationReport};
pub use chartab::{character_table, Character, CharacterTable};
pub use classes::ClassData;
pub use cosets::{
    census_sl, double_cosets, is_null_coset_sl, normal_form_sl, right_transversal, stabilizer, Census,
    DoubleCosetDecomposition, Stabilizer,
};
pub use cyclo::{CycloSum, Cyclotomic};
pub use error::{Error, Result};
pub use group::PermGroup;
pub use indicators::{category_scan, IndicatorReport, Scanner, SimpleObject};
pub use perm::Permutation;
pub use spec::{parse_group, GroupSpec};

/// Size limits and the random seed shared by every enumerating computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group that may be listed element by element.
    pub enumeration: usize,
    /// Largest coset index for transversals.
    pub index: usize,
    /// Seed for randomized eigenspace splitting.
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: 1_000_000,
            index: 100_000,
            seed: 1,
        }
    }
}
