//! Constructors for the model classes: monomial ideals given by a basic
//! entry sequence, reciprocal ideals of line arrangements and ideals of fat
//! points, with the multiplicity arithmetic that goes with them.

mod arrangement;
mod fat;
mod monomial;

pub use arrangement::{
    arrangement_family, degenerate_arrangement_check, Arrangement, ArrangementFamily, DegenerateReport,
    PointMultiplicity,
};
pub use fat::{fat_point_ideal, subhomaloidal_degree, FatPoint, FatPointResult, FatPointSpec};
pub use monomial::{
    lan_remark_family, localized_minimal_generators, monomial_family, monomial_family_over, BasicEntrySequence,
    MonomialFamily,
};
