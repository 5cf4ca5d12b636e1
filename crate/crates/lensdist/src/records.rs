//! The JSON records emitted with `--format json`, one per invocation.

use lensdist_core::distance::WitnessPair;
use lensdist_core::pi1::{Abelianization, SimplifyStep};
use lensdist_core::surgery::PseudoAnosovVerdict;
use lensdist_core::{
    Convention, FillingCoefficients, GroupPresentation, KnotInvariants, LensSpace, RawLensParams,
    SimplifyOutcome, Slope,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizeRecord {
    pub input: RawLensParams,
    pub convention: Convention,
    pub lens: LensSpace,
    pub name: String,
    pub orbit: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomeoRecord {
    pub a: LensSpace,
    pub b: LensSpace,
    pub convention: Convention,
    pub homeomorphic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LensInfoRecord {
    pub lens: LensSpace,
    pub name: String,
    pub convention: Convention,
    pub orbit: Vec<i64>,
    pub betti1: u32,
    /// `None` when the obstruction does not apply (`p < 2`).
    pub qr_obstructed: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsRecord {
    pub p: i64,
    pub q: i64,
    pub u: i64,
    #[serde(flatten)]
    pub invariants: KnotInvariants,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceRecord {
    pub p: i64,
    pub q: i64,
    pub values: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi1Record {
    pub p: i64,
    pub q: i64,
    pub u: i64,
    pub r: i64,
    pub presentation: GroupPresentation,
    pub abelianization: Abelianization,
    pub outcome: SimplifyOutcome,
    pub rounds: u64,
    pub fuel: u64,
    pub steps: Vec<SimplifyStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub name: String,
    pub description: String,
    pub citation: String,
    pub formula: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyListRecord {
    pub families: Vec<FamilyRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEvalRecord {
    pub family: String,
    pub surgery: Slope,
    pub raw: RawLensParams,
    pub convention: Convention,
    pub lens: LensSpace,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryRecord {
    pub strands: i64,
    pub surgery: Slope,
    pub filling: Slope,
    pub coefficients: FillingCoefficients,
    pub raw: RawLensParams,
    pub convention: Convention,
    pub lens: LensSpace,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffsRecord {
    pub strands: i64,
    pub filling: Slope,
    #[serde(flatten)]
    pub coefficients: FillingCoefficients,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidRecord {
    pub generators: Vec<i64>,
    pub strands: i64,
    pub exponent_sum: i64,
    pub verdict: PseudoAnosovVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WuRecord {
    pub surgery: Slope,
    pub degeneracy: Slope,
    pub distance: u64,
    pub hyperbolic_guaranteed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    #[serde(flatten)]
    pub witness: WitnessPair,
    pub citation: String,
    pub source_lens: LensSpace,
    pub target_lens: LensSpace,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessesRecord {
    pub lens: LensSpace,
    pub convention: Convention,
    pub witnesses: Vec<WitnessRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub p: i64,
    pub q: i64,
    pub knots: Vec<InvariantsRecord>,
}
