use serde::{Deserialize, Serialize};

use crate::{ExactMatrix, LieContext};

/// Three-valued answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tri {
    Yes,
    No,
    Undetermined,
}

impl Tri {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }
}

/// Which criterion settled a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reason {
    /// `X = 0`; the identity reverses it.
    ZeroElement,
    /// 0 is an eigenvalue, which grants strong reality in SL and SO.
    ZeroEigenvalue,
    /// Decided by the residue of the matrix size modulo 4.
    NMod4,
    /// Every nonzero eigenvalue has even multiplicity (Sp).
    EvenMultiplicity,
    /// Some nonzero eigenvalue has odd multiplicity (Sp).
    OddMultiplicity,
    /// Spectrum is symmetric under negation (GL).
    SpectrumSymmetric,
    /// Spectrum is not symmetric under negation.
    SpectrumAsymmetric,
    /// Projective groups reverse every real semisimple element by an involution.
    ProjectiveAlwaysStrong,
    /// The full orthogonal group reverses every semisimple element by an involution.
    OrthogonalAlwaysStrong,
    /// Nonzero element of so(2): reversible in O(2) only by determinant −1.
    RotationPlane,
    /// Plain SO-reality for size ≡ 2 (mod 4) without zero eigenvalue is not
    /// classified; only search evidence is available.
    Unclassified,
}

/// An explicit reverser: `g·X·g⁻¹ = −X` with `g` in the context's group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReverserCertificate {
    pub element: ExactMatrix,
    pub reverser: ExactMatrix,
    pub context: LieContext,
    pub claims_involution: bool,
}

/// Outcome of a reality decision.
///
/// JSON: `{"real": "yes", "strongly_real": "no", "reason": "NMod4", "witness": {…}}`,
/// with `witness` omitted when absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealityVerdict {
    pub real: Tri,
    pub strongly_real: Tri,
    pub reason: Reason,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ReverserCertificate>,
}

impl RealityVerdict {
    pub(crate) fn new(real: Tri, strongly_real: Tri, reason: Reason) -> Self {
        debug_assert!(strongly_real != Tri::Yes || real == Tri::Yes);
        RealityVerdict {
            real,
            strongly_real,
            reason,
            witness: None,
        }
    }
}
