use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ambient matrix Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algebra {
    Gl,
    Sl,
    So,
    Sp,
}

/// The group acting by conjugation.
///
/// `Psl` and `Psp` elements are handled through matrix representatives in
/// `SL`/`Sp`; a representative is an involution in the quotient when its
/// square is a scalar matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Group {
    #[serde(rename = "GL")]
    Gl,
    #[serde(rename = "SL")]
    Sl,
    #[serde(rename = "O")]
    O,
    #[serde(rename = "SO")]
    So,
    #[serde(rename = "Sp")]
    Sp,
    #[serde(rename = "PSL")]
    Psl,
    #[serde(rename = "PSp")]
    Psp,
}

impl Group {
    pub fn is_projective(self) -> bool {
        matches!(self, Group::Psl | Group::Psp)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::Gl => "gl",
            Algebra::Sl => "sl",
            Algebra::So => "so",
            Algebra::Sp => "sp",
        })
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Gl => "GL",
            Group::Sl => "SL",
            Group::O => "O",
            Group::So => "SO",
            Group::Sp => "Sp",
            Group::Psl => "PSL",
            Group::Psp => "PSp",
        })
    }
}

/// Ambient algebra, acting group and rank. Matrices are `n × n` for
/// gl/sl/so and `2n × 2n` for sp.
///
/// JSON: `{"algebra": "sp", "group": "Sp", "n": 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawContext", into = "RawContext")]
pub struct LieContext {
    algebra: Algebra,
    group: Group,
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct RawContext {
    algebra: Algebra,
    group: Group,
    n: usize,
}

impl TryFrom<RawContext> for LieContext {
    type Error = Error;
    fn try_from(raw: RawContext) -> Result<Self> {
        LieContext::new(raw.algebra, raw.group, raw.n)
    }
}

impl From<LieContext> for RawContext {
    fn from(c: LieContext) -> Self {
        RawContext {
            algebra: c.algebra,
            group: c.group,
            n: c.n,
        }
    }
}

impl fmt::Display for LieContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}) under {}", self.algebra, self.n, self.group)
    }
}

impl LieContext {
    pub fn new(algebra: Algebra, group: Group, n: usize) -> Result<Self> {
        let compatible = match algebra {
            Algebra::Gl => matches!(group, Group::Gl),
            Algebra::Sl => matches!(group, Group::Sl | Group::Psl),
            Algebra::So => matches!(group, Group::O | Group::So),
            Algebra::Sp => matches!(group, Group::Sp | Group::Psp),
        };
        if !compatible {
            return Err(Error::IncompatibleContext {
                algebra: algebra.to_string(),
                group: group.to_string(),
            });
        }
        if n == 0 {
            return Err(Error::SizeMismatch {
                expected: "n ≥ 1".into(),
                found: "n = 0".into(),
            });
        }
        Ok(LieContext { algebra, group, n })
    }

    pub fn gl(n: usize) -> Self {
        LieContext {
            algebra: Algebra::Gl,
            group: Group::Gl,
            n,
        }
    }

    pub fn sl(n: usize) -> Self {
        LieContext {
            algebra: Algebra::Sl,
            group: Group::Sl,
            n,
        }
    }

    pub fn psl(n: usize) -> Self {
        LieContext {
            algebra: Algebra::Sl,
            group: Group::Psl,
            n,
        }
    }

    pub fn o(n: usize) -> Self {
        LieContext {
            algebra: Algebra::So,
            group: Group::O,
            n,
        }
    }

    pub fn so(n: usize) -> Self {
        LieContext {
            algebra: Algebra::So,
            group: Group::So,
            n,
        }
    }

    pub fn sp(n: usize) -> Self {
        LieContext {
            algebra: Algebra::Sp,
            group: Group::Sp,
            n,
        }
    }

    pub fn psp(n: usize) -> Self {
        LieContext {
            algebra: Algebra::Sp,
            group: Group::Psp,
            n,
        }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Side length of the matrices in this context.
    pub fn matrix_size(&self) -> usize {
        match self.algebra {
            Algebra::Sp => 2 * self.n,
            _ => self.n,
        }
    }

    /// Same algebra and rank, different group.
    pub fn with_group(&self, group: Group) -> Result<Self> {
        LieContext::new(self.algebra, group, self.n)
    }
}
