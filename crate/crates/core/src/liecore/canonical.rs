use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{ExactMatrix, GaussRat};

use super::{Algebra, LieContext};

/// Parameters of a semisimple element in the standard Cartan subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CanonicalData {
    /// `diag(λ₁, …, λ_n)` for gl/sl.
    Diagonal(Vec<GaussRat>),
    /// `diag(H₁, …, H_m, 0_r)` with `H_j = [[0, x_j], [−x_j, 0]]` for so.
    Orthogonal { params: Vec<GaussRat>, zeros: usize },
    /// `diag(h₁, …, h_n, −h₁, …, −h_n)` for sp.
    Symplectic(Vec<GaussRat>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalSemisimple {
    pub context: LieContext,
    pub data: CanonicalData,
}

impl CanonicalSemisimple {
    pub fn diagonal(context: LieContext, eigenvalues: Vec<GaussRat>) -> Result<Self> {
        Self::checked(context, CanonicalData::Diagonal(eigenvalues))
    }

    pub fn orthogonal(context: LieContext, params: Vec<GaussRat>, zeros: usize) -> Result<Self> {
        Self::checked(context, CanonicalData::Orthogonal { params, zeros })
    }

    pub fn symplectic(context: LieContext, h: Vec<GaussRat>) -> Result<Self> {
        Self::checked(context, CanonicalData::Symplectic(h))
    }

    fn checked(context: LieContext, data: CanonicalData) -> Result<Self> {
        let c = CanonicalSemisimple { context, data };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::MalformedCanonical(msg));
        let size = self.context.matrix_size();
        match (&self.data, self.context.algebra()) {
            (CanonicalData::Diagonal(ev), Algebra::Gl | Algebra::Sl) => {
                if ev.len() != size {
                    return bad(format!("{} eigenvalues for size {size}", ev.len()));
                }
                if self.context.algebra() == Algebra::Sl
                    && !ev
                        .iter()
                        .fold(GaussRat::zero(), |a, b| a + b.clone())
                        .is_zero()
                {
                    return bad("sl eigenvalues must sum to zero".into());
                }
                Ok(())
            }
            (CanonicalData::Orthogonal { params, zeros }, Algebra::So) => {
                if 2 * params.len() + zeros != size {
                    return bad(format!("2·{} + {zeros} ≠ {size}", params.len()));
                }
                Ok(())
            }
            (CanonicalData::Symplectic(h), Algebra::Sp) => {
                if h.len() != self.context.n() {
                    return bad(format!(
                        "{} parameters for sp({})",
                        h.len(),
                        self.context.n()
                    ));
                }
                Ok(())
            }
            _ => bad(format!("data shape does not match {}", self.context)),
        }
    }

    /// The full eigenvalue list of the built matrix (with multiplicity).
    pub fn spectrum(&self) -> Vec<GaussRat> {
        match &self.data {
            CanonicalData::Diagonal(ev) => ev.clone(),
            CanonicalData::Orthogonal { params, zeros } => {
                // H_j has eigenvalues ±i·x_j.
                let mut out: Vec<GaussRat> = params
                    .iter()
                    .flat_map(|x| {
                        let ix = GaussRat::i() * x.clone();
                        [ix.clone(), -ix]
                    })
                    .collect();
                out.extend(std::iter::repeat_n(GaussRat::zero(), *zeros));
                out
            }
            CanonicalData::Symplectic(h) => h
                .iter()
                .cloned()
                .chain(h.iter().map(|x| -x.clone()))
                .collect(),
        }
    }
}

/// The block matrix described by `c`.
pub fn build_canonical(c: &CanonicalSemisimple) -> Result<ExactMatrix> {
    c.validate()?;
    Ok(match &c.data {
        CanonicalData::Diagonal(ev) => ExactMatrix::diag(ev),
        CanonicalData::Orthogonal { params, zeros } => {
            let mut blocks: Vec<ExactMatrix> = params
                .iter()
                .map(|x| {
                    ExactMatrix::from_rows(vec![
                        vec![GaussRat::zero(), x.clone()],
                        vec![-x.clone(), GaussRat::zero()],
                    ])
                })
                .collect();
            if *zeros > 0 {
                blocks.push(ExactMatrix::zeros(*zeros, *zeros));
            }
            ExactMatrix::block_diag(&blocks)
        }
        CanonicalData::Symplectic(h) => {
            let full: Vec<GaussRat> = h
                .iter()
                .cloned()
                .chain(h.iter().map(|x| -x.clone()))
                .collect();
            ExactMatrix::diag(&full)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::algebra_member;

    fn g(k: i64) -> GaussRat {
        GaussRat::from(k)
    }

    #[test]
    fn builds() {
        let c = CanonicalSemisimple::diagonal(LieContext::sl(2), vec![g(3), g(-3)]).unwrap();
        assert_eq!(
            build_canonical(&c).unwrap(),
            ExactMatrix::diag(&[g(3), g(-3)])
        );

        let c = CanonicalSemisimple::orthogonal(LieContext::so(2), vec![g(4)], 0).unwrap();
        assert_eq!(
            build_canonical(&c).unwrap(),
            ExactMatrix::from_i64_rows(&[&[0, 4], &[-4, 0]])
        );

        let c = CanonicalSemisimple::symplectic(LieContext::sp(1), vec![g(2)]).unwrap();
        assert_eq!(
            build_canonical(&c).unwrap(),
            ExactMatrix::diag(&[g(2), g(-2)])
        );
    }

    #[test]
    fn outputs_are_members() {
        let cases = [
            CanonicalSemisimple::orthogonal(LieContext::so(5), vec![g(1), g(-2)], 1).unwrap(),
            CanonicalSemisimple::symplectic(LieContext::sp(3), vec![g(1), g(0), GaussRat::i()])
                .unwrap(),
            CanonicalSemisimple::diagonal(LieContext::sl(3), vec![g(1), g(2), g(-3)]).unwrap(),
        ];
        for c in &cases {
            assert!(algebra_member(&build_canonical(c).unwrap(), &c.context).unwrap());
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!(CanonicalSemisimple::diagonal(LieContext::sl(2), vec![g(1), g(1)]).is_err());
        assert!(CanonicalSemisimple::orthogonal(LieContext::so(4), vec![g(1)], 1).is_err());
        assert!(CanonicalSemisimple::symplectic(LieContext::sl(2), vec![g(1)]).is_err());
    }
}
