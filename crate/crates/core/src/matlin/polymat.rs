use crate::{Matrix, Poly, Scalar};

/// Dense matrix with polynomial entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<T: Scalar> {
    rows: usize,
    cols: usize,
    entries: Vec<Poly<T>>,
}

impl<T: Scalar> PolyMatrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<Poly<T>>) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entries length must be rows × cols"
        );
        PolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// The characteristic matrix `xI − X`.
    pub fn characteristic(x: &Matrix<T>) -> Self {
        let n = x.rows();
        assert!(x.is_square(), "characteristic matrix needs a square input");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let c = -x[(i, j)].clone();
                entries.push(if i == j {
                    Poly::new(vec![c, T::one()])
                } else {
                    Poly::constant(c)
                });
            }
        }
        PolyMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly<T> {
        &self.entries[i * self.cols + j]
    }

    fn at(&mut self, i: usize, j: usize) -> &mut Poly<T> {
        &mut self.entries[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] -= q · row[source]
    fn row_axpy(&mut self, target: usize, source: usize, q: &Poly<T>) {
        for j in 0..self.cols {
            let delta = q * self.get(source, j);
            let v = self.get(target, j) - &delta;
            *self.at(target, j) = v;
        }
    }

    /// col[target] -= q · col[source]
    fn col_axpy(&mut self, target: usize, source: usize, q: &Poly<T>) {
        for i in 0..self.rows {
            let delta = q * self.get(i, source);
            let v = self.get(i, target) - &delta;
            *self.at(i, target) = v;
        }
    }

    /// Diagonal of the Smith normal form, each entry monic (or zero), with
    /// `d₁ | d₂ | …`.
    ///
    /// Pivot: the nonzero entry of least degree in the trailing submatrix,
    /// ties broken by row-major position. Each pass either clears the pivot
    /// row and column or produces a remainder of strictly smaller degree, so
    /// the loop terminates.
    pub fn smith_diagonal(&self) -> Vec<Poly<T>> {
        let mut m = self.clone();
        let n = m.rows.min(m.cols);
        let mut diag = Vec::with_capacity(n);
        for k in 0..n {
            loop {
                let mut best: Option<(usize, usize, usize)> = None;
                for i in k..m.rows {
                    for j in k..m.cols {
                        if let Some(d) = m.get(i, j).degree() {
                            if best.is_none_or(|(bd, _, _)| d < bd) {
                                best = Some((d, i, j));
                            }
                        }
                    }
                }
                let Some((_, pi, pj)) = best else {
                    diag.resize(n, Poly::zero());
                    return diag;
                };
                m.swap_rows(k, pi);
                m.swap_cols(k, pj);
                let pivot = m.get(k, k).clone();

                let mut clean = true;
                for i in k + 1..m.rows {
                    if m.get(i, k).is_zero() {
                        continue;
                    }
                    let (q, r) = m.get(i, k).div_rem(&pivot);
                    m.row_axpy(i, k, &q);
                    clean &= r.is_zero();
                }
                for j in k + 1..m.cols {
                    if m.get(k, j).is_zero() {
                        continue;
                    }
                    let (q, r) = m.get(k, j).div_rem(&pivot);
                    m.col_axpy(j, k, &q);
                    clean &= r.is_zero();
                }
                if !clean {
                    continue;
                }
                let offender = (k + 1..m.rows)
                    .flat_map(|i| (k + 1..m.cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !pivot.divides(m.get(i, j)));
                match offender {
                    Some((i, _)) => {
                        // row[k] += row[i]; the next pass reduces the new entries.
                        m.row_axpy(k, i, &-&Poly::one());
                    }
                    None => break,
                }
            }
            diag.push(m.get(k, k).monic());
        }
        diag
    }
}

/// Invariant factors of a square matrix: the Smith diagonal of `xI − X`.
/// The list has one entry per row, leading ones included.
pub fn invariant_factors<T: Scalar>(x: &Matrix<T>) -> Vec<Poly<T>> {
    PolyMatrix::characteristic(x).smith_diagonal()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ExactMatrix, ExactPoly, GaussRat};

    fn p(c: &[i64]) -> ExactPoly {
        Poly::new(c.iter().map(|&k| GaussRat::from(k)).collect())
    }

    #[test]
    fn diag_one_minus_one() {
        let x = ExactMatrix::diag(&[GaussRat::from(1), GaussRat::from(-1)]);
        assert_eq!(invariant_factors(&x), vec![p(&[1]), p(&[-1, 0, 1])]);
    }

    #[test]
    fn zero_two_by_two() {
        assert_eq!(
            invariant_factors(&ExactMatrix::zeros(2, 2)),
            vec![p(&[0, 1]), p(&[0, 1])]
        );
    }

    #[test]
    fn nilpotent_block() {
        let x = ExactMatrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(
            invariant_factors(&x),
            vec![p(&[1]), p(&[1]), p(&[0, 0, 0, 1])]
        );
    }

    #[test]
    fn mixed_blocks() {
        // J₂(1) ⊕ (1) ⊕ (2): factors 1, x − 1, (x − 1)²(x − 2)
        let x = ExactMatrix::from_i64_rows(&[
            &[1, 1, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 2],
        ]);
        let f = invariant_factors(&x);
        assert_eq!(f[0], p(&[1]));
        assert_eq!(f[1], p(&[1]));
        assert_eq!(f[2], p(&[-1, 1]));
        assert_eq!(f[3], &p(&[-1, 1]).pow(2) * &p(&[-2, 1]));
    }
}
