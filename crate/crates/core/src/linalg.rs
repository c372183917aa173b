//! Exact Gaussian elimination over the Novikov scalar field.

use crate::field::NumberField;
use crate::novikov::Novikov;

/// Incremental row space with dependence tracking. Inserted vectors are
/// reduced against the current echelon rows; a dependent vector comes back
/// expressed in terms of the previously inserted ones.
pub struct IncrementalSpan {
    field: NumberField,
    dim: usize,
    rows: Vec<Vec<Novikov>>,
    pivots: Vec<usize>,
    /// Representation of each echelon row as a combination of inserted vectors.
    reprs: Vec<Vec<Novikov>>,
    inserted: usize,
}

pub enum InsertOutcome {
    Independent,
    /// Coefficients over the previously inserted vectors.
    Dependent(Vec<Novikov>),
}

impl IncrementalSpan {
    pub fn new(field: NumberField, dim: usize) -> Self {
        IncrementalSpan {
            field,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            reprs: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Novikov>] {
        &self.rows
    }

    pub fn insert(&mut self, v: &[Novikov]) -> InsertOutcome {
        assert_eq!(v.len(), self.dim);
        let mut vec = v.to_vec();
        let mut repr = vec![Novikov::zero(&self.field); self.inserted + 1];
        repr[self.inserted] = Novikov::one(&self.field);
        for (row, (pivot, row_repr)) in self
            .rows
            .iter()
            .zip(self.pivots.iter().zip(self.reprs.iter()))
        {
            let c = vec[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                vec[j] = vec[j].sub(&c.mul(&row[j]));
            }
            for (k, r) in row_repr.iter().enumerate() {
                repr[k] = repr[k].sub(&c.mul(r));
            }
        }
        let pivot = match vec.iter().position(|c| !c.is_zero()) {
            None => {
                // v = sum of lambda_i * inserted_i: solve from repr, whose
                // last entry is 1 by construction.
                let coeffs = repr[..self.inserted]
                    .iter()
                    .map(|c| c.neg())
                    .collect();
                self.inserted += 1;
                return InsertOutcome::Dependent(coeffs);
            }
            Some(p) => p,
        };
        let inv = vec[pivot].checked_inv().expect("pivot nonzero");
        for c in vec.iter_mut() {
            *c = c.mul(&inv);
        }
        let mut repr = repr;
        repr.truncate(self.inserted + 1);
        for c in repr.iter_mut() {
            *c = c.mul(&inv);
        }
        self.rows.push(vec);
        self.pivots.push(pivot);
        self.reprs.push(repr);
        self.inserted += 1;
        InsertOutcome::Independent
    }
}

pub fn rank(field: &NumberField, rows: &[Vec<Novikov>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut span = IncrementalSpan::new(field.clone(), rows[0].len());
    for r in rows {
        span.insert(r);
    }
    span.rank()
}

pub fn det(field: &NumberField, matrix: &[Vec<Novikov>]) -> Novikov {
    let n = matrix.len();
    if n == 0 {
        return Novikov::one(field);
    }
    let mut m: Vec<Vec<Novikov>> = matrix.to_vec();
    let mut result = Novikov::one(field);
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !m[r][col].is_zero()) {
            None => return Novikov::zero(field),
            Some(r) => r,
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            result = result.neg();
        }
        let pivot = m[col][col].clone();
        result = result.mul(&pivot);
        let inv = pivot.checked_inv().expect("pivot nonzero");
        for r in (col + 1)..n {
            let factor = m[r][col].mul(&inv);
            if factor.is_zero() {
                continue;
            }
            for c in col..n {
                let sub = factor.mul(&m[col][c]);
                m[r][c] = m[r][c].sub(&sub);
            }
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> NumberField {
        NumberField::rationals()
    }

    fn iv(vals: &[i64]) -> Vec<Novikov> {
        vals.iter().map(|&v| Novikov::from_int(&q(), v)).collect()
    }

    #[test]
    fn determinant_and_rank() {
        let m = vec![iv(&[2, 0]), iv(&[0, 3])];
        assert_eq!(det(&q(), &m), Novikov::from_int(&q(), 6));
        assert_eq!(rank(&q(), &m), 2);
        let singular = vec![iv(&[1, 2]), iv(&[2, 4])];
        assert!(det(&q(), &singular).is_zero());
        assert_eq!(rank(&q(), &singular), 1);
    }

    #[test]
    fn dependence_coefficients() {
        let mut span = IncrementalSpan::new(q(), 3);
        assert!(matches!(span.insert(&iv(&[1, 0, 1])), InsertOutcome::Independent));
        assert!(matches!(span.insert(&iv(&[0, 1, 1])), InsertOutcome::Independent));
        match span.insert(&iv(&[2, 3, 5])) {
            InsertOutcome::Dependent(coeffs) => {
                assert_eq!(coeffs, iv(&[2, 3]));
            }
            InsertOutcome::Independent => panic!("vector should be dependent"),
        }
    }
}
