//! Divisor classes and the intersection pairing on a Picard lattice.
//!
//! Coefficients are bounded by [`MAX_COEFF`] in absolute value. Every
//! operation that could leave that range returns an error instead of
//! wrapping; pairings are accumulated in `i128` and narrowed at the end.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest absolute coefficient a divisor class may carry.
pub const MAX_COEFF: i64 = 1_000_000;

/// A divisor class written in the fixed basis of its surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DivisorClass {
    coords: Vec<i64>,
}

impl DivisorClass {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if let Some(&c) = coords.iter().find(|c| c.abs() > MAX_COEFF) {
            return Err(Error::CoefficientOutOfRange(c));
        }
        Ok(DivisorClass { coords })
    }

    pub fn zero(rank: usize) -> Self {
        DivisorClass {
            coords: vec![0; rank],
        }
    }

    /// The `i`-th basis vector of a lattice of the given rank.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        DivisorClass { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn plus(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.zip_with(other, |a, b| a.checked_add(b))
    }

    pub fn minus(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.zip_with(other, |a, b| a.checked_sub(b))
    }

    pub fn negated(&self) -> DivisorClass {
        DivisorClass {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> Result<DivisorClass> {
        let coords = self
            .coords
            .iter()
            .map(|c| c.checked_mul(k).ok_or(Error::Overflow("class scaling")))
            .collect::<Result<Vec<_>>>()?;
        DivisorClass::new(coords)
    }

    fn zip_with(
        &self,
        other: &DivisorClass,
        f: impl Fn(i64, i64) -> Option<i64>,
    ) -> Result<DivisorClass> {
        check_rank(self.rank(), other.rank())?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| f(a, b).ok_or(Error::Overflow("class arithmetic")))
            .collect::<Result<Vec<_>>>()?;
        DivisorClass::new(coords)
    }

    /// Renders the class against a list of basis labels, e.g. `-2C_2 - 4F`.
    pub fn display_with<'a>(&'a self, labels: &'a [String]) -> impl fmt::Display + 'a {
        Labelled {
            class: self,
            labels,
        }
    }
}

impl TryFrom<Vec<i64>> for DivisorClass {
    type Error = Error;

    fn try_from(coords: Vec<i64>) -> Result<Self> {
        DivisorClass::new(coords)
    }
}

impl From<DivisorClass> for Vec<i64> {
    fn from(d: DivisorClass) -> Vec<i64> {
        d.coords
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

struct Labelled<'a> {
    class: &'a DivisorClass,
    labels: &'a [String],
}

impl fmt::Display for Labelled<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, label) in self.class.coords.iter().zip(self.labels) {
            if *c == 0 {
                continue;
            }
            let sign = if *c < 0 { "-" } else { "+" };
            let abs = c.abs();
            if first {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if abs == 1 {
                write!(f, "{label}")?;
            } else {
                write!(f, "{abs}{label}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Symmetric integer Gram matrix of the intersection pairing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionForm {
    matrix: Vec<Vec<i64>>,
}

impl IntersectionForm {
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = matrix.len();
        for row in &matrix {
            check_rank(n, row.len())?;
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::AsymmetricForm(i, j));
                }
            }
        }
        Ok(IntersectionForm { matrix })
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut matrix = vec![vec![0; n]; n];
        for (i, &e) in entries.iter().enumerate() {
            matrix[i][i] = e;
        }
        IntersectionForm { matrix }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }
}

fn check_rank(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::RankMismatch { expected, found });
    }
    Ok(())
}

/// The intersection number `a . b = aᵀ M b`.
pub fn intersect(a: &DivisorClass, b: &DivisorClass, form: &IntersectionForm) -> Result<i64> {
    check_rank(form.rank(), a.rank())?;
    check_rank(form.rank(), b.rank())?;
    let mut acc: i128 = 0;
    for (i, &ai) in a.coords.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        let row = &form.matrix[i];
        for (j, &bj) in b.coords.iter().enumerate() {
            acc += ai as i128 * row[j] as i128 * bj as i128;
        }
    }
    i64::try_from(acc).map_err(|_| Error::Overflow("intersection pairing"))
}

pub fn self_intersect(a: &DivisorClass, form: &IntersectionForm) -> Result<i64> {
    intersect(a, a, form)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(c: &[i64]) -> DivisorClass {
        DivisorClass::new(c.to_vec()).unwrap()
    }

    #[test]
    fn plane_pairing() {
        let p2 = IntersectionForm::diagonal(&[1]);
        assert_eq!(intersect(&class(&[2]), &class(&[3]), &p2).unwrap(), 6);
        assert_eq!(self_intersect(&class(&[4]), &p2).unwrap(), 16);
    }

    #[test]
    fn hirzebruch_two_pairing() {
        let f2 = IntersectionForm::new(vec![vec![-2, 1], vec![1, 0]]).unwrap();
        // (C + 3F).(-2C - 4F) = 4 - 4 - 6 + 0
        assert_eq!(intersect(&class(&[1, 3]), &class(&[-2, -4]), &f2).unwrap(), -6);
        let f1 = IntersectionForm::new(vec![vec![-1, 1], vec![1, 0]]).unwrap();
        assert_eq!(self_intersect(&class(&[1, 0]), &f1).unwrap(), -1);
    }

    #[test]
    fn blown_up_plane_pairing() {
        let dp1 = IntersectionForm::diagonal(&[1, -1]);
        assert_eq!(self_intersect(&class(&[1, -1]), &dp1).unwrap(), 0);

        let mut diag = vec![1];
        diag.extend(std::iter::repeat_n(-1, 8));
        let dp8 = IntersectionForm::diagonal(&diag);
        let mut anti_k = vec![3];
        anti_k.extend(std::iter::repeat_n(-1, 8));
        assert_eq!(self_intersect(&class(&anti_k), &dp8).unwrap(), 1);
    }

    #[test]
    fn rank_mismatch_is_an_input_error() {
        let f2 = IntersectionForm::new(vec![vec![-2, 1], vec![1, 0]]).unwrap();
        let err = intersect(&class(&[1]), &class(&[1, 0]), &f2).unwrap_err();
        assert_eq!(
            err,
            Error::RankMismatch {
                expected: 2,
                found: 1
            }
        );
        assert!(class(&[1]).plus(&class(&[1, 2])).is_err());
    }

    #[test]
    fn coefficient_bound_is_enforced() {
        assert!(DivisorClass::new(vec![MAX_COEFF]).is_ok());
        assert_eq!(
            DivisorClass::new(vec![MAX_COEFF + 1]).unwrap_err(),
            Error::CoefficientOutOfRange(MAX_COEFF + 1)
        );
        assert!(class(&[MAX_COEFF]).scaled(2).is_err());
        assert!(class(&[MAX_COEFF]).plus(&class(&[1])).is_err());
    }

    #[test]
    fn asymmetric_matrix_rejected() {
        assert_eq!(
            IntersectionForm::new(vec![vec![0, 1], vec![2, 0]]).unwrap_err(),
            Error::AsymmetricForm(0, 1)
        );
    }

    #[test]
    fn labelled_display() {
        let labels = vec!["C_2".to_string(), "F".to_string()];
        assert_eq!(class(&[-2, -4]).display_with(&labels).to_string(), "-2C_2 - 4F");
        assert_eq!(class(&[1, 0]).display_with(&labels).to_string(), "C_2");
        assert_eq!(class(&[0, -1]).display_with(&labels).to_string(), "-F");
        assert_eq!(class(&[0, 0]).display_with(&labels).to_string(), "0");
    }

    #[test]
    fn serde_uses_plain_arrays() {
        let d = class(&[3, -1, 0]);
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, "[3,-1,0]");
        assert_eq!(serde_json::from_str::<DivisorClass>(&json).unwrap(), d);
        assert!(serde_json::from_str::<DivisorClass>("[2000000]").is_err());
    }
}
