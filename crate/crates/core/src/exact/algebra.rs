//! Finite-dimensional commutative Q-algebras given by multiplication
//! tables, plus restriction of scalars for linear equations.

// Arithmetic lives on named methods (`add`, `mul`, ...) because every
// operation is fallible across algebras; operator traits would hide the
// MixedAlgebras error path.
#![allow(clippy::should_implement_trait)]

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::matrix::Matrix;
use super::scalar::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// `(i*j)*k != i*(j*k)` for the named basis triple.
    NonAssociative(usize, usize, usize),
    /// `i*j != j*i` for the named basis pair.
    NonCommutative(usize, usize),
    /// `e0 * ej != ej` for the named basis index.
    BadUnit(usize),
    /// Table/label/embedding dimensions are inconsistent.
    BadShape,
    /// Elements of distinct algebras were mixed in one expression.
    MixedAlgebras,
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::NonAssociative(i, j, k) => {
                write!(f, "multiplication not associative on basis triple ({i}, {j}, {k})")
            }
            AlgebraError::NonCommutative(i, j) => {
                write!(f, "multiplication not commutative on basis pair ({i}, {j})")
            }
            AlgebraError::BadUnit(j) => {
                write!(f, "basis element 0 is not a unit: e0*e{j} != e{j}")
            }
            AlgebraError::BadShape => write!(f, "multiplication table has inconsistent shape"),
            AlgebraError::MixedAlgebras => write!(f, "elements belong to different algebras"),
        }
    }
}

/// A commutative associative Q-algebra of finite dimension, described by
/// the products of basis elements.  Basis element 0 is the unit.
///
/// The complex embedding is advisory data for positivity checks; exact
/// decisions never consult it.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraSpec {
    dim: usize,
    labels: Vec<String>,
    /// `table[i][j]` = coordinates of `e_i * e_j`.
    table: Vec<Vec<Vec<Rat>>>,
    /// `(re, im)` value of each basis element under a fixed embedding
    /// into C.
    embedding: Vec<(f64, f64)>,
}

impl AlgebraSpec {
    /// Validate and construct an algebra.
    ///
    /// Associativity and commutativity are verified on all basis
    /// triples/pairs; the errors name the violating indices.
    pub fn new(
        labels: Vec<String>,
        table: Vec<Vec<Vec<Rat>>>,
        embedding: Vec<(f64, f64)>,
    ) -> Result<Arc<Self>, AlgebraError> {
        let dim = labels.len();
        if dim == 0 || table.len() != dim || embedding.len() != dim {
            return Err(AlgebraError::BadShape);
        }
        for row in &table {
            if row.len() != dim || row.iter().any(|v| v.len() != dim) {
                return Err(AlgebraError::BadShape);
            }
        }
        let alg = AlgebraSpec { dim, labels, table, embedding };
        for j in 0..dim {
            let mut unit = vec![Rat::zero(); dim];
            unit[j] = Rat::from_integer(1.into());
            if alg.table[0][j] != unit {
                return Err(AlgebraError::BadUnit(j));
            }
        }
        for i in 0..dim {
            for j in 0..i {
                if alg.table[i][j] != alg.table[j][i] {
                    return Err(AlgebraError::NonCommutative(i, j));
                }
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let left = alg.mul_coords(&alg.table[i][j], &basis_coords(dim, k));
                    let right = alg.mul_coords(&basis_coords(dim, i), &alg.table[j][k]);
                    if left != right {
                        return Err(AlgebraError::NonAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(Arc::new(alg))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<Vec<Rat>>] {
        &self.table
    }

    pub fn embedding(&self) -> &[(f64, f64)] {
        &self.embedding
    }

    fn mul_coords(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let f = ai * bj;
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] = &out[k] + &(&f * t);
                    }
                }
            }
        }
        out
    }

    /// Largest deviation of the advisory embedding from multiplicativity
    /// over all basis pairs. Zero-ish means the embedding is coherent.
    pub fn embedding_defect(&self) -> f64 {
        use super::scalar::rat_to_f64;
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let (ar, ai) = self.embedding[i];
                let (br, bi) = self.embedding[j];
                let prod = (ar * br - ai * bi, ar * bi + ai * br);
                let mut tr = 0.0;
                let mut ti = 0.0;
                for (k, c) in self.table[i][j].iter().enumerate() {
                    let cf = rat_to_f64(c);
                    tr += cf * self.embedding[k].0;
                    ti += cf * self.embedding[k].1;
                }
                let dr = prod.0 - tr;
                let di = prod.1 - ti;
                let d2 = dr * dr + di * di;
                if d2 > worst {
                    worst = d2;
                }
            }
        }
        // Squared max deviation; callers compare against tol^2.
        worst
    }
}

fn basis_coords(dim: usize, k: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[k] = Rat::from_integer(1.into());
    v
}

/// An element of a table algebra: coordinates in the basis.
#[derive(Clone, PartialEq)]
pub struct AlgebraElement {
    algebra: Arc<AlgebraSpec>,
    coords: Vec<Rat>,
}

impl AlgebraElement {
    pub fn new(algebra: Arc<AlgebraSpec>, coords: Vec<Rat>) -> Self {
        assert_eq!(coords.len(), algebra.dim(), "coordinate length != algebra dim");
        AlgebraElement { algebra, coords }
    }

    pub fn zero(algebra: Arc<AlgebraSpec>) -> Self {
        let dim = algebra.dim();
        AlgebraElement { algebra, coords: vec![Rat::zero(); dim] }
    }

    pub fn basis(algebra: Arc<AlgebraSpec>, k: usize) -> Self {
        let coords = basis_coords(algebra.dim(), k);
        AlgebraElement { algebra, coords }
    }

    pub fn scalar(algebra: Arc<AlgebraSpec>, c: Rat) -> Self {
        let mut coords = vec![Rat::zero(); algebra.dim()];
        coords[0] = c;
        AlgebraElement { algebra, coords }
    }

    pub fn algebra(&self) -> &Arc<AlgebraSpec> {
        &self.algebra
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn same_algebra(&self, other: &Self) -> Result<(), AlgebraError> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra {
            Ok(())
        } else {
            Err(AlgebraError::MixedAlgebras)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_algebra(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(AlgebraElement { algebra: self.algebra.clone(), coords })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_algebra(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(AlgebraElement { algebra: self.algebra.clone(), coords })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_algebra(other)?;
        let coords = self.algebra.mul_coords(&self.coords, &other.coords);
        Ok(AlgebraElement { algebra: self.algebra.clone(), coords })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        AlgebraElement {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }

    /// Advisory complex value under the recorded embedding.
    pub fn embed(&self) -> (f64, f64) {
        use super::scalar::rat_to_f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coords.iter().enumerate() {
            let cf = rat_to_f64(c);
            re += cf * self.algebra.embedding()[k].0;
            im += cf * self.algebra.embedding()[k].1;
        }
        (re, im)
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({})*{}", c, self.algebra.labels()[k])?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A linear equation `sum_k coeffs[k] * x_k = 0` whose coefficients live
/// in one table algebra and whose unknowns are rational.
pub struct AlgebraLinearForm {
    pub coeffs: Vec<AlgebraElement>,
}

/// Restriction of scalars: turn one algebra-valued linear equation into
/// `dim`-many Q-equations, one per basis coordinate.
///
/// The kernel over Q of the returned matrix equals the set of rational
/// solutions of the input equation.
pub fn restrict_scalars(eq: &AlgebraLinearForm) -> Result<Matrix<Rat>, AlgebraError> {
    let Some(first) = eq.coeffs.first() else {
        return Err(AlgebraError::BadShape);
    };
    for c in &eq.coeffs[1..] {
        first.same_algebra(c)?;
    }
    let dim = first.algebra().dim();
    Ok(Matrix::from_fn(dim, eq.coeffs.len(), |r, c| eq.coeffs[c].coords()[r].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::algebras::{q_i, q_i_sqrt2, q_plain};
    use crate::exact::scalar::{rat_int, GaussQ};

    #[test]
    fn unit_algebra_is_valid() {
        let q = q_plain();
        assert_eq!(q.dim(), 1);
    }

    #[test]
    fn gaussian_field_is_valid_and_i_squares_to_minus_one() {
        let qi = q_i();
        let i = AlgebraElement::basis(qi.clone(), 1);
        let sq = i.mul(&i).unwrap();
        assert_eq!(sq.coords(), &[rat_int(-1), rat_int(0)]);
        // Mirrors the standalone Gaussian scalar type.
        assert_eq!(GaussQ::i() * GaussQ::i(), GaussQ::from_int(-1));
    }

    #[test]
    fn biquadratic_field_is_valid() {
        // Basis {1, i, s, is} with s^2 = 2, i^2 = -1; the 16-entry table
        // is written out by hand in `test_algebras`.
        let a = q_i_sqrt2();
        let s = AlgebraElement::basis(a.clone(), 2);
        let is = AlgebraElement::basis(a.clone(), 3);
        assert_eq!(s.mul(&s).unwrap().coords()[0], rat_int(2));
        assert_eq!(is.mul(&is).unwrap().coords()[0], rat_int(-2));
        // embedding should be coherent: defect ~ 0
        assert!(a.embedding_defect() < 1e-18);
    }

    #[test]
    fn bad_unit_is_reported() {
        let labels = alloc::vec!["1".into(), "t".into()];
        // e0*e1 = e0 breaks the unit law.
        let table = alloc::vec![
            alloc::vec![
                alloc::vec![rat_int(1), rat_int(0)],
                alloc::vec![rat_int(1), rat_int(0)],
            ],
            alloc::vec![
                alloc::vec![rat_int(1), rat_int(0)],
                alloc::vec![rat_int(0), rat_int(0)],
            ],
        ];
        let err = AlgebraSpec::new(labels, table, alloc::vec![(1.0, 0.0), (0.0, 0.0)]);
        assert_eq!(err.unwrap_err(), AlgebraError::BadUnit(1));
    }

    #[test]
    fn noncommutative_table_is_reported() {
        let labels: Vec<String> = alloc::vec!["1".into(), "t".into()];
        let e = |k: usize| -> Vec<Rat> { basis_coords(2, k) };
        // e1*e0 = e1 but e0*e1 = e1 holds; break symmetry at (1,1) vs...
        // use an asymmetric table: e1*e1 = e0 in one order and e1 in the
        // reflected spot cannot be expressed, so instead poison (1,0).
        let table = alloc::vec![
            alloc::vec![e(0), e(1)],
            alloc::vec![e(0), e(0)],
        ];
        let err = AlgebraSpec::new(labels, table, alloc::vec![(1.0, 0.0), (0.0, 0.0)]);
        assert_eq!(err.unwrap_err(), AlgebraError::NonCommutative(1, 0));
    }

    #[test]
    fn restrict_scalars_over_q_is_one_row() {
        let q = q_plain();
        let eq = AlgebraLinearForm {
            coeffs: alloc::vec![
                AlgebraElement::scalar(q.clone(), rat_int(2)),
                AlgebraElement::scalar(q.clone(), rat_int(-3)),
            ],
        };
        let m = restrict_scalars(&eq).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 2));
    }

    #[test]
    fn restrict_scalars_gaussian_example() {
        // a*i + 2c*i + e + 2d = 0 over Q(i), unknowns (a, b, c, d, e):
        // rows {a + 2c = 0, e + 2d = 0}.
        let qi = q_i();
        let i = AlgebraElement::basis(qi.clone(), 1);
        let one = AlgebraElement::basis(qi.clone(), 0);
        let eq = AlgebraLinearForm {
            coeffs: alloc::vec![
                i.clone(),
                AlgebraElement::zero(qi.clone()),
                i.scale(&rat_int(2)),
                one.scale(&rat_int(2)),
                one.clone(),
            ],
        };
        let m = restrict_scalars(&eq).unwrap();
        assert_eq!(m.rows(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 3);
        // Each kernel vector solves the original algebra equation.
        for v in &k {
            let mut acc = AlgebraElement::zero(qi.clone());
            for (coef, x) in eq.coeffs.iter().zip(v) {
                acc = acc.add(&coef.scale(x)).unwrap();
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn restrict_scalars_biquadratic_forces_four_vanishings() {
        // a*i + c*(i*s) + e + d*s = 0 over Q(i, sqrt2) forces
        // a = c = d = e = 0 (b does not appear).
        let a = q_i_sqrt2();
        let i = AlgebraElement::basis(a.clone(), 1);
        let s = AlgebraElement::basis(a.clone(), 2);
        let is = AlgebraElement::basis(a.clone(), 3);
        let one = AlgebraElement::basis(a.clone(), 0);
        let eq = AlgebraLinearForm {
            coeffs: alloc::vec![
                i,
                AlgebraElement::zero(a.clone()),
                is,
                s,
                one,
            ],
        };
        let m = restrict_scalars(&eq).unwrap();
        assert_eq!(m.rows(), 4);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(k[0][0].is_zero() && k[0][2].is_zero() && k[0][3].is_zero() && k[0][4].is_zero());
    }

    #[test]
    fn mixed_algebras_are_rejected() {
        let q = q_plain();
        let qi = q_i();
        let eq = AlgebraLinearForm {
            coeffs: alloc::vec![
                AlgebraElement::scalar(q, rat_int(1)),
                AlgebraElement::basis(qi, 1),
            ],
        };
        assert_eq!(restrict_scalars(&eq).unwrap_err(), AlgebraError::MixedAlgebras);
    }
}
