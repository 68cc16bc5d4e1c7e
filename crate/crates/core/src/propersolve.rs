//! Inhomogeneous proper-value equations `[(K+1) dr + 4μ] x = π`.
//!
//! `x = Σ_A λ_A X_A` ranges over combinations of eight `I·P` idempotents.
//! Requiring every non-scalar bold component of `(op + 4μ) x` to vanish is a
//! homogeneous linear system in `λ`; the scalar component that survives is
//! the co-value `π`. The system is always assembled by applying the operator,
//! never transcribed.

use alloc::vec::Vec;

use num_traits::Zero;
use thiserror::Error;

use crate::blade::{Axis, Blade, GeneratorSet, Sign, Signature};
use crate::idempotents::{IdempotentDescriptor, Plane};
use crate::linalg::{self, PivotOrder};
use crate::multivector::Multivector;
use crate::operators::{AffineRational, OperatorExpr};
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("basis element {index} is not in the spatial bold subalgebra")]
    BasisOutsideSubalgebra { index: usize },
    #[error("operator image of basis element {index} has a term on {blade:?} outside the spatial bold subalgebra")]
    ImageOutsideSubalgebra { index: usize, blade: Blade },
    #[error("empty basis")]
    EmptyBasis,
}

/// The seven non-scalar spatial bold blades in column order
/// `dx1, dx2, dx3, dx12, dx13, dx23, dx123`.
pub fn constraint_blades() -> [Blade; 7] {
    use Axis::*;
    let d = |axes: &[Axis]| Blade::diagonal(GeneratorSet::from_axes(axes.iter().copied()));
    [d(&[X1]), d(&[X2]), d(&[X3]), d(&[X1, X2]), d(&[X1, X3]), d(&[X2, X3]), d(&[X1, X2, X3])]
}

fn in_spatial_bold(blade: &Blade) -> bool {
    blade.is_diagonal() && !blade.cot.contains(crate::blade::Generator::T)
}

/// The eight basis idempotents for a plane `ij` with normal `k`, in the order
/// `I^+P_i^+, I^+P_i^-, I^-P_i^+, I^-P_i^-, I^+P_k^+, I^+P_k^-, I^-P_k^+, I^-P_k^-`.
/// For plane 12 this is the order of the `dr` action table.
pub fn plane_basis(plane: Plane) -> Vec<IdempotentDescriptor> {
    let (i, _) = plane.axes();
    let k = plane.normal();
    let mut out = Vec::with_capacity(8);
    for axis in [i, k] {
        for i_sign in Sign::BOTH {
            for p_sign in Sign::BOTH {
                out.push(IdempotentDescriptor::ip(plane, i_sign, axis, p_sign));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperValueProblem {
    pub op: OperatorExpr,
    pub basis: Vec<Multivector>,
    pub mu: Rational,
}

impl ProperValueProblem {
    /// `(K+1) dr` over the plane-12 basis.
    pub fn standard(mu: Rational) -> Self {
        Self::for_plane(Plane::P12, mu)
    }

    pub fn for_plane(plane: Plane, mu: Rational) -> Self {
        ProperValueProblem {
            op: OperatorExpr::total_space(),
            basis: plane_basis(plane).iter().map(IdempotentDescriptor::expand).collect(),
            mu,
        }
    }

    /// `op + 4μ·Id`.
    pub fn shifted_operator(&self) -> OperatorExpr {
        self.op.clone().shifted(int(4) * &self.mu)
    }

    pub fn combination(&self, lambda: &[Rational]) -> Multivector {
        combination(&self.basis, lambda)
    }
}

pub fn combination(basis: &[Multivector], lambda: &[Rational]) -> Multivector {
    basis
        .iter()
        .zip(lambda)
        .fold(Multivector::zero(), |acc, (x, l)| acc + x.scale(l))
}

/// Entry `[r][A]` is the coefficient of `rows[r]` in `(op + 4μ) X_A`, split
/// into its constant and `μ` parts. `scalar_row[A]` is the scalar
/// coefficient, held out as the co-value functional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSystem {
    pub rows: Vec<Blade>,
    pub entries: Vec<Vec<AffineRational>>,
    pub scalar_row: Vec<AffineRational>,
}

impl AffineSystem {
    pub fn columns(&self) -> usize {
        self.scalar_row.len()
    }

    /// The constraint matrix at a fixed `μ`.
    pub fn at(&self, mu: &Rational) -> Vec<Vec<Rational>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.eval(mu)).collect())
            .collect()
    }

    pub fn entry(&self, row: &Blade, column: usize) -> Option<&AffineRational> {
        let r = self.rows.iter().position(|b| b == row)?;
        self.entries[r].get(column)
    }
}

pub fn build_system(p: &ProperValueProblem) -> Result<AffineSystem, SolveError> {
    if p.basis.is_empty() {
        return Err(SolveError::EmptyBasis);
    }
    let sig = Signature::ALL_PLUS;
    let rows: Vec<Blade> = constraint_blades().to_vec();
    let mut entries = alloc::vec![Vec::with_capacity(p.basis.len()); rows.len()];
    let mut scalar_row = Vec::with_capacity(p.basis.len());
    let four = int(4);
    for (index, x) in p.basis.iter().enumerate() {
        if !x.support().all(|b| in_spatial_bold(&b)) {
            return Err(SolveError::BasisOutsideSubalgebra { index });
        }
        let image = p.op.apply(x, &sig);
        if let Some(blade) = image.support().find(|b| !in_spatial_bold(b)) {
            return Err(SolveError::ImageOutsideSubalgebra { index, blade });
        }
        for (r, blade) in rows.iter().enumerate() {
            entries[r].push(AffineRational::new(image.coefficient(blade), &four * x.coefficient(blade)));
        }
        scalar_row.push(AffineRational::new(image.scalar_part(), &four * x.scalar_part()));
    }
    Ok(AffineSystem { rows, entries, scalar_row })
}

/// Exact solution set at one `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionFamily {
    pub mu: Rational,
    /// Canonical basis: the leading columns are the free parameters, each
    /// vector has a one at its own free column.
    pub nullspace_basis: Vec<Vec<Rational>>,
    /// `π(λ)` for each basis vector.
    pub covalue: Vec<Rational>,
    /// Non-scalar part of `(op + 4μ) Σ λ_A X_A` for each basis vector.
    pub residuals: Vec<Multivector>,
}

impl SolutionFamily {
    pub fn dimension(&self) -> usize {
        self.nullspace_basis.len()
    }

    pub fn residual_zero(&self) -> bool {
        self.residuals.iter().all(Multivector::is_zero)
    }

    /// Whether `lambda` is a combination of the basis vectors.
    pub fn contains(&self, lambda: &[Rational]) -> bool {
        linalg::in_row_space(&self.nullspace_basis, lambda)
    }
}

pub fn solve(p: &ProperValueProblem) -> Result<SolutionFamily, SolveError> {
    let system = build_system(p)?;
    let matrix = system.at(&p.mu);
    let nullspace_basis = linalg::nullspace(&matrix, system.columns(), PivotOrder::Trailing);
    let shifted = p.shifted_operator();
    let sig = Signature::ALL_PLUS;
    let mut covalue = Vec::with_capacity(nullspace_basis.len());
    let mut residuals = Vec::with_capacity(nullspace_basis.len());
    for lambda in &nullspace_basis {
        covalue.push(
            lambda
                .iter()
                .zip(&system.scalar_row)
                .fold(Rational::zero(), |acc, (l, s)| acc + l * s.eval(&p.mu)),
        );
        let image = shifted.apply(&p.combination(lambda), &sig);
        residuals.push(image.non_scalar_part());
    }
    Ok(SolutionFamily { mu: p.mu.clone(), nullspace_basis, covalue, residuals })
}

/// A linear relation `Σ coeffs_A λ_A = 0` quoted from the hand derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub id: &'static str,
    pub text: &'static str,
    pub coeffs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: Relation,
    /// In the row space of the computed μ = 0 system.
    pub implied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    /// Reduced μ = 0 constraint rows (trailing pivots).
    pub reduced: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
    pub checks: Vec<RelationCheck>,
    /// The final parametrization (`λ_4 = λ_3` and the closed forms for
    /// `λ_5 … λ_8`) spans the whole computed row space, so its solution set
    /// is exactly the nullspace.
    pub parametrization_complete: bool,
}

fn relation(id: &'static str, text: &'static str, num: [i64; 8], den: i64) -> Relation {
    Relation { id, text, coeffs: num.iter().map(|n| crate::rational::rat(*n, den)).collect() }
}

/// The μ = 0 instances of the hand-derived relations, each written as a
/// functional that must vanish.
pub fn mu0_relations() -> Vec<Relation> {
    alloc::vec![
        relation("Eq41", "(λ1+λ2)+(λ5+λ6) = 0 (dx1 row)", [1, 1, 0, 0, 1, 1, 0, 0], 1),
        relation("Eq42", "(λ1+λ2)+(λ5+λ6) = 0 (dx2 row)", [1, 1, 0, 0, 1, 1, 0, 0], 1),
        relation("Eq43", "λ4 = λ3", [0, 0, -1, 1, 0, 0, 0, 0], 1),
        relation("Eq44", "(λ1+λ2)+(λ5+λ6) = 0", [1, 1, 0, 0, 1, 1, 0, 0], 1),
        relation("Eq45", "½[(λ1−λ2)+(λ3−λ4)]+(λ5−λ6) = 0", [1, -1, 1, -1, 2, -2, 0, 0], 2),
        relation("Eq46", "½[(λ1−λ2)−(λ3−λ4)]+(λ5−λ6) = 0", [1, -1, -1, 1, 2, -2, 0, 0], 2),
        relation("Eq47", "(λ1−λ2)+2(λ5−λ6) = 0", [1, -1, 0, 0, 2, -2, 0, 0], 1),
        relation("Eq48", "(λ1+λ2)−(λ3+λ4)+(λ5+λ6)−(λ7+λ8) = 0", [1, 1, -1, -1, 1, 1, -1, -1], 1),
        relation("Eq49", "(λ1+λ2)+(λ3+λ4)+(λ5+λ6)+(λ7+λ8) = 0", [1, 1, 1, 1, 1, 1, 1, 1], 1),
        relation("Eq50", "(λ1+λ2)+(λ5+λ6) = 0", [1, 1, 0, 0, 1, 1, 0, 0], 1),
        relation("Eq51", "(λ3+λ4)+(λ7+λ8) = 0", [0, 0, 1, 1, 0, 0, 1, 1], 1),
        relation("Eq52", "(λ1−λ2)+½(λ5−λ6)−½(λ7−λ8) = 0", [2, -2, 0, 0, 1, -1, -1, 1], 2),
        relation("Eq55", "λ5+λ6 = −λ1−λ2", [1, 1, 0, 0, 1, 1, 0, 0], 1),
        relation("Eq56", "λ5−λ6 = −λ1/2+λ2/2", [1, -1, 0, 0, 2, -2, 0, 0], 2),
        relation("Eq57a", "λ5 = −¾λ1 − ¼λ2", [3, 1, 0, 0, 4, 0, 0, 0], 4),
        relation("Eq57b", "λ6 = −¼λ1 − ¾λ2", [1, 3, 0, 0, 0, 4, 0, 0], 4),
        relation("Eq58", "λ7+λ8 = −2λ3", [0, 0, 2, 0, 0, 0, 1, 1], 1),
        relation("Eq59", "λ7−λ8 = 3/2 λ1 − 3/2 λ2", [-3, 3, 0, 0, 0, 0, 2, -2], 2),
        relation("Eq60", "λ7 = ¾λ1 − ¾λ2 − λ3", [-3, 3, 4, 0, 0, 0, 4, 0], 4),
        relation("Eq61", "λ8 = −¾λ1 + ¾λ2 − λ3", [3, -3, 4, 0, 0, 0, 0, 4], 4),
    ]
}

/// Checks every μ = 0 relation for implication by the first-principles
/// system.
pub fn mu0_relation_report() -> RelationReport {
    let system = build_system(&ProperValueProblem::standard(Rational::zero()))
        .expect("the plane-12 basis stays in the spatial bold subalgebra");
    let matrix = system.at(&Rational::zero());
    let (reduced, pivots) = linalg::rref(&matrix, PivotOrder::Trailing);
    let checks: Vec<RelationCheck> = mu0_relations()
        .into_iter()
        .map(|relation| RelationCheck { implied: linalg::in_row_space(&matrix, &relation.coeffs), relation })
        .collect();
    let final_form: Vec<Vec<Rational>> = checks
        .iter()
        .filter(|c| ["Eq43", "Eq57a", "Eq57b", "Eq60", "Eq61"].contains(&c.relation.id))
        .map(|c| c.relation.coeffs.clone())
        .collect();
    let parametrization_complete = linalg::rank(&final_form) == linalg::rank(&matrix)
        && matrix.iter().all(|row| linalg::in_row_space(&final_form, row));
    RelationReport { reduced, pivots, checks, parametrization_complete }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elements::dr;
    use crate::rational::{int, rat};

    fn lam(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|(n, d)| rat(*n, *d)).collect()
    }

    #[test]
    fn selected_table_cells() {
        let s = build_system(&ProperValueProblem::standard(int(0))).unwrap();
        let [dx1, _, _, _, dx13, _, dx123] = constraint_blades();
        assert_eq!(s.entry(&dx1, 0), Some(&AffineRational::new(int(1), int(1))));
        assert!(s.entry(&dx13, 6).unwrap().is_zero());
        assert!(s.entry(&dx123, 0).unwrap().is_zero());
    }

    #[test]
    fn mu_zero_family() {
        let fam = solve(&ProperValueProblem::standard(int(0))).unwrap();
        assert_eq!(fam.dimension(), 3);
        assert!(fam.residual_zero());
        assert!(fam.covalue.iter().all(Zero::is_zero));
        let expected = alloc::vec![
            lam(&[(1, 1), (0, 1), (0, 1), (0, 1), (-3, 4), (-1, 4), (3, 4), (-3, 4)]),
            lam(&[(0, 1), (1, 1), (0, 1), (0, 1), (-1, 4), (-3, 4), (-3, 4), (3, 4)]),
            lam(&[(0, 1), (0, 1), (1, 1), (1, 1), (0, 1), (0, 1), (-1, 1), (-1, 1)]),
        ];
        assert_eq!(fam.nullspace_basis, expected);
        assert!(fam.contains(&lam(&[(1, 1), (1, 1), (0, 1), (0, 1), (-1, 1), (-1, 1), (0, 1), (0, 1)])));
        assert!(fam.contains(&lam(&[(0, 1), (0, 1), (1, 1), (1, 1), (0, 1), (0, 1), (-1, 1), (-1, 1)])));
    }

    #[test]
    fn third_solution_makes_dr_x_scalar() {
        let p = ProperValueProblem::standard(int(0));
        let l = lam(&[(1, 1), (-1, 1), (0, 1), (0, 1), (-1, 2), (1, 2), (3, 2), (-3, 2)]);
        let fam = solve(&p).unwrap();
        assert!(fam.contains(&l));
        let x = p.combination(&l);
        assert_eq!(&dr() * &x, Multivector::scalar(rat(3, 2)));
        let t = OperatorExpr::total_spacetime();
        assert!(t.apply(&x, &Signature::ALL_PLUS).is_zero());
    }

    #[test]
    fn other_planes_have_three_dimensional_families() {
        for plane in Plane::ALL {
            let fam = solve(&ProperValueProblem::for_plane(plane, int(0))).unwrap();
            assert_eq!(fam.dimension(), 3, "{plane}");
            assert!(fam.residual_zero());
            assert!(fam.covalue.iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn generic_mu_residuals_vanish() {
        for mu in [int(1), rat(-1, 3), int(7)] {
            let p = ProperValueProblem::standard(mu);
            let fam = solve(&p).unwrap();
            assert!(fam.residual_zero());
            for (l, pi) in fam.nullspace_basis.iter().zip(&fam.covalue) {
                let image = p.shifted_operator().apply(&p.combination(l), &Signature::ALL_PLUS);
                assert_eq!(&image.scalar_part(), pi);
            }
        }
    }

    #[test]
    fn relation_report() {
        let report = mu0_relation_report();
        assert!(report.checks.iter().all(|c| c.implied), "{:?}", report.checks);
        assert!(report.parametrization_complete);
        assert_eq!(report.pivots.len(), 5);
    }

    #[test]
    fn rejects_bases_outside_subalgebra() {
        let mut p = ProperValueProblem::standard(int(0));
        p.basis[2] = crate::elements::dt();
        assert_eq!(build_system(&p), Err(SolveError::BasisOutsideSubalgebra { index: 2 }));
        let mut p = ProperValueProblem::standard(int(0));
        p.op = OperatorExpr::total_spacetime();
        assert!(matches!(build_system(&p), Err(SolveError::ImageOutsideSubalgebra { index: 0, .. })));
    }
}
