//! Hopf algebras as data.
//!
//! Two backends sit behind one enum: a fully general structure-constant
//! form for finite-dimensional algebras, and a lazily evaluated group
//! algebra of a finitely generated abelian group. The lazy form never
//! materializes a basis; its elements are group tuples and its Hopf
//! structure is the grouplike one (Δg = g⊗g, εg = 1, Sg = -g additively).
//!
//! `validate_hopf` checks every Hopf axiom on the structure-constant
//! backend and reports a witness basis tuple for each failure.

use crate::error::BuildError;
use crate::group::{AbelianGroup, GroupElem, GroupTable};
use crate::linalg::{ExactMatrix, SparseVec};
use crate::report::ValidationReport;
use crate::scalar::{Field, FieldScalar};

/// Finite-dimensional Hopf algebra by structure constants.
///
/// Basis is `0..dim`. `mult[i][j]` is the product of basis elements i and j
/// as a sparse vector, `comult[i]` lives in the Kronecker coordinates of
/// H⊗H (index `j * dim + k`), `counit` is a dense row, and the antipode is
/// a dim x dim matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScHopf {
    pub field: Field,
    pub dim: usize,
    pub mult: Vec<Vec<SparseVec>>,
    pub unit: SparseVec,
    pub comult: Vec<SparseVec>,
    pub counit: Vec<FieldScalar>,
    pub antipode: ExactMatrix,
    /// Printable basis labels (group element names for group algebras).
    pub labels: Vec<String>,
}

impl ScHopf {
    pub fn from_parts(
        field: Field,
        dim: usize,
        mult: Vec<Vec<SparseVec>>,
        unit: SparseVec,
        comult: Vec<SparseVec>,
        counit: Vec<FieldScalar>,
        antipode: ExactMatrix,
    ) -> Result<ScHopf, BuildError> {
        if mult.len() != dim
            || mult.iter().any(|r| r.len() != dim)
            || comult.len() != dim
            || counit.len() != dim
            || antipode.rows() != dim
            || antipode.cols() != dim
        {
            return Err(BuildError::Invalid("structure constant tables have wrong shape".into()));
        }
        let labels = (0..dim).map(|i| format!("b{i}")).collect();
        Ok(ScHopf { field, dim, mult, unit, comult, counit, antipode, labels })
    }

    /// Group algebra K[G] for a verified multiplication table.
    pub fn group_algebra(group: &GroupTable, field: Field) -> ScHopf {
        let dim = group.order();
        let mult = (0..dim)
            .map(|a| (0..dim).map(|b| SparseVec::unit(group.mul(a, b), field)).collect())
            .collect();
        let unit = SparseVec::unit(group.identity(), field);
        let comult = (0..dim).map(|g| SparseVec::unit(g * dim + g, field)).collect();
        let counit = vec![field.one(); dim];
        let mut antipode = ExactMatrix::zero(dim, dim, field);
        for g in 0..dim {
            antipode.set(group.inverse(g), g, field.one()).unwrap();
        }
        let labels = (0..dim).map(|g| format!("g{g}")).collect();
        ScHopf { field, dim, mult, unit, comult, counit, antipode, labels }
    }

    pub fn mul_elem(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                out.add_scaled(&self.mult[i][j], &(a * b));
            }
        }
        out
    }

    /// Δ(x) in Kronecker coordinates of H⊗H.
    pub fn comult_elem(&self, x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, a) in x.iter() {
            out.add_scaled(&self.comult[i], a);
        }
        out
    }

    pub fn counit_elem(&self, x: &SparseVec) -> FieldScalar {
        let mut acc = self.field.zero();
        for (i, a) in x.iter() {
            acc += &(&self.counit[i] * a);
        }
        acc
    }

    pub fn antipode_elem(&self, x: &SparseVec) -> SparseVec {
        self.antipode.apply(x)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
}

/// Lazy group algebra of a finitely generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroupAlgebra {
    pub field: Field,
    pub group: AbelianGroup,
}

impl AbelianGroupAlgebra {
    pub fn antipode(&self, g: &GroupElem) -> GroupElem {
        self.group.neg(g)
    }
}

/// A Hopf algebra: structure constants, or a lazy abelian group algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfAlgebraData {
    StructureConstants(ScHopf),
    Abelian(AbelianGroupAlgebra),
}

impl HopfAlgebraData {
    pub fn field(&self) -> Field {
        match self {
            HopfAlgebraData::StructureConstants(h) => h.field,
            HopfAlgebraData::Abelian(h) => h.field,
        }
    }

    pub fn dim(&self) -> Option<usize> {
        match self {
            HopfAlgebraData::StructureConstants(h) => Some(h.dim),
            HopfAlgebraData::Abelian(h) => h.group.order(),
        }
    }

    pub fn as_structure_constants(&self) -> Option<&ScHopf> {
        match self {
            HopfAlgebraData::StructureConstants(h) => Some(h),
            HopfAlgebraData::Abelian(_) => None,
        }
    }

    pub fn as_abelian(&self) -> Option<&AbelianGroupAlgebra> {
        match self {
            HopfAlgebraData::Abelian(h) => Some(h),
            HopfAlgebraData::StructureConstants(_) => None,
        }
    }
}

/// Input form for [`build_group_algebra`].
pub enum GroupInput {
    Table(Vec<Vec<usize>>),
    Moduli(Vec<u64>),
}

/// Build a grouplike Hopf algebra: structure constants for a finite
/// multiplication table, lazy form for an abelian moduli vector.
pub fn build_group_algebra(input: GroupInput, field: Field) -> Result<HopfAlgebraData, BuildError> {
    match input {
        GroupInput::Table(table) => {
            let group = GroupTable::new(table)?;
            Ok(HopfAlgebraData::StructureConstants(ScHopf::group_algebra(&group, field)))
        }
        GroupInput::Moduli(moduli) => Ok(HopfAlgebraData::Abelian(AbelianGroupAlgebra {
            field,
            group: AbelianGroup::new(moduli),
        })),
    }
}

/// Structure-constant form of a finite abelian group algebra, together with
/// the element list giving the basis order. Used to cross-check the lazy
/// word model against the fully general machinery.
pub fn abelian_to_structure_constants(
    algebra: &AbelianGroupAlgebra,
) -> Option<(ScHopf, Vec<GroupElem>)> {
    let (table, elems) = algebra.group.to_table()?;
    let mut sc = ScHopf::group_algebra(&table, algebra.field);
    sc.labels = elems.iter().map(|g| crate::group::format_elem(g)).collect();
    Some((sc, elems))
}

/// Check every Hopf axiom on a structure-constant backend.
///
/// The abelian backend is grouplike by construction, so it validates
/// trivially (the report says so).
pub fn validate_hopf(h: &HopfAlgebraData) -> ValidationReport {
    let mut report = ValidationReport::new("hopf algebra");
    let sc = match h {
        HopfAlgebraData::Abelian(_) => {
            report.pass("abelian backend is grouplike by construction");
            return report;
        }
        HopfAlgebraData::StructureConstants(sc) => sc,
    };
    let d = sc.dim;
    let field = sc.field;
    let basis = |i: usize| SparseVec::unit(i, field);

    // associativity
    let mut witness = None;
    'assoc: for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let left = sc.mul_elem(&sc.mult[i][j], &basis(k));
                let right = sc.mul_elem(&basis(i), &sc.mult[j][k]);
                if left != right {
                    witness = Some(format!("({i}, {j}, {k})"));
                    break 'assoc;
                }
            }
        }
    }
    report.record("associativity", witness);

    // unit
    let mut witness = None;
    for i in 0..d {
        let e = basis(i);
        if sc.mul_elem(&sc.unit, &e) != e || sc.mul_elem(&e, &sc.unit) != e {
            witness = Some(format!("({i})"));
            break;
        }
    }
    report.record("unit law", witness);

    // coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ in H⊗H⊗H coordinates (j*d² + k*d + l)
    let mut witness = None;
    for i in 0..d {
        let mut lhs = SparseVec::new();
        let mut rhs = SparseVec::new();
        for (jk, c) in sc.comult[i].iter() {
            let (j, k) = (jk / d, jk % d);
            for (ab, e) in sc.comult[j].iter() {
                let (a, b) = (ab / d, ab % d);
                lhs.add_to(a * d * d + b * d + k, &(c * e));
            }
            for (ab, e) in sc.comult[k].iter() {
                let (a, b) = (ab / d, ab % d);
                rhs.add_to(j * d * d + a * d + b, &(c * e));
            }
        }
        if lhs != rhs {
            witness = Some(format!("({i})"));
            break;
        }
    }
    report.record("coassociativity", witness);

    // counit law: (ε⊗id)Δ = id = (id⊗ε)Δ
    let mut witness = None;
    for i in 0..d {
        let mut left = SparseVec::new();
        let mut right = SparseVec::new();
        for (jk, c) in sc.comult[i].iter() {
            let (j, k) = (jk / d, jk % d);
            left.add_to(k, &(&sc.counit[j] * c));
            right.add_to(j, &(&sc.counit[k] * c));
        }
        if left != basis(i) || right != basis(i) {
            witness = Some(format!("({i})"));
            break;
        }
    }
    report.record("counit law", witness);

    // Δ is an algebra map
    let mut witness = None;
    'dalg: for i in 0..d {
        for j in 0..d {
            let lhs = sc.comult_elem(&sc.mult[i][j]);
            // Δ(e_i)Δ(e_j) with componentwise product in H⊗H
            let mut rhs = SparseVec::new();
            for (ab, c) in sc.comult[i].iter() {
                let (a, b) = (ab / d, ab % d);
                for (uv, e) in sc.comult[j].iter() {
                    let (u, v) = (uv / d, uv % d);
                    let prod_l = &sc.mult[a][u];
                    let prod_r = &sc.mult[b][v];
                    let coeff = c * e;
                    for (x, cx) in prod_l.iter() {
                        for (y, cy) in prod_r.iter() {
                            rhs.add_to(x * d + y, &(&(&coeff * cx) * cy));
                        }
                    }
                }
            }
            if lhs != rhs {
                witness = Some(format!("({i}, {j})"));
                break 'dalg;
            }
        }
    }
    if witness.is_none() {
        let lhs = sc.comult_elem(&sc.unit);
        let rhs = sc.unit.tensor(&sc.unit, d);
        if lhs != rhs {
            witness = Some("(unit)".into());
        }
    }
    report.record("comultiplication is an algebra map", witness);

    // ε is an algebra map
    let mut witness = None;
    'ealg: for i in 0..d {
        for j in 0..d {
            let lhs = sc.counit_elem(&sc.mult[i][j]);
            let rhs = &sc.counit[i] * &sc.counit[j];
            if lhs != rhs {
                witness = Some(format!("({i}, {j})"));
                break 'ealg;
            }
        }
    }
    if witness.is_none() && !sc.counit_elem(&sc.unit).is_one() {
        witness = Some("(unit)".into());
    }
    report.record("counit is an algebra map", witness);

    // antipode convolution identity: m(S⊗id)Δ = uε = m(id⊗S)Δ
    let mut witness = None;
    for i in 0..d {
        let mut left = SparseVec::new();
        let mut right = SparseVec::new();
        for (jk, c) in sc.comult[i].iter() {
            let (j, k) = (jk / d, jk % d);
            let sj = sc.antipode_elem(&basis(j));
            let sk = sc.antipode_elem(&basis(k));
            let mut l = sc.mul_elem(&sj, &basis(k));
            l.scale(c);
            let mut r = sc.mul_elem(&basis(j), &sk);
            r.scale(c);
            left.add_scaled(&l, &field.one());
            right.add_scaled(&r, &field.one());
        }
        let mut expected = sc.unit.clone();
        expected.scale(&sc.counit[i]);
        if left != expected || right != expected {
            witness = Some(format!("({})", sc.label(i)));
            break;
        }
    }
    report.record("antipode convolution identity", witness);

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_algebras_pass_validation() {
        for table in [GroupTable::cyclic(1), GroupTable::cyclic(2), GroupTable::cyclic(5)] {
            let h = HopfAlgebraData::StructureConstants(ScHopf::group_algebra(
                &table,
                Field::Rational,
            ));
            let report = validate_hopf(&h);
            assert!(report.all_passed(), "{report}");
        }
        let s3 = HopfAlgebraData::StructureConstants(ScHopf::group_algebra(
            &GroupTable::symmetric3(),
            Field::prime(7).unwrap(),
        ));
        assert!(validate_hopf(&s3).all_passed());
    }

    #[test]
    fn trivial_group_is_the_base_field() {
        let h = build_group_algebra(GroupInput::Table(vec![vec![0]]), Field::Rational).unwrap();
        assert_eq!(h.dim(), Some(1));
        assert!(validate_hopf(&h).all_passed());
    }

    #[test]
    fn z2_structure() {
        let h = build_group_algebra(
            GroupInput::Table(vec![vec![0, 1], vec![1, 0]]),
            Field::Rational,
        )
        .unwrap();
        let sc = h.as_structure_constants().unwrap();
        assert_eq!(sc.dim, 2);
        // Δ(g) = g⊗g and S(g) = g (g is its own inverse)
        assert_eq!(sc.comult[1], SparseVec::unit(1 * 2 + 1, Field::Rational));
        assert_eq!(
            sc.antipode_elem(&SparseVec::unit(1, Field::Rational)),
            SparseVec::unit(1, Field::Rational)
        );
    }

    #[test]
    fn lazy_integers_from_moduli() {
        let h = build_group_algebra(GroupInput::Moduli(vec![0]), Field::Rational).unwrap();
        assert_eq!(h.dim(), None);
        let a = h.as_abelian().unwrap();
        assert_eq!(a.group.add(&[3], &[-5]), vec![-2]);
        assert!(validate_hopf(&h).all_passed());
    }

    #[test]
    fn broken_antipode_fails_with_witness() {
        let table = GroupTable::cyclic(3);
        let mut sc = ScHopf::group_algebra(&table, Field::Rational);
        sc.antipode = ExactMatrix::identity(3, Field::Rational);
        let report = validate_hopf(&HopfAlgebraData::StructureConstants(sc));
        assert!(!report.all_passed());
        let failure = report.failures().next().unwrap();
        assert_eq!(failure.name, "antipode convolution identity");
        // S(g) = g is wrong precisely on the non-involutive elements
        assert_eq!(failure.witness.as_deref(), Some("(g1)"));
    }

    #[test]
    fn perturbed_comultiplication_fails_coassociativity() {
        let table = GroupTable::cyclic(4);
        let mut sc = ScHopf::group_algebra(&table, Field::Rational);
        // swap one output pair: Δ(g1) := g1 ⊗ g2 instead of g1 ⊗ g1
        sc.comult[1] = SparseVec::unit(1 * 4 + 2, Field::Rational);
        let report = validate_hopf(&HopfAlgebraData::StructureConstants(sc));
        let coassoc = report.check("coassociativity").unwrap();
        assert!(!coassoc.passed);
        assert!(coassoc.witness.is_some());
    }

    #[test]
    fn associativity_failure_names_the_triple() {
        let mut table = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        table[2][2] = 2;
        let err = build_group_algebra(GroupInput::Table(table), Field::Rational).unwrap_err();
        assert!(err.to_string().contains('('));
    }
}
