use igalois_core::assoc::{SearchConfig, StructureAlgebra, Verdict};
use igalois_core::coact::{ComoduleAlgebra, Comodule, COACTION_MULTIPLICATIVE};
use igalois_core::examples::{
    diagonal_algebra, dual_group_algebra, free_gset_function_algebra, graded_matrix_algebra, group_algebra,
    polynomial_quotient, self_coaction, sweedler_h4, translation_action, GroupTable,
};
use igalois_core::exactla::{Field, Matrix, Polynomial, Rationals, Subspace};
use igalois_core::hopf::HopfData;
use igalois_core::Error;

type Q = Rationals;

fn q() -> Q {
    Rationals
}

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

fn kz2() -> HopfData<Q> {
    group_algebra(&q(), &GroupTable::cyclic(2))
}

fn two_orbits() -> ComoduleAlgebra<Q> {
    let g = GroupTable::cyclic(2);
    free_gset_function_algebra(&q(), &g, 4, &translation_action(&g, 2)).unwrap()
}

fn point(k: &Q) -> StructureAlgebra<Q> {
    diagonal_algebra(k, 1)
}

fn fraction(k: &Q, a: i64, b: i64) -> <Q as Field>::Elem {
    k.div(&k.from_i64(a), &k.from_i64(b)).unwrap()
}

#[test]
fn axiom_reports() {
    let k = q();
    let h = kz2();
    assert!(self_coaction(&h).check_comodule_algebra(None).unwrap().passed());
    let triv = ComoduleAlgebra::trivial(&h, &diagonal_algebra(&k, 2)).unwrap();
    assert!(triv.check_comodule_algebra(None).unwrap().passed());
    let doubled = self_coaction(&h).with_coaction(h.coproduct().scale(&k.from_i64(2))).unwrap();
    let rep = doubled.check_comodule_algebra(None).unwrap();
    assert!(!rep.get(COACTION_MULTIPLICATIVE).unwrap().passed());
    assert!(two_orbits().check_comodule_algebra(None).unwrap().passed());
}

#[test]
fn coinvariant_spaces() {
    let k = q();
    let h = kz2();
    let s = self_coaction(&h);
    assert_eq!(s.coinvariants().unwrap(), Subspace::span(&k, 2, vec![h.unit().unwrap()]));
    let a = polynomial_quotient(&k, &Polynomial::from_i64(&k, &[0, 0, 1]));
    let triv = ComoduleAlgebra::trivial(&h, &a).unwrap();
    assert!(triv.coinvariants().unwrap().is_full());
    let x = two_orbits();
    let c = x.coinvariants().unwrap();
    assert_eq!(c, Subspace::span(&k, 4, vec![vec![k.one(), k.one(), k.zero(), k.zero()], vec![k.zero(), k.zero(), k.one(), k.one()]]));
    let (alg, _) = x.coinvariant_algebra().unwrap();
    assert_eq!(alg.dim(), 2);
    assert!(x.has_coinvariant_local_units().unwrap());
}

#[test]
fn homogeneity() {
    let k = q();
    let h = kz2();
    assert!(self_coaction(&h).is_homogeneous().unwrap());
    assert!(!two_orbits().is_homogeneous().unwrap());
    assert!(ComoduleAlgebra::trivial(&h, &point(&k)).unwrap().is_homogeneous().unwrap());
    let zero = igalois_core::examples::zero_algebra(&k, 1);
    let z = ComoduleAlgebra::trivial(&h, &zero).unwrap();
    assert!(!z.has_coinvariant_local_units().unwrap());
    assert!(!z.is_homogeneous().unwrap());
}

#[test]
fn reynolds_operators() {
    let k = q();
    let h = kz2();
    let triv = ComoduleAlgebra::trivial(&h, &diagonal_algebra(&k, 3)).unwrap();
    assert!(triv.reynolds().unwrap().is_identity());
    let s = self_coaction(&h);
    assert_eq!(s.reynolds().unwrap(), Matrix::from_i64(&k, &[&[1, 0], &[0, 0]]));
    let h4 = self_coaction(&sweedler_h4(&k).unwrap());
    assert_eq!(h4.reynolds().unwrap().rank(), 1);
    let half = fraction(&k, 1, 2);
    let z = k.zero();
    let avg = Matrix::from_rows(
        &k,
        vec![
            vec![half.clone(), half.clone(), z.clone(), z.clone()],
            vec![half.clone(), half.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), half.clone(), half.clone()],
            vec![z.clone(), z, half.clone(), half],
        ],
        4,
    );
    assert_eq!(two_orbits().reynolds().unwrap(), avg);
}

/// `a (x) h -> a S(h_1) (x) h_2` on `H (x) H`.
fn antipode_formula(h: &HopfData<Q>) -> Matrix<Q> {
    let k = q();
    let n = h.dim();
    let a = h.algebra();
    let mut out = Matrix::zeros(&k, n * n, n * n);
    for x in 0..n {
        for y in 0..n {
            let d = h.delta(&a.basis_vector(y));
            let s1 = h.antipode().apply_left_leg(&d, n);
            let lx = a.left_mult(&a.basis_vector(x)).kron(&Matrix::identity(&k, n));
            out.set_column(x * n + y, &lx.mul_vec(&s1));
        }
    }
    out
}

#[test]
fn self_coactions_invert_through_the_antipode() {
    let k = q();
    for h in [kz2(), group_algebra(&k, &GroupTable::symmetric3()), dual_group_algebra(&k, &GroupTable::cyclic(3)), sweedler_h4(&k).unwrap()] {
        let s = self_coaction(&h);
        let can = s.galois_map().unwrap();
        assert!(can.is_bijective());
        let inv = can.section.mul(&can.inverse().unwrap());
        assert_eq!(inv, antipode_formula(&h));
        assert!(can.matrix.mul(&can.projection).mul(&antipode_formula(&h)).is_identity());
    }
}

#[test]
fn galois_verdicts() {
    let k = q();
    let h = kz2();
    let triv = ComoduleAlgebra::trivial(&h, &diagonal_algebra(&k, 2)).unwrap();
    let can = triv.galois_map().unwrap();
    assert_eq!(can.matrix.cols(), 2);
    assert_eq!(can.matrix.rows(), 4);
    assert!(!triv.is_galois().unwrap());
    assert_eq!(triv.galois_inverse().unwrap_err(), Error::NotGalois);
    let x = two_orbits();
    let can = x.galois_map().unwrap();
    assert_eq!((can.matrix.rows(), can.matrix.cols()), (8, 8));
    assert!(can.is_bijective());
    let inv = x.galois_inverse().unwrap();
    assert!(inv.mul(&can.matrix).is_identity());
}

#[test]
fn left_and_right_galois_maps_agree() {
    let k = q();
    let h = kz2();
    let g = GroupTable::cyclic(3);
    let fixtures = vec![
        self_coaction(&h),
        self_coaction(&sweedler_h4(&k).unwrap()),
        two_orbits(),
        free_gset_function_algebra(&k, &g, 3, &translation_action(&g, 1)).unwrap(),
        graded_matrix_algebra(&k, &GroupTable::cyclic(2)),
        ComoduleAlgebra::trivial(&h, &diagonal_algebra(&k, 2)).unwrap(),
        ComoduleAlgebra::trivial(&h, &point(&k)).unwrap(),
    ];
    for a in fixtures {
        assert_eq!(a.galois_map().unwrap().is_bijective(), a.right_galois_map().unwrap().is_bijective());
    }
}

#[test]
fn galois_objects_are_generated_by_coinvariants() {
    let k = q();
    let fixtures = vec![two_orbits(), self_coaction(&kz2()), graded_matrix_algebra(&k, &GroupTable::cyclic(3))];
    for a in fixtures {
        let full = Subspace::full(&k, a.dim());
        let c = a.coinvariants().unwrap();
        assert_eq!(a.algebra().product_space(&full, &c), full);
        assert_eq!(a.algebra().product_space(&c, &full), full);
        assert_eq!(a.is_equivariantly_abs_semisimple(&cfg()).unwrap(), Verdict::Yes);
    }
}

#[test]
fn smash_of_a_point_is_the_dual() {
    let k = q();
    for h in [kz2(), sweedler_h4(&k).unwrap()] {
        let triv = ComoduleAlgebra::trivial(&h, &point(&k)).unwrap();
        let s = triv.smash().unwrap();
        let d = h.dual_hopf().unwrap();
        assert_eq!(s.algebra.mult_tensor(), d.algebra().mult_tensor());
    }
}

#[test]
fn smash_of_kz2_is_m2() {
    let s = self_coaction(&kz2()).smash().unwrap();
    assert_eq!(s.algebra.dim(), 4);
    let w = s.algebra.wedderburn(&cfg()).unwrap();
    assert_eq!(w.blocks.len(), 1);
    assert_eq!(w.blocks[0].degree, Some(2));
    assert!(w.all_split());
    assert!(s.algebra.unit().is_ok());
}

#[test]
fn smash_of_the_free_gset() {
    let s = two_orbits().smash().unwrap();
    assert_eq!(s.algebra.dim(), 8);
    assert!(s.algebra.radical().unwrap().is_zero());
}

#[test]
fn smash_dimension_and_unit() {
    let k = q();
    let h4 = sweedler_h4(&k).unwrap();
    for a in [self_coaction(&h4), two_orbits(), graded_matrix_algebra(&k, &GroupTable::cyclic(2))] {
        let s = a.smash().unwrap();
        assert_eq!(s.algebra.dim(), a.dim() * a.hopf().dim());
        let unit = s.element(&a.algebra().unit().unwrap(), a.hopf().counit());
        assert_eq!(s.algebra.unit().unwrap(), unit);
    }
}

#[test]
fn double_smash_of_a_point() {
    let k = q();
    let triv = ComoduleAlgebra::trivial(&kz2(), &point(&k)).unwrap();
    let d = triv.double_smash_twisted().unwrap();
    assert_eq!(d.comodule.dim(), 4);
    assert!(d.comodule.is_galois().unwrap());
}

#[test]
fn double_smash_of_kz2() {
    let k = q();
    let d = self_coaction(&kz2()).double_smash_twisted().unwrap();
    assert_eq!(d.comodule.dim(), 8);
    assert!(d.comodule.is_galois().unwrap());
    let c = d.comodule.coinvariants().unwrap();
    assert_eq!(c.dim(), 4);
    assert_eq!(c, Subspace::span(&k, 8, d.smash_embedding.columns()));
    // (id (x) eps) alpha^^ = id.
    let eps = Matrix::from_rows(&k, vec![d.comodule.hopf().counit().to_vec()], 2);
    for x in 0..8 {
        let col = d.comodule.coaction().column(x);
        assert_eq!(eps.apply_right_leg(&col, 8), d.comodule.algebra().basis_vector(x));
    }
}

#[test]
fn double_smash_of_sweedler_twists_by_s2() {
    let k = q();
    let triv = ComoduleAlgebra::trivial(&sweedler_h4(&k).unwrap(), &point(&k)).unwrap();
    let d = triv.double_smash_twisted().unwrap();
    assert_eq!(d.comodule.dim(), 16);
    assert!(d.comodule.check_comodule_algebra(None).unwrap().passed());
    assert!(d.comodule.is_galois().unwrap());
}

#[test]
fn regular_equivariant_module_to_smash() {
    let k = q();
    let a = two_orbits();
    let s = a.smash().unwrap();
    let v = a.regular_equivariant().unwrap();
    let m = a.equivariant_to_smash(&s, &v).unwrap();
    // (a # w) b = a ((id (x) w) alpha(b)).
    for i in 0..4 {
        for c in 0..2 {
            let mut w = vec![k.zero(); 2];
            w[c] = k.one();
            let x = s.element(&a.algebra().basis_vector(i), &w);
            for b in 0..4 {
                let want = a.algebra().mul(&a.algebra().basis_vector(i), &a.slice(&a.algebra().basis_vector(b), &w));
                assert_eq!(m.rho(&x).column(b), want);
            }
        }
    }
    let back = a.smash_to_equivariant(&s, &m).unwrap();
    assert_eq!(back, v);
}

#[test]
fn trivial_module_is_counit_evaluation() {
    let k = q();
    let h = sweedler_h4(&k).unwrap();
    let triv = ComoduleAlgebra::trivial(&h, &point(&k)).unwrap();
    let s = triv.smash().unwrap();
    let v = triv.equivariant_tensor_module(&Comodule::trivial(&h).unwrap()).unwrap();
    let m = triv.equivariant_to_smash(&s, &v).unwrap();
    for c in 0..4 {
        assert_eq!(*m.action()[c].get(0, 0), h.unit().unwrap()[c]);
    }
    assert_eq!(triv.smash_to_equivariant(&s, &m).unwrap(), v);
}

#[test]
fn tensor_modules() {
    let k = q();
    let h = kz2();
    let a = two_orbits();
    let v = a.equivariant_tensor_module(&Comodule::trivial(a.hopf()).unwrap()).unwrap();
    assert_eq!(v, a.regular_equivariant().unwrap());
    let triv = ComoduleAlgebra::trivial(&h, &point(&k)).unwrap();
    let hv = triv.equivariant_tensor_module(&Comodule::regular(&h).unwrap()).unwrap();
    assert_eq!(hv.coaction, *h.coproduct());
    let s = self_coaction(&h);
    let sm = s.smash().unwrap();
    let w = s.equivariant_tensor_module(&Comodule::regular(&h).unwrap()).unwrap();
    assert_eq!(w.dim(), 4);
    let m = s.equivariant_to_smash(&sm, &w).unwrap();
    let parts = m.meataxe_decompose(&cfg()).unwrap();
    assert_eq!(parts.iter().map(|p| p.module.dim()).collect::<Vec<_>>(), vec![2, 2]);
}

#[test]
fn equivariant_semisimplicity() {
    let k = q();
    let h = kz2();
    assert_eq!(self_coaction(&h).is_equivariantly_abs_semisimple(&cfg()).unwrap(), Verdict::Yes);
    let h4 = self_coaction(&sweedler_h4(&k).unwrap());
    let s = h4.smash().unwrap();
    assert_eq!(s.algebra.dim(), 16);
    assert_eq!(h4.is_equivariantly_abs_semisimple(&cfg()).unwrap(), Verdict::Yes);
    let dual = polynomial_quotient(&k, &Polynomial::from_i64(&k, &[0, 0, 1]));
    let triv = ComoduleAlgebra::trivial(&h, &dual).unwrap();
    assert_eq!(triv.is_equivariantly_abs_semisimple(&cfg()).unwrap(), Verdict::No);
}

#[test]
fn restriction_and_sums() {
    let k = q();
    let a = two_orbits();
    let p = vec![k.one(), k.one(), k.zero(), k.zero()];
    let corner = Subspace::span(&k, 4, vec![a.algebra().mul(&p, &a.algebra().basis_vector(0)), a.algebra().basis_vector(1)]);
    let (b, _) = a.restrict(&corner, vec!["x".into(), "y".into()]).unwrap();
    assert!(b.check_comodule_algebra(None).unwrap().passed());
    assert!(b.is_galois().unwrap());
    let bad = Subspace::span(&k, 4, vec![a.algebra().basis_vector(0)]);
    assert!(a.restrict(&bad, vec!["x".into()]).is_err());
    let s = self_coaction(&kz2());
    let ss = s.direct_sum(&s).unwrap();
    assert!(ss.check_comodule_algebra(None).unwrap().passed());
    assert!(ss.is_galois().unwrap());
    assert_eq!(ss.coinvariants().unwrap().dim(), 2);
}
