use igalois_core::examples::{dual_group_algebra, group_algebra, sweedler_h4, GroupTable};
use igalois_core::exactla::{Field, Matrix, PrimeField, Rationals};
use igalois_core::hopf::{HopfData, ANTIPODE_LEFT, ANTIPODE_RIGHT};
use igalois_core::Error;
use proptest::prelude::*;

fn q() -> Rationals {
    Rationals
}

fn ints(k: &Rationals, v: &[i64]) -> Vec<<Rationals as Field>::Elem> {
    v.iter().map(|&x| k.from_i64(x)).collect()
}

fn groups() -> Vec<GroupTable> {
    let mut out: Vec<GroupTable> = (1..=6).map(GroupTable::cyclic).collect();
    out.push(GroupTable::klein());
    out.push(GroupTable::symmetric3());
    out
}

#[test]
fn group_axioms_are_enforced() {
    let bad = GroupTable::new(vec![vec![0, 1], vec![1, 1]], vec!["a".into(), "b".into()]);
    assert!(matches!(bad, Err(Error::InvalidInput(_))));
    let s3 = GroupTable::symmetric3();
    assert_eq!(s3.order(), 6);
    assert!((0..6).all(|g| s3.mul(g, s3.inverse(g)) == s3.identity()));
}

#[test]
fn fixtures_satisfy_the_axioms() {
    let k = q();
    for g in groups() {
        assert!(group_algebra(&k, &g).check_hopf(None).unwrap().passed());
        assert!(dual_group_algebra(&k, &g).check_hopf(None).unwrap().passed());
    }
    let h4 = sweedler_h4(&k).unwrap();
    let rep = h4.check_hopf(None).unwrap();
    assert!(rep.passed(), "{rep:?}");
    let f3 = PrimeField::new(3).unwrap();
    assert!(sweedler_h4(&f3).unwrap().check_hopf(None).unwrap().passed());
    assert!(sweedler_h4(&PrimeField::new(2).unwrap()).is_err());
}

#[test]
fn z3_over_f2_is_semisimple() {
    let f2 = PrimeField::new(2).unwrap();
    let h = group_algebra(&f2, &GroupTable::cyclic(3));
    assert_eq!(h.dim(), 3);
    assert!(h.algebra().radical().unwrap().is_zero());
}

#[test]
fn s3_is_noncommutative_and_cocommutative() {
    let k = q();
    let h = group_algebra(&k, &GroupTable::symmetric3());
    assert!(!h.algebra().is_commutative());
    let n = h.dim();
    let flip = Matrix::from_fn(&k, n * n, n * n, |r, c| if r == (c % n) * n + c / n { k.one() } else { k.zero() });
    assert_eq!(flip.mul(h.coproduct()), *h.coproduct());
}

#[test]
fn identity_antipode_on_s3_breaks_the_antipode_law() {
    let k = q();
    let h = group_algebra(&k, &GroupTable::symmetric3());
    let bad = h.with_antipode(Matrix::identity(&k, 6)).unwrap();
    let rep = bad.check_hopf(None).unwrap();
    assert!(!rep.passed());
    // The rotation r is the first basis element with r^2 != 1.
    assert_eq!(rep.get(ANTIPODE_LEFT).unwrap().witness, Some(vec![1]));
    assert_eq!(rep.get(ANTIPODE_RIGHT).unwrap().witness, Some(vec![1]));
    let failed: Vec<&str> = rep.failures().map(|c| c.axiom).collect();
    assert_eq!(failed, vec![ANTIPODE_LEFT, ANTIPODE_RIGHT]);
    // On a transposition S = id happens to satisfy the law.
    let t = h.algebra().basis_vector(3);
    assert_eq!(h.mul(&t, &t), h.unit().unwrap());
}

#[test]
fn group_algebra_integrals() {
    let k = q();
    for g in groups() {
        let h = group_algebra(&k, &g);
        let inv = h.invariant_functionals().unwrap();
        let mut e = vec![k.zero(); g.order()];
        e[g.identity()] = k.one();
        assert_eq!(inv.phi, e);
        assert_eq!(inv.psi, e);
        assert_eq!(inv.delta, h.unit().unwrap());
        assert!(inv.sigma.is_identity());
        assert!(inv.normalized);
    }
}

#[test]
fn function_algebra_integrals() {
    let k = q();
    for g in groups() {
        let h = dual_group_algebra(&k, &g);
        let inv = h.invariant_functionals().unwrap();
        // phi(1) = |G|, rescaled to 1.
        let w = k.inv(&k.from_i64(g.order() as i64)).unwrap();
        assert_eq!(inv.phi, vec![w; g.order()]);
        assert_eq!(inv.delta, h.unit().unwrap());
        assert_eq!(h.left_invariant_space().unwrap().len(), 1);
    }
}

#[test]
fn sweedler_integrals() {
    let k = q();
    let h = sweedler_h4(&k).unwrap();
    let inv = h.invariant_functionals().unwrap();
    assert_eq!(inv.phi, ints(&k, &[0, 0, 0, 1]));
    assert_eq!(inv.psi, ints(&k, &[0, 0, -1, 0]));
    assert_eq!(inv.delta, ints(&k, &[0, 1, 0, 0]));
    assert!(!inv.normalized);
    // phi(x g) = -1 = phi(g sigma(x)) forces sigma(x) = -x; likewise sigma(g) = -g.
    let sigma = Matrix::from_i64(&k, &[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 1]]);
    assert_eq!(inv.sigma, sigma);
    let s = h.antipode();
    assert!(!s.pow(2).is_identity());
    assert!(s.pow(4).is_identity());
    assert_eq!(h.antipode_inverse().unwrap(), s.pow(3));
}

#[test]
fn involutive_antipodes_invert_to_themselves() {
    let k = q();
    let g = GroupTable::symmetric3();
    for h in [group_algebra(&k, &g), dual_group_algebra(&k, &g)] {
        assert_eq!(h.antipode_inverse().unwrap(), *h.antipode());
    }
    let h = group_algebra(&k, &g);
    let zero = h.with_antipode(Matrix::zeros(&k, 6, 6)).unwrap();
    assert_eq!(zero.antipode_inverse(), Err(Error::SingularAntipode));
}

#[test]
fn faithfulness() {
    let k = q();
    let z2 = group_algebra(&k, &GroupTable::cyclic(2));
    assert!(z2.faithfulness_check(&z2.invariant_functionals().unwrap().phi));
    let h4 = sweedler_h4(&k).unwrap();
    assert!(h4.faithfulness_check(&h4.invariant_functionals().unwrap().phi));
    assert!(!h4.faithfulness_check(h4.counit()));
    assert_eq!(h4.fourier_map(h4.counit()), Err(Error::NotFaithful));
}

#[test]
fn fourier_maps() {
    let k = q();
    let z2 = group_algebra(&k, &GroupTable::cyclic(2));
    let f = z2.fourier_map(&z2.invariant_functionals().unwrap().phi).unwrap();
    // phi(g g^-1) = 1 pairs each element with its inverse coordinate.
    assert_eq!(f, Matrix::from_i64(&k, &[&[1, 0], &[0, 1]]));
    let z3 = group_algebra(&k, &GroupTable::cyclic(3));
    let f3 = z3.fourier_map(&z3.invariant_functionals().unwrap().phi).unwrap();
    assert_eq!(f3, Matrix::from_i64(&k, &[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]));
    assert!(f3.inverse().unwrap().mul(&f3).is_identity());
    let h4 = sweedler_h4(&k).unwrap();
    let f4 = h4.fourier_map(&h4.invariant_functionals().unwrap().phi).unwrap();
    assert!(f4.is_invertible());
}

fn same_tensors<K: Field>(a: &HopfData<K>, b: &HopfData<K>) -> bool {
    a.algebra().mult_tensor() == b.algebra().mult_tensor()
        && a.coproduct() == b.coproduct()
        && a.counit() == b.counit()
        && a.antipode() == b.antipode()
}

#[test]
fn duals_of_group_algebras() {
    let k = q();
    let f2 = PrimeField::new(2).unwrap();
    for g in [GroupTable::cyclic(2), GroupTable::symmetric3()] {
        let kg = group_algebra(&k, &g);
        let fun = dual_group_algebra(&k, &g);
        assert!(same_tensors(&kg.dual_hopf().unwrap(), &fun));
        assert!(same_tensors(&fun.dual_hopf().unwrap(), &kg));
    }
    let g = GroupTable::cyclic(3);
    assert!(same_tensors(&group_algebra(&f2, &g).dual_hopf().unwrap(), &dual_group_algebra(&f2, &g)));
}

#[test]
fn sweedler_dual() {
    let k = q();
    let h4 = sweedler_h4(&k).unwrap();
    let d = h4.dual_hopf().unwrap();
    assert!(d.check_hopf(None).unwrap().passed());
    assert_eq!(d.left_invariant_space().unwrap().len(), 1);
    let inv = d.invariant_functionals().unwrap();
    assert!(!inv.normalized);
    assert_eq!(d.labels()[3], "gx*");
    assert!(same_tensors(&d.dual_hopf().unwrap(), &h4));
    assert_eq!(d.dual_hopf().unwrap().labels(), h4.labels());
}

#[test]
fn bad_shapes_are_rejected() {
    let k = q();
    let h = group_algebra(&k, &GroupTable::cyclic(2));
    assert!(matches!(h.with_antipode(Matrix::identity(&k, 3)), Err(Error::DimensionMismatch(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn invariant_pair_identities(which in 0usize..17) {
        let k = q();
        let gs = groups();
        let h = match which {
            0..=7 => group_algebra(&k, &gs[which]),
            8..=15 => dual_group_algebra(&k, &gs[which - 8]),
            _ => sweedler_h4(&k).unwrap(),
        };
        let n = h.dim();
        let a = h.algebra();
        let inv = h.invariant_functionals().unwrap();
        prop_assert_eq!(h.left_invariant_space().unwrap().len(), 1);
        // psi = phi o S, right invariant.
        prop_assert_eq!(&inv.psi, &h.antipode().vec_mul(&inv.phi));
        let ev = |f: &[<Rationals as Field>::Elem], x: &[<Rationals as Field>::Elem]| {
            f.iter().zip(x).fold(k.zero(), |acc, (a, b)| k.add(&acc, &k.mul(a, b)))
        };
        for i in 0..n {
            let e = a.basis_vector(i);
            prop_assert_eq!(ev(&inv.phi, &h.s(&e)), ev(&inv.phi, &a.mul(&e, &inv.delta)));
            for j in 0..n {
                let f = a.basis_vector(j);
                prop_assert_eq!(ev(&inv.phi, &a.mul(&e, &f)), ev(&inv.phi, &a.mul(&f, &inv.sigma.mul_vec(&e))));
            }
        }
        let dd = h.dual_hopf().unwrap().dual_hopf().unwrap();
        prop_assert!(same_tensors(&dd, &h));
    }
}
