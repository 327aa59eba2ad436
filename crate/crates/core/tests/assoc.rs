use igalois_core::assoc::{
    AlgModule, Block, BlockStatus, MoritaContextData, MoritaVerdict, SearchConfig, StructureAlgebra, Verdict,
};
use igalois_core::examples::{diagonal_algebra, matrix_algebra, polynomial_quotient, zero_algebra};
use igalois_core::exactla::{Field, Matrix, Polynomial, PrimeField, Rationals, Subspace};
use igalois_core::Error;
use num_rational::BigRational;

fn q(xs: &[i64]) -> Vec<BigRational> {
    xs.iter().map(|&x| Rationals.from_i64(x)).collect()
}

fn half(n: i64) -> BigRational {
    BigRational::new(n.into(), 2.into())
}

fn poly_q(c: &[i64]) -> Polynomial<Rationals> {
    Polynomial::from_i64(&Rationals, c)
}

/// Column module of `M_n`: `E_ij` acts as the matrix unit.
fn column_module<K: Field>(k: &K, n: usize) -> AlgModule<K> {
    let alg = matrix_algebra(k, n);
    let action = (0..n * n)
        .map(|a| {
            let mut m = Matrix::zeros(k, n, n);
            m.set(a / n, a % n, k.one());
            m
        })
        .collect();
    AlgModule::new(&alg, n, action).unwrap()
}

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

#[test]
fn units() {
    assert_eq!(diagonal_algebra(&Rationals, 2).find_unit(), Some(q(&[1, 1])));
    assert_eq!(zero_algebra(&Rationals, 2).find_unit(), None);
    assert_eq!(matrix_algebra(&Rationals, 2).find_unit(), Some(q(&[1, 0, 0, 1])));
}

#[test]
fn local_units() {
    assert!(diagonal_algebra(&Rationals, 3).has_local_units());
    let nil = StructureAlgebra::from_fn(&Rationals, vec!["x".into()], |_, _| q(&[0]));
    assert!(!nil.has_local_units());
    assert!(matrix_algebra(&Rationals, 3).has_local_units());
}

#[test]
fn centers() {
    let comm = polynomial_quotient(&Rationals, &poly_q(&[1, 0, 1]));
    assert!(comm.center().is_full());
    let m2 = matrix_algebra(&Rationals, 2);
    assert_eq!(m2.center(), Subspace::span(&Rationals, 4, vec![q(&[1, 0, 0, 1])]));
    assert_eq!(diagonal_algebra(&Rationals, 3).center().dim(), 3);
}

#[test]
fn radicals() {
    let dual_numbers = polynomial_quotient(&Rationals, &poly_q(&[0, 0, 1]));
    assert_eq!(dual_numbers.radical().unwrap(), Subspace::span(&Rationals, 2, vec![q(&[0, 1])]));

    let qz2 = polynomial_quotient(&Rationals, &poly_q(&[-1, 0, 1]));
    assert!(qz2.radical().unwrap().is_zero());

    let f2 = PrimeField::new(2).unwrap();
    let f2z2 = polynomial_quotient(&f2, &Polynomial::from_i64(&f2, &[-1, 0, 1]));
    assert_eq!(f2z2.radical().unwrap(), Subspace::span(&f2, 2, vec![vec![1, 1]]));

    assert_eq!(zero_algebra(&Rationals, 2).radical(), Err(Error::NotUnital));
}

#[test]
fn radical_quotient_is_semisimple() {
    let f3 = PrimeField::new(3).unwrap();
    // F3[Z3] x F3[t]/(t^2 + 1)
    let a = polynomial_quotient(&f3, &Polynomial::from_i64(&f3, &[-1, 0, 0, 1]));
    let b = polynomial_quotient(&f3, &Polynomial::from_i64(&f3, &[1, 0, 1]));
    let d = a.direct_sum(&b);
    let rad = d.radical().unwrap();
    assert_eq!(rad.dim(), 2);
    assert!(d.is_two_sided_ideal(&rad));
    let (quot, _) = d.quotient(&rad).unwrap();
    assert!(quot.radical().unwrap().is_zero());
}

#[test]
fn semisimplicity_verdicts() {
    let c = cfg();
    let k2 = diagonal_algebra(&Rationals, 2);
    assert!(k2.is_semisimple().unwrap());
    assert_eq!(k2.is_absolutely_semisimple(&c).unwrap(), Verdict::Yes);

    let gauss = polynomial_quotient(&Rationals, &poly_q(&[1, 0, 1]));
    assert!(gauss.is_semisimple().unwrap());
    assert_eq!(gauss.is_absolutely_semisimple(&c).unwrap(), Verdict::No);

    let qz2 = polynomial_quotient(&Rationals, &poly_q(&[-1, 0, 1]));
    assert_eq!(qz2.is_absolutely_semisimple(&c).unwrap(), Verdict::Yes);

    let dual_numbers = polynomial_quotient(&Rationals, &poly_q(&[0, 0, 1]));
    assert!(!dual_numbers.is_semisimple().unwrap());
    assert_eq!(dual_numbers.is_absolutely_semisimple(&c).unwrap(), Verdict::No);
}

#[test]
fn primitive_idempotents() {
    let k2 = diagonal_algebra(&Rationals, 2);
    let mut got = k2.primitive_idempotents_split_commutative().unwrap();
    got.sort();
    assert_eq!(got, vec![q(&[0, 1]), q(&[1, 0])]);

    // Oracle: e = a + b x with e^2 = e gives 2ab = b and a^2 + b^2 = a, so
    // b = 0 or a = 1/2, b = +-1/2.
    let qz2 = polynomial_quotient(&Rationals, &poly_q(&[-1, 0, 1]));
    let mut got = qz2.primitive_idempotents_split_commutative().unwrap();
    got.sort();
    let mut want = vec![vec![half(1), half(1)], vec![half(1), half(-1)]];
    want.sort();
    assert_eq!(got, want);

    let gauss = polynomial_quotient(&Rationals, &poly_q(&[1, 0, 1]));
    assert_eq!(gauss.primitive_idempotents_split_commutative(), Err(Error::NotSplit));
}

#[test]
fn spinning() {
    let k2 = diagonal_algebra(&Rationals, 2);
    let reg = AlgModule::regular(&k2);
    assert!(reg.spin(&q(&[0, 0])).is_zero());
    assert_eq!(reg.spin(&q(&[1, 0])), Subspace::span(&Rationals, 2, vec![q(&[1, 0])]));

    let m2 = AlgModule::regular(&matrix_algebra(&Rationals, 2));
    // E11 = index 0, E21 = index 2.
    let want = Subspace::span(&Rationals, 4, vec![q(&[1, 0, 0, 0]), q(&[0, 0, 1, 0])]);
    assert_eq!(m2.spin(&q(&[1, 0, 0, 0])), want);
}

#[test]
fn endomorphism_algebras() {
    let col = column_module(&Rationals, 2);
    assert_eq!(col.endomorphism_algebra().unwrap().0.dim(), 1);
    let twice = col.direct_sum(&col).unwrap();
    let (end, basis) = twice.endomorphism_algebra().unwrap();
    assert_eq!(end.dim(), 4);
    assert!(end.is_associative());
    assert_eq!(end.center().dim(), 1);
    for t in &basis {
        for a in twice.action() {
            assert_eq!(t.mul(a), a.mul(t));
        }
    }

    let gauss = polynomial_quotient(&Rationals, &poly_q(&[1, 0, 1]));
    let (end, _) = AlgModule::regular(&gauss).endomorphism_algebra().unwrap();
    assert_eq!(end.dim(), 2);
    assert!(end.is_commutative());
}

#[test]
fn simplicity() {
    let c = cfg();
    let col3 = column_module(&Rationals, 3);
    assert!(col3.is_simple(&c).unwrap());
    assert!(col3.is_absolutely_simple(&c).unwrap());

    let gauss = AlgModule::regular(&polynomial_quotient(&Rationals, &poly_q(&[1, 0, 1])));
    assert!(gauss.is_simple(&c).unwrap());
    assert!(!gauss.is_absolutely_simple(&c).unwrap());

    let k2 = AlgModule::regular(&diagonal_algebra(&Rationals, 2));
    assert!(!k2.is_simple(&c).unwrap());

    let empty = AlgModule::new(&diagonal_algebra(&Rationals, 1), 0, vec![Matrix::zeros(&Rationals, 0, 0)]).unwrap();
    assert_eq!(empty.is_simple(&c), Err(Error::ZeroModule));
}

#[test]
fn simplicity_over_prime_fields() {
    let c = cfg();
    let f5 = PrimeField::new(5).unwrap();
    // t^2 + 2 has no roots mod 5.
    let field25 = AlgModule::regular(&polynomial_quotient(&f5, &Polynomial::from_i64(&f5, &[2, 0, 1])));
    assert!(field25.is_simple(&c).unwrap());
    assert!(!field25.is_absolutely_simple(&c).unwrap());
    let col = column_module(&f5, 3);
    assert!(col.is_absolutely_simple(&c).unwrap());
}

#[test]
fn decompositions() {
    let c = cfg();
    let k2 = AlgModule::regular(&diagonal_algebra(&Rationals, 2));
    let parts = k2.meataxe_decompose(&c).unwrap();
    assert_eq!(parts.iter().map(|s| s.subspace.dim()).collect::<Vec<_>>(), vec![1, 1]);
    assert_eq!(parts[0].subspace, Subspace::span(&Rationals, 2, vec![q(&[0, 1])]));

    let f3 = PrimeField::new(3).unwrap();
    let m2 = AlgModule::regular(&matrix_algebra(&f3, 2));
    let parts = m2.meataxe_decompose(&c).unwrap();
    assert_eq!(parts.len(), 2);
    let col = column_module(&f3, 2);
    let mut total = Subspace::zero(&f3, 4);
    for p in &parts {
        assert_eq!(p.subspace.dim(), 2);
        assert!(p.module.is_simple(&c).unwrap());
        assert_eq!(p.module.hom_space(&col).unwrap().len(), 1);
        total = total.join(&p.subspace);
    }
    assert!(total.is_full());

    let col3 = column_module(&Rationals, 3);
    let parts = col3.meataxe_decompose(&c).unwrap();
    assert_eq!(parts.len(), 1);
    assert!(parts[0].subspace.is_full());
}

#[test]
fn rational_decomposition_of_isotypic_module() {
    let c = cfg();
    let col = column_module(&Rationals, 2);
    let v = col.direct_sum(&col).unwrap().direct_sum(&col).unwrap();
    let parts = v.meataxe_decompose(&c).unwrap();
    assert_eq!(parts.len(), 3);
    let total = parts.iter().fold(Subspace::zero(&Rationals, 6), |acc, p| acc.join(&p.subspace));
    assert!(total.is_full());
}

#[test]
fn wedderburn_forms() {
    let c = cfg();
    let k3 = diagonal_algebra(&Rationals, 3);
    let w = k3.wedderburn(&c).unwrap();
    assert_eq!(w.blocks.len(), 3);
    assert!(w.blocks.iter().all(|b| b.block.dim() == 1 && b.degree == Some(1)));
    assert!(w.all_split());

    let m2 = matrix_algebra(&Rationals, 2);
    let w = m2.wedderburn(&c).unwrap();
    assert_eq!(w.blocks.len(), 1);
    assert_eq!(w.blocks[0].degree, Some(2));
    assert_eq!(w.blocks[0].status, BlockStatus::Split);
    check_split_isomorphisms(&m2, &w);

    let qz3 = polynomial_quotient(&Rationals, &poly_q(&[-1, 0, 0, 1]));
    assert_eq!(qz3.wedderburn(&c).err(), Some(Error::NotSplitCenter));
    assert_eq!(qz3.is_absolutely_semisimple(&c).unwrap(), Verdict::No);
}

#[test]
fn wedderburn_of_a_product() {
    let c = cfg();
    let f5 = PrimeField::new(5).unwrap();
    let d = matrix_algebra(&f5, 2).direct_sum(&diagonal_algebra(&f5, 1)).direct_sum(&matrix_algebra(&f5, 3));
    let w = d.wedderburn(&c).unwrap();
    let mut degrees: Vec<usize> = w.blocks.iter().map(|b| b.degree.unwrap()).collect();
    degrees.sort();
    assert_eq!(degrees, vec![1, 2, 3]);
    assert_eq!(w.blocks.iter().map(|b| b.degree.unwrap().pow(2)).sum::<usize>(), d.dim());
    assert!(w.all_split());
    check_split_isomorphisms(&d, &w);
    let unit = d.unit().unwrap();
    let sum = w.blocks.iter().fold(d.zero(), |acc, b| {
        acc.iter().zip(&b.central_idempotent).map(|(x, y)| f5.add(x, y)).collect()
    });
    assert_eq!(sum, unit);
}

/// On a split block the isomorphism turns products into matrix products.
fn check_split_isomorphisms<K: Field>(d: &StructureAlgebra<K>, w: &igalois_core::assoc::WedderburnForm<K>) {
    let k = d.field();
    for b in &w.blocks {
        let iso = b.isomorphism.as_ref().unwrap();
        let n = b.degree.unwrap();
        let as_matrix = |x: &[K::Elem]| Matrix::from_rows(k, iso.mul_vec(x).chunks(n).map(|r| r.to_vec()).collect(), n);
        for x in b.block.basis() {
            for y in b.block.basis() {
                assert_eq!(as_matrix(&d.mul(x, y)), as_matrix(x).mul(&as_matrix(y)));
            }
        }
        let img = Subspace::span(k, n * n, b.block.basis().iter().map(|x| iso.mul_vec(x)).collect());
        assert!(img.is_full());
    }
}

#[test]
fn morita_contexts() {
    let m2 = matrix_algebra(&Rationals, 2);
    let corner = m2.corner(&q(&[1, 0, 0, 0])).unwrap();
    assert_eq!(corner.context.verify(None).unwrap(), MoritaVerdict::Strict);

    let k2 = diagonal_algebra(&Rationals, 2);
    let a = Subspace::span(&Rationals, 2, vec![q(&[1, 0])]);
    let b = Subspace::span(&Rationals, 2, vec![q(&[0, 1])]);
    let zero = Subspace::zero(&Rationals, 2);
    let ctx = MoritaContextData::from_subspaces(&k2, &a, &zero, &zero, &b).unwrap();
    assert_eq!(ctx.verify(None).unwrap(), MoritaVerdict::NotSurjective);
    assert_eq!(ctx.dims(), [1, 0, 0, 1]);
    assert_eq!(ctx.block(Block::B), Subspace::span(&Rationals, 2, vec![q(&[0, 1])]));
}

#[test]
fn corners() {
    let m2 = matrix_algebra(&Rationals, 2);
    let whole = m2.corner(&q(&[1, 0, 0, 1])).unwrap();
    assert_eq!(whole.algebra, m2.with_labels(whole.algebra.labels().to_vec()));
    assert!(whole.full);

    let e11 = m2.corner(&q(&[1, 0, 0, 0])).unwrap();
    assert_eq!(e11.algebra.dim(), 1);
    assert!(e11.full);

    let k2 = diagonal_algebra(&Rationals, 2);
    let p1 = k2.corner(&q(&[1, 0])).unwrap();
    assert_eq!(p1.algebra.dim(), 1);
    assert!(!p1.full);
    assert_eq!(p1.context.verify(None).unwrap(), MoritaVerdict::NotSurjective);

    assert_eq!(k2.corner(&q(&[2, 0])).err(), Some(Error::NotIdempotent));
}

#[test]
fn corrupted_module_is_rejected() {
    let k2 = diagonal_algebra(&Rationals, 2);
    let bad = AlgModule::new(&k2, 1, vec![Matrix::from_i64(&Rationals, &[&[1]]), Matrix::from_i64(&Rationals, &[&[1]])])
        .unwrap();
    assert!(bad.check(None).is_err());
}
