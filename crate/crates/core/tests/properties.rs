mod common;

use common::*;
use liestruct::cochain::{alternating_circle, bch_product, circle, comp_i, Cochain};
use liestruct::cohomology::{coboundary, cohomology_report};
use liestruct::contraction::{contract, transform, ww_family, ParametricFamily};
use liestruct::deformation::valued_decompose;
use liestruct::document::{parse, serialize, AlgebraDocument};
use liestruct::matrix::span_basis;
use liestruct::variety::{jacobi_polynomials, orbit_dimension, rigidity_verdict};
use liestruct::{catalog, BasisChange, Field, GaussianRational as G, Laurent, LaurentFraction, Law, Matrix};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn gauss() -> impl Strategy<Value = G> {
    (-9i64..=9, 1i64..=5, -9i64..=9, 1i64..=5).prop_map(|(a, b, c, d)| G::ratio(a, b) + G::ratio(c, d) * G::i())
}

fn laurent() -> impl Strategy<Value = Laurent<G>> {
    prop::collection::vec((-3i64..=3, gauss()), 0..4).prop_map(Laurent::from_terms)
}

fn small_matrix() -> impl Strategy<Value = Matrix<G>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(small(), r * c)
            .prop_map(move |v| Matrix::from_fn(r, c, |i, j| g(v[i * c + j])))
    })
}

fn span_eq(a: &[Vec<G>], b: &[Vec<G>], dim: usize) -> bool {
    let ra = span_basis(a.to_vec(), dim).len();
    let rb = span_basis(b.to_vec(), dim).len();
    let both = span_basis(a.iter().chain(b).cloned().collect(), dim).len();
    ra == rb && rb == both
}

proptest! {
    #[test]
    fn gaussian_field_laws(a in gauss(), b in gauss(), c in gauss()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(a.to_string().parse::<G>().unwrap(), a.clone());
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * a.recip(), G::one());
        }
    }

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        if let (Some(va), Some(vb)) = (a.valuation().finite(), b.valuation().finite()) {
            prop_assert_eq!((a.clone() * b.clone()).valuation().finite(), Some(va + vb));
        }
        if !b.is_zero() {
            let q = LaurentFraction::new(a.clone(), b.clone()).unwrap();
            prop_assert_eq!(q * LaurentFraction::from_laurent(b.clone()), LaurentFraction::from_laurent(a.clone()));
        }
    }

    #[test]
    fn matrix_inverse_and_determinant(entries in prop::collection::vec(-2i64..=2, 32), n in 1usize..=4) {
        let m = unimodular(n, &entries);
        prop_assert_eq!(m.determinant(), G::one());
        let inv = m.inverse().unwrap();
        prop_assert_eq!(m.mul(&inv), Matrix::identity(n));
        prop_assert_eq!(inv.mul(&m), Matrix::identity(n));
    }

    #[test]
    fn solve_finds_a_preimage(m in small_matrix(), x in prop::collection::vec(small(), 5)) {
        let x: Vec<G> = x.into_iter().take(m.cols()).map(g).collect();
        let b = m.mul_vec(&x);
        let y = m.solve(&b).expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn basis_change_round_trip(law in lie_law(), e1 in prop::collection::vec(-1i64..=1, 32), e2 in prop::collection::vec(-1i64..=1, 32)) {
        let n = law.dim();
        let f = BasisChange::new(unimodular(n, &e1)).unwrap();
        let h = BasisChange::new(unimodular(n, &e2)).unwrap();
        let there = law.apply_basis_change(&f).unwrap();
        prop_assert_eq!(there.apply_basis_change(&f.inverted()).unwrap(), law.clone());
        // (f h)* mu = h* (f* mu)
        prop_assert_eq!(law.apply_basis_change(&f.compose(&h)).unwrap(), there.apply_basis_change(&h).unwrap());
    }

    #[test]
    fn invariants_are_basis_independent(seed in 0..seeds().len(), e in prop::collection::vec(-1i64..=1, 32)) {
        let law = &seeds()[seed];
        let moved = transported(law, &e);
        prop_assert!(moved.validate_law().is_valid());
        prop_assert_eq!(moved.lower_central_series(), law.lower_central_series());
        prop_assert_eq!(moved.derived_series(), law.derived_series());
        prop_assert_eq!(moved.center().len(), law.center().len());
        prop_assert_eq!(moved.derivations().len(), law.derivations().len());
        prop_assert_eq!(moved.classify_structure(), law.classify_structure());
        prop_assert_eq!(cohomology_report(&moved), cohomology_report(law));
        prop_assert_eq!(rigidity_verdict(&moved).status, rigidity_verdict(law).status);
    }

    #[test]
    fn orbit_dimension_is_coboundary_dimension(law in lie_law()) {
        prop_assert_eq!(orbit_dimension(&law), cohomology_report(&law).b(2));
    }

    #[test]
    fn derivations_are_derivations(law in lie_law()) {
        for d in law.derivations() {
            prop_assert!(law.is_derivation(&d));
            let ext = law.solvable_extension(&d).unwrap();
            prop_assert!(ext.validate_law().is_valid());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rank_nullity(m in small_matrix()) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for k in &kernel {
            prop_assert!(m.mul_vec(k).iter().all(Zero::is_zero));
        }
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn jacobi_iff_self_composition_vanishes(mu in (3usize..=4).prop_flat_map(sparse_bilinear)) {
        let c = Cochain::from_law(&mu);
        prop_assert_eq!(mu.validate_law().is_valid(), alternating_circle(&c, &c).unwrap().is_zero());
    }
}

/// Three general cochains on a 2-dimensional space with arities bounded by
/// the arguments.
fn triple(a: usize, b: usize, c: usize) -> impl Strategy<Value = (Cochain<G>, Cochain<G>, Cochain<G>)> {
    (1..=a, 1..=b, 1..=c).prop_flat_map(|(a, b, c)| (cochain(2, a, false), cochain(2, b, false), cochain(2, c, false)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn coboundary_squares_to_zero(law in lie_law(), p in 0usize..=2, values in prop::collection::vec(small(), 64)) {
        let n = law.dim();
        let len = liestruct::tuples::binomial(n, p) * n;
        let phi = Cochain::from_values(n, p, true, values.into_iter().take(len).map(g).collect()).unwrap();
        let once = coboundary(&law, &phi).unwrap();
        prop_assert!(coboundary(&law, &once).unwrap().is_zero());
    }

    #[test]
    fn coboundary_low_degrees(law in lie_law(), v in prop::collection::vec(small(), 4), values in prop::collection::vec(small(), 24)) {
        let n = law.dim();
        let mu = Cochain::from_law(&law);
        prop_assert_eq!(coboundary(&law, &Cochain::identity(n)).unwrap(), mu.clone());
        let v: Vec<G> = v.into_iter().take(n).map(g).collect();
        prop_assert_eq!(coboundary(&law, &Cochain::vector(v.clone())).unwrap(), Cochain::endomorphism(&law.adjoint(&v)));
        let len = n * (n - 1) / 2 * n;
        let phi = Cochain::from_values(n, 2, true, values.into_iter().take(len).map(g).collect()).unwrap();
        let expected = alternating_circle(&mu, &phi).unwrap() + alternating_circle(&phi, &mu).unwrap();
        prop_assert_eq!(coboundary(&law, &phi).unwrap(), expected);
    }

    #[test]
    fn graded_pre_lie_identity((phi, psi, rho) in triple(3, 3, 3)) {
        let (q, r) = (psi.arity() - 1, rho.arity() - 1);
        let assoc = |x: &Cochain<G>, y: &Cochain<G>, z: &Cochain<G>| {
            circle(&circle(x, y).unwrap(), z).unwrap() - circle(x, &circle(y, z).unwrap()).unwrap()
        };
        let lhs = assoc(&phi, &psi, &rho);
        let rhs = assoc(&phi, &rho, &psi);
        let rhs = if (q * r) % 2 == 1 { -rhs } else { rhs };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn right_pre_lie_system((phi, psi, rho) in triple(3, 2, 2), i in 0usize..3, j in 0usize..5) {
        let (a, b, c) = (phi.arity(), psi.arity(), rho.arity());
        let i = i % a;
        let j = j % (a + b - 1);
        let (q, r) = (b - 1, c - 1);
        let lhs = comp_i(&comp_i(&phi, i, &psi).unwrap(), j, &rho).unwrap();
        let rhs = if j < i {
            comp_i(&comp_i(&phi, j, &rho).unwrap(), i + r, &psi).unwrap()
        } else if j <= i + q {
            comp_i(&phi, i, &comp_i(&psi, j - i, &rho).unwrap()).unwrap()
        } else {
            comp_i(&comp_i(&phi, j - q, &rho).unwrap(), i, &psi).unwrap()
        };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi_polynomials_match_residuals(mu in (3usize..=5).prop_flat_map(sparse_bilinear)) {
        let n = mu.dim();
        let system = jacobi_polynomials(n);
        let values = system.evaluate(&mu);
        for (gen, value) in system.generators.iter().zip(values) {
            let (i, j, k) = gen.triple;
            prop_assert_eq!(value, mu.jacobi_residual(i, j, k)[gen.component].clone());
        }
    }
}

proptest! {
    #[test]
    fn bch_is_associative(
        which in 0usize..2,
        x in prop::collection::vec(small(), 4),
        y in prop::collection::vec(small(), 4),
        z in prop::collection::vec(small(), 4),
    ) {
        let law = if which == 0 { catalog::heisenberg(1) } else { catalog::filiform4() };
        let n = law.dim();
        let v = |w: &Vec<i64>| w.iter().take(n).map(|&a| g(a)).collect::<Vec<G>>();
        let (x, y, z) = (v(&x), v(&y), v(&z));
        let left = bch_product(&law, &bch_product(&law, &x, &y).unwrap(), &z).unwrap();
        let right = bch_product(&law, &x, &bch_product(&law, &y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let zero = vec![G::zero(); n];
        prop_assert_eq!(bch_product(&law, &x, &zero).unwrap(), x.clone());
        let minus: Vec<G> = x.iter().map(|a| -a.clone()).collect();
        prop_assert_eq!(bch_product(&law, &x, &minus).unwrap(), zero);
    }

    #[test]
    fn weights_compose_additively(
        law in lie_law(),
        w1 in prop::collection::vec(-2i64..=2, 4),
        w2 in prop::collection::vec(-2i64..=2, 4),
    ) {
        let n = law.dim();
        let (w1, w2) = (&w1[..n], &w2[..n]);
        let sum: Vec<i64> = w1.iter().zip(w2).map(|(a, b)| a + b).collect();
        let step = transform(&law, &ww_family(w1)).unwrap()
            .apply_basis_change(&ww_family::<G>(w2).basis_change()).unwrap();
        prop_assert_eq!(step, transform(&law, &ww_family(&sum)).unwrap());
        prop_assert_eq!(ww_family::<G>(w1).compose(&ww_family(w2)), ww_family(&sum));
    }

    #[test]
    fn contraction_limits_are_lie(law in lie_law(), w in prop::collection::vec(0i64..=3, 4)) {
        let n = law.dim();
        if let Ok(limit) = contract(&law, &ww_family(&w[..n])) {
            prop_assert!(limit.validate_law().is_valid());
            prop_assert!(limit.jacobi_verified());
        }
    }

    #[test]
    fn constant_families_are_basis_changes(law in lie_law(), e in prop::collection::vec(-1i64..=1, 32)) {
        let m = unimodular(law.dim(), &e);
        let direct = law.apply_basis_change(&BasisChange::new(m.clone()).unwrap()).unwrap();
        prop_assert_eq!(contract(&law, &ParametricFamily::constant(&m).unwrap()).unwrap(), direct);
    }

    #[test]
    fn document_round_trip(seed in 0..seeds().len(), e in prop::collection::vec(-1i64..=1, 32), c in gauss()) {
        let law: Law = transported(&seeds()[seed], &e).map(|x| x.clone() * c.clone());
        let doc = AlgebraDocument::from_law(&law, Some("random law"));
        let text = serialize(&doc);
        let back = parse(&text).unwrap();
        prop_assert_eq!(serialize(&back), text);
        prop_assert_eq!(back.to_law().unwrap(), law);
    }
}

fn positive_laurent() -> impl Strategy<Value = Laurent<G>> {
    prop::collection::vec((1i64..=5, -2i64..=2), 0..4)
        .prop_map(|terms| Laurent::from_terms(terms.into_iter().map(|(e, c)| (e, g(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn valued_decomposition(
        v in (1usize..=6).prop_flat_map(|k| prop::collection::vec(positive_laurent(), k)),
        u0 in prop_oneof![-3i64..=-1, 1i64..=3],
        u_tail in prop::collection::vec((1i64..=3, -2i64..=2), 0..3),
    ) {
        let k = v.len();
        let flag = valued_decompose(&v).unwrap();
        prop_assert_eq!(flag.reconstruct(k), v.clone());
        prop_assert_eq!(span_basis(flag.vectors.clone(), k).len(), flag.len());
        for (i, b) in flag.multipliers.iter().enumerate() {
            prop_assert!(b.valuation().finite().is_some_and(|val| val >= 1), "multiplier {} = {:?}", i, b);
        }
        let unit = Laurent::from_terms(std::iter::once((0, g(u0))).chain(u_tail.into_iter().map(|(e, c)| (e, g(c)))));
        let scaled: Vec<Laurent<G>> = v.iter().map(|x| x.clone() * unit.clone()).collect();
        let other = valued_decompose(&scaled).unwrap();
        prop_assert_eq!(other.len(), flag.len());
        for i in 1..=flag.len() {
            prop_assert!(span_eq(&flag.vectors[..i], &other.vectors[..i], k));
        }
    }
}
