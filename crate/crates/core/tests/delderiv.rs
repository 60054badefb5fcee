use proptest::prelude::*;
use qcgl::delderiv::{self, laurent_mul, LaurentElem};
use qcgl::ncalg::DEFAULT_NILPOTENCE_BOUND as BOUND;
use qcgl::sample::ElementSampler;
use qcgl::{expr, presets, qmat, Error, Monomial, NcPoly, OreAlgebraSpec, RatFunc};

fn oqm(m: usize, n: usize) -> OreAlgebraSpec {
    qmat::oqm(m, n).unwrap()
}

fn x(g: usize) -> NcPoly {
    NcPoly::generator(g)
}

/// `x11 - q x12 x21 X^{-1}`: (1 - q^{-2})^{-1} · (-(q - q^{-1})) = -q.
fn theta_x11() -> LaurentElem {
    let corr = NcPoly::term(Monomial(vec![1, 2]), RatFunc::q().neg());
    LaurentElem::from_base(x(0)).add(&LaurentElem::monomial(corr, -1))
}

#[test]
fn theta_examples() {
    let spec = oqm(2, 2);
    assert_eq!(delderiv::theta(&spec, &x(2), BOUND).unwrap(), LaurentElem::from_base(x(2)));
    assert_eq!(delderiv::theta(&spec, &NcPoly::one(), BOUND).unwrap(), LaurentElem::one());
    let t = delderiv::theta(&spec, &x(0), BOUND).unwrap();
    assert_eq!(t, theta_x11());
    assert_eq!(t.render(&spec), "x[1,1] - q*x[1,2]*x[2,1]*X^-1");
    assert_eq!(delderiv::theta_alt(&spec, &x(0), BOUND).unwrap(), t);
    assert_eq!(delderiv::theta_alt(&spec, &x(2), BOUND).unwrap(), LaurentElem::from_base(x(2)));
}

#[test]
fn theta_rejects_bad_input() {
    let spec = oqm(2, 2);
    assert!(matches!(
        delderiv::theta(&spec, &x(3), BOUND),
        Err(Error::LevelViolation { level: 4, generator: 4 })
    ));
    let flat = spec.mutate().level_q(3, RatFunc::one()).build().unwrap();
    assert!(matches!(delderiv::theta(&flat, &x(0), BOUND), Err(Error::TopLevelConstantIsOne)));
    let x11_sq = spec.pow(&x(0), 2).unwrap();
    assert!(matches!(
        delderiv::theta(&spec, &x11_sq, 1),
        Err(Error::NilpotenceBoundExceeded { bound: 1 })
    ));
}

#[test]
fn laurent_examples() {
    let spec = oqm(2, 2);
    let x_inv = LaurentElem::x_pow(-1);
    let x12 = LaurentElem::from_base(x(1));
    // σ^{-1}(x12) = q x12 and δ(x12) = 0
    let got = laurent_mul(&spec, &x_inv, &x12, BOUND).unwrap();
    assert_eq!(got, LaurentElem::monomial(x(1).scale(&RatFunc::q()), -1));
    assert_eq!(
        laurent_mul(&spec, &LaurentElem::x_pow(1), &x_inv, BOUND).unwrap(),
        LaurentElem::one()
    );
    let x11 = LaurentElem::from_base(x(0));
    let left = laurent_mul(&spec, &laurent_mul(&spec, &x_inv, &x11, BOUND).unwrap(), &LaurentElem::x_pow(1), BOUND).unwrap();
    let right = laurent_mul(&spec, &x_inv, &laurent_mul(&spec, &x11, &LaurentElem::x_pow(1), BOUND).unwrap(), BOUND).unwrap();
    assert_eq!(left, right);
}

#[test]
fn laurent_agrees_with_the_algebra_on_polynomials() {
    // Without inverses, products in R̂ are products in R.
    let spec = oqm(2, 2);
    let mut s = ElementSampler::new(11);
    for _ in 0..30 {
        let a = s.element(&spec, 4, 3).unwrap();
        let b = s.element(&spec, 4, 3).unwrap();
        let la = LaurentElem::from_poly(&spec, &a).unwrap();
        let lb = LaurentElem::from_poly(&spec, &b).unwrap();
        let prod = LaurentElem::from_poly(&spec, &spec.mul(&a, &b).unwrap()).unwrap();
        assert_eq!(laurent_mul(&spec, &la, &lb, BOUND).unwrap(), prod);
    }
}

#[test]
fn laurent_text_round_trip() {
    let spec = oqm(2, 2);
    let t = theta_x11();
    let parsed = expr::parse(&t.render(&spec)).unwrap().eval_laurent(&spec, BOUND).unwrap();
    assert_eq!(parsed, t);
    let inv = expr::parse("x[2,2]^-1 * x[1,2]").unwrap().eval_laurent(&spec, BOUND).unwrap();
    assert_eq!(inv.render(&spec), "q*x[1,2]*X^-1");
}

#[test]
fn min_shift_examples() {
    let spec = oqm(2, 2);
    assert_eq!(delderiv::min_shift(&spec, &x(0), BOUND).unwrap(), 1);
    assert_eq!(delderiv::min_shift(&spec, &x(2), BOUND).unwrap(), 0);
    let x11_sq = spec.pow(&x(0), 2).unwrap();
    assert_eq!(delderiv::min_shift(&spec, &x11_sq, BOUND).unwrap(), 2);
    assert!(matches!(delderiv::min_shift(&spec, &NcPoly::zero(), BOUND), Err(Error::ZeroElement)));
}

#[test]
fn delete_top_variable_examples() {
    let spec = oqm(2, 2);
    let t = delderiv::delete_top_variable(&spec);
    for i in 0..3 {
        assert!(t.delta(3, i).is_zero());
        assert_eq!(t.lambda(3, i), spec.lambda(3, i));
    }
    assert_eq!(delderiv::delete_top_variable(&t), t);
    assert!(t.check_cgl_axioms(BOUND).unwrap().all_pass());
    assert_eq!(t.qcommute_exponent(&x(0), &x(3)).unwrap(), Some(0));
}

#[test]
fn theta_extended_sends_y_to_x() {
    let spec = oqm(2, 2);
    assert_eq!(delderiv::theta_extended(&spec, &x(3), BOUND).unwrap(), LaurentElem::x_pow(1));
    // θ is multiplicative on A[Y; σ] as well.
    let t = delderiv::delete_top_variable(&spec);
    let mut s = ElementSampler::new(5);
    for _ in 0..20 {
        let a = s.element(&t, 4, 2).unwrap();
        let b = s.element(&t, 4, 2).unwrap();
        let lhs = delderiv::theta_extended(&spec, &t.mul(&a, &b).unwrap(), BOUND).unwrap();
        let ta = delderiv::theta_extended(&spec, &a, BOUND).unwrap();
        let tb = delderiv::theta_extended(&spec, &b, BOUND).unwrap();
        assert_eq!(lhs, laurent_mul(&spec, &ta, &tb, BOUND).unwrap());
    }
}

#[test]
fn theta_on_sl3_preset() {
    let spec = presets::uq_sl3_plus();
    let e1 = x(0);
    let t = delderiv::theta(&spec, &e1, BOUND).unwrap();
    assert_eq!(t.min_exponent(), Some(-1));
    assert_eq!(delderiv::theta_alt(&spec, &e1, BOUND).unwrap(), t);
}

fn base_pair(spec: &OreAlgebraSpec, seed: u64) -> (NcPoly, NcPoly) {
    let mut s = ElementSampler::new(seed);
    let top = spec.top();
    (s.element(spec, top, 3).unwrap(), s.element(spec, top, 3).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn theta_is_a_homomorphism(seed in any::<u64>(), wide in any::<bool>()) {
        let spec = if wide { oqm(2, 3) } else { oqm(2, 2) };
        let (a, b) = base_pair(&spec, seed);
        let ta = delderiv::theta(&spec, &a, BOUND).unwrap();
        let tb = delderiv::theta(&spec, &b, BOUND).unwrap();
        let tab = delderiv::theta(&spec, &spec.mul(&a, &b).unwrap(), BOUND).unwrap();
        prop_assert_eq!(tab, laurent_mul(&spec, &ta, &tb, BOUND).unwrap());
        prop_assert_eq!(ta.is_zero(), a.is_zero());
    }

    #[test]
    fn theta_expansions_agree(seed in any::<u64>()) {
        let spec = oqm(2, 3);
        let (a, _) = base_pair(&spec, seed);
        prop_assert_eq!(
            delderiv::theta(&spec, &a, BOUND).unwrap(),
            delderiv::theta_alt(&spec, &a, BOUND).unwrap()
        );
    }

    #[test]
    fn laurent_is_associative(seed in any::<u64>(), e in -2i64..=2, f in -2i64..=2) {
        let spec = oqm(2, 2);
        let (a, b) = base_pair(&spec, seed);
        let u = LaurentElem::monomial(a, e).add(&LaurentElem::x_pow(f));
        let v = LaurentElem::monomial(b, f);
        let w = theta_x11();
        let left = laurent_mul(&spec, &laurent_mul(&spec, &u, &v, BOUND).unwrap(), &w, BOUND).unwrap();
        let right = laurent_mul(&spec, &u, &laurent_mul(&spec, &v, &w, BOUND).unwrap(), BOUND).unwrap();
        prop_assert_eq!(left, right);
        let distrib = laurent_mul(&spec, &u, &v.add(&w), BOUND).unwrap();
        let split = laurent_mul(&spec, &u, &v, BOUND).unwrap().add(&laurent_mul(&spec, &u, &w, BOUND).unwrap());
        prop_assert_eq!(distrib, split);
    }

    #[test]
    fn min_shift_is_nilpotency_index(seed in any::<u64>()) {
        let spec = oqm(2, 3);
        let mut s = ElementSampler::new(seed);
        let a = s.nonzero_element(&spec, spec.top(), 3).unwrap();
        prop_assert_eq!(
            delderiv::min_shift(&spec, &a, BOUND).unwrap(),
            spec.nilpotency_index(spec.top(), &a, BOUND).unwrap()
        );
    }
}

#[test]
fn images_of_generators_skew_commute_with_x() {
    // X θ(x_i) = λ_{N,i} θ(x_i) X
    for spec in [oqm(2, 2), oqm(2, 3), presets::uq_sl3_plus()] {
        let top = spec.top();
        let xx = LaurentElem::x_pow(1);
        for i in 0..top {
            let b = delderiv::theta(&spec, &x(i), BOUND).unwrap();
            let lhs = laurent_mul(&spec, &xx, &b, BOUND).unwrap();
            let rhs = b.shift(1).scale(spec.lambda(top, i));
            assert_eq!(lhs, rhs, "{} at {}", spec.name(), spec.names()[i]);
            assert!(spec.lambda(top, i).as_qpow().is_some());
        }
    }
}

#[test]
fn theta_preserves_weights() {
    for spec in [oqm(2, 2), oqm(2, 3)] {
        let top = spec.top();
        let wx = spec.weight(top).to_vec();
        let mut s = ElementSampler::new(99);
        let mut tested = 0;
        while tested < 25 {
            let w = s.word(top, 3);
            let a = spec.word(&w).unwrap();
            let target = spec.torus_weight(&a).unwrap().as_homogeneous().unwrap().to_vec();
            for (k, coeff) in delderiv::theta(&spec, &a, BOUND).unwrap().coeffs() {
                let cw = spec.torus_weight(coeff).unwrap();
                let adjusted: Vec<i64> = cw
                    .as_homogeneous()
                    .expect("coefficient is an eigenvector")
                    .iter()
                    .zip(&wx)
                    .map(|(c, x)| c + k * x)
                    .collect();
                assert_eq!(adjusted, target);
            }
            tested += 1;
        }
    }
}
