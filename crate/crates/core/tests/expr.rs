use proptest::prelude::*;
use qcgl::expr::{self, Expr};
use qcgl::ncalg::DEFAULT_NILPOTENCE_BOUND;
use qcgl::sample::ElementSampler;
use qcgl::{presets, qmat, Error, NcPoly, RatFunc};

#[test]
fn evaluation_examples() {
    let spec = qmat::oqm(2, 2).unwrap();
    let p = expr::eval_str(&spec, "x[2,2]*x[1,1]").unwrap();
    assert_eq!(spec.render(&p), "x[1,1]*x[2,2] - (q^2-1)/q*x[1,2]*x[2,1]");
    assert_eq!(expr::eval_str(&spec, "(x[1,2])^0").unwrap(), NcPoly::one());
    assert_eq!(expr::eval_str(&spec, "g_2").unwrap(), NcPoly::generator(1));
    let c = expr::eval_str(&spec, "x[1,2]/(q+1) - x[1,2]/(q+1)").unwrap();
    assert!(c.is_zero());
}

#[test]
fn errors_are_structured() {
    let spec = qmat::oqm(2, 2).unwrap();
    assert!(matches!(expr::eval_str(&spec, "x[3,1]"), Err(Error::UnknownGenerator(_))));
    assert!(matches!(expr::eval_str(&spec, "X*x[1,1]"), Err(Error::Eval(_))));
    match expr::parse("x[1,1] * * x[1,2]") {
        Err(Error::Parse { pos, .. }) => assert_eq!(pos, 9),
        other => panic!("unexpected {other:?}"),
    }
    assert!(matches!(expr::eval_str(&spec, "x[1,1]/x[1,2]"), Err(Error::Eval(_))));
    assert!(matches!(expr::eval_str(&spec, "x[1,1]^-1"), Err(Error::Eval(_))));
    assert!(matches!(expr::parse("1/0").unwrap().eval_scalar(), Err(Error::DivisionByZero)));
}

#[test]
fn scalars_parse_canonically() {
    let r: RatFunc = "(q^2 - 1)/q".parse().unwrap();
    assert_eq!(r, RatFunc::q().sub(&RatFunc::qpow(-1)));
    assert_eq!(r.to_string(), "(q^2-1)/q");
    assert_eq!(expr::parse("q^(-2)").unwrap(), Expr::Pow(Box::new(Expr::Q), -2));
}

#[test]
fn laurent_context() {
    let spec = qmat::oqm(2, 2).unwrap();
    let e = expr::parse("X*X^-1 + x[2,1]").unwrap();
    assert!(e.mentions_top());
    let v = e.eval_laurent(&spec, DEFAULT_NILPOTENCE_BOUND).unwrap();
    assert_eq!(v.render(&spec), "1 + x[2,1]");
}

#[test]
fn preset_names_parse() {
    let spec = presets::uq_sl3_plus();
    let p = expr::eval_str(&spec, "e3*e1").unwrap();
    assert_eq!(spec.render(&p), "q^-1*e1*e3");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rendering_round_trips(seed in any::<u64>()) {
        let spec = qmat::oqm(2, 3).unwrap();
        let mut s = ElementSampler::new(seed);
        let a = s.element(&spec, 6, 3).unwrap();
        let text = spec.render(&a);
        prop_assert_eq!(expr::eval_str(&spec, &text).unwrap(), a);
    }

    #[test]
    fn scalar_rendering_round_trips(a in -5i64..=5, b in 1i64..=4, k in -3i64..=3) {
        let r = RatFunc::from_int(a).add(&RatFunc::qpow(k)).div(&RatFunc::q().add(&RatFunc::from_int(b))).unwrap();
        let back: RatFunc = r.to_string().parse().unwrap();
        prop_assert_eq!(back, r);
    }
}
