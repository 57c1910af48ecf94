use acx::catalog::{self, NAMES};
use acx::syntax::{parse_covector, parse_salamon, print_covector, print_salamon};
use acx::{AcxError, Manifest};
use acx_core::{BidegreeComponent, InvariantForm, LieAlgebra, Scalar};
use num_rational::BigRational;
use proptest::prelude::*;

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn s(a: i64, b: i64) -> Scalar {
    Scalar::ratio(a, b)
}

#[test]
fn catalog_round_trips() {
    for name in NAMES.iter().copied().chain(["torus_2", "torus_8", "sol3_t@-1/3", "sol3_t@2/7"]) {
        let m = catalog::lookup(name).unwrap();
        let text = m.print();
        let back = Manifest::parse(&text).unwrap();
        assert_eq!(back, m, "{name}");
        assert_eq!(back.print(), text, "{name}");
        assert_eq!(back.hash(), m.hash());
        m.model().unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn catalog_errors() {
    for bad in ["sol3_t@3/4", "sol3_t@x", "sol3_t@i"] {
        assert!(matches!(catalog::lookup(bad), Err(AcxError::Parse { .. })), "{bad}");
    }
    for unknown in ["torus_5", "torus_10", "kt2", ""] {
        assert!(matches!(catalog::lookup(unknown), Err(AcxError::UnknownInput(_))), "{unknown}");
    }
}

#[test]
fn structure_equation_examples() {
    let kt = catalog::kt().algebra().unwrap();
    assert_eq!(kt.de(3), InvariantForm::from_terms(4, 2, &[(&[1, 2], Scalar::from(-1))]).unwrap());
    let sol = catalog::lookup("sol3_t@0").unwrap().algebra().unwrap();
    assert_eq!(sol.de(2), InvariantForm::from_terms(4, 2, &[(&[0, 2], Scalar::from(-1))]).unwrap());
    assert_eq!(sol.de(3), InvariantForm::from_terms(4, 2, &[(&[0, 3], Scalar::one())]).unwrap());
    // Heisenberg times a line, with a scaled bracket
    let d: Vec<_> = ["0", "0", "1/2*12", "0"].iter().map(|x| parse_salamon(x, 4).unwrap()).collect();
    let h = LieAlgebra::from_differentials(&d).unwrap().validate().unwrap();
    assert_eq!(h.de(2), InvariantForm::from_terms(4, 2, &[(&[0, 1], s(1, 2))]).unwrap());
    assert_eq!(parse_salamon("1/2*12", 3).unwrap(), InvariantForm::from_terms(3, 2, &[(&[0, 1], s(1, 2))]).unwrap());
}

/// `e^4` in terms of `φ_t`, as printed for the family: with `D = 1 + 6t² + t⁴`,
/// `e^4 = -(i/2) (1-t²)(1+t²)/D · (φ² - φ̄² - 2t/(1+t²) (φ¹ - φ̄¹))`.
#[test]
fn sol_coframe_recovers_real_covectors() {
    for t in [q(0, 1), q(1, 10), q(1, 4), q(1, 2), q(-1, 3)] {
        let m = catalog::sol3(&t).unwrap().model().unwrap();
        let acs = m.acs();
        let (p1, p2) = (acs.theta(0), acs.theta(1));
        let one = BigRational::from_integer(1.into());
        let t2 = &t * &t;
        let den = &one + BigRational::from_integer(6.into()) * &t2 + &t2 * &t2;
        let lead = Scalar::imag(-(&one - &t2) * (&one + &t2) / (BigRational::from_integer(2.into()) * &den));
        let ratio = Scalar::real(BigRational::from_integer(2.into()) * &t / (&one + &t2));
        let e4 = p2.sub(&p2.conj()).sub(&p1.sub(&p1.conj()).scale(&ratio)).scale(&lead);
        assert_eq!(e4, InvariantForm::covector(4, 3), "t = {t}");
        let half = s(1, 2);
        assert_eq!(p1.add(&p1.conj()).scale(&half), InvariantForm::covector(4, 0));
        assert_eq!(p2.add(&p2.conj()).scale(&half), InvariantForm::covector(4, 2));
    }
}

#[test]
fn sol_c_t() {
    assert_eq!(catalog::sol_c(&q(1, 2)), q(10, 33));
    for t in [q(1, 10), q(1, 2), q(-1, 3)] {
        let m = catalog::sol3(&t).unwrap().model().unwrap();
        let acs = m.acs();
        let mubar = m.component(BidegreeComponent::MuBar);
        let alpha = acs.theta(0).add(&acs.theta(1).scale(&Scalar::real(catalog::sol_c(&t))));
        assert!(mubar.apply(&alpha).is_zero());
    }
}

#[test]
fn manifest_parse_errors_name_the_field() {
    let kt = catalog::kt().print();
    let cases = [
        (kt.replace("\"-23\"", "\"-25\""), "d[3], offset 2"),
        (kt.replace("\"-23\"", "\"-2 3x\""), "d[3]"),
        (kt.replace("dim = 4", "dim = 3"), "dim"),
        (kt.replace("omega = \"12+34\"", "omega = \"12+\""), "omega, offset 3"),
        (kt.replace("integrable = false", "kahler = true"), "flags"),
        (kt.replace("\"identity\"", "\"flat\""), "metric"),
        (kt.replace("dim = 4", "dim = \"four\""), "line 2"),
        (kt.replace("metric =", "coframe10 = [\"e1+i*e2\", \"e3+i*e4\"]\nmetric ="), "exactly one of"),
    ];
    for (text, location) in cases {
        match Manifest::parse(&text) {
            Err(e @ AcxError::Parse { .. }) => {
                assert!(e.to_string().contains(location), "{e} should mention {location}");
                assert_eq!(e.exit_code(), 2);
            }
            other => panic!("expected a parse error at {location}, got {other:?}"),
        }
    }
}

#[test]
fn validation_errors_are_distinguished() {
    let kt = catalog::kt().print();
    let jacobi = kt.replace(r#"d = ["0", "0", "0", "-23"]"#, r#"d = ["-13", "0", "-12", "0"]"#);
    let e = Manifest::parse(&jacobi).unwrap().model().unwrap_err();
    assert_eq!(e.exit_code(), 1);
    assert!(e.to_string().contains("Jacobi"), "{e}");
    let not_j = kt.replacen(r#"["0", "-1", "0", "0"]"#, r#"["0", "-2", "0", "0"]"#, 1);
    assert_eq!(Manifest::parse(&not_j).unwrap().model().unwrap_err().exit_code(), 1);
    let not_closed = kt.replace(r#"omega = "12+34""#, r#"omega = "14+23""#);
    assert!(Manifest::parse(&not_closed).unwrap().model().is_err());
    let flag = kt.replace("integrable = false", "integrable = true");
    assert!(matches!(Manifest::parse(&flag).unwrap().model(), Err(AcxError::Flag { .. })));
}

fn small_rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| Scalar::ratio(a, b))
}

proptest! {
    #[test]
    fn salamon_round_trip(coeffs in prop::collection::vec(small_rational(), 15), wide in any::<bool>()) {
        let n = if wide { 10 } else { 6 };
        let v: Vec<Scalar> = coeffs.into_iter().chain(std::iter::repeat(Scalar::zero())).take(n * (n - 1) / 2).collect();
        let f = InvariantForm::from_vector(n, 2, &v);
        let text = print_salamon(&f).unwrap();
        prop_assert_eq!(parse_salamon(&text, n).unwrap(), f);
    }

    #[test]
    fn covector_round_trip(re in prop::collection::vec(small_rational(), 4), im in prop::collection::vec(small_rational(), 4)) {
        let v: Vec<Scalar> = re.iter().zip(&im).map(|(a, b)| a + &(b * &Scalar::i())).collect();
        prop_assert_eq!(parse_covector(&print_covector(&v), 4).unwrap(), v);
    }
}
