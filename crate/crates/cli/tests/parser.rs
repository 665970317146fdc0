use kforge::expr::{parse_poly, Expr, ParseError};
use kforge_core::gauss::q;
use kforge_core::{Gauss, Poly};
use proptest::prelude::*;

#[test]
fn spec_examples() {
    let e = parse_poly("x0*x1 + 2*x2^2", 4).unwrap();
    assert_eq!(e.degree(), 2);
    assert!(matches!(parse_poly("x9", 4), Err(ParseError::IndexOutOfRange { index: 9, dim: 4, .. })));
    assert!(matches!(parse_poly("x0 ⋆ x1", 4), Err(ParseError::Syntax { line: 1, column: 4, .. })));
}

#[test]
fn error_positions() {
    match parse_poly("x0 +\n  y", 4) {
        Err(ParseError::UnknownSymbol { symbol, line, column }) => assert_eq!((symbol.as_str(), line, column), ("y", 2, 3)),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_poly("(x0 + x1", 4), Err(ParseError::Syntax { .. })));
    assert!(matches!(parse_poly("x0 / x1", 4), Err(ParseError::Syntax { .. })));
    assert!(matches!(parse_poly("1/0", 4), Err(ParseError::Syntax { .. })));
    assert!(matches!(parse_poly("", 4), Err(ParseError::Syntax { .. })));
    assert!(matches!(parse_poly("x0^", 4), Err(ParseError::Syntax { .. })));
    assert!(matches!(parse_poly("x", 4), Err(ParseError::UnknownSymbol { .. })));
}

#[test]
fn precedence() {
    let x = |k| Box::new(Expr::X(k));
    assert_eq!(parse_poly("x0 + x1*x2", 4).unwrap(), Expr::Add(x(0), Box::new(Expr::Mul(x(1), x(2)))));
    assert_eq!(parse_poly("-x0^2", 4).unwrap(), Expr::Neg(Box::new(Expr::Pow(x(0), 2))));
    assert_eq!(parse_poly("x0 - x1 - x2", 4).unwrap().to_string(), "x0 - x1 - x2");
    assert_eq!(parse_poly("x0 - (x1 - x2)", 4).unwrap().to_string(), "x0 - (x1 - x2)");
    assert_eq!(parse_poly("(1/2)^2", 4).unwrap().to_string(), "(1/2)^2");
}

#[test]
fn evaluation() {
    let p = parse_poly("(x0 + x1)*(x0 - x1) - x0^2 + x1^2", 4).unwrap().to_poly(4, 3).unwrap();
    assert!(p.is_zero());
    let p = parse_poly("i*i + 1", 4).unwrap().to_poly(4, 3).unwrap();
    assert!(p.is_zero());
    let p = parse_poly("3/4*a*x2", 4).unwrap().to_poly(4, 3).unwrap();
    assert_eq!(p, Poly::x(2, 4, 3).scale(&Gauss::real(q(3, 4))).scale_a(1));
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0i128..20, 1i128..6).prop_map(|(n, d)| Expr::Num(q(n, d))),
        Just(Expr::I),
        Just(Expr::A),
        (0usize..4).prop_map(Expr::X),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::Add(Box::new(l), Box::new(r))),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::Sub(Box::new(l), Box::new(r))),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::Mul(Box::new(l), Box::new(r))),
            (inner, 0u32..4).prop_map(|(b, e)| Expr::Pow(Box::new(b), e)),
        ]
    })
}

proptest! {
    #[test]
    fn printed_form_evaluates_the_same(e in arb_expr()) {
        let printed = e.to_string();
        let again = parse_poly(&printed, 4).unwrap();
        prop_assert_eq!(&again, &e);
        prop_assert_eq!(again.to_string(), printed.clone());
        prop_assert_eq!(again.to_poly(4, 3).unwrap(), e.to_poly(4, 3).unwrap());
    }

    #[test]
    fn parsed_trees_round_trip(e in arb_expr()) {
        let once = parse_poly(&e.to_string(), 4).unwrap();
        let twice = parse_poly(&once.to_string(), 4).unwrap();
        prop_assert_eq!(once, twice);
    }
}
