use weightsys::engine::{eval_wgl, eval_wgl_product, eval_wso, odd_cycle_value};
use weightsys::Engine;
use weightsys::perm::{ChordDiagram, Permutation};
use weightsys::{Polynomial, Rational};

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn poly(s: &str) -> Polynomial {
    s.parse().unwrap()
}

fn diagram(s: &str) -> Permutation {
    s.parse::<ChordDiagram>().unwrap().to_permutation()
}

#[test]
fn gl_values() {
    assert_eq!(eval_wgl::<Rational>(&perm("2 3 4 5 1")), poly("C5"));
    assert_eq!(eval_wgl::<Rational>(&perm("2 1")), poly("C2"));
    assert_eq!(eval_wgl::<Rational>(&perm("3 4 1 2")), poly("C1^2 + C2^2 - C0*C2"));
    assert_eq!(
        eval_wgl::<Rational>(&diagram("(1,3)(2,5)(4,6)")),
        poly("C2^3 - 2*C0*C2^2 + C0^2*C2 + 2*C1^2*C2 - C0*C1^2")
    );
    assert_eq!(eval_wgl::<Rational>(&Permutation::identity(4)), poly("C1^4"));
}

#[test]
fn gl_products() {
    let p1 = perm("2 1");
    let p2 = perm("3 4 1 2");
    assert_eq!(eval_wgl_product::<Rational>(&[p1.clone(), p1.clone()]), poly("C2^2"));
    assert_eq!(eval_wgl_product::<Rational>(&[]), poly("1"));
    assert_eq!(
        eval_wgl_product::<Rational>(&[p1.clone(), p2.clone()]),
        &poly("C2") * &poly("C1^2 + C2^2 - C0*C2")
    );
    assert_eq!(
        eval_wgl::<Rational>(&p1.concat(&p2)),
        eval_wgl_product::<Rational>(&[p1, p2])
    );
}

#[test]
fn so_values() {
    assert_eq!(eval_wso::<Rational>(&perm("2 1")), poly("C2"));
    assert_eq!(eval_wso::<Rational>(&perm("1")), poly("0"));
    assert_eq!(eval_wso::<Rational>(&perm("2 3 1")), poly("1/2*C0*C2 - C2"));
    assert_eq!(eval_wso::<Rational>(&perm("3 4 1 2")), poly("C2^2 - 2*C0*C2 + 4*C2"));
    assert_eq!(
        eval_wso::<Rational>(&diagram("(1,3)(2,5)(4,6)")),
        poly("C2^3 - 4*C0*C2^2 + 8*C2^2 + 4*C0^2*C2 - 16*C0*C2 + 16*C2")
    );
    assert_eq!(eval_wso::<Rational>(&diagram("1 2 1 2")), poly("C2^2 - 2*C0*C2 + 4*C2"));
}

#[test]
fn odd_cycles() {
    assert_eq!(odd_cycle_value::<Rational>(1).unwrap(), poly("0"));
    assert_eq!(odd_cycle_value::<Rational>(3).unwrap(), poly("1/2*C0*C2 - C2"));
    let c5 = poly("-1/4*C0^3*C2 + 5/4*C0^2*C2 - 2*C0*C2 + 3/2*C0*C4 + C2 - 2*C4 - 1/2*C2^2");
    assert_eq!(odd_cycle_value::<Rational>(5).unwrap(), c5);
    assert!(odd_cycle_value::<Rational>(4).is_err());
    let e = Engine::so();
    for m in [1, 3, 5, 7] {
        assert_eq!(
            e.eval(&Permutation::standard_cycle(m)),
            e.odd_cycle_value(m).unwrap()
        );
    }
}
