//! Both forms of the functional equation: with a boundary correction, and
//! for closed spaces where a sign is recorded.
//!
//!     cargo run --example functional_equation

use lefschetz_zeta::algebra::rational::int;
use lefschetz_zeta::duality::symplectic_form;
use lefschetz_zeta::{
    build_closed_duality_action, verify_closed_functional_equation, verify_functional_equation, Matrix, Poly,
    RationalFunction, ZetaFunction,
};

fn main() -> lefschetz_zeta::Result<()> {
    let zeta = |num: &[i64]| -> lefschetz_zeta::Result<ZetaFunction> {
        Ok(ZetaFunction::new(RationalFunction::reduce(Poly::from_ints(num), Poly::from_ints(&[1, -1]))?))
    };
    let one = ZetaFunction::one();

    for (label, num, chi) in [("trefoil", &[1, -1, 1][..], -1), ("skewed", &[1, -1, -1][..], -1)] {
        let r = verify_functional_equation(&zeta(num)?, &one, &int(1), chi)?;
        println!("{label:8} holds={}  lhs={}  rhs={}", r.holds, r.lhs, r.rhs);
    }

    let j = symplectic_form(1);
    for (a, lambda) in [
        (Matrix::from_ints(&[&[2, 1], &[1, 1]]), int(1)),
        (Matrix::from_ints(&[&[3, 1], &[1, 1]]), int(2)),
        (Matrix::from_ints(&[&[0, -1], &[1, 0]]), int(1)),
    ] {
        let act = build_closed_duality_action(&a, &j, &lambda)?;
        let r = verify_closed_functional_equation(&act.zeta(), &lambda, act.euler_characteristic())?;
        println!("A={a:?} λ={lambda}: ζ = {}  holds={} sign={:?}", act.zeta().value(), r.holds, r.sign);
    }
    Ok(())
}
