//! Rational points of two-dimensional commutative algebras.

use hopf_objects::CommAlgObj;
use kosmos_core::{LinMap, Rat, VecObj};
use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use crate::TorsorError;

fn rational_sqrt(q: &Rat) -> Option<Rat> {
    if q.numer().sign() == Sign::Minus {
        return None;
    }
    let root = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(Rat::new(root(q.numer())?, root(q.denom())?))
}

/// All algebra maps a → κ for a commutative algebra of dimension 2, as 1×2 matrices in the
/// given basis. Writes a = κ{u, x} with x² = α + βx, so points are the rational roots of
/// r² − βr − α.
pub fn rational_points_dim2(a: &CommAlgObj<Rat>) -> Result<Vec<LinMap<Rat>>, TorsorError> {
    if a.dim() != 2 {
        return Err(TorsorError::NotDimTwo(a.dim()));
    }
    let u = a.unit_map().column(0);
    if u.iter().all(Zero::is_zero) {
        return Err(TorsorError::NotUnital);
    }
    // x is whichever standard vector is not a multiple of u
    let x = if u[1].is_zero() { vec![Rat::zero(), Rat::one()] } else { vec![Rat::one(), Rat::zero()] };
    let det = &u[0] * &x[1] - &u[1] * &x[0];
    // coordinates of a standard-basis vector v in the basis {u, x}
    let coords = |v: &[Rat]| ((&v[0] * &x[1] - &v[1] * &x[0]) / &det, (&u[0] * &v[1] - &u[1] * &v[0]) / &det);
    let (alpha, beta) = coords(&a.product(&x, &x));

    let disc = &beta * &beta + Rat::from_integer(4.into()) * &alpha;
    let Some(s) = rational_sqrt(&disc) else { return Ok(Vec::new()) };
    let two = Rat::from_integer(2.into());
    let mut roots = vec![(&beta + &s) / &two];
    if !s.is_zero() {
        roots.push((&beta - &s) / &two);
    }
    roots.sort();

    let e = [vec![Rat::one(), Rat::zero()], vec![Rat::zero(), Rat::one()]];
    let mut points = Vec::new();
    for r in roots {
        let values: Vec<Rat> = e
            .iter()
            .map(|v| {
                let (cu, cx) = coords(v);
                cu + cx * &r
            })
            .collect();
        let point = LinMap::from_fn(a.carrier(), &VecObj::unit(), |_, c| values[c].clone());
        if a.is_algebra_point(&point)? {
            points.push(point);
        }
    }
    Ok(points)
}
