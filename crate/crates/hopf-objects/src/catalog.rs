//! Small standard groups and their function algebras.

use kosmos_core::linear::tensor_obj;
use kosmos_core::{rat, LinMap, Rat, VecObj};

use crate::{FinGroupObj, HopfError, HopfObj};

pub fn cyclic(n: usize) -> FinGroupObj {
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let inv: Vec<usize> = (0..n).map(|a| (n - a) % n).collect();
    FinGroupObj::from_table(&table, 0, &inv, None).expect("cyclic group")
}

pub fn trivial() -> FinGroupObj {
    cyclic(1)
}

pub fn direct_product(a: &FinGroupObj, b: &FinGroupObj) -> FinGroupObj {
    let (n, m) = (a.order(), b.order());
    let table: Vec<Vec<usize>> = (0..n * m)
        .map(|x| (0..n * m).map(|y| a.m(x / m, y / m) * m + b.m(x % m, y % m)).collect())
        .collect();
    let inv: Vec<usize> = (0..n * m).map(|x| a.inv(x / m) * m + b.inv(x % m)).collect();
    FinGroupObj::from_table(&table, a.unit() * m + b.unit(), &inv, None).expect("product group")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Permutations of {0..n} in lexicographic one-line order, composed as (pq)(i) = p(q(i)).
pub fn symmetric(n: usize) -> FinGroupObj {
    let perms = permutations(n);
    let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("permutation");
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| perms.iter().map(|q| index(&q.iter().map(|&i| p[i]).collect::<Vec<_>>())).collect())
        .collect();
    let inv: Vec<usize> = perms
        .iter()
        .map(|p| {
            let mut r = vec![0; n];
            for (i, &pi) in p.iter().enumerate() {
                r[pi] = i;
            }
            index(&r)
        })
        .collect();
    let labels = perms.iter().map(|p| p.iter().map(|d| d.to_string()).collect::<String>()).collect();
    FinGroupObj::from_table(&table, 0, &inv, Some(labels)).expect("symmetric group")
}

/// The algebra of functions on a finite group, in the basis of indicator functions.
pub fn function_algebra(g: &FinGroupObj) -> Result<HopfObj<Rat>, HopfError> {
    let n = g.order();
    let x = match g.carrier().labels() {
        Some(l) => VecObj::with_labels(l.to_vec())?,
        None => VecObj::new(n),
    };
    let xx = tensor_obj(&x, &x);
    let k = VecObj::unit();
    let one = |b: bool| rat(b as i64);
    let mul = LinMap::from_fn(&xx, &x, |r, c| one(c == r * n + r));
    let unit = LinMap::from_fn(&k, &x, |_, _| rat(1));
    let comul = LinMap::from_fn(&x, &xx, |r, c| one(g.m(r / n, r % n) == c));
    let counit = LinMap::from_fn(&x, &k, |_, c| one(c == g.unit()));
    let antipode = LinMap::permutation(&x, &x, g.inv_map().table());
    HopfObj::validate(x, mul, unit, comul, counit, antipode)
}

/// Functions on Z/2 in the group-like basis {1, t} with t² = 1 and Δt = t⊗t.
pub fn grouplike_z2() -> Result<HopfObj<Rat>, HopfError> {
    let x = VecObj::with_labels(vec!["1".into(), "t".into()])?;
    let xx = tensor_obj(&x, &x);
    let k = VecObj::unit();
    let r = |v: &[i64]| v.iter().map(|&a| rat(a)).collect::<Vec<_>>();
    let mul = LinMap::new(xx.clone(), x.clone(), vec![r(&[1, 0, 0, 1]), r(&[0, 1, 1, 0])])?;
    let unit = LinMap::new(k.clone(), x.clone(), vec![r(&[1]), r(&[0])])?;
    let comul = LinMap::new(x.clone(), xx, vec![r(&[1, 0]), r(&[0, 0]), r(&[0, 0]), r(&[0, 1])])?;
    let counit = LinMap::new(x.clone(), k, vec![r(&[1, 1])])?;
    let antipode = LinMap::identity(&x);
    HopfObj::validate(x, mul, unit, comul, counit, antipode)
}

/// The ground field as the trivial Hopf algebra.
pub fn kappa() -> Result<HopfObj<Rat>, HopfError> {
    let k = VecObj::unit();
    let id = LinMap::identity(&k);
    HopfObj::validate(k, id.clone(), id.clone(), id.clone(), id.clone(), id)
}

/// Evaluation at the group element `at`, an algebra point of the function algebra.
pub fn evaluation(h: &HopfObj<Rat>, at: usize) -> LinMap<Rat> {
    LinMap::from_fn(h.carrier(), &VecObj::unit(), |_, c| rat((c == at) as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_units() {
        assert_eq!(trivial().order(), 1);
        let k = direct_product(&cyclic(2), &cyclic(2));
        assert_eq!(k.order(), 4);
        assert!(k.is_abelian());
        assert!((0..4).all(|a| k.m(a, a) == 0));
        let s3 = symmetric(3);
        assert_eq!(s3.carrier().label(0), "012");
        assert_eq!(s3.carrier().label(1), "021");
    }
}
