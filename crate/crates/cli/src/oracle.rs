//! Independent oracles used by the suite. They share no code path with the constructions
//! they judge.

use hopf_objects::{CommAlgObj, FinGroupObj, HopfObj};
use kosmos_core::linear::tensor_map;
use kosmos_core::{LinMap, Morphism, Rat, VecObj};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Largest order the exhaustive isomorphism search accepts.
pub const SEARCH_LIMIT: usize = 6;

/// Backtracking search for a bijection preserving the multiplication tables.
pub fn isomorphic_by_search(a: &FinGroupObj, b: &FinGroupObj) -> Option<Vec<usize>> {
    let n = a.order();
    if n != b.order() || n > SEARCH_LIMIT {
        return None;
    }
    fn extend(a: &FinGroupObj, b: &FinGroupObj, f: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let n = a.order();
        let k = f.len();
        // products of already assigned elements must already agree
        for x in 0..k {
            for y in 0..k {
                let xy = a.m(x, y);
                if xy < k && f[xy] != b.m(f[x], f[y]) {
                    return false;
                }
            }
        }
        if k == n {
            return true;
        }
        for t in 0..n {
            if !used[t] {
                used[t] = true;
                f.push(t);
                if extend(a, b, f, used) {
                    return true;
                }
                f.pop();
                used[t] = false;
            }
        }
        false
    }
    let mut f = Vec::new();
    extend(a, b, &mut f, &mut vec![false; n]).then_some(f)
}

type Vector = Vec<Rat>;

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |s, (x, y)| s + x * y)
}

/// Coefficients of the characteristic polynomial det(tI − m), lowest degree first.
fn char_poly(m: &[Vec<Rat>]) -> Vec<Rat> {
    let n = m.len();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut prev = vec![vec![Rat::zero(); n]; n];
    for k in 1..=n {
        let mut cur = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                cur[i][j] = (0..n).fold(Rat::zero(), |s, l| s + &m[i][l] * &prev[l][j]);
            }
            cur[i][i] += &coeffs[n - k + 1];
        }
        let trace = (0..n).fold(Rat::zero(), |s, i| s + (0..n).fold(Rat::zero(), |t, l| t + &m[i][l] * &cur[l][i]));
        coeffs[n - k] = -trace / Rat::from_integer(BigInt::from(k));
        prev = cur;
    }
    coeffs
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out
}

fn rational_roots(poly: &[Rat]) -> Vec<Rat> {
    let lcm = poly.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let mut ints: Vec<BigInt> = poly.iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    while ints.len() > 1 && ints[0].is_zero() {
        ints.remove(0);
        if !roots.contains(&Rat::zero()) {
            roots.push(Rat::zero());
        }
    }
    if ints.len() > 1 {
        let lead = ints.last().expect("nonempty").clone();
        for p in divisors(&ints[0]) {
            for q in divisors(&lead) {
                for cand in [Rat::new(p.clone(), q.clone()), -Rat::new(p.clone(), q.clone())] {
                    let value = ints.iter().rev().fold(Rat::zero(), |acc, c| acc * &cand + Rat::from_integer(c.clone()));
                    if value.is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Basis of the solution space of Σ_i c_i v_i = 0 for the columns of `rows` (k × k).
fn null_space(rows: &[Vec<Rat>]) -> Vec<Vector> {
    let k = rows.first().map_or(0, Vec::len);
    let m = LinMap::new(VecObj::new(k), VecObj::new(rows.len()), rows.to_vec()).expect("square");
    let ker = m.kernel();
    (0..ker.cols()).map(|c| ker.column(c)).collect()
}

/// Splits `space` (row vectors spanning an invariant subspace of covectors) into the
/// eigenspaces of χ ↦ χ∘L. Returns None when the eigenvalues are not all rational or the
/// operator is not diagonalizable there.
fn split(space: &[Vector], l: &[Vec<Rat>]) -> Option<Vec<Vec<Vector>>> {
    let k = space.len();
    let n = l.len();
    let images: Vec<Vector> =
        space.iter().map(|s| (0..n).map(|c| (0..n).fold(Rat::zero(), |a, r| a + &s[r] * &l[r][c])).collect()).collect();
    // coordinates of each image in the basis `space`
    let basis = LinMap::new(VecObj::new(k), VecObj::new(n), (0..n).map(|r| space.iter().map(|s| s[r].clone()).collect()).collect())
        .expect("basis");
    let mut restricted = vec![vec![Rat::zero(); k]; k];
    for (j, img) in images.iter().enumerate() {
        let target = LinMap::new(VecObj::unit(), VecObj::new(n), img.iter().map(|v| vec![v.clone()]).collect()).expect("column");
        let coords = basis.solve_left(&target).ok()?;
        for (i, row) in restricted.iter_mut().enumerate() {
            row[j] = coords.get(i, 0);
        }
    }
    let mut pieces = Vec::new();
    let mut total = 0;
    for r in rational_roots(&char_poly(&restricted)) {
        let shifted: Vec<Vec<Rat>> =
            (0..k).map(|i| (0..k).map(|j| if i == j { &restricted[i][j] - &r } else { restricted[i][j].clone() }).collect()).collect();
        let ker = null_space(&shifted);
        total += ker.len();
        pieces.push(
            ker.iter().map(|c| (0..n).map(|x| (0..k).fold(Rat::zero(), |a, i| a + &c[i] * &space[i][x])).collect()).collect(),
        );
    }
    (total == k).then_some(pieces)
}

/// All algebra maps a → κ, as value vectors on the basis, provided `a` is split semisimple
/// (isomorphic to κ^n as an algebra). Otherwise None.
pub fn characters(a: &CommAlgObj<Rat>) -> Option<Vec<Vector>> {
    let n = a.dim();
    let e = |i: usize| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect::<Vector>();
    // left multiplication by e_i, as an n × n matrix acting on coordinates
    let mult: Vec<Vec<Vec<Rat>>> = (0..n)
        .map(|i| {
            let cols: Vec<Vector> = (0..n).map(|c| a.product(&e(i), &e(c))).collect();
            (0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect()
        })
        .collect();
    let mut spaces: Vec<Vec<Vector>> = vec![(0..n).map(e).collect()];
    for l in &mult {
        let mut next = Vec::new();
        for s in &spaces {
            next.extend(split(s, l)?);
        }
        spaces = next;
    }
    let unit = a.unit_map().column(0);
    let mut out = Vec::new();
    for s in spaces {
        if s.len() != 1 {
            return None;
        }
        let at_one = dot(&s[0], &unit);
        if at_one.is_zero() {
            return None;
        }
        let chi: Vector = s[0].iter().map(|v| v / &at_one).collect();
        let point = LinMap::new(a.carrier().clone(), VecObj::unit(), vec![chi.clone()]).expect("row");
        if !a.is_algebra_point(&point).ok()? {
            return None;
        }
        out.push(chi);
    }
    out.sort();
    Some(out)
}

/// The group of characters of a split commutative Hopf algebra under convolution
/// (χ·ψ = (χ⊗ψ)Δ). Returns None when the algebra is not split semisimple.
pub fn character_group(h: &HopfObj<Rat>) -> Option<FinGroupObj> {
    let chars = characters(&h.algebra())?;
    if chars.len() != h.dim() {
        return None;
    }
    let as_map = |v: &Vector| LinMap::new(h.carrier().clone(), VecObj::unit(), vec![v.clone()]).expect("row");
    let index = |m: &LinMap<Rat>| chars.iter().position(|c| *c == m.row(0));
    let maps: Vec<LinMap<Rat>> = chars.iter().map(as_map).collect();
    let mut table = Vec::new();
    for x in &maps {
        let mut row = Vec::new();
        for y in &maps {
            row.push(index(&tensor_map(x, y).compose(h.comul()).ok()?)?);
        }
        table.push(row);
    }
    let unit = index(h.counit())?;
    let inv: Vec<usize> = maps.iter().map(|x| index(&x.compose(h.antipode()).ok()?)).collect::<Option<_>>()?;
    FinGroupObj::from_table(&table, unit, &inv, None).ok()
}

/// Split commutative Hopf algebras are determined by their character groups, so two of
/// them are isomorphic exactly when those groups are.
pub fn hopf_isomorphic(a: &HopfObj<Rat>, b: &HopfObj<Rat>) -> Option<bool> {
    let (ga, gb) = (character_group(a)?, character_group(b)?);
    if ga.order() > SEARCH_LIMIT {
        return None;
    }
    Some(isomorphic_by_search(&ga, &gb).is_some())
}
