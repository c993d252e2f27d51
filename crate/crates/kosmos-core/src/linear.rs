//! Finite-dimensional vector spaces over an exact field, with the Kronecker product as a
//! strict tensor. Basis vector `(i, j)` of `x ⊗ y` sits at index `i·dim y + j`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::Num;

use crate::error::{KosmosError, Result};
use crate::morphism::{Difference, Morphism};
use crate::CoherenceKind;

/// A field with exact equality.
pub trait Scalar: Num + Neg<Output = Self> + Clone + PartialEq + Debug + Display + Send + Sync {}

impl<T> Scalar for T where T: Num + Neg<Output = T> + Clone + PartialEq + Debug + Display + Send + Sync {}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VecObj {
    dim: usize,
    labels: Option<Vec<String>>,
}

impl VecObj {
    pub fn new(dim: usize) -> Self {
        VecObj { dim, labels: None }
    }

    pub fn unit() -> Self {
        VecObj::new(1)
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(KosmosError::InvalidLabels("labels are not pairwise distinct".into()));
        }
        Ok(VecObj { dim: labels.len(), labels: Some(labels) })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    fn is_bare_unit(&self) -> bool {
        self.dim == 1 && self.labels.is_none()
    }
}

/// A linear map stored as a `cod.dim × dom.dim` matrix, row by row, keeping only the
/// nonzero entries of each row in increasing column order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinMap<F> {
    dom: VecObj,
    cod: VecObj,
    rows: Vec<Vec<(usize, F)>>,
}

impl<F: Scalar> LinMap<F> {
    pub fn new(dom: VecObj, cod: VecObj, rows: Vec<Vec<F>>) -> Result<Self> {
        if rows.len() != cod.dim || rows.iter().any(|r| r.len() != dom.dim) {
            return Err(KosmosError::ShapeMismatch(format!(
                "expected a {}x{} matrix",
                cod.dim, dom.dim
            )));
        }
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Ok(LinMap { dom, cod, rows })
    }

    pub fn from_fn(dom: &VecObj, cod: &VecObj, f: impl Fn(usize, usize) -> F) -> Self {
        let rows = (0..cod.dim)
            .map(|r| (0..dom.dim).map(|c| (c, f(r, c))).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        LinMap { dom: dom.clone(), cod: cod.clone(), rows }
    }

    /// Builds a map from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_entries(
        dom: &VecObj,
        cod: &VecObj,
        entries: impl IntoIterator<Item = (usize, usize, F)>,
    ) -> Result<Self> {
        let mut acc: Vec<BTreeMap<usize, F>> = vec![BTreeMap::new(); cod.dim];
        for (r, c, v) in entries {
            if r >= cod.dim || c >= dom.dim {
                return Err(KosmosError::ShapeMismatch(format!(
                    "entry ({r}, {c}) outside a {}x{} matrix",
                    cod.dim, dom.dim
                )));
            }
            let slot = acc[r].entry(c).or_insert_with(F::zero);
            *slot = slot.clone() + v;
        }
        Ok(LinMap { dom: dom.clone(), cod: cod.clone(), rows: finish_rows(acc) })
    }

    pub fn identity(x: &VecObj) -> Self {
        LinMap { dom: x.clone(), cod: x.clone(), rows: (0..x.dim).map(|i| vec![(i, F::one())]).collect() }
    }

    pub fn zero(dom: &VecObj, cod: &VecObj) -> Self {
        LinMap { dom: dom.clone(), cod: cod.clone(), rows: vec![Vec::new(); cod.dim] }
    }

    /// The permutation matrix sending basis vector `c` to `table[c]`.
    pub fn permutation(dom: &VecObj, cod: &VecObj, table: &[usize]) -> Self {
        let mut rows = vec![Vec::new(); cod.dim];
        for (c, &r) in table.iter().enumerate() {
            rows[r].push((c, F::one()));
        }
        LinMap { dom: dom.clone(), cod: cod.clone(), rows }
    }

    pub fn dom(&self) -> &VecObj {
        &self.dom
    }

    pub fn cod(&self) -> &VecObj {
        &self.cod
    }

    pub fn rows(&self) -> usize {
        self.cod.dim
    }

    pub fn cols(&self) -> usize {
        self.dom.dim
    }

    pub fn get(&self, r: usize, c: usize) -> F {
        let row = &self.rows[r];
        match row.binary_search_by_key(&c, |(k, _)| *k) {
            Ok(i) => row[i].1.clone(),
            Err(_) => F::zero(),
        }
    }

    /// Nonzero entries of row `r` as `(column, value)`.
    pub fn sparse_row(&self, r: usize) -> &[(usize, F)] {
        &self.rows[r]
    }

    pub fn row(&self, r: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.cols()];
        for (c, v) in &self.rows[r] {
            out[*c] = v.clone();
        }
        out
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows()).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows()).map(|r| self.row(r)).collect()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Image of a coordinate vector.
    pub fn apply_vec(&self, v: &[F]) -> Vec<F> {
        self.rows
            .iter()
            .map(|row| {
                row.iter().fold(F::zero(), |acc, (c, a)| {
                    if v[*c].is_zero() {
                        acc
                    } else {
                        acc + a.clone() * v[*c].clone()
                    }
                })
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![Vec::new(); self.cols()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                rows[*c].push((r, v.clone()));
            }
        }
        LinMap { dom: self.cod.clone(), cod: self.dom.clone(), rows }
    }

    pub fn retyped(&self, dom: &VecObj, cod: &VecObj) -> Result<Self> {
        if dom.dim != self.dom.dim || cod.dim != self.cod.dim {
            return Err(KosmosError::ShapeMismatch("retyping changes dimensions".into()));
        }
        Ok(LinMap { dom: dom.clone(), cod: cod.clone(), rows: self.rows.clone() })
    }

    fn zip_with(&self, other: &Self, op: impl Fn(F, F) -> F) -> Result<Self> {
        self.same_shape(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut m: BTreeMap<usize, (F, F)> = BTreeMap::new();
                for (c, v) in a {
                    m.entry(*c).or_insert_with(|| (F::zero(), F::zero())).0 = v.clone();
                }
                for (c, v) in b {
                    m.entry(*c).or_insert_with(|| (F::zero(), F::zero())).1 = v.clone();
                }
                m.into_iter().map(|(c, (x, y))| (c, op(x, y))).filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Ok(LinMap { dom: self.dom.clone(), cod: self.cod.clone(), rows })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn scale(&self, k: &F) -> Self {
        if k.is_zero() {
            return LinMap::zero(&self.dom, &self.cod);
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, v.clone() * k.clone())).collect())
            .collect();
        LinMap { dom: self.dom.clone(), cod: self.cod.clone(), rows }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.dom.dim != other.dom.dim || self.cod.dim != other.cod.dim {
            return Err(KosmosError::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows(),
                self.cols(),
                other.rows(),
                other.cols()
            )));
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        sparse_rref(self.rows.iter().cloned()).len()
    }

    /// Basis of the kernel, one column per basis vector, in reduced column-echelon form.
    pub fn kernel(&self) -> LinMap<F> {
        let n = self.cols();
        let red = sparse_rref(self.rows.iter().cloned());
        let free: Vec<usize> = (0..n).filter(|c| !red.contains_key(c)).collect();
        let slot: BTreeMap<usize, usize> = free.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut basis: Vec<SparseRow<F>> = free.iter().map(|&c| vec![(c, F::one())]).collect();
        for (&pc, row) in &red {
            for (j, v) in row.iter().skip(1) {
                basis[slot[j]].push((pc, -v.clone()));
            }
        }
        for v in basis.iter_mut() {
            v.sort_by_key(|e| e.0);
        }
        echelon_columns(&VecObj::new(n), basis)
    }

    /// The unique `u` with `self ∘ u = h`, for injective `self`.
    pub fn solve_left(&self, h: &LinMap<F>) -> Result<LinMap<F>> {
        if h.rows() != self.rows() {
            return Err(KosmosError::ShapeMismatch("solve: row counts differ".into()));
        }
        let n = self.cols();
        let red = sparse_rref(augmented(&self.rows, &h.rows, n));
        if red.range(..n).count() != n {
            return Err(KosmosError::NoFactorization("left factor is not injective".into()));
        }
        if let Some(&p) = red.range(n..).next().map(|(p, _)| p) {
            return Err(KosmosError::NoFactorization(format!("column {} is not in the image", p - n)));
        }
        Ok(LinMap { dom: h.dom.clone(), cod: self.dom.clone(), rows: right_block(&red, n) })
    }
}

type SparseRow<F> = Vec<(usize, F)>;

/// Rows of `[a | b]`, with `b` shifted right by `n` columns.
fn augmented<F: Scalar>(a: &[SparseRow<F>], b: &[SparseRow<F>], n: usize) -> Vec<SparseRow<F>> {
    a.iter().zip(b).map(|(x, y)| x.iter().cloned().chain(y.iter().map(|(c, v)| (c + n, v.clone()))).collect()).collect()
}

/// The part right of column `n` of the pivot rows for columns `0..n`.
fn right_block<F: Scalar>(red: &BTreeMap<usize, SparseRow<F>>, n: usize) -> Vec<SparseRow<F>> {
    red.range(..n).map(|(_, row)| row.iter().filter(|(c, _)| *c >= n).map(|(c, v)| (c - n, v.clone())).collect()).collect()
}

/// `a − k·b` for rows sorted by column.
fn sub_scaled<F: Scalar>(a: &[(usize, F)], k: &F, b: &[(usize, F)]) -> SparseRow<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (Some((ca, va)), Some((cb, vb))) if ca == cb => {
                let v = va.clone() - k.clone() * vb.clone();
                if !v.is_zero() {
                    out.push((*ca, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ca, va)), Some((cb, _))) if ca < cb => {
                out.push((*ca, va.clone()));
                i += 1;
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                i += 1;
            }
            (_, Some((cb, vb))) => {
                out.push((*cb, -(k.clone() * vb.clone())));
                j += 1;
            }
            (None, None) => return out,
        }
    }
}

/// Sparse Gauss–Jordan elimination. Pivot rows are keyed by their leading column, scaled
/// to leading entry 1, and vanish in every other pivot column.
pub fn sparse_rref<F: Scalar>(rows: impl IntoIterator<Item = Vec<(usize, F)>>) -> BTreeMap<usize, Vec<(usize, F)>> {
    let mut piv: BTreeMap<usize, SparseRow<F>> = BTreeMap::new();
    for mut v in rows {
        while let Some((c, a)) = v.first().cloned() {
            if let Some(p) = piv.get(&c) {
                v = sub_scaled(&v, &a, p);
                continue;
            }
            let inv = F::one() / a;
            for e in v.iter_mut() {
                e.1 = e.1.clone() * inv.clone();
            }
            piv.insert(c, v);
            break;
        }
    }
    let cols: Vec<usize> = piv.keys().rev().copied().collect();
    for c in cols {
        let p = piv[&c].clone();
        for (_, row) in piv.range_mut(..c) {
            if let Ok(i) = row.binary_search_by_key(&c, |e| e.0) {
                let k = row[i].1.clone();
                *row = sub_scaled(row, &k, &p);
            }
        }
    }
    piv
}

fn echelon_columns<F: Scalar>(ambient: &VecObj, columns: Vec<SparseRow<F>>) -> LinMap<F> {
    let red = sparse_rref(columns);
    let mut rows: Vec<SparseRow<F>> = vec![Vec::new(); ambient.dim];
    for (i, col) in red.values().enumerate() {
        for (r, v) in col {
            rows[*r].push((i, v.clone()));
        }
    }
    LinMap { dom: VecObj::new(red.len()), cod: ambient.clone(), rows }
}

fn finish_rows<F: Scalar>(acc: Vec<BTreeMap<usize, F>>) -> Vec<Vec<(usize, F)>> {
    acc.into_iter().map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect()).collect()
}

/// Columns spanning the same subspace, in reduced column-echelon form.
pub fn column_echelon<F: Scalar>(ambient: &VecObj, columns: Vec<Vec<F>>) -> LinMap<F> {
    let sparse = columns
        .into_iter()
        .map(|c| c.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect())
        .collect();
    echelon_columns(ambient, sparse)
}

impl<F: Scalar> Morphism for LinMap<F> {
    fn dom_len(&self) -> usize {
        self.dom.dim
    }

    fn cod_len(&self) -> usize {
        self.cod.dim
    }

    fn identity_like(&self, len: usize) -> Self {
        LinMap::identity(&VecObj::new(len))
    }

    fn compose(&self, other: &Self) -> Result<Self> {
        if other.cod.dim != self.dom.dim {
            return Err(KosmosError::ShapeMismatch(format!(
                "cannot compose: inner codomain {} vs outer domain {}",
                other.cod.dim, self.dom.dim
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                if let [(l, a)] = row.as_slice() {
                    if a.is_one() {
                        return other.rows[*l].clone();
                    }
                }
                let mut acc: BTreeMap<usize, F> = BTreeMap::new();
                for (l, a) in row {
                    for (j, b) in &other.rows[*l] {
                        let slot = acc.entry(*j).or_insert_with(F::zero);
                        *slot = slot.clone() + a.clone() * b.clone();
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Ok(LinMap { dom: other.dom.clone(), cod: self.cod.clone(), rows })
    }

    fn tensor(&self, other: &Self) -> Self {
        tensor_map(self, other)
    }

    fn first_difference(&self, other: &Self) -> Result<Option<Difference>> {
        self.same_shape(other)?;
        let mut first: Option<usize> = None;
        for (a, b) in self.rows.iter().zip(&other.rows) {
            if a == b {
                continue;
            }
            let col = a
                .iter()
                .zip(b.iter())
                .find(|(x, y)| x != y)
                .map(|((ca, _), (cb, _))| *ca.min(cb))
                .unwrap_or_else(|| {
                    let k = a.len().min(b.len());
                    a.get(k).or(b.get(k)).expect("rows differ").0
                });
            first = Some(first.map_or(col, |f| f.min(col)));
        }
        let show = |m: &LinMap<F>, c: usize| {
            let col: Vec<String> = m.column(c).iter().map(|v| v.to_string()).collect();
            format!("[{}]", col.join(", "))
        };
        Ok(first.map(|index| Difference { index, lhs: show(self, index), rhs: show(other, index) }))
    }

    fn inverse(&self) -> Result<Self> {
        let n = self.rows();
        if n != self.cols() {
            return Err(KosmosError::NotInvertible { rank: self.rank(), rows: n, cols: self.cols() });
        }
        let ident: Vec<SparseRow<F>> = (0..n).map(|r| vec![(r, F::one())]).collect();
        let red = sparse_rref(augmented(&self.rows, &ident, n));
        let rank = red.range(..n).count();
        if rank != n {
            return Err(KosmosError::NotInvertible { rank, rows: n, cols: n });
        }
        Ok(LinMap { dom: self.cod.clone(), cod: self.dom.clone(), rows: right_block(&red, n) })
    }
}

pub fn tensor_obj(x: &VecObj, y: &VecObj) -> VecObj {
    if y.is_bare_unit() {
        return x.clone();
    }
    if x.is_bare_unit() {
        return y.clone();
    }
    let labels = match (&x.labels, &y.labels) {
        (Some(a), Some(b)) => {
            let joined: Vec<String> =
                a.iter().flat_map(|s| b.iter().map(move |t| format!("{s}.{t}"))).collect();
            let distinct: BTreeSet<&String> = joined.iter().collect();
            (distinct.len() == joined.len()).then_some(joined)
        }
        _ => None,
    };
    VecObj { dim: x.dim * y.dim, labels }
}

pub fn tensor_objs(xs: &[&VecObj]) -> VecObj {
    xs.iter().fold(VecObj::unit(), |acc, x| tensor_obj(&acc, x))
}

/// Kronecker product.
pub fn tensor_map<F: Scalar>(f: &LinMap<F>, g: &LinMap<F>) -> LinMap<F> {
    let gc = g.cols();
    let mut rows = Vec::with_capacity(f.rows() * g.rows());
    for fr in &f.rows {
        for gr in &g.rows {
            let mut row = Vec::with_capacity(fr.len() * gr.len());
            for (c1, a) in fr {
                for (c2, b) in gr {
                    row.push((c1 * gc + c2, a.clone() * b.clone()));
                }
            }
            rows.push(row);
        }
    }
    LinMap { dom: tensor_obj(&f.dom, &g.dom), cod: tensor_obj(&f.cod, &g.cod), rows }
}

/// s_{x,y}: x⊗y → y⊗x as a permutation matrix.
pub fn symmetry<F: Scalar>(x: &VecObj, y: &VecObj) -> LinMap<F> {
    let (n, m) = (x.dim, y.dim);
    let table: Vec<usize> = (0..n * m).map(|k| (k % m) * n + k / m).collect();
    LinMap::permutation(&tensor_obj(x, y), &tensor_obj(y, x), &table)
}

pub fn coherence<F: Scalar>(kind: CoherenceKind, objs: &[&VecObj]) -> LinMap<F> {
    match kind {
        CoherenceKind::Assoc | CoherenceKind::LeftUnit | CoherenceKind::RightUnit => {
            LinMap::identity(&tensor_objs(objs))
        }
    }
}

/// Coreflexive equalizer of a parallel pair, with its defining data kept for factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqResult<F> {
    pub obj: VecObj,
    pub incl: LinMap<F>,
    pub f: LinMap<F>,
    pub g: LinMap<F>,
}

pub fn coreflexive_equalizer<F: Scalar>(
    f: &LinMap<F>,
    g: &LinMap<F>,
    r: &LinMap<F>,
) -> Result<EqResult<F>> {
    f.same_shape(g)?;
    if r.cols() != f.rows() || r.rows() != f.cols() {
        return Err(KosmosError::ShapeMismatch("retraction has the wrong shape".into()));
    }
    let id = LinMap::identity(&f.dom);
    for cand in [r.compose(f)?, r.compose(g)?] {
        if let Some(d) = cand.first_difference(&id)? {
            return Err(KosmosError::RetractionInvalid { index: d.index });
        }
    }
    let incl = f.sub(g)?.kernel().retyped_cod(&f.dom);
    Ok(EqResult { obj: incl.dom.clone(), incl, f: f.clone(), g: g.clone() })
}

impl<F: Scalar> LinMap<F> {
    fn retyped_cod(self, cod: &VecObj) -> Self {
        LinMap { cod: cod.clone(), ..self }
    }
}

/// The unique `u` with `incl ∘ u = h`.
pub fn eq_factor<F: Scalar>(res: &EqResult<F>, h: &LinMap<F>) -> Result<LinMap<F>> {
    if h.rows() != res.incl.rows() {
        return Err(KosmosError::ShapeMismatch("map does not land in the ambient space".into()));
    }
    if let Some(d) = res.f.compose(h)?.first_difference(&res.g.compose(h)?)? {
        return Err(KosmosError::NotEqualizing { index: d.index });
    }
    factor_through_mono(&res.incl, h)
}

/// The unique `u` with `m ∘ u = h`, for injective `m` whose image contains that of `h`.
pub fn factor_through_mono<F: Scalar>(m: &LinMap<F>, h: &LinMap<F>) -> Result<LinMap<F>> {
    let u = m.solve_left(h)?;
    Ok(LinMap { cod: m.dom.clone(), ..u })
}

/// The unique `u` with `u ∘ e = h`, for surjective `e` whose kernel `h` kills.
pub fn factor_through_epi<F: Scalar>(e: &LinMap<F>, h: &LinMap<F>) -> Result<LinMap<F>> {
    let ut = e.transpose().solve_left(&h.transpose())?;
    Ok(LinMap { dom: e.cod.clone(), cod: h.cod.clone(), rows: ut.transpose().rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn qf(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn mat(rows: &[&[i64]]) -> LinMap<Q> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        LinMap::new(
            VecObj::new(c),
            VecObj::new(r),
            rows.iter().map(|row| row.iter().map(|&v| q(v)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn kronecker_of_scalars() {
        assert_eq!(tensor_map(&mat(&[&[2]]), &mat(&[&[3]])), mat(&[&[6]]));
    }

    #[test]
    fn kronecker_matches_pairing() {
        let f = mat(&[&[1, 2], &[3, 4]]);
        let g = mat(&[&[0, 1], &[1, 0]]);
        let k = tensor_map(&f, &g);
        for (r1, c1, r2, c2) in (0..16).map(|t| (t / 8, (t / 4) % 2, (t / 2) % 2, t % 2)) {
            assert_eq!(k.get(r1 * 2 + r2, c1 * 2 + c2), f.get(r1, c1) * g.get(r2, c2));
        }
    }

    #[test]
    fn symmetry_involution() {
        let x = VecObj::new(2);
        let y = VecObj::new(3);
        let s: LinMap<Q> = symmetry(&x, &y);
        let t: LinMap<Q> = symmetry(&y, &x);
        assert_eq!(t.compose(&s).unwrap(), LinMap::identity(&VecObj::new(6)));
        assert_eq!(s.column(1), vec![q(0), q(0), q(1), q(0), q(0), q(0)]);
    }

    #[test]
    fn right_unit_is_identity_matrix() {
        let c: LinMap<Q> = coherence(CoherenceKind::RightUnit, &[&VecObj::new(4)]);
        assert_eq!(c, LinMap::identity(&VecObj::new(4)));
    }

    #[test]
    fn exact_cancellation() {
        let a = LinMap::new(VecObj::new(1), VecObj::new(1), vec![vec![qf(1, 2)]]).unwrap();
        assert_eq!(a.compose(&mat(&[&[2]])).unwrap(), mat(&[&[1]]));
    }

    #[test]
    fn equalizer_example() {
        let f = mat(&[&[1, 0], &[0, 1], &[0, 0]]);
        let g = mat(&[&[1, 0], &[0, 1], &[1, 1]]);
        let r = mat(&[&[1, 0, 0], &[0, 1, 0]]);
        let res = coreflexive_equalizer(&f, &g, &r).unwrap();
        assert_eq!(res.obj.dim(), 1);
        assert_eq!(res.incl.to_rows(), vec![vec![q(1)], vec![q(-1)]]);
        let h = mat(&[&[2], &[-2]]);
        assert_eq!(eq_factor(&res, &h).unwrap().to_rows(), vec![vec![q(2)]]);
        assert_eq!(eq_factor(&res, &res.incl).unwrap(), LinMap::identity(&res.obj));
        let z = mat(&[&[0], &[0]]);
        assert!(eq_factor(&res, &z).unwrap().is_zero());
        let bad = mat(&[&[1], &[0]]);
        assert_eq!(eq_factor(&res, &bad), Err(KosmosError::NotEqualizing { index: 0 }));
    }

    #[test]
    fn equalizer_of_equal_pair() {
        let f = mat(&[&[1, 0], &[0, 1]]);
        let res = coreflexive_equalizer(&f, &f, &f).unwrap();
        assert_eq!(res.incl, LinMap::identity(&VecObj::new(2)));
    }

    #[test]
    fn equalizer_of_zero_space() {
        let z: LinMap<Q> = LinMap::zero(&VecObj::new(0), &VecObj::new(0));
        let res = coreflexive_equalizer(&z, &z, &z).unwrap();
        assert_eq!(res.obj.dim(), 0);
    }

    #[test]
    fn retraction_checked() {
        let f = mat(&[&[1, 0], &[0, 1]]);
        let g = mat(&[&[1, 1], &[0, 1]]);
        assert_eq!(
            coreflexive_equalizer(&f, &g, &f),
            Err(KosmosError::RetractionInvalid { index: 1 })
        );
    }

    #[test]
    fn inverse_by_gauss_jordan() {
        assert_eq!(mat(&[&[1, 1], &[0, 1]]).inverse().unwrap(), mat(&[&[1, -1], &[0, 1]]));
        assert_eq!(
            mat(&[&[1, 2], &[2, 4]]).inverse(),
            Err(KosmosError::NotInvertible { rank: 1, rows: 2, cols: 2 })
        );
    }

    #[test]
    fn kernel_is_column_echelon() {
        let k = mat(&[&[1, 1, 1]]).kernel();
        assert_eq!(k.to_rows(), vec![vec![q(1), q(0)], vec![q(0), q(1)], vec![q(-1), q(-1)]]);
    }

    #[test]
    fn epi_factor() {
        let e = mat(&[&[1, 1, 0], &[0, 0, 1]]);
        let h = mat(&[&[2, 2, 5]]);
        assert_eq!(factor_through_epi(&e, &h).unwrap(), mat(&[&[2, 5]]));
        assert!(factor_through_epi(&e, &mat(&[&[1, 2, 0]])).is_err());
    }
}
