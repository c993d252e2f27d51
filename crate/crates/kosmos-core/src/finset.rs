//! Finite sets with the cartesian product as a strict tensor.
//!
//! An element pair `(i, j)` of `x ⊗ y` is stored at index `i·|y| + j`.

use std::collections::BTreeSet;

use crate::error::{KosmosError, Result};
use crate::morphism::{Difference, Morphism};
use crate::CoherenceKind;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinObj {
    size: usize,
    labels: Option<Vec<String>>,
}

impl FinObj {
    pub fn new(size: usize) -> Self {
        FinObj { size, labels: None }
    }

    /// The tensor unit κ.
    pub fn unit() -> Self {
        FinObj::new(1)
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(KosmosError::InvalidLabels("labels are not pairwise distinct".into()));
        }
        Ok(FinObj { size: labels.len(), labels: Some(labels) })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    fn is_bare_unit(&self) -> bool {
        self.size == 1 && self.labels.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinMap {
    dom: FinObj,
    cod: FinObj,
    table: Vec<usize>,
}

impl FinMap {
    pub fn new(dom: FinObj, cod: FinObj, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom.size {
            return Err(KosmosError::ShapeMismatch(format!(
                "table has length {}, domain has size {}",
                table.len(),
                dom.size
            )));
        }
        if let Some((index, &value)) = table.iter().enumerate().find(|(_, &v)| v >= cod.size) {
            return Err(KosmosError::IndexOutOfRange { index, value, size: cod.size });
        }
        Ok(FinMap { dom, cod, table })
    }

    pub fn from_fn(dom: &FinObj, cod: &FinObj, f: impl Fn(usize) -> usize) -> Result<Self> {
        let table = (0..dom.size).map(f).collect();
        FinMap::new(dom.clone(), cod.clone(), table)
    }

    pub fn identity(x: &FinObj) -> Self {
        FinMap { dom: x.clone(), cod: x.clone(), table: (0..x.size).collect() }
    }

    pub fn dom(&self) -> &FinObj {
        &self.dom
    }

    pub fn cod(&self) -> &FinObj {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.size];
        self.table.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.size];
        for &v in &self.table {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    /// Same table, relabelled domain and codomain.
    pub fn retyped(&self, dom: &FinObj, cod: &FinObj) -> Result<Self> {
        FinMap::new(dom.clone(), cod.clone(), self.table.clone())
    }
}

impl Morphism for FinMap {
    fn dom_len(&self) -> usize {
        self.dom.size
    }

    fn cod_len(&self) -> usize {
        self.cod.size
    }

    fn identity_like(&self, len: usize) -> Self {
        FinMap::identity(&FinObj::new(len))
    }

    fn compose(&self, other: &Self) -> Result<Self> {
        if other.cod.size != self.dom.size {
            return Err(KosmosError::ShapeMismatch(format!(
                "cannot compose: inner codomain {} vs outer domain {}",
                other.cod.size, self.dom.size
            )));
        }
        Ok(FinMap {
            dom: other.dom.clone(),
            cod: self.cod.clone(),
            table: other.table.iter().map(|&i| self.table[i]).collect(),
        })
    }

    fn tensor(&self, other: &Self) -> Self {
        tensor_map(self, other)
    }

    fn first_difference(&self, other: &Self) -> Result<Option<Difference>> {
        if self.dom.size != other.dom.size || self.cod.size != other.cod.size {
            return Err(KosmosError::ShapeMismatch(format!(
                "{}→{} vs {}→{}",
                self.dom.size, self.cod.size, other.dom.size, other.cod.size
            )));
        }
        Ok(self
            .table
            .iter()
            .zip(&other.table)
            .position(|(a, b)| a != b)
            .map(|index| Difference {
                index,
                lhs: self.table[index].to_string(),
                rhs: other.table[index].to_string(),
            }))
    }

    fn inverse(&self) -> Result<Self> {
        if self.dom.size != self.cod.size {
            return Err(KosmosError::NotBijective(format!(
                "domain size {} differs from codomain size {}",
                self.dom.size, self.cod.size
            )));
        }
        let mut inv = vec![usize::MAX; self.cod.size];
        for (i, &v) in self.table.iter().enumerate() {
            if inv[v] != usize::MAX {
                return Err(KosmosError::NotBijective(format!(
                    "elements {} and {} both map to {}",
                    inv[v], i, v
                )));
            }
            inv[v] = i;
        }
        Ok(FinMap { dom: self.cod.clone(), cod: self.dom.clone(), table: inv })
    }
}

pub fn tensor_obj(x: &FinObj, y: &FinObj) -> FinObj {
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
    FinObj { size: x.size * y.size, labels }
}

pub fn tensor_objs(xs: &[&FinObj]) -> FinObj {
    xs.iter().fold(FinObj::unit(), |acc, x| tensor_obj(&acc, x))
}

pub fn tensor_map(f: &FinMap, g: &FinMap) -> FinMap {
    let gd = g.dom.size;
    let gc = g.cod.size;
    let mut table = Vec::with_capacity(f.dom.size * gd);
    for &a in &f.table {
        for &b in &g.table {
            table.push(a * gc + b);
        }
    }
    FinMap { dom: tensor_obj(&f.dom, &g.dom), cod: tensor_obj(&f.cod, &g.cod), table }
}

/// s_{x,y}: x⊗y → y⊗x.
pub fn symmetry(x: &FinObj, y: &FinObj) -> FinMap {
    let (n, m) = (x.size, y.size);
    let mut table = Vec::with_capacity(n * m);
    for i in 0..n {
        for j in 0..m {
            table.push(j * n + i);
        }
    }
    FinMap { dom: tensor_obj(x, y), cod: tensor_obj(y, x), table }
}

/// Associator and unitors; identities under the strict encoding.
pub fn coherence(kind: CoherenceKind, objs: &[&FinObj]) -> FinMap {
    match kind {
        CoherenceKind::Assoc => FinMap::identity(&tensor_objs(objs)),
        CoherenceKind::LeftUnit | CoherenceKind::RightUnit => FinMap::identity(&tensor_objs(objs)),
    }
}

/// Δ_x: x → x⊗x.
pub fn diagonal(x: &FinObj) -> FinMap {
    let n = x.size;
    FinMap { dom: x.clone(), cod: tensor_obj(x, x), table: (0..n).map(|i| i * n + i).collect() }
}

/// e_x: x → κ.
pub fn terminal(x: &FinObj) -> FinMap {
    FinMap { dom: x.clone(), cod: FinObj::unit(), table: vec![0; x.size] }
}

/// The point κ → x picking out `i`.
pub fn point(x: &FinObj, i: usize) -> Result<FinMap> {
    FinMap::new(FinObj::unit(), x.clone(), vec![i])
}

/// Reflexive coequalizer of a parallel pair, with its defining data kept for factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeqResult {
    pub obj: FinObj,
    pub proj: FinMap,
    pub f: FinMap,
    pub g: FinMap,
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

pub fn reflexive_coequalizer(f: &FinMap, g: &FinMap, s: &FinMap) -> Result<CoeqResult> {
    if f.dom.size != g.dom.size || f.cod.size != g.cod.size {
        return Err(KosmosError::ShapeMismatch("coequalizer pair is not parallel".into()));
    }
    if s.dom.size != f.cod.size || s.cod.size != f.dom.size {
        return Err(KosmosError::ShapeMismatch("section has the wrong shape".into()));
    }
    for b in 0..f.cod.size {
        if f.table[s.table[b]] != b || g.table[s.table[b]] != b {
            return Err(KosmosError::SectionInvalid { index: b });
        }
    }
    let n = f.cod.size;
    let mut parent: Vec<usize> = (0..n).collect();
    for a in 0..f.dom.size {
        let (ra, rb) = (find(&mut parent, f.table[a]), find(&mut parent, g.table[a]));
        if ra != rb {
            // keep the smaller index as root so roots are minimal members
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            parent[hi] = lo;
        }
    }
    let mut class_of_root = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let mut table = Vec::with_capacity(n);
    for b in 0..n {
        let r = find(&mut parent, b);
        if class_of_root[r] == usize::MAX {
            class_of_root[r] = reps.len();
            reps.push(r);
        }
        table.push(class_of_root[r]);
    }
    let labels = reps.iter().map(|&r| f.cod.label(r)).collect();
    let obj = FinObj::with_labels(labels)?;
    let proj = FinMap { dom: f.cod.clone(), cod: obj.clone(), table };
    Ok(CoeqResult { obj, proj, f: f.clone(), g: g.clone() })
}

/// The unique `u` with `u ∘ proj = h`.
pub fn coeq_factor(res: &CoeqResult, h: &FinMap) -> Result<FinMap> {
    if h.dom.size != res.proj.dom.size {
        return Err(KosmosError::ShapeMismatch("map does not start at the coequalized object".into()));
    }
    if let Some(a) = (0..res.f.dom.size).find(|&a| h.table[res.f.table[a]] != h.table[res.g.table[a]]) {
        return Err(KosmosError::NotCoequalizing { index: a });
    }
    factor_through_epi(&res.proj, h)
}

/// The unique `u` with `u ∘ e = h`, for a surjection `e` along whose fibres `h` is constant.
pub fn factor_through_epi(e: &FinMap, h: &FinMap) -> Result<FinMap> {
    if e.dom.size != h.dom.size {
        return Err(KosmosError::ShapeMismatch("epi and map have different domains".into()));
    }
    let mut table = vec![usize::MAX; e.cod.size];
    for (a, &b) in e.table.iter().enumerate() {
        if table[b] == usize::MAX {
            table[b] = h.table[a];
        } else if table[b] != h.table[a] {
            return Err(KosmosError::NotCoequalizing { index: a });
        }
    }
    if let Some(b) = table.iter().position(|&v| v == usize::MAX) {
        return Err(KosmosError::NoFactorization(format!("element {b} is not in the image")));
    }
    Ok(FinMap { dom: e.cod.clone(), cod: h.cod.clone(), table })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn obj(n: usize) -> FinObj {
        FinObj::new(n)
    }

    #[test]
    fn pairing_is_row_major() {
        let t = tensor_obj(&obj(2), &obj(3));
        assert_eq!(t.size(), 6);
        let f = tensor_map(&point(&obj(2), 1).unwrap(), &point(&obj(3), 2).unwrap());
        assert_eq!(f.table(), &[5]);
    }

    #[test]
    fn unit_is_strict() {
        let x = FinObj::with_labels(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(tensor_obj(&x, &FinObj::unit()), x);
        assert_eq!(tensor_obj(&FinObj::unit(), &x), x);
    }

    #[test]
    fn associativity_is_strict() {
        let x = obj(2);
        let l = tensor_obj(&tensor_obj(&x, &x), &x);
        let r = tensor_obj(&x, &tensor_obj(&x, &x));
        assert_eq!(l, r);
        assert_eq!(l.size(), 8);
        let s = FinMap::new(obj(2), obj(2), vec![1, 0]).unwrap();
        let i = FinMap::identity(&x);
        assert_eq!(tensor_map(&tensor_map(&s, &i), &s), tensor_map(&s, &tensor_map(&i, &s)));
    }

    #[test]
    fn swap_tensor_identity() {
        let s = FinMap::new(obj(2), obj(2), vec![1, 0]).unwrap();
        let id = FinMap::identity(&obj(2));
        assert_eq!(tensor_map(&s, &id).table(), &[2, 3, 0, 1]);
        assert_eq!(tensor_map(&id, &id), FinMap::identity(&obj(4)));
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(symmetry(&obj(1), &obj(1)), FinMap::identity(&obj(1)));
        assert_eq!(symmetry(&obj(2), &obj(3)).table(), &[0, 2, 4, 1, 3, 5]);
        let back = symmetry(&obj(2), &obj(2)).compose(&symmetry(&obj(2), &obj(2))).unwrap();
        assert_eq!(back, FinMap::identity(&obj(4)));
    }

    #[test]
    fn coherence_is_identity() {
        let two = obj(2);
        assert_eq!(coherence(CoherenceKind::Assoc, &[&two, &two, &two]), FinMap::identity(&obj(8)));
        assert_eq!(coherence(CoherenceKind::LeftUnit, &[&obj(3)]), FinMap::identity(&obj(3)));
    }

    #[test]
    fn coequalizer_example() {
        let a = obj(4);
        let b = obj(3);
        let f = FinMap::new(a.clone(), b.clone(), vec![0, 1, 2, 0]).unwrap();
        let g = FinMap::new(a.clone(), b.clone(), vec![0, 1, 2, 1]).unwrap();
        let s = FinMap::new(b.clone(), a.clone(), vec![0, 1, 2]).unwrap();
        let res = reflexive_coequalizer(&f, &g, &s).unwrap();
        assert_eq!(res.obj.size(), 2);
        assert_eq!(res.proj.table(), &[0, 0, 1]);
        assert_eq!(res.obj.labels().unwrap(), &["0".to_string(), "2".to_string()]);
    }

    #[test]
    fn coequalizer_equal_pair_is_identity() {
        let f = FinMap::identity(&obj(3));
        let res = reflexive_coequalizer(&f, &f, &f).unwrap();
        assert_eq!(res.proj.table(), &[0, 1, 2]);
        assert_eq!(coeq_factor(&res, &res.proj).unwrap().table(), &[0, 1, 2]);
    }

    #[test]
    fn coequalizer_orbit_collapse() {
        let p = obj(2);
        let pp = tensor_obj(&p, &p);
        let mul = FinMap::new(pp.clone(), p.clone(), vec![0, 1, 1, 0]).unwrap();
        let pr2 = FinMap::new(pp.clone(), p.clone(), vec![0, 1, 0, 1]).unwrap();
        let s = FinMap::new(p.clone(), pp.clone(), vec![0, 1]).unwrap();
        let res = reflexive_coequalizer(&mul, &pr2, &s).unwrap();
        assert_eq!(res.obj.size(), 1);
        let u = coeq_factor(&res, &terminal(&p)).unwrap();
        assert_eq!(u, terminal(&res.obj).retyped(&res.obj, &FinObj::unit()).unwrap());
    }

    #[test]
    fn section_checked() {
        let f = FinMap::new(obj(2), obj(2), vec![0, 1]).unwrap();
        let g = FinMap::new(obj(2), obj(2), vec![1, 0]).unwrap();
        let s = FinMap::identity(&obj(2));
        assert_eq!(reflexive_coequalizer(&f, &g, &s), Err(KosmosError::SectionInvalid { index: 0 }));
    }

    #[test]
    fn factor_rejects_non_coequalizing() {
        let a = obj(4);
        let b = obj(3);
        let f = FinMap::new(a.clone(), b.clone(), vec![0, 1, 2, 0]).unwrap();
        let g = FinMap::new(a.clone(), b.clone(), vec![0, 1, 2, 1]).unwrap();
        let s = FinMap::new(b.clone(), a, vec![0, 1, 2]).unwrap();
        let res = reflexive_coequalizer(&f, &g, &s).unwrap();
        let h = FinMap::identity(&b);
        assert_eq!(coeq_factor(&res, &h), Err(KosmosError::NotCoequalizing { index: 3 }));
        let c = FinMap::new(b.clone(), obj(5), vec![4, 4, 4]).unwrap();
        assert_eq!(coeq_factor(&res, &c).unwrap().table(), &[4, 4]);
    }

    #[test]
    fn compose_examples() {
        let s = FinMap::new(obj(2), obj(2), vec![1, 0]).unwrap();
        assert_eq!(s.compose(&s).unwrap(), FinMap::identity(&obj(2)));
        assert_eq!(FinMap::identity(&obj(2)).compose(&s).unwrap(), s);
        let bad = FinMap::identity(&obj(3));
        assert!(matches!(s.compose(&bad), Err(KosmosError::ShapeMismatch(_))));
    }

    #[test]
    fn inverse_reports_collision() {
        let f = FinMap::new(obj(2), obj(2), vec![1, 1]).unwrap();
        assert!(matches!(f.inverse(), Err(KosmosError::NotBijective(_))));
    }
}
