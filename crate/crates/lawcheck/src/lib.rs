//! Exact equation checking between materialized composite morphisms.

use kosmos_core::{KosmosError, Morphism};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Smallest failing domain element or standard basis vector.
    pub index: usize,
    /// `index` split along the tensor factors of the domain, when those are known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<usize>>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub anchor: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Report {
    /// A check that is not an equation between morphisms (a count, an iso certificate, ...).
    pub fn assertion(name: &str, anchor: &str, passed: bool, detail: Option<String>) -> Self {
        Report { name: name.into(), anchor: anchor.into(), passed, witness: None, detail }
    }
}

#[derive(Debug, Clone)]
pub struct Equation<M> {
    pub name: String,
    pub anchor: String,
    pub lhs: M,
    pub rhs: M,
    pub factors: Option<Vec<usize>>,
}

impl<M: Morphism> Equation<M> {
    pub fn new(name: &str, anchor: &str, lhs: M, rhs: M) -> Self {
        Equation { name: name.into(), anchor: anchor.into(), lhs, rhs, factors: None }
    }

    /// Sizes of the domain's tensor factors, used to split witnesses into coordinates.
    pub fn with_factors(mut self, factors: Vec<usize>) -> Self {
        self.factors = Some(factors);
        self
    }
}

fn split_index(mut index: usize, factors: &[usize]) -> Vec<usize> {
    let mut coords = vec![0; factors.len()];
    for (k, &n) in factors.iter().enumerate().rev() {
        if n > 0 {
            coords[k] = index % n;
            index /= n;
        }
    }
    coords
}

pub fn check_equation<M: Morphism>(eq: &Equation<M>) -> Result<Report, KosmosError> {
    if eq.lhs.dom_len() != eq.rhs.dom_len() || eq.lhs.cod_len() != eq.rhs.cod_len() {
        return Err(KosmosError::ShapeMismatch(format!(
            "equation {}: {}→{} vs {}→{}",
            eq.name,
            eq.lhs.dom_len(),
            eq.lhs.cod_len(),
            eq.rhs.dom_len(),
            eq.rhs.cod_len()
        )));
    }
    let witness = eq.lhs.first_difference(&eq.rhs)?.map(|d| Witness {
        index: d.index,
        coords: eq.factors.as_ref().map(|f| split_index(d.index, f)),
        lhs: d.lhs,
        rhs: d.rhs,
    });
    Ok(Report {
        name: eq.name.clone(),
        anchor: eq.anchor.clone(),
        passed: witness.is_none(),
        witness,
        detail: None,
    })
}

/// The inverse of `f`, verified on both sides.
pub fn certify_iso<M: Morphism>(f: &M) -> Result<M, KosmosError> {
    let inv = f.inverse()?;
    let left = inv.compose(f)?;
    let right = f.compose(&inv)?;
    if !left.equals(&f.identity_like(f.dom_len()))? || !right.equals(&f.identity_like(f.cod_len()))? {
        return Err(KosmosError::NotBijective("computed inverse failed verification".into()));
    }
    Ok(inv)
}

/// Accumulates reports under one anchor.
#[derive(Debug, Clone, Default)]
pub struct Checklist {
    anchor: String,
    reports: Vec<Report>,
}

impl Checklist {
    pub fn new(anchor: &str) -> Self {
        Checklist { anchor: anchor.into(), reports: Vec::new() }
    }

    pub fn anchor(&self) -> &str {
        &self.anchor
    }

    pub fn equation<M: Morphism>(&mut self, name: &str, lhs: &M, rhs: &M) -> Result<bool, KosmosError> {
        self.record(Equation::new(name, &self.anchor, lhs.clone(), rhs.clone()))
    }

    pub fn equation_split<M: Morphism>(
        &mut self,
        name: &str,
        lhs: &M,
        rhs: &M,
        factors: &[usize],
    ) -> Result<bool, KosmosError> {
        let eq = Equation::new(name, &self.anchor, lhs.clone(), rhs.clone()).with_factors(factors.to_vec());
        self.record(eq)
    }

    pub fn record<M: Morphism>(&mut self, eq: Equation<M>) -> Result<bool, KosmosError> {
        let r = check_equation(&eq)?;
        let passed = r.passed;
        self.reports.push(r);
        Ok(passed)
    }

    /// Certifies `f` as an isomorphism, recording the outcome; returns the inverse if any.
    pub fn iso<M: Morphism>(&mut self, name: &str, f: &M) -> Option<M> {
        match certify_iso(f) {
            Ok(inv) => {
                self.reports.push(Report::assertion(name, &self.anchor, true, None));
                Some(inv)
            }
            Err(e) => {
                self.reports.push(Report::assertion(name, &self.anchor, false, Some(e.to_string())));
                None
            }
        }
    }

    pub fn assert(&mut self, name: &str, passed: bool, detail: Option<String>) -> bool {
        self.reports.push(Report::assertion(name, &self.anchor, passed, detail));
        passed
    }

    pub fn push(&mut self, report: Report) {
        self.reports.push(report);
    }

    pub fn extend(&mut self, other: Checklist) {
        self.reports.extend(other.reports);
    }

    pub fn reports(&self) -> &[Report] {
        &self.reports
    }

    pub fn into_reports(self) -> Vec<Report> {
        self.reports
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> Vec<&Report> {
        self.reports.iter().filter(|r| !r.passed).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use kosmos_core::finset::{tensor_map, FinMap, FinObj};
    use kosmos_core::{rat, LinMap, VecObj};

    #[test]
    fn identical_sides_pass() {
        let id = FinMap::identity(&FinObj::new(3));
        let r = check_equation(&Equation::new("id", "t", id.clone(), id)).unwrap();
        assert!(r.passed);
        assert!(r.witness.is_none());
    }

    #[test]
    fn witness_is_first_failure() {
        let a = FinMap::new(FinObj::new(2), FinObj::new(2), vec![0, 1]).unwrap();
        let b = FinMap::new(FinObj::new(2), FinObj::new(2), vec![1, 0]).unwrap();
        let r = check_equation(&Equation::new("swap", "t", a, b)).unwrap();
        assert!(!r.passed);
        let w = r.witness.unwrap();
        assert_eq!((w.index, w.lhs.as_str(), w.rhs.as_str()), (0, "0", "1"));
    }

    #[test]
    fn z3_associativity_matches_exhaustive_triples() {
        let n = 3;
        let p = FinObj::new(n);
        let pp = FinObj::new(n * n);
        let mul = FinMap::from_fn(&pp, &p, |k| (k / n + k % n) % n).unwrap();
        let id = FinMap::identity(&p);
        let lhs = mul.compose(&tensor_map(&mul, &id)).unwrap();
        let rhs = mul.compose(&tensor_map(&id, &mul)).unwrap();
        let r = check_equation(&Equation::new("assoc", "t", lhs, rhs)).unwrap();
        let oracle = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| ((a + b) % n + c) % n == (a + (b + c) % n) % n)));
        assert_eq!(r.passed, oracle);
        assert!(r.passed);
    }

    #[test]
    fn coords_split_row_major() {
        let dom = FinObj::new(8);
        let b = FinMap::new(dom.clone(), FinObj::new(2), vec![0; 8]).unwrap();
        let mut t = vec![0; 8];
        t[5] = 1;
        let c = FinMap::new(dom, FinObj::new(2), t).unwrap();
        let r = check_equation(&Equation::new("x", "t", b, c).with_factors(vec![2, 2, 2])).unwrap();
        assert_eq!(r.witness.unwrap().coords, Some(vec![1, 0, 1]));
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = FinMap::identity(&FinObj::new(2));
        let b = FinMap::identity(&FinObj::new(3));
        assert!(matches!(check_equation(&Equation::new("x", "t", a, b)), Err(KosmosError::ShapeMismatch(_))));
    }

    #[test]
    fn certify_examples() {
        let id = FinMap::identity(&FinObj::new(2));
        assert_eq!(certify_iso(&id).unwrap(), id);
        let s = FinMap::new(FinObj::new(2), FinObj::new(2), vec![1, 0]).unwrap();
        assert_eq!(certify_iso(&s).unwrap(), s);
        let m = LinMap::new(VecObj::new(2), VecObj::new(2), vec![vec![rat(1), rat(1)], vec![rat(0), rat(1)]]).unwrap();
        let inv = LinMap::new(VecObj::new(2), VecObj::new(2), vec![vec![rat(1), rat(-1)], vec![rat(0), rat(1)]]).unwrap();
        assert_eq!(certify_iso(&m).unwrap(), inv);
        let bad = FinMap::new(FinObj::new(2), FinObj::new(2), vec![0, 0]).unwrap();
        assert!(matches!(certify_iso(&bad), Err(KosmosError::NotBijective(_))));
    }

    #[test]
    fn symmetric_in_sides() {
        let a = FinMap::new(FinObj::new(3), FinObj::new(3), vec![0, 2, 1]).unwrap();
        let b = FinMap::new(FinObj::new(3), FinObj::new(3), vec![0, 1, 2]).unwrap();
        let r1 = check_equation(&Equation::new("x", "t", a.clone(), b.clone())).unwrap();
        let r2 = check_equation(&Equation::new("x", "t", b, a)).unwrap();
        assert_eq!(r1.passed, r2.passed);
        let (w1, w2) = (r1.witness.unwrap(), r2.witness.unwrap());
        assert_eq!((w1.index, &w1.lhs, &w1.rhs), (w2.index, &w2.rhs, &w2.lhs));
    }
}
