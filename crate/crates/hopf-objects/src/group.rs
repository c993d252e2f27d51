use kosmos_core::finset::{diagonal, point, tensor_map, terminal, FinMap, FinObj};
use kosmos_core::{compose_all, tensor_all, Morphism};
use lawcheck::Checklist;

use crate::HopfError;

/// A finite group, read as a group object whose comonoid part is the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinGroupObj {
    carrier: FinObj,
    mul: FinMap,
    unit: usize,
    inv: FinMap,
}

impl FinGroupObj {
    /// Checks every group-object axiom and returns the object, or all failed equations.
    pub fn validate(carrier: FinObj, mul: FinMap, unit: usize, inv: FinMap) -> Result<Self, HopfError> {
        let n = carrier.size();
        if n == 0 {
            return Err(HopfError::EmptyCarrier);
        }
        if mul.dom_len() != n * n || mul.cod_len() != n || inv.dom_len() != n || inv.cod_len() != n {
            return Err(HopfError::Kosmos(kosmos_core::KosmosError::ShapeMismatch(
                "structure maps do not match the carrier".into(),
            )));
        }
        if unit >= n {
            return Err(HopfError::InvalidPoint(format!("unit {unit} outside carrier of size {n}")));
        }
        let pp = kosmos_core::finset::tensor_obj(&carrier, &carrier);
        let g = FinGroupObj {
            mul: mul.retyped(&pp, &carrier)?,
            inv: inv.retyped(&carrier, &carrier)?,
            carrier,
            unit,
        };
        let checks = g.axioms()?;
        if checks.passed() {
            Ok(g)
        } else {
            Err(HopfError::Axioms(checks.into_reports()))
        }
    }

    /// Builds and validates a group from a Cayley table `table[a][b] = a·b`.
    pub fn from_table(
        table: &[Vec<usize>],
        unit: usize,
        inv: &[usize],
        labels: Option<Vec<String>>,
    ) -> Result<Self, HopfError> {
        let n = table.len();
        if table.iter().any(|r| r.len() != n) {
            return Err(HopfError::Kosmos(kosmos_core::KosmosError::ShapeMismatch(
                "multiplication table is not square".into(),
            )));
        }
        let carrier = match labels {
            Some(l) => FinObj::with_labels(l)?,
            None => FinObj::new(n),
        };
        let pp = FinObj::new(n * n);
        let mul = FinMap::new(pp, carrier.clone(), table.iter().flatten().copied().collect())?;
        let inv = FinMap::new(carrier.clone(), carrier.clone(), inv.to_vec())?;
        FinGroupObj::validate(carrier, mul, unit, inv)
    }

    /// The group-object equations: associativity, unit and antipode laws.
    pub fn axioms(&self) -> Result<Checklist, HopfError> {
        let n = self.order();
        let id = FinMap::identity(&self.carrier);
        let (m, u, s) = (&self.mul, self.unit_map(), &self.inv);
        let (d, e) = (self.comul(), self.counit());
        let mut c = Checklist::new("group-object axioms");
        c.equation_split(
            "associativity",
            &m.compose(&tensor_map(m, &id))?,
            &m.compose(&tensor_map(&id, m))?,
            &[n, n, n],
        )?;
        c.equation("left unit", &m.compose(&tensor_map(&u, &id))?, &id)?;
        c.equation("right unit", &m.compose(&tensor_map(&id, &u))?, &id)?;
        let ue = u.compose(&e)?;
        c.equation("left inverse", &compose_all(&[m, &tensor_map(s, &id), &d])?, &ue)?;
        c.equation("right inverse", &compose_all(&[m, &tensor_map(&id, s), &d])?, &ue)?;
        Ok(c)
    }

    pub fn carrier(&self) -> &FinObj {
        &self.carrier
    }

    pub fn order(&self) -> usize {
        self.carrier.size()
    }

    /// ∇_π: π⊗π → π.
    pub fn mul_map(&self) -> &FinMap {
        &self.mul
    }

    /// ς_π: π → π.
    pub fn inv_map(&self) -> &FinMap {
        &self.inv
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    /// u_π: κ → π.
    pub fn unit_map(&self) -> FinMap {
        point(&self.carrier, self.unit).expect("unit is in range")
    }

    /// Δ_π: π → π⊗π.
    pub fn comul(&self) -> FinMap {
        diagonal(&self.carrier)
    }

    /// e_π: π → κ.
    pub fn counit(&self) -> FinMap {
        terminal(&self.carrier)
    }

    pub fn m(&self, a: usize, b: usize) -> usize {
        self.mul.apply(a * self.order() + b)
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv.apply(a)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.m(a, b) == self.m(b, a)))
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n).map(|a| (0..n).map(|b| self.m(a, b)).collect()).collect()
    }

    /// f⋆g = ∇∘(f⊗g)∘Δ_c for maps f, g: c → π.
    pub fn convolution(&self, f: &FinMap, g: &FinMap) -> Result<FinMap, HopfError> {
        if f.dom_len() != g.dom_len() || f.cod_len() != self.order() || g.cod_len() != self.order() {
            return Err(HopfError::Kosmos(kosmos_core::KosmosError::ShapeMismatch(
                "convolution factors must be parallel maps into the group".into(),
            )));
        }
        Ok(compose_all(&[&self.mul, &tensor_map(f, g), &diagonal(f.dom())])?)
    }

    /// The convolution unit u∘e_c on c.
    pub fn convolution_unit(&self, c: &FinObj) -> FinMap {
        self.unit_map().compose(&terminal(c)).expect("shapes agree")
    }

    /// σ_θ = ∇∘(∇⊗ς)∘(θ⊗I⊗θ), the inner automorphism attached to a point θ.
    pub fn inner_auto(&self, theta: usize) -> Result<FinMap, HopfError> {
        if theta >= self.order() {
            return Err(HopfError::InvalidPoint(format!("{theta} is not an element")));
        }
        let t = point(&self.carrier, theta)?;
        let id = FinMap::identity(&self.carrier);
        Ok(compose_all(&[
            &self.mul,
            &tensor_all(&[&self.mul, &self.inv]),
            &tensor_all(&[&t, &id, &t]),
        ])?)
    }
}

/// The convolution group of all maps c → π.
#[derive(Debug, Clone)]
pub struct HomGroup {
    pub group: FinGroupObj,
    pub source: FinObj,
    target_order: usize,
}

impl HomGroup {
    /// The map c → π encoded by `index` (base-|π| digits, first element most significant).
    pub fn element(&self, index: usize) -> FinMap {
        let (k, n) = (self.source.size(), self.target_order);
        let mut digits = vec![0; k];
        let mut rest = index;
        for d in digits.iter_mut().rev() {
            *d = rest % n;
            rest /= n;
        }
        FinMap::new(self.source.clone(), FinObj::new(n), digits).expect("digits are in range")
    }

    pub fn index_of(&self, f: &FinMap) -> usize {
        f.table().iter().fold(0, |acc, &d| acc * self.target_order + d)
    }
}

/// Maps c → π under pointwise convolution; inverses are antipode postcomposition.
pub fn hom_group(c: &FinObj, pi: &FinGroupObj) -> Result<HomGroup, HopfError> {
    let n = pi.order();
    let k = c.size();
    let order = n.checked_pow(k as u32).ok_or_else(|| {
        HopfError::Kosmos(kosmos_core::KosmosError::ShapeMismatch("hom group too large".into()))
    })?;
    let shell = HomGroup { group: pi.clone(), source: c.clone(), target_order: n };
    let elems: Vec<FinMap> = (0..order).map(|i| shell.element(i)).collect();
    let mut table = Vec::with_capacity(order);
    for f in &elems {
        let f = f.retyped(c, pi.carrier())?;
        let mut row = Vec::with_capacity(order);
        for g in &elems {
            let g = g.retyped(c, pi.carrier())?;
            row.push(shell.index_of(&pi.convolution(&f, &g)?));
        }
        table.push(row);
    }
    let inv: Vec<usize> = elems
        .iter()
        .map(|f| Ok(shell.index_of(&pi.inv_map().compose(&f.retyped(c, pi.carrier())?)?)))
        .collect::<Result<_, HopfError>>()?;
    let unit = shell.index_of(&pi.convolution_unit(c));
    let group = FinGroupObj::from_table(&table, unit, &inv, None)?;
    Ok(HomGroup { group, ..shell })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn z2_is_valid() {
        let g = FinGroupObj::from_table(&[vec![0, 1], vec![1, 0]], 0, &[0, 1], None).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn absorbing_table_fails_at_element_one() {
        let err = FinGroupObj::from_table(&[vec![0, 1], vec![1, 1]], 0, &[0, 1], None).unwrap_err();
        let HopfError::Axioms(reports) = err else { panic!("expected axiom failure") };
        let failed: Vec<_> = reports.iter().filter(|r| !r.passed).collect();
        assert!(failed.iter().all(|r| r.name.contains("inverse")));
        assert!(failed.iter().all(|r| r.witness.as_ref().unwrap().index == 1));
    }

    #[test]
    fn s3_is_valid() {
        let s3 = catalog::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert!(s3.axioms().unwrap().passed());
    }

    #[test]
    fn broken_associativity_has_triple_witness() {
        let err = FinGroupObj::from_table(&[vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 1]], 0, &[0, 1, 2], None)
            .unwrap_err();
        let HopfError::Axioms(reports) = err else { panic!() };
        let assoc = reports.iter().find(|r| r.name == "associativity").unwrap();
        assert!(!assoc.passed);
        let w = assoc.witness.as_ref().unwrap();
        let c = w.coords.clone().unwrap();
        let t = [[0, 1, 2], [1, 0, 0], [2, 0, 1]];
        assert_ne!(t[t[c[0]][c[1]]][c[2]], t[c[0]][t[c[1]][c[2]]]);
    }

    #[test]
    fn convolution_in_z3() {
        let z3 = catalog::cyclic(3);
        let one = point(z3.carrier(), 1).unwrap();
        let two = point(z3.carrier(), 2).unwrap();
        assert_eq!(z3.convolution(&one, &two).unwrap().table(), &[0]);
        let k = FinObj::new(2);
        let f = FinMap::new(k.clone(), z3.carrier().clone(), vec![2, 1]).unwrap();
        let unit = z3.convolution_unit(&k);
        assert!(z3.convolution(&f, &unit).unwrap().equals(&f).unwrap());
        let fi = z3.inv_map().compose(&f).unwrap();
        assert!(z3.convolution(&f, &fi).unwrap().equals(&unit).unwrap());
    }

    #[test]
    fn hom_group_examples() {
        let z2 = catalog::cyclic(2);
        let h = hom_group(&FinObj::unit(), &z2).unwrap();
        assert_eq!(h.group.table(), z2.table());
        let h2 = hom_group(&FinObj::new(2), &z2).unwrap();
        assert_eq!(h2.group.order(), 4);
        assert!((0..4).all(|a| h2.group.m(a, a) == h2.group.unit()));
        let h0 = hom_group(&FinObj::new(0), &z2).unwrap();
        assert_eq!(h0.group.order(), 1);
    }

    #[test]
    fn inner_automorphisms() {
        let s3 = catalog::symmetric(3);
        let id = FinMap::identity(s3.carrier());
        assert!(s3.inner_auto(s3.unit()).unwrap().equals(&id).unwrap());
        let t = 1;
        let sigma = s3.inner_auto(t).unwrap();
        for x in 0..6 {
            assert_eq!(sigma.apply(x), s3.m(s3.m(t, x), s3.inv(t)));
        }
        assert!(!sigma.equals(&id).unwrap());
        let z4 = catalog::cyclic(4);
        for t in 0..4 {
            assert!(z4.inner_auto(t).unwrap().equals(&FinMap::identity(z4.carrier())).unwrap());
        }
        assert!(matches!(z4.inner_auto(9), Err(HopfError::InvalidPoint(_))));
    }
}
