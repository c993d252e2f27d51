use kosmos_core::linear::{symmetry, tensor_map, tensor_obj};
use kosmos_core::{compose_all, tensor_all, KosmosError, LinMap, Morphism, Scalar, VecObj};
use lawcheck::Checklist;

use crate::HopfError;

fn check_shape<F: Scalar>(m: &LinMap<F>, dom: usize, cod: usize, what: &str) -> Result<(), HopfError> {
    if m.cols() != dom || m.rows() != cod {
        return Err(KosmosError::ShapeMismatch(format!(
            "{what}: expected {cod}x{dom}, got {}x{}",
            m.rows(),
            m.cols()
        ))
        .into());
    }
    Ok(())
}

/// A commutative algebra (∇, u) on a finite-dimensional space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommAlgObj<F> {
    carrier: VecObj,
    mul: LinMap<F>,
    unit: LinMap<F>,
}

impl<F: Scalar> CommAlgObj<F> {
    pub fn validate(carrier: VecObj, mul: LinMap<F>, unit: LinMap<F>) -> Result<Self, HopfError> {
        let n = carrier.dim();
        if n == 0 {
            return Err(HopfError::EmptyCarrier);
        }
        check_shape(&mul, n * n, n, "multiplication")?;
        check_shape(&unit, 1, n, "unit")?;
        let pp = tensor_obj(&carrier, &carrier);
        let a = CommAlgObj {
            mul: mul.retyped(&pp, &carrier)?,
            unit: unit.retyped(&VecObj::unit(), &carrier)?,
            carrier,
        };
        let c = a.axioms()?;
        if c.passed() {
            Ok(a)
        } else {
            Err(HopfError::Axioms(c.into_reports()))
        }
    }

    pub fn axioms(&self) -> Result<Checklist, HopfError> {
        let mut c = Checklist::new("commutative-algebra axioms");
        algebra_axioms(&mut c, &self.carrier, &self.mul, &self.unit)?;
        Ok(c)
    }

    pub fn carrier(&self) -> &VecObj {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn mul_map(&self) -> &LinMap<F> {
        &self.mul
    }

    pub fn unit_map(&self) -> &LinMap<F> {
        &self.unit
    }

    /// The product of two vectors given in coordinates.
    pub fn product(&self, a: &[F], b: &[F]) -> Vec<F> {
        let n = self.dim();
        (0..n)
            .map(|r| {
                let mut acc = F::zero();
                for (col, c) in self.mul.sparse_row(r) {
                    let (x, y) = (&a[col / n], &b[col % n]);
                    if !x.is_zero() && !y.is_zero() {
                        acc = acc + c.clone() * x.clone() * y.clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Whether a functional x: a → κ is an algebra map.
    pub fn is_algebra_point(&self, x: &LinMap<F>) -> Result<bool, HopfError> {
        check_shape(x, self.dim(), 1, "point")?;
        let mult = x.compose(&self.mul)?.equals(&tensor_map(x, x))?;
        let unital = x.compose(&self.unit)?.equals(&LinMap::identity(&VecObj::unit()))?;
        Ok(mult && unital)
    }
}

fn algebra_axioms<F: Scalar>(
    c: &mut Checklist,
    x: &VecObj,
    m: &LinMap<F>,
    u: &LinMap<F>,
) -> Result<(), HopfError> {
    let n = x.dim();
    let id = LinMap::identity(x);
    c.equation_split(
        "associativity",
        &m.compose(&tensor_map(m, &id))?,
        &m.compose(&tensor_map(&id, m))?,
        &[n, n, n],
    )?;
    c.equation_split("commutativity", &m.compose(&symmetry(x, x))?, m, &[n, n])?;
    c.equation("left unit", &m.compose(&tensor_map(u, &id))?, &id)?;
    c.equation("right unit", &m.compose(&tensor_map(&id, u))?, &id)?;
    Ok(())
}

/// A commutative Hopf algebra (∇, u, Δ, e, ς).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfObj<F> {
    carrier: VecObj,
    mul: LinMap<F>,
    unit: LinMap<F>,
    comul: LinMap<F>,
    counit: LinMap<F>,
    antipode: LinMap<F>,
}

impl<F: Scalar> HopfObj<F> {
    pub fn validate(
        carrier: VecObj,
        mul: LinMap<F>,
        unit: LinMap<F>,
        comul: LinMap<F>,
        counit: LinMap<F>,
        antipode: LinMap<F>,
    ) -> Result<Self, HopfError> {
        let n = carrier.dim();
        if n == 0 {
            return Err(HopfError::EmptyCarrier);
        }
        check_shape(&mul, n * n, n, "multiplication")?;
        check_shape(&unit, 1, n, "unit")?;
        check_shape(&comul, n, n * n, "comultiplication")?;
        check_shape(&counit, n, 1, "counit")?;
        check_shape(&antipode, n, n, "antipode")?;
        let (pp, k) = (tensor_obj(&carrier, &carrier), VecObj::unit());
        let h = HopfObj {
            mul: mul.retyped(&pp, &carrier)?,
            unit: unit.retyped(&k, &carrier)?,
            comul: comul.retyped(&carrier, &pp)?,
            counit: counit.retyped(&carrier, &k)?,
            antipode: antipode.retyped(&carrier, &carrier)?,
            carrier,
        };
        let c = h.axioms()?;
        if c.passed() {
            Ok(h)
        } else {
            Err(HopfError::Axioms(c.into_reports()))
        }
    }

    pub fn axioms(&self) -> Result<Checklist, HopfError> {
        let x = &self.carrier;
        let n = x.dim();
        let id = LinMap::identity(x);
        let (m, u, d, e, s) = (&self.mul, &self.unit, &self.comul, &self.counit, &self.antipode);
        let mut c = Checklist::new("hopf-object axioms");
        algebra_axioms(&mut c, x, m, u)?;
        c.equation("coassociativity", &tensor_map(d, &id).compose(d)?, &tensor_map(&id, d).compose(d)?)?;
        c.equation("left counit", &tensor_map(e, &id).compose(d)?, &id)?;
        c.equation("right counit", &tensor_map(&id, e).compose(d)?, &id)?;
        let mid = tensor_all(&[&id, &symmetry(x, x), &id]);
        c.equation_split(
            "comultiplication is multiplicative",
            &d.compose(m)?,
            &compose_all(&[&tensor_map(m, m), &mid, &tensor_map(d, d)])?,
            &[n, n],
        )?;
        c.equation_split("counit is multiplicative", &e.compose(m)?, &tensor_map(e, e), &[n, n])?;
        c.equation("comultiplication is unital", &d.compose(u)?, &tensor_map(u, u))?;
        c.equation("counit is unital", &e.compose(u)?, &LinMap::identity(&VecObj::unit()))?;
        let ue = u.compose(e)?;
        c.equation("left antipode", &compose_all(&[m, &tensor_map(s, &id), d])?, &ue)?;
        c.equation("right antipode", &compose_all(&[m, &tensor_map(&id, s), d])?, &ue)?;
        Ok(c)
    }

    pub fn carrier(&self) -> &VecObj {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn mul_map(&self) -> &LinMap<F> {
        &self.mul
    }

    pub fn unit_map(&self) -> &LinMap<F> {
        &self.unit
    }

    pub fn comul(&self) -> &LinMap<F> {
        &self.comul
    }

    pub fn counit(&self) -> &LinMap<F> {
        &self.counit
    }

    pub fn antipode(&self) -> &LinMap<F> {
        &self.antipode
    }

    pub fn algebra(&self) -> CommAlgObj<F> {
        CommAlgObj { carrier: self.carrier.clone(), mul: self.mul.clone(), unit: self.unit.clone() }
    }

    /// f⋆g = ∇_b∘(f⊗g)∘Δ for maps f, g out of the Hopf algebra into an algebra b.
    pub fn convolution_out(&self, b: &CommAlgObj<F>, f: &LinMap<F>, g: &LinMap<F>) -> Result<LinMap<F>, HopfError> {
        check_shape(f, self.dim(), b.dim(), "convolution factor")?;
        check_shape(g, self.dim(), b.dim(), "convolution factor")?;
        Ok(compose_all(&[b.mul_map(), &tensor_map(f, g), &self.comul])?)
    }

    /// The convolution unit u_b∘e.
    pub fn convolution_unit_out(&self, b: &CommAlgObj<F>) -> Result<LinMap<F>, HopfError> {
        Ok(b.unit_map().compose(&self.counit)?)
    }

    /// σ_θ = (θ⊗I⊗θ)∘(Δ⊗ς)∘Δ for an algebra point θ: π → κ.
    pub fn inner_auto(&self, theta: &LinMap<F>) -> Result<LinMap<F>, HopfError> {
        if !self.algebra().is_algebra_point(theta)? {
            return Err(HopfError::InvalidPoint("functional is not an algebra map".into()));
        }
        let id = LinMap::identity(&self.carrier);
        Ok(compose_all(&[
            &tensor_all(&[theta, &id, theta]),
            &tensor_map(&self.comul, &self.antipode),
            &self.comul,
        ])?)
    }
}
