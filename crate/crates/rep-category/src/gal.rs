use hopf_objects::FinGroupObj;
use kosmos_core::finset::{
    coeq_factor, diagonal, reflexive_coequalizer, symmetry, tensor_map, tensor_obj, terminal, CoeqResult, FinMap, FinObj,
};
use kosmos_core::{compose_all, tensor_all, Morphism};
use lawcheck::Checklist;

use crate::{RepError, HOM_ENUMERATION_LIMIT};

/// A finite set with a left action γ: π⊗x → x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalRep {
    group: FinGroupObj,
    carrier: FinObj,
    action: FinMap,
}

impl GalRep {
    pub fn validate(group: &FinGroupObj, carrier: FinObj, action: FinMap) -> Result<Self, RepError> {
        let action = action.retyped(&tensor_obj(group.carrier(), &carrier), &carrier)?;
        let rep = GalRep { group: group.clone(), carrier, action };
        let c = rep.laws()?;
        if c.passed() {
            Ok(rep)
        } else {
            Err(RepError::ActionLaw(c.into_reports()))
        }
    }

    /// `table[g][i]` is g·i.
    pub fn from_table(group: &FinGroupObj, carrier: FinObj, table: &[Vec<usize>]) -> Result<Self, RepError> {
        if table.len() != group.order() {
            return Err(kosmos_core::KosmosError::ShapeMismatch("one row per group element expected".into()).into());
        }
        let flat: Vec<usize> = table.iter().flatten().copied().collect();
        let action = FinMap::new(tensor_obj(group.carrier(), &carrier), carrier.clone(), flat)?;
        GalRep::validate(group, carrier, action)
    }

    pub fn laws(&self) -> Result<Checklist, RepError> {
        let (g, x) = (&self.group, &self.carrier);
        let ix = FinMap::identity(x);
        let ip = FinMap::identity(g.carrier());
        let mut c = Checklist::new("action law");
        c.equation_split(
            "associativity",
            &self.action.compose(&tensor_map(g.mul_map(), &ix))?,
            &self.action.compose(&tensor_map(&ip, &self.action))?,
            &[g.order(), g.order(), x.size()],
        )?;
        c.equation("unit", &self.action.compose(&tensor_map(&g.unit_map(), &ix))?, &ix)?;
        Ok(c)
    }

    pub fn group(&self) -> &FinGroupObj {
        &self.group
    }

    pub fn carrier(&self) -> &FinObj {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn action(&self) -> &FinMap {
        &self.action
    }

    pub fn act(&self, g: usize, i: usize) -> usize {
        self.action.apply(g * self.size() + i)
    }

    fn raw(group: &FinGroupObj, carrier: FinObj, action: FinMap) -> Self {
        GalRep { group: group.clone(), carrier, action }
    }

    /// The monoidal unit: κ with the trivial action.
    pub fn unit(group: &FinGroupObj) -> Self {
        GalRep::trivial(group, &FinObj::unit())
    }

    /// z with the trivial action e_π⊗I.
    pub fn trivial(group: &FinGroupObj, z: &FinObj) -> Self {
        let action = tensor_map(&terminal(group.carrier()), &FinMap::identity(z));
        GalRep::raw(group, z.clone(), action)
    }

    /// π acting on itself by left multiplication.
    pub fn regular(group: &FinGroupObj) -> Self {
        GalRep::raw(group, group.carrier().clone(), group.mul_map().clone())
    }

    /// π acting on itself by conjugation.
    pub fn conjugation(group: &FinGroupObj) -> Self {
        let n = group.order();
        let pp = tensor_obj(group.carrier(), group.carrier());
        let action = FinMap::from_fn(&pp, group.carrier(), |k| {
            let (g, h) = (k / n, k % n);
            group.m(group.m(g, h), group.inv(g))
        })
        .expect("conjugation stays in the group");
        GalRep::raw(group, group.carrier().clone(), action)
    }

    /// The free representation π⊗z with action ∇⊗I.
    pub fn free(group: &FinGroupObj, z: &FinObj) -> Self {
        let action = tensor_map(group.mul_map(), &FinMap::identity(z));
        GalRep::raw(group, tensor_obj(group.carrier(), z), action)
    }

    /// η_z = u⊗I: z → π⊗z, the unit of free ⊣ forget.
    pub fn free_unit(group: &FinGroupObj, z: &FinObj) -> FinMap {
        tensor_map(&group.unit_map(), &FinMap::identity(z))
    }

    /// ε_X = γ_x: free(x) → X, the counit of free ⊣ forget.
    pub fn free_counit(&self) -> GalRepMor {
        GalRepMor { src: GalRep::free(&self.group, &self.carrier), dst: self.clone(), map: self.action.clone() }
    }

    /// (π⊗)_{x,y} = (I⊗s_{π,x}⊗I)(Δ⊗I⊗I): π⊗x⊗y → π⊗x⊗π⊗y.
    pub fn split(group: &FinGroupObj, x: &FinObj, y: &FinObj) -> FinMap {
        let p = group.carrier();
        compose_all(&[
            &tensor_all(&[&FinMap::identity(p), &symmetry(p, x), &FinMap::identity(y)]),
            &tensor_all(&[&diagonal(p), &FinMap::identity(x), &FinMap::identity(y)]),
        ])
        .expect("shapes agree")
    }

    /// X⊗Y with the diagonal action (γ_x⊗γ_y)(π⊗)_{x,y}.
    pub fn tensor(&self, other: &GalRep) -> Result<GalRep, RepError> {
        same_group(&self.group, &other.group)?;
        let split = GalRep::split(&self.group, &self.carrier, &other.carrier);
        let action = tensor_map(&self.action, &other.action).compose(&split)?;
        Ok(GalRep::raw(&self.group, tensor_obj(&self.carrier, &other.carrier), action))
    }

    /// Orbit decomposition: the coequalizer of γ and e⊗I, with section u⊗I.
    pub fn coinvariants(&self) -> Result<CoeqResult, RepError> {
        let proj2 = tensor_map(&terminal(self.group.carrier()), &FinMap::identity(&self.carrier));
        let sec = GalRep::free_unit(&self.group, &self.carrier);
        Ok(reflexive_coequalizer(&self.action, &proj2, &sec)?)
    }

    /// Stabilizer of the element `i`.
    pub fn stabilizer(&self, i: usize) -> Vec<usize> {
        (0..self.group.order()).filter(|&g| self.act(g, i) == i).collect()
    }
}

fn same_group(a: &FinGroupObj, b: &FinGroupObj) -> Result<(), RepError> {
    if a != b {
        return Err(RepError::GroupMismatch("representations of different groups".into()));
    }
    Ok(())
}

/// An equivariant map of representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalRepMor {
    pub src: GalRep,
    pub dst: GalRep,
    pub map: FinMap,
}

impl GalRepMor {
    pub fn validate(src: &GalRep, dst: &GalRep, map: FinMap) -> Result<Self, RepError> {
        same_group(&src.group, &dst.group)?;
        let map = map.retyped(&src.carrier, &dst.carrier)?;
        let f = GalRepMor { src: src.clone(), dst: dst.clone(), map };
        let c = f.laws()?;
        if c.passed() {
            Ok(f)
        } else {
            Err(RepError::NotEquivariant(c.into_reports()))
        }
    }

    pub fn laws(&self) -> Result<Checklist, RepError> {
        let mut c = Checklist::new("equivariance");
        let ip = FinMap::identity(self.src.group.carrier());
        c.equation_split(
            "commutes with the action",
            &self.map.compose(&self.src.action)?,
            &self.dst.action.compose(&tensor_map(&ip, &self.map))?,
            &[self.src.group.order(), self.src.size()],
        )?;
        Ok(c)
    }

    pub fn identity(x: &GalRep) -> Self {
        GalRepMor { src: x.clone(), dst: x.clone(), map: FinMap::identity(&x.carrier) }
    }

    /// self ∘ other.
    pub fn after(&self, other: &GalRepMor) -> Result<GalRepMor, RepError> {
        if other.dst != self.src {
            return Err(RepError::GroupMismatch("morphisms are not composable".into()));
        }
        Ok(GalRepMor { src: other.src.clone(), dst: self.dst.clone(), map: self.map.compose(&other.map)? })
    }

    pub fn tensor(&self, other: &GalRepMor) -> Result<GalRepMor, RepError> {
        Ok(GalRepMor {
            src: self.src.tensor(&other.src)?,
            dst: self.dst.tensor(&other.dst)?,
            map: tensor_map(&self.map, &other.map),
        })
    }

    /// The symmetry s_{X,Y} as a morphism of representations.
    pub fn symmetry(x: &GalRep, y: &GalRep) -> Result<GalRepMor, RepError> {
        Ok(GalRepMor { src: x.tensor(y)?, dst: y.tensor(x)?, map: symmetry(&x.carrier, &y.carrier) })
    }
}

/// All equivariant maps X → Y. A map is fixed by its values on orbit representatives, and
/// each such value must be fixed by the representative's stabilizer.
pub fn hom_rep(x: &GalRep, y: &GalRep) -> Result<Vec<GalRepMor>, RepError> {
    hom_rep_capped(x, y, usize::MAX)
}

/// The first `cap` equivariant maps X → Y in enumeration order.
pub fn hom_rep_capped(x: &GalRep, y: &GalRep, cap: usize) -> Result<Vec<GalRepMor>, RepError> {
    same_group(&x.group, &y.group)?;
    let orbits = x.coinvariants()?;
    let reps: Vec<usize> = (0..orbits.obj.size())
        .map(|k| orbits.proj.table().iter().position(|&o| o == k).expect("orbit is nonempty"))
        .collect();
    let candidates = (y.size() as u128).checked_pow(reps.len() as u32).unwrap_or(u128::MAX);
    if candidates > HOM_ENUMERATION_LIMIT {
        return Err(RepError::CarrierTooLarge { candidates, limit: HOM_ENUMERATION_LIMIT });
    }
    let choices: Vec<Vec<usize>> = reps
        .iter()
        .map(|&r| {
            let stab = x.stabilizer(r);
            (0..y.size()).filter(|&j| stab.iter().all(|&g| y.act(g, j) == j)).collect()
        })
        .collect();
    // for each element, a group element carrying its orbit representative to it
    let n = x.group.order();
    let mover: Vec<(usize, usize)> = (0..x.size())
        .map(|i| {
            let o = orbits.proj.apply(i);
            let g = (0..n).find(|&g| x.act(g, reps[o]) == i).expect("element lies in its orbit");
            (o, g)
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; reps.len()];
    if choices.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    loop {
        let table: Vec<usize> = mover.iter().map(|&(o, g)| y.act(g, choices[o][idx[o]])).collect();
        let map = FinMap::new(x.carrier.clone(), y.carrier.clone(), table)?;
        out.push(GalRepMor { src: x.clone(), dst: y.clone(), map });
        if out.len() >= cap {
            return Ok(out);
        }
        let mut k = reps.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// φ_{z,X}: free(z⊗x) → free(z)⊗X, (g, k, i) ↦ (g, k, g·i), as (I⊗I⊗γ)(π⊗)_{z,x}.
pub fn projection_map(z: &FinObj, x: &GalRep) -> Result<GalRepMor, RepError> {
    let g = &x.group;
    let map = tensor_all(&[&FinMap::identity(g.carrier()), &FinMap::identity(z), &x.action])
        .compose(&GalRep::split(g, z, &x.carrier))?;
    Ok(GalRepMor { src: GalRep::free(g, &tensor_obj(z, &x.carrier)), dst: GalRep::free(g, z).tensor(x)?, map })
}

/// (I⊗I⊗γ)(I⊗I⊗ς⊗I)(π⊗)_{z,x}, the inverse of the projection map.
pub fn projection_inverse(z: &FinObj, x: &GalRep) -> Result<FinMap, RepError> {
    let g = &x.group;
    let (ip, iz, ix) = (FinMap::identity(g.carrier()), FinMap::identity(z), FinMap::identity(&x.carrier));
    Ok(compose_all(&[
        &tensor_all(&[&ip, &iz, &x.action]),
        &tensor_all(&[&ip, &iz, g.inv_map(), &ix]),
        &GalRep::split(g, z, &x.carrier),
    ])?)
}

/// The same composite with the antipode left out; a negative control.
pub fn projection_naive_inverse(z: &FinObj, x: &GalRep) -> Result<FinMap, RepError> {
    Ok(projection_map(z, x)?.map)
}

/// Equivariance of φ_{z,X} and both inverse laws for the antipode-built inverse.
pub fn projection_formula_check(z: &FinObj, x: &GalRep) -> Result<Checklist, RepError> {
    let phi = projection_map(z, x)?;
    let inv = projection_inverse(z, x)?;
    let mut c = Checklist::new("projection-formula");
    c.extend(phi.laws()?);
    let id = FinMap::identity(phi.src.carrier());
    c.equation("inverse after map", &inv.compose(&phi.map)?, &id)?;
    c.equation("map after inverse", &phi.map.compose(&inv)?, &id)?;
    Ok(c)
}

/// χ_{x,y} = (I⊗I⊗∇⊗I)(π⊗)_{x,π⊗y}: (g, i, h, j) ↦ (g, i, gh, j).
pub fn fusion_map(group: &FinGroupObj, x: &FinObj, y: &FinObj) -> Result<FinMap, RepError> {
    let py = tensor_obj(group.carrier(), y);
    let (ip, ix, iy) = (FinMap::identity(group.carrier()), FinMap::identity(x), FinMap::identity(y));
    Ok(tensor_all(&[&ip, &ix, group.mul_map(), &iy]).compose(&GalRep::split(group, x, &py))?)
}

/// (I⊗I⊗∇⊗I)(I⊗I⊗ς⊗I⊗I)(π⊗)_{x,π⊗y}: (g, i, h, j) ↦ (g, i, g⁻¹h, j).
pub fn fusion_inverse(group: &FinGroupObj, x: &FinObj, y: &FinObj) -> Result<FinMap, RepError> {
    let py = tensor_obj(group.carrier(), y);
    let (ip, ix, iy) = (FinMap::identity(group.carrier()), FinMap::identity(x), FinMap::identity(y));
    Ok(compose_all(&[
        &tensor_all(&[&ip, &ix, group.mul_map(), &iy]),
        &tensor_all(&[&ip, &ix, group.inv_map(), &ip, &iy]),
        &GalRep::split(group, x, &py),
    ])?)
}

pub fn fusion_check(group: &FinGroupObj, x: &FinObj, y: &FinObj) -> Result<Checklist, RepError> {
    let chi = fusion_map(group, x, y)?;
    let inv = fusion_inverse(group, x, y)?;
    let mut c = Checklist::new("fusion");
    let id = FinMap::identity(chi.dom());
    c.equation("inverse after map", &inv.compose(&chi)?, &id)?;
    c.equation("map after inverse", &chi.compose(&inv)?, &id)?;
    let phi = projection_map(x, &GalRep::free(group, y))?;
    c.equation("agrees with projection map on a free representation", &chi, &phi.map)?;
    Ok(c)
}

/// Both triangle identities for free ⊣ forget, at the set `x` and the representation `rep`.
pub fn free_triangles(rep: &GalRep, x: &FinObj) -> Result<Checklist, RepError> {
    let g = &rep.group;
    let ip = FinMap::identity(g.carrier());
    let mut c = Checklist::new("free-forget adjunction");
    let free_x = GalRep::free(g, x);
    let lhs = free_x.action.compose(&tensor_map(&ip, &GalRep::free_unit(g, x)))?;
    c.equation("counit after free of unit", &lhs, &FinMap::identity(free_x.carrier()))?;
    let lhs = rep.action.compose(&GalRep::free_unit(g, &rep.carrier))?;
    c.equation("forget of counit after unit", &lhs, &FinMap::identity(&rep.carrier))?;
    Ok(c)
}

/// Both triangle identities for coinvariants ⊣ trivial, at `rep` and the set `z`.
pub fn trivial_triangles(rep: &GalRep, z: &FinObj) -> Result<Checklist, RepError> {
    let g = &rep.group;
    let mut c = Checklist::new("coinvariants-trivial adjunction");
    // counit ε_z: t_!(t z) → z with ε∘proj = I
    let tz = GalRep::trivial(g, z);
    let coinv_tz = tz.coinvariants()?;
    let eps_z = coeq_factor(&coinv_tz, &FinMap::identity(z))?;
    c.equation("trivial of counit after unit", &eps_z.compose(&coinv_tz.proj)?, &FinMap::identity(z))?;
    let orbits = rep.coinvariants()?;
    let t_orbits = GalRep::trivial(g, &orbits.obj);
    let unit = GalRepMor::validate(rep, &t_orbits, orbits.proj.clone())?;
    let inner = t_orbits.coinvariants()?;
    let coinv_unit = coeq_factor(&orbits, &inner.proj.compose(&unit.map)?)?;
    let eps = coeq_factor(&inner, &FinMap::identity(&orbits.obj))?;
    c.equation("counit after coinvariants of unit", &eps.compose(&coinv_unit)?, &FinMap::identity(&orbits.obj))?;
    Ok(c)
}

/// The orbit set of free(x) is identified with x through u⊗I followed by the orbit map.
pub fn coinvariants_of_free(group: &FinGroupObj, x: &FinObj) -> Result<Checklist, RepError> {
    let orbits = GalRep::free(group, x).coinvariants()?;
    let mut c = Checklist::new("coinvariants of free");
    c.iso("orbit map after unit is bijective", &orbits.proj.compose(&GalRep::free_unit(group, x))?);
    Ok(c)
}

/// Test representations for a group, cut to `limit` entries.
pub fn probes(group: &FinGroupObj, limit: usize) -> Vec<GalRep> {
    let reg = GalRep::regular(group);
    let mut out = vec![
        GalRep::unit(group),
        GalRep::trivial(group, &FinObj::new(2)),
        reg.clone(),
        reg.tensor(&reg).expect("same group"),
        GalRep::conjugation(group),
    ];
    out.truncate(limit);
    out
}
