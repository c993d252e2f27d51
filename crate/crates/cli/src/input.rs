//! JSON input documents and their conversion into validated objects.
//!
//! All tables are 0-indexed. Matrices are lists of rows, one row per basis vector of the
//! codomain, so a map V → W of dimensions n → m is written as m rows of length n. Tensor
//! bases are row-major: the pair (i, j) of V⊗W sits at position i·dim W + j.
//! Rationals are strings such as "3", "-1/2".

use std::path::{Path, PathBuf};

use hopf_objects::catalog::{cyclic, direct_product, function_algebra, kappa, symmetric, trivial};
use hopf_objects::{CommAlgObj, FinGroupObj, GalGroupMor, GalTwoCell, GroGroupMor, GroTwoCell, HopfError, HopfObj};
use kosmos_core::finset::FinObj;
use kosmos_core::linear::tensor_obj;
use kosmos_core::{KosmosError, LinMap, Rat, VecObj};
use lawcheck::Report;
use reconstruction::ReconError;
use rep_category::{gro, GalRep, GroRep, RepError};
use serde::Deserialize;
use torsors::{GalTorsor, GroTorsor, TorsorError};

use crate::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum InputDoc {
    FinsetGroup(FinsetGroupDoc),
    RatHopf(RatHopfDoc),
    CommAlg(CommAlgDoc),
    GalRep(GalRepDoc),
    GroRep(GroRepDoc),
    GalTorsor(GalTorsorDoc),
    GroTorsor(GroTorsorDoc),
    GroupMor(GroupMorDoc),
    TwoCell(TwoCellDoc),
}

impl InputDoc {
    pub fn kind(&self) -> &'static str {
        match self {
            InputDoc::FinsetGroup(_) => "finset-group",
            InputDoc::RatHopf(_) => "rat-hopf",
            InputDoc::CommAlg(_) => "comm-alg",
            InputDoc::GalRep(_) => "gal-rep",
            InputDoc::GroRep(_) => "gro-rep",
            InputDoc::GalTorsor(_) => "gal-torsor",
            InputDoc::GroTorsor(_) => "gro-torsor",
            InputDoc::GroupMor(_) => "group-mor",
            InputDoc::TwoCell(_) => "two-cell",
        }
    }
}

/// A reference to another document: a catalog id, a path relative to the referring
/// document (anything ending in `.json` or containing a slash), or an inline document.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Ref {
    Name(String),
    Inline(Box<InputDoc>),
}

type Matrix = Vec<Vec<String>>;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FinsetGroupDoc {
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    pub unit: usize,
    pub inv: Vec<usize>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RatHopfDoc {
    pub dim: usize,
    pub mul: Matrix,
    pub unit: Vec<String>,
    pub comul: Matrix,
    pub counit: Vec<String>,
    pub antipode: Matrix,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommAlgDoc {
    pub dim: usize,
    pub mul: Matrix,
    pub unit: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GalRepDoc {
    pub group: Ref,
    pub size: usize,
    /// `action[g][i]` is g·i.
    pub action: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroRepDoc {
    pub group: Ref,
    pub dim: usize,
    /// x → x⊗π, (dim·n) × dim.
    pub coaction: Matrix,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GalTorsorDoc {
    #[serde(default)]
    pub group: Option<Ref>,
    pub size: usize,
    /// `action[a][g]` is a·g.
    pub action: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroTorsorDoc {
    #[serde(default)]
    pub group: Option<Ref>,
    pub dim: usize,
    pub mul: Matrix,
    pub unit: Vec<String>,
    /// p → π⊗p, (n·dim) × dim.
    pub coaction: Matrix,
}

/// `table` for a homomorphism of finite groups, `map` for a Hopf algebra map.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupMorDoc {
    pub src: Ref,
    pub dst: Ref,
    #[serde(default)]
    pub table: Option<Vec<usize>>,
    #[serde(default)]
    pub map: Option<Matrix>,
}

/// θ is an element of the source group (finite sets) or a point π → κ given as one row.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoCellDoc {
    pub f1: Ref,
    pub f2: Ref,
    pub theta: Theta,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Theta {
    Element(usize),
    Point(Vec<String>),
}

/// A validated object built from a document.
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum Object {
    Group(FinGroupObj),
    Hopf(HopfObj<Rat>),
    Alg(CommAlgObj<Rat>),
    GalRep(GalRep),
    GroRep(GroRep<Rat>),
    GalTorsor(GalTorsor),
    GroTorsor(GroTorsor<Rat>),
    GalMor(GalGroupMor),
    GroMor(GroGroupMor<Rat>),
    GalCell(GalTwoCell),
    GroCell(GroTwoCell<Rat>),
}

/// Why a document did not produce an object.
#[derive(Debug)]
pub enum BuildError {
    /// Malformed input: unreadable file, bad JSON, wrong shapes. Exit code 2.
    Schema(CliError),
    /// Well-formed input whose laws fail; the failing reports carry witnesses.
    Invalid(Vec<Report>),
}

impl From<CliError> for BuildError {
    fn from(e: CliError) -> Self {
        BuildError::Schema(e)
    }
}

pub fn catalog_ids() -> &'static [&'static str] {
    &["trivial", "z2", "z3", "z4", "z2xz2", "s3", "kappa", "oz2", "oz3", "oz4", "oz2xz2", "os3"]
}

fn catalog(id: &str) -> Option<Object> {
    let group = |id: &str| -> Option<FinGroupObj> {
        Some(match id {
            "trivial" => trivial(),
            "z2" => cyclic(2),
            "z3" => cyclic(3),
            "z4" => cyclic(4),
            "z2xz2" => direct_product(&cyclic(2), &cyclic(2)),
            "s3" => symmetric(3),
            _ => return None,
        })
    };
    if id == "kappa" {
        return Some(Object::Hopf(kappa().expect("ground field")));
    }
    if let Some(g) = id.strip_prefix('o').and_then(group) {
        return Some(Object::Hopf(function_algebra(&g).expect("function algebra")));
    }
    group(id).map(Object::Group)
}

/// Loads documents relative to a directory.
#[derive(Debug, Clone)]
pub struct Loader {
    pub base: PathBuf,
}

impl Loader {
    pub fn new(base: impl Into<PathBuf>) -> Self {
        Loader { base: base.into() }
    }

    pub fn read_doc(path: &Path) -> Result<(InputDoc, Vec<u8>), CliError> {
        let bytes = std::fs::read(path).map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
        let doc = serde_json::from_slice(&bytes)
            .map_err(|e| CliError::Parse { path: path.display().to_string(), message: e.to_string() })?;
        Ok((doc, bytes))
    }

    /// Reads and builds the document at `path`, resolving its references relative to the
    /// file's directory.
    pub fn load_path(path: &Path) -> Result<Object, BuildError> {
        let (doc, _) = Loader::read_doc(path)?;
        Loader::new(parent_dir(path)).build(&doc, &path.display().to_string())
    }

    pub fn resolve(&self, r: &Ref, ctx: &str) -> Result<Object, BuildError> {
        match r {
            Ref::Inline(doc) => self.build(doc, ctx),
            Ref::Name(name) if name.ends_with(".json") || name.contains('/') => {
                let path = self.base.join(name);
                let (doc, _) = Loader::read_doc(&path)?;
                Loader::new(parent_dir(&path)).build(&doc, &path.display().to_string())
            }
            Ref::Name(name) => catalog(name).ok_or_else(|| {
                schema(ctx, format!("unknown catalog id {name:?}; known ids: {}", catalog_ids().join(", "))).into()
            }),
        }
    }

    fn group(&self, r: &Ref, ctx: &str) -> Result<FinGroupObj, BuildError> {
        match self.resolve(r, ctx)? {
            Object::Group(g) => Ok(g),
            _ => Err(schema(ctx, "reference does not name a finset-group".into()).into()),
        }
    }

    fn hopf(&self, r: &Ref, ctx: &str) -> Result<HopfObj<Rat>, BuildError> {
        match self.resolve(r, ctx)? {
            Object::Hopf(h) => Ok(h),
            _ => Err(schema(ctx, "reference does not name a rat-hopf object".into()).into()),
        }
    }

    /// The group a torsor document refers to, or `given` when the document leaves it out.
    fn torsor_group<T>(
        &self,
        r: &Option<Ref>,
        given: Option<&T>,
        ctx: &str,
        get: impl Fn(&Self, &Ref) -> Result<T, BuildError>,
    ) -> Result<T, BuildError>
    where
        T: Clone + PartialEq,
    {
        match (r, given) {
            (Some(r), Some(g)) => {
                let own = get(self, r)?;
                if &own != g {
                    return Err(schema(ctx, "torsor refers to a different group than the one given".into()).into());
                }
                Ok(own)
            }
            (Some(r), None) => get(self, r),
            (None, Some(g)) => Ok(g.clone()),
            (None, None) => Err(schema(ctx, "torsor document names no group".into()).into()),
        }
    }

    pub fn build(&self, doc: &InputDoc, ctx: &str) -> Result<Object, BuildError> {
        self.build_with(doc, ctx, None)
    }

    /// Builds `doc`; `group` supplies the acting group for torsor documents without one.
    pub fn build_with(&self, doc: &InputDoc, ctx: &str, group: Option<&Object>) -> Result<Object, BuildError> {
        match doc {
            InputDoc::FinsetGroup(d) => {
                if d.mul.len() != d.order || d.inv.len() != d.order {
                    return Err(schema(ctx, format!("order {} does not match the tables", d.order)).into());
                }
                let g = FinGroupObj::from_table(&d.mul, d.unit, &d.inv, d.labels.clone()).map_err(|e| lib(ctx, e))?;
                Ok(Object::Group(g))
            }
            InputDoc::RatHopf(d) => {
                let n = d.dim;
                let x = VecObj::new(n);
                let xx = tensor_obj(&x, &x);
                let h = HopfObj::validate(
                    x.clone(),
                    matrix(ctx, "mul", &d.mul, &xx, &x)?,
                    column(ctx, "unit", &d.unit, &x)?,
                    matrix(ctx, "comul", &d.comul, &x, &xx)?,
                    row(ctx, "counit", &d.counit, &x)?,
                    matrix(ctx, "antipode", &d.antipode, &x, &x)?,
                )
                .map_err(|e| lib(ctx, e))?;
                Ok(Object::Hopf(h))
            }
            InputDoc::CommAlg(d) => Ok(Object::Alg(algebra(ctx, d.dim, &d.mul, &d.unit)?)),
            InputDoc::GalRep(d) => {
                let g = self.group(&d.group, ctx)?;
                if d.action.iter().any(|r| r.len() != d.size) {
                    return Err(schema(ctx, format!("action rows must have length {}", d.size)).into());
                }
                let x = GalRep::from_table(&g, FinObj::new(d.size), &d.action).map_err(|e| lib(ctx, e))?;
                Ok(Object::GalRep(x))
            }
            InputDoc::GroRep(d) => {
                let h = self.hopf(&d.group, ctx)?;
                let rows = rationals(ctx, "coaction", &d.coaction)?;
                let x = gro::coaction_from_rows(&h, d.dim, rows).map_err(|e| lib(ctx, e))?;
                Ok(Object::GroRep(x))
            }
            InputDoc::GalTorsor(d) => {
                let given = match group {
                    Some(Object::Group(g)) => Some(g),
                    Some(_) => return Err(schema(ctx, "a finite-set torsor needs a finset-group".into()).into()),
                    None => None,
                };
                let g = self.torsor_group(&d.group, given, ctx, |s, r| s.group(r, ctx))?;
                if d.action.len() != d.size || d.action.iter().any(|r| r.len() != g.order()) {
                    return Err(schema(ctx, format!("action must be {} rows of length {}", d.size, g.order())).into());
                }
                let t = GalTorsor::from_table(&g, FinObj::new(d.size), &d.action).map_err(|e| lib(ctx, e))?;
                Ok(Object::GalTorsor(t))
            }
            InputDoc::GroTorsor(d) => {
                let given = match group {
                    Some(Object::Hopf(h)) => Some(h),
                    Some(_) => return Err(schema(ctx, "a linear torsor needs a rat-hopf object".into()).into()),
                    None => None,
                };
                let h = self.torsor_group(&d.group, given, ctx, |s, r| s.hopf(r, ctx))?;
                let a = algebra(ctx, d.dim, &d.mul, &d.unit)?;
                let p = a.carrier().clone();
                let co = matrix(ctx, "coaction", &d.coaction, &p, &tensor_obj(h.carrier(), &p))?;
                let t = GroTorsor::validate(&h, a, co).map_err(|e| lib(ctx, e))?;
                Ok(Object::GroTorsor(t))
            }
            InputDoc::GroupMor(d) => match (self.resolve(&d.src, ctx)?, self.resolve(&d.dst, ctx)?, &d.table, &d.map) {
                (Object::Group(a), Object::Group(b), Some(t), None) => {
                    Ok(Object::GalMor(GalGroupMor::validate(a, b, t.clone()).map_err(|e| lib(ctx, e))?))
                }
                (Object::Hopf(a), Object::Hopf(b), None, Some(m)) => {
                    let map = matrix(ctx, "map", m, a.carrier(), b.carrier())?;
                    Ok(Object::GroMor(GroGroupMor::validate(a, b, map).map_err(|e| lib(ctx, e))?))
                }
                _ => Err(schema(
                    ctx,
                    "group-mor needs two finset-groups with `table` or two rat-hopf objects with `map`".into(),
                )
                .into()),
            },
            InputDoc::TwoCell(d) => match (self.resolve(&d.f1, ctx)?, self.resolve(&d.f2, ctx)?, &d.theta) {
                (Object::GalMor(f1), Object::GalMor(f2), Theta::Element(t)) => {
                    if *t >= f1.src.order() {
                        return Err(schema(ctx, format!("theta {t} is not an element of the source group")).into());
                    }
                    Ok(Object::GalCell(GalTwoCell::validate(f1, f2, *t).map_err(|e| lib(ctx, e))?))
                }
                (Object::GroMor(f1), Object::GroMor(f2), Theta::Point(p)) => {
                    let theta = row(ctx, "theta", p, f1.dom.carrier())?;
                    Ok(Object::GroCell(GroTwoCell::validate(f1, f2, theta).map_err(|e| lib(ctx, e))?))
                }
                _ => Err(schema(ctx, "two-cell needs two parallel group-mors and a matching theta".into()).into()),
            },
        }
    }
}

pub fn parent_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

fn schema(ctx: &str, message: String) -> CliError {
    CliError::Parse { path: ctx.to_string(), message }
}

pub fn parse_rational(s: &str) -> Option<Rat> {
    let t = s.trim();
    if t.is_empty() || t.contains(char::is_whitespace) {
        return None;
    }
    t.parse::<Rat>().ok()
}

fn rationals(ctx: &str, field: &str, m: &Matrix) -> Result<Vec<Vec<Rat>>, CliError> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|s| parse_rational(s).ok_or_else(|| schema(ctx, format!("{field}: {s:?} is not a rational"))))
                .collect()
        })
        .collect()
}

fn matrix(ctx: &str, field: &str, m: &Matrix, dom: &VecObj, cod: &VecObj) -> Result<LinMap<Rat>, CliError> {
    if m.len() != cod.dim() || m.iter().any(|r| r.len() != dom.dim()) {
        return Err(schema(ctx, format!("{field} must be {} rows of length {}", cod.dim(), dom.dim())));
    }
    LinMap::new(dom.clone(), cod.clone(), rationals(ctx, field, m)?).map_err(|e| schema(ctx, format!("{field}: {e}")))
}

fn column(ctx: &str, field: &str, v: &[String], cod: &VecObj) -> Result<LinMap<Rat>, CliError> {
    let rows: Matrix = v.iter().map(|s| vec![s.clone()]).collect();
    matrix(ctx, field, &rows, &VecObj::unit(), cod)
}

fn row(ctx: &str, field: &str, v: &[String], dom: &VecObj) -> Result<LinMap<Rat>, CliError> {
    matrix(ctx, field, &vec![v.to_vec()], dom, &VecObj::unit())
}

fn algebra(ctx: &str, n: usize, mul: &Matrix, unit: &[String]) -> Result<CommAlgObj<Rat>, BuildError> {
    let x = VecObj::new(n);
    let m = matrix(ctx, "mul", mul, &tensor_obj(&x, &x), &x)?;
    let u = column(ctx, "unit", unit, &x)?;
    CommAlgObj::validate(x, m, u).map_err(|e| lib(ctx, e))
}

/// Library errors carrying failed reports are validation failures; shape and index errors
/// mean the document itself is malformed.
fn lib(ctx: &str, e: impl Into<LibError>) -> BuildError {
    match e.into() {
        LibError::Reports(r) => BuildError::Invalid(r),
        LibError::Malformed(m) => BuildError::Schema(schema(ctx, m)),
        LibError::Other(name, m) => BuildError::Invalid(vec![Report::assertion(&name, "validation", false, Some(m))]),
    }
}

#[derive(Debug, Clone)]
pub enum LibError {
    Reports(Vec<Report>),
    Malformed(String),
    Other(String, String),
}

impl From<KosmosError> for LibError {
    fn from(e: KosmosError) -> Self {
        LibError::Malformed(e.to_string())
    }
}

impl From<HopfError> for LibError {
    fn from(e: HopfError) -> Self {
        match e {
            HopfError::Axioms(r) => LibError::Reports(r),
            HopfError::Kosmos(k) => k.into(),
            HopfError::EmptyCarrier => LibError::Malformed(e.to_string()),
            HopfError::InvalidPoint(_) => LibError::Other("point is valid".into(), e.to_string()),
            HopfError::NotComposable(_) | HopfError::GroupMismatch(_) => LibError::Malformed(e.to_string()),
        }
    }
}

impl From<RepError> for LibError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::ActionLaw(r) | RepError::NotEquivariant(r) => LibError::Reports(r),
            RepError::Kosmos(k) => k.into(),
            RepError::Hopf(h) => h.into(),
            RepError::GroupMismatch(_) => LibError::Malformed(e.to_string()),
            RepError::CarrierTooLarge { .. } => LibError::Other("within size limits".into(), e.to_string()),
        }
    }
}

impl From<ReconError> for LibError {
    fn from(e: ReconError) -> Self {
        match e {
            ReconError::ReconstructionMismatch(r) => LibError::Reports(r),
            ReconError::Kosmos(k) => k.into(),
            ReconError::Hopf(h) => h.into(),
            ReconError::Rep(r) => r.into(),
            ReconError::RoundTripFailure(_) => LibError::Other("round trip".into(), e.to_string()),
        }
    }
}

impl From<TorsorError> for LibError {
    fn from(e: TorsorError) -> Self {
        match e {
            TorsorError::ActionLaw(r) | TorsorError::NotTorsorMorphism(r) => LibError::Reports(r),
            TorsorError::Kosmos(k) => k.into(),
            TorsorError::Hopf(h) => h.into(),
            TorsorError::Rep(r) => r.into(),
            TorsorError::Recon(r) => r.into(),
            TorsorError::TauNotIso(_) => LibError::Other("shear map is invertible".into(), e.to_string()),
            TorsorError::EmptyCarrier | TorsorError::NotDimTwo(_) | TorsorError::NotUnital => {
                LibError::Malformed(e.to_string())
            }
            TorsorError::RoundTripFailure(_) => LibError::Other("round trip".into(), e.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<InputDoc, serde_json::Error> {
        serde_json::from_str(s)
    }

    #[test]
    fn rationals_are_strings() {
        assert_eq!(parse_rational("-3/6"), Some(Rat::new((-1).into(), 2.into())));
        assert_eq!(parse_rational("7"), Some(Rat::from_integer(7.into())));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational("1 /2"), None);
    }

    #[test]
    fn kind_tags() {
        let d = parse(r#"{"kind":"finset-group","order":1,"mul":[[0]],"unit":0,"inv":[0]}"#).unwrap();
        assert_eq!(d.kind(), "finset-group");
        assert!(parse(r#"{"kind":"finset-group","order":1,"mul":[[0]],"unit":0,"inv":[0],"extra":1}"#).is_err());
        assert!(parse(r#"{"kind":"nope"}"#).is_err());
    }

    #[test]
    fn catalog_groups_and_inline_refs() {
        let l = Loader::new(".");
        let d = parse(r#"{"kind":"gal-rep","group":"z2","size":2,"action":[[0,1],[1,0]]}"#).unwrap();
        assert!(matches!(l.build(&d, "t"), Ok(Object::GalRep(_))));
        let d = parse(
            r#"{"kind":"gal-rep","group":{"kind":"finset-group","order":1,"mul":[[0]],"unit":0,"inv":[0]},
                "size":3,"action":[[0,1,2]]}"#,
        )
        .unwrap();
        assert!(matches!(l.build(&d, "t"), Ok(Object::GalRep(_))));
        let d = parse(r#"{"kind":"gal-rep","group":"z7","size":1,"action":[[0]]}"#).unwrap();
        assert!(matches!(l.build(&d, "t"), Err(BuildError::Schema(_))));
    }

    #[test]
    fn broken_table_is_invalid_not_malformed() {
        let d = parse(r#"{"kind":"finset-group","order":2,"mul":[[0,1],[1,1]],"unit":0,"inv":[0,1]}"#).unwrap();
        match Loader::new(".").build(&d, "t") {
            Err(BuildError::Invalid(r)) => assert!(r.iter().any(|r| !r.passed)),
            other => panic!("{other:?}"),
        }
        let d = parse(r#"{"kind":"finset-group","order":2,"mul":[[0,1],[1,5]],"unit":0,"inv":[0,1]}"#).unwrap();
        assert!(matches!(Loader::new(".").build(&d, "t"), Err(BuildError::Schema(_))));
    }

    #[test]
    fn shapes_are_enforced() {
        let d = parse(r#"{"kind":"comm-alg","dim":1,"mul":[["1","0"]],"unit":["1"]}"#).unwrap();
        assert!(matches!(Loader::new(".").build(&d, "t"), Err(BuildError::Schema(_))));
        let d = parse(r#"{"kind":"comm-alg","dim":1,"mul":[["1"]],"unit":["1"]}"#).unwrap();
        assert!(matches!(Loader::new(".").build(&d, "t"), Ok(Object::Alg(_))));
    }
}
