use crate::error::Result;

/// A pointwise disagreement between two parallel morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Difference {
    /// Domain element (FinSet) or standard basis vector (vector spaces).
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Operations shared by the morphisms of both ambient categories.
pub trait Morphism: Clone + std::fmt::Debug + Sized {
    /// Cardinality or dimension of the domain.
    fn dom_len(&self) -> usize;
    /// Cardinality or dimension of the codomain.
    fn cod_len(&self) -> usize;
    fn identity_like(&self, len: usize) -> Self;
    /// `self ∘ other`.
    fn compose(&self, other: &Self) -> Result<Self>;
    fn tensor(&self, other: &Self) -> Self;
    /// Smallest index where the two morphisms disagree, if any.
    fn first_difference(&self, other: &Self) -> Result<Option<Difference>>;
    fn inverse(&self) -> Result<Self>;

    fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.first_difference(other)?.is_none())
    }
}

/// Composes right to left: `compose_all(&[h, g, f]) = h ∘ g ∘ f`.
pub fn compose_all<M: Morphism>(maps: &[&M]) -> Result<M> {
    let (last, rest) = maps.split_last().expect("compose_all needs at least one map");
    let mut acc = (*last).clone();
    for m in rest.iter().rev() {
        acc = m.compose(&acc)?;
    }
    Ok(acc)
}

/// Tensor product of a nonempty list of morphisms, left to right.
pub fn tensor_all<M: Morphism>(maps: &[&M]) -> M {
    let (first, rest) = maps.split_first().expect("tensor_all needs at least one map");
    rest.iter().fold((*first).clone(), |acc, m| acc.tensor(m))
}
