use std::collections::HashMap;

use super::element::NCElement;
use super::gen::Gen;
use super::tensor::TensorElement;
use super::AlgebraError;
use crate::scalars::Coeff;

/// An algebra (anti-)homomorphism given on generators, optionally composed
/// with `q -> q^{-1}` on coefficients.
#[derive(Clone)]
pub struct GeneratorMap<S> {
    pub images: HashMap<Gen, NCElement<S>>,
    /// Reverse the order of products.
    pub anti: bool,
    /// Apply `bar` to every coefficient.
    pub invert_q: bool,
}

impl<S: Coeff> GeneratorMap<S> {
    pub fn new(anti: bool, invert_q: bool) -> Self {
        GeneratorMap { images: HashMap::new(), anti, invert_q }
    }

    pub fn set(&mut self, g: Gen, image: NCElement<S>) {
        self.images.insert(g, image);
    }

    pub fn image(&self, g: &Gen) -> Result<&NCElement<S>, AlgebraError> {
        self.images.get(g).ok_or_else(|| AlgebraError::MissingImage(g.to_string()))
    }

    pub fn apply_word(&self, w: &[Gen]) -> Result<NCElement<S>, AlgebraError> {
        let mut out = NCElement::one();
        for g in w {
            let x = self.image(g)?;
            out = if self.anti { x * &out } else { &out * x };
        }
        Ok(out)
    }

    pub fn apply(&self, x: &NCElement<S>) -> Result<NCElement<S>, AlgebraError> {
        let mut out = NCElement::zero();
        for (w, c) in x.terms() {
            let c = if self.invert_q { c.bar() } else { c.clone() };
            out.add_scaled(&self.apply_word(w)?, &c);
        }
        Ok(out)
    }

    /// Applies the map to both tensor factors.
    pub fn apply_tensor(&self, t: &TensorElement<S>) -> Result<TensorElement<S>, AlgebraError> {
        let bar = |x: &TensorElement<S>| -> TensorElement<S> {
            let mut out = TensorElement::zero(x.cap());
            for (k, c) in x.terms() {
                out.add_term(k.left.clone(), k.right.clone(), k.z, c.bar());
            }
            out
        };
        let src = if self.invert_q { bar(t) } else { t.clone() };
        src.map_factors(|w| self.apply_word(w), |w| self.apply_word(w))
    }
}
