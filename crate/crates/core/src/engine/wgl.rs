use super::Engine;
use crate::perm::Permutation;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// `w_gl(s)` with a fresh engine.
pub fn eval_wgl<S: Scalar>(s: &Permutation) -> Poly<S> {
    Engine::gl().eval(s)
}

/// Product of `w_gl` over the factors.
pub fn eval_wgl_product<S: Scalar>(factors: &[Permutation]) -> Poly<S> {
    Engine::gl().eval_product(factors)
}
