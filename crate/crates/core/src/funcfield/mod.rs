//! Exact arithmetic in `A = F_p(x_1, ..., x_N)`.

mod descent;
mod gcd;
mod poly;
mod ratfunc;
mod scalar;

pub use descent::{descend, frobenius_descent, is_pe_power, reassemble};
pub use gcd::gcd;
pub use poly::{Monomial, Poly};
pub use ratfunc::{sum, RatFunc};
pub use scalar::{is_prime, PolyRing, PrimeScalar};

/// `ratfunc_normalize`: canonical form of `num / den`.
pub fn ratfunc_normalize(num: Poly, den: Poly) -> crate::Result<RatFunc> {
    RatFunc::normalize(num, den)
}

/// `partial_derivative`.
pub fn partial_derivative(f: &RatFunc, var: usize) -> RatFunc {
    f.partial_derivative(var)
}
