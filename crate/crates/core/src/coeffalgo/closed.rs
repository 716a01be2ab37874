use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::combinat::factorial;
use crate::cubic::DegreeSpec;
use crate::positivity::ExponentMatrix;

/// `(4t)!^2 (1/((t-1)!(t+1)!) - 1/t!^2)^4`, the coefficient of the monomial
/// [`t_family_matrix`] in `S`. At `t = 0` the value is 1.
///
/// The bracket equals `-1/(t!(t+1)!)`. Putting `t!` in the numerator of its
/// first term instead gives the same values for `t <= 2` only.
pub fn closed_form_t(t: u32) -> BigInt {
    if t == 0 {
        return BigInt::one();
    }
    let ft = factorial(t);
    let inner = BigRational::new(BigInt::one(), factorial(t - 1) * factorial(t + 1))
        - BigRational::new(BigInt::one(), &ft * &ft);
    let f4t = factorial(4 * t);
    let v = BigRational::from_integer(&f4t * &f4t) * inner.pow(4);
    assert!(v.is_integer(), "closed form is not an integer at t = {t}");
    v.to_integer()
}

/// The monomial with `4t` columns `(3,1,0)`, `4t` columns `(0,1,3)` and `t`
/// columns `(0,4,0)`, together with its degree spec `(3t+1, 3t+1, 3t+1)`.
pub fn t_family_matrix(t: u32) -> (ExponentMatrix, DegreeSpec) {
    let t = t as usize;
    let mut cols: Vec<[u8; 3]> = Vec::with_capacity(9 * t);
    cols.extend(core::iter::repeat([3, 1, 0]).take(4 * t));
    cols.extend(core::iter::repeat([0, 1, 3]).take(4 * t));
    cols.extend(core::iter::repeat([0, 4, 0]).take(t));
    let d = 3 * t as u32 + 1;
    (ExponentMatrix::from_columns(cols), DegreeSpec::new(d, d, d).expect("valid degrees"))
}

/// `s · [3,0,1; 1,3,0; 0,1,3]` with degree spec `(s+1, s+1, s+1)`.
pub fn example_4_1_matrix(s: u32) -> (ExponentMatrix, DegreeSpec) {
    let base = ExponentMatrix::from_columns(alloc::vec![[3, 1, 0], [0, 3, 1], [1, 0, 3]]);
    let d = s + 1;
    (base.replicate(s as usize), DegreeSpec::new(d, d, d).expect("valid degrees"))
}
