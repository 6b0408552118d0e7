use super::InvolutiveAlgebra;
use crate::report::{CheckReport, Mode};
use crate::scalars::{Field, Matrix};

/// Checks that the linear map `m` (column `i` is the image of `e_i`) is an
/// isomorphism of algebras with involution from `a` to `b`.
pub fn verify_isomorphism<F: Field>(
    name: &str,
    a: &InvolutiveAlgebra<F>,
    b: &InvolutiveAlgebra<F>,
    m: &Matrix<F::Elem>,
) -> CheckReport {
    let f = a.field();
    let mut r = CheckReport::new(name, "M(1) = 1, M(xy) = M(x)M(y), M(conj x) = conj M(x)", Mode::Exhaustive);
    if m.rows() != b.dim() || m.cols() != a.dim() || a.dim() != b.dim() {
        r.record(false, || format!("map is {}x{} between dimensions {} and {}", m.rows(), m.cols(), a.dim(), b.dim()));
        return r;
    }
    r.record(m.rank(f) == a.dim(), || "map is not of full rank".into());
    r.record(m.apply(f, a.unit()) == b.unit(), || "unit is not mapped to unit".into());
    let images: Vec<Vec<F::Elem>> = (0..a.dim()).map(|i| m.column(i)).collect();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = m.apply(f, &a.mul(&a.basis(i), &a.basis(j)));
            let rhs = b.mul(&images[i], &images[j]);
            r.record(lhs == rhs, || {
                format!(
                    "M({}·{}) = {} but M({})·M({}) = {}",
                    a.names()[i],
                    a.names()[j],
                    b.format_element(&lhs),
                    a.names()[i],
                    a.names()[j],
                    b.format_element(&rhs)
                )
            });
        }
        let lhs = m.apply(f, &a.conj(&a.basis(i)));
        let rhs = b.conj(&images[i]);
        r.record(lhs == rhs, || format!("involution not preserved on {}", a.names()[i]));
    }
    r
}
