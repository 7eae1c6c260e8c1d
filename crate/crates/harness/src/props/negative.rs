//! Negative controls: plausible but false identities. A working harness
//! must report a counterexample for each.

use revpaste::linalg;

use crate::gen::Gen;
use crate::outcome::Outcome;
use crate::registry::Property;

pub const PROPERTIES: &[Property] = &[
    Property::check("NC-det-row-reversal", &[], "row reversal preserves the determinant (false for n = 2)", det_row_reversal),
    Property::check("NC-row-reversal-product", &[], "row reversal of a product reverses the left factor (false)", row_reversal_product),
];

/// `det(ℛ_r A) = (−1)^⌊n/2⌋ det A`, so at `n = 2` the sign flips.
fn det_row_reversal(g: &mut Gen) -> Outcome {
    let a = g.square(2);
    let (lhs, rhs) = (linalg::exact_determinant(&a.reverse_rows())?, linalg::exact_determinant(&a)?);
    ensure_eq!(lhs, rhs, "det(R_r A) ≠ det A", "A" => a);
    Ok(())
}

/// The true identity is `ℛ_r(AB) = A·ℛ_r(B)`.
fn row_reversal_product(g: &mut Gen) -> Outcome {
    let n = g.dim_at_least(2);
    let (a, b) = (g.square(n), g.square(n));
    ensure_eq!(a.matmul(&b)?.reverse_rows(), a.reverse_rows().matmul(&b)?, "R_r(AB) ≠ R_r(A)·B", "A" => a, "B" => b);
    Ok(())
}
