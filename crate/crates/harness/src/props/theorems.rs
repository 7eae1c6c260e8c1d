//! Propositions, lemmas and theorems stated in terms of the reversing,
//! pasting and (anti)palindromicing mappings.

use revpaste::{
    antipalindromic_basis, apply_series, check_reversing_conjugation, jordan_transport, linalg,
    palindromic_basis, reversing_jordan, spectral_mapping_check, subspace_basis, Axis, QMatrix,
    QPolynomial, QVector, Rational, SubspaceKind,
};

use num_traits::Zero;

use super::{exchange, half, identity, projection, q, vector_rank};
use crate::gen::Gen;
use crate::outcome::Outcome;
use crate::registry::Property;

use SubspaceKind::{Waa, Wap, Wpa, Wpp, APA, PA};

pub const PROPERTIES: &[Property] = &[
    Property::check("Prop-reversing-1", &[], "reversal is a linear automorphism", reversing_1),
    Property::check("Prop-reversing-2", &[], "transformation matrix of reversal", reversing_2),
    Property::check("Prop-reversing-3", &[], "minimal and characteristic polynomial of reversal", reversing_3),
    Property::check("Prop-reversing-4", &[], "eigenspaces of reversal are orthogonal complements", reversing_4),
    Property::check("Prop-reversing-5", &[], "K^n is the sum of the eigenspaces of reversal", reversing_5),
    Property::check("Prop-reversing-6", &[], "eigenspace dimensions of reversal", reversing_6),
    Property::check("Prop-palindromicing-1", &[], "palindromicing maps are canonical", palindromicing_1),
    Property::check("Prop-palindromicing-2", &[], "kernel of one palindromicing map is the image of the other", palindromicing_2),
    Property::check("Prop-palindromicing-3", &[], "palindromicing maps in matrix form", palindromicing_3),
    Property::check("T-paste-1", &[], "embeddings are linear isomorphisms onto their images", paste_1),
    Property::check("T-paste-2", &[], "transformation matrices of the embeddings", paste_2),
    Property::check("T-paste-3", &[], "images of the embeddings are complementary", paste_3),
    Property::check("T-paste-4", &[], "images of the embeddings are orthogonal", paste_4),
    Property::check("T-paste-5", &[], "pasting is the sum of the embeddings", paste_5),
    Property::check("T-paste-embed-rows", &[], "row pasting through embedding matrices", paste_embed_rows),
    Property::check("T-paste-embed-cols", &[], "column pasting through embedding matrices", paste_embed_cols),
    Property::check("L-vectorize", &[], "vectorization is a linear isomorphism", vectorize),
    Property::check("Prop-matrix-1", &[], "the three matrix reversals are automorphisms", matrix_1),
    Property::check("Prop-matrix-2", &[], "transformation matrices of the matrix reversals", matrix_2),
    Property::check("Prop-matrix-3", &[], "full reversal as an exchange sandwich", matrix_3),
    Property::check("Prop-matrix-4", &[], "product of the exchange matrices for square shapes", matrix_4),
    Property::check("Prop-matrix-5", &[], "PA and aPA are orthogonal", matrix_5),
    Property::check("Prop-matrix-6", &[], "fully palindromic iff row and column reversals agree", matrix_6),
    Property::check("Prop-matrix-7", &[], "fully antipalindromic iff row and column reversals are opposite", matrix_7),
    Property::check("Prop-matrix-8", &[], "PA and aPA split into double-parity subspaces", matrix_8),
    Property::check("Prop-matrix-9", &[], "dimensions of the full and double-parity eigenspaces", matrix_9),
    Property::check("Prop-adjugate-1", &[], "transpose of a row pasting", adjugate_1),
    Property::check("Prop-adjugate-2", &[], "full reversal commutes with the adjugate", adjugate_2),
    Property::check("Prop-adjugate-3", &[], "augmented matrix is a row pasting", adjugate_3),
    Property::check("Prop-palmat-1", &[], "matrix palindromicing maps are canonical", palmat_1),
    Property::check("Prop-palmat-2", &[], "kernels and images of the matrix palindromicing maps", palmat_2),
    Property::check("Prop-palmat-3", &[], "matrix palindromicing maps through exchange matrices", palmat_3),
    Property::check("Lemma-diag-1", &[], "full reversal of the diagonal", diag_1),
    Property::check("Lemma-diag-2", &[], "trace is invariant under full reversal", diag_2),
    Property::check("Lemma-diag-3", &[], "diagonal matrix: row and column reversals agree iff the diagonal is palindromic", diag_3),
    Property::check("Lemma-diag-4", &[], "diagonal matrix: palindromic diagonal iff fully palindromic", diag_4),
    Property::check("T1-1", &[], "diagonal of the shifted full reversal", t1_1),
    Property::check("T1-2", &[], "A and its full reversal share the characteristic polynomial", t1_2),
    Property::check("T1-3", &[], "row and column reversals share the characteristic polynomial", t1_3),
    Property::check("T1-4", &[], "Cayley-Hamilton for the full reversal", t1_4),
    Property::check("T1-5", &[], "Cayley-Hamilton for the row and column reversals", t1_5),
    Property::check("T-jordan", &[], "Jordan form of the reversing matrix", t_jordan),
    Property::check("T-jordan-transport", &[], "Jordan decomposition transported by full reversal", t_jordan_transport),
    Property::check("T2-2", &[], "palindromic Jordan data gives a palindromic matrix", t2_2),
    Property::check("T-eig-1", &[], "f of an eigenvalue is an eigenvalue of f of the full reversal", t_eig_1),
    Property::check("T-eig-2", &[], "f of an eigenvalue of the row reversal is one of f of the column reversal", t_eig_2),
    Property::check("T-analytic-1", &[], "f of the row reversal via the column reversal", t_analytic_1),
    Property::check("T-analytic-2", &[], "f of the column reversal via the row reversal", t_analytic_2),
    Property::check("T-analytic-3", &[], "f commutes with full reversal", t_analytic_3),
    Property::check("T-analytic-pow", &[], "powers of the reversals", t_analytic_pow),
];

fn reversing_1(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (v, w, a) = (g.vector(n), g.vector(n), g.rational());
    ensure_eq!((&v + &w).reversed(), &v.reversed() + &w.reversed(), "not additive", "v" => v, "w" => w);
    ensure_eq!(v.scale(&a).reversed(), v.reversed().scale(&a), "not homogeneous", "v" => v, "a" => a);
    ensure_eq!(v.reversed().reversed(), v, "not its own inverse", "v" => v);
    Ok(())
}

fn reversing_2(g: &mut Gen) -> Outcome {
    let v = g.any_vector();
    let n = v.len();
    let m = QMatrix::from_fn(n, n, |i, j| q((i == n - 1 - j) as i64))?;
    ensure_eq!(m, exchange(n), "exchange matrix entries", "n" => n);
    let row = QMatrix::row_matrix(&v).matmul(&m)?;
    ensure_eq!(row.row(0), v.reversed(), "row vector times M", "v" => v);
    ensure_eq!(&m * &v, v.reversed(), "M times column vector", "v" => v);
    Ok(())
}

fn reversing_3(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let m = exchange(n);
    let expected = &QPolynomial::from_ints(&[-1, 1]).pow(n.div_ceil(2)) * &QPolynomial::from_ints(&[1, 1]).pow(n / 2);
    ensure_eq!(linalg::charpoly(&m)?, expected, "characteristic polynomial", "n" => n);
    let minimal = QPolynomial::from_ints(&[-1, 0, 1]);
    ensure!(linalg::polyeval_matrix(&minimal, &m)?.is_zero(), "λ²−1 does not annihilate M", "n" => n);
    if n == 1 {
        g.note("n = 1: M = I, so the minimal polynomial is λ−1, a proper divisor of λ²−1");
    } else {
        ensure!(m != identity(n) && m != -&identity(n), "no linear factor annihilates M", "n" => n);
    }
    Ok(())
}

fn reversing_4(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (v, w) = (g.palindromic_vector(n), g.antipalindromic_vector(n));
    ensure_eq!(v.dot(&w)?, q(0), "eigenvectors not orthogonal", "v" => v, "w" => w);
    let (p, a) = (palindromic_basis::<Rational>(n)?, antipalindromic_basis::<Rational>(n)?);
    let cross = p.members().iter().all(|x| a.members().iter().all(|y| x.dot(y).map(|d| d == q(0)).unwrap_or(false)));
    ensure!(cross, "basis members not orthogonal", "n" => n);
    ensure_eq!(p.len() + a.len(), n, "dimensions are not complementary", "n" => n);
    Ok(())
}

fn reversing_5(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let joint = palindromic_basis::<Rational>(n)?.union(&antipalindromic_basis(n)?)?;
    ensure_eq!(vector_rank(joint.members()), n, "eigenvectors do not span", "n" => n);
    let v = g.vector(n);
    ensure_eq!(&v.palindromic_part() + &v.antipalindromic_part(), v, "decomposition", "v" => v);
    Ok(())
}

fn reversing_6(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let m = exchange(n);
    ensure_eq!(linalg::nullity(&(&m - &identity(n))), n.div_ceil(2), "dim ker(R − id)", "n" => n);
    ensure_eq!(linalg::nullity(&(&m + &identity(n))), n / 2, "dim ker(R + id)", "n" => n);
    Ok(())
}

fn palindromicing_1(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (v, w) = (g.vector(n), g.palindromic_vector(n));
    let (p, a) = (v.palindromic_part(), v.antipalindromic_part());
    ensure_eq!(p, (&v + &v.reversed()).scale(&half()), "F_p formula", "v" => v);
    ensure_eq!(a, (&v - &v.reversed()).scale(&half()), "F_a formula", "v" => v);
    ensure!(p.is_palindromic() && a.is_antipalindromic(), "images have the wrong parity", "v" => v);
    ensure_eq!(&p + &a, v, "F_p + F_a is not the identity", "v" => v);
    ensure_eq!(&p - &a, v.reversed(), "F_p − F_a is not reversal", "v" => v);
    ensure_eq!(w.palindromic_part(), w, "F_p is not onto W_p", "w" => w);
    Ok(())
}

fn palindromicing_2(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let v = g.vector(n);
    ensure!(v.antipalindromic_part().palindromic_part().is_zero(), "F_p ∘ F_a ≠ 0", "v" => v);
    ensure!(v.palindromic_part().antipalindromic_part().is_zero(), "F_a ∘ F_p ≠ 0", "v" => v);
    let u = if g.coin() { g.antipalindromic_vector(n) } else { g.vector(n) };
    ensure_eq!(u.palindromic_part().is_zero(), u.is_antipalindromic(), "ker F_p ≠ W_a", "u" => u);
    let u = if g.coin() { g.palindromic_vector(n) } else { g.vector(n) };
    ensure_eq!(u.antipalindromic_part().is_zero(), u.is_palindromic(), "ker F_a ≠ W_p", "u" => u);
    Ok(())
}

/// The matrices M + I and M − I are 2F_p and −2F_a.
fn palindromicing_3(g: &mut Gen) -> Outcome {
    let v = g.any_vector();
    let n = v.len();
    let (plus, minus) = (&exchange(n) + &identity(n), &exchange(n) - &identity(n));
    ensure_eq!(&plus * &v, v.palindromic_part().scale(&q(2)), "(M + I)v ≠ 2F_p(v)", "v" => v);
    ensure_eq!(&minus * &v, v.antipalindromic_part().scale(&q(-2)), "(M − I)v ≠ −2F_a(v)", "v" => v);
    Ok(())
}

fn paste_1(g: &mut Gen) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let (v, v2, w, w2, a) = (g.vector(n), g.vector(n), g.vector(m), g.vector(m), g.rational());
    let lhs = (&v + &v2.scale(&a)).embed_left(m);
    ensure_eq!(lhs, &v.embed_left(m) + &v2.embed_left(m).scale(&a), "φ₁ is not linear", "v" => v, "v2" => v2, "a" => a);
    let lhs = (&w + &w2.scale(&a)).embed_right(n);
    ensure_eq!(lhs, &w.embed_right(n) + &w2.embed_right(n).scale(&a), "φ₂ is not linear", "w" => w, "w2" => w2, "a" => a);
    ensure_eq!(v.embed_left(m).is_zero(), v.is_zero(), "φ₁ is not injective", "v" => v);
    ensure_eq!(w.embed_right(n).is_zero(), w.is_zero(), "φ₂ is not injective", "w" => w);
    let z = v.embed_left(m);
    ensure!(z.entries()[n..].iter().all(|x| *x == q(0)), "φ₁ leaves V'", "v" => v);
    Ok(())
}

fn paste_2(g: &mut Gen) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let (v, w) = (g.vector(n), g.vector(m));
    let m1 = QMatrix::from_fn(n, n + m, |i, j| q((i == j) as i64))?;
    let m2 = QMatrix::from_fn(m, n + m, |i, j| q((i + n == j) as i64))?;
    ensure_eq!(QMatrix::row_matrix(&v).matmul(&m1)?.row(0), v.embed_left(m), "v·M_φ₁", "v" => v);
    ensure_eq!(QMatrix::row_matrix(&w).matmul(&m2)?.row(0), w.embed_right(n), "w·M_φ₂", "w" => w);
    Ok(())
}

fn paste_3(g: &mut Gen) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let images: Vec<QVector> = (0..n)
        .map(|i| QVector::unit(n, i).map(|e| e.embed_left(m)))
        .chain((0..m).map(|j| QVector::unit(m, j).map(|e| e.embed_right(n))))
        .collect::<Result<_, _>>()?;
    ensure_eq!(vector_rank(&images), n + m, "images do not span K^(n+m)", "n" => n, "m" => m);
    Ok(())
}

fn paste_4(g: &mut Gen) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let (v, w) = (g.vector(n), g.vector(m));
    ensure_eq!(v.embed_left(m).dot(&w.embed_right(n))?, q(0), "images not orthogonal", "v" => v, "w" => w);
    Ok(())
}

fn paste_5(g: &mut Gen) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let (v, w) = (g.vector(n), g.vector(m));
    ensure_eq!(v.paste(&w), &v.embed_left(m) + &w.embed_right(n), "P ≠ S∘φ", "v" => v, "w" => w);
    Ok(())
}

fn paste_embed_rows(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (a, b) = (g.with_rows(n), g.with_rows(n));
    let (m, p) = (a.cols(), b.cols());
    let e1 = QMatrix::from_fn(m, m + p, |i, j| q((i == j) as i64))?;
    let e2 = QMatrix::from_fn(p, m + p, |i, j| q((i + m == j) as i64))?;
    let embedded = &a.matmul(&e1)? + &b.matmul(&e2)?;
    ensure_eq!(a.paste_rows(&b)?, embedded, "A·E₁ + B·E₂", "A" => a, "B" => b);
    ensure_eq!(a.paste_rows_via_embedding(&b)?, embedded, "library embedding form", "A" => a, "B" => b);
    Ok(())
}

fn paste_embed_cols(g: &mut Gen) -> Outcome {
    let m = g.dim();
    let (a, b) = (g.with_cols(m), g.with_cols(m));
    let (n, l) = (a.rows(), b.rows());
    let f1 = QMatrix::from_fn(n + l, n, |i, j| q((i == j) as i64))?;
    let f2 = QMatrix::from_fn(n + l, l, |i, j| q((i == j + n) as i64))?;
    let embedded = &f1.matmul(&a)? + &f2.matmul(&b)?;
    ensure_eq!(a.paste_cols(&b)?, embedded, "F₁·A + F₂·B", "A" => a, "B" => b);
    ensure_eq!(a.paste_cols_via_embedding(&b)?, embedded, "library embedding form", "A" => a, "B" => b);
    Ok(())
}

fn vectorize(g: &mut Gen) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let (a, b, x) = (g.matrix(n, m), g.matrix(n, m), g.rational());
    ensure_eq!((&a + &b.scale(&x)).vectorize(), &a.vectorize() + &b.vectorize().scale(&x), "not linear", "A" => a, "B" => b);
    ensure_eq!(QMatrix::devectorize(&a.vectorize(), n, m)?, a, "not injective", "A" => a);
    let v = g.vector(n * m);
    ensure_eq!(QMatrix::devectorize(&v, n, m)?.vectorize(), v, "not surjective", "v" => v);
    Ok(())
}

fn matrix_1(g: &mut Gen) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let (a, b, x) = (g.matrix(n, m), g.matrix(n, m), g.rational());
    for axis in Axis::ALL {
        let lhs = (&a + &b.scale(&x)).reverse(axis);
        ensure_eq!(lhs, &a.reverse(axis) + &b.reverse(axis).scale(&x), "not linear", "axis" => axis, "A" => a, "B" => b);
        ensure_eq!(a.reverse(axis).reverse(axis), a, "not invertible", "axis" => axis, "A" => a);
    }
    Ok(())
}

fn matrix_2(g: &mut Gen) -> Outcome {
    let a = g.any_matrix();
    let (n, m) = a.shape();
    ensure_eq!(a.reverse_rows(), a.matmul(&exchange(m))?, "R_r(A) ≠ A·M_r", "A" => a);
    ensure_eq!(a.reverse_cols(), exchange(n).matmul(&a)?, "R_c(A) ≠ M_c·A", "A" => a);
    ensure_eq!(a.reverse_full().vectorize(), &exchange(n * m) * &a.vectorize(), "vec(R(A)) ≠ M·vec(A)", "A" => a);
    Ok(())
}

fn matrix_3(g: &mut Gen) -> Outcome {
    let a = g.any_matrix();
    let (n, m) = a.shape();
    ensure_eq!(a.reverse_full(), exchange(n).matmul(&a)?.matmul(&exchange(m))?, "R(A) ≠ M_c·A·M_r", "A" => a);
    Ok(())
}

/// Only square shapes: for `n ≠ m` the product `M_c·M_r` is not defined.
fn matrix_4(g: &mut Gen) -> Outcome {
    let n = g.dim();
    ensure_eq!(exchange(n).matmul(&exchange(n))?, identity(n), "M·M ≠ I", "n" => n);
    Ok(())
}

fn matrix_5(g: &mut Gen) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let (a, b) = (g.member(n, m, PA), g.member(n, m, APA));
    ensure_eq!(a.vectorize().dot(&b.vectorize())?, q(0), "not orthogonal", "A" => a, "B" => b);
    ensure_eq!(PA.dimension(n, m) + APA.dimension(n, m), n * m, "not complementary", "n" => n, "m" => m);
    Ok(())
}

fn matrix_6(g: &mut Gen) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let a = if g.coin() { g.member(n, m, PA) } else { g.matrix(n, m) };
    ensure_eq!(a.reverse_full() == a, a.reverse_rows() == a.reverse_cols(), "kernels differ", "A" => a);
    Ok(())
}

fn matrix_7(g: &mut Gen) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let a = if g.coin() { g.member(n, m, APA) } else { g.matrix(n, m) };
    ensure_eq!(a.reverse_full() == -&a, a.reverse_rows() == -&a.reverse_cols(), "kernels differ", "A" => a);
    Ok(())
}

fn matrix_8(g: &mut Gen) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let even = subspace_basis::<Rational>(n, m, Wpp)?.union(&subspace_basis(n, m, Waa)?)?;
    let odd = subspace_basis::<Rational>(n, m, Wpa)?.union(&subspace_basis(n, m, Wap)?)?;
    ensure!(even.members().iter().all(|x| PA.contains(x)), "W_pp ⊕ W_aa not inside PA", "n" => n, "m" => m);
    ensure!(odd.members().iter().all(|x| APA.contains(x)), "W_pa ⊕ W_ap not inside aPA", "n" => n, "m" => m);
    ensure_eq!(even.rank(), PA.dimension(n, m), "W_pp ⊕ W_aa ≠ PA", "n" => n, "m" => m);
    ensure_eq!(odd.rank(), APA.dimension(n, m), "W_pa ⊕ W_ap ≠ aPA", "n" => n, "m" => m);
    ensure_eq!(even.union(&odd)?.rank(), n * m, "four-way sum does not span", "n" => n, "m" => m);
    Ok(())
}

fn matrix_9(g: &mut Gen) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let (cn, fnn, cm, fm) = (n.div_ceil(2), n / 2, m.div_ceil(2), m / 2);
    let printed = [
        (PA, (n * m).div_ceil(2)),
        (APA, n * m / 2),
        (Wpp, cn * cm),
        (Waa, fnn * fm),
        (Wpa, fnn * cm),
        (Wap, fnn * cm),
    ];
    for (kind, formula) in printed {
        let actual = super::kernel_dim(n, m, kind);
        ensure_eq!(kind.dimension(n, m), actual, "dimension", "kind" => kind, "n" => n, "m" => m);
        if formula != actual {
            g.note(format!("{kind} at {n}x{m}: printed formula gives {formula}, dimension is {actual}"));
        }
    }
    Ok(())
}

fn adjugate_1(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (a, b) = (g.with_rows(n), g.with_rows(n));
    ensure_eq!(a.paste_rows(&b)?.transpose(), a.transpose().paste_cols(&b.transpose())?, "transpose", "A" => a, "B" => b);
    Ok(())
}

fn adjugate_2(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let a = if g.coin() { g.singular(n) } else { g.square(n) };
    let lhs = linalg::adjugate(&a)?.reverse_full();
    ensure_eq!(lhs, linalg::adjugate(&a.reverse_full())?, "R(adj A) ≠ adj(R(A))", "A" => a);
    Ok(())
}

fn adjugate_3(g: &mut Gen) -> Outcome {
    let a = g.any_matrix();
    let b = g.vector(a.rows());
    ensure_eq!(a.augmented(&b)?, a.paste_rows(&QMatrix::column(&b))?, "augmented matrix", "A" => a, "b" => b);
    Ok(())
}

fn palmat_1(g: &mut Gen) -> Outcome {
    let a = g.any_matrix();
    let kinds = [(Axis::Rows, SubspaceKind::WpR, SubspaceKind::WaR), (Axis::Cols, SubspaceKind::WpC, SubspaceKind::WaC), (Axis::Full, PA, APA)];
    for (axis, pal, anti) in kinds {
        let (p, n) = (a.project_palindromic(axis), a.project_antipalindromic(axis));
        ensure_eq!(p, projection(&a, axis, false), "F_p formula", "axis" => axis, "A" => a);
        ensure_eq!(n, projection(&a, axis, true), "F_a formula", "axis" => axis, "A" => a);
        ensure!(pal.contains(&p) && anti.contains(&n), "images have the wrong parity", "axis" => axis, "A" => a);
        ensure_eq!(&p + &n, a, "F_p + F_a is not the identity", "axis" => axis, "A" => a);
        ensure_eq!(&p - &n, a.reverse(axis), "F_p − F_a is not the reversal", "axis" => axis, "A" => a);
    }
    Ok(())
}

fn palmat_2(g: &mut Gen) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let a = g.matrix(n, m);
    let kinds = [(Axis::Rows, SubspaceKind::WpR, SubspaceKind::WaR), (Axis::Cols, SubspaceKind::WpC, SubspaceKind::WaC), (Axis::Full, PA, APA)];
    for (axis, pal, anti) in kinds {
        ensure!(a.project_antipalindromic(axis).project_palindromic(axis).is_zero(), "F_p ∘ F_a ≠ 0", "axis" => axis, "A" => a);
        ensure!(a.project_palindromic(axis).project_antipalindromic(axis).is_zero(), "F_a ∘ F_p ≠ 0", "axis" => axis, "A" => a);
        let b = if g.coin() { g.member(n, m, anti) } else { g.matrix(n, m) };
        ensure_eq!(b.project_palindromic(axis).is_zero(), anti.contains(&b), "ker F_p ≠ Im F_a", "axis" => axis, "B" => b);
        let b = if g.coin() { g.member(n, m, pal) } else { g.matrix(n, m) };
        ensure_eq!(b.project_antipalindromic(axis).is_zero(), pal.contains(&b), "ker F_a ≠ Im F_p", "axis" => axis, "B" => b);
    }
    Ok(())
}

/// Exchange-matrix forms, up to the dropped factor ½: `A(M+I) = 2F_p^r(A)`,
/// `A(M−I) = −2F_a^r(A)`, likewise on the left for columns, and
/// `MAM ± A = ±2F(A)` for full reversal.
fn palmat_3(g: &mut Gen) -> Outcome {
    let a = g.any_matrix();
    let (n, m) = a.shape();
    let (two, minus_two) = (q(2), q(-2));
    let (mn, mm) = (exchange(n), exchange(m));
    let cases = [
        (a.matmul(&(&mm + &identity(m)))?, a.project_palindromic(Axis::Rows).scale(&two), "A(M + I)"),
        (a.matmul(&(&mm - &identity(m)))?, a.project_antipalindromic(Axis::Rows).scale(&minus_two), "A(M − I)"),
        ((&mn + &identity(n)).matmul(&a)?, a.project_palindromic(Axis::Cols).scale(&two), "(M + I)A"),
        ((&mn - &identity(n)).matmul(&a)?, a.project_antipalindromic(Axis::Cols).scale(&minus_two), "(M − I)A"),
        (&mn.matmul(&a)?.matmul(&mm)? + &a, a.project_palindromic(Axis::Full).scale(&two), "MAM + A"),
        (&mn.matmul(&a)?.matmul(&mm)? - &a, a.project_antipalindromic(Axis::Full).scale(&minus_two), "MAM − A"),
    ];
    for (lhs, rhs, form) in cases {
        ensure_eq!(lhs, rhs, format!("{form} mismatch"), "A" => a);
    }
    Ok(())
}

fn diag_1(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let a = g.square(n);
    ensure_eq!(a.diagonal()?.reversed(), a.reverse_full().diagonal()?, "diagonal", "A" => a);
    Ok(())
}

fn diag_2(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let a = g.square(n);
    ensure_eq!(linalg::trace(&a)?, linalg::trace(&a.reverse_full())?, "trace", "A" => a);
    Ok(())
}

fn diagonal_draw(g: &mut Gen) -> QMatrix {
    let n = g.dim();
    let d = if g.coin() { g.palindromic_vector(n) } else { g.vector(n) };
    QMatrix::diagonal_matrix(&d)
}

fn diag_3(g: &mut Gen) -> Outcome {
    let d = diagonal_draw(g);
    let lhs = d.reverse_cols() == d.reverse_rows();
    let rhs = d.diagonal()? == d.reverse_full().diagonal()?;
    ensure_eq!(lhs, rhs, "equivalence fails", "D" => d);
    Ok(())
}

fn diag_4(g: &mut Gen) -> Outcome {
    let d = diagonal_draw(g);
    let lhs = d.diagonal()?.reversed() == d.diagonal()?;
    ensure_eq!(lhs, d.reverse_full() == d, "equivalence fails", "D" => d);
    Ok(())
}

fn t1_1(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (a, lambda) = (g.square(n), g.rational());
    let shift = identity(n).scale(&lambda);
    let lhs = (&a.reverse_full() - &shift).diagonal()?;
    ensure_eq!(lhs, (&a - &shift).diagonal()?.reversed(), "shifted diagonal", "A" => a, "lambda" => lambda);
    Ok(())
}

fn t1_2(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let a = g.square(n);
    ensure_eq!(linalg::charpoly(&a)?, linalg::charpoly(&a.reverse_full())?, "p ≠ q", "A" => a);
    Ok(())
}

fn t1_3(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let a = g.square(n);
    ensure_eq!(linalg::charpoly(&a.reverse_cols())?, linalg::charpoly(&a.reverse_rows())?, "r ≠ s", "A" => a);
    Ok(())
}

fn t1_4(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let a = g.square(n);
    let p = linalg::charpoly(&a)?;
    let (pa, pr) = (linalg::polyeval_matrix(&p, &a)?, linalg::polyeval_matrix(&p, &a.reverse_full())?);
    ensure_eq!(pa, pr, "p(A) ≠ p(R(A))", "A" => a);
    ensure!(pa.is_zero(), "p(A) ≠ 0", "A" => a);
    Ok(())
}

/// Read with the shared polynomial `r = s`: `r(ℛ_r A) = r(ℛ_c A) = 0`. With
/// `p` the polynomial of `A` itself, `p(ℛ_r A) = ℛ(p(ℛ_c A))`.
fn t1_5(g: &mut Gen) -> Outcome {
    g.note("checked with r = charpoly(R_c A); with p = charpoly(A) the equality holds only after a full reversal of one side");
    let n = g.dim();
    let a = g.square(n);
    let (rr, rc) = (a.reverse_rows(), a.reverse_cols());
    let r = linalg::charpoly(&rc)?;
    let (lhs, rhs) = (linalg::polyeval_matrix(&r, &rr)?, linalg::polyeval_matrix(&r, &rc)?);
    ensure_eq!(lhs, rhs, "r(R_r A) ≠ r(R_c A)", "A" => a);
    ensure!(lhs.is_zero(), "r(R_r A) ≠ 0", "A" => a);
    let p = linalg::charpoly(&a)?;
    let lhs = linalg::polyeval_matrix(&p, &rr)?;
    ensure_eq!(lhs, linalg::polyeval_matrix(&p, &rc)?.reverse_full(), "p(R_r A) ≠ R(p(R_c A))", "A" => a);
    Ok(())
}

fn t_jordan(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let pair = reversing_jordan::<Rational>(n)?;
    ensure_eq!(pair.p.transpose(), pair.p, "P is not symmetric", "n" => n);
    ensure_eq!(pair.represented()?, exchange(n), "P·J·P⁻¹ ≠ M", "n" => n);
    let (up, down) = (n.div_ceil(2), n / 2);
    let expected = QMatrix::from_fn(n, n, |i, j| if i != j { q(0) } else if i < up { q(1) } else { q(-1) })?;
    ensure_eq!(pair.j, expected, "J is not I ⊕ −I", "n" => n, "blocks" => vec![up, down]);
    Ok(())
}

fn t_jordan_transport(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (p, j) = (g.invertible(n), g.jordan(n));
    let (lhs, rhs) = jordan_transport(&p, &j)?;
    ensure_eq!(lhs, rhs, "R(PJP⁻¹) ≠ R_c(P)·J·R_c(P)⁻¹", "P" => p, "J" => j);
    Ok(())
}

/// PA case for every n; aPA case only for even n, where invertible aPA
/// matrices exist (for odd n, det(−P) = −det P forces det P = 0).
fn t2_2(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let anti = n.is_multiple_of(2) && g.coin();
    let kind = if anti { APA } else { PA };
    let Some(p) = g.invertible_member(n, kind) else {
        g.note(format!("no invertible {kind} similarity drawn at n = {n}"));
        return Ok(());
    };
    let d = if anti { g.antipalindromic_vector(n) } else { g.palindromic_vector(n) };
    let j = QMatrix::diagonal_matrix(&d);
    let a = p.matmul(&j)?.matmul(&linalg::inverse(&p)?)?;
    ensure!(kind.contains(&a), "A has the wrong parity", "kind" => kind, "P" => p, "J" => j, "A" => a);
    Ok(())
}

/// `A = P·T·P⁻¹` with `T` upper triangular, so the diagonal of `T` lists the
/// eigenvalues of `A`.
fn similar_triangular(g: &mut Gen, n: usize) -> (QMatrix, Vec<Rational>) {
    let (p, t) = (g.invertible(n), g.upper_triangular(n));
    let a = p.matmul(&t).and_then(|pt| pt.matmul(&linalg::inverse(&p)?)).expect("square, invertible");
    let eigenvalues = (0..n).map(|i| t.at(i, i).clone()).collect();
    (a, eigenvalues)
}

fn t_eig_1(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (a, eigenvalues) = similar_triangular(g, n);
    let f = g.series();
    for lambda in eigenvalues {
        ensure!(spectral_mapping_check(&a, &lambda, &f)?, "f(λ) is not an eigenvalue of f(R(A))", "A" => a, "lambda" => lambda, "f" => f);
    }
    Ok(())
}

fn t_eig_2(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (b, eigenvalues) = similar_triangular(g, n);
    let a = b.reverse_rows();
    let f = g.series();
    let image = apply_series(&f, &a.reverse_cols())?;
    let chi = linalg::charpoly(&image)?;
    for lambda in eigenvalues {
        let value = f.eval(&lambda);
        ensure!(chi.eval(&value).is_zero(), "f(λ) is not an eigenvalue of f(R_c(A))", "A" => a, "lambda" => lambda, "f" => f);
    }
    Ok(())
}

fn t_analytic_1(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (a, f) = (g.square(n), g.series());
    ensure!(check_reversing_conjugation(&f, &a)?.id_rc, "f(R_r A) ≠ R(f(R_c A))", "A" => a, "f" => f);
    Ok(())
}

fn t_analytic_2(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (a, f) = (g.square(n), g.series());
    ensure!(check_reversing_conjugation(&f, &a)?.id_cr, "f(R_c A) ≠ R(f(R_r A))", "A" => a, "f" => f);
    Ok(())
}

fn t_analytic_3(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (a, f) = (g.square(n), g.series());
    ensure!(check_reversing_conjugation(&f, &a)?.id_full, "f(R A) ≠ R(f(A))", "A" => a, "f" => f);
    Ok(())
}

fn t_analytic_pow(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let a = g.square(n);
    let (rr, rc, rf) = (a.reverse_rows(), a.reverse_cols(), a.reverse_full());
    for k in 0..=6 {
        ensure_eq!(linalg::pow(&rr, k)?, linalg::pow(&rc, k)?.reverse_full(), "(R_r A)^k ≠ R((R_c A)^k)", "A" => a, "k" => k);
        ensure_eq!(linalg::pow(&rf, k)?, linalg::pow(&a, k)?.reverse_full(), "(R A)^k ≠ R(A^k)", "A" => a, "k" => k);
    }
    Ok(())
}
