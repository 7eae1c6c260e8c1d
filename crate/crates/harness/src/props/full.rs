//! Items 71 to 114: the double-parity subspaces, the generalized vector
//! product, full reversal, PA/aPA and pasting by blocks.

use revpaste::{generalized_product, linalg, minor_matrix, Axis, QMatrix, QVector, SubspaceKind};

use super::matrices::{dimension, direct_sum, subspace, sums};
use super::{exchange, identity, projection, sign};
use crate::gen::Gen;
use crate::outcome::Outcome;
use crate::registry::Property;

use SubspaceKind::{Waa, Wap, Wpa, Wpp, APA, PA};

const SET_EQUATION: &str = "equates a single pasting with the whole space M_{r×s}; read as a statement about sets it is the surjectivity of pasting already checked by items 11, 29 and 30";

pub const PROPERTIES: &[Property] = &[
    Property::check("P071", &[71], "W_pp is a subspace", p071),
    Property::check("P072", &[72], "W_pa is a subspace", p072),
    Property::check("P073", &[73], "W_ap is a subspace", p073),
    Property::check("P074", &[74], "W_aa is a subspace", p074),
    Property::check("P075", &[75], "dimension of W_pp", p075),
    Property::check("P076", &[76], "dimension of W_pa", p076),
    Property::check("P077", &[77], "dimension of W_ap", p077),
    Property::check("P078", &[78], "dimension of W_aa", p078),
    Property::check("P079", &[79], "the four double-parity subspaces are a direct sum", p079),
    Property::check("P080", &[80], "every matrix splits into four double-parity parts", p080),
    Property::check("P081", &[81], "row reversal moves the k-th minor matrix to the (n-k+1)-th", p081),
    Property::check("P082", &[82], "generalized product of reversed vectors", p082),
    Property::check("P083", &[83], "full reversal as reversed rows in reverse order", p083),
    Property::check("P084", &[84], "full reversal is an involution", p084),
    Property::check("P085", &[85], "full reversal of a pasting swaps the blocks", p085),
    Property::check("P086", &[86], "pasting of matrices is associative", p086),
    Property::check("P087", &[87], "full reversal is linear", p087),
    Property::skip("P088", &[88], "pasting fills M_{r×s}", SET_EQUATION),
    Property::check("P089", &[89], "PA is a subspace", p089),
    Property::check("P090", &[90], "aPA is a subspace", p090),
    Property::check("P091", &[91], "dimension of PA", p091),
    Property::check("P092", &[92], "dimension of aPA", p092),
    Property::check("P093", &[93], "PA sums", p093),
    Property::check("P094", &[94], "aPA sums", p094),
    Property::check("P095", &[95], "every matrix splits into PA and aPA parts", p095),
    Property::check("P096", &[96], "PA and aPA are complementary", p096),
    Property::check("P097", &[97], "identity is fully palindromic", p097),
    Property::check("P098", &[98], "full reversal is column after row reversal", p098),
    Property::check("P099", &[99], "full reversal is row after column reversal", p099),
    Property::check("P100", &[100], "full reversal of a product", p100),
    Property::check("P101", &[101], "full reversal of an inverse", p101),
    Property::check("P102", &[102], "determinant of a full reversal", p102),
    Property::check("P103", &[103], "trace of a full reversal", p103),
    Property::check("P104", &[104], "full reversal of a transpose", p104),
    Property::check("P105", &[105], "PA times PA is PA", p105),
    Property::check("P106", &[106], "aPA times aPA is PA", p106),
    Property::check("P107", &[107], "PA times aPA is aPA", p107),
    Property::check("P108", &[108], "full reversal of a block pasting swaps the blocks", p108),
    Property::check("P109", &[109], "block pasting is associative", p109),
    Property::check("P110", &[110], "shape of a block pasting", p110),
    Property::check("P111", &[111], "transpose of a block pasting", p111),
    Property::check("P112", &[112], "determinant of a block pasting", p112),
    Property::check("P113", &[113], "trace of a block pasting", p113),
    Property::check("P114", &[114], "inverse of a block pasting", p114),
];

fn p071(g: &mut Gen) -> Outcome {
    subspace(g, Wpp)
}

fn p072(g: &mut Gen) -> Outcome {
    subspace(g, Wpa)
}

fn p073(g: &mut Gen) -> Outcome {
    subspace(g, Wap)
}

fn p074(g: &mut Gen) -> Outcome {
    subspace(g, Waa)
}

fn p075(g: &mut Gen) -> Outcome {
    dimension(g, Wpp, |n, m| n.div_ceil(2) * m.div_ceil(2))
}

fn p076(g: &mut Gen) -> Outcome {
    dimension(g, Wpa, |n, m| n.div_ceil(2) * (m / 2))
}

fn p077(g: &mut Gen) -> Outcome {
    dimension(g, Wap, |n, m| (n / 2) * m.div_ceil(2))
}

fn p078(g: &mut Gen) -> Outcome {
    dimension(g, Waa, |n, m| (n / 2) * (m / 2))
}

fn p079(g: &mut Gen) -> Outcome {
    direct_sum(g, &[Wpp, Wpa, Wap, Waa])
}

fn p080(g: &mut Gen) -> Outcome {
    let a = g.any_matrix();
    let parts = a.quad_decompose();
    let rc = |row_anti, col_anti| projection(&projection(&a, Axis::Rows, row_anti), Axis::Cols, col_anti);
    ensure_eq!(parts.pp, rc(false, false), "pp part", "A" => a);
    ensure_eq!(parts.pa, rc(false, true), "pa part", "A" => a);
    ensure_eq!(parts.ap, rc(true, false), "ap part", "A" => a);
    ensure_eq!(parts.aa, rc(true, true), "aa part", "A" => a);
    ensure!(
        Wpp.contains(&parts.pp) && Wpa.contains(&parts.pa) && Wap.contains(&parts.ap) && Waa.contains(&parts.aa),
        "part outside its subspace",
        "A" => a
    );
    ensure_eq!(parts.sum(), a, "parts do not sum to A", "A" => a);
    Ok(())
}

/// Read with the reversal applied before taking the minor:
/// `(ℛ_r M)^(k) = M^(n−k+1)·M_ℛ(n−1)`.
fn p081(g: &mut Gen) -> Outcome {
    g.note("checked as (R_r M)^(k) = M^(n-k+1) R(I_{n-1}); the printed R_r(M^(k)) on the left is false");
    let n = g.dim_at_least(2);
    let m = g.matrix(n - 1, n);
    let k = 1 + g.below(n);
    let lhs = minor_matrix(&m.reverse_rows(), k)?;
    let rhs = minor_matrix(&m, n - k + 1)?.matmul(&exchange(n - 1))?;
    ensure_eq!(lhs, rhs, "minor of the row reversal", "M" => m, "k" => k);
    Ok(())
}

fn p082(g: &mut Gen) -> Outcome {
    let n = g.dim_at_least(2);
    let vs: Vec<QVector> = (0..n - 1).map(|_| g.vector(n)).collect();
    let reversed: Vec<QVector> = vs.iter().map(QVector::reversed).collect();
    let lhs = generalized_product(&reversed)?;
    let base = generalized_product(&vs)?.reversed();
    let printed = sign((3 * n).div_ceil(2));
    if !base.is_zero() {
        let empirical = if lhs == base { "+1" } else if lhs == -&base { "-1" } else { "none" };
        g.note(format!("n = {n}: empirical sign {empirical}, printed exponent ceil(3n/2) gives {printed}"));
    }
    ensure_eq!(lhs, base.scale(&printed), "sign of the reversed product", "vectors" => vs, "n" => n);
    Ok(())
}

fn p083(g: &mut Gen) -> Outcome {
    let a = g.any_matrix();
    let (n, m) = a.shape();
    let by_rows = QMatrix::from_row_vectors(&(0..n).rev().map(|i| a.row(i).reversed()).collect::<Vec<_>>())?;
    ensure_eq!(a.reverse_full(), by_rows, "reversed rows in reverse order", "A" => a);
    let sandwich = exchange(n).matmul(&a)?.matmul(&exchange(m))?;
    ensure_eq!(a.reverse_full(), sandwich, "exchange sandwich", "A" => a);
    ensure_eq!(a.reverse_full().vectorize(), a.vectorize().reversed(), "vectorized reversal", "A" => a);
    Ok(())
}

fn p084(g: &mut Gen) -> Outcome {
    let a = g.any_matrix();
    ensure_eq!(a.reverse_full().reverse_full(), a, "reversing twice changed A", "A" => a);
    Ok(())
}

fn p085(g: &mut Gen) -> Outcome {
    let (a, b) = (g.any_matrix(), g.any_matrix());
    let lhs = a.vectorize().paste(&b.vectorize()).reversed();
    let rhs = b.reverse_full().vectorize().paste(&a.reverse_full().vectorize());
    ensure_eq!(lhs, rhs, "vectorized pasting", "A" => a, "B" => b);
    let n = a.rows();
    let c = g.with_rows(n);
    let lhs = a.paste_rows(&c)?.reverse_full();
    ensure_eq!(lhs, c.reverse_full().paste_rows(&a.reverse_full())?, "pasting with n = p", "A" => a, "B" => c);
    let m = a.cols();
    let d = g.with_cols(m);
    let lhs = a.paste_cols(&d)?.reverse_full();
    ensure_eq!(lhs, d.reverse_full().paste_cols(&a.reverse_full())?, "pasting with m = q", "A" => a, "B" => d);
    Ok(())
}

fn p086(g: &mut Gen) -> Outcome {
    let (a, b, c) = (g.any_matrix(), g.any_matrix(), g.any_matrix());
    let (va, vb, vc) = (a.vectorize(), b.vectorize(), c.vectorize());
    ensure_eq!(va.paste(&vb).paste(&vc), va.paste(&vb.paste(&vc)), "vectorized pasting", "A" => a, "B" => b, "C" => c);
    Ok(())
}

fn p087(g: &mut Gen) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let (a, b, x, y) = (g.matrix(n, m), g.matrix(n, m), g.rational(), g.rational());
    let lhs = (&a.scale(&x) + &b.scale(&y)).reverse_full();
    let rhs = &a.reverse_full().scale(&x) + &b.reverse_full().scale(&y);
    ensure_eq!(lhs, rhs, "full reversal is not linear", "A" => a, "B" => b, "b" => x, "c" => y);
    Ok(())
}

fn p089(g: &mut Gen) -> Outcome {
    subspace(g, PA)
}

fn p090(g: &mut Gen) -> Outcome {
    subspace(g, APA)
}

fn p091(g: &mut Gen) -> Outcome {
    dimension(g, PA, |n, m| (n * m).div_ceil(2))
}

fn p092(g: &mut Gen) -> Outcome {
    dimension(g, APA, |n, m| n * m / 2)
}

fn p093(g: &mut Gen) -> Outcome {
    sums(g, PA)
}

fn p094(g: &mut Gen) -> Outcome {
    sums(g, APA)
}

fn p095(g: &mut Gen) -> Outcome {
    let a = g.any_matrix();
    let (p, n) = (a.project_palindromic(Axis::Full), a.project_antipalindromic(Axis::Full));
    ensure_eq!(p, projection(&a, Axis::Full, false), "palindromic part", "A" => a);
    ensure!(PA.contains(&p) && APA.contains(&n), "parts have the wrong parity", "A" => a, "Ap" => p, "Aa" => n);
    ensure_eq!(&p + &n, a, "parts do not sum to A", "A" => a);
    Ok(())
}

fn p096(g: &mut Gen) -> Outcome {
    g.note("the printed right side PA ⊕ PA is read as PA ⊕ aPA");
    direct_sum(g, &[PA, APA])
}

fn p097(g: &mut Gen) -> Outcome {
    let n = g.dim();
    ensure_eq!(identity(n).reverse_full(), identity(n), "reversed identity", "n" => n);
    Ok(())
}

fn p098(g: &mut Gen) -> Outcome {
    let a = g.any_matrix();
    ensure_eq!(a.reverse_full(), a.reverse_rows().reverse_cols(), "composition mismatch", "A" => a);
    Ok(())
}

fn p099(g: &mut Gen) -> Outcome {
    let a = g.any_matrix();
    ensure_eq!(a.reverse_full(), a.reverse_cols().reverse_rows(), "composition mismatch", "A" => a);
    Ok(())
}

fn p100(g: &mut Gen) -> Outcome {
    let (n, k, m) = (g.dim(), g.dim(), g.dim());
    let (a, b) = (g.matrix(n, k), g.matrix(k, m));
    let lhs = a.matmul(&b)?.reverse_full();
    ensure_eq!(lhs, a.reverse_full().matmul(&b.reverse_full())?, "reversal of a product", "A" => a, "B" => b);
    Ok(())
}

fn p101(g: &mut Gen) -> Outcome {
    let a = g.any_invertible();
    let lhs = linalg::inverse(&a.reverse_full())?;
    ensure_eq!(lhs, linalg::inverse(&a)?.reverse_full(), "reversal of the inverse", "A" => a);
    Ok(())
}

fn p102(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let a = g.square(n);
    let lhs = linalg::exact_determinant(&a.reverse_full())?;
    ensure_eq!(lhs, linalg::exact_determinant(&a)?, "determinant changed", "A" => a);
    Ok(())
}

fn p103(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let a = g.square(n);
    ensure_eq!(linalg::trace(&a.reverse_full())?, linalg::trace(&a)?, "trace changed", "A" => a);
    Ok(())
}

fn p104(g: &mut Gen) -> Outcome {
    let a = g.any_matrix();
    ensure_eq!(a.transpose().reverse_full(), a.reverse_full().transpose(), "transpose mismatch", "A" => a);
    Ok(())
}

fn parity_product(g: &mut Gen, left: SubspaceKind, right: SubspaceKind, target: SubspaceKind) -> Outcome {
    let (n, k, m) = (g.dim(), g.dim(), g.dim());
    let (a, b) = (g.member(n, k, left), g.member(k, m, right));
    let ab = a.matmul(&b)?;
    ensure!(target.contains(&ab), "product has the wrong parity", "A" => a, "B" => b, "AB" => ab);
    Ok(())
}

fn p105(g: &mut Gen) -> Outcome {
    parity_product(g, PA, PA, PA)
}

fn p106(g: &mut Gen) -> Outcome {
    parity_product(g, APA, APA, PA)
}

fn p107(g: &mut Gen) -> Outcome {
    parity_product(g, PA, APA, APA)
}

fn p108(g: &mut Gen) -> Outcome {
    let (a, b) = (g.any_matrix(), g.any_matrix());
    let lhs = a.paste_blocks(&b).reverse_full();
    ensure_eq!(lhs, b.reverse_full().paste_blocks(&a.reverse_full()), "reversed block pasting", "A" => a, "B" => b);
    Ok(())
}

fn p109(g: &mut Gen) -> Outcome {
    let (a, b, c) = (g.any_matrix(), g.any_matrix(), g.any_matrix());
    let lhs = a.paste_blocks(&b).paste_blocks(&c);
    ensure_eq!(lhs, a.paste_blocks(&b.paste_blocks(&c)), "block pasting not associative", "A" => a, "B" => b, "C" => c);
    Ok(())
}

fn p110(g: &mut Gen) -> Outcome {
    let (a, b) = (g.any_matrix(), g.any_matrix());
    let ((n, m), (p, q)) = (a.shape(), b.shape());
    let ab = a.paste_blocks(&b);
    ensure_eq!(ab.shape(), (n + p, m + q), "block pasting shape", "A" => a, "B" => b);
    let off_diagonal_zero = (0..n + p).all(|i| (0..m + q).all(|j| (i < n) == (j < m) || ab.at(i, j) == &super::q(0)));
    ensure!(off_diagonal_zero, "off-diagonal blocks are not zero", "A" => a, "B" => b);
    Ok(())
}

fn p111(g: &mut Gen) -> Outcome {
    let (a, b) = (g.any_matrix(), g.any_matrix());
    let lhs = a.paste_blocks(&b).transpose();
    ensure_eq!(lhs, a.transpose().paste_blocks(&b.transpose()), "transpose of block pasting", "A" => a, "B" => b);
    Ok(())
}

fn p112(g: &mut Gen) -> Outcome {
    let (n, p) = (g.dim(), g.dim());
    let (a, b) = (g.square(n), g.square(p));
    let lhs = linalg::exact_determinant(&a.paste_blocks(&b))?;
    let rhs = linalg::exact_determinant(&a)? * linalg::exact_determinant(&b)?;
    ensure_eq!(lhs, rhs, "determinant of block pasting", "A" => a, "B" => b);
    Ok(())
}

fn p113(g: &mut Gen) -> Outcome {
    let (n, p) = (g.dim(), g.dim());
    let (a, b) = (g.square(n), g.square(p));
    let lhs = linalg::trace(&a.paste_blocks(&b))?;
    ensure_eq!(lhs, linalg::trace(&a)? + linalg::trace(&b)?, "trace of block pasting", "A" => a, "B" => b);
    Ok(())
}

fn p114(g: &mut Gen) -> Outcome {
    let (a, b) = (g.any_invertible(), g.any_invertible());
    let lhs = linalg::inverse(&a.paste_blocks(&b))?;
    let rhs = linalg::inverse(&a)?.paste_blocks(&linalg::inverse(&b)?);
    ensure_eq!(lhs, rhs, "inverse of block pasting", "A" => a, "B" => b);
    Ok(())
}
