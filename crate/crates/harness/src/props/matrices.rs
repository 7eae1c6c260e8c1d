//! Items 21 to 70: reversal and pasting by rows and columns, the row and
//! column parity subspaces, and their interaction with products.

use revpaste::{linalg, subspace_basis, Axis, QMatrix, Rational, SubspaceKind};

use super::{column_range, kernel_dim, projection, row_range, sign, zeros};
use crate::gen::Gen;
use crate::outcome::Outcome;
use crate::registry::Property;

use SubspaceKind::{WaC, WaR, WpC, WpR};

const ILL_TYPED_31: &str = "the printed embedding is ill-typed: A (n×m) is multiplied by a factor with n rows built from I_n and an (n−m)×m block; the well-typed embedding A·[I_m | 0] + B·[0 | I_p] is checked as T-paste-embed-rows";
const ILL_TYPED_32: &str = "the printed embedding is ill-typed for the same reason as item 31; the well-typed form [I_n ; 0]·A + [0 ; I_q]·B is checked as T-paste-embed-cols";
const NONZERO_67: &str = "false without a hypothesis on A: A = (1 1), B = I₂ give AB = (1 1), nonzero and row-palindromic, with B not; the invertible-cofactor form is item 63";
const NONZERO_68: &str = "false without a hypothesis on B: A = I₂, B = (1 ; 1) give AB = (1 ; 1), nonzero and column-palindromic, with A not; the invertible-cofactor form is item 65";
const NONZERO_69: &str = "false without a hypothesis on A: A = (1 −1), B = I₂ give AB = (1 −1), nonzero and row-antipalindromic, with B not; the invertible-cofactor form is item 64";
const NONZERO_70: &str = "false without a hypothesis on B: A = I₂, B = (1 ; −1) give AB = (1 ; −1), nonzero and column-antipalindromic, with A not; the invertible-cofactor form is item 66";

pub const PROPERTIES: &[Property] = &[
    Property::check("P021", &[21], "row reversal is an involution", p021),
    Property::check("P022", &[22], "column reversal is an involution", p022),
    Property::check("P023", &[23], "row reversal of a row pasting swaps the blocks", p023),
    Property::check("P024", &[24], "column reversal of a column pasting swaps the blocks", p024),
    Property::check("P025", &[25], "row pasting is associative", p025),
    Property::check("P026", &[26], "column pasting is associative", p026),
    Property::check("P027", &[27], "row reversal is linear", p027),
    Property::check("P028", &[28], "column reversal is linear", p028),
    Property::check("P029", &[29], "row pasting of n×m and n×p fills n×(m+p)", p029),
    Property::check("P030", &[30], "column pasting of n×m and l×m fills (n+l)×m", p030),
    Property::skip("P031", &[31], "row pasting as an embedding product", ILL_TYPED_31),
    Property::skip("P032", &[32], "column pasting as an embedding product", ILL_TYPED_32),
    Property::check("P033", &[33], "row-palindromic matrices form a subspace", p033),
    Property::check("P034", &[34], "column-palindromic matrices form a subspace", p034),
    Property::check("P035", &[35], "row-palindromic dimension n·ceil(m/2)", p035),
    Property::check("P036", &[36], "column-palindromic dimension m·ceil(n/2)", p036),
    Property::check("P037", &[37], "row-antipalindromic matrices form a subspace", p037),
    Property::check("P038", &[38], "column-antipalindromic matrices form a subspace", p038),
    Property::check("P039", &[39], "row-antipalindromic dimension n·floor(m/2)", p039),
    Property::check("P040", &[40], "column-antipalindromic dimension m·floor(n/2)", p040),
    Property::check("P041", &[41], "column parity subspaces are complementary", p041),
    Property::check("P042", &[42], "row parity subspaces are complementary", p042),
    Property::check("P043", &[43], "transpose of a row reversal", p043),
    Property::check("P044", &[44], "transpose of a column reversal", p044),
    Property::check("P045", &[45], "transpose of a column pasting", p045),
    Property::check("P046", &[46], "transpose of a row pasting", p046),
    Property::check("P047", &[47], "row reversal of a product", p047),
    Property::check("P048", &[48], "column reversal of a product", p048),
    Property::check("P049", &[49], "determinant of a column reversal", p049),
    Property::check("P050", &[50], "determinant of a row reversal", p050),
    Property::check("P051", &[51], "inverse of a column reversal", p051),
    Property::check("P052", &[52], "inverse of a row reversal", p052),
    Property::check("P053", &[53], "row parity decomposition", p053),
    Property::check("P054", &[54], "column parity decomposition", p054),
    Property::check("P055", &[55], "row-palindromic sums", p055),
    Property::check("P056", &[56], "row-antipalindromic sums", p056),
    Property::check("P057", &[57], "column-palindromic sums", p057),
    Property::check("P058", &[58], "column-antipalindromic sums", p058),
    Property::check("P059", &[59], "row-palindromic products", p059),
    Property::check("P060", &[60], "row-antipalindromic products", p060),
    Property::check("P061", &[61], "column-palindromic products", p061),
    Property::check("P062", &[62], "column-antipalindromic products", p062),
    Property::check("P063", &[63], "AB row-palindromic iff B is, A invertible", p063),
    Property::check("P064", &[64], "AB row-antipalindromic iff B is, A invertible", p064),
    Property::check("P065", &[65], "AB column-palindromic iff A is, B invertible", p065),
    Property::check("P066", &[66], "AB column-antipalindromic iff A is, B invertible", p066),
    Property::skip("P067", &[67], "nonzero row-palindromic product", NONZERO_67),
    Property::skip("P068", &[68], "nonzero column-palindromic product", NONZERO_68),
    Property::skip("P069", &[69], "nonzero row-antipalindromic product", NONZERO_69),
    Property::skip("P070", &[70], "nonzero column-antipalindromic product", NONZERO_70),
];

fn involution(g: &mut Gen, axis: Axis) -> Outcome {
    let a = g.any_matrix();
    ensure_eq!(a.reverse(axis).reverse(axis), a, "reversing twice changed A", "A" => a);
    Ok(())
}

fn p021(g: &mut Gen) -> Outcome {
    involution(g, Axis::Rows)
}

fn p022(g: &mut Gen) -> Outcome {
    involution(g, Axis::Cols)
}

fn p023(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (a, b) = (g.with_rows(n), g.with_rows(n));
    let lhs = a.paste_rows(&b)?.reverse_rows();
    let rhs = b.reverse_rows().paste_rows(&a.reverse_rows())?;
    ensure_eq!(lhs, rhs, "reversed row pasting mismatch", "A" => a, "B" => b);
    Ok(())
}

fn p024(g: &mut Gen) -> Outcome {
    let m = g.dim();
    let (a, b) = (g.with_cols(m), g.with_cols(m));
    let lhs = a.paste_cols(&b)?.reverse_cols();
    let rhs = b.reverse_cols().paste_cols(&a.reverse_cols())?;
    ensure_eq!(lhs, rhs, "reversed column pasting mismatch", "A" => a, "B" => b);
    Ok(())
}

fn p025(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (a, b, c) = (g.with_rows(n), g.with_rows(n), g.with_rows(n));
    let lhs = a.paste_rows(&b)?.paste_rows(&c)?;
    let rhs = a.paste_rows(&b.paste_rows(&c)?)?;
    ensure_eq!(lhs, rhs, "row pasting not associative", "A" => a, "B" => b, "C" => c);
    Ok(())
}

fn p026(g: &mut Gen) -> Outcome {
    let m = g.dim();
    let (a, b, c) = (g.with_cols(m), g.with_cols(m), g.with_cols(m));
    let lhs = a.paste_cols(&b)?.paste_cols(&c)?;
    let rhs = a.paste_cols(&b.paste_cols(&c)?)?;
    ensure_eq!(lhs, rhs, "column pasting not associative", "A" => a, "B" => b, "C" => c);
    Ok(())
}

fn linearity(g: &mut Gen, axis: Axis) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let (a, b, x, y) = (g.matrix(n, m), g.matrix(n, m), g.rational(), g.rational());
    let lhs = (&a.scale(&x) + &b.scale(&y)).reverse(axis);
    let rhs = &a.reverse(axis).scale(&x) + &b.reverse(axis).scale(&y);
    ensure_eq!(lhs, rhs, "reversal is not linear", "A" => a, "B" => b, "alpha" => x, "beta" => y);
    Ok(())
}

fn p027(g: &mut Gen) -> Outcome {
    linearity(g, Axis::Rows)
}

fn p028(g: &mut Gen) -> Outcome {
    linearity(g, Axis::Cols)
}

fn p029(g: &mut Gen) -> Outcome {
    let (n, m, p) = (g.dim(), g.dim(), g.dim());
    let (a, b) = (g.matrix(n, m), g.matrix(n, p));
    ensure_eq!(a.paste_rows(&b)?.shape(), (n, m + p), "row pasting shape", "A" => a, "B" => b);
    let c = g.matrix(n, m + p);
    let (left, right) = (column_range(&c, 0, m), column_range(&c, m, m + p));
    ensure_eq!(left.paste_rows(&right)?, c, "target is not a row pasting of its blocks", "C" => c, "m" => m);
    Ok(())
}

fn p030(g: &mut Gen) -> Outcome {
    let (n, l, m) = (g.dim(), g.dim(), g.dim());
    let (a, b) = (g.matrix(n, m), g.matrix(l, m));
    ensure_eq!(a.paste_cols(&b)?.shape(), (n + l, m), "column pasting shape", "A" => a, "B" => b);
    let c = g.matrix(n + l, m);
    let (top, bottom) = (row_range(&c, 0, n), row_range(&c, n, n + l));
    ensure_eq!(top.paste_cols(&bottom)?, c, "target is not a column pasting of its blocks", "C" => c, "n" => n);
    Ok(())
}

/// Zero is in `kind` and `xA + yB` stays in it.
pub(crate) fn subspace(g: &mut Gen, kind: SubspaceKind) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let (a, b, x, y) = (g.member(n, m, kind), g.member(n, m, kind), g.rational(), g.rational());
    ensure!(kind.contains(&zeros(n, m)), "zero matrix not in the subspace", "kind" => kind, "n" => n, "m" => m);
    let c = &a.scale(&x) + &b.scale(&y);
    ensure!(kind.contains(&c), "combination left the subspace", "kind" => kind, "A" => a, "B" => b, "x" => x, "y" => y);
    Ok(())
}

/// `A + B` stays in `kind`.
pub(crate) fn sums(g: &mut Gen, kind: SubspaceKind) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let (a, b) = (g.member(n, m, kind), g.member(n, m, kind));
    ensure!(kind.contains(&(&a + &b)), "sum left the subspace", "kind" => kind, "A" => a, "B" => b);
    Ok(())
}

/// Basis size equals `printed(n, m)`, the basis is independent, and both agree
/// with the kernel dimension of the defining constraints.
pub(crate) fn dimension(g: &mut Gen, kind: SubspaceKind, printed: fn(usize, usize) -> usize) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let basis = subspace_basis::<Rational>(n, m, kind)?;
    let oracle = kernel_dim(n, m, kind);
    ensure_eq!(basis.len(), oracle, "basis size differs from the kernel dimension", "kind" => kind, "n" => n, "m" => m);
    ensure_eq!(basis.rank(), basis.len(), "basis is not independent", "kind" => kind, "n" => n, "m" => m);
    ensure_eq!(kind.dimension(n, m), oracle, "dimension formula", "kind" => kind, "n" => n, "m" => m);
    if printed(n, m) != oracle {
        g.note(format!("{kind} at {n}x{m}: printed formula gives {}, dimension is {oracle}", printed(n, m)));
    }
    Ok(())
}

/// The union of the bases of `kinds` has `nm` members and rank `nm`.
pub(crate) fn direct_sum(g: &mut Gen, kinds: &[SubspaceKind]) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let mut joint = subspace_basis::<Rational>(n, m, kinds[0])?;
    for &kind in &kinds[1..] {
        joint = joint.union(&subspace_basis(n, m, kind)?)?;
    }
    ensure_eq!(joint.len(), n * m, "joint basis size", "kinds" => kinds.to_vec(), "n" => n, "m" => m);
    ensure_eq!(joint.rank(), n * m, "joint basis does not span", "kinds" => kinds.to_vec(), "n" => n, "m" => m);
    Ok(())
}

fn p033(g: &mut Gen) -> Outcome {
    subspace(g, WpR)
}

fn p034(g: &mut Gen) -> Outcome {
    subspace(g, WpC)
}

fn p035(g: &mut Gen) -> Outcome {
    dimension(g, WpR, |n, m| n * m.div_ceil(2))
}

fn p036(g: &mut Gen) -> Outcome {
    dimension(g, WpC, |n, m| m * n.div_ceil(2))
}

fn p037(g: &mut Gen) -> Outcome {
    subspace(g, WaR)
}

fn p038(g: &mut Gen) -> Outcome {
    subspace(g, WaC)
}

fn p039(g: &mut Gen) -> Outcome {
    dimension(g, WaR, |n, m| n * (m / 2))
}

fn p040(g: &mut Gen) -> Outcome {
    dimension(g, WaC, |n, m| m * (n / 2))
}

fn p041(g: &mut Gen) -> Outcome {
    direct_sum(g, &[WpC, WaC])
}

fn p042(g: &mut Gen) -> Outcome {
    direct_sum(g, &[WpR, WaR])
}

fn p043(g: &mut Gen) -> Outcome {
    let a = g.any_matrix();
    ensure_eq!(a.reverse_rows().transpose(), a.transpose().reverse_cols(), "transpose mismatch", "A" => a);
    Ok(())
}

fn p044(g: &mut Gen) -> Outcome {
    let a = g.any_matrix();
    ensure_eq!(a.reverse_cols().transpose(), a.transpose().reverse_rows(), "transpose mismatch", "A" => a);
    Ok(())
}

fn p045(g: &mut Gen) -> Outcome {
    let m = g.dim();
    let (a, b) = (g.with_cols(m), g.with_cols(m));
    let lhs = a.paste_cols(&b)?.transpose();
    let rhs = a.transpose().paste_rows(&b.transpose())?;
    ensure_eq!(lhs, rhs, "transpose of column pasting", "A" => a, "B" => b);
    Ok(())
}

fn p046(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (a, b) = (g.with_rows(n), g.with_rows(n));
    let lhs = a.paste_rows(&b)?.transpose();
    let rhs = a.transpose().paste_cols(&b.transpose())?;
    ensure_eq!(lhs, rhs, "transpose of row pasting", "A" => a, "B" => b);
    Ok(())
}

fn chain(g: &mut Gen) -> (QMatrix, QMatrix) {
    let (n, k, m) = (g.dim(), g.dim(), g.dim());
    (g.matrix(n, k), g.matrix(k, m))
}

fn p047(g: &mut Gen) -> Outcome {
    let (a, b) = chain(g);
    ensure_eq!(a.matmul(&b)?.reverse_rows(), a.matmul(&b.reverse_rows())?, "row reversal of AB", "A" => a, "B" => b);
    Ok(())
}

fn p048(g: &mut Gen) -> Outcome {
    let (a, b) = chain(g);
    ensure_eq!(a.matmul(&b)?.reverse_cols(), a.reverse_cols().matmul(&b)?, "column reversal of AB", "A" => a, "B" => b);
    Ok(())
}

fn reversal_determinant(g: &mut Gen, axis: Axis) -> Outcome {
    let n = g.dim();
    let a = g.square(n);
    let lhs = linalg::exact_determinant(&a.reverse(axis))?;
    let rhs = sign(n / 2) * linalg::exact_determinant(&a)?;
    ensure_eq!(lhs, rhs, "determinant sign", "A" => a);
    Ok(())
}

fn p049(g: &mut Gen) -> Outcome {
    reversal_determinant(g, Axis::Cols)
}

fn p050(g: &mut Gen) -> Outcome {
    reversal_determinant(g, Axis::Rows)
}

fn p051(g: &mut Gen) -> Outcome {
    let a = g.any_invertible();
    let lhs = linalg::inverse(&a.reverse_cols())?;
    ensure_eq!(lhs, linalg::inverse(&a)?.reverse_rows(), "inverse of column reversal", "A" => a);
    Ok(())
}

fn p052(g: &mut Gen) -> Outcome {
    let a = g.any_invertible();
    let lhs = linalg::inverse(&a.reverse_rows())?;
    ensure_eq!(lhs, linalg::inverse(&a)?.reverse_cols(), "inverse of row reversal", "A" => a);
    Ok(())
}

fn decomposition(g: &mut Gen, axis: Axis, pal: SubspaceKind, anti: SubspaceKind) -> Outcome {
    let a = g.any_matrix();
    let (p, n) = (a.project_palindromic(axis), a.project_antipalindromic(axis));
    ensure_eq!(p, projection(&a, axis, false), "palindromic part", "A" => a);
    ensure_eq!(n, projection(&a, axis, true), "antipalindromic part", "A" => a);
    ensure!(pal.contains(&p) && anti.contains(&n), "parts have the wrong parity", "A" => a, "Ap" => p, "Aa" => n);
    ensure_eq!(&p + &n, a, "parts do not sum to A", "A" => a);
    Ok(())
}

fn p053(g: &mut Gen) -> Outcome {
    decomposition(g, Axis::Rows, WpR, WaR)
}

fn p054(g: &mut Gen) -> Outcome {
    decomposition(g, Axis::Cols, WpC, WaC)
}

fn p055(g: &mut Gen) -> Outcome {
    sums(g, WpR)
}

fn p056(g: &mut Gen) -> Outcome {
    sums(g, WaR)
}

fn p057(g: &mut Gen) -> Outcome {
    sums(g, WpC)
}

fn p058(g: &mut Gen) -> Outcome {
    sums(g, WaC)
}

/// Both factors drawn from `kind` (shapes `k×n` and `n×m`); the product must
/// be in `kind`.
fn products(g: &mut Gen, kind: SubspaceKind) -> Outcome {
    let (k, n, m) = (g.dim(), g.dim(), g.dim());
    let (a, b) = (g.member(k, n, kind), g.member(n, m, kind));
    let ab = a.matmul(&b)?;
    ensure!(kind.contains(&ab), "product left the subspace", "kind" => kind, "A" => a, "B" => b, "AB" => ab);
    Ok(())
}

fn p059(g: &mut Gen) -> Outcome {
    products(g, WpR)
}

fn p060(g: &mut Gen) -> Outcome {
    products(g, WaR)
}

fn p061(g: &mut Gen) -> Outcome {
    products(g, WpC)
}

fn p062(g: &mut Gen) -> Outcome {
    products(g, WaC)
}

/// `AB ∈ kind ⇔ F ∈ kind`, where `F` is the factor on the side that `kind`
/// constrains and the other factor is invertible. Half the trials draw `F`
/// from `kind`, half at random.
fn cancellation(g: &mut Gen, kind: SubspaceKind) -> Outcome {
    g.note("checked with the other factor invertible; the equivalence without that hypothesis is not asserted");
    let (n, m) = (g.dim(), g.dim());
    let rows_kind = matches!(kind, WpR | WaR);
    let free = |g: &mut Gen| if g.coin() { g.member(n, m, kind) } else { g.matrix(n, m) };
    let (a, b) = if rows_kind {
        (g.invertible(n), free(g))
    } else {
        (free(g), g.invertible(m))
    };
    let factor = if rows_kind { &b } else { &a };
    let product_in = kind.contains(&a.matmul(&b)?);
    let factor_in = kind.contains(factor);
    ensure_eq!(product_in, factor_in, "membership of AB and of the factor differ", "kind" => kind, "A" => a, "B" => b);
    Ok(())
}

fn p063(g: &mut Gen) -> Outcome {
    cancellation(g, WpR)
}

fn p064(g: &mut Gen) -> Outcome {
    cancellation(g, WaR)
}

fn p065(g: &mut Gen) -> Outcome {
    cancellation(g, WpC)
}

fn p066(g: &mut Gen) -> Outcome {
    cancellation(g, WaC)
}
