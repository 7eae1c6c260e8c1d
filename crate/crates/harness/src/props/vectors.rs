//! Items 1 to 20: reversal and pasting of vectors.

use revpaste::{antipalindromic_basis, linalg, palindromic_basis, QVector};

use super::{exchange, identity, vector_rank};
use crate::gen::Gen;
use crate::outcome::Outcome;
use crate::registry::Property;

pub const PROPERTIES: &[Property] = &[
    Property::check("P001", &[1], "reversal is an involution", p001),
    Property::check("P002", &[2], "reversal is linear", p002),
    Property::check("P003", &[3], "dot product is reversal invariant", p003),
    Property::check("P004", &[4], "reversal of a cross product swaps the factors", p004),
    Property::check("P005", &[5], "palindromic vectors are closed under sums", p005),
    Property::check("P006", &[6], "antipalindromic vectors are closed under sums", p006),
    Property::check("P007", &[7], "cross of palindromic vectors is antipalindromic", p007),
    Property::check("P008", &[8], "cross of antipalindromic vectors vanishes", p008),
    Property::check("P009", &[9], "antipalindromic cross palindromic is palindromic", p009),
    Property::check("P010", &[10], "palindromic cross antipalindromic is palindromic", p010),
    Property::check("P011", &[11], "pasting is a linear bijection onto K^(n+m)", p011),
    Property::check("P012", &[12], "pasted space has dimension n+m", p012),
    Property::check("P013", &[13], "reversal of a pasting swaps and reverses", p013),
    Property::check("P014", &[14], "pasting is associative", p014),
    Property::check("P015", &[15], "palindromic vectors form a subspace", p015),
    Property::check("P016", &[16], "palindromic subspace has dimension ceil(n/2)", p016),
    Property::check("P017", &[17], "antipalindromic vectors form a subspace", p017),
    Property::check("P018", &[18], "antipalindromic subspace has dimension floor(n/2)", p018),
    Property::check("P019", &[19], "K^n is the direct sum of the two parity subspaces", p019),
    Property::check("P020", &[20], "every vector splits into parity parts", p020),
];

fn p001(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let v = g.vector(n);
    ensure_eq!(v.reversed().reversed(), v, "reversing twice changed v", "v" => v);
    Ok(())
}

fn p002(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (v, w, a, b) = (g.vector(n), g.vector(n), g.rational(), g.rational());
    let lhs = (&v.scale(&a) + &w.scale(&b)).reversed();
    let rhs = &v.reversed().scale(&a) + &w.reversed().scale(&b);
    ensure_eq!(lhs, rhs, "reversal is not linear", "v" => v, "w" => w, "a" => a, "b" => b);
    Ok(())
}

fn p003(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (v, w) = (g.vector(n), g.vector(n));
    ensure_eq!(v.dot(&w)?, v.reversed().dot(&w.reversed())?, "dot product changed", "v" => v, "w" => w);
    Ok(())
}

fn p004(g: &mut Gen) -> Outcome {
    let (v, w) = (g.vector(3), g.vector(3));
    let lhs = v.cross3(&w)?.reversed();
    let rhs = w.reversed().cross3(&v.reversed())?;
    ensure_eq!(lhs, rhs, "reversed cross product mismatch", "v" => v, "w" => w);
    Ok(())
}

fn p005(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (v, w) = (g.palindromic_vector(n), g.palindromic_vector(n));
    ensure!((&v + &w).is_palindromic(), "sum left W_p", "v" => v, "w" => w);
    Ok(())
}

fn p006(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (v, w) = (g.antipalindromic_vector(n), g.antipalindromic_vector(n));
    ensure!((&v + &w).is_antipalindromic(), "sum left W_a", "v" => v, "w" => w);
    Ok(())
}

fn p007(g: &mut Gen) -> Outcome {
    let (v, w) = (g.palindromic_vector(3), g.palindromic_vector(3));
    let c = v.cross3(&w)?;
    ensure!(c.is_antipalindromic(), "cross product not antipalindromic", "v" => v, "w" => w, "cross" => c);
    Ok(())
}

fn p008(g: &mut Gen) -> Outcome {
    let (v, w) = (g.antipalindromic_vector(3), g.antipalindromic_vector(3));
    let c = v.cross3(&w)?;
    ensure!(c.is_zero(), "cross product not zero", "v" => v, "w" => w, "cross" => c);
    Ok(())
}

fn p009(g: &mut Gen) -> Outcome {
    let (v, w) = (g.antipalindromic_vector(3), g.palindromic_vector(3));
    let c = v.cross3(&w)?;
    ensure!(c.is_palindromic(), "cross product not palindromic", "v" => v, "w" => w, "cross" => c);
    Ok(())
}

fn p010(g: &mut Gen) -> Outcome {
    let (v, w) = (g.palindromic_vector(3), g.antipalindromic_vector(3));
    let c = v.cross3(&w)?;
    ensure!(c.is_palindromic(), "cross product not palindromic", "v" => v, "w" => w, "cross" => c);
    Ok(())
}

fn p011(g: &mut Gen) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let (v, w, v2, w2, a, b) = (g.vector(n), g.vector(m), g.vector(n), g.vector(m), g.rational(), g.rational());
    let z = v.paste(&w);
    ensure_eq!(z.len(), n + m, "pasting has the wrong length", "v" => v, "w" => w);
    ensure_eq!(z.split_at(n)?, (v.clone(), w.clone()), "pasting is not injective", "v" => v, "w" => w);
    let lhs = (&v.scale(&a) + &v2.scale(&b)).paste(&(&w.scale(&a) + &w2.scale(&b)));
    let rhs = &z.scale(&a) + &v2.paste(&w2).scale(&b);
    ensure_eq!(lhs, rhs, "pasting is not linear", "v" => v, "w" => w, "v2" => v2, "w2" => w2, "a" => a, "b" => b);
    let target = g.vector(n + m);
    let (x, y) = target.split_at(n)?;
    ensure_eq!(x.paste(&y), target, "pasting is not surjective", "z" => target);
    Ok(())
}

fn p012(g: &mut Gen) -> Outcome {
    let (n, m) = (g.dim(), g.dim());
    let images: Vec<QVector> = (0..n)
        .map(|i| QVector::unit(n, i).map(|e| e.embed_left(m)))
        .chain((0..m).map(|j| QVector::unit(m, j).map(|e| e.embed_right(n))))
        .collect::<Result<_, _>>()?;
    ensure_eq!(vector_rank(&images), n + m, "pasted space has the wrong dimension", "n" => n, "m" => m);
    Ok(())
}

fn p013(g: &mut Gen) -> Outcome {
    let (v, w) = (g.any_vector(), g.any_vector());
    let lhs = v.paste(&w).reversed();
    let rhs = w.reversed().paste(&v.reversed());
    ensure_eq!(lhs, rhs, "reversed pasting mismatch", "v" => v, "w" => w);
    Ok(())
}

fn p014(g: &mut Gen) -> Outcome {
    let (v, w, z) = (g.any_vector(), g.any_vector(), g.any_vector());
    ensure_eq!(v.paste(&w).paste(&z), v.paste(&w.paste(&z)), "pasting not associative", "v" => v, "w" => w, "z" => z);
    Ok(())
}

fn p015(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (v, w, a, b) = (g.palindromic_vector(n), g.palindromic_vector(n), g.rational(), g.rational());
    ensure!(QVector::zeros(n)?.is_palindromic(), "zero is not palindromic", "n" => n);
    let c = &v.scale(&a) + &w.scale(&b);
    ensure!(c.is_palindromic(), "combination left W_p", "v" => v, "w" => w, "a" => a, "b" => b);
    Ok(())
}

fn p016(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let basis = palindromic_basis(n)?;
    let kernel = n - linalg::rank(&(&exchange(n) - &identity(n)));
    let expected = n.div_ceil(2);
    ensure!(basis.members().iter().all(|v| v.is_palindromic()), "basis member not palindromic", "n" => n);
    ensure_eq!(basis.len(), expected, "basis size", "n" => n);
    ensure_eq!(vector_rank(basis.members()), expected, "basis not independent", "n" => n);
    ensure_eq!(kernel, expected, "nullity of M - I", "n" => n);
    Ok(())
}

fn p017(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let (v, w, a, b) = (g.antipalindromic_vector(n), g.antipalindromic_vector(n), g.rational(), g.rational());
    ensure!(QVector::zeros(n)?.is_antipalindromic(), "zero is not antipalindromic", "n" => n);
    let c = &v.scale(&a) + &w.scale(&b);
    ensure!(c.is_antipalindromic(), "combination left W_a", "v" => v, "w" => w, "a" => a, "b" => b);
    Ok(())
}

fn p018(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let basis = antipalindromic_basis(n)?;
    let kernel = n - linalg::rank(&(&exchange(n) + &identity(n)));
    let expected = n / 2;
    ensure!(basis.members().iter().all(|v| v.is_antipalindromic()), "basis member not antipalindromic", "n" => n);
    ensure_eq!(basis.len(), expected, "basis size", "n" => n);
    ensure_eq!(vector_rank(basis.members()), expected, "basis not independent", "n" => n);
    ensure_eq!(kernel, expected, "nullity of M + I", "n" => n);
    Ok(())
}

fn p019(g: &mut Gen) -> Outcome {
    let n = g.dim();
    let joint = palindromic_basis(n)?.union(&antipalindromic_basis(n)?)?;
    ensure_eq!(joint.len(), n, "joint basis size", "n" => n);
    ensure_eq!(vector_rank(joint.members()), n, "joint basis does not span", "n" => n);
    Ok(())
}

fn p020(g: &mut Gen) -> Outcome {
    let v = g.any_vector();
    let (p, a) = (v.palindromic_part(), v.antipalindromic_part());
    ensure!(p.is_palindromic() && a.is_antipalindromic(), "parts have the wrong parity", "v" => v, "wp" => p, "wa" => a);
    ensure_eq!(&p + &a, v, "parts do not sum to v", "v" => v);
    Ok(())
}
