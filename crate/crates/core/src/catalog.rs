//! Named algebras of dimension at most 5 and name normalization.

use crate::algebra::{direct_sum, JJAlgebra};
use crate::error::{Error, Result};

/// The nontrivial algebras in classification order, grouped by dimension.
pub const NAMES: [&str; 22] = [
    "J_1_2",
    "J_1_2+F",
    "J_1_3",
    "J_1_2+F2",
    "J_1_3+F",
    "J_1_2^2",
    "J_1_4",
    "J_2_4",
    "J_1_2+F3",
    "J_1_3+F2",
    "J_1_2^2+F",
    "J_1_4+F",
    "J_2_4+F",
    "J_1_2+J_1_3",
    "J_1_5",
    "J_2_5",
    "J_3_5",
    "J_4_5",
    "J_5_5",
    "J_6_5",
    "J_7_5",
    "J_8_5",
];

/// Names of the nontrivial algebras of dimension `dim`.
pub fn names_of_dim(dim: usize) -> Vec<&'static str> {
    NAMES.iter().copied().filter(|n| catalog(n).map(|a| a.dim() == dim).unwrap_or(false)).collect()
}

/// Indecomposable means: not written as a direct sum or square in the classification.
pub fn is_indecomposable_name(name: &str) -> bool {
    !name.contains('+') && !name.contains('^')
}

type Terms = &'static [(usize, usize, usize, i64)];

fn base(name: &str) -> Option<(usize, Terms)> {
    Some(match name {
        "J_1_2" => (2, &[(1, 1, 2, 1)]),
        "J_1_3" => (3, &[(1, 1, 2, 1), (3, 3, 2, 1)]),
        "J_1_2^2" => (4, &[(1, 1, 2, 1), (3, 3, 4, 1)]),
        "J_1_4" => (4, &[(1, 1, 2, 1), (1, 3, 4, 1)]),
        "J_2_4" => (4, &[(1, 1, 2, 1), (3, 4, 2, 1)]),
        "J_1_2+J_1_3" => (5, &[(1, 1, 2, 1), (3, 3, 4, 1), (5, 5, 4, 1)]),
        "J_1_5" => (5, &[(1, 1, 2, 1), (1, 3, 5, 1), (3, 3, 4, 1)]),
        "J_2_5" => (5, &[(1, 1, 2, 1), (1, 4, 5, 1), (3, 3, 5, 1)]),
        "J_3_5" => (5, &[(1, 1, 2, 1), (1, 4, 5, 1), (3, 4, 5, 1), (3, 3, 2, -1), (3, 3, 5, 1)]),
        "J_4_5" => (5, &[(1, 1, 2, 1), (3, 3, 4, 1), (5, 5, 2, -1), (5, 5, 4, 1)]),
        "J_5_5" => (5, &[(1, 1, 2, 1), (3, 3, 4, 1), (3, 5, 2, -1), (3, 5, 4, 1)]),
        "J_6_5" => (5, &[(1, 1, 2, 1), (1, 4, 2, 1), (1, 3, 5, 1)]),
        "J_7_5" => (5, &[(1, 1, 2, 1), (3, 3, 2, 1), (4, 5, 2, 1)]),
        "J_8_5" => (5, &[(1, 1, 2, 1), (1, 4, 5, 1), (2, 4, 3, 2), (1, 5, 3, -1)]),
        _ => return None,
    })
}

/// Canonical flat spelling: accepts "J_{1,2}⊕F^2", "J_1_2+F2", "F^3", "F3", …
pub fn normalize_name(name: &str) -> String {
    let mut s: String = name
        .chars()
        .filter(|c| !c.is_whitespace() && !matches!(c, '{' | '}' | '"' | '\\'))
        .map(|c| match c {
            ',' => '_',
            '⊕' => '+',
            '𝔽' => 'F',
            '𝔍' => 'J',
            c => c,
        })
        .collect();
    s = s.replace("oplus", "+").replace("mathfrak", "").replace("mathbb", "");
    let parts: Vec<String> = s
        .split('+')
        .map(|p| match p.strip_prefix("F^").or_else(|| p.strip_prefix('F')) {
            Some("1") => "F".to_string(),
            Some(k) if !k.is_empty() && k.chars().all(|c| c.is_ascii_digit()) => format!("F{k}"),
            _ => p.to_string(),
        })
        .collect();
    if parts.len() == 1 {
        if let Some(k) = parts[0].strip_prefix('F') {
            return format!("F^{}", if k.is_empty() { "1" } else { k });
        }
    }
    parts.join("+")
}

fn trivial_dim(part: &str) -> Option<usize> {
    match part.strip_prefix('F')? {
        "" => Some(1),
        k => k.parse().ok(),
    }
}

/// Looks up a named algebra: a classified algebra, F^m, or either of these plus F^k.
pub fn catalog(name: &str) -> Result<JJAlgebra> {
    let canon = normalize_name(name);
    let unknown = || Error::UnknownAlgebra(name.to_string());
    if let Some(m) = canon.strip_prefix("F^") {
        let m: usize = m.parse().map_err(|_| unknown())?;
        return Ok(JJAlgebra::zero(canon.clone(), m));
    }
    let (head, extra) = match canon.rsplit_once('+') {
        Some((h, t)) if trivial_dim(t).is_some() && base(h).is_some() => (h, trivial_dim(t).unwrap()),
        _ => (canon.as_str(), 0),
    };
    let (dim, terms) = base(head).ok_or_else(unknown)?;
    let a = JJAlgebra::from_terms(head, dim, terms);
    if extra == 0 {
        return Ok(a);
    }
    Ok(direct_sum(&a, &JJAlgebra::zero("F", extra)).with_name(canon))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, unit, Scalar};

    #[test]
    fn every_listed_algebra_is_jj() {
        for n in NAMES {
            let a = catalog(n).unwrap();
            assert!(a.is_jj(), "{n}");
            assert_eq!(a.name(), n);
            assert!(!a.is_abelian());
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(names_of_dim(2), vec!["J_1_2"]);
        assert_eq!(names_of_dim(3).len(), 2);
        assert_eq!(names_of_dim(4).len(), 5);
        assert_eq!(names_of_dim(5).len(), 14);
    }

    #[test]
    fn aliases() {
        assert_eq!(normalize_name("J_{1,2}"), "J_1_2");
        assert_eq!(normalize_name("J_{1,2}⊕F^2"), "J_1_2+F2");
        assert_eq!(normalize_name("J_{1,2}^2+F^1"), "J_1_2^2+F");
        assert_eq!(normalize_name("F3"), "F^3");
        assert_eq!(normalize_name("F"), "F^1");
        assert_eq!(normalize_name(r"\mathfrak{J}_{2,4}\oplus \F"), "J_2_4+F");
        assert_eq!(catalog("J_{8,5}").unwrap(), catalog("J_8_5").unwrap());
        assert_eq!(catalog("J_1_5+F").unwrap().dim(), 6);
        assert!(catalog("J_9_5").is_err());
        assert!(catalog("F^x").is_err());
    }

    #[test]
    fn structure_constants() {
        let j13 = catalog("J_{1,3}").unwrap();
        assert_eq!(j13.basis_product(0, 0), unit(3, 1).as_slice());
        assert_eq!(j13.basis_product(2, 2), unit(3, 1).as_slice());
        assert_eq!(j13.nonzero_products().len(), 2);
        let j35 = catalog("J_{3,5}").unwrap();
        assert_eq!(j35.basis_product(0, 3), unit(5, 4).as_slice());
        assert_eq!(j35.basis_product(2, 3), unit(5, 4).as_slice());
        let mut v: Vec<Scalar> = unit(5, 4);
        v[1] = int(-1);
        assert_eq!(j35.basis_product(2, 2), v.as_slice());
        let f3 = catalog("F^3").unwrap();
        assert_eq!(f3.dim(), 3);
        assert!(f3.is_abelian());
    }

    #[test]
    fn indecomposable_names() {
        let ind: Vec<&str> = NAMES.iter().copied().filter(|n| is_indecomposable_name(n)).collect();
        assert_eq!(ind.len(), 12);
        assert!(!is_indecomposable_name("J_1_2^2"));
    }
}
