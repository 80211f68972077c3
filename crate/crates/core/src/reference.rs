//! Published classification data for dimensions 2 to 5: dim H², hand-picked
//! representative cocycles, extendible cocycles, jump diagrams and invariant forms.

/// dim H² of each nontrivial algebra.
pub const H2_DIMS: [(&str, usize); 22] = [
    ("J_1_2", 0),
    ("J_1_2+F", 4),
    ("J_1_3", 2),
    ("J_1_2+F2", 15),
    ("J_1_3+F", 10),
    ("J_1_2^2", 2),
    ("J_1_4", 4),
    ("J_2_4", 8),
    ("J_1_2+F3", 36),
    ("J_1_3+F2", 27),
    ("J_1_2^2+F", 12),
    ("J_1_4+F", 16),
    ("J_2_4+F", 22),
    ("J_1_2+J_1_3", 8),
    ("J_1_5", 6),
    ("J_2_5", 10),
    ("J_3_5", 8),
    ("J_4_5", 4),
    ("J_5_5", 6),
    ("J_6_5", 13),
    ("J_7_5", 20),
    ("J_8_5", 1),
];

const REPRESENTATIVES: [(&str, &str); 20] = [
    ("J_1_2", ""),
    ("J_1_2+F", "e^{1,3}_1-2e^{2,3}_2, e^{1,3}_3, e^{3,3}_2, e^{3,3}_3"),
    ("J_1_3", "e^{1,3}_1-2e^{2,3}_2+2e^{3,3}_3, e^{1,3}_3-2e^{3,3}_1"),
    ("J_1_2+F2", "e^{1,3}_1-2e^{2,3}_2, e^{1,4}_1-2e^{2,4}_2, e^{1,3}_3, e^{1,3}_4, e^{1,4}_3, e^{1,4}_4, e^{3,3}_2, e^{3,3}_3, e^{3,3}_4, e^{3,4}_2, e^{3,4}_3, e^{3,4}_4, e^{4,4}_2, e^{4,4}_3, e^{4,4}_4"),
    ("J_1_3+F", "e^{1,3}_1-2e^{2,3}_2+2e^{3,3}_3, e^{1,4}_1-2e^{2,4}_2+e^{3,4}_3, e^{1,3}_3-2e^{3,3}_1, e^{1,4}_3-e^{3,4}_1, e^{1,1}_4, e^{1,3}_4, e^{1,4}_4, e^{3,4}_4, e^{4,4}_2, e^{4,4}_4"),
    ("J_1_2^2", "e^{1,3}_1-2e^{2,3}_2, e^{1,3}_3-2e^{1,4}_4"),
    ("J_1_4", "e^{1,4}_2-2e^{2,3}_2, e^{1,4}_4-2e^{2,3}_4, 2e^{3,3}_3-e^{3,4}_4, e^{3,3}_2"),
    ("J_2_4", "e^{1,3}_1-2e^{2,3}_2+2e^{3,4}_4, e^{1,4}_1-2e^{2,4}_2+4e^{4,4}_4, e^{1,3}_3-e^{3,4}_1, e^{1,3}_4-2e^{3,3}_1, e^{1,4}_3-2e^{4,4}_1, e^{1,4}_4-e^{3,4}_1, 2e^{3,3}_3-e^{3,4}_4, e^{3,4}_3-2e^{4,4}_4"),
    ("J_1_2^2+F", "e^{1,3}_1-2e^{2,3}_2, e^{1,3}_3-2e^{1,4}_4, e^{1,5}_1-2e^{2,5}_2, e^{3,5}_3-2e^{4,5}_4, e^{1,3}_5, e^{1,5}_4, e^{1,5}_5, e^{3,5}_2, e^{3,5}_5, e^{5,5}_2, e^{5,5}_4, e^{5,5}_5"),
    ("J_1_4+F", "e^{1,5}_1-2e^{2,5}_2-e^{4,5}_4, e^{1,4}_2-2e^{2,3}_2, e^{1,4}_4-2e^{2,3}_4, e^{1,4}_5-2e^{2,3}_5, e^{1,5}_3-2e^{2,5}_4, e^{3,4}_4-2e^{3,3}_3, e^{3,5}_3-e^{4,5}_4, e^{1,5}_2, e^{1,5}_5, e^{3,3}_2, e^{3,3}_5, e^{3,5}_2, e^{3,5}_5, e^{5,5}_2, e^{5,5}_4, e^{5,5}_5"),
    ("J_2_4+F", "e^{1,3}_1-2e^{2,3}_2+2e^{3,4}_4, e^{1,4}_1-2e^{2,4}_2+4e^{4,4}_4, e^{1,5}_1-2e^{2,5}_2+2e^{4,5}_4, e^{1,3}_3-e^{3,4}_1, e^{1,3}_4-2e^{3,3}_1, e^{1,4}_3-2e^{4,4}_1, e^{1,4}_4-e^{3,4}_1, e^{1,5}_3-e^{4,5}_1, e^{1,5}_4-e^{3,5}_1, e^{3,4}_4-2e^{3,3}_3, e^{3,4}_3-2e^{4,4}_4, e^{3,5}_3-e^{4,5}_4, e^{1,1}_5, e^{1,3}_5, e^{1,4}_5, e^{1,5}_5, e^{3,3}_5, e^{3,5}_5, e^{4,4}_5, e^{4,5}_5, e^{5,5}_2, e^{5,5}_5"),
    ("J_1_2+J_1_3", "e^{1,3}_3-2e^{1,4}_4+e^{1,5}_5, e^{3,5}_3-2e^{4,5}_4+2e^{5,5}_5, e^{1,3}_1-2e^{2,3}_2, e^{1,3}_5-e^{1,5}_3, e^{1,5}_1-2e^{2,5}_2, e^{3,5}_5-2e^{5,5}_3, e^{3,3}_2, e^{3,5}_2"),
    ("J_1_5", "e^{3,5}_2-2e^{1,4}_2, e^{3,5}_4-2e^{1,4}_4, e^{3,5}_5-2e^{1,4}_5, e^{1,5}_2-2e^{2,3}_2, e^{1,5}_4-2e^{2,3}_4, e^{1,5}_5-2e^{2,3}_5"),
    ("J_2_5", "e^{1,3}_1-2e^{2,3}_2-e^{3,4}_4, e^{1,3}_3-2e^{1,5}_5+4e^{2,4}_5, e^{1,4}_1-2e^{2,4}_2-2e^{4,4}_4, e^{3,4}_3+4e^{4,4}_4-2e^{4,5}_5, e^{1,3}_4-2e^{2,3}_5, e^{1,4}_3-e^{3,4}_4, e^{1,4}_4-2e^{2,4}_5, e^{1,4}_2, e^{3,4}_2, e^{4,4}_2"),
    ("J_3_5", "e^{1,3}_1-2e^{2,3}_2+2e^{3,4}_1-2e^{3,4}_3-e^{3,4}_4-2e^{3,5}_2-12e^{4,4}_4+6e^{4,5}_5, e^{1,3}_3+2e^{3,3}_1-2e^{3,3}_4-3e^{3,4}_4+2e^{3,5}_5, e^{1,5}_2-2e^{2,4}_2-e^{3,3}_1-e^{3,4}_1+e^{3,4}_3+2e^{4,4}_4-e^{4,5}_5, e^{3,3}_3-e^{3,4}_1+e^{3,4}_3+e^{3,4}_4+e^{3,5}_2-e^{3,5}_5+6e^{4,4}_4-3e^{4,5}_5, e^{1,3}_4-2e^{2,3}_5-2e^{3,3}_4, e^{1,5}_5-2e^{2,4}_5-e^{3,3}_4-2e^{3,4}_4+e^{3,5}_5, e^{4,4}_2, e^{4,4}_5"),
    ("J_4_5", "e^{1,3}_1-2e^{2,3}_2+e^{3,5}_5-2e^{5,5}_3, e^{1,3}_3-2e^{1,4}_4+e^{1,5}_5+2e^{5,5}_1, e^{1,3}_5-e^{1,5}_3+e^{3,5}_1, e^{1,5}_1-2e^{2,5}_2+e^{3,5}_3-2e^{4,5}_4+2e^{5,5}_5"),
    ("J_5_5", "e^{1,3}_1-2e^{2,3}_2-2e^{3,5}_3-4e^{4,5}_2+4e^{4,5}_4-4e^{5,5}_5, e^{1,5}_1-2e^{2,5}_2+e^{3,5}_3-2e^{4,5}_4+2e^{5,5}_5, e^{1,3}_3-2e^{1,4}_4+e^{1,5}_5+2e^{3,5}_1, e^{1,3}_5+2e^{1,4}_2-2e^{1,4}_4+2e^{1,5}_5, e^{3,5}_5+2e^{4,5}_2-2e^{4,5}_4+4e^{5,5}_5, e^{5,5}_2"),
    ("J_6_5", "e^{1,4}_1-2e^{2,4}_2+2e^{4,4}_4-e^{4,5}_5, e^{1,4}_3-2e^{2,4}_5+4e^{4,4}_3, e^{1,4}_4-2e^{2,4}_2+4e^{4,4}_4, e^{1,5}_2-2e^{2,3}_2+2e^{4,5}_2, e^{1,5}_5-2e^{2,3}_5+2e^{4,5}_5, e^{3,5}_5-2e^{3,3}_3, e^{3,5}_2-2e^{3,3}_4, e^{3,4}_3-e^{4,5}_5, e^{3,4}_4-e^{4,5}_2, e^{3,3}_2, e^{3,3}_5, e^{4,4}_2, e^{4,4}_5"),
    ("J_7_5", "e^{1,3}_1-2e^{2,3}_2+2e^{3,3}_3+2e^{4,5}_3, e^{1,4}_1-2e^{2,4}_2+e^{3,4}_3+2e^{4,5}_5, e^{1,5}_1-2e^{2,5}_2+e^{3,5}_3+4e^{5,5}_5, e^{1,3}_4-e^{3,5}_1, e^{1,3}_5-e^{3,4}_1, e^{1,4}_3-e^{3,4}_1, e^{1,4}_4-e^{4,5}_1, e^{1,5}_3-e^{3,5}_1, e^{1,5}_5-e^{4,5}_1, e^{3,4}_4-e^{4,5}_3, e^{3,5}_5-e^{4,5}_3, e^{1,3}_3-2e^{3,3}_1, e^{1,4}_5-2e^{4,4}_1, e^{1,5}_4-2e^{5,5}_1, e^{3,5}_3-2e^{3,3}_4, e^{3,4}_3-2e^{3,3}_5, e^{3,4}_5-2e^{4,4}_3, e^{3,5}_4-2e^{5,5}_3, e^{4,5}_5-2e^{4,4}_4, e^{4,5}_4-2e^{5,5}_5"),
    ("J_8_5", "e^{3,4}_3-2e^{4,4}_4+e^{4,5}_5+2e^{5,5}_3"),
];

const EXTENDIBLE: [(&str, &str); 14] = [
    ("J_1_2+F", "e^{3,3}_2"),
    ("J_1_2+F2", "e^{1,3}_4, e^{1,4}_3, e^{3,3}_2, e^{3,3}_4, e^{3,4}_2, e^{4,4}_2, e^{4,4}_3"),
    ("J_1_3+F", "e^{1,1}_4, e^{1,3}_4, e^{4,4}_2"),
    ("J_1_4", "e^{3,3}_2"),
    ("J_1_2^2+F", "e^{1,3}_5, e^{1,5}_4, e^{3,5}_2, e^{5,5}_2, e^{5,5}_4"),
    ("J_1_4+F", "e^{1,4}_5-2e^{2,3}_5, e^{1,5}_3-2e^{2,5}_4, e^{1,5}_2, e^{3,3}_2, e^{3,3}_5, e^{3,5}_2, e^{5,5}_2, e^{5,5}_4"),
    ("J_2_4+F", "e^{1,1}_5, e^{1,3}_5, e^{1,4}_5, e^{3,3}_5, e^{4,4}_5, e^{5,5}_2"),
    ("J_1_2+J_1_3", "e^{3,3}_2, e^{3,5}_2"),
    ("J_1_5", "e^{3,5}_2-2e^{1,4}_2, e^{1,5}_4-2e^{2,3}_4"),
    ("J_2_5", "e^{1,3}_4-2e^{2,3}_5, e^{1,4}_2, e^{3,4}_2, e^{4,4}_2"),
    ("J_3_5", "e^{1,3}_4-2e^{2,3}_5-2e^{3,3}_4, e^{4,4}_2, e^{4,4}_5"),
    ("J_5_5", "e^{5,5}_2"),
    ("J_6_5", "e^{1,4}_3-2e^{2,4}_5+4e^{4,4}_3, e^{3,5}_2-2e^{3,3}_4, e^{3,3}_2, e^{3,3}_5, e^{4,4}_2, e^{4,4}_5"),
    ("J_7_5", ""),
];

/// A second extendible line printed under J_{1,3}⊕F repeating the J_{1,3} representatives.
/// Neither cochain is real in J_{1,3} or in J_{1,3}⊕F; the later J_{1,3}⊕F line is authoritative.
pub const DUPLICATE_J13F_LINE: &str = "e^{1,3}_1-2e^{2,3}_2+2e^{3,3}_3, e^{1,3}_3-2e^{3,3}_1";

fn split(list: &str) -> Vec<String> {
    list.split(", ").filter(|s| !s.is_empty()).map(str::to_string).collect()
}

fn j12_f3_representatives() -> Vec<String> {
    let mut v: Vec<String> = ["e^{1,4}_1-2e^{2,4}_2", "e^{1,3}_1-2e^{2,3}_2", "e^{1,5}_1-2e^{2,5}_2"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for a in 3..=5 {
        for b in 3..=5 {
            v.push(format!("e^{{1,{a}}}_{b}"));
        }
    }
    for a in 3..=5 {
        for b in a..=5 {
            for j in 2..=5 {
                v.push(format!("e^{{{a},{b}}}_{j}"));
            }
        }
    }
    v
}

fn j13_f2_representatives() -> Vec<String> {
    let mut v: Vec<String> = [
        "e^{1,3}_1-2e^{2,3}_2+2e^{3,3}_3",
        "e^{1,4}_1-2e^{2,4}_2+e^{3,4}_3",
        "e^{1,5}_1-2e^{2,5}_2+e^{3,5}_3",
        "e^{1,3}_3-2e^{3,3}_1",
        "e^{1,4}_3-e^{3,4}_1",
        "e^{1,5}_3-e^{3,5}_1",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for a in [4, 5] {
        v.push(format!("e^{{1,1}}_{a}"));
    }
    for a in [4, 5] {
        v.push(format!("e^{{1,3}}_{a}"));
    }
    for a in [4, 5] {
        for b in [4, 5] {
            v.push(format!("e^{{1,{a}}}_{b}"));
        }
    }
    for a in [4, 5] {
        for b in [4, 5] {
            v.push(format!("e^{{3,{a}}}_{b}"));
        }
    }
    for (a, b) in [(4, 4), (4, 5), (5, 5)] {
        for i in [2, 4, 5] {
            v.push(format!("e^{{{a},{b}}}_{i}"));
        }
    }
    v
}

/// e^{1,i₁}_{i₂}, e^{j₁,j₂}_j with 3 ≤ i₁ ≠ i₂ ≤ 5, 3 ≤ j₁ ≤ j₂ ≤ 5, 2 ≤ j ≤ 5, j ∉ {j₁, j₂}.
fn j12_f3_extendible() -> Vec<String> {
    let mut v = Vec::new();
    for a in 3..=5 {
        for b in (3..=5).filter(|&b| b != a) {
            v.push(format!("e^{{1,{a}}}_{b}"));
        }
    }
    for a in 3..=5 {
        for b in a..=5 {
            for j in (2..=5).filter(|&j| j != a && j != b) {
                v.push(format!("e^{{{a},{b}}}_{j}"));
            }
        }
    }
    v
}

/// e^{1,1}_{j₁}, e^{1,3}_{j₁}, e^{1,j₁}_{j₂}, e^{3,j₁}_{j₂}, e^{j₁,j₁}_2, e^{j₁,j₁}_{j₂}, e^{4,5}_2
/// with {j₁, j₂} = {4, 5}.
fn j13_f2_extendible() -> Vec<String> {
    let pairs = [(4, 5), (5, 4)];
    let mut v = Vec::new();
    for (a, _) in pairs {
        v.push(format!("e^{{1,1}}_{a}"));
    }
    for (a, _) in pairs {
        v.push(format!("e^{{1,3}}_{a}"));
    }
    for (a, b) in pairs {
        v.push(format!("e^{{1,{a}}}_{b}"));
    }
    for (a, b) in pairs {
        v.push(format!("e^{{3,{a}}}_{b}"));
    }
    for (a, _) in pairs {
        v.push(format!("e^{{{a},{a}}}_2"));
    }
    for (a, b) in pairs {
        v.push(format!("e^{{{a},{a}}}_{b}"));
    }
    v.push("e^{4,5}_2".into());
    v
}

/// Representative cocycles of H² in the 1-based e^{i,j}_k notation.
pub fn representatives(name: &str) -> Option<Vec<String>> {
    match name {
        "J_1_2+F3" => Some(j12_f3_representatives()),
        "J_1_3+F2" => Some(j13_f2_representatives()),
        _ => REPRESENTATIVES.iter().find(|(n, _)| *n == name).map(|(_, l)| split(l)),
    }
}

/// The representatives defining extendible infinitesimal deformations (empty when none are listed).
pub fn extendible(name: &str) -> Option<Vec<String>> {
    if !H2_DIMS.iter().any(|(n, _)| *n == name) {
        return None;
    }
    Some(match name {
        "J_1_2+F3" => j12_f3_extendible(),
        "J_1_3+F2" => j13_f2_extendible(),
        _ => EXTENDIBLE.iter().find(|(n, _)| *n == name).map(|(_, l)| split(l)).unwrap_or_default(),
    })
}

/// Arrows of the jump-deformation diagrams, by dimension.
pub fn jump_edges(dim: usize) -> Option<&'static [(&'static str, &'static str)]> {
    const D3: [(&str, &str); 1] = [("J_1_2+F", "J_1_3")];
    const D4: [(&str, &str); 5] = [
        ("J_1_2+F2", "J_1_4"),
        ("J_1_2+F2", "J_1_3+F"),
        ("J_1_4", "J_1_2^2"),
        ("J_1_3+F", "J_1_2^2"),
        ("J_1_3+F", "J_2_4"),
    ];
    const D5: [(&str, &str); 22] = [
        ("J_1_2+F3", "J_1_3+F2"),
        ("J_1_2+F3", "J_1_4+F"),
        ("J_1_4+F", "J_1_2^2+F"),
        ("J_1_4+F", "J_6_5"),
        ("J_1_3+F2", "J_1_2^2+F"),
        ("J_1_3+F2", "J_2_4+F"),
        ("J_1_2^2+F", "J_1_5"),
        ("J_1_2^2+F", "J_2_5"),
        ("J_1_2^2+F", "J_1_2+J_1_3"),
        ("J_2_4+F", "J_1_2+J_1_3"),
        ("J_2_4+F", "J_2_5"),
        ("J_2_4+F", "J_3_5"),
        ("J_2_4+F", "J_7_5"),
        ("J_6_5", "J_5_5"),
        ("J_6_5", "J_3_5"),
        ("J_1_5", "J_8_5"),
        ("J_2_5", "J_8_5"),
        ("J_2_5", "J_5_5"),
        ("J_1_2+J_1_3", "J_4_5"),
        ("J_5_5", "J_4_5"),
        ("J_3_5", "J_4_5"),
        ("J_3_5", "J_8_5"),
    ];
    match dim {
        3 => Some(&D3),
        4 => Some(&D4),
        5 => Some(&D5),
        _ => None,
    }
}

/// Symplectic form of J_{1,4}, row-major.
pub const OMEGA_J14: [i64; 16] = [0, 0, 0, 1, 0, 0, 2, 0, 0, -2, 0, 0, -1, 0, 0, 0];
/// Invariant symmetric form of J_{1,2}.
pub const B_J12: [i64; 4] = [0, 1, 1, 0];
/// Invariant symmetric form of J_{1,4}.
pub const B_J14: [i64; 16] = [0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_lengths_match_dimensions() {
        for (name, dim) in H2_DIMS {
            assert_eq!(representatives(name).unwrap().len(), dim, "{name}");
        }
    }

    #[test]
    fn parametric_extendible_counts() {
        assert_eq!(j12_f3_extendible().len(), 6 + 3 * 3 + 3 * 2);
        assert_eq!(j13_f2_extendible().len(), 13);
        assert_eq!(extendible("J_8_5").unwrap().len(), 0);
        assert!(extendible("J_9_9").is_none());
    }

    #[test]
    fn diagram_sizes() {
        assert_eq!(jump_edges(3).unwrap().len(), 1);
        assert_eq!(jump_edges(4).unwrap().len(), 5);
        assert!(jump_edges(5).unwrap().contains(&("J_2_4+F", "J_7_5")));
        assert!(jump_edges(6).is_none());
    }
}
