//! Fuchsian signatures: Euler characteristic factor and the finite / euclidean /
//! hyperbolic trichotomy.

use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::GroupId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("cone order {0} must be at least 2")]
    ConeOrder(u32),
    #[error("a non-orientable signature needs genus at least 1")]
    NonOrientableGenusZero,
    #[error("the Euler factor is only defined for a closed base (p = 0), got p = {0}")]
    Bordered(u32),
}

/// `(orientable, g, alphas, p)`: genus, cone orders and number of boundary
/// generators of a Fuchsian presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PresentationSignature {
    orientable: bool,
    genus: u32,
    alphas: Vec<u32>,
    boundary: u32,
}

impl PresentationSignature {
    pub fn new(
        orientable: bool,
        genus: u32,
        alphas: Vec<u32>,
        boundary: u32,
    ) -> Result<Self, SignatureError> {
        if let Some(&bad) = alphas.iter().find(|&&a| a < 2) {
            return Err(SignatureError::ConeOrder(bad));
        }
        if !orientable && genus == 0 {
            return Err(SignatureError::NonOrientableGenusZero);
        }
        Ok(PresentationSignature {
            orientable,
            genus,
            alphas,
            boundary,
        })
    }

    pub fn closed(orientable: bool, genus: u32, alphas: Vec<u32>) -> Result<Self, SignatureError> {
        Self::new(orientable, genus, alphas, 0)
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn alphas(&self) -> &[u32] {
        &self.alphas
    }

    pub fn boundary(&self) -> u32 {
        self.boundary
    }

    fn sorted_alphas(&self) -> Vec<u32> {
        let mut a = self.alphas.clone();
        a.sort_unstable();
        a
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FiniteName {
    Cyclic(u64),
    /// Dihedral group of the given order `2n`.
    Dihedral(u64),
    Tetrahedral,
    Octahedral,
    Icosahedral,
    Z4,
    Unnamed,
}

impl fmt::Display for FiniteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteName::Cyclic(n) => write!(f, "Cyclic({n})"),
            FiniteName::Dihedral(n) => write!(f, "Dihedral({n})"),
            FiniteName::Tetrahedral => f.write_str("Tetrahedral"),
            FiniteName::Octahedral => f.write_str("Octahedral"),
            FiniteName::Icosahedral => f.write_str("Icosahedral"),
            FiniteName::Z4 => f.write_str("Z4"),
            FiniteName::Unnamed => f.write_str("Unnamed"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    Finite(FiniteName),
    Euclidean(GroupId),
    Hyperbolic,
    FreeProductInfinite,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Finite(name) => write!(f, "Finite: {name}"),
            GroupKind::Euclidean(g) => write!(f, "Euclidean: {g}"),
            GroupKind::Hyperbolic => f.write_str("Hyperbolic"),
            GroupKind::FreeProductInfinite => f.write_str("FreeProductInfinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    /// `None` for a bordered base.
    pub chi_factor: Option<Rational64>,
    pub kind: GroupKind,
}

/// `2 - 2g - sum(1 - 1/alpha)` (orientable) or `2 - g - sum(1 - 1/alpha)`.
pub fn euler_factor(sig: &PresentationSignature) -> Result<Rational64, SignatureError> {
    if sig.boundary > 0 {
        return Err(SignatureError::Bordered(sig.boundary));
    }
    let g = i64::from(sig.genus);
    let base = if sig.orientable { 2 - 2 * g } else { 2 - g };
    let one = Rational64::from_integer(1);
    Ok(sig
        .alphas
        .iter()
        .fold(Rational64::from_integer(base), |acc, &a| {
            acc - (one - Rational64::new(1, i64::from(a)))
        }))
}

pub fn classify(sig: &PresentationSignature) -> ClassificationResult {
    if sig.boundary > 0 {
        return ClassificationResult {
            chi_factor: None,
            kind: classify_bordered(sig),
        };
    }
    let chi = euler_factor(sig).expect("closed signature");
    let zero = Rational64::from_integer(0);
    let kind = if chi > zero {
        GroupKind::Finite(finite_name(sig))
    } else if chi == zero {
        GroupKind::Euclidean(euclidean_group(sig).expect("every zero-chi signature is listed"))
    } else {
        GroupKind::Hyperbolic
    };
    ClassificationResult {
        chi_factor: Some(chi),
        kind,
    }
}

// Removing one boundary generator leaves a free product of cyclic groups:
// 2g (or g) infinite factors, q finite ones and p - 1 more infinite ones.
fn classify_bordered(sig: &PresentationSignature) -> GroupKind {
    let surface = if sig.orientable { 2 * sig.genus } else { sig.genus };
    let infinite = surface + sig.boundary - 1;
    match (infinite, sig.alphas.as_slice()) {
        (0, []) => GroupKind::Finite(FiniteName::Cyclic(1)),
        (0, [a]) => GroupKind::Finite(FiniteName::Cyclic(u64::from(*a))),
        _ => GroupKind::FreeProductInfinite,
    }
}

fn finite_name(sig: &PresentationSignature) -> FiniteName {
    let a = sig.sorted_alphas();
    match (sig.orientable, sig.genus, a.as_slice()) {
        // c1 ... cq = 1 with q <= 2 leaves <c1> with c1^gcd(alphas) = 1.
        (true, 0, []) | (true, 0, [_]) => FiniteName::Cyclic(1),
        (true, 0, [x, y]) => FiniteName::Cyclic(u64::from(x.gcd(y))),
        (true, 0, [2, 2, n]) => FiniteName::Dihedral(2 * u64::from(*n)),
        (true, 0, [2, 3, 3]) => FiniteName::Tetrahedral,
        (true, 0, [2, 3, 4]) => FiniteName::Octahedral,
        (true, 0, [2, 3, 5]) => FiniteName::Icosahedral,
        // a^2 = 1
        (false, 1, []) => FiniteName::Cyclic(2),
        (false, 1, [2]) => FiniteName::Z4,
        // a^2 c = 1 makes c = a^-2, so a has order 2 alpha.
        (false, 1, [n]) => FiniteName::Cyclic(2 * u64::from(*n)),
        _ => FiniteName::Unnamed,
    }
}

fn euclidean_group(sig: &PresentationSignature) -> Option<GroupId> {
    let a = sig.sorted_alphas();
    Some(match (sig.orientable, sig.genus, a.as_slice()) {
        (true, 1, []) => GroupId::G0,
        (true, 0, [2, 2, 2, 2]) => GroupId::G2,
        (true, 0, [3, 3, 3]) => GroupId::G3,
        (true, 0, [2, 4, 4]) => GroupId::G4,
        (true, 0, [2, 3, 6]) => GroupId::G5,
        (false, 2, []) => GroupId::G1,
        (false, 1, [2, 2]) => GroupId::G6,
        _ => return None,
    })
}

/// The signature whose group is `group`.
pub fn euclidean_signature(group: GroupId) -> PresentationSignature {
    let (orientable, genus, alphas) = match group {
        GroupId::G0 => (true, 1, vec![]),
        GroupId::G1 => (false, 2, vec![]),
        GroupId::G2 => (true, 0, vec![2, 2, 2, 2]),
        GroupId::G3 => (true, 0, vec![3, 3, 3]),
        GroupId::G4 => (true, 0, vec![2, 4, 4]),
        GroupId::G5 => (true, 0, vec![2, 3, 6]),
        GroupId::G6 => (false, 1, vec![2, 2]),
    };
    PresentationSignature::closed(orientable, genus, alphas).expect("valid")
}

/// Every closed signature with `genus <= max_genus`, at most `max_q` cone points and
/// cone orders in `2..=max_alpha`; cone orders are listed in nondecreasing order.
pub fn enumerate_closed(max_genus: u32, max_q: usize, max_alpha: u32) -> Vec<PresentationSignature> {
    fn multisets(max_q: usize, lo: u32, hi: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(prefix.clone());
        if prefix.len() == max_q {
            return;
        }
        for a in lo..=hi {
            prefix.push(a);
            multisets(max_q, a, hi, prefix, out);
            prefix.pop();
        }
    }
    let mut cone_sets = Vec::new();
    multisets(max_q, 2, max_alpha, &mut Vec::new(), &mut cone_sets);

    let mut out = Vec::new();
    for orientable in [true, false] {
        let first = if orientable { 0 } else { 1 };
        for genus in first..=max_genus {
            for alphas in &cone_sets {
                out.push(
                    PresentationSignature::closed(orientable, genus, alphas.clone())
                        .expect("valid by construction"),
                );
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn closed(orientable: bool, genus: u32, alphas: &[u32]) -> PresentationSignature {
        PresentationSignature::closed(orientable, genus, alphas.to_vec()).unwrap()
    }

    #[test]
    fn euler_factor_values() {
        assert_eq!(
            euler_factor(&closed(true, 0, &[3, 3, 3])).unwrap(),
            Rational64::from_integer(0)
        );
        for n in 2..20 {
            assert_eq!(
                euler_factor(&closed(true, 0, &[2, 2, n])).unwrap(),
                Rational64::new(1, i64::from(n))
            );
        }
        assert_eq!(
            euler_factor(&closed(true, 0, &[2, 3, 7])).unwrap(),
            Rational64::new(-1, 42)
        );
        let bordered = PresentationSignature::new(true, 0, vec![2], 1).unwrap();
        assert_eq!(euler_factor(&bordered).unwrap_err(), SignatureError::Bordered(1));
    }

    #[test]
    fn named_examples() {
        assert_eq!(
            classify(&closed(true, 0, &[2, 3, 5])).kind,
            GroupKind::Finite(FiniteName::Icosahedral)
        );
        assert_eq!(classify(&closed(false, 2, &[])).kind, GroupKind::Euclidean(GroupId::G1));
        assert_eq!(classify(&closed(false, 1, &[2, 2])).kind, GroupKind::Euclidean(GroupId::G6));
        assert_eq!(classify(&closed(true, 0, &[2, 3, 7])).kind, GroupKind::Hyperbolic);
        assert_eq!(classify(&closed(false, 1, &[2])).kind, GroupKind::Finite(FiniteName::Z4));
        assert_eq!(
            classify(&closed(true, 0, &[5, 2, 2])).kind,
            GroupKind::Finite(FiniteName::Dihedral(10))
        );
        assert_eq!(
            classify(&closed(true, 0, &[4, 6])).kind,
            GroupKind::Finite(FiniteName::Cyclic(2))
        );
        assert_eq!(
            classify(&closed(false, 1, &[3])).kind,
            GroupKind::Finite(FiniteName::Cyclic(6))
        );
        assert_eq!(
            classify(&closed(false, 1, &[])).kind,
            GroupKind::Finite(FiniteName::Cyclic(2))
        );
    }

    #[test]
    fn bordered_cases() {
        let sig = |o, g, a: &[u32], p| PresentationSignature::new(o, g, a.to_vec(), p).unwrap();
        assert_eq!(
            classify(&sig(true, 0, &[5], 1)).kind,
            GroupKind::Finite(FiniteName::Cyclic(5))
        );
        assert_eq!(
            classify(&sig(true, 0, &[], 1)).kind,
            GroupKind::Finite(FiniteName::Cyclic(1))
        );
        assert_eq!(classify(&sig(true, 0, &[2, 3], 1)).kind, GroupKind::FreeProductInfinite);
        assert_eq!(classify(&sig(true, 0, &[], 2)).kind, GroupKind::FreeProductInfinite);
        assert_eq!(classify(&sig(false, 1, &[], 1)).kind, GroupKind::FreeProductInfinite);
        assert_eq!(classify(&sig(true, 0, &[3], 2)).kind, GroupKind::FreeProductInfinite);
        assert!(classify(&sig(true, 0, &[3], 1)).chi_factor.is_none());
    }

    #[test]
    fn invalid_signatures() {
        assert_eq!(
            PresentationSignature::closed(true, 0, vec![2, 1]).unwrap_err(),
            SignatureError::ConeOrder(1)
        );
        assert_eq!(
            PresentationSignature::closed(false, 0, vec![2]).unwrap_err(),
            SignatureError::NonOrientableGenusZero
        );
    }

    #[test]
    fn euclidean_signatures_round_trip() {
        for g in GroupId::ALL {
            assert_eq!(classify(&euclidean_signature(g)).kind, GroupKind::Euclidean(g));
        }
    }

    #[test]
    fn permutation_invariance() {
        let perms: [&[u32]; 6] = [
            &[2, 3, 7],
            &[2, 7, 3],
            &[3, 2, 7],
            &[3, 7, 2],
            &[7, 2, 3],
            &[7, 3, 2],
        ];
        let base = classify(&closed(true, 0, perms[0]));
        for p in perms {
            assert_eq!(classify(&closed(true, 0, p)), base);
        }
        assert_eq!(
            classify(&closed(true, 0, &[4, 2, 4])).kind,
            GroupKind::Euclidean(GroupId::G4)
        );
    }

    #[test]
    fn named_finite_cases_never_fall_through() {
        for sig in enumerate_closed(3, 6, 12) {
            let res = classify(&sig);
            assert_ne!(res.kind, GroupKind::Finite(FiniteName::Unnamed), "{sig:?}");
        }
    }

    #[test]
    fn enumeration_counts() {
        // multisets of size <= 2 from {2, 3}: [], [2], [3], [2,2], [2,3], [3,3]
        let sigs = enumerate_closed(1, 2, 3);
        assert_eq!(sigs.len(), 6 * 2 + 6);
    }
}
