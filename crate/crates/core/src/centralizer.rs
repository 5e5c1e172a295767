//! Closed-form centralizers and centers, with membership decision procedures for
//! every subgroup shape that can come back.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraError, GroupElement, GroupId, Order, PointPart, Result};
use crate::words::format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubgroupDescriptor {
    Whole(GroupId),
    /// The translation subgroup `<t1, t2>`.
    Lattice(GroupId),
    Cyclic(GroupElement),
    /// `<x, y>` with `x y x^-1 = y^-1`, `y` a translation and `x^2, y` spanning a
    /// rank-2 lattice.
    KleinBottle(GroupElement, GroupElement),
    Trivial(GroupId),
}

impl SubgroupDescriptor {
    pub fn cyclic(g: GroupElement) -> Result<SubgroupDescriptor> {
        if g.is_identity() {
            return Err(AlgebraError::TrivialGenerator);
        }
        Ok(SubgroupDescriptor::Cyclic(g))
    }

    /// Panics if the pair does not present a Klein bottle group; only the centralizer
    /// tables construct these.
    fn klein_bottle(x: GroupElement, y: GroupElement) -> SubgroupDescriptor {
        let lhs = x
            .multiply(&y)
            .and_then(|xy| xy.multiply(&x.inverse()?))
            .expect("small exponents");
        assert_eq!(lhs, y.inverse().unwrap(), "x y x^-1 != y^-1");
        let sq = x.power(2).unwrap();
        assert!(y.is_translation() && sq.is_translation());
        let [a, b] = sq.translation_part();
        let [c, d] = y.translation_part();
        assert_ne!(a * d - b * c, 0, "x^2 and y are dependent");
        SubgroupDescriptor::KleinBottle(x, y)
    }

    pub fn group(&self) -> GroupId {
        match *self {
            SubgroupDescriptor::Whole(g)
            | SubgroupDescriptor::Lattice(g)
            | SubgroupDescriptor::Trivial(g) => g,
            SubgroupDescriptor::Cyclic(x) | SubgroupDescriptor::KleinBottle(x, _) => x.group(),
        }
    }

    pub fn variant_name(&self) -> &'static str {
        match self {
            SubgroupDescriptor::Whole(_) => "Whole",
            SubgroupDescriptor::Lattice(_) => "Lattice",
            SubgroupDescriptor::Cyclic(_) => "Cyclic",
            SubgroupDescriptor::KleinBottle(..) => "KleinBottle",
            SubgroupDescriptor::Trivial(_) => "Trivial",
        }
    }

    /// A generating set.
    pub fn generators(&self) -> Vec<GroupElement> {
        match *self {
            SubgroupDescriptor::Whole(g) => {
                let mut gens = vec![g.t1(), g.t2()];
                gens.extend(match g {
                    GroupId::G0 => vec![],
                    GroupId::G6 => vec![point(g, 1), point(g, 2)],
                    _ => vec![point(g, 1)],
                });
                gens
            }
            SubgroupDescriptor::Lattice(g) => vec![g.t1(), g.t2()],
            SubgroupDescriptor::Cyclic(x) => vec![x],
            SubgroupDescriptor::KleinBottle(x, y) => vec![x, y],
            SubgroupDescriptor::Trivial(_) => vec![],
        }
    }

    pub fn contains(&self, x: &GroupElement) -> Result<bool> {
        let group = self.group();
        if group != x.group() {
            return Err(AlgebraError::GroupMismatch {
                left: group,
                right: x.group(),
            });
        }
        match self {
            SubgroupDescriptor::Whole(_) => Ok(true),
            SubgroupDescriptor::Trivial(_) => Ok(x.is_identity()),
            SubgroupDescriptor::Lattice(_) => Ok(x.is_translation()),
            SubgroupDescriptor::Cyclic(g) => Ok(cyclic_membership(g, x)?.is_some()),
            SubgroupDescriptor::KleinBottle(g, y) => Ok(klein_bottle_coordinates(g, y, x)?.is_some()),
        }
    }
}

fn point(g: GroupId, idx: u8) -> GroupElement {
    g.point(PointPart(idx)).expect("valid symbol")
}

impl fmt::Display for SubgroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.variant_name())?;
        let gens = self.generators();
        if matches!(self, SubgroupDescriptor::Whole(_)) || gens.is_empty() {
            return Ok(());
        }
        let joined: Vec<String> = gens.iter().map(format).collect();
        write!(f, ": {}", joined.join(", "))
    }
}

pub fn commutes(x: &GroupElement, y: &GroupElement) -> Result<bool> {
    x.commutes_with(y)
}

pub fn contains(s: &SubgroupDescriptor, x: &GroupElement) -> Result<bool> {
    s.contains(x)
}

/// Some `k` with `g^k = h`, or `None`.
pub fn cyclic_membership(g: &GroupElement, h: &GroupElement) -> Result<Option<i64>> {
    if g.is_identity() {
        return Err(AlgebraError::TrivialGenerator);
    }
    if g.group() != h.group() {
        return Err(AlgebraError::GroupMismatch {
            left: g.group(),
            right: h.group(),
        });
    }
    if let Order::Finite(k) = g.order() {
        let mut acc = g.group().identity();
        for j in 0..k as i64 {
            if acc == *h {
                return Ok(Some(j));
            }
            acc = acc.multiply(g)?;
        }
        return Ok(None);
    }

    // g^m is a nonzero translation s; g^k = h with k = q m + r, 0 <= r < m,
    // means g^-r h = s^q.
    let m = g.group().twist().symbol_order(g.point_part()) as i64;
    let s = g.power(m)?.translation_part();
    let g_inv = g.inverse()?;
    let mut rest = *h;
    for r in 0..m {
        if rest.is_translation() {
            if let Some(q) = solve_multiple(s, rest.translation_part()) {
                let k = q
                    .checked_mul(m)
                    .and_then(|k| k.checked_add(r))
                    .ok_or(AlgebraError::Overflow)?;
                return Ok(Some(k));
            }
            return Ok(None);
        }
        rest = g_inv.multiply(&rest)?;
    }
    Ok(None)
}

/// `q` with `q * s = t`, for nonzero `s`.
fn solve_multiple(s: [i64; 2], t: [i64; 2]) -> Option<i64> {
    let (i, j) = if s[0] != 0 { (0, 1) } else { (1, 0) };
    if t[i] % s[i] != 0 {
        return None;
    }
    let q = t[i] / s[i];
    (q as i128 * s[j] as i128 == t[j] as i128).then_some(q)
}

/// `(m, n)` with `h = x^m y^n` in the Klein bottle group `<x, y>`.
pub fn klein_bottle_coordinates(
    x: &GroupElement,
    y: &GroupElement,
    h: &GroupElement,
) -> Result<Option<(i64, i64)>> {
    let (parity, target) = if h.is_translation() {
        (0, *h)
    } else if h.point_part() == x.point_part() {
        (1, x.inverse()?.multiply(h)?)
    } else {
        return Ok(None);
    };
    if !target.is_translation() {
        return Ok(None);
    }
    let s = x.power(2)?.translation_part().map(i128::from);
    let yv = y.translation_part().map(i128::from);
    let t = target.translation_part().map(i128::from);
    let det = s[0] * yv[1] - s[1] * yv[0];
    let k_num = t[0] * yv[1] - t[1] * yv[0];
    let n_num = s[0] * t[1] - s[1] * t[0];
    if k_num % det != 0 || n_num % det != 0 {
        return Ok(None);
    }
    let k = narrow(k_num / det)?;
    let n = narrow(n_num / det)?;
    let m = k
        .checked_mul(2)
        .and_then(|m| m.checked_add(parity))
        .ok_or(AlgebraError::Overflow)?;
    Ok(Some((m, n)))
}

fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| AlgebraError::Overflow)
}

fn elem(group: GroupId, n1: i128, n2: i128, w: u8) -> Result<GroupElement> {
    GroupElement::new(group, narrow(n1)?, narrow(n2)?, PointPart(w))
}

/// Centralizer of `u`. The identity gets `Whole`.
pub fn centralizer(u: &GroupElement) -> Result<SubgroupDescriptor> {
    use SubgroupDescriptor::*;
    let g = u.group();
    if u.is_identity() {
        return Ok(Whole(g));
    }
    let n1 = u.n1() as i128;
    let n2 = u.n2() as i128;
    let k = u.point_part().0;
    let cyc = |a: i128, b: i128, w: u8| -> Result<SubgroupDescriptor> {
        SubgroupDescriptor::cyclic(elem(g, a, b, w)?)
    };
    let own = Ok(Cyclic(*u));

    match (g, k) {
        (GroupId::G0, _) => Ok(Whole(g)),
        (_, 0) => match g {
            GroupId::G1 if n2 == 0 => Ok(Whole(g)),
            GroupId::G6 if n1 == 0 => Ok(SubgroupDescriptor::klein_bottle(point(g, 3), g.t1())),
            GroupId::G6 if n2 == 0 => Ok(SubgroupDescriptor::klein_bottle(point(g, 1), g.t2())),
            _ => Ok(Lattice(g)),
        },

        (GroupId::G1, 1) => cyc(0, n2, 1),

        (GroupId::G2, 1) => own,

        (GroupId::G3, 1) => own,
        (GroupId::G3, 2) => cyc(n2, n2 - n1, 1),

        (GroupId::G4, 1) => own,
        (GroupId::G4, 2) if (n1 + n2) % 2 == 0 => cyc((n1 + n2) / 2, (n2 - n1) / 2, 1),
        (GroupId::G4, 2) => own,
        (GroupId::G4, 3) => cyc(n2, -n1, 1),

        (GroupId::G5, 1) => own,
        (GroupId::G5, 2) if (n1 - n2) % 3 == 0 => cyc((2 * n1 + n2) / 3, (n2 - n1) / 3, 1),
        (GroupId::G5, 2) => own,
        (GroupId::G5, 3) if n1 % 2 == 0 && n2 % 2 == 0 => cyc((n1 + n2) / 2, -n1 / 2, 1),
        (GroupId::G5, 3) => own,
        (GroupId::G5, 4) if (n1 - n2) % 3 == 0 => cyc((n1 + 2 * n2) / 3, -(2 * n1 + n2) / 3, 1),
        (GroupId::G5, 4) => cyc(n1 + n2, -n1, 2),
        (GroupId::G5, 5) => cyc(n2, -(n1 + n2), 1),

        (GroupId::G6, 1) => cyc(0, n2, 1),
        (GroupId::G6, 2) => own,
        (GroupId::G6, 3) => cyc(n1, 0, 3),

        _ => unreachable!("point part validated at construction"),
    }
}

pub fn center(group: GroupId) -> SubgroupDescriptor {
    match group {
        GroupId::G0 => SubgroupDescriptor::Whole(group),
        GroupId::G1 => SubgroupDescriptor::Cyclic(group.t1()),
        _ => SubgroupDescriptor::Trivial(group),
    }
}
