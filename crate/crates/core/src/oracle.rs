//! Independent checks: coordinate-ball enumeration, brute-force centralizers and an
//! exact affine realization of each group acting on the plane.

use std::collections::{BTreeSet, HashSet};
use std::ops::Mul;

use num_rational::Rational64;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{GroupElement, GroupId, PointPart, Result};
use crate::centralizer::centralizer;

pub const MAX_WITNESSES: usize = 16;

/// All elements with `|n1|, |n2| <= radius` and every point part, ordered
/// lexicographically by `(n1, n2, point part)`.
pub fn ball(group: GroupId, radius: u32) -> impl Iterator<Item = GroupElement> {
    let r = i64::from(radius);
    (-r..=r).flat_map(move |n1| {
        (-r..=r).flat_map(move |n2| {
            group
                .point_parts()
                .map(move |w| GroupElement::new(group, n1, n2, w).expect("valid symbol"))
        })
    })
}

pub fn brute_centralizer(u: &GroupElement, radius: u32) -> Result<BTreeSet<GroupElement>> {
    let mut out = BTreeSet::new();
    for v in ball(u.group(), radius) {
        if u.commutes_with(&v)? {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Elements of the ball commuting with every element of the ball.
pub fn brute_center(group: GroupId, radius: u32) -> Result<BTreeSet<GroupElement>> {
    let elems: Vec<GroupElement> = ball(group, radius).collect();
    let mut out = BTreeSet::new();
    'outer: for z in &elems {
        for x in &elems {
            if !z.commutes_with(x)? {
                continue 'outer;
            }
        }
        out.insert(*z);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub group: GroupId,
    pub subject: GroupElement,
    pub box_radius: u32,
    pub agree: bool,
    /// Elements where the closed form and brute force disagree, capped at
    /// [`MAX_WITNESSES`], in ball order.
    pub witnesses: Vec<GroupElement>,
}

/// Compares `contains(centralizer(u), v)` against `commutes(u, v)` over the ball.
pub fn verify_centralizer(u: &GroupElement, radius: u32) -> Result<VerificationReport> {
    let z = centralizer(u)?;
    let elems: Vec<GroupElement> = ball(u.group(), radius).collect();
    let verdicts: Vec<Option<GroupElement>> = elems
        .par_iter()
        .map(|v| Ok((u.commutes_with(v)? != z.contains(v)?).then_some(*v)))
        .collect::<Result<_>>()?;
    let witnesses: Vec<GroupElement> = verdicts.into_iter().flatten().take(MAX_WITNESSES).collect();
    Ok(VerificationReport {
        group: u.group(),
        subject: *u,
        box_radius: radius,
        agree: witnesses.is_empty(),
        witnesses,
    })
}

/// Affine map `x -> linear * x + offset` with exact rational entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineIsometry {
    pub linear: [[Rational64; 2]; 2],
    pub offset: [Rational64; 2],
}

fn r(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn half(n: i64) -> Rational64 {
    Rational64::new(n, 2)
}

impl AffineIsometry {
    pub fn identity() -> Self {
        Self::new([[1, 0], [0, 1]], [r(0), r(0)])
    }

    pub fn translation(x: i64, y: i64) -> Self {
        Self::new([[1, 0], [0, 1]], [r(x), r(y)])
    }

    fn new(linear: [[i64; 2]; 2], offset: [Rational64; 2]) -> Self {
        AffineIsometry {
            linear: linear.map(|row| row.map(r)),
            offset,
        }
    }

    pub fn apply(&self, p: [Rational64; 2]) -> [Rational64; 2] {
        let m = &self.linear;
        [
            m[0][0] * p[0] + m[0][1] * p[1] + self.offset[0],
            m[1][0] * p[0] + m[1][1] * p[1] + self.offset[1],
        ]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineIsometry) -> AffineIsometry {
        let (a, b) = (&self.linear, &other.linear);
        let mut linear = [[r(0); 2]; 2];
        for (i, row) in linear.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        let moved = self.apply(other.offset);
        AffineIsometry {
            linear,
            offset: moved,
        }
    }

    pub fn inverse(&self) -> AffineIsometry {
        let m = &self.linear;
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        assert!(!det.is_zero(), "singular linear part");
        let linear = [
            [m[1][1] / det, -m[0][1] / det],
            [-m[1][0] / det, m[0][0] / det],
        ];
        let o = self.offset;
        let offset = [
            -(linear[0][0] * o[0] + linear[0][1] * o[1]),
            -(linear[1][0] * o[0] + linear[1][1] * o[1]),
        ];
        AffineIsometry { linear, offset }
    }

    pub fn pow(&self, k: u32) -> AffineIsometry {
        (0..k).fold(AffineIsometry::identity(), |acc, _| acc.compose(self))
    }

    pub fn is_identity(&self) -> bool {
        *self == AffineIsometry::identity()
    }

    pub fn determinant(&self) -> Rational64 {
        let m = &self.linear;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// Whether the linear part preserves the symmetric form with Gram matrix `gram`,
    /// i.e. `L^T G L = G`.
    pub fn preserves_form(&self, gram: [[i64; 2]; 2]) -> bool {
        let l = &self.linear;
        (0..2).all(|i| {
            (0..2).all(|j| {
                let mut s = r(0);
                for a in 0..2 {
                    for b in 0..2 {
                        s += l[a][i] * r(gram[a][b]) * l[b][j];
                    }
                }
                s == r(gram[i][j])
            })
        })
    }

    pub fn has_fixed_point(&self) -> bool {
        // Solve (L - I) p = -offset.
        let m = &self.linear;
        let a = [
            [m[0][0] - Rational64::one(), m[0][1]],
            [m[1][0], m[1][1] - Rational64::one()],
        ];
        let b = [-self.offset[0], -self.offset[1]];
        let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        if !det.is_zero() {
            return true;
        }
        // Singular: consistent iff b lies in the column space of a.
        let rank_a = if a.iter().flatten().all(|x| x.is_zero()) { 0 } else { 1 };
        let aug_minors = [
            a[0][0] * b[1] - a[1][0] * b[0],
            a[0][1] * b[1] - a[1][1] * b[0],
        ];
        match rank_a {
            0 => b.iter().all(|x| x.is_zero()),
            _ => aug_minors.iter().all(|x| x.is_zero()),
        }
    }
}

impl Mul for AffineIsometry {
    type Output = AffineIsometry;

    fn mul(self, rhs: AffineIsometry) -> AffineIsometry {
        self.compose(&rhs)
    }
}

/// Gram matrix of the lattice basis `t1, t2` for which the realization is isometric.
pub fn lattice_gram(group: GroupId) -> [[i64; 2]; 2] {
    match group {
        GroupId::G3 => [[2, -1], [-1, 2]],
        GroupId::G5 => [[2, 1], [1, 2]],
        _ => [[1, 0], [0, 1]],
    }
}

/// Image of the point generator `a` (G1, G6) or `c` (G2..G6).
fn generator_map(group: GroupId, name: char) -> AffineIsometry {
    let z = r(0);
    match (group, name) {
        (GroupId::G1 | GroupId::G6, 'a') => AffineIsometry::new([[1, 0], [0, -1]], [half(1), z]),
        (GroupId::G2, 'c') => AffineIsometry::new([[-1, 0], [0, -1]], [z, z]),
        (GroupId::G3, 'c') => AffineIsometry::new([[0, -1], [1, -1]], [z, z]),
        (GroupId::G4, 'c') => AffineIsometry::new([[0, -1], [1, 0]], [z, z]),
        (GroupId::G5, 'c') => AffineIsometry::new([[0, -1], [1, 1]], [z, z]),
        (GroupId::G6, 'c') => AffineIsometry::new([[-1, 0], [0, -1]], [z, half(1)]),
        _ => panic!("{group} has no generator {name}"),
    }
}

fn point_map(group: GroupId, w: PointPart) -> AffineIsometry {
    match (group, w.0) {
        (_, 0) => AffineIsometry::identity(),
        (GroupId::G1, 1) | (GroupId::G6, 1) => generator_map(group, 'a'),
        (GroupId::G6, 2) => generator_map(group, 'c'),
        (GroupId::G6, 3) => generator_map(group, 'a') * generator_map(group, 'c'),
        (_, k) => generator_map(group, 'c').pow(u32::from(k)),
    }
}

pub fn affine_image(x: &GroupElement) -> AffineIsometry {
    let [n1, n2] = x.translation_part();
    AffineIsometry::translation(n1, n2) * point_map(x.group(), x.point_part())
}

/// Injectivity of [`affine_image`] on the ball.
pub fn check_faithful(group: GroupId, radius: u32) -> bool {
    let mut seen = HashSet::new();
    ball(group, radius).all(|x| seen.insert(affine_image(&x)))
}

/// Smallest `k <= limit` with `affine_image(x)^k = id`.
pub fn affine_order(x: &GroupElement, limit: u32) -> Option<u32> {
    let f = affine_image(x);
    let mut acc = f;
    for k in 1..=limit {
        if acc.is_identity() {
            return Some(k);
        }
        acc = acc * f;
    }
    None
}
