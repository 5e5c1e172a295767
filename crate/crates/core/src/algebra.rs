//! Normal forms and exact arithmetic for the seven euclidean crystallographic groups.
//!
//! Every element is stored as `t1^n1 * t2^n2 * w`, translation part on the left and
//! point part `w` on the right. Multiplication follows
//!
//! ```text
//! (v, w) * (v', w') = (v + M_w v' + tau(w, w'), w w')
//! ```
//!
//! where `M_w` is the conjugation action of `w` on the translation lattice and `tau`
//! is the 2-cocycle correcting the product of point symbols. The cocycle vanishes for
//! the split groups G0, G2..G5 and is nonzero for G1 and G6.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("group mismatch: {left} vs {right}")]
    GroupMismatch { left: GroupId, right: GroupId },
    #[error("integer overflow in group arithmetic")]
    Overflow,
    #[error("point part index {index} is not valid in {group}")]
    InvalidPointPart { group: GroupId, index: u8 },
    #[error("cyclic generator must not be the identity")]
    TrivialGenerator,
}

pub type Result<T> = std::result::Result<T, AlgebraError>;

/// One of the seven groups; G0 is the torus group, G1..G6 are numbered as in the
/// classical list of euclidean Fuchsian presentations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupId {
    G0,
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
}

impl GroupId {
    pub const ALL: [GroupId; 7] = [
        GroupId::G0,
        GroupId::G1,
        GroupId::G2,
        GroupId::G3,
        GroupId::G4,
        GroupId::G5,
        GroupId::G6,
    ];

    /// The six groups with a nontrivial point group.
    pub const NONTRIVIAL: [GroupId; 6] = [
        GroupId::G1,
        GroupId::G2,
        GroupId::G3,
        GroupId::G4,
        GroupId::G5,
        GroupId::G6,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn point_group_order(self) -> usize {
        match self {
            GroupId::G0 => 1,
            GroupId::G1 | GroupId::G2 => 2,
            GroupId::G3 => 3,
            GroupId::G4 | GroupId::G6 => 4,
            GroupId::G5 => 6,
        }
    }

    pub fn twist(self) -> &'static TwistData {
        static TABLES: OnceLock<Vec<TwistData>> = OnceLock::new();
        &TABLES.get_or_init(|| GroupId::ALL.iter().map(|&g| TwistData::build(g)).collect())
            [self.index()]
    }

    pub fn point_parts(self) -> impl Iterator<Item = PointPart> {
        (0..self.point_group_order() as u8).map(PointPart)
    }

    pub fn identity(self) -> GroupElement {
        GroupElement {
            group: self,
            v: [0, 0],
            w: PointPart::ONE,
        }
    }

    pub fn t1(self) -> GroupElement {
        GroupElement::translation(self, 1, 0)
    }

    pub fn t2(self) -> GroupElement {
        GroupElement::translation(self, 0, 1)
    }

    /// The pure point-part element `w` (zero translation).
    pub fn point(self, w: PointPart) -> Result<GroupElement> {
        GroupElement::new(self, 0, 0, w)
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G{}", self.index())
    }
}

impl FromStr for GroupId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let idx = s
            .strip_prefix('G')
            .or_else(|| s.strip_prefix('g'))
            .and_then(|d| d.parse::<usize>().ok());
        match idx {
            Some(i) if i < GroupId::ALL.len() => Ok(GroupId::ALL[i]),
            _ => Err(format!("unknown group `{s}` (expected G0..G6)")),
        }
    }
}

/// Index of a point-group symbol within its group's symbol list.
///
/// G1: `1, a`. G2..G5: `1, c, c^2, ...`. G6: `1, a, c, ac`. G0: `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointPart(pub u8);

impl PointPart {
    pub const ONE: PointPart = PointPart(0);

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn symbol(self, group: GroupId) -> &'static str {
        const CYCLIC: [&str; 6] = ["1", "c", "c^2", "c^3", "c^4", "c^5"];
        match group {
            GroupId::G0 => "1",
            GroupId::G1 => ["1", "a"][self.0 as usize],
            GroupId::G6 => ["1", "a", "c", "ac"][self.0 as usize],
            _ => CYCLIC[self.0 as usize],
        }
    }
}

pub type Vec2 = [i64; 2];

/// 2x2 integer matrix acting on translation exponents, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2(pub [[i64; 2]; 2]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[1, 0], [0, 1]]);

    pub fn det(&self) -> i64 {
        let m = self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let (a, b) = (self.0, other.0);
        let mut out = [[0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Mat2(out)
    }

    pub fn apply(&self, v: Vec2) -> Result<Vec2> {
        let m = self.0;
        let row = |r: [i64; 2]| -> Result<i64> {
            r[0].checked_mul(v[0])
                .zip(r[1].checked_mul(v[1]))
                .and_then(|(x, y)| x.checked_add(y))
                .ok_or(AlgebraError::Overflow)
        };
        Ok([row(m[0])?, row(m[1])?])
    }

    fn apply_wide(&self, v: [i128; 2]) -> [i128; 2] {
        let m = self.0;
        [
            m[0][0] as i128 * v[0] + m[0][1] as i128 * v[1],
            m[1][0] as i128 * v[0] + m[1][1] as i128 * v[1],
        ]
    }
}

/// Lattice action, symbol multiplication table and 2-cocycle of one group.
#[derive(Debug, Clone)]
pub struct TwistData {
    pub group: GroupId,
    /// `action[w]` is `M_w`, with `w t^v w^-1 = t^(M_w v)`.
    pub action: Vec<Mat2>,
    /// `table[w1][w2]` is the point symbol of `w1 * w2`.
    pub table: Vec<Vec<PointPart>>,
    /// `cocycle[w1][w2]` is the translation `tau` with `w1 * w2 = t^tau * table[w1][w2]`.
    pub cocycle: Vec<Vec<Vec2>>,
}

impl TwistData {
    fn build(group: GroupId) -> TwistData {
        match group {
            GroupId::G0 => TwistData {
                group,
                action: vec![Mat2::IDENTITY],
                table: vec![vec![PointPart::ONE]],
                cocycle: vec![vec![[0, 0]]],
            },
            GroupId::G1 => {
                // a^2 = t1, a t2 a^-1 = t2^-1
                let m_a = Mat2([[1, 0], [0, -1]]);
                TwistData {
                    group,
                    action: vec![Mat2::IDENTITY, m_a],
                    table: xor_table(2),
                    cocycle: vec![vec![[0, 0], [0, 0]], vec![[0, 0], [1, 0]]],
                }
            }
            GroupId::G2 => Self::rotation(group, Mat2([[-1, 0], [0, -1]]), 2),
            GroupId::G3 => Self::rotation(group, Mat2([[0, -1], [1, -1]]), 3),
            GroupId::G4 => Self::rotation(group, Mat2([[0, -1], [1, 0]]), 4),
            GroupId::G5 => Self::rotation(group, Mat2([[0, -1], [1, 1]]), 6),
            GroupId::G6 => {
                // symbols 1, a, c, ac; the symbol product is xor on (a-bit, c-bit).
                // a^2 = t1, (ac)^2 = t2^-1, c a = t1^-1 t2 ac.
                let z = [0, 0];
                let t1 = [1, 0];
                let ca = [-1, 1];
                let t2_inv = [0, -1];
                TwistData {
                    group,
                    action: vec![
                        Mat2::IDENTITY,
                        Mat2([[1, 0], [0, -1]]),
                        Mat2([[-1, 0], [0, -1]]),
                        Mat2([[-1, 0], [0, 1]]),
                    ],
                    table: xor_table(4),
                    cocycle: vec![
                        vec![z, z, z, z],
                        vec![z, t1, z, t1],
                        vec![z, ca, z, ca],
                        vec![z, t2_inv, z, t2_inv],
                    ],
                }
            }
        }
    }

    fn rotation(group: GroupId, generator: Mat2, k: usize) -> TwistData {
        let mut action = Vec::with_capacity(k);
        let mut m = Mat2::IDENTITY;
        for _ in 0..k {
            action.push(m);
            m = generator.mul(&m);
        }
        let table = (0..k)
            .map(|i| (0..k).map(|j| PointPart(((i + j) % k) as u8)).collect())
            .collect();
        TwistData {
            group,
            action,
            table,
            cocycle: vec![vec![[0, 0]; k]; k],
        }
    }

    pub fn size(&self) -> usize {
        self.action.len()
    }

    pub fn act(&self, w: PointPart) -> &Mat2 {
        &self.action[w.0 as usize]
    }

    pub fn compose(&self, w1: PointPart, w2: PointPart) -> PointPart {
        self.table[w1.0 as usize][w2.0 as usize]
    }

    pub fn tau(&self, w1: PointPart, w2: PointPart) -> Vec2 {
        self.cocycle[w1.0 as usize][w2.0 as usize]
    }

    /// Order of `w` in the point group.
    pub fn symbol_order(&self, w: PointPart) -> u32 {
        let mut acc = w;
        let mut k = 1;
        while !acc.is_one() {
            acc = self.compose(acc, w);
            k += 1;
        }
        k
    }

    pub fn symbol_inverse(&self, w: PointPart) -> PointPart {
        (0..self.size() as u8)
            .map(PointPart)
            .find(|&x| self.compose(w, x).is_one())
            .expect("point group is a group")
    }
}

fn xor_table(n: usize) -> Vec<Vec<PointPart>> {
    (0..n)
        .map(|i| (0..n).map(|j| PointPart((i ^ j) as u8)).collect())
        .collect()
}

fn add(a: Vec2, b: Vec2) -> Result<Vec2> {
    Ok([
        a[0].checked_add(b[0]).ok_or(AlgebraError::Overflow)?,
        a[1].checked_add(b[1]).ok_or(AlgebraError::Overflow)?,
    ])
}

fn neg(a: Vec2) -> Result<Vec2> {
    Ok([
        a[0].checked_neg().ok_or(AlgebraError::Overflow)?,
        a[1].checked_neg().ok_or(AlgebraError::Overflow)?,
    ])
}

/// Element `t1^n1 * t2^n2 * w` in normal form. Equality is componentwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    group: GroupId,
    v: Vec2,
    w: PointPart,
}

/// Order of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

impl GroupElement {
    pub fn new(group: GroupId, n1: i64, n2: i64, w: PointPart) -> Result<GroupElement> {
        if (w.0 as usize) >= group.point_group_order() {
            return Err(AlgebraError::InvalidPointPart { group, index: w.0 });
        }
        Ok(GroupElement {
            group,
            v: [n1, n2],
            w,
        })
    }

    pub fn translation(group: GroupId, n1: i64, n2: i64) -> GroupElement {
        GroupElement {
            group,
            v: [n1, n2],
            w: PointPart::ONE,
        }
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn translation_part(&self) -> Vec2 {
        self.v
    }

    pub fn n1(&self) -> i64 {
        self.v[0]
    }

    pub fn n2(&self) -> i64 {
        self.v[1]
    }

    pub fn point_part(&self) -> PointPart {
        self.w
    }

    pub fn is_identity(&self) -> bool {
        self.v == [0, 0] && self.w.is_one()
    }

    pub fn is_translation(&self) -> bool {
        self.w.is_one()
    }

    fn same_group(&self, other: &GroupElement) -> Result<()> {
        if self.group != other.group {
            return Err(AlgebraError::GroupMismatch {
                left: self.group,
                right: other.group,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement> {
        self.same_group(other)?;
        let twist = self.group.twist();
        let moved = twist.act(self.w).apply(other.v)?;
        let v = add(add(self.v, moved)?, twist.tau(self.w, other.w))?;
        Ok(GroupElement {
            group: self.group,
            v,
            w: twist.compose(self.w, other.w),
        })
    }

    /// `(t^v w)^-1 = w^-1 t^-v`, which normalizes to
    /// `t^(-M_{w^-1} v - tau(w^-1, w)) w^-1`.
    pub fn inverse(&self) -> Result<GroupElement> {
        let twist = self.group.twist();
        let w_inv = twist.symbol_inverse(self.w);
        let m = twist.act(w_inv);
        let v = neg(add(m.apply(self.v)?, twist.tau(w_inv, self.w))?)?;
        Ok(GroupElement {
            group: self.group,
            v,
            w: w_inv,
        })
    }

    pub fn power(&self, k: i64) -> Result<GroupElement> {
        let base = if k < 0 { self.inverse()? } else { *self };
        let mut e = k.unsigned_abs();
        let mut acc = self.group.identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.multiply(&sq)?;
            }
        }
        Ok(acc)
    }

    pub fn conjugate_by(&self, g: &GroupElement) -> Result<GroupElement> {
        g.multiply(self)?.multiply(&g.inverse()?)
    }

    /// Smallest `k >= 1` with `x^k = 1`, or infinite.
    ///
    /// `x^k = 1` forces the point-part order `m` to divide `k`, and `x^m` is a pure
    /// translation, so the order is `m` when that translation vanishes and infinite
    /// otherwise. The translation of `x^m` is accumulated in `i128` so that this
    /// query never overflows.
    pub fn order(&self) -> Order {
        let twist = self.group.twist();
        let m = twist.symbol_order(self.w);
        let mut v = [0i128; 2];
        let mut w = PointPart::ONE;
        for _ in 0..m {
            let moved = twist.act(w).apply_wide([self.v[0] as i128, self.v[1] as i128]);
            let tau = twist.tau(w, self.w);
            v = [
                v[0] + moved[0] + tau[0] as i128,
                v[1] + moved[1] + tau[1] as i128,
            ];
            w = twist.compose(w, self.w);
        }
        if v == [0, 0] {
            Order::Finite(m)
        } else {
            Order::Infinite
        }
    }

    /// Determinant of the linear part: -1 on orientation-reversing elements.
    pub fn orientation_character(&self) -> i8 {
        self.group.twist().act(self.w).det() as i8
    }

    pub fn commutes_with(&self, other: &GroupElement) -> Result<bool> {
        Ok(self.multiply(other)? == other.multiply(self)?)
    }
}

pub fn identity(group: GroupId) -> GroupElement {
    group.identity()
}

pub fn multiply(x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
    x.multiply(y)
}

pub fn inverse(x: &GroupElement) -> Result<GroupElement> {
    x.inverse()
}

pub fn power(x: &GroupElement, k: i64) -> Result<GroupElement> {
    x.power(k)
}

pub fn order(x: &GroupElement) -> Order {
    x.order()
}

pub fn orientation_character(x: &GroupElement) -> i8 {
    x.orientation_character()
}
