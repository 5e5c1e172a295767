//! C ABI over `crystgroups`.
//!
//! Elements and subgroups cross the boundary as opaque heap handles owned by the
//! caller and released with the matching `*_free` function. Every fallible call
//! returns a [`CgStatus`]; on failure a message is available from
//! [`cg_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use crystgroups::algebra::AlgebraError;
use crystgroups::centralizer::{center, centralizer, cyclic_membership, SubgroupDescriptor};
use crystgroups::classifier::{classify, FiniteName, GroupKind, PresentationSignature};
use crystgroups::oracle::{check_faithful, verify_centralizer};
use crystgroups::words::{format, parse_element, Alphabet, WordError};
use crystgroups::{GroupElement, GroupId, Order, PointPart};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidGroup = 2,
    InvalidArgument = 3,
    Parse = 4,
    Overflow = 5,
    GroupMismatch = 6,
    TrivialGenerator = 7,
    InvalidSignature = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CgAlphabet {
    New = 0,
    Original = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CgSubgroupKind {
    Whole = 0,
    Lattice = 1,
    Cyclic = 2,
    KleinBottle = 3,
    Trivial = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CgKind {
    Finite = 0,
    Euclidean = 1,
    Hyperbolic = 2,
    FreeProductInfinite = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CgFiniteName {
    None = 0,
    Cyclic = 1,
    Dihedral = 2,
    Tetrahedral = 3,
    Octahedral = 4,
    Icosahedral = 5,
    Z4 = 6,
    Unnamed = 7,
}

/// Flat classification result. `group` is 0..6 for euclidean kinds and -1 otherwise;
/// `finite_order` is the order for `Cyclic` and `Dihedral` names and 0 otherwise.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct CgClassification {
    pub kind: CgKind,
    pub group: i32,
    pub finite_name: CgFiniteName,
    pub finite_order: u64,
    pub has_chi: bool,
    pub chi_numerator: i64,
    pub chi_denominator: i64,
}

/// Opaque group element.
pub struct CgElement(GroupElement);

/// Opaque subgroup descriptor.
pub struct CgSubgroup(SubgroupDescriptor);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: CgStatus, message: impl ToString) -> CgStatus {
    let msg = CString::new(message.to_string().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
    status
}

fn algebra_status(e: AlgebraError) -> CgStatus {
    let status = match e {
        AlgebraError::GroupMismatch { .. } => CgStatus::GroupMismatch,
        AlgebraError::Overflow => CgStatus::Overflow,
        AlgebraError::InvalidPointPart { .. } => CgStatus::InvalidArgument,
        AlgebraError::TrivialGenerator => CgStatus::TrivialGenerator,
    };
    fail(status, e)
}

fn word_status(e: WordError) -> CgStatus {
    match e {
        WordError::Parse(p) => fail(CgStatus::Parse, p),
        WordError::Algebra(a) => algebra_status(a),
    }
}

fn group_from(index: u32) -> Result<GroupId, CgStatus> {
    GroupId::ALL
        .get(index as usize)
        .copied()
        .ok_or_else(|| fail(CgStatus::InvalidGroup, format!("no group G{index}")))
}

unsafe fn element<'a>(p: *const CgElement) -> Result<&'a GroupElement, CgStatus> {
    p.as_ref()
        .map(|e| &e.0)
        .ok_or_else(|| fail(CgStatus::NullPointer, "null element"))
}

unsafe fn put<T>(out: *mut T, value: T) -> CgStatus {
    match out.as_mut() {
        Some(slot) => {
            *slot = value;
            CgStatus::Ok
        }
        None => fail(CgStatus::NullPointer, "null output pointer"),
    }
}

unsafe fn put_element(out: *mut *mut CgElement, x: GroupElement) -> CgStatus {
    if out.is_null() {
        return fail(CgStatus::NullPointer, "null output pointer");
    }
    *out = Box::into_raw(Box::new(CgElement(x)));
    CgStatus::Ok
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message for the last failure on this thread. Valid until the next failing call on
/// the same thread; do not free.
#[no_mangle]
pub extern "C" fn cg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Number of point-group symbols of group `group` (0..6), or 0 for an invalid group.
#[no_mangle]
pub extern "C" fn cg_point_group_order(group: u32) -> u32 {
    group_from(group).map_or(0, |g| g.point_group_order() as u32)
}

/// # Safety
/// `out` must be a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn cg_element_new(
    group: u32,
    n1: i64,
    n2: i64,
    point: u8,
    out: *mut *mut CgElement,
) -> CgStatus {
    let g = try_status!(group_from(group));
    let x = try_status!(GroupElement::new(g, n1, n2, PointPart(point)).map_err(algebra_status));
    put_element(out, x)
}

/// Parse a word such as `t1^2*t2^-1*c^3` and reduce it to normal form.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` a valid handle slot.
#[no_mangle]
pub unsafe extern "C" fn cg_element_parse(
    group: u32,
    alphabet: CgAlphabet,
    text: *const c_char,
    out: *mut *mut CgElement,
) -> CgStatus {
    let g = try_status!(group_from(group));
    if text.is_null() {
        return fail(CgStatus::NullPointer, "null text");
    }
    let Ok(s) = CStr::from_ptr(text).to_str() else {
        return fail(CgStatus::Parse, "text is not valid UTF-8");
    };
    let alphabet = match alphabet {
        CgAlphabet::New => Alphabet::New,
        CgAlphabet::Original => Alphabet::Original,
    };
    let x = try_status!(parse_element(s, g, alphabet).map_err(word_status));
    put_element(out, x)
}

/// # Safety
/// `x` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn cg_element_free(x: *mut CgElement) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// # Safety
/// `x` must be a live handle; output pointers may be null to skip a field.
#[no_mangle]
pub unsafe extern "C" fn cg_element_coords(
    x: *const CgElement,
    group: *mut u32,
    n1: *mut i64,
    n2: *mut i64,
    point: *mut u8,
) -> CgStatus {
    let x = try_status!(element(x));
    if let Some(g) = group.as_mut() {
        *g = x.group().index() as u32;
    }
    if let Some(v) = n1.as_mut() {
        *v = x.n1();
    }
    if let Some(v) = n2.as_mut() {
        *v = x.n2();
    }
    if let Some(w) = point.as_mut() {
        *w = x.point_part().0;
    }
    CgStatus::Ok
}

/// Canonical text of `x`; release with [`cg_string_free`]. Null on a null handle.
///
/// # Safety
/// `x` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn cg_element_format(x: *const CgElement) -> *mut c_char {
    match element(x) {
        Ok(x) => CString::new(format(x)).expect("ascii").into_raw(),
        Err(_) => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must come from this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn cg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `x`, `y` must be live handles; `out` a valid handle slot.
#[no_mangle]
pub unsafe extern "C" fn cg_multiply(
    x: *const CgElement,
    y: *const CgElement,
    out: *mut *mut CgElement,
) -> CgStatus {
    let (x, y) = (try_status!(element(x)), try_status!(element(y)));
    let z = try_status!(x.multiply(y).map_err(algebra_status));
    put_element(out, z)
}

/// # Safety
/// `x` must be a live handle; `out` a valid handle slot.
#[no_mangle]
pub unsafe extern "C" fn cg_inverse(x: *const CgElement, out: *mut *mut CgElement) -> CgStatus {
    let x = try_status!(element(x));
    let z = try_status!(x.inverse().map_err(algebra_status));
    put_element(out, z)
}

/// # Safety
/// `x` must be a live handle; `out` a valid handle slot.
#[no_mangle]
pub unsafe extern "C" fn cg_power(x: *const CgElement, k: i64, out: *mut *mut CgElement) -> CgStatus {
    let x = try_status!(element(x));
    let z = try_status!(x.power(k).map_err(algebra_status));
    put_element(out, z)
}

/// Writes the order of `x`, with 0 meaning infinite.
///
/// # Safety
/// `x` must be a live handle; `order` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_order(x: *const CgElement, order: *mut u32) -> CgStatus {
    let x = try_status!(element(x));
    let k = match x.order() {
        Order::Finite(k) => k,
        Order::Infinite => 0,
    };
    put(order, k)
}

/// +1 or -1; 0 on a null handle.
///
/// # Safety
/// `x` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn cg_orientation_character(x: *const CgElement) -> i32 {
    element(x).map_or(0, |x| i32::from(x.orientation_character()))
}

/// # Safety
/// Handles must be live; `equal` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_element_equal(
    x: *const CgElement,
    y: *const CgElement,
    equal: *mut bool,
) -> CgStatus {
    let (x, y) = (try_status!(element(x)), try_status!(element(y)));
    put(equal, x == y)
}

/// # Safety
/// Handles must be live; `result` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_commutes(
    x: *const CgElement,
    y: *const CgElement,
    result: *mut bool,
) -> CgStatus {
    let (x, y) = (try_status!(element(x)), try_status!(element(y)));
    let c = try_status!(x.commutes_with(y).map_err(algebra_status));
    put(result, c)
}

unsafe fn put_subgroup(out: *mut *mut CgSubgroup, s: SubgroupDescriptor) -> CgStatus {
    if out.is_null() {
        return fail(CgStatus::NullPointer, "null output pointer");
    }
    *out = Box::into_raw(Box::new(CgSubgroup(s)));
    CgStatus::Ok
}

unsafe fn subgroup<'a>(p: *const CgSubgroup) -> Result<&'a SubgroupDescriptor, CgStatus> {
    p.as_ref()
        .map(|s| &s.0)
        .ok_or_else(|| fail(CgStatus::NullPointer, "null subgroup"))
}

/// # Safety
/// `u` must be a live handle; `out` a valid handle slot.
#[no_mangle]
pub unsafe extern "C" fn cg_centralizer(u: *const CgElement, out: *mut *mut CgSubgroup) -> CgStatus {
    let u = try_status!(element(u));
    let z = try_status!(centralizer(u).map_err(algebra_status));
    put_subgroup(out, z)
}

/// # Safety
/// `out` must be a valid handle slot.
#[no_mangle]
pub unsafe extern "C" fn cg_center(group: u32, out: *mut *mut CgSubgroup) -> CgStatus {
    let g = try_status!(group_from(group));
    put_subgroup(out, center(g))
}

/// # Safety
/// `s` must come from this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn cg_subgroup_free(s: *mut CgSubgroup) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a live handle; `kind` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_subgroup_kind(s: *const CgSubgroup, kind: *mut CgSubgroupKind) -> CgStatus {
    let s = try_status!(subgroup(s));
    let k = match s {
        SubgroupDescriptor::Whole(_) => CgSubgroupKind::Whole,
        SubgroupDescriptor::Lattice(_) => CgSubgroupKind::Lattice,
        SubgroupDescriptor::Cyclic(_) => CgSubgroupKind::Cyclic,
        SubgroupDescriptor::KleinBottle(..) => CgSubgroupKind::KleinBottle,
        SubgroupDescriptor::Trivial(_) => CgSubgroupKind::Trivial,
    };
    put(kind, k)
}

/// Number of generators of the descriptor's generating set.
///
/// # Safety
/// `s` must be a live handle; `count` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_subgroup_generator_count(s: *const CgSubgroup, count: *mut usize) -> CgStatus {
    let s = try_status!(subgroup(s));
    put(count, s.generators().len())
}

/// # Safety
/// `s` must be a live handle; `out` a valid handle slot.
#[no_mangle]
pub unsafe extern "C" fn cg_subgroup_generator(
    s: *const CgSubgroup,
    index: usize,
    out: *mut *mut CgElement,
) -> CgStatus {
    let s = try_status!(subgroup(s));
    match s.generators().get(index) {
        Some(g) => put_element(out, *g),
        None => fail(CgStatus::InvalidArgument, format!("generator index {index} out of range")),
    }
}

/// # Safety
/// Handles must be live; `result` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_subgroup_contains(
    s: *const CgSubgroup,
    x: *const CgElement,
    result: *mut bool,
) -> CgStatus {
    let (s, x) = (try_status!(subgroup(s)), try_status!(element(x)));
    let m = try_status!(s.contains(x).map_err(algebra_status));
    put(result, m)
}

/// Text form such as `Cyclic: t2^3*a`; release with [`cg_string_free`].
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn cg_subgroup_format(s: *const CgSubgroup) -> *mut c_char {
    match subgroup(s) {
        Ok(s) => CString::new(s.to_string()).expect("ascii").into_raw(),
        Err(_) => ptr::null_mut(),
    }
}

/// Finds `k` with `g^k = h`. `found` is set false when no such `k` exists.
///
/// # Safety
/// Handles must be live; `found` and `k` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cg_cyclic_membership(
    g: *const CgElement,
    h: *const CgElement,
    found: *mut bool,
    k: *mut i64,
) -> CgStatus {
    let (g, h) = (try_status!(element(g)), try_status!(element(h)));
    if found.is_null() || k.is_null() {
        return fail(CgStatus::NullPointer, "null output pointer");
    }
    let r = try_status!(cyclic_membership(g, h).map_err(algebra_status));
    *found = r.is_some();
    *k = r.unwrap_or(0);
    CgStatus::Ok
}

/// # Safety
/// `alphas` must point to `n_alphas` values (may be null when `n_alphas` is 0);
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_classify(
    orientable: bool,
    genus: u32,
    alphas: *const u32,
    n_alphas: usize,
    boundary: u32,
    out: *mut CgClassification,
) -> CgStatus {
    let alphas = if n_alphas == 0 {
        Vec::new()
    } else if alphas.is_null() {
        return fail(CgStatus::NullPointer, "null alphas");
    } else {
        std::slice::from_raw_parts(alphas, n_alphas).to_vec()
    };
    let sig = match PresentationSignature::new(orientable, genus, alphas, boundary) {
        Ok(s) => s,
        Err(e) => return fail(CgStatus::InvalidSignature, e),
    };
    let res = classify(&sig);
    let (kind, group, finite_name, finite_order) = match res.kind {
        GroupKind::Finite(name) => {
            let (n, order) = match name {
                FiniteName::Cyclic(k) => (CgFiniteName::Cyclic, k),
                FiniteName::Dihedral(k) => (CgFiniteName::Dihedral, k),
                FiniteName::Tetrahedral => (CgFiniteName::Tetrahedral, 0),
                FiniteName::Octahedral => (CgFiniteName::Octahedral, 0),
                FiniteName::Icosahedral => (CgFiniteName::Icosahedral, 0),
                FiniteName::Z4 => (CgFiniteName::Z4, 0),
                FiniteName::Unnamed => (CgFiniteName::Unnamed, 0),
            };
            (CgKind::Finite, -1, n, order)
        }
        GroupKind::Euclidean(g) => (CgKind::Euclidean, g.index() as i32, CgFiniteName::None, 0),
        GroupKind::Hyperbolic => (CgKind::Hyperbolic, -1, CgFiniteName::None, 0),
        GroupKind::FreeProductInfinite => (CgKind::FreeProductInfinite, -1, CgFiniteName::None, 0),
    };
    let (has_chi, chi_numerator, chi_denominator) = match res.chi_factor {
        Some(c) => (true, *c.numer(), *c.denom()),
        None => (false, 0, 1),
    };
    put(
        out,
        CgClassification {
            kind,
            group,
            finite_name,
            finite_order,
            has_chi,
            chi_numerator,
            chi_denominator,
        },
    )
}

/// Brute-force check of the closed-form centralizer of `u` on the box of the given
/// radius. `witnesses` receives the number of disagreements found (capped at 16).
///
/// # Safety
/// `u` must be a live handle; `agree` a valid pointer; `witnesses` may be null.
#[no_mangle]
pub unsafe extern "C" fn cg_verify_centralizer(
    u: *const CgElement,
    radius: u32,
    agree: *mut bool,
    witnesses: *mut usize,
) -> CgStatus {
    let u = try_status!(element(u));
    let rep = try_status!(verify_centralizer(u, radius).map_err(algebra_status));
    if let Some(w) = witnesses.as_mut() {
        *w = rep.witnesses.len();
    }
    put(agree, rep.agree)
}

/// # Safety
/// `faithful` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cg_check_faithful(group: u32, radius: u32, faithful: *mut bool) -> CgStatus {
    let g = try_status!(group_from(group));
    if radius == 0 {
        return fail(CgStatus::InvalidArgument, "radius must be at least 1");
    }
    put(faithful, check_faithful(g, radius))
}
