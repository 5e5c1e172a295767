#ifndef CRYSTGROUPS_H
#define CRYSTGROUPS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CgAlphabet {
  CG_ALPHABET_NEW = 0,
  CG_ALPHABET_ORIGINAL = 1,
} CgAlphabet;

typedef enum CgFiniteName {
  CG_FINITE_NAME_NONE = 0,
  CG_FINITE_NAME_CYCLIC = 1,
  CG_FINITE_NAME_DIHEDRAL = 2,
  CG_FINITE_NAME_TETRAHEDRAL = 3,
  CG_FINITE_NAME_OCTAHEDRAL = 4,
  CG_FINITE_NAME_ICOSAHEDRAL = 5,
  CG_FINITE_NAME_Z4 = 6,
  CG_FINITE_NAME_UNNAMED = 7,
} CgFiniteName;

typedef enum CgKind {
  CG_KIND_FINITE = 0,
  CG_KIND_EUCLIDEAN = 1,
  CG_KIND_HYPERBOLIC = 2,
  CG_KIND_FREE_PRODUCT_INFINITE = 3,
} CgKind;

typedef enum CgStatus {
  CG_STATUS_OK = 0,
  CG_STATUS_NULL_POINTER = 1,
  CG_STATUS_INVALID_GROUP = 2,
  CG_STATUS_INVALID_ARGUMENT = 3,
  CG_STATUS_PARSE = 4,
  CG_STATUS_OVERFLOW = 5,
  CG_STATUS_GROUP_MISMATCH = 6,
  CG_STATUS_TRIVIAL_GENERATOR = 7,
  CG_STATUS_INVALID_SIGNATURE = 8,
} CgStatus;

typedef enum CgSubgroupKind {
  CG_SUBGROUP_KIND_WHOLE = 0,
  CG_SUBGROUP_KIND_LATTICE = 1,
  CG_SUBGROUP_KIND_CYCLIC = 2,
  CG_SUBGROUP_KIND_KLEIN_BOTTLE = 3,
  CG_SUBGROUP_KIND_TRIVIAL = 4,
} CgSubgroupKind;

/**
 * Opaque group element.
 */
typedef struct CgElement CgElement;

/**
 * Opaque subgroup descriptor.
 */
typedef struct CgSubgroup CgSubgroup;

/**
 * Flat classification result. `group` is 0..6 for euclidean kinds and -1 otherwise;
 * `finite_order` is the order for `Cyclic` and `Dihedral` names and 0 otherwise.
 */
typedef struct CgClassification {
  enum CgKind kind;
  int32_t group;
  enum CgFiniteName finite_name;
  uint64_t finite_order;
  bool has_chi;
  int64_t chi_numerator;
  int64_t chi_denominator;
} CgClassification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread. Valid until the next failing call on
 * the same thread; do not free.
 */
const char *cg_last_error_message(void);

/**
 * Number of point-group symbols of group `group` (0..6), or 0 for an invalid group.
 */
uint32_t cg_point_group_order(uint32_t group);

/**
 * # Safety
 * `out` must be a valid pointer to a handle slot.
 */
enum CgStatus cg_element_new(uint32_t group,
                             int64_t n1,
                             int64_t n2,
                             uint8_t point,
                             struct CgElement **out);

/**
 * Parse a word such as `t1^2*t2^-1*c^3` and reduce it to normal form.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` a valid handle slot.
 */
enum CgStatus cg_element_parse(uint32_t group,
                               enum CgAlphabet alphabet,
                               const char *text,
                               struct CgElement **out);

/**
 * # Safety
 * `x` must come from this library and not be freed twice. Null is ignored.
 */
void cg_element_free(struct CgElement *x);

/**
 * # Safety
 * `x` must be a live handle; output pointers may be null to skip a field.
 */
enum CgStatus cg_element_coords(const struct CgElement *x,
                                uint32_t *group,
                                int64_t *n1,
                                int64_t *n2,
                                uint8_t *point);

/**
 * Canonical text of `x`; release with [`cg_string_free`]. Null on a null handle.
 *
 * # Safety
 * `x` must be a live handle or null.
 */
char *cg_element_format(const struct CgElement *x);

/**
 * # Safety
 * `s` must come from this library. Null is ignored.
 */
void cg_string_free(char *s);

/**
 * # Safety
 * `x`, `y` must be live handles; `out` a valid handle slot.
 */
enum CgStatus cg_multiply(const struct CgElement *x,
                          const struct CgElement *y,
                          struct CgElement **out);

/**
 * # Safety
 * `x` must be a live handle; `out` a valid handle slot.
 */
enum CgStatus cg_inverse(const struct CgElement *x, struct CgElement **out);

/**
 * # Safety
 * `x` must be a live handle; `out` a valid handle slot.
 */
enum CgStatus cg_power(const struct CgElement *x, int64_t k, struct CgElement **out);

/**
 * Writes the order of `x`, with 0 meaning infinite.
 *
 * # Safety
 * `x` must be a live handle; `order` a valid pointer.
 */
enum CgStatus cg_order(const struct CgElement *x, uint32_t *order);

/**
 * +1 or -1; 0 on a null handle.
 *
 * # Safety
 * `x` must be a live handle or null.
 */
int32_t cg_orientation_character(const struct CgElement *x);

/**
 * # Safety
 * Handles must be live; `equal` a valid pointer.
 */
enum CgStatus cg_element_equal(const struct CgElement *x, const struct CgElement *y, bool *equal);

/**
 * # Safety
 * Handles must be live; `result` a valid pointer.
 */
enum CgStatus cg_commutes(const struct CgElement *x, const struct CgElement *y, bool *result);

/**
 * # Safety
 * `u` must be a live handle; `out` a valid handle slot.
 */
enum CgStatus cg_centralizer(const struct CgElement *u, struct CgSubgroup **out);

/**
 * # Safety
 * `out` must be a valid handle slot.
 */
enum CgStatus cg_center(uint32_t group, struct CgSubgroup **out);

/**
 * # Safety
 * `s` must come from this library. Null is ignored.
 */
void cg_subgroup_free(struct CgSubgroup *s);

/**
 * # Safety
 * `s` must be a live handle; `kind` a valid pointer.
 */
enum CgStatus cg_subgroup_kind(const struct CgSubgroup *s, enum CgSubgroupKind *kind);

/**
 * Number of generators of the descriptor's generating set.
 *
 * # Safety
 * `s` must be a live handle; `count` a valid pointer.
 */
enum CgStatus cg_subgroup_generator_count(const struct CgSubgroup *s, size_t *count);

/**
 * # Safety
 * `s` must be a live handle; `out` a valid handle slot.
 */
enum CgStatus cg_subgroup_generator(const struct CgSubgroup *s,
                                    size_t index,
                                    struct CgElement **out);

/**
 * # Safety
 * Handles must be live; `result` a valid pointer.
 */
enum CgStatus cg_subgroup_contains(const struct CgSubgroup *s,
                                   const struct CgElement *x,
                                   bool *result);

/**
 * Text form such as `Cyclic: t2^3*a`; release with [`cg_string_free`].
 *
 * # Safety
 * `s` must be a live handle or null.
 */
char *cg_subgroup_format(const struct CgSubgroup *s);

/**
 * Finds `k` with `g^k = h`. `found` is set false when no such `k` exists.
 *
 * # Safety
 * Handles must be live; `found` and `k` valid pointers.
 */
enum CgStatus cg_cyclic_membership(const struct CgElement *g,
                                   const struct CgElement *h,
                                   bool *found,
                                   int64_t *k);

/**
 * # Safety
 * `alphas` must point to `n_alphas` values (may be null when `n_alphas` is 0);
 * `out` a valid pointer.
 */
enum CgStatus cg_classify(bool orientable,
                          uint32_t genus,
                          const uint32_t *alphas,
                          size_t n_alphas,
                          uint32_t boundary,
                          struct CgClassification *out);

/**
 * Brute-force check of the closed-form centralizer of `u` on the box of the given
 * radius. `witnesses` receives the number of disagreements found (capped at 16).
 *
 * # Safety
 * `u` must be a live handle; `agree` a valid pointer; `witnesses` may be null.
 */
enum CgStatus cg_verify_centralizer(const struct CgElement *u,
                                    uint32_t radius,
                                    bool *agree,
                                    size_t *witnesses);

/**
 * # Safety
 * `faithful` must be a valid pointer.
 */
enum CgStatus cg_check_faithful(uint32_t group, uint32_t radius, bool *faithful);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CRYSTGROUPS_H */
