/*
 * januarial C API.
 *
 * Enumerates and builds januarials: coset diagrams of the triangle groups
 * Delta(2, l, k) acting on the projective line PL(F_p) in which xy has
 * exactly two orbits of equal size, and computes their genus.
 *
 * Conventions
 *   - Every function returns a jan_status; outputs go through pointers.
 *   - Array outputs take (buffer, capacity, *length). *length always receives
 *     the full size; if capacity is too small JAN_ERR_BUFFER_TOO_SMALL is
 *     returned and nothing past capacity is written. Pass a NULL buffer with
 *     capacity 0 to query the size.
 *   - Text outputs follow the same rule; *length excludes the terminating NUL,
 *     so the buffer needs *length + 1 bytes.
 *   - Points of PL(F_p) are indexed 0..p, with p standing for infinity.
 *   - jan_last_error_message() describes the most recent failure on the
 *     calling thread.
 */
#ifndef JANUARIAL_JANUARIAL_H
#define JANUARIAL_JANUARIAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(JANUARIAL_BUILDING)
#define JAN_API __declspec(dllexport)
#else
#define JAN_API __declspec(dllimport)
#endif
#else
#define JAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jan_status {
  JAN_OK = 0,
  JAN_ERR_INVALID_ARGUMENT = 1, /* null pointer, unknown enum value */
  JAN_ERR_BUFFER_TOO_SMALL = 2,
  JAN_ERR_DOMAIN = 3, /* p not an odd prime > 3, theta = 0, k out of range ... */
  JAN_ERR_ZERO_INVERSE = 4,
  JAN_ERR_ORDER_OVERFLOW = 5,
  JAN_ERR_NO_ORDER_L_ELEMENT = 6,
  JAN_ERR_SEARCH_EXHAUSTED = 7,
  JAN_ERR_ORDER_MISMATCH = 8,
  JAN_ERR_PARITY = 9,
  JAN_ERR_DISCONNECTED = 10,
  JAN_ERR_NON_INTEGRAL_GENUS = 11,
  JAN_ERR_SIZE_LIMIT = 12,
  JAN_ERR_NOT_FOUND = 13,
  JAN_ERR_SPLITTING = 14,
  JAN_ERR_INTERNAL = 99
} jan_status;

typedef enum jan_format {
  JAN_FORMAT_TEXT = 0,
  JAN_FORMAT_JSON = 1,
  JAN_FORMAT_DOT = 2
} jan_format;

typedef enum jan_generator {
  JAN_GEN_X = 0,
  JAN_GEN_Y = 1,
  JAN_GEN_XY = 2 /* x applied first, then y */
} jan_generator;

/* Opaque handle: a constructed generator pair together with its diagram. */
typedef struct jan_diagram jan_diagram;

typedef struct jan_diagram_info {
  uint64_t p;
  uint64_t l;
  uint64_t k; /* order of xy */
  uint64_t theta;
  uint64_t delta;
  uint64_t r;
  uint64_t x_matrix[4]; /* row-major, residues in [0, p) */
  uint64_t y_matrix[4];
  uint64_t eta_x;
  uint64_t eta_y;
  uint64_t eta_xy;
  uint64_t y_cycle_count;
  uint64_t x_edge_count;
  uint64_t xy_orbit_count;
  uint64_t component_count;
  int connected;
  int is_januarial;
} jan_diagram_info;

typedef struct jan_genus {
  int64_t v;
  int64_t e;
  int64_t f;
  int64_t higman;
  int64_t fixedpoint;
  int64_t januarial;
  int has_januarial; /* januarial is meaningful only when nonzero */
} jan_genus;

JAN_API const char* jan_version(void);
JAN_API const char* jan_status_name(jan_status status);
JAN_API const char* jan_last_error_message(void);

/* --- field arithmetic ---------------------------------------------------- */

JAN_API jan_status jan_is_prime(uint64_t n, int* out);
JAN_API jan_status jan_field_inverse(uint64_t p, uint64_t x, uint64_t* out);
/* *has_root = 0 for a non-residue; otherwise roots[0] <= roots[1]. */
JAN_API jan_status jan_sqrt_mod_p(uint64_t p, uint64_t x, int* has_root, uint64_t roots[2]);
JAN_API jan_status jan_euler_phi(uint64_t n, uint64_t* out);

/* --- g_k polynomials ----------------------------------------------------- */

/* Exact descending coefficients, 1 <= k <= 64. */
JAN_API jan_status jan_gk_coefficients(uint64_t k, int64_t* coefficients, size_t capacity, size_t* length);
/* Coefficients reduced mod p, any k with k - 1 < p. */
JAN_API jan_status jan_gk_coefficients_mod(uint64_t k, uint64_t p, uint64_t* coefficients, size_t capacity,
                                           size_t* length);
/* UTF-8 display form, e.g. "θ^7 - 14θ^6 + ...". */
JAN_API jan_status jan_gk_format(uint64_t k, char* buffer, size_t capacity, size_t* length);
JAN_API jan_status jan_gk_roots(uint64_t k, uint64_t p, uint64_t* roots, size_t capacity, size_t* length);
JAN_API jan_status jan_januarial_thetas(uint64_t p, uint64_t* thetas, size_t capacity, size_t* length);
JAN_API jan_status jan_expected_count(uint64_t k, uint64_t* out);
JAN_API jan_status jan_find_order_trace(uint64_t p, uint64_t l, uint64_t* b);

/* --- construction and diagrams ------------------------------------------ */

JAN_API jan_status jan_theta_invariant(uint64_t p, const int64_t x[4], const int64_t y[4], uint64_t* theta);
JAN_API jan_status jan_diagram_build(uint64_t p, uint64_t l, uint64_t theta, jan_diagram** out);
JAN_API void jan_diagram_free(jan_diagram* diagram);
JAN_API jan_status jan_diagram_get_info(const jan_diagram* diagram, jan_diagram_info* out);
/* JAN_ERR_DISCONNECTED when the diagram is not connected. */
JAN_API jan_status jan_diagram_get_genus(const jan_diagram* diagram, jan_genus* out);
JAN_API jan_status jan_diagram_permutation(const jan_diagram* diagram, jan_generator which, uint64_t* images,
                                           size_t capacity, size_t* length);
/* 1 if every construction check passes, 0 otherwise. */
JAN_API jan_status jan_diagram_verify(const jan_diagram* diagram, int* passed);
JAN_API jan_status jan_diagram_export(const jan_diagram* diagram, jan_format format, char* buffer, size_t capacity,
                                      size_t* length);

/* --- genus formulas ------------------------------------------------------ */

JAN_API jan_status jan_genus_higman(int64_t v, int64_t e, int64_t f, int64_t* out);
JAN_API jan_status jan_genus_fixedpoint(int64_t p, int64_t k, int64_t l, int64_t eta_x, int64_t eta_y,
                                        int64_t eta_xy, int64_t* out);
JAN_API jan_status jan_genus_januarial(int64_t p, int64_t l, int64_t eta_x, int64_t eta_y, int64_t* out);

/* --- census -------------------------------------------------------------- */

typedef struct jan_census jan_census;

/* All primes 5 <= p in [pmin, pmax] with y of order l. */
JAN_API jan_status jan_census_run(uint64_t pmin, uint64_t pmax, uint64_t l, jan_census** out);
JAN_API void jan_census_free(jan_census* census);
/* Header plus rows "p,l,theta,eta_x,eta_y,genus"; genus is empty for a
 * disconnected diagram. */
JAN_API jan_status jan_census_csv(const jan_census* census, char* buffer, size_t capacity, size_t* length);
/* "# ..." lines: skipped primes, mismatches, totals. */
JAN_API jan_status jan_census_trailer(const jan_census* census, char* buffer, size_t capacity, size_t* length);
/* *matches = 1 when every prime with a valid l produced phi((p+1)/2)/2 rows. */
JAN_API jan_status jan_census_summary(const jan_census* census, uint64_t* found, uint64_t* predicted, int* matches);

/* --- brute-force oracle -------------------------------------------------- */

typedef struct jan_report jan_report;

JAN_API jan_status jan_oracle_class_count(uint64_t q, uint64_t order, int force, uint64_t* count);
/* *passed = 1 when <z> has exactly two orbits of size (q+1)/2. */
JAN_API jan_status jan_oracle_cyclic_orbits(uint64_t q, int* passed);
JAN_API jan_status jan_oracle_thetas(uint64_t p, uint64_t l, int force, uint64_t* thetas, size_t capacity,
                                     size_t* length);
/* Runs every oracle check for p; l = 0 picks the smallest valid l. */
JAN_API jan_status jan_verify(uint64_t p, uint64_t l, int force, jan_report** out);
JAN_API void jan_report_free(jan_report* report);
JAN_API jan_status jan_report_text(const jan_report* report, char* buffer, size_t capacity, size_t* length);
JAN_API jan_status jan_report_passed(const jan_report* report, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* JANUARIAL_JANUARIAL_H */
