/* C interface to the evrates library. Generated by cbindgen; do not edit. */

#ifndef EVRATES_H
#define EVRATES_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Number of steps evr_bound_chain writes.
 */
#define EVR_BOUND_CHAIN_LEN 6

/*
 Stable identifiers for the inequality-chain steps, in chain order.
 */
typedef enum EvrBoundStepKind {
  EVR_BOUND_STEP_KIND_CROSSING_DECOMPOSITION = 0,
  EVR_BOUND_STEP_KIND_ELL_SUPREMUM = 1,
  EVR_BOUND_STEP_KIND_ONE_OVER_N = 2,
  EVR_BOUND_STEP_KIND_LEMMA = 3,
  EVR_BOUND_STEP_KIND_THEOREM = 4,
  EVR_BOUND_STEP_KIND_INTERMEDIATE_COMBINATION = 5,
} EvrBoundStepKind;

/*
 Which of the three limit families a case handle selects.
 */
typedef enum EvrCaseKind {
  EVR_CASE_KIND_FRECHET = 0,
  EVR_CASE_KIND_WEIBULL = 1,
  EVR_CASE_KIND_GUMBEL = 2,
} EvrCaseKind;

/*
 Outcome of a call.
 */
typedef enum EvrStatus {
  /*
   Success; out parameters are filled.
   */
  EVR_STATUS_OK = 0,
  /*
   An argument violated a documented precondition.
   */
  EVR_STATUS_DOMAIN = 1,
  /*
   An iterative kernel failed, or an internal invariant broke.
   */
  EVR_STATUS_NUMERICAL = 2,
  /*
   A required pointer was null.
   */
  EVR_STATUS_NULL_POINTER = 3,
} EvrStatus;

/*
 Opaque handle over a validated limit-family selection.
 */
typedef struct EvrCase EvrCase;

/*
 Root of the density-crossing equation in reduced coordinates.
 */
typedef struct EvrCrossing {
  uint64_t n;
  double y_star;
  double residual;
  double bracket_width;
} EvrCrossing;

/*
 Exact distances plus the crossing point and decomposition pieces,
 flattened for C consumption.
 */
typedef struct EvrDistance {
  uint64_t n;
  double ks;
  double tv;
  double y_star;
  double residual;
  double bracket_width;
  double mass_left;
  double a1;
  double a2;
  double alpha_n3;
  double alpha_n3_tight;
  double ell_sup;
} EvrDistance;

/*
 One evaluated inequality: `lhs <= rhs` claimed when `asserted` is 1.
 */
typedef struct EvrBoundStep {
  enum EvrBoundStepKind kind;
  double lhs;
  double rhs;
  uint8_t holds;
  uint8_t asserted;
} EvrBoundStep;

/*
 Truncated series value with a rigorous tail bound.
 */
typedef struct EvrLemmaSeries {
  double value;
  double tail_bound;
  uint32_t terms;
} EvrLemmaSeries;

/*
 Everything the certification of a single n needs from the bounds layer.
 */
typedef struct EvrBoundBreakdown {
  uint64_t n;
  double g1;
  double series_value;
  double series_tail_bound;
  double f2_value;
  double c0;
  double lemma_bound;
  double theorem_bound;
  uint8_t f1_holds;
  uint8_t f2_holds;
  uint8_t lemma_holds;
} EvrBoundBreakdown;

/*
 Outcome of one empirical-vs-exact comparison.
 */
typedef struct EvrMcResult {
  uint64_t n;
  uint64_t samples;
  uint64_t seed;
  double empirical_ks;
  double dkw_epsilon;
  double exact_ks;
  uint8_t pass;
} EvrMcResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Last failure description for this thread; never null, possibly empty.
 */
const char *evr_last_error_message(void);

/*
 Library version as a static NUL-terminated string.
 */
const char *evr_version(void);

/*
 Create a Frechet handle; requires gamma > 0.
 */
enum EvrStatus evr_case_frechet(double gamma, struct EvrCase **out);

/*
 Create a Weibull handle; requires gamma < 0.
 */
enum EvrStatus evr_case_weibull(double gamma, struct EvrCase **out);

/*
 Create a Gumbel handle.
 */
enum EvrStatus evr_case_gumbel(struct EvrCase **out);

/*
 Release a handle; a null argument is a no-op.
 */
void evr_case_free(struct EvrCase *case_);

/*
 Which family the handle selects.
 */
enum EvrStatus evr_case_kind(const struct EvrCase *case_, enum EvrCaseKind *out);

/*
 The extreme value index; 0 for Gumbel.
 */
enum EvrStatus evr_case_gamma(const struct EvrCase *case_, double *out);

/*
 The positive power-form exponent; a domain error for Gumbel.
 */
enum EvrStatus evr_case_alpha(const struct EvrCase *case_, double *out);

/*
 Limit-law cdf at x.
 */
enum EvrStatus evr_limit_cdf(const struct EvrCase *case_, double x, double *out);

/*
 Limit-law density at x.
 */
enum EvrStatus evr_limit_pdf(const struct EvrCase *case_, double x, double *out);

/*
 Limit-law quantile; requires p strictly inside (0, 1).
 */
enum EvrStatus evr_limit_quantile(const struct EvrCase *case_, double p, double *out);

/*
 Finite-sample representation-law cdf at x; requires n >= 2.
 */
enum EvrStatus evr_rep_cdf(uint64_t n, const struct EvrCase *case_, double x, double *out);

/*
 Finite-sample representation-law density at x; requires n >= 2.
 */
enum EvrStatus evr_rep_pdf(uint64_t n, const struct EvrCase *case_, double x, double *out);

/*
 Strictly decreasing map from the case's support onto (0, inf).
 */
enum EvrStatus evr_reduce_to_unit(const struct EvrCase *case_, double x, double *out);

/*
 Inverse of the reduction; maps t > 0 back into the support.
 */
enum EvrStatus evr_from_unit(const struct EvrCase *case_, double t, double *out);

/*
 Root of the crossing equation for this n.
 */
enum EvrStatus evr_crossing_point(uint64_t n, struct EvrCrossing *out);

/*
 Exact Kolmogorov and total-variation distance with the decomposition.
 */
enum EvrStatus evr_ks_tv_exact(uint64_t n, struct EvrDistance *out);

/*
 Grid-scan lower bound on the sup-distance in reduced coordinates.
 */
enum EvrStatus evr_ks_scan_oracle(uint64_t n, size_t grid_size, double *out);

/*
 Quadrature estimate of the total-variation distance.
 */
enum EvrStatus evr_tv_quadrature_oracle(uint64_t n, double tol, double *out);

/*
 Grid-scan sup-distance in the case's original coordinate.
 */
enum EvrStatus evr_distance_in_original_coordinates(uint64_t n,
                                                    const struct EvrCase *case_,
                                                    size_t grid_size,
                                                    double *out);

/*
 Evaluate the full inequality chain; writes exactly
 `EVR_BOUND_CHAIN_LEN` steps to `steps`.
 */
enum EvrStatus evr_bound_chain(uint64_t n, struct EvrBoundStep *steps);

/*
 Static name for a chain step identifier.
 */
const char *evr_bound_step_name(enum EvrBoundStepKind kind);

/*
 Density ratio at the lower support edge, `e (1 - 1/n)^{n-1}`.
 */
enum EvrStatus evr_g1(uint64_t n, double *out);

/*
 The universal constant `exp(f2_bound(2))`.
 */
double evr_c0(void);

/*
 Closed-form series majorant `1/(2n) + 1/(n^2 log n)`.
 */
enum EvrStatus evr_f2_bound(uint64_t n, double *out);

/*
 Bound on `g1(n) - 1`, `c0 * f2_bound(n)`.
 */
enum EvrStatus evr_lemma_bound(uint64_t n, double *out);

/*
 Closed-form rate `(2 + c0)/(4n) + c0/(2 n^2 log n)`.
 */
enum EvrStatus evr_theorem_bound(uint64_t n, double *out);

/*
 Truncated series with a rigorous tail bound; rel_tol >= 1e-16.
 */
enum EvrStatus evr_lemma_series(uint64_t n, double rel_tol, struct EvrLemmaSeries *out);

/*
 Full certification record for one n.
 */
enum EvrStatus evr_bound_breakdown(uint64_t n,
                                   double series_rel_tol,
                                   struct EvrBoundBreakdown *out);

/*
 DKW band half-width for the given sample count and confidence.
 */
double evr_dkw_epsilon(uint64_t samples, double confidence);

/*
 Draw representation-law samples into a caller buffer of capacity
 `buf_len >= samples`. Deterministic in (n, case, samples, seed) and
 independent of thread count.
 */
enum EvrStatus evr_draw_samples(uint64_t n,
                                const struct EvrCase *case_,
                                uint64_t samples,
                                uint64_t seed,
                                double *buf,
                                size_t buf_len);

/*
 Empirical-vs-exact Kolmogorov comparison; samples >= 10^4.
 */
enum EvrStatus evr_empirical_ks(uint64_t n,
                                const struct EvrCase *case_,
                                uint64_t samples,
                                uint64_t seed,
                                struct EvrMcResult *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* EVRATES_H */
