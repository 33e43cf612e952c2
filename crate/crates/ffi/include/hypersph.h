#ifndef HYPERSPH_H
#define HYPERSPH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum HsStatus {
  HS_STATUS_OK = 0,
  HS_STATUS_NULL_POINTER = 1,
  HS_STATUS_INVALID_ARGUMENT = 2,
  HS_STATUS_INVALID_POINT = 3,
  HS_STATUS_OUT_OF_DOMAIN = 4,
  HS_STATUS_GAMMA_POLE = 5,
  HS_STATUS_DIVERGENT = 6,
  HS_STATUS_LOWER_PARAMETER_POLE = 7,
  HS_STATUS_NON_CONVERGENCE = 8,
  HS_STATUS_SINGULAR = 9,
  HS_STATUS_COMPLEX_PARAMETERS = 10,
  HS_STATUS_UNSUPPORTED = 11,
  HS_STATUS_INVALID_SPEC = 12,
  HS_STATUS_JSON = 13,
  HS_STATUS_IO = 14,
  HS_STATUS_PANIC = 15,
} HsStatus;

// Coordinate system selector, passed as `int32_t`.
typedef enum HsSystem {
  HS_SYSTEM_HYPERSPHERICAL = 0,
  HS_SYSTEM_HYPERCYLINDRICAL = 1,
} HsSystem;

// Opaque handle to a validated mode specification.
typedef struct HsModeSpec HsModeSpec;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null if it succeeded.
// The pointer stays valid until the next call on the same thread.
const char *hs_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *hs_version(void);

// `Γ(x)`.
//
// # Safety
// Pointer arguments must be valid for the element counts passed with them.
enum HsStatus hs_gamma(double x, double *out);

// Gauss hypergeometric `F(α, β; γ; z)`.
//
// # Safety
// Pointer arguments must be valid for the element counts passed with them.
enum HsStatus hs_hyp2f1(double alpha, double beta, double gamma, double z, double *out);

// `J_σ(x)`.
//
// # Safety
// Pointer arguments must be valid for the element counts passed with them.
enum HsStatus hs_bessel_j(double sigma, double x, double *out);

// `Y_σ(x)`.
//
// # Safety
// Pointer arguments must be valid for the element counts passed with them.
enum HsStatus hs_bessel_y(double sigma, double x, double *out);

// Spherical `j_q(x)`.
//
// # Safety
// Pointer arguments must be valid for the element counts passed with them.
enum HsStatus hs_spherical_bessel_j(uint32_t q, double x, double *out);

// Spherical `y_q(x)`.
//
// # Safety
// Pointer arguments must be valid for the element counts passed with them.
enum HsStatus hs_spherical_bessel_y(uint32_t q, double x, double *out);

// `P_ν(x)`.
//
// # Safety
// Pointer arguments must be valid for the element counts passed with them.
enum HsStatus hs_legendre_p(double nu, double x, double *out);

// Associated `P_ν^μ(x)` without the Condon-Shortley phase.
//
// # Safety
// Pointer arguments must be valid for the element counts passed with them.
enum HsStatus hs_assoc_legendre_p(double nu, double mu, double x, double *out);

// Hyperspherical `P_{ν,λ}(x)`.
//
// # Safety
// Pointer arguments must be valid for the element counts passed with them.
enum HsStatus hs_hyper_legendre(double nu, double lambda, double x, double *out);

// Hyperspherical associated `P_{ν,λ}^μ(x)`; `branch` is +1 or -1.
//
// # Safety
// Pointer arguments must be valid for the element counts passed with them.
enum HsStatus hs_hyper_assoc_legendre(double nu,
                                      double mu,
                                      double lambda,
                                      int32_t branch,
                                      double x,
                                      double *out);

// Squared radial wavenumber for time-operator coefficients `A_0 … A_{n-1}`.
// `sign` is +1 or -1 and selects `∂_t → ±iω`.
//
// # Safety
// Pointer arguments must be valid for the element counts passed with them.
enum HsStatus hs_dispersion(const double *coefficients,
                            size_t n,
                            double omega_re,
                            double omega_im,
                            int32_t sign,
                            double *out_re,
                            double *out_im);

// Maps `dim` generalized coordinates in system order to Cartesian ones.
//
// # Safety
// Pointer arguments must be valid for the element counts passed with them.
enum HsStatus hs_to_cartesian(int32_t system, const double *coords, size_t dim, double *out);

// Inverse of [`hs_to_cartesian`]; the longitude lands in `[0, 2π)`.
//
// # Safety
// Pointer arguments must be valid for the element counts passed with them.
enum HsStatus hs_from_cartesian(int32_t system, const double *x, size_t dim, double *out);

// Writes the `dim` scale factors at a point given in generalized coordinates.
//
// # Safety
// Pointer arguments must be valid for the element counts passed with them.
enum HsStatus hs_scale_factors(int32_t system, const double *coords, size_t dim, double *out);

// Parses and validates a JSON mode document. Release with [`hs_mode_spec_free`].
//
// # Safety
// `json` must be null or a NUL-terminated string.
enum HsStatus hs_mode_spec_from_json(const char *json, struct HsModeSpec **out);

// Releases a handle; null is ignored.
//
// # Safety
// `spec` must be null or come from [`hs_mode_spec_from_json`] and not be freed twice.
void hs_mode_spec_free(struct HsModeSpec *spec);

// Serializes a handle as pretty JSON. Release the string with [`hs_string_free`].
//
// # Safety
// `spec` must be null or a live handle.
enum HsStatus hs_mode_spec_to_json(const struct HsModeSpec *spec, char **out);

// Dimension of the mode's space, or 0 for a null handle.
//
// # Safety
// `spec` must be null or a live handle.
size_t hs_mode_spec_dim(const struct HsModeSpec *spec);

// `k² + K²`, the eigenvalue of `-∇²` on the mode.
//
// # Safety
// `spec` must be null or a live handle.
enum HsStatus hs_mode_wavenumber_squared(const struct HsModeSpec *spec, double *out);

// Evaluates the mode at `dim` generalized coordinates and time `t`.
//
// # Safety
// `spec` must be null or a live handle; `coords` must hold `dim` doubles.
enum HsStatus hs_mode_eval(const struct HsModeSpec *spec,
                           const double *coords,
                           size_t dim,
                           double t,
                           double *out_re,
                           double *out_im);

// Releases a string returned by this library; null is ignored.
//
// # Safety
// `s` must be null or come from this library and not be freed twice.
void hs_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERSPH_H */
