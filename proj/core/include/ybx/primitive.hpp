#ifndef YBX_PRIMITIVE_HPP
#define YBX_PRIMITIVE_HPP

/**
 * @file primitive.hpp
 * @brief The parametrized family of non-degenerate solutions on X = k (+) V.
 *
 * A non-degenerate coalgebra automorphism r of X^2 is exactly a tuple
 * (g, h, sigma_V, tau_V) with g, h invertible, acting by
 *   r(1 (x) 1) = 1 (x) 1,
 *   r(1 (x) v) = g(v) (x) 1,          r(v (x) 1) = 1 (x) h(v),
 *   r(v (x) w) = 1 (x) tau_V(v (x) w) + g(w) (x) h(v) + sigma_V(v (x) w) (x) 1,
 * and r satisfies the braid equation iff conditions (1)-(8) hold.  The
 * bilinear maps are stored as d^2 -> d linear maps under the global
 * flat-index convention.
 */

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

#include "ybx/braided.hpp"

namespace ybx {

struct PrimParams {
  long d;        // dim V
  LinMap g, h;   // d -> d
  LinMap sigma_v, tau_v;  // d^2 -> d

  const Field& field() const { return g.field(); }
};

/// Dimension/field sanity for a parameter tuple.
void validate_params(const PrimParams& p);

/// Builds the solution candidate on k (+) V; requires invertible g and h
/// (SingularG / SingularH).  The result is asserted to be a non-degenerate
/// coalgebra automorphism whose inverse coordinate maps match the closed
/// forms sigma^{-1}(v (x) w) = -g^{-1}(sigma_V(v (x) g^{-1}(w))) and
/// tau^{-1}(v (x) w) = -h^{-1}(tau_V(h^{-1}(v) (x) w)).
BraidedPair prim_to_solution(const PrimParams& p);

struct PrimConditions {
  std::array<CheckResult, 8> condition;    // (1)..(8)
  // Remark reformulations of (5) and (7), evaluable when g, h are invertible.
  std::optional<CheckResult> remark_sigma;  // sigma_V o (g^{-1} (x) V) = sigma_V o (h (x) V)
  std::optional<CheckResult> remark_tau;    // tau_V o (V (x) h^{-1}) = tau_V o (V (x) g)

  bool all() const {
    for (const auto& c : condition)
      if (!c.pass) return false;
    return true;
  }
};

/// Conditions (1)-(8), evaluated exactly; (8) is checked on basis triples
/// with the flat triple index as witness.  Also evaluates the remark
/// reformulations and asserts their consistency with (5)/(7) under (2)/(6).
PrimConditions check_conditions(const PrimParams& p);

/// The classification theorem as an executable oracle: returns whether
/// check_braid(prim_to_solution(p)) agrees with all-of check_conditions(p).
bool theorem_equivalence(const PrimParams& p);

struct RadicalReport {
  std::vector<std::vector<Scalar>> radl_sigma, radr_sigma, radl_tau, radr_tau;
  // Stability of the radicals under g and h, the image inclusion
  // Im(g - h^{-1}) in rad_R(tau) /\ rad_L(sigma), and g = h^{-1} when that
  // intersection vanishes; evaluated when the applicable conditions hold.
  VerificationReport structure;
  std::optional<PrimParams> quotient;  // induced tuple on k (+) V / W
};

RadicalReport radicals(const PrimParams& p);

/// Leibniz-type constructor: requires the two g-compatibilities
/// sigma o (g (x) g) = sigma o (V (x) g) = g o sigma and the g-twisted
/// identity sigma(u, sigma(v,w)) = sigma(sigma(u,v), g(w)) + sigma(g(v), sigma(u,w)).
PrimParams from_leibniz(const LinMap& bracket, const LinMap& g);

/// Associative-algebra constructor: sigma_V = mu, tau_V = -mu o c.
PrimParams from_associative(const LinMap& mu);

struct SearchOptions {
  bool exhaustive = true;
  std::uint64_t samples = 0;   // sampling mode: number of draws
  std::uint64_t seed = 0;      // required for reproducible sampling
  std::uint8_t condition_mask = 0xFF;  // bit i-1 selects condition (i)
  int threads = 1;
};

/// Canonical enumeration of parameter tuples over F_p: index digits in base
/// p fill g (row-major), then h, then sigma_V, then tau_V.
PrimParams decode_params(const Field& f, long d, std::uint64_t index);
std::uint64_t search_space_size(const Field& f, long d);

/// Streams tuples with invertible g, h whose masked conditions all pass.
/// Exhaustive mode yields in canonical index order (regardless of thread
/// count); sampling mode draws `samples` tuples with the given seed.
/// The callback may return false to stop early.
void search_primitive(const Field& f, long d, const SearchOptions& opts,
                      const std::function<bool(const PrimParams&, std::uint64_t)>& yield);

}  // namespace ybx

#endif
