#ifndef YBX_RACK_HPP
#define YBX_RACK_HPP

/**
 * @file rack.hpp
 * @brief Racks in the category, derived solutions, and the guitar maps.
 *
 * A rack is a coalgebra map tri: X^2 -> X that is self-distributive and left
 * non-degenerate; it yields the solution r_tri = (tri (x) X) o (X (x) c) o
 * (Delta (x) X).  Conversely every non-degenerate braided set has a derived
 * map s (again a rack-type solution), and the guitar maps J_n intertwine the
 * braid-group action of r with that of s on X^n.
 */

#include "ybx/braided.hpp"

namespace ybx {

/// Total-dimension cap for tensor-power computations (X^n must satisfy
/// dim(X)^n <= cap).  Defaults to 4096; override with YBX_DIM_CAP.
long tensor_dim_cap();

class Rack {
 public:
  /// Validates the rack axioms (coalgebra morphism, self-distributivity,
  /// left non-degeneracy) and computes tri_bar; throws RackAxiomFailure.
  static Rack make(Coalgebra x, LinMap tri);

  const Coalgebra& coalgebra() const { return x_; }
  const LinMap& tri() const { return tri_; }
  const LinMap& tri_bar() const { return tri_bar_; }

 private:
  Rack(Coalgebra x, LinMap tri, LinMap tri_bar)
      : x_(std::move(x)), tri_(std::move(tri)), tri_bar_(std::move(tri_bar)) {}
  Coalgebra x_;
  LinMap tri_;
  LinMap tri_bar_;
};

/// The trivial rack tri = eps (x) X on any coalgebra.
Rack trivial_rack(const Coalgebra& x);

/// r_tri = (tri (x) X) o (X (x) c) o (Delta (x) X); the result is re-checked
/// to be a non-degenerate braided set.
BraidedPair rack_to_solution(const Rack& rack);

struct DerivedSolution {
  LinMap s;        // the derived map of r
  Rack rack;       // tri = (X (x) eps) o s with computed tri_bar
  bool involutive_collapse;  // s == c, equivalent to r^2 = id
};

/// Derived map s = (tau (x) X) o (X (x) Delta) o c o (X (x) sigma) o
/// (X (x) tau^{-1} (x) X) o (Delta (x) Delta); asserts s = r_tri for its own
/// rack and that (X, s) is again a non-degenerate braided set.
DerivedSolution solution_to_rack(const BraidedPair& p);

/**
 * The alpha/Q/J towers on X^2..X^n:
 *   alpha_2 = Q_2 = (tau (x) X) o (X (x) Delta),
 *   alpha_{n+1} = (tau (x) X^n) o (X (x) c_{n-1,1} (x) X) o (alpha_n (x) Delta),
 *   Q_{n+1}     = (tau (x) Q_n) o (X (x) c_{n-1,1} (x) X) o (X^n (x) Delta),
 *   J_1 = id,  J_{n+1} = (X (x) J_n) o alpha_{n+1}.
 * Construction asserts J_n = Q_n o (J_{n-1} (x) X), the alternative
 * recursions, and invertibility of every level (inverses are built from the
 * recursion rather than by elimination).
 */
class GuitarTower {
 public:
  long levels() const { return n_; }
  const LinMap& alpha(long k) const { return alpha_.at(k - 2); }  // 2 <= k <= n
  const LinMap& q(long k) const { return q_.at(k - 2); }          // 2 <= k <= n
  const LinMap& j(long k) const { return j_.at(k - 1); }          // 1 <= k <= n
  const LinMap& j_inv(long k) const { return j_inv_.at(k - 1); }

 private:
  friend GuitarTower guitar(const BraidedPair&, long, std::optional<long>);
  long n_ = 0;
  std::vector<LinMap> alpha_, q_, j_, j_inv_;
};

GuitarTower guitar(const BraidedPair& p, long n, std::optional<long> cap = std::nullopt);

/// id^{(i-1)} (x) r (x) id^{(n-i-1)} acting on legs i, i+1 of X^n (1-based).
LinMap leg_pair_map(const LinMap& r, long dim, long n, long i);

/// J_n o r_{i,i+1} = s_{i,i+1} o J_n for all 1 <= i < n, plus the
/// commutation alpha_n o r_{i,i+1} = r_{i,i+1} o alpha_n for 1 < i < n.
/// The per-i checks are independent and run on `threads` workers.
bool check_intertwining(const BraidedPair& p, long n,
                        std::optional<long> cap = std::nullopt, int threads = 1);

/// Braid-group generators b_i |-> r_{i,i+1} on X^n; asserts the braid and
/// distant-commutation relations, and b_i^2 = id when p is involutive.
std::vector<LinMap> braid_rep(const BraidedPair& p, long n,
                              std::optional<long> cap = std::nullopt);

}  // namespace ybx

#endif
