#ifndef YBX_BRAIDED_HPP
#define YBX_BRAIDED_HPP

/**
 * @file braided.hpp
 * @brief Braided sets on cocommutative coalgebras.
 *
 * A pair (X, r) with r a coalgebra automorphism of X (x) X.  The checks here
 * are the braid equation, involutivity, non-degeneracy (with the inverse
 * coordinate maps sigma^{-1}, tau^{-1}), the R-matrix with the quantum
 * Yang-Baxter equation and the unitary condition, and the four variable
 * transpositions of R and R_21.
 *
 * Degeneracy is a verdict, not an error, so search loops can filter cheaply;
 * operations that genuinely need the inverses throw DegenerateInput.
 */

#include <memory>
#include <optional>

#include "ybx/coalgebra.hpp"
#include "ybx/report.hpp"

namespace ybx {

/// First coordinate sigma = (X (x) eps) o r.
LinMap sigma_of(const Coalgebra& x, const LinMap& r);
/// Second coordinate tau = (eps (x) X) o r.
LinMap tau_of(const Coalgebra& x, const LinMap& r);

struct BraidVerdict {
  bool pass = false;
  std::optional<long> witness;  // first differing flat basis index of X^3
};

/// r12 o r23 o r12 = r23 o r12 o r23 on X^3, compared exactly.
BraidVerdict check_braid(const Coalgebra& x, const LinMap& r);

/// Equivalent three-identity form of the braid equation in terms of the
/// coordinate maps (including the linking relation); must agree with
/// check_braid on every coalgebra automorphism.
BraidVerdict check_braid_via_coordinates(const Coalgebra& x, const LinMap& r);

bool check_involutive(const LinMap& r);

struct NondegeneracyResult {
  bool nondegenerate = false;
  std::optional<LinMap> sigma_inv;
  std::optional<LinMap> tau_inv;
};

/// Forms (X (x) sigma) o (Delta (x) X) and (tau (x) X) o (X (x) Delta); the
/// pair is non-degenerate iff both are invertible.  The inverse coordinate
/// maps are extracted from the inverses, re-verified against the defining
/// equations, and checked to be coalgebra morphisms.
NondegeneracyResult check_nondegenerate(const Coalgebra& x, const LinMap& r);

/**
 * A validated braided-set candidate: construction checks that r is a
 * coalgebra automorphism of X^2 and the four comultiplication-compatibility
 * identities of its coordinate maps.  sigma/tau are computed eagerly;
 * r^{-1} and the non-degeneracy data are cached lazily (write-once, shared
 * between copies).
 */
class BraidedPair {
 public:
  BraidedPair(Coalgebra x, LinMap r);

  const Coalgebra& coalgebra() const { return x_; }
  const LinMap& r() const { return r_; }
  const LinMap& sigma() const { return sigma_; }
  const LinMap& tau() const { return tau_; }

  const LinMap& r_inv() const;
  bool is_nondegenerate() const;
  /// Throw DegenerateInput when the pair is degenerate.
  const LinMap& sigma_inv() const;
  const LinMap& tau_inv() const;

  long dim() const { return x_.dim(); }
  const Field& field() const { return x_.field(); }

 private:
  struct Cache;
  Coalgebra x_;
  LinMap r_;
  LinMap sigma_, tau_;
  std::shared_ptr<Cache> cache_;
};

BraidVerdict check_braid(const BraidedPair& p);
bool check_involutive(const BraidedPair& p);

/// R = c o r; also asserts R = (tau (x) sigma) o Delta_{X^2}.
LinMap r_matrix(const BraidedPair& p);

/// R12 o R13 o R23 = R23 o R13 o R12 (R13 built by conjugating with flips).
bool check_qybe(const BraidedPair& p);

/// R21 o R = id with R21 = c o R o c.
bool check_unitary(const BraidedPair& p);

struct Transpositions {
  LinMap rt1, rt2, r21t1, r21t2;
};

/// Solves the four defining equations of R^{t1}, R^{t2}, R21^{t1}, R21^{t2}
/// and asserts that they are mutually inverse isomorphisms.
/// Throws DegenerateInput on degenerate pairs.
Transpositions transpositions(const BraidedPair& p);

/// The full verdict table used by the CLI: coalgebra axioms, coalgebra
/// automorphism, braid, involutive, non-degenerate, QYBE, unitary.
VerificationReport verify_pair(const Coalgebra& x, const LinMap& r);

}  // namespace ybx

#endif
