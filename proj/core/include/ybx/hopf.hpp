#ifndef YBX_HOPF_HPP
#define YBX_HOPF_HPP

/**
 * @file hopf.hpp
 * @brief Cocommutative Hopf algebras, braces, braiding operators, invertible
 * 1-cocycles, and the executable equivalences between the three structures.
 *
 * The only Hopf algebras constructible through the public constructors are
 * group algebras of finite groups; arbitrary Hopf data may be loaded from
 * JSON, and every conversion re-verifies the axioms it depends on.
 */

#include "ybx/braided.hpp"
#include "ybx/coalgebra.hpp"

namespace ybx {

class HopfAlgebra {
 public:
  /// Dimension-checked only; see check_hopf().
  HopfAlgebra(Coalgebra c, LinMap m, LinMap unit, LinMap antipode);

  const Coalgebra& coalgebra() const { return c_; }
  long dim() const { return c_.dim(); }
  const Field& field() const { return c_.field(); }
  const LinMap& m() const { return m_; }
  const LinMap& unit() const { return unit_; }
  const LinMap& antipode() const { return antipode_; }

  friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) {
    return a.c_ == b.c_ && a.m_ == b.m_ && a.unit_ == b.unit_ &&
           a.antipode_ == b.antipode_;
  }

 private:
  Coalgebra c_;
  LinMap m_, unit_, antipode_;
};

/// All Hopf axioms with first-failure witnesses: coalgebra laws,
/// associativity and unit, Delta and eps being algebra morphisms, the
/// antipode equations, cocommutativity.
VerificationReport check_hopf(const HopfAlgebra& h);

/// Group algebra k[G] from a validated Cayley table.
HopfAlgebra group_algebra(const Field& f, const std::vector<std::vector<int>>& cayley,
                          std::vector<std::string> labels = {});

/**
 * A brace: two cocommutative Hopf structures (m, unit, S) and
 * (m_circ, unit_circ, T) on one coalgebra, compatible via
 *   m_circ o (A (x) m) = m o (m_circ (x) lambda) o (A (x) c (x) A) o (Delta (x) A^2)
 * with lambda = m o (S (x) m_circ) o (Delta (x) A).
 */
class Brace {
 public:
  Brace(Coalgebra c, LinMap m, LinMap unit, LinMap antipode, LinMap m_circ,
        LinMap unit_circ, LinMap antipode_circ);

  const Coalgebra& coalgebra() const { return c_; }
  long dim() const { return c_.dim(); }
  const Field& field() const { return c_.field(); }

  HopfAlgebra first() const;   // (A, m, unit, S)
  HopfAlgebra second() const;  // (A, m_circ, unit_circ, T)

  const LinMap& m() const { return m_; }
  const LinMap& unit() const { return unit_; }
  const LinMap& antipode() const { return antipode_; }
  const LinMap& m_circ() const { return m_circ_; }
  const LinMap& unit_circ() const { return unit_circ_; }
  const LinMap& antipode_circ() const { return antipode_circ_; }

  /// lambda = m o (S (x) m_circ) o (Delta (x) A).
  const LinMap& lambda() const { return lambda_; }
  /// rho = m_circ o (T (x) A) o (lambda (x) m_circ) o Delta_{A^2}.
  LinMap rho() const;

  friend bool operator==(const Brace& a, const Brace& b) {
    return a.c_ == b.c_ && a.m_ == b.m_ && a.unit_ == b.unit_ &&
           a.antipode_ == b.antipode_ && a.m_circ_ == b.m_circ_ &&
           a.unit_circ_ == b.unit_circ_ && a.antipode_circ_ == b.antipode_circ_;
  }

 private:
  Coalgebra c_;
  LinMap m_, unit_, antipode_;
  LinMap m_circ_, unit_circ_, antipode_circ_;
  LinMap lambda_;
};

/// Both Hopf structures, the brace compatibility, the module-algebra and
/// module-coalgebra axioms of lambda, the right-action axioms of rho, the
/// two antipode identities of rho, and the product reconstructions.
VerificationReport check_brace(const Brace& b);

/// The trivial brace m_circ = m on a group algebra.
Brace trivial_brace(const HopfAlgebra& h);

/// A braiding operator (A, r): a coalgebra automorphism multiplicative over
/// A (m o r = m plus the four compatibility axioms).  lambda and rho are the
/// coordinate maps of r.
struct BraidingOperator {
  HopfAlgebra hopf;
  LinMap r;
  LinMap lambda, rho;
};

/// r coalgebra automorphism plus the five braiding-operator axioms and the
/// matched-pair coordinate conditions.
VerificationReport check_operator(const BraidingOperator& o);

/// r = (lambda (x) rho) o Delta_{A^2} over (A, m_circ, unit, T); all axioms
/// re-verified, round trip back to the brace asserted.
BraidingOperator brace_to_operator(const Brace& b);

/// m = m_circ o (A (x) lambda) o (A (x) T (x) A) o (Delta (x) A) and
/// S = lambda o (A (x) T) o Delta; asserts check_brace and the round trip.
Brace operator_to_brace(const BraidingOperator& o);

/// An invertible 1-cocycle pi: H -> A for a module-algebra action of H on A.
struct Cocycle {
  HopfAlgebra domain;    // H
  HopfAlgebra codomain;  // A
  LinMap action;         // lambda: H (x) A -> A
  LinMap pi;             // coalgebra isomorphism H -> A
};

VerificationReport check_cocycle(const Cocycle& k);

/// pi = id from (A, m_circ) to (A, m) with the brace lambda as action.
Cocycle brace_to_cocycle(const Brace& b);

/// Pulls m_circ = pi o m_H o (pi^{-1} (x) pi^{-1}) through the cocycle; the
/// recovered brace satisfies lambda_brace = lambda_H o (pi^{-1} (x) A).
Brace cocycle_to_brace(const Cocycle& k);

/// Wraps (A, r) as a braided pair, runs the braid check, and asserts the
/// antipode identities relating r to R^{t1}, R^{t2} and r^{-1}.
BraidedPair operator_as_braided_pair(const BraidingOperator& o);

}  // namespace ybx

#endif
