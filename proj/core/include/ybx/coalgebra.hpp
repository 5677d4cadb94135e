#ifndef YBX_COALGEBRA_HPP
#define YBX_COALGEBRA_HPP

/**
 * @file coalgebra.hpp
 * @brief Finite-dimensional cocommutative coalgebras and their morphisms.
 *
 * A coalgebra is (X, delta, counit) with delta: X -> X (x) X and
 * counit: X -> k.  Construction only checks dimensions; check_coalgebra()
 * reports coassociativity, the counit laws and cocommutativity with
 * deterministic first-failure witnesses, so invalid data loaded from JSON is
 * diagnosable rather than unrepresentable.
 */

#include <string>
#include <vector>

#include "ybx/linmap.hpp"
#include "ybx/report.hpp"

namespace ybx {

class Coalgebra {
 public:
  /// Dimension-checked; axioms are verified separately by check_coalgebra().
  Coalgebra(LinMap delta, LinMap counit, std::vector<std::string> labels);

  long dim() const { return delta_.dom(); }
  const Field& field() const { return delta_.field(); }
  const LinMap& delta() const { return delta_; }
  const LinMap& counit() const { return counit_; }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const Coalgebra& a, const Coalgebra& b) {
    return a.delta_ == b.delta_ && a.counit_ == b.counit_ && a.labels_ == b.labels_;
  }

 private:
  LinMap delta_;
  LinMap counit_;
  std::vector<std::string> labels_;
};

/// Coassociativity, both counit laws, cocommutativity.
VerificationReport check_coalgebra(const Coalgebra& c);

/// Iterated comultiplication Delta_n: X -> X^{n+1}; Delta_0 = id and
/// Delta_{i+1} = (Delta (x) X^i) o Delta_i.
LinMap iterated_comult(const Coalgebra& c, long n);

/// The tensor-product coalgebra C (x) D.
Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d);

/// Left-associated n-th tensor power of C.
Coalgebra tensor_power(const Coalgebra& c, long n);

/// Delta_D o f = (f (x) f) o Delta_C and counit_D o f = counit_C.
/// On failure `witness` (if non-null) receives the first failing basis index.
bool is_coalgebra_morphism(const LinMap& f, const Coalgebra& c, const Coalgebra& d,
                           long* witness = nullptr);

/// Coordinate maps f_i = (eps^{i-1} (x) X_i (x) eps^{n-i-1}) o f of a map
/// f: Y -> X_1 (x) ... (x) X_n.
std::vector<LinMap> coordinate_maps(const LinMap& f, const Coalgebra& y,
                                    const std::vector<Coalgebra>& xs);

/// (f_1 (x) ... (x) f_n) o Delta_{n-1}; equals f when f is a coalgebra
/// morphism into the tensor product.
LinMap reconstruct_from_coordinates(const std::vector<LinMap>& coords,
                                    const Coalgebra& y);

/// Group-like basis: Delta e_i = e_i (x) e_i, counit e_i = 1.
Coalgebra make_setlike(const Field& f, const std::vector<std::string>& labels);

/// k (+) V with one group-like 1 and d primitives: Delta 1 = 1 (x) 1 and
/// Delta v = 1 (x) v + v (x) 1.
Coalgebra make_primitive(const Field& f, long d);

/// Set-like coalgebra on the elements of a finite group; the Cayley table is
/// validated (associativity, identity, inverses) with a witness on failure.
Coalgebra make_group_coalgebra(const Field& f,
                               const std::vector<std::vector<int>>& cayley,
                               std::vector<std::string> labels = {});

/// Validates a Cayley table; throws InvalidGroupTable with a witness.
/// Returns the index of the identity element.
int validate_group_table(const std::vector<std::vector<int>>& cayley);

}  // namespace ybx

#endif
