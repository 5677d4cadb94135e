#ifndef YBX_LINMAP_HPP
#define YBX_LINMAP_HPP

/**
 * @file linmap.hpp
 * @brief Exact linear maps between based vector spaces.
 *
 * A LinMap is a cod x dom matrix of exact scalars; column j is the image of
 * the j-th domain basis vector.  Composition, Kronecker tensor product,
 * identities and the symmetry (flip) maps are the engine every structural
 * identity in the library is evaluated on.
 *
 * Index convention, fixed globally: the basis vector e_i (x) e_j of V (x) W
 * has flat index i*dim(W) + j, 0-based, and higher tensor powers flatten
 * left-associatively.  Under this convention tensor(tensor(f,g),h) and
 * tensor(f,tensor(g,h)) agree entry for entry.
 *
 * Storage is sparse by column; equality, JSON and all published semantics
 * are those of the dense matrix.
 */

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "ybx/scalar.hpp"

namespace ybx {

class LinMap {
 public:
  using Entry = std::pair<long, Scalar>;  // (row, value), value != 0

  /// The zero map dom -> cod.
  LinMap(const Field& f, long dom, long cod);

  static LinMap identity(const Field& f, long n);
  static LinMap zero(const Field& f, long dom, long cod) { return LinMap(f, dom, cod); }

  /// Symmetry c: V (x) W -> W (x) V with dim V = m, dim W = n; sends flat
  /// index i*n + j to j*m + i.
  static LinMap flip(const Field& f, long m, long n);

  /// Build from dense rows (row-major, cod rows of dom entries).
  static LinMap from_rows(const Field& f, long dom, long cod,
                          const std::vector<std::vector<Scalar>>& rows);

  /// Permutation map sending e_j to e_{image[j]} (dom = cod = image.size()).
  static LinMap permutation(const Field& f, const std::vector<long>& image);

  long dom() const { return dom_; }
  long cod() const { return cod_; }
  const Field& field() const { return field_; }

  const std::vector<Entry>& column(long j) const { return cols_[j]; }
  Scalar at(long row, long col) const;
  void set(long row, long col, const Scalar& v);

  long nonzeros() const;
  bool is_identity() const;

  std::vector<std::vector<Scalar>> dense_rows() const;

  /// Image of a coordinate vector under the map.
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  LinMap operator+(const LinMap& o) const;
  LinMap operator-(const LinMap& o) const;
  LinMap scaled(const Scalar& k) const;

  friend bool operator==(const LinMap& a, const LinMap& b);
  friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

 private:
  Field field_;
  long dom_, cod_;
  std::vector<std::vector<Entry>> cols_;  // cols_[j] sorted by row, no zeros
};

/// g after f (dimension-checked).
LinMap compose(const LinMap& g, const LinMap& f);

/// Right-to-left composition of a pipeline written in the usual g∘f order.
LinMap compose_all(std::initializer_list<LinMap> maps);
LinMap compose_all(const std::vector<LinMap>& maps);

inline LinMap operator*(const LinMap& g, const LinMap& f) { return compose(g, f); }

/// Kronecker product under the global flat-index convention.
LinMap tensor(const LinMap& f, const LinMap& g);
LinMap tensor_all(std::initializer_list<LinMap> maps);

/// Exact inverse by Gaussian elimination; throws SingularMap.
LinMap invert(const LinMap& f);

/// Basis of the kernel, as coordinate vectors.
std::vector<std::vector<Scalar>> kernel_basis(const LinMap& f);

/// First domain basis index on which the two maps differ (lexicographic flat
/// order), or nullopt when equal.  Dimension mismatch throws.
std::optional<long> first_difference(const LinMap& a, const LinMap& b);

}  // namespace ybx

#endif
