#ifndef YBX_TESTS_HELPERS_HPP
#define YBX_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "ybx/linmap.hpp"

namespace ybx::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240811);
  return gen;
}

inline Scalar random_scalar(const Field& f) {
  if (f.is_rational()) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    return Scalar::rational(num(rng()), den(rng()));
  }
  std::uniform_int_distribution<long long> digit(0, f.prime() - 1);
  return Scalar::residue(f, digit(rng()));
}

inline Scalar random_nonzero_scalar(const Field& f) {
  Scalar s = random_scalar(f);
  while (s.is_zero()) s = random_scalar(f);
  return s;
}

inline LinMap random_linmap(const Field& f, long dom, long cod) {
  LinMap m(f, dom, cod);
  for (long r = 0; r < cod; ++r)
    for (long c = 0; c < dom; ++c) {
      Scalar v = random_scalar(f);
      if (!v.is_zero()) m.set(r, c, v);
    }
  return m;
}

inline LinMap random_invertible(const Field& f, long n) {
  for (;;) {
    LinMap m = random_linmap(f, n, n);
    try {
      invert(m);
      return m;
    } catch (const SingularMap&) {
    }
  }
}

// Schoolbook dense multiplication, independent of compose().
inline std::vector<std::vector<Scalar>> dense_product(const LinMap& g, const LinMap& f) {
  auto a = g.dense_rows();
  auto b = f.dense_rows();
  std::vector<std::vector<Scalar>> out(
      g.cod(), std::vector<Scalar>(f.dom(), Scalar::zero(f.field())));
  for (long i = 0; i < g.cod(); ++i)
    for (long j = 0; j < f.dom(); ++j)
      for (long k = 0; k < g.dom(); ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

}  // namespace ybx::testing

#endif
