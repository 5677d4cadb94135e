#include "ybx/gallery.hpp"

#include <functional>

namespace ybx {
namespace gallery {

namespace {

std::vector<std::string> indexed_labels(const std::string& stem, long n) {
  std::vector<std::string> out;
  for (long i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

// Set-like pair from a permutation of basis pairs.
BraidedPair pair_permutation_solution(const Field& f, long n,
                                      const std::function<std::pair<long, long>(long, long)>& fn,
                                      std::vector<std::string> labels) {
  Coalgebra x = make_setlike(f, labels);
  LinMap r(f, n * n, n * n);
  Scalar one = Scalar::one(f);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      auto [a, b] = fn(i, j);
      r.set(a * n + b, i * n + j, one);
    }
  return BraidedPair(std::move(x), std::move(r));
}

int group_inverse(const std::vector<std::vector<int>>& t, int id, int g) {
  for (int h = 0; h < static_cast<int>(t.size()); ++h)
    if (t[g][h] == id && t[h][g] == id) return h;
  throw InvalidGroupTable("element without inverse");
}

}  // namespace

BraidedPair flip_pair(const Field& f, long n) {
  return pair_permutation_solution(
      f, n, [](long i, long j) { return std::make_pair(j, i); },
      indexed_labels("x", n));
}

BraidedPair permutation_pair(const Field& f, const std::vector<long>& p,
                             const std::vector<long>& q) {
  long n = static_cast<long>(p.size());
  if (q.size() != p.size()) throw DimensionMismatch("permutations of different sizes");
  return pair_permutation_solution(
      f, n, [&](long i, long j) { return std::make_pair(p[j], q[i]); },
      indexed_labels("x", n));
}

BraidedPair cyclic_shift_pair(const Field& f, long m) {
  std::vector<long> p(m), q(m);
  for (long i = 0; i < m; ++i) {
    p[i] = (i + 1) % m;
    q[i] = (i + m - 1) % m;
  }
  return permutation_pair(f, p, q);
}

BraidedPair cyclic_translation_pair(const Field& f, long m) {
  std::vector<long> p(m);
  for (long i = 0; i < m; ++i) p[i] = (i + 1) % m;
  return permutation_pair(f, p, p);
}

BraidedPair involution_pair(const Field& f, const std::vector<long>& g) {
  return permutation_pair(f, g, g);
}

std::vector<std::vector<int>> cyclic_table(int m) {
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i][j] = (i + j) % m;
  return t;
}

std::vector<std::vector<int>> s3_table() {
  // Permutations of {0,1,2}: e, (01), (02), (12), (012), (021).
  const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                           {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto index_of = [&](const int* p) {
    for (int k = 0; k < 6; ++k)
      if (perms[k][0] == p[0] && perms[k][1] == p[1] && perms[k][2] == p[2]) return k;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int comp[3];
      for (int i = 0; i < 3; ++i) comp[i] = perms[a][perms[b][i]];
      t[a][b] = index_of(comp);
    }
  return t;
}

std::vector<std::string> s3_labels() {
  return {"e", "(01)", "(02)", "(12)", "(012)", "(021)"};
}

Rack conjugation_rack(const Field& f, const std::vector<std::vector<int>>& table,
                      std::vector<std::string> labels) {
  int id = validate_group_table(table);
  long n = static_cast<long>(table.size());
  Coalgebra x = make_group_coalgebra(f, table, std::move(labels));
  LinMap tri(f, n * n, n);
  Scalar one = Scalar::one(f);
  for (long g = 0; g < n; ++g) {
    int gi = group_inverse(table, id, static_cast<int>(g));
    for (long h = 0; h < n; ++h)
      tri.set(table[table[g][h]][gi], g * n + h, one);
  }
  return Rack::make(std::move(x), std::move(tri));
}

BraidedPair conjugation_solution(const Field& f,
                                 const std::vector<std::vector<int>>& table,
                                 std::vector<std::string> labels) {
  return rack_to_solution(conjugation_rack(f, table, std::move(labels)));
}

LinMap leibniz_bracket_d2(const Field& f) {
  LinMap b(f, 4, 2);
  b.set(1, 0, Scalar::one(f));  // [v1, v1] = v2
  return b;
}

PrimParams leibniz_params_d2(const Field& f) {
  return from_leibniz(leibniz_bracket_d2(f), LinMap::identity(f, 2));
}

LinMap associative_product_d2(const Field& f) {
  LinMap mu(f, 4, 2);
  mu.set(1, 0, Scalar::one(f));  // v1 * v1 = v2
  return mu;
}

PrimParams associative_params_d2(const Field& f) {
  return from_associative(associative_product_d2(f));
}

LinMap nonleibniz_bracket_d3(const Field& f) {
  // [v1,v2] = v3, [v2,v3] = v1, [v1,v3] = v1, antisymmetrized; the Jacobi
  // identity fails, so the left Leibniz identity fails too.
  LinMap b(f, 9, 3);
  Scalar one = Scalar::one(f);
  auto set_pair = [&](long i, long j, long k) {
    b.set(k, i * 3 + j, one);
    b.set(k, j * 3 + i, -one);
  };
  set_pair(0, 1, 2);
  set_pair(1, 2, 0);
  set_pair(0, 2, 0);
  return b;
}

Brace z4_klein_brace(const Field& f) {
  auto add = cyclic_table(4);
  HopfAlgebra h = group_algebra(f, add, indexed_labels("a", 4));
  long n = 4;
  LinMap m_circ(f, n * n, n);
  LinMap t_circ(f, n, n);
  Scalar one = Scalar::one(f);
  for (long a = 0; a < n; ++a) {
    for (long b = 0; b < n; ++b)
      m_circ.set((a + b + 2 * a * b) % 4, a * n + b, one);
    t_circ.set(a, a, one);  // every element is its own circle inverse
  }
  return Brace(h.coalgebra(), h.m(), h.unit(), h.antipode(), std::move(m_circ),
               h.unit(), std::move(t_circ));
}

BraidingOperator conjugation_operator(const Field& f,
                                      const std::vector<std::vector<int>>& table,
                                      std::vector<std::string> labels) {
  int id = validate_group_table(table);
  HopfAlgebra h = group_algebra(f, table, std::move(labels));
  long n = h.dim();
  LinMap r(f, n * n, n * n);
  Scalar one = Scalar::one(f);
  for (long g = 0; g < n; ++g) {
    int gi = group_inverse(table, id, static_cast<int>(g));
    for (long k = 0; k < n; ++k)
      r.set(static_cast<long>(table[table[g][k]][gi]) * n + g, g * n + k, one);
  }
  LinMap lambda = compose(tensor(LinMap::identity(f, n), h.coalgebra().counit()), r);
  LinMap rho = compose(tensor(h.coalgebra().counit(), LinMap::identity(f, n)), r);
  return BraidingOperator{std::move(h), std::move(r), std::move(lambda), std::move(rho)};
}

}  // namespace gallery
}  // namespace ybx
