#include "ybx/coalgebra.hpp"

namespace ybx {

Coalgebra::Coalgebra(LinMap delta, LinMap counit, std::vector<std::string> labels)
    : delta_(std::move(delta)), counit_(std::move(counit)), labels_(std::move(labels)) {
  long n = delta_.dom();
  if (delta_.cod() != n * n)
    throw DimensionMismatch("delta must map X to X^2");
  if (counit_.dom() != n || counit_.cod() != 1)
    throw DimensionMismatch("counit must map X to the ground field");
  if (counit_.field() != delta_.field())
    throw FieldMismatch("delta and counit over different fields");
  if (labels_.empty())
    for (long i = 0; i < n; ++i) labels_.push_back("e" + std::to_string(i));
  if (static_cast<long>(labels_.size()) != n)
    throw DimensionMismatch("label count differs from dimension");
}

VerificationReport check_coalgebra(const Coalgebra& c) {
  const long n = c.dim();
  const Field& F = c.field();
  LinMap id = LinMap::identity(F, n);
  const LinMap& D = c.delta();
  const LinMap& E = c.counit();

  VerificationReport rep;
  {
    LinMap lhs = compose(tensor(D, id), D);
    LinMap rhs = compose(tensor(id, D), D);
    auto w = first_difference(lhs, rhs);
    rep.add("coassociativity", !w.has_value(), w);
  }
  {
    LinMap lhs = compose(tensor(E, id), D);  // k (x) X = X under flat indexing
    auto w = first_difference(lhs, id);
    rep.add("counit-left", !w.has_value(), w);
  }
  {
    LinMap lhs = compose(tensor(id, E), D);
    auto w = first_difference(lhs, id);
    rep.add("counit-right", !w.has_value(), w);
  }
  {
    LinMap lhs = compose(LinMap::flip(F, n, n), D);
    auto w = first_difference(lhs, D);
    rep.add("cocommutativity", !w.has_value(), w);
  }
  return rep;
}

LinMap iterated_comult(const Coalgebra& c, long n) {
  const long d = c.dim();
  LinMap acc = LinMap::identity(c.field(), d);  // Delta_0
  long power = 1;                               // acc: X -> X^power
  for (long i = 0; i < n; ++i) {
    long rest = 1;
    for (long k = 0; k < power - 1; ++k) rest *= d;
    acc = compose(tensor(c.delta(), LinMap::identity(c.field(), rest)), acc);
    ++power;
  }
  return acc;
}

Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d) {
  const Field& F = c.field();
  long m = c.dim(), n = d.dim();
  LinMap id_c = LinMap::identity(F, m);
  LinMap id_d = LinMap::identity(F, n);
  // Delta_{C(x)D} = (C (x) c (x) D) o (Delta_C (x) Delta_D)
  LinMap delta = compose(tensor_all({id_c, LinMap::flip(F, m, n), id_d}),
                         tensor(c.delta(), d.delta()));
  LinMap counit = tensor(c.counit(), d.counit());
  std::vector<std::string> labels;
  labels.reserve(m * n);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < n; ++j)
      labels.push_back(c.labels()[i] + "(x)" + d.labels()[j]);
  return Coalgebra(std::move(delta), std::move(counit), std::move(labels));
}

Coalgebra tensor_power(const Coalgebra& c, long n) {
  if (n < 1) throw DimensionMismatch("tensor_power needs n >= 1");
  Coalgebra acc = c;
  for (long i = 1; i < n; ++i) acc = tensor_coalgebra(acc, c);
  return acc;
}

bool is_coalgebra_morphism(const LinMap& f, const Coalgebra& c, const Coalgebra& d,
                           long* witness) {
  if (f.dom() != c.dim() || f.cod() != d.dim())
    throw DimensionMismatch("morphism dimensions do not match the coalgebras");
  LinMap lhs = compose(d.delta(), f);
  LinMap rhs = compose(tensor(f, f), c.delta());
  if (auto w = first_difference(lhs, rhs)) {
    if (witness) *witness = *w;
    return false;
  }
  if (auto w = first_difference(compose(d.counit(), f), c.counit())) {
    if (witness) *witness = *w;
    return false;
  }
  return true;
}

std::vector<LinMap> coordinate_maps(const LinMap& f, const Coalgebra& y,
                                    const std::vector<Coalgebra>& xs) {
  if (xs.empty()) throw DimensionMismatch("coordinate_maps needs factors");
  const Field& F = y.field();
  long prod = 1;
  for (const auto& x : xs) prod *= x.dim();
  if (f.dom() != y.dim() || f.cod() != prod)
    throw DimensionMismatch("f must map Y into the tensor product of the factors");

  std::vector<LinMap> coords;
  for (size_t i = 0; i < xs.size(); ++i) {
    LinMap proj = LinMap::identity(F, 1);
    for (size_t j = 0; j < xs.size(); ++j) {
      const LinMap& leg = (j == i) ? LinMap::identity(F, xs[j].dim()) : xs[j].counit();
      proj = tensor(proj, leg);
    }
    coords.push_back(compose(proj, f));
  }

  // When f is a coalgebra morphism into the tensor product, the coordinates
  // determine it: f = (f_1 (x) ... (x) f_n) o Delta_{n-1}.
  Coalgebra target = xs[0];
  for (size_t i = 1; i < xs.size(); ++i) target = tensor_coalgebra(target, xs[i]);
  if (is_coalgebra_morphism(f, y, target) &&
      reconstruct_from_coordinates(coords, y) != f)
    throw Error("coordinate reconstruction fails for a coalgebra morphism");
  return coords;
}

LinMap reconstruct_from_coordinates(const std::vector<LinMap>& coords,
                                    const Coalgebra& y) {
  if (coords.empty()) throw DimensionMismatch("no coordinate maps given");
  LinMap legs = coords[0];
  for (size_t i = 1; i < coords.size(); ++i) legs = tensor(legs, coords[i]);
  return compose(legs, iterated_comult(y, static_cast<long>(coords.size()) - 1));
}

Coalgebra make_setlike(const Field& f, const std::vector<std::string>& labels) {
  long n = static_cast<long>(labels.size());
  if (n == 0) throw DimensionMismatch("set-like coalgebra needs labels");
  LinMap delta(f, n, n * n);
  LinMap counit(f, n, 1);
  Scalar one = Scalar::one(f);
  for (long i = 0; i < n; ++i) {
    delta.set(i * n + i, i, one);
    counit.set(0, i, one);
  }
  return Coalgebra(std::move(delta), std::move(counit), labels);
}

Coalgebra make_primitive(const Field& f, long d) {
  if (d < 0) throw DimensionMismatch("primitive part must have dimension >= 0");
  long n = 1 + d;
  LinMap delta(f, n, n * n);
  LinMap counit(f, n, 1);
  Scalar one = Scalar::one(f);
  delta.set(0, 0, one);  // Delta 1 = 1 (x) 1
  counit.set(0, 0, one);
  for (long j = 1; j < n; ++j) {
    delta.set(j, j, one);      // 1 (x) v_j
    delta.set(j * n, j, one);  // v_j (x) 1
  }
  std::vector<std::string> labels{"1"};
  for (long j = 1; j < n; ++j) labels.push_back("v" + std::to_string(j));
  return Coalgebra(std::move(delta), std::move(counit), std::move(labels));
}

int validate_group_table(const std::vector<std::vector<int>>& cayley) {
  const int n = static_cast<int>(cayley.size());
  if (n == 0) throw InvalidGroupTable("empty Cayley table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cayley[i].size()) != n)
      throw InvalidGroupTable("row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j)
      if (cayley[i][j] < 0 || cayley[i][j] >= n)
        throw InvalidGroupTable("entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ") out of range");
  }
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n; ++g)
      if (cayley[e][g] != g || cayley[g][e] != g) {
        ok = false;
        break;
      }
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw InvalidGroupTable("no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          throw InvalidGroupTable("associativity fails at (" + std::to_string(a) +
                                  "," + std::to_string(b) + "," + std::to_string(c) +
                                  ")");
  for (int g = 0; g < n; ++g) {
    bool has_inverse = false;
    for (int h = 0; h < n; ++h)
      if (cayley[g][h] == id && cayley[h][g] == id) {
        has_inverse = true;
        break;
      }
    if (!has_inverse)
      throw InvalidGroupTable("element " + std::to_string(g) + " has no inverse");
  }
  return id;
}

Coalgebra make_group_coalgebra(const Field& f,
                               const std::vector<std::vector<int>>& cayley,
                               std::vector<std::string> labels) {
  validate_group_table(cayley);
  long n = static_cast<long>(cayley.size());
  if (labels.empty())
    for (long i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  return make_setlike(f, labels);
}

}  // namespace ybx
