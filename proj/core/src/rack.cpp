#include "ybx/rack.hpp"

#include <cstdlib>
#include <future>

namespace ybx {

namespace {

long pow_checked(long base, long exp, long cap) {
  long v = 1;
  for (long i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap)
      throw CapExceeded("X^" + std::to_string(exp) + " has dimension > cap " +
                        std::to_string(cap));
  }
  return v;
}

long resolve_cap(std::optional<long> cap) { return cap ? *cap : tensor_dim_cap(); }

}  // namespace

long tensor_dim_cap() {
  static long cap = [] {
    if (const char* s = std::getenv("YBX_DIM_CAP")) {
      long v = std::atol(s);
      if (v > 0) return v;
    }
    return 4096L;
  }();
  return cap;
}

Rack Rack::make(Coalgebra x, LinMap tri) {
  const Field& F = x.field();
  const long n = x.dim();
  if (tri.dom() != n * n || tri.cod() != n)
    throw DimensionMismatch("tri must map X^2 to X");
  LinMap id = LinMap::identity(F, n);
  LinMap c = LinMap::flip(F, n, n);

  Coalgebra x2 = tensor_coalgebra(x, x);
  long w = -1;
  if (!is_coalgebra_morphism(tri, x2, x, &w))
    throw RackAxiomFailure("tri is not a coalgebra morphism (witness index " +
                           std::to_string(w) + ")");

  LinMap lhs = compose(tri, tensor(id, tri));
  LinMap rhs = compose_all({tri, tensor(tri, tri), tensor_all({id, c, id}),
                            tensor_all({x.delta(), id, id})});
  if (auto d = first_difference(lhs, rhs))
    throw RackAxiomFailure("self-distributivity fails (witness index " +
                           std::to_string(*d) + ")");

  LinMap left = compose(tensor(id, tri), tensor(x.delta(), id));
  LinMap left_inv(F, 1, 1);
  try {
    left_inv = invert(left);
  } catch (const SingularMap&) {
    throw RackAxiomFailure("(X (x) tri) o (Delta (x) X) is singular");
  }
  LinMap tri_bar = compose(tensor(x.counit(), id), left_inv);
  LinMap eps_x = tensor(x.counit(), id);
  if (compose_all({tri_bar, tensor(id, tri), tensor(x.delta(), id)}) != eps_x ||
      compose_all({tri, tensor(id, tri_bar), tensor(x.delta(), id)}) != eps_x)
    throw RackAxiomFailure("tri_bar fails the left non-degeneracy equations");

  return Rack(std::move(x), std::move(tri), std::move(tri_bar));
}

Rack trivial_rack(const Coalgebra& x) {
  LinMap tri = tensor(x.counit(), LinMap::identity(x.field(), x.dim()));
  return Rack::make(x, tri);
}

BraidedPair rack_to_solution(const Rack& rack) {
  const Coalgebra& x = rack.coalgebra();
  const Field& F = x.field();
  const long n = x.dim();
  LinMap id = LinMap::identity(F, n);
  LinMap r = compose_all({tensor(rack.tri(), id), tensor(id, LinMap::flip(F, n, n)),
                          tensor(x.delta(), id)});
  BraidedPair p(x, r);
  BraidVerdict braid = check_braid(p);
  if (!braid.pass)
    throw Error("rack solution fails the braid equation (witness " +
                std::to_string(*braid.witness) + ")");
  if (!p.is_nondegenerate()) throw Error("rack solution is degenerate");
  return p;
}

DerivedSolution solution_to_rack(const BraidedPair& p) {
  if (!p.is_nondegenerate()) throw DegenerateInput("derived map needs a non-degenerate pair");
  const Coalgebra& x = p.coalgebra();
  const Field& F = x.field();
  const long n = x.dim();
  LinMap id = LinMap::identity(F, n);
  LinMap c = LinMap::flip(F, n, n);

  LinMap s = compose_all({tensor(p.tau(), id), tensor(id, x.delta()), c,
                          tensor(id, p.sigma()), tensor_all({id, p.tau_inv(), id}),
                          tensor(x.delta(), x.delta())});

  LinMap tri = compose(tensor(id, x.counit()), s);
  if (s != compose_all({tensor(tri, id), tensor(id, c), tensor(x.delta(), id)}))
    throw Error("derived map is not of rack type");

  Rack rack = Rack::make(x, tri);
  BraidedPair derived(x, s);
  BraidVerdict braid = check_braid(derived);
  if (!braid.pass) throw Error("derived solution fails the braid equation");
  if (!derived.is_nondegenerate()) throw Error("derived solution is degenerate");

  return DerivedSolution{std::move(s), std::move(rack), compose(c, derived.r()).is_identity()};
}

GuitarTower guitar(const BraidedPair& p, long n, std::optional<long> cap) {
  if (n < 2) throw DimensionMismatch("guitar tower needs n >= 2");
  if (!p.is_nondegenerate()) throw DegenerateInput("guitar tower needs a non-degenerate pair");
  const Coalgebra& x = p.coalgebra();
  const Field& F = x.field();
  const long d = x.dim();
  pow_checked(d, n, resolve_cap(cap));

  auto idp = [&](long k) {
    long dim = 1;
    for (long i = 0; i < k; ++i) dim *= d;
    return LinMap::identity(F, dim);
  };
  auto cflip = [&](long a, long b) {  // c_{X^a, X^b}
    long da = 1, db = 1;
    for (long i = 0; i < a; ++i) da *= d;
    for (long i = 0; i < b; ++i) db *= d;
    return LinMap::flip(F, da, db);
  };

  GuitarTower t;
  t.n_ = n;
  LinMap id = idp(1);
  LinMap alpha2 = compose(tensor(p.tau(), id), tensor(id, x.delta()));
  LinMap alpha2_inv = compose(tensor(p.tau_inv(), id), tensor(id, x.delta()));
  t.alpha_.push_back(alpha2);
  t.q_.push_back(alpha2);
  t.j_.push_back(id);      // J_1
  t.j_inv_.push_back(id);
  t.j_.push_back(alpha2);  // J_2 = (X (x) J_1) o alpha_2
  t.j_inv_.push_back(alpha2_inv);

  std::vector<LinMap> alpha_inv{alpha2_inv};
  for (long k = 3; k <= n; ++k) {
    const LinMap& alpha_prev = t.alpha_[k - 3];
    const LinMap& q_prev = t.q_[k - 3];
    // alpha_k = (tau (x) X^{k-1}) o (X (x) c_{k-2,1} (x) X) o (alpha_{k-1} (x) Delta)
    LinMap alpha_k =
        compose_all({tensor(p.tau(), idp(k - 1)), tensor_all({id, cflip(k - 2, 1), id}),
                     tensor(alpha_prev, x.delta())});
    LinMap q_k = compose_all({tensor(p.tau(), q_prev),
                              tensor_all({id, cflip(k - 2, 1), id}),
                              tensor(idp(k - 1), x.delta())});
    // Alternative recursions (also yield the constructive inverse).
    LinMap alpha_alt =
        compose_all({tensor(id, cflip(1, k - 2)), tensor(alpha2, idp(k - 2)),
                     tensor(id, cflip(k - 2, 1)), tensor(alpha_prev, id)});
    LinMap q_alt = compose_all({tensor(id, q_prev), tensor(id, cflip(1, k - 2)),
                                tensor(alpha2, idp(k - 2)), tensor(id, cflip(k - 2, 1))});
    if (alpha_k != alpha_alt || q_k != q_alt)
      throw Error("guitar recursions disagree at level " + std::to_string(k));

    LinMap alpha_k_inv =
        compose_all({tensor(alpha_inv.back(), id), tensor(id, cflip(1, k - 2)),
                     tensor(alpha2_inv, idp(k - 2)), tensor(id, cflip(k - 2, 1))});
    if (!compose(alpha_k_inv, alpha_k).is_identity())
      throw Error("alpha tower inverse fails at level " + std::to_string(k));
    alpha_inv.push_back(alpha_k_inv);

    LinMap j_k = compose(tensor(id, t.j_[k - 2]), alpha_k);
    // J_k = Q_k o (J_{k-1} (x) X)
    if (j_k != compose(q_k, tensor(t.j_[k - 2], id)))
      throw Error("J_n = Q_n o (J_{n-1} (x) X) fails at level " + std::to_string(k));
    LinMap j_k_inv = compose(alpha_k_inv, tensor(id, t.j_inv_[k - 2]));
    if (!compose(j_k_inv, j_k).is_identity() || !compose(j_k, j_k_inv).is_identity())
      throw Error("J tower inverse fails at level " + std::to_string(k));

    t.alpha_.push_back(std::move(alpha_k));
    t.q_.push_back(std::move(q_k));
    t.j_.push_back(std::move(j_k));
    t.j_inv_.push_back(std::move(j_k_inv));
  }
  if (!compose(t.j_inv_[1], t.j_[1]).is_identity())
    throw Error("J_2 inverse fails");
  return t;
}

LinMap leg_pair_map(const LinMap& r, long dim, long n, long i) {
  if (i < 1 || i >= n) throw DimensionMismatch("leg index out of range");
  const Field& F = r.field();
  long before = 1, after = 1;
  for (long k = 0; k < i - 1; ++k) before *= dim;
  for (long k = 0; k < n - i - 1; ++k) after *= dim;
  return tensor_all({LinMap::identity(F, before), r, LinMap::identity(F, after)});
}

bool check_intertwining(const BraidedPair& p, long n, std::optional<long> cap,
                        int threads) {
  if (n < 2) throw DimensionMismatch("check_intertwining needs n >= 2");
  pow_checked(p.dim(), n, resolve_cap(cap));
  DerivedSolution der = solution_to_rack(p);
  GuitarTower t = guitar(p, n, cap);
  const long d = p.dim();
  auto check_leg = [&](long i) {
    LinMap ri = leg_pair_map(p.r(), d, n, i);
    LinMap si = leg_pair_map(der.s, d, n, i);
    if (compose(t.j(n), ri) != compose(si, t.j(n))) return false;
    if (i > 1 && compose(t.alpha(n), ri) != compose(ri, t.alpha(n))) return false;
    return true;
  };
  if (threads <= 1) {
    for (long i = 1; i < n; ++i)
      if (!check_leg(i)) return false;
    return true;
  }
  std::vector<std::future<bool>> legs;
  for (long i = 1; i < n; ++i)
    legs.push_back(std::async(std::launch::async, check_leg, i));
  bool ok = true;
  for (auto& leg : legs) ok = leg.get() && ok;
  return ok;
}

std::vector<LinMap> braid_rep(const BraidedPair& p, long n, std::optional<long> cap) {
  if (n < 2) throw DimensionMismatch("braid_rep needs n >= 2");
  pow_checked(p.dim(), n, resolve_cap(cap));
  BraidVerdict braid = check_braid(p);
  if (!braid.pass) throw Error("braid_rep needs a braided pair");

  std::vector<LinMap> gens;
  for (long i = 1; i < n; ++i) gens.push_back(leg_pair_map(p.r(), p.dim(), n, i));

  for (long i = 0; i + 1 < static_cast<long>(gens.size()); ++i)
    if (compose_all({gens[i], gens[i + 1], gens[i]}) !=
        compose_all({gens[i + 1], gens[i], gens[i + 1]}))
      throw Error("braid relation fails at generator " + std::to_string(i + 1));
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 2; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i]))
        throw Error("distant generators do not commute");
  if (check_involutive(p))
    for (const auto& g : gens)
      if (!compose(g, g).is_identity())
        throw Error("involutive pair gives non-involutive generator");
  return gens;
}

}  // namespace ybx
