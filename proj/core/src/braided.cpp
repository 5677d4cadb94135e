#include "ybx/braided.hpp"

#include <mutex>

namespace ybx {

namespace {

void require_square_on_x2(const Coalgebra& x, const LinMap& r) {
  long n2 = x.dim() * x.dim();
  if (r.dom() != n2 || r.cod() != n2)
    throw DimensionMismatch("r must be an endomorphism of X^2");
  if (r.field() != x.field()) throw FieldMismatch("r and X over different fields");
}

}  // namespace

LinMap sigma_of(const Coalgebra& x, const LinMap& r) {
  require_square_on_x2(x, r);
  return compose(tensor(LinMap::identity(x.field(), x.dim()), x.counit()), r);
}

LinMap tau_of(const Coalgebra& x, const LinMap& r) {
  require_square_on_x2(x, r);
  return compose(tensor(x.counit(), LinMap::identity(x.field(), x.dim())), r);
}

BraidVerdict check_braid(const Coalgebra& x, const LinMap& r) {
  require_square_on_x2(x, r);
  LinMap id = LinMap::identity(x.field(), x.dim());
  LinMap r12 = tensor(r, id);
  LinMap r23 = tensor(id, r);
  LinMap lhs = compose_all({r12, r23, r12});
  LinMap rhs = compose_all({r23, r12, r23});
  auto w = first_difference(lhs, rhs);
  return {!w.has_value(), w};
}

BraidVerdict check_braid_via_coordinates(const Coalgebra& x, const LinMap& r) {
  const Field& F = x.field();
  LinMap id = LinMap::identity(F, x.dim());
  LinMap sigma = sigma_of(x, r);
  LinMap tau = tau_of(x, r);
  LinMap r12 = tensor(r, id);
  LinMap r23 = tensor(id, r);
  LinMap tau1 = compose(tau, tensor(tau, id));    // tau o (tau (x) X)
  LinMap sig1 = compose(sigma, tensor(id, sigma));  // sigma o (X (x) sigma)
  if (auto w = first_difference(tau1, compose(tau1, r23))) return {false, w};
  if (auto w = first_difference(sig1, compose(sig1, r12))) return {false, w};
  LinMap link_l = compose_all({tau, tensor(id, sigma), r12});
  LinMap link_r = compose_all({sigma, tensor(tau, id), r23});
  if (auto w = first_difference(link_l, link_r)) return {false, w};
  return {true, std::nullopt};
}

bool check_involutive(const LinMap& r) {
  if (r.dom() != r.cod()) throw DimensionMismatch("involutivity of non-square map");
  return compose(r, r).is_identity();
}

NondegeneracyResult check_nondegenerate(const Coalgebra& x, const LinMap& r) {
  const Field& F = x.field();
  const long n = x.dim();
  LinMap id = LinMap::identity(F, n);
  LinMap sigma = sigma_of(x, r);
  LinMap tau = tau_of(x, r);
  LinMap m1 = compose(tensor(id, sigma), tensor(x.delta(), id));
  LinMap m2 = compose(tensor(tau, id), tensor(id, x.delta()));

  LinMap m1_inv(F, 1, 1), m2_inv(F, 1, 1);
  try {
    m1_inv = invert(m1);
    m2_inv = invert(m2);
  } catch (const SingularMap&) {
    return {};
  }

  // sigma^{-1} and tau^{-1} are coordinate maps of the inverses.
  LinMap sigma_inv = compose(tensor(x.counit(), id), m1_inv);
  LinMap tau_inv = compose(tensor(id, x.counit()), m2_inv);

  LinMap eps_x = tensor(x.counit(), id);
  LinMap x_eps = tensor(id, x.counit());
  LinMap dl = tensor(x.delta(), id);
  LinMap dr = tensor(id, x.delta());
  if (compose_all({sigma_inv, tensor(id, sigma), dl}) != eps_x ||
      compose_all({sigma, tensor(id, sigma_inv), dl}) != eps_x)
    throw Error("extracted sigma^{-1} fails its defining equations");
  if (compose_all({tau_inv, tensor(tau, id), dr}) != x_eps ||
      compose_all({tau, tensor(tau_inv, id), dr}) != x_eps)
    throw Error("extracted tau^{-1} fails its defining equations");

  Coalgebra x2 = tensor_coalgebra(x, x);
  if (!is_coalgebra_morphism(sigma_inv, x2, x) || !is_coalgebra_morphism(tau_inv, x2, x))
    throw Error("inverse coordinate maps are not coalgebra morphisms");

  NondegeneracyResult out;
  out.nondegenerate = true;
  out.sigma_inv = std::move(sigma_inv);
  out.tau_inv = std::move(tau_inv);
  return out;
}

struct BraidedPair::Cache {
  std::mutex mu;
  std::optional<LinMap> r_inv;
  std::optional<NondegeneracyResult> nondeg;
};

BraidedPair::BraidedPair(Coalgebra x, LinMap r)
    : x_(std::move(x)),
      r_(std::move(r)),
      sigma_(sigma_of(x_, r_)),
      tau_(tau_of(x_, r_)),
      cache_(std::make_shared<Cache>()) {
  Coalgebra x2 = tensor_coalgebra(x_, x_);
  long w = -1;
  if (!is_coalgebra_morphism(r_, x2, x2, &w))
    throw Error("r is not a coalgebra endomorphism of X^2 (witness index " +
                std::to_string(w) + ")");
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    try {
      cache_->r_inv = invert(r_);
    } catch (const SingularMap&) {
      throw Error("r is not invertible");
    }
  }

  // Compatibility of the coordinate maps with the comultiplication.
  const Field& F = x_.field();
  const long n = x_.dim();
  LinMap id = LinMap::identity(F, n);
  LinMap c = LinMap::flip(F, n, n);
  const LinMap& d2 = x2.delta();
  if (compose(tensor(r_, tau_), d2) != compose(tensor(id, x_.delta()), r_) ||
      compose(tensor(tau_, r_), d2) !=
          compose_all({tensor(c, id), tensor(id, x_.delta()), r_}) ||
      compose(tensor(sigma_, r_), d2) != compose(tensor(x_.delta(), id), r_) ||
      compose(tensor(r_, sigma_), d2) !=
          compose_all({tensor(id, c), tensor(x_.delta(), id), r_}))
    throw Error("coordinate maps of r are incompatible with the comultiplication");
}

const LinMap& BraidedPair::r_inv() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return *cache_->r_inv;  // always populated by the constructor
}

bool BraidedPair::is_nondegenerate() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->nondeg) cache_->nondeg = check_nondegenerate(x_, r_);
  return cache_->nondeg->nondegenerate;
}

const LinMap& BraidedPair::sigma_inv() const {
  if (!is_nondegenerate()) throw DegenerateInput("pair is degenerate");
  std::lock_guard<std::mutex> lock(cache_->mu);
  return *cache_->nondeg->sigma_inv;
}

const LinMap& BraidedPair::tau_inv() const {
  if (!is_nondegenerate()) throw DegenerateInput("pair is degenerate");
  std::lock_guard<std::mutex> lock(cache_->mu);
  return *cache_->nondeg->tau_inv;
}

BraidVerdict check_braid(const BraidedPair& p) {
  return check_braid(p.coalgebra(), p.r());
}

bool check_involutive(const BraidedPair& p) { return check_involutive(p.r()); }

LinMap r_matrix(const BraidedPair& p) {
  const Field& F = p.field();
  const long n = p.dim();
  LinMap c = LinMap::flip(F, n, n);
  LinMap r_mat = compose(c, p.r());
  Coalgebra x2 = tensor_coalgebra(p.coalgebra(), p.coalgebra());
  if (r_mat != compose(tensor(p.tau(), p.sigma()), x2.delta()))
    throw Error("R != (tau (x) sigma) o Delta_{X^2}");
  return r_mat;
}

bool check_qybe(const BraidedPair& p) {
  const Field& F = p.field();
  const long n = p.dim();
  LinMap id = LinMap::identity(F, n);
  LinMap r_mat = r_matrix(p);
  LinMap r12 = tensor(r_mat, id);
  LinMap r23 = tensor(id, r_mat);
  LinMap mid = tensor(id, LinMap::flip(F, n, n));
  LinMap r13 = compose_all({mid, r12, mid});
  return compose_all({r12, r13, r23}) == compose_all({r23, r13, r12});
}

bool check_unitary(const BraidedPair& p) {
  const Field& F = p.field();
  const long n = p.dim();
  LinMap c = LinMap::flip(F, n, n);
  LinMap r_mat = compose(c, p.r());
  LinMap r21 = compose_all({c, r_mat, c});
  return compose(r21, r_mat).is_identity();
}

Transpositions transpositions(const BraidedPair& p) {
  if (!p.is_nondegenerate()) throw DegenerateInput("transpositions need a non-degenerate pair");
  const Field& F = p.field();
  const long n = p.dim();
  LinMap id = LinMap::identity(F, n);
  LinMap c = LinMap::flip(F, n, n);
  const Coalgebra& x = p.coalgebra();

  LinMap m1 = compose(tensor(id, p.sigma()), tensor(x.delta(), id));
  LinMap m2 = compose(tensor(p.tau(), id), tensor(id, x.delta()));
  LinMap m1_inv = compose(tensor(id, p.sigma_inv()), tensor(x.delta(), id));
  LinMap m2_inv = compose(tensor(p.tau_inv(), id), tensor(id, x.delta()));

  Transpositions t{compose(m1, m2_inv), compose(m2, m1_inv),
                   compose_all({c, m2, m1_inv, c}), compose_all({c, m1, m2_inv, c})};

  // Defining equations, checked literally.
  LinMap n1 = compose_all({tensor(p.sigma(), id), tensor(id, c), tensor(x.delta(), id)});
  LinMap n2 = compose_all({tensor(id, p.tau()), tensor(c, id), tensor(id, x.delta())});
  if (compose(t.rt1, m2) != m1 || compose(t.rt2, m1) != m2 ||
      compose(t.r21t1, n1) != n2 || compose(t.r21t2, n2) != n1)
    throw Error("transpositions fail their defining equations");

  if (!compose(t.rt1, t.rt2).is_identity() || !compose(t.rt2, t.rt1).is_identity() ||
      !compose(t.r21t1, t.r21t2).is_identity() ||
      !compose(t.r21t2, t.r21t1).is_identity())
    throw Error("transpositions are not mutually inverse");
  return t;
}

VerificationReport verify_pair(const Coalgebra& x, const LinMap& r) {
  VerificationReport rep;
  VerificationReport coalg = check_coalgebra(x);
  for (const auto& c : coalg.checks()) rep.add("coalgebra-" + c.name, c.pass, c.witness);

  require_square_on_x2(x, r);
  Coalgebra x2 = tensor_coalgebra(x, x);
  long w = -1;
  bool morph = is_coalgebra_morphism(r, x2, x2, &w);
  bool invertible = true;
  try {
    invert(r);
  } catch (const SingularMap&) {
    invertible = false;
  }
  rep.add("coalgebra-automorphism", morph && invertible,
          morph ? std::nullopt : std::optional<long>(w),
          invertible ? "" : "r is singular");

  BraidVerdict braid = check_braid(x, r);
  rep.add("braid", braid.pass, braid.witness);
  rep.add("involutive", check_involutive(r));

  NondegeneracyResult nd = check_nondegenerate(x, r);
  rep.add("non-degenerate", nd.nondegenerate);

  if (morph && invertible) {
    BraidedPair p(x, r);
    rep.add("qybe", check_qybe(p));
    rep.add("unitary", check_unitary(p));
  } else {
    rep.add("qybe", false, std::nullopt, "skipped: r is not a coalgebra automorphism");
    rep.add("unitary", false, std::nullopt, "skipped: r is not a coalgebra automorphism");
  }
  return rep;
}

}  // namespace ybx
