#include "ybx/hopf.hpp"

namespace ybx {

namespace {

void add_eq(VerificationReport& rep, const std::string& name, const LinMap& a,
            const LinMap& b) {
  auto w = first_difference(a, b);
  rep.add(name, !w.has_value(), w);
}

}  // namespace

HopfAlgebra::HopfAlgebra(Coalgebra c, LinMap m, LinMap unit, LinMap antipode)
    : c_(std::move(c)), m_(std::move(m)), unit_(std::move(unit)),
      antipode_(std::move(antipode)) {
  long n = c_.dim();
  if (m_.dom() != n * n || m_.cod() != n)
    throw DimensionMismatch("m must map A^2 to A");
  if (unit_.dom() != 1 || unit_.cod() != n)
    throw DimensionMismatch("unit must map k to A");
  if (antipode_.dom() != n || antipode_.cod() != n)
    throw DimensionMismatch("antipode must be an endomorphism of A");
  if (m_.field() != c_.field() || unit_.field() != c_.field() ||
      antipode_.field() != c_.field())
    throw FieldMismatch("Hopf structure maps over different fields");
}

VerificationReport check_hopf(const HopfAlgebra& h) {
  const Field& F = h.field();
  const long n = h.dim();
  LinMap id = LinMap::identity(F, n);
  LinMap c = LinMap::flip(F, n, n);
  const LinMap& m = h.m();
  const LinMap& eta = h.unit();
  const LinMap& s = h.antipode();
  const LinMap& delta = h.coalgebra().delta();
  const LinMap& eps = h.coalgebra().counit();

  VerificationReport rep;
  VerificationReport coalg = check_coalgebra(h.coalgebra());
  for (const auto& chk : coalg.checks()) rep.add(chk.name, chk.pass, chk.witness);

  add_eq(rep, "associativity", compose(m, tensor(m, id)), compose(m, tensor(id, m)));
  add_eq(rep, "unit-left", compose(m, tensor(eta, id)), id);
  add_eq(rep, "unit-right", compose(m, tensor(id, eta)), id);
  Coalgebra a2 = tensor_coalgebra(h.coalgebra(), h.coalgebra());
  add_eq(rep, "delta-multiplicative", compose(delta, m),
         compose(tensor(m, m), a2.delta()));
  add_eq(rep, "counit-multiplicative", compose(eps, m), tensor(eps, eps));
  add_eq(rep, "delta-unit", compose(delta, eta), tensor(eta, eta));
  add_eq(rep, "counit-unit", compose(eps, eta), LinMap::identity(F, 1));
  LinMap eta_eps = compose(eta, eps);
  add_eq(rep, "antipode-left", compose_all({m, tensor(s, id), delta}), eta_eps);
  add_eq(rep, "antipode-right", compose_all({m, tensor(id, s), delta}), eta_eps);
  return rep;
}

HopfAlgebra group_algebra(const Field& f, const std::vector<std::vector<int>>& cayley,
                          std::vector<std::string> labels) {
  int id_elem = validate_group_table(cayley);
  Coalgebra c = make_group_coalgebra(f, cayley, std::move(labels));
  const long n = c.dim();
  LinMap m(f, n * n, n);
  Scalar one = Scalar::one(f);
  for (long g = 0; g < n; ++g)
    for (long h = 0; h < n; ++h) m.set(cayley[g][h], g * n + h, one);
  LinMap unit(f, 1, n);
  unit.set(id_elem, 0, one);
  LinMap antipode(f, n, n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (cayley[g][h] == id_elem && cayley[h][g] == id_elem) {
        antipode.set(h, g, one);
        break;
      }
  return HopfAlgebra(std::move(c), std::move(m), std::move(unit), std::move(antipode));
}

Brace::Brace(Coalgebra c, LinMap m, LinMap unit, LinMap antipode, LinMap m_circ,
             LinMap unit_circ, LinMap antipode_circ)
    : c_(std::move(c)), m_(std::move(m)), unit_(std::move(unit)),
      antipode_(std::move(antipode)), m_circ_(std::move(m_circ)),
      unit_circ_(std::move(unit_circ)), antipode_circ_(std::move(antipode_circ)),
      lambda_(LinMap(c_.field(), 1, 1)) {
  HopfAlgebra(c_, m_, unit_, antipode_);          // dimension checks
  HopfAlgebra(c_, m_circ_, unit_circ_, antipode_circ_);
  LinMap id = LinMap::identity(c_.field(), c_.dim());
  lambda_ = compose_all({m_, tensor(antipode_, m_circ_), tensor(c_.delta(), id)});
}

HopfAlgebra Brace::first() const { return HopfAlgebra(c_, m_, unit_, antipode_); }
HopfAlgebra Brace::second() const {
  return HopfAlgebra(c_, m_circ_, unit_circ_, antipode_circ_);
}

LinMap Brace::rho() const {
  LinMap id = LinMap::identity(c_.field(), c_.dim());
  Coalgebra a2 = tensor_coalgebra(c_, c_);
  return compose_all({m_circ_, tensor(antipode_circ_, id), tensor(lambda_, m_circ_),
                      a2.delta()});
}

VerificationReport check_brace(const Brace& b) {
  const Field& F = b.field();
  const long n = b.dim();
  LinMap id = LinMap::identity(F, n);
  LinMap c = LinMap::flip(F, n, n);
  const Coalgebra& a = b.coalgebra();
  Coalgebra a2 = tensor_coalgebra(a, a);
  const LinMap& delta = a.delta();
  const LinMap& eps = a.counit();
  const LinMap& m = b.m();
  const LinMap& mo = b.m_circ();
  const LinMap& t = b.antipode_circ();
  const LinMap& lam = b.lambda();
  LinMap rho = b.rho();

  VerificationReport rep;
  VerificationReport first = check_hopf(b.first());
  for (const auto& chk : first.checks())
    rep.add("first." + chk.name, chk.pass, chk.witness);
  VerificationReport second = check_hopf(b.second());
  for (const auto& chk : second.checks())
    rep.add("second." + chk.name, chk.pass, chk.witness);
  add_eq(rep, "units-coincide", b.unit(), b.unit_circ());

  // m_circ o (A (x) m) = m o (m_circ (x) lambda) o (A (x) c (x) A) o (Delta (x) A^2)
  add_eq(rep, "brace-compatibility", compose(mo, tensor(id, m)),
         compose_all({m, tensor(mo, lam), tensor_all({id, c, id}),
                      tensor_all({delta, id, id})}));

  add_eq(rep, "lambda-unital", compose(lam, tensor(b.unit_circ(), id)), id);
  add_eq(rep, "lambda-action", compose(lam, tensor(mo, id)),
         compose(lam, tensor(id, lam)));
  add_eq(rep, "lambda-module-algebra-unit", compose(lam, tensor(id, b.unit())),
         tensor(eps, b.unit()));
  add_eq(rep, "lambda-module-algebra-mult", compose(lam, tensor(id, m)),
         compose_all({m, tensor(lam, lam), tensor_all({id, c, id}),
                      tensor_all({delta, id, id})}));
  add_eq(rep, "lambda-module-coalgebra", compose(delta, lam),
         compose(tensor(lam, lam), a2.delta()));
  add_eq(rep, "lambda-counit", compose(eps, lam), tensor(eps, eps));

  add_eq(rep, "rho-unital", compose(rho, tensor(id, b.unit_circ())), id);
  add_eq(rep, "rho-action", compose(rho, tensor(id, mo)),
         compose(rho, tensor(rho, id)));
  add_eq(rep, "rho-unit-left", compose(rho, tensor(b.unit(), id)),
         compose(b.unit(), eps));
  {
    long w = -1;
    bool ok = is_coalgebra_morphism(rho, a2, a, &w);
    rep.add("rho-coalgebra-morphism", ok,
            ok ? std::nullopt : std::optional<long>(w));
  }

  // Both antipode identities of rho.
  LinMap tmt = compose_all({t, m, tensor(t, id)});
  add_eq(rep, "rho-antipode-1", compose_all({mo, tensor(rho, t), tensor(id, delta)}),
         tmt);
  add_eq(rep, "rho-antipode-2",
         compose_all({mo, tensor(t, id), tensor(lam, id), tensor(id, c),
                      tensor(delta, id)}),
         tmt);

  add_eq(rep, "circle-product-reconstruction", mo,
         compose_all({m, tensor(id, lam), tensor(delta, id)}));
  add_eq(rep, "dot-product-reconstruction", m,
         compose_all({mo, tensor(id, lam), tensor_all({id, t, id}),
                      tensor(delta, id)}));
  return rep;
}

Brace trivial_brace(const HopfAlgebra& h) {
  return Brace(h.coalgebra(), h.m(), h.unit(), h.antipode(), h.m(), h.unit(),
               h.antipode());
}

VerificationReport check_operator(const BraidingOperator& o) {
  const Field& F = o.hopf.field();
  const long n = o.hopf.dim();
  LinMap id = LinMap::identity(F, n);
  const LinMap& m = o.hopf.m();
  const LinMap& eta = o.hopf.unit();
  const LinMap& r = o.r;
  const Coalgebra& a = o.hopf.coalgebra();
  Coalgebra a2 = tensor_coalgebra(a, a);

  VerificationReport rep;
  {
    long w = -1;
    bool morph = is_coalgebra_morphism(r, a2, a2, &w);
    bool inv = true;
    try {
      invert(r);
    } catch (const SingularMap&) {
      inv = false;
    }
    rep.add("coalgebra-automorphism", morph && inv,
            morph ? std::nullopt : std::optional<long>(w));
  }
  add_eq(rep, "multiplicativity", compose(m, r), m);
  add_eq(rep, "compat-left", compose(r, tensor(m, id)),
         compose_all({tensor(id, m), tensor(r, id), tensor(id, r)}));
  add_eq(rep, "compat-right", compose(r, tensor(id, m)),
         compose_all({tensor(m, id), tensor(id, r), tensor(r, id)}));
  add_eq(rep, "unit-left", compose(r, tensor(eta, id)), tensor(id, eta));
  add_eq(rep, "unit-right", compose(r, tensor(id, eta)), tensor(eta, id));

  // Matched-pair coordinate conditions.
  const LinMap& lam = o.lambda;
  const LinMap& rho = o.rho;
  LinMap eps = a.counit();
  add_eq(rep, "lambda-is-coordinate", lam, compose(tensor(id, eps), r));
  add_eq(rep, "rho-is-coordinate", rho, compose(tensor(eps, id), r));
  add_eq(rep, "lambda-unital", compose(lam, tensor(eta, id)), id);
  add_eq(rep, "lambda-action", compose(lam, tensor(m, id)),
         compose(lam, tensor(id, lam)));
  add_eq(rep, "rho-unital", compose(rho, tensor(id, eta)), id);
  add_eq(rep, "rho-action", compose(rho, tensor(id, m)),
         compose(rho, tensor(rho, id)));
  add_eq(rep, "lambda-mult", compose(lam, tensor(id, m)),
         compose_all({m, tensor(id, lam), tensor(r, id)}));
  add_eq(rep, "rho-mult", compose(rho, tensor(m, id)),
         compose_all({m, tensor(rho, id), tensor(id, r)}));
  add_eq(rep, "lambda-unit", compose(lam, tensor(id, eta)), compose(eta, eps));
  add_eq(rep, "rho-unit", compose(rho, tensor(eta, id)), compose(eta, eps));
  return rep;
}

namespace {

BraidingOperator operator_from_brace_raw(const Brace& b) {
  Coalgebra a2 = tensor_coalgebra(b.coalgebra(), b.coalgebra());
  LinMap lam = b.lambda();
  LinMap rho = b.rho();
  LinMap r = compose(tensor(lam, rho), a2.delta());
  HopfAlgebra circle(b.coalgebra(), b.m_circ(), b.unit_circ(), b.antipode_circ());
  return BraidingOperator{std::move(circle), std::move(r), std::move(lam),
                          std::move(rho)};
}

Brace brace_from_operator_raw(const BraidingOperator& o) {
  const Field& F = o.hopf.field();
  const long n = o.hopf.dim();
  LinMap id = LinMap::identity(F, n);
  const Coalgebra& a = o.hopf.coalgebra();
  const LinMap& mo = o.hopf.m();
  const LinMap& t = o.hopf.antipode();
  LinMap m = compose_all({mo, tensor(id, o.lambda), tensor_all({id, t, id}),
                          tensor(a.delta(), id)});
  LinMap s = compose_all({o.lambda, tensor(id, t), a.delta()});
  return Brace(a, std::move(m), o.hopf.unit(), std::move(s), mo, o.hopf.unit(), t);
}

}  // namespace

BraidingOperator brace_to_operator(const Brace& b) {
  VerificationReport brep = check_brace(b);
  if (!brep.all_pass()) throw BraceInvalid("input fails the brace axioms");
  BraidingOperator o = operator_from_brace_raw(b);
  if (!check_operator(o).all_pass())
    throw Error("brace produced an invalid braiding operator");
  Brace back = brace_from_operator_raw(o);
  if (!(back == b)) throw Error("brace -> operator -> brace round trip failed");
  return o;
}

Brace operator_to_brace(const BraidingOperator& o) {
  VerificationReport orep = check_operator(o);
  if (!orep.all_pass()) throw OperatorInvalid("input fails the braiding-operator axioms");
  Brace b = brace_from_operator_raw(o);
  if (!check_brace(b).all_pass())
    throw Error("operator produced an invalid brace");
  BraidingOperator back = operator_from_brace_raw(b);
  if (back.r != o.r) throw Error("operator -> brace -> operator round trip failed");
  return b;
}

VerificationReport check_cocycle(const Cocycle& k) {
  const Field& F = k.domain.field();
  const long n = k.domain.dim();
  if (k.codomain.dim() != n)
    throw DimensionMismatch("cocycle domain and codomain dimensions differ");
  LinMap id = LinMap::identity(F, n);
  LinMap c = LinMap::flip(F, n, n);
  const Coalgebra& hc = k.domain.coalgebra();
  const Coalgebra& ac = k.codomain.coalgebra();
  const LinMap& mh = k.domain.m();
  const LinMap& ma = k.codomain.m();
  const LinMap& lam = k.action;
  const LinMap& pi = k.pi;

  VerificationReport rep;
  {
    long w = -1;
    bool morph = is_coalgebra_morphism(pi, hc, ac, &w);
    bool inv = true;
    try {
      invert(pi);
    } catch (const SingularMap&) {
      inv = false;
    }
    rep.add("pi-coalgebra-isomorphism", morph && inv,
            morph ? std::nullopt : std::optional<long>(w));
  }
  add_eq(rep, "lambda-unital", compose(lam, tensor(k.domain.unit(), id)), id);
  add_eq(rep, "lambda-action", compose(lam, tensor(mh, id)),
         compose(lam, tensor(id, lam)));
  add_eq(rep, "lambda-module-algebra-unit", compose(lam, tensor(id, k.codomain.unit())),
         tensor(hc.counit(), k.codomain.unit()));
  add_eq(rep, "lambda-module-algebra-mult", compose(lam, tensor(id, ma)),
         compose_all({ma, tensor(lam, lam), tensor_all({id, c, id}),
                      tensor_all({hc.delta(), id, id})}));
  {
    Coalgebra ha = tensor_coalgebra(hc, ac);
    long w = -1;
    bool ok = is_coalgebra_morphism(lam, ha, ac, &w);
    rep.add("lambda-module-coalgebra", ok, ok ? std::nullopt : std::optional<long>(w));
  }
  add_eq(rep, "cocycle-identity", compose(pi, mh),
         compose_all({ma, tensor(pi, lam), tensor(hc.delta(), pi)}));
  add_eq(rep, "cocycle-identity-equivalent", compose(lam, tensor(id, pi)),
         compose_all({ma, tensor(k.codomain.antipode(), pi), tensor(pi, mh),
                      tensor(hc.delta(), id)}));
  return rep;
}

Cocycle brace_to_cocycle(const Brace& b) {
  VerificationReport brep = check_brace(b);
  if (!brep.all_pass()) throw BraceInvalid("input fails the brace axioms");
  Cocycle k{b.second(), b.first(), b.lambda(),
            LinMap::identity(b.field(), b.dim())};
  if (!check_cocycle(k).all_pass())
    throw Error("brace produced an invalid 1-cocycle");
  return k;
}

Brace cocycle_to_brace(const Cocycle& k) {
  VerificationReport krep = check_cocycle(k);
  if (!krep.all_pass()) throw CocycleInvalid("input fails the 1-cocycle axioms");
  const Field& F = k.codomain.field();
  const long n = k.codomain.dim();
  LinMap id = LinMap::identity(F, n);
  LinMap pi_inv = invert(k.pi);
  LinMap m_circ = compose_all({k.pi, k.domain.m(), tensor(pi_inv, pi_inv)});
  LinMap t = compose_all({k.pi, k.domain.antipode(), pi_inv});
  LinMap unit_circ = compose(k.pi, k.domain.unit());
  Brace b(k.codomain.coalgebra(), k.codomain.m(), k.codomain.unit(),
          k.codomain.antipode(), std::move(m_circ), std::move(unit_circ),
          std::move(t));
  if (!check_brace(b).all_pass())
    throw Error("cocycle produced an invalid brace");
  if (b.lambda() != compose(k.action, tensor(pi_inv, id)))
    throw Error("recovered brace action differs from the cocycle action");
  return b;
}

BraidedPair operator_as_braided_pair(const BraidingOperator& o) {
  VerificationReport orep = check_operator(o);
  if (!orep.all_pass()) throw OperatorInvalid("input fails the braiding-operator axioms");
  BraidedPair p(o.hopf.coalgebra(), o.r);
  BraidVerdict braid = check_braid(p);
  if (!braid.pass)
    throw Error("braiding operator fails the braid equation (witness " +
                std::to_string(*braid.witness) + ")");
  if (!p.is_nondegenerate()) throw Error("braiding operator is degenerate");

  const Field& F = o.hopf.field();
  const long n = o.hopf.dim();
  LinMap id = LinMap::identity(F, n);
  LinMap c = LinMap::flip(F, n, n);
  const LinMap& s = o.hopf.antipode();
  const LinMap& delta = o.hopf.coalgebra().delta();
  Transpositions t = transpositions(p);

  // The third identity is the form the first two force once S^2 = id and
  // R^{t1} inverts R^{t2}: r (S x S) = (S x S) c r^{-1} c.
  if (compose(o.r, tensor(s, id)) != compose_all({tensor(id, s), c, t.rt2}) ||
      compose(o.r, tensor(id, s)) != compose_all({tensor(s, id), c, t.rt1}) ||
      compose(o.r, tensor(s, s)) != compose_all({tensor(s, s), c, p.r_inv(), c}))
    throw Error("antipode identities fail for the braiding operator");

  // J_2 = (rho (x) A) o (A (x) Delta) and K_2 = (A (x) lambda) o (Delta (x) A).
  LinMap j2 = compose(tensor(o.rho, id), tensor(id, delta));
  LinMap k2 = compose(tensor(id, o.lambda), tensor(delta, id));
  LinMap j2_inv = compose(tensor(p.tau_inv(), id), tensor(id, delta));
  LinMap k2_inv = compose(tensor(id, p.sigma_inv()), tensor(delta, id));
  if (!compose(j2, j2_inv).is_identity() || !compose(k2, k2_inv).is_identity())
    throw Error("J_2/K_2 are not invertible for the braiding operator");
  LinMap lhs1 = compose_all({tensor(id, o.r), tensor(o.r, id),
                             tensor_all({id, s, id}), tensor(id, delta)});
  LinMap rhs1 = compose_all({tensor_all({s, id, id}), tensor(delta, id), o.r, j2_inv});
  if (lhs1 != rhs1) throw Error("first antipode/doubling identity fails");
  LinMap lhs2 = compose_all({tensor(o.r, id), tensor(id, o.r),
                             tensor_all({id, s, id}), tensor(delta, id)});
  LinMap rhs2 = compose_all({tensor_all({id, id, s}), tensor(id, delta), o.r, k2_inv});
  if (lhs2 != rhs2) throw Error("second antipode/doubling identity fails");

  return p;
}

}  // namespace ybx
