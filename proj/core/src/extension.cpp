#include "ybx/extension.hpp"

namespace ybx {

namespace {

// Embedding of X into the a-th block of Z (a = 0 for X, 1 for SX).
LinMap block_embedding(const Field& f, long n, int a) {
  LinMap e(f, n, 2 * n);
  Scalar one = Scalar::one(f);
  for (long i = 0; i < n; ++i) e.set(a * n + i, i, one);
  return e;
}

}  // namespace

DoubledSolution extend(const BraidedPair& p) {
  if (!p.is_nondegenerate()) throw DegenerateInput("extend needs a non-degenerate pair");
  const Field& F = p.field();
  const long n = p.dim();
  const Coalgebra& x = p.coalgebra();
  LinMap c = LinMap::flip(F, n, n);

  Transpositions t = transpositions(p);
  LinMap r_tilde = compose_all({c, p.r_inv(), c});

  // Z = X (+) SX with the block-diagonal coalgebra structure.
  const long zn = 2 * n;
  LinMap delta_z(F, zn, zn * zn);
  LinMap counit_z(F, zn, 1);
  for (long j = 0; j < n; ++j) {
    for (const auto& [row, v] : x.delta().column(j)) {
      long a = row / n, b = row % n;
      delta_z.set(a * zn + b, j, v);
      delta_z.set((n + a) * zn + (n + b), n + j, v);
    }
    Scalar e = x.counit().at(0, j);
    if (!e.is_zero()) {
      counit_z.set(0, j, e);
      counit_z.set(0, n + j, e);
    }
  }
  std::vector<std::string> labels = x.labels();
  for (const auto& l : x.labels()) labels.push_back(l + "~S");
  Coalgebra z(std::move(delta_z), std::move(counit_z), std::move(labels));

  LinMap swap(F, zn, zn);
  Scalar one = Scalar::one(F);
  for (long i = 0; i < n; ++i) {
    swap.set(n + i, i, one);
    swap.set(i, n + i, one);
  }

  // Per-block maps expressed on X (x) X; the S legs are block relabelings.
  const LinMap* blocks[2][2];
  LinMap b12 = compose(c, t.rt1);
  LinMap b21 = compose(c, t.rt2);
  blocks[0][0] = &p.r();
  blocks[0][1] = &b12;
  blocks[1][0] = &b21;
  blocks[1][1] = &r_tilde;
  // Output block of each input block: r_2 lands in SX (x) X, r_3 in X (x) SX.
  const int out_a[2][2] = {{0, 1}, {0, 1}};
  const int out_b[2][2] = {{0, 0}, {1, 1}};

  LinMap r_e(F, zn * zn, zn * zn);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const LinMap& blk = *blocks[a][b];
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
          long col = (a * n + i) * zn + (b * n + j);
          for (const auto& [row, v] : blk.column(i * n + j)) {
            long k = row / n, l = row % n;
            r_e.set((out_a[a][b] * n + k) * zn + (out_b[a][b] * n + l), col, v);
          }
        }
    }

  BraidedPair doubled(z, r_e);

  // Cross-check the blocks through the leg embeddings.
  LinMap ix = block_embedding(F, n, 0);
  LinMap is = block_embedding(F, n, 1);
  if (compose(doubled.r(), tensor(ix, ix)) != compose(tensor(ix, ix), p.r()) ||
      compose(doubled.r(), tensor(ix, is)) != compose(tensor(is, ix), b12) ||
      compose(doubled.r(), tensor(is, ix)) != compose(tensor(ix, is), b21) ||
      compose(doubled.r(), tensor(is, is)) != compose(tensor(is, is), r_tilde))
    throw Error("r_e disagrees with its defining blocks");

  BraidVerdict braid = check_braid(doubled);
  if (!braid.pass)
    throw BraidFailure("doubled solution fails the braid equation (witness " +
                       std::to_string(*braid.witness) + ")");
  if (!doubled.is_nondegenerate())
    throw BraidFailure("doubled solution is degenerate");

  return DoubledSolution{p,
                         doubled.coalgebra(),
                         std::move(swap),
                         std::move(doubled),
                         std::move(t.rt1),
                         std::move(t.rt2),
                         std::move(r_tilde)};
}

VerificationReport check_mixed_braid_lemmas(const DoubledSolution& d) {
  const BraidedPair& p = d.base;
  const Field& F = p.field();
  const long n = p.dim();
  const Coalgebra& x = p.coalgebra();
  LinMap id = LinMap::identity(F, n);
  LinMap c = LinMap::flip(F, n, n);
  LinMap crt1 = compose(c, d.rt1);
  LinMap crt2 = compose(c, d.rt2);
  const LinMap& r = p.r();

  VerificationReport rep;
  auto add_eq = [&rep](const std::string& name, const LinMap& a, const LinMap& b) {
    auto w = first_difference(a, b);
    rep.add(name, !w.has_value(), w);
  };

  add_eq("xxsx-left", compose_all({tensor(id, r), tensor(crt1, id), tensor(id, crt1)}),
         compose_all({tensor(crt1, id), tensor(id, crt1), tensor(r, id)}));
  add_eq("xxsx-right",
         compose_all({tensor(r, id), tensor(id, crt2), tensor(crt2, id)}),
         compose_all({tensor(id, crt2), tensor(crt2, id), tensor(id, r)}));
  add_eq("xsxx", compose_all({tensor(crt2, id), tensor(id, r), tensor(crt1, id)}),
         compose_all({tensor(id, crt1), tensor(r, id), tensor(id, crt2)}));

  BraidVerdict tb = check_braid(x, d.r_tilde);
  rep.add("tilde-braid", tb.pass, tb.witness);
  NondegeneracyResult tn = check_nondegenerate(x, d.r_tilde);
  rep.add("tilde-non-degenerate", tn.nondegenerate);
  if (tn.nondegenerate) {
    BraidedPair tp(x, d.r_tilde);
    Transpositions tt = transpositions(tp);
    add_eq("tilde-rt1-equals-rt2", tt.rt1, d.rt2);
    add_eq("tilde-rt2-equals-rt1", tt.rt2, d.rt1);
  }

  // (X^2 (x) eps) o (X (x) rt~) o (Delta (x) X) o c o r = (tau (x) X) o (X (x) Delta)
  LinMap eps = x.counit();
  add_eq("tilde-tau-composite",
         compose_all({tensor_all({id, id, eps}), tensor(id, d.r_tilde),
                      tensor(x.delta(), id), c, r}),
         compose(tensor(p.tau(), id), tensor(id, x.delta())));
  add_eq("tilde-sigma-composite",
         compose_all({tensor_all({eps, id, id}), tensor(d.r_tilde, id),
                      tensor(id, x.delta()), c, r}),
         compose(tensor(id, p.sigma()), tensor(x.delta(), id)));
  return rep;
}

}  // namespace ybx
