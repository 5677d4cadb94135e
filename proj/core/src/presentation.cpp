#include "ybx/presentation.hpp"

namespace ybx {

Presentation emit_presentation(const BraidedPair& p) {
  const Coalgebra& x = p.coalgebra();
  const long n = x.dim();

  for (long i = 0; i < n; ++i) {
    const auto& col = x.delta().column(i);
    if (col.size() != 1 || col[0].first != i * n + i || !col[0].second.is_one())
      throw NotSetTheoretic("basis vector " + std::to_string(i) +
                            " is not group-like");
    if (!x.counit().at(0, i).is_one())
      throw NotSetTheoretic("counit of basis vector " + std::to_string(i) +
                            " is not 1");
  }

  std::vector<bool> hit(n * n, false);
  Presentation out;
  out.generators = x.labels();
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const auto& col = p.r().column(i * n + j);
      if (col.size() != 1 || !col[0].second.is_one())
        throw NotSetTheoretic("r is not a permutation of basis pairs");
      long img = col[0].first;
      if (hit[img]) throw NotSetTheoretic("r is not a permutation of basis pairs");
      hit[img] = true;
      long s = img / n, t = img % n;
      out.relations.push_back({{x.labels()[i], x.labels()[j]},
                               {x.labels()[s], x.labels()[t]}});
    }
  return out;
}

}  // namespace ybx
