#ifndef YBX_PRESENTATION_HPP
#define YBX_PRESENTATION_HPP

/**
 * @file presentation.hpp
 * @brief Structure-monoid presentation of a set-theoretic solution: one
 * relation x y = sigma(x,y) tau(x,y) per ordered basis pair.
 */

#include <string>
#include <utility>
#include <vector>

#include "ybx/braided.hpp"

namespace ybx {

struct Presentation {
  std::vector<std::string> generators;
  // Each relation is lhs-word = rhs-word over the generator labels.
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> relations;
};

/// Requires a set-like coalgebra (every basis vector group-like) and r a
/// permutation of basis pairs; throws NotSetTheoretic otherwise.
/// Relations are emitted in lexicographic pair order.
Presentation emit_presentation(const BraidedPair& p);

}  // namespace ybx

#endif
