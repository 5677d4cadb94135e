#ifndef YBX_GALLERY_HPP
#define YBX_GALLERY_HPP

/**
 * @file gallery.hpp
 * @brief The standard example solutions and structures the test corpus and
 * the golden files are built from.
 */

#include "ybx/hopf.hpp"
#include "ybx/primitive.hpp"
#include "ybx/rack.hpp"

namespace ybx {
namespace gallery {

/// Set-like pair with r = c on n labels.
BraidedPair flip_pair(const Field& f, long n);

/// Set-like pair on Z/m labels with a permutation solution
/// r(e_i (x) e_j) = e_{p(j)} (x) e_{q(i)}; braided iff p and q commute.
BraidedPair permutation_pair(const Field& f, const std::vector<long>& p,
                             const std::vector<long>& q);

/// r(e_i (x) e_j) = e_{j+1} (x) e_{i-1} on Z/m (involutive).
BraidedPair cyclic_shift_pair(const Field& f, long m);

/// r(e_i (x) e_j) = e_{j+1} (x) e_{i+1} on Z/m (not involutive for m > 2).
BraidedPair cyclic_translation_pair(const Field& f, long m);

/// r(e_i (x) e_j) = e_{g(j)} (x) e_{g(i)} for an involution g (involutive).
BraidedPair involution_pair(const Field& f, const std::vector<long>& g);

/// Cayley tables.
std::vector<std::vector<int>> cyclic_table(int m);
std::vector<std::vector<int>> s3_table();
std::vector<std::string> s3_labels();

/// Conjugation rack x |> y = x y x^{-1} on the set-like coalgebra of a group.
Rack conjugation_rack(const Field& f, const std::vector<std::vector<int>>& table,
                      std::vector<std::string> labels = {});
BraidedPair conjugation_solution(const Field& f,
                                 const std::vector<std::vector<int>>& table,
                                 std::vector<std::string> labels = {});

/// d = 2 nilpotent Leibniz bracket [v1, v1] = v2 (all other brackets zero).
LinMap leibniz_bracket_d2(const Field& f);
PrimParams leibniz_params_d2(const Field& f);

/// d = 2 associative commutative product v1 * v1 = v2 (all others zero).
LinMap associative_product_d2(const Field& f);
PrimParams associative_params_d2(const Field& f);

/// d = 3 antisymmetric bracket breaking the Leibniz identity.
LinMap nonleibniz_bracket_d3(const Field& f);

/// The brace on k[Z/4] whose circle operation is a o b = a + b + 2ab
/// (additive cyclic group, circle group of Klein type).
Brace z4_klein_brace(const Field& f);

/// The conjugation braiding r(g (x) h) = g h g^{-1} (x) g on a group algebra.
BraidingOperator conjugation_operator(const Field& f,
                                      const std::vector<std::vector<int>>& table,
                                      std::vector<std::string> labels = {});

}  // namespace gallery
}  // namespace ybx

#endif
