#ifndef YBX_EXTENSION_HPP
#define YBX_EXTENSION_HPP

/**
 * @file extension.hpp
 * @brief Doubling: Z = X (+) SX with the involutive swap S and the extended
 * solution r_e, which restricts blockwise to
 *   r_1 = r                                   on  X (x) X,
 *   r_2 = (S (x) X) o c o R^{t1} o (X (x) S)  on  X (x) SX,
 *   r_3 = (X (x) S) o c o R^{t2} o (S (x) X)  on  SX (x) X,
 *   r_4 = (S (x) S) o c o r^{-1} o c o (S (x) S) on SX (x) SX.
 *
 * Z's basis is the X basis followed by the SX copy (block layout
 * X = [0, n), SX = [n, 2n)), so downstream tools can dissect r_e.
 */

#include "ybx/braided.hpp"
#include "ybx/report.hpp"

namespace ybx {

// extend() found the guaranteed braid property violated; indicates a bug.
struct BraidFailure : Error {
  using Error::Error;
};

struct DoubledSolution {
  BraidedPair base;
  Coalgebra z;       // dim 2 * dim(X), labels suffixed "" and "~S"
  LinMap swap;       // the coalgebra involution S on Z
  BraidedPair doubled;  // (Z, r_e)

  // Base-solution data the mixed-braid lemma suite re-examines.
  LinMap rt1, rt2;   // transpositions of the base R
  LinMap r_tilde;    // c o r^{-1} o c
};

/// Builds (Z, r_e) from a non-degenerate braided set and re-runs the full
/// braided-set suite on it (braid + non-degeneracy are guaranteed; failure
/// throws BraidFailure).  Blockwise agreement with r_1..r_4 is asserted
/// through the leg embeddings.
DoubledSolution extend(const BraidedPair& p);

/// The mixed-leg braid lemmas on X^3: the two X(x)X(x)SX identities, the
/// X(x)SX(x)X identity, braidedness and non-degeneracy of the tilde solution
/// c o r^{-1} o c together with its transposition swap, and the two
/// composite identities relating the tilde solution back to sigma and tau.
VerificationReport check_mixed_braid_lemmas(const DoubledSolution& d);

}  // namespace ybx

#endif
