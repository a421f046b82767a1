#ifndef LIEALG_GROUP_BRIDGE_HPP
#define LIEALG_GROUP_BRIDGE_HPP

#include "liealg/representation.hpp"

namespace liealg
{

  /// Point of the tangent bundle of a matrix group: an invertible group
  /// matrix together with an ambient tangent matrix at that point.
  struct MatrixGroupElementPair
  {
    Mat group_part;
    Mat tangent_part;
  };

  /// Matrix exponential by scaling and squaring with a truncated series.
  /// Relative accuracy is well below 1e-12 for norms up to 10.
  Mat matrix_exp(const Mat & a);

  /// Embedding of T(GL(n)) into GL(2n): (g, A) -> ( g 0 ; A g ). Block
  /// multiplication realizes the tangent-bundle group law
  /// (g1 g2, A1 g2 + g1 A2). Throws on block shape mismatch or when
  /// group_part is singular (condition number above 1e12).
  Mat j_embed(const MatrixGroupElementPair & p);

  /// Coordinates of M in the span of the representation's generator
  /// matrices, by least squares. Throws std::invalid_argument when M is not
  /// in the span (relative residual above the representation tolerance,
  /// with 1e-6 slack for finite-difference inputs).
  Vec express_in_algebra(const Representation & realization, const Mat & m);

  /// Prolonged group representation at p, realized for matrix groups as
  ///
  ///   ( Phi(g) 0 ; dPhi_g(A) Phi(g) )
  ///
  /// where Phi(exp(X)) = matrix_exp(apply(rep, X)) along the supplied
  /// factorization group_part = exp(apply(realization, factor_coords)), and
  /// dPhi_g(A) is a central difference of Phi along the group curve
  /// t -> g exp(t g^{-1} A). The difference steps along the normalized
  /// curve direction so the accuracy of `step` is scale-independent.
  Mat prolonged_group_rep(const Representation & rep, const LieAlgebra & g,
                          const MatrixGroupElementPair & p,
                          const Representation & realization, const Vec & factor_coords,
                          double step = 1e-5);

  /// Numerical check that the algebra-side prolongation is the differential
  /// at the identity of the group-side prolongation. For each sampled
  /// tangent-algebra element xi = (complete b, vertical a) it differentiates
  /// prolonged_group_rep along t -> (exp(tB), tA exp(tB)) by central
  /// differences with the given step and compares against
  /// apply(prolong_representation(rep), xi). Passes iff the max entrywise
  /// deviation is at most 100 * step^2.
  VerificationReport check_group_differential(const Representation & rep, const LieAlgebra & g,
                                             const Representation & realization, int samples,
                                             unsigned long seed, double step);

}

#endif
