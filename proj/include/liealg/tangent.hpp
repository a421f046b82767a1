#ifndef LIEALG_TANGENT_HPP
#define LIEALG_TANGENT_HPP

#include "liealg/algebra.hpp"

namespace liealg
{

  /// Point of T(g): a base element together with a fiber vector, both in
  /// basis coordinates of length g.dim(). Under the lift identification the
  /// pair (base, fiber) stands for sum_i base_i X_i^C + fiber_i X_i^V.
  struct TangentElement
  {
    Vec base;
    Vec fiber;
  };

  /// The tangent algebra T(g): a 2m-dimensional structure-constant algebra
  /// whose basis is ordered (X_1^C .. X_m^C, X_1^V .. X_m^V). Nonzero
  /// brackets: [X_i^C,X_j^C] = sum C(i,j,k) X_k^C and
  /// [X_i^C,X_j^V] = sum C(i,j,k) X_k^V; vertical lifts commute.
  struct TangentAlgebra
  {
    LieAlgebra underlying;
    Index parent_dim;
  };

  /// Bracket on T(g): ([x,y], [x,w] + [v,y]) for p = (x,v), q = (y,w),
  /// with fiber vectors bracketed through their coefficient vectors.
  TangentElement tangent_bracket(const LieAlgebra & g, const TangentElement & p,
                                 const TangentElement & q);

  /// Builds T(g) as a structure-constant algebra. The parent must pass
  /// verify_algebra; throws std::invalid_argument otherwise.
  TangentAlgebra tangent_algebra(const LieAlgebra & g);

  /// Coordinate isomorphism onto the lift basis: (base, fiber) -> base‖fiber.
  /// Sends (e_i, 0) to X_i^C and (0, e_i) to X_i^V.
  Vec omega(const LieAlgebra & g, const TangentElement & p);

  /// Inverse of omega: splits a 2m-vector back into (base, fiber).
  /// Throws std::invalid_argument on odd-length input.
  TangentElement omega_inverse(const LieAlgebra & g, const Vec & e);

  /// Tangent lift of a linear map: block-diagonal (base, fiber) ->
  /// (F base, F fiber), of shape 2·target x 2·source.
  Mat tangent_map(const Mat & map);

  /// Affine map x -> linear*x + offset on coefficient vectors. The bracket
  /// identity checks build these out of bracket slots, scalings and
  /// translations; the induced tangent map sends (p, v) to
  /// (linear*p + offset, linear*v).
  struct AffineMap
  {
    Mat linear;
    Vec offset;

    Vec operator()(const Vec & x) const { return linear * x + offset; }

    TangentElement tangent(const TangentElement & p) const
    {
      return {linear * p.base + offset, linear * p.fiber};
    }
  };

  /// x -> [a, x].
  AffineMap left_bracket_map(const LieAlgebra & g, const Vec & a);
  /// x -> [x, a].
  AffineMap right_bracket_map(const LieAlgebra & g, const Vec & a);
  /// x -> lambda * x.
  AffineMap scaling_map(Index dim, double lambda);
  /// x -> x + b.
  AffineMap translation_map(const Vec & b);
  /// f after g.
  AffineMap compose(const AffineMap & f, const AffineMap & g);
  /// Pointwise sum of two affine maps.
  AffineMap add(const AffineMap & f, const AffineMap & g);

  /// Samples `samples` pseudorandom tuples of elements, fibers and scalars
  /// (coefficients uniform in [-1,1], seeded) and evaluates nine
  /// identities, reported as checks "eq1".."eq9". Identities 1-5 are
  /// pointwise identities of maps g -> g; 6-9 compare induced tangent maps
  /// (6 on both components, 7-9 on the coordinate action, i.e. the fiber).
  /// All residuals vanish on a verified algebra; Jacobi failures surface in
  /// the eq7-eq9 family.
  VerificationReport verify_bracket_identities(const LieAlgebra & g, int samples,
                                                unsigned long seed);

}

#endif
