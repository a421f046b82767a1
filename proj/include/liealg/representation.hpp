#ifndef LIEALG_REPRESENTATION_HPP
#define LIEALG_REPRESENTATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "liealg/algebra.hpp"
#include "liealg/tangent.hpp"

namespace liealg
{

  /// Matrix representation of an m-dimensional algebra: one n x n matrix per
  /// basis element, matrices[i] realizing X_i. The homomorphism property is
  /// not checked at construction; see check_representation.
  class Representation
  {
  public:
    explicit Representation(std::vector<Mat> matrices, double tolerance = 1e-9);

    Index algebra_dim() const { return static_cast<Index>(m_matrices.size()); }
    Index degree() const { return m_matrices.front().rows(); }
    const std::vector<Mat> & matrices() const { return m_matrices; }
    const Mat & matrix(Index i) const { return m_matrices[static_cast<size_t>(i)]; }
    double tolerance() const { return m_tolerance; }
    Representation with_tolerance(double tolerance) const;

  private:
    std::vector<Mat> m_matrices;
    double m_tolerance;
  };

  /// Linear extension over the basis: sum_i x_i matrices[i].
  Mat apply(const Representation & rep, const Vec & x);

  /// Checks phi([X_i,X_j]) = [phi(X_i), phi(X_j)] over all basis pairs.
  VerificationReport check_representation(const Representation & rep, const LieAlgebra & g);

  /// Block prolongation onto T(g), degree 2n and 2m generators:
  /// complete lifts map to diag(phi(X_i), phi(X_i)), vertical lifts put
  /// phi(X_i) in the lower-left block. The input must pass
  /// check_representation; throws std::invalid_argument otherwise.
  Representation prolong_representation(const Representation & rep, const LieAlgebra & g);

  /// Dimension of {x : apply(rep, x) = 0}: algebra_dim minus the rank of the
  /// matrix of flattened generators, with singular values cut at
  /// tolerance * sigma_max (plain tolerance for the zero matrix).
  Index kernel_dimension(const Representation & rep);

  /// Named representations over the catalog algebras:
  ///   so3_vector, sl2_defining, heisenberg3_defining, gl2_defining,
  ///   upper_triangular2_defining, zero(m,n).
  Representation catalog_representation(const std::string & name);

  /// Pairs (algebra name, representation name) covering the catalog.
  std::vector<std::pair<std::string, std::string>> catalog_representation_pairs();

}

#endif
