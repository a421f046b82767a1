#ifndef LIEALG_ALGEBRA_HPP
#define LIEALG_ALGEBRA_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "liealg/report.hpp"

namespace liealg
{

  using Vec = Eigen::VectorXd;
  using Mat = Eigen::MatrixXd;
  using Index = Eigen::Index;

  /// Finite-dimensional real Lie algebra given by structure constants on a
  /// fixed basis X_0..X_{m-1}:
  ///
  ///   [X_i, X_j] = sum_k C(i,j,k) X_k.
  ///
  /// The tensor is stored densely as m matrices indexed by the output slot k,
  /// with entry (i,j) holding C(i,j,k). Elements are coefficient vectors of
  /// length m. Instances are immutable after construction and construction
  /// does not verify the Lie axioms; call verify_algebra for that.
  class LieAlgebra
  {
  public:
    /// Builds the algebra from a k-indexed structure tensor. Each matrix of
    /// `tensor` must be dim x dim and the list must have length dim.
    /// `basis_names` defaults to X1..Xm and is display-only.
    LieAlgebra(Index dim, std::vector<Mat> tensor,
               std::vector<std::string> basis_names = {},
               double tolerance = 1e-9);

    /// A dim-long list of dim x dim zero matrices, the starting point for
    /// filling in structure constants.
    static std::vector<Mat> zero_tensor(Index dim);

    /// Sets C(i,j,k) = c and C(j,i,k) = -c in a tensor under construction.
    static void set_bracket(std::vector<Mat> & tensor, Index i, Index j, Index k, double c);

    Index dim() const { return m_dim; }

    double structure_constant(Index i, Index j, Index k) const
    {
      return m_tensor[static_cast<size_t>(k)](i, j);
    }

    /// Matrix of C(.,.,k) for output slot k.
    const Mat & constants_for(Index k) const { return m_tensor[static_cast<size_t>(k)]; }

    const std::vector<Mat> & tensor() const { return m_tensor; }

    const std::vector<std::string> & basis_names() const { return m_basis_names; }

    double tolerance() const { return m_tolerance; }

    /// Copy with a different tolerance for approximate equality checks.
    LieAlgebra with_tolerance(double tolerance) const;

  private:
    Index m_dim;
    std::vector<Mat> m_tensor;
    std::vector<std::string> m_basis_names;
    double m_tolerance;
  };

  /// Bracket of two elements, z_k = sum_{i,j} x_i y_j C(i,j,k).
  /// Throws std::invalid_argument on a length mismatch, naming the operand.
  Vec bracket(const LieAlgebra & g, const Vec & x, const Vec & y);

  /// Checks antisymmetry and the Jacobi identity exhaustively over all basis
  /// index tuples. Passes iff every residual is at most g.tolerance().
  VerificationReport verify_algebra(const LieAlgebra & g);

  /// Checks F([X_i,X_j]_g) = [F X_i, F X_j]_h over all basis pairs, which is
  /// sufficient by bilinearity. `map` must be h.dim() x g.dim().
  VerificationReport check_homomorphism(const Mat & map, const LieAlgebra & g,
                                        const LieAlgebra & h);

  /// Matrix of ad(x): y -> [x, y], with entries M(k,j) = sum_i x_i C(i,j,k).
  Mat ad_matrix(const LieAlgebra & g, const Vec & x);

  /// Named algebras with exact integer structure constants:
  ///   abelian(m), heisenberg3, so3, sl2, gl2, upper_triangular2.
  /// Throws std::invalid_argument for unknown names.
  LieAlgebra catalog_algebra(const std::string & name);

  /// Names of all catalog entries (abelian instantiated at m = 4).
  std::vector<std::string> catalog_algebra_names();

}

#endif
