#include "liealg/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace liealg
{

  //------------------------------------------------------------------------------
  // LieAlgebra
  //------------------------------------------------------------------------------

  LieAlgebra::LieAlgebra(Index dim, std::vector<Mat> tensor,
                         std::vector<std::string> basis_names, double tolerance)
    : m_dim(dim),
      m_tensor(std::move(tensor)),
      m_basis_names(std::move(basis_names)),
      m_tolerance(tolerance)
  {
    if (m_dim <= 0) {
      throw std::invalid_argument("LieAlgebra: dim must be positive");
    }
    if (m_tolerance < 0.0) {
      throw std::invalid_argument("LieAlgebra: tolerance must be non-negative");
    }
    if (m_tensor.size() != static_cast<size_t>(m_dim)) {
      throw std::invalid_argument("LieAlgebra: structure tensor must have dim slices");
    }
    for (const auto & slice : m_tensor) {
      if (slice.rows() != m_dim || slice.cols() != m_dim) {
        throw std::invalid_argument("LieAlgebra: every tensor slice must be dim x dim");
      }
    }
    if (m_basis_names.empty()) {
      m_basis_names.reserve(static_cast<size_t>(m_dim));
      for (Index i = 0; i < m_dim; i++) {
        m_basis_names.push_back("X" + std::to_string(i + 1));
      }
    } else if (m_basis_names.size() != static_cast<size_t>(m_dim)) {
      throw std::invalid_argument("LieAlgebra: basis_names length must equal dim");
    }
  }

  std::vector<Mat> LieAlgebra::zero_tensor(Index dim)
  {
    return std::vector<Mat>(static_cast<size_t>(dim), Mat::Zero(dim, dim));
  }

  void LieAlgebra::set_bracket(std::vector<Mat> & tensor, Index i, Index j, Index k, double c)
  {
    tensor[static_cast<size_t>(k)](i, j) = c;
    tensor[static_cast<size_t>(k)](j, i) = -c;
  }

  LieAlgebra LieAlgebra::with_tolerance(double tolerance) const
  {
    return LieAlgebra(m_dim, m_tensor, m_basis_names, tolerance);
  }

  //------------------------------------------------------------------------------
  // Operations
  //------------------------------------------------------------------------------

  Vec bracket(const LieAlgebra & g, const Vec & x, const Vec & y)
  {
    if (x.size() != g.dim()) {
      throw std::invalid_argument("bracket: first operand has length "
                                  + std::to_string(x.size()) + ", expected "
                                  + std::to_string(g.dim()));
    }
    if (y.size() != g.dim()) {
      throw std::invalid_argument("bracket: second operand has length "
                                  + std::to_string(y.size()) + ", expected "
                                  + std::to_string(g.dim()));
    }
    Vec z(g.dim());
    for (Index k = 0; k < g.dim(); k++) {
      z(k) = x.dot(g.constants_for(k) * y);
    }
    return z;
  }

  VerificationReport verify_algebra(const LieAlgebra & g)
  {
    const Index m = g.dim();
    const double tol = g.tolerance();
    VerificationReport report;

    CheckResult antisym{"antisymmetry", true, 0.0, ""};
    for (Index i = 0; i < m; i++) {
      for (Index j = 0; j < m; j++) {
        for (Index k = 0; k < m; k++) {
          double r = std::abs(g.structure_constant(i, j, k) + g.structure_constant(j, i, k));
          if (r > antisym.max_residual) antisym.max_residual = r;
          if (r > tol && antisym.passed) {
            antisym.passed = false;
            antisym.detail = "first violation at (i,j,k)=(" + std::to_string(i) + ","
                             + std::to_string(j) + "," + std::to_string(k) + ")";
          }
        }
      }
    }
    report.checks.push_back(antisym);

    CheckResult jacobi{"jacobi", true, 0.0, ""};
    for (Index i = 0; i < m; i++) {
      Vec ei = Vec::Unit(m, i);
      for (Index j = 0; j < m; j++) {
        Vec ej = Vec::Unit(m, j);
        for (Index k = 0; k < m; k++) {
          Vec ek = Vec::Unit(m, k);
          Vec cyc = bracket(g, bracket(g, ei, ej), ek)
                    + bracket(g, bracket(g, ej, ek), ei)
                    + bracket(g, bracket(g, ek, ei), ej);
          double r = cyc.lpNorm<Eigen::Infinity>();
          if (r > jacobi.max_residual) jacobi.max_residual = r;
          if (r > tol && jacobi.passed) {
            jacobi.passed = false;
            jacobi.detail = "first violation at (i,j,k)=(" + std::to_string(i) + ","
                            + std::to_string(j) + "," + std::to_string(k) + ")";
          }
        }
      }
    }
    report.checks.push_back(jacobi);

    return report;
  }

  VerificationReport check_homomorphism(const Mat & map, const LieAlgebra & g,
                                        const LieAlgebra & h)
  {
    if (map.cols() != g.dim()) {
      throw std::invalid_argument("check_homomorphism: map has " + std::to_string(map.cols())
                                  + " columns, expected source dim " + std::to_string(g.dim()));
    }
    if (map.rows() != h.dim()) {
      throw std::invalid_argument("check_homomorphism: map has " + std::to_string(map.rows())
                                  + " rows, expected target dim " + std::to_string(h.dim()));
    }
    const double tol = std::max(g.tolerance(), h.tolerance());
    CheckResult check{"homomorphism", true, 0.0, ""};
    for (Index i = 0; i < g.dim(); i++) {
      Vec ei = Vec::Unit(g.dim(), i);
      for (Index j = 0; j < g.dim(); j++) {
        Vec ej = Vec::Unit(g.dim(), j);
        Vec lhs = map * bracket(g, ei, ej);
        Vec rhs = bracket(h, map * ei, map * ej);
        double r = (lhs - rhs).lpNorm<Eigen::Infinity>();
        if (r > check.max_residual) check.max_residual = r;
        if (r > tol && check.passed) {
          check.passed = false;
          check.detail = "first violation at basis pair (i,j)=(" + std::to_string(i) + ","
                         + std::to_string(j) + ")";
        }
      }
    }
    VerificationReport report;
    report.checks.push_back(check);
    return report;
  }

  Mat ad_matrix(const LieAlgebra & g, const Vec & x)
  {
    if (x.size() != g.dim()) {
      throw std::invalid_argument("ad_matrix: element has length " + std::to_string(x.size())
                                  + ", expected " + std::to_string(g.dim()));
    }
    Mat ad(g.dim(), g.dim());
    for (Index k = 0; k < g.dim(); k++) {
      // row k of ad is x contracted against C(.,.,k)
      ad.row(k) = x.transpose() * g.constants_for(k);
    }
    return ad;
  }

  //------------------------------------------------------------------------------
  // Catalog
  //------------------------------------------------------------------------------

  namespace
  {
    bool parse_abelian_dim(const std::string & name, Index & m_out)
    {
      const std::string prefix = "abelian(";
      if (name.rfind(prefix, 0) != 0 || name.back() != ')') return false;
      std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
      if (digits.empty()) return false;
      for (char c : digits) {
        if (c < '0' || c > '9') return false;
      }
      m_out = static_cast<Index>(std::stol(digits));
      return m_out > 0;
    }
  }

  LieAlgebra catalog_algebra(const std::string & name)
  {
    Index m_abelian = 0;
    if (parse_abelian_dim(name, m_abelian)) {
      return LieAlgebra(m_abelian, LieAlgebra::zero_tensor(m_abelian));
    }
    if (name == "heisenberg3") {
      auto tensor = LieAlgebra::zero_tensor(3);
      LieAlgebra::set_bracket(tensor, 0, 1, 2, 1.0); // [X,Y] = Z
      return LieAlgebra(3, std::move(tensor), {"X", "Y", "Z"});
    }
    if (name == "so3") {
      auto tensor = LieAlgebra::zero_tensor(3);
      LieAlgebra::set_bracket(tensor, 0, 1, 2, 1.0);
      LieAlgebra::set_bracket(tensor, 1, 2, 0, 1.0);
      LieAlgebra::set_bracket(tensor, 2, 0, 1, 1.0);
      return LieAlgebra(3, std::move(tensor), {"L1", "L2", "L3"});
    }
    if (name == "sl2") {
      auto tensor = LieAlgebra::zero_tensor(3);
      LieAlgebra::set_bracket(tensor, 0, 1, 1, 2.0);  // [H,E] = 2E
      LieAlgebra::set_bracket(tensor, 0, 2, 2, -2.0); // [H,F] = -2F
      LieAlgebra::set_bracket(tensor, 1, 2, 0, 1.0);  // [E,F] = H
      return LieAlgebra(3, std::move(tensor), {"H", "E", "F"});
    }
    if (name == "gl2") {
      // basis E11, E12, E21, E22 with [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
      auto tensor = LieAlgebra::zero_tensor(4);
      LieAlgebra::set_bracket(tensor, 0, 1, 1, 1.0);  // [E11,E12] = E12
      LieAlgebra::set_bracket(tensor, 0, 2, 2, -1.0); // [E11,E21] = -E21
      LieAlgebra::set_bracket(tensor, 1, 2, 0, 1.0);  // [E12,E21] = E11 - E22
      LieAlgebra::set_bracket(tensor, 1, 2, 3, -1.0);
      LieAlgebra::set_bracket(tensor, 1, 3, 1, 1.0);  // [E12,E22] = E12
      LieAlgebra::set_bracket(tensor, 2, 3, 2, -1.0); // [E21,E22] = -E21
      return LieAlgebra(4, std::move(tensor), {"E11", "E12", "E21", "E22"});
    }
    if (name == "upper_triangular2") {
      // basis E11, E12, E22 of 2x2 upper-triangular matrices
      auto tensor = LieAlgebra::zero_tensor(3);
      LieAlgebra::set_bracket(tensor, 0, 1, 1, 1.0);  // [E11,E12] = E12
      LieAlgebra::set_bracket(tensor, 1, 2, 1, 1.0);  // [E12,E22] = E12
      return LieAlgebra(3, std::move(tensor), {"E11", "E12", "E22"});
    }
    throw std::invalid_argument("catalog_algebra: unknown name '" + name + "'");
  }

  std::vector<std::string> catalog_algebra_names()
  {
    return {"abelian(4)", "heisenberg3", "so3", "sl2", "gl2", "upper_triangular2"};
  }

}
