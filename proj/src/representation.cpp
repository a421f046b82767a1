#include "liealg/representation.hpp"

#include <stdexcept>

namespace liealg
{

  Representation::Representation(std::vector<Mat> matrices, double tolerance)
    : m_matrices(std::move(matrices)), m_tolerance(tolerance)
  {
    if (m_matrices.empty()) {
      throw std::invalid_argument("Representation: needs at least one generator matrix");
    }
    if (m_tolerance < 0.0) {
      throw std::invalid_argument("Representation: tolerance must be non-negative");
    }
    const Index n = m_matrices.front().rows();
    for (const auto & mat : m_matrices) {
      if (mat.rows() != n || mat.cols() != n) {
        throw std::invalid_argument("Representation: all matrices must be square of equal size");
      }
    }
  }

  Representation Representation::with_tolerance(double tolerance) const
  {
    return Representation(m_matrices, tolerance);
  }

  Mat apply(const Representation & rep, const Vec & x)
  {
    if (x.size() != rep.algebra_dim()) {
      throw std::invalid_argument("apply: element has length " + std::to_string(x.size())
                                  + ", expected " + std::to_string(rep.algebra_dim()));
    }
    Mat result = Mat::Zero(rep.degree(), rep.degree());
    for (Index i = 0; i < rep.algebra_dim(); i++) {
      result += x(i) * rep.matrix(i);
    }
    return result;
  }

  VerificationReport check_representation(const Representation & rep, const LieAlgebra & g)
  {
    if (rep.algebra_dim() != g.dim()) {
      throw std::invalid_argument("check_representation: representation has "
                                  + std::to_string(rep.algebra_dim())
                                  + " generators, expected " + std::to_string(g.dim()));
    }
    const double tol = std::max(rep.tolerance(), g.tolerance());
    CheckResult check{"representation", true, 0.0, ""};
    for (Index i = 0; i < g.dim(); i++) {
      for (Index j = 0; j < g.dim(); j++) {
        Vec cij = bracket(g, Vec::Unit(g.dim(), i), Vec::Unit(g.dim(), j));
        Mat lhs = apply(rep, cij);
        Mat rhs = rep.matrix(i) * rep.matrix(j) - rep.matrix(j) * rep.matrix(i);
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

  Representation prolong_representation(const Representation & rep, const LieAlgebra & g)
  {
    if (!check_representation(rep, g).passed()) {
      throw std::invalid_argument("prolong_representation: input fails check_representation");
    }
    const Index n = rep.degree();
    std::vector<Mat> lifted;
    lifted.reserve(static_cast<size_t>(2 * rep.algebra_dim()));
    for (Index i = 0; i < rep.algebra_dim(); i++) {
      Mat complete = Mat::Zero(2 * n, 2 * n);
      complete.topLeftCorner(n, n) = rep.matrix(i);
      complete.bottomRightCorner(n, n) = rep.matrix(i);
      lifted.push_back(std::move(complete));
    }
    for (Index i = 0; i < rep.algebra_dim(); i++) {
      Mat vertical = Mat::Zero(2 * n, 2 * n);
      vertical.bottomLeftCorner(n, n) = rep.matrix(i);
      lifted.push_back(std::move(vertical));
    }
    return Representation(std::move(lifted), rep.tolerance());
  }

  Index kernel_dimension(const Representation & rep)
  {
    const Index m = rep.algebra_dim();
    const Index n = rep.degree();
    Mat flat(n * n, m);
    for (Index i = 0; i < m; i++) {
      flat.col(i) = Eigen::Map<const Vec>(rep.matrix(i).data(), n * n);
    }
    Eigen::JacobiSVD<Mat> svd(flat);
    const Vec & sigma = svd.singularValues();
    double largest = sigma.size() > 0 ? sigma(0) : 0.0;
    double cut = largest > 0.0 ? rep.tolerance() * largest : rep.tolerance();
    Index rank = 0;
    for (Index i = 0; i < sigma.size(); i++) {
      if (sigma(i) > cut) rank++;
    }
    return m - rank;
  }

  //------------------------------------------------------------------------------
  // Catalog
  //------------------------------------------------------------------------------

  namespace
  {
    Mat unit_matrix(Index n, Index r, Index c)
    {
      Mat e = Mat::Zero(n, n);
      e(r, c) = 1.0;
      return e;
    }

    bool parse_zero_dims(const std::string & name, Index & m_out, Index & n_out)
    {
      // zero(m,n)
      const std::string prefix = "zero(";
      if (name.rfind(prefix, 0) != 0 || name.back() != ')') return false;
      std::string body = name.substr(prefix.size(), name.size() - prefix.size() - 1);
      auto comma = body.find(',');
      if (comma == std::string::npos) return false;
      std::string first = body.substr(0, comma);
      std::string second = body.substr(comma + 1);
      if (first.empty() || second.empty()) return false;
      for (char c : first + second) {
        if (c < '0' || c > '9') return false;
      }
      m_out = static_cast<Index>(std::stol(first));
      n_out = static_cast<Index>(std::stol(second));
      return m_out > 0 && n_out > 0;
    }
  }

  Representation catalog_representation(const std::string & name)
  {
    Index m = 0, n = 0;
    if (parse_zero_dims(name, m, n)) {
      return Representation(std::vector<Mat>(static_cast<size_t>(m), Mat::Zero(n, n)));
    }
    if (name == "so3_vector") {
      // phi(e_k) = matrix of the cross product e_k x .
      Mat l1 = Mat::Zero(3, 3), l2 = Mat::Zero(3, 3), l3 = Mat::Zero(3, 3);
      l1(2, 1) = 1.0; l1(1, 2) = -1.0;
      l2(0, 2) = 1.0; l2(2, 0) = -1.0;
      l3(1, 0) = 1.0; l3(0, 1) = -1.0;
      return Representation({l1, l2, l3});
    }
    if (name == "sl2_defining") {
      Mat h = Mat::Zero(2, 2), e = Mat::Zero(2, 2), f = Mat::Zero(2, 2);
      h(0, 0) = 1.0; h(1, 1) = -1.0;
      e(0, 1) = 1.0;
      f(1, 0) = 1.0;
      return Representation({h, e, f});
    }
    if (name == "heisenberg3_defining") {
      return Representation({unit_matrix(3, 0, 1), unit_matrix(3, 1, 2), unit_matrix(3, 0, 2)});
    }
    if (name == "gl2_defining") {
      return Representation({unit_matrix(2, 0, 0), unit_matrix(2, 0, 1),
                             unit_matrix(2, 1, 0), unit_matrix(2, 1, 1)});
    }
    if (name == "upper_triangular2_defining") {
      return Representation({unit_matrix(2, 0, 0), unit_matrix(2, 0, 1), unit_matrix(2, 1, 1)});
    }
    throw std::invalid_argument("catalog_representation: unknown name '" + name + "'");
  }

  std::vector<std::pair<std::string, std::string>> catalog_representation_pairs()
  {
    return {{"abelian(4)", "zero(4,2)"},
            {"heisenberg3", "heisenberg3_defining"},
            {"so3", "so3_vector"},
            {"sl2", "sl2_defining"},
            {"gl2", "gl2_defining"},
            {"upper_triangular2", "upper_triangular2_defining"}};
  }

}
