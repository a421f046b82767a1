#include "liealg/group_bridge.hpp"

#include <cmath>
#include <stdexcept>

#include "liealg/sampling.hpp"

namespace liealg
{

  Mat matrix_exp(const Mat & a)
  {
    if (a.rows() != a.cols()) {
      throw std::invalid_argument("matrix_exp: input must be square, got "
                                  + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    const Index n = a.rows();
    double norm = a.lpNorm<1>();
    int squarings = 0;
    if (norm > 0.5) {
      squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    Mat scaled = a / std::pow(2.0, squarings);
    Mat term = Mat::Identity(n, n);
    Mat sum = Mat::Identity(n, n);
    // ||scaled|| <= 0.5, so the series hits machine precision in ~20 terms
    for (int k = 1; k <= 40; k++) {
      term = term * scaled / static_cast<double>(k);
      sum += term;
      if (term.lpNorm<1>() <= 1e-17 * sum.lpNorm<1>()) break;
    }
    for (int s = 0; s < squarings; s++) {
      sum = sum * sum;
    }
    return sum;
  }

  namespace
  {
    void require_invertible(const Mat & g, const char * op)
    {
      Eigen::JacobiSVD<Mat> svd(g);
      const Vec & sigma = svd.singularValues();
      double smallest = sigma(sigma.size() - 1);
      if (smallest <= 0.0 || sigma(0) / smallest > 1e12) {
        throw std::invalid_argument(std::string(op) + ": group_part is singular "
                                    "(condition number above 1e12)");
      }
    }
  }

  Mat j_embed(const MatrixGroupElementPair & p)
  {
    const Index n = p.group_part.rows();
    if (p.group_part.cols() != n) {
      throw std::invalid_argument("j_embed: group_part must be square");
    }
    if (p.tangent_part.rows() != n || p.tangent_part.cols() != n) {
      throw std::invalid_argument("j_embed: tangent_part must match group_part shape");
    }
    require_invertible(p.group_part, "j_embed");
    Mat embedded = Mat::Zero(2 * n, 2 * n);
    embedded.topLeftCorner(n, n) = p.group_part;
    embedded.bottomRightCorner(n, n) = p.group_part;
    embedded.bottomLeftCorner(n, n) = p.tangent_part;
    return embedded;
  }

  Vec express_in_algebra(const Representation & realization, const Mat & m)
  {
    const Index n = realization.degree();
    if (m.rows() != n || m.cols() != n) {
      throw std::invalid_argument("express_in_algebra: matrix has shape "
                                  + std::to_string(m.rows()) + "x" + std::to_string(m.cols())
                                  + ", expected " + std::to_string(n) + "x" + std::to_string(n));
    }
    Mat flat(n * n, realization.algebra_dim());
    for (Index i = 0; i < realization.algebra_dim(); i++) {
      flat.col(i) = Eigen::Map<const Vec>(realization.matrix(i).data(), n * n);
    }
    Vec target = Eigen::Map<const Vec>(m.data(), n * n);
    Vec coords = flat.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(target);
    double residual = (flat * coords - target).norm();
    double scale = std::max(target.norm(), 1.0);
    if (residual > std::max(realization.tolerance(), 1e-6) * scale) {
      throw std::invalid_argument("express_in_algebra: matrix is not in the span of the "
                                  "realization (relative residual "
                                  + std::to_string(residual / scale) + ")");
    }
    return coords;
  }

  namespace
  {
    // Central difference of Phi along g exp(s M) at s = 0, stepping along the
    // unit-coordinate direction so roundoff does not blow up for small M.
    Mat group_rep_differential(const Representation & rep, const Mat & phi_g,
                               const Vec & tangent_coords, double step)
    {
      double scale = tangent_coords.norm();
      if (scale == 0.0) {
        return Mat::Zero(rep.degree(), rep.degree());
      }
      Vec direction = tangent_coords / scale;
      Mat forward = matrix_exp(apply(rep, step * direction));
      Mat backward = matrix_exp(apply(rep, -step * direction));
      return phi_g * (forward - backward) * (scale / (2.0 * step));
    }
  }

  Mat prolonged_group_rep(const Representation & rep, const LieAlgebra & g,
                          const MatrixGroupElementPair & p,
                          const Representation & realization, const Vec & factor_coords,
                          double step)
  {
    if (rep.algebra_dim() != g.dim() || realization.algebra_dim() != g.dim()) {
      throw std::invalid_argument("prolonged_group_rep: representation dims must match the algebra");
    }
    if (factor_coords.size() != g.dim()) {
      throw std::invalid_argument("prolonged_group_rep: factorization coordinates have length "
                                  + std::to_string(factor_coords.size()) + ", expected "
                                  + std::to_string(g.dim()));
    }
    if (step <= 0.0) {
      throw std::invalid_argument("prolonged_group_rep: step must be positive");
    }
    require_invertible(p.group_part, "prolonged_group_rep");

    // the supplied factorization must actually produce the group part
    Mat reconstructed = matrix_exp(apply(realization, factor_coords));
    double mismatch = (reconstructed - p.group_part).lpNorm<Eigen::Infinity>();
    if (mismatch > 1e-8 * std::max(1.0, p.group_part.lpNorm<Eigen::Infinity>())) {
      throw std::invalid_argument("prolonged_group_rep: factorization does not reproduce "
                                  "group_part (mismatch " + std::to_string(mismatch) + ")");
    }

    // pull the tangent back to the identity and express it in the algebra
    Mat body_tangent = p.group_part.partialPivLu().solve(p.tangent_part);
    Vec tangent_coords = express_in_algebra(realization, body_tangent);

    const Index n_rep = rep.degree();
    Mat phi_g = matrix_exp(apply(rep, factor_coords));
    Mat differential = group_rep_differential(rep, phi_g, tangent_coords, step);

    Mat result = Mat::Zero(2 * n_rep, 2 * n_rep);
    result.topLeftCorner(n_rep, n_rep) = phi_g;
    result.bottomRightCorner(n_rep, n_rep) = phi_g;
    result.bottomLeftCorner(n_rep, n_rep) = differential;
    return result;
  }

  VerificationReport check_group_differential(const Representation & rep, const LieAlgebra & g,
                                             const Representation & realization, int samples,
                                             unsigned long seed, double step)
  {
    if (samples <= 0) {
      throw std::invalid_argument("check_group_differential: samples must be positive");
    }
    if (step <= 0.0) {
      throw std::invalid_argument("check_group_differential: step must be positive");
    }
    if (!check_representation(rep, g).passed()) {
      throw std::invalid_argument("check_group_differential: rep fails check_representation");
    }
    if (!check_representation(realization, g).passed()) {
      throw std::invalid_argument("check_group_differential: realization fails check_representation");
    }

    Representation prolonged = prolong_representation(rep, g);
    const Index m = g.dim();
    std::mt19937_64 rng(seed);

    CheckResult check{"group_differential", true, 0.0, ""};
    const double tol = 100.0 * step * step;

    auto group_side_at = [&](const Vec & complete, const Vec & vertical, double t) {
      Mat big_b = apply(realization, complete);
      Mat big_a = apply(realization, vertical);
      Mat group = matrix_exp(t * big_b);
      MatrixGroupElementPair p{group, t * big_a * group};
      return prolonged_group_rep(rep, g, p, realization, t * complete);
    };

    for (int s = 0; s < samples; s++) {
      Vec complete = random_coeffs(rng, m);
      Vec vertical = random_coeffs(rng, m);

      Mat derivative = (group_side_at(complete, vertical, step)
                        - group_side_at(complete, vertical, -step)) / (2.0 * step);

      Vec xi(2 * m);
      xi << complete, vertical;
      Mat algebra_side = apply(prolonged, xi);

      double r = (derivative - algebra_side).lpNorm<Eigen::Infinity>();
      if (r > check.max_residual) check.max_residual = r;
      if (r > tol && check.passed) {
        check.passed = false;
        check.detail = "first violation at sample " + std::to_string(s);
      }
    }

    VerificationReport report;
    report.checks.push_back(check);
    return report;
  }

}
