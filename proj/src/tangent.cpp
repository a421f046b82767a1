#include "liealg/tangent.hpp"

#include <stdexcept>

#include "liealg/sampling.hpp"

namespace liealg
{

  namespace
  {
    void require_tangent_dims(const LieAlgebra & g, const TangentElement & p,
                              const char * op, const char * operand)
    {
      if (p.base.size() != g.dim() || p.fiber.size() != g.dim()) {
        throw std::invalid_argument(std::string(op) + ": " + operand
                                    + " has (base,fiber) lengths ("
                                    + std::to_string(p.base.size()) + ","
                                    + std::to_string(p.fiber.size()) + "), expected "
                                    + std::to_string(g.dim()) + " each");
      }
    }
  }

  TangentElement tangent_bracket(const LieAlgebra & g, const TangentElement & p,
                                 const TangentElement & q)
  {
    require_tangent_dims(g, p, "tangent_bracket", "first operand");
    require_tangent_dims(g, q, "tangent_bracket", "second operand");
    return {bracket(g, p.base, q.base),
            bracket(g, p.base, q.fiber) + bracket(g, p.fiber, q.base)};
  }

  TangentAlgebra tangent_algebra(const LieAlgebra & g)
  {
    if (!verify_algebra(g).passed()) {
      throw std::invalid_argument("tangent_algebra: parent algebra fails verification");
    }
    const Index m = g.dim();
    auto tensor = LieAlgebra::zero_tensor(2 * m);
    for (Index i = 0; i < m; i++) {
      for (Index j = 0; j < m; j++) {
        for (Index k = 0; k < m; k++) {
          double c = g.structure_constant(i, j, k);
          if (c == 0.0) continue;
          tensor[static_cast<size_t>(k)](i, j) = c;          // [X_i^C, X_j^C] -> X_k^C
          tensor[static_cast<size_t>(m + k)](i, m + j) = c;  // [X_i^C, X_j^V] -> X_k^V
          tensor[static_cast<size_t>(m + k)](m + i, j) = -g.structure_constant(j, i, k);
        }
      }
    }
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(2 * m));
    for (Index i = 0; i < m; i++) {
      names.push_back(g.basis_names()[static_cast<size_t>(i)] + "^C");
    }
    for (Index i = 0; i < m; i++) {
      names.push_back(g.basis_names()[static_cast<size_t>(i)] + "^V");
    }
    return {LieAlgebra(2 * m, std::move(tensor), std::move(names), g.tolerance()), m};
  }

  Vec omega(const LieAlgebra & g, const TangentElement & p)
  {
    require_tangent_dims(g, p, "omega", "argument");
    Vec e(2 * g.dim());
    e << p.base, p.fiber;
    return e;
  }

  TangentElement omega_inverse(const LieAlgebra & g, const Vec & e)
  {
    if (e.size() % 2 != 0) {
      throw std::invalid_argument("omega_inverse: input has odd length "
                                  + std::to_string(e.size()));
    }
    if (e.size() != 2 * g.dim()) {
      throw std::invalid_argument("omega_inverse: input has length " + std::to_string(e.size())
                                  + ", expected " + std::to_string(2 * g.dim()));
    }
    return {e.head(g.dim()), e.tail(g.dim())};
  }

  Mat tangent_map(const Mat & map)
  {
    Mat lifted = Mat::Zero(2 * map.rows(), 2 * map.cols());
    lifted.topLeftCorner(map.rows(), map.cols()) = map;
    lifted.bottomRightCorner(map.rows(), map.cols()) = map;
    return lifted;
  }

  //------------------------------------------------------------------------------
  // Affine maps for the bracket identity suite
  //------------------------------------------------------------------------------

  AffineMap left_bracket_map(const LieAlgebra & g, const Vec & a)
  {
    return {ad_matrix(g, a), Vec::Zero(g.dim())};
  }

  AffineMap right_bracket_map(const LieAlgebra & g, const Vec & a)
  {
    // x -> [x, a]; column j is [e_j, a]
    Mat linear(g.dim(), g.dim());
    for (Index j = 0; j < g.dim(); j++) {
      linear.col(j) = bracket(g, Vec::Unit(g.dim(), j), a);
    }
    return {linear, Vec::Zero(g.dim())};
  }

  AffineMap scaling_map(Index dim, double lambda)
  {
    return {lambda * Mat::Identity(dim, dim), Vec::Zero(dim)};
  }

  AffineMap translation_map(const Vec & b)
  {
    return {Mat::Identity(b.size(), b.size()), b};
  }

  AffineMap compose(const AffineMap & f, const AffineMap & g)
  {
    return {f.linear * g.linear, f.linear * g.offset + f.offset};
  }

  AffineMap add(const AffineMap & f, const AffineMap & g)
  {
    return {f.linear + g.linear, f.offset + g.offset};
  }

  //------------------------------------------------------------------------------
  // Bracket identity suite
  //------------------------------------------------------------------------------

  VerificationReport verify_bracket_identities(const LieAlgebra & g, int samples,
                                                unsigned long seed)
  {
    if (samples <= 0) {
      throw std::invalid_argument("verify_bracket_identities: samples must be positive");
    }
    const Index m = g.dim();
    std::mt19937_64 rng(seed);

    VerificationReport report;
    report.checks.resize(9);
    for (int e = 0; e < 9; e++) {
      report.checks[static_cast<size_t>(e)] = {"eq" + std::to_string(e + 1), true, 0.0, ""};
    }
    auto record = [&](int eq, double r, int sample) {
      CheckResult & c = report.checks[static_cast<size_t>(eq - 1)];
      if (r > c.max_residual) c.max_residual = r;
      if (r > g.tolerance() && c.passed) {
        c.passed = false;
        c.detail = "first violation at sample " + std::to_string(sample);
      }
    };

    for (int s = 0; s < samples; s++) {
      Vec a = random_coeffs(rng, m);
      Vec b = random_coeffs(rng, m);
      Vec c = random_coeffs(rng, m);
      Vec x = random_coeffs(rng, m);
      double lambda = random_scalar(rng);
      TangentElement ta{a, random_coeffs(rng, m)};
      TangentElement tb{b, random_coeffs(rng, m)};
      TangentElement tc{c, random_coeffs(rng, m)};

      AffineMap f_a = left_bracket_map(g, a);
      AffineMap f_b = left_bracket_map(g, b);
      AffineMap fbar_a = right_bracket_map(g, a);
      AffineMap fbar_b = right_bracket_map(g, b);
      AffineMap fbar_c = right_bracket_map(g, c);
      AffineMap neg = scaling_map(m, -1.0);
      AffineMap scale = scaling_map(m, lambda);

      // (1) [a,x] = -[x,a]
      record(1, (f_a(x) - compose(neg, fbar_a)(x)).lpNorm<Eigen::Infinity>(), s);
      // (2) [x,b] = -[b,x]
      record(2, (fbar_b(x) - compose(neg, f_b)(x)).lpNorm<Eigen::Infinity>(), s);
      // (3) [lambda x, b] = lambda [x,b]
      record(3, (compose(fbar_b, scale)(x) - compose(scale, fbar_b)(x)).lpNorm<Eigen::Infinity>(), s);
      // (4) [lambda a, x] = lambda [a,x]
      record(4, (left_bracket_map(g, lambda * a)(x) - compose(scale, f_a)(x)).lpNorm<Eigen::Infinity>(), s);
      // (5) [x+b, c] = [b,c] + [x,c]
      record(5, (compose(fbar_c, translation_map(b))(x)
                 - compose(translation_map(bracket(g, b, c)), fbar_c)(x)).lpNorm<Eigen::Infinity>(), s);

      // (6) T(ad a)(Z_c) (+) T(ad b)(Z_c) = T(ad(a+b))(Z_c), both components
      {
        TangentElement lhs1 = f_a.tangent(tc);
        TangentElement lhs2 = f_b.tangent(tc);
        TangentElement rhs = left_bracket_map(g, a + b).tangent(tc);
        double r = std::max((lhs1.base + lhs2.base - rhs.base).lpNorm<Eigen::Infinity>(),
                            (lhs1.fiber + lhs2.fiber - rhs.fiber).lpNorm<Eigen::Infinity>());
        record(6, r, s);
      }

      Vec bc = bracket(g, b, c);
      Vec ab = bracket(g, a, b);
      Vec ca = bracket(g, c, a);
      AffineMap tau_bc_a = translation_map(bracket(g, bc, a));
      AffineMap tau_ab_c = translation_map(bracket(g, ab, c));

      // (7)-(9) hold between the coordinate actions (the fiber parts) of the
      // induced tangent maps; the two sides sit at different base points.
      // Each reduces to one grouping of the Jacobi identity.

      // (7) at X_a
      {
        AffineMap lhs = add(compose(tau_bc_a, compose(fbar_c, fbar_b)),
                            compose(tau_ab_c, left_bracket_map(g, bc)));
        AffineMap rhs = compose(neg, compose(fbar_b, left_bracket_map(g, c)));
        record(7, (lhs.tangent(ta).fiber - rhs.tangent(ta).fiber).lpNorm<Eigen::Infinity>(), s);
      }
      // (8) at Y_b
      {
        AffineMap lhs = add(compose(tau_bc_a, compose(fbar_c, f_a)),
                            compose(tau_ab_c, compose(fbar_a, fbar_c)));
        AffineMap rhs = right_bracket_map(g, ca);
        record(8, (lhs.tangent(tb).fiber - rhs.tangent(tb).fiber).lpNorm<Eigen::Infinity>(), s);
      }
      // (9) at Z_c
      {
        AffineMap lhs = add(compose(tau_bc_a, left_bracket_map(g, ab)),
                            compose(tau_ab_c, compose(fbar_a, f_b)));
        AffineMap rhs = compose(neg, compose(fbar_b, fbar_a));
        record(9, (lhs.tangent(tc).fiber - rhs.tangent(tc).fiber).lpNorm<Eigen::Infinity>(), s);
      }
    }

    return report;
  }

}
