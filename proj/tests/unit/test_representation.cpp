#include <doctest.h>

#include <random>

#include "liealg/representation.hpp"
#include "liealg/sampling.hpp"
#include "oracles.hpp"

using namespace liealg;

namespace
{
  Representation swapped_sl2()
  {
    // E and F matrices exchanged while H stays: breaks [H,E] = 2E
    Representation defining = catalog_representation("sl2_defining");
    return Representation({defining.matrix(0), defining.matrix(2), defining.matrix(1)});
  }
}

TEST_CASE("apply extends linearly over the basis")
{
  Representation vector_rep = catalog_representation("so3_vector");
  CHECK(apply(vector_rep, Vec::Zero(3)).isZero(0.0));

  // oracle: phi(e3) is the cross-product matrix of e3
  Mat expected = oracles::cross_matrix(Eigen::Vector3d::UnitZ());
  Mat got = apply(vector_rep, Vec::Unit(3, 2));
  CHECK(oracles::max_abs_diff(got, expected) == 0.0);
  CHECK(got(0, 1) == -1.0);
  CHECK(got(1, 0) == 1.0);

  Representation defining = catalog_representation("sl2_defining");
  Mat h = apply(defining, Vec::Unit(3, 0));
  CHECK(h(0, 0) == 1.0);
  CHECK(h(1, 1) == -1.0);
  CHECK(h(0, 1) == 0.0);
  CHECK(h(1, 0) == 0.0);

  CHECK_THROWS_AS(apply(defining, Vec::Zero(4)), std::invalid_argument);
}

TEST_CASE("check_representation fixtures")
{
  LieAlgebra so3 = catalog_algebra("so3");
  LieAlgebra sl2 = catalog_algebra("sl2");

  Representation zero(std::vector<Mat>(3, Mat::Zero(2, 2)));
  CHECK(check_representation(zero, so3).passed());

  CHECK(check_representation(catalog_representation("sl2_defining"), sl2).passed());

  VerificationReport swapped = check_representation(swapped_sl2(), sl2);
  CHECK_FALSE(swapped.passed());
  CHECK(swapped.checks.front().detail.find("(0,1)") != std::string::npos);

  CHECK_THROWS_AS(check_representation(zero, catalog_algebra("abelian(4)")),
                  std::invalid_argument);
}

TEST_CASE("catalog representations satisfy the homomorphism property")
{
  for (const auto & [algebra_name, rep_name] : catalog_representation_pairs()) {
    CAPTURE(algebra_name);
    LieAlgebra g = catalog_algebra(algebra_name);
    Representation rep = catalog_representation(rep_name);
    CHECK(check_representation(rep, g).passed());
  }
  CHECK_THROWS_AS(catalog_representation("nonsense"), std::invalid_argument);
  CHECK(catalog_representation("zero(4,2)").algebra_dim() == 4);
  CHECK(catalog_representation("zero(4,2)").degree() == 2);
}

TEST_CASE("prolongation of the zero representation is zero")
{
  LieAlgebra g = catalog_algebra("so3");
  Representation zero(std::vector<Mat>(3, Mat::Zero(2, 2)));
  Representation lifted = prolong_representation(zero, g);
  CHECK(lifted.algebra_dim() == 6);
  CHECK(lifted.degree() == 4);
  for (const auto & mat : lifted.matrices()) {
    CHECK(mat.isZero(0.0));
  }
  CHECK(check_representation(lifted, tangent_algebra(g).underlying).passed());
}

TEST_CASE("prolongation realizes the block form")
{
  LieAlgebra sl2 = catalog_algebra("sl2");
  Representation defining = catalog_representation("sl2_defining");
  Representation lifted = prolong_representation(defining, sl2);
  const Index n = defining.degree();

  SUBCASE("pure complete elements sit on the diagonal")
  {
    std::mt19937_64 rng(31);
    for (int s = 0; s < 20; s++) {
      Vec complete = random_coeffs(rng, 3);
      Vec xi(6);
      xi << complete, Vec::Zero(3);
      Mat block = apply(lifted, xi);
      Mat small = apply(defining, complete);
      CHECK(oracles::max_abs_diff(block.topLeftCorner(n, n), small) == 0.0);
      CHECK(oracles::max_abs_diff(block.bottomRightCorner(n, n), small) == 0.0);
      CHECK(block.topRightCorner(n, n).isZero(0.0));
      CHECK(block.bottomLeftCorner(n, n).isZero(0.0));
    }
  }

  SUBCASE("the vertical lift of H squares to zero")
  {
    Mat vertical = apply(lifted, Vec::Unit(6, 3));
    CHECK(vertical.topLeftCorner(n, n).isZero(0.0));
    CHECK(vertical.topRightCorner(n, n).isZero(0.0));
    CHECK(vertical.bottomRightCorner(n, n).isZero(0.0));
    CHECK(oracles::max_abs_diff(vertical.bottomLeftCorner(n, n), defining.matrix(0)) == 0.0);
    CHECK((vertical * vertical).isZero(0.0));
  }

  SUBCASE("unverified input is rejected")
  {
    CHECK_THROWS_AS(prolong_representation(swapped_sl2(), sl2), std::invalid_argument);
  }
}

TEST_CASE("prolonged catalog representations stay representations")
{
  std::mt19937_64 rng(37);
  for (const auto & [algebra_name, rep_name] : catalog_representation_pairs()) {
    CAPTURE(algebra_name);
    LieAlgebra g = catalog_algebra(algebra_name);
    Representation rep = catalog_representation(rep_name);
    Representation lifted = prolong_representation(rep, g);
    LieAlgebra t = tangent_algebra(g).underlying;

    CHECK(lifted.algebra_dim() == 2 * g.dim());
    CHECK(lifted.degree() == 2 * rep.degree());
    CHECK(check_representation(lifted, t).passed());

    const Index n = rep.degree();
    for (int s = 0; s < 20; s++) {
      Vec xi = random_coeffs(rng, 2 * g.dim());
      Mat block = apply(lifted, xi);
      CHECK(block.topRightCorner(n, n).isZero(0.0));
      CHECK(oracles::max_abs_diff(block.topLeftCorner(n, n), block.bottomRightCorner(n, n))
            == 0.0);

      Vec pure_vertical(2 * g.dim());
      pure_vertical << Vec::Zero(g.dim()), xi.tail(g.dim());
      Mat vertical = apply(lifted, pure_vertical);
      CHECK((vertical * vertical).isZero(0.0));
    }
  }
}

TEST_CASE("kernel_dimension counts vanishing directions")
{
  LieAlgebra so3 = catalog_algebra("so3");
  Representation zero(std::vector<Mat>(3, Mat::Zero(2, 2)));
  CHECK(kernel_dimension(zero) == 3);

  Representation defining = catalog_representation("sl2_defining");
  CHECK(kernel_dimension(defining) == 0);
  CHECK(kernel_dimension(prolong_representation(defining, catalog_algebra("sl2"))) == 0);

  // doubling across the catalog, including the all-zero representation
  for (const auto & [algebra_name, rep_name] : catalog_representation_pairs()) {
    CAPTURE(algebra_name);
    LieAlgebra g = catalog_algebra(algebra_name);
    Representation rep = catalog_representation(rep_name);
    CHECK(kernel_dimension(prolong_representation(rep, g)) == 2 * kernel_dimension(rep));
  }
  CHECK(kernel_dimension(prolong_representation(zero, so3)) == 6);
}

TEST_CASE("representation construction validates shapes")
{
  CHECK_THROWS_AS(Representation({}), std::invalid_argument);
  CHECK_THROWS_AS(Representation({Mat::Zero(2, 2), Mat::Zero(3, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(Representation({Mat::Zero(2, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(Representation({Mat::Zero(2, 2)}, -0.5), std::invalid_argument);
  CHECK(Representation({Mat::Zero(2, 2)}).with_tolerance(1e-6).tolerance() == 1e-6);
}
