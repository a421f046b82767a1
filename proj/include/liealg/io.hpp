#ifndef LIEALG_IO_HPP
#define LIEALG_IO_HPP

#include <stdexcept>
#include <string>

#include "liealg/algebra.hpp"
#include "liealg/representation.hpp"

namespace liealg
{

  /// File or format problem while reading a definition file.
  struct ParseError : std::runtime_error
  {
    using std::runtime_error::runtime_error;
  };

  /// Loads an algebra definition. `source` is either a path to a JSON file
  ///   {"dim": m, "basis": [...], "brackets": [{"i":..,"j":..,"k":..,"c":..}, ...]}
  /// (records require i < j and are antisymmetrized; duplicate (i,j,k)
  /// records are an error) or a catalog pseudo-path like "catalog:so3".
  LieAlgebra load_algebra(const std::string & source, double tolerance = 1e-9);

  /// Writes the algebra in the definition format, listing the nonzero
  /// constants with i < j in (i, j, k) order.
  void save_algebra(const LieAlgebra & g, const std::string & path);

  /// Loads a representation definition. `source` is a path to a JSON file
  ///   {"algebra_dim": m, "degree": n, "matrices": [...]}
  /// with each matrix given row-major (nested rows or a flat length-n^2
  /// array), or a catalog pseudo-path like "catalog:sl2_defining".
  Representation load_representation(const std::string & source, double tolerance = 1e-9);

  /// Writes the representation in the definition format with row-major
  /// nested rows.
  void save_representation(const Representation & rep, const std::string & path);

}

#endif
