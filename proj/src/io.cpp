#include "liealg/io.hpp"

#include <fstream>
#include <set>
#include <tuple>

#include <nlohmann/json.hpp>

namespace liealg
{

  namespace
  {
    using nlohmann::ordered_json;

    constexpr const char * catalog_prefix = "catalog:";

    bool is_catalog(const std::string & source)
    {
      return source.rfind(catalog_prefix, 0) == 0;
    }

    std::string catalog_name(const std::string & source)
    {
      return source.substr(std::string(catalog_prefix).size());
    }

    ordered_json read_json_file(const std::string & path)
    {
      std::ifstream in(path);
      if (!in) {
        throw ParseError(path + ": cannot open file");
      }
      try {
        return ordered_json::parse(in);
      } catch (const nlohmann::json::parse_error & e) {
        throw ParseError(path + ": " + e.what());
      }
    }

    Index require_positive_int(const ordered_json & doc, const char * key,
                               const std::string & path)
    {
      if (!doc.contains(key) || !doc[key].is_number_integer()) {
        throw ParseError(path + ": missing or non-integer \"" + key + "\"");
      }
      auto value = doc[key].get<long long>();
      if (value <= 0) {
        throw ParseError(path + ": \"" + key + "\" must be positive");
      }
      return static_cast<Index>(value);
    }

    Index record_index(const ordered_json & record, const char * key, Index dim,
                       const std::string & path, size_t position)
    {
      std::string where = path + ": brackets[" + std::to_string(position) + "]";
      if (!record.contains(key) || !record[key].is_number_integer()) {
        throw ParseError(where + ": missing or non-integer \"" + key + "\"");
      }
      auto value = record[key].get<long long>();
      if (value < 0 || value >= dim) {
        throw ParseError(where + ": \"" + key + "\" = " + std::to_string(value)
                         + " out of range [0, " + std::to_string(dim - 1) + "]");
      }
      return static_cast<Index>(value);
    }
  }

  LieAlgebra load_algebra(const std::string & source, double tolerance)
  {
    if (is_catalog(source)) {
      try {
        return catalog_algebra(catalog_name(source)).with_tolerance(tolerance);
      } catch (const std::invalid_argument & e) {
        throw ParseError(source + ": " + e.what());
      }
    }

    ordered_json doc = read_json_file(source);
    if (!doc.is_object()) {
      throw ParseError(source + ": top-level value must be an object");
    }
    Index dim = require_positive_int(doc, "dim", source);

    std::vector<std::string> names;
    if (doc.contains("basis")) {
      if (!doc["basis"].is_array()) {
        throw ParseError(source + ": \"basis\" must be an array of strings");
      }
      for (const auto & entry : doc["basis"]) {
        if (!entry.is_string()) {
          throw ParseError(source + ": \"basis\" must be an array of strings");
        }
        names.push_back(entry.get<std::string>());
      }
      if (names.size() != static_cast<size_t>(dim)) {
        throw ParseError(source + ": \"basis\" has " + std::to_string(names.size())
                         + " entries, expected " + std::to_string(dim));
      }
    }

    auto tensor = LieAlgebra::zero_tensor(dim);
    if (doc.contains("brackets")) {
      if (!doc["brackets"].is_array()) {
        throw ParseError(source + ": \"brackets\" must be an array");
      }
      std::set<std::tuple<Index, Index, Index>> seen;
      size_t position = 0;
      for (const auto & record : doc["brackets"]) {
        if (!record.is_object()) {
          throw ParseError(source + ": brackets[" + std::to_string(position)
                           + "] must be an object");
        }
        Index i = record_index(record, "i", dim, source, position);
        Index j = record_index(record, "j", dim, source, position);
        Index k = record_index(record, "k", dim, source, position);
        if (i >= j) {
          throw ParseError(source + ": brackets[" + std::to_string(position)
                           + "]: requires i < j, got i=" + std::to_string(i)
                           + ", j=" + std::to_string(j));
        }
        if (!record.contains("c") || !record["c"].is_number()) {
          throw ParseError(source + ": brackets[" + std::to_string(position)
                           + "]: missing or non-numeric \"c\"");
        }
        if (!seen.insert({i, j, k}).second) {
          throw ParseError(source + ": brackets[" + std::to_string(position)
                           + "]: duplicate record for (i,j,k)=(" + std::to_string(i) + ","
                           + std::to_string(j) + "," + std::to_string(k) + ")");
        }
        LieAlgebra::set_bracket(tensor, i, j, k, record["c"].get<double>());
        position++;
      }
    }

    return LieAlgebra(dim, std::move(tensor), std::move(names), tolerance);
  }

  void save_algebra(const LieAlgebra & g, const std::string & path)
  {
    ordered_json doc;
    doc["dim"] = g.dim();
    doc["basis"] = g.basis_names();
    ordered_json brackets = ordered_json::array();
    for (Index i = 0; i < g.dim(); i++) {
      for (Index j = i + 1; j < g.dim(); j++) {
        for (Index k = 0; k < g.dim(); k++) {
          double c = g.structure_constant(i, j, k);
          if (c != 0.0) {
            brackets.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", c}});
          }
        }
      }
    }
    doc["brackets"] = std::move(brackets);

    std::ofstream out(path);
    if (!out) {
      throw ParseError(path + ": cannot open file for writing");
    }
    out << doc.dump(2) << "\n";
  }

  namespace
  {
    Mat parse_matrix(const ordered_json & entry, Index n, const std::string & path,
                     size_t position)
    {
      std::string where = path + ": matrices[" + std::to_string(position) + "]";
      Mat mat(n, n);
      if (!entry.is_array()) {
        throw ParseError(where + ": must be an array");
      }
      if (entry.size() == static_cast<size_t>(n) && entry.front().is_array()) {
        for (Index r = 0; r < n; r++) {
          const auto & row = entry[static_cast<size_t>(r)];
          if (!row.is_array() || row.size() != static_cast<size_t>(n)) {
            throw ParseError(where + ": row " + std::to_string(r) + " must have "
                             + std::to_string(n) + " entries");
          }
          for (Index c = 0; c < n; c++) {
            const auto & cell = row[static_cast<size_t>(c)];
            if (!cell.is_number()) {
              throw ParseError(where + ": non-numeric entry");
            }
            mat(r, c) = cell.get<double>();
          }
        }
        return mat;
      }
      if (entry.size() == static_cast<size_t>(n * n)) {
        for (Index r = 0; r < n; r++) {
          for (Index c = 0; c < n; c++) {
            const auto & cell = entry[static_cast<size_t>(r * n + c)];
            if (!cell.is_number()) {
              throw ParseError(where + ": non-numeric entry");
            }
            mat(r, c) = cell.get<double>();
          }
        }
        return mat;
      }
      throw ParseError(where + ": expected " + std::to_string(n) + " rows or a flat array of "
                       + std::to_string(n * n) + " entries");
    }
  }

  Representation load_representation(const std::string & source, double tolerance)
  {
    if (is_catalog(source)) {
      try {
        return catalog_representation(catalog_name(source)).with_tolerance(tolerance);
      } catch (const std::invalid_argument & e) {
        throw ParseError(source + ": " + e.what());
      }
    }

    ordered_json doc = read_json_file(source);
    if (!doc.is_object()) {
      throw ParseError(source + ": top-level value must be an object");
    }
    Index algebra_dim = require_positive_int(doc, "algebra_dim", source);
    Index degree = require_positive_int(doc, "degree", source);
    if (!doc.contains("matrices") || !doc["matrices"].is_array()) {
      throw ParseError(source + ": missing or non-array \"matrices\"");
    }
    if (doc["matrices"].size() != static_cast<size_t>(algebra_dim)) {
      throw ParseError(source + ": \"matrices\" has " + std::to_string(doc["matrices"].size())
                       + " entries, expected algebra_dim = " + std::to_string(algebra_dim));
    }
    std::vector<Mat> matrices;
    matrices.reserve(static_cast<size_t>(algebra_dim));
    size_t position = 0;
    for (const auto & entry : doc["matrices"]) {
      matrices.push_back(parse_matrix(entry, degree, source, position));
      position++;
    }
    return Representation(std::move(matrices), tolerance);
  }

  void save_representation(const Representation & rep, const std::string & path)
  {
    ordered_json doc;
    doc["algebra_dim"] = rep.algebra_dim();
    doc["degree"] = rep.degree();
    ordered_json matrices = ordered_json::array();
    for (Index i = 0; i < rep.algebra_dim(); i++) {
      ordered_json rows = ordered_json::array();
      for (Index r = 0; r < rep.degree(); r++) {
        ordered_json row = ordered_json::array();
        for (Index c = 0; c < rep.degree(); c++) {
          row.push_back(rep.matrix(i)(r, c));
        }
        rows.push_back(std::move(row));
      }
      matrices.push_back(std::move(rows));
    }
    doc["matrices"] = std::move(matrices);

    std::ofstream out(path);
    if (!out) {
      throw ParseError(path + ": cannot open file for writing");
    }
    out << doc.dump(2) << "\n";
  }

}
