#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "constructions.hpp"

namespace homlie {

using json = nlohmann::json;

namespace detail {

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error(path + ": cannot open file");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw input_error(path + ": parse error: " + e.what());
  }
  return j;
}

template <class T>
T get_field(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw input_error(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw input_error(where + ": field '" + key + "': " + e.what());
  }
}

inline Degree degree_from_json(const GradingGroup& g, const json& j, const std::string& where) {
  Degree d;
  if (!j.is_array()) throw input_error(where + ": degree must be an array of integers");
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw input_error(where + ": degree entries must be integers");
    d.coords.push_back(c.get<std::int64_t>());
  }
  check_degree(g, d);
  return reduce(g, d);
}

inline Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                               const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw input_error(where + ": expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j.at(i);
    if (!row.is_array() || row.size() != cols)
      throw input_error(where + ": row " + std::to_string(i + 1) + " must have " +
                        std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& cell = row.at(c);
      if (!cell.is_string()) throw input_error(where + ": matrix entries must be rational strings");
      m.at(i, c) = rat_parse(cell.get<std::string>());
    }
  }
  return m;
}

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace detail

struct LoadedAlgebra {
  HomColorAlgebra algebra;
  GradingReport grading;                     // run eagerly at load
  std::vector<BicharViolation> bicharacter;  // ditto
};

/// Parse and validate an algebra document. Schema errors, normalization
/// conflicts and invalid bicharacters throw input_error; grading and
/// bicharacter reports are attached for the caller to surface.
inline LoadedAlgebra load_algebra_json(const json& j, const std::string& where) {
  LoadedAlgebra out;
  auto& alg = out.algebra;

  const json jg = detail::get_field<json>(j, "group", where);
  alg.space.group.free_rank = detail::get_field<std::uint32_t>(jg, "free_rank", where + ".group");
  alg.space.group.torsion_moduli =
      detail::get_field<std::vector<std::int64_t>>(jg, "torsion", where + ".group");
  alg.space.group.validate();
  const std::size_t nc = alg.space.group.coords();

  const json jb = detail::get_field<json>(j, "bicharacter", where);
  alg.space.chi.group = alg.space.group;
  alg.space.chi.form.clear();
  {
    const json mat = detail::get_field<json>(jb, "matrix", where + ".bicharacter");
    if (!mat.is_array() || mat.size() != nc)
      throw input_error(where + ".bicharacter: matrix must be " + std::to_string(nc) + "x" +
                        std::to_string(nc));
    for (const auto& row : mat) {
      if (!row.is_array() || row.size() != nc)
        throw input_error(where + ".bicharacter: matrix must be square of group size");
      std::vector<std::int64_t> r;
      for (const auto& x : row) {
        if (!x.is_number_integer())
          throw input_error(where + ".bicharacter: entries must be integers");
        r.push_back(x.get<std::int64_t>());
      }
      alg.space.chi.form.push_back(std::move(r));
    }
  }
  out.bicharacter = alg.space.chi.validate();
  if (!out.bicharacter.empty())
    throw input_error(where + ".bicharacter: " + out.bicharacter.front().what);

  const auto arity = detail::get_field<std::uint32_t>(j, "arity", where);
  if (arity < 2) throw input_error(where + ": arity must be >= 2");

  const json jbasis = detail::get_field<json>(j, "basis", where);
  if (!jbasis.is_array() || jbasis.empty()) throw input_error(where + ": basis must be non-empty");
  for (const auto& b : jbasis) {
    BasisElement e;
    e.name = detail::get_field<std::string>(b, "name", where + ".basis");
    e.degree = detail::degree_from_json(alg.space.group, detail::get_field<json>(b, "degree", where),
                                        where + ".basis." + e.name);
    alg.space.basis.push_back(std::move(e));
  }
  alg.space.validate();
  const std::size_t dim = alg.space.dim();

  alg.alpha = HomogeneousMap{
      detail::matrix_from_json(detail::get_field<json>(j, "alpha", where), dim, dim, where + ".alpha"),
      degree_zero(alg.space.group)};

  std::vector<RawBracketEntry> raw;
  const json jbr = detail::get_field<json>(j, "brackets", where);
  if (!jbr.is_array()) throw input_error(where + ": brackets must be an array");
  for (const auto& e : jbr) {
    RawBracketEntry r;
    const auto args = detail::get_field<std::vector<std::int64_t>>(e, "args", where + ".brackets");
    for (auto i : args) {
      if (i < 1 || static_cast<std::size_t>(i) > dim)
        throw input_error(where + ".brackets: basis index " + std::to_string(i) + " out of range");
      r.args.push_back(static_cast<std::uint32_t>(i - 1));
    }
    r.value = zero_vec(dim);
    const json val = detail::get_field<json>(e, "value", where + ".brackets");
    if (!val.is_array()) throw input_error(where + ".brackets: value must be an array");
    for (const auto& term : val) {
      const auto bi = detail::get_field<std::int64_t>(term, "basis", where + ".brackets.value");
      if (bi < 1 || static_cast<std::size_t>(bi) > dim)
        throw input_error(where + ".brackets: value basis index out of range");
      r.value[static_cast<std::size_t>(bi - 1)] +=
          rat_parse(detail::get_field<std::string>(term, "coeff", where + ".brackets.value"));
    }
    raw.push_back(std::move(r));
  }
  alg.bracket = load_normalize(alg.space, arity, raw);
  out.grading = check_grading(alg);
  return out;
}

inline LoadedAlgebra load_algebra(const std::string& path) {
  return load_algebra_json(detail::read_json_file(path), path);
}

inline json algebra_to_json(const HomColorAlgebra& a) {
  json j;
  j["group"] = {{"free_rank", a.space.group.free_rank}, {"torsion", a.space.group.torsion_moduli}};
  j["bicharacter"] = {{"matrix", a.space.chi.form}};
  j["arity"] = a.arity();
  json basis = json::array();
  for (const auto& b : a.space.basis) basis.push_back({{"name", b.name}, {"degree", b.degree.coords}});
  j["basis"] = std::move(basis);
  j["alpha"] = detail::matrix_to_json(a.alpha.mat);
  json brackets = json::array();
  for (const auto& [t, v] : a.bracket.constants) {
    json args = json::array();
    for (auto i : t) args.push_back(i + 1);
    json value = json::array();
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) value.push_back({{"basis", c + 1}, {"coeff", rat_str(v[c])}});
    brackets.push_back({{"args", std::move(args)}, {"value", std::move(value)}});
  }
  j["brackets"] = std::move(brackets);
  return j;
}

inline void save_algebra(const HomColorAlgebra& a, const std::string& path) {
  std::ofstream o(path);
  if (!o) throw input_error(path + ": cannot open for writing");
  o << algebra_to_json(a).dump(2) << "\n";
}

/// Map document: {"degree": [int], "matrix": [[rational-string]]}.
inline HomogeneousMap load_map_json(const json& j, const GradingGroup& g, std::size_t rows,
                                    std::size_t cols, const std::string& where) {
  HomogeneousMap m;
  m.degree = detail::degree_from_json(g, detail::get_field<json>(j, "degree", where), where + ".degree");
  m.mat = detail::matrix_from_json(detail::get_field<json>(j, "matrix", where), rows, cols,
                                   where + ".matrix");
  return m;
}

inline HomogeneousMap load_map(const std::string& path, const GradingGroup& g, std::size_t rows,
                               std::size_t cols) {
  return load_map_json(detail::read_json_file(path), g, rows, cols, path);
}

inline json map_to_json(const HomogeneousMap& m) {
  return {{"degree", m.degree.coords}, {"matrix", detail::matrix_to_json(m.mat)}};
}

/// Coefficient-algebra document:
/// {"basis": [names], "products": [{"args": [i, j], "value": [{"basis": k, "coeff": "c"}]}]}
/// (1-based, unlisted products are zero, symmetric completion applied).
inline CommAssocAlgebra load_commassoc_json(const json& j, const std::string& where) {
  CommAssocAlgebra A;
  A.basis = detail::get_field<std::vector<std::string>>(j, "basis", where);
  if (A.basis.empty()) throw input_error(where + ": basis must be non-empty");
  const std::size_t d = A.dim();
  A.table.assign(d * d, zero_vec(d));
  const json prods = detail::get_field<json>(j, "products", where);
  if (!prods.is_array()) throw input_error(where + ": products must be an array");
  for (const auto& e : prods) {
    const auto args = detail::get_field<std::vector<std::int64_t>>(e, "args", where + ".products");
    if (args.size() != 2) throw input_error(where + ".products: args must have two indices");
    for (auto i : args)
      if (i < 1 || static_cast<std::size_t>(i) > d)
        throw input_error(where + ".products: index out of range");
    Vec v = zero_vec(d);
    for (const auto& term : detail::get_field<json>(e, "value", where + ".products")) {
      const auto bi = detail::get_field<std::int64_t>(term, "basis", where + ".products.value");
      if (bi < 1 || static_cast<std::size_t>(bi) > d)
        throw input_error(where + ".products: value index out of range");
      v[static_cast<std::size_t>(bi - 1)] +=
          rat_parse(detail::get_field<std::string>(term, "coeff", where + ".products.value"));
    }
    const std::size_t i = static_cast<std::size_t>(args[0] - 1), k = static_cast<std::size_t>(args[1] - 1);
    A.table[i * d + k] = v;
    A.table[k * d + i] = std::move(v);
  }
  const auto viols = A.validate();
  if (!viols.empty()) throw input_error(where + ": " + viols.front().what);
  return A;
}

inline CommAssocAlgebra load_commassoc(const std::string& path) {
  return load_commassoc_json(detail::read_json_file(path), path);
}

} // namespace homlie
