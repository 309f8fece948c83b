#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace homlie {

/// Finitely generated abelian grading group Z^free_rank x Z_m1 x ... x Z_mt.
struct GradingGroup {
  std::uint32_t free_rank = 0;
  std::vector<std::int64_t> torsion_moduli;

  std::size_t coords() const { return free_rank + torsion_moduli.size(); }

  void validate() const {
    for (auto m : torsion_moduli)
      if (m < 2) throw input_error("torsion modulus must be >= 2, got " + std::to_string(m));
  }

  bool operator==(const GradingGroup&) const = default;
};

/// Group element as an integer coordinate vector; torsion coordinates are
/// kept reduced into [0, m_i) so a Degree can serve as a lookup key.
struct Degree {
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const Degree&, const Degree&) = default;
};

inline void check_degree(const GradingGroup& g, const Degree& d) {
  if (d.coords.size() != g.coords())
    throw input_error("degree has " + std::to_string(d.coords.size()) + " coordinates, group has " +
                      std::to_string(g.coords()));
}

inline Degree reduce(const GradingGroup& g, Degree d) {
  check_degree(g, d);
  for (std::size_t i = 0; i < g.torsion_moduli.size(); ++i) {
    auto& c = d.coords[g.free_rank + i];
    const auto m = g.torsion_moduli[i];
    c %= m;
    if (c < 0) c += m;
  }
  return d;
}

inline Degree degree_zero(const GradingGroup& g) { return Degree{std::vector<std::int64_t>(g.coords(), 0)}; }

inline Degree degree_add(const GradingGroup& g, const Degree& a, const Degree& b) {
  check_degree(g, a);
  check_degree(g, b);
  Degree r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return reduce(g, std::move(r));
}

inline Degree degree_neg(const GradingGroup& g, const Degree& a) {
  Degree r = a;
  for (auto& c : r.coords) c = -c;
  return reduce(g, std::move(r));
}

inline Degree degree_sub(const GradingGroup& g, const Degree& a, const Degree& b) {
  return degree_add(g, a, degree_neg(g, b));
}

inline std::string degree_str(const Degree& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d.coords[i]);
  }
  return s + ")";
}

struct BicharViolation {
  std::size_t row = 0, col = 0; // 1-based in messages
  std::string what;
};

/// Sign-valued skew-symmetric bicharacter eps(a,b) = (-1)^(a^T B b),
/// for an integer matrix B with B + B^T even entrywise.
struct Bicharacter {
  GradingGroup group;
  std::vector<std::vector<std::int64_t>> form;

  /// eps(a, b), always +1 or -1. Only entry parities matter, so the
  /// exponent is folded mod 2 throughout.
  int eps(const Degree& a, const Degree& b) const {
    check_degree(group, a);
    check_degree(group, b);
    int e = 0;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
      if ((a.coords[i] & 1) == 0) continue;
      for (std::size_t j = 0; j < b.coords.size(); ++j)
        e ^= static_cast<int>(form[i][j] & 1) & static_cast<int>(b.coords[j] & 1);
    }
    return e ? -1 : 1;
  }

  /// Even means eps(a, a) = +1; repeated bracket arguments of even degree
  /// are forced to zero in characteristic != 2.
  bool even(const Degree& a) const { return eps(a, a) == 1; }

  /// Checks skew-symmetry (B + B^T even) and well-definedness modulo each
  /// torsion coordinate; names the offending entry on failure.
  std::vector<BicharViolation> validate() const {
    std::vector<BicharViolation> out;
    const std::size_t n = group.coords();
    if (form.size() != n) {
      out.push_back({0, 0, "form must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix"});
      return out;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (form[i].size() != n) {
        out.push_back({i + 1, 0, "row " + std::to_string(i + 1) + " has wrong length"});
        return out;
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if ((form[i][j] + form[j][i]) % 2 != 0)
          out.push_back({i + 1, j + 1,
                         "B + B^T odd at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"});
    for (std::size_t t = 0; t < group.torsion_moduli.size(); ++t) {
      const std::size_t i = group.free_rank + t;
      const auto m = group.torsion_moduli[t];
      for (std::size_t j = 0; j < n; ++j) {
        if ((m * form[i][j]) % 2 != 0)
          out.push_back({i + 1, j + 1,
                         "modulus " + std::to_string(m) + " times B(" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ") is odd"});
        if ((m * form[j][i]) % 2 != 0)
          out.push_back({j + 1, i + 1,
                         "modulus " + std::to_string(m) + " times B(" + std::to_string(j + 1) + "," +
                             std::to_string(i + 1) + ") is odd"});
      }
    }
    return out;
  }

  bool operator==(const Bicharacter&) const = default;
};

} // namespace homlie
