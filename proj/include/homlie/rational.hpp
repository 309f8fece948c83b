#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace homlie {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Kept canonical by the backend: lowest terms,
/// positive denominator, zero as 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// Parse "p/q" or "p" (optional leading '-'). Rejects q = 0 and anything
/// that is not a plain integer fraction.
inline Rational rat_parse(std::string_view s) {
  auto fail = [&] { throw input_error("bad rational literal: '" + std::string(s) + "'"); };
  if (s.empty()) fail();
  auto is_int = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      if (!is_int(s)) fail();
      const Int num{std::string(s)};
      return Rational(num);
    }
    const auto ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (!is_int(ns) || !is_int(ds)) fail();
    const Int num{std::string(ns)};
    const Int den{std::string(ds)};
    if (den == 0) fail();
    return Rational(num, den);
  } catch (const std::exception&) {
    fail();
  }
  return Rational(); // unreachable
}

/// Serialize as "p/q", or "p" when the denominator is 1.
inline std::string rat_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// ---- dense rational vectors ------------------------------------------------

using Vec = std::vector<Rational>;

inline Vec zero_vec(std::size_t n) { return Vec(n); }

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// y += c * x
inline void axpy(Vec& y, const Rational& c, const Vec& x) {
  if (c == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

inline Vec scaled(const Rational& c, const Vec& x) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

inline Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

} // namespace homlie
