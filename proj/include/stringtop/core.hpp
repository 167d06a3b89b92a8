// Error types and the exact rational coefficient type shared by every module.
#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stringtop {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad word/surface/diagram text or JSON.
struct parse_error : error {
  using error::error;
};

// Dart sequence that is not a one-vertex ribbon structure.
struct malformed_surface : error {
  using error::error;
};

// Word mentions a generator outside the surface alphabet.
struct alphabet_mismatch : error {
  using error::error;
};

// Chord diagram violating the partition rules.
struct invalid_diagram : error {
  using error::error;
};

// end_order called on rays that coincide as infinite words.
struct equal_rays_error : error {
  using error::error;
};

using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    s += '/';
    s += std::to_string(r.denominator());
  }
  return s;
}

// Accepts "p" or "p/q" with optional leading minus.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view t) -> long long {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size())
      throw parse_error("bad rational component '" + std::string(t) + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  long long num = parse_int(text.substr(0, slash));
  long long den = parse_int(text.substr(slash + 1));
  if (den == 0) throw parse_error("zero denominator in rational '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace stringtop
