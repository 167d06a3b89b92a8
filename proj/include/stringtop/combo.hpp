// Formal rational-coefficient sums of classes and of tensor tuples of classes.
//
// Terms with the trivial class (or any trivial tensor factor) are identified
// with zero, and zero coefficients are never stored, so equality of
// combinations is plain map equality.
#pragma once

#include <array>
#include <map>
#include <string>

#include "core.hpp"
#include "words.hpp"

namespace stringtop {

inline bool is_null_class(const CyclicWord& w) { return w.trivial(); }

template <size_t N>
bool is_null_class(const std::array<CyclicWord, N>& t) {
  for (const auto& w : t)
    if (w.trivial()) return true;
  return false;
}

template <class Key>
class LinearCombination {
 public:
  using key_type = Key;
  using term_map = std::map<Key, Rational>;

  LinearCombination() = default;

  static LinearCombination term(Key k, Rational c = Rational(1)) {
    LinearCombination out;
    out.add(std::move(k), c);
    return out;
  }

  void add(Key k, const Rational& c) {
    if (c == Rational(0) || is_null_class(k)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
      it->second += c;
      if (it->second == Rational(0)) terms_.erase(it);
    }
  }

  void add_scaled(const LinearCombination& other, const Rational& scale) {
    if (scale == Rational(0)) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    add_scaled(o, Rational(1));
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    add_scaled(o, Rational(-1));
    return *this;
  }
  LinearCombination& operator*=(const Rational& s) {
    if (s == Rational(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    a += b;
    return a;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    a -= b;
    return a;
  }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) {
    a *= s;
    return a;
  }
  friend LinearCombination operator-(LinearCombination a) {
    a *= Rational(-1);
    return a;
  }

  bool zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const term_map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  term_map terms_;
};

using Combo = LinearCombination<CyclicWord>;
using TensorCombo2 = LinearCombination<std::array<CyclicWord, 2>>;
using TensorCombo3 = LinearCombination<std::array<CyclicWord, 3>>;

// c1 + lambda * c2.
template <class Key>
LinearCombination<Key> combine(const LinearCombination<Key>& c1, const LinearCombination<Key>& c2,
                               const Rational& lambda) {
  LinearCombination<Key> out = c1;
  out.add_scaled(c2, lambda);
  return out;
}

inline std::string render_key(const CyclicWord& w) { return w.str(); }

template <size_t N>
std::string render_key(const std::array<CyclicWord, N>& t) {
  std::string s = "(";
  for (size_t i = 0; i < N; ++i) {
    if (i) s += ", ";
    s += t[i].str();
  }
  s += ")";
  return s;
}

// "+1 ab -2/3 (b, a)" style; "0" when empty. Terms come out in canonical order.
template <class Key>
std::string to_string(const LinearCombination<Key>& c) {
  if (c.zero()) return "0";
  std::string s;
  for (const auto& [k, coeff] : c) {
    if (!s.empty()) s += ' ';
    if (coeff > Rational(0)) s += '+';
    s += to_string(coeff);
    s += ' ';
    s += render_key(k);
  }
  return s;
}

}  // namespace stringtop
