// Letters, free/cyclic reduction and canonical cyclic forms.
//
// A cyclic word is stored in the rotation that is minimal under the letter
// order a < A < b < B < ...; the empty cyclic word is the trivial class.
#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace stringtop {

// One generator or inverse generator. Encoded as 2*(index-1) for a generator
// and 2*(index-1)+1 for its inverse, which is exactly the canonical letter
// order and doubles as the dart index space of a rose of matching rank.
class Letter {
 public:
  constexpr Letter() = default;

  static constexpr Letter generator(int index) { return Letter(2 * (index - 1)); }
  static constexpr Letter inverse_generator(int index) { return Letter(2 * (index - 1) + 1); }
  static constexpr Letter from_code(int code) { return Letter(code); }

  constexpr int generator_index() const { return code_ / 2 + 1; }
  constexpr bool is_inverse() const { return code_ & 1; }
  constexpr int sign() const { return is_inverse() ? -1 : +1; }
  constexpr Letter inverted() const { return Letter(code_ ^ 1); }
  constexpr int code() const { return code_; }

  char symbol() const {
    int g = generator_index() - 1;
    return static_cast<char>((is_inverse() ? 'A' : 'a') + g);
  }

  static std::optional<Letter> from_symbol(char c) {
    if (c >= 'a' && c <= 'z') return generator(c - 'a' + 1);
    if (c >= 'A' && c <= 'Z') return inverse_generator(c - 'A' + 1);
    return std::nullopt;
  }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  explicit constexpr Letter(int code) : code_(static_cast<int16_t>(code)) {}
  int16_t code_ = 0;
};

using Letters = std::vector<Letter>;

inline Letters parse_letters(std::string_view text) {
  Letters out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    auto l = Letter::from_symbol(text[i]);
    if (!l)
      throw parse_error("invalid character '" + std::string(1, text[i]) + "' at position " +
                        std::to_string(i + 1) + " in word \"" + std::string(text) + "\"");
    out.push_back(*l);
  }
  return out;
}

inline std::string to_string(const Letters& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) s += l.symbol();
  return s;
}

inline int max_generator(const Letters& w) {
  int m = 0;
  for (Letter l : w) m = std::max(m, l.generator_index());
  return m;
}

inline Letters inverted(const Letters& w) {
  Letters out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

inline Letters rotated(const Letters& w, size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  Letters out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + k, w.end());
  out.insert(out.end(), w.begin(), w.begin() + k);
  return out;
}

// A freely reduced word (no adjacent letter cancels its neighbor).
class Word {
 public:
  Word() = default;

  const Letters& letters() const { return letters_; }
  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  friend Word free_reduce(const Letters&);
  explicit Word(Letters reduced) : letters_(std::move(reduced)) {}
  Letters letters_;
};

inline Word free_reduce(const Letters& raw) {
  Letters stack;
  stack.reserve(raw.size());
  for (Letter l : raw) {
    if (!stack.empty() && stack.back() == l.inverted())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

inline bool is_cyclically_reduced(const Letters& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] == w[i].inverted()) return false;
  return w.size() < 2 || w.front() != w.back().inverted();
}

// A cyclically reduced cyclic word in canonical (minimal) rotation.
// Ordered shortlex so that linear combinations have a stable term order.
class CyclicWord {
 public:
  CyclicWord() = default;

  const Letters& letters() const { return letters_; }
  size_t size() const { return letters_.size(); }
  bool trivial() const { return letters_.empty(); }

  std::string str() const { return trivial() ? "1" : to_string(letters_); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    for (size_t i = 0; i < a.letters_.size(); ++i)
      if (auto c = a.letters_[i] <=> b.letters_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  friend CyclicWord canonical_form(const Letters&);
  explicit CyclicWord(Letters canonical) : letters_(std::move(canonical)) {}
  Letters letters_;
};

// Minimal rotation under the letter order. Input must be cyclically reduced;
// reduction is the caller's job (cyclic_reduce below does both).
inline CyclicWord canonical_form(const Letters& w) {
  assert(is_cyclically_reduced(w));
  if (w.empty()) return CyclicWord{};
  size_t best = 0;
  auto less_rotation = [&](size_t r, size_t s) {
    for (size_t i = 0; i < w.size(); ++i) {
      Letter a = w[(r + i) % w.size()];
      Letter b = w[(s + i) % w.size()];
      if (a != b) return a < b;
    }
    return false;
  };
  for (size_t r = 1; r < w.size(); ++r)
    if (less_rotation(r, best)) best = r;
  return CyclicWord(rotated(w, best));
}

// Cancels first-against-last until cyclically reduced, then canonicalizes.
inline CyclicWord cyclic_reduce(const Word& w) {
  const Letters& l = w.letters();
  size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == l[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  return canonical_form(Letters(l.begin() + lo, l.begin() + hi));
}

// Full pipeline from an arbitrary letter sequence to a class.
inline CyclicWord make_class(const Letters& raw) { return cyclic_reduce(free_reduce(raw)); }

inline CyclicWord parse_class(std::string_view text) { return make_class(parse_letters(text)); }

}  // namespace stringtop
