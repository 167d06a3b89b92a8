// String operators on a surface: crossing verdicts for strand pairs, the
// Goldman bracket, the Turaev cobracket, their composite e, and the defect
// operators for the Lie bialgebra identities.
//
// Two strands through the rose vertex cross exactly when their four ends
// alternate around the circle of ends of the universal-cover tree. The sign
// convention is pinned by [a, b] = +(ab) on the one-holed torus (a, b, A, B).
#pragma once

#include <array>
#include <cassert>
#include <span>

#include "combo.hpp"
#include "core.hpp"
#include "rays.hpp"
#include "surface.hpp"
#include "words.hpp"

namespace stringtop {

namespace detail {

inline PairRelation reversed(const PairRelation& r) {
  PairRelation out = r;
  out.tag_delta = -r.tag_delta;
  if (out.cmp) std::swap(out.cmp->first, out.cmp->second);
  return out;
}

// Coinciding rays (strands that run parallel or antiparallel forever) are
// resolved by pushing one strand off its curve: the pushed strand's forward
// end moves infinitesimally counterclockwise, its backward end clockwise.
// For distinct operands the second is pushed; for a self-pair the site with
// the larger index, so the verdicts of (i, j) and (j, i) come from one
// geometric configuration.
inline int crossing_sign_impl(std::span<const Letter> alpha, int site_i,
                              std::span<const Letter> beta, int site_j, const FatRose& rose,
                              bool self_pair) {
  const bool push_first = self_pair && site_i > site_j;
  const int tag_first = push_first ? 1 : 0;
  const int tag_second = push_first ? 0 : 1;

  // Ends indexed 0 = W_i, 1 = V_i, 2 = W_j, 3 = V_j.
  const std::array<End, 4> ends{
      End{Ray::forward_from(alpha, site_i), +tag_first},
      End{Ray::backward_from(alpha, site_i), -tag_first},
      End{Ray::forward_from(beta, site_j), +tag_second},
      End{Ray::backward_from(beta, site_j), -tag_second},
  };

  PairRelation rel[4][4];
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y) {
      rel[x][y] = relate(ends[x], ends[y]);
      rel[y][x] = reversed(rel[x][y]);
    }
  // Within one site the rays always split at depth 1 (cyclic reducedness).
  assert(rel[0][1].cmp && rel[2][3].cmp);

  // ccw order seen from the base end W_i: x comes before y.
  auto before = [&](int x, int y) { return ccw(rel[0][x], rel[0][y], rel[x][y], rose) == +1; };

  // Sort (V_i, W_j, V_j) counterclockwise starting just after W_i.
  std::array<int, 3> order{1, 2, 3};
  if (before(order[1], order[0])) std::swap(order[0], order[1]);
  if (before(order[2], order[1])) {
    std::swap(order[1], order[2]);
    if (before(order[1], order[0])) std::swap(order[0], order[1]);
  }

  // Alternation: beta's pair must separate alpha's, i.e. V_i in the middle.
  // Counterclockwise (W_i, W_j, V_i, V_j) is +1, (W_i, V_j, V_i, W_j) is -1.
  if (order[1] != 1) return 0;
  return order[0] == 2 ? +1 : -1;
}

}  // namespace detail

// Verdict for the strand pair at site i of alpha and site j of beta.
// Sites are 1-based gaps; self_pair marks two sites of one curve.
inline int crossing_sign(const CyclicWord& alpha, int site_i, const CyclicWord& beta, int site_j,
                         const FatRose& rose, bool self_pair) {
  if (alpha.trivial() || beta.trivial()) throw error("crossing_sign needs nontrivial classes");
  if (site_i < 1 || site_i > static_cast<int>(alpha.size()) || site_j < 1 ||
      site_j > static_cast<int>(beta.size()))
    throw error("site index out of range");
  rose.require_alphabet(alpha.letters());
  rose.require_alphabet(beta.letters());
  assert(!self_pair || (alpha == beta && site_i != site_j));
  return detail::crossing_sign_impl(alpha.letters(), site_i - 1, beta.letters(), site_j - 1, rose,
                                    self_pair);
}

// Word-level bracket over any cyclically reduced rotations; the public
// operators feed canonical forms, tests also feed rotations.
inline Combo bracket_words(const Letters& alpha, const Letters& beta, const FatRose& rose) {
  Combo out;
  const int p = static_cast<int>(alpha.size()), q = static_cast<int>(beta.size());
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      int sign = detail::crossing_sign_impl(alpha, i, beta, j, rose, false);
      if (sign == 0) continue;
      Letters glued = rotated(alpha, i);
      Letters from_j = rotated(beta, j);
      glued.insert(glued.end(), from_j.begin(), from_j.end());
      out.add(make_class(glued), Rational(sign));
    }
  }
  return out;
}

inline TensorCombo2 cobracket_word(const Letters& w, const FatRose& rose) {
  TensorCombo2 out;
  const int p = static_cast<int>(w.size());
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (i == j) continue;
      int sign = detail::crossing_sign_impl(w, i, w, j, rose, true);
      if (sign == 0) continue;
      // Split at the double point: letters i..j-1 and j..i-1, cyclically.
      // Both segments are freely reduced already; terms with a factor that
      // collapses to the trivial class are dropped by the combination.
      Letters first, second;
      for (int k = i; k != j; k = (k + 1) % p) first.push_back(w[k]);
      for (int k = j; k != i; k = (k + 1) % p) second.push_back(w[k]);
      out.add({make_class(first), make_class(second)}, Rational(sign));
    }
  }
  return out;
}

inline Combo goldman_bracket(const Combo& x, const Combo& y, const FatRose& rose) {
  for (const auto& [w, c] : x) rose.require_alphabet(w.letters());
  for (const auto& [w, c] : y) rose.require_alphabet(w.letters());
  Combo out;
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y)
      out.add_scaled(bracket_words(wx.letters(), wy.letters(), rose), cx * cy);
  return out;
}

inline TensorCombo2 turaev_cobracket(const Combo& x, const FatRose& rose) {
  TensorCombo2 out;
  for (const auto& [w, c] : x) {
    rose.require_alphabet(w.letters());
    out.add_scaled(cobracket_word(w.letters(), rose), c);
  }
  return out;
}

inline Combo goldman_bracket(const CyclicWord& a, const CyclicWord& b, const FatRose& rose) {
  return goldman_bracket(Combo::term(a), Combo::term(b), rose);
}

inline TensorCombo2 turaev_cobracket(const CyclicWord& w, const FatRose& rose) {
  return turaev_cobracket(Combo::term(w), rose);
}

// e = c2 after s2; the involutive identity says this is zero on everything.
inline Combo e_operator(const Combo& x, const FatRose& rose) {
  Combo out;
  for (const auto& [pair, c] : turaev_cobracket(x, rose))
    out.add_scaled(goldman_bracket(pair[0], pair[1], rose), c);
  return out;
}

inline TensorCombo2 swap_factors(const TensorCombo2& t) {
  TensorCombo2 out;
  for (const auto& [pair, c] : t) out.add({pair[1], pair[0]}, c);
  return out;
}

// tau(u (x) v (x) w) = w (x) u (x) v
inline TensorCombo3 rotate_factors(const TensorCombo3& t) {
  TensorCombo3 out;
  for (const auto& [triple, c] : t) out.add({triple[2], triple[0], triple[1]}, c);
  return out;
}

// (s2 (x) id) applied to a 2-tensor.
inline TensorCombo3 cobracket_first_factor(const TensorCombo2& t, const FatRose& rose) {
  TensorCombo3 out;
  for (const auto& [pair, c] : t)
    for (const auto& [split, d] : cobracket_word(pair[0].letters(), rose))
      out.add({split[0], split[1], pair[1]}, c * d);
  return out;
}

// [u (x) v, w] = [u, w] (x) v + u (x) [v, w]
inline TensorCombo2 bracket_tensor_with(const TensorCombo2& t, const Combo& w,
                                        const FatRose& rose) {
  TensorCombo2 out;
  for (const auto& [pair, c] : t) {
    for (const auto& [term, d] : goldman_bracket(Combo::term(pair[0]), w, rose))
      out.add({term, pair[1]}, c * d);
    for (const auto& [term, d] : goldman_bracket(Combo::term(pair[1]), w, rose))
      out.add({pair[0], term}, c * d);
  }
  return out;
}

// [w, u (x) v] = [w, u] (x) v + u (x) [w, v]
inline TensorCombo2 bracket_with_tensor(const Combo& w, const TensorCombo2& t,
                                        const FatRose& rose) {
  TensorCombo2 out;
  for (const auto& [pair, c] : t) {
    for (const auto& [term, d] : goldman_bracket(w, Combo::term(pair[0]), rose))
      out.add({term, pair[1]}, c * d);
    for (const auto& [term, d] : goldman_bracket(w, Combo::term(pair[1]), rose))
      out.add({pair[0], term}, c * d);
  }
  return out;
}

// [[x,y],z] + [[y,z],x] + [[z,x],y]
inline Combo jacobi_defect(const Combo& x, const Combo& y, const Combo& z, const FatRose& rose) {
  Combo out = goldman_bracket(goldman_bracket(x, y, rose), z, rose);
  out += goldman_bracket(goldman_bracket(y, z, rose), x, rose);
  out += goldman_bracket(goldman_bracket(z, x, rose), y, rose);
  return out;
}

// (id + tau + tau^2) (s2 (x) id) s2
inline TensorCombo3 cojacobi_defect(const Combo& x, const FatRose& rose) {
  TensorCombo3 base = cobracket_first_factor(turaev_cobracket(x, rose), rose);
  TensorCombo3 once = rotate_factors(base);
  return base + once + rotate_factors(once);
}

// s2([x,y]) - [s2(x), y] - [x, s2(y)]
inline TensorCombo2 drinfeld_defect(const Combo& x, const Combo& y, const FatRose& rose) {
  TensorCombo2 out = turaev_cobracket(goldman_bracket(x, y, rose), rose);
  out -= bracket_tensor_with(turaev_cobracket(x, rose), y, rose);
  out -= bracket_with_tensor(x, turaev_cobracket(y, rose), rose);
  return out;
}

}  // namespace stringtop
