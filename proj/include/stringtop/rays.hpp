// Infinite periodic rays in the universal-cover tree and the circular order
// of their ends.
//
// A site of a cyclically reduced word w = x_1 ... x_p is the gap before x_i.
// Each site spawns two rays based at a common lift of the rose vertex:
//
//   forward   W_i = x_i x_{i+1} x_{i+2} ...          (period p)
//   backward  V_i = x_{i-1}^-1 x_{i-2}^-1 ...        (period p)
//
// The rose's counterclockwise dart order makes the tree planar, so the ends
// of distinct rays acquire a circular order; crossing verdicts in the
// bialgebra module are read off from it.
#pragma once

#include <cassert>
#include <numeric>
#include <optional>
#include <span>

#include "core.hpp"
#include "surface.hpp"
#include "words.hpp"

namespace stringtop {

struct Ray {
  std::span<const Letter> word;  // cyclically reduced, any rotation, nonempty
  int site = 0;                  // 0-based gap index, before word[site]
  bool forward = true;

  static Ray forward_from(std::span<const Letter> w, int site) { return {w, site, true}; }
  static Ray backward_from(std::span<const Letter> w, int site) { return {w, site, false}; }

  int period() const { return static_cast<int>(word.size()); }

  // 1-based depth.
  Letter at(int depth) const {
    int p = period();
    if (forward) return word[(site + depth - 1) % p];
    return word[((site - depth) % p + p) % p].inverted();
  }
};

struct RayDivergence {
  int depth = 0;    // first letter where the rays differ, 1-based
  Letter first;     // that letter on ray 1
  Letter second;    // that letter on ray 2
  std::optional<Letter> entered_along;  // common letter at depth-1; empty at depth 1
};

// nullopt means the rays are equal as infinite words.
using RayComparison = std::optional<RayDivergence>;

// Letter-by-letter comparison with the Fine-Wilf cutoff: two words with
// periods p and q that agree to depth p + q - gcd(p, q) agree everywhere.
inline RayComparison ray_compare(const Ray& a, const Ray& b) {
  int p = a.period(), q = b.period();
  int bound = p + q - std::gcd(p, q);
  for (int depth = 1; depth <= bound; ++depth) {
    Letter la = a.at(depth), lb = b.at(depth);
    if (la != lb) {
      RayDivergence d;
      d.depth = depth;
      d.first = la;
      d.second = lb;
      if (depth > 1) d.entered_along = a.at(depth - 1);
      return d;
    }
  }
  return std::nullopt;
}

inline RayComparison ray_compare(const Ray& a, const Ray& b, const FatRose& rose) {
  rose.require_alphabet(Letters(a.word.begin(), a.word.end()));
  rose.require_alphabet(Letters(b.word.begin(), b.word.end()));
  return ray_compare(a, b);
}

namespace detail {

// Within the arc of ends below a divergence vertex the subtree arcs appear in
// dart order read counterclockwise starting just after the dart back toward
// the root. Returns +1 when ray `first` precedes ray `second`.
inline int arc_order(const RayDivergence& d, const FatRose& rose) {
  assert(d.entered_along);
  Letter back = d.entered_along->inverted();
  return rose.position_after(back, d.first) < rose.position_after(back, d.second) ? +1 : -1;
}

// An end with an infinitesimal push-off tag. Rays of a pushed-off strand
// carry tag +1 (forward end, just counterclockwise of a coinciding end) or
// -1 (backward end, just clockwise); unpushed rays carry tag 0.
struct End {
  Ray ray;
  int tag = 0;
};

struct PairRelation {
  RayComparison cmp;
  int tag_delta = 0;  // tag(second) - tag(first); decides order of equal words
};

inline PairRelation relate(const End& a, const End& b) {
  return {ray_compare(a.ray, b.ray), b.tag - a.tag};
}

// Orientation of three pairwise distinct ends on the circle at infinity:
// +1 when (a, b, c) is counterclockwise. rel_xy are the precomputed pairwise
// relations. At most one pair may coincide as words (distinct tags).
inline int ccw(const PairRelation& rel_ab, const PairRelation& rel_ac, const PairRelation& rel_bc,
               const FatRose& rose) {
  const bool eq_ab = !rel_ab.cmp, eq_ac = !rel_ac.cmp, eq_bc = !rel_bc.cmp;
  assert(eq_ab + eq_ac + eq_bc <= 1);
  // A coinciding pair is an epsilon-cluster: its internal counterclockwise
  // order is increasing tag, and the third end sits elsewhere.
  if (eq_ab) return rel_ab.tag_delta > 0 ? +1 : -1;
  if (eq_ac) return rel_ac.tag_delta > 0 ? -1 : +1;
  if (eq_bc) return rel_bc.tag_delta > 0 ? +1 : -1;

  const int kab = rel_ab.cmp->depth, kac = rel_ac.cmp->depth, kbc = rel_bc.cmp->depth;
  const int kmin = std::min({kab, kac, kbc});
  if (kab == kmin && kac == kmin && kbc == kmin) {
    // Tripod: all three diverge at one vertex; the cyclic dart order decides.
    return rose.orient(rel_ab.cmp->first, rel_ab.cmp->second, rel_ac.cmp->second);
  }
  // Exactly one pair stays together deeper; its arc order decides, adjusted
  // for the position of the outlier in the triple.
  if (kab > kmin) return arc_order(*rel_ab.cmp, rose);
  if (kac > kmin) return -arc_order(*rel_ac.cmp, rose);
  return arc_order(*rel_bc.cmp, rose);
}

}  // namespace detail

// Circular order of three pairwise distinct ends: +1 if (r1, r2, r3) occur
// counterclockwise among the ends of the universal-cover tree. Totally
// antisymmetric and rotation invariant. Coinciding rays are an error here;
// crossing_sign applies the push-off tie-break before ordering.
inline int end_order(const Ray& r1, const Ray& r2, const Ray& r3, const FatRose& rose) {
  detail::End a{r1, 0}, b{r2, 0}, c{r3, 0};
  auto rel_ab = detail::relate(a, b), rel_ac = detail::relate(a, c), rel_bc = detail::relate(b, c);
  if (!rel_ab.cmp || !rel_ac.cmp || !rel_bc.cmp)
    throw equal_rays_error("end_order requires pairwise distinct rays");
  return detail::ccw(rel_ab, rel_ac, rel_bc, rose);
}

}  // namespace stringtop
