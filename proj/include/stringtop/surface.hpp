// Oriented surfaces with boundary presented as one-vertex ribbon graphs.
//
// The cyclic dart order is read counterclockwise with respect to the surface
// orientation; it drives both boundary tracing and the planar structure of
// the universal-cover tree used by the crossing machinery.
#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "words.hpp"

namespace stringtop {

struct SurfaceInvariants {
  int euler_char = 0;
  int genus = 0;
  int boundary_count = 0;
  std::vector<CyclicWord> boundary_words;
};

class FatRose {
 public:
  // Accepts any sequence containing each of the 2n darts exactly once.
  static FatRose validate(Letters dart_order) {
    if (dart_order.size() % 2 != 0)
      throw malformed_surface("dart order has odd length " + std::to_string(dart_order.size()));
    const int rank = static_cast<int>(dart_order.size() / 2);
    std::vector<int> position(dart_order.size(), -1);
    for (size_t i = 0; i < dart_order.size(); ++i) {
      int code = dart_order[i].code();
      if (code < 0 || code >= static_cast<int>(dart_order.size()))
        throw malformed_surface("dart " + std::string(1, dart_order[i].symbol()) +
                                " outside alphabet of rank " + std::to_string(rank));
      if (position[code] != -1)
        throw malformed_surface("duplicate dart " + std::string(1, dart_order[i].symbol()));
      position[code] = static_cast<int>(i);
    }
    for (int code = 0; code < static_cast<int>(dart_order.size()); ++code)
      if (position[code] == -1)
        throw malformed_surface("missing dart " +
                                std::string(1, Letter::from_code(code).symbol()));
    return FatRose(rank, std::move(dart_order), std::move(position));
  }

  static FatRose one_holed_torus() {
    return validate(parse_letters("abAB"));
  }

  static FatRose pair_of_pants() {
    return validate(parse_letters("aAbB"));
  }

  // g commutator blocks (a_i, b_i, a_i^-1, b_i^-1) then b-1 blocks (c_j, c_j^-1).
  // b = 0 (closed surface) is unsupported; (0,1) is the disk, an empty rose.
  static FatRose genus_boundary(int genus, int boundary) {
    if (boundary < 1) throw malformed_surface("closed surfaces are unsupported (need b >= 1)");
    if (genus < 0) throw malformed_surface("negative genus");
    Letters order;
    int next_gen = 1;
    for (int i = 0; i < genus; ++i) {
      Letter a = Letter::generator(next_gen++);
      Letter b = Letter::generator(next_gen++);
      order.insert(order.end(), {a, b, a.inverted(), b.inverted()});
    }
    for (int j = 0; j < boundary - 1; ++j) {
      Letter c = Letter::generator(next_gen++);
      order.insert(order.end(), {c, c.inverted()});
    }
    return FatRose(next_gen - 1, std::move(order), {});
  }

  int rank() const { return rank_; }
  const Letters& dart_order() const { return dart_order_; }
  int dart_count() const { return static_cast<int>(dart_order_.size()); }

  int dart_position(Letter d) const { return position_[d.code()]; }

  bool in_alphabet(Letter l) const { return l.generator_index() <= rank_; }

  void require_alphabet(const Letters& w) const {
    for (Letter l : w)
      if (!in_alphabet(l))
        throw alphabet_mismatch("letter " + std::string(1, l.symbol()) +
                                " outside alphabet of rank " + std::to_string(rank_));
  }

  // Orientation of three distinct darts in the counterclockwise cyclic order.
  int orient(Letter d1, Letter d2, Letter d3) const {
    int n = dart_count();
    int p1 = dart_position(d1);
    int r2 = (dart_position(d2) - p1 + n) % n;
    int r3 = (dart_position(d3) - p1 + n) % n;
    return r2 < r3 ? +1 : -1;
  }

  // Position of dart d in the counterclockwise reading that starts just after
  // `back`; in (1 .. 2n-1) for d != back.
  int position_after(Letter back, Letter d) const {
    int n = dart_count();
    return (dart_position(d) - dart_position(back) + n) % n;
  }

  // Faces of the ribbon structure: walk next(d) = successor(inverse(d)).
  // Faces partition the darts; each is returned as a canonical cyclic word,
  // in order of first appearance along dart_order. The empty rose is a disk
  // whose single boundary circle carries the trivial class.
  std::vector<CyclicWord> boundary_words() const {
    if (rank_ == 0) return {CyclicWord{}};
    std::vector<bool> traced(dart_order_.size(), false);
    std::vector<CyclicWord> faces;
    for (Letter start : dart_order_) {
      if (traced[start.code()]) continue;
      Letters face;
      Letter d = start;
      do {
        traced[d.code()] = true;
        face.push_back(d);
        d = dart_order_[(dart_position(d.inverted()) + 1) % dart_order_.size()];
      } while (d != start);
      faces.push_back(canonical_form(face));
    }
    return faces;
  }

  SurfaceInvariants invariants() const {
    SurfaceInvariants inv;
    inv.boundary_words = boundary_words();
    inv.euler_char = 1 - rank_;
    inv.boundary_count = static_cast<int>(inv.boundary_words.size());
    inv.genus = (2 - inv.boundary_count - inv.euler_char) / 2;
    return inv;
  }

 private:
  FatRose(int rank, Letters order, std::vector<int> position)
      : rank_(rank), dart_order_(std::move(order)), position_(std::move(position)) {
    if (position_.empty()) {
      position_.assign(dart_order_.size(), -1);
      for (size_t i = 0; i < dart_order_.size(); ++i)
        position_[dart_order_[i].code()] = static_cast<int>(i);
    }
  }

  int rank_;
  Letters dart_order_;
  std::vector<int> position_;  // dart code -> index in dart_order_
};

// Preset names: "torus1", "pants", or "g<g>b<b>" (e.g. "g2b1").
inline FatRose surface_preset(std::string_view name) {
  if (name == "torus1") return FatRose::one_holed_torus();
  if (name == "pants") return FatRose::pair_of_pants();
  if (name.size() >= 4 && name[0] == 'g') {
    auto bpos = name.find('b', 1);
    if (bpos != std::string_view::npos) {
      try {
        int g = std::stoi(std::string(name.substr(1, bpos - 1)));
        int b = std::stoi(std::string(name.substr(bpos + 1)));
        return FatRose::genus_boundary(g, b);
      } catch (const std::logic_error&) {
        // fall through to the error below
      }
    }
  }
  throw parse_error("unknown surface preset '" + std::string(name) +
                    "' (expected torus1, pants, or g<g>b<b>)");
}

// Surface file format: a single line of darts in cyclic order, e.g. "a b A B".
inline FatRose parse_surface_line(std::string_view line) {
  Letters order;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() != 1 || !Letter::from_symbol(tok[0]))
      throw parse_error("bad dart token '" + tok + "' in surface line");
    order.push_back(*Letter::from_symbol(tok[0]));
  }
  return FatRose::validate(std::move(order));
}

}  // namespace stringtop
