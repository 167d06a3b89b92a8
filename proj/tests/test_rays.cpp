#include <catch2/catch_amalgamated.hpp>

#include <stringtop/rays.hpp>
#include <stringtop/sampler.hpp>

using namespace stringtop;

namespace {

const Letter a = Letter::generator(1);
const Letter A = Letter::inverse_generator(1);
const Letter b = Letter::generator(2);
const Letter B = Letter::inverse_generator(2);

Ray fwd(const Letters& w, int site1) { return Ray::forward_from(w, site1 - 1); }
Ray bwd(const Letters& w, int site1) { return Ray::backward_from(w, site1 - 1); }

}  // namespace

TEST_CASE("ray letters expand the periodic words") {
  // w = abAb: W_1 = a b A b a ..., V_4 = a B A B a ... (x3^-1 x2^-1 x1^-1 x4^-1)
  Letters w = parse_letters("abAb");
  Ray w1 = fwd(w, 1), v4 = bwd(w, 4);
  Letters w1_prefix, v4_prefix;
  for (int d = 1; d <= 8; ++d) {
    w1_prefix.push_back(w1.at(d));
    v4_prefix.push_back(v4.at(d));
  }
  CHECK(to_string(w1_prefix) == "abAbabAb");
  CHECK(to_string(v4_prefix) == "aBABaBAB");
}

TEST_CASE("ray comparison locates the first divergence") {
  FatRose torus = FatRose::one_holed_torus();
  Letters wa = parse_letters("a"), wb = parse_letters("b");

  SECTION("distinct first letters diverge at depth 1 with no incoming dart") {
    auto cmp = ray_compare(fwd(wa, 1), fwd(wb, 1), torus);
    REQUIRE(cmp.has_value());
    CHECK(cmp->depth == 1);
    CHECK(cmp->first == a);
    CHECK(cmp->second == b);
    CHECK_FALSE(cmp->entered_along.has_value());
  }

  SECTION("W_1 vs V_4 of abAb, hand expansion frozen above") {
    Letters w = parse_letters("abAb");
    auto cmp = ray_compare(fwd(w, 1), bwd(w, 4), torus);
    REQUIRE(cmp.has_value());
    CHECK(cmp->depth == 2);
    CHECK(cmp->first == b);
    CHECK(cmp->second == B);
    REQUIRE(cmp->entered_along.has_value());
    CHECK(*cmp->entered_along == a);
  }

  SECTION("a ray equals itself") {
    CHECK_FALSE(ray_compare(fwd(wa, 1), fwd(wa, 1), torus).has_value());
  }
}

TEST_CASE("Fine-Wilf cutoff identifies rays of a power and its root") {
  // abab and ab generate the same forward ray; periods 4 and 2 agree forever
  // once they agree to depth 4 + 2 - gcd = 4.
  Letters power = parse_letters("abab"), primitive = parse_letters("ab");
  CHECK_FALSE(ray_compare(fwd(power, 1), fwd(primitive, 1)).has_value());
  CHECK_FALSE(ray_compare(bwd(power, 1), bwd(primitive, 1)).has_value());
  // sites one period apart on the power have identical rays
  CHECK_FALSE(ray_compare(fwd(power, 1), fwd(power, 3)).has_value());
  // but adjacent sites differ
  CHECK(ray_compare(fwd(power, 1), fwd(power, 2)).has_value());
}

TEST_CASE("end order at the root follows the dart order") {
  FatRose torus = FatRose::one_holed_torus();  // (a, b, A, B) counterclockwise
  Letters wa = parse_letters("a"), wb = parse_letters("b");
  Ray ra = fwd(wa, 1);       // ends with darts a, a, a...
  Ray rb = fwd(wb, 1);       // b...
  Ray rA = bwd(wa, 1);       // A...

  CHECK(end_order(ra, rb, rA, torus) == +1);
  CHECK(end_order(ra, rA, rb, torus) == -1);
  // rotation invariance
  CHECK(end_order(rb, rA, ra, torus) == +1);
  CHECK(end_order(rA, ra, rb, torus) == +1);
}

TEST_CASE("end order resolved inside a subtree, hand-drawn tree") {
  // On the torus rose, V_1 = B a B A ... and V_3 = B A B a ... of abAb share
  // the first dart B and split at depth 2 into a and A. Reading the dart
  // order counterclockwise after the back dart b gives A before a, so V_3
  // precedes V_1 inside the B-subtree arc and (V_1, V_3, W_1) is clockwise.
  FatRose torus = FatRose::one_holed_torus();
  Letters w = parse_letters("abAb");
  CHECK(end_order(bwd(w, 1), bwd(w, 3), fwd(w, 1), torus) == -1);
  CHECK(end_order(bwd(w, 3), bwd(w, 1), fwd(w, 1), torus) == +1);
}

TEST_CASE("end order rejects coinciding rays") {
  FatRose torus = FatRose::one_holed_torus();
  Letters power = parse_letters("abab"), primitive = parse_letters("ab");
  Letters wb = parse_letters("b");
  CHECK_THROWS_AS(end_order(fwd(power, 1), fwd(primitive, 1), fwd(wb, 1), torus),
                  equal_rays_error);
}

TEST_CASE("end order is alternating and rotation invariant on random rays") {
  FatRose surface = FatRose::genus_boundary(1, 2);  // rank 3
  WordSampler sampler(5150);
  int checked = 0;
  while (checked < 150) {
    CyclicWord cw1 = sampler.sample(3, 6), cw2 = sampler.sample(3, 6),
               cw3 = sampler.sample(3, 6);
    const Letters &l1 = cw1.letters(), &l2 = cw2.letters(), &l3 = cw3.letters();
    Ray r1 = sampler.below(2) ? fwd(l1, 1) : bwd(l1, 1);
    Ray r2 = sampler.below(2) ? fwd(l2, 1) : bwd(l2, 1);
    Ray r3 = sampler.below(2) ? fwd(l3, 1) : bwd(l3, 1);
    if (!ray_compare(r1, r2) || !ray_compare(r1, r3) || !ray_compare(r2, r3)) continue;
    ++checked;
    int o = end_order(r1, r2, r3, surface);
    CHECK(end_order(r2, r1, r3, surface) == -o);
    CHECK(end_order(r1, r3, r2, surface) == -o);
    CHECK(end_order(r3, r1, r2, surface) == o);
    CHECK(end_order(r2, r3, r1, surface) == o);
  }
}
