#include <catch2/catch_amalgamated.hpp>

#include <stringtop/reports.hpp>
#include <stringtop/sampler.hpp>
#include <stringtop/verify.hpp>

using namespace stringtop;

TEST_CASE("sampled words are nonempty, bounded and canonical") {
  WordSampler sampler(1);
  for (int t = 0; t < 300; ++t) {
    CyclicWord w = sampler.sample(3, 9);
    CHECK_FALSE(w.trivial());
    CHECK(w.size() <= 9);
    CHECK(max_generator(w.letters()) <= 3);
    CHECK(canonical_form(w.letters()) == w);
    CHECK(is_cyclically_reduced(w.letters()));
  }
}

TEST_CASE("equal seeds reproduce the suite, different seeds move it") {
  FatRose torus = FatRose::one_holed_torus();
  SuiteReport r1 = run_identity_suite(torus, Identity::antisym, 42, 10, 6);
  SuiteReport r2 = run_identity_suite(torus, Identity::antisym, 42, 10, 6);
  SuiteReport r3 = run_identity_suite(torus, Identity::antisym, 43, 10, 6);
  REQUIRE(r1.results.size() == 10);
  for (int t = 0; t < 10; ++t) CHECK(r1.results[t].words == r2.results[t].words);
  bool any_differ = false;
  for (int t = 0; t < 10; ++t) any_differ = any_differ || r1.results[t].words != r3.results[t].words;
  CHECK(any_differ);
}

TEST_CASE("reports are byte-identical across worker counts") {
  FatRose pants = FatRose::pair_of_pants();
  auto render = [&](int threads) {
    std::vector<SuiteReport> suites;
    for (Identity id : parse_identities("all"))
      suites.push_back(run_identity_suite(pants, id, 7, 12, 6, threads));
    return verify_report_text("pants", "all", 7, 12, 6, suites) +
           verify_report_json("pants", "all", 7, 12, 6, suites).dump(2);
  };
  std::string serial = render(1);
  CHECK(render(2) == serial);
  CHECK(render(8) == serial);
}

TEST_CASE("the harness flags a broken identity with a witness") {
  // A deliberately sign-flipped Jacobi sum; the suite must catch it.
  DefectFn corrupted = [](const std::vector<CyclicWord>& w, const FatRose& s) {
    Combo d = goldman_bracket(goldman_bracket(Combo::term(w[0]), Combo::term(w[1]), s),
                              Combo::term(w[2]), s);
    d += goldman_bracket(goldman_bracket(Combo::term(w[1]), Combo::term(w[2]), s),
                         Combo::term(w[0]), s);
    d -= goldman_bracket(goldman_bracket(Combo::term(w[2]), Combo::term(w[0]), s),
                         Combo::term(w[1]), s);
    return DefectOutcome{d.zero(), to_string(d)};
  };
  FatRose torus = FatRose::one_holed_torus();
  SuiteReport report = run_suite(torus, Identity::jacobi, corrupted, 11, 30, 8);
  CHECK_FALSE(report.all_pass);
  REQUIRE(report.first_failure >= 0);
  const TrialResult& bad = report.results[report.first_failure];
  CHECK_FALSE(bad.pass);
  CHECK(bad.words.size() == 3);
  CHECK_FALSE(bad.defect.empty());
  CHECK(bad.defect != "0");
}

TEST_CASE("honest suites pass and the report says so") {
  FatRose torus = FatRose::one_holed_torus();
  std::vector<SuiteReport> suites;
  for (Identity id : parse_identities("all"))
    suites.push_back(run_identity_suite(torus, id, 3, 8, 5, 2));
  for (const auto& s : suites) CHECK(s.all_pass);
  std::string text = verify_report_text("torus1", "all", 3, 8, 5, suites);
  CHECK(text.find("result: pass") != std::string::npos);
  auto j = verify_report_json("torus1", "all", 3, 8, 5, suites);
  CHECK(j["schema"] == 1);
  CHECK(j["all_pass"] == true);
}

TEST_CASE("identity names parse") {
  CHECK(parse_identities("jacobi") == std::vector<Identity>{Identity::jacobi});
  CHECK(parse_identities("all").size() == 5);
  CHECK_THROWS_AS(parse_identities("pentagon"), parse_error);
}
