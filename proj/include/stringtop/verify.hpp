// Randomized identity suites: seeded word tuples, pluggable defect
// evaluation, deterministic aggregation independent of the worker count.
#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "bialgebra.hpp"
#include "combo.hpp"
#include "sampler.hpp"
#include "surface.hpp"

namespace stringtop {

enum class Identity { antisym, jacobi, cojacobi, drinfeld, involutive };

inline const char* identity_name(Identity id) {
  switch (id) {
    case Identity::antisym: return "antisym";
    case Identity::jacobi: return "jacobi";
    case Identity::cojacobi: return "cojacobi";
    case Identity::drinfeld: return "drinfeld";
    case Identity::involutive: return "involutive";
  }
  return "?";
}

inline std::vector<Identity> parse_identities(const std::string& name) {
  if (name == "antisym") return {Identity::antisym};
  if (name == "jacobi") return {Identity::jacobi};
  if (name == "cojacobi") return {Identity::cojacobi};
  if (name == "drinfeld") return {Identity::drinfeld};
  if (name == "involutive") return {Identity::involutive};
  if (name == "all")
    return {Identity::antisym, Identity::jacobi, Identity::cojacobi, Identity::drinfeld,
            Identity::involutive};
  throw parse_error("unknown identity '" + name +
                    "' (expected antisym|jacobi|cojacobi|drinfeld|involutive|all)");
}

inline int identity_arity(Identity id) {
  switch (id) {
    case Identity::antisym: return 2;
    case Identity::jacobi: return 3;
    case Identity::cojacobi: return 1;
    case Identity::drinfeld: return 2;
    case Identity::involutive: return 1;
  }
  return 1;
}

struct DefectOutcome {
  bool zero = true;
  std::string witness;  // rendering of the nonzero defect
};

// Takes the sampled tuple, returns whether the defect vanished.
using DefectFn = std::function<DefectOutcome(const std::vector<CyclicWord>&, const FatRose&)>;

inline DefectFn identity_defect(Identity id) {
  switch (id) {
    case Identity::antisym:
      return [](const std::vector<CyclicWord>& w, const FatRose& s) {
        Combo d = goldman_bracket(w[0], w[1], s) + goldman_bracket(w[1], w[0], s);
        return DefectOutcome{d.zero(), to_string(d)};
      };
    case Identity::jacobi:
      return [](const std::vector<CyclicWord>& w, const FatRose& s) {
        Combo d = jacobi_defect(Combo::term(w[0]), Combo::term(w[1]), Combo::term(w[2]), s);
        return DefectOutcome{d.zero(), to_string(d)};
      };
    case Identity::cojacobi:
      return [](const std::vector<CyclicWord>& w, const FatRose& s) {
        TensorCombo3 d = cojacobi_defect(Combo::term(w[0]), s);
        return DefectOutcome{d.zero(), to_string(d)};
      };
    case Identity::drinfeld:
      return [](const std::vector<CyclicWord>& w, const FatRose& s) {
        TensorCombo2 d = drinfeld_defect(Combo::term(w[0]), Combo::term(w[1]), s);
        return DefectOutcome{d.zero(), to_string(d)};
      };
    case Identity::involutive:
      return [](const std::vector<CyclicWord>& w, const FatRose& s) {
        Combo d = e_operator(Combo::term(w[0]), s);
        return DefectOutcome{d.zero(), to_string(d)};
      };
  }
  throw error("unreachable");
}

struct TrialResult {
  int index = 0;
  std::vector<std::string> words;
  bool pass = true;
  std::string defect;  // only set on failure
};

struct SuiteReport {
  std::string identity;
  std::vector<TrialResult> results;
  bool all_pass = true;
  int first_failure = -1;
};

// Trials are numbered 0..trials-1; trial t draws its words from a generator
// seeded by (seed, identity, t), so the report is byte-identical for any
// worker count.
inline SuiteReport run_suite(const FatRose& surface, Identity id, const DefectFn& defect,
                             uint64_t seed, int trials, int max_len, int threads = 1) {
  SuiteReport report;
  report.identity = identity_name(id);
  report.results.resize(trials);

  const int arity = identity_arity(id);
  const uint64_t id_salt = static_cast<uint64_t>(id) + 1;
  auto run_trial = [&](int t) {
    WordSampler sampler(trial_seed(seed ^ (id_salt << 56), static_cast<uint64_t>(t)));
    std::vector<CyclicWord> tuple;
    tuple.reserve(arity);
    for (int k = 0; k < arity; ++k) tuple.push_back(sampler.sample(surface.rank(), max_len));
    DefectOutcome out = defect(tuple, surface);
    TrialResult& r = report.results[t];
    r.index = t;
    for (const auto& w : tuple) r.words.push_back(w.str());
    r.pass = out.zero;
    if (!out.zero) r.defect = out.witness;
  };

  threads = std::max(1, std::min(threads, trials));
  if (threads == 1) {
    for (int t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) run_trial(t);
      });
    for (auto& th : pool) th.join();
  }

  for (const auto& r : report.results) {
    if (!r.pass) {
      report.all_pass = false;
      if (report.first_failure < 0) report.first_failure = r.index;
    }
  }
  return report;
}

inline SuiteReport run_identity_suite(const FatRose& surface, Identity id, uint64_t seed,
                                      int trials, int max_len, int threads = 1) {
  return run_suite(surface, id, identity_defect(id), seed, trials, max_len, threads);
}

}  // namespace stringtop
