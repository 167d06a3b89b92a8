// Deterministic text and JSON (schema 1) reports for the CLI commands.
// The verify renderings must be byte-identical for a fixed (surface, seed,
// trials, max_len) regardless of the worker count, so nothing
// schedule-dependent may appear here.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bialgebra.hpp"
#include "combo.hpp"
#include "diagrams.hpp"
#include "verify.hpp"

namespace stringtop {

constexpr int kReportSchema = 1;

inline nlohmann::json combo_json(const Combo& c) {
  auto arr = nlohmann::json::array();
  for (const auto& [w, coeff] : c) arr.push_back({{"word", w.str()}, {"coeff", to_string(coeff)}});
  return arr;
}

template <class Key>
nlohmann::json tensor_json(const LinearCombination<Key>& c) {
  auto arr = nlohmann::json::array();
  for (const auto& [t, coeff] : c) {
    std::vector<std::string> factors;
    for (const auto& w : t) factors.push_back(w.str());
    arr.push_back({{"factors", factors}, {"coeff", to_string(coeff)}});
  }
  return arr;
}

inline nlohmann::json bracket_report_json(const std::string& surface,
                                          const std::vector<std::string>& inputs,
                                          const Combo& result) {
  return {{"schema", kReportSchema},
          {"command", "bracket"},
          {"surface", surface},
          {"inputs", inputs},
          {"result", combo_json(result)}};
}

inline nlohmann::json cobracket_report_json(const std::string& surface, const std::string& input,
                                            const TensorCombo2& result) {
  return {{"schema", kReportSchema},
          {"command", "cobracket"},
          {"surface", surface},
          {"input", input},
          {"result", tensor_json(result)}};
}

inline nlohmann::json suite_json(const SuiteReport& s) {
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& r : s.results) {
    nlohmann::json t{{"trial", r.index}, {"words", r.words}, {"pass", r.pass}};
    if (!r.pass) t["defect"] = r.defect;
    trials.push_back(std::move(t));
  }
  nlohmann::json j{{"identity", s.identity}, {"all_pass", s.all_pass}, {"trials", trials}};
  if (s.first_failure >= 0) j["first_counterexample"] = s.results[s.first_failure].words;
  return j;
}

inline nlohmann::json verify_report_json(const std::string& surface, const std::string& identity,
                                         uint64_t seed, int trials, int max_len,
                                         const std::vector<SuiteReport>& suites) {
  bool all = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : suites) {
    all = all && s.all_pass;
    arr.push_back(suite_json(s));
  }
  return {{"schema", kReportSchema}, {"command", "verify"},   {"surface", surface},
          {"identity", identity},    {"seed", seed},          {"trials", trials},
          {"max_len", max_len},      {"suites", arr},         {"all_pass", all}};
}

inline std::string verify_report_text(const std::string& surface, const std::string& identity,
                                      uint64_t seed, int trials, int max_len,
                                      const std::vector<SuiteReport>& suites) {
  std::string out;
  out += "surface: " + surface + "\n";
  out += "identity: " + identity + "\n";
  out += "seed: " + std::to_string(seed) + "  trials: " + std::to_string(trials) +
         "  max-len: " + std::to_string(max_len) + "\n";
  bool all = true;
  for (const auto& s : suites) {
    out += "[" + s.identity + "]\n";
    for (const auto& r : s.results) {
      out += "trial " + std::to_string(r.index) + ": " + (r.pass ? "pass" : "FAIL") + " (";
      for (size_t k = 0; k < r.words.size(); ++k) {
        if (k) out += ", ";
        out += r.words[k];
      }
      out += ")";
      if (!r.pass) out += " defect = " + r.defect;
      out += "\n";
    }
    out += s.identity + ": " + (s.all_pass ? "all trials pass" : "FAILED") + "\n";
    all = all && s.all_pass;
  }
  out += all ? "result: pass\n" : "result: FAIL\n";
  return out;
}

inline nlohmann::json diagram_report_json(const std::string& label, const ChordDiagram& d,
                                          int dim) {
  SurgeryResult s = surgery_outputs(d);
  RibbonGraph g = gamma_graph(d);
  ChordDiagram dd = dual(d);
  SurgeryResult ds = surgery_outputs(dd);
  nlohmann::json cycles = nlohmann::json::array();
  for (const auto& cyc : s.output_cycles) {
    std::vector<int> sites;
    for (int arc : cyc) sites.push_back(s.arc_to[arc]);
    cycles.push_back(sites);
  }
  return {{"schema", kReportSchema},
          {"command", "diagram"},
          {"diagram", label},
          {"definition", diagram_to_json(d)},
          {"inputs", s.input_count},
          {"outputs", s.output_count},
          {"output_cycles_arrival_sites", cycles},
          {"genus", s.genus},
          {"euler_char", s.euler_char},
          {"graph", {{"vertices", g.vertex_count}, {"arcs", g.arc_count},
                     {"free_loops", g.free_loop_count}}},
          {"d", dim},
          {"degree", operator_degree(d, dim)},
          {"dual", {{"inputs", ds.input_count}, {"outputs", ds.output_count},
                    {"genus", ds.genus}, {"definition", diagram_to_json(dd)}}}};
}

inline std::string diagram_report_text(const std::string& label, const ChordDiagram& d, int dim) {
  SurgeryResult s = surgery_outputs(d);
  ChordDiagram dd = dual(d);
  SurgeryResult ds = surgery_outputs(dd);
  std::string out;
  out += "diagram: " + label + "\n";
  out += "inputs: " + std::to_string(s.input_count) + "\n";
  out += "outputs: " + std::to_string(s.output_count) + "\n";
  out += "genus: " + std::to_string(s.genus) + "\n";
  out += "euler char: " + std::to_string(s.euler_char) + "\n";
  out += "degree (d=" + std::to_string(dim) + "): " + std::to_string(operator_degree(d, dim)) +
         "\n";
  out += "dual: " + std::to_string(ds.input_count) + " input(s), " +
         std::to_string(ds.output_count) + " output(s), genus " + std::to_string(ds.genus) + "\n";
  return out;
}

}  // namespace stringtop
