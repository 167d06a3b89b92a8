// stringtop: batch front end for bracket/cobracket computations, randomized
// identity verification and chord-diagram surgery reports.
//
// Exit codes: 0 success (all trials pass), 1 verification failure, 2 input
// error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <stringtop/stringtop.hpp>

namespace {

using namespace stringtop;

FatRose load_surface(const std::string& preset, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw parse_error("cannot open surface file '" + file + "'");
    std::string line;
    std::getline(in, line);
    return parse_surface_line(line);
  }
  return surface_preset(preset);
}

std::string surface_label(const std::string& preset, const std::string& file) {
  return file.empty() ? preset : file;
}

int run_bracket(const std::string& surface, const std::string& file, const std::string& w1,
                const std::string& w2, bool json) {
  FatRose rose = load_surface(surface, file);
  Combo result = goldman_bracket(Combo::term(parse_class(w1)), Combo::term(parse_class(w2)), rose);
  if (json)
    std::cout << bracket_report_json(surface_label(surface, file), {w1, w2}, result).dump(2)
              << "\n";
  else
    std::cout << to_string(result) << "\n";
  return 0;
}

int run_cobracket(const std::string& surface, const std::string& file, const std::string& w,
                  bool json) {
  FatRose rose = load_surface(surface, file);
  TensorCombo2 result = turaev_cobracket(Combo::term(parse_class(w)), rose);
  if (json)
    std::cout << cobracket_report_json(surface_label(surface, file), w, result).dump(2) << "\n";
  else
    std::cout << to_string(result) << "\n";
  return 0;
}

int run_verify(const std::string& surface, const std::string& file, const std::string& identity,
               uint64_t seed, int trials, int max_len, int threads, bool json) {
  FatRose rose = load_surface(surface, file);
  if (trials < 1) throw parse_error("--trials must be >= 1");
  if (max_len < 1) throw parse_error("--max-len must be >= 1");
  std::vector<SuiteReport> suites;
  for (Identity id : parse_identities(identity))
    suites.push_back(run_identity_suite(rose, id, seed, trials, max_len, threads));
  const std::string label = surface_label(surface, file);
  if (json)
    std::cout << verify_report_json(label, identity, seed, trials, max_len, suites).dump(2)
              << "\n";
  else
    std::cout << verify_report_text(label, identity, seed, trials, max_len, suites);
  for (const auto& s : suites)
    if (!s.all_pass) return 1;
  return 0;
}

int run_diagram(const std::string& preset, const std::string& file, int n, int d, bool json) {
  ChordDiagram diagram = [&] {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw parse_error("cannot open diagram file '" + file + "'");
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad diagram JSON: ") + e.what());
      }
      return diagram_from_json(j);
    }
    if (preset.empty()) throw parse_error("need a diagram preset (I..VII) or --diagram-file");
    return diagram_preset(preset, n);
  }();
  const std::string label = file.empty() ? preset : file;
  if (json)
    std::cout << diagram_report_json(label, diagram, d).dump(2) << "\n";
  else
    std::cout << diagram_report_text(label, diagram, d);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string topology operators on surfaces with boundary"};
  app.require_subcommand(1);

  std::string surface = "torus1", surface_file;
  bool json = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--surface", surface, "surface preset: torus1 | pants | g<g>b<b>")
        ->capture_default_str();
    cmd->add_option("--surface-file", surface_file,
                    "file with one line of darts in cyclic order, e.g. 'a b A B'");
    cmd->add_flag("--json", json, "emit a JSON report (schema 1)");
  };

  auto* bracket = app.add_subcommand("bracket", "Goldman bracket of two classes");
  std::vector<std::string> bracket_words_args;
  bracket->add_option("words", bracket_words_args, "two cyclic words, e.g. a b")
      ->expected(2)
      ->required();
  add_common(bracket);

  auto* cobracket = app.add_subcommand("cobracket", "Turaev cobracket of a class");
  std::string cobracket_word_arg;
  cobracket->add_option("word", cobracket_word_arg, "a cyclic word")->required();
  add_common(cobracket);

  auto* verify = app.add_subcommand("verify", "randomized identity suites");
  std::string identity = "all";
  uint64_t seed = 1;
  int trials = 100, max_len = 8, threads = 1;
  verify->add_option("identity", identity,
                     "antisym | jacobi | cojacobi | drinfeld | involutive | all")
      ->capture_default_str();
  verify->add_option("--seed", seed, "seed for the word tuples")->capture_default_str();
  verify->add_option("--trials", trials, "number of random tuples")->capture_default_str();
  verify->add_option("--max-len", max_len, "maximum word length")->capture_default_str();
  verify->add_option("--threads", threads, "worker threads (report is identical for any count)")
      ->capture_default_str();
  add_common(verify);

  auto* diagram = app.add_subcommand("diagram", "chord diagram surgery report");
  std::string diagram_name, diagram_file;
  int n = 2, d = 2;
  diagram->add_option("preset", diagram_name, "diagram preset I..VII");
  diagram->add_option("--n", n, "arity for presets I and II")->capture_default_str();
  diagram->add_option("--d", d, "ambient manifold dimension for the degree")
      ->capture_default_str();
  diagram->add_option("--diagram-file", diagram_file, "JSON diagram file");
  diagram->add_flag("--json", json, "emit a JSON report (schema 1)");

  try {
    app.parse(argc, argv);
    if (bracket->parsed())
      return run_bracket(surface, surface_file, bracket_words_args[0], bracket_words_args[1],
                         json);
    if (cobracket->parsed()) return run_cobracket(surface, surface_file, cobracket_word_arg, json);
    if (verify->parsed())
      return run_verify(surface, surface_file, identity, seed, trials, max_len, threads, json);
    if (diagram->parsed()) return run_diagram(diagram_name, diagram_file, n, d, json);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const stringtop::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
