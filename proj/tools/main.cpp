#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"

namespace {

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  using crnt::report::Request;

  CLI::App app{"Reaction network analysis: deficiency, extreme currents, translations, toric steady states"};
  app.require_subcommand(1);

  Request req;
  bool json = false;
  std::string network_path, translation_path, rates_path, x0_path;

  app.add_flag("--json", json, "Print the machine-readable report");
  app.add_option("--seed", req.seed, "Seed for randomized restarts of the numeric solver");
  app.add_option("--max-orderings", req.search_options.max_orderings, "Orderings tried per stoichiometric generator");
  app.add_option("--max-candidates", req.search_options.max_candidates, "Shift assignments evaluated by the search");
  app.add_option("--sign-dim-cap", req.sign_dim_cap, "Largest ambient dimension for sign-vector enumeration");

  auto network_arg = [&](CLI::App* sub) { sub->add_option("network", network_path, "Network file")->required(); };
  auto translation_args = [&](CLI::App* sub) {
    auto* s = sub->add_flag("--search", req.search, "Search for a translation");
    auto* t = sub->add_option("--translation", translation_path, "Translation file (shift and kinetic-choice lines)");
    s->excludes(t);
  };

  auto* analyze = app.add_subcommand("analyze", "Structural analysis: complexes, linkage classes, deficiency, generators");
  network_arg(analyze);
  auto* generators = app.add_subcommand("generators", "Extreme currents of the current cone");
  network_arg(generators);
  auto* translate = app.add_subcommand("translate", "Search for or check a network translation");
  network_arg(translate);
  translation_args(translate);
  translate->add_option("--show", req.show, "Number of search candidates to list");
  auto* trees = app.add_subcommand("tree-constants", "Tree constants of the network or of a translation");
  network_arg(trees);
  translation_args(trees);
  trees->add_option("--rates", rates_path, "Rate constants file");
  auto* steady = app.add_subcommand("steady-states", "Binomial steady-state generators and sign conditions");
  network_arg(steady);
  translation_args(steady);
  steady->add_option("--rates", rates_path, "Rate constants file");
  steady->add_option("--x0", x0_path, "Initial state selecting the compatibility class");
  steady->add_flag("--solve", req.solve, "Require a solved steady state (needs --rates and --x0)");
  auto* verify = app.add_subcommand("verify", "Check that a state is a steady state");
  network_arg(verify);
  verify->add_option("--rates", rates_path, "Rate constants file");
  verify->add_option("--x0", x0_path, "State to check");
  verify->add_option("--tolerance", req.tolerance, "Relative residual accepted as steady");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return crnt::report::kUsage;
  }

  req.command = app.get_subcommands().front()->get_name();
  auto load = [](const std::string& path, const char* what) -> std::optional<std::string> {
    auto text = slurp(path);
    if (!text) std::cerr << "error: cannot read " << what << " file '" << path << "'\n";
    return text;
  };
  auto net = load(network_path, "network");
  if (!net) return crnt::report::kParse;
  req.network_text = *net;
  for (auto [path, slot, what] : {std::tuple{&translation_path, &req.translation_text, "translation"},
                                  std::tuple{&rates_path, &req.rates_text, "rates"},
                                  std::tuple{&x0_path, &req.x0_text, "state"}}) {
    if (path->empty()) continue;
    *slot = load(*path, what);
    if (!*slot) return crnt::report::kParse;
  }

  crnt::report::Outcome out = crnt::report::run(req);
  if (json) std::cout << out.report.dump(2) << "\n";
  else std::cout << crnt::report::render_text(out.report);
  if (out.report.contains("error"))
    std::cerr << "error: " << out.report["error"]["message"].get<std::string>() << "\n";
  return out.exit_code;
}
