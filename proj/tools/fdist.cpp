// fdist: mass-assignment fuzzy distances, unification and defuzzification
// from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fdist/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fdist::cli::UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<std::size_t> optional_slices(std::size_t value) {
  if (value == 0) return std::nullopt;
  return value;
}

void apply_tolerance_override() {
  const char* env = std::getenv("FDIST_TOLERANCE");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  double value = std::strtod(env, &end);
  if (*end != '\0' || !(value >= 0.0)) throw fdist::cli::UsageError(std::string("invalid FDIST_TOLERANCE '") + env + "'");
  fdist::set_tolerance(value);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy-set-valued distances and related mass-assignment operations"};
  app.require_subcommand(1);

  std::string spec_path, first, second, basis_list;
  std::size_t slices = 0;
  bool directional = false;
  std::string strategy_text, routing_text = "both", plot_step, step_text;

  auto* mass = app.add_subcommand("mass", "Mass assignment (and fuzzy steps) of a set");
  mass->add_option("spec", spec_path, "Input document")->required();
  mass->add_option("name", first, "Set name")->required();
  mass->add_option("--slices", slices, "Slice count for points-kind sets")->check(CLI::PositiveNumber);

  auto* dist = app.add_subcommand("distance", "Fuzzy distance between two sets");
  dist->add_option("spec", spec_path, "Input document")->required();
  dist->add_option("a", first, "First set")->required();
  dist->add_option("b", second, "Second set")->required();
  dist->add_flag("--directional", directional, "Signed distance b - a instead of |a - b|");
  dist->add_option("--strategy", strategy_text, "product, diagonal or antidiagonal")
      ->check(CLI::IsMember({"product", "diagonal", "antidiagonal"}));
  dist->add_option("--slices", slices, "Slice count for points-kind sets")->check(CLI::PositiveNumber);
  dist->add_option("--plot-step", plot_step, "Emit x,mu CSV samples at this step instead of the document");

  auto* unify = app.add_subcommand("unify", "Semantic unification of a claim against evidence");
  unify->add_option("spec", spec_path, "Input document")->required();
  unify->add_option("a", first, "Claim set")->required();
  unify->add_option("g", second, "Evidence set")->required();
  unify->add_option("--routing", routing_text, "product, maximal or both")
      ->check(CLI::IsMember({"product", "maximal", "both"}));

  auto* defuzz = app.add_subcommand("defuzz", "Maximum-likelihood interval and centre of gravity");
  defuzz->add_option("spec", spec_path, "Input document")->required();
  defuzz->add_option("name", first, "Set name")->required();
  defuzz->add_option("--slices", slices, "Slice count for points-kind sets")->check(CLI::PositiveNumber);

  auto* restrict_check = app.add_subcommand("restrict-check", "Linear combination and type-1 reachability");
  restrict_check->add_option("spec", spec_path, "Input document")->required();
  restrict_check->add_option("target", first, "Target mass assignment")->required();
  restrict_check->add_option("--basis", basis_list, "Comma-separated basis set names")->required();

  auto* plot = app.add_subcommand("plot", "x,mu CSV samples of a set's membership function");
  plot->add_option("spec", spec_path, "Input document")->required();
  plot->add_option("name", first, "Set name")->required();
  plot->add_option("--step", step_text, "Sample spacing")->required();
  plot->add_option("--slices", slices, "Slice count for points-kind sets")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    apply_tolerance_override();
    const fdist::io::SpecDocument doc = fdist::io::parse_spec(read_file(spec_path));
    namespace cli = fdist::cli;
    auto parse_step = [](const std::string& text) {
      try {
        return fdist::io::Real::parse(text);
      } catch (const std::exception&) {
        throw cli::UsageError("invalid step '" + text + "'");
      }
    };

    if (*mass) {
      std::cout << cli::cmd_mass(doc, first, optional_slices(slices)).dump(2) << '\n';
    } else if (*dist) {
      cli::DistanceFlags flags;
      flags.directional = directional;
      if (!strategy_text.empty()) flags.strategy = fdist::parse_strategy(strategy_text);
      flags.slices = optional_slices(slices);
      if (!plot_step.empty()) {
        auto result = cli::run_distance(doc, first, second, flags);
        std::cout << fdist::io::plot_csv(result.fuzzy, parse_step(plot_step));
      } else {
        std::cout << cli::cmd_distance(doc, first, second, flags).dump(2) << '\n';
      }
    } else if (*unify) {
      cli::Routing routing = routing_text == "product"   ? cli::Routing::Product
                             : routing_text == "maximal" ? cli::Routing::Maximal
                                                         : cli::Routing::Both;
      std::cout << cli::cmd_unify(doc, first, second, routing).dump(2) << '\n';
    } else if (*defuzz) {
      std::cout << cli::cmd_defuzz(doc, first, optional_slices(slices)).dump(2) << '\n';
    } else if (*restrict_check) {
      std::vector<std::string> basis;
      std::stringstream names(basis_list);
      for (std::string name; std::getline(names, name, ',');)
        if (!name.empty()) basis.push_back(name);
      std::cout << cli::cmd_restrict_check(doc, first, basis).dump(2) << '\n';
    } else if (*plot) {
      std::cout << cli::cmd_plot(doc, first, parse_step(step_text), optional_slices(slices));
    }
  } catch (const std::exception& e) {
    std::cerr << "fdist: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
