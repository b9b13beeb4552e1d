#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hbk/verify.hpp"
#include "knotspec.hpp"
#include "render.hpp"

namespace {

using namespace hbk;
using hbk::cli::json;

constexpr int kExitPass = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

void emit(const json& doc, const std::string& table, const std::string& format) {
  if (format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << table;
}

std::optional<int> env_bound() {
  const char* raw = std::getenv("HBK_BOUND");
  if (raw == nullptr) return std::nullopt;
  int value = 0;
  std::string s(raw);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("HBK_BOUND is not an integer: '" + s + "'");
  return value;
}

int run(int argc, char** argv) {
  CLI::App app{"slope invariants, symmetry groups and equivalence decisions for\n"
               "genus-two handlebody-knots induced by Eudave-Munoz knots K(l,m,n,p)"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  std::string spec_a, spec_b;
  long long fam_m = 0, fam_from = 0, fam_to = 0;
  std::optional<int> bound_flag;
  std::string suite = "all";

  CLI::App* invariants = app.add_subcommand("invariants", "derived quantities and slopes");
  invariants->add_option("knot", spec_a, "knot spec R:l,m,n,p or L:m,n,p")->required();

  CLI::App* classify_cmd = app.add_subcommand("classify", "decomposition type and symmetry group");
  classify_cmd->add_option("knot", spec_a)->required();

  CLI::App* equiv = app.add_subcommand("equiv", "decide equivalence of two knots");
  equiv->add_option("knotA", spec_a)->required();
  equiv->add_option("knotB", spec_b)->required();

  CLI::App* exterior = app.add_subcommand("exterior", "decide exterior homeomorphism");
  exterior->add_option("knotA", spec_a)->required();
  exterior->add_option("knotB", spec_b)->required();

  CLI::App* family = app.add_subcommand(
      "family", "inequivalent left knots (*,m,0,p) with one exterior");
  family->add_option("m", fam_m)->required();
  family->add_option("p_from", fam_from)->required();
  family->add_option("p_to", fam_to)->required();

  CLI::App* census = app.add_subcommand("census", "essential annulus census");
  census->add_option("knot", spec_a)->required();

  CLI::App* verify = app.add_subcommand("verify", "run the exhaustive verification suites");
  verify->add_option("--bound", bound_flag, "box bound for all suites");
  verify->add_option("--suite", suite, "lemmas | oracles | collisions | all")
      ->check(CLI::IsMember({"lemmas", "oracles", "collisions", "all"}))
      ->capture_default_str();

  // lets --format appear after the subcommand arguments
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (invariants->parsed()) {
    HandlebodyKnot hk = hbk::cli::parse_knot(spec_a);
    emit(hbk::cli::invariants_json(hk), hbk::cli::invariants_table(hk), format);
    return kExitPass;
  }
  if (classify_cmd->parsed()) {
    HandlebodyKnot hk = hbk::cli::parse_knot(spec_a);
    emit(hbk::cli::classify_json(hk), hbk::cli::classify_table(hk), format);
    return kExitPass;
  }
  if (equiv->parsed()) {
    EquivalenceVerdict v =
        equivalent(hbk::cli::parse_knot(spec_a), hbk::cli::parse_knot(spec_b));
    emit(hbk::cli::verdict_json(v), hbk::cli::verdict_table(v), format);
    return kExitPass;
  }
  if (exterior->parsed()) {
    bool homeo =
        exteriors_homeomorphic(hbk::cli::parse_knot(spec_a), hbk::cli::parse_knot(spec_b));
    emit(hbk::cli::exterior_json(homeo),
         std::string("exteriors homeomorphic  ") + (homeo ? "yes" : "no") + "\n", format);
    return kExitPass;
  }
  if (family->parsed()) {
    FamilyReport report = enumerate_family(fam_m, fam_from, fam_to);
    emit(hbk::cli::family_json(report), hbk::cli::family_table(report), format);
    return kExitPass;
  }
  if (census->parsed()) {
    HandlebodyKnot hk = hbk::cli::parse_knot(spec_a);
    AnnulusCensus c = annulus_census(hk);
    emit(hbk::cli::census_json(hk, c), hbk::cli::census_table(hk, c), format);
    return kExitPass;
  }
  if (verify->parsed()) {
    std::optional<int> bound = bound_flag ? bound_flag : env_bound();
    std::vector<VerificationReport> reports;
    if (suite == "lemmas" || suite == "all") reports.push_back(verify_lemmas(bound.value_or(8)));
    if (suite == "oracles" || suite == "all") reports.push_back(verify_oracles(bound.value_or(8)));
    if (suite == "collisions" || suite == "all")
      reports.push_back(collision_search(bound.value_or(6)));

    bool passed = true;
    json suites = json::array();
    std::string table;
    for (const VerificationReport& r : reports) {
      passed = passed && r.passed();
      suites.push_back(hbk::cli::report_json(r));
      table += hbk::cli::report_table(r);
    }
    emit(json{{"suites", suites}, {"passed", passed}}, table, format);
    return passed ? kExitPass : kExitViolations;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
