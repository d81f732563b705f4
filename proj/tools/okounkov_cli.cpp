// Command line surface: list the catalog, compute semigroups and cones,
// slice Okounkov bodies and moment polytopes, and run the verification
// checks. All documents are JSON with integers as decimal strings.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 domain error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "okounkov/okounkov.hpp"

namespace {

using okounkov::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

void write_output(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::filesystem::path path(output);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("OKOUNKOV_OUTPUT_DIR")) path = std::filesystem::path(dir) / path;
  }
  std::ofstream out(path);
  if (!out) throw okounkov::DomainError("cannot open output file " + path.string());
  out << text << "\n";
}

std::shared_ptr<const okounkov::VarietyModel> resolve_model(const std::string& spec) {
  namespace fs = std::filesystem;
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    if (!fs::exists(spec)) throw okounkov::DomainError("model file not found: " + spec);
    std::ifstream in(spec);
    json j = json::parse(in);
    return okounkov::model_from_json(j, okounkov::catalog_resolver);
  }
  return okounkov::load_model(spec);
}

okounkov::DivisorClass parse_divisor(const std::string& text) {
  okounkov::DivisorClass d;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      d.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw okounkov::DomainError("bad divisor coordinate '" + item + "'");
    }
  }
  if (d.empty()) throw okounkov::DomainError("empty divisor class");
  return d;
}

int cmd_models(const std::string& format, const std::string& output) {
  json doc;
  doc["models"] = json::array();
  std::string text;
  for (const auto& name : okounkov::catalog_names()) {
    auto m = okounkov::load_model(name);
    doc["models"].push_back({{"name", m->name},
                             {"group", okounkov::group_name(m->group)},
                             {"dimension", m->dimension},
                             {"boundary_count", m->r()},
                             {"picard_rank", m->picard_rank}});
    text += m->name + "  group=" + okounkov::group_name(m->group) +
            "  n=" + std::to_string(m->dimension) + "  r=" + std::to_string(m->r()) +
            "  rho=" + std::to_string(m->picard_rank) + "\n";
  }
  write_output(format == "json" ? doc.dump(2) : text, output);
  return kExitOk;
}

int cmd_compute(const std::string& what, const std::string& model_spec, int bound,
                const std::string& output) {
  auto model = resolve_model(model_spec);
  const bool needs_boundary = (what == "K" || what == "KY" || what == "Ktilde" ||
                               what == "KtildeY");
  if (needs_boundary && model->r() == 0)
    throw okounkov::DomainError("'" + what + "' needs a boundary divisor; model " +
                                model->name + " has r = 0");
  json doc;
  doc["model"] = model->name;
  doc["bound"] = bound;
  doc["what"] = what;
  if (what == "semigroup" || what == "moment-cone") {
    auto e = okounkov::enumerate_moment_semigroup(*model, bound);
    doc.update(okounkov::moment_points_to_json(e.points));
    doc["cone"] = okounkov::cone_to_json(okounkov::moment_cone(*model, bound));
  } else if (what == "cone") {
    auto e = okounkov::enumerate_moment_semigroup(*model, bound);
    doc.update(okounkov::okounkov_points_to_json(okounkov::project_to_okounkov(e.points)));
    doc["cone"] = okounkov::cone_to_json(okounkov::okounkov_cone(*model, bound));
  } else if (what == "K") {
    auto jk = okounkov::build_J_K(*model, bound);
    doc.update(okounkov::pairs_to_json(jk.J));
    doc["cone"] = okounkov::cone_to_json(jk.K);
  } else if (what == "KY") {
    auto jyky = okounkov::build_JY_KY(*model, bound);
    doc.update(okounkov::pairs_to_json(jyky.JY));
    doc["cone"] = okounkov::cone_to_json(jyky.KY);
  } else if (what == "Ktilde") {
    auto tilde = okounkov::build_tilde_sets(*model, bound);
    doc.update(okounkov::moment_points_to_json(tilde.J_tilde));
    doc["cone"] = okounkov::cone_to_json(tilde.K_tilde);
  } else if (what == "KtildeY") {
    auto tilde = okounkov::build_tilde_sets(*model, bound);
    doc.update(okounkov::moment_points_to_json(tilde.JY_tilde));
    doc["cone"] = okounkov::cone_to_json(tilde.KY_tilde);
  } else {
    std::cerr << "unknown computation '" << what << "'\n";
    return kExitUsage;
  }
  write_output(doc.dump(2), output);
  return kExitOk;
}

int cmd_slice(const std::string& model_spec, const std::string& divisor_text,
              const std::string& body, int bound, const std::string& output) {
  auto model = resolve_model(model_spec);
  okounkov::DivisorClass d = parse_divisor(divisor_text);
  if (d.size() != model->picard_rank)
    throw okounkov::DomainError("divisor class needs " +
                                std::to_string(model->picard_rank) + " coordinates");
  if (bound < 0) bound = model->stabilization_bound + 2;
  okounkov::Polytope p = body == "moment" ? okounkov::moment_body(*model, bound, d)
                                          : okounkov::okounkov_body(*model, bound, d);
  json doc = okounkov::polytope_to_json(p);
  doc["model"] = model->name;
  doc["bound"] = bound;
  doc["body"] = body;
  doc["divisor"] = okounkov::detail::int_block_to_json(d);
  doc["volume"] = okounkov::to_string(okounkov::polytope_volume(p));
  write_output(doc.dump(2), output);
  return kExitOk;
}

int cmd_verify(const std::string& model_spec, okounkov::VerifyOptions opt,
               const std::string& format, const std::string& output) {
  std::vector<std::shared_ptr<const okounkov::VarietyModel>> models;
  if (model_spec == "all")
    for (const auto& name : okounkov::catalog_names()) models.push_back(okounkov::load_model(name));
  else
    models.push_back(resolve_model(model_spec));

  bool all_passed = true;
  std::string text;
  json doc;
  doc["reports"] = json::array();
  for (const auto& m : models) {
    for (const auto& rep : okounkov::run_checks(*m, opt)) {
      all_passed &= rep.passed;
      text += rep.text() + "\n";
      doc["reports"].push_back(okounkov::report_to_json(rep));
    }
  }
  doc["passed"] = all_passed;
  text += all_passed ? "ALL CHECKS PASSED\n" : "CHECK FAILURES PRESENT\n";
  write_output(format == "json" ? doc.dump(2) : text, output);
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Okounkov/moment cone computations on catalog spherical varieties"};
  app.require_subcommand(1);

  std::string format = "text", output, model_spec, what, divisor_text, body = "okounkov";
  int bound = 4;
  okounkov::VerifyOptions vopt;
  std::string checks_csv;

  CLI::App* models = app.add_subcommand("models", "list catalog models");
  models->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  models->add_option("--output", output, "write to file instead of stdout");

  CLI::App* compute = app.add_subcommand("compute", "compute semigroups and cones");
  compute
      ->add_option("what", what, "semigroup|cone|moment-cone|K|KY|Ktilde|KtildeY")
      ->required()
      ->check(CLI::IsMember({"semigroup", "cone", "moment-cone", "K", "KY", "Ktilde",
                             "KtildeY"}));
  compute->add_option("model", model_spec, "catalog model name or model .json file")
      ->required();
  compute->add_option("--bound", bound, "divisor grid bound")->check(CLI::PositiveNumber);
  compute->add_option("--output", output);

  CLI::App* slice = app.add_subcommand("slice", "slice a body out of a global cone");
  slice->add_option("model", model_spec)->required();
  slice->add_option("--divisor", divisor_text, "comma separated divisor class")->required();
  slice->add_option("--body", body)->check(CLI::IsMember({"okounkov", "moment"}));
  int slice_bound = -1;
  slice->add_option("--bound", slice_bound, "grid bound (default: stabilization + 2)");
  slice->add_option("--output", output);

  CLI::App* verify = app.add_subcommand("verify", "run the verification checks");
  verify->add_option("model", model_spec, "model name, 'all', or model .json file")
      ->required();
  verify->add_option("--checks", checks_csv, "comma separated subset of checks");
  verify->add_option("--bound", vopt.bound)->check(CLI::PositiveNumber);
  verify->add_option("--samples", vopt.samples)->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", vopt.seed);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (models->parsed()) return cmd_models(format, output);
    if (compute->parsed()) return cmd_compute(what, model_spec, bound, output);
    if (slice->parsed()) return cmd_slice(model_spec, divisor_text, body, slice_bound, output);
    if (verify->parsed()) {
      if (!checks_csv.empty()) {
        std::stringstream ss(checks_csv);
        std::string item;
        while (std::getline(ss, item, ',')) vopt.checks.push_back(item);
      }
      return cmd_verify(model_spec, vopt, format, output);
    }
  } catch (const okounkov::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    // an unknown catalog name is a usage problem, not a domain state
    return std::string(e.what()).find("unknown model") != std::string::npos ? kExitUsage
                                                                            : kExitDomain;
  } catch (const okounkov::CheckFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
