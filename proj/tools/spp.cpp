// spp: verify the symmetric plane partition identities, enumerate the
// underlying objects, and print individual polynomials.
//
// Exit status: 0 all checks passed, 1 some check failed, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spp/cli/enumerate_objects.hpp"
#include "spp/cli/run_config.hpp"
#include "spp/cli/run_verification.hpp"
#include "spp/identity/equations.hpp"
#include "spp/identity/lemma.hpp"
#include "spp/schur/products.hpp"
#include "spp/schur/schur.hpp"
#include "spp/schur/weyl.hpp"

namespace {

constexpr int kUsageError = 2;

int default_workers() {
  if (const char* env = std::getenv("SPP_WORKERS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid SPP_WORKERS=\"" << env << "\"\n";
  }
  return 1;
}

spp::cli::OutputFormat parse_format(const std::string& s) {
  if (s == "text") return spp::cli::OutputFormat::text;
  if (s == "json") return spp::cli::OutputFormat::json;
  throw spp::cli::InvalidRange("output must be text or json, got \"" + s + "\"");
}

int run_verify(const std::string& checks, const std::string& m_range, const std::string& n_range,
               const std::string& output, int parallel) {
  spp::cli::RunConfig config;
  config.checks = spp::cli::parse_check_list(checks);
  config.m = spp::cli::IntRange::parse(m_range);
  config.n = spp::cli::IntRange::parse(n_range);
  config.output = parse_format(output);
  config.parallel = parallel;
  config.validate();

  const bool stream = config.output == spp::cli::OutputFormat::text && config.parallel == 1;
  auto run = spp::cli::run_verification(config, [stream](const spp::identity::CheckResult& r) {
    if (stream) std::cout << spp::cli::format_text_line(r) << std::endl;
  });

  if (config.output == spp::cli::OutputFormat::json) {
    auto doc = nlohmann::json::array();
    for (const auto& r : run.results) doc.push_back(spp::identity::to_json(r));
    std::cout << doc.dump(2) << '\n';
  } else {
    if (!stream) {
      for (const auto& r : run.results) std::cout << spp::cli::format_text_line(r) << '\n';
    }
    std::size_t failed = 0;
    for (const auto& r : run.results) failed += r.pass ? 0 : 1;
    std::cout << run.results.size() << " checks, " << failed << " failed\n";
  }
  return run.exit_status();
}

int run_show(const std::string& what, int m, int n) {
  using namespace spp;
  const schur::BoxParams p{m, n};
  p.validate();
  const std::map<std::string, std::function<exactalg::LaurentPoly()>> table = {
      {"box-sum", [&] { return schur::schur_box_sum(p); }},
      {"det-ratio", [&] { return schur::box_det_ratio(p); }},
      {"weyl", [&] { return schur::weyl_denominator(n, schur::WeylForm::determinant); }},
      {"weyl-product", [&] { return schur::weyl_denominator(n, schur::WeylForm::product); }},
      {"dn", [&] { return schur::dn_polynomial(n); }},
      {"macmahon", [&] { return schur::macmahon_product(p); }},
      {"macmahon-specialized",
       [&] { return schur::principal_specialization(schur::schur_box_sum(p), schur::macmahon_exponents(n)); }},
      {"gordon", [&] { return schur::gordon_product(p); }},
      {"lemma-lhs", [&] { return identity::lemma_sides(n).lhs; }},
      {"f", [&] { return identity::f_function(n); }},
      {"vanishing", [&] { return identity::vanishing_det(n); }},
  };
  auto it = table.find(what);
  if (it == table.end()) {
    std::cerr << "unknown polynomial \"" << what << "\"; one of:";
    for (const auto& [name, fn] : table) std::cerr << ' ' << name;
    std::cerr << '\n';
    return kUsageError;
  }
  std::cout << it->second() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the symmetric plane partition identities"};
  app.require_subcommand(1);

  std::string checks = "all";
  std::string m_range = "1..3";
  std::string n_range = "1..3";
  std::string output = "text";
  int parallel = default_workers();
  auto* verify = app.add_subcommand("verify", "Run identity checks over an (m, n) grid");
  verify->add_option("--checks", checks, "Comma-separated check ids, or 'all'")->capture_default_str();
  verify->add_option("--m", m_range, "Range of m, e.g. 1..3")->capture_default_str();
  verify->add_option("--n", n_range, "Range of n, e.g. 1..3")->capture_default_str();
  verify->add_option("--output", output, "text or json")->capture_default_str();
  verify->add_option("--parallel", parallel, "Worker count (default from SPP_WORKERS, else 1)")->capture_default_str();

  std::string kind;
  int enum_n = 1;
  int enum_m = 1;
  std::string enum_output = "text";
  auto* enumerate = app.add_subcommand("enumerate", "List objects and their q-generating function");
  enumerate->add_option("kind", kind, "symmetric-pp | column-strict | partitions")->required();
  enumerate->add_option("--n", enum_n, "Base side / part count")->capture_default_str();
  enumerate->add_option("--m", enum_m, "Height / part size bound")->capture_default_str();
  enumerate->add_option("--output", enum_output, "text or json")->capture_default_str();

  std::string what;
  int show_m = 1;
  int show_n = 1;
  auto* show = app.add_subcommand("show", "Print one polynomial in canonical text");
  show->add_option("what", what, "box-sum | det-ratio | weyl | weyl-product | dn | macmahon | ...")->required();
  show->add_option("--m", show_m)->capture_default_str();
  show->add_option("--n", show_n)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*verify) return run_verify(checks, m_range, n_range, output, parallel);
    if (*enumerate) {
      auto summary = spp::cli::enumerate_objects(spp::cli::parse_object_kind(kind), enum_n, enum_m,
                                                 parse_format(enum_output), std::cout);
      (void)summary;
      return 0;
    }
    if (*show) return run_show(what, show_m, show_n);
  } catch (const std::invalid_argument& e) {
    // UnknownCheck, InvalidRange and bad kinds all derive from invalid_argument.
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsageError;
}
