// lrbv: verify generator/connection correspondences for a Lie-Rinehart algebra.
//   lrbv check <file> [--suite name]... [--seed S] [--trials T] [--degree-bound B] [--format text|machine]
//   lrbv homology <file> [--format text|machine]
//   lrbv catalog [name]
// <file> may be "catalog:<name>". Exit codes: 0 pass, 1 verification failure, 2 input error.

#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "lrbv/catalog.hpp"
#include "lrbv/correspondences.hpp"
#include "lrbv/homology.hpp"
#include "lrbv/suites.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

const std::map<std::string, lrbv::ReportFormat> kFormats{{"text", lrbv::ReportFormat::Text},
                                                         {"machine", lrbv::ReportFormat::Machine}};

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int run_check(const std::string& path, const std::vector<std::string>& suites, const lrbv::RunOptions& opt,
              lrbv::ReportFormat fmt) {
  auto file = lrbv::load_algebra(path);
  std::vector<std::string> chosen = suites.empty() ? file.suites : suites;
  for (const auto& s : chosen)
    if (s != "all" && !lrbv::is_suite_name(s)) {
      std::cerr << "lrbv: unknown suite '" << s << "'\n";
      return kInput;
    }
  auto report = lrbv::run_suites(file, chosen, opt);
  std::cout << lrbv::format_report(report, fmt);
  return report.passed() ? kPass : kFail;
}

int run_homology(const std::string& path, lrbv::ReportFormat fmt) {
  auto file = lrbv::load_algebra(path);
  const auto& alg = file.algebra;
  const auto nabla = file.effective_top();
  const lrbv::GeneratorD d{file.right ? *file.right : lrbv::right_from_top(alg, nabla)};
  lrbv::ChainComplex c;
  try {
    c = lrbv::rinehart_complex(alg, d);
  } catch (const lrbv::NonExactGenerator& err) {
    std::cerr << "lrbv: " << file.source << ": connection is not flat, D^2 != 0: " << err.witness() << "\n";
    return kInput;
  }
  const auto betti = lrbv::homology_dims(c);
  if (fmt == lrbv::ReportFormat::Machine) {
    std::cout << "algebra=" << alg.name() << "\n"
              << "r=" << d.underlying.to_string() << "\n"
              << "dims=" << join(c.dims) << "\n"
              << "betti=" << join(betti) << "\n";
  } else {
    std::cout << alg.name() << ", r = " << d.underlying.to_string() << "\n";
    for (std::size_t p = 0; p < betti.size(); ++p)
      std::cout << "  H_" << p << " = " << betti[p] << "   (dim Lambda^" << p << " = " << c.dims[p] << ")\n";
  }
  return kPass;
}

int run_catalog(const std::string& name) {
  if (name.empty()) {
    for (const auto& e : lrbv::catalog()) {
      auto f = lrbv::parse_algebra_file(std::string(e.text), "catalog:" + std::string(e.name));
      std::cout << e.name << "  m=" << f.algebra.nvars() << " n=" << f.algebra.rank() << "\n";
    }
    return kPass;
  }
  auto text = lrbv::catalog_text(name);
  if (!text) {
    std::cerr << "lrbv: no catalog entry '" << name << "'\n";
    return kInput;
  }
  std::cout << *text;
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for generators and connections on Lie-Rinehart algebras"};
  app.require_subcommand(1);

  lrbv::RunOptions opt;
  std::string path, format = "text", name;
  std::vector<std::string> suites;

  auto* check = app.add_subcommand("check", "run verification suites on an algebra file");
  check->add_option("file", path, "algebra file or catalog:<name>")->required();
  check->add_option("--suite", suites, "suite to run (repeatable): all, " + [] {
    std::string s;
    for (const auto& n : lrbv::suite_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());
  check->add_option("--seed", opt.seed, "base seed")->capture_default_str();
  check->add_option("--trials", opt.trials, "random trials per identity")->check(CLI::Range(1, 100000))->capture_default_str();
  check->add_option("--degree-bound", opt.degree_bound, "degree bound for random coefficients")
      ->check(CLI::Range(0, 50))
      ->capture_default_str();
  check->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));

  auto* homology = app.add_subcommand("homology", "Betti numbers of the Rinehart complex (m = 0, flat)");
  homology->add_option("file", path, "algebra file or catalog:<name>")->required();
  homology->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));

  auto* cat = app.add_subcommand("catalog", "list bundled algebras or print one");
  cat->add_option("name", name, "entry to print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*check) return run_check(path, suites, opt, kFormats.at(format));
    if (*homology) return run_homology(path, kFormats.at(format));
    return run_catalog(name);
  } catch (const lrbv::InputError& e) {
    std::cerr << "lrbv: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "lrbv: " << e.what() << "\n";
    return kInput;
  }
}
