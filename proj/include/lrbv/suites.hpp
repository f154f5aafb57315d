#pragma once

#include "lrbv/algebra_file.hpp"
#include "lrbv/random.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace lrbv {

// Expected: a check whose negative outcome is the predicted one (a non-flat
// connection gives D^2 != 0). Skipped: the suite does not apply to the input.
enum class Status { Pass, Fail, Expected, Skipped };
const char* status_name(Status s);

struct CheckRecord {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  std::string witness;
};

struct SuiteResult {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  std::chrono::microseconds elapsed{0};

  bool failed() const;
};

struct RunOptions {
  std::uint64_t seed = 0;
  int trials = 32;
  int degree_bound = 3;

  SampleBounds bounds() const;
};

struct VerificationReport {
  std::string source;
  std::string algebra;
  RunOptions options;
  std::vector<SuiteResult> suites;  // sorted by suite name

  bool passed() const;
};

// axioms, bijections, generator, homology, remark-1-9, section-2, theorem-1-8
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const AlgebraFile& file, const std::string& suite, const RunOptions& options);

// Suites run concurrently; an empty list means every suite.
VerificationReport run_suites(const AlgebraFile& file, std::vector<std::string> names, const RunOptions& options,
                              bool parallel = true);

enum class ReportFormat { Text, Machine };

// The machine format is key=value lines; everything above the "# timing"
// marker depends only on (file, seed, trials, degree bound).
std::string format_report(const VerificationReport& report, ReportFormat format);

std::string rerun_command(const VerificationReport& report, const std::string& suite);

}  // namespace lrbv
