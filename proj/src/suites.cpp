#include "lrbv/suites.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lrbv/correspondences.hpp"
#include "lrbv/homology.hpp"

namespace lrbv {

namespace {

class Suite {
 public:
  Suite(const AlgebraFile& file, const std::string& name, const RunOptions& opt)
      : file_(file), alg_(file.algebra), opt_(opt), nabla_(file.effective_top()) {
    result_.name = name;
    result_.seed = RandomSource::derive_seed(opt.seed, name);
    rc_ = file.right ? *file.right : right_from_top(alg_, nabla_);
  }

  std::uint64_t seed(const std::string& check) const { return RandomSource::derive_seed(result_.seed, check); }
  RandomSource rng(const std::string& check) const { return RandomSource(seed(check), opt_.bounds()); }

  void record(std::string name, Status s, std::string detail = {}, std::string witness = {}) {
    result_.checks.push_back({std::move(name), s, std::move(detail), std::move(witness)});
  }
  void record(std::string name, const CheckResult& r, std::string detail = {}) {
    record(std::move(name), r.ok ? Status::Pass : Status::Fail, std::move(detail), r.witness);
  }

  TopConnection random_top(RandomSource& rng) const {
    TopConnection t;
    for (std::size_t i = 0; i < alg_.rank(); ++i) t.gamma.push_back(rng.poly(alg_.nvars()));
    return t;
  }
  RightConnectionOnA random_right(RandomSource& rng) const {
    RightConnectionOnA r;
    for (std::size_t i = 0; i < alg_.rank(); ++i) r.r.push_back(rng.poly(alg_.nvars()));
    return r;
  }
  LeftConnectionOnL random_left(RandomSource& rng) const {
    const std::size_t n = alg_.rank();
    LeftConnectionOnL c(n, alg_.nvars());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) c.gamma(i, j, k) = rng.poly(alg_.nvars());
    return c;
  }

  void axioms();
  void generator();
  void bijections();
  void theorem_1_8();
  void remark_1_9();
  void section_2();
  void homology();

  SuiteResult take() { return std::move(result_); }

 private:
  const AlgebraFile& file_;
  const LieRinehartAlgebra& alg_;
  RunOptions opt_;
  TopConnection nabla_;
  RightConnectionOnA rc_;
  SuiteResult result_;
};

void Suite::axioms() {
  auto v = verify_axioms(alg_);
  if (v.empty()) record("verify_axioms", Status::Pass, "anchor homomorphism and Jacobi on all basis tuples");
  else record("verify_axioms", Status::Fail, {}, v.front().describe());
}

void Suite::generator() {
  const GeneratorD d{rc_};
  record("is_generator", is_generator(alg_, d, opt_.trials, seed("is_generator"), opt_.bounds()),
         "r = " + rc_.to_string());

  auto r = rng("random_right_connections");
  CheckResult all = CheckResult::pass();
  for (int t = 0; t < opt_.trials && all.ok; ++t) {
    auto rc = random_right(r);
    all = is_generator(alg_, GeneratorD{rc}, 1, seed("random_right_connections") + static_cast<std::uint64_t>(t),
                       opt_.bounds());
    if (!all.ok) all.witness = "r = " + rc.to_string() + "; " + all.witness;
  }
  record("random_right_connections", all);

  const bool flat = is_flat(alg_, nabla_);
  auto sq = generator_square(alg_, d, opt_.trials, seed("square"), opt_.bounds());
  if (sq.is_exact && flat) record("square", Status::Pass, "flat connection, D^2 = 0");
  else if (!sq.is_exact && !flat)
    record("square", Status::Expected, "connection not flat, D^2 != 0", sq.witness);
  else if (sq.is_exact)
    record("square", Status::Fail, {}, "D^2 = 0 but curvature is nonzero for gamma = " + nabla_.to_string());
  else
    record("square", Status::Fail, {}, "connection is flat but " + sq.witness);
}

void Suite::bijections() {
  if (file_.right && file_.top) {
    const auto expected = right_from_top(alg_, *file_.top);
    if (expected == *file_.right) record("file_data", Status::Pass, "r and gamma correspond");
    else
      record("file_data", Status::Fail, {},
             "r = " + file_.right->to_string() + " but gamma gives r = " + expected.to_string());
  }

  auto r1 = rng("right_round_trip");
  CheckResult right_ok = CheckResult::pass();
  for (int t = 0; t < opt_.trials && right_ok.ok; ++t) {
    auto rc = t == 0 ? rc_ : random_right(r1);
    auto via_top = right_from_top(alg_, top_from_right(alg_, rc));
    auto via_gen = right_from_generator(alg_, generator_from_top(alg_, top_from_right(alg_, rc)));
    if (!(via_top == rc && via_gen == rc))
      right_ok = CheckResult::fail("r = " + rc.to_string() + " returns " + via_top.to_string() + " / " +
                                   via_gen.to_string());
  }
  record("right_round_trip", right_ok);

  auto r2 = rng("top_round_trip");
  CheckResult top_ok = CheckResult::pass();
  for (int t = 0; t < opt_.trials && top_ok.ok; ++t) {
    auto nb = t == 0 ? nabla_ : random_top(r2);
    auto via_right = top_from_right(alg_, right_from_top(alg_, nb));
    auto via_diagram = top_from_generator(alg_, generator_from_top(alg_, nb));
    if (!(via_right == nb && via_diagram == nb))
      top_ok = CheckResult::fail("gamma = " + nb.to_string() + " returns " + via_right.to_string() + " / " +
                                 via_diagram.to_string());
  }
  record("top_round_trip", top_ok);

  auto r3 = rng("generator_round_trip");
  CheckResult gen_ok = CheckResult::pass();
  for (int t = 0; t < opt_.trials && gen_ok.ok; ++t) {
    GeneratorD d{random_right(r3)};
    auto back = generator_from_top(alg_, top_from_generator(alg_, d));
    if (!(back == d))
      gen_ok = CheckResult::fail("D from r = " + d.underlying.to_string() + " returns r = " + back.underlying.to_string());
  }
  record("generator_round_trip", gen_ok);

  const bool flat = is_flat(alg_, nabla_);
  const bool exact = generator_square(alg_, generator_from_top(alg_, nabla_), 1, seed("flatness"), opt_.bounds()).is_exact;
  if (flat == exact)
    record("flatness_transport", Status::Pass, flat ? "flat and D^2 = 0" : "curved and D^2 != 0");
  else
    record("flatness_transport", Status::Fail, {},
           std::string("curvature ") + (flat ? "zero" : "nonzero") + " but D^2 " + (exact ? "= 0" : "!= 0"));
}

void Suite::theorem_1_8() {
  const GeneratorD d{rc_};
  const TopConnection matched = top_from_right(alg_, rc_);
  record("matched_pair", check_theorem_1_8(alg_, d, matched, opt_.trials, seed("matched_pair"), opt_.bounds()),
         "gamma = " + matched.to_string());

  TopConnection perturbed = matched;
  perturbed.gamma[0] += alg_.one();
  auto res = check_theorem_1_8(alg_, d, perturbed, 1, seed("perturbed_pair"), opt_.bounds());
  if (!res.ok && !res.witness.empty()) record("perturbed_pair", Status::Pass, "rejected: " + res.witness);
  else record("perturbed_pair", Status::Fail, {}, "perturbed gamma " + perturbed.to_string() + " was accepted");

  auto r = rng("random_pairs");
  CheckResult all = CheckResult::pass();
  for (int t = 0; t < opt_.trials && all.ok; ++t) {
    auto nb = random_top(r);
    all = check_theorem_1_8(alg_, generator_from_top(alg_, nb), nb, 1, seed("random_pairs") + static_cast<std::uint64_t>(t),
                            opt_.bounds());
    if (!all.ok) all.witness = "gamma = " + nb.to_string() + "; " + all.witness;
  }
  record("random_pairs", all);
}

void Suite::remark_1_9() {
  const GeneratorD d{rc_};
  record("matched_pair",
         check_remark_1_9(alg_, d, top_from_right(alg_, rc_), opt_.trials, seed("matched_pair"), opt_.bounds()));
  auto r = rng("random_pairs");
  CheckResult all = CheckResult::pass();
  for (int t = 0; t < opt_.trials && all.ok; ++t) {
    auto nb = random_top(r);
    all = check_remark_1_9(alg_, generator_from_top(alg_, nb), nb, 1, seed("random_pairs") + static_cast<std::uint64_t>(t),
                           opt_.bounds());
    if (!all.ok) all.witness = "gamma = " + nb.to_string() + "; " + all.witness;
  }
  record("random_pairs", all);
}

void Suite::section_2() {
  const std::size_t n = alg_.rank(), m = alg_.nvars();
  auto r = rng("connections");
  std::vector<LeftConnectionOnL> conns;
  if (file_.left) conns.push_back(*file_.left);
  for (int t = 0; t < opt_.trials; ++t) conns.push_back(random_left(r));

  CheckResult trace = CheckResult::pass(), koszul = CheckResult::pass(), div = CheckResult::pass();
  for (const auto& c : conns) {
    const auto induced = induced_top_connection(alg_, c);
    const auto rc = right_from_top(alg_, induced);
    const GeneratorD d{rc};
    const auto alpha = r.element(n, m);
    const Poly tr = trace_endo(phi_map(alg_, c, alpha));
    const Poly one_o = right_action(alg_, rc, alg_.one(), alpha);
    const Poly d_alpha = apply_generator(alg_, d, Multivector::from_element(alpha)).coefficient(Blade());
    const TopElement x{r.poly(m)};
    const Poly lam = lie_derivative_top(alg_, alpha, x).coefficient - connection_apply_top(alg_, induced, alpha, x).coefficient;
    if (trace.ok && !(tr == one_o && tr == d_alpha && tr * x.coefficient == lam))
      trace = CheckResult::fail("alpha = " + alpha.to_string() + "; Tr = " + tr.to_string() + ", 1 o alpha = " +
                                one_o.to_string() + ", D alpha = " + d_alpha.to_string());

    const auto k = koszul_generator(alg_, c);
    if (koszul.ok && !(k.underlying == rc))
      koszul = CheckResult::fail("Koszul r = " + k.underlying.to_string() + ", induced gives " + rc.to_string());

    RankOneEndomorphism lambda = [&](const Poly& a) {
      AltForm f(n, n, m);
      f.set_value(Blade::full(n), a);
      return generalized_lie_derivative(alg_, induced, f, alpha).value(Blade::full(n));
    };
    const Poly dv = -divergence_rank_one(lambda, m);
    if (div.ok && !(dv == tr))
      div = CheckResult::fail("alpha = " + alpha.to_string() + "; -div = " + dv.to_string() + ", Tr = " + tr.to_string());
  }
  record("trace_identity", trace);
  record("koszul", koszul);
  record("divergence", div);

  auto r2 = rng("torsionfree_lift");
  CheckResult lift_ok = CheckResult::pass(), zero_torsion = CheckResult::pass();
  for (int t = 0; t < opt_.trials && lift_ok.ok && zero_torsion.ok; ++t) {
    const auto target = t == 0 ? nabla_ : random_top(r2);
    const auto lift = torsionfree_lift(alg_, target);
    const auto base_induced = induced_top_connection(alg_, lift.base);
    std::string problem;
    if (!is_torsion_free(alg_, lift.connection)) problem = "torsion is nonzero";
    else if (!(induced_top_connection(alg_, lift.connection) == target))
      problem = "induces " + induced_top_connection(alg_, lift.connection).to_string();
    for (std::size_t i = 0; i < n && problem.empty(); ++i) {
      if (!(trace_endo(lift.phi[i]) == target.gamma[i] - base_induced.gamma[i]))
        problem = "Tr Phi(e" + std::to_string(i + 1) + ") is wrong";
      for (std::size_t j = 0; j < n && problem.empty(); ++j)
        if (!(lift.phi[i].apply(LElement::basis(n, m, j)) == lift.phi[j].apply(LElement::basis(n, m, i))))
          problem = "Phi(e" + std::to_string(i + 1) + ")e" + std::to_string(j + 1) + " is not symmetric";
    }
    if (!problem.empty()) lift_ok = CheckResult::fail("target gamma = " + target.to_string() + "; " + problem);

    const auto alpha = r2.element(n, m), xi = r2.element(n, m);
    const auto lhs = phi_map(alg_, lift.connection, alpha).apply(xi);
    const auto rhs = -left_connection_apply(alg_, lift.connection, xi, alpha);
    if (!(lhs == rhs))
      zero_torsion = CheckResult::fail("alpha = " + alpha.to_string() + ", xi = " + xi.to_string() +
                                       "; Phi_alpha(xi) = " + lhs.to_string() + ", -nabla_xi alpha = " + rhs.to_string());
  }
  record("torsionfree_lift", lift_ok);
  record("zero_torsion", zero_torsion);
}

void Suite::homology() {
  if (alg_.nvars() != 0) {
    record("betti", Status::Skipped, "needs m = 0, the complex is infinite-dimensional otherwise");
    return;
  }
  try {
    const auto c = rinehart_complex(alg_, GeneratorD{rc_});
    const auto betti = homology_dims(c);
    std::ostringstream os;
    for (std::size_t p = 0; p < betti.size(); ++p) os << (p ? "," : "") << betti[p];
    record("square_zero", Status::Pass, "d^2 = 0 on all degrees");
    record("betti", Status::Pass, os.str());
  } catch (const NonExactGenerator& err) {
    if (is_flat(alg_, nabla_)) record("square_zero", Status::Fail, {}, err.witness());
    else record("square_zero", Status::Expected, "connection not flat, no complex", err.witness());
  }
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) out += (c == '\n') ? ' ' : c;
  return out;
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Expected: return "expected";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

bool SuiteResult::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == Status::Fail; });
}

SampleBounds RunOptions::bounds() const {
  SampleBounds b;
  b.degree_bound = degree_bound;
  return b;
}

bool VerificationReport::passed() const {
  return std::none_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms",     "bijections", "generator",  "homology",
                                              "remark-1-9", "section-2",  "theorem-1-8"};
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& all = suite_names();
  return std::find(all.begin(), all.end(), name) != all.end();
}

SuiteResult run_suite(const AlgebraFile& file, const std::string& suite, const RunOptions& options) {
  using Runner = void (Suite::*)();
  static const std::map<std::string, Runner> runners{
      {"axioms", &Suite::axioms},         {"bijections", &Suite::bijections}, {"generator", &Suite::generator},
      {"homology", &Suite::homology},     {"remark-1-9", &Suite::remark_1_9}, {"section-2", &Suite::section_2},
      {"theorem-1-8", &Suite::theorem_1_8}};
  auto it = runners.find(suite);
  if (it == runners.end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  const auto start = std::chrono::steady_clock::now();
  Suite s(file, suite, options);
  (s.*(it->second))();
  SuiteResult out = s.take();
  out.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return out;
}

VerificationReport run_suites(const AlgebraFile& file, std::vector<std::string> names, const RunOptions& options,
                              bool parallel) {
  if (names.empty() || std::find(names.begin(), names.end(), "all") != names.end()) names = suite_names();
  for (const auto& n : names)
    if (!is_suite_name(n)) throw std::invalid_argument("unknown suite '" + n + "'");
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  VerificationReport rep{file.source, file.algebra.name(), options, {}};
  std::vector<std::future<SuiteResult>> jobs;
  for (const auto& n : names)
    jobs.push_back(std::async(parallel ? std::launch::async : std::launch::deferred,
                              [&file, n, options] { return run_suite(file, n, options); }));
  for (auto& j : jobs) rep.suites.push_back(j.get());
  return rep;
}

std::string rerun_command(const VerificationReport& report, const std::string& suite) {
  std::ostringstream os;
  os << "lrbv check " << report.source << " --suite " << suite << " --seed " << report.options.seed << " --trials "
     << report.options.trials << " --degree-bound " << report.options.degree_bound;
  return os.str();
}

std::string format_report(const VerificationReport& report, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Machine) {
    os << "source=" << report.source << "\n"
       << "algebra=" << report.algebra << "\n"
       << "seed=" << report.options.seed << "\n"
       << "trials=" << report.options.trials << "\n"
       << "degree_bound=" << report.options.degree_bound << "\n";
    for (const auto& s : report.suites) {
      os << "suite." << s.name << ".seed=" << s.seed << "\n";
      os << "suite." << s.name << ".status=" << (s.failed() ? "fail" : "pass") << "\n";
      for (const auto& c : s.checks) {
        const std::string key = "check." + s.name + "." + c.name;
        os << key << "=" << status_name(c.status) << "\n";
        if (!c.detail.empty()) os << key << ".detail=" << escape(c.detail) << "\n";
        if (!c.witness.empty()) os << key << ".witness=" << escape(c.witness) << "\n";
      }
      if (s.failed()) os << "suite." << s.name << ".rerun=" << rerun_command(report, s.name) << "\n";
    }
    os << "result=" << (report.passed() ? "pass" : "fail") << "\n";
    os << "# timing\n";
    for (const auto& s : report.suites) os << "timing." << s.name << ".us=" << s.elapsed.count() << "\n";
    return os.str();
  }

  os << report.algebra << " (" << report.source << "), seed " << report.options.seed << ", trials "
     << report.options.trials << ", degree bound " << report.options.degree_bound << "\n";
  for (const auto& s : report.suites) {
    os << "\n" << s.name << "  [" << (s.failed() ? "FAIL" : "ok") << ", "
       << s.elapsed.count() / 1000.0 << " ms]\n";
    for (const auto& c : s.checks) {
      std::string tag = status_name(c.status);
      for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      os << "  " << tag << std::string(9 - std::min<std::size_t>(tag.size(), 8), ' ') << c.name;
      if (!c.detail.empty()) os << "  " << c.detail;
      os << "\n";
      if (!c.witness.empty()) os << "      witness: " << c.witness << "\n";
    }
    if (s.failed()) os << "  rerun: " << rerun_command(report, s.name) << "\n";
  }
  os << "\n" << (report.passed() ? "all checks passed" : "verification FAILED") << "\n";
  return os.str();
}

}  // namespace lrbv
