// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lrbv/catalog.hpp"
#include "lrbv/correspondences.hpp"
#include "lrbv/homology.hpp"

namespace {

using namespace lrbv;
using Clock = std::chrono::steady_clock;

constexpr int kSamples = 32;
constexpr std::uint64_t kSeed = 20261019;

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& what) {
    if (ok) note = what;
    ok = false;
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<AlgebraFile> all_catalog() {
  std::vector<AlgebraFile> out;
  for (const auto& e : catalog()) out.push_back(load_catalog(e.name));
  return out;
}

RandomSource rng_for(const AlgebraFile& f, const std::string& what) {
  return RandomSource(RandomSource::derive_seed(RandomSource::derive_seed(kSeed, what), f.algebra.name()));
}

std::uint64_t seed_for(const AlgebraFile& f, const std::string& what, int t) {
  return RandomSource::derive_seed(kSeed, what + "/" + f.algebra.name() + "/" + std::to_string(t));
}

RightConnectionOnA random_right(const LieRinehartAlgebra& alg, RandomSource& r) {
  RightConnectionOnA rc;
  for (std::size_t i = 0; i < alg.rank(); ++i) rc.r.push_back(r.poly(alg.nvars()));
  return rc;
}

TopConnection random_top(const LieRinehartAlgebra& alg, RandomSource& r) {
  TopConnection t;
  for (std::size_t i = 0; i < alg.rank(); ++i) t.gamma.push_back(r.poly(alg.nvars()));
  return t;
}

LeftConnectionOnL random_left(const LieRinehartAlgebra& alg, RandomSource& r) {
  const std::size_t n = alg.rank();
  LeftConnectionOnL c(n, alg.nvars());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c.gamma(i, j, k) = r.poly(alg.nvars());
  return c;
}

// nabla - T/2 has zero torsion.
LeftConnectionOnL remove_torsion(const LieRinehartAlgebra& alg, LeftConnectionOnL c) {
  const auto t = torsion(alg, c);
  const Rational half = make_rational(1, 2);
  for (std::size_t i = 0; i < alg.rank(); ++i)
    for (std::size_t j = 0; j < alg.rank(); ++j)
      for (std::size_t k = 0; k < alg.rank(); ++k) c.gamma(i, j, k) -= t[i][j].coeffs[k] * half;
  return c;
}

Outcome criterion_1(const std::vector<AlgebraFile>& cat) {
  Outcome o;
  const auto start = Clock::now();
  for (const auto& f : cat) {
    auto r = rng_for(f, "c1");
    for (int t = 0; t < kSamples && o.ok; ++t) {
      const auto rc = random_right(f.algebra, r);
      auto res = is_generator(f.algebra, GeneratorD{rc}, 2, seed_for(f, "c1", t));
      if (!res.ok) o.fail(f.algebra.name() + ", r = " + rc.to_string() + ": " + res.witness);
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 5.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) o.note = std::to_string(cat.size()) + " algebras x 32 in " + std::to_string(secs) + " s";
  return o;
}

Outcome criterion_2(const std::vector<AlgebraFile>& cat) {
  Outcome o;
  int flat = 0, curved = 0;
  for (const auto& f : cat) {
    const auto nabla = f.effective_top();
    const bool is_zero_curv = is_flat(f.algebra, nabla);
    const bool exact = generator_square(f.algebra, GeneratorD{right_from_top(f.algebra, nabla)}, 8,
                                        seed_for(f, "c2", 0)).is_exact;
    (is_zero_curv ? flat : curved)++;
    if (is_zero_curv != exact) o.fail(f.algebra.name() + ": flat=" + std::to_string(is_zero_curv));
  }
  if (flat < 3 || curved < 3) o.fail("only " + std::to_string(flat) + " flat, " + std::to_string(curved) + " curved");
  if (o.ok) o.note = std::to_string(flat) + " flat, " + std::to_string(curved) + " curved";
  return o;
}

Outcome criterion_3(const std::vector<AlgebraFile>& cat) {
  Outcome o;
  for (const auto& f : cat) {
    const auto& a = f.algebra;
    auto r = rng_for(f, "c3");
    for (int t = 0; t < kSamples && o.ok; ++t) {
      const auto rc = random_right(a, r);
      const auto nb = random_top(a, r);
      const GeneratorD d{random_right(a, r)};
      if (!(right_from_top(a, top_from_right(a, rc)) == rc)) o.fail(a.name() + ": r -> nabla -> r");
      if (!(right_from_generator(a, GeneratorD{rc}) == rc)) o.fail(a.name() + ": r -> D -> r");
      if (!(top_from_right(a, right_from_top(a, nb)) == nb)) o.fail(a.name() + ": nabla -> r -> nabla");
      if (!(top_from_generator(a, generator_from_top(a, nb)) == nb)) o.fail(a.name() + ": nabla -> D -> nabla");
      if (!(generator_from_top(a, top_from_generator(a, d)) == d)) o.fail(a.name() + ": D -> nabla -> D");
      if (!(right_from_top(a, top_from_generator(a, GeneratorD{rc})) == rc)) o.fail(a.name() + ": r -> D -> nabla -> r");
      if (!(top_from_generator(a, GeneratorD{right_from_top(a, nb)}) == nb)) o.fail(a.name() + ": nabla -> r -> D -> nabla");
    }
  }
  return o;
}

Outcome criterion_4(const std::vector<AlgebraFile>& cat) {
  Outcome o;
  for (const auto& f : cat) {
    const auto& a = f.algebra;
    const auto nabla = f.effective_top();
    const GeneratorD d = generator_from_top(a, nabla);
    auto t18 = check_theorem_1_8(a, d, nabla, 8, seed_for(f, "c4", 0));
    if (!t18.ok) o.fail(a.name() + " matched: " + t18.witness);
    auto r19 = check_remark_1_9(a, d, nabla, 8, seed_for(f, "c4", 1));
    if (!r19.ok) o.fail(a.name() + " remark: " + r19.witness);
    TopConnection perturbed = nabla;
    perturbed.gamma.back() += a.one();
    auto bad = check_theorem_1_8(a, d, perturbed, 8, seed_for(f, "c4", 2));
    if (bad.ok || bad.witness.empty()) o.fail(a.name() + ": perturbed pair accepted");
  }
  return o;
}

Outcome criterion_5(const std::vector<AlgebraFile>& cat) {
  Outcome o;
  int torsion_free_cases = 0;
  for (const auto& f : cat) {
    const auto& a = f.algebra;
    const std::size_t n = a.rank(), m = a.nvars();
    auto r = rng_for(f, "c5");
    for (int t = 0; t < kSamples && o.ok; ++t) {
      const auto raw = random_left(a, r);
      for (const auto& c : {raw, remove_torsion(a, raw)}) {
        const auto induced = induced_top_connection(a, c);
        const auto rc = right_from_top(a, induced);
        const auto alpha = r.element(n, m);
        const Poly tr = trace_endo(phi_map(a, c, alpha));
        const Poly one_o = right_action(a, rc, a.one(), alpha);
        const Poly d_alpha = apply_generator(a, GeneratorD{rc}, Multivector::from_element(alpha)).coefficient(Blade());
        if (!(tr == one_o && tr == d_alpha)) o.fail(a.name() + ": trace identity, alpha = " + alpha.to_string());

        RankOneEndomorphism lambda = [&](const Poly& x) {
          AltForm g(n, n, m);
          g.set_value(Blade::full(n), x);
          return generalized_lie_derivative(a, induced, g, alpha).value(Blade::full(n));
        };
        if (!(-divergence_rank_one(lambda, m) == tr)) o.fail(a.name() + ": divergence, alpha = " + alpha.to_string());

        if (is_torsion_free(a, c)) {
          ++torsion_free_cases;
          const auto xi = r.element(n, m);
          if (!(phi_map(a, c, alpha).apply(xi) == -left_connection_apply(a, c, xi, alpha)))
            o.fail(a.name() + ": Phi_alpha(xi) != -nabla_xi alpha");
        }
      }
    }
  }
  if (o.ok && torsion_free_cases < kSamples * static_cast<int>(cat.size()))
    o.fail("too few torsion-free samples: " + std::to_string(torsion_free_cases));
  if (o.ok) o.note = std::to_string(torsion_free_cases) + " torsion-free samples";
  return o;
}

Outcome criterion_6(const std::vector<AlgebraFile>& cat) {
  Outcome o;
  for (const auto& f : cat) {
    const auto& a = f.algebra;
    const std::size_t n = a.rank(), m = a.nvars();
    auto r = rng_for(f, "c6");
    for (int t = 0; t < kSamples && o.ok; ++t) {
      const auto target = random_top(a, r);
      const auto lift = torsionfree_lift(a, target);
      const auto base_induced = induced_top_connection(a, lift.base);
      if (!is_torsion_free(a, lift.connection)) o.fail(a.name() + ": torsion, target " + target.to_string());
      if (!(induced_top_connection(a, lift.connection) == target)) o.fail(a.name() + ": induced != target");
      for (std::size_t i = 0; i < n; ++i) {
        if (!(trace_endo(lift.phi[i]) == target.gamma[i] - base_induced.gamma[i])) o.fail(a.name() + ": trace");
        for (std::size_t j = 0; j < n; ++j)
          if (!(lift.phi[i].apply(LElement::basis(n, m, j)) == lift.phi[j].apply(LElement::basis(n, m, i))))
            o.fail(a.name() + ": Phi not symmetric");
      }
    }
  }
  return o;
}

Outcome criterion_7() {
  Outcome o;
  struct Golden {
    const char* name;
    std::function<RightConnectionOnA(const LieRinehartAlgebra&)> r;
    std::vector<std::size_t> betti;
  };
  const std::vector<Golden> goldens{
      {"abelian-dim2", [](const LieRinehartAlgebra& a) { return RightConnectionOnA::zero(a); }, {1, 2, 1}},
      {"nonabelian-dim2",
       [](const LieRinehartAlgebra& a) {
         return RightConnectionOnA{{Poly(0), Poly::constant(0, Rational(-1))}};
       },
       {0, 1, 1}},
      {"sl2", [](const LieRinehartAlgebra& a) { return RightConnectionOnA::zero(a); }, {1, 0, 0, 1}},
  };
  std::ostringstream note;
  for (const auto& g : goldens) {
    const auto f = load_catalog(g.name);
    const auto start = Clock::now();
    const auto betti = homology_dims(rinehart_complex(f.algebra, GeneratorD{g.r(f.algebra)}));
    const double secs = seconds_since(start);
    if (betti != g.betti) o.fail(std::string(g.name) + ": wrong Betti numbers");
    if (secs >= 1.0) o.fail(std::string(g.name) + ": took " + std::to_string(secs) + " s");
    note << g.name << " (";
    for (std::size_t p = 0; p < betti.size(); ++p) note << (p ? "," : "") << betti[p];
    note << ") ";
  }
  if (o.ok) o.note = note.str();
  return o;
}

Outcome criterion_8(const std::vector<AlgebraFile>& cat) {
  Outcome o;
  int admitted = 0;
  for (const auto& f : cat) {
    const auto& a = f.algebra;
    if (a.nvars() != 0) continue;
    auto r = rng_for(f, "c8");
    std::vector<RightConnectionOnA> candidates{right_from_top(a, f.effective_top())};
    for (int t = 0; t < kSamples; ++t) candidates.push_back(random_right(a, r));
    for (const auto& rc : candidates) {
      const GeneratorD d{rc};
      const bool flat = is_flat(a, top_from_right(a, rc));
      const bool exact = generator_square(a, d, 4, seed_for(f, "c8", admitted)).is_exact;
      if (flat != exact) o.fail(a.name() + ": generator_square disagrees with flatness, r = " + rc.to_string());
      if (!flat) continue;
      ++admitted;
      ChainComplex c;
      try {
        c = rinehart_complex(a, d);
      } catch (const NonExactGenerator& e) {
        o.fail(a.name() + ": flat D rejected: " + e.witness());
        continue;
      }
      for (std::size_t p = 2; p < c.boundaries.size(); ++p)
        if (!matrix_is_zero(matrix_product(c.boundaries[p - 1], c.boundaries[p], c.dims[p - 1])))
          o.fail(a.name() + ": d^2 != 0 at degree " + std::to_string(p) + ", r = " + rc.to_string());
    }
  }
  if (o.ok && admitted == 0) o.fail("no admitted pairs");
  if (o.ok) o.note = std::to_string(admitted) + " flat pairs";
  return o;
}

}  // namespace

int main() {
  const auto cat = all_catalog();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 generator from random right connections", [&] { return criterion_1(cat); }},
      {"2 D^2 = 0 iff flat", [&] { return criterion_2(cat); }},
      {"3 bijection cycles", [&] { return criterion_3(cat); }},
      {"4 covariant derivative identities", [&] { return criterion_4(cat); }},
      {"5 trace, zero torsion, divergence", [&] { return criterion_5(cat); }},
      {"6 torsion-free lift", [&] { return criterion_6(cat); }},
      {"7 homology golden values", [] { return criterion_7(); }},
      {"8 d^2 = 0 for admitted pairs", [&] { return criterion_8(cat); }},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.ok;
    std::printf("%s  criterion %s%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.note.empty() ? "" : "  -- ",
                o.note.c_str());
  }
  return failures == 0 ? 0 : 1;
}
