#pragma once

#include "lrbv/connections.hpp"
#include "lrbv/gerstenhaber.hpp"

namespace lrbv {

// r_i = D(e_i), read off from the generator's action in degree 1.
RightConnectionOnA right_from_generator(const LieRinehartAlgebra& alg, const GeneratorD& d);

// The unique nabla with (1 o e_i) x = lambda_{e_i}(x) - nabla_{e_i}(x).
TopConnection top_from_right(const LieRinehartAlgebra& alg, const RightConnectionOnA& rc);

// Inverse of top_from_right: r_i = lambda-trace_i - gamma_i.
RightConnectionOnA right_from_top(const LieRinehartAlgebra& alg, const TopConnection& nabla);

// The generator determined by (D alpha) x = lambda_alpha(x) - nabla_alpha(x).
GeneratorD generator_from_top(const LieRinehartAlgebra& alg, const TopConnection& nabla);

// The connection making phi_{D alpha} = -d^nabla(phi_alpha) hold in top
// degree: gamma_i = (-1)^n phi_{D(e_1^..^e_n)}(e_i).
TopConnection top_from_generator(const LieRinehartAlgebra& alg, const GeneratorD& d);

// phi_{D(alpha)} == -d^nabla(phi_alpha) for every basis blade of every
// degree 0..n, with random coefficients.
CheckResult check_theorem_1_8(const LieRinehartAlgebra& alg, const GeneratorD& d, const TopConnection& nabla,
                              int trials, std::uint64_t seed, SampleBounds bounds = {});

// d^nabla phi_alpha (beta) == (-1)^p alpha ^ D(beta) + (-1)^p [alpha, beta]
// for alpha of degree p >= 1 and beta of degree n - p + 1.
CheckResult check_remark_1_9(const LieRinehartAlgebra& alg, const GeneratorD& d, const TopConnection& nabla,
                             int trials, std::uint64_t seed, SampleBounds bounds = {});

// r_i = Tr(Phi_{e_i}); torsion-freeness is not required.
GeneratorD koszul_generator(const LieRinehartAlgebra& alg, const LeftConnectionOnL& nabla);

// Torsion-free connection c/2 on L.
LeftConnectionOnL half_bracket_connection(const LieRinehartAlgebra& alg);

struct TorsionFreeLift {
  LeftConnectionOnL base;
  std::vector<EndoOfL> phi;  // phi[i] = Phi(e_i)
  LeftConnectionOnL connection;
};

// Torsion-free connection on L inducing `target`, built as base + Phi with
// Phi(e_i) e_j = (phi_i e_j + phi_j e_i) / (n + 1) and phi = target - induced(base).
TorsionFreeLift torsionfree_lift(const LieRinehartAlgebra& alg, const TopConnection& target);
// Same with a caller-supplied torsion-free base (std::invalid_argument otherwise).
TorsionFreeLift torsionfree_lift(const LieRinehartAlgebra& alg, const TopConnection& target,
                                 const LeftConnectionOnL& base);

}  // namespace lrbv
