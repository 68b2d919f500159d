#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ptower/padic.hpp"

namespace ptower {

/// One summand of a candidate uniformizer: coeff * pi^{pi_pow} theta^{theta_pow}.
struct RecipeTerm {
    unsigned long theta_pow = 0;
    unsigned long pi_pow = 0;
    PadicInt coeff;
};

/// Symbolic candidate uniformizer of K_{m,n}: a global shift
/// pi^{pi_shift} theta^{theta_shift} (either exponent may be negative)
/// applied to an integral numerator given by `terms`. Carrying both shift
/// exponents lets the pure-theta denominators and the pi-denominators share
/// one representation.
struct UniformizerRecipe {
    unsigned long p = 0;
    unsigned m = 0;
    unsigned n = 0;
    unsigned precision = 0;
    long pi_shift = 0;
    long theta_shift = 0;
    std::vector<RecipeTerm> terms;
    std::string label;  // theorem-1 | theorem-2 | viviani | custom
};

/// b_1..b_{p-2} with b_t = (-1)^{t+1}/(t+1); every entry is a p-adic unit.
std::vector<PadicInt> b_coefficients(unsigned long p, unsigned precision);

/// The convolution recurrence B_0 = 1, B_k = sum_{j=1}^{k} b_j B_{k-j},
/// evaluated through k = p-2 at full working precision. values_mod_p is the
/// reduction used for table display.
struct BSequence {
    unsigned long p = 0;
    unsigned precision = 0;
    std::vector<PadicInt> values;
    std::vector<unsigned long> values_mod_p;
};

BSequence b_sequence(unsigned long p, unsigned precision);

/// pi^{-(2p-3)} ( theta + pi^{p-1} + sum_{t=1}^{p-2} ((-1)^t/(t+1)) theta pi^t )
/// in K_{2,1}.
UniformizerRecipe build_theorem1(unsigned long p, unsigned precision);

/// pi^{-(2p-3)} ( theta + sum_{t=0}^{p-2} B_t pi^{t+p-1} ) in K_{2,1}.
/// Zero B_t keep their term (the table renderer omits them).
UniformizerRecipe build_theorem2(unsigned long p, unsigned precision);

/// (1 - zeta_p) / (p^{1/p} ... p^{1/p^n}) in K_{1,n}: numerator -pi, with
/// the denominator as the single theta-power theta^{1 + p + ... + p^{n-1}}
/// where theta = p^{1/p^n}.
UniformizerRecipe build_viviani(unsigned long p, unsigned n, unsigned precision);

/// All l in [1, d-1] with ord_p(a_l) exactly 1 and p not dividing l,
/// from the exact coefficients. Terms with l >= d are absorbed into O(pi^d)
/// regardless of their order, so the scan stops below d; an empty result is
/// a statement about that range only.
std::vector<unsigned long> search_exceptional_l(unsigned long p, unsigned m);

/// Paper-style one-line rendering of a theorem-2-shaped recipe with
/// coefficients reduced mod p; zero coefficients are omitted.
/// Example (p=3): "pi^-3 ( 3^(1/3) + pi^2 + 2 pi^3 )".
std::string render_table_line(const UniformizerRecipe& recipe);

nlohmann::ordered_json recipe_to_json(const UniformizerRecipe& recipe);
UniformizerRecipe recipe_from_json(const nlohmann::json& j);

}  // namespace ptower
