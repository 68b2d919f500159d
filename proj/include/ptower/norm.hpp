#pragma once

#include "ptower/recipes.hpp"
#include "ptower/tower.hpp"

namespace ptower {

struct NormOptions {
    unsigned start_rel_precision = 8;  // unit digits carried through elimination
    unsigned max_rel_precision = 512;  // retry ladder cap
    bool parallel = true;              // OpenMP row updates / pivot scans
    bool force_wide_units = false;     // test hook: skip the machine-word kernel
};

struct NormReport {
    long valuation = 0;
    bool exact = true;
    unsigned rel_precision_used = 0;
    bool used_wide_units = false;
};

/// Exact normalized valuation V(a) = ord_p(det M_a) where M_a is the D x D
/// multiplication-by-a matrix in the monomial basis. The element's
/// coordinates are lifted to the exact integers they are known by; the
/// result certifies the underlying p-adic element whenever V < D * N, which
/// is enforced. Elimination runs over valuation-normalized entries with
/// per-entry precision-loss accounting and retries at doubled relative
/// precision on a "raise N" signal before giving up.
///
/// Throws std::invalid_argument for the exact zero, std::domain_error when
/// the matrix is exactly singular, PrecisionError when certification fails
/// at every precision up to the ladder cap.
Valuation norm_valuation(const TowerElement& a);
NormReport norm_valuation_report(const TowerElement& a, const NormOptions& opts);

struct VerifyOutcome {
    long v_numerator = 0;
    long v_shift = 0;  // pi_shift * V(pi) + theta_shift * V(theta)
    long v_total = 0;
    bool is_uniformizer = false;  // v_total == 1
    bool exact = true;
    unsigned rel_precision_used = 0;
};

/// Norm-route verification of a recipe: V_total = V(numerator) + V(shift),
/// uniformizer iff V_total = 1.
VerifyOutcome verify_uniformizer(const UniformizerRecipe& recipe);
VerifyOutcome verify_uniformizer(const UniformizerRecipe& recipe, const NormOptions& opts);

struct ProofMirrorReport {
    unsigned long p = 0;
    unsigned precision = 0;
    long leading_exponent = 0;      // (2p-3)p + 1
    bool theta0_leading_match = false;   // theta^0 part of s1^p is -pi^{(2p-3)p+1} ...
    Valuation theta0_excess;             // ... up to terms of valuation > that
    bool cross_above = false;            // theta^j (j>=1) parts: graded V > p((2p-3)p+1)
    bool cross_divisible = false;        // their coefficients all have ord_p >= 1
    long certified_valuation = 0;        // p(p-1)(2p-1) when the checks pass
    bool pass = false;
};

/// Mirror of the theorem-1 cancellation in cleared-denominator form: raise
/// s1 = theta + pi^{p-1} + sum_t ((-1)^t/(t+1)) theta pi^t to the p-th power
/// in K_{2,1} and certify that the theta-free part is -pi^{(2p-3)p+1} up to
/// strictly deeper terms while every cross component stays above p times
/// that level. Together these pin V(s1^p) = p(p-1)(2p-1).
ProofMirrorReport proof_mirror_check(unsigned long p, unsigned precision);

namespace detail {

struct ElimOutcome {
    enum class Status { Ok, NeedPrecision, ExactSingular };
    Status status = Status::NeedPrecision;
    long ord = 0;
    mpz_class unit = 0;       // det / p^ord mod p^{unit_rel}, sign folded in
    unsigned unit_rel = 0;
};

/// ord_p(det) of an n x n matrix. abs_bound = 0 means the entries are exact
/// integers (a zero entry is exactly zero); abs_bound = A means each entry
/// is a residue mod p^A of an otherwise unknown value.
ElimOutcome eliminate_ord(const std::vector<mpz_class>& entries, unsigned long n,
                          unsigned long p, unsigned rel_precision, unsigned long abs_bound,
                          bool parallel, bool wide_units);

/// Row-major multiplication-by-a matrix over Z/p^{abs_precision} from the
/// integer-lifted coordinates of a.
std::vector<mpz_class> mult_matrix(const TowerElement& a, unsigned long abs_precision);

unsigned max_word_rel_precision(unsigned long p);

}  // namespace detail

}  // namespace ptower
