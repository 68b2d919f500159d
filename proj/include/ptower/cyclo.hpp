#pragma once

#include <memory>
#include <vector>

#include "ptower/padic.hpp"

namespace ptower {

/// Valuation in normalized units (the relevant uniformizer has valuation 1).
/// When exact is false the true valuation is only known to be >= value.
struct Valuation {
    long value = 0;
    bool exact = true;
    bool infinite = false;  // exact zero input

    std::string str() const;
};

/// Minimal polynomial f of pi = zeta_{p^m} - 1 over Q_p:
///   f(x) = sum_{k=0}^{p-1} (x+1)^{k p^{m-1}}
///        = p + sum_{l=1}^{phi-1} a_l x^l + x^phi,  phi = p^{m-1}(p-1).
/// Coefficients are kept both as exact integers and reduced mod p^N, so
/// divisibility statements about a_l can be certified at any precision.
struct MinimalPoly {
    unsigned long p = 0;
    unsigned m = 0;
    std::vector<mpz_class> exact_coeffs;  // a_0 = p, ..., a_{phi-1}; leading 1 implicit
    std::vector<PadicInt> coeffs;         // the same, mod p^N

    unsigned long phi() const { return exact_coeffs.size(); }
};

/// Expand f and return its coefficients; a_l = sum_k C(k p^{m-1}, l).
/// Checks the Eisenstein property on the result.
MinimalPoly minimal_poly(unsigned long p, unsigned m, unsigned precision);

/// d = (p-2)p^{m-1} + p^{m-2} + 1; the congruence lemmas describe a_l below d.
unsigned long coeff_threshold_d(unsigned long p, unsigned m);  // requires m >= 2

enum class CoeffCase { I, II, III, IV, AboveD };

struct CaseTag {
    CoeffCase c = CoeffCase::I;
    unsigned long t = 0;  // only for CaseII: l = t p^{m-1}
    unsigned long d = 0;
};

const char* case_name(CoeffCase c);

/// Partition of l in [1, phi-1]:
///   I:  l < (p-2)p^{m-1}, ord_p(l) < m-1
///   II: l = t p^{m-1}, t in [1, p-2]
///   III: (p-2)p^{m-1} < l < d-1
///   IV: l = d-1
///   AboveD: l >= d
CaseTag classify(unsigned long l, unsigned long p, unsigned m);

/// One row of the congruence report: what the case lemma demands of a_l
/// and whether the exact coefficient satisfies it mod p^2.
struct CongruenceRecord {
    unsigned long l = 0;
    CaseTag tag;
    unsigned long ord = 0;        // exact ord_p(a_l)
    mpz_class residue_mod_p2;     // a_l mod p^2
    mpz_class expected_mod_p2;    // cases II / IV; unused for I / III
    bool pass = false;
};

/// Test every l in [1, d-1] against its case congruence, from exact a_l:
///   I, III: ord_p(a_l) >= 2
///   II(t):  a_l = (-1)^t p / (t+1)  mod p^2
///   IV:     a_{d-1} = -p            mod p^2
/// Failures are recorded, not thrown.
std::vector<CongruenceRecord> check_case_congruences(unsigned long p, unsigned m);

class CycloElement;

/// The quotient ring Z_p[x]/(f(x)) at working precision N: the integral
/// model of Q_p(zeta_{p^m}) with pi the class of x.
class CycloRing {
public:
    CycloRing(unsigned long p, unsigned m, unsigned precision);

    unsigned long prime() const;
    unsigned level() const;       // m
    unsigned precision() const;   // N
    unsigned long phi() const;
    const MinimalPoly& poly() const;
    const mpz_class& modulus() const;  // p^N

    bool same(const CycloRing& other) const;

    CycloElement zero() const;
    CycloElement one() const;
    CycloElement constant(const PadicInt& c) const;
    CycloElement constant(long c) const;
    /// c * pi^k for k < phi (coordinates set directly, no reduction).
    CycloElement monomial(unsigned long pi_pow, const PadicInt& coeff) const;
    CycloElement monomial(unsigned long pi_pow, long coeff) const;
    /// pi^k for any k >= 0, reduced through f.
    CycloElement pi_power(unsigned long k) const;
    CycloElement element(std::vector<PadicInt> coords) const;

private:
    struct Data;
    std::shared_ptr<const Data> data_;
    friend class CycloElement;
    friend CycloElement cyclo_mul(const CycloElement&, const CycloElement&);
};

/// Element of Z_p[x]/(f): coordinates c_0..c_{phi-1} in the power basis of
/// pi, always reduced to degree < phi. Immutable value type.
class CycloElement {
public:
    const CycloRing& ring() const { return ring_; }
    const std::vector<PadicInt>& coords() const { return coords_; }
    const PadicInt& coord(unsigned long i) const { return coords_.at(i); }

    CycloElement operator-() const;
    friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    CycloElement scaled(const PadicInt& c) const;
    CycloElement mul_by_pi() const;

    /// Same ring parameters and identical coordinate residues/flags.
    bool operator==(const CycloElement& other) const;
    bool operator!=(const CycloElement& other) const { return !(*this == other); }

    std::string str() const;

private:
    CycloElement(CycloRing ring, std::vector<PadicInt> coords);
    CycloRing ring_;
    std::vector<PadicInt> coords_;
    friend class CycloRing;
    friend CycloElement cyclo_mul(const CycloElement&, const CycloElement&);
};

/// Product reduced to degree < phi through the monic f.
CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b);

/// pi-adic valuation via the coordinate minimum
///   v = min_l (l + phi * ord(c_l)).
/// Monomial valuations l + phi*k are pairwise distinct integers, so the
/// minimum is attained once and equals the true valuation; the result is
/// exact unless only precision-saturated coordinates attain it.
Valuation cyclo_valuation(const CycloElement& a);

/// Residual of the B_t-form expansion of -p/pi^{phi(p^2)} in cleared form:
///   R = -p - pi^phi * ( sum_t B_t pi^{tp} + pi^{(p-2)p+1} ),
/// returning cyclo_valuation(R). The expansion lemma asserts
///   v(R) >= phi(p^2) + (p-2)p + 2 = expansion_residual_target(p).
/// Requires m = 2 and enough precision to certify the target with headroom;
/// otherwise throws PrecisionError rather than passing silently.
Valuation expansion_residual(const CycloRing& ring, const std::vector<PadicInt>& B);

long expansion_residual_target(unsigned long p);

struct MercioTerm {
    unsigned long exponent = 0;
    unsigned long coeff_mod_p = 0;
};

/// The p=3, m=2 golden expansion: -3/pi^6 = 1 + 2 pi^3 + pi^4 + O(pi^5),
/// verified in cleared-denominator form (residual valuation >= 11) before
/// the terms are returned.
std::vector<MercioTerm> mercio_expansion(unsigned precision);

/// v(-3 - pi^6 (1 + 2 pi^3 + pi^4)) in the p=3, m=2 ring.
Valuation mercio_residual_valuation(unsigned precision);

namespace detail {
/// Throws PrecisionError unless needed_ord < precision: certifying an order
/// of exactly the working precision would leave no headroom between the
/// asserted bound and plain truncation noise.
void require_ord_headroom(unsigned precision, long needed_ord, const char* context);
}  // namespace detail

}  // namespace ptower
