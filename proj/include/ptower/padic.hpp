#pragma once

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace ptower {

/// Raised when a computation cannot be certified at the working precision.
/// Callers that own the inputs may rebuild them at suggested_precision() and
/// retry; the CLI maps this to its own exit code.
class PrecisionError : public std::runtime_error {
public:
    PrecisionError(const std::string& what, unsigned long suggested)
        : std::runtime_error(what + " (raise N to at least " + std::to_string(suggested) + ")"),
          suggested_(suggested) {}

    unsigned long suggested_precision() const { return suggested_; }

private:
    unsigned long suggested_;
};

bool is_odd_prime(unsigned long p);
void require_odd_prime(unsigned long p);

/// p-adic order of a truncated value. A residue that vanishes to working
/// precision only certifies a lower bound, which must stay distinguishable
/// from both exact orders and the exact zero.
struct Ord {
    enum class Kind { Exact, AtLeast, Infinite };

    long value = 0;  // meaningless for Infinite
    Kind kind = Kind::Exact;

    bool exact() const { return kind == Kind::Exact; }
    bool infinite() const { return kind == Kind::Infinite; }

    /// Sound lower bound usable in valuation arithmetic (Infinite -> huge).
    long lower_bound() const {
        return infinite() ? std::numeric_limits<long>::max() / 4 : value;
    }

    /// True when the order is certainly >= k.
    bool at_least(long k) const { return infinite() || value >= k; }

    std::string str() const;
};

/// Truncated p-adic integer: a residue mod p^N with tracked precision.
///
/// "Zero mod p^N" and the exact zero are distinct states. The former means
/// the value is only known to be divisible by p^N; the latter is the ring
/// zero with infinite order. Arithmetic never lifts precision: an operation
/// on operands of precision Na and Nb yields precision min(Na, Nb).
class PadicInt {
public:
    PadicInt() = default;  // exact zero with no ring attached; assign before use

    static PadicInt from_integer(const mpz_class& value, unsigned long p, unsigned precision);
    static PadicInt from_integer(long value, unsigned long p, unsigned precision);

    /// num/den mod p^N for den coprime to p. Signs handled by modular negation.
    static PadicInt from_rational(const mpz_class& num, const mpz_class& den,
                                  unsigned long p, unsigned precision);

    static PadicInt zero(unsigned long p, unsigned precision);  // exact zero
    static PadicInt one(unsigned long p, unsigned precision);

    /// A value known to equal `residue` mod p^N and nothing more. Never the
    /// exact zero, even when the residue vanishes.
    static PadicInt truncated(const mpz_class& residue, unsigned long p, unsigned precision);

    unsigned long prime() const { return prime_; }
    unsigned precision() const { return precision_; }
    const mpz_class& residue() const { return residue_; }
    bool is_exact_zero() const { return exact_zero_; }
    bool is_zero_residue() const { return residue_ == 0; }

    /// Largest k <= N with p^k | residue; "at least N" for a non-exact zero
    /// residue; Infinite for the exact zero.
    Ord ord() const;

    bool is_unit() const;

    /// Inverse of a unit mod p^N. Throws std::domain_error on non-units.
    PadicInt inv_unit() const;

    /// Truncate to a smaller precision. Lifting is only allowed for the
    /// exact zero; anything else would fabricate unknown digits.
    PadicInt with_precision(unsigned precision) const;

    PadicInt operator-() const;
    friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator*(const PadicInt& a, const PadicInt& b);

    /// Same residue, precision and prime. The exact-zero flag participates:
    /// exact zero != saturated zero.
    bool operator==(const PadicInt& other) const;
    bool operator!=(const PadicInt& other) const { return !(*this == other); }

    std::string str() const;

private:
    PadicInt(unsigned long p, unsigned precision, mpz_class residue, bool exact_zero);

    static void check_same_prime(const PadicInt& a, const PadicInt& b);

    unsigned long prime_ = 0;
    unsigned precision_ = 0;
    mpz_class residue_ = 0;
    bool exact_zero_ = true;
};

/// p^k as an exact integer.
mpz_class pow_ui(unsigned long p, unsigned long k);

/// Exact binomial coefficient C(n, k) over arbitrary-precision integers.
/// Reduction mod p^N, when wanted, happens after the exact value exists.
mpz_class binomial(unsigned long n, unsigned long k);

/// ord_p of an exact nonzero integer.
unsigned long ord_p(const mpz_class& value, unsigned long p);

}  // namespace ptower
