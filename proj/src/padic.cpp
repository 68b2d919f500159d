#include "ptower/padic.hpp"

namespace ptower {

bool is_odd_prime(unsigned long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (unsigned long q = 3; q * q <= p; q += 2) {
        if (p % q == 0) return false;
    }
    return true;
}

void require_odd_prime(unsigned long p) {
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    }
}

std::string Ord::str() const {
    switch (kind) {
        case Kind::Exact: return std::to_string(value);
        case Kind::AtLeast: return ">=" + std::to_string(value);
        case Kind::Infinite: return "+inf";
    }
    return "?";
}

mpz_class pow_ui(unsigned long p, unsigned long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, k);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) {
        throw std::invalid_argument("binomial: k > n (" + std::to_string(k) + " > " +
                                    std::to_string(n) + ")");
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

unsigned long ord_p(const mpz_class& value, unsigned long p) {
    if (value == 0) throw std::invalid_argument("ord_p of exact zero is infinite");
    mpz_class unit, pz(static_cast<unsigned long>(p));
    return mpz_remove(unit.get_mpz_t(), value.get_mpz_t(), pz.get_mpz_t());
}

PadicInt::PadicInt(unsigned long p, unsigned precision, mpz_class residue, bool exact_zero)
    : prime_(p), precision_(precision), residue_(std::move(residue)), exact_zero_(exact_zero) {}

PadicInt PadicInt::from_integer(const mpz_class& value, unsigned long p, unsigned precision) {
    require_odd_prime(p);
    if (precision == 0) throw std::invalid_argument("precision must be positive");
    if (value == 0) return zero(p, precision);
    mpz_class r = value % pow_ui(p, precision);
    if (r < 0) r += pow_ui(p, precision);
    return PadicInt(p, precision, std::move(r), false);
}

PadicInt PadicInt::from_integer(long value, unsigned long p, unsigned precision) {
    return from_integer(mpz_class(value), p, precision);
}

PadicInt PadicInt::from_rational(const mpz_class& num, const mpz_class& den,
                                 unsigned long p, unsigned precision) {
    require_odd_prime(p);
    if (precision == 0) throw std::invalid_argument("precision must be positive");
    if (den == 0) throw std::invalid_argument("from_rational: zero denominator");
    if (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
        throw std::invalid_argument("from_rational: denominator divisible by p");
    }
    if (num == 0) return zero(p, precision);
    mpz_class mod = pow_ui(p, precision);
    mpz_class dinv;
    if (!mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t())) {
        throw std::invalid_argument("from_rational: denominator not invertible");
    }
    mpz_class r = (num * dinv) % mod;
    if (r < 0) r += mod;
    return PadicInt(p, precision, std::move(r), false);
}

PadicInt PadicInt::zero(unsigned long p, unsigned precision) {
    require_odd_prime(p);
    return PadicInt(p, precision, 0, true);
}

PadicInt PadicInt::truncated(const mpz_class& residue, unsigned long p, unsigned precision) {
    if (precision == 0) throw std::invalid_argument("precision must be positive");
    mpz_class r;
    mpz_mod(r.get_mpz_t(), residue.get_mpz_t(), pow_ui(p, precision).get_mpz_t());
    return PadicInt(p, precision, std::move(r), false);
}

PadicInt PadicInt::one(unsigned long p, unsigned precision) {
    return PadicInt(p, precision, 1, false);
}

Ord PadicInt::ord() const {
    if (exact_zero_) return Ord{0, Ord::Kind::Infinite};
    if (residue_ == 0) return Ord{static_cast<long>(precision_), Ord::Kind::AtLeast};
    return Ord{static_cast<long>(ord_p(residue_, prime_)), Ord::Kind::Exact};
}

bool PadicInt::is_unit() const {
    return !exact_zero_ && residue_ != 0 && !mpz_divisible_ui_p(residue_.get_mpz_t(), prime_);
}

PadicInt PadicInt::inv_unit() const {
    if (!is_unit()) {
        throw std::domain_error("inv_unit: not a unit (ord > 0)");
    }
    mpz_class mod = pow_ui(prime_, precision_);
    mpz_class r;
    mpz_invert(r.get_mpz_t(), residue_.get_mpz_t(), mod.get_mpz_t());
    return PadicInt(prime_, precision_, std::move(r), false);
}

PadicInt PadicInt::with_precision(unsigned precision) const {
    if (precision == 0) throw std::invalid_argument("precision must be positive");
    if (exact_zero_) return PadicInt(prime_, precision, 0, true);
    if (precision > precision_) {
        throw std::invalid_argument("with_precision: cannot lift a truncated value");
    }
    if (precision == precision_) return *this;
    mpz_class r = residue_ % pow_ui(prime_, precision);
    return PadicInt(prime_, precision, std::move(r), false);
}

void PadicInt::check_same_prime(const PadicInt& a, const PadicInt& b) {
    if (a.prime_ != b.prime_) {
        throw std::invalid_argument("mismatched primes: " + std::to_string(a.prime_) + " vs " +
                                    std::to_string(b.prime_));
    }
}

PadicInt PadicInt::operator-() const {
    if (exact_zero_ || residue_ == 0) return *this;
    return PadicInt(prime_, precision_, pow_ui(prime_, precision_) - residue_, false);
}

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    PadicInt::check_same_prime(a, b);
    if (a.exact_zero_) return b.with_precision(std::min(a.precision_, b.precision_));
    if (b.exact_zero_) return a.with_precision(std::min(a.precision_, b.precision_));
    unsigned n = std::min(a.precision_, b.precision_);
    mpz_class r = (a.residue_ + b.residue_) % pow_ui(a.prime_, n);
    return PadicInt(a.prime_, n, std::move(r), false);
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) { return a + (-b); }

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    PadicInt::check_same_prime(a, b);
    unsigned n = std::min(a.precision_, b.precision_);
    if (a.exact_zero_ || b.exact_zero_) return PadicInt::zero(a.prime_, n);
    mpz_class r = (a.residue_ * b.residue_) % pow_ui(a.prime_, n);
    return PadicInt(a.prime_, n, std::move(r), false);
}

bool PadicInt::operator==(const PadicInt& other) const {
    return prime_ == other.prime_ && precision_ == other.precision_ &&
           residue_ == other.residue_ && exact_zero_ == other.exact_zero_;
}

std::string PadicInt::str() const {
    if (exact_zero_) return "0 (exact)";
    return residue_.get_str() + " mod " + std::to_string(prime_) + "^" +
           std::to_string(precision_);
}

}  // namespace ptower
