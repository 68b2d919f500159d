#include "ptower/cyclo.hpp"

#include <algorithm>

namespace ptower {

std::string Valuation::str() const {
    if (infinite) return "+inf";
    return (exact ? "" : ">=") + std::to_string(value);
}

namespace {

unsigned long pow_ul(unsigned long base, unsigned exp) {
    unsigned long r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (r > 100000000UL / base) {
            throw std::invalid_argument("ring degree out of supported (desk-scale) range");
        }
        r *= base;
    }
    return r;
}

}  // namespace

namespace detail {

void require_ord_headroom(unsigned precision, long needed_ord, const char* context) {
    if (needed_ord >= static_cast<long>(precision)) {
        throw PrecisionError(std::string(context) + ": certifying ord >= " +
                                 std::to_string(needed_ord) + " needs headroom at precision " +
                                 std::to_string(precision),
                             static_cast<unsigned long>(needed_ord) + 1);
    }
}

}  // namespace detail

MinimalPoly minimal_poly(unsigned long p, unsigned m, unsigned precision) {
    require_odd_prime(p);
    if (m < 1) throw std::invalid_argument("level m must be >= 1");
    if (precision == 0) throw std::invalid_argument("precision must be positive");
    const unsigned long pm1 = pow_ul(p, m - 1);
    const unsigned long phi = pm1 * (p - 1);

    MinimalPoly f;
    f.p = p;
    f.m = m;
    f.exact_coeffs.resize(phi);
    f.exact_coeffs[0] = p;

#pragma omp parallel for schedule(dynamic)
    for (long long ls = 1; ls < static_cast<long long>(phi); ++ls) {
        const unsigned long l = static_cast<unsigned long>(ls);
        const unsigned long kmin = (l + pm1 - 1) / pm1;
        mpz_class sum = 0;
        for (unsigned long k = kmin; k <= p - 1; ++k) {
            sum += binomial(k * pm1, l);
        }
        f.exact_coeffs[l] = sum;
    }

    for (unsigned long l = 0; l < phi; ++l) {
        if (!mpz_divisible_ui_p(f.exact_coeffs[l].get_mpz_t(), p)) {
            throw std::logic_error("minimal_poly: Eisenstein divisibility failed at l=" +
                                   std::to_string(l));
        }
    }
    if (mpz_divisible_ui_p(f.exact_coeffs[0].get_mpz_t(), p * p)) {
        throw std::logic_error("minimal_poly: constant term divisible by p^2");
    }

    f.coeffs.reserve(phi);
    for (unsigned long l = 0; l < phi; ++l) {
        f.coeffs.push_back(PadicInt::from_integer(f.exact_coeffs[l], p, precision));
    }
    return f;
}

unsigned long coeff_threshold_d(unsigned long p, unsigned m) {
    if (m < 2) throw std::invalid_argument("threshold d requires m >= 2");
    return (p - 2) * pow_ul(p, m - 1) + pow_ul(p, m - 2) + 1;
}

const char* case_name(CoeffCase c) {
    switch (c) {
        case CoeffCase::I: return "i";
        case CoeffCase::II: return "ii";
        case CoeffCase::III: return "iii";
        case CoeffCase::IV: return "iv";
        case CoeffCase::AboveD: return "above-d";
    }
    return "?";
}

CaseTag classify(unsigned long l, unsigned long p, unsigned m) {
    require_odd_prime(p);
    if (m < 2) throw std::invalid_argument("classify requires m >= 2");
    const unsigned long pm1 = pow_ul(p, m - 1);
    const unsigned long phi = pm1 * (p - 1);
    const unsigned long d = coeff_threshold_d(p, m);
    if (l < 1 || l >= phi) {
        throw std::invalid_argument("classify: l out of range [1, phi-1]");
    }
    if (l >= d) return CaseTag{CoeffCase::AboveD, 0, d};
    if (l == d - 1) return CaseTag{CoeffCase::IV, 0, d};
    if (l % pm1 == 0) {
        return CaseTag{CoeffCase::II, l / pm1, d};
    }
    if (l < (p - 2) * pm1) return CaseTag{CoeffCase::I, 0, d};
    return CaseTag{CoeffCase::III, 0, d};
}

std::vector<CongruenceRecord> check_case_congruences(unsigned long p, unsigned m) {
    const MinimalPoly f = minimal_poly(p, m, 2);
    const unsigned long d = coeff_threshold_d(p, m);
    const mpz_class p2 = mpz_class(p) * static_cast<long>(p);

    std::vector<CongruenceRecord> out(d - 1);
#pragma omp parallel for schedule(static)
    for (long long ls = 1; ls < static_cast<long long>(d); ++ls) {
        const unsigned long l = static_cast<unsigned long>(ls);
        CongruenceRecord rec;
        rec.l = l;
        rec.tag = classify(l, p, m);
        const mpz_class& a = f.exact_coeffs[l];
        rec.ord = ord_p(a, p);
        mpz_mod(rec.residue_mod_p2.get_mpz_t(), a.get_mpz_t(), p2.get_mpz_t());
        switch (rec.tag.c) {
            case CoeffCase::I:
            case CoeffCase::III:
                rec.pass = rec.ord >= 2;
                break;
            case CoeffCase::II: {
                const unsigned long t = rec.tag.t;
                mpz_class inv, tp1(static_cast<unsigned long>(t + 1));
                mpz_invert(inv.get_mpz_t(), tp1.get_mpz_t(), p2.get_mpz_t());
                mpz_class exp = inv * static_cast<long>(p);
                if (t % 2 == 1) exp = -exp;
                mpz_mod(rec.expected_mod_p2.get_mpz_t(), exp.get_mpz_t(), p2.get_mpz_t());
                rec.pass = rec.residue_mod_p2 == rec.expected_mod_p2;
                break;
            }
            case CoeffCase::IV:
                rec.expected_mod_p2 = p2 - static_cast<long>(p);
                rec.pass = rec.residue_mod_p2 == rec.expected_mod_p2;
                break;
            case CoeffCase::AboveD:
                rec.pass = false;  // unreachable: l < d
                break;
        }
        out[l - 1] = std::move(rec);
    }
    return out;
}

struct CycloRing::Data {
    unsigned long p = 0;
    unsigned m = 0;
    unsigned precision = 0;
    unsigned long phi = 0;
    MinimalPoly f;
    mpz_class modulus;
    std::vector<mpz_class> f_tail;  // a_i mod p^N, non-negative
};

CycloRing::CycloRing(unsigned long p, unsigned m, unsigned precision) {
    auto d = std::make_shared<Data>();
    d->f = minimal_poly(p, m, precision);
    d->p = p;
    d->m = m;
    d->precision = precision;
    d->phi = d->f.phi();
    d->modulus = pow_ui(p, precision);
    d->f_tail.reserve(d->phi);
    for (const auto& c : d->f.coeffs) d->f_tail.push_back(c.residue());
    data_ = std::move(d);
}

unsigned long CycloRing::prime() const { return data_->p; }
unsigned CycloRing::level() const { return data_->m; }
unsigned CycloRing::precision() const { return data_->precision; }
unsigned long CycloRing::phi() const { return data_->phi; }
const MinimalPoly& CycloRing::poly() const { return data_->f; }
const mpz_class& CycloRing::modulus() const { return data_->modulus; }

bool CycloRing::same(const CycloRing& other) const {
    return data_->p == other.data_->p && data_->m == other.data_->m &&
           data_->precision == other.data_->precision;
}

CycloElement CycloRing::zero() const {
    std::vector<PadicInt> coords(data_->phi, PadicInt::zero(data_->p, data_->precision));
    return CycloElement(*this, std::move(coords));
}

CycloElement CycloRing::one() const { return constant(1); }

CycloElement CycloRing::constant(const PadicInt& c) const { return monomial(0, c); }

CycloElement CycloRing::constant(long c) const {
    return monomial(0, PadicInt::from_integer(c, data_->p, data_->precision));
}

CycloElement CycloRing::monomial(unsigned long pi_pow, const PadicInt& coeff) const {
    if (pi_pow >= data_->phi) {
        throw std::invalid_argument("monomial: pi power must be < phi");
    }
    if (coeff.prime() != data_->p) throw std::invalid_argument("monomial: prime mismatch");
    std::vector<PadicInt> coords(data_->phi, PadicInt::zero(data_->p, data_->precision));
    coords[pi_pow] = coeff.with_precision(data_->precision);
    return CycloElement(*this, std::move(coords));
}

CycloElement CycloRing::monomial(unsigned long pi_pow, long coeff) const {
    return monomial(pi_pow, PadicInt::from_integer(coeff, data_->p, data_->precision));
}

CycloElement CycloRing::pi_power(unsigned long k) const {
    if (k < data_->phi) return monomial(k, 1);
    CycloElement e = monomial(data_->phi - 1, 1);
    for (unsigned long i = data_->phi - 1; i < k; ++i) e = e.mul_by_pi();
    return e;
}

CycloElement CycloRing::element(std::vector<PadicInt> coords) const {
    if (coords.size() != data_->phi) {
        throw std::invalid_argument("element: need exactly phi coordinates");
    }
    for (auto& c : coords) {
        if (!c.is_exact_zero() && c.prime() != data_->p) {
            throw std::invalid_argument("element: prime mismatch in coordinates");
        }
        c = c.is_exact_zero() ? PadicInt::zero(data_->p, data_->precision)
                              : c.with_precision(data_->precision);
    }
    return CycloElement(*this, std::move(coords));
}

CycloElement::CycloElement(CycloRing ring, std::vector<PadicInt> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {}

namespace {

void check_same_ring(const CycloRing& a, const CycloRing& b) {
    if (!a.same(b)) throw std::invalid_argument("cyclotomic ring mismatch");
}

}  // namespace

CycloElement CycloElement::operator-() const {
    std::vector<PadicInt> coords;
    coords.reserve(coords_.size());
    for (const auto& c : coords_) coords.push_back(-c);
    return CycloElement(ring_, std::move(coords));
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    check_same_ring(a.ring(), b.ring());
    std::vector<PadicInt> coords;
    coords.reserve(a.coords().size());
    for (size_t i = 0; i < a.coords().size(); ++i) coords.push_back(a.coords()[i] + b.coords()[i]);
    return a.ring().element(std::move(coords));
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) { return a + (-b); }

CycloElement operator*(const CycloElement& a, const CycloElement& b) { return cyclo_mul(a, b); }

CycloElement CycloElement::scaled(const PadicInt& c) const {
    std::vector<PadicInt> coords;
    coords.reserve(coords_.size());
    for (const auto& x : coords_) coords.push_back(x * c);
    return CycloElement(ring_, std::move(coords));
}

CycloElement CycloElement::mul_by_pi() const {
    const unsigned long phi = ring_.phi();
    const PadicInt top = coords_[phi - 1];
    std::vector<PadicInt> coords(phi, PadicInt::zero(ring_.prime(), ring_.precision()));
    for (unsigned long i = phi - 1; i >= 1; --i) coords[i] = coords_[i - 1];
    if (!top.is_exact_zero()) {
        const auto& f = ring_.poly().coeffs;
        for (unsigned long i = 0; i < phi; ++i) coords[i] = coords[i] - top * f[i];
    }
    return CycloElement(ring_, std::move(coords));
}

CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b) {
    check_same_ring(a.ring(), b.ring());
    const auto& d = *a.ring_.data_;
    const unsigned long phi = d.phi;
    const mpz_class& mod = d.modulus;

    std::vector<mpz_class> t(2 * phi - 1);
    std::vector<char> exact_zero(2 * phi - 1, 1);

    for (unsigned long i = 0; i < phi; ++i) {
        const PadicInt& ai = a.coords_[i];
        if (ai.is_exact_zero()) continue;
        const mpz_class& ra = ai.residue();
        for (unsigned long j = 0; j < phi; ++j) {
            const PadicInt& bj = b.coords_[j];
            if (bj.is_exact_zero()) continue;
            if (ra != 0 && bj.residue() != 0) {
                mpz_addmul(t[i + j].get_mpz_t(), ra.get_mpz_t(), bj.residue().get_mpz_t());
            }
            exact_zero[i + j] = 0;
        }
    }

    // Fold degrees >= phi through the monic relation pi^phi = -sum a_i pi^i.
    for (unsigned long k = 2 * phi - 2; k >= phi; --k) {
        if (exact_zero[k]) continue;
        mpz_mod(t[k].get_mpz_t(), t[k].get_mpz_t(), mod.get_mpz_t());
        for (unsigned long i = 0; i < phi; ++i) {
            if (t[k] != 0) {
                mpz_submul(t[k - phi + i].get_mpz_t(), t[k].get_mpz_t(), d.f_tail[i].get_mpz_t());
            }
            exact_zero[k - phi + i] = 0;
        }
    }

    std::vector<PadicInt> coords;
    coords.reserve(phi);
    for (unsigned long i = 0; i < phi; ++i) {
        if (exact_zero[i]) {
            coords.push_back(PadicInt::zero(d.p, d.precision));
        } else {
            mpz_class r;
            mpz_mod(r.get_mpz_t(), t[i].get_mpz_t(), mod.get_mpz_t());
            coords.push_back(PadicInt::truncated(r, d.p, d.precision));
        }
    }
    return CycloElement(a.ring_, std::move(coords));
}

bool CycloElement::operator==(const CycloElement& other) const {
    if (!ring_.same(other.ring_)) return false;
    return coords_ == other.coords_;
}

std::string CycloElement::str() const {
    std::string s;
    for (unsigned long i = 0; i < coords_.size(); ++i) {
        const auto& c = coords_[i];
        if (c.is_exact_zero() || c.residue() == 0) continue;
        if (!s.empty()) s += " + ";
        s += c.residue().get_str() + "*pi^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

Valuation cyclo_valuation(const CycloElement& a) {
    const long phi = static_cast<long>(a.ring().phi());
    bool found = false;
    long best = 0;
    bool best_exact = false;
    for (unsigned long l = 0; l < a.coords().size(); ++l) {
        const Ord o = a.coords()[l].ord();
        if (o.infinite()) continue;
        const long val = static_cast<long>(l) + phi * o.value;
        if (!found || val < best) {
            found = true;
            best = val;
            best_exact = o.exact();
        } else if (val == best && o.exact()) {
            best_exact = true;
        }
    }
    if (!found) return Valuation{0, true, true};
    return Valuation{best, best_exact, false};
}

long expansion_residual_target(unsigned long p) {
    const long phi2 = static_cast<long>(p * (p - 1));
    return phi2 + static_cast<long>((p - 2) * p) + 2;
}

Valuation expansion_residual(const CycloRing& ring, const std::vector<PadicInt>& B) {
    if (ring.level() != 2) {
        throw std::invalid_argument("expansion_residual: ring level must be m = 2");
    }
    const unsigned long p = ring.prime();
    if (B.size() != p - 1) {
        throw std::invalid_argument("expansion_residual: need B_0..B_{p-2}");
    }
    const long phi = static_cast<long>(ring.phi());
    const long target = expansion_residual_target(p);
    const long needed = (target + phi - 1) / phi;
    detail::require_ord_headroom(ring.precision(), needed, "expansion_residual");

    CycloElement series = ring.monomial((p - 2) * p + 1, 1);
    for (unsigned long t = 0; t + 1 < p; ++t) {
        series = series + ring.monomial(t * p, B[t].with_precision(ring.precision()));
    }
    const CycloElement residual =
        ring.constant(-static_cast<long>(p)) - ring.pi_power(ring.phi()) * series;
    return cyclo_valuation(residual);
}

std::vector<MercioTerm> mercio_expansion(unsigned precision) {
    const std::vector<MercioTerm> terms = {{0, 1}, {3, 2}, {4, 1}};
    const Valuation residual = mercio_residual_valuation(precision);
    if (residual.value < expansion_residual_target(3)) {
        throw std::logic_error("mercio_expansion: residual valuation " + residual.str() +
                               " below the certified bound");
    }
    return terms;
}

Valuation mercio_residual_valuation(unsigned precision) {
    CycloRing ring(3, 2, precision);
    const std::vector<PadicInt> B = {PadicInt::one(3, precision),
                                     PadicInt::from_integer(2, 3, precision)};
    return expansion_residual(ring, B);
}

}  // namespace ptower
