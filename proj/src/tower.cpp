#include "ptower/tower.hpp"

namespace ptower {

namespace {

unsigned long pow_ul_checked(unsigned long base, unsigned exp) {
    unsigned long r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (r > 100000000UL / base) {
            throw std::invalid_argument("tower degree out of supported (desk-scale) range");
        }
        r *= base;
    }
    return r;
}

}  // namespace

struct TowerRing::Data {
    unsigned long p = 0;
    unsigned m = 0;
    unsigned n = 0;
    unsigned precision = 0;
    CycloRing cyclo;
    unsigned long deg_y = 0;
    unsigned long degree = 0;

    Data(unsigned long p_, unsigned m_, unsigned n_, unsigned precision_)
        : p(p_), m(m_), n(n_), precision(precision_), cyclo(p_, m_, precision_) {}
};

TowerRing::TowerRing(unsigned long p, unsigned m, unsigned n, unsigned precision) {
    if (n < 1) throw std::invalid_argument("root level n must be >= 1");
    auto d = std::make_shared<Data>(p, m, n, precision);
    d->deg_y = pow_ul_checked(p, n);
    if (d->cyclo.phi() > 100000000UL / d->deg_y) {
        throw std::invalid_argument("tower degree out of supported (desk-scale) range");
    }
    d->degree = d->cyclo.phi() * d->deg_y;
    data_ = std::move(d);
}

unsigned long TowerRing::prime() const { return data_->p; }
unsigned TowerRing::level_m() const { return data_->m; }
unsigned TowerRing::level_n() const { return data_->n; }
unsigned TowerRing::precision() const { return data_->precision; }
unsigned long TowerRing::deg_x() const { return data_->cyclo.phi(); }
unsigned long TowerRing::deg_y() const { return data_->deg_y; }
unsigned long TowerRing::degree() const { return data_->degree; }
const CycloRing& TowerRing::cyclo() const { return data_->cyclo; }
const mpz_class& TowerRing::modulus() const { return data_->cyclo.modulus(); }

long TowerRing::v_pi() const { return static_cast<long>(data_->deg_y); }
long TowerRing::v_theta() const { return static_cast<long>(data_->cyclo.phi()); }
long TowerRing::v_p() const { return static_cast<long>(data_->degree); }

bool TowerRing::same(const TowerRing& other) const {
    return data_->p == other.data_->p && data_->m == other.data_->m &&
           data_->n == other.data_->n && data_->precision == other.data_->precision;
}

TowerElement TowerRing::zero() const {
    std::vector<PadicInt> coords(data_->degree, PadicInt::zero(data_->p, data_->precision));
    return TowerElement(*this, std::move(coords));
}

TowerElement TowerRing::one() const { return monomial(0, 0, 1); }
TowerElement TowerRing::pi() const { return monomial(1, 0, 1); }
TowerElement TowerRing::theta() const { return monomial(0, 1, 1); }

TowerElement TowerRing::monomial(unsigned long pi_pow, unsigned long theta_pow,
                                 const PadicInt& coeff) const {
    if (pi_pow >= deg_x()) throw std::invalid_argument("monomial: pi power must be < phi");
    if (theta_pow >= deg_y()) throw std::invalid_argument("monomial: theta power must be < p^n");
    if (coeff.prime() != data_->p) throw std::invalid_argument("monomial: prime mismatch");
    std::vector<PadicInt> coords(data_->degree, PadicInt::zero(data_->p, data_->precision));
    coords[theta_pow * deg_x() + pi_pow] = coeff.with_precision(data_->precision);
    return TowerElement(*this, std::move(coords));
}

TowerElement TowerRing::monomial(unsigned long pi_pow, unsigned long theta_pow, long coeff) const {
    return monomial(pi_pow, theta_pow, PadicInt::from_integer(coeff, data_->p, data_->precision));
}

TowerElement TowerRing::element(std::vector<PadicInt> coords) const {
    if (coords.size() != data_->degree) {
        throw std::invalid_argument("element: need exactly D coordinates");
    }
    for (auto& c : coords) {
        if (!c.is_exact_zero() && c.prime() != data_->p) {
            throw std::invalid_argument("element: prime mismatch in coordinates");
        }
        c = c.is_exact_zero() ? PadicInt::zero(data_->p, data_->precision)
                              : c.with_precision(data_->precision);
    }
    return TowerElement(*this, std::move(coords));
}

TowerElement TowerRing::from_cyclo(const CycloElement& a) const {
    if (!a.ring().same(data_->cyclo)) {
        throw std::invalid_argument("from_cyclo: cyclotomic ring mismatch");
    }
    std::vector<PadicInt> coords(data_->degree, PadicInt::zero(data_->p, data_->precision));
    for (unsigned long i = 0; i < deg_x(); ++i) coords[i] = a.coords()[i];
    return TowerElement(*this, std::move(coords));
}

TowerElement::TowerElement(TowerRing ring, std::vector<PadicInt> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {}

const PadicInt& TowerElement::coord(unsigned long pi_pow, unsigned long theta_pow) const {
    return coords_.at(theta_pow * ring_.deg_x() + pi_pow);
}

namespace {

void check_same_ring(const TowerRing& a, const TowerRing& b) {
    if (!a.same(b)) throw std::invalid_argument("tower ring mismatch");
}

}  // namespace

TowerElement TowerElement::operator-() const {
    std::vector<PadicInt> coords;
    coords.reserve(coords_.size());
    for (const auto& c : coords_) coords.push_back(-c);
    return TowerElement(ring_, std::move(coords));
}

TowerElement operator+(const TowerElement& a, const TowerElement& b) {
    check_same_ring(a.ring(), b.ring());
    std::vector<PadicInt> coords;
    coords.reserve(a.coords().size());
    for (size_t i = 0; i < a.coords().size(); ++i) coords.push_back(a.coords()[i] + b.coords()[i]);
    return a.ring().element(std::move(coords));
}

TowerElement operator-(const TowerElement& a, const TowerElement& b) { return a + (-b); }

TowerElement operator*(const TowerElement& a, const TowerElement& b) { return tower_mul(a, b); }

TowerElement TowerElement::pow(unsigned long e) const {
    TowerElement base = *this;
    TowerElement acc = ring_.one();
    while (e > 0) {
        if (e & 1UL) acc = tower_mul(acc, base);
        e >>= 1UL;
        if (e > 0) base = tower_mul(base, base);
    }
    return acc;
}

CycloElement TowerElement::theta_component(unsigned long j) const {
    const unsigned long phi = ring_.deg_x();
    std::vector<PadicInt> coords(coords_.begin() + j * phi, coords_.begin() + (j + 1) * phi);
    return ring_.cyclo().element(std::move(coords));
}

bool TowerElement::is_exact_zero() const {
    for (const auto& c : coords_) {
        if (!c.is_exact_zero()) return false;
    }
    return true;
}

bool TowerElement::operator==(const TowerElement& other) const {
    if (!ring_.same(other.ring_)) return false;
    return coords_ == other.coords_;
}

std::string TowerElement::str() const {
    std::string s;
    for (unsigned long j = 0; j < ring_.deg_y(); ++j) {
        for (unsigned long i = 0; i < ring_.deg_x(); ++i) {
            const auto& c = coord(i, j);
            if (c.is_exact_zero() || c.residue() == 0) continue;
            if (!s.empty()) s += " + ";
            s += c.residue().get_str();
            if (i > 0) s += "*pi^" + std::to_string(i);
            if (j > 0) s += "*theta^" + std::to_string(j);
        }
    }
    return s.empty() ? "0" : s;
}

TowerElement tower_mul(const TowerElement& a, const TowerElement& b) {
    check_same_ring(a.ring(), b.ring());
    const TowerRing& R = a.ring();
    const unsigned long phi = R.deg_x();
    const unsigned long dy = R.deg_y();
    const mpz_class& mod = R.modulus();
    const unsigned long p = R.prime();
    const unsigned precision = R.precision();

    const unsigned long gx = 2 * phi - 1;
    const unsigned long gy = 2 * dy - 1;
    std::vector<mpz_class> t(gx * gy);
    std::vector<char> exact_zero(gx * gy, 1);

    // Convolution over both variables. Output cells are independent, so the
    // grid can be filled one output theta-slice at a time in parallel.
#pragma omp parallel for schedule(dynamic)
    for (long long jos = 0; jos < static_cast<long long>(gy); ++jos) {
        const unsigned long jo = static_cast<unsigned long>(jos);
        const unsigned long j1_lo = jo >= dy ? jo - dy + 1 : 0;
        const unsigned long j1_hi = std::min(jo, dy - 1);
        for (unsigned long j1 = j1_lo; j1 <= j1_hi; ++j1) {
            const unsigned long j2 = jo - j1;
            for (unsigned long i1 = 0; i1 < phi; ++i1) {
                const PadicInt& ca = a.coords()[j1 * phi + i1];
                if (ca.is_exact_zero()) continue;
                const mpz_class& ra = ca.residue();
                for (unsigned long i2 = 0; i2 < phi; ++i2) {
                    const PadicInt& cb = b.coords()[j2 * phi + i2];
                    if (cb.is_exact_zero()) continue;
                    if (ra != 0 && cb.residue() != 0) {
                        mpz_addmul(t[jo * gx + i1 + i2].get_mpz_t(), ra.get_mpz_t(),
                                   cb.residue().get_mpz_t());
                    }
                    exact_zero[jo * gx + i1 + i2] = 0;
                }
            }
        }
    }

    // theta^{p^n} = p.
    for (unsigned long jo = gy - 1; jo >= dy; --jo) {
        for (unsigned long i = 0; i < gx; ++i) {
            if (exact_zero[jo * gx + i]) continue;
            mpz_class v;
            mpz_mod(v.get_mpz_t(), t[jo * gx + i].get_mpz_t(), mod.get_mpz_t());
            if (v != 0) {
                t[(jo - dy) * gx + i] += v * static_cast<unsigned long>(p);
            }
            exact_zero[(jo - dy) * gx + i] = 0;
        }
    }

    // x-reduction by the monic f, slice by slice.
    const auto& f_tail = R.cyclo().poly().coeffs;
#pragma omp parallel for schedule(static)
    for (long long js = 0; js < static_cast<long long>(dy); ++js) {
        const unsigned long j = static_cast<unsigned long>(js);
        mpz_class* slice = &t[j * gx];
        char* ez = &exact_zero[j * gx];
        for (unsigned long k = gx - 1; k >= phi; --k) {
            if (ez[k]) continue;
            mpz_mod(slice[k].get_mpz_t(), slice[k].get_mpz_t(), mod.get_mpz_t());
            for (unsigned long i = 0; i < phi; ++i) {
                if (slice[k] != 0) {
                    mpz_submul(slice[k - phi + i].get_mpz_t(), slice[k].get_mpz_t(),
                               f_tail[i].residue().get_mpz_t());
                }
                ez[k - phi + i] = 0;
            }
        }
    }

    std::vector<PadicInt> coords;
    coords.reserve(R.degree());
    for (unsigned long j = 0; j < dy; ++j) {
        for (unsigned long i = 0; i < phi; ++i) {
            if (exact_zero[j * gx + i]) {
                coords.push_back(PadicInt::zero(p, precision));
            } else {
                mpz_class r;
                mpz_mod(r.get_mpz_t(), t[j * gx + i].get_mpz_t(), mod.get_mpz_t());
                coords.push_back(PadicInt::truncated(r, p, precision));
            }
        }
    }
    return R.element(std::move(coords));
}

Valuation graded_val_bound(const TowerElement& a) {
    const TowerRing& R = a.ring();
    const long vpi = R.v_pi();
    const long vtheta = R.v_theta();
    const long vp = R.v_p();

    bool found = false;
    long best = 0;
    int best_exact_hits = 0;  // how many non-saturated terms attain the minimum
    bool best_saturated = false;

    for (unsigned long j = 0; j < R.deg_y(); ++j) {
        for (unsigned long i = 0; i < R.deg_x(); ++i) {
            const Ord o = a.coord(i, j).ord();
            if (o.infinite()) continue;
            const long val = vpi * static_cast<long>(i) + vtheta * static_cast<long>(j) +
                             vp * o.value;
            if (!found || val < best) {
                found = true;
                best = val;
                best_exact_hits = o.exact() ? 1 : 0;
                best_saturated = !o.exact();
            } else if (val == best) {
                if (o.exact()) {
                    ++best_exact_hits;
                } else {
                    best_saturated = true;
                }
            }
        }
    }
    if (!found) return Valuation{0, true, true};
    const bool exact = best_exact_hits == 1 && !best_saturated;
    return Valuation{best, exact, false};
}

}  // namespace ptower
