#pragma once

#include <memory>
#include <vector>

#include "ptower/cyclo.hpp"

namespace ptower {

class TowerElement;

/// The quotient ring Z_p[x, y]/(f(x), y^{p^n} - p) at precision N: the
/// integral model of K_{m,n} = Q_p(zeta_{p^m}, p^{1/p^n}), with pi the class
/// of x and theta the class of y. Total degree D = phi(p^m) p^n.
///
/// Valuations are normalized so the uniformizer of K_{m,n} has valuation 1:
/// V = D * ord_p, hence V(p) = D, V(pi) = p^n, V(theta) = p^{m-1}(p-1).
class TowerRing {
public:
    TowerRing(unsigned long p, unsigned m, unsigned n, unsigned precision);

    unsigned long prime() const;
    unsigned level_m() const;
    unsigned level_n() const;
    unsigned precision() const;
    unsigned long deg_x() const;   // phi(p^m)
    unsigned long deg_y() const;   // p^n
    unsigned long degree() const;  // D
    const CycloRing& cyclo() const;
    const mpz_class& modulus() const;

    long v_pi() const;     // p^n
    long v_theta() const;  // p^{m-1}(p-1)
    long v_p() const;      // D

    bool same(const TowerRing& other) const;

    TowerElement zero() const;
    TowerElement one() const;
    TowerElement pi() const;
    TowerElement theta() const;
    /// coeff * pi^i theta^j with i < phi, j < p^n.
    TowerElement monomial(unsigned long pi_pow, unsigned long theta_pow,
                          const PadicInt& coeff) const;
    TowerElement monomial(unsigned long pi_pow, unsigned long theta_pow, long coeff) const;
    TowerElement element(std::vector<PadicInt> coords) const;
    /// Embedding of the theta-free subring.
    TowerElement from_cyclo(const CycloElement& a) const;

private:
    struct Data;
    std::shared_ptr<const Data> data_;
    friend class TowerElement;
    friend TowerElement tower_mul(const TowerElement&, const TowerElement&);
};

/// Element with coordinates c_{ij} of pi^i theta^j, stored theta-major:
/// coords[j * phi + i]. Canonical form (degrees < phi, < p^n) is restored
/// after every product.
class TowerElement {
public:
    const TowerRing& ring() const { return ring_; }
    const std::vector<PadicInt>& coords() const { return coords_; }
    const PadicInt& coord(unsigned long pi_pow, unsigned long theta_pow) const;

    TowerElement operator-() const;
    friend TowerElement operator+(const TowerElement& a, const TowerElement& b);
    friend TowerElement operator-(const TowerElement& a, const TowerElement& b);
    friend TowerElement operator*(const TowerElement& a, const TowerElement& b);

    TowerElement pow(unsigned long e) const;

    /// Coefficient of theta^j as an element of the cyclotomic subring.
    CycloElement theta_component(unsigned long j) const;

    bool is_exact_zero() const;

    bool operator==(const TowerElement& other) const;
    bool operator!=(const TowerElement& other) const { return !(*this == other); }

    std::string str() const;

private:
    TowerElement(TowerRing ring, std::vector<PadicInt> coords);
    TowerRing ring_;
    std::vector<PadicInt> coords_;
    friend class TowerRing;
    friend TowerElement tower_mul(const TowerElement&, const TowerElement&);
};

/// Canonical-form product: convolution, then y^{p^n} -> p and x-reduction
/// through f.
TowerElement tower_mul(const TowerElement& a, const TowerElement& b);

/// Graded lower bound on the valuation:
///   min over (i, j) of p^n i + p^{m-1}(p-1) j + D ord(c_ij).
/// Tower monomial valuations are NOT pairwise distinct (V(pi^{p-1}) =
/// V(theta) already at m=2, n=1), so equal-valuation monomials can cancel:
/// the result is exact only when a single non-saturated term attains the
/// minimum; otherwise it is an honest lower bound.
Valuation graded_val_bound(const TowerElement& a);

}  // namespace ptower
