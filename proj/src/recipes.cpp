#include "ptower/recipes.hpp"

#include "ptower/cyclo.hpp"

namespace ptower {

std::vector<PadicInt> b_coefficients(unsigned long p, unsigned precision) {
    require_odd_prime(p);
    std::vector<PadicInt> b;
    b.reserve(p - 2);
    for (unsigned long t = 1; t + 1 < p; ++t) {
        const long sign = (t % 2 == 0) ? -1 : 1;  // (-1)^{t+1}
        b.push_back(PadicInt::from_rational(sign, static_cast<long>(t + 1), p, precision));
    }
    return b;
}

BSequence b_sequence(unsigned long p, unsigned precision) {
    const std::vector<PadicInt> b = b_coefficients(p, precision);
    BSequence seq;
    seq.p = p;
    seq.precision = precision;
    seq.values.reserve(p - 1);
    seq.values.push_back(PadicInt::one(p, precision));
    for (unsigned long k = 1; k + 1 < p; ++k) {
        PadicInt acc = PadicInt::zero(p, precision);
        for (unsigned long j = 1; j <= k; ++j) {
            acc = acc + b[j - 1] * seq.values[k - j];
        }
        seq.values.push_back(acc);
    }
    seq.values_mod_p.reserve(p - 1);
    for (const auto& v : seq.values) {
        seq.values_mod_p.push_back(
            v.is_exact_zero() ? 0 : mpz_class(v.residue() % static_cast<long>(p)).get_ui());
    }
    return seq;
}

UniformizerRecipe build_theorem1(unsigned long p, unsigned precision) {
    require_odd_prime(p);
    UniformizerRecipe r;
    r.p = p;
    r.m = 2;
    r.n = 1;
    r.precision = precision;
    r.pi_shift = -(2 * static_cast<long>(p) - 3);
    r.theta_shift = 0;
    r.label = "theorem-1";
    r.terms.push_back({1, 0, PadicInt::one(p, precision)});
    r.terms.push_back({0, p - 1, PadicInt::one(p, precision)});
    for (unsigned long t = 1; t + 1 < p; ++t) {
        const long sign = (t % 2 == 0) ? 1 : -1;  // (-1)^t
        r.terms.push_back(
            {1, t, PadicInt::from_rational(sign, static_cast<long>(t + 1), p, precision)});
    }
    return r;
}

UniformizerRecipe build_theorem2(unsigned long p, unsigned precision) {
    require_odd_prime(p);
    const BSequence B = b_sequence(p, precision);
    UniformizerRecipe r;
    r.p = p;
    r.m = 2;
    r.n = 1;
    r.precision = precision;
    r.pi_shift = -(2 * static_cast<long>(p) - 3);
    r.theta_shift = 0;
    r.label = "theorem-2";
    r.terms.push_back({1, 0, PadicInt::one(p, precision)});
    for (unsigned long t = 0; t + 1 < p; ++t) {
        r.terms.push_back({0, t + p - 1, B.values[t]});
    }
    return r;
}

UniformizerRecipe build_viviani(unsigned long p, unsigned n, unsigned precision) {
    require_odd_prime(p);
    if (n < 1) throw std::invalid_argument("build_viviani: n must be >= 1");
    UniformizerRecipe r;
    r.p = p;
    r.m = 1;
    r.n = n;
    r.precision = precision;
    r.pi_shift = 0;
    long theta_exp = 0;  // 1 + p + ... + p^{n-1}
    long pk = 1;
    for (unsigned i = 0; i < n; ++i) {
        theta_exp += pk;
        pk *= static_cast<long>(p);
    }
    r.theta_shift = -theta_exp;
    r.label = "viviani";
    r.terms.push_back({0, 1, -PadicInt::one(p, precision)});  // 1 - zeta_p = -pi
    return r;
}

std::vector<unsigned long> search_exceptional_l(unsigned long p, unsigned m) {
    if (m < 2) throw std::invalid_argument("search_exceptional_l requires m >= 2");
    const MinimalPoly f = minimal_poly(p, m, 2);
    const unsigned long d = coeff_threshold_d(p, m);
    std::vector<unsigned long> hits;
    for (unsigned long l = 1; l < d; ++l) {
        if (l % p == 0) continue;
        if (ord_p(f.exact_coeffs[l], p) == 1) hits.push_back(l);
    }
    return hits;
}

std::string render_table_line(const UniformizerRecipe& recipe) {
    const unsigned long p = recipe.p;
    std::string s = "pi^" + std::to_string(recipe.pi_shift) + " ( ";
    bool first = true;
    for (const auto& term : recipe.terms) {
        unsigned long c = 0;
        if (!term.coeff.is_exact_zero()) {
            c = mpz_class(term.coeff.residue() % static_cast<long>(p)).get_ui();
        }
        if (c == 0) continue;
        if (!first) s += " + ";
        first = false;
        std::string factor;
        if (term.theta_pow > 0) {
            std::string root = std::to_string(p);
            unsigned long pn = 1;
            for (unsigned i = 0; i < recipe.n; ++i) pn *= p;
            factor = root + "^(" + std::to_string(term.theta_pow) + "/" + std::to_string(pn) + ")";
            if (term.theta_pow == 1) {
                factor = root + "^(1/" + std::to_string(pn) + ")";
            }
        }
        std::string body;
        if (c != 1 || (term.pi_pow == 0 && term.theta_pow == 0)) {
            body = std::to_string(c);
        }
        if (!factor.empty()) {
            body = body.empty() ? factor : body + " " + factor;
        }
        if (term.pi_pow > 0) {
            const std::string pi = "pi^" + std::to_string(term.pi_pow);
            body = body.empty() ? pi : body + " " + pi;
        }
        s += body;
    }
    s += " )";
    return s;
}

nlohmann::ordered_json recipe_to_json(const UniformizerRecipe& recipe) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& t : recipe.terms) {
        terms.push_back({{"theta_pow", t.theta_pow},
                         {"pi_pow", t.pi_pow},
                         {"coeff", t.coeff.is_exact_zero() ? "0" : t.coeff.residue().get_str()}});
    }
    return nlohmann::ordered_json{{"label", recipe.label},
                                  {"pi_shift", recipe.pi_shift},
                                  {"theta_shift", recipe.theta_shift},
                                  {"terms", std::move(terms)}};
}

UniformizerRecipe recipe_from_json(const nlohmann::json& j) {
    UniformizerRecipe r;
    r.p = j.at("p").get<unsigned long>();
    r.m = j.at("m").get<unsigned>();
    r.n = j.at("n").get<unsigned>();
    r.precision = j.at("precision").get<unsigned>();
    const auto& rec = j.at("recipe");
    r.label = rec.value("label", "custom");
    r.pi_shift = rec.at("pi_shift").get<long>();
    r.theta_shift = rec.at("theta_shift").get<long>();
    for (const auto& t : rec.at("terms")) {
        const mpz_class c(t.at("coeff").get<std::string>());
        r.terms.push_back({t.at("theta_pow").get<unsigned long>(),
                           t.at("pi_pow").get<unsigned long>(),
                           PadicInt::from_integer(c, r.p, r.precision)});
    }
    return r;
}

}  // namespace ptower
