#include "ptower/checks.hpp"

namespace ptower {

void RunConfig::validate() const {
    require_odd_prime(p);
    if (precision < 2) throw std::invalid_argument("precision must be >= 2");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
}

namespace {

unsigned long tower_degree(unsigned long p, unsigned m, unsigned n) {
    unsigned long d = p - 1;
    for (unsigned i = 1; i < m + n; ++i) d *= p;
    return d;
}

CheckResult skipped(const std::string& name, const std::string& why) {
    CheckResult r;
    r.name = name;
    r.skipped = true;
    r.note = why;
    return r;
}

}  // namespace

VerifyReport run_verify_suite(const RunConfig& config) {
    config.validate();
    const unsigned long p = config.p;
    VerifyReport report;

    auto add = [&report](CheckResult r) {
        if (!r.skipped) report.all_pass = report.all_pass && r.pass;
        report.checks.push_back(std::move(r));
    };

    // Case congruences need the threshold d, defined for m >= 2.
    if (config.m >= 2) {
        const auto records = check_case_congruences(p, config.m);
        CheckResult r;
        r.name = "case-congruences";
        r.pass = true;
        for (const auto& rec : records) r.pass = r.pass && rec.pass;
        r.valuation = static_cast<long>(records.size());
        r.note = std::to_string(records.size()) + " coefficients below d checked mod p^2";
        add(std::move(r));
    } else {
        add(skipped("case-congruences", "defined for m >= 2"));
    }

    const bool base_field_checks = config.m == 2;
    if (base_field_checks) {
        {
            const CycloRing ring(p, 2, config.precision);
            const auto B = b_sequence(p, config.precision);
            const Valuation v = expansion_residual(ring, B.values);
            CheckResult r;
            r.name = "expansion-residual";
            r.valuation = v.value;
            r.exact = v.exact;
            r.pass = v.value >= expansion_residual_target(p);
            r.note = "target " + std::to_string(expansion_residual_target(p));
            add(std::move(r));
        }
        if (p == 3) {
            const Valuation v = mercio_residual_valuation(config.precision);
            CheckResult r;
            r.name = "mercio-expansion";
            r.valuation = v.value;
            r.exact = v.exact;
            r.pass = v.value >= expansion_residual_target(3);
            r.note = "-3/pi^6 = 1 + 2 pi^3 + pi^4 + O(pi^5)";
            add(std::move(r));
        }
    } else {
        add(skipped("expansion-residual", "defined for m = 2"));
    }

    const unsigned long deg_21 = tower_degree(p, 2, 1);
    const bool run_heavy_21 = deg_21 <= kHeavyDegreeLimit || config.heavy;

    if (!base_field_checks) {
        add(skipped("proof-mirror", "defined for m = 2, n = 1"));
        add(skipped("uniformizer-theorem-1", "defined for m = 2, n = 1"));
        add(skipped("uniformizer-theorem-2", "defined for m = 2, n = 1"));
    } else if (!run_heavy_21) {
        const std::string why =
            "tower degree " + std::to_string(deg_21) + " > " +
            std::to_string(kHeavyDegreeLimit) + "; pass --heavy to run";
        add(skipped("proof-mirror", why));
        add(skipped("uniformizer-theorem-1", why));
        add(skipped("uniformizer-theorem-2", why));
    } else {
        {
            const ProofMirrorReport pm = proof_mirror_check(p, config.precision);
            CheckResult r;
            r.name = "proof-mirror";
            r.pass = pm.pass;
            r.valuation = pm.certified_valuation;
            r.note = "theta^0 part of s1^p is -pi^" + std::to_string(pm.leading_exponent);
            add(std::move(r));
        }
        for (const bool second : {false, true}) {
            const UniformizerRecipe recipe = second ? build_theorem2(p, config.precision)
                                                    : build_theorem1(p, config.precision);
            const VerifyOutcome out = verify_uniformizer(recipe);
            CheckResult r;
            r.name = "uniformizer-" + recipe.label;
            r.pass = out.is_uniformizer;
            r.valuation = out.v_total;
            r.exact = out.exact;
            r.note = "V(numerator) = " + std::to_string(out.v_numerator) +
                     ", shift = " + std::to_string(out.v_shift);
            add(std::move(r));
        }
    }

    const unsigned long deg_1n = tower_degree(p, 1, config.n);
    if (deg_1n <= kHeavyDegreeLimit || config.heavy) {
        const UniformizerRecipe recipe = build_viviani(p, config.n, config.precision);
        const VerifyOutcome out = verify_uniformizer(recipe);
        CheckResult r;
        r.name = "viviani";
        r.pass = out.is_uniformizer;
        r.valuation = out.v_total;
        r.exact = out.exact;
        r.note = "K_{1," + std::to_string(config.n) + "}, V(numerator) = " +
                 std::to_string(out.v_numerator) + ", shift = " + std::to_string(out.v_shift);
        add(std::move(r));
    } else {
        add(skipped("viviani", "tower degree " + std::to_string(deg_1n) + " > " +
                                   std::to_string(kHeavyDegreeLimit) + "; pass --heavy to run"));
    }

    return report;
}

}  // namespace ptower
