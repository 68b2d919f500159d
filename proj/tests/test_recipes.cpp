#include <doctest.h>

#include "ptower/cyclo.hpp"
#include "ptower/recipes.hpp"

using namespace ptower;

TEST_CASE("b coefficients") {
    const auto b3 = b_coefficients(3, 1);
    REQUIRE(b3.size() == 1);
    CHECK(b3[0].residue() == 2);  // 1/2 mod 3

    const auto b5 = b_coefficients(5, 1);
    REQUIRE(b5.size() == 3);
    CHECK(b5[0].residue() == 3);  // 1/2
    CHECK(b5[1].residue() == 3);  // -1/3
    CHECK(b5[2].residue() == 4);  // 1/4

    for (const auto& b : b_coefficients(13, 8)) {
        CHECK(b.ord().value == 0);
        CHECK(b.ord().exact());
    }
}

TEST_CASE("B sequence reduces to the published table rows") {
    const std::vector<std::pair<unsigned long, std::vector<unsigned long>>> table{
        {3, {1, 2}},
        {5, {1, 3, 2, 4}},
        {7, {1, 4, 4, 5, 5, 4}},
        {11, {1, 6, 10, 6, 5, 6, 3, 0, 7, 9}},
        {13, {1, 7, 1, 6, 4, 4, 2, 11, 7, 10, 4, 1}},
    };
    for (const auto& [p, expected] : table) {
        const BSequence seq = b_sequence(p, 8);
        REQUIRE(seq.values.size() == p - 1);
        CHECK(seq.values_mod_p == expected);
    }
}

TEST_CASE("B sequence satisfies its own recurrence at full precision") {
    for (const unsigned long p : {5UL, 11UL}) {
        const unsigned N = 8;
        const auto b = b_coefficients(p, N);
        const auto seq = b_sequence(p, N);
        CHECK(seq.values[0] == PadicInt::one(p, N));
        for (unsigned long k = 1; k + 1 < p; ++k) {
            PadicInt acc = PadicInt::zero(p, N);
            for (unsigned long j = 1; j <= k; ++j) acc = acc + b[j - 1] * seq.values[k - j];
            CHECK(acc.residue() == seq.values[k].residue());
        }
    }
}

TEST_CASE("theorem-1 recipe shape") {
    const auto r3 = build_theorem1(3, 6);
    CHECK(r3.pi_shift == -3);
    CHECK(r3.theta_shift == 0);
    REQUIRE(r3.terms.size() == 3);
    CHECK(r3.terms[0].theta_pow == 1);
    CHECK(r3.terms[0].pi_pow == 0);
    CHECK(r3.terms[1].theta_pow == 0);
    CHECK(r3.terms[1].pi_pow == 2);
    // -1/2 = 1 mod 3
    CHECK(r3.terms[2].coeff.residue() % 3 == 1);

    CHECK(build_theorem1(5, 6).terms.size() == 5);
}

TEST_CASE("theorem-2 recipe shape") {
    const auto r5 = build_theorem2(5, 6);
    CHECK(r5.pi_shift == -7);
    REQUIRE(r5.terms.size() == 5);  // theta + B_0..B_3 pi-terms
    CHECK(r5.terms[0].theta_pow == 1);
    for (unsigned long t = 0; t < 4; ++t) {
        CHECK(r5.terms[t + 1].pi_pow == t + 4);
    }

    // p = 11 keeps the zero coefficient B_7 as a term at pi^17
    const auto r11 = build_theorem2(11, 6);
    REQUIRE(r11.terms.size() == 11);
    CHECK(r11.terms[8].pi_pow == 17);
    CHECK(r11.terms[8].coeff.residue() % 11 == 0);

    const auto r13 = build_theorem2(13, 6);
    CHECK(r13.terms.size() == 13);
}

TEST_CASE("viviani recipe shape") {
    const auto r = build_viviani(3, 2, 6);
    CHECK(r.m == 1);
    CHECK(r.n == 2);
    CHECK(r.pi_shift == 0);
    CHECK(r.theta_shift == -4);  // 1 + 3
    REQUIRE(r.terms.size() == 1);
    CHECK(r.terms[0].pi_pow == 1);
    CHECK(r.terms[0].theta_pow == 0);
    CHECK(r.terms[0].coeff.residue() == pow_ui(3, 6) - 1);  // -1
}

TEST_CASE("table rendering matches the published lines") {
    CHECK(render_table_line(build_theorem2(3, 8)) == "pi^-3 ( 3^(1/3) + pi^2 + 2 pi^3 )");
    CHECK(render_table_line(build_theorem2(5, 8)) ==
          "pi^-7 ( 5^(1/5) + pi^4 + 3 pi^5 + 2 pi^6 + 4 pi^7 )");
    CHECK(render_table_line(build_theorem2(7, 8)) ==
          "pi^-11 ( 7^(1/7) + pi^6 + 4 pi^7 + 4 pi^8 + 5 pi^9 + 5 pi^10 + 4 pi^11 )");
    // the pi^17 term has coefficient 0 mod 11 and is omitted
    CHECK(render_table_line(build_theorem2(11, 8)) ==
          "pi^-19 ( 11^(1/11) + pi^10 + 6 pi^11 + 10 pi^12 + 6 pi^13 + 5 pi^14 + 6 pi^15 + "
          "3 pi^16 + 7 pi^18 + 9 pi^19 )");
    CHECK(render_table_line(build_theorem2(13, 8)) ==
          "pi^-23 ( 13^(1/13) + pi^12 + 7 pi^13 + pi^14 + 6 pi^15 + 4 pi^16 + 4 pi^17 + "
          "2 pi^18 + 11 pi^19 + 7 pi^20 + 10 pi^21 + 4 pi^22 + pi^23 )");
}

TEST_CASE("recipe JSON round trip") {
    for (const auto& recipe : {build_theorem1(5, 8), build_theorem2(11, 8),
                               build_viviani(3, 2, 8)}) {
        nlohmann::ordered_json doc{{"p", recipe.p},
                                   {"m", recipe.m},
                                   {"n", recipe.n},
                                   {"precision", recipe.precision}};
        doc["recipe"] = recipe_to_json(recipe);
        const UniformizerRecipe back = recipe_from_json(doc);
        CHECK(back.p == recipe.p);
        CHECK(back.m == recipe.m);
        CHECK(back.n == recipe.n);
        CHECK(back.pi_shift == recipe.pi_shift);
        CHECK(back.theta_shift == recipe.theta_shift);
        CHECK(back.label == recipe.label);
        REQUIRE(back.terms.size() == recipe.terms.size());
        for (size_t i = 0; i < back.terms.size(); ++i) {
            CHECK(back.terms[i].theta_pow == recipe.terms[i].theta_pow);
            CHECK(back.terms[i].pi_pow == recipe.terms[i].pi_pow);
            CHECK(back.terms[i].coeff.residue() == recipe.terms[i].coeff.residue());
        }
    }
}

TEST_CASE("exceptional-l search") {
    CHECK(search_exceptional_l(3, 2) == std::vector<unsigned long>{4});
    CHECK(search_exceptional_l(5, 2) == std::vector<unsigned long>{16});
    CHECK(search_exceptional_l(7, 2) == std::vector<unsigned long>{36});
    CHECK(search_exceptional_l(3, 3).empty());
    CHECK(search_exceptional_l(5, 3).empty());
    CHECK_THROWS_AS(search_exceptional_l(3, 1), std::invalid_argument);
}

TEST_CASE("search always reports d-1 at m = 2, re-verified from exact integers") {
    for (const unsigned long p : {3UL, 5UL, 7UL, 11UL, 13UL}) {
        const auto hits = search_exceptional_l(p, 2);
        const unsigned long d = coeff_threshold_d(p, 2);
        bool has_dm1 = false;
        const MinimalPoly f = minimal_poly(p, 2, 2);
        for (const auto l : hits) {
            if (l == d - 1) has_dm1 = true;
            CHECK(l % p != 0);
            CHECK(ord_p(f.exact_coeffs[l], p) == 1);
        }
        CHECK(has_dm1);
    }
}
