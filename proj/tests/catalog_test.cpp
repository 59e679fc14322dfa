#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "caliber/catalog.hpp"
#include "caliber/liealg.hpp"
#include "caliber/verify.hpp"

using namespace caliber;

namespace {

Diag8 sorted_diag(Diag8 d) {
    std::sort(d.begin(), d.end());
    return d;
}

Diag8 halved(const Diag8& d, int sign) {
    Diag8 out;
    for (std::size_t i = 0; i < 8; ++i) out[i] = d[i] * sign / 2;
    return out;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("named span vectors") {
    CHECK(cayley() == Span7{1, 1, 1, 1, -1, -1, -1});
    CHECK(omega(1) == cayley());
    CHECK(omega(2) == Span7{1, 1, 1, -1, 1, 1, 1});
    CHECK(eta(2) == Span7{1, -1, 1, -1, -1, -1, 1});
    CHECK(eta(4) == Span7{1, 1, -1, -1, 1, -1, -1});
    CHECK_THROWS_AS(omega(0), std::out_of_range);
    CHECK_THROWS_AS(omega(5), std::out_of_range);
    CHECK_THROWS_AS(eta(0), std::out_of_range);
    CHECK_THROWS_AS(eta(5), std::out_of_range);
}

TEST_CASE("complex construction assembles the Cayley form") {
    ComplexParts parts = build_from_complex_parts();
    CHECK(parts.total == from_span(cayley()));
    CHECK(build_from_complex() == parts.total);
    CHECK(parts.total == add(parts.kahler_sq_half, parts.re_omega));

    SpanSplit kahler = to_span(parts.kahler_sq_half);
    CHECK(kahler.residual.is_zero());
    CHECK(kahler.coeffs == Span7{1, 1, 1, 0, 0, 0, 0});

    SpanSplit re = to_span(parts.re_omega);
    CHECK(re.residual.is_zero());
    CHECK(re.coeffs == Span7{0, 0, 0, 1, -1, -1, -1});

    // The imaginary part is self-dual but orthogonal to the whole span.
    CHECK_FALSE(parts.im_omega.is_zero());
    CHECK(hodge(parts.im_omega) == parts.im_omega);
    for (int i = 0; i < 7; ++i) CHECK(inner(parts.im_omega, generator(i)) == 0);
    CHECK(inner(parts.im_omega, parts.re_omega) == 0);
    CHECK(norm_sq(parts.im_omega) == norm_sq(parts.re_omega));
}

TEST_CASE("quaternionic construction assembles the eta2 vertex") {
    QuaternionicParts parts = build_from_quaternionic_parts();
    CHECK(parts.total == from_span(eta(2)));
    CHECK(build_from_quaternionic() == parts.total);

    const Span7 half_squares[3] = {
        {-1, 1, -1, 0, 0, 0, 0},
        {-1, 0, 0, 1, 0, 1, 0},
        {-1, 0, 0, 0, -1, 0, 1},
    };
    for (int a = 0; a < 3; ++a) {
        SpanSplit split = to_span(parts.kahler_sq_half[static_cast<std::size_t>(a)]);
        CHECK(split.residual.is_zero());
        CHECK(split.coeffs == half_squares[a]);
        CHECK(comass_exact(split.coeffs) == 1);
    }
}

TEST_CASE("special Lagrangian product form") {
    KForm product = special_lagrangian_product();
    SpanSplit split = to_span(product);
    CHECK(split.residual.is_zero());
    CHECK(split.coeffs == Span7{1, 1, 0, 0, 0, -1, -1});
    KForm half_sum = scale(Rat(1, 2), add(from_span(cayley()), from_span(eta(4))));
    CHECK(product == half_sum);
}

TEST_CASE("catalog entries carry the verified invariants") {
    auto entries = catalog_entries();
    REQUIRE(entries.size() == 9);

    const char* labels[9] = {"(1,0)", "(2,0)", "(3,0)", "(1,1)", "(2,1)",
                             "(2,2)", "(3,1)", "(3,2)", "(3,3)"};
    const char* names[9] = {"Cayley geometry",
                            "Kahler 4-form",
                            "Kraines form, quaternionic geometry",
                            "special Lagrangian geometry",
                            "complex Lagrangian geometry",
                            "",
                            "",
                            "",
                            ""};
    const Span7 coeffs[9] = {
        {1, 1, 1, 1, -1, -1, -1},
        {1, 1, 1, 0, 0, 0, 0},
        {1, Rat(1, 3), Rat(1, 3), Rat(1, 3), Rat(1, 3), Rat(-1, 3), Rat(1, 3)},
        {1, 1, 0, 0, 0, -1, -1},
        {1, 1, Rat(1, 2), Rat(-1, 2), Rat(1, 2), 0, 0},
        {1, 1, 0, 0, 0, 0, 0},
        {1, Rat(1, 2), 0, 0, Rat(1, 2), Rat(-1, 2), 0},
        {1, Rat(3, 5), Rat(-1, 5), Rat(1, 5), Rat(1, 5), Rat(-1, 5), Rat(1, 5)},
        {1, Rat(1, 3), 0, 0, 0, Rat(-1, 3), Rat(1, 3)},
    };
    const Rat norms[9] = {14, 6, Rat(10, 3), 8, Rat(11, 2),
                          4,  Rat(7, 2), Rat(78, 25), Rat(8, 3)};
    const int stab_dims[9] = {21, 16, 13, 15, 10, 8, 9, 7, 7};

    for (int i = 0; i < 9; ++i) {
        auto s = static_cast<std::size_t>(i);
        CAPTURE(i);
        CHECK(entries[s].type_label == labels[i]);
        CHECK(entries[s].name == names[i]);
        CHECK(entries[s].coeffs == coeffs[i]);
        CHECK(entries[s].comass == 1);
        CHECK(entries[s].norm2 == norms[i]);
        CHECK(entries[s].ratio == norms[i]);
        CHECK(entries[s].stab_dim == stab_dims[i]);
        CHECK(combine_vertices(entries[s].weights) == entries[s].coeffs);
        auto dec = decompose_convex(entries[s].coeffs);
        REQUIRE(dec.has_value());
        CHECK(*dec == entries[s].weights);
        CHECK(stabilizer_dim(from_span(entries[s].coeffs)) == stab_dims[i]);
    }
    CHECK(entries[0].expression == "cay");
    CHECK(entries[1].expression == "1/2 (cay + omega_2)");
    CHECK(entries[8].expression == "1/6 (cay + omega_2 + omega_3 + eta_2 + eta_3 + eta_4)");
}

TEST_CASE("the (2,1) entry records the alternate printed forms") {
    auto entries = catalog_entries();
    const CatalogEntry& two_one = entries[4];
    REQUIRE(two_one.variants.size() == 3);
    for (int i = 0; i < 9; ++i) {
        if (i != 4) CHECK(entries[static_cast<std::size_t>(i)].variants.empty());
    }

    const CatalogVariant& psi_v = two_one.variants[0];
    CHECK(psi_v.label == "psi");
    CHECK(psi_v.source == "printed");
    CHECK(psi_v.coeffs == Span7{1, 1, Rat(1, 3), Rat(-1, 3), Rat(1, 3), Rat(-1, 3), Rat(-1, 3)});
    CHECK(psi_v.comass == 1);
    CHECK(psi_v.norm2 == Rat(46, 9));
    CHECK(psi_v.stab_dim == 11);

    const CatalogVariant& mu_verbatim = two_one.variants[1];
    CHECK(mu_verbatim.label == "mu");
    CHECK(mu_verbatim.source == "verbatim");
    CHECK(mu_verbatim.expression == "1/4 cay + 1/4 cay + 1/2 eta_4");
    // Taken literally the repeated term collapses onto the (1,1) representative.
    CHECK(mu_verbatim.coeffs == Span7{1, 1, 0, 0, 0, -1, -1});
    CHECK(mu_verbatim.coeffs == entries[3].coeffs);
    CHECK(mu_verbatim.stab_dim == 15);

    const CatalogVariant& mu_normalized = two_one.variants[2];
    CHECK(mu_normalized.label == "mu");
    CHECK(mu_normalized.source == "normalized");
    CHECK(mu_normalized.coeffs ==
          Span7{1, 1, 0, Rat(-1, 2), Rat(1, 2), Rat(-1, 2), Rat(-1, 2)});
    CHECK(mu_normalized.comass == 1);
    CHECK(mu_normalized.norm2 == 6);
    CHECK(mu_normalized.stab_dim == 11);

    for (const auto& v : two_one.variants) {
        CHECK(combine_vertices(v.weights) == v.coeffs);
        auto dec = decompose_convex(v.coeffs);
        REQUIRE(dec.has_value());
        CHECK(*dec == v.weights);
        CHECK(v.ratio == v.norm2 / (v.comass * v.comass));
    }
}

TEST_CASE("comass-2 counterexamples with orbit certificates") {
    auto ces = counterexamples();
    auto entries = catalog_entries();
    const CatalogEntry& three_one = entries[6];
    REQUIRE(three_one.type_label == "(3,1)");

    const Counterexample& plus = ces[0];
    CHECK(plus.label == "omega_plus");
    CHECK(plus.coeffs == Span7{1, 1, 1, 1, 1, 1, 1});
    CHECK(plus.matrix == Diag8{Rat(1, 2), Rat(5, 2), Rat(1, 2), Rat(-3, 2),
                               Rat(1, 2), Rat(-3, 2), Rat(1, 2), Rat(-3, 2)});
    CHECK(plus.half_conjugate == Span7{1, 0, Rat(1, 2), 0, 0, Rat(1, 2), Rat(1, 2)});
    CHECK(plus.type_multiset_negated);

    const Counterexample& mu = ces[1];
    CHECK(mu.label == "mu");
    CHECK(mu.coeffs == Span7{1, -1, 1, 1, 1, 1, 1});
    CHECK(mu.half_conjugate == Span7{1, 0, Rat(1, 2), Rat(1, 2), Rat(1, 2), 0, 0});
    CHECK_FALSE(mu.type_multiset_negated);

    for (const auto& ce : ces) {
        CHECK(ce.comass == 2);
        CHECK(ce.ratio == Rat(7, 2));
        CHECK(ce.orbit_type == "(3,1)");
        CHECK(psi_inv(ce.coeffs) == ce.matrix);

        // The printed signed combination reproduces the coefficients.
        Span7 rebuilt{};
        const auto& verts = vertices();
        for (std::size_t j = 0; j < 8; ++j) {
            for (std::size_t i = 0; i < 7; ++i) {
                rebuilt[i] += ce.signed_weights[j] * verts[j].coeffs[i];
            }
        }
        CHECK(rebuilt == ce.coeffs);

        // Halving gives comass 1, and the hull representative is a genuine
        // convex decomposition in the same rotation orbit.
        Span7 half;
        for (std::size_t i = 0; i < 7; ++i) half[i] = ce.coeffs[i] / 2;
        CHECK(comass_exact(half) == 1);
        CHECK(comass_exact(ce.half_conjugate) == 1);
        auto dec = decompose_convex(ce.half_conjugate);
        REQUIRE(dec.has_value());
        CHECK(*dec == ce.conjugate_weights);
        CHECK_FALSE(decompose_convex(half).has_value());
        CHECK(sorted_diag(psi_inv(ce.half_conjugate)) == sorted_diag(halved(ce.matrix, 1)));

        // Orbit type against the catalog entry, negated for omega_plus.
        int sign = ce.type_multiset_negated ? -1 : 1;
        CHECK(sorted_diag(halved(ce.matrix, sign)) == sorted_diag(psi_inv(three_one.coeffs)));
    }
}

TEST_CASE("rendered catalog matches the golden file") {
    std::ifstream golden(default_golden_path());
    REQUIRE_MESSAGE(bool(golden), "missing golden file: run the CLI catalog "
                                  "command to regenerate");
    nlohmann::json expected = nlohmann::json::parse(golden);
    nlohmann::json actual = nlohmann::json::parse(catalog_json_text());
    CHECK(expected == actual);
    REQUIRE(actual.contains("entries"));
    CHECK(actual["entries"].size() == 9);
    CHECK(actual["counterexamples"].size() == 2);
}

}  // TEST_SUITE
