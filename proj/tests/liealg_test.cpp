#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "caliber/liealg.hpp"
#include "caliber/span7.hpp"
#include "caliber/triality.hpp"

using namespace caliber;

namespace {

KForm unit4(std::vector<int> idx) {
    KForm f = kform(4);
    add_term(f, idx, Rat(1));
    return f;
}

KForm mu1_form() {
    return from_span(Span7{0, 0, 0, 1, -1, -1, -1});
}

bool is_symmetric(const Mat8Q& a) {
    return a == mat_transpose(a);
}

Rat mat_trace(const Mat8Q& a) {
    Rat t = 0;
    for (int i = 0; i < 8; ++i) t += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    return t;
}

}  // namespace

TEST_SUITE("liealg") {

TEST_CASE("weight constant shapes") {
    const auto& wc = weight_constants();
    for (const auto& t : wc.t) CHECK(is_skew(t));
    for (const auto& u : wc.u) {
        CHECK(is_symmetric(u));
        CHECK(mat_trace(u) == 0);
    }
    for (const auto& v : wc.v) {
        CHECK(is_symmetric(v));
        CHECK(mat_trace(v) == 0);
    }
    for (const auto& z : wc.z) {
        CHECK(is_symmetric(z));
        CHECK(mat_trace(z) == 0);
    }
    CHECK(is_skew(wc.E1));
    CHECK(is_skew(wc.E2));

    // z_1 + z_2 + z_3 = diag(3, 3, -1 x6), the diagonal behind the transfer
    // of the Cayley form.
    Mat8Q zsum = mat_add(mat_add(wc.z[0], wc.z[1]), wc.z[2]);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            Rat expected = 0;
            if (i == j) expected = i < 2 ? 3 : -1;
            CHECK(zsum[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == expected);
        }
    }
}

TEST_CASE("torus brackets hit the weight spaces") {
    const auto& wc = weight_constants();
    std::array<Rat, 4> x = {Rat(1, 2), -3, Rat(2, 7), 5};
    Mat8Q t = torus_element(x);
    CHECK(is_skew(t));
    for (std::size_t a = 0; a < 4; ++a) {
        CHECK(bracket(t, wc.u[a]) == mat_scale(-2 * x[a], wc.v[a]));
        CHECK(bracket(t, wc.v[a]) == mat_scale(2 * x[a], wc.u[a]));
    }
    for (const auto& z : wc.z) {
        CHECK(bracket(t, z) == mat_zero());
    }
}

TEST_CASE("exact quarter turns") {
    Mat8Q k12 = plane_generator(1, 2);
    Mat8Q g = exp_quarter_turn(k12);
    CHECK(is_special_orthogonal(g));
    // Four quarter turns come back to the identity.
    CHECK(exp_quarter_turn(k12, 4) == mat_identity());
    CHECK(mat_mul(mat_mul(g, g), mat_mul(g, g)) == mat_identity());

    // Convention check: the plane quarter turn sends e^1 to -e^2 and e^2 to e^1.
    KForm e1 = kform(1);
    add_term(e1, {1}, Rat(1));
    KForm e2 = kform(1);
    add_term(e2, {2}, Rat(1));
    CHECK(act_on_form(g, e1) == scale(Rat(-1), e2));
    CHECK(act_on_form(g, e2) == e1);

    // Symmetric and rescaled inputs are rejected.
    CHECK_THROWS_AS(exp_quarter_turn(weight_constants().u[0]), std::invalid_argument);
    CHECK_THROWS_AS(exp_quarter_turn(mat_scale(Rat(2), k12)), std::invalid_argument);
}

TEST_CASE("the root-space quarter turn fixes e^{1234} and swaps the next two") {
    const auto& wc = weight_constants();
    Mat8Q g = exp_quarter_turn(wc.E1);
    CHECK(is_special_orthogonal(g));
    CHECK(act_on_form(g, unit4({1, 2, 3, 4})) == unit4({1, 2, 3, 4}));
    CHECK(act_on_form(g, unit4({1, 2, 5, 6})) == unit4({1, 2, 7, 8}));
    CHECK(act_on_form(g, unit4({1, 2, 7, 8})) == unit4({1, 2, 5, 6}));

    Mat8Q g2 = exp_quarter_turn(wc.E2);
    CHECK(is_special_orthogonal(g2));
}

TEST_CASE("torus action rotates mu_1 with weight x_1+x_2+x_3+x_4") {
    const auto& wc = weight_constants();
    KForm mu = mu1_form();

    // S_1 sits at weight zero for the whole torus.
    CHECK(derive_on_form(torus_element({1, 2, 3, 4}), generator(0)).is_zero());

    // mu_1 lives in a single weight space: t(x).mu_1 is a fixed form nu_1
    // scaled by -(x_1+x_2+x_3+x_4).
    KForm d1 = derive_on_form(torus_element({1, 0, 0, 0}), mu);
    KForm dx = derive_on_form(torus_element({1, 2, 3, 4}), mu);
    CHECK_FALSE(d1.is_zero());
    CHECK(dx == scale(Rat(10), d1));
    CHECK(inner(d1, mu) == 0);
    // nu_1 = -t_1.mu_1 has the same norm as mu_1 and is off the span.
    CHECK(norm_sq(d1) == norm_sq(mu));
    for (int i = 0; i < 7; ++i) CHECK(inner(d1, generator(i)) == 0);
}

TEST_CASE("float exponential matches the exact quarter turn") {
    Mat8Q k12 = plane_generator(1, 2);
    Mat8D x = mat_to_double(k12) * (3.14159265358979323846 / 2.0);
    Mat8D g = exp_rotation(x);
    Mat8D exact = mat_to_double(exp_quarter_turn(k12));
    CHECK((g - exact).norm() < 1e-12);
    CHECK(std::fabs(g.determinant() - 1.0) < 1e-12);

    Mat8D not_skew = Mat8D::Identity();
    CHECK_THROWS_AS(exp_rotation(not_skew), std::invalid_argument);

    std::array<double, 4> angles = {0.3, -1.2, 0.0, 2.5};
    Mat8D torus = torus_rotation(angles);
    CHECK((torus * torus.transpose() - Mat8D::Identity()).norm() < 1e-12);
    std::array<Rat, 4> ones = {1, 0, 0, 0};
    CHECK((torus_rotation({0, 0, 0, 0}) - Mat8D::Identity()).norm() == 0.0);
    CHECK(torus_element(ones) == weight_constants().t[0]);
}

TEST_CASE("derivation matches the directional derivative of the action") {
    // d/ds exp(sX).w at 0: compare the exact derivation against a quarter
    // turn identity: for K with K^3 = -K, acting by exp((pi/2)K) four times
    // is the identity, while the derivative direction is K itself.
    Mat8Q k = plane_generator(2, 5);
    KForm w = unit4({1, 2, 3, 4});
    KForm dw = derive_on_form(k, w);
    // Row replacement: e^2 -> -e^5 inside the index (K_{25} e^2 = -e^5).
    CHECK(dw == scale(Rat(-1), unit4({1, 3, 4, 5})));

    // Derivation of an invariant form vanishes: S_1 under the 1-2 plane.
    CHECK(derive_on_form(plane_generator(1, 2), generator(0)).is_zero());
}

TEST_CASE("stabilizer ranks of the reference forms") {
    KForm cay_form = from_span(Span7{1, 1, 1, 1, -1, -1, -1});
    StabilizerResult stab = stabilizer(cay_form);
    CHECK(stab.dim == 21);
    CHECK(stab.kernel.size() == 21);
    for (const auto& coeffs : stab.kernel) {
        CHECK(derive_on_form(skew_from_coeffs(coeffs), cay_form).is_zero());
    }

    CHECK(stabilizer_dim(kform(4)) == 28);
    CHECK(stabilizer_dim(from_span(Span7{1, 1, 1, 0, 0, 0, 0})) == 16);
    CHECK(stabilizer_dim(from_span(Span7{1, Rat(1, 3), Rat(1, 3), Rat(1, 3), Rat(1, 3),
                                         Rat(-1, 3), Rat(1, 3)})) == 13);
}

TEST_CASE("exact random rotations are signed permutations") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 5; ++trial) {
        Mat8Q g = random_quarter_rotation(rng);
        CHECK(is_special_orthogonal(g));
        for (const auto& row : g) {
            for (const auto& x : row) {
                CHECK((x == 0 || x == 1 || x == -1));
            }
        }
    }
}

TEST_CASE("plane generator bookkeeping") {
    const auto& order = plane_index_order();
    REQUIRE(order.size() == 28);
    CHECK(order.front() == std::pair<int, int>{1, 2});
    CHECK(order.back() == std::pair<int, int>{7, 8});

    std::array<Rat, 28> coeffs{};
    coeffs[0] = Rat(3, 2);
    coeffs[27] = -1;
    Mat8Q x = skew_from_coeffs(coeffs);
    CHECK(x == mat_add(mat_scale(Rat(3, 2), plane_generator(1, 2)),
                       mat_scale(Rat(-1), plane_generator(7, 8))));
    CHECK(is_skew(x));
    CHECK_THROWS_AS(plane_generator(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(plane_generator(0, 3), std::invalid_argument);
}

}  // TEST_SUITE
