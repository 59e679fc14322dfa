#include "caliber/catalog.hpp"

#include <stdexcept>

#include "caliber/liealg.hpp"

namespace caliber {

namespace {

// A complex combination a + i*b of real forms, enough to expand products of
// complex 1-forms exactly.
struct CForm {
    KForm re;
    KForm im;
};

CForm cwedge(const CForm& x, const CForm& y) {
    return {sub(wedge(x.re, y.re), wedge(x.im, y.im)),
            add(wedge(x.re, y.im), wedge(x.im, y.re))};
}

KForm unit1(int i) {
    KForm f = kform(1);
    add_term(f, {i}, Rat(1));
    return f;
}

CForm complex1(int re_index, int im_index, int im_sign) {
    KForm im = unit1(im_index);
    if (im_sign < 0) im = scale(Rat(-1), im);
    return {unit1(re_index), im};
}

// 2-form sum of e^{p}^e^{q} pairs with signs.
KForm two_form(std::initializer_list<std::array<int, 3>> pairs) {
    KForm f = kform(2);
    for (const auto& [p, q, s] : pairs) {
        add_term(f, {p, q}, Rat(s));
    }
    return f;
}

KForm half_square(const KForm& two) {
    return scale(Rat(1, 2), wedge(two, two));
}

CatalogVariant make_variant(const std::string& label, const std::string& source,
                            const std::string& expression, const VertexWeights& w) {
    CatalogVariant v;
    v.label = label;
    v.source = source;
    v.expression = expression;
    v.weights = w;
    v.coeffs = combine_vertices(w);
    v.comass = comass_exact(v.coeffs);
    v.norm2 = span_norm_sq(v.coeffs);
    v.ratio = wirtinger_ratio(v.coeffs);
    v.stab_dim = stabilizer_dim(from_span(v.coeffs));
    return v;
}

CatalogEntry make_entry(const std::string& type_label, const std::string& name,
                        const std::string& expression, const VertexWeights& w) {
    CatalogEntry e;
    e.type_label = type_label;
    e.name = name;
    e.expression = expression;
    e.weights = w;
    e.coeffs = combine_vertices(w);
    e.comass = comass_exact(e.coeffs);
    e.norm2 = span_norm_sq(e.coeffs);
    e.ratio = wirtinger_ratio(e.coeffs);
    e.stab_dim = stabilizer_dim(from_span(e.coeffs));
    return e;
}

VertexWeights weights_of(std::initializer_list<std::pair<int, Rat>> parts) {
    VertexWeights w{};
    for (auto& c : w) c = 0;
    for (const auto& [vertex, weight] : parts) {
        w[static_cast<std::size_t>(vertex)] += weight;
    }
    return w;
}

Counterexample make_counterexample(const std::string& label,
                                   const std::string& expression,
                                   const std::array<Rat, 8>& signed_weights,
                                   const std::string& orbit_type,
                                   const VertexWeights& conjugate_weights,
                                   bool negated) {
    Counterexample ce;
    ce.label = label;
    ce.expression = expression;
    ce.signed_weights = signed_weights;
    const auto& verts = vertices();
    for (auto& c : ce.coeffs) c = 0;
    for (std::size_t j = 0; j < 8; ++j) {
        for (std::size_t i = 0; i < 7; ++i) {
            ce.coeffs[i] += signed_weights[j] * verts[j].coeffs[i];
        }
    }
    ce.matrix = psi_inv(ce.coeffs);
    ce.comass = comass_exact(ce.coeffs);
    ce.ratio = wirtinger_ratio(ce.coeffs);
    ce.orbit_type = orbit_type;
    ce.conjugate_weights = conjugate_weights;
    ce.half_conjugate = combine_vertices(conjugate_weights);
    ce.type_multiset_negated = negated;
    return ce;
}

}  // namespace

Span7 cayley() { return vertices()[0].coeffs; }

Span7 omega(int j) {
    if (j < 1 || j > 4) throw std::out_of_range("omega index must be in 1..4");
    return vertices()[static_cast<std::size_t>(j - 1)].coeffs;
}

Span7 eta(int j) {
    if (j < 1 || j > 4) throw std::out_of_range("eta index must be in 1..4");
    return vertices()[static_cast<std::size_t>(3 + j)].coeffs;
}

ComplexParts build_from_complex_parts() {
    ComplexParts parts;
    KForm kahler = two_form({{1, 2, 1}, {3, 4, 1}, {5, 6, 1}, {7, 8, 1}});
    parts.kahler_sq_half = half_square(kahler);

    CForm volume = cwedge(cwedge(complex1(1, 2, 1), complex1(3, 4, 1)),
                          cwedge(complex1(5, 6, 1), complex1(7, 8, 1)));
    parts.re_omega = volume.re;
    parts.im_omega = volume.im;
    parts.total = add(parts.kahler_sq_half, parts.re_omega);
    return parts;
}

KForm build_from_complex() { return build_from_complex_parts().total; }

QuaternionicParts build_from_quaternionic_parts() {
    QuaternionicParts parts;
    KForm j1 = two_form({{1, 2, 1}, {3, 4, -1}, {5, 6, 1}, {7, 8, -1}});
    KForm j2 = two_form({{1, 3, 1}, {2, 4, 1}, {5, 7, 1}, {6, 8, 1}});
    KForm j3 = two_form({{1, 4, 1}, {2, 3, -1}, {5, 8, 1}, {6, 7, -1}});
    parts.kahler_sq_half[0] = half_square(j1);
    parts.kahler_sq_half[1] = half_square(j2);
    parts.kahler_sq_half[2] = half_square(j3);
    parts.total = add(sub(scale(Rat(-1), parts.kahler_sq_half[0]),
                          parts.kahler_sq_half[1]),
                      parts.kahler_sq_half[2]);
    return parts;
}

KForm build_from_quaternionic() { return build_from_quaternionic_parts().total; }

KForm special_lagrangian_product() {
    CForm product = cwedge(cwedge(complex1(1, 7, 1), complex1(2, 8, -1)),
                           cwedge(complex1(3, 5, 1), complex1(4, 6, -1)));
    return product.re;
}

std::vector<CatalogEntry> catalog_entries() {
    std::vector<CatalogEntry> entries;
    entries.reserve(9);

    entries.push_back(make_entry("(1,0)", "Cayley geometry", "cay",
                                 weights_of({{0, Rat(1)}})));
    entries.push_back(make_entry("(2,0)", "Kahler 4-form", "1/2 (cay + omega_2)",
                                 weights_of({{0, Rat(1, 2)}, {1, Rat(1, 2)}})));
    entries.push_back(make_entry(
        "(3,0)", "Kraines form, quaternionic geometry",
        "1/3 (cay + omega_2 + omega_3)",
        weights_of({{0, Rat(1, 3)}, {1, Rat(1, 3)}, {2, Rat(1, 3)}})));
    entries.push_back(make_entry("(1,1)", "special Lagrangian geometry",
                                 "1/2 (cay + eta_4)",
                                 weights_of({{0, Rat(1, 2)}, {7, Rat(1, 2)}})));

    CatalogEntry two_one = make_entry(
        "(2,1)", "complex Lagrangian geometry",
        "1/4 cay + 1/2 omega_2 + 1/4 eta_4",
        weights_of({{0, Rat(1, 4)}, {1, Rat(1, 2)}, {7, Rat(1, 4)}}));
    two_one.variants.push_back(make_variant(
        "psi", "printed", "1/3 (cay + omega_2 + eta_4)",
        weights_of({{0, Rat(1, 3)}, {1, Rat(1, 3)}, {7, Rat(1, 3)}})));
    // The source list repeats the 1/4 cay term in this combination; the
    // verbatim variant evaluates the expression literally (landing on the
    // type (1,1) representative), the normalized variant replaces the second
    // copy with 1/4 omega_2.
    two_one.variants.push_back(make_variant(
        "mu", "verbatim", "1/4 cay + 1/4 cay + 1/2 eta_4",
        weights_of({{0, Rat(1, 2)}, {7, Rat(1, 2)}})));
    two_one.variants.push_back(make_variant(
        "mu", "normalized", "1/4 cay + 1/4 omega_2 + 1/2 eta_4",
        weights_of({{0, Rat(1, 4)}, {1, Rat(1, 4)}, {7, Rat(1, 2)}})));
    entries.push_back(std::move(two_one));

    entries.push_back(make_entry(
        "(2,2)", "", "1/4 (cay + omega_2 + eta_3 + eta_4)",
        weights_of({{0, Rat(1, 4)}, {1, Rat(1, 4)}, {6, Rat(1, 4)}, {7, Rat(1, 4)}})));
    entries.push_back(make_entry(
        "(3,1)", "", "1/4 (cay + omega_2 + omega_3 + eta_4)",
        weights_of({{0, Rat(1, 4)}, {1, Rat(1, 4)}, {2, Rat(1, 4)}, {7, Rat(1, 4)}})));
    entries.push_back(make_entry(
        "(3,2)", "", "1/5 (cay + omega_2 + omega_3 + eta_3 + eta_4)",
        weights_of({{0, Rat(1, 5)},
                    {1, Rat(1, 5)},
                    {2, Rat(1, 5)},
                    {6, Rat(1, 5)},
                    {7, Rat(1, 5)}})));
    entries.push_back(make_entry(
        "(3,3)", "", "1/6 (cay + omega_2 + omega_3 + eta_2 + eta_3 + eta_4)",
        weights_of({{0, Rat(1, 6)},
                    {1, Rat(1, 6)},
                    {2, Rat(1, 6)},
                    {5, Rat(1, 6)},
                    {6, Rat(1, 6)},
                    {7, Rat(1, 6)}})));
    return entries;
}

std::array<Counterexample, 2> counterexamples() {
    std::array<Rat, 8> w_plus{};
    w_plus[1] = Rat(1, 2);
    w_plus[3] = Rat(-1, 2);
    w_plus[4] = Rat(1, 2);
    w_plus[6] = Rat(1, 2);

    std::array<Rat, 8> w_mu{};
    w_mu[1] = Rat(1, 2);
    w_mu[2] = Rat(1, 2);
    w_mu[4] = Rat(1, 2);
    w_mu[7] = Rat(-1, 2);

    return {make_counterexample(
                "omega_plus", "1/2 omega_2 - 1/2 omega_4 + 1/2 eta_1 + 1/2 eta_3",
                w_plus, "(3,1)",
                weights_of({{1, Rat(1, 4)}, {4, Rat(1, 4)}, {5, Rat(1, 4)}, {6, Rat(1, 4)}}),
                true),
            make_counterexample(
                "mu", "1/2 omega_2 + 1/2 omega_3 + 1/2 eta_1 - 1/2 eta_4",
                w_mu, "(3,1)",
                weights_of({{0, Rat(1, 4)}, {1, Rat(1, 4)}, {2, Rat(1, 4)}, {4, Rat(1, 4)}}),
                false)};
}

}  // namespace caliber
