#pragma once

#include <array>
#include <string>
#include <vector>

#include "caliber/span7.hpp"
#include "caliber/triality.hpp"

namespace caliber {

// Span coefficient vectors printed for the Cayley form and the 8 face
// vertices; omega(1) is the Cayley form itself.
Span7 cayley();
Span7 omega(int j);
Span7 eta(int j);

struct ComplexParts {
    KForm kahler_sq_half;  // half the square of the standard Kahler 2-form
    KForm re_omega;        // real part of the complex volume form
    KForm im_omega;        // imaginary part, orthogonal to the 7-generator span
    KForm total;           // kahler_sq_half + re_omega
};

// Builds the Cayley form from the standard complex structure by actual
// wedge computation: total equals from_span(cayley()) exactly.
ComplexParts build_from_complex_parts();
KForm build_from_complex();

struct QuaternionicParts {
    std::array<KForm, 3> kahler_sq_half;  // one per complex structure J1, J2, J3
    KForm total;                          // -[0] - [1] + [2]
};

// Builds the eta2 vertex form from the three quaternionic complex
// structures: total equals from_span(eta(2)) exactly.
QuaternionicParts build_from_quaternionic_parts();
KForm build_from_quaternionic();

// Exact wedge expansion of Re[(e1+ie7)(e2-ie8)(e3+ie5)(e4-ie6)], which
// equals half of cay + eta4.
KForm special_lagrangian_product();

struct CatalogVariant {
    std::string label;       // symbol used in the source list: "phi", "mu", "psi"
    std::string source;      // "printed", "verbatim", or "normalized"
    std::string expression;  // the convex combination as printed or corrected
    Span7 coeffs;
    VertexWeights weights;
    Rat comass;
    Rat norm2;
    Rat ratio;
    int stab_dim = 0;
};

struct CatalogEntry {
    std::string type_label;  // orbit type, e.g. "(2,1)"
    std::string name;        // geometry name when one is given, else empty
    std::string expression;  // printed convex combination of the primary form
    Span7 coeffs;            // primary representative
    VertexWeights weights;
    Rat comass;              // always 1
    Rat norm2;
    Rat ratio;               // equals norm2 since comass is 1
    int stab_dim = 0;
    std::vector<CatalogVariant> variants;  // extra printed forms of the same type
};

// The 9 calibration orbit types with verified invariants. Entry 5, type
// (2,1), carries the two alternate printed forms as variants; its "mu"
// combination repeats a 1/4 cay term verbatim, so that variant is stored
// as printed alongside a separately labelled normalized correction.
std::vector<CatalogEntry> catalog_entries();

struct Counterexample {
    std::string label;            // "omega_plus" or "mu"
    std::string expression;       // signed half-weight vertex combination
    Span7 coeffs;                 // all-(+-1) span coefficients
    std::array<Rat, 8> signed_weights;  // coefficients over the 8 vertices
    Diag8 matrix;                 // triality transfer of the form
    Rat comass;                   // 2
    Rat ratio;                    // 7/2
    std::string orbit_type;       // "(3,1)", the type of the halved form's orbit
    Span7 half_conjugate;         // convex-combination orbit representative
    VertexWeights conjugate_weights;
    // The halved form and half_conjugate always share their sorted transfer
    // eigenvalues. Matching them against the catalog (3,1) entry needs a
    // global sign flip for omega_plus (its half lands in the negated orbit);
    // the flag records that flip.
    bool type_multiset_negated = false;
};

// The two all-(+-1) span combinations of comass 2: the forms showing that
// not every unit-coefficient combination of the 7 generators calibrates.
std::array<Counterexample, 2> counterexamples();

}  // namespace caliber
