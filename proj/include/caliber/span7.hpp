#pragma once

#include <array>

#include "caliber/kform.hpp"

namespace caliber {

// Coefficients over the fixed 7-tuple of mutually orthogonal self-dual
// generators, in this order:
//   S = (e^{1234}, e^{1256}, e^{1278}, e^{1357}, e^{1467}, e^{1368}, e^{1458})
// where e^{jklm} = e_j^e_k^e_l^e_m + its Hodge dual. Each generator has
// squared norm 2, so a span form c has norm_sq = 2 * sum c_i^2.
using Span7 = std::array<Rat, 7>;

inline constexpr std::array<std::array<int, 4>, 7> kGeneratorIndices = {{
    {1, 2, 3, 4},
    {1, 2, 5, 6},
    {1, 2, 7, 8},
    {1, 3, 5, 7},
    {1, 4, 6, 7},
    {1, 3, 6, 8},
    {1, 4, 5, 8},
}};

// The i-th generator as a two-term KForm.
const KForm& generator(int i);
const std::array<KForm, 7>& generators();

KForm from_span(const Span7& c);

struct SpanSplit {
    Span7 coeffs;
    KForm residual;  // orthogonal to all 7 generators
};

// Orthogonal decomposition omega = sum_i coeffs[i] * S_i + residual.
// Exact; from_span(coeffs) + residual reconstructs the input.
SpanSplit to_span(const KForm& omega);

Rat span_norm_sq(const Span7& c);

}  // namespace caliber
