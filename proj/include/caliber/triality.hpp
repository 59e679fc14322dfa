#pragma once

#include <array>
#include <optional>
#include <string>

#include "caliber/span7.hpp"

namespace caliber {

// Diagonal of a traceless symmetric 8x8 matrix.
using Diag8 = std::array<Rat, 8>;

Rat diag_trace(const Diag8& d);
Rat diag_norm_sq(const Diag8& d);

// The triality transfer between span forms and traceless diagonals, restricted
// to the 7-dimensional slice where every comass question here lives. It is
// determined by
//   psi(z_1) = 2 e^{1234},  psi(z_2) = 2 e^{1278},  psi(z_3) = 2 e^{1256},
//   psi(u_j) = mu_j / 2,
// with the mu_j sign patterns over (e^{1357}, e^{1467}, e^{1368}, e^{1458}):
//   mu_1 = (+,-,-,-), mu_2 = (+,+,-,+), mu_3 = (+,+,+,-), mu_4 = (+,-,+,+).
// Both directions are exact and mutually inverse isometries:
// diag_norm_sq(psi_inv(c)) = span_norm_sq(c).
Diag8 psi_inv(const Span7& c);
// Throws std::invalid_argument unless the trace vanishes.
Span7 psi(const Diag8& d);

// Comass of the self-dual form with span coefficients c: half the sum of the
// four largest diagonal entries of psi_inv(c). Exact.
Rat comass_exact(const Span7& c);

// 2*sum c_i^2 / comass^2, i.e. squared Euclidean norm over squared comass.
// Scale-invariant; throws on zero input. Bounded above by 14.
Rat wirtinger_ratio(const Span7& c);

// True exactly when the ratio attains 14, equivalently when the diagonal
// multiset of psi_inv(c) is {7a, -a x7} or its negative for some a != 0;
// those are precisely the scalar multiples of single vertex forms.
// Throws on zero input.
bool extremality_check(const Span7& c);

// The 8 extreme points of the comass-1 face containing the Cayley form.
// coeffs hold the signed generator expansions; matrix = psi_inv(coeffs)/4
// always lands in {A_1..A_4, -A_5..-A_8} with A_i = D_i - I/8.
struct VertexForm {
    std::string label;  // omega1..omega4, eta1..eta4
    Span7 coeffs;
    Diag8 matrix;
};

const std::array<VertexForm, 8>& vertices();

// Weights over the vertices in the order omega1..omega4, eta1..eta4.
using VertexWeights = std::array<Rat, 8>;

// Nonnegative weights summing to 1 with sum_i w_i * vertex_i = c, when c lies
// in the convex hull of the 8 vertices; nullopt otherwise. The vertices are
// affinely dependent (omega1+..+omega4 = eta1+..+eta4), so solutions form a
// segment; the minimal-support endpoint is returned, and when both endpoints
// have equal support the lexicographically larger weight vector wins.
std::optional<VertexWeights> decompose_convex(const Span7& c);

Span7 combine_vertices(const VertexWeights& w);

}  // namespace caliber
