#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "caliber/rational.hpp"

namespace caliber {

inline constexpr int kDim = 8;

// Strictly increasing list of axis labels in 1..8; the empty list denotes the
// scalar basis element of degree 0.
using MultiIndex = std::vector<int>;

// Exact-coefficient alternating k-form on R^8, stored sparsely over the
// increasing-multi-index basis. That basis is declared orthonormal: there is
// no 1/k! factor anywhere, so e.g. <e1^e2^e3^e4, e1^e2^e3^e4> = 1.
// Zero coefficients are never stored.
struct KForm {
    int degree = 0;
    std::map<MultiIndex, Rat> coeffs;

    bool operator==(const KForm& other) const = default;
    bool is_zero() const { return coeffs.empty(); }
};

// Sorts `idx` into increasing order and reports the permutation sign, or
// nullopt when an axis repeats (the wedge monomial vanishes).
std::optional<std::pair<MultiIndex, int>> sort_with_sign(const std::vector<int>& idx);

// Throws std::invalid_argument unless every key is strictly increasing with
// entries in 1..8 and length == degree, and no stored coefficient is zero.
void validate(const KForm& form);

KForm kform(int degree);
// Adds coeff * e^idx, sorting the index and dropping the term if it cancels.
void add_term(KForm& form, const std::vector<int>& idx, const Rat& coeff);

KForm add(const KForm& a, const KForm& b);
KForm sub(const KForm& a, const KForm& b);
KForm scale(const Rat& c, const KForm& a);

// Exterior product. Throws when the degrees sum past 8.
KForm wedge(const KForm& a, const KForm& b);

// Hodge star for the standard orthonormal basis and the orientation
// e1^...^e8. On degree 4 it is an involution, splitting the 70-dimensional
// space into self-dual and anti-self-dual halves.
KForm hodge(const KForm& a);

// Euclidean inner product; the increasing-index basis is orthonormal.
// Throws on a degree mismatch. Satisfies wedge(a, hodge(b)) = inner(a,b)*vol.
Rat inner(const KForm& a, const KForm& b);

Rat norm_sq(const KForm& a);

// (omega + *omega)/2; idempotent, and its image satisfies *w = w.
// Accepts only degree 4.
KForm self_dual_project(const KForm& omega);

using Vec8Q = std::array<Rat, 8>;
using Vec8D = std::array<double, 8>;

// omega(v1,...,v4) = sum_I omega_I * det of the 4x4 minor with rows I.
Rat eval(const KForm& omega, const std::array<Vec8Q, 4>& v);
double eval(const KForm& omega, const std::array<Vec8D, 4>& v);

// All 70 increasing 4-element multi-indices in lexicographic order; fixes the
// coordinate order used by rank computations and the optimizer.
const std::vector<MultiIndex>& basis4();
int basis4_position(const MultiIndex& idx);

}  // namespace caliber
