#include "caliber/kform.hpp"

#include <algorithm>
#include <stdexcept>

namespace caliber {

std::optional<std::pair<MultiIndex, int>> sort_with_sign(const std::vector<int>& idx) {
    MultiIndex out = idx;
    int sign = 1;
    for (std::size_t i = 1; i < out.size(); ++i) {
        int v = out[i];
        std::size_t j = i;
        while (j > 0 && out[j - 1] > v) {
            out[j] = out[j - 1];
            sign = -sign;
            --j;
        }
        out[j] = v;
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1]) return std::nullopt;
    return std::make_pair(out, sign);
}

void validate(const KForm& form) {
    if (form.degree < 0 || form.degree > kDim)
        throw std::invalid_argument("form degree out of range 0..8");
    for (const auto& [idx, c] : form.coeffs) {
        if (static_cast<int>(idx.size()) != form.degree)
            throw std::invalid_argument("multi-index length differs from form degree");
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] < 1 || idx[i] > kDim)
                throw std::invalid_argument("multi-index entry outside 1..8");
            if (i > 0 && idx[i] <= idx[i - 1])
                throw std::invalid_argument("multi-index not strictly increasing");
        }
        if (c == 0) throw std::invalid_argument("stored zero coefficient");
    }
}

KForm kform(int degree) {
    if (degree < 0 || degree > kDim)
        throw std::invalid_argument("form degree out of range 0..8");
    KForm f;
    f.degree = degree;
    return f;
}

void add_term(KForm& form, const std::vector<int>& idx, const Rat& coeff) {
    if (coeff == 0) return;
    if (static_cast<int>(idx.size()) != form.degree)
        throw std::invalid_argument("term index length differs from form degree");
    auto sorted = sort_with_sign(idx);
    if (!sorted) return;
    for (int v : sorted->first)
        if (v < 1 || v > kDim) throw std::invalid_argument("multi-index entry outside 1..8");
    Rat& slot = form.coeffs[sorted->first];
    slot += coeff * sorted->second;
    if (slot == 0) form.coeffs.erase(sorted->first);
}

KForm add(const KForm& a, const KForm& b) {
    if (a.degree != b.degree) throw std::invalid_argument("degree mismatch in add");
    KForm out = a;
    for (const auto& [idx, c] : b.coeffs) {
        Rat& slot = out.coeffs[idx];
        slot += c;
        if (slot == 0) out.coeffs.erase(idx);
    }
    return out;
}

KForm sub(const KForm& a, const KForm& b) {
    return add(a, scale(Rat(-1), b));
}

KForm scale(const Rat& c, const KForm& a) {
    KForm out = kform(a.degree);
    if (c == 0) return out;
    for (const auto& [idx, v] : a.coeffs) out.coeffs.emplace(idx, c * v);
    return out;
}

KForm wedge(const KForm& a, const KForm& b) {
    if (a.degree + b.degree > kDim)
        throw std::invalid_argument("wedge degree overflow past 8");
    KForm out = kform(a.degree + b.degree);
    std::vector<int> merged;
    merged.reserve(out.degree);
    for (const auto& [ia, ca] : a.coeffs) {
        for (const auto& [ib, cb] : b.coeffs) {
            merged.assign(ia.begin(), ia.end());
            merged.insert(merged.end(), ib.begin(), ib.end());
            auto sorted = sort_with_sign(merged);
            if (!sorted) continue;
            Rat& slot = out.coeffs[sorted->first];
            slot += ca * cb * sorted->second;
            if (slot == 0) out.coeffs.erase(sorted->first);
        }
    }
    return out;
}

KForm hodge(const KForm& a) {
    KForm out = kform(kDim - a.degree);
    std::vector<int> joined;
    joined.reserve(kDim);
    for (const auto& [idx, c] : a.coeffs) {
        MultiIndex comp;
        comp.reserve(kDim - idx.size());
        std::size_t at = 0;
        for (int v = 1; v <= kDim; ++v) {
            if (at < idx.size() && idx[at] == v) {
                ++at;
            } else {
                comp.push_back(v);
            }
        }
        joined.assign(idx.begin(), idx.end());
        joined.insert(joined.end(), comp.begin(), comp.end());
        int sign = sort_with_sign(joined)->second;
        Rat& slot = out.coeffs[comp];
        slot += c * sign;
        if (slot == 0) out.coeffs.erase(comp);
    }
    return out;
}

Rat inner(const KForm& a, const KForm& b) {
    if (a.degree != b.degree) throw std::invalid_argument("degree mismatch in inner");
    Rat total(0);
    const auto& small = a.coeffs.size() <= b.coeffs.size() ? a : b;
    const auto& large = a.coeffs.size() <= b.coeffs.size() ? b : a;
    for (const auto& [idx, c] : small.coeffs) {
        auto it = large.coeffs.find(idx);
        if (it != large.coeffs.end()) total += c * it->second;
    }
    return total;
}

Rat norm_sq(const KForm& a) {
    return inner(a, a);
}

KForm self_dual_project(const KForm& omega) {
    if (omega.degree != 4)
        throw std::invalid_argument("self_dual_project requires degree 4");
    return scale(Rat(1, 2), add(omega, hodge(omega)));
}

namespace {

template <typename S>
S det4(const std::array<std::array<S, 4>, 4>& m) {
    S total{};
    int perm[4] = {0, 1, 2, 3};
    // 24-term Leibniz expansion; exact for rational entries.
    do {
        int sign = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        S prod = m[0][perm[0]] * m[1][perm[1]] * m[2][perm[2]] * m[3][perm[3]];
        if (sign > 0)
            total += prod;
        else
            total -= prod;
    } while (std::next_permutation(perm, perm + 4));
    return total;
}

template <typename S, typename V>
S eval_impl(const KForm& omega, const std::array<V, 4>& v) {
    if (omega.degree != 4) throw std::invalid_argument("eval requires degree 4");
    S total{};
    std::array<std::array<S, 4>, 4> minor;
    for (const auto& [idx, c] : omega.coeffs) {
        for (int r = 0; r < 4; ++r)
            for (int col = 0; col < 4; ++col) minor[r][col] = v[col][idx[r] - 1];
        S d = det4<S>(minor);
        if constexpr (std::is_same_v<S, Rat>) {
            total += c * d;
        } else {
            total += c.get_d() * d;
        }
    }
    return total;
}

}  // namespace

Rat eval(const KForm& omega, const std::array<Vec8Q, 4>& v) {
    return eval_impl<Rat>(omega, v);
}

double eval(const KForm& omega, const std::array<Vec8D, 4>& v) {
    return eval_impl<double>(omega, v);
}

const std::vector<MultiIndex>& basis4() {
    static const std::vector<MultiIndex> table = [] {
        std::vector<MultiIndex> out;
        for (int a = 1; a <= 8; ++a)
            for (int b = a + 1; b <= 8; ++b)
                for (int c = b + 1; c <= 8; ++c)
                    for (int d = c + 1; d <= 8; ++d) out.push_back({a, b, c, d});
        return out;
    }();
    return table;
}

int basis4_position(const MultiIndex& idx) {
    const auto& table = basis4();
    auto it = std::lower_bound(table.begin(), table.end(), idx);
    if (it == table.end() || *it != idx)
        throw std::invalid_argument("not a degree-4 increasing multi-index");
    return static_cast<int>(it - table.begin());
}

}  // namespace caliber
