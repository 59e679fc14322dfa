#include "caliber/span7.hpp"

#include <stdexcept>

namespace caliber {

const std::array<KForm, 7>& generators() {
    static const std::array<KForm, 7> table = [] {
        std::array<KForm, 7> out;
        for (int i = 0; i < 7; ++i) {
            KForm simple = kform(4);
            const auto& idx = kGeneratorIndices[i];
            add_term(simple, {idx[0], idx[1], idx[2], idx[3]}, Rat(1));
            out[i] = add(simple, hodge(simple));
        }
        return out;
    }();
    return table;
}

const KForm& generator(int i) {
    if (i < 0 || i > 6) throw std::out_of_range("generator index must be 0..6");
    return generators()[i];
}

KForm from_span(const Span7& c) {
    KForm out = kform(4);
    for (int i = 0; i < 7; ++i)
        if (c[i] != 0) out = add(out, scale(c[i], generator(i)));
    return out;
}

SpanSplit to_span(const KForm& omega) {
    if (omega.degree != 4) throw std::invalid_argument("to_span requires degree 4");
    SpanSplit split;
    for (int i = 0; i < 7; ++i) split.coeffs[i] = inner(omega, generator(i)) / 2;
    split.residual = sub(omega, from_span(split.coeffs));
    return split;
}

Rat span_norm_sq(const Span7& c) {
    Rat total(0);
    for (const Rat& x : c) total += x * x;
    return 2 * total;
}

}  // namespace caliber
