#pragma once

#include <string>

#include "caliber/kform.hpp"
#include "caliber/span7.hpp"

namespace caliber {

// Canonical wire format for forms:
//   {"n": 8, "k": 4, "terms": [{"index": [1,2,3,4], "coeff": "3/2"}, ...]}
// Coefficients are rational strings "p/q" or JSON integers. Indices must be
// strictly increasing within each term and no multi-index may repeat across
// terms; violations are rejected with the term/position spelled out.
struct FormParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

KForm form_from_json_text(const std::string& text);
std::string form_to_json_text(const KForm& form, int indent = -1);

// Span coefficients serialize as a JSON array of 7 rational strings in the
// generator order documented in span7.hpp.
std::string span_to_json_text(const Span7& c);
Span7 span_from_json_text(const std::string& text);

}  // namespace caliber
