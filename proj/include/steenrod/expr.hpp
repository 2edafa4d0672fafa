#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "steenrod/milnor.hpp"
#include "steenrod/thom_sw.hpp"

namespace steenrod {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::string message, std::size_t pos)
        : std::runtime_error(std::move(message)), position(pos) {}
};

// Element expression: sums and products of Sq[i1,...] and M[r1,...] factors,
// plus the literals 1 and 0. Milnor factors are converted to admissible
// coordinates on the fly; sums must be homogeneous. saw_milnor/saw_sq record
// which syntaxes appeared, so callers can pick the output basis.
struct ParsedElement {
    Element value;
    bool saw_milnor = false;
    bool saw_sq = false;
};
ParsedElement parse_element(std::string_view text);

// Stiefel-Whitney polynomial expression: sums and products of w[i] factors
// with optional ^e, plus the literals 1 and 0.
SWPolynomial parse_sw_polynomial(std::string_view text, SWModel model = SWModel::bo);

// Seq and MilnorSeq share a representation, so their formatters get
// distinct names.
std::string sq_string(const Seq& seq);          // "Sq[5,2,1]", "1" for the unit
std::string milnor_string(const MilnorSeq& r);  // "M[0,1]"
std::string to_string(const Element& x);        // "Sq[3] + Sq[2,1]", "1", "0"
std::string to_string(const MilnorElement& x);
std::string to_string(const SWMonomial& m);  // "w[4]*w[2]^2"
std::string to_string(const SWPolynomial& p);

}  // namespace steenrod
