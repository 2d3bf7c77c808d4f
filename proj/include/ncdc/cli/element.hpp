#pragma once

#include "ncdc/calculus/quotient.hpp"
#include "ncdc/cli/spec_document.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ncdc::cli {

using calculus::GradedElement;

/// Names and field configuration needed to read and print elements of TV.
struct ElementContext {
    std::vector<std::string> names;
    std::size_t dim_v = 0;
    std::optional<Rational> q_value;
};

ElementContext element_context(const SpecDocument& doc);

/// Parses `term ((+|-) term)*` with term ::= scalar * word | word | scalar and
/// word ::= name (* name)*. The result maps each degree to coordinates in
/// V^{⊗n}; zero degrees are dropped. Throws ParseError (with position) on
/// syntax errors and unknown generator names.
GradedElement parse_element(std::string_view text, const ElementContext& ctx);

/// Canonical spelling: degrees ascending, words in index order, unit
/// coefficients omitted. parse_element(format_element(e)) == e.
std::string format_element(const GradedElement& element, const ElementContext& ctx);

/// Formats one homogeneous vector of V^{⊗n}.
std::string format_homogeneous(std::size_t degree, const tensor::Vector& coords, const ElementContext& ctx);

}  // namespace ncdc::cli
