#pragma once

#include "ncdc/calculus/presentation.hpp"
#include "ncdc/error.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncdc::cli {

using exact::Rational;
using exact::Scalar;

/// Malformed input document; the message starts with a JSON path such as "$.b0[2]".
class InputError : public Error {
public:
    using Error::Error;
};

struct RelationTerm {
    Scalar coeff;
    std::vector<std::size_t> word;
};

/// The JSON input document. Scalars are kept symbolic exactly as written
/// (canonicalized); specialisation of q happens when the presentation is built.
struct SpecDocument {
    std::optional<Rational> q_value;  // nullopt: symbolic q
    std::size_t dim_v = 0;
    std::size_t dim_w = 0;
    std::vector<std::string> v_names;
    std::vector<std::string> w_names;
    std::vector<std::vector<RelationTerm>> relations;
    std::optional<tensor::Matrix> c;
    tensor::Matrix b0;
    tensor::Matrix d0;
    std::size_t max_degree = 2;
};

SpecDocument parse_spec(std::string_view text);
SpecDocument parse_spec_file(const std::string& path);
SpecDocument spec_from_json(const nlohmann::ordered_json& j);

/// Canonical JSON; parse_spec(format_spec(d)) reproduces d.
nlohmann::ordered_json spec_to_json(const SpecDocument& doc);
std::string format_spec(const SpecDocument& doc);

/// Overrides the field configuration (nullopt: symbolic) and re-checks poles.
void set_q_value(SpecDocument& doc, std::optional<Rational> q_value);

/// Evaluates a scalar under the document's field configuration.
Scalar specialize(const Scalar& s, const std::optional<Rational>& q_value);

/// The presentation and initial data described by the document, with q
/// specialised when configured. Throws InputError on any invariant violation.
calculus::Presentation build_presentation(const SpecDocument& doc);
calculus::InitialData build_initial_data(const SpecDocument& doc);

}  // namespace ncdc::cli
