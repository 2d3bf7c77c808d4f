#pragma once

#include "ncdc/calculus/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncdc::calculus {

/// A serialized vector with the component it lives in.
struct TensorVector {
    Shape shape;
    Vector coords;
};

struct Witness {
    std::size_t degree = 0;
    std::string description;
    TensorVector element;                // the offending input (k, k⊗w, a basis monomial, ...)
    std::optional<TensorVector> image;   // what it was mapped to, when relevant
};

/// Verdict of one check. `condition` names the mathematical condition tested.
struct Report {
    std::string check;
    std::string condition;
    bool pass = true;
    std::optional<std::size_t> failing_degree;
    std::optional<Witness> witness;
    std::vector<std::string> notes;
};

Report passing(std::string check, std::string condition);
Report failing(std::string check, std::string condition, Witness witness);

/// "(1+q)*ξ⊗x - y⊗x"-style rendering with the presentation's basis names.
std::string format_vector(const TensorVector& v, const Presentation& pres);
std::string format_text(const Report& r, const Presentation& pres);

/// Thrown by operations whose precondition is a passing consistency check.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(Report report)
        : std::runtime_error("consistency check failed: " + report.check), report_(std::move(report)) {}
    const Report& report() const noexcept { return report_; }

private:
    Report report_;
};

}  // namespace ncdc::calculus
