#include "ncdc/calculus/report.hpp"

namespace ncdc::calculus {

Report passing(std::string check, std::string condition) {
    Report r;
    r.check = std::move(check);
    r.condition = std::move(condition);
    return r;
}

Report failing(std::string check, std::string condition, Witness witness) {
    Report r;
    r.check = std::move(check);
    r.condition = std::move(condition);
    r.pass = false;
    r.failing_degree = witness.degree;
    r.witness = std::move(witness);
    return r;
}

std::string format_vector(const TensorVector& v, const Presentation& pres) {
    std::string out;
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
        const Scalar& c = v.coords[i];
        if (c.is_zero()) continue;
        std::string word;
        const auto multi = v.shape.multi_index(i);
        for (std::size_t k = 0; k < multi.size(); ++k) {
            if (!word.empty()) word += "⊗";
            const auto& names = v.shape.factors()[k] == tensor::Factor::V ? pres.v_names : pres.w_names;
            word += multi[k] < names.size() ? names[multi[k]] : "e" + std::to_string(multi[k]);
        }
        if (word.empty()) word = "1";
        if (!out.empty()) out += " + ";
        if (c.is_one()) out += word;
        else if ((-c).is_one()) out += "-" + word;
        else out += "(" + c.to_string() + ")*" + word;
    }
    return out.empty() ? "0" : out;
}

std::string format_text(const Report& r, const Presentation& pres) {
    std::string out = "[" + std::string(r.pass ? "PASS" : "FAIL") + "] " + r.check + ": " + r.condition + "\n";
    if (r.witness) {
        const Witness& w = *r.witness;
        out += "  degree " + std::to_string(w.degree) + ": " + w.description + "\n";
        out += "  witness in " + w.element.shape.to_string() + ": " + format_vector(w.element, pres) + "\n";
        if (w.image) out += "  maps to " + w.image->shape.to_string() + ": " + format_vector(*w.image, pres) + "\n";
    }
    for (const auto& n : r.notes) out += "  note: " + n + "\n";
    return out;
}

}  // namespace ncdc::calculus
