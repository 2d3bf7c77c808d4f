#include "ncdc/cli/commands.hpp"

#include "ncdc/calculus/checks.hpp"
#include "ncdc/calculus/factor.hpp"
#include "ncdc/calculus/ideal.hpp"
#include "ncdc/calculus/solvers.hpp"
#include "ncdc/calculus/tower.hpp"
#include "ncdc/cli/element.hpp"

#include <algorithm>
#include <fstream>

namespace ncdc::cli {

using calculus::InitialData;
using calculus::Presentation;
using calculus::Report;
using calculus::TensorVector;
using nlohmann::ordered_json;
using tensor::LinMap;
using tensor::Matrix;

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"check",    "dims",  "extend",  "partials",
                                                "solve-d0", "braid", "optimal", "delta-verify"};
    return names;
}

namespace {

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : tensor::serialize(m)) rows.push_back(row);
    return rows;
}

ordered_json vector_json(const TensorVector& v, const Presentation& pres) {
    ordered_json coords = ordered_json::array();
    for (const auto& c : v.coords) coords.push_back(c.to_string());
    return {{"shape", v.shape.to_string()}, {"coords", coords}, {"text", calculus::format_vector(v, pres)}};
}

ordered_json report_json(const Report& r, const Presentation& pres) {
    ordered_json j;
    j["check"] = r.check;
    j["condition"] = r.condition;
    j["pass"] = r.pass;
    j["failing_degree"] = r.failing_degree ? ordered_json(*r.failing_degree) : ordered_json(nullptr);
    if (r.witness) {
        ordered_json w;
        w["degree"] = r.witness->degree;
        w["description"] = r.witness->description;
        w["element"] = vector_json(r.witness->element, pres);
        w["image"] = r.witness->image ? vector_json(*r.witness->image, pres) : ordered_json(nullptr);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["notes"] = r.notes;
    return j;
}

// Accumulates reports and command-specific output for one invocation.
struct Session {
    const Presentation& pres;
    std::string text;
    ordered_json json;
    bool all_pass = true;

    void add(const Report& r) {
        text += calculus::format_text(r, pres);
        json["reports"].push_back(report_json(r, pres));
        all_pass = all_pass && r.pass;
    }
    void line(const std::string& s) { text += s + "\n"; }
};

std::string matrix_text(const Matrix& m) {
    std::string out;
    for (const auto& row : tensor::serialize(m)) {
        out += "  [";
        for (std::size_t k = 0; k < row.size(); ++k) out += (k ? ", " : "") + row[k];
        out += "]\n";
    }
    return out;
}

void run_check(Session& s, const InitialData& data, const CommandOptions& opt) {
    const Presentation& pres = s.pres;
    if (pres.is_quadratic()) {
        s.add(calculus::check_linear(data, pres));
        s.add(calculus::check_quadratic(data, pres));
        s.add(calculus::check_operator_form(data, pres));
        if (opt.truncated) s.add(calculus::check_truncated(data, calculus::build_ideal(pres), pres.max_degree));
        return;
    }
    Report r = calculus::check_truncated(data, calculus::build_ideal(pres), pres.max_degree);
    r.notes.push_back("relations of length > 2: the quadratic checks do not apply; ran the truncated scan up to degree " +
                      std::to_string(pres.max_degree));
    s.add(r);
}

void run_dims(Session& s) {
    const Presentation& pres = s.pres;
    const auto ideal = calculus::build_ideal(pres);
    const auto algebra = calculus::build_quotient(pres, ideal);
    s.line("degree  dim V^n  dim I_n  dim A_n");
    s.json["dims"] = ordered_json::array();
    for (std::size_t n = 0; n <= pres.max_degree; ++n) {
        const std::size_t total = calculus::ipow(pres.dim_v, n);
        const std::size_t in = ideal.component(n).dim();
        const std::size_t an = algebra.dim(n);
        char buf[96];
        std::snprintf(buf, sizeof buf, "%6zu  %7zu  %7zu  %7zu", n, total, in, an);
        s.line(buf);
        s.json["dims"].push_back({{"degree", n}, {"dim_tensor", total}, {"dim_ideal", in}, {"dim_algebra", an}});
    }
}

void run_extend(Session& s, const InitialData& data, ordered_json& payload) {
    const std::size_t n_max = s.pres.max_degree;
    const auto tower = calculus::build_tower(data, n_max);
    s.add(calculus::verify_leibniz(tower, n_max));
    s.add(calculus::verify_coherence(tower, n_max));
    payload["b"] = ordered_json::array();
    payload["d"] = ordered_json::array();
    for (std::size_t n = 0; n <= n_max; ++n) {
        const LinMap& b = tower.b(n);
        payload["b"].push_back({{"degree", n}, {"dom", b.dom().to_string()}, {"cod", b.cod().to_string()},
                                {"matrix", matrix_json(b.entries())}});
        if (n == 0) continue;
        const LinMap& d = tower.d(n);
        payload["d"].push_back({{"degree", n}, {"dom", d.dom().to_string()}, {"cod", d.cod().to_string()},
                                {"matrix", matrix_json(d.entries())}});
    }
    s.line("extended b_n and d_n up to degree " + std::to_string(n_max));
}

void run_partials(Session& s, const InitialData& data, const SpecDocument& doc, const CommandOptions& opt) {
    if (!opt.element) throw InputError("partials: --element is required");
    const ElementContext ctx = element_context(doc);
    const GradedElement element = parse_element(*opt.element, ctx);
    for (const auto& [n, v] : element)
        if (n > s.pres.max_degree)
            throw InputError("--element: degree " + std::to_string(n) + " exceeds max_degree " +
                             std::to_string(s.pres.max_degree));

    const auto fc = calculus::factor_calculus(data, s.pres);
    for (const auto& r : fc.consistency) s.add(r);
    s.add(fc.diagram);

    const GradedElement reduced = fc.algebra.reduce(element);
    GradedElement normal;
    for (const auto& [n, a] : reduced) normal[n] = fc.algebra.lift(n, a);
    s.line("element: " + format_element(element, ctx));
    s.line("normal form: " + format_element(normal, ctx));
    s.json["element"] = format_element(element, ctx);
    s.json["normal_form"] = format_element(normal, ctx);

    const auto partials = calculus::partial_derivatives(fc, element);
    ordered_json out = ordered_json::object();
    for (std::size_t g = 0; g < partials.size(); ++g) {
        GradedElement lifted;
        for (const auto& [n, a] : partials[g]) lifted[n] = fc.algebra.lift(n, a);
        const std::string text = format_element(lifted, ctx);
        s.line("D_" + s.pres.w_names[g] + " = " + text);
        out[s.pres.w_names[g]] = text;
    }
    s.json["partials"] = std::move(out);
}

void run_solve_d0(Session& s, const InitialData& data) {
    const auto basis = calculus::solve_d0(data.b0, calculus::effective_twist(s.pres));
    s.line("solution space of d0: dimension " + std::to_string(basis.size()));
    s.json["solutions"] = ordered_json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        s.text += "d0 basis " + std::to_string(i) + ":\n" + matrix_text(basis[i].entries());
        s.json["solutions"].push_back(matrix_json(basis[i].entries()));
    }
}

void run_braid(Session& s, const InitialData& data) {
    const auto res = calculus::check_braid(data.b0, calculus::effective_twist(s.pres));
    s.add(res.report);
    if (res.intertwiner) {
        s.text += "intertwiner a = (b0⊗id_V)∘(id_V⊗b0):\n" + matrix_text(res.intertwiner->entries());
        s.json["intertwiner"] = matrix_json(res.intertwiner->entries());
    }
}

ordered_json basis_json(const tensor::Subspace& k, const ElementContext& ctx, std::string& text) {
    ordered_json out = ordered_json::array();
    for (const auto& v : k.basis()) {
        const std::string e = format_homogeneous(2, v, ctx);
        text += "  " + e + "\n";
        out.push_back(e);
    }
    return out;
}

void run_optimal(Session& s, const InitialData& data, const SpecDocument& doc, const CommandOptions& opt) {
    const ElementContext ctx = element_context(doc);
    const auto res = calculus::optimal_quadratic_relations(data);
    s.add(res.report);
    s.line("K0 = ker of the degree-2 Leibniz map, dim " + std::to_string(res.kernel_space.dim()) + ":");
    s.json["kernel_space"] = basis_json(res.kernel_space, ctx, s.text);
    s.line("K* = largest b-stable subspace of K0, dim " + std::to_string(res.optimal.dim()) + " (" +
           std::to_string(res.iterations) + " refinement steps):");
    s.json["optimal"] = basis_json(res.optimal, ctx, s.text);
    if (!opt.switch_form) return;

    const auto literal = calculus::switch_form_space(data);
    const bool is_switch = data.b0 == calculus::switch_map(s.pres.dim_v, s.pres.dim_w);
    const bool same = literal == res.kernel_space;
    s.line("ker(d0⊗id_V), the switch-only form of the linear condition, dim " + std::to_string(literal.dim()) + ":");
    s.json["switch_form_space"] = basis_json(literal, ctx, s.text);
    std::string note = same ? "ker(d0⊗id_V) coincides with K0 for these data"
                            : "ker(d0⊗id_V) differs from K0: the switch-only form drops the term switch∘(id_V⊗d0); "
                              "K0 and K* above use the full linear condition";
    if (!is_switch) note += " (b0 is not the switch map, so the switch-only form does not apply)";
    s.line("note: " + note);
    s.json["switch_form_matches"] = same;
    s.json["switch_form_note"] = note;
}

void apply_options(SpecDocument& doc, const CommandOptions& opt) {
    if (opt.q_value) {
        std::optional<Rational> q;
        if (*opt.q_value != "symbolic") {
            try {
                q = exact::parse_rational(*opt.q_value);
            } catch (const Error& e) {
                throw InputError(std::string("--q-value: ") + e.what());
            }
        }
        set_q_value(doc, q);
    }
    if (opt.max_degree) {
        std::size_t longest = 2;
        for (const auto& r : doc.relations) longest = std::max(longest, r.front().word.size());
        if (*opt.max_degree < longest)
            throw InputError("--max-degree: must be at least " + std::to_string(longest));
        doc.max_degree = *opt.max_degree;
    }
}

CommandResult input_error(const std::string& command, const std::string& message) {
    CommandResult res;
    res.exit_code = 2;
    res.text = "error: " + message + "\n";
    res.json = {{"command", command}, {"exit_code", 2}, {"error", message}};
    return res;
}

}  // namespace

CommandResult run_command(const std::string& command, SpecDocument doc, const CommandOptions& options) {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), command) == names.end())
        return input_error(command, "unknown command '" + command + "'");
    if (command == "extend" && !options.emit)
        return input_error(command, "extend writes its matrices to a file: pass --emit <path>");
    try {
        apply_options(doc, options);
        const Presentation pres = build_presentation(doc);
        const InitialData data = build_initial_data(doc);
        Session s{pres, {}, ordered_json::object()};
        s.json["command"] = command;
        s.json["reports"] = ordered_json::array();
        ordered_json payload;

        try {
            if (command == "check") run_check(s, data, options);
            else if (command == "dims") run_dims(s);
            else if (command == "extend") run_extend(s, data, payload);
            else if (command == "partials") run_partials(s, data, doc, options);
            else if (command == "solve-d0") run_solve_d0(s, data);
            else if (command == "braid") run_braid(s, data);
            else if (command == "optimal") run_optimal(s, data, doc, options);
            else s.add(calculus::universal_delta_check(data, pres.max_degree));
        } catch (const calculus::ConsistencyError& e) {
            s.add(e.report());
            s.line("the calculus does not descend to the quotient; no partial derivatives");
        }

        CommandResult res;
        res.exit_code = s.all_pass ? 0 : 1;
        s.json["exit_code"] = res.exit_code;
        s.line(std::string("result: ") + (s.all_pass ? "pass" : "fail"));
        res.text = std::move(s.text);
        res.json = std::move(s.json);

        if (options.emit) {
            ordered_json out = res.json;
            for (auto& [key, value] : payload.items()) out[key] = value;
            std::ofstream f(*options.emit, std::ios::binary);
            if (!f) return input_error(command, *options.emit + ": cannot write file");
            f << out.dump(2) << "\n";
        }
        return res;
    } catch (const Error& e) {
        return input_error(command, e.what());
    }
}

CommandResult run_command_file(const std::string& command, const std::string& path, const CommandOptions& options) {
    try {
        return run_command(command, parse_spec_file(path), options);
    } catch (const Error& e) {
        return input_error(command, e.what());
    }
}

}  // namespace ncdc::cli
