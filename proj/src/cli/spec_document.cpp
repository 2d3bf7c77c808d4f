#include "ncdc/cli/spec_document.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace ncdc::cli {

using calculus::InitialData;
using calculus::Presentation;
using calculus::Relation;
using nlohmann::ordered_json;
using tensor::LinMap;
using tensor::Matrix;
using tensor::Shape;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw InputError(path + ": " + message);
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string at(const std::string& path, const char* key) { return path + "." + key; }

const char* type_name(const ordered_json& j) {
    return j.type_name();
}

const ordered_json& require(const ordered_json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing required key \"") + key + "\"");
    return *it;
}

void expect_object(const ordered_json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) fail(path, std::string("expected an object, found ") + type_name(j));
    for (const auto& [key, value] : j.items()) {
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) == allowed.end())
            fail(path, "unknown key \"" + key + "\"");
    }
}

std::size_t read_size(const ordered_json& j, const std::string& path) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        fail(path, std::string("expected a non-negative integer, found ") + type_name(j));
    return j.get<std::size_t>();
}

Scalar read_scalar(const ordered_json& j, const std::string& path) {
    std::string text;
    if (j.is_string()) {
        text = j.get<std::string>();
    } else if (j.is_number_integer()) {
        text = std::to_string(j.get<long long>());
    } else {
        fail(path, std::string("expected a scalar string, found ") + type_name(j));
    }
    try {
        return Scalar::parse(text);
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

bool valid_name(const std::string& name) {
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::all_of(name.begin(), name.end(),
                       [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
}

std::vector<std::string> default_names(const std::string& stem, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

void read_block(const ordered_json& j, const std::string& path, const std::string& stem, std::size_t& dim,
                std::vector<std::string>& names) {
    expect_object(j, path, {"dim", "names"});
    dim = read_size(require(j, "dim", path), at(path, "dim"));
    if (dim == 0) fail(at(path, "dim"), "dimension must be positive");
    auto it = j.find("names");
    if (it == j.end()) {
        names = default_names(stem, dim);
        return;
    }
    const std::string npath = at(path, "names");
    if (!it->is_array()) fail(npath, std::string("expected an array, found ") + type_name(*it));
    if (it->size() != dim)
        fail(npath, "expected " + std::to_string(dim) + " names, found " + std::to_string(it->size()));
    names.clear();
    for (std::size_t i = 0; i < it->size(); ++i) {
        const auto& n = (*it)[i];
        if (!n.is_string()) fail(at(npath, i), std::string("expected a string, found ") + type_name(n));
        std::string name = n.get<std::string>();
        if (!valid_name(name)) fail(at(npath, i), "\"" + name + "\" is not an identifier");
        if (name == "q") fail(at(npath, i), "\"q\" is reserved for the deformation parameter");
        names.push_back(std::move(name));
    }
}

Matrix read_matrix(const ordered_json& j, const std::string& path, std::size_t rows, std::size_t cols,
                   const std::string& row_meaning) {
    if (!j.is_array()) fail(path, std::string("expected an array of rows, found ") + type_name(j));
    if (j.size() != rows)
        fail(path, "expected " + std::to_string(rows) + " rows (" + row_meaning + "), found " +
                       std::to_string(j.size()));
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = j[i];
        const std::string rpath = at(path, i);
        if (!row.is_array()) fail(rpath, std::string("expected an array, found ") + type_name(row));
        if (row.size() != cols)
            fail(rpath, "expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = read_scalar(row[k], at(rpath, k));
    }
    return m;
}

std::vector<RelationTerm> read_relation(const ordered_json& j, const std::string& path, std::size_t dim_v) {
    if (!j.is_array()) fail(path, std::string("expected an array of terms, found ") + type_name(j));
    if (j.empty()) fail(path, "a relation needs at least one term");
    std::vector<RelationTerm> terms;
    for (std::size_t t = 0; t < j.size(); ++t) {
        const auto& term = j[t];
        const std::string tpath = at(path, t);
        if (!term.is_array() || term.size() != 2)
            fail(tpath, "expected a [coefficient, word] pair");
        RelationTerm rt;
        rt.coeff = read_scalar(term[0], at(tpath, std::size_t{0}));
        const auto& word = term[1];
        const std::string wpath = at(tpath, std::size_t{1});
        if (!word.is_array()) fail(wpath, std::string("expected an array of V indices, found ") + type_name(word));
        if (word.size() < 2) fail(wpath, "relation words must have length >= 2");
        for (std::size_t k = 0; k < word.size(); ++k) {
            const std::size_t idx = read_size(word[k], at(wpath, k));
            if (idx >= dim_v)
                fail(at(wpath, k), "index " + std::to_string(idx) + " out of range for dim V = " +
                                       std::to_string(dim_v));
            rt.word.push_back(idx);
        }
        if (!terms.empty() && rt.word.size() != terms.front().word.size())
            fail(wpath, "relation is not homogeneous: word length " + std::to_string(rt.word.size()) +
                            " after length " + std::to_string(terms.front().word.size()));
        terms.push_back(std::move(rt));
    }
    return terms;
}

// Every scalar of the document, with its path, for specialisation checks.
void for_each_scalar(const SpecDocument& doc, const std::function<void(const Scalar&, const std::string&)>& fn) {
    for (std::size_t r = 0; r < doc.relations.size(); ++r)
        for (std::size_t t = 0; t < doc.relations[r].size(); ++t)
            fn(doc.relations[r][t].coeff, at(at(at("$.relations", r), t), std::size_t{0}));
    auto matrix = [&](const Matrix& m, const std::string& path) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t k = 0; k < m.cols(); ++k) fn(m(i, k), at(at(path, i), k));
    };
    if (doc.c) matrix(*doc.c, "$.c");
    matrix(doc.b0, "$.b0");
    matrix(doc.d0, "$.d0");
}

void check_specialization(const SpecDocument& doc) {
    if (!doc.q_value) return;
    for_each_scalar(doc, [&](const Scalar& s, const std::string& path) {
        try {
            (void)s.evaluate(*doc.q_value);
        } catch (const PoleError&) {
            fail(path, "\"" + s.to_string() + "\" has a pole at q = " + exact::rational_to_string(*doc.q_value));
        }
    });
}

LinMap to_map(const Matrix& m, const Shape& dom, const Shape& cod, const std::optional<Rational>& q) {
    LinMap f(dom, cod);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k) f(i, k) = specialize(m(i, k), q);
    return f;
}

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : tensor::serialize(m)) rows.push_back(row);
    return rows;
}

}  // namespace

SpecDocument spec_from_json(const ordered_json& j) {
    expect_object(j, "$", {"field", "V", "W", "relations", "c", "b0", "d0", "max_degree"});
    SpecDocument doc;

    if (auto it = j.find("field"); it != j.end()) {
        expect_object(*it, "$.field", {"q"});
        const auto& q = require(*it, "q", "$.field");
        if (!q.is_string()) fail("$.field.q", "expected \"symbolic\" or a rational string");
        const std::string text = q.get<std::string>();
        if (text != "symbolic") {
            try {
                doc.q_value = exact::parse_rational(text);
            } catch (const Error& e) {
                fail("$.field.q", e.what());
            }
        }
    }

    read_block(require(j, "V", "$"), "$.V", "x", doc.dim_v, doc.v_names);
    read_block(require(j, "W", "$"), "$.W", "w", doc.dim_w, doc.w_names);
    {
        std::set<std::string> seen(doc.v_names.begin(), doc.v_names.end());
        if (seen.size() != doc.v_names.size()) fail("$.V.names", "generator names must be distinct");
        std::set<std::string> wseen(doc.w_names.begin(), doc.w_names.end());
        if (wseen.size() != doc.w_names.size()) fail("$.W.names", "basis names must be distinct");
    }

    const auto& rels = require(j, "relations", "$");
    if (!rels.is_array()) fail("$.relations", std::string("expected an array, found ") + type_name(rels));
    std::size_t longest = 2;
    for (std::size_t r = 0; r < rels.size(); ++r) {
        doc.relations.push_back(read_relation(rels[r], at("$.relations", r), doc.dim_v));
        longest = std::max(longest, doc.relations.back().front().word.size());
    }

    const std::size_t vw = doc.dim_v * doc.dim_w;
    if (auto it = j.find("c"); it != j.end())
        doc.c = read_matrix(*it, "$.c", doc.dim_v * doc.dim_v, doc.dim_v * doc.dim_v, "dimV·dimV");
    doc.b0 = read_matrix(require(j, "b0", "$"), "$.b0", vw, vw, "dimW·dimV");
    doc.d0 = read_matrix(require(j, "d0", "$"), "$.d0", doc.dim_w, doc.dim_v, "dimW");

    if (auto it = j.find("max_degree"); it != j.end()) {
        doc.max_degree = read_size(*it, "$.max_degree");
        if (doc.max_degree < 2) fail("$.max_degree", "must be at least 2");
        if (doc.max_degree < longest)
            fail("$.max_degree", "must be at least the longest relation length " + std::to_string(longest));
    } else {
        doc.max_degree = longest;
    }

    check_specialization(doc);
    // Builds the presentation once so that Im c = span(relations) and the
    // remaining invariants are enforced at parse time.
    (void)build_presentation(doc);
    return doc;
}

SpecDocument parse_spec(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("$: malformed JSON: ") + e.what());
    }
    return spec_from_json(j);
}

SpecDocument parse_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

void set_q_value(SpecDocument& doc, std::optional<Rational> q_value) {
    doc.q_value = std::move(q_value);
    check_specialization(doc);
    (void)build_presentation(doc);
}

ordered_json spec_to_json(const SpecDocument& doc) {
    ordered_json j;
    j["field"] = {{"q", doc.q_value ? exact::rational_to_string(*doc.q_value) : std::string("symbolic")}};
    j["V"] = {{"dim", doc.dim_v}, {"names", doc.v_names}};
    j["W"] = {{"dim", doc.dim_w}, {"names", doc.w_names}};
    ordered_json rels = ordered_json::array();
    for (const auto& rel : doc.relations) {
        ordered_json terms = ordered_json::array();
        for (const auto& t : rel) terms.push_back(ordered_json::array({t.coeff.to_string(), t.word}));
        rels.push_back(std::move(terms));
    }
    j["relations"] = std::move(rels);
    if (doc.c) j["c"] = matrix_json(*doc.c);
    j["b0"] = matrix_json(doc.b0);
    j["d0"] = matrix_json(doc.d0);
    j["max_degree"] = doc.max_degree;
    return j;
}

std::string format_spec(const SpecDocument& doc) { return spec_to_json(doc).dump(2) + "\n"; }

Scalar specialize(const Scalar& s, const std::optional<Rational>& q_value) {
    if (!q_value) return s;
    return Scalar(s.evaluate(*q_value));
}

Presentation build_presentation(const SpecDocument& doc) {
    Presentation pres;
    pres.dim_v = doc.dim_v;
    pres.dim_w = doc.dim_w;
    pres.v_names = doc.v_names;
    pres.w_names = doc.w_names;
    pres.max_degree = doc.max_degree;
    for (std::size_t r = 0; r < doc.relations.size(); ++r) {
        const auto& terms = doc.relations[r];
        const std::size_t len = terms.front().word.size();
        const Shape shape = pres.v_power(len);
        Relation rel{len, tensor::Vector(shape.total_dim())};
        for (const auto& t : terms) rel.coords[shape.index(t.word)] += specialize(t.coeff, doc.q_value);
        if (tensor::is_zero(rel.coords)) fail(at("$.relations", r), "relation is zero");
        pres.relations.push_back(std::move(rel));
    }
    if (doc.c) pres.twist_c = to_map(*doc.c, pres.v_power(2), pres.v_power(2), doc.q_value);
    try {
        calculus::validate(pres);
    } catch (const Error& e) {
        throw InputError(std::string("$.") + e.what());
    }
    return pres;
}

InitialData build_initial_data(const SpecDocument& doc) {
    const Shape v = Shape::v_power(1, doc.dim_v, doc.dim_w);
    const Shape w({tensor::Factor::W}, doc.dim_v, doc.dim_w);
    InitialData data;
    data.d0 = to_map(doc.d0, v, w, doc.q_value);
    data.b0 = to_map(doc.b0, Shape::v_power_w(1, doc.dim_v, doc.dim_w), Shape::w_v_power(1, doc.dim_v, doc.dim_w),
                     doc.q_value);
    return data;
}

}  // namespace ncdc::cli
