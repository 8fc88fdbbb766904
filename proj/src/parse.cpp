#include "recollement/parse.hpp"

#include "recollement/builtin.hpp"
#include "recollement/error.hpp"
#include "recollement/report.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace recoll {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& msg, std::size_t line = 0,
                             std::size_t col = 0) {
    Json detail;
    if (line) {
        detail["line"] = line;
        detail["column"] = col;
    }
    throw Error(ErrorCode::ParseError, msg, detail.dump());
}

std::pair<std::size_t, std::size_t> byte_to_line_col(const std::string& text,
                                                     std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

uint32_t want_uint(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_unsigned())
        parse_fail(std::string("field '") + field + "' must be a nonnegative integer");
    return j[field].get<uint32_t>();
}

Element parse_unit(const json& u, const std::vector<std::string>& basis, uint32_t p) {
    Element unit(basis.size(), 0);
    if (u.is_array()) {
        if (u.size() != basis.size())
            parse_fail("unit vector length does not match the basis");
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!u[i].is_number_unsigned()) parse_fail("unit entries must be integers");
            unit[i] = u[i].get<uint32_t>() % p;
        }
        return unit;
    }
    if (u.is_object()) {
        for (auto it = u.begin(); it != u.end(); ++it) {
            auto pos = std::find(basis.begin(), basis.end(), it.key());
            if (pos == basis.end()) parse_fail("unit names unknown basis element '" + it.key() + "'");
            if (!it.value().is_number_unsigned()) parse_fail("unit entries must be integers");
            unit[static_cast<std::size_t>(pos - basis.begin())] =
                it.value().get<uint32_t>() % p;
        }
        return unit;
    }
    parse_fail("unit must be an array or an object");
}

AlgebraPtr parse_structure_constants(const json& j) {
    uint32_t p = want_uint(j, "p");
    if (!j.contains("basis") || !j["basis"].is_array())
        parse_fail("structure-constant form needs a 'basis' array");
    std::vector<std::string> basis;
    for (const auto& b : j["basis"]) {
        if (!b.is_string()) parse_fail("basis labels must be strings");
        basis.push_back(b.get<std::string>());
    }
    const std::size_t n = basis.size();
    if (j.contains("dim") && want_uint(j, "dim") != n)
        parse_fail("'dim' disagrees with the basis length");
    if (!j.contains("table") || !j["table"].is_array() || j["table"].size() != n)
        parse_fail("'table' must be a dim x dim x dim array");
    std::vector<uint32_t> table(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = j["table"][i];
        if (!row.is_array() || row.size() != n)
            parse_fail("'table' must be a dim x dim x dim array");
        for (std::size_t jj = 0; jj < n; ++jj) {
            const auto& cell = row[jj];
            if (!cell.is_array() || cell.size() != n)
                parse_fail("'table' must be a dim x dim x dim array");
            for (std::size_t k = 0; k < n; ++k) {
                if (!cell[k].is_number_unsigned())
                    parse_fail("table entries must be nonnegative integers");
                table[(i * n + jj) * n + k] = cell[k].get<uint32_t>() % std::max(p, 1u);
            }
        }
    }
    if (!j.contains("unit")) parse_fail("structure-constant form needs a 'unit'");
    Element unit = parse_unit(j["unit"], basis, std::max(p, 1u));
    return std::make_shared<Algebra>(Algebra::from_table(p, basis, table, unit));
}

AlgebraPtr parse_quiver(const json& j) {
    uint32_t p = want_uint(j, "p");
    QuiverPresentation q;
    if (!j.contains("vertices") || !j["vertices"].is_array())
        parse_fail("quiver form needs a 'vertices' array");
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) parse_fail("vertex names must be strings");
        q.vertices.push_back(v.get<std::string>());
    }
    if (j.contains("arrows")) {
        if (!j["arrows"].is_array()) parse_fail("'arrows' must be an array");
        for (const auto& a : j["arrows"]) {
            if (!a.is_array() || a.size() != 3 || !a[0].is_string() ||
                !a[1].is_string() || !a[2].is_string())
                parse_fail("each arrow is [label, source, target]");
            q.arrows.push_back(QuiverArrow{a[0].get<std::string>(),
                                           a[1].get<std::string>(),
                                           a[2].get<std::string>()});
        }
    }
    if (j.contains("relations")) {
        if (!j["relations"].is_array()) parse_fail("'relations' must be an array");
        for (const auto& rel : j["relations"]) {
            if (!rel.is_array()) parse_fail("each relation is an array of terms");
            Relation r;
            for (const auto& term : rel) {
                RelationTerm t;
                const json* path = nullptr;
                if (term.is_array()) {
                    path = &term;
                } else if (term.is_object() && term.contains("path")) {
                    if (term.contains("coeff")) {
                        if (!term["coeff"].is_number_unsigned())
                            parse_fail("relation coefficients must be nonnegative integers");
                        t.coeff = term["coeff"].get<uint32_t>();
                    }
                    path = &term["path"];
                } else {
                    parse_fail("relation terms are paths or {coeff, path} objects");
                }
                if (!path->is_array() || path->empty())
                    parse_fail("relation paths must be nonempty arrays of arrow labels");
                for (const auto& lab : *path) {
                    if (!lab.is_string()) parse_fail("arrow labels must be strings");
                    t.arrows.push_back(lab.get<std::string>());
                }
                r.push_back(std::move(t));
            }
            q.relations.push_back(std::move(r));
        }
    }
    q.nilpotency_cap = j.contains("nilpotency_cap") ? want_uint(j, "nilpotency_cap") : 8;
    return std::make_shared<Algebra>(path_algebra(q, p));
}

} // namespace

AlgebraPtr parse_algebra_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        auto [line, col] = byte_to_line_col(text, e.byte ? e.byte - 1 : 0);
        parse_fail(e.what(), line, col);
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        parse_fail("document must be an object with a 'kind' field");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "structure_constants") return parse_structure_constants(j);
    if (kind == "quiver") return parse_quiver(j);
    parse_fail("'kind' must be \"structure_constants\" or \"quiver\"");
}

AlgebraPtr load_algebra_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open algebra file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebra_text(ss.str());
}

AlgebraPtr resolve_algebra(const std::string& name_or_path) {
    if (is_builtin(name_or_path)) return builtin_algebra(name_or_path);
    return load_algebra_file(name_or_path);
}

Element parse_element_expr(const Algebra& a, const std::string& expr) {
    Element acc = a.zero_element();
    const uint32_t p = a.p();
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i; };
    bool expect_term = true;
    uint32_t sign = 1;
    skip_ws();
    if (i == expr.size()) throw Error(ErrorCode::ParseError, "empty element expression");
    while (i < expr.size()) {
        skip_ws();
        if (i == expr.size()) break;
        char c = expr[i];
        if (c == '+' || c == '-') {
            if (expect_term)
                throw Error(ErrorCode::ParseError, "unexpected sign in element expression");
            sign = (c == '+') ? 1 : p - 1;
            ++i;
            expect_term = true;
            continue;
        }
        if (!expect_term)
            throw Error(ErrorCode::ParseError,
                        "expected '+' or '-' in element expression near '" +
                            expr.substr(i) + "'");
        uint32_t coeff = 1;
        bool saw_number = false;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            uint32_t v = 0;
            while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
                v = v * 10 + static_cast<uint32_t>(expr[i] - '0');
                ++i;
            }
            coeff = v % p;
            saw_number = true;
            skip_ws();
            if (i < expr.size() && expr[i] == '*') {
                ++i;
                skip_ws();
            } else {
                // bare scalar: a multiple of the unit
                Element term = a.scale(fp::mul(p, sign, coeff), a.unit());
                acc = a.add(acc, term);
                expect_term = false;
                sign = 1;
                continue;
            }
        }
        // label
        std::size_t start = i;
        while (i < expr.size() && (std::isalnum(static_cast<unsigned char>(expr[i])) ||
                                   expr[i] == '_' || expr[i] == '*')) {
            // '*' may appear inside composite path labels like "e12*e23";
            // only treat it as part of the label if the next char is not a
            // digit-only scalar context
            if (expr[i] == '*') {
                // part of a composite label only if it glues two label chars
                if (i + 1 < expr.size() &&
                    (std::isalpha(static_cast<unsigned char>(expr[i + 1])) ||
                     expr[i + 1] == '_')) {
                    ++i;
                    continue;
                }
                break;
            }
            ++i;
        }
        std::string label = expr.substr(start, i - start);
        if (label.empty())
            throw Error(ErrorCode::ParseError,
                        "expected a basis label in element expression near '" +
                            expr.substr(start) + "'");
        Element term;
        if (label == "0") {
            term = a.zero_element();
        } else if (label == "1") {
            term = a.unit();
        } else {
            auto idx = a.label_index(label);
            if (!idx) {
                if (saw_number || label.find_first_not_of("0123456789") == std::string::npos)
                    throw Error(ErrorCode::ParseError, "bad term '" + label + "'");
                throw Error(ErrorCode::ParseError,
                            "unknown basis element '" + label + "'");
            }
            term = a.basis_element(*idx);
        }
        acc = a.add(acc, a.scale(fp::mul(p, sign, coeff), term));
        expect_term = false;
        sign = 1;
    }
    if (expect_term)
        throw Error(ErrorCode::ParseError, "dangling sign in element expression");
    return acc;
}

} // namespace recoll
