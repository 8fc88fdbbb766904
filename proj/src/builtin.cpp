#include "recollement/builtin.hpp"

#include "recollement/error.hpp"

#include <algorithm>

namespace recoll {

namespace {

AlgebraPtr make_f2() {
    // the field F_2 as a one-dimensional algebra
    return std::make_shared<Algebra>(Algebra::from_table(2, {"e"}, {1}, {1}));
}

AlgebraPtr make_f2xf2() {
    QuiverPresentation q;
    q.vertices = {"e1", "e2"};
    q.nilpotency_cap = 1;
    return std::make_shared<Algebra>(path_algebra(q, 2));
}

AlgebraPtr make_dual_numbers() {
    // F_2[x]/(x^2)
    QuiverPresentation q;
    q.vertices = {"v"};
    q.arrows = {{"x", "v", "v"}};
    q.relations = {{RelationTerm{1, {"x", "x"}}}};
    q.nilpotency_cap = 2;
    return std::make_shared<Algebra>(path_algebra(q, 2));
}

AlgebraPtr make_t2() {
    // upper triangular 2x2 matrices as the path algebra of a single arrow
    QuiverPresentation q;
    q.vertices = {"e11", "e22"};
    q.arrows = {{"e12", "e11", "e22"}};
    q.nilpotency_cap = 2;
    return std::make_shared<Algebra>(path_algebra(q, 2));
}

AlgebraPtr make_t3() {
    QuiverPresentation q;
    q.vertices = {"e11", "e22", "e33"};
    q.arrows = {{"e12", "e11", "e22"}, {"e23", "e22", "e33"}};
    q.nilpotency_cap = 3;
    return std::make_shared<Algebra>(path_algebra(q, 2));
}

AlgebraPtr make_a3_zero_relation() {
    QuiverPresentation q;
    q.vertices = {"v1", "v2", "v3"};
    q.arrows = {{"a", "v1", "v2"}, {"b", "v2", "v3"}};
    q.relations = {{RelationTerm{1, {"a", "b"}}}};
    q.nilpotency_cap = 3;
    return std::make_shared<Algebra>(path_algebra(q, 2));
}

AlgebraPtr make_m2() {
    // full 2x2 matrix algebra over F_2, basis e11, e12, e21, e22
    const std::vector<std::string> labels{"e11", "e12", "e21", "e22"};
    auto row = [](std::size_t i) { return i / 2; };
    auto col = [](std::size_t i) { return i % 2; };
    std::vector<uint32_t> table(64, 0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (col(i) == row(j)) {
                std::size_t k = row(i) * 2 + col(j);
                table[(i * 4 + j) * 4 + k] = 1;
            }
    return std::make_shared<Algebra>(
        Algebra::from_table(2, labels, table, {1, 0, 0, 1}));
}

} // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {
        "F2", "F2xF2", "F2[x]/x2", "T2_F2", "T3_F2",
        "A3_quiver_with_zero_relation", "M2_F2"};
    return names;
}

bool is_builtin(const std::string& name) {
    const auto& names = builtin_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

AlgebraPtr builtin_algebra(const std::string& name) {
    if (name == "F2") return make_f2();
    if (name == "F2xF2") return make_f2xf2();
    if (name == "F2[x]/x2") return make_dual_numbers();
    if (name == "T2_F2") return make_t2();
    if (name == "T3_F2") return make_t3();
    if (name == "A3_quiver_with_zero_relation") return make_a3_zero_relation();
    if (name == "M2_F2") return make_m2();
    throw Error(ErrorCode::NotFound, "unknown built-in algebra: " + name);
}

} // namespace recoll
