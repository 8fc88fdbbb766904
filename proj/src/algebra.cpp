#include "recollement/algebra.hpp"

#include "recollement/error.hpp"
#include "recollement/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace recoll {

namespace {

constexpr uint32_t kMaxPrime = 97;

std::string triple_str(const std::vector<std::string>& labels, std::size_t i,
                       std::size_t j, std::size_t k) {
    return "(" + labels[i] + ", " + labels[j] + ", " + labels[k] + ")";
}

} // namespace

Algebra Algebra::from_table(uint32_t p, std::vector<std::string> labels,
                            std::vector<uint32_t> table, Element unit) {
    if (!fp::is_prime(p) || p > kMaxPrime)
        throw Error(ErrorCode::NotPrime,
                    "coefficient field must be F_p with p prime and p <= 97, got p = " +
                        std::to_string(p));
    const std::size_t n = labels.size();
    if (table.size() != n * n * n)
        throw Error(ErrorCode::BadArgument, "structure-constant table has wrong size");
    if (unit.size() != n)
        throw Error(ErrorCode::BadArgument, "unit vector has wrong length");
    {
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != n)
            throw Error(ErrorCode::BadArgument, "basis labels must be distinct");
    }
    for (auto& c : table) c %= p;
    for (auto& c : unit) c %= p;

    Algebra a;
    a.p_ = p;
    a.dim_ = n;
    a.labels_ = std::move(labels);
    a.table_ = std::move(table);
    a.unit_ = std::move(unit);

    // Unit law first: 1 * b_i = b_i = b_i * 1.
    for (std::size_t i = 0; i < n; ++i) {
        Element bi = a.basis_element(i);
        if (a.mul(a.unit_, bi) != bi || a.mul(bi, a.unit_) != bi)
            throw Error(ErrorCode::BadUnit,
                        "unit law fails at basis element " + a.labels_[i]);
    }
    // Associativity on every basis triple.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element ij = a.basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Element left = a.mul(ij, a.basis_element(k));
                Element right = a.mul(a.basis_element(i), a.basis_product(j, k));
                if (left != right)
                    throw Error(ErrorCode::NonAssociative,
                                "associativity fails at triple " +
                                    triple_str(a.labels_, i, j, k));
            }
        }
    return a;
}

Algebra Algebra::zero_algebra(uint32_t p) {
    return Algebra::from_table(p, {}, {}, {});
}

std::vector<uint32_t> Algebra::basis_product(std::size_t i, std::size_t j) const {
    std::vector<uint32_t> r(dim_);
    for (std::size_t k = 0; k < dim_; ++k) r[k] = c(i, j, k);
    return r;
}

Element Algebra::mul(const Element& x, const Element& y) const {
    Element r(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            uint32_t xy = (x[i] * y[j]) % p_;
            for (std::size_t k = 0; k < dim_; ++k)
                r[k] = (r[k] + xy * c(i, j, k)) % p_;
        }
    }
    return r;
}

Element Algebra::add(const Element& x, const Element& y) const {
    Element r(dim_);
    for (std::size_t k = 0; k < dim_; ++k) r[k] = fp::add(p_, x[k], y[k]);
    return r;
}

Element Algebra::sub(const Element& x, const Element& y) const {
    Element r(dim_);
    for (std::size_t k = 0; k < dim_; ++k) r[k] = fp::sub(p_, x[k], y[k]);
    return r;
}

Element Algebra::scale(uint32_t s, const Element& x) const {
    Element r(dim_);
    for (std::size_t k = 0; k < dim_; ++k) r[k] = fp::mul(p_, s % p_, x[k]);
    return r;
}

Element Algebra::basis_element(std::size_t i) const {
    Element e(dim_, 0);
    e[i] = 1;
    return e;
}

bool Algebra::is_idempotent(const Element& e) const { return mul(e, e) == e; }

bool Algebra::is_zero(const Element& e) const {
    return std::all_of(e.begin(), e.end(), [](uint32_t x) { return x == 0; });
}

FpMat Algebra::right_mult_matrix(std::size_t i) const {
    FpMat m(p_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) m(j, k) = c(j, i, k);
    return m;
}

FpMat Algebra::right_mult_by(const Element& x) const {
    FpMat m(p_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) m.set_row(j, mul(basis_element(j), x));
    return m;
}

FpMat Algebra::left_mult_by(const Element& x) const {
    FpMat m(p_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) m.set_row(j, mul(x, basis_element(j)));
    return m;
}

std::optional<std::size_t> Algebra::label_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

std::string Algebra::element_str(const Element& x) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        if (!first) os << " + ";
        if (x[i] != 1) os << x[i] << "*";
        os << labels_[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// Path algebras
// ---------------------------------------------------------------------------

namespace {

struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows; // indices, composed left to right
};

bool same_path(const Path& a, const Path& b) {
    return a.source == b.source && a.arrows == b.arrows;
}

} // namespace

Algebra path_algebra(const QuiverPresentation& q, uint32_t p) {
    if (!fp::is_prime(p) || p > kMaxPrime)
        throw Error(ErrorCode::NotPrime, "p must be prime and <= 97");
    if (q.nilpotency_cap == 0)
        throw Error(ErrorCode::BadArgument, "nilpotency cap must be positive");

    std::map<std::string, std::size_t> vidx;
    for (std::size_t i = 0; i < q.vertices.size(); ++i) {
        if (vidx.count(q.vertices[i]))
            throw Error(ErrorCode::BadArgument, "duplicate vertex " + q.vertices[i]);
        vidx[q.vertices[i]] = i;
    }
    std::map<std::string, std::size_t> aidx;
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
        const auto& ar = q.arrows[i];
        if (aidx.count(ar.label) || vidx.count(ar.label))
            throw Error(ErrorCode::BadArgument, "duplicate label " + ar.label);
        if (!vidx.count(ar.source) || !vidx.count(ar.target))
            throw Error(ErrorCode::BadArgument,
                        "arrow " + ar.label + " has unknown endpoint");
        aidx[ar.label] = i;
    }

    // Resolve relations to arrow-index paths; length-homogeneity keeps the
    // degreewise ideal computation exact.
    struct ResolvedRel {
        std::size_t source, target, length;
        std::vector<std::pair<uint32_t, std::vector<std::size_t>>> terms;
    };
    std::vector<ResolvedRel> rels;
    for (const auto& rel : q.relations) {
        if (rel.empty()) continue;
        ResolvedRel rr;
        bool first = true;
        for (const auto& term : rel) {
            if (term.arrows.empty())
                throw Error(ErrorCode::BadArgument, "relation term with empty path");
            std::vector<std::size_t> idxs;
            for (const auto& lab : term.arrows) {
                auto it = aidx.find(lab);
                if (it == aidx.end())
                    throw Error(ErrorCode::BadArgument, "unknown arrow " + lab);
                idxs.push_back(it->second);
            }
            std::size_t src = vidx[q.arrows[idxs[0]].source];
            std::size_t cur = vidx[q.arrows[idxs[0]].target];
            for (std::size_t t = 1; t < idxs.size(); ++t) {
                if (vidx[q.arrows[idxs[t]].source] != cur)
                    throw Error(ErrorCode::BadArgument, "non-composable relation path");
                cur = vidx[q.arrows[idxs[t]].target];
            }
            if (first) {
                rr.source = src;
                rr.target = cur;
                rr.length = idxs.size();
                first = false;
            } else if (rr.source != src || rr.target != cur) {
                throw Error(ErrorCode::BadArgument,
                            "relation terms must share source and target");
            } else if (rr.length != idxs.size()) {
                throw Error(ErrorCode::BadArgument,
                            "relation terms must be length-homogeneous");
            }
            rr.terms.emplace_back(term.coeff % p, idxs);
        }
        rels.push_back(std::move(rr));
    }

    // Paths by length; survivors[l] indexes surviving paths after reduction.
    constexpr std::size_t kPathBudget = 20000;
    std::vector<std::vector<Path>> paths_by_len;
    {
        std::vector<Path> trivial;
        for (std::size_t v = 0; v < q.vertices.size(); ++v)
            trivial.push_back(Path{v, v, {}});
        paths_by_len.push_back(std::move(trivial));
    }

    std::vector<std::vector<Path>> surviving;         // per length
    std::vector<FpMat> reducer;                       // W_l echelon bases
    surviving.push_back(paths_by_len[0]);             // no relations at length 0
    reducer.push_back(FpMat(p, 0, q.vertices.size()));

    auto find_path = [&](std::size_t len, const Path& target) -> std::size_t {
        const auto& v = paths_by_len[len];
        for (std::size_t i = 0; i < v.size(); ++i)
            if (same_path(v[i], target)) return i;
        throw Error(ErrorCode::InternalInconsistency, "path lookup failed");
    };

    std::size_t len = 0;
    while (true) {
        ++len;
        // Extend paths.
        std::vector<Path> next;
        for (const auto& pa : paths_by_len[len - 1])
            for (std::size_t ai = 0; ai < q.arrows.size(); ++ai)
                if (vidx[q.arrows[ai].source] == pa.target) {
                    Path np = pa;
                    np.arrows.push_back(ai);
                    np.target = vidx[q.arrows[ai].target];
                    next.push_back(std::move(np));
                }
        if (next.size() > kPathBudget)
            throw Error(ErrorCode::NotFiniteDimensional,
                        "path count exceeds budget before the cap certified "
                        "finite dimension");
        paths_by_len.push_back(next);
        if (next.empty()) break; // all higher graded pieces vanish

        // Degreewise part of the relation ideal: u * r * v of total length len.
        FpMat w(p, 0, next.size());
        for (const auto& rr : rels) {
            if (rr.length > len) continue;
            std::size_t rest = len - rr.length;
            for (std::size_t lu = 0; lu <= rest; ++lu) {
                std::size_t lv = rest - lu;
                for (const auto& u : paths_by_len[lu]) {
                    if (u.target != rr.source) continue;
                    for (const auto& v : paths_by_len[lv]) {
                        if (v.source != rr.target) continue;
                        std::vector<uint32_t> vec(next.size(), 0);
                        for (const auto& [cf, mid] : rr.terms) {
                            Path full;
                            full.source = u.source;
                            full.target = v.target;
                            full.arrows = u.arrows;
                            full.arrows.insert(full.arrows.end(), mid.begin(), mid.end());
                            full.arrows.insert(full.arrows.end(), v.arrows.begin(),
                                               v.arrows.end());
                            std::size_t idx = find_path(len, full);
                            vec[idx] = fp::add(p, vec[idx], cf);
                        }
                        w.append_row(vec);
                    }
                }
            }
        }
        FpMat wred = rref(w);
        std::vector<bool> is_piv(next.size(), false);
        for (auto c : pivot_columns(wred)) is_piv[c] = true;
        std::vector<Path> surv;
        for (std::size_t i = 0; i < next.size(); ++i)
            if (!is_piv[i]) surv.push_back(next[i]);
        reducer.push_back(wred);
        surviving.push_back(surv);
        if (surv.empty()) break; // the arrow ideal is nilpotent from here on
        if (len > q.nilpotency_cap)
            throw Error(ErrorCode::NotFiniteDimensional,
                        "nonzero paths remain beyond the nilpotency cap (cap = " +
                            std::to_string(q.nilpotency_cap) + ")");
    }

    // Global basis: surviving paths, by length then enumeration order.
    struct BasisPath {
        std::size_t length;
        std::size_t index_in_survivors;
        Path path;
    };
    std::vector<BasisPath> basis;
    for (std::size_t l = 0; l < surviving.size(); ++l)
        for (std::size_t i = 0; i < surviving[l].size(); ++i)
            basis.push_back(BasisPath{l, i, surviving[l][i]});
    const std::size_t n = basis.size();

    auto path_label = [&](const Path& pa) -> std::string {
        if (pa.arrows.empty()) return q.vertices[pa.source];
        std::string s;
        for (std::size_t t = 0; t < pa.arrows.size(); ++t) {
            if (t) s += "*";
            s += q.arrows[pa.arrows[t]].label;
        }
        return s;
    };

    std::vector<std::string> labels;
    for (const auto& bp : basis) labels.push_back(path_label(bp.path));

    // Residue of an arbitrary path, as coordinates over the global basis.
    auto residue = [&](const Path& pa) -> std::vector<uint32_t> {
        std::vector<uint32_t> out(n, 0);
        std::size_t l = pa.arrows.size();
        if (l >= surviving.size()) return out; // graded piece is zero
        std::vector<uint32_t> vec(paths_by_len[l].size(), 0);
        vec[find_path(l, pa)] = 1;
        vec = reduce_mod(reducer[l], vec);
        // Surviving paths sit at the non-pivot coordinates.
        for (std::size_t i = 0; i < surviving[l].size(); ++i) {
            std::size_t col = find_path(l, surviving[l][i]);
            if (vec[col] == 0) continue;
            // place into the global basis
            for (std::size_t g = 0; g < n; ++g)
                if (basis[g].length == l && basis[g].index_in_survivors == i) {
                    out[g] = vec[col];
                    break;
                }
        }
        return out;
    };

    std::vector<uint32_t> table(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Path& pi = basis[i].path;
            const Path& pj = basis[j].path;
            if (pi.target != pj.source) continue; // product is zero
            Path prod;
            prod.source = pi.source;
            prod.target = pj.target;
            prod.arrows = pi.arrows;
            prod.arrows.insert(prod.arrows.end(), pj.arrows.begin(), pj.arrows.end());
            auto r = residue(prod);
            for (std::size_t k = 0; k < n; ++k) table[(i * n + j) * n + k] = r[k];
        }

    Element unit(n, 0);
    QuiverInfo info;
    info.vertices = q.vertices;
    info.arrows = q.arrows;
    info.vertex_basis_index.resize(q.vertices.size());
    for (std::size_t g = 0; g < n; ++g) {
        info.path_length.push_back(basis[g].length);
        if (basis[g].length == 0) {
            unit[g] = 1;
            info.vertex_basis_index[basis[g].path.source] = g;
        }
    }

    Algebra a = Algebra::from_table(p, std::move(labels), std::move(table), unit);
    a.attach_quiver(std::move(info));
    return a;
}

// ---------------------------------------------------------------------------
// Radical
// ---------------------------------------------------------------------------

namespace {

Ideal radical_from_quiver(const AlgebraPtr& a) {
    const auto& info = *a->quiver();
    FpMat rows(a->p(), 0, a->dim());
    for (std::size_t i = 0; i < a->dim(); ++i)
        if (info.path_length[i] >= 1) {
            Element e = a->basis_element(i);
            rows.append_row(e);
        }
    return ideal_from_subspace(a, rref(rows));
}

Ideal radical_trace_form(const AlgebraPtr& a) {
    // Gram matrix of (x, y) -> trace(L_{xy}); its left kernel is the radical
    // when p > dim.
    const std::size_t n = a->dim();
    FpMat g(a->p(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element prod = a->basis_product(i, j);
            FpMat l = a->left_mult_by(prod);
            uint32_t tr = 0;
            for (std::size_t t = 0; t < n; ++t) tr = fp::add(a->p(), tr, l(t, t));
            g(i, j) = tr;
        }
    return ideal_from_subspace(a, left_nullspace(g));
}

Ideal radical_nil_sum(const AlgebraPtr& a) {
    // rad(A) is the sum of the principal two-sided ideals AxA that are
    // nilpotent, x ranging over all elements.
    const std::size_t n = a->dim();
    FpMat acc(a->p(), 0, n);
    unsigned long long total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= a->p();
    for (unsigned long long code = 1; code < total; ++code) {
        Element x(n);
        unsigned long long c = code;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = static_cast<uint32_t>(c % a->p());
            c /= a->p();
        }
        if (subspace_contains(acc, x)) continue;
        Ideal axa = ideal_generated(a, {x});
        if (nilpotency_index(axa).has_value())
            acc = subspace_sum(acc, axa.rows);
    }
    return ideal_from_subspace(a, acc);
}

constexpr unsigned long long kRadicalElementBudget = 1ull << 14;

} // namespace

Ideal radical(const AlgebraPtr& a) {
    if (a->dim() == 0) return zero_ideal(a);
    if (a->quiver().has_value()) return radical_from_quiver(a);
    if (a->p() > a->dim()) return radical_trace_form(a);
    unsigned long long total = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        total *= a->p();
        if (total > kRadicalElementBudget) { overflow = true; break; }
    }
    if (!overflow) return radical_nil_sum(a);
    throw Error(ErrorCode::CharacteristicTooSmall,
                "radical needs p > dim, quiver provenance, or p^dim within the "
                "enumeration budget (p = " +
                    std::to_string(a->p()) + ", dim = " + std::to_string(a->dim()) + ")");
}

SemiprimaryWitness is_semiprimary(const AlgebraPtr& a) {
    SemiprimaryWitness w;
    Ideal j = radical(a);
    w.radical_dim = j.dim();
    auto idx = nilpotency_index(j);
    if (!idx)
        throw Error(ErrorCode::InternalInconsistency, "radical is not nilpotent");
    w.nilpotency_index = *idx;
    QuotientAlgebra q = quotient_algebra(a, j);
    Ideal jq = radical(q.algebra);
    w.quotient_semisimple = (jq.dim() == 0);
    w.semiprimary = w.quotient_semisimple;
    return w;
}

std::vector<Element> enumerate_idempotents(const Algebra& a, unsigned long long budget) {
    const std::size_t n = a.dim();
    unsigned long long total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= a.p();
        if (total > budget)
            throw Error(ErrorCode::BudgetExceeded,
                        "p^dim exceeds the exhaustive budget; use the vertex-subset "
                        "tier for quiver-presented input");
    }
    std::vector<Element> out;
    for (unsigned long long code = 0; code < total; ++code) {
        Element x(n);
        unsigned long long c = code;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = static_cast<uint32_t>(c % a.p());
            c /= a.p();
        }
        if (a.is_idempotent(x)) out.push_back(std::move(x));
    }
    return out;
}

std::vector<Element> vertex_idempotents(const Algebra& a) {
    if (!a.quiver().has_value())
        throw Error(ErrorCode::BadArgument,
                    "vertex-subset idempotents need quiver-presented input");
    const auto& info = *a.quiver();
    const std::size_t v = info.vertices.size();
    std::vector<Element> out;
    for (unsigned long long mask = 0; mask < (1ull << v); ++mask) {
        Element e(a.dim(), 0);
        for (std::size_t t = 0; t < v; ++t)
            if (mask & (1ull << t)) e[info.vertex_basis_index[t]] = 1;
        out.push_back(std::move(e));
    }
    return out;
}

CornerAlgebra peirce_corner(const AlgebraPtr& a, const Element& e) {
    if (!a->is_idempotent(e))
        throw Error(ErrorCode::NotIdempotent, "corner needs an idempotent element");
    const std::size_t n = a->dim();
    FpMat span(a->p(), 0, n);
    for (std::size_t j = 0; j < n; ++j)
        span.append_row(a->mul(a->mul(e, a->basis_element(j)), e));
    FpMat basis = rref(span);
    const std::size_t m = basis.rows();

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
        Element row = basis.row(i);
        labels.push_back("c" + std::to_string(i) + "(" + a->element_str(row) + ")");
    }
    std::vector<uint32_t> table(m * m * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Element prod = a->mul(basis.row(i), basis.row(j));
            std::vector<uint32_t> coords;
            if (!coords_in_rowspace(basis, prod, &coords))
                throw Error(ErrorCode::InternalInconsistency,
                            "corner span not multiplicatively closed");
            for (std::size_t k = 0; k < m; ++k) table[(i * m + j) * m + k] = coords[k];
        }
    std::vector<uint32_t> unit;
    if (!coords_in_rowspace(basis, e, &unit))
        throw Error(ErrorCode::InternalInconsistency, "idempotent outside its corner");

    CornerAlgebra c;
    c.algebra = std::make_shared<Algebra>(
        Algebra::from_table(a->p(), std::move(labels), std::move(table), unit));
    c.embedding = basis;
    c.idempotent = e;
    return c;
}

QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const Ideal& i) {
    if (!is_ideal_subspace(*a, i.rows))
        throw Error(ErrorCode::NotAnIdeal, "subspace is not a two-sided ideal");
    const std::size_t n = a->dim();
    auto piv = pivot_columns(i.rows);
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::size_t> reps;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_piv[c]) reps.push_back(c);
    const std::size_t m = reps.size();

    auto project = [&](const Element& x) {
        auto r = reduce_mod(i.rows, x);
        std::vector<uint32_t> out(m);
        for (std::size_t t = 0; t < m; ++t) out[t] = r[reps[t]];
        return out;
    };

    std::vector<std::string> labels;
    for (std::size_t t = 0; t < m; ++t) labels.push_back(a->labels()[reps[t]]);
    std::vector<uint32_t> table(m * m * m, 0);
    for (std::size_t i1 = 0; i1 < m; ++i1)
        for (std::size_t j1 = 0; j1 < m; ++j1) {
            Element prod = a->basis_product(reps[i1], reps[j1]);
            auto pr = project(prod);
            for (std::size_t k = 0; k < m; ++k) table[(i1 * m + j1) * m + k] = pr[k];
        }
    QuotientAlgebra q;
    q.algebra = std::make_shared<Algebra>(
        Algebra::from_table(a->p(), std::move(labels), std::move(table),
                            project(a->unit())));
    q.reps = reps;
    q.projection = FpMat(a->p(), n, m);
    for (std::size_t j = 0; j < n; ++j) q.projection.set_row(j, project(a->basis_element(j)));
    return q;
}

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::BadArgument: return "BadArgument";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NonAssociative: return "NonAssociative";
        case ErrorCode::BadUnit: return "BadUnit";
        case ErrorCode::NotFiniteDimensional: return "NotFiniteDimensional";
        case ErrorCode::CharacteristicTooSmall: return "CharacteristicTooSmall";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorCode::NotIdempotent: return "NotIdempotent";
        case ErrorCode::NotAnIdeal: return "NotAnIdeal";
        case ErrorCode::NotIdempotentIdeal: return "NotIdempotentIdeal";
        case ErrorCode::WrongCategory: return "WrongCategory";
        case ErrorCode::NoSplitSurjection: return "NoSplitSurjection";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

} // namespace recoll
