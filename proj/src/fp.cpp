#include "recollement/fp.hpp"

#include "recollement/error.hpp"

#include <algorithm>
#include <sstream>

namespace recoll {

namespace fp {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint32_t inv(uint32_t p, uint32_t a) {
    if (a == 0) throw Error(ErrorCode::BadArgument, "inverse of zero in F_p");
    // Fermat: a^(p-2) mod p.
    uint32_t r = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = (r * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return r;
}

} // namespace fp

FpMat FpMat::identity(uint32_t p, std::size_t n) {
    FpMat m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FpMat FpMat::from_rows(uint32_t p, std::size_t cols,
                       const std::vector<std::vector<uint32_t>>& rows) {
    FpMat m(p, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw Error(ErrorCode::BadArgument, "row length mismatch in from_rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j] % p;
    }
    return m;
}

std::vector<uint32_t> FpMat::row(std::size_t i) const {
    return std::vector<uint32_t>(a_.begin() + static_cast<long>(i * cols_),
                                 a_.begin() + static_cast<long>((i + 1) * cols_));
}

void FpMat::set_row(std::size_t i, const std::vector<uint32_t>& v) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j] % p_;
}

void FpMat::append_row(const std::vector<uint32_t>& v) {
    if (v.size() != cols_)
        throw Error(ErrorCode::BadArgument, "row length mismatch in append_row");
    a_.insert(a_.end(), v.begin(), v.end());
    for (std::size_t j = 0; j < cols_; ++j) a_[rows_ * cols_ + j] %= p_;
    ++rows_;
}

FpMat FpMat::operator+(const FpMat& o) const {
    FpMat r(p_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp::add(p_, a_[i], o.a_[i]);
    return r;
}

FpMat FpMat::operator-(const FpMat& o) const {
    FpMat r(p_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp::sub(p_, a_[i], o.a_[i]);
    return r;
}

FpMat FpMat::operator*(const FpMat& o) const {
    if (cols_ != o.rows_)
        throw Error(ErrorCode::BadArgument, "matrix product dimension mismatch");
    FpMat r(p_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            uint32_t c = (*this)(i, k);
            if (c == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r(i, j) = (r(i, j) + c * o(k, j)) % p_;
        }
    return r;
}

FpMat FpMat::scaled(uint32_t c) const {
    FpMat r(p_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp::mul(p_, a_[i], c % p_);
    return r;
}

FpMat FpMat::transposed() const {
    FpMat r(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool FpMat::operator==(const FpMat& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool FpMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](uint32_t x) { return x == 0; });
}

bool FpMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

std::string FpMat::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

std::vector<uint32_t> apply_row(const std::vector<uint32_t>& x, const FpMat& m) {
    std::vector<uint32_t> r(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            r[j] = (r[j] + x[i] * m(i, j)) % m.p();
    }
    return r;
}

FpMat rref(const FpMat& m) {
    FpMat w = m;
    const uint32_t p = w.p();
    std::size_t lead = 0, r = 0;
    for (; lead < w.cols() && r < w.rows(); ++lead) {
        std::size_t piv = r;
        while (piv < w.rows() && w(piv, lead) == 0) ++piv;
        if (piv == w.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w(piv, j), w(r, j));
        uint32_t inv = fp::inv(p, w(r, lead));
        for (std::size_t j = 0; j < w.cols(); ++j) w(r, j) = fp::mul(p, w(r, j), inv);
        for (std::size_t i = 0; i < w.rows(); ++i) {
            if (i == r || w(i, lead) == 0) continue;
            uint32_t c = w(i, lead);
            for (std::size_t j = 0; j < w.cols(); ++j)
                w(i, j) = fp::sub(p, w(i, j), fp::mul(p, c, w(r, j)));
        }
        ++r;
    }
    FpMat out(p, r, w.cols());
    for (std::size_t i = 0; i < r; ++i) out.set_row(i, w.row(i));
    return out;
}

std::vector<std::size_t> pivot_columns(const FpMat& e) {
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < e.rows(); ++i) {
        std::size_t j = 0;
        while (j < e.cols() && e(i, j) == 0) ++j;
        if (j < e.cols()) piv.push_back(j);
    }
    return piv;
}

std::size_t rank(const FpMat& m) { return rref(m).rows(); }

bool subspace_contains(const FpMat& basis, const std::vector<uint32_t>& v) {
    auto r = reduce_mod(basis, v);
    return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

bool subspace_leq(const FpMat& sub, const FpMat& sup) {
    for (std::size_t i = 0; i < sub.rows(); ++i)
        if (!subspace_contains(sup, sub.row(i))) return false;
    return true;
}

FpMat subspace_sum(const FpMat& a, const FpMat& b) {
    FpMat s(a.p(), 0, a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) s.append_row(a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) s.append_row(b.row(i));
    return rref(s);
}

FpMat subspace_intersection(const FpMat& a, const FpMat& b) {
    // Zassenhaus: row-reduce [A|A; B|0], read the intersection from the rows
    // whose left half vanished.
    const std::size_t n = a.cols();
    FpMat w(a.p(), a.rows() + b.rows(), 2 * n);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            w(i, j) = a(i, j);
            w(i, n + j) = a(i, j);
        }
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) w(a.rows() + i, j) = b(i, j);
    FpMat e = rref(w);
    FpMat out(a.p(), 0, n);
    for (std::size_t i = 0; i < e.rows(); ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = (e(i, j) == 0);
        if (left_zero) {
            std::vector<uint32_t> v(n);
            for (std::size_t j = 0; j < n; ++j) v[j] = e(i, n + j);
            bool z = std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
            if (!z) out.append_row(v);
        }
    }
    return rref(out);
}

FpMat zero_subspace(uint32_t p, std::size_t ambient) { return FpMat(p, 0, ambient); }

FpMat full_subspace(uint32_t p, std::size_t ambient) {
    return FpMat::identity(p, ambient);
}

std::vector<uint32_t> reduce_mod(const FpMat& basis, std::vector<uint32_t> v) {
    const uint32_t p = basis.p();
    auto piv = pivot_columns(basis);
    for (std::size_t i = 0; i < piv.size(); ++i) {
        uint32_t c = v[piv[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < basis.cols(); ++j)
            v[j] = fp::sub(p, v[j], fp::mul(p, c, basis(i, j)));
    }
    return v;
}

bool coords_in_rowspace(const FpMat& basis, const std::vector<uint32_t>& v,
                        std::vector<uint32_t>* coords) {
    // Solve c * basis = v by elimination against an echelonized copy that
    // remembers the combination producing each row.
    const uint32_t p = basis.p();
    const std::size_t n = basis.cols(), m = basis.rows();
    FpMat aug(p, m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = basis(i, j);
        aug(i, n + i) = 1;
    }
    FpMat e = rref(aug);
    std::vector<uint32_t> rem = v, comb(m, 0);
    for (std::size_t i = 0; i < e.rows(); ++i) {
        std::size_t lead = 0;
        while (lead < n && e(i, lead) == 0) ++lead;
        if (lead == n) continue; // pure bookkeeping row
        uint32_t c = rem[lead];
        if (c == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            rem[j] = fp::sub(p, rem[j], fp::mul(p, c, e(i, j)));
        for (std::size_t j = 0; j < m; ++j)
            comb[j] = fp::add(p, comb[j], fp::mul(p, c, e(i, n + j)));
    }
    if (!std::all_of(rem.begin(), rem.end(), [](uint32_t x) { return x == 0; }))
        return false;
    if (coords) *coords = comb;
    return true;
}

FpMat left_nullspace(const FpMat& m) { return right_nullspace_rows(m.transposed()); }

FpMat right_nullspace_rows(const FpMat& m) {
    const uint32_t p = m.p();
    const std::size_t n = m.cols();
    FpMat e = rref(m);
    auto piv = pivot_columns(e);
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    FpMat out(p, 0, n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        std::vector<uint32_t> v(n, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = fp::neg(p, e(i, f));
        out.append_row(v);
    }
    return rref(out);
}

unsigned long long count_subspaces(uint32_t p, std::size_t n, std::size_t max_dim) {
    // Gaussian binomial [n choose k]_p summed over k <= max_dim.
    unsigned long long total = 0;
    for (std::size_t k = 0; k <= std::min(n, max_dim); ++k) {
        long double num = 1.0L;
        for (std::size_t i = 0; i < k; ++i) {
            long double a = 1.0L, b = 1.0L;
            for (std::size_t t = 0; t < n - i; ++t) a *= p;
            for (std::size_t t = 0; t < k - i; ++t) b *= p;
            num *= (a - 1) / (b - 1);
        }
        total += static_cast<unsigned long long>(num + 0.5L);
    }
    return total;
}

namespace {

void fill_free_entries(uint32_t p, FpMat& m, const std::vector<std::size_t>& piv,
                       const std::vector<std::pair<std::size_t, std::size_t>>& free_pos,
                       std::size_t idx, std::vector<FpMat>& out) {
    if (idx == free_pos.size()) {
        out.push_back(m);
        return;
    }
    auto [i, j] = free_pos[idx];
    for (uint32_t c = 0; c < p; ++c) {
        m(i, j) = c;
        fill_free_entries(p, m, piv, free_pos, idx + 1, out);
    }
    m(i, j) = 0;
}

void choose_pivots(std::size_t n, std::size_t k, std::size_t start,
                   std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t c = start; c < n; ++c) {
        cur.push_back(c);
        choose_pivots(n, k, c + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<FpMat> enumerate_subspaces(uint32_t p, std::size_t n, std::size_t max_dim) {
    std::vector<FpMat> all;
    for (std::size_t k = 0; k <= std::min(n, max_dim); ++k) {
        std::vector<std::vector<std::size_t>> pivot_sets;
        std::vector<std::size_t> cur;
        choose_pivots(n, k, 0, cur, pivot_sets);
        for (const auto& piv : pivot_sets) {
            std::vector<bool> is_piv(n, false);
            for (auto c : piv) is_piv[c] = true;
            FpMat m(p, k, n);
            std::vector<std::pair<std::size_t, std::size_t>> free_pos;
            for (std::size_t i = 0; i < k; ++i) {
                m(i, piv[i]) = 1;
                for (std::size_t j = piv[i] + 1; j < n; ++j)
                    if (!is_piv[j]) free_pos.emplace_back(i, j);
            }
            fill_free_entries(p, m, piv, free_pos, 0, all);
        }
    }
    return all;
}

} // namespace recoll
