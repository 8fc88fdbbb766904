#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace recoll {

/// Exact arithmetic in the prime field F_p, p <= 97. Residues are stored as
/// uint32_t in [0, p). Everything downstream (algebras, modules, ideals)
/// reduces to operations on FpMat, so this file is the only place where
/// scalar arithmetic happens.
namespace fp {

bool is_prime(uint32_t n);
inline uint32_t add(uint32_t p, uint32_t a, uint32_t b) { return (a + b) % p; }
inline uint32_t sub(uint32_t p, uint32_t a, uint32_t b) { return (a + p - b) % p; }
inline uint32_t mul(uint32_t p, uint32_t a, uint32_t b) { return (a * b) % p; }
inline uint32_t neg(uint32_t p, uint32_t a) { return a == 0 ? 0 : p - a; }
uint32_t inv(uint32_t p, uint32_t a);

} // namespace fp

/// Dense row-major matrix over F_p. Vectors are rows throughout the library;
/// a linear map acts by right multiplication, so maps compose left to right.
class FpMat {
public:
    FpMat() = default;
    FpMat(uint32_t p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FpMat identity(uint32_t p, std::size_t n);
    static FpMat from_rows(uint32_t p, std::size_t cols,
                           const std::vector<std::vector<uint32_t>>& rows);

    uint32_t p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    uint32_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    std::vector<uint32_t> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<uint32_t>& v);
    void append_row(const std::vector<uint32_t>& v);

    FpMat operator+(const FpMat& o) const;
    FpMat operator-(const FpMat& o) const;
    FpMat operator*(const FpMat& o) const;
    FpMat scaled(uint32_t c) const;
    FpMat transposed() const;
    bool operator==(const FpMat& o) const;
    bool operator!=(const FpMat& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;

    const std::vector<uint32_t>& data() const { return a_; }
    std::string str() const;

private:
    uint32_t p_ = 2;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<uint32_t> a_;
};

/// x |-> x * m on row vectors.
std::vector<uint32_t> apply_row(const std::vector<uint32_t>& x, const FpMat& m);

/// Reduced row echelon form; zero rows dropped, pivots strictly increasing.
/// Two subspaces of F_p^n are equal iff their echelon bases are identical
/// arrays, which is the system-wide equality convention.
FpMat rref(const FpMat& m);
std::vector<std::size_t> pivot_columns(const FpMat& echelon);
std::size_t rank(const FpMat& m);

/// Subspace helpers. A subspace is an echelonized row basis.
bool subspace_contains(const FpMat& basis, const std::vector<uint32_t>& v);
bool subspace_leq(const FpMat& sub, const FpMat& sup);
FpMat subspace_sum(const FpMat& a, const FpMat& b);
FpMat subspace_intersection(const FpMat& a, const FpMat& b);
FpMat zero_subspace(uint32_t p, std::size_t ambient);
FpMat full_subspace(uint32_t p, std::size_t ambient);

/// Residue of v modulo the subspace: pivot coordinates eliminated.
std::vector<uint32_t> reduce_mod(const FpMat& basis, std::vector<uint32_t> v);

/// Coordinates of v in the row space of basis, if v lies there.
bool coords_in_rowspace(const FpMat& basis, const std::vector<uint32_t>& v,
                        std::vector<uint32_t>* coords);

/// Echelonized basis of {x : x * m = 0}.
FpMat left_nullspace(const FpMat& m);

/// Echelonized basis of solutions x (as rows) of m * x^T = 0, i.e. the right
/// nullspace written as row vectors of length cols(m).
FpMat right_nullspace_rows(const FpMat& m);

/// Number of subspaces of F_p^n with dimension <= max_dim (Gaussian binomials).
unsigned long long count_subspaces(uint32_t p, std::size_t n, std::size_t max_dim);

/// All subspaces of F_p^n of dimension <= max_dim, each as an echelonized
/// basis, enumerated in a fixed deterministic order.
std::vector<FpMat> enumerate_subspaces(uint32_t p, std::size_t n, std::size_t max_dim);

} // namespace recoll
