#ifndef RMRES_CODE_HPP
#define RMRES_CODE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "rmres/matrix.hpp"

namespace rmres {

/// Enumeration limits; exceeding any of them raises TooLarge instead of truncating.
struct Guards {
    std::uint64_t max_enum = 2'000'000;       // q^k codewords for brute-force distance
    int max_n_ghw = 25;                       // subset search over supports
    std::uint64_t max_subspaces = 1'000'000;  // Gaussian-binomial count for i-minimality
    int max_n_betti = 16;                     // 2^n restriction sweep
    int max_n_oracle = 12;                    // slow homology cross-check
};

/// [n,k]_q code carried by a generator and a parity-check matrix with G H^T = 0.
class LinearCode {
public:
    /// Rows of g span the code; dependent rows are replaced by an RREF basis.
    static LinearCode from_generator(const Matrix& g);
    static LinearCode from_parity_check(const Matrix& h);

    int n() const noexcept { return static_cast<int>(g_.cols()); }
    int k() const noexcept { return static_cast<int>(g_.rows()); }
    const Matrix& generator() const noexcept { return g_; }
    const Matrix& parity_check() const noexcept { return h_; }
    const Field& field() const noexcept { return g_.field(); }
    const FieldPtr& field_ptr() const noexcept { return g_.field_ptr(); }

    /// H c^T = 0.
    bool contains(const Codeword& c) const;
    Codeword encode(const Codeword& message) const { return vec_mat(message, g_); }

private:
    LinearCode(Matrix g, Matrix h) : g_(std::move(g)), h_(std::move(h)) {}
    Matrix g_;
    Matrix h_;
};

std::vector<int> support(const Codeword& c);
int weight(const Codeword& c) noexcept;

/// Union of row supports, sorted.
std::vector<int> support(const Matrix& rows);

/// An i-dimensional subcode given by independent codeword rows.
struct Subcode {
    Matrix basis;
    std::vector<int> support;
    int weight = 0;

    int dim() const noexcept { return static_cast<int>(basis.rows()); }
};

/// Validates membership and independence of the rows (PreconditionViolated otherwise).
Subcode make_subcode(const LinearCode& code, const Matrix& basis);

/// dim{c in C : supp(c) within sigma} = |sigma| - rank(H_sigma).
int shortened_dim(const LinearCode& code, const std::vector<int>& sigma);
/// Basis (rows of length n) of {c in C : supp(c) within sigma}.
Matrix shortened_basis(const LinearCode& code, const std::vector<int>& sigma);

/// Smallest nonzero weight by iterating all q^k messages.
int min_weight_bruteforce(const LinearCode& code, std::uint64_t max_enum = Guards{}.max_enum);

/// i-th generalized Hamming weight by increasing-size support search.
int ghw(const LinearCode& code, int i, int max_n = Guards{}.max_n_ghw);
/// (d_1, ..., d_k).
std::vector<int> ghw_profile(const LinearCode& code, int max_n = Guards{}.max_n_ghw);

/// d_i by enumerating every i-dimensional subcode; tiny codes only.
int ghw_by_subspaces(const LinearCode& code, int i, std::uint64_t max_subspaces = Guards{}.max_subspaces);

/// Number of i-dimensional subspaces of F_q^dim, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(int q, int dim, int i) noexcept;

/**
 * Calls visit(basis) for every i-dimensional subspace of F_q^dim, each given by
 * its unique RREF basis (i x dim). Enumeration stops when visit returns false.
 */
void for_each_subspace(const FieldPtr& field, int dim, int i, const std::function<bool(const Matrix&)>& visit);

/// Literal i-minimality: no other i-dimensional subcode D' != D has Supp(D') within Supp(D).
bool is_i_minimal(const LinearCode& code, const Subcode& d, std::uint64_t max_subspaces = Guards{}.max_subspaces);

/// Shrinks supp(c) one coordinate at a time (smallest removable index first) until
/// the support carries a one-dimensional shortened code, then returns its spanning word.
Codeword greedy_shrink_to_one_minimal(const LinearCode& code, const Codeword& c);

bool is_nondegenerate(const LinearCode& code);
/// d == n - k + 1, with d by brute force.
bool is_mds(const LinearCode& code, std::uint64_t max_enum = Guards{}.max_enum);

/// rank(H_sigma) for every sigma in 2^[n], indexed by bitmask. Requires n <= 30.
std::vector<std::uint8_t> column_subset_ranks(const Matrix& h);

}  // namespace rmres

#endif
