#ifndef RMRES_SRRES_HPP
#define RMRES_SRRES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "rmres/code.hpp"

namespace rmres {

/**
 * Independence complex of the parity-check columns: sigma is a face iff the
 * columns H_sigma are linearly independent. The rank of every column subset
 * is tabulated once at construction and only read afterwards.
 */
class MatroidComplex {
public:
    /// Throws TooLarge when n > max_n (max_n itself is capped at 24).
    MatroidComplex(const LinearCode& code, int max_n);

    int n() const noexcept { return n_; }
    int rank(std::uint32_t mask) const noexcept { return ranks_[mask]; }
    int nullity(std::uint32_t mask) const noexcept;
    bool is_face(std::uint32_t mask) const noexcept;

private:
    int n_;
    std::vector<std::uint8_t> ranks_;
};

/// Minimal non-faces (circuits), sorted by size then lexicographically.
std::vector<std::vector<int>> circuits(const MatroidComplex& complex);

/**
 * Reduced homology dimensions of a simplicial complex given by its faces as
 * vertex bitmasks (downward closed, must contain the empty face), over the
 * prime field `field`. Entry d+1 holds dim H~_d for d = -1 .. max face dim.
 */
std::vector<long long> reduced_homology_dims(const std::vector<std::uint32_t>& faces, const FieldPtr& field);

/// Sparse graded Betti table (i, j) -> beta_{i,j} > 0.
class BettiTable {
public:
    void add(int i, int j, std::int64_t beta);
    std::int64_t at(int i, int j) const;
    const std::map<std::pair<int, int>, std::int64_t>& entries() const noexcept { return entries_; }
    /// Largest homological index with a nonzero entry (-1 if empty).
    int max_index() const noexcept;
    /// Nonzero shifts of row i, ascending.
    std::vector<int> shifts(int i) const;

    bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }

private:
    std::map<std::pair<int, int>, std::int64_t> entries_;
};

/// beta_{i,j} = sum over |W| = j of dim H~_{j-i-1}(Delta|_W), via boundary ranks over GF(ell).
BettiTable betti_hochster(const LinearCode& code, int ell, int max_n = 16, int jobs = 1);

/// Same table from reduced Euler characteristics of matroid restrictions (homology
/// sits in degree rank(W) - 1, so W contributes |chi~| at i = nullity(W)).
BettiTable betti_matroid_fastpath(const LinearCode& code, int max_n = 20);

struct PurityVerdict {
    bool pure = false;
    std::vector<int> type;  // (d_0, ..., d_k) when pure
    bool linear = false;
    std::vector<std::pair<int, std::vector<int>>> violations;
};

PurityVerdict purity_verdict(const BettiTable& table);

using Rational = boost::multiprecision::cpp_rational;

/// beta_i = prod_{j != i} d_j / |d_j - d_i| for a pure type (0, d_1, ..., d_k).
/// Throws DegenerateType on repeated shifts.
std::vector<Rational> herzog_kuhl_predicted(const std::vector<int>& type);

/// d_i = min{j : beta_{i,j} != 0}, i = 1..max index.
std::vector<int> ghw_from_betti(const BettiTable& table);

std::string betti_to_csv(const BettiTable& table);
nlohmann::json betti_to_json(const BettiTable& table);
nlohmann::json purity_to_json(const PurityVerdict& verdict);

}  // namespace rmres

#endif
