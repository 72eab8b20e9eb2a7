#include "rmres/code.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "rmres/error.hpp"

namespace rmres {

namespace {

std::vector<std::vector<Elem>> columns_of(const Matrix& h) {
    std::vector<std::vector<Elem>> cols(h.cols(), std::vector<Elem>(h.rows()));
    for (Eigen::Index j = 0; j < h.cols(); ++j)
        for (Eigen::Index i = 0; i < h.rows(); ++i) cols[j][i] = h(i, j);
    return cols;
}

std::uint64_t checked_power(int base, int exp, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > limit / static_cast<std::uint64_t>(base)) return limit + 1;
        v *= static_cast<std::uint64_t>(base);
    }
    return v;
}

// Depth-first walk over the size-s subsets of [n] (increasing elements),
// keeping an echelon basis of the chosen parity-check columns.
class CombinationSearch {
public:
    CombinationSearch(const Field& field, const Matrix& h)
        : cols_(columns_of(h)), basis_(field, static_cast<int>(h.rows())), n_(static_cast<int>(h.cols())) {}

    // True iff some size-s subset has nullity >= target.
    bool exists(int s, int target) {
        size_ = s;
        target_ = target;
        return recurse(0, 0);
    }

private:
    bool recurse(int start, int depth) {
        if (depth == size_) return size_ - basis_.rank() >= target_;
        // Nullity can grow by at most one per remaining element.
        if (depth - basis_.rank() + (size_ - depth) < target_) return false;
        for (int j = start; j <= n_ - (size_ - depth); ++j) {
            const bool grew = basis_.insert(cols_[j]);
            const bool found = recurse(j + 1, depth + 1);
            if (grew) basis_.pop();
            if (found) return true;
        }
        return false;
    }

    std::vector<std::vector<Elem>> cols_;
    EchelonBasis basis_;
    int n_;
    int size_ = 0;
    int target_ = 0;
};

int ghw_from(const LinearCode& code, int i, int start_size) {
    CombinationSearch search(code.field(), code.parity_check());
    for (int s = std::max(start_size, i); s <= code.n(); ++s)
        if (search.exists(s, i)) return s;
    throw Error(ErrorKind::InternalMismatch, "no support of nullity " + std::to_string(i));
}

}  // namespace

LinearCode LinearCode::from_generator(const Matrix& g) {
    Matrix basis = g;
    const auto red = rref(g);
    if (red.rank != g.rows()) {
        basis = Matrix(g.field_ptr(), ElemMatrix(red.reduced.entries().topRows(red.rank)));
    }
    Matrix h = null_space_from_rref(red, g.cols());
    return LinearCode(std::move(basis), std::move(h));
}

LinearCode LinearCode::from_parity_check(const Matrix& h) {
    Matrix g = null_space_basis(h);
    const auto red = rref(h);
    Matrix hb(h.field_ptr(), ElemMatrix(red.reduced.entries().topRows(red.rank)));
    if (red.rank == h.rows()) hb = h;
    return LinearCode(std::move(g), std::move(hb));
}

bool LinearCode::contains(const Codeword& c) const {
    if (c.size() != n()) return false;
    return is_zero(mat_vec(h_, c));
}

std::vector<int> support(const Codeword& c) {
    std::vector<int> s;
    for (Eigen::Index j = 0; j < c.size(); ++j)
        if (c[j] != 0) s.push_back(static_cast<int>(j));
    return s;
}

int weight(const Codeword& c) noexcept {
    int w = 0;
    for (Eigen::Index j = 0; j < c.size(); ++j) w += c[j] != 0;
    return w;
}

std::vector<int> support(const Matrix& rows) {
    std::vector<int> s;
    for (Eigen::Index j = 0; j < rows.cols(); ++j) {
        for (Eigen::Index i = 0; i < rows.rows(); ++i) {
            if (rows(i, j) != 0) {
                s.push_back(static_cast<int>(j));
                break;
            }
        }
    }
    return s;
}

Subcode make_subcode(const LinearCode& code, const Matrix& basis) {
    if (basis.cols() != code.n()) throw Error(ErrorKind::DimensionMismatch, "subcode rows have wrong length");
    for (Eigen::Index i = 0; i < basis.rows(); ++i)
        if (!code.contains(basis.row(i))) throw Error(ErrorKind::PreconditionViolated, "subcode row is not a codeword");
    if (rank(basis) != basis.rows()) throw Error(ErrorKind::PreconditionViolated, "subcode rows are dependent");
    Subcode d{basis, support(basis), 0};
    d.weight = static_cast<int>(d.support.size());
    return d;
}

int shortened_dim(const LinearCode& code, const std::vector<int>& sigma) {
    return static_cast<int>(sigma.size()) - rank(submatrix_columns(code.parity_check(), sigma));
}

Matrix shortened_basis(const LinearCode& code, const std::vector<int>& sigma) {
    const Matrix local = null_space_basis(submatrix_columns(code.parity_check(), sigma));
    Matrix out(code.field_ptr(), local.rows(), code.n());
    for (Eigen::Index i = 0; i < local.rows(); ++i)
        for (std::size_t c = 0; c < sigma.size(); ++c) out(i, sigma[c]) = local(i, static_cast<Eigen::Index>(c));
    return out;
}

int min_weight_bruteforce(const LinearCode& code, std::uint64_t max_enum) {
    const int k = code.k();
    const int q = code.field().size();
    if (k == 0) throw Error(ErrorKind::PreconditionViolated, "zero code has no minimum weight");
    if (checked_power(q, k, max_enum) > max_enum)
        throw Error(ErrorKind::TooLarge, "q^k = " + std::to_string(q) + "^" + std::to_string(k) + " exceeds enumeration guard " +
                                             std::to_string(max_enum));
    const Field& f = code.field();
    const Matrix& g = code.generator();
    const Eigen::Index n = g.cols();
    std::vector<Elem> digits(k, 0);
    Codeword word = Codeword::Zero(n);
    int best = std::numeric_limits<int>::max();
    // Odometer over messages in canonical element order; each step adds
    // (new - old) * row for every digit that changed.
    for (;;) {
        int j = 0;
        for (; j < k; ++j) {
            const Elem old = digits[j];
            const Elem next = static_cast<Elem>(old + 1 == q ? 0 : old + 1);
            digits[j] = next;
            axpy(f, word.data(), f.sub(next, old), g.entries().row(j).data(), n);
            if (next != 0) break;
        }
        if (j == k) break;
        best = std::min(best, weight(word));
    }
    return best;
}

int ghw(const LinearCode& code, int i, int max_n) {
    if (code.n() > max_n)
        throw Error(ErrorKind::TooLarge, "n = " + std::to_string(code.n()) + " exceeds subset-search guard " + std::to_string(max_n));
    if (i < 1 || i > code.k()) throw Error(ErrorKind::ParameterOutOfRange, "ghw index " + std::to_string(i));
    return ghw_from(code, i, i);
}

std::vector<int> ghw_profile(const LinearCode& code, int max_n) {
    if (code.n() > max_n)
        throw Error(ErrorKind::TooLarge, "n = " + std::to_string(code.n()) + " exceeds subset-search guard " + std::to_string(max_n));
    std::vector<int> d;
    int start = 1;
    for (int i = 1; i <= code.k(); ++i) {
        d.push_back(ghw_from(code, i, start));
        start = d.back() + 1;
    }
    return d;
}

std::uint64_t gaussian_binomial(int q, int dim, int i) noexcept {
    if (i < 0 || i > dim) return 0;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 result = 1;
    for (int j = 0; j < i; ++j) {
        unsigned __int128 num = 1, den = 1;
        for (int t = 0; t < dim - j; ++t) {
            num *= static_cast<unsigned>(q);
            if (num > kMax) return kMax;
        }
        for (int t = 0; t < j + 1; ++t) den *= static_cast<unsigned>(q);
        result = result * (num - 1) / (den - 1);
        if (result > kMax) return kMax;
    }
    return static_cast<std::uint64_t>(result);
}

void for_each_subspace(const FieldPtr& field, int dim, int i, const std::function<bool(const Matrix&)>& visit) {
    if (i < 0 || i > dim) return;
    const int q = field->size();
    std::vector<int> pivots(i);
    for (int r = 0; r < i; ++r) pivots[r] = r;
    for (;;) {
        std::vector<char> is_pivot(dim, 0);
        for (int p : pivots) is_pivot[p] = 1;
        std::vector<std::pair<int, int>> slots;
        for (int r = 0; r < i; ++r)
            for (int c = pivots[r] + 1; c < dim; ++c)
                if (!is_pivot[c]) slots.emplace_back(r, c);
        Matrix m(field, i, dim);
        for (int r = 0; r < i; ++r) m(r, pivots[r]) = 1;
        std::vector<Elem> vals(slots.size(), 0);
        for (;;) {
            for (std::size_t s = 0; s < slots.size(); ++s) m(slots[s].first, slots[s].second) = vals[s];
            if (!visit(m)) return;
            std::size_t s = 0;
            for (; s < vals.size(); ++s) {
                if (++vals[s] < q) break;
                vals[s] = 0;
            }
            if (s == vals.size()) break;
        }
        // next pivot combination
        int r = i - 1;
        while (r >= 0 && pivots[r] == dim - i + r) --r;
        if (r < 0) return;
        ++pivots[r];
        for (int t = r + 1; t < i; ++t) pivots[t] = pivots[t - 1] + 1;
    }
}

int ghw_by_subspaces(const LinearCode& code, int i, std::uint64_t max_subspaces) {
    if (i < 1 || i > code.k()) throw Error(ErrorKind::ParameterOutOfRange, "ghw index " + std::to_string(i));
    const auto count = gaussian_binomial(code.field().size(), code.k(), i);
    if (count > max_subspaces)
        throw Error(ErrorKind::TooLarge, std::to_string(count) + " subspaces exceed guard " + std::to_string(max_subspaces));
    int best = std::numeric_limits<int>::max();
    for_each_subspace(code.field_ptr(), code.k(), i, [&](const Matrix& coeffs) {
        best = std::min(best, static_cast<int>(support(mat_mul(coeffs, code.generator())).size()));
        return true;
    });
    return best;
}

bool is_i_minimal(const LinearCode& code, const Subcode& d, std::uint64_t max_subspaces) {
    for (Eigen::Index r = 0; r < d.basis.rows(); ++r)
        if (!code.contains(d.basis.row(r))) throw Error(ErrorKind::PreconditionViolated, "subcode row is not a codeword");
    const int i = d.dim();
    // Every i-dimensional subcode supported inside Supp(D) lives in the shortened code on Supp(D).
    const Matrix inside = shortened_basis(code, d.support);
    const int s = static_cast<int>(inside.rows());
    const auto count = gaussian_binomial(code.field().size(), s, i);
    if (count > max_subspaces)
        throw Error(ErrorKind::TooLarge, std::to_string(count) + " subspaces exceed guard " + std::to_string(max_subspaces));
    bool minimal = true;
    for_each_subspace(code.field_ptr(), s, i, [&](const Matrix& coeffs) {
        const Matrix other = mat_mul(coeffs, inside);
        if (!row_space_equal(other, d.basis)) {
            minimal = false;
            return false;
        }
        return true;
    });
    return minimal;
}

Codeword greedy_shrink_to_one_minimal(const LinearCode& code, const Codeword& c) {
    if (is_zero(c) || !code.contains(c)) throw Error(ErrorKind::PreconditionViolated, "greedy shrink needs a nonzero codeword");
    std::vector<int> sigma = support(c);
    // A coordinate that is not removable stays non-removable once sigma shrinks,
    // so one ascending pass removes exactly the smallest removable index each time.
    const std::vector<int> original = sigma;
    for (int j : original) {
        std::vector<int> smaller;
        smaller.reserve(sigma.size());
        for (int x : sigma)
            if (x != j) smaller.push_back(x);
        if (shortened_dim(code, smaller) >= 1) sigma = std::move(smaller);
    }
    const Matrix basis = shortened_basis(code, sigma);
    if (basis.rows() != 1) throw Error(ErrorKind::InternalMismatch, "shrunken support has nullity " + std::to_string(basis.rows()));
    return basis.row(0);
}

bool is_nondegenerate(const LinearCode& code) {
    return static_cast<int>(support(code.generator()).size()) == code.n();
}

bool is_mds(const LinearCode& code, std::uint64_t max_enum) {
    return min_weight_bruteforce(code, max_enum) == code.n() - code.k() + 1;
}

std::vector<std::uint8_t> column_subset_ranks(const Matrix& h) {
    const int n = static_cast<int>(h.cols());
    if (n > 30) throw Error(ErrorKind::TooLarge, "subset rank table needs n <= 30");
    std::vector<std::uint8_t> ranks(std::size_t{1} << n, 0);
    const auto cols = columns_of(h);
    EchelonBasis basis(h.field(), static_cast<int>(h.rows()));
    auto recurse = [&](auto&& self, int start, std::uint32_t mask) -> void {
        ranks[mask] = static_cast<std::uint8_t>(basis.rank());
        for (int j = start; j < n; ++j) {
            const bool grew = basis.insert(cols[j]);
            self(self, j + 1, mask | (std::uint32_t{1} << j));
            if (grew) basis.pop();
        }
    };
    recurse(recurse, 0, 0);
    return ranks;
}

}  // namespace rmres
