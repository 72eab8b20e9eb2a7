#ifndef RMRES_TESTS_ORACLES_HPP
#define RMRES_TESTS_ORACLES_HPP

// Brute-force reference computations that share no code with the library:
// plain integers mod a prime, codeword enumeration and Hochster's formula
// evaluated on restriction complexes built from codeword supports.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Table = std::map<std::pair<int, int>, long long>;

inline int mod(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

inline int inv_mod(int a, int p) {
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    return 0;
}

/// Rank of an integer matrix over Z_p by textbook elimination.
inline int rank_mod(std::vector<std::vector<int>> a, int p) {
    int rank = 0;
    const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    for (int c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(a.size()); ++i)
            if (a[i][c] % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        const int iv = inv_mod(mod(a[rank][c], p), p);
        for (auto& x : a[rank]) x = mod(static_cast<long long>(x) * iv, p);
        for (int i = 0; i < static_cast<int>(a.size()); ++i) {
            if (i == rank || a[i][c] == 0) continue;
            const int f = a[i][c];
            for (int j = 0; j < cols; ++j) a[i][j] = mod(a[i][j] - static_cast<long long>(f) * a[rank][j], p);
        }
        ++rank;
    }
    return rank;
}

/// Generator of RM_p(r, m) for prime p: monomials with exponents < p and
/// degree <= r evaluated at the points of Z_p^m (first coordinate most significant).
inline std::vector<std::vector<int>> rm_generator_prime(int p, int r, int m) {
    int n = 1;
    for (int i = 0; i < m; ++i) n *= p;
    std::vector<std::vector<int>> pts(n, std::vector<int>(m));
    for (int nu = 0; nu < n; ++nu) {
        int x = nu;
        for (int j = m - 1; j >= 0; --j) {
            pts[nu][j] = x % p;
            x /= p;
        }
    }
    std::vector<std::vector<int>> g;
    std::vector<int> e(m, 0);
    while (true) {
        int deg = 0;
        for (int v : e) deg += v;
        if (deg <= r) {
            std::vector<int> row(n);
            for (int nu = 0; nu < n; ++nu) {
                long long val = 1;
                for (int j = 0; j < m; ++j)
                    for (int k = 0; k < e[j]; ++k) val = val * pts[nu][j] % p;
                row[nu] = static_cast<int>(val);
            }
            g.push_back(row);
        }
        int j = m - 1;
        while (j >= 0 && e[j] == p - 1) e[j--] = 0;
        if (j < 0) break;
        ++e[j];
    }
    return g;
}

/// Every codeword (as a vector) spanned by the rows of g over Z_p.
inline std::vector<std::vector<int>> all_codewords(const std::vector<std::vector<int>>& g, int p, int n) {
    std::vector<std::vector<int>> words{std::vector<int>(n, 0)};
    for (const auto& row : g) {
        std::vector<std::vector<int>> next;
        next.reserve(words.size() * p);
        for (const auto& w : words)
            for (int c = 0; c < p; ++c) {
                std::vector<int> v(n);
                for (int j = 0; j < n; ++j) v[j] = mod(w[j] + static_cast<long long>(c) * row[j], p);
                next.push_back(std::move(v));
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        words = std::move(next);
    }
    return words;
}

inline std::uint32_t support_mask(const std::vector<int>& w) {
    std::uint32_t m = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
        if (w[j] != 0) m |= std::uint32_t{1} << j;
    return m;
}

/// count[sigma] = number of codewords with support inside sigma (q^{dim of the shortened code}).
inline std::vector<long long> shortened_counts(const std::vector<std::uint32_t>& supports, int n) {
    std::vector<long long> count(std::size_t{1} << n, 0);
    for (auto s : supports) ++count[s];
    for (int b = 0; b < n; ++b)
        for (std::size_t mask = 0; mask < count.size(); ++mask)
            if (mask >> b & 1U) count[mask] += count[mask ^ (std::size_t{1} << b)];
    return count;
}

/// d_i = least |sigma| carrying at least q^i codewords.
inline std::vector<int> ghw_profile(const std::vector<std::uint32_t>& supports, int n, int q) {
    const auto count = shortened_counts(supports, n);
    long long total = static_cast<long long>(supports.size());
    std::vector<int> d;
    for (long long qi = q; qi <= total; qi *= q) {
        int best = n + 1;
        for (std::size_t mask = 0; mask < count.size(); ++mask)
            if (count[mask] >= qi) best = std::min(best, std::popcount(mask));
        d.push_back(best);
    }
    return d;
}

/// Reduced homology dims (index s = dim H~_{s-1}) of the complex given by faces, over Z_p.
inline std::vector<long long> reduced_homology(const std::vector<std::uint32_t>& faces, int p) {
    int top = 0;
    for (auto f : faces) top = std::max(top, std::popcount(f));
    std::vector<std::vector<std::uint32_t>> by_size(top + 1);
    for (auto f : faces) by_size[std::popcount(f)].push_back(f);
    std::vector<long long> brank(top + 2, 0);
    for (int s = 1; s <= top; ++s) {
        const auto& src = by_size[s];
        const auto& dst = by_size[s - 1];
        std::vector<std::vector<int>> d(dst.size(), std::vector<int>(src.size(), 0));
        for (std::size_t c = 0; c < src.size(); ++c) {
            int pos = 0;
            for (int v = 0; v < 32; ++v) {
                if (!(src[c] >> v & 1U)) continue;
                const auto face = src[c] & ~(std::uint32_t{1} << v);
                const auto it = std::find(dst.begin(), dst.end(), face);
                d[it - dst.begin()][c] = pos % 2 == 0 ? 1 : p - 1;
                ++pos;
            }
        }
        brank[s] = rank_mod(d, p);
    }
    std::vector<long long> out(top + 1);
    for (int s = 0; s <= top; ++s) out[s] = static_cast<long long>(by_size[s].size()) - brank[s] - brank[s + 1];
    return out;
}

/// Graded Betti numbers by Hochster's formula, with faces of Delta_C defined
/// as coordinate sets containing no nonzero codeword support.
inline Table betti_from_codewords(const std::vector<std::uint32_t>& supports, int n, int ell) {
    std::vector<std::uint32_t> minimal;
    for (auto s : supports)
        if (s != 0) minimal.push_back(s);
    auto is_face = [&](std::uint32_t f) {
        for (auto s : minimal)
            if ((s & f) == s) return false;
        return true;
    };
    Table table;
    for (std::uint32_t w = 0; w < (std::uint32_t{1} << n); ++w) {
        std::vector<std::uint32_t> faces;
        for (std::uint32_t sub = w;; sub = (sub - 1) & w) {
            if (is_face(sub)) faces.push_back(sub);
            if (sub == 0) break;
        }
        const auto h = reduced_homology(faces, ell);
        const int j = std::popcount(w);
        for (std::size_t s = 0; s < h.size(); ++s)
            if (h[s] != 0) table[{j - static_cast<int>(s), j}] += h[s];
    }
    return table;
}

}  // namespace oracle

#endif
