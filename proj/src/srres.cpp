#include "rmres/srres.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "rmres/error.hpp"
#include "rmres/parallel.hpp"

namespace rmres {

namespace {

constexpr int kHardMaxN = 24;

void check_size(int n, int max_n, const char* what) {
    if (n > std::min(max_n, kHardMaxN))
        throw Error(ErrorKind::TooLarge, std::string(what) + ": n = " + std::to_string(n) + " exceeds guard " +
                                             std::to_string(std::min(max_n, kHardMaxN)));
}

}  // namespace

MatroidComplex::MatroidComplex(const LinearCode& code, int max_n) : n_(code.n()) {
    check_size(n_, max_n, "matroid complex");
    ranks_ = column_subset_ranks(code.parity_check());
}

int MatroidComplex::nullity(std::uint32_t mask) const noexcept { return std::popcount(mask) - ranks_[mask]; }

bool MatroidComplex::is_face(std::uint32_t mask) const noexcept { return ranks_[mask] == std::popcount(mask); }

std::vector<std::vector<int>> circuits(const MatroidComplex& complex) {
    std::vector<std::vector<int>> out;
    const std::uint32_t full = (std::uint32_t{1} << complex.n()) - 1;
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        if (complex.is_face(mask)) continue;
        bool minimal = true;
        for (std::uint32_t rest = mask; rest != 0 && minimal; rest &= rest - 1) {
            const std::uint32_t bit = rest & (~rest + 1);
            minimal = complex.is_face(mask ^ bit);
        }
        if (!minimal) continue;
        std::vector<int> c;
        for (int j = 0; j < complex.n(); ++j)
            if (mask >> j & 1U) c.push_back(j);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<long long> reduced_homology_dims(const std::vector<std::uint32_t>& faces, const FieldPtr& field) {
    if (std::find(faces.begin(), faces.end(), 0U) == faces.end())
        throw Error(ErrorKind::PreconditionViolated, "a simplicial complex must contain the empty face");
    int top = 0;
    for (auto f : faces) top = std::max(top, std::popcount(f));
    // by_size[s]: faces with s vertices, sorted for index lookup
    std::vector<std::vector<std::uint32_t>> by_size(top + 1);
    for (auto f : faces) by_size[std::popcount(f)].push_back(f);
    for (auto& v : by_size) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    const Elem minus_one = field->neg(1);
    // boundary_rank[s] = rank of the boundary from s-vertex faces to (s-1)-vertex faces
    std::vector<long long> boundary_rank(top + 2, 0);
    for (int s = 1; s <= top; ++s) {
        const auto& src = by_size[s];
        const auto& dst = by_size[s - 1];
        Matrix d(field, static_cast<Eigen::Index>(dst.size()), static_cast<Eigen::Index>(src.size()));
        for (std::size_t c = 0; c < src.size(); ++c) {
            int position = 0;
            for (std::uint32_t rest = src[c]; rest != 0; rest &= rest - 1, ++position) {
                const std::uint32_t bit = rest & (~rest + 1);
                const auto it = std::lower_bound(dst.begin(), dst.end(), src[c] ^ bit);
                if (it == dst.end() || *it != (src[c] ^ bit))
                    throw Error(ErrorKind::PreconditionViolated, "face family is not closed under taking subsets");
                d(it - dst.begin(), static_cast<Eigen::Index>(c)) = position % 2 == 0 ? Elem{1} : minus_one;
            }
        }
        boundary_rank[s] = rank(d);
    }
    std::vector<long long> dims(top + 1, 0);
    for (int s = 0; s <= top; ++s)
        dims[s] = static_cast<long long>(by_size[s].size()) - boundary_rank[s] - boundary_rank[s + 1];
    return dims;
}

void BettiTable::add(int i, int j, std::int64_t beta) {
    if (beta == 0) return;
    auto& v = entries_[{i, j}];
    v += beta;
    if (v == 0) entries_.erase({i, j});
}

std::int64_t BettiTable::at(int i, int j) const {
    const auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::max_index() const noexcept {
    int best = -1;
    for (const auto& [key, v] : entries_) best = std::max(best, key.first);
    return best;
}

std::vector<int> BettiTable::shifts(int i) const {
    std::vector<int> out;
    for (auto it = entries_.lower_bound({i, std::numeric_limits<int>::min()}); it != entries_.end() && it->first.first == i; ++it)
        out.push_back(it->first.second);
    return out;
}

BettiTable betti_hochster(const LinearCode& code, int ell, int max_n, int jobs) {
    if (!is_prime(ell)) throw Error(ErrorKind::ParameterOutOfRange, "homology characteristic must be prime");
    check_size(code.n(), max_n, "betti_hochster");
    const MatroidComplex complex(code, max_n);
    const FieldPtr coeffs = make_field(ell);
    const std::size_t count = std::size_t{1} << code.n();
    std::vector<BettiTable> partial(static_cast<std::size_t>(std::max(1, jobs)));
    parallel_for(count, jobs, [&](std::size_t worker, std::size_t index) {
        const auto w = static_cast<std::uint32_t>(index);
        std::vector<std::uint32_t> faces;
        for (std::uint32_t sub = w;; sub = (sub - 1) & w) {
            if (complex.is_face(sub)) faces.push_back(sub);
            if (sub == 0) break;
        }
        const auto dims = reduced_homology_dims(faces, coeffs);
        const int j = std::popcount(w);
        // dims[s] = dim H~_{s-1}; Hochster puts it at i = j - s.
        for (std::size_t s = 0; s < dims.size(); ++s)
            if (dims[s] != 0) partial[worker].add(j - static_cast<int>(s), j, dims[s]);
    });
    BettiTable table;
    for (const auto& p : partial)
        for (const auto& [key, v] : p.entries()) table.add(key.first, key.second, v);
    return table;
}

BettiTable betti_matroid_fastpath(const LinearCode& code, int max_n) {
    check_size(code.n(), max_n, "betti_matroid_fastpath");
    const MatroidComplex complex(code, max_n);
    const int n = code.n();
    const std::size_t count = std::size_t{1} << n;
    // Zeta transform over subsets: sum_{F within W, F a face} (-1)^{|F|} = -chi~(Delta|_W).
    std::vector<std::int64_t> chi(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        const auto m = static_cast<std::uint32_t>(mask);
        chi[mask] = complex.is_face(m) ? (std::popcount(m) % 2 == 0 ? 1 : -1) : 0;
    }
    for (int b = 0; b < n; ++b) {
        const std::size_t bit = std::size_t{1} << b;
        for (std::size_t mask = 0; mask < count; ++mask)
            if (mask & bit) chi[mask] += chi[mask ^ bit];
    }
    BettiTable table;
    for (std::size_t mask = 0; mask < count; ++mask) {
        if (chi[mask] == 0) continue;
        const auto m = static_cast<std::uint32_t>(mask);
        table.add(complex.nullity(m), std::popcount(m), chi[mask] < 0 ? -chi[mask] : chi[mask]);
    }
    return table;
}

PurityVerdict purity_verdict(const BettiTable& table) {
    PurityVerdict v;
    const int k = table.max_index();
    v.pure = k >= 0;
    for (int i = 0; i <= k; ++i) {
        auto row = table.shifts(i);
        if (row.size() == 1) {
            v.type.push_back(row.front());
        } else {
            v.pure = false;
            v.violations.emplace_back(i, std::move(row));
        }
    }
    if (!v.pure) {
        v.type.clear();
        return v;
    }
    v.linear = true;
    for (std::size_t i = 2; i < v.type.size(); ++i)
        if (v.type[i] != v.type[i - 1] + 1) v.linear = false;
    return v;
}

std::vector<Rational> herzog_kuhl_predicted(const std::vector<int>& type) {
    if (type.empty()) throw Error(ErrorKind::DegenerateType, "empty type");
    for (std::size_t i = 1; i < type.size(); ++i)
        if (type[i] <= type[i - 1]) throw Error(ErrorKind::DegenerateType, "shifts must be strictly increasing");
    const std::size_t k = type.size() - 1;
    std::vector<Rational> out;
    for (std::size_t i = 1; i <= k; ++i) {
        Rational beta = 1;
        for (std::size_t j = 1; j <= k; ++j) {
            if (j == i) continue;
            beta *= Rational(type[j], std::abs(type[j] - type[i]));
        }
        out.push_back(beta);
    }
    return out;
}

std::vector<int> ghw_from_betti(const BettiTable& table) {
    std::vector<int> d;
    for (int i = 1; i <= table.max_index(); ++i) {
        const auto row = table.shifts(i);
        d.push_back(row.empty() ? 0 : row.front());
    }
    return d;
}

std::string betti_to_csv(const BettiTable& table) {
    std::ostringstream out;
    out << "i,j,beta\n";
    for (const auto& [key, v] : table.entries()) out << key.first << ',' << key.second << ',' << v << '\n';
    return out.str();
}

nlohmann::json betti_to_json(const BettiTable& table) {
    auto arr = nlohmann::json::array();
    for (const auto& [key, v] : table.entries()) arr.push_back({{"i", key.first}, {"j", key.second}, {"beta", v}});
    return arr;
}

nlohmann::json purity_to_json(const PurityVerdict& verdict) {
    nlohmann::json j;
    j["pure"] = verdict.pure;
    j["type"] = verdict.pure ? nlohmann::json(verdict.type) : nlohmann::json(nullptr);
    j["linear"] = verdict.linear;
    auto viol = nlohmann::json::array();
    for (const auto& [i, shifts] : verdict.violations) viol.push_back({{"i", i}, {"shifts", shifts}});
    j["violations"] = viol;
    return j;
}

}  // namespace rmres
