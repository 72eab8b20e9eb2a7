#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>

#include "oracles.hpp"
#include "rmres/code.hpp"
#include "rmres/rm.hpp"
#include "support.hpp"

using namespace rmres;
using testing::from_ints;
using testing::kind_of;
using testing::random_matrix;

namespace {

LinearCode even_weight_4() { return LinearCode::from_parity_check(from_ints(make_field(2), {{1, 1, 1, 1}})); }

std::vector<std::uint32_t> all_supports(const LinearCode& code) {
    const int q = code.field().size();
    std::vector<std::uint32_t> out;
    Codeword msg = Codeword::Zero(code.k());
    while (true) {
        std::uint32_t mask = 0;
        const Codeword c = code.encode(msg);
        for (Eigen::Index j = 0; j < c.size(); ++j)
            if (c(j) != 0) mask |= std::uint32_t{1} << j;
        out.push_back(mask);
        Eigen::Index i = 0;
        while (i < msg.size() && msg(i) == q - 1) msg(i++) = 0;
        if (i == msg.size()) break;
        ++msg(i);
    }
    return out;
}

}  // namespace

TEST_CASE("weight and support") {
    CHECK(weight(Codeword::Zero(5)) == 0);
    CHECK(support(Codeword::Zero(5)).empty());
    CHECK(weight(Codeword::Ones(9)) == 9);
    const auto f3 = make_field(3);
    const RMCode rm = build_code(f3, 2, 2);
    CHECK(weight(evaluate(min_weight_poly(f3, 2, 2), rm.points)) == 3);
}

TEST_CASE("generator and parity-check factories") {
    const auto f2 = make_field(2);
    const auto code = LinearCode::from_generator(from_ints(f2, {{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}}));
    CHECK(code.k() == 2);
    CHECK(code.n() == 4);
    CHECK(code.parity_check().rows() == 2);
    CHECK(mat_mul(code.generator(), transpose(code.parity_check())) == Matrix(f2, 2, 2));

    const auto even = even_weight_4();
    CHECK(even.k() == 3);
    Codeword c(4);
    c << 1, 1, 0, 0;
    CHECK(even.contains(c));
    c << 1, 0, 0, 0;
    CHECK_FALSE(even.contains(c));

    CHECK(kind_of([&] { (void)make_subcode(even, from_ints(f2, {{1, 0, 0, 0}})); }) == ErrorKind::PreconditionViolated);
    CHECK(kind_of([&] { (void)make_subcode(even, from_ints(f2, {{1, 1, 0, 0}, {1, 1, 0, 0}})); }) ==
          ErrorKind::PreconditionViolated);
    const auto d = make_subcode(even, from_ints(f2, {{1, 1, 0, 0}, {0, 1, 1, 0}}));
    CHECK(d.dim() == 2);
    CHECK(d.weight == 3);
    CHECK(d.support == std::vector<int>{0, 1, 2});
}

TEST_CASE("shortened dimension") {
    const auto even = even_weight_4();
    CHECK(shortened_dim(even, {}) == 0);
    CHECK(shortened_dim(even, {0, 1, 2, 3}) == 3);
    CHECK(shortened_dim(even, {0, 1}) == 1);
    const auto basis = shortened_basis(even, {0, 1});
    REQUIRE(basis.rows() == 1);
    CHECK(support(basis.row(0)) == std::vector<int>{0, 1});
}

TEST_CASE("brute-force minimum distance") {
    CHECK(min_weight_bruteforce(build_code(3, 2, 2).code) == 3);
    CHECK(min_weight_bruteforce(build_code(2, 2, 4).code) == 4);
    for (int q : {2, 3, 4})
        for (int m : {1, 2}) CHECK(min_weight_bruteforce(build_code(q, 0, m).code) == build_code(q, 0, m).n);
    CHECK(kind_of([] { (void)min_weight_bruteforce(build_code(2, 3, 5).code, 1000); }) == ErrorKind::TooLarge);
}

TEST_CASE("generalized Hamming weights") {
    const auto rm213 = build_code(2, 1, 3);
    CHECK(ghw_profile(rm213.code) == std::vector<int>{4, 6, 7, 8});
    CHECK(kind_of([] { (void)ghw_profile(build_code(2, 1, 5).code, 20); }) == ErrorKind::TooLarge);

    for (auto [q, r, m] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {2, 2, 3}, {3, 1, 2}, {3, 2, 2}, {4, 2, 2}, {2, 2, 4}}) {
        CAPTURE(q);
        CAPTURE(r);
        CAPTURE(m);
        const auto rm = build_code(q, r, m);
        const auto profile = ghw_profile(rm.code);
        CHECK(static_cast<int>(profile.size()) == rm.k);
        CHECK(std::is_sorted(profile.begin(), profile.end(), std::less_equal<>()));
        CHECK(std::adjacent_find(profile.begin(), profile.end()) == profile.end());
        CHECK(profile.front() == min_weight_bruteforce(rm.code));
        CHECK(profile == oracle::ghw_profile(all_supports(rm.code), rm.n, q));
    }
}

TEST_CASE("subset search agrees with subspace enumeration on small random codes") {
    std::mt19937_64 rng(77);
    int compared = 0;
    for (int q : {2, 3}) {
        const auto field = make_field(q);
        for (int trial = 0; trial < 40; ++trial) {
            std::uniform_int_distribution<int> pick_n(2, 10);
            const int n = pick_n(rng);
            std::uniform_int_distribution<int> pick_k(1, std::min(4, n));
            const auto code = LinearCode::from_generator(random_matrix(field, pick_k(rng), n, rng));
            if (code.k() == 0) continue;
            CAPTURE(q);
            CAPTURE(n);
            CAPTURE(code.k());
            for (int i = 1; i <= code.k(); ++i) CHECK(ghw(code, i) == ghw_by_subspaces(code, i));
            CHECK(ghw_profile(code) == oracle::ghw_profile(all_supports(code), n, q));
            ++compared;
        }
    }
    CHECK(compared > 60);
}

TEST_CASE("subspace enumeration") {
    CHECK(gaussian_binomial(2, 4, 2) == 35);
    CHECK(gaussian_binomial(3, 3, 1) == 13);
    CHECK(gaussian_binomial(2, 3, 0) == 1);
    CHECK(gaussian_binomial(2, 3, 4) == 0);
    for (auto [q, dim, i] : std::vector<std::tuple<int, int, int>>{{2, 4, 2}, {3, 3, 1}, {3, 3, 2}, {4, 2, 1}}) {
        std::uint64_t count = 0;
        const auto field = make_field(q);
        for_each_subspace(field, dim, i, [&](const Matrix& basis) {
            CHECK(rref(basis).reduced == basis);
            CHECK(rank(basis) == i);
            ++count;
            return true;
        });
        CHECK(count == gaussian_binomial(q, dim, i));
    }
}

TEST_CASE("i-minimality") {
    const auto rm = build_code(3, 2, 2);
    const Codeword c = evaluate(min_weight_poly(rm.points.field_ptr(), 2, 2), rm.points);
    const auto span = make_subcode(rm.code, Matrix::from_rows(rm.code.field_ptr(), {c}, rm.n));
    CHECK(is_i_minimal(rm.code, span));

    const auto whole = make_subcode(rm.code, rm.code.generator());
    CHECK(is_i_minimal(rm.code, whole));

    // a weight-4 subcode of the even-weight code contains weight-2 words, so it is not 1-minimal
    const auto even = even_weight_4();
    const auto heavy = make_subcode(even, from_ints(make_field(2), {{1, 1, 1, 1}}));
    CHECK_FALSE(is_i_minimal(even, heavy));

    // literal reading: equal supports defeat minimality
    const auto f3 = make_field(3);
    const auto rep = LinearCode::from_generator(from_ints(f3, {{1, 1, 0}, {0, 0, 1}}));
    const auto with_twin = make_subcode(rep, from_ints(f3, {{1, 1, 1}}));
    CHECK_FALSE(is_i_minimal(rep, with_twin));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto code = rm.code;
        const int i = 1 + trial % 2;
        std::uniform_int_distribution<int> coin(0, 2);
        Codeword msg1(code.k()), msg2(code.k());
        for (int j = 0; j < code.k(); ++j) {
            msg1(j) = static_cast<Elem>(coin(rng) == 0 ? coin(rng) : 0);
            msg2(j) = static_cast<Elem>(coin(rng) == 0 ? coin(rng) : 0);
        }
        std::vector<Codeword> rows{code.encode(msg1)};
        if (i == 2) rows.push_back(code.encode(msg2));
        const Matrix basis = Matrix::from_rows(code.field_ptr(), rows, code.n());
        if (rank(basis) != i) continue;
        const auto d = make_subcode(code, basis);
        CHECK(is_i_minimal(code, d) == (shortened_dim(code, d.support) == i));
    }
}

TEST_CASE("greedy shrink") {
    const auto rm = build_code(3, 2, 2);
    const auto field = rm.code.field_ptr();
    const Codeword c = evaluate(min_weight_poly(field, 2, 2), rm.points);
    const Codeword shrunk = greedy_shrink_to_one_minimal(rm.code, c);
    CHECK(rank(Matrix::from_rows(field, {c, shrunk}, rm.n)) == 1);

    // 1 - (X_1 - w)^2 is supported on the line X_1 = w, so w = 0 and w = 2 give disjoint minimum words
    const Codeword a = evaluate(min_weight_poly(field, 2, 2, 1, {0}, {}), rm.points);
    const Codeword b = evaluate(min_weight_poly(field, 2, 2, 1, {2}, {}), rm.points);
    REQUIRE(weight(a) == 3);
    REQUIRE(weight(b) == 3);
    Codeword sum(rm.n);
    for (int j = 0; j < rm.n; ++j) sum(j) = field->add(a(j), b(j));
    CHECK(weight(sum) == 6);
    const Codeword inner = greedy_shrink_to_one_minimal(rm.code, sum);
    const auto s = support(inner);
    const auto sa = support(a);
    const auto sb = support(b);
    CHECK((std::includes(sa.begin(), sa.end(), s.begin(), s.end()) || std::includes(sb.begin(), sb.end(), s.begin(), s.end())));
    CHECK(is_i_minimal(rm.code, make_subcode(rm.code, Matrix::from_rows(field, {inner}, rm.n))));

    CHECK(kind_of([&] { (void)greedy_shrink_to_one_minimal(rm.code, Codeword::Zero(rm.n)); }) == ErrorKind::PreconditionViolated);

    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 25; ++trial) {
        Codeword msg(rm.k);
        for (int j = 0; j < rm.k; ++j) msg(j) = static_cast<Elem>(pick(rng));
        const Codeword w = rm.code.encode(msg);
        if (is_zero(w)) continue;
        const Codeword out = greedy_shrink_to_one_minimal(rm.code, w);
        CHECK(rm.code.contains(out));
        CHECK(shortened_dim(rm.code, support(w)) >= 1);
        CHECK(is_i_minimal(rm.code, make_subcode(rm.code, Matrix::from_rows(field, {out}, rm.n))));
    }
}

TEST_CASE("MDS and nondegeneracy") {
    CHECK(is_mds(build_code(2, 0, 3).code));
    CHECK(is_mds(build_code(3, 0, 2).code));
    CHECK_FALSE(is_mds(build_code(2, 1, 3).code));
    CHECK(is_mds(build_code(3, 3, 2).code));
    for (int q : {2, 3, 4})
        for (int m : {1, 2})
            for (int r = 0; r <= m * (q - 1); ++r) CHECK(is_nondegenerate(build_code(q, r, m).code));
}

TEST_CASE("column subset ranks") {
    std::mt19937_64 rng(3);
    for (int q : {2, 3, 4}) {
        const auto field = make_field(q);
        const Matrix h = random_matrix(field, 4, 9, rng);
        const auto ranks = column_subset_ranks(h);
        REQUIRE(ranks.size() == 512);
        for (std::uint32_t mask = 0; mask < 512; mask += 7) {
            std::vector<int> cols;
            for (int j = 0; j < 9; ++j)
                if (mask >> j & 1U) cols.push_back(j);
            CHECK(ranks[mask] == rank(submatrix_columns(h, cols)));
        }
    }
}
