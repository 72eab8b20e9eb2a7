#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rmres/verify.hpp"
#include "support.hpp"

using namespace rmres;
using testing::kind_of;

namespace {

bool has_reason(const CertificateCheck& check, const std::string& reason) {
    return std::find(check.reasons.begin(), check.reasons.end(), reason) != check.reasons.end();
}

std::vector<int> nonpure_rs(const SweepReport& report) {
    std::vector<int> out;
    for (const auto& row : report.rows)
        if (row.pure_computed && !*row.pure_computed) out.push_back(row.r);
    return out;
}

}  // namespace

TEST_CASE("theorem and MDS predicates") {
    CHECK_FALSE(theorem_predicate(2, 4, 2));
    CHECK_FALSE(theorem_predicate(4, 2, 4));
    CHECK(theorem_predicate(3, 2, 3));
    CHECK(theorem_predicate(5, 1, 3));
    CHECK(theorem_predicate(5, 3, 1));
    CHECK(kind_of([] { (void)theorem_predicate(3, 2, 5); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { (void)theorem_predicate(6, 2, 1); }) == ErrorKind::NotPrimePower);
    CHECK(mds_predicate(3, 1, 1));
    CHECK_FALSE(mds_predicate(2, 3, 1));
    CHECK(mds_predicate(2, 2, 1));
    CHECK(mds_predicate(7, 3, 0));
}

TEST_CASE("purity by Betti tables") {
    CHECK(purity_by_betti(2, 1, 1).pure);
    CHECK_FALSE(purity_by_betti(3, 2, 2).pure);
    CHECK_FALSE(purity_by_betti(2, 4, 2).pure);
    CHECK(purity_by_betti(2, 4, 1).pure);
    CHECK(kind_of([] { (void)purity_by_betti(3, 3, 1); }) == ErrorKind::TooLarge);
}

TEST_CASE("non-purity certificates") {
    struct Case {
        int q, m, r, weight, d1;
    };
    for (const auto& c : std::vector<Case>{{4, 2, 4, 4, 3}, {5, 2, 5, 6, 4}, {4, 3, 4, 16, 12}, {3, 3, 3, 8, 6}, {3, 4, 3, 24, 18}, {3, 4, 5, 8, 6}}) {
        CAPTURE(c.q);
        CAPTURE(c.m);
        CAPTURE(c.r);
        const auto cert = non_purity_certificate(c.q, c.m, c.r);
        CHECK(weight(cert.c_q) == c.weight);
        CHECK(cert.expected_weight == c.weight);
        CHECK(cert.d1 == static_cast<std::uint64_t>(c.d1));
        CHECK(cert.one_minimal_weight > c.d1);
        CHECK(cert.weight_exceeds_d1);
        CHECK(cert.one_minimal);
        CHECK(cert.one_minimal_exceeds_d1);
        CHECK(cert.witness_case == (c.q > 3 ? 1 : 2));
        const auto check = check_certificate(cert);
        CHECK(check.ok);
        CHECK(check.reasons.empty());
    }
    CHECK(non_purity_certificate(4, 2, 4).d1_source == "formula");
    Guards wide;
    wide.max_enum = 100'000'000;
    const auto enumerated = non_purity_certificate(4, 2, 4, wide);
    CHECK(enumerated.d1_source == "formula+enumeration");
    CHECK(check_certificate(enumerated, wide).ok);

    for (auto [q, m, r] : std::vector<std::tuple<int, int, int>>{{3, 3, 4}, {3, 4, 4}, {4, 2, 2}, {3, 2, 3}, {2, 4, 2}, {4, 2, 5}})
        CHECK(kind_of([&] { (void)non_purity_certificate(q, m, r); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("tampered certificates are rejected with reasons") {
    const auto good = non_purity_certificate(4, 2, 4);

    auto bad_d1 = good;
    bad_d1.d1 = 2;
    auto check = check_certificate(bad_d1);
    CHECK_FALSE(check.ok);
    CHECK(has_reason(check, "d1_mismatch"));

    auto bad_word = good;
    bad_word.one_minimal_word(0) = static_cast<Elem>((bad_word.one_minimal_word(0) + 1) % 4);
    check = check_certificate(bad_word);
    CHECK_FALSE(check.ok);
    CHECK(has_reason(check, "membership"));

    // alpha * c_Q is still a codeword with the same support, but not the evaluation of Q
    auto bad_cq = good;
    const auto f4 = make_field(4);
    for (Eigen::Index j = 0; j < bad_cq.c_q.size(); ++j) bad_cq.c_q(j) = f4->mul(2, bad_cq.c_q(j));
    check = check_certificate(bad_cq);
    CHECK_FALSE(check.ok);
    CHECK(has_reason(check, "witness_evaluation"));

    auto bad_claim = good;
    bad_claim.one_minimal = false;
    CHECK(has_reason(check_certificate(bad_claim), "claims"));

    auto bad_sigma = good;
    bad_sigma.sigma.pop_back();
    CHECK(has_reason(check_certificate(bad_sigma), "support"));

    auto bad_h = good;
    bad_h.parity_check(0, 0) = static_cast<Elem>((bad_h.parity_check(0, 0) + 1) % 4);
    CHECK(has_reason(check_certificate(bad_h), "parity_check_mismatch"));

    auto bad_params = good;
    bad_params.r = 2;
    CHECK(has_reason(check_certificate(bad_params), "params"));
}

TEST_CASE("certificate JSON round trip") {
    for (auto [q, m, r] : std::vector<std::tuple<int, int, int>>{{4, 2, 4}, {3, 3, 3}}) {
        const auto cert = non_purity_certificate(q, m, r);
        const auto j = certificate_to_json(cert);
        CHECK(j.at("field").at("modulus") == nlohmann::json(make_field(q)->modulus()));
        const auto back = certificate_from_json(nlohmann::json::parse(j.dump()));
        CHECK(check_certificate(back).ok);
        CHECK(certificate_to_json(back) == j);

        auto tampered = j;
        tampered["d1"] = 1;
        CHECK(has_reason(check_certificate(certificate_from_json(tampered)), "d1_mismatch"));
    }
    auto broken = certificate_to_json(non_purity_certificate(4, 2, 4));
    broken["field"]["modulus"] = {1, 0, 1};
    CHECK(kind_of([&] { (void)certificate_from_json(broken); }) == ErrorKind::SpecMismatch);
    broken.erase("field");
    CHECK(kind_of([&] { (void)certificate_from_json(broken); }) == ErrorKind::SpecMismatch);
}

TEST_CASE("MDS corollary rows") {
    const auto a = corollary_check(3, 1, 1);
    CHECK(a.predicted);
    REQUIRE(a.computed);
    CHECK(*a.computed);
    CHECK(*a.match);

    const auto b = corollary_check(2, 3, 1);
    CHECK_FALSE(b.predicted);
    CHECK_FALSE(*b.computed);
    CHECK(*b.d == 4);
    CHECK(*b.match);
    CHECK(*b.ghw_formula_holds);
    CHECK_FALSE(*b.ghw_consecutive);

    const auto c = corollary_check(2, 2, 1);
    CHECK(c.predicted);
    CHECK(*c.computed);
    CHECK(*c.ghw == std::vector<int>{2, 3, 4});
    CHECK(*c.ghw_consecutive);

    const auto big = corollary_check(9, 3, 12);
    CHECK(big.status == "skipped");
    CHECK_FALSE(big.match);
}

TEST_CASE("theorem sweeps") {
    SweepConfig q2;
    q2.qs = {2};
    q2.ms = {1, 2, 3, 4};
    const auto r2 = sweep(q2);
    CHECK(r2.rows.size() == 2 + 3 + 4 + 5);
    for (const auto& row : r2.rows) {
        CAPTURE(row.m);
        CAPTURE(row.r);
        REQUIRE(row.match);
        CHECK(*row.match);
        CHECK(row.pure_computed == (row.m != 4 || row.r != 2));
    }

    SweepConfig q3;
    q3.qs = {3};
    q3.ms = {2};
    const auto r3 = sweep(q3);
    CHECK(nonpure_rs(r3) == std::vector<int>{2});

    SweepConfig q4;
    q4.qs = {4};
    q4.ms = {2};
    const auto r4 = sweep(q4);
    REQUIRE(r4.rows.size() == 7);
    CHECK(nonpure_rs(r4) == std::vector<int>{2, 3, 4});
    CHECK(r4.rows[4].method == "betti+certificate");
    CHECK(r4.rows[4].certificate_check->ok);
    for (const auto& row : r4.rows) CHECK(*row.match);

    // Betti guard exceeded: the certificate alone decides
    SweepConfig big;
    big.qs = {4};
    big.ms = {3};
    big.rs = std::vector<int>{4, 2};
    const auto rb = sweep(big);
    REQUIRE(rb.rows.size() == 2);
    CHECK(rb.rows[0].r == 2);
    CHECK(rb.rows[0].method == "skipped");
    CHECK_FALSE(rb.rows[0].match);
    CHECK(rb.rows[1].method == "certificate-only");
    CHECK(*rb.rows[1].match);

    SweepConfig cert_only = q4;
    cert_only.method = Method::Certificate;
    const auto rc = sweep(cert_only);
    for (const auto& row : rc.rows) CHECK((row.r == 4 ? row.method == "certificate" : row.method == "skipped"));
}

TEST_CASE("sweep output does not depend on the worker count") {
    SweepConfig config;
    config.qs = {2, 3, 4};
    config.ms = {1, 2};
    auto dump = [](const SweepReport& report) {
        auto rows = nlohmann::json::array();
        for (const auto& row : report.rows) rows.push_back(sweep_row_to_json(row, false));
        return rows.dump();
    };
    config.jobs = 1;
    const auto one = dump(sweep(config));
    config.jobs = 4;
    const auto four = dump(sweep(config));
    CHECK(one == four);
    CHECK(sweep_to_csv(sweep(config)).rfind("q,m,r,n,k,d,pure_predicted,pure_computed,certificate_ok,method,match\n", 0) == 0);
}
