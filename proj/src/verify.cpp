#include "rmres/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "rmres/error.hpp"
#include "rmres/parallel.hpp"

namespace rmres {

namespace {

void check_verify_params(int q, int m, int r) {
    if (prime_power_split(q).first == 0) throw Error(ErrorKind::NotPrimePower, "q = " + std::to_string(q) + " is not a prime power");
    check_rm_params(q, r, m);
}

bool enumerable(int q, long long k, std::uint64_t max_enum) {
    return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k)) <= BigInt(max_enum);
}

int case_weight(int q, int m, int t) {
    long long w = q > 3 ? 2LL * (q - 2) : 8;
    const int e = q > 3 ? m - t - 1 : m - t - 2;
    for (int i = 0; i < e; ++i) w *= q;
    return static_cast<int>(w);
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

NonPurityCertificate build_certificate(int q, int m, int r, const Guards& guards) {
    check_verify_params(q, m, r);
    if (!certificate_applies(q, m, r))
        throw Error(ErrorKind::PreconditionViolated, "no witness polynomial for RM_" + std::to_string(q) + "(" +
                                                         std::to_string(r) + "," + std::to_string(m) + ")");
    const auto field = make_field(q);
    const RMCode rm = build_code(field, r, m);
    const auto [t, s] = ts_split(q, r);
    const int witness_case = q > 3 ? 1 : 2;
    ExponentPoly witness = witness_case == 1 ? witness_poly_case1(field, m, r) : witness_poly_case2(field, m, r, field->elements());
    Codeword c_q = evaluate(witness, rm.points);
    const std::uint64_t d1 = min_distance_formula(q, r, m);
    std::string d1_source = "formula";
    if (enumerable(q, rm.k, guards.max_enum)) {
        const int brute = min_weight_bruteforce(rm.code, guards.max_enum);
        if (static_cast<std::uint64_t>(brute) != d1)
            throw Error(ErrorKind::InternalMismatch, "minimum distance formula disagrees with enumeration");
        d1_source = "formula+enumeration";
    }
    Codeword shrunk = greedy_shrink_to_one_minimal(rm.code, c_q);
    auto sigma = support(c_q);
    const int sigma_dim = shortened_dim(rm.code, sigma);
    const int w_q = weight(c_q);
    const int w_1 = weight(shrunk);
    const bool one_minimal = shortened_dim(rm.code, support(shrunk)) == 1;
    return NonPurityCertificate{
        .q = q,
        .m = m,
        .r = r,
        .t = t,
        .s = s,
        .witness_case = witness_case,
        .witness_poly = std::move(witness),
        .c_q = std::move(c_q),
        .sigma = std::move(sigma),
        .d1 = d1,
        .d1_source = d1_source,
        .one_minimal_word = std::move(shrunk),
        .one_minimal_weight = w_1,
        .expected_weight = case_weight(q, m, t),
        .sigma_shortened_dim = sigma_dim,
        .weight_exceeds_d1 = static_cast<std::uint64_t>(w_q) > d1,
        .one_minimal = one_minimal,
        .one_minimal_exceeds_d1 = static_cast<std::uint64_t>(w_1) > d1,
        .parity_check = rm.code.parity_check(),
    };
}

}  // namespace

bool theorem_predicate(int q, int m, int r) {
    check_verify_params(q, m, r);
    return m == 1 || r <= 1 || r >= m * (q - 1) - 1;
}

bool mds_predicate(int q, int m, int r) {
    check_verify_params(q, m, r);
    return m == 1 || r == 0 || r >= m * (q - 1) - 1;
}

bool certificate_applies(int q, int m, int r) {
    check_verify_params(q, m, r);
    if (q < 3 || m < 2 || r <= 1 || r >= m * (q - 1) - 1) return false;
    const auto [t, s] = ts_split(q, r);
    if (s != 1) return false;
    return q > 3 || (t >= 1 && t <= m - 2);
}

BettiRun betti_run(const RMCode& rm, const Guards& guards, int jobs) {
    BettiRun run;
    run.table = betti_matroid_fastpath(rm.code, guards.max_n_betti);
    if (rm.n <= guards.max_n_oracle) {
        if (!(betti_hochster(rm.code, 2, guards.max_n_oracle, jobs) == run.table))
            throw Error(ErrorKind::InternalMismatch, "Betti fast path disagrees with the homology route for RM_" +
                                                         std::to_string(rm.q) + "(" + std::to_string(rm.r) + "," +
                                                         std::to_string(rm.m) + ")");
        run.oracle_checked = true;
    }
    run.verdict = purity_verdict(run.table);
    return run;
}

PurityVerdict purity_by_betti(int q, int m, int r, const Guards& guards, int jobs) {
    check_verify_params(q, m, r);
    const int n = static_cast<int>(boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(m)).convert_to<long long>());
    if (n > guards.max_n_betti)
        throw Error(ErrorKind::TooLarge, "n = " + std::to_string(n) + " exceeds the Betti guard " + std::to_string(guards.max_n_betti));
    return betti_run(build_code(q, r, m), guards, jobs).verdict;
}

NonPurityCertificate non_purity_certificate(int q, int m, int r, const Guards& guards) {
    auto cert = build_certificate(q, m, r, guards);
    const auto check = check_certificate(cert, guards);
    if (!check.ok) {
        std::string why;
        for (const auto& reason : check.reasons) why += (why.empty() ? "" : ", ") + reason;
        throw Error(ErrorKind::CertificateFailed, "certificate for RM_" + std::to_string(q) + "(" + std::to_string(r) + "," +
                                                      std::to_string(m) + ") failed: " + why);
    }
    return cert;
}

CertificateCheck check_certificate(const NonPurityCertificate& cert, const Guards& guards) {
    CertificateCheck out;
    auto fail = [&](const char* reason) { out.reasons.emplace_back(reason); };
    try {
        if (!certificate_applies(cert.q, cert.m, cert.r)) {
            fail("params");
            return out;
        }
        const auto [t, s] = ts_split(cert.q, cert.r);
        if (t != cert.t || s != cert.s || cert.witness_case != (cert.q > 3 ? 1 : 2)) fail("params");
        const auto field = make_field(cert.q);
        if (!(cert.witness_poly.field() == *field) || cert.witness_poly.num_vars() != cert.m) {
            fail("field");
            return out;
        }
        const RMCode rm = build_code(field, cert.r, cert.m);
        const auto n = static_cast<Eigen::Index>(rm.n);
        if (cert.c_q.cols() != n || cert.one_minimal_word.cols() != n) {
            fail("length");
            return out;
        }
        if (cert.parity_check.cols() != n || !(cert.parity_check.field() == *field) ||
            !row_space_equal(cert.parity_check, rm.code.parity_check()))
            fail("parity_check_mismatch");
        if (cert.witness_poly.total_degree() > cert.r) fail("witness_degree");
        if (!(evaluate(cert.witness_poly, rm.points) == cert.c_q)) fail("witness_evaluation");
        if (!rm.code.contains(cert.c_q) || !rm.code.contains(cert.one_minimal_word)) fail("membership");
        if (cert.sigma != support(cert.c_q)) fail("support");

        const std::uint64_t d1 = min_distance_formula(cert.q, cert.r, cert.m);
        bool d1_ok = cert.d1 == d1;
        if (enumerable(cert.q, rm.k, guards.max_enum))
            d1_ok = d1_ok && static_cast<std::uint64_t>(min_weight_bruteforce(rm.code, guards.max_enum)) == d1;
        if (!d1_ok) fail("d1_mismatch");

        const int w_q = weight(cert.c_q);
        if (w_q != cert.expected_weight || w_q != case_weight(cert.q, cert.m, t)) fail("weight_formula");
        if (static_cast<std::uint64_t>(w_q) <= d1) fail("weight_not_above_d1");

        const auto sigma1 = support(cert.one_minimal_word);
        if (sigma1.empty() || !subset_of(sigma1, support(cert.c_q))) fail("support_containment");
        const int w_1 = weight(cert.one_minimal_word);
        if (w_1 != cert.one_minimal_weight) fail("one_minimal_weight");
        if (sigma1.empty() || shortened_dim(rm.code, sigma1) != 1) fail("not_one_minimal");
        if (static_cast<std::uint64_t>(w_1) <= d1) fail("one_minimal_not_above_d1");
        if (shortened_dim(rm.code, support(cert.c_q)) != cert.sigma_shortened_dim) fail("sigma_probe");
        if (!cert.weight_exceeds_d1 || !cert.one_minimal || !cert.one_minimal_exceeds_d1) fail("claims");
    } catch (const std::exception& e) {
        out.reasons.emplace_back(std::string("exception: ") + e.what());
    }
    out.ok = out.reasons.empty();
    return out;
}

nlohmann::json field_to_json(const Field& field) {
    nlohmann::json j;
    j["q"] = field.size();
    j["p"] = field.characteristic();
    j["e"] = field.degree();
    j["modulus"] = field.modulus();
    auto elems = nlohmann::json::array();
    for (Elem a : field.elements()) {
        const auto c = field.coeffs(a);
        elems.push_back(std::vector<int>(c.begin(), c.end()));
    }
    j["elements"] = elems;
    return j;
}

nlohmann::json codeword_to_json(const Codeword& c) {
    std::vector<int> v(c.data(), c.data() + c.size());
    return v;
}

nlohmann::json matrix_to_json(const Matrix& m) {
    auto rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(codeword_to_json(m.row(i)));
    return rows;
}

namespace {

Codeword codeword_from_json(const nlohmann::json& j, const Field& field) {
    const auto v = j.get<std::vector<int>>();
    Codeword c(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= field.size()) throw Error(ErrorKind::ParameterOutOfRange, "codeword entry outside the field");
        c(static_cast<Eigen::Index>(i)) = static_cast<Elem>(v[i]);
    }
    return c;
}

}  // namespace

nlohmann::json certificate_to_json(const NonPurityCertificate& cert) {
    nlohmann::json j;
    j["q"] = cert.q;
    j["m"] = cert.m;
    j["r"] = cert.r;
    j["t"] = cert.t;
    j["s"] = cert.s;
    j["case"] = cert.witness_case;
    j["field"] = field_to_json(cert.witness_poly.field());
    auto terms = nlohmann::json::array();
    for (const auto& [e, c] : cert.witness_poly.terms()) terms.push_back({{"exponent", e}, {"coeff", c}});
    j["witness_poly"] = {{"num_vars", cert.witness_poly.num_vars()}, {"terms", terms}};
    j["c_Q"] = codeword_to_json(cert.c_q);
    j["wt_c_Q"] = weight(cert.c_q);
    j["expected_weight"] = cert.expected_weight;
    j["sigma"] = cert.sigma;
    j["sigma_shortened_dim"] = cert.sigma_shortened_dim;
    j["d1"] = cert.d1;
    j["d1_source"] = cert.d1_source;
    j["one_minimal_word"] = codeword_to_json(cert.one_minimal_word);
    j["one_minimal_support"] = support(cert.one_minimal_word);
    j["one_minimal_weight"] = cert.one_minimal_weight;
    j["claims"] = {{"wt_c_Q_gt_d1", cert.weight_exceeds_d1},
                   {"one_minimal", cert.one_minimal},
                   {"wt_one_minimal_gt_d1", cert.one_minimal_exceeds_d1}};
    j["parity_check"] = matrix_to_json(cert.parity_check);
    return j;
}

NonPurityCertificate certificate_from_json(const nlohmann::json& j) {
    try {
        const int q = j.at("q").get<int>();
        const auto field = make_field(q);
        if (j.at("field").at("modulus").get<std::vector<int>>() != field->modulus())
            throw Error(ErrorKind::SpecMismatch, "certificate uses a different modulus");
        const int m = j.at("m").get<int>();
        ExponentPoly poly(field, m);
        for (const auto& term : j.at("witness_poly").at("terms")) {
            const int c = term.at("coeff").get<int>();
            if (c <= 0 || c >= q) throw Error(ErrorKind::ParameterOutOfRange, "polynomial coefficient outside the field");
            auto e = term.at("exponent").get<Exponent>();
            if (static_cast<int>(e.size()) != m) throw Error(ErrorKind::DimensionMismatch, "exponent length differs from m");
            poly.add_term(std::move(e), static_cast<Elem>(c));
        }
        const auto& claims = j.at("claims");
        const auto h_rows = j.at("parity_check");
        std::vector<Codeword> rows;
        for (const auto& row : h_rows) rows.push_back(codeword_from_json(row, *field));
        const auto n_cols = static_cast<Eigen::Index>(j.at("c_Q").size());
        return NonPurityCertificate{
            .q = q,
            .m = m,
            .r = j.at("r").get<int>(),
            .t = j.at("t").get<int>(),
            .s = j.at("s").get<int>(),
            .witness_case = j.at("case").get<int>(),
            .witness_poly = std::move(poly),
            .c_q = codeword_from_json(j.at("c_Q"), *field),
            .sigma = j.at("sigma").get<std::vector<int>>(),
            .d1 = j.at("d1").get<std::uint64_t>(),
            .d1_source = j.at("d1_source").get<std::string>(),
            .one_minimal_word = codeword_from_json(j.at("one_minimal_word"), *field),
            .one_minimal_weight = j.at("one_minimal_weight").get<int>(),
            .expected_weight = j.at("expected_weight").get<int>(),
            .sigma_shortened_dim = j.at("sigma_shortened_dim").get<int>(),
            .weight_exceeds_d1 = claims.at("wt_c_Q_gt_d1").get<bool>(),
            .one_minimal = claims.at("one_minimal").get<bool>(),
            .one_minimal_exceeds_d1 = claims.at("wt_one_minimal_gt_d1").get<bool>(),
            .parity_check = Matrix::from_rows(field, rows, n_cols),
        };
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::SpecMismatch, std::string("malformed certificate: ") + e.what());
    }
}

CorollaryRow corollary_check(int q, int m, int r, const Guards& guards) {
    CorollaryRow row;
    row.q = q;
    row.m = m;
    row.r = r;
    row.predicted = mds_predicate(q, m, r);
    row.n = static_cast<int>(boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(m)).convert_to<long long>());
    row.k = dim_gs(q, r, m).convert_to<int>();
    const bool brute = enumerable(q, row.k, guards.max_enum);
    const bool want_ghw = r == 1 && m >= 2 && row.n <= guards.max_n_ghw;
    if (!brute && !want_ghw) {
        row.status = "skipped";
        return row;
    }
    const RMCode rm = build_code(q, r, m);
    if (brute) {
        row.d = min_weight_bruteforce(rm.code, guards.max_enum);
        row.computed = *row.d == row.n - row.k + 1;
        row.match = *row.computed == row.predicted;
        if (static_cast<std::uint64_t>(*row.d) != min_distance_formula(q, r, m))
            throw Error(ErrorKind::InternalMismatch, "minimum distance formula disagrees with enumeration");
    }
    if (want_ghw) {
        row.ghw = ghw_profile(rm.code, guards.max_n_ghw);
        bool formula = static_cast<int>(row.ghw->size()) == m + 1;
        bool consecutive = true;
        for (int i = 1; formula && i <= m + 1; ++i) {
            const long long tail = i <= m ? boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(m - i)).convert_to<long long>() : 0;
            formula = (*row.ghw)[i - 1] == row.n - tail;
        }
        for (std::size_t i = 1; i < row.ghw->size(); ++i) consecutive = consecutive && (*row.ghw)[i] == (*row.ghw)[i - 1] + 1;
        row.ghw_formula_holds = formula;
        row.ghw_consecutive = consecutive;
    }
    row.status = brute ? "enumerated" : "ghw-only";
    return row;
}

nlohmann::json corollary_to_json(const CorollaryRow& row) {
    nlohmann::json j;
    j["params"] = {{"q", row.q}, {"m", row.m}, {"r", row.r}};
    j["code"] = {{"n", row.n}, {"k", row.k}, {"d", row.d ? nlohmann::json(*row.d) : nlohmann::json(nullptr)}};
    j["mds_predicted"] = row.predicted;
    j["mds_computed"] = row.computed ? nlohmann::json(*row.computed) : nlohmann::json(nullptr);
    j["ghw"] = row.ghw ? nlohmann::json(*row.ghw) : nlohmann::json(nullptr);
    j["ghw_formula_holds"] = row.ghw_formula_holds ? nlohmann::json(*row.ghw_formula_holds) : nlohmann::json(nullptr);
    j["ghw_consecutive"] = row.ghw_consecutive ? nlohmann::json(*row.ghw_consecutive) : nlohmann::json(nullptr);
    j["status"] = row.status;
    j["match"] = row.match ? nlohmann::json(*row.match) : nlohmann::json(nullptr);
    return j;
}

SweepRow sweep_row(int q, int m, int r, Method method, const Guards& guards) {
    const auto start = std::chrono::steady_clock::now();
    SweepRow row;
    row.q = q;
    row.m = m;
    row.r = r;
    row.pure_predicted = theorem_predicate(q, m, r);
    row.n = static_cast<int>(boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(m)).convert_to<long long>());
    row.k = dim_gs(q, r, m).convert_to<long long>();
    row.d = min_distance_formula(q, r, m);

    std::vector<bool> agreements;
    const bool do_betti = method != Method::Certificate && row.n <= guards.max_n_betti;
    const bool do_cert = method != Method::Betti && certificate_applies(q, m, r);
    std::optional<RMCode> rm;
    if (do_betti) {
        rm.emplace(build_code(q, r, m));
        auto run = betti_run(*rm, guards, 1);
        row.oracle_checked = run.oracle_checked;
        if (run.table.max_index() != rm->k)
            throw Error(ErrorKind::InternalMismatch, "projective dimension differs from k");
        row.ghw = ghw_from_betti(run.table);
        if (rm->n <= guards.max_n_ghw && ghw_profile(rm->code, guards.max_n_ghw) != *row.ghw)
            throw Error(ErrorKind::InternalMismatch, "generalized Hamming weights disagree with the Betti table");
        if (run.verdict.pure) {
            const auto predicted = herzog_kuhl_predicted(run.verdict.type);
            bool ok = true;
            for (std::size_t i = 0; i < predicted.size(); ++i)
                ok = ok && predicted[i] == Rational(run.table.at(static_cast<int>(i + 1), run.verdict.type[i + 1]));
            row.herzog_kuhl_match = ok;
            if (!ok) agreements.push_back(false);
        }
        row.pure_computed = run.verdict.pure;
        row.purity = std::move(run.verdict);
        row.betti = std::move(run.table);
        agreements.push_back(*row.pure_computed == row.pure_predicted);
    }
    if (do_cert) {
        auto cert = build_certificate(q, m, r, guards);
        auto check = check_certificate(cert, guards);
        agreements.push_back(check.ok && !row.pure_predicted);
        if (check.ok && !row.pure_computed) row.pure_computed = false;
        row.certificate = std::move(cert);
        row.certificate_check = std::move(check);
    }
    if (do_betti)
        row.method = do_cert ? "betti+certificate" : "betti";
    else if (do_cert)
        row.method = method == Method::Both ? "certificate-only" : "certificate";
    else
        row.method = "skipped";
    if (!agreements.empty())
        row.match = std::all_of(agreements.begin(), agreements.end(), [](bool b) { return b; });
    row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return row;
}

SweepReport sweep(const SweepConfig& config) {
    std::vector<std::tuple<int, int, int>> params;
    auto qs = config.qs;
    auto ms = config.ms;
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    for (int q : qs) {
        for (int m : ms) {
            if (config.rs) {
                auto rs = *config.rs;
                std::sort(rs.begin(), rs.end());
                rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
                for (int r : rs) {
                    check_verify_params(q, m, r);
                    params.emplace_back(q, m, r);
                }
            } else {
                check_verify_params(q, m, 0);
                for (int r = 0; r <= m * (q - 1); ++r) params.emplace_back(q, m, r);
            }
        }
    }
    SweepReport report;
    report.rows.resize(params.size());
    parallel_for(params.size(), config.jobs, [&](std::size_t, std::size_t i) {
        const auto [q, m, r] = params[i];
        report.rows[i] = sweep_row(q, m, r, config.method, config.guards);
    });
    return report;
}

nlohmann::json guards_to_json(const Guards& guards) {
    return {{"max_enum", guards.max_enum},
            {"max_n_ghw", guards.max_n_ghw},
            {"max_subspaces", guards.max_subspaces},
            {"max_n_betti", guards.max_n_betti},
            {"max_n_oracle", guards.max_n_oracle}};
}

nlohmann::json certificate_summary_json(const NonPurityCertificate& cert, const CertificateCheck& check) {
    nlohmann::json j;
    j["case"] = cert.witness_case;
    j["t"] = cert.t;
    j["s"] = cert.s;
    j["wt_c_Q"] = weight(cert.c_q);
    j["expected_weight"] = cert.expected_weight;
    j["d1"] = cert.d1;
    j["d1_source"] = cert.d1_source;
    j["sigma_shortened_dim"] = cert.sigma_shortened_dim;
    j["one_minimal_support"] = support(cert.one_minimal_word);
    j["one_minimal_weight"] = cert.one_minimal_weight;
    j["check"] = {{"ok", check.ok}, {"reasons", check.reasons}};
    return j;
}

nlohmann::json sweep_row_to_json(const SweepRow& row, bool timing) {
    nlohmann::json j;
    j["params"] = {{"q", row.q}, {"m", row.m}, {"r", row.r}};
    j["code"] = {{"n", row.n}, {"k", row.k}, {"d", row.d}};
    j["ghw"] = row.ghw ? nlohmann::json(*row.ghw) : nlohmann::json(nullptr);
    j["betti"] = row.betti ? betti_to_json(*row.betti) : nlohmann::json(nullptr);
    j["purity"] = row.purity ? purity_to_json(*row.purity) : nlohmann::json(nullptr);
    if (row.purity) {
        j["purity"]["herzog_kuhl_match"] = row.herzog_kuhl_match ? nlohmann::json(*row.herzog_kuhl_match) : nlohmann::json(nullptr);
        j["purity"]["oracle_checked"] = row.oracle_checked;
    }
    j["certificate"] = row.certificate ? certificate_summary_json(*row.certificate, *row.certificate_check) : nlohmann::json(nullptr);
    j["prediction"] = {{"pure_predicted", row.pure_predicted}};
    j["pure_computed"] = row.pure_computed ? nlohmann::json(*row.pure_computed) : nlohmann::json(nullptr);
    j["method"] = row.method;
    j["match"] = row.match ? nlohmann::json(*row.match) : nlohmann::json(nullptr);
    if (timing) j["timing_ms"] = row.elapsed_ms;
    return j;
}

std::string sweep_to_csv(const SweepReport& report) {
    auto opt = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; };
    std::ostringstream out;
    out << "q,m,r,n,k,d,pure_predicted,pure_computed,certificate_ok,method,match\n";
    for (const auto& row : report.rows) {
        std::optional<bool> cert_ok;
        if (row.certificate_check) cert_ok = row.certificate_check->ok;
        out << row.q << ',' << row.m << ',' << row.r << ',' << row.n << ',' << row.k << ',' << row.d << ','
            << (row.pure_predicted ? "true" : "false") << ',' << opt(row.pure_computed) << ',' << opt(cert_ok) << ','
            << row.method << ',' << opt(row.match) << '\n';
    }
    return out.str();
}

}  // namespace rmres
