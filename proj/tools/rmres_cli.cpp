// Command-line front end for generalized Reed-Muller codes and their
// Stanley-Reisner resolutions. JSON is the stable output format.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rmres/error.hpp"
#include "rmres/verify.hpp"

using nlohmann::json;
using namespace rmres;

namespace {

enum Exit { kOk = 0, kBadParams = 2, kTooLarge = 3, kFailed = 4, kInternal = 5 };

struct Options {
    std::vector<int> q, m, r;
    bool r_all = false;
    std::string method = "both";
    std::string output = "json";
    int jobs = 1;
    std::string out;
    bool no_timing = false;
    Guards guards;
};

struct Result {
    json doc;
    std::string csv;
    std::string text;
    int code = kOk;
};

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPrimePower:
        case ErrorKind::ParameterOutOfRange:
        case ErrorKind::PreconditionViolated:
        case ErrorKind::InvalidWitnessParams:
        case ErrorKind::RankDeficientForms:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::IndexOutOfRange:
        case ErrorKind::DegenerateType:
            return kBadParams;
        case ErrorKind::TooLarge:
            return kTooLarge;
        case ErrorKind::InternalMismatch:
            return kInternal;
        default:
            return kFailed;
    }
}

struct Single {
    int q, m, r;
};

Single single(const Options& o) {
    if (o.q.size() != 1 || o.m.size() != 1 || o.r.size() != 1 || o.r_all)
        throw Error(ErrorKind::ParameterOutOfRange, "this command takes exactly one --q, --m and --r");
    if (prime_power_split(o.q[0]).first == 0)
        throw Error(ErrorKind::NotPrimePower, "q = " + std::to_string(o.q[0]) + " is not a prime power");
    check_rm_params(o.q[0], o.r[0], o.m[0]);
    return {o.q[0], o.m[0], o.r[0]};
}

json params_json(int q, int m, int r) { return {{"q", q}, {"m", m}, {"r", r}}; }

std::string betti_text(const BettiTable& table) {
    std::ostringstream out;
    for (const auto& [key, v] : table.entries()) out << "beta_{" << key.first << "," << key.second << "} = " << v << '\n';
    return out.str();
}

Result cmd_dim(const Options& o) {
    const auto [q, m, r] = single(o);
    const BigInt ak = dim_ak(q, r, m);
    const BigInt gs = dim_gs(q, r, m);
    const auto monomials = monomial_basis(q, r, m).size();
    const RMCode rm = build_code(q, r, m);
    const int rk = rank(rm.code.generator());
    const bool agree = ak == gs && gs == BigInt(monomials) && BigInt(rk) == gs;
    Result res;
    res.doc["params"] = params_json(q, m, r);
    res.doc["dim"] = {{"dim_ak", ak.convert_to<long long>()},
                      {"dim_gs", gs.convert_to<long long>()},
                      {"monomials", monomials},
                      {"rank_G", rk}};
    res.doc["code"] = {{"n", rm.n}, {"k", rk}, {"d", min_distance_formula(q, r, m)}};
    res.doc["agree"] = agree;
    std::ostringstream text;
    text << "RM_" << q << "(" << r << "," << m << "): dim_ak=" << ak << " dim_gs=" << gs << " monomials=" << monomials
         << " rank(G)=" << rk << (agree ? " (agree)" : " (DISAGREE)") << '\n';
    res.text = text.str();
    res.csv = "q,m,r,dim_ak,dim_gs,monomials,rank_G\n" + std::to_string(q) + "," + std::to_string(m) + "," + std::to_string(r) +
              "," + ak.str() + "," + gs.str() + "," + std::to_string(monomials) + "," + std::to_string(rk) + "\n";
    res.code = agree ? kOk : kFailed;
    return res;
}

Result cmd_distance(const Options& o) {
    const auto [q, m, r] = single(o);
    const RMCode rm = build_code(q, r, m);
    const auto formula = min_distance_formula(q, r, m);
    const int brute = min_weight_bruteforce(rm.code, o.guards.max_enum);
    const auto [t, s] = ts_split(q, r);
    Result res;
    res.doc["params"] = params_json(q, m, r);
    res.doc["code"] = {{"n", rm.n}, {"k", rm.k}, {"d", brute}};
    res.doc["split"] = {{"t", t}, {"s", s}};
    res.doc["d_formula"] = formula;
    res.doc["d_bruteforce"] = brute;
    res.doc["agree"] = static_cast<std::uint64_t>(brute) == formula;
    res.text = "d = " + std::to_string(brute) + " (formula " + std::to_string(formula) + ")\n";
    res.csv = "q,m,r,n,k,d_formula,d_bruteforce\n" + std::to_string(q) + "," + std::to_string(m) + "," + std::to_string(r) + "," +
              std::to_string(rm.n) + "," + std::to_string(rm.k) + "," + std::to_string(formula) + "," + std::to_string(brute) + "\n";
    res.code = res.doc["agree"].get<bool>() ? kOk : kFailed;
    return res;
}

Result cmd_ghw(const Options& o) {
    const auto [q, m, r] = single(o);
    const RMCode rm = build_code(q, r, m);
    const auto profile = ghw_profile(rm.code, o.guards.max_n_ghw);
    Result res;
    res.doc["params"] = params_json(q, m, r);
    res.doc["code"] = {{"n", rm.n}, {"k", rm.k}, {"d", profile.front()}};
    res.doc["ghw"] = profile;
    std::ostringstream text, csv;
    csv << "i,d_i\n";
    for (std::size_t i = 0; i < profile.size(); ++i) {
        text << "d_" << i + 1 << " = " << profile[i] << '\n';
        csv << i + 1 << ',' << profile[i] << '\n';
    }
    res.text = text.str();
    res.csv = csv.str();
    return res;
}

Result cmd_betti(const Options& o, bool with_prediction) {
    const auto [q, m, r] = single(o);
    const RMCode rm = build_code(q, r, m);
    if (rm.n > o.guards.max_n_betti)
        throw Error(ErrorKind::TooLarge, "n = " + std::to_string(rm.n) + " exceeds the Betti guard " + std::to_string(o.guards.max_n_betti));
    const auto run = betti_run(rm, o.guards, o.jobs);
    Result res;
    res.doc["params"] = params_json(q, m, r);
    res.doc["code"] = {{"n", rm.n}, {"k", rm.k}, {"d", min_distance_formula(q, r, m)}};
    res.doc["ghw"] = ghw_from_betti(run.table);
    res.doc["betti"] = betti_to_json(run.table);
    res.doc["purity"] = purity_to_json(run.verdict);
    res.doc["purity"]["oracle_checked"] = run.oracle_checked;
    res.csv = betti_to_csv(run.table);
    res.text = betti_text(run.table) + (run.verdict.pure ? "pure\n" : "not pure\n");
    if (with_prediction) {
        const bool predicted = theorem_predicate(q, m, r);
        res.doc["prediction"] = {{"pure_predicted", predicted}};
        res.doc["match"] = predicted == run.verdict.pure;
        res.text += std::string("predicted ") + (predicted ? "pure" : "not pure") + "\n";
        res.code = predicted == run.verdict.pure ? kOk : kFailed;
    }
    return res;
}

Result cmd_certificate(const Options& o) {
    const auto [q, m, r] = single(o);
    const auto cert = non_purity_certificate(q, m, r, o.guards);
    const auto check = check_certificate(cert, o.guards);
    Result res;
    res.doc["params"] = params_json(q, m, r);
    res.doc["code"] = {{"n", cert.c_q.size()}, {"k", dim_gs(q, r, m).convert_to<long long>()}, {"d", cert.d1}};
    res.doc["certificate"] = certificate_to_json(cert);
    res.doc["certificate"]["check"] = {{"ok", check.ok}, {"reasons", check.reasons}};
    res.doc["prediction"] = {{"pure_predicted", theorem_predicate(q, m, r)}};
    res.doc["match"] = check.ok && !theorem_predicate(q, m, r);
    res.text = "wt(c_Q) = " + std::to_string(weight(cert.c_q)) + ", d_1 = " + std::to_string(cert.d1) +
               ", wt(c') = " + std::to_string(cert.one_minimal_weight) + ", check " + (check.ok ? "passed" : "FAILED") + "\n";
    res.csv = "q,m,r,wt_c_Q,d1,one_minimal_weight,sigma_shortened_dim,ok\n" + std::to_string(q) + "," + std::to_string(m) + "," +
              std::to_string(r) + "," + std::to_string(weight(cert.c_q)) + "," + std::to_string(cert.d1) + "," +
              std::to_string(cert.one_minimal_weight) + "," + std::to_string(cert.sigma_shortened_dim) + "," +
              (check.ok ? "true" : "false") + "\n";
    res.code = check.ok ? kOk : kFailed;
    return res;
}

std::optional<std::vector<int>> r_values(const Options& o) {
    if (o.r_all) return std::nullopt;
    if (o.r.empty()) throw Error(ErrorKind::ParameterOutOfRange, "give --r values or --r-all");
    return o.r;
}

Method parse_method(const std::string& s) {
    if (s == "betti") return Method::Betti;
    if (s == "certificate") return Method::Certificate;
    return Method::Both;
}

Result cmd_verify_theorem(const Options& o, bool timing) {
    SweepConfig config{o.q, o.m, r_values(o), parse_method(o.method), o.guards, o.jobs};
    if (config.qs.empty() || config.ms.empty()) throw Error(ErrorKind::ParameterOutOfRange, "ranges must be non-empty");
    const auto report = sweep(config);
    Result res;
    auto rows = json::array();
    int matched = 0, mismatched = 0, unknown = 0;
    std::ostringstream text;
    for (const auto& row : report.rows) {
        rows.push_back(sweep_row_to_json(row, timing));
        if (!row.match)
            ++unknown;
        else if (*row.match)
            ++matched;
        else
            ++mismatched;
        text << "q=" << row.q << " m=" << row.m << " r=" << row.r << " predicted=" << (row.pure_predicted ? "pure" : "not-pure")
             << " computed=" << (row.pure_computed ? (*row.pure_computed ? "pure" : "not-pure") : "-") << " method=" << row.method
             << " match=" << (row.match ? (*row.match ? "yes" : "NO") : "unknown") << '\n';
    }
    res.doc["rows"] = rows;
    res.doc["summary"] = {{"rows", report.rows.size()}, {"matched", matched}, {"mismatched", mismatched}, {"unknown", unknown}};
    res.doc["match"] = mismatched == 0 && unknown == 0;
    res.csv = sweep_to_csv(report);
    res.text = text.str();
    res.code = mismatched == 0 ? kOk : kFailed;
    return res;
}

Result cmd_verify_mds(const Options& o) {
    if (o.q.empty() || o.m.empty()) throw Error(ErrorKind::ParameterOutOfRange, "ranges must be non-empty");
    const auto rs = r_values(o);
    Result res;
    auto rows = json::array();
    std::ostringstream text, csv;
    csv << "q,m,r,n,k,d,mds_predicted,mds_computed,status,match\n";
    bool ok = true;
    for (int q : o.q) {
        for (int m : o.m) {
            if (prime_power_split(q).first == 0) throw Error(ErrorKind::NotPrimePower, "q = " + std::to_string(q) + " is not a prime power");
            std::vector<int> list;
            if (rs)
                list = *rs;
            else
                for (int r = 0; r <= m * (q - 1); ++r) list.push_back(r);
            for (int r : list) {
                const auto row = corollary_check(q, m, r, o.guards);
                rows.push_back(corollary_to_json(row));
                if ((row.match && !*row.match) || (row.ghw_formula_holds && !*row.ghw_formula_holds)) ok = false;
                text << "q=" << q << " m=" << m << " r=" << r << " predicted=" << row.predicted << " status=" << row.status
                     << " match=" << (row.match ? (*row.match ? "yes" : "NO") : "unknown") << '\n';
                csv << q << ',' << m << ',' << r << ',' << row.n << ',' << row.k << ',' << (row.d ? std::to_string(*row.d) : "")
                    << ',' << row.predicted << ',' << (row.computed ? std::to_string(*row.computed) : "") << ',' << row.status
                    << ',' << (row.match ? std::to_string(*row.match) : "") << '\n';
            }
        }
    }
    res.doc["rows"] = rows;
    res.doc["match"] = ok;
    res.text = text.str();
    res.csv = csv.str();
    res.code = ok ? kOk : kFailed;
    return res;
}

void emit(const Options& o, const std::string& content) {
    if (o.out.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + o.out);
    f << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Reed-Muller codes: dimensions, distances, Betti tables and purity"};
    app.require_subcommand(1);
    Options o;
    if (const char* env = std::getenv("RM_RESOLVE_GUARD_N")) {
        try {
            o.guards.max_n_betti = std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << R"({"error":{"kind":"ParameterOutOfRange","message":"RM_RESOLVE_GUARD_N is not an integer"}})" << '\n';
            return kBadParams;
        }
    }

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"dim", "dimension by both formulas, monomial count and rank(G)"},
        {"distance", "minimum distance by formula and by enumeration"},
        {"ghw", "generalized Hamming weight hierarchy"},
        {"betti", "graded Betti table of the Stanley-Reisner ring"},
        {"purity", "Betti-based purity verdict against the predicted one"},
        {"certificate", "non-purity certificate from a witness polynomial"},
        {"verify-theorem", "purity sweep over parameter ranges"},
        {"verify-mds", "MDS sweep over parameter ranges"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--q", o.q, "field size(s)")->required()->expected(1, -1);
        sub->add_option("--m", o.m, "number of variables")->required()->expected(1, -1);
        sub->add_option("--r", o.r, "degree(s)")->expected(1, -1);
        sub->add_flag("--r-all", o.r_all, "every r in 0..m(q-1)");
        sub->add_option("--method", o.method, "betti|certificate|both")
            ->check(CLI::IsMember({"betti", "certificate", "both"}));
        sub->add_option("--output", o.output, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--out", o.out, "write output to this file");
        sub->add_flag("--no-timing", o.no_timing, "omit timing fields");
        sub->add_option("--max-n-betti", o.guards.max_n_betti, "largest n for Betti tables")->check(CLI::PositiveNumber);
        sub->add_option("--max-enum", o.guards.max_enum, "largest q^k for enumeration")->check(CLI::PositiveNumber);
        sub->add_option("--max-subspaces", o.guards.max_subspaces, "largest subspace count")->check(CLI::PositiveNumber);
        sub->add_option("--max-n-ghw", o.guards.max_n_ghw, "largest n for weight hierarchies")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kBadParams;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const auto start = std::chrono::steady_clock::now();
    const bool timing = !o.no_timing;
    try {
        Result res;
        if (command == "dim")
            res = cmd_dim(o);
        else if (command == "distance")
            res = cmd_distance(o);
        else if (command == "ghw")
            res = cmd_ghw(o);
        else if (command == "betti")
            res = cmd_betti(o, false);
        else if (command == "purity")
            res = cmd_betti(o, true);
        else if (command == "certificate")
            res = cmd_certificate(o);
        else if (command == "verify-theorem")
            res = cmd_verify_theorem(o, timing);
        else
            res = cmd_verify_mds(o);

        res.doc["guards"] = guards_to_json(o.guards);
        if (timing)
            res.doc["timing_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        if (o.output == "json")
            emit(o, res.doc.dump(2) + "\n");
        else if (o.output == "csv")
            emit(o, res.csv);
        else
            emit(o, res.text);
        return res.code;
    } catch (const Error& e) {
        const json err = {{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
        std::cerr << err.dump() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"kind", "Failure"}, {"message", e.what()}}}}.dump() << '\n';
        return kFailed;
    }
}
