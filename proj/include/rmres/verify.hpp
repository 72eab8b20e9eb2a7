#ifndef RMRES_VERIFY_HPP
#define RMRES_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rmres/rm.hpp"
#include "rmres/srres.hpp"

namespace rmres {

/// Purity holds iff m = 1 or r <= 1 or r >= m(q-1) - 1. Throws ParameterOutOfRange.
bool theorem_predicate(int q, int m, int r);
/// MDS iff m = 1 or r = 0 or r >= m(q-1) - 1.
bool mds_predicate(int q, int m, int r);

/// Rows of the s = 1 branch handled by witness polynomials.
bool certificate_applies(int q, int m, int r);

struct BettiRun {
    BettiTable table;
    PurityVerdict verdict;
    bool oracle_checked = false;
};

/// Fast-path Betti table of RM_q(r, m), cross-checked against the homology
/// route when n <= guards.max_n_oracle (InternalMismatch on disagreement).
BettiRun betti_run(const RMCode& rm, const Guards& guards, int jobs = 1);
PurityVerdict purity_by_betti(int q, int m, int r, const Guards& guards = {}, int jobs = 1);

/// Self-contained evidence that RM_q(r, m) has a non-pure resolution: a
/// codeword c_Q heavier than d_1 whose support carries a 1-minimal subcode c'
/// that is still heavier than d_1.
struct NonPurityCertificate {
    int q = 0, m = 0, r = 0, t = 0, s = 0;
    int witness_case = 0;
    ExponentPoly witness_poly;
    Codeword c_q;
    std::vector<int> sigma;
    std::uint64_t d1 = 0;
    std::string d1_source;
    Codeword one_minimal_word;
    int one_minimal_weight = 0;
    int expected_weight = 0;
    /// dim of {c : supp(c) within sigma}; 1 means <c_Q> is itself 1-minimal.
    int sigma_shortened_dim = 0;
    bool weight_exceeds_d1 = false;
    bool one_minimal = false;
    bool one_minimal_exceeds_d1 = false;
    Matrix parity_check;
};

/// Throws PreconditionViolated outside the s = 1 branch and CertificateFailed if any claim fails.
NonPurityCertificate non_purity_certificate(int q, int m, int r, const Guards& guards = {});

struct CertificateCheck {
    bool ok = false;
    std::vector<std::string> reasons;
};

/// Re-derives every claim from the raw parameters; never throws.
CertificateCheck check_certificate(const NonPurityCertificate& cert, const Guards& guards = {});

nlohmann::json field_to_json(const Field& field);
nlohmann::json codeword_to_json(const Codeword& c);
nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json certificate_to_json(const NonPurityCertificate& cert);
NonPurityCertificate certificate_from_json(const nlohmann::json& j);

struct CorollaryRow {
    int q = 0, m = 0, r = 0, n = 0, k = 0;
    bool predicted = false;
    std::optional<bool> computed;  // brute-force MDS verdict
    std::optional<int> d;
    std::optional<std::vector<int>> ghw;          // r = 1, m >= 2 rows
    std::optional<bool> ghw_formula_holds;        // d_i = q^m - floor(q^{m-i})
    std::optional<bool> ghw_consecutive;
    std::string status;
    std::optional<bool> match;
};

CorollaryRow corollary_check(int q, int m, int r, const Guards& guards = {});
nlohmann::json corollary_to_json(const CorollaryRow& row);

enum class Method { Betti, Certificate, Both };

struct SweepConfig {
    std::vector<int> qs;
    std::vector<int> ms;
    std::optional<std::vector<int>> rs;  // all 0..m(q-1) when empty
    Method method = Method::Both;
    Guards guards;
    int jobs = 1;
};

struct SweepRow {
    int q = 0, m = 0, r = 0, n = 0;
    long long k = 0;
    std::uint64_t d = 0;
    bool pure_predicted = false;
    std::optional<bool> pure_computed;
    std::optional<BettiTable> betti;
    std::optional<PurityVerdict> purity;
    std::optional<std::vector<int>> ghw;
    std::optional<bool> herzog_kuhl_match;
    bool oracle_checked = false;
    std::optional<NonPurityCertificate> certificate;
    std::optional<CertificateCheck> certificate_check;
    std::string method;
    std::optional<bool> match;
    std::int64_t elapsed_ms = 0;
};

struct SweepReport {
    std::vector<SweepRow> rows;
};

SweepRow sweep_row(int q, int m, int r, Method method, const Guards& guards);
SweepReport sweep(const SweepConfig& config);

nlohmann::json guards_to_json(const Guards& guards);
nlohmann::json certificate_summary_json(const NonPurityCertificate& cert, const CertificateCheck& check);
nlohmann::json sweep_row_to_json(const SweepRow& row, bool timing = true);
std::string sweep_to_csv(const SweepReport& report);

}  // namespace rmres

#endif
