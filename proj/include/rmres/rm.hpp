#ifndef RMRES_RM_HPP
#define RMRES_RM_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rmres/code.hpp"

namespace rmres {

using BigInt = boost::multiprecision::cpp_int;

/// C(a, b) with C(a, b) = 0 whenever a < 0, b < 0 or a < b.
BigInt binomial(long long a, long long b);

using Exponent = std::vector<int>;

/**
 * Polynomial in F_q[X_1..X_m] stored as exponent vector -> nonzero coefficient,
 * kept reduced (every exponent < q) by X^q -> X, which preserves evaluations.
 */
class ExponentPoly {
public:
    ExponentPoly(FieldPtr field, int num_vars);

    static ExponentPoly constant(FieldPtr field, int num_vars, Elem c);
    /// X_{var+1} (variables are 0-based here).
    static ExponentPoly variable(FieldPtr field, int num_vars, int var);
    static ExponentPoly monomial(FieldPtr field, Exponent exponent, Elem c = 1);

    int num_vars() const noexcept { return m_; }
    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    const std::map<Exponent, Elem>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int total_degree() const noexcept;
    Elem coefficient(const Exponent& e) const;

    void add_term(Exponent e, Elem c);

    ExponentPoly operator+(const ExponentPoly& o) const;
    ExponentPoly operator-(const ExponentPoly& o) const;
    ExponentPoly operator*(const ExponentPoly& o) const;
    ExponentPoly scaled(Elem c) const;
    ExponentPoly pow(unsigned k) const;

    Elem eval(std::span<const Elem> point) const;

    bool operator==(const ExponentPoly& o) const { return m_ == o.m_ && *field_ == *o.field_ && terms_ == o.terms_; }

private:
    void check_compatible(const ExponentPoly& o) const;
    void reduce(Exponent& e) const;

    FieldPtr field_;
    int m_;
    std::map<Exponent, Elem> terms_;
};

/// All q^m points of F_q^m, lexicographic in element order with X_1 most significant.
class PointOrder {
public:
    PointOrder(FieldPtr field, int m);

    int m() const noexcept { return m_; }
    std::size_t size() const noexcept { return count_; }
    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }

    std::span<const Elem> point(std::size_t nu) const {
        return {coords_.data() + nu * static_cast<std::size_t>(m_), static_cast<std::size_t>(m_)};
    }
    std::size_t index_of(std::span<const Elem> point) const;

private:
    FieldPtr field_;
    int m_;
    std::size_t count_;
    std::vector<Elem> coords_;
};

/// Checks 0 <= r <= m(q-1), m >= 1; throws ParameterOutOfRange.
void check_rm_params(int q, int r, int m);

/// Exponent vectors of the monomial basis of V_q(r, m), lexicographic.
std::vector<Exponent> monomial_basis(int q, int r, int m);

/// Double-sum dimension formula (sum over degrees s and inclusion-exclusion index i).
BigInt dim_ak(int q, int r, int m);
/// Single inclusion-exclusion dimension formula.
BigInt dim_gs(int q, int r, int m);

/// sum_i (-1)^i C(m,i) C((m-i)q, m) == q^m.
bool curious_identity_check(int q, int m);

/// c_f = (f(P_1), ..., f(P_{q^m})). Throws SpecMismatch on field/variable mismatch.
Codeword evaluate(const ExponentPoly& f, const PointOrder& order);

struct RMCode {
    int q = 0;
    int m = 0;
    int r = 0;
    int n = 0;
    int k = 0;
    std::vector<Exponent> basis;
    PointOrder points;
    LinearCode code;
};

/// RM_q(r, m): G = evaluations of the monomial basis, H = null space of G.
RMCode build_code(int q, int r, int m);
RMCode build_code(const FieldPtr& field, int r, int m);

struct TsSplit {
    int t = 0;
    int s = 0;
};
/// r = t(q-1) + s with 0 <= s <= q-2.
TsSplit ts_split(int q, int r);

/// (q - s) q^{m-t-1}; equals 1 at r = m(q-1).
std::uint64_t min_distance_formula(int q, int r, int m);

/**
 * omega0 * prod_{i<=t} (1 - (X_i - omegas_i)^{q-1}) * prod_{j<=s} (X_{t+1} - primes_j).
 * Throws InvalidWitnessParams for omega0 == 0, repeated primes or wrong list lengths.
 */
ExponentPoly min_weight_poly(const FieldPtr& field, int r, int m, Elem omega0, const std::vector<Elem>& omegas,
                             const std::vector<Elem>& primes);
/// Defaults: omega0 = 1, omegas = 0, primes = first s elements in canonical order.
ExponentPoly min_weight_poly(const FieldPtr& field, int r, int m);

/**
 * Pointwise evaluation of f(L_1 + b_1, ..., L_l + b_l, X_{l+1}, ..., X_m) where
 * L_i are the rows of forms (l x m). Throws RankDeficientForms.
 */
Codeword substitute_linear_forms(const ExponentPoly& f, const Matrix& forms, const std::optional<std::vector<Elem>>& shifts,
                                 const PointOrder& order);

/// F_nu = prod_j (1 - (X_j - a_{nu j})^{q-1}) for every point, in point order.
std::vector<ExponentPoly> interpolation_basis(const FieldPtr& field, int m);

/**
 * RM_q(m(q-1)-1, m) equals the sum-zero code: row spaces compared, and the
 * explicit generators G_nu = F_nu - F_1 checked to lie in V_q(r, m) and to
 * evaluate to e_nu - e_1.
 */
bool sum_zero_code_equal(int q, int m);

/**
 * Case q > 3, s = 1, 1 < r < m(q-1)-1:
 *   Q = prod_{i<t} (X_i^{q-1} - 1) * prod_{j>=3} (X_t - w_j) * (X_{t+1} - w'_1)(X_{t+1} - w'_2)
 * with weight 2(q-2) q^{m-t-1}. `order` is an enumeration w_1..w_q of the field
 * (canonical order by default) and w'_1 != w'_2. Throws PreconditionViolated /
 * InvalidWitnessParams.
 */
ExponentPoly witness_poly_case1(const FieldPtr& field, int m, int r, const std::vector<Elem>& order, Elem prime1,
                                Elem prime2);
ExponentPoly witness_poly_case1(const FieldPtr& field, int m, int r);

/**
 * Case q = 3, s = 1, 1 <= t <= m-2:
 *   Q = prod_{i<t} (X_i^2 - 1) * (X_t - w_3)(X_{t+1} - w_3)(X_{t+2} - w_3)
 * with weight 8 * 3^{m-t-2}.
 */
ExponentPoly witness_poly_case2(const FieldPtr& field, int m, int r, const std::vector<Elem>& order);
ExponentPoly witness_poly_case2(int m, int r);

}  // namespace rmres

#endif
