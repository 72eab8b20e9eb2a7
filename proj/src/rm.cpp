#include "rmres/rm.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rmres/error.hpp"

namespace rmres {

BigInt binomial(long long a, long long b) {
    if (a < 0 || b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    BigInt result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

// ExponentPoly --------------------------------------------------------------

ExponentPoly::ExponentPoly(FieldPtr field, int num_vars) : field_(std::move(field)), m_(num_vars) {
    if (m_ < 0) throw Error(ErrorKind::ParameterOutOfRange, "negative variable count");
}

ExponentPoly ExponentPoly::constant(FieldPtr field, int num_vars, Elem c) {
    ExponentPoly p(std::move(field), num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
}

ExponentPoly ExponentPoly::variable(FieldPtr field, int num_vars, int var) {
    if (var < 0 || var >= num_vars) throw Error(ErrorKind::IndexOutOfRange, "variable " + std::to_string(var));
    Exponent e(num_vars, 0);
    e[var] = 1;
    ExponentPoly p(std::move(field), num_vars);
    p.add_term(std::move(e), 1);
    return p;
}

ExponentPoly ExponentPoly::monomial(FieldPtr field, Exponent exponent, Elem c) {
    ExponentPoly p(std::move(field), static_cast<int>(exponent.size()));
    p.add_term(std::move(exponent), c);
    return p;
}

int ExponentPoly::total_degree() const noexcept {
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int v : e) d += v;
        best = std::max(best, d);
    }
    return best;
}

Elem ExponentPoly::coefficient(const Exponent& e) const {
    Exponent key = e;
    reduce(key);
    const auto it = terms_.find(key);
    return it == terms_.end() ? Elem{0} : it->second;
}

void ExponentPoly::reduce(Exponent& e) const {
    const int q = field_->size();
    for (int& v : e) {
        if (v < 0) throw Error(ErrorKind::ParameterOutOfRange, "negative exponent");
        if (v >= q) v = (v - 1) % (q - 1) + 1;
    }
}

void ExponentPoly::add_term(Exponent e, Elem c) {
    if (static_cast<int>(e.size()) != m_) throw Error(ErrorKind::SpecMismatch, "exponent length differs from variable count");
    if (c >= field_->size()) throw Error(ErrorKind::SpecMismatch, "coefficient outside field");
    if (c == 0) return;
    reduce(e);
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
        it->second = field_->add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

void ExponentPoly::check_compatible(const ExponentPoly& o) const {
    if (m_ != o.m_ || !(*field_ == *o.field_)) throw Error(ErrorKind::SpecMismatch, "polynomials over different rings");
}

ExponentPoly ExponentPoly::operator+(const ExponentPoly& o) const {
    check_compatible(o);
    ExponentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

ExponentPoly ExponentPoly::operator-(const ExponentPoly& o) const { return *this + o.scaled(field_->neg(1)); }

ExponentPoly ExponentPoly::operator*(const ExponentPoly& o) const {
    check_compatible(o);
    ExponentPoly out(field_, m_);
    Exponent e(m_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int j = 0; j < m_; ++j) e[j] = ea[j] + eb[j];
            out.add_term(e, field_->mul(ca, cb));
        }
    }
    return out;
}

ExponentPoly ExponentPoly::scaled(Elem c) const {
    ExponentPoly out(field_, m_);
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, field_->mul(v, c));
    return out;
}

ExponentPoly ExponentPoly::pow(unsigned k) const {
    ExponentPoly result = constant(field_, m_, 1);
    ExponentPoly base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

Elem ExponentPoly::eval(std::span<const Elem> point) const {
    if (static_cast<int>(point.size()) != m_) throw Error(ErrorKind::SpecMismatch, "point has wrong dimension");
    const Field& f = *field_;
    Elem acc = 0;
    for (const auto& [e, c] : terms_) {
        Elem term = c;
        for (int j = 0; j < m_ && term != 0; ++j)
            if (e[j] != 0) term = f.mul(term, f.pow(point[j], static_cast<std::uint64_t>(e[j])));
        acc = f.add(acc, term);
    }
    return acc;
}

// PointOrder ----------------------------------------------------------------

PointOrder::PointOrder(FieldPtr field, int m) : field_(std::move(field)), m_(m), count_(1) {
    if (m < 1) throw Error(ErrorKind::ParameterOutOfRange, "m must be at least 1");
    const std::size_t q = field_->size();
    for (int j = 0; j < m; ++j) {
        if (count_ > (std::size_t{1} << 26) / q) throw Error(ErrorKind::TooLarge, "q^m too large for a point table");
        count_ *= q;
    }
    coords_.resize(count_ * m);
    for (std::size_t nu = 0; nu < count_; ++nu) {
        std::size_t x = nu;
        for (int j = m - 1; j >= 0; --j) {
            coords_[nu * m + j] = static_cast<Elem>(x % q);
            x /= q;
        }
    }
}

std::size_t PointOrder::index_of(std::span<const Elem> point) const {
    if (static_cast<int>(point.size()) != m_) throw Error(ErrorKind::SpecMismatch, "point has wrong dimension");
    std::size_t nu = 0;
    for (Elem a : point) nu = nu * field_->size() + a;
    return nu;
}

// Dimensions ----------------------------------------------------------------

void check_rm_params(int q, int r, int m) {
    if (q < 2 || m < 1 || r < 0 || static_cast<long long>(r) > static_cast<long long>(m) * (q - 1))
        throw Error(ErrorKind::ParameterOutOfRange,
                    "need m >= 1 and 0 <= r <= m(q-1); got q=" + std::to_string(q) + " m=" + std::to_string(m) +
                        " r=" + std::to_string(r));
}

std::vector<Exponent> monomial_basis(int q, int r, int m) {
    check_rm_params(q, r, m);
    // Walk E = {v : sum v <= r} lexicographically and drop the members of E_1 u ... u E_m
    // (some v_j >= q). Entries above min(r, q-1) only ever land in some E_j, so the
    // odometer skips them wholesale.
    std::vector<Exponent> out;
    Exponent v(m, 0);
    const int cap = std::min(r, q - 1);
    int sum = 0;
    for (;;) {
        if (sum <= r) out.push_back(v);
        int j = m - 1;
        for (; j >= 0; --j) {
            if (v[j] < cap && sum < r) {
                ++v[j];
                ++sum;
                break;
            }
            sum -= v[j];
            v[j] = 0;
        }
        if (j < 0) break;
    }
    return out;
}

BigInt dim_ak(int q, int r, int m) {
    check_rm_params(q, r, m);
    BigInt total = 0;
    for (long long s = 0; s <= r; ++s) {
        for (long long i = 0; i <= m; ++i) {
            const BigInt term = binomial(m, i) * binomial(s - i * q + m - 1, s - i * q);
            if (i % 2 == 0)
                total += term;
            else
                total -= term;
        }
    }
    return total;
}

BigInt dim_gs(int q, int r, int m) {
    check_rm_params(q, r, m);
    BigInt total = 0;
    for (long long i = 0; i <= m; ++i) {
        const BigInt term = binomial(m, i) * binomial(static_cast<long long>(m) + r - i * q, m);
        if (i % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

bool curious_identity_check(int q, int m) {
    if (q < 2 || m < 1) throw Error(ErrorKind::ParameterOutOfRange, "curious identity needs q >= 2, m >= 1");
    BigInt total = 0;
    for (long long i = 0; i <= m; ++i) {
        const BigInt term = binomial(m, i) * binomial((m - i) * static_cast<long long>(q), m);
        if (i % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total == boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(m));
}

// Evaluation ----------------------------------------------------------------

Codeword evaluate(const ExponentPoly& f, const PointOrder& order) {
    if (f.num_vars() != order.m() || !(f.field() == order.field()))
        throw Error(ErrorKind::SpecMismatch, "polynomial and point order disagree on field or variable count");
    const Field& fld = f.field();
    const int q = fld.size();
    std::vector<Elem> powers(static_cast<std::size_t>(q) * q);
    for (int x = 0; x < q; ++x)
        for (int e = 0; e < q; ++e) powers[x * q + e] = fld.pow(static_cast<Elem>(x), static_cast<std::uint64_t>(e));
    const int m = order.m();
    Codeword out = Codeword::Zero(static_cast<Eigen::Index>(order.size()));
    for (std::size_t nu = 0; nu < order.size(); ++nu) {
        const auto pt = order.point(nu);
        Elem acc = 0;
        for (const auto& [e, c] : f.terms()) {
            Elem term = c;
            for (int j = 0; j < m && term != 0; ++j) term = fld.mul(term, powers[pt[j] * q + e[j]]);
            acc = fld.add(acc, term);
        }
        out[static_cast<Eigen::Index>(nu)] = acc;
    }
    return out;
}

RMCode build_code(int q, int r, int m) {
    check_rm_params(q, r, m);
    return build_code(make_field(q), r, m);
}

RMCode build_code(const FieldPtr& field, int r, int m) {
    const int q = field->size();
    check_rm_params(q, r, m);
    PointOrder points(field, m);
    auto basis = monomial_basis(q, r, m);
    const auto n = static_cast<Eigen::Index>(points.size());
    Matrix g(field, static_cast<Eigen::Index>(basis.size()), n);
    std::vector<Elem> powers(static_cast<std::size_t>(q) * q);
    for (int x = 0; x < q; ++x)
        for (int e = 0; e < q; ++e) powers[x * q + e] = field->pow(static_cast<Elem>(x), static_cast<std::uint64_t>(e));
    for (std::size_t b = 0; b < basis.size(); ++b) {
        for (Eigen::Index nu = 0; nu < n; ++nu) {
            const auto pt = points.point(static_cast<std::size_t>(nu));
            Elem v = 1;
            for (int j = 0; j < m && v != 0; ++j) v = field->mul(v, powers[pt[j] * q + basis[b][j]]);
            g(static_cast<Eigen::Index>(b), nu) = v;
        }
    }
    LinearCode code = LinearCode::from_generator(g);
    if (code.k() != static_cast<int>(basis.size()))
        throw Error(ErrorKind::InternalMismatch, "evaluation map is not injective on the monomial basis");
    const int k = code.k();
    return RMCode{q, m, r, static_cast<int>(n), k, std::move(basis), std::move(points), std::move(code)};
}

TsSplit ts_split(int q, int r) {
    if (q < 2 || r < 0) throw Error(ErrorKind::ParameterOutOfRange, "ts_split needs q >= 2 and r >= 0");
    return {r / (q - 1), r % (q - 1)};
}

std::uint64_t min_distance_formula(int q, int r, int m) {
    check_rm_params(q, r, m);
    const auto [t, s] = ts_split(q, r);
    if (t == m) return 1;
    std::uint64_t d = static_cast<std::uint64_t>(q - s);
    for (int i = 0; i < m - t - 1; ++i) {
        if (d > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(q))
            throw Error(ErrorKind::ParameterOutOfRange, "minimum distance overflows 64 bits");
        d *= static_cast<std::uint64_t>(q);
    }
    return d;
}

// Constructions ---------------------------------------------------------------

namespace {

// X_var - c
ExponentPoly shifted_variable(const FieldPtr& field, int m, int var, Elem c) {
    return ExponentPoly::variable(field, m, var) - ExponentPoly::constant(field, m, c);
}

// 1 - (X_var - c)^{q-1}: indicator of X_var == c.
ExponentPoly indicator(const FieldPtr& field, int m, int var, Elem c) {
    const auto q = static_cast<unsigned>(field->size());
    return ExponentPoly::constant(field, m, 1) - shifted_variable(field, m, var, c).pow(q - 1);
}

void check_elements(const Field& field, const std::vector<Elem>& xs) {
    for (Elem x : xs)
        if (x >= field.size()) throw Error(ErrorKind::InvalidWitnessParams, "constant outside the field");
}

bool is_enumeration(const Field& field, const std::vector<Elem>& order) {
    if (static_cast<int>(order.size()) != field.size()) return false;
    std::set<Elem> seen(order.begin(), order.end());
    return static_cast<int>(seen.size()) == field.size() && *seen.rbegin() < field.size();
}

}  // namespace

ExponentPoly min_weight_poly(const FieldPtr& field, int r, int m, Elem omega0, const std::vector<Elem>& omegas,
                             const std::vector<Elem>& primes) {
    const int q = field->size();
    check_rm_params(q, r, m);
    const auto [t, s] = ts_split(q, r);
    if (!(t < m || (t == m && s == 0))) throw Error(ErrorKind::PreconditionViolated, "split (t, s) out of range");
    if (omega0 == 0 || omega0 >= q) throw Error(ErrorKind::InvalidWitnessParams, "omega_0 must be a nonzero field element");
    if (static_cast<int>(omegas.size()) != t)
        throw Error(ErrorKind::InvalidWitnessParams, "expected " + std::to_string(t) + " omega values");
    if (static_cast<int>(primes.size()) != s)
        throw Error(ErrorKind::InvalidWitnessParams, "expected " + std::to_string(s) + " distinct omega' values");
    check_elements(*field, omegas);
    check_elements(*field, primes);
    if (std::set<Elem>(primes.begin(), primes.end()).size() != primes.size())
        throw Error(ErrorKind::InvalidWitnessParams, "omega' values must be distinct");

    ExponentPoly f = ExponentPoly::constant(field, m, omega0);
    for (int i = 0; i < t; ++i) f = f * indicator(field, m, i, omegas[i]);
    for (int j = 0; j < s; ++j) f = f * shifted_variable(field, m, t, primes[j]);
    return f;
}

ExponentPoly min_weight_poly(const FieldPtr& field, int r, int m) {
    const auto [t, s] = ts_split(field->size(), r);
    std::vector<Elem> primes(s);
    for (int j = 0; j < s; ++j) primes[j] = static_cast<Elem>(j);
    return min_weight_poly(field, r, m, 1, std::vector<Elem>(std::max(t, 0), 0), primes);
}

Codeword substitute_linear_forms(const ExponentPoly& f, const Matrix& forms, const std::optional<std::vector<Elem>>& shifts,
                                 const PointOrder& order) {
    const int m = order.m();
    if (f.num_vars() != m || !(f.field() == order.field()) || !(forms.field() == order.field()))
        throw Error(ErrorKind::SpecMismatch, "polynomial, forms and points must share field and variable count");
    if (forms.cols() != m || forms.rows() > m) throw Error(ErrorKind::DimensionMismatch, "forms must be l x m with l <= m");
    const auto l = forms.rows();
    if (rank(forms) != l) throw Error(ErrorKind::RankDeficientForms, "linear forms are not linearly independent");
    if (shifts && static_cast<Eigen::Index>(shifts->size()) != l)
        throw Error(ErrorKind::DimensionMismatch, "one shift per linear form expected");
    const Field& fld = order.field();
    std::vector<Elem> image(m);
    Codeword out = Codeword::Zero(static_cast<Eigen::Index>(order.size()));
    for (std::size_t nu = 0; nu < order.size(); ++nu) {
        const auto pt = order.point(nu);
        for (int i = 0; i < m; ++i) {
            if (i < l) {
                Elem acc = shifts ? (*shifts)[i] : Elem{0};
                for (int j = 0; j < m; ++j) acc = fld.add(acc, fld.mul(forms(i, j), pt[j]));
                image[i] = acc;
            } else {
                image[i] = pt[i];
            }
        }
        out[static_cast<Eigen::Index>(nu)] = f.eval(image);
    }
    return out;
}

std::vector<ExponentPoly> interpolation_basis(const FieldPtr& field, int m) {
    const PointOrder points(field, m);
    // One indicator factor per (variable, value); F_nu multiplies m of them.
    std::vector<std::vector<ExponentPoly>> factors(m);
    for (int j = 0; j < m; ++j)
        for (int a = 0; a < field->size(); ++a) factors[j].push_back(indicator(field, m, j, static_cast<Elem>(a)));
    std::vector<ExponentPoly> out;
    out.reserve(points.size());
    for (std::size_t nu = 0; nu < points.size(); ++nu) {
        const auto pt = points.point(nu);
        ExponentPoly f = factors[0][pt[0]];
        for (int j = 1; j < m; ++j) f = f * factors[j][pt[j]];
        out.push_back(std::move(f));
    }
    return out;
}

bool sum_zero_code_equal(int q, int m) {
    const int r = m * (q - 1) - 1;
    check_rm_params(q, r, m);
    const RMCode rm = build_code(q, r, m);
    const auto field = rm.code.field_ptr();
    Matrix ones(field, 1, rm.n);
    ones.entries().setOnes();
    const Matrix lambda = null_space_basis(ones);
    if (!row_space_equal(rm.code.generator(), lambda)) return false;

    // Explicit generators: G_nu = F_nu - F_1 has degree <= r and evaluates to e_nu - e_1.
    const auto interp = interpolation_basis(field, m);
    const Elem minus_one = field->neg(1);
    std::vector<Codeword> rows;
    for (std::size_t nu = 1; nu < interp.size(); ++nu) {
        const ExponentPoly g = interp[nu] - interp[0];
        if (g.total_degree() > r) return false;
        Codeword c = evaluate(g, rm.points);
        Codeword expected = Codeword::Zero(rm.n);
        expected[0] = minus_one;
        expected[static_cast<Eigen::Index>(nu)] = 1;
        if (c != expected || !rm.code.contains(c)) return false;
        rows.push_back(std::move(c));
    }
    return row_space_equal(Matrix::from_rows(field, rows, rm.n), lambda);
}

// Witness polynomials ---------------------------------------------------------

ExponentPoly witness_poly_case1(const FieldPtr& field, int m, int r, const std::vector<Elem>& order, Elem prime1,
                                Elem prime2) {
    const int q = field->size();
    check_rm_params(q, r, m);
    const auto [t, s] = ts_split(q, r);
    if (q <= 3 || m < 2 || s != 1 || r <= 1 || r >= m * (q - 1) - 1)
        throw Error(ErrorKind::PreconditionViolated,
                    "case 1 needs q > 3, m >= 2, s = 1 and 1 < r < m(q-1)-1; got q=" + std::to_string(q) +
                        " m=" + std::to_string(m) + " r=" + std::to_string(r));
    if (!is_enumeration(*field, order)) throw Error(ErrorKind::InvalidWitnessParams, "order must list every field element once");
    if (prime1 == prime2 || prime1 >= q || prime2 >= q)
        throw Error(ErrorKind::InvalidWitnessParams, "omega'_1 and omega'_2 must be distinct field elements");

    // Variables X_1..X_m are 0-based here: X_i -> i-1.
    const Elem minus_one = field->neg(1);
    ExponentPoly poly = ExponentPoly::constant(field, m, 1);
    for (int i = 0; i < t - 1; ++i) {
        poly = poly * (ExponentPoly::variable(field, m, i).pow(static_cast<unsigned>(q - 1)) +
                       ExponentPoly::constant(field, m, minus_one));
    }
    for (int j = 2; j < q; ++j) poly = poly * shifted_variable(field, m, t - 1, order[j]);
    poly = poly * shifted_variable(field, m, t, prime1) * shifted_variable(field, m, t, prime2);
    return poly;
}

ExponentPoly witness_poly_case1(const FieldPtr& field, int m, int r) {
    return witness_poly_case1(field, m, r, field->elements(), 0, 1);
}

ExponentPoly witness_poly_case2(const FieldPtr& field, int m, int r, const std::vector<Elem>& order) {
    const int q = field->size();
    if (q != 3) throw Error(ErrorKind::PreconditionViolated, "case 2 is specific to q = 3");
    check_rm_params(q, r, m);
    const auto [t, s] = ts_split(q, r);
    if (s != 1 || t < 1 || t > m - 2 || r <= 1 || r >= m * (q - 1) - 1)
        throw Error(ErrorKind::PreconditionViolated,
                    "case 2 needs s = 1 and 1 <= t <= m-2; got m=" + std::to_string(m) + " r=" + std::to_string(r));
    if (!is_enumeration(*field, order)) throw Error(ErrorKind::InvalidWitnessParams, "order must list every field element once");

    const Elem minus_one = field->neg(1);
    ExponentPoly poly = ExponentPoly::constant(field, m, 1);
    for (int i = 0; i < t - 1; ++i)
        poly = poly * (ExponentPoly::variable(field, m, i).pow(2) + ExponentPoly::constant(field, m, minus_one));
    for (int v = t - 1; v <= t + 1; ++v) poly = poly * shifted_variable(field, m, v, order[2]);
    return poly;
}

ExponentPoly witness_poly_case2(int m, int r) {
    const auto field = make_field(3);
    return witness_poly_case2(field, m, r, field->elements());
}

}  // namespace rmres
