#include "rmres/gf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rmres/error.hpp"

namespace rmres {

namespace {

// Remainder of a modulo the monic polynomial mod over Z_p (both constant term first).
std::vector<int> poly_rem(std::vector<int> a, std::span<const int> mod, int p) {
    const int dm = static_cast<int>(mod.size()) - 1;
    for (int d = static_cast<int>(a.size()) - 1; d >= dm; --d) {
        const int c = a[d] % p;
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            a[d - dm + j] = ((a[d - dm + j] - c * mod[j]) % p + p) % p;
        }
    }
    a.resize(std::min<std::size_t>(a.size(), dm));
    return a;
}

// Monic polynomial of degree deg whose low coefficients are the base-p digits of
// code, with the constant term as the most significant digit.
std::vector<int> monic_from_code(long long code, int deg, int p) {
    std::vector<int> poly(deg + 1, 0);
    poly[deg] = 1;
    for (int i = deg - 1; i >= 0; --i) {
        poly[i] = static_cast<int>(code % p);
        code /= p;
    }
    return poly;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

bool is_prime(long long n) noexcept {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<int, int> prime_power_split(int q) noexcept {
    if (q < 2) return {0, 0};
    int p = 2;
    while (q % p != 0) ++p;
    int e = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) return {0, 0};
    return {p, e};
}

bool is_irreducible_mod_p(std::span<const int> poly, int p) {
    const int deg = static_cast<int>(poly.size()) - 1;
    if (deg < 1) return false;
    if (deg == 1) return true;
    std::vector<int> a(poly.begin(), poly.end());
    for (int d = 1; d <= deg / 2; ++d) {
        const long long count = ipow(p, d);
        for (long long code = 0; code < count; ++code) {
            const auto divisor = monic_from_code(code, d, p);
            const auto rem = poly_rem(a, divisor, p);
            if (std::all_of(rem.begin(), rem.end(), [](int c) { return c == 0; })) return false;
        }
    }
    return true;
}

Field::Field(int q) {
    const auto [p, e] = prime_power_split(q);
    if (p == 0) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    if (q > kMaxSize)
        throw Error(ErrorKind::ParameterOutOfRange, "field size " + std::to_string(q) + " exceeds " + std::to_string(kMaxSize));
    p_ = p;
    e_ = e;
    q_ = q;

    if (e == 1) {
        modulus_ = {0, 1};
    } else {
        const long long count = ipow(p, e);
        for (long long code = 0; code < count; ++code) {
            auto cand = monic_from_code(code, e, p);
            if (is_irreducible_mod_p(cand, p)) {
                modulus_ = std::move(cand);
                break;
            }
        }
    }

    // Canonical order: zero, one, then the rest lexicographically with the
    // constant coefficient compared first.
    std::vector<std::vector<int>> residues;
    residues.reserve(q);
    for (int code = 0; code < q; ++code) {
        std::vector<int> c(e);
        int x = code;
        for (int i = e - 1; i >= 0; --i) {
            c[i] = x % p;
            x /= p;
        }
        residues.push_back(std::move(c));
    }
    std::vector<int> one(e, 0);
    one[0] = 1;
    std::stable_partition(residues.begin(), residues.end(), [&](const std::vector<int>& c) {
        return std::all_of(c.begin(), c.end(), [](int v) { return v == 0; }) || c == one;
    });

    coeffs_.resize(static_cast<std::size_t>(q) * e);
    packed_to_elem_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        int packed = 0;
        for (int i = e - 1; i >= 0; --i) {
            coeffs_[static_cast<std::size_t>(a) * e + i] = residues[a][i];
            packed = packed * p + residues[a][i];
        }
        packed_to_elem_[packed] = a;
    }

    const std::size_t qq = static_cast<std::size_t>(q) * q;
    add_.resize(qq);
    mul_.resize(qq);
    neg_.resize(q);
    inv_.assign(q, 0);
    std::vector<int> sum(e), prod(2 * e - 1);
    for (int a = 0; a < q; ++a) {
        const auto ca = coeffs(static_cast<Elem>(a));
        for (int b = 0; b < q; ++b) {
            const auto cb = coeffs(static_cast<Elem>(b));
            for (int i = 0; i < e; ++i) sum[i] = (ca[i] + cb[i]) % p;
            add_[idx(a, b)] = from_coeffs(sum);
            std::fill(prod.begin(), prod.end(), 0);
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            mul_[idx(a, b)] = from_coeffs(poly_rem(prod, modulus_, p));
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (add_[idx(a, b)] == 0) neg_[a] = static_cast<Elem>(b);
            if (mul_[idx(a, b)] == 1) inv_[a] = static_cast<Elem>(b);
        }
    }
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t k) const noexcept {
    Elem result = 1;
    Elem base = a;
    while (k > 0) {
        if (k & 1U) result = mul(result, base);
        base = mul(base, base);
        k >>= 1U;
    }
    return result;
}

Elem Field::from_coeffs(std::span<const int> c) const {
    if (static_cast<int>(c.size()) > e_) {
        for (std::size_t i = e_; i < c.size(); ++i)
            if (c[i] % p_ != 0) throw Error(ErrorKind::ParameterOutOfRange, "residue vector longer than field degree");
    }
    int packed = 0;
    for (int i = std::min<int>(e_, static_cast<int>(c.size())) - 1; i >= 0; --i) {
        const int v = ((c[i] % p_) + p_) % p_;
        packed = packed * p_ + v;
    }
    return static_cast<Elem>(packed_to_elem_[packed]);
}

Elem Field::from_int(long long v) const noexcept {
    const long long r = ((v % p_) + p_) % p_;
    // The prime subfield is {0, 1, 1+1, ...}; its residues are constants.
    std::vector<int> c(e_, 0);
    c[0] = static_cast<int>(r);
    int packed = 0;
    for (int i = e_ - 1; i >= 0; --i) packed = packed * p_ + c[i];
    return static_cast<Elem>(packed_to_elem_[packed]);
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(q_);
    std::iota(out.begin(), out.end(), Elem{0});
    return out;
}

FieldPtr make_field(int q) { return std::make_shared<const Field>(q); }

}  // namespace rmres
