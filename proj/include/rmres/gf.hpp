#ifndef RMRES_GF_HPP
#define RMRES_GF_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace rmres {

/// A field element is its index in the canonical element order of its field:
/// 0 is zero, 1 is one, the rest follow by coefficient-vector lexicographic order.
using Elem = std::uint16_t;

/**
 * Finite field GF(p^e) with exact table-driven arithmetic.
 *
 * Elements are residues modulo a monic irreducible polynomial of degree e
 * over Z_p; the modulus is the lexicographically smallest such polynomial
 * (coefficients compared constant-term first), so construction is fully
 * deterministic. Instances are immutable and safe to share between threads.
 */
class Field {
public:
    /// Largest supported field size (addition and multiplication tables are q x q).
    static constexpr int kMaxSize = 1024;

    /// Throws NotPrimePower when q is not a prime power, ParameterOutOfRange when q > kMaxSize.
    explicit Field(int q);

    int characteristic() const noexcept { return p_; }
    int degree() const noexcept { return e_; }
    int size() const noexcept { return q_; }

    /// Monic modulus, constant term first, length e + 1.
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }

    Elem add(Elem a, Elem b) const noexcept { return add_[idx(a, b)]; }
    Elem sub(Elem a, Elem b) const noexcept { return add_[idx(a, neg_[b])]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[idx(a, b)]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    /// Throws DivisionByZero for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t k) const noexcept;

    /// Row of the multiplication table: mul_row(c)[x] == c * x.
    std::span<const Elem> mul_row(Elem c) const noexcept {
        return {mul_.data() + static_cast<std::size_t>(c) * q_, static_cast<std::size_t>(q_)};
    }
    std::span<const Elem> add_row(Elem c) const noexcept {
        return {add_.data() + static_cast<std::size_t>(c) * q_, static_cast<std::size_t>(q_)};
    }

    /// Residue representation of an element (length e, constant term first).
    std::span<const int> coeffs(Elem a) const noexcept {
        return {coeffs_.data() + static_cast<std::size_t>(a) * e_, static_cast<std::size_t>(e_)};
    }
    /// Inverse of coeffs(); throws ParameterOutOfRange on malformed input.
    Elem from_coeffs(std::span<const int> c) const;
    /// Image of an integer in the prime subfield.
    Elem from_int(long long v) const noexcept;

    /// All q elements in canonical order (the identity list 0..q-1 as indices).
    std::vector<Elem> elements() const;

    bool operator==(const Field& other) const noexcept { return q_ == other.q_ && modulus_ == other.modulus_; }

private:
    std::size_t idx(Elem a, Elem b) const noexcept { return static_cast<std::size_t>(a) * q_ + b; }

    int p_ = 0;
    int e_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;
    std::vector<int> coeffs_;   // q * e, element-major
    std::vector<int> packed_to_elem_;  // base-p packed residue -> element index
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// field_new: shared immutable field of size q.
FieldPtr make_field(int q);

/// Factor q = p^e; returns {0, 0} when q is not a prime power.
std::pair<int, int> prime_power_split(int q) noexcept;

bool is_prime(long long n) noexcept;

/// Irreducibility over Z_p by trial division against every monic polynomial of degree <= deg/2.
bool is_irreducible_mod_p(std::span<const int> poly, int p);

}  // namespace rmres

#endif
