#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace moorelab {

/// Prime power decomposition of q, or nullopt when q is not p^k with k >= 1.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

bool is_prime_power(std::uint64_t q);

class FieldElement;

/// GF(p^k) realised as GF(p)[x] / (modulus).
///
/// Elements are identified with dense indices in [0, q): the index of the
/// polynomial c_0 + c_1 x + ... + c_{k-1} x^{k-1} is sum c_i p^i. Index 0 is
/// zero and index 1 is one. The modulus is the lexicographically smallest
/// (constant term first) monic irreducible polynomial of degree k, so two
/// fields built for the same q are identical, not merely isomorphic.
///
/// Copies share the same immutable tables.
class GaloisField {
public:
    using Index = std::uint32_t;

    /// Throws NotAPrimePower for q < 2 or q with two distinct prime factors,
    /// Unsupported for q > 2^16.
    explicit GaloisField(std::uint64_t q);

    std::uint32_t characteristic() const noexcept;
    std::uint32_t degree() const noexcept;
    std::uint32_t order() const noexcept;

    /// Coefficients of the modulus, constant term first, length degree()+1.
    const std::vector<std::uint32_t>& modulus() const noexcept;

    /// Little-endian coefficient vector of length degree().
    std::vector<std::uint32_t> coefficients(Index a) const;
    Index from_coefficients(const std::vector<std::uint32_t>& coeffs) const;

    // Index-level arithmetic for construction hot loops; arguments are not
    // range checked.
    Index add(Index a, Index b) const noexcept;
    Index sub(Index a, Index b) const noexcept;
    Index neg(Index a) const noexcept;
    Index mul(Index a, Index b) const noexcept;
    Index inv(Index a) const;  // throws DivisionByZero

    FieldElement element(Index index) const;
    FieldElement zero() const;
    FieldElement one() const;

    /// All q elements: 0, 1, then ascending index.
    std::vector<FieldElement> elements() const;

    /// Human-readable polynomial form, e.g. "x+1"; plain integers for k = 1.
    std::string format(Index a) const;

    /// Same characteristic, degree and modulus.
    friend bool operator==(const GaloisField& lhs, const GaloisField& rhs) noexcept;

private:
    struct Tables;
    std::shared_ptr<const Tables> tables_;
};

class FieldElement {
public:
    FieldElement(GaloisField field, GaloisField::Index index);

    GaloisField::Index index() const noexcept { return index_; }
    const GaloisField& field() const noexcept { return field_; }
    std::vector<std::uint32_t> coefficients() const { return field_.coefficients(index_); }
    bool is_zero() const noexcept { return index_ == 0; }
    std::string str() const { return field_.format(index_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);

    /// Compares index within the same field; MixedFields otherwise.
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    GaloisField field_;
    GaloisField::Index index_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t exponent);

}  // namespace moorelab
