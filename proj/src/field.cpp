#include "moorelab/field.hpp"

#include <algorithm>
#include <numeric>

#include "moorelab/error.hpp"

namespace moorelab {

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

constexpr std::uint64_t kMaxOrder = 1u << 16;
constexpr std::uint32_t kAddTableLimit = 256;

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

std::uint32_t inverse_mod_p(std::uint32_t a, std::uint32_t p)
{
    // p is prime, Fermat
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

// Remainder of f modulo a nonzero divisor over GF(p).
Poly poly_mod(Poly f, Poly divisor, std::uint32_t p)
{
    trim(f);
    trim(divisor);
    const std::size_t dd = divisor.size() - 1;
    const std::uint32_t lead_inv = inverse_mod_p(divisor.back(), p);
    while (f.size() > dd) {
        const std::size_t shift = f.size() - 1 - dd;
        const std::uint32_t factor = static_cast<std::uint32_t>(std::uint64_t{f.back()} * lead_inv % p);
        for (std::size_t i = 0; i <= dd; ++i) {
            const std::uint64_t sub = std::uint64_t{factor} * divisor[i] % p;
            f[i + shift] = static_cast<std::uint32_t>((f[i + shift] + p - sub) % p);
        }
        trim(f);
    }
    return f;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of `code`.
Poly monic_from_code(std::uint64_t code, std::uint32_t degree, std::uint32_t p)
{
    Poly f(degree + 1, 0);
    for (std::uint32_t i = 0; i < degree; ++i) {
        f[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    f[degree] = 1;
    return f;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp)
{
    std::uint64_t r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

bool is_irreducible(const Poly& f, std::uint32_t p)
{
    const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; d <= k / 2; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t code = 0; code < count; ++code) {
            if (poly_mod(f, monic_from_code(code, d, p), p).empty())
                return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible, comparing the coefficient
// vector constant term first.
Poly smallest_irreducible(std::uint32_t p, std::uint32_t k)
{
    if (k == 1)
        return {0, 1};
    // Lexicographic order with c_0 most significant: enumerate codes whose
    // most significant digit is c_0.
    const std::uint64_t count = ipow(p, k);
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly f(k + 1, 0);
        std::uint64_t rest = code;
        for (std::uint32_t i = k; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        f[k] = 1;
        if (f[0] != 0 && is_irreducible(f, p))
            return f;
    }
    throw Error(ErrorCode::Unsupported, "no irreducible polynomial found");
}

}  // namespace

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q)
{
    if (q < 2)
        return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0)
        return std::pair{static_cast<std::uint32_t>(q), 1u};
    std::uint32_t k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1)
        return std::nullopt;
    return std::pair{static_cast<std::uint32_t>(p), k};
}

bool is_prime_power(std::uint64_t q)
{
    return prime_power(q).has_value();
}

struct GaloisField::Tables {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    Poly modulus;
    std::vector<std::uint32_t> place;  // p^i
    std::vector<Index> add;            // q*q, only for q <= kAddTableLimit
    std::vector<Index> negation;
    std::vector<Index> exp;  // exp[i] = g^i for a primitive g, length q-1
    std::vector<Index> log;  // log[0] unused

    Index add_digits(Index a, Index b) const
    {
        Index r = 0;
        for (std::uint32_t i = 0; i < k; ++i) {
            r += ((a % p + b % p) % p) * place[i];
            a /= p;
            b /= p;
        }
        return r;
    }

    Poly to_poly(Index a) const
    {
        Poly c(k);
        for (std::uint32_t i = 0; i < k; ++i) {
            c[i] = a % p;
            a /= p;
        }
        return c;
    }

    Index from_poly(const Poly& c) const
    {
        Index r = 0;
        for (std::uint32_t i = 0; i < k; ++i)
            r += c[i] * place[i];
        return r;
    }

    // Shift-and-reduce multiplication; used only while building exp/log.
    Index slow_mul(Index a, Index b) const
    {
        if (k == 1)
            return static_cast<Index>(std::uint64_t{a} * b % p);
        Poly acc(k, 0);
        Poly shifted = to_poly(a);
        Poly bc = to_poly(b);
        for (std::uint32_t i = 0; i < k; ++i) {
            for (std::uint32_t j = 0; j < k; ++j)
                acc[j] = static_cast<std::uint32_t>((acc[j] + std::uint64_t{bc[i]} * shifted[j]) % p);
            // shifted *= x mod modulus
            const std::uint32_t top = shifted[k - 1];
            for (std::uint32_t j = k - 1; j > 0; --j)
                shifted[j] = shifted[j - 1];
            shifted[0] = 0;
            for (std::uint32_t j = 0; j < k; ++j) {
                const std::uint64_t sub = std::uint64_t{top} * modulus[j] % p;
                shifted[j] = static_cast<std::uint32_t>((shifted[j] + p - sub) % p);
            }
        }
        return from_poly(acc);
    }
};

GaloisField::GaloisField(std::uint64_t q)
{
    const auto pk = prime_power(q);
    if (!pk)
        throw Error(ErrorCode::NotAPrimePower, std::to_string(q) + " is not a prime power");
    if (q > kMaxOrder)
        throw Error(ErrorCode::Unsupported, "field order " + std::to_string(q) + " exceeds 2^16");

    auto t = std::make_shared<Tables>();
    t->p = pk->first;
    t->k = pk->second;
    t->q = static_cast<std::uint32_t>(q);
    t->modulus = smallest_irreducible(t->p, t->k);
    t->place.resize(t->k);
    for (std::uint32_t i = 0; i < t->k; ++i)
        t->place[i] = static_cast<std::uint32_t>(ipow(t->p, i));

    t->negation.resize(t->q);
    for (Index a = 0; a < t->q; ++a) {
        Index r = 0, rest = a;
        for (std::uint32_t i = 0; i < t->k; ++i) {
            r += ((t->p - rest % t->p) % t->p) * t->place[i];
            rest /= t->p;
        }
        t->negation[a] = r;
    }

    if (t->q <= kAddTableLimit) {
        t->add.resize(std::size_t{t->q} * t->q);
        for (Index a = 0; a < t->q; ++a)
            for (Index b = 0; b < t->q; ++b)
                t->add[std::size_t{a} * t->q + b] = t->add_digits(a, b);
    }

    // Smallest primitive element by index.
    const std::uint32_t group = t->q - 1;
    t->exp.assign(group, 0);
    t->log.assign(t->q, 0);
    for (Index g = 1; g < t->q; ++g) {
        Index x = 1;
        std::uint32_t ord = 0;
        do {
            t->exp[ord] = x;
            x = t->slow_mul(x, g);
            ++ord;
        } while (x != 1 && ord < group);
        if (x == 1 && ord == group)
            break;
    }
    for (std::uint32_t i = 0; i < group; ++i)
        t->log[t->exp[i]] = i;

    tables_ = std::move(t);
}

std::uint32_t GaloisField::characteristic() const noexcept { return tables_->p; }
std::uint32_t GaloisField::degree() const noexcept { return tables_->k; }
std::uint32_t GaloisField::order() const noexcept { return tables_->q; }
const std::vector<std::uint32_t>& GaloisField::modulus() const noexcept { return tables_->modulus; }

std::vector<std::uint32_t> GaloisField::coefficients(Index a) const
{
    return tables_->to_poly(a);
}

GaloisField::Index GaloisField::from_coefficients(const std::vector<std::uint32_t>& coeffs) const
{
    if (coeffs.size() != tables_->k)
        throw Error(ErrorCode::MixedFields, "coefficient vector has wrong length");
    for (auto c : coeffs)
        if (c >= tables_->p)
            throw Error(ErrorCode::MixedFields, "coefficient out of range");
    return tables_->from_poly(coeffs);
}

GaloisField::Index GaloisField::add(Index a, Index b) const noexcept
{
    const Tables& t = *tables_;
    if (t.k == 1)
        return (a + b) % t.p;
    if (!t.add.empty())
        return t.add[std::size_t{a} * t.q + b];
    if (t.p == 2)
        return a ^ b;
    return t.add_digits(a, b);
}

GaloisField::Index GaloisField::neg(Index a) const noexcept { return tables_->negation[a]; }

GaloisField::Index GaloisField::sub(Index a, Index b) const noexcept { return add(a, neg(b)); }

GaloisField::Index GaloisField::mul(Index a, Index b) const noexcept
{
    if (a == 0 || b == 0)
        return 0;
    const Tables& t = *tables_;
    return t.exp[(t.log[a] + t.log[b]) % (t.q - 1)];
}

GaloisField::Index GaloisField::inv(Index a) const
{
    if (a == 0)
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const Tables& t = *tables_;
    return t.exp[(t.q - 1 - t.log[a]) % (t.q - 1)];
}

FieldElement GaloisField::element(Index index) const
{
    if (index >= order())
        throw Error(ErrorCode::MixedFields,
                    "index " + std::to_string(index) + " outside GF(" + std::to_string(order()) + ")");
    return FieldElement(*this, index);
}

FieldElement GaloisField::zero() const { return FieldElement(*this, 0); }
FieldElement GaloisField::one() const { return FieldElement(*this, 1); }

std::vector<FieldElement> GaloisField::elements() const
{
    std::vector<FieldElement> out;
    out.reserve(order());
    for (Index i = 0; i < order(); ++i)
        out.emplace_back(*this, i);
    return out;
}

std::string GaloisField::format(Index a) const
{
    if (degree() == 1)
        return std::to_string(a);
    if (a == 0)
        return "0";
    const auto c = coefficients(a);
    std::string out;
    for (std::uint32_t i = degree(); i-- > 0;) {
        if (c[i] == 0)
            continue;
        if (!out.empty())
            out += "+";
        const bool show_coeff = c[i] != 1 || i == 0;
        if (show_coeff)
            out += std::to_string(c[i]);
        if (i >= 1)
            out += "x";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

bool operator==(const GaloisField& lhs, const GaloisField& rhs) noexcept
{
    return lhs.tables_ == rhs.tables_ ||
           (lhs.tables_->p == rhs.tables_->p && lhs.tables_->k == rhs.tables_->k &&
            lhs.tables_->modulus == rhs.tables_->modulus);
}

FieldElement::FieldElement(GaloisField field, GaloisField::Index index)
    : field_(std::move(field)), index_(index)
{
}

namespace {

const GaloisField& common_field(const FieldElement& a, const FieldElement& b)
{
    if (!(a.field() == b.field()))
        throw Error(ErrorCode::MixedFields, "operands belong to different fields");
    return a.field();
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b)
{
    const auto& f = common_field(a, b);
    return FieldElement(f, f.add(a.index(), b.index()));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b)
{
    const auto& f = common_field(a, b);
    return FieldElement(f, f.sub(a.index(), b.index()));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
    const auto& f = common_field(a, b);
    return FieldElement(f, f.mul(a.index(), b.index()));
}

FieldElement operator-(const FieldElement& a)
{
    return FieldElement(a.field(), a.field().neg(a.index()));
}

bool operator==(const FieldElement& a, const FieldElement& b)
{
    common_field(a, b);
    return a.index() == b.index();
}

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement neg(const FieldElement& a) { return -a; }

FieldElement inv(const FieldElement& a)
{
    return FieldElement(a.field(), a.field().inv(a.index()));
}

FieldElement pow(const FieldElement& a, std::uint64_t exponent)
{
    FieldElement result = a.field().one();
    FieldElement base = a;
    for (; exponent > 0; exponent >>= 1) {
        if (exponent & 1)
            result = result * base;
        base = base * base;
    }
    return result;
}

}  // namespace moorelab
