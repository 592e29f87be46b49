#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace polluxe {

/// Arbitrary-precision rational in lowest terms with positive denominator.
/// Zero is always 0/1.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t v) : q_(static_cast<long>(v)) {}  // NOLINT
    Rational(const mpz_class& v) : q_(v) {}                 // NOLINT
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "num/den" or "num" in base 10 with an optional leading minus.
    static Rational parse(std::string_view text);

    std::string str() const;

    const mpq_class& get() const noexcept { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_integer() const noexcept { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

Rational pow(const Rational& base, std::int64_t exponent);

/// An element of Q ∪ {+∞}; the codomain of every valuation in the library.
class Valuation {
public:
    Valuation() = default;  // +∞
    Valuation(Rational v) : v_(std::move(v)) {}  // NOLINT
    Valuation(std::int64_t v) : v_(Rational(v)) {}  // NOLINT

    static Valuation infinity() { return Valuation(); }

    bool is_infinite() const noexcept { return !v_.has_value(); }
    bool is_finite() const noexcept { return v_.has_value(); }
    /// Precondition: finite.
    const Rational& value() const;

    std::string str() const { return v_ ? v_->str() : std::string("inf"); }

    friend Valuation operator+(const Valuation& a, const Valuation& b);
    friend Valuation operator-(const Valuation& a, const Rational& b);

    friend bool operator==(const Valuation& a, const Valuation& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

    friend std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

private:
    std::optional<Rational> v_;
};

bool is_prime(std::int64_t n);

/// Exponent of p in a nonzero integer.
std::int64_t val_p(const mpz_class& n, std::int64_t p);

/// v_p(num) - v_p(den); +∞ exactly for zero.
Valuation val_p(const Rational& x, std::int64_t p);

/// The fixed topological generator γ = 1 + p of 1 + pZ_p, raised to s.
Rational gamma_power(std::int64_t p, std::int64_t s);

/// Integer powers p^k for k >= 0.
mpz_class ipow(std::int64_t base, std::uint64_t exponent);

/// Common-denominator form: values[i] = numerators[i] / denominator.
struct IntegerForm {
    std::vector<mpz_class> numerators;
    mpz_class denominator{1};
};

IntegerForm to_integer_form(std::span<const Rational> values);

} // namespace polluxe
