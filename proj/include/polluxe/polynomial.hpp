#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polluxe/rational.hpp"

namespace polluxe {

/// Dense univariate polynomial over Q. Coefficients are stored low degree
/// first with no trailing zeros, so the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(Rational c);
    static Polynomial monomial(Rational c, std::size_t degree);

    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
    const Rational& leading() const;
    /// Coefficient of X^i, zero beyond the degree.
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
    std::span<const Rational> coeffs() const noexcept { return c_; }

    Rational operator()(const Rational& x) const;

    /// f(a·X + b).
    Polynomial compose_affine(const Rational& a, const Rational& b) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Euclidean division: returns (quotient, remainder). Throws DivisorZero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);

/// Res(a, b) over Q via the Euclidean remainder sequence.
Rational resultant(const Polynomial& a, const Polynomial& b);

} // namespace polluxe
