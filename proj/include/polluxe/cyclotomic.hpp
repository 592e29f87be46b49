#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polluxe/polynomial.hpp"
#include "polluxe/rational.hpp"

namespace polluxe {

/// Φ_{p^m}(Z) = Σ_{k<p} Z^{k·p^{m-1}}.
Polynomial cyclotomic_poly(std::int64_t p, std::int64_t m);

/// Q(ζ_{p^m}) presented as Q[Z]/Φ_{p^m}(Z). The class of Z is the
/// distinguished primitive root ζ_{p^m}.
class CyclotomicRing {
public:
    CyclotomicRing(std::int64_t p, std::int64_t m);

    std::int64_t p() const noexcept { return p_; }
    std::int64_t level() const noexcept { return m_; }
    /// p^m, the order of ζ.
    std::int64_t order() const noexcept { return order_; }
    /// e = p^{m-1}(p-1).
    std::int64_t degree() const noexcept { return degree_; }
    Polynomial modulus() const { return cyclotomic_poly(p_, m_); }

    /// Exponents a in [1, p^m) prime to p: the primitive roots are ζ^a.
    std::vector<std::int64_t> primitive_exponents() const;

    /// Reduces integer-valued coefficients (any length) in place modulo Φ, leaving `degree()` entries.
    void reduce_in_place(std::vector<mpz_class>& coeffs) const;

    friend bool operator==(const CyclotomicRing&, const CyclotomicRing&) = default;

private:
    std::int64_t p_;
    std::int64_t m_;
    std::int64_t order_;
    std::int64_t degree_;
};

class CyclotomicElement {
public:
    explicit CyclotomicElement(const CyclotomicRing& ring);
    /// Reduces an arbitrary rational polynomial in ζ.
    CyclotomicElement(const CyclotomicRing& ring, const Polynomial& representative);

    static CyclotomicElement constant(const CyclotomicRing& ring, const Rational& c);
    /// c·ζ^a.
    static CyclotomicElement root_power(const CyclotomicRing& ring, std::int64_t a, const Rational& c = Rational(1));

    const CyclotomicRing& ring() const noexcept { return ring_; }
    /// Exactly `ring().degree()` coefficients of the reduced representative.
    std::span<const Rational> coeffs() const noexcept { return c_; }
    Polynomial representative() const { return Polynomial(c_); }

    bool is_zero() const;

    CyclotomicElement& operator+=(const CyclotomicElement& o);
    CyclotomicElement& operator-=(const CyclotomicElement& o);
    CyclotomicElement& operator*=(const Rational& s);
    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
    friend CyclotomicElement operator*(CyclotomicElement a, const Rational& s) { return a *= s; }
    CyclotomicElement operator-() const;
    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

    /// Galois action ζ ↦ ζ^a, a prime to p.
    CyclotomicElement conjugate(std::int64_t a) const;

    /// nums/den reduced modulo Φ; nums may have any length.
    static CyclotomicElement from_integer_form(const CyclotomicRing& ring, std::vector<mpz_class> nums,
                                               const mpz_class& den);

private:
    CyclotomicRing ring_;
    std::vector<Rational> c_;
};

/// Remainder of x modulo Φ_{p^m}.
CyclotomicElement cyc_reduce(const Polynomial& x, const CyclotomicRing& ring);

/// Norm to Q, computed as Res(Φ_{p^m}, representative).
Rational cyc_norm(const CyclotomicElement& x);

/// v_p(Norm(x)) / e ∈ (1/e)Z, +∞ iff x = 0.
Valuation cyc_valuation(const CyclotomicElement& x);

/// Evaluates a fixed rational polynomial f at the points c·ζ^a − 1 of any
/// cyclotomic level. The Taylor shift g(Y) = f(cY − 1) is done once; each
/// point then costs a fold modulo Y^{p^m} − 1 and one reduction.
class PointEvaluator {
public:
    PointEvaluator(const Polynomial& f, const Rational& c);

    CyclotomicElement at(const CyclotomicRing& ring, std::int64_t a = 1) const;

private:
    std::vector<mpz_class> shifted_;  // numerators of g
    mpz_class denominator_{1};
};

} // namespace polluxe
