#include "polluxe/cyclotomic.hpp"

#include <algorithm>

#include "polluxe/error.hpp"

namespace polluxe {

Polynomial cyclotomic_poly(std::int64_t p, std::int64_t m) {
    if (m < 1) throw Error(ErrorKind::InvalidConfig, "cyclotomic level must be >= 1");
    const auto step = static_cast<std::size_t>(ipow(p, static_cast<std::uint64_t>(m - 1)).get_ui());
    std::vector<Rational> c(step * static_cast<std::size_t>(p - 1) + 1);
    for (std::int64_t k = 0; k < p; ++k) c[static_cast<std::size_t>(k) * step] = Rational(1);
    return Polynomial(std::move(c));
}

CyclotomicRing::CyclotomicRing(std::int64_t p, std::int64_t m) : p_(p), m_(m) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidConfig, "cyclotomic ring needs a prime p");
    if (m < 1) throw Error(ErrorKind::InvalidConfig, "cyclotomic level must be >= 1");
    order_ = static_cast<std::int64_t>(ipow(p, static_cast<std::uint64_t>(m)).get_si());
    degree_ = order_ / p * (p - 1);
}

std::vector<std::int64_t> CyclotomicRing::primitive_exponents() const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(degree_));
    for (std::int64_t a = 1; a < order_; ++a)
        if (a % p_ != 0) out.push_back(a);
    return out;
}

void CyclotomicRing::reduce_in_place(std::vector<mpz_class>& c) const {
    // Z^e ≡ -Σ_{k<p-1} Z^{k·p^{m-1}}.
    const auto e = static_cast<std::size_t>(degree_);
    const auto step = static_cast<std::size_t>(order_ / p_);
    for (std::size_t i = c.size(); i-- > e;) {
        if (c[i] == 0) continue;
        const mpz_class top = c[i];
        c[i] = 0;
        const std::size_t base = i - e;
        for (std::int64_t k = 0; k + 1 < p_; ++k) c[base + static_cast<std::size_t>(k) * step] -= top;
    }
    c.resize(e);
}

CyclotomicElement::CyclotomicElement(const CyclotomicRing& ring)
    : ring_(ring), c_(static_cast<std::size_t>(ring.degree())) {}

CyclotomicElement::CyclotomicElement(const CyclotomicRing& ring, const Polynomial& representative)
    : ring_(ring) {
    IntegerForm f = to_integer_form(representative.coeffs());
    *this = from_integer_form(ring, std::move(f.numerators), f.denominator);
}

CyclotomicElement CyclotomicElement::from_integer_form(const CyclotomicRing& ring, std::vector<mpz_class> nums,
                                                       const mpz_class& den) {
    ring.reduce_in_place(nums);
    CyclotomicElement out(ring);
    for (std::size_t i = 0; i < nums.size(); ++i)
        if (nums[i] != 0) out.c_[i] = Rational(nums[i], den);
    return out;
}

CyclotomicElement CyclotomicElement::constant(const CyclotomicRing& ring, const Rational& c) {
    CyclotomicElement out(ring);
    out.c_[0] = c;
    return out;
}

CyclotomicElement CyclotomicElement::root_power(const CyclotomicRing& ring, std::int64_t a, const Rational& c) {
    const std::int64_t n = ring.order();
    const std::int64_t exponent = ((a % n) + n) % n;
    return CyclotomicElement(ring, Polynomial::monomial(c, static_cast<std::size_t>(exponent)));
}

bool CyclotomicElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
    if (!(ring_ == o.ring_)) throw Error(ErrorKind::MismatchedPrime, "cyclotomic rings differ");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) {
    if (!(ring_ == o.ring_)) throw Error(ErrorKind::MismatchedPrime, "cyclotomic rings differ");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

CyclotomicElement CyclotomicElement::operator-() const {
    CyclotomicElement r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (!(a.ring_ == b.ring_)) throw Error(ErrorKind::MismatchedPrime, "cyclotomic rings differ");
    const IntegerForm fa = to_integer_form(a.c_);
    const IntegerForm fb = to_integer_form(b.c_);
    std::vector<mpz_class> prod(2 * a.c_.size() - 1);
    for (std::size_t i = 0; i < fa.numerators.size(); ++i) {
        if (fa.numerators[i] == 0) continue;
        for (std::size_t j = 0; j < fb.numerators.size(); ++j)
            mpz_addmul(prod[i + j].get_mpz_t(), fa.numerators[i].get_mpz_t(), fb.numerators[j].get_mpz_t());
    }
    return CyclotomicElement::from_integer_form(a.ring_, std::move(prod), fa.denominator * fb.denominator);
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a.ring_ == b.ring_ && a.c_ == b.c_;
}

CyclotomicElement CyclotomicElement::conjugate(std::int64_t a) const {
    if (a % ring_.p() == 0) throw Error(ErrorKind::InvalidConfig, "Galois exponent must be prime to p");
    const std::int64_t n = ring_.order();
    const std::int64_t am = ((a % n) + n) % n;
    const IntegerForm f = to_integer_form(c_);
    std::vector<mpz_class> folded(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < f.numerators.size(); ++i) {
        const auto target = static_cast<std::size_t>((static_cast<std::int64_t>(i) * am) % n);
        folded[target] += f.numerators[i];
    }
    return from_integer_form(ring_, std::move(folded), f.denominator);
}

CyclotomicElement cyc_reduce(const Polynomial& x, const CyclotomicRing& ring) {
    return CyclotomicElement(ring, x);
}

Rational cyc_norm(const CyclotomicElement& x) {
    if (x.is_zero()) return Rational();
    return resultant(x.ring().modulus(), x.representative());
}

Valuation cyc_valuation(const CyclotomicElement& x) {
    if (x.is_zero()) return Valuation::infinity();
    const Valuation v = val_p(cyc_norm(x), x.ring().p());
    return Valuation(v.value() / Rational(x.ring().degree()));
}

PointEvaluator::PointEvaluator(const Polynomial& f, const Rational& c) {
    if (f.is_zero()) return;
    // With f = F/d and c = a/b:  b^D·F(cY − 1) = Σ F_n (aY − b)^n b^{D−n},
    // accumulated by Horner over the integers.
    const IntegerForm form = to_integer_form(f.coeffs());
    const mpz_class a = c.num();
    const mpz_class b = c.den();
    const std::size_t deg = form.numerators.size() - 1;
    std::vector<mpz_class> acc{form.numerators[deg]};
    mpz_class bpow = 1;
    for (std::size_t n = deg; n-- > 0;) {
        bpow *= b;
        std::vector<mpz_class> next(acc.size() + 1);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            mpz_submul(next[i].get_mpz_t(), acc[i].get_mpz_t(), b.get_mpz_t());
            mpz_addmul(next[i + 1].get_mpz_t(), acc[i].get_mpz_t(), a.get_mpz_t());
        }
        mpz_addmul(next[0].get_mpz_t(), form.numerators[n].get_mpz_t(), bpow.get_mpz_t());
        acc = std::move(next);
    }
    shifted_ = std::move(acc);
    denominator_ = form.denominator * bpow;
}

CyclotomicElement PointEvaluator::at(const CyclotomicRing& ring, std::int64_t a) const {
    if (shifted_.empty()) return CyclotomicElement(ring);
    const std::int64_t n = ring.order();
    const std::int64_t am = ((a % n) + n) % n;
    std::vector<mpz_class> folded(static_cast<std::size_t>(n));
    std::int64_t exponent = 0;
    for (const auto& coeff : shifted_) {
        folded[static_cast<std::size_t>(exponent)] += coeff;
        exponent = (exponent + am) % n;
    }
    return CyclotomicElement::from_integer_form(ring, std::move(folded), denominator_);
}

} // namespace polluxe
