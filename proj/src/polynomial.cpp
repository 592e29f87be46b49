#include "polluxe/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "polluxe/error.hpp"

namespace polluxe {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(Rational c) { return Polynomial(std::vector<Rational>{std::move(c)}); }

Polynomial Polynomial::monomial(Rational c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw Error(ErrorKind::ZeroSeries, "leading coefficient of the zero polynomial");
    return c_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
    // Horner in the polynomial ring: acc <- acc·(aX + b) + c_k.
    std::vector<Rational> acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        std::vector<Rational> next(acc.size() + 1);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i] * b;
            next[i + 1] += acc[i] * a;
        }
        next[0] += *it;
        acc = std::move(next);
    }
    return Polynomial(std::move(acc));
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Convolve over the integers and divide once at the end.
    const IntegerForm fa = to_integer_form(a.c_);
    const IntegerForm fb = to_integer_form(b.c_);
    std::vector<mpz_class> prod(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < fa.numerators.size(); ++i) {
        if (fa.numerators[i] == 0) continue;
        for (std::size_t j = 0; j < fb.numerators.size(); ++j)
            mpz_addmul(prod[i + j].get_mpz_t(), fa.numerators[i].get_mpz_t(), fb.numerators[j].get_mpz_t());
    }
    const mpz_class den = fa.denominator * fb.denominator;
    std::vector<Rational> out;
    out.reserve(prod.size());
    for (const auto& v : prod) out.emplace_back(v, den);
    return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i] << ")";
        if (i > 0) os << "*X^" << i;
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw Error(ErrorKind::DivisorZero, "polynomial division by zero");
    std::vector<Rational> rem(f.coeffs().begin(), f.coeffs().end());
    const auto dg = static_cast<std::size_t>(g.degree());
    if (rem.size() <= dg) return {Polynomial(), f};
    std::vector<Rational> quo(rem.size() - dg);
    const Rational inv_lead = Rational(1) / g.leading();
    for (std::size_t k = rem.size(); k-- > dg;) {
        if (rem[k].is_zero()) continue;
        const Rational q = rem[k] * inv_lead;
        quo[k - dg] = q;
        for (std::size_t i = 0; i <= dg; ++i) rem[k - dg + i] -= q * g.coeffs()[i];
    }
    rem.resize(dg);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Rational resultant(const Polynomial& a_in, const Polynomial& b_in) {
    if (a_in.is_zero() || b_in.is_zero()) return Rational();
    Polynomial a = a_in;
    Polynomial b = b_in;
    Rational acc(1);
    // Res(a, b) = (-1)^{deg a·deg b} lc(b)^{deg a - deg r} Res(b, r), r = a mod b.
    while (b.degree() > 0) {
        auto [q, r] = divmod(a, b);
        const std::int64_t da = a.degree(), db = b.degree();
        if (r.is_zero()) return Rational();
        if ((da * db) % 2 != 0) acc = -acc;
        acc *= pow(b.leading(), da - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
    return acc * pow(b.leading(), a.degree());
}

} // namespace polluxe
