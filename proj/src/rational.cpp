#include "polluxe/rational.hpp"

#include <cctype>

#include "polluxe/error.hpp"

namespace polluxe {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Axiom: return "Axiom";
    case ErrorKind::DivisorZero: return "DivisorZero";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ZeroSeries: return "ZeroSeries";
    case ErrorKind::LevelTooLow: return "LevelTooLow";
    case ErrorKind::MismatchedPrime: return "MismatchedPrime";
    case ErrorKind::CentralCritOnly: return "CentralCritOnly";
    case ErrorKind::OddPurityWeight: return "OddPurityWeight";
    }
    return "Unknown";
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorKind::DivisorZero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisorZero, "division of a rational by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    if (!s.empty() && s[0] == '-') i = 1;
    if (i == s.size()) throw Error(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw Error(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
    }
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    const mpz_class num = parse_integer(text.substr(0, slash), text);
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-')
        throw Error(ErrorKind::Parse, "negative denominator in '" + std::string(text) + "'");
    const mpz_class den = parse_integer(den_text, text);
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str(10);
    return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

Rational pow(const Rational& base, std::int64_t exponent) {
    if (exponent < 0) return Rational(1) / pow(base, -exponent);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.get().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

const Rational& Valuation::value() const {
    if (!v_) throw std::logic_error("value() of an infinite valuation");
    return *v_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
    return Valuation(*a.v_ + *b.v_);
}

Valuation operator-(const Valuation& a, const Rational& b) {
    if (a.is_infinite()) return a;
    return Valuation(*a.v_ - b);
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    if (a.is_infinite()) return std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    return *a.v_ <=> *b.v_;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t val_p(const mpz_class& n, std::int64_t p) {
    if (n == 0) throw std::logic_error("val_p of zero integer");
    mpz_class rest;
    const mpz_class prime(static_cast<long>(p));
    return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

Valuation val_p(const Rational& x, std::int64_t p) {
    if (x.is_zero()) return Valuation::infinity();
    return Valuation(val_p(x.num(), p) - val_p(x.den(), p));
}

mpz_class ipow(std::int64_t base, std::uint64_t exponent) {
    mpz_class r;
    mpz_class b(static_cast<long>(base));
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

Rational gamma_power(std::int64_t p, std::int64_t s) {
    return pow(Rational(1 + p), s);
}

IntegerForm to_integer_form(std::span<const Rational> values) {
    IntegerForm out;
    for (const auto& v : values) mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), v.get().get_den_mpz_t());
    out.numerators.reserve(values.size());
    for (const auto& v : values) out.numerators.push_back(v.num() * (out.denominator / v.den()));
    return out;
}

} // namespace polluxe
