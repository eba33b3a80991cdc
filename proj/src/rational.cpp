#include "convexdiff/rational.hpp"

#include "convexdiff/errors.hpp"

#include <cctype>
#include <ostream>

namespace convexdiff {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) {
        return false;
    }
    for (const char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

[[noreturn]] void reject(const std::string& text, const std::string& why) {
    throw ValidationError("invalid rational \"" + text + "\": " + why);
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw ValidationError("invalid rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(long long num, long long den)
    : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den_part = slash == std::string::npos ? "" : text.substr(slash + 1);

    bool negative = false;
    if (!num_part.empty() && (num_part.front() == '-' || num_part.front() == '+')) {
        negative = num_part.front() == '-';
        num_part.erase(num_part.begin());
    }
    if (!all_digits(num_part)) {
        reject(text, "expected \"p\" or \"p/q\" with decimal digits");
    }

    Integer num(num_part, 10);
    if (negative) {
        num = -num;
    }
    if (slash == std::string::npos) {
        return Rational(num);
    }

    if (!all_digits(den_part)) {
        reject(text, "the denominator must be an unsigned decimal integer");
    }
    const Integer den(den_part, 10);
    if (den == 0) {
        reject(text, "zero denominator");
    }
    if (den == 1) {
        reject(text, "denominator 1 must be written as a bare integer");
    }
    const Integer g = gcd(num, den);
    if (g != 1) {
        reject(text, "not in canonical form (numerator and denominator share the factor " + g.get_str() + ")");
    }
    return Rational(num, den);
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

std::string Rational::str() const {
    std::string s = value_.get_num().get_str();
    if (value_.get_den() != 1) {
        s += "/" + value_.get_den().get_str();
    }
    return s;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw ValidationError("rational division by zero");
    }
    value_ /= o.value_;
    return *this;
}

int Rational::compare(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? -1 : c > 0 ? 1 : 0;
}

Integer lcm_of_denominators(const std::vector<Rational>& values) {
    if (values.empty()) {
        throw ValidationError("lcm_of_denominators: empty list");
    }
    Integer l = 1;
    for (const Rational& v : values) {
        l = lcm(l, v.denominator());
    }
    return l;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace convexdiff
