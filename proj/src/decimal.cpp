#include "convexdiff/decimal.hpp"

#include "convexdiff/errors.hpp"

namespace convexdiff {

namespace {

Integer pow_ui(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

// floor((x * 10^guard)^1 / n^{p/q}) without leaving the integers: raise to
// the q-th power first, divide, then take the integer q-th root. The two
// floors commute because t^q <= floor(a/b) iff t^q <= a/b for integer t.
Integer scaled_value(const Integer& x, const Integer& n, unsigned p, unsigned q,
                     unsigned long guard) {
    Integer numerator = pow_ui(x, q) * pow_ui(Integer(10), guard * q);
    Integer quotient = numerator / pow_ui(n, p);
    Integer root;
    mpz_root(root.get_mpz_t(), quotient.get_mpz_t(), q);
    return root;
}

std::string format(const std::string& sig, long long exp10) {
    if (exp10 >= 0 && exp10 <= 8) {
        const long long int_digits = exp10 + 1;
        if (int_digits >= static_cast<long long>(sig.size()))
            return sig + std::string(static_cast<std::size_t>(int_digits) - sig.size(), '0');
        return sig.substr(0, static_cast<std::size_t>(int_digits)) + "." +
               sig.substr(static_cast<std::size_t>(int_digits));
    }
    if (exp10 < 0 && exp10 >= -4)
        return "0." + std::string(static_cast<std::size_t>(-exp10 - 1), '0') + sig;
    std::string mantissa = sig.size() > 1 ? sig.substr(0, 1) + "." + sig.substr(1) : sig;
    return mantissa + "e" + std::to_string(exp10);
}

} // namespace

std::string power_ratio_decimal(const Integer& x, const Integer& n, unsigned p, unsigned q,
                                unsigned digits) {
    if (x < 0)
        throw ValidationError("decimal rendering requires a nonnegative numerator");
    if (n < 1)
        throw ValidationError("decimal rendering requires a positive base");
    if (q < 1 || digits < 1)
        throw ValidationError("decimal rendering requires q >= 1 and digits >= 1");
    if (x == 0)
        return "0";

    // A larger guard only adds trailing digits; grow it until `digits`
    // significant ones survive the leading zeros.
    for (unsigned long guard = 32;; guard *= 2) {
        Integer scaled = scaled_value(x, n, p, q, guard);
        std::string all = scaled.get_str();
        if (all.size() >= digits || guard >= 512) {
            if (scaled == 0)
                return "0"; // underflow beyond any reasonable guard
            const long long exp10 =
                static_cast<long long>(all.size()) - 1 - static_cast<long long>(guard);
            std::string sig = all.substr(0, digits);
            if (sig.size() < digits)
                sig += std::string(digits - sig.size(), '0');
            return format(sig, exp10);
        }
    }
}

} // namespace convexdiff
