#include "convexdiff/construction.hpp"

#include "convexdiff/errors.hpp"

#include <string>
#include <utility>

namespace convexdiff {

Rational default_delta(unsigned long m) {
    if (m <= 2)
        return Rational(1);
    return Rational(Integer(1), Integer(2) * (m - 1));
}

ConstructionResult construct(unsigned long m, const Rational& delta) {
    if (m < 1)
        throw ValidationError("m must be at least 1");
    if (delta.sign() <= 0)
        throw ValidationError("delta must be positive, got " + delta.str());
    if (m >= 3) {
        Rational limit(Integer(1), Integer(m - 2));
        if (delta >= limit)
            throw ValidationError("delta must be below 1/" + std::to_string(m - 2) +
                                  " for m = " + std::to_string(m) + ", got " + delta.str());
    }

    // First half: a_k = (k-1) + delta*(k-2)(k-1)/2, 1 <= k <= m+1.
    std::vector<Rational> a;
    a.reserve(2 * m);
    for (unsigned long k = 1; k <= m + 1; ++k) {
        Integer km1(k - 1);
        Rational term = delta * Rational(Integer(k >= 2 ? k - 2 : 0) * km1, Integer(2));
        a.push_back(Rational(km1) + term);
    }
    const Rational d = a[m]; // a_{m+1} = m + delta*m(m-1)/2

    // Second half: a_{m+1+i} = a_{1+2i} + d, 1 <= i <= m-1.
    for (unsigned long i = 1; i <= m - 1; ++i)
        a.push_back(a[2 * i] + d);

    if (auto v = ConvexSet::check(a))
        throw InternalError("constructed set failed convexity: " + v->describe());
    return ConstructionResult{ConvexSet::validate(std::move(a)), d, delta, m};
}

ConstructionResult construct(unsigned long m) { return construct(m, default_delta(m)); }

GluedResult glue(unsigned long t, unsigned long copies) {
    if (t < 1)
        throw ValidationError("t must be at least 1");
    if (copies < 1)
        throw ValidationError("copies must be at least 1");

    ConstructionResult base = construct(t);
    const std::vector<Rational>& b = base.set.elements();
    const Rational gap_min = b[1] - b[0];                       // = 1 by construction
    const Rational gap_max = b[b.size() - 1] - b[b.size() - 2]; // largest internal gap

    std::vector<Rational> elements;
    elements.reserve(b.size() * copies);
    std::vector<Rational> rich;
    rich.reserve(copies);

    Integer scale(1);
    Rational offset(0);
    for (unsigned long j = 0; j < copies; ++j) {
        if (j > 0) {
            // Smallest integer scale whose first internal gap clears the
            // previous copy's last gap by more than one unit.
            Rational prev_last = Rational(scale) * gap_max;
            Integer next = ((prev_last + Rational(1)) / gap_min).floor() + 1;
            if (next <= scale)
                next = scale + 1; // scales must stay distinct
            Rational boundary = (prev_last + Rational(next) * gap_min) / Rational(2);
            offset = elements.back() + boundary - Rational(next) * b[0];
            scale = next;
        }
        Rational factor((scale));
        for (const Rational& x : b)
            elements.push_back(factor * x + offset);
        rich.push_back(factor * base.rich_difference);
    }

    if (auto v = ConvexSet::check(elements))
        throw InternalError("glued set failed convexity: " + v->describe());
    return GluedResult{ConvexSet::validate(std::move(elements)), t, copies, std::move(rich)};
}

} // namespace convexdiff
