#include "convexdiff/convex_set.hpp"

#include <stdexcept>
#include <string>

namespace convexdiff {

std::string ConvexityViolation::describe() const {
    switch (kind) {
    case Kind::Empty:
        return "Empty: a convex set needs at least one element";
    case Kind::NotSorted:
        return "NotSorted(" + std::to_string(index) + "): a_" + std::to_string(index) +
               " >= a_" + std::to_string(index + 1);
    case Kind::NotConvex:
        return "NotConvex(" + std::to_string(index) + "): a_" + std::to_string(index) +
               " - a_" + std::to_string(index - 1) + " >= a_" + std::to_string(index + 1) +
               " - a_" + std::to_string(index);
    }
    return "unknown violation";
}

GapSequence GapSequence::validate(std::vector<long long> gaps) {
    long long prev = 0;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (gaps[i] <= prev) {
            throw ValidationError("gap sequence must be strictly increasing and positive: g_" +
                                  std::to_string(i + 1) + " = " + std::to_string(gaps[i]) +
                                  (i == 0 ? " is not positive"
                                          : " does not exceed g_" + std::to_string(i)));
        }
        prev = gaps[i];
    }
    return GapSequence(std::move(gaps));
}

std::optional<ConvexityViolation> ConvexSet::check(const std::vector<Rational>& elements) {
    const std::size_t n = elements.size();
    if (n == 0)
        return ConvexityViolation{ConvexityViolation::Kind::Empty, 0};
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (elements[i] >= elements[i + 1])
            return ConvexityViolation{ConvexityViolation::Kind::NotSorted, i + 1};
    }
    // a_i - a_{i-1} < a_{i+1} - a_i for 2 <= i <= n-1 (1-based).
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (elements[i] - elements[i - 1] >= elements[i + 1] - elements[i])
            return ConvexityViolation{ConvexityViolation::Kind::NotConvex, i + 1};
    }
    return std::nullopt;
}

ConvexSet ConvexSet::validate(std::vector<Rational> elements) {
    if (auto v = check(elements))
        throw ConvexityError(*v);
    return ConvexSet(std::move(elements));
}

ConvexSet ConvexSet::from_gap_sequence(const GapSequence& gaps) {
    std::vector<Rational> elements;
    elements.reserve(gaps.size() + 1);
    Rational acc; // a_1 = 0
    elements.push_back(acc);
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        acc += Rational(static_cast<long long>(gaps[i]));
        elements.push_back(acc);
    }
    return ConvexSet(std::move(elements)); // strictly increasing gaps, no recheck needed
}

const Rational& ConvexSet::element(std::size_t i) const {
    if (i < 1 || i > elements_.size())
        throw std::out_of_range("element index " + std::to_string(i) + " outside 1.." +
                                std::to_string(elements_.size()));
    return elements_[i - 1];
}

std::vector<Rational> ConvexSet::gaps() const {
    if (elements_.size() < 2)
        throw ValidationError("gap sequence needs at least two elements");
    std::vector<Rational> out;
    out.reserve(elements_.size() - 1);
    for (std::size_t i = 0; i + 1 < elements_.size(); ++i)
        out.push_back(elements_[i + 1] - elements_[i]);
    return out;
}

std::pair<ConvexSet, Integer> ConvexSet::dilate_to_integers() const {
    Integer lcd = lcm_of_denominators(elements_);
    if (lcd == 1)
        return {*this, lcd};
    Rational factor((lcd));
    std::vector<Rational> scaled;
    scaled.reserve(elements_.size());
    for (const Rational& a : elements_)
        scaled.push_back(a * factor);
    return {ConvexSet(std::move(scaled)), lcd};
}

ConvexSet ConvexSet::translate(const Rational& shift) const {
    std::vector<Rational> moved;
    moved.reserve(elements_.size());
    for (const Rational& a : elements_)
        moved.push_back(a + shift);
    return ConvexSet(std::move(moved));
}

ConvexSet ConvexSet::scale(const Rational& factor) const {
    if (factor.sign() <= 0)
        throw ValidationError("scale factor must be positive, got " + factor.str());
    std::vector<Rational> scaled;
    scaled.reserve(elements_.size());
    for (const Rational& a : elements_)
        scaled.push_back(a * factor);
    return ConvexSet(std::move(scaled));
}

} // namespace convexdiff
