#pragma once

#include "convexdiff/errors.hpp"
#include "convexdiff/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace convexdiff {

// Why a candidate sequence a_1, ..., a_n fails to be a convex set. Indices
// are 1-based throughout, matching the a_i notation used by the whole
// library: NotSorted(i) means a_i >= a_{i+1}, NotConvex(i) means the gap
// into a_i is at least the gap out of it.
struct ConvexityViolation {
    enum class Kind { Empty, NotSorted, NotConvex };
    Kind kind = Kind::Empty;
    std::size_t index = 0;
    std::string describe() const;
};

class ConvexityError : public ValidationError {
public:
    explicit ConvexityError(const ConvexityViolation& v)
        : ValidationError(v.describe()), violation_(v) {}
    const ConvexityViolation& violation() const { return violation_; }

private:
    ConvexityViolation violation_;
};

// Strictly increasing positive integer gaps g_1 < g_2 < ... < g_{n-1}: the
// canonical, translation-normalized form of an integer convex set. This is
// the unit the exhaustive enumerator works in.
class GapSequence {
public:
    static GapSequence validate(std::vector<long long> gaps); // throws ValidationError

    std::size_t size() const { return gaps_.size(); }
    long long operator[](std::size_t i) const { return gaps_[i]; } // 0-based
    const std::vector<long long>& values() const { return gaps_; }

    friend bool operator==(const GapSequence&, const GapSequence&) = default;

private:
    explicit GapSequence(std::vector<long long> gaps) : gaps_(std::move(gaps)) {}
    std::vector<long long> gaps_;
};

// A finite set a_1 < a_2 < ... < a_n whose consecutive differences strictly
// increase: a_i - a_{i-1} < a_{i+1} - a_i for 2 <= i <= n-1. Sets with one
// or two elements are vacuously convex. Immutable after validation and safe
// to share across threads.
class ConvexSet {
public:
    // Non-throwing check; reports the first violation in element order.
    static std::optional<ConvexityViolation> check(const std::vector<Rational>& elements);
    // Throws ConvexityError carrying the first violation.
    static ConvexSet validate(std::vector<Rational> elements);
    static ConvexSet from_gap_sequence(const GapSequence& gaps);

    std::size_t size() const { return elements_.size(); }
    const std::vector<Rational>& elements() const { return elements_; }

    // 1-based access: element(1) = a_1, ..., element(n) = a_n.
    const Rational& element(std::size_t i) const;

    // Consecutive differences a_{i+1} - a_i; strictly increasing. Needs at
    // least two elements.
    std::vector<Rational> gaps() const;

    // Multiplies by the least common denominator L, making every element
    // integral. Dilation by L > 0 preserves convexity and all representation
    // counts. Returns the dilated set and L.
    std::pair<ConvexSet, Integer> dilate_to_integers() const;

    ConvexSet translate(const Rational& shift) const;
    ConvexSet scale(const Rational& factor) const; // requires factor > 0

    friend bool operator==(const ConvexSet&, const ConvexSet&) = default;

private:
    explicit ConvexSet(std::vector<Rational> elements) : elements_(std::move(elements)) {}
    std::vector<Rational> elements_;
};

} // namespace convexdiff
