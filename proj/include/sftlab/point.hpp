#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sftlab/matrix.hpp"
#include "sftlab/rational.hpp"

namespace sft {

using Index = long long;

// Word helpers.
Word primitive_root(const Word& w);          // shortest word whose power is w
Word rotate_left(Word w, long long k = 1);   // (w1..wn) -> (w2..wn w1), k times
long long mod_floor(long long a, long long m);

// An eventually periodic bi-infinite sequence in canonical form:
//
//   ... u u u | w | v v v ...
//
// The primitive word u repeats to the left and ends at index offset-1,
// the center w occupies [offset, offset+|w|-1], and the primitive word v
// repeats to the right from index offset+|w|.
//
// Canonical form makes equality of sequences decidable as equality of the
// four fields.  The right tail is extended maximally (it absorbs center
// symbols and, past an empty center, left-tail symbols while the
// periodicity continues), then the left tail absorbs what remains of the
// center.  Bi-infinite periodic sequences are aligned at offset 0 with
// empty center.
class Point {
public:
    // Builds the canonical form of the described sequence.  Tails need not
    // be primitive and the center need not be minimal.
    Point(Word left, Word center, Word right, Index offset);

    Symbol at(Index i) const;
    Point shifted(Index n) const;  // y with y_i = x_{i+n}

    const Word& left() const { return left_; }
    const Word& center() const { return center_; }
    const Word& right() const { return right_; }
    Index offset() const { return offset_; }
    // First index of the right tail.
    Index right_start() const { return offset_ + static_cast<Index>(center_.size()); }

    bool periodic() const;          // shift-periodic as a bi-infinite sequence
    Index left_period() const { return static_cast<Index>(left_.size()); }
    Index right_period() const { return static_cast<Index>(right_.size()); }

    bool operator==(const Point& o) const = default;
    // Arbitrary total order, used for deterministic canonical sets.
    std::strong_ordering operator<=>(const Point& o) const;

    std::string to_string() const;
    static Point parse(const std::string& literal);

    // Constant point on the given symbol.
    static Point constant(Symbol s);
    // Bi-infinite repetition of the cycle word, phase w[0] at index `phase`.
    static Point cycle(const Word& w, Index phase = 0);

private:
    Word left_, center_, right_;
    Index offset_ = 0;
    void canonicalize();
};

// Every adjacent symbol pair is admissible under A, including both tail
// wraparounds and the seams.
bool admissible_point(const TransitionMatrix& A, const Point& x);

struct SmaleConstants {
    Rational lambda0 = Rational(1, 2);  // contraction rate, in (0,1)
    // eps chosen so "bracket defined <=> symbols at index 0 agree";
    // any value in (lambda0, 1] realizes that, we fix 1.
    Rational eps = 1;
};

SmaleConstants make_constants(const Rational& lambda0);

// lambda0^k with k the least |i| where x and z differ; 0 iff x == z.
Rational metric(const Point& x, const Point& z, const SmaleConstants& c);

// Defined iff x and z share the symbol at index 0: past of x, future of z.
bool bracket_defined(const Point& x, const Point& z);
Point bracket(const Point& x, const Point& z);  // throws Error when undefined

// y with y_i = x_{-i}; admissible over the transpose matrix.
Point reverse(const Point& x);

}  // namespace sft
