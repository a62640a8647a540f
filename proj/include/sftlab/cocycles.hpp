#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sftlab/dynamics.hpp"
#include "sftlab/relations.hpp"

namespace sft {

// Integer-valued continuous function on the shift space: evaluation at x
// depends only on the window x_{-k..k}.  The table must cover every
// admissible word of length 2k+1; construction fails fast otherwise.
class LocallyConstantFn {
public:
    LocallyConstantFn(const TransitionMatrix& A, int radius, std::map<Word, long long> table);

    static LocallyConstantFn constant(const TransitionMatrix& A, long long value);

    int radius() const { return radius_; }
    const std::map<Word, long long>& table() const { return table_; }

    // f(shift^i(x)); throws MissingWordError on an uncovered window.
    long long eval(const Point& x, Index i = 0) const;

    long long max_abs() const;  // max |f| over the table

    bool operator==(const LocallyConstantFn& o) const {
        return radius_ == o.radius_ && table_ == o.table_;
    }

private:
    int radius_;
    std::map<Word, long long> table_;
};

// f^n(x): the orbit sum generating a one-cocycle.  n > 0 sums f over
// x, phi(x), ..., phi^{n-1}(x); n = 0 gives 0; n < 0 gives
// -sum_{i=n}^{-1} f(phi^i(x)).
long long power_sum(const LocallyConstantFn& f, const Dynamics& dyn, const Point& x, Index n);

struct CheckReport {
    bool pass = true;
    long long checked = 0;
    std::string counterexample;  // empty when pass
};

// Asserts f^n(x) + f^m(phi^n(x)) = f^{n+m}(x) for all x in the family and
// |n|, |m| <= bound.  The identity is a theorem for power sums; the report
// exists to catch corrupted sequences in mutation tests.
CheckReport check_one_cocycle(const LocallyConstantFn& f, const Dynamics& dyn,
                              const std::vector<Point>& family, Index bound);

// Two-cocycle d(x,z) = sum_{i>=0} (g(shift^i x) - g(shift^i z)); the sum is
// finite on asymptotic pairs (support bounded by witness level + window
// radius) and satisfies d(x,z) + d(z,w) = d(x,w) exactly.
class PotentialCocycle {
public:
    explicit PotentialCocycle(LocallyConstantFn g) : g_(std::move(g)) {}
    static PotentialCocycle zero(const TransitionMatrix& A);

    const LocallyConstantFn& potential() const { return g_; }
    long long eval(const AsymptoticPair& pair) const;
    long long eval(const Point& x, const Point& z) const;  // makes the pair first

    // True when the potential is a constant table, which forces d == 0.
    // (Non-constant potentials can also vanish identically; callers decide
    // zero-ness on a family when that matters.)
    bool structurally_zero() const;

private:
    LocallyConstantFn g_;
};

// The orbit-cocycle compatibility identity between a function c and a
// two-cocycle d:  c^m(x) + d(phi^m x, phi^m z) = c^m(z) + d(x, z).
// Checks the base form (m = 1), the inverse form (m = -1), and the
// m-indexed forms for |m| <= bound, reporting any divergence among them.
struct ConditionOneReport {
    bool pass = true;
    long long checked = 0;
    std::string counterexample;
    // Per-formulation verdicts: base (m=1), inverse (m=-1), indexed (|m|<=bound).
    bool base_pass = true;
    bool inverse_pass = true;
    bool indexed_pass = true;
};

ConditionOneReport check_condition_1(const LocallyConstantFn& c, const PotentialCocycle& d,
                                     const Dynamics& dyn, const std::vector<AsymptoticPair>& pairs,
                                     Index bound = 5);

}  // namespace sft
