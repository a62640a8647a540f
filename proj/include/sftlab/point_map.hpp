#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sftlab/dynamics.hpp"
#include "sftlab/matrix.hpp"
#include "sftlab/point.hpp"

namespace sft {

// A homeomorphism between shift spaces with a finite description: sliding
// block codes, coordinate reversal, shift powers, the identity, and
// compositions of those.  A custom variant backed by an arbitrary callable
// exists for synthetic counterexamples; bundle files cannot express it.
class PointMap {
public:
    static PointMap identity(TransitionMatrix A);
    // X_A -> X_{A^t}, y_i = x_{-i}.
    static PointMap reversal(TransitionMatrix A);
    static PointMap shift_power(TransitionMatrix A, Index k);
    // y_i = rule(x_{i-memory .. i+anticipation}).  The rule must cover all
    // admissible words of length memory+anticipation+1 and produce
    // admissible transitions in the target; checked exhaustively here.
    static PointMap sliding_block(TransitionMatrix source, TransitionMatrix target, int memory,
                                  int anticipation, std::map<Word, Symbol> rule);
    // Right-to-left application: compose({f, g}) applies g first.
    static PointMap compose(std::vector<PointMap> chain);
    static PointMap custom(TransitionMatrix source, TransitionMatrix target,
                           std::function<Point(const Point&)> fn, std::string name);

    // The standard higher-block recoding X_A -> X_{A.two_block()} together
    // with its inverse.
    static std::pair<PointMap, PointMap> two_block_code(const TransitionMatrix& A);

    const TransitionMatrix& source() const;
    const TransitionMatrix& target() const;
    Point apply(const Point& x) const;
    // Total coding window: sum of memory+anticipation over sliding-block
    // stages; 0 for the other variants.
    int window() const;
    std::string describe() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit PointMap(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

// True iff h(phi(x)) = psi^{direction}(h(x)) on the family, phi and psi the
// time-one maps of the two dynamics.
bool is_conjugacy(const PointMap& h, int direction, const Dynamics& X, const Dynamics& Y,
                  const std::vector<Point>& family);

}  // namespace sft
