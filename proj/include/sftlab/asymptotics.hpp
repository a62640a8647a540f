#pragma once

#include <vector>

#include "sftlab/matrix.hpp"
#include "sftlab/point.hpp"

namespace sft {

// All points fixed by shift^p: one point per admissible cycle of length p
// with phase, so the count equals trace(A^p).  Canonically sorted.
std::vector<Point> enumerate_periodic(const TransitionMatrix& A, int p);
// Serial reference for the (possibly parallel) enumerate_periodic.
std::vector<Point> enumerate_periodic_serial(const TransitionMatrix& A, int p);
// Union over p = 1..max_p, deduplicated, canonically sorted.
std::vector<Point> periodic_points_upto(const TransitionMatrix& A, int max_p);

// Limit data of an (automatically asymptotically periodic) point.
struct LimitData {
    Point forward_limit;   // lim shift^{pk}(x): periodic extension of the right tail
    Index forward_period;  // its least period
    Point backward_limit;
    Index backward_period;
    Index least_asymptotic_period;  // lcm of the two
};

// The periodic point agreeing with x on its whole right tail.
Point forward_limit_point(const Point& x);
// Dually from the left tail.
Point backward_limit_point(const Point& x);

// Least p > 0 with (shift^p(x), x) asymptotic; equals
// lcm(right tail period, left tail period).
Index least_asymptotic_period(const Point& x);

LimitData limit_data(const Point& x);

// omega(x): the forward-period orbit of the forward limit point, sorted.
std::vector<Point> omega_limit(const Point& x);
// alpha(x): the backward-period orbit of the backward limit point, sorted.
std::vector<Point> alpha_limit(const Point& x);

// Independent oracle: collects the periodic shadows of shift^n(x) for
// n in [horizon/2, horizon] by extending each shifted point's right tail,
// without consulting forward_limit_point / omega_limit.
// Requires horizon > 2*center span + 4*lcm(tail periods).
std::vector<Point> brute_force_omega(const Point& x, Index horizon);
std::vector<Point> brute_force_alpha(const Point& x, Index horizon);

// True iff x lies in omega(x) and alpha(x); equals "x is periodic".
bool classify_recurrent(const Point& x);

}  // namespace sft
