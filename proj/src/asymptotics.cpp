#include "sftlab/asymptotics.hpp"

#include <algorithm>
#include <numeric>

#include "sftlab/errors.hpp"
#include "sftlab/relations.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sft {

namespace {

// Admissible cyclic words of length p starting with the given symbol.
void collect_cycles(const TransitionMatrix& A, int p, Symbol first, Word& cur,
                    std::vector<Point>& out) {
    if (static_cast<int>(cur.size()) == p) {
        if (A.admissible(cur.back(), first)) out.push_back(Point::cycle(cur));
        return;
    }
    for (Symbol s = 1; s <= A.size(); ++s) {
        if (!A.admissible(cur.back(), s)) continue;
        cur.push_back(s);
        collect_cycles(A, p, first, cur, out);
        cur.pop_back();
    }
}

std::vector<Point> cycles_from(const TransitionMatrix& A, int p, Symbol first) {
    std::vector<Point> out;
    Word cur{first};
    collect_cycles(A, p, first, cur, out);
    return out;
}

}  // namespace

std::vector<Point> enumerate_periodic_serial(const TransitionMatrix& A, int p) {
    std::vector<Point> out;
    for (Symbol s = 1; s <= A.size(); ++s) {
        auto part = cycles_from(A, p, s);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Point> enumerate_periodic(const TransitionMatrix& A, int p) {
    std::vector<std::vector<Point>> buckets(A.size());
#pragma omp parallel for schedule(dynamic)
    for (int s = 1; s <= A.size(); ++s) buckets[s - 1] = cycles_from(A, p, s);
    std::vector<Point> out;
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Point> periodic_points_upto(const TransitionMatrix& A, int max_p) {
    std::vector<Point> out;
    for (int p = 1; p <= max_p; ++p) {
        auto part = enumerate_periodic(A, p);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Point forward_limit_point(const Point& x) {
    // Periodic extension of the right tail, keeping its phase.
    Word v(x.right_period());
    for (Index t = 0; t < x.right_period(); ++t) v[t] = x.at(x.right_start() + t);
    return Point::cycle(v, x.right_start());
}

Point backward_limit_point(const Point& x) {
    Word u(x.left_period());
    for (Index t = 0; t < x.left_period(); ++t) u[t] = x.at(x.offset() - x.left_period() + t);
    return Point::cycle(u, x.offset() - x.left_period());
}

Index least_asymptotic_period(const Point& x) {
    return std::lcm(x.left_period(), x.right_period());
}

LimitData limit_data(const Point& x) {
    return LimitData{forward_limit_point(x), x.right_period(), backward_limit_point(x),
                     x.left_period(), least_asymptotic_period(x)};
}

namespace {

std::vector<Point> orbit_of(const Point& base, Index period) {
    std::vector<Point> out;
    out.reserve(static_cast<size_t>(period));
    for (Index j = 0; j < period; ++j) out.push_back(base.shifted(j));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<Point> omega_limit(const Point& x) {
    return orbit_of(forward_limit_point(x), x.right_period());
}

std::vector<Point> alpha_limit(const Point& x) {
    return orbit_of(backward_limit_point(x), x.left_period());
}

namespace {

Index horizon_bound(const Point& x) {
    return 2 * static_cast<Index>(x.center().size()) +
           4 * std::lcm(x.left_period(), x.right_period());
}

// The periodic point whose right tail pattern matches y's, built from the
// raw fields only.
Point right_tail_shadow(const Point& y) {
    Word v(y.right().size());
    for (size_t t = 0; t < v.size(); ++t)
        v[t] = y.right()[t];
    return Point::cycle(v, y.right_start());
}

Point left_tail_shadow(const Point& y) {
    Word u(y.left().size());
    Index start = y.offset() - static_cast<Index>(u.size());
    for (size_t t = 0; t < u.size(); ++t)
        u[t] = y.left()[t];
    return Point::cycle(u, start);
}

}  // namespace

std::vector<Point> brute_force_omega(const Point& x, Index horizon) {
    if (horizon <= horizon_bound(x))
        throw HorizonTooSmallError("horizon must exceed " + std::to_string(horizon_bound(x)));
    std::vector<Point> acc;
    for (Index n = horizon / 2; n <= horizon; ++n)
        acc.push_back(right_tail_shadow(x.shifted(n)));
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return acc;
}

std::vector<Point> brute_force_alpha(const Point& x, Index horizon) {
    if (horizon <= horizon_bound(x))
        throw HorizonTooSmallError("horizon must exceed " + std::to_string(horizon_bound(x)));
    std::vector<Point> acc;
    for (Index n = horizon / 2; n <= horizon; ++n)
        acc.push_back(left_tail_shadow(x.shifted(-n)));
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return acc;
}

bool classify_recurrent(const Point& x) {
    auto om = omega_limit(x);
    auto al = alpha_limit(x);
    return std::binary_search(om.begin(), om.end(), x) &&
           std::binary_search(al.begin(), al.end(), x);
}

}  // namespace sft
