#include "sftlab/cocycles.hpp"

#include <algorithm>
#include <sstream>

#include "sftlab/errors.hpp"

namespace sft {

namespace {

std::string word_to_string(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

}  // namespace

LocallyConstantFn::LocallyConstantFn(const TransitionMatrix& A, int radius,
                                     std::map<Word, long long> table)
    : radius_(radius), table_(std::move(table)) {
    if (radius < 0) throw Error("window radius must be nonnegative");
    for (const auto& w : A.words(2 * radius + 1)) {
        if (table_.find(w) == table_.end())
            throw MissingWordError("table misses admissible word '" + word_to_string(w) + "'");
    }
    for (const auto& [w, v] : table_) {
        if (static_cast<int>(w.size()) != 2 * radius + 1)
            throw Error("table word '" + word_to_string(w) + "' has wrong length");
    }
}

LocallyConstantFn LocallyConstantFn::constant(const TransitionMatrix& A, long long value) {
    std::map<Word, long long> t;
    for (Symbol s = 1; s <= A.size(); ++s) t[{s}] = value;
    return LocallyConstantFn(A, 0, std::move(t));
}

long long LocallyConstantFn::eval(const Point& x, Index i) const {
    Word w(2 * radius_ + 1);
    for (int t = -radius_; t <= radius_; ++t) w[t + radius_] = x.at(i + t);
    auto it = table_.find(w);
    if (it == table_.end())
        throw MissingWordError("no table entry for window '" + word_to_string(w) + "'");
    return it->second;
}

long long LocallyConstantFn::max_abs() const {
    long long m = 0;
    for (const auto& [w, v] : table_) m = std::max(m, v < 0 ? -v : v);
    return m;
}

long long power_sum(const LocallyConstantFn& f, const Dynamics& dyn, const Point& x, Index n) {
    long long acc = 0;
    if (n > 0) {
        for (Index i = 0; i < n; ++i) acc += f.eval(dyn.apply(x, i));
    } else if (n < 0) {
        for (Index i = n; i <= -1; ++i) acc -= f.eval(dyn.apply(x, i));
    }
    return acc;
}

CheckReport check_one_cocycle(const LocallyConstantFn& f, const Dynamics& dyn,
                              const std::vector<Point>& family, Index bound) {
    CheckReport rep;
    for (const auto& x : family) {
        for (Index n = -bound; n <= bound; ++n) {
            for (Index m = -bound; m <= bound; ++m) {
                long long lhs = power_sum(f, dyn, x, n) + power_sum(f, dyn, dyn.apply(x, n), m);
                long long rhs = power_sum(f, dyn, x, n + m);
                ++rep.checked;
                if (lhs != rhs && rep.pass) {
                    rep.pass = false;
                    std::ostringstream os;
                    os << "f_n+f_m(phi^n) != f_{n+m} at n=" << n << " m=" << m
                       << " x=" << x.to_string() << " (" << lhs << " != " << rhs << ")";
                    rep.counterexample = os.str();
                }
            }
        }
    }
    return rep;
}

PotentialCocycle PotentialCocycle::zero(const TransitionMatrix& A) {
    return PotentialCocycle(LocallyConstantFn::constant(A, 0));
}

long long PotentialCocycle::eval(const AsymptoticPair& pair) const {
    // Windows of g touching the disagreement region lie in [0, level+k);
    // everything further right cancels term by term.
    long long acc = 0;
    const Index top = pair.level + g_.radius();
    for (Index i = 0; i < top; ++i) acc += g_.eval(pair.x, i) - g_.eval(pair.z, i);
    return acc;
}

long long PotentialCocycle::eval(const Point& x, const Point& z) const {
    return eval(AsymptoticPair::make(x, z));
}

bool PotentialCocycle::structurally_zero() const {
    const auto& t = g_.table();
    if (t.empty()) return true;
    long long v = t.begin()->second;
    return std::all_of(t.begin(), t.end(), [&](const auto& kv) { return kv.second == v; });
}

ConditionOneReport check_condition_1(const LocallyConstantFn& c, const PotentialCocycle& d,
                                     const Dynamics& dyn, const std::vector<AsymptoticPair>& pairs,
                                     Index bound) {
    ConditionOneReport rep;
    auto record = [&](bool& slot, Index m, const AsymptoticPair& p, long long lhs, long long rhs) {
        slot = false;
        if (rep.pass) {
            rep.pass = false;
            std::ostringstream os;
            os << "c^m(x)+d(phi^m x,phi^m z) != c^m(z)+d(x,z) at m=" << m
               << " x=" << p.x.to_string() << " z=" << p.z.to_string() << " (" << lhs
               << " != " << rhs << ")";
            rep.counterexample = os.str();
        }
    };
    for (const auto& p : pairs) {
        const long long base_d = d.eval(p);
        for (Index m = -bound; m <= bound; ++m) {
            auto shifted = AsymptoticPair::make(dyn.apply(p.x, m), dyn.apply(p.z, m));
            long long lhs = power_sum(c, dyn, p.x, m) + d.eval(shifted);
            long long rhs = power_sum(c, dyn, p.z, m) + base_d;
            ++rep.checked;
            if (lhs == rhs) continue;
            if (m == 1)
                record(rep.base_pass, m, p, lhs, rhs);
            else if (m == -1)
                record(rep.inverse_pass, m, p, lhs, rhs);
            else
                record(rep.indexed_pass, m, p, lhs, rhs);
        }
    }
    return rep;
}

}  // namespace sft
