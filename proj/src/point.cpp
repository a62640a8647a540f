#include "sftlab/point.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

#include "sftlab/errors.hpp"

namespace sft {

long long mod_floor(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

Word primitive_root(const Word& w) {
    const auto n = static_cast<long long>(w.size());
    for (long long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (long long i = d; i < n && ok; ++i) ok = (w[i] == w[i - d]);
        if (ok) return Word(w.begin(), w.begin() + d);
    }
    return w;
}

Word rotate_left(Word w, long long k) {
    if (w.empty()) return w;
    k = mod_floor(k, static_cast<long long>(w.size()));
    std::rotate(w.begin(), w.begin() + k, w.end());
    return w;
}

namespace {

// Coordinate access on a raw (not yet canonical) representation.
struct RawRep {
    const Word& u;
    const Word& w;
    const Word& v;
    Index l;
    Symbol at(Index i) const {
        Index r = l + static_cast<Index>(w.size());
        if (i >= r) return v[mod_floor(i - r, static_cast<long long>(v.size()))];
        if (i >= l) return w[i - l];
        return u[mod_floor(i - l, static_cast<long long>(u.size()))];
    }
};

}  // namespace

Point::Point(Word left, Word center, Word right, Index offset)
    : left_(std::move(left)), center_(std::move(center)), right_(std::move(right)), offset_(offset) {
    if (left_.empty() || right_.empty()) throw Error("point tails must be nonempty");
    canonicalize();
}

void Point::canonicalize() {
    left_ = primitive_root(left_);
    right_ = primitive_root(right_);
    RawRep raw{left_, center_, right_, offset_};

    // Bi-infinite periodic sequences are detected first; the right-tail
    // extension below would not terminate on them.  Primitive tails of a
    // periodic sequence have equal length, and p-periodicity only needs
    // checking across the seam window.
    if (left_.size() == right_.size()) {
        const Index p = static_cast<Index>(right_.size());
        bool periodic = true;
        for (Index i = offset_ - p; i < offset_ + static_cast<Index>(center_.size()) && periodic; ++i)
            periodic = (raw.at(i) == raw.at(i + p));
        if (periodic) {
            Word v(p), u(p);
            for (Index t = 0; t < p; ++t) {
                v[t] = raw.at(t);
                u[t] = raw.at(t - p);
            }
            left_ = std::move(u);
            right_ = std::move(v);
            center_.clear();
            offset_ = 0;
            return;
        }
    }

    // Extend the right tail maximally leftward.  Terminates within
    // |w| + |u| + |v| steps for non-periodic sequences (two maximal
    // periodicities overlapping further would force global periodicity).
    Index r = offset_ + static_cast<Index>(center_.size());
    Word v = right_;
    long long guard = static_cast<long long>(center_.size() + left_.size() + right_.size()) + 2;
    while (raw.at(r - 1) == v.back()) {
        std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
        --r;
        if (--guard < 0) throw Error("canonicalize: right extension failed to terminate");
    }

    Word u, w;
    Index l;
    if (r <= offset_) {
        // Right tail ate into the old left tail; re-phase u to end at r-1.
        const Index pu = static_cast<Index>(left_.size());
        u.resize(pu);
        for (Index t = 0; t < pu; ++t) u[t] = raw.at(r - pu + t);
        l = r;
    } else {
        u = left_;
        w.assign(center_.begin(), center_.begin() + (r - offset_));
        l = offset_;
        // Absorb center symbols into the left tail while the periodicity
        // continues; the right tail keeps everything from r on.
        size_t cut = 0;
        while (cut < w.size() && w[cut] == u[0]) {
            u = rotate_left(u);
            ++cut;
            ++l;
        }
        w.erase(w.begin(), w.begin() + cut);
    }
    left_ = std::move(u);
    center_ = std::move(w);
    right_ = std::move(v);
    offset_ = l;
}

Symbol Point::at(Index i) const {
    return RawRep{left_, center_, right_, offset_}.at(i);
}

Point Point::shifted(Index n) const {
    return Point(left_, center_, right_, offset_ - n);
}

bool Point::periodic() const {
    if (!center_.empty()) return false;
    return *this == shifted(static_cast<Index>(right_.size()));
}

std::strong_ordering Point::operator<=>(const Point& o) const {
    if (auto c = left_ <=> o.left_; c != 0) return c;
    if (auto c = center_ <=> o.center_; c != 0) return c;
    if (auto c = right_ <=> o.right_; c != 0) return c;
    return offset_ <=> o.offset_;
}

static void append_word(std::ostringstream& os, const Word& w) {
    os << '(';
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    os << ')';
}

std::string Point::to_string() const {
    std::ostringstream os;
    os << "left=";
    append_word(os, left_);
    os << " center=";
    append_word(os, center_);
    os << '@' << offset_ << " right=";
    append_word(os, right_);
    return os.str();
}

namespace {

Word parse_word(const std::string& s, size_t& pos, const std::string& literal) {
    if (pos >= s.size() || s[pos] != '(') throw ParseError("expected '(' in point literal '" + literal + "'");
    ++pos;
    Word w;
    while (pos < s.size() && s[pos] != ')') {
        size_t end = pos;
        bool neg = s[end] == '-';
        if (neg) ++end;
        size_t start = end;
        while (end < s.size() && isdigit(static_cast<unsigned char>(s[end]))) ++end;
        if (end == start) throw ParseError("expected symbol in point literal '" + literal + "'");
        w.push_back(std::stoi(s.substr(pos, end - pos)));
        pos = end;
        if (pos < s.size() && s[pos] == ',') ++pos;
    }
    if (pos >= s.size()) throw ParseError("unterminated word in point literal '" + literal + "'");
    ++pos;  // ')'
    return w;
}

void expect(const std::string& s, size_t& pos, const std::string& token, const std::string& literal) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (s.compare(pos, token.size(), token) != 0)
        throw ParseError("expected '" + token + "' in point literal '" + literal + "'");
    pos += token.size();
}

}  // namespace

Point Point::parse(const std::string& literal) {
    size_t pos = 0;
    expect(literal, pos, "left=", literal);
    Word u = parse_word(literal, pos, literal);
    expect(literal, pos, "center=", literal);
    Word w = parse_word(literal, pos, literal);
    expect(literal, pos, "@", literal);
    size_t end = pos;
    if (end < literal.size() && (literal[end] == '-' || literal[end] == '+')) ++end;
    while (end < literal.size() && isdigit(static_cast<unsigned char>(literal[end]))) ++end;
    if (end == pos) throw ParseError("expected offset in point literal '" + literal + "'");
    Index l = std::stoll(literal.substr(pos, end - pos));
    pos = end;
    expect(literal, pos, "right=", literal);
    Word v = parse_word(literal, pos, literal);
    while (pos < literal.size() && literal[pos] == ' ') ++pos;
    if (pos != literal.size()) throw ParseError("trailing text in point literal '" + literal + "'");
    return Point(u, w, v, l);
}

Point Point::constant(Symbol s) {
    return Point({s}, {}, {s}, 0);
}

Point Point::cycle(const Word& w, Index phase) {
    if (w.empty()) throw Error("cycle word must be nonempty");
    return Point(w, {}, w, phase);
}

bool admissible_point(const TransitionMatrix& A, const Point& x) {
    for (Symbol s : x.left())
        if (s < 1 || s > A.size()) return false;
    for (Symbol s : x.center())
        if (s < 1 || s > A.size()) return false;
    for (Symbol s : x.right())
        if (s < 1 || s > A.size()) return false;
    if (!A.admissible_cycle(x.left()) || !A.admissible_cycle(x.right())) return false;
    // The seam region: from one left-tail period before the center to one
    // right-tail period after it.
    Index lo = x.offset() - x.left_period();
    Index hi = x.right_start() + x.right_period();
    for (Index i = lo; i < hi; ++i)
        if (!A.admissible(x.at(i), x.at(i + 1))) return false;
    return true;
}

SmaleConstants make_constants(const Rational& lambda0) {
    if (!(lambda0 > 0 && lambda0 < 1)) throw Error("lambda0 must lie in (0,1)");
    return SmaleConstants{lambda0, 1};
}

namespace {

// Least i >= 0 with x_i != z_i, scanning rightward; nullopt when the
// sequences agree on [0, inf).  Bounded: past max(right starts) both are
// periodic with period lcm, so one full window decides.
std::optional<Index> first_diff_right(const Point& x, const Point& z) {
    Index m = std::max({x.right_start(), z.right_start(), Index{0}});
    Index p = std::lcm(x.right_period(), z.right_period());
    for (Index i = 0; i < m + p; ++i)
        if (x.at(i) != z.at(i)) return i;
    return std::nullopt;
}

std::optional<Index> first_diff_left(const Point& x, const Point& z) {
    Index m = std::min({x.offset(), z.offset(), Index{0}});
    Index p = std::lcm(x.left_period(), z.left_period());
    for (Index i = -1; i >= m - p; --i)
        if (x.at(i) != z.at(i)) return -i;
    return std::nullopt;
}

}  // namespace

Rational metric(const Point& x, const Point& z, const SmaleConstants& c) {
    if (x == z) return 0;
    auto r = first_diff_right(x, z);
    auto l = first_diff_left(x, z);
    Index k;
    if (r && l)
        k = std::min(*r, *l);
    else if (r)
        k = *r;
    else if (l)
        k = *l;
    else
        throw Error("metric: distinct canonical points with no differing coordinate");
    return rational_pow(c.lambda0, k);
}

bool bracket_defined(const Point& x, const Point& z) {
    return x.at(0) == z.at(0);
}

Point bracket(const Point& x, const Point& z) {
    if (!bracket_defined(x, z)) throw Error("bracket undefined: symbols at index 0 differ");
    // y_i = x_i for i <= 0, z_i for i >= 0.
    Index lo = std::min(x.offset(), Index{0});
    Index hi = std::max(z.right_start(), Index{1});
    Word center;
    center.reserve(static_cast<size_t>(hi - lo));
    for (Index i = lo; i < hi; ++i) center.push_back(i <= 0 ? x.at(i) : z.at(i));
    // Left tail of x re-phased to end at lo-1; right tail of z starts at hi.
    Word u(x.left_period()), v(z.right_period());
    for (Index t = 0; t < x.left_period(); ++t) u[t] = x.at(lo - x.left_period() + t);
    for (Index t = 0; t < z.right_period(); ++t) v[t] = z.at(hi + t);
    return Point(u, center, v, lo);
}

Point reverse(const Point& x) {
    // y_i = x_{-i}: reversed right tail becomes the left tail and vice versa.
    Index r = x.right_start();
    Word u(x.right().rbegin(), x.right().rend());
    Word w(x.center().rbegin(), x.center().rend());
    Word v(x.left().rbegin(), x.left().rend());
    // x's center [l, r-1] maps to [-(r-1), -l]; empty centers keep the seam.
    return Point(u, w, v, 1 - r);
}

}  // namespace sft
