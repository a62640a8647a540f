#include "sftlab/point_map.hpp"

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

struct PointMap::Impl {
    enum class Kind { Identity, Reversal, ShiftPower, SlidingBlock, Composition, Custom };
    Kind kind;
    TransitionMatrix source;
    TransitionMatrix target;
    Index shift_k = 0;
    int memory = 0, anticipation = 0;
    std::map<Word, Symbol> rule;
    std::vector<PointMap> chain;  // applied right to left
    std::function<Point(const Point&)> fn;
    std::string name;
};

PointMap PointMap::identity(TransitionMatrix A) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::Identity;
    impl->source = A;
    impl->target = std::move(A);
    return PointMap(std::move(impl));
}

PointMap PointMap::reversal(TransitionMatrix A) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::Reversal;
    impl->target = A.transpose();
    impl->source = std::move(A);
    return PointMap(std::move(impl));
}

PointMap PointMap::shift_power(TransitionMatrix A, Index k) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::ShiftPower;
    impl->source = A;
    impl->target = std::move(A);
    impl->shift_k = k;
    return PointMap(std::move(impl));
}

PointMap PointMap::sliding_block(TransitionMatrix source, TransitionMatrix target, int memory,
                                 int anticipation, std::map<Word, Symbol> rule) {
    if (memory < 0 || anticipation < 0) throw Error("memory and anticipation must be nonnegative");
    const int len = memory + anticipation + 1;
    for (const auto& w : source.words(len)) {
        auto it = rule.find(w);
        if (it == rule.end())
            throw MissingWordError("sliding block rule misses word '" + word_to_string(w) + "'");
        if (it->second < 1 || it->second > target.size())
            throw InadmissibleImageError("rule image out of range for word '" + word_to_string(w) +
                                         "'");
    }
    // Overlapping windows must map to admissible transitions.
    for (const auto& w : source.words(len + 1)) {
        Word a(w.begin(), w.end() - 1), b(w.begin() + 1, w.end());
        if (!target.admissible(rule.at(a), rule.at(b)))
            throw InadmissibleImageError("rule produces forbidden transition on word '" +
                                         word_to_string(w) + "'");
    }
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::SlidingBlock;
    impl->source = std::move(source);
    impl->target = std::move(target);
    impl->memory = memory;
    impl->anticipation = anticipation;
    impl->rule = std::move(rule);
    return PointMap(std::move(impl));
}

PointMap PointMap::compose(std::vector<PointMap> chain) {
    if (chain.empty()) throw Error("composition needs at least one map");
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!(chain[i].source() == chain[i + 1].target()))
            throw Error("composition chain matrices do not match");
    }
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::Composition;
    impl->source = chain.back().source();
    impl->target = chain.front().target();
    impl->chain = std::move(chain);
    return PointMap(std::move(impl));
}

PointMap PointMap::custom(TransitionMatrix source, TransitionMatrix target,
                          std::function<Point(const Point&)> fn, std::string name) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::Custom;
    impl->source = std::move(source);
    impl->target = std::move(target);
    impl->fn = std::move(fn);
    impl->name = std::move(name);
    return PointMap(std::move(impl));
}

std::pair<PointMap, PointMap> PointMap::two_block_code(const TransitionMatrix& A) {
    auto blocks = A.two_block_symbols();
    auto B = A.two_block();
    std::map<Word, Symbol> up;
    for (size_t i = 0; i < blocks.size(); ++i) up[blocks[i]] = static_cast<Symbol>(i + 1);
    std::map<Word, Symbol> down;
    for (size_t i = 0; i < blocks.size(); ++i) down[{static_cast<Symbol>(i + 1)}] = blocks[i][0];
    PointMap code = sliding_block(A, B, 0, 1, std::move(up));
    PointMap inv = sliding_block(B, A, 0, 0, std::move(down));
    return {std::move(code), std::move(inv)};
}

const TransitionMatrix& PointMap::source() const { return impl_->source; }
const TransitionMatrix& PointMap::target() const { return impl_->target; }

Point PointMap::apply(const Point& x) const {
    switch (impl_->kind) {
        case Impl::Kind::Identity:
            return x;
        case Impl::Kind::Reversal:
            return reverse(x);
        case Impl::Kind::ShiftPower:
            return x.shifted(impl_->shift_k);
        case Impl::Kind::Custom:
            return impl_->fn(x);
        case Impl::Kind::Composition: {
            Point y = x;
            for (auto it = impl_->chain.rbegin(); it != impl_->chain.rend(); ++it) y = it->apply(y);
            return y;
        }
        case Impl::Kind::SlidingBlock: {
            const int m = impl_->memory, a = impl_->anticipation;
            auto code = [&](Index i) {
                Word w(m + a + 1);
                for (int t = -m; t <= a; ++t) w[t + m] = x.at(i + t);
                auto it = impl_->rule.find(w);
                if (it == impl_->rule.end())
                    throw InadmissibleImageError("no rule for window '" + word_to_string(w) + "'");
                return it->second;
            };
            // y is left-tail periodic up to l' - 1 and right-tail periodic
            // from r': the coding window then sits inside one tail of x.
            const Index l2 = x.offset() - a;
            const Index r2 = x.right_start() + m;
            Word u(x.left_period()), v(x.right_period()), w(r2 - l2);
            for (Index t = 0; t < x.left_period(); ++t) u[t] = code(l2 - x.left_period() + t);
            for (Index t = 0; t < x.right_period(); ++t) v[t] = code(r2 + t);
            for (Index t = 0; t < r2 - l2; ++t) w[t] = code(l2 + t);
            return Point(u, w, v, l2);
        }
    }
    throw Error("unreachable");
}

int PointMap::window() const {
    switch (impl_->kind) {
        case Impl::Kind::SlidingBlock:
            return impl_->memory + impl_->anticipation;
        case Impl::Kind::Composition: {
            int w = 0;
            for (const auto& f : impl_->chain) w += f.window();
            return w;
        }
        default:
            return 0;
    }
}

std::string PointMap::describe() const {
    switch (impl_->kind) {
        case Impl::Kind::Identity:
            return "identity";
        case Impl::Kind::Reversal:
            return "reversal";
        case Impl::Kind::ShiftPower:
            return "shift^" + std::to_string(impl_->shift_k);
        case Impl::Kind::SlidingBlock: {
            std::ostringstream os;
            os << "sliding_block(memory=" << impl_->memory
               << ", anticipation=" << impl_->anticipation << ")";
            return os.str();
        }
        case Impl::Kind::Composition: {
            std::string s = "compose(";
            for (size_t i = 0; i < impl_->chain.size(); ++i) {
                if (i) s += " . ";
                s += impl_->chain[i].describe();
            }
            return s + ")";
        }
        case Impl::Kind::Custom:
            return impl_->name;
    }
    return "?";
}

bool is_conjugacy(const PointMap& h, int direction, const Dynamics& X, const Dynamics& Y,
                  const std::vector<Point>& family) {
    for (const auto& x : family) {
        if (!(h.apply(X.apply(x, 1)) == Y.apply(h.apply(x), direction))) return false;
    }
    return true;
}

}  // namespace sft
