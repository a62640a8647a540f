#include "sftlab/relations.hpp"

#include <algorithm>
#include <numeric>

#include "sftlab/errors.hpp"

namespace sft {

std::optional<Index> stable_level(const Point& x, const Point& z) {
    // Eventual right sequences must share their primitive period.
    if (x.right_period() != z.right_period()) return std::nullopt;
    const Index p = x.right_period();
    const Index m = std::max({x.right_start(), z.right_start(), Index{0}});
    for (Index i = m; i < m + p; ++i)
        if (x.at(i) != z.at(i)) return std::nullopt;
    // Tails merge from m on; locate the last disagreement below m.  Below
    // min(offsets) both sequences are periodic with period q, so one full
    // q-window with no disagreement settles everything further left.
    const Index q = std::lcm(x.left_period(), z.left_period());
    const Index low = std::min(x.offset(), z.offset()) - q;
    Index last_diff = low - 1;
    for (Index i = low; i < m; ++i)
        if (x.at(i) != z.at(i)) last_diff = i;
    if (last_diff < low) return 0;  // no disagreement anywhere
    return std::max<Index>(0, last_diff + 1);
}

std::optional<Index> unstable_level(const Point& x, const Point& z) {
    if (x.left_period() != z.left_period()) return std::nullopt;
    const Index p = x.left_period();
    const Index m = std::min({x.offset(), z.offset(), Index{0}});
    for (Index i = m - p; i < m; ++i)
        if (x.at(i) != z.at(i)) return std::nullopt;
    const Index q = std::lcm(x.right_period(), z.right_period());
    const Index high = std::max(x.right_start(), z.right_start()) + q;
    Index first_diff = high;
    for (Index i = high - 1; i >= m; --i)
        if (x.at(i) != z.at(i)) first_diff = i;
    if (first_diff >= high) return 0;
    return std::max<Index>(0, -first_diff + 1);
}

std::optional<Index> asymptotic_level(const Point& x, const Point& z) {
    auto s = stable_level(x, z);
    if (!s) return std::nullopt;
    auto u = unstable_level(x, z);
    if (!u) return std::nullopt;
    return std::max(*s, *u);
}

AsymptoticPair AsymptoticPair::make(Point x, Point z) {
    auto lvl = asymptotic_level(x, z);
    if (!lvl)
        throw NotAsymptoticError("points are not asymptotic: " + x.to_string() + " vs " +
                                 z.to_string());
    return AsymptoticPair{std::move(x), std::move(z), *lvl};
}

AsymptoticPair AsymptoticPair::shifted(Index n) const {
    return make(x.shifted(n), z.shifted(n));
}

GroupoidElement make_element(const Dynamics& dyn, Point x, Index n, Point z) {
    auto witness = AsymptoticPair::make(dyn.apply(x, n), z);
    return GroupoidElement{std::move(x), n, std::move(z), std::move(witness)};
}

GroupoidElement unit_at(const Dynamics& dyn, const Point& x) {
    return make_element(dyn, x, 0, x);
}

GroupoidElement compose(const Dynamics& dyn, const GroupoidElement& g, const GroupoidElement& h) {
    if (!(g.source() == h.range()))
        throw NotComposableError("source(g) != range(h)");
    return make_element(dyn, g.x, g.n + h.n, h.z);
}

GroupoidElement inverse(const Dynamics& dyn, const GroupoidElement& g) {
    return make_element(dyn, g.z, -g.n, g.x);
}

std::pair<AsymptoticPair, Index> gamma(const Dynamics& dyn, const GroupoidElement& g) {
    return {AsymptoticPair::make(g.x, dyn.apply(g.z, -g.n)), g.n};
}

GroupoidElement gamma_inv(const Dynamics& dyn, const AsymptoticPair& pair, Index n) {
    return make_element(dyn, pair.x, n, dyn.apply(pair.z, n));
}

}  // namespace sft
