#include "sftlab/family.hpp"

#include <algorithm>
#include <random>

#include "sftlab/asymptotics.hpp"

namespace sft {

namespace {

// Admissible words of the given length whose ends extend the boundary
// symbols: A(before, w front) and A(w back, after).
std::vector<Word> bounded_words(const TransitionMatrix& A, int length, Symbol before,
                                Symbol after) {
    std::vector<Word> out;
    for (auto& w : A.words(length)) {
        if (A.admissible(before, w.front()) && A.admissible(w.back(), after)) out.push_back(std::move(w));
    }
    return out;
}

// Environment point with the window [-r, r] replaced by the word w.
Point perturb(const Point& env, Index r, const Word& w) {
    Word center(w);
    Word u(env.left_period()), v(env.right_period());
    const Index lo = -r, hi = r + 1;
    for (Index t = 0; t < env.left_period(); ++t) u[t] = env.at(lo - env.left_period() + t);
    for (Index t = 0; t < env.right_period(); ++t) v[t] = env.at(hi + t);
    return Point(u, center, v, lo);
}

}  // namespace

long long sweep_size(const TransitionMatrix& A, const FamilyDescriptor& fd, Index sweep_radius) {
    if (sweep_radius < 0) return 0;
    auto envs = periodic_points_upto(A, static_cast<int>(fd.tail_period));
    const int len = static_cast<int>(2 * sweep_radius + 1);
    long long total = 0;
    for (const auto& e : envs) {
        auto ws = bounded_words(A, len, e.at(-sweep_radius - 1), e.at(sweep_radius + 1));
        total += static_cast<long long>(ws.size()) * static_cast<long long>(ws.size());
    }
    return total;
}

SideFamily make_side_family(const TransitionMatrix& A, const FamilyDescriptor& fd,
                            Index sweep_radius, const FamilyOptions& opt) {
    SideFamily fam;
    fam.points = periodic_points_upto(A, static_cast<int>(fd.period_bound));
    auto envs = periodic_points_upto(A, static_cast<int>(fd.tail_period));

    std::mt19937_64 rng(opt.seed);
    auto pick = [&rng](size_t n) { return static_cast<size_t>(rng() % n); };

    // Sampled eventually periodic points: periodic environment with a
    // perturbed center of width <= 2*radius+1.
    const int full_len = static_cast<int>(2 * fd.radius + 1);
    std::vector<std::vector<Word>> words_cache;  // per environment, full-radius words
    words_cache.reserve(envs.size());
    for (const auto& e : envs)
        words_cache.push_back(bounded_words(A, full_len, e.at(-fd.radius - 1), e.at(fd.radius + 1)));

    for (int i = 0; i < opt.sampled_points; ++i) {
        size_t ei = pick(envs.size());
        const auto& ws = words_cache[ei];
        if (ws.empty()) continue;
        fam.points.push_back(perturb(envs[ei], fd.radius, ws[pick(ws.size())]));
    }
    std::sort(fam.points.begin(), fam.points.end());
    fam.points.erase(std::unique(fam.points.begin(), fam.points.end()), fam.points.end());

    // Exhaustive sweep at the given radius.
    if (sweep_radius >= 0) {
        const int len = static_cast<int>(2 * sweep_radius + 1);
        for (const auto& e : envs) {
            auto ws = bounded_words(A, len, e.at(-sweep_radius - 1), e.at(sweep_radius + 1));
            std::vector<Point> pts;
            pts.reserve(ws.size());
            for (const auto& a : ws) pts.push_back(perturb(e, sweep_radius, a));
            for (const auto& x : pts)
                for (const auto& z : pts) fam.pairs.push_back(AsymptoticPair::make(x, z));
        }
    }

    // Sampled pairs at the full radius.
    for (int i = 0; i < opt.sampled_pairs; ++i) {
        size_t ei = pick(envs.size());
        const auto& ws = words_cache[ei];
        if (ws.empty()) continue;
        const Word& a = ws[pick(ws.size())];
        const Word& b = ws[pick(ws.size())];
        fam.pairs.push_back(
            AsymptoticPair::make(perturb(envs[ei], fd.radius, a), perturb(envs[ei], fd.radius, b)));
    }
    return fam;
}

}  // namespace sft
