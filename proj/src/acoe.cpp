#include "sftlab/acoe.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "sftlab/asymptotics.hpp"
#include "sftlab/errors.hpp"

namespace sft {

namespace {

struct PointResult {
    std::optional<Index> xi_level;  // membership witness for xi1 / xi2
    bool arith_ok = true;           // condition (v) / (vi)
    std::string arith_cex;
    std::array<std::optional<Index>, 6> xi_n;  // xi1^n witness levels, n = 1..5
};

struct PairResult {
    bool orbit_ok = true;  // condition (1) / (2), m in [-5, 5]
    std::string orbit_cex;
    std::optional<Index> eta_level;  // condition (iii) / (iv)
    bool zero_ok = true;             // condition (vii) / (viii)
    std::string zero_cex;
    std::optional<AsymptoticPair> image;  // eta-image, for family closure
};

PointResult check_point_x(const AcoeBundle& b, const Point& x, bool with_power_levels) {
    PointResult res;
    const Point hx = b.h.apply(x);
    const long long c1x = b.c1.eval(x);
    const Point lhs = b.Y.apply(hx, c1x);
    const Point rhs = b.h.apply(b.X.apply(x, 1));
    res.xi_level = asymptotic_level(lhs, rhs);
    if (!res.xi_level) {
        res.arith_ok = false;
        res.arith_cex = "xi1(x) not asymptotic at x=" + x.to_string();
    } else {
        long long val = power_sum(b.c2, b.Y, hx, c1x) +
                        b.d2.eval(AsymptoticPair{lhs, rhs, *res.xi_level});
        if (val != 1) {
            res.arith_ok = false;
            std::ostringstream os;
            os << "c2^{c1(x)}(h(x)) + d2(...) = " << val << " != 1 at x=" << x.to_string();
            res.arith_cex = os.str();
        }
    }
    if (with_power_levels) {
        for (Index n = 1; n <= 5; ++n) {
            long long c1n = power_sum(b.c1, b.X, x, n);
            res.xi_n[n] =
                asymptotic_level(b.Y.apply(hx, c1n), b.h.apply(b.X.apply(x, n)));
        }
    }
    return res;
}

PointResult check_point_y(const AcoeBundle& b, const Point& y) {
    PointResult res;
    const Point hy = b.h_inv.apply(y);
    const long long c2y = b.c2.eval(y);
    const Point lhs = b.X.apply(hy, c2y);
    const Point rhs = b.h_inv.apply(b.Y.apply(y, 1));
    res.xi_level = asymptotic_level(lhs, rhs);
    if (!res.xi_level) {
        res.arith_ok = false;
        res.arith_cex = "xi2(y) not asymptotic at y=" + y.to_string();
    } else {
        long long val = power_sum(b.c1, b.X, hy, c2y) +
                        b.d1.eval(AsymptoticPair{lhs, rhs, *res.xi_level});
        if (val != 1) {
            res.arith_ok = false;
            std::ostringstream os;
            os << "c1^{c2(y)}(h^{-1}(y)) + d1(...) = " << val << " != 1 at y=" << y.to_string();
            res.arith_cex = os.str();
        }
    }
    return res;
}

// Conditions (1)/(iii)/(vii) on an X-pair, or (2)/(iv)/(viii) on a Y-pair
// depending on `x_side`.
PairResult check_pair(const AcoeBundle& b, const AsymptoticPair& p, bool x_side) {
    const Dynamics& dom = x_side ? b.X : b.Y;
    const Dynamics& cod = x_side ? b.Y : b.X;
    const LocallyConstantFn& c_dom = x_side ? b.c1 : b.c2;
    const LocallyConstantFn& c_cod = x_side ? b.c2 : b.c1;
    const PotentialCocycle& d_dom = x_side ? b.d1 : b.d2;
    const PotentialCocycle& d_cod = x_side ? b.d2 : b.d1;
    const PointMap& map = x_side ? b.h : b.h_inv;

    PairResult res;
    const long long base_d = d_dom.eval(p);
    for (Index m = -5; m <= 5 && res.orbit_ok; ++m) {
        auto shifted = AsymptoticPair::make(dom.apply(p.x, m), dom.apply(p.z, m));
        long long lhs = power_sum(c_dom, dom, p.x, m) + d_dom.eval(shifted);
        long long rhs = power_sum(c_dom, dom, p.z, m) + base_d;
        if (lhs != rhs) {
            res.orbit_ok = false;
            std::ostringstream os;
            os << "orbit identity fails at m=" << m << " x=" << p.x.to_string()
               << " z=" << p.z.to_string() << " (" << lhs << " != " << rhs << ")";
            res.orbit_cex = os.str();
        }
    }

    const Point a = cod.apply(map.apply(p.x), base_d);
    const Point c = map.apply(p.z);
    res.eta_level = asymptotic_level(a, c);
    if (!res.eta_level) {
        res.zero_ok = false;
        res.zero_cex = "eta pair not asymptotic at x=" + p.x.to_string() + " z=" + p.z.to_string();
    } else {
        res.image = AsymptoticPair{a, c, *res.eta_level};
        long long val = power_sum(c_cod, cod, map.apply(p.x), base_d) + d_cod.eval(*res.image);
        if (val != 0) {
            res.zero_ok = false;
            std::ostringstream os;
            os << "twisted sum = " << val << " != 0 at x=" << p.x.to_string()
               << " z=" << p.z.to_string();
            res.zero_cex = os.str();
        }
    }
    return res;
}

void merge_condition(ConditionResult& cond, bool ok, const std::string& cex) {
    ++cond.checked;
    if (!ok && cond.pass) {
        cond.pass = false;
        cond.counterexample = cex;
    }
}

template <typename T, typename F>
std::vector<T> map_elements(bool parallel, long long n, F&& f) {
    std::vector<T> out(static_cast<size_t>(n));
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long long i = 0; i < n; ++i) out[static_cast<size_t>(i)] = f(i);
    } else {
        for (long long i = 0; i < n; ++i) out[static_cast<size_t>(i)] = f(i);
    }
    return out;
}

VerificationReport run_verify(const AcoeBundle& b, const BundleFamily& fam, bool parallel) {
    VerificationReport rep;
    rep.conditions = {{"(1)"}, {"(2)"},  {"(i)"}, {"(ii)"}, {"(iii)"},
                      {"(iv)"}, {"(v)"}, {"(vi)"}, {"(vii)"}, {"(viii)"}};
    auto& c1r = rep.conditions[0];
    auto& c2r = rep.conditions[1];
    auto& ir = rep.conditions[2];
    auto& iir = rep.conditions[3];
    auto& iiir = rep.conditions[4];
    auto& ivr = rep.conditions[5];
    auto& vr = rep.conditions[6];
    auto& vir = rep.conditions[7];
    auto& viir = rep.conditions[8];
    auto& viiir = rep.conditions[9];

    const auto& px = fam.X.points;
    const auto& py = fam.Y.points;
    auto res_px = map_elements<PointResult>(parallel, static_cast<long long>(px.size()),
                                            [&](long long i) { return check_point_x(b, px[i], true); });
    auto res_py = map_elements<PointResult>(parallel, static_cast<long long>(py.size()),
                                            [&](long long i) { return check_point_y(b, py[i]); });

    rep.K_n.assign(6, 0);
    bool levels_total = true;
    for (size_t i = 0; i < px.size(); ++i) {
        const auto& r = res_px[i];
        merge_condition(ir, r.xi_level.has_value(),
                        "xi1 not asymptotic at x=" + px[i].to_string());
        merge_condition(vr, r.arith_ok, r.arith_cex);
        if (r.xi_level) rep.K1 = std::max(rep.K1, *r.xi_level);
        for (Index n = 1; n <= 5; ++n) {
            if (r.xi_n[n])
                rep.K_n[n] = std::max(rep.K_n[n], *r.xi_n[n]);
            else
                levels_total = false;
        }
    }
    for (size_t i = 0; i < py.size(); ++i) {
        const auto& r = res_py[i];
        merge_condition(iir, r.xi_level.has_value(),
                        "xi2 not asymptotic at y=" + py[i].to_string());
        merge_condition(vir, r.arith_ok, r.arith_cex);
        if (r.xi_level) rep.K2 = std::max(rep.K2, *r.xi_level);
    }
    rep.points_checked = static_cast<long long>(px.size() + py.size());

    // K_{n+1} <= K_n + max|c1| + K_1 for n = 1..4, with K_1 = K_n[1].
    if (levels_total) {
        const long long C1 = b.c1.max_abs();
        for (Index n = 1; n <= 4; ++n)
            if (rep.K_n[n + 1] > rep.K_n[n] + C1 + rep.K_n[1]) rep.level_bound_ok = false;
    }

    auto res_qx = map_elements<PairResult>(
        parallel, static_cast<long long>(fam.X.pairs.size()),
        [&](long long i) { return check_pair(b, fam.X.pairs[static_cast<size_t>(i)], true); });
    // Closure under the h-image: eta1-images of X-pairs feed the Y-side
    // conditions alongside the independently generated Y-pairs.
    std::vector<AsymptoticPair> ypairs = fam.Y.pairs;
    for (const auto& r : res_qx)
        if (r.image) ypairs.push_back(*r.image);
    auto res_qy = map_elements<PairResult>(
        parallel, static_cast<long long>(ypairs.size()),
        [&](long long i) { return check_pair(b, ypairs[static_cast<size_t>(i)], false); });

    for (size_t i = 0; i < fam.X.pairs.size(); ++i) {
        const auto& r = res_qx[i];
        merge_condition(c1r, r.orbit_ok, r.orbit_cex);
        merge_condition(iiir, r.eta_level.has_value(),
                        "eta1 not asymptotic at x=" + fam.X.pairs[i].x.to_string() +
                            " z=" + fam.X.pairs[i].z.to_string());
        merge_condition(viir, r.zero_ok, r.zero_cex);
    }
    for (size_t i = 0; i < ypairs.size(); ++i) {
        const auto& r = res_qy[i];
        merge_condition(c2r, r.orbit_ok, r.orbit_cex);
        merge_condition(ivr, r.eta_level.has_value(),
                        "eta2 not asymptotic at y=" + ypairs[i].x.to_string() +
                            " w=" + ypairs[i].z.to_string());
        merge_condition(viiir, r.zero_ok, r.zero_cex);
    }
    rep.pairs_checked = static_cast<long long>(fam.X.pairs.size() + ypairs.size());

    rep.pass = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                           [](const ConditionResult& c) { return c.pass; });
    rep.sufficiency_radius = fam.sufficiency_radius;
    rep.exactly_verified = rep.pass && fam.sweep_radius >= 0 &&
                           fam.sweep_radius >= fam.sufficiency_radius &&
                           fam.desc.radius >= fam.sufficiency_radius;
    return rep;
}

}  // namespace

BundleFamily make_bundle_family(const AcoeBundle& b, const FamilyDescriptor& fd,
                                const FamilyOptions& opt) {
    BundleFamily fam;
    fam.desc = fd;
    // Point side first: the measured witness levels enter the sufficiency
    // radius that decides the exhaustive sweep radius for pairs.
    FamilyOptions points_only = opt;
    fam.X = make_side_family(b.X.matrix, fd, -1, points_only);
    FamilyOptions yopt = points_only;
    yopt.seed = opt.seed ^ 0x9e3779b97f4a7c15ull;
    fam.Y = make_side_family(b.Y.matrix, fd, -1, yopt);

    Index K = 0;
    for (const auto& x : fam.X.points) {
        auto r = check_point_x(b, x, false);
        if (r.xi_level) K = std::max(K, *r.xi_level);
    }
    for (const auto& y : fam.Y.points) {
        auto r = check_point_y(b, y);
        if (r.xi_level) K = std::max(K, *r.xi_level);
    }
    const Index windows = b.c1.radius() + b.c2.radius() + b.d1.potential().radius() +
                          b.d2.potential().radius() + b.h.window() + b.h_inv.window();
    fam.sufficiency_radius = windows + K;

    Index sweep = std::min(fd.radius, fam.sufficiency_radius);
    if (sweep_size(b.X.matrix, fd, sweep) > opt.sweep_cap ||
        sweep_size(b.Y.matrix, fd, sweep) > opt.sweep_cap)
        sweep = -1;
    fam.sweep_radius = sweep;

    auto with_pairs_x = make_side_family(b.X.matrix, fd, sweep, opt);
    auto with_pairs_y = make_side_family(b.Y.matrix, fd, sweep, yopt);
    fam.X.pairs = std::move(with_pairs_x.pairs);
    fam.Y.pairs = std::move(with_pairs_y.pairs);
    return fam;
}

VerificationReport verify_acoe(const AcoeBundle& b, const BundleFamily& fam) {
    return run_verify(b, fam, true);
}

VerificationReport verify_acoe_serial(const AcoeBundle& b, const BundleFamily& fam) {
    return run_verify(b, fam, false);
}

GroupoidElement GroupoidMorphism::apply(const GroupoidElement& g) const {
    const Dynamics& dom = mirrored_ ? b_->Y : b_->X;
    const Dynamics& cod = mirrored_ ? b_->X : b_->Y;
    const LocallyConstantFn& c = mirrored_ ? b_->c2 : b_->c1;
    const PotentialCocycle& d = mirrored_ ? b_->d2 : b_->d1;
    const PointMap& map = mirrored_ ? b_->h_inv : b_->h;
    // The witness pair of g is exactly (phi^n x, z), the argument of d.
    auto witness = AsymptoticPair::make(dom.apply(g.x, g.n), g.z);
    long long m = power_sum(c, dom, g.x, g.n) + d.eval(witness);
    return make_element(cod, map.apply(g.x), m, map.apply(g.z));
}

bool check_periodic_preserving(const TransitionMatrix& A,
                               const std::function<Point(const Point&)>& h, Index period_bound) {
    for (const auto& x : periodic_points_upto(A, static_cast<int>(period_bound)))
        if (!h(x).periodic()) return false;
    return true;
}

bool check_periodic_preserving(const PointMap& h, Index period_bound) {
    return check_periodic_preserving(h.source(), [&](const Point& x) { return h.apply(x); },
                                     period_bound);
}

FlipClassification flip_from_ppacoe(const AcoeBundle& b, const BundleFamily& fam,
                                    Index period_bound) {
    if (!check_periodic_preserving(b.h, period_bound))
        throw NotPeriodicPreservingError("h maps a periodic point to a non-periodic point");

    auto violated = [](const std::string& what, const Point& x) {
        throw ConditionViolatedError(what + " at x=" + x.to_string());
    };

    for (const auto& x : periodic_points_upto(b.X.matrix, static_cast<int>(period_bound))) {
        const Point hx = b.h.apply(x);
        const long long c1x = b.c1.eval(x);
        // h(phi(x)) = psi^{c1(x)}(h(x)) on periodic points.
        if (!(b.h.apply(b.X.apply(x, 1)) == b.Y.apply(hx, c1x)))
            violated("h(phi(x)) != psi^{c1(x)}(h(x))", x);
        // Transport of the tail limits.
        const Point hpx = b.h.apply(b.X.apply(x, 1));
        if (!(forward_limit_point(hpx) == b.Y.apply(forward_limit_point(hx), c1x)))
            violated("forward limit transport fails", x);
        if (!(backward_limit_point(hpx) == b.Y.apply(backward_limit_point(hx), c1x)))
            violated("backward limit transport fails", x);
    }

    // Asymptotic-period transport on the sampled (generally non-periodic)
    // family points: h(x) is asymptotically (c1^p(x) + d1(phi^p x, x))-periodic.
    for (const auto& x : fam.X.points) {
        const Index p = least_asymptotic_period(x);
        auto pair = AsymptoticPair::make(b.X.apply(x, p), x);
        const long long chp = power_sum(b.c1, b.X, x, p) + b.d1.eval(pair);
        const Point hx = b.h.apply(x);
        if (!asymptotic_level(b.Y.apply(hx, chp), hx))
            violated("asymptotic period transport fails", x);
    }

    FlipClassification out;
    // d1 == 0 on the family?
    out.d1_zero_on_family = true;
    for (const auto& p : fam.X.pairs) {
        if (b.d1.eval(p) != 0) {
            out.d1_zero_on_family = false;
            break;
        }
    }
    if (!out.d1_zero_on_family) return out;  // orbit equivalence only; no flip verdict

    long long c = b.c1.eval(fam.X.points.front());
    for (const auto& x : fam.X.points)
        if (b.c1.eval(x) != c) violated("c1 not constant with d1 == 0", x);
    if (c != 1 && c != -1)
        throw ConditionViolatedError("constant c1 = " + std::to_string(c) + " not in {+1,-1}");
    out.constant_c1 = c;
    out.cls = c == 1 ? FlipClass::Conjugacy : FlipClass::Flip;
    return out;
}

AsymptoticFlipReport asymptotic_flip_check(const PointMap& h, const PointMap& h_inv, int epsilon,
                                           const Dynamics& X, const Dynamics& Y,
                                           const BundleFamily& fam) {
    AsymptoticFlipReport rep;
    rep.conditions = {{"xi1"}, {"xi2"}, {"eta1"}, {"eta2"}};
    auto& xi1 = rep.conditions[0];
    auto& xi2 = rep.conditions[1];
    auto& eta1 = rep.conditions[2];
    auto& eta2 = rep.conditions[3];

    for (const auto& x : fam.X.points) {
        auto lvl = asymptotic_level(Y.apply(h.apply(x), epsilon), h.apply(X.apply(x, 1)));
        merge_condition(xi1, lvl.has_value(), "xi1 not asymptotic at x=" + x.to_string());
    }
    for (const auto& y : fam.Y.points) {
        auto lvl = asymptotic_level(X.apply(h_inv.apply(y), epsilon), h_inv.apply(Y.apply(y, 1)));
        merge_condition(xi2, lvl.has_value(), "xi2 not asymptotic at y=" + y.to_string());
    }

    const Index max_level = fam.desc.radius;
    std::vector<Index> out_levels(static_cast<size_t>(max_level) + 1, 0);
    std::vector<AsymptoticPair> image_pairs;
    for (const auto& p : fam.X.pairs) {
        auto lvl = asymptotic_level(h.apply(p.x), h.apply(p.z));
        merge_condition(eta1, lvl.has_value(),
                        "eta1 not asymptotic at x=" + p.x.to_string() + " z=" + p.z.to_string());
        if (lvl) {
            image_pairs.push_back(AsymptoticPair{h.apply(p.x), h.apply(p.z), *lvl});
            for (Index n = p.level; n <= max_level; ++n)
                out_levels[static_cast<size_t>(n)] =
                    std::max(out_levels[static_cast<size_t>(n)], *lvl);
        }
    }
    for (const auto& p : fam.Y.pairs) {
        auto lvl = asymptotic_level(h_inv.apply(p.x), h_inv.apply(p.z));
        merge_condition(eta2, lvl.has_value(),
                        "eta2 not asymptotic at y=" + p.x.to_string() + " w=" + p.z.to_string());
    }
    for (const auto& p : image_pairs) {
        auto lvl = asymptotic_level(h_inv.apply(p.x), h_inv.apply(p.z));
        merge_condition(eta2, lvl.has_value(),
                        "eta2 not asymptotic on image pair y=" + p.x.to_string());
    }

    for (Index n = 0; n <= max_level; ++n)
        rep.level_map.push_back(LevelMapEntry{n, out_levels[static_cast<size_t>(n)]});
    rep.pass = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                           [](const ConditionResult& c) { return c.pass; });
    return rep;
}

ConditionResult bracket_transport_check(const PointMap& h, int direction,
                                        const std::vector<AsymptoticPair>& pairs) {
    ConditionResult cond{"bracket transport"};
    const Index w = h.window();
    for (const auto& p : pairs) {
        bool close = true;
        for (Index i = -w; i <= w && close; ++i) close = (p.x.at(i) == p.z.at(i));
        if (!close) continue;
        const Point lhs = h.apply(bracket(p.x, p.z));
        const Point rhs = direction > 0 ? bracket(h.apply(p.x), h.apply(p.z))
                                        : bracket(h.apply(p.z), h.apply(p.x));
        merge_condition(cond, lhs == rhs,
                        "bracket transport fails at x=" + p.x.to_string() +
                            " z=" + p.z.to_string());
    }
    return cond;
}

}  // namespace sft
