#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sftlab/cocycles.hpp"
#include "sftlab/family.hpp"
#include "sftlab/point_map.hpp"

namespace sft {

// Candidate orbit-equivalence data between two systems: a homeomorphism
// pair and the four cocycle components.
struct AcoeBundle {
    Dynamics X, Y;
    PointMap h, h_inv;
    LocallyConstantFn c1, c2;  // over X resp. Y
    PotentialCocycle d1, d2;
};

// Both sides of a verification family, plus the sweep metadata needed to
// decide whether the verdict is exact.
struct BundleFamily {
    FamilyDescriptor desc;
    SideFamily X, Y;
    Index sweep_radius = -1;       // pairs exhaustive up to this radius, -1 when sampled only
    Index sufficiency_radius = 0;  // component windows + measured witness level
};

// Builds the family for the bundle: periodic points, exhaustive pair sweep
// at min(radius, sufficiency radius) when feasible, seeded samples beyond.
BundleFamily make_bundle_family(const AcoeBundle& b, const FamilyDescriptor& fd,
                                const FamilyOptions& opt = {});

struct ConditionResult {
    std::string name;
    bool pass = true;
    long long checked = 0;
    std::string counterexample;
};

struct VerificationReport {
    std::vector<ConditionResult> conditions;  // "(1)","(2)","(i)".."(viii)"
    bool pass = false;
    Index K1 = 0, K2 = 0;        // max witness levels of xi1, xi2 over the family
    std::vector<Index> K_n;      // max witness level of xi1^n for n = 1..5
    bool level_bound_ok = true;  // K_{n+1} <= K_n + max|c1| + K_1
    Index sufficiency_radius = 0;
    bool exactly_verified = false;  // radius >= sufficiency radius and sweep exhaustive
    long long points_checked = 0, pairs_checked = 0;
};

// Evaluates the ten conditions exactly on the family; failures land in the
// report, never in exceptions.  Embarrassingly parallel over family
// elements; the merged report is deterministic.
VerificationReport verify_acoe(const AcoeBundle& b, const BundleFamily& fam);
VerificationReport verify_acoe_serial(const AcoeBundle& b, const BundleFamily& fam);

// (x,n,z) -> (h(x), c1^n(x) + d1(phi^n x, z), h(z)) and its mirror.
class GroupoidMorphism {
public:
    GroupoidMorphism(const AcoeBundle& b, bool mirrored = false) : b_(&b), mirrored_(mirrored) {}
    GroupoidElement apply(const GroupoidElement& g) const;
    GroupoidMorphism inverse() const { return GroupoidMorphism(*b_, !mirrored_); }

private:
    const AcoeBundle* b_;
    bool mirrored_;
};

// True iff h maps every periodic point of period <= bound to a periodic point.
bool check_periodic_preserving(const TransitionMatrix& A,
                               const std::function<Point(const Point&)>& h, Index period_bound);
bool check_periodic_preserving(const PointMap& h, Index period_bound);

enum class FlipClass { Conjugacy, Flip, Undetermined };

struct FlipClassification {
    FlipClass cls = FlipClass::Undetermined;
    std::optional<long long> constant_c1;  // set when d1 vanished on the family
    bool d1_zero_on_family = false;
};

// Periodic-point-preserving classification: asserts the orbit identity
// h(phi(x)) = psi^{c1(x)}(h(x)) on periodic points up to the bound, the
// limit-point transport identities, and the asymptotic-period transport;
// when d1 vanishes on the family it asserts c1 constant in {+1,-1} and
// classifies.  Throws NotPeriodicPreservingError / ConditionViolatedError.
FlipClassification flip_from_ppacoe(const AcoeBundle& b, const BundleFamily& fam,
                                    Index period_bound);

struct LevelMapEntry {
    Index input_level;   // N
    Index output_level;  // N': max image level over family pairs of level <= N
};

struct AsymptoticFlipReport {
    std::vector<ConditionResult> conditions;  // xi1, xi2, eta1, eta2
    bool pass = false;
    std::vector<LevelMapEntry> level_map;  // for eta1, N = 0..radius
};

// The groupoid-level flip test: xi1(x) = (psi^eps(h(x)), h(phi(x))) and
// eta1(x,z) = (h(x), h(z)) land in the target asymptotic relation, with the
// mirrored checks through h_inv; exact witness levels throughout.
AsymptoticFlipReport asymptotic_flip_check(const PointMap& h, const PointMap& h_inv, int epsilon,
                                           const Dynamics& X, const Dynamics& Y,
                                           const BundleFamily& fam);

// h([x,z]) = [h(x),h(z)] for direction +1, = [h(z),h(x)] for -1, over the
// family pairs that agree on [-w, w] for w = the map's total window.
ConditionResult bracket_transport_check(const PointMap& h, int direction,
                                        const std::vector<AsymptoticPair>& pairs);

}  // namespace sft
