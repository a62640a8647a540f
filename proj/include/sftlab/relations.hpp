#pragma once

#include <optional>

#include "sftlab/dynamics.hpp"
#include "sftlab/point.hpp"

namespace sft {

// Least n >= 0 with x_i = z_i for all i >= n, or nullopt when the right
// tails never merge.  Merging is decided exactly: both eventual sequences
// must have the same primitive period and matching phase.
std::optional<Index> stable_level(const Point& x, const Point& z);

// Mirror: least n >= 0 with x_i = z_i for all i <= -n.
std::optional<Index> unstable_level(const Point& x, const Point& z);

// max(stable, unstable) when both exist: the pair agrees at every index
// with |i| >= level.
std::optional<Index> asymptotic_level(const Point& x, const Point& z);

enum class LevelKind { Stable, Unstable, Asymptotic };

struct LevelWitness {
    LevelKind kind;
    Index level;  // minimal by construction
};

// A pair (x,z) agreeing at every |i| >= level, with the minimal level.
struct AsymptoticPair {
    Point x;
    Point z;
    Index level;

    // Throws NotAsymptoticError when the points are not asymptotic.
    static AsymptoticPair make(Point x, Point z);
    AsymptoticPair shifted(Index n) const;  // both components; level recomputed
    bool operator==(const AsymptoticPair& o) const = default;
};

// Element (x, n, z) of the semidirect-product groupoid of the system
// (X, phi): the pair (phi^n(x), z) is asymptotic, and `witness` stores its
// minimal level.  For a direction -1 system phi^n is shift^{-n}.
struct GroupoidElement {
    Point x;
    Index n;
    Point z;
    AsymptoticPair witness;

    const Point& range() const { return x; }
    const Point& source() const { return z; }
    bool is_unit() const { return n == 0 && x == z; }
    bool operator==(const GroupoidElement& o) const {
        return x == o.x && n == o.n && z == o.z;
    }
};

// Throws NotAsymptoticError when (phi^n(x), z) fails membership.
GroupoidElement make_element(const Dynamics& dyn, Point x, Index n, Point z);
GroupoidElement unit_at(const Dynamics& dyn, const Point& x);

// (x,n,y)(y,m,w) = (x,n+m,w); witness recomputed, never propagated.
GroupoidElement compose(const Dynamics& dyn, const GroupoidElement& g, const GroupoidElement& h);
GroupoidElement inverse(const Dynamics& dyn, const GroupoidElement& g);  // (z,-n,x)

// The bijection with pairs: (x,n,y) -> ((x, phi^{-n}(y)), n).
std::pair<AsymptoticPair, Index> gamma(const Dynamics& dyn, const GroupoidElement& g);
GroupoidElement gamma_inv(const Dynamics& dyn, const AsymptoticPair& pair, Index n);

// The canonical homomorphism to Z, (x,n,z) -> n.
inline Index d_hom(const GroupoidElement& g) { return g.n; }

}  // namespace sft
