#pragma once

#include "sftlab/matrix.hpp"
#include "sftlab/point.hpp"

namespace sft {

// A two-sided topological Markov shift together with a time direction:
// phi = sigma_A when direction = +1 and phi = sigma_A^{-1} when -1.
// The direction lets a bundle target a system and its inverse with the
// same point space.
struct Dynamics {
    TransitionMatrix matrix;
    int direction = +1;

    Point apply(const Point& x, Index n = 1) const { return x.shifted(direction * n); }

    bool operator==(const Dynamics& o) const {
        return matrix == o.matrix && direction == o.direction;
    }
};

}  // namespace sft
