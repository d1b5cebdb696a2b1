#pragma once

#include <vector>

#include "qtwist/error.hpp"

namespace qtwist {

/**
 * Generalized Cartan matrix: a_ii = 2, off-diagonal entries <= 0, and a
 * symmetric zero pattern (a_ij = 0 forces a_ji = 0).
 */
struct CartanMatrix {
    std::vector<std::vector<int>> a;

    int size() const { return static_cast<int>(a.size()); }
    int at(int i, int j) const { return a[i][j]; }
};

// Symmetrizing weights: positive integers with d_i a_ij = d_j a_ji and
// gcd 1 on every connected component.
struct Symmetrizer {
    std::vector<long> d;
};

// Errors: BadDiagonal, PositiveOffDiagonal, ZeroAsymmetry, NotSquare.
CartanMatrix validate_cartan(const std::vector<std::vector<int>>& m);

// Errors: NotSymmetrizable.
Symmetrizer symmetrize(const CartanMatrix& m);

// Partition of {0..theta-1} into connected components of the graph
// {(i,j) : linked(i,j)}, classes ordered by least member. Shared by the
// Cartan-matrix route (a_ij != 0) and the q-matrix route (q_ij q_ji != 1).
std::vector<std::vector<int>> components_of(int theta,
                                            const std::vector<std::vector<bool>>& linked);

std::vector<std::vector<int>> components(const CartanMatrix& m);

} // namespace qtwist
