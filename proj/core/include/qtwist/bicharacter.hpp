#pragma once

#include <optional>
#include <vector>

#include "qtwist/group.hpp"
#include "qtwist/rational.hpp"

namespace qtwist {

/**
 * Bimultiplicative map on a free abelian group, sigma(g, h) =
 * prod_ij b_ij^{pi(g)_i pi(h)_j}. The optional projection pi (an integer
 * matrix applied to both exponent vectors) lets a theta x theta value
 * matrix act on a rank-2theta group; without it the matrix indices are the
 * group generators themselves.
 *
 * Any bimultiplicative map on a free abelian group is automatically a
 * normalized group 2-cocycle, which is what makes these the workhorse
 * deformation data.
 */
class Bicharacter {
public:
    Bicharacter(std::vector<std::vector<Rational>> matrix,
                std::optional<std::vector<std::vector<long>>> projection = std::nullopt);

    Rational operator()(const GroupElement& g, const GroupElement& h) const;

    int matrix_size() const { return static_cast<int>(matrix_.size()); }
    const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }
    const std::optional<std::vector<std::vector<long>>>& projection() const { return projection_; }

    // Entrywise inverse; same projection. This is the convolution inverse
    // of the induced Hopf cocycle.
    Bicharacter inverse() const;

private:
    std::vector<std::int64_t> project(const GroupElement& g) const;

    std::vector<std::vector<Rational>> matrix_;
    std::optional<std::vector<std::vector<long>>> projection_;
};

} // namespace qtwist
