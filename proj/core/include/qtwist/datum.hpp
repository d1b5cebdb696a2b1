#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtwist/bicharacter.hpp"
#include "qtwist/cartan.hpp"
#include "qtwist/rational.hpp"

namespace qtwist {

/**
 * Braiding matrix of diagonal type: nonzero entries q_ij with q_ii != 1.
 */
struct QMatrix {
    std::vector<std::vector<Rational>> q;

    int size() const { return static_cast<int>(q.size()); }
    const Rational& at(int i, int j) const { return q[i][j]; }

    // Errors: NotSquare, ZeroEntry, QiiOne.
    static QMatrix validate(std::vector<std::vector<Rational>> entries);
};

/**
 * Reduced YD-datum of Cartan type over the free abelian group Z^{2theta}
 * with generators L_1..L_theta, K_1..K_theta (exponent slots in that
 * order). The q-matrix is the single source of truth: the characters act
 * by chi_j(K_i) = q_ij and chi_i(L_j) = q_ij, never stored separately.
 */
struct ReducedDatum {
    CartanMatrix cartan;
    QMatrix q;
    std::vector<Rational> linking;      // l_i, one per row
    std::vector<std::string> warnings;  // e.g. l_i = 0 accepted for the B(V+W) degeneration

    int theta() const { return cartan.size(); }
    int group_rank() const { return 2 * theta(); }

    GroupElement K(int i, std::int64_t power = 1) const {
        return GroupElement::abelian_generator(group_rank(), theta() + i, power);
    }
    GroupElement L(int i, std::int64_t power = 1) const {
        return GroupElement::abelian_generator(group_rank(), i, power);
    }

    // chi_c evaluated on an exponent vector: prod_j q_cj^{l_j} q_jc^{k_j}.
    Rational chi(int c, const GroupElement& g) const;

    std::vector<std::vector<int>> component_list() const;
};

/**
 * DJ-type (Drinfeld-Jimbo) datum: the twist-equivalent one-parameter-per-
 * component q-matrix q_ij = q_I^{d_i a_ij} together with its source.
 */
struct DJDatum {
    ReducedDatum base;            // validated datum with the hatted q-matrix
    std::vector<Rational> q_comp; // q_I per connected component
    Symmetrizer d;
};

// Validation per the Cartan-type axioms; if `linking` is absent every
// l_i defaults to q_ii/(q_ii - 1). Errors: QiiOne, ZeroEntry,
// CartanCompatibility, OrderViolation, SizeMismatch.
ReducedDatum validate_reduced_datum(const CartanMatrix& cartan, const QMatrix& q,
                                    std::optional<std::vector<Rational>> linking = std::nullopt);

// Equal diagonals and equal opposite-entry products. Errors: SizeMismatch.
bool is_twist_equivalent(const QMatrix& a, const QMatrix& b);

// Builds the DJ q-matrix q_I^{d_i a_ij} and validates q_ii = q_I^{2 d_i}
// against the source diagonal. Errors: NotSymmetrizable, RootMismatch,
// SizeMismatch.
DJDatum build_dj_datum(const ReducedDatum& datum, const std::vector<Rational>& q_per_component);

// The group 2-cocycle of the twist theorem: sigma(g_r, g_c) =
// phat_rc / p_rc for r <= c and 1 otherwise, extended bimultiplicatively,
// where p (resp. phat) is the 2theta x 2theta braiding-block matrix of the
// source (resp. DJ) datum under the generator order L_1..L_theta,
// K_1..K_theta. Errors: NotTwistEquivalent.
Bicharacter dj_twist_bicharacter(const ReducedDatum& datum, const DJDatum& dj);

// The p-matrix itself (exposed for the entrywise twist check).
std::vector<std::vector<Rational>> braiding_block_matrix(const QMatrix& q);

} // namespace qtwist
