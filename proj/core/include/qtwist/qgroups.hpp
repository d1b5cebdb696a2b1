#pragma once

#include <map>
#include <optional>
#include <string>

#include "qtwist/cocycles.hpp"
#include "qtwist/ideals.hpp"

namespace qtwist {

// One named check inside a verification report.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string note;
};

struct VerifyReport {
    std::string theorem;
    int bound = 0;
    std::vector<CheckResult> checks;
    bool pass = true;

    void add(std::string name, bool ok, std::string note = "");
};

/**
 * U~(D_red, l): generators x_1..x_t, y_1..y_t over Z^{2theta}; stored
 * relations are the x- and y-Serre relations (i != j) and the linking
 * relations x_i y_j - q_ij^{-1} y_j x_i - delta_ij l_i (K_i L_i - 1).
 * Group commutation and the action relations are structural in the smash
 * model.
 */
Presentation build_ured(const ReducedDatum& datum);

/**
 * The multiparameter quantum group presentation, realized inside the same
 * Z^{2theta} smash framework via w_i = K_i, w'_i = L_i^{-1}, e_i = x_i,
 * f_i = y_i L_i^{-1}. Stored relations are R5 (all pairs), R6 and R7
 * (i != j); R1-R4 hold identically in the representation.
 * `r5_constant` overrides the R5 coefficient q_ii/(q_ii - 1) and exists
 * for the shipped negative control.
 */
Presentation build_hpr(const ReducedDatum& datum,
                       std::optional<Rational> r5_constant = std::nullopt);

enum class SerreKind { X, Y };

// Closed-form quantum Serre expansion; for n = 1 - a_ij this is the
// stored relation. The y-form carries the global prefactor
// (-1)^n q_ji^{-n} q_ii^{-n(n-1)/2}.
SmashElement serre_expand(const ReducedDatum& datum, const MonomialYD& model, SerreKind kind,
                          int i, int j, int n);

// The HPR generators as elements of the common model.
struct HprGenerators {
    SmashElement e(int i) const;
    SmashElement f(int i) const;
    SmashElement omega(int i, int power = 1) const;
    SmashElement omega_prime(int i, int power = 1) const;

    std::shared_ptr<const MonomialYD> model;
    ReducedDatum datum;
};

HprGenerators hpr_generators(const ReducedDatum& datum,
                             std::shared_ptr<const MonomialYD> model);

// phi: HPR generators -> U~; psi: U~ generators -> HPR, as explicit image
// dictionaries in the common model.
struct GeneratorMap {
    std::map<std::string, SmashElement> images;
};
std::pair<GeneratorMap, GeneratorMap> generator_maps(const ReducedDatum& datum,
                                                     std::shared_ptr<const MonomialYD> model);

// Full isomorphism verification: phi-images of R5/R6/R7 are members of the
// U~ ideal, psi-images of the U~ relations are members of the HPR ideal,
// R1-R4 images vanish structurally, and the generator-level composites are
// exact identities. `mutate_r5` replaces the R5 constant (negative
// control).
VerifyReport verify_isomorphism(const ReducedDatum& datum, int D,
                                std::optional<Rational> mutate_r5 = std::nullopt);

// Appends the relations K_i L_i - 1 (the quotient by K_i - L_i^{-1}).
Presentation quotient_dj(const Presentation& P);

struct TwistToDJResult {
    DJDatum dj;
    HopfCocycle sigma;
    Bicharacter sigma_bichar;
    VerifyReport report;
};

// The twist-to-one-parameter pipeline: builds the DJ datum and the twist
// bicharacter, then verifies (i) the sigma-twisted braiding equals the DJ
// braiding entrywise, (ii) twisted-adjoint Serre elements match the DJ
// closed form evaluated with twisted products, (iii) source linking
// relations evaluated with twisted products equal the DJ linking
// relations. Errors: NotPositive, RootMismatch.
TwistToDJResult twist_to_dj(const ReducedDatum& datum, const std::vector<Rational>& q_I, int D);

// The half-root cocycle of the one-parameter comparison: bicharacter with
// matrix r_ij (r_ij^2 = q_ij) and projection K_i -> e_i, L_i -> -e_i, so
// that sigma(w_mu, w_nu) = sigma(w'_mu, w_nu) = q_{mu nu}^{1/2}. Errors:
// MissingRadical.
HopfCocycle hpr_halfroot_cocycle(const ReducedDatum& datum, const RadicalTable& radicals);

} // namespace qtwist
