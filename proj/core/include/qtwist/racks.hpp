#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>

#include "qtwist/cocycles.hpp"
#include "qtwist/ideals.hpp"
#include "qtwist/qgroups.hpp"

namespace qtwist {

/**
 * Finite rack: element labels plus the operation table op[i][j] = i |> j
 * (0-based indices). Validation checks that every i |> (.) is a bijection
 * and that self-distributivity i|>(j|>k) = (i|>j)|>(i|>k) holds on all
 * triples.
 */
struct Rack {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> op;

    int size() const { return static_cast<int>(labels.size()); }
    int tri(int i, int j) const { return op[i][j]; }
};

// Errors: NotBijective, NotSelfDistributive, NotSquare.
Rack validate_rack(std::vector<std::string> labels, std::vector<std::vector<int>> op);

struct RackCocycle {
    std::vector<std::vector<Rational>> val;
    const Rational& at(int i, int j) const { return val[i][j]; }
};

// Errors: CocycleViolation (with witness triple), ZeroEntry.
RackCocycle validate_rack_cocycle(const Rack& X, std::vector<std::vector<Rational>> values);

// Checks the rack 2-cocycle identity without throwing; used by the
// twist-agreement machinery.
std::optional<std::array<int, 3>> rack_cocycle_violation(const Rack& X,
                                                         const std::vector<std::vector<Rational>>& q);

struct RackTwistResult {
    std::vector<std::vector<Rational>> q_phi; // phi(x,y) phi^{-1}(x|>y, x) q_xy
    bool valid = false;                       // the compatibility condition
    std::optional<std::array<int, 3>> witness;
};

// Twists q by an arbitrary nonzero table phi on X x X; `valid` reports the
// compatibility condition, which holds iff q_phi is again a rack
// 2-cocycle (both are computed; callers may assert agreement).
RackTwistResult twist_rack_cocycle(const Rack& X, const RackCocycle& q,
                                   const std::vector<std::vector<Rational>>& phi);

/**
 * The conjugation rack of transpositions in S_n, elements ordered
 * lexicographically by (a,b), a < b, with the two standard cocycles
 * attached.
 */
struct TranspositionRack {
    int n = 0;
    Rack rack;
    std::vector<GroupElement> elements; // embedding into S_n
    RackCocycle minus_one;
    RackCocycle chi;
};

TranspositionRack transposition_rack(int n);

enum class FKCocycle { MinusOne, Chi };

// Yetter-Drinfeld model of M(O_2^n, q) over S_n.
std::shared_ptr<const MonomialYD> fk_model(int n, FKCocycle kind, long size_budget = 2000000);

// The quadratic relation lists of the two Nichols algebras (squares,
// disjoint-pair relations, and both cyclic orders per triple a < b < c).
// Errors: UnsupportedN (n must be 3, 4 or 5).
Presentation fk_relations(int n, FKCocycle kind);

// Graded dimensions of T(V) / <ker Q_2, ..., ker Q_maxdeg> for degrees
// 0..max_deg. Errors: SizeBudgetExceeded.
std::vector<long> nichols_hilbert(int n, FKCocycle kind, int max_deg, long size_budget = 2000000);

// The deformed quadratic algebra H(Q_n^{-1}[t]) with t = (Lambda, Gamma):
// squares, a_s a_t + a_t a_s - Lambda (1 - h_s h_t) for disjoint pairs,
// a_s a_t + a_t a_u + a_u a_s - Gamma (1 - h_s h_t) for overlapping pairs
// (u = s |> t). Group-action relations are structural. Errors:
// UnsupportedN (n >= 4).
Presentation build_hq(int n, const Rational& Lambda, const Rational& Gamma);

// Exponential-cocycle deformation check: sigma_lambda = e^{eta~} with
// eta(x_tau, x_mu) = lambda on all generator pairs turns the bosonization
// of B(O_2^n, -1) into H(Q_n^{-1}[(2 lambda, 3 lambda)]); all three
// relation families are checked exactly in the degree-2 window.
VerifyReport verify_exp_deformation(int n, const Rational& lambda, long size_budget = 2000000);

// The composite-cocycle check: a user-supplied group 2-cocycle phi on S_n
// whose restriction twists chi to -1, convolved with sigma_lambda, turns
// the chi-bosonization into the same H(Q_n^{-1}[(2 lambda, 3 lambda)]).
// Errors: BadTwistTable (with witness pair), CocycleViolation.
VerifyReport compose_with_group_twist(int n, const GroupCocycleTable& phi,
                                      const Rational& lambda, long size_budget = 2000000);

// Helper: seeded search for +-1 tables on X x X satisfying the twist
// compatibility condition (exhaustive for n = 3, sampled for n = 4).
std::optional<std::vector<std::vector<Rational>>> search_twist_tables(int n, FKCocycle source,
                                                                      std::uint64_t seed,
                                                                      long max_tries);

// The exponential cocycle sigma_lambda used by the two checks above.
HopfCocycle fk_exp_cocycle(int n, const Rational& lambda, long size_budget = 2000000);

} // namespace qtwist
