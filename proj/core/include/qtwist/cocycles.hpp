#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "qtwist/bicharacter.hpp"
#include "qtwist/smash.hpp"

namespace qtwist {

/**
 * Explicit 2-cocycle value table on a finite group (the S_n case, where no
 * bicharacter form exists). Values default to 1 on unlisted pairs;
 * construction checks phi(g,h) phi(gh,t) = phi(h,t) phi(g,ht) and the
 * normalization phi(g,e) = phi(e,g) = 1 over the whole group.
 */
class GroupCocycleTable {
public:
    GroupCocycleTable(int n, std::map<std::pair<GroupElement, GroupElement>, Rational> values);

    Rational operator()(const GroupElement& g, const GroupElement& h) const;
    GroupCocycleTable inverse() const;
    int degree() const { return n_; }
    const std::map<std::pair<GroupElement, GroupElement>, Rational>& values() const {
        return values_;
    }

private:
    GroupCocycleTable() = default;
    int n_ = 0;
    std::map<std::pair<GroupElement, GroupElement>, Rational> values_; // non-1 entries only
};

/**
 * Hopf 2-cocycle on a bosonization, in one of the four supported forms:
 *
 *  - induced from a group bicharacter: sigma~(r#h, s#k) = B(h,k) e(r) e(s)
 *  - induced from a finite-group value table (same formula)
 *  - exponential e^{eta~} of a Hochschild cocycle supported in word
 *    bidegree (1,1); eta~(x#h, y#k) = eta(x, h.y) e(k)
 *  - convolution composite sigma_1 * ... * sigma_m (outermost first),
 *    (tau*sigma)(a,b) = tau(a_1,b_1) sigma(a_2,b_2)
 *
 * plus formal inverses of any of these. Cocycles are evaluable
 * functionals, never materialized over the algebra; every deformation is
 * computed on demand through coproduct expansion in the host model.
 */
class HopfCocycle {
public:
    static HopfCocycle from_bicharacter(Bicharacter b);
    static HopfCocycle from_table(GroupCocycleTable t);
    // eta(x_tau, x_mu) = scale * coeff[tau][mu]; `action_model` supplies
    // the group action inside eta~ and the coproducts of the evaluation.
    // Errors: NotInvariant.
    static HopfCocycle exponential(std::shared_ptr<const MonomialYD> action_model,
                                   std::vector<std::vector<Rational>> coeff,
                                   const Rational& scale);
    static HopfCocycle trivial();

    // Pullback of an exponential cocycle along the canonical isomorphism
    // (A_host)_phi~ = A_{action_model}: the iso is diagonal on monomials,
    // Psi(x_{i1}..x_{ik} # h) = prod_j phi(deg x_{ij}, deg(rest_j) h)^{-1}
    // times the monomial, and composing with it is what makes
    // convolve(exp, phi~) a genuine 2-cocycle on the host. Only valid on
    // exponential cocycles.
    HopfCocycle pulled_back(GroupCocycleTable phi) const;

    HopfCocycle inverse() const;

    // evaluation via the host model's coproducts
    Rational eval(const MonomialYD& model, const SmashMonomial& u, const SmashMonomial& v) const;
    Rational eval(const MonomialYD& model, const SmashElement& u, const SmashElement& v) const;

    const char* kind() const;
    const Bicharacter* as_bicharacter() const;
    const GroupCocycleTable* as_table() const;
    const std::vector<HopfCocycle>* as_convolved() const;

    friend HopfCocycle convolve(const HopfCocycle& outer, const HopfCocycle& inner);

private:
    struct Exp {
        std::shared_ptr<const MonomialYD> action_model;
        std::vector<std::vector<Rational>> eta; // scale folded in
        std::optional<GroupCocycleTable> pullback;
    };
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit HopfCocycle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    Rational eval_uncached(const MonomialYD& model, const SmashMonomial& u,
                           const SmashMonomial& v) const;
};

// sigma(a1,b1) a2 b2 sigma^{-1}(a3,b3). Errors: DegreeBudgetExceeded.
SmashElement deform_product(const MonomialYD& model, const HopfCocycle& sigma,
                            const SmashElement& u, const SmashElement& v, int degree_bound);

// Same formula with the middle multiplication replaced (used for the
// groupoid law, where the inner algebra is itself deformed).
using MultiplyFn =
    std::function<SmashElement(const MonomialYD&, const SmashElement&, const SmashElement&)>;
SmashElement deform_product_over(const MonomialYD& model, const HopfCocycle& sigma,
                                 const SmashElement& u, const SmashElement& v, int degree_bound,
                                 const MultiplyFn& mult);

// S_sigma(a) = sigma(a1, S(a2)) S(a3) sigma^{-1}(S(a4), a5).
SmashElement deform_antipode(const MonomialYD& model, const HopfCocycle& sigma,
                             const SmashElement& u, int degree_bound);

// h ->_sigma a = sigma(h, g) sigma^{-1}(h g h^{-1}, h) (h . a) for a
// homogeneous of coaction degree g. Errors: NotHomogeneous.
SmashElement twisted_action(const MonomialYD& model, const HopfCocycle& sigma,
                            const GroupElement& h, const SmashElement& a);

// phi(left degrees) phi(right degrees)^{-1} u v on Gamma x Gamma
// homogeneous arguments. Errors: NotHomogeneous.
SmashElement star_product(const MonomialYD& model, const Bicharacter& phi, const SmashElement& u,
                          const SmashElement& v);

// Checks sigma(b1,c1) sigma(a, b2 c2) = sigma(a1,b1) sigma(a2 b2, c) on
// one monomial triple.
bool cocycle_identity_holds(const MonomialYD& model, const HopfCocycle& sigma,
                            const SmashMonomial& a, const SmashMonomial& b,
                            const SmashMonomial& c);

} // namespace qtwist
