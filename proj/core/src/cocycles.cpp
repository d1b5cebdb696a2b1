#include "qtwist/cocycles.hpp"

#include <variant>

namespace qtwist {

GroupCocycleTable::GroupCocycleTable(
    int n, std::map<std::pair<GroupElement, GroupElement>, Rational> values)
    : n_(n), values_(std::move(values)) {
    for (const auto& [k, v] : values_)
        if (v.is_zero()) fail("ZeroEntry", "group cocycle values must be nonzero");
    auto elems = symmetric_group(n_);
    GroupElement e = GroupElement::perm_identity(n_);
    for (const auto& g : elems) {
        if ((*this)(g, e) != Rational(1) || (*this)(e, g) != Rational(1))
            fail("CocycleViolation", "table is not normalized at g = " + g.str());
    }
    for (const auto& g : elems)
        for (const auto& h : elems)
            for (const auto& t : elems) {
                if ((*this)(g, h) * (*this)(g * h, t) != (*this)(h, t) * (*this)(g, h * t))
                    fail("CocycleViolation", "group 2-cocycle identity fails at (" + g.str() +
                                                 ", " + h.str() + ", " + t.str() + ")");
            }
}

Rational GroupCocycleTable::operator()(const GroupElement& g, const GroupElement& h) const {
    auto it = values_.find({g, h});
    return it == values_.end() ? Rational(1) : it->second;
}

GroupCocycleTable GroupCocycleTable::inverse() const {
    GroupCocycleTable t;
    t.n_ = n_;
    for (const auto& [k, v] : values_) t.values_.emplace(k, v.inverse());
    return t;
}

struct HopfCocycle::Impl {
    // the convolution list comes first so the variant is default-constructible
    std::variant<std::vector<HopfCocycle>, Bicharacter, GroupCocycleTable, Exp> v;

    // guarded memo for the coproduct-expanding kinds (exp, convolve);
    // exp evaluations are host-independent, convolved ones are pinned to
    // the first host seen and the cache shuts off if another appears
    mutable std::mutex mu;
    mutable const MonomialYD* cache_host = nullptr;
    mutable bool cache_on = true;
    mutable std::map<std::pair<SmashMonomial, SmashMonomial>, Rational> cache;
};

namespace {

// Psi-scalar of the diagonal identification (A_host)_phi~ = A_model
Rational pullback_scalar(const MonomialYD& model, const GroupCocycleTable& phi,
                         const SmashMonomial& m) {
    Rational acc(1);
    GroupElement suffix = m.group;
    for (auto it = m.word.rbegin(); it != m.word.rend(); ++it) {
        acc *= phi(model.degree(*it), suffix).inverse();
        suffix = model.degree(*it) * suffix;
    }
    return acc;
}

} // namespace

HopfCocycle HopfCocycle::from_bicharacter(Bicharacter b) {
    auto impl = std::make_shared<Impl>();
    impl->v = std::move(b);
    return HopfCocycle(std::move(impl));
}

HopfCocycle HopfCocycle::from_table(GroupCocycleTable t) {
    auto impl = std::make_shared<Impl>();
    impl->v = std::move(t);
    return HopfCocycle(std::move(impl));
}

HopfCocycle HopfCocycle::trivial() {
    auto impl = std::make_shared<Impl>();
    impl->v = std::vector<HopfCocycle>{};
    return HopfCocycle(std::move(impl));
}

HopfCocycle HopfCocycle::exponential(std::shared_ptr<const MonomialYD> action_model,
                                     std::vector<std::vector<Rational>> coeff,
                                     const Rational& scale) {
    const MonomialYD& V = *action_model;
    int N = V.size();
    if (static_cast<int>(coeff.size()) != N)
        fail("SizeMismatch", "eta coefficient matrix does not match the generator count");
    for (auto& row : coeff) {
        if (static_cast<int>(row.size()) != N)
            fail("SizeMismatch", "eta coefficient matrix is not square");
        for (auto& c : row) c *= scale;
    }
    // ad-invariance: eta(h.x, h.y) = eta(x, y) for every group element
    if (!V.abelian_group()) {
        for (const auto& h : symmetric_group(V.group_rank()))
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    auto [si, ti] = V.act(h, i);
                    auto [sj, tj] = V.act(h, j);
                    if (si * sj * coeff[ti][tj] != coeff[i][j])
                        fail("NotInvariant", "eta is not invariant under the group action at h = " +
                                                 h.str());
                }
    } else {
        for (int k = 0; k < V.group_rank(); ++k) {
            GroupElement h = GroupElement::abelian_generator(V.group_rank(), k);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    auto [si, ti] = V.act(h, i);
                    auto [sj, tj] = V.act(h, j);
                    if (si * sj * coeff[ti][tj] != coeff[i][j])
                        fail("NotInvariant", "eta is not invariant under the group action");
                }
        }
    }
    auto impl = std::make_shared<Impl>();
    impl->v = Exp{std::move(action_model), std::move(coeff), std::nullopt};
    return HopfCocycle(std::move(impl));
}

HopfCocycle HopfCocycle::pulled_back(GroupCocycleTable phi) const {
    const Exp* ex = std::get_if<Exp>(&impl_->v);
    if (!ex) fail("ModelMismatch", "only exponential cocycles support pullback");
    auto impl = std::make_shared<Impl>();
    impl->v = Exp{ex->action_model, ex->eta, std::move(phi)};
    return HopfCocycle(std::move(impl));
}

HopfCocycle HopfCocycle::inverse() const {
    // structural inverse: entrywise for induced forms, e^{-eta} for
    // exponentials, reversed inverses for composites
    const Impl& im = *impl_;
    if (std::holds_alternative<Bicharacter>(im.v)) {
        auto impl = std::make_shared<Impl>();
        impl->v = std::get<Bicharacter>(im.v).inverse();
        return HopfCocycle(std::move(impl));
    }
    if (std::holds_alternative<GroupCocycleTable>(im.v)) {
        auto impl = std::make_shared<Impl>();
        impl->v = std::get<GroupCocycleTable>(im.v).inverse();
        return HopfCocycle(std::move(impl));
    }
    if (std::holds_alternative<Exp>(im.v)) {
        // e^{-eta~}; a pullback survives inversion since Psi commutes with
        // convolution inverses
        Exp ex = std::get<Exp>(im.v);
        for (auto& row : ex.eta)
            for (auto& c : row) c = -c;
        auto impl = std::make_shared<Impl>();
        impl->v = std::move(ex);
        return HopfCocycle(std::move(impl));
    }
    const auto& factors = std::get<std::vector<HopfCocycle>>(im.v);
    std::vector<HopfCocycle> rev;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) rev.push_back(it->inverse());
    auto impl = std::make_shared<Impl>();
    impl->v = std::move(rev);
    return HopfCocycle(std::move(impl));
}

const char* HopfCocycle::kind() const {
    const Impl& im = *impl_;
    if (std::holds_alternative<Bicharacter>(im.v)) return "bicharacter";
    if (std::holds_alternative<GroupCocycleTable>(im.v)) return "table";
    if (std::holds_alternative<Exp>(im.v)) return "exp";
    return "convolve";
}

const Bicharacter* HopfCocycle::as_bicharacter() const {
    return std::get_if<Bicharacter>(&impl_->v);
}
const GroupCocycleTable* HopfCocycle::as_table() const {
    return std::get_if<GroupCocycleTable>(&impl_->v);
}
const std::vector<HopfCocycle>* HopfCocycle::as_convolved() const {
    return std::get_if<std::vector<HopfCocycle>>(&impl_->v);
}

HopfCocycle convolve(const HopfCocycle& outer, const HopfCocycle& inner) {
    std::vector<HopfCocycle> factors{outer, inner};
    auto impl = std::make_shared<HopfCocycle::Impl>();
    impl->v = std::move(factors);
    return HopfCocycle(std::move(impl));
}

namespace {

long factorial(int n) {
    long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace

Rational HopfCocycle::eval(const MonomialYD& model, const SmashMonomial& u,
                           const SmashMonomial& v) const {
    const Impl& im = *impl_;
    if (std::holds_alternative<Bicharacter>(im.v)) {
        if (!u.word.empty() || !v.word.empty()) return Rational(0);
        return std::get<Bicharacter>(im.v)(u.group, v.group);
    }
    if (std::holds_alternative<GroupCocycleTable>(im.v)) {
        if (!u.word.empty() || !v.word.empty()) return Rational(0);
        return std::get<GroupCocycleTable>(im.v)(u.group, v.group);
    }
    {
        std::lock_guard<std::mutex> lock(im.mu);
        bool exp_kind = std::holds_alternative<Exp>(im.v);
        if (!exp_kind) {
            if (im.cache_host == nullptr)
                im.cache_host = &model;
            else if (im.cache_host != &model) {
                im.cache_on = false;
                im.cache.clear();
            }
        }
        if (im.cache_on) {
            auto it = im.cache.find({u, v});
            if (it != im.cache.end()) return it->second;
        }
    }
    Rational result = eval_uncached(model, u, v);
    {
        std::lock_guard<std::mutex> lock(im.mu);
        if (im.cache_on) im.cache.emplace(std::make_pair(u, v), result);
    }
    return result;
}

Rational HopfCocycle::eval_uncached(const MonomialYD& model, const SmashMonomial& u,
                                    const SmashMonomial& v) const {
    const Impl& im = *impl_;
    if (std::holds_alternative<Exp>(im.v)) {
        const Exp& ex = std::get<Exp>(im.v);
        int du = static_cast<int>(u.word.size());
        int dv = static_cast<int>(v.word.size());
        if (du != dv) return Rational(0);
        if (du == 0) return Rational(1);
        const MonomialYD& act = *ex.action_model;
        // eta~^{*d}(u, v) / d!: only the splittings into d bidegree-(1,1)
        // slots survive. Coproducts run in the cocycle's own model; a
        // pulled-back cocycle additionally rescales both arguments by the
        // Psi-scalars of the identification with its model.
        Rational pull(1);
        if (ex.pullback)
            pull = pullback_scalar(act, *ex.pullback, u) * pullback_scalar(act, *ex.pullback, v);
        TensorElement tu = coproduct_power(act, sm_monomial(u), du, du);
        TensorElement tv = coproduct_power(act, sm_monomial(v), du, du);
        Rational acc(0);
        for (const auto& [su, cu] : tu) {
            bool ok = true;
            for (const auto& s : su)
                if (s.word.size() != 1) { ok = false; break; }
            if (!ok) continue;
            for (const auto& [sv, cv] : tv) {
                bool ok2 = true;
                for (const auto& s : sv)
                    if (s.word.size() != 1) { ok2 = false; break; }
                if (!ok2) continue;
                Rational prod = cu * cv;
                for (int s = 0; s < du; ++s) {
                    // eta~(x_tau # h, x_mu # k) = eta(x_tau, h . x_mu)
                    auto [sc, target] = act.act(su[s].group, sv[s].word[0]);
                    prod *= sc * ex.eta[su[s].word[0]][target];
                }
                acc += prod;
            }
        }
        return pull * acc / Rational(factorial(du));
    }
    const auto& factors = std::get<std::vector<HopfCocycle>>(im.v);
    if (factors.empty()) { // trivial cocycle epsilon (x) epsilon
        if (!u.word.empty() || !v.word.empty()) return Rational(0);
        return Rational(1);
    }
    int k = static_cast<int>(factors.size());
    int bound = std::max<int>(u.word.size(), v.word.size());
    TensorElement tu = coproduct_power(model, sm_monomial(u), k, bound);
    TensorElement tv = coproduct_power(model, sm_monomial(v), k, bound);
    Rational acc(0);
    for (const auto& [su, cu] : tu)
        for (const auto& [sv, cv] : tv) {
            Rational prod = cu * cv;
            for (int s = 0; s < k && !prod.is_zero(); ++s)
                prod *= factors[s].eval(model, su[s], sv[s]);
            acc += prod;
        }
    return acc;
}

Rational HopfCocycle::eval(const MonomialYD& model, const SmashElement& u,
                           const SmashElement& v) const {
    Rational acc(0);
    for (const auto& [mu, cu] : u.terms)
        for (const auto& [mv, cv] : v.terms) acc += cu * cv * eval(model, mu, mv);
    return acc;
}

SmashElement deform_product_over(const MonomialYD& model, const HopfCocycle& sigma,
                                 const SmashElement& u, const SmashElement& v, int degree_bound,
                                 const MultiplyFn& mult) {
    if (u.word_degree() > degree_bound || v.word_degree() > degree_bound)
        fail("DegreeBudgetExceeded", "deformed product above the degree bound");
    HopfCocycle sigma_inv = sigma.inverse();
    TensorElement tu = coproduct_power(model, u, 3, degree_bound);
    TensorElement tv = coproduct_power(model, v, 3, degree_bound);
    SmashElement out;
    for (const auto& [su, cu] : tu)
        for (const auto& [sv, cv] : tv) {
            Rational left = sigma.eval(model, su[0], sv[0]);
            if (left.is_zero()) continue;
            Rational right = sigma_inv.eval(model, su[2], sv[2]);
            if (right.is_zero()) continue;
            SmashElement mid = mult(model, sm_monomial(su[1]), sm_monomial(sv[1]));
            Rational c = cu * cv * left * right;
            for (const auto& [m, mc] : mid.terms) out.add_term(m, c * mc);
        }
    return out;
}

SmashElement deform_product(const MonomialYD& model, const HopfCocycle& sigma,
                            const SmashElement& u, const SmashElement& v, int degree_bound) {
    return deform_product_over(model, sigma, u, v, degree_bound,
                               [](const MonomialYD& V, const SmashElement& a,
                                  const SmashElement& b) { return multiply(V, a, b); });
}

SmashElement deform_antipode(const MonomialYD& model, const HopfCocycle& sigma,
                             const SmashElement& u, int degree_bound) {
    if (u.word_degree() > degree_bound)
        fail("DegreeBudgetExceeded", "deformed antipode above the degree bound");
    HopfCocycle sigma_inv = sigma.inverse();
    TensorElement tu = coproduct_power(model, u, 5, degree_bound);
    SmashElement out;
    for (const auto& [su, cu] : tu) {
        SmashElement s2 = antipode(model, sm_monomial(su[1]));
        Rational left = sigma.eval(model, sm_monomial(su[0]), s2);
        if (left.is_zero()) continue;
        SmashElement s4 = antipode(model, sm_monomial(su[3]));
        Rational right = sigma_inv.eval(model, s4, sm_monomial(su[4]));
        if (right.is_zero()) continue;
        SmashElement mid = antipode(model, sm_monomial(su[2]));
        Rational c = cu * left * right;
        for (const auto& [m, mc] : mid.terms) out.add_term(m, c * mc);
    }
    return out;
}

SmashElement twisted_action(const MonomialYD& model, const HopfCocycle& sigma,
                            const GroupElement& h, const SmashElement& a) {
    if (a.is_zero()) return a;
    GroupElement g = coaction_degree(model, a.terms.begin()->first);
    for (const auto& [m, c] : a.terms)
        if (!(coaction_degree(model, m) == g))
            fail("NotHomogeneous", "twisted action needs a coaction-homogeneous argument");
    GroupElement hgh = (h * g) * h.inverse();
    Rational c1 = sigma.eval(model, SmashMonomial{{}, h}, SmashMonomial{{}, g});
    Rational c2 = sigma.inverse().eval(model, SmashMonomial{{}, hgh}, SmashMonomial{{}, h});
    return group_conjugate(model, h, a).scaled(c1 * c2);
}

SmashElement star_product(const MonomialYD& model, const Bicharacter& phi, const SmashElement& u,
                          const SmashElement& v) {
    BiDegree du = weight(model, u);
    BiDegree dv = weight(model, v);
    Rational c = phi(du.left, dv.left) * phi(du.right, dv.right).inverse();
    return multiply(model, u, v).scaled(c);
}

bool cocycle_identity_holds(const MonomialYD& model, const HopfCocycle& sigma,
                            const SmashMonomial& a, const SmashMonomial& b,
                            const SmashMonomial& c) {
    int bound = static_cast<int>(a.word.size() + b.word.size() + c.word.size());
    TensorElement tb = coproduct_power(model, sm_monomial(b), 2, bound);
    TensorElement tc = coproduct_power(model, sm_monomial(c), 2, bound);
    TensorElement ta = coproduct_power(model, sm_monomial(a), 2, bound);
    Rational lhs(0), rhs(0);
    for (const auto& [sb, cb] : tb)
        for (const auto& [sc, cc] : tc) {
            Rational f = sigma.eval(model, sb[0], sc[0]);
            if (f.is_zero()) continue;
            SmashElement b2c2 = multiply(model, sm_monomial(sb[1]), sm_monomial(sc[1]));
            lhs += cb * cc * f * sigma.eval(model, sm_monomial(a), b2c2);
        }
    for (const auto& [sa, ca] : ta)
        for (const auto& [sb, cb] : tb) {
            Rational f = sigma.eval(model, sa[0], sb[0]);
            if (f.is_zero()) continue;
            SmashElement a2b2 = multiply(model, sm_monomial(sa[1]), sm_monomial(sb[1]));
            rhs += ca * cb * f * sigma.eval(model, a2b2, sm_monomial(c));
        }
    return lhs == rhs;
}

} // namespace qtwist
