#include "qtwist/smash.hpp"

#include <sstream>

namespace qtwist {

void SmashElement::add_term(const SmashMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

int SmashElement::word_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, static_cast<int>(m.word.size()));
    return d;
}

SmashElement SmashElement::operator+(const SmashElement& o) const {
    SmashElement r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
}

SmashElement SmashElement::operator-(const SmashElement& o) const {
    SmashElement r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, -c);
    return r;
}

SmashElement SmashElement::operator-() const {
    SmashElement r;
    for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
    return r;
}

SmashElement SmashElement::scaled(const Rational& c) const {
    SmashElement r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms) r.terms.emplace(m, c * v);
    return r;
}

SmashElement sm_zero() { return SmashElement{}; }

SmashElement sm_one(const MonomialYD& V) {
    SmashElement r;
    r.terms.emplace(SmashMonomial{{}, V.group_identity()}, Rational(1));
    return r;
}

SmashElement sm_generator(const MonomialYD& V, int i) {
    SmashElement r;
    r.terms.emplace(SmashMonomial{{i}, V.group_identity()}, Rational(1));
    return r;
}

SmashElement sm_group(const GroupElement& g) {
    SmashElement r;
    r.terms.emplace(SmashMonomial{{}, g}, Rational(1));
    return r;
}

SmashElement sm_monomial(const SmashMonomial& m, const Rational& c) {
    SmashElement r;
    r.add_term(m, c);
    return r;
}

SmashElement multiply(const MonomialYD& V, const SmashElement& a, const SmashElement& b) {
    SmashElement out;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            // (w_a # g)(w_b # h) = w_a (g . w_b) # g h
            Rational coef = ca * cb;
            std::vector<int> word = ma.word;
            word.reserve(ma.word.size() + mb.word.size());
            for (int letter : mb.word) {
                auto [s, target] = V.act(ma.group, letter);
                coef *= s;
                word.push_back(target);
            }
            out.add_term(SmashMonomial{std::move(word), ma.group * mb.group}, coef);
        }
    }
    return out;
}

SmashElement multiply(const MonomialYD& V, const std::vector<SmashElement>& factors) {
    if (factors.empty()) return sm_one(V);
    SmashElement acc = factors.front();
    for (size_t i = 1; i < factors.size(); ++i) acc = multiply(V, acc, factors[i]);
    return acc;
}

Rational counit(const SmashElement& a) {
    Rational r(0);
    for (const auto& [m, c] : a.terms)
        if (m.word.empty()) r += c;
    return r;
}

SmashElement antipode(const MonomialYD& V, const SmashElement& a) {
    SmashElement out;
    for (const auto& [m, c] : a.terms) {
        // S(x_{i1}...x_{ik} # g) = S(1#g) S(x_{ik}#1) ... S(x_{i1}#1)
        SmashElement acc = sm_group(m.group.inverse());
        for (auto it = m.word.rbegin(); it != m.word.rend(); ++it) {
            const GroupElement gi = V.degree(*it);
            SmashElement s = multiply(V, sm_group(gi.inverse()), sm_generator(V, *it)).scaled(Rational(-1));
            acc = multiply(V, acc, s);
        }
        for (const auto& [mm, cc] : acc.terms) out.add_term(mm, c * cc);
    }
    return out;
}

GroupElement coaction_degree(const MonomialYD& V, const SmashMonomial& m) {
    GroupElement g = V.group_identity();
    for (int letter : m.word) g = g * V.degree(letter);
    return g * m.group;
}

SmashElement group_conjugate(const MonomialYD& V, const GroupElement& h, const SmashElement& a) {
    return multiply(V, multiply(V, sm_group(h), a), sm_group(h.inverse()));
}

SmashElement braided_adjoint(const MonomialYD& V, const SmashElement& x, const SmashElement& y) {
    if (x.is_zero()) return sm_zero();
    // x must be homogeneous for the coaction
    auto it = x.terms.begin();
    GroupElement gx = coaction_degree(V, it->first);
    for (const auto& [m, c] : x.terms)
        if (!(coaction_degree(V, m) == gx))
            fail("NotHomogeneous", "braided adjoint needs a coaction-homogeneous left argument");
    return multiply(V, x, y) - multiply(V, group_conjugate(V, gx, y), x);
}

BiDegree weight(const MonomialYD& V, const SmashElement& a) {
    if (a.is_zero()) fail("NotHomogeneous", "weight of 0 is undefined");
    bool first = true;
    BiDegree w{V.group_identity(), V.group_identity()};
    for (const auto& [m, c] : a.terms) {
        BiDegree cur{coaction_degree(V, m), m.group};
        if (first) {
            w = cur;
            first = false;
        } else if (!(cur == w)) {
            fail("NotHomogeneous", "element is not Gamma x Gamma homogeneous");
        }
    }
    return w;
}

TensorElement coproduct_power(const MonomialYD& V, const SmashElement& a, int k,
                              int degree_bound) {
    if (a.word_degree() > degree_bound)
        fail("DegreeBudgetExceeded", "coproduct input exceeds word-degree bound " +
                                         std::to_string(degree_bound));
    TensorElement out;
    const GroupElement e = V.group_identity();
    for (const auto& [m, c] : a.terms) {
        // product over letters of Delta^k(x_i), then Delta^k(1#g)
        TensorElement acc;
        acc.emplace(TensorMonomial(k, SmashMonomial{{}, e}), Rational(1));
        for (int letter : m.word) {
            const GroupElement& gi = V.degree(letter);
            TensorElement next;
            for (const auto& [slots, coef] : acc) {
                // letter lands in slot s; slots before s pick up the
                // group-like deg(letter), later slots multiply by 1
                for (int s = 0; s < k; ++s) {
                    TensorMonomial t = slots;
                    Rational cc = coef;
                    for (int j = 0; j < s; ++j) {
                        t[j].group = t[j].group * gi;
                    }
                    // append the letter to slot s, acted on by its group part
                    auto [sc, target] = V.act(t[s].group, letter);
                    cc *= sc;
                    t[s].word.push_back(target);
                    auto [it, ins] = next.emplace(std::move(t), cc);
                    if (!ins) {
                        it->second += cc;
                        if (it->second.is_zero()) next.erase(it);
                    }
                }
            }
            acc = std::move(next);
        }
        for (auto& [slots, coef] : acc) {
            TensorMonomial t = slots;
            for (int j = 0; j < k; ++j) t[j].group = t[j].group * m.group;
            Rational cc = coef * c;
            auto [it, ins] = out.emplace(std::move(t), cc);
            if (!ins) {
                it->second += cc;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

std::vector<std::pair<SmashElement, SmashElement>> coproduct(const MonomialYD& V,
                                                             const SmashElement& a,
                                                             int degree_bound) {
    TensorElement t = coproduct_power(V, a, 2, degree_bound);
    std::map<SmashMonomial, SmashElement> grouped;
    for (const auto& [slots, c] : t) grouped[slots[0]].add_term(slots[1], c);
    std::vector<std::pair<SmashElement, SmashElement>> out;
    out.reserve(grouped.size());
    for (auto& [left, right] : grouped)
        out.emplace_back(sm_monomial(left), std::move(right));
    return out;
}

std::string to_string(const MonomialYD& V, const SmashElement& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : a.terms) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        os << " * ";
        if (m.word.empty())
            os << "1";
        else {
            for (size_t i = 0; i < m.word.size(); ++i)
                os << (i ? "." : "") << V.generator_name(m.word[i]);
        }
        if (!m.group.is_identity()) os << " # " << m.group.str();
    }
    return os.str();
}

} // namespace qtwist
