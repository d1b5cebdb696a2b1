#include "qtwist/ideals.hpp"

#include <algorithm>
#include <set>

namespace qtwist {

namespace {

std::vector<std::vector<int>> words_of_length(int N, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> w(len, 0);
    if (len == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(w);
        int k = len - 1;
        while (k >= 0 && ++w[k] == N) w[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

// Conjugation character of a word: the scalar vector by which each group
// generator acts. Relations and spanning products are weight vectors for
// this character, so columns whose character does not occur in the query
// can never contribute.
std::vector<Rational> word_character(const MonomialYD& V, const std::vector<int>& w) {
    std::vector<Rational> out;
    out.reserve(V.group_rank());
    for (int j = 0; j < V.group_rank(); ++j) {
        GroupElement gj = GroupElement::abelian_generator(V.group_rank(), j);
        Rational s(1);
        for (int letter : w) s *= V.act(gj, letter).first;
        out.push_back(s);
    }
    return out;
}

struct ColumnMeta {
    SmashMonomial left;
    int relation;
    SmashMonomial right;
};

} // namespace

MembershipCertificate ideal_member(const SmashElement& elem, const Presentation& P, int D) {
    const MonomialYD& V = *P.model;
    if (elem.word_degree() > D)
        fail("DegreeBudgetExceeded",
             "query has word degree " + std::to_string(elem.word_degree()) +
                 " above the filtration bound " + std::to_string(D));
    MembershipCertificate cert;
    cert.bound = D;
    if (elem.is_zero()) {
        cert.decision = true;
        return cert;
    }

    const GroupElement e = V.group_identity();

    // group-part candidates for the right multiplier
    std::set<GroupElement> rel_groups{e}, query_groups;
    for (const auto& r : P.relations)
        for (const auto& [m, c] : r.terms) rel_groups.insert(m.group);
    for (const auto& [m, c] : elem.terms) query_groups.insert(m.group);
    std::set<GroupElement> right_groups;
    if (V.abelian_group()) {
        std::set<GroupElement> base = query_groups;
        base.insert(rel_groups.begin(), rel_groups.end());
        for (const auto& a : rel_groups)
            for (const auto& b : base) right_groups.insert(a.inverse() * b);
    } else {
        for (const auto& g : symmetric_group(V.group_rank())) right_groups.insert(g);
    }
    std::vector<GroupElement> left_groups{e};
    if (!V.abelian_group())
        left_groups.assign(symmetric_group(V.group_rank()).begin(),
                           symmetric_group(V.group_rank()).end());

    // character pruning (abelian only, and only when every relation is a
    // genuine weight vector)
    bool prune = V.abelian_group();
    if (prune)
        for (const auto& r : P.relations) {
            if (r.is_zero()) continue;
            auto ref = word_character(V, r.terms.begin()->first.word);
            for (const auto& [m, c] : r.terms)
                if (word_character(V, m.word) != ref) { prune = false; break; }
            if (!prune) break;
        }
    std::set<std::vector<Rational>> query_chars;
    if (prune)
        for (const auto& [m, c] : elem.terms) query_chars.insert(word_character(V, m.word));

    // intern basis monomials
    std::map<SmashMonomial, int> basis;
    auto intern = [&basis](const SmashMonomial& m) {
        auto [it, ins] = basis.emplace(m, static_cast<int>(basis.size()));
        return it->second;
    };
    auto flatten = [&](const SmashElement& x) {
        std::vector<std::pair<int, Rational>> v;
        for (const auto& [m, c] : x.terms) v.emplace_back(intern(m), c);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    };

    SparseVec target = flatten(elem);

    std::vector<ColumnMeta> metas;
    std::vector<SparseVec> columns;
    for (size_t k = 0; k < P.relations.size(); ++k) {
        const SmashElement& r = P.relations[k];
        if (r.is_zero()) continue;
        int rdeg = r.word_degree();
        std::vector<Rational> rel_char;
        if (prune) rel_char = word_character(V, r.terms.begin()->first.word);
        for (int lu = 0; lu + rdeg <= D; ++lu) {
            for (const auto& u : words_of_length(V.size(), lu)) {
                std::vector<Rational> uchar;
                if (prune) uchar = word_character(V, u);
                for (int lv = 0; lu + rdeg + lv <= D; ++lv) {
                    for (const auto& v : words_of_length(V.size(), lv)) {
                        if (prune) {
                            auto vchar = word_character(V, v);
                            std::vector<Rational> total(uchar.size(), Rational(1));
                            for (size_t j = 0; j < total.size(); ++j)
                                total[j] = uchar[j] * rel_char[j] * vchar[j];
                            if (!query_chars.count(total)) continue;
                        }
                        for (const auto& gl : left_groups) {
                            SmashMonomial lm{u, gl};
                            SmashElement lr = multiply(V, sm_monomial(lm), r);
                            for (const auto& g : right_groups) {
                                SmashMonomial rm{v, g};
                                SmashElement col = multiply(V, lr, sm_monomial(rm));
                                if (col.is_zero() || col.word_degree() > D) continue;
                                metas.push_back(ColumnMeta{lm, static_cast<int>(k), rm});
                                columns.push_back(flatten(col));
                            }
                        }
                    }
                }
            }
        }
    }

    // prescreen mod p; the exact pass below always confirms
    bool maybe_member = true;
    try {
        LinearSpanModP modp(LinearSpanModP::default_prime);
        for (const auto& c : columns) modp.insert(c);
        maybe_member = modp.contains(target);
    } catch (const Error&) {
        maybe_member = true; // prime collided with a denominator; exact pass decides
    }

    LinearSpan span(maybe_member);
    for (size_t i = 0; i < columns.size(); ++i) span.insert(SparseVec(columns[i]), static_cast<int>(i));
    auto expr = span.express(target);
    if (expr && !maybe_member) {
        // prescreen misjudged (prime divided a pivot); redo with tracking
        LinearSpan tracked(true);
        for (size_t i = 0; i < columns.size(); ++i)
            tracked.insert(SparseVec(columns[i]), static_cast<int>(i));
        expr = tracked.express(target);
    }
    if (!expr) {
        cert.decision = false;
        return cert;
    }
    cert.decision = true;
    for (const auto& [id, c] : *expr) {
        const auto& meta = metas[static_cast<size_t>(id)];
        cert.combination.push_back(CombinationTerm{meta.left, meta.relation, meta.right, c});
    }
    return cert;
}

SmashElement certificate_resum(const Presentation& P, const MembershipCertificate& cert) {
    const MonomialYD& V = *P.model;
    SmashElement acc;
    for (const auto& t : cert.combination) {
        SmashElement term = multiply(V, multiply(V, sm_monomial(t.left), P.relations[t.relation]),
                                     sm_monomial(t.right));
        acc = acc + term.scaled(t.coefficient);
    }
    return acc;
}

bool equal_mod(const SmashElement& a, const SmashElement& b, const Presentation& P, int D) {
    return ideal_member(a - b, P, D).decision;
}

long graded_dimension(const Presentation& P, int d) {
    const MonomialYD& V = *P.model;
    std::vector<std::vector<std::pair<std::vector<int>, Rational>>> rels;
    for (const auto& r : P.relations) {
        if (r.is_zero()) continue;
        int len = static_cast<int>(r.terms.begin()->first.word.size());
        std::map<std::vector<int>, Rational> proj;
        for (const auto& [m, c] : r.terms) {
            if (static_cast<int>(m.word.size()) != len)
                fail("InhomogeneousRelations",
                     "relation mixes word degrees; graded count undefined");
            Rational& slot = proj[m.word];
            slot += c;
        }
        std::vector<std::pair<std::vector<int>, Rational>> rel;
        for (const auto& [w, c] : proj)
            if (!c.is_zero()) rel.emplace_back(w, c);
        if (!rel.empty()) rels.push_back(std::move(rel));
    }
    return graded_dimension_words(V.size(), rels, d);
}

long graded_dimension_words(
    int N, const std::vector<std::vector<std::pair<std::vector<int>, Rational>>>& rels, int d) {
    long dim = 1;
    for (int k = 0; k < d; ++k) dim *= N;
    LinearSpan span(false);
    int id = 0;
    for (const auto& rel : rels) {
        int k = static_cast<int>(rel.front().first.size());
        if (k > d) continue;
        for (int a = 0; a + k <= d; ++a) {
            int b = d - k - a;
            for (const auto& u : words_of_length(N, a)) {
                for (const auto& v : words_of_length(N, b)) {
                    SparseVec col;
                    std::map<long, Rational> acc;
                    for (const auto& [w, c] : rel) {
                        std::vector<int> full = u;
                        full.insert(full.end(), w.begin(), w.end());
                        full.insert(full.end(), v.begin(), v.end());
                        Rational& slot = acc[word_index(full, N)];
                        slot += c;
                    }
                    for (const auto& [idx, c] : acc)
                        if (!c.is_zero()) col.emplace_back(static_cast<int>(idx), c);
                    span.insert(std::move(col), id++);
                }
            }
        }
    }
    return dim - span.rank();
}

} // namespace qtwist
