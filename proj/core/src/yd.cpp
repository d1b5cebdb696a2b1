#include "qtwist/yd.hpp"

#include <algorithm>
#include <numeric>

namespace qtwist {

std::shared_ptr<const MonomialYD> MonomialYD::diagonal(const ReducedDatum& d) {
    auto m = std::shared_ptr<MonomialYD>(new MonomialYD());
    int theta = d.theta();
    m->abelian_ = true;
    m->group_rank_ = 2 * theta;
    for (int i = 0; i < theta; ++i) {
        m->degrees_.push_back(d.K(i));
        m->names_.push_back("x" + std::to_string(i + 1));
    }
    for (int i = 0; i < theta; ++i) {
        m->degrees_.push_back(d.L(i));
        m->names_.push_back("y" + std::to_string(i + 1));
    }
    // chi rows: x_i carries chi_i, y_i carries chi_i^{-1};
    // chi_c(L_j) = q_cj, chi_c(K_j) = q_jc.
    for (int c = 0; c < theta; ++c) {
        std::vector<Rational> row(2 * theta, Rational(1));
        for (int j = 0; j < theta; ++j) {
            row[j] = d.q.at(c, j);
            row[theta + j] = d.q.at(j, c);
        }
        m->chi_.push_back(std::move(row));
    }
    for (int c = 0; c < theta; ++c) {
        std::vector<Rational> row(2 * theta, Rational(1));
        for (int j = 0; j < theta; ++j) {
            row[j] = d.q.at(c, j).inverse();
            row[theta + j] = d.q.at(j, c).inverse();
        }
        m->chi_.push_back(std::move(row));
    }
    return m;
}

std::shared_ptr<const MonomialYD> MonomialYD::diagonal_from_qmatrix(const QMatrix& q) {
    auto m = std::shared_ptr<MonomialYD>(new MonomialYD());
    int n = q.size();
    m->abelian_ = true;
    m->group_rank_ = n;
    for (int i = 0; i < n; ++i) {
        m->degrees_.push_back(GroupElement::abelian_generator(n, i));
        m->names_.push_back("x" + std::to_string(i + 1));
        std::vector<Rational> row(n, Rational(1));
        for (int j = 0; j < n; ++j) row[j] = q.at(j, i); // chi_i(g_j) = q_ji
        m->chi_.push_back(std::move(row));
    }
    return m;
}

std::shared_ptr<const MonomialYD> MonomialYD::rack_over_sn(
    int n, std::vector<GroupElement> degrees, std::vector<std::vector<Rational>> cocycle,
    std::vector<std::string> names) {
    auto m = std::shared_ptr<MonomialYD>(new MonomialYD());
    int N = static_cast<int>(degrees.size());
    m->abelian_ = false;
    m->group_rank_ = n;
    m->degrees_ = std::move(degrees);
    m->names_ = std::move(names);
    for (int t = 0; t < N; ++t) {
        std::vector<std::pair<Rational, int>> row;
        for (int i = 0; i < N; ++i) {
            GroupElement target = m->degrees_[t].conjugate(m->degrees_[i]);
            int k = -1;
            for (int j = 0; j < N; ++j)
                if (m->degrees_[j] == target) { k = j; break; }
            if (k < 0) fail("NotClosed", "conjugation leaves the generator set");
            row.emplace_back(cocycle[t][i], k);
        }
        m->transposition_action_.emplace(m->degrees_[t], std::move(row));
    }
    // The transposition table extends to a group action iff
    // chi(t h, i) = chi(t, h |> i) chi(h, i) for every transposition t and
    // group element h; targets agree automatically.
    for (const auto& h : symmetric_group(n)) {
        for (const auto& [t, row] : m->transposition_action_) {
            GroupElement th = t * h;
            for (int i = 0; i < N; ++i) {
                auto [sh, ih] = m->act_perm(h, i);
                auto [st, it] = row[ih];
                auto [sth, ith] = m->act_perm(th, i);
                if (sth != st * sh || ith != it)
                    fail("NotMultiplicative",
                         "cocycle does not extend to an S_n action at h = " + h.str() +
                             ", t = " + t.str() + ", i = " + std::to_string(i));
            }
        }
    }
    return m;
}

GroupElement MonomialYD::group_identity() const {
    return abelian_ ? GroupElement::abelian_identity(group_rank_)
                    : GroupElement::perm_identity(group_rank_);
}

std::pair<Rational, int> MonomialYD::act(const GroupElement& g, int i) const {
    if (abelian_) {
        const auto& e = g.exponents();
        Rational s(1);
        const auto& row = chi_[i];
        for (size_t j = 0; j < e.size(); ++j)
            if (e[j] != 0) s *= row[j].pow(e[j]);
        return {s, i};
    }
    return act_perm(g, i);
}

std::pair<Rational, int> MonomialYD::act_perm(const GroupElement& g, int i) const {
    // Canonical transposition decomposition g = T_1 * ... * T_r (cycle by
    // cycle), applied innermost-first.
    const auto& p = g.images();
    int n = static_cast<int>(p.size());
    std::vector<GroupElement> ts;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s] || p[s] == s) continue;
        std::vector<int> cyc;
        int j = s;
        while (!seen[j]) {
            seen[j] = true;
            cyc.push_back(j);
            j = p[j];
        }
        // (a1 a2 ... am) = (a1 am)(a1 a_{m-1})...(a1 a2), rightmost applied first
        for (size_t k = cyc.size() - 1; k >= 1; --k)
            ts.push_back(GroupElement::transposition(n, cyc[0], cyc[k]));
    }
    Rational s(1);
    int idx = i;
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        const auto& row = transposition_action_.at(*it);
        s *= row[idx].first;
        idx = row[idx].second;
    }
    return {s, idx};
}

MonomialYD::BraidResult MonomialYD::braid(int i, int j) const {
    auto [s, t] = act(degrees_[i], j);
    return BraidResult{s, t, i};
}

void MonomialYD::verify_braid_equation() const {
    int N = size();
    // (c x id)(id x c)(c x id) == (id x c)(c x id)(id x c) on x_i x_j x_k
    auto c12 = [&](Rational& s, int& a, int& b, int&) {
        auto r = braid(a, b);
        s *= r.scalar;
        a = r.left;
        b = r.right;
    };
    auto c23 = [&](Rational& s, int&, int& b, int& c) {
        auto r = braid(b, c);
        s *= r.scalar;
        b = r.left;
        c = r.right;
    };
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) {
                Rational sl(1);
                int a = i, b = j, c = k;
                c12(sl, a, b, c);
                c23(sl, a, b, c);
                c12(sl, a, b, c);
                Rational sr(1);
                int d = i, e = j, f = k;
                c23(sr, d, e, f);
                c12(sr, d, e, f);
                c23(sr, d, e, f);
                if (sl != sr || a != d || b != e || c != f)
                    fail("BraidEquationViolated",
                         "Yang-Baxter fails on basis triple (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")");
            }
}

long word_index(const std::vector<int>& w, int N) {
    long idx = 0;
    for (int c : w) idx = idx * N + c;
    return idx;
}

std::vector<int> word_from_index(long idx, int N, int n) {
    std::vector<int> w(n);
    for (int k = n - 1; k >= 0; --k) {
        w[k] = static_cast<int>(idx % N);
        idx /= N;
    }
    return w;
}

namespace {

long checked_dim(int N, int n, long budget) {
    long dim = 1;
    for (int k = 0; k < n; ++k) {
        dim *= N;
        if (dim > budget)
            fail("SizeBudgetExceeded", "N^n = " + std::to_string(N) + "^" + std::to_string(n) +
                                           " exceeds the basis-word budget " +
                                           std::to_string(budget));
    }
    return dim;
}

// Reduced word for sigma as adjacent transpositions s_k (swapping slots
// k, k+1). `alternate` picks descents from the right instead of the left;
// Matsumoto well-definedness makes both equivalent.
std::vector<int> reduced_word(std::vector<int> sigma, bool alternate) {
    std::vector<int> word;
    int n = static_cast<int>(sigma.size());
    bool moved = true;
    while (moved) {
        moved = false;
        if (!alternate) {
            for (int k = 0; k + 1 < n; ++k)
                if (sigma[k] > sigma[k + 1]) {
                    std::swap(sigma[k], sigma[k + 1]);
                    word.push_back(k);
                    moved = true;
                }
        } else {
            for (int k = n - 2; k >= 0; --k)
                if (sigma[k] > sigma[k + 1]) {
                    std::swap(sigma[k], sigma[k + 1]);
                    word.push_back(k);
                    moved = true;
                }
        }
    }
    // sorting word w applied left-to-right turns sigma into id, so sigma =
    // product of the word reversed
    std::reverse(word.begin(), word.end());
    return word;
}

} // namespace

BraidRep braid_rep(const MonomialYD& V, int n, long size_budget) {
    int N = V.size();
    long dim = checked_dim(N, n, size_budget);
    BraidRep rep;
    rep.tensor_degree = n;
    rep.dim = dim;
    for (int k = 0; k + 1 < n; ++k) {
        std::vector<std::pair<Rational, long>> col(dim);
        for (long b = 0; b < dim; ++b) {
            auto w = word_from_index(b, N, n);
            auto r = V.braid(w[k], w[k + 1]);
            w[k] = r.left;
            w[k + 1] = r.right;
            col[b] = {r.scalar, word_index(w, N)};
        }
        rep.gens.push_back(std::move(col));
    }
    return rep;
}

SparseEndo quantum_symmetrizer(const MonomialYD& V, int n, long size_budget,
                               bool alternate_words) {
    int N = V.size();
    long dim = checked_dim(N, n, size_budget);
    SparseEndo Q;
    Q.dim = dim;
    Q.columns.assign(dim, {});

    // enumerate S_n with reduced words
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> words;
    do {
        words.push_back(reduced_word(perm, alternate_words));
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (long b = 0; b < dim; ++b) {
        std::map<long, Rational> acc;
        auto base = word_from_index(b, N, n);
        for (const auto& word : words) {
            auto w = base;
            Rational s(1);
            // rightmost braid letter acts first
            for (auto it = word.rbegin(); it != word.rend(); ++it) {
                auto r = V.braid(w[*it], w[*it + 1]);
                s *= r.scalar;
                w[*it] = r.left;
                w[*it + 1] = r.right;
            }
            Rational& slot = acc[word_index(w, N)];
            slot += s;
        }
        for (const auto& [row, v] : acc)
            if (!v.is_zero()) Q.columns[b].emplace_back(row, v);
    }
    return Q;
}

std::vector<SparseVec> kernel_basis(const SparseEndo& m) {
    LinearSpan span(true);
    std::vector<SparseVec> kernel;
    for (long b = 0; b < m.dim; ++b) {
        SparseVec col;
        for (const auto& [row, v] : m.columns[b]) col.emplace_back(static_cast<int>(row), v);
        auto dep = span.insert(std::move(col), static_cast<int>(b));
        if (!dep) continue;
        SparseVec k;
        // e_b - sum dep: kernel vector of the endomorphism
        std::map<int, Rational> coeffs;
        coeffs[static_cast<int>(b)] = Rational(1);
        for (const auto& [id, c] : *dep) {
            Rational& slot = coeffs[id];
            slot -= c;
            if (slot.is_zero()) coeffs.erase(id);
        }
        for (const auto& [id, c] : coeffs) k.emplace_back(id, c);
        kernel.push_back(std::move(k));
    }
    return kernel;
}

} // namespace qtwist
