#include "qtwist/datum.hpp"

#include <string>

namespace qtwist {

Bicharacter::Bicharacter(std::vector<std::vector<Rational>> matrix,
                         std::optional<std::vector<std::vector<long>>> projection)
    : matrix_(std::move(matrix)), projection_(std::move(projection)) {
    for (const auto& row : matrix_) {
        if (row.size() != matrix_.size()) fail("NotSquare", "bicharacter matrix is not square");
        for (const auto& v : row)
            if (v.is_zero()) fail("ZeroEntry", "bicharacter entries must be nonzero");
    }
    if (projection_) {
        if (projection_->size() != matrix_.size())
            fail("SizeMismatch", "projection row count does not match bicharacter matrix");
    }
}

std::vector<std::int64_t> Bicharacter::project(const GroupElement& g) const {
    const auto& e = g.exponents();
    if (!projection_) {
        if (e.size() != matrix_.size())
            fail("SizeMismatch", "group rank does not match bicharacter matrix");
        return e;
    }
    std::vector<std::int64_t> out(matrix_.size(), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        const auto& row = (*projection_)[i];
        if (row.size() != e.size()) fail("SizeMismatch", "projection arity mismatch");
        for (size_t j = 0; j < e.size(); ++j) out[i] += static_cast<std::int64_t>(row[j]) * e[j];
    }
    return out;
}

Rational Bicharacter::operator()(const GroupElement& g, const GroupElement& h) const {
    auto a = project(g);
    auto b = project(h);
    Rational acc(1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            acc *= matrix_[i][j].pow(a[i] * b[j]);
        }
    }
    return acc;
}

Bicharacter Bicharacter::inverse() const {
    auto m = matrix_;
    for (auto& row : m)
        for (auto& v : row) v = v.inverse();
    return Bicharacter(std::move(m), projection_);
}

QMatrix QMatrix::validate(std::vector<std::vector<Rational>> entries) {
    int theta = static_cast<int>(entries.size());
    if (theta == 0) fail("NotSquare", "empty q-matrix");
    for (const auto& row : entries)
        if (static_cast<int>(row.size()) != theta) fail("NotSquare", "q-matrix is not square");
    for (int i = 0; i < theta; ++i) {
        for (int j = 0; j < theta; ++j)
            if (entries[i][j].is_zero())
                fail("ZeroEntry", "q_" + std::to_string(i + 1) + std::to_string(j + 1) + " = 0");
        if (entries[i][i].is_one())
            fail("QiiOne", "q_" + std::to_string(i + 1) + std::to_string(i + 1) + " = 1");
    }
    return QMatrix{std::move(entries)};
}

Rational ReducedDatum::chi(int c, const GroupElement& g) const {
    const auto& e = g.exponents();
    if (static_cast<int>(e.size()) != group_rank())
        fail("SizeMismatch", "group element rank does not match datum");
    int th = theta();
    Rational acc(1);
    for (int j = 0; j < th; ++j) {
        if (e[j] != 0) acc *= q.at(c, j).pow(e[j]);            // chi_c(L_j) = q_cj
        if (e[th + j] != 0) acc *= q.at(j, c).pow(e[th + j]);  // chi_c(K_j) = q_jc
    }
    return acc;
}

std::vector<std::vector<int>> ReducedDatum::component_list() const {
    return components(cartan);
}

ReducedDatum validate_reduced_datum(const CartanMatrix& cartan, const QMatrix& q,
                                    std::optional<std::vector<Rational>> linking) {
    int theta = cartan.size();
    if (q.size() != theta) fail("SizeMismatch", "Cartan and q-matrix sizes differ");
    for (int i = 0; i < theta; ++i) {
        for (int j = 0; j < theta; ++j) {
            if (q.at(i, j) * q.at(j, i) != q.at(i, i).pow(cartan.at(i, j)))
                fail("CartanCompatibility",
                     "q_ij q_ji != q_ii^a_ij at (i,j) = (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
            // over Q only q_ii = -1 has finite order; then 0 <= -a_ij < 2
            if (i != j && q.at(i, i).order() == 2 && cartan.at(i, j) <= -2)
                fail("OrderViolation",
                     "q_ii = -1 forces a_ij in {0,-1} at (i,j) = (" + std::to_string(i + 1) +
                         "," + std::to_string(j + 1) + ")");
        }
    }
    ReducedDatum d{cartan, q, {}, {}};
    if (linking) {
        if (static_cast<int>(linking->size()) != theta)
            fail("SizeMismatch", "linking parameter length != theta");
        d.linking = std::move(*linking);
        for (int i = 0; i < theta; ++i)
            if (d.linking[i].is_zero())
                d.warnings.push_back("l_" + std::to_string(i + 1) +
                                     " = 0: presentation degenerates to B(V+W)#kZ^{2theta}");
    } else {
        for (int i = 0; i < theta; ++i) {
            Rational qii = q.at(i, i);
            d.linking.push_back(qii / (qii - Rational(1)));
        }
    }
    return d;
}

bool is_twist_equivalent(const QMatrix& a, const QMatrix& b) {
    if (a.size() != b.size()) fail("SizeMismatch", "twist comparison of different sizes");
    for (int i = 0; i < a.size(); ++i) {
        if (a.at(i, i) != b.at(i, i)) return false;
        for (int j = 0; j < a.size(); ++j)
            if (a.at(i, j) * a.at(j, i) != b.at(i, j) * b.at(j, i)) return false;
    }
    return true;
}

DJDatum build_dj_datum(const ReducedDatum& datum, const std::vector<Rational>& q_per_component) {
    Symmetrizer d = symmetrize(datum.cartan);
    auto comps = datum.component_list();
    if (comps.size() != q_per_component.size())
        fail("SizeMismatch", "need one q_I per connected component (" +
                                 std::to_string(comps.size()) + " components)");
    int theta = datum.theta();
    std::vector<int> comp_of(theta);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int i : comps[c]) comp_of[i] = static_cast<int>(c);

    std::vector<std::vector<Rational>> qhat(theta, std::vector<Rational>(theta, Rational(1)));
    for (int i = 0; i < theta; ++i) {
        const Rational& qI = q_per_component[comp_of[i]];
        for (int j = 0; j < theta; ++j)
            qhat[i][j] = qI.pow(d.d[i] * datum.cartan.at(i, j));
        if (datum.q.at(i, i) != qI.pow(2 * d.d[i]))
            fail("RootMismatch", "q_" + std::to_string(i + 1) + std::to_string(i + 1) + " != q_I^{2 d_i} for q_I = " + qI.str());
    }
    ReducedDatum base = validate_reduced_datum(datum.cartan, QMatrix::validate(std::move(qhat)),
                                               datum.linking);
    return DJDatum{std::move(base), q_per_component, std::move(d)};
}

std::vector<std::vector<Rational>> braiding_block_matrix(const QMatrix& q) {
    // Generator order L_1..L_theta, K_1..K_theta. The four blocks, with
    // (r, c) the matrix position:
    //   rows/cols <= theta           : p_rc = q_cr^{-1}
    //   row <= theta < col           : p_rc = q_{r, c-theta}^{-1}
    //   col <= theta < row           : p_rc = q_{c, r-theta}
    //   rows/cols > theta            : p_rc = q_{r-theta, c-theta}
    // This is the reading under which the induced sigma twists the whole
    // Yetter-Drinfeld structure of the source datum onto the DJ datum
    // entry for entry.
    int theta = q.size();
    int n = 2 * theta;
    std::vector<std::vector<Rational>> p(n, std::vector<Rational>(n, Rational(1)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (r < theta && c < theta)
                p[r][c] = q.at(c, r).inverse();
            else if (r < theta && c >= theta)
                p[r][c] = q.at(r, c - theta).inverse();
            else if (r >= theta && c < theta)
                p[r][c] = q.at(c, r - theta);
            else
                p[r][c] = q.at(r - theta, c - theta);
        }
    return p;
}

Bicharacter dj_twist_bicharacter(const ReducedDatum& datum, const DJDatum& dj) {
    if (!is_twist_equivalent(datum.q, dj.base.q))
        fail("NotTwistEquivalent", "source and DJ q-matrices are not twist-equivalent");
    auto p = braiding_block_matrix(datum.q);
    auto phat = braiding_block_matrix(dj.base.q);
    int n = static_cast<int>(p.size());
    std::vector<std::vector<Rational>> sigma(n, std::vector<Rational>(n, Rational(1)));
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) sigma[r][c] = phat[r][c] / p[r][c];
    return Bicharacter(std::move(sigma));
}

} // namespace qtwist
