#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qtwist/datum.hpp"
#include "qtwist/group.hpp"
#include "qtwist/linalg.hpp"
#include "qtwist/rational.hpp"

namespace qtwist {

/**
 * Monomial Yetter-Drinfeld module: N basis vectors, each with a group
 * degree, and a group action that permutes basis vectors up to a scalar,
 *     g . x_i = chi(g, i) x_{g|>i}.
 * Both settings the kernel supports are monomial: diagonal braidings over
 * Z^m (the action fixes i) and rack braidings over S_n (the action
 * conjugates the degree transpositions).
 */
class MonomialYD {
public:
    // Full reduced-datum module V + W: generators x_1..x_t (indices
    // 0..t-1, degree K_i, character chi_i) followed by y_1..y_t (degree
    // L_i, character chi_i^{-1}).
    static std::shared_ptr<const MonomialYD> diagonal(const ReducedDatum& d);

    // Plain diagonal module on N = size(q) generators over Z^N with
    // chi_j(g_i) = q_ij.
    static std::shared_ptr<const MonomialYD> diagonal_from_qmatrix(const QMatrix& q);

    // Rack module M(X, q) with X a set of transpositions in S_n: degree of
    // x_i is the transposition t_i, and t . x_j = q(t, j) x_{t |> j} for
    // transpositions t, extended to all of S_n along canonical
    // transposition decompositions. Construction fails with
    // NotMultiplicative unless the extension is a genuine group action.
    static std::shared_ptr<const MonomialYD> rack_over_sn(
        int n, std::vector<GroupElement> degrees,
        std::vector<std::vector<Rational>> cocycle, std::vector<std::string> names);

    int size() const { return static_cast<int>(degrees_.size()); }
    const GroupElement& degree(int i) const { return degrees_[i]; }
    bool abelian_group() const { return abelian_; }
    int group_rank() const { return group_rank_; }
    GroupElement group_identity() const;
    const std::string& generator_name(int i) const { return names_[i]; }
    int max_degree() const { return max_degree_; }
    void set_max_degree(int d) { max_degree_ = d; }

    // (scalar, target index) of g . x_i.
    std::pair<Rational, int> act(const GroupElement& g, int i) const;

    // c(x_i (x) x_j) = scalar * x_k (x) x_l.
    struct BraidResult {
        Rational scalar;
        int left, right;
    };
    BraidResult braid(int i, int j) const;

    // Yang-Baxter identity on all basis triples; fails with
    // BraidEquationViolated naming the offending triple.
    void verify_braid_equation() const;

private:
    MonomialYD() = default;

    bool abelian_ = true;
    int group_rank_ = 0; // abelian rank, or n for S_n
    std::vector<GroupElement> degrees_;
    std::vector<std::string> names_;
    // abelian: chi_[i][j] = chi_i(generator j of Z^m)
    std::vector<std::vector<Rational>> chi_;
    // perm: per transposition (keyed by its image vector) the action row
    std::map<GroupElement, std::vector<std::pair<Rational, int>>> transposition_action_;
    int max_degree_ = 6;

    std::pair<Rational, int> act_perm(const GroupElement& g, int i) const;
};

// Sparse endomorphism of the degree-n tensor power, stored column-major:
// columns[b] lists (row, coeff) of the image of basis word b. Basis words
// of length n over {0..N-1} are indexed big-endian: w = sum w_k N^{n-1-k}.
struct SparseEndo {
    long dim = 0;
    std::vector<std::vector<std::pair<long, Rational>>> columns;
};

// Braid-group generator matrices rho_n(sigma_1..sigma_{n-1}) on V^{(x) n};
// each is monomial so a column holds exactly one entry.
struct BraidRep {
    int tensor_degree = 0;
    long dim = 0;
    // gens[k][b] = (scalar, image word index) for sigma_{k+1}
    std::vector<std::vector<std::pair<Rational, long>>> gens;
};

BraidRep braid_rep(const MonomialYD& V, int n, long size_budget = 2000000);

// Quantum symmetrizer Q_n = sum over S_n of rho_n(M(sigma)) with M the
// Matsumoto section (any reduced word). `alternate_words` switches to a
// second reduced-word strategy; both must produce the same matrix.
SparseEndo quantum_symmetrizer(const MonomialYD& V, int n, long size_budget = 2000000,
                               bool alternate_words = false);

// Kernel of a sparse endomorphism as sparse vectors over the word basis.
std::vector<SparseVec> kernel_basis(const SparseEndo& m);

// Word index helpers for the N^n basis.
long word_index(const std::vector<int>& w, int N);
std::vector<int> word_from_index(long idx, int N, int n);

} // namespace qtwist
