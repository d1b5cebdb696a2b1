#include "qtwist/cartan.hpp"

#include <numeric>
#include <string>

namespace qtwist {

CartanMatrix validate_cartan(const std::vector<std::vector<int>>& m) {
    int theta = static_cast<int>(m.size());
    if (theta == 0) fail("NotSquare", "empty Cartan matrix");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != theta)
            fail("NotSquare", "Cartan matrix rows have inconsistent length");
    for (int i = 0; i < theta; ++i) {
        if (m[i][i] != 2)
            fail("BadDiagonal", "a_" + std::to_string(i + 1) + std::to_string(i + 1) + " != 2");
        for (int j = 0; j < theta; ++j) {
            if (i == j) continue;
            if (m[i][j] > 0)
                fail("PositiveOffDiagonal",
                     "a_" + std::to_string(i + 1) + std::to_string(j + 1) + " > 0");
            if (m[i][j] == 0 && m[j][i] != 0)
                fail("ZeroAsymmetry",
                     "a_" + std::to_string(i + 1) + std::to_string(j + 1) + " = 0 but a_" +
                         std::to_string(j + 1) + std::to_string(i + 1) + " != 0");
        }
    }
    return CartanMatrix{m};
}

std::vector<std::vector<int>> components_of(int theta,
                                            const std::vector<std::vector<bool>>& linked) {
    std::vector<int> comp(theta, -1);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < theta; ++i) {
        if (comp[i] != -1) continue;
        std::vector<int> stack{i}, members;
        comp[i] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w = 0; w < theta; ++w)
                if (comp[w] == -1 && linked[v][w]) {
                    comp[w] = comp[i];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<std::vector<int>> components(const CartanMatrix& m) {
    int theta = m.size();
    std::vector<std::vector<bool>> linked(theta, std::vector<bool>(theta, false));
    for (int i = 0; i < theta; ++i)
        for (int j = 0; j < theta; ++j)
            linked[i][j] = i != j && m.at(i, j) != 0;
    return components_of(theta, linked);
}

Symmetrizer symmetrize(const CartanMatrix& m) {
    // Spanning-tree ratio propagation with exact rational weights per
    // component, then a consistency pass over every edge.
    int theta = m.size();
    std::vector<long> num(theta, 0), den(theta, 0);
    for (const auto& comp : components(m)) {
        num[comp[0]] = 1;
        den[comp[0]] = 1;
        std::vector<int> stack{comp[0]};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : comp) {
                if (den[w] != 0 || m.at(v, w) == 0 || v == w) continue;
                // d_v a_vw = d_w a_wv  =>  d_w = d_v * a_vw / a_wv
                num[w] = num[v] * m.at(v, w);
                den[w] = den[v] * m.at(w, v);
                if (num[w] * den[w] < 0) fail("NotSymmetrizable", "negative weight ratio");
                num[w] = std::abs(num[w]);
                den[w] = std::abs(den[w]);
                long g = std::gcd(num[w], den[w]);
                num[w] /= g;
                den[w] /= g;
                stack.push_back(w);
            }
        }
        // clear denominators within the component, then reduce to gcd 1
        long lcm = 1;
        for (int v : comp) lcm = std::lcm(lcm, den[v]);
        long g = 0;
        for (int v : comp) {
            num[v] *= lcm / den[v];
            den[v] = 1;
            g = std::gcd(g, num[v]);
        }
        for (int v : comp) num[v] /= g;
    }
    for (int i = 0; i < theta; ++i)
        for (int j = 0; j < theta; ++j)
            if (static_cast<long long>(num[i]) * m.at(i, j) !=
                static_cast<long long>(num[j]) * m.at(j, i))
                fail("NotSymmetrizable", "no positive integer weights satisfy d_i a_ij = d_j a_ji");
    return Symmetrizer{num};
}

} // namespace qtwist
