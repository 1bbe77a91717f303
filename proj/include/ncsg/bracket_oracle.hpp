#ifndef NCSG_BRACKET_ORACLE_HPP
#define NCSG_BRACKET_ORACLE_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "ncsg/necklace.hpp"

namespace ncsg {

/// Double-sum form of the necklace bracket on cyclic tensors:
///   {u_1…u_p, v_1…v_q} = Σ_{i,j} ω(u_i, v_j) · u_{i+1}…u_{i-1} · v_{j+1}…v_{j-1}.
/// Deliberately shares nothing with necklace_bracket beyond the containers:
/// the canonical rotation is found by listing all rotations.
inline Necklace bracket_tensor_oracle(const Necklace& f, const Necklace& g, const SymplecticData& w) {
    require_same_quiver(f.quiver(), g.quiver());
    const auto& q = *f.quiver();

    auto brute_canonical = [](const std::vector<ArrowId>& word) {
        std::vector<ArrowId> best = word;
        std::vector<ArrowId> rot = word;
        for (std::size_t r = 1; r < word.size(); ++r) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (rot < best) best = rot;
        }
        return best;
    };

    // accumulate by word first, then rebuild the canonical paths
    std::map<std::pair<std::vector<ArrowId>, VertexId>, Rational> acc;
    for (const auto& [u, cu] : f.terms()) {
        const std::size_t p = u.length();
        for (const auto& [v, cv] : g.terms()) {
            const std::size_t qlen = v.length();
            for (std::size_t i = 0; i < p; ++i)
                for (std::size_t j = 0; j < qlen; ++j) {
                    const int om = w.omega(u.arrows[i], v.arrows[j]);
                    if (om == 0) continue;
                    std::vector<ArrowId> word;
                    for (std::size_t s = 1; s < p; ++s) word.push_back(u.arrows[(i + s) % p]);
                    for (std::size_t s = 1; s < qlen; ++s) word.push_back(v.arrows[(j + s) % qlen]);
                    VertexId vert = q.tail(u.arrows[i]);
                    if (!word.empty()) {
                        word = brute_canonical(word);
                        vert = q.head(word.front());
                    }
                    acc[{std::move(word), vert}] += Rational(om) * cu * cv;
                }
        }
    }
    Necklace out(f.quiver());
    for (auto& [key, c] : acc) out.insert_canonical(Path{key.second, key.first}, c);
    return out;
}

inline Necklace bracket_tensor_oracle(const Necklace& f, const Necklace& g) {
    return bracket_tensor_oracle(f, g, SymplecticData(f.quiver()));
}

}  // namespace ncsg

#endif  // NCSG_BRACKET_ORACLE_HPP
