#ifndef NCSG_RANDOM_HPP
#define NCSG_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "ncsg/enumerate.hpp"
#include "ncsg/forms.hpp"

namespace ncsg {

/// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Per-trial seed: mix(mix(seed ^ fnv1a(stream)) + trial). Every random draw in
/// a check is a pure function of (seed, check name, trial index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t trial) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : stream) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return mix64(mix64(seed ^ h) + trial);
}

/// Deterministic generator. Integer draws avoid std::uniform_int_distribution,
/// whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }
    std::int64_t nonzero(std::int64_t box) {
        std::int64_t v = uniform(-box, box - 1);
        return v >= 0 ? v + 1 : v;
    }
    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1))];
    }

private:
    std::mt19937_64 engine_;
};

struct RandomShape {
    std::size_t min_degree = 0;
    std::size_t max_degree = 4;
    std::size_t max_terms = 3;
    std::int64_t coeff_box = 3;
};

/// A random necklace: up to max_terms basis cycles of random degree in
/// [min_degree, max_degree] with nonzero coefficients in [-box, box].
inline Necklace random_necklace(const PathCatalog& cat, Rng& rng, const RandomShape& shape) {
    Necklace f(cat.quiver());
    const auto terms = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(shape.max_terms)));
    for (std::size_t t = 0; t < terms; ++t) {
        auto deg = static_cast<std::size_t>(
            rng.uniform(static_cast<std::int64_t>(shape.min_degree), static_cast<std::int64_t>(shape.max_degree)));
        const auto& basis = cat.cycles(deg);
        if (basis.empty()) continue;
        f.insert_canonical(rng.pick(basis), rng.nonzero(shape.coeff_box));
    }
    return f;
}

/// A random element of 1_h·A·1_t.
inline PathAlgebraElement random_parallel(const PathCatalog& cat, Rng& rng, VertexId h, VertexId t,
                                          const RandomShape& shape) {
    PathAlgebraElement f(cat.quiver());
    const auto terms = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(shape.max_terms)));
    for (std::size_t k = 0; k < terms; ++k) {
        auto deg = static_cast<std::size_t>(
            rng.uniform(static_cast<std::int64_t>(shape.min_degree), static_cast<std::int64_t>(shape.max_degree)));
        const auto& paths = cat.parallel(deg, h, t);
        if (paths.empty()) continue;
        f.add_term(rng.pick(paths), rng.nonzero(shape.coeff_box));
    }
    return f;
}

/// A random element of A (not necessarily parallel).
inline PathAlgebraElement random_element(const PathCatalog& cat, Rng& rng, const RandomShape& shape) {
    const auto& q = *cat.quiver();
    PathAlgebraElement f(cat.quiver());
    const auto nv = static_cast<std::int64_t>(q.vertex_count());
    for (std::size_t k = 0; k < shape.max_terms; ++k) {
        auto h = static_cast<VertexId>(rng.uniform(0, nv - 1));
        auto t = static_cast<VertexId>(rng.uniform(0, nv - 1));
        f += random_parallel(cat, rng, h, t, {shape.min_degree, shape.max_degree, 1, shape.coeff_box});
    }
    return f;
}

inline Derivation random_derivation(const PathCatalog& cat, Rng& rng, const RandomShape& shape) {
    const auto& q = *cat.quiver();
    Derivation theta(cat.quiver());
    for (ArrowId a = 0; a < q.arrow_count(); ++a)
        if (rng.uniform(0, 3) != 0) theta.set(a, random_parallel(cat, rng, q.head(a), q.tail(a), shape));
    return theta;
}

/// Random K-form: random blocks u_j·da_j with the u_j chosen so the word closes.
template <std::size_t K>
Form<K> random_form(const PathCatalog& cat, Rng& rng, const RandomShape& shape) {
    const auto& q = *cat.quiver();
    Form<K> out(cat.quiver());
    const auto terms = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(shape.max_terms)));
    const auto na = static_cast<std::int64_t>(q.arrow_count());
    if (na == 0) return out;
    for (std::size_t t = 0; t < terms; ++t) {
        std::array<ArrowId, K> slots;
        for (auto& s : slots) s = static_cast<ArrowId>(rng.uniform(0, na - 1));
        auto total = static_cast<std::size_t>(
            rng.uniform(static_cast<std::int64_t>(shape.min_degree), static_cast<std::int64_t>(shape.max_degree)));
        Word w;
        bool ok = true;
        for (std::size_t j = 0; j < K && ok; ++j) {
            std::size_t len = j + 1 == K ? total : static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(total)));
            total -= len;
            // u_j runs from tail(a_{j-1}) back to head(a_j)
            const ArrowId prev = slots[(j + K - 1) % K];
            const auto& paths = cat.parallel(len, q.tail(prev), q.head(slots[j]));
            if (paths.empty()) {
                ok = false;
                break;
            }
            for (ArrowId a : rng.pick(paths).arrows) w.push_back({a, false});
            w.push_back({slots[j], true});
        }
        if (ok) out.add_word(w, rng.nonzero(shape.coeff_box));
    }
    return out;
}

}  // namespace ncsg

#endif  // NCSG_RANDOM_HPP
