#ifndef NCSG_ENUMERATE_HPP
#define NCSG_ENUMERATE_HPP

#include <map>
#include <tuple>
#include <vector>

#include "ncsg/necklace.hpp"

namespace ncsg {

/// All paths of Q̄ up to a given length, bucketed by (length, head, tail),
/// plus the canonical cycles (a basis of DR⁰ in each degree).
class PathCatalog {
public:
    PathCatalog(QuiverPtr q, std::size_t max_length) : quiver_(std::move(q)), max_length_(max_length) {
        const auto& dq = *quiver_;
        std::vector<Path> layer;
        for (VertexId v = 0; v < dq.vertex_count(); ++v) layer.push_back(Path::idempotent(v));
        for (std::size_t len = 0;; ++len) {
            for (const auto& p : layer) {
                buckets_[{len, head(p), tail(dq, p)}].push_back(p);
                if (is_closed(dq, p) && canonical_rotation(dq, p) == p) cycles_[len].push_back(p);
            }
            if (len == max_length_) break;
            std::vector<Path> next;
            for (const auto& p : layer)
                for (ArrowId a = 0; a < dq.arrow_count(); ++a)
                    if (auto pa = concat(dq, p, arrow_path(dq, a))) next.push_back(std::move(*pa));
            layer = std::move(next);
        }
    }

    const QuiverPtr& quiver() const { return quiver_; }
    std::size_t max_length() const { return max_length_; }

    /// Paths of the given length with the given head and tail.
    const std::vector<Path>& parallel(std::size_t len, VertexId h, VertexId t) const {
        auto it = buckets_.find({len, h, t});
        return it == buckets_.end() ? empty_ : it->second;
    }
    /// Canonical cycle representatives of the given length (idempotents for 0).
    const std::vector<Path>& cycles(std::size_t len) const {
        auto it = cycles_.find(len);
        return it == cycles_.end() ? empty_ : it->second;
    }

private:
    QuiverPtr quiver_;
    std::size_t max_length_;
    std::map<std::tuple<std::size_t, VertexId, VertexId>, std::vector<Path>> buckets_;
    std::map<std::size_t, std::vector<Path>> cycles_;
    std::vector<Path> empty_;
};

}  // namespace ncsg

#endif  // NCSG_ENUMERATE_HPP
