#include "torigid/complexes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_set>

#include "torigid/errors.hpp"

namespace torigid {

namespace {

std::uint64_t mask_of(const std::vector<int>& subset) {
    std::uint64_t m = 0;
    for (int j : subset) m |= std::uint64_t{1} << j;
    return m;
}

void check_mask_width(std::size_t m) {
    if (m > 64)
        throw TorigidError(ErrorCode::InvalidInput, "facet count > 64 is out of scope");
}

std::vector<std::uint64_t> vertex_masks(const SimpleCombinatorics& k) {
    check_mask_width(k.facet_count);
    std::vector<std::uint64_t> out;
    out.reserve(k.vertices.size());
    for (const auto& v : k.vertices) out.push_back(mask_of(v));
    return out;
}

bool is_face(std::uint64_t s, const std::vector<std::uint64_t>& masks) {
    for (std::uint64_t m : masks)
        if ((s & ~m) == 0) return true;
    return false;
}

// Visit all size-`size` subsets of {0..m-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t m, std::size_t size, Fn&& fn) {
    if (size > m) return;
    std::vector<int> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = static_cast<int>(i);
    for (;;) {
        fn(const_cast<const std::vector<int>&>(idx));
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == static_cast<int>(m - size + i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<Violation> validate_complex(const SimpleCombinatorics& k) {
    std::vector<Violation> out;
    const std::size_t n = k.dim, m = k.facet_count;
    if (n == 0 || m == 0) {
        out.push_back({"degenerate", "dimension and facet count must be positive", {}, {}});
        return out;
    }
    check_mask_width(m);
    if (!k.facet_labels.empty() && k.facet_labels.size() != m)
        out.push_back({"labels", "facet label count differs from facet count", {}, {}});

    bool shape_ok = true;
    for (const auto& v : k.vertices) {
        std::set<int> uniq(v.begin(), v.end());
        const bool in_range =
            std::all_of(v.begin(), v.end(), [&](int j) { return j >= 0 && j < (int)m; });
        if (!in_range) {
            out.push_back({"facet_index", "facet index out of range in a vertex subset", v, {}});
            shape_ok = false;
        } else if (uniq.size() != n || v.size() != n) {
            out.push_back({"vertex_size",
                           "vertex subset is not an n-subset (n = " + std::to_string(n) + ")",
                           v, {}});
            shape_ok = false;
        }
    }
    if (!shape_ok) return out;  // the remaining checks assume well-formed subsets

    std::map<std::uint64_t, std::size_t> seen;
    for (const auto& v : k.vertices) {
        if (++seen[mask_of(v)] == 2)
            out.push_back({"duplicate_vertex", "vertex subset appears more than once", v, {}});
    }

    std::uint64_t covered = 0;
    for (const auto& v : k.vertices) covered |= mask_of(v);
    for (std::size_t j = 0; j < m; ++j)
        if (!(covered >> j & 1))
            out.push_back({"unused_facet", "facet appears in no vertex",
                           {static_cast<int>(j)}, {}});

    // Pseudomanifold: each ridge ((n-1)-subset of a vertex) lies in exactly
    // two vertex subsets.
    std::map<std::uint64_t, std::size_t> ridge_count;
    for (const auto& v : k.vertices) {
        const std::uint64_t full = mask_of(v);
        for (int j : v) ridge_count[full & ~(std::uint64_t{1} << j)]++;
    }
    for (const auto& [ridge, count] : ridge_count) {
        if (count == 2) continue;
        std::vector<int> r;
        for (std::size_t j = 0; j < m; ++j)
            if (ridge >> j & 1) r.push_back(static_cast<int>(j));
        out.push_back({"pseudomanifold",
                       "ridge lies in " + std::to_string(count) + " vertex subsets (expected 2)",
                       r, {}});
    }

    // Ridge-graph connectivity (vertices adjacent iff sharing n-1 facets).
    if (!k.vertices.empty()) {
        const auto masks = vertex_masks(k);
        std::vector<bool> visited(masks.size(), false);
        std::vector<std::size_t> stack{0};
        visited[0] = true;
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            for (std::size_t other = 0; other < masks.size(); ++other) {
                if (visited[other]) continue;
                if (std::popcount(masks[cur] & masks[other]) == static_cast<int>(n - 1)) {
                    visited[other] = true;
                    stack.push_back(other);
                }
            }
        }
        if (!std::all_of(visited.begin(), visited.end(), [](bool b) { return b; }))
            out.push_back({"connectivity", "ridge graph is disconnected", {}, {}});
    } else {
        out.push_back({"no_vertices", "complex has no vertices", {}, {}});
    }
    return out;
}

std::vector<std::vector<int>> minimal_non_faces(const SimpleCombinatorics& k) {
    const auto masks = vertex_masks(k);
    std::vector<std::vector<int>> out;
    // A minimal non-face of the dual of a simple polytope has size <= n+1:
    // every (n+1)-subset is already a non-face, so larger subsets cannot be
    // minimal. (Validated against an exhaustive scan in the tests.)
    for (std::size_t size = 1; size <= k.dim + 1 && size <= k.facet_count; ++size) {
        for_each_subset(k.facet_count, size, [&](const std::vector<int>& s) {
            const std::uint64_t mask = mask_of(s);
            if (is_face(mask, masks)) return;
            for (int j : s)
                if (!is_face(mask & ~(std::uint64_t{1} << j), masks)) return;
            out.push_back(s);
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> f_vector(const SimpleCombinatorics& k) {
    const auto masks = vertex_masks(k);
    std::unordered_set<std::uint64_t> faces;
    for (std::uint64_t full : masks) {
        // all submasks of the vertex mask
        std::uint64_t sub = full;
        for (;;) {
            faces.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & full;
        }
    }
    std::vector<std::size_t> f(k.dim + 1, 0);
    for (std::uint64_t face : faces) f[std::popcount(face)]++;
    return f;  // f[0] = f_-1 = 1 (empty face), f[i] = faces of size i
}

IsomorphismStream::IsomorphismStream(const SimpleCombinatorics& k1,
                                     const SimpleCombinatorics& k2) {
    if (k1.facet_count != k2.facet_count || k1.dim != k2.dim ||
        k1.vertices.size() != k2.vertices.size())
        return;  // stream stays empty
    m_ = k1.facet_count;
    masks1_ = vertex_masks(k1);
    masks2_ = vertex_masks(k2);

    auto degree = [](const std::vector<std::uint64_t>& masks, std::size_t m) {
        std::vector<int> deg(m, 0);
        for (std::uint64_t mask : masks)
            for (std::size_t j = 0; j < m; ++j)
                if (mask >> j & 1) deg[j]++;
        return deg;
    };
    auto fingerprint = [&](const std::vector<std::uint64_t>& masks, const std::vector<int>& deg,
                           std::size_t f) {
        std::vector<int> link;
        for (std::uint64_t mask : masks) {
            if (!(mask >> f & 1)) continue;
            for (std::size_t g = 0; g < m_; ++g)
                if (g != f && (mask >> g & 1)) link.push_back(deg[g]);
        }
        std::sort(link.begin(), link.end());
        link.push_back(deg[f]);
        return link;
    };

    const auto deg1 = degree(masks1_, m_), deg2 = degree(masks2_, m_);
    std::vector<std::vector<int>> fp1(m_), fp2(m_);
    for (std::size_t f = 0; f < m_; ++f) {
        fp1[f] = fingerprint(masks1_, deg1, f);
        fp2[f] = fingerprint(masks2_, deg2, f);
    }

    order_.resize(m_);
    for (std::size_t f = 0; f < m_; ++f) order_[f] = static_cast<int>(f);
    std::sort(order_.begin(), order_.end(),
              [&](int a, int b) { return deg1[a] != deg1[b] ? deg1[a] > deg1[b] : a < b; });

    candidates_.resize(m_);
    for (std::size_t d = 0; d < m_; ++d) {
        for (std::size_t t = 0; t < m_; ++t)
            if (fp1[order_[d]] == fp2[t]) candidates_[d].push_back(static_cast<int>(t));
        if (candidates_[d].empty()) return;  // no possible image: empty stream
    }

    masks1_members_.resize(m_);
    for (std::size_t i = 0; i < masks1_.size(); ++i)
        for (std::size_t f = 0; f < m_; ++f)
            if (masks1_[i] >> f & 1) masks1_members_[f].push_back(static_cast<int>(i));

    assignment_.assign(m_, -1);
    used_.assign(m_, false);
    choice_.assign(m_, 0);
    compatible_ = true;
}

bool IsomorphismStream::feasible(int source, int target) const {
    // Every vertex subset through `source` must still map into some vertex
    // subset of k2 (equality once fully assigned, since sizes agree).
    for (int vi : masks1_members_[source]) {
        std::uint64_t image = std::uint64_t{1} << target;
        for (std::size_t f = 0; f < m_; ++f)
            if ((masks1_[vi] >> f & 1) && assignment_[f] >= 0)
                image |= std::uint64_t{1} << assignment_[f];
        bool embeds = false;
        for (std::uint64_t mask : masks2_)
            if ((image & ~mask) == 0) {
                embeds = true;
                break;
            }
        if (!embeds) return false;
    }
    return true;
}

void IsomorphismStream::backtrack() {
    --depth_;
    const int f = order_[depth_];
    used_[assignment_[f]] = false;
    assignment_[f] = -1;
    ++choice_[depth_];
}

std::optional<std::vector<int>> IsomorphismStream::next() {
    if (!compatible_ || exhausted_) return std::nullopt;
    for (;;) {
        if (depth_ == m_) {
            std::vector<int> result = assignment_;
            backtrack();
            return result;
        }
        bool advanced = false;
        while (choice_[depth_] < candidates_[depth_].size()) {
            const int t = candidates_[depth_][choice_[depth_]];
            if (!used_[t] && feasible(order_[depth_], t)) {
                assignment_[order_[depth_]] = t;
                used_[t] = true;
                ++depth_;
                if (depth_ < m_) choice_[depth_] = 0;
                advanced = true;
                break;
            }
            ++choice_[depth_];
        }
        if (!advanced) {
            if (depth_ == 0) {
                exhausted_ = true;
                return std::nullopt;
            }
            backtrack();
        }
    }
}

std::vector<std::vector<int>> all_isomorphisms(const SimpleCombinatorics& k1,
                                               const SimpleCombinatorics& k2) {
    IsomorphismStream stream(k1, k2);
    std::vector<std::vector<int>> out;
    while (auto phi = stream.next()) out.push_back(std::move(*phi));
    return out;
}

}  // namespace torigid
