#include "kres/koszul.hpp"

namespace kres {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t p) {
    std::vector<std::vector<std::size_t>> out;
    if (p > n) return out;
    std::vector<std::size_t> cur(p);
    for (std::size_t k = 0; k < p; ++k) cur[k] = k;
    while (true) {
        out.push_back(cur);
        // Advance the rightmost index that still has room.
        std::size_t k = p;
        while (k > 0 && cur[k - 1] == n - p + (k - 1)) --k;
        if (k == 0) return out;
        ++cur[k - 1];
        for (std::size_t j = k; j < p; ++j) cur[j] = cur[j - 1] + 1;
    }
}

namespace detail {

SliceLayout slice_layout(const ModuleSpec& m, const std::vector<MultiDegree>& degrees, const MultiDegree& nu) {
    SliceLayout layout;
    layout.nu = nu;
    const std::size_t levels = degrees.size() + 1;
    layout.subsets.resize(levels);
    layout.blocks.resize(levels);
    layout.offsets.resize(levels);
    layout.position.resize(levels);
    for (std::size_t p = 0; p < levels; ++p) {
        layout.subsets[p] = subsets_of_size(degrees.size(), p);
        std::size_t offset = 0;
        for (std::size_t b = 0; b < layout.subsets[p].size(); ++b) {
            MultiDegree d = nu;
            for (auto i : layout.subsets[p][b]) d = d - degrees[i];
            auto it = layout.cache.find(d);
            if (it == layout.cache.end()) it = layout.cache.emplace(d, slice_basis(m, d)).first;
            layout.blocks[p].push_back(&it->second);
            layout.offsets[p].push_back(offset);
            layout.position[p].emplace(layout.subsets[p][b], b);
            offset += it->second.size();
        }
    }
    return layout;
}

}  // namespace detail

std::vector<MultiDegree> DegreeWindow::points() const {
    std::vector<MultiDegree> out;
    std::vector<int> g(extent.size(), 0);
    while (true) {
        out.push_back(start + MultiDegree(g));
        std::size_t p = 0;
        while (p < g.size() && ++g[p] > extent[p]) {
            g[p] = 0;
            ++p;
        }
        if (p == g.size()) return out;
    }
}

DegreeWindow default_window(const ModuleSpec& m) {
    const auto q = m.shape().blocks();
    return {m.regularity_offset(), 2 * MultiDegree::ones(q)};
}

}  // namespace kres
