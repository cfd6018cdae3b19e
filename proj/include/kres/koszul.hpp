#pragma once

// Graded slices of the Koszul complex K(F; M)_nu for a sequence F of
// multihomogeneous polynomials and a monomial-quotient module M:
//
//   0 -> K_{r+1} -> ... -> K_1 -> K_0 -> 0,
//   K_p = (+)_{|S| = p} M_{nu - sum_{i in S} d_i}.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kres/errors.hpp"
#include "kres/exactla.hpp"
#include "kres/matrix.hpp"
#include "kres/modslice.hpp"
#include "kres/mpoly.hpp"
#include "kres/parallel.hpp"

namespace kres {

template <class Ring>
class PolySequence {
public:
    using Poly = MPoly<Ring>;

    PolySequence(Ring ring, BlockStructure shape) : ring_(std::move(ring)), shape_(std::move(shape)) {}

    /// Each polynomial must be homogeneous of its declared multidegree
    /// (zero polynomials are allowed and keep the declared degree).
    PolySequence(Ring ring, BlockStructure shape, std::vector<Poly> polys, std::vector<MultiDegree> degrees)
        : PolySequence(std::move(ring), std::move(shape)) {
        if (polys.size() != degrees.size()) throw LengthMismatch("one multidegree per polynomial is required");
        for (std::size_t i = 0; i < polys.size(); ++i) push_back(std::move(polys[i]), std::move(degrees[i]));
    }

    /// Degrees read off the polynomials; throws ZeroPolynomial / NotHomogeneous.
    static PolySequence from_polys(Ring ring, BlockStructure shape, std::vector<Poly> polys) {
        PolySequence s(std::move(ring), std::move(shape));
        for (auto& f : polys) {
            auto d = f.multidegree();
            s.push_back(std::move(f), std::move(d));
        }
        return s;
    }

    void push_back(Poly f, MultiDegree d) {
        if (!(f.shape() == shape_)) throw Error("polynomial does not match block structure");
        if (d.size() != shape_.blocks()) throw Error("multidegree " + d.to_string() + " has the wrong length");
        if (!d.is_nonnegative()) throw NotHomogeneous("negative multidegree " + d.to_string());
        if (!f.is_multihomogeneous_of(d)) throw NotHomogeneous("polynomial is not homogeneous of degree " + d.to_string());
        polys_.push_back(std::move(f));
        degrees_.push_back(std::move(d));
    }

    const Ring& ring() const { return ring_; }
    const BlockStructure& shape() const { return shape_; }
    std::size_t size() const { return polys_.size(); }
    bool empty() const { return polys_.empty(); }
    const Poly& operator[](std::size_t i) const { return polys_.at(i); }
    const MultiDegree& degree(std::size_t i) const { return degrees_.at(i); }
    const std::vector<Poly>& polys() const { return polys_; }
    const std::vector<MultiDegree>& degrees() const { return degrees_; }

    PolySequence prefix(std::size_t k) const {
        PolySequence s(ring_, shape_);
        for (std::size_t i = 0; i < k; ++i) s.push_back(polys_.at(i), degrees_.at(i));
        return s;
    }

    /// F + t G with t a ring element; degrees must agree.
    PolySequence along(const PolySequence& g, const typename Ring::Element& t) const {
        if (g.size() != size()) throw LengthMismatch("direction has a different length");
        PolySequence s(ring_, shape_);
        for (std::size_t i = 0; i < size(); ++i) {
            if (!(g.degrees_[i] == degrees_[i])) throw NotHomogeneous("direction degree mismatch");
            s.push_back(polys_[i] + g.polys_[i].scaled(t), degrees_[i]);
        }
        return s;
    }

    template <class Target, class Map>
    PolySequence<Target> map_coefficients(const Target& target, Map&& phi) const {
        PolySequence<Target> s(target, shape_);
        for (std::size_t i = 0; i < size(); ++i) s.push_back(polys_[i].map_coefficients(target, phi), degrees_[i]);
        return s;
    }

private:
    Ring ring_;
    BlockStructure shape_;
    std::vector<Poly> polys_;
    std::vector<MultiDegree> degrees_;
};

/// Basis element e_S (x) m of K_p; subset indices are 0-based.
struct KoszulLabel {
    std::vector<std::size_t> subset;
    Monomial monomial;

    /// E.g. "e{1,3}*x[1,0]^2" (1-based subset indices as in the text formats).
    std::string to_string(const BlockStructure& shape) const {
        std::string s = "e{";
        for (std::size_t k = 0; k < subset.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(subset[k] + 1);
        }
        return s + "}*" + monomial.to_string(shape);
    }
};

template <class Ring>
struct KoszulSlice {
    MultiDegree nu;
    /// bases[p] spans K_p, p = 0..r+1.
    std::vector<std::vector<KoszulLabel>> bases;
    /// differentials[p-1] is D_p : K_p -> K_{p-1}, dim K_{p-1} x dim K_p.
    std::vector<ExactMatrix<Ring>> differentials;

    /// r + 1, the number of differentials.
    std::size_t length() const { return differentials.size(); }
    std::size_t dim(std::size_t p) const { return p < bases.size() ? bases[p].size() : 0; }
    const ExactMatrix<Ring>& d(std::size_t p) const { return differentials.at(p - 1); }
};

/// All p-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t p);

namespace detail {

// blocks point into cache, so layouts are move-only.
struct SliceLayout {
    SliceLayout() = default;
    SliceLayout(SliceLayout&&) = default;
    SliceLayout(const SliceLayout&) = delete;

    MultiDegree nu;
    // Per level p: the subsets, their blocks' slice bases, and the offset of
    // each block inside K_p.
    std::vector<std::vector<std::vector<std::size_t>>> subsets;
    std::vector<std::vector<const SliceBasis*>> blocks;
    std::vector<std::vector<std::size_t>> offsets;
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> position;
    std::map<MultiDegree, SliceBasis> cache;
};

SliceLayout slice_layout(const ModuleSpec& m, const std::vector<MultiDegree>& degrees, const MultiDegree& nu);

}  // namespace detail

/// Builds every level of K(F; M)_nu. Columns of each differential are
/// filled independently, in parallel under Exec::parallel.
template <class Ring>
KoszulSlice<Ring> build_slice(const ModuleSpec& m, const PolySequence<Ring>& f, const MultiDegree& nu,
                              Exec exec = Exec::parallel) {
    using Element = typename Ring::Element;
    if (!(m.shape() == f.shape())) throw Error("module and sequence use different block structures");
    if (nu.size() != m.shape().blocks()) throw Error("degree " + nu.to_string() + " has the wrong length");
    const auto layout = detail::slice_layout(m, f.degrees(), nu);
    const std::size_t levels = f.size() + 1;
    const Ring& ring = f.ring();

    KoszulSlice<Ring> slice;
    slice.nu = nu;
    slice.bases.resize(levels);
    for (std::size_t p = 0; p < levels; ++p) {
        for (std::size_t b = 0; b < layout.subsets[p].size(); ++b) {
            for (const auto& mono : layout.blocks[p][b]->monomials)
                slice.bases[p].push_back({layout.subsets[p][b], mono});
        }
    }

    // Terms of each f_i, ordered once so all columns read shared data.
    std::vector<std::vector<std::pair<Monomial, Element>>> terms(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) terms[i] = f[i].terms();

    for (std::size_t p = 1; p < levels; ++p) {
        ExactMatrix<Ring> d(ring, slice.dim(p - 1), slice.dim(p));
        const auto& cols = slice.bases[p];
        for_each_index(exec, cols.size(), [&](std::size_t c) {
            const auto& label = cols[c];
            for (std::size_t s = 0; s < label.subset.size(); ++s) {
                const std::size_t i = label.subset[s];
                std::vector<std::size_t> rest = label.subset;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
                const std::size_t block = layout.position[p - 1].at(rest);
                const SliceBasis& target = *layout.blocks[p - 1][block];
                const std::size_t base = layout.offsets[p - 1][block];
                for (const auto& [mono, coeff] : terms[i]) {
                    auto row = target.find(mono * label.monomial);
                    if (!row) continue;  // lands in the ideal
                    Element& entry = d(base + *row, c);
                    entry = s % 2 == 0 ? Element(entry + coeff) : Element(entry - coeff);
                }
            }
        });
        slice.differentials.push_back(std::move(d));
    }
    return slice;
}

/// Ranks of H_p(K(F; M)_nu) over the fraction field of the coefficient
/// ring, for p = 0..r+1.
template <class Ring>
std::vector<std::size_t> homology_ranks(const KoszulSlice<Ring>& slice, Exec exec = Exec::parallel) {
    const std::size_t levels = slice.length() + 1;
    std::vector<std::size_t> ranks(levels + 1, 0);  // ranks[p] = rank D_p, with D_0 = D_{r+2} = 0
    for (std::size_t p = 1; p < levels; ++p) ranks[p] = rank(slice.d(p), exec);
    std::vector<std::size_t> h(levels);
    for (std::size_t p = 0; p < levels; ++p) {
        const std::size_t used = ranks[p] + ranks[p + 1];
        if (used > slice.dim(p)) throw InvariantViolation("differential ranks exceed the module dimension");
        h[p] = slice.dim(p) - used;
    }
    return h;
}

/// sum_p (-1)^p dim K_p; zero whenever the slice is generically exact.
template <class Ring>
long euler_characteristic(const KoszulSlice<Ring>& slice) {
    long chi = 0;
    for (std::size_t p = 0; p < slice.bases.size(); ++p) {
        const auto d = static_cast<long>(slice.dim(p));
        chi += p % 2 == 0 ? d : -d;
    }
    return chi;
}

/// Exact over the fraction field: every H_p vanishes, H_0 included.
template <class Ring>
bool is_generically_exact(const KoszulSlice<Ring>& slice, Exec exec = Exec::parallel) {
    auto h = homology_ranks(slice, exec);
    return std::all_of(h.begin(), h.end(), [](std::size_t v) { return v == 0; });
}

/// Matrix of multiplication by f : M_nu -> M_{nu + deg f} in slice bases.
template <class Ring>
ExactMatrix<Ring> multiplication_matrix(const ModuleSpec& m, const MPoly<Ring>& f, const MultiDegree& deg,
                                        const MultiDegree& nu) {
    using Element = typename Ring::Element;
    auto source = slice_basis(m, nu);
    auto target = slice_basis(m, nu + deg);
    ExactMatrix<Ring> a(f.ring(), target.size(), source.size());
    for (std::size_t c = 0; c < source.size(); ++c) {
        for (const auto& [mono, coeff] : f.term_map()) {
            if (auto row = target.find(mono * source.monomials[c])) a(*row, c) = Element(a(*row, c) + coeff);
        }
    }
    return a;
}

/// Points nu = start + g for g in the box [0..extent_1] x ... x [0..extent_q].
struct DegreeWindow {
    MultiDegree start;
    MultiDegree extent;

    std::vector<MultiDegree> points() const;
};

/// Default window: regularity offset of M plus [0..2]^q.
DegreeWindow default_window(const ModuleSpec& m);

struct FilterRegularity {
    bool regular = true;
    std::vector<MultiDegree> checked;
    std::optional<MultiDegree> first_failure;
    /// dim of the kernel of multiplication at first_failure.
    std::size_t kernel_dim = 0;
};

/// Checks that f is a non-zero-divisor on M / (previous) M in every degree
/// of the window. This is a certificate on the window only: the property
/// concerns all sufficiently large degrees, which no finite check decides.
template <class Ring>
FilterRegularity is_filter_regular(const MPoly<Ring>& f, const MultiDegree& deg, const ModuleSpec& m,
                                   const PolySequence<Ring>& previous, const DegreeWindow& window,
                                   Exec exec = Exec::parallel) {
    // For Q = M / (previous) M the kernel of f : Q_nu -> Q_{nu+d} has dimension
    //   dim Q_nu - (rank [B_{nu+d} | f M_nu] - rank B_{nu+d}),
    // where B_mu is the image of (+) M_{mu - d_j} -> M_mu under the f_j.
    auto image_rank = [&](const MultiDegree& mu) -> std::pair<ExactMatrix<Ring>, std::size_t> {
        if (previous.empty()) return {ExactMatrix<Ring>(f.ring(), hilbert_function(m, mu), 0), 0};
        auto slice = build_slice(m, previous, mu, exec);
        auto r = rank(slice.d(1), exec);
        return {std::move(slice.differentials.front()), r};
    };
    FilterRegularity out;
    for (const auto& nu : window.points()) {
        out.checked.push_back(nu);
        const std::size_t dim_m = hilbert_function(m, nu);
        if (dim_m == 0) continue;
        const std::size_t dim_q = dim_m - image_rank(nu).second;
        auto [b, rank_b] = image_rank(nu + deg);
        auto mult = multiplication_matrix(m, f, deg, nu);
        ExactMatrix<Ring> joined(f.ring(), mult.rows(), b.cols() + mult.cols());
        for (std::size_t i = 0; i < mult.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) joined(i, j) = b(i, j);
            for (std::size_t j = 0; j < mult.cols(); ++j) joined(i, b.cols() + j) = mult(i, j);
        }
        const std::size_t induced = rank(joined, exec) - rank_b;
        if (induced < dim_q) {
            out.regular = false;
            out.first_failure = nu;
            out.kernel_dim = dim_q - induced;
            return out;
        }
    }
    return out;
}

/// Plain-text dump: a header line per level followed by the matrix rows.
template <class Ring>
std::string dump_slice(const KoszulSlice<Ring>& slice, const BlockStructure& shape, bool with_labels = false) {
    std::string out = "nu " + slice.nu.to_string() + "\n";
    out += "dims";
    for (std::size_t p = 0; p < slice.bases.size(); ++p) out += " " + std::to_string(slice.dim(p));
    out += "\n";
    if (with_labels) {
        for (std::size_t p = 0; p < slice.bases.size(); ++p) {
            out += "K" + std::to_string(p) + ":";
            for (const auto& l : slice.bases[p]) out += " " + l.to_string(shape);
            out += "\n";
        }
    }
    for (std::size_t p = 1; p <= slice.length(); ++p) {
        out += "D" + std::to_string(p) + " " + slice.d(p).dump();
    }
    return out;
}

}  // namespace kres
