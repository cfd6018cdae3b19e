#include "kres/resultant.hpp"

#include <algorithm>

namespace kres {

MultiDegree choose_nu(const ModuleSpec& m, const std::vector<MultiDegree>& degrees) {
    const auto& shape = m.shape();
    const std::size_t q = shape.blocks();
    MultiDegree sum = MultiDegree::zero(q);
    for (const auto& d : degrees) sum = sum + d;
    if (q == 1 && m.is_free()) {
        int top = 0;
        for (const auto& d : degrees) top = std::max(top, d[0]);
        return MultiDegree{std::max(sum[0] - shape.block_size(0), top)};
    }
    return sum + m.regularity_offset();
}

std::optional<Integer> content_oracle(const ModuleSpec& m, const PolySequence<IntegerRing>& f, const MultiDegree& nu) {
    auto slice = build_slice(m, f, nu, Exec::serial);
    return cokernel_content(slice.d(1), slice.dim(0));
}

GenericResultant generic_resultant(const ModuleSpec& m, const std::vector<MultiDegree>& degrees) {
    const int dim = rdim(m);
    if (static_cast<long>(degrees.size()) != static_cast<long>(dim) + 1)
        throw LengthMismatch("generic system has " + std::to_string(degrees.size()) +
                             " polynomials but rdim(M) + 1 = " + std::to_string(dim + 1));
    auto sys = generic_system(m.shape(), degrees);
    const MultiDegree nu = choose_nu(m, degrees);
    // Size check before building anything over Z[u].
    auto layout = detail::slice_layout(m, degrees, nu);
    for (std::size_t p = 0; p < layout.blocks.size(); ++p) {
        std::size_t dim_p = 0;
        for (const auto* b : layout.blocks[p]) dim_p += b->size();
        if (dim_p > kGenericSliceLimit)
            throw SizeLimitExceeded("generic slice level " + std::to_string(p) + " has dimension " +
                                    std::to_string(dim_p) + " > " + std::to_string(kGenericSliceLimit));
    }
    PolySequence<GenericRing> f(sys.ring, m.shape(), sys.polys, degrees);
    auto cayley = cayley_det(build_slice(m, f, nu, Exec::serial), Exec::serial);
    if (cayley.status == CayleyStatus::not_generically_exact)
        throw HigherHomologyNonzero("generic Koszul slice at " + nu.to_string() + " has higher homology",
                                    homology_ranks(build_slice(m, f, nu, Exec::serial), Exec::serial));
    if (cayley.status == CayleyStatus::zero)
        throw HypothesisFailed("generic resultant vanishes at " + nu.to_string());
    if (!cayley.value)
        throw StabilizationFailure("Cayley quotient is not a polynomial at " + nu.to_string());
    return {std::move(sys), primitive_part(*cayley.value), nu};
}

}  // namespace kres
