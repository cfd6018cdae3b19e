#include "kres/mpoly.hpp"

namespace kres {

namespace {

GenericSystem build_generic(const BlockStructure& shape, const std::vector<MultiDegree>& degrees,
                            const std::vector<std::size_t>& tags) {
    GenericSystem sys{GenericRing(IntegerRing{}, {}), {}, {}, {}};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i].is_zero()) throw Error("generic polynomial of zero multidegree");
        sys.offsets.push_back(names.size());
        sys.supports.push_back(monomial_basis(shape, degrees[i]));
        for (std::size_t j = 0; j < sys.supports.back().size(); ++j)
            names.push_back("u[" + std::to_string(tags[i]) + "][" + std::to_string(j) + "]");
    }
    sys.ring = GenericRing(IntegerRing{}, std::move(names));
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        MPoly<GenericRing> f(sys.ring, shape);
        for (std::size_t j = 0; j < sys.supports[i].size(); ++j)
            f.add_term(sys.supports[i][j], sys.ring.variable(sys.offsets[i] + j));
        sys.polys.push_back(std::move(f));
    }
    return sys;
}

}  // namespace

GenericSystem generic_system(const BlockStructure& shape, const std::vector<MultiDegree>& degrees) {
    std::vector<std::size_t> tags(degrees.size());
    for (std::size_t i = 0; i < tags.size(); ++i) tags[i] = i;
    return build_generic(shape, degrees, tags);
}

MPoly<GenericRing> generic_polynomial(const BlockStructure& shape, const MultiDegree& d, std::size_t tag) {
    return build_generic(shape, {d}, {tag}).polys.front();
}

}  // namespace kres
