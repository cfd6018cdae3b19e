#pragma once

// Multigraded resultants as Cayley determinants of Koszul slices.

#include <optional>
#include <string>
#include <vector>

#include "kres/errors.hpp"
#include "kres/exactla.hpp"
#include "kres/koszul.hpp"
#include "kres/modslice.hpp"
#include "kres/mpoly.hpp"
#include "kres/parallel.hpp"

namespace kres {

/// The square blocks phi_p = D_p[rows[p-1], columns[p-1]] used for the
/// Cayley determinant. columns[p-1] complements the rows chosen one level up.
struct PartitionCertificate {
    std::vector<std::vector<std::size_t>> rows;
    std::vector<std::vector<std::size_t>> columns;

    bool empty() const { return rows.empty(); }
};

enum class CayleyStatus {
    ok,
    /// Every higher block was found but phi_1 could not be: H_0 or H_1 is nonzero.
    zero,
    /// Some phi_p with p >= 2 does not exist: higher homology is nonzero.
    not_generically_exact,
};

template <class Ring>
struct CayleyResult {
    using Element = typename Ring::Element;

    CayleyStatus status = CayleyStatus::ok;
    /// det(phi_p) at index p-1, for the levels that were reached.
    std::vector<Element> block_dets;
    /// prod det(phi_p)^{(-1)^{p+1}}; empty unless status is ok and the
    /// quotient is exact in the coefficient ring.
    std::optional<Element> value;
    Element numerator;
    Element denominator;
    PartitionCertificate partition;
    /// The level p at which no square block was found (status != ok).
    std::size_t failed_level = 0;
};

/// Cayley determinant of the slice by the greedy block chain, from the top
/// level down. All blocks are exact fraction-free determinants.
template <class Ring>
CayleyResult<Ring> cayley_det(const KoszulSlice<Ring>& slice, Exec exec = Exec::parallel) {
    using Element = typename Ring::Element;
    const Ring& ring = slice.differentials.front().ring();
    CayleyResult<Ring> out;
    const std::size_t s = slice.length();
    out.block_dets.assign(s, ring.one());
    out.partition.rows.assign(s, {});
    out.partition.columns.assign(s, {});
    std::vector<std::size_t> chosen;  // rows of K_p taken by phi_{p+1}
    for (std::size_t p = s; p >= 1; --p) {
        const auto& d = slice.d(p);
        std::vector<std::size_t> cols;
        std::size_t next = 0;
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (next < chosen.size() && chosen[next] == j) {
                ++next;
            } else {
                cols.push_back(j);
            }
        }
        std::vector<std::size_t> all_rows(d.rows());
        std::iota(all_rows.begin(), all_rows.end(), 0);
        auto sel = select_pivot_rows(d.submatrix(all_rows, cols), exec);
        if (!sel || (p == 1 && sel->rows.size() != d.rows())) {
            out.status = p == 1 ? CayleyStatus::zero : CayleyStatus::not_generically_exact;
            out.failed_level = p;
            return out;
        }
        out.partition.columns[p - 1] = cols;
        out.partition.rows[p - 1] = sel->rows;
        out.block_dets[p - 1] = sel->det;
        chosen = std::move(sel->rows);
    }
    Element num = ring.one();
    Element den = ring.one();
    for (std::size_t p = 1; p <= s; ++p) {
        if (p % 2 == 1) {
            num = Element(num * out.block_dets[p - 1]);
        } else {
            den = Element(den * out.block_dets[p - 1]);
        }
    }
    out.value = ring.try_div(num, den);
    out.numerator = std::move(num);
    out.denominator = std::move(den);
    return out;
}

/// Evaluates the Cayley quotient with a fixed partition. Returns nullopt
/// when an even-level block is singular (the quotient is undefined there);
/// odd-level blocks may be singular and then give 0.
template <class Ring>
std::optional<std::pair<typename Ring::Element, typename Ring::Element>> cayley_with_partition(
    const KoszulSlice<Ring>& slice, const PartitionCertificate& cert, Exec exec = Exec::serial) {
    using Element = typename Ring::Element;
    const Ring& ring = slice.differentials.front().ring();
    Element num = ring.one();
    Element den = ring.one();
    for (std::size_t p = 1; p <= slice.length(); ++p) {
        auto det = bareiss_det(slice.d(p).submatrix(cert.rows[p - 1], cert.columns[p - 1]), exec);
        if (p % 2 == 1) {
            num = Element(num * det);
        } else {
            if (ring.is_zero(det)) return std::nullopt;
            den = Element(den * det);
        }
    }
    return std::make_pair(std::move(num), std::move(den));
}

/// Working degree: for q = 1 and the free ring the classical bound
/// max(sum d_i - n, max d_i); otherwise the componentwise sum of the degrees
/// plus the regularity offset of M.
MultiDegree choose_nu(const ModuleSpec& m, const std::vector<MultiDegree>& degrees);

struct ResultantOptions {
    std::optional<MultiDegree> nu;
    Exec exec = Exec::parallel;
    /// Doublings of nu tried before StabilizationFailure.
    int max_escalations = 4;
};

template <class Ring>
struct ResultantValue {
    using Element = typename Ring::Element;

    Element value;
    bool vanishes = false;
    MultiDegree nu;
    bool stabilized = false;
    /// Degrees nu + e_p the value was compared against.
    std::vector<MultiDegree> probes;
    PartitionCertificate partition;
    int escalations = 0;
    /// dim K_0 at the working degree.
    std::size_t k0_dim = 0;
};

namespace detail {

template <class Ring>
std::vector<std::size_t> ranks_or_empty(const ModuleSpec& m, const PolySequence<Ring>& f, const MultiDegree& nu,
                                        Exec exec) {
    return homology_ranks(build_slice(m, f, nu, exec), exec);
}

inline std::string ranks_to_string(const std::vector<std::size_t>& h) {
    std::string s = "[";
    for (std::size_t i = 0; i < h.size(); ++i) s += (i ? ", " : "") + std::to_string(h[i]);
    return s + "]";
}

}  // namespace detail

/// Res_{M,d}(F) up to a unit, stabilized over nu + e_p for every block p.
///
/// Throws LengthMismatch when |F| != rdim(M) + 1, HigherHomologyNonzero when
/// the complex at the working degree is not generically exact, and
/// StabilizationFailure when the values at nu and nu + e_p keep disagreeing
/// after max_escalations doublings.
template <class Ring>
ResultantValue<Ring> mresultant(const ModuleSpec& m, const PolySequence<Ring>& f,
                                const ResultantOptions& options = {}) {
    const Ring& ring = f.ring();
    const int dim = rdim(m);
    if (static_cast<long>(f.size()) != static_cast<long>(dim) + 1)
        throw LengthMismatch("sequence has " + std::to_string(f.size()) + " polynomials but rdim(M) + 1 = " +
                             std::to_string(dim + 1));
    MultiDegree nu = options.nu ? *options.nu : choose_nu(m, f.degrees());
    const std::size_t q = m.shape().blocks();
    for (int round = 0; round <= options.max_escalations; ++round) {
        auto slice = build_slice(m, f, nu, options.exec);
        auto main = cayley_det(slice, options.exec);
        if (main.status == CayleyStatus::not_generically_exact) {
            auto h = homology_ranks(slice, options.exec);
            throw HigherHomologyNonzero("Koszul slice at " + nu.to_string() +
                                            " has higher homology, ranks " + detail::ranks_to_string(h),
                                        h);
        }
        ResultantValue<Ring> out;
        out.nu = nu;
        out.escalations = round;
        out.partition = main.partition;
        out.k0_dim = slice.dim(0);
        // A slice with nonzero Euler characteristic is never exact, so a
        // failed phi_1 there says nothing about F: nu is simply too small.
        bool agree = main.status == CayleyStatus::zero ? euler_characteristic(slice) == 0 : main.value.has_value();
        for (std::size_t p = 0; p < q && agree; ++p) {
            MultiDegree probe = nu + MultiDegree::unit(q, p);
            out.probes.push_back(probe);
            auto other_slice = build_slice(m, f, probe, options.exec);
            auto other = cayley_det(other_slice, options.exec);
            if (main.status == CayleyStatus::zero) {
                agree = other.status == CayleyStatus::zero && euler_characteristic(other_slice) == 0;
            } else {
                agree = other.status == CayleyStatus::ok && other.value && ring.associates(*main.value, *other.value);
            }
        }
        if (agree) {
            out.stabilized = true;
            if (main.status == CayleyStatus::zero) {
                out.vanishes = true;
                out.value = ring.zero();
            } else {
                out.value = *main.value;
            }
            return out;
        }
        nu = 2 * nu;
    }
    throw StabilizationFailure("resultant did not stabilize after " + std::to_string(options.max_escalations) +
                               " doublings of the working degree");
}

/// Independent check over Z: the order of the cokernel of D_1 at nu (the
/// content of H_0). Empty when H_0 is infinite.
std::optional<Integer> content_oracle(const ModuleSpec& m, const PolySequence<IntegerRing>& f, const MultiDegree& nu);

struct GenericResultant {
    GenericSystem system;
    /// Primitive, with positive leading coefficient.
    GenericRing::Element value;
    MultiDegree nu;
};

/// Resultant of the generic system of the given multidegrees over Z[u].
/// Throws SizeLimitExceeded when some slice level has more than 12 basis
/// elements, since elimination over Z[u] grows quickly.
GenericResultant generic_resultant(const ModuleSpec& m, const std::vector<MultiDegree>& degrees);

inline constexpr std::size_t kGenericSliceLimit = 12;

}  // namespace kres
