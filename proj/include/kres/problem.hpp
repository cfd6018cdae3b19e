#pragma once

// JSON problem files read by the kres command-line tool.
//
//   {
//     "shape":    {"q": 2, "n": [1, 1]},
//     "module":   {"type": "free"}  |  {"type": "monomial_quotient", "generators": ["x[1,0]*x[2,1]"]},
//     "ring":     "Z" | "Q" | "Fp(7)",
//     "sequence": [{"poly": "x[1,0]*x[2,0] - x[1,1]*x[2,1]", "degree": [1, 1]}, ...],
//     "interp":   {"points": [["0", "1"]], "T": 2, "degrees": [[2,2],[2,2],[2,2]],
//                  "samples": 10, "trials": 5}
//   }
//
// Any other top-level keys (descriptions, fixture budgets) are ignored here.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kres/interp.hpp"
#include "kres/koszul.hpp"
#include "kres/modslice.hpp"
#include "kres/mpoly.hpp"

namespace kres {

struct RingSpec {
    enum class Kind { integers, rationals, prime_field };
    Kind kind = Kind::integers;
    std::uint64_t prime = 0;

    /// "Z", "Q" or "Fp(p)". Throws ParseError / NotPrime.
    static RingSpec parse(const std::string& text);
    std::string to_string() const;
};

struct InterpSection {
    std::vector<GroupPoint> points;
    unsigned order = 1;
    std::vector<MultiDegree> degrees;
    std::size_t samples = 10;
    std::size_t trials = 5;

    EvalSpec spec() const { return EvalSpec(points, order); }
};

struct ProblemFile {
    BlockStructure shape;
    std::vector<std::string> ideal_generators;
    RingSpec ring;
    std::vector<std::string> polys;
    std::vector<MultiDegree> degrees;
    std::optional<InterpSection> interp;

    ModuleSpec module() const;

    /// Parses every polynomial over `ring` and checks it against its
    /// declared multidegree (NotHomogeneous otherwise).
    template <class Ring>
    PolySequence<Ring> sequence(const Ring& ring) const {
        PolySequence<Ring> s(ring, shape);
        for (std::size_t i = 0; i < polys.size(); ++i) s.push_back(parse_mpoly(ring, shape, polys[i]), degrees[i]);
        return s;
    }
};

/// Throws ParseError for malformed documents and the usual input errors for
/// invalid shapes, multidegrees or points.
ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);

/// Accepts "(1,2)", "1,2" or "1 2".
MultiDegree parse_multidegree(const std::string& text, std::size_t q);

}  // namespace kres
