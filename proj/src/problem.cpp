#include "kres/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace kres {

using json = nlohmann::json;

RingSpec RingSpec::parse(const std::string& text) {
    RingSpec r;
    if (text == "Z") return r;
    if (text == "Q") {
        r.kind = Kind::rationals;
        return r;
    }
    if (text.size() > 4 && text.rfind("Fp(", 0) == 0 && text.back() == ')') {
        r.kind = Kind::prime_field;
        auto p = parse_integer(text.substr(3, text.size() - 4));
        if (sgn(p) <= 0 || !p.fits_ulong_p()) throw ParseError("bad modulus in ring '" + text + "'");
        r.prime = p.get_ui();
        if (!is_prime(r.prime)) throw NotPrime("ring " + text + ": modulus is not prime");
        return r;
    }
    throw ParseError("unknown ring '" + text + "' (expected Z, Q or Fp(p))");
}

std::string RingSpec::to_string() const {
    switch (kind) {
        case Kind::integers: return "Z";
        case Kind::rationals: return "Q";
        case Kind::prime_field: return "Fp(" + std::to_string(prime) + ")";
    }
    return "?";
}

ModuleSpec ProblemFile::module() const {
    if (ideal_generators.empty()) return ModuleSpec::free_ring(shape);
    std::vector<Monomial> gens;
    for (const auto& g : ideal_generators) {
        auto f = parse_mpoly(IntegerRing{}, shape, g);
        if (f.term_count() != 1 || f.coefficient(f.terms().front().first) != 1)
            throw ParseError("ideal generator '" + g + "' is not a monomial");
        gens.push_back(f.terms().front().first);
    }
    return ModuleSpec::quotient(MonomialIdeal(shape, std::move(gens)));
}

namespace {

MultiDegree degree_from_json(const json& j, std::size_t q) {
    if (!j.is_array()) throw ParseError("multidegree must be an array of integers");
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError("multidegree must be an array of integers");
        v.push_back(x.get<int>());
    }
    if (v.size() != q)
        throw ParseError("multidegree " + j.dump() + " has " + std::to_string(v.size()) + " entries, expected " +
                         std::to_string(q));
    MultiDegree d(std::move(v));
    if (!d.is_nonnegative()) throw ParseError("multidegree " + j.dump() + " has a negative entry");
    return d;
}

std::string string_field(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError("expected a string or an integer, got " + j.dump());
}

ProblemFile from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("problem file must be a JSON object");
    ProblemFile pf;
    if (!doc.contains("shape")) throw ParseError("missing 'shape'");
    const auto& shape = doc.at("shape");
    if (!shape.contains("n") || !shape.at("n").is_array()) throw ParseError("'shape.n' must be an array");
    std::vector<int> n;
    for (const auto& x : shape.at("n")) {
        if (!x.is_number_integer()) throw ParseError("'shape.n' entries must be integers");
        n.push_back(x.get<int>());
    }
    if (shape.contains("q") && shape.at("q").get<std::size_t>() != n.size())
        throw ParseError("'shape.q' does not match the length of 'shape.n'");
    pf.shape = BlockStructure(n);
    const std::size_t q = pf.shape.blocks();

    if (doc.contains("module")) {
        const auto& mod = doc.at("module");
        const std::string type = mod.value("type", "free");
        if (type == "monomial_quotient") {
            for (const auto& g : mod.value("generators", json::array())) pf.ideal_generators.push_back(g.get<std::string>());
        } else if (type != "free") {
            throw ParseError("unknown module type '" + type + "'");
        }
    }
    pf.ring = RingSpec::parse(doc.value("ring", "Z"));
    for (const auto& entry : doc.value("sequence", json::array())) {
        if (!entry.is_object() || !entry.contains("poly") || !entry.contains("degree"))
            throw ParseError("sequence entries need 'poly' and 'degree'");
        pf.polys.push_back(entry.at("poly").get<std::string>());
        pf.degrees.push_back(degree_from_json(entry.at("degree"), q));
    }
    if (doc.contains("interp")) {
        const auto& in = doc.at("interp");
        InterpSection s;
        for (const auto& pt : in.at("points")) {
            if (!pt.is_array() || pt.size() != 2) throw ParseError("interp points are [z, w] pairs");
            s.points.push_back({parse_rational(string_field(pt[0])), parse_rational(string_field(pt[1]))});
        }
        s.order = in.at("T").get<unsigned>();
        for (const auto& d : in.value("degrees", json::array())) s.degrees.push_back(degree_from_json(d, 2));
        s.samples = in.value("samples", s.samples);
        s.trials = in.value("trials", s.trials);
        if (q != 2 || pf.shape.block_size(0) != 1 || pf.shape.block_size(1) != 1)
            throw ParseError("'interp' requires shape n = [1, 1]");
        (void)s.spec();  // validates the points
        pf.interp = std::move(s);
    }
    return pf;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    try {
        auto pf = from_json(doc);
        // Parse the sequence once so bad polynomials fail at load time.
        (void)pf.sequence(RationalField{});
        (void)pf.module();
        return pf;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad problem file: ") + e.what());
    }
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

MultiDegree parse_multidegree(const std::string& text, std::size_t q) {
    std::string s;
    for (char c : text) {
        if (c == '(' || c == ')') continue;
        s += c == ',' ? ' ' : c;
    }
    std::istringstream in(s);
    std::vector<int> v;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw ParseError("");
        } catch (const std::exception&) {
            throw ParseError("malformed multidegree '" + text + "'");
        }
    }
    if (v.size() != q)
        throw ParseError("multidegree '" + text + "' needs " + std::to_string(q) + " entries");
    return MultiDegree(std::move(v));
}

}  // namespace kres
