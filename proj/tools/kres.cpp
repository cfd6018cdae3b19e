// kres: command-line front end.
//
// Exit codes: 0 success, 1 a checked bound failed, 2 the resultant is ZERO,
// 3 a hypothesis could not be established, 64 usage or input error,
// 70 internal invariant violated.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kres/interp.hpp"
#include "kres/koszul.hpp"
#include "kres/modslice.hpp"
#include "kres/multiplicity.hpp"
#include "kres/problem.hpp"
#include "kres/resultant.hpp"

using namespace kres;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitZero = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct Options {
    std::string file;
    bool json = false;
    bool serial = false;
    int threads = 0;
    std::uint64_t p = 0;
    std::size_t directions = 5;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> claimed;
    std::string at;
    bool poly = false;
    bool demo = false;
    std::optional<std::size_t> samples;
    std::string nu_override;

    Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

// Key/value report printed as aligned text or as one JSON object.
class Report {
public:
    void add(const std::string& key, const std::string& text, json value) {
        rows_.emplace_back(key, text);
        doc_[key] = std::move(value);
    }
    void add(const std::string& key, const std::string& text) { add(key, text, text); }
    /// Text-only row; the JSON side is filled separately.
    void text(const std::string& key, const std::string& text) { rows_.emplace_back(key, text); }
    void line(const std::string& text) { rows_.emplace_back("", text); }
    json& doc() { return doc_; }

    void print(bool as_json) const {
        if (as_json) {
            std::cout << doc_.dump(2) << '\n';
            return;
        }
        std::size_t width = 0;
        for (const auto& [k, v] : rows_) width = std::max(width, k.size());
        for (const auto& [k, v] : rows_) {
            if (k.empty()) {
                std::cout << v << '\n';
            } else {
                std::cout << k << std::string(width - k.size() + 2, ' ') << v << '\n';
            }
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
    json doc_ = json::object();
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_degrees(const std::vector<MultiDegree>& ds) {
    std::string s;
    for (const auto& d : ds) s += (s.empty() ? "" : " ") + d.to_string();
    return s.empty() ? "-" : s;
}

json degrees_json(const std::vector<MultiDegree>& ds) {
    json a = json::array();
    for (const auto& d : ds) a.push_back(d.values());
    return a;
}

std::string order_string(const Order& o) { return o.to_string(); }

json order_json(const Order& o) { return o.is_infinite() ? json("inf") : json(o.value()); }

// Representative of the value modulo units, and the convention used.
std::string canonical(const IntegerRing&, const Integer& v) { return Integer(abs(v)).get_str(); }
std::string canonical(const RationalField&, const Rational& v) { return v.get_str(); }
std::string canonical(const PrimeField& f, const Fp& v) { return f.format(v); }

std::string convention(const IntegerRing&) { return "absolute value; Res is defined up to sign"; }
std::string convention(const RationalField&) { return "defined up to a nonzero rational factor"; }
std::string convention(const PrimeField&) { return "defined up to a nonzero scalar"; }

template <class Fn>
int with_ring(const ProblemFile& pf, Fn&& fn) {
    switch (pf.ring.kind) {
        case RingSpec::Kind::integers: return fn(IntegerRing{});
        case RingSpec::Kind::rationals: return fn(RationalField{});
        case RingSpec::Kind::prime_field: return fn(PrimeField(pf.ring.prime));
    }
    return kExitInternal;
}

void require_integers(const ProblemFile& pf, const char* command) {
    if (pf.ring.kind != RingSpec::Kind::integers)
        throw Error(std::string(command) + " needs ring Z, the file declares " + pf.ring.to_string());
}

void require_sequence(const ProblemFile& pf, const char* command) {
    if (pf.polys.empty()) throw Error(std::string(command) + " needs a non-empty 'sequence'");
}

int cmd_res(const ProblemFile& pf, const Options& o) {
    require_sequence(pf, "res");
    return with_ring(pf, [&](const auto& ring) {
        auto m = pf.module();
        auto f = pf.sequence(ring);
        ResultantOptions ro;
        ro.exec = o.exec();
        if (!o.nu_override.empty()) ro.nu = parse_multidegree(o.nu_override, pf.shape.blocks());
        auto r = mresultant(m, f, ro);
        Report rep;
        rep.add("ring", pf.ring.to_string());
        if (r.vanishes) {
            rep.add("resultant", "ZERO", "ZERO");
        } else {
            rep.add("resultant", canonical(ring, r.value));
            rep.add("convention", convention(ring));
        }
        rep.add("nu", r.nu.to_string(), r.nu.values());
        rep.add("stabilization", "verified at " + join_degrees(r.probes), degrees_json(r.probes));
        rep.add("escalations", std::to_string(r.escalations), r.escalations);
        rep.add("dim_K0", std::to_string(r.k0_dim), r.k0_dim);
        rep.print(o.json);
        return r.vanishes ? kExitZero : kExitOk;
    });
}

int cmd_ordp(const ProblemFile& pf, const Options& o) {
    require_integers(pf, "ordp");
    require_sequence(pf, "ordp");
    if (o.p == 0) throw Error("ordp needs --p");
    auto report = check_chardin(pf.sequence(IntegerRing{}), pf.module(), o.p, o.exec());
    Report rep;
    rep.add("p", std::to_string(o.p), o.p);
    rep.add("N", std::to_string(report.zero_degree), report.zero_degree);
    rep.add("ord_p", order_string(report.order), order_json(report.order));
    rep.add("resultant", report.resultant.vanishes ? "ZERO" : canonical(IntegerRing{}, report.resultant.value));
    rep.add("hypothesis",
            "certified on window " + join_degrees({report.reduction.nu}) + " " + join_degrees(report.reduction.probes),
            degrees_json(report.reduction.probes));
    rep.add("pass", yes_no(report.pass), report.pass);
    rep.print(o.json);
    return report.pass ? kExitOk : kExitCheckFailed;
}

int cmd_ordt(const ProblemFile& pf, const Options& o) {
    require_integers(pf, "ordt");
    require_sequence(pf, "ordt");
    std::uint64_t claimed = 0;
    if (o.claimed) {
        claimed = *o.claimed;
    } else if (pf.interp) {
        claimed = pf.interp->spec().conditions();
    }
    auto bound = check_order_bound(pf.module(), pf.sequence(IntegerRing{}), claimed, o.directions, o.seed, o.exec());
    Report rep;
    rep.add("seed", std::to_string(o.seed), o.seed);
    rep.add("directions", std::to_string(o.directions), o.directions);
    rep.add("claimed", std::to_string(claimed), claimed);
    json dirs = json::array();
    for (std::size_t k = 0; k < bound.directions.size(); ++k) {
        const auto& d = bound.directions[k];
        std::ostringstream line;
        line << "order " << d.order.to_string() << "  samples " << d.samples << "  anchor " << d.anchor << "  nu "
             << d.nu.to_string();
        rep.text("direction " + std::to_string(k + 1), line.str());
        dirs.push_back({{"order", order_json(d.order)},
                        {"samples", d.samples},
                        {"anchor", d.anchor},
                        {"nu", d.nu.values()},
                        {"R", format_univariate(d.coefficients)},
                        {"quotient_exact", d.quotient_exact}});
    }
    rep.doc()["direction_reports"] = dirs;
    rep.add("min_order", order_string(bound.min_order), order_json(bound.min_order));
    rep.add("degenerate_redraws", std::to_string(bound.degenerate_redraws), bound.degenerate_redraws);
    rep.add("pass", yes_no(bound.pass), bound.pass);
    rep.print(o.json);
    return bound.pass ? kExitOk : kExitCheckFailed;
}

int cmd_hilbert(const ProblemFile& pf, const Options& o) {
    auto m = pf.module();
    Report rep;
    if (!o.at.empty()) {
        auto d = parse_multidegree(o.at, pf.shape.blocks());
        auto v = hilbert_function(m, d);
        rep.add("degree", d.to_string(), d.values());
        rep.add("hilbert_function", std::to_string(v), v);
    }
    if (o.poly || o.at.empty()) {
        auto hp = hilbert_polynomial(m);
        rep.add("hilbert_polynomial", hp.to_string());
        rep.add("verified_from", hp.offset().to_string(), hp.offset().values());
        rep.add("rdim", std::to_string(hp.total_degree()), hp.total_degree());
        if (hp.total_degree() <= 0) {
            auto deg = rdeg(m);
            rep.add("rdeg", deg.get_str());
        }
    }
    rep.print(o.json);
    return kExitOk;
}

int cmd_interp(const ProblemFile& pf, const Options& o) {
    if (!pf.interp) throw Error("interp needs an 'interp' section");
    const auto& section = *pf.interp;
    const auto spec = section.spec();
    Report rep;
    rep.add("points", std::to_string(spec.points().size()), spec.points().size());
    rep.add("T", std::to_string(spec.order()), spec.order());
    rep.add("conditions", std::to_string(spec.conditions()), spec.conditions());
    rep.add("d_ev", spec.surjectivity_degree().to_string(), spec.surjectivity_degree().values());
    const int top = spec.surjectivity_degree()[0] + 1;
    rep.line("degree   rank  kernel  surjective");
    json table = json::array();
    for (int b = 0; b <= top; ++b) {
        for (int a = 0; a <= top; ++a) {
            MultiDegree d{a, b};
            const auto r = rank(eval_matrix(spec, d), Exec::serial);
            const auto k = interpolation_slice(spec, d).size();
            const bool s = r == spec.conditions();
            char buf[96];
            std::snprintf(buf, sizeof buf, "%-8s %5zu %7zu  %s", d.to_string().c_str(), r, k, yes_no(s).c_str());
            rep.line(buf);
            table.push_back({{"degree", d.values()}, {"rank", r}, {"kernel", k}, {"surjective", s}});
        }
    }
    rep.doc()["table"] = table;
    auto check = ist_degree_check(spec);
    std::string measured;
    for (std::size_t i = 0; i < check.degrees.size(); ++i)
        measured += (i ? " " : "") + check.degrees[i].to_string() + ":" + std::to_string(check.measured[i]);
    rep.add("degree_expected", std::to_string(check.expected), check.expected);
    rep.add("degree_measured", measured, check.measured);
    rep.add("degree_check", yes_no(check.pass), check.pass);
    int code = check.pass ? kExitOk : kExitCheckFailed;
    if (o.demo) {
        if (section.degrees.size() != 3) throw Error("--demo needs three 'interp.degrees'");
        const std::size_t samples = o.samples.value_or(section.samples);
        auto demo = res_estimate_demo(spec, section.degrees, samples, section.trials, o.seed, o.exec());
        rep.add("seed", std::to_string(o.seed), o.seed);
        rep.add("claimed", std::to_string(demo.claimed), demo.claimed);
        rep.add("trials", std::to_string(section.trials), section.trials);
        rep.line("sample  min_order  directions  degenerate  resamples  pass");
        json rows = json::array();
        for (std::size_t s = 0; s < demo.samples.size(); ++s) {
            const auto& smp = demo.samples[s];
            char buf[128];
            std::snprintf(buf, sizeof buf, "%6zu  %9s  %10zu  %10zu  %9zu  %s", s + 1,
                          smp.bound.min_order.to_string().c_str(), smp.bound.directions.size(),
                          smp.bound.degenerate_redraws, smp.resamples, yes_no(smp.bound.pass).c_str());
            rep.line(buf);
            rows.push_back({{"min_order", order_json(smp.bound.min_order)},
                            {"directions", smp.bound.directions.size()},
                            {"degenerate", smp.bound.degenerate_redraws},
                            {"resamples", smp.resamples},
                            {"pass", smp.bound.pass}});
        }
        rep.doc()["samples"] = rows;
        rep.add("demo_pass", yes_no(demo.pass), demo.pass);
        if (!demo.pass) code = kExitCheckFailed;
    }
    rep.print(o.json);
    return code;
}

int cmd_slice(const ProblemFile& pf, const Options& o) {
    require_sequence(pf, "slice");
    return with_ring(pf, [&](const auto& ring) {
        auto m = pf.module();
        auto f = pf.sequence(ring);
        MultiDegree nu = o.nu_override.empty() ? choose_nu(m, f.degrees())
                                               : parse_multidegree(o.nu_override, pf.shape.blocks());
        auto slice = build_slice(m, f, nu, o.exec());
        auto h = homology_ranks(slice, o.exec());
        if (o.json) {
            json doc;
            doc["nu"] = nu.values();
            doc["homology_ranks"] = h;
            json mats = json::array();
            for (std::size_t p = 1; p <= slice.length(); ++p) {
                json rows = json::array();
                const auto& d = slice.d(p);
                for (std::size_t i = 0; i < d.rows(); ++i) {
                    json row = json::array();
                    for (std::size_t j = 0; j < d.cols(); ++j) row.push_back(ring.format(d(i, j)));
                    rows.push_back(row);
                }
                mats.push_back(rows);
            }
            doc["differentials"] = mats;
            std::cout << doc.dump(2) << '\n';
        } else {
            std::cout << dump_slice(slice, pf.shape, true);
            std::cout << "homology";
            for (auto v : h) std::cout << ' ' << v;
            std::cout << '\n';
        }
        return kExitOk;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kres: multigraded resultants via Koszul complexes"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Machine-readable JSON on stdout");
    app.add_flag("--serial", o.serial, "Run every kernel serially");
    app.add_option("--threads", o.threads, "OpenMP thread count");

    auto* res = app.add_subcommand("res", "Resultant of the sequence");
    auto* ordp = app.add_subcommand("ordp", "p-adic order of Res against the mod-p zero count");
    auto* ordt = app.add_subcommand("ordt", "t-adic orders along random directions");
    auto* hil = app.add_subcommand("hilbert", "Hilbert function or polynomial of the module");
    auto* inter = app.add_subcommand("interp", "Interpolation tables and the order-bound demo");
    auto* slice = app.add_subcommand("slice", "Dump a Koszul slice and its homology ranks");
    for (auto* sub : {res, ordp, ordt, hil, inter, slice}) {
        sub->add_option("file", o.file, "Problem file (JSON)")->required()->check(CLI::ExistingFile);
        sub->fallthrough();
    }
    res->add_option("--nu-override", o.nu_override, "Working degree, e.g. 3,3");
    slice->add_option("--nu", o.nu_override, "Slice degree, e.g. 3,3");
    ordp->add_option("--p", o.p, "Prime")->required();
    ordt->add_option("--directions", o.directions, "Number of random directions");
    ordt->add_option("--seed", o.seed, "Random seed");
    ordt->add_option("--claimed", o.claimed, "Claimed lower bound for every order");
    hil->add_option("--at", o.at, "Evaluate the Hilbert function at this degree");
    hil->add_flag("--poly", o.poly, "Print the Hilbert polynomial");
    inter->add_flag("--demo", o.demo, "Run the order-bound demo");
    inter->add_option("--seed", o.seed, "Random seed");
    inter->add_option("--samples", o.samples, "Number of sampled triples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (o.threads > 0) set_threads(o.threads);

    const auto start = std::chrono::steady_clock::now();
    int code = kExitInternal;
    try {
        auto pf = load_problem(o.file);
        if (res->parsed()) code = cmd_res(pf, o);
        else if (ordp->parsed()) code = cmd_ordp(pf, o);
        else if (ordt->parsed()) code = cmd_ordt(pf, o);
        else if (hil->parsed()) code = cmd_hilbert(pf, o);
        else if (inter->parsed()) code = cmd_interp(pf, o);
        else if (slice->parsed()) code = cmd_slice(pf, o);
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "elapsed " << secs << " s\n";
    return code;
}
