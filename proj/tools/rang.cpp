// Command-line entry point: subsum sweeps, triple enumeration, descent export, registry
// verification, figures and divisor bounds. JSON on stdout; exit 0 (pass), 1 (check failed), 2 (usage).

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "rang/descent.hpp"
#include "rang/geomviz.hpp"
#include "rang/subsum.hpp"
#include "rang/triples.hpp"
#include "rang/verify.hpp"

using json = nlohmann::ordered_json;
using namespace rang;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    bool json_out = false;
    bool stable = false;
    unsigned jobs = 0;
    std::string out;
};

json rational_json(const Rational& r) { return r.get_den() == 1 ? r.get_num().get_str() : r.get_str(); }

json cyclotomic_json(const Cyclotomic& c) {
    json coeffs = json::array();
    for (auto& x : c.coeffs()) coeffs.push_back(x.get_str());
    return {{"order", c.order()}, {"coeffs", coeffs}, {"text", to_string(c)}};
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw UsageError("rational must be an integer or a \"num/den\" string");
}

Cyclotomic cyclotomic_from_json(const json& j) {
    if (j.is_number_integer() || j.is_string()) return Cyclotomic(rational_from_json(j));
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw UsageError("element must be {\"order\": n, \"coeffs\": [...]}");
    std::vector<Rational> c;
    for (auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
    return Cyclotomic::from_power_basis(j.at("order").get<i64>(), c);
}

std::string factor_text(i64 n) {
    std::string s;
    for (auto [p, e] : factorize(n)) {
        if (!s.empty()) s += "·";
        s += std::to_string(p);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

/// Collects checks and writes the report; returns the exit code.
class Run {
public:
    Run(std::string command, const Options& o) : o_(o), start_(std::chrono::steady_clock::now()) {
        doc_["command"] = std::move(command);
        doc_["checks"] = json::array();
    }
    json& result() { return doc_["result"]; }
    void check(const std::string& id, bool pass, const std::string& witness = {}, double ms = -1) {
        json c{{"id", id}, {"status", pass ? "pass" : "fail"}, {"witness", witness}};
        if (!o_.stable && ms >= 0) c["elapsed_ms"] = ms;
        doc_["checks"].push_back(c);
        all_ = all_ && pass;
    }
    void text(const std::string& line) { text_ += line + "\n"; }
    int finish() {
        doc_["pass"] = all_;
        if (!o_.stable)
            doc_["elapsed_ms"] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        std::string body = o_.json_out ? doc_.dump(2) + "\n" : text_;
        if (!o_.out.empty() && o_.json_out) {
            std::ofstream f(o_.out);
            if (!f) throw IoError("cannot open " + o_.out);
            f << body;
        } else {
            std::cout << body;
        }
        return all_ ? 0 : 1;
    }

private:
    const Options& o_;
    json doc_;
    std::string text_;
    bool all_ = true;
    std::chrono::steady_clock::time_point start_;
};

/// Left-justifies to `w` code points (the titles contain multi-byte characters).
std::string pad(const std::string& s, std::size_t w) {
    std::size_t cps = 0;
    for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
    return s + std::string(cps < w ? w - cps : 0, ' ');
}

double ms_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}

// ---------------------------------------------------------------- subcommands

int subsum_analyze(const Options& o, const std::string& eq, int k, bool catalogue) {
    Run run("subsum-analyze --equation " + eq + " --k " + std::to_string(k), o);
    TermSet terms = term_set(eq);
    auto rep = sweep_subsets(terms, k, {}, o.jobs);
    json counts = json::object();
    for (auto [e, c] : rep.exponent_counts) counts[std::to_string(e)] = c;
    auto& r = run.result();
    r = {{"equation", eq},           {"terms", terms.size()},          {"k", k},
         {"subsets", rep.subsets},   {"allFullRank", rep.all_full_rank}, {"allTrivial", rep.all_trivial},
         {"maxExponent", rep.max_exponent}, {"exponentCounts", counts}};
    if (!o.stable) r["elapsed"] = rep.elapsed_seconds;
    run.text(eq + ": " + std::to_string(terms.size()) + " terms, k = " + std::to_string(k) + ", " +
             std::to_string(rep.subsets) + " subsets, all full rank: " + (rep.all_full_rank ? "yes" : "no") +
             ", max exponent " + std::to_string(rep.max_exponent));
    if (catalogue) {
        auto cat = exponent_catalogue(terms);
        r["catalogue"] = std::vector<i64>(cat.begin(), cat.end());
        std::string s;
        for (i64 e : cat) s += (s.empty() ? "" : ",") + std::to_string(e);
        run.text("exponent catalogue: {" + s + "}");
    }
    return run.finish();
}

int enumerate_triples(const Options& o, i64 n, bool raw, bool orbits) {
    if (n < 1) throw UsageError("--n must be positive");
    Run run("enumerate-triples --n " + std::to_string(n), o);
    auto& r = run.result();
    r["n"] = n;
    auto t0 = std::chrono::steady_clock::now();
    if (raw) {
        r["raw"] = raw_triples(n);
        run.text("raw triples: " + std::to_string(r["raw"].get<std::uint64_t>()));
    }
    auto filtered = reduced_triples(n, true), unfiltered = reduced_triples(n, false);
    r["reduced"] = filtered.size();
    r["reducedUnfiltered"] = unfiltered.size();
    run.text("reduced triples: " + std::to_string(filtered.size()) + " (without the degree filter " +
             std::to_string(unfiltered.size()) + ")");
    if (orbits) {
        auto cls = triple_classes(n, true);
        r["classes"] = cls.size();
        run.text("symmetry classes: " + std::to_string(cls.size()));
    }
    if (!o.stable) r["elapsed_ms"] = ms_since(t0);
    return run.finish();
}

int descend_cmd(const Options& o, i64 q, i64 e1, i64 e2, i64 e3, const std::string& eq) {
    DescentSpec spec{q, {e1, e2, e3}, eq};
    try {
        spec.validate();
    } catch (const InvalidSpec& e) {
        throw UsageError(e.what());
    }
    // --out names the ideal file; the report always goes to stdout
    Options so = o;
    so.out.clear();
    Run run("descend " + spec.describe(), so);
    auto ideal = descend(spec);
    auto& r = run.result();
    r = {{"spec", spec.describe()}, {"generators", ideal.generators.size()}};
    if (!o.out.empty()) {
        export_ideal(ideal, o.out);
        r["file"] = o.out;
        run.text("wrote " + std::to_string(ideal.generators.size()) + " generators to " + o.out);
    } else if (o.json_out) {
        r["ideal"] = ideal_text(ideal);
    } else {
        run.text(ideal_text(ideal));
    }
    return run.finish();
}

int verify_cmd(const Options& o, const std::string& theorem, bool all) {
    if (!all && theorem.empty()) throw UsageError("verify needs --theorem ID or --all");
    std::vector<std::string> groups;
    if (all) {
        for (auto& g : verification_groups()) groups.push_back(g.id);
    } else {
        bool known = false;
        for (auto& g : verification_groups()) known = known || g.id == theorem;
        if (!known) {
            std::string ids;
            for (auto& g : verification_groups()) ids += " " + g.id;
            throw UsageError("unknown theorem id '" + theorem + "'; known:" + ids);
        }
        groups.push_back(theorem);
    }
    Run run(all ? "verify --all" : "verify --theorem " + theorem, o);
    json table = json::array();
    char line[256];
    std::snprintf(line, sizeof line, "%-16s %-42s %8s %8s %8s %7s  %s", "group", "title", "reports", "checks", "failed",
                  "errata", "status");
    run.text(line);
    for (auto& gid : groups) {
        auto t0 = std::chrono::steady_clock::now();
        auto reports = verify_group(gid);
        double ms = ms_since(t0);
        int checks = 0, failed = 0, errata = 0;
        for (auto& rep : reports) {
            checks += static_cast<int>(rep.checks.size());
            failed += rep.failures();
            errata += rep.errata();
            std::string witness;
            for (auto& c : rep.checks)
                if (!c.pass && !c.erratum) witness += (witness.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
            run.check(gid + "/" + rep.id, rep.pass(), witness);
            for (auto& c : rep.checks)
                if (c.erratum) {
                    json e{{"id", gid + "/" + rep.id + "/" + c.name}, {"status", c.pass ? "holds" : "erratum"},
                           {"witness", c.detail}};
                    run.result()["errata"].push_back(e);
                }
        }
        std::string title;
        for (auto& g : verification_groups())
            if (g.id == gid) title = g.title;
        json row{{"group", gid}, {"title", title}, {"reports", reports.size()}, {"checks", checks},
                 {"failed", failed}, {"errata", errata}};
        if (!o.stable) row["elapsed_ms"] = ms;
        table.push_back(row);
        std::snprintf(line, sizeof line, "%8zu %8d %8d %7d  %s", reports.size(), checks, failed, errata,
                      failed ? "FAIL" : "pass");
        run.text(pad(gid, 16) + " " + pad(title, 42) + " " + line);
    }
    run.result()["summary"] = table;
    return run.finish();
}

int render_cmd(const Options& o, const std::string& fig) {
    if (o.out.empty()) throw UsageError("render needs --out FILE.svg");
    PolygonScene scene;
    try {
        scene = figure_scene(fig);
    } catch (const UnknownId&) {
        throw UsageError("unknown figure '" + fig + "'; known: oct1 pent1 pent2 dodec1");
    }
    write_svg(scene, o.out);
    Options so = o;
    so.out.clear();
    Run run("render --figure " + fig, so);
    auto& f = figure(fig);
    run.result() = {{"figure", fig}, {"tau", cyclotomic_json(f.tau)}, {"file", o.out}};
    run.text("wrote " + o.out);
    return run.finish();
}

int polygon_cmd(const Options& o, const std::string& tuple_text) {
    json j;
    try {
        j = json::parse(tuple_text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("--tuple is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) throw UsageError("--tuple must be a JSON array of elements");
    RationalTuple t;
    for (auto& x : j) t.push_back(cyclotomic_from_json(x));
    PolygonScene s;
    try {
        s = polygon_from_tuple(t);
    } catch (const DegenerateTuple& e) {
        throw UsageError(e.what());
    }
    if (!o.out.empty()) write_svg(s, o.out);
    Options so = o;
    so.out.clear();
    Run run("polygon", so);
    json verts = json::array(), angles = json::array();
    for (auto& v : s.vertices) verts.push_back(cyclotomic_json(v));
    std::string atext;
    for (auto& a : s.interior_angles) {
        angles.push_back(rational_json(a));
        atext += (atext.empty() ? "" : ", ") + show(a) + "π";
    }
    run.result() = {{"vertices", verts}, {"interiorAngles", angles}};
    if (!o.out.empty()) run.result()["file"] = o.out;
    auto back = tuple_from_polygon(s.vertices);
    run.check("round trip preserves pairwise amplitudes", pairwise_amplitudes(back) == pairwise_amplitudes(t));
    run.text(std::to_string(s.vertices.size()) + "-gon with interior angles " + atext);
    return run.finish();
}

int bounds_cmd(const Options& o, const std::string& eq) {
    Run run("bounds --equation " + eq, o);
    auto p = bound_parameters(eq);
    auto b = divisor_bound(term_set(eq), p.threshold, p.long_factor);
    json ex = json::array();
    for (i64 d : b.excluded) ex.push_back({{"value", d}, {"factorization", factor_text(d)}});
    run.result() = {{"equation", eq},
                    {"threshold", p.threshold},
                    {"longFactor", p.long_factor},
                    {"modulus", b.modulus},
                    {"factorization", factor_text(b.modulus)},
                    {"maximal", b.maximal},
                    {"excluded", ex}};
    std::string m;
    for (i64 x : b.maximal) m += (m.empty() ? "" : ", ") + std::to_string(x);
    run.text(eq + ": modulus " + std::to_string(b.modulus) + " = " + factor_text(b.modulus));
    run.text("maximal orders: " + m);
    return run.finish();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational angles in planar lattices: analysis and verification toolkit", "rang"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json_out, "JSON output");
    app.add_flag("--stable", o.stable, "omit timings so identical runs give identical output");
    app.add_option("--jobs", o.jobs, "worker threads for sweeps (default: all cores)");
    auto common = [&](CLI::App* s) {
        s->add_flag("--json", o.json_out, "JSON output");
        s->add_flag("--stable", o.stable, "omit timings");
        s->add_option("--jobs", o.jobs, "worker threads");
        s->add_option("--out", o.out, "output file");
    };

    std::string eq = "main";
    int k = 0;
    bool catalogue = false;
    auto* ss = app.add_subcommand("subsum-analyze", "classify all k-subsets of an equation's exponent set");
    ss->add_option("--equation", eq)->check(CLI::IsMember({"main", "3plus2", "abcd"}))->required();
    ss->add_option("--k", k)->required();
    ss->add_flag("--catalogue", catalogue, "also list the exponent catalogue");
    common(ss);

    i64 n = 0;
    bool raw = false, orbits = false;
    auto* et = app.add_subcommand("enumerate-triples", "count reduced triples of roots of unity of order n");
    et->add_option("--n", n)->required();
    et->add_flag("--raw", raw, "also count all raw triples");
    et->add_flag("--orbits", orbits, "also count exact symmetry classes");
    common(et);

    i64 q = 1, e1 = 0, e2 = 0, e3 = 0;
    std::string deq = "main";
    auto* de = app.add_subcommand("descend", "descend the Galois-conjugate system to Q and export the ideal");
    de->add_option("--q", q)->required();
    de->add_option("--e1", e1)->required();
    de->add_option("--e2", e2)->required();
    de->add_option("--e3", e3)->required();
    de->add_option("--equation", deq);
    common(de);

    std::string theorem;
    bool all = false;
    auto* ve = app.add_subcommand("verify", "verify registry claims exactly");
    ve->add_option("--theorem", theorem, "verification group id");
    ve->add_flag("--all", all, "every group");
    common(ve);

    std::string fig;
    auto* re = app.add_subcommand("render", "render a figure as SVG");
    re->add_option("--figure", fig)->required();
    common(re);

    std::string tuple;
    auto* po = app.add_subcommand("polygon", "build a rational polygon from a rational tuple");
    po->add_option("--tuple", tuple, "JSON array of elements {order, coeffs}")->required();
    common(po);

    std::string beq;
    auto* bo = app.add_subcommand("bounds", "divisor bound for the orders of x, y, z");
    bo->add_option("--equation", beq)->check(CLI::IsMember({"main", "3plus2", "abcd"}))->required();
    common(bo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (o.jobs == 0) o.jobs = std::max(1u, std::thread::hardware_concurrency());
    try {
        if (*ss) return subsum_analyze(o, eq, k, catalogue);
        if (*et) return enumerate_triples(o, n, raw, orbits);
        if (*de) return descend_cmd(o, q, e1, e2, e3, deq);
        if (*ve) return verify_cmd(o, theorem, all);
        if (*re) return render_cmd(o, fig);
        if (*po) return polygon_cmd(o, tuple);
        if (*bo) return bounds_cmd(o, beq);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
