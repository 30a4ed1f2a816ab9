#include "cli_app.hpp"

#include "enlattice/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef ENLATTICE_VERSION
#define ENLATTICE_VERSION "0.0.0"
#endif

namespace enlattice::cli {

namespace {

using nlohmann::json;

// Input problems that should exit with code 2 and a message naming the field.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

DivisorClass parse_class(const std::string& field, const std::string& text, int n) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception&) {
        throw UsageError(field + ": malformed class '" + text +
                         "': expected a JSON integer array like [1,0,1]");
    }
    if (!j.is_array())
        throw UsageError(field + ": malformed class '" + text + "': expected a JSON array");
    std::vector<int64_t> c;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw UsageError(field + ": class entries must be integers, got '" + e.dump() + "'");
        c.push_back(e.get<int64_t>());
    }
    if (static_cast<int>(c.size()) != n + 1)
        throw UsageError(field + ": class has " + std::to_string(c.size()) + " entries but X" +
                         std::to_string(n) + " needs " + std::to_string(n + 1));
    return DivisorClass(std::move(c));
}

json class_json(const DivisorClass& d) { return json(d.coeffs()); }

json classes_json(const std::vector<DivisorClass>& v) {
    json a = json::array();
    for (const auto& d : v) a.push_back(class_json(d));
    return a;
}

json identity_json(const IdentityResult& r) {
    json j{{"id", r.id},
           {"label", r.label},
           {"lhs_size", r.lhs},
           {"rhs_size", r.rhs},
           {"verified", r.ok}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

json identities_json(const std::vector<IdentityResult>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(identity_json(r));
    return a;
}

json component_json(const Component& c) {
    json j{{"label", c.label}, {"rank", c.total_rank()}, {"weights", classes_json(c.weights)}};
    if (c.twist.size() != 0) j["twist"] = class_json(c.twist);
    if (c.cartan_mult > 0) {
        j["cartan_mult"] = c.cartan_mult;
        j["zero_class"] = class_json(c.zero_class);
    }
    return j;
}

json decomposition_json(const Decomposition& d) {
    json comps = json::array();
    for (const auto& c : d.components) comps.push_back(component_json(c));
    return json{{"id", d.id},
                {"target", d.target.name},
                {"target_rank", d.target.total_rank()},
                {"components", comps},
                {"notes", d.notes},
                {"verified", d.verified}};
}

json pairing_json(const Pairing& p) {
    json pairs = json::array();
    for (const auto& [a, b] : p.pairs) pairs.push_back(json{class_json(a), class_json(b)});
    return json{{"kind", p.kind}, {"pairs", pairs}, {"count", p.pairs.size()}};
}

json subsystem_json(const RootSystem& sys) {
    return json{{"cartan_type", sys.cartan_type},
                {"rank", sys.cartan.rank()},
                {"simple_roots", classes_json(sys.simple_roots)},
                {"root_count", sys.roots.size()}};
}

int report_failures(const std::vector<IdentityResult>& ids, std::ostream& err) {
    int fails = 0;
    for (const auto& r : ids) {
        if (r.ok) continue;
        ++fails;
        err << "FAIL " << r.id << " (lhs=" << r.lhs << ", rhs=" << r.rhs << ")";
        if (!r.detail.empty()) err << " " << r.detail;
        err << "\n";
    }
    return fails;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void table_header(std::ostream& out, const std::string& line) {
    out << "# enlattice " << ENLATTICE_VERSION << "\n# " << line << "\n";
}

void table_identities(std::ostream& out, const std::vector<IdentityResult>& ids) {
    for (const auto& r : ids) {
        out << (r.ok ? "PASS  " : "FAIL  ") << r.id << "  lhs=" << r.lhs << " rhs=" << r.rhs;
        if (!r.detail.empty()) out << "  " << r.detail;
        out << "\n";
    }
}

// ---------------------------------------------------------------------------
// enum

struct EnumOpts {
    int n = 6;
    std::string kind = "lines";
    std::optional<int64_t> self_int;
    std::optional<int64_t> k_int;
    std::vector<std::string> dot_with;
    std::string format = "json";
};

int do_enum(const EnumOpts& o, std::ostream& out, std::ostream& err) {
    auto lat = make_lattice(o.n);
    ClassQuery q;
    if (o.kind == "lines") q = {-1, -1, {}, {}};
    else if (o.kind == "rulings") q = {0, -2, {}, {}};
    else if (o.kind == "roots") q = {-2, 0, {}, {}};
    else {
        if (!o.self_int || !o.k_int)
            throw UsageError("--kind custom needs both --self-int and --k-int");
        q = {*o.self_int, *o.k_int, {}, {}};
    }
    if (o.kind != "custom" && (o.self_int || o.k_int))
        throw UsageError("--self-int/--k-int only apply to --kind custom");

    json constraints = json::array();
    for (const auto& c : o.dot_with) {
        auto eq = c.rfind('=');
        if (eq == std::string::npos)
            throw UsageError("--dot-with: expected CLASS=VALUE, got '" + c + "'");
        DivisorClass D = parse_class("--dot-with", c.substr(0, eq), o.n);
        int64_t v = 0;
        try {
            v = std::stoll(c.substr(eq + 1));
        } catch (const std::exception&) {
            throw UsageError("--dot-with: value in '" + c + "' is not an integer");
        }
        q.linear_constraints.emplace_back(D, v);
        constraints.push_back(json{{"class", class_json(D)}, {"value", v}});
    }

    std::vector<DivisorClass> classes;
    try {
        classes = enumerate_classes(lat, q);
    } catch (const UnboundedQuery& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (o.format == "table") {
        table_header(out, "enum n=" + std::to_string(o.n) + " kind=" + o.kind +
                              " count=" + std::to_string(classes.size()));
        for (const auto& d : classes) out << d.str() << "\n";
        return 0;
    }
    emit(out, json{{"version", ENLATTICE_VERSION},
                   {"command", "enum"},
                   {"input", json{{"n", o.n},
                                  {"kind", o.kind},
                                  {"self_int", q.self_int},
                                  {"k_int", q.k_int},
                                  {"constraints", constraints}}},
                   {"count", classes.size()},
                   {"classes", classes_json(classes)}});
    return 0;
}

// ---------------------------------------------------------------------------
// rootsys

struct RootsysOpts {
    int n = 6;
    std::string show = "cartan";
    std::string seed;
    std::string format = "json";
};

int do_rootsys(const RootsysOpts& o, std::ostream& out, std::ostream&) {
    auto lat = make_lattice(o.n);
    auto sys = build_root_system(lat);
    json input{{"n", o.n}, {"show", o.show}};

    if (o.show == "cartan") {
        json rows = json::array();
        for (const auto& row : sys.cartan.entries) rows.push_back(json(row));
        if (o.format == "table") {
            table_header(out, "rootsys n=" + std::to_string(o.n) + " type=" + sys.cartan_type);
            for (const auto& row : sys.cartan.entries) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    out << (i ? " " : "") << (row[i] >= 0 ? " " : "") << row[i];
                out << "\n";
            }
            return 0;
        }
        emit(out, json{{"version", ENLATTICE_VERSION},
                       {"command", "rootsys"},
                       {"input", input},
                       {"cartan_type", sys.cartan_type},
                       {"rank", sys.cartan.rank()},
                       {"cartan", rows},
                       {"simple_roots", classes_json(sys.simple_roots)}});
        return 0;
    }
    if (o.show == "roots") {
        if (o.format == "table") {
            table_header(out, "rootsys n=" + std::to_string(o.n) +
                                  " roots=" + std::to_string(sys.roots.size()));
            for (const auto& d : sys.roots) out << d.str() << "\n";
            return 0;
        }
        emit(out, json{{"version", ENLATTICE_VERSION},
                       {"command", "rootsys"},
                       {"input", input},
                       {"count", sys.roots.size()},
                       {"roots", classes_json(sys.roots)}});
        return 0;
    }
    // orbit
    if (o.seed.empty()) throw UsageError("--show orbit needs --seed JSON_CLASS");
    DivisorClass seed = parse_class("--seed", o.seed, o.n);
    auto orbit = weyl_orbit(seed, sys);
    input["seed"] = class_json(seed);
    if (o.format == "table") {
        table_header(out, "rootsys n=" + std::to_string(o.n) +
                              " orbit=" + std::to_string(orbit.size()));
        for (const auto& d : orbit) out << d.str() << "\n";
        return 0;
    }
    emit(out, json{{"version", ENLATTICE_VERSION},
                   {"command", "rootsys"},
                   {"input", input},
                   {"count", orbit.size()},
                   {"orbit", classes_json(orbit)}});
    return 0;
}

// ---------------------------------------------------------------------------
// algebra and verify share the suite report shape.

json suite_json(const SuiteResult& s, bool timing) {
    json j{{"suite", s.suite}, {"ok", s.ok}, {"identities", identities_json(s.identities)}};
    if (timing) j["seconds"] = s.seconds;
    return j;
}

struct AlgebraOpts {
    int n = 6;
    std::string check = "jacobi";
    int64_t samples = 10000;
    uint64_t seed = 1;
    bool exhaustive = false;
    std::string format = "json";
};

int do_algebra(const AlgebraOpts& o, std::ostream& out, std::ostream& err) {
    std::string suite = o.check == "jacobi" ? "jacobi"
                        : o.check == "module-axiom" ? "modules"
                                                    : "forms";
    VerifyOptions vo;
    vo.n_max = o.n;
    vo.samples = o.samples;
    vo.seed = o.seed;
    vo.exhaustive = o.exhaustive;
    auto res = run_suite(suite, vo);
    if (o.format == "table") {
        table_header(out, "algebra n=" + std::to_string(o.n) + " check=" + o.check +
                              " result=" + (res.ok ? "ok" : "failed"));
        table_identities(out, res.identities);
    } else {
        emit(out, json{{"version", ENLATTICE_VERSION},
                       {"command", "algebra"},
                       {"input", json{{"n", o.n},
                                      {"check", o.check},
                                      {"samples", o.samples},
                                      {"seed", o.seed},
                                      {"exhaustive", o.exhaustive}}},
                       {"report", suite_json(res, false)},
                       {"ok", res.ok}});
    }
    report_failures(res.identities, err);
    return res.ok ? 0 : 1;
}

struct VerifyOpts {
    std::vector<std::string> suites;
    int n_max = 8;
    int64_t samples = 10000;
    uint64_t seed = 1;
    bool exhaustive = false;
    bool timing = false;
    std::string format = "json";
};

int do_verify(const VerifyOpts& o, std::ostream& out, std::ostream& err) {
    std::vector<std::string> chosen = o.suites;
    if (chosen.empty() || (chosen.size() == 1 && chosen[0] == "all")) chosen = suite_names();
    for (const auto& s : chosen) {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), s) == names.end()) {
            std::string all;
            for (const auto& n : names) all += (all.empty() ? "" : ", ") + n;
            throw UsageError("unknown suite '" + s + "'; expected all or one of: " + all);
        }
    }

    VerifyOptions vo;
    vo.n_max = o.n_max;
    vo.samples = o.samples;
    vo.seed = o.seed;
    vo.exhaustive = o.exhaustive;

    bool all_ok = true;
    json suites = json::array();
    std::vector<SuiteResult> results;
    for (const auto& name : chosen) {
        auto res = run_suite(name, vo);
        all_ok = all_ok && res.ok;
        suites.push_back(suite_json(res, o.timing));
        results.push_back(std::move(res));
    }

    if (o.format == "table") {
        table_header(out, "verify n_max=" + std::to_string(o.n_max) +
                              " samples=" + std::to_string(o.samples) +
                              " seed=" + std::to_string(o.seed) +
                              (o.exhaustive ? " exhaustive" : ""));
        for (const auto& res : results) {
            out << (res.ok ? "ok    " : "FAIL  ") << res.suite << "  "
                << res.identities.size() << " identities";
            if (o.timing) out << "  " << res.seconds << "s";
            out << "\n";
            for (const auto& r : res.identities)
                if (!r.ok) {
                    out << "      FAIL " << r.id << " lhs=" << r.lhs << " rhs=" << r.rhs;
                    if (!r.detail.empty()) out << "  " << r.detail;
                    out << "\n";
                }
        }
        out << "# result: " << (all_ok ? "ok" : "failed") << "\n";
    } else {
        emit(out, json{{"version", ENLATTICE_VERSION},
                       {"command", "verify"},
                       {"input", json{{"suites", chosen},
                                      {"n_max", o.n_max},
                                      {"samples", o.samples},
                                      {"seed", o.seed},
                                      {"exhaustive", o.exhaustive}}},
                       {"suites", suites},
                       {"ok", all_ok}});
    }
    for (const auto& res : results) report_failures(res.identities, err);
    return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// branch

struct BranchOpts {
    int n = 6;
    std::string fix = "line";
    std::vector<std::string> l;
    std::string r;
    std::string s;
    std::string format = "json";
};

int do_branch(const BranchOpts& o, std::ostream& out, std::ostream& err) {
    auto lat = make_lattice(o.n);
    json input{{"n", o.n}, {"fix", o.fix}};
    json j{{"version", ENLATTICE_VERSION}, {"command", "branch"}};
    bool ok = false;
    std::vector<IdentityResult> ids;

    if (o.fix == "line") {
        if (o.l.size() != 1) throw UsageError("--fix line needs exactly one --l CLASS");
        DivisorClass L = parse_class("--l", o.l[0], o.n);
        input["line"] = class_json(L);
        auto res = decompose_fixed_line(lat, L);
        ok = res.ok;
        ids = res.identifications;
        j["quadric_case"] = res.quadric_case;
        j["line_blocks"] = decomposition_json(res.line_blocks);
        j["adjoint_blocks"] = decomposition_json(res.adjoint_blocks);
        j["identifications"] = identities_json(res.identifications);
        j["notes"] = res.notes;
    } else if (o.fix == "ruling" && o.s.empty()) {
        if (o.r.empty()) throw UsageError("--fix ruling needs --r CLASS");
        DivisorClass R = parse_class("--r", o.r, o.n);
        input["ruling"] = class_json(R);
        auto res = decompose_fixed_ruling(lat, R);
        auto cliff = clifford_check(lat, R);
        ok = res.ok && cliff.ok;
        ids = res.dualities;
        j["w"] = classes_json(res.w_classes);
        j["s_plus"] = classes_json(res.s_plus);
        j["s_minus"] = classes_json(res.s_minus);
        j["fibers"] = pairing_json(res.fibers);
        j["subsystem"] = subsystem_json(res.d_sub);
        if (res.line_blocks) j["line_blocks"] = decomposition_json(*res.line_blocks);
        if (res.ruling_blocks) j["ruling_blocks"] = decomposition_json(*res.ruling_blocks);
        if (res.adjoint_blocks) j["adjoint_blocks"] = decomposition_json(*res.adjoint_blocks);
        j["dualities"] = identities_json(res.dualities);
        j["clifford"] = json{{"pairs_checked", cliff.pairs_checked},
                             {"violations", cliff.violations},
                             {"ok", cliff.ok}};
        j["notes"] = res.notes;
    } else if (o.fix == "ruling") {
        DivisorClass R = parse_class("--r", o.r, o.n);
        DivisorClass S = parse_class("--s", o.s, o.n);
        input["ruling"] = class_json(R);
        input["section"] = class_json(S);
        int64_t sq = intersect(S, S);
        if (sq != -1 && sq != -2)
            throw UsageError("--s: a section must be a line or a norm -2 class");
        auto res = decompose_section(lat, R, S, sq == -2);
        ok = res.ok;
        ids = res.checks;
        j["variant"] = res.minus_variant ? "root" : "line";
        j["lambda"] = classes_json(res.lambda);
        j["det_class"] = class_json(res.det_class);
        j["w_blocks"] = decomposition_json(res.w_blocks);
        j["s_plus_blocks"] = decomposition_json(res.s_plus_blocks);
        j["s_minus_blocks"] = decomposition_json(res.s_minus_blocks);
        j["d_blocks"] = decomposition_json(res.d_blocks);
        j["a_subsystem"] = subsystem_json(res.a_sub);
        j["checks"] = identities_json(res.checks);
        j["notes"] = res.notes;
    } else if (o.fix == "parity") {
        if (o.l.size() != 8) throw UsageError("--fix parity needs eight --l CLASS flags");
        std::vector<DivisorClass> ls;
        for (const auto& t : o.l) ls.push_back(parse_class("--l", t, o.n));
        input["lines"] = classes_json(ls);
        auto res = decompose_parity_d8(lat, ls);
        ok = res.ok;
        ids = res.checks;
        j["h_class"] = class_json(res.h_class);
        j["w_summands"] = classes_json(res.w_summands);
        j["w_pairs"] = pairing_json(res.w_pairs);
        j["even_root_count"] = res.even_roots.size();
        j["spin_weight_count"] = res.spin_weights.size();
        j["d_blocks"] = decomposition_json(res.d_blocks);
        j["line_blocks"] = decomposition_json(res.line_blocks);
        j["adjoint_blocks"] = decomposition_json(res.adjoint_blocks);
        j["checks"] = identities_json(res.checks);
        j["notes"] = res.notes;
    } else if (o.fix == "pair") {
        if (o.l.size() != 2) throw UsageError("--fix pair needs exactly two --l CLASS flags");
        DivisorClass L1 = parse_class("--l", o.l[0], o.n);
        DivisorClass L2 = parse_class("--l", o.l[1], o.n);
        input["lines"] = classes_json({L1, L2});
        auto sys = e7_centralizer(lat, L1, L2);
        ok = sys.cartan_type == "E7" && sys.roots.size() == 126;
        j["centralizer"] = subsystem_json(sys);
    } else {
        throw UsageError("--fix must be line, ruling, parity, or pair");
    }

    j["input"] = input;
    j["ok"] = ok;
    if (o.format == "table") {
        table_header(out, "branch n=" + std::to_string(o.n) + " fix=" + o.fix +
                              " result=" + (ok ? "ok" : "failed"));
        table_identities(out, ids);
    } else {
        emit(out, j);
    }
    report_failures(ids, err);
    if (!ok && ids.empty()) err << "FAIL branch/" << o.fix << "\n";
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// export

struct ExportOpts {
    int n = 6;
    std::string graph = "line-incidence";
    std::string r;
    std::string format = "dot";
};

struct Edge {
    int a = 0;
    int b = 0;
    int64_t weight = 1;
};

int do_export(const ExportOpts& o, std::ostream& out, std::ostream&) {
    auto lat = make_lattice(o.n);
    std::vector<DivisorClass> nodes;
    std::vector<Edge> edges;
    json input{{"n", o.n}, {"graph", o.graph}};

    auto index_of = [&](const DivisorClass& d) {
        return static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), d) - nodes.begin());
    };

    if (o.graph == "line-incidence") {
        nodes = enumerate_lines(lat);
        for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
            for (int k = i + 1; k < static_cast<int>(nodes.size()); ++k) {
                int64_t w = intersect(nodes[static_cast<std::size_t>(i)],
                                      nodes[static_cast<std::size_t>(k)]);
                if (w > 0) edges.push_back({i, k, w});
            }
    } else if (o.graph == "bitangent-pairs") {
        nodes = enumerate_lines(lat);
        for (const auto& [a, b] : involution_pairs(lat, "bitangent").pairs)
            edges.push_back({index_of(a), index_of(b), intersect(a, b)});
    } else if (o.graph == "singular-fibers") {
        if (o.r.empty()) throw UsageError("--graph singular-fibers needs --r JSON_CLASS");
        DivisorClass R = parse_class("--r", o.r, o.n);
        input["ruling"] = class_json(R);
        auto fibers = singular_fibers(lat, R);
        for (const auto& [a, b] : fibers.pairs) {
            nodes.push_back(a);
            nodes.push_back(b);
        }
        std::sort(nodes.begin(), nodes.end());
        for (const auto& [a, b] : fibers.pairs)
            edges.push_back({index_of(a), index_of(b), intersect(a, b)});
    } else if (o.graph == "dynkin") {
        auto sys = build_root_system(lat);
        nodes = sys.simple_roots;
        for (int i = 0; i < sys.cartan.rank(); ++i)
            for (int k = i + 1; k < sys.cartan.rank(); ++k)
                if (sys.cartan.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] !=
                    0)
                    edges.push_back({i, k, 1});
    } else {
        throw UsageError("--graph must be line-incidence, bitangent-pairs, singular-fibers, or "
                         "dynkin");
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });

    if (o.format == "json") {
        json es = json::array();
        for (const auto& e : edges)
            es.push_back(json{{"a", e.a}, {"b", e.b}, {"weight", e.weight}});
        emit(out, json{{"version", ENLATTICE_VERSION},
                       {"command", "export"},
                       {"input", input},
                       {"nodes", classes_json(nodes)},
                       {"edges", es}});
        return 0;
    }
    std::string name = o.graph;
    std::replace(name.begin(), name.end(), '-', '_');
    out << "graph " << name << " {\n";
    out << "  graph [comment=\"enlattice " << ENLATTICE_VERSION << " n=" << o.n << "\"];\n";
    out << "  node [shape=box];\n";
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        out << "  n" << i << " [label=\"" << nodes[static_cast<std::size_t>(i)].str() << "\"];\n";
    for (const auto& e : edges) {
        out << "  n" << e.a << " -- n" << e.b;
        if (e.weight != 1) out << " [label=\"" << e.weight << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return 0;
}

} // namespace

const char* version() { return ENLATTICE_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"divisor-class combinatorics on del Pezzo surfaces"};
    app.name("enlattice");
    app.set_version_flag("--version", ENLATTICE_VERSION);
    app.require_subcommand(0, 1);

    EnumOpts eo;
    auto* c_enum = app.add_subcommand("enum", "enumerate divisor classes by numerical type");
    c_enum->add_option("--n", eo.n, "number of blown-up points")->check(CLI::Range(0, 10));
    c_enum->add_option("--kind", eo.kind, "lines|rulings|roots|custom")
        ->check(CLI::IsMember({"lines", "rulings", "roots", "custom"}));
    c_enum->add_option("--self-int", eo.self_int, "D.D for --kind custom");
    c_enum->add_option("--k-int", eo.k_int, "D.K for --kind custom");
    c_enum->add_option("--dot-with", eo.dot_with, "linear constraint CLASS=VALUE (repeatable)")
        ->allow_extra_args(false);
    c_enum->add_option("--format", eo.format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));

    RootsysOpts ro;
    auto* c_root = app.add_subcommand("rootsys", "root system, Cartan matrix, Weyl orbits");
    c_root->add_option("--n", ro.n, "number of blown-up points")->check(CLI::Range(0, 8));
    c_root->add_option("--show", ro.show, "cartan|roots|orbit")
        ->check(CLI::IsMember({"cartan", "roots", "orbit"}));
    c_root->add_option("--seed", ro.seed, "orbit seed class (JSON array)");
    c_root->add_option("--format", ro.format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));

    AlgebraOpts ao;
    auto* c_alg = app.add_subcommand("algebra", "Lie algebra checks: bracket, modules, forms");
    c_alg->add_option("--n", ao.n, "number of blown-up points")->check(CLI::Range(2, 8));
    c_alg->add_option("--check", ao.check, "jacobi|module-axiom|forms")
        ->check(CLI::IsMember({"jacobi", "module-axiom", "forms"}));
    c_alg->add_option("--samples", ao.samples, "budget per sampled identity");
    c_alg->add_option("--seed", ao.seed, "sampling seed");
    c_alg->add_flag("--exhaustive", ao.exhaustive, "upgrade sampled checks where feasible");
    c_alg->add_option("--format", ao.format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));

    BranchOpts bo;
    auto* c_br = app.add_subcommand("branch", "decompose modules under a chosen subalgebra");
    c_br->add_option("--n", bo.n, "number of blown-up points")->check(CLI::Range(2, 8));
    c_br->add_option("--fix", bo.fix, "line|ruling|parity|pair")
        ->check(CLI::IsMember({"line", "ruling", "parity", "pair"}));
    // allow_extra_args(false) keeps CLI11 from exploding a bracketed class
    // literal into comma-separated pieces.
    c_br->add_option("--l", bo.l, "line class (repeatable where the kind needs several)")
        ->allow_extra_args(false);
    c_br->add_option("--r", bo.r, "ruling class");
    c_br->add_option("--s", bo.s, "section class (line or norm -2) for --fix ruling");
    c_br->add_option("--format", bo.format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));

    VerifyOpts vo;
    auto* c_ver = app.add_subcommand("verify", "run verification suites");
    c_ver->add_option("suites", vo.suites, "all or suite names");
    c_ver->add_option("--n-max", vo.n_max, "largest rank to verify")->check(CLI::Range(0, 8));
    c_ver->add_option("--samples", vo.samples, "budget per sampled identity");
    c_ver->add_option("--seed", vo.seed, "sampling seed");
    c_ver->add_flag("--exhaustive", vo.exhaustive, "upgrade sampled checks where feasible");
    c_ver->add_flag("--timing", vo.timing, "include wall-clock seconds (non-reproducible bytes)");
    c_ver->add_option("--format", vo.format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));

    ExportOpts xo;
    auto* c_exp = app.add_subcommand("export", "graph export (DOT or JSON)");
    c_exp->add_option("--n", xo.n, "number of blown-up points")->check(CLI::Range(0, 8));
    c_exp->add_option("--graph", xo.graph, "line-incidence|bitangent-pairs|singular-fibers|dynkin")
        ->check(CLI::IsMember({"line-incidence", "bitangent-pairs", "singular-fibers", "dynkin"}));
    c_exp->add_option("--r", xo.r, "ruling class for singular-fibers");
    c_exp->add_option("--format", xo.format, "dot|json")->check(CLI::IsMember({"dot", "json"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << "\n";
        err << "run 'enlattice --help' for usage\n";
        return 2;
    }

    try {
        if (c_enum->parsed()) return do_enum(eo, out, err);
        if (c_root->parsed()) return do_rootsys(ro, out, err);
        if (c_alg->parsed()) return do_algebra(ao, out, err);
        if (c_br->parsed()) return do_branch(bo, out, err);
        if (c_ver->parsed()) return do_verify(vo, out, err);
        if (c_exp->parsed()) return do_export(xo, out, err);
        out << app.help();
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnboundedQuery& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SearchTruncated& e) {
        err << "error: " << e.what() << " (raise ENLATTICE_BUDGET)\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace enlattice::cli
