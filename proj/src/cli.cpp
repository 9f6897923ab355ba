#include "gammaring/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gammaring/instance_file.hpp"
#include "gammaring/instances.hpp"
#include "gammaring/report_json.hpp"
#include "gammaring/structure.hpp"
#include "gammaring/theorems.hpp"

namespace gammaring {

namespace {

struct Globals {
    std::optional<std::uint64_t> cap;
    bool override_caps = false;
    std::optional<std::uint64_t> sample;
    bool no_sample = false;
    unsigned workers = 1;
    std::string json;
    std::uint64_t seed = 0;
    bool timing = false;
    bool skip_assoc = false;

    Caps caps() const {
        Caps c;
        if (cap) c.nodes = *cap;
        c.override_caps = override_caps;
        return c;
    }
    VerifyOptions verify_options() const {
        VerifyOptions o;
        o.caps = caps();
        o.workers = workers;
        o.seed = seed;
        if (sample) o.sample_count = *sample;
        o.allow_sampling = !no_sample;
        return o;
    }
};

class InputError : public GammaError {
public:
    using GammaError::GammaError;
};

GammaRing load(const std::string& path, bool skip_assoc) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    GammaRing ring = parse_instance_file(buf.str(), skip_assoc);
    if (ring.name().empty()) ring = ring.with_name(path);
    return ring;
}

std::string coords(const std::vector<Coord>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out + ")";
}

void print_report(std::ostream& out, const std::string& title, const VerdictReport& r) {
    out << title << ": " << (r.falsification ? "FALSIFICATION" : r.verdict ? "true" : "false") << "\n";
    for (const auto& [label, v] : r.hypothesis_notes) out << "  " << label << ": " << (v ? "true" : "false") << "\n";
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
    for (const auto& [k, v] : r.counters) out << "  " << k << " = " << v << "\n";
    if (r.seed) out << "  seed = " << *r.seed << "\n";
    for (const auto& w : r.witnesses) {
        out << "  witness " << w.kind;
        if (!w.instance.empty()) out << " on " << w.instance;
        out << ":";
        for (const auto& v : w.values) out << " " << v.name << "=" << coords(v.coords);
        out << "\n";
    }
}

int verdict_code(const VerdictReport& r) { return r.verdict && !r.falsification ? kExitOk : kExitVerdictFalse; }

class Session {
public:
    Session(const Globals& g, std::ostream& out) : g_(g), out_(out), start_(std::chrono::steady_clock::now()) {}

    // Prints the summary and writes the JSON document when requested.
    void emit(const std::string& command, const GammaRing* ring, const VerdictReport& report,
              const std::string& title, const nlohmann::json& extra = nlohmann::json::object()) {
        DocumentHeader h{command, ring ? ring->name() : "", ring ? instance_hash(*ring) : "", std::nullopt};
        if (g_.timing)
            h.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        auto doc = report_document(h, report);
        for (const auto& [k, v] : extra.items()) doc[k] = v;
        if (g_.json == "-") {
            out_ << dump_document(doc);
            return;
        }
        print_report(out_, title, report);
        if (!g_.json.empty()) {
            std::ofstream f(g_.json);
            if (!f) throw InputError("cannot write '" + g_.json + "'");
            f << dump_document(doc);
        }
    }
    bool quiet() const { return g_.json == "-"; }

private:
    const Globals& g_;
    std::ostream& out_;
    std::chrono::steady_clock::time_point start_;
};

std::string element_list(std::span<const GroupElement> xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : " ") + coords(x.coords);
    return out;
}

int cmd_validate(const Globals& g, const std::string& file, std::ostream& out) {
    const auto ring = load(file, true);
    const auto report = validate_associativity(ring);
    Session(g, out).emit("validate", &ring, report, "validate " + ring.name());
    return verdict_code(report);
}

int cmd_analyze(const Globals& g, const std::string& file, std::ostream& out) {
    const auto ring = load(file, g.skip_assoc);
    const auto caps = g.caps();
    VerdictReport report;
    const auto z = center(ring, caps);
    report.count("m_order", ring.m().order());
    report.count("gamma_order", ring.gamma().order());
    report.count("center_order", z.order());
    report.notes.push_back("center generators: " + (z.generators().empty() ? std::string("none") : element_list(z.generators())));
    for (auto [label, sub] : {std::pair{"commutative", is_commutative(ring)},
                              std::pair{"prime", is_prime(ring, caps, g.workers)},
                              std::pair{"semiprime", is_semiprime(ring, caps)}}) {
        report.note(label, sub.verdict);
        for (const auto& w : sub.witnesses) report.witnesses.push_back(w);
    }
    Session(g, out).emit("analyze", &ring, report, "analyze " + ring.name());
    return kExitOk;
}

int cmd_enum_maps(const Globals& g, const std::string& file, const std::string& role_text, bool scp,
                  std::ostream& out) {
    const auto role = parse_map_role(role_text);
    if (!role) throw InputError("unknown role '" + role_text + "'");
    const auto ring = load(file, g.skip_assoc);
    MapSearchOptions opts;
    opts.caps = g.caps();
    opts.workers = g.workers;
    opts.require_scp = scp;
    const auto found = enumerate_maps(ring, *role, opts);
    VerdictReport report;
    report.count("maps", found.maps.size());
    report.count("nodes", found.nodes);
    nlohmann::json maps = nlohmann::json::array();
    for (const auto& f : found.maps) {
        nlohmann::json images = nlohmann::json::array();
        for (const auto& y : f.images()) images.push_back(y.coords);
        maps.push_back(std::move(images));
    }
    Session s(g, out);
    s.emit("enum-maps", &ring, report,
           "enum-maps " + std::string(to_string(*role)) + (scp ? " (scp)" : "") + " on " + ring.name(),
           {{"maps", maps}, {"role", to_string(*role)}, {"scp", scp}});
    if (!s.quiet())
        for (const auto& f : found.maps) out << "  " << to_string(f) << "\n";
    return kExitOk;
}

int cmd_verify(const Globals& g, const std::string& file, const std::string& theorem, std::optional<int> n_max,
               std::ostream& out) {
    const auto id = parse_theorem_id(theorem);
    if (!id) throw InputError("unknown theorem '" + theorem + "'");
    const auto ring = load(file, g.skip_assoc);
    auto opts = g.verify_options();
    if (n_max) opts.permutation_n_max = *n_max;
    const auto report = verify_theorem(ring, *id, opts);
    Session(g, out).emit("verify", &ring, report, std::string(to_string(*id)) + " on " + ring.name(),
                         {{"theorem", to_string(*id)}});
    return verdict_code(report);
}

int cmd_verify_all(const Globals& g, const std::string& file, std::ostream& out) {
    const auto ring = load(file, g.skip_assoc);
    const auto opts = g.verify_options();
    VerdictReport total;
    nlohmann::json theorems = nlohmann::json::object();
    std::ostringstream detail;
    for (TheoremId id : kAllTheorems) {
        const std::string name(to_string(id));
        if (const auto fh = failing_hypothesis(ring, id, opts.caps)) {
            theorems[name] = {{"skipped", true}, {"failing_hypothesis", *fh}};
            total.notes.push_back(name + " skipped: not " + *fh);
            continue;
        }
        const auto r = verify_theorem(ring, id, opts);
        theorems[name] = report_body(r);
        total.count("theorems_run");
        if (r.seed) total.seed = r.seed;
        if (!r.verdict) total.verdict = false;
        if (r.falsification) total.falsification = true;
        for (auto w : r.witnesses) {
            w.kind = name + ":" + w.kind;
            total.witnesses.push_back(std::move(w));
        }
        total.note(name, r.verdict);
        print_report(detail, "  " + name, r);
    }
    Session s(g, out);
    s.emit("verify-all", &ring, total, "verify-all on " + ring.name(), {{"theorems", theorems}});
    if (!s.quiet()) out << detail.str();
    return verdict_code(total);
}

int cmd_search(const Globals& g, const std::string& target_text, std::uint64_t budget, std::uint64_t count,
               const std::string& source, const std::vector<std::string>& files, std::ostream& out) {
    const auto target = parse_search_target(target_text);
    if (!target) throw InputError("unknown search target '" + target_text + "'");
    if (budget == 0) throw InputError("--budget must be positive");
    SearchConfig cfg;
    cfg.target = *target;
    cfg.node_budget = budget;
    cfg.workers = g.workers;
    for (const auto& f : files) cfg.instances.push_back(load(f, false));
    if (source == "builtin") {
        for (auto& r : builtin_instances()) cfg.instances.push_back(std::move(r));
    } else if (source == "random") {
        cfg.random = RandomSource{g.seed, count, {}};
    } else if (source != "files") {
        throw InputError("unknown source '" + source + "'");
    }
    auto report = search_counterexample(cfg);
    report.seed = g.seed;
    Session(g, out).emit("search", nullptr, report, "search " + std::string(to_string(*target)),
                         {{"target", to_string(*target)}, {"source", source}, {"budget", budget}});
    if (!report.verdict) return kExitVerdictFalse;
    if (report.hypothesis("budget_exhausted").value_or(false)) return kExitCap;
    return kExitOk;
}

Coord param(const std::vector<std::string>& p, std::size_t i, const std::string& recipe) {
    if (i >= p.size()) throw InputError("recipe '" + recipe + "' needs more parameters");
    try {
        std::size_t used = 0;
        const long long v = std::stoll(p[i], &used);
        if (used != p[i].size()) throw std::invalid_argument(p[i]);
        return v;
    } catch (const std::logic_error&) {
        throw InputError("bad parameter '" + p[i] + "'");
    }
}

GammaRing recipe_instance(const std::string& recipe, const std::vector<std::string>& p, const Caps& caps) {
    auto arity = [&](std::size_t n) {
        if (p.size() != n) throw InputError("recipe '" + recipe + "' takes " + std::to_string(n) + " parameters");
    };
    auto size = [&](std::size_t i) {
        const Coord v = param(p, i, recipe);
        if (v < 1) throw InputError("size parameters must be positive");
        return static_cast<std::size_t>(v);
    };
    if (recipe == "z2") return arity(0), z2_instance();
    if (recipe == "dual") return arity(0), dual_numbers_instance();
    if (recipe == "mat2-f4-frobenius") return arity(0), frobenius_example().ring;
    if (recipe == "zq") return arity(1), ring_as_gamma_ring(zq_ring(param(p, 0, recipe)), WholeRing{});
    if (recipe == "rect") return arity(3), rect_matrix_instance(size(0), size(1), param(p, 2, recipe), caps);
    if (recipe == "matrix")
        return arity(2), ring_as_gamma_ring(matrix_ring(size(0), param(p, 1, recipe)), WholeRing{});
    if (recipe == "upper")
        return arity(2), ring_as_gamma_ring(upper_triangular_ring(size(0), param(p, 1, recipe)), WholeRing{});
    if (recipe == "random") return arity(1), random_instance(static_cast<std::uint64_t>(param(p, 0, recipe)));
    throw InputError("unknown recipe '" + recipe + "'");
}

int cmd_instance(const Globals& g, const std::string& recipe, const std::vector<std::string>& params,
                 const std::string& output, std::ostream& out) {
    const auto ring = recipe_instance(recipe, params, g.caps());
    const auto text = emit_instance_file(ring);
    if (output.empty() || output == "-") {
        out << text;
        return kExitOk;
    }
    std::ofstream f(output);
    if (!f) throw InputError("cannot write '" + output + "'");
    f << text;
    return kExitOk;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite Γ-ring workbench", "gammactl"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--cap", g.cap, "Node budget for map searches");
    app.add_flag("--override-caps", g.override_caps, "Lift the element and candidate caps");
    app.add_option("--sample", g.sample, "Sample count when a check is too large to run exhaustively");
    app.add_flag("--no-sample", g.no_sample, "Fail with exit 3 instead of sampling");
    app.add_option("--workers", g.workers, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--json", g.json, "Write the report document here ('-' for stdout only)");
    app.add_option("--seed", g.seed, "Seed for sampling and random instances");
    app.add_flag("--timing", g.timing, "Record elapsed seconds in the report");
    app.add_flag("--skip-assoc", g.skip_assoc, "Skip the associativity check when loading");

    std::string file, role, theorem, target, recipe, output, source = "random";
    bool scp = false;
    std::optional<int> n_max;
    std::uint64_t budget = 1'000'000, count = 100;
    std::vector<std::string> params, files;

    auto* validate = app.add_subcommand("validate", "Check well-definedness and associativity");
    validate->add_option("file", file)->required();
    auto* analyze = app.add_subcommand("analyze", "Center, commutativity, primeness, semiprimeness");
    analyze->add_option("file", file)->required();
    auto* enum_maps = app.add_subcommand("enum-maps", "Enumerate additive maps with a role");
    enum_maps->add_option("file", file)->required();
    enum_maps->add_option("--role", role)->required();
    enum_maps->add_flag("--scp", scp, "Keep only strong commutativity preserving maps");
    auto* verify = app.add_subcommand("verify", "Run one theorem verifier");
    verify->add_option("file", file)->required();
    verify->add_option("--theorem", theorem)->required();
    verify->add_option("--n-max", n_max, "Largest n for remark_center_permutation")->check(CLI::PositiveNumber);
    auto* verify_all = app.add_subcommand("verify-all", "Run every verifier whose hypotheses hold");
    verify_all->add_option("file", file)->required();
    auto* search = app.add_subcommand("search", "Look for a counterexample with hypotheses dropped");
    search->add_option("--target", target)->required();
    search->add_option("--budget", budget, "Total search nodes");
    search->add_option("--count", count, "Random instances to draw");
    search->add_option("--source", source, "random, builtin or files");
    search->add_option("--instance", files, "Instance files searched before the source");
    auto* instance = app.add_subcommand("instance", "Write a built-in instance file");
    instance->add_option("recipe", recipe)->required();
    instance->add_option("params", params);
    instance->add_option("-o,--output", output);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*validate) return cmd_validate(g, file, out);
        if (*analyze) return cmd_analyze(g, file, out);
        if (*enum_maps) return cmd_enum_maps(g, file, role, scp, out);
        if (*verify) return cmd_verify(g, file, theorem, n_max, out);
        if (*verify_all) return cmd_verify_all(g, file, out);
        if (*search) return cmd_search(g, target, budget, count, source, files, out);
        if (*instance) return cmd_instance(g, recipe, params, output, out);
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GammaError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace gammaring
