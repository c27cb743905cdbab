#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tmk/audit.hpp"
#include "tmk/config.hpp"
#include "tmk/errors.hpp"
#include "tmk/fii.hpp"
#include "tmk/generators.hpp"
#include "tmk/io.hpp"
#include "tmk/kernelizer.hpp"
#include "tmk/solvers.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

enum ExitCode : int {
    kOk = 0,
    kChecksFailed = 1,
    kUsage = 2,
    kInput = 3,
    kCapability = 4,
    kPrecondition = 5,
    kMissingTable = 6,
    kInternal = 10,
};

class MissingTableError : public std::runtime_error {
public:
    MissingTableError(const std::string& what, std::string hint) : std::runtime_error(what), hint_(std::move(hint)) {}
    const std::string& hint() const { return hint_; }

private:
    std::string hint_;
};

int report_error(const std::string& kind, const std::string& message, int code, const std::string& hint = {}) {
    json j;
    j["error"] = kind;
    j["message"] = message;
    if (!hint.empty()) j["hint"] = hint;
    j["exit_code"] = code;
    std::cerr << j.dump() << '\n';
    return code;
}

/// Flag values; unset optionals leave the config file's value in place.
struct Overrides {
    std::string config_path;
    std::optional<std::string> problem;
    std::optional<int> r, t, b_max, n_max, exact_cap;
    std::optional<std::string> cache_dir, report_dir;
    std::vector<std::uint64_t> seeds;
};

tmk::Config resolve_config(const Overrides& o) {
    tmk::Config c = o.config_path.empty() ? tmk::Config{} : tmk::load_config(o.config_path);
    if (o.problem) {
        c.problem = tmk::parse_problem(*o.problem);
        c.generator.problem = c.problem;
    }
    if (o.r) c.r = *o.r;
    if (o.t) c.t = *o.t;
    if (o.b_max) c.b_max = *o.b_max;
    if (o.n_max) c.n_max = *o.n_max;
    if (o.exact_cap) c.exact_cap = *o.exact_cap;
    if (o.cache_dir) c.cache_dir = *o.cache_dir;
    if (o.report_dir) c.report_dir = *o.report_dir;
    if (!o.seeds.empty()) c.seeds = o.seeds;
    c.validate();
    return c;
}

std::string problem_flag(tmk::ProblemId id) {
    return id == tmk::ProblemId::FVS ? "fvs" : "vc";
}

tmk::TableSet load_tables(const tmk::Config& c) {
    const fs::path dir = c.effective_cache_dir();
    tmk::TableSet set;
    for (int b = 0; b <= c.b_max; ++b) {
        auto table = tmk::load_table(dir, c.problem, b, c.n_max);
        if (!table) {
            const std::string file = (dir / tmk::table_file_name(c.problem, b, c.n_max)).string();
            throw MissingTableError("missing FII table " + file,
                                    "run: tmk build-table --problem " + problem_flag(c.problem) + " --b-max " +
                                        std::to_string(c.b_max) + " --n-max " + std::to_string(c.n_max) +
                                        " --cache-dir " + dir.string());
        }
        set.by_boundary.emplace(b, std::move(*table));
    }
    return set;
}

tmk::Instance read_instance(const tmk::Config& c, const std::string& path, std::optional<int> k_flag,
                            const std::optional<std::string>& format) {
    std::optional<tmk::GraphFormat> fmt;
    if (format) fmt = tmk::parse_format(*format);
    tmk::ParsedGraph parsed = tmk::read_graph_file(path, fmt);
    for (const auto& w : parsed.warnings) {
        json j;
        j["warning"] = w;
        j["file"] = path;
        std::cerr << j.dump() << '\n';
    }
    std::optional<int> k = k_flag ? k_flag : parsed.k;
    if (!k) throw tmk::InputError(path + ": no parameter k (add '# k K' to the file or pass --k)");
    if (*k < 0) throw tmk::InputError("k must be non-negative");
    return tmk::Instance{std::move(parsed.graph), *k, tmk::ProblemSpec::of(c.problem)};
}

std::ofstream open_output(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw tmk::InputError("cannot write " + path.string());
    return os;
}

tmk::KernelConfig kernel_config(const tmk::Config& c) {
    tmk::KernelConfig kc;
    kc.b_max = c.b_max;
    kc.exact_cap = c.exact_cap;
    return kc;
}

int cmd_build_table(const tmk::Config& c) {
    const fs::path dir = c.effective_cache_dir();
    const tmk::ProblemSpec spec = tmk::ProblemSpec::of(c.problem);
    json out = json::array();
    for (int b = 0; b <= c.b_max; ++b) {
        const tmk::CachedTable ct = tmk::load_or_build_table(dir, spec, b, c.n_max);
        json j;
        j["path"] = ct.path.string();
        j["problem"] = tmk::to_string(c.problem);
        j["t"] = b;
        j["n_max"] = c.n_max;
        j["classes"] = ct.table.classes.size();
        j["varpi"] = ct.table.varpi;
        j["saturated"] = ct.table.saturated();
        j["cache_hit"] = ct.cache_hit;
        out.push_back(std::move(j));
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
}

int cmd_gen(tmk::Config c, const std::optional<std::string>& family, std::optional<int> n, std::optional<int> k,
            std::optional<int> d, std::optional<int> attach, const std::string& output, const std::string& out_dir) {
    if (family) c.generator.family = tmk::parse_family(*family);
    if (n) c.generator.n = *n;
    if (k) c.generator.k = *k;
    if (d) c.generator.d = *d;
    if (attach) c.generator.attach = *attach;
    c.generator.problem = c.problem;
    if (output.empty() == out_dir.empty()) throw tmk::InputError("gen needs exactly one of --output or --out-dir");
    if (!output.empty() && c.seeds.size() != 1) throw tmk::InputError("--output takes a single seed; use --out-dir");

    json out = json::array();
    for (const std::uint64_t seed : c.seeds) {
        tmk::GeneratorSpec spec = c.generator;
        spec.seed = seed;
        const tmk::Generated g = tmk::generate(spec);
        fs::path path = output;
        if (path.empty()) {
            path = fs::path(out_dir) / (tmk::to_string(spec.family) + "-" + problem_flag(c.problem) + "-n" +
                                        std::to_string(spec.n) + "-k" + std::to_string(spec.k) + "-s" +
                                        std::to_string(seed) + ".txt");
        }
        tmk::write_graph_file(path, g.instance.graph, g.instance.k);
        json j;
        j["path"] = path.string();
        j["seed"] = seed;
        j["n"] = g.instance.graph.n();
        j["m"] = g.instance.graph.m();
        j["k"] = g.instance.k;
        j["planted"] = g.planted;
        out.push_back(std::move(j));
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
}

int cmd_kernelize(const tmk::Config& c, const tmk::Instance& inst, const std::string& output, const std::string& trace) {
    const tmk::TableSet tables = load_tables(c);
    const tmk::KernelResult kr = tmk::kernelize(inst, tables, kernel_config(c));
    tmk::write_graph_file(output, kr.kernel.graph, kr.kernel.k);
    if (!trace.empty()) {
        auto os = open_output(trace);
        tmk::write_trace_jsonl(os, kr.trace);
    }
    json j;
    j["kernel"] = output;
    j["n_before"] = inst.graph.n();
    j["k_before"] = inst.k;
    j["n_after"] = kr.kernel.graph.n();
    j["k_after"] = kr.kernel.k;
    j["steps"] = kr.trace.steps.size();
    j["offset"] = kr.trace.total_offset();
    std::cout << j.dump(2) << '\n';
    return kOk;
}

int cmd_audit(const tmk::Config& c, const tmk::Instance& inst, const std::string& stem, bool raw, bool lemma8,
              bool strict) {
    const tmk::TableSet tables = load_tables(c);
    tmk::AuditParams params;
    params.r = c.r;
    params.t = c.effective_t();
    params.varpi = tmk::VarpiLookup::from_tables(tables);
    params.enable_lemma8 = lemma8;
    tmk::AuditReport report;
    int kernel_n = inst.graph.n();
    if (raw) {
        const tmk::VertexSet x = tmk::find_modulator(inst, c.exact_cap);
        report = tmk::audit_report(inst.graph, x, params);
    } else {
        tmk::InstanceAudit ia = tmk::audit_instance(inst, tables, params, kernel_config(c));
        kernel_n = ia.kernel.kernel.graph.n();
        report = std::move(ia.report);
    }
    const fs::path base = fs::path(c.report_dir) / stem;
    const fs::path csv = base.string() + "-report.csv";
    const fs::path js = base.string() + "-report.json";
    {
        auto os = open_output(csv);
        tmk::write_report_csv(os, report);
    }
    {
        auto os = open_output(js);
        tmk::write_report_json(os, report);
    }
    json j;
    j["csv"] = csv.string();
    j["json"] = js.string();
    j["audited_n"] = kernel_n;
    j["all_hold"] = report.all_hold();
    json failing = json::array();
    for (const auto& row : report.rows) {
        if (!row.holds) failing.push_back(row.id);
    }
    j["failing"] = failing;
    std::cout << j.dump(2) << '\n';
    return strict && !report.all_hold() ? kChecksFailed : kOk;
}

int cmd_solve(const tmk::Config& c, const tmk::Instance& inst, bool approx, const std::string& output) {
    tmk::Solution sol;
    if (approx) {
        sol.witness = c.problem == tmk::ProblemId::FVS ? tmk::approx_feedback_vertex_set(inst.graph)
                                                       : tmk::approx_vertex_cover(inst.graph);
        sol.value = static_cast<int>(sol.witness.size());
    } else {
        sol = tmk::exact_solve(c.problem, inst.graph, c.exact_cap);
    }
    json j;
    j["problem"] = tmk::to_string(c.problem);
    j["method"] = approx ? "approximate" : "exact";
    j["value"] = sol.value;
    j["k"] = inst.k;
    if (!approx) j["yes"] = sol.value <= inst.k;
    j["solution"] = sol.witness;
    if (!output.empty()) {
        auto os = open_output(output);
        os << j.dump(2) << '\n';
    }
    std::cout << j.dump(2) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Protrusion-replacement kernelization toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all");

    Overrides o;
    app.add_option("-c,--config", o.config_path, "JSON config file; flags override its values")->check(CLI::ExistingFile);
    app.add_option("--problem", o.problem, "fvs or vc");
    app.add_option("--r", o.r, "excluded clique order used by audits");
    app.add_option("--t", o.t, "treewidth bound of G - X");
    app.add_option("--b-max", o.b_max, "largest protrusion boundary to replace");
    app.add_option("--n-max", o.n_max, "enumeration cap for FII tables");
    app.add_option("--exact-cap", o.exact_cap, "largest graph solved exactly");
    app.add_option("--cache-dir", o.cache_dir, "table cache (default: $TMK_CACHE_DIR, else .tmk-cache)");
    app.add_option("--report-dir", o.report_dir, "directory for audit reports");
    app.add_option("--seed", o.seeds, "generator seeds (repeatable)");

    std::optional<std::string> format;
    std::string input;
    std::optional<int> k_flag;
    const auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "graph file (edge list, or DIMACS for .dimacs/.col/.gr)")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--format", format, "edgelist or dimacs, overriding the extension");
        sub->add_option("--k", k_flag, "parameter, overriding the file's k");
    };

    auto* build = app.add_subcommand("build-table", "build or load FII tables for boundaries 0..b_max");

    auto* gen = app.add_subcommand("gen", "write generated instances");
    std::optional<std::string> family;
    std::optional<int> gn, gk, gd, gattach;
    std::string gen_output, gen_dir;
    gen->add_option("--family", family, "planted-modulator, bounded-degree-random or pendant-rich");
    gen->add_option("--n", gn, "vertex count");
    gen->add_option("--k", gk, "planted modulator size and parameter k");
    gen->add_option("--d", gd, "maximum degree");
    gen->add_option("--attach", gattach, "forest neighbours per modulator vertex");
    gen->add_option("-o,--output", gen_output, "instance file (single seed)");
    gen->add_option("--out-dir", gen_dir, "directory receiving one file per seed");

    auto* kern = app.add_subcommand("kernelize", "apply protrusion replacement until no rule fires");
    add_input(kern);
    std::string kern_output, trace_output;
    kern->add_option("-o,--output", kern_output, "kernel instance file")->required();
    kern->add_option("--trace", trace_output, "reduction trace (JSON lines)");

    auto* audit = app.add_subcommand("audit", "kernelize and write the bound-check report");
    add_input(audit);
    std::string stem;
    bool raw = false, lemma8 = false, strict = false;
    audit->add_option("--name", stem, "report file stem (default: input file stem)");
    audit->add_flag("--raw", raw, "audit the input as given instead of its kernel");
    audit->add_flag("--lemma8", lemma8, "also run the pseudo-scrub check");
    audit->add_flag("--strict", strict, "exit with status 1 when a check fails");

    auto* solve = app.add_subcommand("solve", "solve an instance");
    add_input(solve);
    bool approx = false;
    std::string solve_output;
    solve->add_flag("--approx", approx, "use the polynomial-time approximation");
    solve->add_option("-o,--output", solve_output, "solution file (JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error("usage", e.what(), kUsage);
    }

    try {
        const tmk::Config c = resolve_config(o);
        if (*build) return cmd_build_table(c);
        if (*gen) return cmd_gen(c, family, gn, gk, gd, gattach, gen_output, gen_dir);
        const tmk::Instance inst = read_instance(c, input, k_flag, format);
        if (*kern) return cmd_kernelize(c, inst, kern_output, trace_output);
        if (*audit) return cmd_audit(c, inst, stem.empty() ? fs::path(input).stem().string() : stem, raw, lemma8, strict);
        if (*solve) return cmd_solve(c, inst, approx, solve_output);
    } catch (const MissingTableError& e) {
        return report_error("missing_table", e.what(), kMissingTable, e.hint());
    } catch (const tmk::ParseError& e) {
        return report_error("parse", e.what(), kInput);
    } catch (const tmk::InputError& e) {
        return report_error("input", e.what(), kInput);
    } catch (const tmk::CapabilityError& e) {
        return report_error("capability", e.what(), kCapability);
    } catch (const tmk::PreconditionError& e) {
        return report_error("precondition", e.what(), kPrecondition);
    } catch (const std::exception& e) {
        return report_error("internal", e.what(), kInternal);
    }
    return kInternal;
}
