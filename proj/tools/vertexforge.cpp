#include "vertexforge/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

/// --threads wins; VERTEXFORGE_THREADS is the fallback; otherwise 1
int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("VERTEXFORGE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact topological vertex partition functions and integer invariants"};
    app.require_subcommand(1);

    vf::RunConfig cfg;
    cfg.threads = 0; // sentinel, resolved after parsing

    auto add_output = [&cfg](CLI::App* sub) {
        sub->add_option("--output", cfg.output, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };
    auto add_threads = [&cfg](CLI::App* sub) {
        sub->add_option("--threads", cfg.threads,
                        "worker threads; env VERTEXFORGE_THREADS is the fallback");
    };
    auto add_source = [&cfg](CLI::App* sub) {
        sub->add_option("--preset", cfg.preset, "built-in graph, e.g. conifold:0 or localP2");
        sub->add_option("--graph", cfg.graph_path, "graph JSON file");
        sub->add_option("--fan", cfg.fan_path, "fan JSON file");
    };
    auto add_bounds = [&cfg](CLI::App* sub) {
        sub->add_option("--max-degree", cfg.max_degree,
                        "componentwise degree bound, one entry per internal edge")
            ->delimiter(',');
        sub->add_option("--max-total-degree", cfg.max_total_degree, "total degree bound");
        sub->add_option("--class-map", cfg.class_map,
                        "sum, identity, or a JSON file with integer rows");
    };

    CLI::App* presets = app.add_subcommand("presets", "list built-in graphs");
    add_output(presets);

    CLI::App* compute = app.add_subcommand(
        "compute", "partition function, log coefficients, and integer invariants");
    add_source(compute);
    add_bounds(compute);
    add_output(compute);
    add_threads(compute);

    CLI::App* gv = app.add_subcommand("gv", "integer invariants only");
    add_source(gv);
    add_bounds(gv);
    add_output(gv);
    add_threads(gv);

    CLI::App* fromfan = app.add_subcommand("from-fan", "convert a fan to its toric graph");
    fromfan->add_option("--fan", cfg.fan_path, "fan JSON file")->required();

    CLI::App* crosscheck = app.add_subcommand(
        "crosscheck", "compare the series evaluator against the operator oracle");
    crosscheck->add_option("--weight-bound", cfg.weight_bound,
                           "largest partition weight per slot, at most 3");
    add_output(crosscheck);
    add_threads(crosscheck);

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in verification suite");
    add_output(selftest);
    add_threads(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : vf::kExitError;
    }

    cfg.threads = resolve_threads(cfg.threads);

    vf::RunResult r;
    if (presets->parsed()) {
        r = vf::cmd_presets(cfg);
    } else if (compute->parsed()) {
        r = vf::cmd_compute(cfg);
    } else if (gv->parsed()) {
        cfg.gv_only = true;
        r = vf::cmd_compute(cfg);
    } else if (fromfan->parsed()) {
        r = vf::cmd_from_fan(cfg);
    } else if (crosscheck->parsed()) {
        r = vf::cmd_crosscheck(cfg);
    } else {
        r = vf::cmd_selftest(cfg);
    }
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
