#include "vertexforge/cli.hpp"

#include "vertexforge/amplitude.hpp"
#include "vertexforge/symfun.hpp"
#include "vertexforge/toric.hpp"
#include "vertexforge/vevoracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace vf {

namespace {

std::string vec_str(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string idlist_str(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

long vec_total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

/// report order: total degree first, then lexicographic
bool degree_less(const DegreeVector& a, const DegreeVector& b) {
    long ta = vec_total(a), tb = vec_total(b);
    if (ta != tb) return ta < tb;
    return a < b;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ClassMap resolve_class_map(const std::string& spec, std::size_t edge_count, std::string& desc) {
    if (spec == "sum") {
        desc = "sum";
        return ClassMap::sum(edge_count);
    }
    if (spec == "identity") {
        desc = "identity";
        return ClassMap::identity(edge_count);
    }
    std::ifstream in(spec);
    if (!in) throw UsageError(spec + ": cannot open class map file");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
        ClassMap cm;
        for (const auto& row : j.at("rows")) cm.rows.push_back(row.get<std::vector<int>>());
        for (const auto& row : cm.rows)
            if (row.size() != edge_count)
                throw UsageError(spec + ": class map rows must have one entry per internal edge");
        desc = "file " + spec;
        return cm;
    } catch (const nlohmann::json::exception& ex) {
        throw UsageError(spec + ": bad class map file: " + ex.what());
    }
}

struct Pipeline {
    std::string source;
    std::vector<int> edge_ids;
    std::vector<int> box;
    long total_bound = -1;
    std::string class_map_desc;
    DegreeSeries z, f;
    std::vector<std::pair<DegreeVector, QRational>> g;
    GVTable by_degree, by_class;
    bool violation = false;
    std::string violation_text;
};

GTGraph load_source(const RunConfig& cfg, std::string& desc) {
    int sources = (cfg.preset.empty() ? 0 : 1) + (cfg.graph_path.empty() ? 0 : 1) +
                  (cfg.fan_path.empty() ? 0 : 1);
    if (sources != 1) throw UsageError("specify exactly one of --preset, --graph, --fan");
    if (!cfg.preset.empty()) {
        desc = "preset " + cfg.preset;
        return preset_by_name(cfg.preset);
    }
    if (!cfg.graph_path.empty()) {
        desc = "graph " + cfg.graph_path;
        return graph_from_file(cfg.graph_path);
    }
    desc = "fan " + cfg.fan_path;
    return from_fan(fan_from_file(cfg.fan_path));
}

Pipeline run_pipeline(const GTGraph& graph, const RunConfig& cfg, const std::string& source) {
    Pipeline p;
    p.source = source;
    p.edge_ids = graph.internal_edge_ids();
    std::size_t m = p.edge_ids.size();
    p.box = cfg.max_degree;
    p.total_bound = cfg.max_total_degree;
    if (p.box.empty() && p.total_bound < 0) {
        if (m > 4)
            throw UsageError("graph has " + std::to_string(m) +
                             " internal edges; give --max-degree or --max-total-degree");
        p.total_bound = 4;
    }
    if (p.box.empty()) p.box.assign(m, static_cast<int>(p.total_bound));
    if (p.box.size() != m)
        throw UsageError("--max-degree needs " + std::to_string(m) + " entries for this graph");
    for (int b : p.box)
        if (b < 0) throw UsageError("degree bounds must be nonnegative");
    ClassMap cm = resolve_class_map(cfg.class_map, m, p.class_map_desc);

    p.z = z_series(graph, p.box, p.total_bound, cfg.threads);
    p.f = log_series(p.z);
    std::vector<DegreeVector> order;
    for (const auto& [d, c] : p.f.coeff) order.push_back(d);
    std::sort(order.begin(), order.end(), degree_less);
    for (const DegreeVector& d : order) {
        QRational gd = g_invariant(p.f, d);
        try {
            for (const auto& [genus, n] : gv_extract(d, gd)) p.by_degree.n[{d, genus}] = n;
        } catch (const IntegralityViolation& ex) {
            p.violation = true;
            p.violation_text = ex.what();
            p.g.emplace_back(d, std::move(gd));
            break;
        }
        p.g.emplace_back(d, std::move(gd));
    }
    if (!p.violation) p.by_class = aggregate_by_class(p.by_degree, cm);
    return p;
}

/// table keys sorted the same way as degree reports
std::vector<std::pair<std::vector<int>, int>> sorted_keys(const GVTable& t) {
    std::vector<std::pair<std::vector<int>, int>> keys;
    keys.reserve(t.n.size());
    for (const auto& [key, n] : t.n) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return degree_less(a.first, b.first);
        return a.second < b.second;
    });
    return keys;
}

std::vector<DegreeVector> sorted_degrees(const std::map<DegreeVector, QRational>& m) {
    std::vector<DegreeVector> keys;
    keys.reserve(m.size());
    for (const auto& [d, c] : m) keys.push_back(d);
    std::sort(keys.begin(), keys.end(), degree_less);
    return keys;
}

std::string render_text(const Pipeline& p, bool gv_only) {
    std::string s;
    s += "source: " + p.source + "\n";
    s += "internal edges: " + idlist_str(p.edge_ids) + "\n";
    s += "bound: componentwise " + vec_str(p.box);
    if (p.total_bound >= 0) s += ", total " + std::to_string(p.total_bound);
    s += "\n";
    s += "class map: " + p.class_map_desc + "\n";
    if (!gv_only) {
        s += "\n[Z] partition function coefficients\n";
        for (const DegreeVector& d : sorted_degrees(p.z.coeff))
            s += "Z" + vec_str(d) + " = " + p.z.coeff.at(d).str() + "\n";
        s += "\n[F] log coefficients\n";
        for (const DegreeVector& d : sorted_degrees(p.f.coeff))
            s += "F" + vec_str(d) + " = " + p.f.coeff.at(d).str() + "\n";
        s += "\n[G] multicover-stripped coefficients\n";
        for (const auto& [d, c] : p.g) s += "G" + vec_str(d) + " = " + c.str() + "\n";
    }
    s += "\n[GV] invariants by degree\n";
    for (const auto& key : sorted_keys(p.by_degree))
        s += "n^" + std::to_string(key.second) + vec_str(key.first) + " = " +
             p.by_degree.n.at(key).get_str() + "\n";
    if (p.violation) {
        s += "\nINTEGRALITY VIOLATION\n" + p.violation_text + "\n";
        return s;
    }
    s += "\n[GV] invariants by class\n";
    for (const auto& key : sorted_keys(p.by_class))
        s += "n^" + std::to_string(key.second) + vec_str(key.first) + " = " +
             p.by_class.n.at(key).get_str() + "\n";
    return s;
}

std::string render_json(const Pipeline& p, bool gv_only) {
    nlohmann::ordered_json j;
    j["source"] = p.source;
    j["edge_ids"] = p.edge_ids;
    j["bound"]["componentwise"] = p.box;
    if (p.total_bound >= 0) j["bound"]["total"] = p.total_bound;
    j["class_map"] = p.class_map_desc;
    if (!gv_only) {
        j["z"] = nlohmann::ordered_json::array();
        for (const DegreeVector& d : sorted_degrees(p.z.coeff))
            j["z"].push_back({{"d", d}, {"value", p.z.coeff.at(d).str()}});
        j["f"] = nlohmann::ordered_json::array();
        for (const DegreeVector& d : sorted_degrees(p.f.coeff))
            j["f"].push_back({{"d", d}, {"value", p.f.coeff.at(d).str()}});
        j["g"] = nlohmann::ordered_json::array();
        for (const auto& [d, c] : p.g) j["g"].push_back({{"d", d}, {"value", c.str()}});
    }
    j["gv_by_degree"] = nlohmann::ordered_json::array();
    for (const auto& key : sorted_keys(p.by_degree))
        j["gv_by_degree"].push_back(
            {{"d", key.first}, {"genus", key.second}, {"n", p.by_degree.n.at(key).get_str()}});
    if (p.violation) {
        j["integrality_violation"] = p.violation_text;
    } else {
        j["gv_by_class"] = nlohmann::ordered_json::array();
        for (const auto& key : sorted_keys(p.by_class))
            j["gv_by_class"].push_back(
                {{"class", key.first}, {"genus", key.second}, {"n", p.by_class.n.at(key).get_str()}});
    }
    return j.dump(2) + "\n";
}

std::string render_csv(const Pipeline& p, bool gv_only) {
    std::string s = "section,degree,genus,value\n";
    auto row = [&s](const std::string& sec, const std::string& deg, const std::string& genus,
                    const std::string& value) {
        s += sec + ",\"" + deg + "\"," + genus + ",\"" + value + "\"\n";
    };
    if (!gv_only) {
        for (const DegreeVector& d : sorted_degrees(p.z.coeff))
            row("z", vec_str(d), "", p.z.coeff.at(d).str());
        for (const DegreeVector& d : sorted_degrees(p.f.coeff))
            row("f", vec_str(d), "", p.f.coeff.at(d).str());
        for (const auto& [d, c] : p.g) row("g", vec_str(d), "", c.str());
    }
    for (const auto& key : sorted_keys(p.by_degree))
        row("gv_by_degree", vec_str(key.first), std::to_string(key.second),
            p.by_degree.n.at(key).get_str());
    if (p.violation) {
        row("integrality_violation", "", "", p.violation_text);
        return s;
    }
    for (const auto& key : sorted_keys(p.by_class))
        row("gv_by_class", vec_str(key.first), std::to_string(key.second),
            p.by_class.n.at(key).get_str());
    return s;
}

void check_common(const RunConfig& cfg) {
    if (cfg.threads < 1) throw UsageError("--threads must be at least 1");
    if (cfg.output != "text" && cfg.output != "json" && cfg.output != "csv")
        throw UsageError("--output must be text, json, or csv");
    if (cfg.max_total_degree < -1) throw UsageError("--max-total-degree must be nonnegative");
}

RunResult failure(const std::exception& ex) {
    return {"", std::string("error: ") + ex.what() + "\n", kExitError};
}

} // namespace

RunResult cmd_presets(const RunConfig& cfg) {
    try {
        check_common(cfg);
        auto rows = preset_catalog();
        if (cfg.output == "json") {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (const auto& r : rows)
                j.push_back({{"name", r[0]}, {"syntax", r[1]}, {"description", r[2]}});
            return {j.dump(2) + "\n", "", kExitOk};
        }
        if (cfg.output == "csv") {
            std::string s = "name,syntax,description\n";
            for (const auto& r : rows) s += r[0] + "," + r[1] + ",\"" + r[2] + "\"\n";
            return {s, "", kExitOk};
        }
        std::string s;
        for (const auto& r : rows) {
            std::string line = r[0];
            line.append(line.size() < 10 ? 10 - line.size() : 1, ' ');
            line += r[1];
            line.append(line.size() < 32 ? 32 - line.size() : 1, ' ');
            s += line + r[2] + "\n";
        }
        return {s, "", kExitOk};
    } catch (const std::exception& ex) {
        return failure(ex);
    }
}

RunResult cmd_compute(const RunConfig& cfg) {
    try {
        check_common(cfg);
        std::string source;
        GTGraph graph = load_source(cfg, source);
        std::vector<std::string> bad = graph.validate();
        if (!bad.empty()) {
            std::string err = "invalid graph:\n";
            for (const auto& b : bad) err += "  " + b + "\n";
            return {"", err, kExitError};
        }
        Pipeline p = run_pipeline(graph, cfg, source);
        std::string out = cfg.output == "json"  ? render_json(p, cfg.gv_only)
                          : cfg.output == "csv" ? render_csv(p, cfg.gv_only)
                                                : render_text(p, cfg.gv_only);
        return {out, "", p.violation ? kExitIntegrality : kExitOk};
    } catch (const std::exception& ex) {
        return failure(ex);
    }
}

RunResult cmd_from_fan(const RunConfig& cfg) {
    try {
        check_common(cfg);
        if (cfg.fan_path.empty()) throw UsageError("from-fan needs --fan PATH");
        GTGraph graph = from_fan(fan_from_file(cfg.fan_path));
        return {graph_to_json(graph), "", kExitOk};
    } catch (const std::exception& ex) {
        return failure(ex);
    }
}

RunResult cmd_crosscheck(const RunConfig& cfg) {
    try {
        check_common(cfg);
        if (cfg.weight_bound < 0 || cfg.weight_bound > 3)
            throw UsageError("--weight-bound must be between 0 and 3");
        auto start = std::chrono::steady_clock::now();
        std::vector<Partition> parts;
        for (int w = 0; w <= cfg.weight_bound; ++w)
            for (const Partition& p : partitions_of(w)) parts.push_back(p);
        long compared = 0;
        std::vector<std::string> mismatches;
        for (const Partition& a : parts)
            for (const Partition& b : parts)
                for (const Partition& c : parts) {
                    QRational series = three_point(a, b, c);
                    QRational oracle = three_point_oracle(a, b, c, cfg.threads);
                    ++compared;
                    if (!(series == oracle))
                        mismatches.push_back(a.str() + " " + b.str() + " " + c.str() +
                                             ": series=" + series.str() +
                                             " oracle=" + oracle.str());
                }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (cfg.output == "json") {
            nlohmann::ordered_json j;
            j["weight_bound"] = cfg.weight_bound;
            j["triples_compared"] = compared;
            j["mismatches"] = mismatches;
            j["runtime_ms"] = ms;
            return {j.dump(2) + "\n", "", mismatches.empty() ? kExitOk : kExitError};
        }
        std::string s = "crosscheck: series evaluator vs mode-operator oracle\n";
        s += "weight bound: " + std::to_string(cfg.weight_bound) + "\n";
        s += "triples compared: " + std::to_string(compared) + "\n";
        s += "mismatches: " + std::to_string(mismatches.size()) + "\n";
        for (const auto& m : mismatches) s += "MISMATCH " + m + "\n";
        s += "runtime: " + std::to_string(ms) + " ms\n";
        return {s, "", mismatches.empty() ? kExitOk : kExitError};
    } catch (const std::exception& ex) {
        return failure(ex);
    }
}

namespace {

using CheckFn = std::function<std::string()>;

std::string check_golden_series() {
    QRational one_over_1(HalfLaurent(1), qnum(1));
    if (!(three_point(Partition{1}, Partition{}, Partition{}) == one_over_1))
        return "C((1),(),()) wrong";
    if (!(three_point(Partition{2}, Partition{}, Partition{}) ==
          QRational(HalfLaurent::monomial(1, 1), qnum(1) * qnum(2))))
        return "C((2),(),()) wrong";
    if (!(three_point(Partition{1, 1}, Partition{}, Partition{}) ==
          QRational(HalfLaurent::monomial(1, -1), qnum(1) * qnum(2))))
        return "C((1,1),(),()) wrong";
    if (!(three_point(Partition{1}, Partition{1}, Partition{}) ==
          QRational(1) + QRational(HalfLaurent(1), qnum(1) * qnum(1))))
        return "C((1),(1),()) wrong";
    QRational inv1(HalfLaurent(1), qnum(1));
    QRational c111 = QRational(qnum(1)) + QRational(Rat(3)) * inv1 + inv1.pow(3);
    if (!(three_point(Partition{1}, Partition{1}, Partition{1}) == c111))
        return "C((1),(1),(1)) wrong";
    return "";
}

std::string check_golden_oracle() {
    QRational inv1(HalfLaurent(1), qnum(1));
    struct Row {
        Partition a, b, c;
        QRational want;
    };
    const Row rows[] = {
        {Partition{1}, Partition{}, Partition{}, inv1},
        {Partition{2}, Partition{}, Partition{}, QRational(HalfLaurent::monomial(1, 1), qnum(1) * qnum(2))},
        {Partition{1, 1}, Partition{}, Partition{}, QRational(HalfLaurent::monomial(1, -1), qnum(1) * qnum(2))},
        {Partition{1}, Partition{1}, Partition{}, QRational(1) + inv1 * inv1},
        {Partition{1}, Partition{1}, Partition{1}, QRational(qnum(1)) + QRational(Rat(3)) * inv1 + inv1.pow(3)},
    };
    for (const Row& r : rows)
        if (!(three_point_oracle(r.a, r.b, r.c) == r.want))
            return "oracle C(" + r.a.str() + "," + r.b.str() + "," + r.c.str() + ") wrong";
    return "";
}

std::string check_cyclic_symmetry(int wmax) {
    std::vector<Partition> parts;
    for (int w = 0; w <= wmax; ++w)
        for (const Partition& p : partitions_of(w)) parts.push_back(p);
    for (const Partition& a : parts)
        for (const Partition& b : parts)
            for (const Partition& c : parts) {
                QRational x = three_point_direct(a, b, c);
                if (!(x == three_point_direct(b, c, a)) || !(x == three_point_direct(c, a, b)))
                    return "cyclic symmetry fails at " + a.str() + b.str() + c.str();
            }
    return "";
}

std::string check_two_point_identity(int wmax) {
    std::vector<Partition> parts;
    for (int w = 0; w <= wmax; ++w)
        for (const Partition& p : partitions_of(w)) parts.push_back(p);
    // q^{-kappa(mu)/2} W_{mu,nu} = C_{mu^t,(),nu}; the exponent sign is fixed by
    // the per-edge factor match in the cycle-graph product formula
    for (const Partition& mu : parts)
        for (const Partition& nu : parts) {
            QRational lhs = two_point(mu, nu);
            long long k = kappa(mu);
            if (k != 0) lhs *= QRational(HalfLaurent::monomial(1, static_cast<long>(-k)));
            if (!(lhs == three_point(conjugate(mu), Partition{}, nu)))
                return "two-point identity fails at " + mu.str() + " " + nu.str();
        }
    return "";
}

std::string check_conifold_closed_form() {
    for (int n = 0; n <= 1; ++n) {
        DegreeSeries f = free_energy(preset_conifold(n), {4}, 4);
        for (int k = 1; k <= 4; ++k) {
            QRational want(HalfLaurent(Rat(n == 0 ? -1 : 1, k)), qnum(k) * qnum(k));
            const QRational* got = f.find({k});
            if (!got || !(*got == want))
                return "framing " + std::to_string(n) + " coefficient at degree " +
                       std::to_string(k) + " wrong";
        }
        GVTable t;
        for (int k = 1; k <= 4; ++k)
            for (const auto& [g, v] : gv_extract({k}, g_invariant(f, {k}))) t.n[{{k}, g}] = v;
        if (t.n.size() != 1) return "framing " + std::to_string(n) + " table has extra entries";
        auto it = t.n.find({{1}, 0});
        if (it == t.n.end() || it->second != (n == 0 ? 1 : -1))
            return "framing " + std::to_string(n) + " degree-1 invariant wrong";
    }
    return "";
}

std::string check_local_p2_degree_one() {
    GTGraph g = preset_local_p2();
    DegreeSeries f = free_energy(g, {1, 1, 1}, 1);
    GVTable t;
    for (const auto& [d, c] : f.coeff)
        for (const auto& [genus, v] : gv_extract(d, g_invariant(f, d))) t.n[{d, genus}] = v;
    GVTable by_class = aggregate_by_class(t, ClassMap::sum(3));
    auto it = by_class.n.find({{1}, 0});
    if (it == by_class.n.end() || it->second != 3) return "aggregated degree-1 invariant is not 3";
    if (by_class.n.size() != 1) return "unexpected extra entries at total degree 1";
    return "";
}

std::string check_flip_bar_invariance() {
    struct Case {
        GTGraph g;
        std::vector<int> box;
        long total;
    };
    std::vector<Case> cases;
    cases.push_back({preset_conifold(0), {2}, 2});
    cases.push_back({preset_local_p2(), {2, 2, 2}, 2});
    for (const Case& c : cases) {
        DegreeSeries z = z_series(c.g, c.box, c.total);
        for (const auto& [d, v] : z.coeff)
            if (!(bar_involution(v) == v)) return "bar changes Z at " + vec_str(d);
        for (int e : c.g.internal_edge_ids()) {
            DegreeSeries zf = z_series(flip_edge(c.g, e), c.box, c.total);
            if (!(zf.coeff == z.coeff)) return "flip of edge " + std::to_string(e) + " changes Z";
        }
    }
    return "";
}

std::string check_reconstruction() {
    DegreeSeries f = free_energy(preset_local_p2(), {2, 2, 2}, 2);
    GVTable t;
    for (const auto& [d, c] : f.coeff)
        for (const auto& [genus, v] : gv_extract(d, g_invariant(f, d))) t.n[{d, genus}] = v;
    for (const auto& [d, c] : f.coeff)
        if (!(reconstruct_free_energy(t, d) == c)) return "reconstruction differs at " + vec_str(d);
    return "";
}

std::string check_vev_micro() {
    for (long m = 1; m <= 4; ++m) {
        if (!(vev_e_product({{0, m}}) == QRational(1, qnum(m)))) return "single zero mode wrong";
        if (!(vev_e_product({{0, -m}}) == QRational(1, qnum(-m))))
            return "single negative zero mode wrong";
    }
    for (long a = 1; a <= 3; ++a)
        for (long m = -2; m <= 2; ++m)
            if (!(vev_e_product({{a, m}, {-a, -m}}) == QRational(Rat(a))))
                return "central pair value wrong";
    // consistency: <E_a(m) E_b(n)> = <E_b(n) E_a(m)> + <commutator>
    for (long a = 0; a <= 2; ++a)
        for (long b = -2; b < 0; ++b)
            for (long m = -2; m <= 2; ++m)
                for (long n = -2; n <= 2; ++n) {
                    if ((a == 0 && m == 0) || n == 0) continue;
                    QRational lhs = vev_e_product({{a, m}, {b, n}});
                    QRational rhs = vev_e_product({{b, n}, {a, m}});
                    if (a + b == 0 && m + n == 0)
                        rhs += QRational(Rat(a));
                    else if (a * n - b * m != 0 && !(a + b == 0 && m + n == 0)) {
                        if (a + b != 0 || m + n != 0)
                            rhs += QRational(qnum(a * n - b * m)) * vev_e_product({{a + b, m + n}});
                    }
                    if (!(lhs == rhs))
                        return "commutation inconsistent at a=" + std::to_string(a) +
                               " b=" + std::to_string(b) + " m=" + std::to_string(m) +
                               " n=" + std::to_string(n);
                }
    return "";
}

std::string check_arithmetic_lemmas() {
    // divisibility: (k|n|)!/prod (kn_i)! is a multiple of |n| when gcd(n) = 1
    std::vector<std::vector<long>> tuples;
    for (long a = 0; a <= 5; ++a)
        for (long b = 0; b <= 5; ++b)
            for (long c = 0; c <= 5; ++c) {
                long g = std::gcd(std::gcd(a, b), c);
                if (g == 1) tuples.push_back({a, b, c});
            }
    for (const auto& n : tuples) {
        long total = n[0] + n[1] + n[2];
        for (long k = 1; k <= 3; ++k) {
            if (multinomial(k, n) % total != 0)
                return "divisibility fails at k=" + std::to_string(k);
        }
    }
    // congruence: multinomial(p^i k, n) = multinomial(p^(i-1) k, n) mod p^i |n|
    for (long p : {2L, 3L})
        for (long i = 1; i <= 2; ++i)
            for (long k = 1; k <= 4; ++k) {
                if (k % p == 0) continue;
                long pi = 1;
                for (long t = 0; t < i; ++t) pi *= p;
                for (const std::vector<long>& n :
                     {std::vector<long>{1, 2}, {1, 1, 1}, {2, 3}, {1, 4}}) {
                    long total = std::accumulate(n.begin(), n.end(), 0L);
                    Int diff = multinomial(pi * k, n) - multinomial(pi / p * k, n);
                    if (diff % Int(pi * total) != 0)
                        return "congruence fails at p=" + std::to_string(p) +
                               " i=" + std::to_string(i) + " k=" + std::to_string(k);
                }
            }
    // binomial instance of the power congruence: (x1+x2)^6 vs (x1^3+x2^3)^2 mod 3
    for (long j = 0; j <= 6; ++j) {
        Int lhs, rhs;
        mpz_bin_uiui(lhs.get_mpz_t(), 6, static_cast<unsigned long>(j));
        if (j % 3 == 0)
            mpz_bin_uiui(rhs.get_mpz_t(), 2, static_cast<unsigned long>(j / 3));
        else
            rhs = 0;
        if ((lhs - rhs) % 3 != 0) return "power congruence fails at exponent " + std::to_string(j);
    }
    // divisor sums of the mobius function vanish except at 1
    for (long k = 1; k <= 60; ++k) {
        long s = 0;
        for (long d = 1; d <= k; ++d)
            if (k % d == 0) s += mobius(d);
        if (s != (k == 1 ? 1 : 0)) return "mobius divisor sum wrong at k=" + std::to_string(k);
    }
    return "";
}

} // namespace

RunResult cmd_selftest(const RunConfig& cfg) {
    try {
        check_common(cfg);
        struct Check {
            std::string name;
            CheckFn run;
        };
        const std::vector<Check> checks = {
            {"golden-three-point-series", check_golden_series},
            {"golden-three-point-oracle", check_golden_oracle},
            {"cyclic-symmetry-weight-2", [] { return check_cyclic_symmetry(2); }},
            {"two-point-identity-weight-2", [] { return check_two_point_identity(2); }},
            {"conifold-closed-form", check_conifold_closed_form},
            {"local-p2-degree-one", check_local_p2_degree_one},
            {"flip-bar-invariance", check_flip_bar_invariance},
            {"gv-reconstruction", check_reconstruction},
            {"vev-normal-ordering", check_vev_micro},
            {"arithmetic-lemmas", check_arithmetic_lemmas},
        };
        int failed = 0;
        nlohmann::ordered_json jchecks = nlohmann::ordered_json::array();
        std::string text = "selftest\n";
        for (const Check& c : checks) {
            auto start = std::chrono::steady_clock::now();
            std::string detail;
            try {
                detail = c.run();
            } catch (const std::exception& ex) {
                detail = std::string("exception: ") + ex.what();
            }
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            bool pass = detail.empty();
            if (!pass) ++failed;
            text += (pass ? "PASS " : "FAIL ") + c.name + " (" + std::to_string(ms) + " ms)";
            if (!pass) text += ": " + detail;
            text += "\n";
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["pass"] = pass;
            jc["ms"] = ms;
            if (!pass) jc["detail"] = detail;
            jchecks.push_back(std::move(jc));
        }
        text += "result: " + std::to_string(checks.size() - failed) + " passed, " +
                std::to_string(failed) + " failed\n";
        if (cfg.output == "json") {
            nlohmann::ordered_json j;
            j["checks"] = std::move(jchecks);
            j["passed"] = checks.size() - failed;
            j["failed"] = failed;
            return {j.dump(2) + "\n", "", failed == 0 ? kExitOk : kExitError};
        }
        return {text, "", failed == 0 ? kExitOk : kExitError};
    } catch (const std::exception& ex) {
        return failure(ex);
    }
}

} // namespace vf
