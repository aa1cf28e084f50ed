/**
 * @file acceptance.cpp
 * @brief End-to-end acceptance gate.  Ten checks, each printed as a single
 *        PASS/FAIL line with its runtime against a budget pinned in code.
 *        Exit status is the number of failed checks.
 */
#include "vertexforge/amplitude.hpp"
#include "vertexforge/cli.hpp"
#include "vertexforge/symfun.hpp"
#include "vertexforge/toric.hpp"
#include "vertexforge/vevoracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

using namespace vf;

namespace {

std::vector<Partition> up_to_weight(int w) {
    std::vector<Partition> out;
    for (int d = 0; d <= w; ++d)
        for (const Partition& p : partitions_of(d)) out.push_back(p);
    return out;
}

QRational at_or_zero(const DegreeSeries& s, const DegreeVector& d) {
    const QRational* v = s.find(d);
    return v ? *v : QRational();
}

std::vector<DegreeVector> box_degrees(const DegreeSeries& s) {
    std::vector<DegreeVector> out;
    DegreeVector d(s.bound.size(), 0);
    while (true) {
        if (s.in_box(d)) out.push_back(d);
        std::size_t i = d.size();
        while (i > 0) {
            --i;
            if (d[i] < s.bound[i]) {
                ++d[i];
                break;
            }
            d[i] = 0;
            if (i == 0) return out;
        }
        if (d.empty()) return out;
    }
}

bool is_zero_vec(const DegreeVector& d) {
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

std::string vec_str(const DegreeVector& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

// ---- the five published example values of the vertex weight ----

struct Golden {
    Partition l1, l2, l3;
    QRational want;
};

std::vector<Golden> golden_values() {
    QRational b1(qnum(1));
    QRational t = b1 * b1;
    return {
        {Partition{1}, Partition{}, Partition{}, QRational(HalfLaurent(1), qnum(1))},
        {Partition{2}, Partition{}, Partition{},
         QRational(HalfLaurent::monomial(1, 1), qnum(1) * qnum(2))},
        {Partition{1, 1}, Partition{}, Partition{},
         QRational(HalfLaurent::monomial(1, -1), qnum(1) * qnum(2))},
        {Partition{1}, Partition{1}, Partition{}, QRational(HalfLaurent(1)) + t.inverse()},
        {Partition{1}, Partition{1}, Partition{1},
         b1 + QRational(HalfLaurent(3)) * b1.inverse() + b1.inverse().pow(3)},
    };
}

// ---- criteria ----

bool golden_both_evaluators(std::string& msg) {
    for (const Golden& g : golden_values()) {
        if (!(three_point(g.l1, g.l2, g.l3) == g.want)) {
            msg = "series evaluator wrong at C_" + g.l1.str() + g.l2.str() + g.l3.str();
            return false;
        }
        if (!(three_point_oracle(g.l1, g.l2, g.l3) == g.want)) {
            msg = "mode-operator oracle wrong at C_" + g.l1.str() + g.l2.str() + g.l3.str();
            return false;
        }
    }
    return true;
}

bool cyclic_symmetry_sweep(std::string& msg) {
    std::vector<Partition> shapes = up_to_weight(3);
    for (const Partition& a : shapes)
        for (const Partition& b : shapes)
            for (const Partition& c : shapes) {
                QRational v = three_point_direct(a, b, c);
                if (!(v == three_point_direct(b, c, a)) ||
                    !(v == three_point_direct(c, a, b))) {
                    msg = "asymmetric at " + a.str() + " " + b.str() + " " + c.str();
                    return false;
                }
            }
    return true;
}

bool evaluator_oracle_agreement(std::string& msg) {
    std::vector<Partition> shapes = up_to_weight(3);
    for (const Partition& a : shapes)
        for (const Partition& b : shapes)
            for (const Partition& c : shapes)
                if (!(three_point_oracle(a, b, c, 4) == three_point(a, b, c))) {
                    msg = "disagreement at " + a.str() + " " + b.str() + " " + c.str();
                    return false;
                }
    return true;
}

// shared body for the two single-edge closed-form checks; sign is the sign of
// the closed form 1/(d [d]^2) and expected_n the lone genus-0 invariant
bool single_edge_closed_form(int framing, int sign, long expected_n, std::string& msg) {
    GTGraph g = preset_conifold(framing);
    DegreeSeries f = free_energy(g, {4});
    for (long d = 1; d <= 4; ++d) {
        QRational want(HalfLaurent(Rat(sign, d)), qnum(d) * qnum(d));
        if (!(at_or_zero(f, {static_cast<int>(d)}) == want)) {
            msg = "F(" + std::to_string(d) + ") differs from the closed form";
            return false;
        }
    }
    GVTable table;
    for (int d = 1; d <= 4; ++d) {
        try {
            for (const auto& [genus, n] : gv_extract({d}, g_invariant(f, {d})))
                table.n[{{d}, genus}] = n;
        } catch (const IntegralityViolation& v) {
            msg = std::string("integrality violation: ") + v.what();
            return false;
        }
    }
    GVTable want;
    want.n[{{1}, 0}] = expected_n;
    if (table.n != want.n) {
        msg = "invariant table has " + std::to_string(table.n.size()) + " entries";
        return false;
    }
    return true;
}

bool single_edge_negative(std::string& msg) { return single_edge_closed_form(0, -1, 1, msg); }
bool single_edge_positive(std::string& msg) { return single_edge_closed_form(1, 1, -1, msg); }

bool triangle_integrality_and_classes(std::string& msg) {
    GTGraph p2 = preset_local_p2();
    DegreeSeries f = free_energy(p2, {4, 4, 4}, 4);
    GVTable table;
    for (const DegreeVector& d : box_degrees(f)) {
        if (is_zero_vec(d)) continue;
        try {
            for (const auto& [genus, n] : gv_extract(d, g_invariant(f, d)))
                table.n[{d, genus}] = n;
        } catch (const IntegralityViolation& v) {
            msg = "integrality fails at " + vec_str(d) + ": " + v.value;
            return false;
        }
    }
    GVTable by_class = aggregate_by_class(table, ClassMap::sum(3));
    // expected slice for total class <= 3, frozen from the independent
    // evaluation in tests/oracles/local_p2_direct.py (run: python3 ...)
    std::map<std::pair<std::vector<int>, int>, Int> want{
        {{{1}, 0}, Int(3)},
        {{{2}, 0}, Int(-6)},
        {{{3}, 0}, Int(27)},
        {{{3}, 1}, Int(-10)},
    };
    std::map<std::pair<std::vector<int>, int>, Int> got;
    for (const auto& [key, n] : by_class.n)
        if (key.first[0] <= 3) got[key] = n;
    if (got != want) {
        msg = "class table slice has " + std::to_string(got.size()) + " entries";
        return false;
    }
    return true;
}

bool fan_construction(std::string& msg) {
    Fan conifold;
    conifold.cones = {{{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}}, {{{1, 0, 1}, {0, 1, 1}, {1, 1, 1}}}};
    GTGraph cg = from_fan(conifold);
    if (!cg.validate().empty() || cg.internal_edge_ids().size() != 1 ||
        cg.edge(cg.internal_edge_ids()[0]).framing != 0) {
        msg = "two-cone fan did not give a single framing-0 edge";
        return false;
    }

    Fan triangle;
    triangle.cones = {{{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}},
                      {{{0, 0, 1}, {0, 1, 1}, {-1, -1, 1}}},
                      {{{0, 0, 1}, {-1, -1, 1}, {1, 0, 1}}}};
    GTGraph tg = from_fan(triangle);
    if (!tg.validate().empty() || tg.internal_edge_ids().size() != 3) {
        msg = "three-cone fan did not give the triangle graph";
        return false;
    }
    for (int e : tg.internal_edge_ids())
        if (tg.edge(e).framing != 2) {
            msg = "triangle framing is " + std::to_string(tg.edge(e).framing);
            return false;
        }

    Fan not_smooth;
    not_smooth.cones = {{{{0, 0, 1}, {2, 0, 1}, {0, 1, 1}}}};
    try {
        from_fan(not_smooth);
        msg = "determinant-2 cone was accepted";
        return false;
    } catch (const FanError& e) {
        if (e.kind != FanError::Kind::NotSmooth) {
            msg = "determinant-2 cone rejected with the wrong kind";
            return false;
        }
    }

    Fan not_cy;
    not_cy.cones = {{{{0, 0, 1}, {1, 0, 1}, {0, 1, 2}}}};
    try {
        from_fan(not_cy);
        msg = "height-2 generator was accepted";
        return false;
    } catch (const FanError& e) {
        if (e.kind != FanError::Kind::NotCalabiYau) {
            msg = "height-2 generator rejected with the wrong kind";
            return false;
        }
    }
    return true;
}

bool invariance_suite(std::string& msg) {
    struct Instance {
        std::string name;
        GTGraph graph;
    };
    std::vector<Instance> presets = {
        {"conifold:0", preset_conifold(0)},     {"conifold:2", preset_conifold(2)},
        {"cycle:1,2", preset_cycle({1, 2})},    {"localP2", preset_local_p2()},
        {"flopF1:2,2,2,0", preset_flop_f1({2, 2, 2, 0})},
    };
    for (const Instance& inst : presets) {
        const GTGraph& g = inst.graph;
        std::size_t m = g.internal_edge_ids().size();
        DegreeSeries z = z_series(g, std::vector<int>(m, 3), 3);
        std::vector<GTGraph> flipped;
        for (int e : g.internal_edge_ids()) flipped.push_back(flip_edge(g, e));
        for (const DegreeVector& d : box_degrees(z)) {
            QRational v = at_or_zero(z, d);
            if (!(bar_involution(v) == v)) {
                msg = inst.name + ": Z" + vec_str(d) + " not bar-invariant";
                return false;
            }
            for (std::size_t k = 0; k < flipped.size(); ++k)
                if (!(z_coefficient(flipped[k], d) == v)) {
                    msg = inst.name + ": Z" + vec_str(d) + " changed by flipping edge " +
                          std::to_string(g.internal_edge_ids()[k]);
                    return false;
                }
        }
        DegreeSeries f = log_series(z);
        GVTable table;
        for (const DegreeVector& d : box_degrees(f)) {
            if (is_zero_vec(d)) continue;
            for (const auto& [genus, n] : gv_extract(d, g_invariant(f, d)))
                table.n[{d, genus}] = n;
        }
        for (const DegreeVector& d : box_degrees(f)) {
            if (is_zero_vec(d)) continue;
            if (!(reconstruct_free_energy(table, d) == at_or_zero(f, d))) {
                msg = inst.name + ": reconstruction differs at " + vec_str(d);
                return false;
            }
        }
    }
    return true;
}

bool arithmetic_property_grid(std::string& msg) {
    // divisibility of the k-fold multinomial by the tuple total when the
    // tuple is collectively coprime
    std::vector<std::vector<long>> tuples;
    std::vector<long> stack;
    std::function<void()> build = [&]() {
        if (!stack.empty()) tuples.push_back(stack);
        if (stack.size() == 4) return;
        for (long v = 1; v <= 5; ++v) {
            stack.push_back(v);
            build();
            stack.pop_back();
        }
    };
    build();
    for (const std::vector<long>& n : tuples) {
        long g = 0, total = 0;
        for (long x : n) {
            g = std::gcd(g, x);
            total += x;
        }
        if (g != 1) continue;
        for (long k = 1; k <= 5; ++k)
            if (multinomial(k, n) % total != 0) {
                msg = "multinomial(" + std::to_string(k) + ", ...) not divisible by " +
                      std::to_string(total);
                return false;
            }
    }
    // prime-power congruence between consecutive scalings
    for (long p : {2L, 3L})
        for (int i : {1, 2})
            for (long k = 1; k <= 4; ++k) {
                if (k % p == 0) continue;
                long pi = 1;
                for (int j = 0; j < i; ++j) pi *= p;
                for (const std::vector<long>& n : tuples) {
                    if (n.size() > 3) continue;
                    long g = 0, total = 0;
                    for (long x : n) {
                        g = std::gcd(g, x);
                        total += x;
                    }
                    if (g != 1) continue;
                    Int diff = multinomial(pi * k, n) - multinomial(pi / p * k, n);
                    if (diff % Int(pi * total) != 0) {
                        msg = "congruence fails at p=" + std::to_string(p) +
                              " i=" + std::to_string(i) + " k=" + std::to_string(k);
                        return false;
                    }
                }
            }
    // binomial expansion of (x1+x2)^6 against (x1^3+x2^3)^2 coefficientwise mod 3
    for (unsigned long j = 0; j <= 6; ++j) {
        Int lhs, rhs(0);
        mpz_bin_uiui(lhs.get_mpz_t(), 6, j);
        if (j % 3 == 0) mpz_bin_uiui(rhs.get_mpz_t(), 2, j / 3);
        if ((lhs - rhs) % 3 != 0) {
            msg = "coefficient " + std::to_string(j) + " not congruent mod 3";
            return false;
        }
    }
    // divisor sums of the mobius function, and inversion as used by the
    // multicover stripping
    for (long k = 1; k <= 60; ++k) {
        long s = 0;
        for (long d = 1; d <= k; ++d)
            if (k % d == 0) s += mobius(d);
        if (s != (k == 1 ? 1 : 0)) {
            msg = "mobius divisor sum wrong at " + std::to_string(k);
            return false;
        }
        long f = 0; // f(k) = sum_{d|k} g(d) with g(d) = d^2 + 1
        for (long d = 1; d <= k; ++d)
            if (k % d == 0) f += d * d + 1;
        long back = 0;
        for (long d = 1; d <= k; ++d)
            if (k % d == 0) {
                long fd = 0;
                for (long e = 1; e <= d; ++e)
                    if (d % e == 0) fd += e * e + 1;
                back += mobius(k / d) * fd;
            }
        (void)f;
        if (back != k * k + 1) {
            msg = "mobius inversion wrong at " + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool thread_determinism(std::string& msg) {
    RunConfig one;
    one.preset = "localP2";
    one.threads = 1;
    RunResult r1 = cmd_compute(one);
    RunConfig four = one;
    four.threads = 4;
    RunResult r4 = cmd_compute(four);
    if (r1.exit_code != 0 || r4.exit_code != 0) {
        msg = "compute failed";
        return false;
    }
    if (r1.out != r4.out) {
        msg = "outputs differ between 1 and 4 threads";
        return false;
    }
    return true;
}

struct Criterion {
    int id;
    const char* name;
    long budget_ms;
    bool (*run)(std::string&);
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "golden vertex values, both evaluators", 10000, golden_both_evaluators},
        {2, "cyclic symmetry, all triples of weight <= 3", 60000, cyclic_symmetry_sweep},
        {3, "evaluator vs oracle, all triples of weight <= 3", 300000, evaluator_oracle_agreement},
        {4, "single-edge graph n=0: closed form and invariants", 30000, single_edge_negative},
        {5, "single-edge graph n=1: closed form and invariants", 30000, single_edge_positive},
        {6, "triangle graph: integrality and class table, |d| <= 4", 900000,
         triangle_integrality_and_classes},
        {7, "fan conversion and validator rejections", 5000, fan_construction},
        {8, "flip/bar invariance and reconstruction, |d| <= 3", 600000, invariance_suite},
        {9, "arithmetic property grid", 60000, arithmetic_property_grid},
        {10, "byte-identical output across thread counts", 60000, thread_determinism},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string msg;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(msg);
        } catch (const std::exception& ex) {
            msg = std::string("unexpected exception: ") + ex.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        bool in_budget = ms <= c.budget_ms;
        bool pass = ok && in_budget;
        if (!pass) ++failures;
        std::printf("%s %2d  %-52s %8lld ms  (budget %ld ms)\n", pass ? "PASS" : "FAIL", c.id,
                    c.name, static_cast<long long>(ms), c.budget_ms);
        if (!ok && !msg.empty()) std::printf("        %s\n", msg.c_str());
        if (ok && !in_budget) std::printf("        over budget\n");
    }
    std::printf("acceptance: %d of %zu criteria passed\n",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
