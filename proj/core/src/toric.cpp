#include "vertexforge/toric.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace vf {

namespace {

std::string ids_str(const std::vector<int>& ids) {
    std::string s = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ids[i]);
    }
    return s + "]";
}

} // namespace

GTGraph::GTGraph(std::vector<GTVertex> vertices, std::vector<GTEdge> edges)
    : v_(std::move(vertices)), e_(std::move(edges)) {
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (!vidx_.emplace(v_[i].id, i).second)
            throw std::invalid_argument("duplicate vertex id " + std::to_string(v_[i].id));
    }
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (!eidx_.emplace(e_[i].id, i).second)
            throw std::invalid_argument("duplicate edge id " + std::to_string(e_[i].id));
        for (int end : {e_[i].tail, e_[i].head}) {
            if (vidx_.count(end) == 0)
                throw std::invalid_argument("edge " + std::to_string(e_[i].id) +
                                            " references missing vertex " + std::to_string(end));
        }
    }
    for (const auto& e : e_)
        if (e.internal) internal_.push_back(e.id);
    std::sort(internal_.begin(), internal_.end());
}

const GTVertex& GTGraph::vertex(int id) const {
    auto it = vidx_.find(id);
    if (it == vidx_.end()) throw std::invalid_argument("no vertex with id " + std::to_string(id));
    return v_[it->second];
}

const GTEdge& GTGraph::edge(int id) const {
    auto it = eidx_.find(id);
    if (it == eidx_.end()) throw std::invalid_argument("no edge with id " + std::to_string(id));
    return e_[it->second];
}

int GTGraph::valence(int vertex_id) const {
    (void)vertex(vertex_id);
    int n = 0;
    for (const auto& e : e_) {
        if (e.tail == vertex_id) ++n;
        if (e.head == vertex_id) ++n;
    }
    return n;
}

std::vector<int> GTGraph::incident_edges(int vertex_id) const {
    (void)vertex(vertex_id);
    std::vector<int> ids;
    for (const auto& e : e_)
        if (e.tail == vertex_id || e.head == vertex_id) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<std::vector<int>> GTGraph::components() const {
    std::map<int, int> rep;
    for (const auto& v : v_) rep[v.id] = v.id;
    std::function<int(int)> find = [&](int a) {
        while (rep[a] != a) a = rep[a] = rep[rep[a]];
        return a;
    };
    for (const auto& e : e_) {
        int a = find(e.tail), b = find(e.head);
        if (a != b) rep[std::max(a, b)] = std::min(a, b);
    }
    std::map<int, std::vector<int>> groups;
    for (const auto& v : v_) groups[find(v.id)].push_back(v.id);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<std::string> GTGraph::validate() const {
    std::vector<std::string> bad;
    for (const auto& e : e_) {
        if (e.tail == e.head)
            bad.push_back("edge " + std::to_string(e.id) + " is a self-loop at vertex " +
                          std::to_string(e.tail));
    }
    std::map<int, int> val;
    for (const auto& v : v_) val[v.id] = 0;
    for (const auto& e : e_) {
        ++val[e.tail];
        ++val[e.head];
    }
    for (const auto& v : v_) {
        int n = val[v.id];
        if (n != 1 && n != 3)
            bad.push_back("vertex " + std::to_string(v.id) + " has valence " + std::to_string(n) +
                          ", expected 1 or 3");
    }
    for (const auto& e : e_) {
        bool both_trivalent = val[e.tail] == 3 && val[e.head] == 3;
        if (e.internal != both_trivalent)
            bad.push_back("edge " + std::to_string(e.id) + " marked internal=" +
                          (e.internal ? "true" : "false") + " but endpoints have valences " +
                          std::to_string(val[e.tail]) + "," + std::to_string(val[e.head]));
        if (!both_trivalent && e.framing != 0)
            bad.push_back("leg edge " + std::to_string(e.id) + " carries nonzero framing " +
                          std::to_string(e.framing));
    }
    for (const auto& v : v_) {
        std::vector<int> inc = incident_edges(v.id);
        if (val[v.id] == 3) {
            std::vector<int> rot = v.rotation;
            std::sort(rot.begin(), rot.end());
            if (rot != inc)
                bad.push_back("vertex " + std::to_string(v.id) + " rotation " + ids_str(v.rotation) +
                              " does not list its incident edges " + ids_str(inc));
        } else if (!v.rotation.empty() && v.rotation != inc) {
            bad.push_back("vertex " + std::to_string(v.id) + " rotation " + ids_str(v.rotation) +
                          " does not match its incident edges " + ids_str(inc));
        }
    }
    return bad;
}

GTGraph flip_edge(const GTGraph& g, int edge_id) {
    (void)g.edge(edge_id);
    std::vector<GTEdge> edges = g.edges();
    for (auto& e : edges) {
        if (e.id == edge_id) {
            std::swap(e.tail, e.head);
            e.framing = -e.framing;
        }
    }
    return GTGraph(g.vertices(), std::move(edges));
}

std::vector<GammaPartition> gamma_partitions(const GTGraph& g, const DegreeVector& d) {
    const std::vector<int>& ids = g.internal_edge_ids();
    if (d.size() != ids.size())
        throw std::invalid_argument("degree vector has " + std::to_string(d.size()) +
                                    " entries, graph has " + std::to_string(ids.size()) +
                                    " internal edges");
    std::vector<std::vector<Partition>> per_edge;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (d[i] < 0) throw std::invalid_argument("negative degree entry");
        per_edge.push_back(partitions_of(d[i]));
    }
    std::vector<GammaPartition> out;
    std::size_t total = 1;
    for (const auto& l : per_edge) total *= l.size();
    out.reserve(total);
    std::vector<std::size_t> idx(per_edge.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
        GammaPartition gp;
        gp.reserve(per_edge.size());
        for (std::size_t i = 0; i < per_edge.size(); ++i) gp.push_back(per_edge[i][idx[i]]);
        out.push_back(std::move(gp));
        for (std::size_t i = per_edge.size(); i-- > 0;) {
            if (++idx[i] < per_edge[i].size()) break;
            idx[i] = 0;
        }
    }
    return out;
}

std::map<int, std::array<Partition, 3>> vertex_triples(const GTGraph& g, const GammaPartition& gamma) {
    const std::vector<int>& ids = g.internal_edge_ids();
    if (gamma.size() != ids.size())
        throw std::invalid_argument("partition assignment does not match internal edge count");
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = i;
    std::map<int, std::array<Partition, 3>> out;
    for (const auto& v : g.vertices()) {
        if (v.rotation.size() != 3) continue;
        std::array<Partition, 3> triple;
        for (int k = 0; k < 3; ++k) {
            const GTEdge& e = g.edge(v.rotation[k]);
            if (!e.internal) continue; // stays empty
            const Partition& la = gamma[pos.at(e.id)];
            triple[k] = (e.tail == v.id) ? la : conjugate(la);
        }
        out[v.id] = std::move(triple);
    }
    return out;
}

// ---- JSON ----

std::string graph_to_json(const GTGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices()) {
        nlohmann::ordered_json jv;
        jv["id"] = v.id;
        if (!v.rotation.empty()) jv["rotation"] = v.rotation;
        j["vertices"].push_back(std::move(jv));
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges()) {
        nlohmann::ordered_json je;
        je["id"] = e.id;
        je["tail"] = e.tail;
        je["head"] = e.head;
        je["framing"] = e.framing;
        je["internal"] = e.internal;
        j["edges"].push_back(std::move(je));
    }
    return j.dump(2) + "\n";
}

namespace {

[[noreturn]] void bad_input(const std::string& origin, const std::string& what) {
    throw std::runtime_error(origin + ": " + what);
}

} // namespace

GTGraph graph_from_json(const std::string& text, const std::string& origin) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        bad_input(origin, std::string("invalid JSON: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        bad_input(origin, "expected an object with \"vertices\" and \"edges\" arrays");
    std::vector<GTVertex> vs;
    std::vector<GTEdge> es;
    try {
        for (const auto& jv : j.at("vertices")) {
            GTVertex v;
            v.id = jv.at("id").get<int>();
            if (jv.contains("rotation")) v.rotation = jv.at("rotation").get<std::vector<int>>();
            vs.push_back(std::move(v));
        }
        std::vector<std::size_t> derive;
        for (const auto& je : j.at("edges")) {
            GTEdge e;
            e.id = je.at("id").get<int>();
            e.tail = je.at("tail").get<int>();
            e.head = je.at("head").get<int>();
            e.framing = je.value("framing", 0);
            if (je.contains("internal"))
                e.internal = je.at("internal").get<bool>();
            else
                derive.push_back(es.size());
            es.push_back(std::move(e));
        }
        if (!derive.empty()) {
            // omitted flags default to the derived value: both endpoints trivalent
            std::map<int, int> val;
            for (const auto& e : es) {
                ++val[e.tail];
                ++val[e.head];
            }
            for (std::size_t k : derive) es[k].internal = val[es[k].tail] == 3 && val[es[k].head] == 3;
        }
    } catch (const nlohmann::json::exception& ex) {
        bad_input(origin, std::string("bad graph schema: ") + ex.what());
    }
    try {
        return GTGraph(std::move(vs), std::move(es));
    } catch (const std::invalid_argument& ex) {
        bad_input(origin, ex.what());
    }
}

GTGraph graph_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str(), path);
}

// ---- fans ----

Fan fan_from_json(const std::string& text, const std::string& origin) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        bad_input(origin, std::string("invalid JSON: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("cones"))
        bad_input(origin, "expected an object with a \"cones\" array");
    Fan fan;
    try {
        for (const auto& jc : j.at("cones")) {
            if (!jc.is_array() || jc.size() != 3)
                bad_input(origin, "each cone must list exactly 3 generators");
            std::array<std::array<long, 3>, 3> cone{};
            for (int i = 0; i < 3; ++i) {
                const auto& jg = jc.at(i);
                if (!jg.is_array() || jg.size() != 3)
                    bad_input(origin, "each generator must have 3 integer coordinates");
                for (int k = 0; k < 3; ++k) cone[i][k] = jg.at(k).get<long>();
            }
            fan.cones.push_back(cone);
        }
    } catch (const nlohmann::json::exception& ex) {
        bad_input(origin, std::string("bad fan schema: ") + ex.what());
    }
    return fan;
}

Fan fan_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return fan_from_json(buf.str(), path);
}

namespace {

using Pt = std::array<long, 2>;

long cross(const Pt& a, const Pt& b) { return a[0] * b[1] - a[1] * b[0]; }
Pt sub(const Pt& a, const Pt& b) { return {a[0] - b[0], a[1] - b[1]}; }

/// strictly between the endpoints of segment [a,b], on the line through them
bool in_segment_interior(const Pt& p, const Pt& a, const Pt& b) {
    Pt ab = sub(b, a), ap = sub(p, a);
    if (cross(ab, ap) != 0) return false;
    long t = ab[0] * ap[0] + ab[1] * ap[1];
    long len = ab[0] * ab[0] + ab[1] * ab[1];
    return t > 0 && t < len;
}

/// directed edge (a,b) of a ccw triangle separates it from tri when every
/// corner of tri is on the non-positive side
bool edge_separates(const Pt& a, const Pt& b, const std::array<Pt, 3>& tri) {
    Pt ab = sub(b, a);
    for (const Pt& p : tri)
        if (cross(ab, sub(p, a)) > 0) return false;
    return true;
}

/// interiors intersect, or a corner of one triangle sits inside an edge of the
/// other; sharing a full edge or single corners is fine
bool triangles_overlap(std::array<Pt, 3> s, std::array<Pt, 3> t) {
    if (cross(sub(s[1], s[0]), sub(s[2], s[0])) < 0) std::swap(s[1], s[2]);
    if (cross(sub(t[1], t[0]), sub(t[2], t[0])) < 0) std::swap(t[1], t[2]);
    bool separated = false;
    for (int i = 0; i < 3 && !separated; ++i)
        separated = edge_separates(s[i], s[(i + 1) % 3], t);
    for (int i = 0; i < 3 && !separated; ++i)
        separated = edge_separates(t[i], t[(i + 1) % 3], s);
    if (!separated) return true;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            if (in_segment_interior(s[i], t[k], t[(k + 1) % 3]) ||
                in_segment_interior(t[i], s[k], s[(k + 1) % 3]))
                return true;
    return false;
}

/// lower half-plane flag for the angular order starting at the positive x-axis
int angle_half(const Pt& u) { return (u[1] < 0 || (u[1] == 0 && u[0] < 0)) ? 1 : 0; }

bool angle_less(const Pt& a, const Pt& b) {
    int ha = angle_half(a), hb = angle_half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

} // namespace

GTGraph from_fan(const Fan& fan) {
    const auto& cones = fan.cones;
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (int k = 0; k < 3; ++k)
            if (cones[i][k][2] != 1)
                throw FanError(FanError::Kind::NotCalabiYau,
                               "generator " + std::to_string(k) + " of cone " + std::to_string(i) +
                                   " is not at height 1");
    // dedupe generators; cones become triples of generator ids
    std::map<Pt, int> gen_id;
    std::vector<Pt> gens;
    std::vector<std::array<int, 3>> tri(cones.size());
    for (std::size_t i = 0; i < cones.size(); ++i) {
        for (int k = 0; k < 3; ++k) {
            Pt p = {cones[i][k][0], cones[i][k][1]};
            auto [it, fresh] = gen_id.emplace(p, static_cast<int>(gens.size()));
            if (fresh) gens.push_back(p);
            tri[i][k] = it->second;
        }
        Pt a = gens[tri[i][0]], b = gens[tri[i][1]], c = gens[tri[i][2]];
        long det = cross(sub(b, a), sub(c, a));
        if (det != 1 && det != -1)
            throw FanError(FanError::Kind::NotSmooth,
                           "generators of cone " + std::to_string(i) + " are not a lattice basis");
    }
    std::map<std::array<int, 3>, std::size_t> seen;
    for (std::size_t i = 0; i < tri.size(); ++i) {
        std::array<int, 3> key = tri[i];
        std::sort(key.begin(), key.end());
        auto [it, fresh] = seen.emplace(key, i);
        if (!fresh)
            throw FanError(FanError::Kind::ConesOverlap, "cones " + std::to_string(it->second) +
                                                             " and " + std::to_string(i) +
                                                             " coincide");
    }
    for (std::size_t i = 0; i < tri.size(); ++i) {
        for (std::size_t j = i + 1; j < tri.size(); ++j) {
            std::array<Pt, 3> s = {gens[tri[i][0]], gens[tri[i][1]], gens[tri[i][2]]};
            std::array<Pt, 3> t = {gens[tri[j][0]], gens[tri[j][1]], gens[tri[j][2]]};
            if (triangles_overlap(s, t))
                throw FanError(FanError::Kind::ConesOverlap,
                               "cones " + std::to_string(i) + " and " + std::to_string(j) +
                                   " intersect outside a common face");
        }
    }
    // walls: sorted generator pair -> incident cones
    std::map<std::pair<int, int>, std::vector<int>> walls;
    for (std::size_t i = 0; i < tri.size(); ++i) {
        for (int k = 0; k < 3; ++k) {
            int a = tri[i][k], b = tri[i][(k + 1) % 3];
            walls[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(i));
        }
    }
    for (const auto& [key, owners] : walls) {
        if (owners.size() > 2)
            throw FanError(FanError::Kind::NonManifoldFace,
                           "1-simplex {" + std::to_string(key.first) + "," +
                               std::to_string(key.second) + "} lies in " +
                               std::to_string(owners.size()) + " cones");
    }
    std::vector<GTVertex> vs(tri.size());
    for (std::size_t i = 0; i < tri.size(); ++i) vs[i].id = static_cast<int>(i);
    std::vector<GTEdge> es;
    std::map<std::pair<int, int>, int> wall_edge;
    int next_vertex = static_cast<int>(tri.size());
    for (const auto& [key, owners] : walls) {
        GTEdge e;
        e.id = static_cast<int>(es.size());
        wall_edge[key] = e.id;
        if (owners.size() == 1) {
            GTVertex leg;
            leg.id = next_vertex++;
            vs.push_back(leg);
            e.tail = owners[0];
            e.head = leg.id;
            e.framing = 0;
            e.internal = false;
            es.push_back(e);
            continue;
        }
        int ci = owners[0], cj = owners[1];
        Pt P = gens[key.first], Q = gens[key.second];
        auto apex = [&](int c) {
            for (int k = 0; k < 3; ++k)
                if (tri[c][k] != key.first && tri[c][k] != key.second) return gens[tri[c][k]];
            throw std::logic_error("wall is not a face of its cone");
        };
        Pt C = apex(ci), D = apex(cj);
        if (cross(sub(Q, P), sub(C, P)) < 0) std::swap(P, Q);
        long beta = cross(sub(D, P), sub(C, P));
        long gamma = cross(sub(Q, P), sub(D, P));
        bool consistent = gamma == -1;
        for (int k = 0; k < 2 && consistent; ++k)
            consistent = (2 - beta) * P[k] + beta * Q[k] - C[k] == D[k];
        if (!consistent) throw std::logic_error("framing relation violated across a wall");
        long n = beta - 1;
        if (n >= 0) {
            e.tail = ci;
            e.head = cj;
            e.framing = static_cast<int>(n);
        } else {
            e.tail = cj;
            e.head = ci;
            e.framing = static_cast<int>(-n);
        }
        e.internal = true;
        es.push_back(e);
    }
    // rotation: walls of each cone ordered counterclockwise by apex-to-side direction
    for (std::size_t i = 0; i < tri.size(); ++i) {
        struct Side {
            Pt dir;
            int edge;
        };
        std::vector<Side> sides;
        for (int k = 0; k < 3; ++k) {
            int a = tri[i][k], b = tri[i][(k + 1) % 3], c = tri[i][(k + 2) % 3];
            Pt u = {gens[a][0] + gens[b][0] - 2 * gens[c][0],
                    gens[a][1] + gens[b][1] - 2 * gens[c][1]};
            sides.push_back({u, wall_edge.at({std::min(a, b), std::max(a, b)})});
        }
        std::sort(sides.begin(), sides.end(),
                  [](const Side& s, const Side& t) { return angle_less(s.dir, t.dir); });
        for (const auto& s : sides) vs[i].rotation.push_back(s.edge);
    }
    return GTGraph(std::move(vs), std::move(es));
}

// ---- presets ----

GTGraph preset_conifold(int n) {
    std::vector<GTVertex> vs = {{0, {0, 1, 2}}, {1, {0, 3, 4}}, {2, {}}, {3, {}}, {4, {}}, {5, {}}};
    std::vector<GTEdge> es = {
        {0, 0, 1, n, true}, {1, 0, 2, 0, false}, {2, 0, 3, 0, false},
        {3, 1, 4, 0, false}, {4, 1, 5, 0, false},
    };
    return GTGraph(std::move(vs), std::move(es));
}

GTGraph preset_cycle(const std::vector<int>& gammas) {
    int r = static_cast<int>(gammas.size());
    if (r < 2) throw std::invalid_argument("cycle preset needs at least 2 framing parameters");
    std::vector<GTVertex> vs;
    std::vector<GTEdge> es;
    for (int i = 0; i < r; ++i) {
        GTVertex v;
        v.id = i;
        v.rotation = {i, r + i, (i + 1) % r};
        vs.push_back(std::move(v));
    }
    for (int i = 0; i < r; ++i) vs.push_back({r + i, {}});
    for (int i = 0; i < r; ++i) es.push_back({i, (i + r - 1) % r, i, gammas[i] + 1, true});
    for (int i = 0; i < r; ++i) es.push_back({r + i, i, r + i, 0, false});
    return GTGraph(std::move(vs), std::move(es));
}

GTGraph preset_flop_f1(const std::array<int, 4>& b) {
    std::vector<GTVertex> vs = {{0, {0, 3, 1}}, {1, {1, 4, 2}}, {2, {2, 5, 0}}, {3, {6, 7, 3}},
                                {4, {}},        {5, {}},        {6, {}},        {7, {}}};
    std::vector<GTEdge> es = {
        {0, 2, 0, b[0], true},  {1, 0, 1, b[1], true},  {2, 1, 2, b[2], true},
        {3, 0, 3, b[3], true},  {4, 1, 4, 0, false},    {5, 2, 5, 0, false},
        {6, 3, 6, 0, false},    {7, 3, 7, 0, false},
    };
    return GTGraph(std::move(vs), std::move(es));
}

GTGraph preset_local_p2() { return preset_cycle({1, 1, 1}); }

std::vector<std::array<std::string, 3>> preset_catalog() {
    return {
        {"conifold", "conifold:n", "two trivalent vertices joined by one edge of framing n"},
        {"cycle", "cycle:g1,g2,...", "r>=2 vertices in a cycle, edge framings g_i+1, one leg each"},
        {"localP2", "localP2", "the 3-cycle with all cycle parameters 1"},
        {"flopF1", "flopF1:b1,b2,b3,b4", "triangle with a spur, edge framings b1..b4"},
    };
}

GTGraph preset_by_name(const std::string& spec) {
    std::string name = spec;
    std::vector<int> params;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        std::stringstream ss(rest);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                params.push_back(v);
            } catch (const std::exception&) {
                throw std::invalid_argument("preset parameter '" + tok + "' is not an integer");
            }
        }
    }
    if (name == "conifold") {
        if (params.size() != 1) throw std::invalid_argument("conifold takes exactly 1 parameter, e.g. conifold:0");
        return preset_conifold(params[0]);
    }
    if (name == "cycle") {
        if (params.size() < 2) throw std::invalid_argument("cycle takes at least 2 parameters, e.g. cycle:1,1,1");
        return preset_cycle(params);
    }
    if (name == "localP2") {
        if (!params.empty()) throw std::invalid_argument("localP2 takes no parameters");
        return preset_local_p2();
    }
    if (name == "flopF1") {
        if (params.size() != 4) throw std::invalid_argument("flopF1 takes exactly 4 parameters, e.g. flopF1:2,2,2,0");
        return preset_flop_f1({params[0], params[1], params[2], params[3]});
    }
    throw std::invalid_argument("unknown preset '" + name + "'");
}

} // namespace vf
