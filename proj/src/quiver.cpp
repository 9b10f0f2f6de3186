#include "fcy/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fcy {

using nlohmann::json;

DegVec deg_add(const DegVec& a, const DegVec& b) {
    if (a.size() != b.size()) throw InvariantViolation("degree rank mismatch in deg_add");
    DegVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

DegVec deg_sub(const DegVec& a, const DegVec& b) {
    if (a.size() != b.size()) throw InvariantViolation("degree rank mismatch in deg_sub");
    DegVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

int Quiver::vertex_index(const std::string& label) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label) return static_cast<int>(i);
    throw ParseError("unknown vertex '" + label + "'");
}

int Quiver::arrow_index(const std::string& id) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id == id) return static_cast<int>(i);
    throw ParseError("unknown arrow '" + id + "'");
}

long long Quiver::project(const DegVec& d) const {
    if (static_cast<int>(d.size()) != grading_rank)
        throw InvariantViolation("degree rank mismatch in projection");
    long long s = 0;
    for (int i = 0; i < grading_rank; ++i) s += z_projection[i] * d[i];
    return s;
}

std::vector<int> Quiver::canonical_arrow_ranks() const {
    std::vector<int> order(arrows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return arrows[a].id < arrows[b].id; });
    std::vector<int> rank(arrows.size());
    for (size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = static_cast<int>(pos);
    return rank;
}

bool is_connected(const Quiver& q) {
    if (q.vertices.empty()) return true;
    std::vector<std::vector<int>> adj(q.vertices.size());
    for (const Arrow& a : q.arrows) {
        adj[a.from].push_back(a.to);
        adj[a.to].push_back(a.from);
    }
    std::vector<char> seen(q.vertices.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

int path_source(const Quiver& q, const Path& p) {
    if (p.empty()) return p.vertex;
    return q.arrows[p.arrows.front()].from;
}

int path_target(const Quiver& q, const Path& p) {
    if (p.empty()) return p.vertex;
    return q.arrows[p.arrows.back()].to;
}

DegVec path_degree(const Quiver& q, const Path& p) {
    DegVec d(q.grading_rank, 0);
    for (int a : p.arrows) d = deg_add(d, q.arrows[a].degree);
    return d;
}

void validate_path(const Quiver& q, const Path& p, const std::string& where) {
    if (p.empty()) {
        if (p.vertex < 0 || p.vertex >= static_cast<int>(q.vertices.size()))
            throw ParseError(where + ": empty path has no valid vertex");
        return;
    }
    for (int a : p.arrows)
        if (a < 0 || a >= static_cast<int>(q.arrows.size()))
            throw ParseError(where + ": arrow index out of range");
    for (size_t i = 0; i + 1 < p.arrows.size(); ++i)
        if (q.arrows[p.arrows[i]].to != q.arrows[p.arrows[i + 1]].from)
            throw ParseError(where + ": path is not composable between '" +
                             q.arrows[p.arrows[i]].id + "' and '" +
                             q.arrows[p.arrows[i + 1]].id + "'");
}

std::optional<Path> compose_paths(const Quiver& q, const Path& p, const Path& r) {
    if (path_target(q, r) != path_source(q, p)) return std::nullopt;
    Path out;
    out.vertex = path_source(q, r);
    out.arrows = r.arrows;  // first applied
    out.arrows.insert(out.arrows.end(), p.arrows.begin(), p.arrows.end());
    return out;
}

void Presentation::validate() {
    std::set<std::string> vseen;
    if (quiver.vertices.empty()) throw ParseError("vertices: must be nonempty");
    for (const auto& v : quiver.vertices)
        if (!vseen.insert(v).second) throw ParseError("vertices: duplicate label '" + v + "'");
    if (quiver.grading_rank < 1) throw ParseError("grading_rank: must be >= 1");
    std::set<std::string> aseen;
    for (const Arrow& a : quiver.arrows) {
        if (!aseen.insert(a.id).second) throw ParseError("arrows: duplicate identifier '" + a.id + "'");
        if (a.from < 0 || a.from >= static_cast<int>(quiver.vertices.size()) || a.to < 0 ||
            a.to >= static_cast<int>(quiver.vertices.size()))
            throw ParseError("arrows: endpoint out of range for '" + a.id + "'");
        if (static_cast<int>(a.degree.size()) != quiver.grading_rank)
            throw ParseError("arrows: degree vector of '" + a.id + "' has length " +
                             std::to_string(a.degree.size()) + ", expected grading_rank " +
                             std::to_string(quiver.grading_rank));
    }
    if (quiver.z_projection.empty()) {
        quiver.z_projection.assign(quiver.grading_rank, 0);
        if (quiver.grading_rank == 1)
            quiver.z_projection[0] = 1;
        else
            quiver.z_projection.back() = 1;
    }
    if (static_cast<int>(quiver.z_projection.size()) != quiver.grading_rank)
        throw ParseError("z_projection: length must equal grading_rank");

    homogeneous = true;
    for (size_t ri = 0; ri < relations.size(); ++ri) {
        const std::string where = "relations[" + std::to_string(ri) + "]";
        Relation& rel = relations[ri];
        if (rel.empty()) throw ParseError(where + ": empty relation");
        for (RelTerm& t : rel) validate_path(quiver, t.path, where);
        int src = path_source(quiver, rel[0].path);
        int tgt = path_target(quiver, rel[0].path);
        DegVec deg0 = path_degree(quiver, rel[0].path);
        for (const RelTerm& t : rel) {
            if (path_source(quiver, t.path) != src || path_target(quiver, t.path) != tgt)
                throw ParseError(where + ": terms are not parallel");
            if (path_degree(quiver, t.path) != deg0) homogeneous = false;
        }
    }
}

Path canonical_rotation(const Quiver& q, const Path& cycle) {
    std::vector<int> rank = q.canonical_arrow_ranks();
    auto key = [&](const std::vector<int>& arr) {
        std::vector<int> k(arr.size());
        for (size_t i = 0; i < arr.size(); ++i) k[i] = rank[arr[i]];
        return k;
    };
    Path best = cycle;
    std::vector<int> best_key = key(cycle.arrows);
    for (size_t r = 1; r < cycle.arrows.size(); ++r) {
        std::vector<int> rot(cycle.arrows.begin() + static_cast<long>(r), cycle.arrows.end());
        rot.insert(rot.end(), cycle.arrows.begin(), cycle.arrows.begin() + static_cast<long>(r));
        std::vector<int> k = key(rot);
        if (k < best_key) {
            best_key = std::move(k);
            best.arrows = rot;
            best.vertex = q.arrows[rot.front()].from;
        }
    }
    return best;
}

Potential make_potential(const Quiver& q, std::vector<PotentialTerm> terms) {
    std::map<std::vector<int>, Rat> merged;
    std::map<std::vector<int>, Path> reps;
    for (PotentialTerm& t : terms) {
        validate_path(q, t.cycle, "potential cycle");
        if (t.cycle.length() < 2)
            throw ParseError("potential cycle: length must be at least 2");
        if (path_source(q, t.cycle) != path_target(q, t.cycle))
            throw ParseError("potential cycle: path is not a cycle");
        Path canon = canonical_rotation(q, t.cycle);
        merged[canon.arrows] += t.coeff;
        reps.emplace(canon.arrows, canon);
    }
    Potential w;
    // map iteration gives arrow-index-lex order; re-sort by (length, canonical rank)
    std::vector<PotentialTerm> out;
    for (auto& [arrs, coeff] : merged)
        if (coeff != 0) out.push_back(PotentialTerm{coeff, reps.at(arrs)});
    std::vector<int> rank = q.canonical_arrow_ranks();
    auto key = [&](const Path& p) {
        std::vector<int> k{static_cast<int>(p.length())};
        for (int a : p.arrows) k.push_back(rank[a]);
        return k;
    };
    std::sort(out.begin(), out.end(),
              [&](const PotentialTerm& a, const PotentialTerm& b) { return key(a.cycle) < key(b.cycle); });
    w.cycles = std::move(out);
    return w;
}

// ---- JSON ------------------------------------------------------------------

namespace {

json parse_json_or_throw(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(what + " parse: " + e.what());
    }
}

const json& need(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

Rat coeff_from_json(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
        if (j.is_string()) return rat_from_string(j.get<std::string>());
    } catch (const ParseError&) {
        // fall through to the uniform message
    }
    throw ParseError(where + ": coeff must be an integer or a \"p/q\" string");
}

Path path_from_json(const Quiver& q, const json& term, const std::string& where) {
    Path p;
    if (term.contains("vertex")) {
        if (term.contains("path")) throw ParseError(where + ": term has both 'path' and 'vertex'");
        if (!term["vertex"].is_string()) throw ParseError(where + ": vertex must be a string label");
        p.vertex = q.vertex_index(term["vertex"].get<std::string>());
        return p;
    }
    const json& arr = need(term, "path", where);
    if (!arr.is_array() || arr.empty())
        throw ParseError(where + ": path must be a nonempty array of arrow ids (or use 'vertex')");
    for (const json& el : arr) {
        if (!el.is_string()) throw ParseError(where + ": path entries must be arrow id strings");
        try {
            p.arrows.push_back(q.arrow_index(el.get<std::string>()));
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    p.vertex = q.arrows[p.arrows.front()].from;
    validate_path(q, p, where);
    return p;
}

json path_to_json(const Quiver& q, const Path& p) {
    json t;
    if (p.empty()) {
        t["vertex"] = q.vertices[p.vertex];
    } else {
        json arr = json::array();
        for (int a : p.arrows) arr.push_back(q.arrows[a].id);
        t["path"] = arr;
    }
    return t;
}

}  // namespace

Presentation parse_presentation(const std::string& json_text) {
    json j = parse_json_or_throw(json_text, "presentation");
    Presentation p;

    const json& verts = need(j, "vertices", "presentation");
    if (!verts.is_array()) throw ParseError("vertices: expected an array");
    for (const json& v : verts) {
        if (!v.is_string()) throw ParseError("vertices: labels must be strings");
        p.quiver.vertices.push_back(v.get<std::string>());
    }

    p.quiver.grading_rank = 1;
    if (j.contains("grading_rank")) {
        if (!j["grading_rank"].is_number_integer()) throw ParseError("grading_rank: expected integer");
        p.quiver.grading_rank = j["grading_rank"].get<int>();
    }

    const json& arrows = need(j, "arrows", "presentation");
    if (!arrows.is_array()) throw ParseError("arrows: expected an array");
    for (size_t i = 0; i < arrows.size(); ++i) {
        const std::string where = "arrows[" + std::to_string(i) + "]";
        const json& a = arrows[i];
        Arrow arrow;
        const json& id = need(a, "id", where);
        if (!id.is_string()) throw ParseError(where + ": id must be a string");
        arrow.id = id.get<std::string>();
        try {
            arrow.from = p.quiver.vertex_index(need(a, "from", where).get<std::string>());
            arrow.to = p.quiver.vertex_index(need(a, "to", where).get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
        const json& deg = need(a, "degree", where);
        if (!deg.is_array()) throw ParseError(where + ": degree must be an array of integers");
        for (const json& d : deg) {
            if (!d.is_number_integer()) throw ParseError(where + ": degree must be an array of integers");
            arrow.degree.push_back(d.get<long long>());
        }
        p.quiver.arrows.push_back(std::move(arrow));
    }

    if (j.contains("z_projection")) {
        const json& zp = j["z_projection"];
        if (!zp.is_array()) throw ParseError("z_projection: expected an array of integers");
        for (const json& d : zp) {
            if (!d.is_number_integer()) throw ParseError("z_projection: expected an array of integers");
            p.quiver.z_projection.push_back(d.get<long long>());
        }
        if (static_cast<int>(p.quiver.z_projection.size()) != p.quiver.grading_rank)
            throw ParseError("z_projection: length must equal grading_rank");
    }

    if (j.contains("relations")) {
        const json& rels = j["relations"];
        if (!rels.is_array()) throw ParseError("relations: expected an array");
        for (size_t ri = 0; ri < rels.size(); ++ri) {
            const std::string where = "relations[" + std::to_string(ri) + "]";
            const json& rel = rels[ri];
            if (!rel.is_array() || rel.empty())
                throw ParseError(where + ": expected a nonempty array of terms");
            Relation r;
            for (const json& term : rel) {
                RelTerm t;
                t.coeff = coeff_from_json(need(term, "coeff", where), where);
                t.path = path_from_json(p.quiver, term, where);
                r.push_back(std::move(t));
            }
            p.relations.push_back(std::move(r));
        }
    }

    p.validate();
    return p;
}

std::string presentation_to_json(const Presentation& p) {
    json j;
    j["vertices"] = p.quiver.vertices;
    json arrows = json::array();
    for (const Arrow& a : p.quiver.arrows) {
        json aj;
        aj["id"] = a.id;
        aj["from"] = p.quiver.vertices[a.from];
        aj["to"] = p.quiver.vertices[a.to];
        aj["degree"] = a.degree;
        arrows.push_back(aj);
    }
    j["arrows"] = arrows;
    j["grading_rank"] = p.quiver.grading_rank;
    j["z_projection"] = p.quiver.z_projection;
    json rels = json::array();
    for (const Relation& r : p.relations) {
        json rel = json::array();
        for (const RelTerm& t : r) {
            json term = path_to_json(p.quiver, t.path);
            term["coeff"] = rat_to_string(t.coeff);
            rel.push_back(term);
        }
        rels.push_back(rel);
    }
    j["relations"] = rels;
    return j.dump(2);
}

Potential parse_potential(const Quiver& q, const std::string& json_text) {
    json j = parse_json_or_throw(json_text, "potential");
    const json& cycles = need(j, "cycles", "potential");
    if (!cycles.is_array()) throw ParseError("potential: cycles must be an array");
    std::vector<PotentialTerm> terms;
    for (size_t i = 0; i < cycles.size(); ++i) {
        const std::string where = "cycles[" + std::to_string(i) + "]";
        const json& c = cycles[i];
        PotentialTerm t;
        t.coeff = coeff_from_json(need(c, "coeff", where), where);
        t.cycle = path_from_json(q, c, where);
        terms.push_back(std::move(t));
    }
    return make_potential(q, std::move(terms));
}

std::string potential_to_json(const Quiver& q, const Potential& w) {
    json j;
    json cycles = json::array();
    for (const PotentialTerm& t : w.cycles) {
        json c = path_to_json(q, t.cycle);
        c["coeff"] = rat_to_string(t.coeff);
        cycles.push_back(c);
    }
    j["cycles"] = cycles;
    return j.dump(2);
}

Cut parse_cut(const Quiver& q, const std::string& json_text) {
    json j = parse_json_or_throw(json_text, "cut");
    const json& arr = need(j, "cut", "cut");
    if (!arr.is_array()) throw ParseError("cut: expected an array of arrow ids");
    std::set<int> idx;
    for (const json& el : arr) {
        if (!el.is_string()) throw ParseError("cut: entries must be arrow id strings");
        idx.insert(q.arrow_index(el.get<std::string>()));
    }
    Cut c;
    c.arrows.assign(idx.begin(), idx.end());
    return c;
}

std::string cut_to_json(const Quiver& q, const Cut& c) {
    json j;
    json arr = json::array();
    for (int a : c.arrows) arr.push_back(q.arrows[a].id);
    j["cut"] = arr;
    return j.dump(2);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file '" + path + "'");
    out << text;
}

}  // namespace fcy
