#include "fcy/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "fcy/errors.hpp"

namespace fcy {

namespace {

std::vector<std::pair<int, int>> dynkin_edges(DynkinType t, int n) {
    std::vector<std::pair<int, int>> e;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) e.push_back({i, i + 1});
    };
    switch (t) {
        case DynkinType::A:
            chain(n);
            break;
        case DynkinType::D:
            chain(n - 2);
            e.push_back({n - 3, n - 2});
            e.push_back({n - 3, n - 1});
            break;
        case DynkinType::E:
            chain(n - 1);
            e.push_back({n == 6 ? 2 : (n == 7 ? 3 : 4), n - 1});
            break;
    }
    return e;
}

bool has_oriented_cycle(const Quiver& q) {
    std::vector<int> indeg(q.vertices.size(), 0);
    for (const Arrow& a : q.arrows) indeg[(size_t)a.to]++;
    std::deque<int> ready;
    for (size_t v = 0; v < q.vertices.size(); ++v)
        if (indeg[v] == 0) ready.push_back((int)v);
    size_t seen = 0;
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop_front();
        ++seen;
        for (const Arrow& a : q.arrows)
            if (a.from == v && --indeg[(size_t)a.to] == 0) ready.push_back(a.to);
    }
    return seen != q.vertices.size();
}

std::string coord_label(const std::vector<int>& x) {
    std::string s = "(";
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x[i]);
    }
    return s + ")";
}

void compositions_desc(int total, int parts, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int first = total; first >= 0; --first) {
        cur.push_back(first);
        compositions_desc(total - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

void check_cut_consistency(const Quiver& q, const Potential& w, const Cut& c) {
    std::set<int> cutset;
    for (int a : c.arrows) {
        if (a < 0 || a >= (int)q.arrows.size())
            throw ParseError("cut refers to arrow index out of range");
        cutset.insert(a);
    }
    for (const PotentialTerm& term : w.cycles) {
        int hits = 0;
        for (int a : term.cycle.arrows) hits += cutset.count(a) ? 1 : 0;
        if (hits != 1) {
            std::string ids;
            for (int a : term.cycle.arrows) {
                if (!ids.empty()) ids += " ";
                ids += q.arrows[(size_t)a].id;
            }
            throw CutNotConsistent("cycle [" + ids + "] meets the cut in " +
                                   std::to_string(hits) + " arrows, expected exactly 1");
        }
    }
}

}  // namespace

std::pair<Quiver, DynkinData> dynkin(DynkinType t, int n) {
    if ((t == DynkinType::A && n < 1) || (t == DynkinType::D && n < 4) ||
        (t == DynkinType::E && (n < 6 || n > 8)))
        throw ParseError("unsupported Dynkin rank " + std::to_string(n));

    DynkinData data;
    data.type = t;
    data.n = n;
    data.rho.resize((size_t)n);
    for (int i = 0; i < n; ++i) data.rho[(size_t)i] = i;
    switch (t) {
        case DynkinType::A:
            data.h = n + 1;
            data.R = (long long)n * (n + 1) / 2;
            for (int i = 0; i < n; ++i) data.rho[(size_t)i] = n - 1 - i;
            break;
        case DynkinType::D:
            data.h = 2 * n - 2;
            data.R = (long long)n * (n - 1);
            if (n % 2 == 1) std::swap(data.rho[(size_t)n - 2], data.rho[(size_t)n - 1]);
            break;
        case DynkinType::E:
            data.h = (n == 6 ? 12 : n == 7 ? 18 : 30);
            data.R = (long long)n * data.h / 2;
            if (n == 6) {
                data.rho = {4, 3, 2, 1, 0, 5};
            }
            break;
    }

    Quiver q;
    q.grading_rank = 1;
    q.z_projection = {1};
    for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
    for (auto [u, v] : dynkin_edges(t, n))
        q.arrows.push_back({"a" + std::to_string(u + 1) + std::to_string(v + 1),
                            u, v, DegVec{0}});
    return {q, data};
}

Quiver double_quiver(const Quiver& q, bool path_length_grading) {
    Quiver d;
    d.vertices = q.vertices;
    d.grading_rank = 1;
    d.z_projection = {1};
    for (const Arrow& a : q.arrows)
        d.arrows.push_back({a.id, a.from, a.to, DegVec{path_length_grading ? 1 : 0}});
    for (const Arrow& a : q.arrows)
        d.arrows.push_back({a.id + "*", a.to, a.from, DegVec{1}});
    return d;
}

Presentation preprojective_presentation_unchecked(const Quiver& q,
                                                  bool path_length_grading) {
    Presentation p;
    p.quiver = double_quiver(q, path_length_grading);
    int n0 = (int)q.arrows.size();
    for (int v = 0; v < (int)q.vertices.size(); ++v) {
        Relation rel;
        for (int a = 0; a < n0; ++a) {
            if (q.arrows[(size_t)a].to == v)
                rel.push_back({Rat(1), Path{v, {n0 + a, a}}});
            if (q.arrows[(size_t)a].from == v)
                rel.push_back({Rat(-1), Path{v, {a, n0 + a}}});
        }
        if (!rel.empty()) p.relations.push_back(std::move(rel));
    }
    p.validate();
    return p;
}

Presentation classical_preprojective(const Quiver& q, bool path_length_grading) {
    if (has_oriented_cycle(q))
        throw ParseError("preprojective construction requires an acyclic quiver");
    return preprojective_presentation_unchecked(q, path_length_grading);
}

Presentation higher_typeA(int d, int s) {
    if (d < 1 || s < 1)
        throw ParseError("higher type A requires d >= 1 and s >= 1");
    int dp1 = d + 1;

    std::vector<std::vector<int>> verts;
    std::vector<int> cur;
    compositions_desc(s - 1, dp1, cur, verts);
    std::map<std::vector<int>, int> vnum;
    for (size_t i = 0; i < verts.size(); ++i) vnum[verts[i]] = (int)i;

    auto step = [&](std::vector<int> x, int i) {  // x + f_i, or empty if invalid
        if (x[(size_t)i] < 1) return std::vector<int>{};
        x[(size_t)i]--;
        x[(size_t)((i + 1) % dp1)]++;
        return x;
    };

    Presentation p;
    p.quiver.grading_rank = dp1;
    p.quiver.z_projection.assign((size_t)dp1, 0);
    p.quiver.z_projection.back() = 1;
    for (const auto& x : verts) p.quiver.vertices.push_back(coord_label(x));

    std::map<std::pair<int, int>, int> arrow_at;  // (vertex, i) -> arrow index
    for (size_t vx = 0; vx < verts.size(); ++vx) {
        for (int i = 0; i < dp1; ++i) {
            auto y = step(verts[vx], i);
            if (y.empty()) continue;
            DegVec deg((size_t)dp1, 0);
            deg[(size_t)i] = 1;
            arrow_at[{(int)vx, i}] = (int)p.quiver.arrows.size();
            p.quiver.arrows.push_back({"a" + std::to_string(i + 1) + "@" +
                                           coord_label(verts[vx]),
                                       (int)vx, vnum[y], deg});
        }
    }

    for (size_t vx = 0; vx < verts.size(); ++vx) {
        const auto& x = verts[vx];
        for (int i = 0; i < dp1; ++i) {
            auto xi = step(x, i);
            if (xi.empty()) continue;
            int vi = vnum[xi];
            // commutators, once per unordered pair
            for (int j = i + 1; j < dp1; ++j) {
                auto xj = step(x, j);
                auto xij = step(xi, j);
                if (xj.empty() || xij.empty()) continue;
                int vj = vnum[xj];
                Relation rel;
                rel.push_back({Rat(1), Path{(int)vx, {arrow_at.at({(int)vx, i}),
                                                      arrow_at.at({vi, j})}}});
                rel.push_back({Rat(-1), Path{(int)vx, {arrow_at.at({(int)vx, j}),
                                                       arrow_at.at({vj, i})}}});
                p.relations.push_back(std::move(rel));
            }
            // single composites around a missing corner
            for (int j = 0; j < dp1; ++j) {
                if (j == i || !step(x, j).empty()) continue;
                auto xij = step(xi, j);
                if (xij.empty()) continue;
                p.relations.push_back({{Rat(1), Path{(int)vx, {arrow_at.at({(int)vx, i}),
                                                               arrow_at.at({vi, j})}}}});
            }
        }
    }
    p.validate();
    return p;
}

Relation cyclic_derivative(const Quiver& q, const Potential& w, int arrow) {
    if (arrow < 0 || arrow >= (int)q.arrows.size())
        throw ParseError("cyclic derivative by arrow index out of range");
    std::map<std::vector<int>, Rat> acc;
    for (const PotentialTerm& term : w.cycles) {
        const std::vector<int>& c = term.cycle.arrows;
        for (size_t p = 0; p < c.size(); ++p) {
            if (c[p] != arrow) continue;
            std::vector<int> rest(c.begin() + (long)p + 1, c.end());
            rest.insert(rest.end(), c.begin(), c.begin() + (long)p);
            acc[rest] += term.coeff;
        }
    }
    Relation rel;
    int start = q.arrows[(size_t)arrow].to;
    for (auto& [arrows, coeff] : acc) {
        if (coeff == 0) continue;
        rel.push_back({coeff, Path{start, arrows}});
    }
    return rel;
}

Presentation jacobi_presentation(const Quiver& q, const Potential& w, const Cut& c) {
    check_cut_consistency(q, w, c);
    std::set<int> cutset(c.arrows.begin(), c.arrows.end());

    Presentation p;
    p.quiver = q;
    p.quiver.grading_rank = 1;
    p.quiver.z_projection = {1};
    for (size_t a = 0; a < p.quiver.arrows.size(); ++a)
        p.quiver.arrows[a].degree = DegVec{cutset.count((int)a) ? 1 : 0};

    Potential wv = make_potential(p.quiver, w.cycles);  // revalidates cycles
    for (int a = 0; a < (int)p.quiver.arrows.size(); ++a) {
        Relation rel = cyclic_derivative(p.quiver, wv, a);
        if (!rel.empty()) p.relations.push_back(std::move(rel));
    }
    p.validate();
    return p;
}

Presentation cut_subalgebra(const Quiver& q, const Potential& w, const Cut& c) {
    check_cut_consistency(q, w, c);
    std::set<int> cutset(c.arrows.begin(), c.arrows.end());

    Presentation p;
    p.quiver.vertices = q.vertices;
    p.quiver.grading_rank = 1;
    p.quiver.z_projection = {1};
    std::vector<int> renum(q.arrows.size(), -1);
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        if (cutset.count((int)a)) continue;
        renum[a] = (int)p.quiver.arrows.size();
        Arrow copy = q.arrows[a];
        copy.degree = DegVec{0};
        p.quiver.arrows.push_back(copy);
    }
    for (int a : c.arrows) {
        Relation rel = cyclic_derivative(q, w, a);
        for (RelTerm& t : rel)
            for (int& idx : t.path.arrows) idx = renum[(size_t)idx];
        if (!rel.empty()) p.relations.push_back(std::move(rel));
    }
    p.validate();
    return p;
}

QPC cobweb_builtin() {
    QPC out;
    Quiver& q = out.quiver;
    q.grading_rank = 1;
    q.z_projection = {1};
    for (int i = 1; i <= 5; ++i) q.vertices.push_back("c" + std::to_string(i));
    for (int j = 1; j <= 10; ++j) q.vertices.push_back("d" + std::to_string(j));
    auto cv = [](int i) { return ((i - 1) % 5 + 5) % 5; };
    auto dv = [](int j) { return 5 + ((j - 1) % 10 + 10) % 10; };

    // cut: the pentagon arrow p1, all spokes u_i, and the rim arrows w_2..w_5
    auto deg = [](bool in_cut) { return DegVec{in_cut ? 1 : 0}; };
    for (int i = 1; i <= 5; ++i)  // p_i: c_i -> c_{i+1}
        q.arrows.push_back({"p" + std::to_string(i), cv(i), cv(i + 1), deg(i == 1)});
    for (int i = 1; i <= 5; ++i)  // s_i: c_i -> d_{2i-1}
        q.arrows.push_back({"s" + std::to_string(i), cv(i), dv(2 * i - 1), deg(false)});
    for (int i = 1; i <= 5; ++i)  // r_i: d_{2i} -> c_i
        q.arrows.push_back({"r" + std::to_string(i), dv(2 * i), cv(i), deg(false)});
    for (int i = 1; i <= 5; ++i)  // u_i: d_{2i-1} -> d_{2i}
        q.arrows.push_back({"u" + std::to_string(i), dv(2 * i - 1), dv(2 * i), deg(true)});
    for (int i = 1; i <= 5; ++i)  // w_i: d_{2i+1} -> d_{2i}
        q.arrows.push_back({"w" + std::to_string(i), dv(2 * i + 1), dv(2 * i), deg(i != 1)});

    auto pa = [&](int i) { return ((i - 1) % 5); };
    auto sa = [&](int i) { return 5 + ((i - 1) % 5); };
    auto ra = [&](int i) { return 10 + ((i - 1) % 5); };
    auto ua = [&](int i) { return 15 + ((i - 1) % 5); };
    auto wa = [&](int i) { return 20 + ((i - 1) % 5); };

    std::vector<PotentialTerm> terms;
    terms.push_back({Rat(1), Path{cv(1), {pa(1), pa(2), pa(3), pa(4), pa(5)}}});
    for (int i = 1; i <= 5; ++i)
        terms.push_back({Rat(1), Path{cv(i), {sa(i), ua(i), ra(i)}}});
    for (int i = 1; i <= 5; ++i)
        terms.push_back({Rat(-1), Path{cv(i), {pa(i), sa(i + 1), wa(i), ra(i)}}});
    out.potential = make_potential(q, terms);

    out.cut.arrows = {pa(1), ua(1), ua(2), ua(3), ua(4), ua(5), wa(2), wa(3), wa(4), wa(5)};
    std::sort(out.cut.arrows.begin(), out.cut.arrows.end());
    return out;
}

Presentation twocycle_builtin() {
    Presentation p;
    p.quiver.vertices = {"1", "2"};
    p.quiver.grading_rank = 1;
    p.quiver.z_projection = {1};
    p.quiver.arrows = {{"a", 0, 1, {0}}, {"b", 1, 0, {1}}};
    p.relations.push_back({{Rat(1), Path{0, {0, 1}}}});
    p.relations.push_back({{Rat(1), Path{1, {1, 0}}}});
    p.validate();
    return p;
}

BbkReference bbk_nakayama_reference(const Quiver& doubled, const DynkinData& data) {
    if ((int)doubled.vertices.size() != data.n)
        throw ParseError("doubled quiver does not match the Dynkin data");
    BbkReference out;
    out.vertex_map = data.rho;
    for (const Arrow& a : doubled.arrows) {
        int u = data.rho[(size_t)a.from];
        int v = data.rho[(size_t)a.to];
        int image = -1;
        for (size_t b = 0; b < doubled.arrows.size(); ++b)
            if (doubled.arrows[b].from == u && doubled.arrows[b].to == v) {
                if (image >= 0)
                    throw ParseError("doubled quiver has parallel arrows; "
                                     "reference map is ambiguous");
                image = (int)b;
            }
        if (image < 0) throw ParseError("diagram map does not preserve the quiver");
        Rat coeff(1);
        if (doubled.project(a.degree) != 0 &&
            doubled.project(doubled.arrows[(size_t)image].degree) != 0)
            coeff = Rat(-1);
        out.arrow_images.push_back({image, coeff});
    }
    return out;
}

}  // namespace fcy
