#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcy/errors.hpp"
#include "fcy/field.hpp"

namespace fcy {

// Degree vectors live in Z^rank.
using DegVec = std::vector<long long>;

DegVec deg_add(const DegVec& a, const DegVec& b);
DegVec deg_sub(const DegVec& a, const DegVec& b);

struct Arrow {
    std::string id;
    int from = -1;  // vertex index (source)
    int to = -1;    // vertex index (target)
    DegVec degree;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    int grading_rank = 1;
    // Z-projection applied to degree vectors where a single integer is needed
    // (characters, suspension constants). Length == grading_rank.
    std::vector<long long> z_projection;

    int vertex_index(const std::string& label) const;  // ParseError if unknown
    int arrow_index(const std::string& id) const;      // ParseError if unknown
    long long project(const DegVec& d) const;
    // Rank of each arrow in the canonical (identifier-sorted) order; input order
    // of the arrow list never influences downstream bases.
    std::vector<int> canonical_arrow_ranks() const;
};

// Underlying-graph connectivity (arrow directions ignored).
bool is_connected(const Quiver& q);

// A path stored in traversal order: first-applied arrow first.  The product
// convention is composition-style, p·q = p∘q = "apply q, then p".  An empty
// path is the lazy path at `vertex`.
struct Path {
    int vertex = -1;             // source vertex (kept for empty paths too)
    std::vector<int> arrows;     // arrow indices, traversal order

    bool empty() const { return arrows.empty(); }
    size_t length() const { return arrows.size(); }
};

int path_source(const Quiver& q, const Path& p);
int path_target(const Quiver& q, const Path& p);
DegVec path_degree(const Quiver& q, const Path& p);
// Validates the arrow chain composability; ParseError on break.
void validate_path(const Quiver& q, const Path& p, const std::string& where);

// compose_paths(p, q) = p∘q: defined iff target(q) == source(p).
std::optional<Path> compose_paths(const Quiver& q, const Path& p, const Path& r);

struct RelTerm {
    Rat coeff;
    Path path;
};
// A relation is a finite sum of parallel terms (same source, same target).
using Relation = std::vector<RelTerm>;

struct Presentation {
    Quiver quiver;
    std::vector<Relation> relations;
    // True iff every relation is homogeneous w.r.t. the declared grading.
    bool homogeneous = true;

    void validate();  // checks invariants, recomputes `homogeneous`
};

// A potential: a sum of cycles, each canonicalized to its lexicographically
// least rotation (by canonical arrow rank), equal cycles merged.
struct PotentialTerm {
    Rat coeff;
    Path cycle;
};
struct Potential {
    std::vector<PotentialTerm> cycles;
};

struct Cut {
    std::vector<int> arrows;  // arrow indices, sorted, unique
};

Path canonical_rotation(const Quiver& q, const Path& cycle);
Potential make_potential(const Quiver& q, std::vector<PotentialTerm> terms);

// ---- JSON I/O ------------------------------------------------------------
// Schema: {"vertices":[..], "arrows":[{"id","from","to","degree":[..]},..],
//          "grading_rank":k, "z_projection":[..]?,
//          "relations":[[{"coeff":"p/q","path":[ids]} | {"coeff":"p/q","vertex":id}, ..], ..]}
Presentation parse_presentation(const std::string& json_text);
std::string presentation_to_json(const Presentation& p);

// {"cycles":[{"coeff":"p/q","path":[ids]},..]}
Potential parse_potential(const Quiver& q, const std::string& json_text);
std::string potential_to_json(const Quiver& q, const Potential& w);

// {"cut":[ids]}
Cut parse_cut(const Quiver& q, const std::string& json_text);
std::string cut_to_json(const Quiver& q, const Cut& c);

std::string read_text_file(const std::string& path);   // ParseError if unreadable
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fcy
