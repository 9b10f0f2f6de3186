#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fcy/quiver.hpp"

namespace fcy {

// ---- Dynkin diagrams -------------------------------------------------------

enum class DynkinType { A, D, E };

struct DynkinData {
    DynkinType type;
    int n = 0;             // rank
    long long h = 0;       // Coxeter number
    long long R = 0;       // number of positive roots  (h = 2R/n)
    std::vector<int> rho;  // diagram automorphism, vertex index -> vertex index
};

// The Dynkin diagram of the given type, edges oriented toward the higher
// label.  Vertices are labeled "1".."n"; for D the fork tips are n-1, n on
// n-2; for E the branch vertex is n attached to the trivalent node.
// ParseError for ranks outside A>=1, D>=4, E in {6,7,8}.
std::pair<Quiver, DynkinData> dynkin(DynkinType t, int n);

// ---- Doubling and preprojective relations ----------------------------------

// Adds a reversed arrow id* for every arrow id.  Grading has rank 1: original
// arrows sit in degree 0 and reversed ones in degree 1.  With
// `path_length_grading` every arrow sits in degree 1 instead.
Quiver double_quiver(const Quiver& q, bool path_length_grading = false);

// Relations sum_{a: target(a)=v} a a*  -  sum_{a: source(a)=v} a* a on the
// doubled quiver, one per vertex (vertices with no incident arrow contribute
// nothing).  The checked builder rejects quivers with an oriented cycle,
// where the quotient cannot be finite dimensional.
Presentation classical_preprojective(const Quiver& q, bool path_length_grading = false);
Presentation preprojective_presentation_unchecked(const Quiver& q,
                                                  bool path_length_grading = false);

// ---- Higher type A ----------------------------------------------------------

// Vertices: x in Z_{>=0}^{d+1} with sum x_i = s-1, in lexicographically
// decreasing order, labeled "(x_1,...,x_{d+1})".  Arrows a_{i,x}: x -> x+f_i
// with f_i = e_{i+1} - e_i (indices cyclic), graded by e_i in Z^{d+1}; the
// Z-projection takes the last coordinate.  Relations: for each vertex the
// commutators a_{j,x+f_i} a_{i,x} - a_{i,x+f_j} a_{j,x} whenever all four
// corners exist, and the single composite when the corner x+f_j is missing
// but x+f_i+f_j exists.
Presentation higher_typeA(int d, int s);

// ---- Potentials, Jacobi algebras, cuts --------------------------------------

// d/da of a potential: every occurrence of `arrow` in a cycle contributes the
// rotation of the cycle that starts just after it.  Terms merge; the result
// can be empty if the arrow never occurs.
Relation cyclic_derivative(const Quiver& q, const Potential& w, int arrow);

// Quotient presentation by all cyclic derivatives, graded by the cut: arrows
// in `c` get degree 1, others degree 0.  CutNotConsistent unless every cycle
// of `w` contains exactly one cut arrow.
Presentation jacobi_presentation(const Quiver& q, const Potential& w, const Cut& c);

// Degree-0 part of the Jacobi algebra: quiver spanned by the arrows outside
// the cut, with the derivatives by cut arrows as relations.
Presentation cut_subalgebra(const Quiver& q, const Potential& w, const Cut& c);

// ---- Built-in examples -------------------------------------------------------

struct QPC {
    Quiver quiver;
    Potential potential;
    Cut cut;
};

// The cobweb quiver on 5 hub and 10 rim vertices (25 arrows), its potential
// (one pentagon and five triangles clockwise, five squares anticlockwise)
// and a consistent 10-arrow cut.
QPC cobweb_builtin();

// Two vertices joined by a degree-0 and a degree-1 arrow, radical square zero.
Presentation twocycle_builtin();

// ---- Reference Nakayama map on doubled Dynkin quivers ------------------------

struct BbkReference {
    std::vector<int> vertex_map;                     // = rho
    std::vector<std::pair<int, Rat>> arrow_images;   // arrow -> (arrow, coeff)
};

// The graded map induced by the diagram automorphism: originals map by rho
// with coefficient +1, reversed arrows pick up the sign (-1)^{degree of the
// image arrow}.
BbkReference bbk_nakayama_reference(const Quiver& doubled, const DynkinData& data);

}  // namespace fcy
