// Graded Frobenius structure of a finite-dimensional quiver algebra:
//
//   * socles of the indecomposable projectives, the induced permutation nu
//     (soc(A e_i) is the simple at nu(i)) and the socle degrees
//     ell(i) = deg soc(e_i A);
//   * a Frobenius functional lambda (dual to a socle generator in each
//     projective) and the graded Nakayama automorphism alpha, solved
//     blockwise from lambda(a x) = lambda(x alpha(a));
//   * character twists, inner-automorphism witnesses, and the scan for the
//     smallest k with (alpha, ell)^k = (id, constant N) strictly or up to
//     conjugation by a degree-0 unit.  Then (k, N) gives the fractional
//     dimension d*N / (k+N).
//
// alpha sends e_t A e_s into e_{nu^-1 t} A e_{nu^-1 s} and shifts degrees by
// ell(s) - ell(t); both facts are verified after solving, along with
// multiplicativity, so a silent convention slip cannot survive construction.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fcy/algebra.hpp"
#include "fcy/errors.hpp"
#include "fcy/matrix.hpp"
#include "fcy/report.hpp"

namespace fcy {

// ---- characters ------------------------------------------------------------

// A character is a homomorphism Z -> k^*, evaluated on Z-projected degrees.
struct Character {
    Rat base = 1;               // value at 1
    std::string canonical;      // "tr", "sgn", or the rational base

    static Character trivial() { return of_base(Rat(1)); }
    static Character sign() { return of_base(Rat(-1)); }
    static Character sign_power(long long d) { return d % 2 == 0 ? trivial() : sign(); }
    // Accepts "tr", "sgn", "sgn^d" (using the supplied d), "sgn^<int>", or a
    // nonzero rational.
    static Character parse(const std::string& text, long long d);
    static Character of_base(const Rat& b);

    Rat value(long long n) const;
};

// ---- socles ----------------------------------------------------------------

template <class F>
struct SocleAnalysis {
    bool selfinjective = false;
    std::string failure;          // diagnosis when not selfinjective
    std::vector<int> nu;          // soc(A e_i) is the simple at nu[i]
    std::vector<DegVec> ell;      // degree of soc(e_i A)
    std::vector<typename FiniteDimAlgebra<F>::Elem> left_gen;  // socle generators
    std::vector<int> left_socle_dim, right_socle_dim;
};

template <class F>
SocleAnalysis<F> socle_analysis(const FiniteDimAlgebra<F>& A);

// ---- Frobenius functional and Nakayama automorphism ------------------------

// lambda as a dense functional over the basis: dual to one socle generator
// word per projective.  seed 0 takes coefficient 1 everywhere; other seeds
// draw nonzero coefficients deterministically.  Throws NotFrobenius if the
// algebra is not selfinjective.
template <class F>
std::vector<F> frobenius_form(const FiniteDimAlgebra<F>& A,
                              const SocleAnalysis<F>& soc, std::uint64_t seed);

template <class F>
struct Nakayama {
    Matrix<F> map;                // alpha on the basis
    std::vector<int> vertex_map;  // nu^{-1}: alpha(e_i) = e_{vertex_map[i]}
    std::vector<DegVec> adjuster; // = ell
};

template <class F>
Nakayama<F> nakayama_automorphism(const FiniteDimAlgebra<F>& A,
                                  const SocleAnalysis<F>& soc,
                                  const std::vector<F>& lambda);

// Scales the column of every basis element b by chi(zdeg b).
template <class F>
Matrix<F> chi_twist(const FiniteDimAlgebra<F>& A, const Matrix<F>& phi,
                    const Character& chi);

// Decides whether the algebra automorphism phi is conjugation by a unit
// (a degree-0 unit when degree_zero_only), and returns one if so.  The
// decision is exact: the conjugation equations on generators are solved
// linearly, and a unit exists in the solution space iff no idempotent
// coordinate vanishes on all of it.
template <class F>
std::optional<std::vector<F>> inner_witness(const FiniteDimAlgebra<F>& A,
                                            const Matrix<F>& phi,
                                            bool degree_zero_only,
                                            std::uint64_t seed);

// ---- order scan -------------------------------------------------------------

struct OrderScan {
    int k = 0;
    long long N = 0;
    bool used_inner = false;
    std::optional<int> alpha_order_strict;
};

// Smallest k <= kmax with chi-twisted alpha^k the identity (strictly, or --
// when allow_inner -- up to conjugation by a degree-0 unit) and the degree
// adjuster constant; N is that constant's Z-projection.  After an inner hit
// at k the scan keeps looking for a strict identity power up to 2k.  Throws
// NoOrderFound if the scan is exhausted, NotConnected for disconnected input.
template <class F>
OrderScan da_order(const FiniteDimAlgebra<F>& A, const Nakayama<F>& alpha,
                   const Character& chi, int kmax, bool allow_inner,
                   std::uint64_t seed);

// ---- driver -----------------------------------------------------------------

struct AnalyzeOptions {
    Character chi = Character::sign();
    long long d = 1;
    int kmax = 64;
    int max_len = 64;
    std::uint64_t seed = 0;
    bool allow_inner = true;
};

// End-to-end: quotient, socles, functional, automorphism, order scan.
// NotFrobenius and an exhausted scan become report verdicts; structural
// problems (inhomogeneous relations, disconnected quiver, dimension bound)
// propagate as exceptions.
template <class F>
CYReport analyze_presentation(const Presentation& p, const AnalyzeOptions& opt);

// ---------------------------------------------------------------------------
// implementation
// ---------------------------------------------------------------------------

namespace detail {

template <class F>
F apply_functional(const std::vector<F>& lam,
                   const typename FiniteDimAlgebra<F>::SparseVec& v) {
    F out = FieldOps<F>::zero();
    for (const auto& [b, c] : v) out = out + lam[(size_t)b] * c;
    return out;
}

template <class F>
typename FiniteDimAlgebra<F>::Elem matrix_column(const Matrix<F>& m, int c) {
    typename FiniteDimAlgebra<F>::Elem e;
    for (int r = 0; r < m.rows(); ++r)
        if (!FieldOps<F>::is_zero(m.at(r, c))) e[r] = m.at(r, c);
    return e;
}

template <class F>
typename FiniteDimAlgebra<F>::Elem apply_matrix(
    const Matrix<F>& m, const typename FiniteDimAlgebra<F>::Elem& x) {
    typename FiniteDimAlgebra<F>::Elem out;
    for (const auto& [b, c] : x)
        FiniteDimAlgebra<F>::add_scaled(out, matrix_column<F>(m, b), c);
    return out;
}

inline bool is_identity_perm(const std::vector<int>& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != (int)i) return false;
    return true;
}

// One-sided socle of the projective at vertex v: the joint kernel of
// multiplication by every arrow (from the left or from the right).
template <class F>
std::vector<typename FiniteDimAlgebra<F>::Elem> projective_socle(
    const FiniteDimAlgebra<F>& A, int v, bool left) {
    using Elem = typename FiniteDimAlgebra<F>::Elem;
    std::vector<int> cols;
    for (int b = 0; b < A.dim(); ++b)
        if ((left ? A.source_of(b) : A.target_of(b)) == v) cols.push_back(b);

    int n_arrows = (int)A.quiver().arrows.size();
    Matrix<F> stacked(n_arrows * A.dim(), (int)cols.size());
    for (int g = 0; g < n_arrows; ++g) {
        int ga = A.arrow_basis_index(g);
        for (size_t j = 0; j < cols.size(); ++j) {
            const auto& prod = left ? A.product(ga, cols[j]) : A.product(cols[j], ga);
            for (const auto& [r, c] : prod) stacked.at(g * A.dim() + r, (int)j) = c;
        }
    }
    std::vector<Elem> out;
    for (const auto& vec : kernel(stacked)) {
        Elem e;
        for (size_t j = 0; j < cols.size(); ++j)
            if (!FieldOps<F>::is_zero(vec[j])) e[cols[j]] = vec[j];
        out.push_back(std::move(e));
    }
    return out;
}

// Common target vertex and degree of a socle generator; rejects generators
// mixing degrees (the grading would not descend to the socle).
template <class F>
std::pair<int, DegVec> socle_vertex_and_degree(const FiniteDimAlgebra<F>& A,
                                               const typename FiniteDimAlgebra<F>::Elem& g,
                                               bool left, const std::string& where) {
    int vertex = -1;
    DegVec deg;
    bool first = true;
    for (const auto& [b, c] : g) {
        (void)c;
        int w = left ? A.target_of(b) : A.source_of(b);
        if (first) {
            vertex = w;
            deg = A.degree_of(b);
            first = false;
            continue;
        }
        if (w != vertex)
            throw InvariantViolation("socle generator of " + where +
                                     " meets two different simples");
        if (A.degree_of(b) != deg)
            throw NonHomogeneousSocle("socle generator of " + where +
                                      " is not homogeneous");
    }
    return {vertex, deg};
}

}  // namespace detail

template <class F>
SocleAnalysis<F> socle_analysis(const FiniteDimAlgebra<F>& A) {
    SocleAnalysis<F> out;
    int nv = A.num_vertices();
    out.nu.assign((size_t)nv, -1);
    out.ell.assign((size_t)nv, DegVec());
    out.left_gen.resize((size_t)nv);
    out.left_socle_dim.resize((size_t)nv);
    out.right_socle_dim.resize((size_t)nv);

    std::vector<DegVec> left_deg((size_t)nv);
    std::vector<std::string> problems;
    const auto& labels = A.quiver().vertices;

    for (int v = 0; v < nv; ++v) {
        auto lsoc = detail::projective_socle(A, v, true);
        out.left_socle_dim[(size_t)v] = (int)lsoc.size();
        if (lsoc.size() == 1) {
            auto [w, deg] = detail::socle_vertex_and_degree(A, lsoc[0], true,
                                                            "A e_" + labels[(size_t)v]);
            out.nu[(size_t)v] = w;
            left_deg[(size_t)v] = deg;
            out.left_gen[(size_t)v] = lsoc[0];
        } else {
            problems.push_back("soc(A e_" + labels[(size_t)v] + ") has dimension " +
                               std::to_string(lsoc.size()));
        }
        auto rsoc = detail::projective_socle(A, v, false);
        out.right_socle_dim[(size_t)v] = (int)rsoc.size();
        if (rsoc.size() == 1) {
            auto [w, deg] = detail::socle_vertex_and_degree(A, rsoc[0], false,
                                                            "e_" + labels[(size_t)v] + " A");
            (void)w;
            out.ell[(size_t)v] = deg;
        } else {
            problems.push_back("soc(e_" + labels[(size_t)v] + " A) has dimension " +
                               std::to_string(rsoc.size()));
        }
    }

    if (problems.empty()) {
        std::vector<int> hit((size_t)nv, -1);
        for (int v = 0; v < nv && problems.empty(); ++v) {
            int w = out.nu[(size_t)v];
            if (hit[(size_t)w] >= 0)
                problems.push_back(
                    "socle correspondence is not bijective: soc(A e_" +
                    labels[(size_t)hit[(size_t)w]] + ") and soc(A e_" + labels[(size_t)v] +
                    ") are both the simple at " + labels[(size_t)w]);
            hit[(size_t)w] = v;
        }
    }

    if (!problems.empty()) {
        out.selfinjective = false;
        out.failure = problems.front();
        return out;
    }

    // Cross-check: deg soc(e_i A) = deg soc(A e_{nu^-1 i}); the two socles
    // are spanned by the same bimodule element.
    for (int v = 0; v < nv; ++v) {
        int w = out.nu[(size_t)v];
        if (out.ell[(size_t)w] != left_deg[(size_t)v])
            throw InvariantViolation("left/right socle degrees disagree at vertex " +
                                     labels[(size_t)w]);
    }
    out.selfinjective = true;
    return out;
}

template <class F>
std::vector<F> frobenius_form(const FiniteDimAlgebra<F>& A,
                              const SocleAnalysis<F>& soc, std::uint64_t seed) {
    if (!soc.selfinjective) throw NotFrobenius(soc.failure);
    std::vector<F> lam((size_t)A.dim(), FieldOps<F>::zero());
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (int v = 0; v < A.num_vertices(); ++v) {
        int word = soc.left_gen[(size_t)v].rbegin()->first;  // largest support word
        F coeff = FieldOps<F>::one();
        if (seed != 0) {
            do {
                coeff = FieldOps<F>::from_int((long long)(1 + rng() % 1000003));
            } while (FieldOps<F>::is_zero(coeff));
        }
        lam[(size_t)word] = coeff;
    }
    return lam;
}

template <class F>
Nakayama<F> nakayama_automorphism(const FiniteDimAlgebra<F>& A,
                                  const SocleAnalysis<F>& soc,
                                  const std::vector<F>& lambda) {
    using Elem = typename FiniteDimAlgebra<F>::Elem;
    if (!soc.selfinjective) throw NotFrobenius(soc.failure);
    int nv = A.num_vertices();
    int n = A.dim();

    std::vector<int> nuinv((size_t)nv, -1);
    for (int v = 0; v < nv; ++v) nuinv[(size_t)soc.nu[(size_t)v]] = v;

    std::map<std::pair<int, int>, std::vector<int>> block;
    for (int b = 0; b < n; ++b) block[{A.source_of(b), A.target_of(b)}].push_back(b);

    Matrix<F> alpha(n, n);
    for (const auto& [st, members] : block) {
        auto [s, t] = st;
        auto xs_it = block.find({nuinv[(size_t)t], s});
        auto us_it = block.find({nuinv[(size_t)s], nuinv[(size_t)t]});
        const std::vector<int> empty;
        const std::vector<int>& xs = xs_it == block.end() ? empty : xs_it->second;
        const std::vector<int>& us = us_it == block.end() ? empty : us_it->second;
        if (us.size() != members.size() || xs.size() != us.size())
            throw InternalNondegeneracyFailure(
                "pairing blocks have mismatched dimensions");

        Matrix<F> M((int)xs.size(), (int)us.size());
        for (size_t i = 0; i < xs.size(); ++i)
            for (size_t j = 0; j < us.size(); ++j)
                M.at((int)i, (int)j) =
                    detail::apply_functional<F>(lambda, A.product(xs[i], us[j]));
        auto Minv = invert(M);
        if (!Minv)
            throw InternalNondegeneracyFailure("degenerate pairing block");
        for (int a : members) {
            std::vector<F> rhs;
            rhs.reserve(xs.size());
            for (int x : xs)
                rhs.push_back(detail::apply_functional<F>(lambda, A.product(a, x)));
            std::vector<F> col = matvec(*Minv, rhs);
            for (size_t j = 0; j < us.size(); ++j) alpha.at(us[j], a) = col[j];
        }
    }

    // The solution must fix the idempotent structure ...
    for (int v = 0; v < nv; ++v) {
        Elem img = detail::matrix_column<F>(alpha, A.idempotent_index(v));
        if (img != Elem{{A.idempotent_index(nuinv[(size_t)v]), FieldOps<F>::one()}})
            throw VerificationFailure("automorphism is not unital at vertex " +
                                      A.quiver().vertices[(size_t)v]);
    }
    // ... obey the degree law deg a + ell(source) - ell(target) ...
    for (int b = 0; b < n; ++b) {
        DegVec want = deg_add(A.degree_of(b), soc.ell[(size_t)A.source_of(b)]);
        want = deg_sub(want, soc.ell[(size_t)A.target_of(b)]);
        for (const auto& [w, c] : detail::matrix_column<F>(alpha, b)) {
            (void)c;
            if (A.degree_of(w) != want)
                throw VerificationFailure("automorphism violates the degree law");
        }
    }
    // ... and be multiplicative (generators x basis spans all products).
    std::vector<int> gens;
    for (int v = 0; v < nv; ++v) gens.push_back(A.idempotent_index(v));
    for (int g = 0; g < (int)A.quiver().arrows.size(); ++g)
        gens.push_back(A.arrow_basis_index(g));
    for (int g : gens)
        for (int b = 0; b < n; ++b) {
            Elem lhs;
            for (const auto& [w, c] : A.product(g, b))
                FiniteDimAlgebra<F>::add_scaled(lhs, detail::matrix_column<F>(alpha, w), c);
            Elem rhs = A.mul(detail::matrix_column<F>(alpha, g),
                             detail::matrix_column<F>(alpha, b));
            if (lhs != rhs)
                throw VerificationFailure("automorphism is not multiplicative");
        }

    return {std::move(alpha), std::move(nuinv), soc.ell};
}

template <class F>
Matrix<F> chi_twist(const FiniteDimAlgebra<F>& A, const Matrix<F>& phi,
                    const Character& chi) {
    Matrix<F> out = phi;
    for (int c = 0; c < out.cols(); ++c) {
        F factor = FieldOps<F>::from_rational(chi.value(A.zdeg_of(c)));
        for (int r = 0; r < out.rows(); ++r) out.at(r, c) = out.at(r, c) * factor;
    }
    return out;
}

template <class F>
std::optional<std::vector<F>> inner_witness(const FiniteDimAlgebra<F>& A,
                                            const Matrix<F>& phi,
                                            bool degree_zero_only,
                                            std::uint64_t seed) {
    using Elem = typename FiniteDimAlgebra<F>::Elem;
    int n = A.dim();
    int nv = A.num_vertices();

    std::vector<int> unknowns;
    for (int b = 0; b < n; ++b) {
        bool zero = true;
        for (long long x : A.degree_of(b)) zero = zero && x == 0;
        if (!degree_zero_only || zero) unknowns.push_back(b);
    }
    std::vector<int> pos(n, -1);
    for (size_t j = 0; j < unknowns.size(); ++j) pos[(size_t)unknowns[j]] = (int)j;

    std::vector<int> gens;
    for (int v = 0; v < nv; ++v) gens.push_back(A.idempotent_index(v));
    for (int g = 0; g < (int)A.quiver().arrows.size(); ++g)
        gens.push_back(A.arrow_basis_index(g));

    // phi(g) u - u g = 0 for every generator g, u restricted to the unknowns.
    Matrix<F> sys((int)gens.size() * n, (int)unknowns.size());
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        Elem phi_g = detail::matrix_column<F>(phi, gens[gi]);
        for (size_t j = 0; j < unknowns.size(); ++j) {
            Elem diff = A.mul(phi_g, Elem{{unknowns[j], FieldOps<F>::one()}});
            FiniteDimAlgebra<F>::add_scaled(
                diff, A.mul(Elem{{unknowns[j], FieldOps<F>::one()}},
                            Elem{{gens[gi], FieldOps<F>::one()}}),
                FieldOps<F>::negate(FieldOps<F>::one()));
            for (const auto& [r, c] : diff) sys.at((int)gi * n + r, (int)j) = c;
        }
    }
    auto K = kernel(sys);
    if (K.empty()) return std::nullopt;

    // A unit exists in the solution space iff every idempotent coordinate is
    // nonzero somewhere on it (invertibility = invertibility mod radical).
    for (int v = 0; v < nv; ++v) {
        int p = pos[(size_t)A.idempotent_index(v)];
        bool hit = false;
        if (p >= 0)
            for (const auto& vec : K) hit = hit || !FieldOps<F>::is_zero(vec[(size_t)p]);
        if (!hit) return std::nullopt;
    }

    std::mt19937_64 rng(seed ^ 0x517cc1b727220a95ull);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<F> u((size_t)n, FieldOps<F>::zero());
        for (const auto& vec : K) {
            F t = FieldOps<F>::from_int((long long)(1 + rng() % 65521));
            for (size_t j = 0; j < unknowns.size(); ++j)
                u[(size_t)unknowns[j]] = u[(size_t)unknowns[j]] + t * vec[j];
        }
        bool ok = true;
        for (int v = 0; v < nv; ++v)
            ok = ok && !FieldOps<F>::is_zero(u[(size_t)A.idempotent_index(v)]);
        if (ok) return u;
    }
    throw InternalNondegeneracyFailure("no unit witness found in 64 draws");
}

template <class F>
OrderScan da_order(const FiniteDimAlgebra<F>& A, const Nakayama<F>& alpha,
                   const Character& chi, int kmax, bool allow_inner,
                   std::uint64_t seed) {
    if (!is_connected(A.quiver()))
        throw NotConnected("order scan requires a connected quiver");
    int n = A.dim();
    Matrix<F> T = chi_twist(A, alpha.map, chi);
    Matrix<F> I = Matrix<F>::identity(n);

    Matrix<F> P = T;
    std::vector<int> pi = alpha.vertex_map;
    std::vector<DegVec> L = alpha.adjuster;

    std::optional<OrderScan> found;
    int limit = kmax;
    for (int k = 1; k <= limit; ++k) {
        if (detail::is_identity_perm(pi)) {
            bool constant = true;
            for (const auto& deg : L) constant = constant && deg == L.front();
            if (P == I) {
                if (!constant)
                    throw InvariantViolation(
                        "identity power with non-constant degree adjuster");
                if (!found)
                    found = OrderScan{k, A.quiver().project(L.front()), false, {}};
                found->alpha_order_strict = k;
                break;
            }
            if (!found && allow_inner && constant &&
                inner_witness(A, P, true, seed).has_value()) {
                found = OrderScan{k, A.quiver().project(L.front()), true, {}};
                // keep scanning a little for a strict identity power
                limit = std::min(kmax, 2 * k);
            }
        }
        if (k == limit) break;
        std::vector<DegVec> L2((size_t)A.num_vertices());
        std::vector<int> pi2((size_t)A.num_vertices());
        for (int v = 0; v < A.num_vertices(); ++v) {
            L2[(size_t)v] = deg_add(L[(size_t)v], alpha.adjuster[(size_t)pi[(size_t)v]]);
            pi2[(size_t)v] = alpha.vertex_map[(size_t)pi[(size_t)v]];
        }
        L = std::move(L2);
        pi = std::move(pi2);
        P = matmul(T, P);
    }
    if (!found)
        throw NoOrderFound("no twisted power of the Nakayama automorphism is the "
                           "identity up to k_max=" + std::to_string(kmax) +
                           " (character " + chi.canonical + ")");
    return *found;
}

template <class F>
CYReport analyze_presentation(const Presentation& p, const AnalyzeOptions& opt) {
    if (!p.homogeneous)
        throw ParseError("analysis requires degree-homogeneous relations");
    if (!is_connected(p.quiver))
        throw NotConnected("analysis requires a connected quiver");

    auto A = FiniteDimAlgebra<F>::quotient(p, opt.max_len);
    auto soc = socle_analysis(A);

    CYReport r;
    r.character = opt.chi.canonical;
    r.d = opt.d;
    r.connected = true;
    if (!soc.selfinjective) {
        r.verdict = CYReport::Verdict::NotFrobenius;
        r.frobenius = false;
        r.reason = soc.failure;
        return r;
    }
    r.frobenius = true;
    r.nu = canonical_cycles(soc.nu, p.quiver.vertices);
    for (int v = 0; v < A.num_vertices(); ++v)
        r.ell.push_back({p.quiver.vertices[(size_t)v], soc.ell[(size_t)v]});

    auto lam = frobenius_form(A, soc, opt.seed);
    auto nak = nakayama_automorphism(A, soc, lam);
    try {
        OrderScan s = da_order(A, nak, opt.chi, opt.kmax, opt.allow_inner, opt.seed);
        r.k = s.k;
        r.N = s.N;
        r.m = s.k + s.N;
        r.cy = {opt.d * s.N, s.k + s.N};
        r.alpha_order_strict = s.alpha_order_strict;
        r.used_inner = s.used_inner;
    } catch (const NoOrderFound& e) {
        r.verdict = CYReport::Verdict::NoOrderFound;
        r.reason = e.what();
    }
    return r;
}

}  // namespace fcy
