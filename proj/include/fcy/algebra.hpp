// Finite-dimensional quotients of path algebras by two-sided ideals of
// relations.  The engine completes the relations into a confluent rewriting
// system on paths (noncommutative Buchberger with overlap ambiguities), then
// enumerates the irreducible words, which form a monomial basis of the
// quotient.  All products are computed by rewriting and memoized.
//
// The monomial order is (word length, then position-wise by canonical arrow
// rank), where canonical ranks sort arrow identifiers; the resulting basis is
// therefore independent of the order arrows or relations were listed in.
//
// Admissibility: every relation term must be a path of length >= 2, and when
// relations mix path lengths the engine additionally certifies that the span
// of positive-length basis words is nilpotent (finite dimension alone does
// not guarantee it: k[t]/(t^2 - t^3) is 3-dimensional but t^2 survives every
// power of the arrow ideal).  Violations raise NonAdmissibleRelation.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fcy/errors.hpp"
#include "fcy/field.hpp"
#include "fcy/matrix.hpp"
#include "fcy/quiver.hpp"

namespace fcy {

using Word = std::vector<int>;  // arrow indices, first applied first

struct WordOrder {
    const std::vector<int>* rank = nullptr;
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i) {
            int ra = (*rank)[(size_t)a[i]], rb = (*rank)[(size_t)b[i]];
            if (ra != rb) return ra < rb;
        }
        return false;
    }
};

template <class F>
class FiniteDimAlgebra {
  public:
    using Ops = FieldOps<F>;
    using Elem = std::map<int, F>;                     // basis index -> coefficient
    using SparseVec = std::vector<std::pair<int, F>>;  // sorted by basis index
    using Poly = std::map<Word, F, WordOrder>;

    // Builds the quotient.  max_len bounds the length of basis words; if the
    // quotient cannot be certified within that bound (a longer basis word, or
    // a rewriting rule past the bound) this throws DimensionBoundExceeded.
    static FiniteDimAlgebra quotient(const Presentation& pres, int max_len);

    const Quiver& quiver() const { return q_; }
    int dim() const { return (int)basis_.size(); }
    int num_vertices() const { return (int)q_.vertices.size(); }
    int idempotent_index(int v) const { return v; }
    const Path& basis_word(int i) const { return basis_[(size_t)i]; }
    int source_of(int i) const { return src_[(size_t)i]; }
    int target_of(int i) const { return tgt_[(size_t)i]; }
    const DegVec& degree_of(int i) const { return deg_[(size_t)i]; }
    int length_of(int i) const { return (int)basis_[(size_t)i].length(); }
    long long zdeg_of(int i) const { return q_.project(deg_[(size_t)i]); }
    bool length_homogeneous_relations() const { return length_homog_; }

    // Basis index of a single arrow (arrows are always irreducible words).
    int arrow_basis_index(int arrow) const {
        for (int i = num_vertices(); i < dim(); ++i)
            if (basis_[(size_t)i].length() == 1 && basis_[(size_t)i].arrows[0] == arrow)
                return i;
        throw InvariantViolation("arrow missing from the basis");
    }

    // basis_i . basis_j with basis_j applied first; memoized.
    const SparseVec& product(int i, int j) const;

    Elem mul(const Elem& x, const Elem& y) const;
    Elem unit() const;
    static void add_scaled(Elem& x, const Elem& y, const F& c);
    static bool is_zero_elem(const Elem& x) { return x.empty(); }

  private:
    struct Rule {
        Word lead;
        std::vector<std::pair<Word, F>> tail;  // lead rewrites to this combination
    };

    FiniteDimAlgebra() = default;

    WordOrder order() const { return WordOrder{&rank_}; }
    void complete_rules(std::deque<Poly> queue, int max_len);
    void enumerate_basis(int max_len);
    void certify_nilpotent_positive_part() const;
    Poly normal_form(Poly work) const;
    const Rule* match_at(const Word& w, size_t pos) const;

    Quiver q_;
    std::vector<int> rank_;
    bool length_homog_ = true;
    std::vector<Rule> rules_;
    std::vector<char> alive_;
    std::vector<std::vector<int>> rules_by_first_;
    std::vector<Path> basis_;
    std::vector<int> src_, tgt_;
    std::vector<DegVec> deg_;
    std::map<Word, int> word_index_;  // nonempty irreducible words
    mutable std::unordered_map<uint64_t, SparseVec> memo_;
};

// ---------------------------------------------------------------------------
// implementation
// ---------------------------------------------------------------------------

namespace detail {
inline bool contains_subword(const Word& big, const Word& small) {
    if (small.size() > big.size()) return false;
    for (size_t p = 0; p + small.size() <= big.size(); ++p)
        if (std::equal(small.begin(), small.end(), big.begin() + (long)p)) return true;
    return false;
}
}  // namespace detail

template <class F>
FiniteDimAlgebra<F> FiniteDimAlgebra<F>::quotient(const Presentation& pres, int max_len) {
    if (max_len < 1) throw InvariantViolation("word length bound must be >= 1");
    FiniteDimAlgebra A;
    A.q_ = pres.quiver;
    A.rank_ = A.q_.canonical_arrow_ranks();
    A.rules_by_first_.assign(A.q_.arrows.size(), {});

    std::deque<Poly> queue;
    for (const Relation& rel : pres.relations) {
        Poly poly(A.order());
        size_t len0 = rel.front().path.length();
        for (const RelTerm& t : rel) {
            if (t.path.length() < 2)
                throw NonAdmissibleRelation(
                    "relation term of path length < 2: relations must lie in the "
                    "square of the arrow ideal");
            if (t.path.length() != len0) A.length_homog_ = false;
            F c = Ops::from_rational(t.coeff);
            auto [it, fresh] = poly.emplace(t.path.arrows, c);
            if (!fresh) {
                it->second += c;
                if (Ops::is_zero(it->second)) poly.erase(it);
            } else if (Ops::is_zero(it->second)) {
                poly.erase(it);
            }
        }
        if (!poly.empty()) queue.push_back(std::move(poly));
    }

    A.complete_rules(std::move(queue), max_len);
    A.enumerate_basis(max_len);
    if (!A.length_homog_) A.certify_nilpotent_positive_part();
    return A;
}

template <class F>
auto FiniteDimAlgebra<F>::match_at(const Word& w, size_t pos) const -> const Rule* {
    for (int ri : rules_by_first_[(size_t)w[pos]]) {
        if (!alive_[(size_t)ri]) continue;
        const Rule& r = rules_[(size_t)ri];
        if (r.lead.size() > w.size() - pos) continue;
        if (std::equal(r.lead.begin(), r.lead.end(), w.begin() + (long)pos)) return &r;
    }
    return nullptr;
}

template <class F>
auto FiniteDimAlgebra<F>::normal_form(Poly work) const -> Poly {
    Poly result(order());
    while (!work.empty()) {
        auto top = std::prev(work.end());
        Word w = top->first;
        F c = top->second;
        work.erase(top);
        if (Ops::is_zero(c)) continue;
        const Rule* rule = nullptr;
        size_t pos = 0;
        for (; pos < w.size(); ++pos)
            if ((rule = match_at(w, pos)) != nullptr) break;
        if (rule == nullptr) {
            auto [it, fresh] = result.emplace(std::move(w), c);
            if (!fresh) {
                it->second += c;
                if (Ops::is_zero(it->second)) result.erase(it);
            }
            continue;
        }
        for (const auto& [tw, tc] : rule->tail) {
            Word nw(w.begin(), w.begin() + (long)pos);
            nw.insert(nw.end(), tw.begin(), tw.end());
            nw.insert(nw.end(), w.begin() + (long)(pos + rule->lead.size()), w.end());
            F add = c * tc;
            auto [it, fresh] = work.emplace(std::move(nw), add);
            if (!fresh) {
                it->second += add;
                if (Ops::is_zero(it->second)) work.erase(it);
            }
        }
    }
    return result;
}

template <class F>
void FiniteDimAlgebra<F>::complete_rules(std::deque<Poly> queue, int max_len) {
    size_t steps = 0;
    auto push_overlaps = [&](const Rule& r1, const Rule& r2) {
        // Proper overlaps: a nonempty suffix of r1.lead equals a prefix of
        // r2.lead, neither containing the whole of either lead.
        size_t omax = std::min(r1.lead.size(), r2.lead.size()) - 1;
        for (size_t o = 1; o <= omax; ++o) {
            if (!std::equal(r1.lead.end() - (long)o, r1.lead.end(), r2.lead.begin())) continue;
            Poly s(order());
            auto accumulate = [&](Word w, const F& c) {
                auto [it, fresh] = s.emplace(std::move(w), c);
                if (!fresh) {
                    it->second += c;
                    if (Ops::is_zero(it->second)) s.erase(it);
                } else if (Ops::is_zero(it->second)) {
                    s.erase(it);
                }
            };
            // The superword w1 ++ w2[o:] rewrites two ways; their difference
            // lies in the ideal.
            for (const auto& [tw, tc] : r1.tail) {
                Word w = tw;
                w.insert(w.end(), r2.lead.begin() + (long)o, r2.lead.end());
                accumulate(std::move(w), tc);
            }
            for (const auto& [tw, tc] : r2.tail) {
                Word w(r1.lead.begin(), r1.lead.end() - (long)o);
                w.insert(w.end(), tw.begin(), tw.end());
                accumulate(std::move(w), Ops::negate(tc));
            }
            if (!s.empty()) queue.push_back(std::move(s));
        }
    };

    while (!queue.empty()) {
        if (++steps > 1000000)
            throw InvariantViolation("rewriting-system completion did not terminate");
        Poly p = normal_form(std::move(queue.front()));
        queue.pop_front();
        if (p.empty()) continue;

        auto lead_it = std::prev(p.end());
        if ((int)lead_it->first.size() > max_len + 1)
            throw DimensionBoundExceeded(
                "rewriting rule of length " + std::to_string(lead_it->first.size()) +
                " exceeds the word-length bound " + std::to_string(max_len));
        F inv = Ops::inverse(lead_it->second);
        Rule r;
        r.lead = lead_it->first;
        for (auto it = p.begin(); it != lead_it; ++it)
            r.tail.emplace_back(it->first, Ops::negate(it->second * inv));

        int idx = (int)rules_.size();
        rules_.push_back(std::move(r));
        alive_.push_back(1);
        rules_by_first_[(size_t)rules_[(size_t)idx].lead.front()].push_back(idx);

        // Interreduce: retire any older rule whose lead contains the new lead
        // (the converse cannot happen because p was fully reduced).
        for (int k = 0; k < idx; ++k) {
            if (!alive_[(size_t)k]) continue;
            if (!detail::contains_subword(rules_[(size_t)k].lead, rules_[(size_t)idx].lead))
                continue;
            alive_[(size_t)k] = 0;
            Poly back(order());
            back[rules_[(size_t)k].lead] = Ops::one();
            for (const auto& [tw, tc] : rules_[(size_t)k].tail) back[tw] = Ops::negate(tc);
            queue.push_back(std::move(back));
        }

        for (int k = 0; k <= idx; ++k) {
            if (!alive_[(size_t)k]) continue;
            push_overlaps(rules_[(size_t)k], rules_[(size_t)idx]);
            if (k != idx) push_overlaps(rules_[(size_t)idx], rules_[(size_t)k]);
        }
    }

    // Reduce every surviving tail once so later rewriting works with normal
    // tails; the leads form an antichain, so this cannot create new rules.
    for (size_t i = 0; i < rules_.size(); ++i) {
        if (!alive_[i]) continue;
        Poly t(order());
        for (const auto& [tw, tc] : rules_[i].tail) t[tw] = tc;
        Poly nf = normal_form(std::move(t));
        rules_[i].tail.assign(nf.begin(), nf.end());
    }
}

template <class F>
void FiniteDimAlgebra<F>::enumerate_basis(int max_len) {
    int n = num_vertices();
    for (int v = 0; v < n; ++v) {
        Path p;
        p.vertex = v;
        basis_.push_back(p);
        src_.push_back(v);
        tgt_.push_back(v);
        deg_.push_back(DegVec((size_t)q_.grading_rank, 0));
    }

    // Arrows bucketed by source, in canonical-rank order within each bucket.
    std::vector<int> by_rank((size_t)q_.arrows.size());
    for (size_t a = 0; a < q_.arrows.size(); ++a) by_rank[(size_t)rank_[a]] = (int)a;
    std::vector<std::vector<int>> arrows_from((size_t)n);
    for (int a : by_rank) arrows_from[(size_t)q_.arrows[(size_t)a].from].push_back(a);

    // Rules indexed by the last arrow of their lead: a word whose proper
    // prefix is irreducible can only be reducible via a suffix match.
    std::vector<std::vector<int>> rules_by_last((size_t)q_.arrows.size());
    for (size_t i = 0; i < rules_.size(); ++i)
        if (alive_[i]) rules_by_last[(size_t)rules_[i].lead.back()].push_back((int)i);
    auto suffix_reducible = [&](const Word& w) {
        for (int ri : rules_by_last[(size_t)w.back()]) {
            const Word& lead = rules_[(size_t)ri].lead;
            if (lead.size() > w.size()) continue;
            if (std::equal(lead.begin(), lead.end(), w.end() - (long)lead.size())) return true;
        }
        return false;
    };

    size_t layer_begin = 0, layer_end = basis_.size();
    for (int len = 1; len <= max_len + 1 && layer_begin < layer_end; ++len) {
        size_t next_begin = basis_.size();
        for (size_t bi = layer_begin; bi < layer_end; ++bi) {
            for (int a : arrows_from[(size_t)tgt_[bi]]) {
                Word w = basis_[bi].arrows;
                w.push_back(a);
                if (suffix_reducible(w)) continue;
                if (len == max_len + 1)
                    throw DimensionBoundExceeded(
                        "basis word of length " + std::to_string(len) +
                        " exceeds the word-length bound " + std::to_string(max_len));
                Path p;
                p.vertex = src_[bi];
                p.arrows = w;
                word_index_.emplace(w, (int)basis_.size());
                src_.push_back(src_[bi]);
                tgt_.push_back(q_.arrows[(size_t)a].to);
                deg_.push_back(deg_add(deg_[bi], q_.arrows[(size_t)a].degree));
                basis_.push_back(std::move(p));
            }
        }
        layer_begin = next_begin;
        layer_end = basis_.size();
    }
}

template <class F>
auto FiniteDimAlgebra<F>::product(int i, int j) const -> const SparseVec& {
    uint64_t key = (uint64_t)i * (uint64_t)basis_.size() + (uint64_t)j;
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;

    SparseVec out;
    int n = num_vertices();
    if (i < n) {
        if (tgt_[(size_t)j] == i) out.emplace_back(j, Ops::one());
    } else if (j < n) {
        if (src_[(size_t)i] == j) out.emplace_back(i, Ops::one());
    } else if (src_[(size_t)i] == tgt_[(size_t)j]) {
        Poly p(order());
        Word w = basis_[(size_t)j].arrows;
        w.insert(w.end(), basis_[(size_t)i].arrows.begin(), basis_[(size_t)i].arrows.end());
        p.emplace(std::move(w), Ops::one());
        Poly nf = normal_form(std::move(p));
        for (const auto& [word, c] : nf) {
            auto it = word_index_.find(word);
            if (it == word_index_.end())
                throw InvariantViolation("rewriting produced a word outside the basis");
            out.emplace_back(it->second, c);
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return memo_.emplace(key, std::move(out)).first->second;
}

template <class F>
auto FiniteDimAlgebra<F>::mul(const Elem& x, const Elem& y) const -> Elem {
    Elem out;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y) {
            if (Ops::is_zero(ci) || Ops::is_zero(cj)) continue;
            for (const auto& [k, ck] : product(i, j)) {
                F add = ci * cj * ck;
                auto [it, fresh] = out.emplace(k, add);
                if (!fresh) {
                    it->second += add;
                    if (Ops::is_zero(it->second)) out.erase(it);
                } else if (Ops::is_zero(it->second)) {
                    out.erase(it);
                }
            }
        }
    return out;
}

template <class F>
auto FiniteDimAlgebra<F>::unit() const -> Elem {
    Elem e;
    for (int v = 0; v < num_vertices(); ++v) e.emplace(v, Ops::one());
    return e;
}

template <class F>
void FiniteDimAlgebra<F>::add_scaled(Elem& x, const Elem& y, const F& c) {
    if (Ops::is_zero(c)) return;
    for (const auto& [i, ci] : y) {
        F add = ci * c;
        auto [it, fresh] = x.emplace(i, add);
        if (!fresh) {
            it->second += add;
            if (Ops::is_zero(it->second)) x.erase(it);
        }
    }
}

template <class F>
void FiniteDimAlgebra<F>::certify_nilpotent_positive_part() const {
    int d = dim(), n = num_vertices();
    if (d == n) return;
    // Rows span J^k for the arrow ideal J; J^{k+1} is spanned by the products
    // (arrow . row), so the chain either hits zero (nilpotent) or stabilizes
    // at a nonzero subspace (not admissible).
    std::vector<Elem> rows;
    for (int i = n; i < d; ++i) rows.push_back(Elem{{i, Ops::one()}});
    std::vector<int> arrow_indices;
    for (size_t a = 0; a < q_.arrows.size(); ++a) {
        Word w{(int)a};
        arrow_indices.push_back(word_index_.at(w));
    }
    size_t prev_rank = rows.size();
    while (!rows.empty()) {
        std::vector<Elem> next;
        for (int ai : arrow_indices)
            for (const Elem& r : rows) {
                Elem prod = mul(Elem{{ai, Ops::one()}}, r);
                if (!prod.empty()) next.push_back(std::move(prod));
            }
        if (next.empty()) return;  // nilpotent
        Matrix<F> m((int)next.size(), d);
        for (size_t r = 0; r < next.size(); ++r)
            for (const auto& [k, c] : next[r]) m.at((int)r, k) = c;
        auto rr = row_reduce(std::move(m));
        if ((size_t)rr.rank >= prev_rank)
            throw NonAdmissibleRelation(
                "the span of positive-length basis words is not nilpotent; the "
                "relations do not present a graded quotient of this kind");
        rows.clear();
        for (int r = 0; r < rr.rank; ++r) {
            Elem e;
            for (int c = 0; c < d; ++c)
                if (!Ops::is_zero(rr.rref.at(r, c))) e.emplace(c, rr.rref.at(r, c));
            rows.push_back(std::move(e));
        }
        prev_rank = (size_t)rr.rank;
    }
}

}  // namespace fcy
