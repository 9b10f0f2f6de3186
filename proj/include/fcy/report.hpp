#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcy/quiver.hpp"

namespace fcy {

// Result of a Calabi-Yau dimension analysis.  Optional fields are omitted
// from the serialized forms when absent; rendering is byte-deterministic.
struct CYReport {
    enum class Verdict { Ok, NotFrobenius, NoOrderFound };
    Verdict verdict = Verdict::Ok;

    bool frobenius = false;
    std::optional<std::string> reason;                // set when not Ok
    std::vector<std::vector<std::string>> nu;         // cycles, canonical form
    std::vector<std::pair<std::string, DegVec>> ell;  // vertex -> socle degree
    std::string character;
    std::optional<int> k;
    std::optional<long long> N;
    std::optional<long long> m;   // = k + N
    long long d = 1;
    std::optional<std::pair<long long, long long>> cy;  // (d*N, m)
    std::optional<int> alpha_order_strict;
    std::optional<bool> used_inner;
    bool connected = true;
};

std::string report_to_json(const CYReport& r);
std::string report_to_tsv(const CYReport& r);

// Cycle decomposition of a permutation, each cycle rotated to start at its
// lexicographically smallest label, cycles sorted by that label.  Fixed
// points are kept as singletons.
std::vector<std::vector<std::string>> canonical_cycles(
    const std::vector<int>& perm, const std::vector<std::string>& labels);

}  // namespace fcy
