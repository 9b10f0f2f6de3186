#include "fcy/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace fcy {

namespace {

std::string cycles_text(const std::vector<std::vector<std::string>>& cycles) {
    std::string out;
    for (const auto& c : cycles) {
        out += "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) out += " ";
            out += c[i];
        }
        out += ")";
    }
    return out;
}

std::string degvec_text(const DegVec& d) {
    std::string out;
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(d[i]);
    }
    return out;
}

}  // namespace

std::vector<std::vector<std::string>> canonical_cycles(
    const std::vector<int>& perm, const std::vector<std::string>& labels) {
    std::vector<std::vector<std::string>> cycles;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int v = (int)i;
        while (!seen[(size_t)v]) {
            seen[(size_t)v] = true;
            cyc.push_back(v);
            v = perm[(size_t)v];
        }
        size_t best = 0;
        for (size_t j = 1; j < cyc.size(); ++j)
            if (labels[(size_t)cyc[j]] < labels[(size_t)cyc[best]]) best = j;
        std::rotate(cyc.begin(), cyc.begin() + (long)best, cyc.end());
        std::vector<std::string> named;
        for (int w : cyc) named.push_back(labels[(size_t)w]);
        cycles.push_back(std::move(named));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return cycles;
}

std::string report_to_json(const CYReport& r) {
    nlohmann::json j;
    j["frobenius"] = r.frobenius;
    if (r.reason) j["reason"] = *r.reason;
    if (!r.nu.empty()) j["nu"] = r.nu;
    if (!r.ell.empty()) {
        nlohmann::json e = nlohmann::json::object();
        for (const auto& [label, deg] : r.ell) e[label] = deg;
        j["ell"] = e;
    }
    j["character"] = r.character;
    if (r.k) j["k"] = *r.k;
    if (r.N) j["N"] = *r.N;
    if (r.m) j["m"] = *r.m;
    j["d"] = r.d;
    if (r.cy) j["cy"] = {r.cy->first, r.cy->second};
    if (r.alpha_order_strict) j["alpha_order_strict"] = *r.alpha_order_strict;
    if (r.used_inner) j["used_inner"] = *r.used_inner;
    j["connected"] = r.connected;
    return j.dump(2) + "\n";
}

std::string report_to_tsv(const CYReport& r) {
    auto opt_int = [](const auto& o) { return o ? std::to_string(*o) : std::string(); };
    std::string ell;
    for (size_t i = 0; i < r.ell.size(); ++i) {
        if (i) ell += ";";
        ell += r.ell[i].first + "=" + degvec_text(r.ell[i].second);
    }
    std::vector<std::pair<std::string, std::string>> cols = {
        {"frobenius", r.frobenius ? "true" : "false"},
        {"reason", r.reason ? *r.reason : ""},
        {"nu", cycles_text(r.nu)},
        {"ell", ell},
        {"character", r.character},
        {"k", opt_int(r.k)},
        {"N", opt_int(r.N)},
        {"m", opt_int(r.m)},
        {"d", std::to_string(r.d)},
        {"cy", r.cy ? std::to_string(r.cy->first) + "/" + std::to_string(r.cy->second)
                    : std::string()},
        {"alpha_order_strict", opt_int(r.alpha_order_strict)},
        {"used_inner", r.used_inner ? (*r.used_inner ? "true" : "false") : std::string()},
        {"connected", r.connected ? "true" : "false"},
    };
    std::string head, row;
    for (size_t i = 0; i < cols.size(); ++i) {
        if (i) {
            head += "\t";
            row += "\t";
        }
        head += cols[i].first;
        row += cols[i].second;
    }
    return head + "\n" + row + "\n";
}

}  // namespace fcy
