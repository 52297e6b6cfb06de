#pragma once

#include "wres/scalar_expr.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace wres {

struct ReportEntry {
    std::string key;
    ScalarExpr computed;
    ScalarExpr paper;
    bool match = false;
    std::vector<std::string> notes;
};

/// Structured record of a verification run: per-entry computed coefficient,
/// published reference value, exact-match flag and notes, plus the
/// reproducibility metadata (dimension, seed, instance digest).
struct VerificationReport {
    int dimension = 0;
    std::optional<uint64_t> seed;
    std::string instance_digest;
    std::string omega_label;  // "Omega_3" for n = 4, "Omega_4" for n = 6
    std::vector<ReportEntry> entries;

    void add(ReportEntry e) { entries.push_back(std::move(e)); }
    void add(const std::string& key, const ScalarExpr& computed, const ScalarExpr& paper,
             std::vector<std::string> notes = {}) {
        entries.push_back(
            {key, computed, paper, (computed - paper).is_zero(), std::move(notes)});
    }

    bool all_match() const {
        for (auto& e : entries)
            if (!e.match)
                return false;
        return true;
    }

    static nlohmann::json expr_json(const ScalarExpr& e) {
        nlohmann::json terms = nlohmann::json::array();
        for (auto& [mono, coeff] : e.terms()) {
            nlohmann::json t;
            t["coeff_re"] = coeff.re().str();
            t["coeff_im"] = coeff.im().str();
            t["powers"] = {{"t", mono[0]},  {"tbar", mono[1]}, {"hprime", mono[2]},
                           {"pi", mono[3]}, {"Omega", mono[4]}, {"K", mono[5]}};
            terms.push_back(std::move(t));
        }
        nlohmann::json out;
        out["text"] = e.str();
        out["terms"] = std::move(terms);
        if (e.terms().size() == 1) {
            // single-term values also carry the flat rendering
            out["coeff_re"] = out["terms"][0]["coeff_re"];
            out["coeff_im"] = out["terms"][0]["coeff_im"];
            out["powers"] = out["terms"][0]["powers"];
        }
        return out;
    }

    nlohmann::json to_json() const {
        nlohmann::json meta;
        meta["dimension"] = dimension;
        if (seed)
            meta["seed"] = *seed;
        meta["instance_digest"] = instance_digest;
        meta["omega_label"] = omega_label;
        nlohmann::json es = nlohmann::json::array();
        for (auto& e : entries) {
            nlohmann::json j;
            j["key"] = e.key;
            j["computed"] = expr_json(e.computed);
            j["paper"] = expr_json(e.paper);
            j["match"] = e.match;
            j["notes"] = e.notes;
            es.push_back(std::move(j));
        }
        return nlohmann::json{{"meta", std::move(meta)}, {"entries", std::move(es)}};
    }

    std::string to_text() const {
        std::string out;
        out += "dimension: " + std::to_string(dimension);
        if (seed)
            out += "   seed: " + std::to_string(*seed);
        if (!instance_digest.empty())
            out += "   instance: " + instance_digest;
        if (!omega_label.empty())
            out += "   Omega token: " + omega_label;
        out += "\n";
        size_t width = 0;
        for (auto& e : entries)
            width = std::max(width, e.key.size());
        for (auto& e : entries) {
            out += (e.match ? "[ok]   " : "[FAIL] ") + e.key +
                   std::string(width - e.key.size() + 2, ' ') + "computed: " +
                   e.computed.str() + "   reference: " + e.paper.str() + "\n";
            for (auto& note : e.notes)
                out += "         note: " + note + "\n";
        }
        out += all_match() ? "all entries match\n" : "MISMATCHES PRESENT\n";
        return out;
    }
};

} // namespace wres
