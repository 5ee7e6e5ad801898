#include "stressca/report.hpp"

#include <algorithm>
#include <sstream>

namespace stressca {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::violated: return "violated";
        case Verdict::hypotheses_not_met: return "hypotheses-not-met";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

bool Report::hypotheses_hold() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
}

void Report::conclude(bool conclusion) {
    if (!hypotheses_hold())
        verdict = Verdict::hypotheses_not_met;
    else
        verdict = conclusion ? Verdict::verified : Verdict::violated;
    ranks["conclusion_holds"] = conclusion;
}

Json Report::to_json() const {
    Json out;
    out["schema"] = "stressca/1";
    out["theorem"] = theorem;
    Json hyps = Json::array();
    for (const auto& h : hypotheses) {
        Json j;
        j["name"] = h.name;
        j["holds"] = h.holds;
        if (!h.detail.is_null()) j["detail"] = h.detail;
        hyps.push_back(std::move(j));
    }
    out["hypotheses"] = std::move(hyps);
    out["verdict"] = to_string(verdict);
    out["witness"] = witness;
    out["ranks"] = ranks;
    if (!notes.empty()) out["notes"] = notes;
    return out;
}

std::string Report::to_human() const {
    std::ostringstream s;
    s << theorem << ": " << to_string(verdict) << '\n';
    for (const auto& h : hypotheses) {
        s << "  [" << (h.holds ? "ok" : "FAILED") << "] " << h.name;
        if (!h.detail.is_null()) s << "  " << h.detail.dump();
        s << '\n';
    }
    for (const auto& [key, value] : ranks.items()) s << "  " << key << " = " << value.dump() << '\n';
    if (!witness.is_null()) s << "  witness: " << witness.dump() << '\n';
    for (const auto& n : notes) s << "  note: " << n << '\n';
    return s.str();
}

int exit_code(const Report& r) { return r.verdict == Verdict::verified ? 0 : 1; }

}  // namespace stressca
