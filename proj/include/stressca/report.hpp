#ifndef STRESSCA_REPORT_HPP
#define STRESSCA_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace stressca {

using Json = nlohmann::ordered_json;

enum class Verdict { verified, violated, hypotheses_not_met, inconclusive };

std::string to_string(Verdict v);

struct Hypothesis {
    std::string name;
    bool holds = false;
    Json detail;  // null when there is nothing to add
};

/// Outcome of one theorem check. Hypothesis status and the computed
/// conclusion are kept apart: a report may say "hypotheses not met" and still
/// carry the conclusion's numbers in `ranks`.
struct Report {
    std::string theorem;
    std::vector<Hypothesis> hypotheses;
    Verdict verdict = Verdict::inconclusive;
    Json witness;
    Json ranks = Json::object();
    std::vector<std::string> notes;

    void require(std::string name, bool holds, Json detail = nullptr) {
        hypotheses.push_back({std::move(name), holds, std::move(detail)});
    }
    bool hypotheses_hold() const;
    /// verified when `conclusion` holds and every hypothesis holds;
    /// hypotheses_not_met when some hypothesis fails; violated otherwise.
    void conclude(bool conclusion);

    Json to_json() const;
    std::string to_human() const;
};

/// 0 verified, 1 anything else.
int exit_code(const Report& r);

}  // namespace stressca

#endif  // STRESSCA_REPORT_HPP
