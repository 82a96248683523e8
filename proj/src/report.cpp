#include "helix/report.hpp"

#include <algorithm>

namespace helix {

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "indeterminate";
    }
}

void Report::add(const std::string& id, const std::string& expected, const std::string& observed,
                 bool pass, const std::string& witness) {
    cases.push_back({id, expected, observed, pass ? Verdict::pass : Verdict::fail, witness});
}

Verdict Report::verdict() const {
    bool indeterminate = false;
    for (const auto& c : cases) {
        if (c.verdict == Verdict::fail) return Verdict::fail;
        if (c.verdict == Verdict::indeterminate) indeterminate = true;
    }
    return indeterminate ? Verdict::indeterminate : Verdict::pass;
}

std::string Report::to_text() const {
    std::string out = "suite " + suite + "\n";
    auto sorted_params = params;
    std::stable_sort(sorted_params.begin(), sorted_params.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [k, v] : sorted_params) out += "param " + k + "=" + v + "\n";
    out += "seed " + std::to_string(seed) + "\n";
    auto sorted_cases = cases;
    std::stable_sort(sorted_cases.begin(), sorted_cases.end(),
                     [](const ReportCase& a, const ReportCase& b) { return a.id < b.id; });
    int pass = 0, fail = 0, indet = 0;
    for (const auto& c : sorted_cases) {
        out += "case id=" + c.id + " expected=" + c.expected + " observed=" + c.observed +
               " verdict=" + verdict_str(c.verdict) + " witness=" + (c.witness.empty() ? "-" : c.witness) +
               "\n";
        if (c.verdict == Verdict::pass) ++pass;
        else if (c.verdict == Verdict::fail) ++fail;
        else ++indet;
    }
    out += "cases " + std::to_string(sorted_cases.size()) + " pass " + std::to_string(pass) +
           " fail " + std::to_string(fail) + " indeterminate " + std::to_string(indet) + "\n";
    out += "verdict " + verdict_str(verdict()) + "\n";
    return out;
}

} // namespace helix
