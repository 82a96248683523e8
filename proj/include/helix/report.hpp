#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace helix {

enum class Verdict { pass, fail, indeterminate };

std::string verdict_str(Verdict v);

struct ReportCase {
    std::string id;       // replayable instance descriptor, no spaces
    std::string expected; // no spaces
    std::string observed; // no spaces
    Verdict verdict = Verdict::pass;
    std::string witness;  // no spaces; "-" when there is nothing to show
};

// Structured record of one verification suite run. Rendering is line
// oriented and canonical (cases sorted by id) so equal runs are equal bytes.
struct Report {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::uint64_t seed = 0;
    std::vector<ReportCase> cases;

    void add(ReportCase c) { cases.push_back(std::move(c)); }
    void add(const std::string& id, const std::string& expected, const std::string& observed,
             bool pass, const std::string& witness = "-");
    Verdict verdict() const;
    std::string to_text() const;
};

} // namespace helix
