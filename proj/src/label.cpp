#include "helix/label.hpp"

#include <algorithm>

#include "helix/error.hpp"

namespace helix {

bool set_tuple_less(const SetTuple& a, const SetTuple& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [](const IntSet& x, const IntSet& y) {
            return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
        });
}

std::string set_tuple_to_string(const SetTuple& t) {
    std::string out = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += '{';
        for (size_t j = 0; j < t[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(t[i][j]);
        }
        out += '}';
    }
    out += ')';
    return out;
}

std::string label_to_string(const Label& l) {
    if (const auto* t = std::get_if<SetTuple>(&l)) return set_tuple_to_string(*t);
    return std::get<std::string>(l);
}

namespace {

[[noreturn]] void bad(const std::string& token) {
    usage_error("malformed set-tuple label '" + token + "'");
}

} // namespace

Label parse_label(const std::string& token) {
    if (token.empty() || token[0] != '(') {
        require(!token.empty(), "empty label");
        require(token.find(' ') == std::string::npos, "label contains a space");
        return token;
    }
    if (token.back() != ')') bad(token);
    SetTuple tuple;
    size_t i = 1;
    while (i < token.size() - 1) {
        if (token[i] != '{') bad(token);
        ++i;
        IntSet set;
        while (token[i] != '}') {
            size_t digits = 0;
            int value = 0;
            while (i < token.size() && token[i] >= '0' && token[i] <= '9') {
                value = value * 10 + (token[i] - '0');
                ++i;
                ++digits;
            }
            if (digits == 0) bad(token);
            if (!set.empty() && set.back() >= value) bad(token); // ascending, distinct
            set.push_back(value);
            if (i >= token.size()) bad(token);
            if (token[i] == ',') ++i;
            else if (token[i] != '}') bad(token);
        }
        ++i; // past '}'
        tuple.push_back(std::move(set));
        if (i < token.size() - 1) {
            if (token[i] != ',') bad(token);
            ++i;
        }
    }
    if (tuple.empty()) bad(token);
    return tuple;
}

bool label_less(const Label& a, const Label& b) {
    // Tuples sort before text; mixed labelings do not occur in practice.
    if (a.index() != b.index()) return a.index() < b.index();
    if (const auto* t = std::get_if<SetTuple>(&a)) return set_tuple_less(*t, std::get<SetTuple>(b));
    return std::get<std::string>(a) < std::get<std::string>(b);
}

} // namespace helix
