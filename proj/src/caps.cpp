#include "helix/caps.hpp"

#include <cstdlib>

#include "helix/error.hpp"

namespace helix {

Caps parse_caps(const std::string& overrides) {
    Caps c;
    size_t pos = 0;
    while (pos < overrides.size()) {
        size_t end = overrides.find(',', pos);
        if (end == std::string::npos) end = overrides.size();
        std::string item = overrides.substr(pos, end - pos);
        pos = end + 1;
        if (item.empty()) continue;
        size_t eq = item.find('=');
        require(eq != std::string::npos, "HELIX_CAPS: expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq);
        int value = 0;
        try {
            value = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            usage_error("HELIX_CAPS: bad value in '" + item + "'");
        }
        require(value > 0, "HELIX_CAPS: value must be positive in '" + item + "'");
        if (key == "iso") c.iso = value;
        else if (key == "chromatic") c.chromatic = value;
        else if (key == "fractional") c.fractional = value;
        else if (key == "local") c.local = value;
        else if (key == "ground") c.ground = value;
        else if (key == "family") c.family = value;
        else usage_error("HELIX_CAPS: unknown key '" + key + "'");
    }
    return c;
}

const Caps& caps() {
    static Caps instance = [] {
        const char* env = std::getenv("HELIX_CAPS");
        return env ? parse_caps(env) : Caps{};
    }();
    return instance;
}

} // namespace helix
