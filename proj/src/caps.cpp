#include "crystalline/caps.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

namespace crystalline {

static Caps parse_caps() {
    Caps c;
    const char* env = std::getenv("CRYSTALLINE_CAPS");
    if (!env) return c;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        long long val = std::atoll(item.c_str() + eq + 1);
        if (val <= 0) continue;
        if (key == "pm") c.max_pm = val;
        else if (key == "rank") c.max_rank = static_cast<int>(val);
        else if (key == "compound") c.max_compound = static_cast<int>(val);
        else if (key == "points") c.max_points = val;
        else if (key == "enum") c.max_enum = val;
    }
    return c;
}

const Caps& caps() {
    static const Caps c = parse_caps();
    return c;
}

}  // namespace crystalline
