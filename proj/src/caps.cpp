#include "polyfun/caps.hpp"

#include <cstdlib>

#include "json.hpp"
#include "polyfun/errors.hpp"

namespace polyfun {

const Caps& default_caps() {
    static const Caps caps{};
    return caps;
}

Caps caps_from_json(const std::string& text, const Caps& base) {
    Caps caps = base;
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("caps: bad JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("caps: expected a JSON object");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& key = it.key();
        if (key == "ring_size") caps.ring_size = it.value().get<std::uint64_t>();
        else if (key == "period_lcm") caps.period_lcm = it.value().get<std::uint64_t>();
        else if (key == "modulus") caps.modulus = it.value().get<std::uint64_t>();
        else if (key == "matrix_dim") caps.matrix_dim = it.value().get<unsigned>();
        else if (key == "builder_modulus") caps.builder_modulus = it.value().get<std::uint64_t>();
        else if (key == "degree") caps.degree = it.value().get<unsigned>();
        else if (key == "brute_direct") caps.brute_direct = it.value().get<std::uint64_t>();
        else if (key == "brute_meet") caps.brute_meet = it.value().get<double>();
        else if (key == "brute_kernel") caps.brute_kernel = it.value().get<std::uint64_t>();
        else if (key == "subset_exhaustion") caps.subset_exhaustion = it.value().get<std::uint64_t>();
        else throw ConfigError("caps: unknown key '" + key + "'");
    }
    return caps;
}

Caps caps_from_env(const Caps& base) {
    const char* text = std::getenv("POLYFUN_CAPS");
    if (text == nullptr || *text == '\0') return base;
    return caps_from_json(text, base);
}

} // namespace polyfun
