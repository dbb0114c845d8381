#include "finfree/poly_io.hpp"

#include <json.hpp>

namespace finfree {

std::string poly_to_json(const Poly& p) {
    nlohmann::json j;
    j["n"] = p.ambient_degree();
    auto& arr = j["e"] = nlohmann::json::array();
    for (int k = 0; k <= p.ambient_degree(); ++k) arr.push_back(to_string(p.e(k)));
    return j.dump();
}

Poly poly_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("n") || !j.contains("e"))
        throw argument_error("poly JSON must have fields 'n' and 'e'");
    const int n = j.at("n").get<int>();
    const auto& arr = j.at("e");
    if (!arr.is_array() || static_cast<int>(arr.size()) != n + 1)
        throw argument_error("poly JSON: 'e' must hold n+1 entries");
    std::vector<Rational> e;
    e.reserve(arr.size());
    for (const auto& item : arr) e.push_back(parse_rational(item.get<std::string>()));
    return Poly(n, std::move(e));
}

}  // namespace finfree
