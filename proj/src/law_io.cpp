#include "zf/law_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zf/error.hpp"

namespace zf {

DiscreteLaw parse_law_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::BadInput, std::string("law JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("atoms") || !j.contains("masses"))
        throw Error(ErrorCode::BadInput, "law JSON needs \"atoms\" and \"masses\"");
    try {
        return make_discrete(j.at("atoms").get<std::vector<double>>(), j.at("masses").get<std::vector<double>>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::BadInput, std::string("law JSON: ") + e.what());
    }
}

DiscreteLaw read_law_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IOFailure, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_law_json(ss.str());
}

std::string law_to_json(const DiscreteLaw& law) {
    nlohmann::json j;
    j["atoms"] = law.atoms();
    j["masses"] = law.masses();
    return j.dump();
}

namespace {

double parse_number(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw Error(ErrorCode::BadInput, "bad number in " + what);
    return v;
}

}  // namespace

Law resolve_law(const std::string& spec) {
    if (spec == "normal") return StandardNormal{};
    if (spec == "rademacher") return rademacher();
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
        if (kind == "binomial") {
            const double n = parse_number(arg, spec);
            if (n < 1 || n != static_cast<int>(n)) throw Error(ErrorCode::BadN, "binomial:n needs integer n >= 1");
            return binomial_half_standardized(static_cast<int>(n));
        }
        if (kind == "tworho") return two_point_law(parse_number(arg, spec));
        if (kind == "bernoulli") {
            const double p = parse_number(arg, spec);
            if (!(p > 0.0 && p < 1.0)) throw Error(ErrorCode::BadParam, "bernoulli:p needs 0 < p < 1");
            return standardize(make_discrete({{0.0, 1.0 - p}, {1.0, p}}));
        }
    }
    return read_law_file(spec);
}

}  // namespace zf
