#pragma once

#include <string>

#include "zf/zeta.hpp"

namespace zf {

// {"atoms": [...], "masses": [...]}, validated like make_discrete.
DiscreteLaw parse_law_json(const std::string& text);
DiscreteLaw read_law_file(const std::string& path);
std::string law_to_json(const DiscreteLaw& law);

// rademacher, binomial:n, tworho:rho, bernoulli:p, normal (all standardized),
// otherwise a path to a law file.
Law resolve_law(const std::string& spec);

}  // namespace zf
