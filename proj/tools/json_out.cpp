#include "json_out.hpp"

#include <limits>

namespace qkig::cli {

Json to_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return Json(x.convert_to<std::int64_t>());
    }
    return Json(x.str());
}

Json to_json(Pair p) { return Json::array({p.a, p.b}); }

Json to_json(const RingElement& x) {
    Json terms = Json::array();
    for (const auto& [m, c] : x.terms()) {
        terms.push_back(Json{{"q", m.q}, {"pair", to_json(m.pair)}, {"coeff", to_json(c)}});
    }
    return Json{{"n", x.n()}, {"terms", std::move(terms)}};
}

Json to_json(const Descriptor& d) {
    Json j{{"kind", to_string(d.kind)}, {"indices", d.subspace.indices}, {"dim", d.dim}};
    if (!d.note.empty()) j["note"] = d.note;
    return j;
}

Json to_json(const Report& r) {
    return Json{{"suite", r.suite},           {"n", r.n},
                {"trials", r.trials},         {"seed", r.seed},
                {"failures", r.failures},     {"accepted", r.accepted},
                {"rejected", r.rejected}};
}

}  // namespace qkig::cli
