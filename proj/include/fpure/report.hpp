#ifndef FPURE_REPORT_HPP
#define FPURE_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "invariants.hpp"
#include "localcoh.hpp"

namespace fpure {

using nlohmann::json;

namespace detail {
template <class T>
json optional_to_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}
template <class T>
std::optional<T> optional_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}
}  // namespace detail

inline TauClass tau_class_from_string(const std::string& s) {
    for (auto c : {TauClass::everywhere_f_pure, TauClass::isolated_non_f_pure_point,
                   TauClass::non_f_pure_locus_positive_dimensional}) {
        if (s == to_string(c)) return c;
    }
    throw ParseError("unknown tau_class '" + s + "'", 0, 0);
}

inline void to_json(json& j, const AnalysisReport& r) {
    j = json{
        {"a_invariant", r.a_invariant},
        {"reg_s_mod_tau", detail::optional_to_json(r.reg_s_mod_tau)},
        {"ell", detail::optional_to_json(r.ell)},
        {"thmA_bound", detail::optional_to_json(r.thmA_bound)},
        {"cor_bound", r.cor_bound},
        {"thmB_threshold", r.thmB_threshold},
        {"fpure_at_m", r.fpure_at_m},
        {"tau_class", to_string(r.tau_class)},
        {"isolated_singularity", r.isolated_singularity},
    };
}

inline void from_json(const json& j, AnalysisReport& r) {
    r.a_invariant = j.at("a_invariant").get<std::int64_t>();
    r.reg_s_mod_tau = detail::optional_from_json<std::int64_t>(j.at("reg_s_mod_tau"));
    r.ell = detail::optional_from_json<std::int64_t>(j.at("ell"));
    r.thmA_bound = detail::optional_from_json<std::int64_t>(j.at("thmA_bound"));
    r.cor_bound = j.at("cor_bound").get<std::int64_t>();
    r.thmB_threshold = j.at("thmB_threshold").get<std::int64_t>();
    r.fpure_at_m = j.at("fpure_at_m").get<bool>();
    r.tau_class = tau_class_from_string(j.at("tau_class").get<std::string>());
    r.isolated_singularity = j.at("isolated_singularity").get<bool>();
}

inline json class_to_json(const CohClass& a) {
    return json{{"numerator", to_string(a.numerator())}, {"q", a.q()}, {"degree", a.degree()}};
}

inline json injectivity_to_json(const InjectivityResult& r) {
    return json{{"degree", r.degree}, {"dim_source", r.dim_source}, {"dim_kernel", r.dim_kernel}};
}

}  // namespace fpure

#endif
