#pragma once

#include "json.hpp"

#include "hecke/certify.hpp"
#include "hecke/dimension.hpp"

// JSON bindings for the report types emitted by the CLI. Field names are
// part of the output contract documented in the README.

namespace hecke::dimension {

inline void to_json(nlohmann::json& j, const DimensionResult& r) {
  j = {{"w", r.w},
       {"k", r.k},
       {"s_k", r.s_k},
       {"bracket_lo", r.bracket_lo},
       {"bracket_hi", r.bracket_hi},
       {"residual", r.residual},
       {"iterations", r.iterations}};
}

inline void from_json(const nlohmann::json& j, DimensionResult& r) {
  j.at("w").get_to(r.w);
  j.at("k").get_to(r.k);
  j.at("s_k").get_to(r.s_k);
  j.at("bracket_lo").get_to(r.bracket_lo);
  j.at("bracket_hi").get_to(r.bracket_hi);
  j.at("residual").get_to(r.residual);
  j.at("iterations").get_to(r.iterations);
}

inline void to_json(nlohmann::json& j, const CoverFactorReport& f) {
  j = {{"sign", f.sign}, {"a", f.a}, {"zeros", f.zeros}};
}

inline void from_json(const nlohmann::json& j, CoverFactorReport& f) {
  j.at("sign").get_to(f.sign);
  j.at("a").get_to(f.a);
  j.at("zeros").get_to(f.zeros);
}

inline void to_json(nlohmann::json& j, const CoverZeroReport& r) {
  j = {{"w", r.w},
       {"n", r.n},
       {"epsilon", r.epsilon},
       {"k", r.k},
       {"delta_estimate", r.delta_estimate},
       {"factors", r.factors},
       {"count_in_window", r.count_in_window}};
}

inline void from_json(const nlohmann::json& j, CoverZeroReport& r) {
  j.at("w").get_to(r.w);
  j.at("n").get_to(r.n);
  j.at("epsilon").get_to(r.epsilon);
  j.at("k").get_to(r.k);
  j.at("delta_estimate").get_to(r.delta_estimate);
  j.at("factors").get_to(r.factors);
  j.at("count_in_window").get_to(r.count_in_window);
}

}  // namespace hecke::dimension

namespace hecke::certify {

inline void to_json(nlohmann::json& j, const IntervalBound& b) {
  j = {{"w", b.w},
       {"lower", b.lower},
       {"upper", b.upper},
       {"epsilon_used", b.epsilon_used},
       {"delta_prior", b.delta_prior}};
}

inline void from_json(const nlohmann::json& j, IntervalBound& b) {
  j.at("w").get_to(b.w);
  j.at("lower").get_to(b.lower);
  j.at("upper").get_to(b.upper);
  j.at("epsilon_used").get_to(b.epsilon_used);
  j.at("delta_prior").get_to(b.delta_prior);
}

}  // namespace hecke::certify
