#ifndef GQE_JSON_IO_HPP
#define GQE_JSON_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "gqe/asymptotics.hpp"
#include "gqe/existence.hpp"

namespace gqe {

using json = nlohmann::json;

inline constexpr const char *kReportVersion = "gqe-report/1";
/// Significant digits of k_exact; enough for certify to re-verify at e^{|k|}.
inline constexpr int kExactDigits = 40;
inline constexpr const char *kFutakiConvention =
    "-(1/2) * int_{-1}^{1} P(t) dt / alpha0";

namespace io {

inline Error field_error(const std::string &field, const std::string &what) {
  return Error(ErrorKind::InvalidInput, field + ": " + what);
}

/// Rationals come as strings ("-0.75", "4/5") or JSON integers. JSON floats
/// are rejected because their binary value is not the intended decimal.
inline Rational rational_field(const json &j, const std::string &field) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error &e) {
      throw field_error(field, e.what());
    }
  }
  if (j.is_number_integer())
    return Rational(j.get<long long>());
  throw field_error(field, "expected a rational or decimal string");
}

inline int int_field(const json &obj, const char *key, const std::string &field,
                     std::optional<int> fallback = std::nullopt) {
  if (!obj.contains(key)) {
    if (fallback)
      return *fallback;
    throw field_error(field, "missing");
  }
  const json &v = obj.at(key);
  if (!v.is_number_integer())
    throw field_error(field, "expected an integer");
  return v.get<int>();
}

inline json poly_json(const Polynomial &p) {
  json coeffs = json::array();
  for (const auto &c : p.coefficients())
    coeffs.push_back(to_string(c));
  return {{"text", to_string(p)}, {"coefficients", coeffs}};
}

inline json optional_number(const std::optional<double> &v) {
  return v ? json(*v) : json(nullptr);
}

inline json residuals_json(const BoundaryResiduals &r) {
  return {{"F_minus", r.F_minus},
          {"F_plus", r.F_plus},
          {"dF_minus", r.dF_minus},
          {"dF_plus", r.dF_plus}};
}

} // namespace io

inline AdmissibleData parse_admissible(const json &j) {
  if (!j.is_object())
    throw io::field_error("<root>", "expected a JSON object");
  AdmissibleData d;
  d.d0 = io::int_field(j, "d0", "d0", 0);
  d.dinf = io::int_field(j, "dinf", "dinf", 0);
  if (j.contains("factors")) {
    const json &fs = j.at("factors");
    if (!fs.is_array())
      throw io::field_error("factors", "expected an array");
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const std::string at = "factors[" + std::to_string(i) + "]";
      const json &f = fs[i];
      if (!f.is_object())
        throw io::field_error(at, "expected an object");
      BaseFactor bf;
      bf.d = io::int_field(f, "d", at + ".d");
      if (!f.contains("s"))
        throw io::field_error(at + ".s", "missing");
      if (!f.contains("x"))
        throw io::field_error(at + ".x", "missing");
      bf.s = io::rational_field(f.at("s"), at + ".s");
      bf.x = io::rational_field(f.at("x"), at + ".x");
      d.factors.push_back(bf);
    }
  }
  return d;
}

inline json to_json(const AdmissibleData &d) {
  json fs = json::array();
  for (const auto &f : d.factors)
    fs.push_back({{"d", f.d}, {"s", to_string(f.s)}, {"x", to_string(f.x)}});
  return {{"d0", d.d0}, {"dinf", d.dinf}, {"factors", fs}};
}

inline json to_json(const ExistenceReport &r) {
  json cands = json::array();
  for (const auto &c : r.candidates)
    cands.push_back({{"k", c.k.convert_to<double>()},
                     {"status", to_string(c.status)},
                     {"margin", io::optional_number(c.margin)},
                     {"witness", io::optional_number(c.witness)},
                     {"k_condition", c.k_condition},
                     {"boundary_residual_max", c.residuals.max()}});
  const auto &q = r.profile.source;
  json out = {
      {"version", kReportVersion},
      {"mode", to_string(r.mode.kind)},
      {"b", to_string(r.mode.affine())},
      {"verdict", to_string(r.verdict)},
      {"k", r.k ? json(r.k->convert_to<double>()) : json(nullptr)},
      {"k_exact", r.k ? json(r.k->str(kExactDigits)) : json(nullptr)},
      {"margin", io::optional_number(r.margin)},
      {"witness", io::optional_number(r.witness)},
      {"boundary_residuals", io::residuals_json(r.boundary)},
      {"root_count", r.root_count},
      {"futaki_k", to_double(r.futaki_k)},
      {"futaki_k_exact", to_string(r.futaki_k)},
      {"futaki_sign_convention", kFutakiConvention},
      {"scal_bar", to_string(q.scal_bar)},
      {"ell", to_string(q.ell)},
      {"P", io::poly_json(r.profile.P)},
      {"k_window", r.kmax},
      {"candidates", cands},
  };
  if (!r.diagnostic.empty())
    out["diagnostic"] = r.diagnostic;
  return out;
}

inline json to_json(const CertificationReport &r) {
  return {
      {"version", kReportVersion},
      {"k", r.k.convert_to<double>()},
      {"passed", r.passed()},
      {"checks",
       {{"k_condition", {{"value", r.k_condition}, {"pass", r.k_condition_ok}}},
        {"boundary",
         {{"residuals", io::residuals_json(r.boundary)}, {"pass", r.boundary_ok}}},
        {"ode_residual", {{"value", r.ode_residual}, {"pass", r.ode_ok}}},
        {"positivity",
         {{"margin", io::optional_number(r.margin)},
          {"witness", io::optional_number(r.witness)},
          {"unresolved", r.unresolved},
          {"pass", r.positivity_ok}}}}},
  };
}

inline json to_json(const LimitStructure &s, int d0, int dinf,
                    const std::optional<Rational> &b) {
  json roots = json::array();
  for (const auto &iv : s.roots)
    roots.push_back({{"lo", to_string(iv.lo)},
                     {"hi", to_string(iv.hi)},
                     {"approx", to_double(iv.midpoint())}});
  json out = {
      {"d0", d0},
      {"dinf", dinf},
      {"case", static_cast<int>(s.case_id)},
      {"b", b ? json(to_string(*b)) : json(nullptr)},
      {"limit_Pprime", io::poly_json(s.limit)},
      {"deflated", {{"one_plus_t", s.deflate_minus}, {"one_minus_t", s.deflate_plus}}},
      {"normalizer", to_string(s.normalizer)},
      {"core", io::poly_json(s.core)},
      {"root_count", s.roots.size()},
      {"roots", roots},
      {"simple", s.simple},
      {"note", "limit object; not a Kaehler class"},
  };
  if (s.generalized)
    out["generalized"] = {{"g_minus", to_string(s.generalized->g_minus)},
                          {"g_plus", to_string(s.generalized->g_plus)},
                          {"t0", to_string(s.generalized->t0)},
                          {"g_t0", to_string(s.generalized->g_t0)},
                          {"ok", s.generalized->ok()}};
  return out;
}

} // namespace gqe

#endif
