#include "dedekind/serialize.hpp"

#include <chrono>
#include <ctime>
#include <stdexcept>

namespace dedekind::serialize {

namespace {

json entries(const std::vector<RootEntry>& list) {
  json out = json::array();
  for (const auto& e : list) {
    out.push_back({{"m", e.m}, {"multiplicity", e.multiplicity}, {"cap_reached", e.cap_reached}});
  }
  return out;
}

json complex_pair(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

Int parse_exponent(const std::string& key) {
  if (key.empty() || key.size() > 18 ||
      key.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("invpoly: exponent key '" + key + "' is not a decimal integer");
  }
  return std::stoll(key);
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

json to_json(const InvPoly& p) {
  json terms = json::object();
  for (const auto& [e, c] : p.terms()) {
    terms[std::to_string(e)] = c;
  }
  return {{"b", p.b()}, {"degree", p.degree()}, {"phi", p.phi()}, {"terms", terms}};
}

InvPoly invpoly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("b") || !j.contains("terms") ||
      !j.at("b").is_number_integer() || !j.at("terms").is_object()) {
    throw std::invalid_argument("invpoly: expected an object with integer 'b' and object 'terms'");
  }
  SparseTerms terms;
  for (const auto& [key, value] : j.at("terms").items()) {
    if (!value.is_number_integer()) {
      throw std::invalid_argument("invpoly: coefficient for '" + key + "' is not an integer");
    }
    terms[parse_exponent(key)] = value.get<Int>();
  }
  InvPoly p(j.at("b").get<Int>(), std::move(terms));
  if (j.contains("degree") && j.at("degree") != p.degree()) {
    throw std::invalid_argument("invpoly: 'degree' disagrees with the terms");
  }
  return p;
}

json to_json(const RootReport& r) {
  return {{"b", r.b},
          {"m_max", r.m_max},
          {"multiplicity_cap", r.multiplicity_cap},
          {"found", entries(r.found)},
          {"explained", entries(r.explained)},
          {"unexplained", entries(r.unexplained)},
          {"residual_degree", r.residual_degree}};
}

json to_json(const conjectures::Verdict& v) {
  json ces = json::array();
  for (const auto& ce : v.counterexamples) {
    json w = json::object();
    for (const auto& [k, val] : ce.witness) {
      w[k] = val;
    }
    ces.push_back({{"b", ce.b}, {"witness", w}});
  }
  return {{"statement", v.statement},
          {"range", {v.b_min, v.b_max}},
          {"cases_checked", v.cases_checked},
          {"status", conjectures::to_string(v.status())},
          {"counterexamples", ces},
          {"notes", v.notes}};
}

json to_json(const conjectures::Conj21Prediction& p) {
  json divs = json::array();
  for (const auto& d : p.divisors) {
    divs.push_back({{"k", d.k},
                    {"c", d.c},
                    {"case", conjectures::to_string(d.tag)},
                    {"predicted_2k", d.predicted_2k},
                    {"predicted_6k", d.predicted_6k}});
  }
  json orders = json::object();
  for (const auto& [m, predicted] : p.predicted_orders()) {
    orders[std::to_string(m)] = predicted;
  }
  return {{"b", p.b}, {"divisors", divs}, {"predicted_orders", orders}};
}

json to_json(const std::vector<conjectures::Table1Row>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"b", r.b}, {"orders", r.orders}});
  }
  return out;
}

json to_json(const kloosterman::Prop25Report& r) {
  json out = {{"b", r.b},
              {"k", r.k},
              {"c", r.c},
              {"case", kloosterman::to_string(r.identity)}};
  if (r.identity == kloosterman::Prop25Case::not_applicable) {
    return out;
  }
  out["lhs"] = complex_pair(r.lhs);
  out["rhs"] = complex_pair(r.rhs);
  out["abs_error"] = r.abs_error;
  out["tolerance"] = r.tolerance;
  out["passed"] = r.passed;
  if (r.identity == kloosterman::Prop25Case::c_2_mod_4_k_even) {
    out["corrected_rhs"] = complex_pair(r.corrected_rhs);
    out["corrected_error"] = r.corrected_error;
    out["corrected_passed"] = r.corrected_passed;
  }
  if (r.exact_checked) {
    out["exact_passed"] = r.exact_passed;
    if (r.identity == kloosterman::Prop25Case::c_2_mod_4_k_even) {
      out["exact_corrected_passed"] = r.exact_corrected_passed;
    }
  }
  return out;
}

json to_json(const numroots::ComplexRootSet& r) {
  json roots = json::array();
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    roots.push_back({{"re", r.roots[i].real()},
                     {"im", r.roots[i].imag()},
                     {"converged", static_cast<bool>(r.converged[i])},
                     {"residual", r.residuals[i]}});
  }
  return {{"b", r.b},
          {"best_effort", r.best_effort},
          {"iterations", r.iterations},
          {"residual_scale", r.residual_scale},
          {"roots", roots}};
}

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::ok:
      return "ok";
    case ReportStatus::counterexamples:
      return "counterexamples";
    case ReportStatus::error:
      break;
  }
  return "error";
}

json make_report(const std::string& command, ReportStatus status, json payload) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"command", command},
          {"timestamp", utc_timestamp()},
          {"status", to_string(status)},
          {"payload", std::move(payload)}};
}

}  // namespace dedekind::serialize
