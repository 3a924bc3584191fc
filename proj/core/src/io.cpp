#include "covsep/io.hpp"

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "covsep/errors.hpp"

namespace covsep {

namespace {

using nlohmann::json;

std::string dump(const json& j, int indent) {
  return indent < 0 ? j.dump() : j.dump(indent);
}

json complex_to_json(const Complex& c) {
  return json::array({c.real(), c.imag()});
}

json mat2_to_json(const Mat2& m) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (int j = 0; j < 2; ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json joint_to_json(const JointDistribution& d) {
  json j;
  j["x_values"] = d.x_values();
  j["y_values"] = d.y_values();
  j["probs"] = d.prob_rows();
  return j;
}

json observable_to_json(const Observable2& q) {
  json j;
  j["entries"] = mat2_to_json(q.entries());
  return j;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& get_field(const json& j, const char* key) {
  if (!j.is_object())
    throw ParseError("top-level JSON value must be an object");
  const auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

double get_double(const json& j, const char* context) {
  if (!j.is_number())
    throw ParseError(std::string(context) + " must be a number");
  return j.get<double>();
}

std::vector<double> get_double_array(const json& j, const char* context) {
  if (!j.is_array())
    throw ParseError(std::string(context) + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const json& el : j) out.push_back(get_double(el, context));
  return out;
}

Complex get_complex(const json& j, const char* context) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError(std::string(context) + " must be a [re, im] pair");
  return Complex(get_double(j[0], context), get_double(j[1], context));
}

Mat2 get_mat2(const json& j, const char* context) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError(std::string(context) +
                     " must be a 2x2 array of [re, im] pairs");
  Mat2 m;
  for (int i = 0; i < 2; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 2)
      throw ParseError(std::string(context) +
                       " must be a 2x2 array of [re, im] pairs");
    for (int k = 0; k < 2; ++k)
      m(i, k) = get_complex(row[static_cast<std::size_t>(k)], context);
  }
  return m;
}

}  // namespace

std::string to_json(const JointDistribution& d, int indent) {
  return dump(joint_to_json(d), indent);
}

std::string to_json(const Observable2& q, int indent) {
  return dump(observable_to_json(q), indent);
}

std::string to_json(const TwoQubitState& s, int indent) {
  json j;
  j["gamma"] = mat2_to_json(s.gamma());
  return dump(j, indent);
}

std::string to_json(const SampleSummary& s, int indent) {
  json j;
  j["count"] = s.count;
  j["seed"] = s.seed;
  j["empirical_cov"] = s.empirical_cov;
  j["empirical_probs"] = s.empirical_probs;
  return dump(j, indent);
}

std::string to_json(const SeparationReport& r, int indent) {
  json j;
  j["quantum_cov"] = r.quantum_cov;
  j["schmidt"] = json::array({r.schmidt.sigma1, r.schmidt.sigma2});
  j["separable"] = r.separable;
  j["induced_table"] = joint_to_json(r.induced_table);
  j["induced_defect"] = r.induced_defect;
  j["induced_independent"] = r.induced_independent;
  j["verdict"] = to_string(r.verdict);
  j["q"] = observable_to_json(r.q);
  j["r"] = observable_to_json(r.r);
  j["tol"] = r.tol;
  if (r.seed) j["seed"] = *r.seed;
  return dump(j, indent);
}

JointDistribution joint_distribution_from_json(const std::string& text) {
  const json j = parse_document(text);
  std::vector<double> xs = get_double_array(get_field(j, "x_values"), "x_values");
  std::vector<double> ys = get_double_array(get_field(j, "y_values"), "y_values");
  const json& jp = get_field(j, "probs");
  if (!jp.is_array())
    throw ParseError("'probs' must be an array of rows");
  std::vector<std::vector<double>> probs;
  probs.reserve(jp.size());
  for (const json& row : jp) probs.push_back(get_double_array(row, "probs"));
  return JointDistribution(std::move(xs), std::move(ys), std::move(probs));
}

Observable2 observable_from_json(const std::string& text) {
  const json j = parse_document(text);
  return Observable2(get_mat2(get_field(j, "entries"), "entries"));
}

TwoQubitState state_from_json(const std::string& text) {
  const json j = parse_document(text);
  return TwoQubitState(get_mat2(get_field(j, "gamma"), "gamma"));
}

}  // namespace covsep
