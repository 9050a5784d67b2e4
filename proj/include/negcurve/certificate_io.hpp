#ifndef NEGCURVE_CERTIFICATE_IO_HPP
#define NEGCURVE_CERTIFICATE_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "negcurve/symbolic_power.hpp"

namespace negcurve {

// Certificate document:
//   {"a": 5, "b": 6, "c": 7, "n": 12, "r": 1,
//    "monomials": [[0, 2, 0], [1, 0, 1]],
//    "coefficients": ["1/1", "-1/1"]}
// Keys in this order, two-space indentation, trailing newline.

inline std::string certificate_to_string(const NegativeCurveCertificate& cert) {
  nlohmann::ordered_json doc;
  doc["a"] = cert.triple.a();
  doc["b"] = cert.triple.b();
  doc["c"] = cert.triple.c();
  doc["n"] = cert.n;
  doc["r"] = cert.r;
  auto monos = nlohmann::ordered_json::array();
  for (const auto& m : cert.basis) monos.push_back({m.i, m.j, m.k});
  doc["monomials"] = std::move(monos);
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& q : cert.coeffs) coeffs.push_back(to_string(q));
  doc["coefficients"] = std::move(coeffs);
  return doc.dump(2) + "\n";
}

/// Throws ContractViolation on malformed documents or invalid weights.
inline NegativeCurveCertificate certificate_from_string(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ContractViolation(std::string("certificate: ") + e.what());
  }
  try {
    WeightTriple t(doc.at("a").get<std::int64_t>(), doc.at("b").get<std::int64_t>(),
                   doc.at("c").get<std::int64_t>());
    NegativeCurveCertificate cert{t, doc.at("n").get<std::int64_t>(), doc.at("r").get<std::int64_t>(), {}, {}};
    for (const auto& m : doc.at("monomials")) {
      require(m.is_array() && m.size() == 3, "certificate: monomials must be [i, j, k]");
      cert.basis.push_back({m[0].get<std::int64_t>(), m[1].get<std::int64_t>(), m[2].get<std::int64_t>()});
    }
    for (const auto& q : doc.at("coefficients")) cert.coeffs.push_back(parse_rational(q.get<std::string>()));
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ContractViolation(std::string("certificate: ") + e.what());
  }
}

inline void write_certificate(const std::string& path, const NegativeCurveCertificate& cert) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << certificate_to_string(cert);
}

inline NegativeCurveCertificate read_certificate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractViolation("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return certificate_from_string(ss.str());
}

}  // namespace negcurve

#endif  // NEGCURVE_CERTIFICATE_IO_HPP
