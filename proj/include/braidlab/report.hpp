#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "braidlab/certify.hpp"
#include "braidlab/partial_cat.hpp"

namespace braidlab {

inline constexpr const char* kReportSchema = "braidlab-report/1";

// One certified factorization poset, in the shared report shape.
struct CertificationRecord {
  std::string diagram;
  PosBraidElement b;
  WordVariant variant = WordVariant::Full;
  HomotopyCertificate cert;
  int64_t elapsed_ms = 0;
};

// Reduced Betti numbers as an array starting at degree -1; empty when the
// homology stage never ran.
nlohmann::json betti_json(const Betti& b);

nlohmann::json certification_json(const BraidContext& bc, const CertificationRecord& rec);
nlohmann::json audit_json(const PartialCategory& c, const AxiomAudit& a);
nlohmann::json fiber_json(const BraidContext& bc, const PartialCategory& c, const FiberReport& r);
nlohmann::json pi0_json(const Pi0Report& r);

// Stamps the schema version onto a payload object.
nlohmann::json report_envelope(nlohmann::json payload);

std::string to_dot(const PartialCategory& c, const SpineFiber& fib);

}  // namespace braidlab
