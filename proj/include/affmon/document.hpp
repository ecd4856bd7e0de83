#pragma once

// JSON wire format for monoid documents.

#include "affmon/oracle.hpp"
#include "affmon/realization.hpp"
#include "affmon/support_system.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace affmon {

struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class PayloadKind { Equations, Supports, Lattice, Plan, Builtin };

struct MonoidDocument {
  std::size_t k = 0;
  std::optional<IntVector> unit;
  PayloadKind kind = PayloadKind::Equations;
  EqSystem equations;
  std::optional<SupportSystem> supports;
  std::optional<LatticeBasis> lattice;
  PlanPtr plan;
  std::optional<FixtureEntry> fixture;
};

/// Throws DocumentError on malformed input.
MonoidDocument parse_document(const nlohmann::json& doc);
MonoidDocument parse_document_text(const std::string& text);

/// Membership in the monoid the document describes. A lattice payload means
/// L ∩ N0^k, so vectors with ∞ entries are rejected.
Predicate document_predicate(const MonoidDocument& doc);

nlohmann::json integer_json(const Integer& x);
nlohmann::json vector_json(const IntVector& v);
nlohmann::json index_set_json(const IndexSet& s);

nlohmann::json equations_json(const EqSystem& sys, const std::optional<IntVector>& unit = std::nullopt);
nlohmann::json support_system_json(const SupportSystem& ss);
nlohmann::json plan_json(const RealizationPlan& plan);

}  // namespace affmon
