#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "smale/assembly.hpp"
#include "smale/gradient.hpp"
#include "smale/obstruction.hpp"
#include "smale/pipeline.hpp"

namespace smale {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view certificate_schema = "smale-certificate/1";

// An order spec document, optionally with externally chosen cycles:
//   {"elements": [...], "relations": [[greater, smaller], ...],
//    "cycles": {owner: [[left, mediator, right], ...]}}
struct OrderDocument {
  FiniteOrder order;
  std::optional<CycleAssignment> cycles;
};

// Throws Parse on malformed documents, plus the FiniteOrder load errors.
OrderDocument parse_order_document(std::string_view text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

using NamedTransition = std::vector<std::string>;  // {left, mediator, right}
using NamedCycles = std::vector<std::pair<std::string, std::vector<NamedTransition>>>;

Json order_document_json(const OrderSpec& spec, const NamedCycles& cycles = {});

// Pretty-printed with a trailing newline.
std::string dump(const Json& value);

Json order_report_json(const FiniteOrder& order);
Json connectivity_json(const FiniteOrder& order, const ConnectivityReport& report);
Json violations_json(const FiniteOrder& order, const ViolationReport& report);
Json plug_plan_json(const FiniteOrder& order, const PlugPlan& plan);
Json gradient_json(const FiniteOrder& order, const GradientVerdict& verdict);
Json refusal_json(const FiniteOrder& order, const Refusal& refusal);

Json certificate_json(const RealizationCertificate& certificate);
// Throws Parse on a malformed certificate document.
RealizationCertificate certificate_from_json(const Json& document);

}  // namespace smale
