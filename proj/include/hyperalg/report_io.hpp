#ifndef HYPERALG_REPORT_IO_HPP
#define HYPERALG_REPORT_IO_HPP

#include <json.hpp>

#include "hyperalg/checks.hpp"

namespace halg {

nlohmann::json report_to_json(const BlockReport& rep);
nlohmann::json checks_to_json(const std::vector<CheckResult>& checks);

// One digraph per PIM: nodes are the eps-vectors >= eps labeled with their
// Hamming weight, edges theta -> theta + e_{s+1} labeled s.
std::string report_to_dot(const BlockReport& rep, uint32_t p);

std::string report_to_text(const BlockReport& rep);

}  // namespace halg

#endif
