#ifndef GPF_JSON_IO_HPP
#define GPF_JSON_IO_HPP

#include "gpf/factorisation.hpp"
#include "gpf/gp_graph.hpp"
#include "gpf/list_colouring.hpp"
#include "gpf/triple_graph.hpp"

#include <nlohmann/json.hpp>

namespace gpf {

// Big integers serialise as decimal strings: the counts outgrow 64-bit JSON
// numbers and interop would silently round.

nlohmann::ordered_json signed_count_json(int k, const SignedCount& counts);

nlohmann::ordered_json factorisation_json(const GPGraph& g, const OneFactorisation& f);

// Wall time only when include_timing; the deterministic CLI output leaves
// it out and reports timing on stderr instead.
nlohmann::ordered_json report_json(const ChoosabilityReport& report, bool include_timing);

}  // namespace gpf

#endif
