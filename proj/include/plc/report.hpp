#ifndef PLC_REPORT_HPP
#define PLC_REPORT_HPP

#include "json.hpp"
#include <string>

#include "plc/projective.hpp"

namespace plc {

using Json = nlohmann::ordered_json;

/// n, or "inf".
Json ext_json(ExtNat v);

/// Field descriptor plus the defining polynomial of extensions.
std::string field_label(Field f);

/// The first `prec` coefficients as "c0 + c1*t + ...".
std::string series_str(const LazySeries& s, int prec);

/// Machine-readable reports. Timings are left out unless asked for, so output is reproducible.
Json to_json(const InvariantReport& rep, bool timings = false);
Json to_json(const PluckerReport& rep, bool timings = false);
Json relations_json(const std::vector<RelationResult>& rel);
Json branches_json(const BranchSet& bs, int prec);
Json tree_json(const TreeNode& t);

/// Human-readable summaries (not a stable format).
std::string to_text(const InvariantReport& rep);
std::string to_text(const PluckerReport& rep);

} // namespace plc

#endif
