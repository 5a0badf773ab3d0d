#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qfe/branches.hpp"
#include "qfe/finalg.hpp"
#include "qfe/krstic.hpp"
#include "qfe/solver.hpp"

namespace qfe {

using json = nlohmann::ordered_json;

json to_json(const LatinSquare& s);
json to_json(const KrsticGraph& g);
json to_json(const BranchWord& w);  // array of "a1"/"b2" strings
json to_json(const Condition& c);
json to_json(const std::vector<Condition>& cs);
json to_json(const OpParams& p, const LatinSquare& table);
json to_json(const SolutionPair& sp);
json to_json(const Interpretation& i);
json to_json(const Counterexample& ce);

/// Reads a JSON file {order, tables:[[[...]]]}.
std::vector<LatinSquare> tables_from_file(const std::string& path);

/// Reads a JSON file {order, operations:[[[...]]]}.
Algebra algebra_from_file(const std::string& path);

/// Resolves an operation-table spec: a group spec ("Z5", "Z2xZ2", "S3"),
/// "sloop10", or "file:<path>" pointing at {order, table:[[...]]}.
LatinSquare table_from_spec(const std::string& spec);

}  // namespace qfe
