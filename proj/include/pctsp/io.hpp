#ifndef PCTSP_IO_HPP
#define PCTSP_IO_HPP

#include <string>

#include <json.hpp>

#include "pctsp/decompose.hpp"
#include "pctsp/solver.hpp"

namespace pctsp {

using Json = nlohmann::json;

/// Rationals travel as "p/q" strings; numbers are accepted on input and read exactly from
/// their shortest decimal form.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"n", "root", "coords"?, "costs"?, "penalties"}; costs may be omitted when coords are given,
/// in which case grid-rounded Euclidean distances are used.
PctspInstance instance_from_json(const Json& j);
Json instance_to_json(const PctspInstance& inst);

/// Parses and validates an instance file; throws InstanceError (parse errors included).
PctspInstance load_instance(const std::string& path);
void save_instance(const PctspInstance& inst, const std::string& path);

Json tour_to_json(const Tour& tour);
/// {"order": [...]}
Tour tour_from_json(const PctspInstance& inst, const Json& j);

/// {"x": [[i, j, "p/q"], ...] (positive entries only), "y": ["p/q", ...], "objective": "p/q"}
Json solution_to_json(const FractionalSolution& sol);
FractionalSolution solution_from_json(const PctspInstance& inst, const Json& j);

Json family_to_json(const WeightedTreeFamily& family);

/// {"best": {...}, "lp": "p/q", "ratio": float, "delta": "p/q", "candidates": [...]}
Json report_to_json(const SolveReport& report);

}  // namespace pctsp

#endif  // PCTSP_IO_HPP
