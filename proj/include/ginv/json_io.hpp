#pragma once

#include <string>

#include <json.hpp>

#include "ginv/geometry.hpp"
#include "ginv/lie_data.hpp"

namespace ginv {

using Json = nlohmann::ordered_json;

/// GroupSpec document:
///   {"factors": [{"family": "U"|"Sp"|"SOeven", "rank": r}, ...],
///    "ambient_weights": [[ints], ...], "multiplicity": [ints, ...],
///    "complex_weights": [[ints], ...]}            (optional)
/// multiplicity defaults to 1 per weight. When complex_weights is given the
/// ambient weights are its realification, and an explicit ambient_weights
/// list must agree with it.
Json group_spec_to_json(const GroupSpec &g);
GroupSpec group_spec_from_json(const Json &j);
GroupSpec load_group_spec(const std::string &path);

Json to_json(const geom::Vec &v);
geom::Vec vec_from_json(const Json &j);
Json to_json(const geom::Mat &m);

} // namespace ginv
