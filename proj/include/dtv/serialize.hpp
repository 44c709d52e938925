#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dtv/fock.hpp"
#include "dtv/partition.hpp"
#include "dtv/pyramid.hpp"
#include "dtv/qseries.hpp"
#include "dtv/rpc.hpp"

namespace dtv {

using json = nlohmann::ordered_json;

// q0,qa,qb,qc for Z2xZ2; q0..q{n-1} for Zn
std::vector<std::string> variable_names(Group g, int n = 4);

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const Series& s, const std::vector<std::string>& names);
Series series_from_json(const json& j);
// header row of variable names then "coef"; one row per monomial
std::string to_csv(const Series& s, const std::vector<std::string>& names);

json to_json(const PyramidPartition& p);
PyramidPartition pyramid_from_json(const json& j);

json to_json(const RestrictedConfig& c);

const char* frame_name(Frame f);
Frame parse_frame(const std::string& s);

}  // namespace dtv
