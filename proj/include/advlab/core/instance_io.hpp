#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "advlab/core/bit_string.hpp"
#include "advlab/core/packing.hpp"
#include "advlab/core/request_sequence.hpp"
#include "advlab/core/schedule.hpp"

namespace advlab {

// {"kind": "bin"|"sched", "machines": m, "entries": ["3/10", ...]}
struct Instance {
    RequestSequence requests;
    std::optional<std::size_t> machines;  // scheduling only
};

nlohmann::json to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& doc);

Instance load_instance(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& doc);
nlohmann::json load_json(const std::string& path);

// {"width": W, "hex": "..."}
nlohmann::json to_json(const BitString& bits);
BitString bit_string_from_json(const nlohmann::json& doc);

// Request indices are written 1-based.
nlohmann::json to_json(const Packing& packing);
nlohmann::json to_json(const Schedule& schedule);

}  // namespace advlab
