#include "advlab/core/instance_io.hpp"

#include <fstream>

#include "advlab/core/errors.hpp"

namespace advlab {

using nlohmann::json;

json to_json(const Instance& instance) {
    json doc;
    doc["kind"] = std::string(to_string(instance.requests.kind()));
    if (instance.machines) doc["machines"] = *instance.machines;
    json entries = json::array();
    for (const auto& v : instance.requests.entries()) entries.push_back(format_rational(v));
    doc["entries"] = std::move(entries);
    return doc;
}

Instance instance_from_json(const json& doc) {
    try {
        const std::string kind = doc.at("kind").get<std::string>();
        RequestKind rk;
        if (kind == "bin")
            rk = RequestKind::bin_items;
        else if (kind == "sched")
            rk = RequestKind::jobs;
        else
            throw InvalidInput("unknown instance kind '" + kind + "'");
        std::vector<Rational> entries;
        for (const auto& e : doc.at("entries")) entries.push_back(parse_rational(e.get<std::string>()));
        Instance out{RequestSequence(rk, std::move(entries)), std::nullopt};
        if (rk == RequestKind::jobs) {
            const auto m = doc.at("machines").get<std::int64_t>();
            if (m < 1) throw InvalidInput("machines must be positive");
            out.machines = static_cast<std::size_t>(m);
        }
        return out;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed instance: ") + e.what());
    }
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

Instance load_instance(const std::string& path) {
    return instance_from_json(load_json(path));
}

void save_json(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << doc.dump(2) << '\n';
}

json to_json(const BitString& bits) {
    return json{{"width", bits.width()}, {"hex", bits.to_hex()}};
}

BitString bit_string_from_json(const json& doc) {
    try {
        return BitString::from_hex(doc.at("hex").get<std::string>(), doc.at("width").get<std::size_t>());
    } catch (const json::exception& e) {
        throw MalformedAdvice(std::string("malformed bit string: ") + e.what());
    }
}

namespace {

json one_based(const std::vector<std::size_t>& indices) {
    json out = json::array();
    for (auto i : indices) out.push_back(i + 1);
    return out;
}

}  // namespace

json to_json(const Packing& packing) {
    json bins = json::array();
    for (const auto& bin : packing.bins())
        bins.push_back(json{{"items", one_based(bin.items)}, {"load", format_rational(bin.load)}});
    return json{{"bins", std::move(bins)}, {"count", packing.size()}};
}

json to_json(const Schedule& schedule) {
    json machines = json::array();
    for (std::size_t i = 0; i < schedule.machine_count(); ++i)
        machines.push_back(
            json{{"jobs", one_based(schedule.jobs_on(i))}, {"load", format_rational(schedule.load(i))}});
    return json{{"machines", std::move(machines)}};
}

}  // namespace advlab
