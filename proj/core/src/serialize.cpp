#include "unref/serialize.hpp"

#include "json.hpp"

namespace unref {

using nlohmann::json;

std::string parts_to_json(const std::vector<Part>& parts)
{
    return json(parts).dump();
}

std::string to_json(const Partition& p)
{
    return parts_to_json(p.vec());
}

std::string to_json(const DeltaRecord& d)
{
    nlohmann::ordered_json j;
    j["removed"] = d.removed;
    j["added"] = d.added;
    return j.dump();
}

namespace {

json parse(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::parse_error, e.what());
    }
}

std::vector<Part> int_array(const json& j, const char* what)
{
    if (!j.is_array())
        throw Error(Errc::parse_error, std::string(what) + ": expected a JSON array");
    std::vector<Part> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw Error(Errc::parse_error, std::string(what) + ": expected integers");
        out.push_back(v.get<Part>());
    }
    return out;
}

} // namespace

Partition partition_from_json(std::string_view text)
{
    return make_partition(int_array(parse(text), "partition"));
}

DeltaRecord delta_from_json(std::string_view text)
{
    const json j = parse(text);
    if (!j.is_object() || !j.contains("removed") || !j.contains("added"))
        throw Error(Errc::parse_error, "delta: expected {\"removed\":[...],\"added\":[...]}");
    return DeltaRecord{int_array(j["removed"], "removed"), int_array(j["added"], "added")};
}

} // namespace unref
