#include "core/baseline.hpp"

#include <fstream>

#include "json.hpp"

namespace palsieve {

baseline_store baseline_store::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("baseline: cannot open " + path);
    nlohmann::json j;
    in >> j;
    baseline_store store;
    for (auto& [id, val] : j.at("entries").items()) {
        baseline_entry e;
        e.constant = val.at("constant").get<double>();
        e.grid_hash = val.at("grid_hash").get<std::string>();
        e.epsilon = val.value("epsilon", 0.0);
        e.note = val.value("note", "");
        store.entries[id] = e;
    }
    return store;
}

std::string baseline_store::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    auto& ent = j["entries"];
    for (auto& [id, e] : entries) {
        nlohmann::json v = {{"constant", e.constant}, {"grid_hash", e.grid_hash}};
        if (e.epsilon != 0.0) v["epsilon"] = e.epsilon;
        if (!e.note.empty()) v["note"] = e.note;
        ent[id] = v;
    }
    return j.dump(2) + "\n";
}

void baseline_store::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("baseline: cannot write " + path);
    out << to_json();
    if (!out) throw std::runtime_error("baseline: write failed for " + path);
}

const baseline_entry& baseline_store::require(const std::string& id,
                                              const std::string& grid_hash) const {
    auto it = entries.find(id);
    if (it == entries.end())
        throw std::runtime_error("baseline: no entry for check '" + id +
                                 "'; regenerate the baseline file first");
    if (it->second.grid_hash != grid_hash)
        throw std::runtime_error("baseline: grid mismatch for check '" + id +
                                 "' (recorded " + it->second.grid_hash + ", current " + grid_hash + ")");
    return it->second;
}

}  // namespace palsieve
