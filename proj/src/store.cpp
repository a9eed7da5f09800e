#include <gwdp/store.hpp>

#include <gwdp/classexpr.hpp>

#include <fstream>
#include <sstream>

namespace gwdp {

std::optional<BigInt> InvariantStore::find(const StoreKey& key) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second.value;
}

void InvariantStore::insertChecked(const StoreKey& key, const BigInt& value,
                                   const std::string& provenance) {
    std::lock_guard lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, Entry{value, provenance});
    if (!inserted && it->second.value != value) {
        const Surface s = Surface::fromName(key.surface);
        throw EngineError("conflicting values for g=" + std::to_string(key.genus) + " " +
                          formatClass(s, key.cls) + " on " + key.surface + ": " +
                          it->second.value.str() + " vs " + value.str());
    }
    if (inserted) dirty_ = true;
}

std::optional<std::string> InvariantStore::provenance(const StoreKey& key) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second.provenance;
}

std::size_t InvariantStore::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

bool InvariantStore::dirty() const {
    std::lock_guard lock(mutex_);
    return dirty_;
}

void InvariantStore::clearDirty() {
    std::lock_guard lock(mutex_);
    dirty_ = false;
}

void InvariantStore::save(std::ostream& out) const {
    // Re-normalize keys so that verification-mode stores still produce files
    // in canonical form; orbit mates must carry equal values.
    std::map<StoreKey, BigInt> canonical;
    {
        std::lock_guard lock(mutex_);
        for (const auto& [key, entry] : entries_) {
            const Surface s = Surface::fromName(key.surface);
            StoreKey norm{key.surface, key.genus, s.normalize(key.cls)};
            auto [it, inserted] = canonical.try_emplace(norm, entry.value);
            if (!inserted && it->second != entry.value)
                throw EngineError("store holds conflicting values for permuted classes of " +
                                  formatClass(s, norm.cls) + " on " + key.surface);
        }
    }
    out << "GWDP 1\n";
    for (const auto& [key, value] : canonical) {
        const Surface s = Surface::fromName(key.surface);
        out << "g=" << key.genus << ";surface=" << key.surface
            << ";class=" << formatClass(s, key.cls) << ";value=" << value.str() << "\n";
    }
}

namespace {

std::string expectField(const std::string& record, const std::string& name, std::size_t& cursor,
                        char terminator) {
    const std::string prefix = name + "=";
    if (record.compare(cursor, prefix.size(), prefix) != 0)
        throw EngineError("malformed cache record '" + record + "' (expected " + name + "=...)");
    cursor += prefix.size();
    std::size_t end = terminator == '\0' ? record.size() : record.find(terminator, cursor);
    if (end == std::string::npos)
        throw EngineError("malformed cache record '" + record + "'");
    std::string value = record.substr(cursor, end - cursor);
    cursor = terminator == '\0' ? end : end + 1;
    return value;
}

}  // namespace

void InvariantStore::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "GWDP 1")
        throw EngineError("cache version mismatch: expected header 'GWDP 1', got '" + line + "'");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t cursor = 0;
        const std::string genusText = expectField(line, "g", cursor, ';');
        const std::string surfaceName = expectField(line, "surface", cursor, ';');
        const std::string classText = expectField(line, "class", cursor, ';');
        const std::string valueText = expectField(line, "value", cursor, '\0');
        if (genusText != "0" && genusText != "1")
            throw EngineError("cache record with unsupported genus '" + genusText + "'");
        const Surface surface = Surface::fromName(surfaceName);
        ClassVec cls;
        try {
            cls = surface.normalize(parseClass(classText, surface));
        } catch (const DomainError& e) {
            throw EngineError("cache record with bad class '" + classText + "': " + e.what());
        }
        BigInt value;
        try {
            value = BigInt(valueText);
        } catch (const std::exception&) {
            throw EngineError("cache record with bad value '" + valueText + "'");
        }
        insertChecked({surfaceName, genusText == "0" ? 0 : 1, cls}, value, "cache");
    }
}

void InvariantStore::saveFile(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write cache file '" + path + "'");
    save(out);
    if (!out) throw DomainError("error while writing cache file '" + path + "'");
}

void InvariantStore::loadFile(const std::string& path, bool mustExist) {
    std::ifstream in(path);
    if (!in) {
        if (mustExist) throw DomainError("cannot read cache file '" + path + "'");
        return;
    }
    load(in);
}

}  // namespace gwdp
