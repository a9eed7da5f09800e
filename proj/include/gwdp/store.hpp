#pragma once

#include <gwdp/surface.hpp>

#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace gwdp {

struct StoreKey {
    std::string surface;  // "P2", "Bl3", "P1xP1"
    int genus = 0;
    ClassVec cls;         // normalized unless the engine runs in verification mode

    auto operator<=>(const StoreKey&) const = default;
};

// Shared memo table from (surface, genus, class) to exact integer values,
// persistable as a plain-text cache.
//
// Concurrency contract: value-checked idempotent inserts behind a mutex.
// Concurrent computations of the same key must produce identical values;
// duplicate work is permitted, conflicting values are a hard error.
class InvariantStore {
  public:
    std::optional<BigInt> find(const StoreKey& key) const;
    // Inserting an existing key requires the identical value, otherwise
    // throws EngineError (signals nondeterminism or a corrupt cache).
    void insertChecked(const StoreKey& key, const BigInt& value, const std::string& provenance);
    std::optional<std::string> provenance(const StoreKey& key) const;

    std::size_t size() const;
    bool dirty() const;
    void clearDirty();

    // Text format, one record per line after the header:
    //   GWDP 1
    //   g=<0|1>;surface=<id>;class=<canonical expr>;value=<decimal integer>
    // Classes are normalized on output, records sorted by (surface, genus,
    // class). Loading rejects version mismatches and value conflicts.
    void save(std::ostream& out) const;
    void load(std::istream& in);
    void saveFile(const std::string& path) const;
    // Missing files are not an error when mustExist is false.
    void loadFile(const std::string& path, bool mustExist = true);

  private:
    struct Entry {
        BigInt value;
        std::string provenance;
    };
    mutable std::mutex mutex_;
    std::map<StoreKey, Entry> entries_;
    bool dirty_ = false;
};

}  // namespace gwdp
