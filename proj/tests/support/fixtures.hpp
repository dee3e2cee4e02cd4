#pragma once

// Deterministic synthetic datasets with exactly seeded defects.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "odq/dataset.hpp"

namespace odq::fixtures {

/// splitmix64; identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::uint64_t state_;
};

/// Exactly k distinct flagged rows out of n, never touching `avoid`.
std::vector<bool> pick_rows(Rng& rng, std::size_t n, std::size_t k, const std::vector<bool>& avoid = {});

inline constexpr std::size_t kRegisterRows = 396952;
inline constexpr std::size_t kGisRows = 245;
inline constexpr std::size_t kCommunicationRows = 39490;
inline constexpr std::size_t kTopicRows = 65000;

struct RegisterSeeds {
  std::size_t name_nulls = 10;
  std::size_t type_text_nulls = 1403;
  std::size_t registered_nulls = 94;
  std::size_t address_nulls = 366;
  std::size_t address_id_nulls = 4523;
  std::size_t address_overlap = 364;  // rows missing both
  std::size_t region_nulls = 280662;
  std::size_t city_nulls = 99049;
  std::size_t post_nulls = 20496;
  std::size_t post_short = 2;
  std::size_t atv_nulls = 4574;
  std::size_t atv_short = 947;
  std::size_t terminated_unclosed = 646;
};

/// Company register with 22 columns.
Dataset register_dataset(std::size_t rows = kRegisterRows, const RegisterSeeds& seeds = {});

/// Government information systems, 36 columns.
Dataset gis_dataset();

/// Educational licences, 9 columns, "stundas" 89% empty.
Dataset licences_dataset(std::size_t rows = 2000);

/// Communication statistics, 8 columns, 9 channel values.
Dataset communication_dataset();

/// Single "topicgroup" column: 26 values, 8 of them seen at most 3 times.
Dataset topicgroup_dataset(std::size_t rows = kTopicRows);

/// id,status,terminated,closed; `unclosed` rows terminated without closed.
Dataset termination_dataset(std::size_t rows = 1000, std::size_t unclosed = 7);

/// Columns n0,n4,n29,n30,n890 with that many empty cells in 1000 rows.
Dataset nullability_dataset();

/// Writes `ds` as CSV to `path`.
void save(const Dataset& ds, const std::filesystem::path& path);

/// Directory holding the shipped `.dq` files.
std::filesystem::path spec_dir();

std::string read_file(const std::filesystem::path& path);

}  // namespace odq::fixtures
