#pragma once

#include "mexp/fpcore.hpp"
#include "mexp/multiplicity.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mexp::cli {

/// Raised when a request exceeds the desk-scale limits (CLI exit code 2).
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kMaxCells = 1'000'000;

enum class AtlasMode { SliceM3, SliceSum };
enum class AtlasCell { Delta, LowDegree, Zero };
enum class AtlasFormat { Ascii, Csv, Json, Svg };
enum class Engine { Fast, Oracle };

struct AtlasSpec {
    Prime p{2};
    AtlasMode mode = AtlasMode::SliceM3;
    /// m for SliceM3, |mu| for SliceSum.
    std::uint64_t level = 0;
    std::uint64_t max1 = 0;
    std::uint64_t max2 = 0;
    AtlasCell cell = AtlasCell::Delta;
    AtlasFormat format = AtlasFormat::Ascii;
    bool mark_centers = true;
    Engine engine = Engine::Fast;
    unsigned workers = 1;
};

/// Rows are mu1 = 0..max1, columns mu2 = 0..max2.
struct AtlasGrid {
    std::vector<std::vector<std::optional<std::uint64_t>>> cells;
    std::vector<std::vector<bool>> centers;
};

/// The point of cell (mu1, mu2), or nullopt when it falls outside the lattice.
std::optional<Multiplicity> atlas_point(const AtlasSpec& spec, std::uint64_t mu1, std::uint64_t mu2);

/// Throws GuardError when the grid exceeds kMaxCells.
AtlasGrid compute_atlas(const AtlasSpec& spec);
std::string render_atlas(const AtlasSpec& spec, const AtlasGrid& grid);

}  // namespace mexp::cli
