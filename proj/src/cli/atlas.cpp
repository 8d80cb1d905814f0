#include "mexp/cli/atlas.hpp"

#include "mexp/fastexp.hpp"
#include "mexp/oracle.hpp"
#include "mexp/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace mexp::cli {

namespace {

std::uint64_t delta_of(const Multiplicity& mu, const AtlasSpec& spec) {
    return spec.engine == Engine::Fast ? fast_exponents(mu, spec.p).delta : oracle_delta(mu, spec.p);
}

// A balanced point with Delta > 0 is a center iff every lattice neighbour
// is strictly lower.
bool is_center(const Multiplicity& mu, std::uint64_t delta, const AtlasSpec& spec) {
    if (delta == 0 || !is_balanced(mu)) return false;
    for (std::size_t i = 0; i < 3; ++i) {
        Multiplicity up = mu;
        up[i] += 1;
        if (delta_of(up, spec) >= delta) return false;
        if (mu[i] == 0) continue;
        Multiplicity down = mu;
        down[i] -= 1;
        if (delta_of(down, spec) >= delta) return false;
    }
    return true;
}

struct Cell {
    std::optional<std::uint64_t> value;
    bool center = false;
};

const char* mode_name(AtlasMode m) { return m == AtlasMode::SliceM3 ? "m3" : "sum"; }

const char* cell_name(AtlasCell c) {
    switch (c) {
        case AtlasCell::Delta: return "delta";
        case AtlasCell::LowDegree: return "low";
        case AtlasCell::Zero: return "zero";
    }
    return "?";
}

std::string cell_text(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); }

std::string render_ascii(const AtlasSpec& spec, const AtlasGrid& grid) {
    std::size_t width = 1;
    for (const auto& row : grid.cells) {
        for (const auto& v : row) width = std::max(width, cell_text(v).size());
    }
    width = std::max(width, std::to_string(spec.max2).size());
    const std::size_t label = std::max<std::size_t>(7, std::to_string(spec.max1).size());
    auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };

    std::ostringstream os;
    os << "p=" << spec.p.value() << ' ' << (spec.mode == AtlasMode::SliceM3 ? "mu3=" : "|mu|=") << spec.level
       << " cell=" << cell_name(spec.cell) << '\n';
    os << pad("mu1\\mu2", label);
    for (std::uint64_t c = 0; c <= spec.max2; ++c) os << ' ' << pad(std::to_string(c), width) << ' ';
    os << '\n';
    for (std::uint64_t r = 0; r < grid.cells.size(); ++r) {
        os << pad(std::to_string(r), label);
        for (std::uint64_t c = 0; c < grid.cells[r].size(); ++c) {
            const bool mark = grid.centers[r][c];
            os << (mark ? '[' : ' ') << pad(cell_text(grid.cells[r][c]), width) << (mark ? ']' : ' ');
        }
        os << '\n';
    }
    return os.str();
}

std::string render_csv(const AtlasSpec& spec, const AtlasGrid& grid) {
    std::ostringstream os;
    os << "mu1\\mu2";
    for (std::uint64_t c = 0; c <= spec.max2; ++c) os << ',' << c;
    os << '\n';
    for (std::uint64_t r = 0; r < grid.cells.size(); ++r) {
        os << r;
        for (const auto& v : grid.cells[r]) os << ',' << cell_text(v);
        os << '\n';
    }
    return os.str();
}

std::string render_json(const AtlasSpec& spec, const AtlasGrid& grid) {
    nlohmann::json j;
    j["p"] = spec.p.value();
    j["mode"] = mode_name(spec.mode);
    j["level"] = spec.level;
    j["cell"] = cell_name(spec.cell);
    nlohmann::json rows = nlohmann::json::array();
    nlohmann::json centers = nlohmann::json::array();
    for (std::uint64_t r = 0; r < grid.cells.size(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::uint64_t c = 0; c < grid.cells[r].size(); ++c) {
            const auto& v = grid.cells[r][c];
            row.push_back(v ? nlohmann::json(*v) : nlohmann::json(nullptr));
            if (grid.centers[r][c]) {
                const Multiplicity mu = *atlas_point(spec, r, c);
                centers.push_back({mu.mu1, mu.mu2, mu.mu3});
            }
        }
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["centers"] = std::move(centers);
    return j.dump() + "\n";
}

std::string render_svg(const AtlasSpec& spec, const AtlasGrid& grid) {
    constexpr int kCell = 12;
    constexpr int kMargin = 30;
    constexpr int kLegend = 40;
    std::uint64_t vmax = 0;
    for (const auto& row : grid.cells) {
        for (const auto& v : row) {
            if (v) vmax = std::max(vmax, *v);
        }
    }
    auto gray = [&](std::uint64_t v) {
        const int level = vmax == 0 ? 255 : static_cast<int>(255 - (255 * v) / vmax);
        return "rgb(" + std::to_string(level) + "," + std::to_string(level) + "," + std::to_string(level) + ")";
    };
    const int w = kMargin + static_cast<int>(spec.max2 + 1) * kCell + kMargin;
    const int h = kMargin + static_cast<int>(spec.max1 + 1) * kCell + kLegend;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
       << ' ' << h << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kMargin << "\" y=\"18\" font-family=\"monospace\" font-size=\"11\">p=" << spec.p.value()
       << ' ' << (spec.mode == AtlasMode::SliceM3 ? "mu3=" : "|mu|=") << spec.level << " cell=" << cell_name(spec.cell)
       << " (rows mu1, columns mu2)</text>\n";
    for (std::uint64_t r = 0; r < grid.cells.size(); ++r) {
        for (std::uint64_t c = 0; c < grid.cells[r].size(); ++c) {
            const auto& v = grid.cells[r][c];
            if (!v) continue;
            os << "<rect x=\"" << kMargin + c * kCell << "\" y=\"" << kMargin + r * kCell << "\" width=\"" << kCell
               << "\" height=\"" << kCell << "\" fill=\"" << gray(*v) << '"';
            if (grid.centers[r][c]) os << " stroke=\"red\" stroke-width=\"2\"";
            os << "/>\n";
        }
    }
    const int ly = kMargin + static_cast<int>(spec.max1 + 1) * kCell + 12;
    constexpr int kSteps = 10;
    for (int s = 0; s <= kSteps; ++s) {
        os << "<rect x=\"" << kMargin + s * kCell << "\" y=\"" << ly << "\" width=\"" << kCell << "\" height=\""
           << kCell << "\" fill=\"" << gray(vmax * s / kSteps) << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    }
    os << "<text x=\"" << kMargin << "\" y=\"" << ly + kCell + 12
       << "\" font-family=\"monospace\" font-size=\"10\">0</text>\n";
    os << "<text x=\"" << kMargin + kSteps * kCell << "\" y=\"" << ly + kCell + 12
       << "\" font-family=\"monospace\" font-size=\"10\">" << vmax << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::optional<Multiplicity> atlas_point(const AtlasSpec& spec, std::uint64_t mu1, std::uint64_t mu2) {
    if (spec.mode == AtlasMode::SliceM3) return Multiplicity{mu1, mu2, spec.level};
    if (mu1 + mu2 > spec.level) return std::nullopt;
    return Multiplicity{mu1, mu2, spec.level - mu1 - mu2};
}

AtlasGrid compute_atlas(const AtlasSpec& spec) {
    const std::uint64_t rows = spec.max1 + 1;
    const std::uint64_t cols = spec.max2 + 1;
    if (spec.max1 >= kMaxCells || spec.max2 >= kMaxCells || rows * cols > kMaxCells) {
        throw GuardError("atlas of " + std::to_string(rows) + " x " + std::to_string(cols) + " cells exceeds " +
                         std::to_string(kMaxCells));
    }
    const auto cells = parallel_map(rows * cols, spec.workers, [&](std::size_t idx) {
        Cell out;
        const auto mu = atlas_point(spec, idx / cols, idx % cols);
        if (!mu) return out;
        const std::uint64_t delta = delta_of(*mu, spec);
        switch (spec.cell) {
            case AtlasCell::Delta: out.value = delta; break;
            case AtlasCell::LowDegree: out.value = (mu->total() - delta) / 2; break;
            case AtlasCell::Zero: out.value = delta == 0 ? 1 : 0; break;
        }
        out.center = spec.mark_centers && is_center(*mu, delta, spec);
        return out;
    });
    AtlasGrid grid;
    grid.cells.assign(rows, std::vector<std::optional<std::uint64_t>>(cols));
    grid.centers.assign(rows, std::vector<bool>(cols, false));
    for (std::uint64_t i = 0; i < rows * cols; ++i) {
        grid.cells[i / cols][i % cols] = cells[i].value;
        grid.centers[i / cols][i % cols] = cells[i].center;
    }
    return grid;
}

std::string render_atlas(const AtlasSpec& spec, const AtlasGrid& grid) {
    switch (spec.format) {
        case AtlasFormat::Ascii: return render_ascii(spec, grid);
        case AtlasFormat::Csv: return render_csv(spec, grid);
        case AtlasFormat::Json: return render_json(spec, grid);
        case AtlasFormat::Svg: return render_svg(spec, grid);
    }
    return {};
}

}  // namespace mexp::cli
