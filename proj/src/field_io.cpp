#include "rsur/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "rsur/errors.hpp"

namespace rsur::io {
namespace {

constexpr const char* kLayout = "interleaved_complex_xyz";

static_assert(sizeof(double) == 8);

std::uint64_t to_little(std::uint64_t v) {
    if constexpr (std::endian::native == std::endian::big) return __builtin_bswap64(v);
    return v;
}

}  // namespace

void write_field(std::ostream& out, const FieldGrid& field) {
    nlohmann::json header;
    header["format"] = "rsf";
    header["version"] = 1;
    header["space"] = std::string(to_string(field.space()));
    const auto& g = field.grid();
    for (std::size_t d = 0; d < 3; ++d) {
        header["counts"].push_back(g.axis(d).count);
        header["spacings"].push_back(g.axis(d).spacing);
        header["origins"].push_back(g.axis(d).origin);
    }
    header["layout"] = kLayout;
    header["byte_order"] = "little";
    header["dtype"] = "float64";
    out << header.dump() << '\n';

    std::vector<std::uint64_t> raw;
    raw.reserve(field.values().size() * 2);
    for (const cplx& v : field.values()) {
        raw.push_back(to_little(std::bit_cast<std::uint64_t>(v.real())));
        raw.push_back(to_little(std::bit_cast<std::uint64_t>(v.imag())));
    }
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size() * 8));
    if (!out) throw FormatError("failed writing field payload");
}

void write_field(const std::filesystem::path& path, const FieldGrid& field) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open '" + path.string() + "' for writing");
    write_field(out, field);
}

FieldGrid read_field(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("missing header line");
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("header is not valid JSON: ") + e.what());
    }
    try {
        if (header.at("format") != "rsf") throw FormatError("not an rsf file");
        if (header.at("version") != 1) throw FormatError("unsupported rsf version");
        if (header.value("layout", kLayout) != std::string(kLayout)) throw FormatError("unsupported value layout");
        if (header.value("byte_order", "little") != "little") throw FormatError("unsupported byte order");
        if (header.value("dtype", "float64") != "float64") throw FormatError("unsupported dtype");
        const Space space = space_from_string(header.at("space").get<std::string>());
        const auto& counts = header.at("counts");
        const auto& spacings = header.at("spacings");
        const auto& origins = header.at("origins");
        if (counts.size() != 3 || spacings.size() != 3 || origins.size() != 3) {
            throw FormatError("counts, spacings and origins need three entries");
        }
        std::array<Axis, 3> axes{};
        for (std::size_t d = 0; d < 3; ++d) {
            axes[d] = Axis{counts[d].get<std::size_t>(), spacings[d].get<double>(), origins[d].get<double>()};
        }
        Grid3 grid;
        try {
            grid = Grid3(axes);
        } catch (const ShapeError& e) {
            throw FormatError(std::string("invalid grid: ") + e.what());
        }

        std::vector<std::uint64_t> raw(grid.size() * 6);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size() * 8));
        if (in.gcount() != static_cast<std::streamsize>(raw.size() * 8)) throw FormatError("truncated payload");
        std::vector<cplx> values(grid.size() * 3);
        for (std::size_t i = 0; i < values.size(); ++i) {
            values[i] = cplx(std::bit_cast<double>(to_little(raw[2 * i])), std::bit_cast<double>(to_little(raw[2 * i + 1])));
        }
        return FieldGrid(grid, space, std::move(values));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed header: ") + e.what());
    }
}

FieldGrid read_field(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path.string() + "'");
    return read_field(in);
}

}  // namespace rsur::io
