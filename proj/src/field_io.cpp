#include "igw/field_io.hpp"

#include <cstring>
#include <fstream>

namespace igw {

namespace {

constexpr char kFieldMagic[4] = {'S', 'W', 'F', '1'};
constexpr char kCheckpointMagic[4] = {'S', 'W', 'C', 'K'};
constexpr std::uint32_t kCheckpointVersion = 1;

template <typename T>
void put(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw std::runtime_error("field_io: truncated file");
    return v;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("field_io: cannot open for writing: " + path.string());
    return os;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("field_io: cannot open for reading: " + path.string());
    return is;
}

}  // namespace

void write_field(std::ostream& os, const ScalarField& field) {
    os.write(kFieldMagic, 4);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(field.grid().nx));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(field.grid().nz));
    put<double>(os, field.grid().Lx);
    put<double>(os, field.grid().Lz);
    const std::uint32_t reserved = 0;
    put<std::uint32_t>(os, reserved);  // pad header to 32 bytes
    os.write(reinterpret_cast<const char*>(field.values().data()),
             static_cast<std::streamsize>(field.size() * sizeof(double)));
    if (!os) throw std::runtime_error("field_io: write failed");
}

ScalarField read_field(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kFieldMagic, 4) != 0)
        throw std::runtime_error("field_io: bad field magic (expected SWF1)");
    const auto nx = get<std::uint32_t>(is);
    const auto nz = get<std::uint32_t>(is);
    const auto Lx = get<double>(is);
    const auto Lz = get<double>(is);
    get<std::uint32_t>(is);  // reserved
    GridSpec grid(static_cast<int>(nx), static_cast<int>(nz), Lx, Lz);
    ScalarField field(grid);
    is.read(reinterpret_cast<char*>(field.values().data()),
            static_cast<std::streamsize>(field.size() * sizeof(double)));
    if (!is) throw std::runtime_error("field_io: truncated field payload");
    return field;
}

void write_field(const std::filesystem::path& path, const ScalarField& field) {
    auto os = open_out(path);
    write_field(os, field);
}

ScalarField read_field(const std::filesystem::path& path) {
    auto is = open_in(path);
    return read_field(is);
}

void write_field_csv(const std::filesystem::path& path, const ScalarField& field) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("field_io: cannot open for writing: " + path.string());
    os << "x,z,value\n";
    char buf[96];
    const GridSpec& g = field.grid();
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.nz; ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", g.x(i), g.z(j), field(i, j));
            os << buf;
        }
}

void write_checkpoint(const std::filesystem::path& path, const FlowState& state,
                      const PhysicalParams& params) {
    auto os = open_out(path);
    os.write(kCheckpointMagic, 4);
    put<std::uint32_t>(os, kCheckpointVersion);
    put<double>(os, state.t);
    put<double>(os, params.f);
    put<double>(os, params.N);
    put<double>(os, params.g);
    write_field(os, state.v);
    write_field(os, state.rho);
    write_field(os, state.psi);
    write_field(os, state.zeta);
}

std::pair<FlowState, PhysicalParams> read_checkpoint(const std::filesystem::path& path) {
    auto is = open_in(path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kCheckpointMagic, 4) != 0)
        throw std::runtime_error("field_io: bad checkpoint magic (expected SWCK)");
    const auto version = get<std::uint32_t>(is);
    if (version != kCheckpointVersion)
        throw std::runtime_error("field_io: unsupported checkpoint version");
    const double t = get<double>(is);
    const double f = get<double>(is);
    const double N = get<double>(is);
    const double g = get<double>(is);
    PhysicalParams params(f, N, g);
    FlowState s;
    s.t = t;
    s.v = read_field(is);
    s.rho = read_field(is);
    s.psi = read_field(is);
    s.zeta = read_field(is);
    s.v.check_same_grid(s.rho);
    s.v.check_same_grid(s.psi);
    s.v.check_same_grid(s.zeta);
    return {std::move(s), params};
}

}  // namespace igw
