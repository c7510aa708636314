#pragma once

#include <filesystem>
#include <iosfwd>

#include "igw/field.hpp"
#include "igw/params.hpp"
#include "igw/state.hpp"

namespace igw {

/// Flat binary field file: 32-byte header (magic "SWF1", u32 nx, u32 nz,
/// f64 Lx, f64 Lz, 4 reserved bytes), then nx*nz little-endian f64 samples,
/// row-major over (x, z).
void write_field(const std::filesystem::path& path, const ScalarField& field);
ScalarField read_field(const std::filesystem::path& path);

void write_field(std::ostream& os, const ScalarField& field);
ScalarField read_field(std::istream& is);

/// Plain-text CSV export for inspection: header row "x,z,value".
void write_field_csv(const std::filesystem::path& path, const ScalarField& field);

/// Checkpoint file: header (magic "SWCK", u32 version, f64 t, f, N, g),
/// then four SWF1 blocks in order v, rho, psi, zeta.
void write_checkpoint(const std::filesystem::path& path, const FlowState& state,
                      const PhysicalParams& params);
std::pair<FlowState, PhysicalParams> read_checkpoint(const std::filesystem::path& path);

}  // namespace igw
