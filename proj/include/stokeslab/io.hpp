#pragma once

#include <filesystem>
#include <string>

#include "stokeslab/grid.hpp"

namespace stokes::io {

/// Checkpoint = <basename>.json (header: nq, np, L, periods, lambda, R, t_label)
/// plus <basename>.csv (node array, one row per q-node, %.17g values).
/// Round trips are bit exact.
void save_height_field(const HeightField& hf, const std::filesystem::path& basename);
HeightField load_height_field(const std::filesystem::path& basename);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace stokes::io
