#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "zrule/solitons.hpp"
#include "zrule/triangle.hpp"

namespace zrule {

using Rgb = std::array<std::uint8_t, 3>;

// colors[e] paints exponent e; exponents past the end use the last entry.
// `absent` paints cells outside the stored region and the background, and
// never appears in `colors`.
struct Palette {
  std::vector<Rgb> colors;
  Rgb absent{0, 0, 0};

  [[nodiscard]] Rgb color_for(std::optional<std::uint16_t> exponent) const;
};

// 0 white, 1 light gray, then an 8-step ramp from yellow to dark violet.
Palette default_palette();

struct Image {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> rgb;  // row-major, 3 bytes per pixel
};

// One zoom x zoom block per cell; row j is shifted right by
// floor((j - 1) * zoom / 2) pixels so children sit under their parents.
// Size: (width * zoom + floor((width - 1) / 2)) x (depth * zoom).
Image render_tomography(const Tomography& t, const Palette& palette, std::size_t zoom = 1);

// Soliton cells painted over their tomography window; other cells fade to
// the palette's exponent-0 color.
Image render_soliton(const Tomography& t, const SolitonReport& s, const Palette& palette,
                     std::size_t zoom = 1);

// Binary PPM (P6, maxval 255).
std::vector<std::uint8_t> ppm_bytes(const Image& img);

// Binary PGM (P5): exponent clamped to 254, absent 255.
std::vector<std::uint8_t> pgm_bytes(const Tomography& t);

// Throws std::runtime_error when the path cannot be written.
void write_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

}  // namespace zrule
