#include "zrule/render.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <string>

namespace zrule {

Rgb Palette::color_for(std::optional<std::uint16_t> exponent) const {
  if (!exponent || colors.empty()) return absent;
  return colors[std::min<std::size_t>(*exponent, colors.size() - 1)];
}

Palette default_palette() {
  Palette p;
  p.colors = {
      {255, 255, 255}, {200, 200, 200},  // 0, 1
      {255, 221, 0},   {255, 153, 0},   {235, 64, 52},  {196, 0, 98},
      {130, 20, 160},  {60, 60, 200},   {0, 130, 120},  {40, 10, 80},
  };
  p.absent = {0, 0, 0};
  return p;
}

namespace {

Image blank(const Tomography& t, const Palette& palette, std::size_t zoom) {
  if (zoom == 0) throw std::invalid_argument("render: zoom must be >= 1");
  Image img;
  img.width = t.width() * zoom + (t.width() - 1) / 2;
  img.height = t.depth() * zoom;
  img.rgb.resize(img.width * img.height * 3);
  for (std::size_t i = 0; i < img.width * img.height; ++i) {
    std::copy(palette.absent.begin(), palette.absent.end(), img.rgb.begin() + 3 * i);
  }
  return img;
}

void paint(Image& img, std::size_t j, std::size_t local, std::size_t zoom, const Rgb& c) {
  const std::size_t x0 = (j - 1) * zoom / 2 + local * zoom;
  const std::size_t y0 = (j - 1) * zoom;
  for (std::size_t dy = 0; dy < zoom; ++dy) {
    for (std::size_t dx = 0; dx < zoom; ++dx) {
      const std::size_t at = ((y0 + dy) * img.width + x0 + dx) * 3;
      std::copy(c.begin(), c.end(), img.rgb.begin() + static_cast<std::ptrdiff_t>(at));
    }
  }
}

}  // namespace

Image render_tomography(const Tomography& t, const Palette& palette, std::size_t zoom) {
  Image img = blank(t, palette, zoom);
  for (std::size_t j = 1; j <= t.depth(); ++j) {
    const auto row = t.row(j);
    for (std::size_t k = 0; k < row.size(); ++k) paint(img, j, k, zoom, palette.color_for(row[k]));
  }
  return img;
}

Image render_soliton(const Tomography& t, const SolitonReport& s, const Palette& palette,
                     std::size_t zoom) {
  Image img = blank(t, palette, zoom);
  const Rgb faded = palette.color_for(std::uint16_t{0});
  for (std::size_t j = 1; j <= t.depth(); ++j) {
    for (std::size_t k = 0; k < t.row_length(j); ++k) paint(img, j, k, zoom, faded);
  }
  for (const auto& [j, k] : s.cells) {
    if (j > t.depth() || k < t.window_offset()) continue;
    const std::size_t local = k - t.window_offset();
    if (local >= t.row_length(j)) continue;
    paint(img, j, local, zoom, palette.color_for(t.row(j)[local]));
  }
  return img;
}

std::vector<std::uint8_t> ppm_bytes(const Image& img) {
  const std::string header =
      "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.rgb.begin(), img.rgb.end());
  return out;
}

std::vector<std::uint8_t> pgm_bytes(const Tomography& t) {
  const std::string header =
      "P5\n" + std::to_string(t.width()) + " " + std::to_string(t.depth()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (std::size_t j = 1; j <= t.depth(); ++j) {
    for (std::size_t i = 0; i < t.width(); ++i) {
      const auto v = t.at(j, t.window_offset() + i);
      out.push_back(v ? static_cast<std::uint8_t>(std::min<std::uint16_t>(*v, 254)) : 255);
    }
  }
  return out;
}

void write_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace zrule
