#include "frogsteg/media_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>

#include "frogsteg/errors.hpp"

namespace frogsteg::media {

namespace {

constexpr std::uint8_t kPngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
constexpr const char* kConvertHint = "; run `frogsteg convert` to produce an 8-bit RGB PNG";

bool isPng(std::span<const std::uint8_t> b) {
  return b.size() >= 8 && std::memcmp(b.data(), kPngSignature, 8) == 0;
}
bool isBmp(std::span<const std::uint8_t> b) { return b.size() >= 2 && b[0] == 'B' && b[1] == 'M'; }
bool isJpeg(std::span<const std::uint8_t> b) {
  return b.size() >= 3 && b[0] == 0xFF && b[1] == 0xD8 && b[2] == 0xFF;
}

std::string lowerExtension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext;
}

// ---- PNG -----------------------------------------------------------------
//
// libpng reports errors by longjmp. All C++ objects touched inside the
// protected region live in PngState, which outlives the jump.

struct PngState {
  std::span<const std::uint8_t> input;
  std::size_t position = 0;
  std::vector<std::uint8_t> output;
  std::vector<std::uint8_t> pixels;
  std::vector<png_bytep> rows;
  std::string error;
  std::string unsupported;
  png_uint_32 width = 0;
  png_uint_32 height = 0;
};

void pngError(png_structp png, png_const_charp message) {
  auto* state = static_cast<PngState*>(png_get_error_ptr(png));
  state->error = message ? message : "unknown libpng error";
  png_longjmp(png, 1);
}

void pngWarning(png_structp, png_const_charp) {}

void pngRead(png_structp png, png_bytep out, png_size_t length) {
  auto* state = static_cast<PngState*>(png_get_io_ptr(png));
  if (state->position + length > state->input.size()) png_error(png, "truncated PNG data");
  std::memcpy(out, state->input.data() + state->position, length);
  state->position += length;
}

void pngWrite(png_structp png, png_bytep data, png_size_t length) {
  auto* state = static_cast<PngState*>(png_get_io_ptr(png));
  state->output.insert(state->output.end(), data, data + length);
}

void pngFlush(png_structp) {}

std::string describePngLayout(int colorType, int bitDepth, bool hasTrns) {
  if (bitDepth != 8) return std::to_string(bitDepth) + "-bit PNG";
  if (colorType == PNG_COLOR_TYPE_PALETTE) return "palette PNG";
  if ((colorType & PNG_COLOR_MASK_COLOR) == 0) return "grayscale PNG";
  if ((colorType & PNG_COLOR_MASK_ALPHA) != 0 || hasTrns) return "PNG with alpha";
  return {};
}

// Returns false on libpng error (state.error set). state.unsupported is set
// when a strict read meets a non-RGB8 layout.
bool runPngDecode(PngState& state, bool lenient) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &state, pngError, pngWarning);
  if (!png) {
    state.error = "libpng initialization failed";
    return false;
  }
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    state.error = "libpng initialization failed";
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    return false;
  }
  png_set_read_fn(png, &state, pngRead);
  png_read_info(png, info);

  const int colorType = png_get_color_type(png, info);
  const int bitDepth = png_get_bit_depth(png, info);
  const bool hasTrns = png_get_valid(png, info, PNG_INFO_tRNS) != 0;
  if (!lenient) {
    state.unsupported = describePngLayout(colorType, bitDepth, hasTrns);
    if (!state.unsupported.empty()) {
      png_destroy_read_struct(&png, &info, nullptr);
      return true;
    }
  } else {
    png_set_expand(png);
    png_set_strip_16(png);
    png_set_strip_alpha(png);
    png_set_gray_to_rgb(png);
  }
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  state.width = png_get_image_width(png, info);
  state.height = png_get_image_height(png, info);
  const std::size_t rowBytes = png_get_rowbytes(png, info);
  if (rowBytes != static_cast<std::size_t>(state.width) * 3) png_error(png, "unexpected PNG row layout");
  state.pixels.resize(rowBytes * state.height);
  state.rows.resize(state.height);
  for (png_uint_32 y = 0; y < state.height; ++y) state.rows[y] = state.pixels.data() + y * rowBytes;
  png_read_image(png, state.rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return true;
}

bool runPngEncode(PngState& state, const ImageView& image) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &state, pngError, pngWarning);
  if (!png) {
    state.error = "libpng initialization failed";
    return false;
  }
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    state.error = "libpng initialization failed";
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    return false;
  }
  png_set_write_fn(png, &state, pngWrite, pngFlush);
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width), static_cast<png_uint_32>(image.height), 8,
               PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (png_uint_32 y = 0; y < state.rows.size(); ++y) png_write_row(png, state.rows[y]);
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return true;
}

RasterImage decodePng(std::span<const std::uint8_t> bytes, bool lenient) {
  PngState state;
  state.input = bytes;
  if (!runPngDecode(state, lenient)) throw IoError("PNG decode error: " + state.error);
  if (!state.unsupported.empty()) {
    throw ValidationError("unsupported cover: " + state.unsupported + std::string(kConvertHint));
  }
  return RasterImage(static_cast<int>(state.width), static_cast<int>(state.height), std::move(state.pixels));
}

// ---- BMP -----------------------------------------------------------------

std::uint32_t le32(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) | (static_cast<std::uint32_t>(b[at + 1]) << 8) |
         (static_cast<std::uint32_t>(b[at + 2]) << 16) | (static_cast<std::uint32_t>(b[at + 3]) << 24);
}
std::uint16_t le16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}
void putLe32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}
void putLe16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

RasterImage decodeBmp(std::span<const std::uint8_t> b, bool lenient) {
  if (b.size() < 54) throw IoError("BMP decode error: truncated header");
  const std::uint32_t dataOffset = le32(b, 10);
  const std::uint32_t dibSize = le32(b, 14);
  if (dibSize < 40) throw ValidationError("unsupported BMP header version" + std::string(kConvertHint));
  const auto width = static_cast<std::int32_t>(le32(b, 18));
  const auto rawHeight = static_cast<std::int32_t>(le32(b, 22));
  const std::uint16_t planes = le16(b, 26);
  const std::uint16_t bpp = le16(b, 28);
  const std::uint32_t compression = le32(b, 30);
  if (planes != 1 || width <= 0 || rawHeight == 0) throw IoError("BMP decode error: invalid dimensions");
  const bool bitsOk = bpp == 24 || (lenient && bpp == 32);
  if (!bitsOk || compression != 0) {
    throw ValidationError("unsupported cover: " + std::to_string(bpp) + "-bit BMP (compression " +
                          std::to_string(compression) + "), need uncompressed 24-bit" + std::string(kConvertHint));
  }
  const bool topDown = rawHeight < 0;
  const std::int64_t height = topDown ? -static_cast<std::int64_t>(rawHeight) : rawHeight;
  const std::size_t bytesPerPixel = bpp / 8;
  const std::size_t stride = (static_cast<std::size_t>(width) * bytesPerPixel + 3) & ~std::size_t{3};
  const std::size_t needed = static_cast<std::size_t>(height) * stride;
  if (dataOffset > b.size() || b.size() - dataOffset < needed) throw IoError("BMP decode error: truncated pixel data");

  RasterImage image(width, static_cast<int>(height));
  for (std::int64_t row = 0; row < height; ++row) {
    const std::int64_t y = topDown ? row : height - 1 - row;
    const std::uint8_t* src = b.data() + dataOffset + static_cast<std::size_t>(row) * stride;
    for (std::int32_t x = 0; x < width; ++x) {
      const std::uint8_t* px = src + static_cast<std::size_t>(x) * bytesPerPixel;
      image.at(x, static_cast<int>(y), 0) = px[2];
      image.at(x, static_cast<int>(y), 1) = px[1];
      image.at(x, static_cast<int>(y), 2) = px[0];
    }
  }
  return image;
}

RasterImage decodeAny(std::span<const std::uint8_t> bytes, bool lenient) {
  if (isPng(bytes)) return decodePng(bytes, lenient);
  if (isBmp(bytes)) return decodeBmp(bytes, lenient);
  if (isJpeg(bytes)) throw ValidationError("JPEG is lossy; lossless required (PNG or 24-bit BMP)");
  throw IoError("unrecognized image format (expected PNG or BMP)");
}

void rejectLossyExtension(const std::filesystem::path& path) {
  const auto ext = lowerExtension(path);
  if (ext == ".jpg" || ext == ".jpeg" || ext == ".webp") {
    throw ValidationError(path.string() + ": lossy format; lossless required (PNG or 24-bit BMP)");
  }
}

}  // namespace

std::vector<std::uint8_t> readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading " + path.string());
  return bytes;
}

void writeFile(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("error writing " + path.string());
}

RasterImage decodeImage(std::span<const std::uint8_t> bytes) { return decodeAny(bytes, false); }

RasterImage decodeImageLenient(std::span<const std::uint8_t> bytes) { return decodeAny(bytes, true); }

std::vector<std::uint8_t> encodePng(const ImageView& image) {
  image.validate();
  if (image.width <= 0 || image.height <= 0) throw ValidationError("cannot encode an empty image");
  PngState state;
  const std::size_t rowBytes = static_cast<std::size_t>(image.width) * 3;
  state.rows.resize(static_cast<std::size_t>(image.height));
  for (std::size_t y = 0; y < state.rows.size(); ++y) {
    state.rows[y] = const_cast<png_bytep>(image.samples.data() + y * rowBytes);
  }
  if (!runPngEncode(state, image)) throw IoError("PNG encode error: " + state.error);
  return std::move(state.output);
}

std::vector<std::uint8_t> encodeBmp(const ImageView& image) {
  image.validate();
  if (image.width <= 0 || image.height <= 0) throw ValidationError("cannot encode an empty image");
  const std::size_t stride = (static_cast<std::size_t>(image.width) * 3 + 3) & ~std::size_t{3};
  const std::size_t pixelBytes = stride * static_cast<std::size_t>(image.height);
  std::vector<std::uint8_t> out;
  out.reserve(54 + pixelBytes);
  out.push_back('B');
  out.push_back('M');
  putLe32(out, static_cast<std::uint32_t>(54 + pixelBytes));
  putLe32(out, 0);
  putLe32(out, 54);
  putLe32(out, 40);
  putLe32(out, static_cast<std::uint32_t>(image.width));
  putLe32(out, static_cast<std::uint32_t>(image.height));
  putLe16(out, 1);
  putLe16(out, 24);
  putLe32(out, 0);
  putLe32(out, static_cast<std::uint32_t>(pixelBytes));
  putLe32(out, 2835);
  putLe32(out, 2835);
  putLe32(out, 0);
  putLe32(out, 0);
  for (int y = image.height - 1; y >= 0; --y) {
    const std::uint8_t* row = image.samples.data() + static_cast<std::size_t>(y) * image.width * 3;
    for (int x = 0; x < image.width; ++x) {
      out.push_back(row[x * 3 + 2]);
      out.push_back(row[x * 3 + 1]);
      out.push_back(row[x * 3 + 0]);
    }
    for (std::size_t pad = static_cast<std::size_t>(image.width) * 3; pad < stride; ++pad) out.push_back(0);
  }
  return out;
}

RasterImage loadCover(const std::filesystem::path& path) {
  rejectLossyExtension(path);
  const auto bytes = readFile(path);
  try {
    return decodeImage(bytes);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

RasterImage loadForConversion(const std::filesystem::path& path) {
  rejectLossyExtension(path);
  const auto bytes = readFile(path);
  return decodeImageLenient(bytes);
}

void saveImage(const ImageView& image, const std::filesystem::path& path) {
  const auto ext = lowerExtension(path);
  if (ext == ".png") {
    writeFile(path, encodePng(image));
  } else if (ext == ".bmp") {
    writeFile(path, encodeBmp(image));
  } else {
    throw ValidationError(path.string() + ": output must be .png or .bmp");
  }
}

SampleLocation locateSample(const ImageView& image, std::uint64_t sampleIndex) {
  if (sampleIndex >= image.sampleCount()) throw ValidationError("sample index outside image");
  SampleLocation loc;
  loc.pixel = sampleIndex / 3;
  loc.channel = static_cast<int>(sampleIndex % 3);
  loc.x = static_cast<int>(loc.pixel % static_cast<std::uint64_t>(image.width));
  loc.y = static_cast<int>(loc.pixel / static_cast<std::uint64_t>(image.width));
  return loc;
}

std::uint64_t flattenIndex(const ImageView& image, int x, int y, int channel) {
  if (x < 0 || y < 0 || x >= image.width || y >= image.height || channel < 0 || channel > 2) {
    throw ValidationError("pixel coordinate outside image");
  }
  return (static_cast<std::uint64_t>(y) * static_cast<std::uint64_t>(image.width) + static_cast<std::uint64_t>(x)) * 3 +
         static_cast<std::uint64_t>(channel);
}

bool hasWavMagic(std::span<const std::uint8_t> b) {
  return b.size() >= 12 && std::memcmp(b.data(), "RIFF", 4) == 0 && std::memcmp(b.data() + 8, "WAVE", 4) == 0;
}

AudioPayload loadAudio(const std::filesystem::path& path) {
  AudioPayload payload;
  payload.rawBytes = readFile(path);
  if (lowerExtension(path) == ".wav") {
    if (hasWavMagic(payload.rawBytes)) {
      payload.declaredFormat = AudioFormat::Wav;
    } else {
      payload.warning = path.string() + ": .wav extension but no RIFF/WAVE header; embedding as opaque bytes";
    }
  }
  return payload;
}

void saveAudio(const AudioPayload& payload, const std::filesystem::path& path) {
  writeFile(path, payload.rawBytes);
}

}  // namespace frogsteg::media
