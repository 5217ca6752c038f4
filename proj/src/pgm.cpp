#include "cantor/pgm.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "cantor/error.hpp"

namespace cantor {

namespace {

// next header token, skipping whitespace and '#' comments
std::string token(std::istream& in) {
  std::string out;
  char c = 0;
  while (in.get(c)) {
    if (c == '#') {
      std::string skip;
      std::getline(in, skip);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      out.push_back(c);
      break;
    }
  }
  while (in.get(c) && !std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::size_t number(std::istream& in) {
  const std::string t = token(in);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 9) {
    throw Error(ErrorCode::BadImageDims, "malformed PGM header");
  }
  return std::stoul(t);
}

}  // namespace

void write_pgm(std::ostream& out, const Mask& mask) {
  out << "P5\n" << mask.width << ' ' << mask.height << "\n255\n";
  std::vector<char> bytes(mask.bits.size());
  for (std::size_t i = 0; i < bytes.size(); ++i) bytes[i] = mask.bits[i] ? 0 : static_cast<char>(255);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void write_pgm(const std::string& path, const Mask& mask) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot open " + path + " for writing");
  write_pgm(out, mask);
}

Mask read_pgm(std::istream& in) {
  if (token(in) != "P5") throw Error(ErrorCode::BadImageDims, "not a binary PGM (P5) file");
  const std::size_t width = number(in);
  const std::size_t height = number(in);
  const std::size_t maxval = number(in);
  if (width == 0 || height == 0 || maxval == 0 || maxval > 255) {
    throw Error(ErrorCode::BadImageDims, "unsupported PGM dimensions or depth");
  }
  Mask mask(width, height);
  std::vector<unsigned char> bytes(width * height);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (static_cast<std::size_t>(in.gcount()) != bytes.size()) {
    throw Error(ErrorCode::BadImageDims, "PGM pixel data is truncated");
  }
  for (std::size_t i = 0; i < bytes.size(); ++i) mask.bits[i] = bytes[i] * 2 < maxval + 1 ? 1 : 0;
  return mask;
}

Mask read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  return read_pgm(in);
}

}  // namespace cantor
