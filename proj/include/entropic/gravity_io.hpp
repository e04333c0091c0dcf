#pragma once

// Source file formats.
//
// JSON descriptor:
//   {"grid": {"dims": [nx, ny, nz], "spacing": s, "origin": [x, y, z]},
//    "primitives": [
//      {"type": "point", "position": [x, y, z], "mass": m},
//      {"type": "ball",  "center": [x, y, z], "radius": r, "density": rho},
//      {"type": "box",   "lo": [x, y, z], "hi": [x, y, z], "density": rho}]}
//
// Raw lattice: a JSON header
//   {"format": "raw-lattice", "dims": [nx, ny, nz], "spacing": s,
//    "origin": [x, y, z], "encoding": "float64-le", "data_file": "name.bin"}
// next to a binary file of nx*ny*nz little-endian IEEE-754 doubles, x fastest.
// data_file is resolved relative to the header's directory.

#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "entropic/gravity.hpp"

namespace entropic::gravity {

namespace detail {

using nlohmann::json;

inline Vec3 vec3_from(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) throw InvalidArgument(what + ": expected an array of 3 numbers");
  Vec3 v;
  for (int a = 0; a < 3; ++a) {
    if (!j[a].is_number()) throw InvalidArgument(what + ": expected an array of 3 numbers");
    v(a) = j[a].get<double>();
  }
  return v;
}

inline double number_from(const json& j, const char* key, const std::string& what) {
  if (!j.contains(key) || !j.at(key).is_number()) throw InvalidArgument(what + ": missing number '" + key + "'");
  return j.at(key).get<double>();
}

inline Dims dims_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw InvalidArgument("dims: expected an array of 3 integers");
  Dims d{};
  for (int a = 0; a < 3; ++a) {
    if (!j[a].is_number_integer()) throw InvalidArgument("dims: expected an array of 3 integers");
    d[a] = j[a].get<long>();
  }
  return d;
}

}  // namespace detail

inline SourceDistribution source_from_descriptor(const nlohmann::json& j) {
  using detail::json;
  if (!j.is_object() || !j.contains("grid")) throw InvalidArgument("source descriptor: missing 'grid'");
  const json& g = j.at("grid");
  const Dims dims = detail::dims_from(g.value("dims", json()));
  const double spacing = detail::number_from(g, "spacing", "grid");
  const Vec3 origin = detail::vec3_from(g.value("origin", json()), "grid.origin");

  std::vector<Primitive> prims;
  for (const json& p : j.value("primitives", json::array())) {
    const std::string type = p.value("type", "");
    if (type == "point") {
      prims.emplace_back(PointMass{detail::vec3_from(p.value("position", json()), "point.position"),
                                   detail::number_from(p, "mass", "point")});
    } else if (type == "ball") {
      prims.emplace_back(UniformBall{detail::vec3_from(p.value("center", json()), "ball.center"),
                                     detail::number_from(p, "radius", "ball"),
                                     detail::number_from(p, "density", "ball")});
    } else if (type == "box") {
      prims.emplace_back(UniformBox{detail::vec3_from(p.value("lo", json()), "box.lo"),
                                    detail::vec3_from(p.value("hi", json()), "box.hi"),
                                    detail::number_from(p, "density", "box")});
    } else {
      throw InvalidArgument("source descriptor: unknown primitive type '" + type + "'");
    }
  }
  return rasterize(dims, spacing, origin, prims);
}

inline SourceDistribution read_raw_lattice(const nlohmann::json& header, const std::filesystem::path& base_dir) {
  if (header.value("encoding", "float64-le") != "float64-le")
    throw InvalidArgument("raw lattice: only float64-le encoding is supported");
  const Dims dims = detail::dims_from(header.value("dims", nlohmann::json()));
  const double spacing = detail::number_from(header, "spacing", "raw lattice");
  const Vec3 origin = detail::vec3_from(header.value("origin", nlohmann::json()), "raw lattice origin");
  const std::string name = header.value("data_file", "");
  if (name.empty()) throw InvalidArgument("raw lattice: missing 'data_file'");
  for (long d : dims) detail::require(d >= 1, "raw lattice: dims must be >= 1");

  const std::size_t n = static_cast<std::size_t>(dims[0] * dims[1] * dims[2]);
  std::ifstream in(base_dir / name, std::ios::binary);
  if (!in) throw InvalidArgument("raw lattice: cannot open " + (base_dir / name).string());
  std::vector<double> trace(n);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned char bytes[8];
    if (!in.read(reinterpret_cast<char*>(bytes), 8)) throw InvalidArgument("raw lattice: data file too short");
    std::uint64_t v = 0;
    for (int b = 7; b >= 0; --b) v = (v << 8) | bytes[b];
    trace[i] = std::bit_cast<double>(v);
  }
  if (in.peek() != std::ifstream::traits_type::eof()) throw InvalidArgument("raw lattice: data file too long");
  return SourceDistribution(dims, spacing, origin, std::move(trace));
}

// Writes header + data; data_file is stored relative to the header.
inline void write_raw_lattice(const SourceDistribution& source, const std::filesystem::path& header_path,
                              const std::string& data_file) {
  nlohmann::json header = {{"format", "raw-lattice"},
                           {"dims", {source.dims()[0], source.dims()[1], source.dims()[2]}},
                           {"spacing", source.spacing()},
                           {"origin", {source.origin()(0), source.origin()(1), source.origin()(2)}},
                           {"encoding", "float64-le"},
                           {"data_file", data_file}};
  std::ofstream(header_path) << header.dump(2) << '\n';
  std::ofstream out(header_path.parent_path() / data_file, std::ios::binary);
  for (double v : source.trace()) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    unsigned char bytes[8];
    for (int b = 0; b < 8; ++b) bytes[b] = static_cast<unsigned char>((bits >> (8 * b)) & 0xff);
    out.write(reinterpret_cast<const char*>(bytes), 8);
  }
  if (!out) throw InvalidArgument("raw lattice: write failed");
}

inline SourceDistribution source_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  if (j.is_object() && j.value("format", "") == "raw-lattice") return read_raw_lattice(j, base_dir);
  return source_from_descriptor(j);
}

inline SourceDistribution load_source(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open source file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("source file " + path.string() + ": " + e.what());
  }
  return source_from_json(j, path.parent_path());
}

}  // namespace entropic::gravity
