#pragma once

// Run configuration: load, validate against the embedded schema, and build
// library objects from the validated sections.

#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "entropic/cli/schema_text.hpp"
#include "entropic/cli/schema_validator.hpp"
#include "entropic/fluctuations.hpp"
#include "entropic/gravity_io.hpp"
#include "entropic/hpicture.hpp"
#include "entropic/onsager_io.hpp"
#include "entropic/spicture.hpp"
#include "entropic/symplectic.hpp"

namespace entropic::cli {

// Anything wrong with the configuration itself: unreadable, malformed,
// schema violation, inconsistent fields.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

inline const json& run_config_schema() {
  static const json schema = json::parse(kRunConfigSchema);
  return schema;
}

inline std::vector<std::string> validate_config(const json& config) {
  return SchemaValidator(run_config_schema()).validate(config);
}

struct RunConfig {
  json raw;                     // exactly as read; echoed into the run record
  std::filesystem::path base;   // directory relative file references resolve against
  std::uint64_t seed = 0;
  unsigned workers = 1;
  bool paper_mode = false;
  Constants constants{};
  std::vector<std::string> notes;

  const json& section(const char* name) const {
    static const json empty = json::object();
    return raw.contains(name) ? raw.at(name) : empty;
  }
  bool has(const char* name) const { return raw.contains(name); }
};

inline RunConfig config_from_json(json raw, std::filesystem::path base = {}) {
  if (const auto errors = validate_config(raw); !errors.empty()) {
    std::string msg = "config does not match the schema:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw ConfigError(msg);
  }
  RunConfig cfg;
  cfg.seed = raw.value("seed", std::uint64_t{0});
  cfg.workers = raw.value("workers", 1u);
  cfg.paper_mode = raw.value("paper_mode", false);
  if (raw.contains("constants")) {
    cfg.constants.hbar = raw["constants"].value("hbar", 1.0);
    cfg.constants.kB = raw["constants"].value("kB", 1.0);
  }
  cfg.raw = std::move(raw);
  cfg.base = std::move(base);
  return cfg;
}

inline RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json raw;
  try {
    in >> raw;
  } catch (const json::exception& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return config_from_json(std::move(raw), path.parent_path());
}

namespace config_detail {

inline void need(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ConfigError(where + ": '" + key + "' is required here");
}

inline gravity::Vec3 vec3(const json& j) { return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()}; }

inline std::filesystem::path resolve(const RunConfig& cfg, const std::string& file) {
  const std::filesystem::path p(file);
  return p.is_absolute() ? p : cfg.base / p;
}

}  // namespace config_detail

inline HermitianOperator hamiltonian_from(const RunConfig& cfg) {
  using config_detail::need;
  const json& h = cfg.section("hamiltonian");
  const std::string kind = h.value("kind", "two_level");
  HamiltonianSpec spec;
  if (kind == "two_level") {
    spec = TwoLevel{h.value("e0", 0.0), h.value("e1", 1.0)};
  } else if (kind == "truncated_oscillator") {
    need(h, "levels", "hamiltonian");
    spec = TruncatedOscillator{h["levels"].get<Index>(), h.value("omega", 1.0)};
  } else {
    need(h, "dim", "hamiltonian");
    spec = RandomHermitian{h["dim"].get<Index>(), h.value("seed", cfg.seed)};
  }
  return build_hamiltonian(spec, h.value("shift_nonnegative", false), cfg.constants);
}

inline StateVector initial_state_from(const RunConfig& cfg, Index dim) {
  const json& s = cfg.section("initial_state");
  const std::string kind = s.value("kind", "uniform");
  if (kind == "basis") {
    const Index k = s.value("index", Index{0});
    if (k >= dim) throw ConfigError("initial_state: index " + std::to_string(k) + " out of range for dim " + std::to_string(dim));
    return StateVector::basis(dim, k);
  }
  if (kind == "uniform") return StateVector(Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(double(dim))));
  if (kind == "random") return random_state(dim, s.value("seed", cfg.seed));
  config_detail::need(s, "re", "initial_state");
  const auto re = s["re"].get<std::vector<double>>();
  const auto im = s.value("im", std::vector<double>(re.size(), 0.0));
  if (Index(re.size()) != dim || im.size() != re.size())
    throw ConfigError("initial_state: amplitudes need " + std::to_string(dim) + " entries in re and im");
  Eigen::VectorXcd a(dim);
  for (Index k = 0; k < dim; ++k) a(k) = Complex(re[k], im[k]);
  if (a.norm() == 0.0) throw ConfigError("initial_state: amplitudes are all zero");
  return StateVector(a);
}

// epsilon given directly, or derived from the gravity strength x.
inline double epsilon_from(const json& section, const char* where) {
  if (section.contains("epsilon") && section.contains("x"))
    throw ConfigError(std::string(where) + ": give either 'epsilon' or 'x', not both");
  if (section.contains("x")) return wick_factor(section["x"].get<double>()).epsilon;
  return section.value("epsilon", 0.0);
}

inline gravity::SourceDistribution gravity_source_from(const RunConfig& cfg) {
  const json& g = cfg.section("gravity");
  if (g.contains("source") == g.contains("source_file"))
    throw ConfigError("gravity: give exactly one of 'source' and 'source_file'");
  if (g.contains("source_file")) return gravity::load_source(config_detail::resolve(cfg, g["source_file"]));
  return gravity::source_from_json(g["source"], cfg.base);
}

inline gravity::RegionSpec region_from(const json& r) {
  using config_detail::need;
  using config_detail::vec3;
  gravity::RegionSpec spec;
  spec.samples = r.value("samples", 1000L);
  const std::string kind = r["kind"];
  if (kind == "box") {
    need(r, "lo", "region");
    need(r, "hi", "region");
    spec.shape = gravity::Box{vec3(r["lo"]), vec3(r["hi"])};
  } else {
    need(r, "center", "region");
    need(r, "radius", "region");
    if (kind == "ball")
      spec.shape = gravity::Ball{vec3(r["center"]), r["radius"].get<double>()};
    else
      spec.shape = gravity::Shell{vec3(r["center"]), r["radius"].get<double>()};
  }
  return spec;
}

inline onsager::OnsagerSystem onsager_system_from(const RunConfig& cfg) {
  const json& o = cfg.section("onsager");
  if (o.contains("system_file")) {
    for (const char* k : {"N", "L", "G", "y0"})
      if (o.contains(k)) throw ConfigError(std::string("onsager: '") + k + "' conflicts with 'system_file'");
    const auto path = config_detail::resolve(cfg, o["system_file"]);
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open onsager system file " + path.string());
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ConfigError("onsager system file " + path.string() + ": " + e.what());
    }
    return onsager::system_from_json(j);
  }
  return onsager::system_from_json(o);
}

inline fluctuations::ThermoReference thermo_reference_from(const RunConfig& cfg) {
  const json& f = cfg.section("fluct");
  if (!f.contains("reference")) return fluctuations::ThermoReference::ideal_gas(1.0, 1.0, 1.0);
  const json& r = f["reference"];
  if (r["kind"] == "ideal_gas")
    return fluctuations::ThermoReference::ideal_gas(r.value("V0", 1.0), r.value("T0", 1.0), r.value("S0", 1.0),
                                                    r.value("cv", -1.0));
  for (const char* k : {"p0", "V0", "T0", "S0", "cv", "compressibility_term"}) config_detail::need(r, k, "fluct.reference");
  return fluctuations::ThermoReference(r["p0"], r["V0"], r["T0"], r["S0"], r["cv"], r["compressibility_term"]);
}

inline symplectic::SymplecticPatch patch_from(const RunConfig& cfg) {
  const json& p = cfg.section("stokes")["patch"];
  const std::string kind = p["kind"];
  if (kind == "rectangle")
    return symplectic::rectangle_patch(p.value("p_lo", 0.0), p.value("p_hi", 1.0), p.value("q_lo", 0.0), p.value("q_hi", 1.0));
  if (kind == "disk") return symplectic::disk_patch(p.value("radius", 0.5), p.value("p_center", 0.0), p.value("q_center", 0.0));
  if (kind == "two_plane") return symplectic::two_plane_patch(p.value("a", 1.0), p.value("b", 1.0));
  return symplectic::random_smooth_patch(p.value("seed", cfg.seed), p.value("index", std::uint64_t{0}), p.value("amplitude", 0.5));
}

}  // namespace entropic::cli
