#include "spdcfilm/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "spdcfilm/defaults.hpp"
#include "spdcfilm/errors.hpp"
#include "spdcfilm/materials.hpp"

namespace spdcfilm {

std::string to_string(ScanType t) {
  switch (t) {
    case ScanType::Rate: return "rate";
    case ScanType::PhiSymmetric: return "phi-symmetric";
    case ScanType::Thickness: return "thickness";
    case ScanType::ThetaMap: return "theta-map";
    case ScanType::Tomography: return "tomography";
    case ScanType::SchmidtMap: return "schmidt-map";
    case ScanType::WavelengthSweep: return "wavelength-sweep";
  }
  return "?";
}

std::optional<ScanType> scan_type_from_string(const std::string& s) {
  for (ScanType t : {ScanType::Rate, ScanType::PhiSymmetric, ScanType::Thickness,
                     ScanType::ThetaMap, ScanType::Tomography,
                     ScanType::SchmidtMap, ScanType::WavelengthSweep})
    if (to_string(t) == s) return t;
  return std::nullopt;
}

ConfigError::ConfigError(std::vector<std::string> errors)
    : std::runtime_error([&errors] {
        std::string msg = "configuration invalid:";
        for (const auto& e : errors) msg += "\n  - " + e;
        return msg;
      }()),
      errors_(std::move(errors)) {}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

KeyValueMap parse_config_text(const std::string& text) {
  KeyValueMap kv;
  std::istringstream in(text);
  std::string line, section;
  std::vector<std::string> errors;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        errors.push_back("line " + std::to_string(lineno) + ": malformed section header");
        continue;
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      errors.push_back("line " + std::to_string(lineno) + ": expected key = value");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      errors.push_back("line " + std::to_string(lineno) + ": empty key");
      continue;
    }
    kv[section.empty() ? key : section + "." + key] = value;
  }
  if (!errors.empty()) throw ConfigError(errors);
  return kv;
}

KeyValueMap parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot open config file: " + path});
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

namespace {

class Resolver {
 public:
  explicit Resolver(const KeyValueMap& raw) : raw_(raw) {}

  double number(const std::string& key, double fallback) {
    consumed_.insert(key);
    const auto it = raw_.find(key);
    if (it == raw_.end()) return fallback;
    try {
      std::size_t pos = 0;
      const double v = std::stod(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      errors_.push_back(key + ": not a number: '" + it->second + "'");
      return fallback;
    }
  }

  std::optional<double> optional_number(const std::string& key) {
    consumed_.insert(key);
    const auto it = raw_.find(key);
    if (it == raw_.end()) return std::nullopt;
    return number(key, 0.0);
  }

  int integer(const std::string& key, int fallback) {
    const double v = number(key, fallback);
    if (v != std::floor(v)) errors_.push_back(key + ": expected an integer");
    return static_cast<int>(v);
  }

  std::string text(const std::string& key, const std::string& fallback) {
    consumed_.insert(key);
    const auto it = raw_.find(key);
    return it == raw_.end() ? fallback : it->second;
  }

  bool present(const std::string& key) const { return raw_.count(key) != 0; }

  void error(const std::string& msg) { errors_.push_back(msg); }

  void check_unknown_keys() {
    for (const auto& [key, value] : raw_)
      if (!consumed_.count(key)) errors_.push_back("unknown key: " + key);
  }

  void finish() const {
    if (!errors_.empty()) throw ConfigError(errors_);
  }

  bool ok() const { return errors_.empty(); }

 private:
  const KeyValueMap& raw_;
  std::set<std::string> consumed_;
  std::vector<std::string> errors_;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Medium resolve_layer_role(Resolver& r, const MaterialTable& table,
                          const std::string& layer_key,
                          const std::string& material_name,
                          const std::string& role_key, double wavelength_m,
                          bool* any_error) {
  Medium m{Complex(1.0, 0.0)};
  try {
    m = table.lookup(material_name, wavelength_m).medium;
  } catch (const LookupError& e) {
    r.error(layer_key + "_material: " + e.what());
    *any_error = true;
  }
  const auto re = r.optional_number(layer_key + "_eps_" + role_key + "_re");
  const auto im = r.optional_number(layer_key + "_eps_" + role_key + "_im");
  if (re || im) {
    const Complex eps(re.value_or(m.epsilon.real()),
                      im.value_or(m.epsilon.imag()));
    if (eps.imag() < 0.0) {
      r.error(layer_key + "_eps_" + role_key + "_im: gain media not supported");
      *any_error = true;
    } else {
      m = Medium(eps);
    }
  }
  return m;
}

}  // namespace

RunConfig validate(const KeyValueMap& raw) {
  Resolver r(raw);
  RunConfig cfg;

  // [scan] type first: axis defaults depend on it
  const std::string type_str = r.text("scan.type", "rate");
  const auto type = scan_type_from_string(type_str);
  if (!type)
    r.error("scan.type: unknown scan type '" + type_str + "'");
  cfg.scan = type.value_or(ScanType::Rate);

  // [pump]
  cfg.pump.wavelength_m = r.number("pump.wavelength_m", defaults::lambda_p);
  if (!(cfg.pump.wavelength_m > 0.0)) r.error("pump.wavelength_m: must be positive");
  cfg.pump.amplitude = r.number("pump.amplitude", 1.0);
  const bool has_w = r.present("pump.spectral_width_inv_m");
  const bool has_waist = r.present("pump.beam_waist_m");
  if (has_w && has_waist)
    r.error("pump.spectral_width_inv_m and pump.beam_waist_m are mutually "
            "exclusive (w = 2/W)");
  if (has_waist) {
    const double waist = r.number("pump.beam_waist_m", 3e-6);
    if (!(waist > 0.0))
      r.error("pump.beam_waist_m: must be positive");
    else
      cfg.pump.spectral_width_invm = 2.0 / waist;
  } else {
    cfg.pump.spectral_width_invm = r.number("pump.spectral_width_inv_m", 6.6e5);
    if (!(cfg.pump.spectral_width_invm > 0.0))
      r.error("pump.spectral_width_inv_m: must be positive");
  }

  // [pair]
  cfg.degeneracy_r = r.number("pair.degeneracy_r", 1.0);
  if (!(cfg.degeneracy_r > 0.0)) r.error("pair.degeneracy_r: must be positive");
  cfg.chi0 = r.number("pair.chi0", 1.0);

  // [stack]
  const double thickness =
      r.number("stack.thickness_m", 0.01 * cfg.pump.wavelength_m);
  if (!(thickness > 0.0)) r.error("stack.thickness_m: must be positive");

  const std::string disp_mode = r.text("stack.dispersion_mode", "flat");
  if (disp_mode != "flat" && disp_mode != "table")
    r.error("stack.dispersion_mode: expected 'flat' or 'table'");

  MaterialTable table = MaterialTable::builtin();
  for (const char* layer : {"medium1", "medium2", "medium3"}) {
    const std::string file_key =
        std::string("stack.dispersion_file_") + layer;
    const std::string path = r.text(file_key, "");
    if (!path.empty()) {
      try {
        table.load_dispersion_file(std::string("custom:") + layer, path);
      } catch (const LookupError& e) {
        r.error(file_key + ": " + e.what());
      }
    }
  }

  const double lambda_p = cfg.pump.wavelength_m;
  const double lambda_s = lambda_p * (1.0 + cfg.degeneracy_r);
  const double lambda_i = lambda_s / cfg.degeneracy_r;
  // Flat mode quotes the pair constants at the degenerate wavelength and
  // holds them across sweeps; table mode tracks the actual wavelengths.
  const double wl_s = disp_mode == "table" ? lambda_s : 2.0 * lambda_p;
  const double wl_i = disp_mode == "table" ? lambda_i : 2.0 * lambda_p;

  const char* default_materials[3] = {"air", "GaAs", "SiO2"};
  std::array<std::array<Medium, 3>, 3> media{};
  bool stack_error = false;
  for (int layer = 0; layer < 3; ++layer) {
    const std::string key = "medium" + std::to_string(layer + 1);
    std::string name = r.text("stack." + key + "_material",
                              default_materials[layer]);
    if (table.has("custom:" + key)) name = "custom:" + key;
    const auto lu = static_cast<std::size_t>(layer);
    media[lu][0] = resolve_layer_role(r, table, "stack." + key, name, "pump",
                                      lambda_p, &stack_error);
    media[lu][1] = resolve_layer_role(r, table, "stack." + key, name, "signal",
                                      wl_s, &stack_error);
    media[lu][2] = resolve_layer_role(r, table, "stack." + key, name, "idler",
                                      wl_i, &stack_error);
  }
  if (!stack_error && thickness > 0.0)
    cfg.stack = LayerStack(media[0], media[1], media[2], thickness);

  // [detection]
  cfg.theta_s_deg = r.number("detection.theta_s_deg", 45.0);
  cfg.phi_s_deg = r.number("detection.phi_s_deg", 0.0);
  cfg.theta_i_deg = r.number("detection.theta_i_deg", 45.0);
  cfg.phi_i_deg = r.number("detection.phi_i_deg", 180.0);
  for (const auto& [key, v] : {std::pair<const char*, double>{
                                   "detection.theta_s_deg", cfg.theta_s_deg},
                               {"detection.theta_i_deg", cfg.theta_i_deg}})
    if (v < 0.0 || v >= 90.0) r.error(std::string(key) + ": must lie in [0, 90)");

  for (const char* who : {"s", "i"}) {
    const std::string key = std::string("detection.medium_") + who;
    const int side = r.integer(key, 1);
    if (side != 1 && side != 3)
      r.error(key + ": detection medium must be 1 or 3");
    else
      (*who == 's' ? cfg.side_s : cfg.side_i) =
          side == 1 ? DetectionSide::Medium1 : DetectionSide::Medium3;
  }
  if (cfg.side_s != cfg.side_i)
    r.error("detection.medium_s/medium_i: both photons must be detected in "
            "the same outer medium");
  for (const char* who : {"s", "i"}) {
    const std::string key = std::string("detection.polarization_") + who;
    const std::string v = r.text(key, "");
    if (v.empty()) continue;
    if (v.size() != 1 || std::string("HVDARL").find(v[0]) == std::string::npos)
      r.error(key + ": expected one of H V D A R L");
    else
      (*who == 's' ? cfg.polarization_s : cfg.polarization_i) = v[0];
  }

  // [scan] axes (defaults follow the bundled scenario's figure ranges)
  const auto axis = [&](const std::string& prefix, const std::string& unit,
                        double lo, double hi, int count) {
    ScanAxis ax;
    ax.name = prefix;
    ax.start = r.number("scan." + prefix + "_min" + unit, lo);
    ax.stop = r.number("scan." + prefix + "_max" + unit, hi);
    ax.count = r.integer("scan." + prefix + "_count", count);
    if (ax.count < 2) r.error("scan." + prefix + "_count: must be at least 2");
    if (!(ax.start < ax.stop))
      r.error("scan." + prefix + "_min/max" + unit + ": need min < max");
    return ax;
  };

  switch (cfg.scan) {
    case ScanType::Rate:
    case ScanType::Tomography:
      break;
    case ScanType::PhiSymmetric:
      cfg.axis1 = axis("theta", "_deg", 0.0, 89.5, 180);
      cfg.axis2 = axis("phi", "_deg", 0.0, 359.5, 720);
      cfg.has_axis2 = true;
      break;
    case ScanType::Thickness:
      cfg.axis1 = axis("a", "_m", 2.0 * lambda_p, 5.0 * lambda_p, 600);
      if (cfg.axis1.start <= 0.0) r.error("scan.a_min_m: must be positive");
      break;
    case ScanType::ThetaMap:
      cfg.axis1 = axis("theta_s", "_deg", 0.5, 89.5, 179);
      cfg.axis2 = axis("theta_i", "_deg", 0.5, 89.5, 179);
      cfg.has_axis2 = true;
      break;
    case ScanType::SchmidtMap:
      cfg.axis1 = axis("theta_i", "_deg", 1.0, 89.0, 89);
      cfg.axis2 = axis("phi_i", "_deg", 0.0, 359.0, 360);
      cfg.has_axis2 = true;
      break;
    case ScanType::WavelengthSweep:
      cfg.axis1 = axis("r", "", 0.8, 1.5, 15);
      if (cfg.axis1.start <= 0.0) r.error("scan.r_min: must be positive");
      break;
  }
  for (const char* ax : {"theta", "theta_s", "theta_i"}) {
    // angle axes must stay below 90 degrees
    const std::string key = std::string("scan.") + ax + "_max_deg";
    if (r.present(key) && r.number(key, 0.0) >= 90.0)
      r.error(key + ": must be below 90");
  }

  // [output] / [run]
  cfg.out_dir = r.text("output.dir", ".");
  cfg.threads = r.integer("run.threads", 0);

  r.check_unknown_keys();
  r.finish();

  // Echo of the fully resolved configuration.
  cfg.echo["scan.type"] = to_string(cfg.scan);
  cfg.echo["pump.wavelength_m"] = fmt(cfg.pump.wavelength_m);
  cfg.echo["pump.amplitude"] = fmt(cfg.pump.amplitude);
  cfg.echo["pump.spectral_width_inv_m"] = fmt(cfg.pump.spectral_width_invm);
  cfg.echo["pair.degeneracy_r"] = fmt(cfg.degeneracy_r);
  cfg.echo["pair.chi0"] = fmt(cfg.chi0);
  cfg.echo["stack.thickness_m"] = fmt(cfg.stack.thickness_a);
  cfg.echo["stack.dispersion_mode"] = disp_mode;
  const char* role_names[3] = {"pump", "signal", "idler"};
  const std::array<const std::array<Medium, 3>*, 3> layers = {
      &cfg.stack.medium1, &cfg.stack.medium2, &cfg.stack.medium3};
  for (int layer = 0; layer < 3; ++layer)
    for (int role = 0; role < 3; ++role) {
      const std::string base = "stack.medium" + std::to_string(layer + 1) +
                               "_eps_" + role_names[role];
      const Complex eps =
          (*layers[static_cast<std::size_t>(layer)])[static_cast<std::size_t>(role)]
              .epsilon;
      cfg.echo[base + "_re"] = fmt(eps.real());
      cfg.echo[base + "_im"] = fmt(eps.imag());
    }
  cfg.echo["detection.theta_s_deg"] = fmt(cfg.theta_s_deg);
  cfg.echo["detection.phi_s_deg"] = fmt(cfg.phi_s_deg);
  cfg.echo["detection.theta_i_deg"] = fmt(cfg.theta_i_deg);
  cfg.echo["detection.phi_i_deg"] = fmt(cfg.phi_i_deg);
  cfg.echo["detection.medium_s"] = cfg.side_s == DetectionSide::Medium1 ? "1" : "3";
  cfg.echo["detection.medium_i"] = cfg.side_i == DetectionSide::Medium1 ? "1" : "3";
  if (cfg.polarization_s) cfg.echo["detection.polarization_s"] = *cfg.polarization_s;
  if (cfg.polarization_i) cfg.echo["detection.polarization_i"] = *cfg.polarization_i;
  if (cfg.scan != ScanType::Rate && cfg.scan != ScanType::Tomography) {
    cfg.echo["scan.axis1_name"] = cfg.axis1.name;
    cfg.echo["scan.axis1_min"] = fmt(cfg.axis1.start);
    cfg.echo["scan.axis1_max"] = fmt(cfg.axis1.stop);
    cfg.echo["scan.axis1_count"] = std::to_string(cfg.axis1.count);
    if (cfg.has_axis2) {
      cfg.echo["scan.axis2_name"] = cfg.axis2.name;
      cfg.echo["scan.axis2_min"] = fmt(cfg.axis2.start);
      cfg.echo["scan.axis2_max"] = fmt(cfg.axis2.stop);
      cfg.echo["scan.axis2_count"] = std::to_string(cfg.axis2.count);
    }
  }
  cfg.echo["run.threads"] = std::to_string(cfg.threads);
  return cfg;
}

JointSetting make_setting(const RunConfig& cfg) {
  DetectorSetting sig, idl;
  sig.theta = deg2rad(cfg.theta_s_deg);
  sig.phi = deg2rad(cfg.phi_s_deg);
  sig.side = cfg.side_s;
  idl.theta = deg2rad(cfg.theta_i_deg);
  idl.phi = deg2rad(cfg.phi_i_deg);
  idl.side = cfg.side_i;
  return make_joint_setting(cfg.stack, cfg.pump,
                            Chi2Tensor::zinc_blende(cfg.chi0), cfg.degeneracy_r,
                            sig, idl);
}

}  // namespace spdcfilm
