#include "spdcfilm/materials.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "spdcfilm/errors.hpp"

namespace spdcfilm {

const MaterialTable& MaterialTable::builtin() {
  static const MaterialTable table = [] {
    MaterialTable t;
    t.add("GaAs", {{500e-9, 1000e-9}, {{17.63, 3.83}, {12.06, 0.0}}});
    t.add("SiO2", {{500e-9, 1000e-9}, {{2.14, 0.0}, {2.10, 0.0}}});
    t.add("air", {{500e-9}, {{1.0, 0.0}}});
    t.add("vacuum", {{500e-9}, {{1.0, 0.0}}});
    return t;
  }();
  return table;
}

DispersionTable MaterialTable::parse_dispersion_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot open dispersion file: " + path);

  DispersionTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double wl, re;
    if (!(ss >> wl)) continue;  // blank or comment-only line
    if (!(ss >> re))
      throw LookupError(path + ":" + std::to_string(lineno) +
                        ": expected at least two columns");
    double im = 0.0;
    ss >> im;
    if (!table.wavelength_m.empty() && wl <= table.wavelength_m.back())
      throw LookupError(path + ":" + std::to_string(lineno) +
                        ": wavelengths must be strictly increasing");
    table.wavelength_m.push_back(wl);
    table.epsilon.emplace_back(re, im);
  }
  if (table.empty()) throw LookupError(path + ": no data rows");
  return table;
}

void MaterialTable::add(const std::string& name, DispersionTable table) {
  if (table.empty() || table.wavelength_m.size() != table.epsilon.size())
    throw LookupError("material '" + name + "': malformed dispersion table");
  tables_[name] = std::move(table);
}

void MaterialTable::load_dispersion_file(const std::string& name,
                                         const std::string& path) {
  add(name, parse_dispersion_file(path));
}

bool MaterialTable::has(const std::string& name) const {
  return tables_.count(name) != 0;
}

MaterialSample MaterialTable::lookup(const std::string& name,
                                     double wavelength_m) const {
  const auto it = tables_.find(name);
  if (it == tables_.end()) throw LookupError("unknown material: " + name);
  const auto& t = it->second;
  const auto& w = t.wavelength_m;

  if (w.size() == 1) return {Medium(t.epsilon.front()), false};  // constant material
  if (wavelength_m <= w.front())
    return {Medium(t.epsilon.front()), wavelength_m < w.front()};
  if (wavelength_m >= w.back())
    return {Medium(t.epsilon.back()), wavelength_m > w.back()};

  const auto hi = std::upper_bound(w.begin(), w.end(), wavelength_m) - w.begin();
  const auto lo = hi - 1;
  const double f = (wavelength_m - w[lo]) / (w[hi] - w[lo]);
  return {Medium(t.epsilon[lo] + f * (t.epsilon[hi] - t.epsilon[lo])), false};
}

MaterialSample material_lookup(const std::string& name, double wavelength_m) {
  return MaterialTable::builtin().lookup(name, wavelength_m);
}

}  // namespace spdcfilm
